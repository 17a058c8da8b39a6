//! Representations of real quadratics without real roots by `x² ± (X² + 1)y²`.
//!
//! These are the only floating-point computations in the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealError {
    #[error("inputs must be finite")]
    NotFinite,
    #[error("need a > 0, c > 0 and b^2 < ac, got a = {a}, b = {b}, c = {c}")]
    HasRealRoots { a: f64, b: f64, c: f64 },
    #[error("need v^2 < w, got v = {v}, w = {w}")]
    NotDefinite { v: f64, w: f64 },
}

/// How the `h = −1 − X²` solution was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealBranch {
    /// `b = −1`, possible only when `v = 0` and `w ≤ 1`.
    BEqualsMinusOne,
    /// `b` is a root of the quartic in `(−1, −1/2)`, found by bisection.
    Bisection,
}

/// `m ≈ u·(x² + h·y²)` with `x = x0 + x1·X` and real `y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRepresentation {
    pub x0: f64,
    pub x1: f64,
    pub y: f64,
    pub u: f64,
}

impl RealRepresentation {
    /// Coefficients `[c0, c1, c2]` of `u·(x² + sign·(X² + 1)·y²)`.
    pub fn expand(&self, sign: f64) -> [f64; 3] {
        let y2 = sign * self.y * self.y;
        [
            self.u * (self.x0 * self.x0 + y2),
            self.u * 2.0 * self.x0 * self.x1,
            self.u * (self.x1 * self.x1 + y2),
        ]
    }

    /// `‖m − u·(x² + sign·(X² + 1)y²)‖∞` for `m = m[0] + m[1]X + m[2]X²`.
    pub fn residual(&self, m: [f64; 3], sign: f64) -> f64 {
        let e = self.expand(sign);
        (0..3).map(|i| (m[i] - e[i]).abs()).fold(0.0, f64::max)
    }
}

/// Writes `aX² + 2bX + c` as `x² + y²(X² + 1)`.
pub fn represent_real_quadratic_hx2p1(a: f64, b: f64, c: f64) -> Result<RealRepresentation, RealError> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(RealError::NotFinite);
    }
    if !(a > 0.0 && c > 0.0 && b * b < a * c) {
        return Err(RealError::HasRealRoots { a, b, c });
    }
    let rep = |x0: f64, x1: f64, y: f64| RealRepresentation { x0, x1, y, u: 1.0 };
    if b == 0.0 {
        return Ok(if a >= c { rep(0.0, (a - c).sqrt(), c.sqrt()) } else { rep((c - a).sqrt(), 0.0, a.sqrt()) });
    }
    let d2 = (a + c - ((a - c).powi(2) + 4.0 * b * b).sqrt()) / 2.0;
    let d = d2.max(0.0).sqrt();
    let e = b.signum();
    Ok(rep(e * (c - d2).max(0.0).sqrt(), (a - d2).max(0.0).sqrt(), d))
}

/// `b⁴ + 2(w+1)b³ + (5w − 4v² + 1)b² + 4(w − v²)b + (w − v²)`.
pub fn quartic(v: f64, w: f64, b: f64) -> f64 {
    let t = w - v * v;
    (((b + 2.0 * (w + 1.0)) * b + (5.0 * w - 4.0 * v * v + 1.0)) * b + 4.0 * t) * b + t
}

/// Writes `X² + 2vX + w` as `u·(x² − (X² + 1)y²)`.
///
/// With `x = (1 + b)X + a` and `y = b` this is `k⁻¹·((X + a)² + 2b(X + a)X − b²)`
/// for `k = 1 + 2b`. The quartic in `b` is `−v²` at `−1` and `1/16` at `−1/2`,
/// so any `v ≠ 0` brackets a root; for `v = 0` it factors as
/// `(b + 1)²(b² + 2wb + w)`.
pub fn represent_real_quadratic_hnegx2m1(v: f64, w: f64) -> Result<(RealRepresentation, RealBranch), RealError> {
    if !(v.is_finite() && w.is_finite()) {
        return Err(RealError::NotFinite);
    }
    if v * v >= w {
        return Err(RealError::NotDefinite { v, w });
    }
    if v == 0.0 && w <= 1.0 {
        let a = (1.0 - w).sqrt();
        let rep = RealRepresentation { x0: a, x1: 0.0, y: -1.0, u: -1.0 };
        return Ok((rep, RealBranch::BEqualsMinusOne));
    }
    let f = |b: f64| {
        if v == 0.0 {
            b * b + 2.0 * w * b + w
        } else {
            quartic(v, w, b)
        }
    };
    let (mut lo, mut hi) = (-1.0f64, -0.5f64);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let b = 0.5 * (lo + hi);
    let k = 1.0 + 2.0 * b;
    let a = k * v / (1.0 + b);
    let rep = RealRepresentation { x0: a, x1: 1.0 + b, y: b, u: 1.0 / k };
    Ok((rep, RealBranch::Bisection))
}
