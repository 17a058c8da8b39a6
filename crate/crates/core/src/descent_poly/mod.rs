//! From a root `z₀` of `z² + h ≡ 0 (mod m)` over `𝔽[X]` (odd characteristic)
//! back to a proper representation `m = u(x² + hy²)`.

pub mod real;

use thiserror::Error;

use crate::continuants::continuant;
use crate::forms::{FormError, QuadraticForm, Representation};
use crate::rings::{gcd_trace, DivConvention, Element, Field, Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyDescentError {
    #[error("polynomial descent needs F_p[X] or Q[X], got {0}")]
    NotPolynomialRing(Ring),
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("m must have degree at least 1")]
    ModulusTooSmall,
    #[error("-h = {0} is a square in the coefficient field")]
    SquareH(String),
    #[error("m does not divide z0^2 + h")]
    NotARoot,
    #[error("gcd(m, h) is not a unit")]
    NotCoprime,
    #[error("m is not u(x^2 + hy^2) along this root: {0}")]
    NotRepresentable(String),
    #[error("the quotients do not follow the palindromic unit pattern: {0}")]
    PatternMismatch(String),
    #[error("the full Euclid variant needs a constant h")]
    NonConstantH,
}

impl From<RingError> for PolyDescentError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::MixedRings => PolyDescentError::MixedRings,
            other => PolyDescentError::NotRepresentable(other.to_string()),
        }
    }
}

impl From<FormError> for PolyDescentError {
    fn from(e: FormError) -> Self {
        match e {
            FormError::MixedRings => PolyDescentError::MixedRings,
            other => PolyDescentError::NotRepresentable(other.to_string()),
        }
    }
}

/// A validated descent problem for the form `x² + hy²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyDescentInput {
    h: Element,
    m: Element,
    z0: Element,
}

fn constant_is_square(c: &Element) -> bool {
    match c {
        Element::Fp(p) => c.is_zero() || p.field().is_square(&p.coeffs()[0]),
        Element::Rat(p) => c.is_zero() || p.field().is_square(&p.coeffs()[0]),
        Element::Int(_) => false,
    }
}

impl PolyDescentInput {
    /// Checks that `m | z0² + h`, that `−h` is a non-square when `h` is
    /// constant, and that `gcd(m, h)` is a unit unless `h` has degree 1 and
    /// divides `m`. `z0` is reduced modulo `m`.
    pub fn new(h: Element, m: Element, z0: Element) -> Result<Self, PolyDescentError> {
        let ring = h.ring();
        if !ring.is_polynomial() {
            return Err(PolyDescentError::NotPolynomialRing(ring));
        }
        ring.check([&m, &z0])?;
        if m.degree().unwrap_or(0) < 1 {
            return Err(PolyDescentError::ModulusTooSmall);
        }
        if h.degree().unwrap_or(0) == 0 && constant_is_square(&-&h) {
            return Err(PolyDescentError::SquareH((-&h).to_string()));
        }
        let z0 = z0.reduce_mod(&m)?;
        if !m.divides(&(&(&z0 * &z0) + &h)) {
            return Err(PolyDescentError::NotARoot);
        }
        let h_divides_m = h.degree() == Some(1) && h.divides(&m);
        if !h_divides_m && !gcd_trace(&m, &h, DivConvention::Floor)?.gcd.is_one() {
            return Err(PolyDescentError::NotCoprime);
        }
        Ok(PolyDescentInput { h, m, z0 })
    }

    pub fn h(&self) -> &Element {
        &self.h
    }

    pub fn m(&self) -> &Element {
        &self.m
    }

    pub fn z0(&self) -> &Element {
        &self.z0
    }

    pub fn form(&self) -> QuadraticForm {
        QuadraticForm::new(self.h.ring().zero(), self.h.clone()).expect("same ring")
    }
}

/// Divides `m` by `z0` until the first remainder of degree `≤ ⌊deg m / 2⌋`,
/// then reads off `x`, `y` and the unit.
pub fn descend_poly(input: &PolyDescentInput) -> Result<Representation, PolyDescentError> {
    descend_core(&input.h, &input.m, &input.z0)
}

fn descend_core(h: &Element, m: &Element, z0: &Element) -> Result<Representation, PolyDescentError> {
    let ring = h.ring();
    if h.degree() == Some(1) && h.divides(m) {
        // m = h·m', and u(x'² + hy'²) = m' gives m = u((hy')² + hx'²)
        let rest = m.exact_div(h)?;
        if rest.is_unit() {
            return Ok(Representation::new(ring.zero(), ring.one(), rest));
        }
        let inner = descend_core(h, &rest, &z0.reduce_mod(&rest)?)?;
        return Ok(Representation::new(h * &inner.y, inner.x, inner.u));
    }
    let half = m.degree().unwrap_or(0) / 2;
    let exceeds = |e: &Element| e.degree().is_some_and(|d| d > half);
    let mut quotients = Vec::new();
    let (mut prev, mut cur) = (m.clone(), z0.clone());
    while exceeds(&cur) {
        let (k, r) = prev.div_rem(&cur, DivConvention::Floor)?;
        quotients.push(k);
        prev = std::mem::replace(&mut cur, r);
    }
    let s = quotients.len() + 1;
    let x_t = cur;
    let y_t = continuant(ring, &quotients).expect("same ring");
    let norm = &(&x_t * &x_t) + &(&(h * &y_t) * &y_t);
    let unit = if s % 2 == 1 { m.exact_div(&norm) } else { norm.exact_div(m) };
    let u = match unit {
        Ok(u) if u.is_unit() => u,
        Ok(u) => return Err(PolyDescentError::NotRepresentable(format!("cofactor {u} is not a unit"))),
        Err(_) => return Err(PolyDescentError::NotRepresentable(format!("{norm} and {m} are not associates"))),
    };
    let (x, y) = if s % 2 == 1 {
        (x_t, y_t)
    } else {
        let inv = u.invert_unit()?;
        (&inv * &x_t, &inv * &y_t)
    };
    if !gcd_trace(&x, &y, DivConvention::Floor)?.gcd.is_one() {
        return Err(PolyDescentError::NotRepresentable("x and y share a factor".into()));
    }
    Ok(Representation::new(x, y, u))
}

/// Descent for a general `x² + gxy + hy²`, by completing the square.
pub fn descend_poly_form(form: &QuadraticForm, m: &Element, z0: &Element) -> Result<Representation, PolyDescentError> {
    let done = form.complete_square().map_err(|e| match e {
        FormError::TwoNotInvertible(r) => PolyDescentError::NotPolynomialRing(r),
        other => other.into(),
    })?;
    form.ring().check([m, z0])?;
    let shifted = z0 + &done.shift;
    let input = PolyDescentInput::new(done.form.h().clone(), m.clone(), shifted)?;
    let rep = descend_poly(&input)?;
    let (x, y) = done.backward(&rep.x, &rep.y);
    Ok(Representation::new(x, y, rep.u))
}

/// Output of [`descend_poly_full_euclid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullEuclid {
    pub representation: Representation,
    /// `m = u(x² + hy²)`.
    pub unit: Element,
    /// All Euclidean quotients `Q_1, …, Q_{2s}` of `(m, z0)`.
    pub quotients: Vec<Element>,
    /// `q_1, …, q_s` with `x = [q_1..q_s]`, `y = [q_2..q_s]`.
    pub half: Vec<Element>,
}

/// Runs Euclid on `(m, z0)` to completion and reads `x`, `y` from its
/// `2s` quotients, which for constant `h` must be
/// `Q_j = u^{(−1)^{j+1}} q_{s+1−j}` followed by
/// `Q_{s+i} = u^{(−1)^{s+i+1}} h^{(−1)^i} q_i`. The unit `u` is the last
/// nonzero remainder `r` when `s` is even and `r/h` when `s` is odd.
pub fn descend_poly_full_euclid(input: &PolyDescentInput) -> Result<FullEuclid, PolyDescentError> {
    let h = &input.h;
    if h.degree() != Some(0) {
        return Err(PolyDescentError::NonConstantH);
    }
    let ring = h.ring();
    let trace = gcd_trace(&input.m, &input.z0, DivConvention::Floor)?;
    let big_q = trace.quotients.clone();
    let n = big_q.len();
    if n == 0 || n % 2 == 1 {
        return Err(PolyDescentError::PatternMismatch(format!("{n} quotients")));
    }
    let s = n / 2;
    let last = trace.raw_gcd();
    if !last.is_unit() {
        return Err(PolyDescentError::PatternMismatch(format!("gcd {last} is not a unit")));
    }
    let h_inv = h.invert_unit()?;
    let u = if s % 2 == 0 { last } else { &last * &h_inv };
    let u_inv = u.invert_unit()?;
    let odd = |k: usize| k % 2 == 1;
    // q_{s+1−j} = u^{−(−1)^{j+1}} Q_j
    let mut half = vec![ring.zero(); s];
    for j in 1..=s {
        let scale = if odd(j + 1) { &u } else { &u_inv };
        half[s - j] = scale * &big_q[j - 1];
    }
    for i in 1..=s {
        let u_pow = if odd(s + i + 1) { &u_inv } else { &u };
        let h_pow = if odd(i) { &h_inv } else { h };
        let expected = &(u_pow * h_pow) * &half[i - 1];
        if expected != big_q[s + i - 1] {
            return Err(PolyDescentError::PatternMismatch(format!(
                "quotient {} is {}, expected {}",
                s + i,
                big_q[s + i - 1],
                expected
            )));
        }
    }
    let x = continuant(ring, &half).expect("same ring");
    let y = continuant(ring, &half[1..]).expect("same ring");
    if &u * &(&(&x * &x) + &(&(h * &y) * &y)) != input.m {
        return Err(PolyDescentError::PatternMismatch("m != u(x^2 + hy^2)".into()));
    }
    Ok(FullEuclid { representation: Representation::new(x, y, u.clone()), unit: u, quotients: big_q, half })
}
