//! Brute-force references used as ground truth by the test suites.
//!
//! Nothing here calls into the continuant or descent code; scans use plain
//! machine integers and the polynomial oracle carries its own `𝔽_p`
//! arithmetic on coefficient vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::forms::QuadraticForm;
use crate::rings::{Element, Ring};

pub const MAX_MODULUS: u64 = 1_000_000;
pub const MAX_BOUND: u64 = 10_000;
pub const MAX_SEARCH_SPACE: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus must satisfy 0 < |m| <= {MAX_MODULUS}")]
    ModulusTooLarge,
    #[error("bound must be at most {MAX_BOUND}")]
    BoundTooLarge,
    #[error("search space p^(d+1) exceeds {MAX_SEARCH_SPACE}")]
    SearchSpaceTooLarge,
    #[error("the oracle needs a form over {0}")]
    WrongRing(&'static str),
    #[error("coefficient too large for a brute-force scan")]
    CoefficientTooLarge,
    #[error("modulus is zero")]
    ZeroModulus,
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every intermediate division is exact in an integral domain.
pub fn determinant(ring: Ring, matrix: &[Vec<Element>]) -> Element {
    let n = matrix.len();
    let mut a: Vec<Vec<Element>> = matrix.to_vec();
    let mut prev = ring.one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return ring.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { ring.one() } else { a[n - 1][n - 1].clone() };
    if negate {
        -det
    } else {
        det
    }
}

fn small_int_form(form: &QuadraticForm) -> Result<(i128, i128), OracleError> {
    let g = form.g().as_int().ok_or(OracleError::WrongRing("Z"))?;
    let h = form.h().as_int().ok_or(OracleError::WrongRing("Z"))?;
    let small = |v: &BigInt| v.to_i64().map(i128::from).ok_or(OracleError::CoefficientTooLarge);
    Ok((small(g)?, small(h)?))
}

/// All `z ∈ [0, |m|)` with `m | z² + gz + h`.
pub fn roots_mod(form: &QuadraticForm, m: &BigInt) -> Result<Vec<BigInt>, OracleError> {
    let (g, h) = small_int_form(form)?;
    let m = m.to_i64().map(|v| v.unsigned_abs()).filter(|&v| v > 0 && v <= MAX_MODULUS).ok_or(OracleError::ModulusTooLarge)?;
    let m = m as i128;
    Ok((0..m).filter(|&z| (z * z + g * z + h).rem_euclid(m) == 0).map(BigInt::from).collect())
}

/// All proper `(x, y, u)` with `|x|, |y| ≤ bound`, `u = ±1` and
/// `m = u·(x² + gxy + hy²)`.
pub fn reps_bounded(form: &QuadraticForm, m: &BigInt, bound: u64) -> Result<Vec<(BigInt, BigInt, BigInt)>, OracleError> {
    if bound > MAX_BOUND {
        return Err(OracleError::BoundTooLarge);
    }
    let (g, h) = small_int_form(form)?;
    let m = m.to_i64().map(i128::from).ok_or(OracleError::CoefficientTooLarge)?;
    let b = bound as i128;
    let mut out = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            let v = x * x + g * x * y + h * y * y;
            if v.abs() != m.abs() || x.gcd(&y) != 1 {
                continue;
            }
            for u in [1i128, -1] {
                if u * v == m {
                    out.push((BigInt::from(x), BigInt::from(y), BigInt::from(u)));
                }
            }
        }
    }
    Ok(out)
}

fn fp_coeffs(e: &Element) -> Result<Vec<u64>, OracleError> {
    match e {
        Element::Fp(p) => Ok(p.coeffs().to_vec()),
        _ => Err(OracleError::WrongRing("F_p[X]")),
    }
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y % p) % p;
        }
    }
    trim(&mut out);
    out
}

fn padd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (0..a.len().max(b.len()))
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn prem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let lead_inv = inv_mod(*m.last().expect("nonzero modulus"), p);
    while r.len() >= m.len() {
        let c = r.last().copied().unwrap() * lead_inv % p;
        let shift = r.len() - m.len();
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        trim(&mut r);
    }
    r
}

/// All `z` with `deg z ≤ max_deg` and `m | z² + gz + h` over `𝔽_p[X]`.
pub fn poly_roots_mod(form: &QuadraticForm, m: &Element, max_deg: u32) -> Result<Vec<Element>, OracleError> {
    let ring = form.ring();
    let p = match ring {
        Ring::PolyOverPrimeField { p } => p,
        _ => return Err(OracleError::WrongRing("F_p[X]")),
    };
    if m.ring() != ring {
        return Err(OracleError::WrongRing("F_p[X]"));
    }
    let space = (p as u128).checked_pow(max_deg + 1).filter(|&s| s <= MAX_SEARCH_SPACE as u128);
    let space = space.ok_or(OracleError::SearchSpaceTooLarge)? as u64;
    let g = fp_coeffs(form.g())?;
    let h = fp_coeffs(form.h())?;
    let mv = fp_coeffs(m)?;
    if mv.is_empty() {
        return Err(OracleError::ZeroModulus);
    }
    let x = ring.x().expect("polynomial ring");
    let mut out = Vec::new();
    for index in 0..space {
        let mut z = Vec::with_capacity(max_deg as usize + 1);
        let mut rest = index;
        for _ in 0..=max_deg {
            z.push(rest % p);
            rest /= p;
        }
        trim(&mut z);
        let value = padd(&padd(&pmul(&z, &z, p), &pmul(&g, &z, p), p), &h, p);
        if prem(&value, &mv, p).is_empty() {
            let elem = z
                .iter()
                .enumerate()
                .fold(ring.zero(), |acc, (k, &c)| &acc + &(&ring.from_i64(c as i64) * &x.pow(k as u32)));
            out.push(elem);
        }
    }
    Ok(out)
}

/// Replays a descent trace with plain integer arithmetic.
pub fn check_trace(trace: &crate::descent_int::DescentTrace) -> Result<(), String> {
    let q = |z: &BigInt| z * z + &trace.g * z + &trace.h;
    if trace.m0 == BigInt::from(0) {
        return Err("m0 is zero".into());
    }
    if !q(&trace.z0).is_multiple_of(&trace.m0) {
        return Err("m0 does not divide Q(z0, 1)".into());
    }
    let (mut m, mut z) = (trace.m0.clone(), trace.z0.clone());
    for (i, st) in trace.steps.iter().enumerate() {
        let i = i + 1;
        if &m * &st.m != q(&z) {
            return Err(format!("step {i}: Q(z, 1) != m_prev * m"));
        }
        if &st.k * &st.m + &st.z != z {
            return Err(format!("step {i}: z_prev != k * m + z"));
        }
        if st.z.magnitude() >= st.m.magnitude() {
            return Err(format!("step {i}: |z| >= |m|"));
        }
        m = st.m.clone();
        z = st.z.clone();
    }
    if trace.terminal_m != m || trace.terminal_s != trace.steps.len() {
        return Err("terminal fields disagree with the steps".into());
    }
    Ok(())
}
