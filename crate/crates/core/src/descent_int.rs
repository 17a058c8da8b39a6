//! Integer descent: from `z₀` with `m₀ | Q(z₀, 1)` to `m₀ = u·Q(x, y)`,
//! `u = ±1`, for the catalogued forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::continuants::rational_continuant;
use crate::forms::{small_witness, witness_bound, FormCatalogEntry, QuadraticForm, Representation, SignClass};
use crate::rings::{DivConvention, Element};

pub const TRACE_SCHEMA: &str = "quadrep.trace/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("m0 = {m0} does not divide Q(z0, 1)")]
    PreconditionViolated { m0: BigInt },
    #[error("m0 must be nonzero")]
    ZeroModulus,
    #[error("discriminant {0} needs the extended descent")]
    WrongSignClass(i64),
    #[error("max_steps must be at least 1")]
    ZeroStepLimit,
}

/// Why a descent stopped without a representation.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "reason")]
pub enum DescentFailure {
    #[error("no zero remainder within {limit} steps")]
    StepLimit { limit: u64 },
    #[error("terminal divisor {d} is not in the catalog")]
    DivisorNotInCatalog {
        #[serde(with = "crate::json::dec")]
        d: BigInt,
    },
    #[error("the intermediate representation is not divisible by a representation of ±{d}")]
    NotDivisible {
        #[serde(with = "crate::json::dec")]
        d: BigInt,
    },
    #[error("no small representation of ±{m}")]
    NoSmallWitness {
        #[serde(with = "crate::json::dec")]
        m: BigInt,
    },
}

/// `m_i`, `z_i`, `k_i` with `Q(z_{i−1}, 1) = m_{i−1} m_i` and
/// `z_{i−1} = k_i m_i + z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentStep {
    #[serde(with = "crate::json::dec")]
    pub m: BigInt,
    #[serde(with = "crate::json::dec")]
    pub z: BigInt,
    #[serde(with = "crate::json::dec")]
    pub k: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentTrace {
    #[serde(with = "crate::json::dec")]
    pub g: BigInt,
    #[serde(with = "crate::json::dec")]
    pub h: BigInt,
    #[serde(with = "crate::json::dec")]
    pub m0: BigInt,
    /// `z₀` after reduction modulo `m₀`.
    #[serde(with = "crate::json::dec")]
    pub z0: BigInt,
    pub steps: Vec<DescentStep>,
    #[serde(with = "crate::json::dec")]
    pub terminal_m: BigInt,
    pub terminal_s: usize,
}

impl DescentTrace {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("trace serializes");
        v["schema"] = TRACE_SCHEMA.into();
        v
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
        match v.get("schema").and_then(|s| s.as_str()) {
            Some(TRACE_SCHEMA) | None => {}
            Some(other) => return Err(format!("unsupported trace schema {other:?}")),
        }
        serde_json::from_value(v).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentOutcome {
    pub result: Result<Representation, DescentFailure>,
    pub trace: DescentTrace,
    /// `(x, y)` with `m₀·m_s^{(−1)^{s+1}} = Q(x, y)`, before the terminal
    /// divisor is removed.
    pub intermediate: Option<(BigRational, BigRational)>,
}

impl DescentOutcome {
    pub fn representation(&self) -> Result<&Representation, &DescentFailure> {
        self.result.as_ref()
    }
}

/// `64 + 10·bitlength(m₀)`.
pub fn default_max_steps(m0: &BigInt) -> u64 {
    64 + 10 * m0.bits()
}

fn q_at(g: &BigInt, h: &BigInt, z: &BigInt) -> BigInt {
    z * z + g * z + h
}

fn int_coeffs(form: &QuadraticForm) -> (BigInt, BigInt) {
    let g = form.g().as_int().expect("integer form").clone();
    let h = form.h().as_int().expect("integer form").clone();
    (g, h)
}

/// Division `z = k·m + r` with `|r| < |m|`, preferring `k ≠ 0`: when
/// `0 < |z| < |m|` the unique `k = ±1` with `|z − km| < |m|` is taken.
fn prioritized_div(z: &BigInt, m: &BigInt, conv: DivConvention) -> (BigInt, BigInt) {
    if !z.is_zero() && z.abs() < m.abs() {
        let k = if z.is_positive() == m.is_positive() { BigInt::one() } else { -BigInt::one() };
        let r = z - &k * m;
        return (k, r);
    }
    let (q, r) = Element::from(z.clone())
        .div_rem(&Element::from(m.clone()), conv)
        .expect("nonzero divisor");
    (q.as_int().unwrap().clone(), r.as_int().unwrap().clone())
}

enum Stop {
    UnitModulus,
    ZeroRemainder,
}

struct Loop {
    trace: DescentTrace,
    finished: bool,
}

fn run_loop(form: &QuadraticForm, m0: &BigInt, z0: &BigInt, conv: DivConvention, stop: Stop, limit: u64) -> Loop {
    let (g, h) = int_coeffs(form);
    let mut steps = Vec::new();
    let (mut m, mut z) = (m0.clone(), z0.clone());
    let done = |m: &BigInt, z: &BigInt| match stop {
        Stop::UnitModulus => m.abs().is_one(),
        Stop::ZeroRemainder => z.is_zero(),
    };
    let mut finished = done(&m, &z);
    while !finished && (steps.len() as u64) < limit {
        let next_m = q_at(&g, &h, &z) / &m;
        let (k, r) = prioritized_div(&z, &next_m, conv);
        steps.push(DescentStep { m: next_m.clone(), z: r.clone(), k });
        m = next_m;
        z = r;
        finished = done(&m, &z);
    }
    let trace = DescentTrace {
        g,
        h,
        m0: m0.clone(),
        z0: z0.clone(),
        terminal_s: steps.len(),
        terminal_m: m,
        steps,
    };
    Loop { trace, finished }
}

/// `x = [m_s q_1, m_s⁻¹ q_2, …]`, `y` the same without the first entry, with
/// `q` the reversed quotients.
fn continuant_pair(trace: &DescentTrace) -> (BigRational, BigRational) {
    let d = BigRational::from_integer(trace.terminal_m.clone());
    let d_inv = d.recip();
    let entries: Vec<BigRational> = trace
        .steps
        .iter()
        .rev()
        .enumerate()
        .map(|(i, st)| BigRational::from_integer(st.k.clone()) * if i % 2 == 0 { &d } else { &d_inv })
        .collect();
    let x = rational_continuant(&entries);
    let y = rational_continuant(entries.get(1..).unwrap_or(&[]));
    (x, y)
}

fn normalize_root(form: &QuadraticForm, m0: &BigInt, z0: &BigInt) -> Result<BigInt, DescentError> {
    if m0.is_zero() {
        return Err(DescentError::ZeroModulus);
    }
    let (g, h) = int_coeffs(form);
    if !q_at(&g, &h, z0).is_multiple_of(m0) {
        return Err(DescentError::PreconditionViolated { m0: m0.clone() });
    }
    Ok(z0.mod_floor(&m0.abs()))
}

fn int_rep(x: BigInt, y: BigInt, u: BigInt) -> Representation {
    Representation::new(Element::from(x), Element::from(y), Element::from(u))
}

/// `z₀ ∈ {0, 1}`: `m₀` divides `h` or `1 + g + h`, so it is small enough to
/// read off a witness directly.
fn small_case(form: &QuadraticForm, m0: &BigInt, z0: &BigInt) -> DescentOutcome {
    let (g, h) = int_coeffs(form);
    let trace = DescentTrace {
        g,
        h,
        m0: m0.clone(),
        z0: z0.clone(),
        steps: Vec::new(),
        terminal_m: m0.clone(),
        terminal_s: 0,
    };
    let result = represent_small_divisor(form, m0).map_err(|_| DescentFailure::NoSmallWitness { m: m0.clone() });
    DescentOutcome { result, trace, intermediate: None }
}

/// Algorithm for definite forms: loops while `|m_s| ≠ 1`.
pub fn descend_negative(
    entry: &FormCatalogEntry,
    m0: &BigInt,
    z0: &BigInt,
    conv: DivConvention,
) -> Result<DescentOutcome, DescentError> {
    if entry.sign_class() != SignClass::NegativeDefiniteLoop {
        return Err(DescentError::WrongSignClass(entry.discriminant()));
    }
    let form = entry.form();
    let z0 = normalize_root(form, m0, z0)?;
    if z0 <= BigInt::one() || m0.abs() <= BigInt::one() {
        return Ok(small_case(form, m0, &z0));
    }
    // termination is guaranteed; the cap only guards against misuse
    let run = run_loop(form, m0, &z0, conv, Stop::UnitModulus, 4 * default_max_steps(m0));
    if !run.finished {
        let limit = run.trace.terminal_s as u64;
        return Ok(DescentOutcome { result: Err(DescentFailure::StepLimit { limit }), trace: run.trace, intermediate: None });
    }
    // m_s = ±1 here, so the continuants are integers
    let (x, y) = continuant_pair(&run.trace);
    let u = run.trace.terminal_m.clone();
    let intermediate = Some((x.clone(), y.clone()));
    let rep = int_rep(x.to_integer(), y.to_integer(), u);
    Ok(DescentOutcome { result: Ok(rep), trace: run.trace, intermediate })
}

/// The extended loop, run until `z_s = 0`; the terminal `m_s` is then
/// removed with a small representation of `±m_s`.
pub fn descend_extended(
    entry: &FormCatalogEntry,
    m0: &BigInt,
    z0: &BigInt,
    conv: DivConvention,
    max_steps: Option<u64>,
) -> Result<DescentOutcome, DescentError> {
    let form = entry.form();
    let limit = max_steps.unwrap_or_else(|| default_max_steps(m0));
    if limit == 0 {
        return Err(DescentError::ZeroStepLimit);
    }
    let z0 = normalize_root(form, m0, z0)?;
    if z0 <= BigInt::one() || m0.abs() <= BigInt::one() {
        return Ok(small_case(form, m0, &z0));
    }
    let run = run_loop(form, m0, &z0, conv, Stop::ZeroRemainder, limit);
    let trace = run.trace;
    let fail = |reason, trace, intermediate| Ok(DescentOutcome { result: Err(reason), trace, intermediate });
    if !run.finished {
        return fail(DescentFailure::StepLimit { limit }, trace, None);
    }
    let d = trace.terminal_m.clone();
    if !entry.allows(&d) {
        return fail(DescentFailure::DivisorNotInCatalog { d }, trace, None);
    }
    let (x, y) = continuant_pair(&trace);
    let intermediate = Some((x.clone(), y.clone()));
    let Ok(witness) = represent_small_divisor(form, &d) else {
        return fail(DescentFailure::NotDivisible { d }, trace, intermediate);
    };
    match finish_with_witness(&trace, (&x, &y), &witness) {
        Some((fx, fy)) => {
            let rep = int_rep(fx, fy, witness.u.as_int().unwrap().clone());
            Ok(DescentOutcome { result: Ok(rep), trace, intermediate })
        }
        None => fail(DescentFailure::NotDivisible { d }, trace, intermediate),
    }
}

/// Removes the terminal divisor: `Q(x, y) = m₀·d` for odd `s` is divided by
/// the witness, `Q(x, y) = m₀/d` for even `s` is composed with it. The
/// intermediate pair may be fractional when `d ∤ m₀`, so both the witness and
/// its conjugate are tried and the first proper integral result is kept.
fn finish_with_witness(
    trace: &DescentTrace,
    (x, y): (&BigRational, &BigRational),
    witness: &Representation,
) -> Option<(BigInt, BigInt)> {
    let (g, h) = (&trace.g, &trace.h);
    let rat = |v: &BigInt| BigRational::from_integer(v.clone());
    let (a, b) = (witness.x.as_int()?, witness.y.as_int()?);
    let compose = |(z, w): (BigRational, BigRational)| {
        (x * &z - rat(h) * y * &w, x * &w + y * &z + rat(g) * y * &w)
    };
    let direct = (rat(a), rat(b));
    let conj = (rat(&(a + g * b)), rat(&-b));
    let candidates = if trace.terminal_s % 2 == 1 {
        let n = rat(&(a * a + g * a * b + h * b * b));
        [compose(conj), compose(direct)].map(|(p, q)| (p / &n, q / &n))
    } else {
        [compose(direct), compose(conj)]
    };
    candidates.into_iter().find_map(|(p, q)| {
        (p.is_integer() && q.is_integer() && p.to_integer().gcd(&q.to_integer()).is_one())
            .then(|| (p.to_integer(), q.to_integer()))
    })
}

/// Runs the descent that matches the entry's sign class.
pub fn descend(
    entry: &FormCatalogEntry,
    m0: &BigInt,
    z0: &BigInt,
    conv: DivConvention,
    max_steps: Option<u64>,
) -> Result<DescentOutcome, DescentError> {
    match entry.sign_class() {
        SignClass::NegativeDefiniteLoop => descend_negative(entry, m0, z0, conv),
        SignClass::PositiveExtended => descend_extended(entry, m0, z0, conv, max_steps),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no representation of ±{0} with |x|, |y| ≤ 4|h| + 4")]
pub struct NoWitness(pub BigInt);

/// A proper `(x, y)` with `Q(x, y) = ±d`, returned as `d = u·Q(x, y)`.
pub fn represent_small_divisor(form: &QuadraticForm, d: &BigInt) -> Result<Representation, NoWitness> {
    let bound = witness_bound(form).max(d.abs().sqrt().try_into().unwrap_or(u64::MAX / 8) + 2);
    for (target, u) in [(d.clone(), BigInt::one()), (-d, -BigInt::one())] {
        if let Some((x, y)) = small_witness(form, &target, bound) {
            return Ok(int_rep(x, y, u));
        }
    }
    Err(NoWitness(d.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{catalog_negative, catalog_positive, lookup_discriminant, principal_entry};
    use crate::oracle;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(b(n))
    }

    fn steps(t: &DescentTrace) -> Vec<(i64, i64, i64)> {
        t.steps
            .iter()
            .map(|s| (i64::try_from(&s.m).unwrap(), i64::try_from(&s.z).unwrap(), i64::try_from(&s.k).unwrap()))
            .collect()
    }

    fn xy(rep: &Representation) -> (BigInt, BigInt, BigInt) {
        (rep.x.as_int().unwrap().clone(), rep.y.as_int().unwrap().clone(), rep.u.as_int().unwrap().clone())
    }

    #[test]
    fn example_251() {
        let e = lookup_discriminant(-19).unwrap();
        let out = descend_negative(e, &b(251), &b(52), DivConvention::Floor).unwrap();
        assert_eq!(steps(&out.trace), vec![(11, 8, 4), (7, 1, 1), (1, 0, 1)]);
        assert_eq!(out.trace.terminal_m, b(1));
        assert_eq!(xy(out.representation().unwrap()), (b(9), b(5), b(1)));
        oracle::check_trace(&out.trace).unwrap();
    }

    #[test]
    fn example_13_sum_of_two_squares() {
        let e = lookup_discriminant(-4).unwrap();
        let out = descend_negative(e, &b(13), &b(5), DivConvention::Floor).unwrap();
        let (x, y, u) = xy(out.representation().unwrap());
        assert_eq!(u, b(1));
        let mut pair = [x.abs(), y.abs()];
        pair.sort();
        assert_eq!(pair, [b(2), b(3)]);
    }

    #[test]
    fn one_step_descent() {
        let e = lookup_discriminant(-19).unwrap();
        // m0 = Q(7, 1) = 61
        let out = descend_negative(e, &b(61), &b(7), DivConvention::Floor).unwrap();
        assert_eq!(out.trace.terminal_s, 1);
        let rep = out.representation().unwrap();
        assert!(e.form().is_proper_representation(&Element::from(61), rep));
    }

    #[test]
    fn example_3064() {
        let e = lookup_discriminant(17).unwrap();
        let out = descend_extended(e, &b(3064), &b(564), DivConvention::Floor, None).unwrap();
        assert_eq!(steps(&out.trace), vec![(104, 44, 5), (19, 6, 2), (2, 0, 3)]);
        assert_eq!(out.trace.terminal_m, b(2));
        assert_eq!(out.intermediate, Some((r(76), r(11))));
        assert_eq!(xy(out.representation().unwrap()), (b(92), b(-27), b(1)));
    }

    #[test]
    fn example_37410() {
        let e = lookup_discriminant(24).unwrap();
        let out = descend_extended(e, &b(37410), &b(1326), DivConvention::Floor, None).unwrap();
        assert_eq!(steps(&out.trace), vec![(47, 10, 28), (2, 0, 5)]);
        assert_eq!(out.intermediate, Some((r(141), r(14))));
        assert_eq!(xy(out.representation().unwrap()), (b(366), b(169), b(-1)));
    }

    #[test]
    fn delta_73_hits_the_step_limit() {
        let e = principal_entry(73).unwrap();
        let out = descend_extended(&e, &b(267), &b(23), DivConvention::Floor, None).unwrap();
        assert_eq!(out.result, Err(DescentFailure::StepLimit { limit: default_max_steps(&b(267)) }));
        assert_eq!(out.trace.steps.len() as u64, default_max_steps(&b(267)));
        let ms: Vec<i64> = steps(&out.trace).iter().take(6).map(|s| s.0).collect();
        assert_eq!(ms, vec![2, -8, -3, 6, 2, -8]);
        oracle::check_trace(&out.trace).unwrap();
        // 267 is nonetheless represented
        let q = e.form();
        assert_eq!(q.evaluate(&Element::from(-69), &Element::from(14)).unwrap(), Element::from(267));
    }

    #[test]
    fn errors_and_small_cases() {
        let e = lookup_discriminant(-4).unwrap();
        assert_eq!(
            descend_negative(e, &b(13), &b(4), DivConvention::Floor),
            Err(DescentError::PreconditionViolated { m0: b(13) })
        );
        assert_eq!(descend_negative(e, &b(0), &b(4), DivConvention::Floor), Err(DescentError::ZeroModulus));
        let pos = lookup_discriminant(24).unwrap();
        assert_eq!(descend_negative(pos, &b(5), &b(1), DivConvention::Floor), Err(DescentError::WrongSignClass(24)));
        assert_eq!(descend_extended(pos, &b(5), &b(1), DivConvention::Floor, Some(0)), Err(DescentError::ZeroStepLimit));
        // z0 = 1: m0 | 1 + 0 + 1 = 2
        let out = descend_negative(e, &b(2), &b(1), DivConvention::Floor).unwrap();
        assert!(e.form().is_proper_representation(&Element::from(2), out.representation().unwrap()));
        // z0 ≡ 0: m0 | h
        let e19 = lookup_discriminant(-19).unwrap();
        let out = descend_negative(e19, &b(5), &b(10), DivConvention::Floor).unwrap();
        assert_eq!(xy(out.representation().unwrap()), (b(0), b(1), b(1)));
        let out = descend_negative(e19, &b(-1), &b(3), DivConvention::Floor).unwrap();
        assert_eq!(xy(out.representation().unwrap()), (b(1), b(0), b(-1)));
    }

    #[test]
    fn small_divisor_witnesses() {
        let w = |g, h, d| xy(&represent_small_divisor(&QuadraticForm::integer(g, h), &b(d)).unwrap());
        assert_eq!(w(1, -4, 2), (b(2), b(1), b(1)));
        assert_eq!(w(0, -6, -2), (b(2), b(1), b(1)));
        assert_eq!(w(0, -6, 2), (b(2), b(1), b(-1)));
        assert_eq!(w(1, 5, 1), (b(1), b(0), b(1)));
        assert!(represent_small_divisor(&QuadraticForm::integer(0, 1), &b(3)).is_err());
    }

    #[test]
    fn trace_json_roundtrip() {
        let e = lookup_discriminant(17).unwrap();
        let out = descend_extended(e, &b(3064), &b(564), DivConvention::Floor, None).unwrap();
        let text = out.trace.to_json().to_string();
        assert!(text.contains("\"m\":\"104\""));
        let back = DescentTrace::from_json(&text).unwrap();
        assert_eq!(back, out.trace);
        assert!(DescentTrace::from_json(&text.replace("quadrep.trace/1", "other")).is_err());
    }

    #[test]
    fn oracle_agreement_for_negative_catalog() {
        for e in catalog_negative() {
            let q = e.form();
            for m in 2..=300i64 {
                for z in oracle::roots_mod(q, &b(m)).unwrap() {
                    for conv in [DivConvention::Floor, DivConvention::LeastAbs] {
                        let out = descend_negative(e, &b(m), &z, conv).unwrap();
                        let rep = out.representation().unwrap();
                        assert!(q.is_proper_representation(&Element::from(m), rep), "Δ={} m={m} z={z}", e.discriminant());
                        oracle::check_trace(&out.trace).unwrap();
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn positive_catalog_round_trip(idx in 0usize..12, x in -300i64..300, y in -300i64..300, conv in prop::bool::ANY) {
            prop_assume!(num_integer::Integer::gcd(&x, &y) == 1);
            let e = &catalog_positive()[idx];
            let q = e.form();
            let m = q.evaluate(&Element::from(x), &Element::from(y)).unwrap();
            prop_assume!(!m.is_zero());
            let rep = Representation::new(Element::from(x), Element::from(y), Element::from(1));
            let z0 = crate::lift::lift(q, &rep).unwrap().z0;
            let conv = if conv { DivConvention::Floor } else { DivConvention::LeastAbs };
            let mi = m.as_int().unwrap();
            let out = descend_extended(e, mi, z0.as_int().unwrap(), conv, None).unwrap();
            oracle::check_trace(&out.trace).unwrap();
            let rep = out.representation().map_err(|f| TestCaseError::fail(format!("{f} for m={mi}, z0={z0}")))?;
            prop_assert!(q.is_proper_representation(&m, rep));
        }
    }
}
