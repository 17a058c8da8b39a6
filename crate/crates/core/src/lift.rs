//! From a proper representation `m = u·Q(x, y)` to a root of
//! `Q(z, 1) ≡ 0 (mod m)`.

use thiserror::Error;

use crate::continuants::{modified_continuant, MarkedSequence};
use crate::forms::{QuadraticForm, Representation};
use crate::rings::{gcd_trace, DivConvention, Element, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("gcd(x, y) is not a unit")]
    NotCoprime,
    #[error("the represented value is zero")]
    ZeroModulus,
    #[error("u = {0} is not a unit")]
    NotAUnit(String),
    #[error("operands belong to different rings")]
    MixedRings,
}

impl From<RingError> for LiftError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::MixedRings => LiftError::MixedRings,
            RingError::BothZero => LiftError::NotCoprime,
            RingError::NotAUnit(s) => LiftError::NotAUnit(s),
            // every other ring error needs a zero divisor, ruled out above
            _ => LiftError::ZeroModulus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lift {
    /// The root reduced modulo `m`.
    pub z0: Element,
    /// `u·Q(x, y)`.
    pub m: Element,
    /// The continuant value before reduction.
    pub z: Element,
    /// Euclidean quotients of `(x, y)`.
    pub quotients: Vec<Element>,
}

/// `q_s, …, q_1, q_1 + g, q_2, …, q_s`, the diagonal whose marked continuant
/// (mark `h` at `s`) equals `Q(x, y)`.
pub fn lift_diagonal(g: &Element, quotients: &[Element]) -> Vec<Element> {
    let s = quotients.len();
    let mut items: Vec<Element> = quotients.iter().rev().cloned().collect();
    if s > 0 {
        items.push(&quotients[0] + g);
        items.extend(quotients[1..].iter().cloned());
    }
    items
}

pub fn lift(form: &QuadraticForm, rep: &Representation) -> Result<Lift, LiftError> {
    let ring = form.ring();
    ring.check([&rep.x, &rep.y, &rep.u])?;
    if !rep.u.is_unit() {
        return Err(LiftError::NotAUnit(rep.u.to_string()));
    }
    let trace = gcd_trace(&rep.x, &rep.y, DivConvention::Floor)?;
    if !trace.gcd.is_one() {
        return Err(LiftError::NotCoprime);
    }
    let m = &rep.u * &form.eval_unchecked(&rep.x, &rep.y);
    if m.is_zero() {
        return Err(LiftError::ZeroModulus);
    }
    let q = trace.quotients;
    let s = q.len();
    let z = if s == 0 {
        // y = 0 and x is a unit, so m is a unit
        ring.zero()
    } else {
        let mut items = lift_diagonal(form.g(), &q);
        items.pop();
        let c = modified_continuant(&MarkedSequence::new(items, form.h().clone(), s).expect("same ring"));
        if s % 2 == 1 {
            c
        } else {
            -c
        }
    };
    let z0 = z.reduce_mod(&m)?;
    Ok(Lift { z0, m, z, quotients: q })
}

/// True when `m` divides `Q(z0, 1)`.
pub fn verify_root(form: &QuadraticForm, m: &Element, z0: &Element) -> bool {
    let ring = form.ring();
    if ring.check([m, z0]).is_err() || m.is_zero() {
        return false;
    }
    m.divides(&form.eval_unchecked(z0, &ring.one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuants::continuant;
    use crate::oracle;
    use crate::rings::Ring;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int(n: i64) -> Element {
        Element::from(n)
    }

    fn rep(x: i64, y: i64) -> Representation {
        Representation::new(int(x), int(y), int(1))
    }

    #[test]
    fn lifts_251() {
        let q = QuadraticForm::integer(1, 5);
        let out = lift(&q, &rep(9, 5)).unwrap();
        assert_eq!(out.m, int(251));
        let roots = oracle::roots_mod(&q, &BigInt::from(251)).unwrap();
        assert!(roots.contains(out.z0.as_int().unwrap()));
        assert_eq!(out.z0, int(52));
        assert_eq!(out.quotients, vec![int(1), int(1), int(4)]);
    }

    #[test]
    fn lifts_13() {
        let q = QuadraticForm::integer(0, 1);
        let out = lift(&q, &rep(3, 2)).unwrap();
        assert_eq!(out.m, int(13));
        assert!([int(5), int(8)].contains(&out.z0));
    }

    #[test]
    fn degenerate_inputs() {
        let q = QuadraticForm::integer(0, 1);
        let out = lift(&q, &rep(1, 0)).unwrap();
        assert_eq!((out.m, out.z0), (int(1), int(0)));
        let out = lift(&QuadraticForm::integer(1, 5), &rep(0, -1)).unwrap();
        assert_eq!(out.m, int(5));
        assert!(verify_root(&QuadraticForm::integer(1, 5), &out.m, &out.z0));
        assert_eq!(lift(&q, &rep(4, 6)), Err(LiftError::NotCoprime));
        assert_eq!(lift(&q, &rep(0, 0)), Err(LiftError::NotCoprime));
        assert_eq!(lift(&QuadraticForm::integer(0, -1), &rep(1, 1)), Err(LiftError::ZeroModulus));
        assert_eq!(lift(&q, &Representation::new(int(1), int(2), int(3))), Err(LiftError::NotAUnit("3".into())));
    }

    #[test]
    fn verify_root_examples() {
        let q = QuadraticForm::integer(1, 5);
        assert!(verify_root(&q, &int(251), &int(52)));
        assert!(!verify_root(&q, &int(251), &int(53)));
        assert!(verify_root(&q, &int(1), &int(12345)));
        assert!(!verify_root(&q, &int(0), &int(1)));
    }

    #[test]
    fn negative_unit_and_signs() {
        let q = QuadraticForm::integer(0, -6);
        let out = lift(&q, &Representation::new(int(366), int(169), int(-1))).unwrap();
        assert_eq!(out.m, int(37410));
        assert!(verify_root(&q, &out.m, &out.z0));
    }

    fn check_identities(q: &QuadraticForm, x: &Element, y: &Element, u: &Element) -> Result<(), TestCaseError> {
        let ring = q.ring();
        let out = match lift(q, &Representation::new(x.clone(), y.clone(), u.clone())) {
            Ok(out) => out,
            Err(LiftError::ZeroModulus) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert!(verify_root(q, &out.m, &out.z0));
        prop_assert!(out.z0.norm() < out.m.norm());
        let s = out.quotients.len();
        if s >= 1 {
            let qs = &out.quotients;
            let a = continuant(ring, &qs[..s - 1]).unwrap();
            let b = if s >= 2 { continuant(ring, &qs[1..s - 1]).unwrap() } else { ring.zero() };
            // the raw gcd of (x, y) is a unit w with x = w·[q₁..q_s], y = w·[q₂..q_s]
            let w = gcd_trace(x, y, DivConvention::Floor).unwrap().raw_gcd();
            let ww = &w * &w;
            let lhs = &q.eval_unchecked(x, y) * &q.eval_unchecked(&a, &b);
            prop_assert_eq!(lhs, &ww * &q.eval_unchecked(&out.z, &ring.one()));
            if s <= 6 {
                let seq = MarkedSequence::new(lift_diagonal(q.g(), qs), q.h().clone(), s).unwrap();
                let det = crate::continuants::tridiagonal_det_oracle(&seq);
                prop_assert_eq!(&det * &ww, q.eval_unchecked(x, y));
            }
        }
        Ok(())
    }

    fn poly(ring: Ring, cs: &[i64]) -> Element {
        let x = ring.x().unwrap();
        cs.iter().enumerate().fold(ring.zero(), |acc, (k, &c)| &acc + &(&ring.from_i64(c) * &x.pow(k as u32)))
    }

    proptest! {
        #[test]
        fn integer_lifts(g in -2i64..3, h in -30i64..30, x in -500i64..500, y in -500i64..500, neg in any::<bool>()) {
            prop_assume!(num_integer::Integer::gcd(&x, &y) == 1);
            let u = if neg { int(-1) } else { int(1) };
            check_identities(&QuadraticForm::integer(g, h), &int(x), &int(y), &u)?;
        }

        #[test]
        fn polynomial_lifts(
            p in prop::sample::select(vec![3u64, 5, 7, 11]),
            g in prop::collection::vec(-5i64..5, 0..3),
            h in prop::collection::vec(-5i64..5, 0..3),
            x in prop::collection::vec(-5i64..5, 0..5),
            y in prop::collection::vec(-5i64..5, 0..5),
            u in 1i64..10,
        ) {
            for ring in [Ring::poly_fp(p).unwrap(), Ring::PolyOverRationals] {
                let (xe, ye) = (poly(ring, &x), poly(ring, &y));
                let ue = ring.from_i64(u);
                if !ue.is_unit() || xe.is_zero() && ye.is_zero() {
                    continue;
                }
                if !gcd_trace(&xe, &ye, DivConvention::Floor).unwrap().gcd.is_one() {
                    continue;
                }
                let q = QuadraticForm::new(poly(ring, &g), poly(ring, &h)).unwrap();
                check_identities(&q, &xe, &ye, &ue)?;
            }
        }
    }
}
