//! Quadratic forms `Q(x, y) = x² + gxy + hy²` over a supported ring.

mod catalog;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rings::{gcd_trace, DivConvention, Element, Ring, RingError};

pub use catalog::{
    catalog_json, catalog_negative, CatalogEntryJson, catalog_positive, load_catalog_json, lookup_discriminant, principal_entry, resolve_discriminant, resolve_form,
    CatalogFile, FormCatalogEntry, SignClass, CATALOG_SCHEMA,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("({x}, {y}) is not divisible by ({z}, {w}) on either conjugate branch")]
    NotDivisible { x: String, y: String, z: String, w: String },
    #[error("cannot divide by a representation of zero")]
    ZeroNorm,
    #[error("2 is not invertible in {0}")]
    TwoNotInvertible(Ring),
    #[error("discriminant {0} outside the range this check applies to")]
    DiscriminantOutOfRange(i64),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// The form `x² + gxy + hy²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    g: Element,
    h: Element,
}

impl QuadraticForm {
    pub fn new(g: Element, h: Element) -> Result<Self, FormError> {
        if g.ring() != h.ring() {
            return Err(FormError::MixedRings);
        }
        Ok(QuadraticForm { g, h })
    }

    /// An integer form `x² + gxy + hy²`.
    pub fn integer(g: i64, h: i64) -> Self {
        QuadraticForm { g: Element::from(g), h: Element::from(h) }
    }

    pub fn g(&self) -> &Element {
        &self.g
    }

    pub fn h(&self) -> &Element {
        &self.h
    }

    pub fn ring(&self) -> Ring {
        self.g.ring()
    }

    /// `g² − 4h`.
    pub fn discriminant(&self) -> Element {
        let four = self.ring().from_i64(4);
        &(&self.g * &self.g) - &(&four * &self.h)
    }

    fn check(&self, items: &[&Element]) -> Result<(), FormError> {
        self.ring().check(items.iter().copied()).map_err(|_| FormError::MixedRings)
    }

    /// `x² + gxy + hy²`.
    pub fn evaluate(&self, x: &Element, y: &Element) -> Result<Element, FormError> {
        self.check(&[x, y])?;
        Ok(self.eval_unchecked(x, y))
    }

    pub(crate) fn eval_unchecked(&self, x: &Element, y: &Element) -> Element {
        let xx = x * x;
        let xy = &(&self.g * x) * y;
        let yy = &(&self.h * y) * y;
        &(&xx + &xy) + &yy
    }

    /// The product identity `Q(x,y)·Q(z,w) = Q(xz − hyw, xw + yz + gyw)`.
    pub fn compose(&self, a: (&Element, &Element), b: (&Element, &Element)) -> Result<(Element, Element), FormError> {
        self.check(&[a.0, a.1, b.0, b.1])?;
        Ok(self.compose_unchecked(a, b))
    }

    fn compose_unchecked(&self, (x, y): (&Element, &Element), (z, w): (&Element, &Element)) -> (Element, Element) {
        let big_x = &(x * z) - &(&(&self.h * y) * w);
        let big_y = &(&(x * w) + &(y * z)) + &(&(&self.g * y) * w);
        (big_x, big_y)
    }

    /// The conjugate `(z + gw, −w)`: composing with it multiplies by `Q(z, w)`.
    pub fn conjugate(&self, z: &Element, w: &Element) -> (Element, Element) {
        (z + &(&self.g * w), -w)
    }

    /// Undoes [`compose`](Self::compose): finds `(x, y)` with
    /// `Q(x, y) = Q(X, Y) / Q(z, w)`.
    ///
    /// The quotient on the [`DivisionBranch::Direct`] branch satisfies
    /// `compose((x, y), (z, w)) = (X, Y)`; on the conjugate branch it
    /// satisfies `compose((x, y), conjugate(z, w)) = (X, Y)`. The direct
    /// branch is tried first.
    pub fn divide(&self, big: (&Element, &Element), by: (&Element, &Element)) -> Result<Division, FormError> {
        self.check(&[big.0, big.1, by.0, by.1])?;
        let norm = self.eval_unchecked(by.0, by.1);
        if norm.is_zero() {
            return Err(FormError::ZeroNorm);
        }
        let conj = self.conjugate(by.0, by.1);
        let attempts = [
            (DivisionBranch::Direct, (&conj.0, &conj.1)),
            (DivisionBranch::Conjugate, (by.0, by.1)),
        ];
        for (branch, other) in attempts {
            let (px, py) = self.compose_unchecked(big, other);
            if let (Ok(x), Ok(y)) = (px.exact_div(&norm), py.exact_div(&norm)) {
                return Ok(Division { x, y, branch });
            }
        }
        Err(FormError::NotDivisible {
            x: big.0.to_string(),
            y: big.1.to_string(),
            z: by.0.to_string(),
            w: by.1.to_string(),
        })
    }

    /// Rewrites the form as `x'² + h'y'²` with `x' = x + gy/2`, which needs 2
    /// to be invertible (polynomial rings of odd characteristic).
    pub fn complete_square(&self) -> Result<CompletedSquare, FormError> {
        let ring = self.ring();
        if !ring.is_polynomial() {
            return Err(FormError::TwoNotInvertible(ring));
        }
        let half = ring.from_ratio(&BigInt::one(), &BigInt::from(2))?;
        let shift = &self.g * &half;
        let h = &self.h - &(&shift * &shift);
        Ok(CompletedSquare { form: QuadraticForm { g: ring.zero(), h }, shift })
    }

    /// Checks `m = u·Q(x, y)` with `u` a unit and `gcd(x, y)` a unit.
    pub fn is_proper_representation(&self, m: &Element, rep: &Representation) -> bool {
        if self.check(&[m, &rep.x, &rep.y, &rep.u]).is_err() || !rep.u.is_unit() {
            return false;
        }
        let coprime = match gcd_trace(&rep.x, &rep.y, DivConvention::Floor) {
            Ok(t) => t.gcd.is_one(),
            Err(_) => false,
        };
        coprime && &rep.u * &self.eval_unchecked(&rep.x, &rep.y) == *m
    }
}

/// Which conjugate a [`QuadraticForm::divide`] quotient was taken along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisionBranch {
    Direct,
    Conjugate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub x: Element,
    pub y: Element,
    pub branch: DivisionBranch,
}

/// A form with `g = 0` equivalent to the original one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletedSquare {
    pub form: QuadraticForm,
    /// `g/2`.
    pub shift: Element,
}

impl CompletedSquare {
    /// `(x, y) ↦ (x + gy/2, y)`.
    pub fn forward(&self, x: &Element, y: &Element) -> (Element, Element) {
        (x + &(&self.shift * y), y.clone())
    }

    pub fn backward(&self, x: &Element, y: &Element) -> (Element, Element) {
        (x - &(&self.shift * y), y.clone())
    }
}

/// `m = u·Q(x, y)` with `u` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub x: Element,
    pub y: Element,
    pub u: Element,
}

impl Representation {
    pub fn new(x: Element, y: Element, u: Element) -> Self {
        Representation { x, y, u }
    }

    /// `u·Q(x, y)`.
    pub fn value(&self, form: &QuadraticForm) -> Result<Element, FormError> {
        Ok(&self.u * &form.evaluate(&self.x, &self.y)?)
    }
}

/// Rabinowitsch's test for `Δ = 1 − 4κ ≤ −7`: true iff `x² + x + κ` is prime
/// for every `−(κ − 1) ≤ x ≤ κ − 2`.
pub fn rabinowitsch_check(kappa: i64) -> Result<bool, FormError> {
    let disc = 1i128 - 4 * kappa as i128;
    if disc > -7 {
        return Err(FormError::DiscriminantOutOfRange(disc.clamp(i64::MIN as i128, i64::MAX as i128) as i64));
    }
    let is_prime = |n: i128| n >= 2 && (2..).take_while(|d: &i128| d * d <= n).all(|d| n % d != 0);
    let k = kappa as i128;
    Ok((-(k - 1)..=k - 2).all(|x| is_prime(x * x + x + k)))
}

/// Searches for a proper `(x, y)` with `Q(x, y) = target` and
/// `|x|, |y| ≤ bound`, visiting `y` then `x` in the order 0, 1, −1, 2, −2, …
pub(crate) fn small_witness(form: &QuadraticForm, target: &BigInt, bound: u64) -> Option<(BigInt, BigInt)> {
    let g = form.g.as_int()?;
    let h = form.h.as_int()?;
    let order = |b: u64| {
        std::iter::once(0i64).chain((1..=b as i64).flat_map(|v| [v, -v]))
    };
    for y in order(bound) {
        let y = BigInt::from(y);
        for x in order(bound) {
            let x = BigInt::from(x);
            let v = &x * &x + g * &x * &y + h * &y * &y;
            if &v == target && num_integer::Integer::gcd(&x, &y).is_one() {
                return Some((x, y));
            }
        }
    }
    None
}

/// The search radius for small-divisor witnesses: `4|h| + 4`.
pub(crate) fn witness_bound(form: &QuadraticForm) -> u64 {
    let h = form.h.as_int().map(|h| h.abs()).unwrap_or_else(BigInt::zero);
    4 * h.to_u64().unwrap_or(u64::MAX / 8) + 4
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Element {
        Element::from(n)
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(QuadraticForm::integer(1, 5).evaluate(&int(9), &int(5)).unwrap(), int(251));
        assert_eq!(QuadraticForm::integer(1, -4).evaluate(&int(92), &int(-27)).unwrap(), int(3064));
        assert_eq!(QuadraticForm::integer(7, -3).evaluate(&int(1), &int(0)).unwrap(), int(1));
        let bad = QuadraticForm::integer(0, 1).evaluate(&int(1), &Ring::PolyOverRationals.one());
        assert_eq!(bad, Err(FormError::MixedRings));
    }

    #[test]
    fn compose_examples() {
        let q = QuadraticForm::integer(1, -4);
        assert_eq!(q.compose((&int(92), &int(-27)), (&int(2), &int(1))).unwrap(), (int(76), int(11)));
        assert_eq!(q.compose((&int(92), &int(-27)), (&int(1), &int(0))).unwrap(), (int(92), int(-27)));
        let q = QuadraticForm::integer(0, 1);
        let (x, y) = q.compose((&int(1), &int(2)), (&int(2), &int(1))).unwrap();
        assert_eq!((x.clone(), y.clone()), (int(0), int(5)));
        assert_eq!(q.evaluate(&x, &y).unwrap(), int(25));
    }

    #[test]
    fn divide_examples() {
        let q = QuadraticForm::integer(1, -4);
        let d = q.divide((&int(76), &int(11)), (&int(2), &int(1))).unwrap();
        assert_eq!((d.x, d.y, d.branch), (int(92), int(-27), DivisionBranch::Direct));
        let d = q.divide((&int(76), &int(11)), (&int(1), &int(0))).unwrap();
        assert_eq!((d.x, d.y), (int(76), int(11)));
        assert_eq!(q.divide((&int(1), &int(1)), (&int(0), &int(0))), Err(FormError::ZeroNorm));
    }

    #[test]
    fn divide_sum_of_squares_against_brute_force() {
        // every (x, y) with |x|, |y| ≤ 5 and (x, y)∘(2, 1) = (0, 5) or
        // (x, y)∘(2, −1) = (0, 5), found by scanning
        let q = QuadraticForm::integer(0, 1);
        let mut direct = Vec::new();
        let mut conj = Vec::new();
        for x in -5..=5 {
            for y in -5..=5 {
                if q.compose((&int(x), &int(y)), (&int(2), &int(1))).unwrap() == (int(0), int(5)) {
                    direct.push((x, y));
                }
                if q.compose((&int(x), &int(y)), (&int(2), &int(-1))).unwrap() == (int(0), int(5)) {
                    conj.push((x, y));
                }
            }
        }
        assert_eq!(direct, vec![(1, 2)]);
        assert_eq!(conj, vec![(-1, 2)]);
        let d = q.divide((&int(0), &int(5)), (&int(2), &int(1))).unwrap();
        assert_eq!((d.x, d.y, d.branch), (int(1), int(2), DivisionBranch::Direct));
    }

    #[test]
    fn divide_falls_back_to_conjugate() {
        // 5 = Q(2, 1) = Q(2, −1); 13 = Q(3, 2). (3,2)∘(2,1) = (4, 7) gives 65.
        let q = QuadraticForm::integer(0, 1);
        let (bx, by) = q.compose((&int(3), &int(2)), (&int(2), &int(1))).unwrap();
        // dividing by the conjugate (2, −1) must use the second branch
        let d = q.divide((&bx, &by), (&int(2), &int(-1))).unwrap();
        assert_eq!(d.branch, DivisionBranch::Conjugate);
        let conj = q.conjugate(&int(2), &int(-1));
        assert_eq!(q.compose((&d.x, &d.y), (&conj.0, &conj.1)).unwrap(), (bx, by));
        // 3 is not a norm: division of (3, 0) by (1, 1) fails
        assert!(matches!(q.divide((&int(3), &int(0)), (&int(1), &int(1))), Err(FormError::NotDivisible { .. })));
    }

    #[test]
    fn complete_square_examples() {
        let r = Ring::PolyOverRationals;
        let q = QuadraticForm::new(r.parse("2*X").unwrap(), r.from_i64(-1)).unwrap();
        let c = q.complete_square().unwrap();
        assert_eq!(c.form.h(), &r.parse("-1 - X^2").unwrap());
        assert!(c.form.g().is_zero());
        let q0 = QuadraticForm::new(r.zero(), r.parse("3 + X").unwrap()).unwrap();
        assert_eq!(q0.complete_square().unwrap().form, q0);
        assert_eq!(
            QuadraticForm::integer(1, 5).complete_square(),
            Err(FormError::TwoNotInvertible(Ring::Integers))
        );
    }

    #[test]
    fn rabinowitsch_examples() {
        assert_eq!(rabinowitsch_check(5), Ok(true));
        assert_eq!(rabinowitsch_check(41), Ok(true));
        // x = 3 gives 18
        assert_eq!(rabinowitsch_check(6), Ok(false));
        assert_eq!(rabinowitsch_check(1), Err(FormError::DiscriminantOutOfRange(-3)));
        let class_one: Vec<i64> = (2..200).filter(|&k| rabinowitsch_check(k).unwrap()).collect();
        assert_eq!(class_one, vec![2, 3, 5, 11, 17, 41]);
    }

    #[test]
    fn small_witness_order() {
        let w = |g, h, t: i64| small_witness(&QuadraticForm::integer(g, h), &BigInt::from(t), 20);
        assert_eq!(w(1, -4, 2), Some((BigInt::from(2), BigInt::from(1))));
        assert_eq!(w(0, -6, -2), Some((BigInt::from(2), BigInt::from(1))));
        assert_eq!(w(0, 1, 1), Some((BigInt::from(1), BigInt::from(0))));
        assert_eq!(w(0, -6, 2), None);
    }

    fn fp(p: u64, cs: &[i64]) -> Element {
        let r = Ring::poly_fp(p).unwrap();
        let x = r.x().unwrap();
        cs.iter().enumerate().fold(r.zero(), |acc, (k, &c)| &acc + &(&r.from_i64(c) * &x.pow(k as u32)))
    }

    proptest! {
        #[test]
        fn composition_is_multiplicative_over_z(g in -3i64..4, h in -20i64..20, x in -50i64..50, y in -50i64..50, z in -50i64..50, w in -50i64..50) {
            let q = QuadraticForm::integer(g, h);
            let (bx, by) = q.compose((&int(x), &int(y)), (&int(z), &int(w))).unwrap();
            prop_assert_eq!(
                q.evaluate(&bx, &by).unwrap(),
                &q.evaluate(&int(x), &int(y)).unwrap() * &q.evaluate(&int(z), &int(w)).unwrap()
            );
            if !q.evaluate(&int(z), &int(w)).unwrap().is_zero() {
                let d = q.divide((&bx, &by), (&int(z), &int(w))).unwrap();
                if d.branch == DivisionBranch::Direct {
                    prop_assert_eq!(q.compose((&d.x, &d.y), (&int(z), &int(w))).unwrap(), (bx, by));
                }
                prop_assert_eq!(q.evaluate(&d.x, &d.y).unwrap(), q.evaluate(&int(x), &int(y)).unwrap());
            }
        }

        #[test]
        fn composition_is_multiplicative_over_polys(cs in prop::collection::vec(prop::collection::vec(-6i64..6, 0..4), 6)) {
            for p in [5u64, 7] {
                let e: Vec<Element> = cs.iter().map(|c| fp(p, c)).collect();
                let q = QuadraticForm::new(e[0].clone(), e[1].clone()).unwrap();
                let (bx, by) = q.compose((&e[2], &e[3]), (&e[4], &e[5])).unwrap();
                prop_assert_eq!(
                    q.evaluate(&bx, &by).unwrap(),
                    &q.evaluate(&e[2], &e[3]).unwrap() * &q.evaluate(&e[4], &e[5]).unwrap()
                );
                if !q.evaluate(&e[4], &e[5]).unwrap().is_zero() {
                    let d = q.divide((&bx, &by), (&e[4], &e[5])).unwrap();
                    prop_assert_eq!(d.branch, DivisionBranch::Direct);
                    prop_assert_eq!((d.x, d.y), (e[2].clone(), e[3].clone()));
                }
                let c = q.complete_square().unwrap();
                let (fx, fy) = c.forward(&e[2], &e[3]);
                prop_assert_eq!(c.form.evaluate(&fx, &fy).unwrap(), q.evaluate(&e[2], &e[3]).unwrap());
                prop_assert_eq!(c.backward(&fx, &fy), (e[2].clone(), e[3].clone()));
            }
        }
    }
}
