//! Exact arithmetic in the three supported Euclidean rings: the integers,
//! polynomials over a prime field of odd characteristic, and polynomials
//! over the rationals.
//!
//! Every value is an [`Element`] tagged with its ring. Binary operators on
//! elements panic if the operands come from different rings; the public
//! algorithms validate their inputs with [`Ring::of_all`] first and report
//! [`RingError::MixedRings`] instead.

mod field;
mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use field::{is_prime_u64, Field, PrimeField, Rationals};
pub use poly::{display_elem, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero elements")]
    BothZero,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Which of the three Euclidean rings a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Ring {
    Integers,
    PolyOverPrimeField { p: u64 },
    PolyOverRationals,
}

impl Ring {
    /// 𝔽_p[X] for an odd prime `p`.
    pub fn poly_fp(p: u64) -> Result<Ring, RingError> {
        if p < 3 || !is_prime_u64(p) {
            return Err(RingError::InvalidPrime(p));
        }
        Ok(Ring::PolyOverPrimeField { p })
    }

    pub fn is_polynomial(&self) -> bool {
        !matches!(self, Ring::Integers)
    }

    /// The common ring of a collection of elements.
    ///
    /// Returns `Ok(None)` for an empty collection.
    pub fn of_all<'a, I>(items: I) -> Result<Option<Ring>, RingError>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        let mut ring = None;
        for e in items {
            match ring {
                None => ring = Some(e.ring()),
                Some(r) if r != e.ring() => return Err(RingError::MixedRings),
                Some(_) => {}
            }
        }
        Ok(ring)
    }

    /// Checks that every element belongs to `self`.
    pub fn check<'a, I>(&self, items: I) -> Result<(), RingError>
    where
        I: IntoIterator<Item = &'a Element>,
    {
        match Ring::of_all(items)? {
            Some(r) if r != *self => Err(RingError::MixedRings),
            _ => Ok(()),
        }
    }

    pub fn zero(&self) -> Element {
        self.from_i64(0)
    }

    pub fn one(&self) -> Element {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Element {
        self.from_bigint(&BigInt::from(n))
    }

    /// Embeds an integer as a constant of this ring.
    pub fn from_bigint(&self, n: &BigInt) -> Element {
        match *self {
            Ring::Integers => Element::Int(n.clone()),
            Ring::PolyOverPrimeField { p } => {
                let f = PrimeField::new_unchecked(p);
                Element::Fp(Poly::constant(f, f.from_bigint(n)))
            }
            Ring::PolyOverRationals => Element::Rat(Poly::constant(Rationals, Rationals.from_bigint(n))),
        }
    }

    /// The constant polynomial `num/den` (rationals) or `num * den^-1` (𝔽_p).
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Element, RingError> {
        match *self {
            Ring::Integers => {
                let (q, r) = num.div_rem(den);
                if den.is_zero() {
                    Err(RingError::DivisionByZero)
                } else if !r.is_zero() {
                    Err(RingError::NotDivisible(num.to_string(), den.to_string()))
                } else {
                    Ok(Element::Int(q))
                }
            }
            Ring::PolyOverPrimeField { p } => {
                let f = PrimeField::new_unchecked(p);
                let c = f.from_ratio(num, den).ok_or(RingError::DivisionByZero)?;
                Ok(Element::Fp(Poly::constant(f, c)))
            }
            Ring::PolyOverRationals => {
                let c = Rationals.from_ratio(num, den).ok_or(RingError::DivisionByZero)?;
                Ok(Element::Rat(Poly::constant(Rationals, c)))
            }
        }
    }

    /// The indeterminate `X`; `None` over the integers.
    pub fn x(&self) -> Option<Element> {
        match *self {
            Ring::Integers => None,
            Ring::PolyOverPrimeField { p } => {
                Some(Element::Fp(Poly::monomial(PrimeField::new_unchecked(p), 1, 1)))
            }
            Ring::PolyOverRationals => Some(Element::Rat(Poly::monomial(Rationals, BigRational::one(), 1))),
        }
    }

    /// Parses the text syntax: decimal integers, or polynomials such as
    /// `5/3 + 4*X + 2*X^2`.
    pub fn parse(&self, text: &str) -> Result<Element, RingError> {
        parse::parse_element(*self, text)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::PolyOverPrimeField { p } => write!(f, "F_{p}[X]"),
            Ring::PolyOverRationals => write!(f, "Q[X]"),
        }
    }
}

/// Remainder convention for integer division. Polynomial division is unique
/// and ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivConvention {
    /// Remainder has the sign of the divisor: `0 <= r < b` for `b > 0`.
    #[default]
    Floor,
    /// `|r| <= |b|/2`, ties resolved toward the positive remainder.
    LeastAbs,
}

/// A value in one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Int(BigInt),
    Fp(Poly<PrimeField>),
    Rat(Poly<Rationals>),
}

impl From<BigInt> for Element {
    fn from(n: BigInt) -> Self {
        Element::Int(n)
    }
}

impl From<i64> for Element {
    fn from(n: i64) -> Self {
        Element::Int(BigInt::from(n))
    }
}

impl Element {
    pub fn ring(&self) -> Ring {
        match self {
            Element::Int(_) => Ring::Integers,
            Element::Fp(p) => Ring::PolyOverPrimeField { p: p.field().modulus() },
            Element::Rat(_) => Ring::PolyOverRationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Int(n) => n.is_zero(),
            Element::Fp(p) => p.is_zero(),
            Element::Rat(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring().one()
    }

    pub fn as_int(&self) -> Option<&BigInt> {
        match self {
            Element::Int(n) => Some(n),
            _ => None,
        }
    }

    /// Polynomial degree; `None` for integers and for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        match self {
            Element::Int(_) => None,
            Element::Fp(p) => p.degree(),
            Element::Rat(p) => p.degree(),
        }
    }

    /// Euclidean function: `|a|` on integers, `2^deg a` on nonzero polynomials.
    pub fn norm(&self) -> BigUint {
        match self {
            Element::Int(n) => n.magnitude().clone(),
            _ => match self.degree() {
                None => BigUint::zero(),
                Some(d) => BigUint::one() << d,
            },
        }
    }

    /// Euclidean division `self = q*b + r` with `norm(r) < norm(b)`.
    pub fn div_rem(&self, b: &Element, convention: DivConvention) -> Result<(Element, Element), RingError> {
        if self.ring() != b.ring() {
            return Err(RingError::MixedRings);
        }
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(match (self, b) {
            (Element::Int(a), Element::Int(b)) => {
                let (q, r) = int_div_rem(a, b, convention);
                (Element::Int(q), Element::Int(r))
            }
            (Element::Fp(a), Element::Fp(b)) => {
                let (q, r) = a.div_rem(b).expect("nonzero divisor");
                (Element::Fp(q), Element::Fp(r))
            }
            (Element::Rat(a), Element::Rat(b)) => {
                let (q, r) = a.div_rem(b).expect("nonzero divisor");
                (Element::Rat(q), Element::Rat(r))
            }
            _ => unreachable!("rings checked above"),
        })
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, b: &Element) -> Result<Element, RingError> {
        let (q, r) = self.div_rem(b, DivConvention::Floor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::NotDivisible(self.to_string(), b.to_string()))
        }
    }

    /// True when `self` divides `other`. Zero divides only zero.
    pub fn divides(&self, other: &Element) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        matches!(other.div_rem(self, DivConvention::Floor), Ok((_, r)) if r.is_zero())
    }

    /// Units are ±1 over the integers and nonzero constants over polynomials.
    pub fn is_unit(&self) -> bool {
        match self {
            Element::Int(n) => n.magnitude().is_one(),
            _ => self.degree() == Some(0),
        }
    }

    pub fn invert_unit(&self) -> Result<Element, RingError> {
        if !self.is_unit() {
            return Err(RingError::NotAUnit(self.to_string()));
        }
        Ok(match self {
            Element::Int(n) => Element::Int(n.clone()),
            Element::Fp(p) => {
                let f = *p.field();
                Element::Fp(Poly::constant(f, f.inv(&p.coeffs()[0]).expect("unit")))
            }
            Element::Rat(p) => Element::Rat(Poly::constant(Rationals, p.coeffs()[0].recip())),
        })
    }

    /// Splits `self` into `(normalized, unit)` with `self = unit * normalized`;
    /// normalized integers are nonnegative and normalized polynomials monic.
    /// Zero normalizes to `(0, 1)`.
    pub fn normalize(&self) -> (Element, Element) {
        let ring = self.ring();
        if self.is_zero() {
            return (self.clone(), ring.one());
        }
        let unit = match self {
            Element::Int(n) => Element::Int(if n.is_negative() { -BigInt::one() } else { BigInt::one() }),
            Element::Fp(p) => Element::Fp(Poly::constant(*p.field(), *p.leading().expect("nonzero"))),
            Element::Rat(p) => Element::Rat(Poly::constant(Rationals, p.leading().expect("nonzero").clone())),
        };
        let normalized = self * &unit.invert_unit().expect("leading unit");
        (normalized, unit)
    }

    /// Reduction modulo `m`: `[0, |m|)` on integers, degree below `deg m`
    /// on polynomials.
    pub fn reduce_mod(&self, m: &Element) -> Result<Element, RingError> {
        match (self, m) {
            (Element::Int(a), Element::Int(b)) if !b.is_zero() => Ok(Element::Int(a.mod_floor(&b.abs()))),
            _ => self.div_rem(m, DivConvention::Floor).map(|(_, r)| r),
        }
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: u32) -> Element {
        (0..k).fold(self.ring().one(), |acc, _| &acc * self)
    }

    /// A constant's value as a rational, when it is one (integers, and
    /// degree ≤ 0 rational polynomials).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Element::Int(n) => Some(BigRational::from_integer(n.clone())),
            Element::Rat(p) if p.degree().unwrap_or(0) == 0 => Some(p.coeff(0)),
            _ => None,
        }
    }

    fn binop(
        &self,
        other: &Element,
        ints: impl Fn(&BigInt, &BigInt) -> BigInt,
        fp: impl Fn(&Poly<PrimeField>, &Poly<PrimeField>) -> Poly<PrimeField>,
        rat: impl Fn(&Poly<Rationals>, &Poly<Rationals>) -> Poly<Rationals>,
    ) -> Element {
        match (self, other) {
            (Element::Int(a), Element::Int(b)) => Element::Int(ints(a, b)),
            (Element::Fp(a), Element::Fp(b)) if a.field() == b.field() => Element::Fp(fp(a, b)),
            (Element::Rat(a), Element::Rat(b)) => Element::Rat(rat(a, b)),
            _ => panic!("arithmetic on elements of different rings: {} and {}", self.ring(), other.ring()),
        }
    }
}

fn int_div_rem(a: &BigInt, b: &BigInt, convention: DivConvention) -> (BigInt, BigInt) {
    match convention {
        DivConvention::Floor => a.div_mod_floor(b),
        DivConvention::LeastAbs => {
            let modulus = b.abs();
            let mut r = a.mod_floor(&modulus);
            if &r * 2 > modulus {
                r -= &modulus;
            }
            ((a - &r) / b, r)
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(n) => write!(f, "{n}"),
            Element::Fp(p) => write!(f, "{p}"),
            Element::Rat(p) => write!(f, "{p}"),
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.binop(rhs, |a, b| a + b, Poly::add, Poly::add)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.binop(rhs, |a, b| a - b, Poly::sub, Poly::sub)
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.binop(rhs, |a, b| a * b, Poly::mul, Poly::mul)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        match self {
            Element::Int(n) => Element::Int(-n),
            Element::Fp(p) => Element::Fp(p.neg()),
            Element::Rat(p) => Element::Rat(p.neg()),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element { (&self).$m(&rhs) }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element { (&self).$m(rhs) }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Output of the Euclidean algorithm with its quotient sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientTrace {
    /// `q_1, …, q_n` in division order.
    pub quotients: Vec<Element>,
    /// `r_1, …, r_n`; the last one is zero whenever the list is nonempty.
    pub remainders: Vec<Element>,
    /// Normalized gcd (nonnegative integer or monic polynomial).
    pub gcd: Element,
    /// The unit stripped from the last nonzero remainder.
    pub unit: Element,
}

impl QuotientTrace {
    /// The last nonzero remainder, `unit * gcd`.
    pub fn raw_gcd(&self) -> Element {
        &self.unit * &self.gcd
    }
}

/// Runs the Euclidean algorithm on `(a, b)` recording every quotient, so
/// that `a = [q_1..q_n] * g` and `b = [q_2..q_n] * g` for the raw gcd `g`.
pub fn gcd_trace(a: &Element, b: &Element, convention: DivConvention) -> Result<QuotientTrace, RingError> {
    if a.ring() != b.ring() {
        return Err(RingError::MixedRings);
    }
    if a.is_zero() && b.is_zero() {
        return Err(RingError::BothZero);
    }
    let mut quotients = Vec::new();
    let mut remainders = Vec::new();
    let (mut prev, mut cur) = (a.clone(), b.clone());
    while !cur.is_zero() {
        let (q, r) = prev.div_rem(&cur, convention)?;
        quotients.push(q);
        remainders.push(r.clone());
        prev = std::mem::replace(&mut cur, r);
    }
    let (gcd, unit) = prev.normalize();
    Ok(QuotientTrace { quotients, remainders, gcd, unit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Element {
        Element::from(n)
    }

    #[test]
    fn norm_examples() {
        assert_eq!(int(0).norm(), BigUint::zero());
        assert_eq!(int(-7).norm(), BigUint::from(7u32));
        let m = Ring::PolyOverRationals.parse("1+2*X+3*X^2+2*X^3+1*X^4").unwrap();
        assert_eq!(m.norm(), BigUint::from(16u32));
        assert_eq!(Ring::PolyOverRationals.zero().norm(), BigUint::zero());
    }

    #[test]
    fn integer_division_conventions() {
        assert_eq!(int(52).div_rem(&int(11), DivConvention::Floor).unwrap(), (int(4), int(8)));
        assert_eq!(int(52).div_rem(&int(11), DivConvention::LeastAbs).unwrap(), (int(5), int(-3)));
        // ties go to the positive remainder
        assert_eq!(int(7).div_rem(&int(2), DivConvention::LeastAbs).unwrap(), (int(3), int(1)));
        assert_eq!(int(-7).div_rem(&int(2), DivConvention::LeastAbs).unwrap(), (int(-4), int(1)));
        // floor mirrors for negative divisors
        assert_eq!(int(7).div_rem(&int(-3), DivConvention::Floor).unwrap(), (int(-3), int(-2)));
        assert_eq!(int(1).div_rem(&int(0), DivConvention::Floor), Err(RingError::DivisionByZero));
    }

    #[test]
    fn rational_polynomial_division_example() {
        let r = Ring::PolyOverRationals;
        let a = r.parse("1 + X + X^3 + X^4").unwrap();
        let b = r.parse("1/2 + X^2 + 1/2*X^3").unwrap();
        let (q, rem) = a.div_rem(&b, DivConvention::Floor).unwrap();
        assert_eq!(q, r.parse("-2 + 2*X").unwrap());
        assert_eq!(rem, r.parse("2 + 2*X^2").unwrap());
    }

    #[test]
    fn gcd_trace_nine_five() {
        let t = gcd_trace(&int(9), &int(5), DivConvention::Floor).unwrap();
        assert_eq!(t.quotients, vec![int(1), int(1), int(4)]);
        assert_eq!(t.gcd, int(1));
        assert_eq!(t.remainders.last(), Some(&int(0)));
    }

    #[test]
    fn gcd_trace_degenerate() {
        let t = gcd_trace(&int(-6), &int(0), DivConvention::Floor).unwrap();
        assert!(t.quotients.is_empty());
        assert_eq!(t.gcd, int(6));
        assert_eq!(t.unit, int(-1));
        assert_eq!(gcd_trace(&int(0), &int(0), DivConvention::Floor), Err(RingError::BothZero));
    }

    #[test]
    fn gcd_trace_over_f5() {
        let r = Ring::poly_fp(5).unwrap();
        let a = r.parse("3 + 2*X + X^2").unwrap();
        let b = r.parse("1 + X").unwrap();
        let t = gcd_trace(&a, &b, DivConvention::Floor).unwrap();
        // X^2 + 2X + 3 = (X + 1)(X + 1) + 2, then X + 1 = (3X + 3) * 2
        assert_eq!(t.quotients, vec![r.parse("1 + X").unwrap(), r.parse("3 + 3*X").unwrap()]);
        assert!(t.gcd.is_one());
        assert_eq!(t.unit, r.from_i64(2));
        assert_eq!(t.raw_gcd(), r.from_i64(2));
    }

    #[test]
    fn units() {
        assert_eq!(int(-1).invert_unit().unwrap(), int(-1));
        let r = Ring::PolyOverRationals;
        let u = r.parse("9/16").unwrap();
        assert!(u.is_unit());
        assert_eq!(u.invert_unit().unwrap(), r.parse("16/9").unwrap());
        let x1 = r.parse("X + 1").unwrap();
        assert!(!x1.is_unit());
        assert!(matches!(x1.invert_unit(), Err(RingError::NotAUnit(_))));
        assert!(!r.zero().is_unit());
        assert!(matches!(int(2).invert_unit(), Err(RingError::NotAUnit(_))));
    }

    #[test]
    fn invalid_primes_rejected() {
        assert_eq!(Ring::poly_fp(2), Err(RingError::InvalidPrime(2)));
        assert_eq!(Ring::poly_fp(9), Err(RingError::InvalidPrime(9)));
        assert!(Ring::poly_fp(7).is_ok());
    }

    #[test]
    fn mixed_rings_detected() {
        let a = int(1);
        let b = Ring::PolyOverRationals.one();
        assert_eq!(a.div_rem(&b, DivConvention::Floor), Err(RingError::MixedRings));
        assert_eq!(Ring::of_all([&a, &b]), Err(RingError::MixedRings));
        let f5 = Ring::poly_fp(5).unwrap().one();
        let f7 = Ring::poly_fp(7).unwrap().one();
        assert_eq!(gcd_trace(&f5, &f7, DivConvention::Floor), Err(RingError::MixedRings));
    }

    fn any_convention() -> impl Strategy<Value = DivConvention> {
        prop_oneof![Just(DivConvention::Floor), Just(DivConvention::LeastAbs)]
    }

    fn poly_text(max_deg: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-9i64..10, 1i64..5), 0..=max_deg + 1)
    }

    fn rat_poly(coeffs: &[(i64, i64)]) -> Element {
        let cs = coeffs.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
        Element::Rat(Poly::new(Rationals, cs))
    }

    fn fp_poly(p: u64, coeffs: &[(i64, i64)]) -> Element {
        let f = PrimeField::new_unchecked(p);
        Element::Fp(Poly::new(f, coeffs.iter().map(|&(n, _)| f.reduce_i128(n as i128)).collect()))
    }

    proptest! {
        #[test]
        fn integer_division_identity(a in -10_000i64..10_000, b in -500i64..500, conv in any_convention()) {
            prop_assume!(b != 0);
            let (q, r) = int(a).div_rem(&int(b), conv).unwrap();
            prop_assert_eq!(&(&q * &int(b)) + &r, int(a));
            prop_assert!(r.norm() < int(b).norm());
            if conv == DivConvention::LeastAbs {
                prop_assert!(BigInt::from(2) * r.as_int().unwrap().abs() <= BigInt::from(b.abs()));
            } else {
                prop_assert!(r.is_zero() || r.as_int().unwrap().is_negative() == (b < 0));
            }
        }

        #[test]
        fn polynomial_division_identity(a in poly_text(6), b in poly_text(4), p in prop_oneof![Just(3u64), Just(5), Just(7), Just(101)]) {
            for (a, b) in [(rat_poly(&a), rat_poly(&b)), (fp_poly(p, &a), fp_poly(p, &b))] {
                if b.is_zero() { continue; }
                let (q, r) = a.div_rem(&b, DivConvention::Floor).unwrap();
                prop_assert_eq!(&(&q * &b) + &r, a.clone());
                prop_assert!(r.norm() < b.norm());
            }
        }

        #[test]
        fn rational_addition_is_exact(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
            let r = Ring::PolyOverRationals;
            let x = r.from_ratio(&a.into(), &b.into()).unwrap();
            let y = r.from_ratio(&c.into(), &d.into()).unwrap();
            let expected = r.from_ratio(&(a * d + c * b).into(), &(b * d).into()).unwrap();
            prop_assert_eq!(&x + &y, expected);
        }

        #[test]
        fn gcd_trace_remainders_shrink(a in -5000i64..5000, b in -5000i64..5000, conv in any_convention()) {
            prop_assume!(a != 0 || b != 0);
            let t = gcd_trace(&int(a), &int(b), conv).unwrap();
            let mut last = int(b).norm();
            for r in &t.remainders {
                prop_assert!(r.norm() < last);
                last = r.norm();
            }
            prop_assert!(!t.gcd.as_int().unwrap().is_negative());
            prop_assert_eq!(BigInt::from(a).gcd(&BigInt::from(b)), t.gcd.as_int().unwrap().clone());
        }
    }
}
