//! Dense univariate polynomials over a [`Field`], coefficients stored low to
//! high with no trailing zeros.

use std::fmt;

use super::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    /// Builds a polynomial and strips trailing zeros.
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Poly::constant(field, one)
    }

    /// The monomial `c * X^k`.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> F::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.field.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.field.neg(c)).collect();
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::new(f.clone(), out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let f = &self.field;
        let lead_inv = f.inv(divisor.leading()?)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, b));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Some((Poly::new(f.clone(), quot), Poly::new(f.clone(), rem)))
    }

    /// Evaluates at a field element by Horner's rule.
    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let f = &self.field;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let neg = f.is_negative(c);
            let shown = if neg { f.neg(c) } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(out, "-")?,
                (true, false) => {}
                (false, true) => write!(out, " - ")?,
                (false, false) => write!(out, " + ")?,
            }
            first = false;
            f.fmt_elem(&shown, out)?;
            match k {
                0 => {}
                1 => write!(out, "*X")?,
                _ => write!(out, "*X^{k}")?,
            }
        }
        Ok(())
    }
}

struct DisplayElem<'a, F: Field>(&'a F, &'a F::Elem);

impl<F: Field> fmt::Display for DisplayElem<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_elem(self.1, f)
    }
}

/// Formats a bare field element with the field's own syntax.
pub fn display_elem<'a, F: Field>(field: &'a F, a: &'a F::Elem) -> impl fmt::Display + 'a {
    DisplayElem(field, a)
}
