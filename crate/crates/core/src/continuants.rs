//! Continuants `[q₁,…,qₙ]` and modified continuants `[q₁,…,qₙ; h, s]`.
//!
//! The plain continuant follows the three-term recurrence
//! `[q₁,…,qₙ] = [q₁,…,qₙ₋₁]·qₙ + [q₁,…,qₙ₋₂]` with `[ ] = 1`. The modified
//! continuant replaces the coupling between positions `s` and `s+1` by `h`:
//! it is the determinant of the tridiagonal matrix with diagonal `qᵢ`, ones
//! above the diagonal, and `-1` below it except for `-h` at `(s+1, s)`.
//! A mark position of `0` or `≥ n` gives back the plain continuant.

use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::oracle;
use crate::rings::{Element, Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuantError {
    #[error("sequence elements belong to different rings")]
    MixedRings,
    #[error("mark position {s} outside 1..{n}")]
    MarkOutOfRange { s: usize, n: usize },
}

impl From<RingError> for ContinuantError {
    fn from(_: RingError) -> Self {
        ContinuantError::MixedRings
    }
}

/// A continuant argument `(q₁,…,qₙ; h, s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedSequence {
    ring: Ring,
    items: Vec<Element>,
    mark_value: Element,
    mark_pos: usize,
}

impl MarkedSequence {
    /// The ring is taken from `mark_value`, so empty sequences are fine.
    pub fn new(items: Vec<Element>, mark_value: Element, mark_pos: usize) -> Result<Self, ContinuantError> {
        let ring = mark_value.ring();
        ring.check(&items)?;
        Ok(MarkedSequence { ring, items, mark_value, mark_pos })
    }

    /// An unmarked sequence; its modified continuant is the plain one.
    pub fn plain(ring: Ring, items: Vec<Element>) -> Result<Self, ContinuantError> {
        ring.check(&items)?;
        Ok(MarkedSequence { ring, items, mark_value: ring.zero(), mark_pos: 0 })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn items(&self) -> &[Element] {
        &self.items
    }

    pub fn mark_value(&self) -> &Element {
        &self.mark_value
    }

    pub fn mark_pos(&self) -> usize {
        self.mark_pos
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// True when the mark is inactive (`s = 0` or `s ≥ n`).
    pub fn is_plain(&self) -> bool {
        self.mark_pos == 0 || self.mark_pos >= self.items.len()
    }

    /// `(qₙ,…,q₁; h, n − s)`, which has the same modified continuant.
    pub fn reversed(&self) -> MarkedSequence {
        let n = self.items.len();
        let mut items = self.items.clone();
        items.reverse();
        MarkedSequence {
            ring: self.ring,
            items,
            mark_value: self.mark_value.clone(),
            mark_pos: n.saturating_sub(self.mark_pos),
        }
    }
}

/// Rolling evaluation of the recurrence over any commutative ring type.
fn plain_with<T>(items: &[T], zero: T, one: T) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let (mut prev, mut cur) = (zero, one);
    for q in items {
        let next = &(&cur * q) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn modified_with<T: Clone>(items: &[T], h: &T, s: usize, zero: T, one: T) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let n = items.len();
    if s == 0 || s >= n {
        return plain_with(items, zero, one);
    }
    // [q₁..q_s] and [q₁..q_{s-1}]
    let (mut prev, mut cur) = (zero, one);
    for q in &items[..s] {
        let next = &(&cur * q) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    // [q₁..q_{s+1}; h, s] = [q₁..q_s]·q_{s+1} + [q₁..q_{s-1}]·h
    let marked = &(&cur * &items[s]) + &(&prev * h);
    prev = std::mem::replace(&mut cur, marked);
    for q in &items[s + 1..] {
        let next = &(&cur * q) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// The plain continuant `[q₁,…,qₙ]`; the empty continuant is `1` of `ring`.
pub fn continuant(ring: Ring, items: &[Element]) -> Result<Element, ContinuantError> {
    ring.check(items)?;
    Ok(plain_with(items, ring.zero(), ring.one()))
}

/// Plain continuant of rational numbers.
pub fn rational_continuant(items: &[BigRational]) -> BigRational {
    plain_with(items, BigRational::zero(), BigRational::one())
}

/// The modified continuant `[q₁,…,qₙ; h, s]` by the linear recurrence.
pub fn modified_continuant(seq: &MarkedSequence) -> Element {
    let ring = seq.ring;
    modified_with(&seq.items, &seq.mark_value, seq.mark_pos, ring.zero(), ring.one())
}

/// The modified continuant as an `n × n` tridiagonal determinant, computed by
/// fraction-free elimination. Used only to cross-check the recurrence.
pub fn tridiagonal_det_oracle(seq: &MarkedSequence) -> Element {
    let ring = seq.ring;
    let n = seq.items.len();
    let mut matrix = vec![vec![ring.zero(); n]; n];
    for i in 0..n {
        matrix[i][i] = seq.items[i].clone();
        if i + 1 < n {
            matrix[i][i + 1] = ring.one();
            // 1-based entry (s+1, s) is 0-based (s, s-1)
            matrix[i + 1][i] = if seq.mark_pos >= 1 && i + 1 == seq.mark_pos {
                -&seq.mark_value
            } else {
                -&ring.one()
            };
        }
    }
    oracle::determinant(ring, &matrix)
}

/// `[q₁..q_{s−1}]·h·[q_{s+2}..qₙ] + [q₁..q_s]·[q_{s+1}..qₙ]`, valid for
/// `1 ≤ s < n`.
pub fn cutting_expansion(seq: &MarkedSequence) -> Result<Element, ContinuantError> {
    let n = seq.items.len();
    let s = seq.mark_pos;
    if s == 0 || s >= n {
        return Err(ContinuantError::MarkOutOfRange { s, n });
    }
    let ring = seq.ring;
    let q = &seq.items;
    let c = |range: &[Element]| plain_with(range, ring.zero(), ring.one());
    let through_mark = &(&c(&q[..s - 1]) * &seq.mark_value) * &c(&q[s + 1..]);
    let split = &c(&q[..s]) * &c(&q[s..]);
    Ok(&through_mark + &split)
}
