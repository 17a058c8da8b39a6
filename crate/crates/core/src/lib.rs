//! Proper representations of ring elements by binary quadratic forms
//! `x² + gxy + hy²`, computed with plain and modified continuants.
//!
//! The crate works over three Euclidean rings (see [`rings`]):
//!
//! * [`lift`] goes from a proper representation `m = u·Q(x, y)` to a root
//!   `z₀` of `Q(z, 1) ≡ 0 (mod m)`, in any of them;
//! * [`descent_poly`] goes back from such a root to a representation over
//!   `𝔽[X]` of odd characteristic;
//! * [`descent_int`] does the same over the integers for the discriminants
//!   listed in [`forms::catalog_negative`] and [`forms::catalog_positive`].
//!
//! ```
//! use quadrep::{descent_int, forms, rings::DivConvention};
//! use num_bigint::BigInt;
//!
//! let entry = forms::lookup_discriminant(-19).unwrap();
//! let out = descent_int::descend_negative(entry, &BigInt::from(251), &BigInt::from(52), DivConvention::Floor).unwrap();
//! let rep = out.representation().unwrap();
//! assert_eq!((rep.x.to_string(), rep.y.to_string()), ("9".into(), "5".into()));
//! ```

pub mod cli;
pub mod continuants;
pub mod descent_int;
pub mod descent_poly;
pub mod forms;
pub mod lift;
pub mod oracle;
pub mod rings;

mod json;

pub use forms::{QuadraticForm, Representation};
pub use rings::{DivConvention, Element, Ring, RingError};
