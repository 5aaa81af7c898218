//! Exact local L-factors for representations of GL(n) over a p-adic field.
//!
//! Everything lives in a multiplicative group of monomials
//! `zeta * q^a * z1^b1 * ...` ([`Monomial`]). Euler factors are multisets of
//! inverse roots ([`EulerFactor`]) in the variable `X = q^-s`.
//!
//! The crate computes three families of factors:
//!
//! * Rankin-Selberg pair factors `L(pi, pi', s)` from the derivative and
//!   exceptional-pole recursion ([`pairs`]),
//! * linear-period factors `L^lin(pi, chi_alpha, s)` for discrete series and
//!   Langlands-type products, plus a second route through derivatives
//!   ([`bflin`]),
//! * Artin factors of Weil-Deligne parameters including exterior and
//!   symmetric squares ([`galois`]).
//!
//! ```
//! use lff_core::{Cuspidal, Segment, bflin};
//!
//! let chi = Cuspidal::character("z1".parse().unwrap());
//! let st2 = Segment::centered(chi, 2);
//! let report = bflin::verify_main_theorem(&st2.into()).unwrap();
//! assert!(report.equal);
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bflin;
pub mod cosets;
pub mod distinction;
mod error;
pub mod euler;
pub mod galois;
pub mod monoid;
pub mod pairs;
pub mod reps;

pub use error::{Error, Result};
pub use euler::EulerFactor;
pub use monoid::{Monomial, Q};
pub use reps::{Cuspidal, CuspidalBase, FormType, GLRep, Label, Segment, SelfDual};
