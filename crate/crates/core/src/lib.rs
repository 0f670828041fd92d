//! Exact arithmetic of numerical semigroups: the canonical value type with
//! cached invariants, exhaustive enumeration by Frobenius number / maximum
//! primitive / genus, the structural maps relating those classes, divisor-sum
//! identities between the two counting sequences, exact bound checks, and
//! Wilf-inequality verification.
//!
//! Everything here is `no_std` (with `alloc`) and pure: searches are
//! deterministic, integer-only, and interruptible through
//! [`budget::Interrupt`]. IO, file formats and thread scheduling live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod arith;
mod bits;

pub mod bounds;
pub mod budget;
pub mod enumerate;
pub mod error;
pub mod ratio;
pub mod semigroup;
pub mod transforms;
pub mod wilf;

pub use budget::{EnumerationBudget, Interrupt, SearchContext};
pub use error::{BudgetLimit, Error, FamilyPrecondition, Result};
pub use ratio::Rational;
pub use semigroup::{CanonicalKey, DepthPair, GeneratorSet, NumericalSemigroup};
