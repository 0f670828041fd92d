//! Error types shared across the crate.

use core::fmt;

/// Which budget limit stopped a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetLimit {
    /// Requested class index exceeds the configured `max_n`.
    MaxN { requested: u32, max_n: u32 },
    /// The node counter passed the configured cap.
    NodeCap { cap: u64 },
    /// An external interrupt source (typically a wall-clock deadline) fired.
    Interrupted,
}

/// A violated precondition of the interval witness-family constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyPrecondition {
    /// The construction requires multiplicity greater than 30.
    MultiplicityTooSmall { m: u32 },
    /// The chosen set must contain the multiplicity itself.
    MissingMultiplicity { m: u32 },
    /// An element lies outside the base interval.
    OutsideInterval { element: u32, interval_end: u32 },
    /// `|B|^2 >= 3m` failed.
    TooFewElements { size: u64, triple_m: u64 },
    /// `|B| < m/3` failed.
    TooManyElements { size: u64, m: u32 },
    /// The chosen set has gcd greater than 1.
    NonUnitGcd { gcd: u32 },
}

impl fmt::Display for FamilyPrecondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyPrecondition::MultiplicityTooSmall { m } => {
                write!(f, "multiplicity {m} is not greater than 30")
            }
            FamilyPrecondition::MissingMultiplicity { m } => {
                write!(f, "chosen set does not contain the multiplicity {m}")
            }
            FamilyPrecondition::OutsideInterval { element, interval_end } => {
                write!(f, "element {element} lies outside the base interval ending at {interval_end}")
            }
            FamilyPrecondition::TooFewElements { size, triple_m } => {
                write!(f, "|B|^2 = {} is below 3m = {triple_m}", size * size)
            }
            FamilyPrecondition::TooManyElements { size, m } => {
                write!(f, "|B| = {size} is not below m/3 with m = {m}")
            }
            FamilyPrecondition::NonUnitGcd { gcd } => {
                write!(f, "chosen set has gcd {gcd}, expected 1")
            }
        }
    }
}

/// Errors produced by semigroup construction, enumeration and the derived checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// A generator set with gcd > 1 does not generate a numerical semigroup.
    NonUnitGcd { gcd: u32 },
    /// A search limit tripped before the operation finished; no partial result
    /// is returned.
    BudgetExceeded(BudgetLimit),
    /// The operation is undefined for the full semigroup of all nonnegative
    /// integers.
    UndefinedForN,
    /// The semigroup has non-unit extended-left gcd, so it has no preimage
    /// under the max-primitive map.
    NotInImage { gcd_ext_left: u32 },
    /// Divisor data inconsistent with the scaling bijection.
    DivisorMismatch { d: u32, frobenius: i64 },
    /// A required sequence-table entry was absent.
    MissingTableEntry { n: u32 },
    /// Argument outside the stated domain of a check or identity.
    DomainError { what: &'static str, n: i64 },
    /// The sampled class is empty, so a fraction over it is undefined.
    EmptyClass { n: u32 },
    /// A witness-family precondition was violated.
    PreconditionFailed(FamilyPrecondition),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonUnitGcd { gcd } => {
                write!(f, "generator set has gcd {gcd}, expected 1")
            }
            Error::BudgetExceeded(BudgetLimit::MaxN { requested, max_n }) => {
                write!(f, "requested size {requested} exceeds budget max_n {max_n}")
            }
            Error::BudgetExceeded(BudgetLimit::NodeCap { cap }) => {
                write!(f, "search exceeded node cap {cap}")
            }
            Error::BudgetExceeded(BudgetLimit::Interrupted) => {
                write!(f, "search interrupted (time cap or external stop)")
            }
            Error::UndefinedForN => {
                write!(f, "operation undefined for the semigroup of all nonnegative integers")
            }
            Error::NotInImage { gcd_ext_left } => {
                write!(
                    f,
                    "extended left elements have gcd {gcd_ext_left}, so the semigroup has no \
                     preimage under the max-primitive map"
                )
            }
            Error::DivisorMismatch { d, frobenius } => {
                write!(f, "divisor {d} incompatible with Frobenius number {frobenius}")
            }
            Error::MissingTableEntry { n } => {
                write!(f, "sequence table has no entry for n = {n}")
            }
            Error::DomainError { what, n } => {
                write!(f, "{what}: argument {n} outside stated domain")
            }
            Error::EmptyClass { n } => {
                write!(f, "class at n = {n} is empty; fraction undefined")
            }
            Error::PreconditionFailed(p) => write!(f, "precondition failed: {p}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
