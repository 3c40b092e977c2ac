use thiserror::Error;

use crate::flats::LfViolation;
use crate::pointline::PlViolation;

/// Errors raised by constructors and checkers.
///
/// Variants fall into two classes: malformed input (wrong shapes, unparsable
/// elements, guards) and axiom violations, where the input was well formed
/// but fails one of the checked axioms. [`Error::is_violation`] separates
/// them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {elem} does not belong to tract {tract}")]
    ElementMismatch { elem: String, tract: String },
    #[error("tract mismatch: {0} vs {1}")]
    TractMismatch(String, String),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("cannot parse {0:?} as a tract element")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("enumeration guard exceeded: {0}")]
    Guard(String),

    #[error("basis family is empty")]
    NoBases,
    #[error("basis exchange fails for {b1:?}, {b2:?} at element {x}")]
    Exchange { b1: Vec<usize>, b2: Vec<usize>, x: usize },
    #[error("{0:?} is not a flat")]
    NotAFlat(Vec<usize>),
    #[error("flat {flat:?} has corank {corank}, expected {expected}")]
    WrongCorank { flat: Vec<usize>, corank: usize, expected: usize },

    #[error("GP1 violated: {0}")]
    Gp1(String),
    #[error("GP3 violated at tuple {tuple:?}")]
    Gp3 { tuple: Vec<usize> },

    #[error("R1 violated: hyperplane function for {hyperplane:?} has support {support:?}")]
    R1 { hyperplane: Vec<usize>, support: Vec<usize> },
    #[error("R2 violated: hyperplane functions {triple:?} are linearly independent")]
    R2 { triple: [Vec<usize>; 3] },
    #[error("representation is incomplete: no hyperplane function for {0:?}")]
    MissingHyperplane(Vec<usize>),
    #[error("inconsistent fundamental relation: {0}")]
    Inconsistent(String),
    #[error("Lambda-representation violated: {0}")]
    Lambda2(String),

    #[error("{0}")]
    Lf(LfViolation),
    #[error("{0}")]
    Pl(PlViolation),

    #[error("matroid is not simple: {0}")]
    NotSimple(String),
    #[error("invalid arrangement: {0}")]
    Arrangement(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for axiom failures on well-formed input.
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            Error::NoBases
                | Error::Exchange { .. }
                | Error::Gp1(_)
                | Error::Gp3 { .. }
                | Error::R1 { .. }
                | Error::R2 { .. }
                | Error::MissingHyperplane(_)
                | Error::Inconsistent(_)
                | Error::Lambda2(_)
                | Error::Lf(_)
                | Error::Pl(_)
                | Error::NotSimple(_)
                | Error::Arrangement(_)
                | Error::Internal(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
