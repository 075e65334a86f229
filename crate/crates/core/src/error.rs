use thiserror::Error;

use crate::ring::{RingError, Variable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("brace input already contains the primed coefficient {0}")]
    PrimedInput(Variable),
    #[error("brace input contains the non-coefficient variable {0}")]
    NonCoefficientInput(Variable),
    #[error("a projective point needs a nonzero coordinate")]
    ZeroPoint,
    #[error("degenerate: basepoint or contracted locus")]
    DegeneratePoint,
    #[error("pencil is not of Geiser type: {0} is nonzero")]
    SpecNotGeiser(Variable),
    #[error("pencil entries must share one domain")]
    MixedSpec,
    #[error("operation needs a concrete pencil")]
    NeedsConcrete,
    #[error("operation needs a generic pencil over the rationals")]
    NeedsGeneric,
    #[error("free term {0} does not vanish")]
    NonzeroFreeTerm(&'static str),
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),
    #[error("sextic form is not a perfect square")]
    NotAPerfectSquare,
    #[error("(1, u2, u3) is not a basepoint of the pencil")]
    NotABasepoint,
    #[error("affine chart undefined: w'(y) = 0")]
    ChartUndefined,
    #[error("{skipped} of {total} samples were degenerate")]
    ExcessiveDegeneracy { skipped: usize, total: usize },
    #[error("found {found} of {wanted} fixed points within the retry budget")]
    SamplingExhausted { found: usize, wanted: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
