//! Exact sparse multivariate polynomials over ℚ and prime fields.

pub mod modp;
mod monomial;
mod poly;
mod rat;
mod scalar;
pub(crate) mod sparse;
mod text;
mod variable;

pub use modp::{is_prime, rational_reconstruction, MERSENNE_61};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use rat::Rat;
pub use scalar::Scalar;
pub use variable::{Variable, NVARS};


use thiserror::Error;

/// Coefficient domain of a polynomial or scalar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Rational,
    Prime(u64),
}

impl Domain {
    /// A prime-field domain; `p` must be an odd prime below 2^63.
    pub fn prime(p: u64) -> Result<Domain, RingError> {
        if p > 2 && p < (1 << 63) && is_prime(p) {
            Ok(Domain::Prime(p))
        } else {
            Err(RingError::NotAPrime(p))
        }
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Domain::Rational => None,
            Domain::Prime(p) => Some(p),
        }
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Domain::Rational => f.write_str("QQ"),
            Domain::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(Domain, Domain),
    #[error("exponent exceeds 255")]
    ExponentOverflow,
    #[error("not divisible: the division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("no value bound for variable {0}")]
    MissingBinding(Variable),
    #[error("{0} is not an odd prime below 2^63")]
    NotAPrime(u64),
    #[error("denominator is not invertible modulo {0}")]
    NonInvertibleDenominator(u64),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
