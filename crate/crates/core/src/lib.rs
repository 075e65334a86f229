//! Exact constructions for the Bertini and Geiser involutions of pencils of plane cubics.

pub mod bertini;
pub mod brace;
mod error;
pub mod geiser;
pub mod pencil;
pub mod ring;
pub mod rng;
pub mod sigma2;
pub mod verify;

pub use bertini::{apply_bertini, build_bundle, w3_of, BertiniBundle};
pub use error::{Error, Result};
pub use geiser::{build_geiser, geiser_apply, GeiserBundle};
pub use pencil::{PencilSpec, ProjPoint};
pub use ring::{Domain, Monomial, Polynomial, RingError, Scalar, Variable};
