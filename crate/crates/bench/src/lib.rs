//! Fixtures shared by the benchmarks.

use bertini_core::ring::MERSENNE_61;
use bertini_core::rng::Stream;
use bertini_core::PencilSpec;

/// A random concrete pencil over `GF(2^61 − 1)`.
pub fn sampled_pencil(seed: u64) -> PencilSpec {
    PencilSpec::generic().sample(MERSENNE_61, &mut Stream::new(seed, 0)).expect("generic spec samples")
}
