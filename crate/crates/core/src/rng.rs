//! Counter-based deterministic generator used for every random choice.
//!
//! Output `i` of stream `s` under seed `k` is `mix(k ^ mix(s ^ mix(i)))` where
//! `mix` is the SplitMix64 finalizer applied to its input plus the golden-gamma
//! constant `0x9E3779B97F4A7C15`. Residues mod `p` are drawn by rejection: the
//! raw word is masked to the bit length of `p` and retried while `>= p`.

/// SplitMix64 finalizer of `x + γ`.
pub fn mix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug)]
pub struct Stream {
    seed: u64,
    stream: u64,
    counter: u64,
}

impl Stream {
    pub fn new(seed: u64, stream: u64) -> Stream {
        Stream { seed, stream, counter: 0 }
    }

    /// A stream whose id is derived from a label, so that named checks draw independent values.
    pub fn labelled(seed: u64, label: &str, index: u64) -> Stream {
        let h = label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        Stream::new(seed, mix(h ^ mix(index)))
    }

    pub fn next_u64(&mut self) -> u64 {
        let out = mix(self.seed ^ mix(self.stream ^ mix(self.counter)));
        self.counter += 1;
        out
    }

    /// Uniform residue in `[0, p)`.
    pub fn below(&mut self, p: u64) -> u64 {
        let mask = u64::MAX >> (p - 1).leading_zeros();
        loop {
            let x = self.next_u64() & mask;
            if x < p {
                return x;
            }
        }
    }

    /// Uniform nonzero residue.
    pub fn nonzero_below(&mut self, p: u64) -> u64 {
        loop {
            let x = self.below(p);
            if x != 0 {
                return x;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_in_range() {
        let mut a = Stream::new(0, 7);
        let mut b = Stream::new(0, 7);
        for _ in 0..100 {
            let x = a.below(101);
            assert_eq!(x, b.below(101));
            assert!(x < 101);
        }
        assert_ne!(Stream::new(0, 1).next_u64(), Stream::new(0, 2).next_u64());
        assert_ne!(Stream::new(1, 1).next_u64(), Stream::new(0, 1).next_u64());
    }

    #[test]
    fn first_outputs_are_pinned() {
        // guards the documented construction against accidental change
        let mut s = Stream::new(0, 0);
        let first = s.next_u64();
        assert_eq!(first, mix(mix(mix(0))));
    }
}
