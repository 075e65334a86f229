use super::variable::{Variable, NVARS};
use super::RingError;

const BYTES: usize = NVARS + 1;

/// A power product over the fixed variable universe.
///
/// Byte 0 holds the total degree and bytes `1..=21` the exponents in canonical
/// variable order, packed big-endian into three words. Comparing the words
/// therefore compares the byte strings lexicographically, which is the graded
/// lexicographic order used everywhere in the crate. Since every exponent is
/// bounded by the total degree, a product whose degree fits a byte can be
/// formed by plain word addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    words: [u64; 3],
}

#[inline]
fn slot(i: usize) -> (usize, u32) {
    (i / 8, 56 - 8 * (i % 8) as u32)
}

impl Monomial {
    pub const ONE: Monomial = Monomial { words: [0; 3] };

    #[inline]
    fn byte(&self, i: usize) -> u8 {
        let (w, s) = slot(i);
        (self.words[w] >> s) as u8
    }

    #[inline]
    fn set_byte(&mut self, i: usize, v: u8) {
        let (w, s) = slot(i);
        self.words[w] = (self.words[w] & !(0xffu64 << s)) | ((v as u64) << s);
    }

    pub fn var(v: Variable) -> Monomial {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Variable, e: u8) -> Monomial {
        let mut m = Monomial::ONE;
        m.set_byte(0, e);
        m.set_byte(v.index() + 1, e);
        m
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (Variable, u32)>>(pairs: I) -> Result<Monomial, RingError> {
        let mut m = Monomial::ONE;
        for (v, e) in pairs {
            let e = u8::try_from(e).map_err(|_| RingError::ExponentOverflow)?;
            m = m.checked_mul(&Monomial::var_pow(v, e))?;
        }
        Ok(m)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.byte(0) as u32
    }

    #[inline]
    pub fn exponent(&self, v: Variable) -> u32 {
        self.byte(v.index() + 1) as u32
    }

    /// Exponents in canonical variable order.
    pub fn exponents(&self) -> [u8; NVARS] {
        let mut out = [0u8; NVARS];
        for (i, e) in out.iter_mut().enumerate() {
            *e = self.byte(i + 1);
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    /// Variables with nonzero exponent, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        (0..NVARS).filter_map(move |i| {
            let e = self.byte(i + 1);
            (e != 0).then(|| (Variable::from_index(i), e as u32))
        })
    }

    #[inline]
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, RingError> {
        if self.degree() + other.degree() > u8::MAX as u32 {
            return Err(RingError::ExponentOverflow);
        }
        Ok(Monomial {
            words: [
                self.words[0] + other.words[0],
                self.words[1] + other.words[1],
                self.words[2] + other.words[2],
            ],
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..BYTES).all(|i| self.byte(i) <= other.byte(i))
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            words: [
                other.words[0] - self.words[0],
                other.words[1] - self.words[1],
                other.words[2] - self.words[2],
            ],
        })
    }

    /// Sets the exponent of `v`, keeping the degree byte consistent.
    pub fn with_exponent(&self, v: Variable, e: u8) -> Result<Monomial, RingError> {
        let mut m = *self;
        let old = m.byte(v.index() + 1);
        let deg = (m.byte(0) - old).checked_add(e).ok_or(RingError::ExponentOverflow)?;
        m.set_byte(0, deg);
        m.set_byte(v.index() + 1, e);
        Ok(m)
    }

    pub fn without(&self, v: Variable) -> Monomial {
        self.with_exponent(v, 0).expect("removing a variable cannot overflow")
    }

    /// Exchanges exponents of every coefficient with its primed partner.
    pub fn swap_primes(&self) -> Monomial {
        let mut m = *self;
        for i in 1..8 {
            let (a, b) = (m.byte(i), m.byte(i + 7));
            m.set_byte(i, b);
            m.set_byte(i + 7, a);
        }
        m
    }

    /// Sum of exponents over the given variables.
    pub fn degree_in(&self, vars: &[Variable]) -> u32 {
        vars.iter().map(|v| self.exponent(*v)).sum()
    }

    /// True when every variable with nonzero exponent satisfies `pred`.
    pub fn only_in(&self, pred: impl Fn(Variable) -> bool) -> bool {
        self.iter().all(|(v, _)| pred(v))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
