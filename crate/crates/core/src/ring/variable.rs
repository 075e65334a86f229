use std::fmt;

/// The closed set of indeterminates every polynomial in this crate is built from.
///
/// Declaration order is the canonical variable order used by the text format
/// and by the monomial order: `a1 < a2 < … < c2 < a1p < … < c2p < y1 < y2 < y3
/// < t1 < t2 < u2 < u3`. Primed pencil coefficients carry the suffix `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    A1,
    A2,
    B1,
    B2,
    B3,
    C1,
    C2,
    A1p,
    A2p,
    B1p,
    B2p,
    B3p,
    C1p,
    C2p,
    Y1,
    Y2,
    Y3,
    T1,
    T2,
    U2,
    U3,
}

pub const NVARS: usize = 21;

const NAMES: [&str; NVARS] = [
    "a1", "a2", "b1", "b2", "b3", "c1", "c2", "a1p", "a2p", "b1p", "b2p", "b3p", "c1p", "c2p",
    "y1", "y2", "y3", "t1", "t2", "u2", "u3",
];

impl Variable {
    pub const ALL: [Variable; NVARS] = [
        Variable::A1,
        Variable::A2,
        Variable::B1,
        Variable::B2,
        Variable::B3,
        Variable::C1,
        Variable::C2,
        Variable::A1p,
        Variable::A2p,
        Variable::B1p,
        Variable::B2p,
        Variable::B3p,
        Variable::C1p,
        Variable::C2p,
        Variable::Y1,
        Variable::Y2,
        Variable::Y3,
        Variable::T1,
        Variable::T2,
        Variable::U2,
        Variable::U3,
    ];

    /// Coefficients of `w`, in the order a1, a2, b1, b2, b3, c1, c2.
    pub const UNPRIMED: [Variable; 7] = [
        Variable::A1,
        Variable::A2,
        Variable::B1,
        Variable::B2,
        Variable::B3,
        Variable::C1,
        Variable::C2,
    ];

    /// Coefficients of `w'`, in the same order as [`Variable::UNPRIMED`].
    pub const PRIMED: [Variable; 7] = [
        Variable::A1p,
        Variable::A2p,
        Variable::B1p,
        Variable::B2p,
        Variable::B3p,
        Variable::C1p,
        Variable::C2p,
    ];

    /// All fourteen pencil coefficients, unprimed first.
    pub const COEFFICIENTS: [Variable; 14] = [
        Variable::A1,
        Variable::A2,
        Variable::B1,
        Variable::B2,
        Variable::B3,
        Variable::C1,
        Variable::C2,
        Variable::A1p,
        Variable::A2p,
        Variable::B1p,
        Variable::B2p,
        Variable::B3p,
        Variable::C1p,
        Variable::C2p,
    ];

    pub const POINT: [Variable; 3] = [Variable::Y1, Variable::Y2, Variable::Y3];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn from_index(i: usize) -> Variable {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Variable> {
        NAMES.iter().position(|n| *n == name).map(Self::from_index)
    }

    pub fn is_unprimed_coefficient(self) -> bool {
        self.index() < 7
    }

    pub fn is_primed_coefficient(self) -> bool {
        (7..14).contains(&self.index())
    }

    pub fn is_coefficient(self) -> bool {
        self.index() < 14
    }

    /// Exchanges a pencil coefficient with its primed partner; other variables are fixed.
    pub fn swap_prime(self) -> Variable {
        match self.index() {
            i if i < 7 => Self::from_index(i + 7),
            i if i < 14 => Self::from_index(i - 7),
            _ => self,
        }
    }

    /// Primed partner of an unprimed coefficient.
    pub fn primed(self) -> Option<Variable> {
        self.is_unprimed_coefficient().then(|| self.swap_prime())
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for v in Variable::ALL {
            assert_eq!(Variable::from_name(v.name()), Some(v));
        }
        assert_eq!(Variable::from_name("x1"), None);
    }

    #[test]
    fn prime_partners() {
        assert_eq!(Variable::C2.primed(), Some(Variable::C2p));
        assert_eq!(Variable::C2p.primed(), None);
        assert_eq!(Variable::B3p.swap_prime(), Variable::B3);
        assert_eq!(Variable::Y2.swap_prime(), Variable::Y2);
        assert_eq!(Variable::U3.swap_prime(), Variable::U3);
    }
}
