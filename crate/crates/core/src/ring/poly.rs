use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::rat::Rat;
use super::scalar::Scalar;
use super::sparse::{self, Field, Fp, SparsePoly, QQ};
use super::variable::{Variable, NVARS};
use super::{Domain, RingError};

/// A sparse polynomial with exact coefficients in a single domain.
///
/// Values are immutable; every operation returns a new polynomial. The binary
/// operators on references panic on domain mismatch, the `try_*` methods
/// report it instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    pub(crate) repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Repr {
    Q(SparsePoly<Rat>),
    P(u64, SparsePoly<u64>),
}

macro_rules! dispatch {
    ($self:expr, |$f:ident, $a:ident| $body:expr) => {
        match &$self.repr {
            Repr::Q($a) => {
                let $f = QQ;
                Polynomial { repr: Repr::Q($body) }
            }
            Repr::P(p, $a) => {
                let $f = Fp(*p);
                Polynomial { repr: Repr::P(*p, $body) }
            }
        }
    };
}

macro_rules! try_dispatch {
    ($self:expr, |$f:ident, $a:ident| $body:expr) => {
        match &$self.repr {
            Repr::Q($a) => {
                let $f = QQ;
                Polynomial { repr: Repr::Q($body?) }
            }
            Repr::P(p, $a) => {
                let $f = Fp(*p);
                Polynomial { repr: Repr::P(*p, $body?) }
            }
        }
    };
}

macro_rules! binary {
    ($self:expr, $o:expr, |$f:ident, $a:ident, $b:ident| $body:expr) => {
        match (&$self.repr, &$o.repr) {
            (Repr::Q($a), Repr::Q($b)) => {
                let $f = QQ;
                Ok(Polynomial { repr: Repr::Q($body) })
            }
            (Repr::P(p, $a), Repr::P(q, $b)) if p == q => {
                let $f = Fp(*p);
                Ok(Polynomial { repr: Repr::P(*p, $body) })
            }
            _ => Err(RingError::DomainMismatch($self.domain(), $o.domain())),
        }
    };
}

impl Polynomial {
    pub fn zero(domain: Domain) -> Polynomial {
        match domain {
            Domain::Rational => Polynomial { repr: Repr::Q(SparsePoly::zero()) },
            Domain::Prime(p) => Polynomial { repr: Repr::P(p, SparsePoly::zero()) },
        }
    }

    pub fn one(domain: Domain) -> Polynomial {
        Polynomial::constant(&Scalar::one(domain))
    }

    pub fn integer(v: i64, domain: Domain) -> Polynomial {
        Polynomial::constant(&Scalar::from_i64(v, domain))
    }

    pub fn constant(c: &Scalar) -> Polynomial {
        Polynomial::term(Monomial::ONE, c)
    }

    pub fn var(v: Variable, domain: Domain) -> Polynomial {
        Polynomial::term(Monomial::var(v), &Scalar::one(domain))
    }

    pub fn term(m: Monomial, c: &Scalar) -> Polynomial {
        match c {
            Scalar::Rational(_) => Polynomial { repr: Repr::Q(sparse::constant(QQ, c.to_rat())).map_monomials_unchecked(m) },
            Scalar::Modular { value, prime } => {
                Polynomial { repr: Repr::P(*prime, sparse::constant(Fp(*prime), *value)).map_monomials_unchecked(m) }
            }
        }
    }

    /// Collects terms, merging repeated monomials; every coefficient must lie in `domain`.
    pub fn from_terms<I>(domain: Domain, terms: I) -> Result<Polynomial, RingError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        match domain {
            Domain::Rational => {
                let mut v = Vec::new();
                for (m, c) in terms {
                    if c.domain() != domain {
                        return Err(RingError::DomainMismatch(domain, c.domain()));
                    }
                    v.push((m, c.to_rat()));
                }
                Ok(Polynomial { repr: Repr::Q(sparse::from_terms(QQ, v)) })
            }
            Domain::Prime(p) => {
                let mut v = Vec::new();
                for (m, c) in terms {
                    match c {
                        Scalar::Modular { value, prime } if prime == p => v.push((m, value)),
                        other => return Err(RingError::DomainMismatch(domain, other.domain())),
                    }
                }
                Ok(Polynomial { repr: Repr::P(p, sparse::from_terms(Fp(p), v)) })
            }
        }
    }

    pub(crate) fn from_q(poly: SparsePoly<Rat>) -> Polynomial {
        Polynomial { repr: Repr::Q(poly) }
    }

    pub(crate) fn from_p(p: u64, poly: SparsePoly<u64>) -> Polynomial {
        Polynomial { repr: Repr::P(p, poly) }
    }

    pub(crate) fn as_q(&self) -> Option<&SparsePoly<Rat>> {
        match &self.repr {
            Repr::Q(a) => Some(a),
            Repr::P(..) => None,
        }
    }

    pub(crate) fn as_p(&self) -> Option<&SparsePoly<u64>> {
        match &self.repr {
            Repr::P(_, a) => Some(a),
            Repr::Q(_) => None,
        }
    }

    pub fn domain(&self) -> Domain {
        match &self.repr {
            Repr::Q(_) => Domain::Rational,
            Repr::P(p, _) => Domain::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num_terms() == 0
    }

    pub fn num_terms(&self) -> usize {
        match &self.repr {
            Repr::Q(a) => a.len(),
            Repr::P(_, a) => a.len(),
        }
    }

    /// Monomials in ascending canonical order.
    pub fn monomials(&self) -> Vec<Monomial> {
        match &self.repr {
            Repr::Q(a) => a.terms.iter().map(|t| t.0).collect(),
            Repr::P(_, a) => a.terms.iter().map(|t| t.0).collect(),
        }
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> Vec<(Monomial, Scalar)> {
        match &self.repr {
            Repr::Q(a) => a.terms.iter().map(|(m, c)| (*m, Scalar::from_rat(c))).collect(),
            Repr::P(p, a) => a.terms.iter().map(|(m, c)| (*m, Scalar::Modular { value: *c, prime: *p })).collect(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        match &self.repr {
            Repr::Q(a) => match a.terms.binary_search_by(|t| t.0.cmp(m)) {
                Ok(i) => Scalar::from_rat(&a.terms[i].1),
                Err(_) => Scalar::zero(Domain::Rational),
            },
            Repr::P(p, a) => match a.terms.binary_search_by(|t| t.0.cmp(m)) {
                Ok(i) => Scalar::Modular { value: a.terms[i].1, prime: *p },
                Err(_) => Scalar::zero(Domain::Prime(*p)),
            },
        }
    }

    /// The constant value, when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Scalar> {
        let ms = self.monomials();
        match ms.as_slice() {
            [] => Some(Scalar::zero(self.domain())),
            [m] if m.is_one() => Some(self.coefficient(m)),
            _ => None,
        }
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.monomials().last().map(|m| m.degree())
    }

    /// Maximum degree in the given variables; `None` for zero.
    pub fn degree_in(&self, vars: &[Variable]) -> Option<u32> {
        self.monomials().iter().map(|m| m.degree_in(vars)).max()
    }

    /// The common degree in `vars` if every term has the same one.
    pub fn homogeneous_degree_in(&self, vars: &[Variable]) -> Option<u32> {
        let ms = self.monomials();
        let d = ms.first()?.degree_in(vars);
        ms.iter().all(|m| m.degree_in(vars) == d).then_some(d)
    }

    pub fn degree_of(&self, v: Variable) -> u32 {
        self.monomials().iter().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Variables occurring in some term, in canonical order.
    pub fn variables(&self) -> Vec<Variable> {
        let mut seen = [false; NVARS];
        for m in self.monomials() {
            for (v, _) in m.iter() {
                seen[v.index()] = true;
            }
        }
        Variable::ALL.iter().copied().filter(|v| seen[v.index()]).collect()
    }

    pub fn try_add(&self, o: &Polynomial) -> Result<Polynomial, RingError> {
        binary!(self, o, |f, a, b| sparse::add(f, a, b))
    }

    pub fn try_sub(&self, o: &Polynomial) -> Result<Polynomial, RingError> {
        binary!(self, o, |f, a, b| sparse::sub(f, a, b))
    }

    pub fn try_mul(&self, o: &Polynomial) -> Result<Polynomial, RingError> {
        binary!(self, o, |f, a, b| sparse::mul(f, a, b)?)
    }

    pub fn scale(&self, c: &Scalar) -> Result<Polynomial, RingError> {
        if c.domain() != self.domain() {
            return Err(RingError::DomainMismatch(self.domain(), c.domain()));
        }
        Ok(match &self.repr {
            Repr::Q(a) => Polynomial::from_q(sparse::scale(QQ, a, &c.to_rat())),
            Repr::P(p, a) => Polynomial::from_p(*p, sparse::scale(Fp(*p), a, &c.residue().expect("modular"))),
        })
    }

    pub fn scale_int(&self, c: i64) -> Polynomial {
        dispatch!(self, |f, a| sparse::scale(f, a, &f.from_i64(c)))
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial, RingError> {
        Ok(try_dispatch!(self, |f, a| sparse::pow(f, a, e)))
    }

    /// The quotient `q` with `self = q·d`; `NotDivisible` if the remainder is nonzero.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial, RingError> {
        binary!(self, d, |f, a, b| sparse::exact_div(f, a, b)?)
    }

    /// Simultaneous substitution; unbound variables are left alone.
    pub fn substitute(&self, bindings: &[(Variable, &Polynomial)]) -> Result<Polynomial, RingError> {
        for (_, b) in bindings {
            if b.domain() != self.domain() {
                return Err(RingError::DomainMismatch(self.domain(), b.domain()));
            }
        }
        Ok(match &self.repr {
            Repr::Q(a) => {
                let mut table: sparse::Bindings<'_, Rat> = [None; NVARS];
                for (v, b) in bindings {
                    table[v.index()] = b.as_q();
                }
                Polynomial::from_q(sparse::substitute(QQ, a, &table)?)
            }
            Repr::P(p, a) => {
                let mut table: sparse::Bindings<'_, u64> = [None; NVARS];
                for (v, b) in bindings {
                    table[v.index()] = b.as_p();
                }
                Polynomial::from_p(*p, sparse::substitute(Fp(*p), a, &table)?)
            }
        })
    }

    /// Replaces the given variables by constants.
    pub fn specialize(&self, values: &[(Variable, Scalar)]) -> Result<Polynomial, RingError> {
        for (_, c) in values {
            if c.domain() != self.domain() {
                return Err(RingError::DomainMismatch(self.domain(), c.domain()));
            }
        }
        Ok(match &self.repr {
            Repr::Q(a) => {
                let mut table: [Option<Rat>; NVARS] = Default::default();
                for (v, c) in values {
                    table[v.index()] = Some(c.to_rat());
                }
                Polynomial::from_q(sparse::specialize(QQ, a, &table))
            }
            Repr::P(p, a) => {
                let mut table: [Option<u64>; NVARS] = [None; NVARS];
                for (v, c) in values {
                    table[v.index()] = c.residue();
                }
                Polynomial::from_p(*p, sparse::specialize(Fp(*p), a, &table))
            }
        })
    }

    /// Exact value under an assignment covering every occurring variable.
    pub fn evaluate(&self, assignment: &[(Variable, Scalar)]) -> Result<Scalar, RingError> {
        let s = self.specialize(assignment)?;
        match s.as_constant() {
            Some(c) => Ok(c),
            None => Err(RingError::MissingBinding(s.variables()[0])),
        }
    }

    pub fn derivative(&self, v: Variable) -> Polynomial {
        dispatch!(self, |f, a| sparse::derivative(f, a, v))
    }

    /// Exchanges every pencil coefficient with its primed partner.
    pub fn swap_primes(&self) -> Polynomial {
        dispatch!(self, |f, a| sparse::map_monomials(f, a, |m| m.swap_primes()))
    }

    /// Renames variables by a bijection given as `(from, to)` pairs; unlisted variables stay.
    pub fn rename(&self, pairs: &[(Variable, Variable)]) -> Polynomial {
        let mut map: [Variable; NVARS] = Variable::ALL;
        for (from, to) in pairs {
            map[from.index()] = *to;
        }
        let remap = |m: &Monomial| {
            let mut out = Monomial::ONE;
            for (v, e) in m.iter() {
                out = out
                    .checked_mul(&Monomial::var_pow(map[v.index()], e as u8))
                    .expect("renaming preserves degrees");
            }
            out
        };
        dispatch!(self, |f, a| sparse::map_monomials(f, a, remap))
    }

    /// Image over `GF(p)` of a polynomial with rational coefficients.
    pub fn reduce_mod(&self, p: u64) -> Result<Polynomial, RingError> {
        match &self.repr {
            Repr::Q(a) => {
                let f = Fp(p);
                let mut terms = Vec::with_capacity(a.len());
                for (m, c) in &a.terms {
                    let r = c.mod_p(p).ok_or(RingError::NonInvertibleDenominator(p))?;
                    if r != 0 {
                        terms.push((*m, r));
                    }
                }
                let _ = f;
                Ok(Polynomial::from_p(p, SparsePoly { terms }))
            }
            Repr::P(q, _) if *q == p => Ok(self.clone()),
            Repr::P(..) => Err(RingError::DomainMismatch(self.domain(), Domain::Prime(p))),
        }
    }

    /// Splits into coefficient polynomials of the monomials in `vars`.
    ///
    /// Returns pairs `(m, c)` with `m` a monomial in `vars` only and `c` free of them,
    /// sorted by `m`, such that `self = Σ m·c`.
    pub fn collect_in(&self, vars: &[Variable]) -> Vec<(Monomial, Polynomial)> {
        let mut selected = [false; NVARS];
        for v in vars {
            selected[v.index()] = true;
        }
        let split = |m: &Monomial| {
            let mut inner = Monomial::ONE;
            let mut rest = *m;
            for (v, e) in m.iter() {
                if selected[v.index()] {
                    inner = inner.checked_mul(&Monomial::var_pow(v, e as u8)).expect("sub-monomial");
                    rest = rest.without(v);
                }
            }
            (inner, rest)
        };
        fn group<F: Field>(
            f: F,
            a: &SparsePoly<F::E>,
            split: impl Fn(&Monomial) -> (Monomial, Monomial),
        ) -> Vec<(Monomial, SparsePoly<F::E>)> {
            let mut groups: std::collections::BTreeMap<Monomial, Vec<(Monomial, F::E)>> = Default::default();
            for (m, c) in &a.terms {
                let (inner, rest) = split(m);
                groups.entry(inner).or_default().push((rest, c.clone()));
            }
            groups.into_iter().map(|(k, v)| (k, sparse::from_terms(f, v))).collect()
        }
        match &self.repr {
            Repr::Q(a) => group(QQ, a, split).into_iter().map(|(m, c)| (m, Polynomial::from_q(c))).collect(),
            Repr::P(p, a) => group(Fp(*p), a, split).into_iter().map(|(m, c)| (m, Polynomial::from_p(*p, c))).collect(),
        }
    }

    /// Approximate heap footprint in bytes.
    pub fn heap_bytes(&self) -> usize {
        let term = std::mem::size_of::<(Monomial, Rat)>();
        match &self.repr {
            Repr::Q(a) => {
                let big: usize = a
                    .terms
                    .iter()
                    .map(|(_, c)| match c {
                        Rat::Int(_) => 0,
                        Rat::Big(b) => 64 + (b.numer().bits() + b.denom().bits()) as usize / 8,
                    })
                    .sum();
                a.len() * term + big
            }
            Repr::P(_, a) => a.len() * std::mem::size_of::<(Monomial, u64)>(),
        }
    }
}

trait MonomialShift {
    fn map_monomials_unchecked(self, m: Monomial) -> Self;
}

impl MonomialShift for Repr {
    fn map_monomials_unchecked(self, m: Monomial) -> Repr {
        match self {
            Repr::Q(mut a) => {
                for t in &mut a.terms {
                    t.0 = m;
                }
                Repr::Q(a)
            }
            Repr::P(p, mut a) => {
                for t in &mut a.terms {
                    t.0 = m;
                }
                Repr::P(p, a)
            }
        }
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on domain mismatch or exponent overflow.
            fn $method(self, o: &Polynomial) -> Polynomial {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, o: Polynomial) -> Polynomial {
                (&self).$method(&o)
            }
        }

        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, o: &Polynomial) -> Polynomial {
                (&self).$method(o)
            }
        }

        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, o: Polynomial) -> Polynomial {
                self.$method(&o)
            }
        }
    };
}

panicking_op!(Add, add, try_add);
panicking_op!(Sub, sub, try_sub);
panicking_op!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        dispatch!(self, |f, a| sparse::neg(f, a))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical_text())
    }
}
