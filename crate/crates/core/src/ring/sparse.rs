//! Coefficient-generic kernels behind [`Polynomial`](super::Polynomial).

use std::collections::BTreeMap;
use std::fmt::Debug;

use rustc_hash::FxHashMap;

use super::modp;
use super::monomial::Monomial;
use super::rat::Rat;
use super::variable::{Variable, NVARS};
use super::RingError;

pub(crate) trait Field: Copy + Send + Sync {
    type E: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn from_i64(&self, v: i64) -> Self::E;

    fn add_assign(&self, acc: &mut Self::E, b: &Self::E) {
        *acc = self.add(acc, b);
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct QQ;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp(pub u64);

impl Field for QQ {
    type E = Rat;
    fn zero(&self) -> Rat {
        Rat::ZERO
    }
    fn one(&self) -> Rat {
        Rat::ONE
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a.add(b)
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a.sub(b)
    }
    fn neg(&self, a: &Rat) -> Rat {
        a.neg()
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a.mul(b)
    }
    fn inv(&self, a: &Rat) -> Option<Rat> {
        a.inv()
    }
    fn from_i64(&self, v: i64) -> Rat {
        Rat::Int(v)
    }
    #[inline]
    fn add_assign(&self, acc: &mut Rat, b: &Rat) {
        if let (Rat::Int(x), Rat::Int(y)) = (&*acc, b) {
            if let Some(s) = x.checked_add(*y) {
                *acc = Rat::Int(s);
                return;
            }
        }
        *acc = acc.add(b);
    }
}

impl Field for Fp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        modp::add(*a, *b, self.0)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        modp::sub(*a, *b, self.0)
    }
    fn neg(&self, a: &u64) -> u64 {
        modp::neg(*a, self.0)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        modp::mul(*a, *b, self.0)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        modp::inv(*a, self.0)
    }
    fn from_i64(&self, v: i64) -> u64 {
        modp::from_i64(v, self.0)
    }
}

/// Terms sorted ascending in graded lexicographic order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct SparsePoly<E> {
    pub terms: Vec<(Monomial, E)>,
}

impl<E: Clone> SparsePoly<E> {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.last()
    }
}

pub(crate) fn from_map<F: Field>(f: F, map: FxHashMap<Monomial, F::E>) -> SparsePoly<F::E> {
    let mut terms: Vec<(Monomial, F::E)> = map.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
    terms.sort_unstable_by_key(|t| t.0);
    SparsePoly { terms }
}

/// Collects unsorted terms, merging duplicates.
pub(crate) fn from_terms<F: Field>(f: F, terms: Vec<(Monomial, F::E)>) -> SparsePoly<F::E> {
    let mut map: FxHashMap<Monomial, F::E> = FxHashMap::default();
    map.reserve(terms.len());
    for (m, c) in terms {
        match map.get_mut(&m) {
            Some(acc) => f.add_assign(acc, &c),
            None => {
                map.insert(m, c);
            }
        }
    }
    from_map(f, map)
}

pub(crate) fn constant<F: Field>(f: F, c: F::E) -> SparsePoly<F::E> {
    if f.is_zero(&c) {
        SparsePoly::zero()
    } else {
        SparsePoly { terms: vec![(Monomial::ONE, c)] }
    }
}

pub(crate) fn add<F: Field>(f: F, a: &SparsePoly<F::E>, b: &SparsePoly<F::E>) -> SparsePoly<F::E> {
    merge(f, a, b, false)
}

pub(crate) fn sub<F: Field>(f: F, a: &SparsePoly<F::E>, b: &SparsePoly<F::E>) -> SparsePoly<F::E> {
    merge(f, a, b, true)
}

fn merge<F: Field>(f: F, a: &SparsePoly<F::E>, b: &SparsePoly<F::E>, negate_b: bool) -> SparsePoly<F::E> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let take_b = |c: &F::E| if negate_b { f.neg(c) } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp(mb) {
            std::cmp::Ordering::Less => {
                out.push((*ma, ca.clone()));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((*mb, take_b(cb)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { f.sub(ca, cb) } else { f.add(ca, cb) };
                if !f.is_zero(&c) {
                    out.push((*ma, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(m, c)| (*m, take_b(c))));
    SparsePoly { terms: out }
}

pub(crate) fn neg<F: Field>(f: F, a: &SparsePoly<F::E>) -> SparsePoly<F::E> {
    SparsePoly { terms: a.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect() }
}

pub(crate) fn scale<F: Field>(f: F, a: &SparsePoly<F::E>, c: &F::E) -> SparsePoly<F::E> {
    if f.is_zero(c) {
        return SparsePoly::zero();
    }
    SparsePoly { terms: a.terms.iter().map(|(m, x)| (*m, f.mul(x, c))).collect() }
}

/// Multiplication by a single term preserves the (monomial) order.
fn mul_term<F: Field>(f: F, a: &SparsePoly<F::E>, m: &Monomial, c: &F::E) -> Result<SparsePoly<F::E>, RingError> {
    let mut terms = Vec::with_capacity(a.len());
    for (am, ac) in &a.terms {
        let x = f.mul(ac, c);
        if !f.is_zero(&x) {
            terms.push((am.checked_mul(m)?, x));
        }
    }
    Ok(SparsePoly { terms })
}

pub(crate) fn mul<F: Field>(f: F, a: &SparsePoly<F::E>, b: &SparsePoly<F::E>) -> Result<SparsePoly<F::E>, RingError> {
    if a.terms.is_empty() || b.terms.is_empty() {
        return Ok(SparsePoly::zero());
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() == 1 {
        let (m, c) = &small.terms[0];
        return mul_term(f, large, m, c);
    }
    let mut map: FxHashMap<Monomial, F::E> = FxHashMap::default();
    map.reserve(large.len().saturating_mul(small.len()).min(1 << 22));
    for (ms, cs) in &small.terms {
        for (ml, cl) in &large.terms {
            let m = ms.checked_mul(ml)?;
            let c = f.mul(cs, cl);
            match map.get_mut(&m) {
                Some(acc) => f.add_assign(acc, &c),
                None => {
                    map.insert(m, c);
                }
            }
        }
    }
    Ok(from_map(f, map))
}

pub(crate) fn pow<F: Field>(f: F, a: &SparsePoly<F::E>, e: u32) -> Result<SparsePoly<F::E>, RingError> {
    let mut acc = constant(f, f.one());
    let mut base = a.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(f, &acc, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = mul(f, &base, &base)?;
        }
    }
    Ok(acc)
}

/// Exact quotient `a / d`; errors unless the remainder vanishes.
pub(crate) fn exact_div<F: Field>(f: F, a: &SparsePoly<F::E>, d: &SparsePoly<F::E>) -> Result<SparsePoly<F::E>, RingError> {
    let (lm, lc) = d.leading().ok_or(RingError::DivisionByZero)?;
    let lc_inv = f.inv(lc).ok_or(RingError::DivisionByZero)?;
    if d.len() == 1 {
        let mut terms = Vec::with_capacity(a.len());
        for (m, c) in &a.terms {
            let q = lm.quotient_of(m).ok_or(RingError::NotDivisible)?;
            terms.push((q, f.mul(c, &lc_inv)));
        }
        return Ok(SparsePoly { terms });
    }
    let mut rem: BTreeMap<Monomial, F::E> = a.terms.iter().cloned().collect();
    let mut quotient = Vec::new();
    while let Some((m, c)) = rem.pop_last() {
        let qm = lm.quotient_of(&m).ok_or(RingError::NotDivisible)?;
        let qc = f.mul(&c, &lc_inv);
        // the leading term cancels by construction; subtract the rest of qc*qm*d
        for (dm, dc) in d.terms.iter().rev().skip(1) {
            let prod = dm.checked_mul(&qm)?;
            let delta = f.mul(&qc, dc);
            let entry = rem.entry(prod).or_insert_with(|| f.zero());
            *entry = f.sub(entry, &delta);
            if f.is_zero(entry) {
                rem.remove(&prod);
            }
        }
        quotient.push((qm, qc));
    }
    quotient.reverse();
    Ok(SparsePoly { terms: quotient })
}

pub(crate) type Bindings<'a, E> = [Option<&'a SparsePoly<E>>; NVARS];

/// Simultaneous substitution of polynomials for variables.
pub(crate) fn substitute<F: Field>(f: F, a: &SparsePoly<F::E>, bindings: &Bindings<'_, F::E>) -> Result<SparsePoly<F::E>, RingError> {
    let bound: Vec<Variable> = Variable::ALL.iter().copied().filter(|v| bindings[v.index()].is_some()).collect();
    if bound.is_empty() {
        return Ok(a.clone());
    }
    // power tables per bound variable
    let mut powers: Vec<Vec<SparsePoly<F::E>>> = vec![Vec::new(); NVARS];
    for v in &bound {
        let maxe = a.terms.iter().map(|(m, _)| m.exponent(*v)).max().unwrap_or(0);
        let base = bindings[v.index()].expect("bound");
        let table = &mut powers[v.index()];
        table.push(constant(f, f.one()));
        for e in 1..=maxe as usize {
            let next = mul(f, &table[e - 1], base)?;
            table.push(next);
        }
    }
    let mut map: FxHashMap<Monomial, F::E> = FxHashMap::default();
    for (m, c) in &a.terms {
        let mut rest = *m;
        let mut prod = constant(f, c.clone());
        for v in &bound {
            let e = m.exponent(*v) as usize;
            if e > 0 {
                rest = rest.without(*v);
                prod = mul(f, &prod, &powers[v.index()][e])?;
            }
        }
        for (pm, pc) in prod.terms {
            let mm = pm.checked_mul(&rest)?;
            match map.get_mut(&mm) {
                Some(acc) => f.add_assign(acc, &pc),
                None => {
                    map.insert(mm, pc);
                }
            }
        }
    }
    Ok(from_map(f, map))
}

/// Replaces the given variables by field constants.
pub(crate) fn specialize<F: Field>(f: F, a: &SparsePoly<F::E>, values: &[Option<F::E>; NVARS]) -> SparsePoly<F::E> {
    let bound: Vec<Variable> = Variable::ALL.iter().copied().filter(|v| values[v.index()].is_some()).collect();
    if bound.is_empty() {
        return a.clone();
    }
    let mut map: FxHashMap<Monomial, F::E> = FxHashMap::default();
    let mut cache: Vec<Vec<F::E>> = vec![Vec::new(); NVARS];
    for (m, c) in &a.terms {
        let mut rest = *m;
        let mut coef = c.clone();
        for v in &bound {
            let e = m.exponent(*v) as usize;
            if e == 0 {
                continue;
            }
            rest = rest.without(*v);
            let table = &mut cache[v.index()];
            let x = values[v.index()].as_ref().expect("bound");
            if table.is_empty() {
                table.push(f.one());
            }
            while table.len() <= e {
                let next = f.mul(table.last().expect("nonempty"), x);
                table.push(next);
            }
            coef = f.mul(&coef, &table[e]);
        }
        if f.is_zero(&coef) {
            continue;
        }
        match map.get_mut(&rest) {
            Some(acc) => f.add_assign(acc, &coef),
            None => {
                map.insert(rest, coef);
            }
        }
    }
    from_map(f, map)
}

pub(crate) fn derivative<F: Field>(f: F, a: &SparsePoly<F::E>, v: Variable) -> SparsePoly<F::E> {
    let mut terms = Vec::new();
    for (m, c) in &a.terms {
        let e = m.exponent(v);
        if e == 0 {
            continue;
        }
        let c = f.mul(c, &f.from_i64(e as i64));
        if f.is_zero(&c) {
            continue;
        }
        let m = m.with_exponent(v, (e - 1) as u8).expect("lowering an exponent");
        terms.push((m, c));
    }
    from_terms(f, terms)
}

pub(crate) fn map_monomials<F: Field>(
    f: F,
    a: &SparsePoly<F::E>,
    g: impl Fn(&Monomial) -> Monomial,
) -> SparsePoly<F::E> {
    from_terms(f, a.terms.iter().map(|(m, c)| (g(m), c.clone())).collect())
}
