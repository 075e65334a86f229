//! Pencil specifications and projective points.

use crate::error::{Error, Result};
use crate::ring::{Domain, Polynomial, Scalar, Variable};
use crate::rng::Stream;

use Variable::*;

/// The fourteen coefficients of `w` and `w'`, each a polynomial in the pencil variables.
///
/// Generic specs hold the variables themselves; concrete specs hold constants.
/// Mixed specs (for example the Geiser locus `a1 = a2 = 0` with the other
/// entries symbolic) are allowed and count as generic.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilSpec {
    entries: Vec<Polynomial>,
    domain: Domain,
}

impl PencilSpec {
    /// Every entry is its own variable, over ℚ.
    pub fn generic() -> PencilSpec {
        PencilSpec::generic_in(Domain::Rational)
    }

    pub fn generic_in(domain: Domain) -> PencilSpec {
        let entries = Variable::COEFFICIENTS.iter().map(|v| Polynomial::var(*v, domain)).collect();
        PencilSpec { entries, domain }
    }

    /// Generic over ℚ with `a1 = a2 = 0`.
    pub fn generic_geiser() -> PencilSpec {
        let zero = Polynomial::zero(Domain::Rational);
        PencilSpec::generic().with(&[(A1, zero.clone()), (A2, zero)]).expect("same domain")
    }

    /// A concrete pencil from the coefficients of `w` and `w'` in the order a1, a2, b1, b2, b3, c1, c2.
    pub fn concrete(w: &[Scalar; 7], wp: &[Scalar; 7]) -> Result<PencilSpec> {
        let domain = w[0].domain();
        let mut entries = Vec::with_capacity(14);
        for s in w.iter().chain(wp.iter()) {
            if s.domain() != domain {
                return Err(Error::MixedSpec);
            }
            entries.push(Polynomial::constant(s));
        }
        Ok(PencilSpec { entries, domain })
    }

    /// A concrete pencil over `GF(p)` obtained by assigning uniform residues to every
    /// variable the entries mention; entries that are constant stay fixed.
    pub fn sample(&self, p: u64, rng: &mut Stream) -> Result<PencilSpec> {
        let reduced = self.reduce_mod(p)?;
        let mut vars: Vec<Variable> = reduced.entries.iter().flat_map(|e| e.variables()).collect();
        vars.sort();
        vars.dedup();
        let values: Vec<(Variable, Scalar)> = vars.into_iter().map(|v| (v, Scalar::modular(rng.below(p), p))).collect();
        reduced.specialize(&values)
    }

    /// The pencil with `w` and `w'` exchanged.
    pub fn swapped(&self) -> PencilSpec {
        let mut entries = self.entries[7..].to_vec();
        entries.extend_from_slice(&self.entries[..7]);
        PencilSpec { entries, domain: self.domain }
    }

    /// Replaces some entries; replacements must share the spec's domain.
    pub fn with(&self, replacements: &[(Variable, Polynomial)]) -> Result<PencilSpec> {
        let mut out = self.clone();
        for (v, p) in replacements {
            if !v.is_coefficient() {
                return Err(Error::NonCoefficientInput(*v));
            }
            if p.domain() != self.domain {
                return Err(Error::MixedSpec);
            }
            out.entries[v.index()] = p.clone();
        }
        Ok(out)
    }

    /// Substitutes constants for pencil variables in every entry.
    pub fn specialize(&self, values: &[(Variable, Scalar)]) -> Result<PencilSpec> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.specialize(values))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(PencilSpec { entries, domain: self.domain })
    }

    /// Reduces every entry modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<PencilSpec> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.reduce_mod(p))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(PencilSpec { entries, domain: Domain::Prime(p) })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The entry for a coefficient variable such as `Variable::B2p`.
    pub fn entry(&self, v: Variable) -> &Polynomial {
        assert!(v.is_coefficient(), "{v} is not a pencil coefficient");
        &self.entries[v.index()]
    }

    /// The constant value of an entry, if it has one.
    pub fn value(&self, v: Variable) -> Option<Scalar> {
        self.entry(v).as_constant()
    }

    pub fn is_concrete(&self) -> bool {
        self.entries.iter().all(|e| e.as_constant().is_some())
    }

    pub fn is_geiser(&self) -> bool {
        self.entry(A1).is_zero() && self.entry(A2).is_zero()
    }

    /// `w` as a cubic in `y1, y2, y3`.
    pub fn w(&self) -> Polynomial {
        cubic(&self.entries[0..7], self.domain)
    }

    /// `w'` as a cubic in `y1, y2, y3`.
    pub fn wp(&self) -> Polynomial {
        cubic(&self.entries[7..14], self.domain)
    }
}

/// `x3²(c0·x1 + c1·x2) + x3(c2·x1² + c3·x1x2 + c4·x2²) + c5·x1²x2 + c6·x1x2²` with `x = y`.
pub(crate) fn cubic(c: &[Polynomial], domain: Domain) -> Polynomial {
    let mut out = Polynomial::zero(domain);
    for (coef, shape) in c.iter().zip(CUBIC_SHAPES) {
        let m = crate::ring::Monomial::from_pairs(shape.iter().copied()).expect("small exponents");
        out = out + coef * &Polynomial::term(m, &Scalar::one(domain));
    }
    out
}

/// The cubic monomials paired with a1, a2, b1, b2, b3, c1, c2.
pub(crate) const CUBIC_SHAPES: [&[(Variable, u32)]; 7] = [
    &[(Y1, 1), (Y3, 2)],
    &[(Y2, 1), (Y3, 2)],
    &[(Y1, 2), (Y3, 1)],
    &[(Y1, 1), (Y2, 1), (Y3, 1)],
    &[(Y2, 2), (Y3, 1)],
    &[(Y1, 2), (Y2, 1)],
    &[(Y1, 1), (Y2, 2)],
];

/// A point of the projective plane, normalized so its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    coords: Vec<Scalar>,
}

impl ProjPoint {
    /// Normalizes a nonzero vector of any length (3 for plane points, 4 for cone points).
    pub fn new(coords: &[Scalar]) -> Result<ProjPoint> {
        let domain = coords.first().ok_or(Error::ZeroPoint)?.domain();
        if coords.iter().any(|c| c.domain() != domain) {
            return Err(Error::MixedSpec);
        }
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroPoint)?;
        let inv = lead.inv()?;
        Ok(ProjPoint { coords: coords.iter().map(|c| c * &inv).collect() })
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn domain(&self) -> Domain {
        self.coords[0].domain()
    }

    /// The assignment `y1, y2, y3 ↦ coordinates` of a plane point.
    pub fn as_assignment(&self) -> Vec<(Variable, Scalar)> {
        Variable::POINT.iter().copied().zip(self.coords.iter().cloned()).collect()
    }

    /// Comma-separated coordinates, e.g. `1,2/3,0`.
    pub fn to_text(&self) -> String {
        self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" : "))
    }
}
