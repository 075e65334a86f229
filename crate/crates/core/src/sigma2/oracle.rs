//! Independent re-derivation of the ramification coefficients.
//!
//! Each unknown coefficient is a polynomial in the pencil variables whose
//! support is bounded by two gradings every construction respects: the
//! bidegree in (unprimed, primed) coefficients and the torus weight under
//! `y_j ↦ λ_j y_j`. The unknowns are sampled by solving the linear system of
//! `y`-monomial matches at points `g^k` over `GF(p)`, interpolated from these
//! samples, lifted to ℚ by rational reconstruction, and finally checked by an
//! exact expansion over ℚ.

use rustc_hash::FxHashMap;

use super::closed::{binary_form, compose_form, ram_closed_form, RamData};
use super::modlin::{self, Solve};
use super::square::exact_sqrt;
use crate::bertini::BertiniBundle;
use crate::error::{Error, Result};
use crate::pencil::CUBIC_SHAPES;
use crate::ring::modp::{self, MERSENNE_61};
use crate::ring::{rational_reconstruction, Domain, Monomial, Polynomial, Scalar, Variable};
use crate::rng::Stream;

#[derive(Clone, Debug)]
pub struct OracleOutput {
    pub ram: RamData,
    /// True when the square root came out with the opposite sign to the closed-form `r`.
    pub sign_flipped: bool,
    /// Number of `GF(p)` sample points used for interpolation.
    pub samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Grade {
    du: i32,
    dp: i32,
    weight: [i32; 3],
}

impl std::ops::Add for Grade {
    type Output = Grade;
    fn add(self, o: Grade) -> Grade {
        Grade {
            du: self.du + o.du,
            dp: self.dp + o.dp,
            weight: [self.weight[0] + o.weight[0], self.weight[1] + o.weight[1], self.weight[2] + o.weight[2]],
        }
    }
}

impl std::ops::Sub for Grade {
    type Output = Grade;
    fn sub(self, o: Grade) -> Grade {
        Grade {
            du: self.du - o.du,
            dp: self.dp - o.dp,
            weight: [self.weight[0] - o.weight[0], self.weight[1] - o.weight[1], self.weight[2] - o.weight[2]],
        }
    }
}

fn monomial_grade(m: &Monomial) -> Grade {
    let mut g = Grade { du: 0, dp: 0, weight: [0; 3] };
    for (v, e) in m.iter() {
        let e = e as i32;
        if v.is_coefficient() {
            if v.is_unprimed_coefficient() {
                g.du += e;
            } else {
                g.dp += e;
            }
            for (y, k) in CUBIC_SHAPES[v.index() % 7] {
                g.weight[y.index() - Variable::Y1.index()] -= e * *k as i32;
            }
        } else if let Some(j) = Variable::POINT.iter().position(|y| *y == v) {
            g.weight[j] += e;
        }
    }
    g
}

fn grade(p: &Polynomial, what: &str) -> Result<Option<Grade>> {
    let ms = p.monomials();
    let Some(first) = ms.first() else {
        return Ok(None);
    };
    let g = monomial_grade(first);
    if ms.iter().any(|m| monomial_grade(m) != g) {
        return Err(Error::InconsistentSystem(format!("{what} is not homogeneous")));
    }
    Ok(Some(g))
}

/// Coefficient monomials in `free` with the given grade.
fn support(free: &[Variable], g: Grade) -> Vec<Monomial> {
    if g.du < 0 || g.dp < 0 {
        return Vec::new();
    }
    let unprimed: Vec<Variable> = free.iter().copied().filter(|v| v.is_unprimed_coefficient()).collect();
    let primed: Vec<Variable> = free.iter().copied().filter(|v| v.is_primed_coefficient()).collect();
    let mut out = Vec::new();
    for a in multisets(&unprimed, g.du as u32) {
        for b in multisets(&primed, g.dp as u32) {
            let m = a.checked_mul(&b).expect("small degrees");
            if monomial_grade(&m) == g {
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

fn multisets(vars: &[Variable], d: u32) -> Vec<Monomial> {
    if d == 0 {
        return vec![Monomial::ONE];
    }
    let Some((first, rest)) = vars.split_first() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for e in 0..=d {
        let head = Monomial::var_pow(*first, e as u8);
        for tail in multisets(rest, d - e) {
            out.push(head.checked_mul(&tail).expect("small degrees"));
        }
    }
    out
}

struct Unknown {
    family: &'static str,
    index: usize,
    support: Vec<Monomial>,
    nodes: Vec<u64>,
    samples: Vec<u64>,
}

/// Dense coordinates of `y`-polynomials over a shared monomial index.
struct YIndex(FxHashMap<Monomial, usize>);

impl YIndex {
    fn vector(&mut self, p: &Polynomial) -> Vec<(usize, u64)> {
        p.terms()
            .into_iter()
            .map(|(m, c)| {
                let n = self.0.len();
                (*self.0.entry(m).or_insert(n), c.residue().expect("modular"))
            })
            .collect()
    }
}

fn solve_columns(columns: &[Polynomial], rhs: &Polynomial, p: u64) -> Solve {
    let mut index = YIndex(FxHashMap::default());
    let cols: Vec<_> = columns.iter().map(|c| index.vector(c)).collect();
    let b = index.vector(rhs);
    let nrows = index.0.len();
    let mut rows = vec![vec![0u64; columns.len()]; nrows];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            rows[*i][j] = *v;
        }
    }
    let mut rhs_dense = vec![0u64; nrows];
    for (i, v) in b {
        rhs_dense[i] = v;
    }
    modlin::solve(rows, rhs_dense, columns.len(), p)
}

/// `x^i x'^(n−i)` for `i = 0..=n`.
fn power_products(x: &Polynomial, xp: &Polynomial, n: u32) -> Result<Vec<Polynomial>> {
    (0..=n).map(|i| Ok(x.pow(i)?.try_mul(&xp.pow(n - i)?)?)).collect()
}

/// Re-derives `S2`, `P2`, `Q4`, `R3` from `ψ6 − φ6` and `K² + 4φ6³` of a generic bundle.
pub fn ram_oracle(bundle: &BertiniBundle) -> Result<OracleOutput> {
    ram_oracle_seeded(bundle, 0)
}

pub fn ram_oracle_seeded(bundle: &BertiniBundle, seed: u64) -> Result<OracleOutput> {
    if bundle.domain != Domain::Rational {
        return Err(Error::NeedsGeneric);
    }
    for v in Variable::COEFFICIENTS {
        let e = bundle.spec.entry(v);
        if !(e.is_zero() || *e == Polynomial::var(v, Domain::Rational)) {
            return Err(Error::NeedsGeneric);
        }
    }
    let mut free: Vec<Variable> = bundle.w.variables();
    free.extend(bundle.wp.variables());
    free.retain(|v| v.is_coefficient());
    free.sort();
    free.dedup();

    // T = K² + 4φ6³ has the grade of K² whenever both summands are present
    let none = || Error::InconsistentSystem("degenerate input polynomial".into());
    let gd = grade(&(&bundle.psi6 - &bundle.phi6), "psi6 - phi6")?.ok_or_else(none)?;
    let gk = grade(&bundle.k, "K")?.ok_or_else(none)?;
    let gphi = grade(&bundle.phi6, "phi6")?.ok_or_else(none)?;
    if gk + gk != gphi + gphi + gphi {
        return Err(Error::InconsistentSystem("K^2 and phi6^3 differ in grade".into()));
    }
    let gt = gk + gk;
    let form = |i: usize, n: usize| Grade { du: i as i32, dp: (n - i) as i32, weight: [0; 3] };

    let mut unknowns = Vec::new();
    let mut push = |family, index, g: Grade| {
        unknowns.push(Unknown { family, index, support: support(&free, g), nodes: Vec::new(), samples: Vec::new() });
    };
    for i in 0..3 {
        push("s", i, gd - form(i, 2));
    }
    for i in 0..3 {
        push("p", i, gt - gphi - gphi - form(i, 2));
    }
    for i in 0..5 {
        push("q", i, gt - gphi - form(i, 4));
    }
    for i in 0..7 {
        push("u", i, gt - form(i, 6));
    }
    let npoints = unknowns.iter().map(|u| u.support.len()).max().unwrap_or(0).max(1);

    let p = MERSENNE_61;
    let reduced: Vec<Polynomial> = [&bundle.psi6, &bundle.phi6, &bundle.k, &bundle.w, &bundle.wp]
        .iter()
        .map(|x| x.reduce_mod(p))
        .collect::<std::result::Result<_, _>>()?;
    let mut rng = Stream::labelled(seed, "ram_oracle", 0);

    'attempt: for _attempt in 0..8 {
        let g: Vec<u64> = free.iter().map(|_| rng.nonzero_below(p)).collect();
        for u in unknowns.iter_mut() {
            u.nodes = u
                .support
                .iter()
                .map(|m| free.iter().zip(&g).fold(1, |acc, (v, gv)| modp::mul(acc, modp::pow(*gv, m.exponent(*v) as u64, p), p)))
                .collect();
            u.samples.clear();
            let mut sorted = u.nodes.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue 'attempt;
            }
        }
        let mut x: Vec<u64> = vec![1; free.len()];
        for _k in 1..=npoints {
            for (xv, gv) in x.iter_mut().zip(&g) {
                *xv = modp::mul(*xv, *gv, p);
            }
            let at: Vec<(Variable, Scalar)> =
                free.iter().zip(&x).map(|(v, xv)| (*v, Scalar::modular(*xv, p))).collect();
            let [psik, phik, kk, wk, wpk]: [Polynomial; 5] = reduced
                .iter()
                .map(|q| q.specialize(&at))
                .collect::<std::result::Result<Vec<_>, _>>()?
                .try_into()
                .expect("five polynomials");
            let dk = psik.try_sub(&phik)?;
            let tk = kk.try_mul(&kk)?.try_add(&phik.pow(3)?.scale_int(4))?;
            let s_cols = power_products(&wk, &wpk, 2)?;
            let phi2 = phik.try_mul(&phik)?;
            let mut cols: Vec<Polynomial> = Vec::with_capacity(15);
            for c in power_products(&wk, &wpk, 2)? {
                cols.push(phi2.try_mul(&c)?);
            }
            for c in power_products(&wk, &wpk, 4)? {
                cols.push(phik.try_mul(&c)?);
            }
            cols.extend(power_products(&wk, &wpk, 6)?);
            let mut values = Vec::with_capacity(18);
            for (cols, rhs) in [(&s_cols, &dk), (&cols, &tk)] {
                match solve_columns(cols, rhs, p) {
                    Solve::Unique(v) => values.extend(v),
                    Solve::Underdetermined => continue 'attempt,
                    Solve::Inconsistent => {
                        return Err(Error::InconsistentSystem("no coefficients match at a sample point".into()))
                    }
                }
            }
            for (u, v) in unknowns.iter_mut().zip(values) {
                if u.samples.len() < u.support.len() {
                    u.samples.push(v);
                }
            }
        }
        return finish(bundle, &unknowns, npoints, p);
    }
    Err(Error::InconsistentSystem("no nondegenerate sample sequence found".into()))
}

fn finish(bundle: &BertiniBundle, unknowns: &[Unknown], samples: usize, p: u64) -> Result<OracleOutput> {
    let q = Domain::Rational;
    let mut polys: FxHashMap<(&str, usize), Polynomial> = FxHashMap::default();
    for u in unknowns {
        // samples are taken at k = 1..n, so the solved weights are c_j·b_j
        let scaled = modlin::transposed_vandermonde(&u.nodes, &u.samples, p);
        let mut terms = Vec::new();
        for ((m, c), b) in u.support.iter().zip(scaled).zip(&u.nodes) {
            let c = modp::mul(c, modp::inv(*b, p).expect("nonzero node"), p);
            if c == 0 {
                continue;
            }
            let (n, d) = rational_reconstruction(c, p)
                .ok_or_else(|| Error::InconsistentSystem(format!("coefficient of {}{} does not lift to ℚ", u.family, u.index)))?;
            let c = Scalar::ratio(n as i64, d as i64).expect("nonzero denominator");
            terms.push((*m, c));
        }
        polys.insert((u.family, u.index), Polynomial::from_terms(q, terms)?);
    }
    let take = |f: &str, n: usize| -> Vec<Polynomial> { (0..n).map(|i| polys[&(f, i)].clone()).collect() };
    let s = take("s", 3);
    let pp = take("p", 3);
    let qq = take("q", 5);
    let u = take("u", 7);

    let (w, wp, phi) = (&bundle.w, &bundle.wp, &bundle.phi6);
    if &bundle.psi6 - phi != compose_form(&s, w, wp)? {
        return Err(Error::InconsistentSystem("interpolated S2 fails the exact check".into()));
    }
    let t = &bundle.k * &bundle.k + phi.pow(3)?.scale_int(4);
    let rhs = phi * phi * compose_form(&pp, w, wp)? + phi * compose_form(&qq, w, wp)? + compose_form(&u, w, wp)?;
    if t != rhs {
        return Err(Error::InconsistentSystem("interpolated P2, Q4, U6 fail the exact check".into()));
    }

    let root = exact_sqrt(&binary_form(&u))?;
    let coeff_of = |i: u32| -> Polynomial {
        let key = Monomial::from_pairs([(Variable::T1, i), (Variable::T2, 3 - i)]).expect("small");
        root.collect_in(&[Variable::T1, Variable::T2])
            .into_iter()
            .find(|(m, _)| *m == key)
            .map(|(_, c)| c)
            .unwrap_or_else(|| Polynomial::zero(q))
    };
    let mut r: Vec<Polynomial> = (0..4).map(coeff_of).collect();

    let reference = ram_closed_form().specialize_to(&bundle.spec)?.r;
    let mut sign_flipped = false;
    if let Some(i) = (0..4).find(|&i| !reference[i].is_zero()) {
        if r[i] == -&reference[i] {
            sign_flipped = true;
            r = r.iter().map(|x| -x).collect();
        }
    }
    Ok(OracleOutput {
        ram: RamData {
            s: s.try_into().expect("3"),
            p: pp.try_into().expect("3"),
            q: qq.try_into().expect("5"),
            r: r.try_into().expect("4"),
        },
        sign_flipped,
        samples,
    })
}
