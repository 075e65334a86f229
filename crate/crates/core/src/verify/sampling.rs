//! Pointwise checks on concrete pencils: the involution squares to the identity,
//! and its fixed points lie on the branch curve.

use crate::bertini::{build_bundle, BertiniBundle};
use crate::error::{Error, Result};
use crate::geiser::{anticanonical_map, build_geiser, quartic_residual, GeiserBundle, GeiserRamData};
use crate::pencil::{PencilSpec, ProjPoint};
use crate::ring::{Domain, Polynomial, Scalar, Variable};
use crate::rng::Stream;
use crate::sigma2::{ram_closed_form, sigma2_chart, trigonal_residual, RamData};

use super::roots;

/// Lines tried per wanted fixed point before giving up.
const LINES_PER_POINT: usize = 50;
/// Largest fraction of roundtrip samples that may land on the degenerate locus.
const MAX_SKIP_FRACTION: f64 = 0.2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    Bertini,
    Geiser,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub name: String,
    pub passed: usize,
    pub skipped: usize,
    /// Offending points, as text.
    pub failures: Vec<String>,
}

impl SampleReport {
    fn new(name: &str) -> SampleReport {
        SampleReport { name: name.to_string(), passed: 0, skipped: 0, failures: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

enum Built {
    Bertini(Box<BertiniBundle>, RamData),
    Geiser(Box<GeiserBundle>, GeiserRamData),
}

impl Built {
    fn new(spec: &PencilSpec, which: Involution) -> Result<Built> {
        if !spec.is_concrete() {
            return Err(Error::NeedsConcrete);
        }
        Ok(match which {
            Involution::Bertini => {
                Built::Bertini(Box::new(build_bundle(spec)?), ram_closed_form().specialize_to(spec)?)
            }
            Involution::Geiser => Built::Geiser(Box::new(build_geiser(spec)?), GeiserRamData::for_spec(spec)?),
        })
    }

    fn apply(&self, y: &ProjPoint) -> Result<ProjPoint> {
        match self {
            Built::Bertini(b, _) => b.apply(y),
            Built::Geiser(g, _) => g.apply(y),
        }
    }

    /// The curve of fixed points.
    fn branch(&self) -> &Polynomial {
        match self {
            Built::Bertini(b, _) => &b.k,
            Built::Geiser(g, _) => &g.kt,
        }
    }

    /// The branch equation of the double cover, evaluated at the image of `y`.
    fn residual(&self, spec: &PencilSpec, y: &ProjPoint) -> Result<Scalar> {
        match self {
            Built::Bertini(_, ram) => trigonal_residual(ram, &sigma2_chart(spec, y)?),
            Built::Geiser(_, gram) => quartic_residual(gram, &anticanonical_map(spec, y)?),
        }
    }
}

fn scalar(rng: &mut Stream, d: Domain) -> Scalar {
    match d {
        Domain::Prime(p) => Scalar::modular(rng.below(p), p),
        Domain::Rational => Scalar::from_i64(rng.below(201) as i64 - 100, d),
    }
}

fn random_point(rng: &mut Stream, d: Domain) -> ProjPoint {
    loop {
        let c = [scalar(rng, d), scalar(rng, d), scalar(rng, d)];
        if let Ok(p) = ProjPoint::new(&c) {
            return p;
        }
    }
}

/// Applies the involution twice at `n` random points and compares with the start.
///
/// Points on the base locus or a contracted curve are skipped; more than a fifth
/// of skips is reported as [`Error::ExcessiveDegeneracy`].
pub fn involution_roundtrip(spec: &PencilSpec, n: usize, seed: u64, which: Involution) -> Result<SampleReport> {
    let built = Built::new(spec, which)?;
    let d = spec.domain();
    let mut rng = Stream::labelled(seed, "involution_roundtrip", 0);
    let mut report = SampleReport::new("involution_roundtrip");
    for _ in 0..n {
        let y = random_point(&mut rng, d);
        match built.apply(&y).and_then(|x| built.apply(&x)) {
            Ok(back) if back == y => report.passed += 1,
            Ok(back) => report.failures.push(format!("{} -> {}", y.to_text(), back.to_text())),
            Err(Error::DegeneratePoint) => report.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    if report.skipped as f64 > MAX_SKIP_FRACTION * n as f64 {
        return Err(Error::ExcessiveDegeneracy { skipped: report.skipped, total: n });
    }
    Ok(report)
}

/// Dense coefficients of `f(s·P + Q)` in `s`.
fn on_line(f: &Polynomial, p: &ProjPoint, q: &ProjPoint) -> Result<Vec<u64>> {
    let d = f.domain();
    let s = Polynomial::var(Variable::T1, d);
    let param: Vec<Polynomial> = p
        .coords()
        .iter()
        .zip(q.coords())
        .map(|(a, b)| &s * &Polynomial::constant(a) + Polynomial::constant(b))
        .collect();
    let bind: Vec<(Variable, &Polynomial)> = Variable::POINT.iter().copied().zip(param.iter()).collect();
    let g = f.substitute(&bind)?;
    let mut dense = vec![0; g.degree_of(Variable::T1) as usize + 1];
    for (m, c) in g.terms() {
        dense[m.exponent(Variable::T1) as usize] = c.residue().expect("prime field");
    }
    Ok(dense)
}

/// Finds `n` points of the branch curve on random lines and checks that each is
/// fixed by the involution and lies on the branch curve of the double cover.
pub fn fixed_locus_sample(spec: &PencilSpec, n: usize, seed: u64, which: Involution) -> Result<SampleReport> {
    let Domain::Prime(prime) = spec.domain() else {
        return Err(Error::NeedsConcrete);
    };
    let built = Built::new(spec, which)?;
    let mut rng = Stream::labelled(seed, "fixed_locus_sample", 0);
    let mut report = SampleReport::new("fixed_locus_sample");
    for _ in 0..LINES_PER_POINT * n {
        if report.passed + report.failures.len() >= n {
            break;
        }
        let (p, q) = (random_point(&mut rng, spec.domain()), random_point(&mut rng, spec.domain()));
        let line = on_line(built.branch(), &p, &q)?;
        if line.len() < 2 {
            continue;
        }
        for s in roots(&line, prime, &mut rng) {
            let s = Scalar::modular(s, prime);
            let coords: Vec<Scalar> = p.coords().iter().zip(q.coords()).map(|(a, b)| &(&s * a) + b).collect();
            let Ok(y) = ProjPoint::new(&coords) else { continue };
            let fixed = match built.apply(&y) {
                Ok(x) => x == y,
                Err(Error::DegeneratePoint) => {
                    report.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let on_branch = match built.residual(spec, &y) {
                Ok(r) => r.is_zero(),
                Err(Error::DegeneratePoint | Error::ChartUndefined) => {
                    report.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            if fixed && on_branch {
                report.passed += 1;
            } else {
                report.failures.push(format!("{} (fixed: {fixed}, on branch: {on_branch})", y.to_text()));
            }
            if report.passed + report.failures.len() >= n {
                break;
            }
        }
    }
    let found = report.passed + report.failures.len();
    if found < n {
        return Err(Error::SamplingExhausted { found, wanted: n });
    }
    Ok(report)
}
