//! Identity verification: exact expansion, randomized evaluation over `GF(p)`, and reports.
//!
//! A check produces a list of polynomials that must all vanish. In symbolic mode
//! they are built once over ℚ with generic coefficients and compared with zero.
//! In modular mode every trial draws uniform nonzero residues for the pencil
//! coefficients (and `u2, u3` where relevant), builds the polynomials of that
//! concrete pencil, and evaluates them at uniform values of `y1, y2, y3, t1, t2`.

mod catalogue;
mod roots;
mod sampling;

use std::cell::OnceCell;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bertini::{build_bundle_with, BertiniBundle, Corruption};
use crate::error::Result;
use crate::geiser::{build_geiser, GeiserBundle};
use crate::pencil::PencilSpec;
use crate::ring::{modp, Domain, Polynomial, Scalar, Variable, MERSENNE_61};
use crate::rng::Stream;
use crate::sigma2::{ram_closed_form, RamData};

pub use catalogue::{catalogue, Base, Check, Expect};
pub use roots::roots;
pub use sampling::{fixed_locus_sample, involution_roundtrip, Involution, SampleReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bertini,
    Sigma2,
    Geiser,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bertini => "bertini",
            Suite::Sigma2 => "sigma2",
            Suite::Geiser => "geiser",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        match s {
            "bertini" => Ok(Suite::Bertini),
            "sigma2" => Ok(Suite::Sigma2),
            "geiser" => Ok(Suite::Geiser),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

/// Symbolic mode falls back to modular evaluation for checks over the memory budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Modular,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Symbolic => "symbolic",
            Mode::Modular => "modular",
        }
    }
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Mode, String> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "modular" => Ok(Mode::Modular),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub mode: Mode,
    /// Trials per modular check.
    pub trials: u32,
    pub prime: u64,
    pub seed: u64,
    /// Bytes a single symbolic check may use before it falls back.
    pub mem_budget: u64,
    /// Trials used when a symbolic check falls back.
    pub fallback_trials: u32,
    /// Record wall time per check; off by default so reports are reproducible.
    pub timings: bool,
    /// Sign corruption applied to the bundle, for negative controls.
    pub corruption: Corruption,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            mode: Mode::Symbolic,
            trials: 20,
            prime: MERSENNE_61,
            seed: 0,
            mem_budget: 8 << 30,
            fallback_trials: 40,
            timings: false,
            corruption: Corruption::None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub trials: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: Option<u64>,
    /// `symbolic`, `modular`, or `modular-fallback`.
    pub mode: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub mode: String,
    /// Decimal string, so 64-bit primes survive any JSON reader.
    pub prime: String,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub status: Status,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Lazily built objects shared by the checks that run on one pencil.
pub(crate) struct Ctx {
    pub spec: PencilSpec,
    pub u: [Polynomial; 2],
    pub seed: u64,
    corruption: Corruption,
    bundle: OnceCell<BertiniBundle>,
    geiser: OnceCell<GeiserBundle>,
    ram: OnceCell<RamData>,
}

impl Ctx {
    fn new(spec: PencilSpec, u: [Polynomial; 2], seed: u64, corruption: Corruption) -> Ctx {
        Ctx { spec, u, seed, corruption, bundle: OnceCell::new(), geiser: OnceCell::new(), ram: OnceCell::new() }
    }

    fn symbolic(base: Base, seed: u64, corruption: Corruption) -> Ctx {
        let q = Domain::Rational;
        Ctx::new(base.spec(), [Polynomial::var(Variable::U2, q), Polynomial::var(Variable::U3, q)], seed, corruption)
    }

    pub fn domain(&self) -> Domain {
        self.spec.domain()
    }

    pub fn bundle(&self) -> Result<&BertiniBundle> {
        if let Some(b) = self.bundle.get() {
            return Ok(b);
        }
        let b = build_bundle_with(&self.spec, self.corruption)?;
        Ok(self.bundle.get_or_init(|| b))
    }

    pub fn geiser(&self) -> Result<&GeiserBundle> {
        if let Some(b) = self.geiser.get() {
            return Ok(b);
        }
        let b = build_geiser(&self.spec)?;
        Ok(self.geiser.get_or_init(|| b))
    }

    /// Closed-form ramification data specialized to the pencil.
    pub fn ram(&self) -> Result<&RamData> {
        if let Some(r) = self.ram.get() {
            return Ok(r);
        }
        let r = ram_closed_form().specialize_to(&self.spec)?;
        Ok(self.ram.get_or_init(|| r))
    }

    pub fn entry(&self, v: Variable) -> &Polynomial {
        self.spec.entry(v)
    }

    pub fn y(&self, v: Variable) -> Polynomial {
        Polynomial::var(v, self.domain())
    }
}

/// Memory available to this process according to the kernel, if known.
fn mem_available() -> Option<u64> {
    let text = std::fs::read_to_string("/proc/meminfo").ok()?;
    let line = text.lines().find(|l| l.starts_with("MemAvailable:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

fn effective_budget(opts: &Options) -> u64 {
    mem_available().map_or(opts.mem_budget, |m| m.min(opts.mem_budget))
}

fn first_nonzero(diffs: &[Polynomial]) -> Option<(usize, &Polynomial)> {
    diffs.iter().enumerate().find(|(_, d)| !d.is_zero())
}

fn judge_symbolic(check: &Check, diffs: &[Polynomial]) -> (Status, Option<String>) {
    match (check.expect, first_nonzero(diffs)) {
        (Expect::Zero, None) => (Status::Pass, None),
        (Expect::Zero, Some((i, d))) => {
            (Status::Fail, Some(format!("component {i} is nonzero with {} terms", d.num_terms())))
        }
        (Expect::Differ, Some(_)) => (Status::Pass, None),
        (Expect::Differ, None) => (Status::Fail, Some("the two constructions agree".into())),
    }
}

fn run_symbolic(check: &Check, ctx: &Ctx) -> (Status, Option<String>) {
    let f = check.symbolic.expect("symbolic runner");
    match f(ctx) {
        Ok(diffs) => judge_symbolic(check, &diffs),
        Err(e) => (Status::Fail, Some(format!("error: {e}"))),
    }
}

fn sample_ctx(check: &Check, trial: u32, opts: &Options) -> Result<(Ctx, Vec<(Variable, Scalar)>)> {
    let p = opts.prime;
    let mut rng = Stream::labelled(opts.seed, check.name, trial as u64);
    let base = check.base.spec().reduce_mod(p)?;
    let mut vars: Vec<Variable> = Variable::COEFFICIENTS
        .iter()
        .flat_map(|v| base.entry(*v).variables())
        .collect();
    vars.sort();
    vars.dedup();
    let mut values: Vec<(Variable, Scalar)> = vars.iter().map(|v| (*v, Scalar::modular(rng.nonzero_below(p), p))).collect();
    let spec = base.specialize(&values)?;
    let u = [Variable::U2, Variable::U3].map(|v| {
        let val = values.iter().find(|(w, _)| *w == v).map_or_else(|| rng.nonzero_below(p), |(_, s)| s.residue().expect("modular"));
        Polynomial::constant(&Scalar::modular(val, p))
    });
    for v in [Variable::Y1, Variable::Y2, Variable::Y3, Variable::T1, Variable::T2] {
        values.push((v, Scalar::modular(rng.nonzero_below(p), p)));
    }
    Ok((Ctx::new(spec, u, opts.seed, opts.corruption), values))
}

fn witness(values: &[(Variable, Scalar)]) -> String {
    values.iter().map(|(v, s)| format!("{v}={s}")).collect::<Vec<_>>().join(",")
}

fn run_modular(check: &Check, trials: u32, opts: &Options) -> (Status, Option<String>) {
    let f = check.modular.expect("modular runner");
    for trial in 0..trials {
        let (ctx, values) = match sample_ctx(check, trial, opts) {
            Ok(x) => x,
            Err(e) => return (Status::Fail, Some(format!("error: {e}"))),
        };
        let point: Vec<(Variable, Scalar)> =
            values.iter().filter(|(v, _)| !v.is_coefficient() && !matches!(v, Variable::U2 | Variable::U3)).cloned().collect();
        let verdict = f(&ctx).and_then(|diffs| {
            let vals = diffs.iter().map(|d| d.evaluate(&point)).collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(vals.iter().position(|v| !v.is_zero()))
        });
        match verdict {
            Ok(None) => {}
            Ok(Some(i)) => return (Status::Fail, Some(format!("trial {trial}, component {i}: {}", witness(&values)))),
            Err(e) => return (Status::Fail, Some(format!("trial {trial}: error: {e}: {}", witness(&values)))),
        }
    }
    (Status::Pass, None)
}

/// Runs the catalogue of one suite (or all) and assembles the report, sorted by check name.
pub fn run_suite(suite: Suite, opts: &Options) -> Report {
    let checks: Vec<Check> = catalogue().into_iter().filter(|c| suite.includes(c.suite)).collect();
    let records = run_checks(&checks, opts);
    let status = if records.iter().all(|r| r.status == Status::Pass) { Status::Pass } else { Status::Fail };
    Report {
        suite: suite.name().to_string(),
        mode: opts.mode.name().to_string(),
        prime: opts.prime.to_string(),
        seed: opts.seed,
        checks: records,
        status,
    }
}

/// Runs a single named check, as [`run_suite`] would.
pub fn run_check(name: &str, opts: &Options) -> Option<CheckRecord> {
    let check = catalogue().into_iter().find(|c| c.name == name)?;
    run_checks(std::slice::from_ref(&check), opts).pop()
}

fn run_checks(checks: &[Check], opts: &Options) -> Vec<CheckRecord> {
    let budget = effective_budget(opts);
    let mut contexts: Vec<(Base, Ctx)> = Vec::new();
    let mut records = Vec::new();
    for check in checks {
        let start = Instant::now();
        let symbolic = match (opts.mode, check.symbolic.is_some(), check.modular.is_some()) {
            (_, true, false) => true,
            (_, false, true) => false,
            (Mode::Modular, ..) => false,
            (Mode::Symbolic, ..) => true,
        };
        let (status, witness, trials, mode) = if symbolic {
            if contexts.iter().all(|(b, _)| *b != check.base) {
                contexts.push((check.base, Ctx::symbolic(check.base, opts.seed, opts.corruption)));
            }
            let ctx = &contexts.iter().find(|(b, _)| *b == check.base).expect("just inserted").1;
            let estimate = match check.estimate {
                Some(est) => est(ctx).unwrap_or(u64::MAX),
                None => 0,
            };
            if estimate > budget && check.modular.is_some() {
                let (s, w) = run_modular(check, opts.fallback_trials, opts);
                (s, w, opts.fallback_trials, "modular-fallback")
            } else {
                let (s, w) = run_symbolic(check, ctx);
                (s, w, 0, "symbolic")
            }
        } else {
            let trials = opts.trials;
            let (s, w) = run_modular(check, trials, opts);
            (s, w, trials, "modular")
        };
        records.push(CheckRecord {
            name: check.name.to_string(),
            status,
            trials,
            witness,
            ms: opts.timings.then(|| start.elapsed().as_millis() as u64),
            mode: mode.to_string(),
        });
    }
    records.sort_by(|a, b| a.name.cmp(&b.name));
    records
}

/// Upper bound on the number of bytes one product of `n`- and `m`-term polynomials needs.
pub(crate) fn product_bytes(n: usize, m: usize) -> u64 {
    const BYTES_PER_TERM: u64 = 64;
    (n as u64).saturating_mul(m as u64).saturating_mul(BYTES_PER_TERM)
}

/// Primes usable as the modulus of modular mode.
pub fn is_odd_prime(p: u64) -> bool {
    p > 2 && modp::is_prime(p)
}
