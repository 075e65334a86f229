//! `bertini`: verify the identities, evaluate the involutions, and dump polynomials.

mod pencil_file;

use std::path::PathBuf;
use std::process::ExitCode;

use bertini_core::bertini::BUNDLE_NAMES;
use bertini_core::geiser::{anticanonical_map, GeiserRamData, GEISER_NAMES};
use bertini_core::ring::{Polynomial, MERSENNE_61};
use bertini_core::sigma2::{cone_map, ram_closed_form, sigma2_chart};
use bertini_core::verify::{is_odd_prime, run_suite, Mode, Options, Suite};
use bertini_core::{build_bundle, build_geiser, Error, PencilSpec, ProjPoint, Scalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bertini", version, about = "Bertini and Geiser involutions of pencils of plane cubics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its JSON report.
    Verify(VerifyArgs),
    /// Apply the involution to a point of a concrete pencil.
    Eval(EvalArgs),
    /// Print the ramification data as JSON.
    Ram(RamArgs),
    /// Print a named polynomial in canonical text.
    Poly(PolyArgs),
    /// Map a point to the cone, the chart of Σ2, or (for Geiser pencils) the plane.
    Map(MapArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// `symbolic` falls back to modular evaluation for checks over the memory budget.
    #[arg(long, default_value = "symbolic")]
    mode: Mode,
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    #[arg(long, default_value_t = MERSENNE_61)]
    prime: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8 << 30)]
    mem_budget: u64,
    /// Record wall time per check (makes the report nondeterministic).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Pencil file (JSON).
    #[arg(long)]
    pencil: Option<PathBuf>,
    /// Fully generic coefficients over ℚ.
    #[arg(long)]
    generic: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    pencil: PathBuf,
    /// Homogeneous coordinates, e.g. "1,2/3,-5".
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long)]
    geiser: bool,
}

#[derive(Args)]
struct RamArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    geiser: bool,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long)]
    name: String,
    #[command(flatten)]
    source: Source,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Cone,
    Sigma2,
    Plane,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long)]
    pencil: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    #[arg(long)]
    target: Target,
}

/// A failed command: exit status and message for standard error.
struct Failure(u8, String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure(2, msg.into())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::DegeneratePoint | Error::ChartUndefined => Failure(3, e.to_string()),
            e => Failure::usage(e.to_string()),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn ok(text: String) -> Outcome {
    Ok((text, 0))
}

fn verify(a: VerifyArgs) -> Outcome {
    if !is_odd_prime(a.prime) {
        return Err(Failure::usage(format!("--prime {} is not an odd prime", a.prime)));
    }
    let opts = Options {
        mode: a.mode,
        trials: a.trials,
        prime: a.prime,
        seed: a.seed,
        mem_budget: a.mem_budget,
        timings: a.timings,
        ..Options::default()
    };
    let report = run_suite(a.suite, &opts);
    Ok((report.to_json(), if report.passed() { 0 } else { 1 }))
}

fn point(text: &str, spec: &PencilSpec) -> Result<ProjPoint, Failure> {
    let coords = text
        .split(',')
        .map(|c| Scalar::parse_in(c, spec.domain()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::usage(format!("--point: {e}")))?;
    if coords.len() != 3 {
        return Err(Failure::usage("--point needs three coordinates"));
    }
    Ok(ProjPoint::new(&coords)?)
}

fn load(path: &std::path::Path) -> Result<PencilSpec, Failure> {
    pencil_file::load(path).map_err(Failure::usage)
}

fn source(s: &Source, geiser: bool) -> Result<PencilSpec, Failure> {
    match &s.pencil {
        Some(path) => load(path),
        None if geiser => Ok(PencilSpec::generic_geiser()),
        None => Ok(PencilSpec::generic()),
    }
}

fn eval(a: EvalArgs) -> Outcome {
    let spec = load(&a.pencil)?;
    let y = point(&a.point, &spec)?;
    let image = if a.geiser { build_geiser(&spec)?.apply(&y)? } else { build_bundle(&spec)?.apply(&y)? };
    ok(image.to_text())
}

#[derive(Serialize)]
struct RamJson {
    s: Vec<String>,
    p: Vec<String>,
    q: Vec<String>,
    r: Vec<String>,
}

#[derive(Serialize)]
struct GeiserRamJson {
    st: Vec<String>,
    p: Vec<String>,
    qt: Vec<String>,
    rt: Vec<String>,
}

fn texts(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::canonical_text).collect()
}

fn ram(a: RamArgs) -> Outcome {
    let spec = source(&a.source, a.geiser)?;
    let json = if a.geiser {
        let g = GeiserRamData::for_spec(&spec)?;
        serde_json::to_string_pretty(&GeiserRamJson { st: texts(&g.st), p: texts(&g.p), qt: texts(&g.qt), rt: texts(&g.rt) })
    } else {
        let r = ram_closed_form().specialize_to(&spec)?;
        serde_json::to_string_pretty(&RamJson { s: texts(&r.s), p: texts(&r.p), q: texts(&r.q), r: texts(&r.r) })
    };
    ok(json.expect("plain strings serialize"))
}

/// Geiser polynomials that have no counterpart in the Bertini bundle; `zt1..zt3` name the reduced `z`.
fn geiser_name(name: &str) -> Option<&str> {
    match name {
        "zt1" | "zt2" | "zt3" => Some(&name[1..]),
        "Kt" => Some(name),
        n if GEISER_NAMES.contains(&n) && !BUNDLE_NAMES.contains(&n) => Some(n),
        _ => None,
    }
}

fn poly(a: PolyArgs) -> Outcome {
    if BUNDLE_NAMES.contains(&a.name.as_str()) {
        let bundle = build_bundle(&source(&a.source, false)?)?;
        return ok(bundle.get(&a.name).expect("listed name").canonical_text());
    }
    let Some(name) = geiser_name(&a.name) else {
        return Err(Failure::usage(format!("unknown polynomial {:?}", a.name)));
    };
    let bundle = build_geiser(&source(&a.source, true)?)?;
    ok(bundle.get(name).expect("listed name").canonical_text())
}

fn join(s: &[Scalar]) -> String {
    s.iter().map(Scalar::to_string).collect::<Vec<_>>().join(",")
}

fn map(a: MapArgs) -> Outcome {
    let spec = load(&a.pencil)?;
    let y = point(&a.point, &spec)?;
    match a.target {
        Target::Cone => ok(join(&cone_map(&spec, &y)?.z)),
        Target::Sigma2 => {
            let pt = sigma2_chart(&spec, &y)?;
            let x = pt.x_affine().ok_or(Error::ChartUndefined)?;
            ok(join(&[x, pt.y]))
        }
        Target::Plane => ok(anticanonical_map(&spec, &y)?.to_text()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Eval(a) => eval(a),
        Command::Ram(a) => ram(a),
        Command::Poly(a) => poly(a),
        Command::Map(a) => map(a),
    };
    match outcome {
        Ok((text, code)) => {
            println!("{text}");
            ExitCode::from(code)
        }
        Err(Failure(code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
