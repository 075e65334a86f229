//! Acceptance criteria 1–11, one PASS/FAIL line each.
//!
//! Run with `cargo test --release -p bertini-cli --test acceptance -- --nocapture`.

use std::process::Command;

use bertini_core::bertini::Corruption;
use bertini_core::pencil::PencilSpec;
use bertini_core::ring::MERSENNE_61;
use bertini_core::rng::Stream;
use bertini_core::verify::{
    fixed_locus_sample, involution_roundtrip, run_suite, CheckRecord, Involution, Mode, Options, Report, Status,
    Suite,
};

/// Criteria that cannot be met as stated; see the README.
const KNOWN_UNMET: [u32; 1] = [1];

/// Pencils, points per pencil, and largest degenerate fraction for the roundtrips.
const ROUNDTRIP_PENCILS: u64 = 5;
const ROUNDTRIP_POINTS: usize = 100;
const MAX_DEGENERATE: f64 = 0.05;
const FIXED_POINTS: usize = 50;
/// Modular trials required whenever a symbolic check falls back.
const MIN_FALLBACK_TRIALS: u32 = 40;

fn symbolic_pass(r: &CheckRecord) -> bool {
    r.status == Status::Pass && r.mode == "symbolic"
}

fn record<'a>(report: &'a Report, name: &str) -> &'a CheckRecord {
    report.check(name).unwrap_or_else(|| panic!("no check {name}"))
}

fn suite_symbolic(report: &Report, suite: Suite) -> (bool, String) {
    let names: Vec<&'static str> =
        bertini_core::verify::catalogue().iter().filter(|c| c.suite == suite).map(|c| c.name).collect();
    let bad: Vec<String> = names
        .iter()
        .map(|n| record(report, n))
        .filter(|r| r.status != Status::Pass || (r.mode != "symbolic" && r.mode != "modular"))
        .map(|r| format!("{} ({:?}, {})", r.name, r.status, r.mode))
        .collect();
    // modular-only checks are pointwise by nature; everything else must be exact
    (bad.is_empty(), if bad.is_empty() { format!("{} checks", names.len()) } else { bad.join("; ") })
}

fn sampled(geiser: bool, i: u64) -> PencilSpec {
    let base = if geiser { PencilSpec::generic_geiser() } else { PencilSpec::generic() };
    base.sample(MERSENNE_61, &mut Stream::labelled(0, "acceptance", i)).unwrap()
}

fn roundtrips(which: Involution) -> (bool, String) {
    let (mut passed, mut skipped, mut failures) = (0, 0, 0);
    for i in 0..ROUNDTRIP_PENCILS {
        match involution_roundtrip(&sampled(which == Involution::Geiser, i), ROUNDTRIP_POINTS, i, which) {
            Ok(r) => {
                passed += r.passed;
                skipped += r.skipped;
                failures += r.failures.len();
            }
            Err(e) => return (false, format!("pencil {i}: {e}")),
        }
    }
    let total = ROUNDTRIP_PENCILS as usize * ROUNDTRIP_POINTS;
    let ok = failures == 0 && (skipped as f64) < MAX_DEGENERATE * total as f64;
    (ok, format!("{which:?}: {passed} passed, {skipped} degenerate, {failures} failed"))
}

fn fixed(which: Involution) -> (bool, String) {
    match fixed_locus_sample(&sampled(which == Involution::Geiser, 99), FIXED_POINTS, 0, which) {
        Ok(r) => (r.ok() && r.passed >= FIXED_POINTS, format!("{which:?}: {} fixed on branch", r.passed)),
        Err(e) => (false, format!("{which:?}: {e}")),
    }
}

fn both((a, x): (bool, String), (b, y): (bool, String)) -> (bool, String) {
    (a && b, format!("{x}; {y}"))
}

#[test]
fn acceptance() {
    let symbolic = run_suite(Suite::All, &Options { fallback_trials: MIN_FALLBACK_TRIALS, ..Options::default() });
    let mut results: Vec<(u32, bool, String)> = Vec::new();

    // 1. Bertini identities, all exact
    let bertini: Vec<&CheckRecord> = bertini_core::verify::catalogue()
        .iter()
        .filter(|c| c.suite == Suite::Bertini)
        .map(|c| record(&symbolic, c.name))
        .collect();
    let not_exact: Vec<String> =
        bertini.iter().filter(|r| !symbolic_pass(r)).map(|r| format!("{} ({:?}, {})", r.name, r.status, r.mode)).collect();
    results.push((1, not_exact.is_empty(), format!("{} checks; not exact: {}", bertini.len(), not_exact.join(", "))));

    let r = record(&symbolic, "psi_relation");
    results.push((2, symbolic_pass(r), r.mode.clone()));

    let r = record(&symbolic, "k2_relation");
    let ok = r.status == Status::Pass
        && (r.mode == "symbolic" || (r.mode == "modular-fallback" && r.trials >= MIN_FALLBACK_TRIALS))
        && symbolic.prime == MERSENNE_61.to_string();
    results.push((3, ok, format!("{} with {} trials", r.mode, r.trials)));

    let r = record(&symbolic, "oracle_agreement");
    results.push((4, symbolic_pass(r), r.mode.clone()));

    let r = record(&symbolic, "prime_swap_symmetry");
    results.push((5, symbolic_pass(r), r.mode.clone()));

    let (ok, detail) = suite_symbolic(&symbolic, Suite::Geiser);
    results.push((6, ok, detail));

    let (ok, detail) = both(roundtrips(Involution::Bertini), roundtrips(Involution::Geiser));
    results.push((7, ok, detail));

    let (ok, detail) = both(fixed(Involution::Bertini), fixed(Involution::Geiser));
    results.push((8, ok, detail));

    let section = record(&symbolic, "basepoint_section");
    let orders = [record(&symbolic, "basepoint_singular"), record(&symbolic, "geiser_basepoint_singular")];
    let ok = symbolic_pass(section) && orders.iter().all(|r| r.status == Status::Pass && r.trials > 0);
    results.push((9, ok, format!("section {}, order checks over {} trials", section.mode, orders[0].trials)));

    let mut caught = Vec::new();
    for corruption in [Corruption::C5, Corruption::K, Corruption::Rp1] {
        let opts = Options { mode: Mode::Modular, trials: 3, corruption, ..Options::default() };
        let report = run_suite(Suite::Bertini, &opts);
        let failed: Vec<&str> =
            report.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect();
        caught.push((corruption, failed.len()));
    }
    results.push((
        10,
        caught.iter().all(|(_, n)| *n > 0),
        caught.iter().map(|(c, n)| format!("{c:?}: {n} failing")).collect::<Vec<_>>().join(", "),
    ));

    let run = || {
        Command::new(env!("CARGO_BIN_EXE_bertini"))
            .args(["verify", "--mode", "modular", "--seed", "0"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let ok = a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    results.push((11, ok, format!("{} bytes, exit {:?}", a.stdout.len(), a.status.code())));

    let mut unmet = Vec::new();
    for (n, ok, detail) in &results {
        println!("criterion {n:>2}: {} ({detail})", if *ok { "PASS" } else { "FAIL" });
        if !ok {
            unmet.push(*n);
        }
    }
    assert_eq!(unmet, KNOWN_UNMET, "unexpected set of unmet criteria");
}
