use bertini_core::bertini::Corruption;
use bertini_core::pencil::PencilSpec;
use bertini_core::rng::Stream;
use bertini_core::verify::{
    catalogue, fixed_locus_sample, involution_roundtrip, run_check, run_suite, Expect, Involution, Mode, Options,
    Status, Suite,
};
use bertini_core::{Error, Variable};

const P: u64 = 1_000_000_007;

fn modular() -> Options {
    Options { mode: Mode::Modular, trials: 5, ..Options::default() }
}

#[test]
fn catalogue_names_are_unique() {
    let mut names: Vec<_> = catalogue().iter().map(|c| c.name).collect();
    let n = names.len();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), n);
    assert_eq!(catalogue().iter().filter(|c| c.expect == Expect::Differ).count(), 1);
}

#[test]
fn modular_suite_passes() {
    let report = run_suite(Suite::All, &modular());
    assert!(report.passed(), "{}", report.to_json());
    let sym_only = ["oracle_agreement", "brace_order_guard"];
    for c in &report.checks {
        if sym_only.contains(&c.name.as_str()) {
            assert_eq!((c.mode.as_str(), c.trials), ("symbolic", 0));
        } else {
            assert_eq!((c.mode.as_str(), c.trials), ("modular", 5), "{}", c.name);
        }
    }
}

#[test]
fn modular_reports_are_reproducible() {
    let opts = Options { prime: P, ..modular() };
    let a = run_suite(Suite::Geiser, &opts).to_json();
    let b = run_suite(Suite::Geiser, &opts).to_json();
    assert_eq!(a, b);
    assert!(a.contains("\"prime\": \"1000000007\""));
    assert!(a.contains("\"ms\": null"));
}

#[test]
fn corruptions_are_caught() {
    let cases = [
        (Corruption::C5, "double_vanishing"),
        (Corruption::K, "bertini_id_y3z1_y1z3"),
        (Corruption::Rp1, "bertini_id_y1r2_y2r1"),
    ];
    for (corruption, name) in cases {
        let opts = Options { corruption, ..modular() };
        let record = run_check(name, &opts).unwrap();
        assert_eq!(record.status, Status::Fail, "{corruption:?}");
        let witness = record.witness.unwrap();
        assert!(witness.starts_with("trial 0"), "{witness}");
        assert!(witness.contains("y1="), "{witness}");
        assert!(!run_suite(Suite::Bertini, &opts).passed());
    }
}

#[test]
fn symbolic_corruption_is_caught() {
    let opts = Options { corruption: Corruption::Rp1, ..Options::default() };
    let record = run_check("tangency", &opts).unwrap();
    assert_eq!(record.status, Status::Fail);
    assert!(record.witness.unwrap().contains("nonzero"));
}

#[test]
fn zero_budget_forces_fallback() {
    let opts = Options { mem_budget: 0, fallback_trials: 3, ..Options::default() };
    let record = run_check("k2_relation", &opts).unwrap();
    assert_eq!((record.status, record.mode.as_str(), record.trials), (Status::Pass, "modular-fallback", 3));
}

#[test]
fn unknown_check() {
    assert!(run_check("no_such_check", &Options::default()).is_none());
}

fn sampled(geiser: bool, seed: u64) -> PencilSpec {
    let base = if geiser { PencilSpec::generic_geiser() } else { PencilSpec::generic() };
    base.sample(P, &mut Stream::new(seed, 1)).unwrap()
}

#[test]
fn involutions_square_to_identity() {
    let r = involution_roundtrip(&sampled(false, 3), 30, 0, Involution::Bertini).unwrap();
    assert!(r.ok() && r.passed >= 24, "{r:?}");
    let r = involution_roundtrip(&sampled(true, 3), 30, 0, Involution::Geiser).unwrap();
    assert!(r.ok() && r.passed >= 24, "{r:?}");
}

#[test]
fn fixed_points_lie_on_the_branch_curve() {
    let r = fixed_locus_sample(&sampled(false, 5), 10, 0, Involution::Bertini).unwrap();
    assert!(r.ok(), "{r:?}");
    assert!(r.passed >= 10);
    let r = fixed_locus_sample(&sampled(true, 5), 10, 0, Involution::Geiser).unwrap();
    assert!(r.ok(), "{r:?}");
}

#[test]
fn sampling_needs_concrete_pencils() {
    let generic = PencilSpec::generic();
    assert_eq!(involution_roundtrip(&generic, 5, 0, Involution::Bertini).unwrap_err(), Error::NeedsConcrete);
    assert_eq!(fixed_locus_sample(&generic, 5, 0, Involution::Bertini).unwrap_err(), Error::NeedsConcrete);
    assert!(matches!(
        involution_roundtrip(&sampled(false, 1), 5, 0, Involution::Geiser).unwrap_err(),
        Error::SpecNotGeiser(_)
    ));
}

#[test]
fn degenerate_pencil_is_flagged() {
    let spec = sampled(false, 8);
    let w: Vec<_> = Variable::UNPRIMED.iter().map(|v| (v.swap_prime(), spec.entry(*v).clone())).collect();
    let same = spec.with(&w).unwrap();
    assert!(matches!(
        involution_roundtrip(&same, 20, 0, Involution::Bertini).unwrap_err(),
        Error::ExcessiveDegeneracy { skipped: 20, total: 20 }
    ));
}
