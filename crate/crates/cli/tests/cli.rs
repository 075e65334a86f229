use std::io::Write;
use std::process::{Command, Output};

use bertini_core::ring::Polynomial;
use serde_json::Value;

fn bertini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bertini")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn pencil_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const PRIME: &str = "1000000007";

fn mod_p_pencil(w: [&str; 7], wp: [&str; 7]) -> String {
    let block = |v: [&str; 7]| {
        let keys = ["a1", "a2", "b1", "b2", "b3", "c1", "c2"];
        let body: Vec<String> = keys.iter().zip(v).map(|(k, x)| format!("\"{k}\": \"{x}\"")).collect();
        format!("{{{}}}", body.join(", "))
    };
    format!("{{\"field\": {{\"prime\": \"{PRIME}\"}}, \"w\": {}, \"wp\": {}}}", block(w), block(wp))
}

const W: [&str; 7] = ["3", "5", "7", "11", "13", "17", "19"];
const WP: [&str; 7] = ["23", "29", "31", "37", "41", "43", "47"];
const GW: [&str; 7] = ["0", "0", "7", "11", "13", "17", "19"];

#[test]
fn verify_bertini_symbolic() {
    let out = bertini(&["verify", "--suite", "bertini", "--mode", "symbolic"]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 9);
    // all nine pass; W3(z) is too large to expand and is reported as a modular fallback
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    let w3z = checks.iter().find(|c| c["name"] == "w3_of_z").unwrap();
    assert_eq!(w3z["mode"], "modular-fallback");
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_geiser_includes_free_terms() {
    let out = bertini(&["verify", "--suite", "geiser", "--mode", "modular", "--trials", "2"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["checks"].as_array().unwrap().iter().any(|c| c["name"] == "q0r0s0_vanish"));
    assert_eq!(report["prime"], "2305843009213693951");
}

#[test]
fn verify_rejects_bad_flags() {
    assert_eq!(code(&bertini(&["verify", "--mode", "modular", "--trials", "0"])), 2);
    assert_eq!(code(&bertini(&["verify", "--suite", "nope"])), 2);
    assert_eq!(code(&bertini(&["verify", "--prime", "91"])), 2);
}

#[test]
fn modular_verify_is_reproducible() {
    let args = ["verify", "--suite", "sigma2", "--mode", "modular", "--seed", "0", "--trials", "3"];
    let (a, b) = (bertini(&args), bertini(&args));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&a), 0);
}

#[test]
fn eval_twice_is_identity() {
    let f = pencil_file(&mod_p_pencil(W, WP));
    let path = f.path().to_str().unwrap();
    let once = bertini(&["eval", "--pencil", path, "--point", "2,-3,5"]);
    assert_eq!(code(&once), 0);
    let image = stdout(&once);
    let twice = bertini(&["eval", "--pencil", path, "--point", &image]);
    // normalized form of (2 : −3 : 5) over F_p
    let p: i64 = PRIME.parse().unwrap();
    let inv2 = (p + 1) / 2;
    let expected = format!("1,{},{}", (p - 3) * inv2 % p, 5 * inv2 % p);
    assert_eq!(stdout(&twice), expected);
}

#[test]
fn eval_degenerate_points() {
    let f = pencil_file(&mod_p_pencil(W, WP));
    let path = f.path().to_str().unwrap();
    let out = bertini(&["eval", "--pencil", path, "--point", "1,0,0"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate: basepoint or contracted locus"));
    // the third coordinate vertex is fixed rather than degenerate
    let fixed = bertini(&["eval", "--pencil", path, "--point", "0,0,1"]);
    assert_eq!((code(&fixed), stdout(&fixed)), (0, "0,0,1".to_string()));
}

#[test]
fn eval_geiser() {
    let good = pencil_file(&mod_p_pencil(GW, WP));
    let path = good.path().to_str().unwrap();
    let once = bertini(&["eval", "--geiser", "--pencil", path, "--point", "1,2,3"]);
    assert_eq!(code(&once), 0);
    let twice = bertini(&["eval", "--geiser", "--pencil", path, "--point", &stdout(&once)]);
    assert_eq!(stdout(&twice), "1,2,3");
    let bad = pencil_file(&mod_p_pencil(["1", "0", "7", "11", "13", "17", "19"], WP));
    assert_eq!(code(&bertini(&["eval", "--geiser", "--pencil", bad.path().to_str().unwrap(), "--point", "1,2,3"])), 2);
}

#[test]
fn eval_rejects_bad_input() {
    let f = pencil_file(&mod_p_pencil(W, WP));
    let path = f.path().to_str().unwrap();
    assert_eq!(code(&bertini(&["eval", "--pencil", path, "--point", "0,0,0"])), 2);
    assert_eq!(code(&bertini(&["eval", "--pencil", path, "--point", "1,2"])), 2);
    let broken = pencil_file("{\"w\": {}}");
    assert_eq!(code(&bertini(&["eval", "--pencil", broken.path().to_str().unwrap(), "--point", "1,2,3"])), 2);
}

#[test]
fn ram_generic() {
    let out = bertini(&["ram", "--generic"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["s"][0], "1*a2*c1 - 1*a1*c2");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 4);
    assert!(stdout(&out).find("\"s\"").unwrap() < stdout(&out).find("\"r\"").unwrap());
    let g: Value = serde_json::from_str(&stdout(&bertini(&["ram", "--geiser", "--generic"]))).unwrap();
    let len = |k: &str| g[k].as_array().unwrap().len();
    assert_eq!((len("st"), len("p"), len("qt"), len("rt")), (2, 3, 4, 3));
}

#[test]
fn ram_concrete_matches_substitution() {
    let text = "{\"w\": {\"a1\": \"1\", \"a2\": \"2\", \"b1\": \"0\", \"b2\": \"1/2\", \"b3\": \"0\", \"c1\": \"3\", \"c2\": \"-1\"}, \
                \"wp\": {\"a1\": \"0\", \"a2\": \"1\", \"b1\": \"1\", \"b2\": \"0\", \"b3\": \"2\", \"c1\": \"0\", \"c2\": \"5\"}}";
    let f = pencil_file(text);
    let v: Value = serde_json::from_str(&stdout(&bertini(&["ram", "--pencil", f.path().to_str().unwrap()]))).unwrap();
    // s0 = a2·c1 − a1·c2 = 2·3 − 1·(−1)
    assert_eq!(v["s"][0], "7");
    // r0 = −a1·b2·c2 + a1·b3·c1 + a2·b1·c2 = 1/2
    assert_eq!(v["r"][0], "1/2");
    // s2 = a2'·c1' − a1'·c2'
    assert_eq!(v["s"][2], "0");
}

#[test]
fn poly_dumps() {
    let kappa = stdout(&bertini(&["poly", "--name", "kappa", "--generic"]));
    assert_eq!(Polynomial::parse_text(&kappa).unwrap(), Polynomial::parse_text("a1*b1p - a1p*b1").unwrap());
    let gamma = Polynomial::parse_text(&stdout(&bertini(&["poly", "--name", "gamma4", "--generic"]))).unwrap();
    assert_eq!(gamma.homogeneous_degree_in(&bertini_core::Variable::POINT), Some(4));
    let phi3 = Polynomial::parse_text(&stdout(&bertini(&["poly", "--name", "phi3", "--generic"]))).unwrap();
    assert_eq!(phi3.homogeneous_degree_in(&bertini_core::Variable::POINT), Some(3));
    assert_eq!(code(&bertini(&["poly", "--name", "nosuch", "--generic"])), 2);
    assert_eq!(code(&bertini(&["poly", "--name", "kappa"])), 2);
}

#[test]
fn map_targets() {
    let f = pencil_file(&mod_p_pencil(W, WP));
    let path = f.path().to_str().unwrap();
    let cone = stdout(&bertini(&["map", "--pencil", path, "--point", "1,2,3", "--target", "cone"]));
    let z: Vec<u128> = cone.split(',').map(|s| s.parse().unwrap()).collect();
    let p: u128 = PRIME.parse().unwrap();
    assert_eq!(z[1] * z[3] % p, z[2] * z[2] % p);
    let chart = stdout(&bertini(&["map", "--pencil", path, "--point", "1,2,3", "--target", "sigma2"]));
    assert_eq!(chart.split(',').count(), 2);
    assert_eq!(code(&bertini(&["map", "--pencil", path, "--point", "1,2,3", "--target", "plane"])), 2);
    let g = pencil_file(&mod_p_pencil(GW, WP));
    let plane = bertini(&["map", "--pencil", g.path().to_str().unwrap(), "--point", "1,2,3", "--target", "plane"]);
    assert_eq!(code(&plane), 0);
    assert_eq!(stdout(&plane).split(',').count(), 3);
}
