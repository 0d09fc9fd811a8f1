use std::process::{Command, Output};

use brauer_fusion::brauer::{gen_eps, gen_s, BrauerElement};
use brauer_fusion::scalars::{int, OmegaRatFunc};
use serde_json::Value;

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(args)
        .env_remove("BRAUER_MAX_N")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn canonical(v: &Value) -> BrauerElement {
    serde_json::from_value(v["element"]["canonical"].clone()).unwrap()
}

#[test]
fn tableaux_listing() {
    let out = brauer(&["tableaux", "--n", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 3);
    let first = &v[0];
    assert_eq!(first["tableau"], "[1];[]");
    assert_eq!(first["contents"][0], "(ω-1)/2");
    assert_eq!(first["exponents"], serde_json::json!([0, 1]));

    let out = brauer(&["tableaux", "--n", "3", "--shape", "[1]"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["tableaux", "--n", "0"],
        vec!["tableaux", "--n", "2", "--shape", "[x]"],
        vec!["idempotent", "--n", "2", "--tableau", "[2];[1]"],
        vec!["idempotent", "--n", "2", "--tableau", "9"],
        vec!["verify", "no-such-suite"],
        vec!["verify", "tensor", "--N", "3", "--kind", "symplectic"],
        vec!["verify", "reflection"],
        vec!["verify", "fusion", "--n", "5"],
    ] {
        assert_eq!(code(&brauer(&args)), 2, "{args:?}");
    }
}

#[test]
fn idempotent_for_eps_over_omega() {
    let out = brauer(&[
        "idempotent",
        "--n",
        "2",
        "--tableau",
        "[1];[]",
        "--method",
        "murphy",
    ]);
    assert_eq!(code(&out), 0);
    let e = canonical(&json(&out));
    let expected = BrauerElement::from_diagram(gen_eps(1, 2).unwrap())
        .scale(&OmegaRatFunc::omega().inv().unwrap());
    assert_eq!(e, expected);
}

#[test]
fn idempotent_by_fusion_matches_closed_form() {
    let out = brauer(&[
        "idempotent",
        "--n",
        "3",
        "--tableau",
        "[1];[1,1];[1]",
        "--method",
        "fusion",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["agrees_with_murphy"], true);
    // (1 − s₁) ε₂ (1 − s₁) / (2(ω − 1))
    let one = BrauerElement::identity(3);
    let s1 = BrauerElement::from_diagram(gen_s(1, 3).unwrap());
    let e2 = BrauerElement::from_diagram(gen_eps(2, 3).unwrap());
    let a = &one - &s1;
    let c = OmegaRatFunc::linear(int(2), int(-2)).inv().unwrap();
    assert_eq!(canonical(&v), (&(&a * &e2) * &a).scale(&c));
}

#[test]
fn fusion_exponents_prints_h() {
    let out = brauer(&[
        "idempotent",
        "--n",
        "2",
        "--tableau",
        "0",
        "--method",
        "fusion_exponents",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["h"], "-(3ω^2-4ω)/(ω-1)");
    assert_eq!(v["agrees_with_murphy"], true);
}

#[test]
fn verify_fusion_n3() {
    let out = brauer(&["verify", "fusion", "--n", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(
        checks
            .iter()
            .filter(|c| c["name"] == "fusion = murphy")
            .count(),
        7
    );
}

#[test]
fn verify_reflection_example() {
    let out = brauer(&[
        "verify",
        "reflection",
        "--N",
        "3",
        "--kind",
        "orthogonal",
        "--sites",
        "2",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["failed"], 0);
}

#[test]
fn verify_remaining_suites() {
    for args in [
        vec!["verify", "ybe", "--n", "3", "--seed", "1"],
        vec!["verify", "brauer-relations", "--n", "3"],
        vec!["verify", "symgroup", "--n", "3"],
        vec![
            "verify",
            "tensor",
            "--N",
            "4",
            "--kind",
            "symplectic",
            "--points",
            "2",
        ],
        vec!["verify", "invco", "--N", "5", "--n", "2", "--points", "2"],
        vec![
            "verify", "invco-gl", "--N", "3", "--n", "2", "--omega", "9", "--points", "2",
        ],
    ] {
        let out = brauer(&args);
        assert_eq!(
            code(&out),
            0,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = std::env::temp_dir().join(format!("brauer-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("report.json");
    let args = [
        "verify",
        "reflection",
        "--N",
        "3",
        "--seed",
        "11",
        "--points",
        "3",
    ];
    let a = brauer(&args);
    let mut with_file = args.to_vec();
    let path = file.to_str().unwrap();
    with_file.extend(["--output", path]);
    let b = brauer(&with_file);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&file).unwrap(), a.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn env_cap_controls_suite_size() {
    let out = Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(["verify", "fusion", "--n", "3"])
        .env("BRAUER_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(["verify", "fusion", "--n", "3"])
        .env("BRAUER_MAX_N", "nope")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}
