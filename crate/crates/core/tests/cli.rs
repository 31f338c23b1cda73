//! The command-line front end, driven in-process.

use std::path::PathBuf;

use serde::de::DeserializeOwned;
use skewlat::cli::{
    run, CodeOutput, DivisorsOutput, DualOutput, ErrorOutput, LatticeOutput, StMatrixOutput,
    VerifyOutput,
};
use skewlat::config::Config;
use skewlat::fixtures::EXAMPLES;
use skewlat::spacetime::{CosetEncoding, MinDetReport};

fn fixture(name: &str) -> String {
    let p: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "fixtures",
        &format!("{name}.conf"),
    ]
    .iter()
    .collect();
    p.to_string_lossy().into_owned()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["skewlat"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json<T: DeserializeOwned>(args: &[&str]) -> T {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, err) = call(&a);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}\n{out}"))
}

#[test]
fn divisors_lists_four_including_x_plus_1_plus_alpha() {
    let cfg = fixture("example1");
    let (code, out, _) = call(&["divisors", "--config", &cfg, "--degree", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("(1+t) + (1)x"), "{out}");
    let d: DivisorsOutput = json(&["divisors", "--config", &cfg, "--degree", "1"]);
    assert_eq!(d.divisors.len(), 4);
    assert_eq!(
        serde_json::to_value(&d.divisors[0]).unwrap(),
        serde_json::json!([[1, 1], [1, 0]])
    );
}

#[test]
fn verify_examples_succeeds() {
    let (code, out, _) = call(&["verify-examples"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("0 failed"));
    let v: VerifyOutput = json(&["verify-examples"]);
    assert!(v.passed);
    assert!(v.checks.iter().all(|c| c.passed));
}

#[test]
fn dual_with_u_squared_not_one_is_a_domain_error() {
    let (code, _, err) = call(&["dual", "--config", &fixture("unsupported")]);
    assert_eq!(code, 1);
    assert!(err.contains("UNSUPPORTED_U"), "{err}");
    let (code, _, err) = call(&["dual", "--config", &fixture("unsupported"), "--json"]);
    assert_eq!(code, 1);
    let e: ErrorOutput = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(e.code, "UNSUPPORTED_U");
}

#[test]
fn every_command_has_a_stable_json_schema() {
    let cfg = fixture("example1");
    let c: CodeOutput = json(&["code", "--config", &cfg]);
    assert_eq!(
        (c.code.n, c.code.k, c.size.as_str(), c.self_dual),
        (2, 1, "9", Some(false))
    );
    let d: DualOutput = json(&["dual", "--config", &cfg]);
    assert_eq!(
        serde_json::to_value(&d.dual_generator).unwrap(),
        serde_json::json!([[1, 0], [2, 2]])
    );
    let l: LatticeOutput = json(&["lattice", "--config", &cfg]);
    assert_eq!(
        (l.det, l.index, l.lambda_det),
        (1296.into(), 9.into(), 16.into())
    );
    let s: StMatrixOutput = json(&["stmatrix", "--config", &cfg, "--element", "[[2,3],[5,-1]]"]);
    assert_eq!(s.det_norm, 1521.into());
    let m: MinDetReport = json(&["mindet", "--config", &cfg]);
    assert!(m.min_abs_norm > 0.into());
    let e: CosetEncoding = json(&[
        "coset-encode",
        "--config",
        &cfg,
        "--message",
        "[[1]]",
        "--offset",
        "[1,0,0,0]",
    ]);
    assert_eq!(
        serde_json::to_value(&e.point).unwrap(),
        serde_json::json!([[4, 1], [1, 0]])
    );
    let d: CosetEncoding = json(&["coset-decode", "--config", &cfg, "--point", "[[4,1],[1,0]]"]);
    assert_eq!(d, e);
}

#[test]
fn sabotage_reports_zero_determinant() {
    let m: MinDetReport = json(&["mindet", "--config", &fixture("sabotage")]);
    assert_eq!(m.min_abs_norm, 0.into());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["code"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["divisors", "--config", &fixture("example1")]).0, 2);
    assert_eq!(
        call(&[
            "code",
            "--config",
            &fixture("example1"),
            "--generator",
            "[[1,"
        ])
        .0,
        2
    );
    let dir = std::env::temp_dir().join(format!("skewlat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.conf");
    std::fs::write(&bad, "p = 3\nq = 1\n").unwrap();
    let (code, _, err) = call(&["code", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("UNKNOWN_KEY"), "{err}");
    std::fs::write(
        &bad,
        "p = 4\nmin_poly = [1, 0, 1]\nsigma_image = [0, -1]\nu = -1\n",
    )
    .unwrap();
    let (code, _, err) = call(&[
        "code",
        "--config",
        bad.to_str().unwrap(),
        "--generator",
        "[[1]]",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("NOT_PRIME"), "{err}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn points_outside_the_lattice_are_rejected() {
    let (code, _, err) = call(&[
        "coset-decode",
        "--config",
        &fixture("example1"),
        "--point",
        "[[1,1],[0,0]]",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("NOT_IN_LATTICE"));
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-examples"));
}

#[test]
fn bundled_configs_are_canonical() {
    for (name, text) in EXAMPLES {
        let c = Config::parse(text).unwrap();
        let canon = c.to_text();
        assert_eq!(Config::parse(&canon).unwrap(), c, "{name}");
        assert_eq!(Config::parse(&canon).unwrap().to_text(), canon, "{name}");
    }
}
