use std::f64::consts::PI;
use std::fs;
use std::path::Path;
use std::process::Command;

use lsilab::cli::{main_with_args, EXIT_COUNTEREXAMPLE, EXIT_ERROR, EXIT_OK, EXIT_VIOLATION};
use lsilab::formats::write_grid_csv;
use lsilab::{Domain, GridFunction};
use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> u8 {
    let mut argv = vec!["lsilab".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    argv.push("--output".into());
    argv.push(dir.to_str().unwrap().into());
    main_with_args(argv)
}

fn json(path: impl AsRef<Path>) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn write_grid(path: &Path, f: &GridFunction) {
    let mut file = fs::File::create(path).unwrap();
    write_grid_csv(f, &mut file).unwrap();
}

#[test]
fn verify_constant_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("const1.csv");
    write_grid(
        &input,
        &GridFunction::constant(Domain::unit_interval(), 2049, 1.0).unwrap(),
    );
    let out = dir.path().join("out");
    let code = run(
        &out,
        &[
            "verify",
            "--input",
            input.to_str().unwrap(),
            "--domain",
            "interval",
            "--N",
            "2049",
        ],
    );
    assert_eq!(code, EXIT_OK);
    let report = json(out.join("verify.json"));
    assert_eq!(report["passed"], Value::Bool(true));
    for check in report["checks"].as_array().unwrap() {
        assert!(check["deficit"].as_f64().unwrap().abs() <= 1e-10, "{check}");
    }
}

#[test]
fn verify_circle_family() {
    let dir = tempfile::tempdir().unwrap();
    let code = run(
        dir.path(),
        &[
            "verify",
            "--family",
            "random_trig",
            "--param",
            "4,12",
            "--domain",
            "circle",
        ],
    );
    assert_eq!(code, EXIT_OK);
    let report = json(dir.path().join("verify.json"));
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["lsi_circle", "weissler_abs_n", "weissler_n_squared"]
    );
}

#[test]
fn sweep_extrapolates_to_pi_squared() {
    let dir = tempfile::tempdir().unwrap();
    let code = run(
        dir.path(),
        &[
            "sweep",
            "--eps",
            "0.1,0.05,0.025",
            "--N",
            "8193",
            "--extrapolate",
        ],
    );
    assert_eq!(code, EXIT_OK);
    let report = json(dir.path().join("sweep.json"));
    let c = report["extrapolated"].as_f64().unwrap();
    assert!((c - PI * PI).abs() <= 1e-4);
    let csv = fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("epsilon,energy,entropy,ratio,deficit"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn wang_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        run(dir.path(), &["wang", "--eps", "0.2", "--N", "2049"]),
        EXIT_OK
    );
    let report = json(dir.path().join("wang.json"));
    assert!(report["rows"][0]["residual"].as_f64().unwrap() <= 1e-6);
    assert_eq!(
        run(
            dir.path(),
            &["wang", "--eps", "0.2", "--N", "2049", "--tol", "wang=1e-15"]
        ),
        EXIT_VIOLATION
    );
}

#[test]
fn eigen_report() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["eigen", "--N", "256"]), EXIT_OK);
    let report = json(dir.path().join("eigen.json"));
    let e = report["check"]["eigenvalue"].as_f64().unwrap();
    assert!((e - 39.478_417_6).abs() <= 1e-7);
    assert_eq!(report["check"]["mode"], 1);
}

#[test]
fn diaz_flags_and_serializes_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        run(dir.path(), &["diaz", "--trials", "20", "--seed", "3"]),
        EXIT_OK
    );
    let csv = fs::read_to_string(dir.path().join("diaz.csv")).unwrap();
    assert!(csv.starts_with("q,min_deficit,flag\n"));
    assert_eq!(csv.lines().count(), 4);

    // A negative threshold makes every trial a candidate.
    let flagged = dir.path().join("flagged");
    let code = run(
        &flagged,
        &["diaz", "--q", "1.5", "--trials", "5", "--tol", "diaz=-10"],
    );
    assert_eq!(code, EXIT_COUNTEREXAMPLE);
    let witness = flagged.join("diaz_witness_q1.5.csv");
    assert!(witness.exists());
    let again = flagged.join("again");
    assert_eq!(
        run(
            &again,
            &["functional", "--input", witness.to_str().unwrap()]
        ),
        EXIT_OK
    );
}

#[test]
fn grid_outputs_are_reingestible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        run(
            d,
            &[
                "reflect",
                "--family",
                "sharpness",
                "--param",
                "0.4",
                "--N",
                "1025"
            ]
        ),
        0
    );
    assert_eq!(
        run(
            d,
            &[
                "normalize",
                "--family",
                "random_trig",
                "--param",
                "2,6",
                "--bounds",
                "-1,2.5"
            ]
        ),
        0
    );
    assert_eq!(
        run(d, &["sqrt-lift", "--family", "wang", "--param", "0.3"]),
        0
    );
    assert_eq!(
        run(d, &["optimize", "--n-modes", "4", "--max-iters", "50"]),
        0
    );

    let cases = [
        ("reflected.csv", "circle"),
        ("normalized.csv", "interval"),
        ("lifted.csv", "interval"),
        ("optimum.csv", "interval"),
    ];
    for (file, domain) in cases {
        let out = d.join(format!("re_{file}"));
        let input = d.join(file);
        let code = run(
            &out,
            &[
                "functional",
                "--input",
                input.to_str().unwrap(),
                "--domain",
                domain,
            ],
        );
        assert_eq!(code, EXIT_OK, "{file}");
        assert!(out.join("functional.json").exists());
    }

    let reflect = json(d.join("reflect.json"));
    assert!(reflect["residuals"]["energy"].as_f64().unwrap() <= 1e-6);
    let circle = json(d.join("re_reflected.csv/functional.json"));
    assert_eq!(circle["domain"]["kind"], "circle");
    assert_eq!(circle["samples"], 2048);
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let commands: [&[&str]; 4] = [
        &[
            "optimize",
            "--n-modes",
            "6",
            "--seed",
            "11",
            "--max-iters",
            "100",
        ],
        &["diaz", "--trials", "30", "--seed", "5"],
        &[
            "sweep",
            "--eps",
            "0.3,0.2,0.1",
            "--N",
            "2049",
            "--extrapolate",
        ],
        &["verify", "--family", "random_trig", "--param", "9,7"],
    ];
    for (i, args) in commands.iter().enumerate() {
        let a = dir.path().join(format!("a{i}"));
        let b = dir.path().join(format!("b{i}"));
        assert_eq!(run(&a, args), run(&b, args));
        let mut names: Vec<_> = fs::read_dir(&a)
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        names.sort();
        assert!(!names.is_empty());
        for name in names {
            assert_eq!(
                fs::read(a.join(&name)).unwrap(),
                fs::read(b.join(&name)).unwrap(),
                "{args:?}: {name:?}"
            );
        }
    }
}

#[test]
fn weissler_accepts_series_json() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("series.json");
    fs::write(
        &input,
        r#"{"circumference": 1.0, "coefficients": [
            {"n": -1, "re": 0.1, "im": 0.0},
            {"n": 0, "re": 1.0, "im": 0.0},
            {"n": 1, "re": 0.1, "im": 0.0}
        ]}"#,
    )
    .unwrap();
    assert_eq!(
        run(
            dir.path(),
            &["weissler", "--input", input.to_str().unwrap()]
        ),
        EXIT_OK
    );
    let report = json(dir.path().join("weissler.json"));
    let bound = report["abs_n_bound"].as_f64().unwrap();
    assert!((bound - 0.030_099_339_921).abs() <= 1e-11, "{bound}");
    assert!(report["entropy"].as_f64().unwrap() <= bound);
}

#[test]
fn validation_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(run(d, &["verify"]), EXIT_ERROR);
    assert_eq!(
        run(d, &["verify", "--family", "nope", "--param", "1"]),
        EXIT_ERROR
    );
    assert_eq!(run(d, &["sweep", "--eps", "1.5"]), EXIT_ERROR);
    assert_eq!(run(d, &["eigen", "--N", "8"]), EXIT_ERROR);
    assert_eq!(run(d, &["wang", "--tol", "speed=1"]), EXIT_ERROR);
    assert_eq!(
        run(
            d,
            &["reflect", "--family", "constant", "--param", "1", "--N", "64"]
        ),
        EXIT_ERROR
    );
    assert_eq!(run(d, &["bogus"]), EXIT_ERROR);
    assert_eq!(run(d, &["--help"]), EXIT_OK);
}

#[test]
fn binary_reports_line_numbers_and_uses_env_output() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    let mut text = String::from("x,value\n");
    for i in 0..20 {
        text.push_str(&format!(
            "{},{}\n",
            i as f64 / 19.0,
            if i == 7 { "oops" } else { "1" }
        ));
    }
    fs::write(&bad, text).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_lsilab"))
        .args(["functional", "--input", bad.to_str().unwrap()])
        .env("LSILAB_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 9"), "{stderr}");

    let env_dir = dir.path().join("from_env");
    let out = Command::new(env!("CARGO_BIN_EXE_lsilab"))
        .args(["eigen", "--N", "128"])
        .env("LSILAB_OUTPUT_DIR", &env_dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(env_dir.join("eigen.json").exists());
}
