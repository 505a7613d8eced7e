use std::process::{Command, Output};

fn rotorlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotorlab"))
        .args(args)
        .env_remove("ROTORLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_reports_boppiness() {
    let out = rotorlab(&["classify", "1221"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("boppy: palindromic\n"), "{text}");
    assert!(text.contains("class: C(1, 1)"), "{text}");

    let text = stdout(&rotorlab(&["classify", "112112"]));
    assert!(text.contains("rotor: 112\n"), "{text}");
    assert!(text.contains("boppy: no"), "{text}");

    let text = stdout(&rotorlab(&["classify", "1122"]));
    assert!(text.contains("boppy: block-repetitive b=2"), "{text}");
}

#[test]
fn compress_single_variant_matches_worked_example() {
    let out = rotorlab(&["compress", "121221", "--variant", "UU"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "STEP 1 VARIANT=UU RAW=121212 CANON=12\n");

    let text = stdout(&rotorlab(&["compress", "11121222", "--variant", "UD,UU"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(
        lines[0].starts_with("STEP 1 VARIANT=UD RAW=21221121 "),
        "{text}"
    );
}

#[test]
fn compress_auto_certifies_and_emits_json() {
    let text = stdout(&rotorlab(&["compress", "121221"]));
    assert!(text.starts_with("STEP 1 VARIANT=UD "), "{text}");
    assert!(text.contains("OUTCOME universal"), "{text}");
    assert!(text.contains("certified=yes"), "{text}");

    let out = rotorlab(&["--format", "json", "compress", "121221", "--auto"]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["outcome"], "Universal");
    assert_eq!(
        value["steps"].as_array().unwrap().last().unwrap()["canon"],
        "12"
    );
}

#[test]
fn enumerate_meets_table_expectation() {
    let out = rotorlab(&["enumerate", "6", "--expect", "table1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("undecided=2 "), "{text}");
    assert!(text.contains("published=2: match"), "{text}");
}

#[test]
fn enumerate_csv_has_fixed_columns() {
    let text = stdout(&rotorlab(&["--format", "csv", "enumerate", "5", "6"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "length,total,trivial,boppy,unboppy,undecided,fraction_total,fraction_unboppy"
    );
    assert_eq!(lines[2], "6,32,1,5,22,2,0.062500,0.090909");
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let run = |workers: &str| {
        rotorlab(&[
            "--format",
            "json",
            "--workers",
            workers,
            "enumerate",
            "8",
            "10",
        ])
    };
    let (one, four) = (run("1"), run("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn seed_comes_from_the_environment() {
    let seeded = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_rotorlab"))
            .args(["--format", "json", "compress", "11221212"])
            .env("ROTORLAB_SEED", seed)
            .output()
            .unwrap()
    };
    let flag = rotorlab(&["--seed", "7", "--format", "json", "compress", "11221212"]);
    assert_eq!(seeded("7").stdout, flag.stdout);
    assert_eq!(seeded("7").stdout, seeded("7").stdout);
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(rotorlab(&["classify", "12x"]).status.code(), Some(2));
    assert_eq!(
        rotorlab(&["compress", "12", "--variant", "XY"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(rotorlab(&["frobnicate"]).status.code(), Some(2));
    // Boppy rotors are outside the algorithm's domain.
    assert_eq!(rotorlab(&["compress", "1221"]).status.code(), Some(2));
    assert_eq!(rotorlab(&["decompose", "112"]).status.code(), Some(2));
    assert_eq!(
        rotorlab(&["enumerate", "30", "--expect", "table1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rotorlab(&["--format", "csv", "classify", "12"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rotorlab(&["simulate", "/nonexistent/net.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn model_round_trips_through_simulate() {
    let dir = std::env::temp_dir().join(format!("rotorlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("model.json");
    let path_str = path.to_str().unwrap();

    let out = rotorlab(&["model", "11212", "--out", path_str]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verified: yes"));

    let out = rotorlab(&["simulate", path_str, "--steps", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("type: 11212\n"), "{text}");
    assert!(text.contains("first 10: "), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn decompose_reduce_and_fixed_cycles() {
    let text = stdout(&rotorlab(&["decompose", "1122222111"]));
    assert!(
        text.contains("maximal BRD: 1122|222111 types 2 3"),
        "{text}"
    );
    assert!(text.contains("BURD: positional"), "{text}");
    assert!(text.contains("b(r): 1/5"), "{text}");

    let text = stdout(&rotorlab(&["reduce", "1123"]));
    assert!(text.contains("witness: 1->2 1112"), "{text}");
    let text = stdout(&rotorlab(&["reduce", "12"]));
    assert!(text.contains("witness: none"), "{text}");

    let out = rotorlab(&["fixed-cycles", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("1112222211 [positional], 1122222111 [positional]"),
        "{text}"
    );
    assert!(text.contains("all BURD: yes"), "{text}");
}
