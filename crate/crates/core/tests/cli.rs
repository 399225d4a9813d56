use std::path::Path;
use std::process::{Command, Output};

use quadcycle::cli::{parse_decomposition, run, write_decomposition};

fn quadcycle(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("quadcycle").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn construct_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--output", &p]);
    let (code, _, err) = quadcycle(&full);
    assert_eq!(code, 0, "{err}");
    p
}

fn body_lines(text: &str) -> usize {
    text.lines().count() - 1
}

#[test]
fn construct_examples() {
    let (code, out, _) = quadcycle(&["construct", "k4cs", "--order", "49"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("complete 49\n"));
    assert_eq!(body_lines(&out), 294);

    let (code, out, _) = quadcycle(&["construct", "seed", "--t", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("cocktail 12\n"));
    assert_eq!(body_lines(&out), 15);

    let (code, out, err) = quadcycle(&["construct", "k4cs", "--order", "33"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn construct_parameter_handling() {
    let (code, out, _) = quadcycle(&["construct", "cocktail", "--h", "6", "--t", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("cocktail 58\n"));
    assert_eq!(
        quadcycle(&[
            "construct",
            "cocktail",
            "--order",
            "58",
            "--h",
            "6",
            "--t",
            "5"
        ])
        .0,
        0
    );
    assert_eq!(
        quadcycle(&[
            "construct",
            "cocktail",
            "--order",
            "60",
            "--h",
            "6",
            "--t",
            "5"
        ])
        .0,
        2
    );
    assert_eq!(quadcycle(&["construct", "cocktail"]).0, 2);
    assert_eq!(quadcycle(&["construct", "cocktail", "--order", "48"]).0, 2);
    let (code, out, _) = quadcycle(&["construct", "exclusively-alt", "--ells", "2,2,2,2,2,3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("multipartite 8 8 8 8 8 12\n"));
    assert_eq!(body_lines(&out), 280);
    assert_eq!(
        quadcycle(&["construct", "exclusively-alt", "--parts", "5"]).0,
        2
    );
    assert_eq!(quadcycle(&["construct", "seed"]).0, 2);
    assert_eq!(quadcycle(&["construct", "dodecahedron"]).0, 2);
    assert_eq!(quadcycle(&["--help"]).0, 0);
}

#[test]
fn round_trip_every_kind() {
    let kinds: [&[&str]; 7] = [
        &["k4cs", "--order", "57"],
        &["cocktail", "--order", "54"],
        &["cocktail", "--h", "6", "--t", "6"],
        &["exclusively-alt", "--parts", "6"],
        &["seed", "--t", "0"],
        &["seed", "--t", "7"],
        &["figure2"],
    ];
    for args in kinds {
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        let (code, text, _) = quadcycle(&full);
        assert_eq!(code, 0, "{args:?}");
        let d = parse_decomposition(&text).unwrap();
        assert_eq!(write_decomposition(&d), text, "{args:?}");
        let again = quadcycle(&full).1;
        assert_eq!(again, text, "{args:?}");
    }
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let k49 = construct_to(dir.path(), "k49.txt", &["k4cs", "--order", "49"]);
    let (code, out, _) = quadcycle(&["verify", &k49, "--exact-cover", "--unique"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("uniquely_2colourable") && out.contains("models=1 complete=true"));

    let fig = construct_to(dir.path(), "fig.txt", &["figure2"]);
    let (code, out, _) = quadcycle(&["verify", &fig, "--exclusively-partially-alt", "--json"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["checks"][0]["name"], "exclusively_partially_alt");
    assert_eq!(json["checks"][0]["verdict"], "pass");
    assert!(json["checks"].as_array().unwrap().len() == 1);

    let (code, _, _) = quadcycle(&["verify", &fig, "--unique"]);
    assert_eq!(code, 1);
    let (code, out, _) = quadcycle(&[
        "verify",
        &fig,
        "--colouring",
        "010011",
        "--partially-alt",
        "--alt",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("valid_colouring") && out.contains("partially_alt"));
    assert_eq!(quadcycle(&["verify", &fig, "--colouring", "0101"]).0, 2);
    assert_eq!(quadcycle(&["verify", &fig, "--alt"]).0, 2);
}

#[test]
fn verify_anchor_flag() {
    let dir = tempfile::tempdir().unwrap();
    let seed = construct_to(dir.path(), "seed.txt", &["seed", "--t", "3"]);
    let (code, out, _) = quadcycle(&["verify", &seed, "--anchor", "6,8,10,12:7,9,11,13"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("anchored"));
    assert_eq!(quadcycle(&["verify", &seed, "--anchor", "6,8:8,9"]).0, 1);
    assert_eq!(quadcycle(&["verify", &seed, "--anchor", "6,8"]).0, 2);
    assert_eq!(quadcycle(&["verify", &seed, "--anchor", "6:99"]).0, 2);
}

#[test]
fn duplicated_cycle_names_the_edge() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.txt");
    std::fs::write(&path, "cocktail 4\n0 2 1 3\n0 2 1 3\n").unwrap();
    let (code, out, _) = quadcycle(&["verify", path.to_str().unwrap(), "--exact-cover"]);
    assert_eq!(code, 1);
    assert!(out.contains("duplicated") && out.contains("0-2"), "{out}");
}

#[test]
fn parse_errors_exit_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "complete 9\n0 1 2 3\n0 1 2\n").unwrap();
    let (code, _, err) = quadcycle(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(quadcycle(&["verify", "/nonexistent/file.txt"]).0, 2);
}

#[test]
fn colourings_examples() {
    let dir = tempfile::tempdir().unwrap();
    let fig = construct_to(dir.path(), "fig.txt", &["figure2"]);
    let (code, out, _) = quadcycle(&["colourings", &fig]);
    assert_eq!(code, 0);
    assert!(out.ends_with("total 44 complete true\n"));
    assert_eq!(out.lines().count(), 45);
    assert!(out
        .lines()
        .take(44)
        .all(|l| l.len() == 6 && l.chars().all(|c| c == '0' || c == '1')));

    let (code, out, _) = quadcycle(&["colourings", &fig, "--limit", "3"]);
    assert_eq!(code, 1);
    assert!(out.ends_with("total 3 complete false\n"));
    assert_eq!(quadcycle(&["colourings", &fig, "--pin", "0=2"]).0, 2);

    let k49 = construct_to(dir.path(), "k49.txt", &["k4cs", "--order", "49"]);
    let (code, out, _) = quadcycle(&["colourings", &k49, "--pin", "0=0"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("total 1 complete true\n"));
    let (_, out, _) = quadcycle(&["colourings", &k49]);
    assert!(out.ends_with("total 2 complete true\n"));
}

fn binary(args: &[&str], env: Option<(&str, &str)>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_quadcycle"));
    cmd.args(args).env_remove("QUADCYCLE_NODE_LIMIT");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

#[test]
fn binary_exit_codes_and_node_limit_env() {
    let dir = tempfile::tempdir().unwrap();
    let k49 = construct_to(dir.path(), "k49.txt", &["k4cs", "--order", "49"]);
    assert_eq!(
        binary(&["verify", &k49, "--unique"], None).status.code(),
        Some(0)
    );
    let limited = binary(
        &["verify", &k49, "--unique"],
        Some(("QUADCYCLE_NODE_LIMIT", "5")),
    );
    assert_eq!(limited.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&limited.stdout).contains("indeterminate"));
    let flag = binary(&["verify", &k49, "--unique", "--node-limit", "5"], None);
    assert_eq!(flag.status.code(), Some(1));
    assert_eq!(
        binary(&["construct", "k4cs", "--order", "41"], None)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(binary(&["frobnicate"], None).status.code(), Some(2));
}
