use std::io::Write;
use std::process::Command as Process;

use clap::Parser;
use k0cat::abelian::GroupInvariants;
use k0cat::cli::{
    main_with_args, run, BothReport, Command, RunConfig, DEFAULT_SEED, EXIT_MISMATCH, EXIT_OK, EXIT_VALIDATION,
};
use k0cat::higher::{enumerate_tilting_sets, HigherParams};
use k0cat::polygon::{enumerate_angulations, PolygonParams};

fn call(args: &[&str]) -> k0cat::cli::Report {
    main_with_args(std::iter::once("k0cat").chain(args.iter().copied()), None)
}

fn temp_json(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn polygon_json_round_trips() {
    for (p, q) in [(2, 3), (3, 3), (3, 4), (4, 2), (5, 5)] {
        let r = call(&["polygon-k0", "--p", &p.to_string(), "--q", &q.to_string(), "--format", "json"]);
        assert_eq!(r.exit_code, EXIT_OK, "{}", r.stderr);
        let line = r.stdout.trim_end();
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap(), line);
        let typed: GroupInvariants = serde_json::from_str(line).unwrap();
        assert_eq!(typed.to_json(), line);
    }
}

#[test]
fn polygon_groups() {
    let json = |p: u32, q: u32| {
        let r = call(&["polygon-k0", "--p", &p.to_string(), "--q", &q.to_string(), "--format", "json"]);
        r.stdout.trim_end().to_string()
    };
    assert_eq!(json(3, 3), r#"{"free_rank":1,"torsion":[]}"#);
    assert_eq!(json(4, 3), r#"{"free_rank":0,"torsion":[]}"#);
    assert_eq!(json(3, 2), r#"{"free_rank":0,"torsion":[4]}"#);
    let text = call(&["polygon-k0", "--p", "3", "--q", "3"]);
    assert!(text.stdout.contains("K0 = Z"), "{}", text.stdout);
}

#[test]
fn higher_both_round_trips() {
    let r = call(&["higher-k0", "--p", "3", "--d", "2", "--method", "both", "--format", "json"]);
    assert_eq!(r.exit_code, EXIT_OK);
    let line = r.stdout.trim_end();
    assert_eq!(line, r#"{"agreement":true,"ar":{"free_rank":2,"torsion":[]},"theta":{"free_rank":2,"torsion":[]}}"#);
    let value: serde_json::Value = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), line);
    let typed: BothReport = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&typed).unwrap(), line);
}

#[test]
fn angulation_files() {
    let params = PolygonParams::new(3, 3).unwrap();
    let expected = call(&["polygon-k0", "--p", "3", "--q", "3", "--format", "json"]).stdout;
    for t in enumerate_angulations(params).iter().take(6) {
        let f = temp_json(&serde_json::to_string(&t.to_file_data()).unwrap());
        let path = f.path().to_str().unwrap();
        let r = call(&["polygon-k0", "--p", "3", "--q", "3", "--angulation", path, "--format", "json"]);
        assert_eq!(r.exit_code, EXIT_OK, "{}", r.stderr);
        assert_eq!(r.stdout, expected);
    }
    // wrong parameters, crossing diagonals, malformed json, missing file
    let f = temp_json(r#"{"p":2,"q":3,"diagonals":[[0,4],[9,6]]}"#);
    let r = call(&["polygon-k0", "--p", "3", "--q", "3", "--angulation", f.path().to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_VALIDATION);
    let f = temp_json(r#"{"p":2,"q":3,"diagonals":[[0,4],[2,9]]}"#);
    let r = call(&["polygon-k0", "--p", "2", "--q", "3", "--angulation", f.path().to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_VALIDATION, "{}", r.stdout);
    let f = temp_json("{not json");
    let r = call(&["polygon-k0", "--p", "2", "--q", "3", "--angulation", f.path().to_str().unwrap()]);
    assert_eq!(r.exit_code, EXIT_VALIDATION);
    let r = call(&["polygon-k0", "--p", "2", "--q", "3", "--angulation", "/nonexistent/t.json"]);
    assert_eq!(r.exit_code, EXIT_VALIDATION);
}

#[test]
fn tilting_files() {
    let params = HigherParams::new(3, 2).unwrap();
    for t in enumerate_tilting_sets(params).iter().step_by(7) {
        let f = temp_json(&serde_json::to_string(&t.to_file_data()).unwrap());
        let path = f.path().to_str().unwrap();
        let r =
            call(&["higher-k0", "--p", "3", "--d", "2", "--tilting", path, "--method", "theta", "--format", "json"]);
        assert_eq!(r.stdout.trim_end(), r#"{"free_rank":2,"torsion":[]}"#, "{}", r.stderr);
        let r = call(&["tables", "index", "--p", "3", "--d", "2", "--tilting", path]);
        assert_eq!(r.exit_code, EXIT_OK);
    }
    let f = temp_json(r#"{"p":3,"d":2,"summands":[[1,3,5],[2,4,6]]}"#);
    let r = call(&["higher-k0", "--p", "3", "--d", "2", "--tilting", f.path().to_str().unwrap(), "--method", "theta"]);
    assert_eq!(r.exit_code, EXIT_VALIDATION);
}

#[test]
fn index_table_csv() {
    let r = call(&["tables", "index", "--p", "3", "--d", "2"]);
    assert_eq!(r.exit_code, EXIT_OK);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "object,index");
    assert_eq!(lines.len(), 1 + 16);
    let r = call(&["tables", "theta", "--p", "3", "--d", "2"]);
    assert_eq!(r.stdout.lines().next(), Some("angle,theta"));
    assert!(r.stdout.lines().count() > 1);
}

#[test]
fn validation_exits() {
    for args in [
        &["polygon-k0", "--p", "3", "--q", "1"][..],
        &["polygon-k0", "--p", "0", "--q", "3"],
        &["polygon-k0", "--p", "x", "--q", "3"],
        &["higher-k0", "--p", "3", "--d", "2"],
        &["higher-k0", "--p", "3", "--d", "0", "--method", "ar"],
        &["tables", "angles", "--p", "3", "--d", "2"],
        &["frobnicate"],
        &[],
    ] {
        let r = call(args);
        assert_eq!(r.exit_code, EXIT_VALIDATION, "{args:?}");
        assert!(r.stdout.is_empty());
        assert!(!r.stderr.is_empty());
    }
    assert_eq!(call(&["--help"]).exit_code, EXIT_OK);
}

#[test]
fn seed_override() {
    let parsed = RunConfig::try_parse_from(["k0cat", "verify-paper"]).unwrap();
    assert_eq!(parsed.command, Command::VerifyPaper { seed: DEFAULT_SEED });
    let over = parsed.clone().with_seed_override(Some("7")).unwrap();
    assert_eq!(over.command, Command::VerifyPaper { seed: 7 });
    assert_eq!(parsed.clone().with_seed_override(None).unwrap(), parsed);
    assert!(parsed.with_seed_override(Some("-1")).is_err());
    // only verify-paper takes a seed
    let other = RunConfig::try_parse_from(["k0cat", "polygon-k0", "--p", "2", "--q", "3"]).unwrap();
    assert_eq!(other.clone().with_seed_override(Some("5")).unwrap(), other);
    let r = main_with_args(["k0cat", "verify-paper"], Some("abc"));
    assert_eq!(r.exit_code, EXIT_VALIDATION);
}

#[test]
fn verify_paper_passes() {
    let config = RunConfig::try_parse_from(["k0cat", "verify-paper", "--seed", "3"]).unwrap();
    let r = run(&config);
    assert_eq!(r.exit_code, EXIT_OK, "{}", r.stdout);
    assert!(r.stdout.lines().all(|l| !l.starts_with("FAIL")));
    assert!(r.stdout.trim_end().ends_with("0 failed (seed 3)"));
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
}

#[test]
fn binary_end_to_end() {
    let exe = env!("CARGO_BIN_EXE_k0cat");
    let out = Process::new(exe).args(["polygon-k0", "--p", "3", "--q", "2", "--format", "json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"free_rank\":0,\"torsion\":[4]}\n");
    let out = Process::new(exe).args(["polygon-k0", "--p", "3", "--q", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_VALIDATION));
    let out = Process::new(exe).arg("verify-paper").env("K0CAT_SEED", "nope").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_VALIDATION));
    let out = Process::new(exe).arg("verify-paper").env("K0CAT_SEED", "99").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(out.stdout).unwrap().contains("(seed 99)"));
}
