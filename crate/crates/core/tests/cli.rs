use std::path::PathBuf;
use std::process::Command;

use ordind::frontend::cli::{run, EXIT_INCONSISTENT, EXIT_OK, EXIT_USAGE};
use ordind::frontend::{parse_dist, parse_kb, print_dist};
use ordind::ranking::compute_pi_star;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn ordind(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ordind").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn query_penguin_is_ignored() {
    let kb = data("penguin.kb");
    let (code, out, _) = ordind(&["query", &kb, "-e", "p", "-c", "l"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "Ignored\n");
}

#[test]
fn query_repaired_penguin_is_accepted() {
    let kb = data("penguin_fixed.kb");
    let (code, out, _) = ordind(&["query", &kb, "-e", "p", "-c", "l"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "Accepted\n");
    let (_, out, _) = ordind(&["query", &kb, "-e", "p & b", "-c", "!f"]);
    assert_eq!(out, "Accepted\n");
}

#[test]
fn rank_contradictory_lists_residual_rules() {
    let kb = data("contradictory.kb");
    let (code, out, err) = ordind(&["rank", &kb]);
    assert_eq!(code, EXIT_INCONSISTENT);
    assert!(out.is_empty());
    assert!(err.contains("line 2: a |~ b"), "{err}");
    assert!(err.contains("line 3: a |~ !b"), "{err}");
}

#[test]
fn rank_prints_strata_priorities_and_table() {
    let (code, out, err) = ordind(&["rank", &data("penguin.kb")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("stratum 0:\n  b |~ f\n  b |~ l\nstratum 1:\n  p |~ !f\n  p |~ b\n"));
    assert!(
        out.contains("priorities:\n  p |~ !f  2\n  b |~ f   1\n"),
        "{out}"
    );
    assert!(out.contains("pi* (top 2):\n"));
    assert!(out.contains("  p b !f l     1\n"), "{out}");
    assert!(err.is_empty(), "{err}");
}

#[test]
fn rank_warns_about_priority_mismatch() {
    let (code, _, err) = ordind(&["rank", &data("mixed.kb")]);
    assert_eq!(code, EXIT_OK);
    assert!(err.contains("warning: priority of `a |~ b` is 2"), "{err}");
}

#[test]
fn legless_birds() {
    let kb = data("legless.kb");
    for (e, c, want) in [
        ("n", "b", "Accepted"),
        ("n", "l", "Rejected"),
        ("n", "f", "Accepted"),
        ("p", "l", "Accepted"),
        ("p", "f", "Rejected"),
    ] {
        let (code, out, _) = ordind(&["query", &kb, "-e", e, "-c", c]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim_end(), want, "query({e}, {c})");
    }
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.kb");
    std::fs::write(&path, "atoms: a b\nrule: a |~ q\n").unwrap();
    let (code, _, err) = ordind(&["rank", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2, column 12: unknown atom `q`"), "{err}");

    let (code, _, err) = ordind(&["query", &data("penguin.kb"), "-e", "p &", "-c", "l"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("in -e: line 1, column 4"), "{err}");

    let (code, _, _) = ordind(&["rank", "/nonexistent/file.kb"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = ordind(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, err) = ordind(&["check", "--atoms", "4", "--top", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("atom count"), "{err}");
}

#[test]
fn dist_round_trips_through_indep() {
    let dir = tempfile::tempdir().unwrap();
    let (code, printed, _) = ordind(&["dist", &data("penguin.kb")]);
    assert_eq!(code, EXIT_OK);
    let path = dir.path().join("penguin.dist");
    std::fs::write(&path, &printed).unwrap();
    let (code, out, _) = ordind(&["indep", path.to_str().unwrap(), "-a", "p", "-c", "l"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("strongly independent:         no"), "{out}");
    assert!(out.contains("Pi(a & c)   = 1\nPi(a & !c)  = 1\n"), "{out}");
}

#[test]
fn corpus_round_trip() {
    let dir = std::fs::read_dir(data("")).unwrap();
    let mut seen = 0;
    for entry in dir {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "kb") {
            continue;
        }
        let doc = parse_kb(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let Ok(r) = compute_pi_star(doc.rule_base().unwrap()) else {
            continue;
        };
        let printed = print_dist(&r.pi_star);
        let back = parse_dist(&printed).unwrap();
        assert_eq!(back.dist().unwrap(), &r.pi_star, "{}", path.display());
        seen += 1;
    }
    assert!(seen >= 8);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["rank", "legless.kb"],
        vec!["dist", "penguin_fixed.kb"],
        vec!["table", "--atoms", "2", "--top", "2"],
        vec!["check", "--atoms", "2", "--top", "1", "--format", "jsonl"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| {
                if a.ends_with(".kb") {
                    data(a)
                } else {
                    a.to_string()
                }
            })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(ordind(&args), ordind(&args), "{args:?}");
    }
}

#[test]
fn check_jsonl_records() {
    let (code, out, _) = ordind(&["check", "--atoms", "2", "--top", "3", "--format", "jsonl"]);
    assert_eq!(code, EXIT_OK);
    let records: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), ordind::lab::Law::ALL.len());
    let merge = records
        .iter()
        .find(|r| r["law"] == "strong.disjunction-merge")
        .unwrap();
    assert_eq!(merge["holds"], false);
    assert_eq!(merge["agreement"], "Contradicted");
    assert!(merge["counterexample"]["args"].as_array().unwrap().len() == 3);
}

#[test]
fn check_completeness_reports_both_searches() {
    let (code, out, _) = ordind(&["check", "--atoms", "1", "--top", "2", "--completeness"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("relations atoms=1 reading=Literal: sound=true"),
        "{out}"
    );
    assert!(out.contains("non-maxitive-satisfying=0"), "{out}");
    let (code, _, _) = ordind(&["check", "--atoms", "3", "--top", "1", "--completeness"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ordind");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["query", &data("penguin.kb"), "-e", "p", "-c", "l"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout), "Ignored\n");
    assert_eq!(
        status(&["rank", &data("contradictory.kb")]).status.code(),
        Some(1)
    );
    assert_eq!(status(&["rank"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
