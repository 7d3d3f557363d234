use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn fza(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fza"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate_reports_counts() {
    let o = fza(&["validate", &fixture("sample.nfa.fza.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ok: nfa, |Q|=5, |Σ|=2\n");
    let o = fza(&["validate", &fixture("sample.enfa.fza.json")]);
    assert_eq!(stdout(&o), "ok: enfa, |Q|=5, |Σ|=2\n");
}

#[test]
fn validate_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.fza.json");
    fs::write(&empty, "").unwrap();
    let o = fza(&["validate", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("syntax error at 1:1"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());

    let unknown = dir.path().join("unknown.fza.json");
    let text = fs::read_to_string(fixture("sample.nfa.fza.json")).unwrap();
    fs::write(
        &unknown,
        text.replacen("\"q4\": \"0.9\"", "\"q9\": \"0.9\"", 1),
    )
    .unwrap();
    let o = fza(&["validate", unknown.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("q9"), "{}", stderr(&o));

    let o = fza(&[
        "validate",
        dir.path().join("missing.fza.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_prints_canonical_degrees() {
    let nfa = fixture("sample.nfa.fza.json");
    let enfa = fixture("sample.enfa.fza.json");
    for (file, args, want) in [
        (&nfa, vec!["--input", "a b"], "0.7\n"),
        (&nfa, vec!["--input", "  a   a "], "0.2\n"),
        (&nfa, vec!["--empty"], "0\n"),
        (&enfa, vec!["--empty"], "0.5\n"),
        (&enfa, vec!["--input", "a"], "0.8\n"),
        (&enfa, vec!["--input", "b"], "0\n"),
        (&enfa, vec!["--input", "a b", "--oracle"], "0.7\n"),
    ] {
        let mut full = vec!["eval", file.as_str()];
        full.extend(args.iter().copied());
        let o = fza(&full);
        assert_eq!(o.status.code(), Some(0), "{full:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), want, "{full:?}");
    }
}

#[test]
fn eval_json_and_errors() {
    let nfa = fixture("sample.nfa.fza.json");
    let o = fza(&["eval", &nfa, "--input", "a b", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], "0.7");
    assert_eq!(v["input"], serde_json::json!(["a", "b"]));

    assert_eq!(
        fza(&["eval", &nfa, "--input", "a c"]).status.code(),
        Some(2)
    );
    assert_eq!(fza(&["eval", &nfa, "--input", " "]).status.code(), Some(2));
    assert_eq!(fza(&["eval", &nfa]).status.code(), Some(2));
    assert_eq!(
        fza(&["eval", &nfa, "--empty", "--input", "a"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn conversions_reproduce_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.fza.json");
    let out = out.to_str().unwrap();

    let o = fza(&["determinize", &fixture("sample.nfa.fza.json"), "-o", out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        fs::read(out).unwrap(),
        fs::read(fixture("determinized.dfa.fza.json")).unwrap()
    );

    let o = fza(&["rm-epsilon", &fixture("sample.enfa.fza.json"), "-o", out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(
        fs::read(out).unwrap(),
        fs::read(fixture("eps_free.nfa.fza.json")).unwrap()
    );

    let o = fza(&["rm-epsilon", &fixture("sample.enfa.fza.json")]);
    assert_eq!(
        o.stdout,
        fs::read(fixture("eps_free.nfa.fza.json")).unwrap()
    );
}

#[test]
fn pruned_elimination_is_smaller_and_equivalent() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pruned.fza.json");
    let out = out.to_str().unwrap();
    let o = fza(&[
        "rm-epsilon",
        "--prune",
        &fixture("sample.enfa.fza.json"),
        "-o",
        out,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        fs::metadata(out).unwrap().len()
            < fs::metadata(fixture("eps_free.nfa.fza.json"))
                .unwrap()
                .len()
    );
    let o = fza(&[
        "equiv",
        out,
        &fixture("eps_free.nfa.fza.json"),
        "--max-len",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn conversions_check_the_input_kind() {
    let dfa = fixture("determinized.dfa.fza.json");
    let nfa = fixture("sample.nfa.fza.json");
    for args in [
        vec!["determinize", dfa.as_str()],
        vec!["rm-epsilon", nfa.as_str()],
        vec!["compile", nfa.as_str()],
    ] {
        let o = fza(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains("kind mismatch"), "{}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn resource_limits_are_reported() {
    let o = fza(&[
        "rm-epsilon",
        &fixture("sample.enfa.fza.json"),
        "--max-set-size",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("resource limit"));
    let o = fza(&[
        "language",
        &fixture("sample.nfa.fza.json"),
        "--max-len",
        "3",
        "--max-strings",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn equiv_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let nfa = fixture("sample.nfa.fza.json");
    let enfa = fixture("sample.enfa.fza.json");

    let o = fza(&[
        "equiv",
        &nfa,
        &fixture("determinized.dfa.fza.json"),
        "--max-len",
        "5",
    ]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "equivalent up to 5\n")
    );

    let compiled = dir.path().join("compiled.fza.json");
    let compiled = compiled.to_str().unwrap();
    assert_eq!(
        fza(&["compile", &enfa, "-o", compiled]).status.code(),
        Some(0)
    );
    let o = fza(&["equiv", &enfa, compiled, "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(0));

    let o = fza(&["equiv", &nfa, &enfa, "--max-len", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not equivalent: ε\t0\t0.5\n");
}

#[test]
fn equiv_counterexample_agrees_with_eval() {
    let dir = tempfile::tempdir().unwrap();
    let nfa = fixture("sample.nfa.fza.json");
    let altered = dir.path().join("altered.fza.json");
    let text = fs::read_to_string(&nfa).unwrap();
    // q2 --a--> 0.5/q4 becomes 0.4/q4
    let changed = text.replacen("\"q4\": \"0.5\"", "\"q4\": \"0.4\"", 1);
    assert_ne!(changed, text);
    fs::write(&altered, changed).unwrap();
    let altered = altered.to_str().unwrap();

    let o = fza(&["equiv", &nfa, altered, "--max-len", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equivalent"], false);
    let cx = &v["counterexample"];
    let input: Vec<&str> = cx["input"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap())
        .collect();
    let input = input.join(" ");

    // the reported degrees are what the oracle gives on each side
    let left = fza(&["eval", &nfa, "--input", &input, "--oracle"]);
    let right = fza(&["eval", altered, "--input", &input, "--oracle"]);
    assert_eq!(stdout(&left).trim(), cx["left"]);
    assert_eq!(stdout(&right).trim(), cx["right"]);

    // and no shorter string separates the two machines
    let l = fza(&["language", &nfa, "--max-len", "3"]);
    let r = fza(&["language", altered, "--max-len", "3"]);
    let first = stdout(&l)
        .lines()
        .zip(stdout(&r).lines())
        .find(|(a, b)| a != b)
        .map(|(a, _)| a.split('\t').next().unwrap().to_owned());
    assert_eq!(first.as_deref(), Some(input.as_str()));
}

#[test]
fn equiv_rejects_different_alphabets() {
    let dir = tempfile::tempdir().unwrap();
    let other = dir.path().join("other.fza.json");
    fs::write(
        &other,
        r#"{"format": 1, "kind": "dfa", "states": ["q"], "alphabet": ["a"], "initial": "q"}"#,
    )
    .unwrap();
    let o = fza(&[
        "equiv",
        &fixture("sample.nfa.fza.json"),
        other.to_str().unwrap(),
        "--max-len",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn language_tables() {
    let nfa = fixture("sample.nfa.fza.json");
    let o = fza(&["language", &nfa, "--max-len", "2", "--nonzero"]);
    assert_eq!(stdout(&o), "a\t0.2\na a\t0.2\na b\t0.7\n");

    let o = fza(&["language", &nfa, "--max-len", "0"]);
    assert_eq!(stdout(&o), "ε\t0\n");

    let o = fza(&["language", &nfa, "--max-len", "1"]);
    assert_eq!(stdout(&o), "ε\t0\na\t0.2\nb\t0\n");

    let enfa = fixture("sample.enfa.fza.json");
    let o = fza(&["language", &enfa, "--max-len", "1", "--nonzero"]);
    assert_eq!(stdout(&o), "ε\t0.5\na\t0.8\n");
    let o = fza(&["language", &enfa, "--max-len", "1", "--nonzero", "--ascii"]);
    assert_eq!(stdout(&o), "<eps>\t0.5\na\t0.8\n");

    let o = fza(&["language", &enfa, "--max-len", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0], serde_json::json!({"input": [], "degree": "0.5"}));
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    let enfa = fixture("sample.enfa.fza.json");
    let a = fza(&["compile", &enfa]);
    let b = fza(&["compile", &enfa]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}
