use std::fs;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("verify runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn lemma_passes_with_cycle_note() {
    let o = verify(&["lemma", "--id", "4.2", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS"), "{text}");
    assert!(text.contains("2 disjoint 3-cycles"), "{text}");
}

#[test]
fn direct_mode_at_three_is_a_cap() {
    let o = verify(&["theorem", "--main", "--p", "3", "--mode", "direct"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.contains("SKIPPED-CAP"));
    // the dimension estimate is quoted
    assert!(text.contains("dimension 52720180143120"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["lemma", "--id", "7.7", "--p", "3"][..],
        &["theorem", "--side", "--group", "a5"],
        &["theorem", "--main", "--side"],
        &["theorem", "--main", "--p", "2", "--mode", "structural"],
        &["crosscheck", "--suite", "nothing"],
        &["lemma", "--id", "4.1", "--p", "9"],
        &["frobnicate"],
    ] {
        assert_eq!(verify(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_are_json_lines_and_deterministic() {
    let dir = std::env::temp_dir().join(format!("verify-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let out = dir.join("r.jsonl");
    let tables = dir.join("tables");
    let args = [
        "theorem",
        "--main",
        "--p",
        "2",
        "--mode",
        "direct",
        "--seed",
        "7",
        "--jobs",
        "2",
        "--out",
        out.to_str().unwrap(),
        "--dump-tables",
        tables.to_str().unwrap(),
    ];
    assert_eq!(verify(&args).status.code(), Some(0));
    assert_eq!(verify(&args).status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    for v in &lines {
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["check", "millis", "params", "status", "witness"]);
        assert_eq!(v["check"], "thm-1.2-direct");
        assert_eq!(v["status"], "PASS");
    }
    let (a, b) = (&lines[0]["witness"], &lines[1]["witness"]);
    assert_eq!(a, b);
    assert_eq!(a["artifacts"]["coset_table_sha256"].as_str().unwrap().len(), 64);
    let iota = fs::read_to_string(tables.join("iota-p2.txt")).unwrap();
    assert_eq!(iota.lines().count(), 24);
    assert_eq!(fs::read_to_string(tables.join("cosets-p2.txt")).unwrap().lines().count(), 3);
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn structural_mode_and_side_theorem() {
    let o = verify(&["theorem", "--main", "--p", "3", "--mode", "structural"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = verify(&["theorem", "--side", "--group", "s4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2-length 2"));
}

#[test]
fn failures_exit_one() {
    // Qd(3) has order 216 = 27·8, not 3·2^k
    let o = verify(&["theorem", "--side", "--group", "qd:3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));
}
