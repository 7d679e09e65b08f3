use std::process::{Command, Output};

use ulrich_cli::Record;

fn ulrich(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ulrich"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verdict_exit_codes() {
    let ok = ulrich(&["verdict", "--g", "1", "--e", "-1", "--a", "3", "--b", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    let r: Record = serde_json::from_str(stdout(&ok).trim()).unwrap();
    assert_eq!(r.verdict, "EXISTS");
    assert_eq!(r.classes.len(), 2);

    let parity = ulrich(&["verdict", "--g", "3", "--e", "-3", "--a", "4", "--b", "9"]);
    assert_eq!(parity.status.code(), Some(0));
    assert!(stdout(&parity).contains("\"NOT_EXISTS\""));

    let bad = ulrich(&["verdict", "--g", "0", "--e", "-1", "--a", "1", "--b", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Nagata"));

    let missing = ulrich(&["verdict", "--g", "1"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn records_round_trip() {
    let out = ulrich(&[
        "sweep", "--g", "1..3", "--e", "-3..0", "--a", "1..4", "--b", "3..6",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Record> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 9 * 16);
    let again: String = rows
        .iter()
        .map(|r| serde_json::to_string(r).unwrap() + "\n")
        .collect();
    assert_eq!(again, text);
    let keys: Vec<String> = serde_json::from_str::<serde_json::Map<String, serde_json::Value>>(
        text.lines().next().unwrap(),
    )
    .unwrap()
    .keys()
    .cloned()
    .collect();
    assert_eq!(
        keys,
        [
            "g",
            "e",
            "a",
            "b",
            "verdict",
            "citation",
            "classes",
            "family_dim",
            "notes"
        ]
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("nagata"));
}

#[test]
fn sweep_is_deterministic() {
    let args = [
        "sweep", "--g", "0..5", "--e", "-5..3", "--a", "1..6", "--b", "0..12", "--rank2",
    ];
    let first = ulrich(&args);
    let second = ulrich(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let table = ulrich(&[&args[..], &["--table"]].concat());
    assert_eq!(
        table.stdout,
        ulrich(&[&args[..], &["--table"]].concat()).stdout
    );
}

#[test]
fn empty_sweep_is_fine() {
    let out = ulrich(&["sweep", "--g", "3..2", "--e", "0", "--a", "1", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.jsonl");
    let args = [
        "sweep", "--g", "1", "--e", "-1..1", "--a", "1..3", "--b", "4",
    ];
    let direct = ulrich(&args);
    let to_file = ulrich(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn table_output_is_delimited() {
    let out = ulrich(&[
        "verdict", "--g", "2", "--e", "-2", "--a", "2", "--b", "5", "--table",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("g | e  | a | b | verdict"));
    assert!(lines[1].contains("a2-even-e"));
}

#[test]
fn oracle_subcommand() {
    let out = ulrich(&[
        "oracle",
        "--e",
        "0",
        "--a",
        "1",
        "--b",
        "1",
        "--grid-limit",
        "10",
    ]);
    let rows: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(
        (rows[0]["a"].as_i64(), rows[0]["b"].as_i64()),
        (Some(0), Some(1))
    );
    assert_eq!(
        (rows[1]["a"].as_i64(), rows[1]["b"].as_i64()),
        (Some(1), Some(0))
    );
    assert_eq!(rows[2]["agrees"], true);

    let none = ulrich(&[
        "oracle",
        "--e",
        "2",
        "--a",
        "2",
        "--b",
        "5",
        "--grid-limit",
        "12",
    ]);
    let text = stdout(&none);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"found\":0"));
    assert!(text.contains("\"agrees\":true"));

    let negative = ulrich(&["oracle", "--e", "-1", "--a", "1", "--b", "1"]);
    assert_eq!(negative.status.code(), Some(2));
}

#[test]
fn rank2_subcommand() {
    let out = ulrich(&["rank2", "--g", "2", "--e", "1", "--a", "3", "--b", "6"]);
    assert!(out.status.success());
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(row["construction"], "threshold");
    assert_eq!(row["threshold"], "4");
    assert_eq!(row["datum"]["z_degree"], 9);
    assert_eq!(row["stability"], "no-ulrich-line-subbundles");

    let none = ulrich(&["rank2", "--g", "0", "--e", "0", "--a", "1", "--b", "1"]);
    assert_eq!(none.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&none.stderr);
    assert!(msg.contains("threshold construction") && msg.contains("half-split construction"));
}

#[test]
fn classes_dual_strata_theta() {
    let classes = ulrich(&["classes", "--g", "2", "--e", "-2", "--a", "2", "--b", "5"]);
    let text = stdout(&classes);
    assert!(text.contains("\"a\":3,\"b\":5") && text.contains("\"a\":1,\"b\":14"));
    let odd = ulrich(&["classes", "--g", "2", "--e", "-1", "--a", "2", "--b", "5"]);
    assert_eq!(odd.status.code(), Some(2));

    let dual = ulrich(&[
        "dual", "--g", "0", "--e", "0", "--a", "1", "--b", "1", "--da", "1", "--db", "0",
    ]);
    assert!(stdout(&dual).contains("\"dual\":{\"a\":0,\"b\":1}"));

    let strata = ulrich(&[
        "strata",
        "--g",
        "3",
        "--r",
        "3",
        "--d",
        "1",
        "--r-prime",
        "1",
    ]);
    assert_eq!(stdout(&strata).lines().count(), 2);
    let low = ulrich(&[
        "strata",
        "--g",
        "1",
        "--r",
        "2",
        "--d",
        "1",
        "--r-prime",
        "1",
    ]);
    assert_eq!(low.status.code(), Some(2));

    let theta = ulrich(&["theta", "--g", "3", "--r", "4", "--d", "6"]);
    assert!(stdout(&theta).contains("\"target\":\"U(2, 1)\""));
}
