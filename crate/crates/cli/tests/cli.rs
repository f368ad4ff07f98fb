use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn pqcolor(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pqcolor"))
        .args(args)
        .env("PQCOLOR_WORKERS", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

const P4_EDGES: &str = "4\n0 1\n1 2\n2 3\n";
const C4_G6: &str = "Cr\n";

#[test]
fn recognizes_a_split_path() {
    let o = pqcolor(
        &["recognize", "--p", "edgeless", "--q", "complete", "--json"],
        P4_EDGES,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    assert_eq!(v["member"], true);
    assert_eq!(v["p_spec"], "edgeless");
    assert_eq!(v["q_spec"], "complete");
    assert_eq!(v["tau"], 1);
    assert_eq!((v["n"].clone(), v["m"].clone()), (2.into(), 2.into()));
    let a: Vec<u64> = serde_json::from_value(v["certificate"]["part_a"].clone()).unwrap();
    let rest: Vec<u64> = serde_json::from_value(v["certificate"]["part_rest"].clone()).unwrap();
    assert_eq!(a.len() + rest.len(), 4);
    assert!(v["trace"]["step2_iterations"].as_u64().unwrap() <= 4);
}

#[test]
fn rejects_the_four_cycle() {
    let o = pqcolor(
        &["recognize", "--p", "edgeless", "--q", "complete", "--json"],
        C4_G6,
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["member"], false);
    assert!(v["certificate"].is_null());
}

#[test]
fn unbounded_property_exits_two_with_hint() {
    let o = pqcolor(
        &["recognize", "--p", "bipartite", "--q", "co(cluster)"],
        C4_G6,
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("unbounded co-clique bound; use --mode oracle"),
        "{}",
        stderr(&o)
    );
    let o = pqcolor(
        &[
            "recognize",
            "--p",
            "bipartite",
            "--q",
            "co(cluster)",
            "--mode",
            "oracle",
            "--json",
        ],
        C4_G6,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["member"], true);
    assert!(json(&o)["tau"].is_null());
}

#[test]
fn input_errors_exit_one() {
    let bad_graph = pqcolor(
        &[
            "recognize",
            "--p",
            "edgeless",
            "--q",
            "complete",
            "--format",
            "edge_list",
        ],
        "3\n0 7\n",
    );
    assert_eq!(bad_graph.status.code(), Some(1));
    let bad_spec = pqcolor(&["recognize", "--p", "edgles", "--q", "complete"], C4_G6);
    assert_eq!(bad_spec.status.code(), Some(1));
    assert!(stderr(&bad_spec).contains("edgles"));
    let missing_flag = pqcolor(&["recognize", "--p", "edgeless"], C4_G6);
    assert_eq!(missing_flag.status.code(), Some(1));
}

#[test]
fn low_tau_override_warns_and_both_mode_reports_disagreement() {
    let o = pqcolor(
        &[
            "recognize",
            "--p",
            "edgeless",
            "--q",
            "complete",
            "--tau-override",
            "0",
            "--mode",
            "both",
            "--json",
        ],
        P4_EDGES,
    );
    assert!(stderr(&o).contains("warning: tau override 0"));
    // the JSON stays clean of the warning
    let v = json(&o);
    assert_eq!(v["tau"], 0);
    assert_eq!(v["oracle_member"], true);
    // with tau = 0 the search misses the P4 split the oracle finds
    assert_eq!(v["member"], false);
    assert_eq!(o.status.code(), Some(3));

    let o = pqcolor(
        &[
            "recognize",
            "--p",
            "edgeless",
            "--q",
            "complete",
            "--mode",
            "both",
        ],
        P4_EDGES,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).is_empty());
}

#[test]
fn sweep_reports_agreement() {
    let o = pqcolor(
        &[
            "sweep", "--p", "edgeless", "--q", "complete", "--p-max", "0", "--json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v[0]["graphs"], 1);
    assert_eq!(v[0]["agreements"], 1);

    let o = pqcolor(
        &[
            "sweep",
            "--p",
            "edgeless",
            "--q",
            "complete",
            "--p",
            "bipartite",
            "--q",
            "co(bipartite)",
            "--p-max",
            "4",
            "--random",
            "10",
            "--random-order",
            "9",
            "--seed",
            "3",
            "--json",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v = json(&o);
    for pair in v.as_array().unwrap() {
        assert_eq!(pair["graphs"], 1 + 1 + 2 + 8 + 64 + 10);
        assert_eq!(pair["disagreements"], 0);
        assert_eq!(pair["bound_violations"], 0);
    }
    assert_eq!(v[1]["tau"], 5);
}

#[test]
fn sweep_rejects_oversized_or_unpaired_requests() {
    assert_eq!(
        pqcolor(
            &["sweep", "--p", "edgeless", "--q", "complete", "--p-max", "8"],
            ""
        )
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        pqcolor(
            &["sweep", "--p", "edgeless", "--q", "complete", "--p", "cluster"],
            ""
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn tau_and_check() {
    let o = pqcolor(&["tau", "3", "3"], "");
    assert_eq!(
        json(&o),
        serde_json::json!({"m": 3, "n": 3, "tau": 5, "exact": true})
    );
    let o = pqcolor(&["tau", "3", "6"], "");
    assert_eq!(json(&o)["exact"], false);
    let o = pqcolor(&["check", "free(2K2,C4,C5)", "--json"], "Dhc\n");
    assert_eq!(
        json(&o),
        serde_json::json!({"spec": "free(2K2,C4,C5)", "member": false})
    );
}

#[test]
fn convert_round_trips_through_every_format() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("g.el");
    let col = dir.path().join("g.col");
    let petersen = "IheA@GUAo";
    let path = |p: &Path| p.to_str().unwrap().to_string();
    assert!(pqcolor(
        &["convert", "--to", "edge_list", "-o", &path(&el)],
        petersen
    )
    .status
    .success());
    assert!(pqcolor(
        &["convert", &path(&el), "--to", "dimacs", "-o", &path(&col)],
        ""
    )
    .status
    .success());
    let back = pqcolor(&["convert", &path(&col), "--to", "g6"], "");
    assert_eq!(stdout(&back).trim(), petersen);
}

#[test]
fn gadgets_and_generators() {
    let g = stdout(&pqcolor(&["gen", "cycle", "5"], ""));
    assert_eq!(g.trim(), "Dhc");
    let t6 = pqcolor(&["gadget", "t6", "--to", "edge_list"], &g);
    let text = stdout(&t6);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "8");
    assert_eq!(lines.len(), 1 + 5 + 3);
    let t7 = stdout(&pqcolor(&["gadget", "t7"], &g));
    let o = pqcolor(&["check", "free(K4)"], &t7);
    assert_eq!(stdout(&o).trim(), "true");
    let random = stdout(&pqcolor(
        &["gen", "random", "12", "--prob", "0.3", "--seed", "9"],
        "",
    ));
    assert_eq!(
        random,
        stdout(&pqcolor(
            &["gen", "random", "12", "--prob", "0.3", "--seed", "9"],
            ""
        ))
    );
    assert_eq!(pqcolor(&["gen", "cycle", "2"], "").status.code(), Some(1));
}

#[test]
fn witness_workflow() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let g = dir.path().join("g.g6");
    let ws = w.to_str().unwrap();
    let gs = g.to_str().unwrap();
    let o = pqcolor(
        &[
            "find-witness",
            "--spec",
            "edgeless",
            "--spec",
            "complete",
            "--max-order",
            "4",
            "-o",
            ws,
        ],
        "",
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    assert_eq!(file["specs"], serde_json::json!(["edgeless", "complete"]));

    std::fs::write(&g, "Bw\n").unwrap(); // triangle: not edgeless
    let combined = pqcolor(&["gh", gs, ws], "");
    assert!(combined.status.success(), "{}", stderr(&combined));
    let member = pqcolor(
        &["recognize", "--p", "edgeless", "--q", "complete", "--json"],
        &stdout(&combined),
    );
    assert_eq!(json(&member)["member"], false);

    std::fs::write(&g, "B?\n").unwrap(); // two isolated vertices: edgeless
    let combined = pqcolor(&["gh", gs, ws], "");
    let member = pqcolor(
        &["recognize", "--p", "edgeless", "--q", "complete", "--json"],
        &stdout(&combined),
    );
    assert_eq!(json(&member)["member"], true);

    let host = file["host"].as_str().unwrap();
    std::fs::write(&g, host).unwrap();
    let o = pqcolor(&["verify-unique", gs, "edgeless", "complete", "--json"], "");
    assert_eq!(json(&o)["unique"], true);

    std::fs::write(&w, r#"{"host": "Ck", "parts": [[0], [1, 2, 3]], "specs": ["edgeless", "complete"], "anchor": 0}"#).unwrap();
    let o = pqcolor(&["gh", gs, ws], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("invalid witness"), "{}", stderr(&o));
}
