use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn dst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dst"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn path_str(p: &Path) -> String {
    p.to_string_lossy().into_owned()
}

#[test]
fn construct_complete_writes_three_trees() {
    let out = dst(&["construct", "complete-0l", "--n", "5", "--l", "2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["k"], 3);
    assert_eq!(cert["trees"].as_array().unwrap().len(), 3);
}

#[test]
fn oracle_refutes_two_cists_in_c4() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.el", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let out = dst(&[
        "oracle", "exists", "--graph", &g, "--k", "2", "--i", "0", "--j", "0",
    ]);
    assert_eq!(code(&out), 1);
    // the edge bound refutes before any enumeration; without it all four trees are seen
    let out = dst(&["oracle", "exists", "--graph", &g, "--k", "2", "--no-prune"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "refuted");
    assert_eq!(v["stats"]["trees"], 4);
    let out = dst(&[
        "oracle", "exists", "--graph", &g, "--k", "2", "--i", "0", "--j", "2",
    ]);
    assert_eq!(code(&out), 0);
}

#[test]
fn verify_lcist_partition_of_two_block_example() {
    let dir = TempDir::new().unwrap();
    let g = write(
        &dir,
        "g.el",
        "7 11\n0 1\n1 2\n2 3\n4 5\n5 6\n0 4\n0 5\n1 4\n1 5\n2 6\n3 6\n",
    );
    let p = write(
        &dir,
        "p.json",
        r#"{"blocks":[[0,1,2,3],[4,5,6]],"rooted":false,"l":1}"#,
    );
    assert_eq!(
        code(&dst(&[
            "verify", "lcist", "--graph", &g, "--cert", &p, "--l", "1"
        ])),
        0
    );
    assert_eq!(
        code(&dst(&[
            "verify", "lcist", "--graph", &g, "--cert", &p, "--l", "0"
        ])),
        1
    );
}

#[test]
fn gen_round_trips_and_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("grid.el");
    let out = dst(&[
        "gen",
        "grid",
        "--n1",
        "3",
        "--n2",
        "4",
        "--out",
        &path_str(&file),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&file).unwrap();
    let g = dst_core::graph::parse_edge_list(&text).unwrap();
    assert_eq!(g, dst_core::graph::grid(3, 4).unwrap());
    assert_eq!(dst_core::graph::to_edge_list(&g), text);

    let first = dst(&["construct", "cylinder", "--n1", "4", "--n2", "5"]);
    let second = dst(&["construct", "cylinder", "--n1", "4", "--n2", "5"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn construct_then_verify_family() {
    let dir = TempDir::new().unwrap();
    let cert = dir.path().join("t.json");
    let graph = dir.path().join("g.el");
    let out = dst(&[
        "construct",
        "cylinder",
        "--n1",
        "5",
        "--n2",
        "4",
        "--out",
        &path_str(&cert),
        "--graph-out",
        &path_str(&graph),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let (g, c) = (path_str(&graph), path_str(&cert));
    assert_eq!(
        code(&dst(&[
            "verify", "ij", "--graph", &g, "--cert", &c, "--i", "0", "--j", "3"
        ])),
        0
    );
    assert_eq!(
        code(&dst(&[
            "verify", "ij", "--graph", &g, "--cert", &c, "--i", "0", "--j", "2"
        ])),
        1
    );
}

#[test]
fn reduce_emits_graph_and_port_map() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k4.el", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let map = dir.path().join("map.json");
    let out = dst(&[
        "reduce",
        "--graph",
        &g,
        "--u",
        "0",
        "--v",
        "2",
        "--i",
        "1",
        "--j",
        "1",
        "--port-map",
        &path_str(&map),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let reduced =
        dst_core::graph::parse_edge_list(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(reduced.n(), 16);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(map).unwrap()).unwrap();
    assert_eq!(v["u"], 0);
}

#[test]
fn error_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.el", "3 2\n0 1\n");
    assert_eq!(code(&dst(&["oracle", "domatic", "--graph", &bad])), 2);
    assert_eq!(
        code(&dst(&["construct", "complete-1l", "--n", "5", "--l", "4"])),
        2
    );
    assert_eq!(code(&dst(&["gen", "cycle", "--n", "2"])), 2);
    assert_eq!(code(&dst(&["no-such-command"])), 2);
    let k5 = write(
        &dir,
        "k5.el",
        "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n",
    );
    let out = dst(&[
        "oracle", "exists", "--graph", &k5, "--k", "2", "--budget", "trees:5",
    ]);
    assert_eq!(code(&out), 3);
    assert!(!out.stderr.is_empty());
}

#[test]
fn bounds_and_dot() {
    let out = dst(&["bounds", "hartnell-rall", "--n", "6", "--k", "3"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains('9'));
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c4.el", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let out = dst(&["export-dot", "--graph", &g]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("graph"));
}
