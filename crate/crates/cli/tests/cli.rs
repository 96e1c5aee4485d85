use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use kappatree::fixtures;
use kappatree_cli::{emit_edgelist, ReportDocument};
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kappatree"));
    cmd.env_remove("KAPPATREE_THREADS");
    cmd
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn document(out: &Output) -> ReportDocument {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn tree_json_for_x5() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "x5.edges", &emit_edgelist(&fixtures::x_graph(5)));
    let out = run(&["tree", &file, "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = document(&out);
    assert_eq!(doc.kappa, Some(3));
    assert_eq!(doc.separators.unwrap().len(), 3);
    assert_eq!(doc.blocks.unwrap().len(), 4);
    let slices = doc.slices.unwrap();
    assert_eq!(slices.len(), 1);
    assert_eq!(slices[0].vertices, ["c", "d"]);
}

#[test]
fn analyze_complete_graph_is_trivial() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "k5.edges", &emit_edgelist(&fixtures::complete(5)));
    let out = run(&["analyze", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\n  \"kappa\": null,\n  \"trivial\": true\n}\n"
    );
}

#[test]
fn verify_ring_passes() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "ring.edges", &emit_edgelist(&fixtures::ring()));
    let out = run(&["verify", &file]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["oracle"]["status"], "checked");
    assert_eq!(report["oracle"]["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(report["axioms"][0]["cuts"], 12);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let disconnected = write(&dir, "two.edges", "a b\n\nc d\n");
    assert_eq!(run(&["analyze", &disconnected]).status.code(), Some(2));

    let malformed = write(&dir, "bad.edges", "a b\nc d e\n");
    let out = run(&["analyze", &malformed]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(
        run(&["analyze", "/nonexistent/graph"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let g = fixtures::random_connected(11, 0.35, 42);
    let file = write(&dir, "g.edges", &emit_edgelist(&g));
    for cmd in ["analyze", "tree", "decompose"] {
        let (a, b) = (run(&[cmd, &file]), run(&[cmd, &file]));
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn dot_output_for_ring() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "ring.edges", &emit_edgelist(&fixtures::ring()));
    let out = run(&["tree", &file, "--dot", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph structure_tree {"));
    assert_eq!(text.matches("fillcolor=white").count(), 4);
    assert_eq!(text.matches("fillcolor=black").count(), 5);
}

#[test]
fn dot_subset_input_and_stdin() {
    let text = "graph ring {\n  x1 -- x2 -- x3 -- x4 -- x1;\n  x1 -- y1 -- x2; x2 -- y2 -- x3;\n  x3 -- y3 -- x4; x4 -- y4 -- x1;\n}\n";
    let mut child = bin()
        .args(["--format", "dot-subset", "tree", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = document(&out);
    assert_eq!(doc.kappa, Some(2));
    assert_eq!(doc.separators.unwrap().len(), 4);
}

#[test]
fn decompose_respects_max_depth() {
    let dir = TempDir::new().unwrap();
    let g = fixtures::random_connected(17, 0.15, 5036);
    let file = write(&dir, "deep.edges", &emit_edgelist(&g));
    let full = document(&run(&["decompose", &file]));
    let capped = run(&["decompose", &file, "--max-depth", "0"]);
    assert!(stderr(&capped).contains("depth limit reached"));
    let capped = document(&capped);
    let outcomes = |d: &ReportDocument| {
        d.recursion
            .as_ref()
            .unwrap()
            .iter()
            .map(|r| serde_json::to_value(r.outcome).unwrap())
            .collect::<Vec<_>>()
    };
    assert!(outcomes(&full).iter().any(|o| o == "decomposed"));
    assert!(outcomes(&capped).iter().any(|o| o == "depth-limit"));
    assert!(outcomes(&capped).iter().all(|o| o != "decomposed"));
}

#[test]
fn thread_cap_from_environment() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "x6.edges", &emit_edgelist(&fixtures::x_graph(6)));
    let with = |value: &str| {
        bin()
            .env("KAPPATREE_THREADS", value)
            .args(["tree", &file])
            .output()
            .unwrap()
    };
    let (one, auto) = (with("1"), with("0"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, auto.stdout);
    assert_eq!(with("lots").status.code(), Some(1));
}

#[test]
fn edgelist_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let g = fixtures::surplus_nested();
    let file = write(&dir, "g.edges", &emit_edgelist(&g));
    let back = kappatree_cli::parse_graph(
        &std::fs::read_to_string(Path::new(&file)).unwrap(),
        Default::default(),
    )
    .unwrap();
    assert_eq!(back.edge_labels(), g.edge_labels());
}
