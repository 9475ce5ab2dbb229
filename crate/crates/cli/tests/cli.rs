use std::collections::BTreeMap;
use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supergraph")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Vertex count and edge list of a DOT graph written by `build`.
fn parse_dot(dot: &str) -> (usize, Vec<(usize, usize)>) {
    let mut n = 0;
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((u, v)) = line.trim_end_matches(';').split_once(" -- ") {
            edges.push((u.parse().unwrap(), v.parse().unwrap()));
        } else if line.contains("[label=") {
            n += 1;
        }
    }
    (n, edges)
}

fn component_sizes(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut root: Vec<usize> = (0..n).collect();
    fn find(r: &mut Vec<usize>, x: usize) -> usize {
        if r[x] != x {
            let top = find(r, r[x]);
            r[x] = top;
        }
        r[x]
    }
    for &(u, v) in edges {
        let (a, b) = (find(&mut root, u), find(&mut root, v));
        root[a] = b;
    }
    let mut sizes = BTreeMap::new();
    for x in 0..n {
        *sizes.entry(find(&mut root, x)).or_insert(0) += 1;
    }
    let mut v: Vec<usize> = sizes.into_values().collect();
    v.sort_unstable();
    v
}

#[test]
fn dihedral_reduced_graph_is_two_cliques() {
    let dot = stdout(&["build", "--group", "D14", "--graph", "commuting", "--relation", "order", "--reduced", "--format", "dot"]);
    let (n, edges) = parse_dot(&dot);
    assert_eq!(n, 13);
    assert_eq!(component_sizes(n, &edges), vec![6, 7]);
    // cliques: 6*5/2 + 7*6/2 edges
    assert_eq!(edges.len(), 15 + 21);
}

#[test]
fn trivial_group_is_one_vertex() {
    let (n, edges) = parse_dot(&stdout(&["build", "--group", "Z1", "--graph", "power"]));
    assert_eq!((n, edges.len()), (1, 0));
}

#[test]
fn json_build_lists_vertices_and_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.json");
    stdout(&["build", "--group", "Q8", "--graph", "enhanced-power", "--format", "json", "--output", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["graph"], "Pe");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    // identity and the central involution join everything; the three order-4 subgroups add one edge each
    assert_eq!(v["edges"].as_array().unwrap().len(), 7 + 6 + 3);
}

#[test]
fn oversized_group_exits_with_budget_code() {
    let out = run(&["build", "--group", "S9", "--graph", "power", "--relation", "equality"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("362880"));
    let out = run(&["build", "--group", "S9", "--graph", "power", "--budget", "400000"]);
    // the permutation degree cap is a budget of its own
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["build", "--group", "X5", "--graph", "power"]).status.code(), Some(2));
    assert_eq!(run(&["build", "--group", "Z5", "--graph", "tree"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--family", "symmetric", "--from", "9", "--to", "8"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--family", "symmetric", "--from", "4", "--to", "61"]).status.code(), Some(3));
}

#[test]
fn verify_single_cyclic_group() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = dir.path().join("catalog.txt");
    fs::write(&catalog, "# one group\nZ6\n").unwrap();
    let text = stdout(&["verify", "--catalog", catalog.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["consistent"], true);
    let eqs = v["groups"][0]["equalities"].as_array().unwrap();
    let pe = eqs.iter().find(|e| e["theorem_id"] == "power-eq-enhanced").unwrap();
    assert_eq!(pe["graphs_equal"], false);
    assert_eq!(pe["predicted"], false);
}

#[test]
fn verify_default_catalog_is_consistent() {
    let out = run(&["verify", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",true")));
    assert!(csv.lines().count() > 82 * 18);
}

#[test]
fn corrupted_catalog_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = dir.path().join("bad.txt");
    fs::write(&catalog, "Z6\nD7\n").unwrap();
    let out = run(&["verify", "--catalog", catalog.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn symbolic_verification_reports_degree_six_alternating() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = dir.path().join("c.txt");
    fs::write(&catalog, "Z2\n").unwrap();
    let out = run(&["verify", "--catalog", catalog.to_str().unwrap(), "--symbolic", "12"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let list = v["mismatches"].as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert!(list[0].as_str().unwrap().starts_with("alternating 6: 3 components"));
}

fn scan_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().skip(1).filter(|l| !l.starts_with('#')).map(|l| l.split(',').map(String::from).collect()).collect()
}

#[test]
fn symmetric_scan_connected_degrees() {
    let csv = stdout(&["scan", "--family", "symmetric", "--from", "4", "--to", "20"]);
    let rows = scan_rows(&csv);
    assert_eq!(rows.len(), 17);
    let connected: Vec<&str> = rows.iter().filter(|r| r[2] == "true").map(|r| r[1].as_str()).collect();
    assert_eq!(connected, ["9", "10", "15", "16"]);
    assert!(rows.iter().filter(|r| r[2] == "true").all(|r| r[4] == "3"));
    assert!(csv.trim_end().ends_with("counterexamples=0"));
}

#[test]
fn alternating_scan_small_degrees_disconnected() {
    let rows = scan_rows(&stdout(&["scan", "--family", "alternating", "--from", "4", "--to", "9"]));
    assert!(rows.iter().all(|r| r[2] == "false" && r[4] == "inf"));
}

#[test]
fn single_degree_scan_has_witness() {
    let rows = scan_rows(&stdout(&["scan", "--family", "symmetric", "--from", "9", "--to", "9"]));
    assert_eq!(rows.len(), 1);
    assert!(!rows[0][5].is_empty() && !rows[0][7].is_empty());
}

#[test]
fn spectrum_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["spectrum", "--family", "alternating", "--n", "10"])).unwrap();
    assert_eq!(v["maximal_orders"], serde_json::json!([8, 9, 10, 12, 15, 21]));
    assert_eq!(v["predicted"]["is_connected"], true);
    assert!(v["witness"].is_object());
    assert_eq!(run(&["spectrum", "--family", "symmetric", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let path = dir.path().join(format!("scan{i}.csv"));
            stdout(&["scan", "--family", "alternating", "--from", "4", "--to", "30", "--workers", "2", "--output", path.to_str().unwrap()]);
            fs::read(&path).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    let a = stdout(&["build", "--group", "S4", "--graph", "commuting", "--relation", "conjugacy", "--format", "json"]);
    let b = stdout(&["build", "--group", "S4", "--graph", "commuting", "--relation", "conjugacy", "--format", "json"]);
    assert_eq!(a, b);
}
