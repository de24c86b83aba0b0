use std::path::PathBuf;
use std::process::{Command, Output};

fn fnc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fnc")).args(args).output().expect("binary runs")
}

fn instance(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "instances", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn frustrated_instance_exits_with_contract_code() {
    let out = fnc(&["solve", &instance("frustrated_triangle.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("frustrated"));

    let out = fnc(&["solve", &instance("frustrated_triangle.json"), "--hybrid"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["cost"].as_f64(), Some(-2.0));
}

#[test]
fn input_errors_exit_with_one() {
    assert_eq!(fnc(&["solve", "/nonexistent/instance.json"]).status.code(), Some(1));
    assert_eq!(fnc(&["solve", &instance("empty.json")]).status.code(), Some(1));
    assert_eq!(fnc(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(fnc(&["gates", "--n", "ten"]).status.code(), Some(1));
    assert_eq!(fnc(&["--help"]).status.code(), Some(0));
}

#[test]
fn solve_with_oracle_reports_optimal() {
    let out = fnc(&["solve", &instance("k4_convergence.json"), "--oracle"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["optimal"], serde_json::Value::Bool(true));
    assert_eq!(doc["cost"], doc["optimal_cost"]);
}

#[test]
fn convergence_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = fnc(&["converge", &instance("ring4_cosine.json"), "--trials", "1", "--seed", "7", "-o", path.to_str().unwrap()]);
        assert!(out.status.success());
        std::fs::read_to_string(path).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    assert!(a.starts_with("T,mean_fraction,stddev\n"));
}

#[test]
fn thread_count_does_not_change_results() {
    let args = |threads: &'static str| {
        stdout(&fnc(&["converge", &instance("k4_convergence.json"), "--trials", "20", "--threads", threads]))
    };
    assert_eq!(args("1"), args("3"));
}

#[test]
fn ecc_finds_outside_instances_at_eight() {
    let out = fnc(&["ecc", "--k", "8", "--r", "2", "--trials", "1000", "--seed", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let headers = rows.headers().unwrap().clone();
    let idx = headers.iter().position(|h| h == "fraction_outside").unwrap();
    let record = rows.records().next().unwrap().unwrap();
    assert!(record[idx].parse::<f64>().unwrap() > 0.0);
}

#[test]
fn resource_tables() {
    let gates = stdout(&fnc(&["gates", "--format", "csv"]));
    assert!(gates.lines().any(|l| l.starts_with("10,45,2,64,1.2e18,1.6e7,1.4e12,8.4e4,")));
    assert_eq!(gates.lines().count(), 5);

    let text = stdout(&fnc(&["gates"]));
    assert!(text.contains("speedup"));

    let sk = stdout(&fnc(&["sk-table", "--format", "csv"]));
    assert!(sk.contains("3,6,5.4e2,6.0e1,1.1e-1"));
    let sk_text = stdout(&fnc(&["sk-table"]));
    assert!(sk_text.contains("crossover between k = 5 and k = 7"), "{sk_text}");
}

#[test]
fn csv_headers_with_separators_are_quoted() {
    let table = stdout(&fnc(&["char-table", "--k", "3", "--format", "csv"]));
    let mut reader = csv::Reader::from_reader(table.as_bytes());
    assert_eq!(reader.headers().unwrap().len(), 4);
    assert_eq!(reader.records().count(), 3);
}

#[test]
fn maxcut_reduction_round_trips_through_solve() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tri.json");
    let out = fnc(&["reduce-maxcut", "--nodes", "4", "--edges", "0-1,1-2,2-3,3-0", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let out = fnc(&["solve", path.to_str().unwrap(), "--hybrid"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // the 4-cycle is bipartite: all four edges cut
    assert_eq!(doc["cost"].as_f64(), Some(-4.0));
}
