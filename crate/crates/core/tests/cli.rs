use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use pats::io::{read_pattern, read_seed, read_tileset};
use pats::sim::{unique_pattern, Rtas};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn pats(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pats")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn simulate_counter_matches_checked_in_pattern() {
    let tiles = data("half_adder.tts");
    let seed = data("counter_8x8.seed");
    let o = pats(&["simulate", "--tiles", path(&tiles), "--seed", path(&seed)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), fs::read_to_string(data("counter_8x8.pat")).unwrap());
}

#[test]
fn simulate_writes_trace_and_image() {
    let dir = tempfile::tempdir().unwrap();
    let (trace, ppm, out) = (dir.path().join("t.log"), dir.path().join("c.ppm"), dir.path().join("c.pat"));
    let o = pats(&[
        "simulate",
        "--tiles",
        path(&data("half_adder.tts")),
        "--seed",
        path(&data("counter_8x8.seed")),
        "--random-order",
        "7",
        "--trace",
        path(&trace),
        "--ppm",
        path(&ppm),
        "--out",
        path(&out),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(fs::read_to_string(trace).unwrap().lines().count(), 64);
    assert!(fs::read_to_string(ppm).unwrap().starts_with("P3\n9 9\n255\n"));
    assert_eq!(fs::read_to_string(out).unwrap(), fs::read_to_string(data("counter_8x8.pat")).unwrap());
}

#[test]
fn check_directed() {
    let o = pats(&["check-directed", "--tiles", path(&data("half_adder.tts"))]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tts");
    fs::write(&bad, "tile a N=x W=p S=q E=x\ntile b N=y W=p S=q E=y\n").unwrap();
    let o = pats(&["check-directed", "--tiles", path(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    // Neither type can attach to a seed presenting other glues.
    let seed = dir.path().join("s.seed");
    fs::write(&seed, "PATS-SEED 1\nwidth 1 height 1\neast z\nnorth z\n").unwrap();
    let o = pats(&["check-directed", "--tiles", path(&bad), "--seed", path(&seed)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn solve_mosaic_and_decide_budgets() {
    let dir = tempfile::tempdir().unwrap();
    let seed_out = dir.path().join("m.seed");
    let pat = data("mosaic_k2.pat");
    let o = pats(&["solve", "--pattern", path(&pat), "--seed-out", path(&seed_out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let (first, tts) = text.split_once('\n').unwrap();
    assert_eq!(first, "min=9");
    // The printed tile set and seed regrow the pattern.
    let file = read_tileset(tts).unwrap();
    let s = Rtas::new(file.tiles, read_seed(&fs::read_to_string(seed_out).unwrap()).unwrap());
    let want = read_pattern(&fs::read_to_string(&pat).unwrap()).unwrap();
    assert_eq!(unique_pattern(&s, &file.coloring).unwrap(), want);

    let o = pats(&["solve", "--pattern", path(&pat), "--max-types", "8"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "NO"));
    let o = pats(&["solve", "--pattern", path(&pat), "--max-types", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("YES\n"));
}

#[test]
fn bounds_report() {
    let o = pats(&["bounds", "--pattern", path(&data("mosaic_k2.pat"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn reduce_writes_consistent_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let o = pats(&["reduce", "--cnf", path(&data("circuit.cnf")), "--out-dir", path(&dir.path().to_path_buf())]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let manifest = stdout(&o);
    assert!(manifest.contains("budget-identity 83 = 59 + 24"), "{manifest}");
    let read = |ext: &str| fs::read_to_string(dir.path().join(format!("circuit.{ext}"))).unwrap();
    assert_eq!(read("manifest"), manifest);
    let file = read_tileset(&read("tts")).unwrap();
    assert_eq!(file.tiles.len(), 83);
    let s = Rtas::new(file.tiles, read_seed(&read("seed")).unwrap());
    assert_eq!(unique_pattern(&s, &file.coloring).unwrap(), read_pattern(&read("pat")).unwrap());
    assert_eq!(read("palette").lines().count(), 59);
}

#[test]
fn verify_truth_table() {
    let o = pats(&["verify", "--cnf", path(&data("one_clause.cnf")), "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("matches 8/8\n"), "{out}");
    assert!(out.contains("cover-up ok"));
    let o = pats(&["verify", "--cnf", path(&data("circuit.cnf")), "--assignment", "0110"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("matches 1/1\n"));
}

#[test]
fn render_and_palette() {
    let o = pats(&["render", "--pattern", path(&data("counter_8x8.pat")), "--preset", "counter"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3 + 9);
    let o = pats(&["palette", "reduction"]);
    assert_eq!(stdout(&o).lines().count(), 59);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(pats(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(pats(&["verify", "--cnf", path(&data("one_clause.cnf"))]).status.code(), Some(2));
    assert_eq!(pats(&["verify", "--cnf", path(&data("one_clause.cnf")), "--assignment", "01x"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cnf");
    fs::write(&bad, "p cnf 2 1\n1 2 0\n").unwrap();
    let o = pats(&["reduce", "--cnf", path(&bad), "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a 3SAT instance"));
    assert_eq!(pats(&["bounds", "--pattern", "/nonexistent.pat"]).status.code(), Some(2));
}
