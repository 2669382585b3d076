//! Replays the checked-in fuzz corpus through the fuzz targets' round-trip
//! properties on stable. Every seed is expected to parse.

use std::fs;
use std::path::PathBuf;

use pats::io::{
    parse_dimacs, read_pattern, read_seed, read_tileset, write_dimacs, write_pattern, write_seed, write_tileset,
};

fn corpus(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.display().to_string(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "empty corpus for {target}");
    out
}

#[test]
fn dimacs_seeds() {
    for (name, text) in corpus("dimacs") {
        let phi = parse_dimacs(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(parse_dimacs(&write_dimacs(&phi)).unwrap(), phi, "{name}");
    }
}

#[test]
fn pattern_seeds() {
    for (name, text) in corpus("pattern") {
        let p = read_pattern(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(read_pattern(&write_pattern(&p)).unwrap(), p, "{name}");
    }
}

#[test]
fn tileset_seeds() {
    for (name, text) in corpus("tileset") {
        let f = read_tileset(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let again = read_tileset(&write_tileset(&f.tiles, Some(&f.coloring), Some(&f.strengths))).unwrap();
        assert_eq!(again.tiles, f.tiles, "{name}");
        assert_eq!(again.coloring, f.coloring, "{name}");
        assert_eq!(again.strengths, f.strengths, "{name}");
    }
}

#[test]
fn seed_seeds() {
    for (name, text) in corpus("seed") {
        let s = read_seed(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(read_seed(&write_seed(&s)).unwrap(), s, "{name}");
    }
}
