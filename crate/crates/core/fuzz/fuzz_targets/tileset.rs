#![no_main]

use libfuzzer_sys::fuzz_target;
use pats::io::{read_tileset, write_tileset};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(f) = read_tileset(text) {
        let again = read_tileset(&write_tileset(&f.tiles, Some(&f.coloring), Some(&f.strengths))).unwrap();
        assert_eq!(again.tiles, f.tiles);
        assert_eq!(again.coloring, f.coloring);
    }
});
