#![no_main]

use libfuzzer_sys::fuzz_target;
use pats::io::{parse_dimacs, write_dimacs};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(phi) = parse_dimacs(text) {
        assert_eq!(parse_dimacs(&write_dimacs(&phi)).unwrap(), phi);
    }
});
