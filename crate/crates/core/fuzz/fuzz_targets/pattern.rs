#![no_main]

use libfuzzer_sys::fuzz_target;
use pats::io::{read_pattern, write_pattern};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = read_pattern(text) {
        assert_eq!(read_pattern(&write_pattern(&p)).unwrap(), p);
    }
});
