#![no_main]

use libfuzzer_sys::fuzz_target;
use pats::io::{read_seed, write_seed};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = read_seed(text) {
        assert_eq!(read_seed(&write_seed(&s)).unwrap(), s);
    }
});
