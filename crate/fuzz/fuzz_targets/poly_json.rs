#![no_main]

use epwforge::poly::{poly_from_json, poly_to_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(f) = poly_from_json(text) {
            assert_eq!(poly_from_json(&poly_to_json(&f)).unwrap(), f);
        }
    }
});
