#![no_main]

use epwforge::poly::{parse_poly, PolyRing};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let ring = PolyRing::standard(127).unwrap();
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(f) = parse_poly(&ring, text) {
            assert_eq!(parse_poly(&ring, &f.to_string()).unwrap(), f);
        }
    }
});
