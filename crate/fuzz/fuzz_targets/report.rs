#![no_main]

use epwforge::epw::{summarize, CertReport};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(r) = CertReport::parse(text) {
            assert_eq!(CertReport::parse(&r.to_json()).unwrap(), r);
            let _ = r.to_string();
            let _ = summarize(std::slice::from_ref(&r));
        }
    }
});
