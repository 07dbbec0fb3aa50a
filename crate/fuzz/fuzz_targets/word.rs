#![no_main]

use epwforge::grouprep::Word;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(w) = Word::parse(text) {
            assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }
    }
});
