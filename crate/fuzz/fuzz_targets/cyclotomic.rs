#![no_main]

use epwforge::arith::CyclotomicNumber;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(parts) = serde_json::from_slice::<Vec<String>>(data) else { return };
    if let Ok(x) = CyclotomicNumber::from_strings(&parts) {
        assert_eq!(CyclotomicNumber::from_strings(&x.to_strings()).unwrap(), x);
    }
});
