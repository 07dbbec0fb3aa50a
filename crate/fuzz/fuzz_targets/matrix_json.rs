#![no_main]

use epwforge::linalg::{parse_matrix, AnyMatrix, MatrixFile};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(m) = parse_matrix(text) {
            let again = match &m {
                AnyMatrix::Cyclotomic(q) => MatrixFile::from_cyclotomic(q, None).to_json(),
                AnyMatrix::Fp(f) => MatrixFile::from_fp(f, None).to_json(),
            };
            assert_eq!(parse_matrix(&again).unwrap(), m);
        }
    }
});
