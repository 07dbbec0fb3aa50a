//! Every decoder on the checked-in fuzz seeds and on random mutations of them: no panics,
//! and accepted inputs survive a re-encode.

use std::path::PathBuf;

use epwforge::arith::CyclotomicNumber;
use epwforge::epw::{summarize, CertReport};
use epwforge::groebner::Checkpoint;
use epwforge::grouprep::{generators, GroupCache, GroupData, Word};
use epwforge::linalg::{parse_matrix, AnyMatrix, MatrixFile};
use epwforge::poly::{parse_poly, poly_from_json, poly_to_json, PolyRing};
use proptest::prelude::*;

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files.into_iter().map(|p| std::fs::read(p).unwrap()).collect()
}

/// Returns whether the input was accepted.
fn decode(target: &str, data: &[u8]) -> bool {
    let text = std::str::from_utf8(data).ok();
    match target {
        "word" => text.and_then(|t| Word::parse(t).ok()).map(|w| assert_eq!(Word::parse(&w.to_string()).unwrap(), w)),
        "poly_text" => {
            let ring = PolyRing::standard(127).unwrap();
            text.and_then(|t| parse_poly(&ring, t).ok()).map(|f| assert_eq!(parse_poly(&ring, &f.to_string()).unwrap(), f))
        }
        "poly_json" => text
            .and_then(|t| poly_from_json(t).ok())
            .map(|f| assert_eq!(poly_from_json(&poly_to_json(&f)).unwrap(), f)),
        "matrix_json" => text.and_then(|t| parse_matrix(t).ok()).map(|m| {
            let again = match &m {
                AnyMatrix::Cyclotomic(q) => MatrixFile::from_cyclotomic(q, None).to_json(),
                AnyMatrix::Fp(f) => MatrixFile::from_fp(f, None).to_json(),
            };
            assert_eq!(parse_matrix(&again).unwrap(), m);
        }),
        "cyclotomic" => serde_json::from_slice::<Vec<String>>(data)
            .ok()
            .and_then(|p| CyclotomicNumber::from_strings(&p).ok())
            .map(|x| assert_eq!(CyclotomicNumber::from_strings(&x.to_strings()).unwrap(), x)),
        "checkpoint" => text
            .and_then(|t| Checkpoint::parse(t).ok())
            .map(|c| assert_eq!(Checkpoint::parse(&c.to_json()).unwrap(), c)),
        "report" => text.and_then(|t| CertReport::parse(t).ok()).map(|r| {
            assert_eq!(CertReport::parse(&r.to_json()).unwrap(), r);
            let _ = r.to_string();
            summarize(std::slice::from_ref(&r)).unwrap();
        }),
        "group_cache" => serde_json::from_slice::<GroupCache>(data)
            .ok()
            .and_then(|c| GroupData::from_cache(&generators(), &c).ok())
            .map(|_| ()),
        _ => unreachable!(),
    }
    .is_some()
}

const TARGETS: [&str; 8] =
    ["word", "poly_text", "poly_json", "matrix_json", "cyclotomic", "checkpoint", "report", "group_cache"];

#[test]
fn seeds_decode() {
    for target in TARGETS {
        let s = seeds(target);
        assert!(!s.is_empty(), "{target}");
        for (k, data) in s.iter().enumerate() {
            assert!(decode(target, data), "{target} seed {k} rejected");
        }
    }
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(!decode("word", b"a^"));
    assert!(!decode("word", b"c"));
    assert!(!decode("poly_text", b"x7"));
    assert!(!decode("poly_text", b"x1^^2"));
    assert!(!decode("poly_json", br#"{"p":128,"nvars":1,"order":"lex","terms":[]}"#));
    assert!(!decode("matrix_json", br#"{"field":"fp","p":7,"rows":2,"cols":2,"entries":[1,2,3]}"#));
    assert!(!decode("matrix_json", br#"{"field":"fp","p":7,"rows":1,"cols":1,"entries":[9]}"#));
    assert!(!decode("cyclotomic", br#"["1","2"]"#));
    assert!(!decode("cyclotomic", br#"["0","0","0","0","0","0","0","0","0","0","0","0","0"]"#));
    assert!(!decode("report", br#"{"version":2}"#));
    assert!(!decode("group_cache", br#"{"generator_hash":"00","parent":[],"classes":[]}"#));
}

fn mutate(data: &[u8], cut: usize, flips: &[(usize, u8)]) -> Vec<u8> {
    let mut d = data[..cut.min(data.len())].to_vec();
    for &(i, b) in flips {
        if !d.is_empty() {
            let n = d.len();
            d[i % n] ^= b;
        }
    }
    d
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mutated_small_seeds_never_panic(
        target in prop::sample::select(vec!["word", "poly_text", "poly_json", "cyclotomic", "checkpoint", "matrix_json"]),
        which in 0usize..16,
        cut in 0usize..4096,
        flips in prop::collection::vec((0usize..4096, any::<u8>()), 0..4),
    ) {
        let s = seeds(target);
        let data = mutate(&s[which % s.len()], cut, &flips);
        decode(target, &data);
    }

    #[test]
    fn random_text_never_panics(text in "\\PC{0,64}") {
        for target in ["word", "poly_text", "poly_json", "cyclotomic", "checkpoint", "report", "matrix_json"] {
            decode(target, text.as_bytes());
        }
    }
}
