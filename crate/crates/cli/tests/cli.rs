use std::path::Path;
use std::process::{Command, Output};
use std::sync::OnceLock;

use epwforge::epw::CertReport;
use epwforge::grouprep::generators;
use epwforge::linalg::MatrixFile;
use tempfile::TempDir;

fn epwforge(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epwforge"))
        .current_dir(dir)
        .env("EPWFORGE_CACHE", dir.join("cache"))
        .args(args)
        .output()
        .expect("runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// A directory with A1.json, A2.json and F_e1.json built once.
fn built() -> &'static TempDir {
    static DIR: OnceLock<TempDir> = OnceLock::new();
    DIR.get_or_init(|| {
        let dir = TempDir::new().unwrap();
        let o = epwforge(dir.path(), &["build-lagrangians", "--control", "--out", "."]);
        assert!(o.status.success(), "{}", stderr(&o));
        dir
    })
}

#[test]
fn rebuild_with_warm_cache_is_byte_identical() {
    let dir = built().path();
    let before = std::fs::read(dir.join("A1.json")).unwrap();
    let other = TempDir::new().unwrap();
    std::fs::create_dir_all(other.path().join("cache")).unwrap();
    for entry in std::fs::read_dir(dir.join("cache")).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, other.path().join("cache").join(p.file_name().unwrap())).unwrap();
    }
    let o = epwforge(other.path(), &["build-lagrangians", "--out", "."]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(std::fs::read(other.path().join("A1.json")).unwrap(), before);
    assert_eq!(std::fs::read(other.path().join("A2.json")).unwrap(), std::fs::read(dir.join("A2.json")).unwrap());
}

#[test]
fn tampered_generators_are_rejected() {
    let dir = TempDir::new().unwrap();
    let [a, _] = generators();
    // replacing b by a leaves a cyclic group the class words cannot hit
    let files = vec![MatrixFile::from_cyclotomic(&a, None), MatrixFile::from_cyclotomic(&a.mul(&a), None)];
    std::fs::write(dir.path().join("gens.json"), serde_json::to_string(&files).unwrap()).unwrap();
    let o = epwforge(dir.path(), &["build-lagrangians", "--generators", "gens.json"]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    assert!(err.contains("word") || err.contains("classes") || err.contains("exceeds"), "{err}");
}

#[test]
fn certify_a1_and_the_control() {
    let dir = built().path();
    let o = epwforge(dir, &["certify", "A1.json", "--no-y3", "--out", "r1.json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let r = CertReport::parse(&std::fs::read_to_string(dir.join("r1.json")).unwrap()).unwrap();
    assert!(r.passed());
    assert_eq!(r.singular_locus.as_ref().map(|s| (s.projective_dimension, s.degree)), Some((2, 40)));

    let again = epwforge(dir, &["certify", "A1.json", "--no-y3", "--out", "r1b.json"]);
    assert!(again.status.success());
    assert_eq!(std::fs::read(dir.join("r1.json")).unwrap(), std::fs::read(dir.join("r1b.json")).unwrap());

    let o = epwforge(dir, &["certify", "F_e1.json", "--out", "rc.json"]);
    assert_eq!(o.status.code(), Some(1));
    let rc = CertReport::parse(&std::fs::read_to_string(dir.join("rc.json")).unwrap()).unwrap();
    assert!(!rc.failures.is_empty());
    assert_eq!(rc.verdicts.no_decomposables, Some(false));
    assert_eq!(rc.verdicts.y3_empty, Some(false));

    let o = epwforge(dir, &["report", "r1.json"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stdout).contains("CERTIFIED"));
    let o = epwforge(dir, &["report", "r1.json", "rc.json", "--json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sextic_and_y3_commands() {
    let dir = built().path();
    let o = epwforge(dir, &["sextic", "A2.json", "--chart", "3", "--out", "f.json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let f = epwforge::poly::poly_from_json(&std::fs::read_to_string(dir.join("f.json")).unwrap()).unwrap();
    assert_eq!(f.homogeneous_degree(), Some(6));
    let o = epwforge(dir, &["y3", "A2.json", "--chart", "4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(String::from_utf8_lossy(&o.stdout).contains("chart 4"));
}

#[test]
fn usage_and_input_errors_exit_nonzero() {
    let dir = built().path();
    assert_eq!(epwforge(dir, &["report"]).status.code(), Some(2));
    let o = epwforge(dir, &["certify", "A1.json", "--prime", "128"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("reduction map"));
    let o = epwforge(dir, &["certify", "F_e1.json", "--prime", "211", "--root", "2"]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::write(dir.join("junk.json"), "{\"version\": 9}").unwrap();
    let o = epwforge(dir, &["report", "junk.json"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("version"), "{}", stderr(&o));
    let o = epwforge(dir, &["sextic", "missing.json"]);
    assert_eq!(o.status.code(), Some(3));
}
