use std::sync::OnceLock;

use epwforge::arith::{CyclotomicField, PrimeField, ReductionMap};
use epwforge::epw::*;
use epwforge::groebner::GbConfig;
use epwforge::grouprep::*;
use epwforge::linalg::wedge::{symplectic_form, wedge_vectors, TripleBasisIndex, WEDGE3_DIM};
use epwforge::linalg::Matrix;
use epwforge::poly::{parse_poly, DetAlgorithm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Fixture {
    map: ReductionMap,
    a1: FpMatrix,
    a2: FpMatrix,
    reps: Vec<FpMatrix>,
    f1: Sextic,
    f2: Sextic,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let group = enumerate_group(&generators(), DEFAULT_ELEMENT_BOUND)
            .unwrap()
            .class_partition(&COLUMN_WORDS)
            .unwrap();
        let pair = build_lagrangians(&group, &class_sums(&group)).unwrap();
        let map = ReductionMap::default();
        let a1 = reduce_lagrangian(&pair.a1, &map).unwrap();
        let a2 = reduce_lagrangian(&pair.a2, &map).unwrap();
        let reps = COLUMN_WORDS
            .iter()
            .map(|w| reduce_matrix(&group.eval_word(&Word::parse(w).unwrap()).unwrap(), &map).unwrap())
            .collect();
        let f1 = epw_sextic(&a1, 1, DetAlgorithm::Interpolation).unwrap();
        let f2 = epw_sextic(&a2, 1, DetAlgorithm::Interpolation).unwrap();
        Fixture { map, a1, a2, reps, f1, f2 }
    })
}

fn fp() -> PrimeField {
    PrimeField::new(127).unwrap()
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(0..127)).collect()
}

#[test]
fn reduced_lagrangians_are_lagrangian() {
    let fx = fixture();
    for a in [&fx.a1, &fx.a2] {
        assert_eq!(a.rank(), 10);
        check_lagrangian(a).unwrap();
    }
    assert_eq!(intersection_dim(&fx.a1, &fx.a2), 0);
}

#[test]
fn coordinate_lagrangian_reduces_to_its_pattern() {
    let q = CyclotomicField;
    let cols: Vec<usize> = (0..WEDGE3_DIM).filter(|&t| TripleBasisIndex::triples()[t][0] == 0).collect();
    let basis = Matrix::from_fn(&q, WEDGE3_DIM, 10, |r, c| {
        if r == cols[c] {
            epwforge::arith::CyclotomicNumber::one()
        } else {
            epwforge::arith::CyclotomicNumber::zero()
        }
    });
    let b = LagrangianBasis { label: "F_e1".into(), basis };
    let reduced = reduce_lagrangian(&b, &ReductionMap::default()).unwrap();
    assert_eq!(reduced, control_lagrangian(&fp()));
}

#[test]
fn chart_matrix_entries_are_linear_forms() {
    let fx = fixture();
    for c in 1..=6 {
        let cm = chart_matrix(&fx.a1, c).unwrap();
        assert!(cm.matrix.entries().iter().all(|e| e.is_zero() || e.homogeneous_degree() == Some(1)));
    }
    assert!(chart_matrix(&fx.a1, 0).is_err());
    assert!(chart_matrix(&fx.a1, 7).is_err());
}

#[test]
fn chart_rank_at_vertex_matches_intersection() {
    let fx = fixture();
    for a in [&fx.a1, &fx.a2, &control_lagrangian(&fp())] {
        for c in 1..=6 {
            let mut v = vec![0u32; 6];
            v[c - 1] = 1;
            let rank = chart_matrix(a, c).unwrap().eval(&v).rank();
            assert_eq!(rank, 10 - intersection_dim(a, &fiber_lagrangian(&fp(), &v)));
        }
    }
}

#[test]
fn chart_rank_drops_off_the_chart() {
    let fx = fixture();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cm = chart_matrix(&fx.a1, 1).unwrap();
    for _ in 0..20 {
        let mut v = random_vec(&mut rng, 6);
        v[0] = 0;
        assert!(cm.eval(&v).rank() <= 6);
    }
}

#[test]
fn rank_and_sextic_match_subspace_intersection() {
    let fx = fixture();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let cm = chart_matrix(&fx.a1, 1).unwrap();
    for _ in 0..50 {
        let mut v = random_vec(&mut rng, 6);
        v[0] = rng.gen_range(1..127);
        let k = intersection_dim(&fx.a1, &fiber_lagrangian(&fp(), &v));
        assert_eq!(cm.eval(&v).rank(), 10 - k);
        assert_eq!(fx.f1.poly.eval(&v) == 0, k > 0);
    }
    // points of the sextic: solve for x6 on random lines until a root appears
    let mut hits = 0;
    while hits < 10 {
        let mut v = random_vec(&mut rng, 6);
        v[0] = 1;
        let root = (0..127).find(|&t| {
            v[5] = t;
            fx.f1.poly.eval(&v) == 0
        });
        if let Some(t) = root {
            v[5] = t;
            assert!(intersection_dim(&fx.a1, &fiber_lagrangian(&fp(), &v)) >= 1);
            hits += 1;
        }
    }
}

#[test]
fn sextic_has_degree_six_and_agrees_across_charts() {
    let fx = fixture();
    for (a, f) in [(&fx.a1, &fx.f1), (&fx.a2, &fx.f2)] {
        assert_eq!(f.determinant_degree, 10);
        assert_eq!(f.valuation, 4);
        assert_eq!(f.poly.homogeneous_degree(), Some(6));
        for c in 2..=6 {
            let g = epw_sextic(a, c, DetAlgorithm::Interpolation).unwrap();
            assert!(proportionality(&f.poly, &g.poly).is_some(), "chart {c}");
        }
    }
    assert!(proportionality(&fx.f1.poly, &fx.f2.poly).is_none());
}

#[test]
fn laplace_and_interpolation_agree_on_sextic() {
    let fx = fixture();
    let g = epw_sextic(&fx.a1, 1, DetAlgorithm::Laplace).unwrap();
    assert_eq!(g, fx.f1);
}

#[test]
fn sextic_is_equivariant() {
    let fx = fixture();
    assert_eq!(fx.reps.len(), 9);
    for f in [&fx.f1.poly, &fx.f2.poly] {
        for g in &fx.reps {
            let lambda = equivariance_scalar(f, g).expect("proportional");
            assert_ne!(lambda, 0);
        }
    }
    // a generic linear change of coordinates does not preserve it
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let g = Matrix::from_fn(&fp(), 6, 6, |_, _| rng.gen_range(0..127));
    assert!(equivariance_scalar(&fx.f1.poly, &g).is_none());
}

#[test]
fn singular_locus_of_both_sextics() {
    let fx = fixture();
    for f in [&fx.f1.poly, &fx.f2.poly] {
        let s = certify_singular_locus(f, &GbConfig::default()).unwrap();
        assert_eq!((s.projective_dimension, s.degree), (2, 40));
        assert!(s.euler_relation);
        assert!(s.reduced_irreducible);
    }
}

#[test]
fn singular_locus_controls() {
    let r = sextic_ring(fp());
    let s = certify_singular_locus(&parse_poly(&r, "x1^6").unwrap(), &GbConfig::default()).unwrap();
    assert_eq!((s.projective_dimension, s.degree), (4, 5));
    assert!(!s.reduced_irreducible);
    let fermat = parse_poly(&r, "x1^6 + x2^6 + x3^6 + x4^6 + x5^6 + x6^6").unwrap();
    let s = certify_singular_locus(&fermat, &GbConfig::default()).unwrap();
    assert!(s.projective_dimension < 0);
    assert!(s.reduced_irreducible);
    let reducible = parse_poly(&r, "x1^3*x2^3 + x1^3*x3^3").unwrap();
    assert!(!certify_singular_locus(&reducible, &GbConfig::default()).unwrap().reduced_irreducible);
}

#[test]
fn y3_is_empty_for_both_lagrangians() {
    let fx = fixture();
    for a in [&fx.a1, &fx.a2] {
        let y3 = certify_y3_empty(a, &GbConfig::default(), 3).unwrap();
        assert_eq!(y3.charts.len(), 6);
        assert!(y3.charts.iter().all(|c| c.trivial && c.minors <= 2025 && c.independent_minors > 0), "{y3:?}");
        assert!(y3.empty);
    }
}

#[test]
fn control_lagrangian_fails() {
    let a = control_lagrangian(&fp());
    check_lagrangian(&a).unwrap();
    assert_eq!(epw_sextic(&a, 1, DetAlgorithm::Interpolation), Err(EpwError::DegenerateDeterminant));
    let y3 = certify_y3_empty(&a, &GbConfig::default(), 2).unwrap();
    assert!(!y3.empty);
    // e1 itself has dim(A ∩ F_e1) = 10 >= 3
    let mut e1 = vec![0u32; 6];
    e1[0] = 1;
    assert!(chart_matrix(&a, 1).unwrap().eval(&e1).rank() <= 7);
    assert!(!grassmannian_probe(&a, &GbConfig::default()).unwrap().empty);
}

#[test]
fn plucker_quadrics_detect_decomposables() {
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let quadrics = plucker_quadrics();
    let eval = |p: &[u32], q: &[(usize, usize, i64)]| {
        q.iter().fold(0u32, |acc, &(t, s, c)| f.add(acc, f.mul(f.from_i64(c), f.mul(p[t], p[s]))))
    };
    for _ in 0..20 {
        let (x, y, z) = (random_vec(&mut rng, 6), random_vec(&mut rng, 6), random_vec(&mut rng, 6));
        let p = wedge_vectors(&f, &x, &y, &z);
        assert!(quadrics.iter().all(|q| eval(&p, q) == 0));
    }
    let mut p = vec![0u32; WEDGE3_DIM];
    p[TripleBasisIndex::position([0, 1, 2])] = 1;
    p[TripleBasisIndex::position([3, 4, 5])] = 1;
    assert!(quadrics.iter().any(|q| eval(&p, q) != 0));
}

#[test]
fn no_decomposable_vectors_in_either_lagrangian() {
    let fx = fixture();
    for a in [&fx.a1, &fx.a2] {
        let probe = grassmannian_probe(a, &GbConfig::default()).unwrap();
        assert!(probe.empty, "{probe:?}");
    }
}

#[test]
fn reports_are_deterministic_and_roundtrip() {
    let fx = fixture();
    let opts = CertifyOptions { y3: false, probe: true, jobs: 2, ..CertifyOptions::default() };
    let r1 = certify(&fx.a1, "A1", "h", &fx.map, &fx.reps, &opts);
    let r2 = certify(&fx.a1, "A1", "h", &fx.map, &fx.reps, &CertifyOptions { jobs: 1, ..opts.clone() });
    assert_eq!(r1.to_json(), r2.to_json());
    assert!(r1.passed(), "{r1}");
    assert_eq!(CertReport::parse(&r1.to_json()).unwrap(), r1);
    let bumped = r1.to_json().replacen("\"version\": 1", "\"version\": 2", 1);
    assert!(matches!(CertReport::parse(&bumped), Err(ReportError::SchemaVersionMismatch { found: 2, .. })));
    let summary = summarize(std::slice::from_ref(&r1)).unwrap();
    assert_eq!(summary.rows.len(), 1);
    assert!(summary.inconsistencies.is_empty());
    assert_eq!(summarize(&[]), Err(ReportError::Empty));
}

#[test]
fn pairing_against_fiber_is_chart_matrix() {
    let fx = fixture();
    let f = fp();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let v = random_vec(&mut rng, 6);
    let cm = chart_matrix(&fx.a1, 3).unwrap().eval(&v);
    for (col, &(i, j)) in chart_pairs(2).iter().enumerate() {
        let mut ei = vec![0u32; 6];
        let mut ej = vec![0u32; 6];
        ei[i] = 1;
        ej[j] = 1;
        let w = wedge_vectors(&f, &v, &ei, &ej);
        for k in 0..10 {
            assert_eq!(*cm.get(k, col), symplectic_form(&f, &fx.a1.column(k), &w));
        }
    }
}

