//! Hot-path benchmarks: congruence saturation, prime enumeration,
//! integer Smith normal form, compatible-morphism counting, and the
//! truncated zeta series. Fixtures are the standing worked examples.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use bluepoint_core::{
    deitmar_zeta, enumerate_primes, hom_b, q_count, saturate, smith_normal_form, AffinePiece,
    Blueprint, CoefficientRing, GluedScheme, IntMatrix, MonoidPresentation, PolyRelation, PolySum,
    ZetaMode,
};
use num_bigint::BigInt;

fn sum4_blueprint() -> Blueprint {
    let m = MonoidPresentation::free(&["T1", "T2", "T3", "T4"], 8);
    let rel = PolyRelation {
        lhs: PolySum::from_pairs(&[(1, m.monomial(&[(0, 1)])), (1, m.monomial(&[(1, 1)]))]),
        rhs: PolySum::from_pairs(&[(1, m.monomial(&[(2, 1)])), (1, m.monomial(&[(3, 1)]))]),
    };
    Blueprint::new(m, CoefficientRing::Nat, vec![rel]).unwrap()
}

fn det_one_blueprint() -> Blueprint {
    let m = MonoidPresentation::free(&["T1", "T2", "T3", "T4"], 16);
    let lhs = PolySum::from_pairs(&[(1, m.monomial(&[(0, 1), (3, 1)]))]);
    let rhs = PolySum::from_pairs(&[(1, m.monomial(&[(1, 1), (2, 1)])), (1, m.monomial(&[]))]);
    Blueprint::new(m, CoefficientRing::Int, vec![PolyRelation { lhs, rhs }]).unwrap()
}

fn bench_saturation(c: &mut Criterion) {
    // A presentation whose congruence actually has work to do: an order-six
    // unit times an idempotent, inside a degree-12 window.
    let free = MonoidPresentation::free(&["U", "E"], 12);
    let m = MonoidPresentation::new(
        free.generators.clone(),
        vec![
            (free.monomial(&[(0, 6)]), free.monomial(&[])),
            (free.monomial(&[(1, 2)]), free.monomial(&[(1, 1)])),
        ],
        12,
    )
    .unwrap();
    c.bench_function("saturate unit6-idem window 12", |b| {
        b.iter(|| saturate(black_box(&m)).unwrap())
    });
}

fn bench_primes(c: &mut Criterion) {
    let names: Vec<String> = (1..=6).map(|i| format!("T{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let table = saturate(&MonoidPresentation::free(&refs, 3)).unwrap();
    c.bench_function("enumerate_primes free-6 (64 primes)", |b| {
        b.iter(|| enumerate_primes(black_box(&table)).unwrap())
    });
}

fn bench_snf(c: &mut Criterion) {
    let a: IntMatrix = (0..6)
        .map(|i| (0..6).map(|j| BigInt::from(((i * 7 + j * 13) % 19) as i64 - 9)).collect())
        .collect();
    c.bench_function("smith_normal_form 6x6", |b| {
        b.iter(|| smith_normal_form(black_box(&a)))
    });
}

fn bench_hom_counting(c: &mut Criterion) {
    let sum4 = sum4_blueprint();
    c.bench_function("hom_b sum relation n=5 (6^4 maps)", |b| {
        b.iter(|| hom_b(black_box(&sum4), 5).unwrap())
    });
    let det = GluedScheme::affine(AffinePiece::new(det_one_blueprint()).unwrap());
    c.bench_function("q_count determinant-one n=4", |b| {
        b.iter(|| q_count(black_box(&det), 4).unwrap())
    });
}

fn bench_zeta(c: &mut Criterion) {
    let p1 = GluedScheme::projective_line();
    c.bench_function("deitmar_zeta glued line p=3 order 8", |b| {
        b.iter(|| deitmar_zeta(black_box(&p1), 3, 8, ZetaMode::P).unwrap())
    });
}

criterion_group!(
    benches,
    bench_saturation,
    bench_primes,
    bench_snf,
    bench_hom_counting,
    bench_zeta
);
criterion_main!(benches);
