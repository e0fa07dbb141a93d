//! Glued-scheme point sets, the two counting functions, and the prime-field
//! transfer maps, cross-checked against closed forms and brute force.

mod common;

use bluepoint_core::blueprint::{Blueprint, CoefficientRing};
use bluepoint_core::scheme::{p_polynomial, psi1_injectivity, psi2_point_sets};
use bluepoint_core::{
    check_q_le_p, is_torsion_free, point_count_polynomials, points, q_count, torsion_free_points,
    Error, F1SchemeWithRelations, FitFailure, GluedScheme,
};

use common::{
    brute_force_count, cross_monoid, example_schemes, free_monoid, sl2_blueprint, sum4_blueprint,
    twot1_blueprint, unit3_monoid,
};

fn binomial(n: usize, k: usize) -> i64 {
    let mut out: i64 = 1;
    for i in 0..k {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

#[test]
fn projective_line_has_three_points_with_the_expected_unit_ranks() {
    let p1 = GluedScheme::projective_line();
    let pts = points(&p1).unwrap();
    assert_eq!(pts.len(), 3);

    let mut ranks: Vec<usize> = pts.iter().map(|p| p.unit_structure.rank).collect();
    ranks.sort_unstable();
    assert_eq!(ranks, vec![0, 0, 1]);
    assert!(pts.iter().all(|p| p.unit_structure.invariant_factors.is_empty()));

    // The generic point is the one shared across the two charts; the closed
    // points live in a single chart each.
    for p in &pts {
        if p.unit_structure.rank == 1 {
            assert_eq!(p.identified_with.len(), 2);
            let charts: Vec<usize> = p.identified_with.iter().map(|(c, _)| *c).collect();
            assert_eq!(charts, vec![0, 1]);
            assert!(p.identified_with.iter().all(|(_, pr)| pr.generator_subset.is_empty()));
        } else {
            assert_eq!(p.identified_with.len(), 1);
        }
    }
}

#[test]
fn projective_line_counts_match_the_field_points() {
    let p1 = GluedScheme::projective_line();

    // Against actual prime fields: #P^1(F_q) = q + 1, sampled at n = q - 1.
    let ns: Vec<u64> = [2u64, 3, 5, 7, 11].iter().map(|q| q - 1).collect();
    let (samples, poly) = p_polynomial(&p1, &ns).unwrap();
    for (&q, &(n, p)) in [2u64, 3, 5, 7, 11].iter().zip(&samples) {
        assert_eq!(n, q - 1);
        assert_eq!(p, q + 1, "P^1 must have q + 1 points over F_{q}");
    }
    assert_eq!(poly.coefficients, vec![2, 1], "P(n) = n + 2");

    // The finer count agrees point by point: n at the generic point, 1 at
    // each closed point.
    for n in 1..=6u64 {
        let report = q_count(&p1, n).unwrap();
        let mut per = report.per_point.clone();
        per.sort_unstable();
        assert_eq!(per, vec![1, 1, n]);
        assert_eq!(report.total, n + 2);
    }
}

#[test]
fn free_scheme_counts_fit_binomial_polynomials() {
    for k in 1..=4usize {
        let bp = Blueprint::pure(free_monoid(k), CoefficientRing::Nat).unwrap();
        let s = GluedScheme::affine(bluepoint_core::AffinePiece::new(bp).unwrap());
        let ns: Vec<u64> = (1..=(k as u64 + 2)).collect();
        let (_, poly) = p_polynomial(&s, &ns).unwrap();
        let expected: Vec<i64> = (0..=k).map(|j| binomial(k, j)).collect();
        assert_eq!(poly.coefficients, expected, "P(n) = (n+1)^{k} has binomial coefficients");
    }
}

#[test]
fn q_stays_within_p_on_every_example() {
    let ns: Vec<u64> = (1..=8).collect();
    for (label, s) in example_schemes() {
        let rows = check_q_le_p(&s, &ns).unwrap();
        assert_eq!(rows.len(), ns.len());
        for row in &rows {
            assert!(row.holds(), "Q <= P fails on {label} at n = {}: {row:?}", row.n);
            for (pt, q, p) in &row.per_point {
                assert!(q <= p, "point {pt} of {label} has Q = {q} > P = {p} at n = {}", row.n);
            }
            assert!(row.total_q <= row.total_p);
        }
    }
}

#[test]
fn affine_q_totals_match_brute_force() {
    for (label, s) in example_schemes() {
        if s.charts.len() != 1 {
            continue; // glued examples share points across charts
        }
        let bp = &s.charts[0].blueprint;
        for n in 1..=4u64 {
            let report = q_count(&s, n).unwrap();
            assert_eq!(
                report.total,
                brute_force_count(bp, n),
                "bucketed count disagrees with exhaustive enumeration on {label} at n = {n}"
            );
        }
    }
}

#[test]
fn torsion_refusal_names_the_witness() {
    // The torsion-free examples sample cleanly and fit polynomials per point.
    for (label, s) in example_schemes() {
        let expect_free = label != "unit3";
        assert_eq!(is_torsion_free(&s).unwrap(), expect_free, "torsion flag wrong on {label}");
    }

    let s = GluedScheme::affine(
        bluepoint_core::AffinePiece::new(
            Blueprint::pure(unit3_monoid(), CoefficientRing::Nat).unwrap(),
        )
        .unwrap(),
    );
    let flags = torsion_free_points(&s).unwrap();
    assert_eq!(flags.len(), 1, "a presentation whose generator is invertible has one prime");
    assert!(!flags[0].1);

    match p_polynomial(&s, &[1, 2, 3, 4]) {
        Err(Error::NotTorsionFree { point, factors }) => {
            assert_eq!(point, flags[0].0);
            assert_eq!(factors, vec![3]);
        }
        other => panic!("expected a torsion refusal, got {other:?}"),
    }

    // Per point the count gcd(3, n) is provably non-polynomial: the fit over
    // the window must be contradicted by a held-out sample.
    let per_point = point_count_polynomials(&s, &[1, 2, 3, 4, 5, 6]).unwrap();
    assert_eq!(per_point.len(), 1);
    match &per_point[0].1 {
        Err(FitFailure::Witness { .. }) | Err(FitFailure::NonIntegerCoefficients(_)) => {}
        other => panic!("expected a counterexample to a polynomial fit, got {other:?}"),
    }
}

#[test]
fn per_point_polynomials_of_the_projective_line() {
    let p1 = GluedScheme::projective_line();
    let fits = point_count_polynomials(&p1, &[1, 2, 3, 4]).unwrap();
    assert_eq!(fits.len(), 3);
    let pts = points(&p1).unwrap();
    for ((_, fit), pt) in fits.iter().zip(&pts) {
        let poly = fit.as_ref().unwrap();
        if pt.unit_structure.rank == 1 {
            assert_eq!(poly.coefficients, vec![0, 1], "generic point counts n");
        } else {
            assert_eq!(poly.coefficients, vec![1], "closed points count 1");
        }
    }
}

#[test]
fn prime_field_transfers_on_identity_comparisons() {
    let fixtures: Vec<(&str, Blueprint)> = vec![
        ("free1", Blueprint::pure(free_monoid(1), CoefficientRing::Nat).unwrap()),
        ("cross", Blueprint::pure(cross_monoid(), CoefficientRing::Nat).unwrap()),
        ("unit3", Blueprint::pure(unit3_monoid(), CoefficientRing::Nat).unwrap()),
        ("sum4", sum4_blueprint()),
        ("sl2", sl2_blueprint()),
        ("twot1", twot1_blueprint()),
    ];
    for (label, bp) in &fixtures {
        let f = F1SchemeWithRelations::identity(bp).unwrap();
        for q in [2u64, 3, 5, 7] {
            let n = q - 1;
            let r1 = psi1_injectivity(&f, q, 0).unwrap();
            assert!(r1.injective, "chart points must inject into R' points ({label}, q = {q})");

            let r2 = psi2_point_sets(&f, q, 0).unwrap();
            assert!(
                r2.bijective,
                "monoidal points must map one-to-one onto their images ({label}, q = {q})"
            );
            assert_eq!(r2.left_count, r2.right_count);

            let expected_left: usize = match *label {
                "free1" => q as usize,
                "cross" => (2 * n + 1) as usize, // one coordinate must vanish
                "unit3" => gcd(3, n) as usize,
                "sum4" => (2 * n * n + 3 * n + 1) as usize,
                "sl2" => (n * (2 * n + 1)) as usize,
                "twot1" => 0, // 2T = 1 has no solution with a single monomial term
                _ => unreachable!(),
            };
            assert_eq!(r2.left_count, expected_left, "{label} at q = {q}");

            // Ring-side counts over F_q where a clean closed form exists.
            match *label {
                "sl2" => assert_eq!(
                    r1.source_count,
                    (q * (q * q - 1)) as usize,
                    "special linear group order over F_{q}"
                ),
                "cross" => assert_eq!(r1.source_count, (2 * q - 1) as usize),
                "twot1" => {
                    assert_eq!(r1.source_count, if q == 2 { 0 } else { 1 });
                }
                _ => {}
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}
