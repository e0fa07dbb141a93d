//! Blueprint-compatible morphism counting against brute-force group-ring
//! evaluation, plus the structural properties of the bucketing.

mod common;

use bluepoint_core::blueprint::{is_compatible, Blueprint, PolyRelation, PolySum};
use bluepoint_core::{hom_b, hom_monoid, saturate, F1nElem, Monomial, MonoidHom};
use proptest::prelude::*;

use common::brute_force_count;

#[test]
fn pure_blueprints_filter_nothing() {
    let fixtures = vec![
        common::free_monoid(2),
        common::cross_monoid(),
        common::unit3_monoid(),
        common::idem_monoid(),
    ];
    for pres in fixtures {
        let bp = Blueprint::pure(pres.clone(), bluepoint_core::CoefficientRing::Int).unwrap();
        let table = saturate(&pres).unwrap();
        for n in 1..=4u64 {
            assert_eq!(
                hom_b(&bp, n).unwrap().total(),
                hom_monoid(&table, n).unwrap().len() as u64,
                "{:?} at n={n}",
                pres.generators
            );
        }
    }
}

#[test]
fn buckets_partition_the_compatible_set() {
    for bp in [common::sum4_blueprint(), common::sl2_blueprint(), common::twot1_blueprint()] {
        for n in 1..=4u64 {
            let buckets = hom_b(&bp, n).unwrap();
            let bucket_sum: u64 = buckets.counts().iter().map(|(_, c)| c).sum();
            assert_eq!(buckets.total(), bucket_sum);
            assert_eq!(buckets.total(), brute_force_count(&bp, n), "n={n}");
        }
    }
}

#[test]
fn determinant_relation_counts_follow_the_closed_form() {
    let bp = common::sl2_blueprint();
    for n in 1..=6u64 {
        let total = hom_b(&bp, n).unwrap().total();
        assert_eq!(total, n * (2 * n + 1), "n={n}");
        assert_eq!(total, brute_force_count(&bp, n), "brute force at n={n}");
    }
}

#[test]
fn sum_relation_bucket_spectrum() {
    let bp = common::sum4_blueprint();
    for n in 1..=6u64 {
        let buckets = hom_b(&bp, n).unwrap();
        let mut nonzero: Vec<u64> =
            buckets.counts().iter().map(|&(_, c)| c).filter(|&c| c > 0).collect();
        nonzero.sort_unstable();
        let mut expected = vec![1, n, n, n, n, 2 * n * n - n];
        expected.sort_unstable();
        assert_eq!(nonzero, expected, "n={n}");
    }
}

fn permute_monomial(m: &Monomial, perm: &[usize]) -> Monomial {
    match m {
        Monomial::Zero => Monomial::Zero,
        Monomial::Term(e) => {
            let mut out = vec![0u32; e.len()];
            for (i, &x) in e.iter().enumerate() {
                out[perm[i]] = x;
            }
            Monomial::Term(out)
        }
    }
}

fn permute_blueprint(bp: &Blueprint, perm: &[usize]) -> Blueprint {
    let mut generators = vec![String::new(); perm.len()];
    for (i, g) in bp.monoid.generators.iter().enumerate() {
        generators[perm[i]] = g.clone();
    }
    let relations = bp
        .monoid
        .relations
        .iter()
        .map(|(l, r)| (permute_monomial(l, perm), permute_monomial(r, perm)))
        .collect();
    let monoid = bluepoint_core::MonoidPresentation::new(
        generators,
        relations,
        bp.monoid.degree_bound,
    )
    .unwrap();
    let poly = bp
        .relations
        .iter()
        .map(|rel| PolyRelation {
            lhs: PolySum::from_pairs(
                &rel.lhs
                    .terms
                    .iter()
                    .map(|t| (t.coefficient, permute_monomial(&t.monomial, perm)))
                    .collect::<Vec<_>>(),
            ),
            rhs: PolySum::from_pairs(
                &rel.rhs
                    .terms
                    .iter()
                    .map(|t| (t.coefficient, permute_monomial(&t.monomial, perm)))
                    .collect::<Vec<_>>(),
            ),
        })
        .collect();
    Blueprint::new(monoid, bp.coefficient_ring, poly).unwrap()
}

proptest! {
    // Compatibility only sees the congruence, never the labels: permuting
    // generators and the assignment together changes nothing.
    #[test]
    fn compatibility_is_stable_under_renaming(
        seed in 0usize..24,
        raw in prop::collection::vec(0u64..=4, 4),
        n in 1u64..=4,
        which in 0usize..2,
    ) {
        let bp = if which == 0 { common::sum4_blueprint() } else { common::sl2_blueprint() };

        // The seed picks one of the 24 permutations of 4 indices.
        let mut pool: Vec<usize> = (0..4).collect();
        let mut perm = Vec::with_capacity(4);
        let mut s = seed;
        for left in (1..=4).rev() {
            perm.push(pool.remove(s % left));
            s /= left;
        }

        let images: Vec<F1nElem> =
            raw.iter().map(|&v| if v == 0 { None } else { Some((v - 1) % n) }).collect();
        let hom = MonoidHom { n, images: images.clone() };

        let mut permuted_images = vec![None; 4];
        for (i, img) in images.iter().enumerate() {
            permuted_images[perm[i]] = *img;
        }
        let permuted_hom = MonoidHom { n, images: permuted_images };
        let permuted_bp = permute_blueprint(&bp, &perm);

        prop_assert_eq!(
            is_compatible(&bp, &hom).unwrap(),
            is_compatible(&permuted_bp, &permuted_hom).unwrap()
        );
    }
}
