//! Spectra, unit groups, normal forms, and the integer linear algebra under
//! them, checked against closed forms and independent oracles.

mod common;

use std::collections::BTreeSet;

use bluepoint_core::{
    enumerate_primes, hom_count_abelian, hom_monoid, saturate, smith_normal_form, unit_group,
    AbelianGroupStructure, IntMatrix, Monomial, MonoidPresentation, PrimeIdeal,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

#[test]
fn free_monoid_has_power_of_two_spectrum_and_power_counts() {
    for k in 1..=5 {
        let table = saturate(&common::free_monoid(k)).unwrap();
        let primes = enumerate_primes(&table).unwrap();
        assert_eq!(primes.len(), 1usize << k, "prime count for k = {k}");
        for n in 1..=3u64 {
            let homs = hom_monoid(&table, n).unwrap();
            assert_eq!(homs.len() as u64, (n + 1).pow(k as u32), "hom count k={k} n={n}");
        }
    }
}

#[test]
fn unit_groups_at_spectrum_extremes() {
    for k in 1..=4usize {
        let table = saturate(&common::free_monoid(k)).unwrap();
        let maximal = PrimeIdeal { generator_subset: (0..k).collect::<BTreeSet<_>>() };
        let at_max = unit_group(&table, &maximal).unwrap();
        assert_eq!(at_max, AbelianGroupStructure::free(0));
        let empty = PrimeIdeal { generator_subset: BTreeSet::new() };
        let at_empty = unit_group(&table, &empty).unwrap();
        assert_eq!(at_empty, AbelianGroupStructure::free(k));
    }
}

// Independent oracle for invariant factors: d_1 * ... * d_i equals the gcd of
// all i x i minors. Determinants by cofactor expansion in BigInt.
fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigInt::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        let term = entry * determinant(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn index_combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        if n - first < size {
            break;
        }
        for mut rest in index_combinations(n - first - 1, size - 1) {
            for r in &mut rest {
                *r += first + 1;
            }
            let mut combo = vec![first];
            combo.extend(rest);
            out.push(combo);
        }
    }
    out
}

fn gcd_of_minors(a: &IntMatrix, size: usize) -> BigInt {
    let rows = a.len();
    let cols = a[0].len();
    let mut g = BigInt::zero();
    for ri in index_combinations(rows, size) {
        for ci in index_combinations(cols, size) {
            let sub: Vec<Vec<BigInt>> =
                ri.iter().map(|&r| ci.iter().map(|&c| a[r][c].clone()).collect()).collect();
            g = num_integer::Integer::gcd(&g, &determinant(&sub));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn smith_normal_form_against_gcd_of_minors(
        rows in 1usize..=5,
        cols in 1usize..=5,
        entries in prop::collection::vec(-9i64..=9, 25),
    ) {
        let a: IntMatrix = (0..rows)
            .map(|i| (0..cols).map(|j| BigInt::from(entries[i * 5 + j])).collect())
            .collect();
        let snf = smith_normal_form(&a);

        // Transforms are unimodular and actually diagonalize.
        prop_assert!(determinant(&snf.u).abs().is_one());
        prop_assert!(determinant(&snf.v).abs().is_one());
        let d = bluepoint_core::snf::mat_mul(&bluepoint_core::snf::mat_mul(&snf.u, &a), &snf.v);
        for (i, row) in d.iter().enumerate() {
            for (j, val) in row.iter().enumerate() {
                if i == j && i < snf.diag.len() {
                    prop_assert_eq!(val, &snf.diag[i]);
                } else {
                    prop_assert!(val.is_zero(), "off-diagonal entry {} at ({i},{j})", val);
                }
            }
        }

        // Divisibility chain.
        for w in snf.diag.windows(2) {
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
            } else {
                prop_assert!(w[1].is_zero());
            }
        }

        // d_1 * ... * d_i = gcd of i x i minors.
        let mut prod = BigInt::one();
        for (i, di) in snf.diag.iter().enumerate() {
            prod *= di;
            prop_assert_eq!(prod.abs(), gcd_of_minors(&a, i + 1), "minor gcd at size {}", i + 1);
        }
    }
}

// Abelian group hom counts: closed form vs direct solution counting.
fn divisor_chains(max_product: u64) -> Vec<Vec<u64>> {
    fn extend(chain: &mut Vec<u64>, product: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        out.push(chain.clone());
        let start = chain.last().copied().unwrap_or(2);
        for d in start..=max {
            if d % start != 0 && !chain.is_empty() {
                continue;
            }
            if chain.last().map(|&l| d % l == 0).unwrap_or(true) && product * d <= max {
                chain.push(d);
                extend(chain, product * d, max, out);
                chain.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_product, &mut out);
    out
}

#[test]
fn hom_count_closed_form_matches_solution_counting() {
    for chain in divisor_chains(12) {
        for rank in 0..=2usize {
            let g = AbelianGroupStructure { rank, invariant_factors: chain.clone() };
            for n in 1..=8u64 {
                // Each Z_d generator maps to a solution of d*x = 0 mod n;
                // each free generator maps anywhere.
                let mut brute: u64 = 1;
                for &d in &chain {
                    brute *= (0..n).filter(|x| (d * x) % n == 0).count() as u64;
                }
                brute *= n.pow(rank as u32);
                assert_eq!(
                    hom_count_abelian(&g, n).unwrap(),
                    brute,
                    "rank {rank}, factors {chain:?}, n {n}"
                );
            }
        }
    }
}

// Normal forms define a congruence: representatives multiply like their
// classes, and relations stay collapsed under multiplication.
fn congruence_fixtures() -> Vec<MonoidPresentation> {
    vec![
        common::cross_monoid(),
        common::unit3_monoid(),
        common::idem_monoid(),
        MonoidPresentation::new(
            vec!["X".into(), "Y".into()],
            vec![(Monomial::Term(vec![2, 0]), Monomial::Term(vec![0, 3]))],
            8,
        )
        .unwrap(),
    ]
}

proptest! {
    #[test]
    fn normal_form_is_a_congruence(
        which in 0usize..4,
        ea in prop::collection::vec(0u32..=2, 2),
        eb in prop::collection::vec(0u32..=2, 2),
    ) {
        let pres = &congruence_fixtures()[which];
        let table = saturate(pres).unwrap();
        let k = pres.num_generators();
        let pad = |e: &[u32]| Monomial::Term(e.iter().copied().chain(std::iter::repeat(0)).take(k).collect());
        let a = pad(&ea);
        let c = pad(&eb);

        // a ~ nf(a) and c ~ nf(c), so nf(a*c) must equal nf(nf(a)*nf(c)).
        let direct = table.mul_nf(&a, &c).unwrap();
        let via_reps = table
            .mul_nf(&table.normal_form(&a).unwrap(), &table.normal_form(&c).unwrap())
            .unwrap();
        prop_assert_eq!(&direct, &via_reps);

        // Multiplying both sides of a defining relation by any monomial stays
        // in one class.
        for (l, r) in &pres.relations {
            let lm = table.mul_nf(l, &a).unwrap();
            let rm = table.mul_nf(r, &a).unwrap();
            prop_assert_eq!(&lm, &rm, "relation {} = {} broken under *{}",
                l.display(&pres.generators), r.display(&pres.generators), a.display(&pres.generators));
        }
    }
}
