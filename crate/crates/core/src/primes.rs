//! Prime ideals of a presented pointed monoid, as canonical generator subsets.
//!
//! An ideal here always contains the absorbing zero.  A subset `S` of
//! generators is prime when the monomials supported on the complementary face
//! stay outside the ideal generated by `S` (and away from the zero class) —
//! checked for every face monomial in the saturation window.  A presentation
//! with zero divisors therefore has no "empty" prime: if `S*T = 0`, some face
//! product of the empty subset's face lands on zero, exactly as it should.

use crate::error::{Error, Result};
use crate::saturate::SaturationTable;
use std::collections::BTreeSet;

/// A prime ideal, stored as the canonical set of generator indices it
/// contains: exactly those generators whose class lies in the ideal the
/// subset generates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeIdeal {
    pub generator_subset: BTreeSet<usize>,
}

impl PrimeIdeal {
    pub fn display(&self, names: &[String]) -> String {
        if self.generator_subset.is_empty() {
            "()".to_string()
        } else {
            let parts: Vec<&str> =
                self.generator_subset.iter().map(|&i| names[i].as_str()).collect();
            format!("({})", parts.join(","))
        }
    }

    pub fn mask(&self) -> u64 {
        self.generator_subset.iter().fold(0u64, |m, &i| m | (1 << i))
    }

    pub fn is_subset_of(&self, other: &PrimeIdeal) -> bool {
        self.generator_subset.is_subset(&other.generator_subset)
    }
}

/// Is the class of root `r` contained in the ideal generated by the subset
/// with mask `mask`?  True when some member of the class is divisible by a
/// subset generator, or when the class is the zero class.
fn root_in_ideal(table: &SaturationTable, r: usize, mask: u64) -> bool {
    r == table.zero_root() || (table.class_support_of_root(r) & mask) != 0
}

/// Primality test for a generator subset: every window monomial supported on
/// the complementary face (including the empty product `1`) must avoid the
/// generated ideal.
pub fn is_prime_subset(table: &SaturationTable, subset: &BTreeSet<usize>) -> bool {
    let mask = subset.iter().fold(0u64, |m, &i| m | (1 << i));
    for (i, r) in table.roots() {
        let m = table.monomial_at(i);
        if m.is_zero() || (m.support_mask() & mask) != 0 {
            continue; // not a face monomial
        }
        if root_in_ideal(table, r, mask) {
            return false;
        }
    }
    true
}

/// Canonical form of a subset: all generators whose class lies in the ideal
/// the subset generates.
pub fn canonical_subset(table: &SaturationTable, subset: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mask = subset.iter().fold(0u64, |m, &i| m | (1 << i));
    let k = table.pres.num_generators();
    (0..k)
        .filter(|&g| {
            let gm = crate::monomial::Monomial::generator(k, g);
            let r = table.class_id(&gm).expect("generator fits any valid window");
            root_in_ideal(table, r, mask)
        })
        .collect()
}

/// All primes of the presented monoid, canonical and deduplicated, sorted by
/// (cardinality, lexicographic subset).
pub fn enumerate_primes(table: &SaturationTable) -> Result<Vec<PrimeIdeal>> {
    let k = table.pres.num_generators();
    if k > 20 {
        return Err(Error::CapExceeded { what: "generator count", value: k as u64, cap: 20 });
    }
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for bits in 0u64..(1u64 << k) {
        let subset: BTreeSet<usize> = (0..k).filter(|&i| bits & (1 << i) != 0).collect();
        if !is_prime_subset(table, &subset) {
            continue;
        }
        seen.insert(canonical_subset(table, &subset));
    }
    let mut out: Vec<PrimeIdeal> =
        seen.into_iter().map(|generator_subset| PrimeIdeal { generator_subset }).collect();
    out.sort_by_key(|p| (p.generator_subset.len(), p.generator_subset.clone()));
    Ok(out)
}

/// Membership of a class in the ideal generated by explicit monomials
/// (within the window): some member of the class must be divisible by one of
/// the ideal generators.
pub fn class_in_monomial_ideal(
    table: &SaturationTable,
    class_root: usize,
    ideal_gens: &[crate::monomial::Monomial],
) -> bool {
    if class_root == table.zero_root() {
        return true;
    }
    for (i, r) in table.roots() {
        if r != class_root {
            continue;
        }
        let m = table.monomial_at(i);
        if ideal_gens.iter().any(|g| g.divides(m)) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::presentation::MonoidPresentation;
    use crate::saturate::saturate;

    #[test]
    fn free_monoid_has_all_subsets_prime() {
        let t = saturate(&MonoidPresentation::free(&["T"], 8)).unwrap();
        let primes = enumerate_primes(&t).unwrap();
        assert_eq!(primes.len(), 2);
        assert!(primes[0].generator_subset.is_empty());
        assert_eq!(primes[1].generator_subset, BTreeSet::from([0]));
    }

    #[test]
    fn zero_divisors_kill_the_empty_prime() {
        // <S,T> with S*T = 0: the two axes and the origin, but no generic point.
        let p = MonoidPresentation {
            generators: vec!["S".into(), "T".into()],
            relations: vec![(Monomial::Term(vec![1, 1]), Monomial::Zero)],
            degree_bound: 6,
        };
        let t = saturate(&p).unwrap();
        let primes = enumerate_primes(&t).unwrap();
        let subsets: Vec<Vec<usize>> =
            primes.iter().map(|p| p.generator_subset.iter().copied().collect()).collect();
        assert_eq!(subsets, vec![vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn invertible_generator_excludes_the_maximal_prime() {
        // <U> with U*U = 1: U is a unit, so (U) contains 1 and is not prime.
        let p = MonoidPresentation {
            generators: vec!["U".into()],
            relations: vec![(Monomial::Term(vec![2]), Monomial::one(1))],
            degree_bound: 8,
        };
        let t = saturate(&p).unwrap();
        let primes = enumerate_primes(&t).unwrap();
        assert_eq!(primes.len(), 1);
        assert!(primes[0].generator_subset.is_empty());
    }

    #[test]
    fn canonicalization_pulls_in_congruent_generators() {
        // A = B*C makes A land in the ideal generated by B.
        let p = MonoidPresentation {
            generators: vec!["A".into(), "B".into(), "C".into()],
            relations: vec![(
                Monomial::Term(vec![1, 0, 0]),
                Monomial::Term(vec![0, 1, 1]),
            )],
            degree_bound: 6,
        };
        let t = saturate(&p).unwrap();
        let canon = canonical_subset(&t, &BTreeSet::from([1]));
        assert_eq!(canon, BTreeSet::from([0, 1]));
    }
}
