//! Unit groups of localizations: the group completion of a prime's face.
//!
//! Inverting the face of a prime makes every face monomial a unit, so the
//! unit group of the localization is `Z^(#face)` modulo the lattice of
//! exponent differences of face monomials that the congruence identifies.
//! That lattice is read off the saturation window and crunched with the
//! Smith normal form.

use crate::error::{Error, Result};
use crate::primes::{is_prime_subset, PrimeIdeal};
use crate::saturate::SaturationTable;
use crate::snf::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// A finitely generated abelian group `Z^rank x Π Z_{d_i}` with each
/// invariant factor `d_i > 1` and `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupStructure {
    pub rank: usize,
    pub invariant_factors: Vec<u64>,
}

impl AbelianGroupStructure {
    pub fn free(rank: usize) -> Self {
        AbelianGroupStructure { rank, invariant_factors: Vec::new() }
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn display(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".into() } else { format!("Z^{}", self.rank) });
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{}", d));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" x ")
        }
    }
}

/// Unit group of the localization of the presented monoid at `prime`.
///
/// Rows of the relation matrix are exponent differences (restricted to face
/// coordinates) between members of one congruence class that are both
/// supported on the face.  `prime` must actually be prime; the zero class can
/// then never meet the face.
pub fn unit_group(table: &SaturationTable, prime: &PrimeIdeal) -> Result<AbelianGroupStructure> {
    if !is_prime_subset(table, &prime.generator_subset) {
        return Err(Error::InvalidPresentation(format!(
            "subset {:?} is not prime; unit groups are defined at primes",
            prime.generator_subset
        )));
    }
    let k = table.pres.num_generators();
    let mask = prime.mask();
    let face: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) == 0).collect();

    // Group window monomials supported on the face by congruence class.
    let mut by_class: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
    for (i, r) in table.roots() {
        let m = table.monomial_at(i);
        if m.is_zero() || (m.support_mask() & mask) != 0 {
            continue;
        }
        let e = m.exponents().expect("non-zero window monomial");
        by_class.entry(r).or_default().push(face.iter().map(|&f| e[f]).collect());
    }

    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for members in by_class.values() {
        let base = &members[0];
        for other in &members[1..] {
            let row: Vec<BigInt> = base
                .iter()
                .zip(other)
                .map(|(&a, &b)| BigInt::from(b as i64) - BigInt::from(a as i64))
                .collect();
            if row.iter().any(|x| !x.is_zero()) && !rows.contains(&row) {
                rows.push(row);
            }
        }
    }

    if rows.is_empty() {
        return Ok(AbelianGroupStructure::free(face.len()));
    }
    let matrix: IntMatrix = rows;
    let s = smith_normal_form(&matrix);
    let rank = face.len() - s.rank();
    let invariant_factors: Vec<u64> = s
        .diag
        .iter()
        .filter(|d| **d > BigInt::one())
        .map(|d| d.to_u64().ok_or(Error::Overflow("invariant factor")))
        .collect::<Result<_>>()?;
    Ok(AbelianGroupStructure { rank, invariant_factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;
    use crate::presentation::MonoidPresentation;
    use crate::saturate::saturate;
    use std::collections::BTreeSet;

    fn prime(of: &[usize]) -> PrimeIdeal {
        PrimeIdeal { generator_subset: BTreeSet::from_iter(of.iter().copied()) }
    }

    #[test]
    fn free_monoid_unit_groups() {
        let t = saturate(&MonoidPresentation::free(&["T"], 8)).unwrap();
        // At the empty prime everything is inverted: Z.
        assert_eq!(unit_group(&t, &prime(&[])).unwrap(), AbelianGroupStructure::free(1));
        // At (T) the face is empty: trivial group.
        assert_eq!(unit_group(&t, &prime(&[0])).unwrap(), AbelianGroupStructure::free(0));
    }

    #[test]
    fn cyclic_torsion_appears_as_invariant_factor() {
        // <U> with U^3 = 1: the unit group is Z/3.
        let p = MonoidPresentation {
            generators: vec!["U".into()],
            relations: vec![(Monomial::Term(vec![3]), Monomial::one(1))],
            degree_bound: 12,
        };
        let t = saturate(&p).unwrap();
        let g = unit_group(&t, &prime(&[])).unwrap();
        assert_eq!(g, AbelianGroupStructure { rank: 0, invariant_factors: vec![3] });
        assert!(!g.is_torsion_free());
    }

    #[test]
    fn non_prime_subset_is_refused() {
        // In <U> with U*U = 1 the subset {U} is not prime.
        let p = MonoidPresentation {
            generators: vec!["U".into()],
            relations: vec![(Monomial::Term(vec![2]), Monomial::one(1))],
            degree_bound: 8,
        };
        let t = saturate(&p).unwrap();
        assert!(unit_group(&t, &prime(&[0])).is_err());
    }
}
