//! Finitely presented commutative pointed monoids.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::primes::PrimeIdeal;
use std::collections::HashSet;

pub const DEFAULT_DEGREE_BOUND: u32 = 16;

/// A commutative monoid with absorbing zero, given by generators and
/// relations between monomials.  Relations may use the absorbing zero on
/// either side (`S*T = 0`).  The `degree_bound` is the saturation window:
/// every congruence question is answered for monomials of total degree up to
/// this bound and declared undecided beyond it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<(Monomial, Monomial)>,
    pub degree_bound: u32,
}

impl MonoidPresentation {
    /// Free pointed monoid on `names`.
    pub fn free(names: &[&str], degree_bound: u32) -> Self {
        MonoidPresentation {
            generators: names.iter().map(|s| s.to_string()).collect(),
            relations: Vec::new(),
            degree_bound,
        }
    }

    pub fn new(
        generators: Vec<String>,
        relations: Vec<(Monomial, Monomial)>,
        degree_bound: u32,
    ) -> Result<Self> {
        let p = MonoidPresentation { generators, relations, degree_bound };
        p.validate()?;
        Ok(p)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Structural checks: distinct generator names, exponent vectors of the
    /// right length, and a window wide enough to hold every relation (plus
    /// degree 2, so that products of two generators are always decidable).
    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for g in &self.generators {
            if g.is_empty() {
                return Err(Error::InvalidPresentation("empty generator name".into()));
            }
            if !seen.insert(g.clone()) {
                return Err(Error::InvalidPresentation(format!("duplicate generator `{}`", g)));
            }
        }
        let k = self.generators.len();
        for (l, r) in &self.relations {
            for side in [l, r] {
                if let Monomial::Term(e) = side {
                    if e.len() != k {
                        return Err(Error::InvalidPresentation(format!(
                            "relation monomial has {} exponents, presentation has {} generators",
                            e.len(),
                            k
                        )));
                    }
                }
            }
            if l.is_zero() && r.is_zero() {
                return Err(Error::InvalidPresentation("relation 0 = 0 is vacuous".into()));
            }
            // `0 = 1` (or `1 = 0`) would present the zero monoid.
            if (l.is_zero() && r.is_one()) || (r.is_zero() && l.is_one()) {
                return Err(Error::ZeroMonoid);
            }
            let need = l.degree().max(r.degree());
            if need > self.degree_bound {
                return Err(Error::BoundTooSmall {
                    bound: self.degree_bound,
                    reason: format!("relation of degree {} does not fit the window", need),
                });
            }
        }
        if self.degree_bound < 2 {
            return Err(Error::BoundTooSmall {
                bound: self.degree_bound,
                reason: "window must cover at least degree 2".into(),
            });
        }
        Ok(())
    }

    /// Parse-free constructor helper for tests: builds a monomial from
    /// `(generator index, exponent)` pairs.
    pub fn monomial(&self, pairs: &[(usize, u32)]) -> Monomial {
        let mut e = vec![0u32; self.generators.len()];
        for &(i, x) in pairs {
            e[i] += x;
        }
        Monomial::Term(e)
    }
}

/// Name used for the formal inverse of a generator in a localization.
pub fn inverse_name(gen: &str) -> String {
    format!("{}^-1", gen)
}

/// Localize a presentation at a prime: adjoin a formal inverse `g^-1` with
/// `g * g^-1 = 1` for every generator *outside* the prime (the face), keeping
/// all original generators and relations.
///
/// Generators indices are preserved; inverses are appended in face order.
pub fn localize(pres: &MonoidPresentation, prime: &PrimeIdeal) -> Result<MonoidPresentation> {
    let k = pres.num_generators();
    for &g in &prime.generator_subset {
        if g >= k {
            return Err(Error::InvalidPresentation(format!(
                "prime references generator index {} out of range",
                g
            )));
        }
    }
    let face: Vec<usize> =
        (0..k).filter(|i| !prime.generator_subset.contains(i)).collect();
    let total = k + face.len();

    let mut generators = pres.generators.clone();
    for &f in &face {
        generators.push(inverse_name(&pres.generators[f]));
    }

    let widen = |m: &Monomial| -> Monomial {
        match m {
            Monomial::Zero => Monomial::Zero,
            Monomial::Term(e) => {
                let mut w = e.clone();
                w.resize(total, 0);
                Monomial::Term(w)
            }
        }
    };

    let mut relations: Vec<(Monomial, Monomial)> =
        pres.relations.iter().map(|(l, r)| (widen(l), widen(r))).collect();
    for (j, &f) in face.iter().enumerate() {
        let mut e = vec![0u32; total];
        e[f] = 1;
        e[k + j] = 1;
        relations.push((Monomial::Term(e), Monomial::Term(vec![0u32; total])));
    }

    MonoidPresentation::new(generators, relations, pres.degree_bound.max(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn rejects_zero_equals_one() {
        let p = MonoidPresentation {
            generators: vec!["T".into()],
            relations: vec![(Monomial::Zero, Monomial::one(1))],
            degree_bound: 8,
        };
        assert_eq!(p.validate(), Err(Error::ZeroMonoid));
    }

    #[test]
    fn rejects_relation_beyond_window() {
        let p = MonoidPresentation {
            generators: vec!["T".into()],
            relations: vec![(Monomial::Term(vec![5]), Monomial::one(1))],
            degree_bound: 4,
        };
        assert!(matches!(p.validate(), Err(Error::BoundTooSmall { .. })));
    }

    #[test]
    fn localize_free_at_one_axis_inverts_the_other() {
        // Free <S,T> at the prime (S): the face is {T}, so T^-1 appears.
        let p = MonoidPresentation::free(&["S", "T"], 8);
        let prime = PrimeIdeal { generator_subset: BTreeSet::from([0]) };
        let loc = localize(&p, &prime).unwrap();
        assert_eq!(loc.generators, vec!["S", "T", "T^-1"]);
        assert_eq!(loc.relations.len(), 1);
        let (l, r) = &loc.relations[0];
        assert_eq!(l, &Monomial::Term(vec![0, 1, 1]));
        assert!(r.is_one());
    }

    #[test]
    fn localize_at_maximal_prime_changes_nothing() {
        let p = MonoidPresentation::free(&["T"], 8);
        let prime = PrimeIdeal { generator_subset: BTreeSet::from([0]) };
        let loc = localize(&p, &prime).unwrap();
        assert_eq!(loc.generators, p.generators);
        assert!(loc.relations.is_empty());
    }
}
