//! Point-count bookkeeping: closed-form homomorphism counts for finitely
//! generated abelian groups, and exact polynomial fitting of count sequences
//! with verification on held-out values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::unit_group::AbelianGroupStructure;

/// `#Hom(Z^rank × Π Z_{d_i}, Z_n) = n^rank · Π gcd(d_i, n)`.
pub fn hom_count_abelian(g: &AbelianGroupStructure, n: u64) -> Result<u64> {
    let mut acc: u128 = 1;
    for _ in 0..g.rank {
        acc = acc.checked_mul(n as u128).ok_or(Error::Overflow("abelian hom count"))?;
    }
    for &d in &g.invariant_factors {
        let f = num_integer::gcd(d, n) as u128;
        acc = acc.checked_mul(f).ok_or(Error::Overflow("abelian hom count"))?;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("abelian hom count"))
}

/// An integer-coefficient polynomial fitted to a count sequence, together
/// with the fit window and the number of held-out values it reproduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountPolynomial {
    /// Ascending powers, trailing zeros trimmed.
    pub coefficients: Vec<i64>,
    /// Inclusive range of `n` used for interpolation.
    pub window: (u64, u64),
    pub verified_extras: usize,
}

impl CountPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, n: u64) -> i128 {
        let mut acc: i128 = 0;
        for &c in self.coefficients.iter().rev() {
            acc = acc * n as i128 + c as i128;
        }
        acc
    }

    pub fn display(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            let body = match (i, mag) {
                (0, m) => format!("{m}"),
                (1, 1) => "n".to_string(),
                (1, m) => format!("{m}*n"),
                (p, 1) => format!("n^{p}"),
                (p, m) => format!("{m}*n^{p}"),
            };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if c < 0 { "-" } else { "+" }, body));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// Why a count sequence failed to be (visibly) polynomial.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FitFailure {
    #[error("bad samples: {0}")]
    BadSamples(String),
    /// A held-out sample disagrees with the interpolant: concrete evidence
    /// that no polynomial of the window's degree matches.
    #[error("sample at n = {n} gives {expected}, interpolant predicts {predicted}")]
    Witness { n: u64, expected: u64, predicted: BigRational },
    #[error("interpolant has non-integer coefficients")]
    NonIntegerCoefficients(Vec<BigRational>),
}

fn rat_u64(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Expand `Π (x - roots[j])` for `j ≠ skip` as ascending coefficients.
fn expanded_product(roots: &[BigRational], skip: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for (j, r) in roots.iter().enumerate() {
        if j == skip {
            continue;
        }
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        poly = next;
    }
    poly
}

fn eval_rat(poly: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in poly.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Interpolate the first `window` samples exactly, then verify the remaining
/// samples against the interpolant. Held-out disagreement is reported before
/// any integrality complaint, so a genuinely non-polynomial sequence yields a
/// concrete witness.
pub fn fit_and_verify(
    samples: &[(u64, u64)],
    window: usize,
) -> std::result::Result<CountPolynomial, FitFailure> {
    if window == 0 || window > samples.len() {
        return Err(FitFailure::BadSamples(format!(
            "window {window} outside 1..={}",
            samples.len()
        )));
    }
    let head = &samples[..window];
    for i in 0..head.len() {
        for j in i + 1..head.len() {
            if head[i].0 == head[j].0 {
                return Err(FitFailure::BadSamples(format!(
                    "duplicate sample point n = {}",
                    head[i].0
                )));
            }
        }
    }
    let xs: Vec<BigRational> = head.iter().map(|&(n, _)| rat_u64(n)).collect();
    let mut poly = vec![BigRational::zero(); window];
    for (i, &(_, c)) in head.iter().enumerate() {
        let basis = expanded_product(&xs, i);
        let denom = eval_rat(&basis, &xs[i]);
        let scale = rat_u64(c) / denom;
        for (k, b) in basis.iter().enumerate() {
            poly[k] += b * &scale;
        }
    }
    let mut extras = 0usize;
    for &(n, expected) in &samples[window..] {
        let predicted = eval_rat(&poly, &rat_u64(n));
        if predicted != rat_u64(expected) {
            return Err(FitFailure::Witness { n, expected, predicted });
        }
        extras += 1;
    }
    if poly.iter().any(|c| !c.is_integer()) {
        return Err(FitFailure::NonIntegerCoefficients(poly));
    }
    let mut coefficients: Vec<i64> = poly
        .iter()
        .map(|c| {
            let z = c.to_integer();
            z.to_i64().ok_or(())
        })
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| FitFailure::BadSamples("coefficient exceeds i64".into()))?;
    while coefficients.len() > 1 && *coefficients.last().unwrap() == 0 {
        coefficients.pop();
    }
    debug_assert!(poly.iter().skip(coefficients.len()).all(|c| c.is_zero()) || !poly.is_empty());
    Ok(CountPolynomial {
        coefficients,
        window: (head.first().unwrap().0, head.last().unwrap().0),
        verified_extras: extras,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_hom_counts_match_the_closed_form() {
        let g = |rank: usize, torsion: &[u64]| AbelianGroupStructure {
            rank,
            invariant_factors: torsion.to_vec(),
        };
        // Z^2 x Z_4 into Z_6: 36 * gcd(4,6).
        assert_eq!(hom_count_abelian(&g(2, &[4]), 6).unwrap(), 72);
        // Z_2 x Z_3 into Z_4.
        assert_eq!(hom_count_abelian(&g(0, &[2, 3]), 4).unwrap(), 2);
        // Free of rank 3.
        assert_eq!(hom_count_abelian(&g(3, &[]), 5).unwrap(), 125);
        assert!(matches!(
            hom_count_abelian(&g(5, &[]), u64::MAX),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn abelian_hom_counts_match_brute_force_on_small_groups() {
        // Brute force: elements of Z^r are impossible to enumerate, so the
        // cross-check runs on pure torsion groups of order <= 12: a hom is a
        // choice of image for each Z_d generator with d * image = 0 mod n.
        let torsion_groups: Vec<Vec<u64>> =
            vec![vec![2], vec![3], vec![4], vec![2, 2], vec![6], vec![2, 4], vec![12], vec![3, 3]];
        for factors in &torsion_groups {
            for n in 1..=8u64 {
                let brute: u64 = factors
                    .iter()
                    .map(|&d| (0..n).filter(|x| (d * x) % n == 0).count() as u64)
                    .product();
                let g = AbelianGroupStructure { rank: 0, invariant_factors: factors.clone() };
                assert_eq!(hom_count_abelian(&g, n).unwrap(), brute, "{factors:?} n={n}");
            }
        }
    }

    #[test]
    fn quadratic_count_sequence_is_recovered() {
        let f = |n: u64| 2 * n * n - n;
        let samples: Vec<(u64, u64)> = (1..=6).map(|n| (n, f(n))).collect();
        let p = fit_and_verify(&samples, 3).unwrap();
        assert_eq!(p.coefficients, vec![0, -1, 2]);
        assert_eq!(p.verified_extras, 3);
        assert_eq!(p.window, (1, 3));
        assert_eq!(p.display(), "2*n^2 - n");
        assert_eq!(p.eval(10), 190);
    }

    #[test]
    fn gcd_sequence_produces_a_witness() {
        let samples: Vec<(u64, u64)> =
            (1..=6).map(|n| (n, num_integer::gcd(3, n))).collect();
        match fit_and_verify(&samples, 5) {
            Err(FitFailure::Witness { n, expected, predicted }) => {
                assert_eq!(n, 6);
                assert_eq!(expected, 3);
                assert_eq!(predicted, rat_u64(21));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn integer_valued_but_non_integer_coefficients_is_reported_after_extras() {
        // Triangle numbers: extras verify (the sequence is polynomial) but
        // the coefficients are halves.
        let samples: Vec<(u64, u64)> = (1..=6).map(|n| (n, n * (n + 1) / 2)).collect();
        match fit_and_verify(&samples, 3) {
            Err(FitFailure::NonIntegerCoefficients(c)) => {
                assert_eq!(c.len(), 3);
                assert!(!c[2].is_integer());
            }
            other => panic!("expected coefficient failure, got {other:?}"),
        }
    }

    #[test]
    fn constant_sequences_trim_to_a_single_coefficient() {
        let samples: Vec<(u64, u64)> = (1..=5).map(|n| (n, 7)).collect();
        let p = fit_and_verify(&samples, 4).unwrap();
        assert_eq!(p.coefficients, vec![7]);
        assert_eq!(p.display(), "7");
        assert!(matches!(fit_and_verify(&samples, 0), Err(FitFailure::BadSamples(_))));
        assert!(matches!(
            fit_and_verify(&[(1, 1), (1, 2)], 2),
            Err(FitFailure::BadSamples(_))
        ));
    }
}
