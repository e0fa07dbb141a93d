//! Power-series arithmetic laws, polynomial fitting, and the zeta series of
//! the built-in schemes against closed-form expansions.

use bluepoint_core::zeta::rational_guess;
use bluepoint_core::{
    deitmar_zeta, fit_and_verify, GluedScheme, TruncatedPowerSeries, ZetaMode,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

proptest! {
    #[test]
    fn exp_then_log_recovers_the_series(tail in proptest::collection::vec(-6i64..=6, 3..9)) {
        let mut coeffs = vec![0i64];
        coeffs.extend(&tail);
        let s = TruncatedPowerSeries::from_integers(&coeffs);
        let e = s.exp().unwrap();
        prop_assert_eq!(&e.coeffs[0], &BigRational::one());
        prop_assert_eq!(e.log().unwrap(), s);
    }

    #[test]
    fn log_then_exp_recovers_the_series(tail in proptest::collection::vec(-6i64..=6, 3..9)) {
        let mut coeffs = vec![1i64];
        coeffs.extend(&tail);
        let s = TruncatedPowerSeries::from_integers(&coeffs);
        let l = s.log().unwrap();
        prop_assert!(l.coeffs[0] == rat(0));
        prop_assert_eq!(l.exp().unwrap(), s);
    }

    #[test]
    fn interpolation_recovers_integer_polynomials(
        coeffs in proptest::collection::vec(0i64..=5, 1..5),
        lead in 1i64..=4,
    ) {
        let mut poly = coeffs.clone();
        poly.push(lead); // nonzero leading coefficient fixes the degree
        let eval = |n: u64| -> u64 {
            let mut acc: i64 = 0;
            for c in poly.iter().rev() {
                acc = acc * n as i64 + c;
            }
            acc as u64
        };
        let window = poly.len();
        let samples: Vec<(u64, u64)> =
            (1..=(window as u64 + 3)).map(|n| (n, eval(n))).collect();
        let fitted = fit_and_verify(&samples, window).unwrap();
        prop_assert_eq!(fitted.coefficients, poly);
        prop_assert_eq!(fitted.verified_extras, 3);
    }
}

/// Coefficients of `1 / (1 - pT)` up to `T^order`.
fn geometric(p: u64, order: usize) -> Vec<BigRational> {
    (0..=order).map(|k| rat((p as i64).pow(k as u32))).collect()
}

#[test]
fn affine_line_zeta_is_the_geometric_series() {
    for p in [2u64, 3, 5] {
        let z = deitmar_zeta(&GluedScheme::affine_line(), p, 8, ZetaMode::P).unwrap();
        assert_eq!(z.coeffs, geometric(p, 8), "zeta(A^1) = 1/(1 - {p}T)");

        let guess = rational_guess(&z).expect("a rational form should be found");
        assert!(guess.matches(&z));
        assert_eq!(guess.numerator, vec![rat(1)]);
        assert_eq!(guess.denominator, vec![rat(1), rat(-(p as i64))]);
    }
}

#[test]
fn multiplicative_group_zeta_matches_the_closed_form() {
    // (1 - T)/(1 - pT): coefficient k >= 1 is p^k - p^(k-1).
    for p in [2u64, 3, 5] {
        let z = deitmar_zeta(&GluedScheme::multiplicative_group(), p, 8, ZetaMode::P).unwrap();
        let g = geometric(p, 8);
        let expected: Vec<BigRational> = (0..=8)
            .map(|k| if k == 0 { rat(1) } else { &g[k] - &g[k - 1] })
            .collect();
        assert_eq!(z.coeffs, expected, "zeta(G_m) = (1 - T)/(1 - {p}T)");
    }
}

#[test]
fn projective_line_zeta_matches_the_closed_form() {
    // 1/((1 - T)(1 - pT)): coefficient k is 1 + p + ... + p^k.
    for p in [2u64, 3, 5] {
        let z = deitmar_zeta(&GluedScheme::projective_line(), p, 8, ZetaMode::P).unwrap();
        let g = geometric(p, 8);
        let expected: Vec<BigRational> = (0..=8)
            .map(|k| {
                let mut acc = rat(0);
                for c in &g[..=k] {
                    acc += c;
                }
                acc
            })
            .collect();
        assert_eq!(z.coeffs, expected, "zeta(P^1) = 1/((1 - T)(1 - {p}T))");

        let guess = rational_guess(&z).expect("a rational form should be found");
        assert!(guess.matches(&z));
        assert_eq!(guess.denominator.len(), 3, "denominator (1 - T)(1 - pT)");
    }
}

#[test]
fn q_mode_agrees_with_p_mode_when_counts_coincide() {
    // On A^1 every monoid morphism is compatible, so Q(n) = n + 1 = P(n) and
    // the experimental Q-mode series equals the unit-count series.
    for p in [2u64, 3] {
        let a1 = GluedScheme::affine_line();
        let zp = deitmar_zeta(&a1, p, 6, ZetaMode::P).unwrap();
        let zq = deitmar_zeta(&a1, p, 6, ZetaMode::Q).unwrap();
        assert_eq!(zp, zq);
    }
}
