//! Truncated zeta series of a glued scheme:
//! `Z(p, T) = exp(Σ_{m ≥ 1} T^m/m · N_m)`, with `N_m` the point count over
//! `F1^(p^m - 1)`.
//!
//! In the default mode `N_m` comes from the unit-group count `P` and the
//! series is guaranteed integral for torsion-free schemes. The alternative
//! mode uses blueprint `Q`-counts; nothing guarantees integrality there, so
//! callers must label its output as experimental.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::counting::hom_count_abelian;
use crate::error::{Error, Result};
use crate::scheme::counts::q_count;
use crate::scheme::points::{point_label, points};
use crate::scheme::psi::is_prime_u64;
use crate::scheme::GluedScheme;
use crate::series::{pade, PadeApproximant, TruncatedPowerSeries};

/// Which count feeds the exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaMode {
    /// Unit-group counts (`P`); integral for torsion-free schemes.
    P,
    /// Blueprint-compatible morphism counts (`Q`); experimental.
    Q,
}

/// The zeta series truncated at `T^order`. `P`-mode refuses torsion up front
/// and asserts integrality of the result; the exp/log round trip is checked
/// exactly before returning.
pub fn deitmar_zeta(
    s: &GluedScheme,
    p: u64,
    order: usize,
    mode: ZetaMode,
) -> Result<TruncatedPowerSeries> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidPresentation(format!("{p} is not prime")));
    }
    let pts = points(s)?;
    if mode == ZetaMode::P {
        for pt in &pts {
            if !pt.unit_structure.is_torsion_free() {
                return Err(Error::NotTorsionFree {
                    point: point_label(s, pt),
                    factors: pt.unit_structure.invariant_factors.clone(),
                });
            }
        }
    }
    let mut log_series = TruncatedPowerSeries::zero(order + 1);
    for m in 1..=order {
        let field_size = p
            .checked_pow(m as u32)
            .ok_or(Error::Overflow("field size p^m"))?;
        let n = field_size - 1;
        let count = match mode {
            ZetaMode::P => {
                let mut total: u64 = 0;
                for pt in &pts {
                    let c = hom_count_abelian(&pt.unit_structure, n)?;
                    total = total.checked_add(c).ok_or(Error::Overflow("P count"))?;
                }
                total
            }
            ZetaMode::Q => q_count(s, n)?.total,
        };
        log_series.coeffs[m] =
            BigRational::new(BigInt::from(count), BigInt::from(m as u64));
    }
    let z = log_series.exp()?;
    if mode == ZetaMode::P && !z.is_integral() {
        return Err(Error::InvalidPresentation(
            "zeta series of a torsion-free scheme came out non-integral; \
             this indicates a count error"
                .into(),
        ));
    }
    if z.log()? != log_series {
        return Err(Error::InvalidPresentation(
            "exp/log round trip failed on the zeta series".into(),
        ));
    }
    Ok(z)
}

/// Smallest-degree exact rational-function match for a truncated series, if
/// any. Agreement holds only through the truncation order, so any reported
/// match is a conjecture about the full series.
pub fn rational_guess(series: &TruncatedPowerSeries) -> Option<PadeApproximant> {
    if series.is_empty() {
        return None;
    }
    for total in 0..series.len() {
        for den in 0..=total {
            let num = total - den;
            if num + den + 1 > series.len() {
                continue;
            }
            if let Some(p) = pade(series, num, den) {
                return Some(p);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ints(s: &TruncatedPowerSeries) -> Vec<i64> {
        use num_traits::ToPrimitive;
        s.to_integers()
            .expect("integral series")
            .iter()
            .map(|b| b.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn affine_line_zeta_is_one_over_one_minus_pt() {
        let z = deitmar_zeta(&GluedScheme::affine_line(), 2, 5, ZetaMode::P).unwrap();
        assert_eq!(ints(&z), vec![1, 2, 4, 8, 16, 32]);
        let guess = rational_guess(&z).unwrap();
        assert_eq!(guess.denominator.len(), 2);
        assert!(guess.denominator[0].is_one());
    }

    #[test]
    fn multiplicative_group_zeta() {
        // N_m = p^m - 1 gives (1 - T) / (1 - pT).
        let z = deitmar_zeta(&GluedScheme::multiplicative_group(), 3, 4, ZetaMode::P).unwrap();
        assert_eq!(ints(&z), vec![1, 2, 6, 18, 54]);
    }

    #[test]
    fn projective_line_zeta() {
        // N_m = p^m + 1 gives 1 / ((1 - T)(1 - pT)).
        let z = deitmar_zeta(&GluedScheme::projective_line(), 2, 4, ZetaMode::P).unwrap();
        assert_eq!(ints(&z), vec![1, 3, 7, 15, 31]);
    }

    #[test]
    fn torsion_is_refused_in_p_mode() {
        use crate::monomial::Monomial;
        use crate::presentation::MonoidPresentation;
        use crate::scheme::AffinePiece;
        let m = MonoidPresentation::new(
            vec!["U".into()],
            vec![(Monomial::Term(vec![3]), Monomial::one(1))],
            12,
        )
        .unwrap();
        let s = GluedScheme::affine(AffinePiece::monoidal(m).unwrap());
        assert!(matches!(
            deitmar_zeta(&s, 2, 4, ZetaMode::P),
            Err(Error::NotTorsionFree { .. })
        ));
    }

    #[test]
    fn q_mode_agrees_with_p_mode_without_relations() {
        for p in [2u64, 3] {
            let zp = deitmar_zeta(&GluedScheme::projective_line(), p, 4, ZetaMode::P).unwrap();
            let zq = deitmar_zeta(&GluedScheme::projective_line(), p, 4, ZetaMode::Q).unwrap();
            assert_eq!(zp, zq);
        }
    }

    #[test]
    fn non_prime_base_is_refused() {
        assert!(deitmar_zeta(&GluedScheme::affine_line(), 6, 4, ZetaMode::P).is_err());
    }
}
