//! Exact truncated power series over arbitrary-precision rationals.
//!
//! Everything is computed with exact arithmetic: the recurrences for `exp`
//! and `log` introduce denominators, so integrality of a result is a real
//! statement to check, not a rounding artifact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Coefficients for `T^0 .. T^(len-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPowerSeries {
    pub coeffs: Vec<BigRational>,
}

impl TruncatedPowerSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        TruncatedPowerSeries { coeffs }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        TruncatedPowerSeries { coeffs: values.iter().map(|&v| rat(v)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn zero(len: usize) -> Self {
        TruncatedPowerSeries { coeffs: vec![BigRational::zero(); len] }
    }

    pub fn one(len: usize) -> Self {
        let mut s = Self::zero(len);
        if len > 0 {
            s.coeffs[0] = BigRational::one();
        }
        s
    }

    /// `1 / (1 - p·T)` up to the truncation length.
    pub fn geometric(p: i64, len: usize) -> Self {
        let mut coeffs = Vec::with_capacity(len);
        let mut acc = BigRational::one();
        for _ in 0..len {
            coeffs.push(acc.clone());
            acc *= rat(p);
        }
        TruncatedPowerSeries { coeffs }
    }

    fn common_len(&self, other: &Self) -> usize {
        self.len().min(other.len())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_len(other);
        TruncatedPowerSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_len(other);
        TruncatedPowerSeries {
            coeffs: (0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_len(other);
        let mut coeffs = vec![BigRational::zero(); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                if !other.coeffs[j].is_zero() {
                    coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        TruncatedPowerSeries { coeffs }
    }

    /// Exponential of a series with zero constant term, by the derivative
    /// recurrence `n·e_n = Σ_{k=1..n} k·s_k·e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if self.is_empty() {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidPresentation(
                "exp needs a zero constant term".into(),
            ));
        }
        let n = self.len();
        let mut e = vec![BigRational::zero(); n];
        e[0] = BigRational::one();
        for m in 1..n {
            let mut acc = BigRational::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc += rat(k as i64) * &self.coeffs[k] * &e[m - k];
                }
            }
            e[m] = acc / rat(m as i64);
        }
        Ok(TruncatedPowerSeries { coeffs: e })
    }

    /// Logarithm of a series with constant term one, by
    /// `l_n = s_n - (1/n)·Σ_{k=1..n-1} k·l_k·s_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if self.is_empty() {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidPresentation(
                "log needs constant term one".into(),
            ));
        }
        let n = self.len();
        let mut l = vec![BigRational::zero(); n];
        for m in 1..n {
            let mut acc = BigRational::zero();
            for k in 1..m {
                if !l[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc += rat(k as i64) * &l[k] * &self.coeffs[m - k];
                }
            }
            l[m] = &self.coeffs[m] - acc / rat(m as i64);
        }
        Ok(TruncatedPowerSeries { coeffs: l })
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        if !self.is_integral() {
            return None;
        }
        Some(self.coeffs.iter().map(|c| c.to_integer()).collect())
    }
}

/// A rational function `P/Q` with `Q(0) = 1`, recovered from a truncated
/// series by exact linear algebra. A successful fit only certifies agreement
/// up to the truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadeApproximant {
    pub numerator: Vec<BigRational>,
    pub denominator: Vec<BigRational>,
}

impl PadeApproximant {
    /// Multiply back and compare against the input series.
    pub fn matches(&self, series: &TruncatedPowerSeries) -> bool {
        let n = series.len();
        let q = TruncatedPowerSeries::new(padded(&self.denominator, n));
        let p = TruncatedPowerSeries::new(padded(&self.numerator, n));
        series.mul(&q) == p
    }
}

fn padded(v: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n];
    for (i, c) in v.iter().enumerate().take(n) {
        out[i] = c.clone();
    }
    out
}

/// Solve for a `[num_deg / den_deg]` Padé approximant of the series, exactly.
/// Returns `None` when the series is too short or the linear system has no
/// solution with `Q(0) = 1`.
pub fn pade(
    series: &TruncatedPowerSeries,
    num_deg: usize,
    den_deg: usize,
) -> Option<PadeApproximant> {
    let need = num_deg + den_deg + 1;
    if series.len() < need {
        return None;
    }
    let s = |i: isize| -> BigRational {
        if i < 0 {
            BigRational::zero()
        } else {
            series.coeffs[i as usize].clone()
        }
    };
    // Unknowns q_1..q_den_deg from Σ_j q_j·s_{m-j} = -s_m for
    // m = num_deg+1 ..= num_deg+den_deg.
    let d = den_deg;
    let mut a = vec![vec![BigRational::zero(); d + 1]; d];
    for (row, m) in (num_deg + 1..=num_deg + d).enumerate() {
        for j in 1..=d {
            a[row][j - 1] = s(m as isize - j as isize);
        }
        a[row][d] = -s(m as isize);
    }
    let q_tail = solve_exact(&mut a, d)?;
    let mut denominator = vec![BigRational::one()];
    denominator.extend(q_tail);
    let mut numerator = Vec::with_capacity(num_deg + 1);
    for m in 0..=num_deg {
        let mut acc = BigRational::zero();
        for (j, qj) in denominator.iter().enumerate() {
            acc += qj * s(m as isize - j as isize);
        }
        numerator.push(acc);
    }
    let out = PadeApproximant { numerator, denominator };
    if out.matches(series) {
        Some(out)
    } else {
        None
    }
}

/// Gaussian elimination with exact pivoting on an augmented `rows × (n+1)`
/// matrix; returns the unique solution or `None`.
fn solve_exact(a: &mut [Vec<BigRational>], n: usize) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let mut rank_row = 0usize;
    let mut pivot_cols = Vec::new();
    for col in 0..n {
        let pivot = (rank_row..rows).find(|&r| !a[r][col].is_zero())?;
        a.swap(rank_row, pivot);
        let inv = a[rank_row][col].clone();
        for v in a[rank_row].iter_mut() {
            *v = &*v / &inv;
        }
        for r in 0..rows {
            if r != rank_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..=n {
                    let delta = &factor * &a[rank_row][c];
                    a[r][c] = &a[r][c] - delta;
                }
            }
        }
        pivot_cols.push(col);
        rank_row += 1;
    }
    // Inconsistent trailing rows mean no solution.
    for r in rank_row..rows {
        if !a[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = a[row][n].clone();
    }
    Some(x)
}

/// Convenience check used by property tests: every coefficient's magnitude.
pub fn max_denominator_bits(s: &TruncatedPowerSeries) -> u64 {
    s.coeffs.iter().map(|c| c.denom().abs().bits()).max().unwrap_or(0)
}
