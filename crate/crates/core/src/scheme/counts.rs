//! The two point counts of a glued scheme and their comparison.
//!
//! `P` sums closed-form unit-group homomorphism counts over the points and is
//! polynomial exactly when the scheme is torsion-free. `Q` counts
//! blueprint-compatible morphisms bucketed by zero-set prime, with
//! cross-chart agreement asserted on shared points. `Q ≤ P` holds per point
//! and in total; the margin table is the reporting artifact.

use std::collections::BTreeMap;

use super::charts::GluedScheme;
use super::points::{point_label, points, SchemePoint};
use crate::blueprint::{hom_b, HomBuckets};
use crate::counting::{fit_and_verify, hom_count_abelian, CountPolynomial, FitFailure};
use crate::error::{Error, Result};

/// `P(n) = Σ_points #Hom(unit group at the point, Z_n)`, for each requested
/// `n`. Works with torsion present (the values are still well-defined).
pub fn sample_p(s: &GluedScheme, ns: &[u64]) -> Result<Vec<(u64, u64)>> {
    let pts = points(s)?;
    ns.iter()
        .map(|&n| {
            let mut total: u64 = 0;
            for pt in &pts {
                let c = hom_count_abelian(&pt.unit_structure, n)?;
                total = total.checked_add(c).ok_or(Error::Overflow("P count"))?;
            }
            Ok((n, total))
        })
        .collect()
}

/// Fit the sampled `P` values to a polynomial and verify on three further
/// values. Torsion anywhere makes the count non-polynomial, so it is refused
/// up front with the offending point named.
pub fn p_polynomial(
    s: &GluedScheme,
    ns: &[u64],
) -> Result<(Vec<(u64, u64)>, CountPolynomial)> {
    if ns.len() < 2 {
        return Err(Error::InvalidPresentation("need at least two sample points".into()));
    }
    let pts = points(s)?;
    for pt in &pts {
        if !pt.unit_structure.is_torsion_free() {
            return Err(Error::NotTorsionFree {
                point: point_label(s, pt),
                factors: pt.unit_structure.invariant_factors.clone(),
            });
        }
    }
    let max = ns.iter().copied().max().unwrap();
    let mut all_ns: Vec<u64> = ns.to_vec();
    for extra in max + 1..=max + 3 {
        all_ns.push(extra);
    }
    let samples = sample_p(s, &all_ns)?;
    let fitted = fit_and_verify(&samples, ns.len()).map_err(|f| {
        Error::InvalidPresentation(format!("torsion-free P count failed to fit: {f}"))
    })?;
    Ok((samples[..ns.len()].to_vec(), fitted))
}

/// Per-point and total `Q` at one value of `n`, aligned with `points(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QReport {
    pub n: u64,
    pub per_point: Vec<u64>,
    pub total: u64,
}

fn chart_buckets<'a>(
    s: &GluedScheme,
    cache: &'a mut BTreeMap<usize, HomBuckets>,
    chart: usize,
    n: u64,
) -> Result<&'a HomBuckets> {
    if !cache.contains_key(&chart) {
        cache.insert(chart, hom_b(&s.charts[chart].blueprint, n)?);
    }
    Ok(&cache[&chart])
}

/// Count blueprint-compatible morphisms into `F1^n` per glued point. Every
/// chart containing a point must report the same local count; disagreement is
/// a `GluingInconsistent` error, not a warning.
pub fn q_count(s: &GluedScheme, n: u64) -> Result<QReport> {
    let pts = points(s)?;
    let mut cache: BTreeMap<usize, HomBuckets> = BTreeMap::new();
    let mut per_point = Vec::with_capacity(pts.len());
    let mut total: u64 = 0;
    for pt in &pts {
        let mut count: Option<u64> = None;
        for (chart, prime) in &pt.identified_with {
            let buckets = chart_buckets(s, &mut cache, *chart, n)?;
            let c = buckets.count_for(prime);
            match count {
                None => count = Some(c),
                Some(prev) if prev != c => {
                    return Err(Error::GluingInconsistent(format!(
                        "charts disagree on the Q count at {}: {} vs {}",
                        point_label(s, pt),
                        prev,
                        c
                    )));
                }
                Some(_) => {}
            }
        }
        let c = count.expect("every point has at least one chart");
        per_point.push(c);
        total = total.checked_add(c).ok_or(Error::Overflow("Q count"))?;
    }
    Ok(QReport { n, per_point, total })
}

/// One row of the `Q ≤ P` margin table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarginRow {
    pub n: u64,
    /// `(point label, q, p)` per glued point.
    pub per_point: Vec<(String, u64, u64)>,
    pub total_q: u64,
    pub total_p: u64,
}

impl MarginRow {
    pub fn holds(&self) -> bool {
        self.total_q <= self.total_p && self.per_point.iter().all(|(_, q, p)| q <= p)
    }
}

/// Compare `Q` and `P` per point and in total for each `n`. A violation shows
/// up as a failing row, not an error.
pub fn check_q_le_p(s: &GluedScheme, ns: &[u64]) -> Result<Vec<MarginRow>> {
    let pts: Vec<SchemePoint> = points(s)?;
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let q = q_count(s, n)?;
        let mut per_point = Vec::with_capacity(pts.len());
        let mut total_p: u64 = 0;
        for (pt, &qv) in pts.iter().zip(&q.per_point) {
            let pv = hom_count_abelian(&pt.unit_structure, n)?;
            total_p = total_p.checked_add(pv).ok_or(Error::Overflow("P count"))?;
            per_point.push((point_label(s, pt), qv, pv));
        }
        rows.push(MarginRow { n, per_point, total_q: q.total, total_p });
    }
    Ok(rows)
}

/// Fit each point's local `Q` count to a polynomial on the window `ns`,
/// verifying on two further samples. Torsion shows up here as a per-point
/// fit failure carrying the counterexample `n`, not as an upfront refusal;
/// a scheme is polynomial-countable on the window iff every entry is `Ok`.
pub fn point_count_polynomials(
    s: &GluedScheme,
    ns: &[u64],
) -> Result<Vec<(String, std::result::Result<CountPolynomial, FitFailure>)>> {
    if ns.len() < 2 {
        return Err(Error::InvalidPresentation("need at least two sample points".into()));
    }
    let pts = points(s)?;
    let max = ns.iter().copied().max().unwrap();
    let mut all_ns: Vec<u64> = ns.to_vec();
    all_ns.extend(max + 1..=max + 2);
    let reports: Vec<QReport> = all_ns.iter().map(|&n| q_count(s, n)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(pts.len());
    for (i, pt) in pts.iter().enumerate() {
        let series: Vec<(u64, u64)> =
            all_ns.iter().zip(&reports).map(|(&n, r)| (n, r.per_point[i])).collect();
        out.push((point_label(s, pt), fit_and_verify(&series, ns.len())));
    }
    Ok(out)
}
