//! Points of a glued scheme: chart primes modulo gluing identification.
//!
//! A prime of a chart lies on a gluing's overlap exactly when it avoids the
//! inverted face; such a prime transports through the gluing isomorphism to a
//! prime of the other chart (membership tested in the localized congruence),
//! and the two are identified. Primes meeting the face are invisible to the
//! overlap and survive as points of their own chart.

use std::collections::BTreeSet;

use super::charts::{analyze_gluing, face_of, GluedScheme, GluingAnalysis};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::primes::{
    canonical_subset, class_in_monomial_ideal, enumerate_primes, is_prime_subset, PrimeIdeal,
};
use crate::saturate::{saturate, SaturationTable};
use crate::unit_group::{unit_group, AbelianGroupStructure};

/// One glued point, represented in its lowest-numbered chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemePoint {
    pub chart: usize,
    pub prime: PrimeIdeal,
    pub unit_structure: AbelianGroupStructure,
    /// Every chart-level incarnation of this point, including the
    /// representative, sorted.
    pub identified_with: Vec<(usize, PrimeIdeal)>,
}

/// Transport a prime through one direction of a gluing: a target chart
/// generator belongs to the image prime iff its class in the localized
/// target lies in the monomial ideal generated by the images of the source
/// prime's generators.
fn transport(
    prime: &PrimeIdeal,
    images: &[Monomial],
    loc_table: &SaturationTable,
    loc_width: usize,
    target_chart_gens: usize,
    target_table: &SaturationTable,
) -> Result<BTreeSet<usize>> {
    let ideal: Vec<Monomial> = prime
        .generator_subset
        .iter()
        .map(|&gi| images[gi].clone())
        .filter(|m| !m.is_zero())
        .collect();
    let mut q = BTreeSet::new();
    for j in 0..target_chart_gens {
        let cls = loc_table.class_id(&Monomial::generator(loc_width, j))?;
        if class_in_monomial_ideal(loc_table, cls, &ideal) {
            q.insert(j);
        }
    }
    let q = canonical_subset(target_table, &q);
    if !is_prime_subset(target_table, &q) {
        return Err(Error::GluingInconsistent(format!(
            "transported subset {q:?} is not a prime of the target chart"
        )));
    }
    Ok(q)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let lo = ra.min(rb);
            let hi = ra.max(rb);
            self.parent[hi] = lo;
        }
    }
}

/// All points of the glued scheme in deterministic order (by representative
/// chart, then prime), with unit groups attached and checked for agreement
/// across identifications.
pub fn points(s: &GluedScheme) -> Result<Vec<SchemePoint>> {
    let mut tables: Vec<SaturationTable> = Vec::new();
    let mut chart_primes: Vec<Vec<PrimeIdeal>> = Vec::new();
    for chart in &s.charts {
        let t = saturate(chart.monoid())?;
        chart_primes.push(enumerate_primes(&t)?);
        tables.push(t);
    }

    // Flat node ids per (chart, prime index).
    let mut offset = vec![0usize; s.charts.len()];
    let mut total = 0usize;
    for (c, ps) in chart_primes.iter().enumerate() {
        offset[c] = total;
        total += ps.len();
    }
    let node = |c: usize, prime_pos: usize| offset[c] + prime_pos;
    let mut uf = UnionFind::new(total);

    for g in &s.gluings {
        let a: GluingAnalysis = analyze_gluing(&s.charts, g)?;
        let k_left = s.charts[g.left].monoid().num_generators();
        let k_right = s.charts[g.right].monoid().num_generators();
        let face_left = face_of(&g.left_prime, k_left);
        let wl = a.loc_left.num_generators();
        let wr = a.loc_right.num_generators();
        for (pi, p) in chart_primes[g.left].iter().enumerate() {
            if p.generator_subset.iter().any(|gi| face_left.contains(gi)) {
                continue;
            }
            let q = transport(p, &a.forward_full, &a.table_right, wr, k_right, &tables[g.right])?;
            let back = transport(
                &PrimeIdeal { generator_subset: q.clone() },
                &a.backward_full,
                &a.table_left,
                wl,
                k_left,
                &tables[g.left],
            )?;
            if back != p.generator_subset {
                return Err(Error::GluingInconsistent(format!(
                    "prime {:?} does not return to itself through the gluing (got {:?})",
                    p.generator_subset, back
                )));
            }
            let qi = chart_primes[g.right]
                .iter()
                .position(|cand| cand.generator_subset == q)
                .ok_or_else(|| {
                    Error::GluingInconsistent(format!(
                        "transported prime {q:?} is missing from the target chart's prime list"
                    ))
                })?;
            uf.union(node(g.left, pi), node(g.right, qi));
        }
    }

    // Collect classes keyed by their least node.
    let mut members: Vec<Vec<(usize, usize)>> = vec![Vec::new(); total];
    for c in 0..s.charts.len() {
        for pi in 0..chart_primes[c].len() {
            let r = uf.find(node(c, pi));
            members[r].push((c, pi));
        }
    }
    let mut out = Vec::new();
    for class in members.into_iter().filter(|m| !m.is_empty()) {
        let (chart, pi) = class[0];
        let prime = chart_primes[chart][pi].clone();
        let unit_structure = unit_group(&tables[chart], &prime)?;
        for &(c, qi) in &class[1..] {
            let other = unit_group(&tables[c], &chart_primes[c][qi])?;
            if other != unit_structure {
                return Err(Error::GluingInconsistent(format!(
                    "identified points have different unit groups: {} vs {}",
                    unit_structure.display(),
                    other.display()
                )));
            }
        }
        let identified_with: Vec<(usize, PrimeIdeal)> =
            class.iter().map(|&(c, qi)| (c, chart_primes[c][qi].clone())).collect();
        out.push(SchemePoint { chart, prime, unit_structure, identified_with });
    }
    Ok(out)
}

/// Human-readable label, e.g. `chart0:(T1,T2)`.
pub fn point_label(s: &GluedScheme, pt: &SchemePoint) -> String {
    format!(
        "chart{}:{}",
        pt.chart,
        pt.prime.display(&s.charts[pt.chart].monoid().generators)
    )
}

/// Monoidal-level torsion-freeness: every point's unit group is free.
pub fn is_torsion_free(s: &GluedScheme) -> Result<bool> {
    Ok(points(s)?.iter().all(|p| p.unit_structure.is_torsion_free()))
}

/// Per-point torsion verdicts, labeled.
pub fn torsion_free_points(s: &GluedScheme) -> Result<Vec<(String, bool)>> {
    Ok(points(s)?
        .iter()
        .map(|p| (point_label(s, p), p.unit_structure.is_torsion_free()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::MonoidPresentation;
    use crate::scheme::charts::AffinePiece;

    #[test]
    fn affine_line_has_two_points() {
        let pts = points(&GluedScheme::affine_line()).unwrap();
        assert_eq!(pts.len(), 2);
        let ranks: Vec<usize> = pts.iter().map(|p| p.unit_structure.rank).collect();
        assert_eq!(ranks, vec![1, 0]);
        assert!(is_torsion_free(&GluedScheme::affine_line()).unwrap());
    }

    #[test]
    fn free_monoid_of_rank_k_has_two_to_the_k_points() {
        for k in 1..=4usize {
            let names: Vec<String> = (0..k).map(|i| format!("T{}", i + 1)).collect();
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let m = MonoidPresentation::free(&name_refs, 8);
            let s = GluedScheme::affine(AffinePiece::monoidal(m).unwrap());
            assert_eq!(points(&s).unwrap().len(), 1 << k);
        }
    }

    #[test]
    fn multiplicative_group_has_one_point() {
        let pts = points(&GluedScheme::multiplicative_group()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].unit_structure, AbelianGroupStructure::free(1));
    }

    #[test]
    fn projective_line_has_three_points_with_ranks_1_0_0() {
        let s = GluedScheme::projective_line();
        let pts = points(&s).unwrap();
        assert_eq!(pts.len(), 3);
        let mut ranks: Vec<usize> = pts.iter().map(|p| p.unit_structure.rank).collect();
        ranks.sort();
        assert_eq!(ranks, vec![0, 0, 1]);
        // The generic point is shared between the charts.
        let generic = pts.iter().find(|p| p.unit_structure.rank == 1).unwrap();
        assert_eq!(generic.identified_with.len(), 2);
        assert_eq!(point_label(&s, generic), "chart0:()");
    }

    #[test]
    fn torsion_is_detected() {
        let m = MonoidPresentation::new(
            vec!["U".into()],
            vec![(Monomial::Term(vec![3]), Monomial::one(1))],
            12,
        )
        .unwrap();
        let s = GluedScheme::affine(AffinePiece::monoidal(m).unwrap());
        assert!(!is_torsion_free(&s).unwrap());
    }
}
