//! Transfer maps between monoidal points and classical ring points over
//! prime fields.
//!
//! The data is a scheme together with a comparison ring `R'` and, per chart,
//! a ring morphism `R' → Z[M]/c`. Over a prime field the chart's ring points
//! compose with that morphism; the first map must be injective, and the
//! second identifies blueprint-compatible morphisms into `F1^(q-1)` with
//! their images among the `F_q`-points of `R'`.

use std::collections::BTreeSet;

use super::charts::{analyze_gluing, GluedScheme};
use crate::blueprint::{hom_b, Blueprint, PolySum};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ringpres::{base_change_to_ring, RingMorphism, RingPresentation};
use crate::saturate::{saturate, F1nElem, MonoidHom};

/// Scope note attached to every report.
pub const FIELD_NOTE: &str = "field condition checked for finite prime fields only";

const FIELD_CAP: u64 = 101;

pub fn is_prime_u64(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn ensure_prime_field(q: u64) -> Result<()> {
    if !is_prime_u64(q) {
        return Err(Error::InvalidPresentation(format!(
            "{q} is not prime; {FIELD_NOTE}"
        )));
    }
    if q > FIELD_CAP {
        return Err(Error::CapExceeded { what: "prime field size", value: q, cap: FIELD_CAP });
    }
    Ok(())
}

/// A scheme with comparison-ring data: `cc_ring` is `R'`, and `phi[c]` maps
/// it into chart `c`'s monoid ring.
#[derive(Debug, Clone)]
pub struct F1SchemeWithRelations {
    pub scheme: GluedScheme,
    pub cc_ring: RingPresentation,
    pub phi: Vec<RingMorphism>,
}

fn widen_monomial(m: &Monomial, width: usize) -> Monomial {
    match m.exponents() {
        None => Monomial::Zero,
        Some(e) => {
            let mut v = e.to_vec();
            v.resize(width, 0);
            Monomial::Term(v)
        }
    }
}

impl F1SchemeWithRelations {
    /// Validate: every chart morphism respects the `R'` relations (within the
    /// chart's bounds), and the morphisms agree across gluings.
    pub fn new(
        scheme: GluedScheme,
        cc_ring: RingPresentation,
        images_per_chart: Vec<Vec<PolySum>>,
    ) -> Result<Self> {
        if images_per_chart.len() != scheme.charts.len() {
            return Err(Error::InvalidPresentation(
                "one image list per chart is required".into(),
            ));
        }
        let mut phi = Vec::with_capacity(scheme.charts.len());
        for (chart, images) in scheme.charts.iter().zip(images_per_chart) {
            if images.len() != cc_ring.generators.len() {
                return Err(Error::InvalidPresentation(
                    "image list does not match the comparison ring's generators".into(),
                ));
            }
            let table = saturate(chart.monoid())?;
            let morphism = RingMorphism { source: cc_ring.clone(), images };
            morphism.check_respects_relations(&chart.blueprint, &table)?;
            phi.push(morphism);
        }
        // Naturality across gluings: push the left chart's images through the
        // gluing and compare with the right chart's images in the localized
        // congruence.
        for g in &scheme.gluings {
            let a = analyze_gluing(&scheme.charts, g)?;
            let wr = a.loc_right.num_generators();
            for (gi, left_sum) in phi[g.left].images.iter().enumerate() {
                let pushed = PolySum::from_pairs(
                    &left_sum
                        .terms
                        .iter()
                        .map(|t| {
                            (
                                t.coefficient,
                                super::charts::push_through(&t.monomial, &a.forward_full, wr),
                            )
                        })
                        .collect::<Vec<_>>(),
                );
                let right_sum = PolySum::from_pairs(
                    &phi[g.right].images[gi]
                        .terms
                        .iter()
                        .map(|t| (t.coefficient, widen_monomial(&t.monomial, wr)))
                        .collect::<Vec<_>>(),
                );
                if pushed.normalize(&a.table_right)? != right_sum.normalize(&a.table_right)? {
                    return Err(Error::GluingInconsistent(format!(
                        "comparison-ring generator {} has incompatible images across a gluing",
                        cc_ring.generators[gi]
                    )));
                }
            }
        }
        Ok(F1SchemeWithRelations { scheme, cc_ring, phi })
    }

    /// The identity comparison: `R' = Z[M]/c` of a single affine chart with
    /// the identity morphism.
    pub fn identity(bp: &Blueprint) -> Result<Self> {
        let scheme = GluedScheme::affine(super::charts::AffinePiece::new(bp.clone())?);
        let phi = RingMorphism::identity(bp);
        let cc_ring = phi.source.clone();
        F1SchemeWithRelations::new(scheme, cc_ring, vec![phi.images])
    }
}

/// Injectivity report for the composite chart-points → `R'`-points map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psi1Report {
    pub q: u64,
    pub chart: usize,
    /// `#Hom_Ring(Z[M]/c, F_q)`.
    pub source_count: usize,
    /// Distinct composites in `Hom_Ring(R', F_q)`.
    pub image_count: usize,
    pub injective: bool,
    pub note: &'static str,
}

pub fn psi1_injectivity(
    f: &F1SchemeWithRelations,
    q: u64,
    chart: usize,
) -> Result<Psi1Report> {
    ensure_prime_field(q)?;
    let bp = &f
        .scheme
        .charts
        .get(chart)
        .ok_or_else(|| Error::InvalidPresentation(format!("no chart {chart}")))?
        .blueprint;
    let ring = base_change_to_ring(bp);
    let pts = ring.points_mod(q)?;
    let mut images: Vec<Vec<u64>> = Vec::with_capacity(pts.len());
    for p in &pts {
        let image = f.phi[chart].eval_composite_mod(q, p);
        for rel in &f.cc_ring.relations {
            if rel.eval_mod(q, &image) != 0 {
                return Err(Error::InvalidPresentation(format!(
                    "composite point violates the comparison-ring relation {}",
                    rel.display(&f.cc_ring.generators)
                )));
            }
        }
        images.push(image);
    }
    let distinct: BTreeSet<&Vec<u64>> = images.iter().collect();
    Ok(Psi1Report {
        q,
        chart,
        source_count: pts.len(),
        image_count: distinct.len(),
        injective: distinct.len() == pts.len(),
        note: FIELD_NOTE,
    })
}

/// Matching report between blueprint-compatible morphisms into `F1^(q-1)`
/// and their composite ring points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psi2Report {
    pub q: u64,
    pub chart: usize,
    pub left_count: usize,
    pub right_count: usize,
    pub bijective: bool,
    /// `(generator images in F1^(q-1), composite R'-point over F_q)`.
    pub matching: Vec<(Vec<F1nElem>, Vec<u64>)>,
    pub note: &'static str,
}

fn smallest_primitive_root(q: u64) -> u64 {
    if q == 2 {
        return 1;
    }
    'outer: for g in 2..q {
        let mut v = g;
        for _ in 1..q - 1 {
            if v == 1 {
                continue 'outer;
            }
            v = v * g % q;
        }
        if v == 1 {
            return g;
        }
    }
    unreachable!("every prime field has a primitive root")
}

fn pow_mod(base: u64, exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc * base % q;
    }
    acc
}

pub fn psi2_point_sets(
    f: &F1SchemeWithRelations,
    q: u64,
    chart: usize,
) -> Result<Psi2Report> {
    ensure_prime_field(q)?;
    let n = q - 1;
    let bp = &f
        .scheme
        .charts
        .get(chart)
        .ok_or_else(|| Error::InvalidPresentation(format!("no chart {chart}")))?
        .blueprint;
    let buckets = hom_b(bp, n)?;
    let homs: Vec<MonoidHom> =
        buckets.buckets.iter().flat_map(|(_, hs)| hs.iter().cloned()).collect();
    let root = smallest_primitive_root(q);
    let ring = base_change_to_ring(bp);
    let mut matching = Vec::with_capacity(homs.len());
    let mut right: BTreeSet<Vec<u64>> = BTreeSet::new();
    for h in &homs {
        // Realize F1^(q-1) inside F_q: 0 ↦ 0, the class k ↦ root^k.
        let monoid_values: Vec<u64> = h
            .images
            .iter()
            .map(|im| match im {
                None => 0,
                Some(k) => pow_mod(root, *k, q),
            })
            .collect();
        for rel in &ring.relations {
            if rel.eval_mod(q, &monoid_values) != 0 {
                return Err(Error::InvalidPresentation(format!(
                    "embedded morphism fails the ring relation {}",
                    rel.display(&ring.generators)
                )));
            }
        }
        let image = f.phi[chart].eval_composite_mod(q, &monoid_values);
        for rel in &f.cc_ring.relations {
            if rel.eval_mod(q, &image) != 0 {
                return Err(Error::InvalidPresentation(format!(
                    "composite point violates the comparison-ring relation {}",
                    rel.display(&f.cc_ring.generators)
                )));
            }
        }
        right.insert(image.clone());
        matching.push((h.images.clone(), image));
    }
    Ok(Psi2Report {
        q,
        chart,
        left_count: homs.len(),
        right_count: right.len(),
        bijective: right.len() == homs.len(),
        matching,
        note: FIELD_NOTE,
    })
}
