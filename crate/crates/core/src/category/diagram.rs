//! Finite limits and colimits of finite objects, with exhaustive
//! universal-property verification.
//!
//! Limits follow the carrier-first recipe: take the limit of the carriers in
//! pointed sets and put the submonoid generated by its image on top.
//! Colimits are dual: a wedge or quotient carrier over the coproduct or
//! quotient monoid, with the carrier replaced by its image so the embedding
//! condition survives.

use super::addmonoid::AddMonoid;
use super::bobject::FiniteBObject;
use super::morphism::{hom_set, BMorphism};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub enum Diagram {
    /// No objects: limit = terminal, colimit = initial.
    Empty,
    /// Two objects, no arrows: product / coproduct.
    Pair(FiniteBObject, FiniteBObject),
    /// Two parallel arrows f, g: src -> dst: equalizer / coequalizer.
    Parallel {
        src: FiniteBObject,
        dst: FiniteBObject,
        f: BMorphism,
        g: BMorphism,
    },
}

#[derive(Debug, Clone)]
pub struct Cone {
    pub apex: FiniteBObject,
    /// `Pair`: legs to both objects. `Parallel`: the single leg into `src`.
    pub legs: Vec<BMorphism>,
}

#[derive(Debug, Clone)]
pub struct Cocone {
    pub apex: FiniteBObject,
    /// `Pair`: legs from both objects. `Parallel`: the single leg from `dst`.
    pub legs: Vec<BMorphism>,
}

/// Restrict a (possibly partial) monoid to the submonoid generated by `gens`.
/// Returns the submonoid and the element map submonoid -> ambient.
fn submonoid(m: &AddMonoid, gens: &[usize]) -> (AddMonoid, Vec<usize>) {
    let elems = m.generated_by(gens);
    let pos = |e: usize| elems.iter().position(|&x| x == e).unwrap();
    let n = elems.len();
    let mut add = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if let Some(c) = m.try_add(elems[i], elems[j]) {
                // A defined sum of generated elements is generated.
                add[i][j] = Some(pos(c));
            }
        }
    }
    let names = elems.iter().map(|&e| m.names[e].clone()).collect();
    (AddMonoid { names, add }, elems)
}

pub fn limit_b(d: &Diagram) -> Result<Cone> {
    match d {
        Diagram::Empty => Ok(Cone { apex: FiniteBObject::zero_object(), legs: vec![] }),
        Diagram::Pair(a, b) => {
            let prod = a.monoid.product(&b.monoid);
            let pair_idx = |ma: usize, mb: usize| ma * b.monoid.order() + mb;
            // Carrier: all pairs of carrier points, pointed at (*, *).
            let mut carrier = vec!["*".to_string()];
            let mut images = Vec::new();
            let mut point_pairs = Vec::new();
            for i in 0..a.carrier_size() {
                for j in 0..b.carrier_size() {
                    if i == 0 && j == 0 {
                        continue;
                    }
                    carrier.push(format!("({},{})", a.carrier[i], b.carrier[j]));
                    images.push(pair_idx(a.mu(i), b.mu(j)));
                    point_pairs.push((i, j));
                }
            }
            let (monoid, elems) = submonoid(&prod, &images);
            let gen_image: Vec<usize> = images
                .iter()
                .map(|&e| elems.iter().position(|&x| x == e).unwrap())
                .collect();
            let apex = FiniteBObject::new(carrier, monoid, gen_image)?;
            // Projections.
            let mut proj = Vec::new();
            for side in 0..2 {
                let point_map: Vec<usize> = std::iter::once(0)
                    .chain(point_pairs.iter().map(|&(i, j)| if side == 0 { i } else { j }))
                    .collect();
                let monoid_map: Vec<usize> = elems
                    .iter()
                    .map(|&e| {
                        let (ma, mb) = (e / b.monoid.order(), e % b.monoid.order());
                        if side == 0 {
                            ma
                        } else {
                            mb
                        }
                    })
                    .collect();
                proj.push(BMorphism { point_map, monoid_map });
            }
            Ok(Cone { apex, legs: proj })
        }
        Diagram::Parallel { src, dst, f, g } => {
            if !f.is_valid(src, dst) || !g.is_valid(src, dst) {
                return Err(Error::InvalidPresentation(
                    "parallel arrows are not valid morphisms".into(),
                ));
            }
            let mut carrier = vec!["*".to_string()];
            let mut kept = Vec::new();
            for i in 1..src.carrier_size() {
                if f.point_map[i] == g.point_map[i] {
                    carrier.push(src.carrier[i].clone());
                    kept.push(i);
                }
            }
            let images: Vec<usize> = kept.iter().map(|&i| src.mu(i)).collect();
            let (monoid, elems) = submonoid(&src.monoid, &images);
            let gen_image: Vec<usize> = images
                .iter()
                .map(|&e| elems.iter().position(|&x| x == e).unwrap())
                .collect();
            let apex = FiniteBObject::new(carrier, monoid, gen_image)?;
            let point_map: Vec<usize> = std::iter::once(0).chain(kept.iter().copied()).collect();
            let incl = BMorphism { point_map, monoid_map: elems };
            Ok(Cone { apex, legs: vec![incl] })
        }
    }
}

pub fn colimit_b(d: &Diagram) -> Result<Cocone> {
    match d {
        Diagram::Empty => Ok(Cocone { apex: FiniteBObject::zero_object(), legs: vec![] }),
        Diagram::Pair(a, b) => {
            // Wedge carrier over the direct sum of the monoids.
            let sum = a.monoid.product(&b.monoid);
            let pair_idx = |ma: usize, mb: usize| ma * b.monoid.order() + mb;
            let mut carrier = vec!["*".to_string()];
            let mut gen_image = Vec::new();
            for i in 1..a.carrier_size() {
                carrier.push(format!("l.{}", a.carrier[i]));
                gen_image.push(pair_idx(a.mu(i), 0));
            }
            for j in 1..b.carrier_size() {
                carrier.push(format!("r.{}", b.carrier[j]));
                gen_image.push(pair_idx(0, b.mu(j)));
            }
            let (monoid, elems) = submonoid(&sum, &gen_image);
            let gen_image: Vec<usize> = gen_image
                .iter()
                .map(|&e| elems.iter().position(|&x| x == e).unwrap())
                .collect();
            let apex = FiniteBObject::new(carrier, monoid, gen_image)?;
            let embed = |e: usize, side: usize| -> usize {
                let amb = if side == 0 { pair_idx(e, 0) } else { pair_idx(0, e) };
                elems.iter().position(|&x| x == amb).unwrap()
            };
            let inj_a = BMorphism {
                point_map: (0..a.carrier_size()).collect(),
                monoid_map: (0..a.monoid.order()).map(|e| embed(e, 0)).collect(),
            };
            let inj_b = BMorphism {
                point_map: std::iter::once(0)
                    .chain((1..b.carrier_size()).map(|j| a.carrier_size() - 1 + j))
                    .collect(),
                monoid_map: (0..b.monoid.order()).map(|e| embed(e, 1)).collect(),
            };
            Ok(Cocone { apex, legs: vec![inj_a, inj_b] })
        }
        Diagram::Parallel { src, dst, f, g } => {
            if !f.is_valid(src, dst) || !g.is_valid(src, dst) {
                return Err(Error::InvalidPresentation(
                    "parallel arrows are not valid morphisms".into(),
                ));
            }
            let pairs: Vec<(usize, usize)> = (0..src.monoid.order())
                .map(|m| (f.monoid_map[m], g.monoid_map[m]))
                .collect();
            let (qmonoid, proj) = dst.monoid.quotient_by_pairs(&pairs)?;
            // Image carrier: one point per nonzero class hit by the carrier.
            let mut carrier = vec!["*".to_string()];
            let mut gen_image: Vec<usize> = Vec::new();
            let mut point_map = vec![0usize; dst.carrier_size()];
            for i in 1..dst.carrier_size() {
                let c = proj[dst.mu(i)];
                if c == 0 {
                    continue;
                }
                let slot = match gen_image.iter().position(|&x| x == c) {
                    Some(s) => s + 1,
                    None => {
                        gen_image.push(c);
                        carrier.push(format!("[{}]", dst.carrier[i]));
                        gen_image.len()
                    }
                };
                point_map[i] = slot;
            }
            let apex = FiniteBObject::new(carrier, qmonoid, gen_image)?;
            let q = BMorphism { point_map, monoid_map: proj };
            Ok(Cocone { apex, legs: vec![q] })
        }
    }
}

/// Exhaustively verify the limit's universal property against every cone out
/// of each test object: factorizations through the apex must exist uniquely.
pub fn check_limit_universal(
    d: &Diagram,
    cone: &Cone,
    tests: &[FiniteBObject],
) -> Result<bool> {
    for t in tests {
        let into_apex = hom_set(t, &cone.apex);
        match d {
            Diagram::Empty => {
                if into_apex.len() != 1 {
                    return Ok(false);
                }
            }
            Diagram::Pair(a, b) => {
                for p in hom_set(t, a) {
                    for q in hom_set(t, b) {
                        let n = into_apex
                            .iter()
                            .filter(|u| {
                                u.compose(&cone.legs[0]) == p && u.compose(&cone.legs[1]) == q
                            })
                            .count();
                        if n != 1 {
                            return Ok(false);
                        }
                    }
                }
            }
            Diagram::Parallel { src, f, g, .. } => {
                for h in hom_set(t, src) {
                    if h.compose(f) != h.compose(g) {
                        continue;
                    }
                    let n = into_apex
                        .iter()
                        .filter(|u| u.compose(&cone.legs[0]) == h)
                        .count();
                    if n != 1 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Dual check for colimits: every cocone into a test object factors uniquely.
pub fn check_colimit_universal(
    d: &Diagram,
    cocone: &Cocone,
    tests: &[FiniteBObject],
) -> Result<bool> {
    for t in tests {
        let from_apex = hom_set(&cocone.apex, t);
        match d {
            Diagram::Empty => {
                if from_apex.len() != 1 {
                    return Ok(false);
                }
            }
            Diagram::Pair(a, b) => {
                for p in hom_set(a, t) {
                    for q in hom_set(b, t) {
                        let n = from_apex
                            .iter()
                            .filter(|u| {
                                cocone.legs[0].compose(u) == p && cocone.legs[1].compose(u) == q
                            })
                            .count();
                        if n != 1 {
                            return Ok(false);
                        }
                    }
                }
            }
            Diagram::Parallel { dst, f, g, .. } => {
                for h in hom_set(dst, t) {
                    if f.compose(&h) != g.compose(&h) {
                        continue;
                    }
                    let n = from_apex
                        .iter()
                        .filter(|u| cocone.legs[0].compose(u) == h)
                        .count();
                    if n != 1 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
