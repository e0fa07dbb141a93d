//! Coequalizers of presented blueprints and of presented monoids.
//!
//! Both constructions glue the images of a parallel pair of morphisms, then
//! simplify the presentation by eliminating generators that a relation makes
//! redundant. The blueprint construction additionally repairs the quotient:
//! whenever the additive congruence merges two distinct atomic classes, the
//! merge is promoted to a monoid relation and the quotient is rebuilt. The
//! two constructions can therefore disagree on the underlying monoid, and the
//! disagreement is detectable with ordinary homomorphism counts.

use super::super::blueprint::{
    validate_blueprint, Blueprint, ClosureCaps, PolyRelation, PolySum,
};
use super::super::error::{Error, Result};
use super::super::monomial::Monomial;
use super::super::presentation::MonoidPresentation;

/// A morphism of presented blueprints, given by one target monomial per
/// source generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlueprintMorphism {
    pub images: Vec<Monomial>,
}

impl BlueprintMorphism {
    pub fn new(images: Vec<Monomial>) -> Self {
        BlueprintMorphism { images }
    }

    /// Substitute the generator images into a source monomial.
    pub fn push_monomial(&self, m: &Monomial) -> Monomial {
        match m.exponents() {
            None => Monomial::Zero,
            Some(e) => {
                let width = self
                    .images
                    .iter()
                    .filter_map(|im| im.exponents().map(|x| x.len()))
                    .next()
                    .unwrap_or(0);
                let mut acc = Monomial::one(width);
                for (i, &x) in e.iter().enumerate() {
                    for _ in 0..x {
                        acc = acc.mul(&self.images[i]);
                    }
                }
                acc
            }
        }
    }

    pub fn push_sum(&self, s: &PolySum) -> PolySum {
        let pairs: Vec<(i64, Monomial)> = s
            .terms
            .iter()
            .map(|t| (t.coefficient, self.push_monomial(&t.monomial)))
            .collect();
        PolySum::from_pairs(&pairs)
    }

    /// Check that the map respects the source relations inside the target.
    /// Monomial relations are compared in the target's congruence; polynomial
    /// relations are checked with the bounded additive closure, so a morphism
    /// can be refused as undecided (`SaturationIncomplete`) rather than
    /// wrongly accepted or rejected.
    pub fn validate(&self, src: &Blueprint, dst: &Blueprint) -> Result<()> {
        if self.images.len() != src.monoid.num_generators() {
            return Err(Error::InvalidPresentation(
                "image list does not match source generators".into(),
            ));
        }
        let width = dst.monoid.num_generators();
        for im in &self.images {
            if let Some(e) = im.exponents() {
                if e.len() != width {
                    return Err(Error::InvalidPresentation(
                        "image monomial has the wrong generator width".into(),
                    ));
                }
            }
        }
        let table = crate::saturate::saturate(&dst.monoid)?;
        for (l, r) in &src.monoid.relations {
            let lp = table.normal_form(&self.push_monomial(l))?;
            let rp = table.normal_form(&self.push_monomial(r))?;
            if lp != rp {
                return Err(Error::NotAMonoidMorphism {
                    relation: format!("{} = {}", l.display(&src.monoid.generators), r.display(&src.monoid.generators)),
                });
            }
        }
        let caps = ClosureCaps::default();
        for rel in &src.relations {
            let la = self.push_sum(&rel.lhs);
            let ra = self.push_sum(&rel.rhs);
            if !crate::blueprint::sums_congruent(dst, &la, &ra, &caps)? {
                return Err(Error::NotAMonoidMorphism {
                    relation: rel.display(&src.monoid.generators),
                });
            }
        }
        Ok(())
    }
}

/// Replace generator `j` by `repl` (which must not involve `j`) in `m`,
/// keeping the generator width.
fn substitute(m: &Monomial, j: usize, repl: &Monomial) -> Monomial {
    match m.exponents() {
        None => Monomial::Zero,
        Some(e) => {
            let power = e[j];
            if power == 0 {
                return m.clone();
            }
            let mut base = e.to_vec();
            base[j] = 0;
            let mut acc = Monomial::Term(base);
            for _ in 0..power {
                acc = acc.mul(repl);
            }
            acc
        }
    }
}

/// Remove index `j` from the exponent vector (the exponent must be zero).
fn drop_index(m: &Monomial, j: usize) -> Monomial {
    match m.exponents() {
        None => Monomial::Zero,
        Some(e) => {
            debug_assert_eq!(e[j], 0);
            let mut v = e.to_vec();
            v.remove(j);
            Monomial::Term(v)
        }
    }
}

struct Presentation {
    generators: Vec<String>,
    mon_rels: Vec<(Monomial, Monomial)>,
    poly: Vec<PolyRelation>,
}

/// Eliminate generators made redundant by a relation `g = m` with `g` not in
/// `m`, preferring to keep the lower-numbered generator. Applies the same
/// substitution to the polynomial relations so both layers stay aligned.
fn tietze_simplify(p: &mut Presentation) {
    dedup_poly(&mut p.poly);
    loop {
        let mut target: Option<(usize, Monomial)> = None;
        'search: for (l, r) in &p.mon_rels {
            for (bare, other) in [(l, r), (r, l)] {
                if let Some(e) = bare.exponents() {
                    if e.iter().sum::<u32>() == 1 {
                        let j = e.iter().position(|&x| x == 1).unwrap();
                        let involves = other.exponents().map(|oe| oe[j] > 0).unwrap_or(false);
                        if !involves {
                            // When both sides are bare generators, eliminate
                            // the higher index so names stay stable.
                            if let Some(oe) = other.exponents() {
                                if oe.iter().sum::<u32>() == 1 {
                                    let oj = oe.iter().position(|&x| x == 1).unwrap();
                                    if oj > j {
                                        target = Some((oj, bare.clone()));
                                        break 'search;
                                    }
                                }
                            }
                            target = Some((j, other.clone()));
                            break 'search;
                        }
                    }
                }
            }
        }
        let Some((j, repl)) = target else { break };
        let map_mono = |m: &Monomial| drop_index(&substitute(m, j, &repl), j);
        p.generators.remove(j);
        p.mon_rels = p
            .mon_rels
            .iter()
            .map(|(l, r)| (map_mono(l), map_mono(r)))
            .filter(|(l, r)| l != r)
            .collect();
        p.mon_rels.sort();
        p.mon_rels.dedup();
        p.poly = p
            .poly
            .iter()
            .map(|rel| PolyRelation {
                lhs: PolySum::from_pairs(
                    &rel.lhs.terms.iter().map(|t| (t.coefficient, map_mono(&t.monomial))).collect::<Vec<_>>(),
                ),
                rhs: PolySum::from_pairs(
                    &rel.rhs.terms.iter().map(|t| (t.coefficient, map_mono(&t.monomial))).collect::<Vec<_>>(),
                ),
            })
            .filter(|rel| rel.lhs != rel.rhs)
            .collect();
        dedup_poly(&mut p.poly);
    }
}

/// Drop repeated polynomial relations; eliminating a generator can collapse
/// two distinct relations onto the same (possibly flipped) equation.
fn dedup_poly(rels: &mut Vec<PolyRelation>) {
    let mut seen: Vec<PolyRelation> = Vec::new();
    rels.retain(|rel| {
        let dup = seen
            .iter()
            .any(|s| (s.lhs == rel.lhs && s.rhs == rel.rhs) || (s.lhs == rel.rhs && s.rhs == rel.lhs));
        if !dup {
            seen.push(rel.clone());
        }
        !dup
    });
}

/// Coequalizer of `f, g : src ⇉ dst` in the category of presented monoids
/// with zero: quotient `dst` by the pairs `f(x) = g(x)` over the source
/// generators, then simplify.
pub fn monoid_coequalizer(
    src: &MonoidPresentation,
    dst: &MonoidPresentation,
    f: &BlueprintMorphism,
    g: &BlueprintMorphism,
) -> Result<MonoidPresentation> {
    let mut mon_rels = dst.relations.clone();
    for i in 0..src.num_generators() {
        let (a, b) = (f.images[i].clone(), g.images[i].clone());
        if a != b {
            mon_rels.push((a, b));
        }
    }
    let mut p = Presentation { generators: dst.generators.clone(), mon_rels, poly: Vec::new() };
    tietze_simplify(&mut p);
    MonoidPresentation::new(p.generators, p.mon_rels, dst.degree_bound)
}

/// Coequalizer of `f, g : src ⇉ dst` in the category of presented blueprints.
///
/// Starts from the monoid-level quotient carrying `dst`'s polynomial
/// relations along, then repairs: every pair of atomic classes merged by the
/// additive congruence is itself a forced identification in the quotient
/// blueprint, so it is added as a monoid relation and the construction
/// reruns. Divergence after a fixed number of repair rounds is reported
/// honestly.
pub fn coequalizer_blueprints(
    src: &Blueprint,
    dst: &Blueprint,
    f: &BlueprintMorphism,
    g: &BlueprintMorphism,
) -> Result<Blueprint> {
    f.validate(src, dst)?;
    g.validate(src, dst)?;
    let mut mon_rels = dst.monoid.relations.clone();
    for i in 0..src.monoid.num_generators() {
        let (a, b) = (f.images[i].clone(), g.images[i].clone());
        if a != b {
            mon_rels.push((a, b));
        }
    }
    let mut p = Presentation {
        generators: dst.monoid.generators.clone(),
        mon_rels,
        poly: dst.relations.clone(),
    };
    let caps = ClosureCaps::default();
    for _round in 0..8 {
        tietze_simplify(&mut p);
        let monoid = MonoidPresentation::new(
            p.generators.clone(),
            p.mon_rels.clone(),
            dst.monoid.degree_bound,
        )?;
        let bp = Blueprint::new(monoid, dst.coefficient_ring, p.poly.clone())?;
        let report = validate_blueprint(&bp, &caps)?;
        if report.ok {
            return Ok(bp);
        }
        for v in &report.violations {
            let pair = (v.left.clone(), v.right.clone());
            if pair.0 != pair.1 && !p.mon_rels.contains(&pair) {
                p.mon_rels.push(pair);
            }
        }
    }
    Err(Error::SaturationIncomplete(
        "blueprint coequalizer did not stabilize after repeated repairs".into(),
    ))
}
