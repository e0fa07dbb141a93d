//! Integer polynomial quotient rings and their finite-field points.
//!
//! This is the classical side of the dictionary: a blueprint base-changes to
//! `Z[generators] / (monoid relations as binomials, additive relations as
//! differences)`, and a comparison ring comes with a morphism into that
//! quotient.  Everything stays exact; evaluation over a prime field is plain
//! residue arithmetic.

use std::collections::BTreeMap;

use crate::blueprint::{Blueprint, PolySum};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::saturate::SaturationTable;

/// A multivariate polynomial with integer coefficients; keys are exponent
/// vectors over the ring's generator list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    pub terms: BTreeMap<Vec<u32>, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { terms: BTreeMap::new() }
    }

    pub fn constant(num_gens: usize, c: i64) -> Self {
        let mut p = IntPolynomial::zero();
        p.add_term(vec![0; num_gens], c);
        p
    }

    pub fn generator(num_gens: usize, idx: usize) -> Self {
        let mut e = vec![0; num_gens];
        e[idx] = 1;
        let mut p = IntPolynomial::zero();
        p.add_term(e, 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, expts: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(expts.clone()).or_insert(0);
        *e = e.checked_add(c).expect("polynomial coefficient overflow");
        if *e == 0 {
            self.terms.remove(&expts);
        }
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c.checked_neg().expect("coefficient overflow"));
        }
        out
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Vec<u32> = ea
                    .iter()
                    .zip(eb.iter())
                    .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
                    .collect();
                out.add_term(e, ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Evaluate at residues modulo a prime `q`.
    pub fn eval_mod(&self, q: u64, values: &[u64]) -> u64 {
        let mut acc: u64 = 0;
        for (e, &c) in &self.terms {
            let mut t: u64 = 1;
            for (i, &x) in e.iter().enumerate() {
                for _ in 0..x {
                    t = t * (values[i] % q) % q;
                }
            }
            let c_mod = c.rem_euclid(q as i64) as u64;
            acc = (acc + c_mod * t) % q;
        }
        acc
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, &c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], x)
                    }
                })
                .collect();
            let body = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
            let piece = match (c, mono.is_empty()) {
                (1, false) => body,
                (-1, false) => format!("-{}", body),
                (c, true) => format!("{}", c),
                (c, false) => format!("{}*{}", c, body),
            };
            if out.is_empty() {
                out = piece;
            } else if piece.starts_with('-') {
                out = format!("{} - {}", out, &piece[1..]);
            } else {
                out = format!("{} + {}", out, piece);
            }
        }
        out
    }
}

/// `Z[generators] / (relations = 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    pub generators: Vec<String>,
    pub relations: Vec<IntPolynomial>,
}

impl RingPresentation {
    /// All points over the prime field `F_q`: generator assignments killing
    /// every relation.  Deterministic odometer order.
    pub fn points_mod(&self, q: u64) -> Result<Vec<Vec<u64>>> {
        let k = self.generators.len();
        let total = q.checked_pow(k as u32).ok_or(Error::Overflow("ring point enumeration"))?;
        if total > 10_000_000 {
            return Err(Error::CapExceeded {
                what: "ring point search space",
                value: total,
                cap: 10_000_000,
            });
        }
        let mut out = Vec::new();
        let mut point = vec![0u64; k];
        loop {
            if self.relations.iter().all(|r| r.eval_mod(q, &point) == 0) {
                out.push(point.clone());
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                point[pos] += 1;
                if point[pos] < q {
                    break;
                }
                point[pos] = 0;
            }
        }
    }
}

fn monomial_to_poly(m: &Monomial, num_gens: usize) -> IntPolynomial {
    match m {
        Monomial::Zero => IntPolynomial::zero(),
        Monomial::Term(e) => {
            let mut p = IntPolynomial::zero();
            p.add_term(e.clone(), 1);
            debug_assert_eq!(e.len(), num_gens);
            p
        }
    }
}

fn sum_to_poly(s: &PolySum, num_gens: usize) -> IntPolynomial {
    let mut p = IntPolynomial::zero();
    for t in &s.terms {
        if let Monomial::Term(e) = &t.monomial {
            p.add_term(e.clone(), t.coefficient);
        }
        debug_assert_eq!(t.monomial.is_zero(), false);
        let _ = num_gens;
    }
    p
}

/// The classical base change of a blueprint: monoid relations become
/// binomials, additive relations become differences.  Purely syntactic and
/// deterministic.
pub fn base_change_to_ring(bp: &Blueprint) -> RingPresentation {
    let k = bp.monoid.num_generators();
    let mut relations = Vec::new();
    for (l, r) in &bp.monoid.relations {
        let p = monomial_to_poly(l, k).sub(&monomial_to_poly(r, k));
        if !p.is_zero() {
            relations.push(p);
        }
    }
    for rel in &bp.relations {
        let p = sum_to_poly(&rel.lhs, k).sub(&sum_to_poly(&rel.rhs, k));
        if !p.is_zero() {
            relations.push(p);
        }
    }
    RingPresentation { generators: bp.monoid.generators.clone(), relations }
}

/// A ring morphism `R' -> Z[M]/c` given by the images of the `R'`-generators
/// as formal sums of monoid monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMorphism {
    pub source: RingPresentation,
    pub images: Vec<PolySum>,
}

impl RingMorphism {
    pub fn identity(bp: &Blueprint) -> Self {
        let k = bp.monoid.num_generators();
        let images = (0..k)
            .map(|i| PolySum::from_pairs(&[(1, Monomial::generator(k, i))]))
            .collect();
        RingMorphism { source: base_change_to_ring(bp), images }
    }

    /// Substitute generator images into a source polynomial, expanding in the
    /// monoid ring with window normalization.
    pub fn push_polynomial(&self, p: &IntPolynomial, table: &SaturationTable) -> Result<PolySum> {
        let k = table.pres.num_generators();
        let one = PolySum::from_pairs(&[(1, Monomial::one(k))]);
        let mut acc: Vec<(i64, Monomial)> = Vec::new();
        for (e, &c) in &p.terms {
            let mut prod = one.clone();
            for (i, &x) in e.iter().enumerate() {
                for _ in 0..x {
                    prod = mul_sums(&prod, &self.images[i], table)?;
                }
            }
            for t in &prod.terms {
                acc.push((
                    c.checked_mul(t.coefficient).ok_or(Error::Overflow("sum coefficient"))?,
                    t.monomial.clone(),
                ));
            }
        }
        Ok(PolySum::from_pairs(&acc))
    }

    /// Evaluate the composite `R' -> Z[M]/c -> F_q` at a monoid-generator
    /// assignment over `F_q`.
    pub fn eval_composite_mod(&self, q: u64, monoid_values: &[u64]) -> Vec<u64> {
        self.images.iter().map(|s| eval_sum_mod(s, q, monoid_values)).collect()
    }

    /// Check that each source relation maps to zero in `Z[M]/c`: expand the
    /// image and reduce against the blueprint's additive relations.  The
    /// reduction is bounded; failure to reduce is reported as an error naming
    /// the relation, never silently accepted.
    pub fn check_respects_relations(&self, bp: &Blueprint, table: &SaturationTable) -> Result<()> {
        for rel in &self.source.relations {
            let image = self.push_polynomial(rel, table)?;
            let reduced = reduce_sum(&image, bp, table, 200)?;
            if !reduced.is_zero() {
                return Err(Error::InvalidPresentation(format!(
                    "morphism does not provably respect relation {} within bounds \
                     (residual {})",
                    rel.display(&self.source.generators),
                    reduced.display(&bp.monoid.generators),
                )));
            }
        }
        Ok(())
    }
}

pub fn mul_sums(a: &PolySum, b: &PolySum, table: &SaturationTable) -> Result<PolySum> {
    let mut acc: Vec<(i64, Monomial)> = Vec::new();
    for x in &a.terms {
        for y in &b.terms {
            let m = table.mul_nf(&x.monomial, &y.monomial)?;
            acc.push((
                x.coefficient.checked_mul(y.coefficient).ok_or(Error::Overflow("sum product"))?,
                m,
            ));
        }
    }
    Ok(PolySum::from_pairs(&acc))
}

pub fn eval_sum_mod(s: &PolySum, q: u64, values: &[u64]) -> u64 {
    let mut acc: u64 = 0;
    for t in &s.terms {
        let v = match &t.monomial {
            Monomial::Zero => 0,
            Monomial::Term(e) => {
                let mut prod: u64 = 1;
                for (i, &x) in e.iter().enumerate() {
                    for _ in 0..x {
                        prod = prod * (values[i] % q) % q;
                    }
                }
                prod
            }
        };
        let c_mod = t.coefficient.rem_euclid(q as i64) as u64;
        acc = (acc + c_mod * v) % q;
    }
    acc
}

/// Greedy bounded reduction of a formal sum against the blueprint relations:
/// repeatedly cancel the leading term using a monomial multiple of some
/// relation difference.  Sound but incomplete; a nonzero residual after the
/// step budget means "not provably zero within bounds".
fn reduce_sum(
    s: &PolySum,
    bp: &Blueprint,
    table: &SaturationTable,
    max_steps: usize,
) -> Result<PolySum> {
    let k = bp.monoid.num_generators();
    // Relation differences, as (leading monomial, leading coeff, full sum).
    let mut diffs: Vec<PolySum> = Vec::new();
    for r in &bp.relations {
        let mut pairs: Vec<(i64, Monomial)> =
            r.lhs.terms.iter().map(|t| (t.coefficient, t.monomial.clone())).collect();
        for t in &r.rhs.terms {
            pairs.push((-t.coefficient, t.monomial.clone()));
        }
        let d = PolySum::from_pairs(&pairs);
        if !d.is_zero() {
            diffs.push(d);
        }
    }

    let mut cur = s.clone();
    for _ in 0..max_steps {
        if cur.is_zero() {
            return Ok(cur);
        }
        let lead = cur.terms.last().expect("nonzero sum has a last term").clone();
        let mut progressed = false;
        'search: for d in &diffs {
            let dlead = d.terms.last().expect("nonzero difference").clone();
            // Try multiplier monomials m with m * dlead landing on the lead.
            if let Monomial::Term(le) = &lead.monomial {
                if let Monomial::Term(de) = &dlead.monomial {
                    if de.iter().zip(le.iter()).all(|(a, b)| a <= b) {
                        let me: Vec<u32> = le.iter().zip(de.iter()).map(|(a, b)| a - b).collect();
                        let m = Monomial::Term(me);
                        let shifted = mul_sums(
                            &PolySum::from_pairs(&[(1, m)]),
                            d,
                            table,
                        )?;
                        let slead = match shifted.terms.last() {
                            Some(t) => t.clone(),
                            None => continue,
                        };
                        if slead.monomial == lead.monomial && lead.coefficient % slead.coefficient == 0
                        {
                            let f = -(lead.coefficient / slead.coefficient);
                            let mut pairs: Vec<(i64, Monomial)> = cur
                                .terms
                                .iter()
                                .map(|t| (t.coefficient, t.monomial.clone()))
                                .collect();
                            for t in &shifted.terms {
                                pairs.push((
                                    f.checked_mul(t.coefficient)
                                        .ok_or(Error::Overflow("reduction coefficient"))?,
                                    t.monomial.clone(),
                                ));
                            }
                            cur = PolySum::from_pairs(&pairs);
                            progressed = true;
                            break 'search;
                        }
                    }
                }
            }
            let _ = k;
        }
        if !progressed {
            return Ok(cur);
        }
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blueprint::{CoefficientRing, PolyRelation};
    use crate::presentation::MonoidPresentation;
    use crate::saturate::saturate;

    fn det_blueprint() -> Blueprint {
        let m = MonoidPresentation::free(&["T1", "T2", "T3", "T4"], 16);
        let lhs = PolySum::from_pairs(&[(1, m.monomial(&[(0, 1), (3, 1)]))]);
        let rhs =
            PolySum::from_pairs(&[(1, m.monomial(&[(1, 1), (2, 1)])), (1, m.monomial(&[]))]);
        Blueprint::new(m, CoefficientRing::Int, vec![PolyRelation { lhs, rhs }]).unwrap()
    }

    #[test]
    fn base_change_of_determinant_relation() {
        let rp = base_change_to_ring(&det_blueprint());
        assert_eq!(rp.relations.len(), 1);
        assert_eq!(
            rp.relations[0].display(&rp.generators),
            "-1 - T2*T3 + T1*T4"
        );
    }

    #[test]
    fn base_change_of_zero_divisor() {
        let m = MonoidPresentation::new(
            vec!["S".into(), "T".into()],
            vec![(Monomial::Term(vec![1, 1]), Monomial::Zero)],
            8,
        )
        .unwrap();
        let bp = Blueprint::pure(m, CoefficientRing::Int).unwrap();
        let rp = base_change_to_ring(&bp);
        assert_eq!(rp.relations.len(), 1);
        assert_eq!(rp.relations[0].display(&rp.generators), "S*T");
    }

    #[test]
    fn determinant_points_over_f2() {
        let rp = base_change_to_ring(&det_blueprint());
        // t1*t4 - t2*t3 = 1 over F_2 has six solutions.
        assert_eq!(rp.points_mod(2).unwrap().len(), 6);
    }

    #[test]
    fn identity_morphism_respects_relations() {
        let bp = det_blueprint();
        let table = saturate(&bp.monoid).unwrap();
        let phi = RingMorphism::identity(&bp);
        phi.check_respects_relations(&bp, &table).unwrap();
    }

    #[test]
    fn morphism_killing_nilpotent_checks_out() {
        // R' = Z[T,E]/(E^2) mapping onto Z[T] with E -> 0.
        let bp = Blueprint::pure(MonoidPresentation::free(&["T"], 8), CoefficientRing::Int)
            .unwrap();
        let table = saturate(&bp.monoid).unwrap();
        let mut e2 = IntPolynomial::zero();
        e2.add_term(vec![0, 2], 1);
        let source = RingPresentation {
            generators: vec!["T".into(), "E".into()],
            relations: vec![e2],
        };
        let phi = RingMorphism {
            source,
            images: vec![
                PolySum::from_pairs(&[(1, Monomial::generator(1, 0))]),
                PolySum::zero(),
            ],
        };
        phi.check_respects_relations(&bp, &table).unwrap();
    }
}
