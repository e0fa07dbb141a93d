//! Fixture presentations shared by the integration tests: the standing
//! examples every suite exercises (free lines, the coordinate cross, a
//! torsion unit, the two four-variable relation blueprints, and `2T = 1`).

#![allow(dead_code)]

use bluepoint_core::blueprint::{Blueprint, CoefficientRing, PolyRelation, PolySum, PolyTerm};
use bluepoint_core::presentation::MonoidPresentation;
use bluepoint_core::scheme::{AffinePiece, GluedScheme};
use bluepoint_core::{F1nElem, GroupRingElement, MonoidHom};

pub fn free_monoid(k: usize) -> MonoidPresentation {
    let names: Vec<String> = (1..=k).map(|i| format!("T{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    MonoidPresentation::free(&refs, 8)
}

/// Two coordinate axes: `S*T = 0`.
pub fn cross_monoid() -> MonoidPresentation {
    let m = MonoidPresentation::free(&["S", "T"], 8);
    MonoidPresentation::new(
        m.generators.clone(),
        vec![(m.monomial(&[(0, 1), (1, 1)]), bluepoint_core::Monomial::Zero)],
        8,
    )
    .unwrap()
}

/// An order-three unit: `U^3 = 1`.
pub fn unit3_monoid() -> MonoidPresentation {
    let m = MonoidPresentation::free(&["U"], 8);
    MonoidPresentation::new(
        m.generators.clone(),
        vec![(m.monomial(&[(0, 3)]), m.monomial(&[]))],
        8,
    )
    .unwrap()
}

/// An idempotent generator: `T^2 = T`.
pub fn idem_monoid() -> MonoidPresentation {
    let m = MonoidPresentation::free(&["T"], 8);
    MonoidPresentation::new(
        m.generators.clone(),
        vec![(m.monomial(&[(0, 2)]), m.monomial(&[(0, 1)]))],
        8,
    )
    .unwrap()
}

/// `T1 + T2 = T3 + T4` on the free four-generator monoid.
pub fn sum4_blueprint() -> Blueprint {
    let m = MonoidPresentation::free(&["T1", "T2", "T3", "T4"], 8);
    let rel = PolyRelation {
        lhs: PolySum::from_pairs(&[(1, m.monomial(&[(0, 1)])), (1, m.monomial(&[(1, 1)]))]),
        rhs: PolySum::from_pairs(&[(1, m.monomial(&[(2, 1)])), (1, m.monomial(&[(3, 1)]))]),
    };
    Blueprint::new(m, CoefficientRing::Nat, vec![rel]).unwrap()
}

/// `T1*T4 = T2*T3 + 1` on the free four-generator monoid (determinant one).
pub fn sl2_blueprint() -> Blueprint {
    let m = MonoidPresentation::free(&["T1", "T2", "T3", "T4"], 16);
    let lhs = PolySum::from_pairs(&[(1, m.monomial(&[(0, 1), (3, 1)]))]);
    let rhs = PolySum::from_pairs(&[(1, m.monomial(&[(1, 1), (2, 1)])), (1, m.monomial(&[]))]);
    Blueprint::new(m, CoefficientRing::Int, vec![PolyRelation { lhs, rhs }]).unwrap()
}

/// `2T = 1` on the free line: no morphism to any `F1^n` satisfies it, but the
/// integral points survive.
pub fn twot1_blueprint() -> Blueprint {
    let m = MonoidPresentation::free(&["T"], 8);
    let rel = PolyRelation {
        lhs: PolySum::from_pairs(&[(2, m.monomial(&[(0, 1)]))]),
        rhs: PolySum::from_pairs(&[(1, m.monomial(&[]))]),
    };
    Blueprint::new(m, CoefficientRing::Nat, vec![rel]).unwrap()
}

fn affine_monoidal(m: MonoidPresentation) -> GluedScheme {
    GluedScheme::affine(AffinePiece::monoidal(m).unwrap())
}

fn affine_bp(bp: Blueprint) -> GluedScheme {
    GluedScheme::affine(AffinePiece::new(bp).unwrap())
}

/// The standing examples, labeled. Everything a desk-check should sweep.
pub fn example_schemes() -> Vec<(&'static str, GluedScheme)> {
    vec![
        ("a1", GluedScheme::affine_line()),
        ("gm", GluedScheme::multiplicative_group()),
        ("p1", GluedScheme::projective_line()),
        ("free2", affine_monoidal(free_monoid(2))),
        ("free4", affine_monoidal(free_monoid(4))),
        ("cross", affine_monoidal(cross_monoid())),
        ("unit3", affine_monoidal(unit3_monoid())),
        ("idem", affine_monoidal(idem_monoid())),
        ("sum4", affine_bp(sum4_blueprint())),
        ("sl2", affine_bp(sl2_blueprint())),
        ("twot1", affine_bp(twot1_blueprint())),
    ]
}

/// The torsion-free subset of `example_schemes` (where `P` is polynomial).
/// `idem` stays: its unit groups are trivial (`T ~ 1` after completion).
pub fn torsion_free_examples() -> Vec<(&'static str, GluedScheme)> {
    example_schemes().into_iter().filter(|(name, _)| *name != "unit3").collect()
}

/// Evaluate one side of a relation under an assignment, in `Z[Z_n]` directly.
pub fn eval_side(sum: &PolySum, hom: &MonoidHom) -> GroupRingElement {
    let mut out = GroupRingElement::zero(hom.n);
    for PolyTerm { monomial, coefficient } in &sum.terms {
        if let Some(e) = hom.eval(monomial) {
            out.add_term(e, *coefficient);
        }
    }
    out
}

/// Count satisfying assignments by walking all `(n+1)^k` of them, evaluating
/// both relation layers with plain group-ring arithmetic.
pub fn brute_force_count(bp: &Blueprint, n: u64) -> u64 {
    let k = bp.monoid.num_generators();
    let mut images: Vec<F1nElem> = vec![None; k];
    let mut count = 0u64;
    loop {
        let hom = MonoidHom { n, images: images.clone() };
        let monoid_ok =
            bp.monoid.relations.iter().all(|(l, r)| hom.eval(l) == hom.eval(r));
        if monoid_ok
            && bp.relations.iter().all(|rel| eval_side(&rel.lhs, &hom) == eval_side(&rel.rhs, &hom))
        {
            count += 1;
        }
        // Odometer over None, Some(0), ..., Some(n-1).
        let mut pos = 0;
        loop {
            if pos == k {
                return count;
            }
            images[pos] = match images[pos] {
                None => Some(0),
                Some(v) if v + 1 < n => Some(v + 1),
                Some(_) => {
                    images[pos] = None;
                    pos += 1;
                    continue;
                }
            };
            break;
        }
    }
}
