//! Chart data for glued schemes: affine pieces and explicit gluings along
//! localizations, validated as isomorphisms of localized presentations.

use std::collections::BTreeSet;

use crate::blueprint::{validate_blueprint, Blueprint, ClosureCaps, CoefficientRing};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::presentation::{localize, MonoidPresentation};
use crate::primes::PrimeIdeal;
use crate::saturate::{saturate, SaturationTable};

/// One affine chart: a validated blueprint (a pure `σ(M)` when the chart is
/// monoidal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePiece {
    pub blueprint: Blueprint,
}

impl AffinePiece {
    pub fn new(blueprint: Blueprint) -> Result<Self> {
        let report = validate_blueprint(&blueprint, &ClosureCaps::default())?;
        if !report.ok {
            return Err(Error::InvalidPresentation(
                "chart blueprint merges atomic classes; not usable as a chart".into(),
            ));
        }
        Ok(AffinePiece { blueprint })
    }

    pub fn monoidal(m: MonoidPresentation) -> Result<Self> {
        AffinePiece::new(Blueprint::pure(m, CoefficientRing::Nat)?)
    }

    pub fn is_monoidal(&self) -> bool {
        self.blueprint.relations.is_empty()
    }

    pub fn monoid(&self) -> &MonoidPresentation {
        &self.blueprint.monoid
    }
}

/// Identification of two charts along localizations at the given primes.
/// `forward` gives, for each *original* generator of the left chart, its
/// image in the localized right presentation (inverse generators appended in
/// face order by `localize`); `backward` is symmetric. Images of inverted
/// generators are derived, and the induced maps must be mutually inverse
/// isomorphisms of the localized presentations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub left: usize,
    pub right: usize,
    pub left_prime: PrimeIdeal,
    pub right_prime: PrimeIdeal,
    pub forward: Vec<Monomial>,
    pub backward: Vec<Monomial>,
}

/// Face of a prime inside a chart with `k` generators: the generator indices
/// that localization inverts, in ascending order.
pub fn face_of(prime: &PrimeIdeal, k: usize) -> Vec<usize> {
    (0..k).filter(|i| !prime.generator_subset.contains(i)).collect()
}

/// For each generator of a localized presentation, the index of its formal
/// inverse (if it has one).
fn inverse_pairing(k: usize, face: &[usize]) -> Vec<Option<usize>> {
    let mut pairing = vec![None; k + face.len()];
    for (pos, &f) in face.iter().enumerate() {
        pairing[f] = Some(k + pos);
        pairing[k + pos] = Some(f);
    }
    pairing
}

fn invert_monomial(m: &Monomial, pairing: &[Option<usize>]) -> Option<Monomial> {
    let e = m.exponents()?;
    let mut out = vec![0u32; e.len()];
    for (j, &x) in e.iter().enumerate() {
        if x > 0 {
            out[pairing[j]?] += x;
        }
    }
    Some(Monomial::Term(out))
}

/// Substitute generator images into a monomial over the source presentation.
pub fn push_through(m: &Monomial, images: &[Monomial], target_width: usize) -> Monomial {
    match m.exponents() {
        None => Monomial::Zero,
        Some(e) => {
            let mut acc = Monomial::one(target_width);
            for (i, &x) in e.iter().enumerate() {
                for _ in 0..x {
                    acc = acc.mul(&images[i]);
                }
            }
            acc
        }
    }
}

/// Everything `points` and the count functions need about one direction of a
/// gluing: the localized presentations, their tables, and full generator
/// image lists covering the appended inverses.
pub struct GluingAnalysis {
    pub loc_left: MonoidPresentation,
    pub loc_right: MonoidPresentation,
    pub table_left: SaturationTable,
    pub table_right: SaturationTable,
    pub forward_full: Vec<Monomial>,
    pub backward_full: Vec<Monomial>,
}

fn extend_images(
    src_pres: &MonoidPresentation,
    src_prime: &PrimeIdeal,
    given: &[Monomial],
    loc_target: &MonoidPresentation,
    target_chart_gens: usize,
    target_prime: &PrimeIdeal,
) -> Result<Vec<Monomial>> {
    let k = src_pres.num_generators();
    if given.len() != k {
        return Err(Error::GluingInconsistent(format!(
            "gluing gives {} images for {} generators",
            given.len(),
            k
        )));
    }
    let width = loc_target.num_generators();
    for m in given {
        if let Some(e) = m.exponents() {
            if e.len() != width {
                return Err(Error::GluingInconsistent(
                    "image width does not match the localized target".into(),
                ));
            }
        }
    }
    let target_face = face_of(target_prime, target_chart_gens);
    let pairing = inverse_pairing(target_chart_gens, &target_face);
    let src_face = face_of(src_prime, k);
    let mut full = given.to_vec();
    for &f in &src_face {
        let inv = invert_monomial(&given[f], &pairing).ok_or_else(|| {
            Error::GluingInconsistent(format!(
                "generator {} is inverted on the overlap but its image {} is not invertible",
                src_pres.generators[f],
                given[f].display(&loc_target.generators)
            ))
        })?;
        full.push(inv);
    }
    Ok(full)
}

/// Validate one gluing and return its analysis. Checks, by normal-form
/// comparison in the localized targets, that both induced maps are
/// homomorphisms and two-sided inverses of each other.
pub fn analyze_gluing(charts: &[AffinePiece], g: &Gluing) -> Result<GluingAnalysis> {
    if g.left >= charts.len() || g.right >= charts.len() || g.left == g.right {
        return Err(Error::GluingInconsistent(format!(
            "gluing references charts {} and {}",
            g.left, g.right
        )));
    }
    let left_pres = charts[g.left].monoid();
    let right_pres = charts[g.right].monoid();
    let loc_left = localize(left_pres, &g.left_prime)?;
    let loc_right = localize(right_pres, &g.right_prime)?;
    let forward_full = extend_images(
        left_pres,
        &g.left_prime,
        &g.forward,
        &loc_right,
        right_pres.num_generators(),
        &g.right_prime,
    )?;
    let backward_full = extend_images(
        right_pres,
        &g.right_prime,
        &g.backward,
        &loc_left,
        left_pres.num_generators(),
        &g.left_prime,
    )?;
    let table_left = saturate(&loc_left)?;
    let table_right = saturate(&loc_right)?;

    let check_hom = |src: &MonoidPresentation,
                     images: &[Monomial],
                     target: &SaturationTable,
                     width: usize|
     -> Result<()> {
        for (l, r) in &src.relations {
            let lp = target.normal_form(&push_through(l, images, width))?;
            let rp = target.normal_form(&push_through(r, images, width))?;
            if lp != rp {
                return Err(Error::GluingInconsistent(format!(
                    "gluing map breaks the relation {} = {}",
                    l.display(&src.generators),
                    r.display(&src.generators)
                )));
            }
        }
        Ok(())
    };
    let wl = loc_left.num_generators();
    let wr = loc_right.num_generators();
    check_hom(&loc_left, &forward_full, &table_right, wr)?;
    check_hom(&loc_right, &backward_full, &table_left, wl)?;

    for i in 0..wl {
        let round = push_through(&forward_full[i], &backward_full, wl);
        if table_left.normal_form(&round)? != table_left.normal_form(&Monomial::generator(wl, i))? {
            return Err(Error::GluingInconsistent(format!(
                "gluing is not an isomorphism: round trip moves {}",
                loc_left.generators[i]
            )));
        }
    }
    for j in 0..wr {
        let round = push_through(&backward_full[j], &forward_full, wr);
        if table_right.normal_form(&round)?
            != table_right.normal_form(&Monomial::generator(wr, j))?
        {
            return Err(Error::GluingInconsistent(format!(
                "gluing is not an isomorphism: round trip moves {}",
                loc_right.generators[j]
            )));
        }
    }
    Ok(GluingAnalysis { loc_left, loc_right, table_left, table_right, forward_full, backward_full })
}

/// A scheme as explicit chart data. Construction validates every chart and
/// every gluing.
#[derive(Debug, Clone)]
pub struct GluedScheme {
    pub charts: Vec<AffinePiece>,
    pub gluings: Vec<Gluing>,
}

impl GluedScheme {
    pub fn new(charts: Vec<AffinePiece>, gluings: Vec<Gluing>) -> Result<Self> {
        if charts.is_empty() {
            return Err(Error::InvalidPresentation("a scheme needs at least one chart".into()));
        }
        for g in &gluings {
            analyze_gluing(&charts, g)?;
        }
        Ok(GluedScheme { charts, gluings })
    }

    pub fn affine(piece: AffinePiece) -> Self {
        GluedScheme { charts: vec![piece], gluings: Vec::new() }
    }

    /// The affine line: one free generator.
    pub fn affine_line() -> Self {
        GluedScheme::affine(
            AffinePiece::monoidal(MonoidPresentation::free(&["T"], 8)).expect("valid chart"),
        )
    }

    /// The multiplicative group: `T` with an inverse.
    pub fn multiplicative_group() -> Self {
        let m = MonoidPresentation::new(
            vec!["T".into(), "T^-1".into()],
            vec![(Monomial::Term(vec![1, 1]), Monomial::one(2))],
            8,
        )
        .expect("valid presentation");
        GluedScheme::affine(AffinePiece::monoidal(m).expect("valid chart"))
    }

    /// The projective line: two free charts glued along `T ↔ T'^-1`.
    pub fn projective_line() -> Self {
        let c0 = AffinePiece::monoidal(MonoidPresentation::free(&["T"], 8)).expect("valid chart");
        let c1 = AffinePiece::monoidal(MonoidPresentation::free(&["T'"], 8)).expect("valid chart");
        let open = PrimeIdeal { generator_subset: BTreeSet::new() };
        // Both localizations have generators [X, X^-1]; the map swaps them.
        let swap = vec![Monomial::Term(vec![0, 1])];
        let gluing = Gluing {
            left: 0,
            right: 1,
            left_prime: open.clone(),
            right_prime: open,
            forward: swap.clone(),
            backward: swap,
        };
        GluedScheme::new(vec![c0, c1], vec![gluing]).expect("valid gluing")
    }
}
