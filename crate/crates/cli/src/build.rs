//! Assembly of validated core objects out of parsed documents.

use std::collections::BTreeSet;

use bluepoint_core::blueprint::{Blueprint, CoefficientRing, PolySum};
use bluepoint_core::category::{AddMonoid, FiniteBObject};
use bluepoint_core::presentation::{localize, MonoidPresentation};
use bluepoint_core::ringpres::RingPresentation;
use bluepoint_core::scheme::psi::F1SchemeWithRelations;
use bluepoint_core::{AffinePiece, GluedScheme, Gluing, PrimeIdeal};

use crate::doc::{
    AddTableDoc, BObjectDoc, BlueprintDoc, ChartDoc, DocError, Document, F1swrDoc, GluingDoc,
    MonoidDoc, RingDoc, SchemeDoc,
};
use crate::parse::{parse_monoid_relation, parse_monomial, parse_poly_relation, parse_polysum,
    parse_ring_relation};

fn core_err(context: &str, e: bluepoint_core::Error) -> DocError {
    use bluepoint_core::Error as E;
    let msg = format!("{context}: {e}");
    match e {
        E::BoundTooSmall { .. }
        | E::BoundExceeded { .. }
        | E::SaturationIncomplete(_)
        | E::CapExceeded { .. }
        | E::Overflow(_) => DocError::bound(msg),
        _ => DocError::new(msg),
    }
}

fn coefficient_ring(tag: &str, context: &str) -> Result<CoefficientRing, DocError> {
    match tag {
        "N" => Ok(CoefficientRing::Nat),
        "Z" => Ok(CoefficientRing::Int),
        other => Err(DocError::new(format!(
            "{context}: coefficients must be \"N\" or \"Z\", got \"{other}\""
        ))),
    }
}

pub fn build_monoid(doc: &MonoidDoc, bound: Option<u32>) -> Result<MonoidPresentation, DocError> {
    let context = "monoid".to_string();
    let mut relations = Vec::with_capacity(doc.relations.len());
    for (i, r) in doc.relations.iter().enumerate() {
        relations.push(parse_monoid_relation(r, &doc.generators, &format!("{context} relation {i}"))?);
    }
    MonoidPresentation::new(
        doc.generators.clone(),
        relations,
        bound.unwrap_or(doc.degree_bound),
    )
    .map_err(|e| core_err(&context, e))
}

fn build_blueprint_parts(
    context: &str,
    generators: &[String],
    coefficients: &str,
    monoid_relations: &[String],
    relations: &[String],
    degree_bound: u32,
    bound: Option<u32>,
) -> Result<Blueprint, DocError> {
    let ring = coefficient_ring(coefficients, context)?;
    let mut mrels = Vec::with_capacity(monoid_relations.len());
    for (i, r) in monoid_relations.iter().enumerate() {
        mrels.push(parse_monoid_relation(r, generators, &format!("{context} monoid relation {i}"))?);
    }
    let monoid =
        MonoidPresentation::new(generators.to_vec(), mrels, bound.unwrap_or(degree_bound))
            .map_err(|e| core_err(context, e))?;
    let mut prels = Vec::with_capacity(relations.len());
    for (i, r) in relations.iter().enumerate() {
        prels.push(parse_poly_relation(r, generators, &format!("{context} relation {i}"))?);
    }
    Blueprint::new(monoid, ring, prels).map_err(|e| core_err(context, e))
}

pub fn build_blueprint(doc: &BlueprintDoc, bound: Option<u32>) -> Result<Blueprint, DocError> {
    build_blueprint_parts(
        "blueprint",
        &doc.generators,
        &doc.coefficients,
        &doc.monoid_relations,
        &doc.relations,
        doc.degree_bound,
        bound,
    )
}

fn build_chart(doc: &ChartDoc, bound: Option<u32>) -> Result<AffinePiece, DocError> {
    let context = format!("chart `{}`", doc.name);
    let bp = build_blueprint_parts(
        &context,
        &doc.generators,
        &doc.coefficients,
        &doc.monoid_relations,
        &doc.relations,
        doc.degree_bound,
        bound,
    )?;
    AffinePiece::new(bp).map_err(|e| core_err(&context, e))
}

fn prime_from_names(
    names: &[String],
    generators: &[String],
    context: &str,
) -> Result<PrimeIdeal, DocError> {
    let mut generator_subset = BTreeSet::new();
    for n in names {
        let i = generators
            .iter()
            .position(|g| g == n)
            .ok_or_else(|| DocError::new(format!("{context}: unknown generator `{n}`")))?;
        generator_subset.insert(i);
    }
    Ok(PrimeIdeal { generator_subset })
}

/// Images for every original generator of `src`, parsed over the localized
/// `dst` presentation (which appends `X^-1` generators in face order).
fn gluing_images(
    map: &std::collections::BTreeMap<String, String>,
    src: &MonoidPresentation,
    dst: &MonoidPresentation,
    dst_prime: &PrimeIdeal,
    context: &str,
) -> Result<Vec<bluepoint_core::Monomial>, DocError> {
    let localized = localize(dst, dst_prime).map_err(|e| core_err(context, e))?;
    for key in map.keys() {
        if !src.generators.iter().any(|g| g == key) {
            return Err(DocError::new(format!("{context}: unknown generator `{key}`")));
        }
    }
    src.generators
        .iter()
        .map(|g| {
            let image = map.get(g).ok_or_else(|| {
                DocError::new(format!("{context}: missing image for generator `{g}`"))
            })?;
            parse_monomial(image, &localized.generators, &format!("{context}, image of `{g}`"))
        })
        .collect()
}

fn build_charts_and_gluings(
    charts: &[ChartDoc],
    gluings: &[GluingDoc],
    bound: Option<u32>,
) -> Result<GluedScheme, DocError> {
    if charts.is_empty() {
        return Err(DocError::new("scheme: at least one chart is required"));
    }
    let mut names = Vec::new();
    for c in charts {
        if names.contains(&c.name) {
            return Err(DocError::new(format!("scheme: duplicate chart name `{}`", c.name)));
        }
        names.push(c.name.clone());
    }
    let pieces: Vec<AffinePiece> =
        charts.iter().map(|c| build_chart(c, bound)).collect::<Result<_, _>>()?;
    let mut glue = Vec::with_capacity(gluings.len());
    for (i, g) in gluings.iter().enumerate() {
        let context = format!("gluing {i}");
        let chart_index = |n: &str| {
            names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| DocError::new(format!("{context}: unknown chart `{n}`")))
        };
        let left = chart_index(&g.left)?;
        let right = chart_index(&g.right)?;
        let left_pres = pieces[left].monoid();
        let right_pres = pieces[right].monoid();
        let left_prime =
            prime_from_names(&g.left_prime, &left_pres.generators, &format!("{context} left_prime"))?;
        let right_prime = prime_from_names(
            &g.right_prime,
            &right_pres.generators,
            &format!("{context} right_prime"),
        )?;
        let forward =
            gluing_images(&g.forward, left_pres, right_pres, &right_prime, &format!("{context} forward"))?;
        let backward =
            gluing_images(&g.backward, right_pres, left_pres, &left_prime, &format!("{context} backward"))?;
        glue.push(Gluing { left, right, left_prime, right_prime, forward, backward });
    }
    GluedScheme::new(pieces, glue).map_err(|e| core_err("scheme", e))
}

pub fn build_scheme(doc: &SchemeDoc, bound: Option<u32>) -> Result<GluedScheme, DocError> {
    build_charts_and_gluings(&doc.charts, &doc.gluings, bound)
}

fn build_ring(doc: &RingDoc) -> Result<RingPresentation, DocError> {
    let mut relations = Vec::with_capacity(doc.relations.len());
    for (i, r) in doc.relations.iter().enumerate() {
        relations.push(parse_ring_relation(
            r,
            &doc.generators,
            &format!("comparison_ring relation {i}"),
        )?);
    }
    Ok(RingPresentation { generators: doc.generators.clone(), relations })
}

pub fn build_f1swr(doc: &F1swrDoc, bound: Option<u32>) -> Result<F1SchemeWithRelations, DocError> {
    let scheme = build_charts_and_gluings(&doc.charts, &doc.gluings, bound)?;
    let ring = build_ring(&doc.comparison_ring)?;
    if doc.chart_images.len() != doc.charts.len() {
        return Err(DocError::new(format!(
            "f1swr: {} chart_images for {} charts",
            doc.chart_images.len(),
            doc.charts.len()
        )));
    }
    let mut images_per_chart: Vec<Vec<PolySum>> = Vec::with_capacity(doc.chart_images.len());
    for (ci, map) in doc.chart_images.iter().enumerate() {
        let context = format!("chart_images[{ci}]");
        for key in map.keys() {
            if !ring.generators.iter().any(|g| g == key) {
                return Err(DocError::new(format!(
                    "{context}: `{key}` is not a comparison-ring generator"
                )));
            }
        }
        let chart_gens = &doc.charts[ci].generators;
        let images = ring
            .generators
            .iter()
            .map(|g| {
                let image = map.get(g).ok_or_else(|| {
                    DocError::new(format!("{context}: missing image for `{g}`"))
                })?;
                parse_polysum(image, chart_gens, &format!("{context}, image of `{g}`"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        images_per_chart.push(images);
    }
    F1SchemeWithRelations::new(scheme, ring, images_per_chart)
        .map_err(|e| core_err("f1swr", e))
}

pub fn build_bobject(doc: &BObjectDoc) -> Result<FiniteBObject, DocError> {
    let monoid = AddMonoid { names: doc.monoid.names.clone(), add: doc.monoid.add.clone() };
    if doc.carrier.is_empty() {
        return Err(DocError::new("bobject: carrier needs a basepoint"));
    }
    let mut gen_image = Vec::with_capacity(doc.carrier.len().saturating_sub(1));
    for key in doc.generator_images.keys() {
        if !doc.carrier[1..].iter().any(|c| c == key) {
            return Err(DocError::new(format!(
                "bobject: `{key}` is not a non-basepoint carrier element"
            )));
        }
    }
    for c in &doc.carrier[1..] {
        let target = doc
            .generator_images
            .get(c)
            .ok_or_else(|| DocError::new(format!("bobject: missing image for carrier `{c}`")))?;
        let idx = doc
            .monoid
            .names
            .iter()
            .position(|m| m == target)
            .ok_or_else(|| {
                DocError::new(format!("bobject: unknown monoid element `{target}`"))
            })?;
        gen_image.push(idx);
    }
    FiniteBObject::new(doc.carrier.clone(), monoid, gen_image)
        .map_err(|e| core_err("bobject", e))
}

/// Render an object back into its document form (used by the tensor command,
/// whose output is itself a valid input document).
pub fn bobject_to_doc(obj: &FiniteBObject) -> BObjectDoc {
    let mut generator_images = std::collections::BTreeMap::new();
    for (i, c) in obj.carrier.iter().enumerate().skip(1) {
        generator_images.insert(c.clone(), obj.monoid.names[obj.gen_image[i - 1]].clone());
    }
    BObjectDoc {
        kind: "bobject".to_string(),
        carrier: obj.carrier.clone(),
        monoid: AddTableDoc { names: obj.monoid.names.clone(), add: obj.monoid.add.clone() },
        generator_images,
    }
}

/// Anything that presents a scheme, viewed as one: monoids and blueprints
/// become single affine charts.
pub fn document_scheme(doc: &Document, bound: Option<u32>) -> Result<GluedScheme, DocError> {
    match doc {
        Document::Monoid(m) => {
            let pres = build_monoid(m, bound)?;
            let piece = AffinePiece::monoidal(pres).map_err(|e| core_err("monoid", e))?;
            Ok(GluedScheme::affine(piece))
        }
        Document::Blueprint(b) => {
            let bp = build_blueprint(b, bound)?;
            let piece = AffinePiece::new(bp).map_err(|e| core_err("blueprint", e))?;
            Ok(GluedScheme::affine(piece))
        }
        Document::Scheme(s) => build_scheme(s, bound),
        Document::F1swr(f) => Ok(build_f1swr(f, bound)?.scheme),
        Document::BObject(_) => Err(DocError::new(
            "a bobject document has no scheme of points; pass a monoid, blueprint, scheme, or f1swr",
        )),
    }
}
