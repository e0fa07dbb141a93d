//! Blueprints: a pointed monoid together with additive relations imposed on
//! its semiring (or ring) of formal sums.
//!
//! A blueprint quotients `N[M]` (or `Z[M]`) by the congruence its relations
//! generate.  Two health conditions matter:
//!
//! * the quotient map is onto by construction;
//! * distinct monomials must stay distinct in the quotient — checked by
//!   [`validate_blueprint`], a bounded closure over formal-sum equations.
//!
//! Morphisms into `F1^n` are monoid morphisms whose induced map on formal
//! sums respects every relation inside the group ring `Z[Z_n]`; see
//! [`is_compatible`] and [`hom_b`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::groupring::GroupRingElement;
use crate::monomial::Monomial;
use crate::presentation::MonoidPresentation;
use crate::primes::PrimeIdeal;
use crate::saturate::{hom_monoid, saturate, MonoidHom, SaturationTable};

/// Where relation coefficients live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientRing {
    /// Natural-number sums; coefficients strictly positive.
    Nat,
    /// Integer sums; coefficients nonzero, either sign.
    Int,
}

/// One `coefficient * monomial` summand.  The absorbing monomial never
/// appears: it is the empty sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyTerm {
    pub monomial: Monomial,
    pub coefficient: i64,
}

/// A normalized formal sum: terms sorted by monomial, like terms combined,
/// zero coefficients and absorbed monomials dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolySum {
    pub terms: Vec<PolyTerm>,
}

impl PolySum {
    pub fn zero() -> Self {
        PolySum { terms: Vec::new() }
    }

    /// Build from unsorted (coefficient, monomial) pairs.
    pub fn from_pairs(pairs: &[(i64, Monomial)]) -> Self {
        let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
        for (c, m) in pairs {
            if *c == 0 || m.is_zero() {
                continue;
            }
            let e = acc.entry(m.clone()).or_insert(0);
            *e += c;
            if *e == 0 {
                acc.remove(m);
            }
        }
        PolySum {
            terms: acc
                .into_iter()
                .map(|(monomial, coefficient)| PolyTerm { monomial, coefficient })
                .collect(),
        }
    }

    /// Rewrite every monomial to its congruence normal form and re-combine.
    pub fn normalize(&self, table: &SaturationTable) -> Result<PolySum> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            pairs.push((t.coefficient, table.normal_form(&t.monomial)?));
        }
        Ok(PolySum::from_pairs(&pairs))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The sum viewed as a single monomial class, if it is one: the empty sum
    /// is the absorbing class, a lone coefficient-1 term is its monomial.
    fn as_single_monomial(&self) -> Option<Monomial> {
        match self.terms.as_slice() {
            [] => Some(Monomial::Zero),
            [t] if t.coefficient == 1 => Some(t.monomial.clone()),
            _ => None,
        }
    }

    fn max_abs_coefficient(&self) -> i64 {
        self.terms.iter().map(|t| t.coefficient.abs()).max().unwrap_or(0)
    }

    /// Multiply every monomial by `m`, renormalizing within the window.
    fn mul_monomial(&self, m: &Monomial, table: &SaturationTable) -> Result<PolySum> {
        let mut pairs = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            pairs.push((t.coefficient, table.mul_nf(&t.monomial, m)?));
        }
        Ok(PolySum::from_pairs(&pairs))
    }

    /// Add `sign * m` to the sum (`sign` is ±1).
    fn add_signed(&self, m: &Monomial, sign: i64) -> PolySum {
        let mut pairs: Vec<(i64, Monomial)> =
            self.terms.iter().map(|t| (t.coefficient, t.monomial.clone())).collect();
        pairs.push((sign, m.clone()));
        PolySum::from_pairs(&pairs)
    }

    /// Can `sign * m` be added while keeping a natural-number sum?
    fn stays_natural_after(&self, m: &Monomial, sign: i64) -> bool {
        if sign > 0 {
            return true;
        }
        self.terms.iter().any(|t| t.monomial == *m && t.coefficient >= 1)
    }

    /// Evaluate under a morphism into `F1^n`: monomials hitting zero drop out,
    /// the rest land in the group ring `Z[Z_n]`.
    pub fn evaluate(&self, hom: &MonoidHom) -> GroupRingElement {
        let mut out = GroupRingElement::zero(hom.n);
        for t in &self.terms {
            if let Some(e) = hom.eval(&t.monomial) {
                out.add_term(e, t.coefficient);
            }
        }
        out
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| match (t.coefficient, t.monomial.is_one()) {
                (c, true) => format!("{}", c),
                (1, false) => t.monomial.display(names),
                (c, false) => format!("{}*{}", c, t.monomial.display(names)),
            })
            .collect();
        parts.join(" + ")
    }
}

/// One generating equation `lhs = rhs` between formal sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRelation {
    pub lhs: PolySum,
    pub rhs: PolySum,
}

impl PolyRelation {
    pub fn display(&self, names: &[String]) -> String {
        format!("{} = {}", self.lhs.display(names), self.rhs.display(names))
    }
}

/// A monoid presentation plus polynomial relations over `N` or `Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blueprint {
    pub monoid: MonoidPresentation,
    pub coefficient_ring: CoefficientRing,
    pub relations: Vec<PolyRelation>,
}

impl Blueprint {
    /// Construct and normalize.  Relations are rewritten to congruence normal
    /// forms; coefficient signs are checked against the coefficient ring.
    pub fn new(
        monoid: MonoidPresentation,
        coefficient_ring: CoefficientRing,
        relations: Vec<PolyRelation>,
    ) -> Result<Blueprint> {
        let table = saturate(&monoid)?;
        let mut normalized = Vec::with_capacity(relations.len());
        for r in relations {
            let lhs = r.lhs.normalize(&table)?;
            let rhs = r.rhs.normalize(&table)?;
            if coefficient_ring == CoefficientRing::Nat {
                for t in lhs.terms.iter().chain(rhs.terms.iter()) {
                    if t.coefficient < 0 {
                        return Err(Error::InvalidPresentation(format!(
                            "negative coefficient {} in an N-coefficient relation",
                            t.coefficient
                        )));
                    }
                }
            }
            normalized.push(PolyRelation { lhs, rhs });
        }
        Ok(Blueprint { monoid, coefficient_ring, relations: normalized })
    }

    /// The relation-free blueprint on `monoid` (the left adjoint image).
    pub fn pure(monoid: MonoidPresentation, coefficient_ring: CoefficientRing) -> Result<Blueprint> {
        Blueprint::new(monoid, coefficient_ring, Vec::new())
    }

    pub fn table(&self) -> Result<SaturationTable> {
        saturate(&self.monoid)
    }
}

/// Budget knobs for the formal-sum closure in [`validate_blueprint`].
#[derive(Debug, Clone, Copy)]
pub struct ClosureCaps {
    /// Largest coefficient magnitude a derived sum may carry.
    pub max_coeff: i64,
    /// Total distinct sums the closure may intern.
    pub max_nodes: usize,
    /// Fixpoint rounds before giving up.
    pub max_rounds: usize,
}

impl Default for ClosureCaps {
    fn default() -> Self {
        ClosureCaps { max_coeff: 32, max_nodes: 1500, max_rounds: 8 }
    }
}

/// Two distinct monomial classes forced equal by the relations — the
/// injectivity condition fails on this pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub left: Monomial,
    pub right: Monomial,
}

/// Outcome of the bounded closure.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    /// No violation found.
    pub ok: bool,
    /// The closure reached a genuine fixpoint; `ok` is then unconditional.
    pub complete: bool,
    pub violations: Vec<Violation>,
    /// Distinct sums explored.
    pub nodes: usize,
}

impl ValidationReport {
    pub fn verdict(&self) -> &'static str {
        if !self.ok {
            "violation"
        } else if self.complete {
            "ok"
        } else {
            "ok-within-bounds"
        }
    }
}

struct Closure<'a> {
    table: &'a SaturationTable,
    ring: CoefficientRing,
    caps: ClosureCaps,
    nodes: Vec<PolySum>,
    ids: HashMap<PolySum, usize>,
    parent: Vec<usize>,
    /// Canonical monomial per class that is known equal to a single monomial.
    atomic: HashMap<usize, Monomial>,
    violations: Vec<Violation>,
    truncated: bool,
}

impl<'a> Closure<'a> {
    fn intern(&mut self, s: PolySum) -> Option<usize> {
        if let Some(&i) = self.ids.get(&s) {
            return Some(i);
        }
        if self.nodes.len() >= self.caps.max_nodes {
            self.truncated = true;
            return None;
        }
        let i = self.nodes.len();
        self.ids.insert(s.clone(), i);
        self.parent.push(i);
        if let Some(m) = s.as_single_monomial() {
            self.atomic.insert(i, m);
        }
        self.nodes.push(s);
        Some(i)
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merge the classes of two sums; record a violation when two different
    /// single-monomial classes meet.  Returns true when something merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        match (self.atomic.get(&lo).cloned(), self.atomic.remove(&hi)) {
            (Some(x), Some(y)) if x != y => {
                let (left, right) = if x < y { (x, y) } else { (y, x) };
                self.violations.push(Violation { left, right });
            }
            (None, Some(y)) => {
                self.atomic.insert(lo, y);
            }
            _ => {}
        }
        true
    }

    /// All consequences of the equation pair `(a, b)` under one rule
    /// application, against the current active monomial set.
    fn derive(&mut self, a: usize, b: usize, active: &[Monomial]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let k = self.table.pres.num_generators();
        let (sa, sb) = (self.nodes[a].clone(), self.nodes[b].clone());

        // Multiply both sides by a generator.
        for g in 0..k {
            let gm = Monomial::generator(k, g);
            match (sa.mul_monomial(&gm, self.table), sb.mul_monomial(&gm, self.table)) {
                (Ok(na), Ok(nb)) => {
                    if let (Some(ia), Some(ib)) = (self.intern(na), self.intern(nb)) {
                        out.push((ia, ib));
                    }
                }
                _ => self.truncated = true, // left the degree window
            }
        }

        // Add (or, over Z, subtract) one monomial on both sides.
        let signs: &[i64] = match self.ring {
            CoefficientRing::Nat => &[1],
            CoefficientRing::Int => &[1, -1],
        };
        for m in active {
            for &s in signs {
                if s < 0 && !(sa.stays_natural_after(m, s) && sb.stays_natural_after(m, s)) {
                    continue;
                }
                let na = sa.add_signed(m, s);
                let nb = sb.add_signed(m, s);
                if na.max_abs_coefficient() > self.caps.max_coeff
                    || nb.max_abs_coefficient() > self.caps.max_coeff
                {
                    self.truncated = true;
                    continue;
                }
                if let (Some(ia), Some(ib)) = (self.intern(na), self.intern(nb)) {
                    out.push((ia, ib));
                }
            }
        }
        out
    }
}

/// Run the bounded closure, optionally tracking extra query sums; returns the
/// finished closure and the node id of each query (`None` if it could not be
/// interned inside the node budget).
fn run_closure<'a>(
    bp: &Blueprint,
    table: &'a SaturationTable,
    caps: &ClosureCaps,
    queries: &[PolySum],
) -> Result<(Closure<'a>, Vec<Option<usize>>)> {
    let mut cl = Closure {
        table,
        ring: bp.coefficient_ring,
        caps: *caps,
        nodes: Vec::new(),
        ids: HashMap::new(),
        parent: Vec::new(),
        atomic: HashMap::new(),
        violations: Vec::new(),
        truncated: false,
    };

    let mut query_ids = Vec::with_capacity(queries.len());
    for q in queries {
        let n = q.normalize(table)?;
        query_ids.push(cl.intern(n));
    }

    // Known equations as interned node pairs, deduplicated.
    let mut equations: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    for r in &bp.relations {
        let l = r.lhs.normalize(table)?;
        let rr = r.rhs.normalize(table)?;
        if let (Some(a), Some(b)) = (cl.intern(l), cl.intern(rr)) {
            let key = (a.min(b), a.max(b));
            if seen.insert(key, ()).is_none() {
                equations.push(key);
                cl.union(a, b);
            }
        }
    }

    let mut round = 0;
    loop {
        if round >= cl.caps.max_rounds {
            if !equations.is_empty() {
                cl.truncated = true;
            }
            break;
        }
        round += 1;

        // Active monomials: everything appearing in any sum explored so far.
        let mut active: Vec<Monomial> = {
            let mut set: BTreeMap<Monomial, ()> = BTreeMap::new();
            set.insert(Monomial::one(table.pres.num_generators()), ());
            for s in &cl.nodes {
                for t in &s.terms {
                    set.insert(t.monomial.clone(), ());
                }
            }
            set.into_keys().collect()
        };
        active.sort();

        let snapshot = equations.clone();
        let mut progressed = false;
        for (a, b) in snapshot {
            for (x, y) in cl.derive(a, b, &active) {
                let key = (x.min(y), x.max(y));
                if seen.insert(key, ()).is_none() {
                    equations.push(key);
                    progressed = true;
                }
                if cl.union(x, y) {
                    progressed = true;
                }
            }
        }
        if !progressed {
            break;
        }
    }

    Ok((cl, query_ids))
}

/// Bounded congruence closure over formal sums.  Seeds with the blueprint's
/// relations, then repeatedly multiplies equations by generators and shifts
/// them by single monomials, merging equal sums, until a fixpoint or a cap.
/// Any merge of two distinct single-monomial classes is a violation of the
/// injectivity condition and is reported with the offending pair.
pub fn validate_blueprint(bp: &Blueprint, caps: &ClosureCaps) -> Result<ValidationReport> {
    let table = bp.table()?;
    let (mut cl, _) = run_closure(bp, &table, caps, &[])?;
    let ok = cl.violations.is_empty();
    let complete = !cl.truncated;
    let nodes = cl.nodes.len();
    let violations = std::mem::take(&mut cl.violations);
    Ok(ValidationReport { ok, complete, violations, nodes })
}

/// Are two formal sums congruent under the blueprint's relations?
///
/// `Ok(true)` when the bounded closure merges them; `Ok(false)` when it
/// reaches a genuine fixpoint without merging them (a definite no); an
/// `SaturationIncomplete` error when the closure was truncated by a cap
/// before deciding.
pub fn sums_congruent(bp: &Blueprint, a: &PolySum, b: &PolySum, caps: &ClosureCaps) -> Result<bool> {
    let table = bp.table()?;
    let (mut cl, ids) = run_closure(bp, &table, caps, &[a.clone(), b.clone()])?;
    match (ids[0], ids[1]) {
        (Some(x), Some(y)) => {
            if cl.find(x) == cl.find(y) {
                Ok(true)
            } else if !cl.truncated {
                Ok(false)
            } else {
                Err(Error::SaturationIncomplete(
                    "sum congruence undecided within closure caps".into(),
                ))
            }
        }
        _ => Err(Error::SaturationIncomplete(
            "query sums exceeded the closure node budget".into(),
        )),
    }
}

/// Does this monoid morphism respect every polynomial relation in `Z[Z_n]`?
///
/// The morphism is first re-checked against the monoid relations; a failure
/// there is an error, not a `false`.
pub fn is_compatible(bp: &Blueprint, hom: &MonoidHom) -> Result<bool> {
    for (l, r) in &bp.monoid.relations {
        if hom.eval(l) != hom.eval(r) {
            let names = &bp.monoid.generators;
            return Err(Error::NotAMonoidMorphism {
                relation: format!("{} = {}", l.display(names), r.display(names)),
            });
        }
    }
    Ok(compatible_unchecked(bp, hom))
}

fn compatible_unchecked(bp: &Blueprint, hom: &MonoidHom) -> bool {
    bp.relations.iter().all(|r| r.lhs.evaluate(hom) == r.rhs.evaluate(hom))
}

/// Relation-compatible morphisms into `F1^n`, bucketed by the prime ideal
/// their zero set generates.
#[derive(Debug, Clone)]
pub struct HomBuckets {
    pub n: u64,
    /// Sorted by (zero-set size, lexicographic subset); empty buckets absent.
    pub buckets: Vec<(PrimeIdeal, Vec<MonoidHom>)>,
}

impl HomBuckets {
    pub fn total(&self) -> u64 {
        self.buckets.iter().map(|(_, v)| v.len() as u64).sum()
    }

    pub fn counts(&self) -> Vec<(PrimeIdeal, u64)> {
        self.buckets.iter().map(|(p, v)| (p.clone(), v.len() as u64)).collect()
    }

    pub fn count_for(&self, prime: &PrimeIdeal) -> u64 {
        self.buckets
            .iter()
            .find(|(p, _)| p == prime)
            .map(|(_, v)| v.len() as u64)
            .unwrap_or(0)
    }
}

/// Enumerate and bucket all relation-compatible morphisms into `F1^n`.
///
/// With no relations this is exactly the monoid hom set, so the relation-free
/// blueprint adds no constraints.
pub fn hom_b(bp: &Blueprint, n: u64) -> Result<HomBuckets> {
    let table = bp.table()?;
    let all = hom_monoid(&table, n)?;
    let mut map: BTreeMap<Vec<usize>, Vec<MonoidHom>> = BTreeMap::new();
    for h in all {
        if compatible_unchecked(bp, &h) {
            let key: Vec<usize> = h.zero_set().into_iter().collect();
            map.entry(key).or_default().push(h);
        }
    }
    let mut buckets: Vec<(PrimeIdeal, Vec<MonoidHom>)> = map
        .into_iter()
        .map(|(k, v)| (PrimeIdeal { generator_subset: k.into_iter().collect() }, v))
        .collect();
    buckets.sort_by_key(|(p, _)| (p.generator_subset.len(), p.generator_subset.clone()));
    Ok(HomBuckets { n, buckets })
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "distinct monomials identified: {:?} = {:?}", self.left, self.right)
    }
}
