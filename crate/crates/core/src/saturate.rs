//! Bounded congruence saturation and morphisms into the cyclic targets.
//!
//! The congruence generated by a presentation's relations is computed on the
//! window of all monomials of total degree `<= degree_bound`: every relation
//! instance `(m*l, m*r)` whose two sides both fit in the window is merged in a
//! union-find.  Within the window the resulting classes are exact for every
//! chain of rewrites that stays inside the window; beyond it nothing is
//! claimed.  Class representatives are the degree-lex least members, with the
//! absorbing zero below everything.

use crate::error::{Error, Result};
use crate::monomial::{terms_up_to, Monomial};
use crate::presentation::MonoidPresentation;
use std::collections::HashMap;

/// Saturated congruence table for one presentation.
#[derive(Debug, Clone)]
pub struct SaturationTable {
    pub pres: MonoidPresentation,
    /// Window monomials in degree-lex order; index 0 is the absorbing zero,
    /// index 1 the identity.
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Root (canonical member index) per window monomial.
    root: Vec<usize>,
    /// Per root: union of the support masks of all class members.
    class_support: Vec<u64>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        // Keep the smaller index as root: indices are in degree-lex order, so
        // the root is automatically the canonical representative.
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Saturate the congruence of `pres` on its degree window.
pub fn saturate(pres: &MonoidPresentation) -> Result<SaturationTable> {
    pres.validate()?;
    let k = pres.num_generators();
    if k > 20 {
        return Err(Error::CapExceeded { what: "generator count", value: k as u64, cap: 20 });
    }
    let bound = pres.degree_bound;

    let mut monomials = Vec::with_capacity(1 + terms_len_hint(k, bound));
    monomials.push(Monomial::Zero);
    monomials.extend(terms_up_to(k, bound).into_iter().map(Monomial::Term));
    let index: HashMap<Monomial, usize> =
        monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let mut parent: Vec<usize> = (0..monomials.len()).collect();

    for (l, r) in &pres.relations {
        // Largest multiplier degree for which both instance sides stay in the
        // window (the absorbing zero has no degree and always fits).
        let budget = bound - l.degree().max(r.degree());
        for m in terms_up_to(k, budget) {
            let mult = Monomial::Term(m);
            let lm = mult.mul(l);
            let rm = mult.mul(r);
            let li = index[&lm];
            let ri = index[&rm];
            union(&mut parent, li, ri);
        }
    }

    // 0 = 1 may arise indirectly (e.g. a unit forced into the zero class).
    if find(&mut parent, 0) == find(&mut parent, 1) {
        return Err(Error::ZeroMonoid);
    }

    let mut root = vec![0usize; monomials.len()];
    let mut class_support = vec![0u64; monomials.len()];
    for i in 0..monomials.len() {
        let r = find(&mut parent, i);
        root[i] = r;
        class_support[r] |= monomials[i].support_mask();
    }

    Ok(SaturationTable { pres: pres.clone(), monomials, index, root, class_support })
}

fn terms_len_hint(k: usize, bound: u32) -> usize {
    // C(bound + k, k), saturating; only used to presize a Vec.
    let mut acc: usize = 1;
    for i in 1..=k {
        acc = acc.saturating_mul(bound as usize + i) / i;
    }
    acc
}

impl SaturationTable {
    pub fn degree_bound(&self) -> u32 {
        self.pres.degree_bound
    }

    pub fn window_len(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomial_at(&self, idx: usize) -> &Monomial {
        &self.monomials[idx]
    }

    pub fn zero_root(&self) -> usize {
        self.root[0]
    }

    /// Index of a window monomial, or `BoundExceeded` for anything outside.
    pub fn index_of(&self, m: &Monomial) -> Result<usize> {
        self.index.get(m).copied().ok_or(Error::BoundExceeded {
            degree: m.degree(),
            bound: self.pres.degree_bound,
        })
    }

    /// Canonical class id (index of the degree-lex least member).
    pub fn class_id(&self, m: &Monomial) -> Result<usize> {
        Ok(self.root[self.index_of(m)?])
    }

    /// Degree-lex least member of the congruence class of `m`.
    pub fn normal_form(&self, m: &Monomial) -> Result<Monomial> {
        Ok(self.monomials[self.class_id(m)?].clone())
    }

    /// Normal form of a product, if it fits the window.
    pub fn mul_nf(&self, a: &Monomial, b: &Monomial) -> Result<Monomial> {
        self.normal_form(&a.mul(b))
    }

    /// Union of support masks over all members of the class of root `r`.
    pub fn class_support_of_root(&self, r: usize) -> u64 {
        self.class_support[r]
    }

    /// Iterate `(monomial index, root)` over the whole window.
    pub fn roots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.root.iter().copied().enumerate()
    }

    /// Sorted list of distinct class representatives (including zero).
    pub fn class_reps(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self
            .root
            .iter()
            .copied()
            .enumerate()
            .filter(|&(i, r)| i == r)
            .map(|(_, r)| r)
            .collect();
        reps.dedup();
        reps
    }

    /// Element list when the quotient is visibly finite inside the window:
    /// every representative must live in the lower half of the window and the
    /// representatives must be closed under multiplication there.  Returns
    /// `None` when the window gives no such certificate (e.g. free monoids).
    pub fn try_finite_elements(&self) -> Option<Vec<Monomial>> {
        let half = self.pres.degree_bound / 2;
        let reps = self.class_reps();
        let elems: Vec<Monomial> =
            reps.iter().map(|&r| self.monomials[r].clone()).collect();
        if elems.iter().any(|m| m.degree() > half) {
            return None;
        }
        for a in &elems {
            for b in &elems {
                let p = a.mul(b);
                if p.degree() > self.pres.degree_bound {
                    return None;
                }
                let nf = self.normal_form(&p).ok()?;
                if nf.degree() > half {
                    return None;
                }
            }
        }
        Some(elems)
    }
}

/// An element of `F1^n = Z_n ∪ {0}`: `None` is the absorbing zero, `Some(k)`
/// the group element `g^k` with `k` reduced mod `n`.
pub type F1nElem = Option<u64>;

/// A morphism from a presented monoid into `F1^n`, stored as generator images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonoidHom {
    pub n: u64,
    pub images: Vec<F1nElem>,
}

impl MonoidHom {
    /// Evaluate a monomial: zero if any occurring generator maps to zero,
    /// otherwise the exponent-weighted sum in `Z_n`.
    pub fn eval(&self, m: &Monomial) -> F1nElem {
        match m {
            Monomial::Zero => None,
            Monomial::Term(e) => {
                let mut acc: u64 = 0;
                for (i, &x) in e.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    match self.images[i] {
                        None => return None,
                        Some(v) => acc = (acc + (x as u64 % self.n) * (v % self.n)) % self.n,
                    }
                }
                Some(acc)
            }
        }
    }

    /// Generator indices sent to the absorbing zero.
    pub fn zero_set(&self) -> std::collections::BTreeSet<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_none())
            .map(|(i, _)| i)
            .collect()
    }
}

/// All morphisms from the presented monoid into `F1^n`, in lexicographic
/// order of generator images (zero first).
///
/// Every returned morphism satisfies all relations; additionally the zero
/// set of each morphism is asserted to be a canonical prime of the source —
/// the complement of the preimage of the group part is multiplicatively
/// closed, so this must hold for any true morphism.
pub fn hom_monoid(table: &SaturationTable, n: u64) -> Result<Vec<MonoidHom>> {
    if n == 0 {
        return Err(Error::InvalidPresentation("hom target needs n >= 1".into()));
    }
    let k = table.pres.num_generators();
    let total = (n + 1).checked_pow(k as u32).ok_or(Error::Overflow("hom enumeration"))?;
    if total > 200_000_000 {
        return Err(Error::CapExceeded { what: "hom search space", value: total, cap: 200_000_000 });
    }

    let mut out = Vec::new();
    let mut images: Vec<F1nElem> = vec![None; k];
    let mut counter = vec![0u64; k]; // 0 = zero, v>=1 = Some(v-1)
    loop {
        for (i, &c) in counter.iter().enumerate() {
            images[i] = if c == 0 { None } else { Some(c - 1) };
        }
        let cand = MonoidHom { n, images: images.clone() };
        if table.pres.relations.iter().all(|(l, r)| cand.eval(l) == cand.eval(r)) {
            let zs = cand.zero_set();
            assert!(
                crate::primes::is_prime_subset(table, &zs)
                    && crate::primes::canonical_subset(table, &zs) == zs,
                "zero set of a valid morphism must be a canonical prime"
            );
            out.push(cand);
        }
        // Odometer over (n+1)^k.
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            counter[pos] += 1;
            if counter[pos] <= n {
                break;
            }
            counter[pos] = 0;
        }
    }
}
