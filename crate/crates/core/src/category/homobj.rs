//! Internal hom: the object of morphisms a -> b.
//!
//! The carrier is the set of morphisms (zero morphism as basepoint); the
//! monoid is the additive closure of their monoid components under pointwise
//! addition, a sum being defined only where every coordinate is. Since the
//! target's structure map is injective, a morphism is determined by its
//! monoid component, which gives the carrier embedding.

use super::addmonoid::AddMonoid;
use super::bobject::FiniteBObject;
use super::morphism::{hom_set, BMorphism};
use crate::error::Result;

#[derive(Debug, Clone)]
pub struct HomObject {
    pub object: FiniteBObject,
    /// Morphisms attached to carrier indices 1..; the basepoint is the zero
    /// morphism and is not listed.
    pub morphisms: Vec<BMorphism>,
}

impl HomObject {
    /// Carrier index of a morphism (0 for the zero morphism).
    pub fn carrier_index_of(&self, f: &BMorphism) -> Option<usize> {
        if f.point_map.iter().all(|&p| p == 0) {
            return Some(0);
        }
        self.morphisms.iter().position(|g| g == f).map(|i| i + 1)
    }
}

pub fn internal_hom_b(a: &FiniteBObject, b: &FiniteBObject) -> Result<HomObject> {
    let homs = hom_set(a, b);
    let zero_psi = vec![0usize; a.monoid.order()];
    let nonzero: Vec<BMorphism> = homs
        .into_iter()
        .filter(|f| f.point_map.iter().any(|&p| p != 0))
        .collect();

    // Additive closure of the morphism monoid-components under pointwise sums.
    let mut elems: Vec<Vec<usize>> = vec![zero_psi];
    for f in &nonzero {
        if !elems.contains(&f.monoid_map) {
            elems.push(f.monoid_map.clone());
        }
    }
    let pointwise = |u: &[usize], v: &[usize]| -> Option<Vec<usize>> {
        u.iter().zip(v).map(|(&x, &y)| b.monoid.try_add(x, y)).collect()
    };
    let mut frontier: Vec<Vec<usize>> = elems.clone();
    while let Some(u) = frontier.pop() {
        let snapshot = elems.clone();
        for v in &snapshot {
            if let Some(w) = pointwise(&u, v) {
                if !elems.contains(&w) {
                    elems.push(w.clone());
                    frontier.push(w);
                }
            }
        }
    }
    elems.sort();
    debug_assert_eq!(elems[0], vec![0usize; a.monoid.order()]);

    let n = elems.len();
    let mut add = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if let Some(w) = pointwise(&elems[i], &elems[j]) {
                add[i][j] = elems.iter().position(|e| *e == w);
            }
        }
    }
    let names = (0..n).map(|i| format!("h{i}")).collect();
    let monoid = AddMonoid { names, add };

    let gen_image: Vec<usize> = nonzero
        .iter()
        .map(|f| elems.iter().position(|e| *e == f.monoid_map).unwrap())
        .collect();
    let mut carrier = vec!["*".to_string()];
    for (i, _) in nonzero.iter().enumerate() {
        carrier.push(format!("f{i}"));
    }
    let object = FiniteBObject::new(carrier, monoid, gen_image)?;
    Ok(HomObject { object, morphisms: nonzero })
}
