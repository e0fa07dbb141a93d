//! Finite objects (X, M, mu): a pointed carrier X, an additive monoid M, and
//! a structure map mu sending non-basepoint carrier elements into M. Two
//! conditions are enforced: (a) the carrier images generate M additively and
//! (b) mu is injective off the basepoint and avoids 0, so the carrier embeds
//! into the underlying pointed set of M.

use super::addmonoid::AddMonoid;
use crate::error::{Error, Result};

pub const UNIT_CAP: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBObject {
    /// Carrier element names; index 0 is the basepoint.
    pub carrier: Vec<String>,
    pub monoid: AddMonoid,
    /// Structure map: carrier index i+1 maps to monoid element `gen_image[i]`.
    pub gen_image: Vec<usize>,
}

impl FiniteBObject {
    pub fn new(carrier: Vec<String>, monoid: AddMonoid, gen_image: Vec<usize>) -> Result<Self> {
        let obj = FiniteBObject { carrier, monoid, gen_image };
        obj.validate()?;
        Ok(obj)
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier.len()
    }

    /// Monoid element attached to a carrier index (0 for the basepoint).
    pub fn mu(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.gen_image[i - 1]
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.monoid.validate()?;
        if self.carrier.len() != self.gen_image.len() + 1 {
            return Err(Error::InvalidPresentation("carrier/image length mismatch".into()));
        }
        for (i, &g) in self.gen_image.iter().enumerate() {
            if g == 0 || g >= self.monoid.order() {
                return Err(Error::InvalidPresentation(format!(
                    "carrier element {} does not embed into the monoid",
                    self.carrier[i + 1]
                )));
            }
        }
        let mut sorted = self.gen_image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.gen_image.len() {
            return Err(Error::InvalidPresentation(
                "structure map is not injective on the carrier".into(),
            ));
        }
        let generated = self.monoid.generated_by(&self.gen_image);
        if generated.len() != self.monoid.order() {
            return Err(Error::InvalidPresentation(
                "carrier images do not generate the monoid".into(),
            ));
        }
        Ok(())
    }

    /// The tensor unit: a two-point carrier over the naturals truncated at
    /// `UNIT_CAP`, embedding the non-basepoint element as 1.
    pub fn unit_object() -> FiniteBObject {
        FiniteBObject {
            carrier: vec!["*".into(), "e".into()],
            monoid: AddMonoid::nat_truncated(UNIT_CAP),
            gen_image: vec![1],
        }
    }

    /// The zero object: one-point carrier over the trivial monoid.
    pub fn zero_object() -> FiniteBObject {
        FiniteBObject {
            carrier: vec!["*".into()],
            monoid: AddMonoid::trivial(),
            gen_image: vec![],
        }
    }

    /// A cyclic-group object on a two-point carrier: ({*, e}, Z_n, e -> 1).
    pub fn cyclic(n: u64) -> FiniteBObject {
        FiniteBObject {
            carrier: vec!["*".into(), "e".into()],
            monoid: AddMonoid::zn(n),
            gen_image: vec![1],
        }
    }

    /// Every valid object over the given monoids with carrier size at most
    /// `max_carrier`: one object per generating subset (sorted, so no
    /// relabelled duplicates of the carrier itself).
    pub fn enumerate_objects(monoids: &[AddMonoid], max_carrier: usize) -> Vec<FiniteBObject> {
        let mut out = Vec::new();
        for m in monoids {
            let nonzero: Vec<usize> = (1..m.order()).collect();
            let max_gens = max_carrier.saturating_sub(1).min(nonzero.len());
            for size in 0..=max_gens {
                for combo in combinations(&nonzero, size) {
                    if m.generated_by(&combo).len() != m.order() {
                        continue;
                    }
                    let mut carrier = vec!["*".to_string()];
                    for &g in &combo {
                        carrier.push(format!("x{g}"));
                    }
                    out.push(FiniteBObject {
                        carrier,
                        monoid: m.clone(),
                        gen_image: combo,
                    });
                }
            }
        }
        out
    }
}

fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        if items.len() - i < size {
            break;
        }
        for mut rest in combinations(&items[i + 1..], size - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_zero_objects_are_valid() {
        FiniteBObject::unit_object().validate().unwrap();
        FiniteBObject::zero_object().validate().unwrap();
        FiniteBObject::cyclic(5).validate().unwrap();
    }

    #[test]
    fn structure_map_must_be_injective_and_generating() {
        // Two carrier points over Z2 would need two distinct nonzero images.
        let bad = FiniteBObject {
            carrier: vec!["*".into(), "a".into(), "b".into()],
            monoid: AddMonoid::zn(2),
            gen_image: vec![1, 1],
        };
        assert!(bad.validate().is_err());
        // A single non-generating image over Z4.
        let bad = FiniteBObject {
            carrier: vec!["*".into(), "a".into()],
            monoid: AddMonoid::zn(4),
            gen_image: vec![2],
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn enumeration_respects_carrier_bound() {
        let monoids = vec![AddMonoid::zn(2), AddMonoid::zn(3), AddMonoid::zn(4)];
        let objs = FiniteBObject::enumerate_objects(&monoids, 3);
        for o in &objs {
            o.validate().unwrap();
            assert!(o.carrier_size() <= 3);
        }
        // Z2: {1}; Z3: {1}, {2}, {1,2}; Z4: {1}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3} trimmed to size <= 2.
        let z4_objs = objs.iter().filter(|o| o.monoid.order() == 4).count();
        assert_eq!(z4_objs, 5);
    }
}
