//! Elements of the integral group ring `Z[Z_n]`.
//!
//! The absorbing zero of `F1^n` contributes nothing: evaluating a formal sum
//! drops every term whose monomial hits zero.  Elements are finitely
//! supported integer maps on `Z_n`, kept sorted for canonical comparison.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    pub order: u64,
    /// Exponent of the group generator -> integer coefficient (no zeros).
    pub coeffs: BTreeMap<u64, i64>,
}

impl GroupRingElement {
    pub fn zero(order: u64) -> Self {
        GroupRingElement { order, coeffs: BTreeMap::new() }
    }

    pub fn basis(order: u64, exponent: u64) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(exponent % order, 1);
        GroupRingElement { order, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, exponent: u64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = exponent % self.order;
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn add(&self, other: &GroupRingElement) -> GroupRingElement {
        assert_eq!(self.order, other.order);
        let mut out = self.clone();
        for (&e, &c) in &other.coeffs {
            out.add_term(e, c);
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&e, &c)| match (e, c) {
                (0, c) => format!("{}", c),
                (e, 1) => format!("g^{}", e),
                (e, c) => format!("{}*g^{}", c, e),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_cancel_and_wrap() {
        let mut x = GroupRingElement::zero(3);
        x.add_term(1, 2);
        x.add_term(4, -2); // 4 ≡ 1 (mod 3): cancels
        assert!(x.is_zero());
        x.add_term(5, 1); // 5 ≡ 2
        assert_eq!(x, GroupRingElement::basis(3, 2));
    }
}
