//! Monomials over a fixed generator list, with the absorbing zero adjoined.

use std::cmp::Ordering;
use std::fmt;

/// A monomial of a pointed commutative monoid presentation.
///
/// `Term(e)` is the product `g_0^e[0] * g_1^e[1] * ...` over the presentation's
/// generators (all exponents zero = the identity `1`).  `Zero` is the absorbing
/// element; it is not a product of generators and swallows every
/// multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Monomial {
    Zero,
    Term(Vec<u32>),
}

impl Monomial {
    pub fn one(num_gens: usize) -> Self {
        Monomial::Term(vec![0; num_gens])
    }

    /// The monomial consisting of a single generator.
    pub fn generator(num_gens: usize, idx: usize) -> Self {
        let mut e = vec![0u32; num_gens];
        e[idx] = 1;
        Monomial::Term(e)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Monomial::Zero)
    }

    pub fn is_one(&self) -> bool {
        match self {
            Monomial::Zero => false,
            Monomial::Term(e) => e.iter().all(|&x| x == 0),
        }
    }

    /// Total degree; the absorbing zero is treated as degree 0.
    pub fn degree(&self) -> u32 {
        match self {
            Monomial::Zero => 0,
            Monomial::Term(e) => e.iter().sum(),
        }
    }

    pub fn exponents(&self) -> Option<&[u32]> {
        match self {
            Monomial::Zero => None,
            Monomial::Term(e) => Some(e),
        }
    }

    /// Product of two monomials over the same generator list.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        match (self, other) {
            (Monomial::Zero, _) | (_, Monomial::Zero) => Monomial::Zero,
            (Monomial::Term(a), Monomial::Term(b)) => {
                debug_assert_eq!(a.len(), b.len());
                Monomial::Term(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
        }
    }

    /// Does `self` divide `other` exponent-wise?  Zero divides only zero.
    pub fn divides(&self, other: &Monomial) -> bool {
        match (self, other) {
            (Monomial::Zero, m) => m.is_zero(),
            (_, Monomial::Zero) => false,
            (Monomial::Term(a), Monomial::Term(b)) => a.iter().zip(b).all(|(x, y)| x <= y),
        }
    }

    /// Bitmask of generators appearing with positive exponent.
    pub fn support_mask(&self) -> u64 {
        match self {
            Monomial::Zero => 0,
            Monomial::Term(e) => e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .fold(0u64, |m, (i, _)| m | (1 << i)),
        }
    }

    /// Render with explicit generator names, e.g. `T1^2*T3`.
    pub fn display(&self, names: &[String]) -> String {
        match self {
            Monomial::Zero => "0".to_string(),
            Monomial::Term(e) => {
                let parts: Vec<String> = e
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
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            }
        }
    }
}

/// Degree-lex order with `Zero` below everything.  This is the order that
/// picks canonical class representatives, so it must be total and stable.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Monomial::Zero, Monomial::Zero) => Ordering::Equal,
            (Monomial::Zero, _) => Ordering::Less,
            (_, Monomial::Zero) => Ordering::Greater,
            (Monomial::Term(a), Monomial::Term(b)) => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| a.cmp(b))
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Zero => write!(f, "0"),
            Monomial::Term(e) => {
                let parts: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| if x == 1 { format!("g{}", i) } else { format!("g{}^{}", i, x) })
                    .collect();
                if parts.is_empty() {
                    write!(f, "1")
                } else {
                    write!(f, "{}", parts.join("*"))
                }
            }
        }
    }
}

/// All exponent vectors of length `k` with total degree `<= bound`, in
/// degree-lex order.  The window size is `C(bound + k, k)`.
pub fn terms_up_to(k: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=bound {
        emit_degree(k, d, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn emit_degree(k: usize, remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() == k {
        if remaining == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    if prefix.len() + 1 == k {
        prefix.push(remaining);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for e in 0..=remaining {
        prefix.push(e);
        emit_degree(k, remaining - e, prefix, out);
        prefix.pop();
    }
}
