//! Smith normal form over the integers, with unimodular transforms.
//!
//! Plain elementary-operation algorithm in arbitrary precision: pick the
//! smallest nonzero pivot in the remaining block, clear its row and column by
//! division steps, fix divisibility of the rest by row absorption, repeat.
//! Intermediate entries can grow, hence `BigInt` throughout.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

#[derive(Debug, Clone)]
pub struct SmithNormalForm {
    /// Diagonal entries `d_0 | d_1 | ...`, non-negative, length `min(m, n)`
    /// (trailing zeros included).
    pub diag: Vec<BigInt>,
    /// Row transform (`m x m`, determinant ±1).
    pub u: IntMatrix,
    /// Column transform (`n x n`, determinant ±1).
    pub v: IntMatrix,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries strictly greater than one (the torsion part).
    pub fn invariant_factors_above_one(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }
}

pub fn int_matrix<T: Into<i64> + Copy>(rows: &[&[T]]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x.into())).collect()).collect()
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (m, k) = (a.len(), if a.is_empty() { 0 } else { a[0].len() });
    let n = if b.is_empty() { 0 } else { b[0].len() };
    let mut c = vec![vec![BigInt::zero(); n]; m];
    for i in 0..m {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                let t = &a[i][l] * &b[l][j];
                c[i][j] += t;
            }
        }
    }
    c
}

/// Compute `U * A * V = diag(d)` with `U`, `V` unimodular.
///
/// Degenerate shapes (zero rows or columns) are fine; the diagonal is then
/// empty and the transforms are identities of the right size.
pub fn smith_normal_form(a: &IntMatrix) -> SmithNormalForm {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut b = a.clone();
    let mut u = identity(m);
    let mut v = identity(n);
    let steps = m.min(n);

    for k in 0..steps {
        'pivoting: loop {
            // Smallest-magnitude nonzero entry of the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    if b[i][j].is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if b[i][j].abs() < b[pi][pj].abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'pivoting };
            if pi != k {
                b.swap(pi, k);
                u.swap(pi, k);
            }
            if pj != k {
                for row in b.iter_mut() {
                    row.swap(pj, k);
                }
                for row in v.iter_mut() {
                    row.swap(pj, k);
                }
            }
            if b[k][k].is_negative() {
                for j in 0..n {
                    b[k][j] = -b[k][j].clone();
                }
                for j in 0..m {
                    u[k][j] = -u[k][j].clone();
                }
            }

            // Reduce column k below the pivot.
            let mut dirty = false;
            for i in k + 1..m {
                if b[i][k].is_zero() {
                    continue;
                }
                let q = &b[i][k] / &b[k][k];
                if !q.is_zero() {
                    for j in 0..n {
                        let t = &q * &b[k][j];
                        b[i][j] -= t;
                    }
                    for j in 0..m {
                        let t = &q * &u[k][j];
                        u[i][j] -= t;
                    }
                }
                if !b[i][k].is_zero() {
                    dirty = true; // remainder smaller than pivot: re-pivot
                }
            }
            if dirty {
                continue 'pivoting;
            }
            // Reduce row k right of the pivot, keeping the column transform
            // in sync.
            let mut row_dirty = false;
            for j in k + 1..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let q = &b[k][j] / &b[k][k];
                if !q.is_zero() {
                    for i in 0..m {
                        let t = &q * &b[i][k];
                        b[i][j] -= t;
                    }
                    for i in 0..n {
                        let t = &q * &v[i][k];
                        v[i][j] -= t;
                    }
                }
                if !b[k][j].is_zero() {
                    row_dirty = true;
                }
            }
            if row_dirty {
                continue 'pivoting;
            }

            // Divisibility sweep: the pivot must divide the whole block.
            let mut offender: Option<usize> = None;
            'scan: for i in k + 1..m {
                for j in k + 1..n {
                    if (&b[i][j] % &b[k][k]) != BigInt::zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            if let Some(i) = offender {
                for j in 0..n {
                    let t = b[i][j].clone();
                    b[k][j] += t;
                }
                for j in 0..m {
                    let t = u[i][j].clone();
                    u[k][j] += t;
                }
                continue 'pivoting;
            }
            break 'pivoting;
        }
    }

    let diag: Vec<BigInt> = (0..steps).map(|i| b[i][i].clone()).collect();
    SmithNormalForm { diag, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn diag_i64(s: &SmithNormalForm) -> Vec<i64> {
        s.diag.iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn identity_matrix_is_its_own_form() {
        let a = int_matrix(&[&[1i64, 0], &[0, 1]]);
        assert_eq!(diag_i64(&smith_normal_form(&a)), vec![1, 1]);
    }

    #[test]
    fn two_by_two_example() {
        // det = -8, gcd of entries = 2, so the invariant factors are 2 and 4.
        let a = int_matrix(&[&[2i64, 4], &[6, 8]]);
        let s = smith_normal_form(&a);
        assert_eq!(diag_i64(&s), vec![2, 4]);
        assert_eq!(mat_mul(&mat_mul(&s.u, &a), &s.v), int_matrix(&[&[2i64, 0], &[0, 4]]));
    }

    #[test]
    fn one_by_one() {
        let a = int_matrix(&[&[3i64]]);
        assert_eq!(diag_i64(&smith_normal_form(&a)), vec![3]);
    }

    #[test]
    fn empty_and_zero_shapes() {
        let s = smith_normal_form(&vec![]);
        assert!(s.diag.is_empty());
        let a = vec![vec![BigInt::from(0), BigInt::from(0)]];
        let s = smith_normal_form(&a);
        assert_eq!(diag_i64(&s), vec![0]);
    }
}
