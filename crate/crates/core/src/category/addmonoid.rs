//! Finite additive monoids with a possibly *partial* addition table.
//!
//! Element 0 is always the neutral element. A `None` entry means the sum
//! falls outside the representable window (used for truncated copies of the
//! natural numbers); total monoids never contain `None`. Partiality obeys a
//! strong associativity law: whenever both nested sums on one side of
//! `(a+b)+c = a+(b+c)` are defined and the inner sum on the other side is
//! defined too, the other outer sum must be defined and agree.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddMonoid {
    /// Element names; index 0 is the neutral element.
    pub names: Vec<String>,
    /// Symmetric addition table; `add[a][b] = None` when the sum is not representable.
    pub add: Vec<Vec<Option<usize>>>,
}

impl AddMonoid {
    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn is_total(&self) -> bool {
        self.add.iter().all(|row| row.iter().all(|e| e.is_some()))
    }

    pub fn try_add(&self, a: usize, b: usize) -> Option<usize> {
        self.add[a][b]
    }

    /// Fold a slice of elements; `None` as soon as any partial sum is undefined.
    pub fn sum_of(&self, elems: &[usize]) -> Option<usize> {
        let mut acc = 0usize;
        for &e in elems {
            acc = self.add[acc][e]?;
        }
        Some(acc)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 || self.add.len() != n || self.add.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidPresentation("addition table shape mismatch".into()));
        }
        for a in 0..n {
            if self.add[0][a] != Some(a) || self.add[a][0] != Some(a) {
                return Err(Error::InvalidPresentation("index 0 is not neutral".into()));
            }
            for b in 0..n {
                if self.add[a][b] != self.add[b][a] {
                    return Err(Error::InvalidPresentation("addition is not commutative".into()));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left_inner = self.add[a][b];
                    let right_inner = self.add[b][c];
                    if let (Some(ab), Some(bc)) = (left_inner, right_inner) {
                        let left = self.add[ab][c];
                        let right = self.add[a][bc];
                        if left != right {
                            return Err(Error::InvalidPresentation(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The cyclic group Z_n (total).
    pub fn zn(n: u64) -> AddMonoid {
        let n = n as usize;
        let names = (0..n).map(|i| i.to_string()).collect();
        let add = (0..n)
            .map(|a| (0..n).map(|b| Some((a + b) % n)).collect())
            .collect();
        AddMonoid { names, add }
    }

    pub fn trivial() -> AddMonoid {
        AddMonoid::zn(1)
    }

    /// Natural numbers 0..=cap with sums beyond `cap` left undefined.
    pub fn nat_truncated(cap: usize) -> AddMonoid {
        let names = (0..=cap).map(|i| i.to_string()).collect();
        let add = (0..=cap)
            .map(|a| {
                (0..=cap)
                    .map(|b| if a + b <= cap { Some(a + b) } else { None })
                    .collect()
            })
            .collect();
        AddMonoid { names, add }
    }

    /// Componentwise product; a sum is defined only when both components are.
    pub fn product(&self, other: &AddMonoid) -> AddMonoid {
        let n1 = self.order();
        let n2 = other.order();
        let mut names = Vec::with_capacity(n1 * n2);
        for a in 0..n1 {
            for b in 0..n2 {
                names.push(format!("{}|{}", self.names[a], other.names[b]));
            }
        }
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut add = vec![vec![None; n1 * n2]; n1 * n2];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        if let (Some(a), Some(b)) = (self.add[a1][a2], other.add[b1][b2]) {
                            add[idx(a1, b1)][idx(a2, b2)] = Some(idx(a, b));
                        }
                    }
                }
            }
        }
        AddMonoid { names, add }
    }

    /// Closure of a generating set (plus 0) under all defined sums, sorted.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack: Vec<usize> = vec![0];
        for &g in gens {
            if !seen[g] {
                seen[g] = true;
                stack.push(g);
            }
        }
        while let Some(a) = stack.pop() {
            let snapshot: Vec<usize> = (0..n).filter(|&b| seen[b]).collect();
            for b in snapshot {
                if let Some(c) = self.add[a][b] {
                    if !seen[c] {
                        seen[c] = true;
                        stack.push(c);
                    }
                }
            }
        }
        (0..n).filter(|&a| seen[a]).collect()
    }

    /// Extend `seeds` (pairs source -> target) to an additive map, by closing the
    /// graph under componentwise addition. Returns the full map when the closure
    /// is functional, total on the source, and never needs an undefined target
    /// sum; `None` otherwise. The seeds must generate the source.
    pub fn additive_extension(
        &self,
        target: &AddMonoid,
        seeds: &[(usize, usize)],
    ) -> Option<Vec<usize>> {
        let n = self.order();
        let mut partner: Vec<Option<usize>> = vec![None; n];
        partner[0] = Some(0);
        let mut worklist: Vec<usize> = vec![0];
        for &(s, t) in seeds {
            match partner[s] {
                Some(prev) if prev != t => return None,
                Some(_) => {}
                None => {
                    partner[s] = Some(t);
                    worklist.push(s);
                }
            }
        }
        while let Some(a) = worklist.pop() {
            let fa = partner[a].unwrap();
            for b in 0..n {
                let fb = match partner[b] {
                    Some(v) => v,
                    None => continue,
                };
                if let Some(c) = self.add[a][b] {
                    let fc = match target.add[fa][fb] {
                        Some(v) => v,
                        // A defined source sum must land on a defined target sum.
                        None => return None,
                    };
                    match partner[c] {
                        Some(prev) if prev != fc => return None,
                        Some(_) => {}
                        None => {
                            partner[c] = Some(fc);
                            worklist.push(c);
                        }
                    }
                }
            }
        }
        partner.into_iter().collect::<Option<Vec<usize>>>()
    }

    /// Quotient a *total* monoid by the congruence generated by `pairs`.
    /// Returns the quotient and the projection map element -> class index.
    pub fn quotient_by_pairs(&self, pairs: &[(usize, usize)]) -> Result<(AddMonoid, Vec<usize>)> {
        if !self.is_total() {
            return Err(Error::InvalidPresentation(
                "quotient requires a total addition table".into(),
            ));
        }
        let n = self.order();
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut Vec<usize>, mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for &(a, b) in pairs {
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                root[hi] = lo;
            }
        }
        // Close under translation: a ~ b implies a + c ~ b + c.
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in (a + 1)..n {
                    if find(&mut root, a) == find(&mut root, b) {
                        for c in 0..n {
                            let (x, y) = (self.add[a][c].unwrap(), self.add[b][c].unwrap());
                            let (rx, ry) = (find(&mut root, x), find(&mut root, y));
                            if rx != ry {
                                let (lo, hi) = (rx.min(ry), rx.max(ry));
                                root[hi] = lo;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut reps: Vec<usize> = Vec::new();
        let mut class_of = vec![usize::MAX; n];
        for a in 0..n {
            let r = find(&mut root, a);
            if class_of[r] == usize::MAX {
                class_of[r] = reps.len();
                reps.push(r);
            }
            class_of[a] = class_of[r];
        }
        let m = reps.len();
        let names = reps.iter().map(|&r| self.names[r].clone()).collect();
        let mut add = vec![vec![None; m]; m];
        for i in 0..m {
            for j in 0..m {
                add[i][j] = Some(class_of[self.add[reps[i]][reps[j]].unwrap()]);
            }
        }
        Ok((AddMonoid { names, add }, class_of))
    }

    /// All total commutative monoids with fixed neutral 0 of order up to
    /// `max_order`, one representative per isomorphism class.
    pub fn enumerate_total(max_order: usize) -> Vec<AddMonoid> {
        let mut out = Vec::new();
        for n in 1..=max_order {
            let cells: Vec<(usize, usize)> = (1..n)
                .flat_map(|a| (a..n).map(move |b| (a, b)))
                .collect();
            let mut table = vec![vec![0usize; n]; n];
            for a in 0..n {
                table[0][a] = a;
                table[a][0] = a;
            }
            let mut seen_canonical: Vec<Vec<usize>> = Vec::new();
            let mut assignment = vec![0usize; cells.len()];
            'outer: loop {
                for (k, &(a, b)) in cells.iter().enumerate() {
                    table[a][b] = assignment[k];
                    table[b][a] = assignment[k];
                }
                if is_associative(&table) {
                    let canon = canonical_table(&table);
                    if !seen_canonical.contains(&canon) {
                        seen_canonical.push(canon);
                        let names = (0..n).map(|i| format!("e{i}")).collect();
                        let add = table
                            .iter()
                            .map(|row| row.iter().map(|&v| Some(v)).collect())
                            .collect();
                        out.push(AddMonoid { names, add });
                    }
                }
                // Odometer over the free cells.
                let mut pos = 0;
                loop {
                    if pos == assignment.len() {
                        break 'outer;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < n {
                        break;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                }
            }
        }
        out
    }

    pub fn is_isomorphic(&self, other: &AddMonoid) -> bool {
        let n = self.order();
        if n != other.order() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        permute_check(&mut perm, 1, self, other)
    }
}

fn is_associative(table: &[Vec<usize>]) -> bool {
    // All ordered triples: for a commutative table the sorted triple
    // (a, b, c) only relates two of the three pairings, so restricting to
    // a <= b <= c would let (a*c)*b != (a*b)*c slip through.
    let n = table.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimal relabeling of a total table over all permutations fixing 0.
fn canonical_table(table: &[Vec<usize>]) -> Vec<usize> {
    let n = table.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<usize>> = None;
    fn rec(perm: &mut Vec<usize>, k: usize, table: &[Vec<usize>], best: &mut Option<Vec<usize>>) {
        let n = table.len();
        if k == n {
            let mut inv = vec![0usize; n];
            for i in 0..n {
                inv[perm[i]] = i;
            }
            let mut flat = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    flat.push(perm[table[inv[a]][inv[b]]]);
                }
            }
            if best.as_ref().map_or(true, |b| flat < *b) {
                *best = Some(flat);
            }
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            rec(perm, k + 1, table, best);
            perm.swap(k, i);
        }
    }
    rec(&mut perm, 1, table, &mut best);
    best.unwrap()
}

fn permute_check(perm: &mut Vec<usize>, k: usize, a: &AddMonoid, b: &AddMonoid) -> bool {
    let n = a.order();
    if k == n {
        for x in 0..n {
            for y in 0..n {
                let lhs = a.add[x][y].map(|v| perm[v]);
                let rhs = b.add[perm[x]][perm[y]];
                if lhs != rhs {
                    return false;
                }
            }
        }
        return true;
    }
    for i in k..n {
        perm.swap(k, i);
        if permute_check(perm, k + 1, a, b) {
            return true;
        }
        perm.swap(k, i);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_truncated_tables_validate() {
        for n in 1..6 {
            AddMonoid::zn(n).validate().unwrap();
        }
        for cap in 0..5 {
            let m = AddMonoid::nat_truncated(cap);
            m.validate().unwrap();
            assert_eq!(m.is_total(), cap == 0);
        }
    }

    #[test]
    fn enumeration_matches_known_counts() {
        let all = AddMonoid::enumerate_total(4);
        let count = |k: usize| all.iter().filter(|m| m.order() == k).count();
        // Commutative monoids with 1, 2, 3, 4 elements up to isomorphism.
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 2);
        assert_eq!(count(3), 5);
        assert_eq!(count(4), 19);
        for m in &all {
            m.validate().unwrap();
        }
    }

    #[test]
    fn extension_finds_group_homomorphisms() {
        let z4 = AddMonoid::zn(4);
        let z2 = AddMonoid::zn(2);
        // 1 -> 1 extends (k -> k mod 2); 1 -> itself in Z2 of course.
        let f = z4.additive_extension(&z2, &[(1, 1)]).unwrap();
        assert_eq!(f, vec![0, 1, 0, 1]);
        // Z2 -> Z4 sending 1 -> 1 fails: 1+1 = 0 must map to 2.
        assert!(z2.additive_extension(&z4, &[(1, 1)]).is_none());
        assert_eq!(z2.additive_extension(&z4, &[(1, 2)]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn extension_respects_partial_targets() {
        let n2 = AddMonoid::nat_truncated(2);
        let z2 = AddMonoid::zn(2);
        // Z2 -> N2 with 1 -> 1 needs 1+1 defined and equal to 0; it is 2.
        assert!(z2.additive_extension(&n2, &[(1, 1)]).is_none());
        // N2 -> Z2 (1 -> 1) works: 2 -> 0, and 1+2, 2+2 are undefined at the source.
        assert_eq!(n2.additive_extension(&z2, &[(1, 1)]).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn quotient_collapses_congruent_elements() {
        let z4 = AddMonoid::zn(4);
        let (q, proj) = z4.quotient_by_pairs(&[(0, 2)]).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_isomorphic(&AddMonoid::zn(2)));
        assert_eq!(proj, vec![0, 1, 0, 1]);
    }

    #[test]
    fn products_stay_partial_where_either_factor_is() {
        let m = AddMonoid::nat_truncated(1).product(&AddMonoid::zn(2));
        m.validate().unwrap();
        assert_eq!(m.order(), 4);
        assert!(!m.is_total());
    }
}
