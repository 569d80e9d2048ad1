//! Binary relations on a finite point set, stored as successor rows.

use crate::pointset::PointSet;

/// An `n × n` boolean matrix; row `x` is the successor set `R(x)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    rows: Vec<PointSet>,
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.pairs()).finish()
    }
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            rows: vec![PointSet::empty(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Relation {
            rows: (0..n).map(|i| PointSet::singleton(n, i)).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Relation {
            rows: vec![PointSet::full(n); n],
        }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut r = Self::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn from_rows(rows: Vec<PointSet>) -> Self {
        let n = rows.len();
        debug_assert!(rows.iter().all(|r| r.width() == n));
        Relation { rows }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x].insert(y);
    }

    /// `R(x)`.
    #[inline]
    pub fn successors(&self, x: usize) -> PointSet {
        self.rows[x]
    }

    /// `R⁻¹(x)`.
    pub fn predecessors(&self, y: usize) -> PointSet {
        let n = self.len();
        PointSet::from_indices(n, (0..n).filter(|&x| self.rows[x].contains(y)))
    }

    /// `R⁻¹(U)`: points with at least one successor in `U`. This is the dual
    /// diamond of the relation.
    pub fn preimage(&self, u: &PointSet) -> PointSet {
        let n = self.len();
        let mut out = PointSet::empty(n);
        for (x, row) in self.rows.iter().enumerate() {
            if row.intersects(u) {
                out.insert(x);
            }
        }
        out
    }

    /// `R(U)`: all successors of members of `U`.
    pub fn image(&self, u: &PointSet) -> PointSet {
        let mut out = PointSet::empty(self.len());
        for x in u {
            out = out.union(&self.rows[x]);
        }
        out
    }

    /// `{x : R(x) ⊆ U}`, the dual box.
    pub fn universal_preimage(&self, u: &PointSet) -> PointSet {
        self.preimage(&u.complement()).complement()
    }

    /// Relational composition read left to right: `x (self;other) z` iff
    /// `x self y` and `y other z` for some `y`. With this reading
    /// `Q = R.then(E)` is the relation `E(R(x))`.
    pub fn then(&self, other: &Relation) -> Relation {
        Relation {
            rows: self.rows.iter().map(|row| other.image(row)).collect(),
        }
    }

    pub fn union(&self, other: &Relation) -> Relation {
        Relation {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.union(b))
                .collect(),
        }
    }

    pub fn transpose(&self) -> Relation {
        let n = self.len();
        Relation {
            rows: (0..n).map(|y| self.predecessors(y)).collect(),
        }
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    pub fn is_reflexive(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, r)| r.contains(x))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_total(&self) -> bool {
        self.rows.iter().all(|r| r.is_full())
    }

    /// First triple `(x, y, z)` with `x R y R z` but not `x R z`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.len() {
            for y in &self.rows[x] {
                let missing = self.rows[y].difference(&self.rows[x]);
                if let Some(z) = missing.first() {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    pub fn is_quasi_order(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_equivalence(&self) -> bool {
        self.is_quasi_order() && self.is_symmetric()
    }

    /// Reflexive-transitive closure (Warshall).
    pub fn reflexive_transitive_closure(&self) -> Relation {
        let n = self.len();
        let mut rows = self.rows.clone();
        for (x, row) in rows.iter_mut().enumerate() {
            row.insert(x);
        }
        for k in 0..n {
            let rk = rows[k];
            for row in rows.iter_mut() {
                if row.contains(k) {
                    *row = row.union(&rk);
                }
            }
        }
        Relation { rows }
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows
    }

    /// Restriction to the points of `keep`, re-indexed in increasing order.
    pub fn restrict(&self, keep: &PointSet) -> Relation {
        let idx: Vec<usize> = keep.iter().collect();
        let m = idx.len();
        Relation {
            rows: idx
                .iter()
                .map(|&x| {
                    PointSet::from_indices(
                        m,
                        idx.iter()
                            .enumerate()
                            .filter(|(_, &y)| self.contains(x, y))
                            .map(|(j, _)| j),
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_chain() {
        let r = Relation::from_pairs(3, [(0, 1), (1, 2)]).reflexive_transitive_closure();
        assert!(r.is_quasi_order());
        assert!(r.contains(0, 2));
        assert!(!r.contains(2, 0));
    }

    #[test]
    fn composition_reads_left_to_right() {
        // 0 R 1, 1 E 2  =>  0 (R;E) 2
        let r = Relation::from_pairs(3, [(0, 1)]);
        let e = Relation::from_pairs(3, [(1, 2)]);
        let q = r.then(&e);
        assert!(q.contains(0, 2));
        assert_eq!(q.pairs().count(), 1);
    }

    #[test]
    fn transitivity_witness_reports_first_gap() {
        let r = Relation::from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]);
        assert_eq!(r.transitivity_witness(), Some((0, 1, 2)));
    }

    #[test]
    fn preimage_and_box_are_dual() {
        let r = Relation::from_pairs(3, [(0, 0), (0, 1), (1, 1), (2, 2)]);
        let u = PointSet::from_indices(3, [1]);
        assert_eq!(r.preimage(&u), PointSet::from_indices(3, [0, 1]));
        assert_eq!(r.universal_preimage(&u), PointSet::from_indices(3, [1]));
    }
}
