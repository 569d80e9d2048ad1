//! Finite S5₂-frames (two independent equivalences) and the translation of
//! such frames into depth-2 MS4-frames with a top rail of `E₂`-classes.

mod translate;

pub use translate::{
    lift_partition, relativize, relativize_to, subalgebra_transfer, subalgebra_transfer_in,
    translate, Relativization, TransferReport,
};

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::{
    commutation_witness, index_names, lift_relation, Frame, PartitionClause, PartitionFailure,
};
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::relation::Relation;

#[derive(Clone, PartialEq, Eq)]
pub struct S52Frame {
    names: Vec<String>,
    index: HashMap<String, usize>,
    e1: Partition,
    e2: Partition,
    e1_rel: Relation,
    e2_rel: Relation,
}

impl std::fmt::Debug for S52Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("S52Frame")
            .field("points", &self.names)
            .field("E1", &self.e1)
            .field("E2", &self.e2)
            .finish()
    }
}

/// Builds an S5₂-frame; both block lists must partition the points.
pub fn build_s52<S: AsRef<str>>(
    points: &[S],
    e1_blocks: &[Vec<S>],
    e2_blocks: &[Vec<S>],
) -> Result<S52Frame> {
    let names: Vec<String> = points.iter().map(|s| s.as_ref().to_string()).collect();
    let index = index_names(&names)?;
    let n = names.len();
    let resolve = |blocks: &[Vec<S>]| -> Result<Partition> {
        let idx = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|s| {
                        index
                            .get(s.as_ref())
                            .copied()
                            .ok_or_else(|| Error::UnknownPoint(s.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(n, idx)
    };
    let e1 = resolve(e1_blocks)?;
    let e2 = resolve(e2_blocks)?;
    S52Frame::from_parts(names, e1, e2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S52Analysis {
    /// `S = E₁ ∪ E₂`
    #[serde(skip)]
    pub s_relation: Relation,
    /// Reflexive-transitive closure of `S`.
    #[serde(skip)]
    pub s_star: Relation,
    #[serde(skip)]
    pub roots: PointSet,
    pub is_si: bool,
    pub is_simple: bool,
    /// Least `n` with `Sⁿ⁺¹ = Sⁿ`.
    pub transitivity_degree: usize,
}

impl S52Frame {
    pub fn from_parts(names: Vec<String>, e1: Partition, e2: Partition) -> Result<S52Frame> {
        let index = index_names(&names)?;
        let n = names.len();
        if e1.num_points() != n || e2.num_points() != n {
            return Err(Error::BadPartition(format!(
                "partitions cover {} and {} points, frame has {n}",
                e1.num_points(),
                e2.num_points()
            )));
        }
        let e1_rel = e1.to_relation();
        let e2_rel = e2.to_relation();
        Ok(S52Frame {
            names,
            index,
            e1,
            e2,
            e1_rel,
            e2_rel,
        })
    }

    pub fn from_indexed(e1: Partition, e2: Partition) -> Result<S52Frame> {
        let names = (0..e1.num_points()).map(|i| i.to_string()).collect();
        Self::from_parts(names, e1, e2)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    pub fn e1(&self) -> &Partition {
        &self.e1
    }

    pub fn e2(&self) -> &Partition {
        &self.e2
    }

    pub fn e1_relation(&self) -> &Relation {
        &self.e1_rel
    }

    pub fn e2_relation(&self) -> &Relation {
        &self.e2_rel
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.len())
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet> {
        let mut s = self.empty_set();
        for n in names {
            s.insert(self.index_of(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn names_of(&self, set: &PointSet) -> Vec<String> {
        set.iter().map(|i| self.names[i].clone()).collect()
    }

    /// `∃₁U = E₁(U)`.
    pub fn ex1(&self, u: &PointSet) -> PointSet {
        self.e1_rel.image(u)
    }

    /// `∃₂U = E₂(U)`.
    pub fn ex2(&self, u: &PointSet) -> PointSet {
        self.e2_rel.image(u)
    }

    /// `◊ = ∃₁ ∨ ∃₂`, dual to `S`.
    pub fn lozenge(&self, u: &PointSet) -> PointSet {
        self.ex1(u).union(&self.ex2(u))
    }

    pub fn analyze(&self) -> S52Analysis {
        let n = self.len();
        let s = self.e1_rel.union(&self.e2_rel);
        let s_star = s.reflexive_transitive_closure();
        let roots = PointSet::from_indices(n, (0..n).filter(|&x| s_star.successors(x).is_full()));
        let mut power = Relation::identity(n);
        let mut degree = 0;
        loop {
            let next = power.then(&s);
            if next == power {
                break;
            }
            power = next;
            degree += 1;
        }
        debug_assert_eq!(power, s_star);
        S52Analysis {
            s_relation: s,
            s_star,
            roots,
            is_si: !roots.is_empty(),
            is_simple: roots.is_full(),
            transitivity_degree: degree,
        }
    }

    /// `E₁K ⊆ KE₁` and `E₂K ⊆ KE₂` (the frame read with `R = E₁`, `E = E₂`).
    pub fn correctness_failure(&self, k: &Partition) -> Result<Option<PartitionFailure>> {
        if k.num_points() != self.len() {
            return Err(Error::BadPartition(format!(
                "partition covers {} points, frame has {}",
                k.num_points(),
                self.len()
            )));
        }
        let k_rel = k.to_relation();
        Ok([
            (PartitionClause::R, &self.e1_rel),
            (PartitionClause::E, &self.e2_rel),
        ]
        .into_iter()
        .find_map(|(clause, rel)| {
            commutation_witness(rel, &k_rel).map(|(x, y, y2)| PartitionFailure {
                clause,
                x: self.name(x).to_string(),
                y: self.name(y).to_string(),
                y2: self.name(y2).to_string(),
            })
        }))
    }

    pub fn is_correct_partition(&self, k: &Partition) -> Result<bool> {
        Ok(self.correctness_failure(k)?.is_none())
    }

    /// `F/K` with blocks named after their least member.
    pub fn quotient(&self, k: &Partition) -> Result<S52Frame> {
        if let Some(f) = self.correctness_failure(k)? {
            return Err(Error::IncorrectPartition(format!(
                "{:?} clause fails at ({}, {}, {})",
                f.clause, f.x, f.y, f.y2
            )));
        }
        let names = k
            .blocks()
            .iter()
            .map(|b| self.name(b[0]).to_string())
            .collect();
        let lift = |rel: &Relation| {
            Partition::from_equivalence(&lift_relation(rel, k))
                .map_err(|_| Error::Internal("quotient relation is not an equivalence".into()))
        };
        S52Frame::from_parts(names, lift(&self.e1_rel)?, lift(&self.e2_rel)?)
    }

    /// The MS4-frame with `R = E₁` and `E = E₂`; fails unless the two
    /// equivalences commute.
    pub fn as_ms4(&self) -> Result<Frame> {
        Frame::from_parts(
            self.names.clone(),
            self.e1_rel.clone(),
            self.e2.clone(),
            None,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid2() -> S52Frame {
        build_s52(
            &["a", "b", "c", "d"],
            &[vec!["a", "b"], vec!["c", "d"]],
            &[vec!["a", "c"], vec!["b", "d"]],
        )
        .unwrap()
    }

    /// Path `0 -E₂- 1 -E₁- 2 -E₂- 3 …`.
    fn snake(m: usize) -> S52Frame {
        let e2: Vec<Vec<usize>> = (0..m / 2).map(|i| vec![2 * i, 2 * i + 1]).collect();
        let mut e1: Vec<Vec<usize>> = vec![vec![0]];
        e1.extend((0..m / 2 - 1).map(|i| vec![2 * i + 1, 2 * i + 2]));
        e1.push(vec![m - 1]);
        S52Frame::from_indexed(
            Partition::new(m, e1).unwrap(),
            Partition::new(m, e2).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn build_examples() {
        assert_eq!(grid2().len(), 4);
        let one = build_s52(&["x"], &[vec!["x"]], &[vec!["x"]]).unwrap();
        assert!(one.e1().is_identity() && one.e2().is_identity());
        assert!(build_s52(&["x", "y"], &[vec!["x"]], &[vec!["x", "y"]]).is_err());
        assert_eq!(snake(4).e1().blocks(), &[vec![0], vec![1, 2], vec![3]]);
    }

    #[test]
    fn analysis_one_point() {
        let one = build_s52(&["x"], &[vec!["x"]], &[vec!["x"]]).unwrap();
        let a = one.analyze();
        assert_eq!(a.transitivity_degree, 0);
        assert!(a.is_simple);
    }

    #[test]
    fn snake_degree_grows() {
        let degrees: Vec<usize> = [2, 4, 6, 8]
            .iter()
            .map(|&m| {
                let a = snake(m).analyze();
                assert!(a.is_simple && a.s_star.is_total());
                a.transitivity_degree
            })
            .collect();
        // A path on m points has diameter m - 1.
        assert_eq!(degrees, vec![1, 3, 5, 7]);
    }

    #[test]
    fn disjoint_snakes_are_not_rooted() {
        let e1 = Partition::new(4, vec![vec![0], vec![1], vec![2], vec![3]]).unwrap();
        let e2 = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let f = S52Frame::from_indexed(e1, e2).unwrap();
        let a = f.analyze();
        assert!(!a.is_si && !a.is_simple);
        assert!(a.roots.is_empty());
    }

    #[test]
    fn grid_commutes_snake_does_not() {
        assert!(grid2().as_ms4().is_ok());
        assert!(matches!(snake(4).as_ms4(), Err(Error::NotCommuting { .. })));
    }

    #[test]
    fn snake_fold_is_correct() {
        let s = snake(4);
        let k = Partition::new(4, vec![vec![0, 3], vec![1, 2]]).unwrap();
        assert!(s.is_correct_partition(&k).unwrap());
        let q = s.quotient(&k).unwrap();
        assert_eq!(q.e2().num_blocks(), 1);
        assert!(q.e1().is_identity());
    }
}
