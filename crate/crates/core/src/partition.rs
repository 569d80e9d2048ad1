//! Canonical set partitions.
//!
//! Blocks are sorted internally and ordered by least member, so two
//! partitions of the same point set are equal iff they are structurally equal.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::relation::Relation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.blocks).finish()
    }
}

impl Partition {
    /// Validates that `blocks` are nonempty, pairwise disjoint and cover `0..n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::BadPartition("empty block".into()));
            }
            for &i in block {
                if i >= n {
                    return Err(Error::BadPartition(format!("index {i} out of range {n}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::BadPartition(format!(
                        "point index {i} lies in two blocks"
                    )));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::BadPartition(format!(
                "point index {i} is not covered"
            )));
        }
        Ok(Self::canonical(blocks))
    }

    fn canonical(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { blocks }
    }

    /// Partition into blocks of equal labels.
    pub fn from_labels<T: Ord + Clone>(labels: &[T]) -> Self {
        let mut map = std::collections::BTreeMap::<T, Vec<usize>>::new();
        for (i, l) in labels.iter().enumerate() {
            map.entry(l.clone()).or_default().push(i);
        }
        Self::canonical(map.into_values().collect())
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn single_block(n: usize) -> Self {
        Partition {
            blocks: if n == 0 {
                vec![]
            } else {
                vec![(0..n).collect()]
            },
        }
    }

    /// The equivalence classes of `r`; fails unless `r` is an equivalence.
    pub fn from_equivalence(r: &Relation) -> Result<Self> {
        if !r.is_equivalence() {
            return Err(Error::BadPartition("relation is not an equivalence".into()));
        }
        Ok(Self::from_labels(
            &(0..r.len())
                .map(|x| r.successors(x).first().unwrap_or(x))
                .collect::<Vec<_>>(),
        ))
    }

    /// Finest equivalence containing every given group (groups may overlap
    /// and need not cover all points).
    pub fn generated_by(n: usize, groups: &[Vec<usize>]) -> Self {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let nx = p[c];
                p[c] = r;
                c = nx;
            }
            r
        }
        for g in groups {
            if let Some(&first) = g.first() {
                for &y in &g[1..] {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, y));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let labels: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Self::from_labels(&labels)
    }

    #[inline]
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn num_points(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index of every point.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_points()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i] = b;
            }
        }
        out
    }

    pub fn block_sets(&self) -> Vec<PointSet> {
        let n = self.num_points();
        self.blocks
            .iter()
            .map(|b| PointSet::from_indices(n, b.iter().copied()))
            .collect()
    }

    pub fn to_relation(&self) -> Relation {
        let n = self.num_points();
        let sets = self.block_sets();
        let labels = self.labels();
        Relation::from_rows((0..n).map(|x| sets[labels[x]]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// `self ⊆ other` as equivalence relations (every block of `self` sits
    /// inside a block of `other`).
    pub fn refines(&self, other: &Partition) -> bool {
        let lab = other.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&i| lab[i] == lab[b[0]]))
    }

    /// Least equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut groups = self.blocks.clone();
        groups.extend(other.blocks.iter().cloned());
        Self::generated_by(self.num_points(), &groups)
    }

    /// Greatest equivalence contained in both.
    pub fn meet(&self, other: &Partition) -> Partition {
        let a = self.labels();
        let b = other.labels();
        Self::from_labels(&a.into_iter().zip(b).collect::<Vec<_>>())
    }

    /// True if `set` is a union of blocks.
    pub fn saturates(&self, set: &PointSet) -> bool {
        self.block_sets()
            .iter()
            .all(|b| b.is_subset(set) || !b.intersects(set))
    }
}

/// All set partitions of `0..n` in restricted-growth-string order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == rgs.len() {
            out.push(Partition::from_labels(rgs));
            return;
        }
        for v in 0..=max + 1 {
            rgs[i] = v;
            rec(i + 1, max.max(v), rgs, out);
        }
    }
    if n == 0 {
        return vec![Partition { blocks: vec![] }];
    }
    rec(1, 0, &mut rgs, &mut out);
    out
}
