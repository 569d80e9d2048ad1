//! Correct partitions, quotients, p-morphisms and isomorphism search.

use serde::Serialize;

use super::{commutation_witness, Frame};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::relation::Relation;

/// On a finite frame every partition is separated by saturated clopens, since
/// every set is clopen.
pub const SEPARATION_NOTE: &str =
    "finite frame: every partition is separated, so only the R- and E-clauses are checked";

pub const DEFAULT_ISO_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PartitionClause {
    /// `RK ⊆ KR`
    R,
    /// `EK ⊆ KE`
    E,
}

/// `x K y`, `y S y'`, and no `x'` with `x S x'`, `x' K y'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionFailure {
    pub clause: PartitionClause,
    pub x: String,
    pub y: String,
    pub y2: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrectnessReport {
    pub correct: bool,
    pub failure: Option<PartitionFailure>,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PMorphismFailure {
    /// `"R"` or `"E"`.
    pub relation: &'static str,
    /// `"forth"`: `x S y` but not `f(x) S' f(y)`; `"back"`: `f(x) S' y'` with
    /// no `S`-successor of `x` mapped to `y'`.
    pub condition: &'static str,
    pub x: String,
    pub y: String,
}

/// Block relation `α S̄ β` iff some members are `S`-related.
pub(crate) fn lift_relation(rel: &Relation, k: &Partition) -> Relation {
    let blocks = k.block_sets();
    let m = blocks.len();
    Relation::from_rows(
        blocks
            .iter()
            .map(|a| {
                let img = rel.image(a);
                PointSet::from_indices(m, (0..m).filter(|&j| blocks[j].intersects(&img)))
            })
            .collect(),
    )
}

/// Checks forth and back for one relation pair; returns the first failure
/// as `(condition, x, y)` in indices of source and target respectively.
pub(crate) fn p_morphism_failure(
    f: &[usize],
    src: &Relation,
    dst: &Relation,
) -> Option<(&'static str, usize, usize)> {
    for x in 0..src.len() {
        for y in &src.successors(x) {
            if !dst.contains(f[x], f[y]) {
                return Some(("forth", x, y));
            }
        }
        let hit = PointSet::from_indices(dst.len(), src.successors(x).iter().map(|y| f[y]));
        if let Some(y2) = dst.successors(f[x]).difference(&hit).first() {
            return Some(("back", x, y2));
        }
    }
    None
}

impl Frame {
    pub fn check_partition_width(&self, k: &Partition) -> Result<()> {
        if k.num_points() != self.len() {
            return Err(Error::BadPartition(format!(
                "partition covers {} points, frame has {}",
                k.num_points(),
                self.len()
            )));
        }
        Ok(())
    }

    /// `RK ⊆ KR` and `EK ⊆ KE`.
    pub fn is_correct_partition(&self, k: &Partition) -> Result<CorrectnessReport> {
        self.check_partition_width(k)?;
        let k_rel = k.to_relation();
        let failure = [
            (PartitionClause::R, self.r()),
            (PartitionClause::E, self.e_relation()),
        ]
        .into_iter()
        .find_map(|(clause, rel)| {
            commutation_witness(rel, &k_rel).map(|(x, y, y2)| PartitionFailure {
                clause,
                x: self.name(x).to_string(),
                y: self.name(y).to_string(),
                y2: self.name(y2).to_string(),
            })
        });
        Ok(CorrectnessReport {
            correct: failure.is_none(),
            failure,
            note: SEPARATION_NOTE,
        })
    }

    /// `F/K`; blocks are named after their least member.
    pub fn quotient(&self, k: &Partition) -> Result<Frame> {
        let report = self.is_correct_partition(k)?;
        if let Some(f) = report.failure {
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
        let r = lift_relation(self.r(), k);
        let e = Partition::from_equivalence(&lift_relation(self.e_relation(), k))
            .map_err(|_| Error::Internal("quotient of E is not an equivalence".into()))?;
        let layers = self.layers().and_then(|l| {
            k.blocks()
                .iter()
                .map(|b| b.iter().all(|&x| l[x] == l[b[0]]).then_some(l[b[0]]))
                .collect::<Option<Vec<_>>>()
        });
        Frame::from_parts(names, r, e, layers)
    }

    /// Projection onto the blocks of `k` as a point map.
    pub fn quotient_map(k: &Partition) -> Vec<usize> {
        k.labels()
    }

    /// Whether `f` (indexed by this frame's points) is a p-morphism onto
    /// `target` for both `(R, R')` and `(E, E')`.
    pub fn is_p_morphism(&self, f: &[usize], target: &Frame) -> Result<Option<PMorphismFailure>> {
        if f.len() != self.len() {
            return Err(Error::Precondition(format!(
                "map has {} entries, source has {} points",
                f.len(),
                self.len()
            )));
        }
        if let Some(&bad) = f.iter().find(|&&v| v >= target.len()) {
            return Err(Error::Precondition(format!("map value {bad} out of range")));
        }
        for (label, src, dst) in [
            ("R", self.r(), target.r()),
            ("E", self.e_relation(), target.e_relation()),
        ] {
            if let Some((condition, x, y)) = p_morphism_failure(f, src, dst) {
                let y = if condition == "forth" {
                    self.name(y)
                } else {
                    target.name(y)
                };
                return Ok(Some(PMorphismFailure {
                    relation: label,
                    condition,
                    x: self.name(x).to_string(),
                    y: y.to_string(),
                }));
            }
        }
        Ok(None)
    }
}

/// Per-point invariants preserved by isomorphisms.
fn signature(f: &Frame) -> Vec<(usize, usize, usize, usize, usize)> {
    let layers = f.layers_by_max();
    let mut layer_of = vec![0; f.len()];
    for (i, d) in layers.iter().enumerate() {
        for x in d {
            layer_of[x] = i;
        }
    }
    let e_sizes = f.e().labels();
    let q = f.q_relation();
    (0..f.len())
        .map(|x| {
            (
                f.r().successors(x).len(),
                f.r().predecessors(x).len(),
                f.e().blocks()[e_sizes[x]].len(),
                layer_of[x],
                q.successors(x).len(),
            )
        })
        .collect()
}

pub fn find_isomorphism(f: &Frame, g: &Frame) -> Result<Option<Vec<usize>>> {
    find_isomorphism_with_cap(f, g, DEFAULT_ISO_CAP)
}

/// Backtracking search for a bijection preserving and reflecting `R` and `E`.
/// The first map in lexicographic order of images is returned.
pub fn find_isomorphism_with_cap(f: &Frame, g: &Frame, cap: usize) -> Result<Option<Vec<usize>>> {
    for fr in [f, g] {
        if fr.len() > cap {
            return Err(Error::CapExceeded {
                what: "isomorphism search points".into(),
                size: fr.len(),
                cap,
            });
        }
    }
    if f.len() != g.len() {
        return Ok(None);
    }
    let sf = signature(f);
    let sg = signature(g);
    let mut a = sf.clone();
    let mut b = sg.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    let n = f.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(f: &Frame, g: &Frame, map: &[usize], x: usize) -> bool {
        let fx = map[x];
        (0..=x).all(|y| {
            let fy = map[y];
            f.r().contains(x, y) == g.r().contains(fx, fy)
                && f.r().contains(y, x) == g.r().contains(fy, fx)
                && f.e_relation().contains(x, y) == g.e_relation().contains(fx, fy)
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        x: usize,
        f: &Frame,
        g: &Frame,
        sf: &[(usize, usize, usize, usize, usize)],
        sg: &[(usize, usize, usize, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if x == f.len() {
            return true;
        }
        for cand in 0..g.len() {
            if used[cand] || sf[x] != sg[cand] {
                continue;
            }
            map[x] = cand;
            if consistent(f, g, map, x) {
                used[cand] = true;
                if search(x + 1, f, g, sf, sg, map, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        map[x] = usize::MAX;
        false
    }

    Ok(search(0, f, g, &sf, &sg, &mut map, &mut used).then_some(map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{build_frame, ClosureMode};

    fn fig2f() -> Frame {
        build_frame(
            &["a", "b"],
            &[("a", "b")],
            &[vec!["a", "b"]],
            ClosureMode::Close,
        )
        .unwrap()
    }

    fn fig2g() -> Frame {
        build_frame(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "1"), ("3", "4"), ("4", "3")],
            &[vec!["1", "3"], vec!["2", "4"]],
            ClosureMode::Close,
        )
        .unwrap()
    }

    /// Brute-force clause check: enumerate all triples directly.
    fn correct_oracle(f: &Frame, k: &Partition) -> bool {
        let n = f.len();
        let kr = k.to_relation();
        for rel in [f.r(), f.e_relation()] {
            for x in 0..n {
                for y in 0..n {
                    for y2 in 0..n {
                        if kr.contains(x, y)
                            && rel.contains(y, y2)
                            && !(0..n).any(|x2| rel.contains(x, x2) && kr.contains(x2, y2))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[test]
    fn trivial_partitions_are_correct() {
        for f in [fig2f(), fig2g(), Frame::single("x")] {
            let n = f.len();
            assert!(
                f.is_correct_partition(&Partition::identity(n))
                    .unwrap()
                    .correct
            );
            assert!(
                f.is_correct_partition(&Partition::single_block(n))
                    .unwrap()
                    .correct
            );
        }
    }

    #[test]
    fn fig2g_column_merge_fails_e_clause() {
        let g = fig2g();
        let k = Partition::new(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let rep = g.is_correct_partition(&k).unwrap();
        assert!(!rep.correct);
        assert!(!correct_oracle(&g, &k));
        let w = rep.failure.unwrap();
        assert_eq!(w.clause, PartitionClause::E);
        assert_eq!((w.x.as_str(), w.y.as_str(), w.y2.as_str()), ("1", "2", "4"));
        assert!(matches!(g.quotient(&k), Err(Error::IncorrectPartition(_))));
    }

    #[test]
    fn correctness_agrees_with_oracle_on_all_partitions() {
        for f in [fig2f(), fig2g()] {
            for k in crate::partition::all_partitions(f.len()) {
                assert_eq!(
                    f.is_correct_partition(&k).unwrap().correct,
                    correct_oracle(&f, &k)
                );
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let g = fig2g();
        let q = g.quotient(&Partition::identity(4)).unwrap();
        assert!(find_isomorphism(&q, &g).unwrap().is_some());
        let q = g.quotient(&Partition::single_block(4)).unwrap();
        assert_eq!(q.len(), 1);

        // a -> b, b <-> c cluster, identity E; merging the cluster gives a 2-chain.
        let f = build_frame(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "b")],
            &[],
            ClosureMode::Close,
        )
        .unwrap();
        let k = Partition::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        assert!(f.is_correct_partition(&k).unwrap().correct);
        let q = f.quotient(&k).unwrap();
        let chain2 = build_frame(&["a", "b"], &[("a", "b")], &[], ClosureMode::Close).unwrap();
        assert!(find_isomorphism(&q, &chain2).unwrap().is_some());
        assert_eq!(q.names(), &["a".to_string(), "b".to_string()]);
    }

    #[test]
    fn p_morphism_examples() {
        let g = fig2g();
        let id: Vec<usize> = (0..4).collect();
        assert!(g.is_p_morphism(&id, &g).unwrap().is_none());
        let one = Frame::single("*");
        assert!(fig2f().is_p_morphism(&[0, 0], &one).unwrap().is_none());
        for k in crate::partition::all_partitions(4) {
            if g.is_correct_partition(&k).unwrap().correct {
                let q = g.quotient(&k).unwrap();
                assert!(g
                    .is_p_morphism(&Frame::quotient_map(&k), &q)
                    .unwrap()
                    .is_none());
            }
        }
        // Mapping the 2-point chain onto itself reversed breaks forth for R.
        let f = fig2f();
        let fail = f.is_p_morphism(&[1, 0], &f).unwrap().unwrap();
        assert_eq!((fail.relation, fail.condition), ("R", "forth"));
    }

    #[test]
    fn isomorphism_examples() {
        let g = fig2g();
        assert!(find_isomorphism(&g, &g).unwrap().is_some());
        assert!(find_isomorphism(&fig2f(), &g).unwrap().is_none());
        let relabeled = build_frame(
            &["w", "x", "y", "z"],
            &[("z", "x"), ("x", "z"), ("w", "y"), ("y", "w")],
            &[vec!["x", "y"], vec!["z", "w"]],
            ClosureMode::Close,
        )
        .unwrap();
        let m = find_isomorphism(&g, &relabeled).unwrap().unwrap();
        assert!(g.is_p_morphism(&m, &relabeled).unwrap().is_none());
        let mut inv = vec![0; 4];
        for (i, &j) in m.iter().enumerate() {
            inv[j] = i;
        }
        assert!(relabeled.is_p_morphism(&inv, &g).unwrap().is_none());
    }

    #[test]
    fn iso_cap_is_enforced() {
        let names: Vec<String> = (0..30).map(|i| i.to_string()).collect();
        let big = Frame::from_parts(names, Relation::identity(30), Partition::identity(30), None)
            .unwrap();
        assert!(matches!(
            find_isomorphism(&big, &big),
            Err(Error::CapExceeded { .. })
        ));
    }
}
