use serde::Serialize;

use super::Frame;
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::relation::Relation;

/// Finite frames carry the discrete topology, so every set of `Q`-roots is
/// open and "strongly `Q`-rooted" reduces to "`Q`-rooted".
pub const FINITE_ROOTEDNESS_NOTE: &str =
    "finite frame: the set of Q-roots is open, so strongly Q-rooted coincides with Q-rooted";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameClassification {
    /// Length of the longest proper `R`-chain.
    pub depth: usize,
    /// `D₁, D₂, …`, each the quasi-maximal points of what is left.
    #[serde(skip)]
    pub layers: Vec<PointSet>,
    #[serde(skip)]
    pub q_roots: PointSet,
    pub is_si: bool,
    pub is_simple: bool,
    pub strongly_q_rooted: bool,
    pub note: &'static str,
}

impl Frame {
    /// `Q = ER`: `x Q y` iff `x R z` and `z E y` for some `z`.
    pub fn q_relation(&self) -> Relation {
        self.r().then(self.e_relation())
    }

    /// Partition into `R`-clusters (classes of `R ∩ R⁻¹`).
    pub fn clusters(&self) -> Partition {
        let n = self.len();
        let labels: Vec<usize> = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| self.r().contains(x, y) && self.r().contains(y, x))
                    .expect("reflexive")
            })
            .collect();
        Partition::from_labels(&labels)
    }

    /// Longest proper chain starting at each point, measured in clusters.
    fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let r = self.r();
        let mut memo = vec![0usize; n];
        fn height(x: usize, r: &Relation, memo: &mut [usize]) -> usize {
            if memo[x] != 0 {
                return memo[x];
            }
            let mut best = 0;
            for y in &r.successors(x) {
                if !r.contains(y, x) {
                    best = best.max(height(y, r, memo));
                }
            }
            memo[x] = best + 1;
            memo[x]
        }
        (0..n).map(|x| height(x, r, &mut memo)).collect()
    }

    /// Layers by the inductive definition `D₁ = max X`,
    /// `Dₙ₊₁ = max(X − D₁ − … − Dₙ)`.
    pub fn layers_by_max(&self) -> Vec<PointSet> {
        let mut rest = self.full_set();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let top = PointSet::from_indices(
                self.len(),
                rest.iter().filter(|&x| {
                    self.r()
                        .successors(x)
                        .intersection(&rest)
                        .iter()
                        .all(|y| self.r().contains(y, x))
                }),
            );
            assert!(!top.is_empty(), "finite quasi-order has maximal points");
            out.push(top);
            rest = rest.difference(&top);
        }
        out
    }

    pub fn classify(&self) -> FrameClassification {
        let heights = self.heights();
        let depth = heights.iter().copied().max().unwrap_or(0);
        let layers = self.layers_by_max();
        debug_assert_eq!(layers.len(), depth);
        debug_assert!(layers
            .iter()
            .enumerate()
            .all(|(i, d)| d.iter().all(|x| heights[x] == i + 1)));
        let q = self.q_relation();
        let q_roots = PointSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&x| q.successors(x).is_full()),
        );
        let is_si = !q_roots.is_empty();
        FrameClassification {
            depth,
            layers,
            q_roots,
            is_si,
            is_simple: q_roots.is_full(),
            strongly_q_rooted: is_si,
            note: FINITE_ROOTEDNESS_NOTE,
        }
    }

    /// The S4-frame of `E`-classes, `α R̄ β` iff some `x ∈ α`, `y ∈ β` have
    /// `x R y`; the result carries the identity equivalence.
    pub fn skeleton(&self) -> Frame {
        let blocks = self.e().block_sets();
        let m = blocks.len();
        let names = self
            .e()
            .blocks()
            .iter()
            .map(|b| self.name(b[0]).to_string())
            .collect();
        let rows = blocks
            .iter()
            .map(|a| {
                let img = self.r().image(a);
                PointSet::from_indices(m, (0..m).filter(|&j| blocks[j].intersects(&img)))
            })
            .collect();
        Frame::from_parts(
            names,
            Relation::from_rows(rows),
            Partition::identity(m),
            None,
        )
        .expect("RE ⊆ ER makes the skeleton a quasi-order")
    }
}

#[cfg(test)]
mod tests {
    use crate::frame::{build_frame, ClosureMode, Frame};
    use crate::relation::Relation;

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

    fn chain3() -> Frame {
        build_frame(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            &[vec!["a"], vec!["b"], vec!["c"]],
            ClosureMode::Close,
        )
        .unwrap()
    }

    /// Direct composition oracle for `Q`: triple loop over `x R z E y`.
    fn q_oracle(f: &Frame) -> Relation {
        let n = f.len();
        let mut q = Relation::empty(n);
        for x in 0..n {
            for z in 0..n {
                for y in 0..n {
                    if f.r().contains(x, z) && f.e_relation().contains(z, y) {
                        q.insert(x, y);
                    }
                }
            }
        }
        q
    }

    #[test]
    fn q_relation_examples() {
        assert!(fig2f().q_relation().is_total());
        assert_eq!(fig2f().q_relation(), q_oracle(&fig2f()));
        assert!(fig2g().q_relation().is_total());
        assert_eq!(fig2g().q_relation(), q_oracle(&fig2g()));
        assert_eq!(Frame::single("x").q_relation(), Relation::identity(1));
        let c = chain3();
        assert_eq!(c.q_relation(), *c.r());
    }

    #[test]
    fn classify_fig2f() {
        let f = fig2f();
        let c = f.classify();
        assert_eq!(c.depth, 2);
        assert_eq!(f.names_of(&c.layers[0]), vec!["b"]);
        assert_eq!(f.names_of(&c.layers[1]), vec!["a"]);
        assert!(c.is_simple && c.is_si);
    }

    #[test]
    fn classify_chain_and_point() {
        let c = chain3().classify();
        assert_eq!(c.depth, 3);
        assert_eq!(chain3().names_of(&c.q_roots), vec!["a"]);
        assert!(c.is_si && !c.is_simple);
        let p = Frame::single("x").classify();
        assert_eq!(p.depth, 1);
        assert!(p.is_simple);
    }

    #[test]
    fn skeleton_examples() {
        let s = fig2f().skeleton();
        assert_eq!(s.len(), 1);
        let s = fig2g().skeleton();
        assert_eq!(s.names(), &["1".to_string(), "2".to_string()]);
        assert!(s.r().is_total());
        let c = chain3();
        let s = c.skeleton();
        assert_eq!(s.r(), c.r());
    }
}
