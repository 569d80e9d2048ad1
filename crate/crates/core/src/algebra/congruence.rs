//! Congruences of a finite dual algebra, read off three ways: `Q`-upsets,
//! `E`-saturated `R`-upsets, and filters of `H_■`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::pointset::PointSet;
use crate::relation::Relation;

pub const CONGRUENCE_CAP: usize = 16;

/// Lattices up to this size have their filters counted by testing every
/// subset.
const BRUTE_FILTER_CAP: usize = 16;

/// All upward closed sets of a quasi-order, sorted.
///
/// Clusters are visited so that every cluster comes after its strict
/// successors; a cluster may join the set only when all of them are in.
pub fn upsets(rel: &Relation) -> Vec<PointSet> {
    let n = rel.len();
    let mut clusters: Vec<(PointSet, PointSet)> = Vec::new();
    let mut seen = PointSet::empty(n);
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        let succ = rel.successors(x);
        let cluster = succ.intersection(&rel.predecessors(x));
        seen = seen.union(&cluster);
        clusters.push((cluster, succ.difference(&cluster)));
    }
    clusters.sort_by_key(|(_, above)| above.len());
    let mut out = Vec::new();
    fn dfs(i: usize, cur: PointSet, clusters: &[(PointSet, PointSet)], out: &mut Vec<PointSet>) {
        if i == clusters.len() {
            out.push(cur);
            return;
        }
        dfs(i + 1, cur, clusters, out);
        let (cluster, above) = &clusters[i];
        if above.is_subset(&cur) {
            dfs(i + 1, cur.union(cluster), clusters, out);
        }
    }
    dfs(0, PointSet::empty(n), &clusters, &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterCount {
    /// Every subset of the lattice tested against the filter axioms.
    Exhaustive,
    /// Principal filters, each checked against the filter axioms.
    Principal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub q_upsets: Vec<PointSet>,
    pub esat_r_upsets: Vec<PointSet>,
    pub h_black_filter_count: usize,
    pub filter_method: FilterCount,
    /// Both upset lists coincide and their size is the filter count.
    pub agree: bool,
    /// A largest proper `Q`-upset exists.
    pub is_si: bool,
    /// Exactly two congruences.
    pub is_simple: bool,
}

impl CongruenceReport {
    pub fn count(&self) -> usize {
        self.q_upsets.len()
    }

    pub fn to_json(&self, names: &[String]) -> serde_json::Value {
        let named = |v: &[PointSet]| -> Vec<Vec<&str>> {
            v.iter()
                .map(|s| s.iter().map(|i| names[i].as_str()).collect())
                .collect()
        };
        serde_json::json!({
            "q_upsets": named(&self.q_upsets),
            "esat_r_upsets": named(&self.esat_r_upsets),
            "h_black_filter_count": self.h_black_filter_count,
            "filter_method": self.filter_method,
            "agree": self.agree,
            "is_si": self.is_si,
            "is_simple": self.is_simple,
        })
    }
}

fn is_filter(lattice: &[PointSet], members: &[bool]) -> bool {
    let idx: Vec<usize> = (0..lattice.len()).filter(|&i| members[i]).collect();
    if idx.is_empty() {
        return false;
    }
    for &i in &idx {
        for (j, b) in lattice.iter().enumerate() {
            if !members[j] && lattice[i].is_subset(b) {
                return false;
            }
        }
        for &j in &idx {
            let m = lattice[i].intersection(&lattice[j]);
            match lattice.binary_search(&m) {
                Ok(k) if members[k] => {}
                _ => return false,
            }
        }
    }
    true
}

/// Number of filters of the lattice of sets (ordered by inclusion, meet =
/// intersection).
fn count_filters(lattice: &[PointSet]) -> (usize, FilterCount) {
    let m = lattice.len();
    if m <= BRUTE_FILTER_CAP {
        let count = (1u32..1 << m)
            .filter(|mask| {
                let members: Vec<bool> = (0..m).map(|i| mask >> i & 1 == 1).collect();
                is_filter(lattice, &members)
            })
            .count();
        return (count, FilterCount::Exhaustive);
    }
    let mut filters: Vec<Vec<bool>> = lattice
        .iter()
        .map(|a| lattice.iter().map(|b| a.is_subset(b)).collect())
        .collect();
    filters.retain(|f| is_filter(lattice, f));
    filters.sort();
    filters.dedup();
    (filters.len(), FilterCount::Principal)
}

/// The congruence lattice of `F*` computed independently as `Q`-upsets,
/// `E`-saturated `R`-upsets, and filters of `H_■`.
pub fn congruences(f: &Frame) -> Result<CongruenceReport> {
    if f.len() > CONGRUENCE_CAP {
        return Err(Error::CapExceeded {
            what: "congruence enumeration points".into(),
            size: f.len(),
            cap: CONGRUENCE_CAP,
        });
    }
    let q_upsets = upsets(&f.q_relation());
    let esat_r_upsets: Vec<PointSet> = upsets(f.r())
        .into_iter()
        .filter(|u| f.e().saturates(u))
        .collect();
    let (h_black_filter_count, filter_method) = count_filters(&q_upsets);
    let agree = q_upsets == esat_r_upsets && q_upsets.len() == h_black_filter_count;
    let full = f.full_set();
    let union_of_proper = q_upsets
        .iter()
        .filter(|u| **u != full)
        .fold(f.empty_set(), |acc, u| acc.union(u));
    Ok(CongruenceReport {
        is_si: union_of_proper != full,
        is_simple: q_upsets.len() == 2,
        q_upsets,
        esat_r_upsets,
        h_black_filter_count,
        filter_method,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{build_frame, ClosureMode};
    use proptest::prelude::*;

    fn chain3() -> Frame {
        build_frame(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            &[vec!["a"], vec!["b"], vec!["c"]],
            ClosureMode::Close,
        )
        .unwrap()
    }

    #[test]
    fn chain_has_four_congruences() {
        let f = chain3();
        let r = congruences(&f).unwrap();
        let names: Vec<Vec<String>> = r.q_upsets.iter().map(|u| f.names_of(u)).collect();
        assert_eq!(
            names,
            vec![
                vec![],
                vec!["c".to_string()],
                vec!["b".into(), "c".into()],
                vec!["a".into(), "b".into(), "c".into()],
            ]
        );
        assert!(r.agree);
        assert!(r.is_si && !r.is_simple);
    }

    #[test]
    fn simple_frames() {
        let f = build_frame(
            &["a", "b"],
            &[("a", "b")],
            &[vec!["a", "b"]],
            ClosureMode::Close,
        )
        .unwrap();
        let r = congruences(&f).unwrap();
        assert_eq!(r.count(), 2);
        assert!(r.is_simple && r.agree);
        let r = congruences(&Frame::single("x")).unwrap();
        assert_eq!(r.count(), 2);
    }

    #[test]
    fn principal_count_matches_brute_force() {
        // Antichain of five points: 32 upsets.
        let f = Frame::from_parts(
            (0..5).map(|i| i.to_string()).collect(),
            Relation::identity(5),
            crate::partition::Partition::identity(5),
            None,
        )
        .unwrap();
        let r = congruences(&f).unwrap();
        assert_eq!(r.count(), 32);
        assert_eq!(r.filter_method, FilterCount::Principal);
        assert!(r.agree && !r.is_si);
    }

    proptest! {
        #[test]
        fn upsets_match_brute_force(edges in prop::collection::vec((0usize..5, 0usize..5), 0..8)) {
            let r = Relation::from_pairs(5, edges).reflexive_transitive_closure();
            let brute: Vec<PointSet> = (0u128..32)
                .map(|b| PointSet::from_bits(5, b))
                .filter(|u| r.image(u).is_subset(u))
                .collect();
            prop_assert_eq!(upsets(&r), brute);
        }
    }
}
