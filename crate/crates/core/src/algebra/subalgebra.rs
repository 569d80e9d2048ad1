//! Generated subalgebras via their atoms, and the generation test by
//! monochromatic correct partitions.

use serde::Serialize;

use super::{tag_for, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::frame::commutation_witness;
use crate::model::{Model, Operator};
use crate::partition::{all_partitions, Partition};
use crate::pointset::PointSet;

/// Elements are listed only when there are at most this many atoms.
pub const MATERIALIZE_ATOMS: usize = 16;
/// Largest frame on which the partition search runs exhaustively.
pub const EXHAUSTIVE_SEARCH_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraReport {
    pub generators: Vec<PointSet>,
    pub signature: Vec<Operator>,
    /// Atoms of the subalgebra, sorted.
    pub atoms: Vec<PointSet>,
    /// All elements in ascending bit order, if there are at most
    /// `2^MATERIALIZE_ATOMS` of them.
    pub elements: Option<Vec<PointSet>>,
    /// `2^atoms`, saturating at `u128::MAX`.
    pub size: u128,
    /// Points identified by every element; its blocks are the atoms.
    pub kernel: Partition,
    /// Refinement rounds until the atoms were stable.
    pub closure_steps: usize,
}

impl SubalgebraReport {
    /// The subalgebra as a [`FiniteAlgebra`] with the report's signature.
    pub fn to_algebra(&self, model: &Model<'_>) -> Result<FiniteAlgebra> {
        let elements = self.elements.clone().ok_or_else(|| Error::CapExceeded {
            what: "subalgebra atoms".into(),
            size: self.atoms.len(),
            cap: MATERIALIZE_ATOMS,
        })?;
        FiniteAlgebra::from_fn(
            model.names().to_vec(),
            model.full_set(),
            tag_for(model),
            elements,
            &self.signature,
            |op, a| model.apply(op, a),
        )
    }

    pub fn to_json(&self, names: &[String]) -> serde_json::Value {
        let named = |s: &PointSet| -> Vec<&str> { s.iter().map(|i| names[i].as_str()).collect() };
        serde_json::json!({
            "generators": self.generators.iter().map(named).collect::<Vec<_>>(),
            "signature": self.signature,
            "atoms": self.atoms.iter().map(named).collect::<Vec<_>>(),
            "elements": self.elements.as_ref().map(|e| e.iter().map(named).collect::<Vec<_>>()),
            "size": crate::json::count_to_value(self.size),
            "kernel": self.kernel.blocks().iter()
                .map(|b| b.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "closure_steps": self.closure_steps,
        })
    }
}

/// `C_ḡ`: points are identified iff they lie in exactly the same generators.
pub fn coloring(n: usize, gens: &[PointSet]) -> Partition {
    let labels: Vec<Vec<bool>> = (0..n)
        .map(|x| gens.iter().map(|g| g.contains(x)).collect())
        .collect();
    Partition::from_labels(&labels)
}

fn check_generators(model: &Model<'_>, gens: &[PointSet]) -> Result<()> {
    gens.iter().try_for_each(|g| model.check_width(g))
}

fn split(blocks: Vec<PointSet>, by: &PointSet) -> (Vec<PointSet>, bool) {
    let mut changed = false;
    let mut out = Vec::with_capacity(blocks.len() + 1);
    for b in blocks {
        let inside = b.intersection(by);
        if inside.is_empty() || inside == b {
            out.push(b);
        } else {
            changed = true;
            out.push(inside);
            out.push(b.difference(by));
        }
    }
    (out, changed)
}

/// The kernel of `⟨gens⟩` and the number of refinement rounds, without
/// materializing any elements.
pub fn subalgebra_kernel(
    model: &Model<'_>,
    gens: &[PointSet],
    signature: &[Operator],
) -> Result<(Partition, usize)> {
    check_generators(model, gens)?;
    model.check_supported(signature)?;
    let n = model.len();
    let mut blocks = coloring(n, gens).block_sets();
    let mut steps = 0;
    loop {
        steps += 1;
        let mut any = false;
        let splitters = blocks
            .iter()
            .flat_map(|b| signature.iter().map(move |&op| (op, *b)))
            .map(|(op, b)| model.apply(op, &b))
            .collect::<Result<Vec<_>>>()?;
        for s in &splitters {
            let (next, changed) = split(blocks, s);
            blocks = next;
            any |= changed;
        }
        if !any {
            break;
        }
    }
    let labels = {
        let mut l = vec![0usize; n];
        for (i, b) in blocks.iter().enumerate() {
            for x in b {
                l[x] = i;
            }
        }
        l
    };
    let kernel = Partition::from_labels(&labels);
    let k_rel = kernel.to_relation();
    for &op in signature {
        if let Some((x, y, z)) = commutation_witness(&model.relation(op)?, &k_rel) {
            return Err(Error::Internal(format!(
                "subalgebra kernel is not correct for {op} at ({x}, {y}, {z})"
            )));
        }
    }
    Ok((kernel, steps))
}

/// `⟨gens⟩` under the given operators (each must be additive, which all
/// relational operators are). The carrier is the set of unions of atoms;
/// atoms are found by splitting the coloring partition by `op(block)` until
/// every `op(block)` is a union of blocks.
pub fn generated_subalgebra(
    model: &Model<'_>,
    gens: &[PointSet],
    signature: &[Operator],
) -> Result<SubalgebraReport> {
    let (kernel, steps) = subalgebra_kernel(model, gens, signature)?;
    let n = model.len();
    let atoms = kernel.block_sets();
    let size = 1u128.checked_shl(atoms.len() as u32).unwrap_or(u128::MAX);
    let elements = (atoms.len() <= MATERIALIZE_ATOMS).then(|| {
        let mut e: Vec<PointSet> = (0u32..1 << atoms.len())
            .map(|mask| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(PointSet::empty(n), |acc, (_, a)| acc.union(a))
            })
            .collect();
        e.sort();
        e
    });
    Ok(SubalgebraReport {
        generators: gens.to_vec(),
        signature: signature.to_vec(),
        atoms,
        elements,
        size,
        kernel,
        closure_steps: steps,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMethod {
    /// Every partition below the coloring was tested.
    Exhaustive,
    /// Coarsest refinement of the coloring on which related points see the
    /// same blocks.
    Refinement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationReport {
    pub generating: bool,
    pub coloring: Partition,
    /// Kernel of the generated subalgebra.
    pub kernel: Partition,
    /// Largest correct partition below the coloring, found by search.
    pub search: Partition,
    pub search_method: SearchMethod,
    pub methods_agree: bool,
}

fn is_correct_for(rels: &[crate::relation::Relation], k: &Partition) -> bool {
    let k_rel = k.to_relation();
    rels.iter()
        .all(|r| commutation_witness(r, &k_rel).is_none())
}

fn exhaustive_search(rels: &[crate::relation::Relation], c: &Partition) -> Partition {
    let n = c.num_points();
    let per_block: Vec<Vec<Partition>> =
        c.blocks().iter().map(|b| all_partitions(b.len())).collect();
    let mut best = Partition::identity(n);
    let mut choice = vec![0usize; per_block.len()];
    loop {
        let mut groups = Vec::new();
        for (bi, block) in c.blocks().iter().enumerate() {
            for sub in per_block[bi][choice[bi]].blocks() {
                groups.push(sub.iter().map(|&j| block[j]).collect::<Vec<_>>());
            }
        }
        let k = Partition::new(n, groups).expect("blocks of a partition");
        if is_correct_for(rels, &k) {
            best = best.join(&k);
        }
        let mut d = choice.len();
        loop {
            if d == 0 {
                return best;
            }
            d -= 1;
            choice[d] += 1;
            if choice[d] < per_block[d].len() {
                break;
            }
            choice[d] = 0;
        }
    }
}

fn refinement_search(rels: &[crate::relation::Relation], c: &Partition) -> Partition {
    let n = c.num_points();
    let mut labels = c.labels();
    loop {
        let sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|x| {
                let seen = rels
                    .iter()
                    .map(|r| {
                        let mut s: Vec<usize> = r.successors(x).iter().map(|y| labels[y]).collect();
                        s.sort_unstable();
                        s.dedup();
                        s
                    })
                    .collect();
                (labels[x], seen)
            })
            .collect();
        let next = Partition::from_labels(&sigs);
        let next_labels = next.labels();
        if next.num_blocks() == Partition::from_labels(&labels).num_blocks() {
            return next;
        }
        labels = next_labels;
    }
}

/// Decides whether `gens` generate the whole dual algebra (under the
/// frame's native operators). Method A takes the kernel of the generated
/// subalgebra; method B searches for the largest correct partition below
/// the coloring directly.
pub fn is_generating(model: &Model<'_>, gens: &[PointSet]) -> Result<GenerationReport> {
    check_generators(model, gens)?;
    let ops = model.native_operators();
    let kernel = generated_subalgebra(model, gens, &ops)?.kernel;
    let rels = ops
        .iter()
        .map(|&op| model.relation(op))
        .collect::<Result<Vec<_>>>()?;
    let c = coloring(model.len(), gens);
    let (search, search_method) = if model.len() <= EXHAUSTIVE_SEARCH_CAP {
        (exhaustive_search(&rels, &c), SearchMethod::Exhaustive)
    } else {
        (refinement_search(&rels, &c), SearchMethod::Refinement)
    };
    let methods_agree = search == kernel && is_correct_for(&rels, &search);
    Ok(GenerationReport {
        generating: kernel.is_identity(),
        coloring: c,
        kernel,
        search,
        search_method,
        methods_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{build_frame, ClosureMode, Frame};
    use crate::s52::S52Frame;
    use std::collections::BTreeSet;

    fn fig2g() -> Frame {
        build_frame(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "1"), ("3", "4"), ("4", "3")],
            &[vec!["1", "3"], vec!["2", "4"]],
            ClosureMode::Close,
        )
        .unwrap()
    }

    /// Naive closure: keep applying complement, intersection and every
    /// operator until nothing new appears.
    fn closure_oracle(
        model: &Model<'_>,
        gens: &[PointSet],
        ops: &[Operator],
    ) -> BTreeSet<PointSet> {
        let full = model.full_set();
        let mut set: BTreeSet<PointSet> = gens.iter().copied().collect();
        set.insert(full);
        set.insert(PointSet::empty(model.len()));
        loop {
            let cur: Vec<PointSet> = set.iter().copied().collect();
            let mut next = set.clone();
            for a in &cur {
                next.insert(full.difference(a));
                for &op in ops {
                    next.insert(model.apply(op, a).unwrap());
                }
                for b in &cur {
                    next.insert(a.intersection(b));
                }
            }
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }

    #[test]
    fn whole_set_generates_two_elements() {
        let f = fig2g();
        let m = Model::from(&f);
        let r = generated_subalgebra(&m, &[f.full_set()], &m.native_operators()).unwrap();
        assert_eq!(r.size, 2);
        assert_eq!(r.elements.unwrap(), vec![f.empty_set(), f.full_set()]);
    }

    #[test]
    fn fig2g_cluster_generator() {
        let f = fig2g();
        let m = Model::from(&f);
        let g = f.set_of(&["1", "2"]).unwrap();
        let r = generated_subalgebra(&m, &[g], &m.native_operators()).unwrap();
        assert_eq!(r.size, 4);
        let want: BTreeSet<PointSet> = [
            f.empty_set(),
            g,
            f.set_of(&["3", "4"]).unwrap(),
            f.full_set(),
        ]
        .into_iter()
        .collect();
        assert_eq!(
            r.elements.unwrap().into_iter().collect::<BTreeSet<_>>(),
            want
        );
    }

    #[test]
    fn matches_oracle_on_fig2g() {
        let f = fig2g();
        let m = Model::from(&f);
        for bits in 0..16u128 {
            let g = PointSet::from_bits(4, bits);
            for ops in [
                vec![Operator::Dia, Operator::Ex],
                vec![Operator::BlackDia, Operator::Ex],
                vec![Operator::Dia],
            ] {
                let r = generated_subalgebra(&m, &[g], &ops).unwrap();
                let want = closure_oracle(&m, &[g], &ops);
                assert_eq!(r.elements.unwrap(), want.into_iter().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn generation_examples() {
        let f = fig2g();
        let m = Model::from(&f);
        let singles: Vec<PointSet> = (0..4).map(|i| PointSet::singleton(4, i)).collect();
        let r = is_generating(&m, &singles).unwrap();
        assert!(r.generating && r.methods_agree && r.kernel.is_identity());
        let r = is_generating(&m, &[f.empty_set()]).unwrap();
        assert!(!r.generating && r.methods_agree);
        assert_eq!(r.kernel, Partition::single_block(4));
    }

    #[test]
    fn refinement_matches_exhaustive_search() {
        let e1 = Partition::new(4, vec![vec![0], vec![1, 2], vec![3]]).unwrap();
        let e2 = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let s = S52Frame::from_indexed(e1, e2).unwrap();
        let m = Model::from(&s);
        let rels: Vec<_> = m
            .native_operators()
            .iter()
            .map(|&op| m.relation(op).unwrap())
            .collect();
        for bits in 0..16u128 {
            let c = coloring(4, &[PointSet::from_bits(4, bits)]);
            assert_eq!(exhaustive_search(&rels, &c), refinement_search(&rels, &c));
        }
    }
}
