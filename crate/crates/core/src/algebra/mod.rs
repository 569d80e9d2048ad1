//! Finite algebras of sets dual to finite frames.

mod congruence;
mod duality;
mod fmp;
mod subalgebra;

pub use congruence::{congruences, upsets, CongruenceReport, FilterCount, CONGRUENCE_CAP};
pub use duality::{atom_frame, double_dual_matches};
pub use fmp::{check_ms4_identities, falsification_transfer, fmp_restrict, FalsificationReport};
pub use subalgebra::{
    coloring, generated_subalgebra, is_generating, subalgebra_kernel, GenerationReport,
    SearchMethod, SubalgebraReport, EXHAUSTIVE_SEARCH_CAP, MATERIALIZE_ATOMS,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{Formula, Semantics};
use crate::frame::Frame;
use crate::model::{Model, Operator};
use crate::pointset::PointSet;

/// Frames up to this size get a materialized powerset algebra.
pub const POWERSET_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SignatureTag {
    Ms4,
    S52,
    Ms4WithPrimedDia,
}

/// A finite Boolean algebra of subsets of `top` with unary operator tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    top: PointSet,
    tag: SignatureTag,
    carrier: Vec<PointSet>,
    ops: BTreeMap<Operator, Vec<usize>>,
}

impl FiniteAlgebra {
    /// Sorts and deduplicates `carrier`, then tabulates each operator; fails
    /// if an operator leaves the carrier.
    pub fn from_fn(
        names: Vec<String>,
        top: PointSet,
        tag: SignatureTag,
        mut carrier: Vec<PointSet>,
        ops: &[Operator],
        mut f: impl FnMut(Operator, &PointSet) -> Result<PointSet>,
    ) -> Result<FiniteAlgebra> {
        carrier.sort();
        carrier.dedup();
        let empty = PointSet::empty(top.width());
        if carrier.binary_search(&empty).is_err() || carrier.binary_search(&top).is_err() {
            return Err(Error::Internal("carrier misses the bottom or top".into()));
        }
        let mut tables = BTreeMap::new();
        for &op in ops {
            let t = carrier
                .iter()
                .map(|a| {
                    let b = f(op, a)?;
                    carrier.binary_search(&b).map_err(|_| {
                        Error::Internal(format!("carrier not closed under {op}: {a:?} -> {b:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            tables.insert(op, t);
        }
        Ok(FiniteAlgebra {
            names,
            top,
            tag,
            carrier,
            ops: tables,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn top(&self) -> PointSet {
        self.top
    }

    pub fn bottom(&self) -> PointSet {
        PointSet::empty(self.top.width())
    }

    pub fn tag(&self) -> SignatureTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    /// Elements in ascending bit order.
    pub fn carrier(&self) -> &[PointSet] {
        &self.carrier
    }

    pub fn operators(&self) -> Vec<Operator> {
        self.ops.keys().copied().collect()
    }

    pub fn has_operator(&self, op: Operator) -> bool {
        self.ops.contains_key(&op)
    }

    pub fn index_of(&self, a: &PointSet) -> Option<usize> {
        self.carrier.binary_search(a).ok()
    }

    pub fn contains(&self, a: &PointSet) -> bool {
        self.index_of(a).is_some()
    }

    pub fn op_index(&self, op: Operator, i: usize) -> Option<usize> {
        self.ops.get(&op).map(|t| t[i])
    }

    pub fn op(&self, op: Operator, a: &PointSet) -> Result<PointSet> {
        let table = self
            .ops
            .get(&op)
            .ok_or_else(|| Error::UnsupportedOperator(op.to_string()))?;
        let i = self
            .index_of(a)
            .ok_or_else(|| Error::Precondition(format!("{a:?} is not an element")))?;
        Ok(self.carrier[table[i]])
    }

    /// Relative complement `top − a`.
    pub fn complement(&self, a: &PointSet) -> PointSet {
        self.top.difference(a)
    }

    /// Minimal non-empty elements.
    pub fn atoms(&self) -> Vec<PointSet> {
        let mut blocks = vec![self.top];
        for a in &self.carrier {
            blocks = blocks
                .into_iter()
                .flat_map(|b| [b.intersection(a), b.difference(a)])
                .filter(|b| !b.is_empty())
                .collect();
        }
        blocks.sort();
        blocks
    }

    /// Checks closure under relative complement and intersection. Quadratic in
    /// the carrier; the pairwise part is skipped above `pair_cap` elements
    /// and replaced by the atom test (every element is a union of atoms and
    /// every atom is an element).
    pub fn check_boolean_closure(&self, pair_cap: usize) -> Result<()> {
        for a in &self.carrier {
            if !a.is_subset(&self.top) || !self.contains(&self.complement(a)) {
                return Err(Error::Internal(format!(
                    "not closed under complement at {a:?}"
                )));
            }
        }
        if self.len() <= pair_cap {
            for a in &self.carrier {
                for b in &self.carrier {
                    if !self.contains(&a.intersection(b)) {
                        return Err(Error::Internal("not closed under intersection".into()));
                    }
                }
            }
            return Ok(());
        }
        let atoms = self.atoms();
        let expected = 1u128.checked_shl(atoms.len() as u32);
        if atoms.iter().all(|a| self.contains(a)) && expected == Some(self.len() as u128) {
            Ok(())
        } else {
            Err(Error::Internal(
                "carrier is not the Boolean algebra of its atoms".into(),
            ))
        }
    }

    /// Names of the points in each element, in carrier order.
    pub fn carrier_names(&self) -> Vec<Vec<String>> {
        self.carrier
            .iter()
            .map(|s| s.iter().map(|i| self.names[i].clone()).collect())
            .collect()
    }
}

impl Semantics for FiniteAlgebra {
    fn top(&self) -> PointSet {
        self.top
    }

    fn apply(&self, op: Operator, u: &PointSet) -> Result<PointSet> {
        self.op(op, u)
    }
}

/// Evaluates a formula in a finite algebra, reading `◇` and `∃` from its
/// tables.
pub fn eval_in_algebra(
    a: &FiniteAlgebra,
    f: &Formula,
    v: &crate::formula::Valuation,
) -> Result<PointSet> {
    crate::formula::eval_in(a, f, v)
}

fn tag_for(model: &Model<'_>) -> SignatureTag {
    match model {
        Model::Ms4(_) => SignatureTag::Ms4,
        Model::S52(_) => SignatureTag::S52,
    }
}

/// The full powerset algebra `F*`; fails above [`POWERSET_CAP`] points
/// (use [`PowersetView`] there).
pub fn powerset_algebra<'a>(model: impl Into<Model<'a>>) -> Result<FiniteAlgebra> {
    let model = model.into();
    let n = model.len();
    if n > POWERSET_CAP {
        return Err(Error::CapExceeded {
            what: "powerset algebra points".into(),
            size: n,
            cap: POWERSET_CAP,
        });
    }
    let carrier = (0..1u128 << n).map(|b| PointSet::from_bits(n, b)).collect();
    FiniteAlgebra::from_fn(
        model.names().to_vec(),
        model.full_set(),
        tag_for(&model),
        carrier,
        &model.native_operators(),
        |op, a| model.apply(op, a),
    )
}

/// The powerset algebra without materializing it; elements are indexed by
/// their bit patterns.
#[derive(Debug, Clone, Copy)]
pub struct PowersetView<'a> {
    model: Model<'a>,
}

impl<'a> PowersetView<'a> {
    pub fn new(model: impl Into<Model<'a>>) -> Self {
        PowersetView {
            model: model.into(),
        }
    }

    /// `2ⁿ`, or `None` when it does not fit in a `u128`.
    pub fn size(&self) -> Option<u128> {
        1u128.checked_shl(self.model.len() as u32)
    }

    pub fn element(&self, i: u128) -> PointSet {
        PointSet::from_bits(self.model.len(), i)
    }

    pub fn apply(&self, op: Operator, a: &PointSet) -> Result<PointSet> {
        self.model.apply(op, a)
    }

    /// Elements in bit order; only sensible for small frames.
    pub fn iter(&self) -> impl Iterator<Item = PointSet> + 'a {
        let n = self.model.len();
        let end = 1u128.checked_shl(n as u32).unwrap_or(u128::MAX);
        (0..end).map(move |b| PointSet::from_bits(n, b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixpointKind {
    /// `∃`-fixpoints: `E`-saturated sets.
    Exists,
    /// `□`-fixpoints: `R`-upsets.
    Box,
    /// `■`-fixpoints: `Q`-upsets.
    Blackbox,
}

impl std::str::FromStr for FixpointKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exists" => Ok(FixpointKind::Exists),
            "box" => Ok(FixpointKind::Box),
            "blackbox" => Ok(FixpointKind::Blackbox),
            other => Err(Error::BadParameter {
                name: "which".into(),
                msg: format!("`{other}` is not one of exists, box, blackbox"),
            }),
        }
    }
}

/// Heyting tables are only built up to this many elements.
pub const IMPLICATION_TABLE_CAP: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointAlgebra {
    pub kind: FixpointKind,
    pub elements: Vec<PointSet>,
    /// `implication[i][j]` is the index of `aᵢ → aⱼ`.
    pub implication: Option<Vec<Vec<usize>>>,
}

/// `B₀`, `H_□` or `H_■` of a frame. For the two Heyting algebras,
/// `a → b = □(−a ∪ b)` (resp. with `■`).
pub fn fixpoint_algebra(f: &Frame, which: FixpointKind) -> Result<FixpointAlgebra> {
    if f.len() > POWERSET_CAP {
        return Err(Error::CapExceeded {
            what: "fixpoint algebra points".into(),
            size: f.len(),
            cap: POWERSET_CAP,
        });
    }
    let elements = match which {
        FixpointKind::Exists => {
            let blocks = f.e().block_sets();
            let mut out: Vec<PointSet> = (0..1u128 << blocks.len())
                .map(|mask| {
                    blocks
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .fold(f.empty_set(), |acc, (_, b)| acc.union(b))
                })
                .collect();
            out.sort();
            out
        }
        FixpointKind::Box => upsets(f.r()),
        FixpointKind::Blackbox => upsets(&f.q_relation()),
    };
    let boxed = |u: &PointSet| match which {
        FixpointKind::Box => f.boxed(u),
        _ => f.black_box(u),
    };
    let implication = match which {
        FixpointKind::Exists => None,
        _ if elements.len() > IMPLICATION_TABLE_CAP => None,
        _ => Some(
            elements
                .iter()
                .map(|a| {
                    elements
                        .iter()
                        .map(|b| {
                            let c = boxed(&a.complement().union(b));
                            elements.binary_search(&c).map_err(|_| {
                                Error::Internal("implication left the fixpoints".into())
                            })
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Ok(FixpointAlgebra {
        kind: which,
        elements,
        implication,
    })
}

/// The fixpoints of `op` among all subsets of a small frame, by brute force.
#[cfg(test)]
fn brute_fixpoints(model: &Model<'_>, op: Operator) -> Result<Vec<PointSet>> {
    PowersetView::new(*model)
        .iter()
        .filter_map(|a| match model.apply(op, &a) {
            Ok(b) if b == a => Some(Ok(a)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}
