//! Finite MS4-frames: a quasi-order `R` and an equivalence `E` on the same
//! points with `RE ⊆ ER`.
//!
//! Composition is read left to right throughout the crate: `(ER)(x)` means
//! "take `R(x)`, then saturate by `E`", so `x Q y` iff `x R z` and `z E y` for
//! some `z`. The commutation condition `RE ⊆ ER` therefore says: whenever
//! `x E y` and `y R y'`, some `x'` has `x R x'` and `x' E y'`.

mod analysis;
mod dot;
mod morphism;

pub use analysis::{FrameClassification, FINITE_ROOTEDNESS_NOTE};
pub use dot::{frame_to_dot, s52_to_dot};
pub use morphism::{
    find_isomorphism, find_isomorphism_with_cap, CorrectnessReport, PMorphismFailure,
    PartitionClause, PartitionFailure, DEFAULT_ISO_CAP, SEPARATION_NOTE,
};

pub(crate) use morphism::lift_relation;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::pointset::{PointSet, MAX_POINTS};
use crate::relation::Relation;

/// How [`build_frame`] treats the given edges and blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClosureMode {
    /// Take the reflexive-transitive closure of the edges and the finest
    /// equivalence containing the blocks.
    #[default]
    Close,
    /// Use the input verbatim and report every invariant it breaks.
    Validate,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Frame {
    names: Vec<String>,
    index: HashMap<String, usize>,
    r: Relation,
    e: Partition,
    e_rel: Relation,
    layers: Option<Vec<usize>>,
}

impl std::fmt::Debug for Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Frame")
            .field("points", &self.names)
            .field("R", &self.r)
            .field("E", &self.e)
            .finish()
    }
}

/// Builds a frame from point names, `R`-edges and `E`-blocks.
pub fn build_frame<S: AsRef<str>>(
    points: &[S],
    r_edges: &[(S, S)],
    e_blocks: &[Vec<S>],
    mode: ClosureMode,
) -> Result<Frame> {
    let names: Vec<String> = points.iter().map(|s| s.as_ref().to_string()).collect();
    let index = index_names(&names)?;
    let n = names.len();
    let lookup = |s: &S| -> Result<usize> {
        index
            .get(s.as_ref())
            .copied()
            .ok_or_else(|| Error::UnknownPoint(s.as_ref().to_string()))
    };
    let mut r = Relation::empty(n);
    for (a, b) in r_edges {
        r.insert(lookup(a)?, lookup(b)?);
    }
    let blocks = e_blocks
        .iter()
        .map(|b| b.iter().map(lookup).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let (r, e) = match mode {
        ClosureMode::Close => (
            r.reflexive_transitive_closure(),
            Partition::generated_by(n, &blocks),
        ),
        ClosureMode::Validate => (r, Partition::new(n, blocks)?),
    };
    Frame::from_parts(names, r, e, None)
}

pub(crate) fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    if names.is_empty() {
        return Err(Error::EmptyFrame);
    }
    if names.len() > MAX_POINTS {
        return Err(Error::TooManyPoints(names.len()));
    }
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicatePoint(name.clone()));
        }
    }
    Ok(index)
}

/// First `(x, y, y')` with `x K y`, `y S y'` and no `x'` satisfying
/// `x S x'` and `x' K y'`; `None` iff `SK ⊆ KS` in the left-to-right reading.
pub(crate) fn commutation_witness(step: &Relation, k: &Relation) -> Option<(usize, usize, usize)> {
    for x in 0..step.len() {
        let reach = k.image(&step.successors(x));
        for y in &k.successors(x) {
            if let Some(y2) = step.successors(y).difference(&reach).first() {
                return Some((x, y, y2));
            }
        }
    }
    None
}

impl Frame {
    /// Checks every invariant and assembles a frame from index-based parts.
    pub fn from_parts(
        names: Vec<String>,
        r: Relation,
        e: Partition,
        layers: Option<Vec<usize>>,
    ) -> Result<Frame> {
        let index = index_names(&names)?;
        let n = names.len();
        if r.len() != n || e.num_points() != n {
            return Err(Error::Internal(format!(
                "relation sizes ({}, {}) do not match {n} points",
                r.len(),
                e.num_points()
            )));
        }
        if let Some(x) = (0..n).find(|&x| !r.contains(x, x)) {
            return Err(Error::NotReflexive(names[x].clone()));
        }
        if let Some((x, y, z)) = r.transitivity_witness() {
            return Err(Error::NotTransitive {
                x: names[x].clone(),
                y: names[y].clone(),
                z: names[z].clone(),
            });
        }
        let e_rel = e.to_relation();
        if let Some((x, y, y2)) = commutation_witness(&r, &e_rel) {
            return Err(Error::NotCommuting {
                x: names[x].clone(),
                y: names[y].clone(),
                y2: names[y2].clone(),
            });
        }
        if let Some(l) = &layers {
            if l.len() != n {
                return Err(Error::Document(
                    "layer map does not cover every point".into(),
                ));
            }
        }
        Ok(Frame {
            names,
            index,
            r,
            e,
            e_rel,
            layers,
        })
    }

    /// Frame with point names `0, 1, …` (used by enumerators and generators).
    pub fn from_indexed(r: Relation, e: Partition) -> Result<Frame> {
        let names = (0..r.len()).map(|i| i.to_string()).collect();
        Frame::from_parts(names, r, e, None)
    }

    /// The one-point frame.
    pub fn single(name: &str) -> Frame {
        Frame::from_parts(
            vec![name.to_string()],
            Relation::identity(1),
            Partition::identity(1),
            None,
        )
        .expect("one-point frame is valid")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false; frames have at least one point.
    #[inline]
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

    pub fn r(&self) -> &Relation {
        &self.r
    }

    pub fn e(&self) -> &Partition {
        &self.e
    }

    pub fn e_relation(&self) -> &Relation {
        &self.e_rel
    }

    pub fn layers(&self) -> Option<&[usize]> {
        self.layers.as_deref()
    }

    pub fn with_layers(mut self, layers: Vec<usize>) -> Result<Frame> {
        if layers.len() != self.len() {
            return Err(Error::Document(
                "layer map does not cover every point".into(),
            ));
        }
        self.layers = Some(layers);
        Ok(self)
    }

    pub fn without_layers(mut self) -> Frame {
        self.layers = None;
        self
    }

    /// Points carrying layer tag `i`.
    pub fn layer_set(&self, i: usize) -> Result<PointSet> {
        let tags = self.layers.as_ref().ok_or(Error::MissingLayers)?;
        Ok(PointSet::from_indices(
            self.len(),
            tags.iter()
                .enumerate()
                .filter(|(_, &t)| t == i)
                .map(|(p, _)| p),
        ))
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

    /// `◇U = R⁻¹(U)`.
    pub fn dia(&self, u: &PointSet) -> PointSet {
        self.r.preimage(u)
    }

    /// `□U = −◇−U`.
    pub fn boxed(&self, u: &PointSet) -> PointSet {
        self.r.universal_preimage(u)
    }

    /// `∃U = E(U)`.
    pub fn ex(&self, u: &PointSet) -> PointSet {
        self.e_rel.image(u)
    }

    /// `∀U = −∃−U`.
    pub fn all(&self, u: &PointSet) -> PointSet {
        self.ex(&u.complement()).complement()
    }

    /// `◆ = ◇∃`.
    pub fn black_dia(&self, u: &PointSet) -> PointSet {
        self.dia(&self.ex(u))
    }

    /// `■ = □∀`.
    pub fn black_box(&self, u: &PointSet) -> PointSet {
        self.boxed(&self.all(u))
    }
}
