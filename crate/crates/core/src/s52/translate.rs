//! The translation `T` of an S5₂-frame into a depth-2 MS4-frame, and the
//! constructions relating the two.

use serde::Serialize;

use super::S52Frame;
use crate::algebra::{subalgebra_kernel, FiniteAlgebra, SignatureTag, POWERSET_CAP};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::model::{Model, Operator};
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::relation::Relation;

/// `T(F)`: the points of `F` (layer 2) plus one point `[c]` per `E₂`-class
/// `c` (layer 1). `R` is `E₁` on `X`, everything from `X` to the top rail,
/// and the rail is a single cluster. `E` joins each `E₂`-class with its
/// class-point.
pub fn translate(f: &S52Frame) -> Result<Frame> {
    let n = f.len();
    let classes = f.e2().blocks();
    let m = classes.len();
    let total = n + m;
    let mut names = f.names().to_vec();
    names.extend(classes.iter().map(|c| format!("[{}]", f.name(c[0]))));
    let mut r = Relation::empty(total);
    for (x, y) in f.e1_relation().pairs() {
        r.insert(x, y);
    }
    for x in 0..total {
        for j in n..total {
            r.insert(x, j);
        }
    }
    let blocks = classes
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut b = c.clone();
            b.push(n + j);
            b
        })
        .collect();
    let e = Partition::new(total, blocks)?;
    let mut layers = vec![2; n];
    layers.extend(std::iter::repeat_n(1, m));
    let tf = Frame::from_parts(names, r, e, Some(layers))
        .map_err(|err| Error::Internal(format!("translation is not a frame: {err}")))?;
    let c = tf.classify();
    let q = tf.q_relation();
    let checks = [
        (q.is_total(), "Q is not total"),
        (q.is_symmetric(), "ms4s fails"),
        (c.depth == 2, "depth is not 2"),
        (
            c.layers.len() == 2 && c.layers[0] == tf.layer_set(1)?,
            "top layer is not the rail",
        ),
        (tf.layer_set(1)?.len() == m, "rail size differs from |X/E₂|"),
    ];
    if let Some((_, msg)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(Error::Internal(format!("translation invariant: {msg}")));
    }
    Ok(tf)
}

/// `K̂` on `T(F)`: `K` on the points of `F`, and class-points identified
/// when each of the two classes lies inside the `K`-saturation of the other.
/// `K` must be correct on `F`.
pub fn lift_partition(f: &S52Frame, k: &Partition) -> Result<Partition> {
    if let Some(fail) = f.correctness_failure(k)? {
        return Err(Error::IncorrectPartition(format!(
            "{:?} clause fails at ({}, {}, {})",
            fail.clause, fail.x, fail.y, fail.y2
        )));
    }
    let k_hat = lift_unchecked(f, k)?;
    let tf = translate(f)?;
    let report = tf.is_correct_partition(&k_hat)?;
    if let Some(fail) = report.failure {
        return Err(Error::Internal(format!(
            "lifted partition is not correct: {:?} at ({}, {}, {})",
            fail.clause, fail.x, fail.y, fail.y2
        )));
    }
    Ok(k_hat)
}

/// `K̂` without the correctness checks on either side.
fn lift_unchecked(f: &S52Frame, k: &Partition) -> Result<Partition> {
    let n = f.len();
    let k_rel = k.to_relation();
    let classes = f.e2().block_sets();
    let m = classes.len();
    let saturated: Vec<PointSet> = classes.iter().map(|c| k_rel.image(c)).collect();
    let mut bar = Relation::empty(m);
    for a in 0..m {
        for b in 0..m {
            if classes[b].is_subset(&saturated[a]) && classes[a].is_subset(&saturated[b]) {
                bar.insert(a, b);
            }
        }
    }
    let bar = Partition::from_equivalence(&bar)
        .map_err(|_| Error::Internal("lifted class relation is not an equivalence".into()))?;
    let mut blocks: Vec<Vec<usize>> = k.blocks().to_vec();
    blocks.extend(
        bar.blocks()
            .iter()
            .map(|b| b.iter().map(|&j| n + j).collect::<Vec<_>>()),
    );
    Partition::new(n + m, blocks)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relativization {
    /// Subsets of the chosen set `D` with `◇′a = ◇a ∩ D`, `∃′a = ∃a ∩ D`.
    pub algebra: FiniteAlgebra,
    pub domain: PointSet,
    /// The S5₂-frame `(D, R|D, E|D)` when `R|D` is an equivalence.
    pub restricted: Option<S52Frame>,
    /// Whether `U ↦ U` (reindexed to `D`) carries `◇′, ∃′` onto `∃₁, ∃₂`
    /// of `restricted`.
    pub matches_s52: Option<bool>,
}

/// Relativization of a frame's algebra to an arbitrary subset `D`.
pub fn relativize_to(tf: &Frame, d: &PointSet) -> Result<Relativization> {
    if d.width() != tf.len() {
        return Err(Error::WidthMismatch {
            expected: tf.len(),
            found: d.width(),
        });
    }
    if d.len() > POWERSET_CAP {
        return Err(Error::CapExceeded {
            what: "relativized domain points".into(),
            size: d.len(),
            cap: POWERSET_CAP,
        });
    }
    let members: Vec<usize> = d.iter().collect();
    let k = members.len();
    let embed = |mask: u32| {
        PointSet::from_indices(
            tf.len(),
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x),
        )
    };
    let carrier: Vec<PointSet> = (0u32..1 << k).map(embed).collect();
    let algebra = FiniteAlgebra::from_fn(
        tf.names().to_vec(),
        *d,
        SignatureTag::Ms4,
        carrier,
        &[Operator::Dia, Operator::Ex],
        |op, a| {
            Ok(match op {
                Operator::Dia => tf.dia(a),
                _ => tf.ex(a),
            }
            .intersection(d))
        },
    )?;
    let restricted = if k == 0 {
        None
    } else {
        let r = tf.r().restrict(d);
        let e = tf.e_relation().restrict(d);
        match (
            Partition::from_equivalence(&r),
            Partition::from_equivalence(&e),
        ) {
            (Ok(e1), Ok(e2)) => {
                let names = members.iter().map(|&x| tf.name(x).to_string()).collect();
                Some(S52Frame::from_parts(names, e1, e2)?)
            }
            _ => None,
        }
    };
    let matches_s52 = restricted.as_ref().map(|s| {
        let shrink = |u: &PointSet| {
            PointSet::from_indices(
                k,
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| u.contains(x))
                    .map(|(i, _)| i),
            )
        };
        algebra.carrier().iter().all(|a| {
            let sa = shrink(a);
            let dia = algebra.op(Operator::Dia, a).expect("closed");
            let ex = algebra.op(Operator::Ex, a).expect("closed");
            shrink(&dia) == s.ex1(&sa) && shrink(&ex) == s.ex2(&sa)
        })
    });
    Ok(Relativization {
        algebra,
        domain: *d,
        restricted,
        matches_s52,
    })
}

/// Relativization to layer `Dᵢ` of a layered frame.
pub fn relativize(tf: &Frame, i: usize) -> Result<Relativization> {
    let d = tf.layer_set(i)?;
    if d.is_empty() {
        return Err(Error::BadParameter {
            name: "layer".into(),
            msg: format!("layer {i} is empty"),
        });
    }
    relativize_to(tf, &d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    /// `|⟨gens⟩|` in `T(F)*`.
    #[serde(serialize_with = "crate::json::serialize_count")]
    pub b_size: u128,
    /// `|⟨gᵢ∩D₂, E(gᵢ∩D₁)∩D₂⟩|` in `F*`.
    #[serde(serialize_with = "crate::json::serialize_count")]
    pub b_prime_size: u128,
    pub l_blocks: usize,
    pub k_blocks: usize,
    pub k_hat_blocks: usize,
    /// Every `K̂`-block lies inside an `L`-block.
    pub k_hat_refines_l: bool,
    /// `2^|K̂ blocks|`, the size of the algebra of `K̂`-saturated sets.
    #[serde(serialize_with = "crate::json::serialize_count")]
    pub k_hat_bound: u128,
}

/// Compares the subalgebra generated by `gens` in `T(F)*` with the one its
/// bottom-layer traces generate in `F*`.
pub fn subalgebra_transfer(f: &S52Frame, gens: &[PointSet]) -> Result<TransferReport> {
    subalgebra_transfer_in(f, &translate(f)?, gens)
}

/// [`subalgebra_transfer`] against a translation computed once by the caller.
pub fn subalgebra_transfer_in(
    f: &S52Frame,
    tf: &Frame,
    gens: &[PointSet],
) -> Result<TransferReport> {
    let t_model = Model::Ms4(tf);
    let (l, _) = subalgebra_kernel(&t_model, gens, &[Operator::Dia, Operator::Ex])?;
    let d1 = tf.layer_set(1)?;
    let d2 = tf.layer_set(2)?;
    let n = f.len();
    let bottom = |u: &PointSet| PointSet::from_indices(n, u.intersection(&d2).iter());
    let traces: Vec<PointSet> = gens
        .iter()
        .flat_map(|g| [bottom(g), bottom(&tf.ex(&g.intersection(&d1)))])
        .collect();
    let (k, _) = subalgebra_kernel(&Model::S52(f), &traces, &[Operator::Ex1, Operator::Ex2])?;
    let k_hat = lift_unchecked(f, &k)?;
    let count = |p: &Partition| {
        1u128
            .checked_shl(p.num_blocks() as u32)
            .unwrap_or(u128::MAX)
    };
    Ok(TransferReport {
        b_size: count(&l),
        b_prime_size: count(&k),
        l_blocks: l.num_blocks(),
        k_blocks: k.num_blocks(),
        k_hat_blocks: k_hat.num_blocks(),
        k_hat_refines_l: k_hat.refines(&l),
        k_hat_bound: count(&k_hat),
    })
}
