//! Named frames, exhaustive small-frame enumeration, random generators,
//! and growth probes.

mod enumerate;
pub mod random;

pub use enumerate::{
    enumerate_frames, enumerate_ms4, enumerate_s52, quasi_orders, FrameKind, ENUMERATION_CAP,
};

use serde::Serialize;

use crate::algebra::generated_subalgebra;
use crate::error::{Error, Result};
use crate::frame::{build_frame, ClosureMode, Frame};
use crate::model::Model;
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::s52::S52Frame;

pub const BUILTIN_NAMES: &[&str] = &[
    "fig2F",
    "fig2G",
    "snake",
    "et_grid",
    "three_layer",
    "single",
];

/// Either frame kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyFrame {
    Ms4(Frame),
    S52(S52Frame),
}

impl AnyFrame {
    pub fn model(&self) -> Model<'_> {
        match self {
            AnyFrame::Ms4(f) => Model::Ms4(f),
            AnyFrame::S52(f) => Model::S52(f),
        }
    }

    pub fn as_ms4(&self) -> Option<&Frame> {
        match self {
            AnyFrame::Ms4(f) => Some(f),
            AnyFrame::S52(_) => None,
        }
    }

    pub fn as_s52(&self) -> Option<&S52Frame> {
        match self {
            AnyFrame::S52(f) => Some(f),
            AnyFrame::Ms4(_) => None,
        }
    }
}

/// A builtin frame with its named companion sets (`g`, `d`, …).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Builtin {
    pub name: String,
    pub param: Option<usize>,
    pub frame: AnyFrame,
    pub sets: Vec<(String, PointSet)>,
}

impl Builtin {
    pub fn set(&self, name: &str) -> Option<PointSet> {
        self.sets.iter().find(|(n, _)| n == name).map(|(_, s)| *s)
    }
}

pub fn fig2f() -> Frame {
    build_frame(
        &["a", "b"],
        &[("a", "b")],
        &[vec!["a", "b"]],
        ClosureMode::Close,
    )
    .expect("fig2F is valid")
}

pub fn fig2g() -> Frame {
    build_frame(
        &["1", "2", "3", "4"],
        &[("1", "2"), ("2", "1"), ("3", "4"), ("4", "3")],
        &[vec!["1", "3"], vec!["2", "4"]],
        ClosureMode::Close,
    )
    .expect("fig2G is valid")
}

fn bad(name: &str, msg: impl Into<String>) -> Error {
    Error::BadParameter {
        name: name.to_string(),
        msg: msg.into(),
    }
}

/// The path `0 -E₂- 1 -E₁- 2 -E₂- 3 … m-1` on `m` points (`m` even).
pub fn snake(m: usize) -> Result<S52Frame> {
    if m < 2 || m % 2 == 1 || m > crate::pointset::MAX_POINTS {
        return Err(bad(
            "snake",
            format!("need an even point count >= 2, got {m}"),
        ));
    }
    let e2: Vec<Vec<usize>> = (0..m / 2).map(|i| vec![2 * i, 2 * i + 1]).collect();
    let mut e1: Vec<Vec<usize>> = vec![vec![0]];
    e1.extend((0..m / 2 - 1).map(|i| vec![2 * i + 1, 2 * i + 2]));
    e1.push(vec![m - 1]);
    S52Frame::from_indexed(Partition::new(m, e1)?, Partition::new(m, e2)?)
}

/// The `m × m` grid: `E₁` joins points of a row (same `j`), `E₂` points of a
/// column (same `i`). Returns the frame and `g = {(i,j) : i ≤ j}`.
pub fn et_grid(m: usize) -> Result<(S52Frame, PointSet)> {
    if m == 0 || m * m > crate::pointset::MAX_POINTS {
        return Err(bad("et_grid", format!("need 1 <= m <= 11, got {m}")));
    }
    let idx = |i: usize, j: usize| i * m + j;
    let names = (0..m)
        .flat_map(|i| (0..m).map(move |j| format!("({i},{j})")))
        .collect();
    let rows = (0..m)
        .map(|j| (0..m).map(|i| idx(i, j)).collect())
        .collect();
    let cols = (0..m)
        .map(|i| (0..m).map(|j| idx(i, j)).collect())
        .collect();
    let f = S52Frame::from_parts(
        names,
        Partition::new(m * m, rows)?,
        Partition::new(m * m, cols)?,
    )?;
    let g = PointSet::from_indices(m * m, (0..m).flat_map(|i| (i..m).map(move |j| idx(i, j))));
    Ok((f, g))
}

/// Finite truncation of the three-layer frame with columns `0..=2k`.
///
/// Every column `c` has a top point `t_c` and a middle point `m_c`; odd
/// columns add a second middle point `h_c`, even columns `c ≥ 2` a bottom
/// point `b_c`. Middle points `m_{2i}, m_{2i+1}` form `R`-clusters, the tops
/// form one cluster, and `m_c → t_c`, `h_c → t_c`, `b_c → h_{c-1}`. The
/// `E`-classes are the columns. Returns the frame, `g = {m_0}` and `d` =
/// the top layer.
pub fn three_layer(k: usize) -> Result<(Frame, PointSet, PointSet)> {
    if k == 0 || 6 * k + 2 > crate::pointset::MAX_POINTS {
        return Err(bad("three_layer", format!("need 1 <= k <= 21, got {k}")));
    }
    let cols = 2 * k + 1;
    let mut names = Vec::new();
    let mut layers = Vec::new();
    let mut column = Vec::new();
    let mut push = |name: String, layer: usize, col: usize| {
        names.push(name);
        layers.push(layer);
        column.push(col);
        names.len() - 1
    };
    let t: Vec<usize> = (0..cols).map(|c| push(format!("t{c}"), 1, c)).collect();
    let mid: Vec<usize> = (0..cols).map(|c| push(format!("m{c}"), 2, c)).collect();
    let high: Vec<Option<usize>> = (0..cols)
        .map(|c| (c % 2 == 1).then(|| push(format!("h{c}"), 2, c)))
        .collect();
    let low: Vec<Option<usize>> = (0..cols)
        .map(|c| (c % 2 == 0 && c >= 2).then(|| push(format!("b{c}"), 3, c)))
        .collect();
    let n = names.len();
    let mut r = Relation::identity(n);
    for &a in &t {
        for &b in &t {
            r.insert(a, b);
        }
    }
    for c in 0..cols {
        r.insert(mid[c], t[c]);
        if let Some(h) = high[c] {
            r.insert(h, t[c]);
        }
        if let Some(b) = low[c] {
            r.insert(b, high[c - 1].expect("odd column"));
        }
    }
    for i in 0..k {
        r.insert(mid[2 * i], mid[2 * i + 1]);
        r.insert(mid[2 * i + 1], mid[2 * i]);
    }
    let r = r.reflexive_transitive_closure();
    let e = Partition::from_labels(&column);
    let f = Frame::from_parts(names, r, e, Some(layers))?;
    let g = PointSet::singleton(n, mid[0]);
    let d = PointSet::from_indices(n, t.iter().copied());
    Ok((f, g, d))
}

/// Looks up a builtin by name; `snake`, `et_grid` and `three_layer` need a
/// parameter, the others take none.
pub fn builtin(name: &str, param: Option<usize>) -> Result<Builtin> {
    let needs = |p: Option<usize>| p.ok_or_else(|| bad(name, "parameter required"));
    let none = |p: Option<usize>| match p {
        Some(_) => Err(bad(name, "takes no parameter")),
        None => Ok(()),
    };
    let (frame, sets) = match name {
        "fig2F" => {
            none(param)?;
            (AnyFrame::Ms4(fig2f()), vec![])
        }
        "fig2G" => {
            none(param)?;
            (AnyFrame::Ms4(fig2g()), vec![])
        }
        "single" => {
            none(param)?;
            (AnyFrame::Ms4(Frame::single("x")), vec![])
        }
        "snake" => {
            let s = snake(needs(param)?)?;
            let end = PointSet::singleton(s.len(), 0);
            (AnyFrame::S52(s), vec![("g".to_string(), end)])
        }
        "et_grid" => {
            let (f, g) = et_grid(needs(param)?)?;
            (AnyFrame::S52(f), vec![("g".to_string(), g)])
        }
        "three_layer" => {
            let (f, g, d) = three_layer(needs(param)?)?;
            (
                AnyFrame::Ms4(f),
                vec![("g".to_string(), g), ("d".to_string(), d)],
            )
        }
        other => return Err(Error::UnknownBuiltin(other.to_string())),
    };
    Ok(Builtin {
        name: name.to_string(),
        param,
        frame,
        sets,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnChain {
    pub sets: Vec<PointSet>,
    /// Number of distinct sets among `s₀ … s_{n_max}`.
    pub distinct: usize,
}

/// `s₀ = g`, `sₙ₊₁ = ∃◇sₙ − d` for `n < n_max`.
pub fn sn_chain(f: &Frame, g: &PointSet, d: &PointSet, n_max: usize) -> Result<SnChain> {
    for s in [g, d] {
        if s.width() != f.len() {
            return Err(Error::WidthMismatch {
                expected: f.len(),
                found: s.width(),
            });
        }
    }
    let mut sets = vec![*g];
    for _ in 0..n_max {
        let last = sets.last().expect("non-empty");
        sets.push(f.ex(&f.dia(last)).difference(d));
    }
    let mut seen: Vec<PointSet> = sets.clone();
    seen.sort();
    seen.dedup();
    Ok(SnChain {
        distinct: seen.len(),
        sets,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthSeries {
    pub family: String,
    pub params: Vec<usize>,
    pub sizes: Vec<u128>,
    /// Members beyond the point budget were skipped.
    pub truncated: bool,
    /// Sizes strictly increase along the series.
    pub strictly_increasing: bool,
}

fn series(family: &str, params: Vec<usize>, sizes: Vec<u128>, truncated: bool) -> GrowthSeries {
    GrowthSeries {
        family: family.to_string(),
        strictly_increasing: sizes.windows(2).all(|w| w[0] < w[1]),
        params,
        sizes,
        truncated,
    }
}

/// `|⟨g⟩|` under the frame's native operators for each member of a builtin
/// family (`et_grid`, `snake`, `three_layer`), skipping members with more
/// than `max_points` points.
pub fn growth_probe(family: &str, params: &[usize], max_points: usize) -> Result<GrowthSeries> {
    if !matches!(family, "et_grid" | "snake" | "three_layer") {
        return Err(bad(family, "not a parameterized family"));
    }
    let mut done = Vec::new();
    let mut sizes = Vec::new();
    let mut truncated = false;
    for &p in params {
        let b = builtin(family, Some(p))?;
        let model = b.frame.model();
        if model.len() > max_points {
            truncated = true;
            break;
        }
        let g = b.set("g").expect("families expose g");
        let report = generated_subalgebra(&model, &[g], &model.native_operators())?;
        done.push(p);
        sizes.push(report.size);
    }
    Ok(series(family, done, sizes, truncated))
}

/// Distinct counts of the `sₙ` recurrence on `three_layer(k)` for each `k`;
/// the chain is run for `|X|` steps, after which it has stabilized.
pub fn recurrence_probe(ks: &[usize]) -> Result<GrowthSeries> {
    let mut sizes = Vec::new();
    for &k in ks {
        let (f, g, d) = three_layer(k)?;
        let chain = sn_chain(&f, &g, &d, f.len())?;
        sizes.push(chain.distinct as u128);
    }
    Ok(series("three_layer", ks.to_vec(), sizes, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{axiom, is_valid};

    #[test]
    fn fig2_axioms() {
        let bridge = axiom("s4u.bridge", None).unwrap();
        let sym = axiom("s52.sym", None).unwrap();
        let f = fig2f();
        assert!(is_valid(&Model::from(&f), &bridge).unwrap().is_valid());
        assert!(!is_valid(&Model::from(&f), &sym).unwrap().is_valid());
        let g = fig2g();
        assert!(!is_valid(&Model::from(&g), &bridge).unwrap().is_valid());
        assert!(is_valid(&Model::from(&g), &sym).unwrap().is_valid());
    }

    #[test]
    fn single_is_one_point() {
        let b = builtin("single", None).unwrap();
        assert_eq!(b.frame.model().len(), 1);
        assert!(builtin("single", Some(3)).is_err());
        assert!(matches!(
            builtin("nope", None),
            Err(Error::UnknownBuiltin(_))
        ));
        assert!(builtin("snake", None).is_err());
        assert!(builtin("snake", Some(3)).is_err());
    }

    #[test]
    fn et_grid_generator() {
        let (f, g) = et_grid(3).unwrap();
        assert_eq!(
            f.names_of(&g),
            vec!["(0,0)", "(0,1)", "(0,2)", "(1,1)", "(1,2)", "(2,2)"]
        );
        let (_, g1) = et_grid(1).unwrap();
        assert!(g1.is_full());
    }

    #[test]
    fn three_layer_shape() {
        for k in 1..=4 {
            let (f, g, d) = three_layer(k).unwrap();
            assert_eq!(f.len(), 6 * k + 2);
            let c = f.classify();
            assert_eq!(c.depth, 3);
            assert!(c.is_simple);
            assert!(f.q_relation().is_symmetric());
            assert_eq!(g.len(), 1);
            assert_eq!(d.len(), 2 * k + 1);
            for (i, layer) in c.layers.iter().enumerate() {
                assert_eq!(*layer, f.layer_set(i + 1).unwrap());
            }
        }
    }

    #[test]
    fn chain_trivial_cases() {
        let (f, _, d) = three_layer(2).unwrap();
        let c = sn_chain(&f, &f.empty_set(), &d, 5).unwrap();
        assert_eq!(c.distinct, 1);
        assert!(c.sets.iter().all(|s| s.is_empty()));
        let g = fig2f();
        let c = sn_chain(&g, &g.set_of(&["b"]).unwrap(), &g.empty_set(), 4).unwrap();
        assert_eq!(c.sets[1], g.full_set());
        assert_eq!(c.distinct, 2);
        assert!(sn_chain(&g, &PointSet::empty(3), &g.empty_set(), 1).is_err());
    }

    #[test]
    fn growth_probe_respects_budget() {
        let s = growth_probe("et_grid", &[1, 2, 3], 4).unwrap();
        assert_eq!(s.params, vec![1, 2]);
        assert_eq!(s.sizes[0], 2);
        assert!(s.truncated);
        assert!(growth_probe("fig2F", &[1], 10).is_err());
    }
}
