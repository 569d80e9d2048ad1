//! The finite algebra `A_S` built from a finite set `S` of elements of an
//! `ms4s`-validating frame's dual algebra.

use serde::Serialize;

use super::subalgebra::generated_subalgebra;
use super::{FiniteAlgebra, SignatureTag};
use crate::error::{Error, Result};
use crate::formula::{eval_in, eval_subterms, eval_subterms_in, Formula, Valuation};
use crate::frame::Frame;
use crate::model::{Model, Operator};
use crate::pointset::PointSet;

/// Checks every MS4 identity over the whole carrier: `◇` a closure
/// operator, `∃` an S5 operator, `∃◇ ≤ ◇∃` and `∃◇∃ = ◇∃`. With `ms4s`,
/// also `◆■a ≤ ■a`. Returns a description of each failure.
pub fn check_ms4_identities(a: &FiniteAlgebra, ms4s: bool) -> Result<Vec<String>> {
    let dia = |x: &PointSet| a.op(Operator::Dia, x);
    let ex = |x: &PointSet| a.op(Operator::Ex, x);
    let top = a.top();
    let mut fails = Vec::new();
    let bottom = a.bottom();
    if dia(&bottom)? != bottom {
        fails.push("◇0 ≠ 0".to_string());
    }
    if ex(&bottom)? != bottom {
        fails.push("∃0 ≠ 0".to_string());
    }
    let atoms = a.atoms();
    let atom_dia = atoms.iter().map(dia).collect::<Result<Vec<_>>>()?;
    let atom_ex = atoms.iter().map(ex).collect::<Result<Vec<_>>>()?;
    for x in a.carrier() {
        let d = dia(x)?;
        let e = ex(x)?;
        let mut check = |ok: bool, what: &str| {
            if !ok {
                fails.push(format!("{what} fails at {x:?}"));
            }
        };
        check(x.is_subset(&d), "a ≤ ◇a");
        check(dia(&d)? == d, "◇◇a = ◇a");
        check(x.is_subset(&e), "a ≤ ∃a");
        check(ex(&e)? == e, "∃∃a = ∃a");
        check(ex(&top.difference(&e))? == top.difference(&e), "∃−∃a = −∃a");
        let ed = ex(&d)?;
        let de = dia(&e)?;
        check(ed.is_subset(&de), "∃◇a ≤ ◇∃a");
        check(ex(&de)? == de, "∃◇∃a = ◇∃a");
        let below = |sets: &[PointSet]| {
            atoms
                .iter()
                .zip(sets)
                .filter(|(t, _)| t.is_subset(x))
                .fold(a.bottom(), |acc, (_, s)| acc.union(s))
        };
        check(below(&atom_dia) == d, "◇ additive");
        check(below(&atom_ex) == e, "∃ additive");
        if ms4s {
            let black_dia = |y: &PointSet| -> Result<PointSet> { dia(&ex(y)?) };
            let black_box = |y: &PointSet| -> Result<PointSet> {
                Ok(top.difference(&black_dia(&top.difference(y))?))
            };
            let bb = black_box(x)?;
            check(black_dia(&bb)?.is_subset(&bb), "◆■a ≤ ■a");
        }
    }
    Ok(fails)
}

/// `A_S`: the `{◆, ∃}`-closure `B′` of `S` with `◇′a` the least
/// `◇`-fixpoint of `B′` above `a`. Verifies the MS4 identities, the `ms4s`
/// inequality, and that `◇′a = ◇a` whenever `◇a ∈ B′`.
pub fn fmp_restrict(f: &Frame, s: &[PointSet]) -> Result<FiniteAlgebra> {
    if !f.q_relation().is_symmetric() {
        return Err(Error::Precondition("frame does not validate ms4s".into()));
    }
    let model = Model::Ms4(f);
    let b = generated_subalgebra(&model, s, &[Operator::BlackDia, Operator::Ex])?;
    let Some(elements) = b.elements else {
        return Err(Error::CapExceeded {
            what: "fmp subalgebra atoms".into(),
            size: b.atoms.len(),
            cap: super::MATERIALIZE_ATOMS,
        });
    };
    let fixed: Vec<PointSet> = elements
        .iter()
        .copied()
        .filter(|x| f.dia(x) == *x)
        .collect();
    let top = f.full_set();
    let primed = |a: &PointSet| {
        fixed
            .iter()
            .filter(|x| a.is_subset(x))
            .fold(top, |acc, x| acc.intersection(x))
    };
    let alg = FiniteAlgebra::from_fn(
        f.names().to_vec(),
        top,
        SignatureTag::Ms4WithPrimedDia,
        elements,
        &[Operator::Dia, Operator::Ex, Operator::BlackDia],
        |op, a| {
            Ok(match op {
                Operator::Dia => primed(a),
                Operator::Ex => f.ex(a),
                _ => primed(&f.ex(a)),
            })
        },
    )?;
    let mut fails = check_ms4_identities(&alg, true)?;
    for a in alg.carrier() {
        let d = f.dia(a);
        if alg.contains(&d) && primed(a) != d {
            fails.push(format!("◇′a ≠ ◇a although ◇a ∈ B′, at {a:?}"));
        }
    }
    if !fails.is_empty() {
        return Err(Error::Internal(fails.join("; ")));
    }
    Ok(alg)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FalsificationReport {
    pub algebra_size: usize,
    pub atoms: usize,
    pub subterms: usize,
    /// Every subformula takes the same value in `A_S` as in the frame.
    pub values_identical: bool,
    pub still_falsified: bool,
}

impl FalsificationReport {
    pub fn succeeded(&self) -> bool {
        self.values_identical && self.still_falsified
    }
}

/// Builds `A_S` from the subformula values of `phi` under `v` and
/// re-evaluates `phi` inside it.
pub fn falsification_transfer(
    f: &Frame,
    phi: &Formula,
    v: &Valuation,
) -> Result<FalsificationReport> {
    let model = Model::Ms4(f);
    let subs = eval_subterms(&model, phi, v)?;
    let value = subs.last().expect("a formula has itself as a subterm").1;
    if value == f.full_set() {
        return Err(Error::Precondition(
            "formula is true under this valuation".into(),
        ));
    }
    let s: Vec<PointSet> = subs.iter().map(|(_, u)| *u).collect();
    let alg = fmp_restrict(f, &s)?;
    let inside = eval_subterms_in(&alg, phi, v)?;
    let still = eval_in(&alg, phi, v)?;
    Ok(FalsificationReport {
        algebra_size: alg.len(),
        atoms: alg.atoms().len(),
        subterms: subs.len(),
        values_identical: inside == subs,
        still_falsified: still != alg.top(),
    })
}
