use super::{powerset_algebra, FiniteAlgebra, SignatureTag};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::model::Operator;
use crate::partition::Partition;
use crate::pointset::PointSet;
use crate::relation::Relation;

fn operator_pair(a: &FiniteAlgebra) -> Result<(Operator, Operator)> {
    let pair = match a.tag() {
        SignatureTag::S52 => (Operator::Ex1, Operator::Ex2),
        _ => (Operator::Dia, Operator::Ex),
    };
    for op in [pair.0, pair.1] {
        if !a.has_operator(op) {
            return Err(Error::UnsupportedOperator(op.to_string()));
        }
    }
    Ok(pair)
}

/// The frame of atoms: `x R y` iff `x ≤ ◇y`, `x E y` iff `x ≤ ∃y`. Points
/// are named after the least member of each atom. S5₂-tagged algebras use
/// `∃₁` for `R` and `∃₂` for `E`.
pub fn atom_frame(a: &FiniteAlgebra) -> Result<Frame> {
    let (r_op, e_op) = operator_pair(a)?;
    let atoms = a.atoms();
    if atoms.iter().any(|x| !a.contains(x)) {
        return Err(Error::Precondition("carrier is not atomic".into()));
    }
    let m = atoms.len();
    let mut r = Relation::empty(m);
    let mut e = Relation::empty(m);
    for (j, y) in atoms.iter().enumerate() {
        let dy = a.op(r_op, y)?;
        let ey = a.op(e_op, y)?;
        for (i, x) in atoms.iter().enumerate() {
            if x.is_subset(&dy) {
                r.insert(i, j);
            }
            if x.is_subset(&ey) {
                e.insert(i, j);
            }
        }
    }
    let names = atoms
        .iter()
        .map(|x| a.names()[x.first().expect("atoms are non-empty")].clone())
        .collect();
    let e = Partition::from_equivalence(&e)
        .map_err(|_| Error::Precondition("∃ does not induce an equivalence on atoms".into()))?;
    Frame::from_parts(names, r, e, None)
}

/// Checks that `a` is isomorphic to the powerset algebra of its atom frame
/// under the map sending each element to the set of atoms below it.
pub fn double_dual_matches(a: &FiniteAlgebra) -> Result<bool> {
    let (r_op, e_op) = operator_pair(a)?;
    let f = atom_frame(a)?;
    let p = powerset_algebra(&f)?;
    if p.len() != a.len() {
        return Ok(false);
    }
    let atoms = a.atoms();
    let encode = |x: &PointSet| {
        PointSet::from_indices(
            atoms.len(),
            atoms
                .iter()
                .enumerate()
                .filter(|(_, t)| t.is_subset(x))
                .map(|(i, _)| i),
        )
    };
    for x in a.carrier() {
        let ex = encode(x);
        if encode(&a.op(r_op, x)?) != f.dia(&ex) || encode(&a.op(e_op, x)?) != f.ex(&ex) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{build_frame, find_isomorphism, ClosureMode};

    fn fig2f() -> Frame {
        build_frame(
            &["a", "b"],
            &[("a", "b")],
            &[vec!["a", "b"]],
            ClosureMode::Close,
        )
        .unwrap()
    }

    #[test]
    fn double_dual_of_fig2f() {
        let f = fig2f();
        let a = powerset_algebra(&f).unwrap();
        let g = atom_frame(&a).unwrap();
        assert!(find_isomorphism(&f, &g).unwrap().is_some());
        assert!(double_dual_matches(&a).unwrap());
    }

    #[test]
    fn two_element_algebra_is_a_point() {
        let f = fig2f();
        let a = FiniteAlgebra::from_fn(
            f.names().to_vec(),
            f.full_set(),
            SignatureTag::Ms4,
            vec![f.empty_set(), f.full_set()],
            &[Operator::Dia, Operator::Ex],
            |_, x| Ok(*x),
        )
        .unwrap();
        let g = atom_frame(&a).unwrap();
        assert_eq!(g.len(), 1);
        assert!(double_dual_matches(&a).unwrap());
    }
}
