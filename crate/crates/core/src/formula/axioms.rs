//! Named axioms and their relational characterizations.

use super::Formula;
use crate::error::{Error, Result};
use crate::model::Model;

pub const AXIOM_NAMES: &[&str] = &[
    "ms4.commute",
    "ms4s",
    "s4u.bridge",
    "s52.sym",
    "P",
    "alt0",
    "lemma2_3.1",
    "lemma2_3.2",
    "lemma2_3.3",
    "lemma2_3.4",
    "s52.trans",
];

/// An axiom name with its optional parameter, as written `name` or `name:k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSpec {
    pub name: String,
    pub k: Option<usize>,
}

impl std::fmt::Display for AxiomSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}:{k}", self.name),
            None => f.write_str(&self.name),
        }
    }
}

pub fn parse_axiom_spec(s: &str) -> Result<AxiomSpec> {
    let s = s.trim();
    let (name, k) = match s.split_once(':') {
        Some((n, k)) => {
            let k = k.trim().parse().map_err(|_| Error::BadParameter {
                name: n.to_string(),
                msg: format!("`{k}` is not a non-negative integer"),
            })?;
            (n.trim(), Some(k))
        }
        None => (s, None),
    };
    let spec = AxiomSpec {
        name: name.to_string(),
        k,
    };
    axiom(&spec.name, spec.k)?;
    Ok(spec)
}

fn p() -> Formula {
    Formula::var("p")
}

fn needs_k(name: &str, k: Option<usize>, min: usize) -> Result<usize> {
    match k {
        Some(k) if k >= min => Ok(k),
        _ => Err(Error::BadAxiomParameter {
            name: name.to_string(),
        }),
    }
}

fn bounded_depth(n: usize) -> Formula {
    let q = |i: usize| Formula::var(format!("q{i}"));
    let mut f = Formula::implies(Formula::dia(Formula::boxed(q(1))), Formula::boxed(q(1)));
    for i in 2..=n {
        f = Formula::implies(
            Formula::dia(Formula::and(Formula::boxed(q(i)), Formula::not(f))),
            Formula::boxed(q(i)),
        );
    }
    f
}

fn alt0(k: usize) -> Formula {
    let ap = |i: usize| Formula::all(Formula::var(format!("p{i}")));
    let mut disjuncts = vec![Formula::boxed(ap(1))];
    for j in 1..=k {
        let prem = Formula::conjunction((1..=j).map(ap)).expect("j >= 1");
        disjuncts.push(Formula::boxed(Formula::implies(prem, ap(j + 1))));
    }
    Formula::disjunction(disjuncts).expect("non-empty")
}

fn lozenge_power(k: usize) -> Formula {
    (0..k).fold(p(), |f, _| {
        Formula::or(Formula::ex1(f.clone()), Formula::ex2(f))
    })
}

/// The registry formula for `name` (with parameter `k` where required).
pub fn axiom(name: &str, k: Option<usize>) -> Result<Formula> {
    use Formula as F;
    let takes_k = matches!(name, "P" | "alt0" | "s52.trans");
    if !takes_k && k.is_some() && AXIOM_NAMES.contains(&name) {
        return Err(Error::BadParameter {
            name: name.to_string(),
            msg: "takes no parameter".into(),
        });
    }
    Ok(match name {
        "ms4.commute" => F::implies(F::ex(F::dia(p())), F::dia(F::ex(p()))),
        "ms4s" => F::implies(F::black_dia(F::black_box(p())), F::black_box(p())),
        "s4u.bridge" => F::implies(F::dia(p()), F::ex(p())),
        "s52.sym" => F::implies(F::dia(F::boxed(p())), F::boxed(p())),
        "P" => bounded_depth(needs_k(name, k, 1)?),
        "alt0" => alt0(needs_k(name, k, 1)?),
        "lemma2_3.1" => F::iff(F::ex(F::dia(F::ex(p()))), F::dia(F::ex(p()))),
        "lemma2_3.2" => F::iff(F::all(F::boxed(F::all(p()))), F::boxed(F::all(p()))),
        "lemma2_3.3" => F::implies(F::ex(F::boxed(p())), F::boxed(F::ex(p()))),
        "lemma2_3.4" => F::iff(F::dia(F::all(F::dia(p()))), F::all(F::dia(p()))),
        "s52.trans" => {
            let k = match k {
                Some(k) => k,
                None => return Err(Error::BadAxiomParameter { name: name.into() }),
            };
            F::implies(lozenge_power(k + 1), lozenge_power(k))
        }
        other => return Err(Error::UnknownAxiom(other.to_string())),
    })
}

/// Relational characterization of an axiom, when one is known.
pub fn fast_path(model: &Model<'_>, spec: &AxiomSpec) -> Option<bool> {
    match (model, spec.name.as_str()) {
        (Model::Ms4(f), "s52.sym") => Some(f.r().is_symmetric()),
        (Model::Ms4(f), "ms4s") => Some(f.q_relation().is_symmetric()),
        (Model::Ms4(f), "s4u.bridge") => Some(f.r().is_subset(f.e_relation())),
        (Model::Ms4(f), "ms4.commute") => Some(
            f.r()
                .then(f.e_relation())
                .is_subset(&f.e_relation().then(f.r())),
        ),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    #[test]
    fn registry_examples() {
        assert_eq!(axiom("P", Some(1)).unwrap().to_string(), "<>[]q1 -> []q1");
        assert_eq!(
            axiom("P", Some(2)).unwrap(),
            parse("<>([]q2 & ~(<>[]q1 -> []q1)) -> []q2").unwrap()
        );
        assert_eq!(
            axiom("alt0", Some(1)).unwrap(),
            parse("[]A p1 | [](A p1 -> A p2)").unwrap()
        );
        assert_eq!(
            axiom("alt0", Some(2)).unwrap(),
            parse("[]A p1 | [](A p1 -> A p2) | [](A p1 & A p2 -> A p3)").unwrap()
        );
        assert_eq!(
            axiom("ms4s", None).unwrap(),
            parse("<>E []A p -> []A p").unwrap()
        );
        assert_eq!(
            axiom("s52.trans", Some(1)).unwrap(),
            parse("<1>(<1>p | <2>p) | <2>(<1>p | <2>p) -> <1>p | <2>p").unwrap()
        );
        assert_eq!(
            axiom("s52.trans", Some(0)).unwrap(),
            parse("<1>p | <2>p -> p").unwrap()
        );
    }

    #[test]
    fn registry_errors() {
        assert_eq!(axiom("nope", None), Err(Error::UnknownAxiom("nope".into())));
        assert!(matches!(
            axiom("P", None),
            Err(Error::BadAxiomParameter { .. })
        ));
        assert!(matches!(
            axiom("alt0", Some(0)),
            Err(Error::BadAxiomParameter { .. })
        ));
        assert!(matches!(
            axiom("ms4s", Some(2)),
            Err(Error::BadParameter { .. })
        ));
        assert!(parse_axiom_spec("P:x").is_err());
        assert_eq!(
            parse_axiom_spec("alt0:3").unwrap(),
            AxiomSpec {
                name: "alt0".into(),
                k: Some(3)
            }
        );
    }

    #[test]
    fn every_registered_name_builds() {
        for name in AXIOM_NAMES {
            let f = axiom(name, Some(1)).or_else(|_| axiom(name, None)).unwrap();
            assert_eq!(parse(&f.to_string()).unwrap(), f);
        }
    }
}
