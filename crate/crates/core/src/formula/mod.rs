//! Formulas of the bimodal languages: `◇`/`∃` over MS4-frames and
//! `∃₁`/`∃₂` over S5₂-frames.

mod axioms;
mod eval;
mod parser;

pub use axioms::{axiom, fast_path, parse_axiom_spec, AxiomSpec, AXIOM_NAMES};
pub use eval::{
    eval, eval_in, eval_subterms, eval_subterms_in, is_valid, is_valid_with_budget,
    valuation_budget, Semantics, Validity, Valuation, BUDGET_ENV, DEFAULT_BUDGET,
};
pub use parser::parse;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::Model;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Bot,
    Top,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Dia(Box<Formula>),
    Box(Box<Formula>),
    Ex(Box<Formula>),
    All(Box<Formula>),
    Ex1(Box<Formula>),
    All1(Box<Formula>),
    Ex2(Box<Formula>),
    All2(Box<Formula>),
}

/// Which frame kind a formula speaks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Language {
    Propositional,
    Ms4,
    S52,
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// `a ↔ b`, written as a conjunction of two implications.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    pub fn dia(a: Formula) -> Formula {
        Formula::Dia(Box::new(a))
    }

    pub fn boxed(a: Formula) -> Formula {
        Formula::Box(Box::new(a))
    }

    pub fn ex(a: Formula) -> Formula {
        Formula::Ex(Box::new(a))
    }

    pub fn all(a: Formula) -> Formula {
        Formula::All(Box::new(a))
    }

    /// `◆ = ◇∃`
    pub fn black_dia(a: Formula) -> Formula {
        Formula::dia(Formula::ex(a))
    }

    /// `■ = □∀`
    pub fn black_box(a: Formula) -> Formula {
        Formula::boxed(Formula::all(a))
    }

    pub fn ex1(a: Formula) -> Formula {
        Formula::Ex1(Box::new(a))
    }

    pub fn all1(a: Formula) -> Formula {
        Formula::All1(Box::new(a))
    }

    pub fn ex2(a: Formula) -> Formula {
        Formula::Ex2(Box::new(a))
    }

    pub fn all2(a: Formula) -> Formula {
        Formula::All2(Box::new(a))
    }

    /// Disjunction of a non-empty list, associated to the left.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::or)
    }

    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Option<Formula> {
        items.into_iter().reduce(Formula::and)
    }

    pub fn children(&self) -> Vec<&Formula> {
        use Formula::*;
        match self {
            Var(_) | Bot | Top => vec![],
            Not(a) | Dia(a) | Box(a) | Ex(a) | All(a) | Ex1(a) | All1(a) | Ex2(a) | All2(a) => {
                vec![a]
            }
            And(a, b) | Or(a, b) | Implies(a, b) => vec![a, b],
        }
    }

    /// Variable names in sorted order.
    pub fn variables(&self) -> Vec<String> {
        fn walk(f: &Formula, out: &mut BTreeSet<String>) {
            if let Formula::Var(v) = f {
                out.insert(v.clone());
            }
            for c in f.children() {
                walk(c, out);
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out.into_iter().collect()
    }

    /// Distinct subformulas, children before parents.
    pub fn subterms(&self) -> Vec<&Formula> {
        fn walk<'a>(f: &'a Formula, seen: &mut BTreeSet<&'a Formula>, out: &mut Vec<&'a Formula>) {
            if seen.contains(f) {
                return;
            }
            for c in f.children() {
                walk(c, seen, out);
            }
            seen.insert(f);
            out.push(f);
        }
        let mut out = Vec::new();
        walk(self, &mut BTreeSet::new(), &mut out);
        out
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// The language this formula lives in; mixing the two modal
    /// vocabularies is an error.
    pub fn language(&self) -> Result<Language> {
        use Formula::*;
        let own = match self {
            Dia(_) | Box(_) | Ex(_) | All(_) => Language::Ms4,
            Ex1(_) | All1(_) | Ex2(_) | All2(_) => Language::S52,
            _ => Language::Propositional,
        };
        self.children()
            .iter()
            .try_fold(own, |acc, c| match (acc, c.language()?) {
                (a, Language::Propositional) => Ok(a),
                (Language::Propositional, b) => Ok(b),
                (a, b) if a == b => Ok(a),
                _ => Err(Error::MixedLanguage),
            })
    }

    /// Fails when the formula cannot be read on the given frame kind.
    pub fn check_language(&self, model: &Model<'_>) -> Result<()> {
        match (self.language()?, model) {
            (Language::Propositional, _)
            | (Language::Ms4, Model::Ms4(_))
            | (Language::S52, Model::S52(_)) => Ok(()),
            (lang, _) => Err(Error::LanguageMismatch(format!(
                "{lang:?} formula on {} frame",
                match model {
                    Model::Ms4(_) => "an MS4",
                    Model::S52(_) => "an S5₂",
                }
            ))),
        }
    }
}

const PREC_IMPLIES: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => PREC_IMPLIES,
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        _ => PREC_UNARY,
    }
}

fn write_prec(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if precedence(f) < min {
        out.write_str("(")?;
        write_formula(f, out)?;
        out.write_str(")")
    } else {
        write_formula(f, out)
    }
}

fn write_formula(f: &Formula, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    use Formula::*;
    let prefix = |out: &mut fmt::Formatter<'_>, p: &str, a: &Formula| {
        out.write_str(p)?;
        write_prec(a, PREC_UNARY, out)
    };
    match f {
        Var(v) => out.write_str(v),
        Bot => out.write_str("0"),
        Top => out.write_str("1"),
        Not(a) => prefix(out, "~", a),
        Dia(a) => prefix(out, "<>", a),
        Box(a) => prefix(out, "[]", a),
        Ex(a) => prefix(out, "E ", a),
        All(a) => prefix(out, "A ", a),
        Ex1(a) => prefix(out, "<1>", a),
        All1(a) => prefix(out, "[1]", a),
        Ex2(a) => prefix(out, "<2>", a),
        All2(a) => prefix(out, "[2]", a),
        And(a, b) => {
            write_prec(a, PREC_AND, out)?;
            out.write_str(" & ")?;
            write_prec(b, PREC_UNARY, out)
        }
        Or(a, b) => {
            write_prec(a, PREC_OR, out)?;
            out.write_str(" | ")?;
            write_prec(b, PREC_AND, out)
        }
        Implies(a, b) => {
            write_prec(a, PREC_OR, out)?;
            out.write_str(" -> ")?;
            write_prec(b, PREC_IMPLIES, out)
        }
    }
}

/// Prints with the fewest parentheses the grammar allows.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, f)
    }
}

impl std::str::FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Formula> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }

    fn q() -> Formula {
        Formula::var("q")
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        let f = Formula::implies(Formula::dia(p()), Formula::ex(p()));
        assert_eq!(f.to_string(), "<>p -> E p");
        let f = Formula::implies(Formula::implies(p(), q()), p());
        assert_eq!(f.to_string(), "(p -> q) -> p");
        let f = Formula::implies(p(), Formula::implies(q(), p()));
        assert_eq!(f.to_string(), "p -> q -> p");
        let f = Formula::and(p(), Formula::and(q(), p()));
        assert_eq!(f.to_string(), "p & (q & p)");
        let f = Formula::and(Formula::and(p(), q()), p());
        assert_eq!(f.to_string(), "p & q & p");
        let f = Formula::ex(Formula::or(p(), q()));
        assert_eq!(f.to_string(), "E (p | q)");
        let f = Formula::black_box(p());
        assert_eq!(f.to_string(), "[]A p");
    }

    #[test]
    fn language_inference() {
        assert_eq!(p().language().unwrap(), Language::Propositional);
        assert_eq!(Formula::dia(p()).language().unwrap(), Language::Ms4);
        assert_eq!(Formula::ex1(p()).language().unwrap(), Language::S52);
        let mixed = Formula::and(Formula::dia(p()), Formula::ex2(p()));
        assert_eq!(mixed.language(), Err(Error::MixedLanguage));
    }

    #[test]
    fn subterms_are_post_ordered_and_distinct() {
        let f = Formula::implies(Formula::dia(p()), Formula::dia(p()));
        let subs: Vec<String> = f.subterms().iter().map(|s| s.to_string()).collect();
        assert_eq!(subs, vec!["p", "<>p", "<>p -> <>p"]);
        assert_eq!(f.variables(), vec!["p"]);
        assert_eq!(f.size(), 5);
        assert_eq!(f.depth(), 3);
    }
}
