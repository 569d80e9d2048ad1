use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::Formula;
use crate::error::{Error, Result};
use crate::model::{Model, Operator};
use crate::pointset::PointSet;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "MS4WB_BUDGET";
/// Default cap on the number of valuations `is_valid` will sweep.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

/// Frames with at most this many points get precomputed operator tables.
const TABLE_POINTS: usize = 12;

/// Anything formulas can be evaluated in: a frame's full powerset algebra
/// or a finite algebra of sets.
pub trait Semantics {
    fn top(&self) -> PointSet;
    fn apply(&self, op: Operator, u: &PointSet) -> Result<PointSet>;
    fn check_formula(&self, f: &Formula) -> Result<()> {
        f.language().map(|_| ())
    }
}

impl Semantics for Model<'_> {
    fn top(&self) -> PointSet {
        self.full_set()
    }

    fn apply(&self, op: Operator, u: &PointSet) -> Result<PointSet> {
        Model::apply(self, op, u)
    }

    fn check_formula(&self, f: &Formula) -> Result<()> {
        f.check_language(self)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Valuation(BTreeMap<String, PointSet>);

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: impl Into<String>, set: PointSet) -> Self {
        self.insert(var, set);
        self
    }

    pub fn insert(&mut self, var: impl Into<String>, set: PointSet) {
        self.0.insert(var.into(), set);
    }

    pub fn get(&self, var: &str) -> Option<&PointSet> {
        self.0.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &PointSet)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Resolves point names against a model.
    pub fn from_names(model: &Model<'_>, map: &BTreeMap<String, Vec<String>>) -> Result<Self> {
        let names = model.names();
        let mut v = Valuation::new();
        for (var, pts) in map {
            let mut set = PointSet::empty(names.len());
            for p in pts {
                let i = names
                    .iter()
                    .position(|n| n == p)
                    .ok_or_else(|| Error::UnknownPoint(p.clone()))?;
                set.insert(i);
            }
            v.insert(var.clone(), set);
        }
        Ok(v)
    }

    pub fn to_names(&self, names: &[String]) -> BTreeMap<String, Vec<String>> {
        self.0
            .iter()
            .map(|(k, s)| (k.clone(), s.iter().map(|i| names[i].clone()).collect()))
            .collect()
    }

    /// `p={a,b}, q={}` with point names.
    pub fn describe(&self, names: &[String]) -> String {
        self.to_names(names)
            .iter()
            .map(|(k, v)| format!("{k}={{{}}}", v.join(",")))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, s)| format!("{k}={s:?}")).collect();
        f.write_str(&parts.join(", "))
    }
}

fn value_of<S: Semantics + ?Sized>(
    sem: &S,
    f: &Formula,
    v: &Valuation,
    memo: &mut HashMap<Formula, PointSet>,
) -> Result<PointSet> {
    if let Some(s) = memo.get(f) {
        return Ok(*s);
    }
    use Formula::*;
    let top = sem.top();
    let neg = |s: PointSet| top.difference(&s);
    let mut go = |g: &Formula| value_of(sem, g, v, memo);
    let out = match f {
        Var(name) => {
            let s = *v
                .get(name)
                .ok_or_else(|| Error::MissingVariable(name.clone()))?;
            if s.width() != top.width() {
                return Err(Error::WidthMismatch {
                    expected: top.width(),
                    found: s.width(),
                });
            }
            s.intersection(&top)
        }
        Bot => PointSet::empty(top.width()),
        Top => top,
        Not(a) => neg(go(a)?),
        And(a, b) => go(a)?.intersection(&go(b)?),
        Or(a, b) => go(a)?.union(&go(b)?),
        Implies(a, b) => neg(go(a)?).union(&go(b)?),
        Dia(a) => sem.apply(Operator::Dia, &go(a)?)?,
        Ex(a) => sem.apply(Operator::Ex, &go(a)?)?,
        Ex1(a) => sem.apply(Operator::Ex1, &go(a)?)?,
        Ex2(a) => sem.apply(Operator::Ex2, &go(a)?)?,
        Box(a) => neg(sem.apply(Operator::Dia, &neg(go(a)?))?),
        All(a) => neg(sem.apply(Operator::Ex, &neg(go(a)?))?),
        All1(a) => neg(sem.apply(Operator::Ex1, &neg(go(a)?))?),
        All2(a) => neg(sem.apply(Operator::Ex2, &neg(go(a)?))?),
    };
    memo.insert(f.clone(), out);
    Ok(out)
}

/// Evaluates `f` in any [`Semantics`]; boxes are the duals `¬◇¬`.
pub fn eval_in<S: Semantics + ?Sized>(sem: &S, f: &Formula, v: &Valuation) -> Result<PointSet> {
    sem.check_formula(f)?;
    value_of(sem, f, v, &mut HashMap::new())
}

/// Values of every distinct subformula, children first.
pub fn eval_subterms_in<S: Semantics + ?Sized>(
    sem: &S,
    f: &Formula,
    v: &Valuation,
) -> Result<Vec<(Formula, PointSet)>> {
    sem.check_formula(f)?;
    let mut memo = HashMap::new();
    f.subterms()
        .into_iter()
        .map(|g| Ok((g.clone(), value_of(sem, g, v, &mut memo)?)))
        .collect()
}

pub fn eval(model: &Model<'_>, f: &Formula, v: &Valuation) -> Result<PointSet> {
    eval_in(model, f, v)
}

pub fn eval_subterms(
    model: &Model<'_>,
    f: &Formula,
    v: &Valuation,
) -> Result<Vec<(Formula, PointSet)>> {
    eval_subterms_in(model, f, v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Counterexample(Valuation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn counterexample(&self) -> Option<&Valuation> {
        match self {
            Validity::Valid => None,
            Validity::Counterexample(v) => Some(v),
        }
    }
}

/// The budget from [`BUDGET_ENV`], or [`DEFAULT_BUDGET`].
pub fn valuation_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

enum Step {
    Var(usize),
    Const(u128),
    Not(usize),
    And(usize, usize),
    Or(usize, usize),
    Implies(usize, usize),
    Op {
        op: Operator,
        dual: bool,
        arg: usize,
    },
}

struct Program {
    steps: Vec<Step>,
    tables: HashMap<Operator, Vec<u128>>,
}

fn compile(model: &Model<'_>, f: &Formula, vars: &[String]) -> Result<Program> {
    let n = model.len();
    let full = PointSet::full(n).bits();
    let subs = f.subterms();
    let slot: HashMap<&Formula, usize> = subs.iter().enumerate().map(|(i, g)| (*g, i)).collect();
    let mut steps = Vec::with_capacity(subs.len());
    let mut used = Vec::new();
    for g in &subs {
        use Formula::*;
        let s = |h: &Formula| slot[h];
        let mut op = |op: Operator, dual: bool, a: &Formula| {
            used.push(op);
            Step::Op {
                op,
                dual,
                arg: s(a),
            }
        };
        steps.push(match g {
            Var(v) => Step::Var(vars.iter().position(|x| x == v).expect("collected")),
            Bot => Step::Const(0),
            Top => Step::Const(full),
            Not(a) => Step::Not(s(a)),
            And(a, b) => Step::And(s(a), s(b)),
            Or(a, b) => Step::Or(s(a), s(b)),
            Implies(a, b) => Step::Implies(s(a), s(b)),
            Dia(a) => op(Operator::Dia, false, a),
            Box(a) => op(Operator::Dia, true, a),
            Ex(a) => op(Operator::Ex, false, a),
            All(a) => op(Operator::Ex, true, a),
            Ex1(a) => op(Operator::Ex1, false, a),
            All1(a) => op(Operator::Ex1, true, a),
            Ex2(a) => op(Operator::Ex2, false, a),
            All2(a) => op(Operator::Ex2, true, a),
        });
    }
    let mut tables = HashMap::new();
    if n <= TABLE_POINTS {
        for op in used {
            if tables.contains_key(&op) {
                continue;
            }
            let t = (0..1u128 << n)
                .map(|b| Ok(model.apply(op, &PointSet::from_bits(n, b))?.bits()))
                .collect::<Result<Vec<_>>>()?;
            tables.insert(op, t);
        }
    }
    Ok(Program { steps, tables })
}

impl Program {
    fn run(&self, model: &Model<'_>, full: u128, vals: &[u128], slots: &mut [u128]) -> u128 {
        let n = model.len();
        let apply = |op: Operator, b: u128| -> u128 {
            match self.tables.get(&op) {
                Some(t) => t[b as usize],
                None => model
                    .apply(op, &PointSet::from_bits(n, b))
                    .expect("operators checked at compile time")
                    .bits(),
            }
        };
        for i in 0..self.steps.len() {
            slots[i] = match self.steps[i] {
                Step::Var(v) => vals[v],
                Step::Const(c) => c,
                Step::Not(a) => full & !slots[a],
                Step::And(a, b) => slots[a] & slots[b],
                Step::Or(a, b) => slots[a] | slots[b],
                Step::Implies(a, b) => (full & !slots[a]) | slots[b],
                Step::Op {
                    op,
                    dual: false,
                    arg,
                } => apply(op, slots[arg]),
                Step::Op {
                    op,
                    dual: true,
                    arg,
                } => full & !apply(op, full & !slots[arg]),
            };
        }
        slots[self.steps.len() - 1]
    }
}

/// Exhaustive validity check under the budget from [`valuation_budget`].
pub fn is_valid(model: &Model<'_>, f: &Formula) -> Result<Validity> {
    is_valid_with_budget(model, f, valuation_budget())
}

/// Sweeps all valuations in mixed-radix order: the alphabetically first
/// variable is the most significant digit and each digit is a subset
/// bitmask. The first failing valuation in that order is returned.
pub fn is_valid_with_budget(model: &Model<'_>, f: &Formula, budget: u64) -> Result<Validity> {
    f.check_language(model)?;
    let vars = f.variables();
    let n = model.len();
    let exponent = vars.len() * n;
    if exponent >= 64 || (1u64 << exponent) > budget {
        return Err(Error::BudgetExceeded {
            vars: vars.len(),
            points: n,
            exponent,
            budget,
        });
    }
    let prog = compile(model, f, &vars)?;
    let full = PointSet::full(n).bits();
    let mut vals = vec![0u128; vars.len()];
    let mut slots = vec![0u128; prog.steps.len()];
    loop {
        if prog.run(model, full, &vals, &mut slots) != full {
            let mut v = Valuation::new();
            for (name, &b) in vars.iter().zip(&vals) {
                v.insert(name.clone(), PointSet::from_bits(n, b));
            }
            return Ok(Validity::Counterexample(v));
        }
        let mut d = vars.len();
        loop {
            if d == 0 {
                return Ok(Validity::Valid);
            }
            d -= 1;
            if vals[d] == full {
                vals[d] = 0;
            } else {
                vals[d] += 1;
                break;
            }
        }
    }
}
