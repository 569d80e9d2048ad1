//! A uniform view over the two frame kinds, exposing their dual operators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::s52::S52Frame;

/// Unary dual operators. `BlackDia` is the derived `◆ = ◇∃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    Dia,
    Ex,
    BlackDia,
    Ex1,
    Ex2,
}

impl Operator {
    pub fn as_str(self) -> &'static str {
        match self {
            Operator::Dia => "dia",
            Operator::Ex => "ex",
            Operator::BlackDia => "blackdia",
            Operator::Ex1 => "ex1",
            Operator::Ex2 => "ex2",
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "dia" | "<>" | "◇" => Operator::Dia,
            "ex" | "E" | "∃" => Operator::Ex,
            "blackdia" | "#<>" | "◆" => Operator::BlackDia,
            "ex1" | "<1>" | "∃₁" => Operator::Ex1,
            "ex2" | "<2>" | "∃₂" => Operator::Ex2,
            other => return Err(Error::UnsupportedOperator(other.to_string())),
        })
    }
}

/// Either kind of finite frame.
#[derive(Debug, Clone, Copy)]
pub enum Model<'a> {
    Ms4(&'a Frame),
    S52(&'a S52Frame),
}

impl<'a> From<&'a Frame> for Model<'a> {
    fn from(f: &'a Frame) -> Self {
        Model::Ms4(f)
    }
}

impl<'a> From<&'a S52Frame> for Model<'a> {
    fn from(f: &'a S52Frame) -> Self {
        Model::S52(f)
    }
}

impl<'a> Model<'a> {
    pub fn len(&self) -> usize {
        match self {
            Model::Ms4(f) => f.len(),
            Model::S52(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn names(&self) -> &'a [String] {
        match self {
            Model::Ms4(f) => f.names(),
            Model::S52(f) => f.names(),
        }
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// The operators native to this frame kind.
    pub fn native_operators(&self) -> Vec<Operator> {
        match self {
            Model::Ms4(_) => vec![Operator::Dia, Operator::Ex],
            Model::S52(_) => vec![Operator::Ex1, Operator::Ex2],
        }
    }

    pub fn supports(&self, op: Operator) -> bool {
        matches!(
            (self, op),
            (
                Model::Ms4(_),
                Operator::Dia | Operator::Ex | Operator::BlackDia
            ) | (Model::S52(_), Operator::Ex1 | Operator::Ex2)
        )
    }

    pub fn check_supported(&self, ops: &[Operator]) -> Result<()> {
        match ops.iter().find(|&&op| !self.supports(op)) {
            Some(op) => Err(Error::UnsupportedOperator(op.to_string())),
            None => Ok(()),
        }
    }

    /// The relation whose preimage map is `op`.
    pub fn relation(&self, op: Operator) -> Result<Relation> {
        match (self, op) {
            (Model::Ms4(f), Operator::Dia) => Ok(f.r().clone()),
            (Model::Ms4(f), Operator::Ex) => Ok(f.e_relation().clone()),
            (Model::Ms4(f), Operator::BlackDia) => Ok(f.q_relation()),
            (Model::S52(f), Operator::Ex1) => Ok(f.e1_relation().clone()),
            (Model::S52(f), Operator::Ex2) => Ok(f.e2_relation().clone()),
            _ => Err(Error::UnsupportedOperator(op.to_string())),
        }
    }

    pub fn apply(&self, op: Operator, u: &PointSet) -> Result<PointSet> {
        if u.width() != self.len() {
            return Err(Error::WidthMismatch {
                expected: self.len(),
                found: u.width(),
            });
        }
        match (self, op) {
            (Model::Ms4(f), Operator::Dia) => Ok(f.dia(u)),
            (Model::Ms4(f), Operator::Ex) => Ok(f.ex(u)),
            (Model::Ms4(f), Operator::BlackDia) => Ok(f.black_dia(u)),
            (Model::S52(f), Operator::Ex1) => Ok(f.ex1(u)),
            (Model::S52(f), Operator::Ex2) => Ok(f.ex2(u)),
            _ => Err(Error::UnsupportedOperator(op.to_string())),
        }
    }

    pub fn check_width(&self, u: &PointSet) -> Result<()> {
        if u.width() != self.len() {
            return Err(Error::WidthMismatch {
                expected: self.len(),
                found: u.width(),
            });
        }
        Ok(())
    }
}
