//! Finite-model workbench for monadic S4 (MS4) frames, their dual algebras,
//! and the translation of S5₂-frames into depth-2 MS4-frames.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod formula;
pub mod frame;
pub mod json;
pub mod model;
pub mod partition;
pub mod pointset;
pub mod relation;
pub mod s52;

pub use error::{Error, Result};
pub use formula::{Formula, Valuation};
pub use frame::{build_frame, ClosureMode, Frame};
pub use model::{Model, Operator};
pub use partition::Partition;
pub use pointset::PointSet;
pub use relation::Relation;
pub use s52::{build_s52, S52Frame};
