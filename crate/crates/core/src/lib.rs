//! Game logic over monotone neighbourhood models.

pub mod corpus;
pub mod eval;
pub mod exec;
pub mod gen;
pub mod glg;
pub mod graph;
pub mod nbhd;
pub mod parity;
pub mod syntax;
