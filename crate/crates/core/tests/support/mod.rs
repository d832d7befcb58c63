//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

pub mod arb;
pub mod brute;
pub mod ext;
pub mod paths;
