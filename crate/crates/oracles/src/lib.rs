//! Brute-force reference implementations for differential testing.
//!
//! Everything here trades speed for obviousness and rebuilds its answers
//! from scratch on every query; none of it shares logic with the
//! structures it checks.

pub mod graphs;
pub mod naive_uf;
pub mod tri;

pub use naive_uf::{NaiveOutcome, NaiveUnionFind};
