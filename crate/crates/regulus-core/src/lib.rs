//! Exact decision procedures for von Neumann regularity of inverse semigroup
//! algebras, finite (ample) groupoid convolution algebras, Leavitt path
//! algebras and Exel-Pardo self-similar algebras, cross-checked at desk scale
//! by brute-force oracles over the actual finite-dimensional algebras.
//!
//! All arithmetic is exact: arbitrary-precision rationals, residues mod n, or
//! tuples thereof. There is no floating point anywhere in this crate.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON formats and the CLI live in
//! the companion `regulus` crate.

#![no_std]
#![forbid(unsafe_code)]
// parallel-array index loops are the idiom throughout this crate
#![allow(clippy::needless_range_loop)]
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod decision;
pub mod graded;
pub mod graph;
pub mod group;
pub mod groupoid;
pub mod invsgp;
pub mod linalg;
pub mod pbij;
pub mod ring;
pub mod selfsim;
pub mod zoo;

pub use rand_chacha;

pub use algebra::{AlgElement, OracleMethod, OracleOutcome, OracleVerdict, StructureConstAlgebra};
pub use decision::{Condition, RegularityDecision, Verdict};
pub use graded::{Cocycle, GradedAlgebra, GradingGroup};
pub use graph::DirectedGraph;
pub use group::GroupTable;
pub use groupoid::FiniteGroupoid;
pub use invsgp::FiniteInverseSemigroup;
pub use pbij::PartialBijection;
pub use ring::{CoeffRing, Scalar};
pub use selfsim::SelfSimilarAction;

/// Default budget for exhaustive oracle sweeps, counted in ring elements.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Default cap for semigroup closures.
pub const DEFAULT_CAP: usize = 10_000;

/// Default seed for reproducible sampling; recorded in every report.
pub const DEFAULT_SEED: u64 = 12345;
