//! Core algorithms for graph property testing in zero-field Ising models.
//!
//! The crate is split along the main computational surfaces:
//!
//! - [`graph`]: simple/weighted graphs, graph primitives (distances, packing,
//!   connectivity, cliques) and the generator constructions used by the
//!   experiment harness.
//! - [`witness`]: greedy weight-ordered witness searches (maximum spanning
//!   forest, first cycle, first m-clique) over a correlation matrix.
//! - [`ising`]: the model itself, exact inference by state enumeration,
//!   closed-form correlation formulas, and samplers (exact and Gibbs).
//! - [`screening`]: correlation-screening property tests for ferromagnets.
//! - [`general`]: score-type tests for models with signed interactions,
//!   including the polynomial-time cycle test.
//! - [`bounds`]: closed-form signal-strength bounds and the two computable
//!   correlation upper bounds (truncated comparison series, self-avoiding
//!   walks).
//! - [`oracle`]: brute-force numerical certification of the structural
//!   inequalities the tests rely on (chi-square identities, partition-ratio
//!   monotonicity, stochastic dominance, edge-deletion monotonicity).
//!
//! Everything is `no_std`-compatible (with `alloc`); IO, file formats and the
//! CLI live in the companion crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod general;
pub mod graph;
pub mod ising;
pub mod oracle;
pub mod rng;
pub mod screening;
pub mod util;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Graph, WeightedGraph};
pub use ising::{CorrelationMatrix, IsingModel, SampleBatch, SamplerTag};
