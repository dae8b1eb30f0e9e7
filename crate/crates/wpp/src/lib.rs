//! Exact arithmetic for weighted polyhedral products.
//!
//! This crate implements the combinatorial and algebraic layer of weighted
//! polyhedral products over subrings of the rationals:
//!
//! - [`complex`]: simplices and simplicial complexes on `[m]`, the indexing
//!   combinatorics for everything else.
//! - [`sequences`]: power sequences `c`, coefficient sequences, the monoid
//!   map `Phi` with `Phi(c)_sigma = prod_{i in sigma} c_i^sigma`, the
//!   distinguished generators of the prime-local group completions, and an
//!   exact, exhaustive `Phi`-preimage (realizability) search.
//! - [`algebra`]: the weighted graded-commutative algebra `Lambda(Y, c)` and
//!   its quotient by the generalized Stanley-Reisner ideal `I_K`, the
//!   weighted sphere product algebra `A(c)`, comparison and restriction
//!   homomorphisms, and Poincare series.
//! - [`oracle`]: independent brute-force reference implementations used to
//!   cross-check the algebra engine.
//! - [`cli`]: the `wpp` command-line front end (validation, `Phi`, preimage
//!   search, ring tables, consolidated lemma checks).
//!
//! All arithmetic is exact: arbitrary-precision integers for table entries
//! and rationals for algebra coefficients. No floating point anywhere.
//!
//! Values are immutable after construction and all operations are pure, so
//! everything here is safe to share across threads. Outputs are
//! deterministic: faces enumerate in (cardinality, lexicographic) order and
//! searches report the minimal witness in their documented order.

pub mod algebra;
pub mod cli;
pub mod complex;
pub mod json;
pub mod oracle;
pub mod sequences;

pub use complex::{Simplex, SimplicialComplex};
pub use sequences::{CoefficientRing, CoefficientSequence, PowerSequence};
