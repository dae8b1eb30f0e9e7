//! The exact graded-commutative algebra engine.
//!
//! [`WeightedAlgebra`] realizes the weighted algebra `Lambda(Y, c)` cut down
//! by the generalized Stanley-Reisner ideal `I_K`: the module basis is
//! `{y_{tau,u}}` over faces `tau` of `K` with one generator index per vertex,
//! and the product of two basis elements supported on disjoint faces picks up
//! the integer weight
//!
//! ```text
//! lambda = prod_{i in tau} c_i^{tau ∪ omega} / c_i^{tau}
//!        * prod_{i in omega} c_i^{tau ∪ omega} / c_i^{omega}
//! ```
//!
//! together with the Koszul sign of merging the two sorted generator lists.
//! Products with a repeated vertex, or with a union that is not a face of
//! `K`, vanish. [`SphereAlgebra`] is the one-generator-per-vertex weighted
//! sphere product algebra `A(c)` driven by a coefficient sequence, and
//! [`StructureTable`] captures any of these multiplication tables in a
//! deterministic, comparable, CSV-exportable form.

mod element;
mod sphere;
mod table;
mod weighted;

pub use element::{AlgebraElement, BasisElement, GeneratorSpec};
pub use sphere::{SphereAlgebra, SphereElement};
pub use table::{structure_constants_match, MatchReport, StructureTable};
pub use weighted::WeightedAlgebra;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("universe sizes disagree: {left} vs {right}")]
    MismatchedUniverse { left: u32, right: u32 },
    #[error("generator degree for vertex {vertex} must be >= 1")]
    DegreeZero { vertex: u32 },
    #[error("expected {m} degree lists, got {got}")]
    WrongDegreeCount { got: usize, m: u32 },
    #[error("invalid weight table: {0}")]
    InvalidWeights(crate::sequences::SequenceError),
    #[error("invalid coefficient sequence: {0}")]
    InvalidCoefficients(crate::sequences::SequenceError),
    #[error("element is not over this algebra: no basis element {0}")]
    ElementNotOverAlgebra(String),
    #[error("operation requires the complex to be a single full simplex")]
    NotASimplex,
    #[error("the given complex is not a subcomplex")]
    NotASubcomplex,
    #[error("vertex {vertex} is out of range 1..={m}")]
    VertexOutOfRange { vertex: u32, m: u32 },
    #[error("element has a term on face {0}, outside the full subcomplex")]
    OutsideFullSubcomplex(String),
    #[error("correspondence is not a bijection of bases: {0}")]
    BadCorrespondence(String),
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
}

/// Koszul sign for merging the sorted generator list of `left` past `right`:
/// one transposition for every pair of odd-degree generators that must swap.
///
/// `left` and `right` are `(vertex, degree)` lists sorted by vertex, with
/// disjoint vertex sets; the merged list is sorted by vertex.
pub(crate) fn koszul_merge_sign(left: &[(u32, u32)], right: &[(u32, u32)]) -> i8 {
    let mut swaps = 0u64;
    for &(lv, ld) in left {
        if ld % 2 == 0 {
            continue;
        }
        for &(rv, rd) in right {
            if rd % 2 == 1 && rv < lv {
                swaps += 1;
            }
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_sign_counts_odd_pairs() {
        // Both odd, out of order: one transposition.
        assert_eq!(koszul_merge_sign(&[(2, 3)], &[(1, 3)]), -1);
        // In order: no transposition.
        assert_eq!(koszul_merge_sign(&[(1, 3)], &[(2, 3)]), 1);
        // Even degrees never contribute.
        assert_eq!(koszul_merge_sign(&[(2, 4)], &[(1, 3)]), 1);
        assert_eq!(koszul_merge_sign(&[(2, 3)], &[(1, 2)]), 1);
        // Two odd generators moving past one odd generator.
        assert_eq!(koszul_merge_sign(&[(2, 1), (3, 5)], &[(1, 3)]), 1);
    }
}
