//! Power sequences, coefficient sequences, the map `Phi` between them, and
//! the monoid machinery around both.
//!
//! A power sequence assigns to every face `sigma` of `Delta^{m-1}` a vector
//! `(c_1^sigma, ..., c_m^sigma)` of positive integers with `c_i^sigma = 1`
//! off `sigma` and `c_i^tau | c_i^sigma` for `tau` a subface. A coefficient
//! sequence assigns a single positive integer `c_sigma` per face, normalized
//! on the empty face and vertices, with `c_{sigma'} c_{sigma''} | c_sigma`
//! for disjoint decompositions. `Phi` sends a power sequence to the
//! coefficient sequence `sigma -> prod_i c_i^sigma`.
//!
//! Both families are commutative monoids under pointwise multiplication, and
//! their prime-local parts embed into integer lattices by entrywise p-adic
//! valuation; the distinguished generators `c(tau,j)`, `d(tau,j)`,
//! `frak_c(tau)`, `frak_d(tau)` and the alternating-sum decomposition of `d`
//! in terms of `c` live at that lattice level. The realizability question
//! "is this coefficient sequence `Phi` of something?" is decided exactly by
//! [`phi_preimage_search`].

mod coefficient;
mod exponent;
mod power;
mod ring;
mod search;

pub use coefficient::{CoefficientSequence, CoefficientViolation};
pub use exponent::{
    check_mobius_decomposition, CoefficientExponentVector, MobiusReport, PowerExponentVector,
};
pub use power::{PowerSequence, PowerViolation};
pub use ring::CoefficientRing;
pub use search::{enumerate_phi_image, phi_preimage_search, PreimageOutcome};

use crate::complex::Simplex;
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SequenceError {
    #[error("table is missing an entry for face {face}")]
    MissingFace { face: Simplex },
    #[error("table has an entry for {face}, which is not a face of Delta^{{m-1}} with m={m}")]
    ForeignFace { face: Simplex, m: u32 },
    #[error("entry for face {face} has {got} components, expected m={m}")]
    WrongArity { face: Simplex, got: usize, m: u32 },
    #[error("entry for face {face} at vertex {vertex} must be a positive integer")]
    NonPositiveEntry { face: Simplex, vertex: u32 },
    #[error("vertex universe size {m} is not in 1..={max}", max = crate::complex::MAX_VERTICES)]
    UniverseSize { m: u32 },
    #[error("power-sequence invariants violated: {}", render_list(.0))]
    PowerInvariants(Vec<PowerViolation>),
    #[error("coefficient-sequence conditions violated: {}", render_list(.0))]
    CoefficientConditions(Vec<CoefficientViolation>),
    #[error("sequences have mismatched universe sizes {left} and {right}")]
    MismatchedUniverse { left: u32, right: u32 },
    #[error("not in PS: c_{vertex}^{{{{{vertex}}}}} = {value} differs from 1")]
    NotNormalized { vertex: u32, value: BigUint },
    #[error("entry {value} at {context} is not a power of {p}")]
    NotAPrimePower { value: BigUint, p: u64, context: String },
    #[error("{tau} is not a subface of {sigma}")]
    NotASubface { tau: Simplex, sigma: Simplex },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("vertex {vertex} is out of range 1..={m}")]
    VertexOutOfRange { vertex: u32, m: u32 },
    #[error("face {face} does not fit the universe [{m}]")]
    FaceOutOfRange { face: Simplex, m: u32 },
    #[error(
        "enumeration bounds exceeded (m={m}, max_exponent={max_exponent}): \
         about {estimate} raw tables; supported bounds are m<=4, max_exponent<=2"
    )]
    EnumerationTooLarge { m: u32, max_exponent: u32, estimate: String },
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
}

fn render_list<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ")
}

#[cfg(test)]
pub(crate) mod fixtures {
    use std::collections::BTreeMap;

    use num_bigint::BigUint;

    use super::{CoefficientSequence, PowerSequence};
    use crate::complex::Simplex;

    pub fn face(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    pub fn urow(vals: &[u64]) -> Vec<BigUint> {
        vals.iter().map(|&x| BigUint::from(x)).collect()
    }

    pub fn table(_m: u32, rows: &[(&[u32], &[u64])]) -> BTreeMap<Simplex, Vec<BigUint>> {
        rows.iter().map(|(vs, row)| (face(vs), urow(row))).collect()
    }

    pub fn cs_table(rows: &[(&[u32], u64)]) -> BTreeMap<Simplex, BigUint> {
        rows.iter().map(|&(vs, v)| (face(vs), BigUint::from(v))).collect()
    }

    /// The m=3 table with minimal weights (p, q, r) = (2, 3, 5).
    pub fn minimal_235() -> PowerSequence {
        PowerSequence::minimal(3, &urow(&[2, 3, 5])).unwrap()
    }

    /// The same table with the (2,3) and (1,2,3) rows rescaled by s=2, t=3.
    pub fn non_minimal_235() -> PowerSequence {
        let entries = table(
            3,
            &[
                (&[], &[1, 1, 1]),
                (&[1], &[2, 1, 1]),
                (&[2], &[1, 3, 1]),
                (&[3], &[1, 1, 5]),
                (&[1, 2], &[2, 3, 1]),
                (&[1, 3], &[2, 1, 5]),
                (&[2, 3], &[1, 3, 10]),
                (&[1, 2, 3], &[2, 3, 30]),
            ],
        );
        PowerSequence::validate(3, entries).unwrap()
    }

    /// The m=3 coefficient sequence that is 2 on every face of size >= 2.
    pub fn twos_on_big_faces() -> CoefficientSequence {
        let entries = cs_table(&[
            (&[], 1),
            (&[1], 1),
            (&[2], 1),
            (&[3], 1),
            (&[1, 2], 2),
            (&[1, 3], 2),
            (&[2, 3], 2),
            (&[1, 2, 3], 2),
        ]);
        CoefficientSequence::validate(3, entries, &super::CoefficientRing::integers()).unwrap()
    }

    /// The two distinct m=3 power sequences with the same image under Phi.
    pub fn phi_collision_pair(p: u64) -> (PowerSequence, PowerSequence) {
        let mut rows = vec![
            (face(&[]), urow(&[1, 1, 1])),
            (face(&[1]), urow(&[1, 1, 1])),
            (face(&[2]), urow(&[1, 1, 1])),
            (face(&[3]), urow(&[1, 1, 1])),
            (face(&[1, 2]), urow(&[p, 1, 1])),
            (face(&[1, 3]), urow(&[p, 1, 1])),
            (face(&[2, 3]), urow(&[1, p, 1])),
            (face(&[1, 2, 3]), urow(&[p, p, 1])),
        ];
        let first = PowerSequence::validate(3, rows.iter().cloned().collect()).unwrap();
        rows[4] = (face(&[1, 2]), urow(&[1, p, 1]));
        let second = PowerSequence::validate(3, rows.into_iter().collect()).unwrap();
        (first, second)
    }
}
