//! Integer-lattice images of the prime-local monoids `PS(p)` and `CS(p)`.
//!
//! Entrywise p-adic valuation embeds each monoid into a free abelian group:
//! pointwise multiplication of tables becomes addition of finitely supported
//! integer vectors, indexed by `(face, vertex)` on the power side and by
//! `face` on the coefficient side. The alternating-sum decomposition of the
//! `d`-generators in terms of the `c`-generators is verified here, inside
//! the lattice, where negative exponents make sense.

use std::collections::BTreeMap;
use std::fmt;

use super::{CoefficientSequence, PowerSequence, SequenceError};
use crate::complex::{all_faces, Simplex};

/// Lattice image of a `PS(p)` table: a finitely supported map
/// `(face, vertex) -> exponent`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PowerExponentVector {
    m: u32,
    p: u64,
    entries: BTreeMap<(Simplex, u32), i64>,
}

/// Lattice image of a `CS(p)` table: a finitely supported map
/// `face -> exponent`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoefficientExponentVector {
    m: u32,
    p: u64,
    entries: BTreeMap<Simplex, i64>,
}

macro_rules! lattice_ops {
    ($name:ident, $key:ty) => {
        impl $name {
            pub fn zero(m: u32, p: u64) -> Self {
                Self { m, p, entries: BTreeMap::new() }
            }

            pub fn m(&self) -> u32 {
                self.m
            }

            pub fn prime(&self) -> u64 {
                self.p
            }

            pub fn is_zero(&self) -> bool {
                self.entries.is_empty()
            }

            /// Nonzero entries in canonical key order.
            pub fn support(&self) -> impl Iterator<Item = (&$key, &i64)> {
                self.entries.iter()
            }

            pub fn get(&self, key: &$key) -> i64 {
                self.entries.get(key).copied().unwrap_or(0)
            }

            pub fn add(&self, other: &Self) -> Result<Self, SequenceError> {
                self.combine(other, 1)
            }

            pub fn sub(&self, other: &Self) -> Result<Self, SequenceError> {
                self.combine(other, -1)
            }

            /// `self + scale * other`.
            pub fn combine(&self, other: &Self, scale: i64) -> Result<Self, SequenceError> {
                if self.m != other.m {
                    return Err(SequenceError::MismatchedUniverse {
                        left: self.m,
                        right: other.m,
                    });
                }
                if self.p != other.p {
                    return Err(SequenceError::NotPrime(other.p));
                }
                let mut entries = self.entries.clone();
                for (key, value) in &other.entries {
                    let slot = entries.entry(key.clone()).or_insert(0);
                    *slot += scale * value;
                    if *slot == 0 {
                        entries.remove(key);
                    }
                }
                Ok(Self { m: self.m, p: self.p, entries })
            }
        }
    };
}

lattice_ops!(PowerExponentVector, (Simplex, u32));
lattice_ops!(CoefficientExponentVector, Simplex);

impl fmt::Display for PowerExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|((face, i), e)| format!("({face},{i})->{e}"))
            .collect();
        write!(f, "[{}] (p={})", parts.join(", "), self.p)
    }
}

impl fmt::Display for CoefficientExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.entries.iter().map(|(face, e)| format!("{face}->{e}")).collect();
        write!(f, "[{}] (p={})", parts.join(", "), self.p)
    }
}

impl PowerSequence {
    /// Entrywise p-adic valuation; requires every entry to be a power of `p`.
    pub fn exponent_vector(&self, p: u64) -> Result<PowerExponentVector, SequenceError> {
        if !super::ring::is_prime(p) {
            return Err(SequenceError::NotPrime(p));
        }
        let mut entries = BTreeMap::new();
        for (face, row) in self.entries() {
            for (pos, value) in row.iter().enumerate() {
                let e = super::ring::pure_prime_power(value, p).ok_or_else(|| {
                    SequenceError::NotAPrimePower {
                        value: value.clone(),
                        p,
                        context: format!("(face {face}, vertex {})", pos + 1),
                    }
                })?;
                if e != 0 {
                    entries.insert((face.clone(), pos as u32 + 1), e);
                }
            }
        }
        Ok(PowerExponentVector { m: self.m(), p, entries })
    }
}

impl CoefficientSequence {
    /// Entrywise p-adic valuation; requires every entry to be a power of `p`.
    pub fn exponent_vector(&self, p: u64) -> Result<CoefficientExponentVector, SequenceError> {
        if !super::ring::is_prime(p) {
            return Err(SequenceError::NotPrime(p));
        }
        let mut entries = BTreeMap::new();
        for (face, value) in self.entries() {
            let e = super::ring::pure_prime_power(value, p).ok_or_else(|| {
                SequenceError::NotAPrimePower {
                    value: value.clone(),
                    p,
                    context: format!("face {face}"),
                }
            })?;
            if e != 0 {
                entries.insert(face.clone(), e);
            }
        }
        Ok(CoefficientExponentVector { m: self.m(), p, entries })
    }
}

/// Outcome of checking the alternating-sum decompositions
/// `d(tau,j) = prod_{tau ⊆ sigma} c(sigma,j)^{(-1)^{|sigma - tau|}}` and
/// `frak_d(tau) = prod_{tau ⊆ sigma} frak_c(sigma)^{(-1)^{|sigma - tau|}}`,
/// both evaluated in the exponent lattices.
#[derive(Debug, Clone)]
pub struct MobiusReport {
    pub m: u32,
    pub tau: Simplex,
    pub j: u32,
    pub p: u64,
    pub power_lhs: PowerExponentVector,
    pub power_rhs: PowerExponentVector,
    pub coefficient_lhs: CoefficientExponentVector,
    pub coefficient_rhs: CoefficientExponentVector,
}

impl MobiusReport {
    pub fn power_side_matches(&self) -> bool {
        self.power_lhs == self.power_rhs
    }

    pub fn coefficient_side_matches(&self) -> bool {
        self.coefficient_lhs == self.coefficient_rhs
    }

    pub fn pass(&self) -> bool {
        self.power_side_matches() && self.coefficient_side_matches()
    }
}

impl fmt::Display for MobiusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "mobius decomposition at m={}, tau={}, j={}, p={}: {}",
            self.m,
            self.tau,
            self.j,
            self.p,
            if self.pass() { "pass" } else { "FAIL" }
        )?;
        writeln!(f, "  power side:       d = {}", self.power_lhs)?;
        writeln!(f, "  signed c-sum:         {}", self.power_rhs)?;
        writeln!(f, "  coefficient side: d = {}", self.coefficient_lhs)?;
        write!(f, "  signed c-sum:         {}", self.coefficient_rhs)
    }
}

/// Verifies, in the exponent lattices, that the signed sums of `c`-generator
/// vectors over faces `sigma ⊇ tau` reproduce the `d`-generator vectors.
pub fn check_mobius_decomposition(
    m: u32,
    tau: &Simplex,
    j: u32,
    p: u64,
) -> Result<MobiusReport, SequenceError> {
    let power_lhs = PowerSequence::generator_d(m, tau, j, p)?.exponent_vector(p)?;
    let coefficient_lhs = CoefficientSequence::generator_frak_d(m, tau, p)?.exponent_vector(p)?;

    let mut power_rhs = PowerExponentVector::zero(m, p);
    let mut coefficient_rhs = CoefficientExponentVector::zero(m, p);
    for sigma in all_faces(m) {
        if !tau.is_subset_of(&sigma) {
            continue;
        }
        let sign = if (sigma.len() - tau.len()) % 2 == 0 { 1 } else { -1 };
        let c_vec = PowerSequence::generator_c(m, &sigma, j, p)?.exponent_vector(p)?;
        power_rhs = power_rhs.combine(&c_vec, sign)?;
        let frak_c_vec =
            CoefficientSequence::generator_frak_c(m, &sigma, p)?.exponent_vector(p)?;
        coefficient_rhs = coefficient_rhs.combine(&frak_c_vec, sign)?;
    }

    Ok(MobiusReport {
        m,
        tau: tau.clone(),
        j,
        p,
        power_lhs,
        power_rhs,
        coefficient_lhs,
        coefficient_rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::fixtures::{face, minimal_235};
    use crate::sequences::{CoefficientSequence, PowerSequence};

    #[test]
    fn all_ones_maps_to_zero() {
        let ones = PowerSequence::all_ones(3).unwrap();
        assert!(ones.exponent_vector(2).unwrap().is_zero());
        let ones = CoefficientSequence::all_ones(3).unwrap();
        assert!(ones.exponent_vector(5).unwrap().is_zero());
    }

    #[test]
    fn generator_c_maps_to_an_indicator() {
        let tau = face(&[1, 2]);
        let c = PowerSequence::generator_c(3, &tau, 1, 2).unwrap();
        let vec = c.exponent_vector(2).unwrap();
        let support: Vec<(Simplex, u32)> =
            vec.support().map(|(k, _)| k.clone()).collect();
        assert_eq!(support, vec![(face(&[1, 2]), 1), (face(&[1, 2, 3]), 1)]);
        assert!(vec.support().all(|(_, e)| *e == 1));
    }

    #[test]
    fn mixed_entries_are_rejected() {
        let ps = minimal_235();
        assert!(matches!(
            ps.exponent_vector(2),
            Err(SequenceError::NotAPrimePower { .. })
        ));
    }

    #[test]
    fn multiplication_becomes_addition() {
        let tau = face(&[1, 2]);
        let a = PowerSequence::generator_c(3, &tau, 1, 2).unwrap();
        let b = PowerSequence::generator_d(3, &face(&[1, 2, 3]), 2, 2).unwrap();
        let sum = a
            .exponent_vector(2)
            .unwrap()
            .add(&b.exponent_vector(2).unwrap())
            .unwrap();
        let product_vec = a.mul(&b).unwrap().exponent_vector(2).unwrap();
        assert_eq!(sum, product_vec);
    }

    #[test]
    fn mobius_decomposition_small_cases() {
        // Single-term case: tau is the top face, so d = c there.
        let top = face(&[1, 2, 3]);
        let report = check_mobius_decomposition(3, &top, 1, 2).unwrap();
        assert!(report.pass());

        let report = check_mobius_decomposition(3, &face(&[1]), 1, 2).unwrap();
        assert!(report.pass());
        assert!(report.power_side_matches());
        assert!(report.coefficient_side_matches());
    }

    #[test]
    fn mobius_decomposition_exhaustive_m_le_4() {
        for m in 1..=4u32 {
            for tau in all_faces(m) {
                for j in 1..=m {
                    let report = check_mobius_decomposition(m, &tau, j, 3).unwrap();
                    assert!(report.pass(), "failed at m={m}, tau={tau}, j={j}");
                }
            }
        }
    }
}
