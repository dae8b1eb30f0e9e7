//! Coefficient sequences: one positive integer per face.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::ring::is_prime;
use super::{CoefficientRing, SequenceError};
use crate::complex::{all_faces, Simplex, MAX_VERTICES};

/// A failed coefficient-sequence condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoefficientViolation {
    /// Condition 1: the empty face and every vertex must carry the value 1.
    Normalization { face: Simplex, value: BigUint },
    /// Condition 2: for a disjoint decomposition `sigma = left ⊔ right`,
    /// `c_left * c_right` must divide `c_sigma`.
    DisjointDivisibility {
        left: Simplex,
        right: Simplex,
        product: BigUint,
        value: BigUint,
    },
    /// Condition 3: `c_sigma` must be coprime to every inverted prime.
    UnitFactor { face: Simplex, prime: u64, value: BigUint },
}

impl fmt::Display for CoefficientViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientViolation::Normalization { face, value } => {
                write!(f, "c_{face} = {value} but faces with at most one vertex must carry 1")
            }
            CoefficientViolation::DisjointDivisibility { left, right, product, value } => {
                write!(
                    f,
                    "c_{left} * c_{right} = {product} does not divide c_{} = {value}",
                    left.union(right)
                )
            }
            CoefficientViolation::UnitFactor { face, prime, value } => {
                write!(f, "c_{face} = {value} shares the inverted prime {prime}")
            }
        }
    }
}

/// A table `sigma -> c_sigma` of positive integers over all faces of
/// `Delta^{m-1}`.
///
/// A *valid* coefficient sequence over a ring `R` satisfies the three
/// conditions checked by [`CoefficientSequence::violations`]; as with power
/// sequences, the group-completion generator [`CoefficientSequence::generator_frak_d`]
/// deliberately breaks condition 2 and is carried as a plain table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CoefficientSequence {
    m: u32,
    entries: BTreeMap<Simplex, BigUint>,
}

impl CoefficientSequence {
    /// Structural checks only: full face coverage and positive entries.
    pub fn from_entries_unvalidated(
        m: u32,
        entries: BTreeMap<Simplex, BigUint>,
    ) -> Result<Self, SequenceError> {
        check_universe(m)?;
        for face in entries.keys() {
            if face.vertices().iter().any(|&v| v > m) {
                return Err(SequenceError::ForeignFace { face: face.clone(), m });
            }
        }
        for face in all_faces(m) {
            let value = entries
                .get(&face)
                .ok_or_else(|| SequenceError::MissingFace { face: face.clone() })?;
            if value.is_zero() {
                return Err(SequenceError::NonPositiveEntry { face, vertex: 0 });
            }
        }
        Ok(CoefficientSequence { m, entries })
    }

    /// Accepts a raw table iff all three conditions hold over `ring`.
    pub fn validate(
        m: u32,
        entries: BTreeMap<Simplex, BigUint>,
        ring: &CoefficientRing,
    ) -> Result<Self, SequenceError> {
        let cs = Self::from_entries_unvalidated(m, entries)?;
        let violations = cs.violations(ring);
        if violations.is_empty() {
            Ok(cs)
        } else {
            Err(SequenceError::CoefficientConditions(violations))
        }
    }

    /// Internal constructor for tables produced by crate code (`Phi`,
    /// generators, pointwise products), which are structurally sound by
    /// construction but not necessarily valid.
    pub(crate) fn from_parts(m: u32, entries: BTreeMap<Simplex, BigUint>) -> Self {
        CoefficientSequence { m, entries }
    }

    /// Checks conditions 1-3; condition 3 is judged against `ring`.
    pub fn violations(&self, ring: &CoefficientRing) -> Vec<CoefficientViolation> {
        let mut out = Vec::new();
        for (face, value) in &self.entries {
            if face.len() <= 1 && !value.is_one() {
                out.push(CoefficientViolation::Normalization {
                    face: face.clone(),
                    value: value.clone(),
                });
            }
        }
        for (sigma, value) in &self.entries {
            if sigma.len() < 2 {
                continue;
            }
            // Unordered disjoint splits; singleton-vs-rest through half-vs-half.
            for left in sigma.subsets() {
                let right = sigma.difference(&left);
                if left.is_empty() || right.is_empty() || left > right {
                    continue;
                }
                let product = &self.entries[&left] * &self.entries[&right];
                if !(value % &product).is_zero() {
                    out.push(CoefficientViolation::DisjointDivisibility {
                        left,
                        right,
                        product,
                        value: value.clone(),
                    });
                }
            }
        }
        for (face, value) in &self.entries {
            if let Some(prime) = ring.shared_inverted_prime(value) {
                out.push(CoefficientViolation::UnitFactor {
                    face: face.clone(),
                    prime,
                    value: value.clone(),
                });
            }
        }
        out
    }

    pub fn is_valid(&self, ring: &CoefficientRing) -> bool {
        self.violations(ring).is_empty()
    }

    /// The identity of the monoid.
    pub fn all_ones(m: u32) -> Result<Self, SequenceError> {
        check_universe(m)?;
        let entries = all_faces(m).into_iter().map(|f| (f, BigUint::one())).collect();
        Ok(CoefficientSequence { m, entries })
    }

    /// The generator `frak_c(tau)`: value `p` on every face containing `tau`.
    pub fn generator_frak_c(m: u32, tau: &Simplex, p: u64) -> Result<Self, SequenceError> {
        check_generator_args(m, tau, p)?;
        let p = BigUint::from(p);
        let entries = all_faces(m)
            .into_iter()
            .map(|face| {
                let value = if tau.is_subset_of(&face) { p.clone() } else { BigUint::one() };
                (face, value)
            })
            .collect();
        Ok(CoefficientSequence { m, entries })
    }

    /// The generator `frak_d(tau)`: value `p` on `tau` only.
    pub fn generator_frak_d(m: u32, tau: &Simplex, p: u64) -> Result<Self, SequenceError> {
        check_generator_args(m, tau, p)?;
        let p = BigUint::from(p);
        let entries = all_faces(m)
            .into_iter()
            .map(|face| {
                let value = if face == *tau { p.clone() } else { BigUint::one() };
                (face, value)
            })
            .collect();
        Ok(CoefficientSequence { m, entries })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn entries(&self) -> &BTreeMap<Simplex, BigUint> {
        &self.entries
    }

    pub fn value(&self, sigma: &Simplex) -> Result<&BigUint, SequenceError> {
        self.entries
            .get(sigma)
            .ok_or_else(|| SequenceError::ForeignFace { face: sigma.clone(), m: self.m })
    }

    /// Pointwise product `(cd)_sigma = c_sigma d_sigma`.
    pub fn mul(&self, other: &CoefficientSequence) -> Result<CoefficientSequence, SequenceError> {
        if self.m != other.m {
            return Err(SequenceError::MismatchedUniverse { left: self.m, right: other.m });
        }
        let entries = self
            .entries
            .iter()
            .map(|(face, value)| (face.clone(), value * &other.entries[face]))
            .collect();
        Ok(CoefficientSequence { m: self.m, entries })
    }

    /// Factors every `c_sigma = u_sigma * v_sigma` with `u_sigma` a unit of
    /// `ring` (a product of inverted primes), `gcd(u_sigma, v_sigma) = 1`.
    ///
    /// Requires conditions 1-2 to hold. Returns the `v`-table, which is a
    /// valid coefficient sequence over `ring`, together with the unit table.
    /// Over the rationals every prime is inverted, so every `v_sigma` is 1;
    /// that is the expected degenerate outcome, not an error.
    pub fn normalize(
        &self,
        ring: &CoefficientRing,
    ) -> Result<(CoefficientSequence, BTreeMap<Simplex, BigUint>), SequenceError> {
        let structural: Vec<CoefficientViolation> = self
            .violations(&CoefficientRing::integers())
            .into_iter()
            .filter(|v| !matches!(v, CoefficientViolation::UnitFactor { .. }))
            .collect();
        if !structural.is_empty() {
            return Err(SequenceError::CoefficientConditions(structural));
        }
        let mut normalized = BTreeMap::new();
        let mut units = BTreeMap::new();
        for (face, value) in &self.entries {
            let (unit, rest) = ring.unit_split(value);
            normalized.insert(face.clone(), rest);
            units.insert(face.clone(), unit);
        }
        Ok((CoefficientSequence { m: self.m, entries: normalized }, units))
    }
}

impl fmt::Display for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coefficient sequence (m={})", self.m)?;
        for (face, value) in &self.entries {
            writeln!(f, "  {face} -> {value}")?;
        }
        Ok(())
    }
}

fn check_universe(m: u32) -> Result<(), SequenceError> {
    if m == 0 || m > MAX_VERTICES {
        return Err(SequenceError::UniverseSize { m });
    }
    Ok(())
}

fn check_generator_args(m: u32, tau: &Simplex, p: u64) -> Result<(), SequenceError> {
    check_universe(m)?;
    if tau.vertices().iter().any(|&v| v > m) {
        return Err(SequenceError::FaceOutOfRange { face: tau.clone(), m });
    }
    if !is_prime(p) {
        return Err(SequenceError::NotPrime(p));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::fixtures::{cs_table, face, twos_on_big_faces};

    #[test]
    fn the_twos_sequence_is_valid_over_z() {
        let cs = twos_on_big_faces();
        assert!(cs.is_valid(&CoefficientRing::integers()));
        // Inverting 2 breaks condition 3 on every big face.
        let ring2 = CoefficientRing::localized([2]).unwrap();
        let violations = cs.violations(&ring2);
        assert_eq!(violations.len(), 4);
        assert!(violations
            .iter()
            .all(|v| matches!(v, CoefficientViolation::UnitFactor { prime: 2, .. })));
    }

    #[test]
    fn disjoint_divisibility_is_checked() {
        let entries = cs_table(&[
            (&[], 1),
            (&[1], 1),
            (&[2], 1),
            (&[3], 1),
            (&[1, 2], 2),
            (&[1, 3], 1),
            (&[2, 3], 1),
            (&[1, 2, 3], 3),
        ]);
        let err =
            CoefficientSequence::validate(3, entries, &CoefficientRing::integers()).unwrap_err();
        match err {
            SequenceError::CoefficientConditions(violations) => {
                assert!(violations.iter().any(|v| matches!(
                    v,
                    CoefficientViolation::DisjointDivisibility { left, right, .. }
                        if *left == face(&[3]) && *right == face(&[1, 2])
                )));
            }
            other => panic!("expected condition violations, got {other:?}"),
        }
    }

    #[test]
    fn normalization_condition_is_checked() {
        let entries = cs_table(&[(&[], 1), (&[1], 3), (&[2], 1), (&[1, 2], 3)]);
        let err =
            CoefficientSequence::validate(2, entries, &CoefficientRing::integers()).unwrap_err();
        assert!(matches!(err, SequenceError::CoefficientConditions(v)
            if v.iter().any(|x| matches!(x, CoefficientViolation::Normalization { .. }))));
    }

    #[test]
    fn normalize_factors_out_inverted_primes() {
        let entries = cs_table(&[(&[], 1), (&[1], 1), (&[2], 1), (&[1, 2], 12)]);
        let cs = CoefficientSequence::from_entries_unvalidated(2, entries).unwrap();
        let ring = CoefficientRing::localized([2]).unwrap();
        let (normalized, units) = cs.normalize(&ring).unwrap();
        assert_eq!(*normalized.value(&face(&[1, 2])).unwrap(), BigUint::from(3u32));
        assert_eq!(units[&face(&[1, 2])], BigUint::from(4u32));
        assert!(normalized.is_valid(&ring));

        // No inverted primes: identity normalization.
        let (same, units) = cs.normalize(&CoefficientRing::integers()).unwrap();
        assert_eq!(same, cs);
        assert!(units.values().all(|u| u.is_one()));

        // Fully invertible value.
        let entries = cs_table(&[(&[], 1), (&[1], 1), (&[2], 1), (&[1, 2], 8)]);
        let cs = CoefficientSequence::from_entries_unvalidated(2, entries).unwrap();
        let (normalized, units) = cs.normalize(&ring).unwrap();
        assert!(normalized.value(&face(&[1, 2])).unwrap().is_one());
        assert_eq!(units[&face(&[1, 2])], BigUint::from(8u32));

        // Over Q everything is a unit; v is identically one.
        let (trivial, _) = cs.normalize(&CoefficientRing::rationals()).unwrap();
        assert!(trivial.entries().values().all(|v| v.is_one()));
    }

    #[test]
    fn normalize_is_idempotent() {
        let entries = cs_table(&[(&[], 1), (&[1], 1), (&[2], 1), (&[1, 2], 360)]);
        let cs = CoefficientSequence::from_entries_unvalidated(2, entries).unwrap();
        let ring = CoefficientRing::localized([2, 5]).unwrap();
        let (once, _) = cs.normalize(&ring).unwrap();
        let (twice, units) = once.normalize(&ring).unwrap();
        assert_eq!(once, twice);
        assert!(units.values().all(|u| u.is_one()));
    }

    #[test]
    fn generators_and_monoid_product() {
        let tau = face(&[1, 2]);
        let fc = CoefficientSequence::generator_frak_c(3, &tau, 5).unwrap();
        assert_eq!(*fc.value(&face(&[1, 2])).unwrap(), BigUint::from(5u32));
        assert_eq!(*fc.value(&face(&[1, 2, 3])).unwrap(), BigUint::from(5u32));
        assert!(fc.value(&face(&[1, 3])).unwrap().is_one());

        let fd = CoefficientSequence::generator_frak_d(3, &tau, 5).unwrap();
        assert_eq!(*fd.value(&face(&[1, 2])).unwrap(), BigUint::from(5u32));
        assert!(fd.value(&face(&[1, 2, 3])).unwrap().is_one());
        // frak_d breaks condition 2 upward, as expected of a lattice generator.
        assert!(!fd.is_valid(&CoefficientRing::integers()));

        // Pointwise product: p^2 on tau, p on proper superfaces.
        let product = fc.mul(&fd).unwrap();
        assert_eq!(*product.value(&face(&[1, 2])).unwrap(), BigUint::from(25u32));
        assert_eq!(*product.value(&face(&[1, 2, 3])).unwrap(), BigUint::from(5u32));

        let ones = CoefficientSequence::all_ones(3).unwrap();
        assert_eq!(fc.mul(&ones).unwrap(), fc);
    }

    #[test]
    fn degenerate_universe_m1() {
        let only = CoefficientSequence::all_ones(1).unwrap();
        assert!(only.is_valid(&CoefficientRing::integers()));
        assert!(only.is_valid(&CoefficientRing::rationals()));
        let (normalized, _) = only.normalize(&CoefficientRing::rationals()).unwrap();
        assert_eq!(normalized, only);
    }
}
