//! Power sequences: per-face vectors `(c_1^sigma, ..., c_m^sigma)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ring::is_prime;
use super::{CoefficientSequence, SequenceError};
use crate::complex::{all_faces, Simplex, MAX_VERTICES};

/// A single failed power-sequence invariant, naming the offending entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PowerViolation {
    /// `c_i^sigma != 1` for a vertex `i` outside `sigma`.
    OffSupport { face: Simplex, vertex: u32, value: BigUint },
    /// `c_i^tau` does not divide `c_i^sigma` for `tau` a cover-subface of `sigma`.
    Divisibility {
        tau: Simplex,
        sigma: Simplex,
        vertex: u32,
        tau_value: BigUint,
        sigma_value: BigUint,
    },
}

impl fmt::Display for PowerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerViolation::OffSupport { face, vertex, value } => {
                write!(f, "c_{vertex}^{face} = {value} but {vertex} is not in {face}")
            }
            PowerViolation::Divisibility { tau, sigma, vertex, tau_value, sigma_value } => {
                write!(
                    f,
                    "c_{vertex}^{tau} = {tau_value} does not divide c_{vertex}^{sigma} = {sigma_value}"
                )
            }
        }
    }
}

/// A table `sigma -> (c_1^sigma, ..., c_m^sigma)` over all `2^m` faces of
/// `Delta^{m-1}`.
///
/// A *valid* power sequence additionally satisfies `c_i^sigma = 1` for
/// `i` outside `sigma` and `c_i^tau | c_i^sigma` for `tau` a subface of
/// `sigma`. Validity is established by [`PowerSequence::validate`] and can be
/// re-checked with [`PowerSequence::violations`]; the distinguished
/// group-completion generators [`PowerSequence::generator_d`] (and
/// [`PowerSequence::generator_c`] with `j` outside `tau`) deliberately break
/// these invariants, matching their role as lattice elements rather than
/// members of the power-sequence monoid.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PowerSequence {
    m: u32,
    entries: BTreeMap<Simplex, Vec<BigUint>>,
}

impl PowerSequence {
    /// Accepts a raw table after checking structure only: full face coverage,
    /// arity `m` per entry, and strictly positive values. The two
    /// power-sequence invariants are *not* checked here.
    pub fn from_entries_unvalidated(
        m: u32,
        entries: BTreeMap<Simplex, Vec<BigUint>>,
    ) -> Result<Self, SequenceError> {
        check_universe(m)?;
        for face in entries.keys() {
            if face.vertices().iter().any(|&v| v > m) {
                return Err(SequenceError::ForeignFace { face: face.clone(), m });
            }
        }
        for face in all_faces(m) {
            let row = entries
                .get(&face)
                .ok_or_else(|| SequenceError::MissingFace { face: face.clone() })?;
            if row.len() != m as usize {
                return Err(SequenceError::WrongArity { face, got: row.len(), m });
            }
            if let Some(pos) = row.iter().position(|x| x.is_zero()) {
                return Err(SequenceError::NonPositiveEntry { face, vertex: pos as u32 + 1 });
            }
        }
        Ok(PowerSequence { m, entries })
    }

    /// Accepts a raw table iff both power-sequence invariants hold; otherwise
    /// returns the full violation list naming each offending `(tau, sigma, i)`.
    pub fn validate(
        m: u32,
        entries: BTreeMap<Simplex, Vec<BigUint>>,
    ) -> Result<Self, SequenceError> {
        let ps = Self::from_entries_unvalidated(m, entries)?;
        let violations = ps.violations();
        if violations.is_empty() {
            Ok(ps)
        } else {
            Err(SequenceError::PowerInvariants(violations))
        }
    }

    /// Re-checks the two invariants. Divisibility is checked on cover pairs
    /// `tau = sigma - {v}`, which implies it for all subface pairs.
    pub fn violations(&self) -> Vec<PowerViolation> {
        let mut out = Vec::new();
        for (face, row) in &self.entries {
            for (pos, value) in row.iter().enumerate() {
                let vertex = pos as u32 + 1;
                if !face.contains(vertex) && !value.is_one() {
                    out.push(PowerViolation::OffSupport {
                        face: face.clone(),
                        vertex,
                        value: value.clone(),
                    });
                }
            }
        }
        for (sigma, row) in &self.entries {
            for &dropped in sigma.vertices() {
                let tau = sigma.difference(&Simplex::vertex(dropped));
                let tau_row = &self.entries[&tau];
                for pos in 0..self.m as usize {
                    if !(&row[pos] % &tau_row[pos]).is_zero() {
                        out.push(PowerViolation::Divisibility {
                            tau: tau.clone(),
                            sigma: sigma.clone(),
                            vertex: pos as u32 + 1,
                            tau_value: tau_row[pos].clone(),
                            sigma_value: row[pos].clone(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// The minimal power sequence: `c_i^sigma = base_i` for `i` in `sigma`,
    /// `1` otherwise.
    pub fn minimal(m: u32, base: &[BigUint]) -> Result<Self, SequenceError> {
        check_universe(m)?;
        if base.len() != m as usize {
            return Err(SequenceError::WrongArity {
                face: Simplex::empty(),
                got: base.len(),
                m,
            });
        }
        if let Some(pos) = base.iter().position(|x| x.is_zero()) {
            return Err(SequenceError::NonPositiveEntry {
                face: Simplex::vertex(pos as u32 + 1),
                vertex: pos as u32 + 1,
            });
        }
        let entries = all_faces(m)
            .into_iter()
            .map(|face| {
                let row = (1..=m)
                    .map(|i| if face.contains(i) { base[i as usize - 1].clone() } else { BigUint::one() })
                    .collect();
                (face, row)
            })
            .collect();
        Ok(PowerSequence { m, entries })
    }

    /// The identity of the monoid: every entry is `1`.
    pub fn all_ones(m: u32) -> Result<Self, SequenceError> {
        let ones = vec![BigUint::one(); m as usize];
        Self::minimal(m, &ones)
    }

    /// The generator `c(tau, j)`: entry `p` at `(sigma, j)` for every face
    /// `sigma` containing `tau`, and `1` elsewhere.
    ///
    /// For `j` in `tau` this is a valid power sequence; for `j` outside `tau`
    /// the off-support invariant fails at faces `sigma` with `j` not in
    /// `sigma` (the divisibility chains still hold). Either way the table is
    /// a legitimate element of the exponent lattice.
    pub fn generator_c(m: u32, tau: &Simplex, j: u32, p: u64) -> Result<Self, SequenceError> {
        check_generator_args(m, tau, j, p)?;
        let p = BigUint::from(p);
        let entries = all_faces(m)
            .into_iter()
            .map(|face| {
                let hit = tau.is_subset_of(&face);
                let row = (1..=m)
                    .map(|i| if i == j && hit { p.clone() } else { BigUint::one() })
                    .collect();
                (face, row)
            })
            .collect();
        Ok(PowerSequence { m, entries })
    }

    /// The generator `d(tau, j)`: entry `p` at `(tau, j)` only.
    ///
    /// Unless `tau` is the top face, this table breaks the divisibility
    /// invariant (by design: the `d` generators live in the group completion,
    /// not the monoid).
    pub fn generator_d(m: u32, tau: &Simplex, j: u32, p: u64) -> Result<Self, SequenceError> {
        check_generator_args(m, tau, j, p)?;
        let p = BigUint::from(p);
        let entries = all_faces(m)
            .into_iter()
            .map(|face| {
                let hit = face == *tau;
                let row = (1..=m)
                    .map(|i| if i == j && hit { p.clone() } else { BigUint::one() })
                    .collect();
                (face, row)
            })
            .collect();
        Ok(PowerSequence { m, entries })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn entries(&self) -> &BTreeMap<Simplex, Vec<BigUint>> {
        &self.entries
    }

    /// The row `(c_1^sigma, ..., c_m^sigma)`.
    pub fn row(&self, sigma: &Simplex) -> Result<&[BigUint], SequenceError> {
        self.entries
            .get(sigma)
            .map(Vec::as_slice)
            .ok_or_else(|| SequenceError::ForeignFace { face: sigma.clone(), m: self.m })
    }

    /// The single entry `c_i^sigma`.
    pub fn value(&self, sigma: &Simplex, i: u32) -> Result<&BigUint, SequenceError> {
        if i == 0 || i > self.m {
            return Err(SequenceError::VertexOutOfRange { vertex: i, m: self.m });
        }
        Ok(&self.row(sigma)?[i as usize - 1])
    }

    /// The ratio vector `c^{sigma/tau} = (c_1^sigma / c_1^tau, ...)` for
    /// `tau` a subface of `sigma`; each component is an exact quotient.
    pub fn ratio(&self, tau: &Simplex, sigma: &Simplex) -> Result<Vec<BigUint>, SequenceError> {
        if !tau.is_subset_of(sigma) {
            return Err(SequenceError::NotASubface { tau: tau.clone(), sigma: sigma.clone() });
        }
        let top = self.row(sigma)?.to_vec();
        let bottom = self.row(tau)?;
        let mut out = Vec::with_capacity(self.m as usize);
        for (pos, (a, b)) in top.iter().zip(bottom).enumerate() {
            let (q, r) = a.div_rem(b);
            if !r.is_zero() {
                return Err(SequenceError::PowerInvariants(vec![PowerViolation::Divisibility {
                    tau: tau.clone(),
                    sigma: sigma.clone(),
                    vertex: pos as u32 + 1,
                    tau_value: b.clone(),
                    sigma_value: a.clone(),
                }]));
            }
            out.push(q);
        }
        Ok(out)
    }

    /// Membership in `PS`: `c_i^{{i}} = 1` for every vertex.
    pub fn is_normalized(&self) -> bool {
        (1..=self.m).all(|i| {
            self.entries[&Simplex::vertex(i)][i as usize - 1].is_one()
        })
    }

    /// Pointwise product `(cd)_i^sigma = c_i^sigma d_i^sigma`.
    pub fn mul(&self, other: &PowerSequence) -> Result<PowerSequence, SequenceError> {
        if self.m != other.m {
            return Err(SequenceError::MismatchedUniverse { left: self.m, right: other.m });
        }
        let entries = self
            .entries
            .iter()
            .map(|(face, row)| {
                let other_row = &other.entries[face];
                let product = row.iter().zip(other_row).map(|(a, b)| a * b).collect();
                (face.clone(), product)
            })
            .collect();
        Ok(PowerSequence { m: self.m, entries })
    }

    /// The map `Phi`: `Phi(c)_sigma = prod_{i in sigma} c_i^sigma`, defined
    /// on members of `PS` (requires `c_i^{{i}} = 1`; the offending vertex is
    /// reported otherwise).
    pub fn phi(&self) -> Result<CoefficientSequence, SequenceError> {
        for i in 1..=self.m {
            let value = &self.entries[&Simplex::vertex(i)][i as usize - 1];
            if !value.is_one() {
                return Err(SequenceError::NotNormalized { vertex: i, value: value.clone() });
            }
        }
        Ok(self.phi_table())
    }

    /// The raw table-level product `sigma -> prod_{i in [m]} c_i^sigma`,
    /// with no normalization check.
    ///
    /// On tables satisfying the off-support invariant this equals the
    /// product over `i in sigma`; taking the full product extends `Phi` to
    /// the generator tables `c(tau, j)` and `d(tau, j)` with `j` outside
    /// `tau`, where it is the lattice-level map.
    pub fn phi_table(&self) -> CoefficientSequence {
        let entries = self
            .entries
            .iter()
            .map(|(face, row)| {
                let product = row.iter().fold(BigUint::one(), |acc, x| acc * x);
                (face.clone(), product)
            })
            .collect();
        CoefficientSequence::from_parts(self.m, entries)
    }
}

impl fmt::Display for PowerSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "power sequence (m={})", self.m)?;
        for (face, row) in &self.entries {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {face} -> ({})", parts.join(","))?;
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

fn check_generator_args(m: u32, tau: &Simplex, j: u32, p: u64) -> Result<(), SequenceError> {
    check_universe(m)?;
    if tau.vertices().iter().any(|&v| v > m) {
        return Err(SequenceError::FaceOutOfRange { face: tau.clone(), m });
    }
    if j == 0 || j > m {
        return Err(SequenceError::VertexOutOfRange { vertex: j, m });
    }
    if !is_prime(p) {
        return Err(SequenceError::NotPrime(p));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::fixtures::{face, minimal_235, non_minimal_235, table, urow};

    #[test]
    fn minimal_reproduces_the_worked_table() {
        let ps = minimal_235();
        assert_eq!(ps.row(&face(&[1])).unwrap(), urow(&[2, 1, 1]).as_slice());
        assert_eq!(ps.row(&face(&[2])).unwrap(), urow(&[1, 3, 1]).as_slice());
        assert_eq!(ps.row(&face(&[3])).unwrap(), urow(&[1, 1, 5]).as_slice());
        assert_eq!(ps.row(&face(&[1, 2])).unwrap(), urow(&[2, 3, 1]).as_slice());
        assert_eq!(ps.row(&face(&[1, 3])).unwrap(), urow(&[2, 1, 5]).as_slice());
        assert_eq!(ps.row(&face(&[2, 3])).unwrap(), urow(&[1, 3, 5]).as_slice());
        assert_eq!(ps.row(&face(&[1, 2, 3])).unwrap(), urow(&[2, 3, 5]).as_slice());
        assert!(ps.is_valid());
        assert!(!ps.is_normalized());

        let ones = PowerSequence::all_ones(3).unwrap();
        assert!(ones.is_valid());
        assert!(ones.is_normalized());

        let two_gen = PowerSequence::minimal(2, &urow(&[4, 6])).unwrap();
        assert_eq!(two_gen.row(&face(&[1, 2])).unwrap(), urow(&[4, 6]).as_slice());
    }

    #[test]
    fn validation_accepts_both_worked_tables() {
        let minimal = minimal_235();
        assert!(PowerSequence::validate(3, minimal.entries().clone()).is_ok());
        let rescaled = non_minimal_235();
        assert!(rescaled.is_valid());
    }

    #[test]
    fn validation_reports_broken_divisibility() {
        let mut entries = minimal_235().entries().clone();
        // c_1^{(1,2)} = 3 cannot be a multiple of c_1^{{1}} = 2.
        entries.insert(face(&[1, 2]), vec![3u64.into(), 3u64.into(), 1u64.into()]);
        let err = PowerSequence::validate(3, entries).unwrap_err();
        match err {
            SequenceError::PowerInvariants(violations) => {
                assert!(violations.iter().any(|v| matches!(
                    v,
                    PowerViolation::Divisibility { tau, sigma, vertex: 1, .. }
                        if *tau == face(&[1]) && *sigma == face(&[1, 2])
                )));
            }
            other => panic!("expected invariant violations, got {other:?}"),
        }
    }

    #[test]
    fn validation_reports_structural_errors() {
        let mut entries = minimal_235().entries().clone();
        entries.remove(&face(&[2, 3]));
        assert_eq!(
            PowerSequence::validate(3, entries),
            Err(SequenceError::MissingFace { face: face(&[2, 3]) })
        );

        let mut entries = minimal_235().entries().clone();
        entries.insert(face(&[3]), vec![1u64.into(), 1u64.into(), 0u64.into()]);
        assert_eq!(
            PowerSequence::validate(3, entries),
            Err(SequenceError::NonPositiveEntry { face: face(&[3]), vertex: 3 })
        );
    }

    #[test]
    fn ratio_of_worked_tables() {
        let minimal = minimal_235();
        let sigma = face(&[1, 2, 3]);
        let tau = face(&[1, 3]);
        assert_eq!(
            minimal.ratio(&tau, &sigma).unwrap(),
            vec![1u64.into(), 3u64.into(), 1u64.into()]
        );
        // With the rescaled rows the third component picks up the factor
        // t*s = 6, by exact division of the table entries.
        let rescaled = non_minimal_235();
        assert_eq!(
            rescaled.ratio(&tau, &sigma).unwrap(),
            vec![1u64.into(), 3u64.into(), 6u64.into()]
        );
        assert_eq!(
            minimal.ratio(&sigma, &sigma).unwrap(),
            vec![1u64.into(), 1u64.into(), 1u64.into()]
        );
        assert!(matches!(
            minimal.ratio(&face(&[1, 2]), &face(&[1, 3])),
            Err(SequenceError::NotASubface { .. })
        ));
    }

    #[test]
    fn ratio_composes_along_chains() {
        let rescaled = non_minimal_235();
        let mu = face(&[1]);
        let tau = face(&[1, 3]);
        let sigma = face(&[1, 2, 3]);
        let upper = rescaled.ratio(&tau, &sigma).unwrap();
        let lower = rescaled.ratio(&mu, &tau).unwrap();
        let direct = rescaled.ratio(&mu, &sigma).unwrap();
        let composed: Vec<BigUint> = upper.iter().zip(&lower).map(|(a, b)| a * b).collect();
        assert_eq!(composed, direct);
    }

    #[test]
    fn phi_requires_normalization() {
        let minimal = minimal_235();
        assert_eq!(
            minimal.phi().unwrap_err(),
            SequenceError::NotNormalized { vertex: 1, value: 2u64.into() }
        );
        let ones = PowerSequence::all_ones(3).unwrap();
        let image = ones.phi().unwrap();
        assert!(image.entries().values().all(|x| x.is_one()));
    }

    #[test]
    fn phi_of_the_non_injectivity_table() {
        let p = 7u64;
        let entries = table(
            3,
            &[
                (&[], &[1, 1, 1]),
                (&[1], &[1, 1, 1]),
                (&[2], &[1, 1, 1]),
                (&[3], &[1, 1, 1]),
                (&[1, 2], &[p, 1, 1]),
                (&[1, 3], &[p, 1, 1]),
                (&[2, 3], &[1, p, 1]),
                (&[1, 2, 3], &[p, p, 1]),
            ],
        );
        let ps = PowerSequence::validate(3, entries).unwrap();
        let image = ps.phi().unwrap();
        assert_eq!(*image.value(&face(&[1])).unwrap(), BigUint::one());
        assert_eq!(*image.value(&face(&[1, 2])).unwrap(), BigUint::from(p));
        assert_eq!(*image.value(&face(&[2, 3])).unwrap(), BigUint::from(p));
        assert_eq!(*image.value(&face(&[1, 2, 3])).unwrap(), BigUint::from(p * p));
    }

    #[test]
    fn generators_have_the_displayed_tables() {
        let tau = face(&[1, 2]);
        let c = PowerSequence::generator_c(3, &tau, 1, 2).unwrap();
        assert_eq!(c.row(&face(&[1, 2])).unwrap(), urow(&[2, 1, 1]).as_slice());
        assert_eq!(c.row(&face(&[1, 2, 3])).unwrap(), urow(&[2, 1, 1]).as_slice());
        assert_eq!(c.row(&face(&[1, 3])).unwrap(), urow(&[1, 1, 1]).as_slice());
        assert!(c.is_valid());
        assert!(c.is_normalized());

        let d = PowerSequence::generator_d(3, &tau, 1, 2).unwrap();
        assert_eq!(d.row(&face(&[1, 2])).unwrap(), urow(&[2, 1, 1]).as_slice());
        assert_eq!(d.row(&face(&[1, 2, 3])).unwrap(), urow(&[1, 1, 1]).as_slice());
        // d(tau, j) lives in the group completion: divisibility fails upward.
        assert!(!d.is_valid());
    }

    #[test]
    fn generator_c_off_tau_keeps_divisibility_chains() {
        let tau = face(&[1]);
        let c = PowerSequence::generator_c(3, &tau, 2, 5).unwrap();
        let violations = c.violations();
        assert!(violations
            .iter()
            .all(|v| matches!(v, PowerViolation::OffSupport { vertex: 2, .. })));
        assert!(!violations.is_empty());
    }

    #[test]
    fn monoid_multiplication() {
        let a = non_minimal_235();
        let ones = PowerSequence::all_ones(3).unwrap();
        assert_eq!(a.mul(&ones).unwrap(), a);

        let tau = face(&[1, 2]);
        let c = PowerSequence::generator_c(3, &tau, 1, 3).unwrap();
        let squared = c.mul(&c).unwrap();
        assert_eq!(*squared.value(&face(&[1, 2, 3]), 1).unwrap(), BigUint::from(9u64));
        assert_eq!(*squared.value(&face(&[1, 3]), 1).unwrap(), BigUint::one());

        let b = PowerSequence::all_ones(2).unwrap();
        assert!(matches!(
            a.mul(&b),
            Err(SequenceError::MismatchedUniverse { left: 3, right: 2 })
        ));
    }
}
