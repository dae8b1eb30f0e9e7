//! Deciding membership in the image of `Phi`.
//!
//! Given a coefficient sequence, a preimage power sequence must place an
//! ordered factorization of `c_sigma` on the support of each face `sigma`,
//! compatibly with the divisibility invariant. Every candidate entry divides
//! `c_sigma`, so the search space per face is the finite set of ordered
//! factorizations and exhausting it is a completeness certificate.
//!
//! Faces are processed in (cardinality, lexicographic) order and the ordered
//! factorizations of each face value are enumerated in lexicographic order
//! of their per-slot prime-exponent tuples, so the first witness found is
//! the minimum in that order; reruns are byte-identical.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::ring::{factorize, is_prime, lcm_biguint};
use super::{CoefficientRing, CoefficientSequence, CoefficientViolation, PowerSequence, SequenceError};
use crate::complex::{all_faces, Simplex};

/// Result of a completed preimage search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PreimageOutcome {
    /// A power sequence `c` with `Phi(c)` equal to the query.
    Witness(PowerSequence),
    /// The whole candidate space was exhausted: certified no preimage.
    Exhausted { candidates_examined: u64 },
}

impl PreimageOutcome {
    pub fn witness(&self) -> Option<&PowerSequence> {
        match self {
            PreimageOutcome::Witness(ps) => Some(ps),
            PreimageOutcome::Exhausted { .. } => None,
        }
    }

    pub fn is_certified_none(&self) -> bool {
        matches!(self, PreimageOutcome::Exhausted { .. })
    }
}

/// Searches for a power sequence `c` in `PS` with `Phi(c) = cs`.
///
/// Requires conditions 1 and 2 of a coefficient sequence (condition 3 plays
/// no role: the search runs over the integers). Returns the first witness in
/// the documented deterministic order, or a certified none after complete
/// exhaustion.
pub fn phi_preimage_search(cs: &CoefficientSequence) -> Result<PreimageOutcome, SequenceError> {
    let structural: Vec<CoefficientViolation> = cs
        .violations(&CoefficientRing::integers())
        .into_iter()
        .filter(|v| !matches!(v, CoefficientViolation::UnitFactor { .. }))
        .collect();
    if !structural.is_empty() {
        return Err(SequenceError::CoefficientConditions(structural));
    }

    let m = cs.m();
    // Rows for the empty face and the vertices are forced to all-ones by
    // condition 1 plus the PS normalization.
    let mut assignment: BTreeMap<Simplex, Vec<BigUint>> = all_faces(m)
        .into_iter()
        .filter(|f| f.len() <= 1)
        .map(|f| (f, vec![BigUint::one(); m as usize]))
        .collect();
    let open_faces: Vec<Simplex> =
        all_faces(m).into_iter().filter(|f| f.len() >= 2).collect();

    let mut examined = 0u64;
    if search_faces(cs, &open_faces, 0, &mut assignment, &mut examined) {
        let table = assignment;
        let witness = PowerSequence::validate(m, table)?;
        Ok(PreimageOutcome::Witness(witness))
    } else {
        Ok(PreimageOutcome::Exhausted { candidates_examined: examined })
    }
}

fn search_faces(
    cs: &CoefficientSequence,
    faces: &[Simplex],
    at: usize,
    assignment: &mut BTreeMap<Simplex, Vec<BigUint>>,
    examined: &mut u64,
) -> bool {
    let Some(sigma) = faces.get(at) else {
        return true;
    };
    let target = cs.entries()[sigma].clone();
    // Each slot value must be a multiple of every already-assigned value at
    // the same vertex on a cover subface.
    let floors: Vec<BigUint> = sigma
        .vertices()
        .iter()
        .map(|&i| {
            sigma
                .vertices()
                .iter()
                .filter(|&&v| v != i)
                .map(|&v| {
                    let cover = sigma.difference(&Simplex::vertex(v));
                    assignment[&cover][i as usize - 1].clone()
                })
                .fold(BigUint::one(), |acc, x| lcm_biguint(&acc, &x))
        })
        .collect();

    let mut found = false;
    for_each_ordered_factorization(&target, sigma.len(), &floors, &mut |slots| {
        *examined += 1;
        let mut row = vec![BigUint::one(); cs.m() as usize];
        for (pos, &i) in sigma.vertices().iter().enumerate() {
            row[i as usize - 1] = slots[pos].clone();
        }
        assignment.insert(sigma.clone(), row);
        if search_faces(cs, faces, at + 1, assignment, examined) {
            found = true;
        } else {
            assignment.remove(sigma);
        }
        found
    });
    found
}

/// Enumerates ordered factorizations `(v_1, ..., v_k)` of `n` with
/// `floors[i] | v_i`, in lexicographic order of the per-slot prime-exponent
/// tuples (primes ascending, slots major). `visit` returns `true` to stop.
fn for_each_ordered_factorization(
    n: &BigUint,
    slots: usize,
    floors: &[BigUint],
    visit: &mut impl FnMut(&[BigUint]) -> bool,
) {
    let factors = factorize(n);
    let mut remaining: Vec<u32> = factors.iter().map(|(_, e)| *e).collect();
    let mut chosen: Vec<BigUint> = Vec::with_capacity(slots);
    fill_slot(&factors, &mut remaining, slots, floors, &mut chosen, visit);
}

fn fill_slot(
    factors: &[(BigUint, u32)],
    remaining: &mut Vec<u32>,
    slots: usize,
    floors: &[BigUint],
    chosen: &mut Vec<BigUint>,
    visit: &mut impl FnMut(&[BigUint]) -> bool,
) -> bool {
    let at = chosen.len();
    if at == slots {
        return visit(chosen);
    }
    if at + 1 == slots {
        // Last slot takes every remaining factor.
        let value = factors
            .iter()
            .zip(remaining.iter())
            .fold(BigUint::one(), |acc, ((p, _), &e)| acc * p.pow(e));
        if !(&value % &floors[at]).is_zero() {
            return false;
        }
        chosen.push(value);
        let stop = visit(chosen);
        chosen.pop();
        return stop;
    }
    // Enumerate this slot's exponent tuple lexicographically.
    let mut exponents = vec![0u32; factors.len()];
    loop {
        let value = factors
            .iter()
            .zip(exponents.iter())
            .fold(BigUint::one(), |acc, ((p, _), &e)| acc * p.pow(e));
        if (&value % &floors[at]).is_zero() {
            for (r, e) in remaining.iter_mut().zip(exponents.iter()) {
                *r -= e;
            }
            chosen.push(value);
            let stop = fill_slot(factors, remaining, slots, floors, chosen, visit);
            chosen.pop();
            for (r, e) in remaining.iter_mut().zip(exponents.iter()) {
                *r += e;
            }
            if stop {
                return true;
            }
        }
        // Next exponent tuple, lex order with per-prime caps.
        let mut k = factors.len();
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            if exponents[k] < remaining[k] {
                exponents[k] += 1;
                for e in exponents.iter_mut().skip(k + 1) {
                    *e = 0;
                }
                break;
            }
        }
    }
}

/// Exhaustively enumerates the image of `Phi` over all valid `PS(p)` tables
/// whose entries lie in `{1, p, ..., p^max_exponent}`.
///
/// Practical bounds are `m <= 4` and `max_exponent <= 2`; beyond that the
/// call refuses with a size estimate.
pub fn enumerate_phi_image(
    m: u32,
    p: u64,
    max_exponent: u32,
) -> Result<BTreeSet<CoefficientSequence>, SequenceError> {
    if m == 0 || m > crate::complex::MAX_VERTICES {
        return Err(SequenceError::UniverseSize { m });
    }
    if !is_prime(p) {
        return Err(SequenceError::NotPrime(p));
    }
    if m > 4 || max_exponent > 2 {
        let slot_count: u32 = all_faces(m)
            .iter()
            .filter(|f| f.len() >= 2)
            .map(|f| f.len() as u32)
            .sum();
        let estimate = BigUint::from(max_exponent as u64 + 1).pow(slot_count);
        return Err(SequenceError::EnumerationTooLarge {
            m,
            max_exponent,
            estimate: estimate.to_string(),
        });
    }

    // Work on exponent tables: slot (face, vertex-in-face) -> exponent.
    let faces: Vec<Simplex> = all_faces(m).into_iter().filter(|f| f.len() >= 2).collect();
    let face_index: BTreeMap<Simplex, usize> =
        faces.iter().cloned().enumerate().map(|(k, f)| (f, k)).collect();
    // covers[f][slot] = indices of (face, slot) pairs one cardinality down.
    let covers: Vec<Vec<Vec<(usize, usize)>>> = faces
        .iter()
        .map(|sigma| {
            sigma
                .vertices()
                .iter()
                .map(|&i| {
                    sigma
                        .vertices()
                        .iter()
                        .filter(|&&v| v != i)
                        .filter_map(|&v| {
                            let cover = sigma.difference(&Simplex::vertex(v));
                            face_index.get(&cover).map(|&fk| {
                                let pos = cover
                                    .vertices()
                                    .iter()
                                    .position(|&w| w == i)
                                    .expect("vertex stays in the cover");
                                (fk, pos)
                            })
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut exponents: Vec<Vec<u32>> = faces.iter().map(|f| vec![0; f.len()]).collect();
    let mut image_sums: BTreeSet<Vec<u32>> = BTreeSet::new();
    enumerate_tables(
        &faces,
        &covers,
        max_exponent,
        0,
        0,
        &mut exponents,
        &mut image_sums,
    );

    let p_big = BigUint::from(p);
    let out = image_sums
        .into_iter()
        .map(|sums| {
            let mut entries: BTreeMap<Simplex, BigUint> =
                all_faces(m).into_iter().map(|f| (f, BigUint::one())).collect();
            for (face, s) in faces.iter().zip(sums) {
                entries.insert(face.clone(), p_big.pow(s));
            }
            CoefficientSequence::from_parts(m, entries)
        })
        .collect();
    Ok(out)
}

fn enumerate_tables(
    faces: &[Simplex],
    covers: &[Vec<Vec<(usize, usize)>>],
    max_exponent: u32,
    face_at: usize,
    slot_at: usize,
    exponents: &mut Vec<Vec<u32>>,
    image_sums: &mut BTreeSet<Vec<u32>>,
) {
    if face_at == faces.len() {
        let sums: Vec<u32> = exponents.iter().map(|row| row.iter().sum()).collect();
        image_sums.insert(sums);
        return;
    }
    if slot_at == faces[face_at].len() {
        enumerate_tables(faces, covers, max_exponent, face_at + 1, 0, exponents, image_sums);
        return;
    }
    let floor = covers[face_at][slot_at]
        .iter()
        .map(|&(fk, pos)| exponents[fk][pos])
        .max()
        .unwrap_or(0);
    for e in floor..=max_exponent {
        exponents[face_at][slot_at] = e;
        enumerate_tables(faces, covers, max_exponent, face_at, slot_at + 1, exponents, image_sums);
    }
    exponents[face_at][slot_at] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::fixtures::{cs_table, face, phi_collision_pair, twos_on_big_faces, urow};

    #[test]
    fn the_twos_sequence_has_no_preimage() {
        let outcome = phi_preimage_search(&twos_on_big_faces()).unwrap();
        assert!(outcome.is_certified_none());
    }

    #[test]
    fn m2_values_always_split() {
        for n in 1..=100u64 {
            let entries = cs_table(&[(&[], 1), (&[1], 1), (&[2], 1), (&[1, 2], n)]);
            let cs = CoefficientSequence::from_entries_unvalidated(2, entries).unwrap();
            let outcome = phi_preimage_search(&cs).unwrap();
            let witness = outcome.witness().expect("every m=2 value factors");
            let row = witness.row(&face(&[1, 2])).unwrap();
            assert_eq!(&row[0] * &row[1], BigUint::from(n));
            assert_eq!(witness.phi().unwrap(), cs);
        }
    }

    #[test]
    fn collision_image_has_a_witness() {
        let (c, c_bar) = phi_collision_pair(7);
        assert_ne!(c, c_bar);
        let image = c.phi().unwrap();
        assert_eq!(image, c_bar.phi().unwrap());
        let outcome = phi_preimage_search(&image).unwrap();
        let witness = outcome.witness().expect("the image is realizable by construction");
        assert_eq!(witness.phi().unwrap(), image);
        assert!(witness.is_valid());
        assert!(witness.is_normalized());
    }

    #[test]
    fn witness_is_deterministic_and_minimal() {
        let entries = cs_table(&[(&[], 1), (&[1], 1), (&[2], 1), (&[1, 2], 6)]);
        let cs = CoefficientSequence::from_entries_unvalidated(2, entries).unwrap();
        let a = phi_preimage_search(&cs).unwrap();
        let b = phi_preimage_search(&cs).unwrap();
        assert_eq!(a, b);
        // Exponent-lex order on (2,3)-splits of 6 puts (1,6) first.
        assert_eq!(a.witness().unwrap().row(&face(&[1, 2])).unwrap(), urow(&[1, 6]).as_slice());
    }

    #[test]
    fn invalid_queries_are_rejected() {
        let entries = cs_table(&[(&[], 1), (&[1], 1), (&[2], 1), (&[1, 2], 2), (&[1, 3], 1), (&[2, 3], 1), (&[3], 1), (&[1, 2, 3], 3)]);
        let cs = CoefficientSequence::from_entries_unvalidated(3, entries).unwrap();
        assert!(matches!(
            phi_preimage_search(&cs),
            Err(SequenceError::CoefficientConditions(_))
        ));
    }

    #[test]
    fn image_enumeration_m2() {
        // Four candidate tables (alpha, beta) in {1,2}^2 give products 1, 2, 4.
        let image = enumerate_phi_image(2, 2, 1).unwrap();
        let values: Vec<u64> = image
            .iter()
            .map(|cs| u64::try_from(cs.value(&face(&[1, 2])).unwrap()).unwrap())
            .collect();
        assert_eq!(values, vec![1, 2, 4]);
        assert!(values.contains(&1) && values.contains(&2));
    }

    #[test]
    fn image_enumeration_excludes_the_twos_sequence() {
        let image = enumerate_phi_image(3, 2, 1).unwrap();
        assert!(image.contains(&CoefficientSequence::all_ones(3).unwrap()));
        assert!(!image.contains(&twos_on_big_faces()));
        // Every enumerated point really is in the image.
        for cs in &image {
            let outcome = phi_preimage_search(cs).unwrap();
            assert!(outcome.witness().is_some());
        }
    }

    #[test]
    fn enumeration_bounds_are_enforced() {
        let err = enumerate_phi_image(5, 2, 1).unwrap_err();
        assert!(matches!(err, SequenceError::EnumerationTooLarge { m: 5, .. }));
        let err = enumerate_phi_image(3, 2, 3).unwrap_err();
        assert!(matches!(err, SequenceError::EnumerationTooLarge { max_exponent: 3, .. }));
    }

    #[test]
    fn round_trip_on_random_style_tables() {
        // Deterministic sweep standing in for random tables: minimal bases.
        for base in [[1u64, 1, 1], [2, 3, 5], [4, 2, 1], [6, 6, 6]] {
            let mut entries = std::collections::BTreeMap::new();
            for f in all_faces(3) {
                let row: Vec<BigUint> = (1..=3u32)
                    .map(|i| {
                        if f.contains(i) && f.len() >= 2 {
                            BigUint::from(base[i as usize - 1])
                        } else {
                            BigUint::one()
                        }
                    })
                    .collect();
                entries.insert(f, row);
            }
            let ps = PowerSequence::validate(3, entries).unwrap();
            let image = ps.phi().unwrap();
            let outcome = phi_preimage_search(&image).unwrap();
            let witness = outcome.witness().expect("image point must be realizable");
            assert_eq!(witness.phi().unwrap(), image);
        }
    }
}
