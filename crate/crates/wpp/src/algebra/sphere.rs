//! The weighted sphere product algebra `A(c)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::table::StructureTable;
use super::{koszul_merge_sign, AlgebraError};
use crate::complex::{all_faces, Simplex};
use crate::sequences::{CoefficientRing, CoefficientSequence};

/// Free module on `{a_sigma : sigma ⊆ [m]}` with `|a_sigma| = sum_{i} d_i`
/// and multiplication `a_sigma a_omega = ± (c_{sigma ∪ omega} / (c_sigma
/// c_omega)) a_{sigma ∪ omega}` on disjoint faces, zero otherwise.
///
/// The binary coefficient comes from expanding both sides of
/// `prod_{i in sigma} a_{{i}} = c_sigma a_sigma`; disjoint-union
/// divisibility of the coefficient sequence makes it an integer.
#[derive(Debug, Clone)]
pub struct SphereAlgebra {
    coefficients: CoefficientSequence,
    degrees: Vec<u32>,
    ring: CoefficientRing,
    basis: Vec<Simplex>,
}

/// A finite rational combination of sphere basis classes `a_sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SphereElement {
    terms: BTreeMap<Simplex, BigRational>,
}

impl SphereAlgebra {
    pub fn new(
        coefficients: CoefficientSequence,
        degrees: Vec<u32>,
        ring: CoefficientRing,
    ) -> Result<Self, AlgebraError> {
        if degrees.len() != coefficients.m() as usize {
            return Err(AlgebraError::WrongDegreeCount {
                got: degrees.len(),
                m: coefficients.m(),
            });
        }
        if let Some(pos) = degrees.iter().position(|&d| d == 0) {
            return Err(AlgebraError::DegreeZero { vertex: pos as u32 + 1 });
        }
        let violations = coefficients.violations(&ring);
        if !violations.is_empty() {
            return Err(AlgebraError::InvalidCoefficients(
                crate::sequences::SequenceError::CoefficientConditions(violations),
            ));
        }
        let mut basis = all_faces(coefficients.m());
        let degree_of = |s: &Simplex| -> u32 {
            s.vertices().iter().map(|&i| degrees[i as usize - 1]).sum()
        };
        basis.sort_by(|a, b| degree_of(a).cmp(&degree_of(b)).then_with(|| a.cmp(b)));
        Ok(SphereAlgebra { coefficients, degrees, ring, basis })
    }

    pub fn m(&self) -> u32 {
        self.coefficients.m()
    }

    pub fn coefficients(&self) -> &CoefficientSequence {
        &self.coefficients
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    /// Basis faces in (degree, face) order; position 0 is the unit `a_{}`.
    pub fn basis(&self) -> &[Simplex] {
        &self.basis
    }

    pub fn degree(&self, sigma: &Simplex) -> u32 {
        sigma.vertices().iter().map(|&i| self.degrees[i as usize - 1]).sum()
    }

    pub fn unit(&self) -> SphereElement {
        SphereElement::from_basis(Simplex::empty())
    }

    pub fn generator(&self, vertex: u32) -> Result<SphereElement, AlgebraError> {
        if vertex == 0 || vertex > self.m() {
            return Err(AlgebraError::VertexOutOfRange { vertex, m: self.m() });
        }
        Ok(SphereElement::from_basis(Simplex::vertex(vertex)))
    }

    /// Basis product; `None` encodes zero (overlapping faces).
    pub fn mul_basis(&self, a: &Simplex, b: &Simplex) -> Option<(BigRational, Simplex)> {
        if a.intersects(b) {
            return None;
        }
        let union = a.union(b);
        let top = self.coefficients.entries()[&union].clone();
        let bottom = &self.coefficients.entries()[a] * &self.coefficients.entries()[b];
        let (quotient, remainder) = num_integer::Integer::div_rem(&top, &bottom);
        debug_assert!(
            remainder.is_zero(),
            "disjoint-union divisibility was validated at construction"
        );
        let tag = |s: &Simplex| -> Vec<(u32, u32)> {
            s.vertices().iter().map(|&i| (i, self.degrees[i as usize - 1])).collect()
        };
        let sign = koszul_merge_sign(&tag(a), &tag(b));
        let mut coeff = BigRational::from_integer(BigInt::from(quotient));
        if sign < 0 {
            coeff = -coeff;
        }
        Some((coeff, union))
    }

    pub fn mul(&self, x: &SphereElement, y: &SphereElement) -> SphereElement {
        let mut out = SphereElement::default();
        for (a, ca) in &x.terms {
            for (b, cb) in &y.terms {
                if let Some((coeff, union)) = self.mul_basis(a, b) {
                    out.accumulate(union, coeff * ca * cb);
                }
            }
        }
        out
    }

    /// The full multiplication table in canonical basis order.
    pub fn structure_constants(&self) -> StructureTable {
        let label = |s: &Simplex| -> String {
            if s.is_empty() {
                "1".to_string()
            } else {
                let parts: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
                format!("a[{}]", parts.join(","))
            }
        };
        let index: BTreeMap<Simplex, usize> =
            self.basis.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();
        StructureTable::from_products(
            self.basis.iter().map(label).collect(),
            self.basis.iter().map(|s| self.degree(s)).collect(),
            |a, b| {
                self.mul_basis(&self.basis[a], &self.basis[b])
                    .map(|(coeff, union)| (index[&union], coeff))
                    .into_iter()
                    .collect()
            },
        )
    }
}

impl SphereElement {
    pub fn zero() -> Self {
        SphereElement::default()
    }

    pub fn from_basis(sigma: Simplex) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(sigma, BigRational::one());
        SphereElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, sigma: &Simplex) -> BigRational {
        self.terms.get(sigma).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &BigRational)> {
        self.terms.iter()
    }

    fn accumulate(&mut self, sigma: Simplex, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(sigma) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl fmt::Display for SphereElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| format!("{}*a{}", crate::json::format_rational(c), s.key_string()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
