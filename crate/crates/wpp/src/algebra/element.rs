//! Generator specifications, basis elements and finite rational combinations.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::AlgebraError;
use crate::complex::Simplex;

/// Per vertex, the degrees of that vertex's generators.
///
/// Vertex `i` carries a finite index set `J_i = {0, ..., n_i - 1}`; the
/// generator `y_{i,j}` has degree `degrees[i-1][j] >= 1`. The sphere case is
/// one generator per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    degrees: Vec<Vec<u32>>,
}

impl GeneratorSpec {
    pub fn new(degrees: Vec<Vec<u32>>) -> Result<Self, AlgebraError> {
        for (pos, list) in degrees.iter().enumerate() {
            if list.iter().any(|&d| d == 0) {
                return Err(AlgebraError::DegreeZero { vertex: pos as u32 + 1 });
            }
        }
        Ok(GeneratorSpec { degrees })
    }

    /// One generator per vertex, of the given degrees.
    pub fn spheres(degrees: &[u32]) -> Result<Self, AlgebraError> {
        Self::new(degrees.iter().map(|&d| vec![d]).collect())
    }

    pub fn m(&self) -> u32 {
        self.degrees.len() as u32
    }

    pub fn index_count(&self, vertex: u32) -> usize {
        self.degrees[vertex as usize - 1].len()
    }

    pub fn degree(&self, vertex: u32, index: usize) -> u32 {
        self.degrees[vertex as usize - 1][index]
    }

    /// Degree of the basis element `y_{tau,u}`.
    pub fn element_degree(&self, element: &BasisElement) -> u32 {
        element
            .face
            .vertices()
            .iter()
            .zip(&element.index)
            .map(|(&i, &j)| self.degree(i, j))
            .sum()
    }
}

/// A module basis element `y_{tau,u}`: a face together with one generator
/// index per vertex. The empty face with the empty index is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElement {
    pub(crate) face: Simplex,
    pub(crate) index: Vec<usize>,
}

impl BasisElement {
    pub fn new(face: Simplex, index: Vec<usize>) -> Self {
        debug_assert_eq!(face.len(), index.len());
        BasisElement { face, index }
    }

    pub fn unit() -> Self {
        BasisElement { face: Simplex::empty(), index: Vec::new() }
    }

    pub fn face(&self) -> &Simplex {
        &self.face
    }

    pub fn index(&self) -> &[usize] {
        &self.index
    }

    pub fn is_unit(&self) -> bool {
        self.face.is_empty()
    }

    /// Generator index for a vertex of the face.
    pub fn index_at(&self, vertex: u32) -> Option<usize> {
        self.face
            .vertices()
            .iter()
            .position(|&v| v == vertex)
            .map(|pos| self.index[pos])
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let face: Vec<String> = self.face.vertices().iter().map(|v| v.to_string()).collect();
        let index: Vec<String> = self.index.iter().map(|j| j.to_string()).collect();
        write!(f, "y[{};{}]", face.join(","), index.join(","))
    }
}

/// A finitely supported rational combination of basis elements.
///
/// Zero coefficients are never stored, so equality of elements is equality
/// of the underlying maps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisElement, BigRational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn unit() -> Self {
        Self::from_basis(BasisElement::unit())
    }

    pub fn from_basis(b: BasisElement) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(b, BigRational::one());
        AlgebraElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisElement, BigRational)>) -> Self {
        let mut out = AlgebraElement::zero();
        for (b, coeff) in terms {
            out.accumulate(b, coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &BigRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, b: &BasisElement) -> BigRational {
        self.terms.get(b).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn accumulate(&mut self, b: BasisElement, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
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

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, coeff) in &other.terms {
            out.accumulate(b.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (b, coeff) in &other.terms {
            out.accumulate(b.clone(), -coeff.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigRational) -> AlgebraElement {
        if factor.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * factor)).collect(),
        }
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c.clone())).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                if c.is_one() && !b.is_unit() {
                    b.to_string()
                } else {
                    format!("{}*{}", crate::json::format_rational(c), b)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
