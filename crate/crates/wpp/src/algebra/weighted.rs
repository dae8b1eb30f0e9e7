//! The weighted algebra `Lambda(Y, c) / I_K`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::element::{AlgebraElement, BasisElement, GeneratorSpec};
use super::table::StructureTable;
use super::{koszul_merge_sign, AlgebraError};
use crate::complex::{Simplex, SimplicialComplex};
use crate::sequences::{CoefficientRing, PowerSequence};

/// The weighted graded-commutative algebra on generators `y_{i,j}` over a
/// simplicial complex `K`, with weights drawn from a power sequence.
///
/// The quotient by `I_K` is realized by basis restriction: the module basis
/// is exactly `{y_{tau,u} : tau in K}`, since the ideal is spanned by the
/// basis elements on non-faces. Algebras are immutable after construction
/// and every operation is pure.
#[derive(Debug, Clone)]
pub struct WeightedAlgebra {
    gens: GeneratorSpec,
    weights: PowerSequence,
    complex: SimplicialComplex,
    ring: CoefficientRing,
    basis: Vec<BasisElement>,
    position: BTreeMap<BasisElement, usize>,
}

impl WeightedAlgebra {
    /// Builds the algebra; the weight table must be a valid power sequence
    /// (the integrality of every structure constant rests on its
    /// divisibility invariant) and all three inputs must share one universe.
    pub fn new(
        gens: GeneratorSpec,
        weights: PowerSequence,
        complex: SimplicialComplex,
        ring: CoefficientRing,
    ) -> Result<Self, AlgebraError> {
        if gens.m() != complex.m() {
            return Err(AlgebraError::MismatchedUniverse { left: gens.m(), right: complex.m() });
        }
        if weights.m() != complex.m() {
            return Err(AlgebraError::MismatchedUniverse {
                left: weights.m(),
                right: complex.m(),
            });
        }
        let violations = weights.violations();
        if !violations.is_empty() {
            return Err(AlgebraError::InvalidWeights(
                crate::sequences::SequenceError::PowerInvariants(violations),
            ));
        }

        let mut basis = Vec::new();
        for face in complex.faces() {
            enumerate_indices(&gens, face, &mut basis);
        }
        // Canonical (degree, face, index) order.
        basis.sort_by(|a, b| {
            gens.element_degree(a)
                .cmp(&gens.element_degree(b))
                .then_with(|| a.cmp(b))
        });
        let position = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        Ok(WeightedAlgebra { gens, weights, complex, ring, basis, position })
    }

    /// The ordinary (weight-free) algebra on the same generators and complex.
    pub fn unweighted(&self) -> WeightedAlgebra {
        let ones = PowerSequence::all_ones(self.complex.m()).expect("universe already checked");
        WeightedAlgebra::new(self.gens.clone(), ones, self.complex.clone(), self.ring.clone())
            .expect("inputs were already compatible")
    }

    pub fn generator_spec(&self) -> &GeneratorSpec {
        &self.gens
    }

    pub fn weights(&self) -> &PowerSequence {
        &self.weights
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn m(&self) -> u32 {
        self.complex.m()
    }

    /// The canonical basis, in (degree, face, index) order; position 0 is
    /// the unit.
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn basis_position(&self, b: &BasisElement) -> Option<usize> {
        self.position.get(b).copied()
    }

    pub fn contains_basis(&self, b: &BasisElement) -> bool {
        self.position.contains_key(b)
    }

    pub fn degree(&self, b: &BasisElement) -> u32 {
        self.gens.element_degree(b)
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::unit()
    }

    /// The generator `y_{i,j}` as an element.
    pub fn generator(&self, vertex: u32, index: usize) -> Result<AlgebraElement, AlgebraError> {
        let b = BasisElement::new(Simplex::vertex(vertex), vec![index]);
        if !self.contains_basis(&b) {
            return Err(AlgebraError::ElementNotOverAlgebra(b.to_string()));
        }
        Ok(AlgebraElement::from_basis(b))
    }

    fn check_element(&self, x: &AlgebraElement) -> Result<(), AlgebraError> {
        for (b, _) in x.terms() {
            if !self.contains_basis(b) {
                return Err(AlgebraError::ElementNotOverAlgebra(b.to_string()));
            }
        }
        Ok(())
    }

    /// Whether every coefficient of `x` lies in the ambient ring.
    pub fn element_in_ring(&self, x: &AlgebraElement) -> bool {
        x.terms().all(|(_, c)| self.ring.contains(c))
    }

    /// Basis-level product. `None` encodes zero: overlapping faces, or a
    /// union outside `K`.
    pub fn mul_basis(
        &self,
        a: &BasisElement,
        b: &BasisElement,
    ) -> Option<(BigRational, BasisElement)> {
        if a.face().intersects(b.face()) {
            return None;
        }
        let union = a.face().union(b.face());
        if !self.complex.contains(&union) {
            return None;
        }

        let lambda = self.lambda(a.face(), b.face(), &union);
        let sign = koszul_merge_sign(&self.tagged(a), &self.tagged(b));

        let mut index = Vec::with_capacity(union.len());
        for &v in union.vertices() {
            let j = a.index_at(v).or_else(|| b.index_at(v)).expect("v is in one factor");
            index.push(j);
        }
        let mut coeff = BigRational::from_integer(BigInt::from(lambda));
        if sign < 0 {
            coeff = -coeff;
        }
        Some((coeff, BasisElement::new(union, index)))
    }

    /// The integer weight `prod_{i in tau} c_i^union / c_i^tau *
    /// prod_{i in omega} c_i^union / c_i^omega`.
    fn lambda(&self, tau: &Simplex, omega: &Simplex, union: &Simplex) -> num_bigint::BigUint {
        let mut out = num_bigint::BigUint::one();
        for part in [tau, omega] {
            let ratio = self
                .weights
                .ratio(part, union)
                .expect("divisibility holds for a validated power sequence");
            for &i in part.vertices() {
                out *= &ratio[i as usize - 1];
            }
        }
        out
    }

    fn tagged(&self, b: &BasisElement) -> Vec<(u32, u32)> {
        b.face()
            .vertices()
            .iter()
            .zip(b.index())
            .map(|(&i, &j)| (i, self.gens.degree(i, j)))
            .collect()
    }

    /// Bilinear extension of the basis product.
    pub fn mul(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = AlgebraElement::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                if let Some((coeff, basis)) = self.mul_basis(a, b) {
                    out.accumulate(basis, coeff * ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// The comparison homomorphism into the ordinary algebra, defined when
    /// the complex is a single full simplex `sigma`:
    /// `y_{tau,u} -> (prod_{i in tau} c_i^sigma / c_i^tau) x_{tau,u}`.
    pub fn eta_star(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let sigma = self.complex.as_single_simplex().ok_or(AlgebraError::NotASimplex)?;
        self.check_element(x)?;
        let mut out = AlgebraElement::zero();
        for (b, coeff) in x.terms() {
            let ratio = self
                .weights
                .ratio(b.face(), &sigma)
                .expect("faces of a validated sequence divide upward");
            let mut factor = num_bigint::BigUint::one();
            for &i in b.face().vertices() {
                factor *= &ratio[i as usize - 1];
            }
            let factor = BigRational::from_integer(BigInt::from(factor));
            out.accumulate(b.clone(), coeff * factor);
        }
        Ok(out)
    }

    /// The same algebra over a subcomplex `L` of `K`.
    pub fn subalgebra(&self, sub: SimplicialComplex) -> Result<WeightedAlgebra, AlgebraError> {
        if !sub.is_subcomplex_of(&self.complex) {
            return Err(AlgebraError::NotASubcomplex);
        }
        WeightedAlgebra::new(self.gens.clone(), self.weights.clone(), sub, self.ring.clone())
    }

    /// Restriction along `K -> L`: drop every term on a face outside `L`.
    pub fn restrict(
        &self,
        sub: &SimplicialComplex,
        x: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        if !sub.is_subcomplex_of(&self.complex) {
            return Err(AlgebraError::NotASubcomplex);
        }
        self.check_element(x)?;
        Ok(AlgebraElement::from_terms(
            x.terms()
                .filter(|(b, _)| sub.contains(b.face()))
                .map(|(b, c)| (b.clone(), c.clone())),
        ))
    }

    /// Basis-preserving inclusion of an element over the full subcomplex
    /// `K_I` back into the algebra over `K`; a right inverse to restriction.
    pub fn include_from_full_subcomplex(
        &self,
        vertex_set: &[u32],
        x: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        for &v in vertex_set {
            if v == 0 || v > self.m() {
                return Err(AlgebraError::VertexOutOfRange { vertex: v, m: self.m() });
            }
        }
        let inside = self.complex.full_subcomplex(vertex_set)?;
        for (b, _) in x.terms() {
            if !inside.contains(b.face()) {
                return Err(AlgebraError::OutsideFullSubcomplex(b.face().to_string()));
            }
        }
        Ok(x.clone())
    }

    /// Additive ranks by degree, `0..=max_degree`; the basis is counted
    /// directly (weights never change ranks).
    pub fn poincare_series(&self, max_degree: u32) -> Vec<u64> {
        let mut out = vec![0u64; max_degree as usize + 1];
        for b in &self.basis {
            let d = self.degree(b);
            if d <= max_degree {
                out[d as usize] += 1;
            }
        }
        out
    }

    /// The full multiplication table in canonical basis order.
    pub fn structure_constants(&self) -> StructureTable {
        StructureTable::from_products(
            self.basis.iter().map(|b| b.to_string()).collect(),
            self.basis.iter().map(|b| self.degree(b)).collect(),
            |a, b| {
                self.mul_basis(&self.basis[a], &self.basis[b])
                    .map(|(coeff, basis)| (self.basis_position(&basis).expect("closed"), coeff))
                    .into_iter()
                    .collect()
            },
        )
    }
}

fn enumerate_indices(gens: &GeneratorSpec, face: &Simplex, out: &mut Vec<BasisElement>) {
    let sizes: Vec<usize> = face.vertices().iter().map(|&i| gens.index_count(i)).collect();
    if sizes.iter().any(|&s| s == 0) {
        return;
    }
    let mut index = vec![0usize; face.len()];
    loop {
        out.push(BasisElement::new(face.clone(), index.clone()));
        let mut k = face.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            index[k] += 1;
            if index[k] < sizes[k] {
                break;
            }
            index[k] = 0;
        }
    }
}
