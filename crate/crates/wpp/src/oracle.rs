//! Brute-force reference implementations for validating the algebra engine.
//!
//! Nothing here shares multiplication logic with [`crate::algebra`]: signs
//! come from an explicit bubble sort rather than inversion counting, the
//! star product is written out directly from its definition, and the k-ary
//! generator formula is evaluated in closed form instead of by binary
//! recursion. Clarity over speed; the loops are quadratic or cubic in the
//! basis and refuse to run past 512 basis elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{
    AlgebraElement, AlgebraError, BasisElement, GeneratorSpec, StructureTable, WeightedAlgebra,
};
use crate::complex::{Simplex, SimplicialComplex};

use std::fmt;

/// Largest basis an exhaustive sweep will accept.
pub const MAX_ORACLE_BASIS: usize = 512;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("basis has {count} elements; exhaustive checks accept at most {MAX_ORACLE_BASIS}")]
    BasisTooLarge { count: usize },
    #[error("k-ary expansion accepts at most 6 generator references, got {0}")]
    TooManyGenerators(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
}

/// A property that [`exhaustive_check`] can sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckProperty {
    Associativity,
    GradedCommutativity,
    EtaRingHomomorphism,
    RestrictionRingHomomorphism,
}

impl fmt::Display for CheckProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CheckProperty::Associativity => "associativity",
            CheckProperty::GradedCommutativity => "graded-commutativity",
            CheckProperty::EtaRingHomomorphism => "eta-ring-hom",
            CheckProperty::RestrictionRingHomomorphism => "restriction-ring-hom",
        };
        write!(f, "{name}")
    }
}

/// First failing tuple of a sweep, with both computed values.
#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub tuple: Vec<String>,
    pub left: String,
    pub right: String,
}

/// Outcome of one oracle sweep. A counterexample is present exactly when the
/// sweep failed.
#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub instance: String,
    pub property: String,
    pub pass: bool,
    pub tuples_checked: u64,
    pub counterexample: Option<Counterexample>,
}

impl OracleReport {
    fn passed(instance: String, property: String, tuples_checked: u64) -> Self {
        OracleReport { instance, property, pass: true, tuples_checked, counterexample: None }
    }

    fn failed(
        instance: String,
        property: String,
        tuples_checked: u64,
        counterexample: Counterexample,
    ) -> Self {
        OracleReport {
            instance,
            property,
            pass: false,
            tuples_checked,
            counterexample: Some(counterexample),
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} on {} ({} tuples)",
            if self.pass { "pass" } else { "FAIL" },
            self.property,
            self.instance,
            self.tuples_checked
        )?;
        if let Some(ce) = &self.counterexample {
            write!(f, "\n  tuple: ({})", ce.tuple.join(", "))?;
            write!(f, "\n  left:  {}", ce.left)?;
            write!(f, "\n  right: {}", ce.right)?;
        }
        Ok(())
    }
}

/// Sign of sorting a `(vertex, degree)` list by vertex, one factor
/// `(-1)^{d_a d_b}` per adjacent transposition. Plain bubble sort.
fn bubble_sort_sign(items: &mut Vec<(u32, u32)>) -> i8 {
    let mut sign = 1i8;
    let n = items.len();
    for _ in 0..n {
        for k in 1..n {
            if items[k - 1].0 > items[k].0 {
                if items[k - 1].1 % 2 == 1 && items[k].1 % 2 == 1 {
                    sign = -sign;
                }
                items.swap(k - 1, k);
            }
        }
    }
    sign
}

/// Reference multiplication table for the unweighted star product:
/// `x_{tau,u} x_{omega,v} = ± x_{tau∪omega, w}` for disjoint faces with
/// union in `K`, zero otherwise.
pub fn ordinary_star_algebra(gens: &GeneratorSpec, complex: &SimplicialComplex) -> StructureTable {
    let mut basis: Vec<BasisElement> = Vec::new();
    for face in complex.faces() {
        collect_indices(gens, face, &mut basis);
    }
    basis.sort_by(|a, b| {
        gens.element_degree(a).cmp(&gens.element_degree(b)).then_with(|| a.cmp(b))
    });
    let find = |b: &BasisElement| basis.iter().position(|x| x == b).expect("closed basis");

    let star = |a: &BasisElement, b: &BasisElement| -> Vec<(usize, BigRational)> {
        if a.face().intersects(b.face()) {
            return Vec::new();
        }
        let union = a.face().union(b.face());
        if !complex.contains(&union) {
            return Vec::new();
        }
        let mut tagged: Vec<(u32, u32)> = Vec::new();
        let mut pairs: Vec<(u32, usize)> = Vec::new();
        for (source, _) in [(a, 0), (b, 1)] {
            for (&v, &j) in source.face().vertices().iter().zip(source.index()) {
                tagged.push((v, gens.degree(v, j)));
                pairs.push((v, j));
            }
        }
        let sign = bubble_sort_sign(&mut tagged);
        pairs.sort_by_key(|&(v, _)| v);
        let merged = BasisElement::new(union, pairs.into_iter().map(|(_, j)| j).collect());
        let coeff = if sign < 0 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        vec![(find(&merged), coeff)]
    };

    StructureTable::from_products(
        basis.iter().map(|b| b.to_string()).collect(),
        basis.iter().map(|b| gens.element_degree(b)).collect(),
        |i, j| star(&basis[i], &basis[j]),
    )
}

fn collect_indices(gens: &GeneratorSpec, face: &Simplex, out: &mut Vec<BasisElement>) {
    let sizes: Vec<usize> = face.vertices().iter().map(|&i| gens.index_count(i)).collect();
    if sizes.iter().any(|&s| s == 0) {
        return;
    }
    let total: usize = sizes.iter().product();
    for mut code in 0..total {
        let mut index = Vec::with_capacity(sizes.len());
        for &s in &sizes {
            index.push(code % s);
            code /= s;
        }
        out.push(BasisElement::new(face.clone(), index));
    }
}

/// Evaluates the closed k-ary generator formula directly: zero on a repeated
/// vertex, otherwise the sorted product scaled by
/// `prod_l c_{i_l}^{tau} / c_{i_l}^{{i_l}}` and the sorting sign.
pub fn kary_generator_expansion(
    algebra: &WeightedAlgebra,
    generators: &[(u32, usize)],
) -> Result<AlgebraElement, OracleError> {
    if generators.len() > 6 {
        return Err(OracleError::TooManyGenerators(generators.len()));
    }
    if generators.is_empty() {
        return Ok(AlgebraElement::unit());
    }
    for &(i, j) in generators {
        if i == 0 || i > algebra.m() {
            return Err(OracleError::Algebra(AlgebraError::VertexOutOfRange {
                vertex: i,
                m: algebra.m(),
            }));
        }
        if j >= algebra.generator_spec().index_count(i) {
            return Err(OracleError::Algebra(AlgebraError::ElementNotOverAlgebra(format!(
                "y[{i};{j}]"
            ))));
        }
    }

    let mut seen = std::collections::BTreeSet::new();
    for &(i, _) in generators {
        if !seen.insert(i) {
            return Ok(AlgebraElement::zero());
        }
    }
    let tau = Simplex::new(seen.iter().copied()).expect("distinct vertices");
    if !algebra.complex().contains(&tau) {
        return Ok(AlgebraElement::zero());
    }

    let mut tagged: Vec<(u32, u32)> = generators
        .iter()
        .map(|&(i, j)| (i, algebra.generator_spec().degree(i, j)))
        .collect();
    let sign = bubble_sort_sign(&mut tagged);

    let mut coeff = BigRational::one();
    for &(i, _) in generators {
        let top = algebra.weights().value(&tau, i).expect("tau is a face").clone();
        let bottom = algebra
            .weights()
            .value(&Simplex::vertex(i), i)
            .expect("vertices are faces")
            .clone();
        coeff *= BigRational::new(BigInt::from(top), BigInt::from(bottom));
    }
    if sign < 0 {
        coeff = -coeff;
    }

    let mut sorted: Vec<(u32, usize)> = generators.to_vec();
    sorted.sort_by_key(|&(i, _)| i);
    let index: Vec<usize> = sorted.iter().map(|&(_, j)| j).collect();
    let basis = BasisElement::new(tau, index);
    Ok(AlgebraElement::from_basis(basis).scale(&coeff))
}

/// Exhaustively sweeps the named property over the algebra's basis tuples;
/// the first failure is reported with both computed values.
pub fn exhaustive_check(
    algebra: &WeightedAlgebra,
    property: CheckProperty,
) -> Result<OracleReport, OracleError> {
    let n = algebra.basis().len();
    if n > MAX_ORACLE_BASIS {
        return Err(OracleError::BasisTooLarge { count: n });
    }
    let instance = format!(
        "m={}, {} basis elements over {}",
        algebra.m(),
        n,
        algebra.ring()
    );
    let name = property.to_string();
    let elements: Vec<AlgebraElement> =
        algebra.basis().iter().cloned().map(AlgebraElement::from_basis).collect();
    let label = |k: usize| algebra.basis()[k].to_string();
    let mut checked = 0u64;

    match property {
        CheckProperty::Associativity => {
            for a in 0..n {
                for b in 0..n {
                    let ab = algebra.mul(&elements[a], &elements[b])?;
                    for c in 0..n {
                        checked += 1;
                        let left = algebra.mul(&ab, &elements[c])?;
                        let bc = algebra.mul(&elements[b], &elements[c])?;
                        let right = algebra.mul(&elements[a], &bc)?;
                        if left != right {
                            return Ok(OracleReport::failed(
                                instance,
                                name,
                                checked,
                                Counterexample {
                                    tuple: vec![label(a), label(b), label(c)],
                                    left: left.to_string(),
                                    right: right.to_string(),
                                },
                            ));
                        }
                    }
                }
            }
        }
        CheckProperty::GradedCommutativity => {
            for a in 0..n {
                for b in 0..n {
                    checked += 1;
                    let forward = algebra.mul(&elements[a], &elements[b])?;
                    let mut backward = algebra.mul(&elements[b], &elements[a])?;
                    let da = algebra.degree(&algebra.basis()[a]);
                    let db = algebra.degree(&algebra.basis()[b]);
                    if (da * db) % 2 == 1 {
                        backward = backward.neg();
                    }
                    if forward != backward {
                        return Ok(OracleReport::failed(
                            instance,
                            name,
                            checked,
                            Counterexample {
                                tuple: vec![label(a), label(b)],
                                left: forward.to_string(),
                                right: backward.to_string(),
                            },
                        ));
                    }
                }
            }
        }
        CheckProperty::EtaRingHomomorphism => {
            let ordinary = algebra.unweighted();
            for a in 0..n {
                for b in 0..n {
                    checked += 1;
                    let product = algebra.mul(&elements[a], &elements[b])?;
                    let left = algebra.eta_star(&product)?;
                    let right = ordinary.mul(
                        &algebra.eta_star(&elements[a])?,
                        &algebra.eta_star(&elements[b])?,
                    )?;
                    if left != right {
                        return Ok(OracleReport::failed(
                            instance,
                            name,
                            checked,
                            Counterexample {
                                tuple: vec![label(a), label(b)],
                                left: left.to_string(),
                                right: right.to_string(),
                            },
                        ));
                    }
                }
            }
        }
        CheckProperty::RestrictionRingHomomorphism => {
            let m = algebra.m();
            for mask in 0u32..(1 << m) {
                let vertex_set: Vec<u32> = (1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                let sub = algebra.complex().full_subcomplex(&vertex_set)?;
                let sub_algebra = algebra.subalgebra(sub.clone())?;
                for a in 0..n {
                    for b in 0..n {
                        checked += 1;
                        let product = algebra.mul(&elements[a], &elements[b])?;
                        let left = algebra.restrict(&sub, &product)?;
                        let right = sub_algebra.mul(
                            &algebra.restrict(&sub, &elements[a])?,
                            &algebra.restrict(&sub, &elements[b])?,
                        )?;
                        if left != right {
                            return Ok(OracleReport::failed(
                                instance,
                                name,
                                checked,
                                Counterexample {
                                    tuple: vec![
                                        format!("I={vertex_set:?}"),
                                        label(a),
                                        label(b),
                                    ],
                                    left: left.to_string(),
                                    right: right.to_string(),
                                },
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(OracleReport::passed(instance, name, checked))
}

/// Associativity of a bare structure-constant table: composes products
/// through the table itself, independent of any algebra object. The first
/// failing triple of basis ids is reported.
pub fn check_table_associativity(table: &StructureTable) -> OracleReport {
    let n = table.len();
    let instance = format!("table with {n} basis elements");
    let compose = |terms: &[(usize, BigRational)], right: usize| -> Vec<(usize, BigRational)> {
        let mut out: std::collections::BTreeMap<usize, BigRational> = Default::default();
        for (mid, coeff) in terms {
            for (target, inner) in table.product(*mid, right) {
                let slot = out.entry(*target).or_insert_with(BigRational::zero);
                *slot += coeff * inner;
                if slot.is_zero() {
                    out.remove(target);
                }
            }
        }
        out.into_iter().collect()
    };
    let compose_left = |left: usize, terms: &[(usize, BigRational)]| -> Vec<(usize, BigRational)> {
        let mut out: std::collections::BTreeMap<usize, BigRational> = Default::default();
        for (mid, coeff) in terms {
            for (target, inner) in table.product(left, *mid) {
                let slot = out.entry(*target).or_insert_with(BigRational::zero);
                *slot += coeff * inner;
                if slot.is_zero() {
                    out.remove(target);
                }
            }
        }
        out.into_iter().collect()
    };
    let render = |terms: &[(usize, BigRational)]| -> String {
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms
                .iter()
                .map(|(id, c)| format!("{}*{}", crate::json::format_rational(c), table.labels()[*id]))
                .collect::<Vec<_>>()
                .join(" + ")
        }
    };
    let mut checked = 0u64;
    for a in 0..n {
        for b in 0..n {
            let ab = table.product(a, b);
            for c in 0..n {
                checked += 1;
                let left = compose(ab, c);
                let right = compose_left(a, table.product(b, c));
                if left != right {
                    return OracleReport::failed(
                        instance,
                        "table-associativity".into(),
                        checked,
                        Counterexample {
                            tuple: vec![
                                table.labels()[a].clone(),
                                table.labels()[b].clone(),
                                table.labels()[c].clone(),
                            ],
                            left: render(&left),
                            right: render(&right),
                        },
                    );
                }
            }
        }
    }
    OracleReport::passed(instance, "table-associativity".into(), checked)
}

/// Independent additive-rank computation: the coefficient of `t^n` in
/// `1 + sum_{tau in K, tau != {}} prod_{i in tau} P_i(t)`, where `P_i` is
/// the generating polynomial of vertex `i`'s generator degrees.
pub fn poincare_series_formula(
    gens: &GeneratorSpec,
    complex: &SimplicialComplex,
    max_degree: u32,
) -> Vec<u64> {
    let len = max_degree as usize + 1;
    let mut out = vec![0u64; len];
    out[0] = 1;
    for tau in complex.faces() {
        if tau.is_empty() {
            continue;
        }
        let mut product = vec![0u64; len];
        product[0] = 1;
        for &i in tau.vertices() {
            let mut next = vec![0u64; len];
            for (d0, &coeff) in product.iter().enumerate() {
                if coeff == 0 {
                    continue;
                }
                for j in 0..gens.index_count(i) {
                    let d = d0 + gens.degree(i, j) as usize;
                    if d < len {
                        next[d] += coeff;
                    }
                }
            }
            product = next;
        }
        for (slot, coeff) in out.iter_mut().zip(&product) {
            *slot += coeff;
        }
    }
    out
}

/// Seeded randomized probe: associativity and distributivity on random
/// small linear combinations of basis elements. Complements the exhaustive
/// basis sweeps with off-basis elements.
pub fn randomized_element_check(
    algebra: &WeightedAlgebra,
    seed: u64,
    rounds: u32,
) -> Result<OracleReport, OracleError> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = algebra.basis().len();
    if n > MAX_ORACLE_BASIS {
        return Err(OracleError::BasisTooLarge { count: n });
    }
    let instance = format!("m={}, {} basis elements, seed {}", algebra.m(), n, seed);
    let random_element = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut out = AlgebraElement::zero();
        for _ in 0..rng.gen_range(1..=3usize) {
            let pick = algebra.basis()[rng.gen_range(0..n)].clone();
            let coeff = BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3)));
            if !coeff.is_zero() {
                out = out.add(&AlgebraElement::from_basis(pick).scale(&coeff));
            }
        }
        out
    };
    let mut checked = 0u64;
    for _ in 0..rounds {
        checked += 1;
        let x = random_element(&mut rng);
        let y = random_element(&mut rng);
        let z = random_element(&mut rng);
        let assoc_left = algebra.mul(&algebra.mul(&x, &y)?, &z)?;
        let assoc_right = algebra.mul(&x, &algebra.mul(&y, &z)?)?;
        if assoc_left != assoc_right {
            return Ok(OracleReport::failed(
                instance,
                "randomized-associativity".into(),
                checked,
                Counterexample {
                    tuple: vec![x.to_string(), y.to_string(), z.to_string()],
                    left: assoc_left.to_string(),
                    right: assoc_right.to_string(),
                },
            ));
        }
        let dist_left = algebra.mul(&x, &y.add(&z))?;
        let dist_right = algebra.mul(&x, &y)?.add(&algebra.mul(&x, &z)?);
        if dist_left != dist_right {
            return Ok(OracleReport::failed(
                instance,
                "randomized-distributivity".into(),
                checked,
                Counterexample {
                    tuple: vec![x.to_string(), y.to_string(), z.to_string()],
                    left: dist_left.to_string(),
                    right: dist_right.to_string(),
                },
            ));
        }
    }
    Ok(OracleReport::passed(instance, "randomized-element-check".into(), checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::structure_constants_match;
    use crate::sequences::{CoefficientRing, PowerSequence};

    fn face(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    fn example_algebra() -> WeightedAlgebra {
        WeightedAlgebra::new(
            GeneratorSpec::spheres(&[2, 4, 6]).unwrap(),
            PowerSequence::minimal(3, &[2u32.into(), 3u32.into(), 5u32.into()]).unwrap(),
            SimplicialComplex::full_simplex(3).unwrap(),
            CoefficientRing::integers(),
        )
        .unwrap()
    }

    #[test]
    fn star_oracle_matches_engine_with_trivial_weights() {
        for (m, maximal) in [
            (1u32, vec![vec![1u32]]),
            (2, vec![vec![1], vec![2]]),
            (3, vec![vec![1, 2], vec![2, 3]]),
            (3, vec![vec![1, 2, 3]]),
            (4, vec![vec![1, 2, 3], vec![3, 4]]),
        ] {
            let complex = SimplicialComplex::from_maximal_faces(m, &maximal).unwrap();
            let degrees: Vec<u32> = (0..m).map(|k| 2 + k).collect();
            let gens = GeneratorSpec::spheres(&degrees).unwrap();
            let engine = WeightedAlgebra::new(
                gens.clone(),
                PowerSequence::all_ones(m).unwrap(),
                complex.clone(),
                CoefficientRing::integers(),
            )
            .unwrap();
            let left = engine.structure_constants();
            let right = ordinary_star_algebra(&gens, &complex);
            let identity: Vec<usize> = (0..left.len()).collect();
            let report = structure_constants_match(&left, &right, &identity).unwrap();
            assert!(report.matched, "mismatch at m={m}: {:?}", report.first_mismatch);
        }
    }

    #[test]
    fn star_oracle_truncated_polynomial_and_disjoint_points() {
        // m=1, one degree-2 generator: x^2 = 0.
        let complex = SimplicialComplex::full_simplex(1).unwrap();
        let gens = GeneratorSpec::spheres(&[2]).unwrap();
        let table = ordinary_star_algebra(&gens, &complex);
        assert_eq!(table.len(), 2);
        let x = 1usize;
        assert!(table.product(x, x).is_empty());

        // Two disjoint vertices: x1 x2 = 0 because the edge is absent.
        let complex = SimplicialComplex::from_maximal_faces(2, &[vec![1], vec![2]]).unwrap();
        let gens = GeneratorSpec::spheres(&[3, 3]).unwrap();
        let table = ordinary_star_algebra(&gens, &complex);
        assert!(table.product(1, 2).is_empty());
    }

    #[test]
    fn kary_expansion_agrees_with_binary_products() {
        let algebra = example_algebra();
        let refs: Vec<(u32, usize)> = vec![(1, 0), (2, 0), (3, 0)];
        // All triples over the three generators, in every order.
        for a in &refs {
            for b in &refs {
                for c in &refs {
                    let direct = kary_generator_expansion(&algebra, &[*a, *b, *c]).unwrap();
                    let ya = algebra.generator(a.0, a.1).unwrap();
                    let yb = algebra.generator(b.0, b.1).unwrap();
                    let yc = algebra.generator(c.0, c.1).unwrap();
                    let nested =
                        algebra.mul(&algebra.mul(&ya, &yb).unwrap(), &yc).unwrap();
                    assert_eq!(direct, nested, "disagreement at ({a:?}, {b:?}, {c:?})");
                }
            }
        }
        // Repeated vertex and the empty list.
        assert!(kary_generator_expansion(&algebra, &[(1, 0), (1, 0)]).unwrap().is_zero());
        assert_eq!(
            kary_generator_expansion(&algebra, &[]).unwrap(),
            AlgebraElement::unit()
        );
        assert!(matches!(
            kary_generator_expansion(&algebra, &[(1, 0); 7]),
            Err(OracleError::TooManyGenerators(7))
        ));
    }

    #[test]
    fn exhaustive_checks_pass_on_the_example_algebra() {
        let algebra = example_algebra();
        for property in [
            CheckProperty::Associativity,
            CheckProperty::GradedCommutativity,
            CheckProperty::EtaRingHomomorphism,
            CheckProperty::RestrictionRingHomomorphism,
        ] {
            let report = exhaustive_check(&algebra, property).unwrap();
            assert!(report.pass, "{report}");
            assert!(report.counterexample.is_none());
        }
    }

    #[test]
    fn corrupted_table_fails_associativity_with_a_concrete_triple() {
        let algebra = example_algebra();
        let mut table = algebra.structure_constants();
        assert!(check_table_associativity(&table).pass);

        // Corrupt one structure constant: scale y1 * y2 by 7.
        let y1 = algebra
            .basis_position(&crate::algebra::BasisElement::new(face(&[1]), vec![0]))
            .unwrap();
        let y2 = algebra
            .basis_position(&crate::algebra::BasisElement::new(face(&[2]), vec![0]))
            .unwrap();
        let corrupted: Vec<(usize, BigRational)> = table
            .product(y1, y2)
            .iter()
            .map(|(id, c)| (*id, c * BigRational::from_integer(BigInt::from(7))))
            .collect();
        table.override_product(y1, y2, corrupted);

        let report = check_table_associativity(&table);
        assert!(!report.pass);
        let ce = report.counterexample.expect("a concrete triple is reported");
        assert_eq!(ce.tuple.len(), 3);
        assert_ne!(ce.left, ce.right);
    }

    #[test]
    fn oracle_refuses_oversized_bases() {
        // 2^10 = 1024 basis elements exceed the cap.
        let algebra = WeightedAlgebra::new(
            GeneratorSpec::spheres(&[2; 10]).unwrap(),
            PowerSequence::all_ones(10).unwrap(),
            SimplicialComplex::full_simplex(10).unwrap(),
            CoefficientRing::integers(),
        )
        .unwrap();
        assert!(matches!(
            exhaustive_check(&algebra, CheckProperty::Associativity),
            Err(OracleError::BasisTooLarge { count: 1024 })
        ));
    }

    #[test]
    fn poincare_formula_matches_basis_counts() {
        let complex = SimplicialComplex::from_maximal_faces(3, &[vec![1, 2], vec![3]]).unwrap();
        let gens = GeneratorSpec::new(vec![vec![2, 3], vec![4], vec![1]]).unwrap();
        let algebra = WeightedAlgebra::new(
            gens.clone(),
            PowerSequence::all_ones(3).unwrap(),
            complex.clone(),
            CoefficientRing::integers(),
        )
        .unwrap();
        assert_eq!(algebra.poincare_series(12), poincare_series_formula(&gens, &complex, 12));
    }

    #[test]
    fn randomized_probe_passes_and_is_deterministic() {
        let algebra = example_algebra();
        let a = randomized_element_check(&algebra, 42, 50).unwrap();
        let b = randomized_element_check(&algebra, 42, 50).unwrap();
        assert!(a.pass);
        assert_eq!(a.tuples_checked, b.tuples_checked);
        assert_eq!(a.instance, b.instance);
    }

    #[test]
    fn report_renders_both_ways() {
        let algebra = example_algebra();
        let report = exhaustive_check(&algebra, CheckProperty::Associativity).unwrap();
        let text = report.to_string();
        assert!(text.contains("associativity"));
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["pass"], serde_json::json!(true));
    }

    #[test]
    fn kary_expansion_vanishes_off_the_complex() {
        let complex = SimplicialComplex::from_maximal_faces(2, &[vec![1], vec![2]]).unwrap();
        let algebra = WeightedAlgebra::new(
            GeneratorSpec::spheres(&[2, 2]).unwrap(),
            PowerSequence::all_ones(2).unwrap(),
            complex,
            CoefficientRing::integers(),
        )
        .unwrap();
        let product = kary_generator_expansion(&algebra, &[(1, 0), (2, 0)]).unwrap();
        assert!(product.is_zero());
        let _ = face(&[1, 2]);
    }
}
