//! Deterministic structure-constant tables: comparison and CSV export.

use std::fmt::Write as _;

use num_rational::BigRational;

use super::AlgebraError;

/// A complete multiplication table over a finite graded basis.
///
/// Rows and columns are basis ids in the owning algebra's canonical order;
/// each product is a sorted list of `(basis id, coefficient)` terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    labels: Vec<String>,
    degrees: Vec<u32>,
    products: Vec<Vec<Vec<(usize, BigRational)>>>,
}

impl StructureTable {
    pub(crate) fn from_products(
        labels: Vec<String>,
        degrees: Vec<u32>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, BigRational)>,
    ) -> Self {
        let n = labels.len();
        let products = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut terms = product(a, b);
                        terms.sort_by_key(|(id, _)| *id);
                        terms
                    })
                    .collect()
            })
            .collect();
        StructureTable { labels, degrees, products }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn product(&self, a: usize, b: usize) -> &[(usize, BigRational)] {
        &self.products[a][b]
    }

    /// Replaces one product cell. Exists so checkers can be validated
    /// against deliberately corrupted tables.
    pub fn override_product(&mut self, a: usize, b: usize, mut terms: Vec<(usize, BigRational)>) {
        terms.sort_by_key(|(id, _)| *id);
        self.products[a][b] = terms;
    }

    /// Two-block CSV: the basis legend, then every pairwise product.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("id,degree,label\n");
        for (id, (label, degree)) in self.labels.iter().zip(&self.degrees).enumerate() {
            let _ = writeln!(out, "{id},{degree},{label}");
        }
        out.push_str("left,right,terms\n");
        for a in 0..self.len() {
            for b in 0..self.len() {
                let terms = self.products[a][b]
                    .iter()
                    .map(|(id, coeff)| format!("{id}:{}", crate::json::format_rational(coeff)))
                    .collect::<Vec<_>>()
                    .join(" ");
                let _ = writeln!(out, "{a},{b},{terms}");
            }
        }
        out
    }
}

/// Outcome of comparing two tables under a basis correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub matched: bool,
    /// `(left id, right id, description)` for the first disagreement.
    pub first_mismatch: Option<(usize, usize, String)>,
}

impl MatchReport {
    fn ok() -> Self {
        MatchReport { matched: true, first_mismatch: None }
    }

    fn fail(a: usize, b: usize, description: String) -> Self {
        MatchReport { matched: false, first_mismatch: Some((a, b, description)) }
    }
}

/// Compares all pairwise basis products of `left` and `right` under the
/// bijection `correspondence[left id] = right id`.
///
/// Degree disagreement is a reported mismatch; a correspondence that is not
/// a bijection between the two bases is an error.
pub fn structure_constants_match(
    left: &StructureTable,
    right: &StructureTable,
    correspondence: &[usize],
) -> Result<MatchReport, AlgebraError> {
    if left.len() != right.len() || correspondence.len() != left.len() {
        return Err(AlgebraError::BadCorrespondence(format!(
            "sizes {} -> {} with {} assignments",
            left.len(),
            right.len(),
            correspondence.len()
        )));
    }
    let mut seen = vec![false; right.len()];
    for &target in correspondence {
        if target >= right.len() || seen[target] {
            return Err(AlgebraError::BadCorrespondence(format!(
                "target id {target} repeated or out of range"
            )));
        }
        seen[target] = true;
    }

    for (a, &ta) in correspondence.iter().enumerate() {
        if left.degrees[a] != right.degrees[ta] {
            return Ok(MatchReport::fail(
                a,
                a,
                format!(
                    "degree of {} is {} but degree of {} is {}",
                    left.labels[a], left.degrees[a], right.labels[ta], right.degrees[ta]
                ),
            ));
        }
    }

    for a in 0..left.len() {
        for b in 0..left.len() {
            let mut mapped: Vec<(usize, BigRational)> = left.products[a][b]
                .iter()
                .map(|(id, coeff)| (correspondence[*id], coeff.clone()))
                .collect();
            mapped.sort_by_key(|(id, _)| *id);
            let expected = &right.products[correspondence[a]][correspondence[b]];
            if &mapped != expected {
                let render = |terms: &[(usize, BigRational)], table: &StructureTable| {
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms
                            .iter()
                            .map(|(id, c)| {
                                format!("{}*{}", crate::json::format_rational(c), table.labels[*id])
                            })
                            .collect::<Vec<_>>()
                            .join(" + ")
                    }
                };
                return Ok(MatchReport::fail(
                    a,
                    b,
                    format!(
                        "{} * {} gives {} on the left but {} on the right",
                        left.labels[a],
                        left.labels[b],
                        render(&left.products[a][b], left),
                        render(expected, right)
                    ),
                ));
            }
        }
    }
    Ok(MatchReport::ok())
}
