//! Simplices and simplicial complexes on the vertex set `[m] = {1, ..., m}`.
//!
//! Everything else in the crate is indexed by the face combinatorics provided
//! here: a [`Simplex`] is a sorted set of 1-based vertices (the empty simplex
//! is a valid face), and a [`SimplicialComplex`] is a downward-closed family
//! of faces on a fixed vertex universe. Ghost vertices are permitted: `{i}`
//! need not be a face even though `i <= m`.
//!
//! Faces always enumerate in (cardinality, lexicographic) order so that every
//! table, search and report in the crate is reproducible byte for byte.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex-universe size; full face tables have `2^m` entries.
pub const MAX_VERTICES: u32 = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {vertex} is out of range 1..={m}")]
    VertexOutOfRange { vertex: u32, m: u32 },
    #[error("duplicate vertex {vertex} within one face")]
    DuplicateVertex { vertex: u32 },
    #[error("vertex universe size {m} is not in 1..={MAX_VERTICES}")]
    UniverseSize { m: u32 },
    #[error("the boundary of the empty simplex is not defined")]
    BoundaryOfEmpty,
    #[error("{0} is not a subcomplex of the ambient complex")]
    NotASubcomplex(SimplicialComplex),
}

/// A face of `Delta^{m-1}`: a strictly increasing list of vertices from `1..=m`.
///
/// The empty simplex is a valid value, distinct from "absent".
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    /// The empty face.
    pub fn empty() -> Self {
        Simplex { vertices: Vec::new() }
    }

    /// Builds a simplex from an arbitrary vertex iterator; sorts and rejects
    /// duplicates and the invalid vertex `0`.
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Result<Self, ComplexError> {
        let mut vs: Vec<u32> = vertices.into_iter().collect();
        vs.sort_unstable();
        for pair in vs.windows(2) {
            if pair[0] == pair[1] {
                return Err(ComplexError::DuplicateVertex { vertex: pair[0] });
            }
        }
        if vs.first().is_some_and(|&v| v == 0) {
            return Err(ComplexError::VertexOutOfRange { vertex: 0, m: 0 });
        }
        Ok(Simplex { vertices: vs })
    }

    /// Builds a single-vertex simplex.
    pub fn vertex(v: u32) -> Self {
        Simplex { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.contains(*v))
    }

    pub fn intersects(&self, other: &Simplex) -> bool {
        self.vertices.iter().any(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut set: BTreeSet<u32> = self.vertices.iter().copied().collect();
        set.extend(other.vertices.iter().copied());
        Simplex { vertices: set.into_iter().collect() }
    }

    /// Vertices of `self` not in `other`.
    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex {
            vertices: self.vertices.iter().copied().filter(|v| !other.contains(*v)).collect(),
        }
    }

    /// All subsets of this face, in (cardinality, lexicographic) order.
    pub fn subsets(&self) -> Vec<Simplex> {
        let n = self.vertices.len();
        let mut out: Vec<Simplex> = (0u32..(1 << n))
            .map(|mask| Simplex {
                vertices: self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, v)| *v)
                    .collect(),
            })
            .collect();
        out.sort();
        out
    }

    /// All proper subsets, in (cardinality, lexicographic) order.
    pub fn proper_subsets(&self) -> Vec<Simplex> {
        let mut out = self.subsets();
        out.pop();
        out
    }

    /// Renders the face the way JSON object keys spell it, e.g. `[1,2]`.
    pub fn key_string(&self) -> String {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Parses the `[1,2]` key form produced by [`Simplex::key_string`].
    pub fn from_key_string(s: &str) -> Result<Self, ComplexError> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or(ComplexError::VertexOutOfRange { vertex: 0, m: 0 })?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Simplex::empty());
        }
        let mut vs = Vec::new();
        for part in inner.split(',') {
            let v: u32 = part
                .trim()
                .parse()
                .map_err(|_| ComplexError::VertexOutOfRange { vertex: 0, m: 0 })?;
            vs.push(v);
        }
        Simplex::new(vs)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key_string())
    }
}

/// Faces compare by (cardinality, lexicographic vertex order).
impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All `2^m` faces of `Delta^{m-1}`, in (cardinality, lexicographic) order.
pub fn all_faces(m: u32) -> Vec<Simplex> {
    let mut out: Vec<Simplex> = (0u32..(1u32 << m))
        .map(|mask| Simplex {
            vertices: (1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect(),
        })
        .collect();
    out.sort();
    out
}

/// A downward-closed set of faces on the vertex universe `[m]`.
///
/// The empty face is always a member. Vertices of `[m]` that appear in no
/// face are ghost vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplicialComplex {
    m: u32,
    faces: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    /// The downward closure of the listed faces, plus the empty face.
    pub fn from_maximal_faces(m: u32, maximal: &[Vec<u32>]) -> Result<Self, ComplexError> {
        check_universe(m)?;
        let mut faces = BTreeSet::new();
        faces.insert(Simplex::empty());
        for raw in maximal {
            let face = Simplex::new(raw.iter().copied())?;
            if let Some(&v) = face.vertices().iter().find(|&&v| v > m) {
                return Err(ComplexError::VertexOutOfRange { vertex: v, m });
            }
            for sub in face.subsets() {
                faces.insert(sub);
            }
        }
        Ok(SimplicialComplex { m, faces })
    }

    /// `Delta^{m-1}`: all `2^m` subsets of `[m]`.
    pub fn full_simplex(m: u32) -> Result<Self, ComplexError> {
        check_universe(m)?;
        Ok(SimplicialComplex { m, faces: all_faces(m).into_iter().collect() })
    }

    /// The boundary complex of a nonempty face: all its proper subsets,
    /// regarded on the universe `[m]`.
    pub fn boundary(m: u32, simplex: &Simplex) -> Result<Self, ComplexError> {
        check_universe(m)?;
        if simplex.is_empty() {
            return Err(ComplexError::BoundaryOfEmpty);
        }
        if let Some(&v) = simplex.vertices().iter().find(|&&v| v > m) {
            return Err(ComplexError::VertexOutOfRange { vertex: v, m });
        }
        Ok(SimplicialComplex { m, faces: simplex.proper_subsets().into_iter().collect() })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Faces in (cardinality, lexicographic) order.
    pub fn faces(&self) -> impl Iterator<Item = &Simplex> {
        self.faces.iter()
    }

    pub fn contains(&self, face: &Simplex) -> bool {
        self.faces.contains(face)
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.m == other.m && self.faces.iter().all(|f| other.contains(f))
    }

    /// The full subcomplex `K_I`: all faces of `K` with vertices inside `I`,
    /// kept on the same universe `[m]` (vertices outside `I` become ghosts).
    pub fn full_subcomplex(&self, vertex_set: &[u32]) -> Result<Self, ComplexError> {
        let selected = Simplex::new(vertex_set.iter().copied())?;
        if let Some(&v) = selected.vertices().iter().find(|&&v| v > self.m) {
            return Err(ComplexError::VertexOutOfRange { vertex: v, m: self.m });
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| f.is_subset_of(&selected))
            .cloned()
            .collect();
        Ok(SimplicialComplex { m: self.m, faces })
    }

    /// The maximal faces, i.e. faces contained in no strictly larger face.
    pub fn maximal_faces(&self) -> Vec<Simplex> {
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces
                    .iter()
                    .any(|g| g.len() > f.len() && f.is_subset_of(g))
            })
            .cloned()
            .collect()
    }

    /// True when the complex is the downward closure of one face, i.e.
    /// `K = sigma` for a single simplex `sigma` (ghost vertices allowed).
    pub fn as_single_simplex(&self) -> Option<Simplex> {
        let maximal = self.maximal_faces();
        match maximal.as_slice() {
            [only] => Some(only.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.faces.iter().map(|s| s.key_string()).collect();
        write!(f, "complex(m={}, faces={{{}}})", self.m, parts.join(", "))
    }
}

fn check_universe(m: u32) -> Result<(), ComplexError> {
    if m == 0 || m > MAX_VERTICES {
        return Err(ComplexError::UniverseSize { m });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(vs: &[u32]) -> Simplex {
        Simplex::new(vs.iter().copied()).unwrap()
    }

    #[test]
    fn closure_of_two_edges() {
        let k = SimplicialComplex::from_maximal_faces(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let expected: Vec<Simplex> = [
            simplex(&[]),
            simplex(&[1]),
            simplex(&[2]),
            simplex(&[3]),
            simplex(&[1, 2]),
            simplex(&[2, 3]),
        ]
        .to_vec();
        assert_eq!(k.faces().cloned().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn full_simplex_face_counts() {
        assert_eq!(SimplicialComplex::full_simplex(1).unwrap().face_count(), 2);
        assert_eq!(SimplicialComplex::full_simplex(3).unwrap().face_count(), 8);
        assert_eq!(SimplicialComplex::full_simplex(5).unwrap().face_count(), 32);
        for m in 1..=10 {
            let k = SimplicialComplex::full_simplex(m).unwrap();
            assert_eq!(k.face_count(), 1 << m);
        }
    }

    #[test]
    fn ghost_vertices() {
        let k = SimplicialComplex::from_maximal_faces(4, &[vec![1, 2]]).unwrap();
        assert_eq!(k.face_count(), 4);
        assert!(!k.contains(&simplex(&[3])));
        assert!(!k.contains(&simplex(&[4])));
        assert!(k.contains(&simplex(&[1, 2])));
    }

    #[test]
    fn rejects_bad_vertices() {
        assert_eq!(
            SimplicialComplex::from_maximal_faces(3, &[vec![1, 4]]),
            Err(ComplexError::VertexOutOfRange { vertex: 4, m: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_maximal_faces(3, &[vec![2, 2]]),
            Err(ComplexError::DuplicateVertex { vertex: 2 })
        );
        assert!(SimplicialComplex::full_simplex(0).is_err());
        assert!(SimplicialComplex::full_simplex(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn boundary_faces() {
        let b = SimplicialComplex::boundary(3, &simplex(&[1, 2])).unwrap();
        assert_eq!(
            b.faces().cloned().collect::<Vec<_>>(),
            vec![simplex(&[]), simplex(&[1]), simplex(&[2])]
        );
        assert_eq!(SimplicialComplex::boundary(3, &simplex(&[1, 2, 3])).unwrap().face_count(), 7);
        assert_eq!(
            SimplicialComplex::boundary(3, &simplex(&[2])).unwrap().faces().cloned().collect::<Vec<_>>(),
            vec![simplex(&[])]
        );
        assert_eq!(
            SimplicialComplex::boundary(3, &Simplex::empty()),
            Err(ComplexError::BoundaryOfEmpty)
        );
    }

    #[test]
    fn full_subcomplex_examples() {
        let full = SimplicialComplex::full_simplex(3).unwrap();
        let restricted = full.full_subcomplex(&[1, 3]).unwrap();
        assert_eq!(
            restricted.faces().cloned().collect::<Vec<_>>(),
            vec![simplex(&[]), simplex(&[1]), simplex(&[3]), simplex(&[1, 3])]
        );

        let path = SimplicialComplex::from_maximal_faces(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        let ends = path.full_subcomplex(&[1, 3]).unwrap();
        assert_eq!(
            ends.faces().cloned().collect::<Vec<_>>(),
            vec![simplex(&[]), simplex(&[1]), simplex(&[3])]
        );

        let trivial = path.full_subcomplex(&[]).unwrap();
        assert_eq!(trivial.faces().cloned().collect::<Vec<_>>(), vec![simplex(&[])]);
    }

    #[test]
    fn nested_full_subcomplexes_compose() {
        let k = SimplicialComplex::from_maximal_faces(4, &[vec![1, 2, 3], vec![2, 4]]).unwrap();
        let j = vec![1, 2, 4];
        let i = vec![2, 4];
        let via_j = k.full_subcomplex(&j).unwrap().full_subcomplex(&i).unwrap();
        let direct = k.full_subcomplex(&i).unwrap();
        assert_eq!(via_j, direct);
        let everything: Vec<u32> = (1..=4).collect();
        assert_eq!(k.full_subcomplex(&everything).unwrap(), k);
    }

    #[test]
    fn closure_is_idempotent() {
        let k = SimplicialComplex::from_maximal_faces(4, &[vec![1, 2, 3], vec![3, 4]]).unwrap();
        let faces: Vec<Vec<u32>> = k.faces().map(|f| f.vertices().to_vec()).collect();
        let again = SimplicialComplex::from_maximal_faces(4, &faces).unwrap();
        assert_eq!(k, again);
    }

    #[test]
    fn face_ordering_is_cardinality_then_lex() {
        let faces = all_faces(3);
        let keys: Vec<String> = faces.iter().map(|f| f.key_string()).collect();
        assert_eq!(
            keys,
            vec!["[]", "[1]", "[2]", "[3]", "[1,2]", "[1,3]", "[2,3]", "[1,2,3]"]
        );
    }

    #[test]
    fn key_string_round_trip() {
        for face in all_faces(4) {
            assert_eq!(Simplex::from_key_string(&face.key_string()).unwrap(), face);
        }
        assert!(Simplex::from_key_string("nonsense").is_err());
    }

    #[test]
    fn maximal_faces_and_single_simplex() {
        let k = SimplicialComplex::from_maximal_faces(3, &[vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(k.maximal_faces(), vec![simplex(&[1, 2]), simplex(&[2, 3])]);
        assert_eq!(k.as_single_simplex(), None);

        let sigma = SimplicialComplex::from_maximal_faces(4, &[vec![1, 3, 4]]).unwrap();
        assert_eq!(sigma.as_single_simplex(), Some(simplex(&[1, 3, 4])));
    }
}
