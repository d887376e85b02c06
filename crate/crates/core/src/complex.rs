//! Simplicial complexes stored as an explicit, sorted family of faces.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::FVector;

/// A vertex subset as a fixed-width bit pattern.
///
/// For subsets of equal size, numeric order of the bit patterns is
/// colexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u128);

impl Face {
    pub const MAX_VERTICES: usize = 128;
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < Self::MAX_VERTICES);
        Face(1u128 << v)
    }

    /// Panics if a vertex is `>= 128`; use [`Face::try_from_vertices`] for
    /// untrusted input.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices
            .into_iter()
            .fold(Face::EMPTY, |acc, v| acc.with(v))
    }

    pub fn try_from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut acc = Face::EMPTY;
        for v in vertices {
            if v >= Self::MAX_VERTICES {
                return Err(Error::TooManyVertices {
                    got: v + 1,
                    max: Self::MAX_VERTICES,
                });
            }
            acc = acc.with(v);
        }
        Ok(acc)
    }

    /// The full vertex set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES);
        if n == Self::MAX_VERTICES {
            Face(u128::MAX)
        } else {
            Face((1u128 << n) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `len - 1`; the empty face has dimension -1.
    pub fn dim(self) -> i64 {
        self.len() as i64 - 1
    }

    pub fn contains(self, v: usize) -> bool {
        v < Self::MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | 1u128 << v)
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u128 << v))
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// All subsets of this face, including itself and the empty face.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let mask = self.0;
        let mut next = Some(mask);
        std::iter::from_fn(move || {
            let cur = next?;
            next = (cur != 0).then(|| (cur - 1) & mask);
            Some(Face(cur))
        })
    }

    /// Sort key putting smaller faces first, colex within a size.
    pub fn graded_key(self) -> (u32, u128) {
        (self.0.count_ones(), self.0)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

/// A downward-closed family of faces on the vertex range `0..vertex_count`.
///
/// The void complex (no faces) and the empty complex (`{∅}`) are distinct.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    // sorted by `Face::graded_key`
    faces: Vec<Face>,
}

fn check_vertex_count(n: usize) -> Result<()> {
    if n > Face::MAX_VERTICES {
        Err(Error::TooManyVertices {
            got: n,
            max: Face::MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

impl SimplicialComplex {
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: Vec::new(),
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: vec![Face::EMPTY],
        }
    }

    /// The full simplex on `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_facets(n, [Face::full(n)]).expect("simplex vertices in range")
    }

    /// Downward closure of `facets`; duplicate and contained facets are
    /// absorbed. An empty facet list gives the void complex.
    pub fn from_facets<I: IntoIterator<Item = Face>>(vertex_count: usize, facets: I) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        let ambient = Face::full(vertex_count);
        let mut seen: HashSet<Face> = HashSet::new();
        for facet in facets {
            if !facet.is_subset(ambient) {
                let vertex = facet.difference(ambient).vertices().next().unwrap_or(0);
                return Err(Error::VertexOutOfRange {
                    vertex,
                    vertex_count,
                });
            }
            if seen.contains(&facet) {
                continue;
            }
            for sub in facet.subsets() {
                seen.insert(sub);
            }
        }
        Ok(Self::from_sorted(vertex_count, seen.into_iter().collect()))
    }

    /// Builds from an explicit face family, verifying downward closure.
    pub fn from_faces<I: IntoIterator<Item = Face>>(vertex_count: usize, faces: I) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        let ambient = Face::full(vertex_count);
        let mut faces: Vec<Face> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.is_subset(ambient)) {
            return Err(Error::VertexOutOfRange {
                vertex: bad.difference(ambient).vertices().next().unwrap_or(0),
                vertex_count,
            });
        }
        faces.sort_unstable_by_key(|f| f.graded_key());
        faces.dedup();
        let complex = SimplicialComplex {
            vertex_count,
            faces,
        };
        if !complex.is_downward_closed() {
            return Err(Error::ConstructionInvariant(
                "face family is not downward closed".into(),
            ));
        }
        Ok(complex)
    }

    fn from_sorted(vertex_count: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable_by_key(|f| f.graded_key());
        faces.dedup();
        SimplicialComplex {
            vertex_count,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.faces
            .binary_search_by_key(&face.graded_key(), |f| f.graded_key())
            .is_ok()
    }

    /// Faces of dimension `dim` in colex order.
    pub fn faces_of_dim(&self, dim: i64) -> &[Face] {
        if dim < -1 {
            return &[];
        }
        let size = (dim + 1) as u32;
        let lo = self.faces.partition_point(|f| f.0.count_ones() < size);
        let hi = self.faces.partition_point(|f| f.0.count_ones() <= size);
        &self.faces[lo..hi]
    }

    /// Dimension of the largest face; `None` for the void complex.
    pub fn dimension(&self) -> Option<i64> {
        self.faces.last().map(|f| f.dim())
    }

    /// Union of all vertices that are faces.
    pub fn vertex_set(&self) -> Face {
        self.faces_of_dim(0)
            .iter()
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn facets(&self) -> Vec<Face> {
        let mut facets: Vec<Face> = Vec::new();
        for &f in self.faces.iter().rev() {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort_unstable_by_key(|f| f.graded_key());
        facets
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let Some(dim) = self.dimension() else {
            return Err(Error::VoidComplex);
        };
        let entries = (0..=dim).map(|i| self.faces_of_dim(i).len() as u64).collect();
        FVector::new(entries)
    }

    /// Checks that every codimension-one subface of every face is present,
    /// which implies full downward closure.
    pub fn is_downward_closed(&self) -> bool {
        self.faces
            .iter()
            .all(|f| f.vertices().all(|v| self.contains(f.without(v))))
    }

    /// `cone^t(Δ)` with apexes `vertex_count, ..., vertex_count + t - 1`.
    pub fn cone(&self, t: usize) -> Result<Self> {
        let mut out = self.clone();
        for _ in 0..t {
            let apex = out.vertex_count;
            out = out.cone_with_apex(apex)?;
        }
        Ok(out)
    }

    /// `{apex} * Δ`. The apex must not be a vertex of any face; the ambient
    /// range grows to include it.
    pub fn cone_with_apex(&self, apex: usize) -> Result<Self> {
        let vertex_count = self.vertex_count.max(apex + 1);
        check_vertex_count(vertex_count)?;
        if self.faces.iter().any(|f| f.contains(apex)) {
            return Err(Error::ConstructionInvariant(format!(
                "cone apex {apex} is already a vertex"
            )));
        }
        let mut faces = self.faces.clone();
        faces.extend(self.faces.iter().map(|f| f.with(apex)));
        Ok(Self::from_sorted(vertex_count, faces))
    }

    /// Set union of faces on the larger of the two ambient ranges.
    pub fn union(&self, other: &SimplicialComplex) -> Self {
        let mut faces = self.faces.clone();
        faces.extend_from_slice(&other.faces);
        Self::from_sorted(self.vertex_count.max(other.vertex_count), faces)
    }

    /// `Δ_U`: faces contained in `subset`, on the same ambient range.
    pub fn induced(&self, subset: Face) -> Self {
        SimplicialComplex {
            vertex_count: self.vertex_count,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| f.is_subset(subset))
                .collect(),
        }
    }

    /// Link of `face`: `{G : G ∩ F = ∅, G ∪ F ∈ Δ}`; void if `face ∉ Δ`.
    pub fn link(&self, face: Face) -> Self {
        SimplicialComplex {
            vertex_count: self.vertex_count,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|g| g.intersection(face).is_empty() && self.contains(g.union(face)))
                .collect(),
        }
    }

    /// Renames vertex `v` to `map(v)`. The map must be injective on the
    /// vertices in use.
    pub fn relabel(&self, vertex_count: usize, map: impl Fn(usize) -> usize) -> Result<Self> {
        check_vertex_count(vertex_count)?;
        let mut faces = Vec::with_capacity(self.faces.len());
        for f in &self.faces {
            let g = Face::try_from_vertices(f.vertices().map(&map))?;
            if g.len() != f.len() || !g.is_subset(Face::full(vertex_count)) {
                return Err(Error::ConstructionInvariant(
                    "relabelling is not injective into the target range".into(),
                ));
            }
            faces.push(g);
        }
        Ok(Self::from_sorted(vertex_count, faces))
    }

    /// Shifts every vertex up by `offset`.
    pub fn shifted(&self, offset: usize, vertex_count: usize) -> Result<Self> {
        self.relabel(vertex_count, |v| v + offset)
    }

    /// Removes the given faces and checks that the rest is still a complex.
    pub fn without_faces(&self, removed: &[Face]) -> Result<Self> {
        for f in removed {
            if !self.contains(*f) {
                return Err(Error::ConstructionInvariant(format!(
                    "face {f:?} to be removed is not present"
                )));
            }
        }
        let out = SimplicialComplex {
            vertex_count: self.vertex_count,
            faces: self
                .faces
                .iter()
                .copied()
                .filter(|f| !removed.contains(f))
                .collect(),
        };
        if out.is_downward_closed() {
            Ok(out)
        } else {
            Err(Error::ConstructionInvariant(
                "removing the faces breaks downward closure".into(),
            ))
        }
    }

    /// Renumbers the vertices in use to `0..k` preserving order.
    pub fn compacted(&self) -> Self {
        let used: Vec<usize> = self
            .faces
            .iter()
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
            .vertices()
            .collect();
        let mut index = vec![usize::MAX; self.vertex_count.max(1)];
        for (k, &v) in used.iter().enumerate() {
            index[v] = k;
        }
        self.relabel(used.len(), |v| index[v])
            .expect("compaction is injective")
    }

    /// Vertices contained in every facet.
    pub fn cone_points(&self) -> Face {
        let facets = self.facets();
        if facets.is_empty() {
            return Face::EMPTY;
        }
        facets
            .iter()
            .fold(Face::full(self.vertex_count), |acc, f| acc.intersection(*f))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("vertex_count", &self.vertex_count)
            .field("facets", &self.facets())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied())
    }

    fn brute_closure(n: usize, facets: &[Face]) -> Vec<Face> {
        (0u128..1 << n)
            .map(Face::from_bits)
            .filter(|s| facets.iter().any(|f| s.is_subset(*f)))
            .collect()
    }

    #[test]
    fn edge_closure() {
        let c = SimplicialComplex::from_facets(2, [face(&[0, 1])]).unwrap();
        assert_eq!(c.faces(), &[Face::EMPTY, face(&[0]), face(&[1]), face(&[0, 1])]);
        assert_eq!(c.f_vector().unwrap().entries(), &[2, 1]);
    }

    #[test]
    fn void_versus_empty() {
        let void = SimplicialComplex::from_facets(3, []).unwrap();
        assert!(void.is_void());
        assert_eq!(void.f_vector(), Err(Error::VoidComplex));
        let empty = SimplicialComplex::empty(3);
        assert_ne!(void, empty);
        assert!(empty.f_vector().unwrap().is_empty());
        assert_eq!(empty.dimension(), Some(-1));
    }

    #[test]
    fn triangle_plus_edge() {
        let facets = [face(&[0, 1, 2]), face(&[2, 3])];
        let c = SimplicialComplex::from_facets(4, facets).unwrap();
        assert_eq!(c.faces().len(), brute_closure(4, &facets).len());
        assert_eq!(c.f_vector().unwrap().entries(), &[4, 4, 1]);
    }

    #[test]
    fn out_of_range_facet() {
        assert!(matches!(
            SimplicialComplex::from_facets(2, [face(&[0, 2])]),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn cone_examples() {
        let point = SimplicialComplex::simplex(1);
        assert_eq!(point.cone(1).unwrap().f_vector().unwrap().entries(), &[2, 1]);
        assert_eq!(point.cone(0).unwrap(), point);
        // two triangles sharing the apex edge
        let two = SimplicialComplex::from_facets(2, [face(&[0]), face(&[1])]).unwrap();
        let coned = two.cone(2).unwrap();
        let expected = two.f_vector().unwrap().cone(2);
        assert_eq!(coned.f_vector().unwrap(), expected);
        assert_eq!(expected.entries(), &[4, 5, 2]);
        assert_eq!(coned.faces().len(), brute_closure(4, &coned.facets()).len());
    }

    #[test]
    fn union_examples() {
        let tri = SimplicialComplex::from_facets(4, [face(&[0, 1, 2])]).unwrap();
        assert_eq!(tri.union(&tri), tri);
        let a = SimplicialComplex::from_facets(2, [face(&[0])]).unwrap();
        let b = SimplicialComplex::from_facets(2, [face(&[1])]).unwrap();
        assert_eq!(a.union(&b).f_vector().unwrap().entries(), &[2]);
        let edge = SimplicialComplex::from_facets(4, [face(&[2, 3])]).unwrap();
        let u = tri.union(&edge);
        assert!(u.is_downward_closed());
        assert_eq!(u.f_vector().unwrap().entries(), &[4, 4, 1]);
    }

    #[test]
    fn induced_examples() {
        let three = SimplicialComplex::from_facets(3, [face(&[0]), face(&[1]), face(&[2])]).unwrap();
        assert_eq!(three.induced(Face::full(3)), three);
        assert_eq!(three.induced(Face::EMPTY), SimplicialComplex::empty(3));
        assert_eq!(three.induced(face(&[0, 2])).f_vector().unwrap().entries(), &[2]);
    }

    #[test]
    fn removing_faces_checks_closure() {
        let tri = SimplicialComplex::simplex(3);
        assert!(tri.without_faces(&[face(&[0, 1])]).is_err());
        let boundary = tri.without_faces(&[face(&[0, 1, 2])]).unwrap();
        assert_eq!(boundary.f_vector().unwrap().entries(), &[3, 3]);
    }

    #[test]
    fn colex_is_numeric_order() {
        let mut pairs: Vec<Face> = (0..4)
            .flat_map(|j| (0..j).map(move |i| face(&[i, j])))
            .collect();
        pairs.sort_by_key(|f| f.bits());
        assert_eq!(pairs[..3], [face(&[0, 1]), face(&[0, 2]), face(&[1, 2])]);
    }

    #[test]
    fn link_and_cone_points() {
        let tri = SimplicialComplex::simplex(3);
        let lk = tri.link(face(&[0]));
        assert_eq!(lk.f_vector().unwrap().entries(), &[2, 1]);
        assert_eq!(tri.cone_points(), Face::full(3));
        let bd = tri.without_faces(&[Face::full(3)]).unwrap();
        assert_eq!(bd.cone_points(), Face::EMPTY);
    }
}
