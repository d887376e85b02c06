//! Reduced simplicial homology over a chosen field, Hochster's formula and
//! polarization: the ground truth every combinatorial formula in this crate
//! is checked against.

mod collapse;
mod field;
mod hochster;
mod rank;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

pub use collapse::{reduced_homology_of_facets, strong_collapse};
pub use field::FieldSelector;
pub use hochster::{
    alternating_sum_check, betti, betti_with, hochster_betti, hochster_betti_with, taylor_bound_holds,
    HochsterOptions, HochsterRoute, DEFAULT_VARIABLE_CAP,
};
pub use rank::rank;

/// `dim H̃_i(Δ; K)` for `i = -1, ..., dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    dims: Vec<u64>,
}

impl HomologyProfile {
    pub fn from_dims(dims: Vec<u64>) -> Self {
        HomologyProfile { dims }
    }

    /// Entries indexed from degree -1.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// `dim H̃_i`; zero outside the stored range.
    pub fn get(&self, i: i64) -> u64 {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }
}

/// Matrix of `∂_k: C_k → C_{k-1}` in the augmented oriented chain complex,
/// rows indexed by `(k-1)`-faces and columns by `k`-faces.
fn boundary_matrix(lower: &[Face], upper: &[Face]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (col, f) in upper.iter().enumerate() {
        for (j, v) in f.vertices().enumerate() {
            let row = lower
                .binary_search_by_key(&f.without(v).bits(), |g| g.bits())
                .expect("complex is downward closed");
            m[row][col] = if j % 2 == 0 { 1 } else { -1 };
        }
    }
    m
}

/// Reduced homology from ranks of the boundary maps:
/// `dim H̃_i = f_i − rank ∂_i − rank ∂_{i+1}` with `f_{-1} = 1`.
pub fn reduced_homology(complex: &SimplicialComplex, field: FieldSelector) -> Result<HomologyProfile> {
    let Some(dim) = complex.dimension() else {
        return Err(Error::VoidComplex);
    };
    // ranks[k + 1] = rank ∂_k for k = -1..=dim+1
    let mut ranks = vec![0usize; (dim + 3) as usize];
    for k in 0..=dim {
        let lower = complex.faces_of_dim(k - 1);
        let upper = complex.faces_of_dim(k);
        ranks[(k + 1) as usize] = rank(&boundary_matrix(lower, upper), field);
    }
    let dims = (-1..=dim)
        .map(|i| {
            let n = complex.faces_of_dim(i).len();
            (n - ranks[(i + 1) as usize] - ranks[(i + 2) as usize]) as u64
        })
        .collect();
    Ok(HomologyProfile { dims })
}

/// All reduced homology vanishes.
pub fn is_acyclic(complex: &SimplicialComplex, field: FieldSelector) -> Result<bool> {
    Ok(reduced_homology(complex, field)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    const QQ: FieldSelector = FieldSelector::Rationals;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| Face::from_vertices(f.iter().copied()))).unwrap()
    }

    #[test]
    fn point_and_circle() {
        let point = SimplicialComplex::simplex(1);
        assert!(reduced_homology(&point, QQ).unwrap().is_zero());
        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(reduced_homology(&circle, QQ).unwrap().dims(), &[0, 0, 1]);
    }

    #[test]
    fn pentagon_boundary() {
        let pentagon = complex(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        let h = reduced_homology(&pentagon, QQ).unwrap();
        assert_eq!(h.get(1), 1);
        assert_eq!(h.total(), 1);
    }

    #[test]
    fn empty_and_void() {
        let empty = SimplicialComplex::empty(2);
        assert_eq!(reduced_homology(&empty, QQ).unwrap().dims(), &[1]);
        assert_eq!(reduced_homology(&SimplicialComplex::void(2), QQ), Err(Error::VoidComplex));
    }

    #[test]
    fn acyclicity_examples() {
        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(!is_acyclic(&circle, QQ).unwrap());
        assert!(is_acyclic(&circle.cone(1).unwrap(), QQ).unwrap());
        let two_points = complex(2, &[&[0], &[1]]);
        assert_eq!(reduced_homology(&two_points, QQ).unwrap().get(0), 1);
        assert!(!is_acyclic(&two_points, QQ).unwrap());
    }

    #[test]
    fn projective_plane_torsion() {
        // 6-vertex RP^2: H̃_1 = Z/2 is invisible over QQ but shows over F2
        let rp2 = complex(
            6,
            &[
                &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[0, 4, 5], &[0, 1, 5],
                &[1, 2, 4], &[2, 3, 5], &[1, 3, 4], &[2, 4, 5], &[1, 3, 5],
            ],
        );
        assert!(reduced_homology(&rp2, QQ).unwrap().is_zero());
        let f2 = reduced_homology(&rp2, FieldSelector::Prime(2)).unwrap();
        assert_eq!(f2.get(1), 1);
        assert_eq!(f2.get(2), 1);
    }
}
