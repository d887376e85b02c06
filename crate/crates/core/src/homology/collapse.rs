//! Strong collapses: deleting a vertex whose link is a cone (every facet
//! through `v` also contains some other `w`) preserves the homotopy type.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

use super::{reduced_homology, FieldSelector, HomologyProfile};

fn maximalize(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.graded_key()));
    faces.dedup();
    let mut out: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !out.iter().any(|g| f.is_subset(*g)) {
            out.push(f);
        }
    }
    out
}

/// Repeatedly removes dominated vertices from the complex generated by
/// `facets`; returns the facets of the core.
pub fn strong_collapse(facets: &[Face]) -> Vec<Face> {
    let mut facets = maximalize(facets.to_vec());
    'outer: loop {
        let vertices = facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        for v in vertices.vertices() {
            let common = facets
                .iter()
                .filter(|f| f.contains(v))
                .fold(vertices, |acc, f| acc.intersection(*f));
            if common.len() > 1 {
                facets = maximalize(facets.iter().map(|f| f.without(v)).collect());
                continue 'outer;
            }
        }
        return facets;
    }
}

/// Reduced homology of the complex generated by `facets`, computed on its
/// strong-collapse core and padded back to the original dimension.
pub fn reduced_homology_of_facets(facets: &[Face], field: FieldSelector) -> Result<HomologyProfile> {
    let Some(dim) = facets.iter().map(|f| f.dim()).max() else {
        return Err(Error::VoidComplex);
    };
    let core = strong_collapse(facets);
    let n = core
        .iter()
        .filter_map(|f| f.max_vertex())
        .max()
        .map_or(0, |m| m + 1);
    let complex = SimplicialComplex::from_facets(n, core)?.compacted();
    let mut dims = reduced_homology(&complex, field)?.dims().to_vec();
    dims.resize((dim + 2) as usize, 0);
    Ok(HomologyProfile::from_dims(dims))
}
