//! Kruskal–Katona bounds, compressed (colex) realizations and acyclic
//! f-vectors.

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::HomologyProfile;
use crate::sequence::{binomial, FVector};

/// `a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)` with
/// `a_i > a_{i-1} > ... > a_j >= j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacaulayRep {
    pub index: u64,
    /// `(a_k, k)` pairs, `k` decreasing from `index`.
    pub terms: Vec<(u64, u64)>,
}

impl MacaulayRep {
    pub fn value(&self) -> u64 {
        self.terms.iter().map(|&(a, k)| binomial(a, k)).sum()
    }
}

/// The `i`-binomial representation of `a`, built greedily.
pub fn macaulay_rep(a: u64, i: u64) -> Result<MacaulayRep> {
    if a == 0 || i == 0 {
        return Err(Error::InvalidParameters(format!(
            "Macaulay representation needs a >= 1 and i >= 1, got a={a}, i={i}"
        )));
    }
    let mut rest = a;
    let mut terms = Vec::new();
    let mut k = i;
    while rest > 0 && k > 0 {
        let mut top = k;
        while binomial(top + 1, k) <= rest {
            top += 1;
        }
        rest -= binomial(top, k);
        terms.push((top, k));
        k -= 1;
    }
    Ok(MacaulayRep { index: i, terms })
}

/// Least number of `(i-1)`-subsets in the shadow of `a` distinct `i`-subsets.
pub fn kk_lower_shadow_min(a: u64, i: u64) -> u64 {
    match macaulay_rep(a, i) {
        Ok(rep) => rep.terms.iter().map(|&(a, k)| binomial(a, k - 1)).sum(),
        Err(_) => 0,
    }
}

/// Whether `f` is the f-vector of some simplicial complex.
pub fn kk_valid(f: &FVector) -> bool {
    let e = f.entries();
    e.iter().all(|&x| x > 0)
        && e.windows(2)
            .enumerate()
            .all(|(i, w)| w[0] >= kk_lower_shadow_min(w[1], i as u64 + 2))
}

// k-subsets of 0..n in increasing bit order, which is colex order
fn colex_subsets(k: u32, count: u64) -> impl Iterator<Item = u128> {
    let first: u128 = if k == 0 { 0 } else { (1u128 << k) - 1 };
    std::iter::successors(Some(first), move |&x| {
        if x == 0 {
            return None;
        }
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        Some((((r ^ x) >> 2) / c) | r)
    })
    .take(count as usize)
}

/// The compressed complex whose `i`-faces are the first `f_i` subsets of
/// size `i+1` in colex order, on `f_0` vertices.
pub fn colex_complex(f: &FVector) -> Result<SimplicialComplex> {
    if !kk_valid(f) {
        return Err(Error::InvalidFVector(format!("{f} violates Kruskal-Katona")));
    }
    let n = f.at(0) as usize;
    if n > Face::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: n,
            max: Face::MAX_VERTICES,
        });
    }
    let mut faces = vec![Face::EMPTY];
    for (i, &count) in f.entries().iter().enumerate() {
        faces.extend(colex_subsets(i as u32 + 1, count).map(Face::from_bits));
    }
    SimplicialComplex::from_faces(n, faces)
}

/// The unique candidate `f'` with `f_i = f'_i + f'_{i-1}`, returned when it
/// is the f-vector of a complex of dimension one less.
pub fn kalai_decompose(f: &FVector) -> Option<FVector> {
    let d = f.len();
    let mut prev: i128 = 1;
    let mut out = Vec::with_capacity(d);
    for &x in f.entries() {
        let next = i128::from(x) - prev;
        out.push(next);
        prev = next;
    }
    // f'_{d-1} = 0, where f'_{-1} = 1 counts as the d = 0 case
    if prev != 0 || d == 0 {
        return None;
    }
    out.pop();
    if out.iter().any(|&x| x <= 0) {
        return None;
    }
    let candidate = FVector::new(out.into_iter().map(|x| x as u64).collect()).ok()?;
    kk_valid(&candidate).then_some(candidate)
}

/// A cone over the colex realization of the Kalai decomposition of `f`.
pub fn realize_acyclic(f: &FVector) -> Result<SimplicialComplex> {
    let base = kalai_decompose(f)
        .ok_or_else(|| Error::InvalidFVector(format!("{f} is not the f-vector of an acyclic complex")))?;
    colex_complex(&base)?.cone(1)
}

/// `f'_i = f_i + dim H̃_{i-1}(Δ)`, where `h` is indexed from degree -1 up to
/// `dim Δ`.
pub fn bjorner_kalai_lift(f: &FVector, h: &HomologyProfile) -> Result<FVector> {
    if h.dims().len() != f.len() + 1 {
        return Err(Error::LengthMismatch(format!(
            "f-vector {f} has {} entries but homology profile has {}",
            f.len(),
            h.dims().len()
        )));
    }
    let entries = (0..=f.len() as i64).map(|i| f.at(i) + h.get(i - 1)).collect();
    Ok(FVector::trimmed(entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{is_acyclic, reduced_homology, FieldSelector};

    fn fv(e: &[u64]) -> FVector {
        FVector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn macaulay_examples() {
        let rep = macaulay_rep(6, 3).unwrap();
        assert_eq!(rep.terms, vec![(4, 3), (2, 2), (1, 1)]);
        assert_eq!(rep.value(), 6);
        assert_eq!(macaulay_rep(1, 1).unwrap().terms, vec![(1, 1)]);
        assert!(macaulay_rep(0, 2).is_err());
    }

    #[test]
    fn shadows() {
        assert_eq!(kk_lower_shadow_min(2, 4), 7);
        assert_eq!(kk_lower_shadow_min(0, 3), 0);
        assert_eq!(kk_lower_shadow_min(6, 3), 9);
    }

    #[test]
    fn kruskal_katona() {
        assert!(!kk_valid(&fv(&[6, 9, 6, 2])));
        assert!(kk_valid(&fv(&[14, 21, 14, 6])));
        assert!(kk_valid(&fv(&[2, 1])));
        assert!(kk_valid(&FVector::default()));
    }

    #[test]
    fn colex_realizations() {
        let c = colex_complex(&fv(&[3, 3, 1])).unwrap();
        assert_eq!(c, SimplicialComplex::simplex(3));
        let c = colex_complex(&fv(&[3, 2])).unwrap();
        let edges: Vec<u128> = c.faces_of_dim(1).iter().map(|f| f.bits()).collect();
        assert_eq!(edges, vec![0b011, 0b101]);
        let f = fv(&[14, 21, 14, 6]);
        assert_eq!(colex_complex(&f).unwrap().f_vector().unwrap(), f);
        assert!(colex_complex(&fv(&[6, 9, 6, 2])).is_err());
    }

    #[test]
    fn kalai() {
        assert_eq!(kalai_decompose(&fv(&[6, 9, 6, 2])), None);
        assert_eq!(kalai_decompose(&fv(&[14, 21, 14, 6])), None);
        assert_eq!(kalai_decompose(&fv(&[4, 6, 4, 1])), Some(fv(&[3, 3, 1])));
        assert_eq!(kalai_decompose(&fv(&[2, 1])), Some(fv(&[1])));
        assert_eq!(kalai_decompose(&fv(&[1])), Some(FVector::default()));
        assert_eq!(kalai_decompose(&FVector::default()), None);
        // zero then positive
        assert_eq!(kalai_decompose(&fv(&[1, 1])), None);
    }

    #[test]
    fn acyclic_realizations() {
        assert_eq!(realize_acyclic(&fv(&[2, 1])).unwrap().f_vector().unwrap(), fv(&[2, 1]));
        assert_eq!(realize_acyclic(&fv(&[4, 6, 4, 1])).unwrap(), SimplicialComplex::simplex(4));
        let c = realize_acyclic(&fv(&[7, 12, 7, 1])).unwrap();
        assert_eq!(c.f_vector().unwrap(), fv(&[7, 12, 7, 1]));
        assert!(is_acyclic(&c, FieldSelector::Rationals).unwrap());
        assert!(is_acyclic(&c, FieldSelector::Prime(2)).unwrap());
    }

    #[test]
    fn lifts() {
        let circle = SimplicialComplex::from_facets(3, [0b011, 0b110, 0b101].map(Face::from_bits)).unwrap();
        let h = reduced_homology(&circle, FieldSelector::Rationals).unwrap();
        assert_eq!(bjorner_kalai_lift(&circle.f_vector().unwrap(), &h).unwrap(), fv(&[3, 3, 1]));
        let two = SimplicialComplex::from_facets(2, [Face::singleton(0), Face::singleton(1)]).unwrap();
        let h = reduced_homology(&two, FieldSelector::Rationals).unwrap();
        assert_eq!(bjorner_kalai_lift(&fv(&[2]), &h).unwrap(), fv(&[2, 1]));
        let simplex = SimplicialComplex::simplex(3);
        let h = reduced_homology(&simplex, FieldSelector::Rationals).unwrap();
        assert_eq!(bjorner_kalai_lift(&fv(&[3, 3, 1]), &h).unwrap(), fv(&[3, 3, 1]));
        assert!(bjorner_kalai_lift(&fv(&[3, 3]), &h).is_err());
    }
}
