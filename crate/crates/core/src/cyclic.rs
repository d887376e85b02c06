//! Even-dimensional cyclic polytopes: Betti numbers of the Stanley–Reisner
//! ideal of the boundary, the boundary complex itself, and a recursive
//! complex whose f-vector is that Betti sequence.

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::sequence::{binomial_signed, BettiSequence};

/// `C(v, d)` with `d = 2d'` even and `v > d >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicParams {
    pub v: usize,
    pub d: usize,
}

impl CyclicParams {
    pub fn new(v: usize, d: usize) -> Result<Self> {
        if d < 2 || !d.is_multiple_of(2) {
            return Err(Error::InvalidParameters(format!("d = {d} must be even and at least 2")));
        }
        if v <= d {
            return Err(Error::InvalidParameters(format!("need v > d, got v = {v}, d = {d}")));
        }
        Ok(CyclicParams { v, d })
    }

    pub fn half(&self) -> usize {
        self.d / 2
    }
}

/// `β_i = C(v-d'-1, d'+i+1) C(d'+i, d') + C(v-d'-1, i) C(v-d'-i-2, d')`
/// for `i < v-2d'-1`, and `β_{v-2d'-1} = 1`.
pub fn cyclic_betti(v: usize, d: usize) -> Result<BettiSequence> {
    let p = CyclicParams::new(v, d)?;
    let (v, h) = (p.v as i64, p.half() as i64);
    let top = v - 2 * h - 1;
    let mut beta: Vec<u64> = (0..top)
        .map(|i| {
            binomial_signed(v - h - 1, h + i + 1) * binomial_signed(h + i, h)
                + binomial_signed(v - h - 1, i) * binomial_signed(v - h - i - 2, h)
        })
        .collect();
    beta.push(1);
    BettiSequence::new(beta)
}

fn gale_even(s: u128, v: usize) -> bool {
    let mut last_gap: Option<usize> = None;
    let mut between = 0;
    for x in 0..v {
        if s >> x & 1 == 1 {
            between += 1;
        } else {
            if last_gap.is_some() && between % 2 == 1 {
                return false;
            }
            last_gap = Some(x);
            between = 0;
        }
    }
    true
}

/// Boundary complex of `C(v, d)`: facets are the `d`-subsets of `0..v`
/// satisfying Gale's evenness condition.
pub fn gale_boundary_complex(v: usize, d: usize) -> Result<SimplicialComplex> {
    if d < 2 || v <= d {
        return Err(Error::InvalidParameters(format!("need v > d >= 2, got v = {v}, d = {d}")));
    }
    if v > Face::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: v,
            max: Face::MAX_VERTICES,
        });
    }
    let facets = (0u128..1u128 << v)
        .filter(|s| s.count_ones() as usize == d && gale_even(*s, v))
        .map(Face::from_bits);
    SimplicialComplex::from_facets(v, facets)
}

/// A complex `Γ(v, d)` with `f(Γ(v, d)) = β(I_{∂C(v,d)})`.
pub fn realize_cyclic(v: usize, d: usize) -> Result<SimplicialComplex> {
    CyclicParams::new(v, d)?;
    build(v, d)
}

fn build(v: usize, d: usize) -> Result<SimplicialComplex> {
    let out = if v == d + 1 {
        SimplicialComplex::simplex(1)
    } else if v == d + 2 {
        SimplicialComplex::simplex(2)
    } else if d == 2 {
        // cone over Γ(v-1) with apex x0, plus the simplex on x0..x_{v-3}
        // without its top face and the facet opposite x0
        let prev = build(v - 1, 2)?;
        let x0 = prev.vertex_count();
        let n = x0 + v - 2;
        let top = Face::full(n).difference(Face::full(x0));
        let simplex = SimplicialComplex::from_facets(n, [top])?
            .without_faces(&[top, top.without(x0)])?;
        prev.cone_with_apex(x0)?.union(&simplex)
    } else {
        let sharp = build(v - 1, d)?;
        let ns = sharp.vertex_count();
        let flat = build(v - 2, d - 2)?;
        let flat = flat.shifted(ns, ns + flat.vertex_count())?;
        let top = flat.dimension().unwrap_or(-1);
        let f = match flat.faces_of_dim(top) {
            [f] => *f,
            tops => {
                return Err(Error::ConstructionInvariant(format!(
                    "Γ({}, {}) has {} faces of top dimension",
                    v - 2,
                    d - 2,
                    tops.len()
                )))
            }
        };
        let y0 = flat
            .vertex_set()
            .difference(f)
            .vertices()
            .next()
            .or_else(|| f.vertices().next())
            .expect("Γ♭ has a vertex");
        let mut trimmed = None;
        let mut candidates: Vec<Face> = f.vertices().map(|x| f.without(x)).collect();
        candidates.sort_unstable_by_key(|g| g.bits());
        for g in candidates {
            if let Ok(c) = flat.without_faces(&[f, g]) {
                trimmed = Some(c);
                break;
            }
        }
        let trimmed = trimmed.ok_or_else(|| {
            Error::ConstructionInvariant("no facet of F can be removed".into())
        })?;
        sharp.cone_with_apex(y0)?.union(&trimmed)
    };
    let expected = cyclic_betti(v, d)?;
    let got = out.f_vector()?;
    if got.entries() != expected.entries() {
        return Err(Error::ConstructionInvariant(format!(
            "Γ({v}, {d}) has f-vector {got}, expected {expected}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{hochster_betti, FieldSelector};
    use crate::ideal::stanley_reisner_ideal;

    #[test]
    fn formula_examples() {
        assert_eq!(cyclic_betti(7, 2).unwrap().entries(), &[14, 35, 35, 14, 1]);
        assert_eq!(cyclic_betti(6, 4).unwrap().entries(), &[2, 1]);
        assert_eq!(cyclic_betti(5, 2).unwrap().entries(), &[5, 5, 1]);
        assert_eq!(cyclic_betti(5, 4).unwrap().entries(), &[1]);
        assert!(cyclic_betti(7, 3).is_err());
        assert!(cyclic_betti(4, 4).is_err());
    }

    #[test]
    fn gale_complexes() {
        let square = gale_boundary_complex(4, 2).unwrap();
        assert_eq!(square.facets().len(), 4);
        assert_eq!(square.f_vector().unwrap().entries(), &[4, 4]);
        let hept = gale_boundary_complex(7, 2).unwrap();
        let beta = hochster_betti(&stanley_reisner_ideal(&hept), FieldSelector::Rationals).unwrap();
        assert_eq!(beta.entries(), &[14, 35, 35, 14, 1]);
        let c64 = gale_boundary_complex(6, 4).unwrap();
        let beta = hochster_betti(&stanley_reisner_ideal(&c64), FieldSelector::Rationals).unwrap();
        assert_eq!(beta.entries(), &[2, 1]);
    }

    #[test]
    fn realizations() {
        for (v, d) in [(5, 2), (7, 2), (8, 4), (9, 6), (10, 4)] {
            let c = realize_cyclic(v, d).unwrap();
            assert_eq!(c.f_vector().unwrap().entries(), cyclic_betti(v, d).unwrap().entries());
            assert!(c.is_downward_closed());
        }
    }
}
