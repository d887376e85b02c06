//! Betti sequences of Gorenstein monomial ideals of small projective
//! dimension, witnesses for them, and a homological Gorenstein test for
//! Stanley–Reisner complexes.

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::cyclic::gale_boundary_complex;
use crate::error::{Error, Result};
use crate::fvector::{kalai_decompose, realize_acyclic};
use crate::homology::{reduced_homology, FieldSelector};
use crate::ideal::{stanley_reisner_ideal, MonomialIdeal};
use crate::sequence::{BettiSequence, FVector};

/// `(1, β_0, ..., β_p)` is a palindrome, i.e. `β_i = β_{p-1-i}` with
/// `β_{-1} = 1`.
pub fn betti_symmetric(beta: &BettiSequence) -> bool {
    if beta.is_empty() {
        return false;
    }
    let q = beta.quotient();
    q.iter().eq(q.iter().rev())
}

/// Checks that, after discarding cone points, every link (including the
/// whole complex as the link of the empty face) has the homology of a
/// sphere of its own dimension.
pub fn is_gorenstein_complex(complex: &SimplicialComplex, field: FieldSelector) -> Result<bool> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let core = complex.link(complex.cone_points()).compacted();
    for &face in core.faces() {
        let link = core.link(face);
        let dim = link.dimension().expect("link of a face is nonvoid");
        let h = reduced_homology(&link, field)?;
        if h.get(dim) != 1 || h.total() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A Gorenstein Betti shape of projective dimension `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinShape {
    pub p: usize,
    pub m: Option<u64>,
    pub betti: BettiSequence,
    /// Whether some Gorenstein monomial ideal has exactly this shape.
    pub realizable: bool,
    /// Kalai decomposition of the shape read as an f-vector.
    pub kalai: Option<FVector>,
}

/// `p = 1: (2,1)`; `p = 2: (m,m,1)`; `p = 3: (m+1,2m,m+1,1)`.
pub fn gorenstein_shape(p: usize, m: Option<u64>) -> Result<GorensteinShape> {
    let need_m = |min: u64| -> Result<u64> {
        match m {
            Some(m) if m >= min => Ok(m),
            _ => Err(Error::InvalidParameters(format!(
                "projective dimension {p} needs m >= {min}, got {m:?}"
            ))),
        }
    };
    let (betti, realizable) = match p {
        1 => (vec![2, 1], true),
        2 => {
            let m = need_m(3)?;
            (vec![m, m, 1], m % 2 == 1)
        }
        3 => {
            let m = need_m(3)?;
            (vec![m + 1, 2 * m, m + 1, 1], m != 4)
        }
        _ => {
            return Err(Error::InvalidParameters(format!(
                "shapes are classified only for p <= 3, got {p}"
            )))
        }
    };
    let betti = BettiSequence::new(betti)?;
    Ok(GorensteinShape {
        p,
        m: if p == 1 { None } else { m },
        kalai: kalai_decompose(&betti.as_fvector()),
        betti,
        realizable,
    })
}

pub fn gorenstein_p3_shape(m: u64) -> Result<GorensteinShape> {
    gorenstein_shape(3, Some(m))
}

/// Whether a Gorenstein monomial ideal with `β_0 = m` and projective
/// dimension `p` exists: `m >= p + 1` and `m != p + 2`.
pub fn admissible(m: u64, p: u64) -> Result<bool> {
    if m < 4 || p < 3 {
        return Err(Error::InvalidParameters(format!(
            "admissibility is stated for m >= 4 and p >= 3, got m = {m}, p = {p}"
        )));
    }
    Ok(m > p && m != p + 2)
}

/// `(x1x4, x1x5, x2x6, x3x7, x4x6, x4x7, x2x3x5)`.
pub fn ex1_ideal() -> MonomialIdeal {
    let supports: [&[usize]; 7] = [&[0, 3], &[0, 4], &[1, 5], &[2, 6], &[3, 5], &[3, 6], &[1, 2, 4]];
    MonomialIdeal::from_supports(7, supports.iter().map(|s| Face::from_vertices(s.iter().copied())))
        .expect("seven variables")
}

/// A Gorenstein ideal of projective dimension `p` with
/// `β_0 = m + 1`, built from a projective-dimension-3 base with
/// `β = (m0+1, 2m0, m0+1, 1)`, `m0 = m - (p - 3)`, by adjoining `p - 3`
/// fresh variables. `None` when the base needs even `m0 >= 8`.
pub fn construct_gorenstein(m: u64, p: u64) -> Result<Option<MonomialIdeal>> {
    if m < 3 || !admissible(m + 1, p)? {
        return Err(Error::InvalidParameters(format!(
            "no Gorenstein ideal with β_0 = {} and projective dimension {p}",
            m + 1
        )));
    }
    let m0 = m - (p - 3);
    let base = match m0 {
        3 => MonomialIdeal::from_supports(4, (0..4).map(Face::singleton))?,
        6 => ex1_ideal(),
        _ if m0 % 2 == 1 => {
            let polygon = gale_boundary_complex(m0 as usize, m0 as usize - 3)?;
            stanley_reisner_ideal(&polygon).adjoin_variable()
        }
        _ => return Ok(None),
    };
    Ok(Some((3..p).fold(base, |i, _| i.adjoin_variable())))
}

/// An acyclic complex with f-vector `(m+1, 2m, m+1, 1)`.
pub fn realize_gorenstein_p3(m: u64) -> Result<SimplicialComplex> {
    realize_acyclic(&gorenstein_p3_shape(m)?.betti.as_fvector())
}
