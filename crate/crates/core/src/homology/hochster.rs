//! Total Betti numbers of squarefree monomial ideals by Hochster's formula
//!
//! `β_i(I_Δ) = Σ_{U ⊆ V} dim H̃_{|U|-i-2}(Δ_U; K)`,
//!
//! extended to arbitrary monomial ideals by polarization.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::complex::Face;
use crate::error::{Error, Result};
use crate::ideal::{complex_of_ideal, MonomialIdeal};
use crate::sequence::{binomial, BettiSequence};

use super::{reduced_homology, reduced_homology_of_facets, FieldSelector};

pub const DEFAULT_VARIABLE_CAP: usize = 16;

// below this many subsets the rayon dispatch costs more than the work
const PARALLEL_THRESHOLD: usize = 64;

/// How each Hochster term `dim H̃_{|U|-i-2}(Δ_U)` is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HochsterRoute {
    /// Every subset `U`, homology of the induced subcomplex `Δ_U` itself.
    Direct,
    /// Only subsets `U` that are unions of generator supports (otherwise
    /// `Δ_U` is a cone over any vertex of `U` lying in no generator inside
    /// `U`), and each term read off the Alexander dual of `Δ_U` inside `U`,
    /// whose facets are `U ∖ supp(g)`: `H̃_{|U|-i-2}(Δ_U) ≅ H̃_{i-1}(Δ_U^∨)`.
    #[default]
    AlexanderDual,
}

#[derive(Clone, Copy, Debug)]
pub struct HochsterOptions {
    pub variable_cap: usize,
    pub route: HochsterRoute,
    pub parallel: bool,
}

impl Default for HochsterOptions {
    fn default() -> Self {
        HochsterOptions {
            variable_cap: DEFAULT_VARIABLE_CAP,
            route: HochsterRoute::default(),
            parallel: true,
        }
    }
}

pub fn hochster_betti(ideal: &MonomialIdeal, field: FieldSelector) -> Result<BettiSequence> {
    hochster_betti_with(ideal, field, &HochsterOptions::default())
}

/// Betti numbers of any monomial ideal: polarize, then Hochster.
pub fn betti(ideal: &MonomialIdeal, field: FieldSelector) -> Result<BettiSequence> {
    betti_with(ideal, field, &HochsterOptions::default())
}

pub fn betti_with(
    ideal: &MonomialIdeal,
    field: FieldSelector,
    options: &HochsterOptions,
) -> Result<BettiSequence> {
    hochster_betti_with(&ideal.polarize().compacted(), field, options)
}

fn lcm_lattice(supports: &[Face]) -> Vec<Face> {
    let mut seen: HashSet<Face> = supports.iter().copied().collect();
    let mut frontier: Vec<Face> = seen.iter().copied().collect();
    while let Some(x) = frontier.pop() {
        for s in supports {
            let y = x.union(*s);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<Face> = seen.into_iter().collect();
    out.sort_unstable_by_key(|f| f.graded_key());
    out
}

fn add_into(mut acc: Vec<u64>, other: Vec<u64>) -> Vec<u64> {
    if acc.len() < other.len() {
        acc.resize(other.len(), 0);
    }
    for (a, b) in acc.iter_mut().zip(other) {
        *a += b;
    }
    acc
}

pub fn hochster_betti_with(
    ideal: &MonomialIdeal,
    field: FieldSelector,
    options: &HochsterOptions,
) -> Result<BettiSequence> {
    let n = ideal.num_vars();
    if n > options.variable_cap {
        return Err(Error::VariableCapExceeded {
            got: n,
            cap: options.variable_cap,
        });
    }
    let supports = ideal.supports()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Ok(BettiSequence::default());
    }

    let subsets: Vec<Face>;
    let term: Box<dyn Fn(Face) -> Result<Vec<u64>> + Sync> = match options.route {
        HochsterRoute::Direct => {
            let delta = complex_of_ideal(ideal)?;
            let mut all: Vec<Face> = (1u128..1u128 << n).map(Face::from_bits).collect();
            all.sort_unstable_by_key(|f| f.graded_key());
            subsets = all;
            Box::new(move |u: Face| {
                let restricted = delta.induced(u);
                let h = reduced_homology(&restricted, field)?;
                let size = u.len() as i64;
                // H̃_j can be nonzero only for -1 <= j <= dim Δ_U
                let top = restricted.dimension().unwrap_or(-1);
                Ok((0..size)
                    .map(|i| {
                        let j = size - i - 2;
                        if (-1..=top).contains(&j) {
                            h.get(j)
                        } else {
                            0
                        }
                    })
                    .collect())
            })
        }
        HochsterRoute::AlexanderDual => {
            subsets = lcm_lattice(&supports);
            let supports = supports.clone();
            Box::new(move |u: Face| {
                let facets: Vec<Face> = supports
                    .iter()
                    .filter(|s| s.is_subset(u))
                    .map(|s| u.difference(*s))
                    .collect();
                let h = reduced_homology_of_facets(&facets, field)?;
                Ok((0..u.len() as i64).map(|i| h.get(i - 1)).collect())
            })
        }
    };

    let partials: Vec<Vec<u64>> = if options.parallel && subsets.len() >= PARALLEL_THRESHOLD {
        subsets.par_iter().map(|&u| term(u)).collect::<Result<_>>()?
    } else {
        subsets.iter().map(|&u| term(u)).collect::<Result<_>>()?
    };
    let total = partials.into_iter().fold(Vec::new(), add_into);
    Ok(BettiSequence::trimmed(total))
}

/// `Σ_{i=-1}^{p} (-1)^i β_i = 0` with `β_{-1} = 1`.
pub fn alternating_sum_check(beta: &BettiSequence) -> bool {
    let sum: i128 = (-1..beta.len() as i64)
        .map(|i| {
            let b = i128::from(beta.at(i));
            if i.rem_euclid(2) == 0 {
                b
            } else {
                -b
            }
        })
        .sum();
    sum == 0
}

/// Taylor resolution bound `β_i <= C(|G(I)|, i+1)`.
pub fn taylor_bound_holds(beta: &BettiSequence, generator_count: usize) -> bool {
    beta.entries()
        .iter()
        .enumerate()
        .all(|(i, &b)| b <= binomial(generator_count as u64, i as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph};
    use crate::ideal::Monomial;

    const QQ: FieldSelector = FieldSelector::Rationals;

    fn both_routes(ideal: &MonomialIdeal) -> BettiSequence {
        let direct = hochster_betti_with(
            ideal,
            QQ,
            &HochsterOptions {
                route: HochsterRoute::Direct,
                ..Default::default()
            },
        )
        .unwrap();
        let dual = hochster_betti(ideal, QQ).unwrap();
        assert_eq!(direct, dual, "routes disagree on {ideal}");
        dual
    }

    #[test]
    fn six_cycle() {
        assert_eq!(both_routes(&cycle(6).edge_ideal()).entries(), &[6, 9, 6, 2]);
    }

    #[test]
    fn triangle_and_single_edge() {
        assert_eq!(both_routes(&complete(3).edge_ideal()).entries(), &[3, 2]);
        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(both_routes(&edge.edge_ideal()).entries(), &[1]);
    }

    #[test]
    fn koszul() {
        for k in 1..=5usize {
            let i = MonomialIdeal::from_supports(k, (0..k).map(Face::singleton)).unwrap();
            let expected: Vec<u64> = (0..k as u64).map(|j| binomial(k as u64, j + 1)).collect();
            assert_eq!(both_routes(&i).entries(), expected.as_slice());
        }
    }

    #[test]
    fn polarized_square_of_maximal_ideal() {
        let m2 = MonomialIdeal::new(
            2,
            vec![Monomial::new(vec![2, 0]), Monomial::new(vec![1, 1]), Monomial::new(vec![0, 2])],
        )
        .unwrap();
        assert_eq!(betti(&m2, QQ).unwrap().entries(), &[3, 2]);
        assert_eq!(both_routes(&m2.polarize()).entries(), &[3, 2]);
    }

    #[test]
    fn ex1_ideal() {
        let supports = [&[0, 3][..], &[0, 4], &[1, 5], &[2, 6], &[3, 5], &[3, 6], &[1, 2, 4]];
        let i = MonomialIdeal::from_supports(7, supports.iter().map(|s| Face::from_vertices(s.iter().copied()))).unwrap();
        assert_eq!(both_routes(&i).entries(), &[7, 12, 7, 1]);
    }

    #[test]
    fn errors() {
        let sq = MonomialIdeal::new(1, vec![Monomial::new(vec![2])]).unwrap();
        assert_eq!(hochster_betti(&sq, QQ), Err(Error::NotSquarefree));
        let big = MonomialIdeal::from_supports(17, [Face::singleton(16)]).unwrap();
        assert!(matches!(hochster_betti(&big, QQ), Err(Error::VariableCapExceeded { got: 17, cap: 16 })));
        let unit = MonomialIdeal::new(2, vec![Monomial::one(2)]).unwrap();
        assert_eq!(hochster_betti(&unit, QQ), Err(Error::UnitIdeal));
        assert!(hochster_betti(&MonomialIdeal::zero(3), QQ).unwrap().is_empty());
    }

    #[test]
    fn alternating_sums() {
        assert!(alternating_sum_check(&BettiSequence::new(vec![6, 9, 6, 2]).unwrap()));
        assert!(alternating_sum_check(&BettiSequence::new(vec![2, 1]).unwrap()));
        assert!(!alternating_sum_check(&BettiSequence::new(vec![3, 1]).unwrap()));
    }

    #[test]
    fn taylor() {
        assert!(taylor_bound_holds(&BettiSequence::new(vec![6, 9, 6, 2]).unwrap(), 6));
        assert!(!taylor_bound_holds(&BettiSequence::new(vec![3, 4]).unwrap(), 3));
    }
}
