//! Stable ideals and the Eliahou–Kervaire formula, c-sequences and
//! quasi-forests, generic ideals with their Scarf complexes, and nearly
//! scarf ideals.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::fvector::{bjorner_kalai_lift, realize_acyclic};
use crate::homology::{reduced_homology, FieldSelector};
use crate::ideal::{Monomial, MonomialIdeal};
use crate::sequence::{binomial, BettiSequence, FVector};

/// `u x_i / x_{m(u)} ∈ I` for every generator `u` and `i < m(u)`.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generators().iter().all(|u| match u.max_var() {
        Some(m) => (0..m).all(|i| ideal.contains(&u.exchange(i, m).expect("x_m divides u"))),
        None => true,
    })
}

/// `u x_i / x_j ∈ I` for every generator `u`, every `x_j | u` and `i < j`.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    ideal.generators().iter().all(|u| {
        (0..ideal.num_vars()).all(|j| {
            (0..j).all(|i| u.exchange(i, j).is_none_or(|w| ideal.contains(&w)))
        })
    })
}

/// `m_k`: the number of generators whose largest variable is `x_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableStats {
    pub m: Vec<u64>,
}

impl StableStats {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        let mut m = vec![0u64; ideal.num_vars()];
        for u in ideal.generators() {
            let k = u.max_var().ok_or(Error::UnitIdeal)?;
            m[k] += 1;
        }
        Ok(StableStats { m })
    }
}

/// `β_i = Σ_{k=i+1}^{n} m_k C(k-1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiSequence> {
    if !is_stable(ideal) {
        return Err(Error::NotStable);
    }
    let stats = StableStats::of(ideal)?;
    let n = stats.m.len() as u64;
    let beta = (0..n)
        .map(|i| {
            (i + 1..=n)
                .map(|k| stats.m[(k - 1) as usize] * binomial(k - 1, i))
                .sum()
        })
        .collect();
    Ok(BettiSequence::trimmed(beta))
}

/// `c_1, ..., c_{p+1}`: positive with `c_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CSequence(Vec<u64>);

impl CSequence {
    pub fn new(c: Vec<u64>) -> Result<Self> {
        if c.first() != Some(&1) || c.contains(&0) {
            return Err(Error::InvalidParameters(format!(
                "c-sequence must be positive with c_1 = 1, got {c:?}"
            )));
        }
        Ok(CSequence(c))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }
}

/// `b_1, ..., b_p`, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BSequence(Vec<u64>);

impl BSequence {
    pub fn new(b: Vec<u64>) -> Result<Self> {
        if b.contains(&0) {
            return Err(Error::InvalidParameters(format!(
                "b-sequence must be positive, got {b:?}"
            )));
        }
        Ok(BSequence(b))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }
}

/// Generators `x_1^{c_2} ⋯ x_{i-2}^{c_{i-1}} · x_{i-1}^{c_i+1-k} · x_i^{c_{i+1}+k}`
/// for `i = 1..p+1`, `k = 1..c_i`, with `c_{p+2} = 0`.
pub fn stable_from_c(c: &CSequence) -> MonomialIdeal {
    let c = c.values();
    let n = c.len();
    // 1-based c_j with c_{p+2} = 0
    let cj = |j: usize| -> u32 { c.get(j - 1).map_or(0, |&x| x as u32) };
    let mut gens = Vec::new();
    for i in 1..=n {
        for k in 1..=cj(i) {
            let mut e = vec![0u32; n];
            for j in 1..i.saturating_sub(1) {
                e[j - 1] = cj(j + 1);
            }
            if i >= 2 {
                e[i - 2] = cj(i) + 1 - k;
            }
            e[i - 1] = cj(i + 1) + k;
            gens.push(Monomial::new(e));
        }
    }
    MonomialIdeal::new(n, gens).expect("generators have n variables")
}

// Solves `s_i = Σ_{k=i+1}^{len} x_k C(k-1, i)` for x, top down.
fn solve_binomial_system(s: &[u64]) -> Option<Vec<u64>> {
    let len = s.len();
    let mut x = vec![0i128; len];
    for i in (0..len).rev() {
        let tail: i128 = (i + 1..len)
            .map(|k| x[k] * i128::from(binomial(k as u64, i as u64)))
            .sum();
        x[i] = i128::from(s[i]) - tail;
        if x[i] <= 0 {
            return None;
        }
    }
    Some(x.into_iter().map(|v| v as u64).collect())
}

/// The c-sequence with `β_i = Σ_k c_k C(k-1, i)`, when positive with `c_1 = 1`.
pub fn betti_to_c(beta: &BettiSequence) -> Option<CSequence> {
    if beta.is_empty() {
        return None;
    }
    CSequence::new(solve_binomial_system(beta.entries())?).ok()
}

/// The b-sequence with `f_{i-1} = Σ_k b_k C(k-1, i-1)`, when positive.
pub fn quasi_forest_b(f: &FVector) -> Option<BSequence> {
    BSequence::new(solve_binomial_system(f.entries())?).ok()
}

/// Clique complex of the chordal graph built by adding, for each `k`,
/// `b_k` vertices each joined to the colex-least `(k-1)`-clique.
pub fn quasi_forest_realize(b: &BSequence) -> Result<SimplicialComplex> {
    let n: u64 = b.values().iter().sum();
    if n as usize > Face::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            got: n as usize,
            max: Face::MAX_VERTICES,
        });
    }
    let mut faces = vec![Face::EMPTY];
    let mut next = 0usize;
    for (k, &count) in b.values().iter().enumerate() {
        for _ in 0..count {
            let clique = faces
                .iter()
                .filter(|f| f.len() == k)
                .min_by_key(|f| f.bits())
                .copied()
                .ok_or_else(|| Error::ConstructionInvariant(format!("no clique of size {k}")))?;
            faces.extend(clique.subsets().map(|s| s.with(next)));
            next += 1;
        }
    }
    SimplicialComplex::from_faces(next, faces)
}

/// An acyclic quasi-forest with f-vector `β`: a cone over the quasi-forest
/// for `b_k = c_{k+1}`.
pub fn realize_componentwise_linear(beta: &BettiSequence) -> Result<SimplicialComplex> {
    let c = betti_to_c(beta)
        .ok_or_else(|| Error::InvalidFVector(format!("{beta} has no valid c-sequence")))?;
    let b = BSequence::new(c.values()[1..].to_vec())?;
    quasi_forest_realize(&b)?.cone(1)
}

/// No two generators share the same nonzero exponent of any variable.
pub fn is_generic(ideal: &MonomialIdeal) -> bool {
    let gens = ideal.generators();
    gens.iter().enumerate().all(|(a, u)| {
        gens[a + 1..].iter().all(|w| {
            u.exps()
                .iter()
                .zip(w.exps())
                .all(|(x, y)| x != y || *x == 0)
        })
    })
}

pub const SCARF_GENERATOR_CAP: usize = 20;

/// f-vector of the Scarf complex: subsets of generators whose lcm is shared
/// by no other subset.
pub fn scarf_betti(ideal: &MonomialIdeal) -> Result<BettiSequence> {
    if !is_generic(ideal) {
        return Err(Error::NotGeneric);
    }
    let gens = ideal.generators();
    if gens.len() > SCARF_GENERATOR_CAP {
        return Err(Error::InvalidParameters(format!(
            "Scarf scan limited to {SCARF_GENERATOR_CAP} generators, got {}",
            gens.len()
        )));
    }
    let mut lcms: HashMap<Monomial, (usize, u32)> = HashMap::new();
    for mask in 1u32..1 << gens.len() {
        let l = (0..gens.len())
            .filter(|&j| mask >> j & 1 == 1)
            .fold(Monomial::one(ideal.num_vars()), |acc, j| acc.lcm(&gens[j]));
        let e = lcms.entry(l).or_insert((0, mask));
        e.0 += 1;
    }
    let mut beta = vec![0u64; gens.len()];
    for (count, mask) in lcms.values() {
        if *count == 1 {
            beta[mask.count_ones() as usize - 1] += 1;
        }
    }
    Ok(BettiSequence::trimmed(beta))
}

fn is_simplex_boundary(omega: &SimplicialComplex) -> bool {
    let v = omega.vertex_set();
    omega.num_faces() as u128 + 1 == 1u128 << v.len() && !omega.contains(v)
}

/// `J_Ω`: one variable per nonempty face of `Ω` (in face order) and, for
/// each vertex `v`, the generator `∏_{σ ∌ v} x_σ`.
pub fn nearly_scarf_ideal(omega: &SimplicialComplex) -> Result<MonomialIdeal> {
    if omega.is_void() {
        return Err(Error::VoidComplex);
    }
    let omega = omega.compacted();
    if omega.vertex_count() == 0 || is_simplex_boundary(&omega) {
        return Err(Error::InvalidParameters(
            "nearly scarf ideals need a complex that is not a simplex boundary".into(),
        ));
    }
    if omega.vertex_count() == 1 {
        return Err(Error::UnitIdeal);
    }
    let faces = &omega.faces()[1..];
    let supports = (0..omega.vertex_count()).map(|v| {
        Face::from_vertices(
            faces
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.contains(v))
                .map(|(j, _)| j),
        )
    });
    MonomialIdeal::from_supports(faces.len(), supports)
}

/// `β_i(J_Ω) = f_i(Ω) + dim H̃_{i-1}(Ω)`.
pub fn nearly_scarf_expected(omega: &SimplicialComplex, field: FieldSelector) -> Result<BettiSequence> {
    let lifted = bjorner_kalai_lift(&omega.f_vector()?, &reduced_homology(omega, field)?)?;
    Ok(BettiSequence::trimmed(lifted.into_entries()))
}

/// An acyclic complex whose f-vector is the lifted f-vector of `Ω`.
pub fn nearly_scarf_acyclic_realization(
    omega: &SimplicialComplex,
    field: FieldSelector,
) -> Result<SimplicialComplex> {
    let lifted = bjorner_kalai_lift(&omega.f_vector()?, &reduced_homology(omega, field)?)?;
    realize_acyclic(&lifted).map_err(|e| {
        Error::ConstructionInvariant(format!("lift {lifted} is not acyclic-realizable: {e}"))
    })
}

fn degree_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    // lex descending, so every exchange target precedes its source
    out
}

fn stable_targets(u: &[u32]) -> Vec<Vec<u32>> {
    let Some(m) = u.iter().rposition(|&e| e > 0) else {
        return Vec::new();
    };
    (0..m)
        .map(|i| {
            let mut w = u.to_vec();
            w[m] -= 1;
            w[i] += 1;
            w
        })
        .collect()
}

/// Every stable ideal of `k[x_1..x_n]` other than the unit ideal whose
/// minimal generators have degree at most `max_degree`, including the zero
/// ideal.
pub fn enumerate_stable(n: usize, max_degree: u32) -> Vec<MonomialIdeal> {
    let layers: Vec<Vec<Vec<u32>>> = (0..=max_degree).map(|d| degree_monomials(n, d)).collect();
    let mut out = Vec::new();
    let mut chain: Vec<Vec<bool>> = Vec::new();
    enumerate_layers(n, max_degree, 1, &layers, &mut chain, &mut out);
    out
}

fn enumerate_layers(
    n: usize,
    max_degree: u32,
    d: u32,
    layers: &[Vec<Vec<u32>>],
    chain: &mut Vec<Vec<bool>>,
    out: &mut Vec<MonomialIdeal>,
) {
    if d > max_degree {
        let gens = chain
            .iter()
            .zip(&layers[1..])
            .flat_map(|(set, mons)| {
                set.iter()
                    .zip(mons)
                    .filter(|(&b, _)| b)
                    .map(|(_, m)| Monomial::new(m.clone()))
            })
            .collect();
        out.push(MonomialIdeal::new(n, gens).expect("arity"));
        return;
    }
    let mons = &layers[d as usize];
    let index: HashMap<&[u32], usize> = mons.iter().enumerate().map(|(k, m)| (m.as_slice(), k)).collect();
    let mut required = vec![false; mons.len()];
    if let Some(prev) = chain.last() {
        for (u, _) in layers[d as usize - 1].iter().zip(prev).filter(|(_, &b)| b) {
            for j in 0..n {
                let mut w = u.clone();
                w[j] += 1;
                required[index[w.as_slice()]] = true;
            }
        }
    }
    let targets: Vec<Vec<usize>> = mons
        .iter()
        .map(|u| stable_targets(u).iter().map(|w| index[w.as_slice()]).collect())
        .collect();
    let mut current = vec![false; mons.len()];
    choose(0, &required, &targets, &mut current, &mut |set| {
        chain.push(set.to_vec());
        enumerate_layers(n, max_degree, d + 1, layers, chain, out);
        chain.pop();
    });
}

fn choose(
    k: usize,
    required: &[bool],
    targets: &[Vec<usize>],
    current: &mut Vec<bool>,
    visit: &mut dyn FnMut(&[bool]),
) {
    if k == required.len() {
        visit(current);
        return;
    }
    let allowed = targets[k].iter().all(|&t| current[t]);
    if !required[k] {
        choose(k + 1, required, targets, current, visit);
    }
    if allowed {
        current[k] = true;
        choose(k + 1, required, targets, current, visit);
        current[k] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{betti, is_acyclic};

    const QQ: FieldSelector = FieldSelector::Rationals;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| Face::from_vertices(f.iter().copied()))).unwrap()
    }

    #[test]
    fn stability() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(is_stable(&m2));
        assert!(is_strongly_stable(&m2));
        assert!(!is_stable(&ideal(2, &[&[0, 2]])));
        assert!(is_stable(&MonomialIdeal::zero(3)));
        // stable but not strongly stable
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[0, 1, 1]]);
        assert!(is_stable(&i));
        assert!(!is_strongly_stable(&i));
    }

    #[test]
    fn eliahou_kervaire() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(ek_betti(&m2).unwrap().entries(), &[3, 2]);
        assert_eq!(betti(&m2, QQ).unwrap().entries(), &[3, 2]);
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(ek_betti(&i).unwrap().entries(), &[3, 3, 1]);
        assert_eq!(ek_betti(&ideal(1, &[&[1]])).unwrap().entries(), &[1]);
        assert_eq!(ek_betti(&ideal(2, &[&[0, 2]])), Err(Error::NotStable));
    }

    #[test]
    fn stable_from_c_stats() {
        for c in [vec![1], vec![1, 1, 1], vec![1, 2], vec![1, 3, 2], vec![1, 1, 4, 2]] {
            let cs = CSequence::new(c.clone()).unwrap();
            let i = stable_from_c(&cs);
            assert!(is_stable(&i), "{i}");
            assert_eq!(StableStats::of(&i).unwrap().m, c);
        }
        assert_eq!(stable_from_c(&CSequence::new(vec![1]).unwrap()).to_string(), "(x1)");
        assert!(CSequence::new(vec![2, 1]).is_err());
    }

    #[test]
    fn c_and_b_sequences() {
        let b = |e: &[u64]| BettiSequence::new(e.to_vec()).unwrap();
        assert_eq!(betti_to_c(&b(&[3, 3, 1])).unwrap().values(), &[1, 1, 1]);
        assert_eq!(betti_to_c(&b(&[3, 2])).unwrap().values(), &[1, 2]);
        assert_eq!(betti_to_c(&b(&[2, 2])), None);
        let f = |e: &[u64]| FVector::new(e.to_vec()).unwrap();
        assert_eq!(quasi_forest_b(&f(&[3, 2])).unwrap().values(), &[1, 2]);
        assert_eq!(quasi_forest_b(&f(&[4, 6, 4, 1])).unwrap().values(), &[1, 1, 1, 1]);
        assert_eq!(quasi_forest_b(&f(&[2, 2])), None);
    }

    #[test]
    fn quasi_forests() {
        let q = |b: &[u64]| quasi_forest_realize(&BSequence::new(b.to_vec()).unwrap()).unwrap();
        assert_eq!(q(&[1, 2]).f_vector().unwrap().entries(), &[3, 2]);
        assert_eq!(q(&[1, 1]), SimplicialComplex::simplex(2));
        assert_eq!(q(&[2, 1]).f_vector().unwrap().entries(), &[3, 1]);
    }

    #[test]
    fn componentwise_linear() {
        let beta = BettiSequence::new(vec![3, 3, 1]).unwrap();
        let c = realize_componentwise_linear(&beta).unwrap();
        assert_eq!(c.f_vector().unwrap().entries(), beta.entries());
        assert!(is_acyclic(&c, QQ).unwrap());
        let edge = realize_componentwise_linear(&BettiSequence::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(edge, SimplicialComplex::simplex(2));
    }

    #[test]
    fn generic_and_scarf() {
        let ci = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(is_generic(&ci));
        assert_eq!(scarf_betti(&ci).unwrap().entries(), &[2, 1]);
        assert!(!is_generic(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])));
        let g = ideal(2, &[&[2, 1], &[1, 2]]);
        assert!(is_generic(&g));
        assert_eq!(scarf_betti(&g).unwrap().entries(), &[2, 1]);
        assert_eq!(scarf_betti(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]])), Err(Error::NotGeneric));
    }

    #[test]
    fn nearly_scarf() {
        let path = complex(3, &[&[0, 1], &[1, 2]]);
        let j = nearly_scarf_ideal(&path).unwrap();
        assert_eq!(j.num_vars(), 5);
        assert_eq!(j.generators().len(), 3);
        assert_eq!(betti(&j, QQ).unwrap(), nearly_scarf_expected(&path, QQ).unwrap());

        let circle = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(nearly_scarf_ideal(&circle).is_err());
        let full = nearly_scarf_acyclic_realization(&circle, QQ).unwrap();
        assert_eq!(full, SimplicialComplex::simplex(3));

        let two = complex(2, &[&[0], &[1]]);
        assert!(nearly_scarf_ideal(&two).is_err());
        let r = nearly_scarf_acyclic_realization(&two, QQ).unwrap();
        assert_eq!(r.f_vector().unwrap().entries(), &[2, 1]);

        assert_eq!(nearly_scarf_ideal(&SimplicialComplex::simplex(1)), Err(Error::UnitIdeal));
    }

    #[test]
    fn stable_counts() {
        assert_eq!(enumerate_stable(1, 4).len(), 5);
        assert_eq!(enumerate_stable(2, 4).len(), 31);
        assert_eq!(enumerate_stable(4, 2).len(), 39);
        let all = enumerate_stable(3, 3);
        assert!(all.iter().all(is_stable));
    }
}
