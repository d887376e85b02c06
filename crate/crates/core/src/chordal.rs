//! Chordal graphs: recognition, the Hà–Van Tuyl recursion for Betti
//! numbers of edge ideals, and the recursive realization of those Betti
//! numbers as f-vectors.

use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::fvector::colex_complex;
use crate::graph::Graph;
use crate::sequence::{binomial, BettiSequence, FVector};

/// Maximum cardinality search visit order, ties broken by lowest index.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = Face::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited = visited.with(v);
        order.push(v);
        for w in g.neighbors(v).difference(visited).vertices() {
            weight[w] += 1;
        }
    }
    order
}

/// A perfect elimination ordering (reverse MCS order), if `g` is chordal.
pub fn peo(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    let mut later = Face::full(g.vertex_count());
    for &v in &order {
        later = later.without(v);
        if !g.is_complete_on(g.neighbors(v).intersection(later)) {
            return None;
        }
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    peo(g).is_some()
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    g.is_complete_on(g.neighbors(v))
}

/// One step of the recursion: the edge `e = {u, v}` with `v` simplicial,
/// `t = |N(u) ∖ {v}|` and `W`, the vertices of edges at distance at least 3
/// from `e`.
#[derive(Clone, Debug)]
pub struct EliminationStep {
    pub u: usize,
    pub v: usize,
    pub t: usize,
    pub w: Face,
    /// `G ∖ e` on the same vertex numbering.
    pub remainder: Graph,
    /// `G_W`, renumbered.
    pub restricted: Graph,
}

/// Picks `v` as the first simplicial non-isolated vertex in MCS order and
/// `u` as its least neighbour.
pub fn pick_step(g: &Graph) -> Result<EliminationStep> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    Ok(step_unchecked(g))
}

fn step_unchecked(g: &Graph) -> EliminationStep {
    let v = mcs_order(g)
        .into_iter()
        .find(|&v| g.degree(v) > 0 && is_simplicial(g, v))
        .expect("a chordal graph with edges has a simplicial non-isolated vertex");
    let u = g.neighbors(v).vertices().next().expect("v has a neighbour");
    let near = g.neighbors(u).with(u).with(v);
    let w = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| !near.contains(a) && !near.contains(b))
        .fold(Face::EMPTY, |acc, (a, b)| acc.with(a).with(b));
    EliminationStep {
        u,
        v,
        t: g.neighbors(u).without(v).len(),
        w,
        remainder: g.remove_edge(u, v),
        restricted: g.restrict(w),
    }
}

/// Relabels by iterated degree refinement and returns the sorted edge list;
/// isomorphic graphs often (not always) share a key.
fn canonical_key(g: &Graph) -> Vec<(u8, u8)> {
    let g = g.without_isolated();
    let n = g.vertex_count();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).vertices().map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter_mut()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        let stable = distinct.len() == {
            let mut c = color.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        color = next;
        if stable {
            break;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color[v], v));
    let mut pos = vec![0u8; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k as u8;
    }
    let mut edges: Vec<(u8, u8)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (pos[a], pos[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    edges
}

/// `β_i(G) = β_i(G ∖ e) + Σ_{ℓ=0}^{i} C(t, ℓ) β_{i-ℓ-1}(G_W)`,
/// with `β_{-1} = 1`.
pub fn combine(remainder: &[u64], restricted: &[u64], t: usize) -> Vec<u64> {
    let at = |s: &[u64], i: i64| -> u64 {
        if i == -1 {
            1
        } else if i < -1 {
            0
        } else {
            s.get(i as usize).copied().unwrap_or(0)
        }
    };
    let len = remainder.len().max(restricted.len() + t + 1);
    let mut out: Vec<u64> = (0..len as i64)
        .map(|i| {
            at(remainder, i)
                + (0..=i)
                    .map(|l| binomial(t as u64, l as u64) * at(restricted, i - l - 1))
                    .sum::<u64>()
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Memoized evaluator of the Hà–Van Tuyl recursion.
#[derive(Default)]
pub struct HvtEngine {
    memo: HashMap<Vec<(u8, u8)>, Vec<u64>>,
}

impl HvtEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn betti(&mut self, g: &Graph) -> Result<BettiSequence> {
        if !is_chordal(g) {
            return Err(Error::NotChordal);
        }
        if g.vertex_count() > u8::MAX as usize {
            return Err(Error::TooManyVertices {
                got: g.vertex_count(),
                max: u8::MAX as usize,
            });
        }
        Ok(BettiSequence::trimmed(self.eval(g)))
    }

    fn eval(&mut self, g: &Graph) -> Vec<u64> {
        match g.num_edges() {
            0 => return Vec::new(),
            1 => return vec![1],
            _ => {}
        }
        let key = canonical_key(g);
        if let Some(b) = self.memo.get(&key) {
            return b.clone();
        }
        let step = step_unchecked(g);
        let rem = self.eval(&step.remainder);
        let res = self.eval(&step.restricted);
        let out = combine(&rem, &res, step.t);
        self.memo.insert(key, out.clone());
        out
    }
}

pub fn hvt_betti(g: &Graph) -> Result<BettiSequence> {
    HvtEngine::new().betti(g)
}

/// The cone bound `β_i(G) >= Σ_{m=0}^{i+1} C(t, m) β_{i-m}(G_W)` for the
/// step chosen by [`pick_step`], with `β_{-1}(G_W) = 1`.
pub fn cone_bound_holds(g: &Graph) -> Result<bool> {
    let step = pick_step(g)?;
    let mut engine = HvtEngine::new();
    let full = engine.betti(g)?.as_fvector();
    let bound = engine.betti(&step.restricted)?.as_fvector().cone(step.t as u64);
    Ok(bound.le(&full))
}

/// A complex whose f-vector is `β(I(G))`, built along the recursion:
/// `Δ = colex(f(Δ_{G∖e})) ∪ cone(colex(f(cone^t Δ_{G_W})))`.
pub fn realize_chordal(g: &Graph) -> Result<SimplicialComplex> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let mut engine = HvtEngine::new();
    engine.betti(g)?;
    realize_rec(g, &mut engine)
}

fn realize_rec(g: &Graph, engine: &mut HvtEngine) -> Result<SimplicialComplex> {
    match g.num_edges() {
        0 => return Ok(SimplicialComplex::empty(0)),
        1 => return Ok(SimplicialComplex::simplex(1)),
        _ => {}
    }
    let step = step_unchecked(g);
    let f1 = realize_rec(&step.remainder, engine)?.f_vector()?;
    let fw = realize_rec(&step.restricted, engine)?.f_vector()?;
    let cone_f = fw.cone(step.t as u64);
    if !cone_f.le(&f1) {
        return Err(Error::ConstructionInvariant(format!(
            "cone f-vector {cone_f} exceeds {f1}"
        )));
    }
    let base = colex_complex(&f1)?;
    let apex = f1.at(0) as usize;
    let inner = colex_complex(&cone_f)?.cone_with_apex(apex)?;
    let out = base.union(&inner);
    let expected = FVector::trimmed(engine.eval(g));
    let got = out.f_vector()?;
    if got != expected || !out.is_downward_closed() {
        return Err(Error::ConstructionInvariant(format!(
            "realization has f-vector {got}, recursion gives {expected}"
        )));
    }
    Ok(out)
}
