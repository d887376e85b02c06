//! Seeded cross-check suites comparing every formula and construction with
//! the homology oracle. Used by the `verify` command and the acceptance
//! tests.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chordal::{combine, cone_bound_holds, hvt_betti, is_chordal, pick_step, realize_chordal, HvtEngine};
use crate::complex::{Face, SimplicialComplex};
use crate::cyclic::{cyclic_betti, gale_boundary_complex, realize_cyclic};
use crate::error::Result;
use crate::fvector::{bjorner_kalai_lift, colex_complex, kalai_decompose, kk_valid, realize_acyclic};
use crate::gorenstein::{
    admissible, betti_symmetric, construct_gorenstein, ex1_ideal, gorenstein_p3_shape, is_gorenstein_complex,
};
use crate::graph::{cycle, Graph};
use crate::homology::{
    alternating_sum_check, betti, betti_with, hochster_betti, hochster_betti_with, is_acyclic, reduced_homology,
    taylor_bound_holds, FieldSelector, HochsterOptions, HochsterRoute,
};
use crate::ideal::{complex_of_ideal, stanley_reisner_ideal, Monomial, MonomialIdeal};
use crate::sequence::{binomial, convolve, BettiSequence, FVector};
use crate::special::{
    betti_to_c, ek_betti, enumerate_stable, is_generic, nearly_scarf_expected, nearly_scarf_ideal,
    realize_componentwise_linear, scarf_betti, stable_from_c, CSequence, StableStats,
};

pub const DEFAULT_SEED: u64 = 0x5eed_beef;

const QQ: FieldSelector = FieldSelector::Rationals;
const MAX_RECORDED: usize = 25;

/// Outcome of one suite: how many cases ran and which failed.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub cases: usize,
    pub failure_count: usize,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
    /// Observations that are reported but do not fail the suite.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &str) -> Self {
        SuiteOutcome {
            name: name.to_string(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, message: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED {
            self.failures.push(message);
        }
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(message());
        }
    }

    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).expect("small graph");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// A chordal graph grown by joining each new vertex to a random subset of a
/// greedily grown clique, then relabelled at random.
pub fn random_chordal(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::new(n).expect("small graph");
    for v in 1..n {
        let mut earlier: Vec<usize> = (0..v).collect();
        earlier.shuffle(rng);
        let mut clique = Face::EMPTY;
        for w in earlier {
            if clique.vertices().all(|c| g.has_edge(c, w)) {
                clique = clique.with(w);
            }
        }
        for w in clique.vertices() {
            if rng.random_bool(0.6) {
                g.add_edge(v, w).expect("valid edge");
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

/// Squarefree ideal with `gens` random generators of degree 1..=3.
pub fn random_squarefree_ideal(rng: &mut impl Rng, n: usize, gens: usize) -> MonomialIdeal {
    let supports: Vec<Face> = (0..gens)
        .map(|_| {
            let size = rng.random_range(1..=3.min(n));
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            Face::from_vertices(vs.into_iter().take(size))
        })
        .collect();
    MonomialIdeal::from_supports(n, supports).expect("in range")
}

/// Generic ideal: in each variable the nonzero exponents are pairwise
/// distinct.
pub fn random_generic_ideal(rng: &mut impl Rng, n: usize, gens: usize) -> MonomialIdeal {
    let mut exps = vec![vec![0u32; n]; gens];
    for var in 0..n {
        let mut values: Vec<u32> = (1..=gens as u32).collect();
        values.shuffle(rng);
        for (g, value) in values.into_iter().enumerate() {
            if rng.random_bool(0.6) {
                exps[g][var] = value;
            }
        }
    }
    for (g, e) in exps.iter_mut().enumerate() {
        if e.iter().all(|&x| x == 0) {
            e[g % n] = gens as u32 + 1 + g as u32;
        }
    }
    MonomialIdeal::new(n, exps.into_iter().map(Monomial::new).collect()).expect("arity")
}

/// Complex generated by a few random facets on `n` vertices.
pub fn random_complex(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    let count = rng.random_range(1..=4);
    let facets: Vec<Face> = (0..count)
        .map(|_| Face::from_bits(rng.random_range(1u128..1u128 << n)))
        .collect();
    SimplicialComplex::from_facets(n, facets).expect("in range")
}

fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e),
        )
        .expect("valid edges")
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn canonical_form(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for &(a, b) in &edges {
            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            code |= 1 << (y * (y - 1) / 2 + x);
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// One representative per isomorphism class of chordal graphs on exactly
/// `n` vertices, grown by adding a vertex joined to a clique.
pub fn chordal_classes(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(1).expect("one vertex")];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for clique in (0u128..1 << (k - 1)).map(Face::from_bits) {
                if !g.is_complete_on(clique) {
                    continue;
                }
                let mut h = Graph::from_edges(k, g.edges()).expect("valid edges");
                for w in clique.vertices() {
                    h.add_edge(k - 1, w).expect("valid edge");
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        Vec::new()
    } else {
        level
    }
}

#[derive(Clone, Debug)]
pub struct ChordalConfig {
    /// Exhaustive over labeled graphs up to `min(6, max_vertices)` vertices
    /// and over isomorphism classes above that.
    pub max_vertices: usize,
    pub random_graphs: usize,
    pub random_vertices: RangeInclusive<usize>,
    pub seed: u64,
}

impl Default for ChordalConfig {
    fn default() -> Self {
        ChordalConfig {
            max_vertices: 6,
            random_graphs: 200,
            random_vertices: 7..=10,
            seed: DEFAULT_SEED,
        }
    }
}

fn check_chordal_graph(out: &mut SuiteOutcome, engine: &mut HvtEngine, g: &Graph, reversed: bool) {
    let show = || format!("{g:?}");
    let Some(hvt) = out.ok(engine.betti(g), show) else {
        return;
    };
    let Some(oracle) = out.ok(hochster_betti(&g.edge_ideal(), QQ), show) else {
        return;
    };
    out.check(hvt == oracle, || format!("{g:?}: hvt {hvt} vs oracle {oracle}"));
    if g.num_edges() == 0 {
        return;
    }
    if let Some(c) = out.ok(realize_chordal(g), show) {
        out.check(c.is_downward_closed(), || format!("{g:?}: realization not closed"));
        let f = c.f_vector().map(|f| f.into_entries()).unwrap_or_default();
        out.check(f == hvt.entries(), || format!("{g:?}: realization f {f:?} vs {hvt}"));
    }
    if let Some(ok) = out.ok(cone_bound_holds(g), show) {
        out.check(ok, || format!("{g:?}: cone bound fails"));
    }
    if reversed {
        let n = g.vertex_count();
        let rev: Vec<usize> = (0..n).rev().collect();
        if let Some(b) = out.ok(hvt_betti(&g.permuted(&rev)), show) {
            out.check(b == hvt, || format!("{g:?}: reversed labels give {b}"));
        }
    }
}

/// hvt = oracle = f-vector of the realization, plus the cone bound and
/// relabelling invariance.
pub fn chordal_suite(config: &ChordalConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("chordal");
    let mut engine = HvtEngine::new();
    for n in 1..=config.max_vertices.min(6) {
        for g in labeled_graphs(n) {
            if is_chordal(&g) {
                check_chordal_graph(&mut out, &mut engine, &g, n == 6);
            } else {
                out.check(hvt_betti(&g).is_err(), || format!("{g:?}: non-chordal accepted"));
            }
        }
    }
    for n in 7..=config.max_vertices {
        for g in chordal_classes(n) {
            check_chordal_graph(&mut out, &mut engine, &g, true);
        }
    }
    let mut r = rng(config.seed);
    for _ in 0..config.random_graphs {
        let n = r.random_range(config.random_vertices.clone());
        let g = random_chordal(&mut r, n);
        check_chordal_graph(&mut out, &mut engine, &g, true);
    }
    out
}

/// The eight-vertex worked example with vertices `y1..y8`.
pub fn worked_example_graph() -> Graph {
    let edges = [
        ("y8", "y6"), ("y6", "y3"), ("y3", "y1"), ("y7", "y4"), ("y4", "y2"), ("y8", "y7"), ("y6", "y7"),
        ("y6", "y4"), ("y4", "y5"), ("y3", "y4"), ("y3", "y2"), ("y1", "y2"), ("y2", "y5"),
    ];
    Graph::from_labeled_edges(edges).expect("valid edges")
}

/// The six-cycle edge ideal, whose Betti sequence is no f-vector.
pub fn six_cycle_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("six-cycle");
    if let Some(b) = out.ok(hochster_betti(&cycle(6).edge_ideal(), QQ), || "C6".into()) {
        out.check(b.entries() == [6, 9, 6, 2], || format!("C6 oracle {b}"));
        out.check(!kk_valid(&b.as_fvector()), || "C6 Betti passes Kruskal-Katona".into());
    }
    out
}

/// The eight-vertex chordal example and one step of the recursion on it.
pub fn worked_example_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("worked-example");
    let g = worked_example_graph();
    let full = [13, 36, 47, 34, 13, 2];
    if let Some(b) = out.ok(hvt_betti(&g), || "example hvt".into()) {
        out.check(b.entries() == full, || format!("example hvt {b}"));
    }
    if let Some(b) = out.ok(hochster_betti(&g.edge_ideal(), QQ), || "example oracle".into()) {
        out.check(b.entries() == full, || format!("example oracle {b}"));
    }
    if let Some(step) = out.ok(pick_step(&g), || "example step".into()) {
        let rem = hvt_betti(&step.remainder).map(BettiSequence::into_entries);
        out.check(rem.as_deref() == Ok(&[12, 30, 33, 18, 4][..]), || format!("G minus e gives {rem:?}"));
        let res = hvt_betti(&step.restricted).map(BettiSequence::into_entries);
        out.check(res.as_deref() == Ok(&[3, 2][..]), || format!("G_W gives {res:?}"));
        if let (Ok(rem), Ok(res)) = (rem, res) {
            let t = step.t as u64;
            let terms = [rem[2], res[1], binomial(t, 1) * res[0], binomial(t, 2)];
            out.check(terms == [33, 2, 9, 3] && terms.iter().sum::<u64>() == 47, || format!("spot terms {terms:?}"));
            let combined = combine(&rem, &res, step.t);
            out.check(combined == full, || format!("recursion gives {combined:?}"));
        }
    }
    out
}

/// Formula against the oracle on Gale boundary complexes, and f-vectors of
/// the recursive realizations.
pub fn cyclic_suite(oracle_max_v: usize, realize_max_v: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("cyclic");
    if let Some(b) = out.ok(cyclic_betti(7, 2), || "C(7,2)".into()) {
        out.check(b.entries() == [14, 35, 35, 14, 1], || format!("C(7,2) formula {b}"));
    }
    for d in [2, 4] {
        for v in d + 1..=oracle_max_v {
            let ctx = || format!("C({v},{d})");
            let Some(formula) = out.ok(cyclic_betti(v, d), ctx) else { continue };
            out.check(alternating_sum_check(&formula), || format!("C({v},{d}) alternating sum"));
            let Some(complex) = out.ok(gale_boundary_complex(v, d), ctx) else { continue };
            if let Some(oracle) = out.ok(hochster_betti(&stanley_reisner_ideal(&complex), QQ), ctx) {
                out.check(oracle == formula, || format!("C({v},{d}): formula {formula} vs oracle {oracle}"));
            }
        }
    }
    let mut pure_ok = 0;
    for d in [2, 4, 6] {
        for v in d + 1..=realize_max_v {
            let ctx = || format!("Γ({v},{d})");
            let Some(formula) = out.ok(cyclic_betti(v, d), ctx) else { continue };
            if let Some(c) = out.ok(realize_cyclic(v, d), ctx) {
                let f = c.f_vector().map(FVector::into_entries).unwrap_or_default();
                out.check(f == formula.entries() && c.is_downward_closed(), || {
                    format!("Γ({v},{d}) has f {f:?}, expected {formula}")
                });
            }
            if kk_valid(&formula.as_fvector()) {
                pure_ok += 1;
            } else {
                out.notes.push(format!("pure resolution C({v},{d}) Betti {formula} fails Kruskal-Katona"));
            }
        }
    }
    out.notes.push(format!("{pure_ok} pure-resolution Betti sequences pass Kruskal-Katona"));
    out
}

/// Kalai's criterion on the Gorenstein shapes and the non-acyclic examples,
/// acyclicity of realizations over two fields, Björner–Kalai lifts and colex
/// realizations of random complexes.
pub fn fvector_suite(random_complexes: usize, seed: u64) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("fvector");
    let f2 = FieldSelector::Prime(2);
    for m in [3u64, 5, 6, 7] {
        let f = FVector::new(vec![m + 1, 2 * m, m + 1, 1]).expect("nonzero");
        out.check(kalai_decompose(&f).is_some(), || format!("{f} rejected"));
        if let Some(c) = out.ok(realize_acyclic(&f), || format!("realize {f}")) {
            let fc = c.f_vector().ok();
            out.check(fc.as_ref() == Some(&f), || format!("realization of {f} has f {fc:?}"));
            for field in [QQ, f2] {
                let acyclic = is_acyclic(&c, field).unwrap_or(false);
                out.check(acyclic, || format!("realization of {f} not acyclic over {field}"));
            }
        }
    }
    for bad in [[14u64, 21, 14, 6], [6, 9, 6, 2]] {
        let f = FVector::new(bad.to_vec()).expect("nonzero");
        out.check(kalai_decompose(&f).is_none(), || format!("{f} accepted"));
    }
    let mut r = rng(seed);
    for _ in 0..random_complexes {
        let n = r.random_range(1..=7);
        let delta = random_complex(&mut r, n);
        let Some(f) = out.ok(delta.f_vector(), || format!("{delta:?}")) else { continue };
        let Some(h) = out.ok(reduced_homology(&delta, QQ), || format!("{delta:?}")) else { continue };
        if let Some(lift) = out.ok(bjorner_kalai_lift(&f, &h), || format!("{delta:?}")) {
            out.check(kalai_decompose(&lift).is_some(), || format!("lift {lift} of {delta:?} rejected"));
        }
        out.check(kk_valid(&f), || format!("{f} of {delta:?} fails Kruskal-Katona"));
        if let Some(c) = out.ok(colex_complex(&f), || format!("colex {f}")) {
            let fc = c.f_vector().ok();
            out.check(fc.as_ref() == Some(&f), || format!("colex {f} has f {fc:?}"));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct StableConfig {
    pub variables: usize,
    pub max_degree: u32,
    pub random_c: usize,
    pub seed: u64,
}

impl Default for StableConfig {
    fn default() -> Self {
        StableConfig {
            variables: 4,
            max_degree: 4,
            random_c: 100,
            seed: DEFAULT_SEED,
        }
    }
}

/// Eliahou–Kervaire against the oracle on every stable ideal of the corpus,
/// and c-sequence round trips.
pub fn stable_suite(config: &StableConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("stable");
    let corpus = enumerate_stable(config.variables, config.max_degree);
    out.notes.push(format!("{} stable ideals in the corpus", corpus.len()));
    for ideal in &corpus {
        let Some(ek) = out.ok(ek_betti(ideal), || ideal.to_string()) else { continue };
        if let Some(oracle) = out.ok(betti(ideal, QQ), || ideal.to_string()) {
            out.check(ek == oracle, || format!("{ideal}: EK {ek} vs oracle {oracle}"));
        }
    }
    let mut r = rng(config.seed);
    for _ in 0..config.random_c {
        let len = r.random_range(1..=5);
        let mut c = vec![1u64];
        c.extend((1..len).map(|_| r.random_range(1..=4u64)));
        let cs = CSequence::new(c.clone()).expect("valid c");
        let ideal = stable_from_c(&cs);
        let stats = StableStats::of(&ideal).map(|s| s.m).unwrap_or_default();
        out.check(stats == c, || format!("c = {c:?}: m-stats {stats:?}"));
        let Some(beta) = out.ok(ek_betti(&ideal), || format!("c = {c:?}")) else { continue };
        let back = betti_to_c(&beta);
        out.check(back.as_ref() == Some(&cs), || format!("c = {c:?}: β {beta} inverts to {back:?}"));
        if let Some(complex) = out.ok(realize_componentwise_linear(&beta), || format!("c = {c:?}")) {
            let f = complex.f_vector().map(FVector::into_entries).unwrap_or_default();
            out.check(f == beta.entries(), || format!("c = {c:?}: realization f {f:?} vs {beta}"));
            out.check(is_acyclic(&complex, QQ).unwrap_or(false), || format!("c = {c:?}: realization not acyclic"));
        }
    }
    out
}

/// Every simplicial complex using all of the vertices `0..n`.
pub fn complexes_on(n: usize) -> Vec<SimplicialComplex> {
    let big: Vec<Face> = (0u128..1 << n)
        .map(Face::from_bits)
        .filter(|f| f.len() >= 2)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << big.len() {
        let mut faces: Vec<Face> = vec![Face::EMPTY];
        faces.extend((0..n).map(Face::singleton));
        faces.extend(big.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, f)| *f));
        if let Ok(c) = SimplicialComplex::from_faces(n, faces) {
            out.push(c);
        }
    }
    out
}

/// `β_i(J_Ω) = f_i(Ω) + dim H̃_{i-1}(Ω)` for every `Ω` on at most
/// `max_vertices` vertices other than simplex boundaries.
pub fn nearly_scarf_suite(max_vertices: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("nearly-scarf");
    let mut skipped = 0;
    for n in 1..=max_vertices {
        for omega in complexes_on(n) {
            let Ok(ideal) = nearly_scarf_ideal(&omega) else {
                skipped += 1;
                continue;
            };
            let Some(expected) = out.ok(nearly_scarf_expected(&omega, QQ), || format!("{omega:?}")) else {
                continue;
            };
            if let Some(oracle) = out.ok(hochster_betti(&ideal, QQ), || format!("{omega:?}")) {
                out.check(oracle == expected, || format!("{omega:?}: oracle {oracle} vs {expected}"));
            }
        }
    }
    out.notes.push(format!("{skipped} complexes excluded (simplex boundaries or a single vertex)"));
    out
}

/// The ex1 and pentagon examples, constructed witnesses and the
/// admissibility table.
pub fn gorenstein_suite() -> SuiteOutcome {
    let mut out = SuiteOutcome::new("gorenstein");
    let ex1 = ex1_ideal();
    if let Some(b) = out.ok(betti(&ex1, QQ), || "ex1".into()) {
        out.check(b.entries() == [7, 12, 7, 1], || format!("ex1 Betti {b}"));
        out.check(betti_symmetric(&b), || "ex1 not symmetric".into());
    }
    if let Some(c) = out.ok(complex_of_ideal(&ex1), || "ex1 complex".into()) {
        out.check(is_gorenstein_complex(&c, QQ).unwrap_or(false), || "ex1 complex not Gorenstein".into());
    }
    if let Some(pentagon) = out.ok(gale_boundary_complex(5, 2), || "pentagon".into()) {
        let b = hochster_betti(&stanley_reisner_ideal(&pentagon), QQ);
        out.check(b.as_ref().map(|b| b.entries()) == Ok(&[5, 5, 1][..]), || format!("pentagon {b:?}"));
    }
    for (m, p) in [(5u64, 3u64), (6, 3), (7, 4)] {
        let ctx = || format!("witness ({m},{p})");
        let Some(Some(ideal)) = out.ok(construct_gorenstein(m, p), ctx) else {
            out.fail(format!("witness ({m},{p}) missing"));
            continue;
        };
        let Some(b) = out.ok(betti(&ideal, QQ), ctx) else { continue };
        out.check(b.len() == p as usize + 1 && b.at(0) == m + 1, || format!("witness ({m},{p}) Betti {b}"));
        out.check(betti_symmetric(&b), || format!("witness ({m},{p}) Betti {b} not symmetric"));
        if p == 3 {
            let shape = gorenstein_p3_shape(m).map(|s| s.betti);
            out.check(shape.as_ref() == Ok(&b), || format!("witness ({m},3) Betti {b} vs shape {shape:?}"));
        }
        // every adjoined variable convolves the quotient Betti numbers with (1,1)
        let base = construct_gorenstein(m - (p - 3), 3).ok().flatten();
        if let Some(base_b) = base.and_then(|i| betti(&i, QQ).ok()) {
            let mut q = base_b.quotient();
            for _ in 3..p {
                q = convolve(&q, &[1, 1]);
            }
            out.check(q == b.quotient(), || format!("witness ({m},{p}) is not the convolution of its base"));
        }
        if let Some(c) = out.ok(complex_of_ideal(&ideal), ctx) {
            out.check(is_gorenstein_complex(&c, QQ).unwrap_or(false), || format!("witness ({m},{p}) not Gorenstein"));
        }
    }
    for p in 3..=6u64 {
        for m in 4..=10u64 {
            let got = admissible(m, p).ok();
            out.check(got == Some(m > p && m != p + 2), || format!("admissible({m},{p}) = {got:?}"));
        }
    }
    for m in 3..=12u64 {
        if let Ok(s) = gorenstein_p3_shape(m) {
            out.check(s.kalai.is_some(), || format!("shape for m = {m} has no Kalai decomposition"));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct PropertyConfig {
    pub graphs: usize,
    pub ideals: usize,
    pub seed: u64,
}

impl Default for PropertyConfig {
    fn default() -> Self {
        PropertyConfig {
            graphs: 40,
            ideals: 200,
            seed: DEFAULT_SEED,
        }
    }
}

fn le(a: &BettiSequence, b: &BettiSequence) -> bool {
    a.as_fvector().le(&b.as_fvector())
}

/// Restriction and colon monotonicity, disjoint-support convolution, the
/// Taylor bound, alternating sums, field agreement, oracle route agreement,
/// Kalai on projective dimension at most 2, Scarf against the oracle, and
/// the Stanley–Reisner correspondences.
pub fn property_suite(config: &PropertyConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("properties");
    let mut r = rng(config.seed);
    let f32003 = FieldSelector::Prime(32003);
    let direct = HochsterOptions {
        route: HochsterRoute::Direct,
        ..Default::default()
    };
    let wide = HochsterOptions {
        variable_cap: 40,
        ..Default::default()
    };

    for _ in 0..config.graphs {
        let n = r.random_range(2..=7);
        let g = random_graph(&mut r, n, 0.5);
        let Some(full) = out.ok(hochster_betti(&g.edge_ideal(), QQ), || format!("{g:?}")) else { continue };
        for w in (0u128..1 << n).map(Face::from_bits) {
            let sub = g.restrict(w);
            if let Some(b) = out.ok(hochster_betti(&sub.edge_ideal(), QQ), || format!("{g:?} on {w:?}")) {
                out.check(le(&b, &full), || format!("{g:?}: restriction to {w:?} gives {b} > {full}"));
            }
        }
        let ind = g.independence_complex();
        out.check(stanley_reisner_ideal(&ind) == g.edge_ideal(), || format!("{g:?}: SR(Ind) != I(G)"));
    }
    for _ in 0..config.graphs {
        let n = r.random_range(2..=8);
        let g = random_graph(&mut r, n, 0.4);
        let ind = g.independence_complex();
        out.check(stanley_reisner_ideal(&ind) == g.edge_ideal(), || format!("{g:?}: SR(Ind) != I(G)"));
    }

    let mut discrepancies = 0;
    for _ in 0..config.ideals {
        let n = r.random_range(2..=8);
        let gens = r.random_range(1..=6);
        let ideal = random_squarefree_ideal(&mut r, n, gens);
        let ctx = || ideal.to_string();
        let Some(b) = out.ok(hochster_betti(&ideal, QQ), ctx) else { continue };
        out.check(alternating_sum_check(&b), || format!("{ideal}: alternating sum of {b}"));
        out.check(taylor_bound_holds(&b, ideal.generators().len()), || format!("{ideal}: Taylor bound on {b}"));
        if let Some(bq) = out.ok(hochster_betti(&ideal, f32003), ctx) {
            if bq != b {
                discrepancies += 1;
                out.notes.push(format!("{ideal}: QQ {b} vs F32003 {bq}"));
            }
        }
        if let Some(bd) = out.ok(hochster_betti_with(&ideal, QQ, &direct), ctx) {
            out.check(bd == b, || format!("{ideal}: direct {bd} vs dual {b}"));
        }
        for x in 0..n {
            let colon = ideal.colon_variable(x);
            let bc = if colon.is_unit() {
                Ok(BettiSequence::new(vec![1]).expect("nonzero"))
            } else {
                hochster_betti(&colon, QQ)
            };
            if let Some(bc) = out.ok(bc, || format!("{ideal} : x{}", x + 1)) {
                out.check(le(&bc, &b), || format!("{ideal}: colon by x{} gives {bc} > {b}", x + 1));
            }
        }
        if b.len() <= 3 && !b.is_empty() {
            out.check(kalai_decompose(&b.as_fvector()).is_some(), || format!("{ideal}: projdim <= 2 Betti {b} not acyclic"));
        }
        if let Some(delta) = out.ok(complex_of_ideal(&ideal), ctx) {
            out.check(stanley_reisner_ideal(&delta) == ideal, || format!("{ideal}: SR round trip"));
        }

        // a second ideal on fresh variables
        let m = r.random_range(1..=4);
        let k = r.random_range(1..=3);
        let other = random_squarefree_ideal(&mut r, m, k);
        let (Ok(left), Ok(right)) = (ideal.embed(0, n + m), other.embed(n, n + m)) else { continue };
        let Some(sum) = out.ok(left.sum(&right), ctx) else { continue };
        let Some(bo) = out.ok(hochster_betti(&other, QQ), || other.to_string()) else { continue };
        if let Some(bs) = out.ok(hochster_betti(&sum, QQ), || sum.to_string()) {
            let expected = convolve(&b.quotient(), &bo.quotient());
            out.check(bs.quotient() == expected, || format!("{ideal} + {other}: {bs} vs convolution {expected:?}"));
        }
    }
    out.notes.push(format!("{discrepancies} QQ/F32003 discrepancies"));

    for _ in 0..config.ideals / 2 {
        let n = r.random_range(1..=4);
        let gens = r.random_range(1..=5);
        let ideal = random_generic_ideal(&mut r, n, gens);
        if !is_generic(&ideal) {
            out.check(false, || format!("{ideal}: generator not generic"));
            continue;
        }
        let Some(s) = out.ok(scarf_betti(&ideal), || ideal.to_string()) else { continue };
        if let Some(b) = out.ok(betti_with(&ideal, QQ, &wide), || ideal.to_string()) {
            out.check(s == b, || format!("{ideal}: Scarf {s} vs oracle {b}"));
        }
    }
    out
}

/// Every suite with its default configuration.
pub fn all_suites(seed: u64) -> Vec<SuiteOutcome> {
    vec![
        six_cycle_suite(),
        worked_example_suite(),
        chordal_suite(&ChordalConfig { seed, ..Default::default() }),
        cyclic_suite(9, 10),
        fvector_suite(200, seed),
        stable_suite(&StableConfig { seed, ..Default::default() }),
        nearly_scarf_suite(4),
        gorenstein_suite(),
        property_suite(&PropertyConfig { seed, ..Default::default() }),
    ]
}
