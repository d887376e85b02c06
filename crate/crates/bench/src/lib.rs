//! Fixed inputs shared by the benchmarks.

use betti_core::graph::{cycle, path};
use betti_core::homology::FieldSelector;
use betti_core::{Graph, MonomialIdeal};

/// Edge ideals and Stanley-Reisner ideals of moderate size, labelled for
/// benchmark ids.
pub fn oracle_inputs() -> Vec<(&'static str, MonomialIdeal)> {
    let boundary = betti_core::cyclic::gale_boundary_complex(9, 4).expect("valid parameters");
    vec![
        ("cycle10", cycle(10).edge_ideal()),
        ("path12", path(12).edge_ideal()),
        ("ex1", betti_core::gorenstein::ex1_ideal()),
        ("cyclic9_4", betti_core::ideal::stanley_reisner_ideal(&boundary)),
    ]
}

/// Chordal graphs for the recursion benchmarks: a path, a fan of triangles
/// and the eight-vertex example.
pub fn chordal_inputs() -> Vec<(&'static str, Graph)> {
    let fan = Graph::from_edges(12, (1..12).map(|i| (0, i)).chain((1..11).map(|i| (i, i + 1)))).expect("fan edges");
    vec![
        ("path16", path(16)),
        ("fan12", fan),
        ("example", betti_core::suites::worked_example_graph()),
    ]
}

/// A dense random-looking integer matrix of the given size.
pub fn rank_matrix(rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|i| (0..cols).map(|j| ((i * 31 + j * 17 + i * j) % 7) as i64 - 3).collect())
        .collect()
}

pub const FIELDS: [FieldSelector; 2] = [FieldSelector::Rationals, FieldSelector::Prime(2)];
