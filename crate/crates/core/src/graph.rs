//! Finite simple graphs and their edge ideals / independence complexes.

use std::cmp::Ordering;
use std::fmt;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// A finite simple graph on the vertex range `0..n`. Display labels are kept
/// alongside for I/O only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Face>,
}

/// Orders labels like `y2 < y10` by comparing digit runs numerically.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for ((da, sa), (db, sb)) in ca.iter().zip(cb.iter()) {
        let ord = match (da, db) {
            (true, true) => {
                let (ta, tb) = (sa.trim_start_matches('0'), sb.trim_start_matches('0'));
                ta.len().cmp(&tb.len()).then_with(|| ta.cmp(tb))
            }
            _ => sa.cmp(sb),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled `x1, ..., xn`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_labels((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        if labels.len() > Face::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: labels.len(),
                max: Face::MAX_VERTICES,
            });
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![Face::EMPTY; n],
        })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from labelled edges; vertices are numbered in natural
    /// label order.
    pub fn from_labeled_edges<'a, I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let edges: Vec<(&str, &str)> = edges.into_iter().collect();
        let mut labels: Vec<&str> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_by(|a, b| natural_cmp(a, b));
        labels.dedup();
        let index = |s: &str| labels.binary_search_by(|l| natural_cmp(l, s)).unwrap();
        let mut g = Self::with_labels(labels.iter().map(|s| s.to_string()).collect())?;
        for &(a, b) in &edges {
            g.add_edge(index(a), index(b))?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; repeated edges are absorbed, loops rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
        }
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
        Ok(())
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] = g.adj[u].without(v);
        g.adj[v] = g.adj[v].without(u);
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> Face {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| {
                self.adj[u]
                    .vertices()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_complete_on(&self, set: Face) -> bool {
        set.vertices()
            .all(|v| set.without(v).is_subset(self.adj[v]))
    }

    /// Vertices with at least one neighbour.
    pub fn non_isolated(&self) -> Face {
        Face::from_vertices((0..self.vertex_count()).filter(|&v| !self.adj[v].is_empty()))
    }

    /// `G_W`: the graph on `W` keeping the edges inside `W`. Vertices of `W`
    /// are renumbered in increasing order and keep their labels.
    pub fn restrict(&self, subset: Face) -> Graph {
        let keep: Vec<usize> = subset
            .vertices()
            .filter(|&v| v < self.vertex_count())
            .collect();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (k, &v) in keep.iter().enumerate() {
            index[v] = k;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                Face::from_vertices(
                    self.adj[v]
                        .intersection(subset)
                        .vertices()
                        .map(|w| index[w]),
                )
            })
            .collect();
        Graph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            adj,
        }
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> Graph {
        self.restrict(self.non_isolated())
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        let mut adj = vec![Face::EMPTY; n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
            adj[perm[v]] = Face::from_vertices(self.adj[v].vertices().map(|w| perm[w]));
        }
        Graph { labels, adj }
    }

    /// `I(G)`: one squarefree quadric `x_u x_v` per edge.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let n = self.vertex_count();
        let gens = self
            .edges()
            .into_iter()
            .map(|(u, v)| Monomial::from_support(n, Face::from_vertices([u, v])))
            .collect();
        MonomialIdeal::new(n, gens).expect("edge monomials have the right arity")
    }

    /// The complex of independent sets; its Stanley–Reisner ideal is `I(G)`.
    pub fn independence_complex(&self) -> SimplicialComplex {
        let n = self.vertex_count();
        let mut faces = vec![Face::EMPTY];
        let mut layer = vec![Face::EMPTY];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for f in &layer {
                let start = f.max_vertex().map_or(0, |m| m + 1);
                let blocked = f
                    .vertices()
                    .fold(*f, |acc, v| acc.union(self.adj[v]));
                for v in start..n {
                    if !blocked.contains(v) {
                        next.push(f.with(v));
                    }
                }
            }
            faces.extend_from_slice(&next);
            layer = next;
        }
        SimplicialComplex::from_faces(n, faces).expect("independent sets are downward closed")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Cycle `C_n` on `0..n`.
pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges in range")
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
        .expect("complete graph edges in range")
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges in range")
}
