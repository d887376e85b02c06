//! Plain-text formats. Blank lines and `#` comments are ignored everywhere.
//!
//! * graphs: one edge `u v` per line
//! * complexes: one facet per line, vertices separated by whitespace
//! * ideals: one generator per line such as `x1*x2` or `x2^3*x3`

use std::collections::BTreeSet;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{natural_cmp, Graph};
use crate::ideal::{Monomial, MonomialIdeal};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [u, v] if u == v => return Err(parse_err(line, format!("loop at {u}"))),
            [u, v] => edges.push((*u, *v)),
            _ => return Err(parse_err(line, "expected exactly two vertex labels")),
        }
    }
    Graph::from_labeled_edges(edges)
}

/// A complex with its vertex labels; labels are numbered in natural order.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    pub complex: SimplicialComplex,
    pub labels: Vec<String>,
}

pub fn parse_complex(text: &str) -> Result<LabeledComplex> {
    let rows: Vec<(usize, Vec<&str>)> = content_lines(text)
        .map(|(line, content)| (line, content.split_whitespace().collect()))
        .collect();
    let mut labels: Vec<String> = rows
        .iter()
        .flat_map(|(_, r)| r.iter().map(|s| s.to_string()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    labels.sort_by(|a, b| natural_cmp(a, b));
    let mut facets = Vec::with_capacity(rows.len());
    for (line, row) in &rows {
        let idx: Vec<usize> = row
            .iter()
            .map(|s| labels.iter().position(|l| l == s).expect("label collected"))
            .collect();
        let face = Face::try_from_vertices(idx.iter().copied())?;
        if face.len() != idx.len() {
            return Err(parse_err(*line, "repeated vertex in facet"));
        }
        facets.push(face);
    }
    Ok(LabeledComplex {
        complex: SimplicialComplex::from_facets(labels.len(), facets)?,
        labels,
    })
}

fn parse_monomial(line: usize, s: &str) -> Result<Vec<(usize, u32)>> {
    if s == "1" {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|factor| {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v,
                    e.parse::<u32>()
                        .map_err(|_| parse_err(line, format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let index = var
                .strip_prefix('x')
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 1)
                .ok_or_else(|| parse_err(line, format!("expected a variable x<k>, got {var:?}")))?;
            Ok((index - 1, exp))
        })
        .collect()
}

/// Generators may also be separated by commas; surrounding parentheses are
/// accepted. The ring has as many variables as the largest index used,
/// or `min_vars` if larger.
pub fn parse_ideal(text: &str, min_vars: usize) -> Result<MonomialIdeal> {
    let mut parsed = Vec::new();
    for (line, content) in content_lines(text) {
        let content = content.trim_start_matches('(').trim_end_matches(')');
        for g in content.split(',').map(str::trim).filter(|g| !g.is_empty()) {
            parsed.push(parse_monomial(line, g)?);
        }
    }
    let n = parsed
        .iter()
        .flatten()
        .map(|&(v, _)| v + 1)
        .max()
        .unwrap_or(0)
        .max(min_vars);
    let gens = parsed
        .into_iter()
        .map(|factors| {
            let mut e = vec![0u32; n];
            for (v, a) in factors {
                e[v] += a;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

/// One facet per line; vertices are written with `labels` when given and as
/// 0-based indices otherwise. The empty complex is a single blank facet
/// line, written as `{}`.
pub fn write_facets(complex: &SimplicialComplex, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    for facet in complex.facets() {
        if facet.is_empty() {
            out.push_str("{}\n");
            continue;
        }
        let names: Vec<String> = facet
            .vertices()
            .map(|v| match labels {
                Some(l) => l[v].clone(),
                None => v.to_string(),
            })
            .collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}
