//! Monomial ideals given by their minimal generating sets, and the
//! Stanley–Reisner correspondence with simplicial complexes.

use std::cmp::Reverse;
use std::fmt;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Exponent vector `x_1^{a_1} ⋯ x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The squarefree monomial `∏_{v ∈ support} x_v`.
    pub fn from_support(nvars: usize, support: Face) -> Self {
        Monomial((0..nvars).map(|v| u32::from(support.contains(v))).collect())
    }

    /// `x_var` in `nvars` variables.
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Variables with a nonzero exponent. Only valid for `nvars <= 128`.
    pub fn support(&self) -> Face {
        Face::from_vertices(self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v))
    }

    /// Largest variable index (0-based) dividing this monomial, `m(u) - 1`
    /// in 1-based terms.
    pub fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// `self · x_up / x_down`, or `None` if `x_down` does not divide.
    pub fn exchange(&self, up: usize, down: usize) -> Option<Monomial> {
        if self.0[down] == 0 {
            return None;
        }
        let mut m = self.0.clone();
        m[down] -= 1;
        m[up] += 1;
        Some(Monomial(m))
    }

    /// Pads with zero exponents, placing the old variables at `offset`.
    pub fn embed(&self, offset: usize, nvars: usize) -> Monomial {
        let mut m = vec![0; nvars];
        m[offset..offset + self.0.len()].copy_from_slice(&self.0);
        Monomial(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A monomial ideal in `variable_count` variables, stored as its minimal
/// generating set sorted by degree and then lexicographically (`x_1`
/// largest).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` (drops duplicates and non-minimal elements).
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::ArityMismatch {
                got: bad.nvars(),
                expected: nvars,
            });
        }
        let mut gens = gens;
        gens.sort_by_key(|g| (g.degree(), Reverse(g.clone())));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            nvars,
            gens: minimal,
        })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    /// Squarefree ideal with the given generator supports.
    pub fn from_supports<I: IntoIterator<Item = Face>>(nvars: usize, supports: I) -> Result<Self> {
        let ambient = Face::full(nvars.min(Face::MAX_VERTICES));
        let mut gens = Vec::new();
        for s in supports {
            if !s.is_subset(ambient) {
                return Err(Error::VertexOutOfRange {
                    vertex: s.max_vertex().unwrap_or(0),
                    vertex_count: nvars,
                });
            }
            gens.push(Monomial::from_support(nvars, s));
        }
        Self::new(nvars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Generator supports of a squarefree ideal as vertex sets.
    pub fn supports(&self) -> Result<Vec<Face>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.nvars > Face::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: self.nvars,
                max: Face::MAX_VERTICES,
            });
        }
        Ok(self.gens.iter().map(Monomial::support).collect())
    }

    /// `I : x_var`, computed on generators and re-minimalized.
    pub fn colon_variable(&self, var: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.0.clone();
                e[var] = e[var].saturating_sub(1);
                Monomial(e)
            })
            .collect();
        Self::new(self.nvars, gens).expect("arity preserved")
    }

    /// Moves the ideal into `nvars` variables starting at `offset`.
    pub fn embed(&self, offset: usize, nvars: usize) -> Result<MonomialIdeal> {
        if offset + self.nvars > nvars {
            return Err(Error::ArityMismatch {
                got: offset + self.nvars,
                expected: nvars,
            });
        }
        Self::new(nvars, self.gens.iter().map(|g| g.embed(offset, nvars)).collect())
    }

    /// `I + J` in a common ring.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                got: other.nvars,
                expected: self.nvars,
            });
        }
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    /// `I + (y)` for a fresh variable `y` appended after the existing ones.
    pub fn adjoin_variable(&self) -> MonomialIdeal {
        let n = self.nvars + 1;
        let mut gens: Vec<Monomial> = self.gens.iter().map(|g| g.embed(0, n)).collect();
        gens.push(Monomial::variable(n, self.nvars));
        Self::new(n, gens).expect("arity preserved")
    }

    /// Standard polarization: `x_j^e` becomes `x_{j,1} ⋯ x_{j,e}`. Each
    /// original variable keeps at least one slot, so squarefree ideals map
    /// to themselves.
    pub fn polarize(&self) -> MonomialIdeal {
        let widths: Vec<usize> = (0..self.nvars)
            .map(|j| {
                self.gens
                    .iter()
                    .map(|g| g.0[j] as usize)
                    .max()
                    .unwrap_or(0)
                    .max(1)
            })
            .collect();
        let mut offsets = Vec::with_capacity(self.nvars);
        let mut total = 0;
        for w in &widths {
            offsets.push(total);
            total += w;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; total];
                for (j, &a) in g.0.iter().enumerate() {
                    for k in 0..a as usize {
                        e[offsets[j] + k] = 1;
                    }
                }
                Monomial(e)
            })
            .collect();
        Self::new(total, gens).expect("polarized arity")
    }

    /// Generators of the variables actually used, dropping unused variables.
    pub fn compacted(&self) -> MonomialIdeal {
        let used: Vec<usize> = (0..self.nvars)
            .filter(|&j| self.gens.iter().any(|g| g.0[j] > 0))
            .collect();
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial(used.iter().map(|&j| g.0[j]).collect()))
            .collect();
        Self::new(used.len(), gens).expect("compacted arity")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} variables", self.nvars)
    }
}

/// `I_Δ`: generated by the minimal nonfaces of `Δ` on its ambient range.
/// The void complex gives the unit ideal.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.vertex_count();
    let mut nonfaces: Vec<Face> = Vec::new();
    if complex.is_void() {
        nonfaces.push(Face::EMPTY);
    }
    for &f in complex.faces() {
        for v in 0..n {
            if f.contains(v) {
                continue;
            }
            let s = f.with(v);
            if !complex.contains(s) && s.vertices().all(|w| complex.contains(s.without(w))) {
                nonfaces.push(s);
            }
        }
    }
    nonfaces.sort_unstable_by_key(|f| f.bits());
    nonfaces.dedup();
    MonomialIdeal::from_supports(n, nonfaces).expect("nonfaces lie in the ambient range")
}

/// The complex whose Stanley–Reisner ideal is `ideal`: subsets of the
/// variables containing no generator support.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    let supports = ideal.supports()?;
    let n = ideal.num_vars();
    if ideal.is_unit() {
        return Ok(SimplicialComplex::void(n));
    }
    let is_face = |f: Face| !supports.iter().any(|s| s.is_subset(f));
    let mut faces = vec![Face::EMPTY];
    let mut layer = vec![Face::EMPTY];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for f in &layer {
            let start = f.max_vertex().map_or(0, |m| m + 1);
            for v in start..n {
                let g = f.with(v);
                if is_face(g) {
                    next.push(g);
                }
            }
        }
        faces.extend_from_slice(&next);
        layer = next;
    }
    SimplicialComplex::from_faces(n, faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn minimalization() {
        let i = MonomialIdeal::new(2, vec![mono(&[2, 1]), mono(&[1, 0]), mono(&[1, 0]), mono(&[0, 3])]).unwrap();
        assert_eq!(i.to_string(), "(x1, x2^3)");
        assert!(MonomialIdeal::new(2, vec![mono(&[1])]).is_err());
    }

    #[test]
    fn three_points_ideal() {
        let pts = SimplicialComplex::from_facets(3, (0..3).map(Face::singleton)).unwrap();
        let i = stanley_reisner_ideal(&pts);
        assert_eq!(i.to_string(), "(x1*x2, x1*x3, x2*x3)");
        assert_eq!(complex_of_ideal(&i).unwrap(), pts);
    }

    #[test]
    fn ghost_vertices_are_linear_generators() {
        let c = SimplicialComplex::from_facets(3, [Face::from_vertices([0, 1])]).unwrap();
        let i = stanley_reisner_ideal(&c);
        assert_eq!(i.to_string(), "(x3)");
        assert_eq!(complex_of_ideal(&i).unwrap(), c);
    }

    #[test]
    fn void_and_unit() {
        let i = stanley_reisner_ideal(&SimplicialComplex::void(2));
        assert!(i.is_unit());
        assert!(complex_of_ideal(&i).unwrap().is_void());
        let full = stanley_reisner_ideal(&SimplicialComplex::simplex(3));
        assert!(full.is_zero());
    }

    #[test]
    fn ex1_complex() {
        let supports = [[0, 3], [0, 4], [1, 5], [2, 6], [3, 5], [3, 6]]
            .iter()
            .map(|s| Face::from_vertices(s.iter().copied()))
            .chain([Face::from_vertices([1, 2, 4])]);
        let i = MonomialIdeal::from_supports(7, supports).unwrap();
        let c = complex_of_ideal(&i).unwrap();
        // brute force over all 128 subsets
        let brute = (0u128..128)
            .map(Face::from_bits)
            .filter(|f| !i.supports().unwrap().iter().any(|s| s.is_subset(*f)))
            .count();
        assert_eq!(c.num_faces(), brute);
        assert_eq!(c.f_vector().unwrap().entries(), &[7, 15, 10]);
        assert_eq!(stanley_reisner_ideal(&c), i);
    }

    #[test]
    fn non_squarefree_rejected() {
        let i = MonomialIdeal::new(1, vec![mono(&[2])]).unwrap();
        assert_eq!(complex_of_ideal(&i), Err(Error::NotSquarefree));
    }

    #[test]
    fn polarization_examples() {
        let sq = MonomialIdeal::from_supports(3, [Face::from_vertices([0, 1])]).unwrap();
        assert_eq!(sq.polarize(), sq);
        let x2 = MonomialIdeal::new(1, vec![mono(&[2])]).unwrap();
        let p = x2.polarize();
        assert_eq!(p.num_vars(), 2);
        assert_eq!(p.to_string(), "(x1*x2)");
        let m2 = MonomialIdeal::new(2, vec![mono(&[2, 0]), mono(&[1, 1]), mono(&[0, 2])]).unwrap();
        let p = m2.polarize();
        assert_eq!(p.num_vars(), 4);
        assert_eq!(p.generators().len(), 3);
        assert!(p.is_squarefree());
    }

    #[test]
    fn colon_by_variable() {
        // (x1 x2, x2 x3) : x2 = (x1, x3)
        let i = MonomialIdeal::from_supports(3, [Face::from_vertices([0, 1]), Face::from_vertices([1, 2])]).unwrap();
        assert_eq!(i.colon_variable(1).to_string(), "(x1, x3)");
        assert_eq!(i.colon_variable(0).to_string(), "(x2)");
    }
}
