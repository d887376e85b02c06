//! Betti sequences of monomial ideals, an independent homology oracle, and
//! constructions realizing Betti sequences as f-vectors of simplicial
//! complexes.

pub mod chordal;
pub mod complex;
pub mod cyclic;
pub mod error;
pub mod fvector;
pub mod gorenstein;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod sequence;
pub mod special;
pub mod suites;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::{FieldSelector, HomologyProfile};
pub use ideal::{Monomial, MonomialIdeal};
pub use sequence::{binomial, BettiSequence, FVector};
