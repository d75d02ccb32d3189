//! Exact tools for the subgraph complementation number `c₂(G)`, the minimum
//! rank of a graph over GF(2), and the triclique number `t₂(G)`, with
//! checkable certificates for each.
//!
//! A subgraph complementation system for `G` is a list of vertex subsets such
//! that two vertices are adjacent exactly when they lie together in an odd
//! number of the subsets. `c₂(G)` is the fewest subsets that suffice.

pub mod bounds;
pub mod error;
pub mod forbidden;
pub mod forest;
pub mod gf2;
pub mod graph;
pub mod minrank;
pub mod subcomp;
pub mod tricliques;

pub use error::{Error, Result};
pub use gf2::{rank_gf2, BitMatrix, BlockKind, CongruenceDecomposition, GramCase, GramFactorization};
pub use graph::{components, symmetric_difference, CanonicalForm, Graph, VertexSet, MAX_ORDER};
pub use minrank::{min_rank_f2, MinRankResult, MinRankSolver};
pub use subcomp::{c2, C2Result, ComplementationSystem};
pub use tricliques::{t2, Triclique, TricliqueSystem};
