//! Exact minimum rank over GF(2) of the symmetric matrices fitting a graph.
//!
//! Off the diagonal a fitting matrix is the adjacency matrix; the diagonal is
//! free, so a component on `n` vertices has `2^n` candidates. Each component
//! is searched on its own and the results summed, since fitting matrices of a
//! disconnected graph are block diagonal.

use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{rank_u64_rows, BitMatrix};
use crate::graph::{components, full_set, Graph};

/// Default per-component ceiling on the diagonal enumeration.
pub const DEFAULT_CEILING: usize = 20;

const BIPARTITION_SAMPLES: usize = 32;
const PARALLEL_FROM: usize = 14;

/// Diagonal of a fitting matrix; bit `v` is the `(v, v)` entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagonalAssignment {
    n: usize,
    bits: u64,
}

impl DiagonalAssignment {
    pub fn zero(n: usize) -> Self {
        Self { n, bits: 0 }
    }

    pub fn from_mask(n: usize, bits: u64) -> Self {
        assert_eq!(bits & !full_set(n), 0);
        Self { n, bits }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, v: usize) -> bool {
        self.bits >> v & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// The adjacency matrix of `g` with this diagonal.
    pub fn fitting_matrix(&self, g: &Graph) -> BitMatrix {
        assert_eq!(g.order(), self.n);
        let rows: Vec<u64> = (0..self.n).map(|v| g.neighbors(v) | (self.bits & 1 << v)).collect();
        BitMatrix::from_u64_rows(&rows, self.n)
    }
}

impl Serialize for DiagonalAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let bits: Vec<u8> = (0..self.n).map(|v| self.get(v) as u8).collect();
        bits.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MinRankResult {
    pub mr: usize,
    /// Rank with the all-zero diagonal.
    pub rank_adjacency: usize,
    /// Minimum over nonzero diagonals; `None` when there is no vertex.
    pub best_nonzero_diag_rank: Option<usize>,
    /// A diagonal reaching `mr`, nonzero whenever one exists.
    pub witness: DiagonalAssignment,
}

impl MinRankResult {
    /// The minimum is reached only by the adjacency matrix itself.
    pub fn zero_diagonal_unique(&self) -> bool {
        self.best_nonzero_diag_rank.is_some_and(|b| self.rank_adjacency < b)
    }
}

/// Minimum-rank search with a configurable per-component ceiling.
#[derive(Debug, Clone, Copy)]
pub struct MinRankSolver {
    pub ceiling: usize,
}

impl Default for MinRankSolver {
    fn default() -> Self {
        Self { ceiling: DEFAULT_CEILING }
    }
}

impl MinRankSolver {
    pub fn with_ceiling(ceiling: usize) -> Self {
        Self { ceiling }
    }

    /// Per-component results, in component order.
    pub fn component_minrank(&self, g: &Graph) -> Result<Vec<MinRankResult>> {
        let comps = components(g);
        if let Some((verts, _)) = comps.iter().find(|(v, _)| v.len() > self.ceiling) {
            return Err(Error::ComponentTooLarge { vertices: verts.clone(), ceiling: self.ceiling });
        }
        Ok(comps.iter().map(|(_, sub)| search_connected(sub)).collect())
    }

    pub fn solve(&self, g: &Graph) -> Result<MinRankResult> {
        let comps = components(g);
        let parts = self.component_minrank(g)?;
        let mr: usize = parts.iter().map(|p| p.mr).sum();
        let rank_adjacency = parts.iter().map(|p| p.rank_adjacency).sum();
        // At least one component must carry a nonzero diagonal entry.
        let best_nonzero_diag_rank = parts
            .iter()
            .filter_map(|p| p.best_nonzero_diag_rank.map(|b| b - p.mr))
            .min()
            .map(|extra| mr + extra);
        let mut bits = 0u64;
        for ((verts, _), part) in comps.iter().zip(&parts) {
            for (local, &v) in verts.iter().enumerate() {
                if part.witness.get(local) {
                    bits |= 1 << v;
                }
            }
        }
        Ok(MinRankResult {
            mr,
            rank_adjacency,
            best_nonzero_diag_rank,
            witness: DiagonalAssignment::from_mask(g.order(), bits),
        })
    }

    pub fn is_exceptional(&self, g: &Graph) -> Result<bool> {
        if !g.has_edges() {
            return Err(Error::EmptyGraph);
        }
        Ok(self.solve(g)?.zero_diagonal_unique())
    }
}

pub fn min_rank_f2(g: &Graph) -> Result<MinRankResult> {
    MinRankSolver::default().solve(g)
}

pub fn component_minrank(g: &Graph) -> Result<Vec<MinRankResult>> {
    MinRankSolver::default().component_minrank(g)
}

/// Nonempty graph whose adjacency matrix is its unique minimum-rank fitting
/// matrix (equivalently `c₂ = mr + 1`).
pub fn is_exceptional(g: &Graph) -> Result<bool> {
    MinRankSolver::default().is_exceptional(g)
}

/// Every fitting matrix contains `A[S, V∖S]` verbatim, so its rank bounds
/// the minimum rank from below.
fn bipartite_lower_bound(g: &Graph) -> usize {
    let n = g.order();
    if n < 2 {
        return 0;
    }
    let all = full_set(n);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f2b_10c5);
    let mut best = usize::from(g.has_edges());
    for _ in 0..BIPARTITION_SAMPLES {
        let side: u64 = rng.gen::<u64>() & all;
        let mut rows: Vec<u64> = (0..n).filter(|&v| side >> v & 1 == 1).map(|v| g.neighbors(v) & !side).collect();
        best = best.max(rank_u64_rows(&mut rows));
    }
    best
}

/// Diagonal for enumeration index `x`: vertex 0 is the most significant
/// bit, so increasing `x` walks the diagonals in lexicographic order.
fn diagonal_of(x: u64, n: usize) -> u64 {
    x.reverse_bits() >> (64 - n)
}

fn rank_with_diagonal(adj: &[u64], diag: u64, scratch: &mut Vec<u64>) -> usize {
    scratch.clear();
    scratch.extend(adj.iter().enumerate().map(|(v, &r)| r | (diag & 1 << v)));
    rank_u64_rows(scratch)
}

/// Smallest `(rank, x)` over `x` in `range`, stopping at the first `x`
/// reaching `floor`.
fn scan(adj: &[u64], n: usize, range: std::ops::Range<u64>, floor: usize, stop: impl Fn() -> bool) -> (usize, u64) {
    let mut scratch = Vec::with_capacity(n);
    let mut best = (usize::MAX, u64::MAX);
    for x in range {
        if x & 0xfff == 0 && stop() {
            break;
        }
        let r = rank_with_diagonal(adj, diagonal_of(x, n), &mut scratch);
        if r < best.0 {
            best = (r, x);
            if r <= floor {
                break;
            }
        }
    }
    best
}

fn search_connected(g: &Graph) -> MinRankResult {
    let n = g.order();
    if n == 0 {
        return MinRankResult {
            mr: 0,
            rank_adjacency: 0,
            best_nonzero_diag_rank: None,
            witness: DiagonalAssignment::zero(0),
        };
    }
    let adj = g.adjacency_rows();
    let rank_adjacency = rank_u64_rows(&mut adj.to_vec());
    let floor = bipartite_lower_bound(g);
    let end = 1u64 << n;

    let (best, x) = if n < PARALLEL_FROM {
        scan(adj, n, 1..end, floor, || false)
    } else {
        let chunks = 64u64;
        let len = end / chunks;
        let hit = AtomicUsize::new(usize::MAX);
        let results: Vec<(usize, u64)> = (0..chunks as usize)
            .into_par_iter()
            .map(|i| {
                let lo = (i as u64 * len).max(1);
                let hi = (i as u64 + 1) * len;
                let r = scan(adj, n, lo..hi, floor, || hit.load(Ordering::Relaxed) < i);
                if r.0 <= floor {
                    hit.fetch_min(i, Ordering::Relaxed);
                }
                r
            })
            .collect();
        results.into_iter().min().expect("at least one chunk")
    };

    let mr = rank_adjacency.min(best);
    let witness = if best == mr {
        DiagonalAssignment::from_mask(n, diagonal_of(x, n))
    } else {
        DiagonalAssignment::zero(n)
    };
    MinRankResult {
        mr,
        rank_adjacency,
        best_nonzero_diag_rank: Some(best),
        witness,
    }
}
