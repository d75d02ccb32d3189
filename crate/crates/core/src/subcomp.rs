//! Subgraph complementation systems and the number `c₂(G)`.
//!
//! A system's incidence matrix `M` (rows = vertices, columns = sets) gives
//! the fitting matrix `M Mᵀ`, so `mr(G) ≤ c₂(G)`. Conversely a Gram
//! factorization of a minimum-rank fitting matrix is a system, of size `mr`
//! when that matrix has a nonzero diagonal entry and `mr + 1` when the
//! adjacency matrix is the only candidate.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{gram_factor, BitMatrix};
use crate::graph::{full_set, set_to_vec, symmetric_difference, vec_to_set, Graph, VertexSet};
use crate::minrank::MinRankSolver;

/// Ordered list of vertex subsets of `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplementationSystem {
    n: usize,
    sets: Vec<VertexSet>,
}

impl ComplementationSystem {
    pub fn new(n: usize, sets: Vec<VertexSet>) -> Result<Self> {
        for &s in &sets {
            if s & !full_set(n) != 0 {
                let vertex = 63 - (s & !full_set(n)).leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        Ok(Self { n, sets })
    }

    pub fn from_vertex_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        for &v in lists.iter().flatten() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Self::new(n, lists.iter().map(|l| vec_to_set(l)).collect())
    }

    /// Sets are the supports of the columns of `factor`.
    pub fn from_factor(factor: &BitMatrix) -> Self {
        let n = factor.rows();
        let sets = (0..factor.cols())
            .map(|j| (0..n).filter(|&i| factor.get(i, j)).fold(0u64, |s, i| s | 1 << i))
            .collect();
        Self { n, sets }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn vertex_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&s| set_to_vec(s)).collect()
    }

    /// `M(𝒞)`: entry `(v, i)` is 1 when `v` lies in set `i`.
    pub fn incidence_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.n, self.sets.len());
        for (j, &s) in self.sets.iter().enumerate() {
            for v in set_to_vec(s) {
                m.set(v, j, true);
            }
        }
        m
    }

    /// The graph obtained by complementing `K̄ₙ` on every set in turn.
    pub fn generated_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for &s in &self.sets {
            g.complement_subgraph(s);
        }
        g
    }

    /// Drops empty and singleton sets and sorts by (size, vertex list).
    pub fn normalized(&self) -> Self {
        let mut sets: Vec<VertexSet> = self.sets.iter().copied().filter(|s| s.count_ones() >= 2).collect();
        sets.sort_by_key(|&s| (s.count_ones(), set_to_vec(s)));
        Self { n: self.n, sets }
    }
}

impl Serialize for ComplementationSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertex_lists().serialize(s)
    }
}

/// A vertex pair whose co-occurrence parity disagrees with the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ParityMismatch {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
    pub together: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SystemCheck {
    pub valid: bool,
    pub mismatches: Vec<ParityMismatch>,
}

pub fn verify_system(g: &Graph, c: &ComplementationSystem) -> Result<SystemCheck> {
    if g.order() != c.n {
        return Err(Error::SizeMismatch { left: g.order(), right: c.n });
    }
    let mut mismatches = Vec::new();
    for u in 0..c.n {
        for v in u + 1..c.n {
            let pair = 1u64 << u | 1 << v;
            let together = c.sets.iter().filter(|&&s| s & pair == pair).count();
            let adjacent = g.has_edge(u, v);
            if (together % 2 == 1) != adjacent {
                mismatches.push(ParityMismatch { u, v, adjacent, together });
            }
        }
    }
    Ok(SystemCheck { valid: mismatches.is_empty(), mismatches })
}

/// Parity of the number of sets containing each vertex; equals the diagonal
/// of `M Mᵀ`.
pub fn appearance_parity(c: &ComplementationSystem) -> Vec<bool> {
    (0..c.n).map(|v| c.sets.iter().filter(|&&s| s >> v & 1 == 1).count() % 2 == 1).collect()
}

/// Replaces every set `C` by `C △ {v}`.
pub fn symdiff_transform(c: &ComplementationSystem, v: usize) -> Result<ComplementationSystem> {
    if v >= c.n {
        return Err(Error::VertexOutOfRange { vertex: v, n: c.n });
    }
    Ok(ComplementationSystem { n: c.n, sets: c.sets.iter().map(|s| s ^ 1 << v).collect() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C2Result {
    pub c2: usize,
    pub mr: usize,
    pub exceptional: bool,
    pub system: ComplementationSystem,
}

impl Serialize for C2Result {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("C2Result", 5)?;
        st.serialize_field("n", &self.system.n)?;
        st.serialize_field("c2", &self.c2)?;
        st.serialize_field("mr", &self.mr)?;
        st.serialize_field("exceptional", &self.exceptional)?;
        st.serialize_field("system", &self.system)?;
        st.end()
    }
}

/// `c₂(G)` with a minimum system, using `solver` for the rank search.
pub fn c2_with(solver: &MinRankSolver, g: &Graph) -> Result<C2Result> {
    let r = solver.solve(g)?;
    let n = g.order();
    if !g.has_edges() {
        return Ok(C2Result { c2: 0, mr: 0, exceptional: false, system: ComplementationSystem { n, sets: Vec::new() } });
    }
    let exceptional = r.zero_diagonal_unique();
    // Exceptional graphs factor the adjacency matrix itself (k + 1 columns);
    // everything else factors a nonzero-diagonal witness (k columns).
    let target = if exceptional { g.adjacency_matrix() } else { r.witness.fitting_matrix(g) };
    let factor = gram_factor(&target)?;
    let system = ComplementationSystem::from_factor(&factor.factor).normalized();
    let c2 = r.mr + usize::from(exceptional);
    debug_assert_eq!(system.len(), c2);
    Ok(C2Result { c2, mr: r.mr, exceptional, system })
}

pub fn c2(g: &Graph) -> Result<C2Result> {
    c2_with(&MinRankSolver::default(), g)
}

/// `c₂(G)` without building a system.
pub fn c2_value_with(solver: &MinRankSolver, g: &Graph) -> Result<usize> {
    let r = solver.solve(g)?;
    Ok(r.mr + usize::from(g.has_edges() && r.zero_diagonal_unique()))
}

pub fn c2_value(g: &Graph) -> Result<usize> {
    c2_value_with(&MinRankSolver::default(), g)
}

/// Subgraph complementation distance `c₂(G △ H)`.
pub fn distance(g: &Graph, h: &Graph) -> Result<usize> {
    c2_value(&symmetric_difference(g, h)?)
}

/// A minimum system has an all-even appearance vector exactly when the
/// graph is exceptional.
pub fn has_even_minimum_system(g: &Graph) -> Result<bool> {
    MinRankSolver::default().is_exceptional(g)
}

/// Largest order accepted by the exhaustive searches.
pub const BRUTE_FORCE_MAX_ORDER: usize = 8;

fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

fn pair_mask_of_graph(g: &Graph) -> u64 {
    g.edges().fold(0, |m, (u, v)| m | 1 << pair_index(u, v))
}

fn clique_mask(set: VertexSet) -> u64 {
    let vs = set_to_vec(set);
    let mut m = 0;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            m |= 1 << pair_index(u, v);
        }
    }
    m
}

/// Subsets with at least two vertices, in increasing mask order, with
/// their clique edge masks.
fn candidate_sets(n: usize) -> Vec<(VertexSet, u64)> {
    (0..1u64 << n).filter(|s| s.count_ones() >= 2).map(|s| (s, clique_mask(s))).collect()
}

fn combos(
    cands: &[(VertexSet, u64)],
    start: usize,
    left: usize,
    target: u64,
    chosen: &mut Vec<VertexSet>,
    found: &mut dyn FnMut(&[VertexSet]) -> bool,
) -> bool {
    if left == 0 {
        return target == 0 && found(chosen);
    }
    for i in start..cands.len() {
        if cands.len() - i < left {
            break;
        }
        chosen.push(cands[i].0);
        let stop = combos(cands, i + 1, left - 1, target ^ cands[i].1, chosen, found);
        chosen.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Exhaustive search over sets of distinct subsets (each of size ≥ 2) by
/// increasing cardinality. Duplicate subsets cancel, so this is complete.
pub fn brute_force_c2(g: &Graph, max_size: usize) -> Option<(usize, ComplementationSystem)> {
    let n = g.order();
    assert!(n <= BRUTE_FORCE_MAX_ORDER, "brute force is limited to n <= {BRUTE_FORCE_MAX_ORDER}");
    let target = pair_mask_of_graph(g);
    let cands = candidate_sets(n);
    for k in 0..=max_size {
        let mut hit = None;
        combos(&cands, 0, k, target, &mut Vec::new(), &mut |sets| {
            hit = Some(sets.to_vec());
            true
        });
        if let Some(sets) = hit {
            return Some((k, ComplementationSystem { n, sets }));
        }
    }
    None
}

/// Every minimum system (as a set of distinct subsets), if `c₂ ≤ max_size`.
pub fn all_minimum_systems(g: &Graph, max_size: usize) -> Option<(usize, Vec<ComplementationSystem>)> {
    let n = g.order();
    let (k, _) = brute_force_c2(g, max_size)?;
    let target = pair_mask_of_graph(g);
    let cands = candidate_sets(n);
    let mut all = Vec::new();
    combos(&cands, 0, k, target, &mut Vec::new(), &mut |sets| {
        all.push(ComplementationSystem { n, sets: sets.to_vec() });
        false
    });
    Some((k, all))
}
