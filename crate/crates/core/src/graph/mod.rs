//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, stored as
//! one adjacency word per vertex.

mod canon;
mod edgelist;
mod enumerate;
mod graph6;
mod induced;

pub use canon::{canonical_form, canonical_labeling, isomorphic, CanonicalForm};
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use enumerate::{augment_classes, enumerate_nonisomorphic, BUILTIN_ENUMERATION_MAX};
pub use graph6::{emit_graph6, parse_graph6};
pub use induced::contains_induced;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Largest supported order (the graph6 short-form range).
pub const MAX_ORDER: usize = 62;

/// Vertex subset as a bit mask.
pub type VertexSet = u64;

pub(crate) fn set_to_vec(set: VertexSet) -> Vec<usize> {
    let mut out = Vec::with_capacity(set.count_ones() as usize);
    let mut s = set;
    while s != 0 {
        out.push(s.trailing_zeros() as usize);
        s &= s - 1;
    }
    out
}

pub(crate) fn vec_to_set(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | 1 << v)
}

pub(crate) fn full_set(n: usize) -> VertexSet {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices. Panics if `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Self {
        Self::try_empty(n).expect("graph order")
    }

    pub fn try_empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge { n, max: MAX_ORDER });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn try_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::MalformedEdgeList(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Panics on loops or out-of-range vertices; use [`Graph::try_from_edges`] for input data.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::try_from_edges(n, edges).expect("valid edge list")
    }

    /// Builds a graph from adjacency masks; the masks must be symmetric and loop-free.
    pub fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        assert!(n <= MAX_ORDER);
        for (v, &row) in adj.iter().enumerate() {
            assert_eq!(row >> v & 1, 0, "self-loop at {v}");
            assert_eq!(row & !full_set(n), 0, "neighbour out of range at {v}");
            for u in set_to_vec(row) {
                assert!(adj[u] >> v & 1 == 1, "asymmetric adjacency {v}-{u}");
            }
        }
        Self { n, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn adjacency_rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | 1 << v
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u != v);
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    /// Edges `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| set_to_vec(self.adj[u] >> u >> 1).into_iter().map(move |d| (u, u + 1 + d)))
    }

    pub fn has_edges(&self) -> bool {
        self.adj.iter().any(|&r| r != 0)
    }

    /// Adjacency matrix with zero diagonal.
    pub fn adjacency_matrix(&self) -> BitMatrix {
        BitMatrix::from_u64_rows(&self.adj, self.n)
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { n: k, adj }
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// `perm[v]` is the new label of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// `self + other`, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        assert!(n <= MAX_ORDER);
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Graph { n, adj }
    }

    pub fn complement(&self) -> Graph {
        let all = full_set(self.n);
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Toggles all edges inside `set`.
    pub fn complement_subgraph(&mut self, set: VertexSet) {
        for v in set_to_vec(set) {
            self.adj[v] ^= set & !(1 << v);
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0) == full_set(self.n)
    }

    fn reach(&self, start: usize) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in set_to_vec(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_forest(&self) -> bool {
        self.size() + components(self).len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.size() == self.n - 1
    }

    /// Every component is a path.
    pub fn is_linear_forest(&self) -> bool {
        self.max_degree() <= 2 && self.is_forest()
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    /// Wheel on `n` vertices: hub 0 joined to the rim cycle `1..n`.
    pub fn wheel(n: usize) -> Graph {
        assert!(n >= 4);
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(0, i);
            g.add_edge(i, if i + 1 == n { 1 } else { i + 1 });
        }
        g
    }
}

/// Connected components with their induced subgraphs, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<(Vec<usize>, Graph)> {
    let mut remaining = full_set(g.n);
    let mut out = Vec::new();
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        let comp = g.reach(v);
        remaining &= !comp;
        let verts = set_to_vec(comp);
        let sub = g.induced_subgraph(&verts);
        out.push((verts, sub));
    }
    out
}

/// Graph on the common vertex set whose edges lie in exactly one input.
pub fn symmetric_difference(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n != h.n {
        return Err(Error::SizeMismatch { left: g.n, right: h.n });
    }
    let adj = g.adj.iter().zip(&h.adj).map(|(a, b)| a ^ b).collect();
    Ok(Graph { n: g.n, adj })
}
