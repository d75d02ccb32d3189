//! Triclique systems and `t₂(G)`.
//!
//! A triclique is a complete tripartite graph with parts `X`, `Y`, `Z` (some
//! possibly empty). Its adjacency matrix is `x yᵀ + y xᵀ` for
//! `x = 1_{X∪Z}`, `y = 1_{Y∪Z}`, so a hyperbolic congruence decomposition of
//! the adjacency matrix yields `rank(A) / 2` tricliques, which is optimal.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{congruence_decompose, rank_gf2, BlockKind};
use crate::graph::{full_set, set_to_vec, Graph, VertexSet};

/// Three pairwise disjoint parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triclique {
    pub x: VertexSet,
    pub y: VertexSet,
    pub z: VertexSet,
}

impl Triclique {
    pub fn new(x: VertexSet, y: VertexSet, z: VertexSet) -> Result<Self> {
        if x & y != 0 || x & z != 0 || y & z != 0 {
            return Err(Error::OverlappingParts { index: 0 });
        }
        Ok(Self { x, y, z })
    }

    /// Builds the triclique with adjacency `x yᵀ + y xᵀ`.
    pub fn from_pair(x: VertexSet, y: VertexSet) -> Self {
        Self { x: x & !y, y: y & !x, z: x & y }
    }

    pub fn support(&self) -> VertexSet {
        self.x | self.y | self.z
    }

    /// Adjacency rows of the triclique on `n` vertices.
    pub fn adjacency(&self, n: usize) -> Vec<u64> {
        (0..n)
            .map(|v| {
                let bit = 1u64 << v;
                if self.x & bit != 0 {
                    self.y | self.z
                } else if self.y & bit != 0 {
                    self.x | self.z
                } else if self.z & bit != 0 {
                    self.x | self.y
                } else {
                    0
                }
            })
            .collect()
    }
}

impl Serialize for Triclique {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Triclique", 3)?;
        st.serialize_field("X", &set_to_vec(self.x))?;
        st.serialize_field("Y", &set_to_vec(self.y))?;
        st.serialize_field("Z", &set_to_vec(self.z))?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TricliqueSystem {
    pub n: usize,
    pub tricliques: Vec<Triclique>,
}

impl TricliqueSystem {
    pub fn new(n: usize, tricliques: Vec<Triclique>) -> Result<Self> {
        for (index, t) in tricliques.iter().enumerate() {
            if t.x & t.y != 0 || t.x & t.z != 0 || t.y & t.z != 0 {
                return Err(Error::OverlappingParts { index });
            }
            let stray = t.support() & !full_set(n);
            if stray != 0 {
                return Err(Error::VertexOutOfRange { vertex: stray.trailing_zeros() as usize, n });
            }
        }
        Ok(Self { n, tricliques })
    }

    pub fn len(&self) -> usize {
        self.tricliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tricliques.is_empty()
    }

    /// Sum of the triclique adjacency matrices over GF(2).
    pub fn generated_graph(&self) -> Graph {
        let mut adj = vec![0u64; self.n];
        for t in &self.tricliques {
            for (row, r) in adj.iter_mut().zip(t.adjacency(self.n)) {
                *row ^= r;
            }
        }
        Graph::from_adjacency(adj)
    }
}

impl Serialize for TricliqueSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TricliqueSystem", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("t2", &self.tricliques.len())?;
        st.serialize_field("tricliques", &self.tricliques)?;
        st.end()
    }
}

/// `t₂(G) = rank(A) / 2`.
pub fn t2(g: &Graph) -> usize {
    rank_gf2(&g.adjacency_matrix()) / 2
}

/// A minimum triclique system for `g`.
pub fn build_triclique_system(g: &Graph) -> TricliqueSystem {
    let n = g.order();
    let dec = congruence_decompose(&g.adjacency_matrix()).expect("adjacency matrices are symmetric");
    debug_assert!(dec.blocks.iter().all(|&b| b == BlockKind::Hyperbolic));
    let cols: Vec<VertexSet> = (0..dec.generator.cols())
        .map(|j| (0..n).filter(|&i| dec.generator.get(i, j)).fold(0u64, |s, i| s | 1 << i))
        .collect();
    let tricliques = cols.chunks_exact(2).map(|p| Triclique::from_pair(p[0], p[1])).collect();
    TricliqueSystem { n, tricliques }
}

/// Checks that the system sums to `g`.
pub fn verify_triclique_system(g: &Graph, sys: &TricliqueSystem) -> Result<bool> {
    if g.order() != sys.n {
        return Err(Error::SizeMismatch { left: g.order(), right: sys.n });
    }
    TricliqueSystem::new(sys.n, sys.tricliques.clone())?;
    Ok(sys.generated_graph() == *g)
}

/// Largest order accepted by [`brute_force_t2`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 6;

/// Breadth-first search over sums of triclique edge sets.
pub fn brute_force_t2(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= BRUTE_FORCE_MAX_ORDER, "brute force is limited to n <= {BRUTE_FORCE_MAX_ORDER}");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let encode = |adj: &[u64]| -> u32 {
        pairs.iter().enumerate().fold(0, |m, (i, &(u, v))| m | (((adj[u] >> v) & 1) as u32) << i)
    };
    let target = encode(g.adjacency_rows());
    // Each vertex picks a part in {none, X, Y, Z}.
    let mut gens = std::collections::BTreeSet::new();
    for code in 0..4usize.pow(n as u32) {
        let (mut x, mut y, mut z, mut c) = (0u64, 0u64, 0u64, code);
        for v in 0..n {
            match c % 4 {
                1 => x |= 1 << v,
                2 => y |= 1 << v,
                3 => z |= 1 << v,
                _ => {}
            }
            c /= 4;
        }
        let m = encode(&Triclique { x, y, z }.adjacency(n));
        if m != 0 {
            gens.insert(m);
        }
    }
    let mut dist = vec![u8::MAX; 1 << pairs.len()];
    dist[0] = 0;
    let mut frontier = vec![0u32];
    let mut d = 0;
    while dist[target as usize] == u8::MAX {
        d += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for &m in &gens {
                let t = (s ^ m) as usize;
                if dist[t] == u8::MAX {
                    dist[t] = d;
                    next.push(t as u32);
                }
            }
        }
        frontier = next;
    }
    dist[target as usize] as usize
}
