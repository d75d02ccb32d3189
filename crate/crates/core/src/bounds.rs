//! Constructive upper-bound systems and exact minimum vertex cover.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components, set_to_vec, Graph, VertexSet};
use crate::subcomp::ComplementationSystem;

/// Largest order accepted by [`min_vertex_cover`].
pub const VERTEX_COVER_MAX_ORDER: usize = 32;

/// A named upper bound on `c₂` together with a system of at most that size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound_name: &'static str,
    pub bound_value: usize,
    pub system: ComplementationSystem,
}

/// Can the edges not covered by `cover` be covered with `budget` more
/// vertices, none taken from `banned`?
fn coverable(g: &Graph, cover: VertexSet, banned: VertexSet, budget: usize) -> bool {
    let residual = |v: usize| if cover >> v & 1 == 1 { 0 } else { g.neighbors(v) & !cover };
    let n = g.order();
    let (mut best, mut best_deg, mut edges2) = (usize::MAX, 0, 0);
    for v in 0..n {
        let d = residual(v).count_ones() as usize;
        edges2 += d;
        if d > best_deg {
            (best, best_deg) = (v, d);
        }
    }
    if best_deg == 0 {
        return true;
    }
    if budget == 0 || edges2 / 2 > budget * best_deg {
        return false;
    }
    let v = best;
    let nbrs = residual(v);
    // Either v joins the cover, or all of its residual neighbours do.
    if banned >> v & 1 == 0 && coverable(g, cover | 1 << v, banned, budget - 1) {
        return true;
    }
    let k = nbrs.count_ones() as usize;
    k <= budget && nbrs & banned == 0 && coverable(g, cover | nbrs, banned | 1 << v, budget - k)
}

/// A minimum vertex cover, lexicographically smallest as a sorted list.
pub fn min_vertex_cover(g: &Graph) -> Result<VertexSet> {
    let n = g.order();
    if n > VERTEX_COVER_MAX_ORDER {
        return Err(Error::TooLarge { n, max: VERTEX_COVER_MAX_ORDER });
    }
    let tau = (0..=n).find(|&k| coverable(g, 0, 0, k)).expect("all vertices cover");
    let (mut cover, mut banned) = (0u64, 0u64);
    for v in 0..n {
        let used = cover.count_ones() as usize;
        if used == tau {
            break;
        }
        if coverable(g, cover | 1 << v, banned, tau - used - 1) {
            cover |= 1 << v;
        } else {
            banned |= 1 << v;
        }
    }
    Ok(cover)
}

/// `τ(G)`.
pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    Ok(min_vertex_cover(g)?.count_ones() as usize)
}

/// For cover vertices `u₁ < u₂ < …`, the sets `N[uᵢ] ∖ R` and `N(uᵢ) ∖ R`
/// with `R = {u₁, …, uᵢ₋₁}`; sets with fewer than two vertices are dropped.
pub fn vertex_cover_system(g: &Graph) -> Result<BoundReport> {
    let cover = min_vertex_cover(g)?;
    let mut removed = 0u64;
    let mut sets = Vec::new();
    for u in set_to_vec(cover) {
        for s in [g.closed_neighbors(u) & !removed, g.neighbors(u) & !removed] {
            if s.count_ones() >= 2 {
                sets.push(s);
            }
        }
        removed |= 1 << u;
    }
    Ok(BoundReport {
        bound_name: "vertex_cover",
        bound_value: 2 * cover.count_ones() as usize,
        system: ComplementationSystem::new(g.order(), sets)?,
    })
}

/// The sets `{0, i, i+1}` for `1 ≤ i ≤ n−2`, a system for the cycle
/// `0-1-…-(n−1)-0`.
pub fn cycle_system(n: usize) -> Result<ComplementationSystem> {
    if n < 3 {
        return Err(Error::BadOrder(n));
    }
    ComplementationSystem::new(n, (1..n - 1).map(|i| 1u64 | 1 << i | 1 << (i + 1)).collect())
}

fn edge_pair(u: usize, v: usize) -> VertexSet {
    1u64 << u | 1 << v
}

/// Vertices of a connected 2-regular graph in cyclic order.
fn cycle_order(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    let mut order = vec![vertices[0]];
    let mut prev = usize::MAX;
    while order.len() < vertices.len() {
        let cur = *order.last().expect("nonempty");
        let next = set_to_vec(g.neighbors(cur)).into_iter().find(|&w| w != prev).expect("2-regular");
        prev = cur;
        order.push(next);
    }
    order
}

/// The edge-count construction: `m` sets for a linear forest, otherwise at
/// most `m − 1`.
pub fn edge_bound_system(g: &Graph) -> BoundReport {
    let n = g.order();
    let m = g.size();
    let max_deg = g.max_degree();
    let mut sets = Vec::new();
    if max_deg >= 3 {
        let v = (0..n).find(|&v| g.degree(v) == max_deg).expect("max degree");
        sets.push(g.neighbors(v));
        sets.push(g.closed_neighbors(v));
        sets.extend(g.edges().filter(|&(a, b)| a != v && b != v).map(|(a, b)| edge_pair(a, b)));
    } else {
        for (vertices, comp) in components(g) {
            if comp.size() == vertices.len() && vertices.len() >= 3 {
                let order = cycle_order(g, &vertices);
                let local = cycle_system(order.len()).expect("cycle has at least 3 vertices");
                for s in local.sets() {
                    sets.push(set_to_vec(*s).into_iter().fold(0u64, |acc, i| acc | 1 << order[i]));
                }
            } else {
                sets.extend(comp.edges().map(|(a, b)| edge_pair(vertices[a], vertices[b])));
            }
        }
    }
    let bound_value = if g.is_linear_forest() { m } else { m - 1 };
    BoundReport {
        bound_name: "edges",
        bound_value,
        system: ComplementationSystem::new(n, sets).expect("vertices in range"),
    }
}

/// Whether `g` is a path on all of its vertices.
pub fn is_path(g: &Graph) -> bool {
    g.is_connected() && g.is_linear_forest()
}

/// The simple bounds that hold for every graph, with witnesses where one is
/// built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsSummary {
    pub tau: usize,
    pub vertex_cover_bound: usize,
    pub edge_bound: usize,
    /// `n − 1` for paths, `n − 2` for other graphs on at least 3 vertices.
    pub vertex_bound: Option<usize>,
    pub vertex_cover: BoundReport,
    pub edges: BoundReport,
}

pub fn bounds_summary(g: &Graph) -> Result<BoundsSummary> {
    let vertex_cover = vertex_cover_system(g)?;
    let edges = edge_bound_system(g);
    let n = g.order();
    let vertex_bound = match n {
        0 => None,
        _ if is_path(g) => Some(n - 1),
        1 | 2 => Some(n - 1),
        _ => Some(n - 2),
    };
    Ok(BoundsSummary {
        tau: vertex_cover.bound_value / 2,
        vertex_cover_bound: vertex_cover.bound_value,
        edge_bound: edges.bound_value,
        vertex_bound,
        vertex_cover,
        edges,
    })
}
