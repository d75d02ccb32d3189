//! Path covers of forests and the resulting `n − p` complementation systems.
//!
//! A *structured* cover puts at most one vertex of degree ≥ 3 on each path
//! and never at an endpoint. When a tree has a structured minimum cover the
//! system is read off directly: vertex pairs for the path edges between
//! low-degree vertices, and for the high-degree vertices `v₁ < v₂ < …` the
//! sets `N(vᵢ) ∖ R` and `N[vᵢ] ∖ R` with `R = {v₁, …, vᵢ₋₁}`.
//!
//! Some trees have no structured minimum cover (a vertex of degree 3 whose
//! neighbours all carry two leaves). For those the system is built by
//! repeatedly isolating a vertex `v` of degree ≥ 3 with `p(T − v) = p(T) + 1`
//! using `N(v)` and `N[v]`, which costs two sets and lowers `n − p` by two.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components, set_to_vec, Graph, VertexSet};
use crate::subcomp::ComplementationSystem;

/// Vertex-disjoint induced paths covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCover {
    pub paths: Vec<Vec<usize>>,
    /// Every path has at most one vertex of degree ≥ 3, and it is internal.
    pub structured: bool,
}

impl PathCover {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Disjoint, covering, and every path induced in `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for p in &self.paths {
            for &v in p {
                if v >= g.order() || seen >> v & 1 == 1 {
                    return false;
                }
                seen |= 1 << v;
            }
            let sub = g.induced_subgraph(p);
            if sub.size() + 1 != p.len() || !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        seen.count_ones() as usize == g.order()
    }

    /// The structural property with respect to the host graph `g`.
    pub fn has_structure(&self, g: &Graph) -> bool {
        self.paths.iter().all(|p| {
            let high: Vec<usize> = (0..p.len()).filter(|&i| g.degree(p[i]) >= 3).collect();
            match high.as_slice() {
                [] => true,
                [i] => *i != 0 && *i + 1 != p.len(),
                _ => false,
            }
        })
    }
}

const NEG: i32 = i32::MIN / 4;

/// Per-vertex table: `table[j][h]` is the most path edges inside the subtree
/// with `j` edges to children chosen and `h` recording whether `v`'s partial
/// path holds a high vertex.
type Table = [[i32; 2]; 3];

/// Which child edges were chosen to reach a given state.
type Trace = Vec<[[Option<((usize, usize), Option<(usize, usize)>)>; 2]; 3]>;

struct CoverDp<'a> {
    g: &'a Graph,
    structured: bool,
    children: Vec<Vec<usize>>,
    table: Vec<Table>,
    // trace[v][step][j][h] = (previous state, child state if the edge is used)
    trace: Vec<Trace>,
}

impl<'a> CoverDp<'a> {
    fn high(&self, v: usize) -> bool {
        self.structured && self.g.degree(v) >= 3
    }

    /// Best state of a child whose parent edge is not used.
    fn closed(&self, c: usize) -> Option<(i32, (usize, usize))> {
        let mut best: Option<(i32, (usize, usize))> = None;
        for j in 0..3 {
            if self.high(c) && j != 2 {
                continue;
            }
            for h in 0..2 {
                let val = self.table[c][j][h];
                if val > NEG && best.is_none_or(|b| val > b.0) {
                    best = Some((val, (j, h)));
                }
            }
        }
        best
    }

    fn run(g: &'a Graph, root: usize, structured: bool) -> Self {
        let n = g.order();
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; n];
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in set_to_vec(g.neighbors(v)) {
                if w != parent[v] {
                    parent[w] = v;
                    children[v].push(w);
                    order.push(w);
                }
            }
            i += 1;
        }
        let mut dp = CoverDp { g, structured, children, table: vec![[[NEG; 2]; 3]; n], trace: vec![Vec::new(); n] };
        for &v in order.iter().rev() {
            let mut cur: Table = [[NEG; 2]; 3];
            cur[0][usize::from(dp.high(v))] = 0;
            let mut trace = Vec::new();
            for &c in &dp.children[v] {
                let mut next: Table = [[NEG; 2]; 3];
                let mut step = [[None; 2]; 3];
                let closed = dp.closed(c);
                for j in 0..3 {
                    for h in 0..2 {
                        if cur[j][h] == NEG {
                            continue;
                        }
                        if let Some((val, _)) = closed {
                            if cur[j][h] + val > next[j][h] {
                                next[j][h] = cur[j][h] + val;
                                step[j][h] = Some(((j, h), None));
                            }
                        }
                        if j == 2 {
                            continue;
                        }
                        for jc in 0..2 {
                            if dp.high(c) && jc != 1 {
                                continue;
                            }
                            for hc in 0..2 {
                                let val = dp.table[c][jc][hc];
                                if val == NEG || h + hc > 1 {
                                    continue;
                                }
                                let total = cur[j][h] + val + 1;
                                let nh = h | hc;
                                if total > next[j + 1][nh] {
                                    next[j + 1][nh] = total;
                                    step[j + 1][nh] = Some(((j, h), Some((jc, hc))));
                                }
                            }
                        }
                    }
                }
                cur = next;
                trace.push(step);
            }
            dp.table[v] = cur;
            dp.trace[v] = trace;
        }
        dp
    }

    /// Collects the chosen edges below `v` ending in state `(j, h)`.
    fn edges(&self, v: usize, state: (usize, usize), out: &mut Vec<(usize, usize)>) {
        let mut state = state;
        for (step, &c) in self.trace[v].iter().zip(&self.children[v]).rev() {
            let (prev, child) = step[state.0][state.1].expect("reachable state");
            match child {
                Some(cs) => {
                    out.push((v, c));
                    self.edges(c, cs, out);
                }
                None => {
                    let (_, cs) = self.closed(c).expect("closed child");
                    self.edges(c, cs, out);
                }
            }
            state = prev;
        }
    }
}

/// Maximum number of path edges in a cover of the tree `t` (so
/// `p = n − edges`), and the chosen edges.
fn best_cover_edges(t: &Graph, structured: bool) -> Option<(usize, Vec<(usize, usize)>)> {
    if t.order() == 0 {
        return Some((0, Vec::new()));
    }
    let dp = CoverDp::run(t, 0, structured);
    let (val, state) = dp.closed(0)?;
    let mut edges = Vec::new();
    dp.edges(0, state, &mut edges);
    Some((val as usize, edges))
}

fn paths_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut nbrs = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    for start in 0..n {
        if seen[start] || nbrs[start].len() > 1 {
            continue;
        }
        let mut path = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(&next) = nbrs[cur].iter().find(|&&w| !seen[w]) {
            seen[next] = true;
            path.push(next);
            cur = next;
        }
        paths.push(path);
    }
    paths.sort();
    paths
}

fn require_forest(f: &Graph) -> Result<()> {
    if f.is_forest() {
        Ok(())
    } else {
        Err(Error::NotAForest)
    }
}

/// `p(F)`, summed over the trees of the forest.
pub fn path_cover_number(f: &Graph) -> Result<usize> {
    require_forest(f)?;
    Ok(components(f)
        .iter()
        .map(|(vs, t)| vs.len() - best_cover_edges(t, false).expect("unconstrained cover").0)
        .sum())
}

/// A minimum path cover of the tree, structured whenever some minimum cover
/// is.
pub fn tree_path_cover(t: &Graph) -> Result<PathCover> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let (best, free) = best_cover_edges(t, false).expect("unconstrained cover");
    match best_cover_edges(t, true) {
        Some((val, edges)) if val == best => {
            Ok(PathCover { paths: paths_from_edges(t.order(), &edges), structured: true })
        }
        _ => Ok(PathCover { paths: paths_from_edges(t.order(), &free), structured: false }),
    }
}

/// Minimum path cover of a forest, tree by tree, in the forest's labels.
pub fn forest_path_cover(f: &Graph) -> Result<PathCover> {
    require_forest(f)?;
    let mut paths = Vec::new();
    let mut structured = true;
    for (vs, t) in components(f) {
        let cover = tree_path_cover(&t)?;
        structured &= cover.structured;
        paths.extend(cover.paths.into_iter().map(|p| p.into_iter().map(|v| vs[v]).collect::<Vec<_>>()));
    }
    paths.sort();
    Ok(PathCover { paths, structured })
}

/// Sets for one tree, in local labels.
fn tree_sets(t: &Graph) -> Vec<VertexSet> {
    let cover = tree_path_cover(t).expect("component of a forest");
    if cover.structured {
        let mut sets = Vec::new();
        for p in &cover.paths {
            for w in p.windows(2) {
                if t.degree(w[0]) < 3 && t.degree(w[1]) < 3 {
                    sets.push(1u64 << w[0] | 1 << w[1]);
                }
            }
        }
        let mut removed = 0u64;
        for v in (0..t.order()).filter(|&v| t.degree(v) >= 3) {
            sets.push(t.neighbors(v) & !removed);
            sets.push(t.closed_neighbors(v) & !removed);
            removed |= 1 << v;
        }
        sets
    } else {
        isolation_sets(t)
    }
}

/// Isolates high-degree vertices one at a time while `n − p` drops by two,
/// then finishes the remaining linear forest with vertex pairs.
fn isolation_sets(f: &Graph) -> Vec<VertexSet> {
    let mut cur = f.clone();
    let mut sets = Vec::new();
    let mut p = path_cover_number(&cur).expect("forest");
    while !cur.is_linear_forest() {
        let (v, next, q) = (0..cur.order())
            .filter(|&v| cur.degree(v) >= 3)
            .find_map(|v| {
                let mut next = cur.clone();
                for w in set_to_vec(cur.neighbors(v)) {
                    next.remove_edge(v, w);
                }
                let q = path_cover_number(&next).expect("forest");
                (q == p + 2).then_some((v, next, q))
            })
            .expect("every forest with a vertex of degree >= 3 has such a vertex");
        sets.push(cur.neighbors(v));
        sets.push(cur.closed_neighbors(v));
        cur = next;
        p = q;
    }
    sets.extend(cur.edges().map(|(a, b)| 1u64 << a | 1 << b));
    sets
}

/// A complementation system of size `n − p(F)` for the forest.
pub fn forest_system(f: &Graph) -> Result<ComplementationSystem> {
    require_forest(f)?;
    let mut sets = Vec::new();
    for (vs, t) in components(f) {
        for local in tree_sets(&t) {
            sets.push(set_to_vec(local).into_iter().fold(0u64, |acc, i| acc | 1 << vs[i]));
        }
    }
    Ok(ComplementationSystem::new(f.order(), sets)?.normalized())
}
