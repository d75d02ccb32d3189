//! Canonical labelling by partition refinement and individualization.
//!
//! The certificate is the lexicographically smallest graph6 string over all
//! leaves of the search tree. Subtrees whose root lies in the orbit of an
//! explored sibling (under automorphisms found so far that fix the current
//! prefix) are skipped.

use super::{emit_graph6, set_to_vec, Graph, VertexSet};

/// Isomorphism-class certificate: the graph6 bytes of the canonical relabelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct CanonicalForm {
    certificate: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.certificate
    }

    /// The certificate is itself a valid graph6 string.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.certificate).expect("graph6 is ASCII")
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> Graph {
        super::parse_graph6(&self.certificate).expect("certificate is valid graph6")
    }
}

type Cells = Vec<VertexSet>;

fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let adj = g.adjacency_rows();
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            for c in 0..cells.len() {
                let cell = cells[c];
                if cell.count_ones() < 2 {
                    continue;
                }
                let mut groups: Vec<(u32, VertexSet)> = Vec::new();
                for v in set_to_vec(cell) {
                    let k = (adj[v] & splitter).count_ones();
                    match groups.iter_mut().find(|(key, _)| *key == k) {
                        Some((_, m)) => *m |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    groups.sort_unstable_by_key(|&(k, _)| k);
                    cells.splice(c..=c, groups.into_iter().map(|(_, m)| m));
                    continue 'outer;
                }
            }
        }
        return cells;
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<u8>, Vec<usize>)>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        // labels[v] = position of v's singleton cell
        let mut labels = vec![0; self.g.order()];
        for (i, &c) in cells.iter().enumerate() {
            labels[c.trailing_zeros() as usize] = i;
        }
        let key = emit_graph6(&self.g.relabel(&labels)).expect("order checked").into_bytes();
        for reference in [&self.first, &self.best].into_iter().flatten() {
            if reference.0 == key {
                // v -> reference⁻¹(labels(v))
                let mut inv = vec![0; labels.len()];
                for (v, &l) in reference.1.iter().enumerate() {
                    inv[l] = v;
                }
                let aut: Vec<usize> = labels.iter().map(|&l| inv[l]).collect();
                if aut.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(aut);
                }
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((key.clone(), labels.clone()));
        }
        if self.best.as_ref().is_none_or(|b| key < b.0) {
            self.best = Some((key, labels));
        }
    }

    fn orbit_root(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for aut in &self.automorphisms {
            if prefix.iter().any(|&p| aut[p] != p) {
                continue;
            }
            for (x, &y) in aut.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut explored = Vec::new();
        for v in set_to_vec(cells[target]) {
            if self.orbit_root(prefix, v, &explored) {
                continue;
            }
            let mut next = cells.clone();
            next.splice(target..=target, [1u64 << v, cells[target] & !(1u64 << v)]);
            let next = refine(self.g, next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Returns `labels` with `labels[v]` the canonical position of `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    let root = refine(g, vec![super::full_set(n)]);
    search.descend(root, &mut Vec::new());
    search.best.expect("at least one leaf").1
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let labels = canonical_labeling(g);
    let certificate = emit_graph6(&g.relabel(&labels)).expect("order checked").into_bytes();
    CanonicalForm { certificate }
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}
