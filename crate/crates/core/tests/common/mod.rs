#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use subcomp::graph::{canonical_form, enumerate_nonisomorphic, CanonicalForm};
use subcomp::Graph;

/// One representative per isomorphism class, orders `lo..=hi`.
pub fn all_graphs(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(|n| enumerate_nonisomorphic(n).unwrap()).collect()
}

/// Unlabelled trees on exactly `n` vertices, grown leaf by leaf.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for m in 1..n {
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        for t in &level {
            for v in 0..m {
                let mut edges: Vec<_> = t.edges().collect();
                edges.push((v, m));
                seen.insert(canonical_form(&Graph::from_edges(m + 1, &edges)));
            }
        }
        level = seen.into_iter().map(|c| c.to_graph()).collect();
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    level
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Rank over GF(2) of a list of byte rows, by plain row reduction.
pub fn rank_bytes(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] == 1 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Exhaustive minimum rank: `(mr, rank with zero diagonal, best rank over
/// nonzero diagonals, number of diagonals reaching mr)`.
pub fn minrank_oracle(g: &Graph) -> (usize, usize, Option<usize>, usize) {
    let n = g.order();
    let mut zero = 0;
    let mut best_nonzero: Option<usize> = None;
    let mut all = Vec::with_capacity(1 << n);
    for d in 0u64..(1 << n) {
        let rows: Vec<Vec<u8>> = (0..n)
            .map(|i| (0..n).map(|j| u8::from(if i == j { d >> i & 1 == 1 } else { g.has_edge(i, j) })).collect())
            .collect();
        let r = rank_bytes(rows);
        all.push(r);
        if d == 0 {
            zero = r;
        } else {
            best_nonzero = Some(best_nonzero.map_or(r, |b| b.min(r)));
        }
    }
    let mr = *all.iter().min().unwrap();
    (mr, zero, best_nonzero, all.iter().filter(|&&r| r == mr).count())
}

pub fn is_path(g: &Graph) -> bool {
    g.is_connected() && g.is_linear_forest()
}
