//! Forbidden induced subgraph catalogs for `c₂ ≤ 2` and `mr ≤ 2`, and a
//! search for minimal forbidden induced subgraphs over a stream of graphs.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::graph::{canonical_form, contains_induced, CanonicalForm, Graph};
use crate::minrank::MinRankSolver;
use crate::subcomp::c2_value_with;

/// A named graph with a fixed labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
}

fn entry(name: &'static str, n: usize, edges: &[(usize, usize)]) -> CatalogEntry {
    CatalogEntry { name, graph: Graph::from_edges(n, edges) }
}

fn shared_entries() -> Vec<CatalogEntry> {
    vec![
        entry("P4", 4, &[(0, 1), (1, 2), (2, 3)]),
        entry("P3+K2", 5, &[(0, 1), (1, 2), (3, 4)]),
        entry("3K2", 6, &[(0, 1), (2, 3), (4, 5)]),
        entry("full house", 5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 1), (0, 4)]),
        entry("dart", 5, &[(0, 1), (1, 2), (0, 3), (1, 3), (1, 4), (0, 4)]),
        entry("cricket", 5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)]),
    ]
}

/// Minimal forbidden induced subgraphs for `c₂ ≤ 2`.
pub fn catalog_c2_le2() -> Vec<CatalogEntry> {
    let mut v = shared_entries();
    v.push(entry("K33", 6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]));
    v.push(entry("W5", 5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]));
    v
}

/// Minimal forbidden induced subgraphs for `mr ≤ 2`.
pub fn catalog_mr_le2() -> Vec<CatalogEntry> {
    let mut v = shared_entries();
    let mut edges = vec![(0, 1), (1, 2), (3, 4), (4, 5)];
    edges.extend((0..3).flat_map(|a| (3..6).map(move |b| (a, b))));
    v.push(entry("P3vP3", 6, &edges));
    v
}

/// An induced copy of a catalog graph: `embedding[i]` is the image of its
/// vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ForbiddenWitness {
    pub name: &'static str,
    pub embedding: Vec<usize>,
}

fn first_forbidden(g: &Graph, catalog: &[CatalogEntry]) -> Option<ForbiddenWitness> {
    catalog.iter().find_map(|e| {
        contains_induced(g, &e.graph).map(|embedding| ForbiddenWitness { name: e.name, embedding })
    })
}

/// `Ok(())` when `c₂(g) ≤ 2`, otherwise an induced forbidden subgraph.
pub fn classify_c2_le2(g: &Graph) -> std::result::Result<(), ForbiddenWitness> {
    first_forbidden(g, &catalog_c2_le2()).map_or(Ok(()), Err)
}

/// `c₂(g) ≤ 1`: no induced `P₃` and no induced `2K₂`.
pub fn classify_c2_le1(g: &Graph) -> bool {
    let p3 = Graph::path(3);
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
    contains_induced(g, &p3).is_none() && contains_induced(g, &two_k2).is_none()
}

/// `mr(g) ≤ 2` by the forbidden induced subgraphs.
pub fn classify_mr_le2(g: &Graph) -> bool {
    first_forbidden(g, &catalog_mr_le2()).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    C2,
    Mr,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::C2 => "c2",
            Invariant::Mr => "mr",
        }
    }

    pub fn evaluate(self, solver: &MinRankSolver, g: &Graph) -> crate::Result<usize> {
        match self {
            Invariant::C2 => c2_value_with(solver, g),
            Invariant::Mr => Ok(solver.solve(g)?.mr),
        }
    }
}

impl std::str::FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "c2" => Ok(Invariant::C2),
            "mr" => Ok(Invariant::Mr),
            _ => Err(format!("unknown invariant {s:?} (expected c2 or mr)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenReport {
    pub invariant: Invariant,
    pub k: usize,
    /// Sorted by (order, certificate).
    pub graphs: Vec<(CanonicalForm, Graph)>,
    /// Input positions whose evaluation hit the rank-search ceiling.
    pub skipped: Vec<usize>,
}

impl Serialize for ForbiddenReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ForbiddenReport", 4)?;
        st.serialize_field("invariant", self.invariant.name())?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("count", &self.graphs.len())?;
        let g6: Vec<&str> = self.graphs.iter().map(|(c, _)| c.as_graph6()).collect();
        st.serialize_field("graphs", &g6)?;
        st.end()
    }
}

enum Verdict {
    Minimal,
    No,
    Skipped,
}

fn minimal_forbidden(solver: &MinRankSolver, invariant: Invariant, k: usize, g: &Graph) -> Verdict {
    match invariant.evaluate(solver, g) {
        Err(_) => return Verdict::Skipped,
        Ok(v) if v <= k => return Verdict::No,
        Ok(_) => {}
    }
    for v in 0..g.order() {
        match invariant.evaluate(solver, &g.delete_vertex(v)) {
            Err(_) => return Verdict::Skipped,
            Ok(x) if x > k => return Verdict::No,
            Ok(_) => {}
        }
    }
    Verdict::Minimal
}

/// Graphs with `invariant > k` whose every one-vertex deletion has
/// `invariant ≤ k`, one per isomorphism class.
pub fn find_minimal_forbidden<I>(graphs: I, invariant: Invariant, k: usize, solver: &MinRankSolver) -> ForbiddenReport
where
    I: IntoIterator<Item = Graph>,
{
    let graphs: Vec<Graph> = graphs.into_iter().collect();
    let verdicts: Vec<Verdict> = graphs.par_iter().map(|g| minimal_forbidden(solver, invariant, k, g)).collect();
    let mut found = BTreeMap::new();
    let mut skipped = Vec::new();
    for (i, (g, verdict)) in graphs.iter().zip(verdicts).enumerate() {
        match verdict {
            Verdict::Minimal => {
                let cf = canonical_form(g);
                found.entry((g.order(), cf)).or_insert_with(|| g.clone());
            }
            Verdict::Skipped => skipped.push(i),
            Verdict::No => {}
        }
    }
    ForbiddenReport {
        invariant,
        k,
        graphs: found.into_iter().map(|((_, cf), g)| (cf, g)).collect(),
        skipped,
    }
}
