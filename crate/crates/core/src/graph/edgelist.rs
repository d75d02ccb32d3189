//! Plain edge-list text: a header line `n <count>` followed by one
//! whitespace-separated `u v` pair per line, 0-indexed.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedEdgeList("missing header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|e| Error::MalformedEdgeList(format!("bad vertex count: {e}")))?,
        _ => return Err(Error::MalformedEdgeList(format!("bad header {header:?}"))),
    };
    let mut edges = Vec::new();
    for line in lines {
        let parsed: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::MalformedEdgeList(format!("{line:?}: {e}")))?;
        match parsed[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::MalformedEdgeList(format!("expected a pair, got {line:?}"))),
        }
    }
    Graph::try_from_edges(n, &edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
