use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};

/// Largest order handled by [`enumerate_nonisomorphic`].
pub const BUILTIN_ENUMERATION_MAX: usize = 7;

/// Given one representative of every class on `n` vertices, returns one
/// canonical representative of every class on `n + 1` vertices, sorted by
/// certificate. Every graph arises from a smaller one by adding a vertex, so
/// trying every neighbourhood of the new vertex reaches all classes.
pub fn augment_classes(classes: &[Graph]) -> Vec<Graph> {
    let forms: Vec<Vec<CanonicalForm>> = classes
        .par_iter()
        .map(|g| {
            let n = g.order();
            let mut local: Vec<CanonicalForm> = (0u64..(1 << n))
                .map(|mask| {
                    let mut rows = g.adjacency_rows().to_vec();
                    for (v, row) in rows.iter_mut().enumerate() {
                        if mask >> v & 1 == 1 {
                            *row |= 1 << n;
                        }
                    }
                    rows.push(mask);
                    canonical_form(&Graph::from_adjacency(rows))
                })
                .collect();
            local.sort_unstable();
            local.dedup();
            local
        })
        .collect();
    let seen: BTreeSet<CanonicalForm> = forms.into_iter().flatten().collect();
    seen.into_iter().map(|c| c.to_graph()).collect()
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, ordered by certificate.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n > BUILTIN_ENUMERATION_MAX {
        return Err(Error::TooLargeForBuiltin { n, max: BUILTIN_ENUMERATION_MAX });
    }
    let mut classes = vec![Graph::empty(0)];
    for _ in 0..n {
        classes = augment_classes(&classes);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_nonisomorphic(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn ceiling() {
        assert!(matches!(enumerate_nonisomorphic(8), Err(Error::TooLargeForBuiltin { .. })));
    }

    #[test]
    fn labeled_dedup_oracle_n5() {
        // every labelled graph on 5 vertices, deduplicated by certificate
        let pairs: Vec<(usize, usize)> = (1..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut certs = std::collections::BTreeSet::new();
        for code in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| code >> b & 1 == 1).map(|(_, &e)| e).collect();
            certs.insert(canonical_form(&Graph::from_edges(5, &edges)));
        }
        let enumerated: std::collections::BTreeSet<_> =
            enumerate_nonisomorphic(5).unwrap().iter().map(canonical_form).collect();
        assert_eq!(certs, enumerated);
    }
}
