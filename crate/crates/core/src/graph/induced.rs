use super::{full_set, Graph, VertexSet};

/// Finds an induced copy of `h` in `g`: `map[i]` is the image of vertex `i`
/// of `h`, with edges and non-edges both preserved.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (n, k) = (g.order(), h.order());
    if k > n {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut map = vec![usize::MAX; k];
    if extend(g, h, &order, 0, full_set(n), &mut map) {
        Some(map)
    } else {
        None
    }
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, unused: VertexSet, map: &mut [usize]) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    let mut candidates = unused;
    for &y in &order[..depth] {
        let image = g.neighbors(map[y]);
        if h.has_edge(x, y) {
            candidates &= image;
        } else {
            candidates &= !image;
        }
    }
    let need = h.degree(x);
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        if g.degree(v) < need {
            continue;
        }
        map[x] = v;
        if extend(g, h, order, depth + 1, unused & !(1 << v), map) {
            return true;
        }
    }
    map[x] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_witness(g: &Graph, h: &Graph, map: &[usize]) {
        for i in 0..h.order() {
            for j in 0..h.order() {
                if i != j {
                    assert_eq!(h.has_edge(i, j), g.has_edge(map[i], map[j]));
                }
            }
        }
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5);
        let p4 = Graph::path(4);
        let map = contains_induced(&c5, &p4).expect("C5 has an induced P4");
        check_witness(&c5, &p4, &map);
        assert!(contains_induced(&Graph::complete(4), &Graph::path(3)).is_none());
        let three_k2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]);
        assert!(contains_induced(&Graph::complete_bipartite(3, 3), &three_k2).is_none());
    }

    #[test]
    fn reflexive_and_monotone() {
        let g = Graph::wheel(6);
        let map = contains_induced(&g, &g).unwrap();
        check_witness(&g, &g, &map);
        let bigger = g.disjoint_union(&Graph::path(3));
        assert!(contains_induced(&bigger, &g).is_some());
    }
}
