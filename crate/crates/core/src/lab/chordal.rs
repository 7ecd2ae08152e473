//! Chordality by maximum cardinality search plus a perfect elimination check.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Maximum cardinality search order (first visited vertex first).
fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !visited[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// A perfect elimination ordering, if one exists.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = mcs_order(g);
    peo.reverse();
    is_perfect_elimination_order(g, &peo).then_some(peo)
}

/// Whether every vertex's later neighbors form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut later = VertexSet::full(n);
    for &v in order {
        later.remove(v);
        let nb = g.neighbors(v).intersection(&later);
        if !g.is_clique(&nb) {
            return false;
        }
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::enumerate_labeled_graphs;

    /// Chordless cycle of length at least four, by brute force.
    fn has_long_hole(g: &Graph) -> bool {
        let n = g.n();
        (0u64..1 << n).any(|m| {
            let s = VertexSet::from_mask(n, m);
            s.len() >= 4
                && s.iter().all(|v| g.neighbors(v).intersection(&s).len() == 2)
                && g.induced_subgraph(&s).unwrap().is_connected()
        })
    }

    #[test]
    fn examples() {
        assert!(is_chordal(&Graph::path(5).unwrap()));
        assert!(is_chordal(&Graph::complete(4).unwrap()));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(!is_chordal(&Graph::cycle(6).unwrap()));
        let peo = perfect_elimination_order(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(peo.len(), 3);
    }

    #[test]
    fn agrees_with_hole_search() {
        for n in 1..=6 {
            for g in enumerate_labeled_graphs(n).unwrap() {
                assert_eq!(is_chordal(&g), !has_long_hole(&g), "{g:?}");
            }
        }
    }
}
