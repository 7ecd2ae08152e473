//! Canonical forms and exhaustive enumeration for small graphs.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// Largest graph accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 10;
/// Largest vertex count accepted by [`enumerate_labeled_graphs`].
pub const EXHAUSTIVE_LIMIT: usize = 7;

/// Isomorphism-invariant byte string: equal forms iff isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Vertex count of the graph the form was computed from.
    pub fn n(&self) -> usize {
        self.0[0] as usize
    }
}

/// Stable color refinement; color ids are ranks of sorted signatures, so the
/// final partition and its order depend only on the isomorphism type.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut ranks = BTreeMap::new();
        for sig in &sigs {
            ranks.entry(sig.clone()).or_insert(0usize);
        }
        for (i, rank) in ranks.values_mut().enumerate() {
            *rank = i;
        }
        colors = sigs.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            return colors;
        }
        classes = ranks.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    slot_color: Vec<usize>,
    colors: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    total_bits: u32,
    best: Option<u64>,
}

impl Search<'_> {
    fn place(&mut self, pos: usize, code: u64) {
        let n = self.g.n();
        if pos == n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colors[v] != self.slot_color[pos] {
                continue;
            }
            let mut next = code;
            for q in 0..pos {
                next = (next << 1) | self.g.has_edge(self.order[q], v) as u64;
            }
            let placed_bits = (pos * (pos + 1) / 2) as u32;
            if let Some(best) = self.best {
                let prefix = if placed_bits == 0 { 0 } else { best >> (self.total_bits - placed_bits) };
                if next < prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.place(pos + 1, next);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical form by maximizing the adjacency code over all relabelings that
/// respect the refined color classes.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::TooLarge { what: "canonical form", size: n, limit: CANONICAL_LIMIT });
    }
    let colors = refine_colors(g);
    let mut slot_color = colors.clone();
    slot_color.sort_unstable();
    let mut search = Search {
        g,
        slot_color,
        colors,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        total_bits: (n * (n - 1) / 2) as u32,
        best: None,
    };
    search.place(0, 0);
    let code = search.best.unwrap_or(0);
    let mut bytes = vec![n as u8];
    bytes.extend_from_slice(&code.to_be_bytes());
    Ok(CanonicalForm(bytes))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Iterator over all `2^(n choose 2)` labeled graphs on `n` vertices.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    /// Graph number `index` in enumeration order (bit `i` selects pair `i`).
    pub fn nth_graph(&self, index: u64) -> Graph {
        let mut rows = vec![VertexSet::new(self.n); self.n];
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if index >> i & 1 == 1 {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
        Graph::from_rows(rows)
    }

    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.nth_graph(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge { what: "exhaustive enumeration", size: n, limit: EXHAUSTIVE_LIMIT });
    }
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let end = 1u64 << pairs.len();
    Ok(LabeledGraphs { n, pairs, next: 0, end })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert!(enumerate_labeled_graphs(EXHAUSTIVE_LIMIT + 1).is_err());
        assert!(enumerate_labeled_graphs(0).is_err());
    }

    #[test]
    fn isomorphism_class_counts() {
        // 1, 2, 4, 11, 34 unlabeled graphs on 1..=5 vertices
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            let forms: HashSet<_> = enumerate_labeled_graphs(n).unwrap().map(|g| canonical_form(&g).unwrap()).collect();
            assert_eq!(forms.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn canonical_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let two_p2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&two_p2.complement()).unwrap());
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let paw = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_form(&claw).unwrap(), canonical_form(&paw).unwrap());
        assert!(canonical_form(&Graph::edgeless(11).unwrap()).is_err());
    }

    #[test]
    fn regular_graphs_distinguished() {
        // C6 and 2K3 are both 2-regular on six vertices
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(3).unwrap()]).unwrap();
        assert!(!is_isomorphic(&c6, &two_k3).unwrap());
        let shifted = c6.permuted(&[3, 0, 4, 1, 5, 2]);
        assert!(is_isomorphic(&c6, &shifted).unwrap());
    }
}
