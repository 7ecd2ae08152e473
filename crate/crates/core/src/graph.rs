//! Immutable simple undirected graphs over dense vertex indices.
//!
//! Every row of the adjacency structure is a [`VertexSet`], so neighborhood
//! unions and component floods run word-parallel.

use std::collections::VecDeque;
use std::fmt;

use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// A finite simple undirected graph with at least one vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Length of the shortest induced cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    /// The graph is a forest.
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Derived attributes of a graph, computed in one pass by [`Graph::meta`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMeta {
    pub components: Vec<VertexSet>,
    pub co_components: Vec<VertexSet>,
    /// Only computed for graphs with at most 64 vertices.
    pub independence_number: Option<usize>,
    pub girth: Girth,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Wraps adjacency rows that are already symmetric and irreflexive.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(!adj.is_empty());
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, row)| !row.contains(v) && row.iter().all(|u| adj[u].contains(v))));
        Graph { adj }
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::from_edge_list(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let rows = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n);
                row.remove(v);
                row
            })
            .collect();
        Ok(Graph::from_rows(rows))
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbor mask of `v`; only meaningful when `n() <= 64`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v].mask()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// `N(X)`: vertices outside `set` with a neighbor inside it.
    pub fn neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut rest = set.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows(rows)
    }

    /// Components of the subgraph induced by `allowed`, ordered by smallest member.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut rest = allowed.clone();
        let mut out = Vec::new();
        while let Some(seed) = rest.first() {
            let comp = self.flood(seed, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `seed` inside `allowed`.
    pub fn flood(&self, seed: usize, allowed: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(self.n(), seed);
        let mut stack = vec![seed];
        while let Some(u) = stack.pop() {
            for w in self.adj[u].iter() {
                if allowed.contains(w) && comp.insert(w) {
                    stack.push(w);
                }
            }
        }
        comp
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.flood(0, &self.vertices()).len() == self.n()
    }

    /// Vertex sets of the components of the complement.
    pub fn co_components(&self) -> Vec<VertexSet> {
        self.complement().components()
    }

    /// Induced subgraph on `set`, relabeled to `0..|set|` in increasing original order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let members = set.to_vec();
        if let Some(&last) = members.last() {
            if last >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: last, n: self.n() });
            }
        }
        let k = members.len();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let rows = members
            .iter()
            .map(|&v| VertexSet::from_members(k, self.adj[v].iter().filter(|&w| set.contains(w)).map(|w| index[w])))
            .collect();
        Ok(Graph::from_rows(rows))
    }

    /// `G - v`; fails when `G` has a single vertex.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced_subgraph(&keep)
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let n = self.n();
        let mut rows = vec![VertexSet::new(n); n];
        for v in 0..n {
            for w in self.adj[v].iter() {
                rows[perm[v]].insert(perm[w]);
            }
        }
        Graph::from_rows(rows)
    }

    pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
        Self::combine(graphs, false)
    }

    /// Disjoint union plus every edge between different parts.
    pub fn join(graphs: &[Graph]) -> Result<Graph> {
        Self::combine(graphs, true)
    }

    fn combine(graphs: &[Graph], cross: bool) -> Result<Graph> {
        if graphs.is_empty() {
            return Err(Error::EmptyGraphList);
        }
        let total: usize = graphs.iter().map(Graph::n).sum();
        let mut rows = Vec::with_capacity(total);
        let mut offset = 0;
        for g in graphs {
            let block = VertexSet::from_members(total, offset..offset + g.n());
            for v in 0..g.n() {
                let mut row = g.adj[v].lifted(total, offset);
                if cross {
                    let mut others = block.complement();
                    others.union_with(&row);
                    row = others;
                }
                rows.push(row);
            }
            offset += g.n();
        }
        Ok(Graph::from_rows(rows))
    }

    /// Line graph, together with the source edge of each line-graph vertex.
    /// Line-graph vertices follow the lexicographic order of [`Graph::edges`].
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let m = edges.len();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut rows = vec![VertexSet::new(m); m];
        for list in &incident {
            for &a in list {
                for &b in list {
                    if a != b {
                        rows[a].insert(b);
                    }
                }
            }
        }
        Ok((Graph::from_rows(rows), edges))
    }

    /// Length of the shortest induced cycle.
    ///
    /// A shortest cycle never has a chord, so the minimum over edges `uv` of
    /// `1 + dist_{G - uv}(u, v)` is exactly the induced-cycle girth.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for (u, v) in self.edges() {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[u] = 0;
            queue.clear();
            queue.push_back(u);
            'bfs: while let Some(x) = queue.pop_front() {
                if dist[x] + 2 >= best {
                    break;
                }
                for y in self.adj[x].iter() {
                    if x == u && y == v {
                        continue;
                    }
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        if y == v {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if dist[v] != usize::MAX {
                best = best.min(dist[v] + 1);
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Size of a maximum independent set, for graphs with at most 64 vertices.
    pub fn independence_number(&self) -> Option<usize> {
        if self.n() > 64 {
            return None;
        }
        let masks: Vec<u64> = (0..self.n()).map(|v| self.neighbor_mask(v)).collect();
        let all = if self.n() == 64 { u64::MAX } else { (1u64 << self.n()) - 1 };
        Some(max_independent(&masks, all))
    }

    pub fn meta(&self) -> GraphMeta {
        GraphMeta {
            components: self.components(),
            co_components: self.co_components(),
            independence_number: self.independence_number(),
            girth: self.girth(),
        }
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(&self.adj[v])
    }

    /// `N[u] = N[v]`.
    pub fn are_true_twins(&self, u: usize, v: usize) -> bool {
        u != v && self.closed_neighborhood(u) == self.closed_neighborhood(v)
    }

    /// `N(u) \ {v} = N(v) \ {u}` (true or false twins).
    pub fn are_near_twins(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let mut a = self.adj[u].clone();
        a.remove(v);
        let mut b = self.adj[v].clone();
        b.remove(u);
        a == b
    }
}

fn max_independent(adj: &[u64], cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    // branch on a vertex of maximum degree; degree-0 and degree-1 vertices are always taken
    let mut pick = usize::MAX;
    let mut pick_deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d <= 1 {
            let take = cand & !(adj[v] | (1u64 << v));
            return 1 + max_independent(adj, take);
        }
        if pick == usize::MAX || d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    let without = max_independent(adj, cand & !(1u64 << pick));
    let with = 1 + max_independent(adj, cand & !(adj[pick] | (1u64 << pick)));
    without.max(with)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn claw() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3)])
    }

    #[test]
    fn edge_list_validation() {
        assert_eq!(g(4, &[(0, 1), (1, 2), (2, 3)]), Graph::path(4).unwrap());
        assert_eq!(Graph::from_edge_list(1, &[]).unwrap().n(), 1);
        let dup = g(3, &[(0, 1), (0, 1)]);
        assert_eq!(dup.edge_count(), 1);
        assert_eq!(Graph::from_edge_list(2, &[(0, 2)]), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::from_edge_list(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::edgeless(4).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.complement().edge_count(), 5);
        assert_eq!(c5.complement().girth(), Girth::Finite(5));
        // co-claw: the center becomes isolated, the leaves form a triangle
        let coclaw = claw().complement();
        assert_eq!(coclaw.degree(0), 0);
        assert_eq!((1..4).map(|v| coclaw.degree(v)).collect::<Vec<_>>(), vec![2, 2, 2]);
    }

    #[test]
    fn component_examples() {
        let two_p2 = g(4, &[(0, 1), (2, 3)]);
        assert_eq!(two_p2.components().iter().map(VertexSet::len).collect::<Vec<_>>(), vec![2, 2]);
        assert_eq!(Graph::cycle(6).unwrap().components().len(), 1);
        assert_eq!(Graph::edgeless(4).unwrap().components().len(), 4);
    }

    #[test]
    fn co_component_examples() {
        assert_eq!(Graph::complete(4).unwrap().co_components().len(), 4);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.co_components().iter().map(VertexSet::len).collect::<Vec<_>>(), vec![2, 2]);
        assert_eq!(Graph::path(4).unwrap().co_components().len(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let p4 = c5.induced_subgraph(&VertexSet::from_members(5, [1, 2, 3, 4])).unwrap();
        assert_eq!(p4, Graph::path(4).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.induced_subgraph(&VertexSet::from_members(4, [0, 2, 3])).unwrap(), Graph::complete(3).unwrap());
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(paw.induced_subgraph(&VertexSet::from_members(4, [0, 1, 2])).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(k4.induced_subgraph(&VertexSet::new(4)), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn union_and_join_examples() {
        let p2 = Graph::path(2).unwrap();
        let p1 = Graph::path(1).unwrap();
        assert_eq!(Graph::disjoint_union(&[p2.clone(), p2.clone()]).unwrap(), g(4, &[(0, 1), (2, 3)]));
        let k3p1 = Graph::disjoint_union(&[Graph::complete(3).unwrap(), p1.clone()]).unwrap();
        assert_eq!(k3p1.edge_count(), 3);
        assert_eq!(k3p1.degree(3), 0);
        assert_eq!(Graph::disjoint_union(&[p1.clone(), p1.clone(), p1.clone(), p1.clone()]).unwrap(), Graph::edgeless(4).unwrap());
        assert_eq!(Graph::join(&[p1.clone(), p1.clone()]).unwrap(), p2);
        let two_p1 = Graph::edgeless(2).unwrap();
        let k22 = Graph::join(&[two_p1.clone(), two_p1]).unwrap();
        assert_eq!(k22.edge_count(), 4);
        assert_eq!(k22.girth(), Girth::Finite(4));
        let wheel = Graph::join(&[Graph::cycle(5).unwrap(), p1]).unwrap();
        assert_eq!(wheel.n(), 6);
        assert!(wheel.is_universal(5));
        assert_eq!(Graph::join(&[]), Err(Error::EmptyGraphList));
    }

    #[test]
    fn line_graph_examples() {
        let (lc4, map) = Graph::cycle(4).unwrap().line_graph().unwrap();
        assert_eq!(lc4.n(), 4);
        assert_eq!(lc4.edge_count(), 4);
        assert_eq!(lc4.girth(), Girth::Finite(4));
        assert_eq!(map, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let (lclaw, _) = claw().line_graph().unwrap();
        assert_eq!(lclaw, Graph::complete(3).unwrap());
        assert_eq!(Graph::edgeless(3).unwrap().line_graph().unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(Graph::path(4).unwrap().girth(), Girth::Infinite);
        assert_eq!(Graph::complete(4).unwrap().girth(), Girth::Finite(3));
        assert_eq!(Graph::cycle(7).unwrap().girth(), Girth::Finite(7));
    }

    #[test]
    fn twins_and_simplicial() {
        let paw = g(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!(paw.is_simplicial(3));
        assert!(paw.is_simplicial(0));
        assert!(!paw.is_simplicial(2));
        assert!(paw.are_true_twins(0, 1));
        assert!(!paw.are_true_twins(0, 3));
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.are_near_twins(0, 2));
        assert!(!c4.are_true_twins(0, 2));
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(Graph::cycle(5).unwrap().independence_number(), Some(2));
        assert_eq!(Graph::cycle(6).unwrap().independence_number(), Some(3));
        assert_eq!(claw().independence_number(), Some(3));
        assert_eq!(Graph::complete(5).unwrap().independence_number(), Some(1));
    }

    #[test]
    fn meta_matches_recomputation() {
        let g = Graph::cycle(6).unwrap();
        let meta = g.meta();
        assert_eq!(meta.components, g.components());
        assert_eq!(meta.co_components, g.co_components());
        assert_eq!(meta.girth, Girth::Finite(6));
        assert_eq!(meta.independence_number, Some(3));
        assert_eq!(meta, g.clone().meta());
    }
}
