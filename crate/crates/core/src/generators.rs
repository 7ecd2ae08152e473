//! Extremal graph families with many minimal separators, and the explicit
//! separator families that certify their lower bounds.
//!
//! Coordinates and path layouts live in side tables next to the plain
//! [`Graph`], never inside it.

use std::collections::{BTreeSet, HashMap};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `k` internally disjoint paths of length `l` between `a = 0` and `b = 1`.
/// Interior vertex `i` (1-based, `1..l`) of path `j` is `2 + j(l-1) + i - 1`.
pub fn theta(k: usize, l: usize) -> Result<Graph> {
    if k < 2 || l < 1 {
        return Err(invalid(format!("theta needs k >= 2 and l >= 1, got ({k}, {l})")));
    }
    let n = k * (l - 1) + 2;
    let mut edges = Vec::new();
    for j in 0..k {
        let mut prev = 0;
        for i in 1..l {
            let v = 2 + j * (l - 1) + i - 1;
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, 1));
    }
    Graph::from_edge_list(n, &edges)
}

/// One interior vertex per path of `theta(k, l)`; `choice[j]` is the 1-based
/// position on path `j`, in `1..l`.
pub fn theta_separator(k: usize, l: usize, choice: &[usize]) -> Result<VertexSet> {
    if k < 2 || l < 2 {
        return Err(invalid(format!("theta separators need k >= 2 and l >= 2, got ({k}, {l})")));
    }
    if choice.len() != k {
        return Err(invalid(format!("expected {k} choices, got {}", choice.len())));
    }
    let n = k * (l - 1) + 2;
    let mut set = VertexSet::new(n);
    for (j, &i) in choice.iter().enumerate() {
        if i < 1 || i >= l {
            return Err(invalid(format!("choice {i} for path {j} outside 1..{l}")));
        }
        set.insert(2 + j * (l - 1) + i - 1);
    }
    Ok(set)
}

/// All `(l-1)^k` theta certificates.
pub fn theta_certificates(k: usize, l: usize) -> Result<Vec<VertexSet>> {
    if l < 2 {
        return Err(invalid("theta certificates need l >= 2"));
    }
    mixed_radix(k, 1, l - 1)
        .into_iter()
        .map(|c| theta_separator(k, l, &c))
        .collect()
}

/// Every vector of length `len` over `lo..=hi`, in lexicographic order.
fn mixed_radix(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |d| {
                    let mut p = prefix.clone();
                    p.push(d);
                    p
                })
            })
            .collect();
    }
    out
}

/// Line graph of `theta(k, l)` built directly: two `k`-cliques `{a_j}` and
/// `{b_j}` joined by `k` disjoint paths on `l` vertices each. Vertex `j*l + i`
/// is position `i` (0-based) on path `j`; position 0 is `a_j`, position
/// `l - 1` is `b_j`.
pub fn line_theta(k: usize, l: usize) -> Result<Graph> {
    if k < 2 || l < 2 {
        return Err(invalid(format!("line-theta needs k >= 2 and l >= 2, got ({k}, {l})")));
    }
    let mut edges = Vec::new();
    for j in 0..k {
        for i in 1..l {
            edges.push((j * l + i - 1, j * l + i));
        }
        for j2 in j + 1..k {
            edges.push((j * l, j2 * l));
            edges.push((j * l + l - 1, j2 * l + l - 1));
        }
    }
    Graph::from_edge_list(k * l, &edges)
}

/// One vertex per path of `line_theta(k, l)`, excluding the two cliques.
/// `choice[j]` is the 0-based position on path `j`.
pub fn line_theta_separator(k: usize, l: usize, choice: &[usize]) -> Result<VertexSet> {
    if k < 2 || l < 2 {
        return Err(invalid(format!("line-theta needs k >= 2 and l >= 2, got ({k}, {l})")));
    }
    if choice.len() != k {
        return Err(invalid(format!("expected {k} choices, got {}", choice.len())));
    }
    if choice.iter().all(|&i| i == 0) || choice.iter().all(|&i| i + 1 == l) {
        return Err(invalid("the end cliques themselves are not separators"));
    }
    let mut set = VertexSet::new(k * l);
    for (j, &i) in choice.iter().enumerate() {
        if i >= l {
            return Err(invalid(format!("choice {i} for path {j} outside 0..{l}")));
        }
        set.insert(j * l + i);
    }
    Ok(set)
}

/// All `l^k - 2` line-theta certificates.
pub fn line_theta_certificates(k: usize, l: usize) -> Result<Vec<VertexSet>> {
    if l < 2 {
        return Err(invalid("line-theta needs l >= 2"));
    }
    mixed_radix(k, 0, l - 1)
        .into_iter()
        .filter(|c| !c.iter().all(|&i| i == 0) && !c.iter().all(|&i| i + 1 == l))
        .map(|c| line_theta_separator(k, l, &c))
        .collect()
}

/// Coordinate side table for grid-derived graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinates {
    positions: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl Coordinates {
    fn new(positions: Vec<(usize, usize)>) -> Self {
        let index = positions.iter().enumerate().map(|(v, &p)| (p, v)).collect();
        Coordinates { positions, index }
    }

    pub fn vertex(&self, at: (usize, usize)) -> Option<usize> {
        self.index.get(&at).copied()
    }

    pub fn position(&self, v: usize) -> (usize, usize) {
        self.positions[v]
    }

    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }
}

#[derive(Clone, Debug)]
pub struct Grid {
    pub graph: Graph,
    pub coords: Coordinates,
}

fn grid_edges(r: usize, s: usize) -> BTreeSet<((usize, usize), (usize, usize))> {
    let mut edges = BTreeSet::new();
    for i in 0..r {
        for j in 0..s {
            if i + 1 < r {
                edges.insert(((i, j), (i + 1, j)));
            }
            if j + 1 < s {
                edges.insert(((i, j), (i, j + 1)));
            }
        }
    }
    edges
}

/// The `r x s` grid; vertex `i*s + j` sits at `(i, j)`.
pub fn grid(r: usize, s: usize) -> Result<Grid> {
    if r < 2 || s < 2 {
        return Err(invalid(format!("grid needs r, s >= 2, got ({r}, {s})")));
    }
    let positions: Vec<_> = (0..r).flat_map(|i| (0..s).map(move |j| (i, j))).collect();
    let coords = Coordinates::new(positions);
    let edges: Vec<_> = grid_edges(r, s)
        .into_iter()
        .map(|(p, q)| (coords.vertex(p).unwrap(), coords.vertex(q).unwrap()))
        .collect();
    Ok(Grid { graph: Graph::from_edge_list(r * s, &edges)?, coords })
}

/// Elementary wall of height `h` with `(i, j)` grid coordinates.
#[derive(Clone, Debug)]
pub struct Wall {
    pub h: usize,
    pub graph: Graph,
    pub coords: Coordinates,
}

/// Elementary wall: the `(2h+2) x (h+1)` grid with the vertical edges
/// `(2i+1, 2j)-(2i+1, 2j+1)` and `(2i, 2j-1)-(2i, 2j)` removed, then the two
/// vertices left with degree one deleted.
pub fn wall(h: usize) -> Result<Wall> {
    if h < 2 {
        return Err(invalid(format!("wall needs h >= 2, got {h}")));
    }
    let (r, s) = (2 * h + 2, h + 1);
    let mut edges = grid_edges(r, s);
    for i in 0..=h {
        for j in 0..=(h - 1) / 2 {
            edges.remove(&((2 * i + 1, 2 * j), (2 * i + 1, 2 * j + 1)));
        }
        for j in 1..=h / 2 {
            edges.remove(&((2 * i, 2 * j - 1), (2 * i, 2 * j)));
        }
    }
    let mut degree: HashMap<(usize, usize), usize> = HashMap::new();
    for (p, q) in &edges {
        *degree.entry(*p).or_default() += 1;
        *degree.entry(*q).or_default() += 1;
    }
    let pendant: Vec<_> = (0..r)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .filter(|p| degree.get(p).copied().unwrap_or(0) == 1)
        .collect();
    if pendant.len() != 2 {
        return Err(Error::Consistency(format!("wall({h}) left {} degree-one vertices", pendant.len())));
    }
    edges.retain(|(p, q)| !pendant.contains(p) && !pendant.contains(q));
    let positions: Vec<_> = (0..r)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .filter(|p| !pendant.contains(p))
        .collect();
    let coords = Coordinates::new(positions);
    let edge_list: Vec<_> = edges
        .into_iter()
        .map(|(p, q)| (coords.vertex(p).unwrap(), coords.vertex(q).unwrap()))
        .collect();
    let graph = Graph::from_edge_list(coords.positions().len(), &edge_list)?;
    Ok(Wall { h, graph, coords })
}

fn check_binary(x: &[u8], h: usize) -> Result<()> {
    if x.len() != h {
        return Err(invalid(format!("sequence has length {}, wall height is {h}", x.len())));
    }
    if let Some(bad) = x.iter().find(|&&b| b > 1) {
        return Err(invalid(format!("sequence entry {bad} is not binary")));
    }
    Ok(())
}

/// Coordinates `v^{x,0} = (2, 0)`, `v^{x,j} = v^{x,j-1} + (x_j, 1)`.
fn staircase(x: &[u8]) -> Vec<(usize, usize)> {
    let mut out = vec![(2, 0)];
    for (j, &b) in x.iter().enumerate() {
        let (i, _) = out[j];
        out.push((i + b as usize, j + 1));
    }
    out
}

/// The staircase separator `S_x` of the wall; `x` is a 0/1 sequence of length `h`.
pub fn wall_separator(wall: &Wall, x: &[u8]) -> Result<VertexSet> {
    check_binary(x, wall.h)?;
    let mut set = VertexSet::new(wall.graph.n());
    for p in staircase(x) {
        let v = wall
            .coords
            .vertex(p)
            .ok_or_else(|| Error::Consistency(format!("staircase point {p:?} missing from wall({})", wall.h)))?;
        set.insert(v);
    }
    Ok(set)
}

/// All binary sequences of length `h`, as the `h` low bits of `0..2^h` read
/// from the most significant position.
pub fn binary_sequences(h: usize) -> Vec<Vec<u8>> {
    (0u64..1 << h)
        .map(|m| (0..h).map(|j| (m >> (h - 1 - j) & 1) as u8).collect())
        .collect()
}

/// Sequences with `x_{2i-1} = x_{2i}` for every pair.
pub fn paired_sequences(h: usize) -> Vec<Vec<u8>> {
    binary_sequences(h / 2)
        .into_iter()
        .map(|half| half.iter().flat_map(|&b| [b, b]).collect())
        .collect()
}

pub fn wall_certificates(wall: &Wall) -> Result<Vec<VertexSet>> {
    binary_sequences(wall.h).iter().map(|x| wall_separator(wall, x)).collect()
}

/// Line graph of a wall, with the wall and the edge behind every vertex.
#[derive(Clone, Debug)]
pub struct LineWall {
    pub wall: Wall,
    pub graph: Graph,
    pub edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl LineWall {
    /// Line-graph vertex of the wall edge between two coordinates.
    pub fn edge_vertex(&self, p: (usize, usize), q: (usize, usize)) -> Option<usize> {
        let u = self.wall.coords.vertex(p)?;
        let v = self.wall.coords.vertex(q)?;
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }
}

pub fn line_wall(h: usize) -> Result<LineWall> {
    let wall = wall(h)?;
    let (graph, edges) = wall.graph.line_graph()?;
    let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    Ok(LineWall { wall, graph, edges, edge_index })
}

/// `S'_x`: the wall edges from each `v^{x,j}` to `v^{x,j} + (1, 0)`, for
/// even `h` and `x` with `x_{2i-1} = x_{2i}`.
pub fn line_wall_separator(lw: &LineWall, x: &[u8]) -> Result<VertexSet> {
    let h = lw.wall.h;
    if h % 2 != 0 {
        return Err(invalid(format!("line-wall separators need even height, got {h}")));
    }
    check_binary(x, h)?;
    if x.chunks(2).any(|pair| pair[0] != pair[1]) {
        return Err(invalid("sequence must repeat each entry in consecutive pairs"));
    }
    let mut set = VertexSet::new(lw.graph.n());
    for (i, j) in staircase(x) {
        let e = lw
            .edge_vertex((i, j), (i + 1, j))
            .ok_or_else(|| Error::Consistency(format!("edge at {:?} missing from L(W_{h})", (i, j))))?;
        set.insert(e);
    }
    Ok(set)
}

pub fn line_wall_certificates(lw: &LineWall) -> Result<Vec<VertexSet>> {
    paired_sequences(lw.wall.h).iter().map(|x| line_wall_separator(lw, x)).collect()
}

/// `C5(m1, ..., m5) * K_t`: every cycle vertex blown up into a clique, adjacent
/// cliques made complete, then joined with a `t`-clique. Vertices are laid
/// out class by class, the `K_t` part last.
pub fn c5_blowup(m: [usize; 5], t: usize) -> Result<Graph> {
    if m.contains(&0) {
        return Err(invalid(format!("blow-up sizes must be positive, got {m:?}")));
    }
    let mut start = [0usize; 5];
    for i in 1..5 {
        start[i] = start[i - 1] + m[i - 1];
    }
    let base: usize = m.iter().sum();
    let n = base + t;
    let class = |i: usize| start[i]..start[i] + m[i];
    let mut edges = Vec::new();
    for i in 0..5 {
        for u in class(i) {
            for v in class(i).filter(|&v| v > u) {
                edges.push((u, v));
            }
            for v in class((i + 1) % 5) {
                edges.push((u, v));
            }
        }
    }
    for u in base..n {
        for v in 0..u {
            edges.push((v, u));
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::Girth;
    use crate::separators::{is_minimal_separator, minimal_separators_brute};

    #[test]
    fn theta_examples() {
        assert!(is_isomorphic(&theta(2, 2).unwrap(), &Graph::cycle(4).unwrap()).unwrap());
        assert!(is_isomorphic(&theta(2, 3).unwrap(), &Graph::cycle(6).unwrap()).unwrap());
        let t33 = theta(3, 3).unwrap();
        assert_eq!(t33.n(), 8);
        assert_eq!(t33.girth(), Girth::Finite(6));
        assert!(theta(1, 3).is_err());
        assert!(theta(2, 0).is_err());
    }

    #[test]
    fn theta_separator_examples() {
        let certs = theta_certificates(2, 3).unwrap();
        assert_eq!(certs.len(), 4);
        let c6 = theta(2, 3).unwrap();
        assert!(certs.iter().all(|s| is_minimal_separator(&c6, s)));
        let t33 = theta(3, 3).unwrap();
        assert!(is_minimal_separator(&t33, &theta_separator(3, 3, &[1, 1, 1]).unwrap()));
        assert_eq!(minimal_separators_brute(&c6).unwrap().count, 9);
        assert!(theta_separator(3, 3, &[0, 1, 1]).is_err());
        assert!(theta_separator(3, 3, &[1, 3, 1]).is_err());
        assert!(theta_separator(3, 3, &[1, 1]).is_err());
    }

    #[test]
    fn line_theta_examples() {
        for (k, l) in [(2, 2), (3, 2), (3, 3)] {
            assert_eq!(line_theta(k, l).unwrap().n(), k * l);
        }
        assert!(is_isomorphic(&line_theta(2, 2).unwrap(), &Graph::cycle(4).unwrap()).unwrap());
        for k in 2..=6 {
            assert_eq!(line_theta(k, 2).unwrap().independence_number(), Some(2));
        }
        assert_eq!(line_theta_certificates(3, 2).unwrap().len(), 6);
        assert!(line_theta_separator(2, 3, &[0, 0]).is_err());
        assert!(line_theta_separator(2, 3, &[2, 2]).is_err());
        assert!(line_theta_separator(2, 3, &[3, 0]).is_err());
    }

    #[test]
    fn grid_examples() {
        let g22 = grid(2, 2).unwrap();
        assert!(is_isomorphic(&g22.graph, &Graph::cycle(4).unwrap()).unwrap());
        let g32 = grid(3, 2).unwrap();
        assert_eq!(g32.graph.edge_count(), 7);
        assert_eq!(grid(2, 3).unwrap().graph.n(), 6);
        assert_eq!(g32.coords.position(g32.coords.vertex((2, 1)).unwrap()), (2, 1));
        assert!(grid(1, 3).is_err());
    }

    #[test]
    fn wall_sizes() {
        assert_eq!(wall(2).unwrap().graph.n(), 16);
        assert_eq!(wall(8).unwrap().graph.n(), 160);
        for h in 2..=7 {
            let w = wall(h).unwrap();
            assert_eq!(w.graph.n(), (2 * h + 2) * (h + 1) - 2);
            assert!((0..w.graph.n()).all(|v| (2..=3).contains(&w.graph.degree(v))));
        }
        assert!(wall(1).is_err());
    }

    #[test]
    fn wall_separator_examples() {
        let w = wall(2).unwrap();
        let s = wall_separator(&w, &[0, 0]).unwrap();
        let expected = VertexSet::from_members(w.graph.n(), [(2, 0), (2, 1), (2, 2)].map(|p| w.coords.vertex(p).unwrap()));
        assert_eq!(s, expected);
        assert!(wall_separator(&w, &[0]).is_err());
        assert!(wall_separator(&w, &[0, 2]).is_err());
    }

    #[test]
    fn line_wall_sequences() {
        assert_eq!(paired_sequences(4), vec![vec![0, 0, 0, 0], vec![0, 0, 1, 1], vec![1, 1, 0, 0], vec![1, 1, 1, 1]]);
        let lw = line_wall(2).unwrap();
        assert_eq!(lw.graph.n(), 19);
        let s = line_wall_separator(&lw, &[1, 1]).unwrap();
        assert_eq!(s.len(), 3);
        assert!(is_minimal_separator(&lw.graph, &s));
        assert!(line_wall_separator(&lw, &[1, 0]).is_err());
        let lw3 = line_wall(3).unwrap();
        assert!(line_wall_separator(&lw3, &[1, 1, 0]).is_err());
    }

    #[test]
    fn c5_blowup_examples() {
        assert_eq!(c5_blowup([1; 5], 0).unwrap(), Graph::cycle(5).unwrap());
        let g = c5_blowup([1; 5], 1).unwrap();
        assert_eq!(g.n(), 6);
        assert!(g.is_universal(5));
        let big = c5_blowup([2, 1, 3, 1, 1], 2).unwrap();
        assert_eq!(big.n(), 10);
        assert!(c5_blowup([1, 0, 1, 1, 1], 0).is_err());
    }
}
