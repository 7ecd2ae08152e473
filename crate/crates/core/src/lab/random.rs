//! Seeded random instances for the classes the bounds talk about.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::patterns::contains_induced;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn shuffled<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permuted(&perm)
}

fn cograph_rec<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n == 1 {
        return Graph::edgeless(1).expect("one vertex");
    }
    let k = rng.gen_range(1..n);
    let parts = [cograph_rec(k, rng), cograph_rec(n - k, rng)];
    if rng.gen_bool(0.5) {
        Graph::disjoint_union(&parts)
    } else {
        Graph::join(&parts)
    }
    .expect("two nonempty parts")
}

/// Cograph from a random binary union/join expression, with shuffled labels.
pub fn random_cograph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = rng_from_seed(seed);
    let g = cograph_rec(n, &mut rng);
    Ok(shuffled(&g, &mut rng))
}

/// Chordal graph grown by attaching each new vertex to a random clique of the
/// current graph, so insertion order reversed is a perfect elimination order.
pub fn random_chordal(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = rng_from_seed(seed);
    let mut edges = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        // occasionally start a new component
        if rng.gen_bool(0.05) {
            continue;
        }
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut candidates = adj[u].clone();
        candidates.shuffle(&mut rng);
        for w in candidates {
            if rng.gen_bool(0.6) && clique.iter().all(|&c| adj[c].contains(&w)) {
                clique.push(w);
            }
        }
        for &c in &clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    let g = Graph::from_edge_list(n, &edges)?;
    Ok(shuffled(&g, &mut rng))
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// A uniformly random induced subgraph on at least one vertex.
pub fn random_induced_subgraph<R: Rng>(g: &Graph, rng: &mut R) -> Result<Graph> {
    let mut set = VertexSet::new(g.n());
    for v in 0..g.n() {
        if rng.gen_bool(0.5) {
            set.insert(v);
        }
    }
    if set.is_empty() {
        set.insert(rng.gen_range(0..g.n()));
    }
    g.induced_subgraph(&set)
}

/// Rejection sampling from `G(n, p)` until a draw avoids every pattern.
pub fn sample_free<R: Rng>(n: usize, p: f64, patterns: &[Graph], max_draws: usize, rng: &mut R) -> Result<Graph> {
    for _ in 0..max_draws {
        let g = gnp(n, p, rng)?;
        let mut free = true;
        for h in patterns {
            if contains_induced(&g, h)? {
                free = false;
                break;
            }
        }
        if free {
            return Ok(g);
        }
    }
    Err(Error::Precondition(format!(
        "no pattern-free graph on {n} vertices after {max_draws} draws at p = {p}"
    )))
}
