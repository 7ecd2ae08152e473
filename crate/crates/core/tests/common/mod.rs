//! Reference implementations used as test oracles. They work on `u64`
//! adjacency masks and share no code with the library algorithms.
#![allow(dead_code)]

use minsep_core::Graph;

pub fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbor_mask(v)).collect()
}

/// Components of the subgraph induced by `allowed`.
pub fn components(adj: &[u64], allowed: u64) -> Vec<u64> {
    let mut left = allowed;
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= adj[v] & allowed;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

/// `S` is a minimal separator iff `G - S` has two components whose
/// neighborhoods are all of `S`.
pub fn is_minimal_separator(adj: &[u64], s: u64) -> bool {
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let full = components(adj, all & !s)
        .into_iter()
        .filter(|&c| {
            let mut nb = 0;
            let mut rest = c;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                nb |= adj[v];
            }
            nb & s == s
        })
        .count();
    full >= 2
}

/// Every minimal separator by definition, as sorted masks.
pub fn minimal_separators(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 24, "oracle limited to 24 vertices");
    let adj = masks(g);
    (0..1u64 << g.n()).filter(|&s| is_minimal_separator(&adj, s)).collect()
}

/// Induced containment by trying every injective map.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    fn matrix(g: &Graph) -> Vec<Vec<bool>> {
        (0..g.n()).map(|u| (0..g.n()).map(|v| g.neighbors(u).contains(v)).collect()).collect()
    }
    fn extend(g: &[Vec<bool>], h: &[Vec<bool>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == h.len() {
            return true;
        }
        for v in 0..g.len() {
            if used[v] || !(0..i).all(|j| h[i][j] == g[v][map[j]]) {
                continue;
            }
            map.push(v);
            used[v] = true;
            if extend(g, h, map, used) {
                return true;
            }
            used[v] = false;
            map.pop();
        }
        false
    }
    h.n() <= g.n() && extend(&matrix(g), &matrix(h), &mut Vec::new(), &mut vec![false; g.n()])
}

pub fn set_mask(set: &minsep_core::VertexSet) -> u64 {
    set.iter().fold(0, |m, v| m | 1 << v)
}

/// Same test as [`is_minimal_separator`] for graphs of any order.
pub fn is_minimal_separator_large(g: &Graph, s: &[usize]) -> bool {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().collect()).collect();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let mut seen = in_s.clone();
    let mut full = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut touched = vec![false; n];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if in_s[w] {
                    touched[w] = true;
                } else if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if s.iter().all(|&v| touched[v]) {
            full += 1;
        }
    }
    full >= 2
}
