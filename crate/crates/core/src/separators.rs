//! Minimal separators: recognition, enumeration and counting.
//!
//! A set `S` is a minimal separator iff `G - S` has at least two `S`-full
//! components, i.e. components `C` with `N(C) = S`. Two enumerators are
//! provided: a subset scan used as an oracle on small graphs, and a
//! close-separator expansion that streams `S_G` without looking at subsets.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// Default vertex limit of the subset-scan enumerator.
pub const BRUTE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Delay,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Delay => "delay",
        })
    }
}

/// Result of an enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorReport {
    pub count: usize,
    /// Sorted by size, then lexicographically.
    pub separators: Option<Vec<VertexSet>>,
    pub method: Method,
    pub ab_pair: Option<(usize, usize)>,
}

impl SeparatorReport {
    fn listing(mut separators: Vec<VertexSet>, method: Method, ab_pair: Option<(usize, usize)>) -> Self {
        separators.sort();
        SeparatorReport {
            count: separators.len(),
            separators: Some(separators),
            method,
            ab_pair,
        }
    }

    pub fn separators(&self) -> &[VertexSet] {
        self.separators.as_deref().unwrap_or(&[])
    }
}

fn check_subset(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "vertex set indexes {} vertices, graph has {}",
            s.universe(),
            g.n()
        )));
    }
    Ok(())
}

/// Components `C` of `G - S` in which every vertex of `S` has a neighbor.
pub fn s_full_components(g: &Graph, s: &VertexSet) -> Result<Vec<VertexSet>> {
    check_subset(g, s)?;
    if s.len() == g.n() {
        return Err(Error::Precondition("S must not contain every vertex".into()));
    }
    Ok(g.components_within(&s.complement())
        .into_iter()
        .filter(|c| &g.neighborhood_of(c) == s)
        .collect())
}

/// Whether `S` is a minimal separator of `G` (at least two `S`-full components).
pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    if s.universe() != g.n() {
        return false;
    }
    let mut rest = s.complement();
    let mut full = 0;
    while let Some(seed) = rest.first() {
        let comp = g.flood(seed, &rest);
        rest.difference_with(&comp);
        if &g.neighborhood_of(&comp) == s {
            full += 1;
            if full == 2 {
                return true;
            }
        }
    }
    false
}

/// Number of `S`-full components of `G - S` for `S` given as a mask (`n <= 64`).
#[inline]
fn full_components_mask(adj: &[u64], all: u64, s: u64, need: usize) -> usize {
    let mut rest = all & !s;
    let mut full = 0;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        let mut comp = seed;
        let mut frontier = seed;
        let mut reach = 0u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            reach |= adj[v];
            let fresh = adj[v] & rest & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        rest &= !comp;
        if reach & !comp == s {
            full += 1;
            if full == need {
                break;
            }
        }
    }
    full
}

fn masks(g: &Graph) -> (Vec<u64>, u64) {
    let adj = (0..g.n()).map(|v| g.neighbor_mask(v)).collect();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    (adj, all)
}

/// Subset-scan oracle with the default vertex limit.
pub fn minimal_separators_brute(g: &Graph) -> Result<SeparatorReport> {
    minimal_separators_brute_with_limit(g, BRUTE_LIMIT)
}

/// Tests every vertex subset, visiting them in Gray-code order.
pub fn minimal_separators_brute_with_limit(g: &Graph, limit: usize) -> Result<SeparatorReport> {
    let n = g.n();
    let limit = limit.min(32);
    if n > limit {
        return Err(Error::TooLarge { what: "brute-force enumeration", size: n, limit });
    }
    let (adj, all) = masks(g);
    let mut found = Vec::new();
    for i in 0u64..(1u64 << n) {
        let s = i ^ (i >> 1);
        if full_components_mask(&adj, all, s, 2) >= 2 {
            found.push(VertexSet::from_mask(n, s));
        }
    }
    Ok(SeparatorReport::listing(found, Method::Brute, None))
}

/// Streaming enumerator of `S_G` by close-separator expansion.
///
/// Seeds are the sets `N(C)` for components `C` of `G - N[v]`; every
/// discovered `S` is expanded through each `x in S` by the sets `N(C)` for
/// components `C` of `G - (S ∪ N(x))`. The fixpoint is exactly `S_G`.
pub struct SeparatorStream<'g> {
    g: &'g Graph,
    seen: HashSet<VertexSet>,
    ready: VecDeque<VertexSet>,
    pending: VecDeque<VertexSet>,
    next_seed: usize,
}

impl<'g> SeparatorStream<'g> {
    pub fn new(g: &'g Graph) -> Self {
        SeparatorStream {
            g,
            seen: HashSet::new(),
            ready: VecDeque::new(),
            pending: VecDeque::new(),
            next_seed: 0,
        }
    }

    fn record_neighborhoods_of_components(&mut self, removed: &VertexSet) {
        for comp in self.g.components_within(&removed.complement()) {
            let sep = self.g.neighborhood_of(&comp);
            if !self.seen.contains(&sep) {
                self.seen.insert(sep.clone());
                self.pending.push_back(sep.clone());
                self.ready.push_back(sep);
            }
        }
    }

    /// Number of distinct separators discovered so far.
    pub fn discovered(&self) -> usize {
        self.seen.len()
    }
}

impl Iterator for SeparatorStream<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            if let Some(s) = self.ready.pop_front() {
                return Some(s);
            }
            if self.next_seed < self.g.n() {
                let v = self.next_seed;
                self.next_seed += 1;
                let closed = self.g.closed_neighborhood(v);
                self.record_neighborhoods_of_components(&closed);
                continue;
            }
            let s = self.pending.pop_front()?;
            for x in s.iter() {
                let mut removed = s.union(self.g.neighbors(x));
                removed.insert(x);
                self.record_neighborhoods_of_components(&removed);
            }
        }
    }
}

/// Exact `S_G` via the streaming enumerator, sorted.
pub fn minimal_separators(g: &Graph) -> SeparatorReport {
    SeparatorReport::listing(SeparatorStream::new(g).collect(), Method::Delay, None)
}

/// `s(G)`.
pub fn count_minimal_separators(g: &Graph) -> usize {
    SeparatorStream::new(g).count()
}

fn check_ab_pair(g: &Graph, a: usize, b: usize) -> Result<()> {
    for v in [a, b] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if a == b {
        return Err(Error::Precondition(format!("a and b must differ (both {a})")));
    }
    if g.has_edge(a, b) {
        return Err(Error::Precondition(format!("{a} and {b} are adjacent")));
    }
    Ok(())
}

/// Whether `a` and `b` lie in distinct `S`-full components of `G - S`.
pub fn is_minimal_ab_separator(g: &Graph, s: &VertexSet, a: usize, b: usize) -> bool {
    if s.contains(a) || s.contains(b) {
        return false;
    }
    let rest = s.complement();
    let ca = g.flood(a, &rest);
    if ca.contains(b) || &g.neighborhood_of(&ca) != s {
        return false;
    }
    let cb = g.flood(b, &rest);
    &g.neighborhood_of(&cb) == s
}

/// `S_G(a, b)`, the minimal separators splitting `a` from `b`.
pub fn minimal_ab_separators(g: &Graph, a: usize, b: usize) -> Result<SeparatorReport> {
    check_ab_pair(g, a, b)?;
    let found = SeparatorStream::new(g).filter(|s| is_minimal_ab_separator(g, s, a, b)).collect();
    Ok(SeparatorReport::listing(found, Method::Delay, Some((a, b))))
}

/// `S_G(a, b)` straight from the definition: every subset of `V - {a, b}`
/// that separates `a` from `b` and none of whose one-smaller subsets does.
pub fn minimal_ab_separators_brute(g: &Graph, a: usize, b: usize) -> Result<SeparatorReport> {
    check_ab_pair(g, a, b)?;
    let n = g.n();
    if n > BRUTE_LIMIT {
        return Err(Error::TooLarge { what: "brute-force enumeration", size: n, limit: BRUTE_LIMIT });
    }
    let (adj, all) = masks(g);
    let separates = |s: u64| -> bool {
        let rest = all & !s;
        let mut comp = 1u64 << a;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & rest & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp >> b & 1 == 0
    };
    let free = all & !(1u64 << a) & !(1u64 << b);
    let mut found = Vec::new();
    // iterate all submasks of `free`
    let mut s = free;
    loop {
        if separates(s) {
            let mut minimal = true;
            let mut bits = s;
            while bits != 0 {
                let v = bits & bits.wrapping_neg();
                bits &= bits - 1;
                if separates(s & !v) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                found.push(VertexSet::from_mask(n, s));
            }
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & free;
    }
    Ok(SeparatorReport::listing(found, Method::Brute, Some((a, b))))
}
