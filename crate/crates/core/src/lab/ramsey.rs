//! Ramsey numbers `R(k, l)`: every graph on `R(k, l)` vertices has a clique of
//! size `k` or an independent set of size `l`.
//!
//! Only values this crate can certify by exhaustive search are stored as exact.

use std::collections::BTreeMap;

use crate::canon::{enumerate_labeled_graphs, EXHAUSTIVE_LIMIT};
use crate::graph::Graph;
use crate::patterns::profile4;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct RamseyTable {
    upper: BTreeMap<(usize, usize), usize>,
}

fn has_clique(g: &Graph, k: usize) -> bool {
    fn grow(g: &Graph, cand: VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        cand.iter().any(|v| {
            let next = g.neighbors(v).intersection(&cand);
            let next = VertexSet::from_members(g.n(), next.iter().filter(|&w| w > v));
            grow(g, next, need - 1)
        })
    }
    grow(g, g.vertices(), k)
}

fn has_independent(g: &Graph, l: usize) -> bool {
    has_clique(&g.complement(), l)
}

impl RamseyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Exact values on the trivial lines and `R(3, 3) = 6`.
    pub fn exact(&self, k: usize, l: usize) -> Option<usize> {
        match (k.min(l), k.max(l)) {
            (0, _) => None,
            (1, _) => Some(1),
            (2, m) => Some(m),
            (3, 3) => Some(6),
            _ => None,
        }
    }

    /// Smallest known upper bound, using exact values, stored bounds, symmetry
    /// and monotonicity in both arguments.
    pub fn upper_bound(&self, k: usize, l: usize) -> Option<usize> {
        if let Some(v) = self.exact(k, l) {
            return Some(v);
        }
        self.upper
            .iter()
            .filter(|(&(a, b), _)| (a >= k && b >= l) || (a >= l && b >= k))
            .map(|(_, &ub)| ub)
            .min()
    }

    /// Records a user-supplied bound; rejected if it contradicts an exact value.
    pub fn set_upper_bound(&mut self, k: usize, l: usize, ub: usize) -> Result<()> {
        if k == 0 || l == 0 {
            return Err(Error::InvalidParameter("Ramsey arguments start at 1".into()));
        }
        if let Some(v) = self.exact(k, l) {
            if ub < v {
                return Err(Error::InvalidParameter(format!("R({k},{l}) = {v} exceeds the bound {ub}")));
            }
        }
        let e = self.upper.entry((k, l)).or_insert(ub);
        *e = (*e).min(ub);
        Ok(())
    }

    /// Exhaustively certifies a stored exact value: every graph on `R` vertices
    /// has a `k`-clique or an independent `l`-set, and an explicit witness on
    /// `R - 1` vertices has neither.
    pub fn certify(&self, k: usize, l: usize) -> Result<bool> {
        let r = self.exact(k, l).ok_or_else(|| Error::InvalidParameter(format!("no exact value stored for R({k},{l})")))?;
        if r > EXHAUSTIVE_LIMIT {
            return Err(Error::TooLarge { what: "Ramsey certification", size: r, limit: EXHAUSTIVE_LIMIT });
        }
        let all_hit = enumerate_labeled_graphs(r)?.all(|g| has_clique(&g, k) || has_independent(&g, l));
        if r == 1 {
            return Ok(all_hit);
        }
        let witness = if (k.min(l), k.max(l)) == (3, 3) {
            Graph::cycle(5)?
        } else if k == 2 {
            Graph::edgeless(r - 1)?
        } else if l == 2 {
            Graph::complete(r - 1)?
        } else {
            return Ok(false);
        };
        Ok(all_hit && !has_clique(&witness, k) && !has_independent(&witness, l))
    }
}

/// `R(3, 3) = 6`: no 6-vertex graph avoids both `K3` and `3P1`, and `C5` does.
pub fn verify_ramsey_value_33() -> bool {
    let avoids = |g: &Graph| {
        let p = profile4(g);
        !p.contains("K3").unwrap() && !p.contains("3P1").unwrap()
    };
    let counterexamples = enumerate_labeled_graphs(6).expect("n = 6").filter(|g| avoids(g)).count();
    counterexamples == 0 && avoids(&Graph::cycle(5).expect("C5"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values_certify() {
        let t = RamseyTable::new();
        for (k, l) in [(1, 4), (4, 1), (2, 2), (2, 5), (5, 2), (3, 3), (2, 6)] {
            assert!(t.certify(k, l).unwrap(), "R({k},{l})");
        }
        assert!(t.certify(3, 4).is_err());
    }

    #[test]
    fn bounds_are_monotone() {
        let mut t = RamseyTable::new();
        assert_eq!(t.upper_bound(3, 4), None);
        t.set_upper_bound(4, 4, 18).unwrap();
        assert_eq!(t.upper_bound(3, 4), Some(18));
        assert_eq!(t.upper_bound(4, 3), Some(18));
        t.set_upper_bound(3, 4, 9).unwrap();
        assert_eq!(t.upper_bound(3, 4), Some(9));
        assert_eq!(t.upper_bound(4, 4), Some(18));
        assert!(t.set_upper_bound(3, 3, 5).is_err());
        assert_eq!(t.upper_bound(2, 7), Some(7));
    }

    #[test]
    fn r33() {
        assert!(verify_ramsey_value_33());
        assert!(has_clique(&Graph::complete(6).unwrap(), 3));
    }
}
