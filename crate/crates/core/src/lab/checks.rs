//! Executable forms of the counting statements about minimal separators.
//!
//! Each `check_*` returns `Ok(false)` when the statement fails on the input
//! and an error when the input is outside the statement's hypotheses.

use crate::graph::Graph;
use crate::lab::chordal::is_chordal;
use crate::patterns::{contains_induced, is_family_free, GraphFamily};
use crate::separators::minimal_separators;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

fn seps(g: &Graph) -> Vec<VertexSet> {
    minimal_separators(g).separators().to_vec()
}

fn s(g: &Graph) -> usize {
    minimal_separators(g).count
}

/// `set` restated in the labels of `g - v`.
fn drop_vertex(set: &VertexSet, v: usize) -> VertexSet {
    VertexSet::from_members(set.universe() - 1, set.iter().filter(|&w| w != v).map(|w| if w > v { w - 1 } else { w }))
}

/// `set` over an induced subgraph, restated over the host via `members`.
fn lift(set: &VertexSet, members: &[usize], n: usize) -> VertexSet {
    VertexSet::from_members(n, set.iter().map(|i| members[i]))
}

/// Disconnected graphs: `s(G) = sum of s(G_i) + 1`.
pub fn check_union_formula(g: &Graph) -> Result<bool> {
    let comps = g.components();
    if comps.len() < 2 {
        return Err(Error::Precondition("union formula needs a disconnected graph".into()));
    }
    let mut total = 1;
    for c in &comps {
        total += s(&g.induced_subgraph(c)?);
    }
    Ok(s(g) == total)
}

/// Separators of a join with parts `parts` (vertex sets of `g`) are exactly
/// `S_i ∪ (V \ V_i)` for `S_i` a separator of part `i`.
fn join_lift_holds(g: &Graph, parts: &[VertexSet]) -> Result<bool> {
    let n = g.n();
    let mut expected = Vec::new();
    for part in parts {
        let members = part.to_vec();
        let outside = part.complement();
        for si in seps(&g.induced_subgraph(part)?) {
            expected.push(lift(&si, &members, n).union(&outside));
        }
    }
    expected.sort();
    let total = expected.len();
    expected.dedup();
    Ok(expected.len() == total && expected == seps(g))
}

/// Join of `gs`: separators lift set by set, so `s(G) = sum of s(G_i)`.
pub fn check_join_formula(gs: &[Graph]) -> Result<bool> {
    if gs.len() < 2 {
        return Err(Error::InvalidParameter("join formula needs at least two graphs".into()));
    }
    let g = Graph::join(gs)?;
    let mut parts = Vec::new();
    let mut offset = 0;
    for h in gs {
        parts.push(VertexSet::from_members(g.n(), offset..offset + h.n()));
        offset += h.n();
    }
    let sum: usize = gs.iter().map(s).sum();
    Ok(join_lift_holds(&g, &parts)? && s(&g) == sum)
}

/// The join lift along the co-components of a co-disconnected graph.
pub fn check_join_lift(g: &Graph) -> Result<bool> {
    let parts = g.co_components();
    if parts.len() < 2 {
        return Err(Error::Precondition("join lift needs a disconnected complement".into()));
    }
    join_lift_holds(g, &parts)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpsReport {
    /// (statement, number of applications checked)
    pub checked: Vec<(&'static str, usize)>,
    /// (statement, description of the failing application)
    pub failures: Vec<(&'static str, String)>,
}

impl OpsReport {
    fn tally(&mut self, what: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        match self.checked.iter_mut().find(|(w, _)| *w == what) {
            Some((_, c)) => *c += 1,
            None => self.checked.push((what, 1)),
        }
        if !ok {
            self.failures.push((what, detail()));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Statement names used in [`OpsReport`].
pub const UNIVERSAL: &str = "universal vertex";
pub const TRUE_TWIN: &str = "true twins";
pub const SIMPLICIAL: &str = "simplicial vertex";
pub const MONOTONE: &str = "vertex deletion monotonicity";
pub const DELETION: &str = "separator minus a vertex";
pub const NEAR_TWIN: &str = "near twins";

/// Vertex-level statements on every applicable vertex or pair of `g`.
pub fn check_vertex_ops(g: &Graph) -> Result<OpsReport> {
    let mut report = OpsReport::default();
    let n = g.n();
    let all = seps(g);
    let sg = all.len();
    for (u, v) in (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))) {
        if g.are_near_twins(u, v) {
            for sep in &all {
                report.tally(NEAR_TWIN, sep.contains(u) == sep.contains(v), || format!("{g:?}, pair ({u},{v}), S = {sep:?}"));
            }
        }
    }
    if n < 2 {
        return Ok(report);
    }
    for v in 0..n {
        let h = g.remove_vertex(v)?;
        let hs = seps(&h);
        let sh = hs.len();
        report.tally(MONOTONE, sh <= sg, || format!("{g:?} minus {v}: {sh} > {sg}"));
        if g.is_universal(v) {
            report.tally(UNIVERSAL, sg == sh, || format!("{g:?}, vertex {v}: {sg} vs {sh}"));
        }
        if (0..n).any(|w| w != v && g.are_true_twins(v, w)) {
            report.tally(TRUE_TWIN, sg == sh, || format!("{g:?}, vertex {v}: {sg} vs {sh}"));
        }
        if g.is_simplicial(v) {
            report.tally(SIMPLICIAL, sh <= sg && sg <= sh + 1, || format!("{g:?}, vertex {v}: {sg} vs {sh}"));
        }
        for sep in all.iter().filter(|sep| sep.contains(v)) {
            let reduced = drop_vertex(sep, v);
            report.tally(DELETION, hs.binary_search(&reduced).is_ok(), || format!("{g:?}, S = {sep:?}, v = {v}"));
        }
    }
    Ok(report)
}

fn require_free(g: &Graph, names: &[&str]) -> Result<()> {
    if is_family_free(g, &GraphFamily::from_names(names)?)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!("graph is not {{{}}}-free", names.join(","))))
    }
}

/// `P4`-free graphs have `s(G) < 2n/3`.
pub fn check_cograph_bound(g: &Graph) -> Result<bool> {
    require_free(g, &["P4"])?;
    Ok(3 * s(g) < 2 * g.n())
}

/// Chordal graphs have `s(G) <= n - 1`.
pub fn check_chordal_bound(g: &Graph) -> Result<bool> {
    if !is_chordal(g) {
        return Err(Error::Precondition("graph is not chordal".into()));
    }
    Ok(s(g) < g.n())
}

/// In a `2P2`-free graph every minimal separator is a vertex neighborhood,
/// hence `s(G) <= n`.
pub fn check_2p2_separator_shapes(g: &Graph) -> Result<bool> {
    require_free(g, &["2P2"])?;
    let all = seps(g);
    let shaped = all.iter().all(|sep| (0..g.n()).any(|v| g.neighbors(v) == sep));
    Ok(shaped && all.len() <= g.n())
}

/// `P2 + k P1`.
pub fn p2_plus_independent(k: usize) -> Result<Graph> {
    Graph::from_edge_list(k + 2, &[(0, 1)])
}

/// `K_l + P2`.
pub fn clique_plus_p2(l: usize) -> Result<Graph> {
    let mut edges: Vec<_> = (0..l).flat_map(|u| (u + 1..l).map(move |v| (u, v))).collect();
    edges.push((l, l + 1));
    Graph::from_edge_list(l + 2, &edges)
}

/// In a `{P2 + k P1, K_l + P2}`-free graph every minimal separator has a full
/// component on at most `ub - 1` vertices, where `ub >= R(l, k)`.
pub fn check_ramsey_bound(g: &Graph, k: usize, l: usize, ub: usize) -> Result<bool> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidParameter("k and l must be positive".into()));
    }
    if contains_induced(g, &p2_plus_independent(k)?)? || contains_induced(g, &clique_plus_p2(l)?)? {
        return Err(Error::Precondition(format!("graph is not {{P2+{k}P1, K{l}+P2}}-free")));
    }
    for sep in seps(g) {
        let small = crate::separators::s_full_components(g, &sep)?.iter().any(|c| c.len() < ub);
        if !small {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{P2+2P1, C4}`-free graphs have at most `C(n, 2) * (n + 1)` separators.
pub fn check_p2_2p1_c4_bound(g: &Graph) -> Result<bool> {
    require_free(g, &["P2+2P1", "C4"])?;
    let n = g.n();
    Ok(s(g) <= n * (n - 1) / 2 * (n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named;

    fn g(name: &str) -> Graph {
        named(name).unwrap()
    }

    #[test]
    fn union_examples() {
        assert!(check_union_formula(&g("2P2")).unwrap());
        assert!(check_union_formula(&g("K3+P1")).unwrap());
        let p4p4 = Graph::disjoint_union(&[Graph::path(4).unwrap(), Graph::path(4).unwrap()]).unwrap();
        assert!(check_union_formula(&p4p4).unwrap());
        assert_eq!(s(&p4p4), 5);
        assert!(check_union_formula(&g("P4")).is_err());
    }

    #[test]
    fn join_examples() {
        assert!(check_join_formula(&[g("P4"), g("P1")]).unwrap());
        assert_eq!(s(&Graph::join(&[g("P4"), g("P1")]).unwrap()), 2);
        assert!(check_join_formula(&[g("2P1"), g("2P1")]).unwrap());
        assert!(check_join_formula(&[g("P2"), g("P2")]).unwrap());
        assert!(check_join_lift(&g("C4")).unwrap());
        assert!(check_join_lift(&g("P4")).is_err());
        assert!(check_join_formula(&[g("P4")]).is_err());
    }

    #[test]
    fn vertex_op_examples() {
        let apex = Graph::join(&[g("P1"), g("P4")]).unwrap();
        let r = check_vertex_ops(&apex).unwrap();
        assert!(r.passed());
        assert!(r.checked.iter().any(|(w, _)| *w == UNIVERSAL));
        // P4 with an endpoint duplicated as a true twin
        let twin = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1)]).unwrap();
        assert_eq!(s(&twin), 2);
        assert!(check_vertex_ops(&twin).unwrap().checked.iter().any(|(w, _)| *w == TRUE_TWIN));
        assert_eq!(s(&g("paw")), 1);
        assert!(check_vertex_ops(&g("paw")).unwrap().passed());
        assert!(check_vertex_ops(&g("P1")).unwrap().passed());
    }

    #[test]
    fn bound_examples() {
        assert!(check_cograph_bound(&g("C4")).unwrap());
        assert!(check_cograph_bound(&g("K4")).unwrap());
        assert!(check_cograph_bound(&g("P4")).is_err());
        assert!(check_chordal_bound(&g("P4")).unwrap());
        assert!(check_chordal_bound(&g("C4")).is_err());
        assert!(check_2p2_separator_shapes(&g("C4")).unwrap());
        assert!(check_2p2_separator_shapes(&g("C5")).unwrap());
        assert_eq!(s(&g("C5")), 5);
        let k33 = Graph::join(&[g("3P1"), g("3P1")]).unwrap();
        assert!(check_2p2_separator_shapes(&k33).unwrap());
        assert!(check_ramsey_bound(&g("C5"), 3, 3, 6).unwrap());
        assert!(check_ramsey_bound(&g("C4"), 2, 2, 2).unwrap());
        assert!(check_ramsey_bound(&g("2P2"), 2, 2, 2).is_err());
        assert!(check_p2_2p1_c4_bound(&g("C5")).unwrap());
    }
}
