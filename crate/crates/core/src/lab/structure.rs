//! Structure recovery for paw-free and `{3P1, C4}`-free graphs.

use std::fmt;

use crate::catalog::named;
use crate::generators::c5_blowup;
use crate::graph::Graph;
use crate::lab::chordal::is_chordal;
use crate::patterns::{contains_induced, is_family_free, GraphFamily};
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureVerdict {
    TriangleFree,
    /// Part sizes, ascending.
    CompleteMultipartite(Vec<usize>),
    Chordal,
    C5BlowupJoinClique { m: [usize; 5], t: usize },
}

impl fmt::Display for StructureVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureVerdict::TriangleFree => write!(f, "K3-free"),
            StructureVerdict::CompleteMultipartite(parts) => write!(f, "complete multipartite {parts:?}"),
            StructureVerdict::Chordal => write!(f, "chordal"),
            StructureVerdict::C5BlowupJoinClique { m, t } => write!(f, "C5{m:?} * K{t}"),
        }
    }
}

impl StructureVerdict {
    /// Rebuilds the graph described by parametric verdicts.
    pub fn synthesize(&self) -> Option<Graph> {
        match self {
            StructureVerdict::CompleteMultipartite(parts) => {
                let pieces: Vec<Graph> = parts.iter().map(|&p| Graph::edgeless(p).expect("nonempty part")).collect();
                Some(Graph::join(&pieces).expect("at least one part"))
            }
            StructureVerdict::C5BlowupJoinClique { m, t } => Some(c5_blowup(*m, *t).expect("positive sizes")),
            _ => None,
        }
    }
}

/// Part sizes if `g` is complete multipartite: its co-components are edgeless.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let cocs = g.co_components();
    if cocs.iter().all(|c| g.is_independent(c)) {
        let mut parts: Vec<usize> = cocs.iter().map(VertexSet::len).collect();
        parts.sort_unstable();
        Some(parts)
    } else {
        None
    }
}

/// One verdict per component (in component order). Components that are both
/// triangle-free and complete multipartite report the multipartite tag.
pub fn paw_free_structure(g: &Graph) -> Result<Vec<StructureVerdict>> {
    if contains_induced(g, &named("paw")?)? {
        return Err(Error::Precondition("graph contains an induced paw".into()));
    }
    let k3 = named("K3")?;
    g.components()
        .iter()
        .map(|c| {
            let h = g.induced_subgraph(c)?;
            if let Some(parts) = multipartite_parts(&h) {
                Ok(StructureVerdict::CompleteMultipartite(parts))
            } else if !contains_induced(&h, &k3)? {
                Ok(StructureVerdict::TriangleFree)
            } else {
                Err(Error::Consistency(format!(
                    "paw-free component {:?} is neither K3-free nor complete multipartite",
                    c
                )))
            }
        })
        .collect()
}

/// Chordal, or the parameters of a `C5` blow-up joined with a clique.
pub fn structure_3p1c4(g: &Graph) -> Result<StructureVerdict> {
    if !is_family_free(g, &GraphFamily::from_names(&["3P1", "C4"])?)? {
        return Err(Error::Precondition("graph is not {3P1,C4}-free".into()));
    }
    if is_chordal(g) {
        return Ok(StructureVerdict::Chordal);
    }
    let fail = |why: &str| Error::Consistency(format!("non-chordal {{3P1,C4}}-free graph {g:?}: {why}"));
    let n = g.n();
    let universal: Vec<usize> = (0..n).filter(|&v| g.is_universal(v)).collect();
    let rest: Vec<usize> = (0..n).filter(|v| !universal.contains(v)).collect();
    // true-twin classes of the non-universal part
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &rest {
        match classes.iter_mut().find(|c| g.are_true_twins(c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    if classes.len() != 5 {
        return Err(fail(&format!("{} twin classes outside the universal vertices", classes.len())));
    }
    let linked = |a: usize, b: usize| g.has_edge(classes[a][0], classes[b][0]);
    let mut cycle = vec![0usize];
    while cycle.len() < 5 {
        let last = *cycle.last().unwrap();
        let next = (0..5)
            .find(|&c| !cycle.contains(&c) && linked(last, c))
            .ok_or_else(|| fail("twin quotient is not a 5-cycle"))?;
        cycle.push(next);
    }
    let m: [usize; 5] = std::array::from_fn(|i| classes[cycle[i]].len());
    let t = universal.len();
    // explicit isomorphism: classes in cycle order, then the universal vertices
    let mut image = vec![0usize; n];
    let mut next = 0;
    for &c in &cycle {
        for &v in &classes[c] {
            image[v] = next;
            next += 1;
        }
    }
    for &u in &universal {
        image[u] = next;
        next += 1;
    }
    let model = c5_blowup(m, t)?;
    let matches = (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == model.has_edge(image[u], image[v])));
    if !matches {
        return Err(fail("vertex mapping onto the blow-up is not an isomorphism"));
    }
    Ok(StructureVerdict::C5BlowupJoinClique { m, t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn paw_free_examples() {
        assert_eq!(paw_free_structure(&Graph::cycle(5).unwrap()).unwrap(), vec![StructureVerdict::TriangleFree]);
        let k23 = Graph::join(&[Graph::edgeless(2).unwrap(), Graph::edgeless(3).unwrap()]).unwrap();
        assert_eq!(paw_free_structure(&k23).unwrap(), vec![StructureVerdict::CompleteMultipartite(vec![2, 3])]);
        assert_eq!(
            paw_free_structure(&Graph::complete(3).unwrap()).unwrap(),
            vec![StructureVerdict::CompleteMultipartite(vec![1, 1, 1])]
        );
        assert!(paw_free_structure(&named("paw").unwrap()).is_err());
        let v = StructureVerdict::CompleteMultipartite(vec![2, 3]);
        assert!(is_isomorphic(&v.synthesize().unwrap(), &k23).unwrap());
    }

    #[test]
    fn three_p1_c4_examples() {
        assert_eq!(
            structure_3p1c4(&Graph::cycle(5).unwrap()).unwrap(),
            StructureVerdict::C5BlowupJoinClique { m: [1; 5], t: 0 }
        );
        let k3_pendant = Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(structure_3p1c4(&k3_pendant).unwrap(), StructureVerdict::Chordal);
        let g = c5_blowup([2, 1, 1, 3, 1], 2).unwrap().permuted(&[9, 3, 0, 7, 1, 8, 2, 5, 6, 4]);
        let v = structure_3p1c4(&g).unwrap();
        assert!(is_isomorphic(&v.synthesize().unwrap(), &g).unwrap());
        assert!(structure_3p1c4(&Graph::cycle(4).unwrap()).is_err());
    }
}
