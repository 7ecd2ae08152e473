//! Named small graphs, including all 18 isomorphism types on at most four vertices.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::{Error, Result};

pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Graph,
}

const TABLE: &[(&str, usize, &[(usize, usize)])] = &[
    ("P1", 1, &[]),
    ("P2", 2, &[(0, 1)]),
    ("2P1", 2, &[]),
    ("P3", 3, &[(0, 1), (1, 2)]),
    ("K3", 3, &[(0, 1), (0, 2), (1, 2)]),
    ("P2+P1", 3, &[(0, 1)]),
    ("3P1", 3, &[]),
    ("P4", 4, &[(0, 1), (1, 2), (2, 3)]),
    ("2P2", 4, &[(0, 1), (2, 3)]),
    ("P2+2P1", 4, &[(0, 1)]),
    ("P3+P1", 4, &[(0, 1), (1, 2)]),
    ("4P1", 4, &[]),
    ("claw", 4, &[(0, 1), (0, 2), (0, 3)]),
    ("paw", 4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
    ("diamond", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    ("C4", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
    ("K4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ("K3+P1", 4, &[(0, 1), (0, 2), (1, 2)]),
    ("C5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    ("C6", 6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]),
    ("C7", 7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6)]),
];

const ALIASES: &[(&str, &str)] = &[
    ("k1", "P1"),
    ("k2", "P2"),
    ("c3", "K3"),
    ("triangle", "K3"),
    ("cop3", "P2+P1"),
    ("co-p3", "P2+P1"),
    ("p1+p2", "P2+P1"),
    ("2k2", "2P2"),
    ("cok4", "4P1"),
    ("coclaw", "K3+P1"),
    ("co-claw", "K3+P1"),
    ("p1+k3", "K3+P1"),
    ("k1,3", "claw"),
];

/// Number of isomorphism types on at most four vertices.
pub const SMALL_CLASS_COUNT: usize = 18;

pub fn catalog() -> &'static [NamedGraph] {
    static CATALOG: OnceLock<Vec<NamedGraph>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        TABLE
            .iter()
            .map(|&(name, n, edges)| NamedGraph {
                name,
                graph: Graph::from_edge_list(n, edges).expect("catalog entries are valid"),
            })
            .collect()
    })
}

/// The 18 graphs on at most four vertices, ordered by vertex count.
pub fn small_classes() -> &'static [NamedGraph] {
    &catalog()[..SMALL_CLASS_COUNT]
}

fn by_form() -> &'static HashMap<CanonicalForm, usize> {
    static FORMS: OnceLock<HashMap<CanonicalForm, usize>> = OnceLock::new();
    FORMS.get_or_init(|| {
        catalog()
            .iter()
            .enumerate()
            .map(|(i, e)| (canonical_form(&e.graph).expect("catalog graphs are small"), i))
            .collect()
    })
}

/// Index of the catalog entry isomorphic to `g`.
pub fn catalog_index(g: &Graph) -> Option<usize> {
    if g.n() > 7 {
        return None;
    }
    canonical_form(g).ok().and_then(|f| by_form().get(&f).copied())
}

pub fn name_of(g: &Graph) -> Option<&'static str> {
    catalog_index(g).map(|i| catalog()[i].name)
}

/// Resolves a case-insensitive name or alias to its catalog spelling.
pub fn resolve_name(name: &str) -> Result<&'static str> {
    let key: String = name.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    if let Some(e) = catalog().iter().find(|e| e.name.to_lowercase() == key) {
        return Ok(e.name);
    }
    ALIASES
        .iter()
        .find(|(alias, _)| *alias == key)
        .map(|&(_, target)| target)
        .ok_or_else(|| Error::UnknownGraphName(name.trim().to_string()))
}

pub fn named(name: &str) -> Result<Graph> {
    let canonical = resolve_name(name)?;
    Ok(catalog().iter().find(|e| e.name == canonical).expect("resolved").graph.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn four_vertex_entries_are_the_eleven_types() {
        let forms: HashSet<_> = catalog()
            .iter()
            .filter(|e| e.graph.n() == 4)
            .map(|e| canonical_form(&e.graph).unwrap())
            .collect();
        assert_eq!(forms.len(), 11);
        let all: HashSet<_> = catalog().iter().map(|e| canonical_form(&e.graph).unwrap()).collect();
        assert_eq!(all.len(), catalog().len());
        assert_eq!(small_classes().len(), 18);
        assert!(small_classes().iter().all(|e| e.graph.n() <= 4));
    }

    #[test]
    fn names_and_aliases() {
        assert_eq!(resolve_name(" coclaw ").unwrap(), "K3+P1");
        assert_eq!(resolve_name("DIAMOND").unwrap(), "diamond");
        assert_eq!(resolve_name("p2 + 2p1").unwrap(), "P2+2P1");
        assert!(matches!(resolve_name("bull"), Err(Error::UnknownGraphName(_))));
        let claw = named("claw").unwrap();
        assert_eq!(name_of(&claw.complement()), Some("K3+P1"));
        assert_eq!(name_of(&Graph::cycle(4).unwrap().permuted(&[2, 0, 3, 1])), Some("C4"));
    }
}
