//! Induced-subgraph containment for small patterns and forbidden families.

use std::fmt;
use std::sync::OnceLock;

use crate::canon::{canonical_form, is_isomorphic};
use crate::catalog::{catalog_index, name_of, named, small_classes, SMALL_CLASS_COUNT};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

/// Largest pattern accepted by [`contains_induced`].
pub const PATTERN_LIMIT: usize = 8;

/// Pattern vertices in an order where each vertex after the first of its
/// component has an earlier neighbor, so candidates can be drawn from a
/// neighborhood instead of the whole host.
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                (links, h.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Embedder<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: VertexSet,
}

impl Embedder<'_> {
    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let hv = self.order[pos];
        let anchor = (0..pos).find(|&q| self.h.has_edge(self.order[q], hv));
        let pool = match anchor {
            Some(q) => self.g.neighbors(self.image[q]).difference(&self.used),
            None => self.used.complement(),
        };
        let need = self.h.degree(hv);
        for gv in pool.iter() {
            if self.g.degree(gv) < need {
                continue;
            }
            let consistent =
                (0..pos).all(|q| self.h.has_edge(self.order[q], hv) == self.g.has_edge(self.image[q], gv));
            if !consistent {
                continue;
            }
            self.image.push(gv);
            self.used.insert(gv);
            if self.extend(pos + 1) {
                return true;
            }
            self.used.remove(gv);
            self.image.pop();
        }
        false
    }
}

/// Whether some vertex subset of `g` induces a copy of `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Result<bool> {
    if h.n() > PATTERN_LIMIT {
        return Err(Error::TooLarge { what: "pattern", size: h.n(), limit: PATTERN_LIMIT });
    }
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    let mut e = Embedder {
        g,
        h,
        order: search_order(h),
        image: Vec::with_capacity(h.n()),
        used: VertexSet::new(g.n()),
    };
    Ok(e.extend(0))
}

/// `TABLES[k][code]` is the small-class index of the `k`-vertex graph whose
/// pair bits, in order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3), spell `code`.
fn tables() -> &'static [Vec<u8>; 5] {
    static TABLES: OnceLock<[Vec<u8>; 5]> = OnceLock::new();
    TABLES.get_or_init(|| {
        let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
        let mut out: [Vec<u8>; 5] = Default::default();
        for (k, table) in out.iter_mut().enumerate().skip(1) {
            let bits = k * (k - 1) / 2;
            *table = (0..1u32 << bits)
                .map(|code| {
                    let edges: Vec<_> = (0..bits).filter(|&b| code >> b & 1 == 1).map(|b| pairs[b]).collect();
                    let g = Graph::from_edge_list(k, &edges).expect("small table graph");
                    catalog_index(&g).expect("every graph on at most 4 vertices is catalogued") as u8
                })
                .collect();
        }
        out
    })
}

/// Scans subsets of size at most four and returns the classes seen, stopping
/// as soon as a class in `stop` appears.
fn scan_small(g: &Graph, stop: u32) -> u32 {
    let t = tables();
    let n = g.n();
    let all = (1u32 << SMALL_CLASS_COUNT) - 1;
    let mut seen = 0u32;
    let mark = |class: u8, seen: &mut u32| {
        *seen |= 1 << class;
        *seen & stop != 0 || *seen == all
    };
    if mark(t[1][0], &mut seen) {
        return seen;
    }
    for a in 0..n {
        for b in a + 1..n {
            let ab = g.has_edge(a, b) as usize;
            if mark(t[2][ab], &mut seen) {
                return seen;
            }
            for c in b + 1..n {
                let abc = ab | (g.has_edge(a, c) as usize) << 1 | (g.has_edge(b, c) as usize) << 2;
                if mark(t[3][abc], &mut seen) {
                    return seen;
                }
                for d in c + 1..n {
                    let code = abc
                        | (g.has_edge(a, d) as usize) << 3
                        | (g.has_edge(b, d) as usize) << 4
                        | (g.has_edge(c, d) as usize) << 5;
                    if mark(t[4][code], &mut seen) {
                        return seen;
                    }
                }
            }
        }
    }
    seen
}

/// The set of isomorphism classes on at most four vertices that occur as
/// induced subgraphs, as a bitmask over [`small_classes`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Profile4(u32);

impl Profile4 {
    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains_class(self, class: usize) -> bool {
        self.0 >> class & 1 == 1
    }

    pub fn contains(self, name: &str) -> Result<bool> {
        let g = named(name)?;
        Ok(catalog_index(&g).is_some_and(|i| i < SMALL_CLASS_COUNT && self.contains_class(i)))
    }

    pub fn names(self) -> Vec<&'static str> {
        small_classes()
            .iter()
            .enumerate()
            .filter(|&(i, _)| self.contains_class(i))
            .map(|(_, e)| e.name)
            .collect()
    }
}

pub fn profile4(g: &Graph) -> Profile4 {
    Profile4(scan_small(g, 0))
}

/// A finite family of forbidden induced subgraphs, with members pairwise
/// non-isomorphic.
#[derive(Clone, Debug)]
pub struct GraphFamily {
    members: Vec<Graph>,
    canonical: bool,
}

impl GraphFamily {
    /// Builds a family, merging isomorphic duplicates (first occurrence kept).
    pub fn new(graphs: Vec<Graph>) -> Result<Self> {
        let mut members: Vec<Graph> = Vec::with_capacity(graphs.len());
        for g in graphs {
            if g.n() > PATTERN_LIMIT {
                return Err(Error::TooLarge { what: "family member", size: g.n(), limit: PATTERN_LIMIT });
            }
            let mut duplicate = false;
            for m in &members {
                if is_isomorphic(m, &g)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                members.push(g);
            }
        }
        Ok(GraphFamily { members, canonical: false })
    }

    pub fn empty() -> Self {
        GraphFamily { members: Vec::new(), canonical: true }
    }

    /// Parses comma-separated catalog names; an empty or blank string is the
    /// empty family.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim().trim_start_matches('{').trim_end_matches('}');
        if text.trim().is_empty() {
            return Ok(Self::empty());
        }
        let graphs = text.split(',').map(named).collect::<Result<Vec<_>>>()?;
        Self::new(graphs)
    }

    pub fn from_names(names: &[&str]) -> Result<Self> {
        Self::parse(&names.join(","))
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    pub fn max_order(&self) -> usize {
        self.members.iter().map(Graph::n).max().unwrap_or(0)
    }

    /// Bitmask over [`small_classes`], if every member has at most four vertices.
    pub fn small_mask(&self) -> Option<u32> {
        self.members.iter().try_fold(0u32, |acc, m| {
            let i = catalog_index(m).filter(|&i| i < SMALL_CLASS_COUNT)?;
            Some(acc | 1 << i)
        })
    }

    pub fn from_small_mask(mask: u32) -> Self {
        let members = small_classes()
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.graph.clone())
            .collect();
        GraphFamily { members, canonical: false }
    }

    /// Equality of member sets up to isomorphism.
    pub fn same_members(&self, other: &GraphFamily) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        let forms = |f: &GraphFamily| -> Result<Vec<_>> {
            let mut v = f.members.iter().map(canonical_form).collect::<Result<Vec<_>>>()?;
            v.sort();
            Ok(v)
        };
        Ok(forms(self)? == forms(other)?)
    }
}

fn member_name(g: &Graph) -> String {
    match name_of(g) {
        Some(name) => name.to_string(),
        None => format!("G{}:{:?}", g.n(), g.edges()),
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.members.iter().map(member_name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl std::str::FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Whether `g` has no induced subgraph isomorphic to a member of `family`.
pub fn is_family_free(g: &Graph, family: &GraphFamily) -> Result<bool> {
    if family.max_order() > 4 {
        return Err(Error::OutOfScope(family.max_order()));
    }
    let Some(mask) = family.small_mask() else {
        return Err(Error::Consistency("family member missing from the small-graph table".into()));
    };
    if mask == 0 {
        return Ok(true);
    }
    Ok(scan_small(g, mask) & mask == 0)
}

/// `F ⊴ F'`: every member of `fp` contains some member of `f` as an induced
/// subgraph. True when `fp` is empty.
pub fn dominates(f: &GraphFamily, fp: &GraphFamily) -> Result<bool> {
    for h in fp.members() {
        let mut hit = false;
        for f0 in f.members() {
            if contains_induced(h, f0)? {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Drops members that contain another member; the survivors keep their order
/// and define the same free class.
pub fn canonicalize_family(family: &GraphFamily) -> Result<GraphFamily> {
    let ms = family.members();
    let mut keep = Vec::new();
    'outer: for (i, h) in ms.iter().enumerate() {
        for (j, f0) in ms.iter().enumerate() {
            if i != j && contains_induced(h, f0)? {
                continue 'outer;
            }
        }
        keep.push(h.clone());
    }
    Ok(GraphFamily { members: keep, canonical: true })
}
