//! Grouped verification runs with one row per statement.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{enumerate_labeled_graphs, is_isomorphic, EXHAUSTIVE_LIMIT};
use crate::generators::{
    line_theta, line_theta_certificates, line_wall, line_wall_certificates, theta, theta_certificates, wall,
    wall_certificates,
};
use crate::graph::Graph;
use crate::lab::chordal::is_chordal;
use crate::lab::checks::{self, check_vertex_ops};
use crate::lab::random::{gnp, random_chordal, random_cograph, random_induced_subgraph, rng_from_seed, sample_free};
use crate::lab::ramsey::{verify_ramsey_value_33, RamseyTable};
use crate::lab::structure::{paw_free_structure, structure_3p1c4};
use crate::patterns::{profile4, Profile4};
use crate::separators::{count_minimal_separators, is_minimal_separator};
use crate::vertex_set::VertexSet;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Ops,
    Bounds,
    Structure,
    Certificates,
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Ops, Suite::Bounds, Suite::Structure, Suite::Certificates],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Ops => "ops",
            Suite::Bounds => "bounds",
            Suite::Structure => "structure",
            Suite::Certificates => "certificates",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "ops" => Ok(Suite::Ops),
            "bounds" => Ok(Suite::Bounds),
            "structure" => Ok(Suite::Structure),
            "certificates" => Ok(Suite::Certificates),
            _ => Err(Error::InvalidParameter(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub check_id: String,
    /// The statement being checked, in words.
    pub paper_ref: String,
    pub status: Status,
    /// How many graphs, vertices or sets the statement was applied to.
    pub applications: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Sizes used by a run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub seed: u64,
    pub random_samples: usize,
    pub wall_heights: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 6, seed: 0, random_samples: 200, wall_heights: 5 }
    }
}

const STATEMENTS: &[(&str, &str)] = &[
    ("union-formula", "s(G) = sum of s(G_i) + 1 over the components of a disconnected graph"),
    ("join-lift", "minimal separators of a join are S_i plus every other part"),
    ("universal-vertex", "s(G) = s(G - v) for a universal vertex v"),
    ("true-twins", "s(G) = s(G - v) when v has a true twin"),
    ("simplicial-vertex", "s(G - v) <= s(G) <= s(G - v) + 1 for a simplicial vertex v"),
    ("vertex-monotonicity", "s(G - v) <= s(G)"),
    ("separator-deletion", "S - v is a minimal separator of G - v for every v in S"),
    ("near-twins", "vertices with equal open neighborhoods up to each other lie in the same minimal separators"),
    ("induced-monotonicity", "s(H) <= s(G) for induced subgraphs H of random G"),
    ("cograph-bound", "s(G) < 2n/3 for P4-free graphs"),
    ("chordal-bound", "s(G) <= n - 1 for chordal graphs"),
    ("2p2-neighborhoods", "every minimal separator of a 2P2-free graph is a neighborhood N(v)"),
    ("p2-2p1-c4-bound", "s(G) <= C(n,2)(n+1) for {P2+2P1,C4}-free graphs"),
    ("ramsey-2-2", "a full component below R(2,2) for {P2+2P1,2P2}-free graphs"),
    ("ramsey-3-3", "a full component below R(3,3) for {P2+3P1,K3+P2}-free graphs"),
    ("random-cograph-bound", "s(G) < 2n/3 on random cographs"),
    ("random-chordal-bound", "s(G) <= n - 1 on random chordal graphs"),
    ("random-ramsey-3-3", "a full component below R(3,3) on sampled {P2+3P1,K3+P2}-free graphs"),
    ("paw-free-structure", "connected paw-free graphs are K3-free or complete multipartite"),
    ("3p1-c4-structure", "{3P1,C4}-free graphs are chordal or C5(m1,...,m5) * K_t"),
    ("ramsey-table", "stored exact Ramsey values certify exhaustively"),
    ("ramsey-3-3-value", "R(3,3) = 6 with C5 as the extremal witness"),
    ("theta-certificates", "(l-1)^k distinct minimal separators in theta(k,l)"),
    ("line-theta-certificates", "l^k - 2 distinct minimal separators in the line graph of theta(k,l)"),
    ("wall-certificates", "2^h distinct minimal separators in the wall W_h"),
    ("line-wall-certificates", "2^(h/2) distinct minimal separators in the line graph of W_h"),
];

fn statement(id: &str) -> String {
    STATEMENTS.iter().find(|(k, _)| *k == id).map(|(_, v)| v.to_string()).unwrap_or_default()
}

/// Per-statement tally: applications, failures, first failure.
#[derive(Default)]
struct Tally(BTreeMap<&'static str, (usize, usize, Option<String>)>);

impl Tally {
    fn record(&mut self, id: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let e = self.0.entry(id).or_default();
        e.0 += 1;
        if !ok {
            e.1 += 1;
            if e.2.is_none() {
                e.2 = Some(detail());
            }
        }
    }

    fn add(&mut self, id: &'static str, applications: usize, failures: &[String]) {
        let e = self.0.entry(id).or_default();
        e.0 += applications;
        e.1 += failures.len();
        if e.2.is_none() {
            e.2 = failures.first().cloned();
        }
    }

    fn touch(&mut self, id: &'static str) {
        self.0.entry(id).or_default();
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (id, (a, f, c)) in other.0 {
            let e = self.0.entry(id).or_default();
            e.0 += a;
            e.1 += f;
            if e.2.is_none() {
                e.2 = c;
            }
        }
        self
    }

    fn rows(self, suite: Suite, order: &[&'static str]) -> Vec<CheckResult> {
        let mut map = self.0;
        order
            .iter()
            .map(|&id| {
                let (applications, failures, first) = map.remove(id).unwrap_or_default();
                CheckResult {
                    suite: suite.to_string(),
                    check_id: id.to_string(),
                    paper_ref: statement(id),
                    status: if failures == 0 { Status::Pass } else { Status::Fail },
                    applications,
                    counterexample: first,
                }
            })
            .collect()
    }
}

fn outcome(r: Result<bool>) -> (bool, String) {
    match r {
        Ok(ok) => (ok, String::new()),
        Err(e) => (false, e.to_string()),
    }
}

/// Runs `f` on every labeled graph with `1..=max_n` vertices.
fn sweep<F>(max_n: usize, f: F) -> Result<Tally>
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    if max_n > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge { what: "exhaustive sweep", size: max_n, limit: EXHAUSTIVE_LIMIT });
    }
    let mut total = Tally::default();
    for n in 1..=max_n {
        let graphs = enumerate_labeled_graphs(n)?;
        let t = (0..graphs.total())
            .into_par_iter()
            .fold(Tally::default, |mut t, i| {
                f(&graphs.nth_graph(i), &mut t);
                t
            })
            .reduce(Tally::default, Tally::merge);
        total = total.merge(t);
    }
    Ok(total)
}

const OPS: &[&str] = &[
    "union-formula",
    "join-lift",
    "universal-vertex",
    "true-twins",
    "simplicial-vertex",
    "vertex-monotonicity",
    "separator-deletion",
    "near-twins",
];

fn ops_on(g: &Graph, t: &mut Tally) {
    if !g.is_connected() {
        let (ok, why) = outcome(checks::check_union_formula(g));
        t.record("union-formula", ok, || format!("{g:?} {why}"));
    }
    if g.co_components().len() > 1 {
        let (ok, why) = outcome(checks::check_join_lift(g));
        t.record("join-lift", ok, || format!("{g:?} {why}"));
    }
    match check_vertex_ops(g) {
        Ok(report) => {
            for (what, count) in report.checked {
                let id = match what {
                    checks::UNIVERSAL => "universal-vertex",
                    checks::TRUE_TWIN => "true-twins",
                    checks::SIMPLICIAL => "simplicial-vertex",
                    checks::MONOTONE => "vertex-monotonicity",
                    checks::DELETION => "separator-deletion",
                    _ => "near-twins",
                };
                let failures: Vec<String> =
                    report.failures.iter().filter(|(w, _)| *w == what).map(|(_, f)| f.clone()).collect();
                t.add(id, count, &failures);
            }
        }
        Err(e) => t.record("vertex-monotonicity", false, || format!("{g:?} {e}")),
    }
}

/// Statements about graph operations, exhaustively up to `max_n` vertices.
pub fn ops_sweep(max_n: usize) -> Result<Vec<CheckResult>> {
    let mut t = sweep(max_n, ops_on)?;
    for id in OPS {
        t.touch(id);
    }
    Ok(t.rows(Suite::Ops, OPS))
}

fn ramsey_patterns(k: usize, l: usize) -> Result<[Graph; 2]> {
    Ok([checks::p2_plus_independent(k)?, checks::clique_plus_p2(l)?])
}

fn free_of(g: &Graph, patterns: &[Graph]) -> bool {
    patterns.iter().all(|h| !crate::patterns::contains_induced(g, h).unwrap_or(true))
}

fn has(p: Profile4, name: &str) -> bool {
    p.contains(name).expect("catalog name")
}

const BOUNDS: &[&str] =
    &["cograph-bound", "chordal-bound", "2p2-neighborhoods", "p2-2p1-c4-bound", "ramsey-2-2", "ramsey-3-3"];

fn bounds_on(g: &Graph, t: &mut Tally, r22: &[Graph; 2], r33: &[Graph; 2]) {
    let p = profile4(g);
    if !has(p, "P4") {
        let (ok, why) = outcome(checks::check_cograph_bound(g));
        t.record("cograph-bound", ok, || format!("{g:?} {why}"));
    }
    if is_chordal(g) {
        let (ok, why) = outcome(checks::check_chordal_bound(g));
        t.record("chordal-bound", ok, || format!("{g:?} {why}"));
    }
    if !has(p, "2P2") {
        let (ok, why) = outcome(checks::check_2p2_separator_shapes(g));
        t.record("2p2-neighborhoods", ok, || format!("{g:?} {why}"));
    }
    if !has(p, "P2+2P1") && !has(p, "C4") {
        let (ok, why) = outcome(checks::check_p2_2p1_c4_bound(g));
        t.record("p2-2p1-c4-bound", ok, || format!("{g:?} {why}"));
    }
    if free_of(g, r22) {
        let (ok, why) = outcome(checks::check_ramsey_bound(g, 2, 2, 2));
        t.record("ramsey-2-2", ok, || format!("{g:?} {why}"));
    }
    if free_of(g, r33) {
        let (ok, why) = outcome(checks::check_ramsey_bound(g, 3, 3, 6));
        t.record("ramsey-3-3", ok, || format!("{g:?} {why}"));
    }
}

/// Edge probability for `{P2+3P1, K3+P2}`-free rejection sampling; dense
/// draws rarely contain three independent vertices.
pub const RAMSEY_SAMPLE_P: f64 = 0.75;
/// Draw budget per accepted `{P2+3P1, K3+P2}`-free sample.
pub const RAMSEY_SAMPLE_DRAWS: usize = 20_000;

/// Bounds on exhaustive small graphs plus seeded random samples.
pub fn bounds_suite(cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let r22 = ramsey_patterns(2, 2)?;
    let r33 = ramsey_patterns(3, 3)?;
    let mut t = sweep(cfg.max_n, |g, t| bounds_on(g, t, &r22, &r33))?;
    for id in BOUNDS {
        t.touch(id);
    }
    let mut rows = t.rows(Suite::Bounds, BOUNDS);

    let mut rt = Tally::default();
    for i in 0..cfg.random_samples {
        let seed = cfg.seed.wrapping_add(i as u64);
        let n = 1 + (i % 40);
        let g = random_cograph(n, seed)?;
        let (ok, why) = outcome(checks::check_cograph_bound(&g));
        rt.record("random-cograph-bound", ok, || format!("random_cograph({n}, {seed}) {why}"));
        let n = 1 + (i % 25);
        let g = random_chordal(n, seed)?;
        let (ok, why) = outcome(checks::check_chordal_bound(&g));
        rt.record("random-chordal-bound", ok, || format!("random_chordal({n}, {seed}) {why}"));
    }
    let mut rng = rng_from_seed(cfg.seed);
    for _ in 0..(cfg.random_samples / 20).max(1) {
        match sample_free(14, RAMSEY_SAMPLE_P, &r33, RAMSEY_SAMPLE_DRAWS, &mut rng) {
            Ok(g) => {
                let (ok, why) = outcome(checks::check_ramsey_bound(&g, 3, 3, 6));
                rt.record("random-ramsey-3-3", ok, || format!("{g:?} {why}"));
            }
            Err(e) => rt.record("random-ramsey-3-3", false, || e.to_string()),
        }
    }
    rows.extend(rt.rows(Suite::Bounds, &["random-cograph-bound", "random-chordal-bound", "random-ramsey-3-3"]));
    Ok(rows)
}

/// `s(H) <= s(G)` on random graphs and random induced subgraphs.
pub fn induced_monotonicity(samples: usize, max_n: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = rng_from_seed(seed);
    let mut t = Tally::default();
    for i in 0..samples {
        let n = 1 + i % max_n;
        let g = gnp(n, 0.35, &mut rng)?;
        let h = random_induced_subgraph(&g, &mut rng)?;
        let (sg, sh) = (count_minimal_separators(&g), count_minimal_separators(&h));
        t.record("induced-monotonicity", sh <= sg, || format!("{g:?} has {sg}, induced {h:?} has {sh}"));
    }
    t.touch("induced-monotonicity");
    Ok(t.rows(Suite::Ops, &["induced-monotonicity"]).remove(0))
}

const STRUCTURE: &[&str] = &["paw-free-structure", "3p1-c4-structure"];

fn structure_on(g: &Graph, t: &mut Tally) {
    let p = profile4(g);
    if !has(p, "paw") {
        let ok = paw_free_structure(g).and_then(|vs| {
            let comps = g.components();
            for (v, c) in vs.iter().zip(&comps) {
                if let Some(h) = v.synthesize() {
                    if !is_isomorphic(&h, &g.induced_subgraph(c)?)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        });
        let (ok, why) = outcome(ok);
        t.record("paw-free-structure", ok, || format!("{g:?} {why}"));
    }
    if !has(p, "3P1") && !has(p, "C4") {
        let ok = structure_3p1c4(g).and_then(|v| match v.synthesize() {
            Some(h) => is_isomorphic(&h, g),
            None => Ok(is_chordal(g)),
        });
        let (ok, why) = outcome(ok);
        t.record("3p1-c4-structure", ok, || format!("{g:?} {why}"));
    }
}

pub fn structure_suite(cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut t = sweep(cfg.max_n, structure_on)?;
    let table = RamseyTable::new();
    for (k, l) in [(1, 1), (1, 5), (5, 1), (2, 2), (2, 4), (4, 2), (2, 6), (6, 2), (3, 3)] {
        let (ok, why) = outcome(table.certify(k, l));
        t.record("ramsey-table", ok, || format!("R({k},{l}) {why}"));
    }
    t.record("ramsey-3-3-value", verify_ramsey_value_33(), || "a 6-vertex graph avoids K3 and 3P1".into());
    for id in STRUCTURE {
        t.touch(id);
    }
    Ok(t.rows(Suite::Structure, &["paw-free-structure", "3p1-c4-structure", "ramsey-table", "ramsey-3-3-value"]))
}

/// Checks a certificate family: every set is a minimal separator, the sets
/// are pairwise distinct and there are `expected` of them.
pub fn certify_family(g: &Graph, family: &[VertexSet], expected: usize) -> std::result::Result<(), String> {
    if family.len() != expected {
        return Err(format!("{} certificates, expected {expected}", family.len()));
    }
    if let Some(bad) = family.iter().find(|s| !is_minimal_separator(g, s)) {
        return Err(format!("{bad:?} is not a minimal separator"));
    }
    let mut sorted = family.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != family.len() {
        return Err("certificates are not distinct".into());
    }
    Ok(())
}

pub fn certificates_suite(cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut t = Tally::default();
    let mut rec = |id: &'static str, what: String, r: std::result::Result<(), String>| {
        let ok = r.is_ok();
        t.record(id, ok, || format!("{what}: {}", r.err().unwrap_or_default()));
    };
    for (k, l) in [(2, 3), (3, 3), (4, 3), (2, 4)] {
        let g = theta(k, l)?;
        let r = certify_family(&g, &theta_certificates(k, l)?, (l - 1).pow(k as u32));
        rec("theta-certificates", format!("theta({k},{l})"), r);
    }
    for k in 2..=4 {
        let l = 2;
        let g = line_theta(k, l)?;
        let expected = l.pow(k as u32) - 2;
        let mut r = certify_family(&g, &line_theta_certificates(k, l)?, expected);
        if r.is_ok() && count_minimal_separators(&g) < expected {
            r = Err("exact count below the certified bound".into());
        }
        rec("line-theta-certificates", format!("L(theta({k},{l}))"), r);
    }
    for h in 2..=cfg.wall_heights.max(2) {
        let w = wall(h)?;
        let r = certify_family(&w.graph, &wall_certificates(&w)?, 1 << h);
        rec("wall-certificates", format!("W_{h}"), r);
    }
    for h in (2..=cfg.wall_heights.max(2) + 1).step_by(2) {
        let lw = line_wall(h)?;
        let r = certify_family(&lw.graph, &line_wall_certificates(&lw)?, 1 << (h / 2));
        rec("line-wall-certificates", format!("L(W_{h})"), r);
    }
    Ok(t.rows(
        Suite::Certificates,
        &["theta-certificates", "line-theta-certificates", "wall-certificates", "line-wall-certificates"],
    ))
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut rows = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::Ops => {
                rows.extend(ops_sweep(cfg.max_n)?);
                rows.push(induced_monotonicity(cfg.random_samples, 14, cfg.seed)?);
            }
            Suite::Bounds => rows.extend(bounds_suite(cfg)?),
            Suite::Structure => rows.extend(structure_suite(cfg)?),
            Suite::Certificates => rows.extend(certificates_suite(cfg)?),
            Suite::All => unreachable!(),
        }
    }
    Ok(rows)
}
