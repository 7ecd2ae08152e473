//! Tame / not-tame classification of `F`-free graph classes for families of
//! graphs on at most four vertices.
//!
//! Families on small graphs are handled as bitmasks over
//! [`small_classes`](crate::catalog::small_classes); the `⊴` relation then
//! reduces to a lookup in the induced-containment matrix of the 18 classes.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::catalog::{catalog, small_classes, SMALL_CLASS_COUNT};
use crate::patterns::{contains_induced, GraphFamily};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Tame,
    NotTame,
    Open,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Tame => "Tame",
            Verdict::NotTame => "NotTame",
            Verdict::Open => "Open",
        })
    }
}

/// Clause of the tame list (`i`..`vi`) or of the non-tame list (`i`..`iii`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub verdict: Verdict,
    pub clause: u8,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const ROMAN: [&str; 6] = ["i", "ii", "iii", "iv", "v", "vi"];
        f.write_str(ROMAN[self.clause as usize - 1])
    }
}

/// A witness family together with its clause.
#[derive(Clone, Debug)]
pub struct Witness {
    pub family: GraphFamily,
    pub rule: Rule,
    mask: u32,
}

impl Witness {
    pub fn mask(&self) -> u32 {
        self.mask
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub verdict: Verdict,
    pub witness: Option<GraphFamily>,
    pub rule: Option<Rule>,
    /// The antichain the input reduced to.
    pub canonical: GraphFamily,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.rule, &self.witness) {
            (Some(rule), Some(w)) => write!(f, "{} (rule {rule}, witness {w})", self.verdict),
            _ => write!(f, "{}", self.verdict),
        }
    }
}

fn class_index(name: &str) -> usize {
    small_classes().iter().position(|e| e.name == name).expect("small class name")
}

fn mask_of(names: &[&str]) -> u32 {
    names.iter().fold(0, |m, n| m | 1 << class_index(n))
}

/// `down()[h]`: classes that are induced subgraphs of class `h`, itself included.
fn down() -> &'static [u32; SMALL_CLASS_COUNT] {
    static DOWN: OnceLock<[u32; SMALL_CLASS_COUNT]> = OnceLock::new();
    DOWN.get_or_init(|| {
        let cs = small_classes();
        let mut out = [0u32; SMALL_CLASS_COUNT];
        for (h, big) in cs.iter().enumerate() {
            for (f, small) in cs.iter().enumerate() {
                if contains_induced(&big.graph, &small.graph).expect("small patterns") {
                    out[h] |= 1 << f;
                }
            }
        }
        out
    })
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..SMALL_CLASS_COUNT).filter(move |&i| mask >> i & 1 == 1)
}

/// `F ⊴ F'` on class masks.
pub fn dominates_mask(f: u32, fp: u32) -> bool {
    let d = down();
    members(fp).all(|h| d[h] & f != 0)
}

/// Removes every member that contains another member.
pub fn canonical_mask(mask: u32) -> u32 {
    let d = down();
    members(mask).filter(|&h| d[h] & mask & !(1 << h) == 0).fold(0, |m, h| m | 1 << h)
}

pub fn is_antichain_mask(mask: u32) -> bool {
    canonical_mask(mask) == mask
}

fn witness_list(spec: &[(u8, &[&str])], verdict: Verdict) -> Vec<Witness> {
    spec.iter()
        .map(|&(clause, names)| Witness {
            family: GraphFamily::from_names(names).expect("witness names are catalogued"),
            rule: Rule { verdict, clause },
            mask: mask_of(names),
        })
        .collect()
}

fn tame_witnesses() -> &'static [Witness] {
    static TAME: OnceLock<Vec<Witness>> = OnceLock::new();
    TAME.get_or_init(|| {
        let mut spec: Vec<(u8, Vec<&str>)> = vec![(1, vec!["P4"]), (1, vec!["2P2"])];
        let four = ["4P1", "P2+2P1", "P3+P1", "claw"];
        spec.extend(four.iter().map(|&f| (2, vec![f, "paw"])));
        spec.extend(four.iter().map(|&f| (3, vec![f, "K3+P1"])));
        spec.extend(four[..3].iter().map(|&f| (4, vec![f, "K4"])));
        spec.extend(["P2+2P1", "P3+P1"].iter().map(|&f| (5, vec![f, "C4"])));
        spec.push((6, vec!["4P1", "C4", "diamond"]));
        let spec: Vec<(u8, &[&str])> = spec.iter().map(|(c, v)| (*c, v.as_slice())).collect();
        witness_list(&spec, Verdict::Tame)
    })
}

fn nontame_witnesses() -> &'static [Witness] {
    static NONTAME: OnceLock<Vec<Witness>> = OnceLock::new();
    NONTAME.get_or_init(|| {
        witness_list(
            &[(1, &["3P1", "diamond"]), (2, &["claw", "K4", "C4", "diamond"]), (3, &["K3", "C4"])],
            Verdict::NotTame,
        )
    })
}

/// The 16 maximal tame families, in clause order.
pub fn tame_witness_families() -> Vec<Witness> {
    tame_witnesses().to_vec()
}

/// The 3 minimal non-tame families, in clause order.
pub fn nontame_witness_families() -> Vec<Witness> {
    nontame_witnesses().to_vec()
}

/// Canonical masks of the two unresolved classes.
pub fn open_masks() -> [u32; 2] {
    [mask_of(&["4P1", "C4"]), mask_of(&["4P1", "claw", "C4"])]
}

/// Classification of a small-class mask: verdict plus the index of the
/// witness in its list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaskVerdict {
    pub verdict: Verdict,
    pub witness: Option<usize>,
}

pub fn classify_mask(mask: u32) -> MaskVerdict {
    let canon = canonical_mask(mask);
    if open_masks().contains(&canon) {
        return MaskVerdict { verdict: Verdict::Open, witness: None };
    }
    if let Some(i) = tame_witnesses().iter().position(|w| dominates_mask(canon, w.mask)) {
        return MaskVerdict { verdict: Verdict::Tame, witness: Some(i) };
    }
    let i = nontame_witnesses().iter().position(|w| dominates_mask(w.mask, canon));
    MaskVerdict { verdict: Verdict::NotTame, witness: i }
}

pub fn classify(family: &GraphFamily) -> Result<Classification> {
    let order = family.max_order();
    if order > 4 {
        return Err(Error::OutOfScope(order));
    }
    let mask = family
        .small_mask()
        .ok_or_else(|| Error::Consistency("family member missing from the small-graph table".into()))?;
    let mv = classify_mask(mask);
    let canonical = crate::patterns::canonicalize_family(&GraphFamily::from_small_mask(canonical_mask(mask)))?;
    let chosen = match mv.verdict {
        Verdict::Tame => mv.witness.map(|i| &tame_witnesses()[i]),
        Verdict::NotTame => match mv.witness {
            Some(i) => Some(&nontame_witnesses()[i]),
            None => {
                return Err(Error::Consistency(format!(
                    "{canonical} matches no tame witness and contains no non-tame witness"
                )))
            }
        },
        Verdict::Open => None,
    };
    Ok(Classification {
        verdict: mv.verdict,
        witness: chosen.map(|w| w.family.clone()),
        rule: chosen.map(|w| w.rule),
        canonical,
    })
}

/// Every antichain of the induced-subgraph order on the 18 small classes,
/// the empty family included, in increasing mask order.
pub fn all_antichains() -> Vec<u32> {
    let d = down();
    // comparable[i]: classes above or below i
    let comparable: Vec<u32> = (0..SMALL_CLASS_COUNT)
        .map(|i| d[i] | (0..SMALL_CLASS_COUNT).filter(|&h| d[h] >> i & 1 == 1).fold(0, |m, h| m | 1 << h))
        .collect();
    fn grow(from: usize, current: u32, blocked: u32, comparable: &[u32], out: &mut Vec<u32>) {
        out.push(current);
        for i in from..comparable.len() {
            if blocked >> i & 1 == 0 {
                grow(i + 1, current | 1 << i, blocked | comparable[i], comparable, out);
            }
        }
    }
    let mut out = Vec::new();
    grow(0, 0, 0, &comparable, &mut out);
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRow {
    pub family: String,
    pub verdict: Verdict,
    pub witness: String,
    pub rule: String,
}

#[derive(Clone, Debug, Default)]
pub struct SurveyReport {
    pub total: usize,
    pub tame: usize,
    pub not_tame: usize,
    pub open: usize,
    pub open_families: Vec<String>,
    /// Families that matched both a tame and a non-tame witness.
    pub both: Vec<String>,
    /// Families outside the open pair that matched neither predicate.
    pub neither: Vec<String>,
    pub violations: Vec<String>,
    pub rows: Vec<SurveyRow>,
}

impl SurveyReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

fn mask_name(mask: u32) -> String {
    let names: Vec<_> = members(mask).map(|i| catalog()[i].name).collect();
    format!("{{{}}}", names.join(","))
}

/// Classifies every antichain and checks mutual exclusion, totality and the
/// location of the open cases.
pub fn survey_all_families() -> SurveyReport {
    let tame = tame_witnesses();
    let nontame = nontame_witnesses();
    let opens = open_masks();
    let rows: Vec<(u32, bool, bool, MaskVerdict)> = all_antichains()
        .into_par_iter()
        .map(|m| {
            let t = tame.iter().any(|w| dominates_mask(m, w.mask));
            let nt = nontame.iter().any(|w| dominates_mask(w.mask, m));
            (m, t, nt, classify_mask(m))
        })
        .collect();
    let mut report = SurveyReport { total: rows.len(), ..Default::default() };
    for &(m, t, nt, mv) in &rows {
        let name = mask_name(m);
        match mv.verdict {
            Verdict::Tame => report.tame += 1,
            Verdict::NotTame => report.not_tame += 1,
            Verdict::Open => {
                report.open += 1;
                report.open_families.push(name.clone());
            }
        }
        if t && nt {
            report.both.push(name.clone());
        }
        if !t && !nt && !opens.contains(&m) {
            report.neither.push(name.clone());
        }
        let (witness, rule) = match (mv.verdict, mv.witness) {
            (Verdict::Tame, Some(i)) => (tame[i].family.to_string(), tame[i].rule.to_string()),
            (Verdict::NotTame, Some(i)) => (nontame[i].family.to_string(), nontame[i].rule.to_string()),
            _ => (String::new(), String::new()),
        };
        report.rows.push(SurveyRow { family: name, verdict: mv.verdict, witness, rule });
    }
    for f in &report.both {
        report.violations.push(format!("{f} matches both a tame and a non-tame witness"));
    }
    for f in &report.neither {
        report.violations.push(format!("{f} matches neither a tame nor a non-tame witness"));
    }
    if report.open != 2 {
        report.violations.push(format!("expected 2 open families, found {}: {:?}", report.open, report.open_families));
    }
    for w in tame {
        if classify_mask(w.mask).verdict != Verdict::Tame {
            report.violations.push(format!("tame witness {} does not classify Tame", w.family));
        }
    }
    for w in nontame {
        if classify_mask(w.mask).verdict != Verdict::NotTame {
            report.violations.push(format!("non-tame witness {} does not classify NotTame", w.family));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify_str(s: &str) -> Classification {
        classify(&GraphFamily::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn witness_lists() {
        let tame = tame_witness_families();
        assert_eq!(tame.len(), 16);
        let has = |names: &[&str]| tame.iter().any(|w| w.mask == mask_of(names));
        assert!(has(&["claw", "paw"]));
        assert!(!has(&["claw", "K4"]));
        let nontame = nontame_witness_families();
        assert_eq!(nontame.len(), 3);
        assert!(nontame.iter().any(|w| w.mask == mask_of(&["K3", "C4"])));
        assert!(nontame.iter().chain(&tame).all(|w| is_antichain_mask(w.mask)));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_str("P4").to_string(), "Tame (rule i, witness {P4})");
        assert_eq!(classify_str("K3,C4").to_string(), "NotTame (rule iii, witness {K3,C4})");
        assert_eq!(classify_str("4P1,C4").to_string(), "Open");
        assert_eq!(classify_str("4P1,claw,C4").verdict, Verdict::Open);
        assert_eq!(classify_str("").verdict, Verdict::NotTame);
        let c = classify_str("4P1,claw,C4,diamond");
        assert_eq!(c.verdict, Verdict::Tame);
        assert_eq!(c.rule.unwrap().clause, 6);
        assert_eq!(classify_str("3P1").to_string(), "NotTame (rule i, witness {3P1,diamond})");
    }

    #[test]
    fn open_detection_uses_canonical_form() {
        assert_eq!(classify_str("cok4, C4, 4P1").verdict, Verdict::Open);
        assert_eq!(classify_str("4P1,C4").verdict, classify_str("C4,4P1").verdict);
        let big = GraphFamily::new(vec![crate::graph::Graph::cycle(5).unwrap()]).unwrap();
        assert!(matches!(classify(&big), Err(Error::OutOfScope(5))));
    }

    #[test]
    fn antichains_are_antichains() {
        let all = all_antichains();
        assert!(all.contains(&0));
        assert!(all.iter().all(|&m| is_antichain_mask(m)));
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn survey_is_consistent() {
        let r = survey_all_families();
        assert!(r.is_consistent(), "{:?}", r.violations);
        assert_eq!(r.open, 2);
        assert_eq!(r.tame + r.not_tame + r.open, r.total);
    }
}
