//! Lab reports: per-ideal items, summary, configuration echo.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::Characteristic;

use super::properties::{corpus_properties, is_experimental, PropertyOutcome};
use super::records::{conjecture_record, verify_equivalences, verify_squarefree, Disagreement};
use super::space::IdealSpace;

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ItemStatus {
    Ok,
    /// A regression-suite expectation did not hold.
    Failed,
    /// A proven statement failed on this ideal: a bug.
    Violation,
    /// Evidence against a conjectural statement.
    Counterexample,
    /// A resource budget was exceeded; no verdict.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportItem {
    pub index: usize,
    pub label: String,
    pub ideal: MonomialIdeal,
    pub nvars: usize,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub experimental: bool,
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Value>,
    pub status: ItemStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportItem {
    pub fn new(index: usize, label: impl Into<String>, ideal: &MonomialIdeal) -> Self {
        ReportItem {
            index,
            label: label.into(),
            ideal: ideal.clone(),
            nvars: ideal.nvars(),
            experimental: false,
            verdicts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            status: ItemStatus::Ok,
            note: None,
        }
    }

    pub fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.to_string(), value);
    }

    pub fn witness(&mut self, name: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("witness data serializes");
        if !v.is_null() {
            self.witnesses.insert(name.to_string(), v);
        }
    }

    fn with_error(mut self, e: Error) -> Self {
        self.status = if e.is_budget() {
            ItemStatus::Skipped
        } else {
            ItemStatus::Failed
        };
        self.note = Some(e.to_string());
        self
    }
}

/// Which harness produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Harness {
    Equivalences,
    Squarefree { kmax: u32 },
    Conjecture,
    Properties,
    Suite,
}

impl Harness {
    pub fn name(self) -> &'static str {
        match self {
            Harness::Equivalences => "equivalences",
            Harness::Squarefree { .. } => "squarefree",
            Harness::Conjecture => "conjecture",
            Harness::Properties => "properties",
            Harness::Suite => "suite",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportConfig {
    pub harness: Harness,
    pub spaces: Vec<IdealSpace>,
    pub seed: Option<u64>,
    pub char: Characteristic,
    pub limits: Limits,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub counts: BTreeMap<String, usize>,
    pub counterexamples: Vec<usize>,
    pub violations: Vec<usize>,
    pub failed: Vec<usize>,
    pub skipped: Vec<usize>,
}

impl Summary {
    pub fn of(items: &[ReportItem]) -> Self {
        let mut s = Summary {
            counts: BTreeMap::new(),
            counterexamples: Vec::new(),
            violations: Vec::new(),
            failed: Vec::new(),
            skipped: Vec::new(),
        };
        s.counts.insert("items".into(), items.len());
        for it in items {
            let key = serde_json::to_value(it.status).unwrap();
            *s.counts
                .entry(key.as_str().unwrap().to_string())
                .or_insert(0) += 1;
            match it.status {
                ItemStatus::Ok => {}
                ItemStatus::Failed => s.failed.push(it.index),
                ItemStatus::Violation => s.violations.push(it.index),
                ItemStatus::Counterexample => s.counterexamples.push(it.index),
                ItemStatus::Skipped => s.skipped.push(it.index),
            }
            for (k, &v) in &it.verdicts {
                if v {
                    *s.counts.entry(format!("{k}:true")).or_insert(0) += 1;
                }
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stats {
    pub elapsed_ms: u64,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabReport {
    pub config: ReportConfig,
    pub items: Vec<ReportItem>,
    pub summary: Summary,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<Stats>,
}

impl LabReport {
    pub fn new(config: ReportConfig, items: Vec<ReportItem>, started: Option<Instant>) -> Self {
        let summary = Summary::of(&items);
        LabReport {
            config,
            items,
            summary,
            version: REPORT_VERSION.to_string(),
            stats: started.map(|t| Stats {
                elapsed_ms: t.elapsed().as_millis() as u64,
                threads: rayon::current_num_threads(),
            }),
        }
    }

    /// No failed expectations and no violated theorems. Counterexamples to
    /// conjectural statements and skipped items do not count against it.
    pub fn passed(&self) -> bool {
        self.summary.failed.is_empty() && self.summary.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON without the timing fields; identical inputs give identical
    /// strings.
    pub fn deterministic_json(&self) -> String {
        let mut r = self.clone();
        r.stats = None;
        r.to_json()
    }
}

/// Evaluate one ideal under `harness` (any harness except the suite).
pub fn evaluate(
    harness: Harness,
    index: usize,
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> ReportItem {
    let item = ReportItem::new(index, harness.name(), ideal);
    let result = match harness {
        Harness::Equivalences => equivalence_item(item.clone(), ideal, ch, limits),
        Harness::Squarefree { kmax } => squarefree_item(item.clone(), ideal, kmax, ch, limits),
        Harness::Conjecture => conjecture_item(item.clone(), ideal, ch, limits),
        Harness::Properties => properties_item(item.clone(), ideal, ch, limits),
        Harness::Suite => Err(Error::Precondition("the suite has fixed items".into())),
    };
    result.unwrap_or_else(|e| item.with_error(e))
}

fn equivalence_item(
    mut item: ReportItem,
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<ReportItem> {
    let r = verify_equivalences(ideal, ch, limits)?;
    item.label = "equivalences".into();
    item.verdict("polymatroidal", r.polymatroidal);
    item.verdict("colons-polymatroidal", r.colons_polymatroidal);
    item.verdict("colons-revlex-linear-quotients", r.colons_revlex_lq);
    item.verdict("colons-linear-resolution", r.colons_linear);
    item.verdict("colons-single-degree", r.colons_single_degree);
    item.witness("polymatroidal", &r.witnesses.polymatroidal);
    item.witness("colons-polymatroidal", &r.witnesses.colons_polymatroidal);
    item.witness(
        "colons-revlex-linear-quotients",
        &r.witnesses.colons_revlex_lq,
    );
    item.witness("colons-linear-resolution", &r.witnesses.colons_linear);
    item.witness("colons-single-degree", &r.witnesses.colons_single_degree);
    item.witness("convention", r.convention);
    item.witness("colons-checked", r.colons_checked);
    if r.convention_sensitive {
        item.note = Some(format!(
            "revlex condition holds only with the {:?} convention",
            r.convention
        ));
    }
    item.status = if r.is_violation() {
        ItemStatus::Violation
    } else {
        ItemStatus::Ok
    };
    Ok(item)
}

fn squarefree_item(
    mut item: ReportItem,
    ideal: &MonomialIdeal,
    kmax: u32,
    ch: Characteristic,
    limits: &Limits,
) -> Result<ReportItem> {
    let r = verify_squarefree(ideal, kmax, ch, limits)?;
    item.label = "squarefree".into();
    let w = &r.witnesses;
    item.verdict("matroidal", r.matroidal);
    item.witness("matroidal", &w.matroidal);
    for (name, v, wit) in [
        (
            "localizations-matroidal",
            r.localizations_matroidal,
            &w.localizations_matroidal,
        ),
        (
            "localizations-revlex-linear-quotients",
            r.localizations_revlex_lq,
            &w.localizations_revlex_lq,
        ),
        (
            "localizations-linear-resolution",
            r.localizations_linear,
            &w.localizations_linear,
        ),
        (
            "localizations-single-degree",
            r.localizations_single_degree,
            &w.localizations_single_degree,
        ),
        (
            "powers-all-linear",
            r.powers_all_linear,
            &w.powers_all_linear,
        ),
        (
            "powers-some-linear",
            r.powers_some_linear,
            &w.powers_some_linear,
        ),
        (
            "powers-some-single-degree",
            r.powers_some_single_degree,
            &w.powers_some_single_degree,
        ),
        (
            "powers-all-single-degree",
            r.powers_all_single_degree,
            &w.powers_all_single_degree,
        ),
    ] {
        item.verdict(name, v);
        item.witness(name, wit);
    }
    item.witness("convention", r.convention);
    if r.convention_sensitive {
        item.note = Some(format!(
            "revlex condition holds only with the {:?} convention",
            r.convention
        ));
    }
    item.status = if r.is_violation() {
        ItemStatus::Violation
    } else {
        ItemStatus::Ok
    };
    Ok(item)
}

fn conjecture_item(
    mut item: ReportItem,
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<ReportItem> {
    let r = conjecture_record(ideal, ch, limits)?;
    item.label = "conjecture".into();
    item.verdict("polymatroidal", r.polymatroidal);
    item.verdict("localizations-linear-resolution", r.localizations_linear);
    item.witness("polymatroidal", &r.exchange_failure);
    item.witness("localizations-linear-resolution", &r.failing_localization);
    item.witness("localizations-checked", r.localizations_checked);
    item.witness("disagreement", r.disagreement);
    item.status = match r.disagreement {
        None => ItemStatus::Ok,
        Some(Disagreement::Forward) => ItemStatus::Violation,
        Some(Disagreement::Reverse) => ItemStatus::Counterexample,
    };
    Ok(item)
}

fn properties_item(
    mut item: ReportItem,
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<ReportItem> {
    let props = corpus_properties(ideal, ch, limits)?;
    item.label = "properties".into();
    let mut status = ItemStatus::Ok;
    let mut held = Vec::new();
    for (name, outcome) in &props {
        item.verdict(name, *outcome != PropertyOutcome::Fails);
        if *outcome == PropertyOutcome::Holds {
            held.push(*name);
        }
        if *outcome == PropertyOutcome::Fails {
            if is_experimental(name) {
                if status == ItemStatus::Ok {
                    status = ItemStatus::Counterexample;
                }
            } else {
                status = ItemStatus::Violation;
            }
        }
    }
    item.witness("non-vacuous", held);
    item.status = status;
    Ok(item)
}

/// Run `harness` over explicit ideals, in parallel, merged by index.
pub fn run_on_ideals(
    harness: Harness,
    ideals: &[MonomialIdeal],
    spaces: Vec<IdealSpace>,
    ch: Characteristic,
    limits: &Limits,
) -> LabReport {
    let started = Instant::now();
    let items: Vec<ReportItem> = ideals
        .par_iter()
        .enumerate()
        .map(|(k, i)| evaluate(harness, k, i, ch, limits))
        .collect();
    let seed = spaces
        .iter()
        .find(|s| matches!(s.mode, super::SpaceMode::Sampled { .. }))
        .map(|s| s.seed);
    let config = ReportConfig {
        harness,
        spaces,
        seed,
        char: ch,
        limits: *limits,
    };
    LabReport::new(config, items, Some(started))
}

/// Run `harness` over the ideals of `spaces`, in order.
pub fn run_harness(
    harness: Harness,
    spaces: &[IdealSpace],
    ch: Characteristic,
    limits: &Limits,
) -> Result<LabReport> {
    let mut ideals = Vec::new();
    for s in spaces {
        ideals.extend(s.ideals(limits)?);
    }
    Ok(run_on_ideals(harness, &ideals, spaces.to_vec(), ch, limits))
}

/// Compare "polymatroidal" with "all localizations have a linear resolution"
/// on every ideal of `space`.
pub fn scan_conjecture(
    space: &IdealSpace,
    ch: Characteristic,
    limits: &Limits,
) -> Result<LabReport> {
    run_harness(Harness::Conjecture, std::slice::from_ref(space), ch, limits)
}

/// Recompute every item of `report` from its embedded ideal and
/// configuration, returning the indices whose verdicts or status differ.
pub fn reverify(report: &LabReport) -> Vec<usize> {
    let ch = report.config.char;
    let limits = &report.config.limits;
    let fresh: Vec<ReportItem> = match report.config.harness {
        Harness::Suite => super::suite::regression_suite(ch, limits).items,
        h => report
            .items
            .par_iter()
            .map(|it| evaluate(h, it.index, &it.ideal, ch, limits))
            .collect(),
    };
    report
        .items
        .iter()
        .zip(fresh.iter().map(Some).chain(std::iter::repeat(None)))
        .filter(|(old, new)| match new {
            Some(new) => {
                old.verdicts != new.verdicts || old.status != new.status || old.ideal != new.ideal
            }
            None => true,
        })
        .map(|(old, _)| old.index)
        .collect()
}

/// Compact one-line description of an item for text output.
pub fn describe(item: &ReportItem) -> String {
    let failing: Vec<&str> = item
        .verdicts
        .iter()
        .filter(|(_, &v)| !v)
        .map(|(k, _)| k.as_str())
        .collect();
    let status = json!(item.status);
    let mut s = format!(
        "[{}] {:>4} {}{} ({})",
        status.as_str().unwrap_or("?"),
        item.index,
        if item.experimental {
            "EXPERIMENTAL "
        } else {
            ""
        },
        item.label,
        item.ideal
    );
    if !failing.is_empty() {
        s.push_str(&format!(" false: {}", failing.join(", ")));
    }
    if let Some(n) = &item.note {
        s.push_str(&format!(" -- {n}"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Characteristic = Characteristic::ZERO;

    #[test]
    fn scan_is_deterministic_and_reverifies() {
        let space = IdealSpace::sampled(3, 3, 4, 40, 11);
        let lim = Limits::default();
        let a = scan_conjecture(&space, Q, &lim).unwrap();
        let b = scan_conjecture(&space, Q, &lim).unwrap();
        assert_eq!(a.deterministic_json(), b.deterministic_json());
        assert!(a.stats.is_some());
        assert!(reverify(&a).is_empty());
        assert!(a.passed());
        assert!(a.summary.counterexamples.is_empty());
        assert_eq!(a.config.seed, Some(11));
    }

    #[test]
    fn report_json_shape() {
        let space = IdealSpace::exhaustive(2, 2, 3);
        let r = run_harness(Harness::Equivalences, &[space], Q, &Limits::default()).unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["config", "items", "summary", "version"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["config"]["char"], json!(0));
        assert_eq!(v["config"]["harness"]["name"], json!("equivalences"));
        let item = &v["items"][0];
        for key in ["ideal", "nvars", "verdicts", "witnesses", "status"] {
            assert!(item.get(key).is_some(), "{key}");
        }
        for key in ["counts", "counterexamples", "skipped"] {
            assert!(v["summary"].get(key).is_some(), "{key}");
        }
        assert_eq!(r.summary.counts["items"], 12);
    }

    #[test]
    fn tampered_items_are_caught() {
        let space = IdealSpace::exhaustive(2, 2, 2);
        let mut r = run_harness(Harness::Conjecture, &[space], Q, &Limits::default()).unwrap();
        let flip = !r.items[5].verdicts["polymatroidal"];
        r.items[5].verdicts.insert("polymatroidal".into(), flip);
        assert_eq!(reverify(&r), vec![5]);
    }
}
