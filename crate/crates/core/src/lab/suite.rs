//! Regression suite: worked examples and theorem spot checks with known
//! answers. Every verdict in an item is an expectation; the item passes iff
//! all of them are true.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::Characteristic;
use crate::monomial::{Monomial, VarSubset};
use crate::polymatroid::{
    has_nonpure_exchange, has_strong_exchange, is_componentwise_polymatroidal, is_matroidal,
    is_polymatroidal, veronese, ExchangeVerdict, VeroneseParams,
};
use crate::quotients::{find_lq_order, revlex_lq, RevlexConvention};
use crate::resolution::{
    has_linear_relations_with, has_linear_resolution_with, is_componentwise_linear_with,
};

use super::properties::{corpus_properties, is_experimental, PropertyOutcome};
use super::records::{
    conjecture_record, distinct_colons, distinct_localizations, linear_or_unit,
    polymatroidal_or_unit, verify_equivalences,
};
use super::report::{Harness, ItemStatus, LabReport, ReportConfig, ReportItem};
use super::space::IdealSpace;

/// Ideals named in the suite, as `(generators, nvars)`.
pub mod ideals {
    pub const LOCALIZATION: (&str, usize) = ("x1*x2*x3, x2*x3*x4, x3*x5*x6", 6);
    pub const SINGLE_DEGREE_LOCALIZATIONS: (&str, usize) = ("x1^2, x1*x2, x3^2, x2*x3", 3);
    pub const LINEAR_COLONS: (&str, usize) = ("x1*x3^2, x1^2*x3, x1*x2*x3, x2^2*x3", 3);
    pub const LINEAR_LOCALIZATIONS: (&str, usize) = (
        "x1^3, x1^2*x2, x1^2*x3, x2*x3*x4, x1*x2*x3, x1*x3*x4, x1^2*x4",
        4,
    );
    pub const LINEAR_RELATIONS: (&str, usize) = (
        "x1^3, x1^2*x2, x1^2*x3, x2^3, x1*x2^2, x2^2*x3, x3^3, x1*x3^2, x2*x3^2",
        3,
    );
    pub const COMPONENTWISE: (&str, usize) =
        ("x1^2, x2^2*x3, x1*x2*x3, x1*x2^2, x1*x3^3, x2*x3^3", 3);
    pub const NONPURE: (&str, usize) = ("x1*x2, x1*x3^2, x2*x3^2", 3);
    pub const TRANSVERSAL: (&str, usize) = ("x1*x3, x1*x4, x2*x3, x2*x4", 4);
    pub const TRIANGLE: (&str, usize) = ("x1*x2, x1*x3, x2*x3", 3);
}

fn parse(def: (&str, usize)) -> MonomialIdeal {
    MonomialIdeal::parse(def.0, def.1).expect("suite ideals parse")
}

fn mono(s: &str, n: usize) -> Monomial {
    MonomialIdeal::parse(s, n)
        .expect("suite monomials parse")
        .gens()[0]
        .clone()
}

fn ones(one_based: &[usize], n: usize) -> VarSubset {
    VarSubset::from_one_based(one_based, n).expect("suite subsets are in range")
}

type Check = fn(&mut ReportItem, Characteristic, &Limits) -> Result<()>;

struct SuiteEntry {
    label: &'static str,
    ideal: (&'static str, usize),
    experimental: bool,
    check: Check,
}

const ENTRIES: &[SuiteEntry] = &[
    SuiteEntry {
        label: "localization",
        ideal: ideals::LOCALIZATION,
        experimental: false,
        check: localization,
    },
    SuiteEntry {
        label: "single-degree-localizations",
        ideal: ideals::SINGLE_DEGREE_LOCALIZATIONS,
        experimental: false,
        check: single_degree_localizations,
    },
    SuiteEntry {
        label: "linear-colons",
        ideal: ideals::LINEAR_COLONS,
        experimental: false,
        check: linear_colons,
    },
    SuiteEntry {
        label: "linear-localizations",
        ideal: ideals::LINEAR_LOCALIZATIONS,
        experimental: false,
        check: linear_localizations,
    },
    SuiteEntry {
        label: "linear-relations",
        ideal: ideals::LINEAR_RELATIONS,
        experimental: false,
        check: linear_relations,
    },
    SuiteEntry {
        label: "componentwise-powers",
        ideal: ideals::COMPONENTWISE,
        experimental: false,
        check: componentwise_powers,
    },
    SuiteEntry {
        label: "nonpure-exchange",
        ideal: ideals::NONPURE,
        experimental: false,
        check: nonpure_exchange,
    },
    SuiteEntry {
        label: "two-degree-powers",
        ideal: ("x1^2, x1*x2, x2^3", 2),
        experimental: false,
        check: two_degree_powers,
    },
    SuiteEntry {
        label: "two-degree-powers",
        ideal: ("x1*x2, x1*x3, x2*x3, x1^3", 3),
        experimental: false,
        check: two_degree_powers,
    },
    SuiteEntry {
        label: "veronese-from-localizations",
        ideal: ("", 3),
        experimental: false,
        check: veronese_from_localizations,
    },
    SuiteEntry {
        label: "strong-exchange-separation",
        ideal: ideals::TRANSVERSAL,
        experimental: false,
        check: strong_exchange_separation,
    },
    SuiteEntry {
        label: "three-primes",
        ideal: ideals::TRIANGLE,
        experimental: false,
        check: three_primes,
    },
    SuiteEntry {
        label: "corpus-properties",
        ideal: ("", 3),
        experimental: false,
        check: corpus,
    },
    SuiteEntry {
        label: "maximal-product",
        ideal: ("", 3),
        experimental: true,
        check: experimental_maximal_product,
    },
    SuiteEntry {
        label: "colon-by-maximal",
        ideal: ("", 3),
        experimental: true,
        check: experimental_colon_by_maximal,
    },
];

/// Run every suite item.
pub fn regression_suite(ch: Characteristic, limits: &Limits) -> LabReport {
    let started = Instant::now();
    let items: Vec<ReportItem> = ENTRIES
        .par_iter()
        .enumerate()
        .map(|(k, e)| run_entry(k, e, ch, limits))
        .collect();
    let config = ReportConfig {
        harness: Harness::Suite,
        spaces: Vec::new(),
        seed: None,
        char: ch,
        limits: *limits,
    };
    LabReport::new(config, items, Some(started))
}

fn run_entry(index: usize, e: &SuiteEntry, ch: Characteristic, limits: &Limits) -> ReportItem {
    let ideal = if e.ideal.0.is_empty() {
        MonomialIdeal::maximal(e.ideal.1)
    } else {
        parse(e.ideal)
    };
    let mut item = ReportItem::new(index, e.label, &ideal);
    item.experimental = e.experimental;
    match (e.check)(&mut item, ch, limits) {
        Ok(()) => {
            let all = item.verdicts.values().all(|&v| v);
            item.status = match (all, e.experimental) {
                (true, _) => ItemStatus::Ok,
                (false, false) => ItemStatus::Failed,
                (false, true) => ItemStatus::Counterexample,
            };
        }
        Err(err) => {
            item.status = if err.is_budget() {
                ItemStatus::Skipped
            } else {
                ItemStatus::Failed
            };
            item.note = Some(err.to_string());
        }
    }
    item
}

fn localization(it: &mut ReportItem, _: Characteristic, _: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    let l = i.localize(&ones(&[4], 6))?;
    it.verdict(
        "equals-x2x3-x3x5x6",
        l == MonomialIdeal::parse("x2*x3, x3*x5*x6", 6)?,
    );
    it.witness("localization", &l);
    Ok(())
}

fn single_degree_localizations(
    it: &mut ReportItem,
    ch: Characteristic,
    lim: &Limits,
) -> Result<()> {
    let i = it.ideal.clone();
    let p = is_polymatroidal(&i)?;
    it.verdict("not-polymatroidal", !p.holds);
    it.witness("polymatroidal", &p.failure);
    let mut all = true;
    for mask in 0..1u64 << 3 {
        all &= i
            .localize(&VarSubset::from_mask(mask, 3))?
            .is_single_degree()?;
    }
    it.verdict("all-localizations-single-degree", all);
    it.verdict(
        "no-linear-resolution",
        !has_linear_resolution_with(&i, ch, lim)?,
    );
    let eq = verify_equivalences(&i, ch, lim)?;
    it.verdict("all-colon-conditions-false", eq.verdicts() == [false; 5]);
    it.witness("colon-conditions", &eq.witnesses);
    Ok(())
}

fn linear_colons(it: &mut ReportItem, ch: Characteristic, lim: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    it.verdict(
        "linear-resolution",
        has_linear_resolution_with(&i, ch, lim)?,
    );
    let mut all = true;
    for k in 0..3 {
        all &= has_linear_resolution_with(&i.colon(&Monomial::var(3, k))?, ch, lim)?;
    }
    it.verdict("colons-by-variables-linear", all);
    let p = is_polymatroidal(&i)?;
    it.verdict("not-polymatroidal", !p.holds);
    let expected = p.witness().is_some_and(|w| {
        w.u == mono("x1*x3^2", 3)
            && w.v == mono("x2^2*x3", 3)
            && w.i == 0
            && w.verdict == ExchangeVerdict::Violated
    });
    it.verdict("witness-x1x3^2-x2^2x3-x1", expected);
    it.witness("polymatroidal", &p.failure);
    // no claim either way; recorded as data
    it.witness(
        "revlex-decreasing",
        revlex_lq(&i, RevlexConvention::Decreasing)?.is_certified(),
    );
    it.witness(
        "revlex-increasing",
        revlex_lq(&i, RevlexConvention::Increasing)?.is_certified(),
    );
    Ok(())
}

fn linear_localizations(it: &mut ReportItem, ch: Characteristic, lim: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    let mut all = true;
    for k in 1..=4 {
        all &= linear_or_unit(&i.localize(&ones(&[k], 4))?, ch, lim)?;
    }
    it.verdict("single-variable-localizations-linear", all);
    it.verdict("not-polymatroidal", !is_polymatroidal(&i)?.holds);
    let r = conjecture_record(&i, ch, lim)?;
    it.verdict("some-localization-not-linear", !r.localizations_linear);
    it.witness("failing-localization", &r.failing_localization);
    Ok(())
}

fn linear_relations(it: &mut ReportItem, ch: Characteristic, lim: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    it.verdict("linear-relations", has_linear_relations_with(&i, ch, lim)?);
    let mut all = true;
    for k in 1..=3 {
        all &= polymatroidal_or_unit(&i.localize(&ones(&[k], 3))?)?;
    }
    it.verdict("single-variable-localizations-polymatroidal", all);
    let p = is_polymatroidal(&i)?;
    it.verdict("not-polymatroidal", !p.holds);
    it.witness("polymatroidal", &p.failure);
    it.witness(
        "linear-resolution",
        has_linear_resolution_with(&i, ch, lim)?,
    );
    let f2 = Characteristic::new(2)?;
    it.witness(
        "linear-relations-char-2",
        has_linear_relations_with(&i, f2, lim)?,
    );
    Ok(())
}

fn componentwise_powers(it: &mut ReportItem, _: Characteristic, _: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    it.verdict(
        "componentwise-polymatroidal",
        is_componentwise_polymatroidal(&i, 0)?.holds,
    );
    let sq = i.power(2)?;
    let c = is_componentwise_polymatroidal(&sq, 0)?;
    it.verdict(
        "square-fails-in-degree-6",
        !c.holds && c.failing_degree == Some(6),
    );
    let l = sq.component(6)?.localize(&ones(&[3], 3))?;
    let expected = MonomialIdeal::parse("x1*x2^3, x2^4, x1^2*x2, x1^3", 3)?;
    it.verdict("localized-component-matches", l == expected);
    it.verdict("localized-component-mixed-degree", !l.is_single_degree()?);
    it.witness("localized-component", &l);
    Ok(())
}

fn nonpure_exchange(it: &mut ReportItem, ch: Characteristic, lim: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    it.verdict("nonpure-exchange", has_nonpure_exchange(&i)?.holds);
    let c = is_componentwise_polymatroidal(&i, 0)?;
    it.verdict(
        "not-componentwise-polymatroidal-at-3",
        !c.holds && c.failing_degree == Some(3),
    );
    let cert = find_lq_order(&MonomialIdeal::zero(3), i.gens(), lim)?;
    it.verdict(
        "linear-quotients",
        cert.as_ref().is_some_and(|c| c.verify()),
    );
    it.witness("certificate", &cert);
    let mut all = true;
    let mut failing = None;
    for (u, c) in distinct_colons(&i)? {
        if !is_componentwise_linear_with(&c, ch, 0, lim)?.holds {
            all = false;
            failing.get_or_insert(u);
        }
    }
    it.verdict("colons-componentwise-linear", all);
    it.witness("failing-colon", &failing);
    Ok(())
}

fn two_degree_powers(it: &mut ReportItem, _: Characteristic, _: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    it.verdict(
        "componentwise-polymatroidal",
        is_componentwise_polymatroidal(&i, 0)?.holds,
    );
    it.verdict("two-degrees", i.degrees().len() == 2);
    for k in 2..=3u32 {
        let c = is_componentwise_polymatroidal(&i.power(k)?, 0)?;
        it.verdict(&format!("power-{k}-componentwise-polymatroidal"), c.holds);
    }
    Ok(())
}

fn veronese_from_localizations(
    it: &mut ReportItem,
    ch: Characteristic,
    lim: &Limits,
) -> Result<()> {
    for (d, caps) in [
        (3u32, vec![2u32, 1, 2]),
        (4, vec![2, 2, 1, 1]),
        (3, vec![1, 1, 1, 1]),
    ] {
        let p = VeroneseParams::new(d, caps.clone())?;
        let i = veronese(&p);
        let mut hyp = has_linear_resolution_with(&i, ch, lim)?;
        for (k, &a) in caps.iter().enumerate() {
            let mut rest = caps.clone();
            rest[k] = 0;
            let local = veronese(&VeroneseParams::new(d - a, rest)?);
            hyp &= i.localize(&[k].into_iter().collect())? == local;
        }
        it.verdict(&format!("hypothesis-{p}"), hyp);
        let detected = crate::polymatroid::detect_veronese(&i)?;
        it.verdict(
            &format!("conclusion-{p}"),
            detected.map(|q| q.normalized()) == Some(p.normalized()),
        );
    }
    Ok(())
}

fn strong_exchange_separation(it: &mut ReportItem, _: Characteristic, _: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    it.verdict("polymatroidal", is_polymatroidal(&i)?.holds);
    let s = has_strong_exchange(&i)?;
    it.verdict("no-strong-exchange", !s.holds);
    it.witness("strong-exchange", &s.failure);
    Ok(())
}

fn three_primes(it: &mut ReportItem, ch: Characteristic, lim: &Limits) -> Result<()> {
    let i = it.ideal.clone();
    let ass = crate::primes::associated_primes(&i, lim)?;
    let sets = ass.sets();
    it.verdict(
        "three-primes-no-embedded",
        sets.len() == 3 && !ass.has_embedded,
    );
    let full = VarSubset::full(3);
    let pairwise = sets
        .iter()
        .enumerate()
        .all(|(k, p)| sets[k + 1..].iter().all(|q| p.union(q) == full));
    it.verdict("pairwise-unions-full", pairwise);
    let common = (0..3)
        .filter(|v| sets.iter().all(|p| p.contains(*v)))
        .count();
    it.verdict("no-common-variable", common == 0);
    let mut all = true;
    for (_, l) in distinct_localizations(&i)? {
        all &= has_linear_resolution_with(&l, ch, lim)?;
    }
    it.verdict("localizations-linear", all);
    it.verdict("matroidal", is_matroidal(&i)?.holds);
    it.witness("primes", &ass);
    Ok(())
}

/// Small corpus for the property and experimental items.
fn corpus_ideals(lim: &Limits) -> Result<Vec<MonomialIdeal>> {
    let mut out = IdealSpace::exhaustive(2, 3, 9).ideals(lim)?;
    out.extend(IdealSpace::exhaustive(3, 2, 4).ideals(lim)?);
    Ok(out)
}

fn tally(
    it: &mut ReportItem,
    ch: Characteristic,
    lim: &Limits,
    keep: impl Fn(&str) -> bool + Sync,
) -> Result<()> {
    let ideals = corpus_ideals(lim)?;
    let results: Vec<Result<BTreeMap<&'static str, PropertyOutcome>>> = ideals
        .par_iter()
        .map(|i| corpus_properties(i, ch, lim))
        .collect();
    let mut holds: BTreeMap<&str, usize> = BTreeMap::new();
    let mut fails: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for (i, r) in ideals.iter().zip(results) {
        for (name, outcome) in r? {
            if !keep(name) {
                continue;
            }
            match outcome {
                PropertyOutcome::Holds => *holds.entry(name).or_insert(0) += 1,
                PropertyOutcome::Fails => fails.entry(name).or_default().push(i.to_string()),
                PropertyOutcome::Vacuous => {
                    holds.entry(name).or_insert(0);
                }
            }
        }
    }
    for name in holds.keys() {
        it.verdict(name, !fails.contains_key(name));
    }
    it.witness("corpus-size", ideals.len());
    it.witness("non-vacuous", &holds);
    it.witness("failures", &fails);
    Ok(())
}

fn corpus(it: &mut ReportItem, ch: Characteristic, lim: &Limits) -> Result<()> {
    tally(it, ch, lim, |n| !is_experimental(n))
}

fn experimental_maximal_product(
    it: &mut ReportItem,
    ch: Characteristic,
    lim: &Limits,
) -> Result<()> {
    tally(it, ch, lim, |n| n == "experimental-maximal-product")
}

fn experimental_colon_by_maximal(
    it: &mut ReportItem,
    ch: Characteristic,
    lim: &Limits,
) -> Result<()> {
    tally(it, ch, lim, |n| n == "experimental-colon-by-maximal")
}
