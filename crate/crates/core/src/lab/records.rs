//! Per-ideal verdict records for the characterization harnesses.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::Characteristic;
use crate::monomial::{Monomial, VarSubset};
use crate::polymatroid::{is_matroidal, is_polymatroidal, ExchangeFailure};
use crate::quotients::{revlex_lq, RevlexConvention};
use crate::resolution::has_linear_resolution_with;

/// Distinct proper colons `I : u` over the divisors `u` of `lcm(G(I))`, each
/// with the first `u` (in canonical order) producing it. Unit colons are
/// dropped: every condition holds for them vacuously.
pub fn distinct_colons(ideal: &MonomialIdeal) -> Result<Vec<(Monomial, MonomialIdeal)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in ideal.capped_divisors() {
        let c = ideal.colon(&u)?;
        if !c.is_unit() && seen.insert(c.clone()) {
            out.push((u, c));
        }
    }
    Ok(out)
}

/// Distinct proper localizations `I(P_C)` over the subsets `C` of variables
/// set to 1, each with the first `C` (by bitmask) producing it.
pub fn distinct_localizations(ideal: &MonomialIdeal) -> Result<Vec<(VarSubset, MonomialIdeal)>> {
    let n = ideal.nvars();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << n {
        let c = VarSubset::from_mask(mask, n);
        let l = ideal.localize(&c)?;
        if !l.is_unit() && seen.insert(l.clone()) {
            out.push((c, l));
        }
    }
    Ok(out)
}

/// Linear resolution, with the unit ideal (resolved by `S` itself) counted as
/// linear.
pub(crate) fn linear_or_unit(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<bool> {
    if ideal.is_unit() {
        return Ok(true);
    }
    has_linear_resolution_with(ideal, ch, limits)
}

/// Polymatroidal, with the unit ideal counted as polymatroidal.
pub(crate) fn polymatroidal_or_unit(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_unit() {
        return Ok(true);
    }
    Ok(is_polymatroidal(ideal)?.holds)
}

fn revlex_ok(ideal: &MonomialIdeal, convention: RevlexConvention) -> Result<bool> {
    if !ideal.is_single_degree()? {
        return Ok(false);
    }
    Ok(revlex_lq(ideal, convention)?.is_certified())
}

fn single_degree(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.is_single_degree()
}

/// First element of `items` whose ideal fails `pred`.
fn first_failure<K: Clone>(
    items: &[(K, MonomialIdeal)],
    mut pred: impl FnMut(&MonomialIdeal) -> Result<bool>,
) -> Result<Option<K>> {
    for (k, i) in items {
        if !pred(i)? {
            return Ok(Some(k.clone()));
        }
    }
    Ok(None)
}

/// The five conditions of the characterization of polymatroidal ideals by
/// colon ideals: `I` polymatroidal (a); every `I : u` polymatroidal (b);
/// every `I : u` single-degree with reverse-lexicographic linear quotients
/// (c); every `I : u` with a linear resolution (d); every `I : u`
/// single-degree (e). Failing verdicts name the first failing `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceRecord {
    pub ideal: MonomialIdeal,
    pub polymatroidal: bool,
    pub colons_polymatroidal: bool,
    pub colons_revlex_lq: bool,
    pub colons_linear: bool,
    pub colons_single_degree: bool,
    /// Convention under which `colons_revlex_lq` was evaluated.
    pub convention: RevlexConvention,
    /// Condition (c) disagreed under the default convention and agreed under
    /// the other one.
    pub convention_sensitive: bool,
    pub colons_checked: usize,
    pub witnesses: EquivalenceWitnesses,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct EquivalenceWitnesses {
    pub polymatroidal: Option<ExchangeFailure>,
    pub colons_polymatroidal: Option<Monomial>,
    pub colons_revlex_lq: Option<Monomial>,
    pub colons_linear: Option<Monomial>,
    pub colons_single_degree: Option<Monomial>,
}

impl EquivalenceRecord {
    pub fn verdicts(&self) -> [bool; 5] {
        [
            self.polymatroidal,
            self.colons_polymatroidal,
            self.colons_revlex_lq,
            self.colons_linear,
            self.colons_single_degree,
        ]
    }

    pub fn is_violation(&self) -> bool {
        let v = self.verdicts();
        v.iter().any(|&b| b != v[0])
    }
}

pub fn verify_equivalences(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<EquivalenceRecord> {
    let a = is_polymatroidal(ideal)?;
    let colons = distinct_colons(ideal)?;
    let b = first_failure(&colons, |c| Ok(is_polymatroidal(c)?.holds))?;
    let mut convention = RevlexConvention::default();
    let mut c = first_failure(&colons, |i| revlex_ok(i, convention))?;
    let d = first_failure(&colons, |i| has_linear_resolution_with(i, ch, limits))?;
    let e = first_failure(&colons, single_degree)?;

    let others = [a.holds, b.is_none(), d.is_none(), e.is_none()];
    let mut convention_sensitive = false;
    if others.iter().all(|&x| x == others[0]) && c.is_none() != others[0] {
        let alt = convention.other();
        let c_alt = first_failure(&colons, |i| revlex_ok(i, alt))?;
        if c_alt.is_none() == others[0] {
            convention = alt;
            c = c_alt;
            convention_sensitive = true;
        }
    }

    Ok(EquivalenceRecord {
        ideal: ideal.clone(),
        polymatroidal: a.holds,
        colons_polymatroidal: b.is_none(),
        colons_revlex_lq: c.is_none(),
        colons_linear: d.is_none(),
        colons_single_degree: e.is_none(),
        convention,
        convention_sensitive,
        colons_checked: colons.len(),
        witnesses: EquivalenceWitnesses {
            polymatroidal: a.failure,
            colons_polymatroidal: b,
            colons_revlex_lq: c,
            colons_linear: d,
            colons_single_degree: e,
        },
    })
}

/// A failing localization `C`, with the power `k` where one is involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailingLocalization {
    pub ones: VarSubset,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

/// The localization characterizations of matroidal ideals. The first block
/// quantifies over all localizations `I(P)`: matroidal, single-degree with
/// reverse-lexicographic linear quotients, linear resolution, single degree.
/// The second quantifies over powers `I^k(P)` for `k = 1..=kmax`: linear
/// resolution for all `k`, for some `k`, single degree for some `k`, for all
/// `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquarefreeRecord {
    pub ideal: MonomialIdeal,
    pub matroidal: bool,
    pub localizations_matroidal: bool,
    pub localizations_revlex_lq: bool,
    pub localizations_linear: bool,
    pub localizations_single_degree: bool,
    pub kmax: u32,
    pub powers_all_linear: bool,
    pub powers_some_linear: bool,
    pub powers_some_single_degree: bool,
    pub powers_all_single_degree: bool,
    pub convention: RevlexConvention,
    pub convention_sensitive: bool,
    pub witnesses: SquarefreeWitnesses,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SquarefreeWitnesses {
    pub matroidal: Option<ExchangeFailure>,
    pub localizations_matroidal: Option<FailingLocalization>,
    pub localizations_revlex_lq: Option<FailingLocalization>,
    pub localizations_linear: Option<FailingLocalization>,
    pub localizations_single_degree: Option<FailingLocalization>,
    pub powers_all_linear: Option<FailingLocalization>,
    pub powers_some_linear: Option<FailingLocalization>,
    pub powers_some_single_degree: Option<FailingLocalization>,
    pub powers_all_single_degree: Option<FailingLocalization>,
}

impl SquarefreeRecord {
    pub fn verdicts(&self) -> [bool; 9] {
        [
            self.matroidal,
            self.localizations_matroidal,
            self.localizations_revlex_lq,
            self.localizations_linear,
            self.localizations_single_degree,
            self.powers_all_linear,
            self.powers_some_linear,
            self.powers_some_single_degree,
            self.powers_all_single_degree,
        ]
    }

    pub fn is_violation(&self) -> bool {
        let v = self.verdicts();
        v.iter().any(|&b| b != v[0])
    }
}

fn at(ones: Option<VarSubset>) -> Option<FailingLocalization> {
    ones.map(|ones| FailingLocalization { ones, k: None })
}

pub fn verify_squarefree(
    ideal: &MonomialIdeal,
    kmax: u32,
    ch: Characteristic,
    limits: &Limits,
) -> Result<SquarefreeRecord> {
    if !ideal.is_squarefree() {
        return Err(crate::Error::Precondition(format!(
            "({ideal}) is not squarefree"
        )));
    }
    if kmax == 0 {
        return Err(crate::Error::Precondition("kmax must be positive".into()));
    }
    let a = is_matroidal(ideal)?;
    let locs = distinct_localizations(ideal)?;
    let b = first_failure(&locs, |l| Ok(is_matroidal(l)?.holds))?;
    let mut convention = RevlexConvention::default();
    let mut c = first_failure(&locs, |l| revlex_ok(l, convention))?;
    let d = first_failure(&locs, |l| has_linear_resolution_with(l, ch, limits))?;
    let e = first_failure(&locs, single_degree)?;

    let others = [a.holds, b.is_none(), d.is_none(), e.is_none()];
    let mut convention_sensitive = false;
    if others.iter().all(|&x| x == others[0]) && c.is_none() != others[0] {
        let alt = convention.other();
        let c_alt = first_failure(&locs, |l| revlex_ok(l, alt))?;
        if c_alt.is_none() == others[0] {
            convention = alt;
            c = c_alt;
            convention_sensitive = true;
        }
    }

    // powers: linear[C][k-1], single[C][k-1]
    let mut all_linear = None;
    let mut some_linear = None;
    let mut some_single = None;
    let mut all_single = None;
    for (ones, l) in &locs {
        let mut linear = Vec::new();
        let mut single = Vec::new();
        for k in 1..=kmax {
            let p = l.power(k)?;
            single.push(p.is_single_degree()?);
            linear.push(has_linear_resolution_with(&p, ch, limits)?);
        }
        let fail = |k: Option<usize>| FailingLocalization {
            ones: ones.clone(),
            k: k.map(|k| k as u32 + 1),
        };
        if all_linear.is_none() {
            if let Some(k) = linear.iter().position(|&x| !x) {
                all_linear = Some(fail(Some(k)));
            }
        }
        if some_linear.is_none() && !linear.contains(&true) {
            some_linear = Some(fail(None));
        }
        if some_single.is_none() && !single.contains(&true) {
            some_single = Some(fail(None));
        }
        if all_single.is_none() {
            if let Some(k) = single.iter().position(|&x| !x) {
                all_single = Some(fail(Some(k)));
            }
        }
    }

    Ok(SquarefreeRecord {
        ideal: ideal.clone(),
        matroidal: a.holds,
        localizations_matroidal: b.is_none(),
        localizations_revlex_lq: c.is_none(),
        localizations_linear: d.is_none(),
        localizations_single_degree: e.is_none(),
        kmax,
        powers_all_linear: all_linear.is_none(),
        powers_some_linear: some_linear.is_none(),
        powers_some_single_degree: some_single.is_none(),
        powers_all_single_degree: all_single.is_none(),
        convention,
        convention_sensitive,
        witnesses: SquarefreeWitnesses {
            matroidal: a.failure,
            localizations_matroidal: at(b),
            localizations_revlex_lq: at(c),
            localizations_linear: at(d),
            localizations_single_degree: at(e),
            powers_all_linear: all_linear,
            powers_some_linear: some_linear,
            powers_some_single_degree: some_single,
            powers_all_single_degree: all_single,
        },
    })
}

/// Which way a disagreement between "polymatroidal" and "every localization
/// has a linear resolution" goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Disagreement {
    /// Polymatroidal, yet some localization is not linear. Impossible by a
    /// proven theorem, so this indicates a bug.
    Forward,
    /// Every localization linear, yet not polymatroidal: a counterexample to
    /// the conjectured characterization.
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureRecord {
    pub ideal: MonomialIdeal,
    pub polymatroidal: bool,
    pub localizations_linear: bool,
    pub localizations_checked: usize,
    pub exchange_failure: Option<ExchangeFailure>,
    /// First `C` whose localization has no linear resolution.
    pub failing_localization: Option<VarSubset>,
    pub disagreement: Option<Disagreement>,
}

/// Compare "polymatroidal" with "`I(P)` has a linear resolution for every
/// monomial prime `P`".
pub fn conjecture_record(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<ConjectureRecord> {
    let poly = is_polymatroidal(ideal)?;
    let locs = distinct_localizations(ideal)?;
    let failing = first_failure(&locs, |l| has_linear_resolution_with(l, ch, limits))?;
    let linear = failing.is_none();
    let disagreement = match (poly.holds, linear) {
        (true, false) => Some(Disagreement::Forward),
        (false, true) => Some(Disagreement::Reverse),
        _ => None,
    };
    Ok(ConjectureRecord {
        ideal: ideal.clone(),
        polymatroidal: poly.holds,
        localizations_linear: linear,
        localizations_checked: locs.len(),
        exchange_failure: poly.failure,
        failing_localization: failing,
        disagreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Characteristic = Characteristic::ZERO;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    fn mono(s: &str, n: usize) -> Monomial {
        ideal(s, n).gens()[0].clone()
    }

    #[test]
    fn equivalence_examples() {
        let lim = Limits::default();
        let r = verify_equivalences(&ideal("x1^2, x1*x2, x3^2, x2*x3", 3), Q, &lim).unwrap();
        assert_eq!(r.verdicts(), [false; 5]);
        assert!(!r.is_violation());
        assert_eq!(r.witnesses.colons_polymatroidal, Some(mono("1", 3)));
        assert_eq!(r.witnesses.colons_linear, Some(mono("1", 3)));
        // I itself is single-degree, so (e) fails at a proper colon
        let u = r.witnesses.colons_single_degree.clone().unwrap();
        let c = MonomialIdeal::parse("x1^2, x1*x2, x3^2, x2*x3", 3)
            .unwrap()
            .colon(&u)
            .unwrap();
        assert!(!c.is_single_degree().unwrap());

        let r = verify_equivalences(&ideal("x1*x2, x1*x3, x2*x3", 3), Q, &lim).unwrap();
        assert_eq!(r.verdicts(), [true; 5]);

        let r = verify_equivalences(&ideal("x1^2*x3", 3), Q, &lim).unwrap();
        assert_eq!(r.verdicts(), [true; 5]);
    }

    #[test]
    fn squarefree_examples() {
        let lim = Limits::default();
        let r = verify_squarefree(&ideal("x1*x2, x1*x3, x2*x3", 3), 3, Q, &lim).unwrap();
        assert_eq!(r.verdicts(), [true; 9]);

        let r = verify_squarefree(&ideal("x1*x2, x3*x4", 4), 2, Q, &lim).unwrap();
        assert!(!r.matroidal);
        assert!(!r.localizations_linear);
        assert_eq!(
            r.witnesses.localizations_linear,
            Some(FailingLocalization {
                ones: VarSubset::empty(),
                k: None
            })
        );
        assert!(!r.is_violation());

        let r = verify_squarefree(&ideal("x1", 2), 2, Q, &lim).unwrap();
        assert_eq!(r.verdicts(), [true; 9]);

        assert!(verify_squarefree(&ideal("x1^2", 2), 2, Q, &lim).is_err());
    }

    #[test]
    fn conjecture_examples() {
        let lim = Limits::default();
        let r = conjecture_record(&ideal("x1^2, x1*x2, x3^2, x2*x3", 3), Q, &lim).unwrap();
        assert!(!r.polymatroidal && !r.localizations_linear);
        assert_eq!(r.failing_localization, Some(VarSubset::empty()));
        assert_eq!(r.disagreement, None);

        let r = conjecture_record(&ideal("x1*x2, x1*x3, x2*x3", 3), Q, &lim).unwrap();
        assert!(r.polymatroidal && r.localizations_linear);
    }
}
