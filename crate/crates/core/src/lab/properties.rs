//! Implications checked on every ideal of a corpus.
//!
//! Each property is an implication `hypothesis ⇒ conclusion`; an ideal not
//! meeting the hypothesis makes it vacuous. Properties whose name starts with
//! `experimental-` are conjectural statements: a failure there is evidence,
//! not a bug.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::Characteristic;
use crate::monomial::{Monomial, VarSubset};
use crate::polymatroid::{
    detect_veronese, has_nonpure_exchange, has_strong_exchange, is_componentwise_polymatroidal,
    is_componentwise_veronese, is_polymatroidal, symmetric_exchange_violation, veronese,
    VeroneseParams,
};
use crate::primes::associated_primes;
use crate::quotients::{componentwise_veronese_lq, find_lq_order};
use crate::resolution::{has_linear_resolution_with, is_componentwise_linear_with};

use super::records::{distinct_localizations, linear_or_unit};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyOutcome {
    Holds,
    Vacuous,
    Fails,
}

impl PropertyOutcome {
    fn implication(hyp: bool, concl: impl FnOnce() -> Result<bool>) -> Result<Self> {
        if !hyp {
            return Ok(PropertyOutcome::Vacuous);
        }
        Ok(if concl()? {
            PropertyOutcome::Holds
        } else {
            PropertyOutcome::Fails
        })
    }
}

pub fn is_experimental(name: &str) -> bool {
    name.starts_with("experimental-")
}

/// Lazily computed facts shared between properties.
struct Facts<'a> {
    ideal: &'a MonomialIdeal,
    ch: Characteristic,
    limits: &'a Limits,
    poly: Option<bool>,
    linear: Option<bool>,
    locs_linear: Option<bool>,
}

impl Facts<'_> {
    fn poly(&mut self) -> Result<bool> {
        if self.poly.is_none() {
            self.poly = Some(is_polymatroidal(self.ideal)?.holds);
        }
        Ok(self.poly.unwrap())
    }

    fn linear(&mut self) -> Result<bool> {
        if self.linear.is_none() {
            self.linear = Some(has_linear_resolution_with(
                self.ideal,
                self.ch,
                self.limits,
            )?);
        }
        Ok(self.linear.unwrap())
    }

    fn locs_linear(&mut self) -> Result<bool> {
        if self.locs_linear.is_none() {
            let mut all = true;
            for (_, l) in distinct_localizations(self.ideal)? {
                if !has_linear_resolution_with(&l, self.ch, self.limits)? {
                    all = false;
                    break;
                }
            }
            self.locs_linear = Some(all);
        }
        Ok(self.locs_linear.unwrap())
    }
}

fn pure_power_vars(ideal: &MonomialIdeal, d: u64) -> Vec<usize> {
    ideal
        .gens()
        .iter()
        .filter(|g| g.degree() == d)
        .filter_map(Monomial::pure_power_var)
        .collect()
}

/// Evaluate every corpus property on `ideal`.
pub fn corpus_properties(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<BTreeMap<&'static str, PropertyOutcome>> {
    use PropertyOutcome as P;
    ideal.require_proper_nonzero()?;
    let n = ideal.nvars();
    let single = ideal.is_single_degree()?;
    let mut f = Facts {
        ideal,
        ch,
        limits,
        poly: None,
        linear: None,
        locs_linear: None,
    };
    let mut out = BTreeMap::new();

    let strong = has_strong_exchange(ideal)?.holds;
    out.insert(
        "strong-exchange-implies-polymatroidal",
        P::implication(strong, || f.poly())?,
    );

    let poly = f.poly()?;
    out.insert(
        "polymatroidal-is-single-degree",
        P::implication(poly, || Ok(single))?,
    );
    out.insert(
        "symmetric-exchange",
        P::implication(poly, || Ok(symmetric_exchange_violation(ideal).is_none()))?,
    );
    out.insert(
        "polymatroidal-localizations-linear",
        P::implication(poly, || f.locs_linear())?,
    );

    let is_veronese = single && detect_veronese(ideal)?.is_some();
    out.insert(
        "veronese-is-polymatroidal",
        P::implication(is_veronese, || Ok(poly))?,
    );

    out.insert(
        "two-variables",
        P::implication(n == 2, || Ok(poly == f.linear()?))?,
    );
    out.insert(
        "three-variables",
        P::implication(n == 3 && poly, || Ok(has_strong_exchange(ideal)?.holds))?,
    );
    out.insert(
        "three-variables-localizations",
        P::implication(n == 3, || Ok(poly == f.locs_linear()?))?,
    );
    let deg2 = single && ideal.min_degree() == Some(2);
    out.insert(
        "degree-two-localizations",
        P::implication(deg2, || Ok(poly == f.locs_linear()?))?,
    );

    // pure powers of all variables and a linear resolution force m^k
    let all_pure = (0..n).all(|i| ideal.gens().iter().any(|g| g.pure_power_var() == Some(i)));
    out.insert(
        "finite-length-linear",
        P::implication(all_pure && f.linear()?, || {
            let k = ideal.min_degree().unwrap() as u32;
            Ok(*ideal == MonomialIdeal::maximal_power(n, k))
        })?,
    );

    out.insert("pure-powers", pure_powers(ideal, &mut f)?);

    let cwp = is_componentwise_polymatroidal(ideal, 0)?.holds;
    out.insert(
        "componentwise-nonpure-exchange",
        P::implication(cwp, || Ok(has_nonpure_exchange(ideal)?.holds))?,
    );
    out.insert(
        "componentwise-degree-range",
        P::implication(true, || {
            Ok(cwp == is_componentwise_polymatroidal(ideal, 2)?.holds)
        })?,
    );
    let two_degrees = ideal.degrees().len() <= 2;
    out.insert(
        "componentwise-two-degree-powers",
        P::implication(cwp && two_degrees, || {
            for k in 2..=3 {
                if !is_componentwise_polymatroidal(&ideal.power(k)?, 0)?.holds {
                    return Ok(false);
                }
            }
            Ok(true)
        })?,
    );

    let cwv = is_componentwise_veronese(ideal, 0)?.holds;
    out.insert(
        "componentwise-veronese-linear-quotients",
        P::implication(cwv, || {
            Ok(componentwise_veronese_lq(ideal)?.is_some_and(|o| o.is_certified()))
        })?,
    );

    let small = ideal.num_gens() <= limits.max_lq_gens;
    let lq = if small {
        find_lq_order(&MonomialIdeal::zero(n), ideal.gens(), limits)?.is_some()
    } else {
        false
    };
    out.insert(
        "linear-quotients-componentwise-linear",
        P::implication(lq, || {
            Ok(is_componentwise_linear_with(ideal, ch, 0, limits)?.holds)
        })?,
    );
    out.insert(
        "linear-quotients-linear-resolution",
        P::implication(lq && single, || f.linear())?,
    );

    // associated-prime criteria, under "every localization linear"
    let locs_linear = f.locs_linear()?;
    let ass = associated_primes(ideal, limits)?;
    let no_embedded = !ass.has_embedded;
    let full = VarSubset::full(n);
    let pairwise_full = ass
        .minimal
        .iter()
        .enumerate()
        .all(|(k, p)| ass.minimal[k + 1..].iter().all(|q| p.union(q) == full));
    out.insert(
        "primes-pairwise-maximal",
        P::implication(no_embedded && pairwise_full && locs_linear, || Ok(poly))?,
    );
    out.insert(
        "primes-height",
        P::implication(no_embedded && ass.height + 1 == n && locs_linear, || {
            Ok(poly)
        })?,
    );
    out.insert(
        "primes-at-most-two",
        P::implication(no_embedded && ass.primes.len() <= 2 && locs_linear, || {
            Ok(poly && is_transversal(ideal)?)
        })?,
    );

    out.insert(
        "experimental-maximal-product",
        experimental_star(ideal, &mut f)?,
    );
    out.insert(
        "experimental-colon-by-maximal",
        experimental_colon(ideal, &mut f)?,
    );
    Ok(out)
}

/// Single degree `d` with `x_i^d ∈ I` for all `i` but possibly `t`, where `I`
/// and `I(P_{t})` have linear resolutions: then `I = I_(d; d, ..., k, ..., d)`
/// with `k` in position `t`.
fn pure_powers(ideal: &MonomialIdeal, f: &mut Facts<'_>) -> Result<PropertyOutcome> {
    let n = ideal.nvars();
    if !ideal.is_single_degree()? {
        return Ok(PropertyOutcome::Vacuous);
    }
    let d = ideal.single_degree()?;
    let pure = pure_power_vars(ideal, d);
    if pure.len() + 1 < n {
        return Ok(PropertyOutcome::Vacuous);
    }
    let t = (0..n).find(|i| !pure.contains(i)).unwrap_or(n - 1);
    let ones: VarSubset = [t].into_iter().collect();
    let hyp = f.linear()? && linear_or_unit(&ideal.localize(&ones)?, f.ch, f.limits)?;
    PropertyOutcome::implication(hyp, || {
        let k = ideal.lcm().exp(t);
        let mut caps = vec![d as u32; n];
        caps[t] = k;
        Ok(*ideal == veronese(&VeroneseParams::new(d as u32, caps)?))
    })
}

/// Is `I` a product of powers of its associated primes? Brute force over
/// exponent vectors summing to the generating degree.
fn is_transversal(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.nvars();
    let ass = associated_primes(ideal, &Limits::default())?;
    let primes = ass.sets();
    let d = match ideal.is_single_degree()? {
        true => ideal.single_degree()? as u32,
        false => return Ok(false),
    };
    let mut exps = vec![0u32; primes.len()];
    loop {
        if exps.iter().sum::<u32>() == d && crate::primes::transversal(n, &primes, &exps)? == *ideal
        {
            return Ok(true);
        }
        let mut k = 0;
        loop {
            if k == exps.len() {
                return Ok(false);
            }
            if exps[k] < d {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// `I` with a linear resolution and `I m` polymatroidal: is `I`
/// polymatroidal?
fn experimental_star(ideal: &MonomialIdeal, f: &mut Facts<'_>) -> Result<PropertyOutcome> {
    let n = ideal.nvars();
    if !f.linear()? {
        return Ok(PropertyOutcome::Vacuous);
    }
    let im = ideal.product(&MonomialIdeal::maximal(n))?;
    let hyp = is_polymatroidal(&im)?.holds;
    PropertyOutcome::implication(hyp, || f.poly())
}

/// Polymatroidal `I` of degree `d ≥ 2`: is `(I : m)_<d-1>` polymatroidal
/// whenever it is nonzero?
fn experimental_colon(ideal: &MonomialIdeal, f: &mut Facts<'_>) -> Result<PropertyOutcome> {
    let n = ideal.nvars();
    if !f.poly()? {
        return Ok(PropertyOutcome::Vacuous);
    }
    let d = ideal.single_degree()?;
    if d < 2 {
        return Ok(PropertyOutcome::Vacuous);
    }
    let c = ideal
        .colon_ideal(&MonomialIdeal::maximal(n))?
        .component(d - 1)?;
    if c.is_zero() || c.is_unit() {
        return Ok(PropertyOutcome::Vacuous);
    }
    PropertyOutcome::implication(true, || Ok(is_polymatroidal(&c)?.holds))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn props(s: &str, n: usize) -> BTreeMap<&'static str, PropertyOutcome> {
        let i = MonomialIdeal::parse(s, n).unwrap();
        corpus_properties(&i, Characteristic::ZERO, &Limits::default()).unwrap()
    }

    fn no_failures(p: &BTreeMap<&'static str, PropertyOutcome>) {
        for (k, v) in p {
            assert_ne!(*v, PropertyOutcome::Fails, "{k}");
        }
    }

    #[test]
    fn examples_hold() {
        for (s, n) in [
            ("x1^2, x1*x2, x2^2", 2),
            ("x1*x2, x1*x3, x2*x3", 3),
            ("x1^2, x1*x2, x3^2, x2*x3", 3),
            ("x1*x2, x1*x3^2, x2*x3^2", 3),
            ("x1^2, x2^2*x3, x1*x2*x3, x1*x2^2, x1*x3^3, x2*x3^3", 3),
            ("x1*x3, x1*x4, x2*x3, x2*x4", 4),
        ] {
            no_failures(&props(s, n));
        }
    }

    #[test]
    fn hypotheses_trigger() {
        let p = props("x1^2, x1*x2, x2^2", 2);
        assert_eq!(p["finite-length-linear"], PropertyOutcome::Holds);
        assert_eq!(p["pure-powers"], PropertyOutcome::Holds);
        assert_eq!(p["two-variables"], PropertyOutcome::Holds);
        assert_eq!(p["experimental-colon-by-maximal"], PropertyOutcome::Holds);

        let p = props("x1*x3, x1*x4, x2*x3, x2*x4", 4);
        assert_eq!(p["primes-at-most-two"], PropertyOutcome::Holds);

        let p = props("x1*x2, x1*x3, x2*x3", 3);
        assert_eq!(p["primes-height"], PropertyOutcome::Holds);
        assert_eq!(p["primes-pairwise-maximal"], PropertyOutcome::Holds);
    }
}
