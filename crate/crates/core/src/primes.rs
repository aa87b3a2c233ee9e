//! Irreducible decompositions and associated primes.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSubset};

/// An irreducible monomial ideal `(x_i^{p_i} : i in A)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(powers: BTreeMap<usize, u32>) -> Result<Self> {
        if powers.is_empty() {
            return Err(Error::Precondition("empty irreducible component".into()));
        }
        if powers.values().any(|&p| p == 0) {
            return Err(Error::Precondition(
                "zero power in irreducible component".into(),
            ));
        }
        Ok(IrreducibleComponent { powers })
    }

    /// 0-based variable index to power.
    pub fn powers(&self) -> &BTreeMap<usize, u32> {
        &self.powers
    }

    pub fn radical(&self) -> VarSubset {
        self.powers.keys().copied().collect()
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        self.powers.iter().any(|(&i, &p)| w.exp(i) >= p)
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.powers
            .iter()
            .all(|(i, &p)| other.powers.get(i).is_some_and(|&q| q <= p))
    }

    pub fn to_ideal(&self, nvars: usize) -> Result<MonomialIdeal> {
        let gens = self.powers.iter().map(|(&i, &p)| {
            let mut e = vec![0; nvars];
            if let Some(slot) = e.get_mut(i) {
                *slot = p;
            }
            Monomial::new(e)
        });
        if let Some(&i) = self.powers.keys().find(|&&i| i >= nvars) {
            return Err(Error::VariableOutOfRange {
                index: i + 1,
                nvars,
            });
        }
        MonomialIdeal::minimalize(nvars, gens)
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, (&i, &p)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if p == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, p)?;
            }
        }
        f.write_str(")")
    }
}

impl Serialize for IrreducibleComponent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let one_based: BTreeMap<usize, u32> =
            self.powers.iter().map(|(&i, &p)| (i + 1, p)).collect();
        one_based.serialize(s)
    }
}

/// The irredundant irreducible decomposition of `I`.
///
/// Built one generator at a time: monomial ideals form a distributive
/// lattice, so `(Q_1 ∩ ... ∩ Q_r) + (g) = ∩ (Q_k + (g))`, and for `g` outside
/// `Q_k` the sum `Q_k + (g)` splits as `∩_{j in supp g} (Q_k + x_j^{g_j})`.
/// Components containing another component are pruned after every step.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper_nonzero()?;
    let mut comps: Vec<BTreeMap<usize, u32>> = vec![BTreeMap::new()];
    for g in ideal.gens() {
        let mut next = Vec::new();
        for q in comps {
            let inside = q.iter().any(|(&i, &p)| g.exp(i) >= p);
            if inside {
                next.push(q);
                continue;
            }
            for j in g.support().iter() {
                let mut r = q.clone();
                let e = r.entry(j).or_insert(g.exp(j));
                *e = (*e).min(g.exp(j));
                next.push(r);
            }
        }
        comps = prune(next);
    }
    let mut out: Vec<IrreducibleComponent> = comps
        .into_iter()
        .map(|powers| IrreducibleComponent { powers })
        .collect();
    out.sort();
    Ok(out)
}

fn prune(mut comps: Vec<BTreeMap<usize, u32>>) -> Vec<BTreeMap<usize, u32>> {
    comps.sort();
    comps.dedup();
    let subset = |a: &BTreeMap<usize, u32>, b: &BTreeMap<usize, u32>| {
        a.iter().all(|(i, &p)| b.get(i).is_some_and(|&q| q <= p))
    };
    // a component containing another one is redundant
    let keep: Vec<bool> = (0..comps.len())
        .map(|k| !(0..comps.len()).any(|l| l != k && subset(&comps[l], &comps[k])))
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// An associated prime together with a monomial `w` such that `I : w` is
/// exactly that prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssociatedPrime {
    pub prime: VarSubset,
    pub witness: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssociatedPrimes {
    pub primes: Vec<AssociatedPrime>,
    pub minimal: Vec<VarSubset>,
    pub height: usize,
    pub has_embedded: bool,
}

impl AssociatedPrimes {
    pub fn sets(&self) -> Vec<VarSubset> {
        self.primes.iter().map(|p| p.prime.clone()).collect()
    }
}

fn prime_order(a: &VarSubset, b: &VarSubset) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.one_based().cmp(&b.one_based()))
}

/// Associated primes of `S/I`, each validated by a witness monomial.
///
/// Candidates are the radicals of the irreducible components. The first
/// witness tried for a component `(x_i^{a_i} : i in A)` is
/// `∏_{i in A} x_i^{a_i - 1} · ∏_{i not in A} x_i^{L_i}` with `L = lcm G(I)`;
/// if it does not work, all monomials with exponents up to `L_i + 1` are
/// searched, within `limits.max_witness_search`.
pub fn associated_primes(ideal: &MonomialIdeal, limits: &Limits) -> Result<AssociatedPrimes> {
    let n = ideal.nvars();
    let comps = irreducible_decomposition(ideal)?;
    let lcm = ideal.lcm();
    let mut by_radical: BTreeMap<Vec<usize>, (VarSubset, Vec<&IrreducibleComponent>)> =
        BTreeMap::new();
    for c in &comps {
        let r = c.radical();
        by_radical
            .entry(r.one_based())
            .or_insert_with(|| (r, Vec::new()))
            .1
            .push(c);
    }
    let mut primes = Vec::new();
    for (_, (set, group)) in by_radical {
        let target = MonomialIdeal::prime(n, &set);
        let corner = group.iter().map(|c| {
            Monomial::new(
                (0..n)
                    .map(|i| c.powers.get(&i).map_or(lcm.exp(i), |&a| a - 1))
                    .collect(),
            )
        });
        let mut found = None;
        for w in corner {
            if ideal.colon(&w)? == target {
                found = Some(w);
                break;
            }
        }
        let witness = match found {
            Some(w) => w,
            None => search_witness(ideal, &target, &set, &lcm, limits)?,
        };
        primes.push(AssociatedPrime {
            prime: set,
            witness,
        });
    }
    primes.sort_by(|a, b| prime_order(&a.prime, &b.prime));
    let sets: Vec<&VarSubset> = primes.iter().map(|p| &p.prime).collect();
    let minimal: Vec<VarSubset> = sets
        .iter()
        .filter(|p| !sets.iter().any(|q| q != *p && q.is_subset(p)))
        .map(|p| (*p).clone())
        .collect();
    let height = minimal.iter().map(VarSubset::len).min().unwrap_or(0);
    let has_embedded = minimal.len() != primes.len();
    Ok(AssociatedPrimes {
        primes,
        minimal,
        height,
        has_embedded,
    })
}

fn search_witness(
    ideal: &MonomialIdeal,
    target: &MonomialIdeal,
    set: &VarSubset,
    lcm: &Monomial,
    limits: &Limits,
) -> Result<Monomial> {
    let bounds: Vec<u32> = lcm.exps().iter().map(|e| e + 1).collect();
    let size = bounds
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1))
        .unwrap_or(usize::MAX);
    if size > limits.max_witness_search {
        return Err(Error::budget(
            format!("witness search for candidate prime {set}"),
            size,
            limits.max_witness_search,
        ));
    }
    let mut exps = vec![0u32; bounds.len()];
    loop {
        let w = Monomial::new(exps.clone());
        if ideal.colon(&w)? == *target {
            return Ok(w);
        }
        let mut k = 0;
        loop {
            if k == exps.len() {
                return Err(Error::TheoremViolation(format!(
                    "radical {set} of an irreducible component has no witness"
                )));
            }
            if exps[k] < bounds[k] {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

/// The product `P_1^{a_1} ... P_r^{a_r}` of monomial primes. An exponent of
/// zero contributes the unit ideal.
pub fn transversal(nvars: usize, primes: &[VarSubset], exps: &[u32]) -> Result<MonomialIdeal> {
    if primes.len() != exps.len() {
        return Err(Error::Precondition(format!(
            "{} primes but {} exponents",
            primes.len(),
            exps.len()
        )));
    }
    let mut acc = MonomialIdeal::unit(nvars);
    for (p, &a) in primes.iter().zip(exps) {
        if let Some(i) = p.max_index().filter(|&i| i >= nvars) {
            return Err(Error::VariableOutOfRange {
                index: i + 1,
                nvars,
            });
        }
        if a == 0 {
            continue;
        }
        acc = acc.product(&MonomialIdeal::prime(nvars, p).power(a)?)?;
    }
    Ok(acc)
}
