//! Exchange properties of monomial generating sets, Veronese-type ideals and
//! their componentwise variants.
//!
//! Every predicate walks pairs `(u, v)` of minimal generators in canonical
//! order and variables in index order, so a reported witness is the first
//! failure in that order and is reproducible across runs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExchangeVerdict {
    SatisfiedWith(usize),
    Violated,
}

/// A single instance of an exchange condition: generators `u`, `v`, the
/// variable `i` to remove and, where the property names it, the variable `j`
/// to add. Variable indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeWitness {
    pub u: Monomial,
    pub v: Monomial,
    pub i: usize,
    pub j: Option<usize>,
    pub verdict: ExchangeVerdict,
}

impl Serialize for ExchangeWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExchangeWitness", 5)?;
        st.serialize_field("u", &self.u)?;
        st.serialize_field("v", &self.v)?;
        st.serialize_field("i", &(self.i + 1))?;
        st.serialize_field("j", &self.j.map(|j| j + 1))?;
        let verdict = match self.verdict {
            ExchangeVerdict::SatisfiedWith(_) => "satisfied",
            ExchangeVerdict::Violated => "violated",
        };
        st.serialize_field("verdict", verdict)?;
        st.end()
    }
}

/// Why an exchange predicate failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExchangeFailure {
    /// Two minimal generators of different degrees.
    MixedDegree {
        low: Monomial,
        high: Monomial,
    },
    /// A generator is not squarefree (matroidal check only).
    NotSquarefree {
        generator: Monomial,
    },
    Exchange {
        witness: ExchangeWitness,
    },
}

/// Result of an exchange predicate: `holds`, or a failure witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeCheck {
    pub holds: bool,
    pub failure: Option<ExchangeFailure>,
}

impl ExchangeCheck {
    fn pass() -> Self {
        ExchangeCheck {
            holds: true,
            failure: None,
        }
    }

    fn fail(failure: ExchangeFailure) -> Self {
        ExchangeCheck {
            holds: false,
            failure: Some(failure),
        }
    }

    pub fn witness(&self) -> Option<&ExchangeWitness> {
        match &self.failure {
            Some(ExchangeFailure::Exchange { witness }) => Some(witness),
            _ => None,
        }
    }
}

/// Indices `k` with `a_k > b_k`.
fn exceeding<'a>(a: &'a Monomial, b: &'a Monomial) -> impl Iterator<Item = usize> + 'a {
    (0..a.nvars()).filter(move |&k| a.exp(k) > b.exp(k))
}

/// `x_j * (u / x_i) ∈ I`, with `x_i | u`.
fn swap_in(ideal: &MonomialIdeal, u: &Monomial, i: usize, j: usize) -> bool {
    let mut exps = u.exps().to_vec();
    exps[i] -= 1;
    exps[j] += 1;
    ideal.contains(&Monomial::new(exps))
}

fn mixed_degree(ideal: &MonomialIdeal) -> Option<ExchangeFailure> {
    let gens = ideal.gens();
    let (lo, hi) = (gens.first()?, gens.last()?);
    (lo.degree() != hi.degree()).then(|| ExchangeFailure::MixedDegree {
        low: lo.clone(),
        high: hi.clone(),
    })
}

/// The exchange condition on ordered pairs `(u, v)`: whenever
/// `deg_{x_i} u > deg_{x_i} v`, some `j` with `deg_{x_j} u < deg_{x_j} v` has
/// `x_j (u/x_i) ∈ I`. Returns the first violation.
fn first_exchange_violation(ideal: &MonomialIdeal) -> Option<ExchangeWitness> {
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            if u == v {
                continue;
            }
            for i in exceeding(u, v) {
                if !exceeding(v, u).any(|j| swap_in(ideal, u, i, j)) {
                    return Some(ExchangeWitness {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                        j: None,
                        verdict: ExchangeVerdict::Violated,
                    });
                }
            }
        }
    }
    None
}

/// True iff `I` is equigenerated and its generators satisfy the exchange
/// property. A single generator passes vacuously.
pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<ExchangeCheck> {
    ideal.require_proper_nonzero()?;
    if let Some(f) = mixed_degree(ideal) {
        return Ok(ExchangeCheck::fail(f));
    }
    Ok(match first_exchange_violation(ideal) {
        None => ExchangeCheck::pass(),
        Some(witness) => ExchangeCheck::fail(ExchangeFailure::Exchange { witness }),
    })
}

/// Squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<ExchangeCheck> {
    ideal.require_proper_nonzero()?;
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_squarefree()) {
        return Ok(ExchangeCheck::fail(ExchangeFailure::NotSquarefree {
            generator: g.clone(),
        }));
    }
    is_polymatroidal(ideal)
}

/// Equigenerated, and `x_j (u/x_i) ∈ I` for *every* admissible pair `(i, j)`.
pub fn has_strong_exchange(ideal: &MonomialIdeal) -> Result<ExchangeCheck> {
    ideal.require_proper_nonzero()?;
    if let Some(f) = mixed_degree(ideal) {
        return Ok(ExchangeCheck::fail(f));
    }
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            for i in exceeding(u, v) {
                for j in exceeding(v, u) {
                    if !swap_in(ideal, u, i, j) {
                        return Ok(ExchangeCheck::fail(ExchangeFailure::Exchange {
                            witness: ExchangeWitness {
                                u: u.clone(),
                                v: v.clone(),
                                i,
                                j: Some(j),
                                verdict: ExchangeVerdict::Violated,
                            },
                        }));
                    }
                }
            }
        }
    }
    Ok(ExchangeCheck::pass())
}

/// The exchange condition across degrees: for `u, v ∈ G(I)` with
/// `deg u <= deg v` and `deg_{x_i} v > deg_{x_i} u`, some `j` with
/// `deg_{x_j} v < deg_{x_j} u` has `x_j (v/x_i) ∈ I`.
pub fn has_nonpure_exchange(ideal: &MonomialIdeal) -> Result<ExchangeCheck> {
    ideal.require_proper_nonzero()?;
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            if u == v || u.degree() > v.degree() {
                continue;
            }
            for i in exceeding(v, u) {
                if !exceeding(u, v).any(|j| swap_in(ideal, v, i, j)) {
                    return Ok(ExchangeCheck::fail(ExchangeFailure::Exchange {
                        witness: ExchangeWitness {
                            u: u.clone(),
                            v: v.clone(),
                            i,
                            j: None,
                            verdict: ExchangeVerdict::Violated,
                        },
                    }));
                }
            }
        }
    }
    Ok(ExchangeCheck::pass())
}

/// Symmetric exchange: for `deg_{x_i} v > deg_{x_i} u` some `t` with
/// `deg_{x_t} u > deg_{x_t} v` has `u x_i / x_t ∈ I`. Holds for every
/// polymatroidal ideal; returns the first violation.
pub fn symmetric_exchange_violation(ideal: &MonomialIdeal) -> Option<ExchangeWitness> {
    let gens = ideal.gens();
    for u in gens {
        for v in gens {
            for i in exceeding(v, u) {
                if !exceeding(u, v).any(|t| swap_in(ideal, u, t, i)) {
                    return Some(ExchangeWitness {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                        j: None,
                        verdict: ExchangeVerdict::Violated,
                    });
                }
            }
        }
    }
    None
}

impl ExchangeWitness {
    /// Re-evaluate the exchange condition this witness is about, by brute
    /// force over all `j`. Returns true when the recorded verdict is confirmed.
    pub fn recheck_polymatroidal(&self, ideal: &MonomialIdeal) -> bool {
        let n = ideal.nvars();
        if !(ideal.gens().contains(&self.u) && ideal.gens().contains(&self.v)) {
            return false;
        }
        if self.u.exp(self.i) <= self.v.exp(self.i) {
            return false;
        }
        let found =
            (0..n).find(|&j| self.u.exp(j) < self.v.exp(j) && swap_in(ideal, &self.u, self.i, j));
        match self.verdict {
            ExchangeVerdict::Violated => found.is_none(),
            ExchangeVerdict::SatisfiedWith(j) => {
                self.u.exp(j) < self.v.exp(j) && swap_in(ideal, &self.u, self.i, j)
            }
        }
    }
}

/// Parameters `(d; a_1, ..., a_n)` of the Veronese-type ideal generated by all
/// degree-`d` monomials with `deg_{x_i} <= a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VeroneseParams {
    d: u32,
    caps: Vec<u32>,
}

impl VeroneseParams {
    pub fn new(d: u32, caps: Vec<u32>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidVeronese("degree must be positive".into()));
        }
        if caps.is_empty() {
            return Err(Error::NoVariables);
        }
        let total: u64 = caps.iter().map(|&c| u64::from(c)).sum();
        if total < u64::from(d) {
            return Err(Error::InvalidVeronese(format!(
                "caps sum to {total} < degree {d}"
            )));
        }
        Ok(VeroneseParams { d, caps })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    /// Same ideal, with every cap clipped to the degree.
    pub fn normalized(&self) -> VeroneseParams {
        VeroneseParams {
            d: self.d,
            caps: self.caps.iter().map(|&a| a.min(self.d)).collect(),
        }
    }
}

impl std::fmt::Display for VeroneseParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};", self.d)?;
        for (k, a) in self.caps.iter().enumerate() {
            write!(f, "{}{a}", if k == 0 { " " } else { ", " })?;
        }
        f.write_str(")")
    }
}

/// The Veronese-type ideal `I_(d; a_1..a_n)`.
pub fn veronese(p: &VeroneseParams) -> MonomialIdeal {
    let gens = monomials_of_degree(p.nvars(), p.d)
        .into_iter()
        .filter(|m| m.exps().iter().zip(&p.caps).all(|(e, a)| e <= a));
    MonomialIdeal::minimalize(p.nvars(), gens).expect("caps fix the number of variables")
}

/// Recover Veronese parameters from an equigenerated ideal: `a_i` is the
/// largest exponent of `x_i` among the generators, and the ideal is of
/// Veronese type iff it equals `I_(d; a)`.
pub fn detect_veronese(ideal: &MonomialIdeal) -> Result<Option<VeroneseParams>> {
    ideal.require_proper_nonzero()?;
    let d = ideal.single_degree()?;
    let d = u32::try_from(d).map_err(|_| Error::ExponentOverflow)?;
    let caps = ideal.lcm().exps().to_vec();
    let p = VeroneseParams::new(d, caps)?;
    Ok((veronese(&p) == *ideal).then_some(p))
}

/// Outcome of a componentwise predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentwiseCheck {
    pub holds: bool,
    /// First degree `j` whose component fails.
    pub failing_degree: Option<u64>,
    pub failure: Option<ExchangeFailure>,
}

/// Degrees `j` to examine: least to greatest generator degree, plus `extra`.
pub(crate) fn component_range(ideal: &MonomialIdeal, extra: u64) -> std::ops::RangeInclusive<u64> {
    let lo = ideal.min_degree().unwrap_or(0);
    let hi = ideal.max_degree().unwrap_or(0);
    lo..=hi + extra
}

/// Every component `I_<j>` polymatroidal, for `j` from the least generator
/// degree to the greatest generator degree `d` plus `extra_degrees`. Degrees
/// above `d` follow from `I_<j> = I_<d> m^(j-d)`; `extra_degrees` lets callers
/// check that directly.
pub fn is_componentwise_polymatroidal(
    ideal: &MonomialIdeal,
    extra_degrees: u64,
) -> Result<ComponentwiseCheck> {
    ideal.require_proper_nonzero()?;
    for j in component_range(ideal, extra_degrees) {
        let comp = ideal.component(j)?;
        let check = is_polymatroidal(&comp)?;
        if !check.holds {
            return Ok(ComponentwiseCheck {
                holds: false,
                failing_degree: Some(j),
                failure: check.failure,
            });
        }
    }
    Ok(ComponentwiseCheck {
        holds: true,
        failing_degree: None,
        failure: None,
    })
}

/// Every component `I_<j>` of Veronese type (same degree range policy as
/// [`is_componentwise_polymatroidal`]).
pub fn is_componentwise_veronese(
    ideal: &MonomialIdeal,
    extra_degrees: u64,
) -> Result<ComponentwiseCheck> {
    ideal.require_proper_nonzero()?;
    for j in component_range(ideal, extra_degrees) {
        let comp = ideal.component(j)?;
        if detect_veronese(&comp)?.is_none() {
            let failure = is_polymatroidal(&comp)?.failure;
            return Ok(ComponentwiseCheck {
                holds: false,
                failing_degree: Some(j),
                failure,
            });
        }
    }
    Ok(ComponentwiseCheck {
        holds: true,
        failing_degree: None,
        failure: None,
    })
}
