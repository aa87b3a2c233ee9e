//! Linear-quotients certificates.
//!
//! A certificate lists generators `v_1, ..., v_m` appended to a base ideal `B`
//! such that every colon `(B, v_1, ..., v_{k-1}) : v_k` is generated by
//! variables. With `B = 0` this is the usual notion of linear quotients.

use std::cmp::Reverse;
use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSubset};
use crate::polymatroid::{detect_veronese, veronese, VeroneseParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotientsCertificate {
    pub base: MonomialIdeal,
    pub appended: Vec<Monomial>,
    /// Variables generating the colon at each appended generator.
    pub steps: Vec<VarSubset>,
}

impl LinearQuotientsCertificate {
    /// Recompute every colon from scratch and compare with the recorded steps.
    pub fn verify(&self) -> bool {
        match check_lq_order(&self.base, &self.appended) {
            Ok(LqOutcome::Certified(c)) => c.steps == self.steps,
            _ => false,
        }
    }

    /// The ideal generated by the base and the appended generators.
    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.base.nvars();
        MonomialIdeal::minimalize(n, self.base.gens().iter().chain(&self.appended).cloned())
            .expect("generators share the number of variables")
    }
}

impl Serialize for LinearQuotientsCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LinearQuotientsCertificate", 3)?;
        st.serialize_field("base", &self.base)?;
        st.serialize_field("order", &self.appended)?;
        st.serialize_field("steps", &self.steps)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum LqOutcome {
    Certified(LinearQuotientsCertificate),
    /// The colon at `position` (0-based into the order) is not generated by
    /// variables.
    Fails {
        position: usize,
        colon: MonomialIdeal,
    },
}

impl LqOutcome {
    pub fn certificate(&self) -> Option<&LinearQuotientsCertificate> {
        match self {
            LqOutcome::Certified(c) => Some(c),
            LqOutcome::Fails { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, LqOutcome::Certified(_))
    }
}

/// Variables generating `(prefix) : v`, or `None` if the colon is not
/// generated by variables. An empty prefix gives the zero colon, which counts
/// as generated by the empty set of variables.
fn step_variables<'a>(
    prefix: impl Iterator<Item = &'a Monomial> + Clone,
    v: &Monomial,
) -> Option<VarSubset> {
    let mut vars = VarSubset::empty();
    for w in prefix.clone() {
        let q = w.colon(v);
        if q.is_one() {
            return None;
        }
        if let Some(j) = q.as_variable() {
            vars.insert(j);
        }
    }
    let covered = prefix
        .map(|w| w.colon(v))
        .all(|q| vars.iter().any(|j| q.exp(j) > 0));
    covered.then_some(vars)
}

fn check_minimal(base: &MonomialIdeal, order: &[Monomial]) -> Result<()> {
    let n = base.nvars();
    let all: Vec<&Monomial> = base.gens().iter().chain(order).collect();
    for (k, a) in all.iter().enumerate() {
        if a.nvars() != n {
            return Err(Error::MixedNvars {
                expected: n,
                found: a.nvars(),
            });
        }
        for (l, b) in all.iter().enumerate() {
            if k != l && a.divides(b) {
                return Err(Error::NotMinimal(format!("{a} divides {b}")));
            }
        }
    }
    Ok(())
}

/// Check that appending `order` to `base` one generator at a time has
/// variable-generated colons throughout.
pub fn check_lq_order(base: &MonomialIdeal, order: &[Monomial]) -> Result<LqOutcome> {
    check_minimal(base, order)?;
    let mut steps = Vec::with_capacity(order.len());
    for (k, v) in order.iter().enumerate() {
        let prefix = base.gens().iter().chain(&order[..k]);
        match step_variables(prefix.clone(), v) {
            Some(vars) => steps.push(vars),
            None => {
                let colon = MonomialIdeal::minimalize(base.nvars(), prefix.map(|w| w.colon(v)))?;
                return Ok(LqOutcome::Fails { position: k, colon });
            }
        }
    }
    Ok(LqOutcome::Certified(LinearQuotientsCertificate {
        base: base.clone(),
        appended: order.to_vec(),
        steps,
    }))
}

/// Search all orders of `gens` for one extending `base` by linear quotients.
///
/// Whether `v` may come next depends only on the *set* of generators already
/// placed, so the search is a depth-first walk over subsets that remembers
/// subsets from which no completion exists. Candidates are tried in canonical
/// order, so the result is deterministic.
pub fn find_lq_order(
    base: &MonomialIdeal,
    gens: &[Monomial],
    limits: &Limits,
) -> Result<Option<LinearQuotientsCertificate>> {
    let mut gens = gens.to_vec();
    gens.sort();
    gens.dedup();
    check_minimal(base, &gens)?;
    let limit = limits.max_lq_gens.min(63);
    if gens.len() > limit {
        return Err(Error::budget(
            "linear-quotients search generators",
            gens.len(),
            limit,
        ));
    }
    let mut search = Search {
        base,
        gens: &gens,
        dead: HashSet::new(),
        order: Vec::with_capacity(gens.len()),
    };
    let full = if gens.is_empty() {
        0
    } else {
        u64::MAX >> (64 - gens.len())
    };
    if !search.dfs(0, full) {
        return Ok(None);
    }
    let order: Vec<Monomial> = search.order.iter().map(|&k| gens[k].clone()).collect();
    match check_lq_order(base, &order)? {
        LqOutcome::Certified(c) => Ok(Some(c)),
        LqOutcome::Fails { position, .. } => Err(Error::TheoremViolation(format!(
            "search produced an order failing at position {position}"
        ))),
    }
}

struct Search<'a> {
    base: &'a MonomialIdeal,
    gens: &'a [Monomial],
    dead: HashSet<u64>,
    order: Vec<usize>,
}

impl Search<'_> {
    fn dfs(&mut self, mask: u64, full: u64) -> bool {
        if mask == full {
            return true;
        }
        if self.dead.contains(&mask) {
            return false;
        }
        for k in 0..self.gens.len() {
            if mask >> k & 1 == 1 {
                continue;
            }
            let placed = (0..self.gens.len())
                .filter(|&l| mask >> l & 1 == 1)
                .map(|l| &self.gens[l]);
            let prefix = self.base.gens().iter().chain(placed);
            if step_variables(prefix, &self.gens[k]).is_some() {
                self.order.push(k);
                if self.dfs(mask | 1 << k, full) {
                    return true;
                }
                self.order.pop();
            }
        }
        self.dead.insert(mask);
        false
    }
}

/// Direction in which generators are processed for the reverse-lexicographic
/// linear-quotients test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RevlexConvention {
    /// Largest generator first (`x1 > x2 > ... > xn`).
    #[default]
    Decreasing,
    Increasing,
}

impl RevlexConvention {
    pub fn other(self) -> Self {
        match self {
            RevlexConvention::Decreasing => RevlexConvention::Increasing,
            RevlexConvention::Increasing => RevlexConvention::Decreasing,
        }
    }
}

/// `G(I)` sorted by reverse-lexicographic order in the given direction.
pub fn revlex_order(ideal: &MonomialIdeal, convention: RevlexConvention) -> Vec<Monomial> {
    let mut order = ideal.gens().to_vec();
    match convention {
        RevlexConvention::Decreasing => order.sort_by(|a, b| b.cmp_revlex(a)),
        RevlexConvention::Increasing => order.sort_by(|a, b| a.cmp_revlex(b)),
    }
    order
}

/// Linear quotients with respect to the reverse-lexicographic order of the
/// generators of an equigenerated ideal.
pub fn revlex_lq(ideal: &MonomialIdeal, convention: RevlexConvention) -> Result<LqOutcome> {
    ideal.single_degree()?;
    let order = revlex_order(ideal, convention);
    check_lq_order(&MonomialIdeal::zero(ideal.nvars()), &order)
}

/// Extend `I m` by linear quotients to `J`, for Veronese-type `I = I_(d; a)`
/// and `J = I_(d+1; b)` with `I m ⊆ J`.
///
/// First `I m` is extended to `L = I_(d+1; a_1+1, ..., a_n+1)`: the new
/// generators `u` are ordered by `|S_u|` ascending, where `S_u` is the set of
/// variables whose exponent reaches `a_i + 1`, then by the restriction of `u`
/// to `S_u` descending in lex order, then by `u` descending in lex order.
/// Then the caps are raised one unit at a time, in index order, until they
/// reach `b`; the generators added by each raise come in descending lex order.
///
/// The resulting certificate is verified; a failure is reported as
/// [`Error::TheoremViolation`].
pub fn extend_lq_veronese(
    p: &VeroneseParams,
    q: &VeroneseParams,
) -> Result<LinearQuotientsCertificate> {
    if p.nvars() != q.nvars() {
        return Err(Error::MixedNvars {
            expected: p.nvars(),
            found: q.nvars(),
        });
    }
    if q.degree() != p.degree() + 1 {
        return Err(Error::Precondition(format!(
            "target degree {} is not {} + 1",
            q.degree(),
            p.degree()
        )));
    }
    let n = p.nvars();
    let p = p.normalized();
    let q = q.normalized();
    let im = veronese(&p).product(&MonomialIdeal::maximal(n))?;
    let target = veronese(&q);
    if !im.is_subset_of(&target) {
        return Err(Error::Precondition(format!(
            "I m is not contained in I_{q}"
        )));
    }
    let mut caps: Vec<u32> = p.caps().iter().map(|a| a + 1).collect();
    if caps.iter().zip(q.caps()).any(|(c, b)| c > b) {
        return Err(Error::Precondition(format!(
            "caps of {p} plus one exceed those of {q}"
        )));
    }

    let d1 = q.degree();
    let mut appended = Vec::new();

    // first stage: I m -> L
    let mut current = veronese(&VeroneseParams::new(d1, caps.clone())?);
    let mut stage: Vec<Monomial> = current
        .gens()
        .iter()
        .filter(|u| !im.gens().contains(u))
        .cloned()
        .collect();
    stage.sort_by_key(|u| {
        let at_cap: Vec<u32> = (0..n)
            .map(|i| if u.exp(i) == caps[i] { u.exp(i) } else { 0 })
            .collect();
        let size = at_cap.iter().filter(|&&e| e > 0).count();
        (size, Reverse(at_cap), Reverse(u.exps().to_vec()))
    });
    appended.extend(stage);

    // second stage: raise one cap at a time
    for s in 0..n {
        while caps[s] < q.caps()[s] {
            caps[s] += 1;
            let next = veronese(&VeroneseParams::new(d1, caps.clone())?);
            let mut added: Vec<Monomial> = next
                .gens()
                .iter()
                .filter(|u| !current.contains(u))
                .cloned()
                .collect();
            added.sort_by(|a, b| b.cmp_lex(a));
            appended.extend(added);
            current = next;
        }
    }
    debug_assert_eq!(current, target);

    match check_lq_order(&im, &appended)? {
        LqOutcome::Certified(c) => Ok(c),
        LqOutcome::Fails { position, colon } => Err(Error::TheoremViolation(format!(
            "Veronese extension {p} -> {q} fails at {} with colon ({colon})",
            appended[position]
        ))),
    }
}

/// For an ideal all of whose components are of Veronese type, chain the
/// Veronese extensions `I_<j> m -> I_<j+1>` into a linear-quotients order of
/// `G(I)`. Returns `Ok(None)` if some component is not of Veronese type.
pub fn componentwise_veronese_lq(ideal: &MonomialIdeal) -> Result<Option<LqOutcome>> {
    ideal.require_proper_nonzero()?;
    let lo = ideal.min_degree().expect("nonzero");
    let hi = ideal.max_degree().expect("nonzero");
    let mut params = Vec::new();
    for j in lo..=hi {
        match detect_veronese(&ideal.component(j)?)? {
            Some(p) => params.push(p),
            None => return Ok(None),
        }
    }
    let first = ideal.component(lo)?;
    let mut order = match revlex_lq(&first, RevlexConvention::Decreasing)? {
        LqOutcome::Certified(c) => c.appended,
        LqOutcome::Fails { .. } => match find_lq_order(
            &MonomialIdeal::zero(ideal.nvars()),
            first.gens(),
            &Limits::default(),
        )? {
            Some(c) => c.appended,
            None => {
                return Err(Error::TheoremViolation(format!(
                    "Veronese-type ideal ({first}) without linear quotients"
                )))
            }
        },
    };
    for pair in params.windows(2) {
        let ext = extend_lq_veronese(&pair[0], &pair[1])?;
        order.extend(ext.appended);
    }
    let zero = MonomialIdeal::zero(ideal.nvars());
    if order.len() != ideal.num_gens() || !order.iter().all(|g| ideal.gens().contains(g)) {
        return Err(Error::TheoremViolation(format!(
            "chained Veronese extensions do not enumerate G({ideal})"
        )));
    }
    check_lq_order(&zero, &order).map(Some)
}
