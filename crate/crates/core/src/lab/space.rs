//! Finite spaces of monomial ideals, enumerated or sampled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{monomials_of_degree, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SpaceMode {
    /// Every antichain of candidate monomials, each exactly once.
    Exhaustive,
    /// `count` generator sets drawn from a seeded generator; ideal `k` uses
    /// stream `k`, so each ideal is reproducible on its own.
    Sampled { count: usize },
}

/// Ideals generated by at most `max_gens` monomials of degree
/// `1..=max_degree` in `nvars` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealSpace {
    pub nvars: usize,
    pub max_degree: u32,
    pub max_gens: usize,
    /// Restrict generators to squarefree monomials.
    pub squarefree: bool,
    #[serde(flatten)]
    pub mode: SpaceMode,
    pub seed: u64,
}

impl IdealSpace {
    pub fn exhaustive(nvars: usize, max_degree: u32, max_gens: usize) -> Self {
        IdealSpace {
            nvars,
            max_degree,
            max_gens,
            squarefree: false,
            mode: SpaceMode::Exhaustive,
            seed: 0,
        }
    }

    pub fn sampled(
        nvars: usize,
        max_degree: u32,
        max_gens: usize,
        count: usize,
        seed: u64,
    ) -> Self {
        IdealSpace {
            nvars,
            max_degree,
            max_gens,
            squarefree: false,
            mode: SpaceMode::Sampled { count },
            seed,
        }
    }

    /// All squarefree monomial ideals in `nvars` variables (other than the
    /// zero and unit ideals).
    pub fn squarefree(nvars: usize) -> Self {
        IdealSpace {
            nvars,
            max_degree: nvars as u32,
            max_gens: usize::MAX,
            squarefree: true,
            mode: SpaceMode::Exhaustive,
            seed: 0,
        }
    }

    /// Candidate generators, canonically sorted.
    pub fn candidates(&self) -> Vec<Monomial> {
        (1..=self.max_degree)
            .flat_map(|d| monomials_of_degree(self.nvars, d))
            .filter(|m| !self.squarefree || m.is_squarefree())
            .collect()
    }

    /// Upper bound on the number of generator sets an exhaustive run visits:
    /// `sum_{k <= max_gens} C(N, k)`, saturating.
    pub fn enumeration_bound(&self) -> usize {
        let n = self.candidates().len();
        let mut total = 0usize;
        let mut binom = 1usize;
        for k in 1..=self.max_gens.min(n) {
            binom = binom.saturating_mul(n - k + 1) / k;
            total = total.saturating_add(binom);
        }
        total
    }

    pub fn ideals(&self, limits: &Limits) -> Result<Vec<MonomialIdeal>> {
        if self.nvars == 0 {
            return Err(Error::NoVariables);
        }
        if self.max_degree == 0 || self.max_gens == 0 {
            return Err(Error::Precondition("empty ideal space".into()));
        }
        match self.mode {
            SpaceMode::Exhaustive => {
                let bound = self.enumeration_bound();
                if bound > limits.max_enumeration {
                    return Err(Error::budget(
                        "exhaustive ideal space",
                        bound,
                        limits.max_enumeration,
                    ));
                }
                Ok(self.antichains())
            }
            SpaceMode::Sampled { count } => Ok((0..count).map(|k| self.sample(k as u64)).collect()),
        }
    }

    fn antichains(&self) -> Vec<MonomialIdeal> {
        let cands = self.candidates();
        let mut out = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        self.extend(&cands, 0, &mut chosen, &mut out);
        out
    }

    fn extend(
        &self,
        cands: &[Monomial],
        from: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<MonomialIdeal>,
    ) {
        for k in from..cands.len() {
            let m = &cands[k];
            if chosen
                .iter()
                .any(|&c| cands[c].divides(m) || m.divides(&cands[c]))
            {
                continue;
            }
            chosen.push(k);
            let gens = chosen.iter().map(|&c| cands[c].clone());
            out.push(
                MonomialIdeal::minimalize(self.nvars, gens).expect("same number of variables"),
            );
            if chosen.len() < self.max_gens {
                self.extend(cands, k + 1, chosen, out);
            }
            chosen.pop();
        }
    }

    /// The `index`-th sampled ideal.
    pub fn sample(&self, index: u64) -> MonomialIdeal {
        let cands = self.candidates();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        let count = rng.random_range(1..=self.max_gens.min(cands.len()).max(1));
        let gens: Vec<Monomial> = (0..count)
            .map(|_| cands[rng.random_range(0..cands.len())].clone())
            .collect();
        MonomialIdeal::minimalize(self.nvars, gens).expect("same number of variables")
    }
}
