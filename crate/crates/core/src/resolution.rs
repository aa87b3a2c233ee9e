//! Graded Betti numbers of monomial ideals.
//!
//! For a multidegree `b`, the upper Koszul complex
//! `K^b(I) = { F ⊆ supp(b) squarefree : x^(b - F) ∈ I }` has
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b(I))`. Nonzero multigraded Betti numbers only
//! occur at elements of the lcm lattice of `G(I)`, so those are the only
//! multidegrees visited.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Limits, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{rank, Characteristic};
use crate::monomial::Monomial;
use crate::polymatroid::component_range;

/// A finite simplicial complex on vertices `0..nverts`, faces stored as
/// bitmasks and closed under taking subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    nverts: usize,
    faces: BTreeSet<u64>,
}

impl SimplicialComplex {
    /// The subset-closure of `faces`. An empty iterator gives the void
    /// complex (no faces at all, not even the empty one).
    pub fn from_faces(nverts: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        assert!(nverts <= 64, "at most 64 vertices");
        let mut closed = BTreeSet::new();
        for f in faces {
            if closed.contains(&f) {
                continue;
            }
            // enumerate all submasks of f
            let mut s = f;
            loop {
                closed.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        SimplicialComplex {
            nverts,
            faces: closed,
        }
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces.contains(&face)
    }

    pub fn faces(&self) -> impl Iterator<Item = u64> + '_ {
        self.faces.iter().copied()
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<u64> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                (0..self.nverts).all(|v| f >> v & 1 == 1 || !self.faces.contains(&(f | 1 << v)))
            })
            .collect()
    }

    /// Number of faces with `s` vertices, for `s = 0, 1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for &face in &self.faces {
            let s = face.count_ones() as usize;
            if f.len() <= s {
                f.resize(s + 1, 0);
            }
            f[s] += 1;
        }
        f
    }

    /// Ranks of reduced homology: entry `s` is `dim H̃_{s-1}`, so entry 0 is
    /// the (-1)-dimensional homology, nonzero only for the complex `{∅}`.
    pub fn reduced_homology(&self, ch: Characteristic) -> Vec<usize> {
        let mut by_size: Vec<Vec<u64>> = Vec::new();
        for &face in &self.faces {
            let s = face.count_ones() as usize;
            if by_size.len() <= s {
                by_size.resize(s + 1, Vec::new());
            }
            by_size[s].push(face);
        }
        let top = by_size.len();
        // boundary_rank[s] = rank of ∂: C_s -> C_{s-1}
        let mut boundary_rank = vec![0usize; top + 1];
        for s in 1..top {
            boundary_rank[s] = boundary_rank_of(&by_size[s], &by_size[s - 1], ch);
        }
        (0..top)
            .map(|s| by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1])
            .collect()
    }
}

fn boundary_rank_of(faces: &[u64], lower: &[u64], ch: Characteristic) -> usize {
    if faces.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: BTreeMap<u64, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let rows: Vec<Vec<i64>> = faces
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; lower.len()];
            let mut pos = 0;
            for v in 0..64 {
                if f >> v & 1 == 1 {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    row[index[&(f & !(1 << v))]] = sign;
                    pos += 1;
                }
            }
            row
        })
        .collect();
    rank(&rows, ch)
}

/// The upper Koszul complex `K^b(I)`.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> SimplicialComplex {
    let n = ideal.nvars();
    let supp: u64 = (0..n).filter(|&i| b.exp(i) > 0).fold(0, |m, i| m | 1 << i);
    let mut faces = Vec::new();
    let mut s = supp;
    loop {
        let mut exps = b.exps().to_vec();
        for (i, e) in exps.iter_mut().enumerate() {
            if s >> i & 1 == 1 {
                *e -= 1;
            }
        }
        if ideal.contains(&Monomial::new(exps)) {
            faces.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & supp;
    }
    SimplicialComplex::from_faces(n, faces)
}

/// The lcm lattice of `G(I)`: all lcms of nonempty subsets of generators.
pub fn lcm_lattice(ideal: &MonomialIdeal, limits: &Limits) -> Result<Vec<Monomial>> {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = gens.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let l = a.lcm(g);
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    next.push(l);
                    if seen.len() > limits.max_lattice {
                        return Err(Error::budget("lcm lattice", seen.len(), limits.max_lattice));
                    }
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

const PARALLEL_LATTICE: usize = 256;

/// Multigraded Betti numbers: for each lattice element `b` with some nonzero
/// `β_{i,b}`, the list of `(i, β_{i,b})` pairs.
pub fn multigraded_betti(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<BTreeMap<Monomial, Vec<(usize, u64)>>> {
    ideal.require_proper_nonzero()?;
    let lattice = lcm_lattice(ideal, limits)?;
    let at = |b: Monomial| {
        let h = upper_koszul(ideal, &b).reduced_homology(ch);
        let nz: Vec<(usize, u64)> = h
            .into_iter()
            .enumerate()
            .filter(|(_, r)| *r > 0)
            .map(|(i, r)| (i, r as u64))
            .collect();
        (b, nz)
    };
    let per_b: Vec<(Monomial, Vec<(usize, u64)>)> = if lattice.len() >= PARALLEL_LATTICE {
        lattice.into_par_iter().map(at).collect()
    } else {
        lattice.into_iter().map(at).collect()
    };
    Ok(per_b.into_iter().filter(|(_, v)| !v.is_empty()).collect())
}

/// Graded Betti numbers `β_{i,j}(I)` (homological index `i` from 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
    gen_degrees: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u64,
    pub rank: u64,
}

impl BettiTable {
    pub fn from_entries(entries: BTreeMap<(usize, u64), u64>, gen_degrees: Vec<u64>) -> Self {
        let entries = entries.into_iter().filter(|(_, r)| *r > 0).collect();
        BettiTable {
            entries,
            gen_degrees,
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &rank)| BettiEntry { i, j, rank })
            .collect()
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, r)| r)
            .sum()
    }

    pub fn gen_degrees(&self) -> &[u64] {
        &self.gen_degrees
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `reg(I) = max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Option<u64> {
        self.entries.keys().map(|&(i, j)| j - i as u64).max()
    }

    /// All nonzero `β_{i,j}` on the diagonal `j = i + d`.
    pub fn is_linear(&self, d: u64) -> bool {
        self.entries.keys().all(|&(i, j)| j == i as u64 + d)
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries())
    }
}

impl std::fmt::Display for BettiTable {
    /// Macaulay2-style table: rows are `j - i`, columns are `i`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pd = self.projective_dimension();
        let lo = self
            .entries
            .keys()
            .map(|&(i, j)| j - i as u64)
            .min()
            .unwrap_or(0);
        let hi = self.regularity().unwrap_or(0);
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for r in lo..=hi {
            write!(f, "{:>5}:", r)?;
            for i in 0..=pd {
                match self.get(i, r + i as u64) {
                    0 => write!(f, "{:>6}", ".")?,
                    v => write!(f, "{v:>6}")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "{:>6}", "total:")?;
        for i in 0..=pd {
            write!(f, "{:>6}", self.total(i))?;
        }
        Ok(())
    }
}

/// Exact graded Betti table of `I` over the prime field of characteristic
/// `ch` (the rationals for 0).
pub fn betti_table(ideal: &MonomialIdeal, ch: Characteristic) -> Result<BettiTable> {
    betti_table_with(ideal, ch, &Limits::default())
}

pub fn betti_table_with(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<BettiTable> {
    let multi = multigraded_betti(ideal, ch, limits)?;
    let mut entries = BTreeMap::new();
    for (b, list) in multi {
        for (i, r) in list {
            *entries.entry((i, b.degree())).or_insert(0) += r;
        }
    }
    let gen_degrees = ideal.gens().iter().map(Monomial::degree).collect();
    Ok(BettiTable::from_entries(entries, gen_degrees))
}

/// `I` is generated in one degree `d` and `β_{i,j} = 0` unless `j = i + d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, ch: Characteristic) -> Result<bool> {
    has_linear_resolution_with(ideal, ch, &Limits::default())
}

pub fn has_linear_resolution_with(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    if !ideal.is_single_degree()? {
        return Ok(false);
    }
    let d = ideal.single_degree()?;
    Ok(betti_table_with(ideal, ch, limits)?.is_linear(d))
}

/// For `I` generated in degree `d`: `β_{1,j} = 0` for all `j ≠ d + 1`.
pub fn has_linear_relations(ideal: &MonomialIdeal, ch: Characteristic) -> Result<bool> {
    has_linear_relations_with(ideal, ch, &Limits::default())
}

pub fn has_linear_relations_with(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    limits: &Limits,
) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    let d = ideal.single_degree()?;
    let table = betti_table_with(ideal, ch, limits)?;
    Ok(table.entries().iter().all(|e| e.i != 1 || e.j == d + 1))
}

/// Outcome of the componentwise-linear check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentwiseLinear {
    pub holds: bool,
    pub failing_degree: Option<u64>,
}

/// Every component `I_<j>` has a linear resolution, for `j` from the least to
/// the greatest generator degree plus `extra_degrees`.
pub fn is_componentwise_linear(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    extra_degrees: u64,
) -> Result<ComponentwiseLinear> {
    is_componentwise_linear_with(ideal, ch, extra_degrees, &Limits::default())
}

pub fn is_componentwise_linear_with(
    ideal: &MonomialIdeal,
    ch: Characteristic,
    extra_degrees: u64,
    limits: &Limits,
) -> Result<ComponentwiseLinear> {
    ideal.require_proper_nonzero()?;
    for j in component_range(ideal, extra_degrees) {
        let comp = ideal.component(j)?;
        if !has_linear_resolution_with(&comp, ch, limits)? {
            return Ok(ComponentwiseLinear {
                holds: false,
                failing_degree: Some(j),
            });
        }
    }
    Ok(ComponentwiseLinear {
        holds: true,
        failing_degree: None,
    })
}
