//! Monomials as exponent vectors, and sets of variables.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x1^e1 * ... * xn^en`, stored as its exponent vector.
///
/// The `Ord` impl is the canonical generator order used everywhere in the
/// crate: total degree ascending, then lexicographically descending exponent
/// vectors (so `x1*x2` precedes `x1*x3` precedes `x2*x3`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        debug_assert!(!exps.is_empty(), "monomials need at least one variable");
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The variable `x_{index+1}` (indices are 0-based).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial::new(exps)
    }

    /// `x_C`, the product of the variables in `set`.
    pub fn product_of(nvars: usize, set: &VarSubset) -> Self {
        let mut exps = vec![0; nvars];
        for i in set.iter() {
            exps[i] = 1;
        }
        Monomial::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Index of the variable if this monomial is a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// `Some(i)` if this is a pure power `x_i^e` with `e >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nz = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nz.next(), nz.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    pub fn support(&self) -> VarSubset {
        VarSubset::from_iter(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(zip_with(&self.exps, &other.exps, |a, b| a.min(b)))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(zip_with(&self.exps, &other.exps, |a, b| a.max(b)))
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(zip_with(&self.exps, &other.exps, |a, b| {
            a.saturating_sub(b)
        }))
    }

    /// Exact quotient, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.colon(other))
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial::new(exps))
    }

    pub fn try_pow(&self, k: u32) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for a in &self.exps {
            exps.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial::new(exps))
    }

    /// Multiply by a single variable.
    pub fn times_var(&self, i: usize) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps[i] = exps[i].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial::new(exps))
    }

    /// Divide by a single variable, if it divides.
    pub fn over_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial::new(exps))
    }

    /// Zero out the exponents of the variables in `set` (substitute them by 1).
    pub fn dehomogenize(&self, set: &VarSubset) -> Monomial {
        let mut exps = self.exps.clone();
        for i in set.iter() {
            exps[i] = 0;
        }
        Monomial::new(exps)
    }

    /// Componentwise minimum with `cap`.
    pub fn cap(&self, cap: &Monomial) -> Monomial {
        self.gcd(cap)
    }

    /// Lexicographic comparison with `x1 > x2 > ... > xn`.
    pub fn cmp_lex(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Degree-reverse-lexicographic comparison with `x1 > x2 > ... > xn`:
    /// higher degree wins, ties are broken by the last differing exponent,
    /// where the smaller exponent is the larger monomial.
    pub fn cmp_revlex(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    /// Every monomial dividing `self`, in canonical order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Vec::with_capacity(self.nvars())];
        for &e in &self.exps {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for prefix in &out {
                for k in 0..=e {
                    let mut p: Vec<u32> = prefix.clone();
                    p.push(k);
                    next.push(p);
                }
            }
            out = next;
        }
        let mut out: Vec<Monomial> = out.into_iter().map(Monomial::new).collect();
        out.sort();
        out
    }
}

fn zip_with(a: &[u32], b: &[u32], f: impl Fn(u32, u32) -> u32) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All monomials of total degree `degree` in `nvars` variables, in canonical
/// order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill_compositions(&mut exps, 0, degree, &mut out);
    out.sort();
    out
}

fn fill_compositions(exps: &mut [u32], pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        out.push(Monomial::new(exps.to_vec()));
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill_compositions(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

/// A set of variable indices (0-based internally, printed 1-based).
///
/// Doubles as a monomial prime: the set `{i, j}` stands for `(x_i, x_j)`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSubset {
    members: BTreeSet<usize>,
}

impl VarSubset {
    pub fn empty() -> Self {
        VarSubset::default()
    }

    pub fn full(nvars: usize) -> Self {
        (0..nvars).collect()
    }

    /// Build from 1-based indices, checking each against `nvars`.
    pub fn from_one_based(indices: &[usize], nvars: usize) -> Result<Self> {
        let mut set = VarSubset::empty();
        for &i in indices {
            if i == 0 || i > nvars {
                return Err(Error::VariableOutOfRange { index: i, nvars });
            }
            set.members.insert(i - 1);
        }
        Ok(set)
    }

    /// Subset of `0..nvars` encoded by the bits of `mask`.
    pub fn from_mask(mask: u64, nvars: usize) -> Self {
        (0..nvars).filter(|&i| mask >> i & 1 == 1).collect()
    }

    pub fn insert(&mut self, i: usize) -> bool {
        self.members.insert(i)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &VarSubset) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &VarSubset) -> VarSubset {
        self.members.union(&other.members).copied().collect()
    }

    pub fn complement(&self, nvars: usize) -> VarSubset {
        (0..nvars).filter(|i| !self.contains(*i)).collect()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.members.iter().next_back().copied()
    }

    /// 1-based indices, as printed.
    pub fn one_based(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl FromIterator<usize> for VarSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VarSubset {
            members: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for VarSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for VarSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.one_based())
    }
}
