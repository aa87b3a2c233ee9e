//! Monomial ideals in canonical form and their arithmetic.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, VarSubset};

/// A monomial ideal, stored as its minimal generating set `G(I)` in canonical
/// order. Two values are equal exactly when the ideals are equal.
///
/// The zero ideal has no generators; the unit ideal has the single generator 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The maximal ideal `m = (x1, ..., xn)`.
    pub fn maximal(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: (0..nvars).map(|i| Monomial::var(nvars, i)).collect(),
        }
        .canonical()
    }

    /// The monomial prime generated by the variables in `set`.
    pub fn prime(nvars: usize, set: &VarSubset) -> Self {
        MonomialIdeal {
            nvars,
            gens: set.iter().map(|i| Monomial::var(nvars, i)).collect(),
        }
        .canonical()
    }

    /// `m^k`.
    pub fn maximal_power(nvars: usize, k: u32) -> Self {
        MonomialIdeal {
            nvars,
            gens: monomials_of_degree(nvars, k),
        }
    }

    /// Minimalize an arbitrary generating set: keep the divisibility-minimal
    /// elements, deduplicate, sort canonically.
    pub fn minimalize(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::NoVariables);
        }
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::MixedNvars {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        all.sort();
        all.dedup();
        Ok(MonomialIdeal {
            nvars,
            gens: minimal_elements(all),
        })
    }

    /// Minimalize a generating set whose first element fixes the number of
    /// variables.
    pub fn from_gens(gens: Vec<Monomial>) -> Result<Self> {
        let n = gens.first().map(|g| g.nvars()).ok_or(Error::NoVariables)?;
        Self::minimalize(n, gens)
    }

    fn from_minimal_unchecked(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { nvars, gens }.canonical()
    }

    fn canonical(mut self) -> Self {
        self.gens.sort();
        self
    }

    fn minimal_from(&self, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        MonomialIdeal {
            nvars: self.nvars,
            gens: minimal_elements(all),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Errors on the zero and the unit ideal.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, w: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(w))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.gens.last().map(Monomial::degree)
    }

    /// Distinct generator degrees, ascending.
    pub fn degrees(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.gens.iter().map(Monomial::degree).collect();
        set.into_iter().collect()
    }

    /// True iff all minimal generators have the same degree. The unit ideal
    /// counts (degree 0); the zero ideal is rejected.
    pub fn is_single_degree(&self) -> Result<bool> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => Ok(lo == hi),
            _ => Err(Error::ZeroIdeal),
        }
    }

    /// Degree of the generators if the ideal is equigenerated.
    pub fn single_degree(&self) -> Result<u64> {
        if self.is_single_degree()? {
            Ok(self.gens[0].degree())
        } else {
            Err(Error::NotSingleDegree)
        }
    }

    /// lcm of all minimal generators (1 for the zero ideal).
    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    /// gcd of all minimal generators.
    pub fn gcd(&self) -> Option<Monomial> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.gcd(g)))
    }

    fn check_nvars(&self, n: usize) -> Result<()> {
        if n != self.nvars {
            Err(Error::MixedNvars {
                expected: self.nvars,
                found: n,
            })
        } else {
            Ok(())
        }
    }

    /// `I : u`.
    pub fn colon(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_nvars(u.nvars())?;
        Ok(self.minimal_from(self.gens.iter().map(|v| v.colon(u))))
    }

    /// `I : J` for a monomial ideal `J`, the intersection of `I : v` over
    /// `v ∈ G(J)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_nvars(other.nvars)?;
        let mut acc = MonomialIdeal::unit(self.nvars);
        for v in &other.gens {
            acc = acc.intersect(&self.colon(v)?)?;
        }
        Ok(acc)
    }

    /// `I : u^∞`, found by iterating `I : u^k` until the chain stabilizes.
    pub fn saturate(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_nvars(u.nvars())?;
        let mut current = self.colon(u)?;
        let mut power = u.clone();
        loop {
            power = power.try_mul(u)?;
            let next = self.colon(&power)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Monomial localization: substitute the variables in `ones` by 1. The
    /// result is the localization at the prime generated by the remaining
    /// variables.
    pub fn localize(&self, ones: &VarSubset) -> Result<MonomialIdeal> {
        if let Some(i) = ones.max_index() {
            if i >= self.nvars {
                return Err(Error::VariableOutOfRange {
                    index: i + 1,
                    nvars: self.nvars,
                });
            }
        }
        Ok(self.minimal_from(self.gens.iter().map(|g| g.dehomogenize(ones))))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_nvars(other.nvars)?;
        Ok(self.minimal_from(self.gens.iter().chain(&other.gens).cloned()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_nvars(other.nvars)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.try_mul(b)?);
            }
        }
        Ok(self.minimal_from(prods))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_nvars(other.nvars)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        Ok(self.minimal_from(lcms))
    }

    pub fn combine(&self, op: CombineOp, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        match op {
            CombineOp::Sum => self.sum(other),
            CombineOp::Product => self.product(other),
            CombineOp::Intersect => self.intersect(other),
        }
    }

    /// `I^k` for `k >= 1`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::Precondition(
                "power exponent must be positive".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I_<j>`: the ideal generated by the degree-`j` monomials of `I`.
    pub fn component(&self, j: u64) -> Result<MonomialIdeal> {
        let mut out = BTreeSet::new();
        for v in &self.gens {
            let dv = v.degree();
            if dv > j {
                continue;
            }
            let extra = u32::try_from(j - dv).map_err(|_| Error::ExponentOverflow)?;
            for w in monomials_of_degree(self.nvars, extra) {
                out.insert(v.try_mul(&w)?);
            }
        }
        // equigenerated, so the set is already an antichain
        Ok(MonomialIdeal::from_minimal_unchecked(
            self.nvars,
            out.into_iter().collect(),
        ))
    }

    /// `u` replaced by its componentwise minimum with `lcm(G(I))`. The colon
    /// `I : u` only depends on this capped monomial.
    pub fn cap(&self, u: &Monomial) -> Monomial {
        u.cap(&self.lcm())
    }

    /// All divisors of `lcm(G(I))`: a complete set of representatives for the
    /// colon ideals `I : u`.
    pub fn capped_divisors(&self) -> Vec<Monomial> {
        self.lcm().divisors()
    }

    /// Ideal generated by the generators that satisfy `pred`.
    pub fn filter_gens(&self, pred: impl Fn(&Monomial) -> bool) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: self.gens.iter().filter(|g| pred(g)).cloned().collect(),
        }
    }

    /// Parse the textual ideal grammar, e.g. `"x1^2*x2, x3"`.
    ///
    /// ```text
    /// ideal := gen (',' gen)*     (or empty for the zero ideal)
    /// gen   := '1' | term ('*' term)*
    /// term  := 'x' INT ('^' INT)?
    /// ```
    pub fn parse(text: &str, nvars: usize) -> Result<MonomialIdeal> {
        if nvars == 0 {
            return Err(Error::NoVariables);
        }
        let gens = Parser::new(text, nvars).ideal()?;
        Self::minimalize(nvars, gens)
    }
}

/// Keep the divisibility-minimal elements of a canonically sorted, deduplicated
/// list. Divisors precede their multiples in canonical order.
fn minimal_elements(sorted: Vec<Monomial>) -> Vec<Monomial> {
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CombineOp {
    Sum,
    Product,
    Intersect,
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl serde::Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, nvars: usize) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            nvars,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn ideal(&mut self) -> Result<Vec<Monomial>> {
        let mut gens = Vec::new();
        if self.peek().is_none() {
            return Ok(gens);
        }
        loop {
            gens.push(self.gen()?);
            match self.peek() {
                None => return Ok(gens),
                Some(b',') => self.pos += 1,
                Some(c) => {
                    return self.err(format!(
                        "expected ',' or end of input, found '{}'",
                        c as char
                    ))
                }
            }
        }
    }

    fn gen(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.nvars];
        if self.peek() == Some(b'1') {
            let start = self.pos;
            let n = self.int()?;
            if n != 1 {
                self.pos = start;
                return self.err("the only numeric generator is 1");
            }
            return Ok(Monomial::new(exps));
        }
        loop {
            let (var, e) = self.term()?;
            exps[var] = exps[var].checked_add(e).ok_or(Error::ExponentOverflow)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(Monomial::new(exps));
            }
        }
    }

    fn term(&mut self) -> Result<(usize, u32)> {
        match self.peek() {
            Some(b'x') => self.pos += 1,
            Some(c) => return self.err(format!("expected variable 'x', found '{}'", c as char)),
            None => return self.err("expected variable, found end of input"),
        }
        let at = self.pos;
        let index = self.int()? as usize;
        if index > self.nvars {
            self.pos = at;
            return Err(Error::VariableOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.int()?
        } else {
            1
        };
        let e = u32::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        Ok((index - 1, e))
    }

    /// A positive decimal integer.
    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a positive integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<u64>() {
            Ok(0) => {
                self.pos = start;
                self.err("integers must be positive")
            }
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("integer too large")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, n).unwrap()
    }

    fn mono(s: &str, n: usize) -> Monomial {
        ideal(s, n).gens()[0].clone()
    }

    /// Independent membership oracle for `w ∈ I : u`, checked on every
    /// monomial of degree at most `bound`.
    fn assert_colon_contract(i: &MonomialIdeal, u: &Monomial, result: &MonomialIdeal, bound: u32) {
        for d in 0..=bound {
            for w in monomials_of_degree(i.nvars(), d) {
                assert_eq!(
                    result.contains(&w),
                    i.contains(&w.try_mul(u).unwrap()),
                    "w = {w}, u = {u}, I = {i:?}"
                );
            }
        }
    }

    #[test]
    fn parse_examples() {
        let i = ideal("x1*x2, x1*x3^2, x2*x3^2", 3);
        assert_eq!(i.to_string(), "x1*x2, x1*x3^2, x2*x3^2");
        assert_eq!(ideal("x1, x1^2", 2).to_string(), "x1");
        assert!(ideal("", 3).is_zero());
        assert!(ideal("  ", 3).is_zero());
        assert!(ideal("1, x2", 3).is_unit());
        assert_eq!(ideal(" x2 ^ 2 * x1 ,x1*x1", 2).to_string(), "x1^2, x1*x2^2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            MonomialIdeal::parse("x1*x4", 3),
            Err(Error::VariableOutOfRange { index: 4, nvars: 3 })
        ));
        assert!(matches!(
            MonomialIdeal::parse("x1,", 3),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("x0", 3),
            Err(Error::Parse { pos: 1, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("x1^0", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("y1", 3),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("2", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("x1 x2", 3),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("x1", 0),
            Err(Error::NoVariables)
        ));
    }

    #[test]
    fn minimalize_examples() {
        let gens = ["x1*x2", "x1^2*x2", "x2^3"].map(|s| mono(s, 2));
        let i = MonomialIdeal::minimalize(2, gens).unwrap();
        assert_eq!(i.to_string(), "x1*x2, x2^3");

        let i = MonomialIdeal::minimalize(2, [Monomial::one(2), mono("x1", 2)]).unwrap();
        assert!(i.is_unit());

        let i = ideal("x1*x3^2, x1^2*x3, x1*x2*x3, x2^2*x3", 3);
        assert_eq!(i.num_gens(), 4);

        let err = MonomialIdeal::minimalize(2, [Monomial::one(2), Monomial::one(3)]);
        assert_eq!(
            err,
            Err(Error::MixedNvars {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn colon_examples() {
        let i = ideal("x1^2, x1*x2, x3^2, x2*x3", 3);
        let u = mono("x2", 3);
        let c = i.colon(&u).unwrap();
        assert_eq!(c, ideal("x1, x3", 3));
        assert_colon_contract(&i, &u, &c, 4);

        assert_eq!(i.colon(&Monomial::one(3)).unwrap(), i);

        let i = ideal("x1*x2, x1*x3^2, x2*x3^2", 3);
        let u = mono("x3", 3);
        let c = i.colon(&u).unwrap();
        assert_eq!(c, ideal("x1*x2, x1*x3, x2*x3", 3));
        assert_colon_contract(&i, &u, &c, 4);
    }

    #[test]
    fn saturate_examples() {
        let i = ideal("x1*x2^2, x3", 3);
        assert_eq!(i.saturate(&mono("x2", 3)).unwrap(), ideal("x1, x3", 3));
        assert_eq!(i.saturate(&Monomial::one(3)).unwrap(), i);

        let i = ideal("x1*x2*x3, x2*x3*x4, x3*x5*x6", 6);
        assert_eq!(
            i.saturate(&mono("x4", 6)).unwrap(),
            ideal("x2*x3, x3*x5*x6", 6)
        );
    }

    #[test]
    fn localize_examples() {
        let i = ideal("x1*x2*x3, x2*x3*x4, x3*x5*x6", 6);
        let c = VarSubset::from_one_based(&[4], 6).unwrap();
        assert_eq!(i.localize(&c).unwrap().to_string(), "x2*x3, x3*x5*x6");
        assert_eq!(i.localize(&VarSubset::empty()).unwrap(), i);

        let base = ideal("x1^2, x2^2*x3, x1*x2*x3, x1*x2^2, x1*x3^3, x2*x3^3", 3);
        let comp = base.power(2).unwrap().component(6).unwrap();
        let c = VarSubset::from_one_based(&[3], 3).unwrap();
        let loc = comp.localize(&c).unwrap();
        assert_eq!(loc, ideal("x1*x2^3, x2^4, x1^2*x2, x1^3", 3));
        assert!(!loc.is_single_degree().unwrap());
    }

    /// Both-ways membership check on all monomials up to `bound`.
    fn same_membership(a: &MonomialIdeal, b: impl Fn(&Monomial) -> bool, bound: u32) {
        for d in 0..=bound {
            for w in monomials_of_degree(a.nvars(), d) {
                assert_eq!(a.contains(&w), b(&w), "w = {w}");
            }
        }
    }

    #[test]
    fn combine_examples() {
        let p12 = ideal("x1, x2", 3);
        let p13 = ideal("x1, x3", 3);
        let p23 = ideal("x2, x3", 3);
        let i = p12.intersect(&p13).unwrap().intersect(&p23).unwrap();
        assert_eq!(i, ideal("x1*x2, x1*x3, x2*x3", 3));
        same_membership(
            &i,
            |w| p12.contains(w) && p13.contains(w) && p23.contains(w),
            2,
        );

        let a = ideal("x1, x2", 4);
        let b = ideal("x3, x4", 4);
        let p = a.product(&b).unwrap();
        assert_eq!(p, ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4));

        assert_eq!(i.power(1).unwrap(), i);
        assert!(i.power(0).is_err());
        assert_eq!(a.sum(&b).unwrap(), MonomialIdeal::maximal(4));
    }

    #[test]
    fn component_examples() {
        let i = ideal("x1*x2, x1*x3^2, x2*x3^2", 3);
        let c = i.component(3).unwrap();
        assert_eq!(c, ideal("x1^2*x2, x1*x2^2, x1*x2*x3, x1*x3^2, x2*x3^2", 3));
        // oracle: the degree-3 monomials of I are exactly those of I_<3>
        for w in monomials_of_degree(3, 3) {
            assert_eq!(c.contains(&w), i.contains(&w), "w = {w}");
        }
        assert!(c.gens().iter().all(|g| g.degree() == 3));

        assert!(i.component(0).unwrap().is_zero());
        let p = ideal("x1*x2", 2);
        assert_eq!(p.component(2).unwrap(), p);
    }

    #[test]
    fn single_degree() {
        assert!(ideal("x1^2, x1*x2, x3^2, x2*x3", 3)
            .is_single_degree()
            .unwrap());
        assert!(!ideal("x1*x2^3, x2^4, x1^2*x2, x1^3", 3)
            .is_single_degree()
            .unwrap());
        assert!(ideal("x1^3*x2", 3).is_single_degree().unwrap());
        assert!(MonomialIdeal::unit(2).is_single_degree().unwrap());
        assert_eq!(
            MonomialIdeal::zero(2).is_single_degree(),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn colon_ideal_by_maximal() {
        let i = ideal("x1^2, x1*x2, x2^2", 2);
        let m = MonomialIdeal::maximal(2);
        assert_eq!(i.product(&m).unwrap().colon_ideal(&m).unwrap(), i);
    }
}
