//! Lexsegment ideals, Eliahou–Kervaire Betti numbers of stable monomial
//! ideals, and the consecutive-cancellation socle bound.
//!
//! Variables are ordered `x_0 > x_1 > ... > x_{n-1}`; exponent vectors compare
//! lexicographically, so the derived `Ord` on [`Monomial`] is the lex order.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Execution;
use crate::macaulay::{self, is_o_sequence, MacaulayError, OSequenceReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("not an O-sequence: h_{} = {actual} exceeds the bound {bound}", degree + 1)]
    NotOSequence { degree: usize, bound: u64, actual: u64 },
    #[error("h_1 = {h1} exceeds the number of variables {nvars}")]
    TooManyLinearForms { h1: u64, nvars: usize },
    #[error("h_{degree} = {value} exceeds dim R_{degree} = {available}")]
    ExceedsPolynomialRing { degree: usize, value: u64, available: u64 },
    #[error("ideal is not stable: x_{i} * {generator} / x_{max} is not in the ideal")]
    NotStable { generator: Monomial, i: usize, max: usize },
    #[error("monomial has {found} exponents, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("at least one variable is required")]
    NoVariables,
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

pub type Result<T> = std::result::Result<T, LexError>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    /// Largest index of a variable dividing this monomial.
    pub fn max_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `n` variables, in descending lex order.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left as u16;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// `dim R_d = C(n + d - 1, d)`.
pub fn ring_dim(n: usize, d: usize) -> Result<u64> {
    if n == 0 {
        return Ok(u64::from(d == 0));
    }
    Ok(macaulay::binomial((n + d - 1) as u64, d as u64)?)
}

/// A monomial ideal given by its minimal generators, sorted by degree and
/// then in descending lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens`.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(LexError::NoVariables);
        }
        if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(LexError::ArityMismatch {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        let mut gens = gens;
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        Ok(MonomialIdeal {
            nvars,
            generators: minimal,
        })
    }

    pub fn unit(nvars: usize) -> Result<Self> {
        MonomialIdeal::new(nvars, vec![Monomial::one(nvars)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn generators_of_degree(&self, d: usize) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter(move |g| g.degree() == d)
    }

    pub fn max_generator_degree(&self) -> Option<usize> {
        self.generators.iter().map(Monomial::degree).max()
    }
}

/// The lex ideal whose quotient has Hilbert function `h` (zero past the list).
pub fn lex_ideal(h: &[u64], nvars: usize) -> Result<MonomialIdeal> {
    lex_ideal_with(h, nvars, Execution::default())
}

pub fn lex_ideal_with(h: &[u64], nvars: usize, exec: Execution) -> Result<MonomialIdeal> {
    if nvars == 0 {
        return Err(LexError::NoVariables);
    }
    if let OSequenceReport::Violation {
        degree,
        bound,
        actual,
    } = is_o_sequence(h)?
    {
        return Err(LexError::NotOSequence {
            degree,
            bound,
            actual,
        });
    }
    if let Some(&h1) = h.get(1) {
        if h1 > nvars as u64 {
            return Err(LexError::TooManyLinearForms { h1, nvars });
        }
    }
    let mut gens = Vec::new();
    let mut previous: HashSet<Monomial> = HashSet::new();
    for d in 1..=h.len() {
        let target = h.get(d).copied().unwrap_or(0);
        let all = monomials_of_degree(nvars, d);
        let available = all.len() as u64;
        if target > available {
            return Err(LexError::ExceedsPolynomialRing {
                degree: d,
                value: target,
                available,
            });
        }
        let segment = &all[..(available - target) as usize];
        let fresh = exec.filter(segment, |m| {
            !(0..nvars).any(|i| m.div_var(i).is_some_and(|q| previous.contains(&q)))
        });
        gens.extend(fresh);
        previous = segment.iter().cloned().collect();
    }
    MonomialIdeal::new(nvars, gens)
}

/// Adds every degree-`(d+1)` monomial, so the quotient vanishes past `d`.
pub fn truncate_ideal(ideal: &MonomialIdeal, d: usize) -> MonomialIdeal {
    let n = ideal.nvars;
    let mut gens: Vec<Monomial> = ideal
        .generators
        .iter()
        .filter(|g| g.degree() <= d + 1)
        .cloned()
        .collect();
    gens.extend(
        monomials_of_degree(n, d + 1)
            .into_iter()
            .filter(|m| !ideal.contains(m)),
    );
    MonomialIdeal::new(n, gens).expect("arity is preserved")
}

/// `h_t` = number of degree-`t` monomials outside the ideal, `t = 0..=up_to`.
pub fn hf_of_monomial_ideal(ideal: &MonomialIdeal, up_to: usize) -> Vec<u64> {
    hf_of_monomial_ideal_with(ideal, up_to, Execution::default())
}

pub fn hf_of_monomial_ideal_with(ideal: &MonomialIdeal, up_to: usize, exec: Execution) -> Vec<u64> {
    (0..=up_to)
        .map(|t| {
            let all = monomials_of_degree(ideal.nvars, t);
            exec.count(&all, |m| !ideal.contains(m)) as u64
        })
        .collect()
}

/// `Ok(())` when `x_i * u / x_max(u)` lies in the ideal for every generator
/// `u` and every `i < max(u)`; otherwise the first failing witness.
pub fn is_stable(ideal: &MonomialIdeal) -> Result<()> {
    for u in &ideal.generators {
        let Some(max) = u.max_index() else { continue };
        let q = u.div_var(max).expect("x_max divides u");
        for i in 0..max {
            if !ideal.contains(&q.times_var(i)) {
                return Err(LexError::NotStable {
                    generator: u.clone(),
                    i,
                    max,
                });
            }
        }
    }
    Ok(())
}

/// Graded Betti numbers `beta_{i,j}` of a quotient `R/I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiJson", try_from = "BettiJson")]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    nvars: usize,
    betti: Vec<(usize, usize, u64)>,
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> Self {
        BettiJson {
            nvars: t.nvars,
            betti: t.entries.into_iter().map(|((i, j), v)| (i, j, v)).collect(),
        }
    }
}

impl TryFrom<BettiJson> for BettiTable {
    type Error = String;
    fn try_from(j: BettiJson) -> std::result::Result<Self, String> {
        let mut t = BettiTable::empty(j.nvars);
        for (i, jj, v) in j.betti {
            if i > j.nvars {
                return Err(format!("homological index {i} exceeds nvars {}", j.nvars));
            }
            t.add(i, jj, v);
        }
        Ok(t)
    }
}

impl BettiTable {
    pub fn empty(nvars: usize) -> Self {
        BettiTable {
            nvars,
            entries: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, j, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((ii, _), _)| *ii == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `sum_i (-1)^i beta_{i,j}` for every `j` with a nonzero entry.
    pub fn k_polynomial(&self) -> BTreeMap<usize, i64> {
        let mut k = BTreeMap::new();
        for (&(i, j), &v) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *k.entry(j).or_insert(0) += sign * v as i64;
        }
        k.retain(|_, v| *v != 0);
        k
    }
}

impl fmt::Display for BettiTable {
    /// Columns are homological degrees, rows are `j - i`; zeros print as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero table)");
        }
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let rows: Vec<usize> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
            let hi = self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let cell = |i: usize, r: usize| match self.get(i, i + r) {
            0 => ".".to_string(),
            v => v.to_string(),
        };
        let width = (0..=max_i)
            .flat_map(|i| rows.iter().map(move |&r| (i, r)))
            .map(|(i, r)| cell(i, r).len())
            .chain((0..=max_i).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows.iter().map(|r| r.to_string().len()).max().unwrap_or(1) + 1;
        write!(f, "{:>label$}", "")?;
        for i in 0..=max_i {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        for &r in &rows {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for i in 0..=max_i {
                write!(f, " {:>width$}", cell(i, r))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Eliahou–Kervaire resolution numbers of a stable ideal, reported for the
/// quotient: each generator `u` contributes `C(max(u), i)` to
/// `beta_{i+1, i+1+deg u}(R/I)`, with 0-based `max(u)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    ek_betti_with(ideal, Execution::default())
}

pub fn ek_betti_with(ideal: &MonomialIdeal, exec: Execution) -> Result<BettiTable> {
    is_stable(ideal)?;
    let mut table = BettiTable::empty(ideal.nvars);
    if ideal.generators.iter().any(|g| g.degree() == 0) {
        return Ok(table);
    }
    table.add(0, 0, 1);
    // Histogram of (degree, max index) pairs.
    let keys = exec.map(&ideal.generators, |g| (g.degree(), g.max_index().unwrap_or(0)));
    let mut hist: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for k in keys {
        *hist.entry(k).or_insert(0) += 1;
    }
    for ((deg, m), count) in hist {
        for i in 0..=m {
            let c = macaulay::binomial(m as u64, i as u64)?;
            table.add(i + 1, i + deg, c * count);
        }
    }
    Ok(table)
}

/// `max(0, beta_{i,j} - beta_{i-1,j} - beta_{i+1,j})`: what survives any
/// sequence of consecutive cancellations at internal degree `j`.
pub fn cancellation_socle_lower_bound(table: &BettiTable, i: usize, j: usize) -> u64 {
    let below = if i == 0 { 0 } else { table.get(i - 1, j) };
    table
        .get(i, j)
        .saturating_sub(below)
        .saturating_sub(table.get(i + 1, j))
}

/// Socle monomials of an artinian monomial quotient, counted by degree.
pub fn socle_dimensions(ideal: &MonomialIdeal, up_to: usize) -> Vec<u64> {
    (0..=up_to)
        .map(|t| {
            monomials_of_degree(ideal.nvars, t)
                .iter()
                .filter(|m| {
                    !ideal.contains(m) && (0..ideal.nvars).all(|i| ideal.contains(&m.times_var(i)))
                })
                .count() as u64
        })
        .collect()
}

/// Codimension of `R_1 * L` in degree `d + 1`, where `L` is the lex segment
/// of degree `d` leaving exactly `r` monomials outside.
///
/// A degree-`(d+1)` monomial `m` avoids `R_1 * L` exactly when
/// `m / x_max(m)` is outside `L`, so the count is `sum (n - max(c))` over the
/// `r` lex-smallest monomials `c`.
pub fn lex_segment_growth(r: u64, d: usize, nvars: usize) -> Result<u64> {
    let all = monomials_of_degree(nvars, d);
    if r > all.len() as u64 {
        return Err(LexError::ExceedsPolynomialRing {
            degree: d,
            value: r,
            available: all.len() as u64,
        });
    }
    Ok(all[all.len() - r as usize..]
        .iter()
        .map(|c| (nvars - c.max_index().unwrap_or(0)) as u64)
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_order_is_descending() {
        let ms = monomials_of_degree(3, 2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], m(&[2, 0, 0]));
        assert_eq!(ms[1], m(&[1, 1, 0]));
        assert_eq!(ms[5], m(&[0, 0, 2]));
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn small_lex_ideals() {
        let i = lex_ideal(&[1, 2, 1], 2).unwrap();
        assert_eq!(i.generators(), &[m(&[2, 0]), m(&[1, 1]), m(&[0, 3])]);
        let i = lex_ideal(&[1, 1, 1], 1).unwrap();
        assert_eq!(i.generators(), &[m(&[3])]);
        assert_eq!(hf_of_monomial_ideal(&i, 4), vec![1, 1, 1, 0, 0]);
    }

    #[test]
    fn lex_rejects_bad_input() {
        assert!(matches!(lex_ideal(&[1, 2, 4], 3), Err(LexError::NotOSequence { .. })));
        assert!(matches!(lex_ideal(&[1, 3], 2), Err(LexError::TooManyLinearForms { .. })));
        assert!(lex_ideal(&[2], 2).is_err());
    }

    #[test]
    fn truncation() {
        let x = MonomialIdeal::new(1, vec![m(&[1])]).unwrap();
        assert_eq!(truncate_ideal(&x, 1), x);
        let i = MonomialIdeal::new(2, vec![m(&[2, 0])]).unwrap();
        let t = truncate_ideal(&i, 2);
        assert_eq!(hf_of_monomial_ideal(&t, 4), vec![1, 2, 2, 0, 0]);
    }

    #[test]
    fn unit_ideal() {
        let u = MonomialIdeal::unit(3).unwrap();
        assert_eq!(hf_of_monomial_ideal(&u, 2), vec![0, 0, 0]);
        assert_eq!(ek_betti(&u).unwrap().entries().count(), 0);
    }

    #[test]
    fn minimalization() {
        let i = MonomialIdeal::new(2, vec![m(&[2, 1]), m(&[1, 0]), m(&[1, 0])]).unwrap();
        assert_eq!(i.generators(), &[m(&[1, 0])]);
        assert!(MonomialIdeal::new(2, vec![m(&[1])]).is_err());
    }

    #[test]
    fn stability() {
        let i = MonomialIdeal::new(2, vec![m(&[0, 2])]).unwrap();
        assert!(matches!(is_stable(&i), Err(LexError::NotStable { i: 0, max: 1, .. })));
        assert!(is_stable(&lex_ideal(&[1, 3, 4, 2], 3).unwrap()).is_ok());
    }

    #[test]
    fn square_of_maximal_ideal() {
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]).unwrap();
        let b = ek_betti(&i).unwrap();
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(b.get(1, 2), 3);
        assert_eq!(b.get(2, 3), 2);
        assert_eq!(b.entries().count(), 3);
    }

    #[test]
    fn cancellation_bound() {
        let mut t = BettiTable::empty(3);
        t.add(2, 4, 5);
        t.add(1, 4, 2);
        t.add(3, 4, 1);
        assert_eq!(cancellation_socle_lower_bound(&t, 2, 4), 2);
        assert_eq!(cancellation_socle_lower_bound(&t, 0, 4), 0);
        t.add(1, 4, 10);
        assert_eq!(cancellation_socle_lower_bound(&t, 2, 4), 0);
    }

    #[test]
    fn betti_json_shape() {
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]).unwrap();
        let b = ek_betti(&i).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"nvars":2,"betti":[[0,0,1],[1,2,3],[2,3,2]]}"#);
        let back: BettiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn betti_display() {
        let i = MonomialIdeal::new(2, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]).unwrap();
        let text = ek_betti(&i).unwrap().to_string();
        assert_eq!(text, "   0 1 2\n0: 1 . .\n1: . 3 2\n");
    }

    #[test]
    fn segment_growth_small() {
        // Two variables, degree 2, leaving y^2 and xy: growth to xy^2, y^3.
        assert_eq!(lex_segment_growth(2, 2, 2).unwrap(), 2);
        assert_eq!(lex_segment_growth(3, 1, 3).unwrap(), 6);
    }
}
