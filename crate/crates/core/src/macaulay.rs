//! Binomial expansions and the Macaulay/Green growth bounds.
//!
//! Every nonnegative integer `r` has a unique `i`-binomial expansion
//!
//! ```text
//! r = C(t_i, i) + C(t_{i-1}, i-1) + ... + C(t_j, j),   t_i > t_{i-1} > ... > t_j >= j >= 1
//! ```
//!
//! found greedily. Shifting every term by `(a, b)` gives `sum C(t_k + b, k + a)`
//! with `C(m, c) = 0` whenever `m < c` or `c < 0`. The Macaulay bound on the
//! next Hilbert function value is the `(+1, +1)` shift and the Green bound on a
//! general hyperplane restriction is the `(0, -1)` shift.
//!
//! Values are `u64`; binomials are evaluated with checked `u128` intermediates
//! and any result that does not fit is reported as [`MacaulayError::Overflow`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MacaulayError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("the empty expansion has no last term")]
    EmptyExpansion,
    #[error("sequence must be non-empty and start with h_0 = 1")]
    BadLeadingEntry,
    #[error("degree {index} is out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("binomial coefficient does not fit in 64 bits")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, MacaulayError>;

/// `C(m, c)` for nonnegative arguments, zero when `m < c`.
pub fn binomial(m: u64, c: u64) -> Result<u64> {
    if c > m {
        return Ok(0);
    }
    let c = c.min(m - c);
    let mut acc: u128 = 1;
    for k in 0..c {
        acc = acc * u128::from(m - k) / u128::from(k + 1);
        if acc > u128::from(u64::MAX) {
            return Err(MacaulayError::Overflow);
        }
    }
    Ok(acc as u64)
}

/// `C(m, c)` with the vanishing convention for signed arguments.
pub fn binomial_signed(m: i64, c: i64) -> Result<u64> {
    if c < 0 || m < c {
        return Ok(0);
    }
    binomial(m as u64, c as u64)
}

/// One term `C(top, bottom)` of an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(u64, usize)", into = "(u64, usize)")]
pub struct Term {
    pub top: u64,
    pub bottom: usize,
}

impl From<(u64, usize)> for Term {
    fn from((top, bottom): (u64, usize)) -> Self {
        Term { top, bottom }
    }
}

impl From<Term> for (u64, usize) {
    fn from(t: Term) -> Self {
        (t.top, t.bottom)
    }
}

/// A term after shifting, kept even when its coefficient vanished.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedTerm {
    pub top: i64,
    pub bottom: i64,
    pub value: u64,
}

/// The `degree`-binomial expansion of `value`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialExpansion {
    degree: usize,
    value: u64,
    terms: Vec<Term>,
}

impl BinomialExpansion {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Bottom index of the final term (the `j` of the expansion).
    pub fn last_bottom(&self) -> Result<usize> {
        self.terms
            .last()
            .map(|t| t.bottom)
            .ok_or(MacaulayError::EmptyExpansion)
    }

    /// Top of the final term.
    pub fn last_top(&self) -> Result<u64> {
        self.terms
            .last()
            .map(|t| t.top)
            .ok_or(MacaulayError::EmptyExpansion)
    }

    /// Top of the leading term.
    pub fn leading_top(&self) -> Result<u64> {
        self.terms
            .first()
            .map(|t| t.top)
            .ok_or(MacaulayError::EmptyExpansion)
    }

    /// Termwise shift, keeping terms whose coefficient vanished.
    pub fn shifted_terms(&self, a: i64, b: i64) -> Result<Vec<ShiftedTerm>> {
        self.terms
            .iter()
            .map(|t| {
                let top = i64::try_from(t.top)
                    .ok()
                    .and_then(|v| v.checked_add(b))
                    .ok_or(MacaulayError::Overflow)?;
                let bottom = t.bottom as i64 + a;
                Ok(ShiftedTerm {
                    top,
                    bottom,
                    value: binomial_signed(top, bottom)?,
                })
            })
            .collect()
    }

    /// `sum C(top + b, bottom + a)`.
    pub fn shift(&self, a: i64, b: i64) -> Result<u64> {
        self.shifted_terms(a, b)?
            .iter()
            .try_fold(0u64, |acc, t| acc.checked_add(t.value).ok_or(MacaulayError::Overflow))
    }

    /// Checks the structural invariants; used by tests and by deserialization
    /// consumers that accept expansions from outside.
    pub fn is_well_formed(&self) -> bool {
        let mut expected_bottom = self.degree;
        let mut prev_top = u64::MAX;
        let mut sum: u128 = 0;
        for t in &self.terms {
            if t.bottom != expected_bottom || t.bottom == 0 || t.top < t.bottom as u64 {
                return false;
            }
            if t.top >= prev_top {
                return false;
            }
            prev_top = t.top;
            expected_bottom = expected_bottom.wrapping_sub(1);
            match binomial(t.top, t.bottom as u64) {
                Ok(v) => sum += u128::from(v),
                Err(_) => return false,
            }
        }
        sum == u128::from(self.value)
    }
}

/// Largest `top >= bottom` with `C(top, bottom) <= rem`; requires `rem >= 1`.
fn largest_top(rem: u64, bottom: usize) -> u64 {
    let b = bottom as u64;
    if b == 1 {
        return rem;
    }
    // C(b + rem, b) > rem, so the answer lies in [b, b + rem).
    let (mut lo, mut hi) = (b, b.saturating_add(rem));
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match binomial(mid, b) {
            Ok(v) if v <= rem => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// The greedy `degree`-binomial expansion of `r`.
pub fn expand(r: u64, degree: usize) -> Result<BinomialExpansion> {
    if degree == 0 {
        return Err(MacaulayError::ZeroDegree);
    }
    let mut terms = Vec::new();
    let mut rem = r;
    let mut bottom = degree;
    while rem > 0 && bottom >= 1 {
        let top = largest_top(rem, bottom);
        rem -= binomial(top, bottom as u64)?;
        terms.push(Term { top, bottom });
        bottom -= 1;
    }
    debug_assert_eq!(rem, 0);
    Ok(BinomialExpansion {
        degree,
        value: r,
        terms,
    })
}

/// `((h)_(d))|^{+1}_{+1}`: the largest possible `h_{d+1}`.
pub fn macaulay_bound(h: u64, d: usize) -> Result<u64> {
    expand(h, d)?.shift(1, 1)
}

/// `((h)_(d))|^{-1}_{0}`: the largest possible restriction to a general hyperplane.
pub fn green_bound(h: u64, d: usize) -> Result<u64> {
    expand(h, d)?.shift(0, -1)
}

/// `((h)_(d))|^{-1}_{-1}`.
pub fn lower_shift(h: u64, d: usize) -> Result<u64> {
    expand(h, d)?.shift(-1, -1)
}

/// Outcome of an O-sequence check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OSequenceReport {
    Valid,
    /// `h_{degree+1}` exceeds `macaulay_bound(h_degree, degree)`.
    Violation { degree: usize, bound: u64, actual: u64 },
}

impl OSequenceReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, OSequenceReport::Valid)
    }
}

/// Checks Macaulay's growth condition degree by degree.
pub fn is_o_sequence(h: &[u64]) -> Result<OSequenceReport> {
    if h.first() != Some(&1) {
        return Err(MacaulayError::BadLeadingEntry);
    }
    for d in 1..h.len().saturating_sub(1) {
        let bound = macaulay_bound(h[d], d)?;
        if h[d + 1] > bound {
            return Ok(OSequenceReport::Violation {
                degree: d,
                bound,
                actual: h[d + 1],
            });
        }
    }
    Ok(OSequenceReport::Valid)
}

/// Whether `h` grows maximally from degree `d` to `d + 1`.
pub fn max_growth_at(h: &[u64], d: usize) -> Result<bool> {
    if d == 0 {
        return Err(MacaulayError::ZeroDegree);
    }
    if d + 1 >= h.len() {
        return Err(MacaulayError::IndexOutOfRange {
            index: d + 1,
            len: h.len(),
        });
    }
    Ok(h[d + 1] == macaulay_bound(h[d], d)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(e: &BinomialExpansion) -> Vec<(u64, usize)> {
        e.terms().iter().map(|t| (t.top, t.bottom)).collect()
    }

    #[test]
    fn known_expansions() {
        assert_eq!(terms(&expand(19, 3).unwrap()), vec![(5, 3), (4, 2), (3, 1)]);
        assert_eq!(terms(&expand(28, 4).unwrap()), vec![(6, 4), (5, 3), (3, 2)]);
        assert_eq!(
            terms(&expand(25, 6).unwrap()),
            vec![(7, 6), (6, 5), (5, 4), (4, 3), (3, 2)]
        );
        assert_eq!(
            terms(&expand(29, 7).unwrap()),
            vec![(8, 7), (7, 6), (6, 5), (5, 4), (3, 3), (2, 2), (1, 1)]
        );
        assert_eq!(terms(&expand(21, 5).unwrap()), vec![(7, 5)]);
    }

    #[test]
    fn zero_and_bad_degree() {
        let e = expand(0, 5).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.value(), 0);
        assert_eq!(e.shift(1, 1).unwrap(), 0);
        assert_eq!(expand(3, 0), Err(MacaulayError::ZeroDegree));
        assert_eq!(e.last_bottom(), Err(MacaulayError::EmptyExpansion));
    }

    #[test]
    fn shifts() {
        assert_eq!(expand(19, 3).unwrap().shift(0, -1).unwrap(), 9);
        assert_eq!(expand(28, 4).unwrap().shift(0, -1).unwrap(), 10);
        assert_eq!(expand(27, 4).unwrap().shift(0, -1).unwrap(), 9);
        assert_eq!(expand(18, 3).unwrap().shift(-1, -1).unwrap(), 10);
        assert_eq!(expand(8, 3).unwrap().shift(0, -1).unwrap(), 2);
    }

    #[test]
    fn vanished_terms_are_reported() {
        // 8 = C(4,3) + C(3,2) + C(1,1); shifting (0,-1) kills the last term.
        let st = expand(8, 3).unwrap().shifted_terms(0, -1).unwrap();
        assert_eq!(st.len(), 3);
        assert_eq!(st[2].value, 0);
    }

    #[test]
    fn bounds() {
        assert_eq!(macaulay_bound(19, 3).unwrap(), 31);
        assert_eq!(macaulay_bound(0, 4).unwrap(), 0);
        assert_eq!(macaulay_bound(17, 2).unwrap(), 38);
        assert_eq!(macaulay_bound(4, 2).unwrap(), 5);
        assert_eq!(green_bound(19, 3).unwrap(), 9);
        assert_eq!(green_bound(6, 2).unwrap(), 3);
        assert_eq!(green_bound(25, 6).unwrap(), 5);
        assert_eq!(macaulay_bound(3, 0), Err(MacaulayError::ZeroDegree));
        assert_eq!(green_bound(3, 0), Err(MacaulayError::ZeroDegree));
    }

    #[test]
    fn o_sequences() {
        assert!(is_o_sequence(&[1, 19, 17, 19, 1]).unwrap().is_valid());
        assert_eq!(
            is_o_sequence(&[1, 2, 4]).unwrap(),
            OSequenceReport::Violation {
                degree: 1,
                bound: 3,
                actual: 4
            }
        );
        assert!(is_o_sequence(&[1]).unwrap().is_valid());
        assert_eq!(is_o_sequence(&[2, 1]), Err(MacaulayError::BadLeadingEntry));
        assert_eq!(is_o_sequence(&[]), Err(MacaulayError::BadLeadingEntry));
    }

    #[test]
    fn growth() {
        assert!(max_growth_at(&[1, 18, 16, 18, 28], 3).unwrap());
        assert!(!max_growth_at(&[1, 19, 17, 19, 1], 3).unwrap());
        assert!(max_growth_at(&[1, 3, 6, 10], 2).unwrap());
        assert!(matches!(
            max_growth_at(&[1, 3], 1),
            Err(MacaulayError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn last_bottoms() {
        assert_eq!(expand(19, 3).unwrap().last_bottom().unwrap(), 1);
        assert_eq!(expand(28, 4).unwrap().last_bottom().unwrap(), 2);
        assert_eq!(expand(25, 6).unwrap().last_bottom().unwrap(), 2);
    }

    #[test]
    fn large_values_do_not_hang() {
        let e = expand(1 << 60, 2).unwrap();
        assert!(e.is_well_formed());
        assert_eq!(expand(u64::MAX, 1).unwrap().shift(1, 1), Err(MacaulayError::Overflow));
    }
}
