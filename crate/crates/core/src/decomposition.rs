//! Three-row decompositions `(h; b; l)` of a Hilbert function by a linear form
//! and the two socle-forcing lemmas.
//!
//! For `A = R/I` and a linear form `L`, the sequence
//! `0 -> R/(I:L)(-1) -> R/I -> R/(I,L) -> 0` gives `h_i = b_{i-1} + l_i`.
//! Rows are indexed by degree: `h` and `l` have `e + 1` entries, `b` has `e`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::macaulay::{green_bound, lower_shift, macaulay_bound, MacaulayError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("h-vector must start with 1 and end with a positive entry")]
    InvalidHVector,
    #[error("row length mismatch: h has {h} entries, b has {b} (expected {}), l has {l} (expected {})", h.saturating_sub(1), h)]
    LengthMismatch { h: usize, b: usize, l: usize },
    #[error("a Gorenstein candidate must end in h_e = 1 (found {0})")]
    NotGorensteinCandidate(u64),
    #[error("degree {index} out of range for a row of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

pub type Result<T> = std::result::Result<T, DecompositionError>;

/// An h-vector `(1, h_1, ..., h_e)` with `h_e > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct HVector(Vec<u64>);

impl HVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        match (entries.first(), entries.last()) {
            (Some(1), Some(&last)) if last > 0 => Ok(HVector(entries)),
            _ => Err(DecompositionError::InvalidHVector),
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }
}

impl TryFrom<Vec<u64>> for HVector {
    type Error = DecompositionError;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        HVector::new(v)
    }
}

impl From<HVector> for Vec<u64> {
    fn from(h: HVector) -> Self {
        h.0
    }
}

/// The diagram `(h; b; l)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub h: HVector,
    pub b: Vec<u64>,
    pub l: Vec<u64>,
}

/// One failed constraint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `h_i != b_{i-1} + l_i` (or `l_0 != 1`).
    Additivity { degree: usize },
    /// `l` fails Macaulay growth from `degree` to `degree + 1`.
    RestrictionNotOSequence { degree: usize, bound: u64, actual: u64 },
    /// `b` fails Macaulay growth from `degree` to `degree + 1`.
    ColonNotOSequence { degree: usize, bound: u64, actual: u64 },
    /// `l_d > green_bound(h_d, d)`.
    GreenBound { degree: usize, bound: u64, actual: u64 },
    /// Gorenstein requires `b_{e-1} = h_e = 1`.
    ColonTop { actual: u64 },
    /// Gorenstein requires `b_i = b_{e-1-i}`.
    ColonNotSymmetric { degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// First degree `d >= 1` where `row` exceeds Macaulay growth into `d + 1`.
fn growth_violation(row: &[u64]) -> Result<Option<(usize, u64, u64)>> {
    for d in 1..row.len().saturating_sub(1) {
        let bound = macaulay_bound(row[d], d)?;
        if row[d + 1] > bound {
            return Ok(Some((d, bound, row[d + 1])));
        }
    }
    Ok(None)
}

/// Checks additivity, the restriction row constraints and (optionally) the
/// Gorenstein constraints on the colon row. Length mismatches are errors;
/// constraint failures are collected in the report.
pub fn validate_decomposition(dec: &Decomposition, gorenstein: bool) -> Result<ValidationReport> {
    let h = dec.h.entries();
    let e = dec.h.socle_degree();
    if dec.b.len() != e || dec.l.len() != e + 1 {
        return Err(DecompositionError::LengthMismatch {
            h: h.len(),
            b: dec.b.len(),
            l: dec.l.len(),
        });
    }
    let mut report = ValidationReport::default();
    if dec.l[0] != 1 {
        report.violations.push(Violation::Additivity { degree: 0 });
    }
    for i in 1..=e {
        if dec.b[i - 1].checked_add(dec.l[i]) != Some(h[i]) {
            report.violations.push(Violation::Additivity { degree: i });
        }
    }
    if let Some((degree, bound, actual)) = growth_violation(&dec.l)? {
        report.violations.push(Violation::RestrictionNotOSequence {
            degree,
            bound,
            actual,
        });
    }
    for d in 1..=e {
        let bound = green_bound(h[d], d)?;
        if dec.l[d] > bound {
            report.violations.push(Violation::GreenBound {
                degree: d,
                bound,
                actual: dec.l[d],
            });
        }
    }
    if gorenstein && e >= 1 {
        if dec.b[e - 1] != 1 || h[e] != 1 {
            report.violations.push(Violation::ColonTop {
                actual: dec.b[e - 1],
            });
        }
        for i in 0..e {
            if dec.b[i] != dec.b[e - 1 - i] {
                report.violations.push(Violation::ColonNotSymmetric { degree: i });
                break;
            }
        }
        if dec.b[0] != 1 {
            report.violations.push(Violation::ColonNotOSequence {
                degree: 0,
                bound: 1,
                actual: dec.b[0],
            });
        } else if let Some((degree, bound, actual)) = growth_violation(&dec.b)? {
            report.violations.push(Violation::ColonNotOSequence {
                degree,
                bound,
                actual,
            });
        }
    }
    Ok(report)
}

/// All decompositions of a Gorenstein candidate `h` (with `h_e = 1`) whose
/// colon row is symmetric, ordered by `b_1` and then lexicographically.
///
/// The search is exhaustive over integer colon rows: `b_i` ranges over
/// `1..=h_{i+1}` for the free half of the row and the rest is fixed by symmetry.
pub fn enumerate_gorenstein_decompositions(h: &HVector) -> Result<Vec<Decomposition>> {
    let entries = h.entries();
    let e = h.socle_degree();
    if entries[e] != 1 {
        return Err(DecompositionError::NotGorensteinCandidate(entries[e]));
    }
    if e == 0 {
        return Ok(vec![Decomposition {
            h: h.clone(),
            b: vec![],
            l: vec![1],
        }]);
    }
    // Free coordinates b_0..b_{half-1}; b_i = b_{e-1-i}.
    let half = e.div_ceil(2);
    let mut out = Vec::new();
    let mut b = vec![0u64; e];
    enumerate_rec(h, e, half, 0, &mut b, &mut out)?;
    out.sort_by(|x, y| x.b.get(1).cmp(&y.b.get(1)).then_with(|| x.b.cmp(&y.b)));
    Ok(out)
}

fn enumerate_rec(
    h: &HVector,
    e: usize,
    half: usize,
    i: usize,
    b: &mut Vec<u64>,
    out: &mut Vec<Decomposition>,
) -> Result<()> {
    let entries = h.entries();
    if i == half {
        let l: Vec<u64> = std::iter::once(1)
            .chain((1..=e).map(|k| entries[k].wrapping_sub(b[k - 1])))
            .collect();
        // Negative restriction entries wrapped around; reject them before validating.
        if (1..=e).any(|k| b[k - 1] > entries[k]) {
            return Ok(());
        }
        let dec = Decomposition {
            h: h.clone(),
            b: b.clone(),
            l,
        };
        if validate_decomposition(&dec, true)?.is_valid() {
            out.push(dec);
        }
        return Ok(());
    }
    // b_i sits under h_{i+1}, and its mirror under h_{e-i}.
    let cap = entries[i + 1].min(entries[e - i]);
    for v in 1..=cap {
        b[i] = v;
        b[e - 1 - i] = v;
        enumerate_rec(h, e, half, i + 1, b, out)?;
    }
    Ok(())
}

/// Which lemma produced a socle witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SocleRule {
    /// Maximal growth at `d` plus a deficit in degree `d - 1`.
    MaximalGrowth,
    /// Injectivity of `x L` at `d` plus a kernel at `d - 1`.
    Injectivity,
}

/// A forced socle of the given dimension in the given degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleWitness {
    pub degree: usize,
    pub dimension: u64,
    pub rule: SocleRule,
}

fn check_index(len: usize, index: usize) -> Result<()> {
    if index >= len {
        Err(DecompositionError::IndexOutOfRange { index, len })
    } else {
        Ok(())
    }
}

/// If `h_{d+1}` is the Macaulay bound of `h_d` and
/// `eps = h_{d-1} - ((h_d)_(d))|^{-1}_{-1} > 0`, the algebra has an
/// `eps`-dimensional socle in degree `d - 1`.
///
/// Note: an often-quoted worked example with `(1,18,16,18,28)` places this
/// socle "in degree 3"; the statement being implemented gives degree `d - 1`,
/// which is what is returned here.
pub fn zanello_socle(h: &[u64], d: usize) -> Result<Option<SocleWitness>> {
    if d == 0 {
        return Err(MacaulayError::ZeroDegree.into());
    }
    check_index(h.len(), d + 1)?;
    if h[d + 1] != macaulay_bound(h[d], d)? {
        return Ok(None);
    }
    let shifted = lower_shift(h[d], d)?;
    Ok(match h[d - 1].checked_sub(shifted) {
        Some(eps) if eps > 0 => Some(SocleWitness {
            degree: d - 1,
            dimension: eps,
            rule: SocleRule::MaximalGrowth,
        }),
        _ => None,
    })
}

/// `h_{d-1} - h_d + l_d`: the kernel dimension of `x L : [R/I]_{d-1} -> [R/I]_d`.
pub fn injectivity_defect(h: &[u64], l: &[u64], d: usize) -> Result<i64> {
    if d == 0 {
        return Err(MacaulayError::ZeroDegree.into());
    }
    check_index(h.len(), d)?;
    check_index(l.len(), d)?;
    Ok(h[d - 1] as i64 - h[d] as i64 + l[d] as i64)
}

/// If multiplication is injective from `d` to `d + 1` and has an
/// `s`-dimensional kernel from `d - 1` to `d`, the algebra has an
/// `s`-dimensional socle in degree `d - 1`.
pub fn injectivity_socle(h: &[u64], l: &[u64], d: usize) -> Result<Option<SocleWitness>> {
    let above = injectivity_defect(h, l, d + 1)?;
    let here = injectivity_defect(h, l, d)?;
    Ok(if above == 0 && here > 0 {
        Some(SocleWitness {
            degree: d - 1,
            dimension: here as u64,
            rule: SocleRule::Injectivity,
        })
    } else {
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(h: &[u64], b: &[u64], l: &[u64]) -> Decomposition {
        Decomposition {
            h: HVector::new(h.to_vec()).unwrap(),
            b: b.to_vec(),
            l: l.to_vec(),
        }
    }

    #[test]
    fn smallest_colon_decomposition_is_valid() {
        let d = dec(&[1, 19, 17, 19, 1], &[1, 10, 10, 1], &[1, 18, 7, 9, 0]);
        assert!(validate_decomposition(&d, true).unwrap().is_valid());
    }

    #[test]
    fn b13_fails_growth_of_restriction() {
        let d = dec(&[1, 19, 17, 19, 1], &[1, 13, 13, 1], &[1, 18, 4, 6, 0]);
        let r = validate_decomposition(&d, true).unwrap();
        assert_eq!(
            r.violations,
            vec![Violation::RestrictionNotOSequence {
                degree: 2,
                bound: 5,
                actual: 6
            }]
        );
    }

    #[test]
    fn trivial_decomposition() {
        let d = dec(&[1], &[], &[1]);
        assert!(validate_decomposition(&d, true).unwrap().is_valid());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let d = dec(&[1, 2, 1], &[1], &[1, 1, 0]);
        assert!(matches!(
            validate_decomposition(&d, false),
            Err(DecompositionError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn additivity_failure_is_reported() {
        let d = dec(&[1, 2, 1], &[1, 1], &[1, 2, 0]);
        let r = validate_decomposition(&d, false).unwrap();
        assert!(r.violations.contains(&Violation::Additivity { degree: 1 }));
    }

    #[test]
    fn non_gorenstein_mode_skips_symmetry() {
        let d = dec(&[1, 3, 3], &[1, 2], &[1, 2, 1]);
        assert!(validate_decomposition(&d, false).unwrap().is_valid());
        assert!(!validate_decomposition(&d, true).unwrap().is_valid());
    }

    #[test]
    fn three_candidates_for_19_17_19() {
        let h = HVector::new(vec![1, 19, 17, 19, 1]).unwrap();
        let all = enumerate_gorenstein_decompositions(&h).unwrap();
        let bs: Vec<_> = all.iter().map(|d| d.b.clone()).collect();
        assert_eq!(bs, vec![vec![1, 10, 10, 1], vec![1, 11, 11, 1], vec![1, 12, 12, 1]]);
        let ls: Vec<_> = all.iter().map(|d| d.l.clone()).collect();
        assert_eq!(
            ls,
            vec![vec![1, 18, 7, 9, 0], vec![1, 18, 6, 8, 0], vec![1, 18, 5, 7, 0]]
        );
    }

    #[test]
    fn constant_vector_has_one_decomposition() {
        let h = HVector::new(vec![1, 1, 1, 1, 1]).unwrap();
        let all = enumerate_gorenstein_decompositions(&h).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].b, vec![1, 1, 1, 1]);
        assert_eq!(all[0].l, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn rejects_non_gorenstein_top() {
        let h = HVector::new(vec![1, 3, 2]).unwrap();
        assert_eq!(
            enumerate_gorenstein_decompositions(&h),
            Err(DecompositionError::NotGorensteinCandidate(2))
        );
    }

    #[test]
    fn hvector_invariants() {
        assert!(HVector::new(vec![]).is_err());
        assert!(HVector::new(vec![2, 1]).is_err());
        assert!(HVector::new(vec![1, 3, 0]).is_err());
        let json = serde_json::to_string(&dec(&[1, 2, 1], &[1, 1], &[1, 1, 0])).unwrap();
        assert_eq!(json, r#"{"h":[1,2,1],"b":[1,1],"l":[1,1,0]}"#);
    }

    #[test]
    fn zanello_examples() {
        let w = zanello_socle(&[1, 19, 17, 19, 31], 3).unwrap().unwrap();
        assert_eq!((w.degree, w.dimension), (2, 7));
        let w = zanello_socle(&[1, 18, 16, 18, 28], 3).unwrap().unwrap();
        assert_eq!((w.degree, w.dimension), (2, 6));
        assert_eq!(zanello_socle(&[1, 3, 6, 10, 15], 3).unwrap(), None);
        // Growth 19 -> 28 is not maximal, so the guard stops it.
        assert_eq!(zanello_socle(&[1, 19, 17, 19, 28], 3).unwrap(), None);
        assert!(zanello_socle(&[1, 3, 6], 2).is_err());
    }

    #[test]
    fn defects() {
        let h = [1, 19, 17, 19, 28];
        let l = [1, 18, 5, 7, 9];
        assert_eq!(injectivity_defect(&h, &l, 4).unwrap(), 0);
        assert_eq!(injectivity_defect(&h, &l, 3).unwrap(), 5);
        assert!(injectivity_defect(&h, &l, 5).is_err());
        assert!(injectivity_defect(&h, &l, 0).is_err());
    }

    #[test]
    fn injectivity_examples() {
        let w = injectivity_socle(&[1, 19, 17, 19, 28], &[1, 18, 5, 7, 9], 3)
            .unwrap()
            .unwrap();
        assert_eq!((w.degree, w.dimension), (2, 5));
        let w = injectivity_socle(&[1, 19, 17, 19, 28], &[1, 18, 6, 8, 9], 3)
            .unwrap()
            .unwrap();
        assert_eq!((w.degree, w.dimension), (2, 6));
        // Polynomial ring in 3 variables: injective everywhere.
        assert_eq!(
            injectivity_socle(&[1, 3, 6, 10, 15], &[1, 2, 3, 4, 5], 2).unwrap(),
            None
        );
    }

    #[test]
    fn both_lemmas_agree_on_the_degree_four_instance() {
        let h = [1, 19, 17, 19, 28, 40];
        let l = [1, 18, 6, 8, 10, 12];
        let a = zanello_socle(&h, 4).unwrap().unwrap();
        let b = injectivity_socle(&h, &l, 4).unwrap().unwrap();
        assert_eq!((a.degree, a.dimension), (3, 1));
        assert_eq!((a.degree, a.dimension), (b.degree, b.dimension));
    }
}
