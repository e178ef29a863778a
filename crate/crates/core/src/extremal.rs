//! Extremal Green restrictions: hypersurface shapes, Hilbert polynomials,
//! backward recursions, successive sharpness targets, and the report that
//! compares Green sharpness with maximal Macaulay growth.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::macaulay::{self, binomial_signed, expand, green_bound, macaulay_bound, BinomialExpansion, MacaulayError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("the expansion of {h} in degree {d} ends in C({top},{bottom}) with top = bottom; the recursion needs top > bottom")]
    LastTopEqualsBottom { h: u64, d: usize, top: u64, bottom: usize },
    #[error("the expansion of {h} in degree {d} ends in bottom {bottom}; at least 2 is required")]
    LastBottomTooSmall { h: u64, d: usize, bottom: usize },
    #[error("backward recursion produced h_1 = {found}, expected {expected}")]
    SpanMismatch { found: u64, expected: u64 },
    #[error("profile row `{row}` is missing degree {degree}")]
    MissingDegree { row: &'static str, degree: usize },
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
}

pub type Result<T> = std::result::Result<T, ExtremalError>;

/// `h_d = C(d+c, d) + C(d+c-1, d-1) + ... + C(d+c-k, d-k)`: the degree-`d`
/// Hilbert function of a degree-`(k+1)` hypersurface spanning a projective
/// space of dimension `c + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalForm {
    pub d: usize,
    pub c: u64,
    pub k: usize,
    pub lambda_dim: u64,
    pub hypersurface_degree: usize,
}

impl ExtremalForm {
    pub fn new(d: usize, c: u64, k: usize) -> Self {
        ExtremalForm {
            d,
            c,
            k,
            lambda_dim: c + 1,
            hypersurface_degree: k + 1,
        }
    }
}

/// Recognizes expansions whose terms all have `top - bottom = c` and run
/// through consecutive bottoms `d, d-1, ..., d-k`.
pub fn recognize_hypersurface_form(h: u64, d: usize) -> Result<Option<ExtremalForm>> {
    let e = expand(h, d)?;
    let Some(first) = e.terms().first() else {
        return Ok(None);
    };
    let c = first.top - first.bottom as u64;
    if e.terms().iter().all(|t| t.top - t.bottom as u64 == c) {
        Ok(Some(ExtremalForm::new(d, c, e.terms().len() - 1)))
    } else {
        Ok(None)
    }
}

/// Hilbert function at `t` of the hypersurface described by `f`.
pub fn predicted_scheme_hf(f: &ExtremalForm, t: usize) -> Result<u64> {
    (0..=f.k).try_fold(0u64, |acc, j| {
        let top = t as i64 + f.c as i64 - j as i64;
        let bottom = t as i64 - j as i64;
        let v = binomial_signed(top, bottom)?;
        acc.checked_add(v).ok_or(ExtremalError::Macaulay(MacaulayError::Overflow))
    })
}

/// `t -> P(d + t) = sum C(a_i + t, i + t)` for the degree-`d` expansion tops `a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPolynomialEval {
    pub base_degree: usize,
    pub tops: Vec<u64>,
    pub bottoms: Vec<usize>,
}

impl HilbertPolynomialEval {
    /// `P(base_degree + t)`.
    pub fn eval(&self, t: usize) -> Result<u64> {
        self.tops
            .iter()
            .zip(&self.bottoms)
            .try_fold(0u64, |acc, (&a, &i)| {
                let v = macaulay::binomial(a + t as u64, (i + t) as u64)?;
                acc.checked_add(v).ok_or(ExtremalError::Macaulay(MacaulayError::Overflow))
            })
    }
}

pub fn hilbert_polynomial(exp: &BinomialExpansion) -> Result<HilbertPolynomialEval> {
    if exp.is_empty() {
        return Err(MacaulayError::EmptyExpansion.into());
    }
    Ok(HilbertPolynomialEval {
        base_degree: exp.degree(),
        tops: exp.terms().iter().map(|t| t.top).collect(),
        bottoms: exp.terms().iter().map(|t| t.bottom).collect(),
    })
}

/// Output of the backward recursion `h_{k-1} = h_k - green_bound(h_k, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BackwardRecursion {
    /// `h_1, ..., h_d`.
    pub values: Vec<u64>,
    /// Projective dimension `h_1 - 1` of the linear span.
    pub span_dim: u64,
}

/// Rebuilds `h_1..h_d` from `h_d` when the last expansion term has top
/// strictly above its bottom, and checks `h_1 = a_d - d + 2`
/// (`a_d - d + 1` for a one-term expansion).
pub fn backward_hf_recursion(h: u64, d: usize) -> Result<BackwardRecursion> {
    let e = expand(h, d)?;
    let last = *e.terms().last().ok_or(MacaulayError::EmptyExpansion)?;
    if last.top == last.bottom as u64 {
        return Err(ExtremalError::LastTopEqualsBottom {
            h,
            d,
            top: last.top,
            bottom: last.bottom,
        });
    }
    let mut values = vec![h];
    let mut cur = h;
    for k in (2..=d).rev() {
        cur -= green_bound(cur, k)?;
        values.push(cur);
    }
    values.reverse();
    // A one-term expansion C(a_d, d) is the linear space P^{a_d - d} itself.
    let a_d = e.leading_top()?;
    let expected = if e.terms().len() == 1 {
        a_d + 1 - d as u64
    } else {
        a_d + 2 - d as u64
    };
    if values[0] != expected {
        return Err(ExtremalError::SpanMismatch {
            found: values[0],
            expected,
        });
    }
    Ok(BackwardRecursion {
        values,
        span_dim: expected - 1,
    })
}

/// `(h)|^{-1}_0, (h)|^{-2}_0, ..., (h)|^{-s}_0`, the successive sharp
/// restriction values; requires the expansion to end in bottom `>= 2`.
pub fn sequential_green_targets(h: u64, d: usize, s: usize) -> Result<Vec<u64>> {
    let e = expand(h, d)?;
    let bottom = e.last_bottom()?;
    if bottom < 2 {
        return Err(ExtremalError::LastBottomTooSmall { h, d, bottom });
    }
    (1..=s)
        .map(|j| Ok(e.shift(0, -(j as i64))?))
        .collect()
}

/// Hilbert-function rows of `R/I`, `R/(I:L)`, `R/(I,L)` indexed by degree,
/// plus optional rows for `J = <I_{<=d}>` and for a saturated scheme.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelateInput {
    pub h: Vec<u64>,
    pub b: Vec<u64>,
    pub l: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_h: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_b: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeProfile>,
}

/// Hilbert function and general hyperplane section rows of a scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeProfile {
    pub h: Vec<u64>,
    pub l: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisFlags {
    /// `x L : [R/I]_d -> [R/I]_{d+1}` injective; `None` when rows are too short.
    pub injective_at_d: Option<bool>,
    /// `x L : [R/I]_{d-1} -> [R/I]_d` injective.
    pub injective_at_d_minus_1: Option<bool>,
    /// The degree-`d` expansion of `h_d` ends in bottom `>= 2`.
    pub e_ge_2: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    A,
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionEval {
    pub part: Part,
    pub label: String,
    pub condition: String,
    pub value: Option<bool>,
    pub data_sufficient: bool,
    pub hypothesis_flags: HypothesisFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Finding {
    /// Hypotheses hold and every evaluable condition has the same value.
    Consistent,
    /// Hypotheses hold but conditions disagree.
    Counterexample,
    /// Hypotheses fail; the conditions are not required to agree.
    HypothesesFail,
    /// A hypothesis could not be evaluated from the rows supplied.
    InsufficientData,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSummary {
    pub part: Part,
    pub hypotheses_hold: Option<bool>,
    pub finding: Finding,
    pub note: String,
}

/// `M(X)` and `G(X)` over a finite window: the least degree from which Green
/// sharpness (resp. maximal growth) holds up to `window_end`. Beyond the
/// window nothing is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeOnsets {
    pub m_sharp_from: Option<usize>,
    pub g_max_from: Option<usize>,
    pub window_end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelateReport {
    pub d: usize,
    pub hypothesis_flags: HypothesisFlags,
    pub conditions: Vec<ConditionEval>,
    pub parts: Vec<PartSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeOnsets>,
}

impl RelateReport {
    pub fn condition(&self, part: Part, label: &str) -> Option<&ConditionEval> {
        self.conditions
            .iter()
            .find(|c| c.part == part && c.label == label)
    }

    pub fn summary(&self, part: Part) -> &PartSummary {
        self.parts.iter().find(|p| p.part == part).expect("both parts are always summarized")
    }

    pub fn has_counterexample(&self) -> bool {
        self.parts.iter().any(|p| p.finding == Finding::Counterexample)
    }
}

fn at(row: &[u64], i: usize) -> Option<u64> {
    row.get(i).copied()
}

/// `row_d == macaulay_bound(row_{d-1}, d-1)`; needs `d >= 2`.
fn max_growth_into(row: Option<&Vec<u64>>, d: usize) -> Result<Option<bool>> {
    let Some(row) = row else { return Ok(None) };
    if d < 2 {
        return Ok(None);
    }
    match (at(row, d - 1), at(row, d)) {
        (Some(prev), Some(cur)) => Ok(Some(cur == macaulay_bound(prev, d - 1)?)),
        _ => Ok(None),
    }
}

fn green_sharp(h: &[u64], l: &[u64], d: usize) -> Result<Option<bool>> {
    match (at(h, d), at(l, d)) {
        (Some(hd), Some(ld)) => Ok(Some(ld == green_bound(hd, d)?)),
        _ => Ok(None),
    }
}

fn injective_into(h: &[u64], l: &[u64], d: usize) -> Option<bool> {
    // Kernel of x L from degree d - 1 to d is h_{d-1} - h_d + l_d.
    if d == 0 {
        return None;
    }
    let (prev, cur, ld) = (at(h, d - 1)?, at(h, d)?, at(l, d)?);
    Some(prev as i64 - cur as i64 + ld as i64 == 0)
}

fn onsets(profile: &SchemeProfile) -> Result<SchemeOnsets> {
    let window_end = profile.h.len().min(profile.l.len()).saturating_sub(1);
    let mut m_sharp_from = None;
    for t in (1..=window_end).rev() {
        if profile.l[t] == green_bound(profile.h[t], t)? {
            m_sharp_from = Some(t);
        } else {
            break;
        }
    }
    let h_end = profile.h.len().saturating_sub(1);
    let mut g_max_from = None;
    for t in (1..h_end).rev() {
        if profile.h[t + 1] == macaulay_bound(profile.h[t], t)? {
            g_max_from = Some(t);
        } else {
            break;
        }
    }
    Ok(SchemeOnsets {
        m_sharp_from,
        g_max_from,
        window_end,
    })
}

/// Evaluates both lists of conditions at degree `d` and checks that they
/// agree whenever the corresponding hypotheses hold.
pub fn relate_report(input: &RelateInput, d: usize) -> Result<RelateReport> {
    if d == 0 {
        return Err(MacaulayError::ZeroDegree.into());
    }
    let hd = at(&input.h, d).ok_or(ExtremalError::MissingDegree { row: "h", degree: d })?;
    let e_ge_2 = if hd == 0 {
        false
    } else {
        expand(hd, d)?.last_bottom()? >= 2
    };
    let flags = HypothesisFlags {
        injective_at_d: injective_into(&input.h, &input.l, d + 1),
        injective_at_d_minus_1: injective_into(&input.h, &input.l, d),
        e_ge_2,
    };

    let sharp = green_sharp(&input.h, &input.l, d)?;
    let colon_growth = max_growth_into(Some(&input.b), d)?;
    let j_colon_growth = max_growth_into(input.j_b.as_ref(), d)?;
    let j_growth = match input.j_h.as_ref() {
        Some(jh) => match (at(jh, d), at(jh, d + 1)) {
            (Some(a), Some(b)) => Some(b == macaulay_bound(a, d)?),
            _ => None,
        },
        None => None,
    };
    let h_growth = max_growth_into(Some(&input.h), d)?;

    let make = |part, label: &str, condition: &str, value: Option<bool>| ConditionEval {
        part,
        label: label.to_string(),
        condition: condition.to_string(),
        value,
        data_sufficient: value.is_some(),
        hypothesis_flags: flags,
    };
    let conditions = vec![
        make(Part::A, "i", "Green bound is sharp for R/I in degree d", sharp),
        make(Part::A, "ii", "R/(I:L) grows maximally from d-1 to d", colon_growth),
        make(Part::A, "iii", "R/(J:L) grows maximally from d-1 to d", j_colon_growth),
        make(Part::A, "iv", "R/J grows maximally from d to d+1", j_growth),
        make(Part::B, "i", "Green bound is sharp for R/I in degree d", sharp),
        make(Part::B, "ii", "R/I grows maximally from d-1 to d", h_growth),
        make(Part::B, "iii", "R/(J:L) grows maximally from d-1 to d", j_colon_growth),
    ];

    let summarize = |part: Part, injective: Option<bool>| {
        let values: Vec<bool> = conditions
            .iter()
            .filter(|c| c.part == part)
            .filter_map(|c| c.value)
            .collect();
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        let hypotheses = injective.map(|inj| inj && e_ge_2);
        let (finding, note) = match hypotheses {
            None => (
                Finding::InsufficientData,
                "injectivity cannot be evaluated from the supplied rows".to_string(),
            ),
            Some(false) => {
                let why = match (injective, e_ge_2) {
                    (Some(false), false) => "injectivity fails and the expansion ends in bottom 1",
                    (Some(false), true) => "injectivity fails",
                    _ => "the expansion ends in bottom 1 (e >= 2 gate)",
                };
                (
                    Finding::HypothesesFail,
                    format!("{why}; the conditions need not agree"),
                )
            }
            Some(true) if agree => (
                Finding::Consistent,
                format!("{} evaluable conditions agree", values.len()),
            ),
            Some(true) => (
                Finding::Counterexample,
                "hypotheses hold but the conditions disagree".to_string(),
            ),
        };
        PartSummary {
            part,
            hypotheses_hold: hypotheses,
            finding,
            note,
        }
    };
    let parts = vec![
        summarize(Part::A, flags.injective_at_d),
        summarize(Part::B, flags.injective_at_d_minus_1),
    ];
    let scheme = input.scheme.as_ref().map(onsets).transpose()?;
    Ok(RelateReport {
        d,
        hypothesis_flags: flags,
        conditions,
        parts,
        scheme,
    })
}
