//! Proof trace data model and per-step verification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decomposition::{enumerate_gorenstein_decompositions, injectivity_socle, zanello_socle, Decomposition, HVector};
use crate::engine::{build_ideal, restriction_profile, Polynomial};
use crate::extremal::{hilbert_polynomial, predicted_scheme_hf, recognize_hypersurface_form};
use crate::lex::{cancellation_socle_lower_bound, ek_betti, lex_ideal, truncate_ideal};
use crate::macaulay::{expand, green_bound, macaulay_bound};

use super::Verdict;

/// Socle witnesses of `R/J` in degrees up to this one are socle elements of
/// `R/I` as well, since `J` and `I` agree through degree 3.
pub const MAX_TRANSFER_DEGREE: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    MachineChecked,
    CitedAxiom,
}

/// A scalar read from the recorded outputs of an earlier step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Operand {
    Lit(i64),
    Ref { step: String, output: String },
    Diff(Box<Operand>, Box<Operand>),
}

impl Operand {
    pub fn lit(v: i64) -> Self {
        Operand::Lit(v)
    }

    pub fn at(step: &str, output: &str) -> Self {
        Operand::Ref {
            step: step.to_string(),
            output: output.to_string(),
        }
    }

    pub fn diff(a: Operand, b: Operand) -> Self {
        Operand::Diff(Box::new(a), Box::new(b))
    }

    fn refs<'a>(&'a self, out: &mut Vec<(&'a str, &'a str)>) {
        match self {
            Operand::Lit(_) => {}
            Operand::Ref { step, output } => out.push((step, output)),
            Operand::Diff(a, b) => {
                a.refs(out);
                b.refs(out);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompareOp {
    Eq,
    Le,
    Lt,
    Ge,
}

impl CompareOp {
    fn apply(self, a: i64, b: i64) -> bool {
        match self {
            CompareOp::Eq => a == b,
            CompareOp::Le => a <= b,
            CompareOp::Lt => a < b,
            CompareOp::Ge => a >= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            CompareOp::Eq => "=",
            CompareOp::Le => "<=",
            CompareOp::Lt => "<",
            CompareOp::Ge => ">=",
        }
    }
}

/// A filter on the enumerated integer `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Constraint {
    AtMost { value: Operand },
    AtLeast { value: Operand },
    /// `macaulay_bound(x, degree) >= value`.
    MacaulayAtLeast { degree: usize, value: Operand },
    /// `green_bound(x, degree) >= value`.
    GreenAtLeast { degree: usize, value: Operand },
}

impl Constraint {
    fn operand(&self) -> &Operand {
        match self {
            Constraint::AtMost { value }
            | Constraint::AtLeast { value }
            | Constraint::MacaulayAtLeast { value, .. }
            | Constraint::GreenAtLeast { value, .. } => value,
        }
    }
}

/// A recorded Betti number `beta_{i,j}(R/I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

/// `(h_d, b_{d-1}, l_d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreeRow {
    pub h: u64,
    pub b: u64,
    pub l: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionCheck {
    pub seed: u64,
    pub hf: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Rule {
    MacaulayBound {
        h: u64,
        d: usize,
        bound: u64,
    },
    GreenBound {
        h: u64,
        d: usize,
        bound: u64,
    },
    Expansion {
        h: u64,
        d: usize,
        terms: Vec<(u64, usize)>,
    },
    ZanelloSocle {
        h: Vec<u64>,
        d: usize,
        socle_degree: usize,
        dimension: u64,
    },
    InjectivitySocle {
        h: Vec<u64>,
        l: Vec<u64>,
        d: usize,
        socle_degree: usize,
        dimension: u64,
    },
    /// Lex ideal of `h` in `nvars` variables truncated at `truncate_at`, its
    /// Eliahou–Kervaire table, and the cancellation bound at `(i, j)`.
    LexCancellation {
        h: Vec<u64>,
        nvars: usize,
        truncate_at: usize,
        entries: Vec<BettiEntry>,
        generators: Vec<(usize, u64)>,
        i: usize,
        j: usize,
        lower_bound: u64,
        socle_degree: usize,
    },
    GorensteinDecompositions {
        h: Vec<u64>,
        candidates: Vec<Decomposition>,
    },
    HypersurfaceForm {
        h: u64,
        d: usize,
        c: u64,
        k: usize,
        t: usize,
        predicted: u64,
    },
    /// `row[d + 1] = macaulay_bound(row[d], d)`.
    MaximalGrowth {
        row: Vec<u64>,
        d: usize,
    },
    /// No kernel into degree `d` and maximal growth of `l` into `d` give,
    /// by persistence, `l_{d+1} = macaulay_bound(l_d, d)` and no kernel into
    /// `d + 1`.
    InjectivityPropagation {
        h: Vec<u64>,
        l: Vec<u64>,
        d: usize,
        next_l: u64,
        next_h: u64,
    },
    Gotzmann {
        h_d: u64,
        d: usize,
        values: Vec<u64>,
    },
    /// `P(T) = slope * T + intercept` for the Hilbert polynomial read off
    /// the degree-`d` expansion of `h`.
    HilbertPolynomial {
        h: u64,
        d: usize,
        slope: i64,
        intercept: i64,
    },
    EngineHilbertFunction {
        nvars: usize,
        prime: u64,
        cap: usize,
        generators: Vec<Polynomial>,
        hf: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        restriction: Option<RestrictionCheck>,
    },
    Enumerate {
        variable: String,
        lo: i64,
        hi: i64,
        constraints: Vec<Constraint>,
        survivors: Vec<i64>,
    },
    /// Rows `(b + l, b, l)` with `b + l <= h_max` and `l <= green_bound(b + l, d)`.
    DegreeExtension {
        d: usize,
        h_max: u64,
        b_options: Vec<u64>,
        l_options: Vec<u64>,
        survivors: Vec<DegreeRow>,
    },
    Compare {
        lhs: Operand,
        op: CompareOp,
        rhs: Operand,
        holds: bool,
    },
    /// Closes a branch by an earlier `DegreeExtension` with the same
    /// survivors whose own branch is closed.
    Reuse {
        step: String,
        survivors: Vec<DegreeRow>,
    },
    Cited {
        claim: String,
        #[serde(default)]
        yields: BTreeMap<String, i64>,
    },
}

fn indexed(out: &mut BTreeMap<String, i64>, name: &str, row: &[u64]) {
    for (i, &v) in row.iter().enumerate() {
        out.insert(format!("{name}[{i}]"), v as i64);
    }
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::MacaulayBound { .. } => "macaulay_bound",
            Rule::GreenBound { .. } => "green_bound",
            Rule::Expansion { .. } => "expansion",
            Rule::ZanelloSocle { .. } => "zanello_socle",
            Rule::InjectivitySocle { .. } => "injectivity_socle",
            Rule::LexCancellation { .. } => "lex_cancellation",
            Rule::GorensteinDecompositions { .. } => "gorenstein_decompositions",
            Rule::HypersurfaceForm { .. } => "hypersurface_form",
            Rule::MaximalGrowth { .. } => "maximal_growth",
            Rule::InjectivityPropagation { .. } => "injectivity_propagation",
            Rule::Gotzmann { .. } => "gotzmann",
            Rule::HilbertPolynomial { .. } => "hilbert_polynomial",
            Rule::EngineHilbertFunction { .. } => "engine_hilbert_function",
            Rule::Enumerate { .. } => "enumerate",
            Rule::DegreeExtension { .. } => "degree_extension",
            Rule::Compare { .. } => "compare",
            Rule::Reuse { .. } => "reuse",
            Rule::Cited { .. } => "cited",
        }
    }

    /// Named scalars this step feeds into its computation.
    pub fn inputs(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        match self {
            Rule::MacaulayBound { h, d, .. }
            | Rule::GreenBound { h, d, .. }
            | Rule::Expansion { h, d, .. }
            | Rule::HypersurfaceForm { h, d, .. }
            | Rule::HilbertPolynomial { h, d, .. } => {
                out.insert("h".into(), *h as i64);
                out.insert("d".into(), *d as i64);
            }
            Rule::ZanelloSocle { h, .. } => indexed(&mut out, "h", h),
            Rule::InjectivitySocle { h, l, .. } | Rule::InjectivityPropagation { h, l, .. } => {
                indexed(&mut out, "h", h);
                indexed(&mut out, "l", l);
            }
            Rule::MaximalGrowth { row, .. } => indexed(&mut out, "row", row),
            Rule::Gotzmann { h_d, .. } => {
                out.insert("h_d".into(), *h_d as i64);
            }
            Rule::DegreeExtension {
                h_max,
                b_options,
                l_options,
                ..
            } => {
                out.insert("h_max".into(), *h_max as i64);
                indexed(&mut out, "b_options", b_options);
                indexed(&mut out, "l_options", l_options);
            }
            Rule::Enumerate { lo, hi, .. } => {
                out.insert("lo".into(), *lo);
                out.insert("hi".into(), *hi);
            }
            _ => {}
        }
        out
    }

    /// Named scalars later steps may reference.
    pub fn outputs(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        match self {
            Rule::MacaulayBound { bound, .. } | Rule::GreenBound { bound, .. } => {
                out.insert("bound".into(), *bound as i64);
            }
            Rule::Expansion { terms, .. } => {
                out.insert("terms".into(), terms.len() as i64);
            }
            Rule::ZanelloSocle {
                socle_degree,
                dimension,
                ..
            }
            | Rule::InjectivitySocle {
                socle_degree,
                dimension,
                ..
            } => {
                out.insert("socle_degree".into(), *socle_degree as i64);
                out.insert("dimension".into(), *dimension as i64);
            }
            Rule::LexCancellation {
                entries,
                lower_bound,
                socle_degree,
                ..
            } => {
                out.insert("lower_bound".into(), *lower_bound as i64);
                out.insert("socle_degree".into(), *socle_degree as i64);
                for e in entries {
                    out.insert(format!("beta[{},{}]", e.i, e.j), e.value as i64);
                }
            }
            Rule::GorensteinDecompositions { candidates, .. } => {
                out.insert("count".into(), candidates.len() as i64);
                for (k, c) in candidates.iter().enumerate() {
                    indexed(&mut out, &format!("b{k}"), &c.b);
                    indexed(&mut out, &format!("l{k}"), &c.l);
                }
            }
            Rule::HypersurfaceForm { c, k, predicted, .. } => {
                out.insert("c".into(), *c as i64);
                out.insert("k".into(), *k as i64);
                out.insert("predicted".into(), *predicted as i64);
            }
            Rule::MaximalGrowth { row, d } => {
                if let Some(&v) = row.get(d + 1) {
                    out.insert("next".into(), v as i64);
                }
            }
            Rule::InjectivityPropagation { next_l, next_h, .. } => {
                out.insert("next_l".into(), *next_l as i64);
                out.insert("next_h".into(), *next_h as i64);
            }
            Rule::Gotzmann { d, values, .. } => {
                for (i, &v) in values.iter().enumerate() {
                    out.insert(format!("h[{}]", d + 1 + i), v as i64);
                }
            }
            Rule::HilbertPolynomial { slope, intercept, .. } => {
                out.insert("slope".into(), *slope);
                out.insert("intercept".into(), *intercept);
            }
            Rule::EngineHilbertFunction { hf, restriction, .. } => {
                indexed(&mut out, "h", hf);
                if let Some(r) = restriction {
                    indexed(&mut out, "l", &r.hf);
                }
            }
            Rule::Enumerate { survivors, .. } => {
                out.insert("count".into(), survivors.len() as i64);
                if let (Some(min), Some(max)) = (survivors.iter().min(), survivors.iter().max()) {
                    out.insert("min".into(), *min);
                    out.insert("max".into(), *max);
                }
            }
            Rule::DegreeExtension { survivors, .. } => {
                out.insert("count".into(), survivors.len() as i64);
                for (k, r) in survivors.iter().enumerate() {
                    out.insert(format!("h{k}"), r.h as i64);
                    out.insert(format!("b{k}"), r.b as i64);
                    out.insert(format!("l{k}"), r.l as i64);
                }
            }
            Rule::Cited { yields, .. } => out.clone_from(yields),
            Rule::Compare { .. } | Rule::Reuse { .. } => {}
        }
        out
    }

    /// Step references made by operands (not bindings).
    pub fn operand_refs(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        match self {
            Rule::Compare { lhs, rhs, .. } => {
                lhs.refs(&mut out);
                rhs.refs(&mut out);
            }
            Rule::Enumerate { constraints, .. } => {
                for c in constraints {
                    c.operand().refs(&mut out);
                }
            }
            _ => {}
        }
        out
    }

    /// Whether a verified step of this rule refutes the branch it lives in.
    pub fn is_contradiction(&self) -> bool {
        match self {
            Rule::ZanelloSocle {
                socle_degree,
                dimension,
                ..
            }
            | Rule::InjectivitySocle {
                socle_degree,
                dimension,
                ..
            } => *dimension > 0 && *socle_degree <= MAX_TRANSFER_DEGREE,
            Rule::LexCancellation {
                lower_bound,
                socle_degree,
                ..
            } => *lower_bound > 0 && *socle_degree <= MAX_TRANSFER_DEGREE,
            Rule::Compare { holds, .. } => !holds,
            Rule::Enumerate { survivors, .. } => survivors.is_empty(),
            Rule::DegreeExtension { survivors, .. } => survivors.is_empty(),
            Rule::Reuse { .. } => true,
            _ => false,
        }
    }

    /// Recomputes the step. `resolve` reads operands from earlier steps.
    pub fn verify(&self, resolve: &dyn Fn(&Operand) -> Result<i64, String>) -> Result<(), String> {
        match self {
            Rule::MacaulayBound { h, d, bound } => {
                expect_eq("macaulay_bound", macaulay_bound(*h, *d).map_err(err)?, *bound)
            }
            Rule::GreenBound { h, d, bound } => expect_eq("green_bound", green_bound(*h, *d).map_err(err)?, *bound),
            Rule::Expansion { h, d, terms } => {
                let e = expand(*h, *d).map_err(err)?;
                let got: Vec<(u64, usize)> = e.terms().iter().map(|t| (t.top, t.bottom)).collect();
                expect_eq("expansion", got, terms.clone())
            }
            Rule::ZanelloSocle {
                h,
                d,
                socle_degree,
                dimension,
            } => {
                let w = zanello_socle(h, *d).map_err(err)?;
                expect_eq(
                    "socle (degree, dimension)",
                    w.map(|w| (w.degree, w.dimension)),
                    Some((*socle_degree, *dimension)),
                )
            }
            Rule::InjectivitySocle {
                h,
                l,
                d,
                socle_degree,
                dimension,
            } => {
                let w = injectivity_socle(h, l, *d).map_err(err)?;
                expect_eq(
                    "socle (degree, dimension)",
                    w.map(|w| (w.degree, w.dimension)),
                    Some((*socle_degree, *dimension)),
                )
            }
            Rule::LexCancellation {
                h,
                nvars,
                truncate_at,
                entries,
                generators,
                i,
                j,
                lower_bound,
                socle_degree,
            } => {
                if i != nvars {
                    return Err(format!("homological degree {i} must equal the number of variables {nvars}"));
                }
                expect_eq("socle degree", j.checked_sub(*i), Some(*socle_degree))?;
                let ideal = truncate_ideal(&lex_ideal(h, *nvars).map_err(err)?, *truncate_at);
                for &(deg, count) in generators {
                    expect_eq(
                        &format!("generators of degree {deg}"),
                        ideal.generators_of_degree(deg).count() as u64,
                        count,
                    )?;
                }
                let table = ek_betti(&ideal).map_err(err)?;
                for e in entries {
                    expect_eq(&format!("beta_{{{},{}}}", e.i, e.j), table.get(e.i, e.j), e.value)?;
                }
                expect_eq(
                    "cancellation lower bound",
                    cancellation_socle_lower_bound(&table, *i, *j),
                    *lower_bound,
                )
            }
            Rule::GorensteinDecompositions { h, candidates } => {
                let hv = HVector::new(h.clone()).map_err(err)?;
                expect_eq(
                    "decompositions",
                    enumerate_gorenstein_decompositions(&hv).map_err(err)?,
                    candidates.clone(),
                )
            }
            Rule::HypersurfaceForm { h, d, c, k, t, predicted } => {
                let f = recognize_hypersurface_form(*h, *d)
                    .map_err(err)?
                    .ok_or_else(|| format!("{h} is not of hypersurface form in degree {d}"))?;
                expect_eq("(c, k)", (f.c, f.k), (*c, *k))?;
                expect_eq("predicted value", predicted_scheme_hf(&f, *t).map_err(err)?, *predicted)
            }
            Rule::MaximalGrowth { row, d } => {
                let (Some(&cur), Some(&next)) = (row.get(*d), row.get(d + 1)) else {
                    return Err(format!("row too short for degree {d}"));
                };
                expect_eq("maximal growth", macaulay_bound(cur, *d).map_err(err)?, next)
            }
            Rule::InjectivityPropagation { h, l, d, next_l, next_h } => {
                if *d == 0 || h.len() <= *d || l.len() <= *d {
                    return Err(format!("rows too short for degree {d}"));
                }
                let defect = h[d - 1] as i64 - h[*d] as i64 + l[*d] as i64;
                expect_eq("kernel into degree d", defect, 0)?;
                expect_eq(
                    "maximal growth of l into degree d",
                    macaulay_bound(l[d - 1], d - 1).map_err(err)?,
                    l[*d],
                )?;
                let nl = macaulay_bound(l[*d], *d).map_err(err)?;
                expect_eq("next l", nl, *next_l)?;
                expect_eq("next h", h[*d] + nl, *next_h)
            }
            Rule::Gotzmann { h_d, d, values } => {
                let mut cur = *h_d;
                let mut got = Vec::with_capacity(values.len());
                for t in *d..d + values.len() {
                    cur = macaulay_bound(cur, t).map_err(err)?;
                    got.push(cur);
                }
                expect_eq("persistence values", got, values.clone())
            }
            Rule::HilbertPolynomial { h, d, slope, intercept } => {
                let p = hilbert_polynomial(&expand(*h, *d).map_err(err)?).map_err(err)?;
                for t in 0..=4 {
                    let at = (d + t) as i64;
                    expect_eq(
                        &format!("P({at})"),
                        p.eval(t).map_err(err)? as i64,
                        slope * at + intercept,
                    )?;
                }
                Ok(())
            }
            Rule::EngineHilbertFunction {
                nvars,
                prime,
                cap,
                generators,
                hf,
                restriction,
            } => {
                let model = build_ideal(generators, *nvars, *prime, *cap).map_err(err)?;
                expect_eq("Hilbert function", model.hilbert_function(), hf.clone())?;
                if let Some(r) = restriction {
                    let profile = restriction_profile(&model, r.seed).map_err(err)?;
                    expect_eq("restricted Hilbert function", profile.l, r.hf.clone())?;
                }
                Ok(())
            }
            Rule::Enumerate {
                lo,
                hi,
                constraints,
                survivors,
                ..
            } => {
                let values: Vec<(&Constraint, i64)> = constraints
                    .iter()
                    .map(|c| resolve(c.operand()).map(|v| (c, v)))
                    .collect::<Result<_, _>>()?;
                let mut got = Vec::new();
                for x in *lo..=*hi {
                    let mut keep = true;
                    for &(c, v) in &values {
                        keep &= match c {
                            Constraint::AtMost { .. } => x <= v,
                            Constraint::AtLeast { .. } => x >= v,
                            Constraint::MacaulayAtLeast { degree, .. } => {
                                x >= 0 && macaulay_bound(x as u64, *degree).map_err(err)? as i64 >= v
                            }
                            Constraint::GreenAtLeast { degree, .. } => {
                                x >= 0 && green_bound(x as u64, *degree).map_err(err)? as i64 >= v
                            }
                        };
                    }
                    if keep {
                        got.push(x);
                    }
                }
                expect_eq("survivors", got, survivors.clone())
            }
            Rule::DegreeExtension {
                d,
                h_max,
                b_options,
                l_options,
                survivors,
            } => expect_eq(
                "survivors",
                degree_extension(*d, *h_max, b_options, l_options).map_err(err)?,
                survivors.clone(),
            ),
            Rule::Compare { lhs, op, rhs, holds } => {
                let (a, b) = (resolve(lhs)?, resolve(rhs)?);
                if op.apply(a, b) == *holds {
                    Ok(())
                } else {
                    Err(format!("{a} {} {b} evaluates to {}", op.symbol(), !holds))
                }
            }
            Rule::Reuse { .. } | Rule::Cited { .. } => Ok(()),
        }
    }
}

/// Rows `(b + l, b, l)` allowed by Green's bound, sorted by `h` then `b`, descending.
pub fn degree_extension(
    d: usize,
    h_max: u64,
    b_options: &[u64],
    l_options: &[u64],
) -> crate::macaulay::Result<Vec<DegreeRow>> {
    let mut rows = Vec::new();
    for &b in b_options {
        for &l in l_options {
            let h = b + l;
            if h <= h_max && l <= green_bound(h, d)? {
                rows.push(DegreeRow { h, b, l });
            }
        }
    }
    rows.sort_by(|x, y| y.cmp(x));
    rows.dedup();
    Ok(rows)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, computed: T, recorded: T) -> Result<(), String> {
    if computed == recorded {
        Ok(())
    } else {
        Err(format!("{what}: computed {computed:?}, recorded {recorded:?}"))
    }
}

/// `rule.inputs()[input]` must equal `outputs(step)[output]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub input: String,
    pub step: String,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub title: String,
    #[serde(flatten)]
    pub rule: Rule,
    pub status: Status,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub uses: Vec<Binding>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub closes: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub id: String,
    pub assumption: String,
}

/// An exhaustive case distinction inside `parent` (the root when `None`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    pub justified_by: String,
    pub description: String,
    pub branches: Vec<Branch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub version: u32,
    pub goal: Vec<u64>,
    pub hypotheses: Vec<String>,
    pub steps: Vec<Step>,
    pub splits: Vec<Split>,
    pub conclusion: Verdict,
}
