//! Classification of `(1,a,b,a,1)` from a versioned fact base and the two
//! extension rules: `(1,n,a,n,1)` Gorenstein implies `(1,n,b,n,1)` for
//! `a <= b <= C(n+1,2)` and `(1,n+1,a+1,n+1,1)`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::macaulay::{binomial, macaulay_bound};

use super::bibliography::Bibliography;
use super::{ProverError, Result, Verdict};

const BUNDLED: &str = include_str!("../../data/facts.json");
pub const FACT_BASE_VERSION: u32 = 1;
/// Range of `a` scanned for conflicting verdicts when a fact base is loaded.
pub const CONSISTENCY_HORIZON: u64 = 100;

/// The h-vector `(1, a, b, a, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SocleFour {
    pub a: u64,
    pub b: u64,
}

impl SocleFour {
    pub fn new(a: u64, b: u64) -> Self {
        SocleFour { a, b }
    }

    pub fn h_vector(self) -> [u64; 5] {
        [1, self.a, self.b, self.a, 1]
    }

    /// `a >= 1`, `b <= C(a+1,2)` and `a <= macaulay_bound(b,2)`.
    pub fn is_o_sequence(self) -> bool {
        if self.a == 0 {
            return false;
        }
        let Ok(cap) = binomial(self.a + 1, 2) else {
            return false;
        };
        self.b <= cap && macaulay_bound(self.b, 2).is_ok_and(|m| self.a <= m)
    }
}

/// Upper end of the b-rule for first coordinate `n`.
fn b_ceiling(n: u64) -> u64 {
    binomial(n + 1, 2).unwrap_or(u64::MAX)
}

/// Closure of `known` under both extension rules, keeping first coordinates
/// at most `horizon`.
pub fn extension_closure(known: &BTreeSet<SocleFour>, horizon: u64) -> BTreeSet<SocleFour> {
    let mut out: BTreeSet<SocleFour> = known.clone();
    let mut work: Vec<SocleFour> = known.iter().copied().filter(|s| s.a <= horizon).collect();
    while let Some(s) = work.pop() {
        let mut next = Vec::new();
        if s.a < horizon {
            next.push(SocleFour::new(s.a + 1, s.b + 1));
        }
        if s.b < b_ceiling(s.a) {
            next.push(SocleFour::new(s.a, s.b + 1));
        }
        for n in next {
            if out.insert(n) {
                work.push(n);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum FactRule {
    OSequence,
    Unimodal,
    UnimodalBelow { a_max: u64 },
    Known { a: u64, b: u64 },
    Excluded { a: u64, b: u64, trace: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub id: String,
    #[serde(flatten)]
    pub rule: FactRule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub statement: String,
}

/// One link of a verdict's justification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub rule: String,
    pub statement: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
}

impl Provenance {
    fn of(fact: &Fact) -> Self {
        Provenance {
            rule: fact.id.clone(),
            statement: fact.statement.clone(),
            citation: fact.citation.clone(),
            trace: match &fact.rule {
                FactRule::Excluded { trace, .. } => Some(trace.clone()),
                _ => None,
            },
        }
    }

    fn extension(statement: String) -> Self {
        Provenance {
            rule: "extension".into(),
            statement,
            citation: None,
            trace: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub query: SocleFour,
    pub h: [u64; 5],
    pub verdict: Verdict,
    /// Applications of the extension rules in the provenance chain.
    pub chain_length: u64,
    pub provenance: Vec<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactBase {
    pub version: u32,
    pub facts: Vec<Fact>,
}

struct Decision {
    verdict: Verdict,
    chain_length: u64,
    provenance: Vec<Provenance>,
}

impl FactBase {
    /// The bundled fact base, validated once.
    pub fn bundled() -> Result<&'static FactBase> {
        static BASE: OnceLock<Result<FactBase>> = OnceLock::new();
        BASE.get_or_init(|| FactBase::parse(BUNDLED)).as_ref().map_err(Clone::clone)
    }

    /// Parses and validates: version, citations, well-formed sequences and
    /// absence of conflicting verdicts for `a <= CONSISTENCY_HORIZON`.
    pub fn parse(json: &str) -> Result<Self> {
        let base: FactBase = serde_json::from_str(json).map_err(|e| ProverError::Json(e.to_string()))?;
        if base.version != FACT_BASE_VERSION {
            return Err(ProverError::UnsupportedVersion(base.version));
        }
        let bib = Bibliography::bundled()?;
        for f in &base.facts {
            let invalid = |reason: &str| ProverError::InvalidFact {
                id: f.id.clone(),
                reason: reason.to_string(),
            };
            if let Some(c) = &f.citation {
                if !bib.contains(c) {
                    return Err(invalid("citation not in the bibliography"));
                }
            }
            match &f.rule {
                FactRule::Known { a, b } | FactRule::Excluded { a, b, .. } => {
                    if !SocleFour::new(*a, *b).is_o_sequence() {
                        return Err(invalid("not an O-sequence"));
                    }
                    if matches!(f.rule, FactRule::Known { .. }) && f.citation.is_none() {
                        return Err(invalid("a known sequence needs a citation"));
                    }
                }
                FactRule::Unimodal | FactRule::UnimodalBelow { .. } if f.citation.is_none() => {
                    return Err(invalid("a cited rule needs a citation"));
                }
                _ => {}
            }
        }
        base.check_consistency(CONSISTENCY_HORIZON)?;
        Ok(base)
    }

    /// Fails on the first `(a, b)` with `a <= horizon` that two facts decide
    /// in opposite ways.
    pub fn check_consistency(&self, horizon: u64) -> Result<()> {
        for a in 1..=horizon {
            for b in 0..=b_ceiling(a) {
                let ds = self.decisions(SocleFour::new(a, b));
                let yes = ds.iter().find(|d| d.verdict == Verdict::Gorenstein);
                let no = ds.iter().find(|d| d.verdict == Verdict::NotGorenstein);
                if let (Some(y), Some(n)) = (yes, no) {
                    return Err(ProverError::FactConflict {
                        a,
                        b,
                        gorenstein: y.provenance[0].rule.clone(),
                        not: n.provenance[0].rule.clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Every decision the facts support, in fact order.
    fn decisions(&self, q: SocleFour) -> Vec<Decision> {
        let mut out = Vec::new();
        let o_seq = q.is_o_sequence();
        for f in &self.facts {
            let decided = |verdict, chain_length, extra: Vec<Provenance>| Decision {
                verdict,
                chain_length,
                provenance: std::iter::once(Provenance::of(f)).chain(extra).collect(),
            };
            match &f.rule {
                FactRule::OSequence if !o_seq => {
                    out.push(decided(Verdict::NotGorenstein, 0, Vec::new()));
                    return out;
                }
                _ if !o_seq => {}
                FactRule::OSequence => {}
                FactRule::Unimodal if q.b >= q.a => out.push(decided(Verdict::Gorenstein, 0, Vec::new())),
                FactRule::UnimodalBelow { a_max } if q.a <= *a_max && q.b < q.a => {
                    out.push(decided(Verdict::NotGorenstein, 0, Vec::new()))
                }
                FactRule::Known { a, b } if q.a >= *a && q.b >= b + (q.a - a) => {
                    let k = q.a - a;
                    let mut extra = Vec::new();
                    if k > 0 {
                        extra.push(Provenance::extension(format!(
                            "(1,n,a,n,1) -> (1,n+1,a+1,n+1,1) applied {k} times: (1,{a},{b},{a},1) -> (1,{},{},{},1)",
                            q.a,
                            b + k,
                            q.a
                        )));
                    }
                    if q.b > b + k {
                        extra.push(Provenance::extension(format!(
                            "(1,n,a,n,1) -> (1,n,b,n,1) for a <= b <= C(n+1,2): raise {} to {}",
                            b + k,
                            q.b
                        )));
                    }
                    out.push(decided(Verdict::Gorenstein, k + u64::from(q.b > b + k), extra));
                }
                FactRule::Excluded { a, b, .. } if q.a <= *a && q.b + (a - q.a) <= *b => {
                    let k = a - q.a;
                    let mut extra = Vec::new();
                    if k > 0 || q.b + k < *b {
                        extra.push(Provenance::extension(format!(
                            "if (1,{0},{1},{0},1) were Gorenstein, extending {k} times and raising the middle entry would give (1,{a},{b},{a},1)",
                            q.a, q.b
                        )));
                    }
                    out.push(decided(Verdict::NotGorenstein, k + u64::from(q.b + k < *b), extra));
                }
                _ => {}
            }
        }
        out
    }

    pub fn classify(&self, a: u64, b: u64) -> ClassificationResult {
        let query = SocleFour::new(a, b);
        let decision = self
            .decisions(query)
            .into_iter()
            .min_by_key(|d| d.chain_length);
        match decision {
            Some(d) => ClassificationResult {
                query,
                h: query.h_vector(),
                verdict: d.verdict,
                chain_length: d.chain_length,
                provenance: d.provenance,
                reason: None,
            },
            None => ClassificationResult {
                query,
                h: query.h_vector(),
                verdict: Verdict::Unknown,
                chain_length: 0,
                provenance: Vec::new(),
                reason: Some(format!(
                    "no fact decides (1,{a},{b},{a},1): it is non-unimodal with a >= 13 and lies outside the extension chains of every known and every excluded sequence"
                )),
            },
        }
    }
}

/// Classifies `(1,a,b,a,1)` against the bundled fact base.
pub fn classify_socle4(a: u64, b: u64) -> Result<ClassificationResult> {
    Ok(FactBase::bundled()?.classify(a, b))
}
