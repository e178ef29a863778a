//! Replay: structural checks, recomputation of every machine-checked step,
//! and branch closure.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::exec::Execution;

use super::bibliography::Bibliography;
use super::trace::{Operand, ProofTrace, Rule, Status, Step};
use super::{ProverError, Result, Verdict};

/// Summary of a successful replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub steps: usize,
    pub machine_checked: usize,
    pub cited: usize,
    pub cited_groups: BTreeSet<String>,
    pub closed_branches: usize,
    pub conclusion: Verdict,
}

fn failed(step: &str, reason: impl Into<String>) -> ProverError {
    ProverError::StepFailed {
        step: step.to_string(),
        reason: reason.into(),
    }
}

struct Scope<'a> {
    /// Branch id to parent branch (`None` for top-level branches).
    parent: HashMap<&'a str, Option<&'a str>>,
}

impl<'a> Scope<'a> {
    fn contains(&self, branch: &str) -> bool {
        self.parent.contains_key(branch)
    }

    /// Whether `inner` equals `outer` or lies below it. `None` is the root.
    fn within(&self, inner: Option<&str>, outer: Option<&str>) -> bool {
        let mut cur = inner;
        loop {
            if cur == outer {
                return true;
            }
            match cur {
                None => return false,
                Some(b) => cur = self.parent.get(b).copied().flatten(),
            }
        }
    }
}

pub fn replay(trace: &ProofTrace) -> Result<ReplayReport> {
    replay_with(trace, Execution::default())
}

pub fn replay_with(trace: &ProofTrace, exec: Execution) -> Result<ReplayReport> {
    let bib = Bibliography::bundled()?;

    let mut scope = Scope { parent: HashMap::new() };
    let mut split_ids = BTreeSet::new();
    for split in &trace.splits {
        if !split_ids.insert(split.id.as_str()) {
            return Err(ProverError::DuplicateId(split.id.clone()));
        }
        if let Some(p) = &split.parent {
            if !scope.contains(p) {
                return Err(ProverError::UnknownBranch {
                    owner: split.id.clone(),
                    branch: p.clone(),
                });
            }
        }
        if split.branches.len() < 2 {
            return Err(ProverError::DegenerateSplit(split.id.clone()));
        }
        for b in &split.branches {
            if scope.parent.insert(b.id.as_str(), split.parent.as_deref()).is_some() {
                return Err(ProverError::DuplicateId(b.id.clone()));
            }
        }
    }

    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut outputs: Vec<BTreeMap<String, i64>> = Vec::with_capacity(trace.steps.len());
    for (n, step) in trace.steps.iter().enumerate() {
        if index.insert(step.id.as_str(), n).is_some() {
            return Err(ProverError::DuplicateId(step.id.clone()));
        }
        check_step_shape(step, &scope, &bib)?;
        let in_scope = |target: &str, output: &str| -> Result<i64> {
            let &k = index
                .get(target)
                .filter(|&&k| k < n)
                .ok_or_else(|| failed(&step.id, format!("reference to unknown or later step {target}")))?;
            let other = &trace.steps[k];
            let reusable = matches!(step.rule, Rule::Reuse { .. });
            if !reusable && !scope.within(step.branch.as_deref(), other.branch.as_deref()) {
                return Err(failed(&step.id, format!("step {target} is out of scope")));
            }
            outputs[k]
                .get(output)
                .copied()
                .ok_or_else(|| failed(&step.id, format!("step {target} has no output {output}")))
        };
        for (target, output) in step.rule.operand_refs() {
            in_scope(target, output)?;
        }
        let inputs = step.rule.inputs();
        for b in &step.uses {
            let want = in_scope(&b.step, &b.output)?;
            let have = inputs
                .get(&b.input)
                .ok_or_else(|| failed(&step.id, format!("no input named {}", b.input)))?;
            if *have != want {
                return Err(failed(
                    &step.id,
                    format!("input {} is {have} but {}:{} is {want}", b.input, b.step, b.output),
                ));
            }
        }
        if let Rule::Reuse { step: target, .. } = &step.rule {
            in_scope(target, "count")?;
        }
        outputs.push(step.rule.outputs());
    }
    for split in &trace.splits {
        let &k = index.get(split.justified_by.as_str()).ok_or_else(|| ProverError::UnknownStep {
            owner: split.id.clone(),
            step: split.justified_by.clone(),
        })?;
        if !scope.within(split.parent.as_deref(), trace.steps[k].branch.as_deref()) {
            return Err(ProverError::UnknownStep {
                owner: split.id.clone(),
                step: split.justified_by.clone(),
            });
        }
    }

    let resolve = |op: &Operand| -> std::result::Result<i64, String> { eval(op, &index, &outputs) };
    let results = exec.map(&trace.steps, |s| s.rule.verify(&resolve));
    for (step, r) in trace.steps.iter().zip(results) {
        r.map_err(|reason| failed(&step.id, reason))?;
        if let Rule::Reuse { step: target, survivors } = &step.rule {
            match &trace.steps[index[target.as_str()]].rule {
                Rule::DegreeExtension { survivors: s, .. } if s == survivors => {}
                _ => return Err(failed(&step.id, format!("step {target} does not record these survivors"))),
            }
        }
    }

    let closed = close_branches(trace, &index)?;
    let roots: Vec<_> = trace.splits.iter().filter(|s| s.parent.is_none()).collect();
    let derived = !roots.is_empty() && roots.iter().all(|s| s.branches.iter().all(|b| closed.contains(b.id.as_str())));
    if !derived {
        let open = trace
            .splits
            .iter()
            .flat_map(|s| &s.branches)
            .find(|b| !closed.contains(b.id.as_str()))
            .map(|b| b.id.clone())
            .unwrap_or_default();
        return Err(ProverError::BranchNotClosed(open));
    }
    if trace.conclusion != Verdict::NotGorenstein {
        return Err(ProverError::ConclusionMismatch);
    }

    let cited: Vec<&Step> = trace.steps.iter().filter(|s| s.status == Status::CitedAxiom).collect();
    Ok(ReplayReport {
        steps: trace.steps.len(),
        machine_checked: trace.steps.len() - cited.len(),
        cited: cited.len(),
        cited_groups: cited.iter().filter_map(|s| s.group.clone()).collect(),
        closed_branches: closed.len(),
        conclusion: Verdict::NotGorenstein,
    })
}

/// Parses, replays, and checks that re-serialization reproduces `json` exactly.
pub fn replay_json(json: &str) -> Result<ReplayReport> {
    let trace: ProofTrace = serde_json::from_str(json).map_err(|e| ProverError::Json(e.to_string()))?;
    let report = replay(&trace)?;
    let again = serde_json::to_string_pretty(&trace).map_err(|e| ProverError::Json(e.to_string()))?;
    if again != json {
        return Err(ProverError::NotByteIdentical);
    }
    Ok(report)
}

fn check_step_shape(step: &Step, scope: &Scope, bib: &Bibliography) -> Result<()> {
    if let Some(b) = &step.branch {
        if !scope.contains(b) {
            return Err(ProverError::UnknownBranch {
                owner: step.id.clone(),
                branch: b.clone(),
            });
        }
    }
    if step.citation.trim().is_empty() {
        return Err(failed(&step.id, "missing citation"));
    }
    let cited_rule = matches!(step.rule, Rule::Cited { .. });
    match step.status {
        Status::MachineChecked if cited_rule => Err(failed(&step.id, "a cited claim cannot be machine checked")),
        Status::CitedAxiom if !cited_rule => Err(failed(&step.id, "only cited claims may be cited axioms")),
        Status::CitedAxiom => {
            if step.group.as_deref().is_none_or(str::is_empty) {
                return Err(failed(&step.id, "cited axiom without a group"));
            }
            for key in step.citation.split(';').map(str::trim) {
                if !bib.contains(key) {
                    return Err(ProverError::UnknownCitation {
                        step: step.id.clone(),
                        key: key.to_string(),
                    });
                }
            }
            Ok(())
        }
        Status::MachineChecked => {
            if step.closes && (step.branch.is_none() || !step.rule.is_contradiction()) {
                return Err(failed(&step.id, "step cannot close its branch"));
            }
            Ok(())
        }
    }
    .and_then(|()| {
        if step.closes && step.status == Status::CitedAxiom {
            Err(failed(&step.id, "a cited claim cannot close a branch"))
        } else {
            Ok(())
        }
    })
}

fn eval(op: &Operand, index: &HashMap<&str, usize>, outputs: &[BTreeMap<String, i64>]) -> std::result::Result<i64, String> {
    match op {
        Operand::Lit(v) => Ok(*v),
        Operand::Ref { step, output } => index
            .get(step.as_str())
            .and_then(|&k| outputs[k].get(output))
            .copied()
            .ok_or_else(|| format!("unresolved reference {step}:{output}")),
        Operand::Diff(a, b) => Ok(eval(a, index, outputs)? - eval(b, index, outputs)?),
    }
}

/// Fixpoint: a branch is closed by a closing step in it, or when every
/// branch of some split inside it is closed. Reuse steps count once the
/// branch of the reused step is closed.
fn close_branches<'a>(trace: &'a ProofTrace, index: &HashMap<&str, usize>) -> Result<BTreeSet<&'a str>> {
    let mut closed: BTreeSet<&str> = BTreeSet::new();
    loop {
        let before = closed.len();
        for step in trace.steps.iter().filter(|s| s.closes) {
            let Some(b) = step.branch.as_deref() else { continue };
            let ready = match &step.rule {
                Rule::Reuse { step: target, .. } => trace.steps[index[target.as_str()]]
                    .branch
                    .as_deref()
                    .is_some_and(|tb| closed.contains(tb)),
                _ => true,
            };
            if ready {
                closed.insert(b);
            }
        }
        for split in &trace.splits {
            if let Some(p) = split.parent.as_deref() {
                if split.branches.iter().all(|b| closed.contains(b.id.as_str())) {
                    closed.insert(p);
                }
            }
        }
        if closed.len() == before {
            return Ok(closed);
        }
    }
}
