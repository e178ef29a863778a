//! Indented text rendering of a trace, one line per step, nested by case.

use std::fmt::Write;

use super::trace::{ProofTrace, Status, Step};
use super::Verdict;

fn step_line(out: &mut String, indent: usize, s: &Step) {
    let pad = "  ".repeat(indent);
    let status = match s.status {
        Status::MachineChecked => "checked",
        Status::CitedAxiom => "cited",
    };
    let mut tags = vec![status.to_string()];
    if s.status == Status::MachineChecked {
        tags.push(s.rule.name().to_string());
    }
    if s.closes {
        tags.push("closes branch".into());
    }
    tags.extend(s.flags.iter().cloned());
    let _ = writeln!(out, "{pad}[{}] {} ({}; {})", s.id, s.title, tags.join(", "), s.citation);
}

fn branch(out: &mut String, trace: &ProofTrace, id: Option<&str>, indent: usize) {
    for s in trace.steps.iter().filter(|s| s.branch.as_deref() == id) {
        step_line(out, indent, s);
    }
    for split in trace.splits.iter().filter(|s| s.parent.as_deref() == id) {
        let pad = "  ".repeat(indent);
        let _ = writeln!(out, "{pad}cases on {} (by [{}]):", split.description, split.justified_by);
        for b in &split.branches {
            let _ = writeln!(out, "{pad}- {}: {}", b.id, b.assumption);
            branch(out, trace, Some(&b.id), indent + 1);
        }
    }
}

impl ProofTrace {
    pub fn render(&self) -> String {
        let goal: Vec<String> = self.goal.iter().map(u64::to_string).collect();
        let mut out = format!("goal: ({}) is not a Gorenstein sequence\n", goal.join(","));
        for h in &self.hypotheses {
            let _ = writeln!(out, "assume: {h}");
        }
        branch(&mut out, self, None, 0);
        let conclusion = match self.conclusion {
            Verdict::Gorenstein => "gorenstein",
            Verdict::NotGorenstein => "not_gorenstein",
            Verdict::Unknown => "unknown",
        };
        let _ = writeln!(out, "conclusion: {conclusion}");
        out
    }
}
