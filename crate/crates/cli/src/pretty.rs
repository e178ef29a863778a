//! Plain-text rendering for `--pretty`.

use std::collections::BTreeMap;
use std::fmt::Write;

use hilbfun::prover::ProofTrace;
use serde_json::Value;

use crate::CommandResult;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    let Value::Array(items) = v else { return None };
    let parts: Option<Vec<String>> = items
        .iter()
        .map(|x| scalar(x).or_else(|| inline(x).map(|s| format!("({s})"))))
        .collect();
    parts.map(|p| p.join(", "))
}

fn tree(out: &mut String, indent: usize, v: &Value) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        tree(out, indent + 1, x);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}[{i}]");
                        tree(out, indent + 1, x);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// The usual Betti diagram: column `i`, row `j - i`.
fn betti_table(v: &Value) -> Option<String> {
    let nvars = v.get("nvars")?.as_u64()? as usize;
    let mut cells = BTreeMap::new();
    for e in v.get("betti")?.as_array()? {
        let e = e.as_array()?;
        let (i, j, b) = (e[0].as_u64()? as usize, e[1].as_u64()? as usize, e[2].as_u64()?);
        cells.insert((j - i, i), b);
    }
    let width = cells.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(2);
    let mut out = format!("{:>4} ", "");
    for i in 0..=nvars {
        let _ = write!(out, " {i:>width$}");
    }
    out.push('\n');
    let rows: Vec<usize> = cells.keys().map(|k| k.0).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    for r in rows {
        let _ = write!(out, "{r:>4}:");
        for i in 0..=nvars {
            match cells.get(&(r, i)) {
                Some(b) => {
                    let _ = write!(out, " {b:>width$}");
                }
                None => {
                    let _ = write!(out, " {:>width$}", "-");
                }
            }
        }
        out.push('\n');
    }
    Some(out)
}

pub fn render(r: &CommandResult) -> String {
    let mut out = format!("{}\n", r.command);
    let body = match r.command.as_str() {
        "prove-19" => serde_json::from_value::<ProofTrace>(r.payload["trace"].clone())
            .ok()
            .map(|t| t.render()),
        "lex betti" => betti_table(&r.payload),
        _ => None,
    };
    match body {
        Some(text) => out.push_str(&text),
        None => tree(&mut out, 1, &r.payload),
    }
    if !r.citations.is_empty() {
        let _ = writeln!(out, "citations: {}", r.citations.join("; "));
    }
    if let (Some(seed), Some(prime)) = (r.seed, r.prime) {
        let _ = writeln!(out, "seed: {seed}, prime: {prime}");
    }
    out
}
