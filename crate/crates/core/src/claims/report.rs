use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use super::verify::{ClaimResult, Semantics, Verdict};
use crate::exact::{show, Rational, RationalJson};

/// Verification results with their JSON and text renderings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub semantics: Semantics,
    pub rows: Vec<ClaimResult>,
}

pub fn report(rows: Vec<ClaimResult>, semantics: Semantics) -> Report {
    Report { semantics, rows }
}

fn rational(r: Option<Rational>) -> Value {
    match r {
        Some(v) => json!(RationalJson::from(v)),
        None => Value::Null,
    }
}

impl Report {
    /// Verdict counts per theorem, theorems in first-appearance order.
    pub fn counts(&self) -> Vec<(String, BTreeMap<Verdict, usize>)> {
        let mut out: Vec<(String, BTreeMap<Verdict, usize>)> = Vec::new();
        for r in &self.rows {
            let pos = match out.iter().position(|(t, _)| *t == r.claim.theorem) {
                Some(p) => p,
                None => {
                    out.push((r.claim.theorem.clone(), BTreeMap::new()));
                    out.len() - 1
                }
            };
            *out[pos].1.entry(r.verdict).or_default() += 1;
        }
        out
    }

    pub fn totals(&self) -> BTreeMap<Verdict, usize> {
        let mut t = BTreeMap::new();
        for r in &self.rows {
            *t.entry(r.verdict).or_default() += 1;
        }
        t
    }

    pub fn to_json_value(&self) -> Value {
        let count_map = |m: &BTreeMap<Verdict, usize>| -> Value {
            Value::Object(m.iter().map(|(v, c)| (v.name().to_string(), json!(c))).collect())
        };
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "theorem": r.claim.theorem,
                    "case": r.claim.case(),
                    "source": r.claim.source,
                    "display": r.claim.display,
                    "reading": r.claim.reading,
                    "note": r.claim.note,
                    "family": r.claim.family.name(),
                    "variant": r.claim.variant,
                    "index": r.claim.index,
                    "n": r.n,
                    "chi": r.chi,
                    "experimental": r.experimental,
                    "claimed": rational(Some(r.claimed)),
                    "witness": rational(r.witness),
                    "phi": rational(r.phi),
                    "oracle": rational(r.oracle),
                    "permutation": rational(r.permutation),
                    "m4_std": r.m4_std,
                    "verdict": r.verdict,
                    "reference_coloring": r.reference_coloring,
                })
            })
            .collect();
        json!({
            "semantics": self.semantics,
            "rows": rows,
            "summary": Value::Object(
                self.counts()
                    .iter()
                    .map(|(t, m)| (t.clone(), count_map(m)))
                    .collect()
            ),
            "totals": count_map(&self.totals()),
        })
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("report serialises");
        s.push('\n');
        s
    }

    /// Fixed-width table grouped by theorem.
    pub fn to_table(&self) -> String {
        let cell = |r: Option<Rational>| r.map(show).unwrap_or_else(|| "-".into());
        let reference = self.semantics.name();
        let mut out = String::new();
        for (theorem, counts) in self.counts() {
            let _ = writeln!(out, "Theorem {theorem}");
            let _ = writeln!(
                out,
                "  {:<16} {:<10} {:>3} {:>12} {:>12} {:>12} {:>12}  verdict",
                "case", "reading", "n", "claimed", "witness", "phi", reference
            );
            for r in self.rows.iter().filter(|r| r.claim.theorem == theorem) {
                let reference_value = match self.semantics {
                    Semantics::Oracle => r.oracle,
                    Semantics::Permutation => r.permutation,
                    Semantics::Witness => r.witness,
                };
                let _ = writeln!(
                    out,
                    "  {:<16} {:<10} {:>3} {:>12} {:>12} {:>12} {:>12}  {}{}",
                    format!("{} {}", r.claim.index, r.claim.case()),
                    r.claim.reading.name(),
                    r.n,
                    show(r.claimed),
                    cell(r.witness),
                    cell(r.phi),
                    cell(reference_value),
                    r.verdict,
                    if r.experimental { " (experimental)" } else { "" }
                );
            }
            let summary: Vec<String> = counts.iter().map(|(v, c)| format!("{v} {c}")).collect();
            let _ = writeln!(out, "  counts: {}\n", summary.join(", "));
        }
        let totals: Vec<String> = self.totals().iter().map(|(v, c)| format!("{v} {c}")).collect();
        let _ = writeln!(out, "total: {}", totals.join(", "));
        out
    }
}
