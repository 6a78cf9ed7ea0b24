use std::fmt::Write;

use aeu_core::lab::CheckReport;
use serde_json::{json, Value as Json};

pub fn report_json(r: &CheckReport) -> Json {
    let verdicts: Vec<Json> = r
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "law": v.law,
                "checked": v.checked,
                "passed": v.passed(),
                "counterexample": v.counterexample,
                "note": v.note,
            })
        })
        .collect();
    json!({
        "suite": r.suite,
        "semiring": r.semiring,
        "mode": r.mode.to_string(),
        "universe": r.universe,
        "passed": r.passed(),
        "verdicts": verdicts,
    })
}

pub fn report_text(r: &CheckReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "suite     {}", r.suite);
    let _ = writeln!(out, "semiring  {}", r.semiring);
    let _ = writeln!(out, "mode      {}", r.mode);
    let _ = writeln!(out, "universe  {}", r.universe);
    let _ = writeln!(out, "  {:<28} {:>10}  VERDICT", "LAW", "CHECKED");
    for v in &r.verdicts {
        let verdict = if v.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  {:<28} {:>10}  {verdict}", v.law, v.checked);
        if let Some(c) = &v.counterexample {
            let _ = writeln!(out, "      counterexample: {c}");
        }
        if let Some(n) = &v.note {
            let _ = writeln!(out, "      note: {n}");
        }
    }
    let _ = writeln!(out, "result    {}", if r.passed() { "PASS" } else { "FAIL" });
    out
}
