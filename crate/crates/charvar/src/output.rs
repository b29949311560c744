use std::fmt::Write as _;

use charvar_core::{Detail, VerificationReport};
use serde_json::{json, Map, Value};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub fn detail_json(d: &Detail) -> Value {
    match d {
        Detail::Bool(b) => Value::Bool(*b),
        Detail::Int(i) => json!(i),
        // JSON has no infinities; keep them readable instead of null.
        Detail::Float(f) if !f.is_finite() => Value::String(format!("{f}")),
        Detail::Float(f) => json!(f),
        Detail::Text(s) => Value::String(s.clone()),
        Detail::Poly(p) => Value::String(p.to_string()),
        Detail::List(items) => Value::Array(items.iter().map(detail_json).collect()),
    }
}

pub fn report_json(r: &VerificationReport) -> Value {
    let details: Map<String, Value> = r.details.iter().map(|(k, d)| (k.clone(), detail_json(d))).collect();
    json!({
        "claim_id": r.claim_id,
        "subject": r.subject,
        "status": r.status.as_str(),
        "details": details,
    })
}

/// Reports in output order: by claim, then subject.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (&a.claim_id, &a.subject).cmp(&(&b.claim_id, &b.subject)));
}

/// The whole output: `{tool_version, subject, data?, reports}`.
pub fn document(subject: &str, data: Option<Value>, reports: &[VerificationReport]) -> Value {
    let mut doc = Map::new();
    doc.insert("tool_version".into(), Value::String(TOOL_VERSION.into()));
    doc.insert("subject".into(), Value::String(subject.into()));
    if let Some(d) = data {
        doc.insert("data".into(), d);
    }
    doc.insert("reports".into(), Value::Array(reports.iter().map(report_json).collect()));
    Value::Object(doc)
}

pub fn render_json(doc: &Value) -> String {
    serde_json::to_string_pretty(doc).expect("values are serializable")
}

fn short(d: &Detail) -> String {
    let s = detail_json(d).to_string();
    let s = s.trim_matches('"');
    if s.chars().count() > 60 {
        let cut: String = s.chars().take(57).collect();
        format!("{cut}...")
    } else {
        s.to_string()
    }
}

/// One line per report, plus the details of failing ones.
pub fn render_table(subject: &str, reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    let claim_w = reports.iter().map(|r| r.claim_id.len()).max().unwrap_or(5).max(5);
    let subj_w = reports.iter().map(|r| r.subject.len()).max().unwrap_or(7).max(7);
    let _ = writeln!(out, "{subject}");
    let _ = writeln!(out, "{:<claim_w$}  {:<subj_w$}  status", "claim", "subject");
    for r in reports {
        let _ = writeln!(out, "{:<claim_w$}  {:<subj_w$}  {}", r.claim_id, r.subject, r.status.as_str());
        if !r.passed() {
            for (k, d) in &r.details {
                let _ = writeln!(out, "    {k}: {}", short(d));
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(out, "{} reports, {failed} failed", reports.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use charvar_core::MultiPoly;

    #[test]
    fn json_round_trips() {
        let mut r = VerificationReport::new("Demo", "x");
        r.detail("p", MultiPoly::parse(&["x", "y"], "x*y - 1/3").unwrap());
        r.detail("gap", 1.0e-12);
        r.detail("inf", f64::INFINITY);
        r.detail("items", vec![1i64, 2, 3]);
        let text = render_json(&document("x", Some(json!({"k": "v"})), &[r]));
        let back: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(render_json(&back), text);
        assert!(text.contains("\"x*y - 1/3\""));
    }
}
