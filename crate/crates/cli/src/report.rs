//! Text and JSON rendering of analysis reports.  All numbers are emitted
//! as exact decimal strings ("p/q" for non-integral rationals).

use milnor_core::apps::{TameStatus, TamenessVerdict};
use milnor_core::branches::BranchData;
use milnor_core::euler::MilnorReport;
use milnor_core::poly::Rat;
use num_traits::One;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn point_value(p: &[Rat]) -> Value {
    Value::Array(p.iter().map(|c| Value::String(rat_str(c))).collect())
}

fn ints<T: ToString>(v: &[T]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn branch_value(b: &BranchData) -> Value {
    let mut m = Map::new();
    m.insert("point".into(), point_value(&b.representative));
    m.insert("d".into(), Value::String(b.isotropy_order.to_string()));
    m.insert("mu0".into(), Value::String(b.mu0.to_string()));
    m.insert("tau0".into(), Value::String(b.tau0.to_string()));
    m.insert("eigen_dims".into(), ints(&b.eigen_dims));
    Value::Object(m)
}

fn tame_str(v: &TamenessVerdict) -> &'static str {
    match v.status {
        TameStatus::Tame => "Tame",
        TameStatus::CriterionNotMet => "CriterionNotMet",
        TameStatus::NotTame(_) => "NotTame",
    }
}

/// The full structured report for a MilnorReport plus a tameness verdict.
pub fn report_value(
    report: &MilnorReport,
    tame: &TamenessVerdict,
    notes: &[String],
) -> Value {
    let dec = &report.wly.dec;
    let mut m = Map::new();
    m.insert("weights".into(), ints(dec.w.weights()));
    m.insert("N".into(), Value::String(dec.degree.to_string()));
    m.insert("k".into(), Value::String(dec.gap.to_string()));
    m.insert("wly".into(), Value::Bool(report.wly.is_wly));
    m.insert(
        "branches".into(),
        Value::Array(report.branches.iter().map(branch_value).collect()),
    );
    m.insert("chi_FN".into(), Value::String(report.chi_fn.to_string()));
    m.insert("chi_tilde".into(), Value::String(report.chi_tilde.to_string()));
    m.insert(
        "formula_path".into(),
        Value::String(report.formula_path.to_string()),
    );
    m.insert("mu".into(), Value::String(report.mu.to_string()));
    m.insert(
        "hypotheses".into(),
        Value::Array(
            report
                .hypotheses
                .iter()
                .map(|(k, v)| json!([k, v]))
                .collect(),
        ),
    );
    m.insert("tame".into(), Value::String(tame_str(tame).into()));
    let mut all_notes = vec![tame.reason.clone()];
    all_notes.extend_from_slice(notes);
    m.insert(
        "notes".into(),
        Value::Array(all_notes.into_iter().map(Value::String).collect()),
    );
    Value::Object(m)
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).unwrap()),
        Format::Text => {
            let mut out = String::new();
            render_text(value, "", &mut out);
            out
        }
    }
}

fn render_text(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(m) => {
            for (k, v) in m {
                match v {
                    Value::Array(items)
                        if items.iter().any(|i| i.is_object() || i.is_array()) =>
                    {
                        for (i, item) in items.iter().enumerate() {
                            let label = format!("{prefix}{k}[{i}]");
                            match item {
                                Value::Object(_) => render_text(item, &format!("{label}."), out),
                                _ => out.push_str(&format!("{label} = {}\n", flat(item))),
                            }
                        }
                        if items.is_empty() {
                            out.push_str(&format!("{prefix}{k} = (none)\n"));
                        }
                    }
                    _ => out.push_str(&format!("{prefix}{k} = {}\n", flat(v))),
                }
            }
        }
        _ => out.push_str(&format!("{prefix}{}\n", flat(value))),
    }
}

fn flat(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(flat).collect();
            format!("({})", parts.join(", "))
        }
        other => other.to_string(),
    }
}
