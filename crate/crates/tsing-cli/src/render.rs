//! JSON, text and markdown rendering of library values.
//!
//! Rationals are serialized as `{"num": ..., "den": ...}` objects and never
//! printed as decimals; all tables are row-ordered deterministically, so a
//! fixed argv always produces byte-identical output.

use num_rational::Rational64;
use serde_json::{json, Value};

use tsing::census::{
    CensusRecord, Component, LemmaRow, Smoothability, Verdict, VerificationReport,
};
use tsing::hilbert::HilbertSeries;
use tsing::hirzebruch::{CoverInvariants, FnClass, Splitting};
use tsing::hj::{QuotientType, TString};
use tsing::lattice::QDivisor;

pub fn rational(r: &Rational64) -> Value {
    json!({ "num": *r.numer(), "den": *r.denom() })
}

pub fn tstring(s: &TString) -> Value {
    Value::Array(s.entries().iter().map(|&b| json!(b)).collect())
}

pub fn quotient(q: &QuotientType) -> Value {
    json!({
        "d": q.d(),
        "n": q.n(),
        "a": q.a(),
        "order": q.order().ok(),
        "weight": q.weight().ok(),
        "label": q.to_string(),
    })
}

pub fn qdivisor(d: &QDivisor) -> Value {
    Value::Array(d.coeffs().iter().map(rational).collect())
}

pub fn fn_class(c: &FnClass) -> Value {
    let (x, y) = c.section_basis();
    json!({
        "n": c.n(),
        "sigma0": x,
        "gamma": y,
        "display": c.to_string(),
    })
}

pub fn cover(c: &CoverInvariants) -> Value {
    json!({ "chi": c.chi, "k_self": c.k_self, "p_g": c.p_g, "q": c.q })
}

pub fn splitting(s: &Splitting) -> Value {
    json!({
        "d1": fn_class(&s.d1),
        "d2": fn_class(&s.d2),
        "m": s.m,
        "d": s.d,
    })
}

pub fn hilbert_series(h: &HilbertSeries) -> Value {
    json!({
        "weights": h.weights(),
        "relations": h.relations(),
        "display": h.to_string(),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    match v {
        Verdict::Pending => json!({ "status": "pending" }),
        Verdict::Admitted { construction } => {
            json!({ "status": "admitted", "construction": construction })
        }
        Verdict::Excluded { reason, citation } => {
            json!({ "status": "excluded", "reason": reason, "citation": citation })
        }
        Verdict::Unresolved => json!({ "status": "unresolved" }),
    }
}

pub fn component(c: &Component) -> Value {
    match c {
        Component::MainComponentDivisor => json!("main-component-divisor"),
        Component::MainComponentCodim(k) => json!({ "main-component-codim": k }),
        Component::NewComponent => json!("new-component"),
        Component::NotApplicable => Value::Null,
    }
}

pub fn smoothability(s: &Smoothability) -> Value {
    match s {
        Smoothability::Yes => json!("yes"),
        Smoothability::No => json!("no"),
        Smoothability::Conjectural => json!("conjectural"),
    }
}

pub fn record(rec: &CensusRecord) -> Value {
    json!({
        "cartier_index": rec.cartier_index,
        "type": quotient(&rec.quotient),
        "tstring": tstring(&rec.tstring),
        "k2_resolution": rec.k2_resolution,
        "verdict": verdict(&rec.verdict),
        "moduli": rec.moduli_dim,
        "component": component(&rec.component),
        "smoothability": rec.smoothability.iter().map(|e| json!({
            "case": e.case,
            "verdict": smoothability(&e.verdict),
        })).collect::<Vec<_>>(),
        "family": rec.family,
        "note": rec.note,
    })
}

pub fn lemma_row(row: &LemmaRow) -> Value {
    json!({
        "r_minus_d": row.r_minus_d,
        "cartier_index": row.cartier_index,
        "k2_resolution": row.k2_resolution,
        "singularity": row.singularity,
        "strings": row.strings,
        "representatives": row.representatives.iter().map(tstring).collect::<Vec<_>>(),
    })
}

pub fn report(rep: &VerificationReport) -> Value {
    json!({
        "subject": rep.subject,
        "construction": rep.construction,
        "all_passed": rep.all_passed(),
        "checks": rep.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "expected": c.expected,
            "actual": c.actual,
        })).collect::<Vec<_>>(),
    })
}

/// Singularity column of a classification row: the family label when the row
/// aggregates one, otherwise the quotient label.
pub fn singularity_label(rec: &CensusRecord) -> String {
    rec.family
        .clone()
        .unwrap_or_else(|| rec.quotient.to_string())
}

pub fn construction_label(rec: &CensusRecord) -> String {
    match &rec.verdict {
        Verdict::Admitted { construction } => construction.clone(),
        Verdict::Excluded { .. } => "-".to_string(),
        Verdict::Pending => "pending".to_string(),
        Verdict::Unresolved => "unresolved".to_string(),
    }
}

pub fn verdict_line(rec: &CensusRecord) -> String {
    match &rec.verdict {
        Verdict::Admitted { construction } => {
            let mut line = format!("admitted ({construction})");
            if let Some(mu) = rec.moduli_dim {
                line.push_str(&format!(", moduli {mu}"));
            }
            match rec.component {
                Component::MainComponentDivisor => line.push_str(", divisor in main component"),
                Component::MainComponentCodim(c) => {
                    line.push_str(&format!(", codim {c} in main component"))
                }
                Component::NewComponent => line.push_str(", new component"),
                Component::NotApplicable => {}
            }
            if let Some(note) = &rec.note {
                line.push_str(&format!(" [{note}]"));
            }
            line
        }
        Verdict::Excluded { reason, citation } => format!("excluded: {reason} ({citation})"),
        Verdict::Pending => "pending".to_string(),
        Verdict::Unresolved => "unresolved".to_string(),
    }
}

/// A markdown table with the given header and rows.
pub fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", header.join(" | ")));
    out.push_str(&format!(
        "| {} |\n",
        header.iter().map(|_| "---").collect::<Vec<_>>().join(" | ")
    ));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}
