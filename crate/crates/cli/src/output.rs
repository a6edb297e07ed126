//! JSON and CSV rendering of metric records and theorem reports.
//!
//! Verification CSV columns: graph_id, n, m, d, theorem, lhs_num, lhs_den,
//! lhs_real, rhs_num, rhs_den, rhs_real, holds, strict_holds, slack,
//! witness. Witness sets are space-separated vertex ids; several sets are
//! joined with `;`. Real-valued fields carry 12 significant digits.

use anyhow::Result;
use serde_json::{json, Value};
use vat_core::fraction::round_sig12;
use vat_core::metrics::{MetricResult, WeightedValue};
use vat_core::spectral::{SpectralResult, SweepResult};
use vat_core::verifier::{Quantity, SuiteReport};
use vat_core::{Fraction, VertexSet};

pub const REPORT_COLUMNS: [&str; 15] = [
    "graph_id",
    "n",
    "m",
    "d",
    "theorem",
    "lhs_num",
    "lhs_den",
    "lhs_real",
    "rhs_num",
    "rhs_den",
    "rhs_real",
    "holds",
    "strict_holds",
    "slack",
    "witness",
];

pub const METRIC_COLUMNS: [&str; 6] = ["graph_id", "metric", "num", "den", "real", "witness"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn witness_field(sets: &[VertexSet]) -> String {
    sets.iter()
        .map(|s| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(";")
}

fn quantity_fields(q: Quantity) -> [String; 3] {
    match q.exact() {
        Some(f) => [f.numer().to_string(), f.denom().to_string(), round_sig12(f.to_f64()).to_string()],
        None => [String::new(), String::new(), round_sig12(q.to_f64()).to_string()],
    }
}

/// One metrics record, built up as requested metrics are computed.
#[derive(Default)]
pub struct MetricsRecord {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub d: Option<usize>,
    pub vat: Option<MetricResult>,
    pub conductance: Option<MetricResult>,
    pub lambda2: Option<SpectralResult>,
    pub sweep: Option<SweepResult>,
    pub alpha_beta_vat: Option<WeightedValue>,
    pub weighted_vat: Option<WeightedValue>,
}

fn weighted_json(w: &WeightedValue) -> Value {
    json!({
        "alpha": w.alpha,
        "beta": w.beta,
        "value": {
            "num": w.exact.map(Fraction::numer),
            "den": w.exact.map(Fraction::denom),
            "real": round_sig12(w.value),
        },
        "witness": w.witness,
    })
}

impl MetricsRecord {
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "graph_id": self.graph_id, "n": self.n, "m": self.m, "d": self.d });
        let obj = v.as_object_mut().expect("object literal");
        if let Some(r) = &self.vat {
            obj.insert("vat".into(), json!({ "value": r.value, "witness": r.witness }));
        }
        if let Some(r) = &self.conductance {
            obj.insert("conductance".into(), json!({ "value": r.value, "witness": r.witness }));
        }
        if let Some(s) = &self.lambda2 {
            obj.insert(
                "lambda2".into(),
                json!({
                    "lambda2": round_sig12(s.lambda2),
                    "gap": round_sig12(s.gap),
                    "residual": s.residual,
                }),
            );
        }
        if let Some(s) = &self.sweep {
            obj.insert("sweep".into(), json!({ "value": s.value, "witness": s.witness }));
        }
        if let Some(w) = &self.alpha_beta_vat {
            obj.insert("alpha_beta_vat".into(), weighted_json(w));
        }
        if let Some(w) = &self.weighted_vat {
            obj.insert("weighted_vat".into(), weighted_json(w));
        }
        v
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(METRIC_COLUMNS)?;
        let id = self.graph_id.as_str();
        let mut exact_row = |name: &str, f: Fraction, witness: &VertexSet| {
            w.write_record([
                id,
                name,
                &f.numer().to_string(),
                &f.denom().to_string(),
                &round_sig12(f.to_f64()).to_string(),
                &witness_field(std::slice::from_ref(witness)),
            ])
        };
        if let Some(r) = &self.vat {
            exact_row("vat", r.value, &r.witness)?;
        }
        if let Some(r) = &self.conductance {
            exact_row("conductance", r.value, &r.witness)?;
        }
        if let Some(s) = &self.sweep {
            exact_row("sweep", s.value, &s.witness)?;
        }
        if let Some(s) = &self.lambda2 {
            w.write_record([id, "lambda2", "", "", &round_sig12(s.lambda2).to_string(), ""])?;
            w.write_record([id, "spectral_gap", "", "", &round_sig12(s.gap).to_string(), ""])?;
        }
        for (name, r) in [("alpha_beta_vat", &self.alpha_beta_vat), ("weighted_vat", &self.weighted_vat)] {
            if let Some(r) = r {
                let (num, den) = r.exact.map_or((String::new(), String::new()), |f| {
                    (f.numer().to_string(), f.denom().to_string())
                });
                w.write_record([
                    id,
                    name,
                    &num,
                    &den,
                    &round_sig12(r.value).to_string(),
                    &witness_field(std::slice::from_ref(&r.witness)),
                ])?;
            }
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

pub fn suite_json(report: &SuiteReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

pub fn suite_csv(report: &SuiteReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(REPORT_COLUMNS)?;
    for r in &report.reports {
        let [ln, ld, lr] = quantity_fields(r.lhs);
        let [rn, rd, rr] = quantity_fields(r.rhs);
        w.write_record([
            r.graph_id.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.d.map_or(String::new(), |d| d.to_string()),
            r.theorem.name().to_string(),
            ln,
            ld,
            lr,
            rn,
            rd,
            rr,
            r.holds.to_string(),
            r.strict_holds.to_string(),
            round_sig12(r.slack).to_string(),
            witness_field(&r.witnesses),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}
