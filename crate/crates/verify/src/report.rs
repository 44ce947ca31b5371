//! Verification reports and their JSON / CSV / Markdown renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use hyperspectra::spectral::spectral_radius;
use hyperspectra::Hypergraph;

use crate::error::{Result, VerifyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Parameters fall outside the stated hypotheses; values are reported as
    /// observations only.
    HypothesesUnmet,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::HypothesesUnmet => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub label: String,
    pub n: usize,
    pub k: usize,
    pub lambda1: f64,
    /// (m−1)·λ₁.
    pub scaled: f64,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Inequality {
    /// Reads as `lhs_label < rhs_label` (or ≤ when not strict).
    pub lhs_label: String,
    pub rhs_label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub strict: bool,
    /// rhs − lhs.
    pub margin: f64,
    pub holds: bool,
    /// False for observations outside the stated hypotheses.
    pub asserted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterInstance {
    pub description: String,
    pub hypergraph: Hypergraph,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub claim: String,
    pub params: BTreeMap<String, String>,
    /// How the candidate set was formed (exhaustive, structured, …).
    pub scope: Vec<String>,
    pub instances: Vec<InstanceRecord>,
    pub inequalities: Vec<Inequality>,
    pub notes: Vec<String>,
    pub status: Status,
    pub counter_instance: Option<CounterInstance>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Smallest margin over asserted inequalities.
    pub fn min_margin(&self) -> Option<f64> {
        self.inequalities
            .iter()
            .filter(|i| i.asserted)
            .map(|i| i.margin)
            .reduce(f64::min)
    }
}

/// Accumulates a report; the status is settled by [`ReportBuilder::finish`].
pub struct ReportBuilder {
    report: VerificationReport,
    started: Instant,
    tol: f64,
    margin: f64,
    hypotheses: bool,
}

impl ReportBuilder {
    pub fn new(id: &str, claim: &str, tol: f64, margin: f64) -> Self {
        ReportBuilder {
            report: VerificationReport {
                theorem_id: id.into(),
                claim: claim.into(),
                params: BTreeMap::new(),
                scope: Vec::new(),
                instances: Vec::new(),
                inequalities: Vec::new(),
                notes: Vec::new(),
                status: Status::Pass,
                counter_instance: None,
                wall_time_ms: 0.0,
            },
            started: Instant::now(),
            tol,
            margin,
            hypotheses: true,
        }
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn margin(&self) -> f64 {
        self.margin
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.report.params.insert(key.into(), value.to_string());
        self
    }

    pub fn scope(&mut self, s: impl Into<String>) -> &mut Self {
        self.report.scope.push(s.into());
        self
    }

    pub fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.report.notes.push(s.into());
        self
    }

    /// Records whether the stated hypotheses hold; when they do not, later
    /// comparisons are kept as observations.
    pub fn hypotheses(&mut self, hold: bool, description: &str) -> &mut Self {
        if !hold {
            self.hypotheses = false;
            self.report
                .notes
                .push(format!("outside stated hypotheses: {description}"));
        }
        self
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses
    }

    /// Computes λ₁ of `h` at the report tolerance and records it.
    pub fn instance(&mut self, label: &str, h: &Hypergraph) -> Result<f64> {
        let rec = compute_instance(label, h, self.tol)?;
        let l = rec.lambda1;
        self.report.instances.push(rec);
        Ok(l)
    }

    pub fn push_instance(&mut self, rec: InstanceRecord) {
        self.report.instances.push(rec);
    }

    fn compare(
        &mut self,
        lhs_label: &str,
        lhs: f64,
        rhs_label: &str,
        rhs: f64,
        strict: bool,
        slack: f64,
        asserted: bool,
    ) -> bool {
        let margin = rhs - lhs;
        let holds = if strict {
            margin > self.margin
        } else {
            margin >= -slack
        };
        let asserted = asserted && self.hypotheses;
        self.report.inequalities.push(Inequality {
            lhs_label: lhs_label.into(),
            rhs_label: rhs_label.into(),
            lhs,
            rhs,
            strict,
            margin,
            holds,
            asserted,
        });
        if asserted && !holds {
            self.report.status = Status::Fail;
        }
        holds
    }

    /// Asserts lhs < rhs with the strictness margin.
    pub fn less(&mut self, lhs_label: &str, lhs: f64, rhs_label: &str, rhs: f64) -> bool {
        self.compare(lhs_label, lhs, rhs_label, rhs, true, 0.0, true)
    }

    /// Asserts lhs ≤ rhs + slack.
    pub fn at_most(
        &mut self,
        lhs_label: &str,
        lhs: f64,
        rhs_label: &str,
        rhs: f64,
        slack: f64,
    ) -> bool {
        self.compare(lhs_label, lhs, rhs_label, rhs, false, slack, true)
    }

    /// Records lhs < rhs without asserting it.
    pub fn observe_less(&mut self, lhs_label: &str, lhs: f64, rhs_label: &str, rhs: f64) -> bool {
        self.compare(lhs_label, lhs, rhs_label, rhs, true, 0.0, false)
    }

    /// Marks the report failed (when asserted) and keeps the first witness.
    pub fn counter(&mut self, description: impl Into<String>, h: &Hypergraph) {
        if !self.hypotheses {
            self.report
                .notes
                .push(format!("observation: {}", description.into()));
            return;
        }
        self.report.status = Status::Fail;
        if self.report.counter_instance.is_none() {
            self.report.counter_instance = Some(CounterInstance {
                description: description.into(),
                hypergraph: h.clone(),
            });
        }
    }

    /// Fails without a witness hypergraph (e.g. a formula mismatch).
    pub fn fail(&mut self, description: impl Into<String>) {
        let d = description.into();
        if self.hypotheses {
            self.report.status = Status::Fail;
        }
        self.report.notes.push(d);
    }

    pub fn finish(mut self) -> VerificationReport {
        if self.report.status == Status::Pass && !self.hypotheses {
            self.report.status = Status::HypothesesUnmet;
        }
        self.report.wall_time_ms = self.started.elapsed().as_secs_f64() * 1e3;
        self.report
    }
}

pub fn compute_instance(label: &str, h: &Hypergraph, tol: f64) -> Result<InstanceRecord> {
    let r = spectral_radius(h, tol)?;
    Ok(InstanceRecord {
        label: label.into(),
        n: h.n(),
        k: h.k(),
        lambda1: r.lambda1,
        scaled: r.scaled(h.m()),
        residual: r.residual,
        iterations: r.iterations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl std::str::FromStr for Format {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            _ => Err(VerifyError::Param(format!(
                "unknown format `{s}` (json, csv, md)"
            ))),
        }
    }
}

pub fn emit_report(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)?),
        Format::Csv => to_csv(report),
        Format::Md => Ok(to_markdown(report)),
    }
}

/// One row per instance.
fn to_csv(report: &VerificationReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "theorem_id",
        "label",
        "n",
        "k",
        "lambda1",
        "scaled",
        "residual",
        "iterations",
    ])?;
    for i in &report.instances {
        w.write_record([
            report.theorem_id.clone(),
            i.label.clone(),
            i.n.to_string(),
            i.k.to_string(),
            format!("{:.15e}", i.lambda1),
            format!("{:.15e}", i.scaled),
            format!("{:.3e}", i.residual),
            i.iterations.to_string(),
        ])?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| VerifyError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn to_markdown(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {} — {:?}\n", r.theorem_id, r.status);
    let _ = writeln!(s, "{}\n", r.claim);
    if !r.params.is_empty() {
        let p: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "Parameters: {}\n", p.join(", "));
    }
    for sc in &r.scope {
        let _ = writeln!(s, "- scope: {sc}");
    }
    let _ = writeln!(
        s,
        "\n| lhs | | rhs | lhs value | rhs value | margin | holds |"
    );
    let _ = writeln!(s, "|---|---|---|---|---|---|---|");
    for i in &r.inequalities {
        let rel = match (i.strict, i.asserted) {
            (true, true) => "<",
            (false, true) => "≤",
            (_, false) => "<?",
        };
        let _ = writeln!(
            s,
            "| {} | {} | {} | {:.12} | {:.12} | {:.3e} | {} |",
            i.lhs_label, rel, i.rhs_label, i.lhs, i.rhs, i.margin, i.holds
        );
    }
    let _ = writeln!(
        s,
        "\n{} instances, wall time {:.1} ms.",
        r.instances.len(),
        r.wall_time_ms
    );
    for n in &r.notes {
        let _ = writeln!(s, "\n> {n}");
    }
    if let Some(c) = &r.counter_instance {
        let _ = writeln!(
            s,
            "\nCounter-instance: {}\n\n```json\n{}\n```",
            c.description,
            c.hypergraph.to_json()
        );
    }
    s
}
