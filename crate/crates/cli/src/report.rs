//! JSON report types (schema 1) and their text renderings.
//!
//! JSON is the machine interface; the human-readable text is derived from
//! the same data. Struct field order is fixed, so serialization is
//! byte-stable for a given report — census runs with different worker
//! counts produce identical files.

use serde::Serialize;
use trivext_core::resolution::{
    BimoduleReport, BimoduleVerdict, OrbitReport, PeriodicityVerdict, SimpleOutcome,
};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraInfo {
    pub name: String,
    pub dim: usize,
    pub vertices: usize,
    pub field: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_simple_periods: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub last_step: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_reached: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_trace: Option<Vec<usize>>,
}

impl From<&PeriodicityVerdict> for VerdictJson {
    fn from(v: &PeriodicityVerdict) -> Self {
        let mut out = VerdictJson {
            kind: v.kind().into(),
            n: None,
            sigma: None,
            per_simple_periods: None,
            last_step: None,
            bound_reached: None,
            dim_trace: None,
        };
        match v {
            PeriodicityVerdict::Periodic {
                n,
                sigma,
                per_simple_periods,
            } => {
                out.n = Some(*n);
                out.sigma = Some(sigma.clone());
                out.per_simple_periods = Some(per_simple_periods.clone());
            }
            PeriodicityVerdict::Diverging {
                last_step,
                dim_trace,
            } => {
                out.last_step = Some(*last_step);
                out.dim_trace = Some(dim_trace.clone());
            }
            PeriodicityVerdict::Inconclusive {
                bound_reached,
                dim_trace,
            } => {
                out.bound_reached = Some(*bound_reached);
                out.dim_trace = Some(dim_trace.clone());
            }
        }
        out
    }
}

impl From<&BimoduleVerdict> for VerdictJson {
    fn from(v: &BimoduleVerdict) -> Self {
        let mut out = VerdictJson {
            kind: match v {
                BimoduleVerdict::Periodic { .. } => "Periodic".into(),
                BimoduleVerdict::Diverging { .. } => "Diverging".into(),
                BimoduleVerdict::Inconclusive { .. } => "Inconclusive".into(),
            },
            n: None,
            sigma: None,
            per_simple_periods: None,
            last_step: None,
            bound_reached: None,
            dim_trace: None,
        };
        match v {
            BimoduleVerdict::Periodic { n } => out.n = Some(*n),
            BimoduleVerdict::Diverging {
                last_step,
                dim_trace,
            } => {
                out.last_step = Some(*last_step);
                out.dim_trace = Some(dim_trace.clone());
            }
            BimoduleVerdict::Inconclusive {
                bound_reached,
                dim_trace,
            } => {
                out.bound_reached = Some(*bound_reached);
                out.dim_trace = Some(dim_trace.clone());
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutcomeJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub last_step: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_reached: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<usize>,
}

impl From<&SimpleOutcome> for OutcomeJson {
    fn from(o: &SimpleOutcome) -> Self {
        let mut out = OutcomeJson {
            kind: match o {
                SimpleOutcome::Returned { .. } => "Returned".into(),
                SimpleOutcome::Diverged { .. } => "Diverged".into(),
                SimpleOutcome::BudgetExhausted { .. } => "BudgetExhausted".into(),
                SimpleOutcome::HitZero { .. } => "HitZero".into(),
            },
            steps: None,
            target: None,
            last_step: None,
            bound_reached: None,
            step: None,
        };
        match o {
            SimpleOutcome::Returned { steps, target } => {
                out.steps = Some(*steps);
                out.target = Some(*target);
            }
            SimpleOutcome::Diverged { last_step } => out.last_step = Some(*last_step),
            SimpleOutcome::BudgetExhausted { bound_reached } => {
                out.bound_reached = Some(*bound_reached)
            }
            SimpleOutcome::HitZero { step } => out.step = Some(*step),
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SimpleJson {
    pub vertex: usize,
    pub name: String,
    pub dims: Vec<usize>,
    pub outcome: OutcomeJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResolveReport {
    pub schema: u32,
    pub command: String,
    pub input: String,
    pub algebra: AlgebraInfo,
    pub trivial_extension: bool,
    pub mode: String,
    pub max_steps: usize,
    pub dim_cap: usize,
    pub verdict: VerdictJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simples: Option<Vec<SimpleJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bimodule_dim_trace: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso_unknown_steps: Option<Vec<usize>>,
}

impl ResolveReport {
    pub fn from_orbit(
        input: String,
        algebra: AlgebraInfo,
        trivial_extension: bool,
        max_steps: usize,
        dim_cap: usize,
        rep: &OrbitReport,
        vertex_names: &[String],
    ) -> ResolveReport {
        let simples = rep
            .per_simple
            .iter()
            .map(|r| SimpleJson {
                vertex: r.vertex,
                name: vertex_names.get(r.vertex).cloned().unwrap_or_default(),
                dims: r.dims.clone(),
                outcome: (&r.outcome).into(),
            })
            .collect();
        ResolveReport {
            schema: SCHEMA,
            command: "resolve".into(),
            input,
            algebra,
            trivial_extension,
            mode: "simples".into(),
            max_steps,
            dim_cap,
            verdict: (&rep.verdict).into(),
            simples: Some(simples),
            bimodule_dim_trace: None,
            iso_unknown_steps: None,
        }
    }

    pub fn from_bimodule(
        input: String,
        algebra: AlgebraInfo,
        trivial_extension: bool,
        max_steps: usize,
        dim_cap: usize,
        rep: &BimoduleReport,
    ) -> ResolveReport {
        ResolveReport {
            schema: SCHEMA,
            command: "resolve".into(),
            input,
            algebra,
            trivial_extension,
            mode: "bimodule".into(),
            max_steps,
            dim_cap,
            verdict: (&rep.verdict).into(),
            simples: None,
            bimodule_dim_trace: Some(rep.dim_trace.clone()),
            iso_unknown_steps: Some(rep.iso_unknown_steps.clone()),
        }
    }

    /// Human-readable summary derived from the JSON data.
    pub fn text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "algebra: {} over {} ({} basis elements, {} vertices)\n",
            self.algebra.name, self.algebra.field, self.algebra.dim, self.algebra.vertices
        ));
        out.push_str(&format!("mode: {}\n", self.mode));
        out.push_str(&format!("verdict: {}", self.verdict.kind));
        if let Some(n) = self.verdict.n {
            out.push_str(&format!("  n={n}"));
        }
        if let Some(b) = self.verdict.bound_reached {
            out.push_str(&format!("  budget-bound={b}"));
        }
        if let Some(l) = self.verdict.last_step {
            out.push_str(&format!("  last-step={l}"));
        }
        out.push('\n');
        if let Some(periods) = &self.verdict.per_simple_periods {
            out.push_str(&format!("per-simple periods: {periods:?}\n"));
        }
        if let Some(sigma) = &self.verdict.sigma {
            if sigma.iter().enumerate().all(|(i, &s)| i == s) {
                out.push_str("twist: identity\n");
            } else {
                out.push_str(&format!("twist: {sigma:?}\n"));
            }
        }
        if let Some(simples) = &self.simples {
            for s in simples {
                let trace: Vec<String> = s.dims.iter().take(12).map(|d| d.to_string()).collect();
                let ellipsis = if s.dims.len() > 12 { ",..." } else { "" };
                out.push_str(&format!(
                    "  S[{}] {:<10} {:<16} dims [{}{}]\n",
                    s.vertex,
                    s.name,
                    render_outcome(&s.outcome),
                    trace.join(","),
                    ellipsis
                ));
            }
        }
        if let Some(trace) = &self.bimodule_dim_trace {
            out.push_str(&format!("bimodule dim trace: {trace:?}\n"));
        }
        out
    }
}

fn render_outcome(o: &OutcomeJson) -> String {
    match o.kind.as_str() {
        "Returned" => format!(
            "returns to S[{}] in {}",
            o.target.unwrap_or_default(),
            o.steps.unwrap_or_default()
        ),
        "Diverged" => "diverges".into(),
        "BudgetExhausted" => "budget exhausted".into(),
        "HitZero" => format!("hits 0 at step {}", o.step.unwrap_or_default()),
        other => other.into(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoxeterJson {
    pub schema: u32,
    pub command: String,
    pub input: String,
    pub algebra: AlgebraInfo,
    pub coxeter_polynomial: String,
    /// least n >= 1 with c^n = 1, when the matrix has finite order
    pub coxeter_period: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRecordJson {
    pub name: String,
    pub canonical_form: String,
    pub coxeter_polynomial: String,
    pub coxeter_period: Option<u64>,
    /// orbit verdict; null when the Coxeter screen already rules the
    /// lattice out and no orbit is attempted
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_simple_periods: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_traces: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReportJson {
    pub schema: u32,
    pub command: String,
    pub m: usize,
    pub field: String,
    pub lattice_count: usize,
    pub coxeter_periodic_count: usize,
    pub simple_periodic_count: usize,
    pub records: Vec<CensusRecordJson>,
}

impl CensusReportJson {
    pub fn text(&self) -> String {
        let mut out = format!(
            "census m={} over {}: {} lattices, {} Coxeter-periodic, {} simple-periodic\n",
            self.m,
            self.field,
            self.lattice_count,
            self.coxeter_periodic_count,
            self.simple_periodic_count
        );
        for r in &self.records {
            let verdict = match (&r.verdict, r.n) {
                (Some(v), Some(n)) => format!("{v} (n={n})"),
                (Some(v), None) => v.clone(),
                (None, _) => "screened out".into(),
            };
            let screen = match r.coxeter_period {
                Some(p) => format!("coxeter-period {p}"),
                None => "coxeter-infinite".into(),
            };
            out.push_str(&format!(
                "  {:<8} {:<24} {:<20} {}\n",
                r.name, r.canonical_form, screen, verdict
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_json_round_trips_kinds() {
        let v = PeriodicityVerdict::Periodic {
            n: 4,
            sigma: vec![0, 1],
            per_simple_periods: vec![4, 4],
        };
        let j = VerdictJson::from(&v);
        assert_eq!(j.kind, "Periodic");
        assert_eq!(j.n, Some(4));
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"per_simple_periods\":[4,4]"));
        assert!(!text.contains("dim_trace"));
    }

    #[test]
    fn outcome_json_skips_unset_fields() {
        let o = SimpleOutcome::Returned { steps: 3, target: 1 };
        let j = OutcomeJson::from(&o);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, "{\"kind\":\"Returned\",\"steps\":3,\"target\":1}");
    }
}
