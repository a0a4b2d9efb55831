//! Reports on an algebra: dimensions, resolutions and the criterion verdict,
//! rendered as text or JSON.

use crate::criteria::{find_critical_subcategories, Strategy};
use crate::homology::{coresolve_simple, resolve_simple};
use crate::presentation::IncidenceQuotient;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

/// Bumped on any change of the JSON schema.
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleEntry {
    pub vertex: String,
    pub pd: usize,
    pub id: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalEntry {
    pub subset: Vec<String>,
    /// Catalogue name such as `A_1`, or `null` when unclassified.
    pub template: Option<String>,
    pub params: Vec<usize>,
    pub opposite: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    CertifiedAtMostTwo,
    CriticalFound,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionEntry {
    pub verdict: VerdictKind,
    pub critical: Vec<CriticalEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: u32,
    pub algebra: String,
    pub certified: bool,
    pub gldim: usize,
    pub simples: Vec<SimpleEntry>,
    pub criterion: CriterionEntry,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub resolutions: Vec<String>,
    pub timings_ms: BTreeMap<String, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub criterion: bool,
    pub strategy: Strategy,
    pub resolutions: bool,
    pub timings: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            criterion: true,
            strategy: Strategy::Exhaustive,
            resolutions: false,
            timings: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn build_report(q: &IncidenceQuotient, opts: &ReportOptions) -> ReportDocument {
    let a = q.algebra();
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, u64>| {
        if opts.timings {
            timings.insert(name.to_string(), clock.elapsed().as_millis() as u64);
        }
        clock = Instant::now();
    };
    let n = a.vertex_count();
    let mut simples = Vec::with_capacity(n);
    let mut resolutions = Vec::new();
    for x in 0..n {
        let res = resolve_simple(a, x);
        let co = coresolve_simple(a, x);
        let name = format!("S{}", a.label(x));
        if opts.resolutions {
            resolutions.push(res.display_line(a, &name));
            resolutions.push(co.display_line(a, &name));
        }
        simples.push(SimpleEntry {
            vertex: a.label(x).to_string(),
            pd: res.length(),
            id: co.length(),
        });
    }
    let gldim = simples.iter().map(|s| s.pd).max().unwrap_or(0);
    lap("dimensions", &mut timings);
    let criterion = if opts.criterion {
        let found = find_critical_subcategories(a, opts.strategy);
        let critical: Vec<CriticalEntry> = found
            .iter()
            .map(|r| CriticalEntry {
                subset: r.labels(a),
                template: r
                    .template
                    .map(|t| format!("{}_{}", t.kind.letter(), t.param)),
                params: r.template.map(|t| vec![t.param]).unwrap_or_default(),
                opposite: r.template.is_some_and(|t| t.opposite),
            })
            .collect();
        CriterionEntry {
            verdict: if critical.is_empty() {
                VerdictKind::CertifiedAtMostTwo
            } else {
                VerdictKind::CriticalFound
            },
            critical,
        }
    } else {
        CriterionEntry {
            verdict: VerdictKind::Skipped,
            critical: Vec::new(),
        }
    };
    lap("criterion", &mut timings);
    ReportDocument {
        version: REPORT_VERSION,
        algebra: q.name().to_string(),
        certified: q.is_certified(),
        gldim,
        simples,
        criterion,
        resolutions,
        timings_ms: timings,
    }
}

impl CriticalEntry {
    fn display_template(&self) -> String {
        match &self.template {
            Some(t) if self.opposite => format!("{t}^op"),
            Some(t) => t.clone(),
            None => "unclassified".to_string(),
        }
    }
}

pub fn render_report(r: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

fn render_text(r: &ReportDocument) -> String {
    let caveat = if r.certified {
        ""
    } else {
        " (uncertified hypotheses)"
    };
    let mut out = String::new();
    let status = if r.certified {
        "certified"
    } else {
        "uncertified"
    };
    let _ = writeln!(out, "status: {status}");
    let _ = writeln!(out, "algebra: {}", r.algebra);
    let _ = writeln!(out, "gl.dim = {}", r.gldim);
    for s in &r.simples {
        let _ = writeln!(out, "  S{}: pd = {}, id = {}", s.vertex, s.pd, s.id);
    }
    for line in &r.resolutions {
        let _ = writeln!(out, "  {line}");
    }
    match r.criterion.verdict {
        VerdictKind::Skipped => {
            let _ = writeln!(out, "criterion: skipped");
        }
        VerdictKind::CertifiedAtMostTwo => {
            let _ = writeln!(
                out,
                "criterion: no critical subcategory, gl.dim <= 2{caveat}"
            );
        }
        VerdictKind::CriticalFound => {
            let _ = writeln!(out, "criterion: critical subcategories found{caveat}");
            for c in &r.criterion.critical {
                let _ = writeln!(
                    out,
                    "critical subcategory: {{{}}} ≅ {}",
                    c.subset.join(","),
                    c.display_template()
                );
            }
        }
    }
    if !r.timings_ms.is_empty() {
        let parts: Vec<String> = r
            .timings_ms
            .iter()
            .map(|(k, v)| format!("{k} {v} ms"))
            .collect();
        let _ = writeln!(out, "timings: {}", parts.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::fixtures;

    #[test]
    fn square_with_zeros_text() {
        let r = build_report(&fixtures::square_with_zeros(), &ReportOptions::default());
        let text = render_report(&r, Format::Text);
        assert!(text.starts_with("status: certified\n"));
        assert!(text.contains("gl.dim = 3\n"));
        assert!(text.contains("critical subcategory: {1,2,5,6} ≅ A_1\n"));
    }

    #[test]
    fn split_zero_chain_text() {
        let r = build_report(
            &fixtures::chain_with_split_zeros(),
            &ReportOptions::default(),
        );
        let text = render_report(&r, Format::Text);
        assert!(text.contains("gl.dim = 2\n"));
        assert!(text.contains("critical subcategory: {1,2,5,6} ≅ A_1\n"));
    }

    #[test]
    fn json_round_trip() {
        let opts = ReportOptions {
            resolutions: true,
            ..ReportOptions::default()
        };
        let r = build_report(&fixtures::square_with_zeros(), &opts);
        let json = render_report(&r, Format::Json);
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn json_field_order() {
        let r = build_report(&fixtures::chain(3), &ReportOptions::default());
        let json = render_report(&r, Format::Json);
        let keys = [
            "\"version\"",
            "\"algebra\"",
            "\"certified\"",
            "\"gldim\"",
            "\"simples\"",
            "\"criterion\"",
            "\"timings_ms\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn resolution_lines() {
        let opts = ReportOptions {
            resolutions: true,
            criterion: false,
            ..ReportOptions::default()
        };
        let r = build_report(&fixtures::chain_with_overlapping_zeros(), &opts);
        assert!(r
            .resolutions
            .contains(&"0 → P4 → P3 → P2 → P1 → S1 → 0".to_string()));
        assert_eq!(r.criterion.verdict, VerdictKind::Skipped);
    }
}
