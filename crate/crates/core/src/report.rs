//! Side-by-side brute-force and formula values for one factor pair.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    self, szeged_wreath, szeged_wreath_bruteforce, wiener_wreath, wiener_wreath_bruteforce,
    zagreb_wreath_bruteforce, zagreb_wreath_formula, SzegedMethod, WienerMethod,
};
use crate::metric::WreathMetric;
use crate::products::wreath_product;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Invariant {
    FirstZagreb,
    SecondZagreb,
    Wiener,
    Szeged,
    Diameter,
}

impl Invariant {
    pub const ALL: [Invariant; 5] = [
        Invariant::FirstZagreb,
        Invariant::SecondZagreb,
        Invariant::Wiener,
        Invariant::Szeged,
        Invariant::Diameter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::FirstZagreb => "zagreb1",
            Invariant::SecondZagreb => "zagreb2",
            Invariant::Wiener => "wiener",
            Invariant::Szeged => "szeged",
            Invariant::Diameter => "diameter",
        }
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown invariant {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Formula,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Formula => "formula",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodFilter {
    Bruteforce,
    Formula,
    Both,
}

impl MethodFilter {
    fn allows(self, method: Method) -> bool {
        matches!(
            (self, method),
            (MethodFilter::Both, _)
                | (MethodFilter::Bruteforce, Method::Bruteforce)
                | (MethodFilter::Formula, Method::Formula)
        )
    }
}

impl FromStr for MethodFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bruteforce" => Ok(MethodFilter::Bruteforce),
            "formula" => Ok(MethodFilter::Formula),
            "all" | "both" => Ok(MethodFilter::Both),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorInfo {
    pub role: String,
    pub spec: String,
    pub vertices: usize,
    pub edges: usize,
}

impl FactorInfo {
    pub fn new(role: &str, spec: &str, g: &Graph) -> Self {
        FactorInfo {
            role: role.into(),
            spec: spec.into(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub invariant: String,
    pub method: Method,
    /// Which formula produced the value; empty for brute force.
    pub variant: String,
    /// Decimal string so that arbitrarily large values survive JSON.
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub factors: Vec<FactorInfo>,
    pub entries: Vec<ReportEntry>,
}

/// Invariant whose reported values disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub invariant: String,
    pub values: Vec<(String, String)>,
}

impl InvariantReport {
    pub fn new(factors: Vec<FactorInfo>) -> Self {
        InvariantReport {
            factors,
            entries: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        invariant: &str,
        method: Method,
        variant: &str,
        value: String,
        elapsed_ms: Option<f64>,
    ) {
        self.entries.push(ReportEntry {
            invariant: invariant.into(),
            method,
            variant: variant.into(),
            value,
            elapsed_ms,
        });
    }

    pub fn value(&self, invariant: &str, method: Method, variant: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|e| e.invariant == invariant && e.method == method && e.variant == variant)
            .map(|e| e.value.as_str())
    }

    pub fn mismatches(&self) -> Vec<Mismatch> {
        let mut names: Vec<&str> = self.entries.iter().map(|e| e.invariant.as_str()).collect();
        names.dedup();
        names
            .into_iter()
            .filter_map(|name| {
                let group: Vec<&ReportEntry> = self
                    .entries
                    .iter()
                    .filter(|e| e.invariant == name)
                    .collect();
                let disagree = group.iter().any(|e| e.value != group[0].value);
                disagree.then(|| Mismatch {
                    invariant: name.into(),
                    values: group.iter().map(|e| (label(e), e.value.clone())).collect(),
                })
            })
            .collect()
    }

    /// Copy without timings, for byte-stable output.
    pub fn canonical(&self) -> InvariantReport {
        let mut copy = self.clone();
        copy.entries.iter_mut().for_each(|e| e.elapsed_ms = None);
        copy
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One `key=value` record per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.factors {
            let _ = writeln!(
                out,
                "factor={} spec={} vertices={} edges={}",
                f.role, f.spec, f.vertices, f.edges
            );
        }
        for e in &self.entries {
            let _ = write!(
                out,
                "invariant={} method={} variant={} value={}",
                e.invariant,
                e.method.name(),
                if e.variant.is_empty() {
                    "-"
                } else {
                    &e.variant
                },
                e.value
            );
            if let Some(ms) = e.elapsed_ms {
                let _ = write!(out, " elapsed_ms={ms:.3}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("invariant,method,variant,value,elapsed_ms\n");
        for e in &self.entries {
            let ms = e
                .elapsed_ms
                .map(|ms| format!("{ms:.3}"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                e.invariant,
                e.method.name(),
                e.variant,
                e.value,
                ms
            );
        }
        out
    }

    /// Aligned columns for terminals.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for f in &self.factors {
            let _ = writeln!(
                out,
                "{}: {} ({} vertices, {} edges)",
                f.role, f.spec, f.vertices, f.edges
            );
        }
        let rows: Vec<[String; 4]> = self
            .entries
            .iter()
            .map(|e| {
                let time = e
                    .elapsed_ms
                    .map(|ms| format!("{ms:.3} ms"))
                    .unwrap_or_default();
                [e.invariant.clone(), label(e), e.value.clone(), time]
            })
            .collect();
        let header = [
            "invariant".to_string(),
            "method".into(),
            "value".into(),
            "time".into(),
        ];
        let mut widths = header.clone().map(|h| h.len());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        for row in std::iter::once(&header).chain(&rows) {
            let line: Vec<String> = row
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        out
    }
}

fn label(e: &ReportEntry) -> String {
    if e.variant.is_empty() {
        e.method.name().to_string()
    } else {
        format!("{}:{}", e.method.name(), e.variant)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    pub budget: Budget,
    /// Caller vouches that `G` is edge-transitive.
    pub edge_transitive: bool,
    pub timings: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            budget: Budget::default(),
            edge_transitive: false,
            timings: true,
        }
    }
}

/// Computes the requested invariants of `G ≀ H` by every applicable route.
///
/// Formula variants that do not apply to `G` (closed forms for other
/// families) are skipped rather than reported as errors.
pub fn wreath_report(
    g: &Graph,
    h: &Graph,
    factors: Vec<FactorInfo>,
    requested: &[Invariant],
    filter: MethodFilter,
    options: &ReportOptions,
) -> Result<InvariantReport> {
    invariants::wreath_factors(g, h)?;
    let budget = &options.budget;
    let mut report = InvariantReport::new(factors);
    let mut record = |inv: Invariant,
                      method: Method,
                      variant: &str,
                      run: &dyn Fn() -> Result<BigUint>|
     -> Result<()> {
        if !filter.allows(method) {
            return Ok(());
        }
        let start = Instant::now();
        let value = run()?;
        let elapsed = options.timings.then(|| start.elapsed().as_secs_f64() * 1e3);
        report.push(inv.name(), method, variant, value.to_string(), elapsed);
        Ok(())
    };
    let complete = invariants::is_complete(g);
    let path = invariants::is_path(g) && g.vertex_count() > 2;
    for &inv in requested {
        match inv {
            Invariant::FirstZagreb => {
                record(inv, Method::Bruteforce, "", &|| {
                    Ok(zagreb_wreath_bruteforce(g, h, budget)?.m1)
                })?;
                record(inv, Method::Formula, "general", &|| {
                    Ok(zagreb_wreath_formula(g, h)?.m1)
                })?;
            }
            Invariant::SecondZagreb => {
                record(inv, Method::Bruteforce, "", &|| {
                    Ok(zagreb_wreath_bruteforce(g, h, budget)?.m2)
                })?;
                record(inv, Method::Formula, "general", &|| {
                    Ok(zagreb_wreath_formula(g, h)?.m2)
                })?;
            }
            Invariant::Wiener => {
                record(inv, Method::Bruteforce, "", &|| {
                    wiener_wreath_bruteforce(g, h, budget)
                })?;
                record(inv, Method::Formula, "vector", &|| {
                    wiener_wreath(g, h, WienerMethod::Vector, budget)
                })?;
                if complete {
                    record(inv, Method::Formula, "complete_closed", &|| {
                        wiener_wreath(g, h, WienerMethod::CompleteClosed, budget)
                    })?;
                }
                if path {
                    record(inv, Method::Formula, "path_closed", &|| {
                        wiener_wreath(g, h, WienerMethod::PathClosed, budget)
                    })?;
                }
            }
            Invariant::Szeged => {
                record(inv, Method::Bruteforce, "", &|| {
                    szeged_wreath_bruteforce(g, h, budget)
                })?;
                record(inv, Method::Formula, "general", &|| {
                    szeged_wreath(g, h, SzegedMethod::General, budget)
                })?;
                if options.edge_transitive {
                    record(inv, Method::Formula, "edge_transitive", &|| {
                        szeged_wreath(g, h, SzegedMethod::EdgeTransitive, budget)
                    })?;
                }
                if complete {
                    record(inv, Method::Formula, "complete_closed", &|| {
                        szeged_wreath(g, h, SzegedMethod::CompleteClosed, budget)
                    })?;
                }
            }
            Invariant::Diameter => {
                record(inv, Method::Bruteforce, "", &|| {
                    let (_, d) = wreath_product(g, h, budget)?.eccentricity_and_diameter()?;
                    Ok(d.into())
                })?;
                record(inv, Method::Formula, "general", &|| {
                    Ok(WreathMetric::new(g, h, budget)?.diameter()?.into())
                })?;
            }
        }
    }
    Ok(report)
}
