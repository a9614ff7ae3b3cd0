//! Full per-`k` analysis reports and their CSV / JSON encodings.
//!
//! Both encodings carry the same fields. Floating values are rounded to 12
//! significant digits; undefined coefficients are empty CSV cells and JSON
//! `null`, with the reason listed under `undefined` in JSON.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::ensemble::{generate_ensemble, normalize, EnsembleConfig, NormalizedPoint};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::richclub::{profile, Coefficient, RichClubPoint, UndefinedCause};

pub const CSV_COLUMNS: [&str; 17] = [
    "k",
    "n1",
    "m11",
    "m10",
    "m00",
    "ub_m11",
    "ub_m10",
    "phi",
    "phi_new",
    "phi_bar",
    "delta",
    "m11_ran_mean",
    "m11_ran_sd",
    "m10_ran_mean",
    "m10_ran_sd",
    "rho",
    "rho_bar",
];

/// Formats like C's `%.12g`.
pub fn format_g12(x: f64) -> String {
    const PRECISION: i32 = 12;
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", (PRECISION - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..PRECISION).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    } else {
        let decimals = (PRECISION - 1 - exp) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_owned()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` rounded to the value `%.12g` would print.
pub fn round12(x: f64) -> f64 {
    format_g12(x).parse().unwrap_or(x)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportGraph {
    pub nodes: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub density: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Provenance {
    pub input: String,
    pub tool_version: String,
    pub master_seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub point: RichClubPoint,
    pub normalized: NormalizedPoint,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    pub graph: ReportGraph,
    pub config: EnsembleConfig,
    pub provenance: Provenance,
    pub rows: Vec<ReportRow>,
}

/// Profiles `g`, builds its null ensemble on the same grid and pairs up the results.
pub fn analyze(
    g: &Graph,
    cfg: &EnsembleConfig,
    k_grid: Option<&[usize]>,
    input: &str,
) -> Result<AnalysisReport> {
    let prof = profile(g, k_grid)?;
    let grid: Vec<usize> = prof.points.iter().map(|p| p.k).collect();
    let ensemble = generate_ensemble(g, cfg, &grid)?;
    let normalized = normalize(g, &ensemble)?;
    let density = g.density()?;
    let rows = prof
        .points
        .into_iter()
        .zip(normalized)
        .map(|(point, normalized)| {
            debug_assert_eq!(point.k, normalized.k);
            ReportRow { point, normalized }
        })
        .collect();
    Ok(AnalysisReport {
        graph: ReportGraph {
            nodes: g.node_count(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
            density: *density.numer() as f64 / *density.denom() as f64,
        },
        config: *cfg,
        provenance: Provenance {
            input: input.to_owned(),
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            master_seed: cfg.master_seed,
        },
        rows,
    })
}

fn cell(c: Coefficient) -> String {
    c.value().map(format_g12).unwrap_or_default()
}

impl AnalysisReport {
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let g = &self.graph;
        let c = &self.config;
        writeln!(out, "# richclub {}", self.provenance.tool_version)?;
        writeln!(out, "# input: {}", self.provenance.input)?;
        writeln!(
            out,
            "# nodes={} edges={} max_degree={} density={}",
            g.nodes,
            g.edges,
            g.max_degree,
            format_g12(g.density)
        )?;
        writeln!(
            out,
            "# ensemble_size={} master_seed={} swaps_per_edge={} max_attempt_factor={} strict_connected_null={}",
            c.size, c.master_seed, c.swaps_per_edge, c.max_attempt_factor, c.strict_connected
        )?;
        writeln!(out, "{}", CSV_COLUMNS.join(","))?;
        for row in &self.rows {
            let p = &row.point;
            let n = &row.normalized;
            let fields = [
                p.k.to_string(),
                p.n1.to_string(),
                p.m11.to_string(),
                p.m10.to_string(),
                p.m00.to_string(),
                p.ub_m11.to_string(),
                p.ub_m10.to_string(),
                cell(p.phi),
                cell(p.phi_new),
                cell(p.phi_bar),
                cell(p.delta),
                format_g12(n.m11_ran_mean),
                format_g12(n.m11_ran_sd),
                format_g12(n.m10_ran_mean),
                format_g12(n.m10_ran_sd),
                cell(n.rho),
                cell(n.rho_bar),
            ];
            writeln!(out, "{}", fields.join(","))?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let points: Vec<JsonPoint> = self.rows.iter().map(JsonPoint::from_row).collect();
        let doc = JsonReport {
            graph: ReportGraph {
                density: round12(self.graph.density),
                ..self.graph.clone()
            },
            config: JsonConfig::from(&self.config),
            provenance: &self.provenance,
            points,
        };
        serde_json::to_value(doc).expect("report is serializable")
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())
            .map_err(|e| Error::Io(e.into()))?;
        writeln!(out)?;
        out.flush()?;
        Ok(())
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    graph: ReportGraph,
    config: JsonConfig,
    provenance: &'a Provenance,
    points: Vec<JsonPoint>,
}

#[derive(Serialize)]
struct JsonConfig {
    ensemble_size: usize,
    master_seed: u64,
    swaps_per_edge: usize,
    max_attempt_factor: usize,
    strict_connected_null: bool,
}

impl From<&EnsembleConfig> for JsonConfig {
    fn from(c: &EnsembleConfig) -> Self {
        JsonConfig {
            ensemble_size: c.size,
            master_seed: c.master_seed,
            swaps_per_edge: c.swaps_per_edge,
            max_attempt_factor: c.max_attempt_factor,
            strict_connected_null: c.strict_connected,
        }
    }
}

#[derive(Serialize)]
struct JsonPoint {
    k: usize,
    n1: usize,
    m11: u64,
    m10: u64,
    m00: u64,
    ub_m11: u64,
    ub_m10: u64,
    phi: Option<f64>,
    phi_new: Option<f64>,
    phi_bar: Option<f64>,
    delta: Option<f64>,
    m11_ran_mean: f64,
    m11_ran_sd: f64,
    m10_ran_mean: f64,
    m10_ran_sd: f64,
    rho: Option<f64>,
    rho_bar: Option<f64>,
    /// Sign of `rho_bar - 1`: -1 below, 0 at, 1 above.
    rho_bar_vs_one: Option<i8>,
    undefined: BTreeMap<&'static str, UndefinedCause>,
}

impl JsonPoint {
    fn from_row(row: &ReportRow) -> Self {
        let p = &row.point;
        let n = &row.normalized;
        let mut undefined = BTreeMap::new();
        let mut take = |name: &'static str, c: Coefficient| {
            if let Some(cause) = c.cause() {
                undefined.insert(name, cause);
            }
            c.value().map(round12)
        };
        let phi = take("phi", p.phi);
        let phi_new = take("phi_new", p.phi_new);
        let phi_bar = take("phi_bar", p.phi_bar);
        let delta = take("delta", p.delta);
        let rho = take("rho", n.rho);
        let rho_bar = take("rho_bar", n.rho_bar);
        JsonPoint {
            k: p.k,
            n1: p.n1,
            m11: p.m11,
            m10: p.m10,
            m00: p.m00,
            ub_m11: p.ub_m11,
            ub_m10: p.ub_m10,
            phi,
            phi_new,
            phi_bar,
            delta,
            m11_ran_mean: round12(n.m11_ran_mean),
            m11_ran_sd: round12(n.m11_ran_sd),
            m10_ran_mean: round12(n.m10_ran_mean),
            m10_ran_sd: round12(n.m10_ran_sd),
            rho,
            rho_bar,
            rho_bar_vs_one: rho_bar.map(|v| if v < 1.0 { -1 } else if v > 1.0 { 1 } else { 0 }),
            undefined,
        }
    }
}
