use rayon::prelude::*;
use serde::Serialize;
use warpcheck::geometry::{symmetric_grid, FactorSpace, LeafQuantity, LeafReport, WarpedMetric};
use warpcheck::series::{Jet, Rational};

use crate::args::{Format, GlobalArgs, ReportArgs};
use crate::output::{csv, json, num, table};
use crate::{InputError, Outcome};

const DEFAULT_TOL: f64 = 1e-10;

#[derive(Serialize)]
struct Row {
    #[serde(flatten)]
    leaf: LeafReport,
    gauss_residual: f64,
}

#[derive(Serialize)]
struct JetSummary {
    quantity: String,
    /// `None` when the jet vanishes through the truncation order.
    order: Option<usize>,
    leading: Option<String>,
    expansion: String,
}

#[derive(Serialize)]
struct Identities {
    order: usize,
    gauss_zero: bool,
    evolution_zero: bool,
    first_variation_zero: bool,
    max_float_gauss_residual: f64,
    tol: f64,
}

#[derive(Serialize)]
struct Report<'a> {
    epsilon: f64,
    ambient_dim: u32,
    factors: &'a [FactorSpace],
    rows: Vec<Row>,
    jets: Vec<JetSummary>,
    identities: Identities,
    pass: bool,
}

fn summary(quantity: &str, jet: &Jet) -> JetSummary {
    let v = jet.vanishing_order();
    JetSummary {
        quantity: quantity.to_string(),
        order: v.index(),
        leading: v.leading().map(ToString::to_string),
        expansion: v.to_string(),
    }
}

/// Float Gauss residual relative to the size of its terms.
fn gauss_residual(r: &LeafReport) -> f64 {
    let rhs = r.s_ambient - r.s_leaf + r.mean_curvature.powi(2) - r.b_norm_sq;
    let scale = 1.0_f64.max(r.s_ambient.abs() + r.s_leaf.abs() + r.mean_curvature.powi(2) + r.b_norm_sq);
    (2.0 * r.ric_normal - rhs).abs() / scale
}

pub fn run(global: &GlobalArgs, args: &ReportArgs) -> Result<Outcome, InputError> {
    let text = super::read(&args.file)?;
    let metric = WarpedMetric::from_toml_str(&text)?;
    let order = global.order as usize;
    let tol = global.tol.unwrap_or(DEFAULT_TOL);

    let grid = symmetric_grid(metric.half_width(), args.grid as usize);
    let leaves: Vec<LeafReport> = grid.par_iter().map(|&t| metric.leaf_report(t)).collect::<Result<_, _>>()?;
    let rows: Vec<Row> = leaves.into_iter().map(|leaf| Row { gauss_residual: gauss_residual(&leaf), leaf }).collect();

    let jets = metric.jets(order)?;
    let residuals = metric.identity_residuals(order)?;
    let mut summaries: Vec<JetSummary> = LeafQuantity::ALL.iter().map(|q| summary(q.name(), q.of_jets(&jets))).collect();
    let s0 = jets.s_ambient.constant_term().clone();
    summaries.push(summary("S_ambient - S0", &jets.s_ambient.add_constant(&-s0)));
    summaries.push(summary("area_ratio - 1", &jets.area_ratio.add_constant(&-Rational::from_integer(1.into()))));

    let max_gauss = rows.iter().map(|r| r.gauss_residual).fold(0.0, f64::max);
    let identities = Identities {
        order,
        gauss_zero: residuals.gauss.is_zero(),
        evolution_zero: residuals.evolution.is_zero(),
        first_variation_zero: residuals.first_variation.is_zero(),
        max_float_gauss_residual: max_gauss,
        tol,
    };
    let pass = residuals.all_zero() && max_gauss <= tol;
    let report = Report {
        epsilon: metric.half_width(),
        ambient_dim: metric.ambient_dim(),
        factors: metric.factors(),
        rows,
        jets: summaries,
        identities,
        pass,
    };

    match global.format {
        Format::Json => say!("{}", json(&report)),
        Format::Csv => {
            let header = ["t", "H", "B2", "RicNN", "S_leaf", "S_ambient", "area_ratio"];
            let cells: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    let l = &r.leaf;
                    [l.t, l.mean_curvature, l.b_norm_sq, l.ric_normal, l.s_leaf, l.s_ambient, l.area_ratio].map(num).to_vec()
                })
                .collect();
            say!("{}", csv(&header, &cells));
        }
        Format::Text => print_text(&report),
    }
    Ok(if pass { Outcome::Pass } else { Outcome::Fail })
}

fn print_text(report: &Report<'_>) {
    say!("warped product of dimension {} on |t| <= {}", report.ambient_dim, report.epsilon);
    for f in report.factors {
        say!("  {}: dim {}, sec_curv {}, volume {}", f.label(), f.dim(), f.sec_curv(), f.volume());
    }
    say!();
    let header = ["t", "H", "B2", "RicNN", "S_leaf", "S_ambient", "area_ratio", "gauss_res"];
    let cells: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            let l = &r.leaf;
            let mut row: Vec<String> = [l.t, l.mean_curvature, l.b_norm_sq, l.ric_normal, l.s_leaf, l.s_ambient, l.area_ratio]
                .iter()
                .map(|v| format!("{v:.6e}"))
                .collect();
            row.push(format!("{:.1e}", r.gauss_residual));
            row
        })
        .collect();
    say!("{}", table(&header, &cells));
    say!();
    say!("jets at t = 0 (order {}):", report.identities.order);
    let jet_rows: Vec<Vec<String>> = report.jets.iter().map(|j| vec![j.quantity.clone(), j.expansion.clone()]).collect();
    say!("{}", table(&["quantity", "expansion"], &jet_rows));
    say!();
    let id = &report.identities;
    let zero = |b: bool| if b { "zero jet" } else { "NONZERO" };
    say!("gauss residual:           {}", zero(id.gauss_zero));
    say!("evolution residual:       {}", zero(id.evolution_zero));
    say!("first variation residual: {}", zero(id.first_variation_zero));
    say!("max float gauss residual: {:.3e} (tol {:e})", id.max_float_gauss_residual, id.tol);
    say!("{}", if report.pass { "PASS" } else { "FAIL" });
}
