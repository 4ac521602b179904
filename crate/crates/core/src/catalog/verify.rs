use std::fmt;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::claims::{evaluate_series, evaluate_window, Check, ClaimOutcome, ClaimSettings, ExpectedClaim, Provenance, SeriesTest, WindowTest};
use super::sigma::{equality_gap, hypothesis_check, sigma_facts, HypothesisReport, SigmaValue};
use super::{CatalogEntry, Quantity};
use crate::geometry::LeafJets;
use crate::series::{rational_to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationRow {
    pub entry: String,
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    pub provenance: Provenance,
    pub anchor: String,
}

struct Context<'a> {
    entry: &'a CatalogEntry,
    settings: &'a ClaimSettings,
    jets: Result<LeafJets, String>,
    s0: Rational,
    hypotheses: Option<Result<HypothesisReport, String>>,
}

impl Context<'_> {
    fn hypotheses(&mut self) -> Result<&HypothesisReport, String> {
        if self.hypotheses.is_none() {
            let report = match &self.jets {
                Ok(j) => hypothesis_check(&self.entry.metric, j, self.settings).map_err(|e| e.to_string()),
                Err(e) => Err(e.clone()),
            };
            self.hypotheses = Some(report);
        }
        self.hypotheses.as_ref().expect("just filled").as_ref().map_err(Clone::clone)
    }
}

fn failed(expected: &str, why: impl fmt::Display) -> ClaimOutcome {
    ClaimOutcome::new(expected, format!("error: {why}"), false)
}

fn evaluate(ctx: &mut Context<'_>, claim: &ExpectedClaim) -> ClaimOutcome {
    let metric = &ctx.entry.metric;
    match &claim.check {
        Check::Series { quantity, test } => {
            let jets = match &ctx.jets {
                Ok(j) => j,
                Err(e) => return failed("jet", e),
            };
            match quantity.jet(jets, &ctx.s0) {
                Some(jet) => evaluate_series(&jet, test),
                None => failed("jet", format!("{} has no jet", quantity.name())),
            }
        }
        Check::Window { quantity, test, t_max } => {
            let jet = ctx.jets.as_ref().ok().and_then(|j| quantity.jet(j, &ctx.s0));
            evaluate_window(metric, *quantity, jet.as_ref(), &ctx.s0, *test, *t_max, ctx.settings)
        }
        Check::Value { quantity, t, expected, rel_tol } => {
            let want = format!("{expected:.12e} at t = {t}");
            match metric.leaf_report(*t) {
                Ok(report) => {
                    let got = quantity.of_report(&report, rational_to_f64(&ctx.s0), metric.central_area());
                    let ok = (got - expected).abs() <= rel_tol * expected.abs().max(1.0);
                    ClaimOutcome::new(want, format!("{got:.12e}"), ok)
                }
                Err(e) => failed(&want, e),
            }
        }
        Check::Hypothesis { item, expected } => match ctx.hypotheses() {
            Ok(report) => {
                let result = report.items.iter().find(|r| r.item == *item);
                match result {
                    Some(r) => ClaimOutcome::new(expected.to_string(), format!("{}: {}", r.status, r.evidence), r.status == *expected),
                    None => failed(&expected.to_string(), "item not evaluated"),
                }
            }
            Err(e) => failed(&expected.to_string(), e),
        },
        Check::EqualityGap { area_scale, expect_zero } => {
            let want = if *expect_zero { "gap = 0" } else { "gap > 0" };
            let factors = match metric.central_leaf_factors() {
                Ok(f) => f,
                Err(e) => return failed(want, e),
            };
            let facts = sigma_facts(&factors);
            let area = metric.central_area() * area_scale;
            match equality_gap(&facts, rational_to_f64(&ctx.s0), area) {
                Ok(gap) => {
                    let scale = match facts.sigma {
                        SigmaValue::Known(s) => s.abs().max(1.0),
                        _ => 1.0,
                    };
                    let ok = if *expect_zero { gap.abs() <= 1e-12 * scale } else { gap > 1e-12 * scale };
                    ClaimOutcome::new(want, format!("gap {gap:.6e}"), ok)
                }
                Err(e) => failed(want, e),
            }
        }
    }
}

/// Checks every expected claim of one entry.
pub fn verify_entry(entry: &CatalogEntry, settings: &ClaimSettings) -> Vec<VerificationRow> {
    let jets = entry.metric.jets(settings.order).map_err(|e| e.to_string());
    let s0 = jets.as_ref().map_or_else(|_| Rational::one() - Rational::one(), |j| j.s_ambient.constant_term().clone());
    let mut ctx = Context { entry, settings, jets, s0, hypotheses: None };
    entry
        .expected
        .iter()
        .map(|claim| {
            let outcome = evaluate(&mut ctx, claim);
            VerificationRow {
                entry: entry.name.clone(),
                claim: claim.label(),
                expected: outcome.expected,
                computed: outcome.computed,
                verdict: if outcome.pass { Verdict::Pass } else { Verdict::Fail },
                provenance: claim.provenance,
                anchor: claim.anchor.clone(),
            }
        })
        .collect()
}

/// Verifies entries in parallel; rows are ordered by entry name, then by
/// claim order within the entry.
pub fn verify_all(entries: &[CatalogEntry], settings: &ClaimSettings) -> Vec<VerificationRow> {
    let mut per_entry: Vec<(String, Vec<VerificationRow>)> =
        entries.par_iter().map(|e| (e.name.clone(), verify_entry(e, settings))).collect();
    per_entry.sort_by(|a, b| a.0.cmp(&b.0));
    per_entry.into_iter().flat_map(|(_, rows)| rows).collect()
}

/// Window claim evaluated on an arbitrary half-width, for ad hoc checks.
pub fn evaluate_window_claim(
    entry: &CatalogEntry,
    quantity: Quantity,
    test: WindowTest,
    t_max: f64,
    settings: &ClaimSettings,
) -> Result<ClaimOutcome, super::CatalogError> {
    let jets = entry.metric.jets(settings.order)?;
    let s0 = jets.s_ambient.constant_term().clone();
    let jet = quantity.jet(&jets, &s0);
    Ok(evaluate_window(&entry.metric, quantity, jet.as_ref(), &s0, test, t_max, settings))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EntryFilter {
    /// Entry family (`case1`, `torus3`, …) or full entry name.
    pub only: Option<String>,
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub m: Option<i64>,
}

impl EntryFilter {
    pub fn accepts(&self, entry: &CatalogEntry) -> bool {
        let named = self.only.as_ref().map_or(true, |o| *o == entry.family || *o == entry.name);
        let param = |key: &str, want: Option<i64>| want.map_or(true, |w| entry.param(key) == Some(w));
        named && param("n", self.n) && param("k", self.k) && param("m", self.m)
    }
}

pub fn select_entries(entries: Vec<CatalogEntry>, filter: &EntryFilter) -> Vec<CatalogEntry> {
    entries.into_iter().filter(|e| filter.accepts(e)).collect()
}

/// Corrupts the first exact claim of the named entry (or of the first entry
/// when `name` is `None`). Returns whether anything was changed.
pub fn inject_fault(entries: &mut [CatalogEntry], name: Option<&str>) -> bool {
    let target = entries.iter_mut().find(|e| name.map_or(true, |n| e.name == n || e.family == n));
    let Some(entry) = target else { return false };
    for claim in &mut entry.expected {
        if let Check::Series { test, .. } = &mut claim.check {
            let one = Rational::one();
            match test {
                SeriesTest::VanishingOrder(k) => *k += 1,
                SeriesTest::LeadingTerm { coeff, .. } => *coeff += one,
                SeriesTest::DisputedLeadingTerm { derived, .. } => *derived += one,
                SeriesTest::Matches { terms, through } => terms.push((*through, one)),
                SeriesTest::LeadingSign(_) | SeriesTest::IdenticallyZero => continue,
            }
            claim.anchor = format!("{} (injected fault)", claim.anchor);
            return true;
        }
    }
    false
}
