//! Built-in warped metrics with their expected expansion and sign claims.

mod builders;
mod claims;
mod sigma;
mod verify;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::geometry::{GeometryError, WarpedMetric};
use crate::series::Rational;

pub use builders::{
    build_case, build_case_on, build_hyperbolic_product, build_intro_sphere, build_mm_sphere, build_perturbed_torus,
    build_positive_sigma_example, build_torus3, catalog_entries, DEFAULT_HALF_WIDTH, WEEKS_VOLUME,
};
pub use claims::{Check, ClaimOutcome, ClaimSettings, ExpectedClaim, Provenance, Quantity, SeriesTest, Sign, WindowTest};
pub use sigma::{
    einstein_product_check, equality_gap, hypothesis_check, sigma_facts, Attains, HypothesisItem, HypothesisReport,
    HypothesisResult, SigmaFacts, SigmaValue, Status,
};
pub use verify::{evaluate_window_claim, inject_fault, select_entries, verify_all, verify_entry, EntryFilter, Verdict, VerificationRow};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("case {case} is not defined for n = {n}")]
    UnsupportedDimension { case: u8, n: u32 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown case {0}; expected 1, 2 or 3")]
    UnknownCase(u8),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("sigma constant of the leaf is unknown")]
    SigmaUnknown,
    #[error("equality gap needs S0 <= 0, got {0}")]
    PositiveS0(f64),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub family: String,
    pub metric: WarpedMetric,
    pub params: BTreeMap<String, i64>,
    pub expected: Vec<ExpectedClaim>,
}

impl CatalogEntry {
    pub fn new(
        name: impl Into<String>,
        family: impl Into<String>,
        metric: WarpedMetric,
        params: BTreeMap<String, i64>,
        expected: Vec<ExpectedClaim>,
    ) -> Self {
        CatalogEntry { name: name.into(), family: family.into(), metric, params, expected }
    }

    /// Exact `S^M(0)`.
    pub fn s0(&self, order: usize) -> Result<Rational, CatalogError> {
        Ok(self.metric.jets(order)?.s_ambient.constant_term().clone())
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }
}
