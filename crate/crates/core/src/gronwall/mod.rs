//! The integro-differential inequality `H′(t) ≤ −S₀/((n−1)φ(t)) ∫₀ᵗ H ξ ds`
//! on sampled data, and the conclusion `H ≤ 0` it forces on short windows.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{GeometryError, WarpedMetric};

/// Default absolute tolerance on residuals.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GronwallError {
    #[error("C3 is undefined: {0}")]
    ZeroDenominator(String),
    #[error("conclusion requested without a residual check of the same data")]
    PreconditionUnchecked,
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GronwallData {
    pub grid: Vec<f64>,
    #[serde(rename = "H")]
    pub h: Vec<f64>,
    pub phi: Vec<f64>,
    pub xi: Vec<f64>,
    #[serde(rename = "S0")]
    pub s0: f64,
    pub n: u32,
    #[serde(rename = "C1")]
    pub c1: f64,
    #[serde(rename = "C2")]
    pub c2: f64,
}

impl GronwallData {
    pub fn new(
        grid: Vec<f64>,
        h: Vec<f64>,
        phi: Vec<f64>,
        xi: Vec<f64>,
        s0: f64,
        n: u32,
        c1: f64,
        c2: f64,
    ) -> Result<Self, GronwallError> {
        let d = GronwallData { grid, h, phi, xi, s0, n, c1, c2 };
        d.validate()?;
        Ok(d)
    }

    /// Samples closures on `points` equally spaced nodes of `[0, eps]`, with
    /// `C1 = min φ` and `C2 = max ξ`.
    pub fn sample(
        eps: f64,
        points: usize,
        h: impl Fn(f64) -> f64,
        phi: impl Fn(f64) -> f64,
        xi: impl Fn(f64) -> f64,
        s0: f64,
        n: u32,
    ) -> Result<Self, GronwallError> {
        if points < 2 || !(eps > 0.0) {
            return Err(GronwallError::InvalidData(format!("need eps > 0 and at least 2 points, got {eps}, {points}")));
        }
        let grid: Vec<f64> = (0..points).map(|j| eps * j as f64 / (points - 1) as f64).collect();
        let phi: Vec<f64> = grid.iter().map(|&t| phi(t)).collect();
        let xi: Vec<f64> = grid.iter().map(|&t| xi(t)).collect();
        let c1 = phi.iter().copied().fold(f64::INFINITY, f64::min);
        let c2 = xi.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let h = grid.iter().map(|&t| h(t)).collect();
        Self::new(grid, h, phi, xi, s0, n, c1, c2)
    }

    pub fn from_json(text: &str) -> Result<Self, GronwallError> {
        let d: GronwallData = serde_json::from_str(text).map_err(|e| GronwallError::InvalidData(e.to_string()))?;
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), GronwallError> {
        let bad = |m: String| Err(GronwallError::InvalidData(m));
        let len = self.grid.len();
        if len < 2 {
            return bad("grid needs at least two points".into());
        }
        if self.h.len() != len || self.phi.len() != len || self.xi.len() != len {
            return bad(format!("grid has {len} points but H, phi, xi have {}, {}, {}", self.h.len(), self.phi.len(), self.xi.len()));
        }
        if self.grid[0] != 0.0 {
            return bad(format!("grid must start at 0, starts at {}", self.grid[0]));
        }
        if let Some(w) = self.grid.windows(2).find(|w| !(w[1] > w[0])) {
            return bad(format!("grid not strictly increasing at {}", w[1]));
        }
        if self.h[0].abs() > 1e-12 {
            return bad(format!("H(0) must vanish, got {}", self.h[0]));
        }
        if self.n < 3 {
            return bad(format!("ambient dimension must be at least 3, got {}", self.n));
        }
        if !(self.s0 <= 0.0) {
            return bad(format!("S0 must be <= 0, got {}", self.s0));
        }
        if !(self.c1 > 0.0) {
            return bad(format!("C1 must be positive, got {}", self.c1));
        }
        if let Some((j, p)) = self.phi.iter().enumerate().find(|(_, &p)| !(p >= self.c1)) {
            return bad(format!("phi[{j}] = {p} below C1 = {}", self.c1));
        }
        if let Some((j, x)) = self.xi.iter().enumerate().find(|(_, &x)| !(x > 0.0 && x <= self.c2)) {
            return bad(format!("xi[{j}] = {x} outside (0, C2 = {}]", self.c2));
        }
        if self.h.iter().any(|v| !v.is_finite()) {
            return bad("H has non-finite samples".into());
        }
        Ok(())
    }

    /// Right end of the window.
    pub fn eps(&self) -> f64 {
        *self.grid.last().expect("validated grid is nonempty")
    }

    pub fn with_h(&self, h: Vec<f64>) -> Result<Self, GronwallError> {
        let d = GronwallData { h, ..self.clone() };
        d.validate()?;
        Ok(d)
    }
}

/// `C₃ = −S₀C₂/((n−1)C₁)`.
pub fn c3(d: &GronwallData) -> Result<f64, GronwallError> {
    let denom = f64::from(d.n.saturating_sub(1)) * d.c1;
    if denom == 0.0 || !denom.is_finite() {
        return Err(GronwallError::ZeroDenominator(format!("(n-1) C1 = {denom}")));
    }
    Ok(-d.s0 * d.c2 / denom)
}

/// Largest admissible window `C₃^{−1/2}`; infinite when `S₀ = 0`.
pub fn admissible_eps(d: &GronwallData) -> Result<f64, GronwallError> {
    let c = c3(d)?;
    Ok(if c > 0.0 { c.powf(-0.5) } else { f64::INFINITY })
}

/// Forward-difference `H′(tⱼ)` minus the right-hand side, for `j < N`.
pub fn inequality_residuals(d: &GronwallData) -> Vec<f64> {
    let coeff = -d.s0 / f64::from(d.n - 1);
    let mut integral = 0.0;
    let mut out = Vec::with_capacity(d.grid.len() - 1);
    for j in 0..d.grid.len() - 1 {
        if j > 0 {
            let dt = d.grid[j] - d.grid[j - 1];
            integral += 0.5 * dt * (d.h[j - 1] * d.xi[j - 1] + d.h[j] * d.xi[j]);
        }
        let derivative = (d.h[j + 1] - d.h[j]) / (d.grid[j + 1] - d.grid[j]);
        out.push(derivative - coeff / d.phi[j] * integral);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub t: f64,
    pub value: f64,
}

/// Result of the residual check; required by [`conclude_nonpositive`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckedData {
    #[serde(skip)]
    data: GronwallData,
    pub residuals: Vec<f64>,
    pub tol: f64,
    pub first_violation: Option<Violation>,
}

impl CheckedData {
    pub fn satisfied(&self) -> bool {
        self.first_violation.is_none()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

pub fn check_inequality(d: &GronwallData, tol: f64) -> CheckedData {
    let residuals = inequality_residuals(d);
    let first_violation =
        residuals.iter().enumerate().find(|(_, &r)| r > tol).map(|(index, &value)| Violation { index, t: d.grid[index], value });
    CheckedData { data: d.clone(), residuals, tol, first_violation }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Conclusion {
    /// `max H ≤ tol·(1+ε)`.
    Pass { max_h: f64 },
    Fail { witness: Violation },
    /// The inequality does not hold on the data or the window is too long,
    /// so nothing can be concluded.
    NotApplicable { reason: String },
}

impl Conclusion {
    pub fn passed(&self) -> bool {
        matches!(self, Conclusion::Pass { .. })
    }
}

/// Checks `H ≤ 0` on data whose residuals were verified by [`check_inequality`].
pub fn conclude_nonpositive(d: &GronwallData, checked: Option<&CheckedData>, tol: f64) -> Result<Conclusion, GronwallError> {
    let checked = match checked {
        Some(c) if c.data == *d => c,
        _ => return Err(GronwallError::PreconditionUnchecked),
    };
    if let Some(v) = &checked.first_violation {
        return Ok(Conclusion::NotApplicable {
            reason: format!("inequality violated at t = {} (residual {:e})", v.t, v.value),
        });
    }
    let eps = d.eps();
    if d.s0 < 0.0 {
        let limit = admissible_eps(d)?;
        if !(eps < limit) {
            return Ok(Conclusion::NotApplicable { reason: format!("eps = {eps} is not below C3^(-1/2) = {limit}") });
        }
    }
    let bound = tol * (1.0 + eps);
    let (index, max_h) = d.h.iter().copied().enumerate().fold((0, f64::NEG_INFINITY), |acc, (j, v)| if v > acc.1 { (j, v) } else { acc });
    if max_h <= bound {
        Ok(Conclusion::Pass { max_h })
    } else {
        Ok(Conclusion::Fail { witness: Violation { index, t: d.grid[index], value: max_h } })
    }
}

/// Natural cubic spline through `(x, y)` evaluated at `at`.
fn natural_spline(x: &[f64], y: &[f64], at: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut m = vec![0.0; n];
    if n > 2 {
        // tridiagonal system for interior second derivatives
        let mut diag = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        let mut upper = vec![0.0; n];
        for i in 1..n - 1 {
            let (h0, h1) = (x[i] - x[i - 1], x[i + 1] - x[i]);
            diag[i] = 2.0 * (h0 + h1);
            upper[i] = h1;
            rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
        }
        for i in 2..n - 1 {
            let lower = x[i] - x[i - 1];
            let w = lower / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for i in (1..n - 1).rev() {
            m[i] = (rhs[i] - if i + 1 < n - 1 { upper[i] * m[i + 1] } else { 0.0 }) / diag[i];
        }
    }
    at.iter()
        .map(|&t| {
            let i = match x.iter().position(|&xi| xi > t) {
                Some(0) => 0,
                Some(k) => k - 1,
                None => n - 2,
            };
            let h = x[i + 1] - x[i];
            let (a, b) = ((x[i + 1] - t) / h, (t - x[i]) / h);
            a * y[i] + b * y[i + 1] + ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub trials: usize,
    pub violations_found: usize,
    /// Trials whose `H` was positive somewhere yet satisfied the inequality.
    pub survivors: Vec<usize>,
    pub eps: f64,
    pub admissible_eps: f64,
}

impl SearchReport {
    pub fn all_violated(&self) -> bool {
        self.survivors.is_empty() && self.violations_found == self.trials
    }
}

/// Random `H` with `H(0) = 0` and a positive bump: a natural cubic spline
/// through random knots, one of which is raised to a positive height.
pub fn random_bump<R: Rng>(rng: &mut R, grid: &[f64]) -> Vec<f64> {
    let eps = *grid.last().expect("grid is nonempty");
    let knots = rng.gen_range(4..9usize);
    let x: Vec<f64> = (0..knots).map(|i| eps * i as f64 / (knots - 1) as f64).collect();
    let mut y: Vec<f64> = (0..knots).map(|_| rng.gen_range(-0.5..0.5)).collect();
    y[0] = 0.0;
    let peak = rng.gen_range(1..knots);
    y[peak] = rng.gen_range(0.05..1.0);
    let mut h = natural_spline(&x, &y, grid);
    h[0] = 0.0;
    h
}

/// Runs `trials` random positive-bump profiles on the template's grid,
/// `φ` and `ξ`; every one of them should violate the inequality.
pub fn counterexample_search(template: &GronwallData, trials: usize, seed: u64, tol: f64) -> Result<SearchReport, GronwallError> {
    template.validate()?;
    let limit = admissible_eps(template)?;
    let results: Vec<(usize, bool, bool)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let h = random_bump(&mut rng, &template.grid);
            let positive = h.iter().any(|&v| v > tol * (1.0 + template.eps()));
            let data = template.with_h(h).expect("template validated");
            (trial, positive, !check_inequality(&data, tol).satisfied())
        })
        .collect();
    let violations_found = results.iter().filter(|r| r.2).count();
    let survivors = results.iter().filter(|r| r.1 && !r.2).map(|r| r.0).collect();
    Ok(SearchReport { trials, violations_found, survivors, eps: template.eps(), admissible_eps: limit })
}

/// Maximum change of the residual at the coarse nodes between successive
/// halvings of the grid spacing, starting from `points` nodes.
pub fn refinement_drift(
    eps: f64,
    points: usize,
    levels: usize,
    h: impl Fn(f64) -> f64 + Copy,
    phi: impl Fn(f64) -> f64 + Copy,
    xi: impl Fn(f64) -> f64 + Copy,
    s0: f64,
    n: u32,
) -> Result<Vec<f64>, GronwallError> {
    let base = points.saturating_sub(1).max(1);
    let mut residuals = Vec::with_capacity(levels + 1);
    for level in 0..=levels {
        let data = GronwallData::sample(eps, (base << level) + 1, h, phi, xi, s0, n)?;
        residuals.push(inequality_residuals(&data));
    }
    // node j of the base grid sits at index j·2^level
    Ok((0..levels)
        .map(|level| {
            let (coarse, fine) = (&residuals[level], &residuals[level + 1]);
            (0..base).map(|j| (fine[j << (level + 1)] - coarse[j << level]).abs()).fold(0.0, f64::max)
        })
        .collect())
}

/// Mean curvature of the leaves on `[0, eps]` with synthetic `φ = ξ = 1`.
pub fn from_metric(metric: &WarpedMetric, s0: f64, eps: f64, points: usize) -> Result<GronwallData, GronwallError> {
    let eps = eps.min(metric.half_width());
    let grid: Vec<f64> = (0..points).map(|j| eps * j as f64 / (points.max(2) - 1) as f64).collect();
    let h = grid.iter().map(|&t| metric.mean_curvature(t)).collect::<Result<Vec<_>, _>>()?;
    let ones = vec![1.0; grid.len()];
    GronwallData::new(grid, h, ones.clone(), ones, s0, metric.ambient_dim(), 1.0, 1.0)
}
