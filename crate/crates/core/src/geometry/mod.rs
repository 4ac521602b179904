//! Leaf geometry of multiply warped products `Σ fᵢ(t)² gᵢ + dt²`.
//!
//! Each quantity has a float path (closed-form warps and their symbolic
//! derivatives) and an exact jet path at `t = 0`.

mod factor;
mod file;
mod scalar;

use serde::Serialize;
use thiserror::Error;

pub use factor::{unit_sphere_volume, FactorSpace};
use scalar::{assemble, Assembled, WarpValues};

use crate::series::{Jet, Rational, ScalarExpr, SeriesError};

/// Number of sample points used to check positivity of the warps.
pub const POSITIVITY_SAMPLES: usize = 1001;

const WINDOW_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("domain error at t = {t} in factor {factor}: {reason}")]
    Domain { t: f64, factor: String, reason: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("invalid factor: {0}")]
    InvalidFactor(String),
    #[error("{factors} factors but {warps} warps")]
    LengthMismatch { factors: usize, warps: usize },
    #[error("half-width must be positive and finite, got {0}")]
    InvalidHalfWidth(f64),
    #[error("invalid graph profile: {0}")]
    InvalidProfile(String),
    #[error("degenerate evaluation: {0}")]
    Degenerate(String),
    #[error("metric file: {0}")]
    MetricFile(String),
}

/// How a factor's warp is given: the function `f` itself, or the metric
/// coefficient `c = f²`.
#[derive(Clone, Debug, PartialEq)]
pub enum WarpSpec {
    Function(ScalarExpr),
    Coefficient(ScalarExpr),
}

impl WarpSpec {
    pub fn function(text: &str) -> Result<Self, SeriesError> {
        Ok(WarpSpec::Function(text.parse()?))
    }

    pub fn coefficient(text: &str) -> Result<Self, SeriesError> {
        Ok(WarpSpec::Coefficient(text.parse()?))
    }

    pub fn constant_one() -> Self {
        WarpSpec::Function(ScalarExpr::int(1))
    }
}

#[derive(Clone, Debug)]
struct Warp {
    spec: WarpSpec,
    value: ScalarExpr,
    first: ScalarExpr,
    second: ScalarExpr,
    at_zero: f64,
}

impl Warp {
    fn new(spec: WarpSpec) -> Self {
        let value = match &spec {
            WarpSpec::Function(f) => f.clone(),
            WarpSpec::Coefficient(c) => c.clone().sqrt(),
        };
        let first = value.derivative();
        let second = first.derivative();
        Warp { spec, value, first, second, at_zero: f64::NAN }
    }

    fn jet(&self, order: usize) -> Result<Jet, SeriesError> {
        match &self.spec {
            WarpSpec::Function(f) => f.to_jet(order),
            WarpSpec::Coefficient(c) => c.to_jet(order)?.sqrt().map_err(|e| SeriesError::NotExpandable {
                reason: format!("square root of the metric coefficient: {e}"),
            }),
        }
    }
}

/// The metric `Σ fᵢ(t)² gᵢ + dt²` on `(Π Fᵢ) × [−ε, ε]`.
#[derive(Clone, Debug)]
pub struct WarpedMetric {
    factors: Vec<FactorSpace>,
    warps: Vec<Warp>,
    half_width: f64,
}

/// Leaf quantities at a single `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LeafReport {
    pub t: f64,
    #[serde(rename = "H")]
    pub mean_curvature: f64,
    #[serde(rename = "B2")]
    pub b_norm_sq: f64,
    #[serde(rename = "RicNN")]
    pub ric_normal: f64,
    #[serde(rename = "S_leaf")]
    pub s_leaf: f64,
    #[serde(rename = "S_ambient")]
    pub s_ambient: f64,
    pub area_ratio: f64,
}

/// Residual jets of the Gauss, mean-curvature evolution and first-variation
/// identities.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityResiduals {
    pub gauss: Jet,
    pub evolution: Jet,
    pub first_variation: Jet,
}

impl IdentityResiduals {
    pub fn all_zero(&self) -> bool {
        self.gauss.is_zero() && self.evolution.is_zero() && self.first_variation.is_zero()
    }
}

/// Leaf quantities as jets at `t = 0`, all truncated to the same order.
#[derive(Clone, Debug, PartialEq)]
pub struct LeafJets {
    pub kappas: Vec<Jet>,
    pub mean_curvature: Jet,
    pub b_norm_sq: Jet,
    pub ric_normal: Jet,
    pub s_leaf: Jet,
    pub s_ambient: Jet,
    pub area_ratio: Jet,
}

/// Selects one leaf quantity from a report or a jet bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LeafQuantity {
    #[serde(rename = "H")]
    MeanCurvature,
    #[serde(rename = "B2")]
    BNormSq,
    #[serde(rename = "RicNN")]
    RicNormal,
    #[serde(rename = "S_leaf")]
    SLeaf,
    #[serde(rename = "S_ambient")]
    SAmbient,
    #[serde(rename = "area_ratio")]
    AreaRatio,
}

impl LeafQuantity {
    pub const ALL: [LeafQuantity; 6] = [
        LeafQuantity::MeanCurvature,
        LeafQuantity::BNormSq,
        LeafQuantity::RicNormal,
        LeafQuantity::SLeaf,
        LeafQuantity::SAmbient,
        LeafQuantity::AreaRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LeafQuantity::MeanCurvature => "H",
            LeafQuantity::BNormSq => "B2",
            LeafQuantity::RicNormal => "RicNN",
            LeafQuantity::SLeaf => "S_leaf",
            LeafQuantity::SAmbient => "S_ambient",
            LeafQuantity::AreaRatio => "area_ratio",
        }
    }

    pub fn of_report(self, r: &LeafReport) -> f64 {
        match self {
            LeafQuantity::MeanCurvature => r.mean_curvature,
            LeafQuantity::BNormSq => r.b_norm_sq,
            LeafQuantity::RicNormal => r.ric_normal,
            LeafQuantity::SLeaf => r.s_leaf,
            LeafQuantity::SAmbient => r.s_ambient,
            LeafQuantity::AreaRatio => r.area_ratio,
        }
    }

    pub fn of_jets(self, j: &LeafJets) -> &Jet {
        match self {
            LeafQuantity::MeanCurvature => &j.mean_curvature,
            LeafQuantity::BNormSq => &j.b_norm_sq,
            LeafQuantity::RicNormal => &j.ric_normal,
            LeafQuantity::SLeaf => &j.s_leaf,
            LeafQuantity::SAmbient => &j.s_ambient,
            LeafQuantity::AreaRatio => &j.area_ratio,
        }
    }
}

/// Sampled graph `x ↦ (x, u(x))` over the central leaf. `weights` is a
/// quadrature of the reference measure `Π dvol(gᵢ)` and sums to `Π Vᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphProfile {
    pub heights: Vec<f64>,
    pub grad_norm_sq: Vec<f64>,
    pub weights: Vec<f64>,
}

impl WarpedMetric {
    pub fn new(factors: Vec<FactorSpace>, warps: Vec<WarpSpec>, half_width: f64) -> Result<Self, GeometryError> {
        if factors.len() != warps.len() || factors.is_empty() {
            return Err(GeometryError::LengthMismatch { factors: factors.len(), warps: warps.len() });
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(GeometryError::InvalidHalfWidth(half_width));
        }
        let mut metric = WarpedMetric { factors, warps: warps.into_iter().map(Warp::new).collect(), half_width };
        for t in metric.grid(POSITIVITY_SAMPLES).into_iter().chain([0.0]) {
            for i in 0..metric.factors.len() {
                metric.warp_value(i, t)?;
            }
        }
        for i in 0..metric.warps.len() {
            metric.warps[i].at_zero = metric.warp_value(i, 0.0)?;
        }
        Ok(metric)
    }

    pub fn factors(&self) -> &[FactorSpace] {
        &self.factors
    }

    pub fn warp_specs(&self) -> impl Iterator<Item = &WarpSpec> {
        self.warps.iter().map(|w| &w.spec)
    }

    /// The warp `fᵢ` as an expression (a square root for coefficient input).
    pub fn warp_expr(&self, i: usize) -> &ScalarExpr {
        &self.warps[i].value
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    /// `n = 1 + Σ dᵢ`.
    pub fn ambient_dim(&self) -> u32 {
        1 + self.leaf_dim()
    }

    pub fn leaf_dim(&self) -> u32 {
        self.factors.iter().map(FactorSpace::dim).sum()
    }

    /// `points` equally spaced samples of `[−ε, ε]`, endpoints included.
    pub fn grid(&self, points: usize) -> Vec<f64> {
        symmetric_grid(self.half_width, points)
    }

    /// Same factors and half-width with every warp multiplied by `c`.
    pub fn rescaled(&self, c: &Rational) -> Result<WarpedMetric, GeometryError> {
        let c_expr = ScalarExpr::rational(c.clone());
        let warps = self
            .warps
            .iter()
            .map(|w| match &w.spec {
                WarpSpec::Function(f) => WarpSpec::Function(c_expr.clone() * f.clone()),
                WarpSpec::Coefficient(g) => WarpSpec::Coefficient(c_expr.clone().powi(2) * g.clone()),
            })
            .collect();
        WarpedMetric::new(self.factors.clone(), warps, self.half_width)
    }

    fn domain(&self, i: usize, t: f64, reason: impl Into<String>) -> GeometryError {
        GeometryError::Domain { t, factor: self.factors[i].label().to_string(), reason: reason.into() }
    }

    fn warp_value(&self, i: usize, t: f64) -> Result<f64, GeometryError> {
        let f = self.warps[i].value.eval(t).map_err(|e| self.domain(i, t, e.to_string()))?;
        if f <= 0.0 {
            return Err(self.domain(i, t, format!("warp is not positive (value {f})")));
        }
        Ok(f)
    }

    fn check_window(&self, t: f64) -> Result<(), GeometryError> {
        if !t.is_finite() || t.abs() > self.half_width * (1.0 + WINDOW_SLACK) {
            return Err(GeometryError::Domain {
                t,
                factor: "metric".into(),
                reason: format!("outside the window [-{0}, {0}]", self.half_width),
            });
        }
        Ok(())
    }

    fn float_terms(&self, t: f64) -> Result<Vec<WarpValues<f64>>, GeometryError> {
        self.check_window(t)?;
        (0..self.factors.len())
            .map(|i| {
                let w = &self.warps[i];
                let eval = |e: &ScalarExpr| e.eval(t).map_err(|err| self.domain(i, t, err.to_string()));
                Ok(WarpValues {
                    dim: self.factors[i].dim(),
                    factor_scalar: self.factors[i].scalar_curvature(),
                    f: self.warp_value(i, t)?,
                    df: eval(&w.first)?,
                    ddf: eval(&w.second)?,
                    f_at_zero: w.at_zero,
                })
            })
            .collect()
    }

    fn assemble_float(&self, t: f64) -> Result<Assembled<f64>, GeometryError> {
        assemble(&self.float_terms(t)?)
    }

    /// Jets of every quantity before truncation to a common order. The warps
    /// are expanded two orders deeper so that `f″` still reaches `order`.
    fn assemble_jets(&self, order: usize) -> Result<Assembled<Jet>, GeometryError> {
        let terms = self
            .warps
            .iter()
            .zip(&self.factors)
            .map(|(w, factor)| {
                let f = w.jet(order + 2)?;
                let df = f.derivative();
                let ddf = df.derivative();
                let f_at_zero = Jet::constant(f.constant_term().clone(), order + 2);
                Ok(WarpValues { dim: factor.dim(), factor_scalar: factor.scalar_curvature(), f, df, ddf, f_at_zero })
            })
            .collect::<Result<Vec<_>, GeometryError>>()?;
        assemble(&terms)
    }

    /// Principal curvatures `κᵢ = fᵢ′/fᵢ` with multiplicities `dᵢ`.
    pub fn weingarten_profile(&self, t: f64) -> Result<Vec<(f64, u32)>, GeometryError> {
        let a = self.assemble_float(t)?;
        Ok(a.kappas.into_iter().zip(self.factors.iter().map(FactorSpace::dim)).collect())
    }

    pub fn weingarten_jets(&self, order: usize) -> Result<Vec<(Jet, u32)>, GeometryError> {
        let a = self.assemble_jets(order)?;
        Ok(a.kappas.into_iter().map(|k| k.truncate(order)).zip(self.factors.iter().map(FactorSpace::dim)).collect())
    }

    pub fn mean_curvature(&self, t: f64) -> Result<f64, GeometryError> {
        Ok(self.assemble_float(t)?.mean)
    }

    pub fn second_form_norm_sq(&self, t: f64) -> Result<f64, GeometryError> {
        Ok(self.assemble_float(t)?.b_norm_sq)
    }

    /// `Ric(∂t, ∂t) = −Σ dᵢ fᵢ″/fᵢ`.
    pub fn normal_ricci(&self, t: f64) -> Result<f64, GeometryError> {
        Ok(self.assemble_float(t)?.ric_normal)
    }

    /// Scalar curvature of the leaf `Σ_t`, `Σ Sᵢ/fᵢ²`.
    pub fn leaf_scalar(&self, t: f64) -> Result<f64, GeometryError> {
        Ok(self.assemble_float(t)?.s_leaf)
    }

    /// Scalar curvature of the ambient metric at points of `Σ_t`.
    pub fn ambient_scalar(&self, t: f64) -> Result<f64, GeometryError> {
        Ok(self.assemble_float(t)?.s_ambient)
    }

    /// `A(Σ_t)/A(Σ₀) = Π (fᵢ(t)/fᵢ(0))^{dᵢ}`.
    pub fn area_ratio(&self, t: f64) -> Result<f64, GeometryError> {
        Ok(self.assemble_float(t)?.area_ratio)
    }

    /// `A(Σ₀) = Π Vᵢ fᵢ(0)^{dᵢ}`.
    pub fn central_area(&self) -> f64 {
        self.factors.iter().zip(&self.warps).map(|(f, w)| f.volume() * w.at_zero.powi(f.dim() as i32)).product()
    }

    pub fn leaf_area(&self, t: f64) -> Result<f64, GeometryError> {
        Ok(self.area_ratio(t)? * self.central_area())
    }

    pub fn leaf_report(&self, t: f64) -> Result<LeafReport, GeometryError> {
        let a = self.assemble_float(t)?;
        Ok(LeafReport {
            t,
            mean_curvature: a.mean,
            b_norm_sq: a.b_norm_sq,
            ric_normal: a.ric_normal,
            s_leaf: a.s_leaf,
            s_ambient: a.s_ambient,
            area_ratio: a.area_ratio,
        })
    }

    /// All leaf quantities as jets truncated at `order`.
    pub fn jets(&self, order: usize) -> Result<LeafJets, GeometryError> {
        let a = self.assemble_jets(order)?;
        Ok(LeafJets {
            kappas: a.kappas.iter().map(|k| k.truncate(order)).collect(),
            mean_curvature: a.mean.truncate(order),
            b_norm_sq: a.b_norm_sq.truncate(order),
            ric_normal: a.ric_normal.truncate(order),
            s_leaf: a.s_leaf.truncate(order),
            s_ambient: a.s_ambient.truncate(order),
            area_ratio: a.area_ratio.truncate(order),
        })
    }

    /// `2 Ric(∂t,∂t) − (S^M − S_t + H² − ‖B‖²)`; zero for every warped product.
    pub fn gauss_residual(&self, order: usize) -> Result<Jet, GeometryError> {
        Ok(self.identity_residuals(order)?.gauss)
    }

    /// `H′ + Ric(∂t,∂t) + ‖B‖²`, the evolution of the mean curvature for unit lapse.
    pub fn evolution_residual(&self, order: usize) -> Result<Jet, GeometryError> {
        Ok(self.identity_residuals(order)?.evolution)
    }

    /// `d/dt log(area_ratio) − H`.
    pub fn first_variation_residual(&self, order: usize) -> Result<Jet, GeometryError> {
        Ok(self.identity_residuals(order)?.first_variation)
    }

    /// The three residuals above from a single expansion.
    pub fn identity_residuals(&self, order: usize) -> Result<IdentityResiduals, GeometryError> {
        let a = self.assemble_jets(order)?;
        let two = Rational::from_integer(2.into());
        let rhs = &(&(&a.s_ambient - &a.s_leaf) + &(&a.mean * &a.mean)) - &a.b_norm_sq;
        let gauss = (&a.ric_normal.scale(&two) - &rhs).truncate(order);
        let evolution = (&(&a.mean.derivative() + &a.ric_normal) + &a.b_norm_sq).truncate(order);
        let log_derivative = a.area_ratio.derivative().checked_div(&a.area_ratio)?;
        let first_variation = (&log_derivative - &a.mean).truncate(order);
        Ok(IdentityResiduals { gauss, evolution, first_variation })
    }

    /// Gauss residual evaluated in floating point at `t`.
    pub fn gauss_residual_at(&self, t: f64) -> Result<f64, GeometryError> {
        let r = self.leaf_report(t)?;
        Ok(2.0 * r.ric_normal - (r.s_ambient - r.s_leaf + r.mean_curvature.powi(2) - r.b_norm_sq))
    }

    /// True when every `fᵢ′(0)` is exactly zero, i.e. `Σ₀` is totally geodesic.
    pub fn is_totally_geodesic(&self) -> Result<bool, GeometryError> {
        for w in &self.warps {
            let f = w.jet(1)?;
            if !f.derivative().constant_term().eq(&Rational::from_integer(0.into())) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact `fᵢ(0)` for each factor.
    pub fn warps_at_zero(&self) -> Result<Vec<Rational>, GeometryError> {
        self.warps.iter().map(|w| Ok(w.jet(0)?.constant_term().clone())).collect()
    }

    /// The factors of the central leaf `Σ₀` with its induced metric: curvature
    /// `kᵢ/fᵢ(0)²` and volume `Vᵢ fᵢ(0)^{dᵢ}`.
    pub fn central_leaf_factors(&self) -> Result<Vec<FactorSpace>, GeometryError> {
        self.factors
            .iter()
            .zip(self.warps_at_zero()?)
            .map(|(factor, f0)| Ok(factor.rescaled(&f0)))
            .collect()
    }

    /// Area of the graph of `u` over `Σ₀`, computed as
    /// `Σ w √(1+‖∇u‖²) Π fᵢ(u)^{dᵢ}`.
    pub fn graph_area(&self, profile: &GraphProfile) -> Result<f64, GeometryError> {
        let n = profile.heights.len();
        if profile.grad_norm_sq.len() != n || profile.weights.len() != n {
            return Err(GeometryError::InvalidProfile("heights, gradients and weights differ in length".into()));
        }
        let mut total = 0.0;
        for ((&u, &g), &w) in profile.heights.iter().zip(&profile.grad_norm_sq).zip(&profile.weights) {
            if !(0.0..self.half_width).contains(&u) {
                return Err(GeometryError::Domain {
                    t: u,
                    factor: "graph".into(),
                    reason: format!("height outside [0, {})", self.half_width),
                });
            }
            if !(g >= 0.0 && w >= 0.0) {
                return Err(GeometryError::InvalidProfile("negative gradient norm or weight".into()));
            }
            let mut element = (1.0 + g).sqrt();
            for (i, factor) in self.factors.iter().enumerate() {
                element *= self.warp_value(i, u)?.powi(factor.dim() as i32);
            }
            total += w * element;
        }
        Ok(total)
    }
}

/// `points` equally spaced samples of `[−half_width, half_width]`.
pub fn symmetric_grid(half_width: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..points)
            .map(|i| {
                let s = -1.0 + 2.0 * i as f64 / (points - 1) as f64;
                s * half_width
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::series::DEFAULT_ORDER;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn product_metric() -> WarpedMetric {
        WarpedMetric::new(
            vec![FactorSpace::unit_sphere(2), FactorSpace::circle(2.0 * PI).unwrap()],
            vec![WarpSpec::constant_one(), WarpSpec::constant_one()],
            0.5,
        )
        .unwrap()
    }

    fn torus_bump() -> WarpedMetric {
        WarpedMetric::new(
            vec![FactorSpace::circle(1.0).unwrap(), FactorSpace::circle(1.0).unwrap()],
            vec![WarpSpec::function("1+t^4").unwrap(), WarpSpec::function("(1+t^4)^(-1)").unwrap()],
            0.1,
        )
        .unwrap()
    }

    #[test]
    fn product_metric_is_flat_in_t() {
        let m = product_metric();
        for t in [-0.5, 0.0, 0.3] {
            let rep = m.leaf_report(t).unwrap();
            assert_eq!(rep.mean_curvature, 0.0);
            assert_eq!(rep.b_norm_sq, 0.0);
            assert_eq!(rep.ric_normal, 0.0);
            assert_eq!(rep.s_ambient, 2.0);
            assert_eq!(rep.area_ratio, 1.0);
        }
        assert!((m.leaf_area(0.2).unwrap() - 8.0 * PI * PI).abs() < 1e-12);
        assert!(m.gauss_residual(DEFAULT_ORDER).unwrap().is_zero());
        assert!(m.is_totally_geodesic().unwrap());
    }

    #[test]
    fn torus_principal_curvatures() {
        let m = torus_bump();
        let t = 0.07_f64;
        let k = 4.0 * t.powi(3) / (1.0 + t.powi(4));
        let prof = m.weingarten_profile(t).unwrap();
        assert!((prof[0].0 - k).abs() < 1e-15 && (prof[1].0 + k).abs() < 1e-15);
        assert!((m.second_form_norm_sq(t).unwrap() - 2.0 * k * k).abs() < 1e-18);
        assert!(m.mean_curvature(t).unwrap().abs() < 1e-18);
        assert!(m.evolution_residual(DEFAULT_ORDER).unwrap().is_zero());
    }

    #[test]
    fn coefficient_form_uses_square_root() {
        let m = WarpedMetric::new(
            vec![FactorSpace::unit_sphere(2)],
            vec![WarpSpec::coefficient("1+t^2").unwrap()],
            0.25,
        )
        .unwrap();
        assert!((m.normal_ricci(0.0).unwrap() + 2.0).abs() < 1e-15);
        let t = 0.2_f64;
        assert!((m.normal_ricci(t).unwrap() + 2.0 / (1.0 + t * t).powi(2)).abs() < 1e-14);
        let j = m.jets(DEFAULT_ORDER).unwrap();
        assert_eq!(j.ric_normal.coeff(0), Some(&r(-2)));
        assert_eq!(j.area_ratio, Jet::from_ints(&[1, 0, 1], DEFAULT_ORDER));
    }

    #[test]
    fn hyperbolic_leaf_scalar() {
        let m = WarpedMetric::new(
            vec![FactorSpace::hyperbolic(3, 0.9427, "N^3").unwrap()],
            vec![WarpSpec::constant_one()],
            1.0,
        )
        .unwrap();
        assert_eq!(m.leaf_scalar(0.4).unwrap(), -6.0);
        assert_eq!(m.ambient_scalar(-0.9).unwrap(), -6.0);
        assert_eq!(m.ambient_dim(), 4);
    }

    #[test]
    fn construction_rejects_nonpositive_warps() {
        let err = WarpedMetric::new(
            vec![FactorSpace::unit_sphere(2)],
            vec![WarpSpec::function("1 - t^2").unwrap()],
            2.0,
        )
        .unwrap_err();
        match err {
            GeometryError::Domain { t, factor, .. } => {
                assert!(t.abs() >= 1.0);
                assert_eq!(factor, "S^2");
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            WarpedMetric::new(vec![FactorSpace::unit_sphere(2)], vec![], 0.1),
            Err(GeometryError::LengthMismatch { .. })
        ));
        assert!(matches!(
            WarpedMetric::new(vec![FactorSpace::unit_sphere(2)], vec![WarpSpec::constant_one()], 0.0),
            Err(GeometryError::InvalidHalfWidth(_))
        ));
    }

    #[test]
    fn evaluation_outside_window_fails() {
        let m = torus_bump();
        assert!(matches!(m.leaf_report(0.2), Err(GeometryError::Domain { .. })));
    }

    #[test]
    fn rescaling_divides_scalar_curvature() {
        let m = product_metric();
        let s = m.rescaled(&r(2)).unwrap();
        assert_eq!(s.leaf_scalar(0.1).unwrap(), 0.5);
        let leaf = s.central_leaf_factors().unwrap();
        assert_eq!(leaf[0].sec_curv(), &Rational::new(1.into(), 4.into()));
    }

    #[test]
    fn graph_of_constant_height_is_a_leaf() {
        let m = torus_bump();
        let profile = |u: f64| GraphProfile { heights: vec![u; 4], grad_norm_sq: vec![0.0; 4], weights: vec![0.25; 4] };
        assert!((m.graph_area(&profile(0.0)).unwrap() - m.central_area()).abs() < 1e-15);
        assert!((m.graph_area(&profile(0.05)).unwrap() - m.leaf_area(0.05).unwrap()).abs() < 1e-15);
        assert!(m.graph_area(&profile(-0.01)).is_err());
        assert!(m.graph_area(&profile(0.1)).is_err());
    }

    #[test]
    fn grid_endpoints() {
        let g = symmetric_grid(0.1, 5);
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], -0.1);
        assert_eq!(g[2], 0.0);
        assert_eq!(g[4], 0.1);
    }
}
