//! The stability chain bounding the Yamabe quotient of a stable minimal
//! hypersurface, evaluated on quadrature data.
//!
//! Exponents are written in leaf dimension `m`: conformal coefficient
//! `4(m−1)/(m−2)` and Hölder exponent `2m/(m−2)`. In ambient dimension
//! `n = m + 1` these read `4(n−2)/(n−3)` and `2(n−1)/(n−3)`.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Relative slack tolerance between successive chain values.
pub const REL_TOL: f64 = 1e-12;
/// Absolute slack tolerance between successive chain values.
pub const ABS_TOL: f64 = 1e-14;

/// Printed with every chain report.
pub const DIMENSION_NOTE: &str =
    "exponents in leaf dimension m = n - 1: gradient coefficient 4(m-1)/(m-2), Hoelder exponent 2m/(m-2)";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VarcheckError {
    #[error("leaf dimension must be at least 3, got {0}")]
    InvalidDimension(u32),
    #[error("sample {index}: {reason}")]
    InvalidSample { index: usize, reason: String },
    #[error("S0 must be finite and <= 0, got {0}")]
    InvalidS0(f64),
    #[error("scenario has no samples")]
    Empty,
    #[error("scenario file: {0}")]
    Parse(String),
}

/// One quadrature node: weight and the integrands at that point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 7]", into = "[f64; 7]")]
pub struct Sample {
    pub mu: f64,
    pub s_leaf: f64,
    pub s_ambient: f64,
    pub b2: f64,
    pub ric_normal: f64,
    pub f: f64,
    pub grad_f_sq: f64,
}

impl From<[f64; 7]> for Sample {
    fn from(v: [f64; 7]) -> Self {
        Sample { mu: v[0], s_leaf: v[1], s_ambient: v[2], b2: v[3], ric_normal: v[4], f: v[5], grad_f_sq: v[6] }
    }
}

impl From<Sample> for [f64; 7] {
    fn from(s: Sample) -> Self {
        [s.mu, s.s_leaf, s.s_ambient, s.b2, s.ric_normal, s.f, s.grad_f_sq]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub leaf_dim: u32,
    #[serde(rename = "S0")]
    pub s0: f64,
    pub samples: Vec<Sample>,
}

impl Scenario {
    pub fn new(leaf_dim: u32, s0: f64, samples: Vec<Sample>) -> Result<Self, VarcheckError> {
        let s = Scenario { leaf_dim, s0, samples };
        s.validate()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self, VarcheckError> {
        let s: Scenario = serde_json::from_str(text).map_err(|e| VarcheckError::Parse(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), VarcheckError> {
        if self.leaf_dim < 3 {
            return Err(VarcheckError::InvalidDimension(self.leaf_dim));
        }
        if !(self.s0 <= 0.0) || !self.s0.is_finite() {
            return Err(VarcheckError::InvalidS0(self.s0));
        }
        if self.samples.is_empty() {
            return Err(VarcheckError::Empty);
        }
        for (index, s) in self.samples.iter().enumerate() {
            let bad = |reason: &str| Err(VarcheckError::InvalidSample { index, reason: reason.to_string() });
            let values: [f64; 7] = (*s).into();
            if values.iter().any(|v| !v.is_finite()) {
                return bad("non-finite value");
            }
            if s.mu <= 0.0 {
                return bad("weight must be positive");
            }
            if s.b2 < 0.0 {
                return bad("B2 must be nonnegative");
            }
            if s.grad_f_sq < 0.0 {
                return bad("gradf2 must be nonnegative");
            }
        }
        Ok(())
    }

    /// Leaf area `A = Σ μⱼ`.
    pub fn area(&self) -> f64 {
        self.samples.iter().map(|s| s.mu).sum()
    }

    /// The same data with `f` and `∇f` scaled by `c`.
    pub fn with_scaled_f(&self, c: f64) -> Scenario {
        let samples = self.samples.iter().map(|s| Sample { f: c * s.f, grad_f_sq: c * c * s.grad_f_sq, ..*s }).collect();
        Scenario { samples, ..self.clone() }
    }

    /// The equality configuration: `S = S^M = S₀`, `B = 0`, `Ric = 0`, `f ≡ 1`.
    pub fn equality_model(leaf_dim: u32, s0: f64, weights: &[f64]) -> Result<Scenario, VarcheckError> {
        let samples = weights
            .iter()
            .map(|&mu| Sample { mu, s_leaf: s0, s_ambient: s0, b2: 0.0, ric_normal: 0.0, f: 1.0, grad_f_sq: 0.0 })
            .collect();
        Scenario::new(leaf_dim, s0, samples)
    }

    /// Random data consistent with the Gauss equation at a minimal leaf,
    /// with `S^M ≥ S₀` and, after raising `‖∇f‖²` uniformly if needed,
    /// a nonnegative second variation.
    pub fn random_stable<R: Rng>(rng: &mut R, leaf_dim: u32, samples: usize) -> Scenario {
        let s0 = -rng.gen_range(0.0..10.0);
        let mut list: Vec<Sample> = (0..samples.max(1))
            .map(|_| {
                let s_leaf = rng.gen_range(-10.0..10.0);
                let s_ambient = s0 + rng.gen_range(0.0..5.0);
                let b2 = if rng.gen_bool(0.3) { 0.0 } else { rng.gen_range(0.0..3.0) };
                Sample {
                    mu: rng.gen_range(0.01..2.0),
                    s_leaf,
                    s_ambient,
                    b2,
                    ric_normal: 0.5 * (s_ambient - s_leaf - b2),
                    f: rng.gen_range(0.05..3.0),
                    grad_f_sq: rng.gen_range(0.0..4.0),
                }
            })
            .collect();
        let mut scenario = Scenario { leaf_dim, s0, samples: list.clone() };
        let deficit = -second_variation_value(&scenario);
        if deficit > 0.0 {
            let lift = deficit / scenario.area();
            for s in &mut list {
                s.grad_f_sq += lift;
            }
            scenario.samples = list;
        }
        scenario
    }
}

/// `Σ μⱼ(‖∇f‖² − (Ric + ‖B‖²) f²)`; nonnegative for stable leaves.
pub fn second_variation_value(s: &Scenario) -> f64 {
    s.samples.iter().map(|x| x.mu * (x.grad_f_sq - (x.ric_normal + x.b2) * x.f * x.f)).sum()
}

fn leaf_exponents(m: u32) -> Result<(f64, f64), VarcheckError> {
    if m < 3 {
        return Err(VarcheckError::InvalidDimension(m));
    }
    let m = f64::from(m);
    Ok((4.0 * (m - 1.0) / (m - 2.0), 2.0 * m / (m - 2.0)))
}

/// `A^{2/m}(Σ μ f^p)^{2/p} − Σ μ f²` with `p = 2m/(m−2)`.
pub fn holder_slack(weights: &[f64], f: &[f64], m: u32) -> Result<f64, VarcheckError> {
    let (_, p) = leaf_exponents(m)?;
    let area: f64 = weights.iter().sum();
    let power: f64 = weights.iter().zip(f).map(|(w, v)| w * v.abs().powf(p)).sum();
    let mass: f64 = weights.iter().zip(f).map(|(w, v)| w * v * v).sum();
    Ok(area.powf(2.0 / f64::from(m)) * power.powf(2.0 / p) - mass)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChainStepKind {
    SecondVariation,
    GaussSubstitution,
    DropSecondForm,
    EnlargeGradient,
    ScalarLowerBound,
    Holder,
}

impl ChainStepKind {
    pub const ALL: [ChainStepKind; 6] = [
        ChainStepKind::SecondVariation,
        ChainStepKind::GaussSubstitution,
        ChainStepKind::DropSecondForm,
        ChainStepKind::EnlargeGradient,
        ChainStepKind::ScalarLowerBound,
        ChainStepKind::Holder,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ChainStepKind::SecondVariation => "2 x second variation",
            ChainStepKind::GaussSubstitution => "Gauss substitution",
            ChainStepKind::DropSecondForm => "drop |B|^2",
            ChainStepKind::EnlargeGradient => "enlarge gradient coefficient",
            ChainStepKind::ScalarLowerBound => "S^M >= S0",
            ChainStepKind::Holder => "Hoelder",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainStep {
    pub kind: ChainStepKind,
    pub value: f64,
    /// `value − previous value`; zero for the first step.
    pub slack: f64,
    /// The same value divided by `(Σ μ f^p)^{2/p}`.
    pub normalized: f64,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub leaf_dim: u32,
    pub steps: Vec<ChainStep>,
    /// Magnitude of the sums entering the chain; slack tolerances are relative to it.
    pub scale: f64,
    /// `Q(f) − S₀A^{2/m}`, the final value divided by `(Σ μ f^p)^{2/p}`.
    pub quotient_gap: f64,
    pub quotient: f64,
    /// `Σ μ ‖B‖² f²`.
    pub second_form_term: f64,
    /// `Σ μ ‖∇f‖²`.
    pub gradient_term: f64,
    /// `Σ μ (S^M − S₀)`.
    pub scalar_excess: f64,
    pub note: &'static str,
}

impl ChainReport {
    pub fn monotone(&self) -> bool {
        self.steps.iter().all(|s| s.ok)
    }

    pub fn final_value(&self) -> f64 {
        self.steps.last().map_or(0.0, |s| s.value)
    }
}

/// `next ≥ previous` up to rounding; `scale` is the magnitude of the sums
/// the two values were assembled from.
pub fn step_within_tolerance(previous: f64, next: f64, scale: f64) -> bool {
    next - previous >= -(REL_TOL * previous.abs().max(next.abs()).max(scale) + ABS_TOL)
}

/// Evaluates each line of the chain on the scenario.
pub fn chain_evaluate(s: &Scenario) -> Result<ChainReport, VarcheckError> {
    s.validate()?;
    let (a, p) = leaf_exponents(s.leaf_dim)?;
    let m = f64::from(s.leaf_dim);
    let sum = |g: &dyn Fn(&Sample) -> f64| s.samples.iter().map(|x| x.mu * g(x)).sum::<f64>();
    let area = s.area();
    let grad = sum(&|x| x.grad_f_sq);
    let mass = sum(&|x| x.f * x.f);
    let power = sum(&|x| x.f.abs().powf(p));
    let leaf_sc = sum(&|x| x.s_leaf * x.f * x.f);
    let ambient_sc = sum(&|x| x.s_ambient * x.f * x.f);
    let b2 = sum(&|x| x.b2 * x.f * x.f);
    let ric = sum(&|x| x.ric_normal * x.f * x.f);
    let yamabe_num = a * grad + leaf_sc;
    let norm = power.powf(2.0 / p);
    let scale = a * grad + sum(&|x| (x.s_leaf.abs() + x.s_ambient.abs() + 2.0 * x.ric_normal.abs()) * x.f * x.f)
        + 2.0 * b2
        + s.s0.abs() * area.powf(2.0 / m) * norm;

    let values = [
        2.0 * (grad - ric - b2),
        2.0 * grad + leaf_sc - ambient_sc - b2,
        2.0 * grad + leaf_sc - ambient_sc,
        yamabe_num - ambient_sc,
        yamabe_num - s.s0 * mass,
        yamabe_num - s.s0 * area.powf(2.0 / m) * norm,
    ];
    let mut steps = Vec::with_capacity(values.len());
    for (i, (&value, kind)) in values.iter().zip(ChainStepKind::ALL).enumerate() {
        let (slack, ok) = if i == 0 { (0.0, true) } else { (value - values[i - 1], step_within_tolerance(values[i - 1], value, scale)) };
        steps.push(ChainStep { kind, value, slack, normalized: value / norm, ok });
    }
    let quotient = yamabe_num / norm;
    Ok(ChainReport {
        leaf_dim: s.leaf_dim,
        quotient_gap: values[5] / norm,
        quotient,
        steps,
        scale,
        second_form_term: b2,
        gradient_term: grad,
        scalar_excess: sum(&|x| x.s_ambient - s.s0),
        note: DIMENSION_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(mu: f64, s: f64, sm: f64, b2: f64, ric: f64, f: f64, g: f64) -> Sample {
        Sample { mu, s_leaf: s, s_ambient: sm, b2, ric_normal: ric, f, grad_f_sq: g }
    }

    #[test]
    fn second_variation_examples() {
        let eq = Scenario::equality_model(3, -6.0, &[1.0, 2.0]).unwrap();
        assert_eq!(second_variation_value(&eq), 0.0);
        let one = Scenario::new(3, -1.0, vec![sample(1.0, 0.0, 0.0, 0.0, -1.0, 1.0, 0.0)]).unwrap();
        assert_eq!(second_variation_value(&one), 1.0);
    }

    #[test]
    fn equality_model_has_zero_slacks() {
        let eq = Scenario::equality_model(4, -6.0, &[0.5, 1.5, 2.0]).unwrap();
        let report = chain_evaluate(&eq).unwrap();
        for step in &report.steps {
            assert!(step.slack.abs() < 1e-12, "{step:?}");
        }
        assert!(report.quotient_gap.abs() < 1e-12);
    }

    #[test]
    fn dropped_second_form_is_the_slack() {
        let s = Scenario::new(
            3,
            -2.0,
            vec![sample(1.0, -2.0, -2.0, 0.7, -0.35, 1.0, 0.0), sample(2.0, -2.0, -2.0, 0.0, 0.0, 1.0, 0.0)],
        )
        .unwrap();
        let report = chain_evaluate(&s).unwrap();
        assert!((report.steps[2].slack - 0.7).abs() < 1e-15);
    }

    #[test]
    fn holder_examples() {
        assert_eq!(holder_slack(&[1.0, 3.0], &[2.0, 2.0], 4).unwrap().abs() < 1e-12, true);
        let v = holder_slack(&[1.0, 1.0], &[1.0, 2.0], 4).unwrap();
        assert!((v - (34f64.sqrt() - 5.0)).abs() < 1e-12);
        assert_eq!(holder_slack(&[1.0], &[1.0], 2), Err(VarcheckError::InvalidDimension(2)));
    }

    #[test]
    fn rejects_bad_scenarios() {
        assert!(matches!(Scenario::new(3, 1.0, vec![sample(1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0)]), Err(VarcheckError::InvalidS0(_))));
        assert!(matches!(
            Scenario::new(3, -1.0, vec![sample(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0)]),
            Err(VarcheckError::InvalidSample { index: 0, .. })
        ));
        assert!(matches!(
            Scenario::new(3, -1.0, vec![sample(1.0, 0.0, 0.0, -1.0, 0.0, 1.0, 0.0)]),
            Err(VarcheckError::InvalidSample { .. })
        ));
        assert_eq!(Scenario::new(2, -1.0, vec![]), Err(VarcheckError::InvalidDimension(2)));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"leaf_dim": 3, "S0": -6, "samples": [[1, -6, -6, 0, 0, 1, 0], [2, -6, -5, 0.5, 0.25, 1.5, 0.1]]}"#;
        let s = Scenario::from_json(text).unwrap();
        assert_eq!(s.samples[1].b2, 0.5);
        let back = Scenario::from_json(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }
}
