//! TOML metric files.
//!
//! ```toml
//! [metric]
//! epsilon = 0.1
//!
//! [[factor]]
//! dim = 2
//! sec_curv = 1          # integer, float or "p/q"
//! volume = 12.566       # optional for spheres and circles
//! label = "S^2"
//! warp = "(1 + t^4)^-1" # or coeff = "..." for the metric coefficient f^2
//! ```

use std::f64::consts::PI;

use num_traits::{Signed, Zero};
use serde::Deserialize;

use super::{FactorSpace, GeometryError, WarpSpec, WarpedMetric};
use crate::series::{parse_rational, Rational};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MetricFile {
    metric: MetricSection,
    factor: Vec<FactorEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MetricSection {
    epsilon: f64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Curvature {
    Int(i64),
    Float(f64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorEntry {
    dim: u32,
    #[serde(default)]
    sec_curv: Option<Curvature>,
    volume: Option<f64>,
    label: Option<String>,
    warp: Option<String>,
    coeff: Option<String>,
}

fn curvature(value: Option<Curvature>, label: &str) -> Result<Rational, GeometryError> {
    let bad = |text: String| GeometryError::InvalidFactor(format!("{label}: cannot read sec_curv {text:?}"));
    match value {
        None => Ok(Rational::zero()),
        Some(Curvature::Int(k)) => Ok(Rational::from_integer(k.into())),
        Some(Curvature::Float(k)) => parse_rational(&k.to_string()).ok_or_else(|| bad(k.to_string())),
        Some(Curvature::Text(s)) => parse_rational(&s).ok_or(bad(s)),
    }
}

impl FactorEntry {
    fn into_parts(self, index: usize) -> Result<(FactorSpace, WarpSpec), GeometryError> {
        let label = self.label.unwrap_or_else(|| format!("factor {index}"));
        let k = curvature(self.sec_curv, &label)?;
        let factor = match self.volume {
            Some(v) => FactorSpace::new(self.dim, k, v, label.clone())?,
            None if self.dim == 1 => FactorSpace::new(1, k, 2.0 * PI, label.clone())?,
            None if k.is_positive() => FactorSpace::round_sphere(self.dim, k, label.clone())?,
            None => return Err(GeometryError::InvalidFactor(format!("{label}: volume is required unless the factor is a sphere"))),
        };
        let warp = match (self.warp, self.coeff) {
            (Some(w), None) => WarpSpec::function(&w)?,
            (None, Some(c)) => WarpSpec::coefficient(&c)?,
            (None, None) => WarpSpec::constant_one(),
            (Some(_), Some(_)) => {
                return Err(GeometryError::InvalidFactor(format!("{label}: give either warp or coeff, not both")))
            }
        };
        Ok((factor, warp))
    }
}

impl WarpedMetric {
    /// Reads a metric from the TOML format shown in the module docs.
    pub fn from_toml_str(text: &str) -> Result<Self, GeometryError> {
        let file: MetricFile = toml::from_str(text).map_err(|e| GeometryError::MetricFile(e.to_string()))?;
        let (factors, warps) = file
            .factor
            .into_iter()
            .enumerate()
            .map(|(i, f)| f.into_parts(i))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .unzip();
        WarpedMetric::new(factors, warps, file.metric.epsilon)
    }
}
