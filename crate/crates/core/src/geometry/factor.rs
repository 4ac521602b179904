use std::f64::consts::PI;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::GeometryError;
use crate::series::{rational_to_f64, Rational};

/// Closed space form `(F^d, g)` of constant sectional curvature, used as one
/// factor of a warped product.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FactorSpace {
    dim: u32,
    #[serde(serialize_with = "crate::series::serialize_rational")]
    sec_curv: Rational,
    volume: f64,
    label: String,
}

/// Volume of the unit round sphere `S^d ⊂ R^{d+1}`.
pub fn unit_sphere_volume(dim: u32) -> f64 {
    match dim {
        0 => 2.0,
        1 => 2.0 * PI,
        d => 2.0 * PI * unit_sphere_volume(d - 2) / f64::from(d - 1),
    }
}

impl FactorSpace {
    /// Sectional curvature is forced to zero for one-dimensional factors.
    pub fn new(dim: u32, sec_curv: Rational, volume: f64, label: impl Into<String>) -> Result<Self, GeometryError> {
        let label = label.into();
        if dim == 0 {
            return Err(GeometryError::InvalidFactor(format!("{label}: dimension must be at least 1")));
        }
        if !(volume.is_finite() && volume > 0.0) {
            return Err(GeometryError::InvalidFactor(format!("{label}: volume must be positive, got {volume}")));
        }
        let sec_curv = if dim == 1 { Rational::zero() } else { sec_curv };
        Ok(FactorSpace { dim, sec_curv, volume, label })
    }

    /// Round sphere of curvature `sec_curv > 0`, radius `sec_curv^{-1/2}`.
    pub fn round_sphere(dim: u32, sec_curv: Rational, label: impl Into<String>) -> Result<Self, GeometryError> {
        let label = label.into();
        if !sec_curv.is_positive() {
            return Err(GeometryError::InvalidFactor(format!("{label}: a round sphere needs positive curvature")));
        }
        let k = rational_to_f64(&sec_curv);
        let volume = unit_sphere_volume(dim) * k.powf(-f64::from(dim) / 2.0);
        Self::new(dim, sec_curv, volume, label)
    }

    pub fn unit_sphere(dim: u32) -> Self {
        Self::round_sphere(dim, Rational::from_integer(1.into()), format!("S^{dim}")).expect("unit sphere is valid")
    }

    /// Closed hyperbolic manifold (curvature −1); its volume is data.
    pub fn hyperbolic(dim: u32, volume: f64, label: impl Into<String>) -> Result<Self, GeometryError> {
        Self::new(dim, Rational::from_integer((-1).into()), volume, label)
    }

    pub fn flat(dim: u32, volume: f64, label: impl Into<String>) -> Result<Self, GeometryError> {
        Self::new(dim, Rational::zero(), volume, label)
    }

    /// Circle of the given length.
    pub fn circle(length: f64) -> Result<Self, GeometryError> {
        Self::flat(1, length, "S^1")
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn sec_curv(&self) -> &Rational {
        &self.sec_curv
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `d(d−1)k`.
    pub fn scalar_curvature(&self) -> Rational {
        let d = i64::from(self.dim);
        &self.sec_curv * Rational::from_integer((d * (d - 1)).into())
    }

    /// The single Ricci eigenvalue `(d−1)k` of a space form.
    pub fn ricci_eigenvalue(&self) -> Rational {
        &self.sec_curv * Rational::from_integer((i64::from(self.dim) - 1).into())
    }

    /// The same factor with metric scaled by `c²`: curvature `k/c²`, volume `c^d V`.
    pub fn rescaled(&self, c: &Rational) -> FactorSpace {
        let c2 = c * c;
        let cf = rational_to_f64(c);
        FactorSpace {
            dim: self.dim,
            sec_curv: &self.sec_curv / c2,
            volume: self.volume * cf.powi(self.dim as i32),
            label: self.label.clone(),
        }
    }
}
