//! σ-constant bookkeeping for leaves built from space forms, and the four
//! hypotheses of the rigidity statements checked against catalog metrics.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::claims::ClaimSettings;
use super::CatalogError;
use crate::geometry::{unit_sphere_volume, FactorSpace, GeometryError, LeafJets, WarpedMetric};
use crate::series::rational_to_f64;
use crate::yamabe::quotient_constant;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum SigmaValue {
    Known(f64),
    /// Negative, with no closed value available.
    NegativeUnknown,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Attains {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SigmaFacts {
    pub leaf_dim: u32,
    pub sigma: SigmaValue,
    /// Whether the given leaf metric realises σ.
    pub attains: Attains,
    pub einstein: bool,
    pub source: String,
}

/// A product of space forms is Einstein iff every factor has the same
/// Ricci eigenvalue `(dᵢ−1)kᵢ`.
pub fn einstein_product_check(factors: &[FactorSpace]) -> bool {
    match factors.split_first() {
        None => true,
        Some((first, rest)) => {
            let lambda = first.ricci_eigenvalue();
            rest.iter().all(|f| f.ricci_eigenvalue() == lambda)
        }
    }
}

fn sphere_sigma(m: u32) -> f64 {
    f64::from(m * (m - 1)) * unit_sphere_volume(m).powf(2.0 / f64::from(m))
}

/// σ facts for a leaf given as a product of space forms with its own
/// (induced) curvature and volume data.
pub fn sigma_facts(factors: &[FactorSpace]) -> SigmaFacts {
    let leaf_dim: u32 = factors.iter().map(FactorSpace::dim).sum();
    let einstein = einstein_product_check(factors);
    let facts = |sigma, attains, source: &str| SigmaFacts { leaf_dim, sigma, attains, einstein, source: source.to_string() };
    if leaf_dim >= 2 && factors.iter().all(|f| f.sec_curv().is_zero()) {
        return facts(SigmaValue::Known(0.0), Attains::Yes, "flat torus: sigma = 0, realised by the flat metric");
    }
    if let [single] = factors {
        let k = single.sec_curv();
        let scalar = rational_to_f64(&single.scalar_curvature());
        return match leaf_dim {
            2 => facts(
                SigmaValue::Known(scalar * single.volume()),
                Attains::Yes,
                "surface: total scalar curvature is topological",
            ),
            m if m >= 3 && k.is_negative() => facts(
                SigmaValue::Known(quotient_constant(scalar, single.volume(), m).unwrap_or(f64::NAN)),
                Attains::Yes,
                "hyperbolic metric realises sigma = S Vol^(2/m)",
            ),
            m if m >= 3 && k.is_positive() => {
                facts(SigmaValue::Known(sphere_sigma(m)), Attains::Yes, "round sphere: sigma = m(m-1) Vol(S^m(1))^(2/m)")
            }
            _ => facts(SigmaValue::Unknown, Attains::Unknown, "no sigma rule for this leaf"),
        };
    }
    if let [a, b] = factors {
        let (big, small) = if a.dim() >= b.dim() { (a, b) } else { (b, a) };
        if small.dim() == 1 && big.dim() >= 2 {
            if big.sec_curv().is_positive() {
                return facts(
                    SigmaValue::Known(sphere_sigma(leaf_dim)),
                    Attains::No,
                    "sphere times circle: sigma equals that of the round sphere, not realised by a product",
                );
            }
            if big.sec_curv().is_negative() && big.dim() == 2 {
                return facts(
                    SigmaValue::NegativeUnknown,
                    Attains::No,
                    "hyperbolic surface times circle: negative sigma, product metric not Einstein",
                );
            }
        }
    }
    if einstein {
        facts(SigmaValue::Unknown, Attains::Unknown, "Einstein product with no sigma rule")
    } else {
        facts(SigmaValue::Unknown, Attains::No, "a metric realising sigma is Einstein; this product is not")
    }
}

/// `σ(Σ) − S₀·A^{2/m}`; zero in the equality configuration.
pub fn equality_gap(facts: &SigmaFacts, s0: f64, area: f64) -> Result<f64, CatalogError> {
    if s0 > 0.0 {
        return Err(CatalogError::PositiveS0(s0));
    }
    let sigma = match facts.sigma {
        SigmaValue::Known(v) => v,
        _ => return Err(CatalogError::SigmaUnknown),
    };
    if !(area > 0.0) || facts.leaf_dim == 0 {
        return Err(CatalogError::InvalidParams(format!("leaf area {area} in dimension {}", facts.leaf_dim)));
    }
    Ok(sigma - s0 * area.powf(2.0 / f64::from(facts.leaf_dim)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum HypothesisItem {
    /// The central leaf is totally geodesic.
    TotallyGeodesic,
    /// Ric(∂t, ∂t) vanishes on the central leaf.
    NormalRicciVanishes,
    /// S^M on the central leaf equals its infimum S₀ over the window.
    ScalarAtInfimum,
    /// The induced metric realises σ.
    RealisesSigma,
}

impl HypothesisItem {
    pub const ALL: [HypothesisItem; 4] = [
        HypothesisItem::TotallyGeodesic,
        HypothesisItem::NormalRicciVanishes,
        HypothesisItem::ScalarAtInfimum,
        HypothesisItem::RealisesSigma,
    ];
}

impl fmt::Display for HypothesisItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HypothesisItem::TotallyGeodesic => "totally geodesic",
            HypothesisItem::NormalRicciVanishes => "normal Ricci vanishes",
            HypothesisItem::ScalarAtInfimum => "scalar at infimum",
            HypothesisItem::RealisesSigma => "realises sigma",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisResult {
    pub item: HypothesisItem,
    pub status: Status,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisReport {
    pub s_ambient_at_zero: f64,
    pub grid_infimum: f64,
    pub sigma: SigmaFacts,
    pub items: Vec<HypothesisResult>,
}

impl HypothesisReport {
    pub fn status(&self, item: HypothesisItem) -> Status {
        self.items.iter().find(|r| r.item == item).map_or(Status::Unknown, |r| r.status)
    }

    /// Items whose status is `Fails`.
    pub fn failing(&self) -> Vec<HypothesisItem> {
        self.items.iter().filter(|r| r.status == Status::Fails).map(|r| r.item).collect()
    }
}

fn holds(ok: bool) -> Status {
    if ok {
        Status::Holds
    } else {
        Status::Fails
    }
}

/// Evaluates every hypothesis item on the central leaf `t = 0` of `metric`.
pub fn hypothesis_check(
    metric: &WarpedMetric,
    jets: &LeafJets,
    settings: &ClaimSettings,
) -> Result<HypothesisReport, GeometryError> {
    let geodesic = metric.is_totally_geodesic()?;
    let kappas: Vec<f64> = metric.weingarten_profile(0.0)?.into_iter().map(|(k, _)| k).collect();
    let first = HypothesisResult {
        item: HypothesisItem::TotallyGeodesic,
        status: holds(geodesic),
        evidence: format!("warp derivatives at 0 {}; principal curvatures {kappas:?}", if geodesic { "all zero" } else { "not all zero" }),
    };

    let ric_c0 = jets.ric_normal.constant_term().clone();
    let ric_float = metric.normal_ricci(0.0)?;
    let second = HypothesisResult {
        item: HypothesisItem::NormalRicciVanishes,
        status: holds(ric_c0.is_zero() && ric_float.abs() <= settings.abs_tol),
        evidence: format!("jet constant term {ric_c0}, value {ric_float:e}"),
    };

    let s_zero = rational_to_f64(jets.s_ambient.constant_term());
    let t_max = metric.half_width().min(0.1);
    let mut infimum = f64::INFINITY;
    let mut at = 0.0;
    for t in crate::geometry::symmetric_grid(t_max, settings.grid) {
        let s = metric.ambient_scalar(t)?;
        if s < infimum {
            infimum = s;
            at = t;
        }
    }
    let tol = settings.rel_tol * s_zero.abs().max(1.0);
    let third = HypothesisResult {
        item: HypothesisItem::ScalarAtInfimum,
        status: holds(infimum >= s_zero - tol),
        evidence: format!("S^M(0) = {s_zero}, grid infimum {infimum:.10} at t = {at:.4} on |t| <= {t_max}"),
    };

    let sigma = sigma_facts(&metric.central_leaf_factors()?);
    let fourth = HypothesisResult {
        item: HypothesisItem::RealisesSigma,
        status: match sigma.attains {
            Attains::Yes => Status::Holds,
            Attains::No => Status::Fails,
            Attains::Unknown => Status::Unknown,
        },
        evidence: format!("{} (Einstein: {})", sigma.source, if sigma.einstein { "yes" } else { "no" }),
    };

    Ok(HypothesisReport {
        s_ambient_at_zero: s_zero,
        grid_infimum: infimum,
        sigma,
        items: vec![first, second, third, fourth],
    })
}
