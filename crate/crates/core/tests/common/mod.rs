#![allow(dead_code)]

pub mod oracle_table;

use proptest::prelude::*;
use warpcheck::catalog::{self, CatalogEntry};
use warpcheck::geometry::{FactorSpace, LeafJets, WarpSpec, WarpedMetric};
use warpcheck::series::{Jet, Rational, ScalarExpr};

pub fn rat(text: &str) -> Rational {
    warpcheck::series::parse_rational(text).unwrap_or_else(|| panic!("bad rational {text}"))
}

pub fn jet_of(coeffs: &[&str]) -> Jet {
    Jet::from_coeffs(coeffs.iter().map(|c| rat(c)).collect())
}

/// Catalog entry for a metric name used by the oracle script.
pub fn oracle_entry(name: &str) -> CatalogEntry {
    let num = |prefix: &str| -> u32 { name[prefix.len()..].parse().unwrap() };
    match name {
        "mm_sphere" => catalog::build_mm_sphere(),
        "positive_sigma_n5" => catalog::build_positive_sigma_example(5, 1),
        _ if name.starts_with("case") => {
            let case = name[4..5].parse().unwrap();
            let n = name[7..].parse().unwrap();
            catalog::build_case(case, n)
        }
        _ if name.starts_with("torus3_k") => catalog::build_torus3(num("torus3_k")),
        _ if name.starts_with("intro_k") => catalog::build_intro_sphere(num("intro_k")),
        _ if name.starts_with("ptorus_k") => {
            let rest = &name["ptorus_k".len()..];
            let (k, m) = rest.split_once("_m").unwrap();
            catalog::build_perturbed_torus(k.parse().unwrap(), m.parse().unwrap())
        }
        _ => panic!("unknown oracle metric {name}"),
    }
    .unwrap()
}

pub fn quantity<'a>(jets: &'a LeafJets, name: &str) -> &'a Jet {
    match name {
        "H" => &jets.mean_curvature,
        "B2" => &jets.b_norm_sq,
        "Ric" => &jets.ric_normal,
        "S_leaf" => &jets.s_leaf,
        "S_M" => &jets.s_ambient,
        "area" => &jets.area_ratio,
        other => panic!("unknown quantity {other}"),
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=16).prop_map(|(p, q)| Rational::new(p.into(), (4 * q).into()))
}

/// Polynomial `1 + Σ aⱼ tʲ` with `|aⱼ| ≤ 1`, positive on `|t| ≤ 1/2`.
fn polynomial_warp() -> impl Strategy<Value = ScalarExpr> {
    prop::collection::vec(small_rational(), 4).prop_map(|coeffs| {
        coeffs.into_iter().enumerate().fold(ScalarExpr::int(1), |acc, (j, a)| {
            acc + ScalarExpr::rational(a) * ScalarExpr::t().powi(j as i32 + 1)
        })
    })
}

fn factor() -> impl Strategy<Value = FactorSpace> {
    (1u32..=4, -3i64..=3, 1i64..=3).prop_map(|(d, p, q)| {
        FactorSpace::new(d, Rational::new(p.into(), q.into()), 1.0 + f64::from(d), format!("F{d}")).unwrap()
    })
}

/// Random multiply warped metrics on `[−1/2, 1/2]`; about a third of the
/// warps are given in coefficient form `c = f²`.
pub fn random_metric() -> impl Strategy<Value = WarpedMetric> {
    prop::collection::vec((factor(), polynomial_warp(), any::<bool>(), 0u8..3), 1..=3).prop_map(|parts| {
        let (factors, warps): (Vec<_>, Vec<_>) = parts
            .into_iter()
            .map(|(f, w, _, kind)| {
                let spec = if kind == 0 { WarpSpec::Coefficient(w) } else { WarpSpec::Function(w) };
                (f, spec)
            })
            .unzip();
        WarpedMetric::new(factors, warps, 0.5).unwrap()
    })
}
