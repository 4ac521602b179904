use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_traits::Signed;

use super::claims::{Check, ExpectedClaim, Provenance, Quantity, SeriesTest, Sign, WindowTest};
use super::sigma::{HypothesisItem, Status};
use super::{CatalogEntry, CatalogError};
use crate::geometry::{FactorSpace, WarpSpec, WarpedMetric};
use crate::series::{Rational, DEFAULT_ORDER};

/// Volume of the Weeks manifold, the smallest closed hyperbolic 3-manifold.
pub const WEEKS_VOLUME: f64 = 0.942_707_362_776_927_7;

/// Default half-width of catalog metrics.
pub const DEFAULT_HALF_WIDTH: f64 = 0.1;

const INTRO_HALF_WIDTH: f64 = 0.25;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn poly(text: &str) -> WarpSpec {
    WarpSpec::function(text).expect("catalog warp text parses")
}

/// Closed hyperbolic manifold of the given dimension: a genus-two surface,
/// the Weeks manifold, or a nominal unit volume above dimension three.
fn hyperbolic_factor(dim: u32) -> FactorSpace {
    let (volume, label) = match dim {
        2 => (4.0 * PI, "N^2 (genus 2)".to_string()),
        3 => (WEEKS_VOLUME, "N^3 (Weeks)".to_string()),
        d => (1.0, format!("N^{d} (nominal volume)")),
    };
    FactorSpace::hyperbolic(dim, volume, label).expect("hyperbolic factor data is valid")
}

fn flat_torus(dim: u32) -> FactorSpace {
    FactorSpace::flat(dim, (2.0 * PI).powi(dim as i32), format!("T^{dim}")).expect("flat torus data is valid")
}

fn claim(check: Check, provenance: Provenance, anchor: &str) -> ExpectedClaim {
    ExpectedClaim::new(check, provenance, anchor)
}

fn series(quantity: Quantity, test: SeriesTest, provenance: Provenance, anchor: &str) -> ExpectedClaim {
    claim(Check::Series { quantity, test }, provenance, anchor)
}

fn window(quantity: Quantity, test: WindowTest, t_max: f64, provenance: Provenance, anchor: &str) -> ExpectedClaim {
    claim(Check::Window { quantity, test, t_max }, provenance, anchor)
}

fn hypothesis(item: HypothesisItem, expected: Status, provenance: Provenance, anchor: &str) -> ExpectedClaim {
    claim(Check::Hypothesis { item, expected }, provenance, anchor)
}

fn lead(order: usize, coeff: i64) -> SeriesTest {
    SeriesTest::LeadingTerm { order, coeff: r(coeff) }
}

/// Largest half-width up to `cap` on which the two leading terms
/// `a₄t⁴ + a₆t⁶` of `S^M − S₀` keep the sign of `a₄`, with a 10% margin.
fn sign_safe_half_width(factors: &[FactorSpace], warps: &[WarpSpec], cap: f64) -> Result<f64, CatalogError> {
    let probe = WarpedMetric::new(factors.to_vec(), warps.to_vec(), cap)?;
    let jets = probe.jets(6)?;
    let s = &jets.s_ambient;
    let (a4, a6) = (s.coeff(4).cloned().unwrap_or_default(), s.coeff(6).cloned().unwrap_or_default());
    if a4.is_positive() && a6.is_negative() {
        let ratio = crate::series::rational_to_f64(&(a4 / -a6));
        Ok(cap.min(0.9 * ratio.sqrt()))
    } else {
        Ok(cap)
    }
}

fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// The doubly warped examples with prescribed central scalar curvature:
/// case 1 positive, case 2 negative, case 3 zero.
pub fn build_case(case: u8, n: u32) -> Result<CatalogEntry, CatalogError> {
    build_case_on(case, n, None)
}

/// [`build_case`] with an explicit half-width instead of the sign-safe default.
pub fn build_case_on(case: u8, n: u32, half_width: Option<f64>) -> Result<CatalogEntry, CatalogError> {
    let min_n = match case {
        1 | 2 => 4,
        3 => 5,
        _ => return Err(CatalogError::UnknownCase(case)),
    };
    if n < min_n || n > 12 {
        return Err(CatalogError::UnsupportedDimension { case, n });
    }
    let ni = i64::from(n);
    let (factors, warps) = match case {
        1 => (
            vec![FactorSpace::unit_sphere(2), flat_torus(n - 3)],
            vec![poly(&format!("(1 + {}*t^4)^-1", ni - 3)), poly("1 + 2*t^4 + 2*t^8")],
        ),
        2 => (
            vec![hyperbolic_factor(n - 2), FactorSpace::circle(2.0 * PI)?],
            vec![poly("1 + t^4 + t^8"), poly(&format!("(1 + {}*t^4)^-1", ni - 2))],
        ),
        _ => {
            // k₂ = 1/r² with r² = 2/((n−3)(n−4))
            let k2 = Rational::new(((ni - 3) * (ni - 4)).into(), 2.into());
            (
                vec![hyperbolic_factor(n - 3), FactorSpace::round_sphere(2, k2, "S^2(r)")?],
                vec![poly("1 + 2*t^4 + 2*t^8"), poly(&format!("(1 + {}*t^4)^-1", ni - 3))],
            )
        }
    };
    let eps = match half_width {
        Some(e) => e,
        None => sign_safe_half_width(&factors, &warps, DEFAULT_HALF_WIDTH)?,
    };
    let metric = WarpedMetric::new(factors, warps, eps)?;
    let w = eps.min(DEFAULT_HALF_WIDTH);
    let expected = match case {
        1 => case1_claims(ni, w),
        2 => case2_claims(ni, w),
        _ => case3_claims(ni, w),
    };
    Ok(CatalogEntry::new(
        format!("case{case}_n{n}"),
        format!("case{case}"),
        metric,
        params(&[("n", ni)]),
        expected,
    ))
}

/// Exact Case 1 coefficients from the pre-build series oracle, keyed by n.
fn case1_table(n: i64) -> Option<(i64, i64)> {
    // (Ric t^6 coefficient, S^M t^6 coefficient)
    match n {
        4 => Some((-152, -208)),
        5 => Some((-480, -704)),
        6 => Some((-984, -1488)),
        _ => None,
    }
}

fn case1_claims(n: i64, w: f64) -> Vec<ExpectedClaim> {
    use Provenance::*;
    use Quantity::*;
    let d = n - 3;
    let mut c = vec![
        series(MeanCurvature, SeriesTest::VanishingOrder(7), Paper, "mean curvature of the leaves, leading power t^7"),
        series(MeanCurvature, SeriesTest::LeadingSign(Sign::Positive), Paper, "positive mean curvature for t > 0"),
        series(
            MeanCurvature,
            SeriesTest::DisputedLeadingTerm { order: 7, stated: r(16 * d * d), derived: r(8 * d * d) },
            Derived,
            "stated leading coefficient 16(n-3)^2 against exact expansion",
        ),
        window(MeanCurvature, WindowTest::PositiveRight, w, Paper, "leaves have positive mean curvature for t > 0"),
        series(RicNormal, SeriesTest::VanishingOrder(6), Paper, "normal Ricci numerator -c(n) t^6"),
        series(RicNormal, SeriesTest::LeadingSign(Sign::Negative), Paper, "c(n) is a positive integer"),
        series(SAmbientMinusS0, lead(4, 4 * d), Paper, "S^M - S_0 = 4(n-3) t^4 + O(t^6)"),
        window(SAmbientMinusS0, WindowTest::Nonneg, w, Paper, "S^M >= S_0 for small epsilon"),
        series(AreaRatioMinus1, SeriesTest::VanishingOrder(8), Paper, "area element expansion, first correction t^8"),
        series(AreaRatioMinus1, lead(8, d * d), Paper, "area element correction (n-3)^2 t^8"),
        window(AreaRatioMinus1, WindowTest::StrictlyIncreasingInAbsT, w, Paper, "central leaf has least area among leaves"),
        series(SLeaf, SeriesTest::Matches { terms: vec![(0, r(2))], through: 0 }, Paper, "S_1 = 2 for the unit sphere factor"),
        hypothesis(HypothesisItem::TotallyGeodesic, Status::Holds, Paper, "Weingarten map vanishes at t = 0"),
        hypothesis(HypothesisItem::NormalRicciVanishes, Status::Holds, Paper, "normal Ricci vanishes at t = 0"),
        hypothesis(HypothesisItem::ScalarAtInfimum, Status::Holds, Paper, "S^M = S_0 at t = 0"),
        hypothesis(HypothesisItem::RealisesSigma, Status::Fails, Derived, "product leaf is not Einstein"),
    ];
    if let Some((ric6, s6)) = case1_table(n) {
        c.push(series(RicNormal, lead(6, ric6), Derived, "exact normal Ricci expansion"));
        c.push(series(
            SAmbientMinusS0,
            SeriesTest::Matches { terms: vec![(4, r(4 * d)), (6, r(s6))], through: 6 },
            Derived,
            "exact scalar curvature expansion through t^6",
        ));
    }
    c
}

fn case2_claims(n: i64, w: f64) -> Vec<ExpectedClaim> {
    use Provenance::*;
    use Quantity::*;
    let s0 = -(n - 2) * (n - 3);
    let mut c = vec![
        series(SAmbient, SeriesTest::Matches { terms: vec![(0, r(s0))], through: 0 }, Derived, "Gauss equation at a totally geodesic leaf"),
        series(RicNormal, SeriesTest::VanishingOrder(6), Derived, "exact normal Ricci expansion"),
        window(RicNormal, WindowTest::Nonpos, w, Derived, "normal Ricci sign near the central leaf"),
        series(SAmbientMinusS0, lead(4, 2 * (n - 2) * (n - 3)), Derived, "exact scalar curvature expansion"),
        window(SAmbientMinusS0, WindowTest::Nonneg, w, Derived, "S^M >= S_0 near the central leaf"),
        series(MeanCurvature, SeriesTest::VanishingOrder(7), Derived, "exact mean curvature expansion"),
        window(MeanCurvature, WindowTest::PositiveRight, w, Derived, "mean curvature positive for t > 0"),
        window(AreaRatioMinus1, WindowTest::StrictlyIncreasingInAbsT, w, Derived, "leaf area increases away from the central leaf"),
        hypothesis(HypothesisItem::TotallyGeodesic, Status::Holds, Derived, "warp derivatives vanish at t = 0"),
        hypothesis(HypothesisItem::NormalRicciVanishes, Status::Holds, Derived, "normal Ricci vanishes at t = 0"),
        hypothesis(HypothesisItem::ScalarAtInfimum, Status::Holds, Derived, "S^M minimal on the central leaf"),
    ];
    if n == 4 {
        c.push(hypothesis(
            HypothesisItem::RealisesSigma,
            Status::Fails,
            Paper,
            "hyperbolic surface times circle: product metric does not realise sigma",
        ));
        c.push(series(MeanCurvature, lead(7, 24), Derived, "exact mean curvature expansion"));
        c.push(series(RicNormal, lead(6, -264), Derived, "exact normal Ricci expansion"));
    } else {
        c.push(hypothesis(HypothesisItem::RealisesSigma, Status::Fails, Derived, "product leaf is not Einstein"));
        if n == 5 {
            c.push(series(MeanCurvature, lead(7, 48), Derived, "exact mean curvature expansion"));
            c.push(series(RicNormal, lead(6, -528), Derived, "exact normal Ricci expansion"));
        }
    }
    c
}

fn case3_claims(n: i64, w: f64) -> Vec<ExpectedClaim> {
    use Provenance::*;
    use Quantity::*;
    let mut c = vec![
        series(SAmbient, SeriesTest::Matches { terms: vec![], through: 0 }, Paper, "S_1 = -(n-3)(n-4), S_2 = (n-3)(n-4) on the central leaf"),
        series(RicNormal, SeriesTest::VanishingOrder(6), Derived, "exact normal Ricci expansion"),
        window(RicNormal, WindowTest::Nonpos, w, Derived, "normal Ricci sign near the central leaf"),
        series(SAmbientMinusS0, lead(4, 2 * (n - 1) * (n - 3) * (n - 4)), Derived, "exact scalar curvature expansion"),
        window(SAmbientMinusS0, WindowTest::Nonneg, w, Derived, "S^M >= S_0 near the central leaf"),
        series(MeanCurvature, SeriesTest::VanishingOrder(7), Derived, "exact mean curvature expansion"),
        window(MeanCurvature, WindowTest::PositiveRight, w, Derived, "mean curvature positive for t > 0"),
        series(AreaRatioMinus1, lead(8, (n - 3) * (n - 3)), Derived, "exact area expansion"),
        window(AreaRatioMinus1, WindowTest::StrictlyIncreasingInAbsT, w, Derived, "leaf area increases away from the central leaf"),
        hypothesis(HypothesisItem::TotallyGeodesic, Status::Holds, Derived, "warp derivatives vanish at t = 0"),
        hypothesis(HypothesisItem::NormalRicciVanishes, Status::Holds, Derived, "normal Ricci vanishes at t = 0"),
        hypothesis(HypothesisItem::ScalarAtInfimum, Status::Holds, Derived, "S^M minimal on the central leaf"),
        hypothesis(HypothesisItem::RealisesSigma, Status::Fails, Derived, "product leaf is not Einstein"),
    ];
    if n == 5 {
        c.push(series(
            SLeaf,
            SeriesTest::Matches { terms: vec![(0, r(0)), (4, r(16))], through: 4 },
            Paper,
            "S_1 = -2, S_2 = 2 when r = 1",
        ));
    }
    c
}

/// Flat-leaved 3-torus `f²ds₁² + f⁻²ds₂² + dt²` with `f = 1 + t^{2k}`.
pub fn build_torus3(k: u32) -> Result<CatalogEntry, CatalogError> {
    if k == 0 || k > 3 {
        return Err(CatalogError::InvalidParams(format!("torus exponent k = {k} must be in 1..=3")));
    }
    let f = format!("1 + t^{}", 2 * k);
    let metric = WarpedMetric::new(
        vec![FactorSpace::circle(2.0 * PI)?, FactorSpace::circle(2.0 * PI)?],
        vec![poly(&f), poly(&format!("(1 + t^{})^(-1)", 2 * k))],
        DEFAULT_HALF_WIDTH,
    )?;
    let ki = i64::from(k);
    let ric_order = (4 * k - 2) as usize;
    use Provenance::*;
    use Quantity::*;
    let expected = vec![
        series(MeanCurvature, SeriesTest::IdenticallyZero, Paper, "foliated by minimal 2-tori"),
        series(SLeaf, SeriesTest::IdenticallyZero, Paper, "leaves are flat"),
        series(AreaRatioMinus1, SeriesTest::IdenticallyZero, Paper, "all leaves have equal area"),
        series(RicNormal, SeriesTest::VanishingOrder(ric_order), Paper, "normal Ricci of order t^(4k-2)"),
        series(RicNormal, lead(ric_order, -8 * ki * ki), Derived, "closed form -2 f'^2 / f^2"),
        hypothesis(HypothesisItem::TotallyGeodesic, Status::Holds, Derived, "f'(0) = 0"),
        hypothesis(HypothesisItem::ScalarAtInfimum, Status::Fails, Derived, "S^M = Ric < 0 away from t = 0"),
        hypothesis(HypothesisItem::RealisesSigma, Status::Holds, Paper, "flat torus realises sigma = 0"),
    ];
    Ok(CatalogEntry::new(format!("torus3_k{k}"), "torus3", metric, params(&[("k", ki)]), expected))
}

/// Perturbed 3-torus `(f + t^{2m})²ds₁² + f⁻²ds₂² + dt²`, `f = 1 + t^{2k}`.
pub fn build_perturbed_torus(k: u32, m: u32) -> Result<CatalogEntry, CatalogError> {
    if k == 0 || m <= k || 2 * m > DEFAULT_ORDER as u32 {
        return Err(CatalogError::InvalidParams(format!("perturbed torus needs 1 <= k < m <= 8, got k = {k}, m = {m}")));
    }
    let metric = WarpedMetric::new(
        vec![FactorSpace::circle(2.0 * PI)?, FactorSpace::circle(2.0 * PI)?],
        vec![poly(&format!("1 + t^{} + t^{}", 2 * k, 2 * m)), poly(&format!("(1 + t^{})^(-1)", 2 * k))],
        DEFAULT_HALF_WIDTH,
    )?;
    let ric_order = (2 * m - 2).min(4 * k - 2) as usize;
    let ric_provenance = if m >= 2 * k { Provenance::Paper } else { Provenance::Derived };
    use Quantity::*;
    let expected = vec![
        series(RicNormal, SeriesTest::VanishingOrder(ric_order), ric_provenance, "normal Ricci order min(2m-2, 4k-2)"),
        series(AreaRatioMinus1, SeriesTest::VanishingOrder(2 * m as usize), Provenance::Paper, "leaf area grows like t^(2m)"),
        series(AreaRatioMinus1, SeriesTest::LeadingSign(Sign::Positive), Provenance::Paper, "leaf area grows like t^(2m)"),
        series(SLeaf, SeriesTest::IdenticallyZero, Provenance::Trivial, "flat factors"),
    ];
    Ok(CatalogEntry::new(
        format!("perturbed_torus_k{k}_m{m}"),
        "perturbed_torus",
        metric,
        params(&[("k", i64::from(k)), ("m", i64::from(m))]),
        expected,
    ))
}

fn unit_s2_with_coefficient(coeff: &str) -> Result<WarpedMetric, CatalogError> {
    Ok(WarpedMetric::new(
        vec![FactorSpace::unit_sphere(2)],
        vec![WarpSpec::coefficient(coeff).expect("catalog coefficient parses")],
        INTRO_HALF_WIDTH,
    )?)
}

/// Round `S²` with metric `(1 + t^{2k}) g + dt²`.
pub fn build_intro_sphere(k: u32) -> Result<CatalogEntry, CatalogError> {
    if k == 0 || k > 8 {
        return Err(CatalogError::InvalidParams(format!("sphere exponent k = {k} must be in 1..=8")));
    }
    let metric = unit_s2_with_coefficient(&format!("1 + t^{}", 2 * k))?;
    use Provenance::*;
    use Quantity::*;
    let mut expected = vec![
        window(RicNormal, WindowTest::Nonpos, INTRO_HALF_WIDTH, Paper, "normal Ricci curvature is non-positive"),
        hypothesis(HypothesisItem::TotallyGeodesic, Status::Holds, Derived, "c'(0) = 0"),
    ];
    if k == 1 {
        expected.push(series(SAmbient, SeriesTest::Matches { terms: vec![(0, r(-2))], through: 0 }, Derived, "2/c - 2c''/c + c'^2/(2c^2) at 0"));
        expected.push(series(RicNormal, SeriesTest::Matches { terms: vec![(0, r(-2))], through: 0 }, Derived, "-2/(1+t^2)^2 at 0"));
    } else {
        expected.push(series(SAmbient, SeriesTest::Matches { terms: vec![(0, r(2))], through: 0 }, Derived, "leaf curvature dominates at 0"));
        expected.push(window(SAmbient, WindowTest::Positive, INTRO_HALF_WIDTH, Derived, "positive scalar curvature for large k"));
    }
    Ok(CatalogEntry::new(format!("intro_sphere_k{k}"), "intro_sphere", metric, params(&[("k", i64::from(k))]), expected))
}

/// Round `S²` with metric `(1 + t⁴) ds² + dt²`.
pub fn build_mm_sphere() -> Result<CatalogEntry, CatalogError> {
    let metric = unit_s2_with_coefficient("1 + t^4")?;
    use Provenance::*;
    use Quantity::*;
    let through = DEFAULT_ORDER;
    let expected = vec![
        window(SAmbient, WindowTest::Nonneg, INTRO_HALF_WIDTH, Paper, "satisfies S^M >= 0"),
        series(SAmbientMinusS0, lead(2, -24), Derived, "closed form 2/c - (24t^2 + 16t^6)/c^2"),
        series(AreaRatioMinus1, SeriesTest::Matches { terms: vec![(4, r(1))], through }, Paper, "A(Sigma_t) = (1 + t^4) A(Sigma)"),
        series(SAmbient, SeriesTest::Matches { terms: vec![(0, r(2))], through: 0 }, Derived, "closed form at t = 0"),
        series(RicNormal, SeriesTest::Matches { terms: vec![], through: 0 }, Derived, "closed form at t = 0"),
        series(MeanCurvature, SeriesTest::Matches { terms: vec![], through: 0 }, Derived, "closed form at t = 0"),
        hypothesis(HypothesisItem::TotallyGeodesic, Status::Holds, Paper, "central leaf totally geodesic"),
        hypothesis(HypothesisItem::NormalRicciVanishes, Status::Holds, Paper, "normal Ricci zero on central leaf"),
        hypothesis(HypothesisItem::ScalarAtInfimum, Status::Fails, Paper, "scalar curvature decreases away from the leaf"),
        hypothesis(HypothesisItem::RealisesSigma, Status::Holds, Derived, "round sphere realises sigma"),
    ];
    Ok(CatalogEntry::new("mm_sphere", "mm_sphere", metric, BTreeMap::new(), expected))
}


/// Product `S^{n−2} × S¹(ℓ) × [−ε, ε]` with all warps equal to one.
pub fn build_positive_sigma_example(n: u32, ell: u32) -> Result<CatalogEntry, CatalogError> {
    if n < 5 || n > 12 || ell == 0 {
        return Err(CatalogError::InvalidParams(format!("positive sigma example needs 5 <= n <= 12 and l > 0, got n = {n}, l = {ell}")));
    }
    let circle = FactorSpace::circle(2.0 * PI * f64::from(ell))?;
    let sphere = FactorSpace::unit_sphere(n - 2);
    let area = sphere.volume() * circle.volume();
    let metric = WarpedMetric::new(vec![sphere, circle], vec![WarpSpec::constant_one(), WarpSpec::constant_one()], DEFAULT_HALF_WIDTH)?;
    let ni = i64::from(n);
    let s0 = (ni - 2) * (ni - 3);
    use Provenance::*;
    use Quantity::*;
    let expected = vec![
        series(SAmbient, SeriesTest::Matches { terms: vec![(0, r(s0))], through: DEFAULT_ORDER }, Paper, "S^M = (n-2)(n-3) for all t"),
        series(MeanCurvature, SeriesTest::IdenticallyZero, Trivial, "product metric"),
        claim(
            Check::Value { quantity: LeafArea, t: 0.0, expected: area, rel_tol: 1e-12 },
            Trivial,
            "leaf area linear in l",
        ),
        hypothesis(HypothesisItem::TotallyGeodesic, Status::Holds, Trivial, "product metric"),
        hypothesis(HypothesisItem::NormalRicciVanishes, Status::Holds, Trivial, "product metric"),
        hypothesis(HypothesisItem::ScalarAtInfimum, Status::Holds, Trivial, "constant scalar curvature"),
        hypothesis(HypothesisItem::RealisesSigma, Status::Fails, Derived, "sphere times circle is not Einstein"),
    ];
    Ok(CatalogEntry::new(
        format!("positive_sigma_n{n}_l{ell}"),
        "positive_sigma",
        metric,
        params(&[("n", ni), ("l", i64::from(ell))]),
        expected,
    ))
}

/// Product of the Weeks manifold with an interval: the equality model.
pub fn build_hyperbolic_product() -> Result<CatalogEntry, CatalogError> {
    let metric = WarpedMetric::new(vec![hyperbolic_factor(3)], vec![WarpSpec::constant_one()], DEFAULT_HALF_WIDTH)?;
    use Provenance::*;
    use Quantity::*;
    let mut expected = vec![
        series(SAmbient, SeriesTest::Matches { terms: vec![(0, r(-6))], through: DEFAULT_ORDER }, Trivial, "S^M = -6 for the hyperbolic product"),
        series(MeanCurvature, SeriesTest::IdenticallyZero, Trivial, "product metric"),
        series(AreaRatioMinus1, SeriesTest::IdenticallyZero, Trivial, "product metric"),
        claim(Check::EqualityGap { area_scale: 1.0, expect_zero: true }, Paper, "S_0 A^(2/3) = sigma in the equality configuration"),
        claim(Check::EqualityGap { area_scale: 2.0, expect_zero: false }, Derived, "monotonicity of A^(2/3)"),
    ];
    for item in HypothesisItem::ALL {
        expected.push(hypothesis(item, Status::Holds, Paper, "hyperbolic leaf in a product meets every hypothesis"));
    }
    Ok(CatalogEntry::new("hyperbolic_product_n4", "hyperbolic_product", metric, params(&[("n", 4)]), expected))
}

/// The default catalog.
pub fn catalog_entries() -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out = Vec::new();
    for n in [4, 5, 6] {
        out.push(build_case(1, n)?);
    }
    for n in [4, 5] {
        out.push(build_case(2, n)?);
    }
    for n in [5, 6] {
        out.push(build_case(3, n)?);
    }
    for k in 1..=3 {
        out.push(build_torus3(k)?);
    }
    for (k, m) in [(2, 5), (1, 3), (2, 3), (2, 4), (1, 2)] {
        out.push(build_perturbed_torus(k, m)?);
    }
    out.push(build_intro_sphere(1)?);
    out.push(build_intro_sphere(2)?);
    out.push(build_mm_sphere()?);
    out.push(build_positive_sigma_example(5, 1)?);
    out.push(build_positive_sigma_example(5, 10)?);
    out.push(build_hyperbolic_product()?);
    Ok(out)
}
