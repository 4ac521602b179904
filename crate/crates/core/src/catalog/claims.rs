use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::geometry::{LeafJets, LeafReport, WarpedMetric};
use crate::series::{rational_to_f64, Jet, Rational, Vanishing};

use super::sigma::{HypothesisItem, Status};

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "PAPER")]
    Paper,
    #[serde(rename = "DERIVED")]
    Derived,
    #[serde(rename = "TRIVIAL")]
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Paper => "PAPER",
            Provenance::Derived => "DERIVED",
            Provenance::Trivial => "TRIVIAL",
        })
    }
}

/// Leaf quantity a claim is about. The two shifted variants subtract the
/// central value `S₀` or the constant `1` so that expansions start at their
/// first nontrivial term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    MeanCurvature,
    BNormSq,
    RicNormal,
    SLeaf,
    SAmbient,
    SAmbientMinusS0,
    AreaRatioMinus1,
    /// Absolute leaf area; float only.
    LeafArea,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::MeanCurvature => "H",
            Quantity::BNormSq => "B2",
            Quantity::RicNormal => "RicNN",
            Quantity::SLeaf => "S_leaf",
            Quantity::SAmbient => "S_ambient",
            Quantity::SAmbientMinusS0 => "S_ambient_minus_S0",
            Quantity::AreaRatioMinus1 => "area_ratio_minus_1",
            Quantity::LeafArea => "leaf_area",
        }
    }

    /// Jet of the quantity, or `None` for float-only quantities.
    pub fn jet(self, jets: &LeafJets, s0: &Rational) -> Option<Jet> {
        Some(match self {
            Quantity::MeanCurvature => jets.mean_curvature.clone(),
            Quantity::BNormSq => jets.b_norm_sq.clone(),
            Quantity::RicNormal => jets.ric_normal.clone(),
            Quantity::SLeaf => jets.s_leaf.clone(),
            Quantity::SAmbient => jets.s_ambient.clone(),
            Quantity::SAmbientMinusS0 => jets.s_ambient.add_constant(&-s0),
            Quantity::AreaRatioMinus1 => jets.area_ratio.add_constant(&-Rational::from_integer(1.into())),
            Quantity::LeafArea => return None,
        })
    }

    pub fn of_report(self, report: &LeafReport, s0: f64, central_area: f64) -> f64 {
        match self {
            Quantity::MeanCurvature => report.mean_curvature,
            Quantity::BNormSq => report.b_norm_sq,
            Quantity::RicNormal => report.ric_normal,
            Quantity::SLeaf => report.s_leaf,
            Quantity::SAmbient => report.s_ambient,
            Quantity::SAmbientMinusS0 => report.s_ambient - s0,
            Quantity::AreaRatioMinus1 => report.area_ratio - 1.0,
            Quantity::LeafArea => report.area_ratio * central_area,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

/// Exact statements about the jet of a quantity at `t = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesTest {
    VanishingOrder(usize),
    LeadingSign(Sign),
    LeadingTerm { order: usize, coeff: Rational },
    /// A leading term whose published coefficient differs from the computed
    /// one; passes on the computed value and reports both.
    DisputedLeadingTerm { order: usize, stated: Rational, derived: Rational },
    /// Coefficients `0..=through` equal the given sparse polynomial.
    Matches { terms: Vec<(usize, Rational)>, through: usize },
    IdenticallyZero,
}

/// Sign or monotonicity statements checked on a sampled window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowTest {
    /// `≥ 0` on `[−w, w]`.
    Nonneg,
    /// `≤ 0` on `[−w, w]`.
    Nonpos,
    /// `> 0` on `[−w, w]`.
    Positive,
    /// `> 0` on `(0, w]`.
    PositiveRight,
    /// Strictly increasing in `|t|` on `[−w, w]`.
    StrictlyIncreasingInAbsT,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    Series { quantity: Quantity, test: SeriesTest },
    Window { quantity: Quantity, test: WindowTest, t_max: f64 },
    Value { quantity: Quantity, t: f64, expected: f64, rel_tol: f64 },
    Hypothesis { item: HypothesisItem, expected: Status },
    /// Sign of σ(Σ) − S₀·A^{2/m} with the leaf area scaled by `area_scale`.
    EqualityGap { area_scale: f64, expect_zero: bool },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedClaim {
    pub check: Check,
    pub provenance: Provenance,
    /// Short description of the statement the expected value comes from.
    pub anchor: String,
}

impl ExpectedClaim {
    pub fn new(check: Check, provenance: Provenance, anchor: impl Into<String>) -> Self {
        ExpectedClaim { check, provenance, anchor: anchor.into() }
    }

    pub fn label(&self) -> String {
        match &self.check {
            Check::Series { quantity, test } => {
                let what = match test {
                    SeriesTest::VanishingOrder(_) => "vanishing order",
                    SeriesTest::LeadingSign(_) => "leading sign",
                    SeriesTest::LeadingTerm { .. } => "leading term",
                    SeriesTest::DisputedLeadingTerm { .. } => "leading coefficient",
                    SeriesTest::Matches { .. } => "jet",
                    SeriesTest::IdenticallyZero => "identically zero",
                };
                format!("{} {what}", quantity.name())
            }
            Check::Window { quantity, test, .. } => {
                let what = match test {
                    WindowTest::Nonneg => "nonnegative on window",
                    WindowTest::Nonpos => "nonpositive on window",
                    WindowTest::Positive => "positive on window",
                    WindowTest::PositiveRight => "positive for t > 0",
                    WindowTest::StrictlyIncreasingInAbsT => "increasing in |t|",
                };
                format!("{} {what}", quantity.name())
            }
            Check::Value { quantity, t, .. } => format!("{} at t = {t}", quantity.name()),
            Check::Hypothesis { item, .. } => format!("hypothesis {item}"),
            Check::EqualityGap { area_scale, .. } => format!("equality gap at area x{area_scale}"),
        }
    }
}

/// Numerical settings shared by every claim of a verification run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClaimSettings {
    pub order: usize,
    pub grid: usize,
    /// Absolute tolerance for sign tests near zero.
    pub abs_tol: f64,
    /// Relative tolerance for float comparisons.
    pub rel_tol: f64,
}

impl Default for ClaimSettings {
    fn default() -> Self {
        ClaimSettings { order: crate::series::DEFAULT_ORDER, grid: 1001, abs_tol: 1e-12, rel_tol: 1e-10 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClaimOutcome {
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl ClaimOutcome {
    pub(crate) fn new(expected: impl Into<String>, computed: impl Into<String>, pass: bool) -> Self {
        ClaimOutcome { expected: expected.into(), computed: computed.into(), pass }
    }
}

fn term(order: usize, coeff: &Rational) -> String {
    match order {
        0 => format!("{coeff}"),
        1 => format!("{coeff}*t"),
        _ => format!("{coeff}*t^{order}"),
    }
}

fn describe_vanishing(v: &Vanishing, order: usize) -> String {
    match v {
        Vanishing::Saturated => format!("0 through t^{order}"),
        Vanishing::At { index, leading } => term(*index, leading),
    }
}

pub(crate) fn evaluate_series(jet: &Jet, test: &SeriesTest) -> ClaimOutcome {
    let v = jet.vanishing_order();
    let shown = describe_vanishing(&v, jet.order());
    match test {
        SeriesTest::VanishingOrder(k) => ClaimOutcome::new(
            format!("order {k}"),
            v.index().map_or(format!("zero through t^{}", jet.order()), |i| format!("order {i}")),
            v.index() == Some(*k),
        ),
        SeriesTest::LeadingSign(sign) => {
            let ok = match (sign, v.leading()) {
                (Sign::Positive, Some(c)) => c.is_positive(),
                (Sign::Negative, Some(c)) => c.is_negative(),
                (_, None) => false,
            };
            let expected = match sign {
                Sign::Positive => "positive leading coefficient",
                Sign::Negative => "negative leading coefficient",
            };
            ClaimOutcome::new(expected, shown, ok)
        }
        SeriesTest::LeadingTerm { order, coeff } => ClaimOutcome::new(
            term(*order, coeff),
            shown,
            v.index() == Some(*order) && v.leading() == Some(coeff),
        ),
        SeriesTest::DisputedLeadingTerm { order, stated, derived } => ClaimOutcome::new(
            format!("stated {} [{}]; derived {} [{}]", term(*order, stated), Provenance::Paper, term(*order, derived), Provenance::Derived),
            shown,
            v.index() == Some(*order) && v.leading() == Some(derived),
        ),
        SeriesTest::Matches { terms, through } => {
            let mut expected = vec![Rational::zero(); through + 1];
            for (i, c) in terms {
                if *i <= *through {
                    expected[*i] = c.clone();
                }
            }
            let expected = Jet::from_coeffs(expected);
            let available = jet.order() >= *through;
            let computed = jet.truncate((*through).min(jet.order()));
            ClaimOutcome::new(expected.to_string(), computed.to_string(), available && computed == expected)
        }
        SeriesTest::IdenticallyZero => ClaimOutcome::new(
            format!("0 + O(t^{})", jet.order() + 1),
            shown.clone(),
            jet.is_zero(),
        ),
    }
}

/// Samples a quantity on `points` with a float/jet hybrid: near `t = 0`,
/// where float evaluation of a small quantity is dominated by cancellation,
/// the jet value is used if its truncation tail is negligible there.
pub(crate) fn sample_quantity(
    metric: &WarpedMetric,
    quantity: Quantity,
    jet: Option<&Jet>,
    s0: &Rational,
    points: &[f64],
) -> Result<Vec<f64>, String> {
    let s0f = rational_to_f64(s0);
    let area0 = metric.central_area();
    points
        .iter()
        .map(|&t| {
            let report = metric.leaf_report(t).map_err(|e| e.to_string())?;
            let float = quantity.of_report(&report, s0f, area0);
            if let Some(j) = jet {
                if float.abs() < 1e-10 {
                    let value = j.eval_f64(t);
                    if j.tail_magnitude(t, 4) <= 1e-3 * value.abs() || j.is_zero() {
                        return Ok(value);
                    }
                }
            }
            Ok(float)
        })
        .collect()
}

pub(crate) fn window_points(t_max: f64, grid: usize) -> Vec<f64> {
    crate::geometry::symmetric_grid(t_max, grid)
}

pub(crate) fn evaluate_window(
    metric: &WarpedMetric,
    quantity: Quantity,
    jet: Option<&Jet>,
    s0: &Rational,
    test: WindowTest,
    t_max: f64,
    settings: &ClaimSettings,
) -> ClaimOutcome {
    let t_max = t_max.min(metric.half_width());
    let points = window_points(t_max, settings.grid);
    let values = match sample_quantity(metric, quantity, jet, s0, &points) {
        Ok(v) => v,
        Err(e) => return ClaimOutcome::new(window_expectation(test, t_max), format!("evaluation failed: {e}"), false),
    };
    let tol = settings.abs_tol;
    let expected = window_expectation(test, t_max);
    let witness = |pred: &dyn Fn(f64, f64) -> bool| {
        points.iter().zip(&values).find(|(&t, &v)| !pred(t, v)).map(|(&t, &v)| (t, v))
    };
    let extreme = |take_min: bool| {
        points
            .iter()
            .zip(&values)
            .filter(|(&t, _)| !(test == WindowTest::PositiveRight && t <= 0.0))
            .fold(None::<(f64, f64)>, |acc, (&t, &v)| match acc {
                Some((_, best)) if (take_min && v >= best) || (!take_min && v <= best) => acc,
                _ => Some((t, v)),
            })
    };
    let show = |label: &str, found: Option<(f64, f64)>| match found {
        Some((t, v)) => format!("{label} {v:.6e} at t = {t:.6}"),
        None => "no samples".to_string(),
    };
    match test {
        WindowTest::Nonneg => {
            let bad = witness(&|_, v| v >= -tol);
            ClaimOutcome::new(expected, show(if bad.is_some() { "violated:" } else { "min" }, bad.or(extreme(true))), bad.is_none())
        }
        WindowTest::Nonpos => {
            let bad = witness(&|_, v| v <= tol);
            ClaimOutcome::new(expected, show(if bad.is_some() { "violated:" } else { "max" }, bad.or(extreme(false))), bad.is_none())
        }
        WindowTest::Positive => {
            let bad = witness(&|_, v| v > 0.0);
            ClaimOutcome::new(expected, show(if bad.is_some() { "violated:" } else { "min" }, bad.or(extreme(true))), bad.is_none())
        }
        WindowTest::PositiveRight => {
            let bad = witness(&|t, v| t <= 0.0 || v > 0.0);
            ClaimOutcome::new(expected, show(if bad.is_some() { "violated:" } else { "min" }, bad.or(extreme(true))), bad.is_none())
        }
        WindowTest::StrictlyIncreasingInAbsT => {
            let mut bad = None;
            for side in [1.0_f64, -1.0] {
                let mut ordered: Vec<(f64, f64)> =
                    points.iter().zip(&values).filter(|(&t, _)| t * side >= 0.0).map(|(&t, &v)| (t, v)).collect();
                ordered.sort_by(|a, b| a.0.abs().total_cmp(&b.0.abs()));
                if let Some(w) = ordered.windows(2).find(|w| w[1].1 <= w[0].1) {
                    bad = Some(w[1]);
                    break;
                }
            }
            let computed = match bad {
                Some((t, v)) => format!("not increasing at t = {t:.6} (value {v:.6e})"),
                None => format!("increasing over {} samples", points.len()),
            };
            ClaimOutcome::new(expected, computed, bad.is_none())
        }
    }
}

fn window_expectation(test: WindowTest, t_max: f64) -> String {
    match test {
        WindowTest::Nonneg => format!(">= 0 on |t| <= {t_max:.4}"),
        WindowTest::Nonpos => format!("<= 0 on |t| <= {t_max:.4}"),
        WindowTest::Positive => format!("> 0 on |t| <= {t_max:.4}"),
        WindowTest::PositiveRight => format!("> 0 on 0 < t <= {t_max:.4}"),
        WindowTest::StrictlyIncreasingInAbsT => format!("strictly increasing in |t| on |t| <= {t_max:.4}"),
    }
}
