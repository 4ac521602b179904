use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use warpcheck::catalog::catalog_entries;
use warpcheck::gronwall::{
    admissible_eps, c3, check_inequality, conclude_nonpositive, counterexample_search, from_metric, inequality_residuals,
    random_bump, refinement_drift, Conclusion, GronwallData, GronwallError, DEFAULT_TOL,
};

fn unit_data(h: impl Fn(f64) -> f64, eps: f64, points: usize) -> GronwallData {
    GronwallData::sample(eps, points, h, |_| 1.0, |_| 1.0, -2.0, 4).unwrap()
}

fn verdict(d: &GronwallData) -> Conclusion {
    let checked = check_inequality(d, DEFAULT_TOL);
    conclude_nonpositive(d, Some(&checked), DEFAULT_TOL).unwrap()
}

#[test]
fn closed_form_profiles() {
    assert!(verdict(&unit_data(|_| 0.0, 1.0, 401)).passed());
    assert!(verdict(&unit_data(|t| -t * t, 1.0, 401)).passed());

    let linear = unit_data(|t| t, 0.5, 401);
    let checked = check_inequality(&linear, DEFAULT_TOL);
    let first = checked.first_violation.clone().unwrap();
    assert_eq!(first.index, 0);
    assert_eq!(first.t, 0.0);
    assert!((first.value - 1.0).abs() < 1e-12);
    assert!(matches!(conclude_nonpositive(&linear, Some(&checked), DEFAULT_TOL).unwrap(), Conclusion::NotApplicable { .. }));

    // residual of -t^2 against its closed form -2t + 2t^3/9
    let quad = unit_data(|t| -t * t, 0.9, 2001);
    for (j, r) in inequality_residuals(&quad).iter().enumerate() {
        let t = quad.grid[j];
        assert!((r - (-2.0 * t + 2.0 * t.powi(3) / 9.0)).abs() < 2e-3, "{t}: {r}");
    }
}

#[test]
fn c3_examples() {
    let d = unit_data(|_| 0.0, 1.0, 11);
    assert!((c3(&d).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    let d = GronwallData::sample(1.0, 11, |_| 0.0, |_| 2.0, |_| 1.0, -6.0, 4).unwrap();
    assert!((c3(&d).unwrap() - 1.0).abs() < 1e-15);
    let flat = GronwallData::sample(1.0, 11, |_| 0.0, |_| 1.0, |_| 1.0, 0.0, 4).unwrap();
    assert_eq!(admissible_eps(&flat).unwrap(), f64::INFINITY);
}

fn template() -> GronwallData {
    let probe = unit_data(|_| 0.0, 1.0, 3);
    let eps = 0.5 * admissible_eps(&probe).unwrap();
    unit_data(|_| 0.0, eps, 201)
}

#[test]
fn positive_bumps_always_violate() {
    let t = template();
    for (trials, seed) in [(200, 7), (500, 2024)] {
        let report = counterexample_search(&t, trials, seed, DEFAULT_TOL).unwrap();
        assert!(report.all_violated(), "{report:?}");
        assert_eq!(report.violations_found, trials);
        assert!(report.eps < report.admissible_eps);
    }
}

#[test]
fn passing_random_profiles_are_nonpositive() {
    let t = template();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut passed = 0;
    for trial in 0..200 {
        let h: Vec<f64> = if trial % 2 == 0 {
            random_bump(&mut rng, &t.grid)
        } else {
            let (a, b, c) = (rng.gen_range(-0.2..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            t.grid.iter().map(|&s| -s * (a + b * s + c * s * s)).collect()
        };
        let d = t.with_h(h).unwrap();
        let checked = check_inequality(&d, DEFAULT_TOL);
        if checked.satisfied() {
            passed += 1;
            let max_h = d.h.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            assert!(max_h <= 1e-9, "trial {trial}: {max_h}");
            assert!(conclude_nonpositive(&d, Some(&checked), DEFAULT_TOL).unwrap().passed());
        }
    }
    assert!(passed > 20, "rejection sampling kept only {passed}");
}

#[test]
fn residuals_converge_under_refinement() {
    let drifts = refinement_drift(
        0.5,
        11,
        5,
        |t| -t * t + 0.3 * t.powi(3),
        |t| 1.0 + t,
        |t| 1.0 - t / 3.0,
        -2.0,
        4,
    )
    .unwrap();
    for w in drifts.windows(2) {
        assert!(w[1] <= 0.75 * w[0], "{drifts:?}");
    }
}

#[test]
fn conclusion_requires_the_checked_data() {
    let d = unit_data(|t| -t, 0.5, 51);
    assert_eq!(conclude_nonpositive(&d, None, DEFAULT_TOL), Err(GronwallError::PreconditionUnchecked));
    let other = unit_data(|t| -2.0 * t, 0.5, 51);
    let checked = check_inequality(&other, DEFAULT_TOL);
    assert_eq!(conclude_nonpositive(&d, Some(&checked), DEFAULT_TOL), Err(GronwallError::PreconditionUnchecked));
}

#[test]
fn json_input_round_trips() {
    let d = unit_data(|t| -t * t, 0.4, 9);
    let text = serde_json::to_string(&d).unwrap();
    assert!(text.contains("\"H\"") && text.contains("\"S0\"") && text.contains("\"C1\""));
    assert_eq!(GronwallData::from_json(&text).unwrap(), d);
    assert!(GronwallData::from_json(r#"{"grid":[0,1],"H":[1,0],"phi":[1,1],"xi":[1,1],"S0":-1,"n":4,"C1":1,"C2":1}"#).is_err());
}

#[test]
fn catalog_pipeline_passes_for_nonpositive_mean_curvature() {
    let mut checked = 0;
    for entry in catalog_entries().unwrap() {
        let s0 = warpcheck::series::rational_to_f64(&entry.s0(16).unwrap());
        if s0 > 0.0 {
            continue;
        }
        let data = from_metric(&entry.metric, s0, entry.metric.half_width(), 201).unwrap();
        if data.h.iter().any(|&h| h > 1e-12) || data.eps() >= admissible_eps(&data).unwrap() {
            continue;
        }
        checked += 1;
        assert!(verdict(&data).passed(), "{}", entry.name);
    }
    assert!(checked >= 4, "only {checked} catalog entries qualified");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn never_passes_with_large_mean_curvature(
        seed in any::<u64>(),
        s0 in -8.0f64..0.0,
        n in 3u32..9,
        eps in 0.01f64..3.0,
        scale in -1.0f64..1.0,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid: Vec<f64> = (0..101).map(|j| eps * j as f64 / 100.0).collect();
        let h: Vec<f64> = random_bump(&mut rng, &grid).into_iter().map(|v| scale * v).collect();
        let ones = vec![1.0; grid.len()];
        let d = GronwallData::new(grid, h, ones.clone(), ones, s0, n, 1.0, 1.0).unwrap();
        let checked = check_inequality(&d, DEFAULT_TOL);
        let conclusion = conclude_nonpositive(&d, Some(&checked), DEFAULT_TOL).unwrap();
        let max_h = d.h.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if max_h > DEFAULT_TOL * (1.0 + eps) {
            prop_assert!(!conclusion.passed());
        }
        if let Conclusion::Fail { witness } = &conclusion {
            prop_assert_eq!(witness.value, max_h);
        }
    }
}
