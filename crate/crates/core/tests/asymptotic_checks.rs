use blowup_core::asymptotics::*;
use blowup_core::profile::{build_profile, default_grid, ProfileInput};
use blowup_core::solver::{solve_sigma, DEFAULT_TOL};
use blowup_core::weber::v;
use blowup_core::{Error, QuadratureConfig, SpectralParams, C64};
use proptest::prelude::*;
use std::f64::consts::PI;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn loose() -> QuadratureConfig {
    QuadratureConfig::new(1e3, 4000, 1e-14, 1e-8).unwrap()
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn turning_params() {
    let h: f64 = 0.09;
    let t = TurningParams::new(2.0 / h.sqrt(), h, 0.1).unwrap();
    assert!((t.alpha_t - 1.0).abs() < 1e-15);
    assert!((t.x() - 2.0 / h.sqrt()).abs() < 1e-12);
}

#[test]
fn landscape_on_grids() {
    for &a in &[0.3, 0.7, 1.0, 1.3, 2.0] {
        assert!((landscape_f(a, PI / 2.0) - PI / 2.0).abs() < 1e-14);
        let thetas: Vec<f64> = (1..=400).map(|k| PI / 2.0 * k as f64 / 400.0).collect();
        let f: Vec<f64> = thetas.iter().map(|&t| landscape_f(a, t)).collect();
        if a >= 1.0 {
            assert!(f.windows(2).all(|w| w[1] <= w[0] + 1e-15));
        } else {
            let (k, _) = f.iter().enumerate().fold((0, f64::INFINITY), |acc, (i, &v)| if v < acc.1 { (i, v) } else { acc });
            assert!((thetas[k] - f64::asin(a)).abs() <= PI / 400.0);
        }
    }
    let s: Vec<f64> = (0..=200).map(|k| wkb_action(k as f64 / 200.0).unwrap()).collect();
    assert!(s.windows(2).all(|w| w[1] > w[0]));
    assert!((s[200] - PI / 2.0).abs() < 1e-15);
    let a = 1.0 / 2f64.sqrt();
    assert!((landscape_f(a, a.asin()) - (0.5 + PI / 4.0)).abs() < 1e-14);
}

#[test]
fn wkb_inner_properties() {
    assert!((wkb_inner_phi(0.0, 0.3).unwrap().re - 2f64.sqrt()).abs() < 1e-15);
    let h = 0.2;
    let vals: Vec<f64> = (0..=80).map(|k| wkb_inner_phi(k as f64 * 0.1, h).unwrap().re).collect();
    assert!(vals.windows(2).all(|w| w[1] < w[0]));
    assert!(matches!(wkb_inner_phi(10.0, h), Err(Error::Domain(_))));
}

#[test]
fn wkb_outer_properties() {
    let (h, sigma) = (0.15, 1e-8);
    let (x, dx) = (30.0, 1e-4);
    let a = wkb_outer_phi(x, h, sigma).unwrap();
    let b = wkb_outer_phi(2.0 * x, h, sigma).unwrap();
    assert!((b.norm() / a.norm() - 2f64.powf(sigma - 0.5)).abs() < 1e-12);
    let c = wkb_outer_phi(x + dx, h, sigma).unwrap();
    let dphase = (c / a).arg();
    assert!((dphase - (0.5 * x * dx - dx / (h * x))).abs() < 1e-6);
}

#[test]
fn wkb_against_profile() {
    let h = 0.15;
    let grid = default_grid(40.0, 20.0).unwrap();
    let sol = build_profile(ProfileInput::Rate { h, p: Some(3.0) }, &grid, &loose()).unwrap();
    let phi1 = sol.eta_at(1.0).unwrap().phi.norm();
    assert!((wkb_inner_phi(1.0, h).unwrap().re / phi1 - 1.0).abs() <= 0.10);
    // the outer constant needs an extra factor h^{σ/2−1/2}
    let phi30 = sol.eta_at(30.0).unwrap().phi.norm();
    let bare = wkb_outer_phi(30.0, h, sol.params.sigma()).unwrap().norm();
    assert!((bare / phi30 - 1.0).abs() > 0.15);
    let rescaled = bare * h.powf(0.5 * sol.params.sigma() - 0.5);
    assert!((rescaled / phi30 - 1.0).abs() <= 0.15);
}

#[test]
fn prefactor_chain_reproduces_v() {
    let (h, sigma) = (0.3, 0.2);
    let lambda = C64::new(-1.0 / h, -sigma);
    for &x in &[1.0, 2.5, 4.0] {
        let a = 0.5 * f64::sqrt(h) * x;
        let exact = v(x, lambda, &cfg()).unwrap();
        let from_direct = v_from_g(x, h, sigma, g_direct(a, 1.0 / h, sigma, &cfg()).unwrap()).unwrap();
        let from_split = v_from_g(x, h, sigma, g_split(a, 1.0 / h, sigma, &cfg()).unwrap()).unwrap();
        assert!(rel(from_direct, exact) < 1e-10);
        assert!(rel(from_split, exact) < 1e-10);
    }
}

#[test]
fn contour_split_where_direct_certifies() {
    for &(a, hi) in &[(0.3, 2.0), (0.5, 5.0), (0.8, 4.0), (1.2, 3.0), (2.0, 2.0)] {
        let d = g_direct(a, hi, 0.15, &cfg()).unwrap();
        let s = g_split(a, hi, 0.15, &cfg()).unwrap();
        assert!(rel(s, d) < 1e-10, "{a} {hi}");
    }
}

#[test]
fn direct_reports_cancellation() {
    assert!(matches!(g_direct(0.5, 40.0, 0.1, &cfg()), Err(Error::Tolerance { .. })));
}

#[test]
fn g_is_smooth_in_sigma() {
    let (a, hi, s, e) = (0.5, 5.0, 0.2, 1e-4);
    let g = |s: f64| g_direct(a, hi, s, &cfg()).unwrap();
    let d1 = (g(s + e) - g(s - e)) / (2.0 * e);
    let d2 = (g(s + 2.0 * e) - g(s - 2.0 * e)) / (4.0 * e);
    assert!((d1 - d2).norm() <= 1e-5 * d1.norm());
}

#[test]
fn stationary_errors_scale_with_h() {
    let sigma = 0.1;
    for (a, stat) in [(0.5, g2_stationary as fn(f64, f64, f64) -> _), (1.5, g3_stationary)] {
        let errs: Vec<f64> = [10.0, 20.0, 40.0]
            .iter()
            .map(|&hi| {
                let exact = g_split(a, hi, sigma, &cfg()).unwrap();
                rel(stat(a, hi, sigma).unwrap(), exact)
            })
            .collect();
        for w in errs.windows(2) {
            let r = w[1] / w[0];
            assert!((0.35..=0.7).contains(&r), "alpha={a}: {errs:?}");
        }
        assert!(errs[0] < 0.02);
    }
}

#[test]
fn stationary_domains() {
    assert!(g2_stationary(1.0, 10.0, 0.1).is_err());
    assert!(g3_stationary(1.0, 10.0, 0.1).is_err());
    let far = g3_far(20.0, 0.1).unwrap();
    let near = g3_stationary(1e4, 20.0, 0.1).unwrap();
    assert!(rel(near, far) < 1e-6);
}

fn exact_v(x: f64, h: f64, sigma: f64) -> C64 {
    let a = 0.5 * h.sqrt() * x;
    v_from_g(x, h, sigma, g_split(a, 1.0 / h, sigma, &cfg()).unwrap()).unwrap()
}

#[test]
fn turning_point_branches() {
    // outer: x = 5h^{−1/2}, h = 0.1
    let h: f64 = 0.1;
    let sigma = solve_sigma(h, DEFAULT_TOL).unwrap().value;
    let params = SpectralParams::new(5.0, sigma, h, 1.0).unwrap();
    let x = 5.0 / h.sqrt();
    let direct = v(x, params.lambda(), &loose()).unwrap();
    assert!(rel(exact_v(x, h, sigma), direct) < 1e-6);
    let asym = turning_asymp_v(x, &params).unwrap();
    assert!((asym.norm() / direct.norm() - 1.0).abs() <= 0.2);
    // the bare outer form omits e^{−π/(4h)}
    let bare = leading_outer_v(x, h, sigma).unwrap().norm() * (-PI / (4.0 * h)).exp();
    assert!((bare / direct.norm() - 1.0).abs() <= 0.2);

    // inner: x = h^{−1/4}, h = 0.05
    let h: f64 = 0.05;
    let sigma = solve_sigma(h, DEFAULT_TOL).unwrap().value;
    let params = SpectralParams::new(5.0, sigma, h, 1.0).unwrap();
    let x = h.powf(-0.25);
    let direct = v(x, params.lambda(), &loose()).unwrap();
    let asym = turning_asymp_v(x, &params).unwrap();
    assert!((asym.norm() / direct.norm() - 1.0).abs() <= 0.2);
    let a = 0.5 * h.sqrt() * x;
    let missing = 2f64.powf(sigma - 0.5) * h.powf(0.25 - 0.5 * sigma) * (PI / (4.0 * h)).exp()
        * ((1.0 - a) / (1.0 - a * a)).powf(0.25);
    let bare = leading_inner_v(x, h).unwrap().norm() * missing;
    assert!((bare / direct.norm() - 1.0).abs() <= 0.2);

    // branch switch sits at x = 2h^{−1/2}
    let x_turn = 2.0 / h.sqrt();
    assert!(matches!(turning_asymp_v(x_turn, &params), Err(Error::Domain(_))));
    assert!(turning_asymp_v(0.8 * x_turn, &params).is_ok());
    assert!(turning_asymp_v(1.2 * x_turn, &params).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn split_is_independent_of_sigma_path(a in 0.2f64..2.5, hi in 1.0f64..4.0, s in 0.0f64..0.45) {
        prop_assume!((a - 1.0).abs() > 0.05);
        let d = g_direct(a, hi, s, &cfg());
        if let Ok(d) = d {
            let sp = g_split(a, hi, s, &cfg()).unwrap();
            prop_assert!(rel(sp, d) < 1e-9);
        }
    }
}
