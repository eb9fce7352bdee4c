//! Comparisons against the frozen mpmath fixtures.

mod common;

use blowup_core::asymptotics::{g_direct, g_split};
use blowup_core::matching::{a_gamma, a_stable};
use blowup_core::solver::{solve_h_for_p, solve_sigma, DEFAULT_TOL};
use blowup_core::specfun::*;
use blowup_core::weber::*;
use blowup_core::{QuadratureConfig, C64};
use common::{cx, fixtures, num, rel};

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

#[test]
fn log_gamma_grid() {
    let grid = fixtures()["log_gamma"].as_array().unwrap();
    assert_eq!(grid.len(), 100);
    let mut worst = 0.0f64;
    for e in grid {
        let z = cx(&e["z"]);
        let got = log_gamma(z).unwrap();
        worst = worst.max(rel(got, cx(&e["value"])));
    }
    assert!(worst <= 1e-12, "worst {worst:e}");
}

#[test]
fn digamma_grid() {
    let grid = fixtures()["digamma"].as_array().unwrap();
    assert_eq!(grid.len(), 100);
    let mut worst = 0.0f64;
    for e in grid {
        let got = digamma(cx(&e["z"])).unwrap();
        worst = worst.max(rel(got, cx(&e["value"])));
    }
    assert!(worst <= 1e-12, "worst {worst:e}");
}

#[test]
fn single_points() {
    let p = &fixtures()["points"];
    let e = &p["log_gamma_075_5i"];
    assert!(rel(log_gamma(cx(&e["z"])).unwrap(), cx(&e["value"])) < 1e-13);
    let e = &p["log_gamma_075_10i"];
    let z = cx(&e["z"]);
    assert!(rel(log_gamma(z).unwrap(), cx(&e["value"])) < 1e-13);
    assert!((binet_log_gamma(z).unwrap() - cx(&e["value"])).norm() < 1e-9);
    let e = &p["gamma_075_m15i"];
    assert!(rel(gamma(cx(&e["z"])).unwrap(), cx(&e["value"])) < 1e-13);
    let e = &p["digamma_025_2i"];
    assert!(rel(digamma(cx(&e["z"])).unwrap(), cx(&e["value"])) < 1e-13);
    let e = &p["half_gap_01_01i"];
    assert!(rel(digamma_half_gap(cx(&e["z"])).unwrap(), cx(&e["value"])) < 1e-13);
    let e = &p["log_gamma_diff_5_5i_04"];
    let d = log_gamma_diff(cx(&e["z"]), num(&e["s"])).unwrap();
    assert!(rel(d.exact, cx(&e["value"])) < 1e-13);
    assert!(rel(d.asymptotic, d.exact) < 1e-3);
}

#[test]
fn weber_values() {
    let w = &fixtures()["weber"];
    for key in ["d_nu_1", "d_nu_2", "d_nu_3"] {
        let e = &w[key];
        let got = d_nu(cx(&e["nu"]), cx(&e["z"]), &cfg()).unwrap();
        assert!(rel(got, cx(&e["value"])) < 1e-10, "{key}: {got}");
    }
    let e = &w["d_nu_3"];
    let got = d_nu_integral(cx(&e["nu"]), cx(&e["z"]), &cfg()).unwrap();
    assert!(rel(got, cx(&e["value"])) < 1e-10);
    for key in ["v", "v_sigma_07", "v_negative_x"] {
        let e = &w[key];
        let got = v(num(&e["x"]), cx(&e["lambda"]), &cfg()).unwrap();
        assert!(rel(got, cx(&e["value"])) < 1e-9, "{key}: {got}");
    }
    let e = &w["v_star"];
    let got = v_star(num(&e["x"]), cx(&e["lambda"]), &cfg()).unwrap();
    assert!(rel(got, cx(&e["value"])) < 1e-10);
}

#[test]
fn matching_values() {
    for e in fixtures()["matching"].as_array().unwrap() {
        let (s, h, k) = (num(&e["sigma"]), num(&e["h"]), num(&e["kappa"]));
        let want = cx(&e["a"]);
        assert!(rel(cx(&e["a_from_v"]), want) < 1e-20 + 1e-15);
        assert!(rel(a_gamma(s, h, k).unwrap(), want) < 1e-12);
        assert!(rel(a_stable(s, h, k).unwrap(), want) < 1e-9);
        let lam = C64::new(-k / h, -s);
        let (v0, v1) = v_at_zero(lam).unwrap();
        assert!(rel(-v1 / v0, want) < 1e-12);
    }
}

#[test]
fn sigma_and_h_regressions() {
    for e in fixtures()["sigma_of_h"].as_array().unwrap() {
        let h = num(&e["h"]);
        let want = num(&e["sigma"]);
        let got = solve_sigma(h, DEFAULT_TOL).unwrap().value;
        assert!((got - want).abs() <= 1e-10 * want.max(1e-3), "h={h}: {got} vs {want}");
    }
    for e in fixtures()["h_of_p"].as_array().unwrap() {
        let p = num(&e["p"]);
        let want = num(&e["h"]);
        let got = solve_h_for_p(p, 1e-13).unwrap().value;
        assert!((got / want - 1.0).abs() < 1e-8, "p={p}: {got} vs {want}");
    }
}

#[test]
fn g_values() {
    for e in fixtures()["g"].as_array().unwrap() {
        let (a, hi, s) = (num(&e["alpha"]), num(&e["h_inv"]), num(&e["sigma"]));
        let want = cx(&e["value"]);
        let split = g_split(a, hi, s, &cfg()).unwrap();
        assert!(rel(split, want) < 1e-10, "split {a} {hi}: {split}");
        if let Ok(d) = g_direct(a, hi, s, &QuadratureConfig::new(1e3, 4000, 1e-14, 1e-9).unwrap()) {
            assert!(rel(d, want) < 1e-8, "direct {a} {hi}: {d}");
        }
    }
    // h_inv = 5, α = 0.5 must certify directly
    let d = g_direct(0.5, 5.0, 0.1, &cfg()).unwrap();
    assert!(rel(d, cx(&fixtures()["g"][0]["value"])) < 1e-10);
}
