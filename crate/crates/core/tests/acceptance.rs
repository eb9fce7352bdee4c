//! Acceptance suite: one line per criterion, nonzero exit on any failure.

mod common;

use blowup_core::asymptotics::{g2_stationary, g3_stationary, g_split};
use blowup_core::matching::a_gamma;
use blowup_core::profile::{build_profile, default_grid, geometric_grid, ProfileInput, ProfileSolution};
use blowup_core::solver::{scan_kappa_minus, solve_sigma, sweep_row, DEFAULT_TOL};
use blowup_core::specfun::{digamma, log_gamma};
use blowup_core::weber::wronskian_check;
use blowup_core::{Error, QuadratureConfig, SpectralParams, C64};
use common::{cx, fixtures, rel};
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Outcome = Result<(bool, String), Error>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn within(t: Duration, limit: f64) -> bool {
    t.as_secs_f64() < limit
}

fn c1_small_h() -> Outcome {
    let start = Instant::now();
    let mut gaps = Vec::new();
    for h_inv in [1.5, 2.0, 3.0, 4.0, 5.0] {
        let r = sweep_row(h_inv, DEFAULT_TOL)?;
        gaps.push((r.log_sigma - r.asym_log_sigma).abs());
    }
    let t = start.elapsed();
    let bounded = gaps.iter().all(|&g| g <= 0.15);
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    let ok = bounded && decreasing && within(t, 10.0);
    Ok((ok, format!("max gap {:.4} (tol 0.15), decreasing={decreasing}, {:.2}s (limit 10s)", gaps[0], t.as_secs_f64())))
}

fn c2_large_h() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for h in [50.0, 100.0, 1000.0] {
        let s = solve_sigma(h, DEFAULT_TOL)?.value;
        worst = worst.max((s - (0.5 - 1.0 / h)).abs() * h * h);
    }
    let t = start.elapsed();
    Ok((worst <= 5.0 && within(t, 5.0), format!("max |σ−(½−1/h)|·h² = {worst:.4} (tol 5), {:.2}s (limit 5s)", t.as_secs_f64())))
}

fn c3_half_limit() -> Outcome {
    let s = solve_sigma(1e3, DEFAULT_TOL)?.value;
    let d = (s - 0.5).abs();
    Ok((d <= 2e-3, format!("|σ−½| = {d:.3e} at h⁻¹=1e-3 (tol 2e-3)")))
}

fn c4_reality() -> Outcome {
    let mut worst = 0.0f64;
    let mut positive = true;
    for k in 0..20 {
        let h = 0.2 * 500f64.powf(k as f64 / 19.0);
        let s = solve_sigma(h, DEFAULT_TOL)?.value;
        let a = a_gamma(s, h, 1.0)?;
        worst = worst.max(a.im.abs() / a.norm());
        positive &= a.re > 0.0;
    }
    Ok((worst <= 1e-10 && positive, format!("max |Im A|/|A| = {worst:.2e} (tol 1e-10), Re A > 0: {positive}")))
}

fn c5_kappa_minus() -> Outcome {
    let start = Instant::now();
    let scan = scan_kappa_minus(200, 50, 0.1, 10.0)?;
    let t = start.elapsed();
    Ok((
        scan.no_roots() && within(t, 30.0),
        format!("sign changes {:?}, f in [{:.4}, {:.4}], {:.2}s (limit 30s)", scan.sign_changes, scan.f_min, scan.f_max, t.as_secs_f64()),
    ))
}

fn c6_wronskian() -> Outcome {
    let mut worst = 0.0f64;
    for a in [0.25, 0.5, 1.0, 2.0, 3.0] {
        for s in [0.05, 0.4] {
            for x in [0.25, 1.0, 2.5] {
                let r = wronskian_check(C64::new(-a, -s), x, &cfg())?;
                worst = worst.max(r.relative_error());
            }
        }
    }
    Ok((worst <= 1e-8, format!("max relative Wronskian error {worst:.2e} over 30 points, Re λ in [-3, -0.25] (tol 1e-8)")))
}

fn c7_jump() -> Outcome {
    let grid = geometric_grid(1e-3, 10.0, 12)?;
    let mut worst = 0.0f64;
    let mut control = f64::INFINITY;
    for p in [4.0, 5.0, 7.0] {
        let sol = build_profile(ProfileInput::Power { p }, &grid, &cfg())?;
        worst = worst.max(sol.jump_residual());
        let off = SpectralParams::new(p, sol.params.sigma() + 0.05, sol.params.h(), 1.0)?;
        let bad = ProfileSolution::from_params_unchecked(off, &grid, &cfg())?;
        control = control.min(bad.jump_residual());
    }
    Ok((worst <= 1e-8 && control > 1e-3, format!("max jump {worst:.2e} (tol 1e-8), min control {control:.2e} (> 1e-3)")))
}

fn c8_energy() -> Outcome {
    let grid = default_grid(400.0, 100.0)?;
    let sol = build_profile(ProfileInput::Power { p: 5.0 }, &grid, &cfg())?;
    let e = sol.energy()?;
    let r = 100.0;
    let near = sol.pohozhaev_report(r)?.final_identity;
    let far = sol.pohozhaev_report(2.0 * r)?.final_identity;
    let exponent = (far / near).abs().ln() / 2f64.ln();
    let expected = 2.0 * sol.params.sigma() - 2.0;
    let ok = e.energy.abs() <= 10.0 * e.tail && (exponent - expected).abs() <= 0.3;
    Ok((
        ok,
        format!("|E| = {:.2e} vs tail {:.2e} (factor 10); decay exponent {exponent:.3} vs {expected:.3} (±0.3)", e.energy.abs(), e.tail),
    ))
}

fn c9_stationary() -> Outcome {
    let sigma = 0.1;
    let h_invs = [10.0, 20.0, 40.0];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, alpha, stat) in [("g2", 0.5, g2_stationary as fn(f64, f64, f64) -> _), ("g3", 1.5, g3_stationary)] {
        let mut errs = Vec::new();
        for &hi in &h_invs {
            let exact = g_split(alpha, hi, sigma, &cfg())?;
            errs.push(rel(stat(alpha, hi, sigma)?, exact));
        }
        let scaled: Vec<f64> = errs.iter().zip(&h_invs).map(|(e, hi)| e * hi).collect();
        let c = (scaled.iter().map(|s| s.ln()).sum::<f64>() / 3.0).exp();
        let fit = scaled.iter().all(|s| (s / c - 1.0).abs() <= 0.25);
        let ratios: Vec<f64> = errs.windows(2).map(|w| w[1] / w[0]).collect();
        let first_order = ratios.iter().all(|r| (0.35..=0.7).contains(r));
        ok &= fit && first_order;
        parts.push(format!("{name}: C={c:.3} ratios {:.3}/{:.3}", ratios[0], ratios[1]));
    }
    Ok((ok, format!("{} (fit within 25%, ratios in [0.35, 0.7])", parts.join(", "))))
}

fn log_mismatch(d: C64) -> f64 {
    let k = (d.im / (2.0 * PI)).round();
    (C64::new(d.re, d.im - 2.0 * PI * k).exp() - 1.0).norm()
}

fn c10_special() -> Outcome {
    let f = fixtures();
    let mut worst = 0.0f64;
    let mut n = 0;
    for (key, func) in [("log_gamma", log_gamma as fn(C64) -> _), ("digamma", digamma)] {
        for e in f[key].as_array().expect("fixture grid") {
            worst = worst.max(rel(func(cx(&e["z"]))?, cx(&e["value"])));
            n += 1;
        }
    }
    let mut identity = 0.0f64;
    for i in 0..20 {
        for j in 0..20 {
            let z = C64::new(-5.83 + 0.61 * i as f64, -9.7 + 1.01 * j as f64);
            let lhs = log_gamma(z)? + log_gamma(1.0 - z)?;
            identity = identity.max(log_mismatch(lhs - (C64::new(PI, 0.0) / (PI * z).sin()).ln()));
            let w = C64::new(0.1 + 0.6 * i as f64, z.im);
            let lhs = log_gamma(w)? + log_gamma(w + 0.5)?;
            let rhs = (1.0 - 2.0 * w) * 2f64.ln() + 0.5 * PI.ln() + log_gamma(2.0 * w)?;
            identity = identity.max(log_mismatch(lhs - rhs));
        }
    }
    Ok((
        n == 200 && worst <= 1e-10 && identity <= 1e-10,
        format!("{n} fixture points, max rel {worst:.2e} (tol 1e-10); identity residual {identity:.2e} (tol 1e-10)"),
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("small-h asymptote", c1_small_h),
        ("large-h expansion", c2_large_h),
        ("sigma -> 1/2 limit", c3_half_limit),
        ("A real at the root", c4_reality),
        ("kappa = -1 has no roots", c5_kappa_minus),
        ("Wronskian identity", c6_wronskian),
        ("jump condition", c7_jump),
        ("zero energy", c8_energy),
        ("stationary phase order", c9_stationary),
        ("special functions", c10_special),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match run() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {tag} {name}: {detail} [{:.2}s]", k + 1, start.elapsed().as_secs_f64());
        failed += usize::from(!ok);
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
