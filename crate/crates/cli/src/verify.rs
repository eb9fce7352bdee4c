//! Invariant groups behind `blowup verify`.

use crate::args::{Level, VerifyArgs};
use crate::format::{Record, Table};
use crate::Failure;
use blowup_core::asymptotics::{g2_stationary, g3_stationary, g_direct, g_split};
use blowup_core::matching::{a_gamma, f_phase_dsigma, f_phase_gamma, f_phase_stable};
use blowup_core::profile::{build_profile, default_grid, geometric_grid, ProfileInput, ProfileSolution};
use blowup_core::solver::{phase_sign_changes, scan_kappa_minus, solve_sigma, sweep_row, DEFAULT_TOL};
use blowup_core::specfun::log_gamma;
use blowup_core::weber::{connection_residual, d_nu_by_recurrence, d_nu_integral, wronskian_check};
use blowup_core::{Error, QuadratureConfig, SpectralParams, C64};
use std::f64::consts::PI;
use std::time::Instant;

type Group<'a> = (&'static str, Box<dyn Fn() -> Result<Outcome, Error> + 'a>);

pub const COLUMNS: [&str; 6] = ["group", "pass", "worst", "tolerance", "seconds", "detail"];

struct Outcome {
    worst: f64,
    tolerance: f64,
    /// Extra conditions beyond `worst <= tolerance`.
    also: bool,
    detail: String,
}

impl Outcome {
    fn pass(&self) -> bool {
        self.also && self.worst <= self.tolerance
    }
}

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn log_mismatch(d: C64) -> f64 {
    let k = (d.im / (2.0 * PI)).round();
    (C64::new(d.re, d.im - 2.0 * PI * k).exp() - 1.0).norm()
}

fn specfun(level: Level) -> Result<Outcome, Error> {
    let n = if level == Level::Full { 40 } else { 12 };
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let re = -7.77 + 30.0 * i as f64 / n as f64;
            let im = -30.3 + 60.0 * j as f64 / n as f64;
            let z = C64::new(re, im);
            let refl = log_gamma(z)? + log_gamma(1.0 - z)? - (C64::new(PI, 0.0) / (PI * z).sin()).ln();
            let rec = log_gamma(z + 1.0)? - log_gamma(z)? - z.ln();
            worst = worst.max(log_mismatch(refl)).max(log_mismatch(rec));
            if re > 0.0 {
                let dup = log_gamma(z)? + log_gamma(z + 0.5)?
                    - ((1.0 - 2.0 * z) * 2f64.ln() + 0.5 * PI.ln() + log_gamma(2.0 * z)?);
                worst = worst.max(log_mismatch(dup));
            }
        }
    }
    Ok(Outcome { worst, tolerance: 1e-10, also: true, detail: format!("reflection/recurrence/duplication on {n}x{n}") })
}

fn weber(level: Level) -> Result<Outcome, Error> {
    let re: &[f64] = if level == Level::Full { &[0.25, 0.5, 1.0, 2.0, 3.0] } else { &[0.5, 2.0] };
    let mut worst = 0.0f64;
    for &a in re {
        for s in [0.05, 0.4] {
            for x in [0.25, 1.0, 2.5] {
                let r = wronskian_check(C64::new(-a, -s), x, &cfg())?;
                worst = worst.max(r.relative_error()).max(r.reflected_relative_error());
            }
        }
    }
    let mut connection = 0.0f64;
    for (nu, z) in [(C64::new(-0.5, 0.0), C64::new(1.3, 0.0)), (C64::new(-0.25, 0.5), C64::new(0.7, -0.2))] {
        connection = connection.max(connection_residual(nu, z, &cfg())?);
    }
    let nu = C64::new(-0.4, 0.8);
    let z = C64::new(0.9, -0.6);
    let overlap = (d_nu_by_recurrence(nu, z, &cfg())? / d_nu_integral(nu, z, &cfg())? - 1.0).norm();
    Ok(Outcome {
        worst,
        tolerance: 1e-8,
        also: connection <= 1e-7 && overlap <= 1e-8,
        detail: format!("wronskians; connection {connection:.2e}; recurrence overlap {overlap:.2e}"),
    })
}

fn matching(level: Level) -> Result<Outcome, Error> {
    let n = if level == Level::Full { 40 } else { 10 };
    let mut worst = 0.0f64;
    let mut monotone = true;
    for i in 0..n {
        for j in 0..n {
            let sigma = (i as f64 + 0.5) / n as f64;
            let h_inv = 0.05 + 25.0 * j as f64 / n as f64;
            for kappa in [1.0, -1.0] {
                let a = f_phase_gamma(sigma, h_inv, kappa)?.f;
                let b = f_phase_stable(sigma, h_inv, kappa)?.f;
                worst = worst.max((a - b).abs());
            }
            monotone &= f_phase_dsigma(sigma, h_inv, 1.0)? > 0.0;
        }
    }
    Ok(Outcome { worst, tolerance: 1e-9, also: monotone, detail: format!("representations agree on {n}x{n}; f increasing in sigma: {monotone}") })
}

fn solver(level: Level) -> Result<Outcome, Error> {
    let mut gaps = Vec::new();
    for h_inv in [1.5, 2.0, 3.0, 4.0, 5.0] {
        let r = sweep_row(h_inv, DEFAULT_TOL)?;
        gaps.push((r.log_sigma - r.asym_log_sigma).abs());
    }
    let decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    let mut large_h = 0.0f64;
    for h in [50.0, 100.0, 1000.0] {
        let s = solve_sigma(h, DEFAULT_TOL)?.value;
        large_h = large_h.max((s - (0.5 - 1.0 / h)).abs() * h * h);
    }
    let mut reality = 0.0f64;
    let mut positive = true;
    let count = if level == Level::Full { 20 } else { 6 };
    for k in 0..count {
        let h = 0.2 * 500f64.powf(k as f64 / (count - 1) as f64);
        let a = a_gamma(solve_sigma(h, DEFAULT_TOL)?.value, h, 1.0)?;
        reality = reality.max(a.im.abs() / a.norm());
        positive &= a.re > 0.0;
    }
    let mut unique = true;
    let mut no_minus = true;
    if level == Level::Full {
        for h_inv in [0.2, 1.0, 3.0, 8.0] {
            unique &= phase_sign_changes(h_inv, 1.0, 0, 400)? == 1;
        }
        no_minus = scan_kappa_minus(200, 50, 0.1, 10.0)?.no_roots();
    }
    let worst = gaps[0] / 0.15;
    Ok(Outcome {
        worst,
        tolerance: 1.0,
        also: decreasing && large_h <= 5.0 && reality <= 1e-10 && positive && unique && no_minus,
        detail: format!(
            "small-h gap {:.4}; large-h coefficient {large_h:.3}; Im A/|A| {reality:.1e}; unique root {unique}; kappa=-1 no roots {no_minus}",
            gaps[0]
        ),
    })
}

fn jump(perturb: f64) -> Result<Outcome, Error> {
    let grid = geometric_grid(1e-3, 10.0, 12)?;
    let mut worst = 0.0f64;
    for p in [4.0, 5.0, 7.0] {
        let sol = build_profile(ProfileInput::Power { p }, &grid, &cfg())?;
        let r = if perturb == 0.0 {
            sol.jump_residual()
        } else {
            let off = SpectralParams::new(p, sol.params.sigma() + perturb, sol.params.h(), 1.0)?;
            ProfileSolution::from_params_unchecked(off, &grid, &cfg())?.jump_residual()
        };
        worst = worst.max(r);
    }
    let detail = if perturb == 0.0 { "p in {4,5,7}".into() } else { format!("p in {{4,5,7}}, sigma shifted by {perturb}") };
    Ok(Outcome { worst, tolerance: 1e-8, also: true, detail })
}

fn pohozhaev() -> Result<Outcome, Error> {
    let sol = build_profile(ProfileInput::Power { p: 5.0 }, &default_grid(400.0, 100.0)?, &cfg())?;
    let e = sol.energy()?;
    let near = sol.pohozhaev_report(100.0)?;
    let far = sol.pohozhaev_report(200.0)?.final_identity;
    let exponent = (far / near.final_identity).abs().ln() / 2f64.ln();
    let expected = 2.0 * sol.params.sigma() - 2.0;
    Ok(Outcome {
        worst: e.energy.abs() / e.tail,
        tolerance: 10.0,
        also: (exponent - expected).abs() <= 0.3 && near.sigma_positive() && near.kappa_positive(),
        detail: format!("energy/tail; decay exponent {exponent:.3} vs {expected:.3}"),
    })
}

fn asymptotics(level: Level) -> Result<Outcome, Error> {
    let mut worst = 0.0f64;
    for (a, hi) in [(0.3, 2.0), (0.5, 5.0), (0.8, 4.0), (1.2, 3.0), (2.0, 2.0)] {
        let d = g_direct(a, hi, 0.15, &cfg())?;
        worst = worst.max((g_split(a, hi, 0.15, &cfg())? - d).norm() / d.norm());
    }
    let mut first_order = true;
    if level == Level::Full {
        for (alpha, stat) in [(0.5, g2_stationary as fn(f64, f64, f64) -> _), (1.5, g3_stationary)] {
            let mut errs = Vec::new();
            for hi in [10.0, 20.0, 40.0] {
                let exact = g_split(alpha, hi, 0.1, &cfg())?;
                errs.push((stat(alpha, hi, 0.1)? - exact).norm() / exact.norm());
            }
            first_order &= errs.windows(2).all(|w| (0.35..=0.7).contains(&(w[1] / w[0])));
        }
    }
    Ok(Outcome { worst, tolerance: 1e-10, also: first_order, detail: format!("contour split vs direct; stationary first order {first_order}") })
}

pub fn run(args: &VerifyArgs) -> Result<(), Failure> {
    let level = args.level;
    let groups: Vec<Group> = vec![
        ("specfun", Box::new(move || specfun(level))),
        ("weber", Box::new(move || weber(level))),
        ("matching", Box::new(move || matching(level))),
        ("solver", Box::new(move || solver(level))),
        ("jump", Box::new(|| jump(args.perturb_sigma))),
        ("pohozhaev", Box::new(pohozhaev)),
        ("asymptotics", Box::new(move || asymptotics(level))),
    ];
    let mut table = Table::create(&args.output.out, args.output.format, &COLUMNS)?;
    let mut first_fail = None;
    for (name, group) in &groups {
        let start = Instant::now();
        let result = group();
        let seconds = start.elapsed().as_secs_f64();
        let (pass, worst, tolerance, detail) = match result {
            Ok(o) => (o.pass(), o.worst, o.tolerance, o.detail),
            Err(e) => (false, f64::NAN, f64::NAN, format!("error: {e}")),
        };
        let rec: Record = vec![
            ("group", (*name).into()),
            ("pass", pass.into()),
            ("worst", worst.into()),
            ("tolerance", tolerance.into()),
            ("seconds", seconds.into()),
            ("detail", detail.into()),
        ];
        table.write(&rec)?;
        if !pass && first_fail.is_none() {
            first_fail = Some(*name);
        }
    }
    table.finish()?;
    match first_fail {
        None => Ok(()),
        Some(name) => Err(Failure::Verify(name.to_string())),
    }
}
