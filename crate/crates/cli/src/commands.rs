use crate::args::{AsymptoticsArgs, ProfileArgs, SolveHArgs, SolveSigmaArgs, SweepArgs};
use crate::format::{self, Record, Table};
use crate::Failure;
use blowup_core::asymptotics::{g_split, turning_asymp_v, v_from_g, TRANSITION_BAND};
use blowup_core::profile::{build_profile, geometric_grid, ProfileInput};
use blowup_core::solver::{solve_h_for_p, solve_sigma, sweep_grid, sweep_row, SweepRow};
use blowup_core::{QuadratureConfig, SpectralParams, C64};
use rayon::prelude::*;
use std::io::Write;

pub const SWEEP_COLUMNS: [&str; 5] = ["h_inv", "sigma", "log_sigma", "asym_log_sigma", "f_residual"];
pub const PROFILE_COLUMNS: [&str; 6] = ["z", "phi_re", "phi_im", "eta_re", "eta_im", "abs_eta"];
const ROOT_COLUMNS: [&str; 8] = ["h", "sigma", "p", "residual", "iterations", "bracket_lo", "bracket_hi", "converged"];
const ASYM_COLUMNS: [&str; 9] = ["x", "alpha", "region", "v_re", "v_im", "asym_re", "asym_im", "rel_err", "error"];

fn sweep_record(h_inv: f64, row: &Result<SweepRow, blowup_core::Error>) -> Record {
    match row {
        Ok(r) => vec![
            ("h_inv", r.h_inv.into()),
            ("sigma", r.sigma.into()),
            ("log_sigma", r.log_sigma.into()),
            ("asym_log_sigma", r.asym_log_sigma.into()),
            ("f_residual", r.f_residual.into()),
        ],
        Err(_) => vec![
            ("h_inv", h_inv.into()),
            ("sigma", f64::NAN.into()),
            ("log_sigma", f64::NAN.into()),
            ("asym_log_sigma", (2f64.ln() - std::f64::consts::PI * h_inv + h_inv.ln()).into()),
            ("f_residual", f64::NAN.into()),
        ],
    }
}

pub fn sweep(args: &SweepArgs, pool: &rayon::ThreadPool) -> Result<(), Failure> {
    let grid = sweep_grid(args.h_inv_min, args.h_inv_max, args.steps).map_err(|e| Failure::Usage(e.to_string()))?;
    let rows: Vec<_> = pool.install(|| grid.par_iter().map(|&h_inv| sweep_row(h_inv, args.tol)).collect());
    let mut table = Table::create(&args.output.out, args.output.format, &SWEEP_COLUMNS)?;
    let mut failures = Vec::new();
    for (k, (&h_inv, row)) in grid.iter().zip(&rows).enumerate() {
        table.write(&sweep_record(h_inv, row))?;
        if let Err(e) = row {
            eprintln!("sweep: row {k} (h_inv = {}): {e}", format::g17(h_inv));
            failures.push(k);
        }
    }
    table.finish()?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Solver(format!("{} of {} rows failed", failures.len(), grid.len())))
    }
}

fn root_record(h: f64, sigma: f64, p: f64, r: &blowup_core::roots::RootResult) -> Record {
    vec![
        ("h", h.into()),
        ("sigma", sigma.into()),
        ("p", p.into()),
        ("residual", r.residual.into()),
        ("iterations", (r.iterations as f64).into()),
        ("bracket_lo", r.bracket_lo.into()),
        ("bracket_hi", r.bracket_hi.into()),
        ("converged", r.converged.into()),
    ]
}

/// p with σ_c(p) = σ.
fn p_of_sigma(sigma: f64) -> f64 {
    1.0 + 1.0 / (0.5 - sigma)
}

pub fn solve_sigma_cmd(args: &SolveSigmaArgs) -> Result<(), Failure> {
    let r = solve_sigma(args.h, args.tol).map_err(|e| Failure::Solver(e.to_string()))?;
    let mut table = Table::create(&args.output.out, args.output.format, &ROOT_COLUMNS)?;
    table.write(&root_record(args.h, r.value, p_of_sigma(r.value), &r))?;
    table.finish()?;
    Ok(())
}

pub fn solve_h_cmd(args: &SolveHArgs) -> Result<(), Failure> {
    let r = solve_h_for_p(args.p, args.tol).map_err(|e| Failure::Solver(e.to_string()))?;
    let sigma = 0.5 - 1.0 / (args.p - 1.0);
    let mut table = Table::create(&args.output.out, args.output.format, &ROOT_COLUMNS)?;
    table.write(&root_record(r.value, sigma, args.p, &r))?;
    table.finish()?;
    Ok(())
}

fn complex(name: &'static str, z: C64) -> String {
    format!("\"{name}\":[{},{}]", json_num(z.re), json_num(z.im))
}

fn json_num(x: f64) -> String {
    if x.is_finite() {
        format::g17(x)
    } else {
        "null".into()
    }
}

/// Sidecar path for a profile written to `out`.
pub fn sidecar_path(out: &str) -> Option<String> {
    (out != "-").then(|| format!("{out}.meta.jsonl"))
}

pub fn profile(args: &ProfileArgs) -> Result<(), Failure> {
    let cfg = QuadratureConfig::new(1e3, 4000, 1e-14, args.tol).map_err(|e| Failure::Usage(e.to_string()))?;
    let input = match (args.p, args.h) {
        (Some(p), None) => ProfileInput::Power { p },
        (None, Some(h)) => ProfileInput::Rate { h, p: None },
        _ => return Err(Failure::Usage("give exactly one of --p, --h".into())),
    };
    let grid = geometric_grid(1e-3, args.z_max, args.samples).map_err(|e| Failure::Usage(e.to_string()))?;
    let sol = build_profile(input, &grid, &cfg).map_err(|e| Failure::Solver(e.to_string()))?;
    let mut table = Table::create(&args.output.out, args.output.format, &PROFILE_COLUMNS)?;
    for s in &sol.samples {
        table.write(&vec![
            ("z", s.z.into()),
            ("phi_re", s.phi.re.into()),
            ("phi_im", s.phi.im.into()),
            ("eta_re", s.eta.re.into()),
            ("eta_im", s.eta.im.into()),
            ("abs_eta", s.eta.norm().into()),
        ])?;
    }
    table.finish()?;

    let energy = sol.energy();
    if let Err(e) = &energy {
        eprintln!("profile: energy unavailable: {e}");
    }
    let (e_val, e_tail) = energy.map(|e| (e.energy, e.tail)).unwrap_or((f64::NAN, f64::NAN));
    let fields = [
        format!("\"p\":{}", json_num(sol.p())),
        format!("\"sigma\":{}", json_num(sol.params.sigma())),
        format!("\"h\":{}", json_num(sol.params.h())),
        complex("alpha", sol.alpha),
        complex("c0", sol.c0),
        format!("\"jump_residual\":{}", json_num(sol.jump_residual())),
        format!("\"energy\":{}", json_num(e_val)),
        format!("\"energy_tail\":{}", json_num(e_tail)),
        format!("\"z_max\":{}", json_num(args.z_max)),
        format!("\"samples\":{}", sol.samples.len()),
    ];
    let line = format!("{{{}}}\n", fields.join(","));
    match sidecar_path(&args.output.out) {
        Some(path) => {
            let mut f = format::open(&path)?;
            f.write_all(line.as_bytes())?;
            f.flush()?;
        }
        None => eprint!("{line}"),
    }
    Ok(())
}

fn asym_record(x: f64, alpha: f64, exact: &blowup_core::Result<C64>, asym: &blowup_core::Result<C64>) -> Record {
    let (lo, hi) = TRANSITION_BAND;
    let region = if alpha < lo {
        "inner"
    } else if alpha > hi {
        "outer"
    } else {
        "transition"
    };
    let nan = C64::new(f64::NAN, f64::NAN);
    let v = *exact.as_ref().unwrap_or(&nan);
    let a = *asym.as_ref().unwrap_or(&nan);
    let err = match exact {
        Err(e) => e.to_string(),
        Ok(_) => String::new(),
    };
    vec![
        ("x", x.into()),
        ("alpha", alpha.into()),
        ("region", region.into()),
        ("v_re", v.re.into()),
        ("v_im", v.im.into()),
        ("asym_re", a.re.into()),
        ("asym_im", a.im.into()),
        ("rel_err", ((a - v).norm() / v.norm()).into()),
        ("error", err.into()),
    ]
}

pub fn asymptotics(args: &AsymptoticsArgs, pool: &rayon::ThreadPool) -> Result<(), Failure> {
    let cfg = QuadratureConfig::new(1e3, 4000, 1e-14, args.tol).map_err(|e| Failure::Usage(e.to_string()))?;
    let h = args.h;
    let sigma = solve_sigma(h, blowup_core::solver::DEFAULT_TOL).map_err(|e| Failure::Solver(e.to_string()))?.value;
    let params = SpectralParams::new(p_of_sigma(sigma), sigma, h, 1.0).map_err(|e| Failure::Solver(e.to_string()))?;
    let z_max = args.z_max.unwrap_or(4.0 / h.sqrt());
    let n = args.samples;
    let xs: Vec<f64> = (1..=n).map(|k| z_max * k as f64 / n as f64).collect();
    let rows: Vec<_> = pool.install(|| {
        xs.par_iter()
            .map(|&x| {
                let alpha = 0.5 * h.sqrt() * x;
                let exact = g_split(alpha, 1.0 / h, sigma, &cfg).and_then(|g| v_from_g(x, h, sigma, g));
                (x, alpha, exact, turning_asymp_v(x, &params))
            })
            .collect()
    });
    let mut table = Table::create(&args.output.out, args.output.format, &ASYM_COLUMNS)?;
    let mut failed = 0;
    for (x, alpha, exact, asym) in &rows {
        table.write(&asym_record(*x, *alpha, exact, asym))?;
        if let Err(e) = exact {
            eprintln!("asymptotics: x = {}: {e}", format::g17(*x));
            failed += 1;
        }
    }
    table.finish()?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Solver(format!("{failed} of {n} reference values failed")))
    }
}
