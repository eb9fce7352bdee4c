//! σ(h) for κ = +1, its inverse h(σ_c) for a given power p, and sweeps.

use crate::cmath::PI;
use crate::error::{Error, Result};
use crate::matching::{f_phase, f_phase_dsigma};
use crate::roots::{brent, safeguarded_newton, Stopping};
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

pub use crate::roots::RootResult;

/// Default tolerance on |f| at the root.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Step tolerance on σ (scaled down with σ when σ < 1).
pub const SIGMA_TOL: f64 = 1e-10;
const MAX_ITER: usize = 200;

/// Leading small-h behaviour 2e^{−π/h}/h.
pub fn sigma_seed_small_h(h: f64) -> f64 {
    2.0 * (-PI / h).exp() / h
}

/// Leading large-h behaviour ½ − 1/h.
pub fn sigma_seed_large_h(h: f64) -> f64 {
    0.5 - 1.0 / h
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("tolerance must be positive"))
    }
}

/// The unique σ ∈ (0, 1) with f(σ, 1/h) = 0 for κ = +1.
///
/// Safeguarded Newton on the bracket [0, 1]: bisection whenever the
/// derivative step would leave the current bracket.
pub fn solve_sigma(h: f64, tol: f64) -> Result<RootResult> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain("h must be positive and finite"));
    }
    check_tol(tol)?;
    let h_inv = 1.0 / h;
    let seed = if h_inv >= 1.0 { sigma_seed_small_h(h) } else { sigma_seed_large_h(h) };
    let fdf = |s: f64| -> Result<(f64, f64)> {
        let s = s.clamp(0.0, 1.0);
        Ok((f_phase(s, h_inv, 1.0)?.f, f_phase_dsigma(s, h_inv, 1.0)?))
    };
    let x_tol = |s: f64| SIGMA_TOL * s.abs().min(1.0);
    let stop = Stopping { f_tol: tol, x_tol: 0.0, max_iter: MAX_ITER };
    let r = safeguarded_newton(fdf, 0.0, 1.0, seed, x_tol, stop)?;
    if r.value < f64::MIN_POSITIVE {
        return Err(Error::Overflow("sigma below the normal double range"));
    }
    Ok(r)
}

/// First-order guess for h(p).
pub fn h_seed_for_p(p: f64) -> f64 {
    if p - 3.0 < 1.0 {
        PI / (8.0 / (p - 3.0)).ln()
    } else {
        p - 1.0
    }
}

/// h with σ(h) = σ_c = ½ − 1/(p−1), for p > 3.
///
/// Brent's method in log h on [seed/4, 4·seed]; the residual reported is
/// |σ(h) − σ_c|.
pub fn solve_h_for_p(p: f64, tol: f64) -> Result<RootResult> {
    if !(p > 3.0 && p.is_finite()) {
        return Err(Error::Domain("p must exceed 3"));
    }
    check_tol(tol)?;
    let sigma_c = 0.5 - 1.0 / (p - 1.0);
    let seed = h_seed_for_p(p);
    let (lo, hi) = ((seed / 4.0).ln(), (seed * 4.0).ln());
    let g = |u: f64| -> Result<f64> { Ok(solve_sigma(u.exp(), DEFAULT_TOL)?.value - sigma_c) };
    let stop = Stopping { f_tol: tol, x_tol: 0.0, max_iter: MAX_ITER };
    let r = brent(g, lo, hi, stop).map_err(|e| match e {
        Error::Bracket { f_lo, f_hi, .. } => Error::Bracket { lo: lo.exp(), hi: hi.exp(), f_lo, f_hi },
        other => other,
    })?;
    Ok(RootResult {
        value: r.value.exp(),
        bracket_lo: r.bracket_lo.exp(),
        bracket_hi: r.bracket_hi.exp(),
        ..r
    })
}

/// One row of a σ(h) table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub h_inv: f64,
    pub sigma: f64,
    pub log_sigma: f64,
    /// log 2 − πh⁻¹ + log h⁻¹.
    pub asym_log_sigma: f64,
    /// |f| at the computed σ.
    pub f_residual: f64,
}

/// Evenly spaced h⁻¹ values, both ends included.
pub fn sweep_grid(h_inv_min: f64, h_inv_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(h_inv_min > 0.0 && h_inv_max > h_inv_min && h_inv_max.is_finite()) {
        return Err(Error::Domain("need 0 < h_inv_min < h_inv_max"));
    }
    if steps < 2 {
        return Err(Error::Domain("steps must be at least 2"));
    }
    let n = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i + 1 == steps { h_inv_max } else { h_inv_min + (h_inv_max - h_inv_min) * i as f64 / n })
        .collect())
}

pub fn sweep_row(h_inv: f64, tol: f64) -> Result<SweepRow> {
    let r = solve_sigma(1.0 / h_inv, tol)?;
    Ok(SweepRow {
        h_inv,
        sigma: r.value,
        log_sigma: r.value.ln(),
        asym_log_sigma: 2f64.ln() - PI * h_inv + h_inv.ln(),
        f_residual: r.residual,
    })
}

/// σ(h) on an even h⁻¹ grid.
pub fn sweep_sigma(h_inv_min: f64, h_inv_max: f64, steps: usize) -> Result<Vec<SweepRow>> {
    sweep_grid(h_inv_min, h_inv_max, steps)?
        .into_iter()
        .map(|x| sweep_row(x, DEFAULT_TOL))
        .collect()
}

/// Sign changes of f(·, h⁻¹) − 2πn between consecutive points of an even
/// grid of `n_sigma` points on [0, 1], endpoints included.
pub fn phase_sign_changes(h_inv: f64, kappa: f64, n: i32, n_sigma: usize) -> Result<usize> {
    if n_sigma < 2 {
        return Err(Error::Domain("need at least two sigma points"));
    }
    let target = 2.0 * PI * n as f64;
    let mut count = 0;
    let mut prev: Option<f64> = None;
    for j in 0..n_sigma {
        let s = j as f64 / (n_sigma - 1) as f64;
        let g = f_phase(s, h_inv, kappa)?.f - target;
        if let Some(q) = prev {
            if q.signum() != g.signum() {
                count += 1;
            }
        }
        prev = Some(g);
    }
    Ok(count)
}

/// Result of scanning f for κ = −1 over a (σ, h⁻¹) grid.
#[derive(Debug, Clone, PartialEq)]
pub struct NoRootScan {
    pub n_sigma: usize,
    pub n_h_inv: usize,
    /// Sign changes of f − 2πn for n = −1, 0, 1, along both grid directions.
    pub sign_changes: [usize; 3],
    pub f_min: f64,
    pub f_max: f64,
}

impl NoRootScan {
    pub fn no_roots(&self) -> bool {
        self.sign_changes.iter().all(|&c| c == 0)
    }
}

/// Scan f(σ, h⁻¹) for κ = −1 on an interior σ grid in (0, 1) and an even
/// h⁻¹ grid on [h_inv_lo, h_inv_hi].
pub fn scan_kappa_minus(n_sigma: usize, n_h_inv: usize, h_inv_lo: f64, h_inv_hi: f64) -> Result<NoRootScan> {
    let hs = sweep_grid(h_inv_lo, h_inv_hi, n_h_inv)?;
    if n_sigma < 2 {
        return Err(Error::Domain("need at least two sigma points"));
    }
    let mut grid = Vec::with_capacity(n_sigma * hs.len());
    for &hi in &hs {
        for j in 0..n_sigma {
            let s = (j as f64 + 1.0) / (n_sigma as f64 + 1.0);
            grid.push(f_phase(s, hi, -1.0)?.f);
        }
    }
    let at = |i: usize, j: usize| grid[i * n_sigma + j];
    let mut sign_changes = [0usize; 3];
    for (k, n) in (-1..=1).enumerate() {
        let t = 2.0 * PI * n as f64;
        for i in 0..hs.len() {
            for j in 0..n_sigma {
                let g = at(i, j) - t;
                if j + 1 < n_sigma && g.signum() != (at(i, j + 1) - t).signum() {
                    sign_changes[k] += 1;
                }
                if i + 1 < hs.len() && g.signum() != (at(i + 1, j) - t).signum() {
                    sign_changes[k] += 1;
                }
            }
        }
    }
    let f_min = grid.iter().cloned().fold(f64::INFINITY, f64::min);
    let f_max = grid.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(NoRootScan { n_sigma, n_h_inv: hs.len(), sign_changes, f_min, f_max })
}
