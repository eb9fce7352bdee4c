//! Bracketed scalar root finders.

use crate::error::{Error, Result};

/// A bracketed root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub value: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// |g| at `value`, in the units of the solved equation.
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct Stopping {
    /// Accept once |g| ≤ f_tol and the last step is below x_tol.
    pub f_tol: f64,
    pub x_tol: f64,
    pub max_iter: usize,
}

fn bracket_error(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Error {
    Error::Bracket { lo, hi, f_lo, f_hi }
}

/// Newton's method kept inside a sign-changing bracket, falling back to
/// bisection whenever the Newton step leaves the bracket or stalls.
///
/// `fdf` returns (g, g′). `x_tol` may depend on the current iterate.
pub fn safeguarded_newton<F, T>(mut fdf: F, lo: f64, hi: f64, start: f64, x_tol: T, stop: Stopping) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
    T: Fn(f64) -> f64,
{
    let (f_lo, _) = fdf(lo)?;
    let (f_hi, _) = fdf(hi)?;
    if f_lo == 0.0 {
        return Ok(RootResult { value: lo, bracket_lo: lo, bracket_hi: hi, residual: 0.0, iterations: 0, converged: true });
    }
    if f_hi == 0.0 {
        return Ok(RootResult { value: hi, bracket_lo: lo, bracket_hi: hi, residual: 0.0, iterations: 0, converged: true });
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(bracket_error(lo, hi, f_lo, f_hi));
    }
    // orient so that g(neg) < 0 < g(pos)
    let (mut neg, mut pos) = if f_lo < 0.0 { (lo, hi) } else { (hi, lo) };
    let mut x = if start > lo.min(hi) && start < lo.max(hi) { start } else { 0.5 * (lo + hi) };
    let mut dx_old = (hi - lo).abs();
    let mut dx = dx_old;
    let (mut g, mut dg) = fdf(x)?;
    for it in 1..=stop.max_iter {
        let newton_ok = dg != 0.0 && {
            let nx = x - g / dg;
            (nx - neg) * (nx - pos) < 0.0 && (2.0 * g).abs() <= (dx_old * dg).abs()
        };
        dx_old = dx;
        if newton_ok {
            dx = g / dg;
            x -= dx;
        } else {
            dx = 0.5 * (pos - neg);
            x = neg + dx;
        }
        let r = fdf(x)?;
        g = r.0;
        dg = r.1;
        if g < 0.0 {
            neg = x;
        } else if g > 0.0 {
            pos = x;
        }
        let small_step = dx.abs() <= x_tol(x) || (pos - neg).abs() <= x_tol(x);
        if g == 0.0 || (g.abs() <= stop.f_tol && small_step) {
            let (a, b) = (neg.min(pos), neg.max(pos));
            return Ok(RootResult { value: x, bracket_lo: a, bracket_hi: b, residual: g.abs(), iterations: it, converged: true });
        }
        if (pos - neg).abs() <= f64::EPSILON * x.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    Err(Error::Convergence { iterations: stop.max_iter, residual: g.abs() })
}

/// Brent's method on [a, b].
pub fn brent<F>(mut f: F, a: f64, b: f64, stop: Stopping) -> Result<RootResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (lo0, hi0) = (a.min(b), a.max(b));
    let mut a = a;
    let mut b = b;
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(RootResult { value: a, bracket_lo: lo0, bracket_hi: hi0, residual: 0.0, iterations: 0, converged: true });
    }
    if fb == 0.0 {
        return Ok(RootResult { value: b, bracket_lo: lo0, bracket_hi: hi0, residual: 0.0, iterations: 0, converged: true });
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(bracket_error(lo0, hi0, fa, fb));
    }
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    for it in 1..=stop.max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * stop.x_tol;
        let xm = 0.5 * (c - b);
        if fb == 0.0 || (xm.abs() <= tol1 && fb.abs() <= stop.f_tol) {
            let (lo, hi) = (b.min(c), b.max(c));
            return Ok(RootResult { value: b, bracket_lo: lo, bracket_hi: hi, residual: fb.abs(), iterations: it, converged: true });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b)?;
    }
    Err(Error::Convergence { iterations: stop.max_iter, residual: fb.abs() })
}
