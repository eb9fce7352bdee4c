//! ∫ t^c e^{−bt−qt²/2} dt along a ray from the origin, in log-scaled form.
//!
//! The ray angle is picked from a range by minimising an estimate of ∫|f|,
//! which is what limits the attainable accuracy when the integrand
//! oscillates. The segment [0, ε] next to the branch point is integrated
//! term by term from the Taylor series of the exponential; the rest goes to
//! the adaptive Gauss–Legendre driver.

use crate::cmath::{c, I};
use crate::error::{Error, Result};
use crate::quad::{self, Tolerances};
use crate::C64;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// Depth below the peak (in e-folds) at which the integrand is dropped.
const DROP: f64 = 50.0;
const CANDIDATES: usize = 25;
/// Panels budgeted per phase turn when screening rays.
const OSC_PANELS: f64 = 2.0;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Ray {
    pub c: C64,
    pub b: C64,
    pub q: C64,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct RayOptions {
    pub beta_lo: f64,
    pub beta_hi: f64,
    /// Finite upper limit (along β = beta_lo); `None` for ∞.
    pub upper: Option<f64>,
    pub t_max: f64,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

/// Integral k (k = 0, 1 for the powers c and c+1) is `exp(ln_scale)·value[k]`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RayResult {
    pub ln_scale: C64,
    pub value: [C64; 2],
    pub error: [f64; 2],
}

struct Plan {
    beta: f64,
    bp: C64,
    qp: C64,
    eps: f64,
    upper: f64,
    peak: Option<f64>,
    score: f64,
}

impl Ray {
    fn re_exp(&self, bp: C64, qp: C64, u: f64) -> f64 {
        self.c.re * u.ln() - bp.re * u - 0.5 * qp.re.max(0.0) * u * u
    }

    fn peak(&self, bp: C64, qp: C64) -> Option<f64> {
        let (a, b, g) = (self.c.re, bp.re, qp.re.max(0.0));
        if g > 0.0 {
            let disc = b * b + 4.0 * g * a;
            if disc < 0.0 {
                return None;
            }
            let r = (-b + disc.sqrt()) / (2.0 * g);
            (r > 0.0).then_some(r)
        } else if b > 0.0 && a > 0.0 {
            Some(a / b)
        } else {
            None
        }
    }

    fn plan(&self, beta: f64, opts: &RayOptions) -> Option<Result<Plan>> {
        let rot = (I * beta).exp();
        let bp = self.b * rot;
        let qp = self.q * rot * rot;
        let qn = qp.norm();
        let qre = if qp.re.abs() <= 1e-12 * qn { 0.0 } else { qp.re };
        if opts.upper.is_none() && (qre < 0.0 || (qre == 0.0 && bp.re <= 0.0)) {
            return None;
        }
        let mut eps = 0.5f64;
        if bp.norm() > 0.0 {
            eps = eps.min(0.5 / bp.norm());
        }
        if qn > 0.0 {
            eps = eps.min(0.5 / qn.sqrt());
        }
        let peak = self.peak(bp, qp);
        let upper = match opts.upper {
            Some(u) => u,
            None => {
                let top = match peak {
                    Some(p) if p > eps => self.re_exp(bp, qp, p),
                    _ => self.re_exp(bp, qp, eps),
                };
                let mut u = peak.unwrap_or(eps).max(eps) * 2.0;
                let mut n = 0;
                while self.re_exp(bp, qp, u) > top - DROP - u.max(1.0).ln() {
                    u *= 1.5;
                    n += 1;
                    if u > opts.t_max || n > 400 {
                        return Some(Err(Error::Tolerance {
                            what: "ray truncation radius exceeds t_max",
                            estimate: u,
                            target: opts.t_max,
                        }));
                    }
                }
                u
            }
        };
        eps = eps.min(0.25 * upper);
        // phase turns over [ε, upper]; each needs a few panels
        let turns = (0.5 * qp.im.abs() * upper * upper + bp.im.abs() * upper + self.c.im.abs() * (upper / eps).ln())
            / (2.0 * core::f64::consts::PI);
        if opts.upper.is_none() && OSC_PANELS * turns > opts.max_panels as f64 {
            return None;
        }
        // crude log ∫|f| for ranking rays
        let mut terms = Vec::with_capacity(66);
        let n = 64;
        let a = self.c.re;
        terms.push(self.re_exp(bp, qp, eps) + eps.ln() - (a + 1.0).ln());
        let mut prev = eps;
        for j in 1..=n {
            let s = j as f64 / n as f64;
            let u = eps + (upper - eps) * s * s;
            terms.push(self.re_exp(bp, qp, u) + (u - prev).ln());
            prev = u;
        }
        let m = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let lse = m + terms.iter().map(|t| (t - m).exp()).sum::<f64>().ln();
        let score = lse - beta * self.c.im;
        Some(Ok(Plan { beta, bp, qp, eps, upper, peak, score }))
    }

    pub(crate) fn integrate(&self, opts: &RayOptions, ln_prefactor: C64) -> Result<RayResult> {
        let mut best: Option<Plan> = None;
        let mut first_err = None;
        let count = if opts.beta_hi > opts.beta_lo { CANDIDATES } else { 1 };
        for j in 0..count {
            let beta = if count == 1 {
                opts.beta_lo
            } else {
                opts.beta_lo + (opts.beta_hi - opts.beta_lo) * j as f64 / (count - 1) as f64
            };
            match self.plan(beta, opts) {
                None => {}
                Some(Err(e)) => {
                    first_err.get_or_insert(e);
                }
                Some(Ok(p)) if best.as_ref().is_none_or(|b| p.score < b.score) => best = Some(p),
                Some(Ok(_)) => {}
            }
        }
        let plan = match (best, first_err) {
            (Some(p), _) => p,
            (None, Some(e)) => return Err(e),
            (None, None) => return Err(Error::Domain("no admissible integration ray")),
        };
        self.run(&plan, opts, ln_prefactor)
    }

    fn run(&self, plan: &Plan, opts: &RayOptions, ln_prefactor: C64) -> Result<RayResult> {
        let (bp, qp, eps, upper) = (plan.bp, plan.qp, plan.eps, plan.upper);
        let mut scale = self.re_exp(bp, qp, eps).max(self.re_exp(bp, qp, upper));
        if let Some(p) = plan.peak {
            if p > eps && p < upper {
                scale = scale.max(self.re_exp(bp, qp, p));
            }
        }
        let cc = self.c;
        let f = |u: f64| -> [C64; 2] {
            let e = cc * u.ln() - bp * u - 0.5 * qp * u * u - scale;
            let v = e.exp();
            [v, v * u]
        };
        let mut breaks = Vec::with_capacity(40);
        let mut u = eps;
        while u < upper {
            breaks.push(u);
            u *= 2.0;
        }
        breaks.push(upper);
        if let Some(p) = plan.peak {
            if p > eps * 1.1 && p < upper * 0.9 && !breaks.iter().any(|&x| (x - p).abs() < 0.05 * p) {
                breaks.push(p);
                breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
            }
        }
        let ln_scale = ln_prefactor + scale + I * plan.beta * (self.c + 1.0);
        let abs_scaled = (opts.abs_tol.ln() - ln_scale.re).min(700.0).exp();
        let tol = Tolerances { abs: abs_scaled, rel: opts.rel_tol, max_panels: opts.max_panels };
        // Taylor series of e^{−b'u−q'u²/2} integrated against u^c on [0, ε]
        let ln_eps = eps.ln();
        let mut series = [C64::new(0.0, 0.0); 2];
        let base = ((self.c + 1.0) * ln_eps - scale).exp();
        let (mut a_prev, mut a_cur) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
        let mut epow = 1.0f64;
        let mut small_run = 0;
        for n in 0..400usize {
            let nf = n as f64;
            let t0 = a_cur * epow / (self.c + nf + 1.0);
            let t1 = a_cur * epow * eps / (self.c + nf + 2.0);
            series[0] += t0;
            series[1] += t1;
            let small = t0.norm() <= 1e-18 * series[0].norm() && t1.norm() <= 1e-18 * series[1].norm();
            small_run = if small { small_run + 1 } else { 0 };
            if n > 4 && small_run >= 2 {
                break;
            }
            let a_next = (-bp * a_cur - qp * a_prev) / (nf + 1.0);
            a_prev = a_cur;
            a_cur = a_next;
            epow *= eps;
        }
        let base_series = [series[0] * base, series[1] * base];
        let mut r = quad::integrate(f, &breaks, tol)?;
        // the series can cancel part of the panel sum; retighten against the total
        for _ in 0..3 {
            let mut abs = f64::INFINITY;
            for ((v, e), s) in r.value.iter().zip(&r.error).zip(&base_series) {
                let target = tol.abs.max(tol.rel * (v + s).norm());
                if *e > target {
                    abs = abs.min(0.5 * target);
                }
            }
            if !abs.is_finite() {
                break;
            }
            let tight = Tolerances { abs, rel: 0.0, max_panels: tol.max_panels };
            r = quad::integrate(f, &breaks, tight)?;
        }
        let rot = (I * plan.beta).exp();
        let mut value = [C64::new(0.0, 0.0); 2];
        let mut error = [0.0; 2];
        for k in 0..2 {
            value[k] = r.value[k] + base_series[k];
            error[k] = r.error[k];
        }
        value[1] *= rot;
        let out = RayResult { ln_scale, value, error };
        for k in 0..2 {
            let target = tol.abs.max(tol.rel * out.value[k].norm());
            if out.error[k] > target {
                return Err(Error::Tolerance {
                    what: "ray integral",
                    estimate: out.error[k],
                    target,
                });
            }
        }
        Ok(out)
    }
}

/// exp(ln_scale)·v, refusing to overflow.
pub(crate) fn scaled(ln_scale: C64, v: C64, what: &'static str) -> Result<C64> {
    if v == c(0.0, 0.0) {
        return Ok(v);
    }
    let w = ln_scale + v.ln();
    if w.re < -745.0 {
        return Ok(c(0.0, 0.0));
    }
    crate::cmath::exp_checked(w, what)
}
