//! Parabolic cylinder functions D_ν(z) of complex order and the
//! inverted-oscillator solutions
//!
//! v(x) = D_{iλ−½}(e^{−iπ/4}x),   v*(x) = D_{−iλ−½}(e^{iπ/4}x),
//!
//! which solve −y″ − ¼x²y = λy.
//!
//! D_ν comes from its Laplace-type integral when Re ν < 0 and from the
//! three-term order recurrence otherwise. Negative x goes through the
//! connection formulas, so only the positive half-line is ever integrated.
//!
//! Wronskians use W[f,g] = f′g − fg′.

use crate::cmath::{self, c, I, PI};
use crate::error::{Error, Result};
use crate::quad::QuadratureConfig;
use crate::ray::{self, Ray, RayOptions};
use crate::specfun;
use crate::C64;
#[allow(unused_imports)]
use num_traits::Float;

const SQRT_2PI: f64 = 2.5066282746310005024157652848110;
/// Largest tolerated cancellation factor in the order recurrence.
const RECURRENCE_LIMIT: f64 = 1e6;

/// (p, σ, σ_c, h, κ, λ) with λ = −κ/h − iσ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParams {
    p: f64,
    sigma: f64,
    sigma_c: f64,
    h: f64,
    kappa: f64,
    lambda: C64,
}

impl SpectralParams {
    /// Normalised parameters: κ ∈ {−1, +1}, 0 < σ < 1, h > 0, p > 1.
    pub fn new(p: f64, sigma: f64, h: f64, kappa: f64) -> Result<Self> {
        if kappa != 1.0 && kappa != -1.0 {
            return Err(Error::Domain("kappa must be +1 or -1"));
        }
        Self::scaled(p, sigma, h, kappa)
    }

    /// Like [`SpectralParams::new`] but with any nonzero κ, as produced by
    /// the scaling φ ↦ μ^{1/(p−1)}φ(μ·) which sends (h, κ) to (h/μ², κ/μ²).
    pub fn scaled(p: f64, sigma: f64, h: f64, kappa: f64) -> Result<Self> {
        if !(p > 1.0 && p.is_finite()) {
            return Err(Error::Domain("p must exceed 1"));
        }
        if !(sigma > 0.0 && sigma < 1.0) {
            return Err(Error::Domain("sigma must lie in (0, 1)"));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Domain("h must be positive"));
        }
        if !(kappa != 0.0 && kappa.is_finite()) {
            return Err(Error::Domain("kappa must be nonzero"));
        }
        Ok(SpectralParams {
            p,
            sigma,
            sigma_c: 0.5 - 1.0 / (p - 1.0),
            h,
            kappa,
            lambda: c(-kappa / h, -sigma),
        })
    }

    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn sigma(&self) -> f64 {
        self.sigma
    }
    pub fn sigma_c(&self) -> f64 {
        self.sigma_c
    }
    pub fn h(&self) -> f64 {
        self.h
    }
    pub fn kappa(&self) -> f64 {
        self.kappa
    }
    pub fn lambda(&self) -> C64 {
        self.lambda
    }
}

fn ray_options(cfg: &QuadratureConfig) -> RayOptions {
    RayOptions {
        beta_lo: -0.25 * PI,
        beta_hi: 0.25 * PI,
        upper: None,
        t_max: cfg.t_max,
        abs_tol: cfg.abs_tol,
        rel_tol: cfg.rel_tol,
        max_panels: cfg.n_nodes,
    }
}

/// (D_ν(z), D_{ν−1}(z)) from the integral, Re ν < 0.
fn integral_pair(nu: C64, z: C64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    if !(nu.re < 0.0) {
        return Err(Error::Domain("integral representation needs Re nu < 0"));
    }
    if !cmath::is_finite(nu) || !cmath::is_finite(z) {
        return Err(Error::Domain("non-finite argument"));
    }
    cfg.validate()?;
    let ray = Ray { c: -nu - 1.0, b: z, q: c(1.0, 0.0) };
    let ln_pref = -z * z / 4.0 - specfun::log_gamma(-nu)?;
    let r = ray.integrate(&ray_options(cfg), ln_pref)?;
    let d0 = ray::scaled(r.ln_scale, r.value[0], "d_nu")?;
    let d1 = ray::scaled(r.ln_scale - (-nu).ln(), r.value[1], "d_nu")?;
    Ok((d0, d1))
}

/// D_ν(z) = e^{−z²/4}/Γ(−ν) ∫₀^∞ e^{−zt−t²/2} t^{−ν−1} dt for Re ν < 0.
pub fn d_nu_integral(nu: C64, z: C64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(integral_pair(nu, z, cfg)?.0)
}

/// (D_ν(z), D_{ν−1}(z)) for any ν: integral when Re ν < 0, otherwise the
/// integral pair at ν − m (Re ∈ [−1, 0)) followed by m forward steps of
/// D_{μ+1} = zD_μ − μD_{μ−1}.
pub fn d_nu_pair(nu: C64, z: C64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    if nu.re < 0.0 {
        return integral_pair(nu, z, cfg);
    }
    let m = nu.re.floor() + 1.0;
    if m > 1e4 {
        return Err(Error::Domain("order too large for the recurrence"));
    }
    let mut mu = nu - m;
    let (mut cur, mut prev) = integral_pair(mu, z, cfg)?;
    let mut worst = 1.0f64;
    for _ in 0..m as usize {
        let a = z * cur;
        let b = mu * prev;
        let next = a - b;
        let size = a.norm() + b.norm();
        if size > 0.0 {
            worst = worst.max(size / next.norm().max(f64::MIN_POSITIVE));
        }
        prev = cur;
        cur = next;
        mu += 1.0;
    }
    if worst > RECURRENCE_LIMIT {
        return Err(Error::Tolerance {
            what: "order recurrence cancellation",
            estimate: worst,
            target: RECURRENCE_LIMIT,
        });
    }
    Ok((cmath::finite(cur, "d_nu")?, cmath::finite(prev, "d_nu")?))
}

/// D_ν(z) for any complex order.
pub fn d_nu(nu: C64, z: C64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(d_nu_pair(nu, z, cfg)?.0)
}

/// (D_ν(z), D′_ν(z)) with D′_ν = −(z/2)D_ν + νD_{ν−1}.
pub fn d_nu_with_derivative(nu: C64, z: C64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    let (d, dm1) = d_nu_pair(nu, z, cfg)?;
    Ok((d, -0.5 * z * d + nu * dm1))
}

/// D_ν(z) through one recurrence step from the integral pair at ν − 1.
/// Meant for validating the recurrence on −1 < Re ν < 0.
pub fn d_nu_by_recurrence(nu: C64, z: C64, cfg: &QuadratureConfig) -> Result<C64> {
    let (a, b) = integral_pair(nu - 1.0, z, cfg)?;
    Ok(z * a - (nu - 1.0) * b)
}

/// (D_ν(0), D′_ν(0)) = (√π 2^{ν/2}/Γ((1−ν)/2), −√π 2^{(ν+1)/2}/Γ(−ν/2)).
pub fn d_at_zero(nu: C64) -> Result<(C64, C64)> {
    let sqrt_pi = PI.sqrt();
    let ln2 = core::f64::consts::LN_2;
    let d0 = sqrt_pi * (nu * 0.5 * ln2).exp() * specfun::rgamma((1.0 - nu) * 0.5)?;
    let d1 = -sqrt_pi * ((nu + 1.0) * 0.5 * ln2).exp() * specfun::rgamma(-nu * 0.5)?;
    Ok((cmath::finite(d0, "d_at_zero")?, cmath::finite(d1, "d_at_zero")?))
}

fn e_quarter(sign: f64) -> C64 {
    (I * (sign * PI / 4.0)).exp()
}

/// (v, v′) at x ≥ 0.
fn v_pos(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    let rot = e_quarter(-1.0);
    let (d, dp) = d_nu_with_derivative(I * lambda - 0.5, rot * x, cfg)?;
    Ok((d, rot * dp))
}

/// (v*, v*′) at x ≥ 0.
fn vs_pos(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    let rot = e_quarter(1.0);
    let (d, dp) = d_nu_with_derivative(-I * lambda - 0.5, rot * x, cfg)?;
    Ok((d, rot * dp))
}

/// (v(x), v′(x)) for any real x.
pub fn v_pair(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    if !x.is_finite() || !cmath::is_finite(lambda) {
        return Err(Error::Domain("non-finite argument"));
    }
    if x >= 0.0 {
        return v_pos(x, lambda, cfg);
    }
    let (a, ap) = v_pos(-x, lambda, cfg)?;
    let (b, bp) = vs_pos(-x, lambda, cfg)?;
    let k1 = -I * (-PI * lambda).exp();
    let k2 = SQRT_2PI * specfun::rgamma(0.5 - I * lambda)? * (-PI * lambda / 2.0).exp() * e_quarter(1.0);
    let v = k1 * a + k2 * b;
    let vp = -(k1 * ap + k2 * bp);
    Ok((cmath::finite(v, "v")?, cmath::finite(vp, "v")?))
}

/// (v*(x), v*′(x)) for any real x.
pub fn v_star_pair(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    if !x.is_finite() || !cmath::is_finite(lambda) {
        return Err(Error::Domain("non-finite argument"));
    }
    if x >= 0.0 {
        return vs_pos(x, lambda, cfg);
    }
    let (a, ap) = vs_pos(-x, lambda, cfg)?;
    let (b, bp) = v_pos(-x, lambda, cfg)?;
    let k1 = I * (-PI * lambda).exp();
    let k2 = e_quarter(-1.0) * (-PI * lambda / 2.0).exp() * SQRT_2PI * specfun::rgamma(I * lambda + 0.5)?;
    let v = k1 * a + k2 * b;
    let vp = -(k1 * ap + k2 * bp);
    Ok((cmath::finite(v, "v_star")?, cmath::finite(vp, "v_star")?))
}

pub fn v(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(v_pair(x, lambda, cfg)?.0)
}

pub fn v_prime(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(v_pair(x, lambda, cfg)?.1)
}

pub fn v_star(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(v_star_pair(x, lambda, cfg)?.0)
}

pub fn v_star_prime(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(v_star_pair(x, lambda, cfg)?.1)
}

/// v from the rotated integral only; refuses Im λ ≤ −½ where that integral
/// diverges (see [`v_pair`] for the recurrence-backed version).
pub fn v_integral(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<C64> {
    if !(lambda.im > -0.5) {
        return Err(Error::Domain("v integral needs Im lambda > -1/2"));
    }
    v(x, lambda, cfg)
}

/// v* from the rotated integral only; refuses Im λ ≥ ½.
pub fn v_star_integral(x: f64, lambda: C64, cfg: &QuadratureConfig) -> Result<C64> {
    if !(lambda.im < 0.5) {
        return Err(Error::Domain("v* integral needs Im lambda < 1/2"));
    }
    v_star(x, lambda, cfg)
}

/// Closed forms v(0), v′(0).
pub fn v_at_zero(lambda: C64) -> Result<(C64, C64)> {
    let (d, dp) = d_at_zero(I * lambda - 0.5)?;
    Ok((d, e_quarter(-1.0) * dp))
}

/// Closed forms v*(0), v*′(0).
pub fn v_star_at_zero(lambda: C64) -> Result<(C64, C64)> {
    let (d, dp) = d_at_zero(-I * lambda - 0.5)?;
    Ok((d, e_quarter(1.0) * dp))
}

/// (w(x), w′(x)) with w(x) = v(h^{1/2}x).
pub fn w_pair(x: f64, lambda: C64, h: f64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    if !(h > 0.0) {
        return Err(Error::Domain("h must be positive"));
    }
    let s = h.sqrt();
    let (a, ap) = v_pair(s * x, lambda, cfg)?;
    Ok((a, s * ap))
}

/// (w*(x), w*′(x)) with w*(x) = v*(h^{1/2}x).
pub fn w_star_pair(x: f64, lambda: C64, h: f64, cfg: &QuadratureConfig) -> Result<(C64, C64)> {
    if !(h > 0.0) {
        return Err(Error::Domain("h must be positive"));
    }
    let s = h.sqrt();
    let (a, ap) = v_star_pair(s * x, lambda, cfg)?;
    Ok((a, s * ap))
}

pub fn w(x: f64, lambda: C64, h: f64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(w_pair(x, lambda, h, cfg)?.0)
}

pub fn w_star(x: f64, lambda: C64, h: f64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(w_star_pair(x, lambda, h, cfg)?.0)
}

/// |D_ν(z) − e^{iπν}D_ν(−z) − e^{iπ(ν+1)/2}(√(2π)/Γ(−ν))D_{−ν−1}(−iz)|.
pub fn connection_residual(nu: C64, z: C64, cfg: &QuadratureConfig) -> Result<f64> {
    let a = d_nu(nu, z, cfg)?;
    let b = d_nu(nu, -z, cfg)?;
    let rg = specfun::rgamma(-nu)?;
    let third = if rg == c(0.0, 0.0) {
        c(0.0, 0.0)
    } else {
        (I * PI * (nu + 1.0) / 2.0).exp() * SQRT_2PI * rg * d_nu(-nu - 1.0, -I * z, cfg)?
    };
    Ok((a - (I * PI * nu).exp() * b - third).norm())
}

/// Numeric and closed-form Wronskians at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WronskianReport {
    /// W[v, v*](x) from quadrature.
    pub numeric: C64,
    /// i e^{πλ/2}.
    pub closed_form: C64,
    /// W[v(·), v(−·)](x) from quadrature.
    pub reflected_numeric: C64,
    /// −e^{−iπ/4}√(2π)/Γ(½−iλ).
    pub reflected_closed_form: C64,
}

impl WronskianReport {
    /// |numeric − closed| / |e^{πλ/2}|.
    pub fn relative_error(&self) -> f64 {
        (self.numeric - self.closed_form).norm() / self.closed_form.norm()
    }

    pub fn reflected_relative_error(&self) -> f64 {
        (self.reflected_numeric - self.reflected_closed_form).norm()
            / self.reflected_closed_form.norm().max(f64::MIN_POSITIVE)
    }
}

pub fn wronskian_check(lambda: C64, x: f64, cfg: &QuadratureConfig) -> Result<WronskianReport> {
    let (a, ap) = v_pair(x, lambda, cfg)?;
    let (b, bp) = v_star_pair(x, lambda, cfg)?;
    let (m, mp) = v_pair(-x, lambda, cfg)?;
    let numeric = ap * b - a * bp;
    let closed_form = I * (PI * lambda / 2.0).exp();
    // g(x) = v(−x), g′(x) = −v′(−x)
    let reflected_numeric = ap * m + a * mp;
    let reflected_closed_form = -e_quarter(-1.0) * SQRT_2PI * specfun::rgamma(0.5 - I * lambda)?;
    Ok(WronskianReport { numeric, closed_form, reflected_numeric, reflected_closed_form })
}

/// Leading x → +∞ term x^{iλ−½} e^{ix²/4} e^{πλ/4} e^{iπ/8}.
pub fn v_asym_plus(x: f64, lambda: C64) -> C64 {
    let x = x.abs();
    ((I * lambda - 0.5) * x.ln() + I * (x * x / 4.0) + PI * lambda / 4.0 + I * (PI / 8.0)).exp()
}

/// Two-term x → −∞ form, evaluated at −|x|.
pub fn v_asym_minus(x: f64, lambda: C64) -> Result<C64> {
    let y = x.abs();
    let ly = y.ln();
    let ph = I * (y * y / 4.0);
    let first = -I * (I * (PI / 8.0) - 3.0 * PI * lambda / 4.0 + (I * lambda - 0.5) * ly + ph).exp();
    let second = SQRT_2PI
        * specfun::rgamma(0.5 - I * lambda)?
        * (I * (PI / 8.0) - PI * lambda / 4.0 + (-I * lambda - 0.5) * ly - ph).exp();
    cmath::finite(first + second, "v_asym_minus")
}

/// Relative error band |Γ(Im λ + 5/2)/Γ(½ − iλ)|·x⁻² of the x → ∞ form.
pub fn asym_error_band(x: f64, lambda: C64) -> Result<f64> {
    let num = specfun::log_gamma(c(lambda.im + 2.5, 0.0))?;
    let den = specfun::log_gamma(0.5 - I * lambda)?;
    Ok((num.re - den.re).exp() / (x * x))
}
