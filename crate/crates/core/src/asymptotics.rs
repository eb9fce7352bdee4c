//! Small-h asymptotics of v(x) for λ = −1/h − iσ.
//!
//! After rescaling, v(x) is a fixed prefactor times
//!
//! g(α, h⁻¹) = ∫₀^∞ e^{h⁻¹ p_α(z)} z^{−σ−½} dz,  p_α(z) = −iz²/(8α²) − z + i log z,
//!
//! with α = ½h^{1/2}x. Deforming the real axis to the segment γ₃ = [0, 2iα²]
//! followed by the horizontal line γ₂ = 2iα² + [0, ∞) splits g = g₂ + g₃.
//! For α < 1 the line γ₂ carries an interior Laplace point at
//! θ₀ = arcsin α (z = 2α²(cot θ + i)); for α > 1 the segment carries a
//! stationary phase point s₀ = 2/(1 + √(1 − α⁻²)).

use crate::cmath::{self, c, I, PI};
use crate::error::{Error, Result};
use crate::quad::{self, QuadratureConfig, Tolerances};
use crate::ray::{self, Ray, RayOptions};
use crate::specfun;
use crate::weber::SpectralParams;
use crate::C64;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// Neither stationary point is trusted for α in this band.
pub const TRANSITION_BAND: (f64, f64) = (0.85, 1.15);

// g is exponentially small in h⁻¹, so only relative accuracy is meaningful.
const REL_ONLY: f64 = f64::MIN_POSITIVE;

/// α = ½h^{1/2}x together with h and σ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningParams {
    pub alpha_t: f64,
    pub h: f64,
    pub sigma: f64,
}

impl TurningParams {
    pub fn new(x: f64, h: f64, sigma: f64) -> Result<Self> {
        if !(h > 0.0 && h.is_finite() && x.is_finite()) {
            return Err(Error::Domain("need h > 0 and finite x"));
        }
        Ok(TurningParams { alpha_t: 0.5 * h.sqrt() * x, h, sigma })
    }

    /// The x this α corresponds to.
    pub fn x(&self) -> f64 {
        2.0 * self.alpha_t / self.h.sqrt()
    }
}

/// f_α(θ) = α² cot θ + θ, minus the modulus exponent along γ₂.
pub fn landscape_f(alpha: f64, theta: f64) -> f64 {
    alpha * alpha / theta.tan() + theta
}

/// ν_α(θ) = Im p_α on γ₂.
pub fn landscape_nu(alpha: f64, theta: f64) -> f64 {
    let csc = 1.0 / theta.sin();
    -0.5 * alpha * alpha * csc * csc + csc.ln() - alpha * alpha + (2.0 * alpha * alpha).ln()
}

/// φ_α(s) = s²/(8α²) − s + log s, the phase along γ₃.
pub fn landscape_phi(alpha: f64, s: f64) -> f64 {
    s * s / (8.0 * alpha * alpha) - s + s.ln()
}

/// S(y) = y√(1−y²) + arcsin y on [0, 1].
pub fn wkb_action(y: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&y) {
        return Err(Error::Domain("S needs 0 <= y <= 1"));
    }
    Ok(y * (1.0 - y * y).sqrt() + y.asin())
}

fn check_h(h: f64) -> Result<f64> {
    if h > 0.0 && h.is_finite() {
        Ok(1.0 / h)
    } else {
        Err(Error::Domain("h must be positive"))
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("alpha must be positive"))
    }
}

/// Inner WKB form of the profile: 2^{1/2}(1−y²)^{−1/4}e^{−S(y)/h}, y = ½hx.
pub fn wkb_inner_phi(x: f64, h: f64) -> Result<C64> {
    let h_inv = check_h(h)?;
    let y = 0.5 * h * x.abs();
    if !(y < 1.0) {
        return Err(Error::Domain("inner form needs hx/2 < 1"));
    }
    let s = wkb_action(y)?;
    Ok(c(2f64.sqrt() * (1.0 - y * y).powf(-0.25) * (-h_inv * s).exp(), 0.0))
}

/// Outer form c_h e^{ix²/4} x^{−ih⁻¹+σ−½}, c_h = 2e^{iπ/4}e^{−ih⁻¹/2}e^{−π/(2h)}.
pub fn wkb_outer_phi(x: f64, h: f64, sigma: f64) -> Result<C64> {
    let h_inv = check_h(h)?;
    if !(x > 0.0) {
        return Err(Error::Domain("outer form needs x > 0"));
    }
    let ln_ch = 2f64.ln() + I * (PI / 4.0) - I * (0.5 * h_inv) - 0.5 * PI * h_inv;
    Ok((ln_ch + I * (0.25 * x * x) + c(sigma - 0.5, -h_inv) * x.ln()).exp())
}

/// Leading inner behaviour of v without its normalising constant:
/// (1−α)^{−1/4}e^{−h⁻¹[arcsin α + α(1−α²)^{1/2}]}, α = ½h^{1/2}x.
pub fn leading_inner_v(x: f64, h: f64) -> Result<C64> {
    let h_inv = check_h(h)?;
    let a = 0.5 * h.sqrt() * x.abs();
    if !(a < 1.0) {
        return Err(Error::Domain("inner form needs alpha < 1"));
    }
    Ok(c((1.0 - a).powf(-0.25) * (-h_inv * wkb_action(a)?).exp(), 0.0))
}

/// Leading outer behaviour of v without its normalising constant:
/// e^{ix²/4}x^{−ih⁻¹+σ−½}.
pub fn leading_outer_v(x: f64, h: f64, sigma: f64) -> Result<C64> {
    let h_inv = check_h(h)?;
    if !(x > 0.0) {
        return Err(Error::Domain("outer form needs x > 0"));
    }
    Ok((I * (0.25 * x * x) + c(sigma - 0.5, -h_inv) * x.ln()).exp())
}

fn exponent_c(h_inv: f64, sigma: f64) -> C64 {
    c(-sigma - 0.5, h_inv)
}

/// g by quadrature along rays from the origin into the fourth quadrant
/// (β ∈ [−7π/16, 0]), where the integrand decays.
pub fn g_direct(alpha_t: f64, h_inv: f64, sigma: f64, cfg: &QuadratureConfig) -> Result<C64> {
    check_alpha(alpha_t)?;
    if !(h_inv > 0.0 && h_inv.is_finite()) {
        return Err(Error::Domain("h_inv must be positive"));
    }
    cfg.validate()?;
    let ray = Ray { c: exponent_c(h_inv, sigma), b: c(h_inv, 0.0), q: c(0.0, h_inv / (4.0 * alpha_t * alpha_t)) };
    let opts = RayOptions {
        beta_lo: -7.0 * PI / 16.0,
        beta_hi: 0.0,
        upper: None,
        t_max: cfg.t_max,
        abs_tol: REL_ONLY,
        rel_tol: cfg.rel_tol,
        max_panels: cfg.n_nodes,
    };
    let r = ray.integrate(&opts, c(0.0, 0.0))?;
    ray::scaled(r.ln_scale, r.value[0], "g_direct")
}

/// g₃ = ∫ over z = is, s ∈ [0, 2α²], by quadrature.
pub fn g3_exact(alpha_t: f64, h_inv: f64, sigma: f64, cfg: &QuadratureConfig) -> Result<C64> {
    check_alpha(alpha_t)?;
    if !(h_inv > 0.0 && h_inv.is_finite()) {
        return Err(Error::Domain("h_inv must be positive"));
    }
    cfg.validate()?;
    let cc = exponent_c(h_inv, sigma);
    let ray = Ray { c: cc, b: c(0.0, h_inv), q: c(0.0, -h_inv / (4.0 * alpha_t * alpha_t)) };
    let opts = RayOptions {
        beta_lo: 0.0,
        beta_hi: 0.0,
        upper: Some(2.0 * alpha_t * alpha_t),
        t_max: cfg.t_max,
        abs_tol: REL_ONLY,
        rel_tol: cfg.rel_tol,
        max_panels: cfg.n_nodes,
    };
    // z = is: z^c = e^{iπc/2}s^c, dz = i ds
    let ln_pref = I * (PI / 2.0) * cc + I * (PI / 2.0);
    let r = ray.integrate(&opts, ln_pref)?;
    ray::scaled(r.ln_scale, r.value[0], "g3_exact")
}

/// g₂ = ∫ over z = 2iα² + u, u ∈ [0, ∞), by quadrature.
pub fn g2_exact(alpha_t: f64, h_inv: f64, sigma: f64, cfg: &QuadratureConfig) -> Result<C64> {
    check_alpha(alpha_t)?;
    if !(h_inv > 0.0 && h_inv.is_finite()) {
        return Err(Error::Domain("h_inv must be positive"));
    }
    cfg.validate()?;
    let a2 = alpha_t * alpha_t;
    let y = 2.0 * a2;
    let cc = exponent_c(h_inv, sigma);
    let exponent = |u: f64| -> C64 {
        let z = c(u, y);
        h_inv * (-I * z * z / (8.0 * a2) - z) + cc * z.ln()
    };
    // modulus peak: interior Laplace point for α < 1, else the corner u = 0
    let u0 = if alpha_t < 1.0 { 2.0 * alpha_t * (1.0 - a2).sqrt() } else { 0.0 };
    let shift = exponent(u0).re;
    let width = if alpha_t < 1.0 {
        // second derivative of f along u at the peak
        let th = alpha_t.asin();
        let fpp = 2.0 * a2 * th.cos() / th.sin().powi(3);
        let du = 2.0 * a2 / (th.sin() * th.sin());
        du * (1.0 / (h_inv * fpp)).sqrt()
    } else {
        1.0 / h_inv
    };
    let mut upper = (u0 + width).max(1.0);
    let mut n = 0;
    while exponent(upper).re - shift > -(50.0 + upper.ln().max(0.0)) {
        upper *= 1.5;
        n += 1;
        if upper > cfg.t_max || n > 200 {
            return Err(Error::Tolerance { what: "g2 truncation exceeds t_max", estimate: upper, target: cfg.t_max });
        }
    }
    let mut breaks: Vec<f64> = Vec::with_capacity(64);
    breaks.push(0.0);
    let mut k = -8.0;
    while k <= 8.0 {
        let b = u0 + k * width;
        if b > 0.0 && b < upper {
            breaks.push(b);
        }
        k += 1.0;
    }
    let mut b = breaks.last().copied().unwrap_or(0.0).max(width);
    while b * 1.5 < upper {
        b *= 1.5;
        breaks.push(b);
    }
    breaks.push(upper);
    breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    breaks.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * b.abs().max(1.0));
    let tol = Tolerances {
        abs: (REL_ONLY.ln() - shift).min(700.0).exp(),
        rel: cfg.rel_tol,
        max_panels: cfg.n_nodes,
    };
    let r = quad::integrate(|u| [(exponent(u) - shift).exp()], &breaks, tol)?;
    r.certify(&tol, "g2_exact")?;
    ray::scaled(c(shift, 0.0), r.value[0], "g2_exact")
}

/// g₂ + g₃ from the two contour quadratures; equals g.
pub fn g_split(alpha_t: f64, h_inv: f64, sigma: f64, cfg: &QuadratureConfig) -> Result<C64> {
    Ok(g2_exact(alpha_t, h_inv, sigma, cfg)? + g3_exact(alpha_t, h_inv, sigma, cfg)?)
}

/// Laplace approximation of g₂ at θ₀ = arcsin α, 0 < α < 1.
pub fn g2_stationary(alpha_t: f64, h_inv: f64, sigma: f64) -> Result<C64> {
    check_alpha(alpha_t)?;
    if !(alpha_t < 1.0) {
        return Err(Error::Domain("g2 stationary point needs alpha < 1"));
    }
    if !(h_inv > 0.0 && h_inv.is_finite()) {
        return Err(Error::Domain("h_inv must be positive"));
    }
    let a = alpha_t;
    let th = a.asin();
    let f0 = a * (1.0 - a * a).sqrt() + th;
    let nu0 = -0.5 - a * a + (2.0 * a).ln();
    let curv = 2.0 * (1.0 - a * a).sqrt() / (a * a) * (I * (0.5 * PI - th)).exp();
    let ln = (0.5 - sigma) * (2.0 * a * a).ln() + h_inv * c(-f0, nu0) - I * ((sigma + 0.5) * th)
        + (sigma - 1.5) * a.ln()
        + 0.5 * (2.0 * PI / h_inv).ln()
        - 0.5 * curv.ln();
    cmath::exp_checked(ln, "g2_stationary")
}

/// Stationary-phase approximation of g₃ at s₀, α > 1.
pub fn g3_stationary(alpha_t: f64, h_inv: f64, sigma: f64) -> Result<C64> {
    check_alpha(alpha_t)?;
    if !(alpha_t > 1.0) {
        return Err(Error::Domain("g3 stationary point needs alpha > 1"));
    }
    if !(h_inv > 0.0 && h_inv.is_finite()) {
        return Err(Error::Domain("h_inv must be positive"));
    }
    let q = (1.0 - 1.0 / (alpha_t * alpha_t)).sqrt();
    let s0 = 2.0 / (1.0 + q);
    let phi0 = landscape_phi(alpha_t, s0);
    let curv = 0.5 * q * (1.0 + q);
    let ln = -0.5 * PI * h_inv - I * (0.5 * PI * sigma) + I * (h_inv * phi0) - (sigma + 0.5) * s0.ln()
        + 0.5 * (2.0 * PI / (h_inv * curv)).ln();
    cmath::exp_checked(ln, "g3_stationary")
}

/// α ≫ 1 limit of [`g3_stationary`]: (2πh)^{1/2}e^{−π/(2h)}e^{−iπσ/2}e^{−ih⁻¹}.
pub fn g3_far(h_inv: f64, sigma: f64) -> Result<C64> {
    if !(h_inv > 0.0 && h_inv.is_finite()) {
        return Err(Error::Domain("h_inv must be positive"));
    }
    let ln = -0.5 * PI * h_inv - I * (0.5 * PI * sigma) - I * h_inv + 0.5 * (2.0 * PI / h_inv).ln();
    cmath::exp_checked(ln, "g3_far")
}

/// log of the factor taking g(α, h⁻¹) to v(x):
/// e^{ix²/4}(hx)^{−ih⁻¹+σ−½}e^{−π/(4h)}e^{−iσπ/4}e^{iπ/8}/Γ(ih⁻¹−σ+½).
pub fn ln_v_prefactor(x: f64, h: f64, sigma: f64) -> Result<C64> {
    let h_inv = check_h(h)?;
    if !(x > 0.0) {
        return Err(Error::Domain("need x > 0"));
    }
    let lg = specfun::log_gamma(c(0.5 - sigma, h_inv))?;
    Ok(I * (0.25 * x * x) + c(sigma - 0.5, -h_inv) * (h * x).ln() - 0.25 * PI * h_inv - I * (0.25 * PI * sigma)
        + I * (PI / 8.0)
        - lg)
}

/// v(x) from a value of g at α = ½h^{1/2}x.
pub fn v_from_g(x: f64, h: f64, sigma: f64, g: C64) -> Result<C64> {
    if g == c(0.0, 0.0) {
        return Ok(g);
    }
    cmath::exp_checked(ln_v_prefactor(x, h, sigma)? + g.ln(), "v_from_g")
}

/// v(x) for x > 0 from the stationary point on whichever side of the
/// turning point x = 2h^{−1/2} x lies; `Domain` inside the transition band.
pub fn turning_asymp_v(x: f64, params: &SpectralParams) -> Result<C64> {
    if params.kappa() != 1.0 {
        return Err(Error::Domain("turning-point asymptotics need kappa = 1"));
    }
    let tp = TurningParams::new(x, params.h(), params.sigma())?;
    if !(x > 0.0) {
        return Err(Error::Domain("need x > 0"));
    }
    let h_inv = 1.0 / params.h();
    let a = tp.alpha_t;
    let g = if a < TRANSITION_BAND.0 {
        g2_stationary(a, h_inv, tp.sigma)?
    } else if a > TRANSITION_BAND.1 {
        g3_stationary(a, h_inv, tp.sigma)?
    } else {
        return Err(Error::Domain("x lies in the turning-point transition band"));
    };
    v_from_g(x, params.h(), tp.sigma, g)
}
