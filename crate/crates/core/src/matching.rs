//! The matching function A(λ) = −v′(0)/v(0) at λ = −κ/h − iσ and its phase
//! f(σ, h⁻¹) = Im log A.
//!
//! Two equivalent representations are available. The gamma form is a ratio
//! Γ(¾−σ/2+iκ/2h)/Γ(¼−σ/2+iκ/2h); the stable form pulls the exponentially
//! large and small factors out explicitly, which keeps both A and its phase
//! accurate as h → 0.

use crate::cmath::{self, c, log1p, I, PI};
use crate::error::{Error, Result};
use crate::specfun::{log_gamma, log_gamma_limit, log_gamma_ratio, digamma_half_gap};
use crate::C64;
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// h⁻¹ above which [`f_phase`] switches to the stable form.
pub const SWITCH_H_INV: f64 = 4.0;

const LN_SQRT2: f64 = 0.34657359027997265470861606072909;
const LN_2PI: f64 = cmath::LN_2PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    /// Ratio of two gamma functions.
    Gamma,
    /// Explicit exponential factors times a gamma ratio at shift σ.
    Stable,
}

/// f together with the pieces it was assembled from.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseValue {
    pub f: f64,
    /// The constant term of the representation (−π/4, −σπ/2 or σπ/2 − π/2).
    pub constant: f64,
    /// Signed imaginary parts of the logarithmic terms; `f = constant + Σ`.
    pub branch_terms: Vec<f64>,
    pub representation: Representation,
}

fn check_kappa(kappa: f64) -> Result<f64> {
    if kappa == 1.0 || kappa == -1.0 {
        Ok(kappa)
    } else {
        Err(Error::Domain("kappa must be +1 or -1"))
    }
}

fn check_h(h: f64) -> Result<f64> {
    if h > 0.0 && !h.is_nan() {
        Ok(1.0 / h)
    } else {
        Err(Error::Domain("h must be positive"))
    }
}

/// A from the gamma ratio. `h = ∞` is accepted and gives the h⁻¹ = 0 value.
pub fn a_gamma(sigma: f64, h: f64, kappa: f64) -> Result<C64> {
    let kappa = check_kappa(kappa)?;
    let h_inv = check_h(h)?;
    if !sigma.is_finite() {
        return Err(Error::Domain("sigma must be finite"));
    }
    let z = c(0.25 - 0.5 * sigma, 0.5 * kappa * h_inv);
    let pref = (-I * (PI / 4.0)).exp() * 2f64.sqrt();
    if z.im == 0.0 && z.re <= 0.0 {
        let num = crate::specfun::gamma(z + 0.5)?;
        let den = crate::specfun::rgamma(z)?;
        return cmath::finite(pref * num * den, "a_gamma");
    }
    let ln = log_gamma(z + 0.5)? - log_gamma(z)?;
    cmath::finite(pref * cmath::exp_checked(ln, "a_gamma")?, "a_gamma")
}

/// log A from the stable representation.
pub fn log_a_stable(sigma: f64, h: f64, kappa: f64) -> Result<C64> {
    let kappa = check_kappa(kappa)?;
    let h_inv = check_h(h)?;
    if !(sigma > 0.0 && sigma < 1.0) {
        return Err(Error::Domain("sigma must lie in (0, 1)"));
    }
    let z = c(0.25 - 0.5 * sigma, 0.5 * kappa * h_inv);
    let ln_abs_gamma = log_gamma(z)?.re;
    let damp = (-PI * h_inv).exp();
    // κ = +1: 2π e^{−iσπ/2}/(1 + i e^{−iσπ}e^{−π/h}) · Γ(z̄)/Γ(z̄+σ)
    // κ = −1: −2πi e^{iσπ/2}/(1 − i e^{iσπ}e^{−π/h}) · Γ(z̄)/Γ(z̄+σ)
    let (phase, u) = if kappa > 0.0 {
        (-0.5 * sigma * PI, I * (-I * sigma * PI).exp() * damp)
    } else {
        (0.5 * sigma * PI - 0.5 * PI, -I * (I * sigma * PI).exp() * damp)
    };
    let ratio = log_gamma_ratio(z.conj(), sigma)?;
    let re = LN_SQRT2 - 2.0 * ln_abs_gamma + LN_2PI - 0.5 * PI * h_inv;
    Ok(c(re, phase) - log1p(u) - ratio)
}

/// A from the stable representation.
pub fn a_stable(sigma: f64, h: f64, kappa: f64) -> Result<C64> {
    let ln = log_a_stable(sigma, h, kappa)?;
    cmath::exp_checked(ln, "a_stable")
}

fn check_phase_args(sigma: f64, h_inv: f64, kappa: f64) -> Result<f64> {
    let kappa = check_kappa(kappa)?;
    if !(0.0..=1.0).contains(&sigma) {
        return Err(Error::Domain("sigma must lie in [0, 1]"));
    }
    if !(h_inv >= 0.0 && h_inv.is_finite()) {
        return Err(Error::Domain("h_inv must be finite and nonnegative"));
    }
    Ok(kappa)
}

/// Im log Γ(z) with z = ¼ − σ/2 + iκh⁻¹/2, taking the limit h⁻¹ ↘ 0 on the
/// real axis.
fn im_log_gamma_lower(sigma: f64, h_inv: f64, kappa: f64) -> Result<f64> {
    let x = 0.25 - 0.5 * sigma;
    if h_inv > 0.0 || x > 0.0 {
        return Ok(log_gamma(c(x, 0.5 * kappa * h_inv))?.im);
    }
    if x == 0.0 {
        // Γ(iδ) ~ 1/(iδ)
        return Ok(-kappa * 0.5 * PI);
    }
    Ok(log_gamma_limit(x, kappa > 0.0)?.im)
}

/// f from the gamma form.
pub fn f_phase_gamma(sigma: f64, h_inv: f64, kappa: f64) -> Result<PhaseValue> {
    let kappa = check_phase_args(sigma, h_inv, kappa)?;
    let upper = log_gamma(c(0.75 - 0.5 * sigma, 0.5 * kappa * h_inv))?.im;
    let lower = im_log_gamma_lower(sigma, h_inv, kappa)?;
    let constant = -0.25 * PI;
    let branch_terms = vec![upper, -lower];
    Ok(PhaseValue { f: constant + upper - lower, constant, branch_terms, representation: Representation::Gamma })
}

/// f from the stable form. Needs h⁻¹ > 0 when σ ≥ ½.
pub fn f_phase_stable(sigma: f64, h_inv: f64, kappa: f64) -> Result<PhaseValue> {
    let kappa = check_phase_args(sigma, h_inv, kappa)?;
    let damp = (-PI * h_inv).exp();
    let (constant, u) = if kappa > 0.0 {
        (-0.5 * sigma * PI, I * (-I * sigma * PI).exp() * damp)
    } else {
        (0.5 * sigma * PI - 0.5 * PI, -I * (I * sigma * PI).exp() * damp)
    };
    let z = c(0.25 - 0.5 * sigma, -0.5 * kappa * h_inv);
    let log_term = -log1p(u).im;
    let gamma_term = -log_gamma_ratio(z, sigma)?.im;
    let branch_terms = vec![log_term, gamma_term];
    Ok(PhaseValue {
        f: constant + log_term + gamma_term,
        constant,
        branch_terms,
        representation: Representation::Stable,
    })
}

/// f(σ, h⁻¹) = Im log A, gamma form for h⁻¹ ≤ 4 and stable form above.
pub fn f_phase(sigma: f64, h_inv: f64, kappa: f64) -> Result<PhaseValue> {
    if h_inv > SWITCH_H_INV {
        f_phase_stable(sigma, h_inv, kappa)
    } else {
        f_phase_gamma(sigma, h_inv, kappa)
    }
}

/// ∂f/∂σ = ½ Im(ψ(z) − ψ(z+½)), z = ¼ − σ/2 + iκh⁻¹/2.
pub fn f_phase_dsigma(sigma: f64, h_inv: f64, kappa: f64) -> Result<f64> {
    let kappa = check_phase_args(sigma, h_inv, kappa)?;
    let z = c(0.25 - 0.5 * sigma, 0.5 * kappa * h_inv);
    Ok(0.5 * digamma_half_gap(z)?.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representations_agree() {
        for &kappa in &[1.0, -1.0] {
            for &h_inv in &[0.1, 0.7, 2.0, 4.0, 9.0, 20.0] {
                for &sigma in &[0.01, 0.3, 0.5, 0.77, 0.99] {
                    let a = f_phase_gamma(sigma, h_inv, kappa).unwrap().f;
                    let b = f_phase_stable(sigma, h_inv, kappa).unwrap().f;
                    assert!((a - b).abs() < 1e-9, "{kappa} {h_inv} {sigma}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn a_forms_agree() {
        for &(s, h, k) in &[(0.3, 1.0, 1.0), (0.1, 0.5, -1.0), (0.5, 0.2, -1.0), (0.8, 3.0, 1.0)] {
            let a = a_gamma(s, h, k).unwrap();
            let b = a_stable(s, h, k).unwrap();
            assert!((a - b).norm() <= 1e-9 * a.norm(), "{a} {b}");
        }
    }

    #[test]
    fn phase_sum_invariant() {
        let v = f_phase(0.25, 2.0, 1.0).unwrap();
        let s: f64 = v.branch_terms.iter().sum();
        assert_eq!(v.f, v.constant + s);
    }

    #[test]
    fn sigma_zero_closed_form() {
        for &h_inv in &[0.5, 2.0, 6.0] {
            let f = f_phase(0.0, h_inv, 1.0).unwrap().f;
            let expect = -log1p(I * (-PI * h_inv).exp()).im;
            assert!((f - expect).abs() < 1e-12);
            assert!(f < 0.0 && f > -0.5 * PI);
        }
    }

    #[test]
    fn derivative_matches_difference() {
        for &(s, h_inv, k) in &[(0.5, 1.0, 1.0), (0.2, 3.0, 1.0), (0.5, 1.0, -1.0), (0.7, 6.0, -1.0)] {
            let d = f_phase_dsigma(s, h_inv, k).unwrap();
            let e = 1e-5;
            let fd = (f_phase(s + e, h_inv, k).unwrap().f - f_phase(s - e, h_inv, k).unwrap().f) / (2.0 * e);
            assert!((d - fd).abs() < 1e-6);
            assert!(d * k > 0.0);
        }
    }

    #[test]
    fn zero_h_inv_limits() {
        let a = a_gamma(0.5, f64::INFINITY, 1.0).unwrap();
        assert_eq!(a, c(0.0, 0.0));
        let lim = f_phase(0.5, 0.0, 1.0).unwrap().f;
        let near = f_phase(0.5, 1e-9, 1.0).unwrap().f;
        assert!((lim - near).abs() < 1e-6);
        let lim = f_phase(0.8, 0.0, 1.0).unwrap().f;
        let near = f_phase(0.8, 1e-9, 1.0).unwrap().f;
        assert!((lim - near).abs() < 1e-6);
    }
}
