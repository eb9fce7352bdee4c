//! Outgoing profiles φ(z) = α·w(|z|), the energy-space profile
//! η(z) = e^{−ihz²/4}φ(z), and the checks run on them: the jump condition
//! at the origin, the ODE residual away from it, the Pohozhaev identities
//! and the energy.
//!
//! Integrals are taken over the stored samples (Simpson in ln z on the
//! positive half, trapezoid on [0, z_min]) and doubled by symmetry. A final
//! partial interval up to R is filled in by direct evaluation.

use crate::cmath::{self, c, I, PI};
use crate::error::{Error, Result};
use crate::quad::QuadratureConfig;
use crate::solver::{self, DEFAULT_TOL};
use crate::weber::{self, SpectralParams};
use crate::C64;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// Largest tolerated |Im Q|/|Q| for Q = −2w_z(0)/w(0).
pub const MATCH_TOL: f64 = 1e-8;

/// ½ − 1/(p−1).
pub fn sigma_c_of_p(p: f64) -> Result<f64> {
    if !(p > 1.0) {
        return Err(Error::Domain("p must exceed 1"));
    }
    if p.is_infinite() {
        return Ok(0.5);
    }
    Ok(0.5 - 1.0 / (p - 1.0))
}

/// Q = −2w_z(0)/w(0) = −2h^{1/2}v′(0)/v(0), from the closed forms.
pub fn matching_quotient(params: &SpectralParams) -> Result<C64> {
    let (v0, vp0) = weber::v_at_zero(params.lambda())?;
    if v0 == c(0.0, 0.0) {
        return Err(Error::Pole("v(0) vanishes"));
    }
    cmath::finite(-2.0 * params.h().sqrt() * vp0 / v0, "matching quotient")
}

/// α = Q^{1/(p−1)}/w(0), requiring Q real and positive.
pub fn amplitude(params: &SpectralParams) -> Result<C64> {
    let q = matching_quotient(params)?;
    let ratio = q.im.abs() / q.norm();
    if ratio > MATCH_TOL || q.re <= 0.0 {
        return Err(Error::Match { imag_ratio: ratio });
    }
    let (v0, _) = weber::v_at_zero(params.lambda())?;
    Ok(q.re.powf(1.0 / (params.p() - 1.0)) / v0)
}

/// |Q|^{1/(p−1)}/w(0) with no reality check. Used to build deliberately
/// mismatched profiles.
pub fn amplitude_unchecked(params: &SpectralParams) -> Result<C64> {
    let q = matching_quotient(params)?;
    let (v0, _) = weber::v_at_zero(params.lambda())?;
    Ok(q.norm().powf(1.0 / (params.p() - 1.0)) / v0)
}

/// How (σ, h, p) are fixed before the profile is built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileInput {
    /// Given h: σ = σ(h). The power defaults to the one with σ_c = σ(h).
    Rate { h: f64, p: Option<f64> },
    /// Given p > 3: h solves σ(h) = σ_c.
    Power { p: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub z: f64,
    pub phi: C64,
    /// Right derivative at z = 0.
    pub phi_prime: C64,
    pub eta: C64,
    pub eta_prime: C64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSolution {
    pub params: SpectralParams,
    pub alpha: C64,
    /// Sorted by z, symmetric about 0.
    pub samples: Vec<ProfileSample>,
    /// η(z) ~ c0 |z|^{iλ−½} as |z| → ∞.
    pub c0: C64,
    /// η_z(z) ~ c1 |z|^{iλ−3/2} sgn z.
    pub c1: C64,
    /// φ(0) and φ′(0+) from quadrature.
    pub phi0: C64,
    pub phi0_prime: C64,
    pub cfg: QuadratureConfig,
}

/// Geometric grid z_min·r^k up to z_max on each side, mirrored, without 0.
pub fn geometric_grid(z_min: f64, z_max: f64, per_side: usize) -> Result<Vec<f64>> {
    if !(z_min > 0.0 && z_max > z_min && z_max.is_finite()) {
        return Err(Error::Domain("need 0 < z_min < z_max"));
    }
    if per_side < 3 {
        return Err(Error::Domain("need at least 3 points per side"));
    }
    let ratio = (z_max / z_min).ln() / (per_side - 1) as f64;
    let pos: Vec<f64> = (0..per_side)
        .map(|k| if k + 1 == per_side { z_max } else { z_min * (ratio * k as f64).exp() })
        .collect();
    let mut out: Vec<f64> = pos.iter().rev().map(|z| -z).collect();
    out.extend_from_slice(&pos);
    Ok(out)
}

/// Geometric grid with about `per_e_fold` points per unit of ln z.
pub fn default_grid(z_max: f64, per_e_fold: f64) -> Result<Vec<f64>> {
    let z_min = 1e-3;
    let n = ((z_max / z_min).ln() * per_e_fold).ceil() as usize + 1;
    geometric_grid(z_min, z_max, n.max(3))
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 2 {
        return Err(Error::Grid("grid needs at least two points"));
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::Grid("grid must be strictly increasing"));
        }
    }
    let n = grid.len();
    for k in 0..n / 2 {
        let (a, b) = (grid[k], grid[n - 1 - k]);
        if (a + b).abs() > 1e-12 * b.abs().max(1.0) {
            return Err(Error::Grid("grid must be symmetric about 0"));
        }
    }
    if n % 2 == 1 && grid[n / 2] != 0.0 {
        return Err(Error::Grid("grid must be symmetric about 0"));
    }
    if grid.iter().any(|z| !z.is_finite()) {
        return Err(Error::Grid("grid must be finite"));
    }
    Ok(())
}

/// Build the profile for the given entry mode on a symmetric grid.
pub fn build_profile(input: ProfileInput, grid: &[f64], cfg: &QuadratureConfig) -> Result<ProfileSolution> {
    let (p, h, sigma) = match input {
        ProfileInput::Power { p } => {
            let h = solver::solve_h_for_p(p, DEFAULT_TOL)?.value;
            (p, h, solver::solve_sigma(h, DEFAULT_TOL)?.value)
        }
        ProfileInput::Rate { h, p } => {
            let sigma = solver::solve_sigma(h, DEFAULT_TOL)?.value;
            let p = match p {
                Some(p) => p,
                None if sigma < 0.5 => 1.0 + 1.0 / (0.5 - sigma),
                None => return Err(Error::Domain("sigma(h) >= 1/2 has no matching power")),
            };
            (p, h, sigma)
        }
    };
    let params = SpectralParams::new(p, sigma, h, 1.0)?;
    ProfileSolution::from_params(params, grid, cfg)
}

impl ProfileSolution {
    /// Profile for arbitrary parameters; fails with `Match` unless the
    /// matching condition holds.
    pub fn from_params(params: SpectralParams, grid: &[f64], cfg: &QuadratureConfig) -> Result<Self> {
        let alpha = amplitude(&params)?;
        Self::assemble(params, alpha, grid, cfg)
    }

    /// Profile built with |Q| in place of Q, so it exists even when the
    /// matching condition fails (and then violates the jump condition).
    pub fn from_params_unchecked(params: SpectralParams, grid: &[f64], cfg: &QuadratureConfig) -> Result<Self> {
        let alpha = amplitude_unchecked(&params)?;
        Self::assemble(params, alpha, grid, cfg)
    }

    fn assemble(params: SpectralParams, alpha: C64, grid: &[f64], cfg: &QuadratureConfig) -> Result<Self> {
        cfg.validate()?;
        check_grid(grid)?;
        let lambda = params.lambda();
        let h = params.h();
        let (w0, wp0) = weber::w_pair(0.0, lambda, h, cfg)?;
        let mut sol = ProfileSolution {
            params,
            alpha,
            samples: Vec::with_capacity(grid.len()),
            c0: c(0.0, 0.0),
            c1: c(0.0, 0.0),
            phi0: alpha * w0,
            phi0_prime: alpha * wp0,
            cfg: *cfg,
        };
        let mid = grid.partition_point(|&z| z < 0.0);
        let mut right = Vec::with_capacity(grid.len() - mid);
        for &z in &grid[mid..] {
            right.push(sol.eta_at(z)?);
        }
        for s in right[..].iter().rev() {
            if s.z > 0.0 {
                sol.samples.push(ProfileSample {
                    z: -s.z,
                    phi: s.phi,
                    phi_prime: -s.phi_prime,
                    eta: s.eta,
                    eta_prime: -s.eta_prime,
                });
            }
        }
        sol.samples.extend(right);
        let mu = I * lambda - 0.5;
        sol.c0 = alpha * (0.5 * mu * h.ln() + PI * lambda / 4.0 + I * (PI / 8.0)).exp();
        sol.c1 = mu * sol.c0;
        Ok(sol)
    }

    pub fn p(&self) -> f64 {
        self.params.p()
    }

    /// Direct evaluation of (φ, φ′, η, η′) at z.
    pub fn eta_at(&self, z: f64) -> Result<ProfileSample> {
        let h = self.params.h();
        let (w, wp) = weber::w_pair(z.abs(), self.params.lambda(), h, &self.cfg)?;
        let sign = if z < 0.0 { -1.0 } else { 1.0 };
        let phi = self.alpha * w;
        let phi_prime = self.alpha * wp * sign;
        let g = (-I * (0.25 * h * z * z)).exp();
        let eta = g * phi;
        let eta_prime = g * (phi_prime - I * (0.5 * h * z) * phi);
        Ok(ProfileSample { z, phi, phi_prime, eta, eta_prime })
    }

    /// |2φ′(0+) + |φ(0)|^{p−1}φ(0)|.
    pub fn jump_residual(&self) -> f64 {
        let p = self.params.p();
        (2.0 * self.phi0_prime + self.phi0 * self.phi0.norm().powf(p - 1.0)).norm()
    }

    /// Local wavenumber of the linear equation, used to pick stencil steps.
    fn wavenumber(&self, z: f64) -> f64 {
        let h = self.params.h();
        let k2 = c(self.params.kappa(), h * self.params.sigma()).norm() + 0.25 * h * h * z * z;
        k2.sqrt().max(1.0)
    }

    /// Stencil step balancing truncation against quadrature noise.
    pub fn stencil_step(&self, z: f64) -> f64 {
        (240.0 * self.cfg.rel_tol).powf(1.0 / 6.0) / self.wavenumber(z)
    }

    /// |(κ+ihσ)φ − φ_zz − ¼h²z²φ| with φ_zz from a 5-point stencil.
    pub fn ode_residual(&self, z: f64) -> Result<f64> {
        self.ode_residual_with_step(z, self.stencil_step(z))
    }

    pub fn ode_residual_with_step(&self, z: f64, step: f64) -> Result<f64> {
        let vals = self.stencil(z, step, |s| s.phi)?;
        let h = self.params.h();
        let dzz = (-vals[0] + 16.0 * vals[1] - 30.0 * vals[2] + 16.0 * vals[3] - vals[4]) / (12.0 * step * step);
        let k = c(self.params.kappa(), h * self.params.sigma());
        Ok((k * vals[2] - dzz - 0.25 * h * h * z * z * vals[2]).norm())
    }

    /// |(κ+ihσ)η − ihΛη − η_zz| with Λ = ½ + z∂_z, derivatives by stencil.
    pub fn eta_ode_residual(&self, z: f64) -> Result<f64> {
        let step = self.stencil_step(z);
        let e = self.stencil(z, step, |s| s.eta)?;
        let h = self.params.h();
        let dz = (e[0] - 8.0 * e[1] + 8.0 * e[3] - e[4]) / (12.0 * step);
        let dzz = (-e[0] + 16.0 * e[1] - 30.0 * e[2] + 16.0 * e[3] - e[4]) / (12.0 * step * step);
        let k = c(self.params.kappa(), h * self.params.sigma());
        let lam = 0.5 * e[2] + z * dz;
        Ok((k * e[2] - I * h * lam - dzz).norm())
    }

    fn stencil(&self, z: f64, step: f64, pick: impl Fn(&ProfileSample) -> C64) -> Result<[C64; 5]> {
        if !(step > 0.0) || z.abs() <= 2.0 * step {
            return Err(Error::Grid("stencil would cross z = 0"));
        }
        let mut out = [c(0.0, 0.0); 5];
        for (j, o) in out.iter_mut().enumerate() {
            *o = pick(&self.eta_at(z + (j as f64 - 2.0) * step)?);
        }
        Ok(out)
    }

    /// Largest sample abscissa.
    pub fn z_max(&self) -> f64 {
        self.samples.last().map(|s| s.z).unwrap_or(0.0)
    }

    fn positive(&self) -> &[ProfileSample] {
        let mid = self.samples.partition_point(|s| s.z <= 0.0);
        &self.samples[mid..]
    }

    /// ∫_{−R}^{R} of |η|², |η_z|² and Im(zη_z η̄).
    fn integrals(&self, r: f64) -> Result<[f64; 3]> {
        let pos = self.positive();
        if pos.is_empty() || r < pos[0].z || r > self.z_max() * (1.0 + 1e-12) {
            return Err(Error::Grid("R must lie within the sampled range"));
        }
        let r = r.min(self.z_max());
        let f = |s: &ProfileSample| -> [f64; 3] {
            [s.eta.norm_sqr(), s.eta_prime.norm_sqr(), (s.z * s.eta_prime * s.eta.conj()).im]
        };
        let k = pos.partition_point(|s| s.z <= r);
        let used = &pos[..k];
        // [0, z_min] by the trapezoid rule
        let z0 = used[0].z;
        let at0 = [self.phi0.norm_sqr(), self.phi0_prime.norm_sqr(), 0.0];
        let first = f(&used[0]);
        let mut acc = [0.0; 3];
        for m in 0..3 {
            acc[m] = 0.5 * z0 * (at0[m] + first[m]);
        }
        let t: Vec<f64> = used.iter().map(|s| s.z.ln()).collect();
        let y: Vec<[f64; 3]> = used.iter().map(|s| {
            let v = f(s);
            [v[0] * s.z, v[1] * s.z, v[2] * s.z]
        }).collect();
        let simpson = simpson_nonuniform(&t, &y);
        for m in 0..3 {
            acc[m] += simpson[m];
        }
        let last = used[used.len() - 1].z;
        if r > last * (1.0 + 1e-14) {
            let mid = 0.5 * (last + r);
            let (a, b, e) = (f(&used[used.len() - 1]), f(&self.eta_at(mid)?), f(&self.eta_at(r)?));
            for m in 0..3 {
                acc[m] += (r - last) / 6.0 * (a[m] + 4.0 * b[m] + e[m]);
            }
        }
        Ok([2.0 * acc[0], 2.0 * acc[1], 2.0 * acc[2]])
    }

    /// ∫_{−R}^{R}|η|² (η is not in L², so this grows like R^{2σ}).
    pub fn mass_truncated(&self, r: f64) -> Result<f64> {
        Ok(self.integrals(r)?[0])
    }

    pub fn pohozhaev_report(&self, r: f64) -> Result<PohozhaevReport> {
        let [mass, kinetic, virial] = self.integrals(r)?;
        let s = self.eta_at(r.min(self.z_max()))?;
        let r = s.z;
        let (p, h, sigma, kappa) = (self.params.p(), self.params.h(), self.params.sigma(), self.params.kappa());
        let eta0_pow = self.phi0.norm().powf(p + 1.0);
        let flux = s.eta_prime * s.eta.conj();
        let c0sq = self.c0.norm_sqr();
        let r2s = r.powf(2.0 * sigma);
        let identity1 = kappa * mass + h * virial + kinetic - eta0_pow;
        let identity2 = sigma * mass - c0sq * r2s;
        let identity7 = kappa * sigma * mass + h * sigma * virial + kinetic - 0.5 * eta0_pow;
        let final_identity = (1.0 - sigma) * kinetic - (0.5 - sigma) * eta0_pow;
        Ok(PohozhaevReport {
            r,
            mass,
            kinetic,
            virial,
            eta0_pow,
            identity1,
            identity1_boundary: 2.0 * flux.re,
            identity2,
            identity2_boundary: r * s.eta.norm_sqr() + 2.0 * flux.im / h - c0sq * r2s,
            identity7,
            identity7_boundary: 2.0 * kappa / h * flux.im + flux.re + r * s.eta_prime.norm_sqr(),
            final_identity,
            final_boundary: 2.0 * kappa / h * flux.im + (1.0 - 2.0 * sigma) * flux.re + r * s.eta_prime.norm_sqr(),
            final_predicted: -self.c1.norm_sqr() * r.powf(2.0 * sigma - 2.0),
            c0_limit: sigma * mass / r2s,
            sigma_estimate: c0sq * r2s / mass,
            kappa_estimate: h * sigma * (-virial) / (c0sq * r2s),
        })
    }

    /// Energy ½∫|η_z|² − |η(0)|^{p+1}/(p+1) over the whole grid, with the
    /// far-field tail of ∫|η_z|² added from the c1 asymptotics.
    pub fn energy(&self) -> Result<EnergyReport> {
        let r = self.z_max();
        let [_, kinetic_grid, _] = self.integrals(r)?;
        let (p, sigma) = (self.params.p(), self.params.sigma());
        if !(sigma < 1.0) {
            return Err(Error::Domain("energy needs sigma < 1"));
        }
        let kinetic_tail = self.c1.norm_sqr() * r.powf(2.0 * sigma - 2.0) / (1.0 - sigma);
        let kinetic = kinetic_grid + kinetic_tail;
        let eta0_pow = self.phi0.norm().powf(p + 1.0);
        let energy = 0.5 * kinetic - eta0_pow / (p + 1.0);
        let identity_form = if (sigma - 0.5).abs() > 1e-12 {
            Some((0.5 - 2.0 / (p + 1.0) * (1.0 - sigma) / (1.0 - 2.0 * sigma)) * kinetic)
        } else {
            None
        };
        Ok(EnergyReport {
            r,
            kinetic_grid,
            kinetic_tail,
            energy,
            energy_uncorrected: 0.5 * kinetic_grid - eta0_pow / (p + 1.0),
            identity_form,
            tail: 0.5 * kinetic_tail,
        })
    }
}

/// ∫ y dt over a nonuniform grid: Simpson on interval pairs, the last
/// interval (if left over) from the parabola through the final three points.
fn simpson_nonuniform<const N: usize>(t: &[f64], y: &[[f64; N]]) -> [f64; N] {
    let mut acc = [0.0; N];
    let n = t.len();
    if n < 2 {
        return acc;
    }
    if n == 2 {
        for m in 0..N {
            acc[m] = 0.5 * (t[1] - t[0]) * (y[0][m] + y[1][m]);
        }
        return acc;
    }
    let mut i = 0;
    while i + 2 < n {
        let (h0, h1) = (t[i + 1] - t[i], t[i + 2] - t[i + 1]);
        let s = h0 + h1;
        let (w0, w1, w2) = (2.0 - h1 / h0, s * s / (h0 * h1), 2.0 - h0 / h1);
        for m in 0..N {
            acc[m] += s / 6.0 * (w0 * y[i][m] + w1 * y[i + 1][m] + w2 * y[i + 2][m]);
        }
        i += 2;
    }
    if i + 1 < n {
        let (h0, h1) = (t[i] - t[i - 1], t[i + 1] - t[i]);
        let a = (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1));
        let b = (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0);
        let e = h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
        for m in 0..N {
            acc[m] += a * y[i + 1][m] + b * y[i][m] - e * y[i - 1][m];
        }
    }
    acc
}

/// Truncated Pohozhaev quantities on [−R, R].
///
/// Each `identityN` is the quadrature value of the identity's right-hand
/// side; `identityN_boundary` is the exact boundary term it must equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PohozhaevReport {
    pub r: f64,
    /// ∫|η|².
    pub mass: f64,
    /// ∫|η_z|².
    pub kinetic: f64,
    /// Im ∫ Λη η̄.
    pub virial: f64,
    /// |η(0)|^{p+1}.
    pub eta0_pow: f64,
    /// κ∫|η|² + h Im∫Λη η̄ + ∫|η_z|² − |η(0)|^{p+1}.
    pub identity1: f64,
    pub identity1_boundary: f64,
    /// σ∫|η|² − |c0|²R^{2σ}.
    pub identity2: f64,
    pub identity2_boundary: f64,
    /// κσ∫|η|² − hσ Im∫ηΛη̄ + ∫|η_z|² − ½|η(0)|^{p+1}.
    pub identity7: f64,
    pub identity7_boundary: f64,
    /// (1−σ)∫|η_z|² − (½−σ)|η(0)|^{p+1}.
    pub final_identity: f64,
    pub final_boundary: f64,
    /// Leading behaviour −|c1|²R^{2σ−2} of `final_identity`.
    pub final_predicted: f64,
    /// R^{−2σ}σ∫|η|², which tends to |c0|².
    pub c0_limit: f64,
    /// σ recovered from the mass growth; positive for a nontrivial profile.
    pub sigma_estimate: f64,
    /// κ recovered from R^{−2σ}hσ Im∫ηΛη̄ → κ|c0|².
    pub kappa_estimate: f64,
}

impl PohozhaevReport {
    pub fn sigma_positive(&self) -> bool {
        self.sigma_estimate > 0.0
    }
    pub fn kappa_positive(&self) -> bool {
        self.kappa_estimate > 0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyReport {
    /// Edge of the sampled range.
    pub r: f64,
    pub kinetic_grid: f64,
    /// |c1|²R^{2σ−2}/(1−σ), both sides together.
    pub kinetic_tail: f64,
    pub energy: f64,
    pub energy_uncorrected: f64,
    /// (½ − (2/(p+1))(1−σ)/(1−2σ))∫|η_z|², absent at σ = ½.
    pub identity_form: Option<f64>,
    /// Contribution of the tail to the energy.
    pub tail: f64,
}

/// Blow-up parameters of ψ(x,t) = λ(t)^{1/(p−1)}e^{iτ(t)}η(λ(t)x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlowupCurve {
    pub t_star: f64,
    pub h: f64,
    pub kappa: f64,
    pub tau0: f64,
}

impl BlowupCurve {
    pub fn new(t_star: f64, h: f64, kappa: f64, tau0: f64) -> Result<Self> {
        if !(t_star > 0.0 && t_star.is_finite() && h > 0.0 && h.is_finite()) {
            return Err(Error::Domain("need T* > 0 and h > 0"));
        }
        Ok(BlowupCurve { t_star, h, kappa, tau0 })
    }

    fn check_t(&self, t: f64) -> Result<()> {
        if !(t >= 0.0 && t < self.t_star) {
            return Err(Error::Domain("need 0 <= t < T*"));
        }
        Ok(())
    }

    /// λ(t) = (2h(T*−t))^{−1/2}.
    pub fn lambda_at(&self, t: f64) -> Result<f64> {
        self.check_t(t)?;
        Ok(1.0 / (2.0 * self.h * (self.t_star - t)).sqrt())
    }

    /// τ(t) = (κ/2h) ln(T*/(T*−t)) + τ(0).
    pub fn tau_at(&self, t: f64) -> Result<f64> {
        self.check_t(t)?;
        Ok(self.kappa / (2.0 * self.h) * (self.t_star / (self.t_star - t)).ln() + self.tau0)
    }
}

/// ψ(x, t) from the profile.
pub fn reconstruct_psi(curve: &BlowupCurve, sol: &ProfileSolution, x: f64, t: f64) -> Result<C64> {
    let l = curve.lambda_at(t)?;
    let tau = curve.tau_at(t)?;
    let eta = sol.eta_at(l * x)?.eta;
    Ok(l.powf(1.0 / (sol.p() - 1.0)) * (I * tau).exp() * eta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_c_values() {
        assert_eq!(sigma_c_of_p(3.0).unwrap(), 0.0);
        assert_eq!(sigma_c_of_p(5.0).unwrap(), 0.25);
        assert_eq!(sigma_c_of_p(f64::INFINITY).unwrap(), 0.5);
        assert!(sigma_c_of_p(1.0).is_err());
    }

    #[test]
    fn simpson_integrates_quadratics_on_uneven_grids() {
        let t = [0.0, 0.1, 0.35, 0.4, 0.9, 1.0];
        let y: Vec<[f64; 1]> = t.iter().map(|&x| [3.0 * x * x - x]).collect();
        let r = simpson_nonuniform(&t, &y);
        assert!((r[0] - 0.5).abs() < 1e-14);
        let y: Vec<[f64; 1]> = t[..5].iter().map(|&x| [x * x]).collect();
        let r = simpson_nonuniform(&t[..5], &y);
        assert!((r[0] - 0.9f64.powi(3) / 3.0).abs() < 1e-14);
    }

    #[test]
    fn grid_checks() {
        let g = geometric_grid(1e-3, 10.0, 20).unwrap();
        assert_eq!(g.len(), 40);
        assert_eq!(g[0], -10.0);
        assert!(check_grid(&g).is_ok());
        assert!(check_grid(&[-1.0, 0.5, 1.0]).is_err());
    }

    #[test]
    fn amplitude_rejects_off_root() {
        let p = SpectralParams::new(5.0, 0.3, 2.0, 1.0).unwrap();
        assert!(matches!(amplitude(&p), Err(Error::Match { .. })));
        assert!(amplitude_unchecked(&p).is_ok());
    }

    #[test]
    fn curve_basics() {
        let c = BlowupCurve::new(1.0, 0.5, 1.0, 0.0).unwrap();
        assert!((c.lambda_at(0.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(c.tau_at(0.0).unwrap(), 0.0);
        assert!(c.lambda_at(1.0).is_err());
    }
}
