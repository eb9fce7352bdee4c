//! Complex log-gamma, gamma, digamma and friends.
//!
//! `log_gamma` is the analytic continuation on ℂ∖(−∞,0] with log Γ(1) = 0,
//! computed by shifting the argument to |w| ≥ 15, Re w ≥ 0 and summing
//! principal logarithms of the shift factors before applying Stirling's
//! series there.

use crate::cmath::{self, c, expm1, log1p, LN_2PI, PI};
use crate::error::{Error, Result};
use crate::quad::{self, Tolerances};
use crate::C64;
#[allow(unused_imports)]
use num_traits::Float;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.57721566490153286060651209008240243;

const STIRLING_RADIUS: f64 = 15.0;
const MAX_SHIFT: f64 = 1.0e7;

/// B_{2k} / (2k(2k−1)), k = 1..10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

/// B_{2k} / (2k), k = 1..10.
const DIGAMMA: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
];

fn is_nonpositive_integer(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn check_finite(z: C64) -> Result<()> {
    if cmath::is_finite(z) {
        Ok(())
    } else {
        Err(Error::Domain("non-finite argument"))
    }
}

/// Number of unit shifts taking z to the Stirling region.
fn shift_count(z: C64, radius: f64) -> Result<usize> {
    let mut n = if z.re < 0.0 { (-z.re).ceil() } else { 0.0 };
    if n > MAX_SHIFT {
        return Err(Error::Domain("argument too far into the left half-plane"));
    }
    while (z + n).norm() < radius {
        n += 1.0;
    }
    Ok(n as usize)
}

fn stirling(w: C64) -> C64 {
    let r = w.inv();
    let r2 = r * r;
    let mut series = C64::new(STIRLING[9], 0.0);
    for k in (0..9).rev() {
        series = series * r2 + STIRLING[k];
    }
    (w - 0.5) * w.ln() - w + 0.5 * LN_2PI + series * r
}

/// Principal-branch log Γ on ℂ∖(−∞,0].
pub fn log_gamma(z: C64) -> Result<C64> {
    check_finite(z)?;
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::Domain("log_gamma on the negative real axis"));
    }
    let n = shift_count(z, STIRLING_RADIUS)?;
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        acc += (z + k as f64).ln();
    }
    cmath::finite(stirling(z + n as f64) - acc, "log_gamma")
}

/// Boundary values log Γ(x ± i0) on the real axis.
///
/// For x > 0 this is the real log Γ(x). On the cut the imaginary part is
/// ∓π·⌈−x⌉.
pub fn log_gamma_limit(x: f64, from_above: bool) -> Result<C64> {
    if !x.is_finite() {
        return Err(Error::Domain("non-finite argument"));
    }
    if x > 0.0 {
        return log_gamma(c(x, 0.0));
    }
    if x == x.round() {
        return Err(Error::Pole("log_gamma at a nonpositive integer"));
    }
    let m = (-x).ceil();
    let ln_abs = PI.ln() - sin_pi(x).abs().ln() - log_gamma(c(1.0 - x, 0.0))?.re;
    let im = if from_above { -PI * m } else { PI * m };
    Ok(c(ln_abs, im))
}

/// sin(πx) with exact zeros at the integers.
fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Γ(z).
pub fn gamma(z: C64) -> Result<C64> {
    check_finite(z)?;
    if is_nonpositive_integer(z) {
        return Err(Error::Pole("gamma at a nonpositive integer"));
    }
    if z.im == 0.0 && z.re < 0.0 {
        let x = z.re;
        let lg = log_gamma(c(1.0 - x, 0.0))?.re;
        let s = sin_pi(x);
        let mag = (PI.ln() - s.abs().ln() - lg).exp();
        if !mag.is_finite() {
            return Err(Error::Overflow("gamma"));
        }
        return Ok(c(mag.copysign(s), 0.0));
    }
    cmath::exp_checked(log_gamma(z)?, "gamma")
}

/// 1/Γ(z), zero at the poles.
pub fn rgamma(z: C64) -> Result<C64> {
    check_finite(z)?;
    if is_nonpositive_integer(z) {
        return Ok(C64::new(0.0, 0.0));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Ok(gamma(z)?.inv());
    }
    let lg = log_gamma(z)?;
    if -lg.re < -745.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    cmath::exp_checked(-lg, "rgamma")
}

fn digamma_asymptotic(w: C64) -> C64 {
    let r = w.inv();
    let r2 = r * r;
    let mut series = C64::new(DIGAMMA[9], 0.0);
    for k in (0..9).rev() {
        series = series * r2 + DIGAMMA[k];
    }
    w.ln() - 0.5 * r - series * r2
}

/// ψ(z) = Γ′(z)/Γ(z).
///
/// The defining series −γ + Σ (1/(k+1) − 1/(z+k)) is summed explicitly for
/// k < K and its remainder is replaced by the Euler–Maclaurin (asymptotic)
/// expansion of ψ(z+K).
pub fn digamma(z: C64) -> Result<C64> {
    check_finite(z)?;
    if is_nonpositive_integer(z) {
        return Err(Error::Pole("digamma at a nonpositive integer"));
    }
    let n = shift_count(z, STIRLING_RADIUS)?;
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        acc += (z + k as f64).inv();
    }
    cmath::finite(digamma_asymptotic(z + n as f64) - acc, "digamma")
}

/// ψ(w) − ψ(w+½) for |w| large, Re w ≥ 0, without cancellation.
fn half_gap_asymptotic(w: C64) -> C64 {
    let u = (2.0 * w).inv();
    let l = log1p(u);
    let mut acc = -l - (2.0 * w * (2.0 * w + 1.0)).inv();
    let r2 = (w * w).inv();
    let mut wp = r2;
    for (k, &ck) in DIGAMMA.iter().enumerate() {
        let m = 2.0 * (k as f64 + 1.0);
        // w^{-2k} − (w+½)^{-2k} = −w^{-2k}·expm1(−2k·log(1+1/(2w)))
        acc += ck * wp * expm1(-m * l);
        wp *= r2;
    }
    acc
}

/// ψ(z) − ψ(z+½) by the quadratically convergent sum
/// −½ Σ 1/((z+k)(z+½+k)), with an asymptotic remainder.
pub fn digamma_half_gap(z: C64) -> Result<C64> {
    check_finite(z)?;
    if is_nonpositive_integer(z) || is_nonpositive_integer(z + 0.5) {
        return Err(Error::Pole("digamma_half_gap at a pole"));
    }
    let n = shift_count(z, 20.0)?;
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        let a = z + k as f64;
        acc += ((a) * (a + 0.5)).inv();
    }
    cmath::finite(half_gap_asymptotic(z + n as f64) - 0.5 * acc, "digamma_half_gap")
}

/// log Γ from Binet's second formula,
/// (z−½)log z − z + ½ log 2π + 2∫₀^∞ arctan(t/z)/(e^{2πt}−1) dt.
pub fn binet_log_gamma(z: C64) -> Result<C64> {
    check_finite(z)?;
    if !(z.re > 0.0) {
        return Err(Error::Domain("binet_log_gamma needs Re z > 0"));
    }
    let zi = z.inv();
    let integrand = |t: f64| -> [C64; 1] {
        if t == 0.0 {
            return [zi / (2.0 * PI)];
        }
        let u = zi * t;
        let iu = cmath::I * u;
        let atan = 0.5 * cmath::I * (log1p(-iu) - log1p(iu));
        [atan / (2.0 * PI * t).exp_m1()]
    };
    let mut breaks: alloc::vec::Vec<f64> =
        alloc::vec![0.0, 0.0625, 0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0];
    let y = z.im.abs();
    if y > 0.0625 && y < 8.0 {
        breaks.push(y);
        breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
    }
    let tol = Tolerances { abs: 1e-17, rel: 1e-14, max_panels: 2000 };
    let r = quad::integrate(integrand, &breaks, tol)?;
    let lead = (z - 0.5) * z.ln() - z + 0.5 * LN_2PI;
    Ok(lead + 2.0 * r.value[0])
}

/// The pair returned by [`log_gamma_diff`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogGammaDiff {
    /// log Γ(z+s) − log Γ(z) on the continuous branch.
    pub exact: C64,
    /// s log z − ½ s(1−s)/z.
    pub asymptotic: C64,
}

/// log Γ(z+s) − log Γ(z) for real 0 ≤ s ≤ 1, computed without forming the
/// two large logarithms separately.
pub fn log_gamma_ratio(z: C64, s: f64) -> Result<C64> {
    check_finite(z)?;
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::Domain("log_gamma_ratio needs 0 <= s <= 1"));
    }
    if z.im == 0.0 && (z.re <= 0.0 || z.re + s <= 0.0) {
        return Err(Error::Domain("log_gamma_ratio on the negative real axis"));
    }
    if s == 0.0 {
        return Ok(C64::new(0.0, 0.0));
    }
    let n = shift_count(z, STIRLING_RADIUS)?;
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        acc += log1p((z + k as f64).inv() * s);
    }
    let w = z + n as f64;
    let l = log1p(w.inv() * s);
    let mut corr = C64::new(0.0, 0.0);
    let r2 = (w * w).inv();
    let mut wp = w.inv();
    for (k, &ck) in STIRLING.iter().enumerate() {
        let m = 1.0 - 2.0 * (k as f64 + 1.0);
        corr += ck * wp * expm1(m * l);
        wp *= r2;
    }
    let main = s * w.ln() + (w - 0.5 + s) * l - s;
    cmath::finite(main + corr - acc, "log_gamma_ratio")
}

/// Exact and asymptotic forms of log Γ(z+s) − log Γ(z).
pub fn log_gamma_diff(z: C64, s: f64) -> Result<LogGammaDiff> {
    let exact = log_gamma_ratio(z, s)?;
    let asymptotic = if s == 0.0 {
        C64::new(0.0, 0.0)
    } else {
        s * z.ln() - 0.5 * s * (1.0 - s) * z.inv()
    };
    Ok(LogGammaDiff { exact, asymptotic })
}
