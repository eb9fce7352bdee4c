//! Small complex helpers that `num-complex` does not provide.

use crate::error::{Error, Result};
use crate::C64;
#[allow(unused_imports)]
use num_traits::Float;

pub(crate) const I: C64 = C64::new(0.0, 1.0);
pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const LN_2PI: f64 = 1.8378770664093454835606594728112;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub(crate) fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// log(1+u), accurate for small |u|.
pub(crate) fn log1p(u: C64) -> C64 {
    if u.norm() < 0.5 {
        let re = 0.5 * (2.0 * u.re + u.norm_sqr()).ln_1p();
        let im = u.im.atan2(1.0 + u.re);
        c(re, im)
    } else {
        (C64::new(1.0, 0.0) + u).ln()
    }
}

/// exp(w)−1, accurate for small |w|.
pub(crate) fn expm1(w: C64) -> C64 {
    if w.norm() < 0.5 {
        let s = (0.5 * w.im).sin();
        let re = w.re.exp_m1() * w.im.cos() - 2.0 * s * s;
        let im = w.re.exp() * w.im.sin();
        c(re, im)
    } else {
        w.exp() - 1.0
    }
}

/// exp(w) with overflow surfaced as an error.
pub(crate) fn exp_checked(w: C64, what: &'static str) -> Result<C64> {
    if w.re > 709.0 {
        return Err(Error::Overflow(what));
    }
    let r = w.exp();
    if is_finite(r) {
        Ok(r)
    } else {
        Err(Error::Overflow(what))
    }
}

/// Reject non-finite results.
pub(crate) fn finite(z: C64, what: &'static str) -> Result<C64> {
    if is_finite(z) {
        Ok(z)
    } else {
        Err(Error::Overflow(what))
    }
}
