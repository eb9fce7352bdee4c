//! Globally adaptive Gauss–Legendre quadrature for vector-valued complex
//! integrands on finite intervals.
//!
//! Each panel carries a 15-point rule on the whole panel and on its two
//! halves; the difference is the error estimate. The panel with the worst
//! estimate relative to its target is split until every component meets
//! `max(abs, rel·|I|, roundoff floor)`.

use crate::error::{Error, Result};
use crate::C64;
use alloc::vec::Vec;

const GL15: [(f64, f64); 8] = [
    (0.0, 2.0257824192556127288e-1),
    (2.011940939974345223e-1, 1.9843148532711157646e-1),
    (3.941513470775633699e-1, 1.8616100001556221103e-1),
    (5.7097217260853884754e-1, 1.6626920581699393355e-1),
    (7.2441773136017004742e-1, 1.3957067792615431445e-1),
    (8.482065834104272162e-1, 1.0715922046717193501e-1),
    (9.3727339240070590431e-1, 7.0366047488108124709e-2),
    (9.8799251802048542849e-1, 3.0753241996117268355e-2),
];

/// Roundoff floor per unit of ∫|f|.
const NOISE: f64 = 16.0 * f64::EPSILON;

/// User-facing quadrature settings for the Weber-function integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Hard cap on the truncation radius of semi-infinite integrals.
    pub t_max: f64,
    /// Panel budget of the adaptive scheme (15-point panels).
    pub n_nodes: usize,
    /// Absolute tolerance, in the units of the returned value.
    pub abs_tol: f64,
    /// Relative tolerance.
    pub rel_tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { t_max: 1.0e3, n_nodes: 4000, abs_tol: 1e-14, rel_tol: 1e-12 }
    }
}

impl QuadratureConfig {
    pub fn new(t_max: f64, n_nodes: usize, abs_tol: f64, rel_tol: f64) -> Result<Self> {
        let cfg = QuadratureConfig { t_max, n_nodes, abs_tol, rel_tol };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let tol_ok = |t: f64| t > 0.0 && t < 1e-2;
        if !(self.t_max > 0.0 && self.t_max.is_finite()) {
            return Err(Error::Domain("t_max must be positive and finite"));
        }
        if self.n_nodes < 16 {
            return Err(Error::Domain("n_nodes must be at least 16"));
        }
        if !tol_ok(self.abs_tol) || !tol_ok(self.rel_tol) {
            return Err(Error::Domain("tolerances must lie in (0, 1e-2)"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Tolerances {
    pub abs: f64,
    pub rel: f64,
    pub max_panels: usize,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Integral<const N: usize> {
    pub value: [C64; N],
    /// Discretisation estimate plus roundoff floor.
    pub error: [f64; N],
}

impl<const N: usize> Integral<N> {
    /// Error if any component misses `max(abs, rel·|I|)`.
    pub fn certify(&self, tol: &Tolerances, what: &'static str) -> Result<()> {
        for k in 0..N {
            let target = tol.abs.max(tol.rel * self.value[k].norm());
            if self.error[k] > target {
                return Err(Error::Tolerance { what, estimate: self.error[k], target });
            }
        }
        Ok(())
    }
}

struct Panel<const N: usize> {
    a: f64,
    b: f64,
    left: [C64; N],
    right: [C64; N],
    l1: [f64; N],
    err: [f64; N],
}

fn gl15<const N: usize, F: FnMut(f64) -> [C64; N]>(f: &mut F, a: f64, b: f64) -> ([C64; N], [f64; N]) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = [C64::new(0.0, 0.0); N];
    let mut abs = [0.0; N];
    for (i, &(x, w)) in GL15.iter().enumerate() {
        let pts: &[f64] = if i == 0 { &[0.0] } else { &[-1.0, 1.0] };
        for &s in pts {
            let v = f(mid + s * x * half);
            for k in 0..N {
                sum[k] += v[k] * w;
                abs[k] += v[k].norm() * w;
            }
        }
    }
    for k in 0..N {
        sum[k] *= half;
        abs[k] *= half;
    }
    (sum, abs)
}

fn make_panel<const N: usize, F: FnMut(f64) -> [C64; N]>(
    f: &mut F,
    a: f64,
    b: f64,
    whole: [C64; N],
) -> Panel<N> {
    let m = 0.5 * (a + b);
    let (left, la) = gl15(f, a, m);
    let (right, ra) = gl15(f, m, b);
    let mut l1 = [0.0; N];
    let mut err = [0.0; N];
    for k in 0..N {
        l1[k] = la[k] + ra[k];
        err[k] = (left[k] + right[k] - whole[k]).norm();
    }
    Panel { a, b, left, right, l1, err }
}

/// Integrate `f` over `[breaks[0], breaks[last]]`, starting from the panels
/// given by consecutive break points.
pub(crate) fn integrate<const N: usize, F: FnMut(f64) -> [C64; N]>(
    mut f: F,
    breaks: &[f64],
    tol: Tolerances,
) -> Result<Integral<N>> {
    if breaks.len() < 2 {
        return Err(Error::Domain("quadrature needs at least one panel"));
    }
    let mut panels: Vec<Panel<N>> = Vec::with_capacity(64);
    for w in breaks.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::Domain("quadrature breaks must increase"));
        }
        let (whole, _) = gl15(&mut f, w[0], w[1]);
        panels.push(make_panel(&mut f, w[0], w[1], whole));
    }
    loop {
        let mut value = [C64::new(0.0, 0.0); N];
        let mut err = [0.0; N];
        let mut l1 = [0.0; N];
        for p in &panels {
            for k in 0..N {
                value[k] += p.left[k] + p.right[k];
                err[k] += p.err[k];
                l1[k] += p.l1[k];
            }
        }
        let mut target = [0.0; N];
        let mut done = true;
        for k in 0..N {
            let non_finite = !(value[k].re.is_finite() && value[k].im.is_finite());
            if non_finite {
                return Err(Error::Overflow("quadrature"));
            }
            // leave room for the roundoff floor added to the reported error
            let floor = NOISE * l1[k];
            target[k] = (tol.abs.max(tol.rel * value[k].norm()) - floor).max(floor);
            if err[k] > target[k] {
                done = false;
            }
        }
        if done {
            let mut error = [0.0; N];
            for k in 0..N {
                error[k] = err[k] + NOISE * l1[k];
            }
            return Ok(Integral { value, error });
        }
        let worst = panels
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut score = 0.0f64;
                for (e, t) in p.err.iter().zip(&target) {
                    if *t > 0.0 {
                        score = score.max(e / t);
                    }
                }
                (i, score)
            })
            .fold((0usize, -1.0f64), |acc, x| if x.1 > acc.1 { x } else { acc })
            .0;
        let width = panels[worst].b - panels[worst].a;
        let scale = panels[worst].a.abs().max(panels[worst].b.abs()).max(1e-300);
        if panels.len() + 1 > tol.max_panels || width < 64.0 * f64::EPSILON * scale {
            let k = (0..N)
                .max_by(|&i, &j| (err[i] / target[i]).partial_cmp(&(err[j] / target[j])).unwrap())
                .unwrap_or(0);
            return Err(Error::Tolerance {
                what: "adaptive quadrature",
                estimate: err[k],
                target: target[k],
            });
        }
        let p = panels.swap_remove(worst);
        let m = 0.5 * (p.a + p.b);
        panels.push(make_panel(&mut f, p.a, m, p.left));
        panels.push(make_panel(&mut f, m, p.b, p.right));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances { abs: 1e-15, rel: 1e-13, max_panels: 500 }
    }

    #[test]
    fn polynomial_exact() {
        let r = integrate(|x| [C64::new(x.powi(7), 0.0)], &[0.0, 2.0], tol()).unwrap();
        assert!((r.value[0].re - 32.0).abs() < 1e-13);
    }

    #[test]
    fn oscillatory_and_vector_valued() {
        let r = integrate(
            |x| [C64::new(0.0, 30.0 * x).exp(), C64::new((-x).exp(), 0.0)],
            &[0.0, 1.0, 3.0],
            tol(),
        )
        .unwrap();
        let exact = (C64::new(0.0, 90.0).exp() - 1.0) / C64::new(0.0, 30.0);
        assert!((r.value[0] - exact).norm() < 1e-13);
        assert!((r.value[1].re - (1.0 - (-3.0f64).exp())).abs() < 1e-14);
    }

    #[test]
    fn panel_budget_is_enforced() {
        let t = Tolerances { abs: 1e-15, rel: 1e-15, max_panels: 3 };
        let r = integrate(|x| [C64::new((200.0 * x).sin(), 0.0)], &[0.0, 10.0], t);
        assert!(matches!(r, Err(Error::Tolerance { .. })));
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::new(10.0, 8, 1e-12, 1e-12).is_err());
        assert!(QuadratureConfig::new(10.0, 100, 0.5, 1e-12).is_err());
        assert!(QuadratureConfig::default().validate().is_ok());
    }
}
