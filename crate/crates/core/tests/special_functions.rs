use blowup_core::specfun::*;
use blowup_core::C64;
use proptest::prelude::*;
use std::f64::consts::PI;

/// |e^{d} − 1| with d reduced mod 2πi, i.e. agreement of two logarithms as
/// values of Γ.
fn log_mismatch(d: C64) -> f64 {
    let k = (d.im / (2.0 * PI)).round();
    let d = C64::new(d.re, d.im - 2.0 * PI * k);
    (d.exp() - 1.0).norm()
}

fn away_from_poles(re: f64) -> bool {
    (re - re.round()).abs() > 0.05
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflection(re in -6.0f64..6.0, im in -8.0f64..8.0) {
        prop_assume!(away_from_poles(re) || im.abs() > 0.05);
        let z = C64::new(re, im);
        let lhs = log_gamma(z).unwrap() + log_gamma(1.0 - z).unwrap();
        let rhs = (C64::new(PI, 0.0) / (PI * z).sin()).ln();
        prop_assert!(log_mismatch(lhs - rhs) <= 1e-10);
    }

    #[test]
    fn duplication(re in 0.05f64..25.0, im in -30.0f64..30.0) {
        let z = C64::new(re, im);
        let lhs = log_gamma(z).unwrap() + log_gamma(z + 0.5).unwrap();
        let rhs = (1.0 - 2.0 * z) * 2f64.ln() + 0.5 * PI.ln() + log_gamma(2.0 * z).unwrap();
        prop_assert!(log_mismatch(lhs - rhs) <= 1e-10);
    }

    #[test]
    fn recurrence(re in -9.0f64..30.0, im in -40.0f64..40.0) {
        prop_assume!(away_from_poles(re) || im.abs() > 0.05);
        let z = C64::new(re, im);
        let d = log_gamma(z + 1.0).unwrap() - log_gamma(z).unwrap() - z.ln();
        prop_assert!(log_mismatch(d) <= 1e-12);
        let g = gamma(z + 1.0).unwrap() / (z * gamma(z).unwrap());
        prop_assert!((g - 1.0).norm() <= 1e-12);
    }

    #[test]
    fn conjugation(re in -9.0f64..30.0, im in 0.01f64..40.0) {
        let z = C64::new(re, im);
        let a = log_gamma(z.conj()).unwrap();
        let b = log_gamma(z).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-13 * b.norm().max(1.0));
        let a = digamma(z.conj()).unwrap();
        let b = digamma(z).unwrap().conj();
        prop_assert!((a - b).norm() <= 1e-13 * b.norm().max(1.0));
    }

    #[test]
    fn branch_is_continuous_off_the_cut(re in -8.0f64..20.0, im in 0.2f64..30.0) {
        let z = C64::new(re, im);
        let a = log_gamma(z).unwrap();
        let b = log_gamma(z + C64::new(1e-6, 1e-6)).unwrap();
        prop_assert!((a - b).norm() < 1e-3);
    }

    #[test]
    fn digamma_recurrence(re in -9.0f64..30.0, im in -40.0f64..40.0) {
        prop_assume!(away_from_poles(re) || im.abs() > 0.05);
        let z = C64::new(re, im);
        let d = digamma(z + 1.0).unwrap() - digamma(z).unwrap() - z.inv();
        prop_assert!(d.norm() <= 1e-12 * (1.0 + z.inv().norm() + digamma(z).unwrap().norm()));
    }

    #[test]
    fn half_gap_identity(re in -4.0f64..30.0, im in -40.0f64..40.0) {
        prop_assume!(away_from_poles(re) && away_from_poles(re + 0.5) || im.abs() > 0.05);
        let z = C64::new(re, im);
        let gap = digamma_half_gap(z).unwrap();
        let d = gap + digamma(z + 0.5).unwrap() - digamma(z).unwrap();
        prop_assert!(d.norm() <= 1e-9 * (1.0 + gap.norm()));
    }

    #[test]
    fn ratio_matches_difference(re in 0.01f64..20.0, im in -60.0f64..60.0, s in 0.0f64..1.0) {
        let z = C64::new(re, im);
        let d = log_gamma_ratio(z, s).unwrap() - (log_gamma(z + s).unwrap() - log_gamma(z).unwrap());
        prop_assert!(log_mismatch(d) <= 1e-11);
    }

    #[test]
    fn reciprocal_gamma(re in -6.0f64..6.0, im in -5.0f64..5.0) {
        prop_assume!(away_from_poles(re) || im.abs() > 0.05);
        let z = C64::new(re, im);
        prop_assert!((gamma(z).unwrap() * rgamma(z).unwrap() - 1.0).norm() <= 1e-12);
    }
}

#[test]
fn poles_and_limits() {
    assert!(matches!(gamma(C64::new(-3.0, 0.0)), Err(blowup_core::Error::Pole(_))));
    assert!(matches!(digamma(C64::new(0.0, 0.0)), Err(blowup_core::Error::Pole(_))));
    assert_eq!(rgamma(C64::new(-2.0, 0.0)).unwrap(), C64::new(0.0, 0.0));
    let below = log_gamma(C64::new(-0.25, -1e-12)).unwrap();
    let above = log_gamma(C64::new(-0.25, 1e-12)).unwrap();
    assert!((log_gamma_limit(-0.25, true).unwrap() - above).norm() < 1e-9);
    assert!((log_gamma_limit(-0.25, false).unwrap() - below).norm() < 1e-9);
    assert!((digamma(C64::new(1.0, 0.0)).unwrap().re + EULER_GAMMA).abs() < 1e-15);
}
