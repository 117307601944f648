use num_complex::Complex64;
use proptest::prelude::*;
use prolate::corpus::{brownian, weierstrass};
use prolate::special::gauss_legendre;
use prolate::spectral::{coefficients, grid_error, truncated_sum, FourierData, FunctionSpec};
use prolate::sup::grid_sup;
use prolate::wkb::{bandwidth_for_q, legendre_proximity, WkbModel};
use prolate::PswfBasis;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 24,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn parity_of_eigenfunctions(c in 0.0f64..60.0, n in 0usize..30, x in 0.0f64..1.0) {
        let b = PswfBasis::new(c, 30).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let (p, m) = (b.eval_inside(n, x).unwrap(), b.eval_inside(n, -x).unwrap());
        prop_assert!((p - sign * m).abs() <= 1e-12 * (1.0 + p.abs()));
        // odd coefficients of even functions vanish and vice versa
        prop_assert!(b.beta(n).unwrap().iter().skip(1 - n % 2).step_by(2).all(|&v| v == 0.0));
    }

    #[test]
    fn chi_bracket_and_lambda_ordering(c in 0.1f64..80.0) {
        let b = PswfBasis::new(c, 60).unwrap();
        for (n, &lambda) in b.lambda_all().unwrap().iter().enumerate() {
            let nn = (n * (n + 1)) as f64;
            let chi = b.chi(n).unwrap();
            prop_assert!(chi >= nn && chi <= nn + c * c, "χ_{} = {}", n, chi);
            prop_assert!(lambda > 0.0 || b.ln_lambda(n).unwrap() < -700.0);
            prop_assert!(lambda <= 1.0 + 1e-12);
            if n > 0 {
                prop_assert!(b.ln_lambda(n).unwrap() <= b.ln_lambda(n - 1).unwrap() + 1e-12);
            }
        }
    }

    #[test]
    fn plancherel_for_fourier_data(
        coeffs in proptest::collection::vec((-8i64..=8, -1.0f64..1.0, -1.0f64..1.0), 1..8)
    ) {
        let data = FourierData::new(coeffs.iter().map(|&(k, re, im)| (k, Complex64::new(re, im))).collect()).unwrap();
        let rule = gauss_legendre(80);
        let direct = rule.integrate(|x| data.sample(x).norm_sqr()).sqrt();
        prop_assert!((direct - data.norm_l2()).abs() <= 1e-10 * (1.0 + direct));
    }

    #[test]
    fn corpus_members_are_even(s in 0.5f64..2.5, seed in 0u64..1000, x in 0.0f64..1.0) {
        let w = weierstrass(s, false, 40).unwrap();
        prop_assert!((w.sample(x) - w.sample(-x)).norm() <= 1e-12);
        let p = weierstrass(s, true, 40).unwrap();
        prop_assert!((p.sample(x) - p.sample(-x)).norm() <= 1e-12);
        let r = brownian(s, seed, 50).unwrap();
        prop_assert!((r.sample(x) - r.sample(-x)).norm() <= 1e-12);
    }

    #[test]
    fn bessel_inequality_and_monotone_error(s in 0.75f64..2.0, c in 5.0f64..40.0) {
        let basis = PswfBasis::new(c, 50).unwrap();
        let f = weierstrass(s, true, 30).unwrap();
        let norm = f.norm_l2().unwrap();
        let a = coefficients(&f, &basis, 51).unwrap();
        let energy: f64 = a.iter().map(|v| v.norm_sqr()).sum();
        prop_assert!(energy <= norm * norm * (1.0 + 1e-10));
        // ‖f − S_N‖² = ‖f‖² − Σ_{n<N} |a_n|² is non-increasing in N
        let mut prev = f64::INFINITY;
        let mut partial = 0.0;
        for v in &a {
            partial += v.norm_sqr();
            let err = norm * norm - partial;
            prop_assert!(err <= prev + 1e-10);
            prev = err;
        }
    }

    #[test]
    fn grid_sup_dominates_samples(a in -3.0f64..3.0, w in 1.0f64..20.0) {
        let f = |x: f64| (w * x + a).sin() * (1.0 - x * x);
        let s = grid_sup(f, -1.0, 1.0, 200);
        for i in 0..=100 {
            let x = -1.0 + 0.02 * i as f64;
            prop_assert!(s.value >= f(x).abs() - 1e-15);
        }
    }

    #[test]
    fn grid_error_of_a_constant_offset(offset in -2.0f64..2.0, w in 0.0f64..10.0) {
        let f = move |x: f64| Complex64::new((w * x).cos(), 0.0);
        let g = move |x: f64| Complex64::new((w * x).cos() + offset, 0.0);
        // 101 samples weighted by 1/50 give 101/50 · offset²
        let expected = offset.abs() * (101.0f64 / 50.0).sqrt();
        prop_assert!((grid_error(f, g) - expected).abs() <= 1e-12 * (1.0 + expected));
    }

    #[test]
    fn wkb_amplitude_stays_in_its_envelope(n in 10usize..=80, q in prop::sample::select(vec![0.1, 0.25, 0.5])) {
        let (_, b) = bandwidth_for_q(n, q).unwrap();
        let m = WkbModel::new(&b, n).unwrap();
        let a2 = m.amplitude().powi(2);
        prop_assert!((a2 - 1.0).abs() <= 0.2 * m.q() + 5.0 / m.chi().sqrt(), "A² = {}", a2);
    }

    #[test]
    fn cache_round_trip_is_exact(c in 0.0f64..50.0, n_max in 0usize..40) {
        let b = PswfBasis::new(c, n_max).unwrap();
        let back = PswfBasis::from_json(&b.to_json().unwrap()).unwrap();
        prop_assert_eq!(b.chi_all(), back.chi_all());
        for n in 0..=n_max {
            prop_assert_eq!(b.beta(n).unwrap(), back.beta(n).unwrap());
        }
        if c > 0.0 {
            prop_assert_eq!(b.ln_lambda_all().unwrap(), back.ln_lambda_all().unwrap());
        }
    }
}

#[test]
fn band_limited_exponential_is_reproduced() {
    let c = 20.0;
    let basis = PswfBasis::new(c, 60).unwrap();
    let f = FunctionSpec::from_exponentials("e", vec![(12.0, Complex64::new(1.0, 0.0))]).unwrap();
    let a = coefficients(&f, &basis, 61).unwrap();
    let err = grid_error(|x| f.sample(x), |x| truncated_sum(&a, &basis, 61, x).unwrap());
    assert!(err < 1e-10, "{err}");
}

#[test]
fn legendre_proximity_scales_with_bandwidth_and_order() {
    let d = |c: f64, n: usize| legendre_proximity(&PswfBasis::new(c, n).unwrap(), n).unwrap();
    // quadratic in c
    let r = d(0.4, 10) / d(0.2, 10);
    assert!((r - 4.0).abs() < 0.05, "{r}");
    // at least as fast as (n+1/2)^{-1/2}; observed close to (n+1/2)^{-1}
    let r = d(0.5, 40) / d(0.5, 10);
    assert!(r <= (10.5f64 / 40.5).sqrt(), "{r}");
    assert!((r * 40.5 / 10.5 - 1.0).abs() < 0.05, "{r}");
}
