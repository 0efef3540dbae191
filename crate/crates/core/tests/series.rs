use appellf2::gauss::gauss_2f1;
use appellf2::params::combo;
use appellf2::series::{sum_double_series, BoundSeries, DoubleSeriesSpec};
use appellf2::special::log_gamma;
use appellf2::{Complex64, F2Error, ParameterSet};
use proptest::prelude::*;

fn r(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn f2_spec() -> DoubleSeriesSpec {
    DoubleSeriesSpec {
        upper_plus: vec![combo("a")],
        upper_m: vec![combo("b1")],
        upper_n: vec![combo("b2")],
        lower_m: vec![combo("c1")],
        lower_n: vec![combo("c2")],
        ..Default::default()
    }
}

/// Σ (a)_{m−n} (b1)_m (b2)_n / ((c1)_{m−n} m! n!) X^m Y^n
fn mirror_spec() -> DoubleSeriesSpec {
    DoubleSeriesSpec {
        upper_minus: vec![combo("a")],
        upper_m: vec![combo("b1")],
        upper_n: vec![combo("b2")],
        lower_minus: vec![combo("c1")],
        ..Default::default()
    }
}

/// Horn H₂ with (a, b, c, d; e) = (a, b1, b2, c2; c1).
fn h2_spec() -> DoubleSeriesSpec {
    DoubleSeriesSpec {
        upper_minus: vec![combo("a")],
        upper_m: vec![combo("b1")],
        upper_n: vec![combo("b2"), combo("c2")],
        lower_m: vec![combo("c1")],
        ..Default::default()
    }
}

/// (z)_k = Γ(z + k)/Γ(z) through log-gamma, for z and z + k off the poles.
fn poch_gamma(z: Complex64, k: i64) -> Complex64 {
    (log_gamma(z + k as f64).unwrap() - log_gamma(z).unwrap()).exp()
}

fn term_by_gamma(b: &BoundSeries, x: Complex64, y: Complex64, m: usize, n: usize) -> Complex64 {
    let s = (m + n) as i64;
    let d = m as i64 - n as i64;
    let (mi, ni) = (m as i64, n as i64);
    let mut v = r(1.0);
    for &u in &b.upper_plus {
        v *= poch_gamma(u, s);
    }
    for &u in &b.upper_minus {
        v *= poch_gamma(u, d);
    }
    for &u in &b.upper_m {
        v *= poch_gamma(u, mi);
    }
    for &u in &b.upper_n {
        v *= poch_gamma(u, ni);
    }
    for &l in &b.lower_plus {
        v /= poch_gamma(l, s);
    }
    for &l in &b.lower_minus {
        v /= poch_gamma(l, d);
    }
    for &l in &b.lower_m {
        v /= poch_gamma(l, mi);
    }
    for &l in &b.lower_n {
        v /= poch_gamma(l, ni);
    }
    let lf = log_gamma(r(m as f64 + 1.0)).unwrap() + log_gamma(r(n as f64 + 1.0)).unwrap();
    v * (-lf).exp() * x.powu(m as u32) * y.powu(n as u32)
}

/// Recurrence chain: V(m, n) built from V(0, 0) by m steps in m then n in n.
fn term_by_ratios(b: &BoundSeries, x: Complex64, y: Complex64, m: usize, n: usize) -> Complex64 {
    let mut v = r(1.0);
    for i in 0..m {
        v *= b.term_ratio_m(x, i, 0).unwrap();
    }
    for j in 0..n {
        v *= b.term_ratio_n(y, m, j).unwrap();
    }
    v
}

#[test]
fn geometric_sum() {
    let p = ParameterSet::real(1.0, 1.0, 1.0, 1.0, 1.0);
    let s = sum_double_series(&f2_spec(), &p, r(0.2), r(0.3), 120).unwrap();
    assert!((s.value - r(2.0)).norm() < 1e-12);
    assert!(s.error_estimate < 1e-12);
}

#[test]
fn origin_is_one() {
    let p = ParameterSet::new(
        Complex64::new(0.3, 1.0),
        r(-1.7),
        r(2.2),
        Complex64::new(0.6, -0.4),
        r(3.1),
    );
    for spec in [f2_spec(), mirror_spec(), h2_spec()] {
        let s = sum_double_series(&spec, &p, r(0.0), r(0.0), 7).unwrap();
        assert_eq!(s.value, r(1.0));
        assert_eq!(s.error_estimate, 0.0);
    }
}

#[test]
fn n_zero_slice_is_gauss() {
    let p = ParameterSet::real(0.7, -1.3, 2.4, 1.9, 0.8);
    for x in [-0.5, -0.2, 0.3, 0.5] {
        let s = sum_double_series(&f2_spec(), &p, r(x), r(0.0), 60).unwrap();
        let g = gauss_2f1(p.a, p.b1, p.c1, x).unwrap();
        assert!((s.value - g).norm() < 1e-13 * g.norm(), "x = {x}: {} vs {g}", s.value);
    }
}

#[test]
fn ratios_match_term_division() {
    let p = ParameterSet::real(0.7, -1.3, 2.4, 1.9, 0.8);
    let b = f2_spec().bind(&p);
    let (x, y) = (r(0.3), r(-0.45));
    for (m, n) in [(0, 0), (2, 5), (9, 1)] {
        let t = b.term(x, y, m, n).unwrap();
        let rm = b.term(x, y, m + 1, n).unwrap() / t;
        let rn = b.term(x, y, m, n + 1).unwrap() / t;
        assert!((b.term_ratio_m(x, m, n).unwrap() - rm).norm() < 1e-13 * rm.norm());
        assert!((b.term_ratio_n(y, m, n).unwrap() - rn).norm() < 1e-13 * rn.norm());
    }
    assert_eq!(b.term_ratio_m(r(0.0), 4, 4).unwrap(), r(0.0));
}

#[test]
fn terminating_ratio_then_zero_term() {
    let p = ParameterSet::real(-3.0, 1.0, 1.0, 1.0, 1.0);
    let b = f2_spec().bind(&p);
    // (−3)_{m+n} stops at m + n = 3: the step from m = 3 is still defined
    // and vanishes, beyond it the term itself is zero
    assert_eq!(b.term_ratio_m(r(0.5), 2, 0).unwrap(), r(-0.5 / 3.0));
    assert_eq!(b.term_ratio_m(r(0.5), 3, 0).unwrap(), r(0.0));
    assert!(matches!(b.term_ratio_m(r(0.5), 4, 0), Err(F2Error::ZeroTerm(4, 0))));
    assert!(matches!(b.term_ratio_n(r(0.5), 2, 2), Err(F2Error::ZeroTerm(2, 2))));
}

#[test]
fn rate_probe_values() {
    let p = ParameterSet::real(1.3, 0.7, 2.1, 1.9, 0.4);
    let b = f2_spec().bind(&p);
    assert_eq!(b.rate_probe(r(0.0), r(0.0)), (0.0, 0.0));
    // the F₂ ratios approach 2X and 2Y along the diagonal
    let (s, t) = b.rate_probe(r(0.6), r(0.6));
    assert!(s.hypot(t) > 1.0);
    assert!((s - 1.2).abs() < 0.05 && (t - 1.2).abs() < 0.05, "{s} {t}");
    let (s, t) = b.rate_probe(r(0.2), r(-0.1));
    assert!(s.hypot(t) < 1.0);
}

#[test]
fn recurrences_agree_with_gamma_products() {
    let p = ParameterSet::new(
        Complex64::new(0.35, 0.2),
        r(1.45),
        r(-0.6),
        r(2.3),
        Complex64::new(1.15, -0.3),
    );
    let (x, y) = (r(0.31), Complex64::new(-0.22, 0.05));
    for spec in [f2_spec(), mirror_spec(), h2_spec()] {
        let b = spec.bind(&p);
        for (m, n) in [(3, 7), (10, 2), (20, 20)] {
            let g = term_by_gamma(&b, x, y, m, n);
            let d = b.term(x, y, m, n).unwrap();
            let c = term_by_ratios(&b, x, y, m, n);
            assert!((d - g).norm() < 1e-10 * g.norm(), "({m}, {n}): {d} vs {g}");
            assert!((c - g).norm() < 1e-10 * g.norm(), "({m}, {n}): {c} vs {g}");
        }
    }
}

#[test]
fn cancelling_weights_drop_out() {
    let p = ParameterSet::real(0.7, -1.3, 2.4, 1.9, 0.8);
    let mut padded = f2_spec();
    padded.upper_plus.push(combo("b1+c2"));
    padded.lower_plus.push(combo("b1+c2"));
    padded.upper_m.push(combo("a-2"));
    padded.lower_m.push(combo("a-2"));
    let plain = sum_double_series(&f2_spec(), &p, r(0.3), r(-0.2), 50).unwrap();
    let both = sum_double_series(&padded, &p, r(0.3), r(-0.2), 50).unwrap();
    assert!((plain.value - both.value).norm() < 1e-14 * plain.value.norm());
}

#[test]
fn zero_terms_rejected() {
    let p = ParameterSet::real(0.7, -1.3, 2.4, 1.9, 0.8);
    assert!(matches!(
        sum_double_series(&f2_spec(), &p, r(0.1), r(0.1), 0),
        Err(F2Error::InvalidArgument(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partial_sums_are_prefixes(
        a in -3.0..3.0f64, b1 in -3.0..3.0f64, b2 in -3.0..3.0f64,
        c1 in 0.2..3.0f64, c2 in 0.2..3.0f64,
        x in -0.45..0.45f64, y in -0.45..0.45f64,
        t1 in 1usize..30, extra in 1usize..30,
    ) {
        let p = ParameterSet::real(a, b1, b2, c1, c2);
        for spec in [f2_spec(), h2_spec()] {
            let b = spec.bind(&p);
            let mut rings = Vec::new();
            let mut cb = |_k: usize, v: Complex64| rings.push(v);
            b.sum(r(x), r(y), t1 + extra, Some(&mut cb)).unwrap();
            let short = b.sum(r(x), r(y), t1, None).unwrap();
            // exact equality: the longer sum passes through the shorter one
            prop_assert_eq!(rings[t1 - 1], short.value);
        }
    }
}
