use appellf2::catalog::{
    evaluate_prefactor, instantiate, representation, rewrite_condition, ArgExpr, Prefactor,
    RewriteCondition,
};
use appellf2::oracles::{euler_quad_f2, single_sum_f2};
use appellf2::params::combo;
use appellf2::selector::{check_point, convergence_rate};
use appellf2::special::gamma;
use appellf2::{
    evaluate_with, expose, find_all, list_representations, roc_contains, Complex64, EvalOptions,
    F2Error, ParameterSet, SeriesId,
};
use proptest::prelude::*;

const PARTNERS: [(u8, u8); 6] = [(6, 9), (7, 10), (8, 11), (12, 14), (13, 15), (17, 18)];

fn id(k: u8) -> SeriesId {
    SeriesId::new(k).unwrap()
}

fn r(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm()
}

/// Independent complex evaluation of every argument expression.
fn eval_c(e: ArgExpr, x: Complex64, y: Complex64) -> Complex64 {
    use ArgExpr::*;
    let one = r(1.0);
    let s = x + y - one;
    match e {
        X => x,
        Y => y,
        OneMinusX => one - x,
        OneMinusY => one - y,
        OneMinusXMinusY => one - x - y,
        NegX => -x,
        NegY => -y,
        InvX => one / x,
        InvY => one / y,
        NegInvX => -one / x,
        NegInvY => -one / y,
        InvOneMinusX => one / (one - x),
        InvOneMinusY => one / (one - y),
        XOverXMinus1 => x / (x - one),
        YOverYMinus1 => y / (y - one),
        NegXOverXMinus1 => -x / (x - one),
        NegYOverYMinus1 => -y / (y - one),
        XOverOneMinusY => x / (one - y),
        YOverOneMinusX => y / (one - x),
        XOverYMinus1 => x / (y - one),
        YOverXMinus1 => y / (x - one),
        OneMinusXOverY => (one - x) / y,
        OneMinusYOverX => (one - y) / x,
        XMinus1OverX => (x - one) / x,
        YMinus1OverY => (y - one) / y,
        XOverS => x / s,
        YOverS => y / s,
        NegXOverS => -x / s,
        NegYOverS => -y / s,
        SOverX => s / x,
        SOverY => s / y,
        XMinus1OverS => (x - one) / s,
        YMinus1OverS => (y - one) / s,
        SOverXMinus1 => s / (x - one),
        SOverYMinus1 => s / (y - one),
        NegXOverY => -x / y,
        NegYOverX => -y / x,
    }
}

/// Grid over [−6, 6]² skipping points near singular lines and exceptional points.
fn grid(n: usize) -> impl Iterator<Item = (f64, f64)> {
    let step = 12.0 / (n - 1) as f64;
    (0..n).flat_map(move |i| (0..n).map(move |j| (-6.0 + i as f64 * step, -6.0 + j as f64 * step)))
        .filter(|&(x, y)| check_point(x, y, 1e-3).is_ok())
}

#[test]
fn catalog_shape() {
    let reps = list_representations();
    assert_eq!(reps.len(), 18);
    assert!(roc_contains(reps[0].id(), 0.3, 0.3));
    assert_eq!(reps[16].package, 8);
    let packages: Vec<u32> = reps.iter().map(|r| r.package).collect();
    assert_eq!(
        packages,
        vec![1, 23, 34, 14, 25, 4, 15, 37, 5, 27, 38, 6, 17, 7, 29, 40, 8, 9]
    );
    assert_eq!("#15".parse::<SeriesId>().unwrap(), id(7));
    assert_eq!("29".parse::<SeriesId>().unwrap(), id(15));
    assert_eq!("S18".parse::<SeriesId>().unwrap(), id(18));
}

#[test]
fn roc_texts_and_membership() {
    assert_eq!(representation(id(1)).roc_text(), "Abs[x]+Abs[y]<1");
    assert_eq!(
        representation(id(7)).roc_text(),
        "Abs[(x+y-1)/x]<1 && Abs[x/(x-1)]<1"
    );
    assert_eq!(
        representation(id(17)).roc_text(),
        "Abs[x]<1 && Abs[-1/y]<1 && (Abs[x]+1) Abs[-1/y]<1"
    );
    assert!(roc_contains(id(1), 0.3, -0.6));
    assert!(!roc_contains(id(1), 0.5, 0.5));
    assert!(!roc_contains(id(1), 0.6, -0.4));
    assert!(roc_contains(id(17), 0.2, -3.0));
    assert!(roc_contains(id(17), 0.6, 2.0));
    assert!(!roc_contains(id(17), 0.6, 1.5));
}

#[test]
fn prefactor_branches() {
    let p = ParameterSet::real(0.4, 1.3, 0.9, 2.2, 1.7);
    let xy = Prefactor::new(ArgExpr::XOverYMinus1, combo("-a-b2+c2"));
    let v = evaluate_prefactor(&xy, &p, 1.0, 3.0).unwrap();
    assert!(close(v, r(2f64.powf(0.4 + 0.9 - 1.7)), 1e-14));
    let inv = Prefactor::new(ArgExpr::InvOneMinusX, combo("-a+b1"));
    let v = evaluate_prefactor(&inv, &p, -3.0, 0.2).unwrap();
    assert!(close(v, r(4f64.powf(0.4 - 1.3)), 1e-14));
    let q = ParameterSet::real(1.3, 1.3, 0.9, 2.2, 1.7);
    let zero = Prefactor::new(ArgExpr::NegXOverS, combo("a-b1"));
    assert_eq!(evaluate_prefactor(&zero, &q, 3.0, 0.5).unwrap(), r(1.0));
    // negative base: arg +π while x − y + 1 > 0, through 1/f (arg −π) otherwise
    let alpha: f64 = -0.4 - 0.9 + 1.7;
    let pi = std::f64::consts::PI;
    let v = evaluate_prefactor(&xy, &p, 3.0, 0.5).unwrap();
    let want = Complex64::from_polar(6f64.powf(alpha), pi * alpha);
    assert!(close(v, want, 1e-13), "{v} vs {want}");
    let v = evaluate_prefactor(&xy, &p, -3.0, 3.0).unwrap();
    let want = Complex64::from_polar(1.5f64.powf(alpha), -pi * alpha);
    assert!(close(v, want, 1e-13), "{v} vs {want}");
}

#[test]
fn instantiate_simple_representations() {
    let p = ParameterSet::real(0.4, 1.3, 0.9, 2.2, 1.7);
    let s1 = instantiate(id(1), &p, 0.2, -0.5).unwrap();
    assert_eq!(s1.len(), 1);
    assert_eq!(s1[0].coefficient, r(1.0));
    assert_eq!((s1[0].x, s1[0].y), (r(0.2), r(-0.5)));
    let s2 = instantiate(id(2), &p, 0.2, -0.5).unwrap();
    assert!(close(s2[0].coefficient, r(1.5f64.powf(-0.4)), 1e-14));
    assert!((s2[0].x.re - 0.2 / 1.5).abs() < 1e-15);
    assert!((s2[0].y.re - 1.0 / 3.0).abs() < 1e-15);
    assert!(close(s2[0].series.upper_n[0], r(1.7 - 0.9), 1e-15));
}

#[test]
fn s6_coefficients() {
    let (a, b1, b2, c1, c2): (f64, f64, f64, f64, f64) = (0.37, 1.21, 0.58, 2.43, 1.86);
    let p = ParameterSet::real(a, b1, b2, c1, c2);
    let g = |z: f64| gamma(r(z)).unwrap();
    let (x, y): (f64, f64) = (-0.8, 0.5);
    let e = c2 - a - b2;
    let want = [
        g(c2) * g(e) / (g(c2 - a) * g(c2 - b2)),
        g(c1) * g(c2) * g(-e) * g(b1 - b2 + c2 - a) / (g(a) * g(b1) * g(b2) * g(c1 + e))
            * (1.0 - y).powf(e)
            * (x / (y - 1.0)).powf(e),
        g(c1) * g(c2) * g(a - b1 + b2 - c2) / (g(a) * g(b2) * g(c1 - b1))
            * (x / (y - 1.0)).powf(-b1)
            * (1.0 - y).powf(e),
    ];
    let comps = instantiate(id(6), &p, x, y).unwrap();
    for (c, w) in comps.iter().zip(want) {
        assert!(close(c.coefficient, w, 1e-12), "{} vs {w}", c.coefficient);
    }
    // c₂ − a − b₂ = 1: Γ(a + b₂ − c₂) sits on a pole
    let log = ParameterSet::real(1.0, 1.0, 1.0, 3.0, 3.0);
    assert!(matches!(instantiate(id(6), &log, x, y), Err(F2Error::LogarithmicCase(_))));
}

#[test]
fn expose_listing() {
    assert_eq!(
        expose(id(1)),
        "S1 (#1) ROC: Abs[x]+Abs[y]<1\n  [1] F2(a, b1, b2; c1, c2; x, y)\n"
    );
    assert_eq!(
        expose(id(2)),
        "S2 (#23) ROC: Abs[x/(1-y)]+Abs[y/(y-1)]<1\n  \
         [1] (1-y)^(-a) * F2(a, b1, -b2+c2; c1, c2; x/(1-y), y/(y-1))\n"
    );
    let s17 = expose(id(17));
    assert!(s17.starts_with("S17 (#8) ROC: Abs[x]<1 && Abs[-1/y]<1"));
    assert!(s17.contains("H2(a-b2, b1, b2, b2-c2+1; c1; x, -1/y)"));
    let s7 = expose(id(7));
    assert_eq!(s7.lines().count(), 4);
    assert!(s7.contains("<((x+y-1)/(x-1))^(-a-b2+c2)>[-x+y+1>0]"));
}

/// For every power base that is negative somewhere inside a region where it
/// is used, the branch taken must match the sign of Im f(x − iδ, y − iδ).
#[test]
fn branch_rules_follow_the_lower_limit() {
    let delta = 1e-7;
    let mut checked = 0usize;
    for rep in list_representations() {
        for comp in &rep.components {
            for pf in &comp.prefactors {
                assert_eq!(pf.condition, rewrite_condition(pf.base));
                for (x, y) in grid(161) {
                    if !roc_contains(rep.id(), x, y) {
                        continue;
                    }
                    let f = pf.base.eval(x, y);
                    if f >= 0.0 {
                        continue;
                    }
                    let im = eval_c(pf.base, Complex64::new(x, -delta), Complex64::new(y, -delta)).im;
                    // skip points where the first-order shift is too small to read
                    if im.abs() < 1e-3 * delta * f.abs().max(1.0) {
                        continue;
                    }
                    checked += 1;
                    let direct = pf.condition.holds(x, y);
                    assert_eq!(
                        direct,
                        im > 0.0,
                        "{} in {}: base {} at ({x}, {y}), Im = {im:e}, rule {}",
                        rep.id(),
                        rep.id(),
                        pf.base,
                        pf.condition.text()
                    );
                }
            }
        }
    }
    assert!(checked > 1000);
    assert_eq!(rewrite_condition(ArgExpr::X), RewriteCondition::None);
}

#[test]
fn regions_cover_the_plane() {
    let mut missed = Vec::new();
    for (x, y) in grid(400) {
        if find_all(x, y).unwrap().is_empty() {
            missed.push((x, y));
        }
    }
    assert!(missed.is_empty(), "{} uncovered, first {:?}", missed.len(), &missed[..missed.len().min(5)]);
}

#[test]
fn partner_regions_swap() {
    for (p, q) in PARTNERS {
        for (x, y) in grid(121) {
            assert_eq!(
                roc_contains(id(p), x, y),
                roc_contains(id(q), y, x),
                "S{p}/S{q} at ({x}, {y})"
            );
        }
    }
    // the remaining entries are their own partners
    for k in [1u8, 2, 3, 4, 5, 16] {
        let partnered = PARTNERS.iter().any(|&(p, q)| p == k || q == k);
        assert!(!partnered);
    }
}

/// Generic real parameters, inside the domain of the Euler integral.
fn witness_params() -> ParameterSet {
    ParameterSet::real(0.31, 0.47, 0.63, 1.79, 2.13)
}

#[test]
fn every_representation_agrees_with_an_oracle() {
    let p = witness_params();
    let opts = EvalOptions::new(12, 200);
    for rep in list_representations() {
        // fastest grid point inside the region where an oracle applies
        let mut best: Option<(f64, f64, f64)> = None;
        for (x, y) in grid(97) {
            if !roc_contains(rep.id(), x, y) {
                continue;
            }
            let single = x.abs() < 0.7 * (1.0 - y).abs().min(1.0);
            let quad = y < 0.9 && x < 0.9 * (1.0 - y).min(1.0);
            if !(single || quad) {
                continue;
            }
            let rate = convergence_rate(rep.id(), &p, x, y).unwrap();
            if best.map_or(true, |b| rate < b.2) {
                best = Some((x, y, rate));
            }
        }
        let (x, y, _) = best.unwrap_or_else(|| panic!("no witness for {}", rep.id()));
        let v = evaluate_with(rep.id(), &p, x, y, &opts).unwrap();
        let single = x.abs() < 0.7 * (1.0 - y).abs().min(1.0);
        let oracle = if single {
            single_sum_f2(&p, x, y, 400).unwrap()
        } else {
            euler_quad_f2(&p, x, y, 1e-11).unwrap()
        };
        assert!(
            close(v.value, oracle.value, 1e-9),
            "{} at ({x}, {y}): {} vs {} ({})",
            rep.id(),
            v.value,
            oracle.value,
            oracle.method
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partner_values_swap(
        pair in 0usize..6,
        a in -2.0..2.0f64, b1 in -2.0..2.0f64, b2 in -2.0..2.0f64,
        c1 in 0.3..3.0f64, c2 in 0.3..3.0f64,
        x in -6.0..6.0f64, y in -6.0..6.0f64,
    ) {
        let (pi, qi) = PARTNERS[pair];
        prop_assume!(check_point(x, y, 1e-2).is_ok() && roc_contains(id(pi), x, y));
        let p = ParameterSet::real(a, b1, b2, c1, c2);
        let opts = EvalOptions::new(10, 120);
        let lhs = evaluate_with(id(pi), &p, x, y, &opts);
        let rhs = evaluate_with(id(qi), &p.swapped(), y, x, &opts);
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                let tol = 10.0 * (l.error_estimate + l.roundoff_estimate
                    + r.error_estimate + r.roundoff_estimate)
                    + 1e-12 * l.value.norm();
                prop_assert!((l.value - r.value).norm() <= tol, "{} vs {}", l.value, r.value);
            }
            (Err(e1), Err(e2)) => prop_assert_eq!(
                std::mem::discriminant(&e1),
                std::mem::discriminant(&e2)
            ),
            (l, r) => prop_assert!(false, "{:?} vs {:?}", l.map(|v| v.value), r.map(|v| v.value)),
        }
    }
}
