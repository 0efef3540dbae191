//! Independent reference evaluations of F₂, used to cross-check the
//! representation catalog.

mod quad;

pub use quad::{integrate, QuadResult};

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::roc_contains;
use crate::error::{F2Error, Result};
use crate::gauss::gauss_2f1;
use crate::params::ParameterSet;
use crate::selector::{check_point, evaluate_with, find_all, EvalOptions, EPS_SING};
use crate::special::{gamma_ratio, log_gamma, nonpositive_integer};

/// Which reference method produced an [`OracleResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleMethod {
    BruteForce,
    SingleSum,
    EulerQuad,
}

impl fmt::Display for OracleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleMethod::BruteForce => "bruteForce",
            OracleMethod::SingleSum => "singleSum",
            OracleMethod::EulerQuad => "eulerQuad",
        })
    }
}

/// A reference value. Outside an oracle's domain the call returns an error
/// instead, so a result always carries a value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: Complex64,
    pub method: OracleMethod,
    /// Rough absolute error bound, truncation plus rounding where tracked.
    pub estimated_accuracy: f64,
}

/// ln (z)_k, or `None` when (z)_k vanishes.
fn ln_pochhammer(z: Complex64, k: usize) -> Result<Option<Complex64>> {
    if k == 0 {
        return Ok(Some(Complex64::new(0.0, 0.0)));
    }
    let kf = k as f64;
    if let Some(n) = nonpositive_integer(z) {
        // (−N)_k = (−1)^k N! / (N − k)!
        let big_n = -n as f64;
        if kf > big_n {
            return Ok(None);
        }
        let mag = log_gamma(Complex64::new(big_n + 1.0, 0.0))?
            - log_gamma(Complex64::new(big_n - kf + 1.0, 0.0))?;
        let phase = if k % 2 == 1 { std::f64::consts::PI } else { 0.0 };
        return Ok(Some(mag + Complex64::new(0.0, phase)));
    }
    Ok(Some(log_gamma(z + kf)? - log_gamma(z)?))
}

/// The defining double series over 0 ≤ m, n < `terms`, every term built
/// from Pochhammer symbols in log space. Valid for |x| + |y| < 1.
pub fn brute_force_f2(p: &ParameterSet, x: f64, y: f64, terms: usize) -> Result<OracleResult> {
    if !(x.abs() + y.abs() < 1.0) {
        return Err(F2Error::Domain(format!("|x| + |y| < 1 fails at ({x}, {y})")));
    }
    p.check()?;
    let table = |z: Complex64, len: usize| -> Result<Vec<Option<Complex64>>> {
        (0..len).map(|k| ln_pochhammer(z, k)).collect()
    };
    let one = Complex64::new(1.0, 0.0);
    let a = table(p.a, 2 * terms)?;
    let (b1, b2) = (table(p.b1, terms)?, table(p.b2, terms)?);
    let (c1, c2) = (table(p.c1, terms)?, table(p.c2, terms)?);
    let fact = table(one, terms)?;
    let ln_pow = |v: f64, k: usize| if k == 0 { 0.0 } else { k as f64 * v.abs().ln() };
    let sign = |v: f64, k: usize| if v < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    let mut total = Complex64::new(0.0, 0.0);
    let mut edge: f64 = 0.0;
    // exp(l) inherits an absolute error of a few ulps of |l|.
    let mut rounding = 0.0;
    for m in 0..terms {
        for n in 0..terms {
            let (Some(la), Some(lb1), Some(lb2)) = (a[m + n], b1[m], b2[n]) else {
                continue;
            };
            let (lc1, lc2, fm, fn_) = (c1[m].unwrap(), c2[n].unwrap(), fact[m].unwrap(), fact[n].unwrap());
            let l = la + lb1 + lb2 - lc1 - lc2 - fm - fn_ + ln_pow(x, m) + ln_pow(y, n);
            let t = l.exp() * (sign(x, m) * sign(y, n));
            total += t;
            rounding += t.norm() * (l.norm() + 1.0) * 8.0 * f64::EPSILON;
            if m + 1 == terms || n + 1 == terms {
                edge = edge.max(t.norm());
            }
        }
    }
    Ok(OracleResult { value: total, method: OracleMethod::BruteForce, estimated_accuracy: edge + rounding })
}

/// Σ_m (a)_m (b₁)_m / ((c₁)_m m!) x^m ₂F₁(a + m, b₂; c₂; y), valid for
/// |x| < min(1, |1 − y|).
pub fn single_sum_f2(p: &ParameterSet, x: f64, y: f64, terms: usize) -> Result<OracleResult> {
    if !(x.abs() < 1.0_f64.min((1.0 - y).abs())) {
        return Err(F2Error::Domain(format!(
            "single sum needs |x| < min(1, |1 - y|) at ({x}, {y})"
        )));
    }
    p.check()?;
    let mut coeff = Complex64::new(1.0, 0.0);
    let mut total = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    let mut quiet = 0;
    for m in 0..terms {
        let mf = m as f64;
        let term = coeff * gauss_2f1(p.a + mf, p.b2, p.c2, y)?;
        total += term;
        last = term.norm();
        if last <= 1e-17 * total.norm() {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        coeff = coeff * (p.a + mf) * (p.b1 + mf) / ((p.c1 + mf) * (mf + 1.0)) * x;
    }
    Ok(OracleResult { value: total, method: OracleMethod::SingleSum, estimated_accuracy: last })
}

/// One-dimensional Euler integral
///
/// ```text
/// Γ(c₂)/(Γ(b₂)Γ(c₂−b₂)) ∫₀¹ v^{b₂−1} (1−v)^{c₂−b₂−1} (1−vy)^{−a} ₂F₁(a, b₁; c₁; x/(1−vy)) dv
/// ```
///
/// needing Re b₂ > 0, Re(c₂ − b₂) > 0 and x/(1 − vy) off [1, ∞) on [0, 1].
/// Endpoint singularities are removed by v = u^{1/Re b₂} near 0 and the
/// mirrored substitution near 1.
pub fn euler_quad_f2(p: &ParameterSet, x: f64, y: f64, rel_tol: f64) -> Result<OracleResult> {
    let beta = p.b2.re;
    let gamma = (p.c2 - p.b2).re;
    if !(beta > 0.0 && gamma > 0.0) {
        return Err(F2Error::Domain(
            "Euler integral needs Re b2 > 0 and Re(c2 - b2) > 0".into(),
        ));
    }
    if !(y < 1.0 && x < 1.0_f64.min(1.0 - y)) {
        return Err(F2Error::Domain(format!(
            "x/(1 - v y) meets [1, inf) for some v in [0, 1] at ({x}, {y})"
        )));
    }
    p.check()?;
    let one = Complex64::new(1.0, 0.0);
    let body = |v: f64| -> Result<Complex64> {
        let w = 1.0 - v * y;
        let f = gauss_2f1(p.a, p.b1, p.c1, x / w)?;
        Ok(Complex64::new(w, 0.0).powc(-p.a) * f)
    };
    // Near v = 0: v = u^{1/β}, v^{b₂−1} dv = (1/β) u^{i Im b₂ / β} du.
    let left = |u: f64| -> Result<Complex64> {
        let v = u.powf(1.0 / beta);
        let w = Complex64::new(0.0, p.b2.im / beta * u.ln()).exp() / beta;
        let tail = Complex64::new(1.0 - v, 0.0).powc(p.c2 - p.b2 - one);
        Ok(w * tail * body(v)?)
    };
    // Near v = 1: 1 − v = u^{1/γ}.
    let right = |u: f64| -> Result<Complex64> {
        let s = u.powf(1.0 / gamma);
        let v = 1.0 - s;
        let w = Complex64::new(0.0, (p.c2 - p.b2).im / gamma * u.ln()).exp() / gamma;
        let head = Complex64::new(v, 0.0).powc(p.b2 - one);
        Ok(w * head * body(v)?)
    };
    let l = integrate(left, 0.0, 0.5f64.powf(beta), rel_tol)?;
    let r = integrate(right, 0.0, 0.5f64.powf(gamma), rel_tol)?;
    let pre = gamma_ratio(&[p.c2], &[p.b2, p.c2 - p.b2])?;
    Ok(OracleResult {
        value: pre * (l.value + r.value),
        method: OracleMethod::EulerQuad,
        estimated_accuracy: pre.norm() * (l.error + r.error),
    })
}

/// Every oracle whose domain holds the point, with default settings.
pub fn all_oracles(p: &ParameterSet, x: f64, y: f64) -> Vec<OracleResult> {
    [
        brute_force_f2(p, x, y, 200),
        single_sum_f2(p, x, y, 400),
        euler_quad_f2(p, x, y, 1e-10),
    ]
    .into_iter()
    .filter_map(|r| r.ok())
    .collect()
}

/// Normalized residuals of the two partial differential equations of F₂
///
/// ```text
/// x(1−x)r − xy s + [c₁ − (a+b₁+1)x]p − b₁ y q − a b₁ z = 0
/// y(1−y)t − xy s + [c₂ − (a+b₂+1)y]q − b₂ x p − a b₂ z = 0
/// ```
///
/// from central differences of step h. Each residual is divided by the
/// largest modulus among its terms. All nine stencil values come from one
/// representation whose region holds the whole stencil.
pub fn pde_residual(p: &ParameterSet, x: f64, y: f64, h: f64) -> Result<(f64, f64)> {
    let stencil: Vec<(f64, f64)> = (-1..=1)
        .flat_map(|i| (-1..=1).map(move |j| (x + i as f64 * h, y + j as f64 * h)))
        .collect();
    let side = |u: f64, v: f64| {
        [u > 0.0, v > 0.0, u > 1.0, v > 1.0, u + v > 1.0]
    };
    let s0 = side(x, y);
    for &(u, v) in &stencil {
        check_point(u, v, EPS_SING)
            .map_err(|e| F2Error::StencilDomain(format!("stencil point ({u}, {v}): {e}")))?;
        if side(u, v) != s0 {
            return Err(F2Error::StencilDomain(format!(
                "stencil around ({x}, {y}) crosses a singular line"
            )));
        }
    }
    // Second differences amplify value noise by 1/h², so the representation
    // with the smallest estimated relative error at the centre is used.
    let opts = EvalOptions::new(15, 200);
    let mut last = None;
    let mut ids = Vec::new();
    for id in find_all(x, y)? {
        if !stencil.iter().all(|&(u, v)| roc_contains(id, u, v)) {
            continue;
        }
        match evaluate_with(id, p, x, y, &opts) {
            Ok(r) => ids.push(((r.error_estimate + r.roundoff_estimate) / r.value.norm(), id)),
            Err(e) => last = Some(e),
        }
    }
    ids.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (_, id) in ids {
        let vals: Result<Vec<Complex64>> = stencil
            .iter()
            .map(|&(u, v)| evaluate_with(id, p, u, v, &opts).map(|r| r.value))
            .collect();
        match vals {
            Ok(f) => return Ok(residuals(p, x, y, h, &f)),
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| {
        F2Error::StencilDomain(format!("no single region holds the stencil around ({x}, {y})"))
    }))
}

/// `f` is indexed as f[3(i+1) + (j+1)] = F(x + ih, y + jh).
fn residuals(p: &ParameterSet, x: f64, y: f64, h: f64, f: &[Complex64]) -> (f64, f64) {
    let at = |i: i32, j: i32| f[(3 * (i + 1) + (j + 1)) as usize];
    let z = at(0, 0);
    let fx = (at(1, 0) - at(-1, 0)) / (2.0 * h);
    let fy = (at(0, 1) - at(0, -1)) / (2.0 * h);
    let fxx = (at(1, 0) - 2.0 * z + at(-1, 0)) / (h * h);
    let fyy = (at(0, 1) - 2.0 * z + at(0, -1)) / (h * h);
    let fxy = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
    let one = Complex64::new(1.0, 0.0);
    let e1 = [
        fxx * (x * (1.0 - x)),
        -fxy * (x * y),
        fx * (p.c1 - (p.a + p.b1 + one) * x),
        -(p.b1 * fy * y),
        -(p.a * p.b1 * z),
    ];
    let e2 = [
        fyy * (y * (1.0 - y)),
        -fxy * (x * y),
        fy * (p.c2 - (p.a + p.b2 + one) * y),
        -(p.b2 * fx * x),
        -(p.a * p.b2 * z),
    ];
    let norm = |e: &[Complex64; 5]| {
        let scale = e.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let total: Complex64 = e.iter().sum();
        if scale == 0.0 {
            0.0
        } else {
            total.norm() / scale
        }
    };
    (norm(&e1), norm(&e2))
}
