//! Gauss hypergeometric function ₂F₁(a, b; c; z) for complex parameters and
//! real argument.
//!
//! Argument regions and the mapping used in each:
//!
//! ```text
//! |z| ≤ 1/2         direct series
//! −2 ≤ z < −1/2     Pfaff, z/(z−1) ∈ (1/3, 2/3]
//! z < −2            expansion at infinity, 1/z ∈ (−1/2, 0)
//! 1/2 < z ≤ 2       expansion at one, 1 − z ∈ [−1, 1/2)
//! z > 2             expansion at infinity, 1/z ∈ (0, 1/2)
//! ```
//!
//! For −2 ≤ z ≤ 1/2 the direct series, both Pfaff forms and the Euler
//! transform are candidates; the first whose terms do not cancel badly is
//! used, otherwise the one with the least cancellation.
//!
//! On the cut z > 1 every power is taken on the principal branch, which is
//! the boundary value from below, ₂F₁(a, b; c; z − i0).

use num_complex::Complex64;

use crate::error::{F2Error, Result};
use crate::special::{cpow, gamma_ratio, nonpositive_integer};

const MAX_SERIES_TERMS: usize = 20_000;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// ₂F₁(a, b; c; z) on the real line.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(F2Error::Domain(format!("₂F₁ at z = {z}")));
    }
    // Canonical parameter order keeps the function exactly symmetric in (a, b).
    let (a, b) = if (a.re, a.im) <= (b.re, b.im) { (a, b) } else { (b, a) };
    if let Some(n) = terminating(a, b) {
        return polynomial(a, b, c, z, n);
    }
    if nonpositive_integer(c).is_some() {
        return Err(F2Error::Domain(format!("₂F₁ with c = {c}")));
    }
    dispatch(a, b, c, z)
}

fn terminating(a: Complex64, b: Complex64) -> Option<u64> {
    let na = nonpositive_integer(a).map(|n| (-n) as u64);
    let nb = nonpositive_integer(b).map(|n| (-n) as u64);
    match (na, nb) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        _ => None,
    }
}

fn polynomial(a: Complex64, b: Complex64, c: Complex64, z: f64, n: u64) -> Result<Complex64> {
    Ok(polynomial_terms(a, b, c, z, n)?.0)
}

/// Polynomial value and the largest term modulus.
fn polynomial_terms(a: Complex64, b: Complex64, c: Complex64, z: f64, n: u64) -> Result<(Complex64, f64)> {
    let mut term = one();
    let mut sum = one();
    let mut max: f64 = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let den = (c + kf) * (kf + 1.0);
        if den.norm() == 0.0 {
            return Err(F2Error::Domain(format!("₂F₁ polynomial with c = {c}")));
        }
        term = term * (a + kf) * (b + kf) / den * z;
        sum += term;
        max = max.max(term.norm());
    }
    Ok((sum, max))
}

fn dispatch(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    if (-2.0..=0.5).contains(&z) {
        least_cancelling(a, b, c, z)
    } else if z < -2.0 || z > 2.0 {
        at_infinity(a, b, c, z)
    } else if z == 1.0 {
        at_one(a, b, c)
    } else {
        match around_one(a, b, c, z) {
            Err(F2Error::LogarithmicCase(_)) if z > 0.5 && z <= 0.9 => series(a, b, c, z),
            r => r,
        }
    }
}

/// Worst acceptable ratio of the largest term to the sum.
const CANCELLATION_OK: f64 = 16.0;

/// ₂F₁ for −2 ≤ z ≤ 1/2 through the least cancelling of the direct series,
/// the two Pfaff forms (z < 0) and the Euler transform (z > 0).
fn least_cancelling(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let w = z / (z - 1.0);
    let base = Complex64::new(1.0 - z, 0.0);
    let direct = || -> Result<(Complex64, Complex64, f64)> {
        let (v, m) = series_terms(a, b, c, z)?;
        Ok((one(), v, m))
    };
    let pfaff_a = || -> Result<(Complex64, Complex64, f64)> {
        let (v, m) = series_terms(a, c - b, c, w)?;
        Ok((cpow(base, -a)?, v, m))
    };
    let pfaff_b = || -> Result<(Complex64, Complex64, f64)> {
        let (v, m) = series_terms(b, c - a, c, w)?;
        Ok((cpow(base, -b)?, v, m))
    };
    let euler = || -> Result<(Complex64, Complex64, f64)> {
        let (v, m) = series_terms(c - a, c - b, c, z)?;
        Ok((cpow(base, c - a - b)?, v, m))
    };
    type Route<'r> = &'r dyn Fn() -> Result<(Complex64, Complex64, f64)>;
    let routes: Vec<Route> = if z < -0.5 {
        vec![&pfaff_a, &pfaff_b]
    } else if z < 0.0 {
        vec![&direct, &pfaff_a, &pfaff_b]
    } else {
        vec![&direct, &euler]
    };
    let mut best: Option<(Complex64, f64)> = None;
    let mut first_err = None;
    for route in routes {
        match route() {
            Ok((pre, v, max)) => {
                let ratio = if v.norm() > 0.0 { max / v.norm() } else { f64::INFINITY };
                if best.map_or(true, |(_, r)| ratio < r) {
                    best = Some((pre * v, ratio));
                }
                if ratio <= CANCELLATION_OK {
                    break;
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match (best, first_err) {
        (Some((v, _)), _) => Ok(v),
        (None, Some(e)) => Err(e),
        (None, None) => unreachable!("at least one route is tried"),
    }
}

fn series(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    Ok(series_terms(a, b, c, z)?.0)
}

/// Series value and the largest term modulus.
fn series_terms(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<(Complex64, f64)> {
    if let Some(n) = terminating(a, b) {
        return polynomial_terms(a, b, c, z, n);
    }
    if nonpositive_integer(c).is_some() {
        return Err(F2Error::Domain(format!("₂F₁ with c = {c}")));
    }
    let mut term = one();
    let mut sum = one();
    let mut max: f64 = 1.0;
    let mut quiet = 0;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        max = max.max(term.norm());
        if term.norm() <= 1e-17 * sum.norm() {
            quiet += 1;
            if quiet >= 3 {
                return Ok((sum, max));
            }
        } else {
            quiet = 0;
        }
    }
    Err(F2Error::Domain(format!(
        "₂F₁ series at z = {z} did not settle in {MAX_SERIES_TERMS} terms"
    )))
}

fn at_one(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    if (c - a - b).re <= 0.0 {
        return Err(F2Error::Domain(format!(
            "₂F₁ at z = 1 needs Re(c − a − b) > 0, got {}",
            c - a - b
        )));
    }
    gamma_ratio(&[c, c - a - b], &[c - a, c - b])
}

fn around_one(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let w = 1.0 - z;
    let s = c - a - b;
    let g1 = gamma_ratio(&[c, s], &[c - a, c - b])?;
    let g2 = gamma_ratio(&[c, -s], &[a, b])?;
    let mut v = Complex64::new(0.0, 0.0);
    if g1 != Complex64::new(0.0, 0.0) {
        v += g1 * dispatch_inner(a, b, one() - s, w)?;
    }
    if g2 != Complex64::new(0.0, 0.0) {
        let pre = cpow(Complex64::new(w, 0.0), s)?;
        v += g2 * pre * dispatch_inner(c - a, c - b, one() + s, w)?;
    }
    Ok(v)
}

fn at_infinity(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let w = 1.0 / z;
    let mz = Complex64::new(-z, 0.0);
    let g1 = gamma_ratio(&[c, b - a], &[b, c - a])?;
    let g2 = gamma_ratio(&[c, a - b], &[a, c - b])?;
    let mut v = Complex64::new(0.0, 0.0);
    if g1 != Complex64::new(0.0, 0.0) {
        v += g1 * cpow(mz, -a)? * dispatch_inner(a, a - c + 1.0, a - b + 1.0, w)?;
    }
    if g2 != Complex64::new(0.0, 0.0) {
        v += g2 * cpow(mz, -b)? * dispatch_inner(b, b - c + 1.0, b - a + 1.0, w)?;
    }
    Ok(v)
}

/// Inner evaluations only ever see |w| ≤ 1 away from w = 1.
fn dispatch_inner(a: Complex64, b: Complex64, c: Complex64, w: f64) -> Result<Complex64> {
    if let Some(n) = terminating(a, b) {
        return polynomial(a, b, c, w, n);
    }
    if nonpositive_integer(c).is_some() {
        return Err(F2Error::LogarithmicCase(format!(
            "inner ₂F₁ with lower parameter {c}"
        )));
    }
    least_cancelling(a, b, c, w)
}
