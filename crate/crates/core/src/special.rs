//! Scalar special functions on complex arguments.
//!
//! `log_gamma` uses the Lanczos approximation with g = 7 and nine
//! coefficients, plus the reflection formula for Re z < 1/2:
//!
//! ```text
//! log Γ(z) = log π − log sin(πz) − log Γ(1 − z)
//! ```

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{F2Error, Result};

/// Distance from a non-positive integer below which Γ is treated as a pole.
pub const EPS_POLE: f64 = 1e-10;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Returns `Some(n)` when `z` lies within [`EPS_POLE`] of the non-positive integer `n`.
pub fn nonpositive_integer(z: Complex64) -> Option<i64> {
    let r = z.re.round();
    if r <= 0.0 && (z - Complex64::new(r, 0.0)).norm() < EPS_POLE {
        Some(r as i64)
    } else {
        None
    }
}

/// sin(πz), with the real part reduced to [-1/2, 1/2] first so that values
/// next to the integers keep full relative accuracy.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let r = Complex64::new(z.re - n, z.im);
    let s = (r * PI).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Principal-branch logarithm of Γ(z).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(F2Error::Domain(format!("log_gamma of non-finite {z}")));
    }
    if let Some(n) = nonpositive_integer(z) {
        return Err(F2Error::Pole(format!("Γ({n})")));
    }
    if z.re < 0.5 {
        let s = sin_pi(z);
        let rest = lanczos(Complex64::new(1.0, 0.0) - z);
        Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - rest)
    } else {
        Ok(lanczos(z))
    }
}

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// Γ(z), returned as a value rather than a logarithm.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// Π Γ(num) / Π Γ(den), evaluated in log space.
///
/// Poles are counted on both sides. More numerator poles than denominator
/// poles is a logarithmic case; more denominator poles gives exactly zero.
/// Equal counts are resolved by taking residues, with every pole argument
/// approaching its integer at the same rate.
pub fn gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    let mut num_poles = 0usize;
    let mut den_poles = 0usize;
    for &z in num {
        match nonpositive_integer(z) {
            Some(n) => {
                num_poles += 1;
                let (l, s) = log_residue(n);
                acc += l;
                sign *= s;
            }
            None => acc += log_gamma(z)?,
        }
    }
    for &z in den {
        match nonpositive_integer(z) {
            Some(n) => {
                den_poles += 1;
                let (l, s) = log_residue(n);
                acc -= l;
                sign *= s;
            }
            None => acc -= log_gamma(z)?,
        }
    }
    if num_poles > den_poles {
        return Err(F2Error::LogarithmicCase(format!(
            "{num_poles} gamma pole(s) in the numerator against {den_poles} in the denominator"
        )));
    }
    if den_poles > num_poles {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let v = acc.exp() * sign;
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(F2Error::Overflow(format!("gamma ratio with log {acc}")));
    }
    Ok(v)
}

/// Residue of Γ at −n is (−1)^n / n!; returns (log n!, sign) of its reciprocal form.
fn log_residue(n: i64) -> (Complex64, f64) {
    let k = (-n) as u64;
    let lf: f64 = (1..=k).map(|j| (j as f64).ln()).sum();
    (Complex64::new(-lf, 0.0), if k % 2 == 0 { 1.0 } else { -1.0 })
}

/// Pochhammer symbol (z)_k for any integer k, with (z)_{-k} = 1 / (z − k)_k.
pub fn pochhammer(z: Complex64, k: i64) -> Result<Complex64> {
    let mut p = Complex64::new(1.0, 0.0);
    if k >= 0 {
        for j in 0..k {
            p *= z + j as f64;
        }
        Ok(p)
    } else {
        for j in 1..=(-k) {
            p *= z - j as f64;
        }
        if p == Complex64::new(0.0, 0.0) {
            return Err(F2Error::Pole(format!("({z})_{k}")));
        }
        Ok(p.inv())
    }
}

/// Principal-branch power w^α with arg w ∈ (−π, π].
pub fn cpow(w: Complex64, alpha: Complex64) -> Result<Complex64> {
    if w == Complex64::new(0.0, 0.0) {
        if alpha == Complex64::new(0.0, 0.0) {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if alpha.re > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(F2Error::Domain(format!("0^({alpha})")));
    }
    // Complex64::ln already returns arg in (−π, π]; make −0.0 imaginary parts
    // land on +π rather than −π.
    let w = Complex64::new(w.re, if w.im == 0.0 { 0.0 } else { w.im });
    Ok((alpha * w.ln()).exp())
}

/// Rounds values lying within a few ulps of an integer onto that integer,
/// so that terminating Pochhammer factors come out exactly zero.
pub fn snap(z: Complex64, scale: f64) -> Complex64 {
    let tol = 64.0 * f64::EPSILON * scale.max(1.0);
    let r = z.re.round();
    let re = if (z.re - r).abs() <= tol { r } else { z.re };
    let im = if z.im.abs() <= tol { 0.0 } else { z.im };
    Complex64::new(re, im)
}
