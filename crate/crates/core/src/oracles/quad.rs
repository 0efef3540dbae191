//! Globally adaptive 15-point Gauss–Kronrod quadrature for complex-valued
//! integrands.

use num_complex::Complex64;

use crate::error::{F2Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_0,
];

/// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_INTERVALS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub intervals: usize,
}

/// (Kronrod estimate, |Kronrod − Gauss|, Kronrod estimate of ∫|f|).
fn gk15<F>(f: &F, a: f64, b: f64) -> Result<(Complex64, f64, f64)>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    let mut abs = fc.norm() * WGK[7];
    for i in 0..7 {
        let dx = h * XGK[i];
        let (lo, hi) = (f(c - dx)?, f(c + dx)?);
        let s = lo + hi;
        k += s * WGK[i];
        abs += (lo.norm() + hi.norm()) * WGK[i];
        if i % 2 == 1 {
            g += s * WG[i / 2];
        }
    }
    Ok((k * h, ((k - g) * h).norm(), abs * h.abs()))
}

/// ∫ₐᵇ f with relative tolerance `rel_tol`, bisecting the worst interval.
/// When the integrand cancels, the target is floored at a few ulps of ∫|f|.
pub fn integrate<F>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let (v, e, m) = gk15(&f, a, b)?;
    let mut parts = vec![(a, b, v, e, m)];
    loop {
        let total: Complex64 = parts.iter().map(|p| p.2).sum();
        let err: f64 = parts.iter().map(|p| p.3).sum();
        let mass: f64 = parts.iter().map(|p| p.4).sum();
        if err <= (rel_tol * total.norm()).max(64.0 * f64::EPSILON * mass) || err == 0.0 {
            return Ok(QuadResult { value: total, error: err, intervals: parts.len() });
        }
        if parts.len() >= MAX_INTERVALS {
            return Err(F2Error::Domain(format!(
                "quadrature stalled at error {err:.3e} for |value| {:.3e}",
                total.norm()
            )));
        }
        let worst = parts
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap_or(0);
        let (lo, hi, ..) = parts.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1, m1) = gk15(&f, lo, mid)?;
        let (v2, e2, m2) = gk15(&f, mid, hi)?;
        parts.push((lo, mid, v1, e1, m1));
        parts.push((mid, hi, v2, e2, m2));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_endpoint_singularity() {
        let r = integrate(|x| Ok(Complex64::new(x * x, x)), 0.0, 1.0, 1e-13).unwrap();
        assert!((r.value - Complex64::new(1.0 / 3.0, 0.5)).norm() < 1e-14);
        let r = integrate(|x| Ok(Complex64::new(x.sqrt().recip(), 0.0)), 0.0, 1.0, 1e-9).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-8);
    }
}
