//! Two-variable hypergeometric series with Pochhammer weights in m + n,
//! m − n, m and n.
//!
//! ```text
//! V(m, n) = Π(u⁺)_{m+n} Π(u⁻)_{m−n} Π(uᴹ)_m Π(uᴺ)_n
//!         / (Π(l⁺)_{m+n} Π(l⁻)_{m−n} Π(lᴹ)_m Π(lᴺ)_n m! n!) · X^m Y^n
//! ```
//!
//! This covers Appell F₂, Kampé de Fériet series, their mirror form with
//! (·)_{m−n} weights, and Horn H₂.

use num_complex::Complex64;

use crate::error::{F2Error, Result};
use crate::params::{ParamCombo, ParameterSet};
use crate::special::{pochhammer, snap, EPS_POLE};

/// Partial sums above this magnitude are reported as overflow.
pub const OVERFLOW_LIMIT: f64 = 1e300;
/// Index at which convergence rates are probed.
pub const PROBE_INDEX: usize = 100;

/// Weight lists of a double series, as parameter combinations.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DoubleSeriesSpec {
    pub upper_plus: Vec<ParamCombo>,
    pub upper_minus: Vec<ParamCombo>,
    pub upper_m: Vec<ParamCombo>,
    pub upper_n: Vec<ParamCombo>,
    pub lower_plus: Vec<ParamCombo>,
    pub lower_minus: Vec<ParamCombo>,
    pub lower_m: Vec<ParamCombo>,
    pub lower_n: Vec<ParamCombo>,
}

impl DoubleSeriesSpec {
    /// Numeric weights for a given parameter set.
    pub fn bind(&self, p: &ParameterSet) -> BoundSeries {
        let f = |v: &Vec<ParamCombo>| -> Vec<Complex64> {
            v.iter().map(|c| snap(c.eval(p), c.magnitude(p))).collect()
        };
        BoundSeries {
            upper_plus: f(&self.upper_plus),
            upper_minus: f(&self.upper_minus),
            upper_m: f(&self.upper_m),
            upper_n: f(&self.upper_n),
            lower_plus: f(&self.lower_plus),
            lower_minus: f(&self.lower_minus),
            lower_m: f(&self.lower_m),
            lower_n: f(&self.lower_n),
        }
    }
}

/// A double series with numeric weights.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BoundSeries {
    pub upper_plus: Vec<Complex64>,
    pub upper_minus: Vec<Complex64>,
    pub upper_m: Vec<Complex64>,
    pub upper_n: Vec<Complex64>,
    pub lower_plus: Vec<Complex64>,
    pub lower_minus: Vec<Complex64>,
    pub lower_m: Vec<Complex64>,
    pub lower_n: Vec<Complex64>,
}

/// Result of a truncated rectangular summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSum {
    pub value: Complex64,
    /// Largest |V(m, n)| on the outermost ring max(m, n) = T − 1.
    pub error_estimate: f64,
    /// Largest |V(m, n)| seen anywhere, used for roundoff estimates.
    pub max_term: f64,
    pub terms: usize,
}

/// A term kept as value × 0^zeros so that exact zeros from terminating
/// Pochhammer symbols can be divided out again by later factors.
#[derive(Debug, Clone, Copy)]
struct Term {
    value: Complex64,
    zeros: i32,
}

impl Term {
    fn one() -> Self {
        Term { value: Complex64::new(1.0, 0.0), zeros: 0 }
    }

    fn mul(&mut self, f: Complex64) {
        if f == Complex64::new(0.0, 0.0) {
            self.zeros += 1;
        } else {
            self.value *= f;
        }
    }

    fn div(&mut self, f: Complex64) {
        if f == Complex64::new(0.0, 0.0) {
            self.zeros -= 1;
        } else {
            self.value /= f;
        }
    }

    fn get(&self) -> Complex64 {
        if self.zeros > 0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.value
        }
    }
}

fn is_nonpositive_int(z: Complex64) -> Option<i64> {
    let r = z.re.round();
    if r <= 0.0 && (z - Complex64::new(r, 0.0)).norm() < EPS_POLE {
        Some(r as i64)
    } else {
        None
    }
}

fn is_positive_int(z: Complex64) -> Option<i64> {
    let r = z.re.round();
    if r >= 1.0 && (z - Complex64::new(r, 0.0)).norm() < EPS_POLE {
        Some(r as i64)
    } else {
        None
    }
}

impl BoundSeries {
    /// Fails when a lower weight reaches a pole for some index below `terms`.
    pub fn check_poles(&self, terms: usize) -> Result<()> {
        let t = terms.max(1) as i64;
        let reach = |list: &[Complex64], max_shift: i64, what: &str| -> Result<()> {
            for &l in list {
                if let Some(n) = is_nonpositive_int(l) {
                    if -n < max_shift {
                        return Err(F2Error::LogarithmicCase(format!(
                            "{what} weight {l} reaches a pole"
                        )));
                    }
                }
            }
            Ok(())
        };
        reach(&self.lower_plus, 2 * t - 2, "lower (m+n)")?;
        reach(&self.lower_m, t - 1, "lower m")?;
        reach(&self.lower_n, t - 1, "lower n")?;
        reach(&self.lower_minus, t - 1, "lower (m−n)")?;
        for &u in &self.upper_minus {
            if let Some(n) = is_positive_int(u) {
                if n <= t - 1 {
                    return Err(F2Error::LogarithmicCase(format!(
                        "upper (m−n) weight {u} is infinite at negative shifts"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Multiplies `t` by V(m+1, n)/V(m, n) without the argument factor.
    fn step_m(&self, t: &mut Term, m: usize, n: usize) {
        let s = (m + n) as f64;
        let d = m as f64 - n as f64;
        let mf = m as f64;
        for &u in &self.upper_plus {
            t.mul(u + s);
        }
        for &u in &self.upper_minus {
            t.mul(u + d);
        }
        for &u in &self.upper_m {
            t.mul(u + mf);
        }
        for &l in &self.lower_plus {
            t.div(l + s);
        }
        for &l in &self.lower_minus {
            t.div(l + d);
        }
        for &l in &self.lower_m {
            t.div(l + mf);
        }
        t.div(Complex64::new(mf + 1.0, 0.0));
    }

    /// Multiplies `t` by V(m, n+1)/V(m, n) without the argument factor.
    fn step_n(&self, t: &mut Term, m: usize, n: usize) {
        let s = (m + n) as f64;
        let d = m as f64 - n as f64 - 1.0;
        let nf = n as f64;
        for &u in &self.upper_plus {
            t.mul(u + s);
        }
        for &u in &self.upper_minus {
            t.div(u + d);
        }
        for &u in &self.upper_n {
            t.mul(u + nf);
        }
        for &l in &self.lower_plus {
            t.div(l + s);
        }
        for &l in &self.lower_minus {
            t.mul(l + d);
        }
        for &l in &self.lower_n {
            t.div(l + nf);
        }
        t.div(Complex64::new(nf + 1.0, 0.0));
    }

    /// Sums V(m, n) over the square 0 ≤ m, n < `terms`.
    ///
    /// Terms are accumulated ring by ring (max(m, n) = k), each ring in a
    /// fixed order, so the sum for T is a bitwise prefix of the sum for T' > T.
    /// `on_ring` receives (k, partial sum through ring k).
    pub fn sum(
        &self,
        x: Complex64,
        y: Complex64,
        terms: usize,
        mut on_ring: Option<&mut dyn FnMut(usize, Complex64)>,
    ) -> Result<PartialSum> {
        if terms == 0 {
            return Err(F2Error::InvalidArgument("terms must be at least 1".into()));
        }
        self.check_poles(terms)?;
        // rows[m] holds V(m, k−1) while ring k is being built.
        let mut rows: Vec<Term> = Vec::with_capacity(terms);
        let mut column0 = Term::one();
        let mut total = Complex64::new(0.0, 0.0);
        let mut max_term: f64 = 0.0;
        let mut ring_max: f64 = 0.0;
        for k in 0..terms {
            let mut ring = Complex64::new(0.0, 0.0);
            ring_max = 0.0;
            // Extend the existing rows by one column: V(m, k) for m < k.
            for (m, row) in rows.iter_mut().enumerate() {
                self.step_n(row, m, k - 1);
                row.mul(y);
                let v = row.get();
                ring += v;
                ring_max = ring_max.max(v.norm());
            }
            // New row k: V(k, 0..=k).
            if k > 0 {
                self.step_m(&mut column0, k - 1, 0);
                column0.mul(x);
            }
            let mut t = column0;
            let v = t.get();
            ring += v;
            ring_max = ring_max.max(v.norm());
            for n in 0..k {
                self.step_n(&mut t, k, n);
                t.mul(y);
                let v = t.get();
                ring += v;
                ring_max = ring_max.max(v.norm());
            }
            rows.push(t);
            total += ring;
            max_term = max_term.max(ring_max);
            if !(total.norm() <= OVERFLOW_LIMIT) || !(ring_max <= OVERFLOW_LIMIT) {
                return Err(F2Error::Overflow(format!(
                    "partial sum exceeds {OVERFLOW_LIMIT:e} at ring {k}"
                )));
            }
            if let Some(cb) = on_ring.as_mut() {
                cb(k, total);
            }
        }
        Ok(PartialSum {
            value: total,
            error_estimate: ring_max,
            max_term,
            terms,
        })
    }

    /// V(m, n) from Pochhammer products, independent of the recurrences.
    pub fn term(&self, x: Complex64, y: Complex64, m: usize, n: usize) -> Result<Complex64> {
        let s = (m + n) as i64;
        let d = m as i64 - n as i64;
        let mut v = Complex64::new(1.0, 0.0);
        for &u in &self.upper_plus {
            v *= pochhammer(u, s)?;
        }
        for &u in &self.upper_minus {
            v *= pochhammer(u, d)?;
        }
        for &u in &self.upper_m {
            v *= pochhammer(u, m as i64)?;
        }
        for &u in &self.upper_n {
            v *= pochhammer(u, n as i64)?;
        }
        for &l in &self.lower_plus {
            v /= pochhammer(l, s)?;
        }
        for &l in &self.lower_minus {
            v /= pochhammer(l, d)?;
        }
        for &l in &self.lower_m {
            v /= pochhammer(l, m as i64)?;
        }
        for &l in &self.lower_n {
            v /= pochhammer(l, n as i64)?;
        }
        let fact = |k: usize| (1..=k).fold(1.0, |a, j| a * j as f64);
        v /= fact(m) * fact(n);
        Ok(v * x.powu(m as u32) * y.powu(n as u32))
    }

    /// True when the weight part of V(m, n) is exactly zero.
    pub fn weight_vanishes(&self, m: usize, n: usize) -> bool {
        let vanishes = |u: Complex64, shift: i64| {
            shift > 0 && is_nonpositive_int(u).is_some_and(|k| -k < shift)
        };
        let s = (m + n) as i64;
        let d = m as i64 - n as i64;
        self.upper_plus.iter().any(|&u| vanishes(u, s))
            || self.upper_minus.iter().any(|&u| vanishes(u, d))
            || self.upper_m.iter().any(|&u| vanishes(u, m as i64))
            || self.upper_n.iter().any(|&u| vanishes(u, n as i64))
            // (l)_{−k} in the denominator is 1/(l−k)_k: infinite when l ∈ {1..k}.
            || self
                .lower_minus
                .iter()
                .any(|&l| d < 0 && is_positive_int(l).is_some_and(|k| k <= -d))
    }

    /// V(m+1, n)/V(m, n), including the factor X.
    pub fn term_ratio_m(&self, x: Complex64, m: usize, n: usize) -> Result<Complex64> {
        if self.weight_vanishes(m, n) {
            return Err(F2Error::ZeroTerm(m, n));
        }
        let mut t = Term::one();
        self.step_m(&mut t, m, n);
        t.mul(x);
        ratio_value(t, m, n)
    }

    /// V(m, n+1)/V(m, n), including the factor Y.
    pub fn term_ratio_n(&self, y: Complex64, m: usize, n: usize) -> Result<Complex64> {
        if self.weight_vanishes(m, n) {
            return Err(F2Error::ZeroTerm(m, n));
        }
        let mut t = Term::one();
        self.step_n(&mut t, m, n);
        t.mul(y);
        ratio_value(t, m, n)
    }

    /// Moduli (s, t) of the term ratios in m and n at the probe index.
    ///
    /// Series without (m−n) weights are probed at (100, 100). On the
    /// diagonal the (m−n) weights have shift zero, so their ratios stay at
    /// parameter-dependent constants; mirror series are therefore probed
    /// in m at (200, 100) and in n at (100, 200), where every weight has a
    /// shift of at least 100. A vanishing probe term gives (0, 0).
    pub fn rate_probe(&self, x: Complex64, y: Complex64) -> (f64, f64) {
        let k = PROBE_INDEX;
        let mirror = !(self.upper_minus.is_empty() && self.lower_minus.is_empty());
        let (pm, pn) = if mirror { ((2 * k, k), (k, 2 * k)) } else { ((k, k), (k, k)) };
        if self.weight_vanishes(pm.0, pm.1) || self.weight_vanishes(pn.0, pn.1) {
            return (0.0, 0.0);
        }
        let s = self
            .term_ratio_m(x, pm.0, pm.1)
            .map(|r| r.norm())
            .unwrap_or(f64::INFINITY);
        let t = self
            .term_ratio_n(y, pn.0, pn.1)
            .map(|r| r.norm())
            .unwrap_or(f64::INFINITY);
        (s, t)
    }
}

fn ratio_value(t: Term, m: usize, n: usize) -> Result<Complex64> {
    if t.zeros < 0 {
        Err(F2Error::Pole(format!("term ratio at ({m}, {n})")))
    } else {
        Ok(t.get())
    }
}

/// Sums `spec` at (X, Y) for the given parameters over a T × T square.
pub fn sum_double_series(
    spec: &DoubleSeriesSpec,
    params: &ParameterSet,
    x: Complex64,
    y: Complex64,
    terms: usize,
) -> Result<PartialSum> {
    spec.bind(params).sum(x, y, terms, None)
}
