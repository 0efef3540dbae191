//! Choosing and summing a representation at a point.
//!
//! Every representation whose region contains the point is ranked by its
//! convergence rate, the largest over its components of √(s² + t²) with
//! s, t the moduli of the term ratios at the probe index (see
//! [`crate::series::BoundSeries::rate_probe`]). The smallest rate wins;
//! ties go to the lower catalog index. If the winner does not converge or
//! its error estimate does not support the requested digits, the remaining
//! candidates are tried in rate order and the most accurate result is kept.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::{instantiate, list_representations, roc_contains, InstantiatedComponent, SeriesId};
use crate::error::{F2Error, Result};
use crate::params::ParameterSet;

/// Default distance below which a point counts as lying on a singular curve.
pub const EPS_SING: f64 = 1e-10;

/// Points where no representation applies.
pub const EXCEPTIONAL_POINTS: [(f64, f64); 6] =
    [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (0.5, 0.5)];

/// Knobs for [`evaluate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Requested significant digits, 1 to 15.
    pub precision: u32,
    /// Truncation order T of the T × T summation.
    pub terms: usize,
    pub eps_sing: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self { precision: 6, terms: 100, eps_sing: EPS_SING }
    }
}

impl EvalOptions {
    pub fn new(precision: u32, terms: usize) -> Self {
        Self { precision, terms, ..Default::default() }
    }

    fn check(&self) -> Result<()> {
        if !(1..=15).contains(&self.precision) {
            return Err(F2Error::InvalidArgument(format!(
                "precision must lie in 1..=15, got {}",
                self.precision
            )));
        }
        if self.terms == 0 {
            return Err(F2Error::InvalidArgument("terms must be at least 1".into()));
        }
        if !(self.eps_sing >= 0.0) {
            return Err(F2Error::InvalidArgument("eps-sing must be non-negative".into()));
        }
        Ok(())
    }
}

/// A representation valid at the point together with its rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub id: SeriesId,
    pub package: u32,
    /// Infinite when a probe ratio is undefined; serialized as null.
    #[serde(with = "rate_serde")]
    pub rate: f64,
}

mod rate_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(rate: &f64, s: S) -> Result<S::Ok, S::Error> {
        if rate.is_finite() {
            s.serialize_f64(*rate)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

/// Outcome of an evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub value: Complex64,
    pub chosen: SeriesId,
    pub candidates: Vec<Candidate>,
    /// Valid representations skipped because a coefficient or series degenerates.
    #[serde(default)]
    pub degenerate: Vec<SeriesId>,
    pub terms: usize,
    /// Truncation estimate: Σ |coefficient| · max |term| on the outer ring.
    pub error_estimate: f64,
    /// Estimated floating-point error from summation and coefficients.
    #[serde(default)]
    pub roundoff_estimate: f64,
    pub digits: u32,
}

impl EvaluationReport {
    pub fn rate(&self) -> f64 {
        self.candidates
            .iter()
            .find(|c| c.id == self.chosen)
            .map(|c| c.rate)
            .unwrap_or(f64::NAN)
    }
}

/// Rejects points on x = 0, y = 0, x = 1, y = 1 or x + y = 1.
pub fn check_point(x: f64, y: f64, eps_sing: f64) -> Result<()> {
    if !(x.is_finite() && y.is_finite()) {
        return Err(F2Error::InvalidArgument(format!("point ({x}, {y})")));
    }
    for &(px, py) in &EXCEPTIONAL_POINTS {
        if (x - px).hypot(y - py) <= 2.0 * eps_sing {
            return Err(F2Error::SingularCurve {
                x,
                y,
                curve: format!("exceptional point ({px}, {py})"),
            });
        }
    }
    let curves = [
        (x.abs(), "x = 0"),
        (y.abs(), "y = 0"),
        ((x - 1.0).abs(), "x = 1"),
        ((y - 1.0).abs(), "y = 1"),
        ((x + y - 1.0).abs() / std::f64::consts::SQRT_2, "x + y = 1"),
    ];
    for (d, name) in curves {
        if d <= eps_sing {
            return Err(F2Error::SingularCurve { x, y, curve: name.to_string() });
        }
    }
    Ok(())
}

/// Representations whose region contains (x, y), in catalog order.
pub fn find_all(x: f64, y: f64) -> Result<Vec<SeriesId>> {
    find_all_with(x, y, EPS_SING)
}

pub fn find_all_with(x: f64, y: f64, eps_sing: f64) -> Result<Vec<SeriesId>> {
    check_point(x, y, eps_sing)?;
    Ok(SeriesId::all().filter(|&id| roc_contains(id, x, y)).collect())
}

fn rate_of(components: &[InstantiatedComponent]) -> f64 {
    let mut r: f64 = 0.0;
    for c in components {
        if c.coefficient == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (s, t) = c.series.rate_probe(c.x, c.y);
        let v = s.hypot(t);
        r = r.max(if v.is_nan() { f64::INFINITY } else { v });
    }
    r
}

fn prepare(
    id: SeriesId,
    params: &ParameterSet,
    x: f64,
    y: f64,
    terms: usize,
) -> Result<Vec<InstantiatedComponent>> {
    let comps = instantiate(id, params, x, y)?;
    for c in &comps {
        if c.coefficient != Complex64::new(0.0, 0.0) {
            if !(c.coefficient.re.is_finite() && c.coefficient.im.is_finite()) {
                return Err(F2Error::Overflow(format!("coefficient of {id}")));
            }
            c.series.check_poles(terms)?;
        }
    }
    Ok(comps)
}

/// Convergence rate R of representation `id` at a point.
pub fn convergence_rate(id: SeriesId, params: &ParameterSet, x: f64, y: f64) -> Result<f64> {
    let comps = instantiate(id, params, x, y)?;
    Ok(rate_of(&comps))
}

/// Sum of a representation: (value, truncation estimate, roundoff estimate).
fn sum_components(
    comps: &[InstantiatedComponent],
    terms: usize,
    observer: &mut Option<&mut dyn FnMut(usize, usize, Complex64)>,
) -> Result<(Complex64, f64, f64)> {
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut roundoff = 0.0;
    for (i, c) in comps.iter().enumerate() {
        if c.coefficient == Complex64::new(0.0, 0.0) {
            continue;
        }
        let ps = match observer.as_mut() {
            Some(obs) => {
                let mut cb = |k: usize, s: Complex64| obs(i, k, s);
                c.series.sum(c.x, c.y, terms, Some(&mut cb))?
            }
            None => c.series.sum(c.x, c.y, terms, None)?,
        };
        let contrib = c.coefficient * ps.value;
        let scale = c.coefficient.norm();
        err += scale * ps.error_estimate;
        roundoff += scale * ps.max_term * 16.0 * f64::EPSILON + contrib.norm() * 1e-14;
        value += contrib;
    }
    if !(value.norm() <= crate::series::OVERFLOW_LIMIT) {
        return Err(F2Error::Overflow(format!("value {value}")));
    }
    Ok((value, err, roundoff))
}

fn digits_for(value: Complex64, err: f64, precision: u32) -> u32 {
    let mag = value.norm();
    if err == 0.0 {
        return precision;
    }
    if mag == 0.0 {
        return 0;
    }
    let d = (-(err / mag).log10()).floor();
    (d.clamp(0.0, 15.0) as u32).min(precision)
}

fn finish(
    id: SeriesId,
    comps: &[InstantiatedComponent],
    rate: f64,
    candidates: Vec<Candidate>,
    degenerate: Vec<SeriesId>,
    opts: &EvalOptions,
    observer: &mut Option<&mut dyn FnMut(usize, usize, Complex64)>,
) -> Result<EvaluationReport> {
    let (value, err, roundoff) = sum_components(comps, opts.terms, observer)?;
    let tol = 0.5 * 10f64.powi(1 - opts.precision as i32) * value.norm();
    if rate >= 1.0 && err > tol {
        return Err(F2Error::NonConvergence { rate, error_estimate: err, magnitude: value.norm() });
    }
    Ok(EvaluationReport {
        value,
        chosen: id,
        candidates,
        degenerate,
        terms: opts.terms,
        error_estimate: err,
        roundoff_estimate: roundoff,
        digits: digits_for(value, err + roundoff, opts.precision),
    })
}

/// F₂(a, b₁, b₂; c₁, c₂; x, y) through the fastest valid representation.
pub fn evaluate(params: &ParameterSet, x: f64, y: f64, opts: &EvalOptions) -> Result<EvaluationReport> {
    evaluate_observed(params, x, y, opts, None)
}

/// As [`evaluate`], reporting (component, ring, partial sum) after each ring.
pub fn evaluate_observed(
    params: &ParameterSet,
    x: f64,
    y: f64,
    opts: &EvalOptions,
    mut observer: Option<&mut dyn FnMut(usize, usize, Complex64)>,
) -> Result<EvaluationReport> {
    opts.check()?;
    params.check()?;
    let valid = find_all_with(x, y, opts.eps_sing)?;
    if valid.is_empty() {
        return Err(F2Error::NoValidSeries(x, y));
    }
    let mut candidates = Vec::new();
    let mut prepared = Vec::new();
    let mut degenerate = Vec::new();
    let mut last_err = None;
    for id in valid {
        match prepare(id, params, x, y, opts.terms) {
            Ok(comps) => {
                let rate = rate_of(&comps);
                candidates.push(Candidate { id, package: id.package_number(), rate });
                prepared.push(comps);
            }
            Err(e) => {
                degenerate.push(id);
                last_err = Some(e);
            }
        }
    }
    if candidates.is_empty() {
        return Err(last_err.unwrap_or(F2Error::NoValidSeries(x, y)));
    }
    // Stable sort keeps catalog order among equal rates.
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&i, &j| candidates[i].rate.total_cmp(&candidates[j].rate));
    // The rate is a probe, not a bound, and says nothing about cancellation
    // between components. Candidates are tried in rate order until one
    // supports the requested digits; otherwise the most accurate one wins.
    let mut best: Option<(EvaluationReport, usize)> = None;
    let mut first_failure = None;
    for &i in &order {
        let (id, rate) = (candidates[i].id, candidates[i].rate);
        match finish(id, &prepared[i], rate, candidates.clone(), degenerate.clone(), opts, &mut None) {
            Ok(report) => {
                let done = report.digits >= opts.precision;
                if best.as_ref().map_or(true, |(b, _)| report.digits > b.digits) {
                    best = Some((report, i));
                }
                if done {
                    break;
                }
            }
            Err(e @ F2Error::NonConvergence { .. }) => {
                first_failure.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    match best {
        Some((report, i)) if observer.is_some() => {
            let rate = candidates[i].rate;
            finish(report.chosen, &prepared[i], rate, candidates, degenerate, opts, &mut observer)
        }
        Some((report, _)) => Ok(report),
        None => Err(first_failure.unwrap_or(F2Error::NoValidSeries(x, y))),
    }
}

/// F₂ through a chosen representation.
pub fn evaluate_with(
    id: SeriesId,
    params: &ParameterSet,
    x: f64,
    y: f64,
    opts: &EvalOptions,
) -> Result<EvaluationReport> {
    evaluate_with_observed(id, params, x, y, opts, None)
}

pub fn evaluate_with_observed(
    id: SeriesId,
    params: &ParameterSet,
    x: f64,
    y: f64,
    opts: &EvalOptions,
    mut observer: Option<&mut dyn FnMut(usize, usize, Complex64)>,
) -> Result<EvaluationReport> {
    opts.check()?;
    params.check()?;
    check_point(x, y, opts.eps_sing)?;
    if !roc_contains(id, x, y) {
        return Err(F2Error::OutOfRoc(x, y, id.to_string()));
    }
    let comps = prepare(id, params, x, y, opts.terms)?;
    let rate = rate_of(&comps);
    let candidates = vec![Candidate { id, package: id.package_number(), rate }];
    finish(id, &comps, rate, candidates, Vec::new(), opts, &mut observer)
}

/// Number of catalog entries, for callers iterating by index.
pub fn catalog_size() -> usize {
    list_representations().len()
}
