//! Catalog of series representations, each valid on its own region of
//! the real (x, y) plane.
//!
//! A representation is a sum of components
//!
//! ```text
//! Γ-ratio · Π prefactor^exponent · series(X(x, y), Y(x, y))
//! ```
//!
//! Powers of bases that turn negative inside a region are taken through a
//! side condition (see [`args::rewrite_condition`]). Together with principal
//! powers elsewhere this yields the boundary value F₂(x − i0, y − i0).

pub mod args;
mod table;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

pub use args::{rewrite_condition, ArgExpr, RewriteCondition};

use crate::error::{F2Error, Result};
use crate::params::{ParamCombo, ParameterSet};
use crate::series::{BoundSeries, DoubleSeriesSpec};
use crate::special::{cpow, gamma_ratio, snap};

/// Catalog index, 1 through 18.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SeriesId(u8);

impl SeriesId {
    pub const COUNT: u8 = 18;

    pub fn new(index: u8) -> Result<Self> {
        if (1..=Self::COUNT).contains(&index) {
            Ok(SeriesId(index))
        } else {
            Err(F2Error::UnknownId(index.to_string()))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    /// Number of the same series in the numbering of the original package.
    pub fn package_number(self) -> u32 {
        representation(self).package
    }

    pub fn from_package_number(n: u32) -> Result<Self> {
        list_representations()
            .iter()
            .find(|r| r.package == n)
            .map(|r| r.id())
            .ok_or_else(|| F2Error::UnknownId(format!("#{n}")))
    }

    pub fn all() -> impl Iterator<Item = SeriesId> {
        (1..=Self::COUNT).map(SeriesId)
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

impl FromStr for SeriesId {
    type Err = F2Error;

    /// Accepts `S7` (catalog index) or `#15` / `15` (package number).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || F2Error::UnknownId(s.to_string());
        if let Some(rest) = t.strip_prefix('S').or_else(|| t.strip_prefix('s')) {
            let k: u8 = rest.parse().map_err(|_| bad())?;
            return SeriesId::new(k).map_err(|_| bad());
        }
        let t = t.strip_prefix('#').unwrap_or(t);
        let n: u32 = t.parse().map_err(|_| bad())?;
        SeriesId::from_package_number(n).map_err(|_| bad())
    }
}

impl TryFrom<String> for SeriesId {
    type Error = F2Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SeriesId> for String {
    fn from(id: SeriesId) -> String {
        id.to_string()
    }
}

/// How a component series is written when displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    AppellF2,
    KampeDeFeriet,
    /// Kampé de Fériet layout with (·)_{m−n} in the first group.
    Mirror,
    HornH2,
}

/// A power base^exponent with its branch rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Prefactor {
    pub base: ArgExpr,
    pub exponent: ParamCombo,
    pub condition: RewriteCondition,
}

impl Prefactor {
    pub fn new(base: ArgExpr, exponent: ParamCombo) -> Self {
        Self { base, exponent, condition: rewrite_condition(base) }
    }
}

/// One term of a representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub gamma_num: Vec<ParamCombo>,
    pub gamma_den: Vec<ParamCombo>,
    pub prefactors: Vec<Prefactor>,
    pub kind: SeriesKind,
    pub series: DoubleSeriesSpec,
    /// Arguments attached to m and n respectively.
    pub args: (ArgExpr, ArgExpr),
}

/// One condition of a region of convergence; all are strict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RocAtom {
    AbsLt1(ArgExpr),
    AbsGt1(ArgExpr),
    SumAbsLt1(ArgExpr, ArgExpr),
    /// (1 + |f|)·|g| < 1
    OnePlusAbsTimesAbsLt1(ArgExpr, ArgExpr),
}

impl RocAtom {
    pub fn holds(&self, x: f64, y: f64) -> bool {
        let v = |f: &ArgExpr| f.eval(x, y).abs();
        match self {
            RocAtom::AbsLt1(f) => v(f) < 1.0,
            RocAtom::AbsGt1(f) => v(f) > 1.0,
            RocAtom::SumAbsLt1(f, g) => v(f) + v(g) < 1.0,
            RocAtom::OnePlusAbsTimesAbsLt1(f, g) => (1.0 + v(f)) * v(g) < 1.0,
        }
    }
}

impl fmt::Display for RocAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RocAtom::AbsLt1(a) => write!(f, "Abs[{a}]<1"),
            RocAtom::AbsGt1(a) => write!(f, "Abs[{a}]>1"),
            RocAtom::SumAbsLt1(a, b) => write!(f, "Abs[{a}]+Abs[{b}]<1"),
            RocAtom::OnePlusAbsTimesAbsLt1(a, b) => write!(f, "(Abs[{a}]+1) Abs[{b}]<1"),
        }
    }
}

/// A complete representation of F₂.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    pub index: u8,
    pub package: u32,
    pub roc: Vec<RocAtom>,
    pub components: Vec<Component>,
}

impl Representation {
    pub fn id(&self) -> SeriesId {
        SeriesId(self.index)
    }

    pub fn roc_text(&self) -> String {
        self.roc.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" && ")
    }
}

/// All eighteen representations in catalog order.
pub fn list_representations() -> &'static [Representation] {
    static CATALOG: OnceLock<Vec<Representation>> = OnceLock::new();
    CATALOG.get_or_init(table::build)
}

pub fn representation(id: SeriesId) -> &'static Representation {
    &list_representations()[(id.0 - 1) as usize]
}

/// Whether (x, y) lies strictly inside the region of convergence of `id`.
pub fn roc_contains(id: SeriesId, x: f64, y: f64) -> bool {
    let r = representation(id);
    r.roc.iter().all(|a| a.holds(x, y))
}

/// base^exponent at (x, y), honouring the branch rule of the prefactor.
pub fn evaluate_prefactor(p: &Prefactor, params: &ParameterSet, x: f64, y: f64) -> Result<Complex64> {
    let alpha = snap(p.exponent.eval(params), p.exponent.magnitude(params));
    let b = p.base.eval(x, y);
    if !b.is_finite() {
        return Err(F2Error::Domain(format!("prefactor base {} at ({x}, {y})", p.base)));
    }
    let base = Complex64::new(b, 0.0);
    if p.condition.holds(x, y) {
        cpow(base, alpha)
    } else {
        if b == 0.0 {
            return cpow(base, alpha);
        }
        cpow(Complex64::new(1.0 / b, 0.0), -alpha)
    }
}

/// A component with numeric coefficient, weights and arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct InstantiatedComponent {
    pub coefficient: Complex64,
    pub series: BoundSeries,
    pub x: Complex64,
    pub y: Complex64,
}

/// Numeric components of `id` at a point. A component whose gamma ratio
/// vanishes is kept with coefficient exactly zero.
pub fn instantiate(
    id: SeriesId,
    params: &ParameterSet,
    x: f64,
    y: f64,
) -> Result<Vec<InstantiatedComponent>> {
    let rep = representation(id);
    let mut out = Vec::with_capacity(rep.components.len());
    for c in &rep.components {
        let eval = |v: &Vec<ParamCombo>| -> Vec<Complex64> {
            v.iter().map(|k| snap(k.eval(params), k.magnitude(params))).collect()
        };
        let mut coefficient = gamma_ratio(&eval(&c.gamma_num), &eval(&c.gamma_den))?;
        if coefficient != Complex64::new(0.0, 0.0) {
            for p in &c.prefactors {
                coefficient *= evaluate_prefactor(p, params, x, y)?;
            }
        }
        out.push(InstantiatedComponent {
            coefficient,
            series: c.series.bind(params),
            x: Complex64::new(c.args.0.eval(x, y), 0.0),
            y: Complex64::new(c.args.1.eval(x, y), 0.0),
        });
    }
    Ok(out)
}

fn join(v: &[ParamCombo], sep: &str) -> String {
    if v.is_empty() {
        "-".to_string()
    } else {
        v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(sep)
    }
}

fn series_text(c: &Component) -> String {
    let s = &c.series;
    let (xa, ya) = c.args;
    match c.kind {
        SeriesKind::AppellF2 => format!(
            "F2({}, {}, {}; {}, {}; {xa}, {ya})",
            s.upper_plus[0], s.upper_m[0], s.upper_n[0], s.lower_m[0], s.lower_n[0]
        ),
        SeriesKind::HornH2 => format!(
            "H2({}, {}, {}, {}; {}; {xa}, {ya})",
            s.upper_minus[0], s.upper_m[0], s.upper_n[0], s.upper_n[1], s.lower_m[0]
        ),
        SeriesKind::KampeDeFeriet | SeriesKind::Mirror => {
            let (name, up, lo) = if c.kind == SeriesKind::Mirror {
                ("F~", &s.upper_minus, &s.lower_minus)
            } else {
                ("F", &s.upper_plus, &s.lower_plus)
            };
            format!(
                "{name}[{}:{};{} / {}:{};{}][{} : {} ; {} / {} : {} ; {}]({xa}, {ya})",
                up.len(),
                s.upper_m.len(),
                s.upper_n.len(),
                lo.len(),
                s.lower_m.len(),
                s.lower_n.len(),
                join(up, ", "),
                join(&s.upper_m, ", "),
                join(&s.upper_n, ", "),
                join(lo, ", "),
                join(&s.lower_m, ", "),
                join(&s.lower_n, ", "),
            )
        }
    }
}

fn component_text(c: &Component) -> String {
    let mut parts = Vec::new();
    if !c.gamma_num.is_empty() || !c.gamma_den.is_empty() {
        let g = |v: &Vec<ParamCombo>| {
            v.iter().map(|k| format!("Gamma[{k}]")).collect::<Vec<_>>().join(" ")
        };
        parts.push(format!("{} / ({})", g(&c.gamma_num), g(&c.gamma_den)));
    }
    for p in &c.prefactors {
        if p.condition == RewriteCondition::None {
            parts.push(format!("({})^({})", p.base, p.exponent));
        } else {
            parts.push(format!("<({})^({})>[{}]", p.base, p.exponent, p.condition.text()));
        }
    }
    parts.push(series_text(c));
    parts.join(" * ")
}

/// Human-readable listing: a header with the region of convergence, then
/// one line per component.
pub fn expose(id: SeriesId) -> String {
    let r = representation(id);
    let mut out = format!("{} (#{}) ROC: {}\n", r.id(), r.package, r.roc_text());
    for (i, c) in r.components.iter().enumerate() {
        out.push_str(&format!("  [{}] {}\n", i + 1, component_text(c)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in SeriesId::all() {
            assert_eq!(id.to_string().parse::<SeriesId>().unwrap(), id);
            assert_eq!(SeriesId::from_package_number(id.package_number()).unwrap(), id);
        }
        assert!("S19".parse::<SeriesId>().is_err());
        assert!("#2".parse::<SeriesId>().is_err());
    }

    #[test]
    fn component_counts() {
        let counts: Vec<usize> =
            list_representations().iter().map(|r| r.components.len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 2, 2]);
    }
}
