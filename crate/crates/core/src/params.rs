//! Parameter sets and integer linear combinations of parameters.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{F2Error, Result};
use crate::special::nonpositive_integer;

/// The five parameters (a, b₁, b₂, c₁, c₂) of F₂.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParameterSet {
    pub a: Complex64,
    pub b1: Complex64,
    pub b2: Complex64,
    pub c1: Complex64,
    pub c2: Complex64,
}

impl ParameterSet {
    pub fn new(a: Complex64, b1: Complex64, b2: Complex64, c1: Complex64, c2: Complex64) -> Self {
        Self { a, b1, b2, c1, c2 }
    }

    pub fn real(a: f64, b1: f64, b2: f64, c1: f64, c2: f64) -> Self {
        let r = |v: f64| Complex64::new(v, 0.0);
        Self::new(r(a), r(b1), r(b2), r(c1), r(c2))
    }

    pub fn as_array(&self) -> [Complex64; 5] {
        [self.a, self.b1, self.b2, self.c1, self.c2]
    }

    /// Parameters with b₁ ↔ b₂ and c₁ ↔ c₂, matching an x ↔ y swap.
    pub fn swapped(&self) -> Self {
        Self::new(self.a, self.b2, self.b1, self.c2, self.c1)
    }

    /// Rejects non-finite parameters and lower parameters at Pochhammer poles.
    pub fn check(&self) -> Result<()> {
        for (name, v) in ["a", "b1", "b2", "c1", "c2"].iter().zip(self.as_array()) {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(F2Error::InvalidArgument(format!("{name} = {v}")));
            }
        }
        for (name, v) in [("c1", self.c1), ("c2", self.c2)] {
            if let Some(n) = nonpositive_integer(v) {
                return Err(F2Error::LogarithmicCase(format!(
                    "{name} = {n} is a pole of the Pochhammer symbol in the denominator"
                )));
            }
        }
        Ok(())
    }
}

const NAMES: [&str; 5] = ["a", "b1", "b2", "c1", "c2"];

/// k_a·a + k_b₁·b₁ + k_b₂·b₂ + k_c₁·c₁ + k_c₂·c₂ + k₀ with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamCombo {
    pub coeffs: [i32; 5],
    pub constant: i32,
}

impl ParamCombo {
    pub fn eval(&self, p: &ParameterSet) -> Complex64 {
        let mut v = Complex64::new(self.constant as f64, 0.0);
        for (k, x) in self.coeffs.iter().zip(p.as_array()) {
            if *k != 0 {
                v += x * (*k as f64);
            }
        }
        v
    }

    /// Σ |k_i·p_i| + |k₀|, the scale used when snapping a value to an integer.
    pub fn magnitude(&self, p: &ParameterSet) -> f64 {
        let mut s = (self.constant as f64).abs();
        for (k, x) in self.coeffs.iter().zip(p.as_array()) {
            s += (*k as f64).abs() * x.norm();
        }
        s
    }

    /// The combination with parameter roles swapped as in [`ParameterSet::swapped`].
    pub fn swapped(&self) -> Self {
        let k = self.coeffs;
        Self {
            coeffs: [k[0], k[2], k[1], k[4], k[3]],
            constant: self.constant,
        }
    }
}

impl FromStr for ParamCombo {
    type Err = F2Error;

    /// Parses forms such as `-a-b2+c2+1`, `1-b1` or `c2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || F2Error::InvalidArgument(format!("parameter combination {s:?}"));
        let mut out = ParamCombo { coeffs: [0; 5], constant: 0 };
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(bad());
        }
        let mut i = 0;
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let start = i;
            while i < chars.len() && chars[i] != '+' && chars[i] != '-' {
                i += 1;
            }
            let tok: String = chars[start..i].iter().collect();
            if let Ok(n) = tok.parse::<i32>() {
                out.constant += sign * n;
            } else if let Some(idx) = NAMES.iter().position(|&n| n == tok) {
                out.coeffs[idx] += sign;
            } else {
                return Err(bad());
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ParamCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, name) in self.coeffs.iter().zip(NAMES) {
            if *k == 0 {
                continue;
            }
            let sign = if *k < 0 { "-" } else if first { "" } else { "+" };
            let mag = k.abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if self.constant != 0 || first {
            let sign = if self.constant < 0 { "-" } else if first { "" } else { "+" };
            write!(f, "{sign}{}", self.constant.abs())?;
        }
        Ok(())
    }
}

/// Shorthand used by the catalog tables; panics on malformed literals.
pub fn combo(s: &str) -> ParamCombo {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
