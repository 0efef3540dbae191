//! Numerical evaluation of the Appell function
//!
//! ```text
//! F₂(a, b₁, b₂; c₁, c₂; x, y) = Σ_{m,n} (a)_{m+n} (b₁)_m (b₂)_n / ((c₁)_m (c₂)_n m! n!) x^m y^n
//! ```
//!
//! for real x, y anywhere off the singular lines x = 0, y = 0, x = 1, y = 1
//! and x + y = 1, by selecting among eighteen convergent series
//! representations. On branch cuts the value returned is F₂(x − i0, y − i0).

pub mod catalog;
pub mod error;
pub mod gauss;
pub mod oracles;
pub mod params;
pub mod selector;
pub mod series;
pub mod special;

pub use catalog::{expose, list_representations, roc_contains, SeriesId};
pub use error::{F2Error, Result};
pub use num_complex::Complex64;
pub use params::ParameterSet;
pub use selector::{evaluate, evaluate_with, find_all, EvalOptions, EvaluationReport};
