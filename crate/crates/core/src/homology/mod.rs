//! Resolutions and the invariants derived from them.

mod derived;
mod filtration;
mod mho;
mod resolve;
mod samples;
mod transpose;

use std::fmt;

use serde_json::{json, Value};

pub use derived::{ext_dims, tor_dims, tor_dims_direct, ExtSeq, TorDims};
pub use filtration::{syzygy_filtration_check, FiltrationReport, FiltrationRow};
pub use mho::{add_approximation, mho, mho_path, mho_power, MhoPath, PathStop};
pub use resolve::{
    cosyzygy, dominant_dimension, domdim, gldim, id, inj_coresolution, injectives_that_are_projective, pd, proj_resolution,
    syzygy, InjCoresolution, ProjResolution, TERM_DIM_BUDGET,
};
pub use samples::sample_modules;
pub use transpose::{
    gorenstein_projective_up_to, higher_ar_translate, higher_transpose, n_torsionfree, reflexive, strip_projective_summands,
    torsionless, transpose, GpFailure, GpReport,
};

/// Bound used for "for all i" conditions unless overridden.
pub const DEFAULT_CAP: usize = 8;

/// `DOMDIMLAB_CAP` if set to a positive integer, else [`DEFAULT_CAP`].
pub fn default_cap() -> usize {
    std::env::var("DOMDIMLAB_CAP").ok().and_then(|s| s.trim().parse().ok()).filter(|&c| c >= 1).unwrap_or(DEFAULT_CAP)
}

/// A dimension computed up to a cap. Unbounded values are reported as
/// `AtLeast(cap + 1)`, never as infinite; a resolution cut short by the
/// size budget gives a smaller lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DimensionValue {
    Exact(usize),
    AtLeast(usize),
}

impl DimensionValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            DimensionValue::Exact(n) => Some(*n),
            DimensionValue::AtLeast(_) => None,
        }
    }

    /// Whether the value is `>= n`, when decidable from what was computed.
    pub fn at_least(&self, n: usize) -> Option<bool> {
        match *self {
            DimensionValue::Exact(k) => Some(k >= n),
            DimensionValue::AtLeast(k) if n <= k => Some(true),
            DimensionValue::AtLeast(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            DimensionValue::Exact(n) => json!({"kind": "exact", "value": n}),
            DimensionValue::AtLeast(n) => json!({"kind": "at_least", "value": n}),
        }
    }
}

impl fmt::Display for DimensionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionValue::Exact(n) => write!(f, "{}", n),
            DimensionValue::AtLeast(n) => write!(f, ">= {}", n),
        }
    }
}

#[cfg(test)]
mod tests;
