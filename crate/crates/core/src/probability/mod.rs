//! Base probabilities and the lower bounds that control them.
//!
//! `Pb(c, G, V)` is the probability that `c` independent uniform vectors of
//! `V` form a base for `G`, i.e. that only the identity fixes all of them.
//! Exact values are rationals throughout; floats appear only in the Monte
//! Carlo estimator and in closed-form bounds with irrational exponents.

mod bounds;
mod exact;
mod montecarlo;
mod tensor;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

pub use bounds::{
    bound_report, closed_form_bound, closed_form_bounds, min_c, minsupp_bound, mr_bound,
    union_bound, BoundReport, ClosedFormBound, ClosedFormCase, ClosedFormParams,
};
pub use exact::{
    pb_bruteforce, pb_formula_diagonal, pb_formula_sym, BaseCounter, DEFAULT_TUPLE_CAP,
};
pub use montecarlo::{
    pb_monte_carlo, pb_monte_carlo_with, wilson_interval, TupleSource, WILSON_Z95,
};
pub use tensor::{tensor_of, verify_tensor_lemma, TensorLemmaReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Formula,
    Montecarlo,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PbValue {
    Exact(BigRational),
    Sampled {
        successes: u64,
        estimate: f64,
        ci_lo: f64,
        ci_hi: f64,
    },
}

/// A base probability with its provenance.
#[derive(Clone, Debug, PartialEq)]
pub struct PbEstimate {
    pub method: Method,
    pub value: PbValue,
    /// Monte Carlo only.
    pub trials: Option<u64>,
    /// Monte Carlo only.
    pub seed: Option<u64>,
}

impl PbEstimate {
    pub fn exact(&self) -> Option<&BigRational> {
        match &self.value {
            PbValue::Exact(r) => Some(r),
            PbValue::Sampled { .. } => None,
        }
    }

    pub fn as_f64(&self) -> f64 {
        match &self.value {
            PbValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            PbValue::Sampled { estimate, .. } => *estimate,
        }
    }

    /// 95% interval for sampled values; degenerate for exact ones.
    pub fn interval(&self) -> (f64, f64) {
        match &self.value {
            PbValue::Exact(_) => (self.as_f64(), self.as_f64()),
            PbValue::Sampled { ci_lo, ci_hi, .. } => (*ci_lo, *ci_hi),
        }
    }
}
