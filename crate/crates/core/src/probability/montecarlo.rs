use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::exact::BaseCounter;
use super::{Method, PbEstimate, PbValue};
use crate::error::{Error, Result};
use crate::group::MatrixGroup;
use crate::linalg::Vector;

/// Two-sided 95% normal quantile.
pub const WILSON_Z95: f64 = 1.959_963_984_540_054;

/// Where the sampled tuples come from.
#[derive(Clone, Debug)]
pub enum TupleSource {
    Uniform,
    /// Every trial uses this tuple; a test hook.
    Constant(Vec<Vector>),
}

/// Wilson score interval for `successes` out of `trials`, clamped to `[0, 1]`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The endpoints are exactly 0 and 1 at the extremes; avoid rounding there.
    let lo = if successes == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let hi = if successes == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo, hi)
}

/// Seeds trial `i` independently of how trials are split among workers.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Estimates `Pb(c, G, V)` from `trials` uniform `c`-tuples.
pub fn pb_monte_carlo(group: &MatrixGroup, c: u32, trials: u64, seed: u64) -> Result<PbEstimate> {
    pb_monte_carlo_with(group, c, trials, seed, &TupleSource::Uniform)
}

pub fn pb_monte_carlo_with(
    group: &MatrixGroup,
    c: u32,
    trials: u64,
    seed: u64,
    source: &TupleSource,
) -> Result<PbEstimate> {
    if trials < 100 {
        return Err(Error::BadParameters(format!(
            "{trials} trials; at least 100 required"
        )));
    }
    let counter = BaseCounter::new(group)?;
    let indexer = counter.indexer();
    let successes = match source {
        TupleSource::Uniform => {
            let size = indexer.size();
            (0..trials)
                .into_par_iter()
                .map_init(
                    || vec![0u64; c as usize],
                    |tuple, i| {
                        let mut rng = trial_rng(seed, i);
                        for slot in tuple.iter_mut() {
                            *slot = rng.random_range(0..size);
                        }
                        counter.is_base(tuple)
                    },
                )
                .filter(|&b| b)
                .count() as u64
        }
        TupleSource::Constant(vs) => {
            if vs.len() != c as usize || vs.iter().any(|v| v.len() != group.dim()) {
                return Err(Error::DimensionMismatch {
                    expected: c as usize,
                    got: vs.len(),
                });
            }
            let tuple: Vec<u64> = vs.iter().map(|v| indexer.encode(v)).collect();
            if counter.is_base(&tuple) {
                trials
            } else {
                0
            }
        }
    };
    let (ci_lo, ci_hi) = wilson_interval(successes, trials, WILSON_Z95);
    Ok(PbEstimate {
        method: Method::Montecarlo,
        value: PbValue::Sampled {
            successes,
            estimate: successes as f64 / trials as f64,
            ci_lo,
            ci_hi,
        },
        trials: Some(trials),
        seed: Some(seed),
    })
}
