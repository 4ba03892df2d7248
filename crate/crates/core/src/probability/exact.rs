use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use super::{Method, PbEstimate, PbValue};
use crate::constructions::GroupSpec;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::group::MatrixGroup;
use crate::linalg::{Matrix, VectorIndexer};

/// Default ceiling on `|V|^c` for exhaustive counting.
pub const DEFAULT_TUPLE_CAP: u128 = 100_000_000;

/// Fixed-vector bitsets are built only while their total size stays below
/// this many bits (64 MiB).
const BITSET_BUDGET_BITS: u128 = 1 << 29;

/// Per-group state for deciding whether tuples are bases.
///
/// Non-identity elements are kept in ascending support order, so the ones
/// most likely to fix a vector are tried first. When memory allows, the fixed
/// space of every element is precomputed as a bitset over vector indices.
pub struct BaseCounter<'g> {
    indexer: VectorIndexer,
    elements: Vec<&'g Matrix>,
    fixed: Option<Vec<Vec<u64>>>,
}

impl<'g> BaseCounter<'g> {
    pub fn new(group: &'g MatrixGroup) -> Result<BaseCounter<'g>> {
        let all = group.elements()?;
        let elements: Vec<&Matrix> = group.fixer_order()?.iter().map(|&i| &all[i]).collect();
        let indexer = VectorIndexer::new(group.field(), group.dim())?;
        let bits = elements.len() as u128 * indexer.size() as u128;
        let fixed = (bits <= BITSET_BUDGET_BITS).then(|| {
            let words = indexer.size().div_ceil(64) as usize;
            elements
                .par_iter()
                .map(|g| {
                    let mut set = vec![0u64; words];
                    for v in g.minus_scalar(Scalar::ONE).kernel().elements() {
                        let i = indexer.encode(&v);
                        set[(i / 64) as usize] |= 1 << (i % 64);
                    }
                    set
                })
                .collect()
        });
        Ok(BaseCounter {
            indexer,
            elements,
            fixed,
        })
    }

    pub fn indexer(&self) -> &VectorIndexer {
        &self.indexer
    }

    fn fixes(&self, k: usize, idx: u64, v: &[Scalar]) -> bool {
        match &self.fixed {
            Some(sets) => sets[k][(idx / 64) as usize] >> (idx % 64) & 1 == 1,
            None => self.elements[k].fixes(v),
        }
    }

    /// Whether the vectors with the given indices form a base.
    pub fn is_base(&self, tuple: &[u64]) -> bool {
        let mut buf = vec![Scalar::ZERO; self.indexer.dim()];
        let decoded: Vec<Vec<Scalar>> = if self.fixed.is_some() {
            Vec::new()
        } else {
            tuple
                .iter()
                .map(|&i| {
                    self.indexer.decode_into(i, &mut buf);
                    buf.clone()
                })
                .collect()
        };
        (0..self.elements.len()).all(|k| {
            tuple.iter().enumerate().any(|(j, &idx)| {
                let v = decoded.get(j).map_or(&[][..], |v| v.as_slice());
                !self.fixes(k, idx, v)
            })
        })
    }

    /// Number of base `c`-tuples among all `|V|^c`.
    pub fn count_bases(&self, c: u32) -> u128 {
        if c == 0 {
            return u128::from(self.elements.is_empty());
        }
        let all: Vec<usize> = (0..self.elements.len()).collect();
        (0..self.indexer.size())
            .into_par_iter()
            .map(|idx| {
                let mut buf = vec![Scalar::ZERO; self.indexer.dim()];
                self.indexer.decode_into(idx, &mut buf);
                let survivors: Vec<usize> = all
                    .iter()
                    .copied()
                    .filter(|&k| self.fixes(k, idx, &buf))
                    .collect();
                self.count_from(1, c, &survivors)
            })
            .sum()
    }

    /// Completions of a prefix of length `level` whose common stabilizer,
    /// minus the identity, is `survivors`.
    fn count_from(&self, level: u32, c: u32, survivors: &[usize]) -> u128 {
        let size = self.indexer.size();
        if survivors.is_empty() {
            return (size as u128).pow(c - level);
        }
        if level == c {
            return 0;
        }
        if level + 1 == c {
            if let Some(sets) = &self.fixed {
                let covered: u64 = (0..sets[0].len())
                    .map(|w| {
                        survivors
                            .iter()
                            .fold(0u64, |acc, &k| acc | sets[k][w])
                            .count_ones() as u64
                    })
                    .sum();
                return (size - covered) as u128;
            }
        }
        let mut buf = vec![Scalar::ZERO; self.indexer.dim()];
        let mut next = Vec::with_capacity(survivors.len());
        let mut total = 0u128;
        for idx in 0..size {
            if self.fixed.is_none() {
                self.indexer.decode_into(idx, &mut buf);
            }
            next.clear();
            next.extend(
                survivors
                    .iter()
                    .copied()
                    .filter(|&k| self.fixes(k, idx, &buf)),
            );
            total += self.count_from(level + 1, c, &next);
        }
        total
    }
}

fn tuple_space(group: &MatrixGroup, c: u32, tuple_cap: u128) -> Result<u128> {
    let q = group.field().order() as u128;
    let size = q
        .checked_pow(group.dim() as u32)
        .and_then(|v| v.checked_pow(c));
    match size {
        Some(s) if s <= tuple_cap => Ok(s),
        _ => Err(Error::TupleSpaceTooLarge {
            size: format!("{}^{}", q, group.dim() as u64 * c as u64),
            cap: tuple_cap,
        }),
    }
}

/// Exact `Pb(c, G, V)` by exhaustive search over `V^c` with pruning on the
/// common stabilizer of each prefix. Runs on the current rayon pool.
pub fn pb_bruteforce(group: &MatrixGroup, c: u32, tuple_cap: u128) -> Result<PbEstimate> {
    group.elements()?;
    let total = tuple_space(group, c, tuple_cap)?;
    let counter = BaseCounter::new(group)?;
    let bases = counter.count_bases(c);
    Ok(PbEstimate {
        method: Method::Bruteforce,
        value: PbValue::Exact(BigRational::new(BigInt::from(bases), BigInt::from(total))),
        trials: None,
        seed: None,
    })
}

fn check_q(q: u64) -> Result<BigInt> {
    if q < 2 {
        return Err(Error::BadParameters(format!("field order {q} < 2")));
    }
    Ok(BigInt::from(q))
}

/// `(1 - q^-c)^n`, the base probability of the full diagonal group.
pub fn pb_formula_diagonal(n: usize, q: u64, c: u32) -> Result<BigRational> {
    let qc = check_q(q)?.pow(c);
    let factor = BigRational::new(&qc - 1, qc);
    Ok(num_traits::pow(factor, n))
}

/// `∏_{i<m} (q^c - i) / q^c`: the probability that `c` random vectors of
/// `F_q^m`, read as `m` points of `F_q^c`, are pairwise distinct.
pub fn pb_formula_sym(m: usize, q: u64, c: u32) -> Result<BigRational> {
    let qc = check_q(q)?.pow(c);
    if qc < BigInt::from(m) {
        return Err(Error::BadParameters(format!(
            "q^c = {qc} is smaller than m = {m}"
        )));
    }
    let mut out = BigRational::one();
    for i in 0..m {
        out *= BigRational::new(&qc - i, qc.clone());
    }
    Ok(out)
}

impl PbEstimate {
    /// A closed-form value for the families that have one: the diagonal group
    /// without scalars, and `S_m` on the natural or deleted module without
    /// scalars.
    pub fn from_formula(spec: &GroupSpec, c: u32) -> Result<PbEstimate> {
        let q = spec.field()?.order() as u64;
        let value = match spec {
            GroupSpec::Diagonal { n, scalars, .. } if *scalars != Some(true) => {
                pb_formula_diagonal(*n, q, c)?
            }
            GroupSpec::SymNatural { m, scalars, .. } if *scalars != Some(true) => {
                pb_formula_sym(*m, q, c)?
            }
            GroupSpec::DeletedPerm {
                m,
                alt: false,
                scalars: Some(false),
                ..
            } => pb_formula_sym(*m, q, c)?,
            _ => {
                return Err(Error::BadParameters(format!(
                    "no closed formula for {spec}"
                )))
            }
        };
        Ok(PbEstimate {
            method: Method::Formula,
            value: PbValue::Exact(value),
            trials: None,
            seed: None,
        })
    }
}
