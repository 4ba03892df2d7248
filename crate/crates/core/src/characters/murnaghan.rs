use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::partition::{partitions, CycleType, Partition};
use super::CharValue;
use crate::error::{Error, Result};

fn factorial(m: usize) -> BigUint {
    (1..=m as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `χ^λ(1) = m! / ∏ hook lengths`.
pub fn hook_degree(lambda: &Partition) -> CharValue {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h as u64);
    BigInt::from(factorial(lambda.order()) / hooks)
}

/// Size of the conjugacy class of `S_m` with cycle type `rho`:
/// `m! / ∏_k k^(m_k) m_k!`.
pub fn class_size(rho: &CycleType) -> CharValue {
    let parts = rho.partition().parts();
    let mut denom = BigUint::one();
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let mult = parts[i..].iter().take_while(|&&x| x == k).count();
        denom *= BigUint::from(k as u64).pow(mult as u32) * factorial(mult);
        i += mult;
    }
    BigInt::from(factorial(rho.order()) / denom)
}

/// Beta-set (first-column hook lengths) of a partition, decreasing.
fn beta_set(parts: &[usize]) -> Vec<usize> {
    let k = parts.len();
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + k - 1 - i)
        .collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let k = beta.len();
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (k - 1 - i))
        .filter(|&p| p > 0)
        .collect()
}

/// Memoized Murnaghan–Nakayama evaluation.
///
/// Cycle parts are consumed largest first. The cache is keyed on the
/// remaining shape and the remaining cycle parts, so one evaluator can be
/// reused across a whole sweep.
#[derive(Default)]
pub struct MnEvaluator {
    cache: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> MnEvaluator {
        MnEvaluator::default()
    }

    /// `χ^λ` at the class of cycle type `rho`.
    pub fn value(&mut self, lambda: &Partition, rho: &CycleType) -> Result<CharValue> {
        if lambda.order() != rho.order() {
            return Err(Error::OrderMismatch {
                partition: lambda.order(),
                cycle_type: rho.order(),
            });
        }
        Ok(self.eval(lambda.parts(), rho.partition().parts()))
    }

    fn eval(&mut self, shape: &[usize], cycles: &[usize]) -> BigInt {
        let Some((&h, rest)) = cycles.split_first() else {
            return if shape.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let beta = beta_set(shape);
        let mut total = BigInt::zero();
        for (idx, &b) in beta.iter().enumerate() {
            if b < h || beta.contains(&(b - h)) {
                continue;
            }
            let target = b - h;
            // Leg length = number of beta numbers strictly between target and b.
            let leg = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut next = beta.clone();
            next[idx] = target;
            let sub = self.eval(&from_beta_set(next), rest);
            if leg % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.cache.insert(key, total.clone());
        total
    }
}

/// One-shot `χ^λ(ρ)`; use an [`MnEvaluator`] for sweeps.
pub fn mn_value(lambda: &Partition, rho: &CycleType) -> Result<CharValue> {
    MnEvaluator::new().value(lambda, rho)
}

/// Full character table of `S_m`; rows and columns both follow
/// [`partitions`] order.
pub struct CharacterTable {
    m: usize,
    characters: Vec<Partition>,
    classes: Vec<CycleType>,
    values: Vec<Vec<CharValue>>,
}

impl CharacterTable {
    pub fn new(m: usize) -> Result<CharacterTable> {
        if !(1..=super::MAX_MR_ORDER).contains(&m) {
            return Err(Error::OutOfRange {
                what: "m",
                value: m as i64,
                range: "1..=12",
            });
        }
        let characters = partitions(m)?;
        let classes: Vec<CycleType> = characters.iter().cloned().map(CycleType::from).collect();
        let mut eval = MnEvaluator::new();
        let values = characters
            .iter()
            .map(|l| {
                classes
                    .iter()
                    .map(|c| eval.value(l, c))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable {
            m,
            characters,
            classes,
            values,
        })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn characters(&self) -> &[Partition] {
        &self.characters
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn value(&self, character: usize, class: usize) -> &CharValue {
        &self.values[character][class]
    }

    /// Degree of character `i`: the value at the identity class, which is last.
    pub fn degree(&self, character: usize) -> &CharValue {
        &self.values[character][self.classes.len() - 1]
    }

    pub fn row(&self, character: usize) -> &[CharValue] {
        &self.values[character]
    }
}
