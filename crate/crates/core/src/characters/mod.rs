//! Exact characters of the symmetric group.
//!
//! Irreducible characters of `S_m` are indexed by partitions of `m`,
//! conjugacy classes by cycle types. Degrees come from the hook length
//! formula; values from the Murnaghan–Nakayama rule, evaluated on beta-sets.
//! Everything is exact: values are big integers, ratios big rationals.

mod murnaghan;
mod partition;
mod tables;

pub use murnaghan::{class_size, hook_degree, mn_value, CharacterTable, MnEvaluator};
pub use partition::{partitions, CycleType, Partition, MAX_PARTITION_ORDER};
pub use tables::{
    mr_via_table, ratio_at, small_degree_table, verify_threecycle, MrReport, SmallDegreeRow,
    ThreeCycleReport, ThreeCycleRow, MAX_MR_ORDER, MAX_THREECYCLE_ORDER,
};

/// An exact character value.
pub type CharValue = num_bigint::BigInt;
