//! Criterion benchmarks for `cobase-core`; see `benches/`.

pub use cobase_core::GroupSpec;

/// Instances shared by the benchmarks, small enough for a quick run.
pub fn bench_groups() -> Vec<GroupSpec> {
    vec![
        GroupSpec::diagonal(3, 7),
        GroupSpec::sym_natural(5, 7),
        GroupSpec::deleted_perm(6, 7),
        GroupSpec::heisenberg(3, 7),
    ]
}
