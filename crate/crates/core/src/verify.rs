//! Named checks of the structural results, grouped into suites.
//!
//! Each check returns a [`Check`] with a pass flag and a short detail line.
//! Checks that hit a cap or fail to build fail; they never panic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::{
    class_size, hook_degree, mr_via_table, partitions, small_degree_table, verify_threecycle,
    CharacterTable,
};
use crate::constructions::{build_enumerated, GroupSpec};
use crate::error::Result;
use crate::group::{MatrixGroup, DEFAULT_ENUMERATION_CAP};
use crate::linalg::{Matrix, VectorIndexer};
use crate::probability::{
    bound_report, closed_form_bounds, pb_bruteforce, pb_formula_diagonal, pb_formula_sym,
    verify_tensor_lemma, ClosedFormParams, DEFAULT_TUPLE_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// Folds an error into a failed check.
    fn from_result(name: impl Into<String>, r: Result<Check>) -> Check {
        let name = name.into();
        r.unwrap_or_else(|e| Check::new(name, false, format!("error: {e}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Chars,
    Lemmas,
    Formulas,
    All,
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "chars" => Ok(Suite::Chars),
            "lemmas" => Ok(Suite::Lemmas),
            "formulas" => Ok(Suite::Formulas),
            "all" => Ok(Suite::All),
            _ => Err(crate::Error::Parse(format!(
                "unknown suite `{s}`; expected chars, lemmas, formulas or all"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest `m` for the 3-cycle sweep.
    pub m_max: usize,
    /// Largest `m` for the small-degree table.
    pub table_max: usize,
    /// Random pairs per group in the commutator check.
    pub pairs: usize,
    pub seed: u64,
    pub enum_cap: usize,
    pub tuple_cap: u128,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            m_max: 18,
            table_max: 30,
            pairs: 10_000,
            seed: 0,
            enum_cap: DEFAULT_ENUMERATION_CAP,
            tuple_cap: DEFAULT_TUPLE_CAP,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<Check> {
    match suite {
        Suite::Chars => chars_suite(opts),
        Suite::Lemmas => lemmas_suite(opts),
        Suite::Formulas => formulas_suite(opts),
        Suite::All => {
            let mut out = chars_suite(opts);
            out.extend(lemmas_suite(opts));
            out.extend(formulas_suite(opts));
            out
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn factorial(m: usize) -> BigInt {
    (1..=m as u64).map(BigInt::from).product()
}

// Character checks.

pub fn small_degree_check(m: usize) -> Check {
    Check::from_result(
        format!("small_degree_table m={m}"),
        small_degree_table(m).map(|rows| {
            let bad: Vec<&str> = rows
                .iter()
                .filter(|r| !r.matches())
                .map(|r| r.label)
                .collect();
            Check::new(
                format!("small_degree_table m={m}"),
                bad.is_empty(),
                if bad.is_empty() {
                    "7 rows match".to_string()
                } else {
                    format!("mismatched rows {bad:?}")
                },
            )
        }),
    )
}

pub fn threecycle_check(m: usize) -> Check {
    Check::from_result(
        format!("threecycle m={m}"),
        verify_threecycle(m).map(|r| {
            let slack = match (&r.min_slack, &r.min_slack_at) {
                (Some(s), Some(at)) => format!("min slack {s} at {at}"),
                _ => "no partitions".into(),
            };
            Check::new(
                format!("threecycle m={m}"),
                r.passed(),
                format!(
                    "{} partitions, {} violations, {slack}",
                    r.rows.len(),
                    r.violations.len()
                ),
            )
        }),
    )
}

pub fn orthogonality_check(m: usize) -> Check {
    let name = format!("row orthogonality m={m}");
    Check::from_result(
        name.clone(),
        CharacterTable::new(m).map(|t| {
            let sizes: Vec<BigInt> = t.classes().iter().map(class_size).collect();
            let fact = factorial(m);
            let k = t.characters().len();
            let mut bad = 0;
            for i in 0..k {
                for j in i..k {
                    let s: BigInt = (0..sizes.len())
                        .map(|c| &sizes[c] * t.value(i, c) * t.value(j, c))
                        .sum();
                    let want = if i == j { fact.clone() } else { BigInt::zero() };
                    if s != want {
                        bad += 1;
                    }
                }
            }
            Check::new(name, bad == 0, format!("{k} characters, {bad} bad pairs"))
        }),
    )
}

pub fn degree_sum_check(m: usize) -> Check {
    let name = format!("sum of squared degrees m={m}");
    Check::from_result(
        name.clone(),
        partitions(m).map(|ps| {
            let s: BigInt = ps.iter().map(|l| hook_degree(l).pow(2)).sum();
            let f = factorial(m);
            Check::new(name, s == f, format!("{s} vs {f}"))
        }),
    )
}

pub fn chars_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut out: Vec<Check> = (15..=opts.table_max).map(small_degree_check).collect();
    out.extend((3..=opts.m_max).map(threecycle_check));
    out.extend((1..=8).map(orthogonality_check));
    out.extend((1..=20).map(degree_sum_check));
    out
}

// Group lemmas.

/// `Supp([g,h]) <= 2 Supp(g)` on `pairs` random pairs.
pub fn commutator_check(group: &MatrixGroup, pairs: usize, seed: u64) -> Check {
    let name = format!("commutator support {}", group.label());
    let run = || -> Result<Check> {
        let elements = group.elements()?;
        let supports = group.supports()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut violations = 0;
        for _ in 0..pairs {
            let i = rng.random_range(0..elements.len());
            let j = rng.random_range(0..elements.len());
            let k = Matrix::commutator(&elements[i], &elements[j])?;
            let sk = match group.index_of(&k)? {
                Some(idx) => supports[idx],
                None => k.support()?,
            };
            if sk > 2 * supports[i] {
                violations += 1;
            }
        }
        Ok(Check::new(
            name.clone(),
            violations == 0,
            format!("{pairs} pairs, {violations} violations"),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// `MinSupp(N) <= 2 MinSupp(G)` for a normal subgroup `N` acting absolutely
/// irreducibly; normality and containment are checked first.
pub fn normal_subgroup_check(normal: &MatrixGroup, group: &MatrixGroup) -> Check {
    let name = format!(
        "normal subgroup support {} in {}",
        normal.label(),
        group.label()
    );
    let run = || -> Result<Check> {
        for n in normal.generators() {
            if !group.contains(n)? {
                return Ok(Check::new(name.clone(), false, "not a subgroup"));
            }
            for g in group.generators() {
                let conj = g.inverse()?.try_mul(n)?.try_mul(g)?;
                if !normal.contains(&conj)? {
                    return Ok(Check::new(name.clone(), false, "not normal"));
                }
            }
        }
        let (a, b) = (normal.min_supp()?, group.min_supp()?);
        let passed = match (a, b) {
            (Some(a), Some(b)) => a <= 2 * b,
            _ => true,
        };
        Ok(Check::new(
            name.clone(),
            passed,
            format!("MinSupp(N) = {a:?}, MinSupp(G) = {b:?}"),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// `minsupp_bound <= union_bound <= Pb` at one `c`.
pub fn bound_chain_check(group: &MatrixGroup, c: u32, tuple_cap: u128) -> Check {
    let name = format!("bound chain {} c={c}", group.label());
    let run = || -> Result<Check> {
        let report = bound_report(group, c, None)?;
        let pb = pb_bruteforce(group, c, tuple_cap)?;
        let pb = pb.exact().expect("brute force is exact");
        let passed = report.minsupp_bound <= report.union_bound && report.union_bound <= *pb;
        Ok(Check::new(
            name.clone(),
            passed,
            format!(
                "minsupp {} <= union {} <= Pb {}",
                report.minsupp_bound, report.union_bound, pb
            ),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// Every non-scalar element of `Z·R`, `R` extraspecial of order `r^3`, has
/// projective support `r - 1`.
pub fn extraspecial_check(r: usize, p: u64, enum_cap: usize) -> Check {
    let name = format!("extraspecial spectrum r={r} q={p}");
    let run = || -> Result<Check> {
        let g = build_enumerated(&GroupSpec::heisenberg(r, p), enum_cap)?;
        let ps = g.projective_supports()?;
        let mut off = 0;
        let mut checked = 0;
        for (m, &s) in g.elements()?.iter().zip(ps) {
            if m.as_scalar().is_some() {
                continue;
            }
            checked += 1;
            if s != r - 1 {
                off += 1;
            }
        }
        Ok(Check::new(
            name.clone(),
            off == 0 && checked > 0,
            format!(
                "{checked} non-scalar elements, {off} with support != {}",
                r - 1
            ),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// `MinSupp >= (dim/2)(1 - mr(S_m))` for `Z·S_m` on the deleted module.
/// Returns the check with both sides.
pub fn msupp_mr_check(m: usize, p: u64, enum_cap: usize) -> Check {
    let name = format!("minsupp vs mr deleted m={m} q={p}");
    let run = || -> Result<Check> {
        let g = build_enumerated(&GroupSpec::deleted_perm(m, p), enum_cap)?;
        let lhs = g.min_supp_projective()?.unwrap_or(g.dim());
        let mr = mr_via_table(m)?.mr;
        let rhs = rat(g.dim() as i64, 2) * (rat(1, 1) - &mr);
        Ok(Check::new(
            name.clone(),
            BigRational::from_integer(lhs.into()) >= rhs,
            format!("MinSupp {lhs} >= {rhs} (mr = {mr})"),
        ))
    };
    Check::from_result(name.clone(), run())
}

pub fn tensor_check(left: &GroupSpec, right: &GroupSpec, enum_cap: usize) -> Check {
    let name = format!("tensor support {left} ⊗ {right}");
    let run = || -> Result<Check> {
        let a = build_enumerated(left, enum_cap)?;
        let b = build_enumerated(right, enum_cap)?;
        let r = verify_tensor_lemma(&a, &b, enum_cap)?;
        let branch = if r.min_branch() {
            "min formula"
        } else if r.half_branch() {
            "half dimension"
        } else {
            "neither"
        };
        Ok(Check::new(
            name.clone(),
            r.holds(),
            format!(
                "order {}, MinSupp {:?}, formula {:?}, dim {}; {branch} branch",
                r.order, r.actual, r.formula, r.dim
            ),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// Appending a vector to a base keeps it a base.
pub fn base_monotonicity_check(group: &MatrixGroup, samples: usize, seed: u64) -> Check {
    let name = format!("base monotonicity {}", group.label());
    let run = || -> Result<Check> {
        let idx = VectorIndexer::new(group.field(), group.dim())?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut bad = 0;
        for _ in 0..samples {
            let c = rng.random_range(1..=3);
            let mut tuple: Vec<_> = (0..c)
                .map(|_| idx.decode(rng.random_range(0..idx.size())))
                .collect();
            let before = group.is_base(&tuple)?;
            tuple.push(idx.decode(rng.random_range(0..idx.size())));
            if before && !group.is_base(&tuple)? {
                bad += 1;
            }
        }
        Ok(Check::new(
            name.clone(),
            bad == 0,
            format!("{samples} samples, {bad} violations"),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// Small instances of every family, cheap enough for brute force at `c = 3`.
pub fn small_instances() -> Vec<GroupSpec> {
    vec![
        GroupSpec::scalars(2, 3),
        GroupSpec::diagonal(2, 3),
        GroupSpec::diagonal_wreath(2, 3),
        GroupSpec::sym_natural(3, 5),
        GroupSpec::alt_natural(3, 5),
        GroupSpec::deleted_perm(3, 5),
        GroupSpec::heisenberg(2, 3),
        GroupSpec::tensor(
            GroupSpec::sym_natural(2, 3).with_scalars(true),
            GroupSpec::heisenberg(2, 3),
        ),
    ]
}

/// Instances for the random commutator check.
pub fn commutator_instances() -> Vec<GroupSpec> {
    vec![
        GroupSpec::scalars(3, 5),
        GroupSpec::diagonal(3, 5),
        GroupSpec::diagonal_wreath(3, 7),
        GroupSpec::sym_natural(5, 7),
        GroupSpec::alt_natural(5, 7),
        GroupSpec::deleted_perm(5, 7),
        GroupSpec::heisenberg(3, 7),
        GroupSpec::heisenberg(5, 11),
        GroupSpec::tensor(
            GroupSpec::sym_natural(3, 7).with_scalars(true),
            GroupSpec::heisenberg(3, 7),
        ),
    ]
}

/// Pairs `(N, G)` with `N` normal in `G` and absolutely irreducible.
pub fn normal_pairs() -> Vec<(GroupSpec, GroupSpec)> {
    let h = GroupSpec::heisenberg(3, 7);
    let h2 = GroupSpec::heisenberg(2, 5);
    vec![
        (h.clone().with_scalars(false), h.clone()),
        (
            GroupSpec::deleted_perm(4, 7)
                .alternating()
                .with_scalars(false),
            GroupSpec::deleted_perm(4, 7),
        ),
        (
            GroupSpec::tensor(
                h2.clone().with_scalars(false),
                h2.clone().with_scalars(false),
            )
            .with_scalars(false),
            GroupSpec::tensor(h2.clone(), h2),
        ),
    ]
}

/// Tensor instances for the minimal-support formula.
pub fn tensor_instances() -> Vec<(GroupSpec, GroupSpec)> {
    vec![
        (
            GroupSpec::sym_natural(3, 7).with_scalars(true),
            GroupSpec::heisenberg(3, 7),
        ),
        (GroupSpec::scalars(2, 5), GroupSpec::scalars(2, 5)),
        (
            GroupSpec::diagonal(2, 5).with_scalars(true),
            GroupSpec::sym_natural(3, 5).with_scalars(true),
        ),
    ]
}

fn with_group(spec: &GroupSpec, cap: usize, f: impl FnOnce(&MatrixGroup) -> Check) -> Check {
    match build_enumerated(spec, cap) {
        Ok(g) => f(&g),
        Err(e) => Check::new(format!("build {spec}"), false, format!("error: {e}")),
    }
}

pub fn lemmas_suite(opts: &VerifyOptions) -> Vec<Check> {
    let mut out = Vec::new();
    for spec in commutator_instances() {
        out.push(with_group(&spec, opts.enum_cap, |g| {
            commutator_check(g, opts.pairs, opts.seed)
        }));
    }
    for (n, g) in normal_pairs() {
        let check = match (
            build_enumerated(&n, opts.enum_cap),
            build_enumerated(&g, opts.enum_cap),
        ) {
            (Ok(n), Ok(g)) => normal_subgroup_check(&n, &g),
            (Err(e), _) | (_, Err(e)) => Check::new(
                format!("normal subgroup {n} in {g}"),
                false,
                format!("error: {e}"),
            ),
        };
        out.push(check);
    }
    for spec in small_instances() {
        for c in 1..=3 {
            out.push(with_group(&spec, opts.enum_cap, |g| {
                bound_chain_check(g, c, opts.tuple_cap)
            }));
        }
        out.push(with_group(&spec, opts.enum_cap, |g| {
            base_monotonicity_check(g, 200, opts.seed)
        }));
    }
    for (r, p) in [(2, 5), (3, 7), (5, 11)] {
        out.push(extraspecial_check(r, p, opts.enum_cap));
    }
    for m in 3..=5 {
        out.push(msupp_mr_check(m, 7, opts.enum_cap));
    }
    for (l, r) in tensor_instances() {
        out.push(tensor_check(&l, &r, opts.enum_cap));
    }
    out
}

// Exact formulas.

fn exact_pb(spec: &GroupSpec, c: u32, opts: &VerifyOptions) -> Result<BigRational> {
    let g = build_enumerated(spec, opts.enum_cap)?;
    Ok(pb_bruteforce(&g, c, opts.tuple_cap)?
        .exact()
        .expect("brute force is exact")
        .clone())
}

pub fn diagonal_formula_check(n: usize, p: u64, c: u32, opts: &VerifyOptions) -> Check {
    let name = format!("diagonal formula n={n} q={p} c={c}");
    let run = || -> Result<Check> {
        let exact = exact_pb(&GroupSpec::diagonal(n, p), c, opts)?;
        let formula = pb_formula_diagonal(n, p, c)?;
        Ok(Check::new(
            name.clone(),
            exact == formula,
            format!("Pb {exact}, formula {formula}"),
        ))
    };
    Check::from_result(name.clone(), run())
}

pub fn sym_formula_check(m: usize, p: u64, c: u32, opts: &VerifyOptions) -> Check {
    let name = format!("sym formula m={m} q={p} c={c}");
    let run = || -> Result<Check> {
        let exact = exact_pb(&GroupSpec::sym_natural(m, p), c, opts)?;
        let formula = pb_formula_sym(m, p, c)?;
        Ok(Check::new(
            name.clone(),
            exact == formula,
            format!("Pb {exact}, formula {formula}"),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// `S_m` on the deleted module has the same base probability as on the
/// natural module. With scalars added the value can only drop.
pub fn deleted_transfer_check(m: usize, p: u64, c: u32, opts: &VerifyOptions) -> Check {
    let name = format!("deleted transfer m={m} q={p} c={c}");
    let run = || -> Result<Check> {
        let g0 = exact_pb(&GroupSpec::deleted_perm(m, p).with_scalars(false), c, opts)?;
        let zg0 = exact_pb(&GroupSpec::deleted_perm(m, p), c, opts)?;
        let formula = pb_formula_sym(m, p, c)?;
        Ok(Check::new(
            name.clone(),
            g0 == formula && zg0 <= formula,
            format!("Pb(S_m) {g0}, Pb(Z·S_m) {zg0}, formula {formula}"),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// `Pb(c, Z·S_m, V) >= 1 - 1/n^(c-2)` with `n = m - 1`.
pub fn deleted_bound_check(m: usize, p: u64, c: u32, opts: &VerifyOptions) -> Check {
    let name = format!("deleted bound m={m} q={p} c={c}");
    let run = || -> Result<Check> {
        let exact = exact_pb(&GroupSpec::deleted_perm(m, p), c, opts)?;
        let n = BigInt::from(m as u64 - 1);
        let bound = rat(1, 1) - BigRational::new(1.into(), n.pow(c - 2));
        Ok(Check::new(
            name.clone(),
            exact >= bound,
            format!("Pb {exact} >= {bound}"),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// Cases whose bound is positive, and those among them exceeding `exact`.
fn closed_form_excess(
    q: u64,
    dim: usize,
    c: u32,
    exact: &BigRational,
) -> Result<(Vec<&'static str>, Vec<&'static str>)> {
    let bounds = closed_form_bounds(&ClosedFormParams::new(q, dim as u64, c))?;
    let exact_f = exact.to_f64().unwrap_or(f64::NAN);
    let mut positive = Vec::new();
    let mut over = Vec::new();
    for b in bounds.iter().filter(|b| !b.vacuous) {
        positive.push(b.case.name());
        let ok = match &b.exact {
            Some(r) => r <= exact,
            None => b.value <= exact_f,
        };
        if !ok {
            over.push(b.case.name());
        }
    }
    Ok((positive, over))
}

/// Every positive closed-form bound at `(q, dim, c)` is at most `exact`.
pub fn closed_form_check(label: &str, q: u64, dim: usize, c: u32, exact: &BigRational) -> Check {
    let name = format!("closed forms {label} c={c}");
    let run = || -> Result<Check> {
        let (positive, over) = closed_form_excess(q, dim, c, exact)?;
        Ok(Check::new(
            name.clone(),
            over.is_empty(),
            format!(
                "Pb {:.6e}, positive cases {positive:?}, exceeding Pb {over:?}",
                exact.to_f64().unwrap_or(f64::NAN)
            ),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// The full diagonal group is imprimitive, and its exact base probability
/// falls below a positive closed-form bound: primitivity cannot be dropped.
/// Passes when some case is exceeded.
pub fn diagonal_counterexample_check(n: usize, p: u64, c: u32) -> Check {
    let name = format!("imprimitive counterexample diagonal n={n} q={p} c={c}");
    let run = || -> Result<Check> {
        let exact = pb_formula_diagonal(n, p, c)?;
        let (positive, over) = closed_form_excess(p, n, c, &exact)?;
        Ok(Check::new(
            name.clone(),
            !over.is_empty(),
            format!("positive cases {positive:?}, exceeding Pb {over:?}"),
        ))
    };
    Check::from_result(name.clone(), run())
}

/// Closed forms against brute-force `Pb` of `Z·S_m` on the deleted module.
pub fn deleted_closed_form_check(m: usize, p: u64, c: u32, opts: &VerifyOptions) -> Check {
    let label = format!("deleted_perm(m={m},q={p})+Z");
    match exact_pb(&GroupSpec::deleted_perm(m, p), c, opts) {
        Ok(exact) => closed_form_check(&label, p, m - 1, c, &exact),
        Err(e) => Check::new(
            format!("closed forms {label} c={c}"),
            false,
            format!("error: {e}"),
        ),
    }
}

pub fn formulas_suite(opts: &VerifyOptions) -> Vec<Check> {
    let fits = |q: u64, dim: usize, c: u32| {
        (q as f64).powi((dim as u32 * c) as i32) <= opts.tuple_cap as f64
    };
    let mut out = Vec::new();
    for n in 1..=3 {
        for p in [3, 5, 7] {
            for c in 1..=3 {
                if fits(p, n, c) {
                    out.push(diagonal_formula_check(n, p, c, opts));
                }
            }
        }
    }
    for m in 2..=4 {
        for p in [5, 7, 11] {
            for c in 1..=2 {
                if fits(p, m, c) {
                    out.push(sym_formula_check(m, p, c, opts));
                }
            }
        }
    }
    for m in 3..=4 {
        for p in [5, 7] {
            for c in 1..=2 {
                out.push(deleted_transfer_check(m, p, c, opts));
            }
            if fits(p, m - 1, 3) {
                out.push(deleted_bound_check(m, p, 3, opts));
            }
        }
    }
    // The closed forms need large c to be positive; the product formula
    // reaches any c.
    for c in [3, 6, 11, 12, 16, 20] {
        for (m, p) in [(3, 5), (4, 7), (6, 7), (9, 11)] {
            if let Ok(exact) = pb_formula_sym(m, p, c) {
                out.push(closed_form_check(
                    &format!("sym_natural(m={m},q={p})"),
                    p,
                    m,
                    c,
                    &exact,
                ));
            }
        }
    }
    for (m, p) in [(3, 5), (3, 7), (4, 5), (4, 7), (5, 7)] {
        if fits(p, m - 1, 3) {
            out.push(deleted_closed_form_check(m, p, 3, opts));
        }
    }
    for (n, p, c) in [(16, 5, 12), (9, 7, 16)] {
        out.push(diagonal_counterexample_check(n, p, c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let opts = VerifyOptions {
            m_max: 8,
            table_max: 16,
            pairs: 200,
            ..VerifyOptions::default()
        };
        for c in chars_suite(&opts) {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn failures_surface_as_checks() {
        let c = small_degree_check(3);
        assert!(!c.passed);
        assert!(c.detail.starts_with("error"));
        let c = deleted_bound_check(3, 3, 3, &VerifyOptions::default());
        assert!(!c.passed);
    }

    #[test]
    fn suite_names() {
        assert_eq!("lemmas".parse::<Suite>().unwrap(), Suite::Lemmas);
        assert!("other".parse::<Suite>().is_err());
    }

    #[test]
    fn normal_pair_rejects_non_subgroup() {
        let n = build_enumerated(&GroupSpec::heisenberg(3, 7), DEFAULT_ENUMERATION_CAP).unwrap();
        let g = build_enumerated(&GroupSpec::scalars(3, 7), DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(!normal_subgroup_check(&n, &g).passed);
    }
}
