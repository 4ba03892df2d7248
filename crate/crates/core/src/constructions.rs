//! Factories for the concrete group families.
//!
//! Every family except plain `diagonal`, `sym_natural` and `alt_natural` gets
//! the scalar group `Z = F_q^×` appended by default; the `scalars` field
//! overrides that either way.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Scalar};
use crate::group::MatrixGroup;
use crate::linalg::{Matrix, Vector};

fn one() -> u32 {
    1
}

/// A recipe for one group; the unit of the configuration file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Scalars {
        n: usize,
        p: u64,
        #[serde(default = "one")]
        e: u32,
    },
    Diagonal {
        n: usize,
        p: u64,
        #[serde(default = "one")]
        e: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scalars: Option<bool>,
    },
    DiagonalWreath {
        n: usize,
        p: u64,
        #[serde(default = "one")]
        e: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scalars: Option<bool>,
    },
    SymNatural {
        m: usize,
        p: u64,
        #[serde(default = "one")]
        e: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scalars: Option<bool>,
    },
    AltNatural {
        m: usize,
        p: u64,
        #[serde(default = "one")]
        e: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scalars: Option<bool>,
    },
    DeletedPerm {
        m: usize,
        p: u64,
        #[serde(default = "one")]
        e: u32,
        /// Use `A_m` instead of `S_m`.
        #[serde(default)]
        alt: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scalars: Option<bool>,
    },
    Heisenberg {
        r: usize,
        p: u64,
        #[serde(default = "one")]
        e: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scalars: Option<bool>,
    },
    Tensor {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        scalars: Option<bool>,
    },
}

impl GroupSpec {
    pub fn scalars(n: usize, p: u64) -> GroupSpec {
        GroupSpec::Scalars { n, p, e: 1 }
    }

    pub fn diagonal(n: usize, p: u64) -> GroupSpec {
        GroupSpec::Diagonal {
            n,
            p,
            e: 1,
            scalars: None,
        }
    }

    pub fn diagonal_wreath(n: usize, p: u64) -> GroupSpec {
        GroupSpec::DiagonalWreath {
            n,
            p,
            e: 1,
            scalars: None,
        }
    }

    pub fn sym_natural(m: usize, p: u64) -> GroupSpec {
        GroupSpec::SymNatural {
            m,
            p,
            e: 1,
            scalars: None,
        }
    }

    pub fn alt_natural(m: usize, p: u64) -> GroupSpec {
        GroupSpec::AltNatural {
            m,
            p,
            e: 1,
            scalars: None,
        }
    }

    pub fn deleted_perm(m: usize, p: u64) -> GroupSpec {
        GroupSpec::DeletedPerm {
            m,
            p,
            e: 1,
            alt: false,
            scalars: None,
        }
    }

    pub fn heisenberg(r: usize, p: u64) -> GroupSpec {
        GroupSpec::Heisenberg {
            r,
            p,
            e: 1,
            scalars: None,
        }
    }

    pub fn tensor(left: GroupSpec, right: GroupSpec) -> GroupSpec {
        GroupSpec::Tensor {
            left: Box::new(left),
            right: Box::new(right),
            scalars: None,
        }
    }

    /// Overrides whether `Z` is appended. No effect on `scalars`.
    pub fn with_scalars(mut self, on: bool) -> GroupSpec {
        match &mut self {
            GroupSpec::Scalars { .. } => {}
            GroupSpec::Diagonal { scalars, .. }
            | GroupSpec::DiagonalWreath { scalars, .. }
            | GroupSpec::SymNatural { scalars, .. }
            | GroupSpec::AltNatural { scalars, .. }
            | GroupSpec::DeletedPerm { scalars, .. }
            | GroupSpec::Heisenberg { scalars, .. }
            | GroupSpec::Tensor { scalars, .. } => *scalars = Some(on),
        }
        self
    }

    /// Switches a `deleted_perm` spec to `A_m`.
    pub fn alternating(mut self) -> GroupSpec {
        if let GroupSpec::DeletedPerm { alt, .. } = &mut self {
            *alt = true;
        }
        self
    }

    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Scalars { .. } => "scalars",
            GroupSpec::Diagonal { .. } => "diagonal",
            GroupSpec::DiagonalWreath { .. } => "diagonal_wreath",
            GroupSpec::SymNatural { .. } => "sym_natural",
            GroupSpec::AltNatural { .. } => "alt_natural",
            GroupSpec::DeletedPerm { .. } => "deleted_perm",
            GroupSpec::Heisenberg { .. } => "heisenberg",
            GroupSpec::Tensor { .. } => "tensor",
        }
    }

    fn appends_scalars(&self) -> bool {
        match self {
            GroupSpec::Scalars { .. } => false,
            GroupSpec::Diagonal { scalars, .. }
            | GroupSpec::SymNatural { scalars, .. }
            | GroupSpec::AltNatural { scalars, .. } => scalars.unwrap_or(false),
            GroupSpec::DiagonalWreath { scalars, .. }
            | GroupSpec::DeletedPerm { scalars, .. }
            | GroupSpec::Heisenberg { scalars, .. }
            | GroupSpec::Tensor { scalars, .. } => scalars.unwrap_or(true),
        }
    }

    pub fn field(&self) -> Result<Field> {
        match self {
            GroupSpec::Scalars { p, e, .. }
            | GroupSpec::Diagonal { p, e, .. }
            | GroupSpec::DiagonalWreath { p, e, .. }
            | GroupSpec::SymNatural { p, e, .. }
            | GroupSpec::AltNatural { p, e, .. }
            | GroupSpec::DeletedPerm { p, e, .. }
            | GroupSpec::Heisenberg { p, e, .. } => Field::new(*p, *e),
            GroupSpec::Tensor { left, right, .. } => {
                let (a, b) = (left.field()?, right.field()?);
                if a != b {
                    return Err(Error::FieldMismatch);
                }
                Ok(a)
            }
        }
    }

    /// Dimension of the module the group acts on.
    pub fn dim(&self) -> usize {
        match self {
            GroupSpec::Scalars { n, .. }
            | GroupSpec::Diagonal { n, .. }
            | GroupSpec::DiagonalWreath { n, .. } => *n,
            GroupSpec::SymNatural { m, .. } | GroupSpec::AltNatural { m, .. } => *m,
            GroupSpec::DeletedPerm { m, .. } => m.saturating_sub(1),
            GroupSpec::Heisenberg { r, .. } => *r,
            GroupSpec::Tensor { left, right, .. } => left.dim() * right.dim(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = |p: &u64, e: &u32| p.pow(*e);
        match self {
            GroupSpec::Scalars { n, p, e } => write!(f, "scalars(n={n},q={})", q(p, e))?,
            GroupSpec::Diagonal { n, p, e, .. } => write!(f, "diagonal(n={n},q={})", q(p, e))?,
            GroupSpec::DiagonalWreath { n, p, e, .. } => {
                write!(f, "diagonal_wreath(n={n},q={})", q(p, e))?
            }
            GroupSpec::SymNatural { m, p, e, .. } => write!(f, "sym_natural(m={m},q={})", q(p, e))?,
            GroupSpec::AltNatural { m, p, e, .. } => write!(f, "alt_natural(m={m},q={})", q(p, e))?,
            GroupSpec::DeletedPerm { m, p, e, alt, .. } => write!(
                f,
                "deleted_perm(m={m},q={}{})",
                q(p, e),
                if *alt { ",alt" } else { "" }
            )?,
            GroupSpec::Heisenberg { r, p, e, .. } => write!(f, "heisenberg(r={r},q={})", q(p, e))?,
            GroupSpec::Tensor { left, right, .. } => write!(f, "({left})x({right})")?,
        }
        if self.appends_scalars() {
            write!(f, "+Z")?;
        }
        Ok(())
    }
}

fn coprime_perm_degree(m: usize, field: &Field) -> Result<()> {
    let p = field.characteristic() as usize;
    if p <= m {
        return Err(Error::CoprimalityViolated(format!(
            "characteristic {p} divides {m}!"
        )));
    }
    Ok(())
}

fn cycle(m: usize, points: &[usize]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..m).collect();
    for (k, &x) in points.iter().enumerate() {
        perm[x] = points[(k + 1) % points.len()];
    }
    perm
}

/// Generating permutations (0-based images) for `S_m` or `A_m`.
pub fn permutation_generators(m: usize, alt: bool) -> Vec<Vec<usize>> {
    if m < 2 || (alt && m < 3) {
        return Vec::new();
    }
    let all: Vec<usize> = (0..m).collect();
    if !alt {
        return vec![cycle(m, &[0, 1]), cycle(m, &all)];
    }
    let long = if m % 2 == 1 {
        cycle(m, &all)
    } else {
        cycle(m, &all[1..])
    };
    vec![cycle(m, &[0, 1, 2]), long]
}

/// Matrix of a permutation on the sum-zero submodule in the basis
/// `e_i - e_{i+1}`. Coordinates of a sum-zero vector in that basis are its
/// prefix sums.
pub fn deleted_matrix(field: &Field, perm: &[usize]) -> Matrix {
    let m = perm.len();
    let d = m - 1;
    let mut cols: Vec<Vector> = Vec::with_capacity(d);
    for j in 0..d {
        let mut image = vec![0i64; m];
        image[perm[j]] += 1;
        image[perm[j + 1]] -= 1;
        let mut acc = 0i64;
        let coords: Vector = image[..d]
            .iter()
            .map(|&x| {
                acc += x;
                field.from_int(acc)
            })
            .collect();
        cols.push(coords);
    }
    Matrix::from_fn(field, d, |i, j| cols[j][i])
}

/// Projection of `v ∈ F^m` onto the sum-zero submodule along the constants,
/// in the `e_i - e_{i+1}` basis.
pub fn natural_to_deleted(field: &Field, v: &[Scalar]) -> Result<Vector> {
    let m = v.len();
    if m == 0 {
        return Err(Error::BadParameters("empty vector".into()));
    }
    let m_inv = field
        .inv(field.from_int(m as i64))
        .ok_or_else(|| Error::CoprimalityViolated(format!("characteristic divides m = {m}")))?;
    let sum = v.iter().fold(Scalar::ZERO, |acc, &x| field.add(acc, x));
    let mean = field.mul(sum, m_inv);
    let mut acc = Scalar::ZERO;
    Ok(v[..m - 1]
        .iter()
        .map(|&x| {
            acc = field.add(acc, field.sub(x, mean));
            acc
        })
        .collect())
}

/// Builds the group's generators. The result is not enumerated.
pub fn build(spec: &GroupSpec) -> Result<MatrixGroup> {
    let field = spec.field()?;
    let omega = field.primitive_element();
    let n = spec.dim();
    let mut gens: Vec<Matrix> = match spec {
        GroupSpec::Scalars { n, .. } => {
            if *n == 0 {
                return Err(Error::BadParameters("scalars need n >= 1".into()));
            }
            vec![Matrix::scalar(&field, *n, omega)]
        }
        GroupSpec::Diagonal { n, .. } | GroupSpec::DiagonalWreath { n, .. } => {
            if *n == 0 {
                return Err(Error::BadParameters("diagonal groups need n >= 1".into()));
            }
            let mut gens: Vec<Matrix> = (0..*n)
                .map(|i| {
                    let diag: Vec<Scalar> = (0..*n)
                        .map(|j| if i == j { omega } else { Scalar::ONE })
                        .collect();
                    Matrix::diagonal(&field, &diag)
                })
                .collect();
            if let GroupSpec::DiagonalWreath { .. } = spec {
                if (*n as u64).is_multiple_of(field.characteristic() as u64) {
                    return Err(Error::CoprimalityViolated(format!(
                        "characteristic {} divides n = {n}",
                        field.characteristic()
                    )));
                }
                let all: Vec<usize> = (0..*n).collect();
                gens.push(Matrix::permutation(&field, &cycle(*n, &all)));
            }
            gens
        }
        GroupSpec::SymNatural { m, .. } | GroupSpec::AltNatural { m, .. } => {
            let alt = matches!(spec, GroupSpec::AltNatural { .. });
            if *m == 0 || (alt && *m < 3) {
                return Err(Error::BadParameters(format!("m = {m} too small")));
            }
            coprime_perm_degree(*m, &field)?;
            permutation_generators(*m, alt)
                .iter()
                .map(|perm| Matrix::permutation(&field, perm))
                .collect()
        }
        GroupSpec::DeletedPerm { m, alt, .. } => {
            if *m < 3 {
                return Err(Error::BadParameters(format!(
                    "deleted module needs m >= 3, got {m}"
                )));
            }
            coprime_perm_degree(*m, &field)?;
            permutation_generators(*m, *alt)
                .iter()
                .map(|perm| deleted_matrix(&field, perm))
                .collect()
        }
        GroupSpec::Heisenberg { r, .. } => {
            if !is_prime(*r as u64) {
                return Err(Error::BadParameters(format!("r = {r} is not prime")));
            }
            let q1 = field.order() as u64 - 1;
            if !q1.is_multiple_of(*r as u64) {
                return Err(Error::BadParameters(format!(
                    "r = {r} does not divide q - 1 = {q1}"
                )));
            }
            let root = field.primitive_power(q1 / *r as u64);
            let diag: Vec<Scalar> = (0..*r).map(|k| field.pow(root, k as u64)).collect();
            let shift: Vec<usize> = (0..*r).map(|k| (k + 1) % r).collect();
            vec![
                Matrix::diagonal(&field, &diag),
                Matrix::permutation(&field, &shift),
            ]
        }
        GroupSpec::Tensor { left, right, .. } => {
            let a = build(left)?;
            let b = build(right)?;
            let ia = a.identity();
            let ib = b.identity();
            let mut gens = Vec::new();
            for g in a.generators() {
                gens.push(g.kronecker(&ib)?);
            }
            for h in b.generators() {
                gens.push(ia.kronecker(h)?);
            }
            gens
        }
    };
    if spec.appends_scalars() {
        gens.push(Matrix::scalar(&field, n, omega));
    }
    MatrixGroup::new(&field, n, gens, spec.to_string())
}

/// [`build`] followed by enumeration.
pub fn build_enumerated(spec: &GroupSpec, cap: usize) -> Result<MatrixGroup> {
    build(spec)?.enumerate(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{SupportKind, DEFAULT_ENUMERATION_CAP};
    use itertools::Itertools;

    fn order(spec: &GroupSpec) -> usize {
        build_enumerated(spec, DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .order()
            .unwrap()
    }

    #[test]
    fn orders_of_families() {
        assert_eq!(order(&GroupSpec::scalars(2, 5)), 4);
        assert_eq!(order(&GroupSpec::diagonal(2, 5)), 16);
        assert_eq!(order(&GroupSpec::diagonal_wreath(3, 7)), 648);
        assert_eq!(order(&GroupSpec::sym_natural(3, 7)), 6);
        assert_eq!(order(&GroupSpec::sym_natural(4, 7)), 24);
        assert_eq!(order(&GroupSpec::alt_natural(4, 7)), 12);
        assert_eq!(order(&GroupSpec::alt_natural(5, 7)), 60);
        assert_eq!(
            order(&GroupSpec::deleted_perm(4, 7).with_scalars(false)),
            24
        );
        assert_eq!(order(&GroupSpec::deleted_perm(4, 7)), 144);
        assert_eq!(order(&GroupSpec::heisenberg(3, 7)), 54);
        assert_eq!(order(&GroupSpec::heisenberg(3, 7).with_scalars(false)), 27);
        assert_eq!(order(&GroupSpec::heisenberg(2, 5)), 16);
        let t = GroupSpec::tensor(
            GroupSpec::sym_natural(3, 7).with_scalars(true),
            GroupSpec::heisenberg(3, 7),
        );
        assert_eq!(t.dim(), 9);
        assert_eq!(order(&t), 324);
    }

    #[test]
    fn heisenberg_spectrum() {
        let g = build_enumerated(&GroupSpec::heisenberg(3, 7), 1000).unwrap();
        assert_eq!(g.dim(), 3);
        let els = g.elements().unwrap();
        let ps = g.projective_supports().unwrap();
        for (x, &s) in els.iter().zip(ps) {
            if x.as_scalar().is_none() {
                assert_eq!(s, 2);
            }
        }
        assert_eq!(g.min_supp().unwrap(), Some(2));
    }

    #[test]
    fn heisenberg_commutator_is_central_root() {
        let f = Field::prime(7).unwrap();
        let g = build(&GroupSpec::heisenberg(3, 7).with_scalars(false)).unwrap();
        let gens = g.generators();
        let c = Matrix::commutator(&gens[0], &gens[1]).unwrap();
        let root = f.primitive_power(2);
        assert_eq!(c, Matrix::scalar(&f, 3, root));
        // Derived subgroup of R is generated by that central element.
        assert_eq!(c.order(10), Some(3));
    }

    #[test]
    fn precondition_errors() {
        assert!(matches!(
            build(&GroupSpec::sym_natural(3, 3)),
            Err(Error::CoprimalityViolated(_))
        ));
        assert!(matches!(
            build(&GroupSpec::diagonal_wreath(5, 5)),
            Err(Error::CoprimalityViolated(_))
        ));
        assert!(matches!(
            build(&GroupSpec::heisenberg(3, 5)),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            build(&GroupSpec::heisenberg(4, 5)),
            Err(Error::BadParameters(_))
        ));
        assert_eq!(
            build(&GroupSpec::tensor(
                GroupSpec::scalars(1, 5),
                GroupSpec::scalars(1, 7)
            ))
            .unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn built_groups_are_coprime() {
        let specs = [
            GroupSpec::scalars(3, 5),
            GroupSpec::diagonal(3, 3),
            GroupSpec::diagonal_wreath(2, 3),
            GroupSpec::sym_natural(4, 5),
            GroupSpec::alt_natural(4, 5),
            GroupSpec::deleted_perm(4, 5),
            GroupSpec::deleted_perm(5, 7).alternating(),
            GroupSpec::heisenberg(2, 3),
            GroupSpec::tensor(GroupSpec::heisenberg(2, 3), GroupSpec::diagonal(2, 3)),
        ];
        for s in &specs {
            let g = build_enumerated(s, 100_000).unwrap();
            assert!(g.coprime_check().unwrap(), "{s}");
        }
    }

    #[test]
    fn wreath_contains_diagonal() {
        let d = build_enumerated(&GroupSpec::diagonal(3, 5), 10_000).unwrap();
        let w = build_enumerated(&GroupSpec::diagonal_wreath(3, 5), 10_000).unwrap();
        assert_eq!(w.order().unwrap(), 3 * d.order().unwrap());
        for g in d.elements().unwrap() {
            assert!(w.contains(g).unwrap());
        }
    }

    #[test]
    fn deleted_generators_satisfy_sym_relations() {
        let f = Field::prime(7).unwrap();
        for m in 3..=6 {
            let gens = permutation_generators(m, false);
            let t = deleted_matrix(&f, &gens[0]);
            let c = deleted_matrix(&f, &gens[1]);
            assert_eq!(t.order(100), Some(2));
            assert_eq!(c.order(100), Some(m as u64));
            // (1 2)(1 2 ... m) is an (m-1)-cycle.
            assert_eq!((&t * &c).order(100), Some(m as u64 - 1));
        }
    }

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        // a ∘ b
        b.iter().map(|&x| a[x]).collect()
    }

    #[test]
    fn deleted_matrix_is_a_homomorphism() {
        let f = Field::prime(5).unwrap();
        for a in (0..4).permutations(4) {
            for b in (0..4).permutations(4).step_by(5) {
                let lhs = deleted_matrix(&f, &compose(&a, &b));
                let rhs = &deleted_matrix(&f, &a) * &deleted_matrix(&f, &b);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn natural_to_deleted_is_equivariant() {
        for (m, p) in [(3usize, 7u64), (4, 7), (5, 7), (3, 5)] {
            let f = Field::prime(p).unwrap();
            let vectors: Vec<Vector> = (0..(p as usize).pow(m as u32))
                .step_by(7)
                .map(|mut t| {
                    (0..m)
                        .map(|_| {
                            let x = f.from_int((t % p as usize) as i64);
                            t /= p as usize;
                            x
                        })
                        .collect()
                })
                .collect();
            for perm in (0..m).permutations(m) {
                let nat = Matrix::permutation(&f, &perm);
                let del = deleted_matrix(&f, &perm);
                for v in &vectors {
                    let lhs = natural_to_deleted(&f, &nat.apply(v)).unwrap();
                    let rhs = del.apply(&natural_to_deleted(&f, v).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn natural_to_deleted_special_vectors() {
        let f = Field::prime(7).unwrap();
        let c = vec![f.from_int(4); 3];
        assert_eq!(natural_to_deleted(&f, &c).unwrap(), vec![Scalar::ZERO; 2]);
        // Sum-zero input (1, 2, -3): prefix sums (1, 3).
        let v = vec![f.from_int(1), f.from_int(2), f.from_int(-3)];
        assert_eq!(
            natural_to_deleted(&f, &v).unwrap(),
            vec![f.from_int(1), f.from_int(3)]
        );
        // e1 projects to e1 - (1/3)(1,1,1); prefix sums (2/3, 1/3).
        let e1 = vec![f.from_int(1), f.from_int(0), f.from_int(0)];
        let third = f.inv(f.from_int(3)).unwrap();
        assert_eq!(
            natural_to_deleted(&f, &e1).unwrap(),
            vec![f.mul(f.from_int(2), third), third]
        );
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(
            natural_to_deleted(&f3, &[Scalar::ONE; 3]),
            Err(Error::CoprimalityViolated(_))
        ));
    }

    #[test]
    fn sym_natural_min_supp() {
        let g = build_enumerated(&GroupSpec::sym_natural(5, 11), 1000).unwrap();
        assert_eq!(g.order(), Some(120));
        assert_eq!(g.min_supp().unwrap(), Some(1));
        let spec = g.support_spectrum(SupportKind::Fixed).unwrap();
        assert_eq!(spec.count(1), 10);
    }
}
