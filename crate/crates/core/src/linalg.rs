//! Dense linear algebra over a [`Field`].
//!
//! Matrices act on column vectors; a vector is a plain `Vec<Scalar>`.
//! Kronecker products use left-factor-major index order: row `(i1, i2)` of
//! `A ⊗ B` is row `i1 * dim(B) + i2`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Scalar>,
    field: Field,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>[", self.field)?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Row-reduces `rows` (each of length `ncols`) in place to reduced row echelon
/// form and returns the pivot columns. Zero rows end up at the bottom.
fn rref_in_place(field: &Field, rows: &mut [Vector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

impl Matrix {
    pub fn from_fn(field: &Field, n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix {
            n,
            entries,
            field: field.clone(),
        }
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Scalar>]) -> Result<Matrix> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        if rows.iter().flatten().any(|x| x.value() >= field.order()) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix::from_fn(field, n, |i, j| rows[i][j]))
    }

    /// Convenience constructor from integer entries reduced into the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Result<Matrix> {
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        Matrix::from_rows(field, &rows)
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        Matrix::scalar(field, n, Scalar::ONE)
    }

    pub fn zero(field: &Field, n: usize) -> Matrix {
        Matrix::scalar(field, n, Scalar::ZERO)
    }

    pub fn scalar(field: &Field, n: usize, lambda: Scalar) -> Matrix {
        Matrix::from_fn(field, n, |i, j| if i == j { lambda } else { Scalar::ZERO })
    }

    pub fn diagonal(field: &Field, diag: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, diag.len(), |i, j| {
            if i == j {
                diag[i]
            } else {
                Scalar::ZERO
            }
        })
    }

    /// Permutation matrix sending `e_j` to `e_{perm[j]}` (0-based).
    pub fn permutation(field: &Field, perm: &[usize]) -> Matrix {
        Matrix::from_fn(field, perm.len(), |i, j| {
            if perm[j] == i {
                Scalar::ONE
            } else {
                Scalar::ZERO
            }
        })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let n = self.n;
        let f = &self.field;
        let mut entries = vec![Scalar::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entries[k * n + j];
                    if !b.is_zero() {
                        let e = &mut entries[i * n + j];
                        *e = f.add(*e, f.mul(a, b));
                    }
                }
            }
        }
        Ok(Matrix {
            n,
            entries,
            field: f.clone(),
        })
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let f = &self.field;
        Ok(Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
            field: f.clone(),
        })
    }

    pub fn scale(&self, lambda: Scalar) -> Matrix {
        let f = &self.field;
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|&a| f.mul(a, lambda)).collect(),
            field: f.clone(),
        }
    }

    /// `self - λ·I`.
    pub fn minus_scalar(&self, lambda: Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let e = &mut m.entries[i * self.n + i];
            *e = self.field.sub(*e, lambda);
        }
        m
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        let f = &self.field;
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Whether `self · v == v`, without allocating.
    pub fn fixes(&self, v: &[Scalar]) -> bool {
        let f = &self.field;
        (0..self.n).all(|i| {
            let s = self
                .row(i)
                .iter()
                .zip(v)
                .fold(Scalar::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            s == v[i]
        })
    }

    fn rows(&self) -> Vec<Vector> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        rref_in_place(&self.field, &mut rows, self.n).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// Null space of the matrix, as a subspace of column vectors.
    pub fn kernel(&self) -> Subspace {
        let n = self.n;
        let f = &self.field;
        let mut rows = self.rows();
        let pivots = rref_in_place(f, &mut rows, n);
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::ZERO; n];
            v[free] = Scalar::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rows[r][free]);
            }
            basis.push(v);
        }
        Subspace::from_spanning(f, n, basis)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let f = &self.field;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Scalar::ONE } else { Scalar::ZERO }));
                r
            })
            .collect();
        let pivots = rref_in_place(f, &mut rows, n);
        if pivots.len() < n {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(f, n, |i, j| rows[i][n + j]))
    }

    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (na, nb) = (self.n, other.n);
        let f = &self.field;
        Ok(Matrix::from_fn(f, na * nb, |i, j| {
            let (i1, i2) = (i / nb, i % nb);
            let (j1, j2) = (j / nb, j % nb);
            f.mul(self.get(i1, j1), other.get(i2, j2))
        }))
    }

    fn ensure_invertible(&self) -> Result<()> {
        if self.is_invertible() {
            Ok(())
        } else {
            Err(Error::SingularMatrix)
        }
    }

    /// `ker(M - λ·I)`.
    pub fn fix_space(&self, lambda: Scalar) -> Result<Subspace> {
        self.ensure_invertible()?;
        Ok(self.minus_scalar(lambda).kernel())
    }

    /// Codimension of the fixed space `ker(M - I)`.
    pub fn support(&self) -> Result<usize> {
        self.ensure_invertible()?;
        Ok(self.support_unchecked())
    }

    /// Codimension of the largest eigenspace for an eigenvalue in the base field.
    pub fn projective_support(&self) -> Result<usize> {
        self.ensure_invertible()?;
        Ok(self.projective_support_unchecked())
    }

    pub(crate) fn support_unchecked(&self) -> usize {
        self.minus_scalar(Scalar::ONE).rank()
    }

    pub(crate) fn projective_support_unchecked(&self) -> usize {
        let n = self.n;
        let mut best = 0;
        let mut seen = 0;
        for lambda in self.field.elements().skip(1) {
            if best >= n - seen {
                break;
            }
            let d = n - self.minus_scalar(lambda).rank();
            seen += d;
            best = best.max(d);
        }
        n - best
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar() == Some(Scalar::ONE)
    }

    /// `Some(λ)` when the matrix is `λ·I`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        let lambda = *self.entries.first()?;
        let ok = (0..self.n).all(|i| {
            (0..self.n).all(|j| self.get(i, j) == if i == j { lambda } else { Scalar::ZERO })
        });
        ok.then_some(lambda)
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        let mut result = Matrix::identity(&self.field, self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    /// Multiplicative order, searching up to `limit`.
    pub fn order(&self, limit: u64) -> Option<u64> {
        let mut x = self.clone();
        for k in 1..=limit {
            if x.is_identity() {
                return Some(k);
            }
            x = &x * self;
        }
        None
    }

    /// `[g, h] = g⁻¹ h⁻¹ g h`.
    pub fn commutator(g: &Matrix, h: &Matrix) -> Result<Matrix> {
        let gi = g.inverse()?;
        let hi = h.inverse()?;
        Ok(&(&(&gi * &hi) * g) * h)
    }

    /// Fixture text format: a line `n q`, then `n` rows of `n` scalar values.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.field.order());
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Matrix> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let nums: Vec<u64> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header `{header}`")))
            })
            .collect::<Result<_>>()?;
        let [n, q] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be `n q`, got `{header}`"
            )));
        };
        let field = Field::of_order(q)?;
        let n = n as usize;
        let mut rows = Vec::with_capacity(n);
        for (r, line) in lines.enumerate() {
            let row: Vec<Scalar> = line
                .split_whitespace()
                .map(|t| {
                    let v: u32 = t
                        .parse()
                        .map_err(|_| Error::Parse(format!("row {}: bad entry `{t}`", r + 1)))?;
                    field.element(v)
                })
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rows.len(),
            });
        }
        Matrix::from_rows(&field, &rows)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Panics on field or dimension mismatch; see [`Matrix::try_mul`].
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs)
            .expect("matrix product of incompatible operands")
    }
}

/// A subspace of `F^n`, stored as a basis in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_spanning(field: &Field, ambient: usize, mut vectors: Vec<Vector>) -> Subspace {
        let pivots = rref_in_place(field, &mut vectors, ambient);
        vectors.truncate(pivots.len());
        Subspace {
            field: field.clone(),
            ambient,
            basis: vectors,
            pivots,
        }
    }

    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace::from_spanning(field, ambient, Vec::new())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = w[pc];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    /// Every vector of the subspace (`q^dim` of them).
    pub fn elements(&self) -> impl Iterator<Item = Vector> + '_ {
        let q = self.field.order() as u64;
        let total = q.pow(self.dim() as u32);
        let f = &self.field;
        (0..total).map(move |mut t| {
            let mut v = vec![Scalar::ZERO; self.ambient];
            for row in &self.basis {
                let c = Scalar::from_index((t % q) as u32);
                t /= q;
                if c.is_zero() {
                    continue;
                }
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
            v
        })
    }
}

/// Bijection between `F^n` and `0..q^n`. The first coordinate is the most
/// significant digit, so index order is lexicographic in the scalar order.
#[derive(Clone, Debug)]
pub struct VectorIndexer {
    q: u64,
    n: usize,
    size: u64,
}

impl VectorIndexer {
    pub fn new(field: &Field, n: usize) -> Result<VectorIndexer> {
        let q = field.order() as u64;
        let size = q
            .checked_pow(n as u32)
            .ok_or_else(|| Error::BadParameters(format!("|V| = {q}^{n} overflows")))?;
        Ok(VectorIndexer { q, n, size })
    }

    /// `|V|`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn encode(&self, v: &[Scalar]) -> u64 {
        v.iter().fold(0, |acc, x| acc * self.q + x.value() as u64)
    }

    pub fn decode_into(&self, mut idx: u64, out: &mut [Scalar]) {
        for slot in out.iter_mut().rev() {
            *slot = Scalar::from_index((idx % self.q) as u32);
            idx /= self.q;
        }
    }

    pub fn decode(&self, idx: u64) -> Vector {
        let mut v = vec![Scalar::ZERO; self.n];
        self.decode_into(idx, &mut v);
        v
    }
}
