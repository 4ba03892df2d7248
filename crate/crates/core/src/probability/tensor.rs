use crate::error::{Error, Result};
use crate::group::MatrixGroup;
use crate::linalg::Matrix;

/// The group generated by `g ⊗ I` and `I ⊗ h` over the factors' generators.
pub fn tensor_of(left: &MatrixGroup, right: &MatrixGroup) -> Result<MatrixGroup> {
    if left.field() != right.field() {
        return Err(Error::FieldMismatch);
    }
    let field = left.field();
    let il = Matrix::identity(field, left.dim());
    let ir = Matrix::identity(field, right.dim());
    let mut gens = Vec::new();
    for g in left.generators() {
        gens.push(g.kronecker(&ir)?);
    }
    for h in right.generators() {
        gens.push(il.kronecker(h)?);
    }
    MatrixGroup::new(
        field,
        left.dim() * right.dim(),
        gens,
        format!("{}⊗{}", left.label(), right.label()),
    )
}

/// Both sides of the minimal-support formula for a tensor product, using
/// projective supports throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorLemmaReport {
    pub label: String,
    pub dim: usize,
    pub factor_dims: (usize, usize),
    pub order: usize,
    /// `None` when the factor is all scalars.
    pub factor_min_supp: (Option<usize>, Option<usize>),
    /// `min_i MinSupp(G_i)·dim V / dim V_i`.
    pub formula: Option<usize>,
    pub actual: Option<usize>,
}

impl TensorLemmaReport {
    pub fn min_branch(&self) -> bool {
        self.formula.is_some() && self.formula == self.actual
    }

    pub fn half_branch(&self) -> bool {
        self.actual.is_none_or(|s| 2 * s >= self.dim)
    }

    pub fn holds(&self) -> bool {
        self.min_branch() || self.half_branch()
    }
}

/// Enumerates `G_1 ⊗ G_2` and compares its minimal projective support with
/// the factor formula. Both factors must be enumerated and contain `Z`.
pub fn verify_tensor_lemma(
    left: &MatrixGroup,
    right: &MatrixGroup,
    cap: usize,
) -> Result<TensorLemmaReport> {
    for g in [left, right] {
        if !g.contains_scalars()? {
            return Err(Error::BadParameters(format!(
                "{} does not contain the scalar group",
                g.label()
            )));
        }
    }
    let product = tensor_of(left, right)?.enumerate(cap)?;
    let dim = product.dim();
    let (a, b) = (left.min_supp_projective()?, right.min_supp_projective()?);
    let formula = [(a, left.dim()), (b, right.dim())]
        .into_iter()
        .filter_map(|(s, d)| s.map(|s| s * dim / d))
        .min();
    Ok(TensorLemmaReport {
        label: product.label().to_string(),
        dim,
        factor_dims: (left.dim(), right.dim()),
        order: product.elements()?.len(),
        factor_min_supp: (a, b),
        formula,
        actual: product.min_supp_projective()?,
    })
}
