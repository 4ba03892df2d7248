//! Matrix groups given by generators, with optional full enumeration.
//!
//! Every exact query (orders, spectra, bases) needs the enumeration; the
//! engine refuses with [`Error::NotEnumerated`] rather than sampling.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Vector};

pub const DEFAULT_ENUMERATION_CAP: usize = 2_000_000;

/// Canonical byte string of a matrix: row-major scalar values, fixed width.
pub fn canonical_bytes(m: &Matrix) -> Vec<u8> {
    let q = m.field().order();
    let width = if q <= 1 << 8 {
        1
    } else if q <= 1 << 16 {
        2
    } else {
        4
    };
    let mut out = Vec::with_capacity(m.entries().len() * width);
    for x in m.entries() {
        out.extend_from_slice(&x.value().to_le_bytes()[..width]);
    }
    out
}

struct Enumeration {
    elements: Vec<Matrix>,
    index: HashMap<Vec<u8>, usize>,
    supports: OnceLock<Vec<usize>>,
    projective: OnceLock<Vec<usize>>,
    fixer_order: OnceLock<Vec<usize>>,
}

#[derive(Clone)]
pub struct MatrixGroup {
    field: Field,
    dim: usize,
    generators: Vec<Matrix>,
    label: String,
    enumeration: Option<Arc<Enumeration>>,
}

impl fmt::Debug for MatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixGroup")
            .field("label", &self.label)
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("generators", &self.generators.len())
            .field("order", &self.order())
            .finish()
    }
}

/// Which notion of support a spectrum records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportKind {
    /// `n - dim ker(g - 1)`.
    Fixed,
    /// `n - max_λ dim ker(g - λ)` over nonzero `λ` in the base field.
    Projective,
}

impl fmt::Display for SupportKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SupportKind::Fixed => "fixed",
            SupportKind::Projective => "projective",
        })
    }
}

/// Histogram of supports over all elements of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSpectrum {
    pub kind: SupportKind,
    pub counts: BTreeMap<usize, u64>,
}

impl SupportSpectrum {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, support: usize) -> u64 {
        self.counts.get(&support).copied().unwrap_or(0)
    }

    /// Lines `support,count,kind`.
    pub fn csv_rows(&self) -> Vec<String> {
        self.counts
            .iter()
            .map(|(s, c)| format!("{s},{c},{}", self.kind))
            .collect()
    }
}

impl MatrixGroup {
    pub fn new(
        field: &Field,
        dim: usize,
        generators: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<MatrixGroup> {
        for g in &generators {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
            if !g.is_invertible() {
                return Err(Error::SingularMatrix);
            }
        }
        Ok(MatrixGroup {
            field: field.clone(),
            dim,
            generators,
            label: label.into(),
            enumeration: None,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> MatrixGroup {
        self.label = label.into();
        self
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(&self.field, self.dim)
    }

    /// Breadth-first closure of the generators under right multiplication.
    /// Element order is deterministic given the generator order.
    pub fn enumerate(&self, cap: usize) -> Result<MatrixGroup> {
        if self.enumeration.is_some() {
            return Ok(self.clone());
        }
        let id = self.identity();
        let mut index = HashMap::new();
        index.insert(canonical_bytes(&id), 0);
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for g in &self.generators {
                let h = &elements[i] * g;
                let key = canonical_bytes(&h);
                if index.contains_key(&key) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(key, elements.len());
                elements.push(h);
            }
            i += 1;
        }
        let mut out = self.clone();
        out.enumeration = Some(Arc::new(Enumeration {
            elements,
            index,
            supports: OnceLock::new(),
            projective: OnceLock::new(),
            fixer_order: OnceLock::new(),
        }));
        Ok(out)
    }

    pub fn is_enumerated(&self) -> bool {
        self.enumeration.is_some()
    }

    fn enumeration(&self) -> Result<&Enumeration> {
        self.enumeration
            .as_deref()
            .ok_or_else(|| Error::NotEnumerated(self.label.clone()))
    }

    /// All elements; the identity is always first.
    pub fn elements(&self) -> Result<&[Matrix]> {
        Ok(&self.enumeration()?.elements)
    }

    pub fn order(&self) -> Option<usize> {
        self.enumeration.as_ref().map(|e| e.elements.len())
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool> {
        Ok(self.enumeration()?.index.contains_key(&canonical_bytes(m)))
    }

    pub fn index_of(&self, m: &Matrix) -> Result<Option<usize>> {
        Ok(self.enumeration()?.index.get(&canonical_bytes(m)).copied())
    }

    /// Whether the characteristic does not divide `|G|`.
    pub fn coprime_check(&self) -> Result<bool> {
        let order = self.enumeration()?.elements.len() as u64;
        Ok(!order.is_multiple_of(self.field.characteristic() as u64))
    }

    /// Whether every nonzero scalar matrix lies in the group.
    pub fn contains_scalars(&self) -> Result<bool> {
        let omega = Matrix::scalar(&self.field, self.dim, self.field.primitive_element());
        self.contains(&omega)
    }

    /// Fixed-space supports, indexed like [`MatrixGroup::elements`].
    pub fn supports(&self) -> Result<&[usize]> {
        let e = self.enumeration()?;
        Ok(e.supports
            .get_or_init(|| e.elements.iter().map(Matrix::support_unchecked).collect()))
    }

    /// Projective supports, indexed like [`MatrixGroup::elements`].
    pub fn projective_supports(&self) -> Result<&[usize]> {
        let e = self.enumeration()?;
        Ok(e.projective.get_or_init(|| {
            e.elements
                .iter()
                .map(Matrix::projective_support_unchecked)
                .collect()
        }))
    }

    /// Indices of non-identity elements, smallest support first.
    pub fn fixer_order(&self) -> Result<&[usize]> {
        let supports = self.supports()?;
        let e = self.enumeration()?;
        Ok(e.fixer_order.get_or_init(|| {
            let mut idx: Vec<usize> = (1..e.elements.len()).collect();
            idx.sort_by_key(|&i| (supports[i], i));
            idx
        }))
    }

    pub fn support_spectrum(&self, kind: SupportKind) -> Result<SupportSpectrum> {
        let values = match kind {
            SupportKind::Fixed => self.supports()?,
            SupportKind::Projective => self.projective_supports()?,
        };
        let mut counts = BTreeMap::new();
        for &s in values {
            *counts.entry(s).or_insert(0) += 1;
        }
        Ok(SupportSpectrum { kind, counts })
    }

    /// Least fixed-space support over non-identity elements; `None` for the
    /// trivial group.
    pub fn min_supp(&self) -> Result<Option<usize>> {
        Ok(self.supports()?.iter().skip(1).copied().min())
    }

    /// Least projective support over non-scalar elements; `None` when every
    /// element is scalar.
    pub fn min_supp_projective(&self) -> Result<Option<usize>> {
        let elements = self.elements()?;
        let ps = self.projective_supports()?;
        Ok(elements
            .iter()
            .zip(ps)
            .filter(|(g, _)| g.as_scalar().is_none())
            .map(|(_, &s)| s)
            .min())
    }

    /// True iff every non-identity element moves some vector of `tuple`.
    pub fn is_base(&self, tuple: &[Vector]) -> Result<bool> {
        for v in tuple {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let elements = self.elements()?;
        Ok(self
            .fixer_order()?
            .iter()
            .all(|&i| tuple.iter().any(|v| !elements[i].fixes(v))))
    }

    /// A random element: uniform when enumerated, otherwise from a fresh
    /// product-replacement walk (heuristic, not for exact counts).
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix {
        match &self.enumeration {
            Some(e) => e.elements[rng.random_range(0..e.elements.len())].clone(),
            None => ProductReplacement::new(self, rng).next_element(rng),
        }
    }

    /// Group dump: a header `label n q order` and one matrix per line,
    /// row-major scalar values separated by spaces.
    pub fn to_dump(&self) -> Result<String> {
        let elements = self.elements()?;
        let mut s = format!(
            "{} {} {} {}\n",
            self.label.replace(char::is_whitespace, "_"),
            self.dim,
            self.field.order(),
            elements.len()
        );
        for g in elements {
            let vals: Vec<String> = g.entries().iter().map(|x| x.to_string()).collect();
            s.push_str(&vals.join(" "));
            s.push('\n');
        }
        Ok(s)
    }

    /// Parses a group dump; the listed elements become both the generators
    /// and the enumeration, which is re-derived and checked against the count.
    pub fn from_dump(text: &str) -> Result<MatrixGroup> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty group dump".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [label, n, q, order] = fields[..] else {
            return Err(Error::Parse(format!("bad dump header `{header}`")));
        };
        let parse = |t: &str| {
            t.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number `{t}` in dump header")))
        };
        let (n, q, order) = (parse(n)? as usize, parse(q)?, parse(order)? as usize);
        let field = Field::of_order(q)?;
        let mut gens = Vec::new();
        for line in lines {
            let vals = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad entry `{t}`")))
                        .and_then(|v| field.element(v))
                })
                .collect::<Result<Vec<Scalar>>>()?;
            if vals.len() != n * n {
                return Err(Error::DimensionMismatch {
                    expected: n * n,
                    got: vals.len(),
                });
            }
            gens.push(Matrix::from_fn(&field, n, |i, j| vals[i * n + j]));
        }
        let g = MatrixGroup::new(&field, n, gens, label)?.enumerate(order.max(1))?;
        if g.order() != Some(order) {
            return Err(Error::Parse(format!(
                "dump lists {order} elements but they generate {:?}",
                g.order()
            )));
        }
        Ok(g)
    }
}

/// Product-replacement random walk: 10 slots seeded with the generators,
/// `50 · #generators` burn-in steps, one multiplication per draw.
pub struct ProductReplacement {
    slots: Vec<Matrix>,
}

impl ProductReplacement {
    pub const SLOTS: usize = 10;
    pub const BURN_IN_PER_GENERATOR: usize = 50;

    pub fn new<R: Rng + ?Sized>(group: &MatrixGroup, rng: &mut R) -> ProductReplacement {
        let gens = group.generators();
        let slots = if gens.is_empty() {
            vec![group.identity(); Self::SLOTS]
        } else {
            (0..Self::SLOTS)
                .map(|i| gens[i % gens.len()].clone())
                .collect()
        };
        let mut pr = ProductReplacement { slots };
        for _ in 0..Self::BURN_IN_PER_GENERATOR * gens.len() {
            pr.next_element(rng);
        }
        pr
    }

    pub fn next_element<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Matrix {
        let n = self.slots.len();
        let i = rng.random_range(0..n);
        let j = (i + rng.random_range(1..n)) % n;
        let next = if rng.random_bool(0.5) {
            &self.slots[i] * &self.slots[j]
        } else {
            &self.slots[j] * &self.slots[i]
        };
        self.slots[i] = next.clone();
        next
    }
}
