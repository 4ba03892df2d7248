use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{MatrixGroup, SupportKind, SupportSpectrum};

/// `q^-e` for any integer `e`.
fn q_pow_neg(q: u64, e: i64) -> BigRational {
    let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::new(BigInt::one(), base)
    } else {
        BigRational::from_integer(base)
    }
}

/// `1 - Σ_{g≠1} q^(-c·Supp(g))` from a fixed-space spectrum.
pub fn union_bound(spectrum: &SupportSpectrum, q: u64, c: u32) -> Result<BigRational> {
    if spectrum.kind != SupportKind::Fixed {
        return Err(Error::BadParameters(
            "union bound needs the fixed-space spectrum".into(),
        ));
    }
    let mut sum = BigRational::zero();
    for (&s, &count) in &spectrum.counts {
        // Only the identity has support 0.
        let count = if s == 0 { count - 1 } else { count };
        if count > 0 {
            sum += q_pow_neg(q, c as i64 * s as i64) * BigInt::from(count);
        }
    }
    Ok(BigRational::one() - sum)
}

/// `1 - |G|·q^(-c·MinSupp)`; 1 for the trivial group.
pub fn minsupp_bound(order: usize, min_supp: Option<usize>, q: u64, c: u32) -> BigRational {
    match min_supp {
        None => BigRational::one(),
        Some(s) => BigRational::one() - q_pow_neg(q, c as i64 * s as i64) * BigInt::from(order),
    }
}

fn check_mr(mr: f64) -> Result<()> {
    if !(0.0..1.0).contains(&mr) {
        return Err(Error::BadParameters(format!("mr = {mr} outside [0, 1)")));
    }
    Ok(())
}

/// `1 - |V|^-(c(1-mr)/2 - 2)`.
pub fn mr_bound(volume: f64, mr: f64, c: u32) -> Result<f64> {
    check_mr(mr)?;
    let exponent = c as f64 * (1.0 - mr) / 2.0 - 2.0;
    Ok(1.0 - (-exponent * volume.ln()).exp())
}

/// Smallest `c` the mr bound asks for: `(4 + 2ε) / (1 - mr)`.
pub fn min_c(mr: &BigRational, eps: &BigRational) -> Result<BigRational> {
    if mr.is_negative() || *mr >= BigRational::one() {
        return Err(Error::BadParameters(format!("mr = {mr} outside [0, 1)")));
    }
    Ok((BigRational::from_integer(4.into()) + eps * BigInt::from(2)) / (BigRational::one() - mr))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClosedFormCase {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "2c")]
    TwoC,
}

impl ClosedFormCase {
    pub const ALL: [ClosedFormCase; 4] = [
        ClosedFormCase::One,
        ClosedFormCase::TwoA,
        ClosedFormCase::TwoB,
        ClosedFormCase::TwoC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedFormCase::One => "1",
            ClosedFormCase::TwoA => "2a",
            ClosedFormCase::TwoB => "2b",
            ClosedFormCase::TwoC => "2c",
        }
    }
}

impl std::str::FromStr for ClosedFormCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClosedFormCase> {
        ClosedFormCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown case `{s}`; expected 1, 2a, 2b or 2c")))
    }
}

/// Inputs of the four closed-form bounds. `n` and `dim_v` are both the
/// dimension of `V`; they are kept apart to mirror the printed formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormParams {
    pub q: u64,
    pub n: u64,
    pub dim_v: u64,
    pub c: u32,
}

impl ClosedFormParams {
    pub fn new(q: u64, dim: u64, c: u32) -> ClosedFormParams {
        ClosedFormParams {
            q,
            n: dim,
            dim_v: dim,
            c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClosedFormBound {
    pub case: ClosedFormCase,
    pub value: f64,
    /// Present when every exponent is an integer.
    #[serde(skip)]
    pub exact: Option<BigRational>,
    /// The bound is `<= 0` and says nothing.
    pub vacuous: bool,
    /// `c >= 11`.
    pub in_regime: bool,
}

fn exact_sqrt(x: u64) -> Option<i64> {
    let s = x.sqrt();
    (s * s == x).then_some(s as i64)
}

/// `num / den` when it is an integer.
fn exact_div(num: i64, den: i64) -> Option<i64> {
    (num % den == 0).then_some(num / den)
}

pub fn closed_form_bound(
    case: ClosedFormCase,
    params: &ClosedFormParams,
) -> Result<ClosedFormBound> {
    let ClosedFormParams { q, n, dim_v, c } = *params;
    if q < 2 || n == 0 || dim_v == 0 {
        return Err(Error::BadParameters(format!(
            "q = {q}, n = {n}, dim V = {dim_v}"
        )));
    }
    let (qf, cf) = (q as f64, c as f64);
    let ci = c as i64;
    let one = BigRational::one();
    let three = BigInt::from(3);
    let (value, exact) = match case {
        ClosedFormCase::One => {
            let e = (cf / 2.0 - 5.0) * (n as f64).sqrt();
            let exact = exact_sqrt(n)
                .and_then(|s| exact_div((ci - 10) * s, 2))
                .map(|e| &one - q_pow_neg(q, e) * &three);
            (1.0 - 3.0 * qf.powf(-e), exact)
        }
        ClosedFormCase::TwoA => {
            let e1 = (cf - 4.0) * (dim_v as f64).sqrt();
            let e2 = dim_v as f64 * (cf - 10.0) / 80.0;
            let exact = exact_sqrt(dim_v).and_then(|s| {
                let e2 = exact_div(dim_v as i64 * (ci - 10), 80)?;
                Some(&one - q_pow_neg(q, (ci - 4) * s) - q_pow_neg(q, e2) * BigInt::from(2))
            });
            (1.0 - (qf.powf(-e1) + 2.0 * qf.powf(-e2)), exact)
        }
        ClosedFormCase::TwoB => {
            let e = (cf - 10.0) / 16.0 * (dim_v as f64).sqrt();
            let exact = exact_sqrt(dim_v)
                .and_then(|s| exact_div((ci - 10) * s, 16))
                .map(|e| &one - q_pow_neg(q, e) * &three);
            (1.0 - 3.0 * qf.powf(-e), exact)
        }
        ClosedFormCase::TwoC => {
            let exact = &one - q_pow_neg(n, ci - 2) * &three;
            (1.0 - 3.0 * (n as f64).powf(-(cf - 2.0)), Some(exact))
        }
    };
    let value = exact.as_ref().and_then(|r| r.to_f64()).unwrap_or(value);
    let vacuous = match &exact {
        Some(r) => !r.is_positive(),
        None => value <= 0.0,
    };
    Ok(ClosedFormBound {
        case,
        value,
        exact,
        vacuous,
        in_regime: c >= 11,
    })
}

/// All four cases at the same parameters.
pub fn closed_form_bounds(params: &ClosedFormParams) -> Result<Vec<ClosedFormBound>> {
    ClosedFormCase::ALL
        .into_iter()
        .map(|case| closed_form_bound(case, params))
        .collect()
}

/// Every lower bound for one `(G, c)`.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub q: u64,
    pub dim: usize,
    pub c: u32,
    pub order: usize,
    pub min_supp: Option<usize>,
    pub mr: Option<BigRational>,
    pub spectrum: SupportSpectrum,
    pub union_bound: BigRational,
    pub minsupp_bound: BigRational,
    /// Present when `mr` was supplied.
    pub mr_bound: Option<f64>,
    pub closed_forms: Vec<ClosedFormBound>,
}

pub fn bound_report(group: &MatrixGroup, c: u32, mr: Option<BigRational>) -> Result<BoundReport> {
    let q = group.field().order() as u64;
    let dim = group.dim();
    let order = group.elements()?.len();
    let spectrum = group.support_spectrum(SupportKind::Fixed)?;
    let min_supp = group.min_supp()?;
    let mr_bound = match &mr {
        Some(r) => {
            let volume = (q as f64).powi(dim as i32);
            Some(mr_bound(volume, r.to_f64().unwrap_or(f64::NAN), c)?)
        }
        None => None,
    };
    Ok(BoundReport {
        q,
        dim,
        c,
        order,
        min_supp,
        union_bound: union_bound(&spectrum, q, c)?,
        minsupp_bound: minsupp_bound(order, min_supp, q, c),
        mr,
        mr_bound,
        closed_forms: closed_form_bounds(&ClosedFormParams::new(q, dim as u64, c))?,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_enumerated, GroupSpec};
    use crate::group::DEFAULT_ENUMERATION_CAP;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn group(spec: GroupSpec) -> MatrixGroup {
        build_enumerated(&spec, DEFAULT_ENUMERATION_CAP).unwrap()
    }

    #[test]
    fn union_bound_examples() {
        let g = group(GroupSpec::scalars(1, 5));
        let r = bound_report(&g, 1, None).unwrap();
        assert_eq!(r.union_bound, rat(2, 5));
        assert_eq!(r.minsupp_bound, rat(1, 5));
        let trivial = group(GroupSpec::sym_natural(1, 5));
        let r = bound_report(&trivial, 1, None).unwrap();
        assert_eq!(r.union_bound, rat(1, 1));
        assert_eq!(r.minsupp_bound, rat(1, 1));
    }

    #[test]
    fn union_bound_needs_fixed_spectrum() {
        let g = group(GroupSpec::scalars(1, 5));
        let s = g.support_spectrum(SupportKind::Projective).unwrap();
        assert!(union_bound(&s, 5, 1).is_err());
    }

    #[test]
    fn min_c_example() {
        assert_eq!(min_c(&rat(1, 2), &rat(1, 1)).unwrap(), rat(12, 1));
        assert!(min_c(&rat(1, 1), &rat(1, 1)).is_err());
        assert!(min_c(&rat(-1, 3), &rat(1, 1)).is_err());
    }

    #[test]
    fn mr_bound_values() {
        // c = 12, mr = 1/2: exponent 1, so 1 - 1/|V|.
        assert!((mr_bound(625.0, 0.5, 12).unwrap() - (1.0 - 1.0 / 625.0)).abs() < 1e-15);
        assert!(mr_bound(625.0, 1.0, 12).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let b = closed_form_bound(ClosedFormCase::One, &ClosedFormParams::new(5, 16, 12)).unwrap();
        assert_eq!(b.exact, Some(rat(622, 625)));
        assert!((b.value - 0.9952).abs() < 1e-12);
        assert!(!b.vacuous && b.in_regime);

        let b =
            closed_form_bound(ClosedFormCase::TwoC, &ClosedFormParams::new(5, 100, 12)).unwrap();
        let expect = BigRational::one() - BigRational::new(3.into(), BigInt::from(100).pow(10));
        assert_eq!(b.exact, Some(expect));

        let b = closed_form_bound(ClosedFormCase::One, &ClosedFormParams::new(2, 4, 11)).unwrap();
        assert_eq!(b.exact, Some(rat(-1, 2)));
        assert!(b.vacuous);
    }

    #[test]
    fn irrational_exponents_are_float_only() {
        let b = closed_form_bound(ClosedFormCase::TwoB, &ClosedFormParams::new(7, 3, 20)).unwrap();
        assert!(b.exact.is_none());
        let e = 10.0 / 16.0 * 3f64.sqrt();
        assert!((b.value - (1.0 - 3.0 * 7f64.powf(-e))).abs() < 1e-15);
        let b = closed_form_bound(ClosedFormCase::TwoA, &ClosedFormParams::new(3, 16, 30)).unwrap();
        // sqrt(16) = 4, 16·20/80 = 4.
        assert_eq!(
            b.exact,
            Some(BigRational::one() - q_pow_neg(3, 104) - q_pow_neg(3, 4) * BigInt::from(2))
        );
        assert!(
            !closed_form_bound(ClosedFormCase::TwoA, &ClosedFormParams::new(3, 16, 3))
                .unwrap()
                .in_regime
        );
    }

    #[test]
    fn case_names_round_trip() {
        for c in ClosedFormCase::ALL {
            assert_eq!(c.name().parse::<ClosedFormCase>().unwrap(), c);
        }
        assert!("3".parse::<ClosedFormCase>().is_err());
    }
}
