use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use super::murnaghan::{hook_degree, CharacterTable, MnEvaluator};
use super::partition::{partitions, CycleType, Partition};
use super::CharValue;
use crate::error::{Error, Result};

/// Largest `m` accepted by [`verify_threecycle`].
pub const MAX_THREECYCLE_ORDER: usize = 22;
/// Largest `m` for which full character tables are built.
pub const MAX_MR_ORDER: usize = 12;

/// One row of the small-degree table: a shape family `(m - k, μ)` with its
/// computed degree and 3-cycle value next to the closed-form polynomials.
#[derive(Clone, Debug)]
pub struct SmallDegreeRow {
    pub label: &'static str,
    pub partition: Partition,
    pub degree: CharValue,
    pub value_at_3cycle: CharValue,
    pub closed_degree: CharValue,
    pub closed_value: CharValue,
}

impl SmallDegreeRow {
    pub fn matches(&self) -> bool {
        self.degree == self.closed_degree && self.value_at_3cycle == self.closed_value
    }
}

/// The seven shapes with smallest degree for `m >= 15`, with degree and
/// value at a 3-cycle computed by hook lengths and Murnaghan–Nakayama.
pub fn small_degree_table(m: usize) -> Result<Vec<SmallDegreeRow>> {
    if !(15..=super::MAX_PARTITION_ORDER).contains(&m) {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            range: "15..=40",
        });
    }
    let mi = m as i128;
    // (label, tail below the first row, closed degree, closed value at (123))
    let rows: [(&'static str, &[usize], i128, i128); 7] = [
        ("(m)", &[], 1, 1),
        ("(m-1,1)", &[1], mi - 1, mi - 4),
        ("(m-2,2)", &[2], mi * (mi - 3) / 2, (mi - 3) * (mi - 6) / 2),
        (
            "(m-2,1,1)",
            &[1, 1],
            (mi - 1) * (mi - 2) / 2,
            (mi - 4) * (mi - 5) / 2,
        ),
        (
            "(m-3,3)",
            &[3],
            mi * (mi - 1) * (mi - 5) / 6,
            (mi - 3) * (mi - 4) * (mi - 8) / 6 + 1,
        ),
        (
            "(m-3,2,1)",
            &[2, 1],
            mi * (mi - 2) * (mi - 4) / 3,
            (mi - 3) * (mi - 5) * (mi - 7) / 3 - 1,
        ),
        (
            "(m-3,1,1,1)",
            &[1, 1, 1],
            (mi - 1) * (mi - 2) * (mi - 3) / 6,
            (mi - 4) * (mi - 5) * (mi - 6) / 6 + 1,
        ),
    ];
    let three = CycleType::three_cycle(m)?;
    let mut eval = MnEvaluator::new();
    rows.iter()
        .map(|&(label, tail, cd, cv)| {
            let k: usize = tail.iter().sum();
            let mut parts = vec![m - k];
            parts.extend_from_slice(tail);
            let partition = Partition::new(parts)?;
            Ok(SmallDegreeRow {
                label,
                degree: hook_degree(&partition),
                value_at_3cycle: eval.value(&partition, &three)?,
                closed_degree: BigInt::from(cd),
                closed_value: BigInt::from(cv),
                partition,
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ThreeCycleRow {
    pub partition: Partition,
    pub degree: CharValue,
    pub value_at_3cycle: CharValue,
    /// `χ(1) - χ((123)) - χ(1)/(m-1)`; nonnegative when the inequality holds.
    pub slack: BigRational,
}

#[derive(Clone, Debug)]
pub struct ThreeCycleReport {
    pub m: usize,
    pub rows: Vec<ThreeCycleRow>,
    pub violations: Vec<Partition>,
    pub min_slack: Option<BigRational>,
    pub min_slack_at: Option<Partition>,
}

impl ThreeCycleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `χ^λ(1) - χ^λ((123)) >= χ^λ(1)/(m-1)` for every partition of `m`
/// other than `(m)` and `(1^m)`.
pub fn verify_threecycle(m: usize) -> Result<ThreeCycleReport> {
    if !(3..=MAX_THREECYCLE_ORDER).contains(&m) {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            range: "3..=22",
        });
    }
    let three = CycleType::three_cycle(m)?;
    let trivial = Partition::trivial(m);
    let sign = Partition::sign(m);
    let candidates: Vec<Partition> = partitions(m)?
        .into_iter()
        .filter(|l| *l != trivial && *l != sign)
        .collect();
    let denom = BigInt::from(m as u64 - 1);
    let rows = candidates
        .into_par_iter()
        .map_init(MnEvaluator::new, |eval, lambda| {
            let degree = hook_degree(&lambda);
            let value = eval.value(&lambda, &three)?;
            let slack = BigRational::from_integer(&degree - &value)
                - BigRational::new(degree.clone(), denom.clone());
            Ok(ThreeCycleRow {
                partition: lambda,
                degree,
                value_at_3cycle: value,
                slack,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let violations = rows
        .iter()
        .filter(|r| r.slack.is_negative())
        .map(|r| r.partition.clone())
        .collect();
    let min_row = rows.iter().min_by(|a, b| a.slack.cmp(&b.slack));
    Ok(ThreeCycleReport {
        m,
        min_slack: min_row.map(|r| r.slack.clone()),
        min_slack_at: min_row.map(|r| r.partition.clone()),
        rows,
        violations,
    })
}

/// `|χ^λ(ρ)| / χ^λ(1)`, or `None` when `χ^λ` is linear or `ρ` lies in `Z(χ^λ)`.
pub fn ratio_at(lambda: &Partition, rho: &CycleType) -> Result<Option<BigRational>> {
    let degree = hook_degree(lambda);
    if degree == BigInt::from(1) {
        return Ok(None);
    }
    let value = MnEvaluator::new().value(lambda, rho)?.abs();
    if value == degree {
        return Ok(None);
    }
    Ok(Some(BigRational::new(value, degree)))
}

#[derive(Clone, Debug)]
pub struct MrReport {
    pub m: usize,
    pub mr: BigRational,
    pub character: Partition,
    pub class: CycleType,
}

/// Maximal character ratio of `S_m` from the full Murnaghan–Nakayama table.
/// `Z(χ)` is the set of classes with `|χ(ρ)| = χ(1)`.
pub fn mr_via_table(m: usize) -> Result<MrReport> {
    if !(3..=MAX_MR_ORDER).contains(&m) {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            range: "3..=12",
        });
    }
    let table = CharacterTable::new(m)?;
    let mut best: Option<(BigRational, usize, usize)> = None;
    for i in 0..table.characters().len() {
        let degree = table.degree(i);
        if *degree == BigInt::from(1) {
            continue;
        }
        for j in 0..table.classes().len() {
            let v = table.value(i, j).abs();
            if v == *degree {
                continue;
            }
            let r = BigRational::new(v, degree.clone());
            if best.as_ref().is_none_or(|(b, _, _)| r > *b) {
                best = Some((r, i, j));
            }
        }
    }
    let (mr, i, j) = best.expect("S_m has a non-linear character for m >= 3");
    Ok(MrReport {
        m,
        mr,
        character: table.characters()[i].clone(),
        class: table.classes()[j].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_degree_m15_spot_values() {
        let rows = small_degree_table(15).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[0].degree, BigInt::from(1));
        assert_eq!(rows[0].value_at_3cycle, BigInt::from(1));
        assert_eq!(rows[3].label, "(m-2,1,1)");
        assert_eq!(rows[3].degree, BigInt::from(91));
        assert_eq!(rows[5].label, "(m-3,2,1)");
        assert_eq!(rows[5].value_at_3cycle, BigInt::from(319));
        assert!(rows.iter().all(SmallDegreeRow::matches));
        assert!(small_degree_table(14).is_err());
    }

    #[test]
    fn threecycle_m4_by_hand() {
        // (3,1): 3 vs 0; (2,2): 2 vs -1; (2,1,1): 3 vs 0.
        let r = verify_threecycle(4).unwrap();
        assert_eq!(r.rows.len(), 3);
        assert!(r.passed());
        let by_shape: Vec<(String, i64, i64)> = r
            .rows
            .iter()
            .map(|row| {
                (
                    row.partition.to_string(),
                    i64::try_from(&row.degree).unwrap(),
                    i64::try_from(&row.value_at_3cycle).unwrap(),
                )
            })
            .collect();
        assert_eq!(
            by_shape,
            vec![
                ("(3,1)".to_string(), 3, 0),
                ("(2,2)".to_string(), 2, -1),
                ("(2,1,1)".to_string(), 3, 0)
            ]
        );
        assert_eq!(r.min_slack, Some(rat(2, 1)));
    }

    #[test]
    fn threecycle_excludes_exceptions() {
        let r = verify_threecycle(15).unwrap();
        assert!(r.passed());
        assert!(r
            .rows
            .iter()
            .all(|row| row.partition != Partition::trivial(15)
                && row.partition != Partition::sign(15)));
        assert!(verify_threecycle(2).is_err());
        assert!(verify_threecycle(23).is_err());
    }

    #[test]
    fn mr_small_symmetric_groups() {
        let r3 = mr_via_table(3).unwrap();
        assert_eq!(r3.mr, rat(1, 2));
        let r5 = mr_via_table(5).unwrap();
        assert_eq!(r5.mr, rat(1, 2));
        assert_eq!(hook_degree(&r5.character), BigInt::from(4));
        assert!(mr_via_table(2).is_err());
        for m in 3..=8 {
            assert!(mr_via_table(m).unwrap().mr < rat(1, 1));
        }
    }

    #[test]
    fn ratio_excludes_linear_and_center() {
        let rho = CycleType::new(vec![2, 1, 1]).unwrap();
        assert_eq!(ratio_at(&Partition::trivial(4), &rho).unwrap(), None);
        // The 2-dim character of S_4 is trivial on double transpositions.
        let two = Partition::new(vec![2, 2]).unwrap();
        let dt = CycleType::new(vec![2, 2]).unwrap();
        assert_eq!(ratio_at(&two, &dt).unwrap(), None);
        let three = CycleType::three_cycle(4).unwrap();
        assert_eq!(ratio_at(&two, &three).unwrap(), Some(rat(1, 2)));
    }
}
