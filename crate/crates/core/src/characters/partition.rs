use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `m` for which [`partitions`] will enumerate.
pub const MAX_PARTITION_ORDER: usize = 40;

/// A weakly decreasing sequence of positive integers with positive sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.is_empty() {
            return Err(Error::BadParameters("empty partition".into()));
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParameters(format!(
                "{parts:?} is not a weakly decreasing sequence of positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros; fails only if nothing positive remains.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Partition> {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// `(m)`.
    pub fn trivial(m: usize) -> Partition {
        Partition(vec![m])
    }

    /// `(1^m)`.
    pub fn sign(m: usize) -> Partition {
        Partition(vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `m`, the number being partitioned.
    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate partition (transposed Young diagram).
    pub fn dual(&self) -> Partition {
        let first = self.0[0];
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&x| x >= j).count())
                .collect(),
        )
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let dual = self.dual();
        let mut out = Vec::with_capacity(self.order());
        for (i, &row) in self.0.iter().enumerate() {
            for (j, &col) in dual.0.iter().enumerate().take(row) {
                out.push((row - j - 1) + (col - i - 1) + 1);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,3,1`, `(5,3,1)` or `5 3 1`.
    fn from_str(s: &str) -> Result<Partition> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A partition read as the cycle type of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(parts: Vec<usize>) -> Result<CycleType> {
        Partition::from_unsorted(parts).map(CycleType)
    }

    pub fn identity(m: usize) -> CycleType {
        CycleType(Partition::sign(m))
    }

    /// Class of a 3-cycle, `(3, 1^(m-3))`.
    pub fn three_cycle(m: usize) -> Result<CycleType> {
        if m < 3 {
            return Err(Error::OutOfRange {
                what: "m",
                value: m as i64,
                range: ">= 3",
            });
        }
        let mut parts = vec![3];
        parts.extend(std::iter::repeat_n(1, m - 3));
        Ok(CycleType(Partition(parts)))
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.0.order() - self.0.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl From<Partition> for CycleType {
    fn from(p: Partition) -> CycleType {
        CycleType(p)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All partitions of `m` in reverse-lexicographic order, `(m)` first.
pub fn partitions(m: usize) -> Result<Vec<Partition>> {
    if !(1..=MAX_PARTITION_ORDER).contains(&m) {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            range: "1..=40",
        });
    }
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent count p(n) via the standard coin-change recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut ways = vec![0u64; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                ways[total] += ways[total - part];
            }
        }
        ways[n]
    }

    #[test]
    fn counts_match_recurrence() {
        assert_eq!(partitions(1).unwrap(), vec![Partition::trivial(1)]);
        assert_eq!(partitions(5).unwrap().len(), 7);
        assert_eq!(partition_count(5), 7);
        assert_eq!(partitions(18).unwrap().len(), 385);
        assert_eq!(partition_count(18), 385);
        for m in 1..=25 {
            assert_eq!(partitions(m).unwrap().len() as u64, partition_count(m));
        }
    }

    #[test]
    fn reverse_lex_order_without_duplicates() {
        let ps = partitions(6).unwrap();
        assert_eq!(ps.first().unwrap(), &Partition::trivial(6));
        assert_eq!(ps.last().unwrap(), &Partition::sign(6));
        for w in ps.windows(2) {
            assert!(w[0] > w[1], "{} !> {}", w[0], w[1]);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(partitions(0).is_err());
        assert!(partitions(41).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn dual_by_hand() {
        assert_eq!(Partition::trivial(4).dual(), Partition::sign(4));
        let p: Partition = "(3,1)".parse().unwrap();
        assert_eq!(p.dual(), Partition::new(vec![2, 1, 1]).unwrap());
    }

    #[test]
    fn cycle_type_signs() {
        assert_eq!(CycleType::three_cycle(5).unwrap().sign(), 1);
        assert_eq!(CycleType::new(vec![1, 2, 1]).unwrap().sign(), -1);
        assert_eq!(CycleType::identity(4).sign(), 1);
        assert!(CycleType::three_cycle(2).is_err());
    }

    fn transpose_cells(p: &Partition) -> Partition {
        // Cell-by-cell transpose of the Young diagram.
        let mut cells = Vec::new();
        for (i, &row) in p.parts().iter().enumerate() {
            for j in 0..row {
                cells.push((j, i));
            }
        }
        let rows = cells.iter().map(|c| c.0).max().unwrap() + 1;
        let mut parts = vec![0; rows];
        for (r, _) in cells {
            parts[r] += 1;
        }
        Partition::new(parts).unwrap()
    }

    proptest! {
        #[test]
        fn dual_is_involution_and_transpose(idx in 0usize..77) {
            let ps = partitions(12).unwrap();
            let p = &ps[idx];
            prop_assert_eq!(&p.dual().dual(), p);
            prop_assert_eq!(p.dual(), transpose_cells(p));
            prop_assert_eq!(p.hook_lengths().len(), 12);
        }

        #[test]
        fn display_parse_round_trip(idx in 0usize..42) {
            let ps = partitions(10).unwrap();
            let p = &ps[idx];
            prop_assert_eq!(&p.to_string().parse::<Partition>().unwrap(), p);
        }
    }
}
