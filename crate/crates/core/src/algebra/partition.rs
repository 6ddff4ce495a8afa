//! Integer partitions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::combinat::factorial;
use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts.
///
/// Ordering is reverse-lexicographic: among partitions of the same size the one
/// with the larger first part comes first, so `[4] < [3,1] < [2,2]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidParameter("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the given positive parts; zeros are dropped.
    pub fn from_unsorted<I: IntoIterator<Item = u32>>(parts: I) -> Self {
        let mut v: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `[1, 1, ..., 1]` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `r_i`: number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Nonzero multiplicities keyed by part size.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `∏_i r_i!`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities().values().map(|&r| factorial(r)).product()
    }

    pub fn even_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 0).count()
    }

    pub fn odd_parts(&self) -> usize {
        self.len() - self.even_parts()
    }

    /// Number of parts strictly greater than one.
    pub fn parts_above_one(&self) -> usize {
        self.0.iter().filter(|&&p| p > 1).count()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    /// Parts in increasing order.
    pub fn reversed(&self) -> Vec<u32> {
        self.0.iter().rev().copied().collect()
    }

    /// Multiset union `λ ⊔ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Plain lexicographic comparison of the part sequences.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[2,1,1]` or `2,1,1`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All partitions of `n` with at most `max_length` parts, in reverse-lexicographic order.
pub fn partitions_of(n: usize, max_length: Option<usize>) -> Vec<Partition> {
    fn go(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let n = n as u32;
    go(n, n, max_length.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_four() {
        let got = partitions_of(4, None);
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(sorted, want);
    }

    #[test]
    fn partitions_with_length_cap() {
        let got = partitions_of(5, Some(3));
        assert_eq!(got, vec![p(&[5]), p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])]);
        assert_eq!(partitions_of(0, None), vec![Partition::empty()]);
    }

    #[test]
    fn derived_statistics() {
        let l = p(&[3, 2, 1, 1, 1]);
        assert_eq!(l.size(), 8);
        assert_eq!(l.multiplicity(1), 3);
        assert_eq!(l.multiplicity_factorial(), BigInt::from(6));
        assert_eq!(l.even_parts(), 1);
        assert_eq!(l.odd_parts(), 4);
        assert_eq!(l.conjugate(), p(&[5, 2, 1]));
        assert_eq!(l.conjugate().conjugate(), l);
        assert_eq!(l.reversed(), vec![1, 1, 1, 2, 3]);
    }

    #[test]
    fn parse_and_display() {
        let l: Partition = "[2,1,1]".parse().unwrap();
        assert_eq!(l.to_string(), "[2,1,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }
}
