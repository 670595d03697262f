//! Beta-sets: strictly decreasing non-negative integer sequences encoding
//! partitions, together with the complement operation that realizes
//! conjugation on the partition side.
//!
//! A partition p with at most m parts is encoded as
//! `{ p_i + m - i : 1 <= i <= m }`, padding p with zeros.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A finite set of distinct non-negative integers, stored in decreasing
/// order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    entries: Vec<u64>,
}

impl BetaSet {
    /// Builds a beta-set from arbitrary entries; duplicates are rejected.
    pub fn new(mut entries: Vec<u64>) -> Result<Self> {
        entries.sort_unstable_by(|x, y| y.cmp(x));
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(
                "beta-set entries must be distinct".into(),
            ));
        }
        Ok(BetaSet { entries })
    }

    /// The length-`m` encoding of `p`; requires `m >= p.len()`.
    pub fn from_partition(p: &Partition, m: usize) -> Result<Self> {
        if m < p.len() {
            return Err(Error::Level(format!(
                "beta-set of length {m} cannot hold {} parts",
                p.len()
            )));
        }
        let entries = (1..=m).map(|i| p.part(i - 1) + (m - i) as u64).collect();
        Ok(BetaSet { entries })
    }

    /// The partition encoded by this beta-set.
    pub fn to_partition(&self) -> Partition {
        let m = self.entries.len();
        Partition::new(
            self.entries
                .iter()
                .enumerate()
                .map(|(idx, &x)| x - (m - 1 - idx) as u64)
                .collect(),
        )
    }

    /// Entries in decreasing order.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the entries.
    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.entries.contains(&x)
    }

    /// The complement construction: with `s = len + m_out`, returns
    /// `{0, ..., s-1}` minus `{ s-1-x : x in self }`, a beta-set of length
    /// `m_out`. Every entry must be at most `s-1`.
    ///
    /// On partitions this is conjugation: the hat of the length-`m`
    /// encoding of p, taken with `m_out = M`, is the length-`M` encoding of
    /// the conjugate of p (for `M >= p_1`).
    pub fn hat_complement(&self, m_out: usize) -> Result<BetaSet> {
        let s = self.entries.len() + m_out;
        let top = s as u64;
        if let Some(&max) = self.entries.first() {
            if max + 1 > top {
                return Err(Error::Level(format!(
                    "entry {max} does not fit in a complement of span {s}"
                )));
            }
        }
        let mut removed = vec![false; s];
        for &x in &self.entries {
            removed[(top - 1 - x) as usize] = true;
        }
        let entries = (0..s as u64)
            .rev()
            .filter(|&v| !removed[v as usize])
            .collect();
        Ok(BetaSet { entries })
    }

    /// Union with a disjoint beta-set; overlapping entries are an error.
    pub fn union_disjoint(&self, other: &BetaSet) -> Result<BetaSet> {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        BetaSet::new(entries)
            .map_err(|_| Error::Precondition("union of overlapping beta-sets".into()))
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .entries
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "{{{text}}}")
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prefix-sum dominance of decreasing sequences: true when both have the
/// same length and total, and every prefix sum of `low` is at most the
/// matching prefix sum of `high`.
pub fn sequence_dominance(low: &[u64], high: &[u64]) -> bool {
    if low.len() != high.len() {
        return false;
    }
    let (mut sum_low, mut sum_high) = (0u64, 0u64);
    for (&x, &y) in low.iter().zip(high) {
        sum_low += x;
        sum_high += y;
        if sum_low > sum_high {
            return false;
        }
    }
    sum_low == sum_high
}

/// Dominance of beta-sets as decreasing sequences; requires equal length
/// and equal total.
pub fn beta_dominance(low: &BetaSet, high: &BetaSet) -> Result<bool> {
    if low.len() != high.len() {
        return Err(Error::Incompatible(format!(
            "beta-sets of lengths {} and {}",
            low.len(),
            high.len()
        )));
    }
    if low.total() != high.total() {
        return Err(Error::Incompatible(format!(
            "beta-sets with totals {} and {}",
            low.total(),
            high.total()
        )));
    }
    Ok(sequence_dominance(low.entries(), high.entries()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{dominance, partitions};

    #[test]
    fn encode_decode_round_trip() {
        let p = Partition::new(vec![4, 3, 1, 1]);
        for m in 4..8 {
            let x = BetaSet::from_partition(&p, m).unwrap();
            assert_eq!(x.len(), m);
            assert_eq!(x.to_partition(), p);
        }
        assert!(BetaSet::from_partition(&p, 3).is_err());
    }

    #[test]
    fn empty_partition_encodes_staircase() {
        let x = BetaSet::from_partition(&Partition::empty(), 4).unwrap();
        assert_eq!(x.entries(), &[3, 2, 1, 0]);
    }

    #[test]
    fn new_rejects_duplicates() {
        assert!(BetaSet::new(vec![3, 1, 3]).is_err());
        assert_eq!(BetaSet::new(vec![1, 5, 0]).unwrap().entries(), &[5, 1, 0]);
    }

    #[test]
    fn hat_complement_is_conjugation() {
        for n in 0..=7u64 {
            for p in partitions(n) {
                let m = p.len() + 2;
                let x = BetaSet::from_partition(&p, m).unwrap();
                let m_out = (p.part(0) + 1) as usize;
                let hat = x.hat_complement(m_out).unwrap();
                assert_eq!(hat.len(), m_out);
                assert_eq!(hat.to_partition(), p.conjugate());
            }
        }
    }

    #[test]
    fn hat_complement_twice_returns_start() {
        let x = BetaSet::new(vec![8, 7, 6, 5, 4, 2, 0]).unwrap();
        let hat = x.hat_complement(4).unwrap();
        assert_eq!(hat.hat_complement(x.len()).unwrap(), x);
    }

    #[test]
    fn hat_complement_needs_room() {
        let x = BetaSet::new(vec![9, 0]).unwrap();
        assert!(x.hat_complement(2).is_err());
        assert!(x.hat_complement(8).is_ok());
    }

    #[test]
    fn union_checks_disjointness() {
        let x = BetaSet::new(vec![5, 2]).unwrap();
        let u = BetaSet::new(vec![4, 1]).unwrap();
        assert_eq!(x.union_disjoint(&u).unwrap().entries(), &[5, 4, 2, 1]);
        let v = BetaSet::new(vec![2]).unwrap();
        assert!(x.union_disjoint(&v).is_err());
    }

    #[test]
    fn sequence_dominance_basics() {
        assert!(sequence_dominance(&[2, 2, 1], &[3, 1, 1]));
        assert!(!sequence_dominance(&[3, 1, 1], &[2, 2, 1]));
        assert!(!sequence_dominance(&[2, 1], &[2, 1, 0]));
        assert!(!sequence_dominance(&[2, 2], &[3, 2]));
    }

    #[test]
    fn beta_dominance_matches_partition_dominance_at_fixed_length() {
        for n in 0..=6u64 {
            let ps = partitions(n);
            for p in &ps {
                for q in &ps {
                    let m = p.len().max(q.len()) + 1;
                    let x = BetaSet::from_partition(p, m).unwrap();
                    let y = BetaSet::from_partition(q, m).unwrap();
                    assert_eq!(
                        beta_dominance(&x, &y).unwrap(),
                        dominance(p, q, false).unwrap()
                    );
                }
            }
        }
    }
}
