//! Integer partitions: construction, conjugation, the dominance order, and
//! the weighted sum n(p) = sum_i (i-1) p_i.

use std::fmt;

use crate::error::{Error, Result};

/// A partition of a non-negative integer: finitely many positive parts in
/// weakly decreasing order. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from an arbitrary list of parts: zeros are
    /// dropped and the rest is sorted into weakly decreasing order.
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition { parts }
    }

    /// The partition with no parts.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The parts, weakly decreasing.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The i-th part, 0-indexed; parts past the end are 0.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// The conjugate partition: its j-th part counts the parts of `self`
    /// that are at least j+1.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let mut parts = Vec::with_capacity(cols as usize);
        for j in 1..=cols {
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count() as u64);
        }
        Partition { parts }
    }

    /// n(p) = 0*p_1 + 1*p_2 + 2*p_3 + ...
    pub fn n_invariant(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p)
            .sum()
    }

    /// A copy of `self` with one extra part of size `l` inserted in order.
    /// Adding a part of size 0 is a no-op.
    pub fn add_part(&self, l: u64) -> Partition {
        let mut parts = self.parts.clone();
        parts.push(l);
        Partition::new(parts)
    }

    /// Parses the dot-separated form, e.g. `4.3.1.1`; `-` (or an empty
    /// string) is the empty partition. Parts must be positive and weakly
    /// decreasing.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split('.') {
            let p: u64 = piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {piece:?} in partition {s:?}")))?;
            if p == 0 {
                return Err(Error::Parse(format!("zero part in partition {s:?}")));
            }
            if let Some(&prev) = parts.last() {
                if p > prev {
                    return Err(Error::Parse(format!(
                        "parts of {s:?} are not weakly decreasing"
                    )));
                }
            }
            parts.push(p);
        }
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let text = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(".");
        write!(f, "{text}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n`, in lexicographically decreasing order, so the
/// list starts with `(n)` and ends with `(1^n)`.
pub fn partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// The dominance order: `p` is below `q` when every prefix sum of the parts
/// of `p` is at most the matching prefix sum for `q`.
///
/// With `allow_unequal_sizes` the raw prefix-sum comparison is used as-is
/// (so the comparison also forces `|p| <= |q|`); without it, partitions of
/// different sizes are rejected.
pub fn dominance(p: &Partition, q: &Partition, allow_unequal_sizes: bool) -> Result<bool> {
    if !allow_unequal_sizes && p.size() != q.size() {
        return Err(Error::RankMismatch(format!(
            "dominance comparison of {p} (size {}) with {q} (size {})",
            p.size(),
            q.size()
        )));
    }
    let len = p.len().max(q.len());
    let (mut sum_p, mut sum_q) = (0u64, 0u64);
    for i in 0..len {
        sum_p += p.part(i);
        sum_q += q.part(i);
        if sum_p > sum_q {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_strips_zeros() {
        let p = Partition::new(vec![1, 0, 3, 1, 0, 4]);
        assert_eq!(p.parts(), &[4, 3, 1, 1]);
        assert_eq!(p.size(), 9);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn part_past_end_is_zero() {
        let p = Partition::new(vec![2, 1]);
        assert_eq!(p.part(0), 2);
        assert_eq!(p.part(5), 0);
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![4, 3, 1, 1]);
        assert_eq!(p.conjugate().parts(), &[4, 2, 2, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::new(vec![1, 1, 1]).conjugate().parts(), &[3]);
    }

    #[test]
    fn n_invariant_examples() {
        assert_eq!(Partition::empty().n_invariant(), 0);
        assert_eq!(Partition::new(vec![3, 2]).n_invariant(), 2);
        // (1^l) gives 0 + 1 + ... + (l-1)
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).n_invariant(), 6);
    }

    #[test]
    fn add_part_keeps_order() {
        let p = Partition::new(vec![3, 1]);
        assert_eq!(p.add_part(2).parts(), &[3, 2, 1]);
        assert_eq!(p.add_part(0), p);
        assert_eq!(p.add_part(5).parts(), &[5, 3, 1]);
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["4.3.1.1", "-", "2", "5.5.2"] {
            let p = Partition::parse(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert!(Partition::parse("1.2").is_err());
        assert!(Partition::parse("3.0").is_err());
        assert!(Partition::parse("a.b").is_err());
    }

    #[test]
    fn partition_counts() {
        // p(0)..p(8) = 1, 1, 2, 3, 5, 7, 11, 15, 22
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(partitions(n as u64).len(), count);
        }
    }

    #[test]
    fn partitions_order_and_distinctness() {
        let ps = partitions(5);
        assert_eq!(ps.first().unwrap().parts(), &[5]);
        assert_eq!(ps.last().unwrap().parts(), &[1, 1, 1, 1, 1]);
        let mut seen = std::collections::HashSet::new();
        for p in &ps {
            assert_eq!(p.size(), 5);
            assert!(seen.insert(p.clone()));
        }
    }

    #[test]
    fn dominance_same_size() {
        let p = Partition::new(vec![2, 2, 1]);
        let q = Partition::new(vec![3, 1, 1]);
        assert!(dominance(&p, &q, false).unwrap());
        assert!(!dominance(&q, &p, false).unwrap());
        assert!(dominance(&p, &p, false).unwrap());
    }

    #[test]
    fn dominance_unequal_sizes() {
        let small = Partition::new(vec![1]);
        let big = Partition::new(vec![2, 1]);
        assert!(dominance(&small, &big, true).unwrap());
        assert!(!dominance(&big, &small, true).unwrap());
        assert!(dominance(&small, &big, false).is_err());
    }

    #[test]
    fn dominance_is_reflexive_transitive_antisymmetric_small() {
        for n in 0..=6u64 {
            let ps = partitions(n);
            for p in &ps {
                assert!(dominance(p, p, false).unwrap());
                for q in &ps {
                    let pq = dominance(p, q, false).unwrap();
                    let qp = dominance(q, p, false).unwrap();
                    if pq && qp {
                        assert_eq!(p, q);
                    }
                    for z in &ps {
                        if pq && dominance(q, z, false).unwrap() {
                            assert!(dominance(p, z, false).unwrap());
                        }
                        let _ = z;
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_reverses_under_conjugation() {
        for n in 0..=6u64 {
            let ps = partitions(n);
            for p in &ps {
                for q in &ps {
                    assert_eq!(
                        dominance(p, q, false).unwrap(),
                        dominance(&q.conjugate(), &p.conjugate(), false).unwrap()
                    );
                }
            }
        }
    }
}
