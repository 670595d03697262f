//! Ordered pairs of partitions and their enumeration by total size.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

/// An ordered pair of partitions (lambda, mu). Its rank is the total size
/// |lambda| + |mu|.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    lambda: Partition,
    mu: Partition,
}

impl Bipartition {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        Bipartition { lambda, mu }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// |lambda| + |mu|.
    pub fn size(&self) -> u64 {
        self.lambda.size() + self.mu.size()
    }

    /// The pair with both components swapped.
    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.mu.clone(), self.lambda.clone())
    }

    /// Parses `lambda|mu`, each side in dot-separated form with `-` for
    /// the empty partition, e.g. `4.3.1.1|3.2` or `-|2`.
    pub fn parse(s: &str) -> Result<Bipartition> {
        let (left, right) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("bipartition {s:?} is missing '|'")))?;
        Ok(Bipartition::new(
            Partition::parse(left)?,
            Partition::parse(right)?,
        ))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda, self.mu)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All bipartitions of `n` in a fixed order: |lambda| descending from n to
/// 0, then each component in the `partitions` order.
pub fn bipartitions(n: u64) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for lambda_size in (0..=n).rev() {
        for lambda in partitions(lambda_size) {
            for mu in partitions(n - lambda_size) {
                out.push(Bipartition::new(lambda.clone(), mu));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_by_rank() {
        // sum_k p(k) p(n-k) for n = 0..6: 1, 2, 5, 10, 20, 36, 65
        let expected = [1, 2, 5, 10, 20, 36, 65];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(bipartitions(n as u64).len(), count);
        }
    }

    #[test]
    fn enumeration_is_distinct_and_ranked() {
        let mut seen = std::collections::HashSet::new();
        for bp in bipartitions(5) {
            assert_eq!(bp.size(), 5);
            assert!(seen.insert(bp));
        }
    }

    #[test]
    fn parse_and_display() {
        let bp = Bipartition::parse("4.3.1.1|3.2").unwrap();
        assert_eq!(bp.lambda().parts(), &[4, 3, 1, 1]);
        assert_eq!(bp.mu().parts(), &[3, 2]);
        assert_eq!(bp.to_string(), "4.3.1.1|3.2");

        let bp = Bipartition::parse("-|2").unwrap();
        assert!(bp.lambda().is_empty());
        assert_eq!(bp.to_string(), "-|2");

        let bp = Bipartition::parse("-|-").unwrap();
        assert_eq!(bp.size(), 0);

        assert!(Bipartition::parse("3.2").is_err());
        assert!(Bipartition::parse("1.2|3").is_err());
    }

    #[test]
    fn swapped_is_involutive() {
        let bp = Bipartition::parse("2.1|3").unwrap();
        assert_eq!(bp.swapped().swapped(), bp);
        assert_eq!(bp.swapped().to_string(), "3|2.1");
    }
}
