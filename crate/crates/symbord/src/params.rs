//! Weight parameters (a, b) and the split b = r*a + b' with 0 <= b' < a.

use std::fmt;

use crate::error::{Error, Result};

/// A pair of non-negative weights. For a > 0 the Euclidean split
/// b = r*a + b' with 0 <= b' < a is precomputed; a = 0 is accepted only by
/// the order layers that treat it as a separate regime.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightParams {
    a: u64,
    b: u64,
    r: u64,
    bprime: u64,
}

impl WeightParams {
    pub fn new(a: u64, b: u64) -> Self {
        if a == 0 {
            WeightParams {
                a,
                b,
                r: 0,
                bprime: 0,
            }
        } else {
            WeightParams {
                a,
                b,
                r: b / a,
                bprime: b % a,
            }
        }
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// The quotient r in b = r*a + b'. Meaningless when a = 0.
    pub fn r(&self) -> u64 {
        self.r
    }

    /// The remainder b' in b = r*a + b'. Meaningless when a = 0.
    pub fn bprime(&self) -> u64 {
        self.bprime
    }

    /// Errors unless a > 0; the symbol layer works only in that regime.
    pub fn require_positive_a(&self) -> Result<()> {
        if self.a == 0 {
            Err(Error::Params(
                "this operation needs a > 0; the a = 0 regimes are handled at the order level"
                    .into(),
            ))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for WeightParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={})", self.a, self.b)
    }
}

impl fmt::Debug for WeightParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
