//! Entry multisets attached to bipartitions at a weight (a, b), with the
//! shift equivalence, conjugation, prefix-sum dominance, and the
//! a-invariant.
//!
//! For a bipartition (lambda, mu) of n and a level N (with mu fitting in N
//! rows and lambda in N + r rows), the multiset holds
//! `(lambda_i + N + r - i) a + b'` for `1 <= i <= N + r` and
//! `(mu_j + N - j) a` for `1 <= j <= N`, where b = r a + b'.

use std::fmt;

use serde_json::{json, Value};

use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::params::WeightParams;

/// Which validity conditions a multiset is held to.
///
/// `Strict` is the class of genuine symbol multisets. `Relaxed` (only
/// defined for b' = 0) keeps the weighted sum condition and the bound of
/// two on entry multiplicities, but drops the rest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValidityClass {
    Strict,
    Relaxed,
}

/// Outcome of checking a multiset against the validity conditions.
#[derive(Clone, Debug)]
pub struct ValidityReport {
    /// The weighted sum condition: the entries add up to
    /// n a + N(N-1) a + N b + C(r,2) a + r b'.
    pub weighted_sum: bool,
    /// Full membership: weighted sum plus the congruence and multiplicity
    /// conditions (for b' = 0: all entries divisible by a, at least N + r
    /// distinct values, none repeated more than twice; for b' > 0: all
    /// distinct, N entries divisible by a and N + r congruent to b').
    pub strict: bool,
    /// Relaxed membership: weighted sum plus no entry repeated more than
    /// twice. Only distinct from `strict` when b' = 0.
    pub relaxed: bool,
    /// Human-readable notes on whichever conditions failed.
    pub notes: Vec<String>,
}

/// A multiset of non-negative entries at a weight (a, b), a rank n, and a
/// level N. Entries are stored in decreasing order; the length is always
/// 2N + r.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolMultiset {
    params: WeightParams,
    n: u64,
    level: u64,
    entries: Vec<u64>,
    class: ValidityClass,
}

/// The expected entry sum at rank n and level N.
fn expected_sum(params: WeightParams, n: u64, level: u64) -> u64 {
    let (a, b, r, bp) = (params.a(), params.b(), params.r(), params.bprime());
    n * a
        + level * level.saturating_sub(1) * a
        + level * b
        + a * r * r.saturating_sub(1) / 2
        + r * bp
}

/// Entries of the unique rank-0 multiset at this level: i a for 0 <= i < N
/// together with i a + b' for 0 <= i < N + r, in decreasing order.
fn base_entries(params: WeightParams, level: u64) -> Vec<u64> {
    let (a, r, bp) = (params.a(), params.r(), params.bprime());
    let mut entries: Vec<u64> = (0..level).map(|i| i * a).collect();
    entries.extend((0..level + r).map(|i| i * a + bp));
    entries.sort_unstable_by(|x, y| y.cmp(x));
    entries
}

fn check_validity(params: WeightParams, n: u64, level: u64, entries: &[u64]) -> ValidityReport {
    let (a, r, bp) = (params.a(), params.r(), params.bprime());
    let mut notes = Vec::new();

    if entries.len() as u64 != 2 * level + r {
        notes.push(format!(
            "expected {} entries at level {level}, found {}",
            2 * level + r,
            entries.len()
        ));
        return ValidityReport {
            weighted_sum: false,
            strict: false,
            relaxed: false,
            notes,
        };
    }

    let sum: u64 = entries.iter().sum();
    let weighted_sum = sum == expected_sum(params, n, level);
    if !weighted_sum {
        notes.push(format!(
            "entry sum {sum} differs from the expected {}",
            expected_sum(params, n, level)
        ));
    }

    // Multiplicity census over the decreasing entry list.
    let mut max_mult = 0usize;
    let mut distinct = 0u64;
    let mut idx = 0;
    while idx < entries.len() {
        let mut j = idx;
        while j < entries.len() && entries[j] == entries[idx] {
            j += 1;
        }
        max_mult = max_mult.max(j - idx);
        distinct += 1;
        idx = j;
    }

    let strict = if bp == 0 {
        let mut ok = weighted_sum;
        if entries.iter().any(|&z| z % a != 0) {
            notes.push("an entry is not divisible by a".into());
            ok = false;
        }
        if distinct < level + r {
            notes.push(format!(
                "only {distinct} distinct entries, need at least {}",
                level + r
            ));
            ok = false;
        }
        if max_mult > 2 {
            notes.push("an entry is repeated more than twice".into());
            ok = false;
        }
        ok
    } else {
        let mut ok = weighted_sum;
        if max_mult > 1 {
            notes.push("entries are not all distinct".into());
            ok = false;
        }
        let zero_class = entries.iter().filter(|&&z| z % a == 0).count() as u64;
        let bp_class = entries.iter().filter(|&&z| z % a == bp).count() as u64;
        if zero_class != level || bp_class != level + r {
            notes.push(format!(
                "residue classes split {zero_class}/{bp_class}, need {level}/{}",
                level + r
            ));
            ok = false;
        }
        ok
    };

    let relaxed = if bp == 0 {
        weighted_sum && max_mult <= 2
    } else {
        strict
    };

    ValidityReport {
        weighted_sum,
        strict,
        relaxed,
        notes,
    }
}

impl SymbolMultiset {
    /// The multiset of `bp` at the given level. Needs a > 0, mu with at
    /// most `level` parts, and lambda with at most `level + r` parts.
    pub fn from_bipartition(params: WeightParams, bp: &Bipartition, level: u64) -> Result<Self> {
        params.require_positive_a()?;
        let (a, r, bpr) = (params.a(), params.r(), params.bprime());
        if (bp.mu().len() as u64) > level {
            return Err(Error::Level(format!(
                "level {level} cannot hold mu = {} with {} parts",
                bp.mu(),
                bp.mu().len()
            )));
        }
        if (bp.lambda().len() as u64) > level + r {
            return Err(Error::Level(format!(
                "level {level} (plus r = {r}) cannot hold lambda = {} with {} parts",
                bp.lambda(),
                bp.lambda().len()
            )));
        }
        let mut entries = Vec::with_capacity((2 * level + r) as usize);
        for i in 1..=level + r {
            entries.push((bp.lambda().part(i as usize - 1) + level + r - i) * a + bpr);
        }
        for j in 1..=level {
            entries.push((bp.mu().part(j as usize - 1) + level - j) * a);
        }
        entries.sort_unstable_by(|x, y| y.cmp(x));
        let out = SymbolMultiset {
            params,
            n: bp.size(),
            level,
            entries,
            class: ValidityClass::Strict,
        };
        debug_assert!(out.validate().strict);
        Ok(out)
    }

    /// The smallest level whose rows can hold `bp`.
    pub fn minimal_level(params: WeightParams, bp: &Bipartition) -> Result<u64> {
        params.require_positive_a()?;
        let need_mu = bp.mu().len() as u64;
        let need_lambda = (bp.lambda().len() as u64).saturating_sub(params.r());
        Ok(need_mu.max(need_lambda))
    }

    /// Wraps raw entries after checking them against the requested class.
    pub fn from_entries(
        params: WeightParams,
        n: u64,
        level: u64,
        mut entries: Vec<u64>,
        class: ValidityClass,
    ) -> Result<Self> {
        params.require_positive_a()?;
        if class == ValidityClass::Relaxed && params.bprime() != 0 {
            return Err(Error::Params(
                "the relaxed class is only defined for b' = 0".into(),
            ));
        }
        entries.sort_unstable_by(|x, y| y.cmp(x));
        let report = check_validity(params, n, level, &entries);
        let ok = match class {
            ValidityClass::Strict => report.strict,
            ValidityClass::Relaxed => report.relaxed,
        };
        if !ok {
            return Err(Error::InvalidSymbol(report.notes.join("; ")));
        }
        Ok(SymbolMultiset {
            params,
            n,
            level,
            entries,
            class,
        })
    }

    /// Wraps raw entries, classifying them as strict when possible and
    /// relaxed otherwise.
    fn from_entries_auto(
        params: WeightParams,
        n: u64,
        level: u64,
        mut entries: Vec<u64>,
    ) -> Result<Self> {
        entries.sort_unstable_by(|x, y| y.cmp(x));
        let report = check_validity(params, n, level, &entries);
        let class = if report.strict {
            ValidityClass::Strict
        } else if report.relaxed {
            ValidityClass::Relaxed
        } else {
            return Err(Error::InvalidSymbol(report.notes.join("; ")));
        };
        Ok(SymbolMultiset {
            params,
            n,
            level,
            entries,
            class,
        })
    }

    /// Entries in decreasing order.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn params(&self) -> WeightParams {
        self.params
    }

    /// The rank n.
    pub fn rank(&self) -> u64 {
        self.n
    }

    /// The level N.
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn class(&self) -> ValidityClass {
        self.class
    }

    /// Re-checks the validity conditions for the current rank and level.
    pub fn validate(&self) -> ValidityReport {
        check_validity(self.params, self.n, self.level, &self.entries)
    }

    /// The level N + 1 representative: inserts 0 and b', adds a to every
    /// old entry.
    pub fn shift(&self) -> SymbolMultiset {
        let a = self.params.a();
        let mut entries: Vec<u64> = self.entries.iter().map(|&z| z + a).collect();
        entries.push(self.params.bprime());
        entries.push(0);
        entries.sort_unstable_by(|x, y| y.cmp(x));
        SymbolMultiset {
            params: self.params,
            n: self.n,
            level: self.level + 1,
            entries,
            class: self.class,
        }
    }

    /// Undoes one shift: removes one 0 and one b' (two zeros when b' = 0)
    /// and subtracts a from the rest. Errors when those entries are
    /// missing, the level is already 0, or some remaining entry is below a.
    pub fn unshift(&self) -> Result<SymbolMultiset> {
        if self.level == 0 {
            return Err(Error::Level("cannot unshift below level 0".into()));
        }
        let (a, bp) = (self.params.a(), self.params.bprime());
        let mut entries = self.entries.clone();
        for needed in [bp, 0] {
            match entries.iter().rposition(|&z| z == needed) {
                Some(pos) => {
                    entries.remove(pos);
                }
                None => {
                    return Err(Error::Precondition(format!(
                        "no entry {needed} to remove while unshifting"
                    )));
                }
            }
        }
        if entries.iter().any(|&z| z < a) {
            return Err(Error::Precondition(
                "a remaining entry is smaller than a; not a shifted multiset".into(),
            ));
        }
        let entries = entries.into_iter().map(|z| z - a).collect();
        Ok(SymbolMultiset {
            params: self.params,
            n: self.n,
            level: self.level - 1,
            entries,
            class: self.class,
        })
    }

    /// Shifts up to the requested level, which must not be below the
    /// current one.
    pub fn shift_to(&self, level: u64) -> Result<SymbolMultiset> {
        if level < self.level {
            return Err(Error::Level(format!(
                "cannot shift down from level {} to {level}; use unshift",
                self.level
            )));
        }
        let mut out = self.clone();
        while out.level < level {
            out = out.shift();
        }
        Ok(out)
    }

    /// True when the two multisets differ only by shifts. Both must carry
    /// the same weights and rank.
    pub fn equivalent(&self, other: &SymbolMultiset) -> Result<bool> {
        self.check_comparable(other)?;
        let top = self.level.max(other.level);
        Ok(self.shift_to(top)?.entries == other.shift_to(top)?.entries)
    }

    fn check_comparable(&self, other: &SymbolMultiset) -> Result<()> {
        if self.params != other.params {
            return Err(Error::Incompatible(format!(
                "weights {} and {}",
                self.params, other.params
            )));
        }
        if self.n != other.n {
            return Err(Error::RankMismatch(format!(
                "ranks {} and {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    /// The smallest conjugation level: large enough for the span and for
    /// the result to have a non-negative level.
    pub fn minimal_conjugation_level(&self) -> u64 {
        let (a, bp, r) = (self.params.a(), self.params.bprime(), self.params.r());
        let zmax = self.entries.first().copied().unwrap_or(0);
        let span_need = if zmax <= bp {
            0
        } else {
            (zmax - bp).div_ceil(a)
        };
        span_need.max((self.level + r).saturating_sub(1))
    }

    /// The conjugate multiset at span level t (defaulting to the smallest
    /// valid one): the complement of { t a + b' - z } inside
    /// {0, a, ..., t a} joined with {b', a + b', ..., t a + b'}, taken as
    /// multisets. The result lives at level t + 1 - N - r.
    pub fn conjugate(&self, t: Option<u64>) -> Result<SymbolMultiset> {
        let (a, bp, r) = (self.params.a(), self.params.bprime(), self.params.r());
        let t = t.unwrap_or_else(|| self.minimal_conjugation_level());
        if t + 1 < self.level + r {
            return Err(Error::Level(format!(
                "conjugation level {t} is below the minimum {}",
                (self.level + r).saturating_sub(1)
            )));
        }
        let top = t * a + bp;
        // Count the container multiset: value -> available multiplicity.
        let mut container: std::collections::BTreeMap<u64, u32> = std::collections::BTreeMap::new();
        for i in 0..=t {
            *container.entry(i * a).or_insert(0) += 1;
            *container.entry(i * a + bp).or_insert(0) += 1;
        }
        for &z in &self.entries {
            if z > top {
                return Err(Error::Level(format!(
                    "entry {z} exceeds the span {top} at conjugation level {t}"
                )));
            }
            let v = top - z;
            match container.get_mut(&v) {
                Some(count) if *count > 0 => *count -= 1,
                _ => {
                    return Err(Error::Precondition(format!(
                        "reflected entry {v} is not available in the container at level {t}"
                    )));
                }
            }
        }
        let mut entries = Vec::new();
        for (v, count) in container {
            for _ in 0..count {
                entries.push(v);
            }
        }
        SymbolMultiset::from_entries_auto(self.params, self.n, t + 1 - self.level - r, entries)
    }

    /// Prefix-sum dominance against `other`, after shifting both to a
    /// common level. Needs equal weights and ranks.
    pub fn dominated_by(&self, other: &SymbolMultiset) -> Result<bool> {
        self.check_comparable(other)?;
        let top = self.level.max(other.level);
        let low = self.shift_to(top)?;
        let high = other.shift_to(top)?;
        Ok(crate::beta::sequence_dominance(&low.entries, &high.entries))
    }

    /// The a-invariant: the weighted sum `sum_i (i-1) z_i` over the
    /// decreasing entries, minus the same sum for the rank-0 multiset at
    /// this level. Rejects multisets that are only relaxed-valid.
    pub fn a_invariant(&self) -> Result<i64> {
        let report = self.validate();
        if !report.strict {
            return Err(Error::InvalidSymbol(
                "the a-invariant is only defined on the strict class".into(),
            ));
        }
        fn weighted(entries: &[u64]) -> i64 {
            entries
                .iter()
                .enumerate()
                .map(|(i, &z)| i as i64 * z as i64)
                .sum()
        }
        let base = base_entries(self.params, self.level);
        Ok(weighted(&self.entries) - weighted(&base))
    }

    /// Adds a to the largest `l` entries; the result is a multiset of rank
    /// n + l at the same level.
    pub fn hat_increase(&self, l: u64) -> Result<SymbolMultiset> {
        if l as usize > self.entries.len() {
            return Err(Error::Precondition(format!(
                "cannot raise {l} entries of a multiset with {}",
                self.entries.len()
            )));
        }
        let a = self.params.a();
        let mut entries = self.entries.clone();
        for z in entries.iter_mut().take(l as usize) {
            *z += a;
        }
        SymbolMultiset::from_entries_auto(self.params, self.n + l, self.level, entries)
    }

    /// JSON form: `{"a", "b", "N", "r", "entries"}` with entries
    /// decreasing.
    pub fn to_json(&self) -> Value {
        json!({
            "a": self.params.a(),
            "b": self.params.b(),
            "N": self.level,
            "r": self.params.r(),
            "entries": self.entries,
        })
    }

    /// Reads the JSON form; the rank is recovered from the weighted sum
    /// condition.
    pub fn from_json(value: &Value) -> Result<SymbolMultiset> {
        let get = |key: &str| -> Result<u64> {
            value
                .get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Json(format!("missing or non-integer field {key:?}")))
        };
        let a = get("a")?;
        let b = get("b")?;
        let level = get("N")?;
        let params = WeightParams::new(a, b);
        params.require_positive_a()?;
        if let Some(r) = value.get("r").and_then(Value::as_u64) {
            if r != params.r() {
                return Err(Error::Json(format!(
                    "field r = {r} disagrees with b = r a + b' (r = {})",
                    params.r()
                )));
            }
        }
        let entries: Vec<u64> = value
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("missing entries array".into()))?
            .iter()
            .map(|v| {
                v.as_u64()
                    .ok_or_else(|| Error::Json("non-integer entry".into()))
            })
            .collect::<Result<_>>()?;
        let sum: u64 = entries.iter().sum();
        let base = expected_sum(params, 0, level);
        if sum < base || !(sum - base).is_multiple_of(a) {
            return Err(Error::InvalidSymbol(
                "entry sum does not match any rank at this level".into(),
            ));
        }
        let n = (sum - base) / a;
        SymbolMultiset::from_entries_auto(params, n, level, entries)
    }
}

impl fmt::Display for SymbolMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .entries
            .iter()
            .map(|z| z.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "{{{text}}}")
    }
}

impl fmt::Debug for SymbolMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The two display rows of the symbol of `bp` at a level: the lambda row
/// `(lambda_i + N + r - i) a + b'` and the mu row `(mu_j + N - j) a`, both
/// decreasing.
pub fn symbol_rows(
    params: WeightParams,
    bp: &Bipartition,
    level: u64,
) -> Result<(Vec<u64>, Vec<u64>)> {
    params.require_positive_a()?;
    let (a, r, bpr) = (params.a(), params.r(), params.bprime());
    if (bp.mu().len() as u64) > level || (bp.lambda().len() as u64) > level + r {
        return Err(Error::Level(format!("level {level} cannot hold {bp}")));
    }
    let top = (1..=level + r)
        .map(|i| (bp.lambda().part(i as usize - 1) + level + r - i) * a + bpr)
        .collect();
    let bottom = (1..=level)
        .map(|j| (bp.mu().part(j as usize - 1) + level - j) * a)
        .collect();
    Ok((top, bottom))
}
