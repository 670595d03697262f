//! Orders and invariants on bipartitions: the symbol pre-order, combinatorial
//! families, the a-invariant and omega, Dipper-James-Murphy dominance with its
//! adjacency classification, special bipartitions, the beta-set reading of
//! odd-weight symbols, and the entrywise doubling map between the (1,1) and
//! (2,3) symbols of a special bipartition.
//!
//! Key functions:
//! - `preceq_ab`: symbol dominance at a common shift level.
//! - `comb_families`: bipartitions of n grouped by their symbol multiset.
//! - `a_ab` / `omega`: the two numerical invariants.
//! - `bip_dominance` / `adjacency_classify`: the DJM order and the three
//!   box-move shapes of its covering pairs.
//! - `is_special` / `special_in_family_of`: interleaving special bipartitions.
//! - `pi_map`: the symbol of an (a,b) = (2, odd) weight read as a beta-set.
//! - `tilde_transform`: the (1,1) -> (2,3) doubling of a special bipartition.

use crate::beta::BetaSet;
use crate::bipartition::{bipartitions, Bipartition};
use crate::error::{Error, Result};
use crate::order::OrderRelation;
use crate::params::WeightParams;
use crate::partition::Partition;
use crate::symbol::SymbolMultiset;

/// True when the symbol of `low` is dominated by the symbol of `high`,
/// both taken at a common shift level. The answer does not depend on the
/// level chosen.
pub fn preceq_ab(params: WeightParams, low: &Bipartition, high: &Bipartition) -> Result<bool> {
    params.require_positive_a()?;
    if low.size() != high.size() {
        return Err(Error::RankMismatch(format!(
            "cannot compare bipartitions of {} and {}",
            low.size(),
            high.size()
        )));
    }
    let level = low.size();
    let z_low = SymbolMultiset::from_bipartition(params, low, level)?;
    let z_high = SymbolMultiset::from_bipartition(params, high, level)?;
    z_low.dominated_by(&z_high)
}

/// All bipartitions of n grouped by their symbol multiset at level n, in
/// first-occurrence order of the enumeration. When the weight remainder is
/// positive every group is a singleton.
pub fn comb_families(params: WeightParams, n: u64) -> Result<Vec<Vec<Bipartition>>> {
    params.require_positive_a()?;
    let mut keys: Vec<Vec<u64>> = Vec::new();
    let mut groups: Vec<Vec<Bipartition>> = Vec::new();
    for bp in bipartitions(n) {
        let entries = SymbolMultiset::from_bipartition(params, &bp, n)?
            .entries()
            .to_vec();
        match keys.iter().position(|k| *k == entries) {
            Some(idx) => groups[idx].push(bp),
            None => {
                keys.push(entries);
                groups.push(vec![bp]);
            }
        }
    }
    Ok(groups)
}

/// The a-invariant of a bipartition, read off its symbol. Level-independent.
pub fn a_ab(params: WeightParams, bp: &Bipartition) -> Result<i64> {
    let level = SymbolMultiset::minimal_level(params, bp)?;
    SymbolMultiset::from_bipartition(params, bp, level)?.a_invariant()
}

/// The omega invariant (|lambda| - |mu|) b + 2 (n(conj lambda) - n(lambda) +
/// n(conj mu) - n(mu)) a. Defined for every weight, including a = 0; for
/// a > 0 it equals a_ab of the conjugate-swap minus a_ab of the argument.
pub fn omega(params: WeightParams, bp: &Bipartition) -> i64 {
    let (lambda, mu) = (bp.lambda(), bp.mu());
    let size_term = (lambda.size() as i64 - mu.size() as i64) * params.b() as i64;
    let n_term = lambda.conjugate().n_invariant() as i64 - lambda.n_invariant() as i64
        + mu.conjugate().n_invariant() as i64
        - mu.n_invariant() as i64;
    size_term + 2 * n_term * params.a() as i64
}

/// Dipper-James-Murphy dominance: prefix sums of the first components
/// compare directly, prefix sums of the second components compare after
/// adding the full first-component sizes.
pub fn bip_dominance(low: &Bipartition, high: &Bipartition) -> Result<bool> {
    if low.size() != high.size() {
        return Err(Error::RankMismatch(format!(
            "cannot compare bipartitions of {} and {}",
            low.size(),
            high.size()
        )));
    }
    let first = prefix_dominated(low.lambda(), high.lambda(), 0, 0);
    let second = prefix_dominated(
        low.mu(),
        high.mu(),
        low.lambda().size(),
        high.lambda().size(),
    );
    Ok(first && second)
}

fn prefix_dominated(low: &Partition, high: &Partition, low_base: u64, high_base: u64) -> bool {
    let len = low.len().max(high.len());
    let (mut low_sum, mut high_sum) = (low_base, high_base);
    for i in 0..len {
        low_sum += low.part(i);
        high_sum += high.part(i);
        if low_sum > high_sum {
            return false;
        }
    }
    true
}

/// Shape of a covering pair of the dominance order on bipartitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjacencyCase {
    /// The two bipartitions coincide.
    Equal,
    /// Same second component; one box of the first moves to an earlier row.
    CaseA,
    /// Same first component; one box of the second moves to an earlier row.
    CaseB,
    /// One box leaves the second component and joins the first.
    CaseC,
    /// A strictly intermediate bipartition exists.
    NotAdjacent,
}

/// Classifies a dominance-comparable pair: equal, one of the three box-move
/// shapes of a covering pair, or not adjacent. Requires `low` dominated by
/// `high`.
pub fn adjacency_classify(low: &Bipartition, high: &Bipartition) -> Result<AdjacencyCase> {
    if !bip_dominance(low, high)? {
        return Err(Error::Precondition(
            "adjacency_classify requires the first argument to be dominated by the second".into(),
        ));
    }
    if low == high {
        return Ok(AdjacencyCase::Equal);
    }
    for mid in bipartitions(low.size()) {
        if mid != *low && mid != *high && bip_dominance(low, &mid)? && bip_dominance(&mid, high)? {
            return Ok(AdjacencyCase::NotAdjacent);
        }
    }
    let lambda_diffs = positional_diffs(low.lambda(), high.lambda());
    let mu_diffs = positional_diffs(low.mu(), high.mu());
    let case = if low.mu() == high.mu() && is_box_raise(&lambda_diffs) {
        AdjacencyCase::CaseA
    } else if low.lambda() == high.lambda() && is_box_raise(&mu_diffs) {
        AdjacencyCase::CaseB
    } else if matches!(lambda_diffs.as_slice(), [(_, 1)])
        && matches!(mu_diffs.as_slice(), [(_, -1)])
    {
        AdjacencyCase::CaseC
    } else {
        return Err(Error::Internal(format!(
            "covering pair {low} < {high} fits no box-move shape"
        )));
    };
    Ok(case)
}

fn positional_diffs(p: &Partition, q: &Partition) -> Vec<(usize, i64)> {
    let len = p.len().max(q.len());
    (0..len)
        .filter_map(|i| {
            let delta = q.part(i) as i64 - p.part(i) as i64;
            (delta != 0).then_some((i, delta))
        })
        .collect()
}

fn is_box_raise(diffs: &[(usize, i64)]) -> bool {
    matches!(diffs, [(i, 1), (j, -1)] if i < j)
}

/// The two weights whose families have interleaving-special representatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    /// Weight (1,1): lambda_i + 1 >= mu_i >= lambda_{i+1} for all i.
    OneOne,
    /// Weight (1,0): lambda_i >= mu_i for all i and mu_i + 1 >= lambda_{i+1}.
    OneZero,
}

impl SpecialKind {
    pub fn params(self) -> WeightParams {
        match self {
            SpecialKind::OneOne => WeightParams::new(1, 1),
            SpecialKind::OneZero => WeightParams::new(1, 0),
        }
    }
}

/// Whether the bipartition satisfies the interleaving inequalities of the
/// given weight, over a window wide enough to cover both components.
pub fn is_special(kind: SpecialKind, bp: &Bipartition) -> bool {
    let (lambda, mu) = (bp.lambda(), bp.mu());
    let window = bp.size() as usize;
    match kind {
        SpecialKind::OneOne => (0..window)
            .all(|i| lambda.part(i) + 1 >= mu.part(i) && mu.part(i) >= lambda.part(i + 1)),
        SpecialKind::OneZero => {
            if window == 0 {
                return true;
            }
            let tail = lambda.part(window - 1) >= mu.part(window - 1);
            tail && (0..window - 1)
                .all(|i| lambda.part(i) >= mu.part(i) && mu.part(i) + 1 >= lambda.part(i + 1))
        }
    }
}

/// The unique special member of the combinatorial family containing `bp`
/// under the kind's weight.
pub fn special_in_family_of(kind: SpecialKind, bp: &Bipartition) -> Result<Bipartition> {
    let params = kind.params();
    let n = bp.size();
    let target = SymbolMultiset::from_bipartition(params, bp, n)?;
    let mut found = Vec::new();
    for other in bipartitions(n) {
        if !is_special(kind, &other) {
            continue;
        }
        let z = SymbolMultiset::from_bipartition(params, &other, n)?;
        if z.entries() == target.entries() {
            found.push(other);
        }
    }
    match found.as_slice() {
        [unique] => Ok(unique.clone()),
        _ => Err(Error::Internal(format!(
            "family of {bp} has {} special members instead of one",
            found.len()
        ))),
    }
}

/// Reads the all-distinct symbol of an (a, b) = (2, odd) weight as a beta-set
/// and returns the corresponding partition of 2n + r(r+1)/2.
pub fn pi_map(params: WeightParams, bp: &Bipartition) -> Result<Partition> {
    if params.a() != 2 || params.b().is_multiple_of(2) {
        return Err(Error::Params(format!(
            "beta-set reading needs a=2 and odd b, got {params}"
        )));
    }
    let level = SymbolMultiset::minimal_level(params, bp)?;
    let z = SymbolMultiset::from_bipartition(params, bp, level)?;
    let partition = BetaSet::new(z.entries().to_vec())?.to_partition();
    let r = params.r();
    debug_assert_eq!(partition.size(), 2 * bp.size() + r * (r + 1) / 2);
    Ok(partition)
}

/// The interleaved entry sequence of the (1,1) symbol together with its
/// entrywise doubling, which lists the (2,3) symbol of the same bipartition.
/// Both are weakly decreasing; the input must be (1,1)-special.
pub fn tilde_sequences(bp: &Bipartition, level: u64) -> Result<(Vec<u64>, Vec<u64>)> {
    if !is_special(SpecialKind::OneOne, bp) {
        return Err(Error::Precondition(format!(
            "{bp} does not satisfy the (1,1) interleaving inequalities"
        )));
    }
    let (lambda, mu) = (bp.lambda(), bp.mu());
    if lambda.len() as u64 > level + 1 || mu.len() as u64 > level {
        return Err(Error::Level(format!("level {level} is too small for {bp}")));
    }
    let count = (2 * level + 1) as usize;
    let mut z = Vec::with_capacity(count);
    for i in 1..=count {
        let entry = if i % 2 == 1 {
            let row = (i as u64).div_ceil(2);
            lambda.part(row as usize - 1) + level + 1 - row
        } else {
            let row = i as u64 / 2;
            mu.part(row as usize - 1) + level - row
        };
        z.push(entry);
    }
    debug_assert!(z.windows(2).all(|w| w[0] >= w[1]));
    let mut tilde = Vec::with_capacity(count);
    for i in 1..=count {
        let cur = z[i - 1];
        let doubled = if i % 2 == 1 {
            let strictly_below_prev = i == 1 || z[i - 2] > cur;
            if strictly_below_prev {
                2 * cur + 1
            } else {
                2 * cur
            }
        } else {
            let equals_next = cur == z[i];
            if equals_next {
                2 * cur + 1
            } else {
                2 * cur
            }
        };
        tilde.push(doubled);
    }
    Ok((z, tilde))
}

/// Builds the (2,3) symbol of a (1,1)-special bipartition by doubling the
/// entries of its (1,1) symbol, without re-reading the bipartition.
pub fn tilde_transform(bp: &Bipartition, level: u64) -> Result<SymbolMultiset> {
    let (_, tilde) = tilde_sequences(bp, level)?;
    SymbolMultiset::from_entries(
        WeightParams::new(2, 3),
        bp.size(),
        level,
        tilde,
        crate::symbol::ValidityClass::Strict,
    )
}

fn bipartition_labels(n: u64) -> (Vec<Bipartition>, Vec<String>) {
    let items = bipartitions(n);
    let labels = items.iter().map(|bp| bp.to_string()).collect();
    (items, labels)
}

/// The symbol pre-order on all bipartitions of n as a relation.
pub fn order_relation_ab(params: WeightParams, n: u64) -> Result<OrderRelation> {
    params.require_positive_a()?;
    let (items, labels) = bipartition_labels(n);
    let entries: Vec<Vec<u64>> = items
        .iter()
        .map(|bp| SymbolMultiset::from_bipartition(params, bp, n).map(|z| z.entries().to_vec()))
        .collect::<Result<_>>()?;
    let name = format!("preceq_ab(a={}, b={}, n={n})", params.a(), params.b());
    Ok(OrderRelation::from_predicate(name, labels, |i, j| {
        crate::beta::sequence_dominance(&entries[i], &entries[j])
    }))
}

/// The dominance order on all bipartitions of n as a relation.
pub fn order_relation_dominance(n: u64) -> OrderRelation {
    let (items, labels) = bipartition_labels(n);
    OrderRelation::from_predicate(format!("dominance(n={n})"), labels, |i, j| {
        bip_dominance(&items[i], &items[j]).expect("equal sizes by construction")
    })
}

/// Dominance of the beta-set partitions under an (a, b) = (2, odd) weight,
/// over all bipartitions of n.
pub fn order_relation_pi(params: WeightParams, n: u64) -> Result<OrderRelation> {
    let (items, labels) = bipartition_labels(n);
    let images: Vec<Partition> = items
        .iter()
        .map(|bp| pi_map(params, bp))
        .collect::<Result<_>>()?;
    let name = format!("pi_dominance(b={}, n={n})", params.b());
    Ok(OrderRelation::from_predicate(name, labels, |i, j| {
        crate::partition::dominance(&images[i], &images[j], false)
            .expect("beta-set partitions share a size")
    }))
}
