//! The representation layer on bipartition labels: sign twisting, induction
//! constituents by vertical strips, a-preserving induction, the recursively
//! generated pre-order on labels, and its families.
//!
//! Key functions:
//! - `sgn_tensor`: the conjugate-swap involution.
//! - `pieri_constituents`: labels reached by increasing l distinct parts.
//! - `leads_to`: constituents whose a-invariant matches the induced one.
//! - `PreceqLTable::build`: the rank-by-rank generated pre-order, with a
//!   provenance log of the elementary pairs.
//! - `lusztig_families` / `a_invariant`: families and a-values in every
//!   parameter regime, including a = 0.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::bipartition::{bipartitions, Bipartition};
use crate::biporder::{a_ab, comb_families};
use crate::error::{Error, Result};
use crate::order::OrderRelation;
use crate::params::WeightParams;
use crate::partition::Partition;
use crate::symbol::SymbolMultiset;

/// Tensoring with the sign character swaps the components and conjugates
/// both. An involution.
pub fn sgn_tensor(bp: &Bipartition) -> Bipartition {
    Bipartition::new(bp.mu().conjugate(), bp.lambda().conjugate())
}

/// All partitions obtained from `p` by adding a vertical strip of exactly
/// `strip` boxes: each part (zero parts included) grows by at most one.
fn vertical_strip_additions(p: &Partition, strip: u64) -> Vec<Partition> {
    let rows = p.len() + strip as usize;
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::with_capacity(rows);
    fn descend(
        p: &Partition,
        rows: usize,
        row: usize,
        remaining: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if remaining == 0 {
                out.push(Partition::new(current.clone()));
            }
            return;
        }
        let base = p.part(row);
        for add in 0..=remaining.min(1) {
            let value = base + add;
            if row > 0 && value > current[row - 1] {
                continue;
            }
            current.push(value);
            descend(p, rows, row + 1, remaining - add, current, out);
            current.pop();
        }
    }
    descend(p, rows, 0, strip, &mut current, &mut out);
    out
}

/// All bipartitions of |small| + l obtained by increasing l distinct parts
/// of `small` by one, zero parts included; sorted for determinism.
pub fn pieri_constituents(small: &Bipartition, l: u64) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for to_lambda in 0..=l {
        for lambda in vertical_strip_additions(small.lambda(), to_lambda) {
            for mu in vertical_strip_additions(small.mu(), l - to_lambda) {
                out.push(Bipartition::new(lambda.clone(), mu));
            }
        }
    }
    out.sort();
    out
}

/// True when `big` is a constituent of inducing `small` against the sign
/// character of an l-row factor, with its a-invariant forced to equal
/// a(small) plus l(l-1)/2 times a. When this holds, the symbol of `big`
/// equals the symbol of `small` with the largest l entries raised.
pub fn leads_to(
    params: WeightParams,
    small: &Bipartition,
    l: u64,
    big: &Bipartition,
) -> Result<bool> {
    params.require_positive_a()?;
    if small.size() + l != big.size() {
        return Err(Error::RankMismatch(format!(
            "need |{small}| + {l} = |{big}|"
        )));
    }
    if !pieri_constituents(small, l).contains(big) {
        return Ok(false);
    }
    let induced_a = a_ab(params, small)? + (l * (l - 1) / 2 * params.a()) as i64;
    let holds = induced_a == a_ab(params, big)?;
    #[cfg(debug_assertions)]
    if holds {
        let level = big.size();
        let raised = SymbolMultiset::from_bipartition(params, small, level)
            .and_then(|z| z.hat_increase(l))
            .expect("constituent symbols share a level");
        let direct = SymbolMultiset::from_bipartition(params, big, level)
            .expect("constituent symbols share a level");
        debug_assert_eq!(raised.entries(), direct.entries());
    }
    Ok(holds)
}

/// Which side of an elementary pair was matched directly and which through
/// the sign twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepCase {
    Plain,
    SignTwisted,
}

/// One generating pair of the pre-order at some rank, with the lower-rank
/// pair that produced it.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub k: u64,
    pub l: u64,
    pub m_low: Bipartition,
    pub m_high: Bipartition,
    pub case: StepCase,
    pub from: Bipartition,
    pub to: Bipartition,
}

/// The generated pre-order on labels for every rank up to n under one
/// weight, together with the first-witness provenance of each generating
/// pair at the top rank.
pub struct PreceqLTable {
    params: WeightParams,
    ranks: Vec<OrderRelation>,
    steps: Vec<StepRecord>,
}

impl PreceqLTable {
    /// Builds the pre-order rank by rank. For a positive first weight the
    /// rank-m relation is generated from every related pair of each lower
    /// rank k = m - l: directly, by pairing constituents of the low label
    /// with a-preserving constituents of the high one, and through the
    /// sign twist, which reverses the roles. For a = 0 < b the relation
    /// compares second-component sizes; for a = b = 0 it is total.
    pub fn build(params: WeightParams, n: u64) -> PreceqLTable {
        if params.a() == 0 {
            return PreceqLTable::build_degenerate(params, n);
        }
        let mut a_cache: HashMap<Bipartition, i64> = HashMap::new();
        for m in 0..=n {
            for bp in bipartitions(m) {
                let value = a_ab(params, &bp).expect("positive a");
                a_cache.insert(bp, value);
            }
        }
        let mut ranks: Vec<OrderRelation> = Vec::with_capacity(n as usize + 1);
        let mut steps = Vec::new();
        for m in 0..=n {
            let items = bipartitions(m);
            let labels: Vec<String> = items.iter().map(|bp| bp.to_string()).collect();
            let index: HashMap<&Bipartition, usize> =
                items.iter().enumerate().map(|(i, bp)| (bp, i)).collect();
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            let mut seen = vec![false; items.len() * items.len()];
            let mut records = Vec::new();
            for l in 1..=m {
                let k = m - l;
                let lower = &ranks[k as usize];
                let lower_items = bipartitions(k);
                let step_a = (l * (l - 1) / 2 * params.a()) as i64;
                for (i, m_low) in lower_items.iter().enumerate() {
                    let low_constituents = pieri_constituents(m_low, l);
                    for (j, m_high) in lower_items.iter().enumerate() {
                        if !lower.holds(i, j) {
                            continue;
                        }
                        let target_a = a_cache[m_high] + step_a;
                        let high_leads: Vec<&Bipartition> = pieri_constituents(m_high, l)
                            .iter()
                            .filter(|e| a_cache[*e] == target_a)
                            .map(|e| &items[index[e]])
                            .collect();
                        for from in &low_constituents {
                            for &to in &high_leads {
                                let (fi, ti) = (index[from], index[to]);
                                if !seen[fi * items.len() + ti] {
                                    seen[fi * items.len() + ti] = true;
                                    pairs.push((fi, ti));
                                    records.push(StepRecord {
                                        k,
                                        l,
                                        m_low: m_low.clone(),
                                        m_high: m_high.clone(),
                                        case: StepCase::Plain,
                                        from: from.clone(),
                                        to: to.clone(),
                                    });
                                }
                                let twisted_from = sgn_tensor(to);
                                let twisted_to = sgn_tensor(from);
                                let (fi, ti) = (index[&twisted_from], index[&twisted_to]);
                                if !seen[fi * items.len() + ti] {
                                    seen[fi * items.len() + ti] = true;
                                    pairs.push((fi, ti));
                                    records.push(StepRecord {
                                        k,
                                        l,
                                        m_low: m_low.clone(),
                                        m_high: m_high.clone(),
                                        case: StepCase::SignTwisted,
                                        from: twisted_from,
                                        to: twisted_to,
                                    });
                                }
                            }
                        }
                    }
                }
            }
            let name = relation_name(params, m);
            let relation =
                OrderRelation::from_pairs(name, labels, pairs).expect("indices are in range");
            if m == n {
                steps = records;
            }
            ranks.push(relation);
        }
        PreceqLTable {
            params,
            ranks,
            steps,
        }
    }

    fn build_degenerate(params: WeightParams, n: u64) -> PreceqLTable {
        let total = params.b() == 0;
        let ranks = (0..=n)
            .map(|m| {
                let items = bipartitions(m);
                let labels: Vec<String> = items.iter().map(|bp| bp.to_string()).collect();
                OrderRelation::from_predicate(relation_name(params, m), labels, |i, j| {
                    total || items[i].mu().size() >= items[j].mu().size()
                })
            })
            .collect();
        PreceqLTable {
            params,
            ranks,
            steps: Vec::new(),
        }
    }

    pub fn params(&self) -> WeightParams {
        self.params
    }

    /// The relation at rank k.
    pub fn relation(&self, k: u64) -> &OrderRelation {
        &self.ranks[k as usize]
    }

    /// The relation at the rank the table was built for.
    pub fn top(&self) -> &OrderRelation {
        self.ranks.last().expect("ranks are never empty")
    }

    /// First-witness provenance of the top rank's generating pairs.
    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    /// The top relation's JSON with a provenance array attached.
    pub fn to_json(&self) -> Value {
        let mut value = self.top().to_json();
        let provenance: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                json!({
                    "k": s.k,
                    "l": s.l,
                    "M": s.m_low.to_string(),
                    "Mprime": s.m_high.to_string(),
                    "case": match s.case {
                        StepCase::Plain => "I",
                        StepCase::SignTwisted => "II",
                    },
                    "E": s.from.to_string(),
                    "Eprime": s.to.to_string(),
                })
            })
            .collect();
        value
            .as_object_mut()
            .expect("relation JSON is an object")
            .insert("provenance".into(), Value::Array(provenance));
        value
    }
}

fn relation_name(params: WeightParams, m: u64) -> String {
    format!("preceq_L(a={}, b={}, n={m})", params.a(), params.b())
}

/// The a-invariant in every parameter regime: the symbol value for a > 0,
/// b times the second-component size for a = 0.
pub fn a_invariant(params: WeightParams, bp: &Bipartition) -> i64 {
    if params.a() == 0 {
        (params.b() * bp.mu().size()) as i64
    } else {
        a_ab(params, bp).expect("positive a")
    }
}

/// Families of labels at rank n: symbol-multiset classes for a > 0,
/// second-component-size classes for a = 0 < b, one class for a = b = 0.
pub fn lusztig_families(params: WeightParams, n: u64) -> Vec<Vec<Bipartition>> {
    if params.a() > 0 {
        return comb_families(params, n).expect("positive a");
    }
    if params.b() == 0 {
        return vec![bipartitions(n)];
    }
    let mut sizes: Vec<u64> = Vec::new();
    let mut groups: Vec<Vec<Bipartition>> = Vec::new();
    for bp in bipartitions(n) {
        let key = bp.mu().size();
        match sizes.iter().position(|&s| s == key) {
            Some(idx) => groups[idx].push(bp),
            None => {
                sizes.push(key);
                groups.push(vec![bp]);
            }
        }
    }
    groups
}
