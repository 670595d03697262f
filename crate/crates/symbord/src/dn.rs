//! Labels and the induced order for the index-two reflection subgroup at
//! weight (1,0): restriction labels for unordered component pairs, split
//! labels for equal components, speciality, and the order rule that reduces
//! everything to the weight-(1,0) symbol pre-order plus an equality clause
//! for the two halves of a split label.

use crate::bipartition::{bipartitions, Bipartition};
use crate::biporder::{is_special, preceq_ab, special_in_family_of, SpecialKind};
use crate::error::{Error, Result};
use crate::order::OrderRelation;
use crate::params::WeightParams;
use crate::partition::Partition;

/// The half of a split restriction a label refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A label of the index-two subgroup: the restriction of a component pair.
/// Distinct components restrict irreducibly and the label identifies the
/// two orientations; equal components split into two halves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DnLabel {
    Unsplit(Bipartition),
    Split(Partition, Sign),
}

impl DnLabel {
    /// Builds the label of an unordered pair, storing the canonical
    /// orientation: the (1,0)-special one if either is, otherwise the
    /// lexicographically smaller.
    pub fn unsplit(bp: Bipartition) -> Result<DnLabel> {
        if bp.lambda() == bp.mu() {
            return Err(Error::Precondition(format!(
                "{bp} has equal components; use a split label"
            )));
        }
        Ok(DnLabel::Unsplit(canonical_orientation(bp)))
    }

    pub fn split(half: Partition, sign: Sign) -> DnLabel {
        DnLabel::Split(half, sign)
    }

    /// The bipartition whose restriction the label names.
    pub fn bipartition(&self) -> Bipartition {
        match self {
            DnLabel::Unsplit(bp) => bp.clone(),
            DnLabel::Split(half, _) => Bipartition::new(half.clone(), half.clone()),
        }
    }

    pub fn rank(&self) -> u64 {
        self.bipartition().size()
    }

    /// Parses `[lambda|mu]`, `[lambda|lambda]+`, or `[lambda|lambda]-`.
    pub fn parse(text: &str) -> Result<DnLabel> {
        let rest = text
            .strip_prefix('[')
            .ok_or_else(|| Error::Parse(format!("label {text:?} must start with '['")))?;
        if let Some(inner) = rest.strip_suffix(']') {
            return DnLabel::unsplit(Bipartition::parse(inner)?);
        }
        let (inner, sign) = if let Some(inner) = rest.strip_suffix("]+") {
            (inner, Sign::Plus)
        } else if let Some(inner) = rest.strip_suffix("]-") {
            (inner, Sign::Minus)
        } else {
            return Err(Error::Parse(format!(
                "label {text:?} must end with ']', ']+', or ']-'"
            )));
        };
        let bp = Bipartition::parse(inner)?;
        if bp.lambda() != bp.mu() {
            return Err(Error::Parse(format!(
                "signed label {text:?} needs equal components"
            )));
        }
        Ok(DnLabel::Split(bp.lambda().clone(), sign))
    }
}

impl std::fmt::Display for DnLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DnLabel::Unsplit(bp) => write!(f, "[{bp}]"),
            DnLabel::Split(half, sign) => {
                let bp = Bipartition::new(half.clone(), half.clone());
                write!(f, "[{bp}]{sign}")
            }
        }
    }
}

fn canonical_orientation(bp: Bipartition) -> Bipartition {
    let swapped = bp.swapped();
    if is_special(SpecialKind::OneZero, &bp) {
        bp
    } else if is_special(SpecialKind::OneZero, &swapped) {
        swapped
    } else if bp <= swapped {
        bp
    } else {
        swapped
    }
}

/// All labels at rank n, in enumeration order of their canonical
/// bipartitions: one unsplit label per unordered pair of distinct
/// components, a plus and a minus label per equal pair.
pub fn dn_labels(n: u64) -> Result<Vec<DnLabel>> {
    if n < 2 {
        return Err(Error::Params(format!(
            "the index-two subgroup needs rank at least 2, got {n}"
        )));
    }
    let mut out = Vec::new();
    for bp in bipartitions(n) {
        if bp.lambda() == bp.mu() {
            out.push(DnLabel::Split(bp.lambda().clone(), Sign::Plus));
            out.push(DnLabel::Split(bp.lambda().clone(), Sign::Minus));
        } else if canonical_orientation(bp.clone()) == bp {
            out.push(DnLabel::Unsplit(bp));
        }
    }
    Ok(out)
}

/// A label is special when the underlying pair has a (1,0)-special
/// orientation.
pub fn dn_special(label: &DnLabel) -> bool {
    match label {
        DnLabel::Unsplit(bp) => is_special(SpecialKind::OneZero, bp),
        DnLabel::Split(half, _) => {
            let bp = Bipartition::new(half.clone(), half.clone());
            is_special(SpecialKind::OneZero, &bp)
        }
    }
}

/// The special label in the same family. Split labels are their own
/// representatives; an unsplit label maps to the special member of its
/// weight-(1,0) family, which never has equal components.
pub fn dn_special_representative(label: &DnLabel) -> Result<DnLabel> {
    if dn_special(label) {
        return Ok(label.clone());
    }
    match label {
        DnLabel::Split(half, _) => Err(Error::Internal(format!(
            "split label on {half} is not special; its family should be a singleton"
        ))),
        DnLabel::Unsplit(bp) => {
            let special = special_in_family_of(SpecialKind::OneZero, bp)?;
            DnLabel::unsplit(special)
        }
    }
}

/// The order on labels: both sides are replaced by their family's special
/// label; two halves of the same split pair relate only when identical,
/// everything else follows the weight-(1,0) symbol pre-order of the special
/// bipartitions.
pub fn dn_preceq(low: &DnLabel, high: &DnLabel) -> Result<bool> {
    let low_rep = dn_special_representative(low)?;
    let high_rep = dn_special_representative(high)?;
    if let (DnLabel::Split(s1, g1), DnLabel::Split(s2, g2)) = (&low_rep, &high_rep) {
        if s1 == s2 {
            return Ok(g1 == g2);
        }
    }
    preceq_ab(
        WeightParams::new(1, 0),
        &low_rep.bipartition(),
        &high_rep.bipartition(),
    )
}

/// The order over all labels of rank n as a relation.
pub fn dn_order_relation(n: u64) -> Result<OrderRelation> {
    let items = dn_labels(n)?;
    let labels: Vec<String> = items.iter().map(|l| l.to_string()).collect();
    let mut holds = vec![false; items.len() * items.len()];
    for (i, x) in items.iter().enumerate() {
        for (j, y) in items.iter().enumerate() {
            holds[i * items.len() + j] = dn_preceq(x, y)?;
        }
    }
    Ok(OrderRelation::from_predicate(
        format!("dn_preceq(n={n})"),
        labels,
        |i, j| holds[i * items.len() + j],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biporder::comb_families;

    fn bp(text: &str) -> Bipartition {
        Bipartition::parse(text).unwrap()
    }

    #[test]
    fn label_count_matches_orbit_counting() {
        for n in 2..=6u64 {
            let all = bipartitions(n);
            let equal_pairs = all.iter().filter(|b| b.lambda() == b.mu()).count();
            let expected = (all.len() - equal_pairs) / 2 + 2 * equal_pairs;
            assert_eq!(dn_labels(n).unwrap().len(), expected, "n={n}");
        }
    }

    #[test]
    fn rank_two_has_four_labels_and_odd_ranks_have_no_split() {
        assert_eq!(dn_labels(2).unwrap().len(), 4);
        assert!(dn_labels(3)
            .unwrap()
            .iter()
            .all(|l| matches!(l, DnLabel::Unsplit(_))));
        assert!(dn_labels(1).is_err());
    }

    #[test]
    fn unsplit_stores_the_special_orientation() {
        let label = DnLabel::unsplit(bp("-|2")).unwrap();
        assert_eq!(label, DnLabel::unsplit(bp("2|-")).unwrap());
        assert_eq!(label.bipartition(), bp("2|-"));
        assert!(DnLabel::unsplit(bp("1|1")).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for n in 2..=5u64 {
            for label in dn_labels(n).unwrap() {
                let text = label.to_string();
                assert_eq!(DnLabel::parse(&text).unwrap(), label, "{text}");
            }
        }
        assert_eq!(
            DnLabel::parse("[1|1]+").unwrap(),
            DnLabel::Split(Partition::new(vec![1]), Sign::Plus)
        );
        assert!(DnLabel::parse("[1|2]+").is_err());
        assert!(DnLabel::parse("1|2").is_err());
    }

    #[test]
    fn at_most_one_orientation_is_special() {
        for n in 0..=7u64 {
            for item in bipartitions(n) {
                if item.lambda() == item.mu() {
                    continue;
                }
                let both = is_special(SpecialKind::OneZero, &item)
                    && is_special(SpecialKind::OneZero, &item.swapped());
                assert!(!both, "{item}");
            }
        }
    }

    #[test]
    fn equal_component_families_are_singletons() {
        for n in 0..=6u64 {
            for family in comb_families(WeightParams::new(1, 0), n).unwrap() {
                if family.iter().any(|m| m.lambda() == m.mu()) {
                    assert_eq!(family.len(), 1, "{family:?}");
                }
            }
        }
    }

    #[test]
    fn split_labels_are_always_special() {
        for n in [2u64, 4, 6] {
            for label in dn_labels(n).unwrap() {
                if matches!(label, DnLabel::Split(..)) {
                    assert!(dn_special(&label), "{label}");
                }
            }
        }
    }

    #[test]
    fn unit_label_is_special() {
        assert!(dn_special(&DnLabel::unsplit(bp("4|-")).unwrap()));
    }

    #[test]
    fn split_halves_are_incomparable() {
        let plus = DnLabel::Split(Partition::new(vec![1]), Sign::Plus);
        let minus = DnLabel::Split(Partition::new(vec![1]), Sign::Minus);
        assert!(!dn_preceq(&plus, &minus).unwrap());
        assert!(!dn_preceq(&minus, &plus).unwrap());
        assert!(dn_preceq(&plus, &plus).unwrap());
    }

    #[test]
    fn order_is_reflexive_and_respects_representatives() {
        for n in 2..=5u64 {
            for label in dn_labels(n).unwrap() {
                assert!(dn_preceq(&label, &label).unwrap(), "{label}");
                let rep = dn_special_representative(&label).unwrap();
                assert!(dn_special(&rep));
                assert!(dn_preceq(&label, &rep).unwrap());
                assert!(dn_preceq(&rep, &label).unwrap());
            }
        }
    }

    #[test]
    fn unsplit_comparisons_reduce_to_the_symbol_order() {
        let params = WeightParams::new(1, 0);
        for n in 2..=4u64 {
            for x in bipartitions(n) {
                for y in bipartitions(n) {
                    if x.lambda() == x.mu() || y.lambda() == y.mu() {
                        continue;
                    }
                    if !is_special(SpecialKind::OneZero, &x)
                        || !is_special(SpecialKind::OneZero, &y)
                    {
                        continue;
                    }
                    let lx = DnLabel::unsplit(x.clone()).unwrap();
                    let ly = DnLabel::unsplit(y.clone()).unwrap();
                    assert_eq!(
                        dn_preceq(&lx, &ly).unwrap(),
                        preceq_ab(params, &x, &y).unwrap(),
                        "{x} vs {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn order_on_special_labels_is_antisymmetric() {
        for n in 2..=6u64 {
            let specials: Vec<DnLabel> = dn_labels(n)
                .unwrap()
                .into_iter()
                .filter(dn_special)
                .collect();
            for x in &specials {
                for y in &specials {
                    if x != y {
                        assert!(
                            !(dn_preceq(x, y).unwrap() && dn_preceq(y, x).unwrap()),
                            "{x} and {y}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn predicate_is_already_transitive() {
        for n in 2..=5u64 {
            let items = dn_labels(n).unwrap();
            let rel = dn_order_relation(n).unwrap();
            let mut raw = 0usize;
            for (i, x) in items.iter().enumerate() {
                for (j, y) in items.iter().enumerate() {
                    if i != j && dn_preceq(x, y).unwrap() {
                        raw += 1;
                    }
                }
            }
            assert_eq!(rel.pair_count(), raw, "closure added pairs at n={n}");
        }
    }
}
