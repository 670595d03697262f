//! Randomized structural invariants complementing the exhaustive suites:
//! round-trips, shift and level independence, order axioms, and the
//! algebraic symmetries of the invariants.

use proptest::prelude::*;

use symbord::biporder::{omega, order_relation_ab, preceq_ab};
use symbord::dn::{dn_labels, dn_order_relation, dn_preceq, dn_special_representative};
use symbord::partition::dominance;
use symbord::rep::{a_invariant, lusztig_families, pieri_constituents, sgn_tensor, PreceqLTable};
use symbord::symbol::SymbolMultiset;
use symbord::{Bipartition, OrderRelation, Partition, WeightParams};

fn partition_strategy(max_part: u64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::new)
}

fn bipartition_strategy() -> impl Strategy<Value = Bipartition> {
    (partition_strategy(4, 3), partition_strategy(4, 3))
        .prop_map(|(lambda, mu)| Bipartition::new(lambda, mu))
}

fn weight_strategy() -> impl Strategy<Value = WeightParams> {
    (1u64..=3, 0u64..=4).prop_map(|(a, b)| WeightParams::new(a, b))
}

fn any_weight_strategy() -> impl Strategy<Value = WeightParams> {
    (0u64..=3, 0u64..=4).prop_map(|(a, b)| WeightParams::new(a, b))
}

fn symbol_strategy() -> impl Strategy<Value = SymbolMultiset> {
    (weight_strategy(), bipartition_strategy(), 0u64..=2).prop_map(|(params, bp, extra)| {
        let level = SymbolMultiset::minimal_level(params, &bp).unwrap() + extra;
        SymbolMultiset::from_bipartition(params, &bp, level).unwrap()
    })
}

proptest! {
    #[test]
    fn bipartition_display_parse_round_trip(bp in bipartition_strategy()) {
        let back = Bipartition::parse(&bp.to_string()).unwrap();
        prop_assert_eq!(back, bp);
    }

    #[test]
    fn symbol_json_round_trip(z in symbol_strategy()) {
        let back = SymbolMultiset::from_json(&z.to_json()).unwrap();
        prop_assert_eq!(back.entries(), z.entries());
        prop_assert_eq!(back.params(), z.params());
        prop_assert_eq!(back.level(), z.level());
    }

    #[test]
    fn shift_preserves_equivalence_and_a_invariant(z in symbol_strategy()) {
        let shifted = z.shift();
        prop_assert!(z.equivalent(&shifted).unwrap());
        prop_assert_eq!(shifted.a_invariant().unwrap(), z.a_invariant().unwrap());
        let unshifted = shifted.unshift().unwrap();
        prop_assert_eq!(unshifted.entries(), z.entries());
    }

    #[test]
    fn a_invariant_is_level_independent(
        params in weight_strategy(),
        bp in bipartition_strategy(),
        extra in 1u64..=3,
    ) {
        let low = SymbolMultiset::minimal_level(params, &bp).unwrap();
        let z = SymbolMultiset::from_bipartition(params, &bp, low).unwrap();
        let w = SymbolMultiset::from_bipartition(params, &bp, low + extra).unwrap();
        prop_assert_eq!(z.a_invariant().unwrap(), w.a_invariant().unwrap());
        prop_assert_eq!(z.a_invariant().unwrap(), a_invariant(params, &bp));
    }

    #[test]
    fn symbol_dominance_is_reflexive_and_transitive(
        params in weight_strategy(),
        n in 0u64..=4,
        seed in any::<u64>(),
    ) {
        let ground = symbord::bipartition::bipartitions(n);
        let level = ground
            .iter()
            .map(|bp| SymbolMultiset::minimal_level(params, bp).unwrap())
            .max()
            .unwrap_or(0);
        let symbols: Vec<SymbolMultiset> = ground
            .iter()
            .map(|bp| SymbolMultiset::from_bipartition(params, bp, level).unwrap())
            .collect();
        let k = symbols.len();
        let pick = |s: u64| &symbols[(s % k as u64) as usize];
        let (x, y, z) = (pick(seed), pick(seed / 7), pick(seed / 49));
        prop_assert!(x.dominated_by(x).unwrap());
        if x.dominated_by(y).unwrap() && y.dominated_by(z).unwrap() {
            prop_assert!(x.dominated_by(z).unwrap());
        }
        if x.dominated_by(y).unwrap() && y.dominated_by(x).unwrap() {
            prop_assert_eq!(x.entries(), y.entries());
        }
    }

    #[test]
    fn conjugation_reverses_dominance_on_samples(
        params in weight_strategy(),
        n in 0u64..=5,
        seed in any::<u64>(),
    ) {
        let ground = symbord::bipartition::bipartitions(n);
        let level = n;
        let symbols: Vec<SymbolMultiset> = ground
            .iter()
            .map(|bp| SymbolMultiset::from_bipartition(params, bp, level).unwrap())
            .collect();
        let k = symbols.len() as u64;
        let x = &symbols[(seed % k) as usize];
        let y = &symbols[((seed / 11) % k) as usize];
        if x.dominated_by(y).unwrap() {
            let t = x.minimal_conjugation_level().max(y.minimal_conjugation_level());
            let xc = x.conjugate(Some(t)).unwrap();
            let yc = y.conjugate(Some(t)).unwrap();
            prop_assert!(yc.dominated_by(&xc).unwrap());
        }
    }

    #[test]
    fn bipartition_order_is_reflexive_and_transitive(
        params in weight_strategy(),
        x in bipartition_strategy(),
        y in bipartition_strategy(),
        z in bipartition_strategy(),
    ) {
        prop_assert!(preceq_ab(params, &x, &x).unwrap());
        let total = x.size() == y.size() && y.size() == z.size();
        if total
            && preceq_ab(params, &x, &y).unwrap()
            && preceq_ab(params, &y, &z).unwrap()
        {
            prop_assert!(preceq_ab(params, &x, &z).unwrap());
        }
    }

    #[test]
    fn families_partition_the_rank(params in any_weight_strategy(), n in 0u64..=5) {
        let families = lusztig_families(params, n);
        let mut seen: Vec<String> = families
            .iter()
            .flat_map(|family| family.iter().map(Bipartition::to_string))
            .collect();
        seen.sort();
        let mut all: Vec<String> = symbord::bipartition::bipartitions(n)
            .iter()
            .map(Bipartition::to_string)
            .collect();
        all.sort();
        prop_assert_eq!(seen, all);
        for family in &families {
            let a0 = a_invariant(params, &family[0]);
            for bp in family {
                prop_assert_eq!(a_invariant(params, bp), a0);
            }
        }
    }

    #[test]
    fn sign_twist_is_an_involution_and_swaps_omega(bp in bipartition_strategy()) {
        let twisted = sgn_tensor(&bp);
        prop_assert_eq!(sgn_tensor(&twisted), bp.clone());
        prop_assert_eq!(twisted.size(), bp.size());
        let params = WeightParams::new(1, 1);
        prop_assert_eq!(omega(params, &twisted), -omega(params, &bp));
    }

    #[test]
    fn pieri_constituents_have_the_right_rank(
        bp in bipartition_strategy(),
        l in 0u64..=3,
    ) {
        let constituents = pieri_constituents(&bp, l);
        for c in &constituents {
            prop_assert_eq!(c.size(), bp.size() + l);
        }
        let mut labels: Vec<String> = constituents.iter().map(Bipartition::to_string).collect();
        labels.sort();
        labels.dedup();
        prop_assert_eq!(labels.len(), constituents.len());
    }

    #[test]
    fn order_relation_json_round_trip(params in weight_strategy(), n in 0u64..=4) {
        let rel = order_relation_ab(params, n).unwrap();
        let back = OrderRelation::from_json(&rel.to_json(), rel.name()).unwrap();
        prop_assert!(rel.same_pairs(&back).unwrap());
    }

    #[test]
    fn hasse_reconstructs_the_relation(params in weight_strategy(), n in 0u64..=4) {
        let rel = order_relation_ab(params, n).unwrap();
        let (classes, edges) = rel.hasse();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let mut class_of = vec![0usize; rel.len()];
        for (c, class) in classes.iter().enumerate() {
            for &i in class {
                class_of[i] = c;
            }
        }
        for &(u, v) in &edges {
            pairs.push((classes[u][0], classes[v][0]));
        }
        for class in &classes {
            for &i in class {
                pairs.push((class[0], i));
                pairs.push((i, class[0]));
            }
        }
        let labels: Vec<String> = rel.labels().to_vec();
        let rebuilt = OrderRelation::from_pairs(rel.name(), labels, pairs).unwrap();
        prop_assert!(rebuilt.same_pairs(&rel).unwrap());
        for &(u, v) in &edges {
            prop_assert!(u != v);
            prop_assert!(class_of[classes[u][0]] != class_of[classes[v][0]]);
        }
    }

    #[test]
    fn induced_order_is_monotone_in_rank_prefixes(
        params in weight_strategy(),
        n in 1u64..=3,
    ) {
        let table = PreceqLTable::build(params, n);
        let fresh = PreceqLTable::build(params, n - 1);
        prop_assert!(table.relation(n - 1).same_pairs(fresh.top()).unwrap());
    }

    #[test]
    fn dominance_allows_prefix_padding(
        p in partition_strategy(4, 3),
        q in partition_strategy(4, 3),
    ) {
        if p.size() == q.size() {
            let le = dominance(&p, &q, false).unwrap();
            let padded = dominance(&p, &q, true).unwrap();
            prop_assert_eq!(le, padded);
        }
        prop_assert!(dominance(&p, &p, false).unwrap());
    }
}

#[test]
fn dn_labels_parse_and_order_is_consistent() {
    for n in [2u64, 3, 4, 6] {
        let labels = dn_labels(n).unwrap();
        for label in &labels {
            let back = symbord::dn::DnLabel::parse(&label.to_string()).unwrap();
            assert_eq!(&back, label);
            let rep = dn_special_representative(label).unwrap();
            assert_eq!(rep.rank(), label.rank());
            assert!(dn_preceq(label, label).unwrap());
        }
        let rel = dn_order_relation(n).unwrap();
        assert_eq!(rel.len(), labels.len());
        for x in &labels {
            for y in &labels {
                for z in &labels {
                    let xy = dn_preceq(x, y).unwrap();
                    let yz = dn_preceq(y, z).unwrap();
                    if xy && yz {
                        assert!(dn_preceq(x, z).unwrap(), "{x} {y} {z}");
                    }
                }
            }
        }
    }
}
