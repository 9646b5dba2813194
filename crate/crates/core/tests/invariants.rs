use proptest::prelude::*;
use teachdim_core::class::is_teaching_set;
use teachdim_core::rtd::{rtd1plus, rtd1plus_at_most};
use teachdim_core::td::{
    is_distinguishing_set, is_minimal_distinguishing_set, positive_teaching_dimension, td_at_most, td_of_class,
    teaching_dimension, tdplus_of_class,
};
use teachdim_core::xtd::{xtd_of_class, xtdplus_of_class};
use teachdim_core::{ConceptClass, Dimension, ElementSet};

fn class_strategy(max_concepts: usize, max_domain: u32) -> impl Strategy<Value = ConceptClass> {
    (1..=max_domain).prop_flat_map(move |m| {
        prop::collection::vec(prop::collection::btree_set(0..m, 0..=m as usize), 1..=max_concepts).prop_map(
            move |sets| ConceptClass::with_domain(m, sets.into_iter().map(|s| s.into_iter().collect::<ElementSet>())).unwrap(),
        )
    })
}

fn subset_strategy(max_domain: u32) -> impl Strategy<Value = ElementSet> {
    prop::collection::btree_set(0..max_domain, 0..=max_domain as usize).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn minimal_distinguishing_implies_distinguishing(c in class_strategy(6, 8), d in subset_strategy(8)) {
        let d = d.truncated(c.domain().size());
        for i in 0..c.len() {
            if is_minimal_distinguishing_set(&c, i, &d).unwrap() {
                prop_assert!(is_distinguishing_set(&c, i, &d).unwrap());
            }
        }
    }

    #[test]
    fn td_at_most_is_monotone(c in class_strategy(6, 8)) {
        for i in 0..c.len() {
            let answers: Vec<bool> = (1..=c.domain().size().max(1)).map(|d| td_at_most(&c, i, d).unwrap()).collect();
            prop_assert!(answers.windows(2).all(|w| !w[0] || w[1]));
            prop_assert!(*answers.last().unwrap());
        }
    }

    #[test]
    fn witnesses_teach_and_are_minimal(c in class_strategy(6, 8)) {
        for i in 0..c.len() {
            let t = teaching_dimension(&c, i).unwrap();
            let w = t.witness.unwrap();
            prop_assert!(is_teaching_set(&c, i, &w));
            prop_assert_eq!(t.dimension, Dimension::Finite(w.len() as u32));
            prop_assert!(is_minimal_distinguishing_set(&c, i, &w.support()).unwrap());
        }
    }

    #[test]
    fn positive_never_cheaper(c in class_strategy(6, 8)) {
        for i in 0..c.len() {
            prop_assert!(positive_teaching_dimension(&c, i).unwrap().dimension >= teaching_dimension(&c, i).unwrap().dimension);
        }
        prop_assert!(tdplus_of_class(&c) >= td_of_class(&c));
    }

    #[test]
    fn duplicates_change_nothing(c in class_strategy(5, 7)) {
        let d = c.deduplicated();
        prop_assert_eq!(td_of_class(&c), td_of_class(&d));
        prop_assert_eq!(tdplus_of_class(&c), tdplus_of_class(&d));
        prop_assert_eq!(rtd1plus(&c).0, rtd1plus(&d).0);
        prop_assert_eq!(xtdplus_of_class(&c).dimension, xtdplus_of_class(&d).dimension);
    }

    #[test]
    fn greedy_decision_is_monotone(c in class_strategy(6, 6)) {
        let (v, _) = rtd1plus(&c);
        for n in 0..=6u32 {
            prop_assert_eq!(rtd1plus_at_most(&c, n).success, v.at_most(n));
        }
    }

    #[test]
    fn xtd_bounds_td(c in class_strategy(5, 7)) {
        // Each concept is itself a hypothesis, and a specifying set for it is
        // a distinguishing set.
        prop_assert!(xtd_of_class(&c).unwrap().dimension >= td_of_class(&c));
    }
}
