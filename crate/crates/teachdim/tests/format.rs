use proptest::prelude::*;
use teachdim::format::{parse_class, parse_sequence, write_class, write_sequence};
use teachdim_core::rtd::canonical_sequence;
use teachdim_core::{Concept, ConceptClass, Domain, ElementSet};

fn class_strategy() -> impl Strategy<Value = ConceptClass> {
    (1u32..12).prop_flat_map(|m| {
        prop::collection::vec(prop::collection::btree_set(0..m, 0..=m as usize), 1..7).prop_map(move |sets| {
            let concepts = sets
                .into_iter()
                .enumerate()
                .map(|(i, s)| Concept::new(format!("c_{i}"), s.into_iter().collect::<ElementSet>()))
                .collect();
            ConceptClass::new(Domain::new(m).unwrap(), concepts).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn emit_then_parse_is_identity(c in class_strategy(), manifest in proptest::option::of("[a-z]{1,6}( [a-z]=[0-9]{1,3}){0,3}")) {
        let text = write_class(&c, manifest.as_deref());
        let parsed = parse_class(&text).unwrap();
        prop_assert_eq!(&parsed.class, &c);
        prop_assert_eq!(parsed.manifest.as_deref(), manifest.as_deref());
        prop_assert_eq!(write_class(&parsed.class, parsed.manifest.as_deref()), text);
    }

    #[test]
    fn whitespace_and_comments_normalize(c in class_strategy()) {
        let text = write_class(&c, None);
        let noisy: String = text
            .lines()
            .map(|l| format!("  {}  \n# note\n\n", l.replace(' ', "   ")))
            .collect();
        prop_assert_eq!(write_class(&parse_class(&noisy).unwrap().class, None), text);
    }

    #[test]
    fn sequences_round_trip(c in class_strategy(), positive in any::<bool>()) {
        let seq = canonical_sequence(&c, positive);
        let text = write_sequence(&c, &seq);
        let back = parse_sequence(&text, &c).unwrap().to_sequence(&c, positive).unwrap();
        prop_assert_eq!(back, seq);
    }
}
