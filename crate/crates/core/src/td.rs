//! Teaching sets, distinguishing sets, `TD` and `TD⁺`.
//!
//! A teaching set for `L` must, for every concept `L' ≠ L`, contain an element
//! labelled differently by the two, so its support is a hitting set of the
//! symmetric differences. Minimal teaching sets are therefore computed as
//! minimal distinguishing sets and labelled by membership afterwards. For the
//! positive variant only elements of `L` may be used, and the constraint for
//! `L'` shrinks to `L \ L'`; an empty constraint (`L ⊆ L'`) means no positive
//! teaching set exists.

use crate::class::{ConceptClass, Sample};
use crate::dimension::{sup, Dimension};
use crate::error::{Error, Result};
use crate::hitting::{minimal_hitting_set, Infeasible};
use crate::set::ElementSet;
use alloc::vec::Vec;

/// The hitting-set instance attached to one target concept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSystem {
    pub target: usize,
    /// One constraint per semantically distinct other concept, in class order.
    pub constraints: Vec<ElementSet>,
    /// The concept index each constraint came from.
    pub sources: Vec<usize>,
}

impl DifferenceSystem {
    /// Symmetric differences `L Δ L'` (all nonempty).
    pub fn for_teaching(class: &ConceptClass, target: usize) -> Result<Self> {
        Self::build(class, target, |l, other| l.symmetric_difference(other))
    }

    /// Positive differences `L \ L'`; an empty one signals `TD⁺ = ∞`.
    pub fn for_positive_teaching(class: &ConceptClass, target: usize) -> Result<Self> {
        Self::build(class, target, |l, other| l.difference(other))
    }

    fn build(
        class: &ConceptClass,
        target: usize,
        diff: impl Fn(&ElementSet, &ElementSet) -> ElementSet,
    ) -> Result<Self> {
        class.check_index(target)?;
        let l = class.set(target);
        let mut constraints = Vec::new();
        let mut sources = Vec::new();
        for j in class.distinct_indices() {
            let other = class.set(j);
            if other != l {
                constraints.push(diff(l, other));
                sources.push(j);
            }
        }
        Ok(DifferenceSystem {
            target,
            constraints,
            sources,
        })
    }
}

/// A dimension value together with a minimum witness (absent iff infinite).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Teaching {
    pub dimension: Dimension,
    pub witness: Option<Sample>,
}

/// `D` distinguishes `class[i]`: every concept of a different extension
/// meets `D` differently.
pub fn is_distinguishing_set(class: &ConceptClass, i: usize, d: &ElementSet) -> Result<bool> {
    class.check_index(i)?;
    let l = class.set(i);
    let trace = l.intersection(d);
    Ok(class
        .sets()
        .filter(|c| *c != l)
        .all(|c| c.intersection(d) != trace))
}

/// `D` is distinguishing and no strictly smaller set is.
pub fn is_minimal_distinguishing_set(class: &ConceptClass, i: usize, d: &ElementSet) -> Result<bool> {
    if !is_distinguishing_set(class, i, d)? {
        return Ok(false);
    }
    let td = teaching_dimension(class, i)?.dimension;
    Ok(td == Dimension::Finite(d.len() as u32))
}

/// Some distinguishing set for `class[i]` has at most `d ≥ 1` elements.
pub fn td_at_most(class: &ConceptClass, i: usize, d: u32) -> Result<bool> {
    if d == 0 {
        return Err(Error::ZeroBound);
    }
    Ok(teaching_dimension(class, i)?.dimension.at_most(d))
}

/// `TD(class[i], class)` with the lexicographically least minimum
/// distinguishing set, labelled by membership in the target.
pub fn teaching_dimension(class: &ConceptClass, i: usize) -> Result<Teaching> {
    let sys = DifferenceSystem::for_teaching(class, i)?;
    let h = minimal_hitting_set(&sys.constraints)
        .expect("distinct concepts have a nonempty symmetric difference");
    Ok(Teaching {
        dimension: Dimension::Finite(h.size as u32),
        witness: Some(Sample::labelled_by(class.set(i), &h.witness)),
    })
}

/// `TD⁺(class[i], class)`; infinite iff a concept of a different extension
/// contains `class[i]`.
pub fn positive_teaching_dimension(class: &ConceptClass, i: usize) -> Result<Teaching> {
    let sys = DifferenceSystem::for_positive_teaching(class, i)?;
    Ok(match minimal_hitting_set(&sys.constraints) {
        Ok(h) => Teaching {
            dimension: Dimension::Finite(h.size as u32),
            witness: Some(Sample::positive_only(h.witness)),
        },
        Err(Infeasible { .. }) => Teaching {
            dimension: Dimension::Infinite,
            witness: None,
        },
    })
}

/// `TD` of `class[i]` with respect to the concepts at `remaining` only
/// (the target itself need not be listed).
pub fn teaching_dimension_within(class: &ConceptClass, i: usize, remaining: &[usize], positive: bool) -> Result<Teaching> {
    class.check_index(i)?;
    let mut idx: Vec<usize> = Vec::with_capacity(remaining.len() + 1);
    idx.push(i);
    idx.extend(remaining.iter().copied().filter(|&j| j != i));
    let sub = class.subclass(&idx)?;
    if positive {
        positive_teaching_dimension(&sub, 0)
    } else {
        teaching_dimension(&sub, 0)
    }
}

/// Per-concept `TD` values, in class order.
pub fn td_table(class: &ConceptClass) -> Vec<Teaching> {
    (0..class.len())
        .map(|i| teaching_dimension(class, i).expect("index in range"))
        .collect()
}

/// Per-concept `TD⁺` values, in class order.
pub fn tdplus_table(class: &ConceptClass) -> Vec<Teaching> {
    (0..class.len())
        .map(|i| positive_teaching_dimension(class, i).expect("index in range"))
        .collect()
}

/// `TD(C) = sup_i TD(C_i, C)`.
pub fn td_of_class(class: &ConceptClass) -> Dimension {
    sup(td_table(class).into_iter().map(|t| t.dimension))
}

/// `TD⁺(C) = sup_i TD⁺(C_i, C)`.
pub fn tdplus_of_class(class: &ConceptClass) -> Dimension {
    sup(tdplus_table(class).into_iter().map(|t| t.dimension))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{is_teaching_set, LabeledExample};

    fn class(sets: &[&[u32]]) -> ConceptClass {
        ConceptClass::from_sets(sets.iter().map(|s| ElementSet::from(*s))).unwrap()
    }

    /// `{∅, {1}, …, {n}}` over `{0, …, n}`.
    fn singletons_and_empty(n: u32) -> ConceptClass {
        let mut sets = alloc::vec![ElementSet::new()];
        sets.extend((1..=n).map(|i| ElementSet::from([i])));
        ConceptClass::with_domain(n + 1, sets).unwrap()
    }

    #[test]
    fn distinguishing_examples() {
        let c = class(&[&[1], &[2]]);
        assert!(is_distinguishing_set(&c, 0, &ElementSet::from([1])).unwrap());
        assert!(is_distinguishing_set(&c, 0, &c.domain().elements()).unwrap());
        let single = class(&[&[3, 4]]);
        assert!(is_distinguishing_set(&single, 0, &ElementSet::new()).unwrap());
        assert!(is_minimal_distinguishing_set(&single, 0, &ElementSet::new()).unwrap());
        assert!(is_minimal_distinguishing_set(&c, 0, &ElementSet::from([1])).unwrap());
        assert!(!is_minimal_distinguishing_set(&c, 0, &ElementSet::from([1, 2])).unwrap());
        assert!(matches!(
            is_distinguishing_set(&c, 5, &ElementSet::new()),
            Err(Error::IndexOutOfRange { index: 5, len: 2 })
        ));
    }

    #[test]
    fn duplicates_never_need_distinguishing() {
        let c = class(&[&[1], &[1], &[2]]);
        assert!(is_distinguishing_set(&c, 0, &ElementSet::from([1])).unwrap());
        assert_eq!(teaching_dimension(&c, 1).unwrap().dimension, Dimension::Finite(1));
    }

    #[test]
    fn td_at_most_examples() {
        let c = class(&[&[1], &[2]]);
        assert!(td_at_most(&c, 0, 1).unwrap());
        assert_eq!(td_at_most(&c, 0, 0), Err(Error::ZeroBound));
        let s = singletons_and_empty(3);
        assert!(!td_at_most(&s, 0, 2).unwrap());
        assert!(td_at_most(&s, 0, 3).unwrap());
    }

    #[test]
    fn singletons_plus_empty() {
        for n in 1..=6 {
            let s = singletons_and_empty(n);
            let table = td_table(&s);
            assert_eq!(table[0].dimension, Dimension::Finite(n));
            for t in &table[1..] {
                assert_eq!(t.dimension, Dimension::Finite(1));
            }
            for (i, t) in table.iter().enumerate() {
                assert!(is_teaching_set(&s, i, t.witness.as_ref().unwrap()));
            }
        }
        assert_eq!(td_of_class(&singletons_and_empty(3)), Dimension::Finite(3));
    }

    #[test]
    fn single_concept_class() {
        let c = class(&[&[0, 1]]);
        let t = teaching_dimension(&c, 0).unwrap();
        assert_eq!(t.dimension, Dimension::ZERO);
        assert!(t.witness.unwrap().is_empty());
        assert_eq!(positive_teaching_dimension(&c, 0).unwrap().dimension, Dimension::ZERO);
    }

    #[test]
    fn positive_examples() {
        let c = class(&[&[1], &[1, 2]]);
        let t = positive_teaching_dimension(&c, 0).unwrap();
        assert_eq!(t.dimension, Dimension::Infinite);
        assert!(t.witness.is_none());
        assert_eq!(tdplus_of_class(&c), Dimension::Infinite);
        let top = positive_teaching_dimension(&c, 1).unwrap();
        assert_eq!(top.dimension, Dimension::Finite(1));
        assert_eq!(top.witness.unwrap().examples(), alloc::vec![LabeledExample::positive(2)]);

        let pair = class(&[&[1], &[2]]);
        assert_eq!(td_of_class(&pair), Dimension::Finite(1));
        assert_eq!(tdplus_of_class(&pair), Dimension::Finite(1));
    }

    #[test]
    fn negative_labels_in_witness() {
        let s = singletons_and_empty(2);
        let w = teaching_dimension(&s, 0).unwrap().witness.unwrap();
        assert_eq!(
            w.examples(),
            alloc::vec![LabeledExample::negative(1), LabeledExample::negative(2)]
        );
    }
}
