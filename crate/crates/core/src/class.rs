//! Finite concept classes, labelled examples and samples.
//!
//! Concepts are compared by extension everywhere: two concepts with the same
//! element set are the same concept for every dimension computed in this
//! crate, whatever their names.

use crate::coding::join;
use crate::error::{Error, Result};
use crate::set::ElementSet;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// The finite instance space `{0, …, size - 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Domain {
    size: u32,
}

impl Domain {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyDomain);
        }
        Ok(Domain { size })
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.size
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Concept {
    pub name: String,
    pub elements: ElementSet,
}

impl Concept {
    pub fn new(name: impl Into<String>, elements: impl Into<ElementSet>) -> Self {
        Concept {
            name: name.into(),
            elements: elements.into(),
        }
    }
}

/// Names may not be empty or contain whitespace or `:`; this keeps the text
/// format unambiguous.
pub fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == ':' || c == '#')
}

/// An ordered, named list of concepts over a fixed domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConceptClass {
    domain: Domain,
    concepts: Vec<Concept>,
}

impl ConceptClass {
    pub fn new(domain: Domain, concepts: Vec<Concept>) -> Result<Self> {
        if concepts.is_empty() {
            return Err(Error::EmptyClass);
        }
        let mut seen = BTreeMap::new();
        for c in &concepts {
            if !valid_name(&c.name) {
                return Err(Error::InvalidName(c.name.clone()));
            }
            if seen.insert(c.name.as_str(), ()).is_some() {
                return Err(Error::DuplicateName(c.name.clone()));
            }
            if let Some(max) = c.elements.last() {
                if !domain.contains(max) {
                    return Err(Error::ElementOutOfDomain {
                        concept: c.name.clone(),
                        element: max,
                        domain: domain.size(),
                    });
                }
            }
        }
        Ok(ConceptClass { domain, concepts })
    }

    /// Builds a class from bare sets, naming them `c0, c1, …` and sizing the
    /// domain to fit (at least 1).
    pub fn from_sets<I, S>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<ElementSet>,
    {
        let concepts: Vec<Concept> = sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| Concept::new(format!("c{i}"), s))
            .collect();
        let size = concepts
            .iter()
            .filter_map(|c| c.elements.last())
            .max()
            .map_or(1, |m| m + 1);
        ConceptClass::new(Domain::new(size)?, concepts)
    }

    /// Like [`ConceptClass::from_sets`] with an explicit domain size.
    pub fn with_domain<I, S>(size: u32, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<ElementSet>,
    {
        let concepts = sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| Concept::new(format!("c{i}"), s))
            .collect();
        ConceptClass::new(Domain::new(size)?, concepts)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn concepts(&self) -> &[Concept] {
        &self.concepts
    }

    pub fn concept(&self, i: usize) -> Result<&Concept> {
        self.concepts.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.concepts.len(),
        })
    }

    pub fn set(&self, i: usize) -> &ElementSet {
        &self.concepts[i].elements
    }

    pub fn sets(&self) -> impl Iterator<Item = &ElementSet> + '_ {
        self.concepts.iter().map(|c| &c.elements)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.concepts.iter().position(|c| c.name == name)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        self.concept(i).map(|_| ())
    }

    /// Indices of the first occurrence of each distinct extension, in order.
    pub fn distinct_indices(&self) -> Vec<usize> {
        let mut seen: Vec<&ElementSet> = Vec::new();
        let mut out = Vec::new();
        for (i, c) in self.concepts.iter().enumerate() {
            if !seen.contains(&&c.elements) {
                seen.push(&c.elements);
                out.push(i);
            }
        }
        out
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct_indices().len()
    }

    /// A copy with extensional duplicates removed (first occurrence kept).
    pub fn deduplicated(&self) -> ConceptClass {
        let concepts = self
            .distinct_indices()
            .into_iter()
            .map(|i| self.concepts[i].clone())
            .collect();
        ConceptClass {
            domain: self.domain,
            concepts,
        }
    }

    /// The subclass on the given indices, in the given order.
    pub fn subclass(&self, indices: &[usize]) -> Result<ConceptClass> {
        let concepts = indices
            .iter()
            .map(|&i| self.concept(i).cloned())
            .collect::<Result<Vec<_>>>()?;
        ConceptClass::new(self.domain, concepts)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledExample {
    pub element: u32,
    pub label: Label,
}

impl LabeledExample {
    pub fn positive(element: u32) -> Self {
        LabeledExample { element, label: Label::Positive }
    }

    pub fn negative(element: u32) -> Self {
        LabeledExample { element, label: Label::Negative }
    }
}

/// A set of labelled examples with no element carrying both labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Sample {
    positive: ElementSet,
    negative: ElementSet,
}

impl Sample {
    pub fn new(examples: impl IntoIterator<Item = LabeledExample>) -> Result<Self> {
        let mut s = Sample::default();
        for ex in examples {
            match ex.label {
                Label::Positive => s.positive.insert(ex.element),
                Label::Negative => s.negative.insert(ex.element),
            };
            if s.positive.contains(ex.element) && s.negative.contains(ex.element) {
                return Err(Error::ConflictingLabels(ex.element));
            }
        }
        Ok(s)
    }

    /// Labels every element of `support` by membership in `target`.
    pub fn labelled_by(target: &ElementSet, support: &ElementSet) -> Sample {
        Sample {
            positive: support.intersection(target),
            negative: support.difference(target),
        }
    }

    pub fn positive_only(support: ElementSet) -> Sample {
        Sample {
            positive: support,
            negative: ElementSet::new(),
        }
    }

    /// `T⁺`.
    pub fn positives(&self) -> &ElementSet {
        &self.positive
    }

    /// `T⁻`.
    pub fn negatives(&self) -> &ElementSet {
        &self.negative
    }

    /// `X(T) = T⁺ ∪ T⁻`.
    pub fn support(&self) -> ElementSet {
        self.positive.union(&self.negative)
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }

    /// Examples ordered by element.
    pub fn examples(&self) -> Vec<LabeledExample> {
        let mut out: Vec<_> = self
            .positive
            .iter()
            .map(LabeledExample::positive)
            .chain(self.negative.iter().map(LabeledExample::negative))
            .collect();
        out.sort();
        out
    }

    pub fn without(&self, element: u32) -> Sample {
        let mut s = self.clone();
        s.positive.remove(element);
        s.negative.remove(element);
        s
    }
}

/// `T⁺ ⊆ L` and `T⁻ ∩ L = ∅`.
pub fn consistent(concept: &ElementSet, sample: &Sample) -> bool {
    sample.positive.is_subset(concept) && sample.negative.is_disjoint(concept)
}

/// True iff `sample` is consistent with `class[i]` and with no concept of a
/// different extension.
pub fn is_teaching_set(class: &ConceptClass, i: usize, sample: &Sample) -> bool {
    let target = class.set(i);
    consistent(target, sample)
        && class
            .sets()
            .filter(|c| *c != target)
            .all(|c| !consistent(c, sample))
}

/// `⊔ F_i = ⋃_i { F ⊕ {i} : F ∈ F_i }`, on raw set families.
pub fn disjoint_union_sets(families: &[Vec<ElementSet>]) -> Vec<(usize, ElementSet)> {
    families
        .iter()
        .enumerate()
        .flat_map(|(i, fam)| {
            let tag = ElementSet::from([i as u32]);
            fam.iter().map(move |f| (i, join(f, &tag)))
        })
        .collect()
}

/// Disjoint union of classes; names become `f<i>.<name>` and the domain is
/// sized to fit the join coding. Fails if that size exceeds `max_domain`.
pub fn disjoint_union(families: &[ConceptClass], max_domain: u32) -> Result<ConceptClass> {
    if families.is_empty() {
        return Err(Error::EmptyClass);
    }
    let mut needed: u64 = 1;
    for (i, fam) in families.iter().enumerate() {
        // 2·x for members and 2·i + 1 for the tag
        let max_even = fam.sets().filter_map(ElementSet::last).max().map_or(0, |m| 2 * m as u64 + 1);
        needed = needed.max(max_even).max(2 * i as u64 + 2);
    }
    if needed > max_domain as u64 {
        return Err(Error::DomainOverflow { needed, bound: max_domain });
    }
    let raw: Vec<Vec<ElementSet>> = families.iter().map(|f| f.sets().cloned().collect()).collect();
    let concepts = disjoint_union_sets(&raw)
        .into_iter()
        .zip(families.iter().flat_map(|f| f.concepts().iter()))
        .map(|((i, set), c)| Concept::new(format!("f{i}.{}", c.name), set))
        .collect();
    ConceptClass::new(Domain::new(needed as u32)?, concepts)
}
