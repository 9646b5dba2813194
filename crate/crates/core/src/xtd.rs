//! Extended teaching dimension (`XTD`) and its positive variant (`XTD⁺`).
//!
//! A specifying set for an arbitrary hypothesis `L` leaves at most one concept
//! agreeing with `L`. Choosing which concept (if any) may survive turns the
//! question into one hitting-set instance per choice.
//!
//! `XTD⁺` is decided structurally: it is finite exactly when any two concepts
//! of different extension are disjoint. This finite-domain statement is
//! checked against brute force in the tests rather than assumed.

use crate::class::ConceptClass;
use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::hitting::minimal_hitting_set;
use crate::set::ElementSet;
use alloc::vec::Vec;

/// Largest domain for which [`xtd_of_class`] enumerates every hypothesis.
pub const XTD_EXHAUSTIVE_MAX_DOMAIN: u32 = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specifying {
    pub size: usize,
    pub witness: ElementSet,
}

fn distinct_sets(class: &ConceptClass) -> Vec<&ElementSet> {
    class.distinct_indices().into_iter().map(|i| class.set(i)).collect()
}

fn better(a: &Specifying, b: &Specifying) -> bool {
    a.size < b.size || (a.size == b.size && a.witness.lex_cmp(&b.witness).is_lt())
}

/// Smallest `S` such that at most one concept `L'` has `L' ∩ S = L ∩ S`.
pub fn min_specifying_set(class: &ConceptClass, hypothesis: &ElementSet) -> Specifying {
    min_over_survivors(class, |c| hypothesis.symmetric_difference(c))
}

/// Smallest `S ⊆ L` contained in at most one concept; `None` if no subset of
/// `L` works.
pub fn min_positive_specifying_set(class: &ConceptClass, hypothesis: &ElementSet) -> Option<Specifying> {
    let best = min_over_survivors(class, |c| hypothesis.difference(c));
    // The search can only fail by returning the sentinel below.
    (best.size != usize::MAX).then_some(best)
}

fn min_over_survivors(class: &ConceptClass, constraint: impl Fn(&ElementSet) -> ElementSet) -> Specifying {
    let sets = distinct_sets(class);
    let constraints: Vec<ElementSet> = sets.iter().map(|c| constraint(c)).collect();
    let mut best = Specifying {
        size: usize::MAX,
        witness: ElementSet::new(),
    };
    for survivor in 0..constraints.len() {
        let others: Vec<ElementSet> = constraints
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != survivor)
            .map(|(_, c)| c.clone())
            .collect();
        if let Ok(h) = minimal_hitting_set(&others) {
            let cand = Specifying {
                size: h.size,
                witness: h.witness,
            };
            if better(&cand, &best) {
                best = cand;
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Xtd {
    pub dimension: Dimension,
    /// A hypothesis attaining the maximum (first in enumeration order).
    pub worst_hypothesis: ElementSet,
    /// False for sampled runs, which only give a lower bound.
    pub exact: bool,
}

/// `XTD(C)` by enumerating all `2^m` hypotheses over a domain of size `m`.
pub fn xtd_of_class(class: &ConceptClass) -> Result<Xtd> {
    let m = class.domain().size();
    if m > XTD_EXHAUSTIVE_MAX_DOMAIN {
        return Err(Error::SizeBound {
            what: "exhaustive XTD domain size",
            limit: XTD_EXHAUSTIVE_MAX_DOMAIN as usize,
            got: m as usize,
        });
    }
    let hypotheses = (0u64..1 << m).map(|bits| (0..m).filter(|&x| bits >> x & 1 == 1).collect());
    let mut out = xtd_over(class, hypotheses);
    out.exact = true;
    Ok(out)
}

/// Maximum of [`min_specifying_set`] over the given hypotheses: a lower bound
/// on `XTD(C)`.
pub fn xtd_over(class: &ConceptClass, hypotheses: impl IntoIterator<Item = ElementSet>) -> Xtd {
    let mut best = Xtd {
        dimension: Dimension::ZERO,
        worst_hypothesis: ElementSet::new(),
        exact: false,
    };
    let mut first = true;
    for h in hypotheses {
        let s = min_specifying_set(class, &h).size as u32;
        if first || Dimension::Finite(s) > best.dimension {
            best.dimension = Dimension::Finite(s);
            best.worst_hypothesis = h;
            first = false;
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureReport {
    /// Distinct concepts are pairwise disjoint.
    Disjoint { distinct: usize },
    /// `class[i] ≠ class[j]` share `element`; the hypothesis `{element}` has no
    /// positive specifying set.
    Overlap { i: usize, j: usize, element: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XtdPlus {
    pub dimension: Dimension,
    pub report: StructureReport,
}

impl XtdPlus {
    /// A minimum positive specifying set for `hypothesis` when the dimension is
    /// finite: empty if at most one distinct concept exists, else the least
    /// element of the hypothesis. `None` for empty hypotheses or infinite
    /// dimension.
    pub fn strategy(&self, hypothesis: &ElementSet) -> Option<ElementSet> {
        match self.report {
            StructureReport::Overlap { .. } => None,
            _ if hypothesis.is_empty() => None,
            StructureReport::Disjoint { distinct } if distinct <= 1 => Some(ElementSet::new()),
            StructureReport::Disjoint { .. } => Some(ElementSet::from([hypothesis.first()?])),
        }
    }
}

/// `XTD⁺(C)` via the equal-or-disjoint characterization.
pub fn xtdplus_of_class(class: &ConceptClass) -> XtdPlus {
    let idx = class.distinct_indices();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            if let Some(element) = class.set(i).intersection(class.set(j)).first() {
                return XtdPlus {
                    dimension: Dimension::Infinite,
                    report: StructureReport::Overlap { i, j, element },
                };
            }
        }
    }
    XtdPlus {
        dimension: Dimension::Finite(u32::from(idx.len() > 1)),
        report: StructureReport::Disjoint { distinct: idx.len() },
    }
}
