//! Stage approximations of uniformly enumerable families.

use crate::class::{Concept, ConceptClass, Domain};
use crate::error::{Error, Result};
use crate::set::ElementSet;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

/// Truncation parameters. Every lab report carries one of these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Horizons {
    /// Number of columns (concept indices) realized.
    pub columns: u32,
    /// Largest stage simulated.
    pub stages: u32,
    /// Domain size: elements are `0..domain`.
    pub domain: u32,
    /// Copies per marker pattern, where a gadget has them.
    pub multiplicity: u32,
}

/// Finitely many columns, each stored as the stage at which every element
/// enters. Column `j` at stage `s` is a subset of `{0, …, s}` and grows with
/// `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StagedFamily {
    names: Vec<String>,
    entry: Vec<BTreeMap<u32, u32>>,
    horizons: Horizons,
}

impl StagedFamily {
    /// Tabulates `f(j, s)` for `j < names.len()` and `s ≤ horizons.stages`,
    /// clipped to `{0, …, min(s, domain - 1)}`.
    ///
    /// Panics if the clipped columns are not monotone in `s`: builders are
    /// expected to produce monotone approximations.
    pub fn from_fn(names: Vec<String>, horizons: Horizons, f: impl Fn(usize, u32) -> ElementSet) -> Result<Self> {
        if horizons.domain == 0 {
            return Err(Error::EmptyDomain);
        }
        if names.is_empty() {
            return Err(Error::EmptyClass);
        }
        let mut entry = Vec::with_capacity(names.len());
        for j in 0..names.len() {
            let mut col = BTreeMap::new();
            let mut prev = ElementSet::new();
            for s in 0..=horizons.stages {
                let cur = f(j, s).truncated(s.min(horizons.domain - 1) + 1);
                assert!(prev.is_subset(&cur), "column {j} shrinks at stage {s}");
                for x in cur.difference(&prev).iter() {
                    col.insert(x, s);
                }
                prev = cur;
            }
            entry.push(col);
        }
        Ok(StagedFamily { names, entry, horizons })
    }

    pub fn horizons(&self) -> Horizons {
        self.horizons
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn check_stage(&self, s: u32) -> Result<()> {
        if s > self.horizons.stages {
            return Err(Error::StageHorizon {
                stage: s,
                horizon: self.horizons.stages,
            });
        }
        Ok(())
    }

    /// `L_{j,s}`.
    pub fn column(&self, j: usize, s: u32) -> Result<ElementSet> {
        self.check_stage(s)?;
        let col = self.entry.get(j).ok_or(Error::IndexOutOfRange {
            index: j,
            len: self.names.len(),
        })?;
        Ok(col.iter().filter(|&(_, &t)| t <= s).map(|(&x, _)| x).collect())
    }

    /// All columns at stage `s`, duplicates kept.
    pub fn columns_at(&self, s: u32) -> Result<Vec<ElementSet>> {
        (0..self.len()).map(|j| self.column(j, s)).collect()
    }

    /// Least stage from which every column equals its value at the stage
    /// horizon.
    pub fn settling_stage(&self) -> u32 {
        self.entry
            .iter()
            .flat_map(|col| col.values().copied())
            .max()
            .unwrap_or(0)
    }
}

/// The class of stage-`s` columns, extensionally deduplicated (first name
/// kept), over the domain `{0, …, min(s, M - 1)}`.
pub fn stage_restrict(family: &StagedFamily, s: u32) -> Result<ConceptClass> {
    let cols = family.columns_at(s)?;
    let domain = Domain::new(s.min(family.horizons.domain - 1) + 1)?;
    let concepts = family
        .names
        .iter()
        .zip(cols)
        .map(|(n, c)| Concept::new(n.clone(), c))
        .collect();
    Ok(ConceptClass::new(domain, concepts)?.deduplicated())
}

/// A stage-indexed predicate evaluated at every stage up to the horizon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StagedVerdict {
    /// Value at the stage horizon.
    pub value: bool,
    /// Least stage from which the value never changes within the horizon.
    pub settled_at: u32,
    /// Number of times the value changed.
    pub changes: u32,
}

pub fn evaluate_stages(
    family: &StagedFamily,
    mut predicate: impl FnMut(&ConceptClass) -> Result<bool>,
) -> Result<StagedVerdict> {
    let mut last = None;
    let mut settled_at = 0;
    let mut changes = 0;
    for s in 0..=family.horizons.stages {
        let v = predicate(&stage_restrict(family, s)?)?;
        if last.is_some_and(|l| l != v) {
            changes += 1;
            settled_at = s;
        }
        last = Some(v);
    }
    Ok(StagedVerdict {
        value: last.expect("at least stage 0 is evaluated"),
        settled_at,
        changes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn growing(stages: u32) -> StagedFamily {
        let h = Horizons {
            columns: 2,
            stages,
            domain: 6,
            multiplicity: 0,
        };
        let names = (0..2).map(|j| format!("g{j}")).collect();
        StagedFamily::from_fn(names, h, |j, s| if j == 0 { ElementSet::full(s) } else { ElementSet::from([0]) }).unwrap()
    }

    #[test]
    fn columns_grow_and_settle() {
        let f = growing(10);
        assert_eq!(f.column(0, 3).unwrap().to_vec(), alloc::vec![0, 1, 2]);
        assert_eq!(f.column(0, 10).unwrap(), ElementSet::full(6));
        assert_eq!(f.settling_stage(), 6);
        assert!(matches!(f.column(0, 11), Err(Error::StageHorizon { .. })));
        for s in 0..10 {
            assert!(f.column(0, s).unwrap().is_subset(&f.column(0, s + 1).unwrap()));
        }
    }

    #[test]
    fn restriction_deduplicates() {
        let f = growing(10);
        let c = stage_restrict(&f, 1).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.domain().size(), 2);
        assert_eq!(stage_restrict(&f, 4).unwrap().len(), 2);
    }

    #[test]
    fn predicate_settling() {
        let f = growing(10);
        let v = evaluate_stages(&f, |c| Ok(c.len() == 1)).unwrap();
        assert!(!v.value);
        assert_eq!(v.settled_at, 2);
        assert_eq!(v.changes, 2);
    }
}
