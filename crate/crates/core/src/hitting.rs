//! Exact minimum hitting set with deterministic witnesses.
//!
//! Every teaching-type dimension in the crate reduces to one call here: a
//! teaching set must contain, for every other concept, an element on which
//! the two disagree.
//!
//! The solver first reduces the instance (duplicate and superset constraints
//! dropped, elements dominated by a smaller element dropped), finds the
//! optimum size by iterative deepening over a constraint-branching search,
//! and then builds the lexicographically least optimal witness one element at
//! a time, asking the same search whether a completion still exists.

use crate::set::ElementSet;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSet {
    pub size: usize,
    pub witness: ElementSet,
    /// False only for [`greedy_hitting_set`].
    pub exact: bool,
}

/// An empty constraint can never be hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasible {
    pub constraint: usize,
}

fn check_nonempty(constraints: &[ElementSet]) -> Result<(), Infeasible> {
    match constraints.iter().position(ElementSet::is_empty) {
        Some(constraint) => Err(Infeasible { constraint }),
        None => Ok(()),
    }
}

/// Minimum-cardinality set meeting every constraint. Among optimal sets the
/// lexicographically least (by sorted elements) is returned.
pub fn minimal_hitting_set(constraints: &[ElementSet]) -> Result<HittingSet, Infeasible> {
    check_nonempty(constraints)?;
    let inst = Instance::reduce(constraints);
    let mut search = Search::new(&inst);
    let all = ElementSet::full(inst.cand_of.len() as u32);

    let mut k = search.packing_bound(&all, 0);
    while !search.feasible(&all, 0, k) {
        k += 1;
    }

    let mut unhit = all;
    let mut chosen = ElementSet::new();
    let mut pos = 0;
    let mut left = k;
    while !unhit.is_empty() {
        let next = (pos..inst.masks.len())
            .find(|&p| {
                inst.masks[p].intersects(&unhit)
                    && search.feasible(&unhit.difference(&inst.masks[p]), p + 1, left - 1)
            })
            .expect("a completion exists at the optimal size");
        chosen.insert(inst.elements[next]);
        unhit = unhit.difference(&inst.masks[next]);
        pos = next + 1;
        left -= 1;
    }
    debug_assert_eq!(left, 0);
    Ok(HittingSet {
        size: k,
        witness: chosen,
        exact: true,
    })
}

/// Classic greedy: repeatedly take the element hitting the most remaining
/// constraints (smallest element on ties). Not optimal in general.
pub fn greedy_hitting_set(constraints: &[ElementSet]) -> Result<HittingSet, Infeasible> {
    check_nonempty(constraints)?;
    let mut unhit: Vec<&ElementSet> = constraints.iter().collect();
    let mut chosen = ElementSet::new();
    while !unhit.is_empty() {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for c in &unhit {
            for x in c.iter() {
                *counts.entry(x).or_default() += 1;
            }
        }
        let best = counts
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .map(|(&x, _)| x)
            .expect("unhit constraints are nonempty");
        chosen.insert(best);
        unhit.retain(|c| !c.contains(best));
    }
    Ok(HittingSet {
        size: chosen.len(),
        witness: chosen,
        exact: false,
    })
}

struct Instance {
    /// Candidate elements, ascending.
    elements: Vec<u32>,
    /// Per candidate: the constraints it hits.
    masks: Vec<ElementSet>,
    /// Per constraint: the candidates (by index) that hit it.
    cand_of: Vec<ElementSet>,
}

impl Instance {
    fn reduce(constraints: &[ElementSet]) -> Instance {
        let mut sorted: Vec<&ElementSet> = constraints.iter().collect();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b)));
        sorted.dedup();
        let mut kept: Vec<&ElementSet> = Vec::new();
        for c in sorted {
            if !kept.iter().any(|k| k.is_subset(c)) {
                kept.push(c);
            }
        }

        let mut by_element: BTreeMap<u32, ElementSet> = BTreeMap::new();
        for (ci, c) in kept.iter().enumerate() {
            for x in c.iter() {
                by_element.entry(x).or_default().insert(ci as u32);
            }
        }
        let mut elements: Vec<u32> = Vec::new();
        let mut masks: Vec<ElementSet> = Vec::new();
        for (x, mask) in by_element {
            // A smaller element hitting a superset of constraints can always
            // replace `x` in an optimal set and makes it lexicographically smaller.
            if masks.iter().any(|m| mask.is_subset(m)) {
                continue;
            }
            elements.push(x);
            masks.push(mask);
        }
        let mut cand_of = alloc::vec![ElementSet::new(); kept.len()];
        for (p, m) in masks.iter().enumerate() {
            for ci in m.iter() {
                cand_of[ci as usize].insert(p as u32);
            }
        }
        Instance {
            elements,
            masks,
            cand_of,
        }
    }
}

struct Search<'a> {
    inst: &'a Instance,
    /// (min candidate, unhit constraints) → largest budget known to fail.
    failed: BTreeMap<(usize, ElementSet), usize>,
}

impl<'a> Search<'a> {
    fn new(inst: &'a Instance) -> Self {
        Search {
            inst,
            failed: BTreeMap::new(),
        }
    }

    fn usable(&self, constraint: u32, min_pos: usize) -> ElementSet {
        let c = &self.inst.cand_of[constraint as usize];
        if min_pos == 0 {
            c.clone()
        } else {
            c.difference(&ElementSet::full(min_pos as u32))
        }
    }

    /// Size of a greedily packed family of pairwise candidate-disjoint
    /// constraints; each needs its own element.
    fn packing_bound(&self, unhit: &ElementSet, min_pos: usize) -> usize {
        let mut used = ElementSet::new();
        let mut count = 0;
        for c in unhit.iter() {
            let cands = self.usable(c, min_pos);
            if cands.is_disjoint(&used) {
                used.union_with(&cands);
                count += 1;
            }
        }
        count
    }

    /// Can `unhit` be hit with at most `budget` candidates of index ≥ `min_pos`?
    fn feasible(&mut self, unhit: &ElementSet, min_pos: usize, budget: usize) -> bool {
        if unhit.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let key = (min_pos, unhit.clone());
        if self.failed.get(&key).is_some_and(|&b| b >= budget) {
            return false;
        }
        let mut branch: Option<ElementSet> = None;
        for c in unhit.iter() {
            let cands = self.usable(c, min_pos);
            if branch.as_ref().map_or(true, |b| cands.len() < b.len()) {
                branch = Some(cands);
            }
        }
        let branch = branch.expect("unhit is nonempty");
        let ok = !branch.is_empty()
            && self.packing_bound(unhit, min_pos) <= budget
            && branch.iter().any(|p| {
                let rest = unhit.difference(&self.inst.masks[p as usize]);
                self.feasible(&rest, min_pos, budget - 1)
            });
        if !ok {
            let e = self.failed.entry(key).or_insert(0);
            *e = (*e).max(budget);
        }
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sets(v: &[&[u32]]) -> Vec<ElementSet> {
        v.iter().map(|s| ElementSet::from(*s)).collect()
    }

    #[test]
    fn empty_instance() {
        let h = minimal_hitting_set(&[]).unwrap();
        assert_eq!(h.size, 0);
        assert!(h.witness.is_empty());
    }

    #[test]
    fn two_singletons() {
        let h = minimal_hitting_set(&sets(&[&[1], &[2]])).unwrap();
        assert_eq!(h.size, 2);
        assert_eq!(h.witness, ElementSet::from([1, 2]));
    }

    #[test]
    fn empty_constraint_is_infeasible() {
        assert_eq!(
            minimal_hitting_set(&sets(&[&[1], &[]])),
            Err(Infeasible { constraint: 1 })
        );
    }

    #[test]
    fn lexicographic_tie_break() {
        // {3} and {1,2} and {2,3}: optimum 2, candidates {2,3} and {1,3}; lex-least {1,3}.
        let h = minimal_hitting_set(&sets(&[&[3], &[1, 2], &[2, 3]])).unwrap();
        assert_eq!(h.witness, ElementSet::from([1, 3]));
    }

    #[test]
    fn greedy_is_an_upper_bound() {
        // Greedy picks 0 (hits three) and then needs two more; optimum is {1, 2}.
        let c = sets(&[&[0, 1], &[0, 2], &[1, 3], &[2, 4], &[0, 5, 1, 2]]);
        let g = greedy_hitting_set(&c).unwrap();
        let h = minimal_hitting_set(&c).unwrap();
        assert!(!g.exact);
        assert!(h.size <= g.size);
        assert_eq!(h.witness, ElementSet::from([1, 2]));
        assert_eq!(vec![h.size], vec![2]);
    }
}
