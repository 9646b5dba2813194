//! Brute-force reference implementations.
//!
//! Nothing here shares code with the solvers beyond the data model and the
//! `consistent` predicate: every value is obtained by enumerating samples,
//! orderings or partitions directly from the definitions. Costs are
//! exponential; keep inputs small.

use crate::class::{consistent, ConceptClass, Sample};
use crate::dimension::Dimension;
use crate::set::{subsets_of_size, ElementSet};
use alloc::vec::Vec;

/// `T` is consistent with `class[i]` and with no concept of a different
/// extension.
fn teaches(class: &ConceptClass, i: usize, t: &Sample) -> bool {
    let target = class.set(i);
    consistent(target, t) && class.sets().filter(|c| *c != target).all(|c| !consistent(c, t))
}

/// Smallest teaching set size, by enumerating supports of increasing size.
pub fn td(class: &ConceptClass, i: usize) -> u32 {
    let domain = class.domain().elements();
    let target = class.set(i);
    for k in 0..=domain.len() {
        // Only the membership labelling of a support can be consistent with
        // the target.
        if subsets_of_size(&domain, k).any(|x| teaches(class, i, &Sample::labelled_by(target, &x))) {
            return k as u32;
        }
    }
    unreachable!("the full domain distinguishes distinct finite sets")
}

/// Smallest positive teaching set size, or infinite.
pub fn tdplus(class: &ConceptClass, i: usize) -> Dimension {
    let target = class.set(i);
    for k in 0..=target.len() {
        if subsets_of_size(target, k).any(|s| teaches(class, i, &Sample::positive_only(s))) {
            return Dimension::Finite(k as u32);
        }
    }
    Dimension::Infinite
}

/// `D` distinguishes `class[i]`, checked by comparing traces.
pub fn is_distinguishing(class: &ConceptClass, i: usize, d: &ElementSet) -> bool {
    let l = class.set(i);
    class.sets().all(|c| c == l || c.intersection(d) != l.intersection(d))
}

/// Distinguishing, and no subset of the domain of smaller size is.
pub fn is_minimal_distinguishing(class: &ConceptClass, i: usize, d: &ElementSet) -> bool {
    let domain = class.domain().elements();
    is_distinguishing(class, i, d)
        && (0..d.len()).all(|k| !subsets_of_size(&domain, k).any(|x| is_distinguishing(class, i, &x)))
}

/// Minimum hitting set by enumerating subsets of the union in order of size,
/// then lexicographically. `None` if some constraint is empty.
pub fn hitting_set(constraints: &[ElementSet]) -> Option<(usize, ElementSet)> {
    if constraints.iter().any(ElementSet::is_empty) {
        return None;
    }
    let mut universe = ElementSet::new();
    for c in constraints {
        universe.union_with(c);
    }
    (0..=universe.len()).find_map(|k| {
        subsets_of_size(&universe, k)
            .find(|h| constraints.iter().all(|c| c.intersects(h)))
            .map(|h| (k, h))
    })
}

fn specifying_size(class: &ConceptClass, hypothesis: &ElementSet, positive: bool) -> Option<usize> {
    let pool = if positive { hypothesis.clone() } else { class.domain().elements() };
    (0..=pool.len()).find(|&k| {
        subsets_of_size(&pool, k).any(|s| {
            let trace = hypothesis.intersection(&s);
            let mut agreeing: Vec<&ElementSet> = class.sets().filter(|c| c.intersection(&s) == trace).collect();
            agreeing.sort();
            agreeing.dedup();
            agreeing.len() <= 1
        })
    })
}

fn all_hypotheses(class: &ConceptClass) -> impl Iterator<Item = ElementSet> {
    let m = class.domain().size();
    assert!(m <= 16, "oracle hypothesis enumeration is limited to 16 elements");
    (0u32..1 << m).map(move |bits| (0..m).filter(|&x| bits >> x & 1 == 1).collect())
}

/// `XTD` by enumerating every hypothesis and every candidate set.
pub fn xtd(class: &ConceptClass) -> u32 {
    all_hypotheses(class)
        .map(|h| specifying_size(class, &h, false).expect("the full domain specifies") as u32)
        .max()
        .unwrap_or(0)
}

/// `XTD⁺` over nonempty hypotheses, by enumeration.
pub fn xtdplus(class: &ConceptClass) -> Dimension {
    let mut best = Dimension::ZERO;
    for h in all_hypotheses(class).filter(|h| !h.is_empty()) {
        match specifying_size(class, &h, true) {
            Some(k) => best = best.max(Dimension::Finite(k as u32)),
            None => return Dimension::Infinite,
        }
    }
    best
}

/// `TD` or `TD⁺` of `class[i]` against the concepts listed in `remaining`.
fn cost_within(class: &ConceptClass, i: usize, remaining: &[usize], positive: bool) -> Dimension {
    let mut idx = alloc::vec![i];
    idx.extend(remaining.iter().copied().filter(|&j| j != i));
    let sub = class.subclass(&idx).expect("indices in range");
    if positive {
        tdplus(&sub, 0)
    } else {
        Dimension::Finite(td(&sub, 0))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Order of the positive teaching plan that follows `order`.
pub fn plan_order(class: &ConceptClass, order: &[usize]) -> Dimension {
    (0..order.len())
        .map(|k| cost_within(class, order[k], &order[k..], true))
        .max()
        .unwrap_or(Dimension::ZERO)
}

/// `RTD₁⁺` as the minimum over all `|C|!` orderings.
pub fn rtd1plus(class: &ConceptClass) -> Dimension {
    permutations(class.len())
        .iter()
        .map(|p| plan_order(class, p))
        .min()
        .unwrap_or(Dimension::ZERO)
}

/// All ordered set partitions of `items`.
pub fn ordered_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    let n = items.len();
    for bits in 1u32..1 << n {
        let (first, rest): (Vec<usize>, Vec<usize>) = {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (k, &x) in items.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    a.push(x)
                } else {
                    b.push(x)
                }
            }
            (a, b)
        };
        for tail in ordered_partitions(&rest) {
            let mut p = alloc::vec![first.clone()];
            p.extend(tail);
            out.push(p);
        }
    }
    out
}

/// Order of the teaching sequence over the given ordered partition.
pub fn partition_order(class: &ConceptClass, blocks: &[Vec<usize>], positive: bool) -> Dimension {
    let mut best = Dimension::ZERO;
    for b in 0..blocks.len() {
        let remaining: Vec<usize> = blocks[b..].iter().flatten().copied().collect();
        for &i in &blocks[b] {
            best = best.max(cost_within(class, i, &remaining, positive));
        }
    }
    best
}

/// `RTD` (or `RTD⁺`) as the minimum over every ordered partition of all
/// concepts, duplicates included.
pub fn rtd(class: &ConceptClass, positive: bool) -> Dimension {
    let all: Vec<usize> = (0..class.len()).collect();
    ordered_partitions(&all)
        .iter()
        .map(|p| partition_order(class, p, positive))
        .min()
        .unwrap_or(Dimension::ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_partition_counts() {
        // Fubini numbers.
        let counts: Vec<usize> = (0..5)
            .map(|n| ordered_partitions(&(0..n).collect::<Vec<_>>()).len())
            .collect();
        assert_eq!(counts, alloc::vec![1, 1, 3, 13, 75]);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn hitting_examples() {
        assert_eq!(hitting_set(&[]), Some((0, ElementSet::new())));
        assert_eq!(
            hitting_set(&[ElementSet::from([1]), ElementSet::from([2])]),
            Some((2, ElementSet::from([1, 2])))
        );
        assert_eq!(hitting_set(&[ElementSet::new()]), None);
    }

    #[test]
    fn small_values() {
        let mut sets = alloc::vec![ElementSet::new()];
        sets.extend((1..=3).map(|i| ElementSet::from([i])));
        let c = ConceptClass::with_domain(4, sets).unwrap();
        assert_eq!(td(&c, 0), 3);
        assert_eq!(td(&c, 1), 1);
        assert_eq!(rtd(&c, false), Dimension::Finite(1));
        assert_eq!(rtd1plus(&c), Dimension::Finite(1));
        assert!(is_minimal_distinguishing(&c, 1, &ElementSet::from([1])));
        assert!(!is_minimal_distinguishing(&c, 1, &ElementSet::from([1, 2])));
    }
}
