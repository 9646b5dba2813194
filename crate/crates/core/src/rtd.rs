//! Recursive teaching: teaching sequences, positive teaching plans, `RTD`,
//! `RTD⁺` and `RTD₁⁺`.
//!
//! Sequences refer to concepts by index into the class. The class remaining
//! at block `i` is the union of blocks `i, i+1, …`, and every cost is computed
//! extensionally against it.

use crate::class::{ConceptClass, Sample};
use crate::dimension::{sup, Dimension};
use crate::error::{Error, Result};
use crate::td::teaching_dimension_within;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// Largest number of distinct concepts accepted by [`rtd_exact`].
pub const RTD_EXACT_MAX_CONCEPTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub members: Vec<usize>,
    /// The declared order `d_i` of this block.
    pub order: Dimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TeachingSequence {
    pub blocks: Vec<Block>,
}

impl TeachingSequence {
    /// `ord(TS) = sup_i d_i`.
    pub fn order(&self) -> Dimension {
        sup(self.blocks.iter().map(|b| b.order))
    }

    /// A sequence over the given partition with every `d_i` recomputed.
    pub fn from_partition(class: &ConceptClass, blocks: Vec<Vec<usize>>, positive: bool) -> Result<Self> {
        check_partition(class, &blocks)?;
        let orders = block_costs(class, &blocks, positive)?;
        Ok(TeachingSequence {
            blocks: blocks
                .into_iter()
                .zip(orders)
                .map(|(members, order)| Block { members, order })
                .collect(),
        })
    }
}

/// A positive teaching plan: singleton blocks with `d_i = TD⁺(L_i, rest)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TeachingPlan {
    pub order: Vec<usize>,
    pub dims: Vec<Dimension>,
    pub witnesses: Vec<Option<Sample>>,
}

impl TeachingPlan {
    pub fn value(&self) -> Dimension {
        sup(self.dims.iter().copied())
    }

    pub fn to_sequence(&self) -> TeachingSequence {
        TeachingSequence {
            blocks: self
                .order
                .iter()
                .zip(&self.dims)
                .map(|(&i, &d)| Block {
                    members: vec![i],
                    order: d,
                })
                .collect(),
        }
    }
}

fn check_partition(class: &ConceptClass, blocks: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; class.len()];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::EmptyBlock(b));
        }
        for &i in block {
            class.check_index(i)?;
            if core::mem::replace(&mut seen[i], true) {
                return Err(Error::RepeatedInSequence(i));
            }
        }
    }
    match seen.iter().position(|s| !s) {
        Some(i) => Err(Error::MissingFromSequence(i)),
        None => Ok(()),
    }
}

/// Recomputed `d_i = max_{L ∈ F_i} TD(L, F_i ∪ F_{i+1} ∪ …)` (or `TD⁺`).
fn block_costs(class: &ConceptClass, blocks: &[Vec<usize>], positive: bool) -> Result<Vec<Dimension>> {
    let mut out = Vec::with_capacity(blocks.len());
    for (b, block) in blocks.iter().enumerate() {
        let remaining: Vec<usize> = blocks[b..].iter().flatten().copied().collect();
        let mut d = Dimension::ZERO;
        for &i in block {
            d = d.max(teaching_dimension_within(class, i, &remaining, positive)?.dimension);
        }
        out.push(d);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub valid: bool,
    /// Minimal feasible `d_i` per block.
    pub recomputed: Vec<Dimension>,
    /// Blocks whose declared order is rejected.
    pub rejected: Vec<usize>,
}

/// Checks that `seq` partitions the class and that every declared order is
/// right. Without `positive`, `d_i` must equal the recomputed supremum of
/// `TD`. With `positive`, `d_i` is accepted when every member has a positive
/// teaching set of size at most `d_i` with respect to the remaining class.
pub fn validate_sequence(class: &ConceptClass, seq: &TeachingSequence, positive: bool) -> Result<Validation> {
    let blocks: Vec<Vec<usize>> = seq.blocks.iter().map(|b| b.members.clone()).collect();
    check_partition(class, &blocks)?;
    let recomputed = block_costs(class, &blocks, positive)?;
    let rejected: Vec<usize> = seq
        .blocks
        .iter()
        .zip(&recomputed)
        .enumerate()
        .filter(|(_, (b, &r))| {
            if positive {
                !(r.is_finite() && r <= b.order)
            } else {
                r != b.order
            }
        })
        .map(|(i, _)| i)
        .collect();
    Ok(Validation {
        valid: rejected.is_empty(),
        recomputed,
        rejected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome {
    pub success: bool,
    /// Concepts scheduled so far, in selection order.
    pub plan: TeachingPlan,
    /// Unscheduled concepts when the search got stuck (empty on success).
    pub stuck: Vec<usize>,
}

/// Decides `RTD₁⁺(C) ≤ n` by the least-index greedy: repeatedly schedule the
/// remaining concept of least index whose `TD⁺` with respect to the remaining
/// class is at most `n`.
pub fn rtd1plus_at_most(class: &ConceptClass, n: u32) -> GreedyOutcome {
    let mut remaining: Vec<usize> = (0..class.len()).collect();
    let mut plan = TeachingPlan::default();
    while !remaining.is_empty() {
        let pick = remaining.iter().enumerate().find_map(|(pos, &i)| {
            let t = teaching_dimension_within(class, i, &remaining, true).expect("index in range");
            t.dimension.at_most(n).then_some((pos, i, t))
        });
        let Some((pos, i, t)) = pick else {
            return GreedyOutcome {
                success: false,
                plan,
                stuck: remaining,
            };
        };
        remaining.remove(pos);
        plan.order.push(i);
        plan.dims.push(t.dimension);
        plan.witnesses.push(t.witness);
    }
    GreedyOutcome {
        success: true,
        plan,
        stuck: Vec::new(),
    }
}

/// `RTD₁⁺(C)` with a plan attaining it.
///
/// Always finite for finite classes: an inclusion-maximal remaining concept
/// has finite `TD⁺`, so the greedy never gets stuck once `n` reaches the size
/// of the largest concept.
pub fn rtd1plus(class: &ConceptClass) -> (Dimension, TeachingPlan) {
    let cap = class.sets().map(|s| s.len() as u32).max().unwrap_or(0);
    for n in 0..=cap {
        let out = rtd1plus_at_most(class, n);
        if out.success {
            return (Dimension::Finite(n), out.plan);
        }
    }
    unreachable!("a positive teaching plan of order at most max |L| always exists")
}

/// The canonical greedy sequence: peel every concept of minimum cost with
/// respect to the remaining class, then repeat. Its order bounds `RTD`
/// (or `RTD⁺`) from above.
pub fn canonical_sequence(class: &ConceptClass, positive: bool) -> TeachingSequence {
    let mut remaining: Vec<usize> = (0..class.len()).collect();
    let mut seq = TeachingSequence::default();
    while !remaining.is_empty() {
        let costs: Vec<Dimension> = remaining
            .iter()
            .map(|&i| {
                teaching_dimension_within(class, i, &remaining, positive)
                    .expect("index in range")
                    .dimension
            })
            .collect();
        let min = *costs.iter().min().expect("remaining is nonempty");
        assert!(min.is_finite(), "a maximal remaining concept always has finite cost");
        let (members, rest): (Vec<_>, Vec<_>) = remaining
            .iter()
            .zip(&costs)
            .partition(|(_, &c)| c == min);
        seq.blocks.push(Block {
            members: members.into_iter().map(|(&i, _)| i).collect(),
            order: min,
        });
        remaining = rest.into_iter().map(|(&i, _)| i).collect();
    }
    seq
}

/// Exact `RTD` (or `RTD⁺`) by search over ordered partitions of the distinct
/// concepts, memoized on the remaining subfamily and pruned by the best order
/// found so far. Returns a sequence over the original indices attaining it.
pub fn rtd_exact(class: &ConceptClass, positive: bool) -> Result<(Dimension, TeachingSequence)> {
    let reps = class.distinct_indices();
    if reps.len() > RTD_EXACT_MAX_CONCEPTS {
        return Err(Error::SizeBound {
            what: "exact RTD distinct concepts (use canonical_sequence for an upper bound)",
            limit: RTD_EXACT_MAX_CONCEPTS,
            got: reps.len(),
        });
    }
    let mut search = PartitionSearch {
        class,
        reps: &reps,
        positive,
        cost: BTreeMap::new(),
        best: BTreeMap::new(),
    };
    let full = (1u32 << reps.len()) - 1;
    let value = search.solve(full);

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let (_, block) = search.best[&mask];
        blocks.push(members(block).map(|k| reps[k]).collect());
        mask &= !block;
    }
    // Duplicates ride along with their representative.
    for i in 0..class.len() {
        if !reps.contains(&i) {
            let b = blocks
                .iter()
                .position(|blk| blk.iter().any(|&r| class.set(r) == class.set(i)))
                .expect("every duplicate has a representative");
            blocks[b].push(i);
        }
    }
    let seq = TeachingSequence::from_partition(class, blocks, positive)?;
    debug_assert_eq!(seq.order(), value);
    Ok((value, seq))
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |k| mask >> k & 1 == 1)
}

struct PartitionSearch<'a> {
    class: &'a ConceptClass,
    reps: &'a [usize],
    positive: bool,
    /// (concept, remaining) → cost.
    cost: BTreeMap<(usize, u32), Dimension>,
    /// remaining → (best order, first block).
    best: BTreeMap<u32, (Dimension, u32)>,
}

impl PartitionSearch<'_> {
    fn cost(&mut self, k: usize, remaining: u32) -> Dimension {
        if let Some(&c) = self.cost.get(&(k, remaining)) {
            return c;
        }
        let rem: Vec<usize> = members(remaining).map(|j| self.reps[j]).collect();
        let c = teaching_dimension_within(self.class, self.reps[k], &rem, self.positive)
            .expect("index in range")
            .dimension;
        self.cost.insert((k, remaining), c);
        c
    }

    fn solve(&mut self, remaining: u32) -> Dimension {
        if remaining == 0 {
            return Dimension::ZERO;
        }
        if let Some(&(v, _)) = self.best.get(&remaining) {
            return v;
        }
        let costs: Vec<(usize, Dimension)> = members(remaining).map(|k| (k, self.cost(k, remaining))).collect();
        let mut best: Option<(Dimension, u32)> = None;
        // Enumerate nonempty sub-blocks in decreasing mask order.
        let mut block = remaining;
        while block != 0 {
            let head = costs
                .iter()
                .filter(|(k, _)| block >> k & 1 == 1)
                .map(|&(_, c)| c)
                .max()
                .expect("block is nonempty");
            if best.map_or(true, |(b, _)| head < b) {
                let tail = self.solve(remaining & !block);
                let v = head.max(tail);
                if best.map_or(true, |(b, _)| v < b) {
                    best = Some((v, block));
                }
            }
            block = (block - 1) & remaining;
        }
        let best = best.expect("remaining is nonempty");
        self.best.insert(remaining, best);
        best.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::disjoint_union;
    use crate::set::ElementSet;

    fn class(sets: &[&[u32]]) -> ConceptClass {
        ConceptClass::from_sets(sets.iter().map(|s| ElementSet::from(*s))).unwrap()
    }

    fn singletons_and_empty(n: u32) -> ConceptClass {
        let mut sets = vec![ElementSet::new()];
        sets.extend((1..=n).map(|i| ElementSet::from([i])));
        ConceptClass::with_domain(n + 1, sets).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let s = singletons_and_empty(3);
        let out = rtd1plus_at_most(&s, 1);
        assert!(out.success);
        assert_eq!(out.plan.order, vec![1, 2, 3, 0]);
        assert_eq!(out.plan.dims, vec![1.into(), 1.into(), 1.into(), 0.into()]);

        let chain = class(&[&[1], &[1, 2]]);
        let out = rtd1plus_at_most(&chain, 0);
        assert!(!out.success);
        assert_eq!(out.stuck, vec![0, 1]);
    }

    #[test]
    fn rtd1plus_examples() {
        assert_eq!(rtd1plus(&class(&[&[1], &[2], &[3]])).0, Dimension::Finite(1));
        assert_eq!(rtd1plus(&class(&[&[1], &[1, 2], &[1, 2, 3]])).0, Dimension::Finite(1));
        assert_eq!(rtd1plus(&class(&[&[4]])).0, Dimension::ZERO);
    }

    #[test]
    fn disjoint_union_of_order_one_classes() {
        let a = class(&[&[1], &[2]]);
        let b = class(&[&[0], &[0, 1]]);
        let u = disjoint_union(&[a, b], 64).unwrap();
        let (v, _) = rtd1plus(&u);
        assert!(v == Dimension::Finite(1) || v == Dimension::Finite(2));
    }

    #[test]
    fn canonical_examples() {
        let s = singletons_and_empty(3);
        let seq = canonical_sequence(&s, false);
        assert_eq!(seq.order(), Dimension::Finite(1));
        assert_eq!(seq.blocks[0].members, vec![1, 2, 3]);
        assert_eq!(seq.blocks[1].members, vec![0]);
        assert!(validate_sequence(&s, &seq, false).unwrap().valid);

        let one = class(&[&[0]]);
        let seq = canonical_sequence(&one, true);
        assert_eq!(seq.blocks.len(), 1);
        assert_eq!(seq.order(), Dimension::ZERO);

        let chain = class(&[&[1], &[1, 2]]);
        assert_eq!(canonical_sequence(&chain, false).order(), Dimension::Finite(1));
    }

    #[test]
    fn exact_examples() {
        let s = singletons_and_empty(3);
        let (v, seq) = rtd_exact(&s, false).unwrap();
        assert_eq!(v, Dimension::Finite(1));
        assert!(validate_sequence(&s, &seq, false).unwrap().valid);
        assert_eq!(rtd_exact(&class(&[&[1], &[2]]), false).unwrap().0, Dimension::Finite(1));
        let many = ConceptClass::from_sets((0..9).map(|i| ElementSet::from([i]))).unwrap();
        assert!(matches!(rtd_exact(&many, false), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn exact_handles_duplicates() {
        let c = class(&[&[1], &[1], &[2], &[]]);
        let (v, seq) = rtd_exact(&c, true).unwrap();
        assert_eq!(v, Dimension::Finite(1));
        assert!(validate_sequence(&c, &seq, true).unwrap().valid);
    }

    #[test]
    fn single_block_is_td() {
        let s = singletons_and_empty(4);
        let seq = TeachingSequence::from_partition(&s, vec![(0..5).collect()], false).unwrap();
        assert_eq!(seq.order(), Dimension::Finite(4));
        assert!(validate_sequence(&s, &seq, false).unwrap().valid);
    }

    #[test]
    fn partition_errors() {
        let c = class(&[&[1], &[2]]);
        let mk = |blocks: Vec<Vec<usize>>| TeachingSequence {
            blocks: blocks
                .into_iter()
                .map(|members| Block { members, order: Dimension::ZERO })
                .collect(),
        };
        assert_eq!(validate_sequence(&c, &mk(vec![vec![0]]), false), Err(Error::MissingFromSequence(1)));
        assert_eq!(
            validate_sequence(&c, &mk(vec![vec![0, 1], vec![1]]), false),
            Err(Error::RepeatedInSequence(1))
        );
        assert_eq!(validate_sequence(&c, &mk(vec![vec![0, 1], vec![]]), false), Err(Error::EmptyBlock(1)));
        assert!(matches!(
            validate_sequence(&c, &mk(vec![vec![0, 1, 7]]), false),
            Err(Error::IndexOutOfRange { index: 7, .. })
        ));
    }

    #[test]
    fn wrong_declared_order_is_rejected() {
        let c = class(&[&[1], &[2]]);
        let seq = TeachingSequence {
            blocks: vec![Block { members: vec![0, 1], order: Dimension::Finite(2) }],
        };
        let v = validate_sequence(&c, &seq, false).unwrap();
        assert!(!v.valid);
        assert_eq!(v.recomputed, vec![Dimension::Finite(1)]);
        // Positive sequences accept any order with witnesses of at most that size.
        assert!(validate_sequence(&c, &seq, true).unwrap().valid);
    }
}
