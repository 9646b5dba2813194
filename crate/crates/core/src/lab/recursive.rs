//! Gadgets for recursive teaching: `L_k`, the mover count `m(a, n, s)` and
//! the family assembled from it, and `G^{a,n}`.

use super::descriptor::SetDescriptor;
use super::staged::Horizons;
use super::{LabReport, Linkage};
use crate::class::{disjoint_union_sets, Concept, ConceptClass, Domain};
use crate::coding::{finite_set_decode, join, pair};
use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::rtd::{rtd1plus, validate_sequence, Block, TeachingSequence};
use crate::set::ElementSet;
use crate::td::{positive_teaching_dimension, teaching_dimension_within};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// Largest `k` accepted by the `L_k` and `G^{a,n}` builders.
pub const MAX_K: u32 = 12;

fn check_k(k: u32) -> Result<()> {
    if k > MAX_K {
        return Err(Error::SizeBound {
            what: "gadget parameter k",
            limit: MAX_K as usize,
            got: k as usize,
        });
    }
    Ok(())
}

/// Number of proper subsets of `[0, k]`.
pub fn proper_subsets(k: u32) -> u32 {
    (1 << (k + 1)) - 1
}

/// `f_k(j)`: cycles through the canonical indices `0, …, 2^{k+1} - 2` of the
/// proper subsets of `[0, k]`.
pub fn f_k(k: u32, j: u32) -> u64 {
    (j % proper_subsets(k)) as u64
}

/// `L^k_0 = [0, k] ⊕ ∅` and `L^k_{j+1} = D_{f_k(j)} ⊕ {j}`.
pub fn lk_member(k: u32, index: u32) -> ElementSet {
    match index {
        0 => join(&ElementSet::range_inclusive(0, k), &ElementSet::new()),
        j => join(&finite_set_decode(f_k(k, j - 1)), &ElementSet::from([j - 1])),
    }
}

/// `L_k` with `multiplicity` markers for every proper subset of `[0, k]`.
/// Concept 0 is named `top`, marker `j` is named `m<j>`.
pub fn build_lk_gadget(k: u32, multiplicity: u32) -> Result<ConceptClass> {
    check_k(k)?;
    let markers = multiplicity * proper_subsets(k);
    let mut concepts = alloc::vec![Concept::new("top", lk_member(k, 0))];
    concepts.extend((0..markers).map(|j| Concept::new(format!("m{j}"), lk_member(k, j + 1))));
    let size = (2 * k + 1).max(2 * markers) + 1;
    ConceptClass::new(Domain::new(size)?, concepts)
}

/// Checks on `L_k`. `subfamilies` lists index sets to test; each must name at
/// least two concepts.
pub fn verify_lk(k: u32, multiplicity: u32, subfamilies: &[Vec<usize>]) -> Result<LabReport> {
    let class = build_lk_gadget(k, multiplicity)?;
    let h = Horizons {
        columns: class.len() as u32,
        stages: 0,
        domain: class.domain().size(),
        multiplicity,
    };
    let mut report = LabReport::new("lk", h);
    report.param("k", k);

    let bad: Vec<usize> = (1..class.len())
        .filter(|&i| positive_teaching_dimension(&class, i).map(|t| t.dimension) != Ok(Dimension::Finite(1)))
        .collect();
    report.check("every marker has TD⁺ = 1", bad.is_empty(), format!("failing markers: {bad:?}"));

    let top = positive_teaching_dimension(&class, 0)?.dimension;
    report.check(
        "scheduling the top concept first costs k + 1",
        top == Dimension::Finite(k + 1),
        format!("TD⁺(top) = {top}"),
    );

    let (whole, _) = rtd1plus(&class);
    report.param("rtd1plus_truncated", whole);

    for sub in subfamilies {
        let c = class.subclass(sub)?;
        if c.distinct_count() < 2 {
            return Err(Error::SizeBound {
                what: "subfamily distinct concepts (minimum)",
                limit: 2,
                got: c.distinct_count(),
            });
        }
        let (v, _) = rtd1plus(&c);
        report.check("finite subfamily has RTD₁⁺ = 1", v == Dimension::Finite(1), format!("{sub:?}: {v}"));
    }
    Ok(report)
}

// ---------------------------------------------------------------------------

/// The `n`-th element (from 0) of `[0, bound) \ w_s`, if there is one.
fn nth_complement(w_s: &ElementSet, n: u32, bound: u32) -> Option<u32> {
    (0..bound).filter(|&x| !w_s.contains(x)).nth(n as usize)
}

/// `m(a, n, s)`: the number of `t < s` at which the `n`-th element of the
/// complement of `W_{a,t}` within `[0, bound)` differs from that of
/// `W_{a,t+1}` (running out of complement counts as a change).
pub fn mover_count(a: &SetDescriptor, n: u32, s: u32, bound: u32) -> u32 {
    let mut count = 0;
    let mut prev = nth_complement(&a.stage(0), n, bound);
    for t in 0..s {
        let next = nth_complement(&a.stage(t + 1), n, bound);
        if next != prev {
            count += 1;
        }
        prev = next;
    }
    count
}

/// `m(a, n, S)` for `n < h.columns`, with `S = h.stages` and bound `h.domain`.
pub fn mover_profile(a: &SetDescriptor, h: Horizons) -> Vec<u32> {
    let stages: Vec<ElementSet> = (0..=h.stages).map(|t| a.stage(t)).collect();
    (0..h.columns)
        .map(|n| {
            stages
                .windows(2)
                .filter(|w| nth_complement(&w[0], n, h.domain) != nth_complement(&w[1], n, h.domain))
                .count() as u32
        })
        .collect()
}

/// `⊔_i ⊔_{n < N} {L^i_j : j < m(a_i, n, S)}` for the listed descriptors
/// `a_0, a_1, …`. Returns the class and the column sizes per part.
pub fn build_rtd_reduction(parts: &[SetDescriptor], h: Horizons) -> Result<(ConceptClass, Vec<Vec<u32>>)> {
    let mut names = Vec::new();
    let mut outer = Vec::new();
    let mut sizes = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        let i = i as u32;
        check_k(i)?;
        let profile = mover_profile(a, h);
        let inner: Vec<Vec<ElementSet>> = profile
            .iter()
            .map(|&m| (0..m).map(|j| lk_member(i, j)).collect())
            .collect();
        for (n, &m) in profile.iter().enumerate() {
            names.extend((0..m).map(|j| format!("p{i}.n{n}.l{j}")));
        }
        outer.push(disjoint_union_sets(&inner).into_iter().map(|(_, s)| s).collect());
        sizes.push(profile);
    }
    let sets: Vec<ElementSet> = disjoint_union_sets(&outer).into_iter().map(|(_, s)| s).collect();
    let size = sets.iter().filter_map(ElementSet::last).max().map_or(1, |m| m + 1);
    let concepts = names.into_iter().zip(sets).map(|(n, s)| Concept::new(n, s)).collect();
    Ok((ConceptClass::new(Domain::new(size)?, concepts)?, sizes))
}

pub fn rtd_reduction_horizons(a: &SetDescriptor) -> Horizons {
    let columns = a.scale() + 1;
    let domain = a.scale() * (columns + 2) + 1;
    Horizons {
        columns,
        stages: domain + 1,
        domain,
        multiplicity: 0,
    }
}

/// Verdict: the column sizes `m(a, n, S)` are unchanged when the domain and
/// stage horizons double. Predicts that `a` is coinfinite.
pub fn verify_rtd_reduction(a: &SetDescriptor, h: Horizons) -> Result<LabReport> {
    let mut report = LabReport::new("rtd-reduction", h);
    report.param("a", a);
    let sizes = mover_profile(a, h);
    let doubled = Horizons {
        domain: 2 * h.domain,
        stages: 2 * h.stages,
        ..h
    };
    let sizes2 = mover_profile(a, doubled);
    report.param("column_sizes", format!("{sizes:?}"));
    report.param("column_sizes_doubled", format!("{sizes2:?}"));
    report.check(
        "m(a, n, 0) = 0",
        (0..h.columns).all(|n| mover_count(a, n, 0, h.domain) == 0),
        "",
    );
    if let SetDescriptor::Finite(f) = a {
        report.check(
            "m(a, n, s) ≤ |F| for finite F",
            sizes.iter().all(|&m| m as usize <= f.len()),
            format!("|F| = {}", f.len()),
        );
    }
    let small = Horizons { columns: h.columns.min(3), ..h };
    let (class, parts) = build_rtd_reduction(core::slice::from_ref(a), small).or_else(|e| match e {
        Error::EmptyClass => Ok((ConceptClass::from_sets([ElementSet::new()])?, alloc::vec![alloc::vec![]])),
        e => Err(e),
    })?;
    let expected: u32 = parts.iter().flatten().sum();
    report.check(
        "assembled family has one concept per counted move",
        expected == 0 || class.len() as u32 == expected,
        format!("{} concepts", class.len()),
    );
    report.linkage = Some(Linkage {
        property: "coinfinite",
        predicted: sizes == sizes2,
        ground_truth: !a.is_cofinite(),
    });
    Ok(report)
}

// ---------------------------------------------------------------------------
// G^{a,n}. Concepts are countable joins of columns; column c of A_{i,σ} is
//   c = 0:           D_{f_n(σ(0))} ⊕ H_a(i, σ)
//   1 ≤ c ≤ i:       [0, n] ⊕ ∅
//   c = i + j, j ≥ 1: D_{f_n(σ(j))} ⊕ {⟨σ[{0} ∪ [j, |σ|)]⟩}   (j < |σ|)
// and A^n has every column equal to [0, n] ⊕ ∅. Sequence entries range below
// 2^{n+1} - 1, so f_n is the identity on them.

/// The class together with the coordinates of every concept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GanGadget {
    pub class: ConceptClass,
    pub n: u32,
    /// Index of `A^n`, if built.
    pub top: Option<usize>,
    /// `(i, σ)` per concept index; `None` for `A^n`.
    pub members: Vec<Option<(u32, Vec<u32>)>>,
    /// Dense element `x` stands for the pair code `codes[x] = ⟨column, inner⟩`.
    pub codes: Vec<u64>,
    /// Columns `0..column_bound` are realized.
    pub column_bound: u32,
}

impl GanGadget {
    /// Concept indices of `G_i`, in construction order.
    pub fn row(&self, i: u32) -> Vec<usize> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, m)| m.as_ref().is_some_and(|(r, _)| *r == i))
            .map(|(k, _)| k)
            .collect()
    }
}

/// Rank of `seq` among sequences over `[0, e)` ordered by length, then
/// lexicographically. Used as the sequence code `⟨seq⟩`.
fn sequence_rank(seq: &[u32], e: u32) -> Option<u64> {
    let e = e as u64;
    let mut offset = 0u64;
    let mut block = 1u64;
    for _ in 0..seq.len() {
        offset = offset.checked_add(block)?;
        block = block.checked_mul(e)?;
    }
    // offset now counts all shorter sequences.
    let lex = seq.iter().try_fold(0u64, |acc, &x| acc.checked_mul(e)?.checked_add(x as u64))?;
    offset.checked_add(lex)
}

fn sequences(e: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..e).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

fn evens_of(d: &ElementSet) -> Vec<u64> {
    d.iter().map(|x| 2 * x as u64).collect()
}

/// Builds `{A_{i,σ} : (i, L) ∈ rows, 2 ≤ |σ| ≤ L}` and, if `include_top`,
/// `A^n`, with every column index below `column_bound`.
pub fn build_gan(a: &SetDescriptor, n: u32, rows: &[(u32, usize)], column_bound: u32, include_top: bool) -> Result<GanGadget> {
    check_k(n)?;
    let e = proper_subsets(n);
    let full: Vec<u64> = (0..=n).map(|x| 2 * x as u64).collect();
    let overflow = || Error::CodeOverflow("G^{a,n} element");

    // Raw concepts as lists of (column, inner) codes.
    let mut raw: Vec<(String, Option<(u32, Vec<u32>)>, Vec<u64>)> = Vec::new();
    if include_top {
        let mut elems = Vec::new();
        for c in 0..column_bound {
            for &x in &full {
                elems.push(pair(c as u64, x).ok_or_else(overflow)?);
            }
        }
        raw.push((String::from("top"), None, elems));
    }
    for &(i, max_len) in rows {
        for len in 2..=max_len {
            for sigma in sequences(e, len) {
                let last_column = i + len as u32 - 1;
                if last_column >= column_bound {
                    return Err(Error::HorizonTooSmall(format!(
                        "A_{{{i},σ}} with |σ| = {len} reaches column {last_column}, bound is {column_bound}"
                    )));
                }
                let mut elems = Vec::new();
                let mut col0 = evens_of(&finite_set_decode(sigma[0] as u64));
                if a.contains(i) {
                    let code = pair(sequence_rank(&sigma, e).ok_or_else(overflow)?, i as u64).ok_or_else(overflow)?;
                    col0.push(code.checked_mul(2).and_then(|c| c.checked_add(1)).ok_or_else(overflow)?);
                }
                for x in col0 {
                    elems.push(pair(0, x).ok_or_else(overflow)?);
                }
                for c in 1..=i {
                    for &x in &full {
                        elems.push(pair(c as u64, x).ok_or_else(overflow)?);
                    }
                }
                for j in 1..len {
                    let mut tail = alloc::vec![sigma[0]];
                    tail.extend_from_slice(&sigma[j..]);
                    let marker = sequence_rank(&tail, e)
                        .and_then(|r| r.checked_mul(2))
                        .and_then(|r| r.checked_add(1))
                        .ok_or_else(overflow)?;
                    let c = (i as usize + j) as u64;
                    for x in evens_of(&finite_set_decode(sigma[j] as u64)).into_iter().chain([marker]) {
                        elems.push(pair(c, x).ok_or_else(overflow)?);
                    }
                }
                let name = format!(
                    "a{i}.{}",
                    sigma.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join("-")
                );
                raw.push((name, Some((i, sigma)), elems));
            }
        }
    }

    let mut dense: BTreeMap<u64, u32> = BTreeMap::new();
    for (_, _, elems) in &raw {
        for &x in elems {
            dense.insert(x, 0);
        }
    }
    let codes: Vec<u64> = dense.keys().copied().collect();
    for (k, v) in dense.values_mut().enumerate() {
        *v = k as u32;
    }
    let mut concepts = Vec::with_capacity(raw.len());
    let mut members = Vec::with_capacity(raw.len());
    for (name, member, elems) in raw {
        concepts.push(Concept::new(name, elems.iter().map(|x| dense[x]).collect::<ElementSet>()));
        members.push(member);
    }
    let class = ConceptClass::new(Domain::new(codes.len().max(1) as u32)?, concepts)?;
    Ok(GanGadget {
        class,
        n,
        top: include_top.then_some(0),
        members,
        codes,
        column_bound,
    })
}

/// `G^{a,n}` restricted to `i < columns` and `2 ≤ |σ| ≤ max_len`, with `A^n`
/// cut to the columns any member reaches.
pub fn build_gan_gadget(a: &SetDescriptor, n: u32, max_len: usize, columns: u32) -> Result<GanGadget> {
    let rows: Vec<(u32, usize)> = (0..columns).map(|i| (i, max_len)).collect();
    build_gan(a, n, &rows, columns + max_len as u32 - 1, true)
}

/// `((⋃_{i ∈ W} G_i, 1), (G_{x_0}, 1), …, (G_{x_k}, 1), ({A^n}, 1))` over the
/// realized rows.
pub fn cofinite_sequence(g: &GanGadget, a: &SetDescriptor, columns: u32) -> TeachingSequence {
    let one = Dimension::Finite(1);
    let mut blocks = Vec::new();
    let inside: Vec<usize> = (0..columns).filter(|&i| a.contains(i)).flat_map(|i| g.row(i)).collect();
    if !inside.is_empty() {
        blocks.push(Block { members: inside, order: one });
    }
    for x in (0..columns).filter(|&i| !a.contains(i)) {
        blocks.push(Block { members: g.row(x), order: one });
    }
    if let Some(t) = g.top {
        blocks.push(Block { members: alloc::vec![t], order: one });
    }
    TeachingSequence { blocks }
}

/// `(({A^n}, n + 1), (G_0, 1), (G_1, 1), …)` over the realized rows.
pub fn coinfinite_sequence(g: &GanGadget, columns: u32) -> TeachingSequence {
    let mut blocks = Vec::new();
    if let Some(t) = g.top {
        blocks.push(Block {
            members: alloc::vec![t],
            order: Dimension::Finite(g.n + 1),
        });
    }
    for i in 0..columns {
        blocks.push(Block {
            members: g.row(i),
            order: Dimension::Finite(1),
        });
    }
    TeachingSequence { blocks }
}

fn dims(ds: &[Dimension]) -> String {
    let parts: Vec<String> = ds.iter().map(|d| format!("{d}")).collect();
    format!("[{}]", parts.join(", "))
}

/// The first two elements outside `a`, searching below `limit`.
fn first_two_outside(a: &SetDescriptor, limit: u32) -> Option<(u32, u32)> {
    let c = a.complement_below(limit);
    (c.len() >= 2).then(|| (c[0], c[1]))
}

pub fn gan_columns(a: &SetDescriptor) -> u32 {
    let base = a.scale() + 2;
    match first_two_outside(a, 4 * a.scale() + 4) {
        Some((_, x1)) => base.max(x1 + 2),
        None => base,
    }
}

/// Validates the sequence matching `a`'s case: order 1 when `a` is cofinite,
/// order `n + 1` (with `TD⁺(A^n) = n + 1` recomputed) otherwise. In the
/// coinfinite case also checks that each `A_{x_1,σ}` needs exactly `n + 1`
/// positive examples against `G_{x_0}`, with `G_{x_0}` realized for
/// `|τ| ≤ |σ| + x_1 - x_0`.
pub fn verify_gan(a: &SetDescriptor, n: u32, columns: u32) -> Result<LabReport> {
    let max_len = 2;
    let g = build_gan_gadget(a, n, max_len, columns)?;
    let h = Horizons {
        columns,
        stages: 0,
        domain: g.class.domain().size(),
        multiplicity: 0,
    };
    let mut report = LabReport::new("gan", h);
    report.param("a", a);
    report.param("n", n);
    report.param("max_len", max_len);
    report.param("column_bound", g.column_bound);
    report.param("concepts", g.class.len());

    if a.is_cofinite() {
        let seq = cofinite_sequence(&g, a, columns);
        let v = validate_sequence(&g.class, &seq, true)?;
        report.check(
            "cofinite-case sequence is a positive teaching sequence of order 1",
            v.valid && seq.order() == Dimension::Finite(1),
            format!("recomputed {}", dims(&v.recomputed)),
        );
        return Ok(report);
    }

    let seq = coinfinite_sequence(&g, columns);
    let v = validate_sequence(&g.class, &seq, true)?;
    report.check(
        "coinfinite-case sequence is a positive teaching sequence of order n + 1",
        v.valid && seq.order() == Dimension::Finite(n + 1),
        format!("recomputed {}", dims(&v.recomputed)),
    );
    report.check(
        "A^n needs exactly n + 1 positive examples first",
        v.recomputed.first() == Some(&Dimension::Finite(n + 1)),
        "",
    );

    let Some((x0, x1)) = first_two_outside(a, columns) else {
        return Err(Error::HorizonTooSmall(format!(
            "two elements outside {a} below {columns} are needed"
        )));
    };
    report.param("x0", x0);
    report.param("x1", x1);
    let long = max_len + (x1 - x0) as usize;
    let pair_family = build_gan(a, n, &[(x0, long), (x1, max_len)], x1 + max_len as u32, false)?;
    let lower = pair_family.row(x0);
    let mut costs = BTreeMap::new();
    for i in pair_family.row(x1) {
        let d = teaching_dimension_within(&pair_family.class, i, &lower, true)?.dimension;
        *costs.entry(d).or_insert(0u32) += 1;
    }
    report.check(
        "each A_{x1,σ} needs n + 1 positive examples against G_{x0}",
        costs.keys().all(|&d| d == Dimension::Finite(n + 1)),
        format!("cost histogram {}", costs.iter().map(|(d, c)| format!("{d}: {c}")).collect::<Vec<_>>().join(", ")),
    );
    report.linkage = None;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use alloc::vec;

    #[test]
    fn lk_members() {
        assert_eq!(lk_member(1, 0).to_vec(), vec![0, 2]);
        // f_1 cycles through ∅, {0}, {1}.
        assert_eq!(lk_member(1, 1).to_vec(), vec![1]);
        assert_eq!(lk_member(1, 2).to_vec(), vec![0, 3]);
        assert_eq!(lk_member(1, 3).to_vec(), vec![2, 5]);
        assert_eq!(lk_member(1, 4).to_vec(), vec![7]);
        assert_eq!(build_lk_gadget(2, 3).unwrap().len(), 1 + 3 * 7);
    }

    #[test]
    fn lk_claims() {
        for k in 1..=3 {
            let subs = vec![vec![0, 1], vec![0, 2, 3], vec![1, 2]];
            let r = verify_lk(k, 3, &subs).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn lk_single_copies_against_orderings() {
        let c = build_lk_gadget(2, 1).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(oracle::rtd1plus(&c), Dimension::Finite(1));
        assert_eq!(rtd1plus(&c).0, Dimension::Finite(1));
    }

    #[test]
    fn mover_examples() {
        let nat = SetDescriptor::Cofinite(ElementSet::new());
        assert_eq!(mover_count(&nat, 0, 0, 10), 0);
        // The 0th complement element moves 0 → 1 → … → 9 → none.
        assert_eq!(mover_count(&nat, 0, 20, 10), 10);
        let f = SetDescriptor::Finite(ElementSet::from([0, 1, 5]));
        for n in 0..6 {
            assert!(mover_count(&f, n, 30, 12) <= 3);
        }
        let evens = SetDescriptor::evens();
        let h = rtd_reduction_horizons(&evens);
        assert_eq!(mover_profile(&evens, h)[0], 1);
        assert!(mover_profile(&evens, h)[1] > 0);
    }

    #[test]
    fn reduction_verdicts() {
        for a in [SetDescriptor::Cofinite(ElementSet::new()), SetDescriptor::Cofinite(ElementSet::from([2]))] {
            let r = verify_rtd_reduction(&a, rtd_reduction_horizons(&a)).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        for a in [SetDescriptor::evens(), SetDescriptor::Finite(ElementSet::from([3]))] {
            let r = verify_rtd_reduction(&a, rtd_reduction_horizons(&a)).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn sequence_ranks() {
        assert_eq!(sequence_rank(&[], 3), Some(0));
        assert_eq!(sequence_rank(&[0], 3), Some(1));
        assert_eq!(sequence_rank(&[2], 3), Some(3));
        assert_eq!(sequence_rank(&[0, 0], 3), Some(4));
        let all: Vec<u64> = (0..4)
            .flat_map(|l| sequences(3, l))
            .map(|s| sequence_rank(&s, 3).unwrap())
            .collect();
        assert_eq!(all, (0..all.len() as u64).collect::<Vec<_>>());
    }

    #[test]
    fn gan_shape() {
        let g = build_gan_gadget(&SetDescriptor::evens(), 1, 2, 3).unwrap();
        assert_eq!(g.class.len(), 1 + 3 * 9);
        assert_eq!(g.row(1).len(), 9);
        assert_eq!(g.class.distinct_count(), g.class.len());
    }

    #[test]
    fn gan_cases() {
        let cof = SetDescriptor::Cofinite(ElementSet::new());
        let r = verify_gan(&cof, 1, gan_columns(&cof)).unwrap();
        assert!(r.passed(), "{r:?}");
        let evens = SetDescriptor::evens();
        let r = verify_gan(&evens, 1, gan_columns(&evens)).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
