//! Gadgets for distinguishing sets, `TD`, `TD⁺` and `XTD⁺`.

use super::descriptor::SetDescriptor;
use super::staged::{evaluate_stages, stage_restrict, Horizons, StagedFamily};
use super::{LabReport, Linkage};
use crate::class::{is_teaching_set, Concept, ConceptClass, Domain, LabeledExample, Sample};
use crate::coding::join;
use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::set::{subsets_of_size, ElementSet};
use crate::td::{positive_teaching_dimension, td_of_class, tdplus_of_class, teaching_dimension, DifferenceSystem};
use crate::xtd::{min_positive_specifying_set, xtdplus_of_class, StructureReport};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

fn too_small(msg: String) -> Error {
    Error::HorizonTooSmall(msg)
}

// ---------------------------------------------------------------------------
// Distinguishing sets: column i is ℕ if i = 0 or W has an element above i,
// and {0, …, i} otherwise.

/// Default horizons for the distinguishing-set gadget of `w`.
pub fn acds_horizons(w: &SetDescriptor) -> Horizons {
    let columns = w.scale() + 2;
    let domain = columns + 2;
    Horizons {
        columns,
        stages: 2 * domain + w.scale(),
        domain,
        multiplicity: 0,
    }
}

pub fn build_acds_gadget(w: &SetDescriptor, h: Horizons) -> Result<StagedFamily> {
    if h.columns + 1 > h.domain {
        return Err(too_small(format!(
            "{} columns need a domain of at least {}",
            h.columns,
            h.columns + 1
        )));
    }
    let names = (0..h.columns).map(|i| format!("w{i}")).collect();
    StagedFamily::from_fn(names, h, |i, s| {
        let i = i as u32;
        if i == 0 || w.stage(s).last().is_some_and(|m| m > i) {
            ElementSet::full(h.domain)
        } else {
            ElementSet::full(i + 1)
        }
    })
}

/// Verdict: the empty set distinguishes column 0 at the stage horizon.
/// Predicts that `W` is infinite.
pub fn verify_acds(w: &SetDescriptor, h: Horizons) -> Result<LabReport> {
    let family = build_acds_gadget(w, h)?;
    let mut report = LabReport::new("acds", h);
    report.param("w", w);

    let verdict = evaluate_stages(&family, |c| crate::td::is_distinguishing_set(c, 0, &ElementSet::new()))?;
    let settle = family.settling_stage();
    report.param("family_settled_at", settle);
    report.param("verdict_settled_at", verdict.settled_at);
    report.check(
        "verdict settles no later than the family",
        verdict.settled_at <= settle,
        format!("verdict {} from stage {}", verdict.value, verdict.settled_at),
    );
    let limit = stage_restrict(&family, h.stages)?;
    report.check(
        "empty set distinguishes column 0 iff the class is a singleton",
        verdict.value == (limit.distinct_count() == 1),
        format!("{} distinct columns", limit.distinct_count()),
    );
    report.linkage = Some(Linkage {
        property: "infinite",
        predicted: verdict.value,
        ground_truth: w.is_infinite(),
    });
    Ok(report)
}

// ---------------------------------------------------------------------------
// TD for every member: H_{c,i} = {c} ⊕ (W ∪ {i}) for i > 0, {c} ⊕ W for i = 0.

/// Builds `{H_{c,i} : (c, W) ∈ columns, i < J}` with `W` truncated below the
/// domain horizon `M = h.domain` (`J ≤ M` required). Concepts are named
/// `h<c>.<i>` and listed column by column.
pub fn build_t1_gadget(columns: &[(u32, SetDescriptor)], h: Horizons) -> Result<ConceptClass> {
    if h.columns > h.domain {
        return Err(too_small(format!("{} indices need a horizon of at least {}", h.columns, h.columns)));
    }
    let max_tag = columns.iter().map(|&(c, _)| c).max().ok_or(Error::EmptyClass)?;
    let mut concepts = Vec::new();
    for (c, w) in columns {
        let tag = ElementSet::from([*c]);
        let base = w.below(h.domain);
        for i in 0..h.columns {
            let mut body = base.clone();
            if i > 0 {
                body.insert(i);
            }
            concepts.push(Concept::new(format!("h{c}.{i}"), join(&tag, &body)));
        }
    }
    let size = 2 * max_tag.max(h.domain) + 2;
    ConceptClass::new(Domain::new(size)?, concepts)
}

pub fn t1_horizons(w: &SetDescriptor) -> Horizons {
    let j = w.scale() + 2;
    Horizons {
        columns: j,
        stages: 0,
        domain: j,
        multiplicity: 0,
    }
}

/// Two columns with tags 0 and 1 over the same `W`. Verdict: `TD` of the
/// class is unchanged when the horizon doubles. Predicts that `W` is
/// cofinite.
pub fn verify_t1(w: &SetDescriptor, h: Horizons) -> Result<LabReport> {
    let columns = [(0, w.clone()), (1, w.clone())];
    let class = build_t1_gadget(&columns, h)?;
    let mut report = LabReport::new("t1", h);
    report.param("w", w);
    report.param("tags", "0,1");
    let j = h.columns;
    let idx = |c: u32, i: u32| (c * j + i) as usize;

    let dup_ok = (1..j)
        .filter(|&i| w.contains(i) && i < h.domain)
        .all(|i| class.set(idx(0, i)) == class.set(idx(0, 0)));
    report.check("members i > 0 of W give H_i = H_0", dup_ok, "");

    let outside: Vec<u32> = (1..j).filter(|&i| !w.contains(i)).collect();
    report.param("non_members_below_horizon", outside.len());

    // {(2c,+)} ∪ {(2i+1,-) : i ∉ W, 0 < i < J} teaches H_{c,0}.
    let mut base = alloc::vec![LabeledExample::positive(0)];
    base.extend(outside.iter().map(|&i| LabeledExample::negative(2 * i + 1)));
    let base = Sample::new(base)?;
    report.check(
        "tag plus negative markers teach H_0",
        is_teaching_set(&class, idx(0, 0), &base),
        format!("{} examples", base.len()),
    );

    if w.is_cofinite() {
        for &i in &outside {
            let expected = Sample::new([LabeledExample::positive(0), LabeledExample::positive(2 * i + 1)])?;
            let td = teaching_dimension(&class, idx(0, i))?.dimension;
            report.check(
                "tag and marker teach H_i for i outside W",
                td == Dimension::Finite(2) && is_teaching_set(&class, idx(0, i), &expected),
                format!("i = {i}, TD = {td}"),
            );
        }
    } else {
        let sys = DifferenceSystem::for_teaching(&class, idx(0, 0))?;
        let t = teaching_dimension(&class, idx(0, 0))?;
        let witness = t.witness.expect("TD is finite on finite classes");
        for &i in &outside {
            let forced = sys.constraints.iter().any(|c| *c == ElementSet::from([2 * i + 1]));
            report.check(
                "every teaching set for H_0 contains (2i+1,-)",
                forced && witness.negatives().contains(2 * i + 1),
                format!("i = {i}"),
            );
        }
    }

    let td = td_of_class(&class);
    let doubled = Horizons {
        columns: 2 * j,
        domain: 2 * h.domain,
        ..h
    };
    let td2 = td_of_class(&build_t1_gadget(&columns, doubled)?);
    report.param("td", td);
    report.param("td_doubled", td2);
    report.linkage = Some(Linkage {
        property: "cofinite",
        predicted: td == td2,
        ground_truth: w.is_cofinite(),
    });
    Ok(report)
}

// ---------------------------------------------------------------------------
// TD⁺ for every member: L_0 = {a} ⊕ W, L_{i+1} = {a} ⊕ W if i ∈ W and
// {a} ⊕ ({i} ∪ (W ∩ [0, i))) otherwise.

/// Builds `L_0, …, L_J` from the approximation `w_of(i)` of membership and
/// the set `content` of `W`'s elements kept.
fn tdplus_class(a: u32, columns: u32, content: &ElementSet, member: impl Fn(u32) -> bool) -> Result<ConceptClass> {
    let tag = ElementSet::from([a]);
    let mut concepts = alloc::vec![Concept::new("l0", join(&tag, content))];
    for i in 0..columns {
        let body = if member(i) {
            content.clone()
        } else {
            let mut b: ElementSet = content.iter().filter(|&x| x < i).collect();
            b.insert(i);
            b
        };
        concepts.push(Concept::new(format!("l{}", i + 1), join(&tag, &body)));
    }
    let size = (2 * a + 1).max(2 * columns) + 1;
    ConceptClass::new(Domain::new(size)?, concepts)
}

/// The gadget with `W` kept below `content_bound` and markers `i < columns`
/// (`columns > content_bound` required, so that markers beyond the kept part
/// of `W` exist).
pub fn build_tdplus_gadget(w: &SetDescriptor, a: u32, columns: u32, content_bound: u32) -> Result<ConceptClass> {
    if columns <= content_bound {
        return Err(too_small(format!(
            "markers below {columns} must extend past the content bound {content_bound}"
        )));
    }
    tdplus_class(a, columns, &w.below(content_bound), |i| w.contains(i))
}

/// The same construction read off the stage-`s` approximation of `W`.
pub fn tdplus_stage_class(w: &SetDescriptor, a: u32, columns: u32, content_bound: u32, s: u32) -> Result<ConceptClass> {
    let ws = w.stage(s);
    tdplus_class(a, columns, &ws.truncated(content_bound), |i| ws.contains(i))
}

pub fn tdplus_horizons(w: &SetDescriptor) -> Horizons {
    let columns = 2 * w.scale() + 2;
    Horizons {
        columns,
        stages: columns + w.scale() + 2,
        domain: 2 * columns + 1,
        multiplicity: 0,
    }
}

/// Verdict: `TD⁺` of the class is finite. Predicts that `W` is cofinite.
/// Also runs the budget-3 refutation on `L_0` at every stage.
pub fn verify_tdplus(w: &SetDescriptor, a: u32, h: Horizons) -> Result<LabReport> {
    let content_bound = h.columns / 2;
    let class = build_tdplus_gadget(w, a, h.columns, content_bound)?;
    let mut report = LabReport::new("tdplus-forall", Horizons { domain: class.domain().size(), ..h });
    report.param("w", w);
    report.param("a", a);
    report.param("content_bound", content_bound);

    let tdplus = tdplus_of_class(&class);
    report.param("tdplus", tdplus);
    let l0 = positive_teaching_dimension(&class, 0)?.dimension;
    report.param("tdplus_l0", l0);
    let refuted = matches!(refute_positive_teaching_set(&class, 0, 3)?, Refutation::Refuted { .. });
    report.check(
        "budget-3 refutation of L_0 agrees with TD⁺(L_0)",
        refuted == !l0.at_most(3),
        format!("refuted = {refuted}"),
    );

    let mut last = None;
    let mut settled_at = 0;
    for s in 0..=h.stages {
        let c = tdplus_stage_class(w, a, h.columns, content_bound, s)?;
        let r = matches!(refute_positive_teaching_set(&c, 0, 3)?, Refutation::Refuted { .. });
        if last.is_some_and(|l| l != r) {
            settled_at = s;
        }
        last = Some(r);
    }
    report.param("refutation_settled_at", settled_at);
    report.check(
        "staged refutation converges to the limit verdict",
        last == Some(refuted),
        format!("settled at stage {settled_at}"),
    );

    report.linkage = Some(Linkage {
        property: "cofinite",
        predicted: tdplus.is_finite(),
        ground_truth: w.is_cofinite(),
    });
    Ok(report)
}

// ---------------------------------------------------------------------------
// XTD⁺: the pair {ℕ, G} with G = ℕ if W is infinite and {0} ∪ [0, m) when
// W stops changing at stage m.

pub fn xtdplus_horizons(w: &SetDescriptor) -> Horizons {
    let domain = w.scale() + 3;
    Horizons {
        columns: 2,
        stages: 2 * domain + w.scale(),
        domain,
        multiplicity: 0,
    }
}

pub fn build_xtdplus_gadget(w: &SetDescriptor, h: Horizons) -> Result<StagedFamily> {
    let names = alloc::vec![String::from("nat"), String::from("g")];
    StagedFamily::from_fn(names, h, |j, s| {
        if j == 0 {
            return ElementSet::full(h.domain);
        }
        // Least m ≤ s with W_m = W_s.
        let ws = w.stage(s);
        let m = (0..=s).find(|&m| w.stage(m) == ws).unwrap_or(s);
        let mut g = ElementSet::full(m);
        g.insert(0);
        g
    })
}

/// Verdict: `XTD⁺` of the stage-horizon class is finite. Predicts that `W` is
/// infinite.
pub fn verify_xtdplus(w: &SetDescriptor, h: Horizons) -> Result<LabReport> {
    let family = build_xtdplus_gadget(w, h)?;
    let mut report = LabReport::new("xtdplus", h);
    report.param("w", w);
    let verdict = evaluate_stages(&family, |c| Ok(xtdplus_of_class(c).dimension.is_finite()))?;
    report.param("verdict_settled_at", verdict.settled_at);
    report.param("family_settled_at", family.settling_stage());

    let limit = stage_restrict(&family, h.stages)?;
    let x = xtdplus_of_class(&limit);
    if let StructureReport::Overlap { element, .. } = x.report {
        let h0 = ElementSet::from([element]);
        report.check(
            "overlap element has no positive specifying set",
            min_positive_specifying_set(&limit, &h0).is_none(),
            format!("hypothesis {h0}"),
        );
    }
    report.check(
        "verdict settles no later than the family",
        verdict.settled_at <= family.settling_stage(),
        "",
    );
    report.linkage = Some(Linkage {
        property: "infinite",
        predicted: verdict.value,
        ground_truth: w.is_infinite(),
    });
    Ok(report)
}

// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// Every `S ⊆ class[i]` with `|S| ≤ budget`, paired with the index of a
    /// concept of different extension containing it.
    Refuted { covers: Vec<(ElementSet, usize)> },
    /// The least `S` (by size, then lexicographically) no other concept
    /// contains.
    NotRefuted { unrefuted: ElementSet },
}

/// Tries to show that `class[i]` has no positive teaching set of size at most
/// `budget`.
pub fn refute_positive_teaching_set(class: &ConceptClass, i: usize, budget: u32) -> Result<Refutation> {
    class.check_index(i)?;
    let target = class.set(i);
    let others: Vec<usize> = class
        .distinct_indices()
        .into_iter()
        .filter(|&j| class.set(j) != target)
        .collect();
    let mut covers = Vec::new();
    for k in 0..=(budget as usize).min(target.len()) {
        for s in subsets_of_size(target, k) {
            match others.iter().find(|&&j| s.is_subset(class.set(j))) {
                Some(&j) => covers.push((s, j)),
                None => return Ok(Refutation::NotRefuted { unrefuted: s }),
            }
        }
    }
    Ok(Refutation::Refuted { covers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn finite(xs: &[u32]) -> SetDescriptor {
        SetDescriptor::Finite(ElementSet::from(xs))
    }

    #[test]
    fn acds_columns() {
        let w = finite(&[5]);
        let h = Horizons {
            columns: 9,
            stages: 40,
            domain: 12,
            multiplicity: 0,
        };
        let f = build_acds_gadget(&w, h).unwrap();
        let cols = f.columns_at(40).unwrap();
        for (i, c) in cols.iter().enumerate() {
            if i == 0 || i < 5 {
                assert_eq!(*c, ElementSet::full(12), "column {i}");
            } else {
                assert_eq!(*c, ElementSet::full(i as u32 + 1), "column {i}");
            }
        }
        let limit = stage_restrict(&f, 40).unwrap();
        assert!(!crate::td::is_distinguishing_set(&limit, 0, &ElementSet::new()).unwrap());

        let empty = build_acds_gadget(&finite(&[]), h).unwrap();
        let limit = stage_restrict(&empty, 40).unwrap();
        assert!(limit.distinct_count() >= 2);
        assert_eq!(*limit.set(0), ElementSet::full(12));
    }

    #[test]
    fn acds_infinite() {
        let w = SetDescriptor::evens();
        let r = verify_acds(&w, acds_horizons(&w)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.linkage.unwrap().predicted);
    }

    #[test]
    fn t1_cases() {
        let cof = SetDescriptor::Cofinite(ElementSet::from([1, 3]));
        let r = verify_t1(&cof, t1_horizons(&cof)).unwrap();
        assert!(r.passed(), "{r:?}");
        let coinf = SetDescriptor::evens();
        let r = verify_t1(&coinf, t1_horizons(&coinf)).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(!r.linkage.unwrap().predicted);
    }

    #[test]
    fn t1_duplicates() {
        let w = finite(&[2]);
        let h = Horizons {
            columns: 4,
            stages: 0,
            domain: 4,
            multiplicity: 0,
        };
        let c = build_t1_gadget(&[(0, w)], h).unwrap();
        assert_eq!(c.set(2), c.set(0));
        assert_eq!(c.set(1).to_vec(), vec![0, 3, 5]);
    }

    #[test]
    fn tdplus_cases() {
        let cof = SetDescriptor::Cofinite(ElementSet::from([2]));
        let r = verify_tdplus(&cof, 0, tdplus_horizons(&cof)).unwrap();
        assert!(r.passed(), "{r:?}");
        let coinf = finite(&[1, 4]);
        let h = tdplus_horizons(&coinf);
        let r = verify_tdplus(&coinf, 0, h).unwrap();
        assert!(r.passed(), "{r:?}");
        let class = build_tdplus_gadget(&coinf, 0, h.columns, h.columns / 2).unwrap();
        assert!(matches!(
            refute_positive_teaching_set(&class, 0, 3).unwrap(),
            Refutation::Refuted { .. }
        ));
    }

    #[test]
    fn refutation_examples() {
        let c = ConceptClass::from_sets([ElementSet::from([1]), ElementSet::from([1, 2])]).unwrap();
        match refute_positive_teaching_set(&c, 0, 1).unwrap() {
            Refutation::Refuted { covers } => assert!(covers.iter().all(|&(_, j)| j == 1)),
            other => panic!("{other:?}"),
        }
        let d = ConceptClass::from_sets([ElementSet::from([1]), ElementSet::from([2])]).unwrap();
        assert_eq!(
            refute_positive_teaching_set(&d, 0, 1).unwrap(),
            Refutation::NotRefuted {
                unrefuted: ElementSet::from([1])
            }
        );
    }

    #[test]
    fn xtdplus_cases() {
        for w in [SetDescriptor::evens(), finite(&[0, 3]), SetDescriptor::Cofinite(ElementSet::new())] {
            let r = verify_xtdplus(&w, xtdplus_horizons(&w)).unwrap();
            assert!(r.passed(), "{w}: {r:?}");
        }
    }
}
