//! Acceptance suite: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::Rng;
use teachdim::random::{random_class, random_subset, rng};
use teachdim_core::class::{consistent, is_teaching_set};
use teachdim_core::lab::descriptor::SetDescriptor;
use teachdim_core::lab::gadgets::{acds_horizons, t1_horizons, tdplus_horizons, xtdplus_horizons};
use teachdim_core::lab::recursive::gan_columns;
use teachdim_core::lab::{build_lk_gadget, verify_acds, verify_gan, verify_lk, verify_t1, verify_tdplus, verify_xtdplus, LabReport};
use teachdim_core::rtd::{canonical_sequence, rtd1plus_at_most, rtd_exact};
use teachdim_core::td::{
    is_distinguishing_set, is_minimal_distinguishing_set, positive_teaching_dimension, td_at_most, teaching_dimension,
};
use teachdim_core::xtd::{xtd_of_class, xtdplus_of_class};
use teachdim_core::{oracle, ConceptClass, Dimension, ElementSet};

const SEED: u64 = 0x7eac_d1e5;
const LIMIT_TD: Duration = Duration::from_secs(30);
const LIMIT_RTD1PLUS: Duration = Duration::from_secs(60);
const LIMIT_XTDPLUS: Duration = Duration::from_secs(30);
/// Greedy decisions are checked for every n in `0..=RTD1PLUS_MAX_N`.
const RTD1PLUS_MAX_N: u32 = 4;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// 1. TD and TD⁺ against exhaustive sample enumeration.
fn td_oracle() -> Outcome {
    let start = Instant::now();
    let mut r = rng(SEED + 1);
    let mut bad = Vec::new();
    for t in 0..200 {
        let c = random_class(&mut r, 5, 8);
        for i in 0..c.len() {
            let td = teaching_dimension(&c, i).unwrap().dimension;
            let tdp = positive_teaching_dimension(&c, i).unwrap().dimension;
            if td != Dimension::Finite(oracle::td(&c, i)) || tdp != oracle::tdplus(&c, i) {
                bad.push(t);
                break;
            }
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < LIMIT_TD,
        format!("200 classes, mismatching trials {bad:?}, {} (limit {})", secs(took), secs(LIMIT_TD)),
    )
}

/// 2. Least-index greedy against all orderings.
fn rtd1plus_oracle() -> Outcome {
    let start = Instant::now();
    let mut r = rng(SEED + 2);
    let mut bad = Vec::new();
    for t in 0..100 {
        let c = random_class(&mut r, 6, 6);
        let truth = oracle::rtd1plus(&c);
        if (0..=RTD1PLUS_MAX_N).any(|n| rtd1plus_at_most(&c, n).success != truth.at_most(n)) {
            bad.push(t);
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < LIMIT_RTD1PLUS,
        format!(
            "100 classes, n in 0..={RTD1PLUS_MAX_N}, mismatching trials {bad:?}, {} (limit {})",
            secs(took),
            secs(LIMIT_RTD1PLUS)
        ),
    )
}

/// 3. Exact RTD and RTD⁺ against ordered-partition search; the canonical
/// sequence never beats the optimum.
fn rtd_exact_oracle() -> Outcome {
    let mut r = rng(SEED + 3);
    let mut bad = Vec::new();
    let mut canonical_above = 0;
    for t in 0..50 {
        let c = random_class(&mut r, 5, 6);
        for positive in [false, true] {
            let (exact, _) = rtd_exact(&c, positive).unwrap();
            let canon = canonical_sequence(&c, positive).order();
            if exact != oracle::rtd(&c, positive) || canon < exact {
                bad.push((t, positive));
            }
            canonical_above += usize::from(canon > exact);
        }
    }
    outcome(
        bad.is_empty(),
        format!("50 classes x {{RTD, RTD⁺}}, mismatches {bad:?}, canonical strictly above optimum {canonical_above} times"),
    )
}

fn singletons_plus_empty(n: u32) -> ConceptClass {
    let mut sets: Vec<ElementSet> = (0..n).map(|i| ElementSet::from([i])).collect();
    sets.push(ElementSet::new());
    ConceptClass::with_domain(n, sets).unwrap()
}

/// 4. Singletons plus the empty set.
fn singletons_family() -> Outcome {
    let mut ok = true;
    let mut empty_td = Vec::new();
    for n in 3..=8u32 {
        let c = singletons_plus_empty(n);
        ok &= (0..n as usize).all(|i| teaching_dimension(&c, i).unwrap().dimension == Dimension::Finite(1));
        let e = teaching_dimension(&c, n as usize).unwrap().dimension;
        ok &= e == Dimension::Finite(n);
        empty_td.push(e);
    }
    ok &= empty_td.windows(2).all(|w| w[0] < w[1]);
    let shown: Vec<String> = empty_td.iter().map(|d| d.to_string()).collect();
    outcome(ok, format!("TD(singleton) = 1 for n = 3..8, TD(empty) = [{}]", shown.join(", ")))
}

/// 5. XTD⁺ fast path against hypothesis enumeration, and the overlap
/// characterization checked directly.
fn xtdplus_characterization() -> Outcome {
    let start = Instant::now();
    let mut r = rng(SEED + 5);
    let mut bad = Vec::new();
    let (mut infinite, mut finite) = (0, 0);
    for t in 0..200 {
        let c = random_class(&mut r, 5, 8);
        let fast = xtdplus_of_class(&c).dimension;
        let distinct = c.distinct_indices();
        let overlap = distinct
            .iter()
            .enumerate()
            .any(|(a, &i)| distinct[a + 1..].iter().any(|&j| c.set(i).intersects(c.set(j))));
        if fast != oracle::xtdplus(&c) || (fast == Dimension::Infinite) != overlap {
            bad.push(t);
        }
        if fast == Dimension::Infinite {
            infinite += 1;
        } else {
            finite += 1;
        }
    }
    let took = start.elapsed();
    outcome(
        bad.is_empty() && took < LIMIT_XTDPLUS && infinite > 0 && finite > 0,
        format!(
            "200 classes ({infinite} infinite, {finite} finite), mismatches {bad:?}, {} (limit {})",
            secs(took),
            secs(LIMIT_XTDPLUS)
        ),
    )
}

/// 6. XTD is at most the number of distinct concepts.
fn xtd_bound() -> Outcome {
    let mut r = rng(SEED + 6);
    let mut bad = Vec::new();
    let mut tight = 0;
    for t in 0..150 {
        let c = random_class(&mut r, 6, 10);
        let k = c.distinct_count() as u32;
        let x = xtd_of_class(&c).unwrap().dimension;
        if !x.at_most(k) {
            bad.push(t);
        }
        tight += usize::from(x == Dimension::Finite(k));
    }
    outcome(
        bad.is_empty(),
        format!("150 classes, <= 6 concepts, domain <= 10, violations {bad:?}, bound attained {tight} times"),
    )
}

fn failed_checks(r: &LabReport) -> Vec<String> {
    let mut out: Vec<String> = r.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if let Some(l) = r.linkage.as_ref().filter(|l| !l.holds()) {
        out.push(format!("linkage {} predicted {} actual {}", l.property, l.predicted, l.ground_truth));
    }
    out
}

/// 7. L_k gadgets.
fn lk_suite() -> Outcome {
    let mut r = rng(SEED + 7);
    let mut failures = Vec::new();
    for k in 1..=3u32 {
        let size = build_lk_gadget(k, 3).unwrap().len();
        let subs: Vec<Vec<usize>> = (0..20).map(|_| random_subset(&mut r, size, 2, size.min(12))).collect();
        let report = verify_lk(k, 3, &subs).unwrap();
        let top_cost = report.checks.iter().any(|c| c.name.contains("costs k + 1") && c.pass);
        if !report.passed() || !top_cost || report.checks.len() != 22 {
            failures.push((k, failed_checks(&report)));
        }
    }
    outcome(
        failures.is_empty(),
        format!("k = 1, 2, 3 with multiplicity 3 and 20 subfamilies each, failures {failures:?}"),
    )
}

/// 8. G^{a,n} for a cofinite and a coinfinite descriptor.
fn gan_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in 1..=2u32 {
        for a in [SetDescriptor::Cofinite(ElementSet::new()), SetDescriptor::evens()] {
            let report = verify_gan(&a, n, gan_columns(&a)).unwrap();
            let expected = if a.is_cofinite() { 1 } else { 3 };
            checks += report.checks.len();
            if !report.passed() || report.checks.len() != expected {
                failures.push((n, a.to_string(), failed_checks(&report)));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("n = 1, 2; a = cofinite:{{}}, prog:2t+0; {checks} checks, failures {failures:?}"),
    )
}

fn descriptors() -> (Vec<SetDescriptor>, Vec<SetDescriptor>) {
    let parse = |xs: &[&str]| xs.iter().map(|s| s.parse().unwrap()).collect::<Vec<SetDescriptor>>();
    let cofinite = parse(&[
        "cofinite:{}",
        "cofinite:{0}",
        "cofinite:{1,4}",
        "cofinite:{2,3,7}",
        "cofinite:{5}",
        "prog:2t+0,2t+1",
        "prog:2t+0,2t+5",
        "prog:3t+0,3t+1,3t+2",
        "prog:2t+0,3t+1,6t+3,6t+5",
        "prog:1t+3",
    ]);
    let coinfinite = parse(&[
        "finite:{}",
        "finite:{3}",
        "finite:{0,2,5}",
        "finite:{1,2,3,4}",
        "prog:2t+0",
        "prog:2t+1",
        "prog:3t+1",
        "prog:3t+0,3t+1",
        "prog:4t+2,6t+1",
        "prog:0t+7,5t+0",
    ]);
    (cofinite, coinfinite)
}

/// 9. Verdicts of the four reduction gadgets against the descriptors'
/// classification.
fn reduction_linkage() -> Outcome {
    let (cofinite, coinfinite) = descriptors();
    assert!(cofinite.iter().all(SetDescriptor::is_cofinite));
    assert!(coinfinite.iter().all(|d| !d.is_cofinite()));
    let mut failures = Vec::new();
    let mut runs = 0;
    for w in cofinite.iter().chain(&coinfinite) {
        let reports = [
            verify_acds(w, acds_horizons(w)),
            verify_t1(w, t1_horizons(w)),
            verify_tdplus(w, 0, tdplus_horizons(w)),
            verify_xtdplus(w, xtdplus_horizons(w)),
        ];
        for r in reports {
            runs += 1;
            match r {
                Ok(r) if r.passed() && r.linkage.is_some() => {}
                Ok(r) => failures.push(format!("{} on {w}: {:?}", r.gadget, failed_checks(&r))),
                Err(e) => failures.push(format!("{w}: {e}")),
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("10 cofinite + 10 coinfinite descriptors x 4 gadgets = {runs} verdicts, failures {failures:?}"),
    )
}

/// 10. MDS implies DS, td_at_most is monotone, witnesses are consistent.
fn predicate_coherence() -> Outcome {
    let mut r = rng(SEED + 10);
    let mut bad = Vec::new();
    let mut mds_seen = 0;
    for t in 0..200 {
        let c = random_class(&mut r, 6, 8);
        let i = r.gen_range(0..c.len());
        let m = c.domain().size();
        let d: ElementSet = (0..m).filter(|_| r.gen_bool(0.4)).collect();
        let mds = is_minimal_distinguishing_set(&c, i, &d).unwrap();
        mds_seen += usize::from(mds);
        let mds_ok = !mds || is_distinguishing_set(&c, i, &d).unwrap();
        let answers: Vec<bool> = (1..=m).map(|k| td_at_most(&c, i, k).unwrap()).collect();
        let monotone = answers.windows(2).all(|w| !w[0] || w[1]);
        let teaching = teaching_dimension(&c, i).unwrap();
        let w = teaching.witness.clone().unwrap();
        let witness_ok = consistent(c.set(i), &w) && is_teaching_set(&c, i, &w);
        let positive_ok = positive_teaching_dimension(&c, i)
            .unwrap()
            .witness
            .is_none_or(|p| consistent(c.set(i), &p) && is_teaching_set(&c, i, &p));
        // The witness support is itself minimal distinguishing.
        let support_mds = is_minimal_distinguishing_set(&c, i, &w.support()).unwrap();
        if !(mds_ok && monotone && witness_ok && positive_ok && support_mds) {
            bad.push(t);
        }
    }
    outcome(
        bad.is_empty(),
        format!("200 triples ({mds_seen} random sets were minimal distinguishing), failures {bad:?}"),
    )
}

fn teachdim(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_teachdim"))
        .args(args)
        .arg("--machine")
        .env_remove("TEACHDIM_SEED")
        .env_remove("TEACHDIM_MACHINE")
        .output()
        .expect("binary runs");
    let mut bytes = out.stdout;
    bytes.extend_from_slice(format!("\nexit {:?}", out.status.code()).as_bytes());
    bytes
}

/// 11. Every command twice with the same seed gives byte-identical machine
/// output.
fn determinism(dir: &Path) -> Outcome {
    let p = |name: &str| dir.join(name).to_str().unwrap().to_string();
    std::fs::write(p("class.txt"), "domain 5\nconcept a: 0 1\nconcept b: 1 2\nconcept c: 3\nconcept d:\nconcept e: 0 4\n").unwrap();
    std::fs::write(p("seq.txt"), "block: c e\nblock: a b d\n").unwrap();
    let class = p("class.txt");
    let seq = p("seq.txt");
    let out = p("gadget.txt");

    let mut commands: Vec<Vec<String>> = Vec::new();
    let s = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    for m in ["td", "tdplus", "xtd", "xtdplus", "rtd", "rtdplus-seq", "rtd1plus"] {
        commands.push(s(&["dimension", &class, "--measure", m, "--all"]));
        commands.push(s(&["oracle", "--measure", m, "--trials", "25", "--max-concepts", "4", "--seed", "3"]));
    }
    let gadget_params: [(&str, &[&str]); 7] = [
        ("acds", &["--w", "prog:2t+0"]),
        ("t1", &["--w", "cofinite:{2}"]),
        ("tdplus-forall", &["--w", "finite:{1}", "--a", "1"]),
        ("xtdplus", &["--w", "finite:{0,3}"]),
        ("lk", &["--k", "2", "--mult", "3"]),
        ("gan", &["--a", "prog:2t+0", "--n", "1"]),
        ("rtd-reduction", &["--a", "cofinite:{}"]),
    ];
    for (tag, params) in gadget_params {
        let mut g = s(&["gadget", tag, "--out", &out]);
        g.extend(s(params));
        commands.push(g);
        let mut v = s(&["verify", tag, "--seed", "5"]);
        v.extend(s(params));
        commands.push(v);
    }
    commands.push(s(&["probe", &class, "--concept", "a", "--budget", "2"]));
    commands.push(s(&["sequence-validate", &class, &seq]));
    commands.push(s(&["sequence-validate", &class, &seq, "--positive"]));

    let mut differing = Vec::new();
    for c in &commands {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        let first = teachdim(&args);
        let second = teachdim(&args);
        if first != second || !first.starts_with(b"{") {
            differing.push(c.join(" "));
        }
    }
    outcome(
        differing.is_empty(),
        format!("{} invocations run twice, differing or non-JSON: {differing:?}", commands.len()),
    )
}

fn main() {
    let dir = tempfile::tempdir().expect("temporary directory");
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("TD/TD⁺ oracle equivalence", Box::new(td_oracle)),
        ("RTD₁⁺ greedy vs all orderings", Box::new(rtd1plus_oracle)),
        ("exact RTD vs ordered partitions", Box::new(rtd_exact_oracle)),
        ("singletons plus empty set", Box::new(singletons_family)),
        ("XTD⁺ characterization", Box::new(xtdplus_characterization)),
        ("XTD bound", Box::new(xtd_bound)),
        ("L_k gadget suite", Box::new(lk_suite)),
        ("G^{a,n} gadget suite", Box::new(gan_suite)),
        ("reduction linkage", Box::new(reduction_linkage)),
        ("predicate coherence", Box::new(predicate_coherence)),
        ("CLI determinism", Box::new(|| determinism(dir.path()))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let mark = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!("{mark} [{:>2}] {name}: {} [{}]", k + 1, o.detail, secs(start.elapsed()));
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
