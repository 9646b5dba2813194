use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use teachdim_core::lab::descriptor::SetDescriptor;
use teachdim_core::lab::gadgets::{acds_horizons, t1_horizons, tdplus_horizons, xtdplus_horizons};
use teachdim_core::lab::recursive::{gan_columns, rtd_reduction_horizons};
use teachdim_core::lab::{self, Horizons, LabReport, Refutation};
use teachdim_core::rtd::{canonical_sequence, rtd1plus, rtd1plus_at_most, rtd_exact, validate_sequence, TeachingSequence};
use teachdim_core::td::{positive_teaching_dimension, td_table, tdplus_table, teaching_dimension};
use teachdim_core::xtd::{min_specifying_set, xtd_of_class, xtdplus_of_class, StructureReport};
use teachdim_core::{oracle, ConceptClass, Dimension, Error as CoreError, Sample};

use crate::cli::{Cli, Command, Config, GadgetParams, Measure, Tag};
use crate::error::{CliError, Result};
use crate::format::{parse_class, parse_sequence, write_class};
use crate::random::{random_class, random_subset, rng};
use crate::report::{digest, RunReport};

/// Default bound on loaded and generated domains.
pub const DEFAULT_MAX_DOMAIN: u32 = 1 << 16;
/// Default domain bound for random classes in `oracle`.
pub const DEFAULT_ORACLE_DOMAIN: u32 = 6;

/// Runs one command. `echo` is the command line as given (without the
/// program name).
pub fn run(cli: &Cli, echo: &str) -> Result<RunReport> {
    let start = Instant::now();
    let cfg = &cli.config;
    let mut report = match &cli.command {
        Command::Dimension { file, measure, all } => dimension(cfg, echo, file, *measure, *all),
        Command::Gadget { gadget: tag, params, out } => gadget(cfg, echo, *tag, params, out),
        Command::Verify { gadget: tag, params } => verify(cfg, echo, *tag, params),
        Command::Oracle {
            measure,
            trials,
            max_concepts,
        } => oracle_suite(cfg, echo, *measure, *trials, *max_concepts),
        Command::Probe { file, concept, budget } => probe(cfg, echo, file, concept, *budget),
        Command::SequenceValidate {
            class,
            sequence,
            positive,
        } => sequence_validate(cfg, echo, class, sequence, *positive),
    }?;
    report.wall_time = start.elapsed();
    Ok(report)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(cfg: &Config, path: &Path) -> Result<(String, ConceptClass)> {
    let text = read(path)?;
    let class = parse_class(&text)?.class;
    check_domain(cfg, &class)?;
    Ok((text, class))
}

fn check_domain(cfg: &Config, class: &ConceptClass) -> Result<()> {
    let bound = cfg.max_domain.unwrap_or(DEFAULT_MAX_DOMAIN);
    let size = class.domain().size();
    if size > bound {
        return Err(CliError::Bound(format!("domain of size {size} exceeds --max-domain {bound}")));
    }
    Ok(())
}

pub fn render_sample(s: &Sample) -> String {
    if s.is_empty() {
        return "{}".into();
    }
    s.examples()
        .iter()
        .map(|e| match e.label {
            teachdim_core::Label::Positive => format!("+{}", e.element),
            teachdim_core::Label::Negative => format!("-{}", e.element),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_witness(w: &Option<Sample>) -> String {
    w.as_ref().map_or_else(|| "none".into(), render_sample)
}

fn name(class: &ConceptClass, i: usize) -> &str {
    &class.concepts()[i].name
}

fn put_sequence(report: &mut RunReport, class: &ConceptClass, seq: &TeachingSequence) {
    for (k, b) in seq.blocks.iter().enumerate() {
        let names: Vec<&str> = b.members.iter().map(|&i| name(class, i)).collect();
        report.result(format!("block.{k}"), format!("{} {}", b.order, names.join(" ")));
    }
}

fn dimension(cfg: &Config, echo: &str, file: &Path, measure: Measure, all: bool) -> Result<RunReport> {
    let (text, class) = load(cfg, file)?;
    let mut report = RunReport::new(echo.into(), digest(text.as_bytes()));
    report.param("measure", measure.name());
    report.result("concepts", class.len());
    report.result("distinct", class.distinct_count());
    report.result("domain", class.domain().size());
    match measure {
        Measure::Td | Measure::Tdplus => {
            let table = if measure == Measure::Td { td_table(&class) } else { tdplus_table(&class) };
            let value = table.iter().map(|t| t.dimension).max().unwrap_or(Dimension::ZERO);
            report.result("value", value);
            if all {
                for (i, t) in table.iter().enumerate() {
                    report.result(format!("concept.{}", name(&class, i)), format!("{} {}", t.dimension, render_witness(&t.witness)));
                }
            } else {
                let i = table.iter().position(|t| t.dimension == value).unwrap_or(0);
                report.result("attained_by", name(&class, i));
                report.result("witness", render_witness(&table[i].witness));
            }
        }
        Measure::Xtd => {
            let x = xtd_of_class(&class)?;
            report.result("value", x.dimension);
            report.result("worst_hypothesis", &x.worst_hypothesis);
            report.result("specifying_set", min_specifying_set(&class, &x.worst_hypothesis).witness);
            report.result("exact", x.exact);
        }
        Measure::Xtdplus => {
            let x = xtdplus_of_class(&class);
            report.result("value", x.dimension);
            match x.report {
                StructureReport::Disjoint { distinct } => {
                    report.result("structure", "disjoint");
                    report.result("distinct_concepts", distinct);
                }
                StructureReport::Overlap { i, j, element } => {
                    report.result("structure", "overlap");
                    report.result("overlapping", format!("{} {}", name(&class, i), name(&class, j)));
                    report.result("witness_element", element);
                }
            }
        }
        Measure::Rtd | Measure::RtdplusSeq => {
            let positive = measure == Measure::RtdplusSeq;
            let (value, seq) = rtd_exact(&class, positive)?;
            report.result("value", value);
            put_sequence(&mut report, &class, &seq);
        }
        Measure::Rtd1plus => {
            let (value, plan) = rtd1plus(&class);
            report.result("value", value);
            for (k, ((&i, d), w)) in plan.order.iter().zip(&plan.dims).zip(&plan.witnesses).enumerate() {
                report.result(format!("plan.{k}"), format!("{} {} {}", name(&class, i), d, render_witness(w)));
            }
        }
    }
    Ok(report)
}

fn descriptor(arg: &Option<String>, flag: &str) -> Result<SetDescriptor> {
    let s = arg.as_deref().ok_or_else(|| CliError::Usage(format!("--{flag} <descriptor> is required")))?;
    Ok(s.parse()?)
}

fn tag_element(arg: &Option<String>) -> Result<u32> {
    match arg.as_deref() {
        None => Ok(0),
        Some(s) => s
            .parse()
            .map_err(|_| CliError::Usage(format!("--a must be a natural number for tdplus-forall, got `{s}`"))),
    }
}

fn override_horizons(cfg: &Config, h: Horizons) -> Horizons {
    Horizons {
        columns: cfg.column_horizon.unwrap_or(h.columns),
        stages: cfg.stage_horizon.unwrap_or(h.stages),
        ..h
    }
}

/// A built gadget: its class, the parameters recorded in the manifest, and
/// the horizons used.
struct Built {
    class: ConceptClass,
    params: BTreeMap<String, String>,
    horizons: Horizons,
}

fn build(cfg: &Config, tag: Tag, p: &GadgetParams) -> Result<Built> {
    let mut params = BTreeMap::new();
    let mut set = |k: &str, v: String| {
        params.insert(k.to_string(), v);
    };
    let (class, horizons) = match tag {
        Tag::Acds => {
            let w = descriptor(&p.w, "w")?;
            set("w", w.to_string());
            let h = override_horizons(cfg, acds_horizons(&w));
            let family = lab::build_acds_gadget(&w, h)?;
            (lab::stage_restrict(&family, h.stages)?, h)
        }
        Tag::T1 => {
            let w = descriptor(&p.w, "w")?;
            set("w", w.to_string());
            set("tag", p.tag.to_string());
            let h = override_horizons(cfg, t1_horizons(&w));
            (lab::build_t1_gadget(&[(p.tag, w)], h)?, h)
        }
        Tag::TdplusForall => {
            let w = descriptor(&p.w, "w")?;
            let a = tag_element(&p.a)?;
            set("w", w.to_string());
            set("a", a.to_string());
            let h = override_horizons(cfg, tdplus_horizons(&w));
            let class = lab::build_tdplus_gadget(&w, a, h.columns, h.columns / 2)?;
            let h = Horizons {
                domain: class.domain().size(),
                ..h
            };
            (class, h)
        }
        Tag::Xtdplus => {
            let w = descriptor(&p.w, "w")?;
            set("w", w.to_string());
            let h = override_horizons(cfg, xtdplus_horizons(&w));
            let family = lab::build_xtdplus_gadget(&w, h)?;
            (lab::stage_restrict(&family, h.stages)?, h)
        }
        Tag::Lk => {
            set("k", p.k.to_string());
            set("mult", p.mult.to_string());
            let class = lab::build_lk_gadget(p.k, p.mult)?;
            let h = Horizons {
                columns: class.len() as u32,
                stages: 0,
                domain: class.domain().size(),
                multiplicity: p.mult,
            };
            (class, h)
        }
        Tag::Gan => {
            let a = descriptor(&p.a, "a")?;
            set("a", a.to_string());
            set("n", p.n.to_string());
            set("max_len", p.max_len.to_string());
            let columns = cfg.column_horizon.unwrap_or_else(|| gan_columns(&a));
            let g = lab::build_gan_gadget(&a, p.n, p.max_len, columns)?;
            let h = Horizons {
                columns,
                stages: 0,
                domain: g.class.domain().size(),
                multiplicity: 0,
            };
            (g.class, h)
        }
        Tag::RtdReduction => {
            let a = descriptor(&p.a, "a")?;
            set("a", a.to_string());
            let h = override_horizons(cfg, rtd_reduction_horizons(&a));
            let class = match lab::build_rtd_reduction(std::slice::from_ref(&a), h) {
                Ok((class, _)) => class,
                Err(CoreError::EmptyClass) => {
                    return Err(CliError::Bound("no column moves within these horizons; the family is empty".into()))
                }
                Err(e) => return Err(e.into()),
            };
            (class, h)
        }
    };
    Ok(Built { class, params, horizons })
}

fn manifest(tag: Tag, params: &BTreeMap<String, String>, h: Horizons) -> String {
    let mut m = tag.name().to_string();
    for (k, v) in params {
        m.push_str(&format!(" {k}={v}"));
    }
    m.push_str(&format!(
        " columns={} stages={} domain={} multiplicity={}",
        h.columns, h.stages, h.domain, h.multiplicity
    ));
    m
}

fn gadget(cfg: &Config, echo: &str, tag: Tag, p: &GadgetParams, out: &Path) -> Result<RunReport> {
    let built = build(cfg, tag, p)?;
    check_domain(cfg, &built.class)?;
    let text = write_class(&built.class, Some(&manifest(tag, &built.params, built.horizons)));
    std::fs::write(out, &text).map_err(|source| CliError::Io {
        path: out.display().to_string(),
        source,
    })?;
    let mut report = RunReport::new(echo.into(), digest(echo.as_bytes()));
    report.param("gadget", tag.name());
    for (k, v) in &built.params {
        report.param(k, v);
    }
    report.horizons = Some(built.horizons.into());
    report.result("concepts", built.class.len());
    report.result("distinct", built.class.distinct_count());
    report.result("domain", built.class.domain().size());
    report.result("class_digest", digest(text.as_bytes()));
    report.result("out", out.display());
    Ok(report)
}

fn lab_report(cfg: &Config, tag: Tag, p: &GadgetParams) -> Result<LabReport> {
    Ok(match tag {
        Tag::Acds => {
            let w = descriptor(&p.w, "w")?;
            lab::verify_acds(&w, override_horizons(cfg, acds_horizons(&w)))?
        }
        Tag::T1 => {
            let w = descriptor(&p.w, "w")?;
            lab::verify_t1(&w, override_horizons(cfg, t1_horizons(&w)))?
        }
        Tag::TdplusForall => {
            let w = descriptor(&p.w, "w")?;
            lab::verify_tdplus(&w, tag_element(&p.a)?, override_horizons(cfg, tdplus_horizons(&w)))?
        }
        Tag::Xtdplus => {
            let w = descriptor(&p.w, "w")?;
            lab::verify_xtdplus(&w, override_horizons(cfg, xtdplus_horizons(&w)))?
        }
        Tag::Lk => {
            let size = lab::build_lk_gadget(p.k, p.mult)?.len();
            let mut r = rng(cfg.seed);
            let subs: Vec<Vec<usize>> = (0..p.subfamilies)
                .map(|_| random_subset(&mut r, size, 2, size.min(10)))
                .collect();
            lab::verify_lk(p.k, p.mult, &subs)?
        }
        Tag::Gan => {
            let a = descriptor(&p.a, "a")?;
            lab::verify_gan(&a, p.n, cfg.column_horizon.unwrap_or_else(|| gan_columns(&a)))?
        }
        Tag::RtdReduction => {
            let a = descriptor(&p.a, "a")?;
            lab::verify_rtd_reduction(&a, override_horizons(cfg, rtd_reduction_horizons(&a)))?
        }
    })
}

fn verify(cfg: &Config, echo: &str, tag: Tag, p: &GadgetParams) -> Result<RunReport> {
    let lab = lab_report(cfg, tag, p)?;
    let mut report = RunReport::new(echo.into(), digest(echo.as_bytes()));
    if tag == Tag::Lk {
        report.param("subfamilies", p.subfamilies);
        report.param("seed", cfg.seed);
    }
    report.absorb(&lab);
    Ok(report)
}

/// Compares one solver with its oracle on `class`; `Some` describes a
/// disagreement.
pub fn compare_with_oracle(measure: Measure, class: &ConceptClass) -> Result<Option<String>> {
    let n = class.len();
    Ok(match measure {
        Measure::Td => (0..n).find_map(|i| {
            let fast = teaching_dimension(class, i).ok()?.dimension;
            let slow = Dimension::Finite(oracle::td(class, i));
            (fast != slow).then(|| format!("concept {i}: solver {fast}, oracle {slow}"))
        }),
        Measure::Tdplus => (0..n).find_map(|i| {
            let fast = positive_teaching_dimension(class, i).ok()?.dimension;
            let slow = oracle::tdplus(class, i);
            (fast != slow).then(|| format!("concept {i}: solver {fast}, oracle {slow}"))
        }),
        Measure::Xtd => {
            let fast = xtd_of_class(class)?.dimension;
            let slow = Dimension::Finite(oracle::xtd(class));
            (fast != slow).then(|| format!("solver {fast}, oracle {slow}"))
        }
        Measure::Xtdplus => {
            let fast = xtdplus_of_class(class).dimension;
            let slow = oracle::xtdplus(class);
            (fast != slow).then(|| format!("solver {fast}, oracle {slow}"))
        }
        Measure::Rtd1plus => {
            let slow = oracle::rtd1plus(class);
            let (fast, _) = rtd1plus(class);
            if fast != slow {
                Some(format!("solver {fast}, oracle {slow}"))
            } else {
                (0..=4).find_map(|d| {
                    let greedy = rtd1plus_at_most(class, d).success;
                    (greedy != slow.at_most(d)).then(|| format!("n = {d}: greedy {greedy}, orderings give {slow}"))
                })
            }
        }
        Measure::Rtd | Measure::RtdplusSeq => {
            let positive = measure == Measure::RtdplusSeq;
            let (fast, _) = rtd_exact(class, positive)?;
            let slow = oracle::rtd(class, positive);
            let canon = canonical_sequence(class, positive).order();
            if fast != slow {
                Some(format!("solver {fast}, oracle {slow}"))
            } else {
                (canon < fast).then(|| format!("canonical order {canon} below the exact value {fast}"))
            }
        }
    })
}

/// Size bounds keeping the oracles tractable.
fn oracle_bounds(measure: Measure) -> (usize, u32) {
    match measure {
        Measure::Td | Measure::Tdplus => (8, 12),
        Measure::Xtd => (8, 14),
        Measure::Xtdplus => (8, 16),
        Measure::Rtd | Measure::RtdplusSeq => (6, 12),
        Measure::Rtd1plus => (8, 12),
    }
}

fn oracle_suite(cfg: &Config, echo: &str, measure: Measure, trials: usize, max_concepts: usize) -> Result<RunReport> {
    let max_domain = cfg.max_domain.unwrap_or(DEFAULT_ORACLE_DOMAIN);
    let (concept_bound, domain_bound) = oracle_bounds(measure);
    if max_concepts > concept_bound || max_domain > domain_bound {
        return Err(CliError::Bound(format!(
            "the {} oracle allows at most {concept_bound} concepts and domain {domain_bound}",
            measure.name()
        )));
    }
    if max_concepts == 0 || max_domain == 0 {
        return Err(CliError::Usage("--max-concepts and --max-domain must be positive".into()));
    }
    let mut report = RunReport::new(echo.into(), digest(echo.as_bytes()));
    report.param("measure", measure.name());
    report.param("trials", trials);
    report.param("max_concepts", max_concepts);
    report.param("max_domain", max_domain);
    report.param("seed", cfg.seed);

    let mut r = rng(cfg.seed);
    let mut mismatches = 0usize;
    for t in 0..trials {
        let class = random_class(&mut r, max_concepts, max_domain);
        if let Some(why) = compare_with_oracle(measure, &class)? {
            if mismatches == 0 {
                report.result("first_mismatch.trial", t);
                report.result("first_mismatch.detail", why);
                report.attach("first_mismatch.class", write_class(&class, None));
            }
            mismatches += 1;
        }
    }
    report.result("mismatches", mismatches);
    report.check(
        "solver agrees with the brute-force oracle",
        mismatches == 0,
        format!("{mismatches} of {trials} classes disagree"),
    );
    Ok(report)
}

fn probe(cfg: &Config, echo: &str, file: &Path, concept: &str, budget: u32) -> Result<RunReport> {
    let (text, class) = load(cfg, file)?;
    let i = class
        .index_of(concept)
        .ok_or_else(|| CliError::Usage(format!("no concept named `{concept}`")))?;
    let mut report = RunReport::new(echo.into(), digest(text.as_bytes()));
    report.param("concept", concept);
    report.param("budget", budget);
    match lab::refute_positive_teaching_set(&class, i, budget)? {
        Refutation::Refuted { covers } => {
            report.result("verdict", "refuted");
            report.result("subsets_checked", covers.len());
            for (s, j) in covers.iter().take(16) {
                report.result(format!("cover.{s}"), name(&class, *j));
            }
        }
        Refutation::NotRefuted { unrefuted } => {
            report.result("verdict", "not-refuted");
            report.result("unrefuted", unrefuted);
        }
    }
    report.result("tdplus", positive_teaching_dimension(&class, i)?.dimension);
    Ok(report)
}

fn sequence_validate(cfg: &Config, echo: &str, class_path: &Path, seq_path: &Path, positive: bool) -> Result<RunReport> {
    let (class_text, class) = load(cfg, class_path)?;
    let seq_text = read(seq_path)?;
    let file = parse_sequence(&seq_text, &class)?;
    let seq = file.to_sequence(&class, positive)?;
    let v = validate_sequence(&class, &seq, positive)?;
    let mut report = RunReport::new(echo.into(), digest(format!("{class_text}\0{seq_text}").as_bytes()));
    report.param("positive", positive);
    report.result("blocks", seq.blocks.len());
    report.result("order", seq.order());
    for (k, (b, r)) in seq.blocks.iter().zip(&v.recomputed).enumerate() {
        let names: Vec<&str> = b.members.iter().map(|&i| name(&class, i)).collect();
        report.result(
            format!("block.{k}"),
            format!("declared {} recomputed {} {}", b.order, r, names.join(" ")),
        );
    }
    report.check(
        "sequence is a valid teaching sequence",
        v.valid,
        if v.rejected.is_empty() {
            String::new()
        } else {
            format!("rejected blocks {:?}", v.rejected)
        },
    );
    Ok(report)
}
