//! Text formats: concept classes and teaching-sequence files.
//!
//! A class file is
//!
//! ```text
//! # gadget lk k=2 mult=3
//! domain 6
//! concept top: 0 2 4
//! concept m0: 1
//! ```
//!
//! `#` starts a comment line; blank lines are ignored. The first comment of
//! the form `# gadget …` is kept as the manifest. [`write_class`] emits the
//! normal form: manifest, `domain`, then one line per concept with elements
//! ascending and single spaces.
//!
//! A sequence file lists blocks in order, one per line, as `block: a b c` or
//! with a declared order, `block 2: a b c` (`inf` allowed).

use std::collections::HashMap;
use std::fmt::Write as _;

use teachdim_core::rtd::{Block, TeachingSequence};
use teachdim_core::{Concept, ConceptClass, Dimension, Domain, ElementSet};

use crate::error::{CliError, Result};

const MANIFEST_PREFIX: &str = "# gadget ";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFile {
    pub class: ConceptClass,
    /// The manifest line without its `# gadget ` prefix.
    pub manifest: Option<String>,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("line {line}: {msg}"))
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_class(text: &str) -> Result<ClassFile> {
    let manifest = text
        .lines()
        .find_map(|l| l.trim().strip_prefix(MANIFEST_PREFIX))
        .map(|m| m.trim().to_string());
    let mut lines = content_lines(text);
    let (n, first) = lines.next().ok_or_else(|| CliError::Parse("missing `domain <n>` line".into()))?;
    let size: u32 = first
        .strip_prefix("domain")
        .filter(|rest| rest.starts_with(char::is_whitespace))
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| parse_err(n, "expected `domain <n>`"))?;
    let domain = Domain::new(size).map_err(|e| parse_err(n, e))?;

    let mut concepts = Vec::new();
    for (n, line) in lines {
        let body = line
            .strip_prefix("concept")
            .filter(|rest| rest.starts_with(char::is_whitespace))
            .ok_or_else(|| parse_err(n, "expected `concept <name>: <elements>`"))?;
        let (name, elems) = body.split_once(':').ok_or_else(|| parse_err(n, "missing `:` after the concept name"))?;
        let name = name.trim();
        let mut set = ElementSet::new();
        for tok in elems.split_whitespace() {
            let x: u32 = tok.parse().map_err(|_| parse_err(n, format!("`{tok}` is not an element")))?;
            if !domain.contains(x) {
                return Err(parse_err(n, format!("element {x} is outside the domain of size {size}")));
            }
            set.insert(x);
        }
        concepts.push(Concept::new(name, set));
    }
    let class = ConceptClass::new(domain, concepts)?;
    Ok(ClassFile { class, manifest })
}

pub fn write_class(class: &ConceptClass, manifest: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(m) = manifest {
        let _ = writeln!(out, "{MANIFEST_PREFIX}{m}");
    }
    let _ = writeln!(out, "domain {}", class.domain().size());
    for c in class.concepts() {
        out.push_str("concept ");
        out.push_str(&c.name);
        out.push(':');
        for x in c.elements.iter() {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out
}

/// A parsed sequence file: blocks of concept indices with optional declared
/// orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub blocks: Vec<(Option<Dimension>, Vec<usize>)>,
}

impl SequenceFile {
    /// Fills undeclared orders with the recomputed `d_i`.
    pub fn to_sequence(&self, class: &ConceptClass, positive: bool) -> Result<TeachingSequence> {
        let partition = self.blocks.iter().map(|(_, m)| m.clone()).collect();
        let mut seq = TeachingSequence::from_partition(class, partition, positive)?;
        for (block, (declared, _)) in seq.blocks.iter_mut().zip(&self.blocks) {
            if let Some(d) = declared {
                block.order = *d;
            }
        }
        Ok(seq)
    }
}

fn parse_dimension(s: &str) -> Option<Dimension> {
    match s {
        "inf" => Some(Dimension::Infinite),
        _ => s.parse().ok().map(Dimension::Finite),
    }
}

pub fn parse_sequence(text: &str, class: &ConceptClass) -> Result<SequenceFile> {
    let index: HashMap<&str, usize> = class.concepts().iter().enumerate().map(|(i, c)| (c.name.as_str(), i)).collect();
    let mut blocks = Vec::new();
    for (n, line) in content_lines(text) {
        let (head, names) = line.split_once(':').ok_or_else(|| parse_err(n, "expected `block [<d>]: <names>`"))?;
        let mut head = head.split_whitespace();
        if head.next() != Some("block") {
            return Err(parse_err(n, "expected `block [<d>]: <names>`"));
        }
        let declared = match head.next() {
            None => None,
            Some(d) => Some(parse_dimension(d).ok_or_else(|| parse_err(n, format!("`{d}` is not an order")))?),
        };
        if head.next().is_some() {
            return Err(parse_err(n, "expected `block [<d>]: <names>`"));
        }
        let members = names
            .split_whitespace()
            .map(|name| index.get(name).copied().ok_or_else(|| parse_err(n, format!("unknown concept `{name}`"))))
            .collect::<Result<Vec<_>>>()?;
        blocks.push((declared, members));
    }
    Ok(SequenceFile { blocks })
}

pub fn write_sequence(class: &ConceptClass, seq: &TeachingSequence) -> String {
    let mut out = String::new();
    for Block { members, order } in &seq.blocks {
        let _ = write!(out, "block {order}:");
        for &i in members {
            let _ = write!(out, " {}", class.concepts()[i].name);
        }
        out.push('\n');
    }
    out
}
