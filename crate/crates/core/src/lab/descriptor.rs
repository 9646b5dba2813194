//! Decidable stand-ins for r.e. sets.

use crate::error::{Error, Result};
use crate::set::ElementSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A set of naturals whose membership, finiteness and cofiniteness are
/// decidable, together with a fixed enumeration.
///
/// Text form: `finite:{1,4}`, `cofinite:{}`, `prog:2t+0,3t+1` (the union of
/// `{a·t + b : t ∈ ℕ}`; `a = 0` gives the singleton `{b}`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetDescriptor {
    Finite(ElementSet),
    /// The complement of the listed elements.
    Cofinite(ElementSet),
    Progressions(Vec<(u32, u32)>),
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl SetDescriptor {
    pub fn evens() -> Self {
        SetDescriptor::Progressions(alloc::vec![(2, 0)])
    }

    pub fn contains(&self, x: u32) -> bool {
        match self {
            SetDescriptor::Finite(f) => f.contains(x),
            SetDescriptor::Cofinite(e) => !e.contains(x),
            SetDescriptor::Progressions(ps) => ps
                .iter()
                .any(|&(a, b)| if a == 0 { x == b } else { x >= b && (x - b) % a == 0 }),
        }
    }

    pub fn is_infinite(&self) -> bool {
        match self {
            SetDescriptor::Finite(_) => false,
            SetDescriptor::Cofinite(_) => true,
            SetDescriptor::Progressions(ps) => ps.iter().any(|&(a, _)| a > 0),
        }
    }

    fn period(&self) -> u32 {
        match self {
            SetDescriptor::Progressions(ps) => ps
                .iter()
                .filter(|&&(a, _)| a > 0)
                .fold(1, |l, &(a, _)| l / gcd(l, a) * a),
            _ => 1,
        }
    }

    fn offset(&self) -> u32 {
        match self {
            SetDescriptor::Finite(s) | SetDescriptor::Cofinite(s) => s.last().map_or(0, |m| m + 1),
            SetDescriptor::Progressions(ps) => ps.iter().map(|&(_, b)| b + 1).max().unwrap_or(0),
        }
    }

    /// Beyond `offset()`, membership is periodic with period `period()`, so
    /// one full period decides cofiniteness.
    pub fn is_cofinite(&self) -> bool {
        match self {
            SetDescriptor::Finite(_) => false,
            SetDescriptor::Cofinite(_) => true,
            SetDescriptor::Progressions(_) => {
                let (o, p) = (self.offset(), self.period());
                (o..o + p).all(|x| self.contains(x))
            }
        }
    }

    /// A size parameter read off the description alone: every horizon the
    /// lab derives is a function of it.
    pub fn scale(&self) -> u32 {
        self.offset() + self.period()
    }

    /// `W ∩ [0, bound)`.
    pub fn below(&self, bound: u32) -> ElementSet {
        (0..bound).filter(|&x| self.contains(x)).collect()
    }

    /// The stage-`s` approximation `W_s`. Cofinite sets enumerate by value
    /// (`W_s = W ∩ [0, s)`); the others enumerate their elements in
    /// increasing order, one per stage.
    pub fn stage(&self, s: u32) -> ElementSet {
        match self {
            SetDescriptor::Cofinite(_) => self.below(s),
            SetDescriptor::Finite(f) => f.iter().take(s as usize).collect(),
            SetDescriptor::Progressions(_) => {
                let end = if self.is_infinite() { u32::MAX } else { self.offset() };
                (0..end).filter(|&x| self.contains(x)).take(s as usize).collect()
            }
        }
    }

    /// The least stage after which the enumeration never changes; `None`
    /// for infinite sets.
    pub fn settling_stage(&self) -> Option<u32> {
        match self {
            SetDescriptor::Finite(f) => Some(f.len() as u32),
            SetDescriptor::Cofinite(_) => None,
            SetDescriptor::Progressions(_) => {
                (!self.is_infinite()).then(|| self.below(self.offset()).len() as u32)
            }
        }
    }

    /// Increasing enumeration of the complement below `bound`.
    pub fn complement_below(&self, bound: u32) -> Vec<u32> {
        (0..bound).filter(|&x| !self.contains(x)).collect()
    }
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetDescriptor::Finite(s) => write!(f, "finite:{s}"),
            SetDescriptor::Cofinite(s) => write!(f, "cofinite:{s}"),
            SetDescriptor::Progressions(ps) => {
                f.write_str("prog:")?;
                for (k, (a, b)) in ps.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}t+{b}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_braced(body: &str) -> Option<ElementSet> {
    let inner = body.trim().strip_prefix('{')?.strip_suffix('}')?;
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().ok())
        .collect()
}

fn parse_progression(term: &str) -> Option<(u32, u32)> {
    let (a, b) = term.trim().split_once("t+")?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

impl FromStr for SetDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Descriptor(s.to_string());
        let (kind, body) = s.split_once(':').ok_or_else(bad)?;
        match kind.trim() {
            "finite" => parse_braced(body).map(SetDescriptor::Finite).ok_or_else(bad),
            "cofinite" => parse_braced(body).map(SetDescriptor::Cofinite).ok_or_else(bad),
            "prog" => {
                let ps: Option<Vec<_>> = body.split(',').map(parse_progression).collect();
                match ps {
                    Some(ps) if !ps.is_empty() => Ok(SetDescriptor::Progressions(ps)),
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }
}
