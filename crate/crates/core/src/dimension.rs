use core::fmt;

/// A dimension or order value: a natural number or `∞`.
///
/// `Finite(_) < Infinite`, so `max` over members computes the supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    Finite(u32),
    Infinite,
}

impl Dimension {
    pub const ZERO: Dimension = Dimension::Finite(0);

    pub fn finite(self) -> Option<u32> {
        match self {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    /// `self ≤ d` for a natural bound `d`.
    pub fn at_most(self, d: u32) -> bool {
        self <= Dimension::Finite(d)
    }
}

impl From<u32> for Dimension {
    fn from(d: u32) -> Self {
        Dimension::Finite(d)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => f.write_str("inf"),
        }
    }
}

/// Supremum of an iterator of values; `0` when empty.
pub fn sup(values: impl IntoIterator<Item = Dimension>) -> Dimension {
    values.into_iter().max().unwrap_or(Dimension::ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn ordering_and_display() {
        assert!(Dimension::Finite(100) < Dimension::Infinite);
        assert_eq!(sup([1.into(), Dimension::Infinite, 3.into()]), Dimension::Infinite);
        assert_eq!(sup([]), Dimension::ZERO);
        assert_eq!(Dimension::Infinite.to_string(), "inf");
        assert!(Dimension::Finite(2).at_most(2));
        assert!(!Dimension::Infinite.at_most(u32::MAX));
    }
}
