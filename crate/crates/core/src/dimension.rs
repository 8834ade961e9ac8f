use std::fmt;

/// A natural number or ∞, ordered with ∞ on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl Dimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match *self {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }
}

impl From<u64> for Dimension {
    fn from(d: u64) -> Self {
        Dimension::Finite(d)
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => write!(f, "infinite"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_largest() {
        assert!(Dimension::Infinite > Dimension::Finite(u64::MAX));
        assert!(Dimension::Finite(2) < Dimension::Finite(4));
        assert_eq!(Dimension::Infinite.to_string(), "infinite");
    }
}
