use std::fmt;
use std::str::FromStr;

use crate::coeff::Rational;

use super::FibreError;

/// A point of `Spec ℤ` or `Spec k[t]`: a maximal ideal or the generic point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FibrePoint {
    /// `⟨p⟩ ⊂ ℤ`.
    Prime(u64),
    /// `⟨t − c⟩ ⊂ k[t]`.
    Value(Rational),
    /// The zero ideal.
    Generic,
}

impl fmt::Display for FibrePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibrePoint::Prime(p) => write!(f, "p={p}"),
            FibrePoint::Value(c) => write!(f, "t={c}"),
            FibrePoint::Generic => write!(f, "generic"),
        }
    }
}

/// Accepts `p=5`, `t=0`, `t=-1/2` and `generic`.
impl FromStr for FibrePoint {
    type Err = FibreError;

    fn from_str(s: &str) -> Result<Self, FibreError> {
        let bad = || FibreError::BadPoint(s.to_string());
        let s = s.trim();
        if s.eq_ignore_ascii_case("generic") {
            return Ok(FibrePoint::Generic);
        }
        let (key, val) = s.split_once('=').ok_or_else(bad)?;
        match key.trim() {
            "p" => val.trim().parse::<u64>().map(FibrePoint::Prime).map_err(|_| bad()),
            "t" => val.trim().parse::<Rational>().map(FibrePoint::Value).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["p=5", "t=0", "t=-1/2", "generic"] {
            assert_eq!(s.parse::<FibrePoint>().unwrap().to_string(), s);
        }
        assert_eq!("t=2/4".parse::<FibrePoint>().unwrap().to_string(), "t=1/2");
        for s in ["q=5", "p=x", "t=", "t=1/0", "5"] {
            assert!(s.parse::<FibrePoint>().is_err(), "{s}");
        }
    }
}
