use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldSelector {
    /// Exact rationals, characteristic 0.
    #[default]
    Rationals,
    /// `F_q` for a prime `q`.
    Prime(u32),
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSelector {
    pub fn prime(q: u64) -> Result<Self> {
        if !is_prime(q) || q > u64::from(u32::MAX) {
            return Err(Error::NotPrime(q));
        }
        Ok(FieldSelector::Prime(q as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSelector::Rationals => 0,
            FieldSelector::Prime(q) => q,
        }
    }
}

impl fmt::Display for FieldSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSelector::Rationals => write!(f, "QQ"),
            FieldSelector::Prime(q) => write!(f, "F{q}"),
        }
    }
}

impl FromStr for FieldSelector {
    type Err = Error;

    /// Accepts `QQ` or `F<q>` such as `F2`, `F32003`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "QQ" | "Q" => Ok(FieldSelector::Rationals),
            _ => {
                let q = s
                    .strip_prefix('F')
                    .and_then(|q| q.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidParameters(format!("unknown field {s:?}")))?;
                FieldSelector::prime(q)
            }
        }
    }
}

impl Serialize for FieldSelector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!("QQ".parse::<FieldSelector>().unwrap(), FieldSelector::Rationals);
        assert_eq!("F2".parse::<FieldSelector>().unwrap(), FieldSelector::Prime(2));
        assert_eq!("F32003".parse::<FieldSelector>().unwrap(), FieldSelector::Prime(32003));
        assert_eq!("F4".parse::<FieldSelector>(), Err(Error::NotPrime(4)));
        assert!("R".parse::<FieldSelector>().is_err());
        assert_eq!(FieldSelector::Prime(7).to_string(), "F7");
    }
}
