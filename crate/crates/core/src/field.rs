//! Coefficient field descriptors.

use crate::error::Error;
use crate::Result;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// The coefficient field of a homology or Betti computation: `Q` or a prime
/// field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    /// Characteristic 0 (exact rational arithmetic).
    Rationals,
    /// The prime field `F_p`.
    Prime(u32),
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// The rationals.
    pub const Q: FieldSpec = FieldSpec::Rationals;
    /// `F_2`.
    pub const F2: FieldSpec = FieldSpec::Prime(2);
    /// `F_3`.
    pub const F3: FieldSpec = FieldSpec::Prime(3);

    /// Prime field constructor; rejects composite or unit characteristics.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for `Q`, `p` for `F_p`.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Parse `q` / `Q` / `f<p>` / `F<p>`.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let lower = s.to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = lower.strip_prefix('f') {
            let p: u32 = rest.parse().map_err(|_| Error::NotPrime(0))?;
            return FieldSpec::prime(p);
        }
        Err(Error::NotPrime(0))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        FieldSpec::parse(&s).map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_is_validated() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(3).is_ok());
        assert!(FieldSpec::prime(31).is_ok());
        assert_eq!(FieldSpec::prime(1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(FieldSpec::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldSpec::prime(0).unwrap_err(), Error::NotPrime(0));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Q);
        assert_eq!(FieldSpec::parse("F2").unwrap(), FieldSpec::F2);
        assert_eq!(FieldSpec::parse("f3").unwrap(), FieldSpec::F3);
        assert!(FieldSpec::parse("f6").is_err());
        assert_eq!(FieldSpec::Q.to_string(), "Q");
        assert_eq!(FieldSpec::F2.to_string(), "F2");
    }

    #[test]
    fn serde_round_trip() {
        for f in [FieldSpec::Q, FieldSpec::F2, FieldSpec::F3] {
            let json = serde_json::to_string(&f).unwrap();
            let back: FieldSpec = serde_json::from_str(&json).unwrap();
            assert_eq!(f, back);
        }
    }
}
