use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::mod_inverse;

/// A possibly fractional exponent `num/den`, bound to a concrete field only
/// when it is resolved modulo `q - 1`.
///
/// Writing `1/6` for the inverse of 6 modulo `q - 1` lets one catalog entry
/// describe a polynomial family uniformly in the extension degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FracExp {
    pub num: i64,
    pub den: u64,
}

impl FracExp {
    pub const ZERO: FracExp = FracExp { num: 0, den: 1 };

    pub fn int(num: i64) -> Self {
        FracExp { num, den: 1 }
    }

    pub fn new(num: i64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::precondition("exponent denominator must be positive"));
        }
        Ok(FracExp { num, den })
    }

    pub fn is_formal_zero(&self) -> bool {
        self.num == 0
    }

    /// Resolves the exponent for a field of order `q`.
    ///
    /// The formal exponent 0 resolves to 0; anything else lands in
    /// `[1, q - 1]`, so `x^(q-1)` stays the indicator of nonzero elements
    /// rather than collapsing to the constant 1.
    pub fn resolve(&self, q: u64) -> Result<u64> {
        if self.num == 0 {
            return Ok(0);
        }
        let m = q - 1;
        let inv = mod_inverse(self.den as i128, m).ok_or(Error::NonInvertibleExponent {
            den: self.den,
            modulus: m,
        })?;
        let r = ((self.num as i128).rem_euclid(m as i128) as u128 * inv as u128 % m as u128) as u64;
        Ok(if r == 0 { m } else { r })
    }
}

impl From<i64> for FracExp {
    fn from(num: i64) -> Self {
        FracExp::int(num)
    }
}

impl fmt::Display for FracExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for FracExp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |_| Error::parse(0, format!("bad exponent {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => FracExp::new(n.trim().parse().map_err(bad)?, d.trim().parse().map_err(bad)?),
            None => Ok(FracExp::int(s.parse().map_err(bad)?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixths_mod_31_and_7() {
        let sixth = FracExp::new(1, 6).unwrap();
        // (5 * 2^4 - 2) / 3 = 26
        assert_eq!(sixth.resolve(32).unwrap(), 26);
        assert_eq!(sixth.resolve(32).unwrap(), (5 * 16 - 2) / 3);
        assert_eq!(sixth.resolve(8).unwrap(), 6);
        assert_eq!(FracExp::new(5, 6).unwrap().resolve(8).unwrap(), 2);
        assert_eq!(FracExp::new(3, 6).unwrap().resolve(8).unwrap(), 4);
    }

    #[test]
    fn zero_and_full_period() {
        assert_eq!(FracExp::ZERO.resolve(16).unwrap(), 0);
        assert_eq!(FracExp::int(15).resolve(16).unwrap(), 15);
        assert_eq!(FracExp::int(30).resolve(16).unwrap(), 15);
        assert_eq!(FracExp::int(-1).resolve(16).unwrap(), 14);
        assert_eq!(FracExp::int(7).resolve(2).unwrap(), 1);
    }

    #[test]
    fn non_invertible_denominator() {
        let e = FracExp::new(1, 3).unwrap();
        assert!(matches!(
            e.resolve(16),
            Err(Error::NonInvertibleExponent { den: 3, modulus: 15 })
        ));
        assert!(FracExp::new(1, 0).is_err());
    }

    #[test]
    fn parse_and_display() {
        let e: FracExp = "5/6".parse().unwrap();
        assert_eq!(e, FracExp { num: 5, den: 6 });
        assert_eq!(e.to_string(), "5/6");
        assert_eq!("-3".parse::<FracExp>().unwrap().to_string(), "-3");
        assert!("x".parse::<FracExp>().is_err());
    }
}
