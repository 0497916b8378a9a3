use std::fmt;
use std::str::FromStr;

use super::FieldCtx;
use crate::error::{Error, Result};

/// Parsed field spec string: `p^n`, optional `/mod=<encoding>`, then any
/// number of `:2` / `:3` tower steps. `p` alone means `p^1`.
///
/// ```
/// use gfperm::field::FieldSpec;
/// let spec: FieldSpec = "2^5:2".parse().unwrap();
/// assert_eq!(spec.build().unwrap().q(), 1 << 10);
/// assert!("4^1/bad".parse::<FieldSpec>().is_err());
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub n: u32,
    pub modulus: Option<u64>,
    pub tower: Vec<u32>,
}

impl FieldSpec {
    pub fn build(&self) -> Result<FieldCtx> {
        let mut field = match self.modulus {
            Some(enc) => FieldCtx::with_modulus_encoding(self.p, self.n, enc)?,
            None => FieldCtx::new(self.p, self.n)?,
        };
        for &k in &self.tower {
            field = match k {
                2 => field.extend_quadratic(None)?,
                3 => field.extend_cubic()?,
                _ => unreachable!("parser admits only 2 and 3"),
            };
        }
        Ok(field)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.n)?;
        if let Some(m) = self.modulus {
            write!(f, "/mod={m}")?;
        }
        for k in &self.tower {
            write!(f, ":{k}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn number(&mut self) -> Result<u64> {
        let rest = &self.s[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(Error::parse(self.pos, "expected a number"));
        }
        let v = rest[..len]
            .parse()
            .map_err(|_| Error::parse(self.pos, "number out of range"))?;
        self.pos += len;
        Ok(v)
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.s[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut c = Cursor { s: &compact, pos: 0 };
        let p = c.number()?;
        let n = if c.eat("^") {
            let at = c.pos;
            u32::try_from(c.number()?).map_err(|_| Error::parse(at, "degree out of range"))?
        } else {
            1
        };
        let modulus = if c.eat("/") {
            if !c.eat("mod=") {
                return Err(Error::parse(c.pos, "expected mod=<encoding> after '/'"));
            }
            Some(c.number()?)
        } else {
            None
        };
        let mut tower = Vec::new();
        while c.eat(":") {
            let at = c.pos;
            match c.number()? {
                k @ (2 | 3) => tower.push(k as u32),
                _ => return Err(Error::parse(at, "tower steps are :2 or :3")),
            }
        }
        if c.pos != compact.len() {
            return Err(Error::parse(c.pos, format!("unexpected {:?}", &compact[c.pos..])));
        }
        Ok(FieldSpec { p, n, modulus, tower })
    }
}

/// Parses and builds a field in one step.
pub fn parse_field(s: &str) -> Result<FieldCtx> {
    s.parse::<FieldSpec>()?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let s: FieldSpec = "3^2/mod=10:2".parse().unwrap();
        assert_eq!(
            s,
            FieldSpec {
                p: 3,
                n: 2,
                modulus: Some(10),
                tower: vec![2]
            }
        );
        assert_eq!(s.to_string(), "3^2/mod=10:2");
        let s: FieldSpec = "7:3".parse().unwrap();
        assert_eq!((s.p, s.n, s.tower.clone()), (7, 1, vec![3]));
        assert_eq!("2 ^ 5".parse::<FieldSpec>().unwrap().n, 5);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            "4^1/bad".parse::<FieldSpec>(),
            Err(Error::parse(4, "expected mod=<encoding> after '/'"))
        );
        assert!(matches!("2^3:4".parse::<FieldSpec>(), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!("x".parse::<FieldSpec>(), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!("2^3x".parse::<FieldSpec>(), Err(Error::Parse { pos: 3, .. })));
        assert_eq!(parse_field("4"), Err(Error::NotPrime(4)));
        assert!(matches!(parse_field("2:3"), Err(Error::Precondition(_))));
    }
}
