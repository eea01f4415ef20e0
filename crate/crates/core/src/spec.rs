//! Ring-construction specifications.
//!
//! Grammar (no whitespace):
//!
//! ```text
//! spec := "zn:" NAT
//!       | "prod(" spec ("," spec)+ ")"
//!       | "quot(zn:" NAT ",[" NAT ("," NAT)* "])"
//! NAT  := [0-9]+
//! ```
//!
//! Quotient coefficient lists are little-endian, stored reduced mod `n`, and
//! must end in a coefficient congruent to 1 (monic modulus).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// `Z/nZ`.
    Cyclic(u64),
    /// Direct product of the children, first child least significant.
    Product(Vec<RingSpec>),
    /// `Z/nZ[x] / (modulus)` with a monic little-endian modulus.
    Quotient { n: u64, modulus: Vec<u64> },
}

impl RingSpec {
    pub fn parse(text: &str) -> Result<RingSpec> {
        let mut parser = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        let spec = parser.spec()?;
        if parser.pos != parser.src.len() {
            return Err(Error::syntax(parser.pos, "trailing input"));
        }
        Ok(spec)
    }

    pub fn is_product(&self) -> bool {
        matches!(self, RingSpec::Product(_))
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RingSpec::parse(s)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Cyclic(n) => write!(f, "zn:{n}"),
            RingSpec::Product(children) => {
                f.write_str("prod(")?;
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{child}")?;
                }
                f.write_str(")")
            }
            RingSpec::Quotient { n, modulus } => {
                write!(f, "quot(zn:{n},[")?;
                for (i, c) in modulus.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("])")
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn spec(&mut self) -> Result<RingSpec> {
        let rest = &self.src[self.pos..];
        if rest.starts_with(b"zn:") {
            self.pos += 3;
            let at = self.pos;
            let n = self.nat()?;
            check_modulus_base(at, n)?;
            Ok(RingSpec::Cyclic(n))
        } else if rest.starts_with(b"prod(") {
            self.pos += 5;
            let mut children = vec![self.spec()?];
            while self.eat(b',') {
                children.push(self.spec()?);
            }
            if children.len() < 2 {
                return Err(Error::syntax(
                    self.pos,
                    "product needs at least two factors",
                ));
            }
            self.expect(b')')?;
            Ok(RingSpec::Product(children))
        } else if rest.starts_with(b"quot(zn:") {
            self.pos += 8;
            let at = self.pos;
            let n = self.nat()?;
            check_modulus_base(at, n)?;
            self.expect(b',')?;
            self.expect(b'[')?;
            let list_at = self.pos;
            let mut modulus = vec![self.nat()? % n];
            while self.eat(b',') {
                modulus.push(self.nat()? % n);
            }
            self.expect(b']')?;
            self.expect(b')')?;
            if modulus.len() < 2 {
                return Err(Error::syntax(
                    list_at,
                    "modulus must have degree at least 1",
                ));
            }
            if modulus.last() != Some(&1) {
                return Err(Error::syntax(list_at, "modulus is not monic"));
            }
            Ok(RingSpec::Quotient { n, modulus })
        } else {
            Err(Error::syntax(
                self.pos,
                "expected \"zn:\", \"prod(\" or \"quot(zn:\"",
            ))
        }
    }

    fn nat(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::syntax(start, "expected a natural number"));
        }
        // digits only, so the slice is valid utf-8
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::syntax(start, "number too large"))
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.src.get(self.pos) == Some(&byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(Error::syntax(
                self.pos,
                format!("expected '{}'", byte as char),
            ))
        }
    }
}

fn check_modulus_base(pos: usize, n: u64) -> Result<()> {
    if n < 2 {
        Err(Error::syntax(pos, "trivial or empty ring (n < 2)"))
    } else {
        Ok(())
    }
}
