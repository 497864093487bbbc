use serde::{Deserialize, Serialize};

use super::{FiniteRing, RingElement};
use crate::error::{Error, Result};
use crate::linalg::Ambient;
use crate::scalar::prime_divisors;

/// Explicit ring description: cyclic orders, generator products, unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDefinition {
    pub orders: Vec<i64>,
    pub mul: Vec<Vec<RingElement>>,
    pub one: RingElement,
}

impl RingDefinition {
    pub fn build(&self) -> Result<FiniteRing> {
        let amb = Ambient::new(self.orders.clone())?;
        FiniteRing::new(amb, self.mul.clone(), self.one.clone())
    }

    pub fn of(ring: &FiniteRing) -> Self {
        RingDefinition { orders: ring.ambient().orders().to_vec(), mul: ring.table(), one: ring.one() }
    }
}

/// Parses `Zmod(n)`, `GF(p,e)`, `F<q>`, `Mat(k, R)` and `Prod(R, S)`.
pub fn parse_ring(s: &str) -> Result<FiniteRing> {
    let mut p = Parser { src: s, pos: 0 };
    let ring = p.ring()?;
    p.skip_ws();
    if p.pos != s.len() {
        return Err(Error::Parse(format!("trailing input in ring spec {s:?}")));
    }
    Ok(ring)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn ident(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return Err(self.err("expected integer"));
        }
        let v = rest[..len].parse().map_err(|_| self.err("integer out of range"))?;
        self.pos += len;
        Ok(v)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn ring(&mut self) -> Result<FiniteRing> {
        let name = self.ident().to_string();
        match name.as_str() {
            "Zmod" | "Z" => {
                self.expect('(')?;
                let n = self.int()?;
                self.expect(')')?;
                FiniteRing::zmod(n)
            }
            "GF" => {
                self.expect('(')?;
                let p = self.int()?;
                self.skip_ws();
                let e = if self.src[self.pos..].starts_with(',') {
                    self.expect(',')?;
                    self.int()?
                } else {
                    1
                };
                self.expect(')')?;
                FiniteRing::field(p, e as usize)
            }
            "F" => {
                let q = self.int()?;
                let ps = prime_divisors(q as u64);
                if ps.len() != 1 {
                    return Err(Error::InvalidParameter(format!("F{q}: {q} is not a prime power")));
                }
                let p = ps[0] as i64;
                let mut e = 0;
                let mut m = q;
                while m > 1 {
                    m /= p;
                    e += 1;
                }
                Ok(FiniteRing::field(p, e)?.with_name(format!("F{q}")))
            }
            "Mat" => {
                self.expect('(')?;
                let k = self.int()?;
                self.expect(',')?;
                let r = self.ring()?;
                self.expect(')')?;
                FiniteRing::matrix_ring(&r, k as usize)
            }
            "Prod" => {
                self.expect('(')?;
                let r = self.ring()?;
                self.expect(',')?;
                let s = self.ring()?;
                self.expect(')')?;
                FiniteRing::product(&r, &s)
            }
            "" => Err(self.err("expected ring name")),
            other => Err(Error::Parse(format!("unknown ring constructor {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_constructors() {
        assert_eq!(parse_ring("Zmod(6)").unwrap().size(), Some(6));
        assert_eq!(parse_ring("Mat(2, Zmod(3))").unwrap().size(), Some(81));
        assert_eq!(parse_ring(" Prod( Zmod(2) , Zmod(3) ) ").unwrap().one(), vec![1, 1]);
        assert_eq!(parse_ring("GF(2,2)").unwrap().size(), Some(4));
        assert_eq!(parse_ring("F4").unwrap().label(), "F4");
        assert_eq!(parse_ring("F5").unwrap().size(), Some(5));
        assert_eq!(parse_ring("Mat(2, Zmod(2))").unwrap().label(), "Mat(2, Zmod(2))");
    }

    #[test]
    fn bad_specs() {
        for s in ["", "Zmod(0)", "Zmod(6", "Foo(2)", "F6", "GF(4,1)", "Zmod(6) x", "Mat(0, Zmod(2))"] {
            assert!(parse_ring(s).is_err(), "{s}");
        }
    }

    #[test]
    fn definition_round_trip() {
        let r = parse_ring("Mat(2, Zmod(2))").unwrap();
        let def = RingDefinition::of(&r);
        let json = serde_json::to_string(&def).unwrap();
        let back: RingDefinition = serde_json::from_str(&json).unwrap();
        let r2 = back.build().unwrap();
        assert_eq!(r2.table(), r.table());
        assert_eq!(r2.one(), r.one());
    }

    #[test]
    fn definition_rejects_non_ring() {
        let def = RingDefinition { orders: vec![2], mul: vec![vec![vec![0]]], one: vec![1] };
        assert!(def.build().is_err());
    }
}
