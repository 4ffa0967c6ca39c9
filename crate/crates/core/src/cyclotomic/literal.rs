//! Ring literals: integer Laurent polynomials in the symbol `z`.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := ["+" | "-"] term { ("+" | "-") term }
//! term   := power { "*" power }
//! power  := atom [ "^" ["-"] int ]
//! atom   := int | "z" | "(" expr ")"
//! ```
//!
//! A literal is kept unreduced until [`RingLiteral::reduce`] maps it into
//! `Z[ζ_d]` for a concrete `d`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CycInt, Modulus};
use crate::error::{ParseError, Result};

/// Largest exponent accepted on a non-monomial base.
const MAX_POLY_EXPONENT: i64 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RingLiteral {
    terms: BTreeMap<i64, BigInt>,
}

impl RingLiteral {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(n: impl Into<BigInt>) -> Self {
        Self::monomial(n.into(), 0)
    }

    pub fn monomial(coeff: BigInt, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Canonical literal of a reduced ring element.
    pub fn from_cyc(x: &CycInt) -> Self {
        let terms = x
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m as i64, c.clone()))
            .collect();
        Self { terms }
    }

    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        Self::parse_at(text, 0)
    }

    /// Parses with error positions shifted by `offset` (for embedded literals).
    pub fn parse_at(text: &str, offset: usize) -> std::result::Result<Self, ParseError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            offset,
        };
        p.skip_ws();
        if p.peek().is_none() {
            return Err(p.error("empty ring literal"));
        }
        let value = p.expr()?;
        p.skip_ws();
        if p.peek().is_some() {
            return Err(p.error("unexpected character"));
        }
        Ok(value)
    }

    pub fn reduce(&self, d: u32) -> Result<CycInt> {
        let modulus = Modulus::get(d)?;
        Ok(CycInt::from_terms_in(
            &modulus,
            self.terms.iter().map(|(e, c)| (*e, c)),
        ))
    }

    /// The integer value, if the literal is a constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    fn add(mut self, other: RingLiteral) -> Self {
        for (e, c) in other.terms {
            self.add_term(e, c);
        }
        self
    }

    fn negate(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }

    fn mul(&self, other: &RingLiteral) -> Option<Self> {
        let mut out = RingLiteral::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.checked_add(*e2)?, c1 * c2);
            }
        }
        Some(out)
    }

    /// `Some((coeff, exp))` if the literal is a single term.
    fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }
}

impl fmt::Display for RingLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(e, c)| (*e, c)))
    }
}

/// Writes `c·z^e` terms in the order given; an empty sequence renders as `0`.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        match (e, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => f.write_str("z")?,
            (1, false) => write!(f, "{mag}*z")?,
            (_, true) => write!(f, "z^{e}")?,
            (_, false) => write!(f, "{mag}*z^{e}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    offset: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::new(self.offset + self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> std::result::Result<RingLiteral, ParseError> {
        self.skip_ws();
        let negate_first = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.negate();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(self.term()?);
            } else if self.eat(b'-') {
                acc = acc.add(self.term()?.negate());
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> std::result::Result<RingLiteral, ParseError> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            let start = self.pos;
            let rhs = self.power()?;
            acc = acc.mul(&rhs).ok_or_else(|| ParseError::new(self.offset + start, "exponent overflow"))?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> std::result::Result<RingLiteral, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let negative = self.eat(b'-');
        self.skip_ws();
        let n = self.integer()?;
        let n: i64 = i64::try_from(&n).map_err(|_| ParseError::new(self.offset + start, "exponent too large"))?;
        let n = if negative { -n } else { n };
        if let Some((c, e)) = base.as_monomial() {
            // monomials ±z^e are units and may take any integer exponent
            if c.abs().is_one() {
                let sign = if c.is_negative() && n % 2 != 0 { -BigInt::one() } else { BigInt::one() };
                let exp = e
                    .checked_mul(n)
                    .ok_or_else(|| ParseError::new(self.offset + start, "exponent overflow"))?;
                return Ok(RingLiteral::monomial(sign, exp));
            }
        }
        if n < 0 {
            return Err(ParseError::new(
                self.offset + start,
                "negative exponent only allowed on a unit monomial such as z",
            ));
        }
        if n > MAX_POLY_EXPONENT {
            return Err(ParseError::new(self.offset + start, "exponent too large"));
        }
        let mut acc = RingLiteral::constant(1);
        for _ in 0..n {
            acc = acc
                .mul(&base)
                .ok_or_else(|| ParseError::new(self.offset + start, "exponent overflow"))?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> std::result::Result<RingLiteral, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'z') => {
                self.pos += 1;
                Ok(RingLiteral::monomial(BigInt::one(), 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => Ok(RingLiteral::constant(self.integer()?)),
            Some(_) => Err(self.error("expected integer, 'z' or '('")),
            None => Err(self.error("unexpected end of ring literal")),
        }
    }

    fn integer(&mut self) -> std::result::Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string parses"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn red(d: u32, s: &str) -> CycInt {
        RingLiteral::parse(s).unwrap().reduce(d).unwrap()
    }

    #[test]
    fn parses_and_reduces() {
        assert_eq!(red(5, "1 - z^3 + 2*z").to_string(), "1 + 2*z - z^3");
        assert_eq!(red(5, "z^4").to_string(), "-1 - z - z^2 - z^3");
        assert_eq!(red(5, "z^-1"), red(5, "z^4"));
        assert_eq!(red(4, "(1+z)*(1-z)"), red(4, "2"));
        assert_eq!(red(3, "z*z"), red(3, "-1 - z"));
        assert_eq!(red(7, "(z^2)^3"), red(7, "z^6"));
        assert_eq!(red(6, "(-z)^3"), red(6, "1"));
        assert_eq!(red(5, "  - 3 "), red(5, "-3"));
        assert_eq!(red(5, "(1+z)^2"), red(5, "1 + 2*z + z^2"));
    }

    #[test]
    fn canonical_render_round_trips() {
        for s in ["0", "7", "-z", "1 + 2*z - z^3", "z^-2 + 4*z^5"] {
            let lit = RingLiteral::parse(s).unwrap();
            assert_eq!(lit.to_string(), s);
            assert_eq!(RingLiteral::parse(&lit.to_string()).unwrap(), lit);
        }
    }

    #[test]
    fn errors_carry_positions() {
        let e = RingLiteral::parse("1 + ").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = RingLiteral::parse("1 + y").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = RingLiteral::parse("(1+z)^-1").unwrap_err();
        assert_eq!(e.pos, 6);
        assert!(RingLiteral::parse("").is_err());
        assert!(RingLiteral::parse("(1 + z").is_err());
        assert!(RingLiteral::parse("2 3").is_err());
        let e = RingLiteral::parse_at("1 +", 10).unwrap_err();
        assert_eq!(e.pos, 13);
    }

    #[test]
    fn constants() {
        assert_eq!(RingLiteral::parse("-12").unwrap().as_integer(), Some(BigInt::from(-12)));
        assert_eq!(RingLiteral::parse("z - z").unwrap().as_integer(), Some(BigInt::zero()));
        assert_eq!(RingLiteral::parse("z").unwrap().as_integer(), None);
    }
}
