//! Words in the named generators.
//!
//! ```text
//! word   := [ factor { "*" factor } ]
//! factor := gen [ "^" ["+" | "-"] int ]
//! gen    := NAME "(" args ")" | "T"
//! args   := int { "," int } [ ";" ring-literal ]
//! ```
//!
//! `UrSp` takes an integer matrix in the matrix text format instead, as in
//! `UrSp(1, 1 ; 0, 1)`. A word evaluates left to right as a matrix product.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::cyclotomic::RingLiteral;
use crate::error::{Error, ParseError, Result};
use crate::generators::GenSpec;
use crate::matrix::{parse_literal_rows, BlockMat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    factors: Vec<(GenSpec, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word, dropping factors with exponent zero.
    pub fn from_factors(factors: impl IntoIterator<Item = (GenSpec, i64)>) -> Self {
        Word {
            factors: factors.into_iter().filter(|(_, e)| *e != 0).collect(),
        }
    }

    pub fn single(gen: GenSpec) -> Self {
        Word {
            factors: vec![(gen, 1)],
        }
    }

    pub fn factors(&self) -> &[(GenSpec, i64)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn push(&mut self, gen: GenSpec, exponent: i64) {
        if exponent != 0 {
            self.factors.push((gen, exponent));
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.factors.extend(other.factors.iter().cloned());
        out
    }

    pub fn inverse(&self) -> Word {
        Word {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    pub fn evaluate(&self, g: usize, d: u32) -> Result<BlockMat> {
        let mut acc = BlockMat::identity(g, d)?;
        for (gen, e) in &self.factors {
            acc = acc.try_mul(&gen.matrix(g, d)?.pow(*e)?)?;
        }
        Ok(acc)
    }

    pub fn parse(text: &str) -> std::result::Result<Word, ParseError> {
        let mut p = Parser {
            src: text.as_bytes(),
            text,
            pos: 0,
        };
        p.word()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Ok(Word::parse(s)?)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (gen, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{gen}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

/// Number of integer arguments and whether a ring literal follows.
fn arity(name: &str) -> Option<(usize, bool)> {
    Some(match name {
        "Ti" => (1, true),
        "Tij" => (2, true),
        "AH" | "TH" | "TwistE" | "Zeta" | "G1" => (1, false),
        "AHPrime" | "THPrime" | "GammaIK" | "G2" => (2, false),
        "GammaIJK" | "G3" => (3, false),
        _ => return None,
    })
}

impl Parser<'_> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn word(&mut self) -> std::result::Result<Word, ParseError> {
        let mut w = Word::identity();
        if self.peek().is_none() {
            return Ok(w);
        }
        loop {
            let (gen, e) = self.factor()?;
            w.factors.push((gen, e));
            match self.peek() {
                None => return Ok(w),
                Some(b'*') => self.pos += 1,
                Some(_) => return Err(self.err(self.pos, "expected '*' or end of word")),
            }
        }
    }

    fn factor(&mut self) -> std::result::Result<(GenSpec, i64), ParseError> {
        let gen = self.gen()?;
        if self.peek() != Some(b'^') {
            return Ok((gen, 1));
        }
        self.pos += 1;
        let start = self.pos;
        let e = self.signed_int()?;
        if e == 0 {
            return Err(self.err(start, "exponent must be nonzero"));
        }
        Ok((gen, e))
    }

    fn gen(&mut self) -> std::result::Result<GenSpec, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(start, "expected generator name"));
        }
        let name = &self.text[start..self.pos];
        if name == "T" {
            return Ok(GenSpec::BigT);
        }
        if name == "UrSp" {
            return self.ursp(start);
        }
        let (n_idx, has_lit) =
            arity(name).ok_or_else(|| self.err(start, format!("unknown generator '{name}'")))?;
        self.expect(b'(')?;
        let mut idx = Vec::with_capacity(n_idx);
        loop {
            idx.push(self.signed_int()?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if idx.len() != n_idx {
            return Err(self.err(
                start,
                format!("{name} takes {n_idx} index argument(s), got {}", idx.len()),
            ));
        }
        let literal = if self.peek() == Some(b';') {
            if !has_lit {
                return Err(self.err(self.pos, format!("{name} takes no ring argument")));
            }
            self.pos += 1;
            Some(self.ring_literal()?)
        } else if has_lit {
            return Err(self.err(self.pos, format!("{name} needs a ring argument after ';'")));
        } else {
            None
        };
        self.expect(b')')?;
        Ok(match (name, literal) {
            ("Ti", Some(r)) => GenSpec::Ti(idx[0], r),
            ("Tij", Some(r)) => GenSpec::Tij(idx[0], idx[1], r),
            ("AH", _) => GenSpec::AH(idx[0]),
            ("TH", _) => GenSpec::TH(idx[0]),
            ("TwistE", _) => GenSpec::TwistE(idx[0]),
            ("Zeta", _) => GenSpec::Zeta(idx[0]),
            ("G1", _) => GenSpec::G1(idx[0]),
            ("AHPrime", _) => GenSpec::AHPrime(idx[0], idx[1]),
            ("THPrime", _) => GenSpec::THPrime(idx[0], idx[1]),
            ("GammaIK", _) => GenSpec::GammaIK(idx[0], idx[1]),
            ("G2", _) => GenSpec::G2(idx[0], idx[1]),
            ("GammaIJK", _) => GenSpec::GammaIJK(idx[0], idx[1], idx[2]),
            ("G3", _) => GenSpec::G3(idx[0], idx[1], idx[2]),
            _ => unreachable!("arity table and constructor table agree"),
        })
    }

    /// The ring literal up to the closing parenthesis of the argument list.
    fn ring_literal(&mut self) -> std::result::Result<RingLiteral, ParseError> {
        let start = self.pos;
        let end = self.matching_close(start)?;
        let lit = RingLiteral::parse_at(&self.text[start..end], start)?;
        self.pos = end;
        Ok(lit)
    }

    fn ursp(&mut self, name_start: usize) -> std::result::Result<GenSpec, ParseError> {
        self.expect(b'(')?;
        let start = self.pos;
        let end = self.matching_close(start)?;
        let rows = parse_literal_rows(&self.text[start..end], start)?;
        let ints = rows
            .iter()
            .map(|row| row.iter().map(RingLiteral::as_integer).collect::<Option<Vec<BigInt>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| self.err(name_start, "UrSp entries must be integers"))?;
        self.pos = end;
        self.expect(b')')?;
        Ok(GenSpec::UrSp(ints))
    }

    /// Position of the `)` closing the argument list that starts at `from`.
    fn matching_close(&self, from: usize) -> std::result::Result<usize, ParseError> {
        let mut depth = 0usize;
        for (offset, &b) in self.src[from..].iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' if depth == 0 => return Ok(from + offset),
                b')' => depth -= 1,
                _ => {}
            }
        }
        Err(self.err(self.src.len(), "missing ')'"))
    }

    fn signed_int(&mut self) -> std::result::Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = match self.src.get(self.pos) {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            return Err(self.err(start, "expected integer"));
        }
        let magnitude: i64 = self.text[digits_start..self.pos]
            .parse()
            .map_err(|_| self.err(start, "integer out of range"))?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{big_t, conj_ah};

    #[test]
    fn parse_examples() {
        assert!(Word::parse("").unwrap().is_empty());
        assert!(Word::parse("   ").unwrap().is_empty());
        let w = Word::parse("Ti(1; 1+z) * Tij(1,-2; z)^-1").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.factors()[1].1, -1);
        assert!(matches!(&w.factors()[1].0, GenSpec::Tij(1, -2, _)));
        let w = Word::parse("GammaIJK(1,2,3) * TwistE(1)^-1 * TwistE(2)^-1").unwrap();
        assert_eq!(
            w.factors(),
            &[
                (GenSpec::GammaIJK(1, 2, 3), 1),
                (GenSpec::TwistE(1), -1),
                (GenSpec::TwistE(2), -1)
            ]
        );
        let w = Word::parse("T^3 * UrSp(1, 1 ; 0, 1)").unwrap();
        assert_eq!(w.to_string(), "T^3 * UrSp(1, 1 ; 0, 1)");
        let w = Word::parse("Ti(1; (1 + z)*(1 + z^-1))").unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn parse_errors() {
        let cases = [
            ("Foo(1)", 0),
            ("T *", 3),
            ("Ti(1)", 4),
            ("AH(1; z)", 4),
            ("AH(1, 2)", 0),
            ("T^0", 2),
            ("T T", 2),
            ("Ti(1; 1 +)", 9),
            ("UrSp(1, z ; 0, 1)", 0),
            ("AH(1", 4),
        ];
        for (text, pos) in cases {
            let e = Word::parse(text).unwrap_err();
            assert_eq!(e.pos, pos, "{text}: {e}");
        }
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "Ti(1; 1 + z) * Tij(1, -2; z)^-1",
            "T",
            "G1(1)^3 * G2(2, 4)^-2 * G3(1, 2, 5)",
            "AHPrime(2, -1) * THPrime(3, 1)^2 * Zeta(-1)",
            "UrSp(1, 0 ; 0, 1)",
            "",
        ] {
            let w = Word::parse(text).unwrap();
            assert_eq!(w.to_string(), text);
            assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn evaluation() {
        assert!(Word::identity().evaluate(3, 5).unwrap().is_identity());
        let t = Word::parse("T").unwrap().evaluate(2, 5).unwrap();
        assert_eq!(t, big_t(2, 5).unwrap());
        assert!(Word::parse("T^5").unwrap().evaluate(3, 5).unwrap().is_identity());
        let lhs = Word::parse("TH(2)").unwrap().evaluate(3, 7).unwrap();
        let rhs = Word::parse("AH(2)^-1 * T * AH(2)").unwrap().evaluate(3, 7).unwrap();
        assert_eq!(lhs, rhs);
        let a = conj_ah(3, 7, 2).unwrap();
        assert_eq!(rhs, a.inverse().unwrap().try_mul(&big_t(3, 7).unwrap()).unwrap().try_mul(&a).unwrap());
        assert!(Word::parse("AH(3)").unwrap().evaluate(3, 5).is_err());
    }

    #[test]
    fn inverse_and_concat() {
        let w = Word::parse("Ti(1; 2) * Tij(1, -2; z)^3 * T").unwrap();
        let m = w.evaluate(3, 5).unwrap();
        let inv = w.inverse().evaluate(3, 5).unwrap();
        assert!(m.try_mul(&inv).unwrap().is_identity());
        assert!(w.concat(&w.inverse()).evaluate(3, 5).unwrap().is_identity());
    }
}
