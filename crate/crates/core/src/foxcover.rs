//! The lower-right block as an action on the homology of a cyclic cover of a
//! graph.
//!
//! `X` is the rose with petals `x_1, …, x_g`; the `d`-fold cyclic cover
//! `X̃` has vertices `0, …, d-1`, a loop `x_i` (`i < g`) at every vertex and
//! the `x_g` edges forming a `d`-cycle. An automorphism of `F_g` preserving
//! the kernel `K` of `F_g → Z/d` (`x_i ↦ 0`, `x_g ↦ 1`) acts on
//! `H_1(X̃) = K^ab`; modulo the `λ` summand this is the action on `R^(g-1)`
//! computed here in two independent ways.
//!
//! Conventions: `(φ ∘ ψ)(x) = φ(ψ(x))` and `η(φ ∘ ψ) = η(φ) η(ψ)`. Column `j`
//! of `η(φ)` is the projected lift of `φ(x_j)`; the Fox form uses entry
//! `(i, j) = ε(∂φ(x_j)/∂x_i)` with no transpose.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::cyclotomic::{CycInt, Modulus};
use crate::error::{Error, ParseError, Result};
use crate::matrix::RingMatrix;

/// A freely reduced word; letter `±i` is `x_i^±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    /// Freely reduces the given letters. Letter `0` is invalid.
    pub fn new(letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out = FreeWord::identity();
        for l in letters {
            out.push(l);
        }
        out
    }

    pub fn generator(i: usize) -> Self {
        FreeWord(vec![i as i32])
    }

    fn push(&mut self, letter: i32) {
        assert!(letter != 0, "letter 0 is not a generator");
        if self.0.last() == Some(&-letter) {
            self.0.pop();
        } else {
            self.0.push(letter);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.unsigned_abs() as usize == gen)
            .map(|l| l.signum() as i64)
            .sum()
    }

    /// Replaces each `x_i` by `images[i-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut out = FreeWord::identity();
        for &l in &self.0 {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out = out.mul(img);
            } else {
                out = out.mul(&img.inverse());
            }
        }
        out
    }

    /// Parses `x2 x1 x2^-1` (juxtaposition, optional `*`, integer powers); `1` is the identity.
    pub fn parse(text: &str) -> std::result::Result<FreeWord, ParseError> {
        Self::parse_at(text, 0)
    }

    fn parse_at(text: &str, offset: usize) -> std::result::Result<FreeWord, ParseError> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut out = FreeWord::identity();
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b'*') {
                *pos += 1;
            }
        };
        let number = |pos: &mut usize| -> Option<i64> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            text[start..*pos].parse().ok()
        };
        skip(&mut pos);
        if text[pos..].trim() == "1" {
            return Ok(out);
        }
        while pos < bytes.len() {
            let start = pos;
            if bytes[pos] != b'x' {
                return Err(ParseError::new(offset + pos, "expected generator 'x<i>'"));
            }
            pos += 1;
            let gen = number(&mut pos)
                .filter(|&i| i >= 1 && i <= i32::MAX as i64)
                .ok_or_else(|| ParseError::new(offset + start, "expected generator index >= 1"))?;
            let mut e = 1i64;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let neg = pos < bytes.len() && bytes[pos] == b'-';
                if neg {
                    pos += 1;
                }
                let exp_start = pos;
                e = number(&mut pos)
                    .ok_or_else(|| ParseError::new(offset + exp_start, "expected exponent"))?;
                if neg {
                    e = -e;
                }
            }
            out = out.mul(&FreeWord::generator(gen as usize).pow(e));
            skip(&mut pos);
        }
        Ok(out)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (idx, l) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of `F_g` with a claimed inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endo {
    images: Vec<FreeWord>,
    inverse_images: Vec<FreeWord>,
}

impl Endo {
    pub fn new(images: Vec<FreeWord>, inverse_images: Vec<FreeWord>) -> Result<Self> {
        let g = images.len();
        if g < 2 {
            return Err(Error::GenusTooSmall(g));
        }
        if inverse_images.len() != g {
            return Err(Error::DimensionMismatch(format!(
                "{g} images but {} inverse images",
                inverse_images.len()
            )));
        }
        if let Some(w) = images.iter().chain(&inverse_images).find(|w| w.max_generator() > g) {
            return Err(Error::Index(format!("word {w} uses a generator beyond x{g}")));
        }
        Ok(Endo {
            images,
            inverse_images,
        })
    }

    pub fn identity(g: usize) -> Result<Self> {
        let gens: Vec<FreeWord> = (1..=g).map(FreeWord::generator).collect();
        Self::new(gens.clone(), gens)
    }

    pub fn genus(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[FreeWord] {
        &self.inverse_images
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }

    pub fn inverse(&self) -> Endo {
        Endo {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Endo) -> Result<Endo> {
        if self.genus() != other.genus() {
            return Err(Error::DimensionMismatch(format!(
                "genus {} vs {}",
                self.genus(),
                other.genus()
            )));
        }
        Ok(Endo {
            images: other.images.iter().map(|w| w.substitute(&self.images)).collect(),
            inverse_images: self
                .inverse_images
                .iter()
                .map(|w| w.substitute(&other.inverse_images))
                .collect(),
        })
    }

    /// Conjugation by `x_g`: `x_i ↦ x_g x_i x_g^-1` for every `i`.
    pub fn deck_conjugation(g: usize) -> Result<Endo> {
        let xg = FreeWord::generator(g);
        let conj = |w: &FreeWord, c: &FreeWord| c.mul(w).mul(&c.inverse());
        let gens: Vec<FreeWord> = (1..=g).map(FreeWord::generator).collect();
        Self::new(
            gens.iter().map(|w| conj(w, &xg)).collect(),
            gens.iter().map(|w| conj(w, &xg.inverse())).collect(),
        )
    }

    /// Checks the automorphism certificate and that `φ` lies in `Γ_(X,C)`:
    /// the `x_g`-exponent of `φ(x_i)` is `0 mod d` for `i < g` and `1 mod d` for `x_g`.
    pub fn check_member(&self, d: u32) -> Result<()> {
        Modulus::get(d)?;
        let g = self.genus();
        for i in 1..=g {
            let x = FreeWord::generator(i);
            let there = x.substitute(&self.inverse_images).substitute(&self.images);
            let back = x.substitute(&self.images).substitute(&self.inverse_images);
            if there != x || back != x {
                return Err(Error::NotInGamma(format!(
                    "supplied inverse does not invert x{i} (got {there} and {back})"
                )));
            }
        }
        for (idx, w) in self.images.iter().enumerate() {
            let e = w.exponent_sum(g).rem_euclid(d as i64);
            let want = if idx + 1 == g { 1 % d as i64 } else { 0 };
            if e != want {
                return Err(Error::NotInGamma(format!(
                    "x{g}-exponent of φ(x{}) is {e} mod {d}, expected {want}",
                    idx + 1
                )));
            }
        }
        Ok(())
    }

    /// Parses `x1 -> x2 x1 x2^-1 ; x2 -> x2`; generators not mentioned are fixed.
    pub fn parse_map(g: usize, text: &str) -> Result<Vec<FreeWord>> {
        let mut images: Vec<FreeWord> = (1..=g).map(FreeWord::generator).collect();
        let mut seen = vec![false; g];
        let mut offset = 0;
        for clause in text.split(';') {
            let clause_offset = offset;
            offset += clause.len() + 1;
            if clause.trim().is_empty() {
                continue;
            }
            let (lhs, rhs) = clause.split_once("->").ok_or_else(|| {
                ParseError::new(clause_offset, "expected 'x<i> -> word'")
            })?;
            let src = FreeWord::parse_at(lhs, clause_offset)?;
            let i = match src.letters() {
                [l] if *l > 0 => *l as usize,
                _ => return Err(ParseError::new(clause_offset, "left side must be a single generator").into()),
            };
            if i > g {
                return Err(ParseError::new(clause_offset, format!("generator x{i} beyond x{g}")).into());
            }
            if seen[i - 1] {
                return Err(ParseError::new(clause_offset, format!("x{i} assigned twice")).into());
            }
            seen[i - 1] = true;
            let rhs_offset = clause_offset + lhs.len() + 2;
            let img = FreeWord::parse_at(rhs, rhs_offset)?;
            if img.max_generator() > g {
                return Err(ParseError::new(rhs_offset, format!("image uses a generator beyond x{g}")).into());
            }
            images[i - 1] = img;
        }
        Ok(images)
    }

    pub fn from_text(g: usize, map: &str, inverse: &str) -> Result<Endo> {
        Self::new(Self::parse_map(g, map)?, Self::parse_map(g, inverse)?)
    }

    pub fn to_map_text(&self) -> String {
        self.images
            .iter()
            .enumerate()
            .map(|(i, w)| format!("x{} -> {w}", i + 1))
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

/// A 1-cycle of the covering graph: loop coefficients plus the `λ` coefficient
/// of the `x_g` edge from sheet `d-1` back to sheet `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverClass {
    d: u32,
    g: usize,
    loops: Vec<i64>,
    pub lambda: i64,
}

impl CoverClass {
    /// Coefficient of the loop `x_i` at sheet `c`, `1 <= i < g`.
    pub fn loop_coeff(&self, i: usize, c: u32) -> i64 {
        self.loops[(i - 1) * self.d as usize + (c % self.d) as usize]
    }

    /// Image in `R^(g-1)`: `loop(i, c) ↦ ζ^c e_i`, `λ ↦ 0`.
    pub fn project(&self) -> Result<Vec<CycInt>> {
        let modulus = Modulus::get(self.d)?;
        (1..self.g)
            .map(|i| {
                let mut acc = CycInt::zero(self.d)?;
                for c in 0..self.d {
                    let n = self.loop_coeff(i, c);
                    if n != 0 {
                        acc = acc + CycInt::zeta_pow(modulus.d(), c as i64)?.scale(&n.into());
                    }
                }
                Ok(acc)
            })
            .collect()
    }
}

/// Lifts a word in `K` to the covering graph starting at sheet `0`.
pub fn lift_class(w: &FreeWord, d: u32, g: usize) -> Result<CoverClass> {
    Modulus::get(d)?;
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    if w.max_generator() > g {
        return Err(Error::Index(format!("word {w} uses a generator beyond x{g}")));
    }
    let du = d as usize;
    let mut class = CoverClass {
        d,
        g,
        loops: vec![0; (g - 1) * du],
        lambda: 0,
    };
    let mut sheet = 0usize;
    for &l in w.letters() {
        let gen = l.unsigned_abs() as usize;
        if gen < g {
            class.loops[(gen - 1) * du + sheet] += l.signum() as i64;
        } else if l > 0 {
            if sheet == du - 1 {
                class.lambda += 1;
            }
            sheet = (sheet + 1) % du;
        } else {
            if sheet == 0 {
                class.lambda -= 1;
            }
            sheet = (sheet + du - 1) % du;
        }
    }
    if sheet != 0 {
        return Err(Error::NonClosingWord(w.exponent_sum(g)));
    }
    Ok(class)
}

/// `η(φ)` by lifting each `φ(x_j)` to the cover.
pub fn eta_chain(phi: &Endo, d: u32) -> Result<RingMatrix> {
    phi.check_member(d)?;
    let g = phi.genus();
    let n = g - 1;
    let mut m = RingMatrix::zeros(d, n, n)?;
    for j in 0..n {
        let col = lift_class(&phi.images()[j], d, g)?.project()?;
        for (i, x) in col.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    Ok(m)
}

/// An element of the integral group ring `Z[F_g]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupRingElement {
    terms: BTreeMap<FreeWord, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, w: FreeWord, c: i64) {
        let entry = self.terms.entry(w.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coefficient(&self, w: &FreeWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// `ε`: `x_i ↦ 1` for `i < g`, `x_g ↦ ζ`.
    pub fn augment(&self, d: u32, g: usize) -> Result<CycInt> {
        let mut acc = CycInt::zero(d)?;
        for (w, c) in self.terms() {
            acc = acc + CycInt::zeta_pow(d, w.exponent_sum(g))?.scale(&c.into());
        }
        Ok(acc)
    }
}

/// The Fox derivative `∂w/∂x_i`.
pub fn fox_derivative(w: &FreeWord, i: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = FreeWord::identity();
    for &l in w.letters() {
        let next = prefix.mul(&FreeWord::new([l]));
        if l.unsigned_abs() as usize == i {
            if l > 0 {
                out.add_term(prefix.clone(), 1);
            } else {
                out.add_term(next.clone(), -1);
            }
        }
        prefix = next;
    }
    out
}

/// `η(φ)` with entry `(i, j) = ε(∂φ(x_j)/∂x_i)`.
pub fn eta_fox(phi: &Endo, d: u32) -> Result<RingMatrix> {
    phi.check_member(d)?;
    let g = phi.genus();
    let n = g - 1;
    let mut m = RingMatrix::zeros(d, n, n)?;
    for j in 0..n {
        for i in 0..n {
            let entry = fox_derivative(&phi.images()[j], i + 1).augment(d, g)?;
            m.set(i, j, entry);
        }
    }
    Ok(m)
}

/// Nielsen-type automorphisms that lie in `Γ_(X,C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NielsenMove {
    /// `x_i ↦ x_i x_j^s`, `i ≠ j < g`.
    RightMul { i: usize, j: usize, s: i32 },
    /// `x_i ↦ x_j^s x_i`, `i ≠ j < g`.
    LeftMul { i: usize, j: usize, s: i32 },
    /// `x_i ↦ x_i^-1`, `i < g`.
    Invert { i: usize },
    /// Swaps `x_i` and `x_j`, `i, j < g`.
    Swap { i: usize, j: usize },
    /// `x_i ↦ x_g^c x_i x_g^-c`, `i < g`.
    ConjugateByPower { i: usize, c: i32 },
    /// `x_i ↦ x_i x_g^(s d)`, `i < g`.
    MulCycle { i: usize, s: i32 },
    /// `x_g ↦ x_g x_i^s`.
    StableRight { i: usize, s: i32 },
    /// `x_g ↦ x_i^s x_g`.
    StableLeft { i: usize, s: i32 },
    /// `x_k ↦ x_g^s x_k x_g^-s` for every `k`.
    GlobalConjugation { s: i32 },
}

impl NielsenMove {
    pub fn to_endo(self, g: usize, d: u32) -> Result<Endo> {
        let x = |i: usize| FreeWord::generator(i);
        let xp = |i: usize, e: i64| FreeWord::generator(i).pow(e);
        let mut fwd: Vec<FreeWord> = (1..=g).map(x).collect();
        let mut back = fwd.clone();
        let check_small = |i: usize| {
            if i == 0 || i >= g {
                Err(Error::Index(format!("move index {i} must be in 1..{}", g - 1)))
            } else {
                Ok(())
            }
        };
        match self {
            NielsenMove::RightMul { i, j, s } | NielsenMove::LeftMul { i, j, s } => {
                check_small(i)?;
                check_small(j)?;
                if i == j {
                    return Err(Error::Index("Nielsen move needs i ≠ j".into()));
                }
                let right = matches!(self, NielsenMove::RightMul { .. });
                let build = |e: i64| {
                    if right {
                        x(i).mul(&xp(j, e))
                    } else {
                        xp(j, e).mul(&x(i))
                    }
                };
                fwd[i - 1] = build(s as i64);
                back[i - 1] = build(-(s as i64));
            }
            NielsenMove::Invert { i } => {
                check_small(i)?;
                fwd[i - 1] = x(i).inverse();
                back[i - 1] = x(i).inverse();
            }
            NielsenMove::Swap { i, j } => {
                check_small(i)?;
                check_small(j)?;
                fwd.swap(i - 1, j - 1);
                back.swap(i - 1, j - 1);
            }
            NielsenMove::ConjugateByPower { i, c } => {
                check_small(i)?;
                let c = c as i64;
                fwd[i - 1] = xp(g, c).mul(&x(i)).mul(&xp(g, -c));
                back[i - 1] = xp(g, -c).mul(&x(i)).mul(&xp(g, c));
            }
            NielsenMove::MulCycle { i, s } => {
                check_small(i)?;
                let e = s as i64 * d as i64;
                fwd[i - 1] = x(i).mul(&xp(g, e));
                back[i - 1] = x(i).mul(&xp(g, -e));
            }
            NielsenMove::StableRight { i, s } => {
                check_small(i)?;
                fwd[g - 1] = x(g).mul(&xp(i, s as i64));
                back[g - 1] = x(g).mul(&xp(i, -(s as i64)));
            }
            NielsenMove::StableLeft { i, s } => {
                check_small(i)?;
                fwd[g - 1] = xp(i, s as i64).mul(&x(g));
                back[g - 1] = xp(i, -(s as i64)).mul(&x(g));
            }
            NielsenMove::GlobalConjugation { s } => {
                let s = s as i64;
                for k in 1..=g {
                    fwd[k - 1] = xp(g, s).mul(&x(k)).mul(&xp(g, -s));
                    back[k - 1] = xp(g, -s).mul(&x(k)).mul(&xp(g, s));
                }
            }
        }
        Endo::new(fwd, back)
    }

    /// A uniformly chosen move type with random admissible arguments.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, g: usize, d: u32) -> NielsenMove {
        let small = |rng: &mut R| rng.gen_range(1..g);
        let sign = |rng: &mut R| if rng.gen_bool(0.5) { 1 } else { -1 };
        let kinds = if g >= 3 { 9 } else { 7 };
        match rng.gen_range(0..kinds) {
            0 => NielsenMove::Invert { i: small(rng) },
            1 => NielsenMove::ConjugateByPower {
                i: small(rng),
                c: rng.gen_range(1..d.max(2) as i32),
            },
            2 => NielsenMove::MulCycle { i: small(rng), s: sign(rng) },
            3 => NielsenMove::StableRight { i: small(rng), s: sign(rng) },
            4 => NielsenMove::StableLeft { i: small(rng), s: sign(rng) },
            5 => NielsenMove::GlobalConjugation { s: sign(rng) },
            6 => NielsenMove::ConjugateByPower {
                i: small(rng),
                c: -rng.gen_range(1..d.max(2) as i32),
            },
            k => {
                let i = small(rng);
                let mut j = small(rng);
                while j == i {
                    j = small(rng);
                }
                match (k, rng.gen_range(0..3)) {
                    (7, 0) => NielsenMove::Swap { i, j },
                    (7, _) => NielsenMove::RightMul { i, j, s: sign(rng) },
                    _ => NielsenMove::LeftMul { i, j, s: sign(rng) },
                }
            }
        }
    }
}

/// A composite of `len` random moves.
pub fn random_automorphism<R: Rng + ?Sized>(rng: &mut R, g: usize, d: u32, len: usize) -> Result<Endo> {
    let mut acc = Endo::identity(g)?;
    for _ in 0..len {
        let m = NielsenMove::random(rng, g, d).to_endo(g, d)?;
        acc = acc.compose(&m)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fw(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    fn endo(g: usize, map: &str, inv: &str) -> Endo {
        Endo::from_text(g, map, inv).unwrap()
    }

    fn lit(d: u32, s: &str) -> CycInt {
        crate::cyclotomic::parse_ring_element(d, s).unwrap()
    }

    #[test]
    fn free_words_reduce() {
        assert!(fw("x1 x1^-1").is_identity());
        assert_eq!(fw("x2 x1 x1^-1 x3").to_string(), "x2 x3");
        assert_eq!(fw("x1^3").letters(), &[1, 1, 1]);
        assert_eq!(fw("x1^-2 * x2").to_string(), "x1^-1 x1^-1 x2");
        assert_eq!(fw("1"), FreeWord::identity());
        assert_eq!(fw("x2 x1 x2^-1").inverse(), fw("x2 x1^-1 x2^-1"));
        assert!(FreeWord::parse("y1").is_err());
        assert!(FreeWord::parse("x0").is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(Endo::identity(3).unwrap().check_member(4).is_ok());
        let phi = endo(2, "x1 -> x2 x1 x2^-1", "x1 -> x2^-1 x1 x2");
        for d in 2..8 {
            assert!(phi.check_member(d).is_ok());
        }
        let bad = endo(2, "x1 -> x1 x2", "x1 -> x1 x2^-1");
        for d in 2..8 {
            assert!(matches!(bad.check_member(d), Err(Error::NotInGamma(_))));
        }
        let wrong_inverse = endo(2, "x1 -> x2 x1 x2^-1", "x1 -> x1");
        assert!(wrong_inverse.check_member(3).is_err());
    }

    #[test]
    fn lift_examples() {
        let c = lift_class(&fw("x1"), 3, 2).unwrap();
        assert_eq!((c.loop_coeff(1, 0), c.loop_coeff(1, 1), c.lambda), (1, 0, 0));
        let c = lift_class(&fw("x2^4"), 4, 2).unwrap();
        assert_eq!(c.lambda, 1);
        assert!((0..4).all(|s| c.loop_coeff(1, s) == 0));
        let c = lift_class(&fw("x2 x1 x2^-1"), 3, 2).unwrap();
        assert_eq!((c.loop_coeff(1, 0), c.loop_coeff(1, 1)), (0, 1));
        let c = lift_class(&fw("x2^-3"), 3, 2).unwrap();
        assert_eq!(c.lambda, -1);
        assert_eq!(lift_class(&fw("x2"), 3, 2), Err(Error::NonClosingWord(1)));
    }

    #[test]
    fn eta_chain_examples() {
        assert!(eta_chain(&Endo::identity(4).unwrap(), 5).unwrap().is_identity());
        let phi = endo(2, "x1 -> x2 x1 x2^-1", "x1 -> x2^-1 x1 x2");
        assert_eq!(eta_chain(&phi, 5).unwrap(), RingMatrix::parse(5, "z").unwrap());
        let psi = endo(3, "x1 -> x1 x2", "x1 -> x1 x2^-1");
        let m = eta_chain(&psi, 5).unwrap();
        assert_eq!(m, RingMatrix::parse(5, "1, 0 ; 1, 1").unwrap());
        assert!(m.det().unwrap().is_one());
    }

    #[test]
    fn fox_derivative_examples() {
        let one = |w: &GroupRingElement, word: &FreeWord, c: i64| {
            assert_eq!(w.coefficient(word), c);
            assert_eq!(w.terms().count(), 1);
        };
        one(&fox_derivative(&fw("x1"), 1), &FreeWord::identity(), 1);
        one(&fox_derivative(&fw("x2 x1 x2^-1"), 1), &fw("x2"), 1);
        one(&fox_derivative(&fw("x1^-1"), 1), &fw("x1^-1"), -1);
        let dx2 = fox_derivative(&fw("x2 x1 x2^-1"), 2);
        assert_eq!(dx2.coefficient(&FreeWord::identity()), 1);
        assert_eq!(dx2.coefficient(&fw("x2 x1 x2^-1")), -1);
    }

    #[test]
    fn eta_fox_examples() {
        assert!(eta_fox(&Endo::identity(3).unwrap(), 4).unwrap().is_identity());
        let phi = endo(2, "x1 -> x2 x1 x2^-1", "x1 -> x2^-1 x1 x2");
        assert_eq!(eta_fox(&phi, 5).unwrap(), RingMatrix::parse(5, "z").unwrap());
        let psi = endo(3, "x1 -> x1 x2", "x1 -> x1 x2^-1");
        assert_eq!(eta_fox(&psi, 5).unwrap(), eta_chain(&psi, 5).unwrap());
        assert!(fox_derivative(&fw("x1 x2"), 2).coefficient(&fw("x1")) == 1);
    }

    #[test]
    fn deck_conjugation_is_scalar() {
        for d in 2..6 {
            for g in 2..5 {
                let phi = Endo::deck_conjugation(g).unwrap();
                let z = lit(d, "z");
                let expect = RingMatrix::identity(d, g - 1).unwrap().scale(&z);
                assert_eq!(eta_chain(&phi, d).unwrap(), expect);
                assert_eq!(eta_fox(&phi, d).unwrap(), expect);
            }
        }
    }

    #[test]
    fn moves_are_members_and_oracles_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let g = rng.gen_range(2..5);
            let d = rng.gen_range(2..7);
            let phi = random_automorphism(&mut rng, g, d, 5).unwrap();
            phi.check_member(d).unwrap();
            let chain = eta_chain(&phi, d).unwrap();
            assert_eq!(chain, eta_fox(&phi, d).unwrap());
            assert!(chain.det().unwrap().unit_exponent().is_some());
        }
    }

    #[test]
    fn eta_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let g = rng.gen_range(2..5);
            let d = rng.gen_range(2..7);
            let phi = random_automorphism(&mut rng, g, d, 3).unwrap();
            let psi = random_automorphism(&mut rng, g, d, 3).unwrap();
            let lhs = eta_chain(&phi.compose(&psi).unwrap(), d).unwrap();
            let rhs = eta_chain(&phi, d).unwrap().try_mul(&eta_chain(&psi, d).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn map_text() {
        let phi = endo(3, "x1 -> x2 x1 x2^-1 ; x3 -> x3", "x1 -> x2^-1 x1 x2");
        assert_eq!(phi.to_map_text(), "x1 -> x2 x1 x2^-1 ; x2 -> x2 ; x3 -> x3");
        assert!(Endo::parse_map(2, "x3 -> x1").is_err());
        assert!(Endo::parse_map(2, "x1 -> x1 ; x1 -> x2").is_err());
        assert!(Endo::parse_map(2, "x1 x2 -> x1").is_err());
        let err = Endo::parse_map(2, "x1 -> x1 y").unwrap_err();
        assert!(matches!(err, Error::Parse(p) if p.pos == 9));
    }
}
