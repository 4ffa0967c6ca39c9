//! Exact arithmetic in the cyclotomic integers `R = Z[ζ_d]`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^(φ(d)-1)` modulo the
//! d-th cyclotomic polynomial `Φ_d`, so equality of [`CycInt`] values is
//! equality of coefficient vectors. Complex conjugation is the ring involution
//! `ζ ↦ ζ^(d-1)`; the real subring `R' = R ∩ ℝ` is its fixed ring.

mod literal;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hnf;

pub use literal::RingLiteral;

/// Precomputed data for one modulus `d`: Euler phi, `Φ_d`, and the reduced
/// power table `ζ^m` for `0 <= m < d`.
#[derive(Debug)]
pub struct Modulus {
    d: u32,
    phi: usize,
    cyclotomic: Vec<BigInt>,
    powers: Vec<Vec<BigInt>>,
}

impl Modulus {
    /// Shared context for `d`, built once per process.
    pub fn get(d: u32) -> Result<Arc<Modulus>> {
        if d < 2 {
            return Err(Error::ModulusTooSmall(d as u64));
        }
        static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Modulus>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        Ok(guard
            .entry(d)
            .or_insert_with(|| Arc::new(Modulus::build(d)))
            .clone())
    }

    fn build(d: u32) -> Modulus {
        let cyclotomic = cyclotomic_polynomial(d);
        let phi = cyclotomic.len() - 1;
        let mut powers = Vec::with_capacity(d as usize);
        let mut current = vec![BigInt::zero(); phi];
        current[0] = BigInt::one();
        for _ in 0..d {
            powers.push(current.clone());
            // multiply by x, then fold the x^phi term back using the monic Φ_d
            let top = current.pop().unwrap_or_default();
            current.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in current.iter_mut().zip(&cyclotomic) {
                    *c -= &top * p;
                }
            }
        }
        Modulus {
            d,
            phi,
            cyclotomic,
            powers,
        }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Euler phi of `d`, the rank of `R` over `Z`.
    pub fn phi(&self) -> usize {
        self.phi
    }

    /// Coefficients of `Φ_d`, lowest degree first.
    pub fn cyclotomic_polynomial(&self) -> &[BigInt] {
        &self.cyclotomic
    }

    fn power(&self, m: i64) -> &[BigInt] {
        &self.powers[m.rem_euclid(self.d as i64) as usize]
    }
}

/// `Φ_d` by exact division of `x^d - 1` by `Φ_e` for every proper divisor `e`.
fn cyclotomic_polynomial(d: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); d as usize + 1];
    poly[0] = -BigInt::one();
    poly[d as usize] = BigInt::one();
    for e in 1..d {
        if d % e == 0 {
            poly = divide_monic(&poly, &cyclotomic_polynomial(e));
        }
    }
    poly
}

fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dl];
    for pos in (0..quot.len()).rev() {
        let c = rem[pos + dl].clone();
        if c.is_zero() {
            continue;
        }
        for (k, dc) in den.iter().enumerate() {
            rem[pos + k] -= &c * dc;
        }
        quot[pos] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An element of `Z[ζ_d]` in canonical reduced form.
#[derive(Clone)]
pub struct CycInt {
    modulus: Arc<Modulus>,
    coeffs: Vec<BigInt>,
}

/// `sign · ζ^k` with `sign = ±1` and `0 <= k < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitPower {
    pub sign: i8,
    pub k: u32,
}

/// Certificate `r = constant + Σ_k cos_terms[k-1]·(ζ^k + ζ^-k)`, `k = 1..d-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealBasisCombination {
    pub constant: BigInt,
    pub cos_terms: Vec<BigInt>,
}

impl RealBasisCombination {
    pub fn evaluate(&self, d: u32) -> Result<CycInt> {
        let mut acc = CycInt::from_int(d, self.constant.clone())?;
        for (idx, n) in self.cos_terms.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let k = idx as i64 + 1;
            let term = CycInt::zeta_pow(d, k)?.add(&CycInt::zeta_pow(d, -k)?);
            acc = &acc + &term.scale(n);
        }
        Ok(acc)
    }
}

impl CycInt {
    pub fn zero(d: u32) -> Result<Self> {
        let modulus = Modulus::get(d)?;
        Ok(Self::zero_in(&modulus))
    }

    pub fn one(d: u32) -> Result<Self> {
        Self::from_int(d, BigInt::one())
    }

    pub fn from_int(d: u32, n: impl Into<BigInt>) -> Result<Self> {
        let mut out = Self::zero(d)?;
        out.coeffs[0] = n.into();
        Ok(out)
    }

    /// `ζ^k`, with `k` reduced mod `d`.
    pub fn zeta_pow(d: u32, k: i64) -> Result<Self> {
        let modulus = Modulus::get(d)?;
        Ok(Self::zeta_pow_in(&modulus, k))
    }

    /// Reduces an arbitrary polynomial in `ζ` (lowest degree first).
    pub fn from_poly(d: u32, poly: &[BigInt]) -> Result<Self> {
        let modulus = Modulus::get(d)?;
        Ok(Self::from_terms_in(
            &modulus,
            poly.iter().enumerate().map(|(m, c)| (m as i64, c)),
        ))
    }

    pub(crate) fn zero_in(modulus: &Arc<Modulus>) -> Self {
        CycInt {
            modulus: modulus.clone(),
            coeffs: vec![BigInt::zero(); modulus.phi],
        }
    }

    pub(crate) fn zeta_pow_in(modulus: &Arc<Modulus>, k: i64) -> Self {
        CycInt {
            modulus: modulus.clone(),
            coeffs: modulus.power(k).to_vec(),
        }
    }

    /// Sum of `c·ζ^m` over the given (exponent, coefficient) pairs; exponents may be negative.
    pub(crate) fn from_terms_in<'a>(
        modulus: &Arc<Modulus>,
        terms: impl IntoIterator<Item = (i64, &'a BigInt)>,
    ) -> Self {
        let mut out = Self::zero_in(modulus);
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.coeffs.iter_mut().zip(modulus.power(m)) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        out
    }

    pub fn d(&self) -> u32 {
        self.modulus.d
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    /// Power-basis coefficients; index `m` is the coefficient of `ζ^m`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The integer value, if this element lies in `Z`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn same_modulus(&self, other: &CycInt) -> Result<()> {
        if self.modulus.d == other.modulus.d {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus.d, other.modulus.d))
        }
    }

    pub fn try_add(&self, other: &CycInt) -> Result<CycInt> {
        self.same_modulus(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &CycInt) -> Result<CycInt> {
        self.same_modulus(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &CycInt) -> Result<CycInt> {
        self.same_modulus(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &CycInt) -> CycInt {
        CycInt {
            modulus: self.modulus.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub_unchecked(&self, other: &CycInt) -> CycInt {
        CycInt {
            modulus: self.modulus.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &CycInt) -> CycInt {
        let mut out = CycInt::zero_in(&self.modulus);
        out.add_product_unchecked(self, other);
        out
    }

    /// `self += a * b`. Panics on modulus mismatch.
    pub fn add_product(&mut self, a: &CycInt, b: &CycInt) {
        assert!(
            self.d() == a.d() && a.d() == b.d(),
            "modulus mismatch in CycInt::add_product"
        );
        self.add_product_unchecked(a, b);
    }

    fn add_product_unchecked(&mut self, a: &CycInt, b: &CycInt) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if let Some(c) = a.as_integer() {
            add_scaled(&mut self.coeffs, &b.coeffs, c);
            return;
        }
        if let Some(c) = b.as_integer() {
            add_scaled(&mut self.coeffs, &a.coeffs, c);
            return;
        }
        let phi = self.modulus.phi;
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        for (m, c) in conv.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if m < phi {
                self.coeffs[m] += c;
            } else {
                add_scaled(&mut self.coeffs, self.modulus.power(m as i64), c);
            }
        }
    }

    pub fn scale(&self, n: &BigInt) -> CycInt {
        CycInt {
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|c| c * n).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> CycInt {
        let mut base = self.clone();
        let mut acc = CycInt::zeta_pow_in(&self.modulus, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Complex conjugation: substitutes `ζ ↦ ζ^(d-1)` and re-reduces.
    pub fn conj(&self) -> CycInt {
        CycInt::from_terms_in(
            &self.modulus,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| (-(m as i64), c)),
        )
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Decides whether `self = ±ζ^k` by comparison against all `2d` units.
    pub fn unit_exponent(&self) -> Option<UnitPower> {
        let d = self.modulus.d;
        for sign in [1i8, -1] {
            for k in 0..d {
                let p = self.modulus.power(k as i64);
                let hit = self.coeffs.iter().zip(p).all(|(c, p)| {
                    if sign == 1 {
                        c == p
                    } else {
                        *c == -p
                    }
                });
                if hit {
                    return Some(UnitPower { sign, k });
                }
            }
        }
        None
    }

    /// Exact quotient `self / divisor` in `R`; fails when the quotient in
    /// `Q(ζ)` has non-integral coordinates.
    pub fn exact_div(&self, divisor: &CycInt) -> Result<CycInt> {
        self.same_modulus(divisor)?;
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        if divisor.is_zero() {
            return Err(inexact());
        }
        if let Some(n) = divisor.as_integer() {
            let mut coeffs = Vec::with_capacity(self.coeffs.len());
            for c in &self.coeffs {
                let (q, r) = c.div_rem(n);
                if !r.is_zero() {
                    return Err(inexact());
                }
                coeffs.push(q);
            }
            return Ok(CycInt {
                modulus: self.modulus.clone(),
                coeffs,
            });
        }
        if let Some(u) = divisor.unit_exponent() {
            let inv = CycInt::zeta_pow_in(&self.modulus, -(u.k as i64));
            let q = self.mul_unchecked(&inv);
            return Ok(if u.sign < 0 { -q } else { q });
        }
        self.rational_quotient(divisor)?.ok_or_else(inexact)
    }

    /// Solves `divisor · q = self` over `Q` in power-basis coordinates.
    fn rational_quotient(&self, divisor: &CycInt) -> Result<Option<CycInt>> {
        let phi = self.modulus.phi;
        // column m holds divisor·ζ^m
        let columns: Vec<CycInt> = (0..phi)
            .map(|m| divisor.mul_unchecked(&CycInt::zeta_pow_in(&self.modulus, m as i64)))
            .collect();
        let mut rows: Vec<Vec<BigRational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<BigRational> = columns
                    .iter()
                    .map(|col| BigRational::from_integer(col.coeffs[r].clone()))
                    .collect();
                row.push(BigRational::from_integer(self.coeffs[r].clone()));
                row
            })
            .collect();
        for col in 0..phi {
            let pivot = (col..phi)
                .find(|&r| !rows[r][col].is_zero())
                .ok_or_else(|| Error::NotInvertible(divisor.to_string()))?;
            rows.swap(col, pivot);
            let p = rows[col][col].clone();
            for v in rows[col].iter_mut() {
                *v = &*v / &p;
            }
            for r in 0..phi {
                if r == col || rows[r][col].is_zero() {
                    continue;
                }
                let f = rows[r][col].clone();
                for c in col..=phi {
                    let delta = &f * &rows[col][c];
                    rows[r][c] -= delta;
                }
            }
        }
        let mut coeffs = Vec::with_capacity(phi);
        for row in &rows {
            let v = &row[phi];
            if !v.is_integer() {
                return Ok(None);
            }
            coeffs.push(v.to_integer());
        }
        Ok(Some(CycInt {
            modulus: self.modulus.clone(),
            coeffs,
        }))
    }

    /// Multiplicative inverse in `R`, if this element is a unit.
    pub fn inverse(&self) -> Result<CycInt> {
        CycInt::zeta_pow_in(&self.modulus, 0)
            .exact_div(self)
            .map_err(|_| Error::NotInvertible(self.to_string()))
    }

    /// Integer coordinates over the spanning set `{1} ∪ {ζ^k + ζ^-k : 1 <= k <= d-1}`.
    ///
    /// The solution is taken over the integral basis `1, ζ^k + ζ^-k`
    /// (`k < φ(d)/2`) of the real subring when possible, which makes it
    /// unique; the full redundant set is the fallback.
    pub fn solve_real_basis(&self) -> Result<RealBasisCombination> {
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        let d = self.modulus.d as i64;
        let phi = self.modulus.phi;
        let mut generators = vec![CycInt::zeta_pow_in(&self.modulus, 0)];
        for k in 1..d {
            generators.push(
                CycInt::zeta_pow_in(&self.modulus, k)
                    .add_unchecked(&CycInt::zeta_pow_in(&self.modulus, -k)),
            );
        }
        let system = |cols: usize| -> Vec<Vec<BigInt>> {
            (0..phi)
                .map(|r| generators[..cols].iter().map(|g| g.coeffs[r].clone()).collect())
                .collect()
        };
        let basis_len = (phi / 2).max(1);
        let solution = hnf::solve(&system(basis_len), &self.coeffs)
            .map(|mut x| {
                x.resize(d as usize, BigInt::zero());
                x
            })
            .or_else(|| hnf::solve(&system(d as usize), &self.coeffs))
            .ok_or_else(|| {
                Error::NoIntegerSolution(format!(
                    "real element {self} has no expansion over 1, ζ^k+ζ^-k"
                ))
            })?;
        let combo = RealBasisCombination {
            constant: solution[0].clone(),
            cos_terms: solution[1..].to_vec(),
        };
        if combo.evaluate(self.d())? != *self {
            return Err(Error::NoIntegerSolution(format!(
                "certificate for {self} does not reconstruct it"
            )));
        }
        Ok(combo)
    }
}

fn add_scaled(acc: &mut [BigInt], src: &[BigInt], c: &BigInt) {
    if c.is_one() {
        for (a, s) in acc.iter_mut().zip(src) {
            if !s.is_zero() {
                *a += s;
            }
        }
    } else if c.is_negative() && c.magnitude().is_one() {
        for (a, s) in acc.iter_mut().zip(src) {
            if !s.is_zero() {
                *a -= s;
            }
        }
    } else {
        for (a, s) in acc.iter_mut().zip(src) {
            if !s.is_zero() {
                *a += c * s;
            }
        }
    }
}

impl PartialEq for CycInt {
    fn eq(&self, other: &Self) -> bool {
        self.modulus.d == other.modulus.d && self.coeffs == other.coeffs
    }
}

impl Eq for CycInt {}

impl Hash for CycInt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.modulus.d.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        literal::write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m as i64, c)),
        )
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt[d={}]({})", self.modulus.d, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                assert_eq!(self.d(), rhs.d(), "modulus mismatch");
                self.$impl_fn(rhs)
            }
        }
        impl $trait<CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_unchecked);
forward_binop!(Sub, sub, sub_unchecked);
forward_binop!(Mul, mul, mul_unchecked);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(mut self) -> CycInt {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Parses a ring literal such as `1 - z^3 + 2*z` and reduces it mod `Φ_d`.
pub fn parse_ring_element(d: u32, text: &str) -> Result<CycInt> {
    RingLiteral::parse(text)?.reduce(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(d: u32, v: &[i64]) -> CycInt {
        let poly: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        CycInt::from_poly(d, &poly).unwrap()
    }

    fn coeffs(x: &CycInt) -> Vec<i64> {
        x.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        let phi = |d| {
            Modulus::get(d)
                .unwrap()
                .cyclotomic_polynomial()
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(3), vec![1, 1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(Modulus::get(105).unwrap().phi(), 48);
    }

    #[test]
    fn zeta_pow_examples() {
        assert_eq!(coeffs(&CycInt::zeta_pow(5, 0).unwrap()), vec![1, 0, 0, 0]);
        assert_eq!(coeffs(&CycInt::zeta_pow(5, 4).unwrap()), vec![-1, -1, -1, -1]);
        assert_eq!(coeffs(&CycInt::zeta_pow(4, 2).unwrap()), vec![-1, 0]);
        assert_eq!(CycInt::zeta_pow(7, -3).unwrap(), CycInt::zeta_pow(7, 4).unwrap());
    }

    #[test]
    fn rejects_small_modulus() {
        assert_eq!(CycInt::zeta_pow(1, 0), Err(Error::ModulusTooSmall(1)));
        assert!(CycInt::zero(0).is_err());
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(c(4, &[1, 1]) * c(4, &[1, -1]), c(4, &[2]));
        assert_eq!(c(3, &[0, 1]) * c(3, &[0, 1]), c(3, &[-1, -1]));
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = c(3, &[1, 1]);
        let b = c(5, &[1, 1]);
        assert_eq!(a.try_mul(&b), Err(Error::ModulusMismatch(3, 5)));
        assert_eq!(a.try_add(&b), Err(Error::ModulusMismatch(3, 5)));
    }

    #[test]
    fn conjugation_examples() {
        let z5 = CycInt::zeta_pow(5, 1).unwrap();
        assert_eq!(coeffs(&z5.conj()), vec![-1, -1, -1, -1]);
        assert_eq!(c(4, &[1, 1]).conj(), c(4, &[1, -1]));
        assert_eq!(c(7, &[9]).conj(), c(7, &[9]));
    }

    #[test]
    fn reality() {
        for d in 3..10 {
            let z = CycInt::zeta_pow(d, 1).unwrap();
            assert!((&z + &z.conj()).is_real());
            assert!(!z.is_real());
        }
        assert!(c(5, &[5]).is_real());
        assert!(CycInt::zeta_pow(2, 1).unwrap().is_real());
    }

    #[test]
    fn unit_exponent_examples() {
        let z73 = CycInt::zeta_pow(7, 3).unwrap();
        assert_eq!(z73.unit_exponent(), Some(UnitPower { sign: 1, k: 3 }));
        let mz52 = -CycInt::zeta_pow(5, 2).unwrap();
        assert_eq!(mz52.unit_exponent(), Some(UnitPower { sign: -1, k: 2 }));
        assert_eq!(c(5, &[1, 1]).unit_exponent(), None);
        // -1 = ζ^2 for d = 4
        assert_eq!(c(4, &[-1]).unit_exponent(), Some(UnitPower { sign: 1, k: 2 }));
        assert_eq!(c(5, &[0]).unit_exponent(), None);
    }

    #[test]
    fn exact_division() {
        let a = c(5, &[1, 2, 3]);
        let b = c(5, &[2, 0, 1, 1]);
        let p = &a * &b;
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert!(c(5, &[1]).exact_div(&c(5, &[2])).is_err());
        // 1 - ζ divides 5 in Z[ζ_5] but not 1
        let one_minus = c(5, &[1, -1]);
        assert!(c(5, &[5]).exact_div(&one_minus).is_ok());
        assert!(c(5, &[1]).exact_div(&one_minus).is_err());
        assert!(a.exact_div(&c(5, &[0])).is_err());
    }

    #[test]
    fn real_unit_inverse() {
        // √5 + 2 = 3 + 2ζ + 2ζ^4 has inverse √5 - 2 = -1 + 2ζ + 2ζ^4
        let five = Modulus::get(5).unwrap();
        let u = RingLiteral::parse("3 + 2*z + 2*z^4").unwrap().reduce(5).unwrap();
        let v = RingLiteral::parse("-1 + 2*z + 2*z^4").unwrap().reduce(5).unwrap();
        assert_eq!(u.inverse().unwrap(), v);
        assert!(u.unit_exponent().is_none());
        assert_eq!(five.d(), 5);
        assert!(c(5, &[2]).inverse().is_err());
    }

    #[test]
    fn real_basis_examples() {
        let one = CycInt::one(5).unwrap();
        let s = one.solve_real_basis().unwrap();
        assert_eq!(s.constant, BigInt::from(1));
        assert!(s.cos_terms.iter().all(Zero::is_zero));

        let t = CycInt::zeta_pow(5, 1).unwrap() + CycInt::zeta_pow(5, 4).unwrap();
        let s = t.solve_real_basis().unwrap();
        assert_eq!(s.evaluate(5).unwrap(), t);

        assert_eq!(s.cos_terms[0], BigInt::from(1));
        assert!(s.cos_terms[1..].iter().all(Zero::is_zero));

        // (ζ+ζ^4)^2 = 2 + (ζ^2+ζ^3) = 1 - (ζ+ζ^4); either certificate is valid
        let t2 = &t * &t;
        let s = t2.solve_real_basis().unwrap();
        assert_eq!(s.evaluate(5).unwrap(), t2);
        let expanded = RealBasisCombination {
            constant: BigInt::from(2),
            cos_terms: [0, 1, 0, 0].map(BigInt::from).to_vec(),
        };
        assert_eq!(expanded.evaluate(5).unwrap(), t2);

        for d in [2, 3, 4, 6] {
            let s = CycInt::from_int(d, 7).unwrap().solve_real_basis().unwrap();
            assert_eq!(s.constant, BigInt::from(7));
            assert_eq!(s.cos_terms.len(), d as usize - 1);
        }

        let z = CycInt::zeta_pow(5, 1).unwrap();
        assert!(matches!(z.solve_real_basis(), Err(Error::NotReal(_))));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = c(9, &[1, -1, 0, 2]);
        let mut acc = CycInt::one(9).unwrap();
        for e in 0..7u64 {
            assert_eq!(a.pow(e), acc);
            acc = &acc * &a;
        }
    }

    #[test]
    fn display() {
        assert_eq!(c(5, &[1, 2, 0, -1]).to_string(), "1 + 2*z - z^3");
        assert_eq!(c(5, &[0]).to_string(), "0");
        assert_eq!(c(5, &[0, -1]).to_string(), "-z");
        assert_eq!(c(5, &[-3]).to_string(), "-3");
    }
}
