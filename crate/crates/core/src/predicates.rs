//! Membership tests for the matrix groups acting on `R^(2g-2)`.
//!
//! All checks are exact. A failed check reports which clause failed through
//! [`NonMembership`].

use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::matrix::{BlockMat, RingMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    /// Form-preserving matrices, `M* Ω M = Ω`.
    U,
    /// `U` with determinant an even power of `ζ`.
    USharp,
    /// Upper-triangular block matrices in `U`.
    UrU,
    UrUSharp,
    /// Integer matrices in `UrU`.
    UrSpZ,
    Lambda,
    Delta,
    /// `Lambda` restricted to genus 2.
    Genus2Theta,
}

impl GroupTag {
    pub const ALL: [GroupTag; 8] = [
        GroupTag::U,
        GroupTag::USharp,
        GroupTag::UrU,
        GroupTag::UrUSharp,
        GroupTag::UrSpZ,
        GroupTag::Lambda,
        GroupTag::Delta,
        GroupTag::Genus2Theta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupTag::U => "U",
            GroupTag::USharp => "USharp",
            GroupTag::UrU => "UrU",
            GroupTag::UrUSharp => "UrUSharp",
            GroupTag::UrSpZ => "UrSpZ",
            GroupTag::Lambda => "Lambda",
            GroupTag::Delta => "Delta",
            GroupTag::Genus2Theta => "Genus2Theta",
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace('#', "sharp");
        GroupTag::ALL
            .into_iter()
            .find(|t| t.name().to_ascii_lowercase() == key)
            .ok_or_else(|| {
                let names: Vec<_> = GroupTag::ALL.iter().map(|t| t.name()).collect();
                format!("unknown group '{s}' (expected one of {})", names.join(", "))
            })
    }
}

/// The clause of a membership test that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonMembership {
    NotFormPreserving,
    DeterminantNotEvenPower(String),
    LowerLeftNonzero,
    UpperLeftNotInverseAdjoint,
    LowerRightDeterminant(String),
    BlocksIncompatible,
    NonIntegerEntry,
    DiagonalBlocksNotScalar,
    UpperRightNotSelfAdjoint,
    WrongGenus(usize),
}

impl fmt::Display for NonMembership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonMembership::NotFormPreserving => f.write_str("M* Ω M ≠ Ω"),
            NonMembership::DeterminantNotEvenPower(det) => {
                write!(f, "det = {det} is not an even power of z")
            }
            NonMembership::LowerLeftNonzero => f.write_str("lower-left ≠ 0"),
            NonMembership::UpperLeftNotInverseAdjoint => f.write_str("upper-left ≠ (D*)^-1"),
            NonMembership::LowerRightDeterminant(det) => {
                write!(f, "det(D) = {det} is not ±z^k")
            }
            NonMembership::BlocksIncompatible => f.write_str("D* B ≠ B* D"),
            NonMembership::NonIntegerEntry => f.write_str("entry outside Z"),
            NonMembership::DiagonalBlocksNotScalar => {
                f.write_str("diagonal blocks are not z^k · Id")
            }
            NonMembership::UpperRightNotSelfAdjoint => f.write_str("B ≠ B*"),
            NonMembership::WrongGenus(g) => write!(f, "genus {g} ≠ 2"),
        }
    }
}

type Verdict = std::result::Result<(), NonMembership>;

/// Decides membership of `m` in the group named by `tag`.
pub fn check(m: &BlockMat, tag: GroupTag) -> Verdict {
    match tag {
        GroupTag::U => check_u(m),
        GroupTag::USharp => {
            check_u(m)?;
            check_even_det(m)
        }
        GroupTag::UrU => {
            check_lower_left(m)?;
            check_u(m)
        }
        GroupTag::UrUSharp => {
            check_lower_left(m)?;
            check_u(m)?;
            check_even_det(m)
        }
        GroupTag::UrSpZ => {
            if m.matrix().as_integers().is_none() {
                return Err(NonMembership::NonIntegerEntry);
            }
            check_lower_left(m)?;
            check_u(m)
        }
        GroupTag::Lambda => check_lambda(m),
        GroupTag::Delta => check_delta(m).map(|_| ()),
        GroupTag::Genus2Theta => {
            if m.genus() != 2 {
                return Err(NonMembership::WrongGenus(m.genus()));
            }
            check_lambda(m)
        }
    }
}

pub fn is_member(m: &BlockMat, tag: GroupTag) -> bool {
    check(m, tag).is_ok()
}

fn check_u(m: &BlockMat) -> Verdict {
    if m.preserves_form() {
        Ok(())
    } else {
        Err(NonMembership::NotFormPreserving)
    }
}

fn check_lower_left(m: &BlockMat) -> Verdict {
    if m.lower_left().is_zero() {
        Ok(())
    } else {
        Err(NonMembership::LowerLeftNonzero)
    }
}

fn check_even_det(m: &BlockMat) -> Verdict {
    let det = m.det().map_err(|e| NonMembership::DeterminantNotEvenPower(e.to_string()))?;
    if is_even_zeta_power(&det) {
        Ok(())
    } else {
        Err(NonMembership::DeterminantNotEvenPower(det.to_string()))
    }
}

/// `x = ζ^e` for some even representative `e` of its exponent class.
fn is_even_zeta_power(x: &CycInt) -> bool {
    let d = x.d();
    (0..d).any(|k| {
        let e = (2 * k) % d;
        CycInt::zeta_pow(d, e as i64).map(|z| z == *x).unwrap_or(false)
    })
}

fn check_lambda(m: &BlockMat) -> Verdict {
    check_lower_left(m)?;
    let a = m.upper_left();
    let b = m.upper_right();
    let dd = m.lower_right();
    let d_adj = dd.adjoint();
    if !a.try_mul(&d_adj).expect("square blocks").is_identity() {
        return Err(NonMembership::UpperLeftNotInverseAdjoint);
    }
    let det = dd.det().expect("square block");
    if det.unit_exponent().is_none() {
        return Err(NonMembership::LowerRightDeterminant(det.to_string()));
    }
    let lhs = d_adj.try_mul(&b).expect("square blocks");
    let rhs = b.adjoint().try_mul(&dd).expect("square blocks");
    if lhs != rhs {
        return Err(NonMembership::BlocksIncompatible);
    }
    Ok(())
}

/// `m = ζ^k · [[Id, B], [0, Id]]` with `B = B*`; returns `(k, B)`.
pub fn delta_parts(m: &BlockMat) -> std::result::Result<(u32, RingMatrix), NonMembership> {
    check_lower_left(m)?;
    let corner = m.get(0, 0);
    let unit = match corner.unit_exponent() {
        Some(u) if u.sign == 1 => u,
        _ => return Err(NonMembership::DiagonalBlocksNotScalar),
    };
    let scaled = m.scale(&CycInt::zeta_pow(m.d(), -(unit.k as i64)).expect("valid modulus"));
    if !scaled.upper_left().is_identity() || !scaled.lower_right().is_identity() {
        return Err(NonMembership::DiagonalBlocksNotScalar);
    }
    let b = scaled.upper_right();
    if !b.is_self_adjoint() {
        return Err(NonMembership::UpperRightNotSelfAdjoint);
    }
    Ok((unit.k, b))
}

fn check_delta(m: &BlockMat) -> std::result::Result<(u32, RingMatrix), NonMembership> {
    delta_parts(m)
}

/// Image of a genus-2 element of `Lambda` in `Z/2 ⊕ R'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaImage {
    pub epsilon: i8,
    pub r: CycInt,
}

fn genus2_normal_form(m: &BlockMat) -> Result<(i8, CycInt)> {
    if m.genus() != 2 {
        return Err(Error::NotMember {
            group: "Genus2Theta",
            reason: NonMembership::WrongGenus(m.genus()),
        });
    }
    check_lambda(m).map_err(|reason| Error::NotMember {
        group: "Lambda",
        reason,
    })?;
    let unit = m
        .get(1, 1)
        .unit_exponent()
        .expect("Lambda membership forces D = ±z^k");
    let b = m.get(0, 1) * &CycInt::zeta_pow(m.d(), -(unit.k as i64))?;
    let r = if unit.sign < 0 { -b } else { b };
    Ok((unit.sign, r))
}

/// `ζ^k [[ε, b], [0, ε]] ↦ (ε, ε·b)` for odd `d`.
pub fn genus2_theta_project(m: &BlockMat) -> Result<ThetaImage> {
    if m.d() % 2 == 0 {
        return Err(Error::EvenModulus(m.d()));
    }
    let (epsilon, r) = genus2_normal_form(m)?;
    Ok(ThetaImage { epsilon, r })
}

/// The `R'` component of the genus-2 normal form, for any `d`.
///
/// For even `d` the sign cannot be separated from the scalar (`-1` is a power
/// of `ζ`), so the normal form is taken with `D = 1`.
pub fn genus2_real_part(m: &BlockMat) -> Result<CycInt> {
    Ok(genus2_normal_form(m)?.1)
}
