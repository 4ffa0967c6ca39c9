//! Explicit matrices known to lie in the image: elementary transformations,
//! the diagonal map `T`, the conjugators `A_H` and `A_H'`, lifted-twist
//! transvections, deck scalars and integer upper-block symplectic matrices.
//!
//! Indices are signed, `i ∈ {±1, …, ±(g-1)}`, with `e_-i` paired to `e_i`
//! by the intersection form.

use std::fmt;

use num_bigint::BigInt;

use crate::cyclotomic::{CycInt, RingLiteral};
use crate::error::{Error, Result};
use crate::matrix::{basis_index, basis_vector, BlockMat, RingMatrix};
use crate::predicates::{check, GroupTag};

/// A named generator with its arguments, as written in the word language.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GenSpec {
    Ti(i64, RingLiteral),
    Tij(i64, i64, RingLiteral),
    BigT,
    AH(i64),
    AHPrime(i64, i64),
    TH(i64),
    THPrime(i64, i64),
    TwistE(i64),
    GammaIK(i64, i64),
    GammaIJK(i64, i64, i64),
    Zeta(i64),
    G1(i64),
    G2(i64, i64),
    G3(i64, i64, i64),
    /// Integer matrix, given row by row.
    UrSp(Vec<Vec<BigInt>>),
}

/// The three families of twist-group generators with identity diagonal blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaKind {
    /// Inverse twist about `E_i`: upper block `E_ii`.
    G1(i64),
    /// `T_γ ∘ T_(E_i)^-2` for `γ = (1 - ζ^k) e_i`: block `(ζ^k + ζ^-k) E_ii`.
    G2(i64, i64),
    /// `T_γ ∘ T_(E_i)^-1 ∘ T_(E_j)^-1` for `γ = e_i - ζ^k e_j`:
    /// block `ζ^k E_ji + ζ^-k E_ij`.
    G3(i64, i64, i64),
}

impl GenSpec {
    pub fn name(&self) -> &'static str {
        match self {
            GenSpec::Ti(..) => "Ti",
            GenSpec::Tij(..) => "Tij",
            GenSpec::BigT => "T",
            GenSpec::AH(..) => "AH",
            GenSpec::AHPrime(..) => "AHPrime",
            GenSpec::TH(..) => "TH",
            GenSpec::THPrime(..) => "THPrime",
            GenSpec::TwistE(..) => "TwistE",
            GenSpec::GammaIK(..) => "GammaIK",
            GenSpec::GammaIJK(..) => "GammaIJK",
            GenSpec::Zeta(..) => "Zeta",
            GenSpec::G1(..) => "G1",
            GenSpec::G2(..) => "G2",
            GenSpec::G3(..) => "G3",
            GenSpec::UrSp(..) => "UrSp",
        }
    }

    /// The matrix of this generator for the given genus and modulus.
    pub fn matrix(&self, g: usize, d: u32) -> Result<BlockMat> {
        match self {
            GenSpec::Ti(i, r) => elem_ti(g, d, *i, &r.reduce(d)?),
            GenSpec::Tij(i, j, r) => elem_tij(g, d, *i, *j, &r.reduce(d)?),
            GenSpec::BigT => big_t(g, d),
            GenSpec::AH(i) => conj_ah(g, d, *i),
            GenSpec::AHPrime(i, j) => conj_ah_prime(g, d, *i, *j),
            GenSpec::TH(i) => th(g, d, *i),
            GenSpec::THPrime(i, j) => th_prime(g, d, *i, *j),
            GenSpec::TwistE(i) => twist_e(g, d, *i),
            GenSpec::GammaIK(i, k) => gamma_ik(g, d, *i, *k),
            GenSpec::GammaIJK(i, j, k) => gamma_ijk(g, d, *i, *j, *k),
            GenSpec::Zeta(k) => scalar_zeta(g, d, *k),
            GenSpec::G1(i) => delta_generator(g, d, DeltaKind::G1(*i)),
            GenSpec::G2(i, k) => delta_generator(g, d, DeltaKind::G2(*i, *k)),
            GenSpec::G3(i, j, k) => delta_generator(g, d, DeltaKind::G3(*i, *j, *k)),
            GenSpec::UrSp(rows) => embed_ursp(g, d, &RingMatrix::from_integers(d, rows)?),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            GenSpec::BigT => f.write_str("T"),
            GenSpec::Ti(i, r) => write!(f, "{name}({i}; {r})"),
            GenSpec::Tij(i, j, r) => write!(f, "{name}({i}, {j}; {r})"),
            GenSpec::AH(i) | GenSpec::TH(i) | GenSpec::TwistE(i) | GenSpec::Zeta(i) | GenSpec::G1(i) => {
                write!(f, "{name}({i})")
            }
            GenSpec::AHPrime(a, b)
            | GenSpec::THPrime(a, b)
            | GenSpec::GammaIK(a, b)
            | GenSpec::G2(a, b) => write!(f, "{name}({a}, {b})"),
            GenSpec::GammaIJK(a, b, c) | GenSpec::G3(a, b, c) => write!(f, "{name}({a}, {b}, {c})"),
            GenSpec::UrSp(rows) => {
                f.write_str("UrSp(")?;
                for (r, row) in rows.iter().enumerate() {
                    if r > 0 {
                        f.write_str(" ; ")?;
                    }
                    for (c, x) in row.iter().enumerate() {
                        if c > 0 {
                            f.write_str(", ")?;
                        }
                        write!(f, "{x}")?;
                    }
                }
                f.write_str(")")
            }
        }
    }
}

impl From<DeltaKind> for GenSpec {
    fn from(kind: DeltaKind) -> Self {
        match kind {
            DeltaKind::G1(i) => GenSpec::G1(i),
            DeltaKind::G2(i, k) => GenSpec::G2(i, k),
            DeltaKind::G3(i, j, k) => GenSpec::G3(i, j, k),
        }
    }
}

fn check_genus(g: usize) -> Result<()> {
    if g < 2 {
        Err(Error::GenusTooSmall(g))
    } else {
        Ok(())
    }
}

fn check_positive(g: usize, i: i64) -> Result<()> {
    basis_index(g, i)?;
    if i > 0 {
        Ok(())
    } else {
        Err(Error::Index(format!("index {i} must be positive")))
    }
}

fn check_distinct(i: i64, j: i64) -> Result<()> {
    if i.abs() == j.abs() {
        Err(Error::Index(format!("indices {i} and {j} must satisfy |i| ≠ |j|")))
    } else {
        Ok(())
    }
}

/// `x ↦ x + Σ ⟨x, v⟩ w` over the given `(v, w)` pairs, i.e. `Id + Σ w (Ω v̄)ᵀ`.
fn rank_one_updates(g: usize, d: u32, pairs: &[(&[CycInt], &[CycInt])]) -> Result<BlockMat> {
    check_genus(g)?;
    let n = g - 1;
    let mut m = RingMatrix::identity(d, 2 * n)?;
    for (v, w) in pairs {
        // (Ω v̄)_c = v̄_(n+c) for c < n and -v̄_(c-n) otherwise
        let omega_v: Vec<CycInt> = (0..2 * n)
            .map(|c| if c < n { v[n + c].conj() } else { -v[c - n].conj() })
            .collect();
        for (r, wr) in w.iter().enumerate() {
            if wr.is_zero() {
                continue;
            }
            for (c, oc) in omega_v.iter().enumerate() {
                if !oc.is_zero() {
                    let updated = m.get(r, c) + &(wr * oc);
                    m.set(r, c, updated);
                }
            }
        }
    }
    BlockMat::new(g, m)
}

fn scaled(v: &[CycInt], s: &CycInt) -> Vec<CycInt> {
    v.iter().map(|x| x * s).collect()
}

/// `T_i(r'): x ↦ x + r' ⟨x, e_i⟩ e_i` for real `r'`.
pub fn elem_ti(g: usize, d: u32, i: i64, r: &CycInt) -> Result<BlockMat> {
    check_genus(g)?;
    if !r.is_real() {
        return Err(Error::NotReal(r.to_string()));
    }
    let e = basis_vector(g, d, i)?;
    rank_one_updates(g, d, &[(&e, &scaled(&e, r))])
}

/// `T_ij(r): x ↦ x + r ⟨x, e_i⟩ e_j + r̄ ⟨x, e_j⟩ e_i`.
pub fn elem_tij(g: usize, d: u32, i: i64, j: i64, r: &CycInt) -> Result<BlockMat> {
    check_genus(g)?;
    check_distinct(i, j)?;
    let ei = basis_vector(g, d, i)?;
    let ej = basis_vector(g, d, j)?;
    let w1 = scaled(&ej, r);
    let w2 = scaled(&ei, &r.conj());
    rank_one_updates(g, d, &[(&ei, &w1), (&ej, &w2)])
}

/// `T`: multiplication by `ζ` on `e_1, e_-1`, identity elsewhere.
pub fn big_t(g: usize, d: u32) -> Result<BlockMat> {
    check_genus(g)?;
    let mut m = RingMatrix::identity(d, 2 * (g - 1))?;
    let z = CycInt::zeta_pow(d, 1)?;
    for idx in [basis_index(g, 1)?, basis_index(g, -1)?] {
        m.set(idx, idx, z.clone());
    }
    BlockMat::new(g, m)
}

/// Builds a linear map from the images of selected basis vectors; unspecified
/// basis vectors are fixed. Later assignments override earlier ones.
fn from_images(g: usize, d: u32, images: &[(i64, Vec<(i64, i64)>)]) -> Result<BlockMat> {
    check_genus(g)?;
    let mut m = RingMatrix::identity(d, 2 * (g - 1))?;
    let zero = CycInt::zero(d)?;
    for (src, image) in images {
        let col = basis_index(g, *src)?;
        for r in 0..m.rows() {
            m.set(r, col, zero.clone());
        }
        for &(target, coeff) in image {
            let r = basis_index(g, target)?;
            let updated = m.get(r, col) + &CycInt::from_int(d, coeff)?;
            m.set(r, col, updated);
        }
    }
    BlockMat::new(g, m)
}

/// `A_H`: swaps `e_±i` with `e_±1`.
pub fn conj_ah(g: usize, d: u32, i: i64) -> Result<BlockMat> {
    check_positive(g, i)?;
    from_images(
        g,
        d,
        &[
            (1, vec![(i, 1)]),
            (-1, vec![(-i, 1)]),
            (i, vec![(1, 1)]),
            (-i, vec![(-1, 1)]),
        ],
    )
}

/// `A_H'`: an integer symplectic map sending `H' = ⟨e_i, e_-i + e_j⟩` to
/// `⟨e_1, e_-1⟩`.
///
/// For `j > 0` this is the map `e_±1 ↦ e_±i, e_i ↦ e_1, e_-i ↦ e_-1 - e_j,
/// e_-j ↦ e_-j - e_1` (with the `j = 1` variant). For negative `j` the last
/// image becomes `e_-j + e_1`, and for `j = -1` the map is
/// `e_1 ↦ e_1 + e_i, e_i ↦ e_1, e_-1 ↦ e_-i, e_-i ↦ e_-1 - e_-i`; with these
/// signs the map preserves the form and `T_ij(1 - ζ^k) = T_H^-k T_H'^k`
/// holds for every admissible `j`.
pub fn conj_ah_prime(g: usize, d: u32, i: i64, j: i64) -> Result<BlockMat> {
    check_positive(g, i)?;
    basis_index(g, j)?;
    check_distinct(i, j)?;
    let images = match j {
        1 => vec![
            (1, vec![(i, 1)]),
            (i, vec![(1, 1)]),
            (-1, vec![(-i, 1), (1, -1)]),
            (-i, vec![(-1, 1), (i, -1)]),
        ],
        -1 => vec![
            (1, vec![(1, 1), (i, 1)]),
            (i, vec![(1, 1)]),
            (-1, vec![(-i, 1)]),
            (-i, vec![(-1, 1), (-i, -1)]),
        ],
        _ => vec![
            (1, vec![(i, 1)]),
            (-1, vec![(-i, 1)]),
            (i, vec![(1, 1)]),
            (-i, vec![(-1, 1), (j, -1)]),
            (-j, vec![(-j, 1), (1, -j.signum())]),
        ],
    };
    from_images(g, d, &images)
}

/// `T_H = A_H^-1 ∘ T ∘ A_H`.
pub fn th(g: usize, d: u32, i: i64) -> Result<BlockMat> {
    let a = conj_ah(g, d, i)?;
    a.inverse()?.try_mul(&big_t(g, d)?)?.try_mul(&a)
}

/// `T_H' = A_H'^-1 ∘ T ∘ A_H'`.
pub fn th_prime(g: usize, d: u32, i: i64, j: i64) -> Result<BlockMat> {
    let a = conj_ah_prime(g, d, i, j)?;
    a.inverse()?.try_mul(&big_t(g, d)?)?.try_mul(&a)
}

/// `x ↦ x + ⟨x, v⟩ v` for an arbitrary vector `v`. The form is preserved
/// exactly when `⟨v, v⟩ = 0`.
pub fn transvection(g: usize, d: u32, v: &[CycInt]) -> Result<BlockMat> {
    check_genus(g)?;
    if v.len() != 2 * (g - 1) {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for genus {g}",
            v.len()
        )));
    }
    if let Some(x) = v.iter().find(|x| x.d() != d) {
        return Err(Error::ModulusMismatch(d, x.d()));
    }
    rank_one_updates(g, d, &[(v, v)])
}

/// The lifted twist `x ↦ x + ⟨x, v⟩ v` for `v` in the span of `e_1, …, e_(g-1)`.
/// Its upper-right block is `-v v*`.
pub fn twist_transvection(g: usize, d: u32, v: &[CycInt]) -> Result<BlockMat> {
    check_genus(g)?;
    let n = g - 1;
    if v.len() == 2 * n && v[n..].iter().any(|x| !x.is_zero()) {
        return Err(Error::Index(
            "twist vector must be supported on e_1, …, e_(g-1)".into(),
        ));
    }
    transvection(g, d, v)
}

/// Inverse of [`twist_transvection`]: upper-right block `+v v*`.
pub fn twist_transvection_inverse(g: usize, d: u32, v: &[CycInt]) -> Result<BlockMat> {
    let t = twist_transvection(g, d, v)?;
    let n = g - 1;
    let id = RingMatrix::identity(d, n)?;
    let zero = RingMatrix::zeros(d, n, n)?;
    BlockMat::from_blocks(g, &id, &t.upper_right().neg(), &zero, &id)
}

/// Twist about `E_i`, `i > 0`.
pub fn twist_e(g: usize, d: u32, i: i64) -> Result<BlockMat> {
    check_positive(g, i)?;
    twist_transvection(g, d, &basis_vector(g, d, i)?)
}

/// Twist about `γ_(i,k)` with class `(1 - ζ^k) e_i`.
pub fn gamma_ik(g: usize, d: u32, i: i64, k: i64) -> Result<BlockMat> {
    check_positive(g, i)?;
    let coeff = CycInt::one(d)? - CycInt::zeta_pow(d, k)?;
    twist_transvection(g, d, &scaled(&basis_vector(g, d, i)?, &coeff))
}

/// Twist about `γ_(i,j,k)` with class `e_i - ζ^k e_j`.
pub fn gamma_ijk(g: usize, d: u32, i: i64, j: i64, k: i64) -> Result<BlockMat> {
    check_positive(g, i)?;
    check_positive(g, j)?;
    check_distinct(i, j)?;
    let ei = basis_vector(g, d, i)?;
    let ej = scaled(&basis_vector(g, d, j)?, &CycInt::zeta_pow(d, k)?);
    let v: Vec<CycInt> = ei.iter().zip(&ej).map(|(a, b)| a - b).collect();
    twist_transvection(g, d, &v)
}

/// The twist-group generators, each computed as the stated product of twists.
pub fn delta_generator(g: usize, d: u32, kind: DeltaKind) -> Result<BlockMat> {
    match kind {
        DeltaKind::G1(i) => twist_e(g, d, i)?.inverse(),
        DeltaKind::G2(i, k) => gamma_ik(g, d, i, k)?.try_mul(&twist_e(g, d, i)?.pow(-2)?),
        DeltaKind::G3(i, j, k) => gamma_ijk(g, d, i, j, k)?
            .try_mul(&twist_e(g, d, i)?.inverse()?)?
            .try_mul(&twist_e(g, d, j)?.inverse()?),
    }
}

/// The deck scalar `ζ^k · Id`.
pub fn scalar_zeta(g: usize, d: u32, k: i64) -> Result<BlockMat> {
    Ok(BlockMat::identity(g, d)?.scale(&CycInt::zeta_pow(d, k)?))
}

/// Promotes an integer upper-block symplectic matrix.
pub fn embed_ursp(g: usize, d: u32, m: &RingMatrix) -> Result<BlockMat> {
    if m.d() != d {
        return Err(Error::ModulusMismatch(d, m.d()));
    }
    let b = BlockMat::new(g, m.clone())?;
    check(&b, GroupTag::UrSpZ).map_err(|reason| Error::NotMember {
        group: "UrSpZ",
        reason,
    })?;
    Ok(b)
}

/// Every generator family with small representative arguments for genus `g`
/// and modulus `d`. Families that are only in the image for some signs of
/// their indices are listed with all signs.
pub fn catalogue(g: usize, d: u32) -> Vec<GenSpec> {
    let n = g as i64 - 1;
    let pos: Vec<i64> = (1..=n).collect();
    let all: Vec<i64> = (1..=n).flat_map(|i| [i, -i]).collect();
    let ks: Vec<i64> = (0..d as i64).collect();
    let real_samples = [
        RingLiteral::constant(1),
        RingLiteral::constant(-2),
        RingLiteral::parse("z + z^-1").expect("literal"),
    ];
    let samples = [
        RingLiteral::constant(1),
        RingLiteral::parse("z").expect("literal"),
        RingLiteral::parse("1 - z^2").expect("literal"),
    ];
    let mut out = vec![GenSpec::BigT];
    for &i in &all {
        for r in &real_samples {
            out.push(GenSpec::Ti(i, r.clone()));
        }
        for &j in &all {
            if i.abs() != j.abs() {
                for r in &samples {
                    out.push(GenSpec::Tij(i, j, r.clone()));
                }
            }
        }
    }
    for &i in &pos {
        out.push(GenSpec::AH(i));
        out.push(GenSpec::TH(i));
        out.push(GenSpec::TwistE(i));
        out.push(GenSpec::G1(i));
        for &j in &all {
            if i.abs() != j.abs() {
                out.push(GenSpec::AHPrime(i, j));
                out.push(GenSpec::THPrime(i, j));
            }
        }
        for &k in &ks {
            out.push(GenSpec::GammaIK(i, k));
            out.push(GenSpec::G2(i, k));
            for &j in &pos {
                if j != i {
                    out.push(GenSpec::GammaIJK(i, j, k));
                    out.push(GenSpec::G3(i, j, k));
                }
            }
        }
    }
    for &k in &ks {
        out.push(GenSpec::Zeta(k));
    }
    let size = 2 * n as usize;
    let mut unipotent = vec![vec![BigInt::from(0); size]; size];
    for (r, row) in unipotent.iter_mut().enumerate() {
        row[r] = BigInt::from(1);
    }
    unipotent[0][n as usize] = BigInt::from(1);
    out.push(GenSpec::UrSp(unipotent));
    out
}

/// Whether the generator's matrix lies in `Lambda` (upper block form).
pub fn expected_in_lambda(spec: &GenSpec) -> bool {
    match spec {
        GenSpec::Ti(i, _) => *i > 0,
        GenSpec::Tij(i, j, _) => *i > 0 || *j > 0,
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::parse_ring_element;
    use crate::predicates::is_member;

    fn lit(d: u32, s: &str) -> CycInt {
        parse_ring_element(d, s).unwrap()
    }

    fn bm(g: usize, d: u32, s: &str) -> BlockMat {
        BlockMat::parse(g, d, s).unwrap()
    }

    /// Image of `e_src` under the map, as a vector.
    fn image(m: &BlockMat, src: i64) -> Vec<CycInt> {
        m.matrix().column(basis_index(m.genus(), src).unwrap())
    }

    fn combo(g: usize, d: u32, terms: &[(i64, &str)]) -> Vec<CycInt> {
        let mut v = vec![CycInt::zero(d).unwrap(); 2 * (g - 1)];
        for (idx, c) in terms {
            let k = basis_index(g, *idx).unwrap();
            v[k] = &v[k] + &lit(d, c);
        }
        v
    }

    #[test]
    fn ti_examples() {
        let one = CycInt::one(5).unwrap();
        assert_eq!(elem_ti(2, 5, 1, &one).unwrap(), bm(2, 5, "1, -1 ; 0, 1"));
        assert!(elem_ti(3, 5, 2, &CycInt::zero(5).unwrap()).unwrap().is_identity());
        let t = elem_ti(3, 5, -2, &one).unwrap();
        assert!(!t.lower_left().is_zero());
        assert!(!is_member(&t, GroupTag::Lambda));
        assert!(matches!(elem_ti(2, 5, 1, &lit(5, "z")), Err(Error::NotReal(_))));
    }

    #[test]
    fn tij_examples() {
        let one = CycInt::one(5).unwrap();
        let t = elem_tij(3, 5, 1, 2, &one).unwrap();
        assert_eq!(t.upper_right(), RingMatrix::parse(5, "0, -1 ; -1, 0").unwrap());
        assert!(t.upper_left().is_identity() && t.lower_right().is_identity());
        assert!(elem_tij(3, 5, 1, -2, &CycInt::zero(5).unwrap()).unwrap().is_identity());

        let z = lit(4, "z");
        let t = elem_tij(3, 4, 1, -2, &z).unwrap();
        assert_eq!(image(&t, 2), combo(3, 4, &[(2, "1"), (1, "z^-1")]));
        assert_eq!(image(&t, -1), combo(3, 4, &[(-1, "1"), (-2, "-z")]));
        assert_eq!(image(&t, 1), combo(3, 4, &[(1, "1")]));
        assert_eq!(image(&t, -2), combo(3, 4, &[(-2, "1")]));
        assert!(elem_tij(3, 4, 1, -1, &z).is_err());
    }

    #[test]
    fn tij_positive_block_formula() {
        // block -r E_ji - r̄ E_ij for i, j > 0
        let d = 7;
        let r = lit(d, "2 + z^3");
        let t = elem_tij(4, d, 1, 3, &r).unwrap();
        let b = t.upper_right();
        assert_eq!(b.get(2, 0), &-r.clone());
        assert_eq!(b.get(0, 2), &-r.conj());
        assert_eq!(b.entries().filter(|x| !x.is_zero()).count(), 2);
    }

    #[test]
    fn big_t_examples() {
        assert_eq!(big_t(2, 5).unwrap(), bm(2, 5, "z, 0 ; 0, z"));
        assert_eq!(
            big_t(3, 5).unwrap(),
            bm(3, 5, "z, 0, 0, 0 ; 0, 1, 0, 0 ; 0, 0, z, 0 ; 0, 0, 0, 1")
        );
        assert!(big_t(3, 6).unwrap().pow(6).unwrap().is_identity());
    }

    #[test]
    fn ah_examples() {
        assert!(conj_ah(3, 5, 1).unwrap().is_identity());
        let a = conj_ah(3, 5, 2).unwrap();
        assert_eq!(a, bm(3, 5, "0, 1, 0, 0 ; 1, 0, 0, 0 ; 0, 0, 0, 1 ; 0, 0, 1, 0"));
        assert!(is_member(&a, GroupTag::UrSpZ));
        assert!(conj_ah(3, 5, -2).is_err());
    }

    #[test]
    fn ah_prime_j_equals_one() {
        let a = conj_ah_prime(3, 5, 2, 1).unwrap();
        assert_eq!(image(&a, -1), combo(3, 5, &[(-2, "1"), (1, "-1")]));
        assert_eq!(image(&a, 1), combo(3, 5, &[(2, "1")]));
        assert_eq!(image(&a, 2), combo(3, 5, &[(1, "1")]));
        assert_eq!(image(&a, -2), combo(3, 5, &[(-1, "1"), (2, "-1")]));
    }

    #[test]
    fn ah_prime_is_integer_symplectic_for_all_cases() {
        for g in 2..=5 {
            let n = g as i64 - 1;
            for i in 1..=n {
                for j in (1..=n).flat_map(|j| [j, -j]) {
                    if i == j.abs() {
                        continue;
                    }
                    let a = conj_ah_prime(g, 3, i, j).unwrap();
                    assert!(is_member(&a, GroupTag::UrSpZ), "g={g} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn th_examples() {
        assert_eq!(th(3, 5, 1).unwrap(), big_t(3, 5).unwrap());
        let t = th(4, 5, 2).unwrap();
        let z = lit(5, "z");
        let e2 = basis_vector(4, 5, 2).unwrap();
        assert_eq!(t.matrix().mul_vec(&e2).unwrap(), scaled(&e2, &z));
        let e3 = basis_vector(4, 5, 3).unwrap();
        assert_eq!(t.matrix().mul_vec(&e3).unwrap(), e3);
    }

    #[test]
    fn th_prime_acts_by_zeta_on_h_prime() {
        for (g, i, j) in [(3, 2, 1), (3, 1, 2), (4, 2, 3), (4, 2, -3), (3, 2, -1), (3, 1, -2)] {
            let d = 7;
            let t = th_prime(g, d, i, j).unwrap();
            let z = lit(d, "z");
            let ei = basis_vector(g, d, i).unwrap();
            let h2: Vec<CycInt> = basis_vector(g, d, -i)
                .unwrap()
                .iter()
                .zip(&basis_vector(g, d, j).unwrap())
                .map(|(a, b)| a + b)
                .collect();
            for v in [ei, h2] {
                assert_eq!(t.matrix().mul_vec(&v).unwrap(), scaled(&v, &z), "g={g} i={i} j={j}");
            }
        }
    }

    #[test]
    fn twist_blocks() {
        let d = 5;
        let g = 3;
        let e1 = basis_vector(g, d, 1).unwrap();
        let inv = twist_transvection_inverse(g, d, &e1).unwrap();
        assert_eq!(inv.upper_right(), RingMatrix::parse(d, "1, 0 ; 0, 0").unwrap());
        assert_eq!(inv, twist_transvection(g, d, &e1).unwrap().inverse().unwrap());

        let gk = gamma_ik(g, d, 1, 2).unwrap();
        assert_eq!(gk.get(0, 2), &lit(d, "z^2 + z^-2 - 2"));

        let gijk = gamma_ijk(g, d, 1, 2, 3).unwrap().upper_right();
        assert_eq!(gijk, RingMatrix::parse(d, "-1, z^-3 ; z^3, -1").unwrap());

        let mut bad = e1.clone();
        bad[2] = CycInt::one(d).unwrap();
        assert!(twist_transvection(g, d, &bad).is_err());
    }

    #[test]
    fn twist_is_unit_phase_invariant() {
        let d = 9;
        let g = 4;
        let v = combo(g, d, &[(1, "1 + z"), (3, "2 - z^4")]);
        let base = twist_transvection(g, d, &v).unwrap();
        for m in 0..d as i64 {
            let zv = scaled(&v, &CycInt::zeta_pow(d, m).unwrap());
            assert_eq!(twist_transvection(g, d, &zv).unwrap(), base);
        }
    }

    #[test]
    fn delta_generator_blocks() {
        assert_eq!(delta_generator(2, 5, DeltaKind::G1(1)).unwrap(), bm(2, 5, "1, 1 ; 0, 1"));
        assert_eq!(
            delta_generator(2, 5, DeltaKind::G2(1, 1)).unwrap(),
            bm(2, 5, "1, z + z^4 ; 0, 1")
        );
        let g3 = delta_generator(3, 5, DeltaKind::G3(1, 2, 1)).unwrap();
        assert_eq!(g3.upper_right(), RingMatrix::parse(5, "0, z^-1 ; z, 0").unwrap());
        assert!(g3.upper_left().is_identity() && g3.lower_right().is_identity());
        assert!(delta_generator(3, 5, DeltaKind::G3(1, 1, 1)).is_err());
        assert!(delta_generator(3, 5, DeltaKind::G1(-1)).is_err());
    }

    #[test]
    fn ursp_embedding() {
        let id = RingMatrix::identity(5, 2).unwrap();
        assert!(embed_ursp(2, 5, &id).unwrap().is_identity());
        let u = RingMatrix::parse(5, "1, 1 ; 0, 1").unwrap();
        let e = embed_ursp(2, 5, &u).unwrap();
        assert!(is_member(&e, GroupTag::Lambda));
        let a = conj_ah(3, 5, 2).unwrap();
        assert_eq!(embed_ursp(3, 5, a.matrix()).unwrap(), a);
        assert!(embed_ursp(2, 5, &RingMatrix::parse(5, "1, z ; 0, 1").unwrap()).is_err());
        assert!(embed_ursp(2, 5, &RingMatrix::parse(5, "1, 0 ; 1, 1").unwrap()).is_err());
    }

    #[test]
    fn render_names() {
        let r = RingLiteral::parse("1+z").unwrap();
        assert_eq!(GenSpec::Ti(1, r.clone()).to_string(), "Ti(1; 1 + z)");
        assert_eq!(GenSpec::Tij(1, -2, r).to_string(), "Tij(1, -2; 1 + z)");
        assert_eq!(GenSpec::BigT.to_string(), "T");
        assert_eq!(GenSpec::G3(1, 2, 3).to_string(), "G3(1, 2, 3)");
        let rows = vec![vec![BigInt::from(1), BigInt::from(1)], vec![BigInt::from(0), BigInt::from(1)]];
        assert_eq!(GenSpec::UrSp(rows).to_string(), "UrSp(1, 1 ; 0, 1)");
    }
}
