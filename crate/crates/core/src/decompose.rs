//! Constructive decompositions into generator words.
//!
//! [`decompose_delta`] writes a unipotent `[[Id, B], [0, Id]]` with `B = B*`
//! as a product of `G1`, `G2`, `G3` factors. [`reduce_lambda`] reduces an
//! element of `Lambda` to that case, given a word realizing its lower-right
//! block.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::generators::GenSpec;
use crate::matrix::{BlockMat, RingMatrix};
use crate::predicates::{check, GroupTag};
use crate::word::Word;

/// A word over `G1`, `G2`, `G3` evaluating to `[[Id, B], [0, Id]]`.
///
/// Factors are emitted diagonal first, then by `(i, j)` with `i < j`. Each
/// power-basis coefficient `c_m` of `b_ij` becomes `G3(i, j, d - m)^(c_m)`.
pub fn decompose_delta(b: &RingMatrix, g: usize) -> Result<Word> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    let n = g - 1;
    if b.rows() != n || b.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "genus {g} needs a {n}x{n} block, got {}x{}",
            b.rows(),
            b.cols()
        )));
    }
    if !b.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    let d = b.d() as i64;
    let mut word = Word::identity();
    for i in 0..n {
        let combo = b.get(i, i).solve_real_basis()?;
        let idx = i as i64 + 1;
        word.push(GenSpec::G1(idx), to_exponent(&combo.constant)?);
        for (k, c) in combo.cos_terms.iter().enumerate() {
            word.push(GenSpec::G2(idx, k as i64 + 1), to_exponent(c)?);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for (m, c) in b.get(i, j).coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                word.push(
                    GenSpec::G3(i as i64 + 1, j as i64 + 1, d - m as i64),
                    to_exponent(c)?,
                );
            }
        }
    }
    Ok(word)
}

fn to_exponent(c: &num_bigint::BigInt) -> Result<i64> {
    i64::try_from(c).map_err(|_| Error::DimensionMismatch(format!("exponent {c} exceeds 64 bits")))
}

/// `F = D* (B - E)`, where `M = [[A, B], [0, D]]` and `evaluate(wD) = [[A, E], [0, D]]`.
pub fn lambda_residual(m: &BlockMat, w_d: &Word) -> Result<RingMatrix> {
    let lambda = |reason| Error::NotMember {
        group: "Lambda",
        reason,
    };
    check(m, GroupTag::Lambda).map_err(lambda)?;
    let n_mat = w_d.evaluate(m.genus(), m.d())?;
    check(&n_mat, GroupTag::Lambda).map_err(lambda)?;
    let dd = m.lower_right();
    if n_mat.lower_right() != dd {
        return Err(Error::BlockMismatch);
    }
    let diff = m.upper_right().try_sub(&n_mat.upper_right())?;
    dd.adjoint().try_mul(&diff)
}

/// A word for `M ∈ Lambda`: `wD` followed by the decomposition of the
/// self-adjoint residual `F`, since `evaluate(wD) · [[Id, F], [0, Id]] = M`.
pub fn reduce_lambda(m: &BlockMat, w_d: &Word) -> Result<Word> {
    let f = lambda_residual(m, w_d)?;
    if !f.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    Ok(w_d.concat(&decompose_delta(&f, m.genus())?))
}
