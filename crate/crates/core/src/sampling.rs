//! Random inputs for randomized checks: ring elements, self-adjoint blocks,
//! catalogue words and graph automorphisms.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::cyclotomic::{CycInt, RealBasisCombination};
use crate::error::Result;
use crate::generators::{catalogue, expected_in_lambda, GenSpec};
use crate::matrix::RingMatrix;
use crate::word::Word;

/// Power-basis coefficients drawn uniformly from `[-bound, bound]`.
pub fn random_cyc<R: Rng + ?Sized>(rng: &mut R, d: u32, bound: i64) -> Result<CycInt> {
    let phi = crate::cyclotomic::Modulus::get(d)?.phi();
    let coeffs: Vec<BigInt> = (0..phi).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    CycInt::from_poly(d, &coeffs)
}

/// `n_0 + Σ n_k (ζ^k + ζ^-k)` with every `n` drawn from `[-bound, bound]`.
pub fn random_real<R: Rng + ?Sized>(rng: &mut R, d: u32, bound: i64) -> Result<CycInt> {
    RealBasisCombination {
        constant: BigInt::from(rng.gen_range(-bound..=bound)),
        cos_terms: (1..d).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect(),
    }
    .evaluate(d)
}

/// A random `n × n` matrix with `B = B*`; diagonal entries are real, the
/// strict upper triangle is uniform in the power basis.
pub fn random_self_adjoint<R: Rng + ?Sized>(
    rng: &mut R,
    d: u32,
    n: usize,
    bound: i64,
) -> Result<RingMatrix> {
    let mut b = RingMatrix::zeros(d, n, n)?;
    for i in 0..n {
        b.set(i, i, random_real(rng, d, bound)?);
        for j in i + 1..n {
            let x = random_cyc(rng, d, bound)?;
            b.set(j, i, x.conj());
            b.set(i, j, x);
        }
    }
    Ok(b)
}

/// Catalogue generators whose matrices lie in `Lambda`.
pub fn lambda_catalogue(g: usize, d: u32) -> Vec<GenSpec> {
    catalogue(g, d).into_iter().filter(expected_in_lambda).collect()
}

/// A word of `1..=max_len` factors drawn from `pool`, exponents in `{±1, ±2}`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, pool: &[GenSpec], max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len.max(1));
    Word::from_factors((0..len).map(|_| {
        let gen = pool.choose(rng).expect("non-empty pool").clone();
        let e = *[-2, -1, 1, 2].choose(rng).expect("non-empty");
        (gen, e)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_have_requested_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in [2, 5, 12] {
            assert!(random_real(&mut rng, d, 5).unwrap().is_real());
            let b = random_self_adjoint(&mut rng, d, 3, 5).unwrap();
            assert!(b.is_self_adjoint());
        }
        let pool = lambda_catalogue(3, 5);
        assert!(pool.iter().all(expected_in_lambda));
        let w = random_word(&mut rng, &pool, 6);
        assert!((1..=6).contains(&w.len()));
    }
}
