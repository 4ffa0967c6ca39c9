//! Self-test sweeps run by `prym selftest`.
//!
//! Every suite is exact; a suite fails on the first mismatching case it
//! records (all cases are still run and counted).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::CycInt;
use crate::decompose::{decompose_delta, lambda_residual, reduce_lambda};
use crate::error::{Error, Result};
use crate::foxcover::{eta_chain, eta_fox, random_automorphism, Endo};
use crate::generators::{
    big_t, catalogue, elem_ti, elem_tij, expected_in_lambda, th, th_prime, GenSpec,
};
use crate::matrix::{BlockMat, RingMatrix};
use crate::predicates::{is_member, GroupTag};
use crate::sampling::{lambda_catalogue, random_cyc, random_self_adjoint, random_word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestConfig {
    pub max_d: u32,
    pub max_g: usize,
    pub seed: u64,
    /// Random samples per `(d, g)` cell in the randomized suites.
    pub samples: usize,
    /// Adds a suite that is designed to fail.
    pub inject_failure: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            max_d: 6,
            max_g: 3,
            seed: 0,
            samples: 20,
            inject_failure: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn record_result(&mut self, outcome: Result<bool>, describe: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(ok, describe),
            Err(e) => {
                let msg = describe();
                self.record(false, || format!("{msg}: {e}"));
            }
        }
    }
}

/// All `(i, j)` with `i > 0`, `j = ±1, …, ±(g-1)` and `|j| ≠ i`.
pub fn admissible_pairs(g: usize) -> Vec<(i64, i64)> {
    let n = g as i64 - 1;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (1..=n).flat_map(|j| [j, -j]) {
            if j.abs() != i {
                out.push((i, j));
            }
        }
    }
    out
}

/// `T_ij(1 - ζ^k)` and `T_H^-k T_H'^k` for one case.
pub fn identity_sides(g: usize, d: u32, i: i64, j: i64, k: i64) -> Result<(BlockMat, BlockMat)> {
    let r = CycInt::one(d)? - CycInt::zeta_pow(d, k)?;
    let lhs = elem_tij(g, d, i, j, &r)?;
    let rhs = th(g, d, i)?.pow(-k)?.try_mul(&th_prime(g, d, i, j)?.pow(k)?)?;
    Ok((lhs, rhs))
}

/// `[a, b] = a b a^-1 b^-1` for `a = T_(i,-j)(ζ^k)`, `b = T_(i,j)(1)`.
pub fn commutator(g: usize, d: u32, i: i64, j: i64, k: i64) -> Result<BlockMat> {
    let a = elem_tij(g, d, i, -j, &CycInt::zeta_pow(d, k)?)?;
    let b = elem_tij(g, d, i, j, &CycInt::one(d)?)?;
    a.try_mul(&b)?.try_mul(&a.inverse()?)?.try_mul(&b.inverse()?)
}

/// `T_i(ζ^k + ζ^-k)`.
pub fn commutator_target(g: usize, d: u32, i: i64, k: i64) -> Result<BlockMat> {
    let r = CycInt::zeta_pow(d, k)? + CycInt::zeta_pow(d, -k)?;
    elem_ti(g, d, i, &r)
}

fn cells(config: &SelftestConfig) -> impl Iterator<Item = (u32, usize)> + '_ {
    (2..=config.max_d).flat_map(move |d| (2..=config.max_g).map(move |g| (d, g)))
}

fn identity_suite(config: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("T_ij(1 - z^k) = T_H^-k T_H'^k");
    for (d, g) in cells(config) {
        for (i, j) in admissible_pairs(g) {
            for k in 1..d as i64 {
                rep.record_result(
                    identity_sides(g, d, i, j, k).map(|(l, r)| l == r),
                    || format!("d={d} g={g} i={i} j={j} k={k}"),
                );
            }
        }
    }
    rep
}

/// The commutator identity with the sign of `j` carried into the target:
/// `[T_(i,-j)(ζ^k), T_(i,j)(1)] = T_i(sgn(j) (ζ^k + ζ^-k))`.
fn commutator_suite(config: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("[T_(i,-j)(z^k), T_ij(1)] = T_i(sgn(j)(z^k + z^-k))");
    for (d, g) in cells(config) {
        for (i, j) in admissible_pairs(g) {
            for k in 1..d as i64 {
                let outcome = (|| {
                    let target = commutator_target(g, d, i, k)?;
                    let target = if j > 0 { target } else { target.inverse()? };
                    Ok(commutator(g, d, i, j, k)? == target)
                })();
                rep.record_result(outcome, || format!("d={d} g={g} i={i} j={j} k={k}"));
            }
        }
    }
    rep
}

fn generator_suite(config: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("generator soundness");
    for (d, g) in cells(config) {
        for spec in catalogue(g, d) {
            let outcome = spec.matrix(g, d).map(|m| {
                let delta = matches!(spec, GenSpec::G1(..) | GenSpec::G2(..) | GenSpec::G3(..));
                m.preserves_form()
                    && (!expected_in_lambda(&spec) || is_member(&m, GroupTag::Lambda))
                    && (!delta || is_member(&m, GroupTag::Delta))
                    && m.det().map(|x| x.unit_exponent().is_some()).unwrap_or(false)
            });
            rep.record_result(outcome, || format!("d={d} g={g} {spec}"));
        }
    }
    rep
}

fn delta_suite(config: &SelftestConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("Delta decomposition round trip");
    for (d, g) in cells(config) {
        for _ in 0..config.samples {
            let outcome = (|| {
                let b = random_self_adjoint(rng, d, g - 1, 5)?;
                let w = decompose_delta(&b, g)?;
                Ok(w.evaluate(g, d)? == BlockMat::unipotent(g, &b)?)
            })();
            rep.record_result(outcome, || format!("d={d} g={g}"));
        }
    }
    rep
}

fn lambda_suite(config: &SelftestConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("Lambda reduction round trip");
    for (d, g) in cells(config) {
        let pool = lambda_catalogue(g, d);
        for _ in 0..config.samples {
            let w_d = random_word(rng, &pool, 6);
            let outcome = (|| {
                let f0 = random_self_adjoint(rng, d, g - 1, 3)?;
                let m = w_d.evaluate(g, d)?.try_mul(&BlockMat::unipotent(g, &f0)?)?;
                let f = lambda_residual(&m, &w_d)?;
                let w = reduce_lambda(&m, &w_d)?;
                Ok(f.is_self_adjoint() && w.evaluate(g, d)? == m)
            })();
            rep.record_result(outcome, || format!("d={d} g={g} wD={w_d}"));
        }
    }
    rep
}

fn fox_suite(config: &SelftestConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("eta: chain = Fox, multiplicative, det = ±z^k");
    for (d, g) in cells(config) {
        for _ in 0..config.samples {
            let len = rng.gen_range(0..=8);
            let outcome = (|| {
                let phi = random_automorphism(rng, g, d, len)?;
                let psi = random_automorphism(rng, g, d, len)?;
                let chain = eta_chain(&phi, d)?;
                let fox = eta_fox(&phi, d)?;
                let product = eta_chain(&phi.compose(&psi)?, d)?;
                let expected = chain.try_mul(&eta_chain(&psi, d)?)?;
                Ok(chain == fox && product == expected && chain.det()?.unit_exponent().is_some())
            })();
            rep.record_result(outcome, || format!("d={d} g={g}"));
        }
    }
    rep
}

fn deck_suite(config: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("conjugation by x_g acts as z Id");
    for (d, g) in cells(config) {
        let outcome = (|| {
            let phi = Endo::deck_conjugation(g)?;
            let expected = RingMatrix::identity(d, g - 1)?.scale(&CycInt::zeta_pow(d, 1)?);
            Ok(eta_chain(&phi, d)? == expected && eta_fox(&phi, d)? == expected)
        })();
        rep.record_result(outcome, || format!("d={d} g={g}"));
    }
    rep
}

fn real_basis_suite(config: &SelftestConfig, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut rep = SuiteReport::new("real elements expand over 1, z^k + z^-k");
    for d in 2..=config.max_d {
        for _ in 0..config.samples {
            let outcome = (|| {
                let x = random_cyc(rng, d, 5)?;
                let r = &x + &x.conj();
                Ok(r.solve_real_basis()?.evaluate(d)? == r)
            })();
            rep.record_result(outcome, || format!("d={d}"));
        }
    }
    rep
}

fn injected_suite(config: &SelftestConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("injected failure");
    let d = config.max_d;
    rep.record_result(
        big_t(2, d).map(|t| t.is_identity()),
        || format!("T is not the identity for d={d}"),
    );
    rep
}

/// Runs every suite for `d ∈ 2..=max_d`, `g ∈ 2..=max_g`.
pub fn run(config: &SelftestConfig) -> Result<Vec<SuiteReport>> {
    if config.max_d < 2 {
        return Err(Error::ModulusTooSmall(config.max_d as u64));
    }
    if config.max_g < 2 {
        return Err(Error::GenusTooSmall(config.max_g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut reports = vec![
        identity_suite(config),
        commutator_suite(config),
        generator_suite(config),
        delta_suite(config, &mut rng),
        lambda_suite(config, &mut rng),
        fox_suite(config, &mut rng),
        deck_suite(config),
        real_basis_suite(config, &mut rng),
    ];
    if config.inject_failure {
        reports.push(injected_suite(config));
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_run_passes() {
        let config = SelftestConfig {
            max_d: 2,
            max_g: 2,
            samples: 3,
            ..SelftestConfig::default()
        };
        let reports = run(&config).unwrap();
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
        }
    }

    #[test]
    fn small_run_passes() {
        let config = SelftestConfig {
            max_d: 4,
            max_g: 3,
            samples: 4,
            ..SelftestConfig::default()
        };
        for r in run(&config).unwrap() {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn injection_fails() {
        let config = SelftestConfig {
            max_d: 2,
            max_g: 2,
            samples: 1,
            inject_failure: true,
            ..SelftestConfig::default()
        };
        let reports = run(&config).unwrap();
        assert!(!reports.last().unwrap().passed());
    }

    #[test]
    fn rejects_bad_bounds() {
        let config = SelftestConfig {
            max_d: 1,
            ..SelftestConfig::default()
        };
        assert!(run(&config).is_err());
    }

    #[test]
    fn admissible_pairs_genus_three() {
        assert_eq!(admissible_pairs(3), vec![(1, 2), (1, -2), (2, 1), (2, -1)]);
        assert!(admissible_pairs(2).is_empty());
    }
}
