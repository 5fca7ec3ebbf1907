//! Seeded samplers for "general" elements.
//!
//! Genericity is Zariski-open, so integer points drawn uniformly from a box
//! `[-bound, bound]^n` hit it with overwhelming probability. All samplers take
//! an explicit RNG so results are reproducible from a seed.

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{LinearForm, exponent_vectors, Monomial, Polynomial, Side, VariableContext};
use crate::{int, Scalar};

pub type SeededRng = ChaCha8Rng;

pub const DEFAULT_BOUND: i64 = 10;
pub const DEFAULT_TRIALS: usize = 5;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for sample `index` of a run seeded by `seed`.
pub fn sub_rng(seed: u64, index: u64) -> SeededRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng
}

pub fn random_int(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn random_scalar(rng: &mut impl Rng, bound: i64) -> Scalar {
    int(random_int(rng, bound))
}

/// A nonzero linear form with integer coefficients in `[-bound, bound]`.
pub fn random_linear_form(
    ctx: &Arc<VariableContext>,
    rng: &mut impl Rng,
    bound: i64,
) -> LinearForm {
    loop {
        let coeffs: Vec<Scalar> = (0..ctx.nvars()).map(|_| random_scalar(rng, bound)).collect();
        if let Ok(l) = LinearForm::new(ctx, coeffs) {
            return l;
        }
    }
}

/// A random point with integer coordinates in `[-bound, bound]`.
pub fn random_point(nvars: usize, rng: &mut impl Rng, bound: i64) -> Vec<Scalar> {
    (0..nvars).map(|_| random_scalar(rng, bound)).collect()
}

/// Random homogeneous form of degree `k` on `side`, supported on the variables
/// listed in `vars` (indices into the context).
pub fn random_form_in(
    ctx: &Arc<VariableContext>,
    side: Side,
    vars: &[usize],
    k: u32,
    rng: &mut impl Rng,
    bound: i64,
) -> Polynomial {
    let terms: Vec<(Monomial, Scalar)> = exponent_vectors(vars.len(), k)
        .into_iter()
        .map(|m| (embed(ctx.nvars(), vars, &m), random_scalar(rng, bound)))
        .collect();
    Polynomial::from_terms(ctx, side, terms)
}

/// Places a monomial in `vars.len()` variables into the full context.
pub fn embed(nvars: usize, vars: &[usize], m: &Monomial) -> Monomial {
    let mut exps = vec![0; nvars];
    for (&v, &e) in vars.iter().zip(m.exponents()) {
        exps[v] = e;
    }
    Monomial::new(exps)
}
