//! Perazzo forms `F = X_0 p_0 + ... + X_n p_n + G` with `p_i, G` in the
//! `U`-variables only, where the `p_i` are linearly independent and
//! algebraically dependent.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use crate::apolarity::{hilbert_function, HilbertVector};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::linalg::{independent, Matrix};
use crate::poly::{
    diff_apply, same_context, LinearForm, Monomial, Polynomial, Side, VariableContext,
};
use crate::sampling::{random_form_in, random_int, random_point, rng_from_seed, SeededRng};
use crate::{int, Scalar};

/// Random points used by the Jacobian dependence test.
pub const JACOBIAN_POINTS: usize = 5;

/// Attempts made by the samplers before giving up.
pub const MAX_RETRIES: usize = 100;

/// `X,Y,Z` when `n = 2` and `X0..Xn` otherwise; `U,V` when `m = 2`, `U,V,W`
/// when `m = 3` and `U1..Um` otherwise. Operator names are the lower-case forms.
pub fn perazzo_context(n: usize, m: usize) -> Result<Arc<VariableContext>> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidPerazzo(format!("need n, m >= 2 (got n = {n}, m = {m})")));
    }
    let xs: Vec<String> = if n == 2 {
        vec!["X".into(), "Y".into(), "Z".into()]
    } else {
        (0..=n).map(|i| format!("X{i}")).collect()
    };
    let us: Vec<String> = match m {
        2 => vec!["U".into(), "V".into()],
        3 => vec!["U".into(), "V".into(), "W".into()],
        _ => (1..=m).map(|i| format!("U{i}")).collect(),
    };
    let names: Vec<&str> = xs.iter().chain(&us).map(String::as_str).collect();
    VariableContext::from_upper(&names)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerazzoForm {
    n: usize,
    m: usize,
    d: u32,
    p: Vec<Polynomial>,
    g: Polynomial,
    form: Polynomial,
}

impl PerazzoForm {
    pub fn form(&self) -> &Polynomial {
        &self.form
    }

    pub fn p(&self) -> &[Polynomial] {
        &self.p
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        self.form.context()
    }

    pub fn hilbert(&self) -> Result<HilbertVector> {
        hilbert_function(&self.form)
    }

    /// Indices of the `U`-variables in the context.
    pub fn u_vars(&self) -> Vec<usize> {
        (self.n + 1..=self.n + self.m).collect()
    }
}

impl fmt::Display for PerazzoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

fn only_u_vars(p: &Polynomial, n: usize) -> bool {
    p.terms().all(|(m, _)| m.exponents()[..=n].iter().all(|&e| e == 0))
}

fn check_piece(p: &Polynomial, n: usize, degree: u32, what: &str) -> Result<()> {
    if p.side() != Side::S {
        return Err(Error::SideMismatch {
            expected: Side::S,
            found: p.side(),
        });
    }
    if p.homogeneous_degree()? != degree {
        return Err(Error::InvalidPerazzo(format!("{what} must have degree {degree}")));
    }
    if !only_u_vars(p, n) {
        return Err(Error::InvalidPerazzo(format!("{what} involves an X-variable")));
    }
    Ok(())
}

/// Rank of the Jacobian of `ps` in the variables `vars` at `point`.
fn jacobian_rank(ps: &[Polynomial], vars: &[usize], point: &[Scalar]) -> Result<usize> {
    let rows = ps
        .iter()
        .map(|p| vars.iter().map(|&v| p.partial(v).evaluate(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows)?.rank())
}

/// Validates and assembles `Σ X_i p_i + G`.
///
/// Linear independence is an exact rank test on the coefficients of the `p_i`.
/// Algebraic dependence holds automatically when `n + 1 > m`; otherwise the
/// Jacobian of the `p_i` must be rank deficient at [`JACOBIAN_POINTS`] random points.
pub fn build_perazzo(
    n: usize,
    m: usize,
    d: u32,
    p: Vec<Polynomial>,
    g: Option<Polynomial>,
) -> Result<PerazzoForm> {
    let ctx = perazzo_context(n, m)?;
    if d < 3 {
        return Err(Error::InvalidPerazzo(format!("degree must be at least 3 (got {d})")));
    }
    if p.len() != n + 1 {
        return Err(Error::InvalidPerazzo(format!("expected {} forms p_i, got {}", n + 1, p.len())));
    }
    for (i, pi) in p.iter().enumerate() {
        if !same_context(pi.context(), &ctx) {
            return Err(Error::ContextMismatch);
        }
        check_piece(pi, n, d - 1, &format!("p_{i}"))?;
    }
    let g = g.unwrap_or_else(|| Polynomial::zero(&ctx, Side::S));
    if !same_context(g.context(), &ctx) {
        return Err(Error::ContextMismatch);
    }
    if !g.is_zero() {
        check_piece(&g, n, d, "G")?;
    }
    let vectors: Vec<_> = p
        .iter()
        .map(|pi| pi.terms().map(|(k, v)| (k.clone(), v.clone())).collect())
        .collect();
    if !independent(&vectors) {
        return Err(Error::LinearlyDependent);
    }
    if n + 1 <= m {
        let vars: Vec<usize> = (n + 1..=n + m).collect();
        let mut rng = rng_from_seed(0x9e37_79b9);
        for _ in 0..JACOBIAN_POINTS {
            let point = random_point(ctx.nvars(), &mut rng, 10);
            if jacobian_rank(&p, &vars, &point)? == n + 1 {
                return Err(Error::AlgebraicallyIndependent);
            }
        }
    }
    let mut form = g.clone();
    for (i, pi) in p.iter().enumerate() {
        form = form.add(&Polynomial::variable(&ctx, Side::S, i).mul(pi)?)?;
    }
    Ok(PerazzoForm { n, m, d, p, g, form })
}

/// Splits a form in a Perazzo context into its `p_i` and `G` and validates it.
pub fn decompose(f: &Polynomial, n: usize, m: usize) -> Result<PerazzoForm> {
    let ctx = perazzo_context(n, m)?;
    if !same_context(f.context(), &ctx) {
        return Err(Error::ContextMismatch);
    }
    let d = f.homogeneous_degree()?;
    let mut p: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); n + 1];
    let mut g = Vec::new();
    for (mono, c) in f.terms() {
        let xs = &mono.exponents()[..=n];
        match xs.iter().sum::<u32>() {
            0 => g.push((mono.clone(), c.clone())),
            1 => {
                let i = xs.iter().position(|&e| e == 1).expect("one X-variable");
                let mut exps = mono.exponents().to_vec();
                exps[i] = 0;
                p[i].push((Monomial::new(exps), c.clone()));
            }
            _ => {
                return Err(Error::InvalidPerazzo(
                    "form is not linear in the X-variables".into(),
                ))
            }
        }
    }
    let p = p
        .into_iter()
        .map(|terms| Polynomial::from_terms(&ctx, Side::S, terms))
        .collect();
    build_perazzo(n, m, d, p, Some(Polynomial::from_terms(&ctx, Side::S, g)))
}

/// `ℓ ∘ F`, again validated as a Perazzo form of degree `d - 1`.
pub fn derivative(pf: &PerazzoForm, l: &LinearForm) -> Result<PerazzoForm> {
    let lf = diff_apply(&l.to_polynomial(), &pf.form)?;
    decompose(&lf, pf.n, pf.m)
}

/// Coefficients of a threefold under the binomial normalization
/// `p_0 = Σ C(d-1,i) a_i U^{d-1-i} V^i` (likewise `b` for `p_1`, `c` for `p_2`)
/// and `G = Σ C(d,i) g_i U^{d-i} V^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerazzoCoefficients {
    pub d: u32,
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
    pub c: Vec<Scalar>,
    pub g: Vec<Scalar>,
}

fn uv_monomial(d: u32, i: u32) -> Monomial {
    Monomial::new(vec![0, 0, 0, d - i, i])
}

fn normalized(p: &Polynomial, deg: u32) -> Vec<Scalar> {
    (0..=deg)
        .map(|i| p.coefficient(&uv_monomial(deg, i)) / int(binomial(deg as u64, i as u64) as i64))
        .collect()
}

fn weighted(ctx: &Arc<VariableContext>, coeffs: &[Scalar], deg: u32) -> Polynomial {
    Polynomial::from_terms(
        ctx,
        Side::S,
        coeffs.iter().enumerate().map(|(i, c)| {
            let i = i as u32;
            (uv_monomial(deg, i), c * int(binomial(deg as u64, i as u64) as i64))
        }),
    )
}

fn require_threefold(pf: &PerazzoForm) -> Result<()> {
    if pf.n != 2 || pf.m != 2 {
        return Err(Error::InvalidPerazzo(format!(
            "needs n = m = 2 (got n = {}, m = {})",
            pf.n, pf.m
        )));
    }
    Ok(())
}

impl PerazzoCoefficients {
    pub fn of(pf: &PerazzoForm) -> Result<Self> {
        require_threefold(pf)?;
        let d = pf.d;
        Ok(PerazzoCoefficients {
            d,
            a: normalized(&pf.p[0], d - 1),
            b: normalized(&pf.p[1], d - 1),
            c: normalized(&pf.p[2], d - 1),
            g: normalized(&pf.g, d),
        })
    }

    /// `(p_0, p_1, p_2, G)` rebuilt from the coefficients.
    pub fn reassemble(&self, ctx: &Arc<VariableContext>) -> [Polynomial; 4] {
        let d = self.d;
        [
            weighted(ctx, &self.a, d - 1),
            weighted(ctx, &self.b, d - 1),
            weighted(ctx, &self.c, d - 1),
            weighted(ctx, &self.g, d),
        ]
    }
}

/// Rows `r = 0, ..., d - k` of `(v_r, ..., v_{r + width - 1})`.
fn hankel(v: &[Scalar], rows: usize, width: usize) -> Matrix {
    let data = (0..rows).map(|r| v[r..r + width].to_vec()).collect();
    Matrix::from_rows(data).expect("rectangular")
}

/// Hankel blocks of a threefold and the composite matrices bounding `h_2`, `h_3`.
#[derive(Debug, Clone)]
pub struct BlockMatrices {
    /// `A_k, B_k, C_k` for `k = 2, 3, 4`, indexed by `k - 2`.
    pub a: [Matrix; 3],
    pub b: [Matrix; 3],
    pub c: [Matrix; 3],
    pub g2: Matrix,
    pub g3: Matrix,
    pub m2: Matrix,
    pub m3: Matrix,
    pub n2: Matrix,
    pub n3: Matrix,
    /// `N_2` with `G_2` stacked underneath.
    pub n2_prime: Matrix,
    /// `N_3` with `G_3` stacked underneath.
    pub n3_prime: Matrix,
}

/// `A_k` has `d - k + 1` rows, row `r` being `(a_r, ..., a_{r+k-1})`; `G_k` is
/// the same with width `k + 1`.
pub fn block_matrices(pf: &PerazzoForm) -> Result<BlockMatrices> {
    let co = PerazzoCoefficients::of(pf)?;
    let d = co.d as usize;
    if d < 4 {
        return Err(Error::InvalidPerazzo("block matrices need d >= 4".into()));
    }
    let blocks = |v: &[Scalar]| [2, 3, 4].map(|k| hankel(v, d - k + 1, k));
    let a = blocks(&co.a);
    let b = blocks(&co.b);
    let c = blocks(&co.c);
    let g2 = hankel(&co.g, d - 1, 3);
    let g3 = hankel(&co.g, d - 2, 4);
    let m2 = Matrix::hstack(&[&a[0], &b[0], &c[0]])?;
    let m3 = Matrix::hstack(&[&a[1], &b[1], &c[1]])?;
    let n2 = Matrix::vstack(&[&a[1], &b[1], &c[1]])?;
    let n3 = Matrix::vstack(&[&a[2], &b[2], &c[2]])?;
    let n2_prime = Matrix::vstack(&[&n2, &g2])?;
    let n3_prime = Matrix::vstack(&[&n3, &g3])?;
    Ok(BlockMatrices {
        a,
        b,
        c,
        g2,
        g3,
        m2,
        m3,
        n2,
        n3,
        n2_prime,
        n3_prime,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankBounds {
    pub h2: usize,
    pub h3: usize,
    pub rank_m2: usize,
    pub rank_m3: usize,
    pub rank_n2: usize,
    pub rank_n3: usize,
    pub rank_n2_prime: usize,
    pub rank_n3_prime: usize,
}

impl RankBounds {
    /// `rank M_2 + rank N_2 <= h_2 <= rank M_2 + rank N'_2`.
    pub fn h2_holds(&self) -> bool {
        self.rank_m2 + self.rank_n2 <= self.h2 && self.h2 <= self.rank_m2 + self.rank_n2_prime
    }

    /// `rank M_3 + rank N_3 <= h_3 <= rank M_3 + rank N'_3`.
    pub fn h3_holds(&self) -> bool {
        self.rank_m3 + self.rank_n3 <= self.h3 && self.h3 <= self.rank_m3 + self.rank_n3_prime
    }

    pub fn holds(&self) -> bool {
        self.h2_holds() && self.h3_holds() && self.rank_n3_prime <= 4
    }
}

/// Ranks of the block matrices next to `h_2`, `h_3` of the algebra.
pub fn hf_rank_bounds_check(pf: &PerazzoForm) -> Result<RankBounds> {
    let blocks = block_matrices(pf)?;
    let h = pf.hilbert()?;
    Ok(RankBounds {
        h2: h.get(2),
        h3: h.get(3),
        rank_m2: blocks.m2.rank(),
        rank_m3: blocks.m3.rank(),
        rank_n2: blocks.n2.rank(),
        rank_n3: blocks.n3.rank(),
        rank_n2_prime: blocks.n2_prime.rank(),
        rank_n3_prime: blocks.n3_prime.rank(),
    })
}

/// The three threefold normal forms with minimal Hilbert function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinimalVariant {
    /// `X U^{d-1} + Y U^{d-2} V + Z U^{d-3} V^2`
    I,
    /// `X U^{d-1} + Y U^{d-2} V + Z V^{d-1}`
    II,
    /// `X U^{d-1} + Y (U + λV)^{d-1} + Z V^{d-1}`, `λ != 0`
    III,
}

impl MinimalVariant {
    pub const ALL: [MinimalVariant; 3] = [MinimalVariant::I, MinimalVariant::II, MinimalVariant::III];
}

impl fmt::Display for MinimalVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinimalVariant::I => "i",
            MinimalVariant::II => "ii",
            MinimalVariant::III => "iii",
        })
    }
}

impl FromStr for MinimalVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(MinimalVariant::I),
            "ii" | "2" => Ok(MinimalVariant::II),
            "iii" | "3" => Ok(MinimalVariant::III),
            other => Err(Error::InvalidArgument(format!("unknown variant `{other}`"))),
        }
    }
}

/// `(1, 5, 6, ..., 6, 5, 1)` of socle degree `d`.
pub fn minimal_hilbert(d: u32) -> HilbertVector {
    let d = d as usize;
    HilbertVector::new(
        (0..=d)
            .map(|i| match i.min(d - i) {
                0 => 1,
                1 => 5,
                _ => 6,
            })
            .collect(),
    )
}

/// The normal form of the given variant; its Hilbert function is checked to be minimal.
pub fn normal_form(variant: MinimalVariant, d: u32, lambda: &Scalar) -> Result<PerazzoForm> {
    if d < 5 {
        return Err(Error::InvalidArgument(format!("normal forms need d >= 5 (got {d})")));
    }
    let ctx = perazzo_context(2, 2)?;
    let u = Polynomial::variable(&ctx, Side::S, 3);
    let v = Polynomial::variable(&ctx, Side::S, 4);
    let uv = |i: u32, j: u32| u.pow(i).mul(&v.pow(j)).expect("same context");
    let p = match variant {
        MinimalVariant::I => vec![uv(d - 1, 0), uv(d - 2, 1), uv(d - 3, 2)],
        MinimalVariant::II => vec![uv(d - 1, 0), uv(d - 2, 1), uv(0, d - 1)],
        MinimalVariant::III => {
            if lambda.is_zero() {
                return Err(Error::InvalidArgument("λ must be nonzero".into()));
            }
            let shifted = u.add(&v.scale(lambda))?.pow(d - 1);
            vec![uv(d - 1, 0), shifted, uv(0, d - 1)]
        }
    };
    let pf = build_perazzo(2, 2, d, p, None)?;
    let h = pf.hilbert()?;
    if h != minimal_hilbert(d) {
        return Err(Error::Invariant(format!("normal form has Hilbert function {h}")));
    }
    Ok(pf)
}

/// `ℓ = a_0 x + a_1 y + a_2 z + b_0 u + b_1 v` is a weak Lefschetz element of the
/// normal form: (i) `b_0 != 0`; (ii) `b_0 b_1 != 0`; (iii) `b_0 b_1 (b_0 + λ b_1) != 0`.
pub fn lefschetz_element_predicate(variant: MinimalVariant, lambda: &Scalar, l: &LinearForm) -> Result<bool> {
    let c = l.coefficients();
    if c.len() != 5 {
        return Err(Error::InvalidArgument("expected a linear form in five variables".into()));
    }
    let (b0, b1) = (&c[3], &c[4]);
    Ok(match variant {
        MinimalVariant::I => !b0.is_zero(),
        MinimalVariant::II => !b0.is_zero() && !b1.is_zero(),
        MinimalVariant::III => !b0.is_zero() && !b1.is_zero() && !(b0 + lambda * b1).is_zero(),
    })
}

/// A threefold algebra has the weak Lefschetz property iff at most one `h_i` equals `d + 2`.
pub fn wlp_predicate(hf: &[usize], d: u32) -> bool {
    hf.iter().filter(|&&h| h == d as usize + 2).count() <= 1
}

/// Shapes of the `p_i` drawn by [`random_perazzo_threefold`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFamily {
    /// All coefficients random.
    Dense,
    /// `p_i = L^e q_i` for a random linear `L` in `U, V`.
    CommonFactor,
    /// `p_i = Σ_j c_ij L_j^{d-1}` over three to five random linear forms.
    PowerSum,
    /// Dense coefficients, each kept with probability one half.
    Sparse,
}

fn random_uv_form(ctx: &Arc<VariableContext>, k: u32, rng: &mut SeededRng, bound: i64) -> Polynomial {
    random_form_in(ctx, Side::S, &[3, 4], k, rng, bound)
}

fn sample_p(ctx: &Arc<VariableContext>, d: u32, family: SampleFamily, rng: &mut SeededRng, bound: i64) -> Result<Vec<Polynomial>> {
    Ok(match family {
        SampleFamily::Dense => (0..3).map(|_| random_uv_form(ctx, d - 1, rng, bound)).collect(),
        SampleFamily::Sparse => (0..3)
            .map(|_| {
                let dense = random_uv_form(ctx, d - 1, rng, bound);
                let kept: Vec<_> = dense
                    .terms()
                    .filter(|_| rng.gen_bool(0.5))
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect();
                Polynomial::from_terms(ctx, Side::S, kept)
            })
            .collect(),
        SampleFamily::CommonFactor => {
            let e = rng.gen_range(1..=d - 3);
            let l = random_uv_form(ctx, 1, rng, bound).pow(e);
            (0..3)
                .map(|_| l.mul(&random_uv_form(ctx, d - 1 - e, rng, bound)))
                .collect::<Result<_>>()?
        }
        SampleFamily::PowerSum => {
            let r = rng.gen_range(3..=5);
            let powers: Vec<Polynomial> = (0..r)
                .map(|_| random_uv_form(ctx, 1, rng, bound).pow(d - 1))
                .collect();
            (0..3)
                .map(|_| {
                    powers.iter().try_fold(Polynomial::zero(ctx, Side::S), |acc, q| {
                        acc.add(&q.scale(&int(random_int(rng, bound))))
                    })
                })
                .collect::<Result<_>>()?
        }
    })
}

/// A random threefold of degree `d`, deterministic in `seed`.
///
/// The family of the `p_i` is drawn first (dense, common factor, power sum,
/// sparse) so that non-maximal Hilbert functions also occur; `G` is random or
/// zero with equal probability. Samples with linearly dependent `p_i` are redrawn.
pub fn random_perazzo_threefold(d: u32, seed: u64, bound: i64) -> Result<PerazzoForm> {
    random_perazzo_threefold_with(d, &mut rng_from_seed(seed), bound)
}

pub fn random_perazzo_threefold_with(d: u32, rng: &mut SeededRng, bound: i64) -> Result<PerazzoForm> {
    if d < 5 {
        return Err(Error::InvalidArgument(format!("threefold samples need d >= 5 (got {d})")));
    }
    if bound < 1 {
        return Err(Error::InvalidArgument("coefficient bound must be positive".into()));
    }
    let ctx = perazzo_context(2, 2)?;
    for _ in 0..MAX_RETRIES {
        let family = match rng.gen_range(0..8) {
            0..=2 => SampleFamily::Dense,
            3 | 4 => SampleFamily::CommonFactor,
            5 | 6 => SampleFamily::PowerSum,
            _ => SampleFamily::Sparse,
        };
        let p = sample_p(&ctx, d, family, rng, bound)?;
        let g = rng.gen_bool(0.5).then(|| random_uv_form(&ctx, d, rng, bound));
        if p.iter().any(Polynomial::is_zero) {
            continue;
        }
        match build_perazzo(2, 2, d, p, g) {
            Ok(pf) => return Ok(pf),
            Err(Error::LinearlyDependent) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// `X p_0 + Y p_1 + Z p_2` with random forms `p_i` of degree `d - 1` in `U, V, W`.
///
/// Three general forms in three variables are algebraically independent, so this
/// is not validated as a Perazzo form; only its Hilbert function is of interest.
pub fn general_fourfold(d: u32, seed: u64, bound: i64) -> Result<Polynomial> {
    let ctx = perazzo_context(2, 3)?;
    let mut rng = rng_from_seed(seed);
    let mut f = Polynomial::zero(&ctx, Side::S);
    for i in 0..3 {
        let p = random_form_in(&ctx, Side::S, &[3, 4, 5], d - 1, &mut rng, bound);
        f = f.add(&Polynomial::variable(&ctx, Side::S, i).mul(&p)?)?;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::hessians::hessian_det_at;
    use crate::jordan::wlp_test;
    use crate::poly::parse_poly;
    use crate::sampling::random_linear_form;

    fn ctx() -> Arc<VariableContext> {
        perazzo_context(2, 2).unwrap()
    }

    fn s(text: &str) -> Polynomial {
        parse_poly(text, &ctx(), Side::S).unwrap()
    }

    fn ell(text: &str) -> LinearForm {
        LinearForm::parse(text, &ctx()).unwrap()
    }

    #[test]
    fn contexts() {
        assert_eq!(perazzo_context(2, 2).unwrap().names(Side::S), &["X", "Y", "Z", "U", "V"]);
        assert_eq!(perazzo_context(2, 3).unwrap().names(Side::S)[5], "W");
        assert_eq!(perazzo_context(3, 4).unwrap().names(Side::R)[0], "x0");
        assert!(perazzo_context(1, 2).is_err());
    }

    #[test]
    fn build_examples() {
        let pf = build_perazzo(2, 2, 5, vec![s("U^4"), s("U^3*V"), s("U^2*V^2")], None).unwrap();
        assert_eq!(pf.form(), &s("X*U^4 + Y*U^3*V + Z*U^2*V^2"));
        assert_eq!(pf, normal_form(MinimalVariant::I, 5, &Scalar::one()).unwrap());
        assert_eq!(
            build_perazzo(2, 2, 5, vec![s("U^4"), s("U^4"), s("V^4")], None),
            Err(Error::LinearlyDependent)
        );
        assert!(matches!(
            build_perazzo(2, 2, 5, vec![s("U^4"), s("X*U^3"), s("V^4")], None),
            Err(Error::InvalidPerazzo(_))
        ));
        assert!(matches!(
            build_perazzo(2, 2, 5, vec![s("U^4"), s("U^2*V"), s("V^4")], None),
            Err(Error::InvalidPerazzo(_))
        ));
    }

    #[test]
    fn algebraic_dependence() {
        let c = perazzo_context(2, 3).unwrap();
        let q = |t: &str| parse_poly(t, &c, Side::S).unwrap();
        // Forms in U, V only are dependent as polynomials in three variables.
        assert!(build_perazzo(2, 3, 4, vec![q("U^3"), q("U^2*V"), q("V^3")], None).is_ok());
        assert_eq!(
            build_perazzo(2, 3, 2, vec![q("U"), q("V"), q("W")], None),
            Err(Error::InvalidPerazzo("degree must be at least 3 (got 2)".into()))
        );
        assert_eq!(
            build_perazzo(2, 3, 3, vec![q("U^2"), q("V^2"), q("W^2")], None),
            Err(Error::AlgebraicallyIndependent)
        );
    }

    #[test]
    fn normal_forms() {
        assert_eq!(
            normal_form(MinimalVariant::II, 6, &Scalar::one()).unwrap().form(),
            &s("X*U^5 + Y*U^4*V + Z*V^5")
        );
        assert_eq!(
            normal_form(MinimalVariant::III, 5, &int(2)).unwrap().form(),
            &s("X*U^4 + Y*U^4 + 8*Y*U^3*V + 24*Y*U^2*V^2 + 32*Y*U*V^3 + 16*Y*V^4 + Z*V^4")
        );
        assert!(normal_form(MinimalVariant::III, 5, &int(0)).is_err());
        assert!(normal_form(MinimalVariant::I, 4, &Scalar::one()).is_err());
        assert_eq!("ii".parse::<MinimalVariant>().unwrap(), MinimalVariant::II);
        assert_eq!(minimal_hilbert(7).as_slice(), &[1, 5, 6, 6, 6, 6, 5, 1]);
    }

    #[test]
    fn predicates() {
        let one = Scalar::one();
        assert!(lefschetz_element_predicate(MinimalVariant::I, &one, &ell("u")).unwrap());
        assert!(!lefschetz_element_predicate(MinimalVariant::II, &one, &ell("u")).unwrap());
        assert!(!lefschetz_element_predicate(MinimalVariant::III, &one, &ell("u - v")).unwrap());
        assert!(!wlp_predicate(&[1, 5, 8, 8, 8, 5, 1], 6));
        assert!(wlp_predicate(&[1, 5, 7, 8, 7, 5, 1], 6));
        assert!(wlp_predicate(minimal_hilbert(9).as_slice(), 9));
    }

    #[test]
    fn predicate_agrees_with_rank_test() {
        let mut rng = rng_from_seed(2);
        let lambda = int(-3);
        for variant in MinimalVariant::ALL {
            let pf = normal_form(variant, 6, &lambda).unwrap();
            for text in ["u", "v", "u + v", "u + 3v", "x + y", "z - 2u + 5v", "3u + v"] {
                let l = ell(text);
                assert_eq!(
                    lefschetz_element_predicate(variant, &lambda, &l).unwrap(),
                    wlp_test(pf.form(), &l).unwrap(),
                    "{variant} {text}"
                );
            }
            for _ in 0..5 {
                let l = random_linear_form(&ctx(), &mut rng, 4);
                assert_eq!(
                    lefschetz_element_predicate(variant, &lambda, &l).unwrap(),
                    wlp_test(pf.form(), &l).unwrap()
                );
            }
        }
    }

    #[test]
    fn coefficients_round_trip() {
        for seed in 0..10 {
            let pf = random_perazzo_threefold(6, seed, 10).unwrap();
            let co = PerazzoCoefficients::of(&pf).unwrap();
            let [p0, p1, p2, g] = co.reassemble(pf.context());
            assert_eq!([&p0, &p1, &p2], [&pf.p()[0], &pf.p()[1], &pf.p()[2]]);
            assert_eq!(&g, pf.g());
        }
    }

    #[test]
    fn block_examples() {
        let pf = normal_form(MinimalVariant::I, 5, &Scalar::one()).unwrap();
        let co = PerazzoCoefficients::of(&pf).unwrap();
        assert_eq!(co.a, vec![int(1), int(0), int(0), int(0), int(0)]);
        let blocks = block_matrices(&pf).unwrap();
        assert_eq!((blocks.a[0].nrows(), blocks.a[0].ncols()), (4, 2));
        assert_eq!(blocks.a[0].rank(), 1);
        assert_eq!(blocks.m2.rank(), 3);
        assert!(blocks.g2.is_zero() && blocks.g3.is_zero());
        assert_eq!((blocks.n2_prime.nrows(), blocks.n2_prime.ncols()), (13, 3));
        assert!(hf_rank_bounds_check(&pf).unwrap().holds());

        let ii = normal_form(MinimalVariant::II, 7, &Scalar::one()).unwrap();
        let bounds = hf_rank_bounds_check(&ii).unwrap();
        assert_eq!(bounds.h2, 6);
        assert!(bounds.holds(), "{bounds:?}");
    }

    #[test]
    fn sampler_is_deterministic_and_valid() {
        for seed in 0..15 {
            let a = random_perazzo_threefold(5, seed, 5).unwrap();
            assert_eq!(a, random_perazzo_threefold(5, seed, 5).unwrap());
            let h = a.hilbert().unwrap();
            assert!(
                h.as_slice() == [1, 5, 6, 6, 5, 1] || h.as_slice() == [1, 5, 7, 7, 5, 1],
                "{h}"
            );
        }
        assert!(random_perazzo_threefold(4, 0, 5).is_err());
    }

    #[test]
    fn hessian_vanishes_on_samples() {
        let mut rng = rng_from_seed(4);
        for seed in 0..4 {
            let pf = random_perazzo_threefold(5, seed, 10).unwrap();
            for _ in 0..3 {
                let p = random_point(5, &mut rng, 10);
                assert!(hessian_det_at(pf.form(), 1, &p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn derivative_is_perazzo() {
        let mut rng = rng_from_seed(8);
        for seed in 0..5 {
            let pf = random_perazzo_threefold(6, seed, 10).unwrap();
            let l = random_linear_form(&ctx(), &mut rng, 10);
            let dpf = derivative(&pf, &l).unwrap();
            assert_eq!(dpf.degree(), 5);
        }
        let pf = normal_form(MinimalVariant::II, 6, &Scalar::one()).unwrap();
        let again = decompose(pf.form(), 2, 2).unwrap();
        assert_eq!(again, pf);
        assert!(decompose(&s("X^2*U^3 + Y*V^4"), 2, 2).is_err());
    }
}
