//! Higher Hessians `Hess^k_F = ((α_i α_j) ∘ F)` over a basis `α` of `A_k`, and
//! the Hessian criterion for strong Lefschetz elements.

use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;

use crate::apolarity::{mult_rank, ApolarAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{diff_apply, LinearForm, Polynomial, Side};
use crate::sampling::random_point;
use crate::Scalar;

/// Largest `h_k` for which symbolic determinants are expanded.
pub const DEFAULT_GUARD: usize = 8;

/// Points tried before an unexpanded determinant is reported as probably zero.
pub const VANISHING_POINTS: usize = 10;

#[derive(Debug, Clone)]
pub struct HessianMatrix {
    pub order: u32,
    /// Lifts of a basis of `A_k`.
    pub basis: Vec<Polynomial>,
    entries: Vec<Vec<Polynomial>>,
}

impl HessianMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// The scalar matrix obtained by evaluating every entry at `point`.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Matrix> {
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| p.evaluate(point)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Ok(Matrix::zeros(0, 0));
        }
        Matrix::from_rows(rows)
    }

    pub fn det_at(&self, point: &[Scalar]) -> Result<Scalar> {
        self.evaluate(point)?.determinant()
    }

    pub fn vanishes_at(&self, point: &[Scalar]) -> Result<bool> {
        Ok(self.det_at(point)?.is_zero())
    }

    /// Symbolic determinant by Laplace expansion along rows, memoizing minors
    /// by their column set.
    pub fn determinant(&self, guard: usize) -> Result<Polynomial> {
        let n = self.size();
        if n > guard {
            return Err(Error::SizeGuard { size: n, guard });
        }
        if n >= 32 {
            return Err(Error::SizeGuard { size: n, guard: 31 });
        }
        let ctx = self.entries[0][0].context().clone();
        let mut memo: HashMap<u32, Polynomial> = HashMap::new();
        memo.insert(0, Polynomial::one(&ctx, Side::S));
        self.minor((1u32 << n) - 1, &mut memo)
    }

    /// Determinant of rows `n - |cols| .. n` restricted to the columns in `cols`.
    fn minor(&self, cols: u32, memo: &mut HashMap<u32, Polynomial>) -> Result<Polynomial> {
        if let Some(p) = memo.get(&cols) {
            return Ok(p.clone());
        }
        let n = self.size();
        let row = n - cols.count_ones() as usize;
        let mut acc = Polynomial::zero(self.entries[0][0].context(), Side::S);
        let mut sign_positive = true;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let entry = &self.entries[row][j];
            if !entry.is_zero() {
                let sub = self.minor(cols & !(1 << j), memo)?;
                let term = entry.mul(&sub)?;
                acc = if sign_positive { acc.add(&term)? } else { acc.sub(&term)? };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(cols, acc.clone());
        Ok(acc)
    }
}

fn check_order(alg: &ApolarAlgebra, k: u32) -> Result<()> {
    let half = alg.socle_degree() / 2;
    if k > half {
        return Err(Error::DegreeOutOfRange {
            degree: k as usize,
            max: half as usize,
        });
    }
    Ok(())
}

/// `Hess^k_F` over the graded basis of `A_k`.
pub fn hessian_matrix(f: &Polynomial, k: u32) -> Result<HessianMatrix> {
    let alg = ApolarAlgebra::new(f)?;
    check_order(&alg, k)?;
    hessian_matrix_in(&alg, k, &alg.basis_polynomials(k))
}

/// `Hess^k_F` over an arbitrary lift basis of `A_k`.
pub fn hessian_matrix_in(alg: &ApolarAlgebra, k: u32, basis: &[Polynomial]) -> Result<HessianMatrix> {
    check_order(alg, k)?;
    if basis.len() != alg.hilbert().get(k as usize) {
        return Err(Error::Dimension(format!(
            "{} lifts given for A_{k} of dimension {}",
            basis.len(),
            alg.hilbert().get(k as usize)
        )));
    }
    let f = alg.dual_generator();
    let n = basis.len();
    let mut entries: Vec<Vec<Polynomial>> = vec![Vec::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            let e = if j < i {
                entries[j][i].clone()
            } else {
                diff_apply(&basis[i].mul(&basis[j])?, f)?
            };
            entries[i].push(e);
        }
    }
    Ok(HessianMatrix {
        order: k,
        basis: basis.to_vec(),
        entries,
    })
}

/// `hess^k_F(point)`, the exact determinant of the evaluated Hessian.
pub fn hessian_det_at(f: &Polynomial, k: u32, point: &[Scalar]) -> Result<Scalar> {
    let nvars = f.context().nvars();
    if point.len() != nvars {
        return Err(Error::PointLength {
            expected: nvars,
            got: point.len(),
        });
    }
    hessian_matrix(f, k)?.det_at(point)
}

/// Symbolic `hess^k_F`, refused when `h_k` exceeds [`DEFAULT_GUARD`].
pub fn hessian_poly(f: &Polynomial, k: u32) -> Result<Polynomial> {
    hessian_poly_with_guard(f, k, DEFAULT_GUARD)
}

pub fn hessian_poly_with_guard(f: &Polynomial, k: u32, guard: usize) -> Result<Polynomial> {
    let alg = ApolarAlgebra::new(f)?;
    check_order(&alg, k)?;
    let size = alg.hilbert().get(k as usize);
    if size > guard {
        return Err(Error::SizeGuard { size, guard });
    }
    hessian_matrix_in(&alg, k, &alg.basis_polynomials(k))?.determinant(guard)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Vanishing {
    /// The symbolic determinant is the zero polynomial.
    Zero,
    NonZero,
    /// Too large to expand; the determinant vanished at every listed point.
    ProbablyZero { points: Vec<Vec<Scalar>> },
}

/// Decides whether `hess^k_F` vanishes identically: exactly when `h_k <= guard`,
/// otherwise by evaluation at [`VANISHING_POINTS`] random points.
pub fn hessian_vanishing(
    f: &Polynomial,
    k: u32,
    guard: usize,
    rng: &mut impl Rng,
    bound: i64,
) -> Result<Vanishing> {
    let alg = ApolarAlgebra::new(f)?;
    check_order(&alg, k)?;
    let hess = hessian_matrix_in(&alg, k, &alg.basis_polynomials(k))?;
    if hess.size() <= guard {
        let det = hess.determinant(guard)?;
        return Ok(if det.is_zero() { Vanishing::Zero } else { Vanishing::NonZero });
    }
    let nvars = f.context().nvars();
    let mut points = Vec::with_capacity(VANISHING_POINTS);
    for _ in 0..VANISHING_POINTS {
        let p = random_point(nvars, rng, bound);
        if !hess.det_at(&p)?.is_zero() {
            return Ok(Vanishing::NonZero);
        }
        points.push(p);
    }
    Ok(Vanishing::ProbablyZero { points })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlpVerdict {
    pub is_strong_lefschetz: bool,
    /// Smallest `k` at which the criterion fails.
    pub failing_order: Option<u32>,
}

impl SlpVerdict {
    fn from_failure(failing_order: Option<u32>) -> Self {
        SlpVerdict {
            is_strong_lefschetz: failing_order.is_none(),
            failing_order,
        }
    }
}

/// Hessian criterion: `ℓ` is strong Lefschetz iff `hess^k_F(a) != 0` for all
/// `0 <= k <= d/2`, where `a` is the coefficient vector of `ℓ`. The verdict is
/// cross-checked against [`slp_rank_test`] and a disagreement is an error.
pub fn slp_test(f: &Polynomial, l: &LinearForm) -> Result<SlpVerdict> {
    let alg = ApolarAlgebra::new(f)?;
    let point = l.coefficients();
    let mut failing = None;
    for k in 0..=alg.socle_degree() / 2 {
        let hess = hessian_matrix_in(&alg, k, &alg.basis_polynomials(k))?;
        if hess.det_at(point)?.is_zero() {
            failing = Some(k);
            break;
        }
    }
    let verdict = SlpVerdict::from_failure(failing);
    let by_rank = slp_rank_test(f, l)?;
    if verdict != by_rank {
        return Err(Error::Invariant(format!(
            "Hessian criterion {verdict:?} disagrees with rank criterion {by_rank:?} for {l}"
        )));
    }
    Ok(verdict)
}

/// Rank criterion: `×ℓ^{d-2k} : A_k -> A_{d-k}` is bijective for all `0 <= k <= d/2`.
pub fn slp_rank_test(f: &Polynomial, l: &LinearForm) -> Result<SlpVerdict> {
    let d = f.homogeneous_degree()?;
    let h = crate::apolarity::hilbert_function(f)?;
    let lp = l.to_polynomial();
    let failing = (0..=d / 2).find(|&k| {
        mult_rank(f, &lp.pow(d - 2 * k), k).map_or(true, |r| r != h.get(k as usize))
    });
    Ok(SlpVerdict::from_failure(failing))
}
