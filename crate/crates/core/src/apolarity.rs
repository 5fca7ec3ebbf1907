//! The Artinian Gorenstein algebra `A_F = R / Ann(F)` of a homogeneous dual
//! generator `F`.
//!
//! `A_k` is identified with the space `R_k ∘ F ⊂ S_{d-k}` of order-`k`
//! derivatives of `F`: an operator `p` is zero in `A_F` exactly when `p ∘ F = 0`.
//! Every rank below is a rank of such derivative spaces, computed exactly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::poly::{
    diff_apply, diff_monomial, monomials_of_degree, LinearForm, Monomial, Polynomial, Side,
};
use crate::sampling::random_scalar;
use crate::Scalar;

/// `(h_0, ..., h_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HilbertVector(Vec<usize>);

impl HilbertVector {
    pub fn new(values: Vec<usize>) -> Self {
        HilbertVector(values)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `dim_K A = sum h_i`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sperner(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for HilbertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for HilbertVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        trimmed
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidArgument(format!("`{}` is not a non-negative integer", t.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(HilbertVector)
    }
}

/// Matrix of `R_k -> S_{d-k}, p ↦ p ∘ F` in graded-lex monomial bases.
#[derive(Debug, Clone)]
pub struct CatalecticantMatrix {
    pub degree: u32,
    /// Monomials of `S_{d-k}`.
    pub rows: Vec<Monomial>,
    /// Monomials of `R_k`.
    pub cols: Vec<Monomial>,
    pub matrix: Matrix,
}

impl CatalecticantMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

fn require_form(f: &Polynomial) -> Result<u32> {
    if f.side() != Side::S {
        return Err(Error::SideMismatch {
            expected: Side::S,
            found: f.side(),
        });
    }
    f.homogeneous_degree()
}

fn require_operator(g: &Polynomial) -> Result<u32> {
    if g.side() != Side::R {
        return Err(Error::SideMismatch {
            expected: Side::R,
            found: g.side(),
        });
    }
    g.homogeneous_degree()
}

pub fn catalecticant_matrix(f: &Polynomial, k: u32) -> Result<CatalecticantMatrix> {
    let d = require_form(f)?;
    if k > d {
        return Err(Error::DegreeOutOfRange {
            degree: k as usize,
            max: d as usize,
        });
    }
    let ctx = f.context();
    let rows = monomials_of_degree(ctx, d - k);
    let cols = monomials_of_degree(ctx, k);
    let row_index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = Matrix::zeros(rows.len(), cols.len());
    for (j, op) in cols.iter().enumerate() {
        for (m, c) in f.terms() {
            if let Some((rest, ff)) = diff_monomial(op, m) {
                let i = row_index[&rest];
                let v = matrix.get(i, j) + c * Scalar::from_integer(ff);
                matrix.set(i, j, v);
            }
        }
    }
    Ok(CatalecticantMatrix {
        degree: k,
        rows,
        cols,
        matrix,
    })
}

/// `h_k = rank Cat_k(F)` for `0 <= k <= d`.
pub fn hilbert_function(f: &Polynomial) -> Result<HilbertVector> {
    let d = require_form(f)?;
    (0..=d)
        .map(|k| catalecticant_matrix(f, k).map(|c| c.rank()))
        .collect::<Result<Vec<_>>>()
        .map(HilbertVector)
}

/// Greedy graded-lex selection of monomials of `R_k` with independent images.
pub fn graded_basis(f: &Polynomial, k: u32) -> Result<Vec<Monomial>> {
    let alg = ApolarAlgebra::new(f)?;
    if k > alg.socle {
        return Err(Error::DegreeOutOfRange {
            degree: k as usize,
            max: alg.socle as usize,
        });
    }
    Ok(alg.bases[k as usize].clone())
}

/// Basis of `Ann(F)_k` as operators, from the catalecticant kernel.
pub fn annihilator_basis(f: &Polynomial, k: u32) -> Result<Vec<Polynomial>> {
    let cat = catalecticant_matrix(f, k)?;
    let ctx = f.context();
    Ok(cat
        .matrix
        .kernel()
        .into_iter()
        .map(|v| Polynomial::from_terms(ctx, Side::R, cat.cols.iter().cloned().zip(v)))
        .collect())
}

/// `rank(×g : A_i -> A_{i+s})`, computed as `rank Cat_i(g ∘ F)`: the image of
/// `m` is `(g m) ∘ F = m ∘ (g ∘ F)`.
pub fn mult_rank(f: &Polynomial, g: &Polynomial, i: u32) -> Result<usize> {
    let d = require_form(f)?;
    let s = require_operator(g)?;
    if i + s > d {
        return Err(Error::DegreeOutOfRange {
            degree: (i + s) as usize,
            max: d as usize,
        });
    }
    let gf = diff_apply(g, f)?;
    if gf.is_zero() {
        return Ok(0);
    }
    Ok(catalecticant_matrix(&gf, i)?.rank())
}

/// Matrix of `×g : A_i -> A_{i+s}` in the graded bases of [`graded_basis`].
pub fn mult_map_matrix(f: &Polynomial, g: &Polynomial, i: u32) -> Result<Matrix> {
    ApolarAlgebra::new(f)?.multiplication_matrix(g, i)
}

/// `h'_i = dim [R/(Ann F, ℓ)]_i = h_i - rank(×ℓ : A_{i-1} -> A_i)`, padded to length `d + 1`.
pub fn quotient_hf(f: &Polynomial, l: &LinearForm) -> Result<Vec<usize>> {
    let alg = ApolarAlgebra::new(f)?;
    alg.quotient_hf(l)
}

/// Hilbert function of `R/(Ann F : ℓ)`, whose dual generator is `ℓ ∘ F`.
pub fn colon_hf(f: &Polynomial, l: &LinearForm) -> Result<HilbertVector> {
    require_form(f)?;
    let lf = diff_apply(&l.to_polynomial(), f)?;
    if lf.is_zero() {
        return Err(Error::Annihilates);
    }
    hilbert_function(&lf)
}

/// The three Hilbert functions of `0 -> R/(I:ℓ)(-1) -> R/I -> R/(I,ℓ) -> 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneSequence {
    pub hilbert: HilbertVector,
    pub quotient: Vec<usize>,
    pub colon: HilbertVector,
}

impl HyperplaneSequence {
    /// `h_i = h'_i + colon_{i-1}` for all `i >= 1`, and `h'_0 = h_0`.
    pub fn is_exact(&self) -> bool {
        self.quotient.first().copied() == Some(self.hilbert.get(0))
            && (1..=self.hilbert.socle_degree())
                .all(|i| self.hilbert.get(i) == self.quotient[i] + self.colon.get(i - 1))
    }
}

/// Computes the quotient through multiplication matrices in basis coordinates
/// and the colon through the derivative `ℓ ∘ F`, then checks exactness.
pub fn hyperplane_sequence(f: &Polynomial, l: &LinearForm) -> Result<HyperplaneSequence> {
    let alg = ApolarAlgebra::new(f)?;
    let seq = HyperplaneSequence {
        hilbert: alg.hilbert.clone(),
        quotient: alg.quotient_hf(l)?,
        colon: colon_hf(f, l)?,
    };
    if !seq.is_exact() {
        return Err(Error::Invariant(format!(
            "exact sequence fails: h = {}, h' = {:?}, colon = {}",
            seq.hilbert, seq.quotient, seq.colon
        )));
    }
    Ok(seq)
}

fn vector_of(p: &Polynomial) -> BTreeMap<Monomial, Scalar> {
    p.terms_map().clone()
}

/// `A_F` with a chosen monomial basis in every degree.
#[derive(Debug, Clone)]
pub struct ApolarAlgebra {
    dual: Polynomial,
    socle: u32,
    hilbert: HilbertVector,
    bases: Vec<Vec<Monomial>>,
    /// Echelon form of the basis images `m ∘ F`, in basis order.
    echelons: Vec<Echelon<Monomial>>,
}

impl ApolarAlgebra {
    pub fn new(f: &Polynomial) -> Result<Self> {
        let d = require_form(f)?;
        let hilbert = hilbert_function(f)?;
        let ctx = f.context();
        let mut bases = Vec::with_capacity(d as usize + 1);
        let mut echelons = Vec::with_capacity(d as usize + 1);
        for k in 0..=d {
            let mut basis = Vec::new();
            let mut ech = Echelon::new();
            for m in monomials_of_degree(ctx, k) {
                if basis.len() == hilbert.get(k as usize) {
                    break;
                }
                let op = Polynomial::monomial(ctx, Side::R, m.clone(), Scalar::from_integer(1.into()));
                let image = diff_apply(&op, f)?;
                if ech.insert(&vector_of(&image)) {
                    basis.push(m);
                }
            }
            if basis.len() != hilbert.get(k as usize) {
                return Err(Error::Invariant(format!(
                    "degree {k}: greedy basis has {} elements but catalecticant rank is {}",
                    basis.len(),
                    hilbert.get(k as usize)
                )));
            }
            bases.push(basis);
            echelons.push(ech);
        }
        if !crate::combinatorics::symmetric(hilbert.as_slice()) {
            return Err(Error::Invariant(format!("h-vector {hilbert} is not symmetric")));
        }
        Ok(ApolarAlgebra {
            dual: f.clone(),
            socle: d,
            hilbert,
            bases,
            echelons,
        })
    }

    pub fn dual_generator(&self) -> &Polynomial {
        &self.dual
    }

    pub fn socle_degree(&self) -> u32 {
        self.socle
    }

    pub fn hilbert(&self) -> &HilbertVector {
        &self.hilbert
    }

    pub fn dimension(&self) -> usize {
        self.hilbert.total()
    }

    pub fn basis(&self, k: u32) -> &[Monomial] {
        &self.bases[k as usize]
    }

    pub fn basis_polynomials(&self, k: u32) -> Vec<Polynomial> {
        let ctx = self.dual.context();
        self.bases[k as usize]
            .iter()
            .map(|m| Polynomial::monomial(ctx, Side::R, m.clone(), Scalar::from_integer(1.into())))
            .collect()
    }

    /// `p ∘ F`, the image of `p` in the dual picture of `A_F`.
    pub fn image(&self, p: &Polynomial) -> Result<Polynomial> {
        diff_apply(p, &self.dual)
    }

    fn check_degree(&self, k: u32) -> Result<()> {
        if k > self.socle {
            return Err(Error::DegreeOutOfRange {
                degree: k as usize,
                max: self.socle as usize,
            });
        }
        Ok(())
    }

    /// Coordinates of a homogeneous operator of degree `k` in the basis of `A_k`.
    pub fn coordinates(&self, p: &Polynomial, k: u32) -> Result<Vec<Scalar>> {
        self.check_degree(k)?;
        if !p.is_zero() && p.homogeneous_degree()? != k {
            return Err(Error::Dimension(format!("operator is not of degree {k}")));
        }
        let image = self.image(p)?;
        self.echelons[k as usize]
            .express(&vector_of(&image))
            .ok_or_else(|| Error::Invariant("image outside the span of the basis".into()))
    }

    /// Matrix of `×g : A_i -> A_{i+s}` in the graded bases.
    pub fn multiplication_matrix(&self, g: &Polynomial, i: u32) -> Result<Matrix> {
        let s = require_operator(g)?;
        self.check_degree(i + s)?;
        let source = self.basis_polynomials(i);
        let target_ech = &self.echelons[(i + s) as usize];
        self.build_multiplication(g, &source, target_ech, self.hilbert.get((i + s) as usize))
    }

    /// Matrix of `×g : A_i -> A_{i+s}` with respect to arbitrary lift bases.
    pub fn multiplication_matrix_with(
        &self,
        g: &Polynomial,
        i: u32,
        source: &[Polynomial],
        target: &[Polynomial],
    ) -> Result<Matrix> {
        let s = require_operator(g)?;
        self.check_degree(i + s)?;
        self.check_lift_basis(source, i)?;
        let target_ech = self.check_lift_basis(target, i + s)?;
        self.build_multiplication(g, source, &target_ech, target.len())
    }

    fn build_multiplication(
        &self,
        g: &Polynomial,
        source: &[Polynomial],
        target: &Echelon<Monomial>,
        target_dim: usize,
    ) -> Result<Matrix> {
        let mut columns = Vec::with_capacity(source.len());
        for b in source {
            let image = self.image(&g.mul(b)?)?;
            let coords = target
                .express(&vector_of(&image))
                .ok_or_else(|| Error::Invariant("product outside target span".into()))?;
            columns.push(coords);
        }
        if columns.is_empty() {
            return Ok(Matrix::zeros(target_dim, 0));
        }
        Matrix::from_columns(columns)
    }

    /// Verifies that `basis` lifts a basis of `A_k` and returns the echelon of its images.
    fn check_lift_basis(&self, basis: &[Polynomial], k: u32) -> Result<Echelon<Monomial>> {
        if basis.len() != self.hilbert.get(k as usize) {
            return Err(Error::Dimension(format!(
                "{} elements given for A_{k} of dimension {}",
                basis.len(),
                self.hilbert.get(k as usize)
            )));
        }
        let mut ech = Echelon::new();
        for b in basis {
            if !b.is_zero() && b.homogeneous_degree()? != k {
                return Err(Error::Dimension(format!("lift is not of degree {k}")));
            }
            if !ech.insert(&vector_of(&self.image(b)?)) {
                return Err(Error::Dimension(format!("lifts are dependent in A_{k}")));
            }
        }
        Ok(ech)
    }

    /// Another lift basis of `A_k`: an invertible random recombination of the
    /// graded basis plus random elements of `Ann(F)_k`.
    pub fn random_lift_basis(&self, k: u32, rng: &mut impl Rng, bound: i64) -> Result<Vec<Polynomial>> {
        self.check_degree(k)?;
        let base = self.basis_polynomials(k);
        let ann = annihilator_basis(&self.dual, k)?;
        let ctx = self.dual.context();
        loop {
            let mut lifts = Vec::with_capacity(base.len());
            for _ in 0..base.len() {
                let mut p = Polynomial::zero(ctx, Side::R);
                for b in base.iter().chain(&ann) {
                    p = p.add(&b.scale(&random_scalar(rng, bound)))?;
                }
                lifts.push(p);
            }
            if self.check_lift_basis(&lifts, k).is_ok() {
                return Ok(lifts);
            }
        }
    }

    /// `h'_i = h_i - rank(×ℓ : A_{i-1} -> A_i)` using basis-coordinate matrices.
    pub fn quotient_hf(&self, l: &LinearForm) -> Result<Vec<usize>> {
        let lp = l.to_polynomial();
        let mut out = vec![self.hilbert.get(0)];
        for i in 1..=self.socle {
            let rank = self.multiplication_matrix(&lp, i - 1)?.rank();
            out.push(self.hilbert.get(i as usize) - rank);
        }
        Ok(out)
    }
}

pub(crate) fn vector(p: &Polynomial) -> BTreeMap<Monomial, Scalar> {
    vector_of(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VariableContext};
    use crate::sampling::{random_linear_form, rng_from_seed};

    fn form(text: &str) -> Polynomial {
        parse_poly(text, &VariableContext::threefold(), Side::S).unwrap()
    }

    fn op(text: &str) -> Polynomial {
        parse_poly(text, &VariableContext::threefold(), Side::R).unwrap()
    }

    const MIN_I5: &str = "X*U^4 + Y*U^3*V + Z*U^2*V^2";

    #[test]
    fn catalecticant_ranks() {
        let ctx = VariableContext::from_upper(&["U", "V"]).unwrap();
        let cube = parse_poly("U^3", &ctx, Side::S).unwrap();
        assert_eq!(catalecticant_matrix(&cube, 1).unwrap().rank(), 1);
        let f = form(MIN_I5);
        let c1 = catalecticant_matrix(&f, 1).unwrap();
        assert_eq!((c1.rows.len(), c1.cols.len()), (70, 5));
        assert_eq!(c1.rank(), 5);
        assert_eq!(catalecticant_matrix(&f, 2).unwrap().rank(), 6);
        assert!(catalecticant_matrix(&form("X^2 + U"), 1).is_err());
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_function(&form(MIN_I5)).unwrap().as_slice(), &[1, 5, 6, 6, 5, 1]);
        assert_eq!(
            hilbert_function(&form("X*U^4 + Y*U^3*V + Z*V^4")).unwrap().as_slice(),
            &[1, 5, 6, 6, 5, 1]
        );
        assert_eq!(hilbert_function(&form("U^7")).unwrap().as_slice(), &[1; 8]);
        assert_eq!(hilbert_function(&form("0")), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn graded_basis_examples() {
        let f = form("X*U^2 + Y*U*V + Z*V^2");
        assert_eq!(graded_basis(&f, 0).unwrap(), vec![Monomial::one(5)]);
        assert_eq!(graded_basis(&f, 1).unwrap().len(), 5);
        assert_eq!(graded_basis(&f, 3).unwrap().len(), 1);
        assert!(graded_basis(&f, 4).is_err());
    }

    #[test]
    fn annihilator_kernel_kills_f() {
        let f = form(MIN_I5);
        for k in 0..=5 {
            let ann = annihilator_basis(&f, k).unwrap();
            let dim_rk = monomials_of_degree(f.context(), k).len();
            assert_eq!(ann.len(), dim_rk - hilbert_function(&f).unwrap().get(k as usize));
            for p in ann {
                assert!(diff_apply(&p, &f).unwrap().is_zero());
            }
        }
        // (x, y, z)^2 annihilates every Perazzo form
        assert!(annihilator_basis(&f, 2)
            .unwrap()
            .iter()
            .any(|p| p.to_string() == "x^2"));
    }

    #[test]
    fn multiplication_examples() {
        let f = form(MIN_I5);
        let alg = ApolarAlgebra::new(&f).unwrap();
        for i in 0..=5 {
            let id = alg.multiplication_matrix(&op("1"), i).unwrap();
            assert_eq!(id, Matrix::identity(alg.hilbert().get(i as usize)));
        }
        assert_eq!(mult_map_matrix(&f, &op("u"), 2).unwrap().rank(), 6);
        assert!(mult_map_matrix(&f, &op("v"), 2).unwrap().rank() < 6);
        assert_eq!(mult_rank(&f, &op("u"), 2).unwrap(), 6);
        assert!(mult_map_matrix(&f, &op("u^2"), 4).is_err());
    }

    #[test]
    fn multiplication_rank_is_basis_independent() {
        let f = form("X*U^5 + Y*U^4*V + Z*V^5 + 3*U^3*V^3");
        let alg = ApolarAlgebra::new(&f).unwrap();
        let mut rng = rng_from_seed(7);
        for trial in 0..6 {
            let l = random_linear_form(f.context(), &mut rng, 3).to_polynomial();
            let g = if trial % 2 == 0 { l.clone() } else { l.mul(&l).unwrap() };
            let s = g.homogeneous_degree().unwrap();
            for i in 0..=(6 - s) {
                let src = alg.random_lift_basis(i, &mut rng, 4).unwrap();
                let tgt = alg.random_lift_basis(i + s, &mut rng, 4).unwrap();
                let r1 = alg.multiplication_matrix(&g, i).unwrap().rank();
                let r2 = alg.multiplication_matrix_with(&g, i, &src, &tgt).unwrap().rank();
                assert_eq!(r1, r2);
                assert_eq!(r1, mult_rank(&f, &g, i).unwrap());
            }
        }
    }

    #[test]
    fn colon_examples() {
        let ctx = VariableContext::from_upper(&["U", "V"]).unwrap();
        let f = parse_poly("U^6", &ctx, Side::S).unwrap();
        let u = LinearForm::parse("u", &ctx).unwrap();
        assert_eq!(colon_hf(&f, &u).unwrap().as_slice(), &[1; 6]);
        let v = LinearForm::parse("v", &ctx).unwrap();
        assert_eq!(colon_hf(&f, &v), Err(Error::Annihilates));
        assert_eq!(quotient_hf(&f, &u).unwrap(), vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(quotient_hf(&f, &v).unwrap(), vec![1; 7]);
    }

    #[test]
    fn colon_of_minimal_form_is_minimal() {
        let f = form("X*U^5 + Y*U^4*V + Z*V^5");
        let mut rng = rng_from_seed(11);
        let l = random_linear_form(f.context(), &mut rng, 10);
        assert_eq!(colon_hf(&f, &l).unwrap().as_slice(), &[1, 5, 6, 6, 5, 1]);
        let seq = hyperplane_sequence(&f, &l).unwrap();
        assert!(seq.is_exact());
    }

    #[test]
    fn hilbert_vector_parsing() {
        let h: HilbertVector = "1,5,6,8,6,5,1".parse().unwrap();
        assert_eq!(h.total(), 32);
        assert_eq!(h.sperner(), 8);
        assert_eq!(h.to_string(), "1,5,6,8,6,5,1");
        assert!("1,x".parse::<HilbertVector>().is_err());
    }
}
