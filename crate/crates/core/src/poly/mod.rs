//! Sparse multivariate polynomials over the rationals and the apolarity action.
//!
//! Every polynomial lives in a [`VariableContext`], which pairs the variables of
//! the form ring `S = K[X_0..X_N]` with the dual operator ring
//! `R = K[x_0..x_N]`, where `x_i` acts on `S` as `d/dX_i`. The field `K` is
//! realized as exact rationals: the quantities computed downstream (ranks of
//! rational matrices, determinants at rational points) do not change under
//! field extension, so the algebraic closure is never needed.

mod linear;
mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use linear::LinearForm;
pub use monomial::{exponent_vectors, Monomial};
pub use parse::parse_poly;

use crate::error::{Error, Result};
use crate::Scalar;

/// Which ring a polynomial belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// The form ring `S` (upper-case variables).
    S,
    /// The ring of differential operators `R` (lower-case variables).
    R,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::S => f.write_str("form (S)"),
            Side::R => f.write_str("operator (R)"),
        }
    }
}

/// Dual pair of ordered variable name lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    upper: Vec<String>,
    lower: Vec<String>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(upper: Vec<S>, lower: Vec<S>) -> Result<Arc<Self>> {
        let upper: Vec<String> = upper.into_iter().map(Into::into).collect();
        let lower: Vec<String> = lower.into_iter().map(Into::into).collect();
        if upper.len() != lower.len() {
            return Err(Error::InvalidContext(format!(
                "{} form variables but {} operator variables",
                upper.len(),
                lower.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for name in upper.iter().chain(&lower) {
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidContext(format!(
                    "`{name}` is not an identifier"
                )));
            }
            if !seen.insert(name.clone()) {
                return Err(Error::InvalidContext(format!("duplicate name `{name}`")));
            }
        }
        Ok(Arc::new(VariableContext { upper, lower }))
    }

    /// Form variables as given, operator variables by lower-casing them.
    pub fn from_upper(names: &[&str]) -> Result<Arc<Self>> {
        let lower: Vec<String> = names.iter().map(|n| n.to_lowercase()).collect();
        Self::new(names.iter().map(|s| s.to_string()).collect(), lower)
    }

    /// `(X,Y,Z,U,V)` / `(x,y,z,u,v)`.
    pub fn threefold() -> Arc<Self> {
        Self::from_upper(&["X", "Y", "Z", "U", "V"]).expect("static context is valid")
    }

    pub fn nvars(&self) -> usize {
        self.upper.len()
    }

    pub fn names(&self, side: Side) -> &[String] {
        match side {
            Side::S => &self.upper,
            Side::R => &self.lower,
        }
    }

    pub fn lookup(&self, name: &str) -> Option<(Side, usize)> {
        if let Some(i) = self.upper.iter().position(|n| n == name) {
            return Some((Side::S, i));
        }
        self.lower
            .iter()
            .position(|n| n == name)
            .map(|i| (Side::R, i))
    }
}

pub(crate) fn same_context(a: &Arc<VariableContext>, b: &Arc<VariableContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Canonical basis of degree-`k` monomials, graded-lex descending.
pub fn monomials_of_degree(ctx: &VariableContext, k: u32) -> Vec<Monomial> {
    monomial::exponent_vectors(ctx.nvars(), k)
}

/// Sparse polynomial; no zero coefficients are ever stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Arc<VariableContext>,
    side: Side,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(ctx: &Arc<VariableContext>, side: Side) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            side,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<VariableContext>, side: Side, c: Scalar) -> Self {
        Self::monomial(ctx, side, Monomial::one(ctx.nvars()), c)
    }

    pub fn one(ctx: &Arc<VariableContext>, side: Side) -> Self {
        Self::constant(ctx, side, Scalar::one())
    }

    pub fn monomial(ctx: &Arc<VariableContext>, side: Side, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.nvars(), ctx.nvars(), "monomial length must match context");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ctx: ctx.clone(),
            side,
            terms,
        }
    }

    pub fn variable(ctx: &Arc<VariableContext>, side: Side, index: usize) -> Self {
        Self::monomial(
            ctx,
            side,
            Monomial::variable(ctx.nvars(), index),
            Scalar::one(),
        )
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, collecting like terms.
    pub fn from_terms<I>(ctx: &Arc<VariableContext>, side: Side, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(ctx, side);
        for (m, c) in terms {
            assert_eq!(m.nvars(), ctx.nvars(), "monomial length must match context");
            p.add_term(m, c);
        }
        p
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.degree().unwrap_or(0))
    }

    /// The same coefficients read in the other ring.
    pub fn dual(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            side: match self.side {
                Side::S => Side::R,
                Side::R => Side::S,
            },
            terms: self.terms.clone(),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        if self.side != other.side {
            return Err(Error::SideMismatch {
                expected: self.side,
                found: other.side,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ctx, self.side);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            side: self.side,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Self::zero(&self.ctx, self.side);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(&self.ctx, self.side);
        for _ in 0..e {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    /// Substitutes `point[i]` for the i-th variable.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ctx.nvars() {
            return Err(Error::PointLength {
                expected: self.ctx.nvars(),
                got: point.len(),
            });
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Partial derivative with respect to variable `index` (either side).
    pub fn partial(&self, index: usize) -> Polynomial {
        let mut out = Self::zero(&self.ctx, self.side);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[index] -= 1;
            out.add_term(Monomial::new(exps), c * Scalar::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Homogeneous part of degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            side: self.side,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients on the given ordered monomial list.
    pub fn coefficient_vector(&self, basis: &[Monomial]) -> Vec<Scalar> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    pub(crate) fn terms_map(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }
}

/// Falling factorial `b (b-1) ... (b-a+1)`.
fn falling_factorial(b: u32, a: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..a {
        acc *= b - t;
    }
    acc
}

/// `x^a ∘ X^b = b!/(b-a)! X^(b-a)` when `a <= b` componentwise, else 0.
pub fn diff_monomial(op: &Monomial, form: &Monomial) -> Option<(Monomial, BigInt)> {
    let rest = op.quotient_of(form)?;
    let coeff = op
        .exponents()
        .iter()
        .zip(form.exponents())
        .fold(BigInt::one(), |acc, (&a, &b)| acc * falling_factorial(b, a));
    Some((rest, coeff))
}

/// The apolarity action `p ∘ F`: operators in `R` differentiate forms in `S`.
pub fn diff_apply(p: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if !same_context(&p.ctx, &f.ctx) {
        return Err(Error::ContextMismatch);
    }
    if p.side != Side::R {
        return Err(Error::SideMismatch {
            expected: Side::R,
            found: p.side,
        });
    }
    if f.side != Side::S {
        return Err(Error::SideMismatch {
            expected: Side::S,
            found: f.side,
        });
    }
    let mut out = Polynomial::zero(&f.ctx, Side::S);
    for (a, c) in &p.terms {
        for (b, e) in &f.terms {
            if let Some((m, k)) = diff_monomial(a, b) {
                out.add_term(m, c * e * Scalar::from_integer(k));
            }
        }
    }
    Ok(out)
}

/// Writes a monomial as `X*U^2`, using the names of `side`.
pub fn format_monomial(ctx: &VariableContext, side: Side, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let names = ctx.names(side);
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                names[i].clone()
            } else {
                format!("{}^{}", names[i], e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Polynomial {
    /// Terms in descending graded-lex order, in the grammar accepted by
    /// [`parse_poly`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&format_monomial(&self.ctx, self.side, m))?;
            }
        }
        Ok(())
    }
}
