use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use super::{parse_poly, Monomial, Polynomial, Side, VariableContext};
use crate::error::{Error, Result};
use crate::Scalar;

/// A nonzero linear operator `a_0 x_0 + ... + a_N x_N` in `R_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    ctx: Arc<VariableContext>,
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(ctx: &Arc<VariableContext>, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != ctx.nvars() {
            return Err(Error::PointLength {
                expected: ctx.nvars(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("linear form must be nonzero".into()));
        }
        Ok(LinearForm {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    pub fn from_i64(ctx: &Arc<VariableContext>, coeffs: &[i64]) -> Result<Self> {
        Self::new(ctx, coeffs.iter().map(|&c| crate::int(c)).collect())
    }

    /// Parses text such as `"x+2u"`; the result must be a nonzero linear form on the operator side.
    pub fn parse(text: &str, ctx: &Arc<VariableContext>) -> Result<Self> {
        let p = parse_poly(text, ctx, Side::R)?;
        Self::from_polynomial(&p)
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        if p.side() != Side::R {
            return Err(Error::SideMismatch {
                expected: Side::R,
                found: p.side(),
            });
        }
        if p.is_zero() {
            return Err(Error::InvalidArgument("linear form must be nonzero".into()));
        }
        if p.homogeneous_degree()? != 1 {
            return Err(Error::InvalidArgument(format!("`{p}` is not linear")));
        }
        let ctx = p.context();
        let coeffs = (0..ctx.nvars())
            .map(|i| p.coefficient(&Monomial::variable(ctx.nvars(), i)))
            .collect();
        Self::new(ctx, coeffs)
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coefficient_of(&self, name: &str) -> Option<&Scalar> {
        match self.ctx.lookup(name) {
            Some((Side::R, i)) => Some(&self.coeffs[i]),
            _ => None,
        }
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.ctx.nvars();
        Polynomial::from_terms(
            &self.ctx,
            Side::R,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::variable(n, i), c.clone())),
        )
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}
