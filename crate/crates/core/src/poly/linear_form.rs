use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use super::polynomial::{same_vars, Polynomial};
use super::vars::{Side, VariableSet};
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, FieldSpec};

/// A degree-one element `Σ a_α x_α + Σ b_j y_j` of `R`, stored as one
/// coefficient per variable of its [`VariableSet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    vars: Arc<VariableSet>,
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl LinearForm {
    pub fn new(vars: &Arc<VariableSet>, field: FieldSpec, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.len() != vars.len() {
            return Err(Error::VariableSetMismatch);
        }
        if let Some(c) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, c.field()));
        }
        Ok(LinearForm { vars: vars.clone(), field, coeffs })
    }

    /// Builds `Σ a_α x_α + Σ b_j y_j` from the two coefficient blocks.
    pub fn from_blocks(
        vars: &Arc<VariableSet>,
        field: FieldSpec,
        a: Vec<FieldElement>,
        b: Vec<FieldElement>,
    ) -> Result<Self> {
        if a.len() != vars.x_block().len() || b.len() != vars.y_block().len() {
            return Err(Error::VariableSetMismatch);
        }
        LinearForm::new(vars, field, a.into_iter().chain(b).collect())
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        if p.side() != Side::Ring {
            return Err(Error::WrongSide("ring"));
        }
        let mut coeffs = vec![p.field().zero(); p.vars().len()];
        for (m, c) in p.terms() {
            if m.degree() != 1 {
                return Err(Error::InvalidParams("a linear form must be homogeneous of degree one".into()));
            }
            let i = m.exponents().iter().position(|&e| e == 1).unwrap();
            coeffs[i] = c.clone();
        }
        LinearForm::new(p.vars(), p.field(), coeffs)
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// x-block coefficients `a`.
    pub fn a(&self) -> &[FieldElement] {
        &self.coeffs[self.vars.x_block()]
    }

    /// y-block coefficients `b`.
    pub fn b(&self) -> &[FieldElement] {
        &self.coeffs[self.vars.y_block()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    pub fn compatible_with(&self, vars: &Arc<VariableSet>) -> bool {
        same_vars(&self.vars, vars)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.vars.len();
        Polynomial::from_terms(
            &self.vars,
            Side::Ring,
            self.field,
            self.coeffs.iter().enumerate().map(|(i, c)| (Monomial::variable(n, i), c.clone())),
        )
        .expect("coefficients share the field")
    }

    /// Key-value rendering accepted back by the parser, e.g. `a[2,0]=1,b1=3`.
    pub fn to_assignments(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let key = match self.vars.x_tuples() {
                Some(t) if i < t.len() => {
                    let e: Vec<String> = t[i].iter().map(u32::to_string).collect();
                    format!("a[{}]", e.join(","))
                }
                Some(t) => format!("b{}", i - t.len() + 1),
                None => self.vars.name(i, Side::Ring),
            };
            parts.push(format!("{key}={c}"));
        }
        parts.join(",")
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}
