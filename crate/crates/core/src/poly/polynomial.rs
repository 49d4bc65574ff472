use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MonomialBasis};
use super::vars::{Side, VariableSet};
use crate::error::{Error, Result};
use crate::linalg::{coefficient_prefix, FieldElement, FieldSpec};

/// Sparse polynomial in `R` (ring side) or in the divided-power module `S`
/// (dual side). Terms are kept in canonical order with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Arc<VariableSet>,
    side: Side,
    field: FieldSpec,
    terms: BTreeMap<Monomial, FieldElement>,
}

pub(crate) fn same_vars(a: &Arc<VariableSet>, b: &Arc<VariableSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(vars: &Arc<VariableSet>, side: Side, field: FieldSpec) -> Self {
        Polynomial { vars: vars.clone(), side, field, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(vars: &Arc<VariableSet>, side: Side, field: FieldSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut p = Polynomial::zero(vars, side, field);
        for (m, c) in terms {
            if m.exponents().len() != vars.len() {
                return Err(Error::VariableSetMismatch);
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn constant(vars: &Arc<VariableSet>, side: Side, c: FieldElement) -> Self {
        let mut p = Polynomial::zero(vars, side, c.field());
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn variable(vars: &Arc<VariableSet>, side: Side, field: FieldSpec, index: usize) -> Self {
        let mut p = Polynomial::zero(vars, side, field);
        p.add_term(Monomial::variable(vars.len(), index), field.one());
        p
    }

    /// Dense coordinates in `basis` turned back into a polynomial.
    pub fn from_dense(
        vars: &Arc<VariableSet>,
        side: Side,
        field: FieldSpec,
        basis: &MonomialBasis,
        coords: &[FieldElement],
    ) -> Self {
        let mut p = Polynomial::zero(vars, side, field);
        for (m, c) in basis.monomials().iter().zip(coords) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `Ok(None)` for the zero polynomial, the common degree otherwise.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let Some(first) = degrees.next() else {
            return Ok(None);
        };
        if degrees.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn form_degree(&self) -> Result<usize> {
        self.homogeneous_degree()?.ok_or(Error::ZeroPolynomial)
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if !same_vars(&self.vars, &other.vars) || self.side != other.side {
            return Err(Error::VariableSetMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
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
        self.scale(&-&self.field.one())
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars, self.side, self.field);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Product in `R`. Divided-power multiplication is not supported.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        if self.side != Side::Ring {
            return Err(Error::WrongSide("ring"));
        }
        let mut out = Polynomial::zero(&self.vars, self.side, self.field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(&self.vars, self.side, self.field.one());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Contraction `f ∘ F` of a dual-side `F` by a ring-side `self`: each
    /// monomial pair contributes the exponent difference with coefficient 1
    /// when it divides, and nothing otherwise.
    pub fn contract(&self, dual: &Polynomial) -> Result<Polynomial> {
        if self.side != Side::Ring || dual.side != Side::Dual {
            return Err(Error::WrongSide("ring acting on dual"));
        }
        if !same_vars(&self.vars, &dual.vars) {
            return Err(Error::VariableSetMismatch);
        }
        if self.field != dual.field {
            return Err(Error::FieldMismatch(self.field, dual.field));
        }
        let mut out = Polynomial::zero(&dual.vars, Side::Dual, dual.field);
        for (mf, cf) in &self.terms {
            for (mg, cg) in &dual.terms {
                if let Some(m) = mg.checked_sub(mf) {
                    out.add_term(m, cf * cg);
                }
            }
        }
        Ok(out)
    }

    /// Dense coordinates of the degree-`basis.degree()` part.
    pub fn to_dense(&self, basis: &MonomialBasis) -> Vec<FieldElement> {
        let mut v = vec![self.field.zero(); basis.len()];
        for (m, c) in &self.terms {
            if let Some(i) = basis.index_of(m) {
                v[i] = c.clone();
            }
        }
        v
    }

    /// Same coefficients over another variable set, mapping variable `i` to
    /// `index_map[i]`. Fails if a term uses an unmapped variable.
    pub fn reindex(&self, target: &Arc<VariableSet>, index_map: &[Option<usize>]) -> Result<Polynomial> {
        let mut out = Polynomial::zero(target, self.side, self.field);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = index_map[i].ok_or(Error::VariableSetMismatch)?;
                e[j] += x;
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (prefix, unit) = coefficient_prefix(c, i == 0);
            let body = m.render(&self.vars, self.side);
            if body == "1" {
                // constant term: print the bare coefficient
                let mut p = prefix.trim_end_matches('*').to_string();
                if unit {
                    p.push('1');
                }
                write!(f, "{p}")?;
            } else {
                write!(f, "{prefix}{body}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn gf() -> FieldSpec {
        FieldSpec::Prime(32003)
    }

    #[test]
    fn addition_cancels() {
        let v = VariableSet::perazzo(2, 3).unwrap();
        let a = parse_polynomial("X[2,0]^2", &v, Side::Dual, gf()).unwrap();
        assert!(a.add(&a.neg()).unwrap().is_zero());
        let b = parse_polynomial("Y1^2", &v, Side::Dual, gf()).unwrap();
        let c = parse_polynomial("Y1*Y2", &v, Side::Dual, gf()).unwrap();
        assert_eq!(b.add(&c).unwrap().to_string(), "Y1^2 + Y1*Y2");
    }

    #[test]
    fn binomial_square() {
        let v = VariableSet::generic(&["x", "y"]).unwrap();
        let l = parse_polynomial("x + y", &v, Side::Ring, gf()).unwrap();
        assert_eq!(l.pow(2).unwrap().to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(l.pow(1).unwrap(), l);
    }

    #[test]
    fn contraction_has_no_multinomial_factor() {
        let v = VariableSet::generic(&["y1"]).unwrap();
        let y = parse_polynomial("y1", &v, Side::Ring, gf()).unwrap();
        let f = parse_polynomial("Y1^3", &v, Side::Dual, gf()).unwrap();
        assert_eq!(y.contract(&f).unwrap().to_string(), "Y1^2");
    }

    #[test]
    fn contraction_on_toy_form() {
        let v = VariableSet::perazzo(2, 3).unwrap();
        let f = parse_polynomial("X[2,0]*Y1^2 + X[1,1]*Y1*Y2 + X[0,2]*Y2^2", &v, Side::Dual, gf()).unwrap();
        let x20 = parse_polynomial("x[2,0]", &v, Side::Ring, gf()).unwrap();
        assert_eq!(x20.contract(&f).unwrap().to_string(), "Y1^2");
        let one = Polynomial::constant(&v, Side::Ring, gf().one());
        assert_eq!(one.contract(&f).unwrap(), f);
        let l = parse_polynomial("3*y1 + 5*y2", &v, Side::Ring, gf()).unwrap();
        let expected = parse_polynomial("9*X[2,0] + 30*X[1,1] + 25*X[0,2]", &v, Side::Dual, gf()).unwrap();
        assert_eq!(l.pow(2).unwrap().contract(&f).unwrap(), expected);
    }

    #[test]
    fn degree_queries() {
        let v = VariableSet::generic(&["x", "y"]).unwrap();
        let p = parse_polynomial("x^2 + y", &v, Side::Ring, gf()).unwrap();
        assert_eq!(p.homogeneous_degree(), Err(Error::Inhomogeneous));
        assert_eq!(Polynomial::zero(&v, Side::Ring, gf()).homogeneous_degree(), Ok(None));
    }

    #[test]
    fn mismatches() {
        let v = VariableSet::generic(&["x", "y"]).unwrap();
        let w = VariableSet::generic(&["u", "v"]).unwrap();
        let a = Polynomial::variable(&v, Side::Ring, gf(), 0);
        let b = Polynomial::variable(&w, Side::Ring, gf(), 0);
        assert_eq!(a.add(&b), Err(Error::VariableSetMismatch));
        let d = Polynomial::variable(&v, Side::Dual, gf(), 0);
        assert!(d.mul(&d).is_err());
        assert!(d.contract(&d).is_err());
    }

    #[test]
    fn rational_rendering() {
        let v = VariableSet::generic(&["x"]).unwrap();
        let p = parse_polynomial("-1/2*x^2 + 3", &v, Side::Ring, FieldSpec::Rationals).unwrap();
        assert_eq!(p.to_string(), "-1/2*x^2 + 3");
        let q = parse_polynomial("-x - 1", &v, Side::Ring, FieldSpec::Rationals).unwrap();
        assert_eq!(q.to_string(), "-x - 1");
    }
}
