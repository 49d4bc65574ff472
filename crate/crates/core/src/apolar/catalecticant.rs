use serde::Serialize;

use super::hvector::HVector;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{MonomialBasis, Polynomial, Side};

fn dual_form_degree(form: &Polynomial) -> Result<usize> {
    if form.side() != Side::Dual {
        return Err(Error::WrongSide("dual"));
    }
    form.form_degree()
}

/// Matrix of `R_t → S_{d-t}, f ↦ f ∘ F` in the canonical monomial bases:
/// columns indexed by `R_t`, rows by `S_{d-t}`.
pub fn catalecticant(form: &Polynomial, t: usize) -> Result<Matrix> {
    let d = dual_form_degree(form)?;
    if t > d {
        return Err(Error::DegreeOutOfRange { degree: t, max: d });
    }
    let n = form.vars().len();
    let source = MonomialBasis::new(n, t);
    let target = MonomialBasis::new(n, d - t);
    let mut m = Matrix::zeros(form.field(), target.len(), source.len());
    for (col, alpha) in source.monomials().iter().enumerate() {
        for (mono, c) in form.terms() {
            if let Some(beta) = mono.checked_sub(alpha) {
                let row = target.index_of(&beta).expect("degree d-t monomial");
                m.set(row, col, c.clone());
            }
        }
    }
    Ok(m)
}

/// `(rank catalecticant(F, t))_{t = 0..=d}`.
pub fn hilbert_function(form: &Polynomial) -> Result<HVector> {
    let d = dual_form_degree(form)?;
    (0..=d).map(|t| catalecticant(form, t).map(|m| m.rank())).collect::<Result<Vec<_>>>().map(HVector::new)
}

/// Spanning set of the degree-`t` piece of `Ann_R(F)`.
#[derive(Debug, Clone, Serialize)]
pub struct AnnBasis {
    pub degree: usize,
    #[serde(serialize_with = "serialize_polys")]
    pub generators: Vec<Polynomial>,
}

fn serialize_polys<S: serde::Serializer>(polys: &[Polynomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(polys.iter().map(ToString::to_string))
}

/// Kernel of the degree-`t` catalecticant as ring-side polynomials.
pub fn annihilator_basis(form: &Polynomial, t: usize) -> Result<AnnBasis> {
    let cat = catalecticant(form, t)?;
    let basis = MonomialBasis::new(form.vars().len(), t);
    let generators = cat
        .kernel_basis()
        .iter()
        .map(|v| Polynomial::from_dense(form.vars(), Side::Ring, form.field(), &basis, v))
        .collect();
    Ok(AnnBasis { degree: t, generators })
}
