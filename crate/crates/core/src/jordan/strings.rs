use serde::Serialize;

use super::partition::{JordanDegreeType, StringShape};
use super::types::step_matrices;
use crate::apolar::GradedAlgebraModel;
use crate::error::{Error, Result};
use crate::linalg::{rank_of_vectors, EchelonBasis, FieldElement, Matrix};
use crate::poly::LinearForm;

/// A string `(z, ℓz, ..., ℓ^{p-1}z)` with `ℓ^p z = 0`, in model coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct JordanString {
    pub degree: usize,
    pub beads: Vec<Vec<FieldElement>>,
}

impl JordanString {
    pub fn shape(&self) -> StringShape {
        StringShape { length: self.beads.len(), degree: self.degree }
    }
}

fn apply(m: &Matrix, v: &[FieldElement]) -> Vec<FieldElement> {
    m.mul_vec(v).expect("step matrix matches piece dimension")
}

/// Kernel of `×ℓ^p` on `A_i`; all of `A_i` once `i + p` passes the socle degree.
fn power_kernel(model: &GradedAlgebraModel, steps: &[Matrix], i: usize, p: usize) -> Result<Vec<Vec<FieldElement>>> {
    let mut m = Matrix::identity(model.field(), model.piece_dim(i));
    for k in 0..p {
        m = steps[i + k].mul(&m)?;
        if m.rows() == 0 {
            break;
        }
    }
    Ok(m.kernel_basis())
}

/// Graded Jordan basis built directly from kernel filtrations.
///
/// For each length `p` (longest first) and degree `i` (lowest first), the heads
/// are the vectors of a basis of `ker ℓ^p ∩ A_i` that are independent modulo
/// `(ker ℓ^{p-1} ∩ A_i) + ℓ(ker ℓ^{p+1} ∩ A_{i-1})`. The result is checked to be
/// a basis with `ℓ^p z = 0` before it is returned.
pub fn jordan_strings(model: &GradedAlgebraModel, ell: &LinearForm) -> Result<Vec<JordanString>> {
    let steps = step_matrices(model, ell)?;
    let d = model.socle_degree();
    let field = model.field();
    let mut strings = Vec::new();
    for p in (1..=d + 1).rev() {
        for i in 0..=d {
            if i + p > d + 1 {
                continue;
            }
            let h = model.piece_dim(i);
            let mut span = EchelonBasis::new(field, h);
            for v in power_kernel(model, &steps, i, p - 1)? {
                span.insert(&v);
            }
            if i > 0 {
                for v in power_kernel(model, &steps, i - 1, p + 1)? {
                    span.insert(&apply(&steps[i - 1], &v));
                }
            }
            for z in power_kernel(model, &steps, i, p)? {
                if !span.insert(&z) {
                    continue;
                }
                let mut beads = vec![z];
                for t in i..i + p - 1 {
                    let next = apply(&steps[t], beads.last().unwrap());
                    beads.push(next);
                }
                strings.push(JordanString { degree: i, beads });
            }
        }
    }
    check_strings(model, &steps, &strings)?;
    Ok(strings)
}

fn check_strings(model: &GradedAlgebraModel, steps: &[Matrix], strings: &[JordanString]) -> Result<()> {
    for s in strings {
        let top = s.degree + s.beads.len() - 1;
        let last = s.beads.last().unwrap();
        if last.iter().all(FieldElement::is_zero) || !apply(&steps[top], last).iter().all(FieldElement::is_zero) {
            return Err(Error::Internal(format!("string {:?} is not killed exactly", s.shape())));
        }
    }
    for t in 0..=model.socle_degree() {
        let beads: Vec<Vec<FieldElement>> = strings
            .iter()
            .filter(|s| s.degree <= t && t < s.degree + s.beads.len())
            .map(|s| s.beads[t - s.degree].clone())
            .collect();
        let h = model.piece_dim(t);
        if beads.len() != h || rank_of_vectors(model.field(), h, &beads) != h {
            return Err(Error::Internal(format!("beads do not form a basis in degree {t}")));
        }
    }
    Ok(())
}

/// The multiset of string shapes.
pub fn strings_degree_type(strings: &[JordanString]) -> JordanDegreeType {
    strings.iter().map(JordanString::shape).collect::<Vec<_>>().into()
}
