use std::fmt;

use serde::{Deserialize, Serialize};

use super::params::{a_bounds, full_perazzo_form, perazzo_dim, PerazzoParams};
use crate::apolar::{binomial, hilbert_function};
use crate::error::{Error, Result};
use crate::jordan::{JordanDegreeType, Partition};
use crate::linalg::FieldElement;
use crate::poly::LinearForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "CASE_I")]
    CaseI,
    #[serde(rename = "CASE_II")]
    CaseII,
    #[serde(rename = "CASE_III")]
    CaseIII,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::CaseI => "CASE_I",
            CaseTag::CaseII => "CASE_II",
            CaseTag::CaseIII => "CASE_III",
        })
    }
}

/// Which branch of the classification a linear form falls in.
///
/// `witness` is the (1-based) `k` with `a_{(d-1)e_k} ≠ 0` and `b_k ≠ 0` for
/// `CASE_II`. `literal_match` is false for forms the classification only
/// reaches as a residual class, and for `CASE_II` forms whose `ℓ^d∘F`
/// vanishes (no string of length `d+1` can exist then).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCase {
    pub tag: CaseTag,
    pub witness: Option<usize>,
    pub literal_match: bool,
    pub top_power_nonzero: bool,
}

fn multinomial(alpha: &[u32]) -> usize {
    let mut total = 0usize;
    let mut out = 1usize;
    for &a in alpha {
        total += a as usize;
        out *= binomial(total, a as usize);
    }
    out
}

fn check_form(ell: &LinearForm, params: &PerazzoParams) -> Result<()> {
    if *ell.vars().as_ref() != *params.vars() {
        return Err(Error::VariableSetMismatch);
    }
    if ell.is_zero() {
        return Err(Error::ZeroLinearForm);
    }
    Ok(())
}

/// `ℓ^d ∘ F` for the canonical form: `d · Σ_α a_α · (d-1 choose α) · b^α`.
pub fn top_power_coefficient(ell: &LinearForm, params: &PerazzoParams) -> Result<FieldElement> {
    check_form(ell, params)?;
    let field = ell.field();
    let b = ell.b();
    let mut sum = field.zero();
    for (alpha, a) in ell.vars().x_tuples().unwrap().iter().zip(ell.a()) {
        if a.is_zero() {
            continue;
        }
        let mut term = a * &field.from_u64(multinomial(alpha) as u64);
        for (bj, &e) in b.iter().zip(alpha) {
            term = &term * &bj.pow(e);
        }
        sum = &sum + &term;
    }
    Ok(&sum * &field.from_u64(params.d() as u64))
}

/// Tags by precedence: `CASE_III` if every `b_j` is zero, `CASE_II` if some
/// `k` has `a_{(d-1)e_k} ≠ 0` and `b_k ≠ 0`, otherwise `CASE_I`.
pub fn classify_linear_form(ell: &LinearForm, params: &PerazzoParams) -> Result<TheoremCase> {
    let top_power_nonzero = !top_power_coefficient(ell, params)?.is_zero();
    let vars = ell.vars();
    let (a, b) = (ell.a(), ell.b());
    let m = params.m();
    let pure_power = |k: usize| {
        let mut t = vec![0u32; m];
        t[k] = (params.d() - 1) as u32;
        &a[vars.x_index_of(&t).unwrap()]
    };
    let nonzero_b = b.iter().filter(|c| !c.is_zero()).count();
    let case = if nonzero_b == 0 {
        TheoremCase { tag: CaseTag::CaseIII, witness: None, literal_match: true, top_power_nonzero }
    } else if let Some(k) = (0..m).find(|&k| !b[k].is_zero() && !pure_power(k).is_zero()) {
        TheoremCase { tag: CaseTag::CaseII, witness: Some(k + 1), literal_match: top_power_nonzero, top_power_nonzero }
    } else {
        let pure_y = a.iter().all(FieldElement::is_zero);
        TheoremCase { tag: CaseTag::CaseI, witness: None, literal_match: pure_y || nonzero_b == 1, top_power_nonzero }
    };
    Ok(case)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedJordan {
    pub case: CaseTag,
    pub partition: Partition,
    pub jdt: Option<JordanDegreeType>,
    pub a: Option<usize>,
}

/// `c_L = C(m+d-L-2, m-2)`: strings of length `L < d` contributed by each of
/// the two families of the pre-Jordan basis.
fn string_family(params: &PerazzoParams, length: usize) -> usize {
    binomial(params.m() + params.d() - length - 2, params.m() - 2)
}

/// `(d_0, d_1, ..., L_1^{c_L}, L_{d-L}^{c_L}, ...)`.
pub fn case_i_degree_type(params: &PerazzoParams) -> JordanDegreeType {
    let d = params.d();
    let mut counts = vec![(d, 0, 1), (d, 1, 1)];
    for len in 1..d {
        let c = string_family(params, len);
        counts.push((len, 1, c));
        counts.push((len, d - len, c));
    }
    JordanDegreeType::from_counts(&counts)
}

/// `((d+1)_0, (d-1)_1^{2m-1}, ..., L_1^{c_L}, L_{d-L}^{c_L}, ...)`.
pub fn case_ii_degree_type(params: &PerazzoParams) -> JordanDegreeType {
    let d = params.d();
    let mut counts = vec![(d + 1, 0, 1), (d - 1, 1, 2 * params.m() - 1)];
    for len in 1..d - 1 {
        let c = string_family(params, len);
        counts.push((len, 1, c));
        counts.push((len, d - len, c));
    }
    JordanDegreeType::from_counts(&counts)
}

/// `(2^a, 1^b)` with `2a + b = dim A_F`.
pub fn case_iii_partition(params: &PerazzoParams, a: usize) -> Partition {
    Partition::from_blocks(&[(2, a), (1, perazzo_dim(params) - 2 * a)])
}

pub fn predicted_jordan(case: &TheoremCase, params: &PerazzoParams, ell: &LinearForm) -> Result<PredictedJordan> {
    check_form(ell, params)?;
    Ok(match case.tag {
        CaseTag::CaseI | CaseTag::CaseII => {
            let jdt = if case.tag == CaseTag::CaseI { case_i_degree_type(params) } else { case_ii_degree_type(params) };
            PredictedJordan { case: case.tag, partition: jdt.partition(), jdt: Some(jdt), a: None }
        }
        CaseTag::CaseIII => {
            let f = full_perazzo_form(params, ell.field());
            let g = ell.to_polynomial().contract(&f)?;
            let a = hilbert_function(&g)?.total();
            PredictedJordan { case: CaseTag::CaseIII, partition: case_iii_partition(params, a), jdt: None, a: Some(a) }
        }
    })
}

/// The possible Jordan types in increasing dominance order:
/// `(2^a, 1^b)` for `a_min ≤ a ≤ a_max`, then the `CASE_I` and `CASE_II` types.
pub fn dominance_chain(params: &PerazzoParams) -> Vec<Partition> {
    let (lo, hi) = a_bounds(params);
    let mut chain: Vec<Partition> = (lo..=hi).map(|a| case_iii_partition(params, a)).collect();
    chain.push(case_i_degree_type(params).partition());
    chain.push(case_ii_degree_type(params).partition());
    chain
}
