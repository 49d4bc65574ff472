use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::apolar::{binomial, compressed_hf, HVector};
use crate::error::{Error, Result};
use crate::linalg::{FieldElement, FieldSpec, Matrix};
use crate::poly::{exponent_tuples, Monomial, Polynomial, Side, VariableSet};

/// `m` y-variables and degree `d` of a full Perazzo form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct PerazzoParams {
    m: usize,
    d: usize,
}

#[derive(Deserialize)]
struct RawParams {
    m: usize,
    d: usize,
}

impl TryFrom<RawParams> for PerazzoParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        PerazzoParams::new(raw.m, raw.d)
    }
}

impl PerazzoParams {
    pub fn new(m: usize, d: usize) -> Result<Self> {
        if m < 2 || d < 3 {
            return Err(Error::InvalidParams(format!("full Perazzo forms need m >= 2 and d >= 3, got m={m}, d={d}")));
        }
        Ok(PerazzoParams { m, d })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of x-variables, `C(d+m-2, m-1)`.
    pub fn n_plus_1(&self) -> usize {
        binomial(self.d + self.m - 2, self.m - 1)
    }

    pub fn vars(&self) -> Arc<VariableSet> {
        VariableSet::perazzo(self.m, self.d).expect("validated parameters")
    }
}

impl fmt::Display for PerazzoParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={},d={}", self.m, self.d)
    }
}

/// Parses `m=2,d=3`.
impl FromStr for PerazzoParams {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (mut m, mut d) = (None, None);
        for item in s.split(',') {
            let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value in {s:?}")))?;
            let v: usize = v.trim().parse().map_err(|_| Error::Parse(format!("bad value {v:?} in {s:?}")))?;
            match k.trim() {
                "m" => m = Some(v),
                "d" => d = Some(v),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        match (m, d) {
            (Some(m), Some(d)) => PerazzoParams::new(m, d),
            _ => Err(Error::Parse(format!("need both m and d in {s:?}"))),
        }
    }
}

/// `F = Σ_{|α| = d-1} X_α Y^α` over `field`.
pub fn full_perazzo_form(params: &PerazzoParams, field: FieldSpec) -> Polynomial {
    let vars = params.vars();
    let n = vars.len();
    let x = vars.x_block();
    let y = vars.y_block();
    let terms = vars.x_tuples().unwrap().iter().enumerate().map(|(i, alpha)| {
        let mut e = vec![0u32; n];
        e[x.start + i] = 1;
        for (j, &a) in alpha.iter().enumerate() {
            e[y.start + j] = a;
        }
        (Monomial::new(e), field.one())
    });
    Polynomial::from_terms(&vars, Side::Dual, field, terms).expect("coefficients in field")
}

/// `h_i = C(i+m-1, m-1) + C(d-i+m-1, m-1)` for `1 ≤ i ≤ d-1`, `h_0 = h_d = 1`.
pub fn perazzo_hf(params: &PerazzoParams) -> HVector {
    let (m, d) = (params.m, params.d);
    let mid = |i: usize| binomial(i + m - 1, m - 1) + binomial(d - i + m - 1, m - 1);
    HVector::new(
        (0..=d)
            .map(|i| match i {
                0 => 1,
                i if i == d => 1,
                i if i <= d / 2 => mid(i),
                i => mid(d - i),
            })
            .collect(),
    )
}

/// `2 C(d+m-1, m)`.
pub fn perazzo_dim(params: &PerazzoParams) -> usize {
    2 * binomial(params.d + params.m - 1, params.m)
}

/// `(a_min, a_max)`: the extreme numbers of length-two strings for forms in the x-variables.
pub fn a_bounds(params: &PerazzoParams) -> (usize, usize) {
    (params.d, compressed_hf(params.m, params.d - 1).total())
}

/// Number of parts of the generic Jordan type, `2(n+1)`.
pub fn generic_part_count(params: &PerazzoParams) -> usize {
    2 * params.n_plus_1()
}

/// Hilbert function of `ℓ∘F` for `m = 2`, from the rank `s` of the Hankel
/// matrix of the x-coefficients `a[i] = a_{d-1-i,i}`.
pub fn hankel_hf(a: &[FieldElement], d: usize) -> Result<HVector> {
    if d < 3 || a.len() != d {
        return Err(Error::InvalidParams(format!("expected {d} coefficients for degree {d}, got {}", a.len())));
    }
    if a.iter().all(FieldElement::is_zero) {
        return Err(Error::ZeroLinearForm);
    }
    let field = a[0].field();
    let r = if d % 2 == 1 { (d - 1) / 2 } else { (d - 2) / 2 };
    let rows: Vec<Vec<FieldElement>> = (0..d - r).map(|v| (0..=r).map(|j| a[v + j].clone()).collect()).collect();
    let s = Matrix::from_rows(field, r + 1, rows)?.rank();
    let e = d - 1;
    Ok(HVector::new((0..=e).map(|i| (i + 1).min(s).min(e + 1 - i)).collect()))
}

/// `Σ_{|α| = t} α! Y^α` in fresh variables `y1..ym`.
pub fn symmetric_dual_generator(m: usize, t: usize, field: FieldSpec) -> Result<Polynomial> {
    if m < 1 {
        return Err(Error::InvalidParams("need at least one variable".into()));
    }
    field.check_characteristic(t)?;
    let names: Vec<String> = (1..=m).map(|j| format!("y{j}")).collect();
    let vars = VariableSet::generic(&names)?;
    let fact = |k: u32| (1..=k as u64).fold(field.one(), |acc, i| &acc * &field.from_u64(i));
    let terms = exponent_tuples(m, t as u32).into_iter().map(|alpha| {
        let c = alpha.iter().fold(field.one(), |acc, &k| &acc * &fact(k));
        (Monomial::new(alpha), c)
    });
    Polynomial::from_terms(&vars, Side::Dual, field, terms)
}
