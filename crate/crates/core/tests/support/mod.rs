//! Random inputs and independent oracles shared by the integration tests.
#![allow(dead_code)]

pub mod props;

use std::sync::Arc;

use artinian::apolar::GradedAlgebraModel;
use artinian::jordan::Partition;
use artinian::linalg::{FieldElement, FieldSpec};
use artinian::perazzo::{full_perazzo_form, PerazzoParams};
use artinian::poly::{LinearForm, Monomial, MonomialBasis, Polynomial, Side, VariableSet};
use proptest::prelude::*;

pub const P: FieldSpec = FieldSpec::Prime(32003);

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    // Pascal's triangle, kept separate from the library's `binomial`.
    let mut row = vec![1usize; 1];
    for i in 1..=n {
        let mut next = vec![1usize; i + 1];
        for j in 1..i {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[k]
}

pub fn elems(field: FieldSpec, v: &[i64]) -> Vec<FieldElement> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn generic_vars(n: usize) -> Arc<VariableSet> {
    let names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    VariableSet::generic(&names).unwrap()
}

pub fn form(vars: &Arc<VariableSet>, side: Side, field: FieldSpec, degree: usize, coeffs: &[i64]) -> Polynomial {
    let basis = MonomialBasis::new(vars.len(), degree);
    let c: Vec<FieldElement> = (0..basis.len()).map(|i| field.from_i64(coeffs[i % coeffs.len()])).collect();
    Polynomial::from_dense(vars, side, field, &basis, &c)
}

/// Brute-force Jordan type: number of parts `≥ k` is `rk ℓ^{k-1} − rk ℓ^k` on
/// the whole algebra, with `ℓ^k` assembled from single multiplication maps.
pub fn brute_force_jordan(model: &GradedAlgebraModel, ell: &LinearForm) -> Partition {
    let d = model.socle_degree();
    let total = |k: usize| -> usize {
        (0..=d).map(|i| if i + k > d { 0 } else { model.mult_matrix(ell, i, k).unwrap().rank() }).sum()
    };
    let ranks: Vec<usize> = (0..=d + 2).map(total).collect();
    let mut parts = Vec::new();
    for k in (1..=d + 1).rev() {
        let at_least_k = ranks[k - 1] - ranks[k];
        let at_least_k1 = ranks[k] - ranks[k + 1];
        for _ in 0..(at_least_k - at_least_k1) {
            parts.push(k);
        }
    }
    Partition::new(parts).unwrap()
}

/// `(2^a, 1^b)` with `2a + b = dim`.
pub fn two_one(a: usize, dim: usize) -> Partition {
    let mut parts = vec![2; a];
    parts.extend(std::iter::repeat_n(1, dim - 2 * a));
    Partition::new(parts).unwrap()
}

pub fn perazzo_model(params: &PerazzoParams, field: FieldSpec) -> GradedAlgebraModel {
    GradedAlgebraModel::from_dual(&full_perazzo_form(params, field)).unwrap()
}

pub fn small_params() -> impl Strategy<Value = PerazzoParams> {
    prop_oneof![Just((2, 3)), Just((2, 4)), Just((3, 3)), Just((2, 5))]
        .prop_map(|(m, d)| PerazzoParams::new(m, d).unwrap())
}

/// Coefficients biased toward zero so that special forms show up.
pub fn sparse_coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3, 1 => -32002i64..=32002], len)
}

pub fn nonzero(v: Vec<i64>) -> Vec<i64> {
    let mut v = v;
    if v.iter().all(|&x| x == 0) {
        v[0] = 1;
    }
    v
}

/// A random nonzero linear form on the full Perazzo algebra for `params`.
pub fn perazzo_linear_form() -> impl Strategy<Value = (PerazzoParams, Vec<i64>)> {
    small_params().prop_flat_map(|p| {
        let n = p.n_plus_1() + p.m();
        (Just(p), sparse_coeffs(n).prop_map(nonzero))
    })
}

/// A dual generator in 2 or 3 variables of degree 2..=4.
pub fn dual_generator() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (2usize..=3, 2usize..=4).prop_flat_map(|(n, d)| {
        let len = binom(n + d - 1, d);
        (Just(n), Just(d), sparse_coeffs(len).prop_map(nonzero))
    })
}

pub fn linear(vars: &Arc<VariableSet>, field: FieldSpec, coeffs: &[i64]) -> LinearForm {
    LinearForm::new(vars, field, elems(field, coeffs)).unwrap()
}

/// Monomial complete intersection `(z1^e1, ..., zn^en)`.
pub fn monomial_ci(exps: &[u32], field: FieldSpec) -> GradedAlgebraModel {
    let vars = generic_vars(exps.len());
    let gens: Vec<Polynomial> = exps
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let mut m = vec![0; exps.len()];
            m[i] = e;
            Polynomial::from_terms(&vars, Side::Ring, field, [(Monomial::new(m), field.one())]).unwrap()
        })
        .collect();
    let bound = 1 + exps.iter().map(|&e| e as usize - 1).sum::<usize>();
    GradedAlgebraModel::from_ideal(&gens, bound).unwrap()
}
