// For `m = 2`, the h-vector of `A_{ℓ∘F}` read off a Hankel matrix of the
// x-coefficients, checked against the catalecticants of `ℓ∘F`.

use artinian::apolar::{hilbert_function, HVector};
use artinian::linalg::FieldSpec;
use artinian::perazzo::{full_perazzo_form, hankel_hf, PerazzoParams};
use artinian::poly::LinearForm;

pub fn run_example() -> artinian::Result<Vec<(HVector, HVector)>> {
    let params = PerazzoParams::new(2, 5)?;
    let field = FieldSpec::Rationals;
    let f = full_perazzo_form(&params, field);
    let mut out = Vec::new();
    for a in [[1, 0, 0, 0, 0], [1, 0, 0, 0, 1], [1, 1, 1, 1, 1], [1, 2, 4, 8, 16], [3, -1, 4, 1, -5]] {
        let a: Vec<_> = a.iter().map(|&v| field.from_i64(v)).collect();
        let b = vec![field.zero(); 2];
        let ell = LinearForm::from_blocks(&params.vars(), field, a.clone(), b)?;
        let g = ell.to_polynomial().contract(&f)?;
        let by_rank = hankel_hf(&a, params.d())?;
        let direct = hilbert_function(&g)?;
        println!("ℓ∘F = {g}\n  hankel {by_rank}  catalecticant {direct}");
        out.push((by_rank, direct));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hankel example");
}
