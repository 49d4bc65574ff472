// Explicit strings `v, ℓv, ℓ²v, ...` for the toy Perazzo algebra, next to
// the rank-formula degree type.

use artinian::apolar::GradedAlgebraModel;
use artinian::jordan::{jordan_degree_type, jordan_strings, lefschetz_check, strings_degree_type};
use artinian::linalg::FieldSpec;
use artinian::perazzo::{full_perazzo_form, PerazzoParams};
use artinian::poly::parse_linear_form;

pub fn run_example() -> artinian::Result<bool> {
    let params = PerazzoParams::new(2, 3)?;
    let field = FieldSpec::Rationals;
    let model = GradedAlgebraModel::from_dual(&full_perazzo_form(&params, field))?;
    let mut agree = true;
    for text in ["y1", "x[2,0] + y1", "x[2,0]"] {
        let ell = parse_linear_form(text, &params.vars(), field)?;
        let strings = jordan_strings(&model, &ell)?;
        println!("ℓ = {text}");
        for s in &strings {
            let head = model.element_polynomial(s.degree, &s.beads[0]);
            println!("  {}_{}  head {head}", s.beads.len(), s.degree);
        }
        let jdt = jordan_degree_type(&model, &ell)?;
        println!("  JDT {jdt}  {:?}", lefschetz_check(&model, &ell)?);
        agree &= strings_degree_type(&strings) == jdt;
    }
    Ok(agree)
}

#[allow(dead_code)]
fn main() {
    assert!(run_example().expect("jordan_strings example"));
}
