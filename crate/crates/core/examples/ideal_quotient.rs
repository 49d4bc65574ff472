// `R/(x^3, xy^2, y^3)` and multiplication by `x + y`.

use artinian::apolar::GradedAlgebraModel;
use artinian::jordan::{jordan_degree_type, jordan_type, JordanDegreeType, Partition};
use artinian::linalg::FieldSpec;
use artinian::poly::{parse_linear_form, parse_polynomial, Polynomial, Side, VariableSet};

pub fn run_example() -> artinian::Result<(Vec<usize>, Partition, JordanDegreeType)> {
    let q = FieldSpec::Rationals;
    let vars = VariableSet::generic(&["x", "y"])?;
    let gens = ["x^3", "x*y^2", "y^3"]
        .iter()
        .map(|g| parse_polynomial(g, &vars, Side::Ring, q))
        .collect::<artinian::Result<Vec<Polynomial>>>()?;
    let model = GradedAlgebraModel::from_ideal(&gens, 6)?;
    for t in 0..=model.socle_degree() {
        let basis: Vec<String> = model.basis_monomials(t).iter().map(|m| m.render(&vars, Side::Ring)).collect();
        println!("A_{t}: {}", basis.join(" "));
    }
    let ell = parse_linear_form("x + y", &vars, q)?;
    let p = jordan_type(&model, &ell)?;
    let jdt = jordan_degree_type(&model, &ell)?;
    println!("h = {}  P = {p}  JDT = {jdt}", model.hvector());
    Ok((model.hvector().entries().to_vec(), p, jdt))
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ideal_quotient example");
}
