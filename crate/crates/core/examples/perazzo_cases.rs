// Classify linear forms on a full Perazzo algebra and compare the predicted
// Jordan type with the computed one.

use artinian::apolar::GradedAlgebraModel;
use artinian::jordan::{jordan_degree_type, Partition};
use artinian::linalg::FieldSpec;
use artinian::perazzo::{
    classify_linear_form, full_perazzo_form, perazzo_dim, perazzo_hf, predicted_jordan, PerazzoParams,
};
use artinian::poly::parse_linear_form;

pub fn run_example() -> artinian::Result<Vec<(String, Partition, bool)>> {
    let params: PerazzoParams = "m=2,d=4".parse()?;
    let field = FieldSpec::Prime(32003);
    let f = full_perazzo_form(&params, field);
    println!("F = {f}");
    let model = GradedAlgebraModel::from_dual(&f)?;
    println!("h = {} (closed form {}), dim {}", model.hvector(), perazzo_hf(&params), perazzo_dim(&params));
    let mut rows = Vec::new();
    for text in ["y1 + 2*y2", "y2 + x[2,1]", "x[3,0] + y1", "x[3,0] + x[1,2] - x[0,3]", "x[2,1] + y1 + y2"] {
        let ell = parse_linear_form(text, &params.vars(), field)?;
        let case = classify_linear_form(&ell, &params)?;
        let predicted = predicted_jordan(&case, &params, &ell)?;
        let computed = jordan_degree_type(&model, &ell)?;
        let same = computed.partition() == predicted.partition;
        println!(
            "{text:<28} {:<8} literal={:<5} predicted {:<14} computed {}",
            case.tag.to_string(),
            case.literal_match,
            predicted.partition.to_string(),
            computed
        );
        rows.push((text.to_string(), computed.partition(), same));
    }
    Ok(rows)
}

#[allow(dead_code)]
fn main() {
    run_example().expect("perazzo_cases example");
}
