// Hilbert function of a dual generator, from catalecticant ranks.
//
// ```text
// cargo run --example hilbert_function
// ```

use artinian::apolar::{catalecticant, hf_stats, hilbert_function, HVector};
use artinian::linalg::FieldSpec;
use artinian::poly::{parse_polynomial, Side, VariableSet};

pub fn run_example() -> artinian::Result<HVector> {
    let vars = VariableSet::generic(&["x", "y", "z"])?;
    let f = parse_polynomial("X^2*Y + Y^2*Z + Z^3", &vars, Side::Dual, FieldSpec::Rationals)?;
    for t in 0..=3 {
        let c = catalecticant(&f, t)?;
        println!("Cat_{t}: {}x{}, rank {}", c.rows(), c.cols(), c.rank());
    }
    let h = hilbert_function(&f)?;
    println!("h = {h}");
    println!("{:?}", hf_stats(&h, Some((3, h.socle_degree()))));
    Ok(h)
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hilbert_function example");
}
