// The chain of Jordan types of a full Perazzo algebra and the dominance
// order between its members.

use artinian::jordan::{conjugate_partition, dominance_compare, Dominance, Partition};
use artinian::perazzo::{a_bounds, dominance_chain, generic_part_count, PerazzoParams};

pub fn run_example() -> artinian::Result<Vec<Partition>> {
    let params = PerazzoParams::new(2, 3)?;
    let chain = dominance_chain(&params);
    let (lo, hi) = a_bounds(&params);
    println!("a in [{lo}, {hi}], generic part count {}", generic_part_count(&params));
    for w in chain.windows(2) {
        let ord = dominance_compare(&w[0], &w[1])?;
        println!("{} {} {}", w[0], if ord == Dominance::Less { "<" } else { "?" }, w[1]);
    }
    let top = chain.last().expect("nonempty chain");
    println!("conjugate of {top}: {}", conjugate_partition(top));
    Ok(chain)
}

#[allow(dead_code)]
fn main() {
    run_example().expect("dominance_chain example");
}
