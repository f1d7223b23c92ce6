//! Ratios A_{p,q}/A_{p,q-1}: monotone in j, approaching (p+q+i+1)/(p+q+1).

use euler_adic::ratio::{
    check_monotonicity, directional_limit_q, divergence_threshold, ratio_down_q, ratio_from, to_significant,
};
use euler_adic::{Offset, Vertex};

fn main() -> euler_adic::Result<()> {
    let base = Vertex::new(1, 2);
    let violations = check_monotonicity(base, 12, 12)?;
    println!("base {base}: {} monotonicity violations on a 13x13 window", violations.len());

    for i in [0, 2, 5] {
        let limit = directional_limit_q(base, i)?;
        print!("i={i} limit {limit}:");
        for j in [0, 5, 20, 80] {
            let r = ratio_down_q(base, Offset::new(i, j))?;
            print!(" {}", to_significant(&r, 6));
        }
        println!();
    }

    let bound = ratio_from(3, 1);
    let i = divergence_threshold(base, &bound)?;
    println!("for i >= {i} the ratio stays above {bound} for every j");
    Ok(())
}
