//! dim(P, P+(k,k)) / dim(R, P+(k,k)) against the symmetric measure of a
//! cylinder ending at P.

use euler_adic::adic::{cylinder_frequency, minimal_path, SymmetricMeasure};
use euler_adic::ratio::{convergence_report, to_significant};
use euler_adic::{Offset, Vertex};

fn main() -> euler_adic::Result<()> {
    let samples: Vec<Offset> = [5, 10, 20, 40, 80].into_iter().map(|k| Offset::new(k, k)).collect();
    for p in [Vertex::new(1, 0), Vertex::new(1, 1), Vertex::new(3, 0)] {
        println!("P = {p}");
        for rec in convergence_report(p, &samples)? {
            println!(
                "  k={:>3}  ratio {}  target {}  gap {}",
                rec.off.di,
                to_significant(&rec.ratio, 10),
                rec.target,
                to_significant(&rec.abs_gap, 3)
            );
        }
    }

    let prefix = minimal_path(Vertex::new(1, 1));
    let far = Vertex::new(61, 61);
    println!(
        "cylinder {prefix}: measure {}, frequency among paths to {far} {}",
        SymmetricMeasure.cylinder(&prefix),
        to_significant(&cylinder_frequency(&prefix, far), 10)
    );
    Ok(())
}
