//! Good paths: those that use every label from the base at least once.

use euler_adic::good::{bad_path_bound, count_good_dp, count_good_enumeration, good_fraction};
use euler_adic::eulerian::closed_form;
use euler_adic::path::enumerate_paths;
use euler_adic::ratio::to_significant;
use euler_adic::{LabelScheme, Offset, Vertex};

fn main() -> euler_adic::Result<()> {
    let scheme = LabelScheme::new(Vertex::ROOT);
    for x in enumerate_paths(Vertex::ROOT, Offset::new(1, 1))? {
        let (good, used) = scheme.is_good(&x)?;
        println!("{x}  labels {used}  {}", if good { "good" } else { "bad" });
    }

    let base = Vertex::new(1, 1);
    let off = Offset::new(4, 4);
    let g = count_good_dp(base, off)?;
    assert_eq!(g, count_good_enumeration(base, off)?);
    let a = closed_form(base, off);
    println!("base {base}, offset {off}: G={g} A={a}, bad {} <= {}", &a - &g, bad_path_bound(base, off));

    for k in [10, 50, 100, 200] {
        let f = good_fraction(base, Offset::new(k, k))?;
        println!("G/A at ({k},{k}) = {}", to_significant(&f, 8));
    }
    Ok(())
}
