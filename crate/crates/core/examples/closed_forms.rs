//! Compares the alternating-sum formulas against the recurrence and the
//! root counts against permutation descents.

use euler_adic::eulerian::{
    classical_eulerian_oracle, closed_form, closed_form_sym, comtet_a00, recurrence_table,
};
use euler_adic::{Offset, Vertex};

fn main() -> euler_adic::Result<()> {
    let base = Vertex::new(2, 1);
    let table = recurrence_table(base, 8, 8)?;
    let mut agree = 0;
    for (off, count) in table.iter() {
        assert_eq!(closed_form(base, off), *count);
        assert_eq!(closed_form_sym(base, off), *count);
        agree += 1;
    }
    println!("base {base}: both sums match the recurrence on {agree} cells");
    println!("A_{{2,1}}(8,8) = {}", table.get(8, 8));

    // A_{0,0}(i,j) counts permutations of i+j+1 letters with i descents.
    for (i, j) in [(1, 1), (2, 3), (4, 4)] {
        let off = Offset::new(i, j);
        let descents = classical_eulerian_oracle(i + j + 1, i)?;
        println!("A_{{0,0}}({i},{j}) = {} = #perms of {} with {i} descents ({descents})", comtet_a00(off), i + j + 1);
    }
    Ok(())
}
