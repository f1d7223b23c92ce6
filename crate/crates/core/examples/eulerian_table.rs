//! Prints A_{p,q}(i,j) as a grid.
//!
//! cargo run --example eulerian_table -- 1 2 6

use euler_adic::eulerian::recurrence_table;
use euler_adic::Vertex;

fn main() -> euler_adic::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("non-negative integer"))
        .collect();
    let (p, q, size) = match args[..] {
        [p, q, size] => (p, q, size),
        [] => (0, 0, 6),
        _ => panic!("usage: eulerian_table [p q size]"),
    };
    let table = recurrence_table(Vertex::new(p, q), size, size)?;
    println!("paths from ({p},{q}) to ({p}+i, {q}+j); rows i, columns j");
    for i in 0..=size {
        let row: Vec<String> = (0..=size).map(|j| table.get(i, j).to_string()).collect();
        println!("{}", row.join("\t"));
    }
    Ok(())
}
