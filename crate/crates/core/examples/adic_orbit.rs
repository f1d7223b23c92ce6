//! Walks the adic successor through every root path to a vertex.

use euler_adic::adic::{maximal_path, minimal_path, orbit, successor};
use euler_adic::eulerian::dim;
use euler_adic::{Error, Vertex};

fn main() -> euler_adic::Result<()> {
    let v = Vertex::new(2, 2);
    let paths = orbit(v)?;
    println!("{} paths to {v} (dim {})", paths.len(), dim(Vertex::ROOT, v));
    for (k, x) in paths.iter().enumerate().take(8) {
        println!("{k:>3}  {x}");
    }
    println!("  ...");
    println!("min {}\nmax {}", minimal_path(v), maximal_path(v));
    match successor(&maximal_path(v)) {
        Err(Error::MaximalPath) => println!("the maximal path has no successor"),
        other => panic!("unexpected {other:?}"),
    }
    Ok(())
}
