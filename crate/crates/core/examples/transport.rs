//! Encoding sequences and the transport of good paths between bases of the
//! same level.

use euler_adic::encoding::{decode, encode, transport, unmarked_counts};
use euler_adic::{EulerPath, LabelScheme, Vertex};

fn main() -> euler_adic::Result<()> {
    let x: EulerPath = "(1,0):H1,V1,V2,H1,H1,V1,V1".parse()?;
    let src = LabelScheme::new(x.start);
    let code = encode(&src, &x)?;
    println!("path {x}\ncode {code}");
    for m in 0..=x.len() {
        let (h, v) = unmarked_counts(&src, &x, m)?;
        println!("  after {m} steps: {h} unmarked horizontal, {v} unmarked vertical");
    }

    let dst = LabelScheme::new(Vertex::new(0, 1));
    let y = transport(&src, &dst, &x)?;
    println!("moved to {}: {y}", dst.base);
    assert_eq!(decode(&dst, &code)?, y);
    assert_eq!(transport(&dst, &src, &y)?, x);
    println!("and back: {}", transport(&dst, &src, &y)?);
    Ok(())
}
