//! Serialise a witness to JSON, read it back, re-verify, and emit DOT.

use partsat::constructions::alpha_base;
use partsat::io::to_dot;
use partsat::{verify_alpha_witness, GraphDocument};

fn main() -> partsat::Result<()> {
    let w = alpha_base(4, 2)?;
    let text = w.to_document().to_json();
    println!("{text}");

    let (g, x) = GraphDocument::from_json(&text)?.to_graph()?;
    let x = x.expect("alpha documents carry their transversal");
    assert_eq!(g, *w.graph());
    println!("reloaded value {}", verify_alpha_witness(&g, &x, 4)?);

    print!("{}", to_dot(&g, Some(&x)));
    Ok(())
}
