//! Build the gadget for `r = 4, p = 2`, blow it up to more parts, and look at
//! its special vertices.

use partsat::constructions::{alpha_base, alpha_blowup};
use partsat::{special_degrees, verify_alpha_witness};

fn main() -> partsat::Result<()> {
    let base = alpha_base(4, 2)?;
    println!(
        "gadget: k = {}, {} vertices, e(X, X^c) = {}",
        base.k(),
        base.graph().vertex_count(),
        base.value()
    );

    let report = special_degrees(base.graph(), base.transversal());
    for e in report.special_vertices() {
        println!("  vertex {} in part {} is special for parts {:?}", e.vertex, e.part, e.special_for);
    }

    for k in [7, 8, 10] {
        let big = alpha_blowup(&base, k)?;
        // independent recheck, the constructor already certified it
        let value = verify_alpha_witness(big.graph(), big.transversal(), big.r())?;
        let heavy = special_degrees(big.graph(), big.transversal()).count_with_degree_at_least(2);
        println!("blow-up to k = {k}: value {value} (4k = {}), {heavy} vertices of special degree >= 2", 4 * k);
    }
    Ok(())
}
