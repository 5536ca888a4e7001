//! A K_4-partite-saturated 4-partite graph with 30 vertices per part, grown
//! from the best known alpha witness.

use partsat::constructions::sat_witness;
use partsat::is_partite_saturated;

fn main() -> partsat::Result<()> {
    let (k, r, n) = (4, 4, 30);
    let w = sat_witness(k, r, n)?;
    let g = &w.graph;
    println!("parts {:?}", g.part_sizes());
    println!("edges {} (bound a n + a^2 = {}, a = {})", g.edge_count(), w.edge_bound(n), w.alpha_value);
    println!("saturated: {}", is_partite_saturated(g, r));

    for n in [20, 40, 80] {
        let w = sat_witness(k, r, n)?;
        println!("n = {n:>3}: {} edges", w.graph.edge_count());
    }
    Ok(())
}
