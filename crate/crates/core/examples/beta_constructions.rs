//! Small witnesses for beta_i(k, r): every deletion of i parts leaves a
//! K_{r-1}, yet the graph is K_r-free.

use partsat::constructions::{
    best_beta2_witness, beta2_combine, beta2_small_witness, beta_step_chain, cycle_power_witness,
    disjoint_cliques_witness, BetaWitness,
};
use partsat::{beta_violation, clique_number};

fn show(label: &str, w: &BetaWitness) {
    println!(
        "{label:<28} i = {} k = {:>2} r = {}  size {:>2}  omega {}",
        w.i(),
        w.k(),
        w.r(),
        w.size(),
        clique_number(w.graph())
    );
}

fn main() -> partsat::Result<()> {
    show("C5", &cycle_power_witness(2, 3, 5)?);
    show("cycle power", &cycle_power_witness(3, 4, 11)?);
    show("disjoint cliques", &disjoint_cliques_witness(2, 4, 9)?);
    show("inductive chain", &beta_step_chain(3, 8, 4)?);
    show("small beta2", &beta2_small_witness(6, 4)?);

    let a = best_beta2_witness(5, 4)?;
    let b = best_beta2_witness(3, 2)?;
    let joined = beta2_combine(&a, &b)?;
    show("joined (r1 = 4, r2 = 2)", &joined);

    // asking for more deletions than the graph supports names the culprit parts
    let c5 = cycle_power_witness(2, 3, 5)?;
    if let Some(v) = beta_violation(c5.graph(), 3, 3)? {
        println!("C5 as a beta_3 witness: {v}");
    }
    Ok(())
}
