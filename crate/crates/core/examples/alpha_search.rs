//! Minimise e(X, X^c) over saturated graphs with an independent transversal,
//! with at most `s` further vertices per part.

use partsat::alpha_bounded_search;

fn main() -> partsat::Result<()> {
    for (k, r, s) in [(3, 3, 1), (3, 3, 2), (4, 4, 1), (4, 4, 2)] {
        let out = alpha_bounded_search(k, r, s, 0)?;
        let value = out.value.map_or("none".to_string(), |v| v.to_string());
        println!(
            "k = {k} r = {r} s = {s}: {:?} value {value} ({} nodes{})",
            out.status,
            out.nodes_explored,
            if out.heuristic { ", heuristic" } else { "" }
        );
    }
    Ok(())
}
