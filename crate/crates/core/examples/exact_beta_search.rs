//! Exhaustive search for the smallest beta_i(k, r) witness.

use partsat::oracles::{beta_exact_with, SearchLimits};
use partsat::Error;

fn main() -> partsat::Result<()> {
    for (i, k, r, max_n) in [(1, 3, 3, 6), (1, 4, 4, 8), (2, 4, 3, 7), (2, 5, 3, 7), (2, 5, 4, 9)] {
        let out = beta_exact_with(i, k, r, max_n, &SearchLimits::default())?;
        match out.value {
            Some(n) => println!("beta_{i}({k},{r}) = {n}  [{} nodes]", out.nodes_explored),
            None => println!("beta_{i}({k},{r}) > {max_n}  [{} nodes]", out.nodes_explored),
        }
    }

    // a tiny budget stops early and reports what was covered
    match beta_exact_with(1, 5, 5, 8, &SearchLimits::with_budget(200)) {
        Err(Error::Resource(p)) => println!("budget 200: {p}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
