use partsat::bounds_table;

fn main() -> partsat::Result<()> {
    println!("{:>3} {:>3} {:>6} {:>6} {:>6}  source", "k", "r", "lower", "upper", "exact");
    for r in 3..=6 {
        for k in r..=r + 6 {
            let b = bounds_table(k, r)?;
            let exact = b.exact.map_or("-".to_string(), |e| e.to_string());
            println!("{k:>3} {r:>3} {:>6} {:>6} {exact:>6}  {}", b.lower, b.upper, b.source_label());
        }
    }
    Ok(())
}
