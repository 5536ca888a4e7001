use partsat::{families_generate, families_verify};

fn main() -> partsat::Result<()> {
    let fc = families_generate(4)?;
    for j in 0..fc.families.len() {
        println!("D_{}: {:?}", j + 1, fc.family_sets(j));
    }
    for m in 3..=12 {
        let fc = families_generate(m)?;
        let verdict = match families_verify(&fc) {
            Ok(()) => "ok".to_string(),
            Err(v) => v.to_string(),
        };
        println!("m = {m:>2}: {} families, {verdict}", fc.families.len());
    }
    Ok(())
}
