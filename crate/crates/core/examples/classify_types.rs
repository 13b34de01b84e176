//! Classify the minimal non-nilpotent entries of the catalog and print the
//! invariants each verdict rests on.

use nilpotentia::catalog;
use nilpotentia::classify::classify;

fn main() -> nilpotentia::Result<()> {
    let entries = [catalog::u1(), catalog::u2(), catalog::f7()?, catalog::u5_c2()?];
    for e in entries {
        let c = classify(&e.semigroup)?;
        println!("{}: {}", e.name, c.verdict.name());
        for inv in &c.invariants {
            println!("  {} = {}", inv.name, inv.value);
        }
    }
    Ok(())
}
