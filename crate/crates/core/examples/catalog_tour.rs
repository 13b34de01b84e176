//! Every catalog entry with its expected and computed nilpotency.

use nilpotentia::catalog;
use nilpotentia::decide_nilpotent;

fn main() -> nilpotentia::Result<()> {
    for e in catalog::standard_entries()? {
        let computed = decide_nilpotent(&e.semigroup).is_nilpotent();
        println!(
            "{:<14} order {:>3}  nilpotent {computed:<5}  expected minimal {:?}",
            e.name,
            e.semigroup.order(),
            e.expected.minimal
        );
        println!("  {}", e.description);
    }
    Ok(())
}
