//! Minimal non-nilpotency in both search modes, with the offending
//! subsemigroup when there is one.

use nilpotentia::catalog;
use nilpotentia::structure::Offender;
use nilpotentia::{is_minimal_non_nilpotent, MinimalityMode};

fn main() -> nilpotentia::Result<()> {
    for e in [catalog::f7()?, catalog::u3_nonminimal()?] {
        let s = &e.semigroup;
        for mode in [MinimalityMode::FourGenerator, MinimalityMode::Exhaustive] {
            let v = is_minimal_non_nilpotent(s, mode)?;
            println!("{} {mode:?}: minimal = {}", e.name, v.minimal);
            if let Some(Offender::Subsemigroup { members, .. }) = v.offenders.first() {
                let names: Vec<&str> = members.iter().map(|&x| s.label(x)).collect();
                println!("  offender {{{}}}", names.join(", "));
            }
        }
    }
    Ok(())
}
