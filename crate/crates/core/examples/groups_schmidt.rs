//! Group nilpotency through the lower central series, and the structure
//! of minimal non-nilpotent groups.

use nilpotentia::groups::{alternating4, dihedral, group_nilpotency, quaternion, schmidt_report, symmetric};

fn main() -> nilpotentia::Result<()> {
    let groups = [
        ("D4", dihedral(4)),
        ("Q8", quaternion()),
        ("S3", symmetric(3)),
        ("A4", alternating4()),
        ("S4", symmetric(4)),
    ];
    for (name, g) in groups {
        let class = group_nilpotency(&g)?;
        let r = schmidt_report(&g)?;
        println!(
            "{name}: class {class:?}, minimal non-nilpotent {}, |G| = p^a q^b as {:?}",
            r.is_schmidt, r.order_pq
        );
    }
    Ok(())
}
