//! Count semigroups of small order and list the minimal non-nilpotent ones.
//!
//! Pass an order (at most 6 is quick) as the first argument.

use nilpotentia::census::{count_semigroups, find_minimal_non_nilpotent, CensusConfig, Modulo};

fn main() -> nilpotentia::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for n in 1..=max {
        let iso = count_semigroups(n, Modulo::Iso)?;
        let anti = count_semigroups(n, Modulo::IsoAntiIso)?;
        let cfg = CensusConfig {
            shards: 4,
            ..CensusConfig::new(n, Modulo::IsoAntiIso)
        };
        let mnn = find_minimal_non_nilpotent(&cfg)?;
        let kinds: Vec<&str> = mnn.iter().map(|(_, c)| c.verdict.name()).collect();
        println!("order {n}: {iso} up to iso, {anti} up to iso or anti-iso, minimal non-nilpotent {kinds:?}");
    }
    Ok(())
}
