//! Glue an acting semigroup onto `M0(G, n, n; I_n)` and read the actions
//! back from the result.

use nilpotentia::catalog;
use nilpotentia::rees::{gamma_psi, glued_union, rees_decompose};

fn main() -> nilpotentia::Result<()> {
    let gs = catalog::u5_c2()?.glue.expect("glued entry");
    let s = glued_union(&gs)?;
    println!("|S| = {}", s.order());

    let m: Vec<usize> = (0..s.order())
        .filter(|&x| s.label(x).starts_with('(') || x == gs.theta())
        .collect();
    let dec = rees_decompose(&s, &m)?;
    let gp = gamma_psi(&s, &dec)?;
    gp.check_laws(&s, &dec.spec.group)?;
    for t in 0..gs.t.order() {
        let x = gs.t_position(t);
        println!("Γ({}) = {}", s.label(x), gp.cycles(x));
    }
    Ok(())
}
