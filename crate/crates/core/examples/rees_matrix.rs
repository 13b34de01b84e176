//! Build a Rees matrix semigroup, test the nilpotency criterion against the
//! direct decision, then recover the coordinates from the bare table.

use nilpotentia::groups::{cyclic, symmetric};
use nilpotentia::rees::{build_rees, rees_decompose, rees_nilpotency_criterion, ReesSpec};
use nilpotentia::decide_nilpotent;

fn main() -> nilpotentia::Result<()> {
    for (name, spec) in [
        ("M0(C3,3,3;I3)", ReesSpec::inverse(cyclic(3), 3)),
        ("M0(S3,2,2;I2)", ReesSpec::inverse(symmetric(3), 2)),
    ] {
        let (s, coords) = build_rees(&spec)?;
        let criterion = rees_nilpotency_criterion(&spec);
        let direct = decide_nilpotent(&s).is_nilpotent();
        println!("{name}: order {}, criterion {criterion}, direct {direct}", s.order());
        assert_eq!(criterion, direct);

        let all: Vec<usize> = (0..s.order()).collect();
        let dec = rees_decompose(&s, &all)?;
        let x = 5;
        let c = coords[x].expect("not θ");
        let d = dec.coord(x).expect("in the ideal");
        println!(
            "  element {} is built at {} and recovered at row {}, column {}, group element {}",
            s.label(x),
            spec.coord_label(c),
            d.i + 1,
            d.j + 1,
            s.label(dec.group_elements[d.g])
        );
    }
    Ok(())
}
