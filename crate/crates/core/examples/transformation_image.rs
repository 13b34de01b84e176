//! Cycle notation for partial injections, and the image of a semigroup in
//! the transformations of the rows of its inverse ideal.

use nilpotentia::catalog;
use nilpotentia::classify::{classify, minimal_image};
use nilpotentia::rees::{cycle_decompose, Transformation};

fn main() -> nilpotentia::Result<()> {
    let t = Transformation::parse("(2,1,3,θ)(4)", 4)?;
    let show = |p: Option<usize>| p.map_or("θ".to_string(), |k| (k + 1).to_string());
    println!("{t} sends 1 to {} and 3 to {}", show(t.apply(0)), show(t.apply(2)));
    let square = t.after(&t);
    println!("its square is {}", cycle_decompose(&square)?);

    let s = catalog::u5_c2()?.semigroup;
    let c = classify(&s)?;
    let dec = c.decomposition.expect("U5 has an inverse ideal");
    let (image, map) = minimal_image(&s, &dec)?;
    println!("|S| = {} maps onto {} transformations", s.order(), image.order());
    let w = s.element("w")?;
    println!("w acts as {}", image.label(map[w]));
    Ok(())
}
