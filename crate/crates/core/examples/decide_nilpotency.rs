//! Decide nilpotency of a small table and print either the class or a
//! witness that replays.
//!
//! Run with `cargo run --example decide_nilpotency`.

use nilpotentia::formats::{parse_semigroup_text, witness_json};
use nilpotentia::{decide_nilpotent, verify_witness, NilpotencyResult};

fn main() -> nilpotentia::Result<()> {
    // a zero semigroup with one extra nilpotent element, then the
    // right zero band on two points
    let tables = ["3\n0 0 0\n0 0 0\n0 0 0\n", "2\n0 1\n0 1\n"];
    for text in tables {
        let s = parse_semigroup_text(text)?;
        match decide_nilpotent(&s) {
            NilpotencyResult::Nilpotent { class } => {
                println!("order {}: nilpotent of class {class}", s.order());
            }
            NilpotencyResult::NonNilpotent { witness } => {
                println!("order {}: not nilpotent, witness {}", s.order(), witness_json(&s, &witness));
                assert!(verify_witness(&s, &witness));
            }
        }
    }
    Ok(())
}
