//! Euclidean duals: the closed-form dual generator when u^2 = 1, checked
//! against an exhaustive search, and what happens when u^2 != 1.
//!
//!     cargo run --example duals

use std::collections::BTreeSet;

use skewlat::codes::Codeword;
use skewlat::fixtures::{examples, Fixture, UNSUPPORTED_U};

fn main() -> skewlat::Result<()> {
    for f in examples() {
        let code = f.code()?;
        let gp = code.dual_generator()?;
        let dual = code.dual()?;
        let exhaustive: BTreeSet<Codeword> =
            code.brute_force_dual(1_000_000)?.into_iter().collect();
        let formula: BTreeSet<Codeword> = dual.codewords(1_000_000)?.collect();
        println!(
            "{}: dual generator {gp}, monic {}, self-dual {}, matches exhaustive dual: {}",
            f.name,
            dual.generator(),
            code.is_self_dual()?,
            exhaustive == formula
        );
    }

    let f = Fixture::load("unsupported", UNSUPPORTED_U)?;
    let code = f.code()?;
    match code.dual_generator() {
        Ok(g) => println!("unexpected dual generator {g}"),
        Err(e) => println!("\nu = 2 mod 5: {e} [{}]", e.code()),
    }
    let dual = code.brute_force_dual(1_000_000)?;
    println!(
        "the dual still exists: {} words found by exhaustive search",
        dual.len()
    );
    Ok(())
}
