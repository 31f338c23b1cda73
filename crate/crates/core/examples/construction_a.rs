//! Construction A: the lattice of all order elements that reduce to a
//! codeword, its Hermite basis, trace-form Gram matrix and the duality
//! inclusion test.
//!
//!     cargo run --example construction_a

use skewlat::fixtures::examples;
use skewlat::lattice::{construction_a, dual_lattice_inclusion_check, LatticeBasis, TraceForm};
use skewlat::matrix::IntMatrix;

fn print(m: &IntMatrix) {
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
        println!("   {}", cells.join(""));
    }
}

fn main() -> skewlat::Result<()> {
    for f in examples() {
        let r = &f.ring;
        let code = f.code()?;
        let l = construction_a(&code)?;
        let lambda = LatticeBasis::lambda(r, &TraceForm::standard(r))?;
        println!(
            "{}: index {}, det(Gram) = {} (Lambda: {}), L in dual lattice: {}",
            f.name,
            l.index_in_lambda,
            l.det,
            lambda.det,
            dual_lattice_inclusion_check(&code, &code, 1_000_000)?
        );
        if f.name == "example1" {
            println!("  basis:");
            print(&l.basis);
            println!("  Gram:");
            print(&l.gram);
        }
    }
    Ok(())
}
