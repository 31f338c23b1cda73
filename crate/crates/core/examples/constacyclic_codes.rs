//! Codes generated by right divisors of x^n - u: encoding, the twisted shift
//! and parity checks, for each of the four bundled algebras.
//!
//!     cargo run --example constacyclic_codes

use skewlat::codes::Codeword;
use skewlat::fixtures::examples;

fn show(w: &Codeword) -> String {
    let parts: Vec<String> = w.0.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn main() -> skewlat::Result<()> {
    for f in examples() {
        let r = &f.ring;
        let code = f.code()?;
        println!(
            "{}: p = {}, n = {}, k = {}, g = {}, h = {}",
            f.name,
            r.p(),
            code.length(),
            code.dimension(),
            code.generator(),
            code.parity_check()
        );
        let c = code.encode(&[r.one()])?;
        let shifted = code.shift(&c)?;
        println!(
            "  encode(1) = {}, shift = {}, in code: {}",
            show(&c),
            show(&shifted),
            code.contains(&shifted)?
        );
        let outsider = Codeword(vec![r.one(), r.zero()]);
        println!(
            "  {} in code: {}",
            show(&outsider),
            code.contains(&outsider)?
        );
        println!("  {} codewords", code.codewords(1_000_000)?.count());
    }
    Ok(())
}
