//! Wiretap-style coset coding: a message picks a codeword, random offsets in
//! p Lambda pick a point of its coset, and reduction mod p recovers the
//! message label.
//!
//!     cargo run --example coset_coding

use skewlat::fixtures::{Fixture, EXAMPLE1};
use skewlat::spacetime::{coset_decode_label, coset_encode, sample_offsets};

fn main() -> skewlat::Result<()> {
    let f = Fixture::load("example1", EXAMPLE1)?;
    let r = &f.ring;
    let code = f.code()?;
    let msg = [r.element(&[2, 1])];
    for offset in sample_offsets(42, 4, 2, 4) {
        let enc = coset_encode(&code, &msg, &offset)?;
        let dec = coset_decode_label(&code, &enc.point)?;
        println!(
            "point {:<24} -> codeword ({}, {}), offset {}",
            serde_json::to_string(&enc.point).unwrap(),
            dec.codeword.0[0],
            dec.codeword.0[1],
            serde_json::to_string(&dec.offset).unwrap()
        );
    }
    Ok(())
}
