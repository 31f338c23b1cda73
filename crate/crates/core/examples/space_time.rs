//! Space-time matrices of quaternion order elements and a determinant sweep
//! over the Construction A lattice, next to the u = 1 algebra where the
//! sweep finds a zero divisor.
//!
//!     cargo run --release --example space_time

use skewlat::fixtures::{Fixture, EXAMPLE1, SABOTAGE};
use skewlat::lattice::{construction_a, OrderElement};
use skewlat::spacetime::{matrix_rep, min_det_sample, SampleOptions};

fn main() -> skewlat::Result<()> {
    let f = Fixture::load("example1", EXAMPLE1)?;
    let r = &f.ring;
    let z = r.integers();

    // q = (2 + 3i) + (5 - i) e
    let q = OrderElement::from_int_rows(&[vec![2, 3], vec![5, -1]]);
    let m = matrix_rep(r, &q);
    println!("M(q) = {}", serde_json::to_string(&m).unwrap());
    println!("det M(q) = {:?}, norm {}", m.det(z), m.det_norm(z));

    // the matrix map reverses products
    let t = OrderElement::from_int_rows(&[vec![1, 1], vec![1, 0]]);
    let mqt = matrix_rep(r, &q.mul(&t, r));
    println!("M(qt) = M(t)M(q): {}", mqt == matrix_rep(r, &t).mul(z, &m));

    let opts = SampleOptions::default();
    let l = construction_a(&f.code()?)?;
    let rep = min_det_sample(r, &l.basis, 1, &opts)?;
    println!(
        "\nmin |N(det)| over {} differences: {} at {}",
        rep.evaluated,
        rep.min_abs_norm,
        serde_json::to_string(&rep.witness).unwrap()
    );

    let sab = Fixture::load("sabotage", SABOTAGE)?;
    let ls = construction_a(&sab.code()?)?;
    let rep = min_det_sample(&sab.ring, &ls.basis, 1, &opts)?;
    println!(
        "with e^2 = 1: min |N(det)| = {} at {}",
        rep.min_abs_norm,
        serde_json::to_string(&rep.witness).unwrap()
    );
    Ok(())
}
