//! Residue rings `R = O_K / p O_K` of Z[i] at an inert, a split and a
//! ramified prime, plus a search for small norms that would rule out the
//! division property.
//!
//!     cargo run --example quotient_rings

use skewlat::number_ring::{norm_search, AlgebraSpec, ConjugationMode, QuotientRing};

fn gaussian(p: i64) -> AlgebraSpec {
    AlgebraSpec {
        min_poly: vec![1, 0, 1],
        sigma_image: vec![0, -1],
        u: -1,
        p,
        conjugation_mode: ConjugationMode::Complex,
        assume_division: true,
    }
}

fn main() -> skewlat::Result<()> {
    for p in [3, 5, 2] {
        let r = QuotientRing::new(gaussian(p))?;
        let d = r.decompose();
        println!("Z[i] / {p}: {} elements, {:?}", r.size(), d.splitting());
        for f in d.factors() {
            println!("  factor {:?}^{}", f.irreducible, f.multiplicity);
        }
        let i = r.theta();
        println!("  i -> {:?}, sigma(i) = {}", d.project(&i), r.sigma(&i, 1));
    }

    // F_9 = F_3[a]/(a^2 + 1): (a + 1)(a - 1) = a^2 - 1 = -2 = 1
    let f9 = QuotientRing::new(gaussian(3))?;
    let a_plus = f9.element(&[1, 1]);
    let a_minus = f9.element(&[-1, 1]);
    println!("\n(a+1)(a-1) = {}", f9.mul(&a_plus, &a_minus));
    println!("1/(1+a) = {}", f9.inverse(&a_plus).expect("unit"));

    // F_2[v]/(v^2) with v = 1 + i
    let r2 = QuotientRing::new(gaussian(2))?;
    let v = r2.element(&[1, 1]);
    println!("in Z[i]/2: v = {v}, v^2 = {}", r2.mul(&v, &v));

    // u = -1 is a norm from Q(i) iff a^2 + b^2 = -1 has a solution
    let hits = norm_search(&gaussian(3), 20)?;
    println!("\nsmall elements of Z[i] with norm -1: {}", hits.len());
    let q_sqrt2 = AlgebraSpec {
        min_poly: vec![-2, 0, 1],
        u: -5,
        conjugation_mode: ConjugationMode::Identity,
        ..gaussian(3)
    };
    println!(
        "small elements of Z[sqrt 2] with norm -5: {}",
        norm_search(&q_sqrt2, 20)?.len()
    );
    Ok(())
}
