//! Arithmetic in R[x; sigma] over F_9: the twisted product, left and right
//! division, the monic right divisors of x^2 + 1 and the anti-isomorphism
//! theta.
//!
//!     cargo run --example skew_division

use skewlat::fixtures::{Fixture, EXAMPLE1};

fn main() -> skewlat::Result<()> {
    let f = Fixture::load("example1", EXAMPLE1)?;
    let r = &f.ring;
    let s = r.skew();

    // x a = sigma(a) x
    let a = s.poly(&[&[0, 1]]);
    println!("x * a = {}", s.mul(&s.x(), &a));
    println!("a * x = {}", s.mul(&a, &s.x()));

    let g = s.poly(&[&[1, 1], &[1]]);
    let h = s.poly(&[&[-1, 1], &[1]]);
    println!("\n(x - 1 + a)(x + 1 + a) = {}", s.mul(&h, &g));
    println!("(x + 1 + a)(x - 1 + a) = {}", s.mul(&g, &h));

    let target = s.poly(&[&[1], &[], &[1]]);
    let (q, rem) = s.right_divide(&target, &s.poly(&[&[1], &[1]]))?;
    println!("\nx^2 + 1 = ({q})(x + 1) + {rem}");
    let (q, rem) = s.left_divide(&target, &g)?;
    println!("x^2 + 1 = (x + 1 + a)({q}) + {rem}");

    let u = r.from_int(-1);
    println!("\nmonic right divisors of x^2 + 1:");
    for d in s.monic_right_divisors(2, &u, 1, 1_000)? {
        println!("  {d}");
    }

    let p = s.poly(&[&[1], &[0, 1], &[2]]);
    let lhs = s.theta(&s.mul(&p, &g));
    let rhs = s.theta_mul(&s.theta(&g), &s.theta(&p));
    println!("\ntheta(p g) = theta(g) theta(p): {}", lhs == rhs);
    Ok(())
}
