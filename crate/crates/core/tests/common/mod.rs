#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use skewlat::fixtures::{examples, Fixture};
use skewlat::lattice::OrderElement;
use skewlat::number_ring::{QuotientRing, RingElement};
use skewlat::skew::SkewPoly;

pub fn fixtures() -> Vec<Fixture> {
    examples()
}

pub fn element(ring: &QuotientRing, rng: &mut impl Rng) -> RingElement {
    ring.element_at(rng.gen_range(0..ring.size()))
}

pub fn unit(ring: &QuotientRing, rng: &mut impl Rng) -> RingElement {
    loop {
        let a = element(ring, rng);
        if ring.is_unit(&a) {
            return a;
        }
    }
}

/// A polynomial with exactly `len` coefficients drawn uniformly (so its
/// degree is at most `len - 1`).
pub fn poly(ring: &QuotientRing, len: usize, rng: &mut impl Rng) -> SkewPoly {
    SkewPoly::new((0..len).map(|_| element(ring, rng)).collect())
}

/// A polynomial of exact degree `deg` with a unit leading coefficient.
pub fn divisor(ring: &QuotientRing, deg: usize, rng: &mut impl Rng) -> SkewPoly {
    let mut c: Vec<RingElement> = (0..deg).map(|_| element(ring, rng)).collect();
    c.push(unit(ring, rng));
    SkewPoly::new(c)
}

pub fn order_element(n: usize, range: i64, rng: &mut impl Rng) -> OrderElement {
    OrderElement::from_rows(
        (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| BigInt::from(rng.gen_range(-range..=range)))
                    .collect()
            })
            .collect(),
    )
}

pub fn deg(f: &SkewPoly) -> i64 {
    f.degree().map_or(-1, |d| d as i64)
}
