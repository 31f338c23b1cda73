//! The skew polynomial ring `R[x; sigma]` with `x s = sigma(s) x`: twisted
//! products, left and right division by unit-leading divisors, reduction
//! modulo the central polynomial `x^n - u`, and the anti-isomorphism onto
//! `R[w; sigma^{-1}]` (`w` standing for `x^{-1}`).

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_ring::{QuotientRing, RingElement};

/// A skew polynomial `a_0 + a_1 x + ... + a_d x^d`. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SkewPoly {
    coeffs: Vec<RingElement>,
}

impl SkewPoly {
    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn new(mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn constant(c: RingElement) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(ring: &QuotientRing, c: RingElement, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&RingElement> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, ring: &QuotientRing, i: usize) -> RingElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn is_monic(&self, ring: &QuotientRing) -> bool {
        self.leading() == Some(&ring.one())
    }

    /// Coefficient vector padded with zeros to length `len`.
    pub fn to_vector(&self, ring: &QuotientRing, len: usize) -> Vec<RingElement> {
        (0..len).map(|i| self.coeff(ring, i)).collect()
    }
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "x")
    }
}

/// An element of `R[w; sigma^{-1}]`, the image ring of the anti-isomorphism.
/// Multiplication obeys `w a = sigma^{-1}(a) w`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThetaPoly {
    coeffs: Vec<RingElement>,
}

impl ThetaPoly {
    pub fn new(mut coeffs: Vec<RingElement>) -> Self {
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        ThetaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl fmt::Debug for ThetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(f, &self.coeffs, "w")
    }
}

fn fmt_poly(f: &mut fmt::Formatter<'_>, coeffs: &[RingElement], var: &str) -> fmt::Result {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match i {
            0 => format!("({c})"),
            1 => format!("({c}){var}"),
            _ => format!("({c}){var}^{i}"),
        })
        .collect();
    if terms.is_empty() {
        f.write_str("0")
    } else {
        f.write_str(&terms.join(" + "))
    }
}

/// Skew polynomial arithmetic over a fixed quotient ring.
#[derive(Clone, Copy)]
pub struct SkewRing<'r> {
    ring: &'r QuotientRing,
}

impl QuotientRing {
    pub fn skew(&self) -> SkewRing<'_> {
        SkewRing { ring: self }
    }
}

impl<'r> SkewRing<'r> {
    pub fn ring(&self) -> &'r QuotientRing {
        self.ring
    }

    pub fn x(&self) -> SkewPoly {
        SkewPoly::monomial(self.ring, self.ring.one(), 1)
    }

    /// Builds a polynomial from integer coefficient lists, constant term first.
    pub fn poly(&self, coeffs: &[&[i64]]) -> SkewPoly {
        SkewPoly::new(coeffs.iter().map(|c| self.ring.element(c)).collect())
    }

    pub fn add(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        SkewPoly::new(zip_longest(self.ring, &f.coeffs, &g.coeffs, |a, b| {
            self.ring.add(a, b)
        }))
    }

    pub fn sub(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        SkewPoly::new(zip_longest(self.ring, &f.coeffs, &g.coeffs, |a, b| {
            self.ring.sub(a, b)
        }))
    }

    pub fn neg(&self, f: &SkewPoly) -> SkewPoly {
        SkewPoly::new(f.coeffs.iter().map(|c| self.ring.neg(c)).collect())
    }

    /// `c * f` with the scalar on the left (no twist).
    pub fn scale_left(&self, c: &RingElement, f: &SkewPoly) -> SkewPoly {
        SkewPoly::new(f.coeffs.iter().map(|a| self.ring.mul(c, a)).collect())
    }

    /// `(a x^i)(b x^j) = a sigma^i(b) x^{i+j}`, extended bilinearly.
    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        SkewPoly::new(twisted_product(self.ring, &f.coeffs, &g.coeffs, 1))
    }

    /// `x^n - u`.
    pub fn central(&self, n: usize, u: &RingElement) -> SkewPoly {
        let mut coeffs = vec![self.ring.zero(); n + 1];
        coeffs[0] = self.ring.neg(u);
        coeffs[n] = self.ring.one();
        SkewPoly::new(coeffs)
    }

    fn check_divisor(&self, g: &SkewPoly) -> Result<(usize, RingElement)> {
        let deg = g.degree().ok_or(Error::DivisionByZero)?;
        let lead = g.leading().unwrap();
        self.ring
            .inverse(lead)
            .map(|inv| (deg, inv))
            .ok_or(Error::NonUnitLeading)
    }

    /// Right division: returns `(q, r)` with `f = q g + r` and
    /// `deg r < deg g`. The pair is unique.
    pub fn right_divide(&self, f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let (l, lead_inv) = self.check_divisor(g)?;
        let ring = self.ring;
        let mut q = vec![ring.zero(); f.coeffs.len().saturating_sub(l)];
        let mut r = f.clone();
        while let Some(m) = r.degree().filter(|&m| m >= l) {
            let shift = m - l;
            // s_m / sigma^{m-l}(t_l)
            let c = ring.mul(r.leading().unwrap(), &ring.sigma(&lead_inv, shift as i64));
            let term = SkewPoly::monomial(ring, c.clone(), shift);
            r = self.sub(&r, &self.mul(&term, g));
            q[shift] = ring.add(&q[shift], &c);
            debug_assert!(r.degree().is_none_or(|d| d < m));
        }
        Ok((SkewPoly::new(q), r))
    }

    /// Left division: returns `(q, r)` with `f = g q + r` and
    /// `deg r < deg g`. The pair is unique.
    pub fn left_divide(&self, f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let (l, lead_inv) = self.check_divisor(g)?;
        let ring = self.ring;
        let mut q = vec![ring.zero(); f.coeffs.len().saturating_sub(l)];
        let mut r = f.clone();
        while let Some(m) = r.degree().filter(|&m| m >= l) {
            let shift = m - l;
            // sigma^{-l}(s_m / t_l)
            let c = ring.sigma(&ring.mul(r.leading().unwrap(), &lead_inv), -(l as i64));
            let term = SkewPoly::monomial(ring, c.clone(), shift);
            r = self.sub(&r, &self.mul(g, &term));
            q[shift] = ring.add(&q[shift], &c);
            debug_assert!(r.degree().is_none_or(|d| d < m));
        }
        Ok((SkewPoly::new(q), r))
    }

    /// The canonical representative of `f` modulo the two-sided ideal
    /// generated by `x^n - u`: the remainder of right division, of degree
    /// below `n`.
    pub fn reduce_mod_central(&self, f: &SkewPoly, n: usize, u: &RingElement) -> SkewPoly {
        if f.degree().is_none_or(|d| d < n) {
            return f.clone();
        }
        self.right_divide(f, &self.central(n, u))
            .expect("x^n - u is monic")
            .1
    }

    /// Whether `u` is fixed by sigma, which makes `x^n - u` central when
    /// sigma^n is the identity.
    pub fn is_central(&self, n: usize, u: &RingElement) -> bool {
        self.ring.sigma(u, 1) == *u && n.is_multiple_of(self.ring.degree())
    }

    /// `theta(sum a_i x^i) = sum x^{-i} a_i = sum sigma^{-i}(a_i) w^i`.
    pub fn theta(&self, f: &SkewPoly) -> ThetaPoly {
        ThetaPoly::new(
            f.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| self.ring.sigma(a, -(i as i64)))
                .collect(),
        )
    }

    /// Product in `R[w; sigma^{-1}]`: `(a w^i)(b w^j) = a sigma^{-i}(b) w^{i+j}`.
    pub fn theta_mul(&self, f: &ThetaPoly, g: &ThetaPoly) -> ThetaPoly {
        ThetaPoly::new(twisted_product(self.ring, &f.coeffs, &g.coeffs, -1))
    }

    pub fn theta_add(&self, f: &ThetaPoly, g: &ThetaPoly) -> ThetaPoly {
        ThetaPoly::new(zip_longest(self.ring, &f.coeffs, &g.coeffs, |a, b| {
            self.ring.add(a, b)
        }))
    }

    /// All monic `g` of the given degree with `x^n - u = q g` exactly, in
    /// lexicographic order of the lower coefficient vector.
    pub fn monic_right_divisors(
        &self,
        n: usize,
        u: &RingElement,
        degree: usize,
        bound: u128,
    ) -> Result<Vec<SkewPoly>> {
        if degree > n {
            return Ok(Vec::new());
        }
        let count = self.ring.tuple_count(degree, bound)?;
        let target = self.central(n, u);
        let found: Vec<SkewPoly> = (0..count)
            .into_par_iter()
            .filter_map(|idx| {
                let mut coeffs = self.ring.tuple_at(idx, degree);
                coeffs.push(self.ring.one());
                let g = SkewPoly::new(coeffs);
                let (_, r) = self.right_divide(&target, &g).ok()?;
                r.is_zero().then_some(g)
            })
            .collect();
        Ok(found)
    }
}

fn zip_longest(
    ring: &QuotientRing,
    a: &[RingElement],
    b: &[RingElement],
    op: impl Fn(&RingElement, &RingElement) -> RingElement,
) -> Vec<RingElement> {
    let zero = ring.zero();
    (0..a.len().max(b.len()))
        .map(|i| op(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect()
}

/// Product where moving `b` past `var^i` applies `sigma^{direction * i}`.
fn twisted_product(
    ring: &QuotientRing,
    a: &[RingElement],
    b: &[RingElement],
    direction: i64,
) -> Vec<RingElement> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let t = ring.mul(ai, &ring.sigma(bj, direction * i as i64));
            out[i + j] = ring.add(&out[i + j], &t);
        }
    }
    out
}
