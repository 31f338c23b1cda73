//! sigma-constacyclic codes: left ideals `(g(x)) / (x^n - u)` of
//! `R[x; sigma] / (x^n - u)` for monic right divisors `g` of `x^n - u`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_ring::{QuotientRing, RingElement};
use crate::skew::SkewPoly;

/// A vector `(a_0, ..., a_{n-1})` in `R^n`, identified with the polynomial
/// `a_0 + a_1 x + ... + a_{n-1} x^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Codeword(pub Vec<RingElement>);

impl Codeword {
    pub fn zero(ring: &QuotientRing, n: usize) -> Self {
        Codeword(vec![ring.zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_poly(&self) -> SkewPoly {
        SkewPoly::new(self.0.clone())
    }

    pub fn from_poly(ring: &QuotientRing, f: &SkewPoly, n: usize) -> Self {
        Codeword(f.to_vector(ring, n))
    }
}

/// Euclidean product `sum y_i z_i`.
pub fn inner_product(ring: &QuotientRing, y: &Codeword, z: &Codeword) -> RingElement {
    y.0.iter()
        .zip(&z.0)
        .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
}

/// Serializable summary `{n, u, g, h, k}` of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    pub u: RingElement,
    pub g: SkewPoly,
    pub h: SkewPoly,
    pub k: usize,
}

/// The code generated by a monic right divisor `g` of `x^n - u`, with
/// parity-check polynomial `h` satisfying `h g = g h = x^n - u`.
#[derive(Clone, Debug)]
pub struct ConstacyclicCode {
    ring: QuotientRing,
    n: usize,
    u: RingElement,
    g: SkewPoly,
    h: SkewPoly,
    k: usize,
}

impl ConstacyclicCode {
    /// Builds the code of length `n` generated by `g`.
    ///
    /// A unit-leading `g` is first made monic by left multiplication with the
    /// inverse of its leading coefficient, which does not change the ideal.
    pub fn from_generator(
        ring: &QuotientRing,
        g: &SkewPoly,
        n: usize,
        u: &RingElement,
    ) -> Result<Self> {
        let skew = ring.skew();
        if !skew.is_central(n, u) {
            return Err(Error::NotCentral);
        }
        let deg = g.degree().ok_or(Error::DivisionByZero)?;
        if deg > n {
            return Err(Error::NotADivisor(format!(
                "generator degree {deg} exceeds the length {n}"
            )));
        }
        let lead_inv = ring
            .inverse(g.leading().unwrap())
            .ok_or(Error::NonUnitLeading)?;
        let g = skew.scale_left(&lead_inv, g);
        let target = skew.central(n, u);
        let (h, r) = skew.right_divide(&target, &g)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor(format!("remainder {r}")));
        }
        if skew.mul(&g, &h) != target {
            return Err(Error::NotADivisor("g h != x^n - u".into()));
        }
        Ok(ConstacyclicCode {
            ring: ring.clone(),
            n,
            u: u.clone(),
            k: n - deg,
            g,
            h,
        })
    }

    /// The code generated by `g` for the algebra's own `x^n - u`.
    pub fn for_algebra(ring: &QuotientRing, g: &SkewPoly) -> Result<Self> {
        let u = ring.from_int(ring.spec().u);
        Self::from_generator(ring, g, ring.degree(), &u)
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> &RingElement {
        &self.u
    }

    pub fn generator(&self) -> &SkewPoly {
        &self.g
    }

    pub fn parity_check(&self) -> &SkewPoly {
        &self.h
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            n: self.n,
            u: self.u.clone(),
            g: self.g.clone(),
            h: self.h.clone(),
            k: self.k,
        }
    }

    fn check_len(&self, got: usize, expected: usize) -> Result<()> {
        if got == expected {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected, got })
        }
    }

    /// Coefficients of `b(x) g(x) mod (x^n - u)` with `b(x) = sum msg_i x^i`.
    pub fn encode(&self, msg: &[RingElement]) -> Result<Codeword> {
        self.check_len(msg.len(), self.k)?;
        let skew = self.ring.skew();
        let b = SkewPoly::new(msg.to_vec());
        let prod = skew.reduce_mod_central(&skew.mul(&b, &self.g), self.n, &self.u);
        Ok(Codeword::from_poly(&self.ring, &prod, self.n))
    }

    /// Parity check: `v` is a codeword iff `v(x) h(x) = 0 mod (x^n - u)`.
    pub fn contains(&self, v: &Codeword) -> Result<bool> {
        self.check_len(v.len(), self.n)?;
        let skew = self.ring.skew();
        let prod = skew.mul(&v.to_poly(), &self.h);
        Ok(skew.reduce_mod_central(&prod, self.n, &self.u).is_zero())
    }

    /// `(u sigma(a_{n-1}), sigma(a_0), ..., sigma(a_{n-2}))`, the coefficient
    /// vector of `x a(x) mod (x^n - u)`.
    pub fn shift(&self, v: &Codeword) -> Result<Codeword> {
        self.check_len(v.len(), self.n)?;
        let r = &self.ring;
        let mut out = Vec::with_capacity(self.n);
        out.push(r.mul(&self.u, &r.sigma(&v.0[self.n - 1], 1)));
        out.extend(v.0[..self.n - 1].iter().map(|a| r.sigma(a, 1)));
        Ok(Codeword(out))
    }

    /// Whether every codeword of `other` lies in `self`. Both codes are left
    /// ideals, so it is enough to test the generator of `other`.
    pub fn contains_code(&self, other: &ConstacyclicCode) -> Result<bool> {
        let skew = self.ring.skew();
        let g = skew.reduce_mod_central(&other.g, other.n, &other.u);
        self.contains(&Codeword::from_poly(&self.ring, &g, self.n))
    }

    /// Equality of codeword sets, decided by mutual generator membership.
    pub fn same_code(&self, other: &ConstacyclicCode) -> Result<bool> {
        Ok(self.n == other.n && self.contains_code(other)? && other.contains_code(self)?)
    }

    fn require_u_squared_one(&self) -> Result<()> {
        if self.ring.mul(&self.u, &self.u) == self.ring.one() {
            Ok(())
        } else {
            Err(Error::UnsupportedU)
        }
    }

    /// `g_perp(x) = 1 + sum_{i=1}^{k} sigma^i(h_{k-i}) x^i`, normalized with
    /// constant term one. Requires `u^2 = 1`.
    pub fn dual_generator(&self) -> Result<SkewPoly> {
        self.require_u_squared_one()?;
        let r = &self.ring;
        let mut coeffs = vec![r.one()];
        for i in 1..=self.k {
            coeffs.push(r.sigma(&self.h.coeff(r, self.k - i), i as i64));
        }
        Ok(SkewPoly::new(coeffs))
    }

    /// The Euclidean dual as a constacyclic code (generated by the monic
    /// normalization of [`dual_generator`](Self::dual_generator)).
    pub fn dual(&self) -> Result<ConstacyclicCode> {
        let g = self.dual_generator()?;
        Self::from_generator(&self.ring, &g, self.n, &self.u)
    }

    pub fn is_self_dual(&self) -> Result<bool> {
        self.dual()?.same_code(self)
    }

    /// Codeword with lexicographic message rank `index`.
    pub fn codeword_at(&self, index: u128) -> Codeword {
        self.encode(&self.ring.tuple_at(index, self.k))
            .expect("message has length k")
    }

    /// All `|R|^k` codewords, in lexicographic message order.
    pub fn codewords(&self, bound: u128) -> Result<impl Iterator<Item = Codeword> + '_> {
        let count = self.ring.tuple_count(self.k, bound)?;
        Ok((0..count).map(move |i| self.codeword_at(i)))
    }

    /// The codewords `theta^j x^i g`, which span the code additively.
    pub fn additive_generators(&self) -> Vec<Codeword> {
        let r = &self.ring;
        let skew = r.skew();
        let mut out = Vec::with_capacity(self.k * r.degree());
        for i in 0..self.k {
            let xig = skew.mul(&SkewPoly::monomial(r, r.one(), i), &self.g);
            for j in 0..r.degree() {
                let mut theta_j = vec![0i64; j + 1];
                theta_j[j] = 1;
                let scaled = skew.scale_left(&r.element(&theta_j), &xig);
                let reduced = skew.reduce_mod_central(&scaled, self.n, &self.u);
                out.push(Codeword::from_poly(r, &reduced, self.n));
            }
        }
        out
    }

    /// The exact Euclidean dual by exhaustive search over `R^n`: every `v`
    /// orthogonal to all codewords. Uses only the inner product, never the
    /// dual generator formula.
    pub fn brute_force_dual(&self, bound: u128) -> Result<Vec<Codeword>> {
        let count = self.ring.tuple_count(self.n, bound)?;
        let spanning: Vec<Codeword> = (0..self.k)
            .map(|i| {
                let mut msg = vec![self.ring.zero(); self.k];
                msg[i] = self.ring.one();
                self.encode(&msg).unwrap()
            })
            .collect();
        let ring = &self.ring;
        Ok((0..count)
            .into_par_iter()
            .filter_map(|idx| {
                let v = Codeword(ring.tuple_at(idx, self.n));
                spanning
                    .iter()
                    .all(|c| inner_product(ring, c, &v).is_zero())
                    .then_some(v)
            })
            .collect())
    }
}
