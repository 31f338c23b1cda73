//! Exact arithmetic in the monogenic ring of integers `O_K = Z[theta]` and in
//! its finite quotient `R = O_K / p O_K`, together with the automorphism
//! sigma and the splitting of `p O_K` into local factors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Default cap on the number of items any exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 1_000_000;

/// Which involution the trace form pairs the second argument with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConjugationMode {
    Identity,
    Complex,
}

impl fmt::Display for ConjugationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjugationMode::Identity => "identity",
            ConjugationMode::Complex => "complex",
        })
    }
}

/// The data defining the cyclic algebra `A = K + Ke + ... + Ke^{n-1}` with
/// `e^n = u`, its natural order and the prime `p`.
///
/// Polynomials are integer coefficient lists, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    /// Monic minimal polynomial `m(y)` of `theta`, degree `n >= 2`.
    pub min_poly: Vec<i64>,
    /// `s(y)` with `sigma(theta) = s(theta)`.
    pub sigma_image: Vec<i64>,
    pub u: i64,
    pub p: i64,
    pub conjugation_mode: ConjugationMode,
    pub assume_division: bool,
}

impl AlgebraSpec {
    pub fn degree(&self) -> usize {
        self.min_poly.len().saturating_sub(1)
    }

    /// Imaginary quadratic fields get complex conjugation, everything else the
    /// identity.
    pub fn default_conjugation(min_poly: &[i64]) -> ConjugationMode {
        if min_poly.len() == 3 {
            let disc = min_poly[1] as i128 * min_poly[1] as i128 - 4 * min_poly[0] as i128;
            if disc < 0 {
                return ConjugationMode::Complex;
            }
        }
        ConjugationMode::Identity
    }
}

// ---------------------------------------------------------------------------
// integer polynomials (constant term first)

fn zpoly_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn zpoly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zpoly_trim(out)
}

/// Remainder modulo a monic polynomial.
fn zpoly_rem(a: &[BigInt], monic: &[BigInt]) -> Vec<BigInt> {
    let d = monic.len() - 1;
    let mut r = a.to_vec();
    while r.len() > d {
        let lead = r.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let shift = r.len() - d;
        for (i, c) in monic[..d].iter().enumerate() {
            r[shift + i] -= &lead * c;
        }
    }
    zpoly_trim(r)
}

/// `outer(inner(y)) mod monic`, by Horner's rule.
fn zpoly_compose_mod(outer: &[BigInt], inner: &[BigInt], monic: &[BigInt]) -> Vec<BigInt> {
    let mut acc: Vec<BigInt> = Vec::new();
    for c in outer.iter().rev() {
        acc = zpoly_mul(&acc, inner);
        if acc.is_empty() {
            acc.push(c.clone());
        } else {
            acc[0] += c;
        }
        acc = zpoly_rem(&zpoly_trim(acc), monic);
    }
    acc
}

fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn pad(mut v: Vec<BigInt>, n: usize) -> Vec<BigInt> {
    v.resize(n, BigInt::zero());
    v
}

pub(crate) fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2i64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---------------------------------------------------------------------------
// O_K = Z[theta]

/// The ring of integers `Z[theta]`. Elements are coordinate vectors of length
/// `n` in the power basis `1, theta, ..., theta^{n-1}`.
#[derive(Clone, Debug)]
pub struct NumberRing {
    n: usize,
    min_poly: Vec<BigInt>,
    /// `sigma_powers[k]` has column `j` equal to `sigma^k(theta^j)`.
    sigma_powers: Vec<IntMatrix>,
    /// Traces of the basis elements `theta^j`.
    basis_traces: Vec<BigInt>,
}

impl NumberRing {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.n]
    }

    pub fn from_int(&self, c: impl Into<BigInt>) -> Vec<BigInt> {
        let mut v = self.zero();
        v[0] = c.into();
        v
    }

    pub fn theta_power(&self, j: usize) -> Vec<BigInt> {
        let mut mono = vec![BigInt::zero(); j + 1];
        mono[j] = BigInt::one();
        pad(zpoly_rem(&mono, &self.min_poly), self.n)
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &[BigInt]) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(&self, s: &BigInt, a: &[BigInt]) -> Vec<BigInt> {
        a.iter().map(|x| s * x).collect()
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        pad(zpoly_rem(&zpoly_mul(a, b), &self.min_poly), self.n)
    }

    /// `sigma^power(a)`; negative powers are taken modulo the order `n`.
    pub fn sigma(&self, a: &[BigInt], power: i64) -> Vec<BigInt> {
        let k = power.rem_euclid(self.n as i64) as usize;
        self.sigma_powers[k].mul_vec(a)
    }

    /// Matrix of multiplication by `a` on the power basis.
    pub fn mult_matrix(&self, a: &[BigInt]) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = (0..self.n)
            .map(|j| self.mul(a, &self.theta_power(j)))
            .collect();
        IntMatrix::from_columns(self.n, &cols)
    }

    pub fn trace(&self, a: &[BigInt]) -> BigInt {
        a.iter().zip(&self.basis_traces).map(|(x, t)| x * t).sum()
    }

    pub fn norm(&self, a: &[BigInt]) -> BigInt {
        self.mult_matrix(a).det()
    }

    /// The involution used by the trace form. Complex conjugation on a cyclic
    /// CM field is the unique element of order two, `sigma^{n/2}`.
    pub fn conjugate(&self, a: &[BigInt], mode: ConjugationMode) -> Result<Vec<BigInt>> {
        match mode {
            ConjugationMode::Identity => Ok(a.to_vec()),
            ConjugationMode::Complex if self.n.is_multiple_of(2) => {
                Ok(self.sigma(a, (self.n / 2) as i64))
            }
            ConjugationMode::Complex => Err(Error::IndefiniteForm(format!(
                "complex conjugation requested on a cyclic field of odd degree {}",
                self.n
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// R = O_K / p O_K

/// An element of `R`, stored as `n` coefficients in `[0, p)` of the power
/// basis. Serializes as the plain integer list `[c_0, ..., c_{n-1}]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RingElement {
    coeffs: Vec<u64>,
}

impl RingElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match (j, c) {
                (0, _) => c.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{c}t"),
                (_, 1) => format!("t^{j}"),
                _ => format!("{c}t^{j}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

/// The finite commutative ring `R = Z[y] / (p, m(y))` with its automorphism
/// sigma. Immutable after construction; share it freely across threads.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    spec: AlgebraSpec,
    p: u64,
    n: usize,
    /// `m mod p`, monic, constant term first, length `n + 1`.
    modulus: Vec<u64>,
    /// `sigma_mod[k][j]` = coefficients of `sigma^k(theta^j)` mod p.
    sigma_mod: Vec<Vec<Vec<u64>>>,
    integers: NumberRing,
    warnings: Vec<String>,
}

impl QuotientRing {
    /// Validates `spec` and builds the ring context.
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        let n = spec.degree();
        if n < 2 {
            return Err(Error::InvalidMinPoly(format!(
                "degree must be at least 2, got {n}"
            )));
        }
        if spec.min_poly[n] != 1 {
            return Err(Error::InvalidMinPoly(
                "minimal polynomial is not monic".into(),
            ));
        }
        if !is_prime(spec.p) {
            return Err(Error::NotPrime(spec.p));
        }
        if spec.p >= 1 << 31 {
            return Err(Error::Unsupported(format!("prime {} is too large", spec.p)));
        }
        if spec.u % spec.p == 0 {
            return Err(Error::NonUnitU {
                u: spec.u,
                p: spec.p,
            });
        }

        let mut warnings = Vec::new();
        if n == 2 {
            let disc =
                spec.min_poly[1] as i128 * spec.min_poly[1] as i128 - 4 * spec.min_poly[0] as i128;
            if disc >= 0 && (disc as u128).sqrt().pow(2) == disc as u128 {
                return Err(Error::InvalidMinPoly(format!(
                    "discriminant {disc} is a perfect square, so m(y) is reducible"
                )));
            }
        } else {
            warnings.push(format!(
                "irreducibility of the degree-{n} minimal polynomial is assumed, not checked"
            ));
        }

        let m = big_vec(&spec.min_poly);
        let s = zpoly_rem(&zpoly_trim(big_vec(&spec.sigma_image)), &m);
        if !zpoly_compose_mod(&m, &s, &m).is_empty() {
            return Err(Error::InvalidSigma(
                "m(s(y)) is not divisible by m(y), so theta -> s(theta) is not a field automorphism"
                    .into(),
            ));
        }
        // iterate s: iterates[k] = s composed with itself k times
        let identity = vec![BigInt::zero(), BigInt::one()];
        let mut iterates = vec![identity.clone()];
        for k in 1..=n {
            let next = zpoly_compose_mod(&s, &iterates[k - 1], &m);
            if k < n && next == identity {
                return Err(Error::InvalidSigma(format!(
                    "sigma has order {k}, which is smaller than the degree {n}"
                )));
            }
            iterates.push(next);
        }
        if iterates[n] != identity {
            return Err(Error::InvalidSigma(format!(
                "sigma^{n} is not the identity"
            )));
        }

        let sigma_powers: Vec<IntMatrix> = iterates[..n]
            .iter()
            .map(|t| {
                let mut power = vec![BigInt::one()];
                let cols: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| {
                        let col = pad(power.clone(), n);
                        power = zpoly_rem(&zpoly_mul(&power, t), &m);
                        col
                    })
                    .collect();
                IntMatrix::from_columns(n, &cols)
            })
            .collect();

        let mut integers = NumberRing {
            n,
            min_poly: m,
            sigma_powers,
            basis_traces: Vec::new(),
        };
        integers.basis_traces = (0..n)
            .map(|j| {
                let mm = integers.mult_matrix(&integers.theta_power(j));
                (0..n).map(|i| mm[(i, i)].clone()).sum()
            })
            .collect();

        let p = spec.p as u64;
        let reduce = |c: &BigInt| c.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let modulus: Vec<u64> = integers.min_poly.iter().map(reduce).collect();
        let sigma_mod = integers
            .sigma_powers
            .iter()
            .map(|mat| {
                (0..n)
                    .map(|j| mat.column(j).iter().map(reduce).collect())
                    .collect()
            })
            .collect();

        Ok(QuotientRing {
            spec,
            p,
            n,
            modulus,
            sigma_mod,
            integers,
            warnings,
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Degree `n` of `K` over the rationals, also the order of sigma.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// `m(y) mod p`, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn integers(&self) -> &NumberRing {
        &self.integers
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// `|R| = p^n`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (self.p as u128).saturating_pow(self.n as u32)
    }

    // -- constructors ------------------------------------------------------

    pub fn zero(&self) -> RingElement {
        RingElement {
            coeffs: vec![0; self.n],
        }
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> RingElement {
        let mut e = self.zero();
        e.coeffs[0] = self.reduce_int(c);
        e
    }

    /// The class of `theta`.
    pub fn theta(&self) -> RingElement {
        self.element(&[0, 1])
    }

    /// Reduces an arbitrary integer polynomial in `theta` into `R`.
    pub fn element(&self, coeffs: &[i64]) -> RingElement {
        let v: Vec<u64> = coeffs.iter().map(|&c| self.reduce_int(c)).collect();
        self.reduce_poly(v)
    }

    pub fn element_from_big(&self, coeffs: &[BigInt]) -> RingElement {
        let p = BigInt::from(self.p);
        let v: Vec<u64> = coeffs
            .iter()
            .map(|c| c.mod_floor(&p).to_u64().unwrap())
            .collect();
        self.reduce_poly(v)
    }

    /// Canonical integer representative with coordinates in `[0, p)`.
    pub fn lift(&self, a: &RingElement) -> Vec<BigInt> {
        a.coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn reduce_int(&self, c: i64) -> u64 {
        c.rem_euclid(self.p as i64) as u64
    }

    fn reduce_poly(&self, mut v: Vec<u64>) -> RingElement {
        let p = self.p;
        while v.len() > self.n {
            let lead = v.pop().unwrap();
            if lead == 0 {
                continue;
            }
            let shift = v.len() - self.n;
            for (i, &c) in self.modulus[..self.n].iter().enumerate() {
                let t = mulmod(lead, c, p);
                v[shift + i] = (v[shift + i] + p - t) % p;
            }
        }
        v.resize(self.n, 0);
        RingElement { coeffs: v }
    }

    // -- arithmetic --------------------------------------------------------

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let p = self.p;
        RingElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + y) % p)
                .collect(),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let p = self.p;
        RingElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + p - y) % p)
                .collect(),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        let p = self.p;
        RingElement {
            coeffs: a.coeffs.iter().map(|x| (p - x) % p).collect(),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let p = self.p;
        let mut prod = vec![0u64; 2 * self.n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(x, y, p)) % p;
            }
        }
        self.reduce_poly(prod)
    }

    pub fn scale(&self, s: u64, a: &RingElement) -> RingElement {
        let p = self.p;
        RingElement {
            coeffs: a.coeffs.iter().map(|&x| mulmod(s % p, x, p)).collect(),
        }
    }

    /// `sigma^power(a)`; any integer power is allowed.
    pub fn sigma(&self, a: &RingElement, power: i64) -> RingElement {
        let k = power.rem_euclid(self.n as i64) as usize;
        if k == 0 {
            return a.clone();
        }
        let p = self.p;
        let table = &self.sigma_mod[k];
        let mut out = vec![0u64; self.n];
        for (j, &c) in a.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (i, &t) in table[j].iter().enumerate() {
                out[i] = (out[i] + mulmod(c, t, p)) % p;
            }
        }
        RingElement { coeffs: out }
    }

    /// Multiplicative inverse, or `None` when `a` is zero or a zero divisor.
    pub fn inverse(&self, a: &RingElement) -> Option<RingElement> {
        // Solve (multiplication by a) * b = 1 over F_p.
        let n = self.n;
        let columns: Vec<RingElement> = (0..n)
            .map(|j| {
                let mut mono = vec![0u64; j + 1];
                mono[j] = 1;
                self.mul(a, &self.reduce_poly(mono))
            })
            .collect();
        let mut rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = columns.iter().map(|c| c.coeffs[i]).collect();
                row.push(u64::from(i == 0));
                row
            })
            .collect();
        let sol = solve_mod_p(&mut rows, n, self.p)?;
        Some(RingElement { coeffs: sol })
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.inverse(a).is_some()
    }

    /// Whether `a` lies in the image of `Z/p`, i.e. has no theta component.
    pub fn is_base_scalar(&self, a: &RingElement) -> bool {
        a.coeffs[1..].iter().all(|&c| c == 0)
    }

    // -- enumeration -------------------------------------------------------

    /// The element with lexicographic rank `index` (coefficient `c_0` is the
    /// most significant digit).
    pub fn element_at(&self, mut index: u128) -> RingElement {
        let p = self.p as u128;
        let mut coeffs = vec![0u64; self.n];
        for c in coeffs.iter_mut().rev() {
            *c = (index % p) as u64;
            index /= p;
        }
        RingElement { coeffs }
    }

    /// All `p^n` elements exactly once, in lexicographic order.
    pub fn elements(&self, bound: u128) -> Result<impl Iterator<Item = RingElement> + '_> {
        let count = self.size();
        if count > bound {
            return Err(Error::TooLarge { count, bound });
        }
        Ok((0..count).map(move |i| self.element_at(i)))
    }

    /// The tuple in `R^len` with lexicographic rank `index`.
    pub fn tuple_at(&self, mut index: u128, len: usize) -> Vec<RingElement> {
        let size = self.size();
        let mut out = vec![self.zero(); len];
        for slot in out.iter_mut().rev() {
            *slot = self.element_at(index % size);
            index /= size;
        }
        out
    }

    /// `|R|^len`, or a `TooLarge` error if it exceeds `bound`.
    pub fn tuple_count(&self, len: usize, bound: u128) -> Result<u128> {
        let count = self.size().checked_pow(len as u32).unwrap_or(u128::MAX);
        if count > bound {
            Err(Error::TooLarge { count, bound })
        } else {
            Ok(count)
        }
    }

    // -- structure ---------------------------------------------------------

    /// Factors `m mod p` into irreducibles and exposes the local projections.
    pub fn decompose(&self) -> RingDecomposition {
        let p = self.p;
        let mut rest = self.modulus.clone();
        let mut factors: Vec<LocalFactor> = Vec::new();
        let mut d = 1;
        while 2 * d <= fp_degree(&rest) {
            for cand in monic_candidates(d, p) {
                let mut mult = 0;
                while let Some(q) = fp_exact_div(&rest, &cand, p) {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push(LocalFactor::new(cand, mult, p));
                }
            }
            d += 1;
        }
        if fp_degree(&rest) > 0 {
            factors.push(LocalFactor::new(rest, 1, p));
        }
        RingDecomposition {
            p,
            n: self.n,
            factors,
        }
    }
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let g = (a as i64).extended_gcd(&(p as i64));
    (g.gcd == 1).then(|| g.x.rem_euclid(p as i64) as u64)
}

/// Gauss-Jordan elimination of an `n x (n+1)` augmented system over `F_p`.
/// Returns `None` if the system matrix is singular.
fn solve_mod_p(rows: &mut [Vec<u64>], n: usize, p: u64) -> Option<Vec<u64>> {
    for col in 0..n {
        let piv = (col..n).find(|&r| rows[r][col] != 0)?;
        rows.swap(col, piv);
        let inv = inv_mod(rows[col][col], p)?;
        for v in rows[col].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        for r in 0..n {
            if r == col || rows[r][col] == 0 {
                continue;
            }
            let f = rows[r][col];
            for c in 0..=n {
                let t = mulmod(f, rows[col][c], p);
                rows[r][c] = (rows[r][c] + p - t) % p;
            }
        }
    }
    Some(rows.iter().map(|r| r[n]).collect())
}

// ---------------------------------------------------------------------------
// polynomials over F_p (constant term first)

fn fp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_degree(a: &[u64]) -> usize {
    a.iter().rposition(|&c| c != 0).unwrap_or(0)
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    fp_trim(out)
}

/// Division with remainder by a monic polynomial.
fn fp_divrem(a: &[u64], monic: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let d = monic.len() - 1;
    let mut r = fp_trim(a.to_vec());
    if r.len() <= d {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - d];
    while r.len() > d {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - d;
        q[shift] = lead;
        for (i, &c) in monic.iter().enumerate() {
            let t = mulmod(lead, c, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = fp_trim(r);
    }
    (fp_trim(q), r)
}

fn fp_exact_div(a: &[u64], monic: &[u64], p: u64) -> Option<Vec<u64>> {
    let (q, r) = fp_divrem(a, monic, p);
    r.is_empty().then_some(q)
}

/// Monic degree-`d` polynomials. Linear ones come as `y - r` for increasing
/// roots `r`; higher degrees in lexicographic order of the lower coefficients.
fn monic_candidates(d: usize, p: u64) -> Vec<Vec<u64>> {
    if d == 1 {
        return (0..p).map(|r| vec![(p - r) % p, 1]).collect();
    }
    let count = p.pow(d as u32);
    (0..count)
        .map(|mut idx| {
            let mut c = vec![0u64; d + 1];
            c[d] = 1;
            for slot in c[..d].iter_mut() {
                *slot = idx % p;
                idx /= p;
            }
            c
        })
        .collect()
}

/// One local factor `F_p[y] / (f^e)` of `R`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalFactor {
    /// Monic irreducible `f mod p`, constant term first.
    pub irreducible: Vec<u64>,
    pub multiplicity: usize,
    /// `f^e`, the modulus of the local ring.
    pub modulus: Vec<u64>,
}

impl LocalFactor {
    fn new(irreducible: Vec<u64>, multiplicity: usize, p: u64) -> Self {
        let mut modulus = vec![1u64];
        for _ in 0..multiplicity {
            modulus = fp_mul(&modulus, &irreducible, p);
        }
        LocalFactor {
            irreducible,
            multiplicity,
            modulus,
        }
    }

    pub fn local_degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Residue degree of the prime above `p`.
    pub fn residue_degree(&self) -> usize {
        self.irreducible.len() - 1
    }
}

/// How `p` decomposes in `O_K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    /// `p O_K` stays prime and `R` is a field.
    Inert,
    /// `p O_K` is a product of distinct primes of residue degree one.
    Split,
    /// Some prime above `p` appears with multiplicity; `R` has nilpotents.
    Ramified,
    /// Unramified with several primes of residue degree above one.
    Mixed,
}

/// The Chinese-remainder decomposition `R = prod F_p[y]/(f_i^{e_i})`.
#[derive(Clone, Debug, Serialize)]
pub struct RingDecomposition {
    p: u64,
    n: usize,
    factors: Vec<LocalFactor>,
}

impl RingDecomposition {
    pub fn factors(&self) -> &[LocalFactor] {
        &self.factors
    }

    pub fn splitting(&self) -> Splitting {
        if self.factors.iter().any(|f| f.multiplicity > 1) {
            Splitting::Ramified
        } else if self.factors.len() == 1 {
            Splitting::Inert
        } else if self.factors.iter().all(|f| f.residue_degree() == 1) {
            Splitting::Split
        } else {
            Splitting::Mixed
        }
    }

    /// Images of `a` in each local factor, as coefficient vectors of length
    /// equal to the local degree.
    pub fn project(&self, a: &RingElement) -> Vec<Vec<u64>> {
        self.factors
            .iter()
            .map(|f| {
                let (_, mut r) = fp_divrem(&a.coeffs, &f.modulus, self.p);
                r.resize(f.local_degree(), 0);
                r
            })
            .collect()
    }

    /// Product inside local factor `i`.
    pub fn local_mul(&self, i: usize, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = &self.factors[i];
        let (_, mut r) = fp_divrem(&fp_mul(x, y, self.p), &f.modulus, self.p);
        r.resize(f.local_degree(), 0);
        r
    }

    /// Inverse of [`project`](Self::project): the unique element of `R` with
    /// the given local images.
    pub fn reconstruct(&self, parts: &[Vec<u64>]) -> RingElement {
        assert_eq!(parts.len(), self.factors.len());
        let n = self.n;
        let basis_images: Vec<Vec<u64>> = (0..n)
            .map(|j| {
                let mut mono = vec![0u64; n];
                mono[j] = 1;
                self.project(&RingElement { coeffs: mono }).concat()
            })
            .collect();
        let target: Vec<u64> = parts.concat();
        let mut rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row: Vec<u64> = basis_images.iter().map(|b| b[i]).collect();
                row.push(target[i] % self.p);
                row
            })
            .collect();
        let coeffs = solve_mod_p(&mut rows, n, self.p)
            .expect("projection onto the local factors is bijective");
        RingElement { coeffs }
    }
}

// ---------------------------------------------------------------------------

/// An element `a + b*theta` of `O_K` whose norm equals `u^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormWitness {
    pub a: i64,
    pub b: i64,
    pub power: usize,
}

/// Searches `|a|, |b| <= bound` for `N(a + b*theta) = u^i`, `1 <= i < n`.
///
/// An empty result is consistent with the algebra being division but does
/// not prove it. Quadratic fields only.
pub fn norm_search(spec: &AlgebraSpec, bound: i64) -> Result<Vec<NormWitness>> {
    if spec.degree() != 2 {
        return Err(Error::Unsupported(format!(
            "norm search is implemented for quadratic fields only (degree {})",
            spec.degree()
        )));
    }
    // m = y^2 + c1 y + c0: N(a + b theta) = a^2 - c1 a b + c0 b^2
    let c0 = BigInt::from(spec.min_poly[0]);
    let c1 = BigInt::from(spec.min_poly[1]);
    let u = BigInt::from(spec.u);
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let (ba, bb) = (BigInt::from(a), BigInt::from(b));
            let norm = &ba * &ba - &c1 * &ba * &bb + &c0 * &bb * &bb;
            for power in 1..spec.degree() {
                if norm == u.pow(power as u32) {
                    out.push(NormWitness { a, b, power });
                }
            }
        }
    }
    Ok(out)
}
