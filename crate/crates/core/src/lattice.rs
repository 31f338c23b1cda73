//! Construction A over the natural order `Lambda = O_K + O_K e + ... + O_K e^{n-1}`.
//!
//! `Lambda` is identified with `Z^N`, `N = n^2`, through the basis
//! `theta^j e^i` (coordinate `i * n + j`). Reduction modulo `p` followed by
//! `e -> x` is the map `rho` onto `R[x; sigma] / (x^n - u)`, and the lattice of
//! a code `C` is `rho^{-1}(C)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::codes::{Codeword, ConstacyclicCode};
use crate::error::{Error, Result};
use crate::matrix::{hnf, solve_in_hnf, IntMatrix};
use crate::number_ring::{ConjugationMode, QuotientRing};
use crate::serde_int;

/// `a_0 + a_1 e + ... + a_{n-1} e^{n-1}` in `Lambda`; row `i` holds the
/// integer coordinates of `a_i` in the power basis of `O_K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderElement {
    rows: Vec<Vec<BigInt>>,
}

impl OrderElement {
    pub fn zero(n: usize) -> Self {
        OrderElement {
            rows: vec![vec![BigInt::zero(); n]; n],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut z = Self::zero(n);
        z.rows[0][0] = BigInt::one();
        z
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "order element must be n x n"
        );
        OrderElement { rows }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    /// Inverse of [`coords`](Self::coords).
    pub fn from_coords(n: usize, coords: &[BigInt]) -> Self {
        assert_eq!(coords.len(), n * n);
        OrderElement {
            rows: coords.chunks(n).map(<[BigInt]>::to_vec).collect(),
        }
    }

    /// The `i`-th standard basis vector of `Z^N`.
    pub fn basis_vector(n: usize, index: usize) -> Self {
        let mut z = Self::zero(n);
        z.rows[index / n][index % n] = BigInt::one();
        z
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Component `a_i` in `O_K`.
    pub fn component(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn coords(&self) -> Vec<BigInt> {
        self.rows.concat()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        OrderElement {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| s * c).collect())
                .collect(),
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        OrderElement {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| op(x, y)).collect())
                .collect(),
        }
    }

    /// Product in `Lambda`: `(a e^i)(b e^j) = a sigma^i(b) e^{i+j}` with
    /// `e^n = u`.
    pub fn mul(&self, other: &Self, ring: &QuotientRing) -> Self {
        let z = ring.integers();
        let n = self.n();
        let u = BigInt::from(ring.spec().u);
        let mut out = Self::zero(n);
        for (i, a) in self.rows.iter().enumerate() {
            if a.iter().all(Zero::is_zero) {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                let mut t = z.mul(a, &z.sigma(b, i as i64));
                let mut k = i + j;
                if k >= n {
                    k -= n;
                    t = z.scale(&u, &t);
                }
                out.rows[k] = z.add(&out.rows[k], &t);
            }
        }
        out
    }
}

impl Serialize for OrderElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_int::nested::serialize(&self.rows, s)
    }
}

impl<'de> Deserialize<'de> for OrderElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = serde_int::nested::deserialize(d)?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(serde::de::Error::custom("order element must be n x n"));
        }
        Ok(OrderElement { rows })
    }
}

/// `psi^{-1}`: lifts a word of `R^n` to `Lambda` using the canonical
/// representatives in `[0, p)`.
pub fn lift_codeword(ring: &QuotientRing, v: &Codeword) -> OrderElement {
    OrderElement::from_rows(v.0.iter().map(|a| ring.lift(a)).collect())
}

/// `rho`: reduction of every `O_K` component modulo `p`.
pub fn rho_reduce(ring: &QuotientRing, a: &OrderElement) -> Codeword {
    Codeword(a.rows.iter().map(|r| ring.element_from_big(r)).collect())
}

/// The bilinear form `B(a, b) = sum_i w_i Tr(a_i c(b_i))` on `Lambda`, where
/// `c` is the configured conjugation and `w_i` a positive weight on the
/// `e^i` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceForm {
    pub conjugation: ConjugationMode,
    pub e_weights: Vec<BigInt>,
}

impl TraceForm {
    /// Unit weights and the algebra's configured conjugation.
    pub fn standard(ring: &QuotientRing) -> Self {
        TraceForm {
            conjugation: ring.spec().conjugation_mode,
            e_weights: vec![BigInt::one(); ring.degree()],
        }
    }

    /// Weights `|u|^i` on the `e^i` block.
    pub fn with_u_weights(ring: &QuotientRing) -> Self {
        let u = BigInt::from(ring.spec().u).abs();
        TraceForm {
            conjugation: ring.spec().conjugation_mode,
            e_weights: (0..ring.degree()).map(|i| u.pow(i as u32)).collect(),
        }
    }

    /// Gram matrix of `Lambda` itself in the basis `theta^j e^i`.
    pub fn lambda_gram(&self, ring: &QuotientRing) -> Result<IntMatrix> {
        let z = ring.integers();
        let n = ring.degree();
        if self.e_weights.len() != n || self.e_weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::IndefiniteForm(
                "e-block weights must be n positive integers".into(),
            ));
        }
        let mut block = IntMatrix::zeros(n, n);
        for j in 0..n {
            for l in 0..n {
                let conj = z.conjugate(&z.theta_power(l), self.conjugation)?;
                block[(j, l)] = z.trace(&z.mul(&z.theta_power(j), &conj));
            }
        }
        if let Some(j) = (0..n).find(|&j| !block[(j, j)].is_positive()) {
            return Err(Error::IndefiniteForm(format!(
                "Tr(theta^{j} c(theta^{j})) = {} under {} conjugation",
                block[(j, j)],
                self.conjugation
            )));
        }
        let mut g = IntMatrix::zeros(n * n, n * n);
        for (i, w) in self.e_weights.iter().enumerate() {
            for j in 0..n {
                for l in 0..n {
                    g[(i * n + j, i * n + l)] = w * &block[(j, l)];
                }
            }
        }
        Ok(g)
    }

    /// `B^T G_Lambda B` for a basis given by the columns of `basis`.
    pub fn gram(&self, ring: &QuotientRing, basis: &IntMatrix) -> Result<IntMatrix> {
        let g = self.lambda_gram(ring)?;
        Ok(basis.transpose().mul(&g).mul(basis))
    }
}

/// A full-rank sublattice of `Lambda` in column Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeBasis {
    /// Columns are the lattice generators in the basis `theta^j e^i`.
    pub basis: IntMatrix,
    pub gram: IntMatrix,
    /// Determinant of the Gram matrix.
    #[serde(with = "serde_int")]
    pub det: BigInt,
    /// `[Lambda : L]`.
    #[serde(rename = "index", with = "serde_int")]
    pub index_in_lambda: BigInt,
}

impl LatticeBasis {
    /// The lattice spanned by `generators` (coordinate vectors of length `N`).
    pub fn from_generators(
        ring: &QuotientRing,
        generators: &[Vec<BigInt>],
        form: &TraceForm,
    ) -> Result<Self> {
        let big_n = ring.degree() * ring.degree();
        let basis = hnf(&IntMatrix::from_columns(big_n, generators));
        if basis.cols() != big_n {
            return Err(Error::Unsupported(format!(
                "generators span a rank-{} lattice, expected {big_n}",
                basis.cols()
            )));
        }
        let gram = form.gram(ring, &basis)?;
        let det = gram.det();
        let index_in_lambda = basis.det().abs();
        Ok(LatticeBasis {
            basis,
            gram,
            det,
            index_in_lambda,
        })
    }

    /// `Lambda` itself.
    pub fn lambda(ring: &QuotientRing, form: &TraceForm) -> Result<Self> {
        let n = ring.degree();
        Self::from_generators(ring, &IntMatrix::identity(n * n).columns(), form)
    }

    pub fn dimension(&self) -> usize {
        self.basis.cols()
    }

    pub fn contains(&self, coords: &[BigInt]) -> bool {
        solve_in_hnf(&self.basis, coords).is_some()
    }

    pub fn contains_element(&self, a: &OrderElement) -> bool {
        self.contains(&a.coords())
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &LatticeBasis) -> bool {
        other.basis.columns().iter().all(|c| self.contains(c))
    }

    /// The lattice point with the given integer coordinates in this basis.
    pub fn point(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        self.basis.mul_vec(coeffs)
    }
}

fn check_length(ring: &QuotientRing, n: usize) -> Result<()> {
    if n == ring.degree() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "Construction A needs code length {} (the degree of K), got {n}",
            ring.degree()
        )))
    }
}

/// `rho^{-1}` of the additive group spanned by `words`: lifts of
/// `theta^j * word` together with `p` times the standard basis of `Lambda`.
pub fn construction_a_from_words(
    ring: &QuotientRing,
    words: &[Codeword],
    form: &TraceForm,
) -> Result<LatticeBasis> {
    let n = ring.degree();
    let p = BigInt::from(ring.p());
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for w in words {
        check_length(ring, w.len())?;
        for j in 0..n {
            let mut t = vec![0i64; j + 1];
            t[j] = 1;
            let theta_j = ring.element(&t);
            let scaled = Codeword(w.0.iter().map(|a| ring.mul(&theta_j, a)).collect());
            gens.push(lift_codeword(ring, &scaled).coords());
        }
    }
    gens.extend(IntMatrix::scalar(n * n, &p).columns());
    LatticeBasis::from_generators(ring, &gens, form)
}

/// The Construction A lattice `L = rho^{-1}(C)` under the algebra's
/// standard trace form.
pub fn construction_a(code: &ConstacyclicCode) -> Result<LatticeBasis> {
    construction_a_with_form(code, &TraceForm::standard(code.ring()))
}

pub fn construction_a_with_form(code: &ConstacyclicCode, form: &TraceForm) -> Result<LatticeBasis> {
    check_length(code.ring(), code.length())?;
    construction_a_from_words(code.ring(), &code.additive_generators(), form)
}

/// `L' = rho^{-1}(C^perp)`. Uses the dual generator when `u^2 = 1` and an
/// exhaustive dual otherwise.
pub fn dual_code_lattice(code: &ConstacyclicCode, bound: u128) -> Result<LatticeBasis> {
    match code.dual() {
        Ok(dual) => construction_a(&dual),
        Err(Error::UnsupportedU) => {
            let words = code.brute_force_dual(bound)?;
            construction_a_from_words(code.ring(), &words, &TraceForm::standard(code.ring()))
        }
        Err(e) => Err(e),
    }
}

/// Whether `rho^{-1}(A)` is contained in `rho^{-1}(B^perp)`.
pub fn dual_lattice_inclusion_check(
    code_a: &ConstacyclicCode,
    code_b: &ConstacyclicCode,
    bound: u128,
) -> Result<bool> {
    let la = construction_a(code_a)?;
    let lb = dual_code_lattice(code_b, bound)?;
    Ok(lb.contains_lattice(&la))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_ring::AlgebraSpec;

    fn gaussian(p: i64) -> QuotientRing {
        QuotientRing::new(AlgebraSpec {
            min_poly: vec![1, 0, 1],
            sigma_image: vec![0, -1],
            u: -1,
            p,
            conjugation_mode: ConjugationMode::Complex,
            assume_division: true,
        })
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn lift_and_reduce() {
        let r = gaussian(3);
        let v = Codeword(vec![r.element(&[1, 1]), r.one()]);
        let lifted = lift_codeword(&r, &v);
        assert_eq!(
            lifted,
            OrderElement::from_int_rows(&[vec![1, 1], vec![1, 0]])
        );
        assert_eq!(rho_reduce(&r, &lifted), v);
        let w = OrderElement::from_int_rows(&[vec![4, -7], vec![2, 9]]);
        assert!(rho_reduce(&r, &w.scale(&BigInt::from(3)))
            .0
            .iter()
            .all(|a| a.is_zero()));
        assert!(lift_codeword(&r, &Codeword::zero(&r, 2)).is_zero());
    }

    #[test]
    fn gaussian_lambda_gram_is_twice_identity() {
        let r = gaussian(3);
        let g = TraceForm::standard(&r).lambda_gram(&r).unwrap();
        assert_eq!(g, IntMatrix::scalar(4, &BigInt::from(2)));
        assert_eq!(g.det(), BigInt::from(16));
    }

    #[test]
    fn identity_mode_on_imaginary_field_is_indefinite() {
        let r = gaussian(3);
        let form = TraceForm {
            conjugation: ConjugationMode::Identity,
            e_weights: ints(&[1, 1]),
        };
        assert!(matches!(
            form.lambda_gram(&r),
            Err(Error::IndefiniteForm(_))
        ));
    }

    #[test]
    fn real_quadratic_gram() {
        let r = QuotientRing::new(AlgebraSpec {
            min_poly: vec![-2, 0, 1],
            sigma_image: vec![0, -1],
            u: -5,
            p: 3,
            conjugation_mode: ConjugationMode::Identity,
            assume_division: true,
        })
        .unwrap();
        let unit = TraceForm::standard(&r).lambda_gram(&r).unwrap();
        assert_eq!(
            unit,
            IntMatrix::from_rows(&[
                vec![2, 0, 0, 0],
                vec![0, 4, 0, 0],
                vec![0, 0, 2, 0],
                vec![0, 0, 0, 4],
            ])
        );
        let weighted = TraceForm::with_u_weights(&r).lambda_gram(&r).unwrap();
        let diag: Vec<_> = (0..4).map(|i| weighted[(i, i)].clone()).collect();
        assert_eq!(diag, ints(&[2, 4, 10, 20]));
    }

    #[test]
    fn order_multiplication() {
        let r = gaussian(3);
        let e = OrderElement::from_int_rows(&[vec![0, 0], vec![1, 0]]);
        let i = OrderElement::from_int_rows(&[vec![0, 1], vec![0, 0]]);
        // e i = -i e, e^2 = -1
        assert_eq!(
            e.mul(&i, &r),
            OrderElement::from_int_rows(&[vec![0, 0], vec![0, -1]])
        );
        assert_eq!(
            e.mul(&e, &r),
            OrderElement::from_int_rows(&[vec![-1, 0], vec![0, 0]])
        );
        // (1 + i + e)(1 - i - e) = 3
        let x = OrderElement::from_int_rows(&[vec![1, 1], vec![1, 0]]);
        let y = OrderElement::from_int_rows(&[vec![1, -1], vec![-1, 0]]);
        assert_eq!(
            x.mul(&y, &r),
            OrderElement::from_int_rows(&[vec![3, 0], vec![0, 0]])
        );
    }

    #[test]
    fn trivial_codes() {
        let r = gaussian(3);
        let s = r.skew();
        let full = ConstacyclicCode::for_algebra(&r, &s.poly(&[&[1]])).unwrap();
        assert_eq!(construction_a(&full).unwrap().basis, IntMatrix::identity(4));
        let zero = ConstacyclicCode::for_algebra(&r, &s.poly(&[&[1], &[], &[1]])).unwrap();
        let lz = construction_a(&zero).unwrap();
        assert_eq!(lz.basis, IntMatrix::scalar(4, &BigInt::from(3)));
        assert_eq!(lz.index_in_lambda, BigInt::from(81));
    }

    #[test]
    fn example_one_lattice() {
        let r = gaussian(3);
        let code = ConstacyclicCode::for_algebra(&r, &r.skew().poly(&[&[1, 1], &[1]])).unwrap();
        let l = construction_a(&code).unwrap();
        assert_eq!(l.dimension(), 4);
        assert_eq!(l.index_in_lambda, BigInt::from(9));
        assert_eq!(l.det, BigInt::from(1296));
        assert!(l.gram.is_symmetric());
        assert!(l.basis.is_lower_triangular());
        assert!(l.contains_element(&OrderElement::from_int_rows(&[vec![1, 1], vec![1, 0]])));
        assert!(!l.contains_element(&OrderElement::from_int_rows(&[vec![1, 1], vec![0, 0]])));
    }
}
