//! Matrix representation of order elements, determinant sampling and coset
//! coding over a Construction A lattice.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::codes::{Codeword, ConstacyclicCode};
use crate::error::{Error, Result};
use crate::lattice::{lift_codeword, rho_reduce, OrderElement};
use crate::matrix::IntMatrix;
use crate::number_ring::{NumberRing, QuotientRing, RingElement};

/// An `n x n` matrix with entries in `O_K`, each entry a coordinate vector in
/// the power basis of `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceTimeMatrix {
    entries: Vec<Vec<Vec<BigInt>>>,
}

impl SpaceTimeMatrix {
    pub fn from_entries(entries: Vec<Vec<Vec<BigInt>>>) -> Self {
        let n = entries.len();
        assert!(
            entries.iter().all(|r| r.len() == n),
            "space-time matrix must be square"
        );
        SpaceTimeMatrix { entries }
    }

    pub fn identity(z: &NumberRing, n: usize) -> Self {
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { z.from_int(1) } else { z.zero() })
                    .collect()
            })
            .collect();
        SpaceTimeMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &[BigInt] {
        &self.entries[r][c]
    }

    pub fn entries(&self) -> &[Vec<Vec<BigInt>>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, z: &NumberRing, other: &Self) -> Self {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| z.add(x, y)).collect())
            .collect();
        SpaceTimeMatrix { entries }
    }

    pub fn sub(&self, z: &NumberRing, other: &Self) -> Self {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| z.sub(x, y)).collect())
            .collect();
        SpaceTimeMatrix { entries }
    }

    pub fn mul(&self, z: &NumberRing, other: &Self) -> Self {
        let n = self.size();
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (0..n).fold(z.zero(), |acc, k| {
                            z.add(&acc, &z.mul(&self.entries[r][k], &other.entries[k][c]))
                        })
                    })
                    .collect()
            })
            .collect();
        SpaceTimeMatrix { entries }
    }

    /// Determinant in `O_K` by cofactor expansion along the first row.
    pub fn det(&self, z: &NumberRing) -> Vec<BigInt> {
        let cols: Vec<usize> = (0..self.size()).collect();
        self.laplace(z, 0, &cols)
    }

    fn laplace(&self, z: &NumberRing, row: usize, cols: &[usize]) -> Vec<BigInt> {
        match cols {
            [] => z.from_int(1),
            [c] => self.entries[row][*c].clone(),
            _ => {
                let mut acc = z.zero();
                for (k, &c) in cols.iter().enumerate() {
                    let a = &self.entries[row][c];
                    if a.iter().all(Zero::is_zero) {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                    let term = z.mul(a, &self.laplace(z, row + 1, &rest));
                    acc = if k % 2 == 0 {
                        z.add(&acc, &term)
                    } else {
                        z.sub(&acc, &term)
                    };
                }
                acc
            }
        }
    }

    /// The `n d x n d` integer matrix obtained by replacing each entry with
    /// its multiplication matrix on `O_K` (`d = [K : Q]`).
    pub fn regular_representation(&self, z: &NumberRing) -> IntMatrix {
        let n = self.size();
        let d = z.degree();
        let mut out = IntMatrix::zeros(n * d, n * d);
        for r in 0..n {
            for c in 0..n {
                let block = z.mult_matrix(&self.entries[r][c]);
                for i in 0..d {
                    for j in 0..d {
                        out[(r * d + i, c * d + j)] = block[(i, j)].clone();
                    }
                }
            }
        }
        out
    }

    /// Whether this is the identity matrix.
    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(c, x)| {
                x.iter().enumerate().all(|(i, v)| {
                    if r == c && i == 0 {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
        })
    }

    /// `N_{K/Q}(det M)`.
    pub fn det_norm(&self, z: &NumberRing) -> BigInt {
        z.norm(&self.det(z))
    }
}

impl Serialize for SpaceTimeMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for row in &self.entries {
            seq.serialize_element(&Row(row))?;
        }
        seq.end()
    }
}

struct Row<'a>(&'a [Vec<BigInt>]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::serde_int::nested::serialize(self.0, s)
    }
}

impl<'de> Deserialize<'de> for SpaceTimeMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct R(#[serde(with = "crate::serde_int::nested")] Vec<Vec<BigInt>>);
        let rows = Vec::<R>::deserialize(d)?;
        let n = rows.len();
        if rows.iter().any(|r| r.0.len() != n) {
            return Err(serde::de::Error::custom("space-time matrix must be square"));
        }
        Ok(SpaceTimeMatrix {
            entries: rows.into_iter().map(|r| r.0).collect(),
        })
    }
}

/// `M(a)`: entry `(r, c)` is `sigma^c(a_{r-c})` on and below the diagonal and
/// `u sigma^c(a_{n-c+r})` above it.
///
/// With `e k = sigma(k) e` this reverses products: `M(ab) = M(b) M(a)`.
pub fn matrix_rep(ring: &QuotientRing, a: &OrderElement) -> SpaceTimeMatrix {
    let z = ring.integers();
    let n = a.n();
    let u = BigInt::from(ring.spec().u);
    let entries = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r >= c {
                        z.sigma(a.component(r - c), c as i64)
                    } else {
                        z.scale(&u, &z.sigma(a.component(n - c + r), c as i64))
                    }
                })
                .collect()
        })
        .collect();
    SpaceTimeMatrix { entries }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug)]
pub struct SampleOptions {
    /// Largest pair space `(2 b + 1)^N` swept exhaustively.
    pub bound: u128,
    pub seed: u64,
    /// Pairs drawn when the space is too large.
    pub random_pairs: usize,
    pub force_exhaustive: bool,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            bound: crate::number_ring::DEFAULT_ENUMERATION_BOUND,
            seed: 0,
            random_pairs: 10_000,
            force_exhaustive: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinDetReport {
    #[serde(with = "crate::serde_int")]
    pub min_abs_norm: BigInt,
    /// A difference `a - a'` attaining the minimum.
    pub witness: OrderElement,
    pub mode: SampleMode,
    /// Number of differences evaluated.
    pub evaluated: u64,
}

/// Minimum of `|N(det(M(a) - M(a')))|` over distinct lattice points
/// `a = B c`, `a' = B c'` with `c, c'` in `[-b, b]^N`.
///
/// The exhaustive sweep runs over the differences `c - c'`, which range over
/// `[-2b, 2b]^N` without zero. The result is a sample, not a proof of the
/// division property.
pub fn min_det_sample(
    ring: &QuotientRing,
    basis: &IntMatrix,
    coeff_bound: u32,
    opts: &SampleOptions,
) -> Result<MinDetReport> {
    let n = ring.degree();
    let dim = basis.cols();
    let side = 2 * coeff_bound as u128 + 1;
    let space = side.checked_pow(dim as u32);
    let fits = space.is_some_and(|s| s <= opts.bound);
    if !fits && opts.force_exhaustive {
        return Err(Error::TooLarge {
            count: space.unwrap_or(u128::MAX),
            bound: opts.bound,
        });
    }
    let eval = |d: &[i64]| -> (BigInt, OrderElement) {
        let c: Vec<BigInt> = d.iter().map(|&v| BigInt::from(v)).collect();
        let a = OrderElement::from_coords(n, &basis.mul_vec(&c));
        let norm = matrix_rep(ring, &a).det_norm(ring.integers()).abs();
        (norm, a)
    };
    let best = if fits {
        let b = 2 * coeff_bound as i64;
        let width = (2 * b + 1) as u128;
        let total = width.pow(dim as u32);
        let origin = total / 2;
        let found = (0..total)
            .into_par_iter()
            .filter(|&idx| idx != origin)
            .map(|idx| {
                let mut rest = idx;
                let d: Vec<i64> = (0..dim)
                    .map(|_| {
                        let v = (rest % width) as i64 - b;
                        rest /= width;
                        v
                    })
                    .collect();
                let (norm, a) = eval(&d);
                (norm, idx, a)
            })
            .min_by(|x, y| (&x.0, x.1).cmp(&(&y.0, y.1)));
        found.map(|(norm, _, a)| (norm, a, SampleMode::Exhaustive, (total - 1) as u64))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let b = coeff_bound as i64;
        let pairs: Vec<Vec<i64>> = (0..opts.random_pairs)
            .map(|_| {
                (0..dim)
                    .map(|_| rng.gen_range(-b..=b) - rng.gen_range(-b..=b))
                    .collect()
            })
            .filter(|d: &Vec<i64>| d.iter().any(|&v| v != 0))
            .collect();
        let evaluated = pairs.len() as u64;
        pairs
            .par_iter()
            .enumerate()
            .map(|(i, d)| {
                let (norm, a) = eval(d);
                (norm, i, a)
            })
            .min_by(|x, y| (&x.0, x.1).cmp(&(&y.0, y.1)))
            .map(|(norm, _, a)| (norm, a, SampleMode::Random, evaluated))
    };
    let (min_abs_norm, witness, mode, evaluated) = best.ok_or_else(|| {
        Error::Unsupported("no distinct pairs to sample (empty basis or zero bound)".into())
    })?;
    Ok(MinDetReport {
        min_abs_norm,
        witness,
        mode,
        evaluated,
    })
}

/// A lattice point split into its code label and its `p Lambda` part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetEncoding {
    pub codeword: Codeword,
    pub offset: OrderElement,
    pub point: OrderElement,
}

/// `point = lift(encode(msg)) + p * offset_coords`.
pub fn coset_encode(
    code: &ConstacyclicCode,
    msg: &[RingElement],
    offset_coords: &[BigInt],
) -> Result<CosetEncoding> {
    let ring = code.ring();
    let n = code.length();
    if offset_coords.len() != n * n {
        return Err(Error::LengthMismatch {
            expected: n * n,
            got: offset_coords.len(),
        });
    }
    let codeword = code.encode(msg)?;
    let offset = OrderElement::from_coords(n, offset_coords).scale(&BigInt::from(ring.p()));
    let point = lift_codeword(ring, &codeword).add(&offset);
    Ok(CosetEncoding {
        codeword,
        offset,
        point,
    })
}

/// Recovers the codeword label and the `p Lambda` offset of a lattice point.
pub fn coset_decode_label(code: &ConstacyclicCode, point: &OrderElement) -> Result<CosetEncoding> {
    let ring = code.ring();
    if point.n() != code.length() {
        return Err(Error::LengthMismatch {
            expected: code.length(),
            got: point.n(),
        });
    }
    let codeword = rho_reduce(ring, point);
    if !code.contains(&codeword)? {
        return Err(Error::NotInLattice);
    }
    let offset = point.sub(&lift_codeword(ring, &codeword));
    Ok(CosetEncoding {
        codeword,
        offset,
        point: point.clone(),
    })
}

/// `count` vectors drawn uniformly from `[-box_, box_]^dim`.
pub fn sample_offsets(seed: u64, count: usize, box_: u32, dim: usize) -> Vec<Vec<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = box_ as i64;
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| BigInt::from(rng.gen_range(-b..=b)))
                .collect()
        })
        .collect()
}
