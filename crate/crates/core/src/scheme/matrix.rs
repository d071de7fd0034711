//! Dense square matrices over the rationals, stored as `i128` numerators
//! over one shared positive denominator. Every operation is checked and
//! reports [`Error::Overflow`] rather than wrapping.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    dim: usize,
    num: Vec<i128>,
    den: i128,
}

const OVERFLOW: &str = "exact matrix arithmetic";

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow(OVERFLOW))
}

impl QMatrix {
    pub fn zeros(dim: usize) -> Self {
        QMatrix {
            dim,
            num: vec![0; dim * dim],
            den: 1,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.num[i * dim + i] = 1;
        }
        m
    }

    /// Builds `num[i][j] / den` from a generator, reducing to lowest terms.
    pub fn from_fn(dim: usize, den: i128, f: impl Fn(usize, usize) -> i128 + Sync) -> Result<Self> {
        if den == 0 {
            return Err(Error::internal("zero denominator"));
        }
        let num: Vec<i128> = (0..dim * dim).into_par_iter().map(|k| f(k / dim, k % dim)).collect();
        QMatrix { dim, num, den }.reduced()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        BigRational::new(BigInt::from(self.num[i * self.dim + j]), BigInt::from(self.den))
    }

    /// The numerator at `(i, j)` over [`QMatrix::denominator`].
    pub fn numerator(&self, i: usize, j: usize) -> i128 {
        self.num[i * self.dim + j]
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    fn reduced(mut self) -> Result<Self> {
        if self.den < 0 {
            self.den = ck(self.den.checked_neg())?;
            for x in &mut self.num {
                *x = ck(x.checked_neg())?;
            }
        }
        let g = self.num.iter().fold(self.den, |g, &x| g.gcd(&x));
        if g > 1 {
            self.den /= g;
            for x in &mut self.num {
                *x /= g;
            }
        }
        Ok(self)
    }

    fn same_dim(&self, other: &QMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DegreeMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// Both numerator vectors over the least common denominator.
    fn aligned(&self, other: &QMatrix) -> Result<(Vec<i128>, Vec<i128>, i128)> {
        let l = self.den.lcm(&other.den);
        let (sa, sb) = (l / self.den, l / other.den);
        let a = self.num.iter().map(|&x| ck(x.checked_mul(sa))).collect::<Result<_>>()?;
        let b = other.num.iter().map(|&x| ck(x.checked_mul(sb))).collect::<Result<_>>()?;
        Ok((a, b, l))
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        self.same_dim(other)?;
        let (a, b, den) = self.aligned(other)?;
        let num = a.iter().zip(&b).map(|(x, y)| ck(x.checked_add(*y))).collect::<Result<_>>()?;
        QMatrix { dim: self.dim, num, den }.reduced()
    }

    /// Multiplies by `p / q`.
    pub fn scale(&self, p: i128, q: i128) -> Result<QMatrix> {
        if q == 0 {
            return Err(Error::internal("division by zero"));
        }
        let num = self.num.iter().map(|&x| ck(x.checked_mul(p))).collect::<Result<_>>()?;
        QMatrix {
            dim: self.dim,
            num,
            den: ck(self.den.checked_mul(q))?,
        }
        .reduced()
    }

    /// Ordinary matrix product, rows computed in parallel.
    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        self.same_dim(other)?;
        let d = self.dim;
        let rows: Vec<Result<Vec<i128>>> = (0..d)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![0i128; d];
                for j in 0..d {
                    let a = self.num[i * d + j];
                    if a == 0 {
                        continue;
                    }
                    let brow = &other.num[j * d..(j + 1) * d];
                    for (acc, &b) in row.iter_mut().zip(brow) {
                        if b != 0 {
                            *acc = ck(acc.checked_add(ck(a.checked_mul(b))?))?;
                        }
                    }
                }
                Ok(row)
            })
            .collect();
        let mut num = Vec::with_capacity(d * d);
        for r in rows {
            num.extend(r?);
        }
        QMatrix {
            dim: d,
            num,
            den: ck(self.den.checked_mul(other.den))?,
        }
        .reduced()
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard(&self, other: &QMatrix) -> Result<QMatrix> {
        self.same_dim(other)?;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(x, y)| ck(x.checked_mul(*y)))
            .collect::<Result<_>>()?;
        QMatrix {
            dim: self.dim,
            num,
            den: ck(self.den.checked_mul(other.den))?,
        }
        .reduced()
    }

    pub fn trace(&self) -> BigRational {
        let t: i128 = (0..self.dim).map(|i| self.num[i * self.dim + i]).sum();
        BigRational::new(t.into(), self.den.into())
    }

    /// `trace(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &QMatrix) -> Result<BigRational> {
        self.same_dim(other)?;
        let d = self.dim;
        let mut t = BigInt::from(0);
        for i in 0..d {
            for j in 0..d {
                t += BigInt::from(self.num[i * d + j]) * BigInt::from(other.num[j * d + i]);
            }
        }
        Ok(BigRational::new(t, BigInt::from(self.den) * BigInt::from(other.den)))
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&x| x == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..i).all(|j| self.num[i * d + j] == self.num[j * d + i]))
    }

    /// Row-major entries as rationals (for rank computations).
    pub fn to_rationals(&self) -> Vec<BigRational> {
        let den = BigInt::from(self.den);
        self.num
            .iter()
            .map(|&x| BigRational::new(BigInt::from(x), den.clone()))
            .collect()
    }
}

/// Rank of a list of equal-length rational vectors by Gaussian elimination.
pub fn rank(vectors: &[Vec<BigRational>]) -> usize {
    use num_traits::Zero;
    let mut rows: Vec<Vec<BigRational>> = vectors.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &pivot_row[col];
            for c in col..width {
                let delta = &factor * &pivot_row[c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
