//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.
//!
//! Shapes are handled as beta-sets (first-column hook lengths): removing a
//! border strip of length `r` moves one bead from `b` to `b - r`, with sign
//! `(-1)^(beads strictly between)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition, PartitionIndex};

pub const DEFAULT_TABLE_CAP: usize = 12;

/// Memoised character evaluator. The memo is keyed on the remaining shape and
/// the remaining cycle lengths (sorted decreasing, largest removed first), so
/// one evaluator can be reused across many `(μ, α)` pairs of the same weight.
#[derive(Debug, Default)]
pub struct MnEvaluator {
    memo: HashMap<(Vec<usize>, Vec<usize>), BigInt>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn eval(&mut self, mu: &Partition, alpha: &Partition) -> Result<BigInt> {
        if mu.weight() != alpha.weight() {
            return Err(Error::WeightMismatch {
                expected: mu.weight(),
                found: alpha.weight(),
            });
        }
        Ok(self.rec(mu.parts().to_vec(), alpha.parts()))
    }

    fn rec(&mut self, shape: Vec<usize>, cycles: &[usize]) -> BigInt {
        let Some((&r, rest)) = cycles.split_first() else {
            return BigInt::one();
        };
        if rest.is_empty() {
            // A single strip must be the whole shape, which is then a hook.
            return match hook_leg(&shape, r) {
                Some(leg) => sign(leg),
                None => BigInt::zero(),
            };
        }
        let key = (shape, cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let shape = &key.0;
        let len = shape.len();
        let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = BigInt::zero();
        for &b in &beta {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let between = beta.iter().filter(|&&c| c > target && c < b).count();
            let mut next: Vec<usize> = beta.iter().map(|&c| if c == b { target } else { c }).collect();
            next.sort_unstable_by(|x, y| y.cmp(x));
            let smaller: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(i, &c)| c - (len - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            let value = self.rec(smaller, rest);
            if between % 2 == 0 {
                total += value;
            } else {
                total -= value;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// For a hook shape of weight `r`, its leg length; `None` otherwise.
fn hook_leg(shape: &[usize], r: usize) -> Option<usize> {
    let weight: usize = shape.iter().sum();
    if weight != r || shape.iter().skip(1).any(|&p| p != 1) {
        return None;
    }
    Some(shape.len() - 1)
}

fn sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `χ^μ(α)` for a single pair.
pub fn mn_character(mu: &Partition, alpha: &Partition) -> Result<BigInt> {
    MnEvaluator::new().eval(mu, alpha)
}

/// `|C_α| = n! / ∏_v v^{m_v} m_v!`.
pub fn class_size(alpha: &Partition) -> BigUint {
    let mut denom = BigUint::one();
    for (v, m) in alpha.multiplicities() {
        denom *= BigUint::from(v).pow(m as u32) * factorial(m);
    }
    factorial(alpha.weight()) / denom
}

/// The full character table of `S_n`, rows `μ` and columns `α` both in
/// canonical partition order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    index: PartitionIndex,
    values: Vec<Vec<BigInt>>,
    degrees: Vec<BigUint>,
    class_sizes: Vec<BigUint>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.partitions()
    }

    pub fn index(&self) -> &PartitionIndex {
        &self.index
    }

    pub fn values(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn value(&self, mu: usize, alpha: usize) -> &BigInt {
        &self.values[mu][alpha]
    }

    pub fn chi(&self, mu: &Partition, alpha: &Partition) -> Option<&BigInt> {
        Some(&self.values[self.index.position(mu)?][self.index.position(alpha)?])
    }

    pub fn degrees(&self) -> &[BigUint] {
        &self.degrees
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    /// Checks the degree column, `Σ f² = n!`, and both orthogonality relations.
    pub fn verify(&self) -> Result<()> {
        let k = self.index.len();
        let nfact = BigInt::from(factorial(self.n));
        let identity_col = k - 1;
        let mut sum_sq = BigUint::zero();
        for mu in 0..k {
            let f = BigInt::from(self.degrees[mu].clone());
            if self.values[mu][identity_col] != f {
                return Err(Error::internal(format!("degree column wrong at {:?}", self.index.get(mu))));
            }
            if self.index.get(mu).hook_degree() != self.degrees[mu] {
                return Err(Error::internal("degree differs from hook-length formula"));
            }
            sum_sq += &self.degrees[mu] * &self.degrees[mu];
        }
        if BigInt::from(sum_sq) != nfact {
            return Err(Error::internal("sum of squared degrees is not n!"));
        }
        for mu in 0..k {
            for nu in mu..k {
                let s: BigInt = (0..k)
                    .map(|a| BigInt::from(self.class_sizes[a].clone()) * &self.values[mu][a] * &self.values[nu][a])
                    .sum();
                let want = if mu == nu { nfact.clone() } else { BigInt::zero() };
                if s != want {
                    return Err(Error::internal(format!(
                        "row orthogonality fails at {:?}, {:?}",
                        self.index.get(mu),
                        self.index.get(nu)
                    )));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let s: BigInt = (0..k).map(|mu| &self.values[mu][a] * &self.values[mu][b]).sum();
                let want = if a == b {
                    &nfact / BigInt::from(self.class_sizes[a].clone())
                } else {
                    BigInt::zero()
                };
                if s != want {
                    return Err(Error::internal(format!(
                        "column orthogonality fails at {:?}, {:?}",
                        self.index.get(a),
                        self.index.get(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Largest absolute entry, useful for sizing fixed-width arithmetic.
    pub fn max_abs(&self) -> BigInt {
        self.values.iter().flatten().map(|v| v.abs()).max().unwrap_or_default()
    }
}

/// Builds the table for `S_n`, rejecting `n > cap`. Rows are evaluated in
/// parallel, each with its own memo.
pub fn character_table(n: usize, cap: usize) -> Result<CharacterTable> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "character table degree",
            cap: cap as u128,
            reached: n as u128,
        });
    }
    if n == 0 {
        return Err(Error::invalid("character tables need n >= 1"));
    }
    let index = PartitionIndex::new(n);
    let parts = index.partitions();
    let values: Vec<Vec<BigInt>> = parts
        .par_iter()
        .map(|mu| {
            let mut ev = MnEvaluator::new();
            parts
                .iter()
                .map(|alpha| ev.eval(mu, alpha).expect("equal weights"))
                .collect()
        })
        .collect();
    let degrees = parts.iter().map(Partition::hook_degree).collect();
    let class_sizes = parts.iter().map(class_size).collect();
    Ok(CharacterTable {
        n,
        index,
        values,
        degrees,
        class_sizes,
    })
}
