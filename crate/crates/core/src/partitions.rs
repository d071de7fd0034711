//! Integer partitions: enumeration, dominance, refinement, and the counting
//! functions (multinomials, hook-length degrees, Kostka numbers) built on them.
//!
//! Every list "indexed by partitions" in this crate uses the reverse
//! lexicographic order produced by [`partitions_of`]: `(n)` first, `(1ⁿ)` last.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The derived `Ord` is lexicographic on the parts, so for partitions of the
/// same weight it is the reverse of the canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition { parts: vec![n] }
    }

    /// The one-column partition `(1ⁿ)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// `(n-t, 1, …, 1)` with `t` ones, the shape of `t`-transitivity.
    /// When `t >= n - 1` this is `(1ⁿ)`.
    pub fn hook(n: usize, t: usize) -> Self {
        if t + 1 >= n {
            return Partition::column(n);
        }
        let mut parts = vec![n - t];
        parts.extend(std::iter::repeat(1).take(t));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `d(ν) = ν₂ + ν₃ + ⋯`, the number of boxes below the first row.
    pub fn depth(&self) -> usize {
        self.weight() - self.part(0)
    }

    /// `n! / ∏ λᵢ!`: the number of tabloids of this shape.
    pub fn multinomial(&self) -> BigUint {
        let mut out = factorial(self.weight());
        for &p in &self.parts {
            out /= factorial(p);
        }
        out
    }

    /// Degree `f_λ` of the irreducible character, by the hook-length formula.
    pub fn hook_degree(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks *= (arm + leg + 1) as u64;
            }
        }
        factorial(self.weight()) / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts such as `5,2,1`, optionally parenthesised.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let mut parts = Vec::new();
        let mut column = 1;
        for piece in inner.split(',') {
            let t = piece.trim();
            let v: usize = t
                .parse()
                .map_err(|_| Error::parse(1, column, format!("'{t}' is not a positive integer")))?;
            parts.push(v);
            column += piece.len() + 1;
        }
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

fn same_weight(a: &Partition, b: &Partition) -> Result<()> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            expected: a.weight(),
            found: b.weight(),
        });
    }
    Ok(())
}

/// All partitions of `n` in canonical (reverse lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Whether `mu ⊵ la`: every prefix sum of `mu` is at least that of `la`.
pub fn dominates(mu: &Partition, la: &Partition) -> Result<bool> {
    same_weight(mu, la)?;
    Ok(dominates_unchecked(mu, la))
}

pub(crate) fn dominates_unchecked(mu: &Partition, la: &Partition) -> bool {
    let (mut sm, mut sl) = (0, 0);
    for i in 0..mu.len().max(la.len()) {
        sm += mu.part(i);
        sl += la.part(i);
        if sm < sl {
            return false;
        }
    }
    true
}

/// Whether the parts of `alpha` can be grouped so the groups sum to the parts of `la`.
pub fn refines(alpha: &Partition, la: &Partition) -> Result<bool> {
    same_weight(alpha, la)?;
    Ok(refines_unchecked(alpha, la))
}

pub(crate) fn refines_unchecked(alpha: &Partition, la: &Partition) -> bool {
    fn pack(items: &[usize], bins: &mut Vec<usize>) -> bool {
        let Some((&first, rest)) = items.split_first() else {
            return bins.iter().all(|&b| b == 0);
        };
        for i in 0..bins.len() {
            if bins[i] < first || bins[..i].contains(&bins[i]) {
                continue;
            }
            bins[i] -= first;
            let ok = pack(rest, bins);
            bins[i] += first;
            if ok {
                return true;
            }
        }
        false
    }
    pack(&alpha.parts, &mut la.parts.clone())
}

/// Kostka number `K_{ν,λ}`: semistandard tableaux of shape `nu` with content `la`.
///
/// Counts chains of horizontal strips: the cells holding `i` form a
/// horizontal strip of size `la[i]` added to the cells holding smaller values.
pub fn kostka(nu: &Partition, la: &Partition) -> Result<u64> {
    same_weight(nu, la)?;
    let rows = nu.len();
    let mut memo: HashMap<(usize, Vec<usize>), u64> = HashMap::new();
    Ok(kostka_rec(nu, &la.parts, 0, vec![0; rows], &mut memo))
}

fn kostka_rec(
    nu: &Partition,
    content: &[usize],
    step: usize,
    shape: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), u64>,
) -> u64 {
    if step == content.len() {
        return u64::from(shape.as_slice() == nu.parts());
    }
    if let Some(&v) = memo.get(&(step, shape.clone())) {
        return v;
    }
    // Row r may grow up to nu[r] and, to stay a horizontal strip, up to the
    // old length of row r-1.
    let mut total = 0;
    let mut next = shape.clone();
    fn place(
        r: usize,
        left: usize,
        nu: &Partition,
        shape: &[usize],
        next: &mut Vec<usize>,
        content: &[usize],
        step: usize,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
        total: &mut u64,
    ) {
        if r == shape.len() {
            if left == 0 {
                *total += kostka_rec(nu, content, step + 1, next.clone(), memo);
            }
            return;
        }
        let cap = if r == 0 { nu.part(0) } else { nu.part(r).min(shape[r - 1]) };
        let room = cap.saturating_sub(shape[r]);
        for add in 0..=room.min(left) {
            next[r] = shape[r] + add;
            place(r + 1, left - add, nu, shape, next, content, step, memo, total);
        }
        next[r] = shape[r];
    }
    place(0, content[step], nu, &shape, &mut next, content, step, memo, &mut total);
    memo.insert((step, shape), total);
    total
}

/// Every `mu ⊵ la`, in canonical order (so `(n)` first, `la` last).
pub fn up_set(la: &Partition) -> Vec<Partition> {
    partitions_of(la.weight())
        .into_iter()
        .filter(|mu| dominates_unchecked(mu, la))
        .collect()
}

/// The canonical partition list of `n` with position lookup.
#[derive(Debug, Clone)]
pub struct PartitionIndex {
    partitions: Vec<Partition>,
    positions: HashMap<Partition, usize>,
}

impl PartitionIndex {
    pub fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let positions = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        PartitionIndex { partitions, positions }
    }

    pub fn n(&self) -> usize {
        self.partitions.first().map(Partition::weight).unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.partitions[i]
    }

    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.positions.get(p).copied()
    }
}
