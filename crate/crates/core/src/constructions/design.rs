//! Block designs: strength detection and the `ν_{i,j}` block counts.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};

/// A set of `k`-subsets ("blocks") of `{1..n}` with its recomputed strength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDesign {
    n: usize,
    k: usize,
    blocks: Vec<Vec<usize>>,
    strength: usize,
    /// `ν_{i,j}` for `i + j ≤ strength`.
    nu: BTreeMap<(usize, usize), u64>,
}

impl BlockDesign {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Blocks as ascending point lists, in input order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Largest `t ≤ k` such that every `t`-subset lies in the same number of blocks.
    pub fn strength(&self) -> usize {
        self.strength
    }

    /// The coverage constant at the design's strength.
    pub fn index(&self) -> u64 {
        self.nu[&(self.strength, 0)]
    }

    /// Number of blocks containing a given `i`-set and missing a disjoint
    /// `j`-set, defined for `i + j ≤ strength`.
    pub fn nu(&self, i: usize, j: usize) -> Option<u64> {
        self.nu.get(&(i, j)).copied()
    }

    pub fn nu_table(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.nu
    }
}

fn mask(points: &[usize]) -> u128 {
    points.iter().fold(0u128, |m, &x| m | 1 << (x - 1))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Calls `f` on the bitmask of every `size`-subset of `items`.
fn for_each_subset(items: &[usize], size: usize, f: &mut impl FnMut(u128)) {
    fn go(items: &[usize], size: usize, acc: u128, f: &mut impl FnMut(u128)) {
        if size == 0 {
            f(acc);
            return;
        }
        for i in 0..items.len() {
            if items.len() - i < size {
                break;
            }
            go(&items[i + 1..], size - 1, acc | 1 << (items[i] - 1), f);
        }
    }
    go(items, size, 0, f);
}

/// Validates blocks and computes the strength and full `ν_{i,j}` table by
/// direct counting. If `claimed_strength` is given the design must reach it.
pub fn validate_design(
    n: usize,
    k: usize,
    blocks: &[Vec<usize>],
    claimed_strength: Option<usize>,
) -> Result<BlockDesign> {
    if n == 0 || n > 128 {
        return Err(Error::invalid(format!("design point count {n} must be in 1..=128")));
    }
    if k == 0 || k > n {
        return Err(Error::invalid(format!("block size {k} must be in 1..={n}")));
    }
    if blocks.is_empty() {
        return Err(Error::invalid("a design needs at least one block"));
    }
    let mut seen = HashSet::new();
    let mut sorted_blocks = Vec::with_capacity(blocks.len());
    for (i, b) in blocks.iter().enumerate() {
        let mut b = b.clone();
        b.sort_unstable();
        if b.len() != k || b.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("block {} does not have {k} distinct points", i + 1)));
        }
        if b.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::invalid(format!("block {} has a point outside 1..{n}", i + 1)));
        }
        if !seen.insert(b.clone()) {
            return Err(Error::invalid(format!("block {:?} is repeated", b)));
        }
        sorted_blocks.push(b);
    }
    let block_masks: Vec<u128> = sorted_blocks.iter().map(|b| mask(b)).collect();

    let mut strength = 0;
    for t in 1..=k {
        let mut cover: HashMap<u128, u64> = HashMap::new();
        for b in &sorted_blocks {
            for_each_subset(b, t, &mut |m| *cover.entry(m).or_default() += 1);
        }
        let uniform = cover.len() as u128 == binomial(n, t)
            && cover.values().all(|&c| Some(&c) == cover.values().next());
        if !uniform {
            break;
        }
        strength = t;
    }
    if let Some(claimed) = claimed_strength {
        if strength < claimed {
            return Err(Error::invalid(format!(
                "coverage is not constant at strength {}; design has strength {strength} < claimed {claimed}",
                strength + 1
            )));
        }
    }

    let points: Vec<usize> = (1..=n).collect();
    let mut nu = BTreeMap::new();
    for i in 0..=strength {
        for j in 0..=strength - i {
            let mut value: Option<u64> = None;
            let mut constant = true;
            for_each_subset(&points, i, &mut |inside| {
                if !constant {
                    return;
                }
                let rest: Vec<usize> = points.iter().copied().filter(|&x| inside & 1 << (x - 1) == 0).collect();
                for_each_subset(&rest, j, &mut |outside| {
                    let count = block_masks
                        .iter()
                        .filter(|&&b| b & inside == inside && b & outside == 0)
                        .count() as u64;
                    match value {
                        None => value = Some(count),
                        Some(v) if v != count => constant = false,
                        _ => {}
                    }
                });
            });
            if !constant {
                return Err(Error::invalid(format!("block count nu_({i},{j}) is not constant")));
            }
            nu.insert((i, j), value.unwrap_or(0));
        }
    }
    Ok(BlockDesign {
        n,
        k,
        blocks: sorted_blocks,
        strength,
        nu,
    })
}

/// Outcome of [`nu_identities_check`]; `failure` names the first `(i, j)` and
/// the identity that broke.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub failure: Option<(usize, usize, &'static str)>,
}

/// Checks the recurrences linking neighbouring block counts:
///
/// * `ν_{i+1,j}(n-i-j) = ν_{i,j}(k-i)`
/// * `ν_{i,j+1}(n-i-j) = ν_{i,j}(n-k-j)`
/// * `ν_{i+1,j-1}(n-k-j+1) = ν_{i,j}(k-i)`
pub fn nu_identities_check(d: &BlockDesign) -> IdentityCheck {
    let (n, k, t) = (d.n as i128, d.k as i128, d.strength);
    let nu = |i: usize, j: usize| d.nu[&(i, j)] as i128;
    for i in 0..=t {
        for j in 0..=t - i {
            let (ii, jj) = (i as i128, j as i128);
            if i + j < t {
                if nu(i + 1, j) * (n - ii - jj) != nu(i, j) * (k - ii) {
                    return fail(i, j, "include");
                }
                if nu(i, j + 1) * (n - ii - jj) != nu(i, j) * (n - k - jj) {
                    return fail(i, j, "exclude");
                }
            }
            if j >= 1 && nu(i + 1, j - 1) * (n - k - jj + 1) != nu(i, j) * (k - ii) {
                return fail(i, j, "exchange");
            }
        }
    }
    IdentityCheck {
        holds: true,
        failure: None,
    }
}

fn fail(i: usize, j: usize, which: &'static str) -> IdentityCheck {
    IdentityCheck {
        holds: false,
        failure: Some((i, j, which)),
    }
}

/// The Fano plane on `{1..7}`.
pub fn fano_blocks() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 6],
        vec![4, 5, 7],
        vec![5, 6, 1],
        vec![6, 7, 2],
        vec![7, 1, 3],
    ]
}

/// Every `k`-subset of `{1..n}`, lexicographically.
pub fn complete_blocks(n: usize, k: usize) -> Vec<Vec<usize>> {
    let points: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for_each_subset(&points, k, &mut |m| {
        out.push((1..=n).filter(|&x| m & 1 << (x - 1) != 0).collect());
    });
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_counts() {
        let d = validate_design(7, 3, &fano_blocks(), Some(2)).unwrap();
        assert_eq!(d.strength(), 2);
        assert_eq!(d.index(), 1);
        let expect = [((0, 0), 7), ((1, 0), 3), ((2, 0), 1), ((1, 1), 2), ((0, 1), 4), ((0, 2), 2)];
        for ((i, j), v) in expect {
            assert_eq!(d.nu(i, j), Some(v), "nu_({i},{j})");
        }
        let check = nu_identities_check(&d);
        assert!(check.holds, "{check:?}");
        assert_eq!(d.nu(1, 0).unwrap() * 7, d.nu(0, 0).unwrap() * 3);
    }

    #[test]
    fn complete_designs() {
        for (n, k) in [(5, 2), (6, 3), (4, 4), (5, 1)] {
            let d = validate_design(n, k, &complete_blocks(n, k), None).unwrap();
            assert_eq!(d.strength(), k);
            assert!(nu_identities_check(&d).holds);
        }
    }

    #[test]
    fn strength_zero() {
        let d = validate_design(3, 2, &[vec![1, 2], vec![1, 3]], None).unwrap();
        assert_eq!(d.strength(), 0);
        assert_eq!(d.nu(0, 0), Some(2));
        assert!(validate_design(3, 2, &[vec![1, 2], vec![1, 3]], Some(1)).is_err());
    }

    #[test]
    fn malformed_blocks() {
        assert!(validate_design(7, 3, &[vec![1, 2, 4], vec![4, 2, 1]], None).is_err());
        assert!(validate_design(7, 3, &[vec![1, 2, 8]], None).is_err());
        assert!(validate_design(7, 3, &[vec![1, 2]], None).is_err());
        assert!(validate_design(7, 3, &[vec![1, 1, 2]], None).is_err());
    }

    #[test]
    fn tampered_table_fails_identities() {
        let mut d = validate_design(7, 3, &fano_blocks(), None).unwrap();
        d.nu.insert((1, 1), 3);
        assert!(!nu_identities_check(&d).holds);
    }
}
