//! Ordered set partitions of `{1..n}` (tabloids), the action of `S_n` on
//! them, Young subgroups and their cosets.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::perm::{PermSet, Permutation};

pub const DEFAULT_YOUNG_CAP: u128 = 1_000_000;

/// An ordered set partition `(P₁,…,P_k)` with `|Pᵢ| ≥ |Pᵢ₊₁|`.
///
/// Stored as a label per point: `labels[x] = i` when point `x+1` lies in `Pᵢ₊₁`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tabloid {
    labels: Vec<u8>,
    shape: Partition,
}

impl Tabloid {
    /// Builds a tabloid from 1-based blocks.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        if blocks.is_empty() || blocks.len() > u8::MAX as usize {
            return Err(Error::invalid("a tabloid needs between 1 and 255 blocks"));
        }
        let mut labels = vec![u8::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::invalid("tabloid blocks must be non-empty"));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::invalid(format!("point {x} out of range 1..{n}")));
                }
                if labels[x - 1] != u8::MAX {
                    return Err(Error::invalid(format!("point {x} appears in two blocks")));
                }
                labels[x - 1] = i as u8;
            }
        }
        if labels.contains(&u8::MAX) {
            return Err(Error::invalid("tabloid blocks must cover every point"));
        }
        let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        let shape = Partition::new(sizes)
            .map_err(|_| Error::invalid("tabloid block sizes must be weakly decreasing"))?;
        Ok(Tabloid { labels, shape })
    }

    pub(crate) fn from_labels(labels: Vec<u8>, shape: Partition) -> Self {
        Tabloid { labels, shape }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub(crate) fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Blocks as ascending 1-based point lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.shape.len()];
        for (x, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(x + 1);
        }
        blocks
    }

    /// The block index (0-based) holding the 1-based `point`.
    pub fn block_of(&self, point: usize) -> usize {
        self.labels[point - 1] as usize
    }
}

impl Ord for Tabloid {
    fn cmp(&self, other: &Self) -> Ordering {
        self.blocks().cmp(&other.blocks())
    }
}

impl PartialOrd for Tabloid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tabloid{self}")
    }
}

impl FromStr for Tabloid {
    type Err = Error;

    /// Parses `{1,2,5|3,7|4,6}`; the degree is the largest point.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::parse(1, 1, "tabloid must be wrapped in braces"))?;
        let mut blocks = Vec::new();
        for piece in inner.split('|') {
            let block = piece
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(1, 1, format!("'{}' is not a point", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        Tabloid::from_blocks(n, &blocks)
    }
}

/// All tabloids of shape `la` on `n` points, in canonical order: block by
/// block, each block's sorted contents compared lexicographically.
pub fn tabloids_of_shape(n: usize, la: &Partition) -> Result<Vec<Tabloid>> {
    if la.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: la.weight(),
        });
    }
    let mut out = Vec::new();
    let mut labels = vec![u8::MAX; n];
    fill_block(la, 0, 0, la.part(0), &mut labels, &mut out);
    Ok(out)
}

fn fill_block(la: &Partition, block: usize, from: usize, left: usize, labels: &mut Vec<u8>, out: &mut Vec<Tabloid>) {
    if left == 0 {
        if block + 1 == la.len() {
            out.push(Tabloid::from_labels(labels.clone(), la.clone()));
        } else {
            fill_block(la, block + 1, 0, la.part(block + 1), labels, out);
        }
        return;
    }
    for x in from..labels.len() {
        if labels[x] != u8::MAX {
            continue;
        }
        labels[x] = block as u8;
        fill_block(la, block, x + 1, left - 1, labels, out);
        labels[x] = u8::MAX;
    }
}

/// Position of each tabloid of one shape in the canonical enumeration.
pub(crate) struct TabloidIndex {
    tabloids: Vec<Tabloid>,
    positions: HashMap<Vec<u8>, usize>,
}

impl TabloidIndex {
    pub(crate) fn new(n: usize, la: &Partition) -> Result<Self> {
        let tabloids = tabloids_of_shape(n, la)?;
        let positions = tabloids
            .iter()
            .enumerate()
            .map(|(i, t)| (t.labels.clone(), i))
            .collect();
        Ok(TabloidIndex { tabloids, positions })
    }

    pub(crate) fn tabloids(&self) -> &[Tabloid] {
        &self.tabloids
    }

    pub(crate) fn position_of_labels(&self, labels: &[u8]) -> usize {
        self.positions[labels]
    }
}

/// `g·P`: each block is replaced by its image under `g`.
pub fn act(g: &Permutation, p: &Tabloid) -> Result<Tabloid> {
    if g.degree() != p.degree() {
        return Err(Error::DegreeMismatch {
            expected: p.degree(),
            found: g.degree(),
        });
    }
    Ok(Tabloid::from_labels(act_labels(g, &p.labels), p.shape.clone()))
}

#[inline]
pub(crate) fn act_labels(g: &Permutation, labels: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; labels.len()];
    for (x, &l) in labels.iter().enumerate() {
        out[g.apply0(x)] = l;
    }
    out
}

/// `Y_P`: every permutation fixing each block of `p` setwise.
pub fn young_subgroup(p: &Tabloid, cap: u128) -> Result<PermSet> {
    let size: u128 = p
        .shape
        .parts()
        .iter()
        .try_fold(1u128, |acc, &k| {
            crate::partitions::factorial(k)
                .to_u128()
                .and_then(|f| acc.checked_mul(f))
        })
        .unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "Young subgroup",
            cap,
            reached: size,
        });
    }
    let n = p.degree();
    let blocks = p.blocks();
    let mut elements = vec![Permutation::identity(n).raw().to_vec()];
    for block in &blocks {
        let mut arrangement: Vec<usize> = block.clone();
        let mut next = Vec::with_capacity(elements.len() * (1..=block.len()).product::<usize>());
        loop {
            for base in &elements {
                let mut images = base.clone();
                for (&from, &to) in block.iter().zip(&arrangement) {
                    images[from - 1] = (to - 1) as u8;
                }
                next.push(images);
            }
            if !crate::perm::next_permutation(&mut arrangement) {
                break;
            }
        }
        elements = next;
    }
    Ok(PermSet::known_group(
        n,
        elements.into_iter().map(Permutation::from_raw).collect(),
    ))
}

/// A left coset `gY_P`, identified with the tabloid `gP`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungCoset {
    base: Tabloid,
    image: Tabloid,
}

impl YoungCoset {
    pub fn new(base: Tabloid, image: Tabloid) -> Result<Self> {
        if base.shape != image.shape || base.degree() != image.degree() {
            return Err(Error::invalid("coset base and image must share a shape"));
        }
        Ok(YoungCoset { base, image })
    }

    /// The coset `g·Y_base`.
    pub fn of(g: &Permutation, base: Tabloid) -> Result<Self> {
        let image = act(g, &base)?;
        Ok(YoungCoset { base, image })
    }

    pub fn base(&self) -> &Tabloid {
        &self.base
    }

    pub fn image(&self) -> &Tabloid {
        &self.image
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.base.degree() && act_labels(g, &self.base.labels) == self.image.labels
    }

    /// Explicit elements, as `g·h` for a representative `g` and `h ∈ Y_base`.
    pub fn elements(&self, cap: u128) -> Result<PermSet> {
        let rep = self.representative();
        let subgroup = young_subgroup(&self.base, cap)?;
        PermSet::new(
            self.base.degree(),
            subgroup.iter().map(|h| rep.compose_unchecked(h)).collect(),
        )
    }

    /// The unique coset element mapping each block of the base to the
    /// matching image block order-preservingly.
    pub fn representative(&self) -> Permutation {
        let mut images = vec![0u8; self.base.degree()];
        for (from, to) in self.base.blocks().iter().zip(self.image.blocks()) {
            for (&a, &b) in from.iter().zip(&to) {
                images[a - 1] = (b - 1) as u8;
            }
        }
        Permutation::from_raw(images)
    }
}

/// Number of ordered tabloids of shape `la` fixed by `g`, i.e. whose every
/// block is a union of cycles of `g`.
pub fn fixed_tabloid_count(g: &Permutation, la: &Partition) -> Result<BigUint> {
    if la.weight() != g.degree() {
        return Err(Error::WeightMismatch {
            expected: g.degree(),
            found: la.weight(),
        });
    }
    Ok(fixed_count_for_type(&g.cycle_type(), la))
}

/// Same count, from the cycle type alone.
pub fn fixed_count_for_type(cycle_type: &Partition, la: &Partition) -> BigUint {
    let mut memo = HashMap::new();
    let mut caps = la.parts().to_vec();
    pack_cycles(cycle_type.parts(), &mut caps, &mut memo)
}

/// Counts assignments of distinguishable cycles to labelled bins that exactly
/// fill every bin. The count is invariant under permuting the bins, so the
/// memo key uses sorted capacities.
fn pack_cycles(cycles: &[usize], caps: &mut [usize], memo: &mut HashMap<(usize, Vec<usize>), BigUint>) -> BigUint {
    let Some((&len, rest)) = cycles.split_first() else {
        return if caps.iter().all(|&c| c == 0) { BigUint::from(1u8) } else { BigUint::zero() };
    };
    let mut key_caps = caps.to_vec();
    key_caps.sort_unstable();
    let key = (cycles.len(), key_caps);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..caps.len() {
        if caps[i] >= len {
            caps[i] -= len;
            total += pack_cycles(rest, caps, memo);
            caps[i] += len;
        }
    }
    memo.insert(key, total.clone());
    total
}
