//! Gluing a `t`-design with `t`-transitive sets on a block and its complement
//! into a `t`-transitive set on all points.
//!
//! For block `b`, `π ∈ D₁` (on `k` points) and `σ ∈ D₂` (on `n-k` points) the
//! element is `i ↦ φ_b(π(i))` for `i ≤ k` and `j ↦ ψ_b(σ(j-k))` for `j > k`,
//! where `φ_b` lists `b` and `ψ_b` lists its complement in a fixed order.

use std::collections::BTreeMap;

use crate::constructions::design::BlockDesign;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::perm::{PermSet, Permutation};
use crate::transitivity::check_character;

/// Per-block orderings `φ_b` (of the block) and `ψ_b` (of its complement).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionAssignment {
    /// Keyed by the block's ascending point list.
    entries: BTreeMap<Vec<usize>, (Vec<usize>, Vec<usize>)>,
}

impl BijectionAssignment {
    /// Lists every block and complement in ascending order.
    pub fn ascending(design: &BlockDesign) -> Self {
        let entries = design
            .blocks()
            .iter()
            .map(|b| {
                let complement = (1..=design.n()).filter(|x| !b.contains(x)).collect();
                (b.clone(), (b.clone(), complement))
            })
            .collect();
        BijectionAssignment { entries }
    }

    /// Replaces the orderings of one block.
    pub fn set(&mut self, design: &BlockDesign, phi: Vec<usize>, psi: Vec<usize>) -> Result<()> {
        let mut block = phi.clone();
        block.sort_unstable();
        if !design.blocks().contains(&block) {
            return Err(Error::invalid(format!("{phi:?} is not a block of the design")));
        }
        let mut complement = psi.clone();
        complement.sort_unstable();
        let expected: Vec<usize> = (1..=design.n()).filter(|x| !block.contains(x)).collect();
        if complement != expected {
            return Err(Error::invalid(format!("{psi:?} is not the complement of block {block:?}")));
        }
        self.entries.insert(block, (phi, psi));
        Ok(())
    }

    pub fn get(&self, block: &[usize]) -> Option<(&[usize], &[usize])> {
        let mut key = block.to_vec();
        key.sort_unstable();
        self.entries.get(&key).map(|(p, s)| (p.as_slice(), s.as_slice()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &(Vec<usize>, Vec<usize>))> {
        self.entries.iter()
    }
}

/// The glued element for orderings `phi` (of a block) and `psi` (of its complement).
pub fn product_element(phi: &[usize], psi: &[usize], pi: &Permutation, sigma: &Permutation) -> Result<Permutation> {
    let k = phi.len();
    if pi.degree() != k {
        return Err(Error::DegreeMismatch {
            expected: k,
            found: pi.degree(),
        });
    }
    if sigma.degree() != psi.len() {
        return Err(Error::DegreeMismatch {
            expected: psi.len(),
            found: sigma.degree(),
        });
    }
    let mut images = Vec::with_capacity(k + psi.len());
    for i in 1..=k {
        images.push(phi[pi.apply(i) - 1]);
    }
    for j in 1..=psi.len() {
        images.push(psi[sigma.apply(j) - 1]);
    }
    Permutation::from_images(&images)
}

/// `t`-transitive on `m` points means transitive on shape `(m-t, 1^t)`.
fn require_t_transitive(name: &str, d: &PermSet, t: usize) -> Result<()> {
    let lambda = Partition::hook(d.degree(), t);
    let verdict = check_character(d, &lambda)?;
    if !verdict.transitive {
        let witness = verdict.witness.map(|w| w.to_string()).unwrap_or_default();
        return Err(Error::invalid(format!(
            "{name} is not {t}-transitive on {} points ({witness})",
            d.degree()
        )));
    }
    Ok(())
}

/// Builds the glued set, checking that `d1` and `d2` are `t`-transitive for
/// the design's strength `t` and that no element arises twice.
pub fn product_construct(
    design: &BlockDesign,
    d1: &PermSet,
    d2: &PermSet,
    bij: &BijectionAssignment,
) -> Result<PermSet> {
    let (n, k) = (design.n(), design.k());
    if k == n {
        return Err(Error::invalid("blocks must be proper subsets of the point set"));
    }
    if d1.degree() != k {
        return Err(Error::DegreeMismatch {
            expected: k,
            found: d1.degree(),
        });
    }
    if d2.degree() != n - k {
        return Err(Error::DegreeMismatch {
            expected: n - k,
            found: d2.degree(),
        });
    }
    let t = design.strength();
    require_t_transitive("D1", d1, t)?;
    require_t_transitive("D2", d2, t)?;

    let mut elements = Vec::with_capacity(design.blocks().len() * d1.len() * d2.len());
    for block in design.blocks() {
        let (phi, psi) = bij
            .get(block)
            .ok_or_else(|| Error::invalid(format!("no bijection given for block {block:?}")))?;
        for pi in d1 {
            for sigma in d2 {
                elements.push(product_element(phi, psi, pi, sigma)?);
            }
        }
    }
    PermSet::new(n, elements).map_err(|e| match e {
        Error::Invalid(msg) => Error::invalid(format!("degenerate bijection assignment: {msg}")),
        other => other,
    })
}

/// `c_h`: the number of elements of `d` mapping one fixed `h`-tuple of
/// distinct points to another, for `h = 0..=t`. Fails if some count is not
/// the same for every pair of tuples.
pub fn tuple_transfer_counts(d: &PermSet, t: usize) -> Result<Vec<u64>> {
    let m = d.degree();
    let mut out = Vec::with_capacity(t + 1);
    for h in 0..=t.min(m) {
        let tuples = ordered_tuples(m, h);
        let mut value = None;
        for a in &tuples {
            let mut tally: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
            for g in d {
                *tally.entry(a.iter().map(|&x| g.apply(x)).collect()).or_default() += 1;
            }
            let full = tally.len() == tuples.len();
            for (_, &c) in tally.iter() {
                if !full || *value.get_or_insert(c) != c {
                    return Err(Error::invalid(format!("set is not {h}-transitive")));
                }
            }
        }
        out.push(value.unwrap_or(d.len() as u64));
    }
    Ok(out)
}

fn ordered_tuples(m: usize, h: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..h {
        let mut next = Vec::new();
        for prefix in &out {
            for x in (1..=m).filter(|x| !prefix.contains(x)) {
                let mut t: Vec<usize> = prefix.clone();
                t.push(x);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// `r_i = ν_{i,t-i} · c_i · d_{t-i}` for each feasible split `i` of a
/// `t`-tuple between the block (`i` points) and its complement. A correct
/// construction gives the same value for every `i`.
pub fn r_by_split(design: &BlockDesign, d1: &PermSet, d2: &PermSet) -> Result<Vec<(usize, u128)>> {
    let t = design.strength();
    let c = tuple_transfer_counts(d1, t)?;
    let d = tuple_transfer_counts(d2, t)?;
    let lo = t.saturating_sub(design.n() - design.k());
    let hi = t.min(design.k());
    (lo..=hi)
        .map(|i| {
            let nu = design
                .nu(i, t - i)
                .ok_or_else(|| Error::internal(format!("missing nu_({i},{})", t - i)))?;
            Ok((i, nu as u128 * c[i] as u128 * d[t - i] as u128))
        })
        .collect()
}
