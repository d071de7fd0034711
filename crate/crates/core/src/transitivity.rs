//! Deciding λ-transitivity.
//!
//! Three routes are provided and cross-checked in the tests:
//!
//! * [`check_oracle`] counts, for every ordered pair of tabloids `(P, Q)` of
//!   shape λ, the elements of `D` taking `P` to `Q`.
//! * [`check_character`] tests `Σ_{g,h∈D} χ^μ(gh⁻¹) = 0` for every
//!   `μ ⊵ λ` other than `(n)`, i.e. that the dual distribution vanishes there.
//! * [`check_group_orbit`] (groups only) computes one orbit on tabloids.
//!
//! Every test is exact; "vanishes" means an integer sum is zero.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::characters::MnEvaluator;
use crate::error::{Error, Result};
use crate::partitions::{dominates_unchecked, factorial, partitions_of, up_set, Partition};
use crate::perm::PermSet;
use crate::tabloids::{act_labels, fixed_count_for_type, Tabloid, TabloidIndex};

/// Default bound on `multinomial(λ) · |D|`, the number of tabloid images the
/// oracle computes.
pub const DEFAULT_ORACLE_BUDGET: u128 = 200_000_000;

/// Default bound on `|D|²` when checking closure under composition.
pub const DEFAULT_GROUP_CHECK_BUDGET: u128 = 50_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Character,
    Orbit,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Character => "character",
            Method::Orbit => "orbit",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "character" => Ok(Method::Character),
            "orbit" => Ok(Method::Orbit),
            other => Err(Error::invalid(format!("unknown method '{other}'"))),
        }
    }
}

/// Evidence that a set is not λ-transitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `count` elements take `from` to `to`, where a λ-transitive set would
    /// have exactly `|D| / multinomial(λ)`.
    TabloidPair { from: Tabloid, to: Tabloid, count: u64 },
    /// The dual distribution entry `b_μ` is non-zero.
    DualEntry { mu: Partition, value: BigRational },
    /// The orbit of the first tabloid has `size` elements out of `total`.
    Orbit { size: u64, total: BigUint },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::TabloidPair { from, to, count } => {
                write!(f, "{count} elements take {from} to {to}")
            }
            Witness::DualEntry { mu, value } => write!(f, "b_({mu}) = {}", format_rational(value)),
            Witness::Orbit { size, total } => write!(f, "orbit of size {size} out of {total} tabloids"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityVerdict {
    pub lambda: Partition,
    pub transitive: bool,
    /// `|D| / multinomial(λ)`; an integer whenever the set is transitive.
    pub r: BigRational,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl TransitivityVerdict {
    fn new(d: &PermSet, lambda: &Partition, witness: Option<Witness>, method: Method) -> Self {
        TransitivityVerdict {
            lambda: lambda.clone(),
            transitive: witness.is_none(),
            r: r_value(d.len(), lambda),
            witness,
            method,
        }
    }
}

fn r_value(size: usize, lambda: &Partition) -> BigRational {
    BigRational::new(BigInt::from(size), BigInt::from(lambda.multinomial()))
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn check_shape(d: &PermSet, lambda: &Partition) -> Result<()> {
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    if lambda.weight() != d.degree() {
        return Err(Error::WeightMismatch {
            expected: d.degree(),
            found: lambda.weight(),
        });
    }
    Ok(())
}

/// `c_α = #{(g, h) ∈ D × D : gh⁻¹ has cycle type α}`, non-zero entries only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCounts {
    degree: usize,
    set_size: usize,
    counts: BTreeMap<Partition, u64>,
}

impl ClassCounts {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn get(&self, alpha: &Partition) -> u64 {
        self.counts.get(alpha).copied().unwrap_or(0)
    }

    /// Non-zero entries in canonical partition order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.counts.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    /// `Σ_α c_α χ^μ_α`, which is `|D|·b_μ / f_μ`.
    pub fn character_sum(&self, mu: &Partition, ev: &mut MnEvaluator) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (alpha, c) in self.iter() {
            total += ev.eval(mu, alpha)? * BigInt::from(c);
        }
        Ok(total)
    }
}

/// Counts quotient classes over all ordered pairs of `D`. Rows are split
/// across threads and the integer counts merged.
pub fn pair_class_distribution(d: &PermSet) -> Result<ClassCounts> {
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    let elements = d.elements();
    let inverses: Vec<_> = elements.iter().map(|h| h.inverse()).collect();
    let counts = elements
        .par_iter()
        .fold(HashMap::<Vec<usize>, u64>::new, |mut acc, g| {
            for h_inv in &inverses {
                *acc.entry(g.compose_unchecked(h_inv).cycle_lengths()).or_default() += 1;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(ClassCounts {
        degree: d.degree(),
        set_size: d.len(),
        counts: counts
            .into_iter()
            .map(|(k, v)| (Partition::from_sorted_unchecked(k), v))
            .collect(),
    })
}

/// For a group `G`, `c_α = |G|·|G ∩ C_α|`; only `|G|` cycle types are needed.
pub fn group_class_distribution(g: &PermSet, group_budget: u128) -> Result<ClassCounts> {
    if g.is_empty() {
        return Err(Error::EmptySet);
    }
    if !g.is_group(group_budget)? {
        return Err(Error::NotAGroup);
    }
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for x in g.iter() {
        *counts.entry(x.cycle_type()).or_default() += g.len() as u64;
    }
    Ok(ClassCounts {
        degree: g.degree(),
        set_size: g.len(),
        counts,
    })
}

/// Class counts by whichever route is cheap: the group shortcut when `D` is
/// already known to be a group, otherwise all pairs.
pub fn class_counts(d: &PermSet) -> Result<ClassCounts> {
    if d.is_group(0).unwrap_or(false) {
        group_class_distribution(d, 0)
    } else {
        pair_class_distribution(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistributionKind {
    Inner,
    Dual,
}

/// A vector indexed by the canonical partitions of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionVector {
    pub kind: DistributionKind,
    pub index: Vec<Partition>,
    pub values: Vec<BigRational>,
}

impl DistributionVector {
    pub fn get(&self, p: &Partition) -> Option<&BigRational> {
        self.index.iter().position(|q| q == p).map(|i| &self.values[i])
    }

    pub fn sum(&self) -> BigRational {
        self.values.iter().cloned().sum()
    }
}

/// `a_α = c_α / |D|`.
pub fn inner_distribution(d: &PermSet) -> Result<DistributionVector> {
    let counts = pair_class_distribution(d)?;
    inner_from_counts(&counts)
}

pub fn inner_from_counts(counts: &ClassCounts) -> Result<DistributionVector> {
    let size = BigInt::from(counts.set_size);
    let index = partitions_of(counts.degree);
    let values: Vec<BigRational> = index
        .iter()
        .map(|alpha| BigRational::new(BigInt::from(counts.get(alpha)), size.clone()))
        .collect();
    let dist = DistributionVector {
        kind: DistributionKind::Inner,
        index,
        values,
    };
    if dist.sum() != BigRational::from_integer(size) {
        return Err(Error::internal("inner distribution does not sum to |D|"));
    }
    Ok(dist)
}

/// `b_μ = (f_μ / |D|) Σ_α c_α χ^μ_α`, with `b ≥ 0`, `b_(n) = |D|` and
/// `Σ b_μ = n!` asserted.
pub fn dual_distribution(d: &PermSet) -> Result<DistributionVector> {
    let counts = pair_class_distribution(d)?;
    dual_from_counts(&counts)
}

pub fn dual_from_counts(counts: &ClassCounts) -> Result<DistributionVector> {
    let size = BigInt::from(counts.set_size);
    let index = partitions_of(counts.degree);
    let mut ev = MnEvaluator::new();
    let mut values = Vec::with_capacity(index.len());
    for mu in &index {
        let s = counts.character_sum(mu, &mut ev)?;
        let f = BigInt::from(mu.hook_degree());
        let b = BigRational::new(f * s, size.clone());
        if b < BigRational::zero() {
            return Err(Error::internal(format!("negative dual distribution entry at {mu:?}")));
        }
        values.push(b);
    }
    let dist = DistributionVector {
        kind: DistributionKind::Dual,
        index,
        values,
    };
    if dist.values[0] != BigRational::from_integer(size) {
        return Err(Error::internal("b_(n) differs from |D|"));
    }
    if dist.sum() != BigRational::from_integer(BigInt::from(factorial(counts.degree))) {
        return Err(Error::internal("dual distribution does not sum to n!"));
    }
    Ok(dist)
}

/// Direct test: for each `P` in canonical order, tallies `gP` over `g ∈ D`
/// and compares every tally with `|D| / multinomial(λ)`. Reports the first
/// deviant pair `(P, Q)` in canonical order.
///
/// `budget` bounds `multinomial(λ)·|D|`.
pub fn check_oracle(d: &PermSet, lambda: &Partition, budget: u128) -> Result<TransitivityVerdict> {
    check_shape(d, lambda)?;
    let m = lambda.multinomial();
    let work = m.to_u128().and_then(|m| m.checked_mul(d.len() as u128)).unwrap_or(u128::MAX);
    if work > budget {
        return Err(Error::CapExceeded {
            what: "oracle work (tabloids x |D|)",
            cap: budget,
            reached: work,
        });
    }
    let index = TabloidIndex::new(d.degree(), lambda)?;
    let tabloids = index.tabloids();
    let m = tabloids.len();
    // The only possible common value is |D|/m, since each row sums to |D|.
    let common = if d.len() % m == 0 { Some((d.len() / m) as u64) } else { None };
    let mut tally = vec![0u64; m];
    for p in tabloids {
        tally.iter_mut().for_each(|c| *c = 0);
        for g in d.iter() {
            tally[index.position_of_labels(&act_labels(g, p.labels()))] += 1;
        }
        if let Some(q) = (0..m).find(|&q| Some(tally[q]) != common) {
            let witness = Witness::TabloidPair {
                from: p.clone(),
                to: tabloids[q].clone(),
                count: tally[q],
            };
            return Ok(TransitivityVerdict::new(d, lambda, Some(witness), Method::Oracle));
        }
    }
    Ok(TransitivityVerdict::new(d, lambda, None, Method::Oracle))
}

/// Character criterion: transitive iff `Σ_α c_α χ^μ_α = 0` for every
/// `μ ⊵ λ`, `μ ≠ (n)`. The witness is the first failing `μ` in canonical order.
pub fn check_character(d: &PermSet, lambda: &Partition) -> Result<TransitivityVerdict> {
    check_shape(d, lambda)?;
    let counts = class_counts(d)?;
    check_character_with(d, &counts, lambda, &mut MnEvaluator::new())
}

/// As [`check_character`], reusing precomputed class counts.
pub fn check_character_with(
    d: &PermSet,
    counts: &ClassCounts,
    lambda: &Partition,
    ev: &mut MnEvaluator,
) -> Result<TransitivityVerdict> {
    check_shape(d, lambda)?;
    if counts.set_size != d.len() || counts.degree != d.degree() {
        return Err(Error::invalid("class counts belong to a different set"));
    }
    let size = BigInt::from(d.len());
    for mu in up_set(lambda).iter().skip(1) {
        let s = counts.character_sum(mu, ev)?;
        if !s.is_zero() {
            let b = BigRational::new(BigInt::from(mu.hook_degree()) * s, size.clone());
            let witness = Witness::DualEntry { mu: mu.clone(), value: b };
            return Ok(TransitivityVerdict::new(d, lambda, Some(witness), Method::Character));
        }
    }
    Ok(TransitivityVerdict::new(d, lambda, None, Method::Character))
}

/// Group test: the orbit of the first canonical tabloid must be everything.
pub fn check_group_orbit(g: &PermSet, lambda: &Partition, group_budget: u128) -> Result<TransitivityVerdict> {
    check_shape(g, lambda)?;
    if !g.is_group(group_budget)? {
        return Err(Error::NotAGroup);
    }
    let total = lambda.multinomial();
    let first = first_tabloid(g.degree(), lambda);
    let orbit: HashSet<Vec<u8>> = g.iter().map(|x| act_labels(x, first.labels())).collect();
    let size = orbit.len() as u64;
    let witness = (BigUint::from(size) != total).then_some(Witness::Orbit { size, total });
    Ok(TransitivityVerdict::new(g, lambda, witness, Method::Orbit))
}

fn first_tabloid(n: usize, lambda: &Partition) -> Tabloid {
    let labels = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| std::iter::repeat(i as u8).take(k))
        .collect::<Vec<_>>();
    debug_assert_eq!(labels.len(), n);
    Tabloid::from_labels(labels, lambda.clone())
}

/// Number of orbits of `G` on tabloids of shape λ, by Burnside's lemma.
pub fn orbit_count(g: &PermSet, lambda: &Partition, group_budget: u128) -> Result<BigUint> {
    check_shape(g, lambda)?;
    if !g.is_group(group_budget)? {
        return Err(Error::NotAGroup);
    }
    let mut by_type: HashMap<Partition, u64> = HashMap::new();
    for x in g.iter() {
        *by_type.entry(x.cycle_type()).or_default() += 1;
    }
    let total: BigUint = by_type
        .iter()
        .map(|(ty, &k)| fixed_count_for_type(ty, lambda) * k)
        .sum();
    let (q, rem) = total.div_rem(&BigUint::from(g.len()));
    if !rem.is_zero() {
        return Err(Error::internal("Burnside sum not divisible by |G|"));
    }
    Ok(q)
}

/// The up-set of shapes for which a set is transitive, and its minimal elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    /// Every λ (canonical order) for which the set is λ-transitive.
    pub transitive: Vec<Partition>,
    /// The dominance-minimal members of `transitive`.
    pub minimal: Vec<Partition>,
}

/// Walks the partitions of `n` from `(n)` down (a linear extension of
/// dominance), skipping any λ lying below a shape already known to fail.
pub fn profile(d: &PermSet, method: Method, oracle_budget: u128, group_budget: u128) -> Result<Profile> {
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = d.degree();
    let counts = match method {
        Method::Character => Some(class_counts(d)?),
        _ => None,
    };
    let mut ev = MnEvaluator::new();
    let mut failed: Vec<Partition> = Vec::new();
    let mut transitive: Vec<Partition> = Vec::new();
    for lambda in partitions_of(n) {
        if failed.iter().any(|f| dominates_unchecked(f, &lambda)) {
            continue;
        }
        let verdict = match method {
            Method::Oracle => check_oracle(d, &lambda, oracle_budget)?,
            Method::Character => check_character_with(d, counts.as_ref().expect("counts"), &lambda, &mut ev)?,
            Method::Orbit => check_group_orbit(d, &lambda, group_budget)?,
        };
        if verdict.transitive {
            transitive.push(lambda);
        } else {
            failed.push(lambda);
        }
    }
    let minimal = transitive
        .iter()
        .filter(|la| {
            !transitive
                .iter()
                .any(|tau| tau != *la && dominates_unchecked(la, tau))
        })
        .cloned()
        .collect();
    Ok(Profile { transitive, minimal })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityCertificate {
    pub holds: bool,
    /// Every `μ ⊵ λ` whose multinomial does not divide the size.
    pub failing: Vec<(Partition, BigUint)>,
}

/// Necessary condition: a λ-transitive set has size divisible by
/// `multinomial(μ)` for every `μ ⊵ λ`.
pub fn divisibility_check(size: &BigUint, lambda: &Partition) -> DivisibilityCertificate {
    let failing: Vec<_> = up_set(lambda)
        .into_iter()
        .map(|mu| {
            let m = mu.multinomial();
            (mu, m)
        })
        .filter(|(_, m)| !(size % m).is_zero())
        .collect();
    DivisibilityCertificate {
        holds: failing.is_empty(),
        failing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tabloids::tabloids_of_shape;
    use crate::perm::{alternating_group, closure, cyclic_group, parse_perm, symmetric_group, Permutation};
    use num_traits::One;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn pair_counts() {
        let id = PermSet::new(4, vec![Permutation::identity(4)]).unwrap();
        let c = pair_class_distribution(&id).unwrap();
        assert_eq!(c.get(&Partition::column(4)), 1);
        assert_eq!(c.total(), 1);
        let s3 = symmetric_group(3);
        let c = pair_class_distribution(&s3).unwrap();
        assert_eq!(c.get(&p("1,1,1")), 6);
        assert_eq!(c.get(&p("2,1")), 18);
        assert_eq!(c.get(&p("3")), 12);
        let empty = PermSet::new(3, vec![]).unwrap();
        assert!(matches!(pair_class_distribution(&empty), Err(Error::EmptySet)));
    }

    #[test]
    fn group_shortcut_matches_pairs() {
        let a4 = closure(&[parse_perm("(1 2 3)", 4).unwrap(), parse_perm("(2 3 4)", 4).unwrap()], 100).unwrap();
        for g in [symmetric_group(4), a4, cyclic_group(5), alternating_group(5)] {
            let brute = pair_class_distribution(&g).unwrap();
            let fast = group_class_distribution(&g, u128::MAX).unwrap();
            assert_eq!(brute, fast);
        }
    }

    #[test]
    fn inner_distributions() {
        let id = PermSet::new(3, vec![Permutation::identity(3)]).unwrap();
        let a = inner_distribution(&id).unwrap();
        assert_eq!(a.values, vec![int(0), int(0), int(1)]);
        let s4 = symmetric_group(4);
        let a = inner_distribution(&s4).unwrap();
        let sizes: Vec<_> = a.index.iter().map(|x| int(crate::characters::class_size(x).to_i64().unwrap())).collect();
        assert_eq!(a.values, sizes);
    }

    #[test]
    fn dual_distributions() {
        let id = PermSet::new(4, vec![Permutation::identity(4)]).unwrap();
        let b = dual_from_counts(&pair_class_distribution(&id).unwrap()).unwrap();
        for (mu, v) in b.index.iter().zip(&b.values) {
            let f = mu.hook_degree().to_i64().unwrap();
            assert_eq!(*v, int(f * f));
        }
        let s4 = symmetric_group(4);
        let b = dual_distribution(&s4).unwrap();
        assert_eq!(b.values[0], int(24));
        assert!(b.values[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn oracle_examples() {
        let s4 = symmetric_group(4);
        let v = check_oracle(&s4, &p("2,1,1"), DEFAULT_ORACLE_BUDGET).unwrap();
        assert!(v.transitive);
        assert_eq!(v.r, int(2));
        let a4 = alternating_group(4);
        let v = check_oracle(&a4, &p("2,1,1"), DEFAULT_ORACLE_BUDGET).unwrap();
        assert!(v.transitive);
        assert_eq!(v.r, BigRational::one());
        let c4 = cyclic_group(4);
        let v = check_oracle(&c4, &p("2,1,1"), DEFAULT_ORACLE_BUDGET).unwrap();
        assert!(!v.transitive);
        assert!(matches!(v.witness, Some(Witness::TabloidPair { .. })));
        assert!(check_oracle(&s4, &p("2,1,1"), 10).is_err());
    }

    #[test]
    fn oracle_witness_is_first_deviant_pair() {
        let c4 = cyclic_group(4);
        let v = check_oracle(&c4, &p("2,1,1"), DEFAULT_ORACLE_BUDGET).unwrap();
        // |C4|/12 is not an integer, so the very first pair deviates.
        let first = &tabloids_of_shape(4, &p("2,1,1")).unwrap()[0];
        match v.witness.unwrap() {
            Witness::TabloidPair { from, to, count } => {
                assert_eq!(&from, first);
                assert_eq!(&to, first);
                assert_eq!(count, 1);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn character_examples() {
        for n in 2..=5 {
            let sn = symmetric_group(n);
            for la in partitions_of(n) {
                assert!(check_character(&sn, &la).unwrap().transitive);
            }
        }
        let c4 = cyclic_group(4);
        let v = check_character(&c4, &p("2,1,1")).unwrap();
        assert!(!v.transitive);
        assert!(matches!(v.witness, Some(Witness::DualEntry { .. })));
    }

    #[test]
    fn orbit_examples() {
        let s5 = symmetric_group(5);
        let v = check_group_orbit(&s5, &p("3,2"), DEFAULT_GROUP_CHECK_BUDGET).unwrap();
        assert!(v.transitive);
        let c4 = cyclic_group(4);
        let v = check_group_orbit(&c4, &p("2,2"), DEFAULT_GROUP_CHECK_BUDGET).unwrap();
        assert!(!v.transitive);
        let not_group = PermSet::new(3, vec![Permutation::identity(3), parse_perm("(1 2 3)", 3).unwrap()]).unwrap();
        assert!(matches!(
            check_group_orbit(&not_group, &p("2,1"), DEFAULT_GROUP_CHECK_BUDGET),
            Err(Error::NotAGroup)
        ));
    }

    #[test]
    fn burnside_counts() {
        for n in 2..=5 {
            let sn = symmetric_group(n);
            for la in partitions_of(n) {
                assert!(orbit_count(&sn, &la, u128::MAX).unwrap().is_one());
            }
        }
        let c4 = cyclic_group(4);
        assert_eq!(orbit_count(&c4, &p("2,1,1"), u128::MAX).unwrap(), BigUint::from(3u8));
        assert_eq!(orbit_count(&c4, &p("3,1"), u128::MAX).unwrap(), BigUint::from(1u8));
    }

    #[test]
    fn profiles() {
        let s4 = symmetric_group(4);
        for method in [Method::Character, Method::Oracle, Method::Orbit] {
            let prof = profile(&s4, method, DEFAULT_ORACLE_BUDGET, DEFAULT_GROUP_CHECK_BUDGET).unwrap();
            assert_eq!(prof.minimal, vec![Partition::column(4)]);
        }
        let id = PermSet::new(4, vec![Permutation::identity(4)]).unwrap();
        let prof = profile(&id, Method::Character, DEFAULT_ORACLE_BUDGET, DEFAULT_GROUP_CHECK_BUDGET).unwrap();
        assert_eq!(prof.minimal, vec![Partition::row(4)]);
    }

    #[test]
    fn divisibility() {
        let cert = divisibility_check(&BigUint::from(504u32), &p("5,1,1"));
        assert!(cert.holds);
        let cert = divisibility_check(&BigUint::from(10u32), &p("3,1,1"));
        assert!(!cert.holds);
        assert_eq!(cert.failing, vec![(p("3,1,1"), BigUint::from(20u32))]);
        for la in partitions_of(6) {
            assert!(divisibility_check(&factorial(6), &la).holds);
        }
    }

    #[test]
    fn shape_errors() {
        let s3 = symmetric_group(3);
        assert!(matches!(check_character(&s3, &p("2,2")), Err(Error::WeightMismatch { .. })));
        let empty = PermSet::new(3, vec![]).unwrap();
        assert!(matches!(check_oracle(&empty, &p("2,1"), 100), Err(Error::EmptySet)));
    }
}
