//! Permutations of `{1..n}` and explicit finite sets of them.
//!
//! Points are 1-based at every public boundary; internally images are stored
//! 0-based as bytes, which caps the degree at 255.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub const MAX_DEGREE: usize = 255;

/// A bijection on `{1..n}`. Ordering is lexicographic on the image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::invalid(format!("unsupported degree {n}")));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::invalid(format!("point {x} out of range 1..{n}")));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::invalid(format!("point {x} repeated")));
            }
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// Builds from 0-based images that are already known to be a bijection.
    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree {
                    return Err(Error::invalid(format!("point {x} out of range 1..{degree}")));
                }
                if std::mem::replace(&mut seen[x - 1], true) {
                    return Err(Error::invalid(format!("point {x} repeated")));
                }
                images[x - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn apply0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    /// 1-based one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `x ↦ self(other(x))`: the right factor is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles in 1-based points, each starting at its smallest point,
    /// ordered by that point. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths (fixed points included), weakly decreasing.
    pub(crate) fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x] as usize;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_sorted_unchecked(self.cycle_lengths())
    }

    pub fn is_even(&self) -> bool {
        let lens = self.cycle_lengths();
        (self.degree() - lens.len()) % 2 == 0
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &x)| *i == x as usize).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

/// Parses one-line ("4 3 6 1 2 5 7") or cycle ("(1 4)(2 3 6 5)") notation.
///
/// For degrees up to 9 a multi-digit token is read digit by digit, so
/// "(14)(2365)" is accepted.
pub fn parse_perm(text: &str, n: usize) -> Result<Permutation> {
    parse_perm_at(text, n, 1, 1)
}

struct Token {
    value: usize,
    column: usize,
}

fn number_tokens(text: &str, n: usize, line: usize, col0: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b',' {
            i += 1;
            continue;
        }
        if !c.is_ascii_digit() {
            return Err(Error::parse(line, col0 + i, format!("unexpected character '{}'", c as char)));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let digits = &text[start..i];
        if n <= 9 && digits.len() > 1 {
            for (k, d) in digits.bytes().enumerate() {
                out.push(Token {
                    value: (d - b'0') as usize,
                    column: col0 + start + k,
                });
            }
        } else {
            let value = digits
                .parse()
                .map_err(|_| Error::parse(line, col0 + start, "number too large"))?;
            out.push(Token {
                value,
                column: col0 + start,
            });
        }
    }
    Ok(out)
}

pub(crate) fn parse_perm_at(text: &str, n: usize, line: usize, col0: usize) -> Result<Permutation> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::parse(line, col0, format!("unsupported degree {n}")));
    }
    let mut seen = vec![false; n];
    let mut check = |t: &Token| -> Result<usize> {
        if t.value == 0 || t.value > n {
            return Err(Error::parse(line, t.column, format!("point {} out of range 1..{n}", t.value)));
        }
        if std::mem::replace(&mut seen[t.value - 1], true) {
            return Err(Error::parse(line, t.column, format!("point {} repeated", t.value)));
        }
        Ok(t.value)
    };

    if !text.contains('(') && !text.contains(')') {
        let tokens = number_tokens(text, n, line, col0)?;
        if tokens.len() != n {
            return Err(Error::parse(
                line,
                col0,
                format!("one-line notation needs {n} points, found {}", tokens.len()),
            ));
        }
        let mut images = Vec::with_capacity(n);
        for t in &tokens {
            images.push(check(t)? as u8 - 1);
        }
        return Ok(Permutation::from_raw(images));
    }

    let mut images: Vec<u8> = (0..n as u8).collect();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            c if c.is_ascii_whitespace() => i += 1,
            b'(' => {
                let close = text[i + 1..]
                    .find(|c| c == ')' || c == '(')
                    .map(|k| k + i + 1)
                    .filter(|&k| bytes[k] == b')')
                    .ok_or_else(|| Error::parse(line, col0 + i, "unclosed '('"))?;
                let tokens = number_tokens(&text[i + 1..close], n, line, col0 + i + 1)?;
                let mut cycle = Vec::with_capacity(tokens.len());
                for t in &tokens {
                    cycle.push(check(t)?);
                }
                for (k, &x) in cycle.iter().enumerate() {
                    images[x - 1] = (cycle[(k + 1) % cycle.len()] - 1) as u8;
                }
                i = close + 1;
            }
            b')' => return Err(Error::parse(line, col0 + i, "unmatched ')'")),
            c => {
                return Err(Error::parse(
                    line,
                    col0 + i,
                    format!("unexpected character '{}' outside a cycle", c as char),
                ))
            }
        }
    }
    Ok(Permutation::from_raw(images))
}

/// A finite set `D ⊆ S_n`, stored sorted with no duplicates.
#[derive(Clone)]
pub struct PermSet {
    degree: usize,
    elements: Vec<Permutation>,
    is_group: OnceLock<bool>,
}

impl fmt::Debug for PermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermSet")
            .field("degree", &self.degree)
            .field("len", &self.elements.len())
            .finish()
    }
}

impl PartialEq for PermSet {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermSet {}

impl PermSet {
    /// Duplicates are rejected: a permutation set is a set, not a multiset.
    pub fn new(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut elements = elements;
        for g in &elements {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate permutation {}", w[0])));
        }
        Ok(Self::from_sorted(degree, elements))
    }

    /// Collects elements, silently merging duplicates.
    pub fn from_iter_dedup(degree: usize, elements: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let set: BTreeSet<Permutation> = elements.into_iter().collect();
        if let Some(g) = set.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self::from_sorted(degree, set.into_iter().collect()))
    }

    fn from_sorted(degree: usize, elements: Vec<Permutation>) -> Self {
        PermSet {
            degree,
            elements,
            is_group: OnceLock::new(),
        }
    }

    pub(crate) fn known_group(degree: usize, elements: Vec<Permutation>) -> Self {
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        let set = Self::from_sorted(degree, elements);
        let _ = set.is_group.set(true);
        set
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Whether the set is closed under composition (and hence a group).
    ///
    /// Checks all `|D|²` products; `budget` bounds that count. A result is
    /// cached once computed.
    pub fn is_group(&self, budget: u128) -> Result<bool> {
        if let Some(&known) = self.is_group.get() {
            return Ok(known);
        }
        let work = (self.len() as u128).pow(2);
        if work > budget {
            return Err(Error::CapExceeded {
                what: "group closure check",
                cap: budget,
                reached: work,
            });
        }
        let closed = !self.is_empty()
            && self
                .elements
                .iter()
                .all(|g| self.elements.iter().all(|h| self.contains(&g.compose_unchecked(h))));
        let _ = self.is_group.set(closed);
        Ok(closed)
    }

    /// Records the caller's assertion that this set is a group, skipping the
    /// pairwise check. Used for sets too large to verify.
    pub fn assume_group(self) -> Self {
        let _ = self.is_group.set(true);
        self
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// The subgroup generated by `generators`, by breadth-first multiplication.
///
/// Fails with [`Error::CapExceeded`] as soon as more than `cap` elements have
/// been found, reporting the partial size.
pub fn closure(generators: &[Permutation], cap: usize) -> Result<PermSet> {
    let first = generators
        .first()
        .ok_or_else(|| Error::invalid("closure needs at least one generator"))?;
    let n = first.degree();
    if let Some(g) = generators.iter().find(|g| g.degree() != n) {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: g.degree(),
        });
    }
    let id = Permutation::identity(n);
    let mut found: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    found.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = s.compose_unchecked(&g);
            if !found.contains(&h) {
                found.insert(h.clone());
                if found.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "group closure",
                        cap: cap as u128,
                        reached: found.len() as u128,
                    });
                }
                queue.push_back(h);
            }
        }
    }
    Ok(PermSet::known_group(n, found.into_iter().collect()))
}

/// All of `S_n` in lexicographic order of image sequences.
pub fn symmetric_group(n: usize) -> PermSet {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation::from_raw(images.clone()));
        if !next_permutation(&mut images) {
            break;
        }
    }
    PermSet::known_group(n, out)
}

pub fn alternating_group(n: usize) -> PermSet {
    let elements = symmetric_group(n)
        .elements
        .into_iter()
        .filter(Permutation::is_even)
        .collect();
    PermSet::known_group(n, elements)
}

/// The cyclic group generated by `(1 2 … n)`.
pub fn cyclic_group(n: usize) -> PermSet {
    let elements = (0..n)
        .map(|s| Permutation::from_raw((0..n).map(|i| ((i + s) % n) as u8).collect()))
        .collect();
    PermSet::known_group(n, elements)
}

pub(crate) fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(text: &str, n: usize) -> Permutation {
        parse_perm(text, n).unwrap()
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.shuffle(rng);
        Permutation::from_raw(images)
    }

    #[test]
    fn parses_compact_cycle_notation() {
        assert_eq!(p("(14)(2365)", 7).images(), vec![4, 3, 6, 1, 2, 5, 7]);
        assert_eq!(p("(1 4)(2 3 6 5)", 7), p("4 3 6 1 2 5 7", 7));
        assert_eq!(p("4361257", 7), p("4 3 6 1 2 5 7", 7));
    }

    #[test]
    fn parses_identity() {
        assert!(p("1 2 3", 3).is_identity());
        assert!(p("()", 3).is_identity());
    }

    #[test]
    fn multi_digit_points_above_nine() {
        let g = p("(1 10)(2 11 12)", 12);
        assert_eq!(g.apply(1), 10);
        assert_eq!(g.apply(12), 2);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_perm("(1 2)(1 3)", 3) {
            Err(Error::Parse { location, message }) => {
                assert_eq!(location.column, 7);
                assert!(message.contains("repeated"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_perm("(1 4)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_perm("(1 2", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_perm("1 2)", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_perm("1 2", 3), Err(Error::Parse { .. })));
        assert!(matches!(parse_perm("1 1 2", 3), Err(Error::Parse { .. })));
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let t = p("(1 2)", 3);
        assert!(t.compose(&t).unwrap().is_identity());
        let c = p("(1 2 3)", 3);
        assert_eq!(c.compose(&t).unwrap(), p("(1 3)", 3));
        assert!(matches!(c.compose(&p("(1 2)", 4)), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn inverses() {
        assert!(Permutation::identity(4).inverse().is_identity());
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert_eq!(p("(14)(2365)", 7).inverse(), p("(1 4)(2 5 6 3)", 7));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let g = random_perm(&mut rng, 7);
            assert!(g.compose(&g.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(5).cycle_type().parts(), &[1, 1, 1, 1, 1]);
        assert_eq!(p("(14)(2365)", 7).cycle_type().parts(), &[4, 2, 1]);
        assert_eq!(p("(1 3 5 2 4 6)", 6).cycle_type().parts(), &[6]);
    }

    #[test]
    fn display_round_trips() {
        let g = p("(14)(2365)", 7);
        assert_eq!(g.to_string(), "(1 4)(2 3 6 5)");
        assert_eq!(parse_perm(&g.to_string(), 7).unwrap(), g);
    }

    #[test]
    fn closures() {
        assert_eq!(closure(&[p("(1 2 3 4 5)", 5)], 100).unwrap().len(), 5);
        let a4 = closure(&[p("(1 2 3)", 4), p("(2 3 4)", 4)], 100).unwrap();
        assert_eq!(a4.len(), 12);
        assert!(a4.iter().all(Permutation::is_even));
        assert_eq!(a4, alternating_group(4));
        match closure(&[p("(1 2)", 2)], 1) {
            Err(Error::CapExceeded { reached, .. }) => assert_eq!(reached, 2),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn duplicates_rejected() {
        let g = p("(1 2)", 3);
        assert!(PermSet::new(3, vec![g.clone(), g]).is_err());
    }

    #[test]
    fn group_detection() {
        assert!(symmetric_group(4).is_group(u128::MAX).unwrap());
        let s = PermSet::new(3, vec![Permutation::identity(3), p("(1 2 3)", 3)]).unwrap();
        assert!(!s.is_group(1000).unwrap());
        let big = PermSet::new(3, symmetric_group(3).elements().to_vec()).unwrap();
        assert!(big.is_group(10).is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let s3 = symmetric_group(3);
        let imgs: Vec<_> = s3.iter().map(|g| g.images()).collect();
        assert_eq!(imgs[0], vec![1, 2, 3]);
        assert_eq!(imgs[5], vec![3, 2, 1]);
        assert_eq!(s3.len(), 6);
        assert_eq!(cyclic_group(4).len(), 4);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Permutation> {
            Just((0..n as u8).collect::<Vec<u8>>())
                .prop_shuffle()
                .prop_map(Permutation::from_raw)
        }

        proptest! {
            #[test]
            fn group_axioms(g in perm(7), h in perm(7), k in perm(7)) {
                let gh_k = g.compose(&h).unwrap().compose(&k).unwrap();
                let g_hk = g.compose(&h.compose(&k).unwrap()).unwrap();
                prop_assert_eq!(gh_k, g_hk);
                let id = Permutation::identity(7);
                prop_assert_eq!(g.compose(&id).unwrap(), g.clone());
                prop_assert_eq!(id.compose(&g).unwrap(), g.clone());
                prop_assert_eq!(g.inverse().inverse(), g);
            }

            #[test]
            fn conjugation_preserves_cycle_type(g in perm(8), h in perm(8)) {
                let conj = h.compose(&g.compose(&h.inverse()).unwrap()).unwrap();
                prop_assert_eq!(conj.cycle_type(), g.cycle_type());
            }

            #[test]
            fn closure_order_divides_factorial(g in perm(6), h in perm(6)) {
                let group = closure(&[g, h], 720).unwrap();
                prop_assert_eq!(720 % group.len(), 0);
            }
        }
    }
}
