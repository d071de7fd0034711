//! Permutation actions of small classical groups, and the halved affine set.
//!
//! Field element with canonical index `i` is point `i + 1`; on the projective
//! line `∞` is point `q + 1`.

use std::fmt;
use std::str::FromStr;

use crate::constructions::field::{FieldElement, GaloisField};
use crate::error::{Error, Result};
use crate::perm::{alternating_group, cyclic_group, symmetric_group, PermSet, Permutation, MAX_DEGREE};

pub const DEFAULT_GROUP_CAP: usize = 2_000_000;

/// `{ x ↦ ax + b : a ∈ S, b ∈ GF(q) }` for a half-set `S` of the nonzero
/// elements (`S ∩ -S = ∅`, `S ∪ -S = GF(q)*`). The default `S` scans the
/// nonzero elements in canonical order, keeping `x` unless `-x` is already kept.
pub fn agl_halved(q: u32, set: Option<&[u32]>) -> Result<PermSet> {
    if q % 2 == 0 {
        return Err(Error::invalid(format!("q = {q} must be odd")));
    }
    let f = field_for_degree(q, q as usize)?;
    let s: Vec<FieldElement> = match set {
        Some(raw) => {
            let s = raw.iter().map(|&x| f.element(x)).collect::<Result<Vec<_>>>()?;
            validate_half_set(&f, &s)?;
            s
        }
        None => {
            let mut s: Vec<FieldElement> = Vec::new();
            for x in f.nonzero() {
                if !s.contains(&f.neg(x)) {
                    s.push(x);
                }
            }
            s
        }
    };
    let mut elements = Vec::with_capacity(s.len() * q as usize);
    for &a in &s {
        for b in f.elements() {
            elements.push(affine(&f, a, b, 0));
        }
    }
    PermSet::new(q as usize, elements)
}

fn validate_half_set(f: &GaloisField, s: &[FieldElement]) -> Result<()> {
    let half = (f.order() as usize - 1) / 2;
    if s.len() != half {
        return Err(Error::invalid(format!("half-set must have {half} elements, got {}", s.len())));
    }
    for (i, &x) in s.iter().enumerate() {
        if x == FieldElement::ZERO {
            return Err(Error::invalid("half-set may not contain 0"));
        }
        if s[..i].contains(&x) {
            return Err(Error::invalid(format!("half-set repeats {x}")));
        }
        if s.contains(&f.neg(x)) {
            return Err(Error::invalid(format!("half-set contains both {x} and its negative {}", f.neg(x))));
        }
    }
    Ok(())
}

fn field_for_degree(q: u32, degree: usize) -> Result<GaloisField> {
    if degree > MAX_DEGREE {
        return Err(Error::invalid(format!("action on {degree} points exceeds degree {MAX_DEGREE}")));
    }
    GaloisField::builtin(q)
}

/// `x ↦ a·x^(p^i) + b`.
fn affine(f: &GaloisField, a: FieldElement, b: FieldElement, i: u32) -> Permutation {
    let images: Vec<usize> = f
        .elements()
        .map(|x| f.add(f.mul(a, f.frobenius(x, i)), b).index() + 1)
        .collect();
    Permutation::from_images(&images).expect("affine map is a bijection")
}

/// `x ↦ (a·x^σ + b) / (c·x^σ + d)` on `GF(q) ∪ {∞}`, `σ = p^i`.
fn mobius(f: &GaloisField, m: [FieldElement; 4], i: u32) -> Permutation {
    let [a, b, c, d] = m;
    let q = f.order() as usize;
    let inf = q;
    let mut images = Vec::with_capacity(q + 1);
    for x in f.elements() {
        let y = f.frobenius(x, i);
        let num = f.add(f.mul(a, y), b);
        let den = f.add(f.mul(c, y), d);
        images.push(match f.div(num, den) {
            Some(v) => v.index(),
            None => inf,
        });
    }
    images.push(match f.div(a, c) {
        Some(v) => v.index(),
        None => inf,
    });
    Permutation::from_images(&images.iter().map(|&v| v + 1).collect::<Vec<_>>()).expect("invertible matrix")
}

/// One matrix per element of `PGL₂(q)`: `(a b; 1 d)` with `ad ≠ b`, and
/// `(a b; 0 1)` with `a ≠ 0`.
fn pgl2_representatives(f: &GaloisField) -> Vec<[FieldElement; 4]> {
    let mut out = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            for d in f.elements() {
                if f.mul(a, d) != b {
                    out.push([a, b, FieldElement::ONE, d]);
                }
            }
        }
    }
    for a in f.nonzero() {
        for b in f.elements() {
            out.push([a, b, FieldElement::ZERO, FieldElement::ONE]);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Sym,
    Alt,
    Cyclic,
    Agl1,
    AGammaL1,
    Psl2,
    Pgl2,
    PGammaL2,
}

impl GroupKind {
    pub const ALL: [GroupKind; 8] = [
        GroupKind::Sym,
        GroupKind::Alt,
        GroupKind::Cyclic,
        GroupKind::Agl1,
        GroupKind::AGammaL1,
        GroupKind::Psl2,
        GroupKind::Pgl2,
        GroupKind::PGammaL2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Sym => "sym",
            GroupKind::Alt => "alt",
            GroupKind::Cyclic => "cyclic",
            GroupKind::Agl1 => "agl1",
            GroupKind::AGammaL1 => "agammal1",
            GroupKind::Psl2 => "psl2",
            GroupKind::Pgl2 => "pgl2",
            GroupKind::PGammaL2 => "pgammal2",
        }
    }

    /// Whether the parameter is a field order rather than a degree.
    pub fn takes_field(self) -> bool {
        !matches!(self, GroupKind::Sym | GroupKind::Alt | GroupKind::Cyclic)
    }

    /// Number of points acted on.
    pub fn degree(self, param: u32) -> usize {
        match self {
            GroupKind::Psl2 | GroupKind::Pgl2 | GroupKind::PGammaL2 => param as usize + 1,
            _ => param as usize,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown group kind {s:?}; expected one of sym, alt, cyclic, agl1, agammal1, psl2, pgl2, pgammal2"
                ))
            })
    }
}

fn factorial_u128(n: u32) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// The predicted order, checked against `cap` before enumeration.
fn expected_order(kind: GroupKind, param: u32, e: u32) -> Option<u128> {
    let q = param as u128;
    match kind {
        GroupKind::Sym => factorial_u128(param),
        GroupKind::Alt => factorial_u128(param).map(|f| if param >= 2 { f / 2 } else { f }),
        GroupKind::Cyclic => Some(q),
        GroupKind::Agl1 => Some(q * (q - 1)),
        GroupKind::AGammaL1 => Some(q * (q - 1) * e as u128),
        GroupKind::Pgl2 => Some((q + 1) * q * (q - 1)),
        GroupKind::Psl2 => Some((q + 1) * q * (q - 1) / if param % 2 == 0 { 1 } else { 2 }),
        GroupKind::PGammaL2 => Some((q + 1) * q * (q - 1) * e as u128),
    }
}

/// The explicit element set of the named group in its natural action:
/// degree `param` for `sym`/`alt`/`cyclic`, the affine line `GF(q)` for the
/// one-dimensional groups and the projective line for the rest.
pub fn classical_group(kind: GroupKind, param: u32, cap: usize) -> Result<PermSet> {
    if param == 0 {
        return Err(Error::invalid("group parameter must be positive"));
    }
    let degree = kind.degree(param);
    if degree > MAX_DEGREE {
        return Err(Error::invalid(format!("action on {degree} points exceeds degree {MAX_DEGREE}")));
    }
    let field = if kind.takes_field() {
        Some(GaloisField::builtin(param)?)
    } else {
        None
    };
    let e = field.as_ref().map_or(1, GaloisField::degree);
    let order = expected_order(kind, param, e).unwrap_or(u128::MAX);
    if order > cap as u128 {
        return Err(Error::CapExceeded {
            what: "group order",
            cap: cap as u128,
            reached: order,
        });
    }
    let set = match (kind, field) {
        (GroupKind::Sym, _) => return Ok(symmetric_group(degree)),
        (GroupKind::Alt, _) => return Ok(alternating_group(degree)),
        (GroupKind::Cyclic, _) => return Ok(cyclic_group(degree)),
        (GroupKind::Agl1 | GroupKind::AGammaL1, Some(f)) => {
            let twists = if kind == GroupKind::Agl1 { 1 } else { f.degree() };
            let mut elements = Vec::new();
            for i in 0..twists {
                for a in f.nonzero() {
                    for b in f.elements() {
                        elements.push(affine(&f, a, b, i));
                    }
                }
            }
            PermSet::new(degree, elements)?
        }
        (GroupKind::Psl2 | GroupKind::Pgl2 | GroupKind::PGammaL2, Some(f)) => {
            let twists = if kind == GroupKind::PGammaL2 { f.degree() } else { 1 };
            let mut elements = Vec::new();
            for m in pgl2_representatives(&f) {
                let [a, b, c, d] = m;
                let det = f.sub(f.mul(a, d), f.mul(b, c));
                if kind == GroupKind::Psl2 && !f.is_square(det) {
                    continue;
                }
                for i in 0..twists {
                    elements.push(mobius(&f, m, i));
                }
            }
            PermSet::new(degree, elements)?
        }
        _ => return Err(Error::internal("field missing for a field group")),
    };
    if set.len() as u128 != order {
        return Err(Error::internal(format!(
            "{kind}({param}) has {} elements, expected {order}",
            set.len()
        )));
    }
    Ok(set.assume_group())
}
