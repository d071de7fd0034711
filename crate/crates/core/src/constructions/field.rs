//! Small finite fields `GF(p^e)` with full lookup tables.
//!
//! An element is stored as the base-`p` integer of its coefficient vector,
//! constant term least significant. That integer order is the canonical
//! element order, and point labels `1..q` follow it.

use std::fmt;

use crate::error::{Error, Result};

/// Built-in monic irreducible polynomials, coefficients constant term first.
const BUILTIN_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (7, 2, &[1, 0, 1]),
];

/// An element of some [`GaloisField`], as its canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
pub struct GaloisField {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `q = p^e` if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut e = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let coef = a[top] * lead_inv % p;
        if coef != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let idx = top - db + i;
                a[idx] = (a[idx] + p - coef * bi % p) % p;
            }
        }
        a.pop();
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mod_inv(a: u32, p: u32) -> u32 {
    (1..p).find(|&x| a * x % p == 1).expect("non-zero residue mod a prime")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem(modulus.to_vec(), &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl GaloisField {
    /// `GF(p^e)` with the given monic modulus (constant term first).
    pub fn new(p: u32, e: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if e == 0 || modulus.len() != e as usize + 1 || modulus[e as usize] != 1 {
            return Err(Error::invalid("modulus must be monic of degree e"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::invalid("modulus coefficients must be reduced mod p"));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= 1 << 12)
            .ok_or_else(|| Error::invalid("field too large"))?;
        if !is_irreducible(&modulus, p) {
            return Err(Error::invalid(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        let digits = |x: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(e as usize);
            let mut x = x;
            for _ in 0..e {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let encode = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum);
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = poly_rem(prod, &modulus, p);
                r.resize(e as usize, 0);
                mul[(a * q + b) as usize] = encode(&r);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).expect("additive inverse"))
            .collect();
        let mut inv = vec![0; qs];
        for a in 1..q {
            inv[a as usize] = (1..q)
                .find(|&b| mul[(a * q + b) as usize] == 1)
                .ok_or_else(|| Error::internal("missing multiplicative inverse"))?;
        }
        Ok(GaloisField {
            p,
            e,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    /// Prime fields of any order up to 4096, and the built-in extension fields
    /// of order 4, 8, 9, 16, 25, 27, 32, 49.
    pub fn builtin(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::invalid(format!("{q} is not a prime power")))?;
        if e == 1 {
            return GaloisField::new(p, 1, vec![0, 1]);
        }
        let modulus = BUILTIN_MODULI
            .iter()
            .find(|(bp, be, _)| *bp == p && *be == e)
            .map(|(_, _, m)| m.to_vec())
            .ok_or_else(|| Error::invalid(format!("no built-in polynomial for GF({q})")))?;
        GaloisField::new(p, e, modulus)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[(a.0 * self.q + b.0) as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[(a.0 * self.q + b.0) as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.0 != 0).then(|| FieldElement(self.inv[a.0 as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x ↦ x^(p^i)`.
    pub fn frobenius(&self, a: FieldElement, i: u32) -> FieldElement {
        self.pow(a, (self.p as u64).pow(i))
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        a.0 == 0 || self.nonzero().any(|x| self.mul(x, x) == a)
    }

    /// Parses an element from its canonical index.
    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index >= self.q {
            return Err(Error::invalid(format!("{index} is not an element of GF({})", self.q)));
        }
        Ok(FieldElement(index))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const ORDERS: [u32; 14] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49];

    #[test]
    fn builtin_fields_satisfy_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in ORDERS {
            let f = GaloisField::builtin(q).unwrap();
            assert_eq!(f.order(), q);
            for a in f.nonzero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
            }
            for _ in 0..200 {
                let [a, b, c] = [0; 3].map(|_| FieldElement(rng.gen_range(0..q)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
            // The multiplicative group is cyclic of order q - 1.
            let generator = f
                .nonzero()
                .find(|&g| (1..q - 1).all(|k| f.pow(g, k as u64) != FieldElement::ONE));
            assert!(generator.is_some(), "GF({q}) has no primitive element");
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism() {
        for q in [8, 9, 27, 32] {
            let f = GaloisField::builtin(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let fa = f.frobenius(a, 1);
                    let fb = f.frobenius(b, 1);
                    assert_eq!(f.frobenius(f.add(a, b), 1), f.add(fa, fb));
                    assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(fa, fb));
                }
                assert_eq!(f.frobenius(a, f.degree()), a);
            }
        }
    }

    #[test]
    fn rejects_reducible_and_unsupported() {
        // x^2 + 1 = (x + 1)^2 over GF(2).
        assert!(GaloisField::new(2, 2, vec![1, 0, 1]).is_err());
        // x^2 + 1 splits over GF(5) since 2^2 = -1.
        assert!(GaloisField::new(5, 2, vec![1, 0, 1]).is_err());
        assert!(GaloisField::new(4, 1, vec![0, 1]).is_err());
        assert!(GaloisField::builtin(6).is_err());
        assert!(GaloisField::builtin(64).is_err());
    }

    #[test]
    fn squares() {
        let f = GaloisField::builtin(7).unwrap();
        let squares: Vec<u32> = f.nonzero().filter(|&a| f.is_square(a)).map(|a| a.0).collect();
        assert_eq!(squares, vec![1, 2, 4]);
        let f8 = GaloisField::builtin(8).unwrap();
        assert!(f8.nonzero().all(|a| f8.is_square(a)));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
    }
}
