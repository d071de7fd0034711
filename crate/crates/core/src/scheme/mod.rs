//! The conjugacy-class association scheme of `S_n`.
//!
//! Rows and columns of every `n! × n!` matrix are indexed by `S_n` in
//! lexicographic order of image sequences. Matrix work is capped (default
//! `n ≤ 5`, at most 6); the coefficient families `m` and `n` of the split
//! basis come from character formulas and need no matrices.
//!
//! `C_λ` is indexed by unordered set partitions of shape `λ`, i.e. by distinct
//! Young subgroups. Indexing by tabloids instead would multiply it by
//! `∏ (multiplicity of each part)!`.

pub mod matrix;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::characters::{character_table, class_size, CharacterTable, MnEvaluator, DEFAULT_TABLE_CAP};
use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_of, Partition, PartitionIndex};
use crate::perm::{symmetric_group, Permutation};
use crate::tabloids::{fixed_count_for_type, fixed_tabloid_count};

pub use matrix::{rank, QMatrix};

pub const DEFAULT_MATRIX_CAP: usize = 5;
/// Largest degree for which `n! × n!` matrices are ever built.
pub const HARD_MATRIX_CAP: usize = 6;

/// `S_n` in lexicographic order of image sequences.
pub fn canonical_elements(n: usize) -> Vec<Permutation> {
    symmetric_group(n).elements().to_vec()
}

fn part_multiplicity_factorial(la: &Partition) -> BigUint {
    la.multiplicities().into_iter().map(|(_, m)| factorial(m)).product()
}

/// `m_{λ,α}`: the number of set partitions of shape `λ` whose blocks are
/// unions of cycles of a permutation of type `α`, in canonical `α` order.
pub fn coeffs_m(n: usize, la: &Partition) -> Result<Vec<(Partition, BigUint)>> {
    if la.weight() != n {
        return Err(Error::WeightMismatch {
            expected: n,
            found: la.weight(),
        });
    }
    let scale = part_multiplicity_factorial(la);
    Ok(partitions_of(n)
        .into_iter()
        .map(|alpha| {
            let m = fixed_count_for_type(&alpha, la) / &scale;
            (alpha, m)
        })
        .collect())
}

/// `n_{λ,μ} = Σ_α m_{λ,α} |C_α| χ^μ_α / f_μ`, the eigenvalue of `C_λ` on the
/// `μ`-isotypic component, in canonical `μ` order.
pub fn coeffs_n(n: usize, la: &Partition) -> Result<Vec<(Partition, BigRational)>> {
    if n > DEFAULT_TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "split-basis degree",
            cap: DEFAULT_TABLE_CAP as u128,
            reached: n as u128,
        });
    }
    let m = coeffs_m(n, la)?;
    let weighted: Vec<(Partition, BigInt)> = m
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(alpha, v)| {
            let w = BigInt::from(v * class_size(&alpha));
            (alpha, w)
        })
        .collect();
    partitions_of(n)
        .into_par_iter()
        .map(|mu| {
            let mut ev = MnEvaluator::new();
            let mut total = BigInt::zero();
            for (alpha, w) in &weighted {
                total += w * ev.eval(&mu, alpha)?;
            }
            let f = BigInt::from(mu.hook_degree());
            Ok((mu, BigRational::new(total, f)))
        })
        .collect()
}

/// `q^ν_{λμ} = f_λ f_μ g_{λμν} / f_ν`, with the Kronecker coefficient
/// `g = (1/n!) Σ_α |C_α| χ^λ_α χ^μ_α χ^ν_α`. Independent of any matrix.
pub fn krein_by_characters(table: &CharacterTable, la: &Partition, mu: &Partition) -> Result<Vec<(Partition, BigRational)>> {
    let idx = table.index();
    let (li, mi) = (position(idx, la)?, position(idx, mu)?);
    let nfact = BigInt::from(factorial(table.n()));
    let k = idx.len();
    let fl = BigInt::from(table.degrees()[li].clone());
    let fm = BigInt::from(table.degrees()[mi].clone());
    Ok((0..k)
        .map(|ni| {
            let s: BigInt = (0..k)
                .map(|a| {
                    BigInt::from(table.class_sizes()[a].clone())
                        * table.value(li, a)
                        * table.value(mi, a)
                        * table.value(ni, a)
                })
                .sum();
            let fnu = BigInt::from(table.degrees()[ni].clone());
            (idx.get(ni).clone(), BigRational::new(&fl * &fm * s, &nfact * fnu))
        })
        .collect())
}

fn position(idx: &PartitionIndex, p: &Partition) -> Result<usize> {
    idx.position(p).ok_or_else(|| Error::WeightMismatch {
        expected: idx.n(),
        found: p.weight(),
    })
}

/// Precomputed data for matrix-level work at one degree.
pub struct SchemeContext {
    n: usize,
    elements: Vec<Permutation>,
    table: CharacterTable,
    /// Class position (in canonical partition order) of `g_i g_j⁻¹`.
    class_of: Vec<u16>,
    /// One `(i, j)` position per class.
    representative: Vec<(usize, usize)>,
}

impl SchemeContext {
    /// Builds the context, rejecting `n > max_n` or `n > HARD_MATRIX_CAP`.
    pub fn new(n: usize, max_n: usize) -> Result<Self> {
        let cap = max_n.min(HARD_MATRIX_CAP);
        if n > cap {
            return Err(Error::CapExceeded {
                what: "scheme matrix degree",
                cap: cap as u128,
                reached: n as u128,
            });
        }
        if n == 0 {
            return Err(Error::invalid("scheme degree must be at least 1"));
        }
        let elements = canonical_elements(n);
        let table = character_table(n, DEFAULT_TABLE_CAP)?;
        let idx = table.index();
        let inverses: Vec<Permutation> = elements.iter().map(Permutation::inverse).collect();
        let big = elements.len();
        let class_of: Vec<u16> = (0..big * big)
            .into_par_iter()
            .map(|k| {
                let g = elements[k / big].compose_unchecked(&inverses[k % big]);
                idx.position(&g.cycle_type()).expect("cycle type of degree n") as u16
            })
            .collect();
        let mut representative = vec![(usize::MAX, 0); idx.len()];
        for (k, &c) in class_of.iter().enumerate() {
            if representative[c as usize].0 == usize::MAX {
                representative[c as usize] = (k / big, k % big);
            }
        }
        Ok(SchemeContext {
            n,
            elements,
            table,
            class_of,
            representative,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn partitions(&self) -> &[Partition] {
        self.table.partitions()
    }

    fn pos(&self, p: &Partition) -> Result<usize> {
        position(self.table.index(), p)
    }

    fn class_at(&self, i: usize, j: usize) -> usize {
        self.class_of[i * self.dim() + j] as usize
    }

    /// `A_α`: entry 1 exactly when `g_i g_j⁻¹` has cycle type `α`.
    pub fn class_matrix(&self, alpha: &Partition) -> Result<QMatrix> {
        let a = self.pos(alpha)?;
        QMatrix::from_fn(self.dim(), 1, |i, j| (self.class_at(i, j) == a) as i128)
    }

    /// Whether the entry at `(i, j)` depends only on the class of `g_i g_j⁻¹`.
    pub fn is_central(&self, m: &QMatrix) -> bool {
        let d = self.dim();
        (0..d).into_par_iter().all(|i| {
            (0..d).all(|j| {
                let (ri, rj) = self.representative[self.class_at(i, j)];
                m.numerator(i, j) == m.numerator(ri, rj)
            })
        })
    }

    /// Coefficients of a central matrix in the basis `{A_α}`.
    pub fn class_coordinates(&self, m: &QMatrix) -> Result<Vec<BigRational>> {
        if !self.is_central(m) {
            return Err(Error::internal("matrix is not in the span of the class matrices"));
        }
        Ok(self.representative.iter().map(|&(i, j)| m.get(i, j)).collect())
    }

    fn idempotent_unchecked(&self, mu: &Partition) -> Result<QMatrix> {
        let mi = self.pos(mu)?;
        let f = self.table.degrees()[mi].to_i128().ok_or(Error::Overflow("degree"))?;
        let row: Vec<i128> = self.table.values()[mi]
            .iter()
            .map(|v| v.to_i128().ok_or(Error::Overflow("character value")))
            .collect::<Result<_>>()?;
        let nfact = factorial(self.n).to_i128().ok_or(Error::Overflow("n!"))?;
        QMatrix::from_fn(self.dim(), nfact, |i, j| f * row[self.class_at(i, j)])
    }

    /// `E_μ = (f_μ / n!) Σ_α χ^μ_α A_α`, checked to be an idempotent of trace `f_μ²`.
    pub fn idempotent(&self, mu: &Partition) -> Result<QMatrix> {
        let e = self.idempotent_unchecked(mu)?;
        if e.mul(&e)? != e {
            return Err(Error::internal(format!("E_{mu} is not idempotent")));
        }
        let f = BigInt::from(mu.hook_degree());
        if e.trace() != BigRational::from_integer(&f * &f) {
            return Err(Error::internal(format!("trace of E_{mu} is not f^2")));
        }
        Ok(e)
    }

    /// All `E_μ` in canonical order, additionally checked pairwise orthogonal
    /// and summing to the identity.
    pub fn idempotents(&self) -> Result<Vec<QMatrix>> {
        let es: Vec<QMatrix> = self
            .partitions()
            .iter()
            .map(|mu| self.idempotent(mu))
            .collect::<Result<_>>()?;
        for a in 0..es.len() {
            for b in (a + 1)..es.len() {
                if !es[a].mul(&es[b])?.is_zero() {
                    return Err(Error::internal(format!(
                        "E_{} E_{} is not zero",
                        self.partitions()[a],
                        self.partitions()[b]
                    )));
                }
            }
        }
        let mut sum = QMatrix::zeros(self.dim());
        for e in &es {
            sum = sum.add(e)?;
        }
        if sum != QMatrix::identity(self.dim()) {
            return Err(Error::internal("idempotents do not sum to the identity"));
        }
        Ok(es)
    }

    /// `C_λ` built entrywise from the permutation `g_i g_j⁻¹` itself, then
    /// checked to lie in the span of the class matrices.
    pub fn split_matrix(&self, la: &Partition) -> Result<QMatrix> {
        if la.weight() != self.n {
            return Err(Error::WeightMismatch {
                expected: self.n,
                found: la.weight(),
            });
        }
        let scale = part_multiplicity_factorial(la);
        let d = self.dim();
        let inverses: Vec<Permutation> = self.elements.iter().map(Permutation::inverse).collect();
        let entries: Vec<i128> = (0..d * d)
            .into_par_iter()
            .map(|k| {
                let g = self.elements[k / d].compose_unchecked(&inverses[k % d]);
                let count = fixed_tabloid_count(&g, la)? / &scale;
                count.to_i128().ok_or(Error::Overflow("split matrix entry"))
            })
            .collect::<Result<_>>()?;
        let c = QMatrix::from_fn(d, 1, |i, j| entries[i * d + j])?;
        if !self.is_central(&c) || !c.is_symmetric() {
            return Err(Error::internal(format!("C_{la} is not a symmetric class function")));
        }
        Ok(c)
    }

    /// Checks `C_λ = Σ_μ n_{λ,μ} E_μ` against explicit matrices.
    pub fn verify_split_expansion(&self, la: &Partition, idempotents: &[QMatrix]) -> Result<()> {
        let c = self.split_matrix(la)?;
        let mut sum = QMatrix::zeros(self.dim());
        for ((_, coef), e) in coeffs_n(self.n, la)?.iter().zip(idempotents) {
            let (p, q) = rational_parts(coef)?;
            sum = sum.add(&e.scale(p, q)?)?;
        }
        if sum != c {
            return Err(Error::internal(format!("eigenvalue expansion of C_{la} does not match")));
        }
        Ok(())
    }

    /// Rank of `{C_λ}` as vectors of length `(n!)²`.
    pub fn split_rank(&self) -> Result<usize> {
        let vectors: Vec<Vec<BigRational>> = self
            .partitions()
            .iter()
            .map(|la| Ok(self.split_matrix(la)?.to_rationals()))
            .collect::<Result<_>>()?;
        Ok(rank(&vectors))
    }

    /// Closure of the class-matrix span under both products:
    /// `A_α A_β` is central and `A_α ∘ A_β = δ_{αβ} A_α`.
    pub fn bose_mesner_check(&self) -> Result<()> {
        let mats: Vec<QMatrix> = self
            .partitions()
            .iter()
            .map(|a| self.class_matrix(a))
            .collect::<Result<_>>()?;
        for a in 0..mats.len() {
            for b in a..mats.len() {
                if !self.is_central(&mats[a].mul(&mats[b])?) {
                    return Err(Error::internal("class matrix product leaves the algebra"));
                }
                let h = mats[a].hadamard(&mats[b])?;
                if (a == b && h != mats[a]) || (a != b && !h.is_zero()) {
                    return Err(Error::internal("class matrices are not disjoint 0/1 matrices"));
                }
            }
        }
        Ok(())
    }

    /// Krein parameters `q^ν_{λμ} = n! trace((E_λ ∘ E_μ) E_ν) / f_ν²`, checked
    /// non-negative and to reassemble `E_λ ∘ E_μ = (1/n!) Σ_ν q^ν E_ν`.
    pub fn krein(&self, la: &Partition, mu: &Partition, idempotents: &[QMatrix]) -> Result<Vec<(Partition, BigRational)>> {
        let (li, mi) = (self.pos(la)?, self.pos(mu)?);
        let prod = idempotents[li].hadamard(&idempotents[mi])?;
        let nfact = BigRational::from_integer(BigInt::from(factorial(self.n)));
        let mut out = Vec::with_capacity(idempotents.len());
        let mut rebuilt = QMatrix::zeros(self.dim());
        for (nu, e) in self.partitions().iter().zip(idempotents) {
            let f = BigInt::from(nu.hook_degree());
            let q = &nfact * prod.trace_of_product(e)? / BigRational::from_integer(&f * &f);
            if q.is_negative() {
                return Err(Error::internal(format!("negative Krein parameter at {la}, {mu}, {nu}")));
            }
            let (p, d) = rational_parts(&(&q / &nfact))?;
            rebuilt = rebuilt.add(&e.scale(p, d)?)?;
            out.push((nu.clone(), q));
        }
        if rebuilt != prod {
            return Err(Error::internal(format!("Krein expansion of E_{la} o E_{mu} does not reassemble")));
        }
        Ok(out)
    }
}

fn rational_parts(q: &BigRational) -> Result<(i128, i128)> {
    let p = q.numer().to_i128().ok_or(Error::Overflow("rational coefficient"))?;
    let d = q.denom().to_i128().ok_or(Error::Overflow("rational coefficient"))?;
    Ok((p, d))
}
