//! Exact λ-transitivity for sets and groups of permutations.
//!
//! A set `D ⊆ S_n` is λ-transitive when every ordered pair of tabloids of
//! shape λ is joined by the same number of elements of `D`. This crate decides
//! that property two independent ways (direct tabloid counting and a
//! character-sum criterion), builds λ-transitive sets from block designs and
//! finite-field groups, and computes the split basis and Krein parameters of
//! the association scheme of `S_n`. All arithmetic is exact.

pub mod characters;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod io;
pub mod partitions;
pub mod perm;
pub mod scheme;
pub mod tabloids;
pub mod transitivity;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use perm::{PermSet, Permutation};
