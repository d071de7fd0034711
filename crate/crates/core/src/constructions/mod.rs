//! Builders of λ-transitive sets and groups.

pub mod design;
pub mod field;
pub mod groups;
pub mod product;

pub use design::{complete_blocks, fano_blocks, nu_identities_check, validate_design, BlockDesign, IdentityCheck};
pub use field::{FieldElement, GaloisField};
pub use groups::{agl_halved, classical_group, GroupKind, DEFAULT_GROUP_CAP};
pub use product::{product_construct, product_element, r_by_split, tuple_transfer_counts, BijectionAssignment};
