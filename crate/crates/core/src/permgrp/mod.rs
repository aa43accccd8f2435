//! Permutation groups of small degree, enumerated in full.
//!
//! Every group keeps its complete element list in lexicographic order on
//! image sequences. The largest group handled here has a few thousand
//! elements, so no stabiliser chain is needed.

mod classes;
mod fingerprint;
mod group;
mod ops;
mod perm;

pub use classes::{ClassPartition, ConjClassData};
pub use fingerprint::{abelian_invariants, abelianization, fingerprint, Fingerprint};
pub use group::{PermGroup, ORDER_GUARD};
pub use ops::{
    center, centralizer_of_subgroup, conjugation_action, conjugation_image,
    conjugation_image_group, derived_subgroup, fusion_type, has_a6_certificate,
    index2_overgroups, is_perfect, ConjugationImage, FusionType, A6_CLASS_SIZES,
};
pub use perm::Perm;
