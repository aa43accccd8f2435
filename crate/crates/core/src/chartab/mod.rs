//! Exact character tables by the Dixon–Schneider method.
//!
//! Central characters are found as common eigenvectors of the class-sum
//! matrices over a prime field, then lifted to Q(ζₑ) through power maps.

mod algebra;
mod golden;
mod modp;
mod table;

pub use algebra::{structure_column_at, structure_constants, ClassAlgebra, ALGEBRA_ORDER_GUARD};
pub use golden::{
    class_labels, format_value, half_sqrt5, match_reference_table, match_table, reference_a6_table, render_json,
    render_text, sqrt5, GoldenTable, A6_CLASS_NAMES,
};
pub use modp::is_prime;
pub use table::{
    admissible_prime_after, character_table, character_table_with_prime, dixon_prime,
    CharacterTable, MAX_CLASSES,
};
