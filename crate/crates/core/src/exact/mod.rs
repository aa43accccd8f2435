//! Exact arithmetic: reduced rationals and elements of cyclotomic fields.

mod cyclo;
mod rational;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloNum};
pub use rational::{int, rat, rational_json, Rational};
