//! Exact group-theoretic and lattice computations for finite groups of
//! shape A₆.μ₄ acting on K3 surfaces.

pub mod chartab;
pub mod error;
pub mod exact;
pub mod extbuild;
pub mod k3verify;
pub mod permgrp;
pub mod pgl9;
pub mod pipeline;
pub mod report;

pub use chartab::CharacterTable;
pub use error::{Error, Result};
pub use exact::{CycloNum, Rational};
pub use extbuild::{ExtensionCandidate, ExtensionKind};
pub use k3verify::{MultiplicityVector, NikulinTable, SignCase, Status};
pub use permgrp::{Perm, PermGroup};
pub use pipeline::{run_stage, Stage};
pub use report::{Check, CheckStatus, Report};
