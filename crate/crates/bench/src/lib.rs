//! Shared inputs for the benchmarks.

use a6ext_core::chartab::{character_table, CharacterTable};
use a6ext_core::k3verify::{decomposition_system, DecompositionSystem, NikulinTable};
use a6ext_core::pgl9::classify_overgroups;
use a6ext_core::PermGroup;

pub fn a6() -> PermGroup {
    classify_overgroups().expect("overgroups").psl
}

pub fn a6_table() -> CharacterTable {
    character_table(&a6()).expect("table")
}

pub fn a6_system() -> DecompositionSystem {
    decomposition_system(&a6_table(), &NikulinTable::standard()).expect("system")
}
