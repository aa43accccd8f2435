//! Fixed-point bookkeeping for finite groups acting on a K3 surface, the
//! decomposition of the Néron–Severi lattice under A₆, and the case
//! analysis that leaves a single candidate extension.

mod decomposition;
mod exclusion;
mod lattice;
mod nikulin;

pub use decomposition::{
    decomposition_system, solve_decomposition, DecompositionSystem, Equation, MultiplicityVector,
    TRACE_OFFSET,
};
pub use exclusion::{
    admissible_cases, argument_3class_trace, argument_free_c4, argument_nonintegral,
    argument_order5_blocks, argument_pigeonhole, euler_iota, min_square_fixed_points,
    nonintegral_candidates, run_exclusion, stable_traces_order5, twisted_trace, ArgumentOutcome,
    ExclusionRecord, ExclusionReport, SignCase, Status, AXIOM_A1, AXIOM_A2,
};
pub use lattice::{
    e8_negative, hyperbolic_plane, k3_lattice, lattice_checks, transcendental_diag66, GramLattice,
    LatticeCheck,
};
pub use nikulin::{lefschetz_invariant_rank, NikulinTable, K3_EULER_NUMBER};

/// H⁰ ⊕ H⁴ is invariant under any group, so it accounts for two of the
/// invariant ranks computed by the Lefschetz average.
pub const TRIVIAL_SUMMANDS_RANK: u64 = 2;
