//! Property R: finite decision procedures, the lattice `ω*(P)` with the maps
//! `m` and `Φ`, and failure witnesses on the symbolic families.

mod finite;
mod qlattice;
mod witness;

pub use finite::{
    characterization_conditions, has_property_r, implication_chain_check, omega_star_compact_check, sober_pipeline,
    wf_coherent_implies_r, ImplicationReport, RVerdict, SoberPipeline,
};
pub use qlattice::{
    antichains, build_q_lattice, check_m_continuous, finitely_generated_uppers, phi, phi_preimage_upper, PhiResult,
    QLattice,
};
pub use witness::{
    broken_r_witness, jia_r_witness, johnstone_r_witness, verify_r_failure, ExclusionRule, ExclusionSpec, PointRule,
    PointSpec, RFailureReport, RWitness,
};
