//! Chain decompositions of countable posets and the subsets `K_n` they
//! induce.

mod build;
mod cert;
mod kn;

pub use build::{
    corrupted_johnstone_cert, cposet_from_countable_ideals, johnstone_cert, johnstone_plus_x_cert, product_tower,
    ProductLevel,
};
pub use cert::{
    chain_horizon, verify_cposet, CPosetCert, CertReport, ChainRule, ChainSpec, SupFlag, SupRule, SupSpec, VerifiedCert,
};
pub use kn::{
    build_kn, check_claim1, check_claim3, check_d_sub, local_finite_basis, relatively_open, verify_scott_trace,
    Agreement, KnWitness, LocalBasis, RelOpen, TraceReport,
};
