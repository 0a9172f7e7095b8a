//! Finite topological spaces and the checkers built on them.

mod compact;
mod derive;
mod io;
mod product;
mod smyth;
mod sober;
mod space;

pub use compact::{
    classify_compactness, classify_space, compact_saturated, is_distributive, CompactnessFlags, KFamily, SpaceFlags,
};
pub use derive::{derive_topology, is_scott_open, scott_opens_by_definition, specialization_order};
pub use io::{parse_space, space_to_json, SpaceDoc};
pub use product::{compare_product_topologies, ProductComparison};
pub use smyth::{
    kfamily_sup, rudin_classical, rudin_minimal, smyth_condition_violation, smyth_irreducible, smyth_power_space,
    SmythCondition,
};
pub use sober::{
    irreducible_closed_sets, is_coherent, is_compact, is_irreducible, is_sober, is_well_filtered, smyth_poset,
};
pub use space::{FinSpace, TopologyKind};
