//! The named countable posets, given by order rules, with their truncations,
//! definable sets, directed-set classification and chain extraction.

mod chain;
mod code;
mod definable;
mod directed;
pub mod facts;
mod status;
mod tower;

pub use chain::{extract_chain, extract_chain_with_budget, ChainStream, Enumeration, DEFAULT_BUDGET};
pub use code::{AmbientFamily, Coord, ElemCode};
pub use definable::{member, DefinableSet, Region};
pub use directed::{
    classify_directed, column_of, columns_within, descriptor_completeness, diagonal_index, diagonal_pair,
    enumerate_ideal_descriptors, escape_bounds, ColumnId, CompletenessMode, CompletenessReport, DescriptorStream,
    SupResult, SymbolicIdeal,
};
pub use status::{
    compact_saturated_status, scott_open_status, stabilization_depth, CompactStatus, CoverReport, CoverRule,
    OpenStatus, OpenWitness, Rule, RuleTable,
};
pub use tower::{truncate, truncation_codes, up_within, within_depth, Truncation};
