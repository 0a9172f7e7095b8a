//! Order-theoretic and topological constructions on finite posets and on
//! countable dcpos given by rule tables.

pub mod enumerate;
pub mod error;
pub mod limits;
pub mod order;
pub mod property_r;
pub mod report;
pub mod structure;
pub mod subset;
pub mod symbolic;
pub mod topo;

pub use error::{Error, Result};
pub use order::{FinPoset, IdealDescriptor};
pub use subset::Subset;
