//! Finite partial orders.

pub mod corpus;
pub mod io;
mod poset;

pub use corpus::{corpus, CorpusMode};
pub use poset::{FinPoset, IdealDescriptor};
