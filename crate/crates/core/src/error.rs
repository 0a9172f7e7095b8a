use thiserror::Error;

/// Errors raised by the order, topology and certificate machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("relation has a cycle: {}", .0.join(" <= "))]
    Cycle(Vec<String>),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("subset is not directed")]
    NotDirected,
    #[error("a nonempty set is required")]
    EmptySet,
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("size {size} exceeds the limit {limit}")]
    SizeTooLarge { size: usize, limit: usize },
    #[error("space is not T0: points `{0}` and `{1}` have the same open neighbourhoods")]
    NotT0(String, String),
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("set is not saturated")]
    NotSaturated,
    #[error("family is empty")]
    EmptyFamily,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("code {code} does not belong to family {family}")]
    ForeignCode { code: String, family: String },
    #[error("no rule table for family {0}")]
    NoRuleTable(String),
    #[error("upper-bound oracle exhausted after {0} candidates")]
    NoUpperBoundFound(usize),
    #[error("enumeration prefix of length {0} is not directed")]
    NotDirectedPrefix(usize),
    #[error("certificate is not verified: {0}")]
    UnverifiedCert(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("descriptor enumeration failed: {0}")]
    DescriptorEnumerationFailed(String),
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("set is not Scott open")]
    NotScottOpen,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
