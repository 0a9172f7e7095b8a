//! Structured verdicts shared by the checkers and the command line.

use serde::{Deserialize, Serialize};

/// Concrete evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Set(Vec<String>),
    Pair(String, String),
    Family(Vec<Vec<String>>),
    Index(usize),
    Note(String),
}

/// Bounds under which a verdict was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subfamily: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn pass(property: impl Into<String>) -> Self {
        Verdict {
            property: property.into(),
            holds: true,
            witness: None,
            bounds: None,
            detail: None,
        }
    }

    pub fn fail(property: impl Into<String>, witness: Witness) -> Self {
        Verdict {
            property: property.into(),
            holds: false,
            witness: Some(witness),
            bounds: None,
            detail: None,
        }
    }

    pub fn from_bool(property: impl Into<String>, holds: bool, witness: Option<Witness>) -> Self {
        Verdict {
            property: property.into(),
            holds,
            witness: if holds { None } else { witness },
            bounds: None,
            detail: None,
        }
    }

    pub fn with_bounds(mut self, bounds: Bounds) -> Self {
        self.bounds = Some(bounds);
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}
