//! Poset documents and Hasse diagrams.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::poset::FinPoset;
use crate::error::{Error, Result};

/// On-disk form of a poset: element names and generating pairs `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    pub le: Vec<[String; 2]>,
}

impl PosetDoc {
    pub fn from_poset(p: &FinPoset) -> Self {
        PosetDoc {
            elements: p.labels().to_vec(),
            le: p
                .covers()
                .into_iter()
                .map(|(a, b)| [p.label(a).to_string(), p.label(b).to_string()])
                .collect(),
        }
    }

    pub fn to_poset(&self) -> Result<FinPoset> {
        let pairs: Vec<(&str, &str)> = self.le.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        FinPoset::build(&self.elements, &pairs)
    }
}

pub fn parse_poset(text: &str) -> Result<FinPoset> {
    let doc: PosetDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_poset()
}

pub fn poset_to_json(p: &FinPoset) -> String {
    serde_json::to_string_pretty(&PosetDoc::from_poset(p)).expect("poset documents serialize")
}

/// DOT digraph of the covering relation, edges pointing upward.
pub fn hasse_dot(p: &FinPoset, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
    let _ = writeln!(out, "  rankdir=BT;");
    for l in p.labels() {
        let _ = writeln!(out, "  \"{}\";", escape(l));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", escape(p.label(a)), escape(p.label(b)));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let d = FinPoset::diamond();
        assert_eq!(parse_poset(&poset_to_json(&d)).unwrap(), d);
    }

    #[test]
    fn loader_closes_transitively() {
        let p = parse_poset(r#"{"elements":["a","b","c"],"le":[["a","b"],["b","c"]]}"#).unwrap();
        assert!(p.le(0, 2));
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(parse_poset("{"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_poset(r#"{"elements":["a"],"le":[["a","q"]]}"#),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn dot_has_cover_edges_only() {
        let dot = hasse_dot(&FinPoset::chain(3), "c3");
        assert!(dot.contains("\"0\" -> \"1\""));
        assert!(dot.contains("\"1\" -> \"2\""));
        assert!(!dot.contains("\"0\" -> \"2\""));
    }
}
