//! Space documents: point names and the list of open sets.

use serde::{Deserialize, Serialize};

use super::space::FinSpace;
use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl SpaceDoc {
    /// Requires the open family to be materialized.
    pub fn from_space(x: &FinSpace) -> Result<Self> {
        Ok(SpaceDoc {
            points: x.labels().to_vec(),
            opens: x.try_opens()?.iter().map(|u| x.subset_labels(u)).collect(),
        })
    }

    /// The space, validated as a T0 topology.
    pub fn to_space(&self) -> Result<FinSpace> {
        let n = self.points.len();
        let index = |l: &String| {
            self.points
                .iter()
                .position(|p| p == l)
                .ok_or_else(|| Error::UnknownLabel(l.clone()))
        };
        let opens = self
            .opens
            .iter()
            .map(|u| {
                Ok(Subset::from_indices(
                    n,
                    u.iter().map(index).collect::<Result<Vec<_>>>()?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let x = FinSpace::from_opens(self.points.clone(), opens)?;
        x.check_t0()?;
        Ok(x)
    }
}

pub fn parse_space(text: &str) -> Result<FinSpace> {
    let doc: SpaceDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_space()
}

pub fn space_to_json(x: &FinSpace) -> Result<String> {
    Ok(serde_json::to_string_pretty(&SpaceDoc::from_space(x)?).expect("space documents serialize"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::FinPoset;
    use crate::topo::{derive_topology, TopologyKind};

    #[test]
    fn round_trip_and_t0() {
        let x = derive_topology(&FinPoset::diamond(), TopologyKind::Scott);
        let back = parse_space(&space_to_json(&x).unwrap()).unwrap();
        assert_eq!(back, x);
        let bad = r#"{"points":["a","b"],"opens":[[],["a","b"]]}"#;
        assert_eq!(parse_space(bad).unwrap_err(), Error::NotT0("a".into(), "b".into()));
        assert!(matches!(
            parse_space(r#"{"points":["a"],"opens":[["a"]]}"#),
            Err(Error::NotATopology(_))
        ));
    }
}
