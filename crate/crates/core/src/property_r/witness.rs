//! Failure witnesses for property R on the symbolic families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::mask_bits;
use crate::symbolic::{scott_open_status, truncation_codes, AmbientFamily, DefinableSet, ElemCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointRule {
    /// `x_n = (n,n)` in `𝕁`.
    Diagonal,
    /// `x_m = (1,m,m)` in `ℒ`.
    JiaDiagonal,
    /// `x_n = (n,1)` in `𝕁`.
    ColumnBase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointSpec {
    Rule(PointRule),
    /// `x_1, x_2, …`; the stream stops after the list.
    Explicit(Vec<ElemCode>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExclusionRule {
    /// `i(e)` is one more than the largest finite coordinate of `e`.
    MaxCoordinate,
    /// `i(e)` is one more than the column coordinate of `e` (the first in
    /// `𝕁`, the middle one in `ℒ`).
    ColumnIndex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExclusionSpec {
    Rule(ExclusionRule),
    Explicit(Vec<(ElemCode, usize)>),
}

/// Points `x_i` and an open `U` with `⋂ ↑x_i ⊆ U`, together with an index
/// `i(e)` for each `e ∉ U` such that `e ∉ ↑x_{i(e)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RWitness {
    pub family: AmbientFamily,
    pub points: PointSpec,
    pub open_u: DefinableSet,
    pub exclusion: ExclusionSpec,
}

impl RWitness {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("witness: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witnesses serialize")
    }

    /// `x_i`, 1-based.
    pub fn point(&self, i: usize) -> Option<ElemCode> {
        if i == 0 {
            return None;
        }
        let n = u32::try_from(i).ok()?;
        match &self.points {
            PointSpec::Rule(PointRule::Diagonal) => Some(ElemCode::pair(n, n)),
            PointSpec::Rule(PointRule::JiaDiagonal) => Some(ElemCode::triple(1, n, n)),
            PointSpec::Rule(PointRule::ColumnBase) => Some(ElemCode::pair(n, 1)),
            PointSpec::Explicit(v) => v.get(i - 1).copied(),
        }
    }

    pub fn exclusion_index(&self, e: &ElemCode) -> Option<usize> {
        match &self.exclusion {
            ExclusionSpec::Rule(ExclusionRule::MaxCoordinate) => Some(e.max_finite_coord() as usize + 1),
            ExclusionSpec::Rule(ExclusionRule::ColumnIndex) => match e {
                ElemCode::Pair(j, _) => Some(*j as usize + 1),
                ElemCode::Triple(_, j, _) => Some(*j as usize + 1),
                _ => None,
            },
            ExclusionSpec::Explicit(table) => table.iter().find(|(c, _)| c == e).map(|&(_, i)| i),
        }
    }

    fn validate(&self) -> Result<()> {
        let f = self.family;
        let rule_ok = match &self.points {
            PointSpec::Rule(PointRule::Diagonal | PointRule::ColumnBase) => {
                matches!(f, AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_))
            }
            PointSpec::Rule(PointRule::JiaDiagonal) => f == AmbientFamily::Jia,
            PointSpec::Explicit(v) => {
                v.iter().try_for_each(|e| f.check(e))?;
                !v.is_empty()
            }
        };
        if !rule_ok {
            return Err(Error::MalformedWitness(format!(
                "point rule {:?} does not fit {f}",
                self.points
            )));
        }
        self.open_u.validate(f)?;
        if let ExclusionSpec::Explicit(t) = &self.exclusion {
            t.iter().try_for_each(|(e, _)| f.check(e))?;
        }
        Ok(())
    }
}

pub fn johnstone_r_witness() -> RWitness {
    RWitness {
        family: AmbientFamily::Johnstone,
        points: PointSpec::Rule(PointRule::Diagonal),
        open_u: DefinableSet::empty(),
        exclusion: ExclusionSpec::Rule(ExclusionRule::MaxCoordinate),
    }
}

pub fn jia_r_witness() -> RWitness {
    RWitness {
        family: AmbientFamily::Jia,
        points: PointSpec::Rule(PointRule::JiaDiagonal),
        open_u: DefinableSet::empty(),
        exclusion: ExclusionSpec::Rule(ExclusionRule::MaxCoordinate),
    }
}

/// `x_n = (n,1)`: every `↑x_n` contains `𝕁max`, so no exclusion exists.
pub fn broken_r_witness() -> RWitness {
    RWitness {
        points: PointSpec::Rule(PointRule::ColumnBase),
        ..johnstone_r_witness()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RFailureReport {
    pub family: AmbientFamily,
    pub subfamily_bound: usize,
    pub depth: u32,
    /// Elements outside `U` whose exclusion index was checked.
    pub excluded: usize,
    /// For each subfamily `I₀ ⊆ {1..s}`, a point of `⋂_{I₀} ↑x_i ∖ U`.
    pub escapes: Vec<(Vec<usize>, ElemCode)>,
    pub certified: bool,
    /// A subfamily whose intersection lies inside `U` at this depth.
    pub breakage: Option<Vec<usize>>,
}

/// Certifies that the witness breaks property R up to subfamily size `s` and
/// depth `k`: (a) every element of depth `≤ k` outside `U` is excluded by
/// its index, and (b) every nonempty `I₀ ⊆ {1, …, s}` leaves a point of
/// `⋂_{I₀} ↑x_i` outside `U`.
pub fn verify_r_failure(w: &RWitness, s: usize, k: u32) -> Result<RFailureReport> {
    w.validate()?;
    let f = w.family;
    if scott_open_status(f, &w.open_u, k)?.is_not_open() {
        return Err(Error::NotScottOpen);
    }
    if s == 0 || s > 20 {
        return Err(Error::PreconditionFailed("subfamily bound must lie in 1..=20".into()));
    }
    let codes = truncation_codes(f, k);
    let mut excluded = 0;
    for e in codes.iter().filter(|e| !w.open_u.contains(f, e)) {
        let i = w
            .exclusion_index(e)
            .ok_or_else(|| Error::MalformedWitness(format!("no exclusion index for {e}")))?;
        let x = w
            .point(i)
            .ok_or_else(|| Error::MalformedWitness(format!("{e}: index {i} names no point")))?;
        if f.leq_unchecked(&x, e) {
            return Err(Error::MalformedWitness(format!(
                "exclusion gap at {e}: index {i} gives x_{i} = {x} ≤ {e}"
            )));
        }
        excluded += 1;
    }
    let points: Vec<ElemCode> = (1..=s)
        .map(|i| {
            w.point(i)
                .ok_or_else(|| Error::MalformedWitness(format!("no point x_{i}")))
        })
        .collect::<Result<_>>()?;
    let mut escapes = Vec::new();
    let mut breakage = None;
    for mask in 1u64..1 << s {
        let idx: Vec<usize> = mask_bits(mask).map(|b| b + 1).collect();
        let found = codes
            .iter()
            .find(|e| !w.open_u.contains(f, e) && idx.iter().all(|&i| f.leq_unchecked(&points[i - 1], e)));
        match found {
            Some(e) => escapes.push((idx, *e)),
            None => {
                breakage = Some(idx);
                break;
            }
        }
    }
    Ok(RFailureReport {
        family: f,
        subfamily_bound: s,
        depth: k,
        excluded,
        certified: breakage.is_none(),
        escapes,
        breakage,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnstone_witness_certified() {
        let r = verify_r_failure(&johnstone_r_witness(), 5, 12).unwrap();
        assert!(r.certified);
        assert_eq!(r.escapes.len(), 31);
        let (idx, e) = r.escapes.iter().find(|(i, _)| i == &vec![2, 4]).unwrap();
        assert_eq!((idx.len(), *e), (2, ElemCode::pair_inf(4)));
    }

    #[test]
    fn jia_witness_certified() {
        assert!(verify_r_failure(&jia_r_witness(), 4, 6).unwrap().certified);
    }

    #[test]
    fn broken_witness_rejected() {
        match verify_r_failure(&broken_r_witness(), 5, 12) {
            Err(Error::MalformedWitness(m)) => assert!(m.contains("(1,inf)"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn json_format() {
        let w = johnstone_r_witness();
        let text = w.to_json();
        assert!(text.contains("\"diagonal\"") && text.contains("\"max-coordinate\""));
        assert_eq!(RWitness::from_json(&text).unwrap(), w);
        let explicit =
            r#"{"family":"johnstone","points":["(1,1)","(2,2)"],"open_u":{"finite":[]},"exclusion":[["(1,inf)",2]]}"#;
        let w = RWitness::from_json(explicit).unwrap();
        assert_eq!(w.point(2), Some(ElemCode::pair(2, 2)));
        assert_eq!(w.exclusion_index(&ElemCode::pair_inf(1)), Some(2));
    }
}
