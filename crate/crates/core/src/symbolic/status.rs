//! Scott openness and compactness of definable sets.
//!
//! Membership in a definable set compares coordinates only with each other and
//! with the constants it mentions. Past those constants every configuration of
//! one or two elements already occurs at a bounded depth, so a check made at
//! that depth settles the ambient question. [`stabilization_depth`] is that
//! bound.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::code::{AmbientFamily, ElemCode};
use super::definable::{DefinableSet, Region};
use super::directed::{columns_within, ColumnId};
use super::tower::{truncation_codes, up_within};
use crate::error::{Error, Result};

/// An entry of the rule base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub id: &'static str,
    pub justification: &'static str,
}

#[derive(Debug, Clone)]
pub struct RuleTable {
    rules: Vec<Rule>,
}

impl RuleTable {
    /// Rejects rules without a justification.
    pub fn new(rules: Vec<Rule>) -> Result<Self> {
        if let Some(r) = rules.iter().find(|r| r.justification.trim().is_empty()) {
            return Err(Error::NoRuleTable(format!("rule `{}` has no justification", r.id)));
        }
        Ok(RuleTable { rules })
    }

    pub fn standard() -> &'static RuleTable {
        static TABLE: OnceLock<RuleTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            RuleTable::new(vec![
                Rule {
                    id: OPEN_SWEEP,
                    justification: "an upper set is Scott open iff it meets every non-principal ideal whose sup it contains; the non-principal ideals are the columns",
                },
                Rule {
                    id: EMPTY,
                    justification: "the empty set is compact",
                },
                Rule {
                    id: FINITE_UPPER,
                    justification: "an open cover of ↑F is a cover of the finite set F",
                },
                Rule {
                    id: JMAX_SUBSET,
                    justification: "every nonempty subset of 𝕁max is compact in Σ𝕁",
                },
                Rule {
                    id: JOHNSTONE_FORMULA,
                    justification: "the compact saturated sets of Σ𝕁 are the nonempty subsets of 𝕁max and the sets ↑F with F finite",
                },
                Rule {
                    id: JIA_LEVEL,
                    justification: "infinitely many maximal points (i,j,∞) of one level are separated by the opens {(i,j,k) : j < m} ∪ {levels above i}",
                },
            ])
            .expect("standard rules are justified")
        })
    }

    pub fn get(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id == id)
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }
}

pub const OPEN_SWEEP: &str = "upper-set-column-sweep";
pub const EMPTY: &str = "empty-set";
pub const FINITE_UPPER: &str = "finite-upper-closure";
pub const JMAX_SUBSET: &str = "jmax-subset";
pub const JOHNSTONE_FORMULA: &str = "johnstone-compact-formula";
pub const JIA_LEVEL: &str = "jia-level-maxima";

fn cite(id: &'static str) -> String {
    let rule = RuleTable::standard().get(id).expect("rule is registered");
    rule.id.to_string()
}

/// Depth at which checks on a set with support bound `b` become exhaustive.
pub fn stabilization_depth(f: AmbientFamily, b: u32) -> u32 {
    b + 4 * f.coords() + 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpenWitness {
    /// `lower ∈ s`, `lower ≤ upper`, `upper ∉ s`.
    NotUpper { lower: ElemCode, upper: ElemCode },
    /// The column's sup lies in `s` but the column misses `s`.
    Column(ColumnId),
}

impl fmt::Display for OpenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpenWitness::NotUpper { lower, upper } => write!(f, "{lower} ≤ {upper} leaves the set"),
            OpenWitness::Column(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpenStatus {
    ProvenOpen(String),
    ProvenNotOpen(OpenWitness),
    NoCounterexampleUpTo(u32),
}

impl OpenStatus {
    pub fn is_open(&self) -> bool {
        matches!(self, OpenStatus::ProvenOpen(_))
    }

    pub fn is_not_open(&self) -> bool {
        matches!(self, OpenStatus::ProvenNotOpen(_))
    }
}

fn not_upper(f: AmbientFamily, s: &DefinableSet, codes: &[ElemCode], inside: &[bool], k: u32) -> Option<OpenWitness> {
    for (x, _) in codes.iter().zip(inside).filter(|(_, &i)| i) {
        if let Some(y) = up_within(f, x, k).into_iter().find(|y| !s.contains(f, y)) {
            return Some(OpenWitness::NotUpper { lower: *x, upper: y });
        }
    }
    None
}

/// Does the ideal of `c` meet `s`? Checked up to the height past which
/// membership along the column no longer changes.
fn column_meets(f: AmbientFamily, c: ColumnId, s: &DefinableSet, b: u32) -> bool {
    let h = b.max(c.bound()) + 2;
    (1..=h as usize + 1).any(|i| s.contains(f, &c.ideal_elem(f, i)))
}

/// Largest truncation the checks deepen to on their own.
const AUTO_DEPTH_POINTS: usize = 40_000;

fn truncation_size(f: AmbientFamily, k: u32) -> usize {
    let k = k as usize;
    match f {
        AmbientFamily::Johnstone => k * (k + 1),
        AmbientFamily::JohnstonePlusX(x) => k * (k + 1) + x as usize,
        AmbientFamily::Jia => k * k * (k + 1),
        AmbientFamily::Lattice428 => k * k + 2,
        AmbientFamily::NChain => k,
        AmbientFamily::FlatAntichain(m) => m as usize,
    }
}

/// The working depth: at least `k`, and the stabilization depth when that
/// truncation is small enough.
fn working_depth(f: AmbientFamily, b: u32, k: u32) -> u32 {
    let t = stabilization_depth(f, b);
    if t > k && truncation_size(f, t) <= AUTO_DEPTH_POINTS {
        t
    } else {
        k.max(1)
    }
}

/// Scott openness of `s`, checked at depth at least `k`.
///
/// Upward closure is tested on the truncation, then every column whose sup
/// lies in `s` must meet `s`. Counterexamples are genuine. The set is proven
/// open once the working depth reaches [`stabilization_depth`]; the check
/// deepens to it by itself unless that truncation is very large.
pub fn scott_open_status(f: AmbientFamily, s: &DefinableSet, k: u32) -> Result<OpenStatus> {
    s.validate(f)?;
    let b = s.support_bound();
    let k = working_depth(f, b, k);
    let codes = truncation_codes(f, k);
    let inside: Vec<bool> = codes.iter().map(|e| s.contains(f, e)).collect();
    if let Some(w) = not_upper(f, s, &codes, &inside, k) {
        return Ok(OpenStatus::ProvenNotOpen(w));
    }
    let mut complete = true;
    for c in columns_within(f, b + 2) {
        let Some(sup) = c.sup(f) else { continue };
        if !s.contains(f, &sup) {
            continue;
        }
        let h = b.max(c.bound()) + 2;
        if h > k {
            complete = false;
            continue;
        }
        if !column_meets(f, c, s, b) {
            return Ok(OpenStatus::ProvenNotOpen(OpenWitness::Column(c)));
        }
    }
    if complete && (f.is_finite() || k >= stabilization_depth(f, b)) {
        Ok(OpenStatus::ProvenOpen(cite(OPEN_SWEEP)))
    } else {
        Ok(OpenStatus::NoCounterexampleUpTo(k))
    }
}

/// An increasing open cover given by a generator rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverRule {
    /// `W_M = {(j,k) : j ≤ M} ∪ {(j,k) : k > height}` in `𝕁`.
    ColumnCut { height: u32 },
    /// `U_m = {(level,j,k) : j < m} ∪ {(i,j,k) : i > level}` in `ℒ`.
    JiaLevel { level: u32 },
}

impl CoverRule {
    pub fn family(&self) -> AmbientFamily {
        match self {
            CoverRule::ColumnCut { .. } => AmbientFamily::Johnstone,
            CoverRule::JiaLevel { .. } => AmbientFamily::Jia,
        }
    }

    /// The `m`-th member, `m ≥ 1`.
    pub fn member(&self, m: u32) -> DefinableSet {
        match *self {
            CoverRule::ColumnCut { height } => DefinableSet::Union(vec![
                DefinableSet::Region(Region::FirstAtLeast(m + 1)).complement(),
                DefinableSet::Region(Region::LastAtLeast(height + 1)),
            ]),
            CoverRule::JiaLevel { level } => DefinableSet::Union(vec![
                DefinableSet::Intersection(vec![
                    DefinableSet::Region(Region::FirstAtLeast(level)),
                    DefinableSet::Region(Region::FirstAtLeast(level + 1)).complement(),
                    DefinableSet::Region(Region::SecondAtLeast(m)).complement(),
                ]),
                DefinableSet::Region(Region::FirstAtLeast(level + 1)),
            ]),
        }
    }

    /// A point of `s` outside the `m`-th member.
    fn escapee(&self, s: &DefinableSet, m: u32, depth: u32) -> Option<ElemCode> {
        let f = self.family();
        let w = self.member(m);
        truncation_codes(f, depth)
            .into_iter()
            .find(|e| s.contains(f, e) && !w.contains(f, e))
    }

    /// Certifies the cover for `s` up to index `max_m`: every member is Scott
    /// open, the members increase, every point of `s` at depth `depth` is
    /// covered, and no member `m ≤ max_m` contains `s`. The last point is a
    /// point of `s` outside the member, at depth at most `depth`.
    pub fn certify(&self, s: &DefinableSet, max_m: u32, depth: u32) -> Result<CoverReport> {
        let f = self.family();
        s.validate(f)?;
        let mut escapees = Vec::new();
        for m in 1..=max_m {
            let w = self.member(m);
            let st = scott_open_status(f, &w, stabilization_depth(f, w.support_bound()))?;
            if !st.is_open() {
                return Ok(CoverReport::broken(format!("member {m} is not Scott open: {st:?}")));
            }
            if m > 1 {
                let prev = self.member(m - 1);
                if let Some(e) = truncation_codes(f, depth)
                    .into_iter()
                    .find(|e| prev.contains(f, e) && !w.contains(f, e))
                {
                    return Ok(CoverReport::broken(format!(
                        "members {m} and {} do not increase at {e}",
                        m - 1
                    )));
                }
            }
            match self.escapee(s, m, depth) {
                Some(e) => escapees.push(e),
                None => {
                    return Ok(CoverReport::broken(format!(
                        "member {m} contains the set at depth {depth}"
                    )))
                }
            }
        }
        let codes = truncation_codes(f, depth);
        for e in codes.iter().filter(|e| s.contains(f, e)) {
            let covered = (1..=depth + 1).any(|m| self.member(m).contains(f, e));
            if !covered {
                return Ok(CoverReport::broken(format!("{e} is not covered")));
            }
        }
        Ok(CoverReport {
            certified: true,
            escapees,
            max_index: max_m,
            depth,
            failure: None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub certified: bool,
    /// For member `m`, a point of the set outside it.
    pub escapees: Vec<ElemCode>,
    pub max_index: u32,
    pub depth: u32,
    pub failure: Option<String>,
}

impl CoverReport {
    fn broken(why: String) -> Self {
        CoverReport {
            certified: false,
            escapees: Vec::new(),
            max_index: 0,
            depth: 0,
            failure: Some(why),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompactStatus {
    ProvenCompact(String),
    ProvenNotCompact { rule: String, cover: CoverRule },
    NoVerdictUpTo(u32),
}

impl CompactStatus {
    pub fn is_compact(&self) -> bool {
        matches!(self, CompactStatus::ProvenCompact(_))
    }
}

/// Compactness of a saturated definable set in the Scott topology.
///
/// `s` must be an upper set at depth `max(k, stabilization depth)`. The rule
/// base recognises `↑F` for finite `F` in every family, the Johnstone formula
/// and the Jia level rule. Every negative verdict carries an increasing open
/// cover certified up to index and depth `k`. Positive verdicts are checked
/// against the cover library: whenever a library cover covers `s`, one member
/// must already contain it.
pub fn compact_saturated_status(f: AmbientFamily, s: &DefinableSet, k: u32) -> Result<CompactStatus> {
    s.validate(f)?;
    let b = s.support_bound();
    let d = k.max(stabilization_depth(f, b));
    let codes = truncation_codes(f, d);
    let inside: Vec<bool> = codes.iter().map(|e| s.contains(f, e)).collect();
    if not_upper(f, s, &codes, &inside, d).is_some() {
        return Err(Error::NotSaturated);
    }
    let members: Vec<ElemCode> = codes.iter().zip(&inside).filter(|(_, &i)| i).map(|(e, _)| *e).collect();
    if members.is_empty() {
        return Ok(CompactStatus::ProvenCompact(cite(EMPTY)));
    }
    let generic = |e: &ElemCode| match e {
        ElemCode::X(_) | ElemCode::A(_) | ElemCode::Bot | ElemCode::Top => false,
        _ => e.max_finite_coord() > b + 1,
    };
    let minimal: Vec<ElemCode> = members
        .iter()
        .filter(|x| !members.iter().any(|y| y != *x && f.leq_unchecked(y, x)))
        .copied()
        .collect();
    let status = if minimal.iter().all(|e| !generic(e)) {
        CompactStatus::ProvenCompact(cite(FINITE_UPPER))
    } else {
        match f {
            AmbientFamily::Johnstone => johnstone_rule(s, &members, b, k)?,
            AmbientFamily::Jia => jia_rule(s, &members, b, k)?,
            _ => CompactStatus::NoVerdictUpTo(k),
        }
    };
    if status.is_compact() {
        falsify(f, s, &members, d);
    }
    Ok(status)
}

fn johnstone_rule(s: &DefinableSet, members: &[ElemCode], b: u32, k: u32) -> Result<CompactStatus> {
    if members.iter().all(ElemCode::is_inf) {
        return Ok(CompactStatus::ProvenCompact(cite(JMAX_SUBSET)));
    }
    // Not compact by the formula. In a column past the support bound the
    // set's finite part starts at a fixed height.
    let f = AmbientFamily::Johnstone;
    let j0 = b + 2;
    let Some(height) = (1..=b + 2).find(|&h| s.contains(f, &ElemCode::pair(j0, h))) else {
        return Ok(CompactStatus::NoVerdictUpTo(k));
    };
    let cover = CoverRule::ColumnCut { height };
    let report = cover.certify(s, k, k.max(j0).max(height) + 1)?;
    if report.certified {
        Ok(CompactStatus::ProvenNotCompact {
            rule: cite(JOHNSTONE_FORMULA),
            cover,
        })
    } else {
        Ok(CompactStatus::NoVerdictUpTo(k))
    }
}

fn jia_rule(s: &DefinableSet, members: &[ElemCode], b: u32, k: u32) -> Result<CompactStatus> {
    let level = match members.first() {
        Some(ElemCode::Triple(i, _, _)) => *i,
        _ => return Ok(CompactStatus::NoVerdictUpTo(k)),
    };
    let one_level = members
        .iter()
        .all(|e| e.is_inf() && matches!(e, ElemCode::Triple(i, _, _) if *i == level));
    let infinite = s.contains(AmbientFamily::Jia, &ElemCode::triple_inf(level, b + 2));
    if !(one_level && infinite) {
        return Ok(CompactStatus::NoVerdictUpTo(k));
    }
    let cover = CoverRule::JiaLevel { level };
    let report = cover.certify(s, k, k.max(level) + 1)?;
    if report.certified {
        Ok(CompactStatus::ProvenNotCompact {
            rule: cite(JIA_LEVEL),
            cover,
        })
    } else {
        Ok(CompactStatus::NoVerdictUpTo(k))
    }
}

/// A compact verdict must not be contradicted by a library cover: if the
/// cover's members eventually contain every point of `s` at depth `d`, one
/// member must contain all of them.
fn falsify(f: AmbientFamily, s: &DefinableSet, members: &[ElemCode], d: u32) {
    let library: Vec<CoverRule> = match f {
        AmbientFamily::Johnstone => (1..=3).map(|height| CoverRule::ColumnCut { height }).collect(),
        AmbientFamily::Jia => vec![CoverRule::JiaLevel { level: 1 }],
        _ => Vec::new(),
    };
    let bound = s.support_bound() + 3;
    for cover in library {
        let covered_by = |m: u32| {
            let w = cover.member(m);
            members.iter().all(|e| w.contains(f, e))
        };
        let first = (1..=d + 1).find(|&m| covered_by(m));
        assert!(
            first.is_some_and(|m| m <= bound.max(1)),
            "compact set {s} needs cover index {first:?} of {cover:?}"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const J: AmbientFamily = AmbientFamily::Johnstone;

    #[test]
    fn rule_table_rejects_unjustified_rules() {
        let bad = RuleTable::new(vec![Rule {
            id: "x",
            justification: " ",
        }]);
        assert!(matches!(bad, Err(Error::NoRuleTable(_))));
        assert!(RuleTable::standard().get(JMAX_SUBSET).is_some());
    }

    #[test]
    fn openness_examples() {
        let up32 = DefinableSet::Up(ElemCode::pair(3, 2));
        assert_eq!(
            scott_open_status(J, &up32, 8).unwrap(),
            OpenStatus::ProvenNotOpen(OpenWitness::Column(ColumnId::Pair(2)))
        );
        assert!(scott_open_status(J, &DefinableSet::full(), 1).unwrap().is_open());
        let minus_col = DefinableSet::full().minus(DefinableSet::Region(Region::Column(1)));
        assert_eq!(
            scott_open_status(J, &minus_col, 12).unwrap(),
            OpenStatus::ProvenNotOpen(OpenWitness::Column(ColumnId::Pair(1)))
        );
        let minus_down = DefinableSet::full().minus(DefinableSet::Down(ElemCode::pair_inf(1)));
        assert!(scott_open_status(J, &minus_down, 12).unwrap().is_open());
        let far = DefinableSet::full().minus(DefinableSet::Down(ElemCode::triple_inf(40, 1)));
        assert_eq!(
            scott_open_status(AmbientFamily::Jia, &far, 4).unwrap(),
            OpenStatus::NoCounterexampleUpTo(4)
        );
        let not_upper = DefinableSet::Finite(vec![ElemCode::pair(1, 1)]);
        assert!(matches!(
            scott_open_status(J, &not_upper, 3).unwrap(),
            OpenStatus::ProvenNotOpen(OpenWitness::NotUpper { .. })
        ));
    }

    #[test]
    fn johnstone_compactness() {
        let fin = DefinableSet::up_of([ElemCode::pair(1, 1), ElemCode::pair(2, 2)]);
        assert_eq!(
            compact_saturated_status(J, &fin, 6).unwrap(),
            CompactStatus::ProvenCompact(FINITE_UPPER.into())
        );
        let tops = DefinableSet::Intersection(vec![
            DefinableSet::Region(Region::JMax),
            DefinableSet::Region(Region::FirstAtLeast(2)),
        ]);
        assert_eq!(
            compact_saturated_status(J, &tops, 6).unwrap(),
            CompactStatus::ProvenCompact(JMAX_SUBSET.into())
        );
        let whole = DefinableSet::full();
        assert!(matches!(
            compact_saturated_status(J, &whole, 6).unwrap(),
            CompactStatus::ProvenNotCompact { .. }
        ));
        assert_eq!(
            compact_saturated_status(J, &DefinableSet::Finite(vec![ElemCode::pair(1, 1)]), 4),
            Err(Error::NotSaturated)
        );
    }

    #[test]
    fn jia_intersection_is_not_compact() {
        let s = DefinableSet::Intersection(vec![
            DefinableSet::Up(ElemCode::triple(1, 1, 1)),
            DefinableSet::Up(ElemCode::triple(1, 2, 1)),
        ]);
        let st = compact_saturated_status(AmbientFamily::Jia, &s, 8).unwrap();
        let CompactStatus::ProvenNotCompact { cover, .. } = st else {
            panic!("{st:?}")
        };
        assert_eq!(cover, CoverRule::JiaLevel { level: 2 });
        let r = cover.certify(&s, 8, 8).unwrap();
        assert!(r.certified, "{r:?}");
        assert_eq!(r.escapees[0], ElemCode::triple_inf(2, 1));
        assert!(
            compact_saturated_status(AmbientFamily::Jia, &DefinableSet::Up(ElemCode::triple(1, 1, 1)), 6)
                .unwrap()
                .is_compact()
        );
    }
}
