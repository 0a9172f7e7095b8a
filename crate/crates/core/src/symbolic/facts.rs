//! Named facts about the families, each checked at a chosen depth.

use serde::{Deserialize, Serialize};

use super::code::{AmbientFamily, ElemCode};
use super::definable::{DefinableSet, Region};
use super::directed::{descriptor_completeness, enumerate_ideal_descriptors, SymbolicIdeal};
use super::status::{compact_saturated_status, CompactStatus, CoverRule};
use super::tower::{truncate, truncation_codes};
use crate::error::Result;

/// `𝕁max ∖ {(n,∞) : n ∈ F}`.
pub fn g_family_member(excluded: &[u32]) -> DefinableSet {
    DefinableSet::Region(Region::JMax).minus(DefinableSet::Finite(
        excluded.iter().map(|&n| ElemCode::pair_inf(n)).collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonWfReport {
    pub depth: u32,
    /// Every two sampled members contain a third member inside both.
    pub filtered: bool,
    /// Every sampled member is compact by the rule base.
    pub members_compact: bool,
    /// Depths at which some member has an empty trace.
    pub empty_trace_depths: Vec<u32>,
    /// Every sampled member has a point.
    pub members_nonempty: bool,
    pub certified: bool,
}

/// The filtered family `𝒢 = {𝕁max ∖ F : F ⊆ 𝕁max finite}` of compact
/// saturated sets has empty intersection, and no member lies in the open set
/// `∅`. So `Σ𝕁` is not well-filtered.
pub fn certify_non_wf_witness(depth: u32) -> Result<NonWfReport> {
    let f = AmbientFamily::Johnstone;
    let depth = depth.max(1);
    let codes = truncation_codes(f, depth);
    let subsets: Vec<Vec<u32>> = (0u32..16)
        .map(|m| (1..=4).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect();
    let trace = |s: &DefinableSet| -> Vec<ElemCode> { codes.iter().filter(|e| s.contains(f, e)).copied().collect() };
    let mut filtered = true;
    for a in &subsets {
        for b in &subsets {
            let mut u: Vec<u32> = a.iter().chain(b).copied().collect();
            u.sort_unstable();
            u.dedup();
            let meet: Vec<ElemCode> = trace(&g_family_member(a))
                .into_iter()
                .filter(|e| g_family_member(b).contains(f, e))
                .collect();
            filtered &= trace(&g_family_member(&u)) == meet;
        }
    }
    let mut members_compact = true;
    let mut members_nonempty = true;
    for fs in subsets.iter().cloned().chain((1..=depth).map(|d| (1..=d).collect())) {
        let g = g_family_member(&fs);
        members_compact &= compact_saturated_status(f, &g, depth)?.is_compact();
        let witness = ElemCode::pair_inf(fs.iter().max().copied().unwrap_or(0) + 1);
        members_nonempty &= g.contains(f, &witness);
    }
    let empty_trace_depths: Vec<u32> = (1..=depth)
        .filter(|&d| {
            let g = g_family_member(&(1..=d).collect::<Vec<_>>());
            truncation_codes(f, d).iter().all(|e| !g.contains(f, e))
        })
        .collect();
    let certified = filtered && members_compact && members_nonempty && empty_trace_depths.len() == depth as usize;
    Ok(NonWfReport {
        depth,
        filtered,
        members_compact,
        empty_trace_depths,
        members_nonempty,
        certified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JiaIntersectionReport {
    pub depth: u32,
    /// `↑(1,1,1) ∩ ↑(1,2,1)` at this depth, by brute force.
    pub members: Vec<ElemCode>,
    /// All members have the form `(2,j,∞)`.
    pub only_level_two_tops: bool,
    /// Members outside the set `{(2,m+1,∞) : m ∈ ℕ}`.
    pub outside_display: Vec<ElemCode>,
}

pub fn jia_intersection(depth: u32) -> Result<JiaIntersectionReport> {
    let t = truncate(AmbientFamily::Jia, depth.max(2))?;
    let p = t.poset();
    let a = t.index_of(&ElemCode::triple(1, 1, 1)).expect("present at depth ≥ 1");
    let b = t.index_of(&ElemCode::triple(1, 2, 1)).expect("present at depth ≥ 2");
    let members = t.codes_of(&p.up(a).intersection(p.up(b)));
    let only_level_two_tops = members
        .iter()
        .all(|e| matches!(e, ElemCode::Triple(2, _, k) if k.is_inf()));
    let outside_display = members
        .iter()
        .filter(|e| !matches!(e, ElemCode::Triple(2, j, k) if k.is_inf() && *j >= 2))
        .copied()
        .collect();
    Ok(JiaIntersectionReport {
        depth: t.depth,
        members,
        only_level_two_tops,
        outside_display,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JiaCoherenceReport {
    pub depth: u32,
    pub first_compact: bool,
    pub second_compact: bool,
    pub intersection: CompactStatus,
    pub cover_certified: bool,
    /// `ΣL` is not coherent: two compact saturated sets meet in a non-compact one.
    pub not_coherent: bool,
}

pub fn jia_not_coherent(depth: u32) -> Result<JiaCoherenceReport> {
    let f = AmbientFamily::Jia;
    let a = DefinableSet::Up(ElemCode::triple(1, 1, 1));
    let b = DefinableSet::Up(ElemCode::triple(1, 2, 1));
    let first_compact = compact_saturated_status(f, &a, depth)?.is_compact();
    let second_compact = compact_saturated_status(f, &b, depth)?.is_compact();
    let meet = DefinableSet::Intersection(vec![a, b]);
    let intersection = compact_saturated_status(f, &meet, depth)?;
    let cover_certified = match &intersection {
        CompactStatus::ProvenNotCompact { cover, .. } => cover.certify(&meet, depth, depth)?.certified,
        _ => false,
    };
    Ok(JiaCoherenceReport {
        depth,
        first_compact,
        second_compact,
        not_coherent: first_compact && second_compact && cover_certified,
        intersection,
        cover_certified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaCase {
    pub set: String,
    pub expected_compact: bool,
    pub status: CompactStatus,
    pub agrees: bool,
}

/// Compact saturated sets of `Σ𝕁` against the formula
/// `𝖪 = (2^𝕁max ∖ {∅}) ∪ {↑F : F finite}` on a fixed battery.
pub fn johnstone_k_formula(depth: u32) -> Result<Vec<FormulaCase>> {
    let f = AmbientFamily::Johnstone;
    let jmax = DefinableSet::Region(Region::JMax);
    let battery: Vec<(DefinableSet, bool)> = vec![
        (DefinableSet::up_of([ElemCode::pair(1, 1), ElemCode::pair(2, 2)]), true),
        (DefinableSet::Up(ElemCode::pair_inf(3)), true),
        (jmax.clone(), true),
        (
            DefinableSet::Intersection(vec![jmax.clone(), DefinableSet::Region(Region::FirstAtLeast(2))]),
            true,
        ),
        (
            DefinableSet::Finite(vec![
                ElemCode::pair_inf(2),
                ElemCode::pair_inf(4),
                ElemCode::pair_inf(6),
            ]),
            true,
        ),
        (DefinableSet::full(), false),
        (
            DefinableSet::Union(vec![jmax.clone(), DefinableSet::Region(Region::LastAtLeast(2))]),
            false,
        ),
        (
            DefinableSet::Union(vec![jmax, DefinableSet::Region(Region::FirstAtLeast(3))]),
            false,
        ),
    ];
    battery
        .into_iter()
        .map(|(s, expected_compact)| {
            let status = compact_saturated_status(f, &s, depth)?;
            let agrees = match &status {
                CompactStatus::ProvenCompact(_) => expected_compact,
                CompactStatus::ProvenNotCompact { cover, .. } => {
                    !expected_compact && cover.certify(&s, depth, depth + 2)?.certified
                }
                CompactStatus::NoVerdictUpTo(_) => false,
            };
            Ok(FormulaCase {
                set: s.to_string(),
                expected_compact,
                status,
                agrees,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealsReport {
    pub family: AmbientFamily,
    pub depth: u32,
    /// The first descriptors in enumeration order.
    pub first: Vec<String>,
    pub principal_in_prefix: usize,
    pub non_principal_in_prefix: usize,
    pub complete: bool,
}

/// The ideals of a family are enumerable: the descriptor stream, and its
/// completeness at `depth`.
pub fn ideals_countable(f: AmbientFamily, depth: u32, seed: u64) -> Result<IdealsReport> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let first: Vec<SymbolicIdeal> = enumerate_ideal_descriptors(f)?.take(40).collect();
    let report = descriptor_completeness(f, depth, if depth <= 3 { 0 } else { 500 }, &mut rng)?;
    Ok(IdealsReport {
        family: f,
        depth,
        principal_in_prefix: first
            .iter()
            .filter(|d| matches!(d, SymbolicIdeal::Principal(_)))
            .count(),
        non_principal_in_prefix: first
            .iter()
            .filter(|d| matches!(d, SymbolicIdeal::NonPrincipal(_)))
            .count(),
        first: first.iter().map(ToString::to_string).collect(),
        complete: report.holds,
    })
}

/// The cover of the Jia intersection as the list of its first members.
pub fn jia_cover_members(count: u32) -> Vec<DefinableSet> {
    (1..=count)
        .map(|m| CoverRule::JiaLevel { level: 2 }.member(m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_wf_witness_certified() {
        let r = certify_non_wf_witness(6).unwrap();
        assert!(r.certified, "{r:?}");
    }

    #[test]
    fn jia_intersection_contains_first_column_top() {
        let r = jia_intersection(4).unwrap();
        assert!(r.only_level_two_tops);
        assert_eq!(r.members.len(), 4);
        assert_eq!(r.outside_display, vec![ElemCode::triple_inf(2, 1)]);
        assert!(jia_not_coherent(6).unwrap().not_coherent);
    }

    #[test]
    fn formula_battery_agrees() {
        for case in johnstone_k_formula(6).unwrap() {
            assert!(case.agrees, "{case:?}");
        }
    }

    #[test]
    fn flat_ideals() {
        let r = ideals_countable(AmbientFamily::FlatAntichain(3), 1, 0).unwrap();
        assert_eq!((r.principal_in_prefix, r.non_principal_in_prefix), (3, 0));
        assert!(r.complete);
    }
}
