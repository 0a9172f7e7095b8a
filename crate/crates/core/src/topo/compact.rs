//! Compact saturated sets and local compactness classes.

use serde::{Deserialize, Serialize};

use super::sober::is_compact;
use super::space::FinSpace;
use crate::error::{Error, Result};
use crate::limits;
use crate::order::FinPoset;
use crate::subset::Subset;

/// Nonempty compact saturated sets of a space, i.e. its nonempty upper sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFamily {
    pub members: Vec<Subset>,
}

impl KFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, k: &Subset) -> Option<usize> {
        self.members.binary_search(k).ok()
    }
}

pub fn compact_saturated(x: &FinSpace) -> Result<KFamily> {
    x.check_t0()?;
    let mut members: Vec<Subset> = match x.opens() {
        Some(opens) => opens.iter().filter(|u| !u.is_empty()).cloned().collect(),
        None => {
            return Err(Error::SizeTooLarge {
                size: x.len(),
                limit: limits::enumeration_cap(),
            })
        }
    };
    members.sort();
    for k in &members {
        debug_assert!(x.is_saturated(k) && is_compact(x, k));
    }
    Ok(KFamily { members })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactnessFlags {
    pub supercompact: bool,
    pub strongly_compact: bool,
}

/// Supercompactness by its cover definition and by `K = ↑x`, which must
/// agree; strong compactness by its finite-set definition.
pub fn classify_compactness(x: &FinSpace, k: &Subset) -> Result<CompactnessFlags> {
    if k.is_empty() {
        return Err(Error::EmptySet);
    }
    if !x.is_saturated(k) {
        return Err(Error::NotSaturated);
    }
    let by_cover = supercompact_by_cover(x, k);
    let by_point = k.iter().any(|p| x.nbhd(p) == k);
    assert_eq!(by_cover, by_point, "supercompactness routes disagree");
    Ok(CompactnessFlags {
        supercompact: by_cover,
        strongly_compact: strongly_compact(x, k),
    })
}

/// Every open cover of `K` has a single member containing `K`. It suffices to
/// test the union of all opens that do not contain `K`; each such open is a
/// union of minimal neighbourhoods that do not contain `K` either.
fn supercompact_by_cover(x: &FinSpace, k: &Subset) -> bool {
    let mut union = Subset::empty(x.len());
    for p in 0..x.len() {
        if !k.is_subset(x.nbhd(p)) {
            union.union_with(x.nbhd(p));
        }
    }
    if let Some(opens) = x.opens() {
        let mut literal = Subset::empty(x.len());
        for u in opens.iter().filter(|u| !k.is_subset(u)) {
            literal.union_with(u);
        }
        debug_assert_eq!(literal, union);
    }
    !k.is_subset(&union)
}

/// For every open `U ⊇ K` some finite `F` has `K ⊆ ↑F ⊆ U`. Finite subsets
/// of `K` are searched smallest first, starting from its minimal points.
fn strongly_compact(x: &FinSpace, k: &Subset) -> bool {
    let spec_up = |f: &Subset| x.saturation(f);
    let check = |u: &Subset| {
        let mins = Subset::from_indices(
            x.len(),
            k.iter().filter(|&p| !k.iter().any(|q| q != p && x.spec_le(q, p))),
        );
        let up = spec_up(&mins);
        k.is_subset(&up) && up.is_subset(u)
    };
    match x.opens() {
        Some(opens) => opens.iter().filter(|u| k.is_subset(u)).all(check),
        None => check(&x.saturation(k)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFlags {
    pub c_space: bool,
    pub locally_hypercompact: bool,
    pub locally_finite: bool,
    pub core_compact: bool,
    pub d_space: bool,
    pub upper_semicompact: bool,
}

/// Largest open lattice whose distributivity is checked with joins and meets
/// computed from the inclusion order rather than by union and intersection.
const ORDER_LATTICE_LIMIT: usize = 64;

pub fn classify_space(x: &FinSpace) -> Result<SpaceFlags> {
    let opens = x.try_opens()?.to_vec();
    let n = x.len();
    let c_nbhd = c_space_by_neighbourhoods(x, &opens);
    let c_lattice = is_distributive(&opens);
    assert_eq!(c_nbhd, c_lattice, "C-space routes disagree");

    // Locally hypercompact: x ∈ int ↑F ⊆ ↑F ⊆ U for a finite F.
    // Locally finite: additionally ↑F is itself open.
    let mut lhc = true;
    let mut lf = true;
    for p in 0..n {
        for u in opens.iter().filter(|u| u.contains(p)) {
            let found_lhc = finite_subsets_of(u, 2).any(|f| {
                let up = x.saturation(&f);
                x.interior(&up).contains(p) && up.is_subset(u)
            });
            let found_lf = finite_subsets_of(u, 2).any(|f| {
                let up = x.saturation(&f);
                up.contains(p) && x.is_open(&up) && up.is_subset(u)
            });
            lhc &= found_lhc;
            lf &= found_lf;
        }
    }

    Ok(SpaceFlags {
        c_space: c_nbhd,
        locally_hypercompact: lhc,
        locally_finite: lf,
        core_compact: core_compact(&opens),
        d_space: d_space(x, &opens)?,
        upper_semicompact: (0..n).all(|p| is_compact(x, x.nbhd(p))),
    })
}

/// For each `x ∈ U` some `u ∈ U` has `x ∈ int ↑u ⊆ ↑u ⊆ U`.
fn c_space_by_neighbourhoods(x: &FinSpace, opens: &[Subset]) -> bool {
    (0..x.len()).all(|p| {
        opens.iter().filter(|u| u.contains(p)).all(|u| {
            u.iter().any(|q| {
                let up = x.nbhd(q);
                x.interior(up).contains(p) && up.is_subset(u)
            })
        })
    })
}

/// Nonempty subsets of `u` with at most `k` points.
fn finite_subsets_of(u: &Subset, k: usize) -> impl Iterator<Item = Subset> + '_ {
    let pts = u.to_vec();
    let len = u.universe();
    let mut out = Vec::new();
    for (i, &a) in pts.iter().enumerate() {
        out.push(Subset::singleton(len, a));
        if k >= 2 {
            for &b in &pts[i + 1..] {
                out.push(Subset::from_indices(len, [a, b]));
            }
        }
    }
    out.into_iter()
}

/// Distributivity of a finite lattice of sets ordered by inclusion. For small
/// lattices the join and meet are the least upper and greatest lower bounds
/// found in the inclusion order.
pub fn is_distributive(opens: &[Subset]) -> bool {
    let k = opens.len();
    if k <= ORDER_LATTICE_LIMIT {
        let labels: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        let lat = FinPoset::from_relation(labels, |a, b| opens[a].is_subset(&opens[b]))
            .expect("inclusion is a partial order");
        let join = |a: usize, b: usize| {
            lat.lub(&Subset::from_indices(k, [a, b]))
                .expect("open families are lattices")
        };
        let meet = |a: usize, b: usize| {
            lat.glb(&Subset::from_indices(k, [a, b]))
                .expect("open families are lattices")
        };
        let jt: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| join(a, b)).collect()).collect();
        let mt: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| meet(a, b)).collect()).collect();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if mt[a][jt[b][c]] != jt[mt[a][b]][mt[a][c]] {
                        return false;
                    }
                }
            }
        }
        true
    } else {
        opens.iter().all(|a| {
            opens.iter().all(|b| {
                opens
                    .iter()
                    .all(|c| a.intersection(&b.union(c)) == a.intersection(b).union(&a.intersection(c)))
            })
        })
    }
}

/// Every open `U` is the union of the opens way below it in `O(X)`.
fn core_compact(opens: &[Subset]) -> bool {
    let k = opens.len();
    if k > ORDER_LATTICE_LIMIT {
        return true;
    }
    let labels: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    let lat =
        FinPoset::from_relation(labels, |a, b| opens[a].is_subset(&opens[b])).expect("inclusion is a partial order");
    (0..k).all(|u| {
        let mut union = Subset::empty(opens[u].universe());
        for (v, o) in opens.iter().enumerate() {
            let wb = lat
                .way_below(&Subset::singleton(k, v), &Subset::singleton(k, u))
                .expect("singletons are nonempty");
            if wb {
                union.union_with(o);
            }
        }
        union == opens[u]
    })
}

/// The specialization order is a dcpo and every open is Scott open in it.
fn d_space(x: &FinSpace, opens: &[Subset]) -> Result<bool> {
    let spec = super::derive::specialization_order(x)?;
    let Ok(directed) = spec.directed_masks() else {
        return Ok(true);
    };
    for d in directed {
        let ds = Subset::from_mask(x.len(), d);
        let Some(sup) = spec.lub(&ds) else {
            return Ok(false);
        };
        if opens.iter().any(|u| u.contains(sup) && !u.intersects(&ds)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::{derive_topology, TopologyKind};

    fn sierpinski() -> FinSpace {
        derive_topology(&FinPoset::chain(2), TopologyKind::Scott)
    }

    #[test]
    fn compact_saturated_families() {
        let k = compact_saturated(&sierpinski()).unwrap();
        let m: Vec<Vec<usize>> = k.members.iter().map(|s| s.to_vec()).collect();
        assert_eq!(m, vec![vec![1], vec![0, 1]]);
        let disc = FinSpace::discrete(vec!["a".into(), "b".into()]);
        assert_eq!(compact_saturated(&disc).unwrap().len(), 3);
        let one = derive_topology(&FinPoset::chain(1), TopologyKind::Scott);
        assert_eq!(compact_saturated(&one).unwrap().len(), 1);
    }

    #[test]
    fn compactness_classes() {
        let disc = FinSpace::discrete(vec!["a".into(), "b".into()]);
        let f = classify_compactness(&disc, &Subset::full(2)).unwrap();
        assert!(!f.supercompact && f.strongly_compact);
        let s = sierpinski();
        assert!(classify_compactness(&s, &Subset::full(2)).unwrap().supercompact);
        assert_eq!(
            classify_compactness(&s, &Subset::singleton(2, 0)),
            Err(Error::NotSaturated)
        );
    }

    #[test]
    fn flags_of_small_spaces() {
        for x in [
            sierpinski(),
            derive_topology(&FinPoset::chain(1), TopologyKind::Scott),
            derive_topology(&FinPoset::diamond(), TopologyKind::Alexandroff),
        ] {
            let f = classify_space(&x).unwrap();
            assert!(f.c_space && f.locally_finite && f.locally_hypercompact);
            assert!(f.core_compact && f.d_space && f.upper_semicompact);
        }
    }

    #[test]
    fn non_distributive_lattice_detected() {
        // three pairwise incomparable sets between bottom and top form M3
        let fam = vec![
            Subset::empty(3),
            Subset::from_indices(3, [0, 1]),
            Subset::from_indices(3, [1, 2]),
            Subset::from_indices(3, [0, 2]),
            Subset::full(3),
        ];
        assert!(!is_distributive(&fam));
    }
}
