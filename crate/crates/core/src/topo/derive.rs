//! Intrinsic topologies of a finite poset and the specialization order.

use std::collections::HashSet;

use super::space::{FinSpace, TopologyKind};
use crate::error::{Error, Result};
use crate::limits;
use crate::order::FinPoset;
use crate::subset::Subset;

/// Upper sets `U` with `⋁D ∈ U ⇒ D ∩ U ≠ ∅` for every directed `D`, checked
/// literally over all directed subsets. Requires at most 16 points.
pub fn scott_opens_by_definition(p: &FinPoset) -> Result<Vec<Subset>> {
    let directed = p.directed_masks()?;
    let sups: Vec<(u64, usize)> = directed
        .iter()
        .map(|&d| {
            let s = p
                .lub(&Subset::from_mask(p.len(), d))
                .expect("finite directed sets have a least upper bound");
            (d, s)
        })
        .collect();
    let mut out = Vec::new();
    for u in p.upper_sets()? {
        let m = u.mask();
        if sups.iter().all(|&(d, s)| m >> s & 1 == 0 || d & m != 0) {
            out.push(u);
        }
    }
    Ok(out)
}

/// Is `u` Scott open? Small posets are checked against every directed set.
pub fn is_scott_open(p: &FinPoset, u: &Subset) -> bool {
    if !p.is_upper(u) {
        return false;
    }
    if let Ok(directed) = p.directed_masks() {
        let m = u.mask();
        for d in directed {
            let s = p
                .lub(&Subset::from_mask(p.len(), d))
                .expect("finite directed sets have a least upper bound");
            if m >> s & 1 == 1 && d & m == 0 {
                return false;
            }
        }
    }
    true
}

/// Minimal neighbourhoods of the topology generated by `subbase`: the
/// intersection of all subbasic sets containing each point.
fn nbhd_from_subbase(n: usize, subbase: &[Subset]) -> Vec<Subset> {
    (0..n)
        .map(|x| {
            let mut m = Subset::full(n);
            for s in subbase.iter().filter(|s| s.contains(x)) {
                m.intersect_with(s);
            }
            m
        })
        .collect()
}

/// The requested intrinsic topology, each computed from its own generating
/// family and checked against the finite-case identities.
pub fn derive_topology(p: &FinPoset, kind: TopologyKind) -> FinSpace {
    let n = p.len();
    let labels = p.labels().to_vec();
    let upper_sub: Vec<Subset> = (0..n).map(|x| p.down(x).complement()).collect();
    let lower_sub: Vec<Subset> = (0..n).map(|x| p.up(x).complement()).collect();
    let nbhd = match kind {
        TopologyKind::Alexandroff => p.up_rows().to_vec(),
        TopologyKind::Scott => {
            let nb = if n <= limits::brute_force_limit() {
                let opens = scott_opens_by_definition(p).expect("small poset");
                let alex = p.upper_sets().expect("small poset");
                assert_eq!(opens, alex, "Scott and Alexandroff topologies differ");
                nbhd_from_subbase(n, &opens)
            } else {
                (0..n)
                    .map(|x| {
                        let u = p.up(x).clone();
                        assert!(is_scott_open(p, &u));
                        u
                    })
                    .collect()
            };
            nb
        }
        TopologyKind::Upper => nbhd_from_subbase(n, &upper_sub),
        TopologyKind::Lower => nbhd_from_subbase(n, &lower_sub),
        TopologyKind::Lawson => {
            let mut sub = lower_sub.clone();
            sub.extend(p.up_rows().iter().cloned());
            let nb = nbhd_from_subbase(n, &sub);
            for (x, u) in nb.iter().enumerate() {
                assert_eq!(*u, p.up(x).intersection(p.down(x)), "Lawson is discrete");
            }
            nb
        }
    };
    match kind {
        TopologyKind::Scott | TopologyKind::Alexandroff | TopologyKind::Upper => {
            assert_eq!(nbhd.as_slice(), p.up_rows());
        }
        TopologyKind::Lower => assert_eq!(nbhd.as_slice(), p.down_rows()),
        TopologyKind::Lawson => {}
    }
    FinSpace::from_nbhd(labels, nbhd).expect("neighbourhoods of an order are nested")
}

/// `x ≤ y` iff `x ∈ cl{y}`.
pub fn specialization_order(x: &FinSpace) -> Result<FinPoset> {
    x.check_t0()?;
    let n = x.len();
    let closures: Vec<Subset> = (0..n).map(|y| x.point_closure(y)).collect();
    FinPoset::from_relation(x.labels().to_vec(), |a, b| closures[b].contains(a))
}

/// All unions of members of `base`, as masks. `base` should be closed under
/// finite intersection for the result to be the generated topology.
pub fn unions_of(n: usize, base: &[u64], cap: usize) -> Result<HashSet<u64>> {
    assert!(n <= 64);
    let mut out: HashSet<u64> = HashSet::new();
    out.insert(0);
    for &b in base {
        let snapshot: Vec<u64> = out.iter().copied().collect();
        for s in snapshot {
            out.insert(s | b);
        }
        if out.len() > cap {
            return Err(Error::SizeTooLarge {
                size: out.len(),
                limit: cap,
            });
        }
    }
    Ok(out)
}

/// Closes a family of masks under pairwise intersection.
pub fn intersections_of(base: &[u64], full: u64) -> Vec<u64> {
    let mut out: HashSet<u64> = base.iter().copied().collect();
    out.insert(full);
    let mut frontier: Vec<u64> = out.iter().copied().collect();
    while !frontier.is_empty() {
        let current: Vec<u64> = out.iter().copied().collect();
        let mut next = Vec::new();
        for &a in &frontier {
            for &b in &current {
                if out.insert(a & b) {
                    next.push(a & b);
                }
            }
        }
        frontier = next;
    }
    let mut v: Vec<u64> = out.into_iter().collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opens_of(x: &FinSpace) -> Vec<Vec<usize>> {
        x.opens().unwrap().iter().map(|u| u.to_vec()).collect()
    }

    #[test]
    fn two_chain_topologies() {
        let c = FinPoset::chain(2);
        let scott = derive_topology(&c, TopologyKind::Scott);
        assert_eq!(opens_of(&scott), vec![vec![], vec![1], vec![0, 1]]);
        let lower = derive_topology(&c, TopologyKind::Lower);
        assert_eq!(opens_of(&lower), vec![vec![], vec![0], vec![0, 1]]);
        let one = FinPoset::chain(1);
        for kind in [
            TopologyKind::Scott,
            TopologyKind::Alexandroff,
            TopologyKind::Upper,
            TopologyKind::Lower,
            TopologyKind::Lawson,
        ] {
            assert_eq!(derive_topology(&one, kind).opens().unwrap().len(), 2);
        }
    }

    #[test]
    fn specialization_round_trip() {
        let d = FinPoset::diamond();
        let s = derive_topology(&d, TopologyKind::Scott);
        assert_eq!(specialization_order(&s).unwrap(), d);
        let l = derive_topology(&d, TopologyKind::Lower);
        assert_eq!(specialization_order(&l).unwrap(), d.dual());
        let disc = FinSpace::discrete(vec!["a".into(), "b".into()]);
        assert_eq!(specialization_order(&disc).unwrap(), FinPoset::antichain(2));
    }
}
