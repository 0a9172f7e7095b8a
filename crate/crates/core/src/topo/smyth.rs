//! The Smyth power space and the Rudin-type searches.

use super::compact::compact_saturated;
use super::sober::is_irreducible;
use super::space::FinSpace;
use crate::error::{Error, Result};
use crate::order::FinPoset;
use crate::subset::{all_masks, mask_bits, Subset};

/// `P_S(X)`: the points are `𝖪(X)` and `{□U : U open}` is a base, where
/// `□U = {K : K ⊆ U}`.
///
/// The least basic open containing `K` is `□K`, because `K` itself is open in
/// a finite space. When the opens of `X` are known, the neighbourhood is also
/// computed literally as `⋂{□U : K ⊆ U}` and compared. The result is checked
/// to carry the Smyth order as its specialization order, and `x ↦ ↑x` is
/// checked to be an embedding.
pub fn smyth_power_space(x: &FinSpace) -> Result<FinSpace> {
    let k = compact_saturated(x)?;
    let m = k.len();
    let labels: Vec<String> = k
        .members
        .iter()
        .map(|s| format!("{{{}}}", x.subset_labels(s).join(",")))
        .collect();
    let nbhd: Vec<Subset> = k
        .members
        .iter()
        .map(|kk| Subset::from_indices(m, (0..m).filter(|&j| k.members[j].is_subset(kk))))
        .collect();
    if let Some(opens) = x.opens() {
        for (i, kk) in k.members.iter().enumerate() {
            let mut literal = Subset::full(m);
            for u in opens.iter().filter(|u| kk.is_subset(u)) {
                let boxed = Subset::from_indices(m, (0..m).filter(|&j| k.members[j].is_subset(u)));
                literal.intersect_with(&boxed);
            }
            assert_eq!(literal, nbhd[i], "minimal neighbourhood in the Smyth space");
        }
    }
    let ps = FinSpace::from_nbhd(labels, nbhd)?;
    for a in 0..m {
        for b in 0..m {
            assert_eq!(
                ps.spec_le(a, b),
                k.members[b].is_subset(&k.members[a]),
                "specialization order of P_S(X) is the Smyth order"
            );
        }
    }
    // x ↦ ↑x is injective and a homeomorphism onto its image.
    let xi: Vec<usize> = (0..x.len())
        .map(|p| k.position(x.nbhd(p)).expect("↑x is compact saturated"))
        .collect();
    for p in 0..x.len() {
        for q in 0..x.len() {
            assert_eq!(p == q, xi[p] == xi[q]);
            assert_eq!(
                ps.nbhd(xi[p]).contains(xi[q]),
                x.nbhd(p).contains(q),
                "x ↦ ↑x is an embedding"
            );
        }
    }
    Ok(ps)
}

/// `⋁Kᵢ` in `(𝖪(X), ⊑)`: the intersection when it is nonempty, otherwise
/// none. Cross-checked against a search for the least upper bound in the
/// Smyth order.
pub fn kfamily_sup(x: &FinSpace, family: &[Subset]) -> Result<Option<Subset>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for f in family {
        if f.is_empty() || !x.is_saturated(f) {
            return Err(Error::NotSaturated);
        }
    }
    let mut meet = Subset::full(x.len());
    for f in family {
        meet.intersect_with(f);
    }
    let result = (!meet.is_empty()).then_some(meet);
    if let Ok(k) = compact_saturated(x) {
        // upper bounds in ⊑ are the members contained in every Kᵢ
        let bounds: Vec<&Subset> = k
            .members
            .iter()
            .filter(|g| family.iter().all(|f| g.is_subset(f)))
            .collect();
        let least = bounds
            .iter()
            .find(|g| bounds.iter().all(|h| h.is_subset(g)))
            .map(|g| (*g).clone());
        assert_eq!(least, result, "sup in 𝖪(X) is the intersection");
    }
    Ok(result)
}

/// Is the family irreducible as a subset of `P_S(X)`? Any two members must
/// have a third member inside both.
pub fn smyth_irreducible(family: &[Subset]) -> bool {
    !family.is_empty()
        && family.iter().all(|a| {
            family.iter().all(|b| {
                let ab = a.intersection(b);
                family.iter().any(|c| c.is_subset(&ab))
            })
        })
}

/// A minimal irreducible closed `A* ⊆ C` meeting every member of `family`.
pub fn rudin_minimal(x: &FinSpace, family: &[Subset], c: &Subset) -> Result<Subset> {
    for f in family {
        if f.is_empty() || !x.is_saturated(f) {
            return Err(Error::HypothesisFailed(format!(
                "{:?} is not compact saturated",
                x.subset_labels(f)
            )));
        }
    }
    if !smyth_irreducible(family) {
        return Err(Error::HypothesisFailed(
            "family is not irreducible in the Smyth power space".into(),
        ));
    }
    if !x.is_closed(c) {
        return Err(Error::HypothesisFailed("C is not closed".into()));
    }
    if let Some(f) = family.iter().find(|f| !f.intersects(c)) {
        return Err(Error::HypothesisFailed(format!("C misses {:?}", x.subset_labels(f))));
    }
    let meets_all = |a: &Subset| family.iter().all(|f| f.intersects(a));
    let closed = x.closed_sets(crate::limits::enumeration_cap())?;
    let mut candidates: Vec<&Subset> = closed
        .iter()
        .filter(|a| a.is_subset(c) && meets_all(a) && is_irreducible(x, a))
        .collect();
    candidates.sort_by_key(|a| a.count());
    let best = candidates
        .first()
        .ok_or_else(|| Error::HypothesisFailed("no irreducible closed subset qualifies".into()))?;
    // minimality against every proper closed subset
    for a in &closed {
        if a.is_subset(best) && *a != **best {
            assert!(
                !(meets_all(a) && is_irreducible(x, a)),
                "a smaller irreducible closed set meets every member"
            );
        }
    }
    Ok((*best).clone())
}

/// A directed `D ⊆ C` with `↓D` meeting every `↑Fᵢ`.
pub fn rudin_classical(p: &FinPoset, c: &Subset, family: &[Subset]) -> Result<Subset> {
    if c.is_empty() || !p.is_lower(c) {
        return Err(Error::HypothesisFailed("C must be a nonempty lower set".into()));
    }
    if family.is_empty() || family.iter().any(Subset::is_empty) {
        return Err(Error::HypothesisFailed("members must be nonempty finite sets".into()));
    }
    let ups: Vec<Subset> = family.iter().map(|f| p.up_closure(f)).collect();
    if ups.iter().any(|u| !u.intersects(c)) {
        return Err(Error::HypothesisFailed("some ↑F misses C".into()));
    }
    let filtered = ups
        .iter()
        .all(|a| ups.iter().all(|b| ups.iter().any(|m| m.is_subset(&a.intersection(b)))));
    if !filtered {
        return Err(Error::HypothesisFailed("family is not filtered".into()));
    }
    let works = |d: &Subset| {
        p.is_directed(d) && d.is_subset(c) && {
            let low = p.down_closure(d);
            ups.iter().all(|u| u.intersects(&low))
        }
    };
    for x in c {
        let d = Subset::singleton(p.len(), x);
        if works(&d) {
            return Ok(d);
        }
    }
    if let Ok(masks) = p.directed_masks() {
        for d in masks {
            let ds = Subset::from_mask(p.len(), d);
            if works(&ds) {
                return Ok(ds);
            }
        }
    }
    Err(Error::HypothesisFailed("no directed subset found".into()))
}

/// Which of the Smyth-sobriety conditions to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmythCondition {
    /// families irreducible in `P_S(X)`
    Irreducible,
    /// families irreducible and closed in `P_S(X)`
    IrreducibleClosed,
}

/// For every qualifying family `𝒜` and open `U` of `X`, `⋂𝒜 ⊆ U` implies
/// some `K ∈ 𝒜` with `K ⊆ U`. Exhaustive over subfamilies, so limited to
/// `|𝖪(X)| ≤ 20`. Returns a violating family, if any.
pub fn smyth_condition_violation(x: &FinSpace, cond: SmythCondition) -> Result<Option<Vec<Subset>>> {
    let k = compact_saturated(x)?;
    let m = k.len();
    if m > 20 {
        return Err(Error::SizeTooLarge { size: m, limit: 20 });
    }
    let ps = smyth_power_space(x)?;
    let opens = x.try_opens()?;
    for fam in all_masks(m).skip(1) {
        let idx: Vec<usize> = mask_bits(fam).collect();
        let members: Vec<Subset> = idx.iter().map(|&i| k.members[i].clone()).collect();
        if !smyth_irreducible(&members) {
            continue;
        }
        if cond == SmythCondition::IrreducibleClosed && !ps.is_closed(&Subset::from_mask(m, fam)) {
            continue;
        }
        let mut meet = Subset::full(x.len());
        for s in &members {
            meet.intersect_with(s);
        }
        for u in opens.iter().filter(|u| meet.is_subset(u)) {
            if !members.iter().any(|s| s.is_subset(u)) {
                return Ok(Some(members));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::{derive_topology, is_sober, TopologyKind};

    fn sierpinski() -> FinSpace {
        derive_topology(&FinPoset::chain(2), TopologyKind::Scott)
    }

    #[test]
    fn smyth_of_small_spaces() {
        let ps = smyth_power_space(&sierpinski()).unwrap();
        assert_eq!(ps.len(), 2);
        // {1} is open, {0,1} is not
        let top = ps.index_of("{1}").unwrap();
        assert!(ps.is_open(&Subset::singleton(2, top)));
        assert!(!ps.is_open(&Subset::singleton(2, 1 - top)));
        let disc = FinSpace::discrete(vec!["a".into(), "b".into()]);
        assert_eq!(smyth_power_space(&disc).unwrap().len(), 3);
        let one = derive_topology(&FinPoset::chain(1), TopologyKind::Scott);
        assert_eq!(smyth_power_space(&one).unwrap().len(), 1);
        assert!(is_sober(&ps).unwrap().holds);
    }

    #[test]
    fn sups_in_k() {
        let disc = FinSpace::discrete(vec!["a".into(), "b".into()]);
        let a = Subset::singleton(2, 0);
        let b = Subset::singleton(2, 1);
        assert_eq!(kfamily_sup(&disc, std::slice::from_ref(&a)).unwrap(), Some(a.clone()));
        assert_eq!(kfamily_sup(&disc, &[a, b]).unwrap(), None);
        let s = sierpinski();
        let one = Subset::singleton(2, 1);
        assert_eq!(kfamily_sup(&s, &[one.clone(), Subset::full(2)]).unwrap(), Some(one));
        assert_eq!(kfamily_sup(&s, &[]), Err(Error::EmptyFamily));
    }

    #[test]
    fn rudin_searches() {
        let s = sierpinski();
        let res = rudin_minimal(&s, &[Subset::full(2)], &Subset::singleton(2, 0)).unwrap();
        assert_eq!(res.to_vec(), vec![0]);
        let d = FinPoset::diamond();
        let ds = derive_topology(&d, TopologyKind::Scott);
        let x = d.index_of("x").unwrap();
        let top = d.index_of("top").unwrap();
        let fam = [d.up(x).clone(), d.up(top).clone()];
        let a = rudin_minimal(&ds, &fam, d.down(top)).unwrap();
        assert!(fam.iter().all(|f| f.intersects(&a)));
        assert!(matches!(
            rudin_minimal(&ds, &fam, &Subset::singleton(4, 0)),
            Err(Error::HypothesisFailed(_))
        ));
        let c4 = FinPoset::chain(4);
        let dd = rudin_classical(&c4, c4.down(2), &[Subset::singleton(4, 0), Subset::singleton(4, 1)]).unwrap();
        assert!(c4.is_directed(&dd) && dd.is_subset(c4.down(2)));
    }
}
