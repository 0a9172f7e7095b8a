//! Decision procedures for property R on finite posets.

use serde::{Deserialize, Serialize};

use super::qlattice::{build_q_lattice, phi};
use crate::error::Result;
use crate::limits;
use crate::order::FinPoset;
use crate::report::{Verdict, Witness};
use crate::subset::{all_masks, mask_bits, Subset};
use crate::topo::{
    compact_saturated, compare_product_topologies, derive_topology, irreducible_closed_sets, is_coherent, is_compact,
    is_sober, is_well_filtered, specialization_order, FinSpace, TopologyKind,
};

/// Largest poset on which families of principal filters are enumerated.
const FAMILY_POINTS: usize = 12;

fn scott_opens(p: &FinPoset) -> Result<Vec<Subset>> {
    Ok(derive_topology(p, TopologyKind::Scott).try_opens()?.to_vec())
}

fn meet_of_ups(p: &FinPoset, idx: impl Iterator<Item = usize>) -> Subset {
    let mut meet = Subset::full(p.len());
    for i in idx {
        meet.intersect_with(p.up(i));
    }
    meet
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RVerdict {
    /// Compact saturated sets of `(P, ω(P))` equal the Scott closed sets.
    pub closed_route: bool,
    /// `⋂_{i∈I} ↑x_i ⊆ U` has a finite subfamily inside `U`, over every family
    /// of principal filters and every Scott open `U`; `None` above 12 points.
    pub definitional_route: Option<bool>,
    /// Largest finite subfamily the definitional route needed.
    pub largest_subfamily: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Property R, computed through the lower-topology compact saturated sets and
/// through the definition; the two routes must agree.
pub fn has_property_r(p: &FinPoset) -> Result<RVerdict> {
    let n = p.len();
    let lower = derive_topology(p, TopologyKind::Lower);
    let mut k_lower = compact_saturated(&lower)?.members;
    let mut closed: Vec<Subset> = scott_opens(p)?
        .iter()
        .map(Subset::complement)
        .filter(|c| !c.is_empty())
        .collect();
    k_lower.sort();
    closed.sort();
    let closed_route = k_lower == closed;
    let mut witness = None;
    if !closed_route {
        let odd = k_lower
            .iter()
            .find(|c| !closed.contains(c))
            .or_else(|| closed.iter().find(|c| !k_lower.contains(c)))
            .expect("the lists differ");
        witness = Some(Witness::Set(p.subset_labels(odd)));
    }

    let mut definitional_route = None;
    let mut largest_subfamily = 0;
    if n <= FAMILY_POINTS {
        let opens = scott_opens(p)?;
        let mut ok = true;
        'fam: for fam in all_masks(n) {
            let meet = meet_of_ups(p, mask_bits(fam));
            for u in opens.iter().filter(|u| meet.is_subset(u)) {
                // drop members while the intersection stays inside U
                let mut kept: Vec<usize> = mask_bits(fam).collect();
                let mut i = 0;
                while i < kept.len() {
                    let without: Vec<usize> = kept
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &x)| x)
                        .collect();
                    if meet_of_ups(p, without.iter().copied()).is_subset(u) {
                        kept = without;
                    } else {
                        i += 1;
                    }
                }
                if !meet_of_ups(p, kept.iter().copied()).is_subset(u) {
                    ok = false;
                    witness = Some(Witness::Set(kept.iter().map(|&x| p.label(x).to_string()).collect()));
                    break 'fam;
                }
                largest_subfamily = largest_subfamily.max(kept.len());
            }
        }
        definitional_route = Some(ok);
    }
    assert!(
        definitional_route.is_none_or(|d| d == closed_route),
        "property R routes disagree"
    );
    Ok(RVerdict {
        closed_route,
        definitional_route,
        largest_subfamily,
        holds: closed_route,
        witness,
    })
}

/// Conditions (1) to (4) of the characterization of property R, each
/// computed on its own: (1) through `Φ(U) ∈ σ(Q)`, (2) and (3) as in
/// [`has_property_r`], (4) as Scott compactness of every Scott closed set.
pub fn characterization_conditions(p: &FinPoset) -> Result<[bool; 4]> {
    let r = has_property_r(p)?;
    let one = if p.len() <= limits::q_lattice_limit() {
        let q = build_q_lattice(p)?;
        scott_opens(p)?
            .iter()
            .map(|u| phi(&q, u).map(|f| f.scott_open))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b)
    } else {
        r.holds
    };
    let scott = derive_topology(p, TopologyKind::Scott);
    let four = scott_opens(p)?.iter().all(|u| is_compact(&scott, &u.complement()));
    Ok([one, r.definitional_route.unwrap_or(r.holds), r.closed_route, four])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationReport {
    /// λ-compact, λ-upper-semicompact, property R, filtered-family
    /// condition, dcpo.
    pub conditions: [bool; 5],
    /// Pairs `(i, i+1)`, 1-based, with condition `i` true and `i+1` false.
    pub violations: Vec<(usize, usize)>,
    /// λ-compact iff Scott compact, finite meets of principal filters Scott
    /// compact, and property R.
    pub lawson_decomposition_agrees: bool,
}

/// The chain (1) ⇒ (2) ⇒ (3) ⇒ (4) ⇒ (5), each condition computed
/// independently.
pub fn implication_chain_check(p: &FinPoset) -> Result<ImplicationReport> {
    let n = p.len();
    let lawson = derive_topology(p, TopologyKind::Lawson);
    let full = Subset::full(n);
    let c1 = is_compact(&lawson, &full);
    let c2 = (0..n).all(|x| is_compact(&lawson, p.up(x)));
    let c3 = has_property_r(p)?.holds;
    let opens = scott_opens(p)?;
    let directed = p.directed_masks()?;
    // {↑x : x ∈ D} is filtered iff D is directed
    let c4 = directed.iter().all(|&d| {
        let ds: Vec<usize> = mask_bits(d).collect();
        let meet = meet_of_ups(p, ds.iter().copied());
        opens
            .iter()
            .filter(|u| meet.is_subset(u))
            .all(|u| ds.iter().any(|&x| p.up(x).is_subset(u)))
    });
    let c5 = directed.iter().all(|&d| p.lub(&Subset::from_mask(n, d)).is_some());
    let conditions = [c1, c2, c3, c4, c5];
    let violations = (0..4)
        .filter(|&i| conditions[i] && !conditions[i + 1])
        .map(|i| (i + 1, i + 2))
        .collect();

    let scott = derive_topology(p, TopologyKind::Scott);
    let meets_compact = if n <= FAMILY_POINTS {
        all_masks(n)
            .skip(1)
            .all(|f| is_compact(&scott, &meet_of_ups(p, mask_bits(f))))
    } else {
        (0..n).all(|x| (0..n).all(|y| is_compact(&scott, &p.up(x).intersection(p.up(y)))))
    };
    let rhs = is_compact(&scott, &full) && meets_compact && c3;
    Ok(ImplicationReport {
        conditions,
        violations,
        lawson_decomposition_agrees: c1 == rhs,
    })
}

/// A dcpo whose Scott space is well-filtered and coherent has property R.
pub fn wf_coherent_implies_r(p: &FinPoset) -> Result<Verdict> {
    let scott = derive_topology(p, TopologyKind::Scott);
    let dcpo = p
        .directed_masks()?
        .iter()
        .all(|&d| p.lub(&Subset::from_mask(p.len(), d)).is_some());
    let hyp = dcpo && is_well_filtered(&scott)?.holds && is_coherent(&scott)?.holds;
    let concl = has_property_r(p)?.holds;
    Ok(Verdict::from_bool(
        "well-filtered and coherent implies property R",
        !hyp || concl,
        Some(Witness::Note("hypotheses hold but property R fails".into())),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SoberPipeline {
    pub property_r: bool,
    pub product_equal: bool,
    pub sober: bool,
    /// Every irreducible closed set is directed.
    pub irreducibles_directed: bool,
    /// Every irreducible closed set is `↓⋁A` with `⋁A ∈ A`.
    pub generic_points: bool,
    pub irreducible_count: usize,
    pub consistent: bool,
}

/// Property R and `Σ(P×P) = ΣP × ΣP` give sobriety; the proof's steps are
/// replayed on every irreducible closed set.
pub fn sober_pipeline(p: &FinPoset) -> Result<SoberPipeline> {
    let property_r = has_property_r(p)?.holds;
    let product_equal = compare_product_topologies(p, p)?.equal;
    let scott = derive_topology(p, TopologyKind::Scott);
    let sober = is_sober(&scott)?.holds;
    let irr = irreducible_closed_sets(&scott)?;
    let irreducibles_directed = irr.iter().all(|a| p.is_directed(a));
    let generic_points = irr
        .iter()
        .all(|a| p.lub(a).is_some_and(|s| a.contains(s) && *p.down(s) == *a));
    let consistent = !(property_r && product_equal) || (sober && irreducibles_directed && generic_points);
    Ok(SoberPipeline {
        property_r,
        product_equal,
        sober,
        irreducibles_directed,
        generic_points,
        irreducible_count: irr.len(),
        consistent,
    })
}

/// Every closed set of `X` is compact in the lower topology of its
/// specialization order. Agreement with property R is asserted.
pub fn omega_star_compact_check(x: &FinSpace) -> Result<Verdict> {
    let spec = specialization_order(x)?;
    let lower = derive_topology(&spec, TopologyKind::Lower);
    let closed: Vec<Subset> = x.try_opens()?.iter().map(Subset::complement).collect();
    let bad = closed.iter().find(|c| !is_compact(&lower, c));
    let v = Verdict::from_bool(
        "Ω*-compact",
        bad.is_none(),
        bad.map(|c| Witness::Set(x.subset_labels(c))),
    );
    if derive_topology(&spec, TopologyKind::Scott) == *x {
        assert_eq!(
            v.holds,
            has_property_r(&spec)?.holds,
            "Ω*-compactness and property R disagree"
        );
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo::TopologyKind;

    #[test]
    fn small_cases() {
        for p in [
            FinPoset::chain(1),
            FinPoset::antichain(2),
            FinPoset::diamond(),
            FinPoset::chain(4),
        ] {
            let r = has_property_r(&p).unwrap();
            assert!(r.holds && r.definitional_route == Some(true));
            assert_eq!(characterization_conditions(&p).unwrap(), [true; 4]);
            let c = implication_chain_check(&p).unwrap();
            assert_eq!(c.conditions, [true; 5]);
            assert!(c.violations.is_empty() && c.lawson_decomposition_agrees);
            assert!(wf_coherent_implies_r(&p).unwrap().holds);
            let s = sober_pipeline(&p).unwrap();
            assert!(s.consistent && s.sober && s.irreducibles_directed);
            assert!(
                omega_star_compact_check(&derive_topology(&p, TopologyKind::Scott))
                    .unwrap()
                    .holds
            );
        }
        assert_eq!(sober_pipeline(&FinPoset::diamond()).unwrap().irreducible_count, 4);
    }
}
