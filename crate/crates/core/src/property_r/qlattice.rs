//! The lattice `Q = (ω*(P), ⊇)` of lower-topology closed sets, the map
//! `m(x,y) = ↑x ∩ ↑y` and `Φ(U) = {C ∈ Q : C ⊆ U}`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits;
use crate::order::FinPoset;
use crate::report::{Verdict, Witness};
use crate::subset::{all_masks, Subset};
use crate::topo::is_scott_open;

#[derive(Debug, Clone)]
pub struct QLattice {
    pub base: FinPoset,
    /// Members of `ω*(P)`, sorted.
    pub elements: Vec<Subset>,
    /// Reverse inclusion on `elements`.
    pub order: FinPoset,
    index: HashMap<Subset, usize>,
}

/// Nonempty antichains of `p`, as subsets.
pub fn antichains(p: &FinPoset) -> Vec<Subset> {
    let n = p.len();
    all_masks(n)
        .skip(1)
        .map(|m| Subset::from_mask(n, m))
        .filter(|a| a.iter().all(|x| a.iter().all(|y| x == y || !p.le(x, y))))
        .collect()
}

/// `↑F` for every finite `F`; `↑F` depends only on the antichain `min F`.
pub fn finitely_generated_uppers(p: &FinPoset) -> Vec<Subset> {
    let mut out: Vec<Subset> = antichains(p).iter().map(|a| p.up_closure(a)).collect();
    out.sort();
    out.dedup();
    out
}

pub fn build_q_lattice(p: &FinPoset) -> Result<QLattice> {
    let n = p.len();
    if n > limits::q_lattice_limit() {
        return Err(Error::SizeTooLarge {
            size: n,
            limit: limits::q_lattice_limit(),
        });
    }
    let gens = finitely_generated_uppers(p);
    let mut seen: HashSet<Subset> = gens.iter().cloned().collect();
    seen.insert(Subset::empty(n));
    seen.insert(Subset::full(n));
    let mut frontier: Vec<Subset> = seen.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        for g in &gens {
            let meet = c.intersection(g);
            if seen.insert(meet.clone()) {
                if seen.len() > limits::enumeration_cap() {
                    return Err(Error::SizeTooLarge {
                        size: seen.len(),
                        limit: limits::enumeration_cap(),
                    });
                }
                frontier.push(meet);
            }
        }
    }
    let mut elements: Vec<Subset> = seen.into_iter().collect();
    elements.sort();
    for (i, a) in elements.iter().enumerate() {
        for b in &elements[i + 1..] {
            debug_assert!(elements.binary_search(&a.intersection(b)).is_ok());
        }
    }
    let labels: Vec<String> = elements
        .iter()
        .map(|c| format!("{{{}}}", p.subset_labels(c).join(",")))
        .collect();
    let order = FinPoset::from_relation(labels, |a, b| elements[b].is_subset(&elements[a]))?;
    let index = elements.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    Ok(QLattice {
        base: p.clone(),
        elements,
        order,
        index,
    })
}

impl QLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, c: &Subset) -> Option<usize> {
        self.index.get(c).copied()
    }

    /// Closed under pairwise intersection.
    pub fn is_meet_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| self.index.contains_key(&a.intersection(b)))
        })
    }

    /// `m(x,y) = ↑x ∩ ↑y`, as an index into `elements`.
    pub fn m(&self, x: usize, y: usize) -> usize {
        let c = self.base.up(x).intersection(self.base.up(y));
        self.position(&c).expect("↑x ∩ ↑y lies in ω*(P)")
    }
}

/// Scott continuity of `m : P×P → Q` on a finite product: monotonicity, and
/// `m(max D) = ⋂_{d∈D} m(d)` for every directed `D ⊆ P×P` when the product
/// has at most 16 points.
pub fn check_m_continuous(q: &QLattice) -> Result<Verdict> {
    let p = &q.base;
    let n = p.len();
    const NAME: &str = "m is Scott continuous";
    for x in 0..n {
        for y in 0..n {
            for x2 in p.up(x).iter() {
                for y2 in p.up(y).iter() {
                    if !q.order.le(q.m(x, y), q.m(x2, y2)) {
                        return Ok(Verdict::fail(
                            NAME,
                            Witness::Pair(
                                format!("({},{})", p.label(x), p.label(y)),
                                format!("({},{})", p.label(x2), p.label(y2)),
                            ),
                        )
                        .with_detail("m is not monotone"));
                    }
                }
            }
        }
    }
    let prod = p.product(p);
    if prod.len() <= limits::brute_force_limit() {
        for d in prod.directed_masks()? {
            let ds = Subset::from_mask(prod.len(), d);
            let top = prod.max_of(&ds).expect("finite directed sets have a maximum");
            let (tx, ty) = (top / n, top % n);
            let mut meet = Subset::full(n);
            for i in ds.iter() {
                meet.intersect_with(&q.elements[q.m(i / n, i % n)]);
            }
            if q.elements[q.m(tx, ty)] != meet {
                return Ok(Verdict::fail(NAME, Witness::Set(prod.subset_labels(&ds)))
                    .with_detail("m(max D) differs from the meet of m over D"));
            }
        }
    }
    Ok(Verdict::pass(NAME))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiResult {
    /// Indices into the lattice's elements.
    pub members: Vec<usize>,
    pub upper: bool,
    pub scott_open: bool,
}

/// `Φ(U) = {C ∈ ω*(P) : C ⊆ U}` and whether it is Scott open in `Q`.
pub fn phi(q: &QLattice, u: &Subset) -> Result<PhiResult> {
    if !is_scott_open(&q.base, u) {
        return Err(Error::NotScottOpen);
    }
    let members: Vec<usize> = (0..q.len()).filter(|&i| q.elements[i].is_subset(u)).collect();
    let set = Subset::from_indices(q.len(), members.iter().copied());
    Ok(PhiResult {
        upper: q.order.is_upper(&set),
        scott_open: is_scott_open(&q.order, &set),
        members,
    })
}

/// `m⁻¹(Φ(U))` is an upper set of `P×P`.
pub fn phi_preimage_upper(q: &QLattice, phi: &PhiResult) -> bool {
    let p = &q.base;
    let n = p.len();
    let prod = p.product(p);
    let pre = Subset::from_indices(
        prod.len(),
        (0..n * n).filter(|&i| phi.members.contains(&q.m(i / n, i % n))),
    );
    prod.is_upper(&pre)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lattices() {
        let chain = FinPoset::chain(2);
        let q = build_q_lattice(&chain).unwrap();
        assert_eq!(q.len(), 3);
        assert!(q.is_meet_closed());
        let anti = FinPoset::antichain(2);
        assert_eq!(build_q_lattice(&anti).unwrap().len(), 4);
        assert_eq!(build_q_lattice(&FinPoset::chain(1)).unwrap().len(), 2);
    }

    #[test]
    fn m_examples() {
        let anti = FinPoset::antichain(2);
        let q = build_q_lattice(&anti).unwrap();
        assert!(q.elements[q.m(0, 1)].is_empty());
        assert_eq!(q.elements[q.m(1, 1)], *anti.up(1));
        let d = FinPoset::diamond();
        let q = build_q_lattice(&d).unwrap();
        let top = d.index_of("top").unwrap();
        let (a, b) = (d.index_of("x").unwrap(), d.index_of("y").unwrap());
        assert_eq!(q.elements[q.m(a, b)], *d.up(top));
        assert!(check_m_continuous(&q).unwrap().holds);
    }

    #[test]
    fn phi_examples() {
        let chain = FinPoset::chain(2);
        let q = build_q_lattice(&chain).unwrap();
        let u = Subset::singleton(2, 1);
        let r = phi(&q, &u).unwrap();
        let got: Vec<Subset> = r.members.iter().map(|&i| q.elements[i].clone()).collect();
        assert_eq!(got, vec![Subset::empty(2), u.clone()]);
        assert!(r.scott_open && r.upper && phi_preimage_upper(&q, &r));
        assert_eq!(phi(&q, &Subset::empty(2)).unwrap().members.len(), 1);
        assert_eq!(phi(&q, &Subset::full(2)).unwrap().members.len(), 3);
        assert_eq!(phi(&q, &Subset::singleton(2, 0)), Err(Error::NotScottOpen));
    }
}
