//! Scott topology of a product against the product of Scott topologies.

use serde::{Deserialize, Serialize};

use super::derive::{intersections_of, scott_opens_by_definition, unions_of};
use crate::error::Result;
use crate::limits;
use crate::order::FinPoset;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductComparison {
    pub equal: bool,
    /// Number of opens of `σ(P×Q)` when the families were enumerated.
    pub open_count: Option<usize>,
    /// A set open in exactly one of the two topologies.
    pub witness: Option<Vec<String>>,
}

/// Compares `σ(P×Q)` with the topology generated by boxes `U×V`.
///
/// The Scott side is computed as the upper sets of the product order (and,
/// on at most 16 points, also from the directed-sup definition). The box side
/// is generated from the Scott opens of the factors. Full families are
/// compared when `|P×Q| ≤ 16`; larger products compare the minimal
/// neighbourhoods of each point, which determine both topologies.
pub fn compare_product_topologies(p: &FinPoset, q: &FinPoset) -> Result<ProductComparison> {
    let prod = p.product(q);
    let n = prod.len();
    let sp = p.upper_sets()?;
    let sq = q.upper_sets()?;
    if n <= limits::brute_force_limit() {
        let upper: Vec<u64> = prod.upper_sets()?.iter().map(Subset::mask).collect();
        let by_def: Vec<u64> = scott_opens_by_definition(&prod)?.iter().map(Subset::mask).collect();
        assert_eq!(upper, by_def, "Scott opens of a finite product are its upper sets");
        let boxes: Vec<u64> = sp
            .iter()
            .flat_map(|u| sq.iter().map(move |v| box_mask(p, q, u, v)))
            .collect();
        let base = intersections_of(&boxes, if n == 64 { u64::MAX } else { (1u64 << n) - 1 });
        let generated = unions_of(n, &base, limits::enumeration_cap())?;
        let scott: std::collections::HashSet<u64> = upper.iter().copied().collect();
        let witness = scott
            .symmetric_difference(&generated)
            .min()
            .map(|&m| prod.subset_labels(&Subset::from_mask(n, m)));
        let equal = witness.is_none();
        assert!(equal, "finite products must carry the product topology");
        return Ok(ProductComparison {
            equal,
            open_count: Some(upper.len()),
            witness,
        });
    }
    // Minimal neighbourhoods: ↑(x,y) in the product order against the least
    // box containing (x,y), built from the factor topologies.
    let least = |fam: &[Subset], x: usize, len: usize| {
        let mut m = Subset::full(len);
        for u in fam.iter().filter(|u| u.contains(x)) {
            m.intersect_with(u);
        }
        m
    };
    let mut witness = None;
    for x in 0..p.len() {
        let nx = least(&sp, x, p.len());
        for y in 0..q.len() {
            let ny = least(&sq, y, q.len());
            let boxed = Subset::from_indices(n, nx.iter().flat_map(|a| ny.iter().map(move |b| p.pair_index(q, a, b))));
            let up = prod.up(p.pair_index(q, x, y));
            if *up != boxed {
                witness = Some(prod.subset_labels(up));
                break;
            }
        }
    }
    let equal = witness.is_none();
    assert!(equal, "finite products must carry the product topology");
    Ok(ProductComparison {
        equal,
        open_count: None,
        witness,
    })
}

fn box_mask(p: &FinPoset, q: &FinPoset, u: &Subset, v: &Subset) -> u64 {
    let mut m = 0u64;
    for a in u {
        for b in v {
            m |= 1 << p.pair_index(q, a, b);
        }
    }
    m
}
