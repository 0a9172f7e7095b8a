//! Certificates built from the ideal enumeration, and bundled examples.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cert::{chain_horizon, CPosetCert, ChainRule, ChainSpec, SupFlag, SupSpec};
use crate::error::{Error, Result};
use crate::symbolic::{
    classify_directed, columns_within, extract_chain, truncate, AmbientFamily, ColumnId, DefinableSet, ElemCode,
    Enumeration, Region, SupResult,
};
use crate::topo::{compare_product_topologies, ProductComparison};

/// A certificate for `f` at depth `k`: one chain per non-principal ideal,
/// extracted from the ideal's enumeration, and singleton `T` parts for the
/// points left over.
pub fn cposet_from_countable_ideals(f: AmbientFamily, k: u32) -> Result<CPosetCert> {
    let t = truncate(f, k)?;
    let horizon = chain_horizon(k) as usize;
    let count = columns_within(f, k).iter().map(ColumnId::position).max().unwrap_or(0);
    let mut prefixes = BTreeMap::new();
    let mut sups = Vec::new();
    for n in 1..=count {
        let column = ColumnId::nth(f, n)
            .ok_or_else(|| Error::DescriptorEnumerationFailed(format!("no column at position {n}")))?;
        let chain: Vec<ElemCode> = extract_chain(f, Enumeration::stream(move |i| column.ideal_elem(f, i)), true)?
            .take(horizon)
            .collect::<Result<_>>()
            .map_err(|e| Error::DescriptorEnumerationFailed(format!("{column}: {e}")))?;
        sups.push(match classify_directed(f, &chain, true)? {
            SupResult::AmbientSup(e) => SupFlag::SupExists(e),
            _ => SupFlag::NoSup,
        });
        prefixes.insert(n, chain);
    }
    let mut cert = CPosetCert {
        family: f,
        chains: ChainSpec {
            rule: ChainRule::Explicit,
            prefixes,
        },
        sups: SupSpec::List(sups),
        t_parts: Vec::new(),
    };
    let leftovers: Vec<ElemCode> = t
        .codes()
        .iter()
        .filter(|e| !(1..=count).any(|n| cert.in_h(n, e)))
        .copied()
        .collect();
    cert.t_parts = leftovers.into_iter().map(|e| DefinableSet::Finite(vec![e])).collect();
    Ok(cert)
}

/// Hand-written certificates.
pub fn johnstone_cert() -> CPosetCert {
    CPosetCert::columns(AmbientFamily::Johnstone, vec![])
}

pub fn johnstone_plus_x_cert(x: u32) -> CPosetCert {
    CPosetCert::columns(
        AmbientFamily::JohnstonePlusX(x),
        vec![DefinableSet::Region(Region::XPoints)],
    )
}

/// `𝕁` with the first two elements of chain 1 swapped.
pub fn corrupted_johnstone_cert() -> CPosetCert {
    let mut c = johnstone_cert();
    c.chains.prefixes.insert(
        1,
        vec![ElemCode::pair(1, 2), ElemCode::pair(1, 1), ElemCode::pair(1, 3)],
    );
    c
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductLevel {
    pub depth: u32,
    pub points: usize,
    pub comparison: ProductComparison,
}

/// Scott topology of `P_k × Q_k` against the product topology, along the
/// truncation towers of two families.
pub fn product_tower(a: AmbientFamily, b: AmbientFamily, depths: &[u32]) -> Result<Vec<ProductLevel>> {
    depths
        .iter()
        .map(|&d| {
            let (p, q) = (truncate(a, d)?, truncate(b, d)?);
            Ok(ProductLevel {
                depth: d,
                points: p.len() * q.len(),
                comparison: compare_product_topologies(p.poset(), q.poset())?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::verify_cposet;

    #[test]
    fn built_certificates_verify() {
        for f in [
            AmbientFamily::Johnstone,
            AmbientFamily::JohnstonePlusX(3),
            AmbientFamily::Jia,
            AmbientFamily::Lattice428,
            AmbientFamily::NChain,
            AmbientFamily::FlatAntichain(4),
        ] {
            let k = if f == AmbientFamily::Jia { 3 } else { 4 };
            let cert = cposet_from_countable_ideals(f, k).unwrap();
            let r = verify_cposet(&cert, k, 1).unwrap();
            assert!(r.passed, "{f}: {r:?}");
        }
        let l = cposet_from_countable_ideals(AmbientFamily::Lattice428, 3).unwrap();
        assert_eq!(l.chain_elem(1, 1), Some(ElemCode::Bot));
        assert_eq!(l.sup(2), Some(SupFlag::SupExists(ElemCode::Top)));
        let flat = cposet_from_countable_ideals(AmbientFamily::FlatAntichain(3), 2).unwrap();
        assert_eq!(flat.t_parts.len(), 3);
    }

    #[test]
    fn product_levels_agree() {
        for level in product_tower(AmbientFamily::Johnstone, AmbientFamily::NChain, &[1, 2, 3]).unwrap() {
            assert!(level.comparison.equal);
        }
    }
}
