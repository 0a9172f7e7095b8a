//! Finite truncations of the named families.
//!
//! A truncation is an order restriction, not a sub-dcpo: column sups such as
//! `(n,∞)` are present, but the column elements beyond the depth are not.

use std::collections::HashMap;

use super::code::{AmbientFamily, Coord, ElemCode};
use crate::error::{Error, Result};
use crate::order::FinPoset;
use crate::subset::Subset;

/// One level of the truncation tower.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub family: AmbientFamily,
    pub depth: u32,
    codes: Vec<ElemCode>,
    index: HashMap<ElemCode, usize>,
    poset: FinPoset,
}

/// Codes of depth `k`, in a fixed order.
pub fn truncation_codes(f: AmbientFamily, k: u32) -> Vec<ElemCode> {
    let last = || (1..=k).map(Coord::Fin).chain(std::iter::once(Coord::Inf));
    let mut out = Vec::new();
    match f {
        AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_) => {
            for j in 1..=k {
                out.extend(last().map(|c| ElemCode::Pair(j, c)));
            }
            if let AmbientFamily::JohnstonePlusX(x) = f {
                out.extend((1..=x).map(ElemCode::X));
            }
        }
        AmbientFamily::Jia => {
            for i in 1..=k {
                for j in 1..=k {
                    out.extend(last().map(|c| ElemCode::Triple(i, j, c)));
                }
            }
        }
        AmbientFamily::Lattice428 => {
            out.push(ElemCode::Bot);
            for n in 1..=k {
                out.extend((1..=k).map(|m| ElemCode::pair(n, m)));
            }
            out.push(ElemCode::Top);
        }
        AmbientFamily::NChain => out.extend((1..=k).map(ElemCode::N)),
        AmbientFamily::FlatAntichain(m) => out.extend((1..=m).map(ElemCode::A)),
    }
    out
}

/// Is `e` present at depth `k`?
pub fn within_depth(f: AmbientFamily, e: &ElemCode, k: u32) -> bool {
    f.contains(e)
        && match e {
            ElemCode::X(_) | ElemCode::A(_) | ElemCode::Bot | ElemCode::Top => true,
            _ => e.max_finite_coord() <= k,
        }
}

/// `↑x` inside the truncation at depth `k`, generated from the order rule.
pub fn up_within(f: AmbientFamily, x: &ElemCode, k: u32) -> Vec<ElemCode> {
    let mut out = vec![*x];
    match (f, *x) {
        (AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_), ElemCode::Pair(j, Coord::Fin(h))) => {
            out.extend((h + 1..=k).map(|m| ElemCode::pair(j, m)));
            out.push(ElemCode::pair_inf(j));
            out.extend((h.max(1)..=k).filter(|&m| m != j).map(ElemCode::pair_inf));
        }
        (AmbientFamily::Jia, ElemCode::Triple(i, j, Coord::Fin(h))) => {
            out.extend((h + 1..=k).map(|m| ElemCode::triple(i, j, m)));
            out.push(ElemCode::triple_inf(i, j));
            if i < k {
                out.extend((h..=k).map(|j2| ElemCode::triple_inf(i + 1, j2)));
            }
        }
        (AmbientFamily::Lattice428, ElemCode::Bot) => {
            out = truncation_codes(f, k);
        }
        (AmbientFamily::Lattice428, ElemCode::Pair(n, Coord::Fin(m))) => {
            out.extend((m + 1..=k).map(|m2| ElemCode::pair(n, m2)));
            out.push(ElemCode::Top);
        }
        (AmbientFamily::NChain, ElemCode::N(n)) => out.extend((n + 1..=k).map(ElemCode::N)),
        _ => {}
    }
    out
}

/// The truncation of `f` at depth `k ≥ 1`. The order is validated as a
/// partial order when the poset is built.
pub fn truncate(f: AmbientFamily, k: u32) -> Result<Truncation> {
    if k == 0 {
        return Err(Error::PreconditionFailed("depth starts at 1".into()));
    }
    let codes = truncation_codes(f, k);
    let labels: Vec<String> = codes.iter().map(ToString::to_string).collect();
    let poset = FinPoset::from_relation(labels, |a, b| f.leq_unchecked(&codes[a], &codes[b]))?;
    let index = codes.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    Ok(Truncation {
        family: f,
        depth: k,
        codes,
        index,
        poset,
    })
}

impl Truncation {
    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[ElemCode] {
        &self.codes
    }

    pub fn code(&self, i: usize) -> ElemCode {
        self.codes[i]
    }

    pub fn index_of(&self, e: &ElemCode) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    /// The indices of the given codes that lie in the truncation.
    pub fn subset_of<'a>(&self, codes: impl IntoIterator<Item = &'a ElemCode>) -> Subset {
        Subset::from_indices(self.len(), codes.into_iter().filter_map(|c| self.index_of(c)))
    }

    pub fn filter(&self, mut pred: impl FnMut(&ElemCode) -> bool) -> Subset {
        Subset::from_indices(self.len(), (0..self.len()).filter(|&i| pred(&self.codes[i])))
    }

    pub fn codes_of(&self, s: &Subset) -> Vec<ElemCode> {
        s.iter().map(|i| self.codes[i]).collect()
    }

    /// Index map into the next truncation.
    pub fn inclusion_into(&self, deeper: &Truncation) -> Vec<usize> {
        self.codes
            .iter()
            .map(|c| deeper.index_of(c).expect("truncations are nested"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(truncate(AmbientFamily::Johnstone, 2).unwrap().len(), 6);
        let l = truncate(AmbientFamily::Lattice428, 1).unwrap();
        assert_eq!(l.len(), 3);
        assert!(l.poset().lt(0, 1) && l.poset().lt(1, 2));
        let j = truncate(AmbientFamily::Jia, 1).unwrap();
        assert_eq!(j.len(), 2);
        assert!(j.poset().lt(0, 1));
        assert_eq!(truncate(AmbientFamily::FlatAntichain(3), 4).unwrap().len(), 3);
        assert!(truncate(AmbientFamily::NChain, 0).is_err());
    }

    #[test]
    fn generated_up_sets_match_the_order() {
        for f in [
            AmbientFamily::JohnstonePlusX(2),
            AmbientFamily::Jia,
            AmbientFamily::Lattice428,
            AmbientFamily::NChain,
        ] {
            let t = truncate(f, 4).unwrap();
            for (i, x) in t.codes().iter().enumerate() {
                let mut got: Vec<usize> = up_within(f, x, 4).iter().map(|y| t.index_of(y).unwrap()).collect();
                got.sort_unstable();
                got.dedup();
                assert_eq!(got, t.poset().up(i).to_vec(), "{f} {x}");
            }
        }
    }

    #[test]
    fn towers_are_coherent() {
        for f in [
            AmbientFamily::Johnstone,
            AmbientFamily::JohnstonePlusX(3),
            AmbientFamily::Jia,
            AmbientFamily::Lattice428,
            AmbientFamily::NChain,
        ] {
            let mut prev = truncate(f, 1).unwrap();
            for k in 2..=5 {
                let next = truncate(f, k).unwrap();
                let inc = prev.inclusion_into(&next);
                for a in 0..prev.len() {
                    for b in 0..prev.len() {
                        assert_eq!(prev.poset().le(a, b), next.poset().le(inc[a], inc[b]));
                    }
                }
                prev = next;
            }
        }
    }
}
