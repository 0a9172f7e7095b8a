//! Posets up to isomorphism, and random posets.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::poset::FinPoset;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::limits;
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

/// Posets of the given size: one per isomorphism class, or `count` random ones.
pub fn corpus(size: usize, mode: CorpusMode, seed: u64, count: usize) -> Result<Vec<FinPoset>> {
    match mode {
        CorpusMode::Exhaustive => exhaustive(size),
        CorpusMode::Random => Ok(random(size, seed).take(count).collect()),
    }
}

/// One representative of every isomorphism class of posets on `size` points.
///
/// Every poset arises from a smaller one by adding a maximal element over
/// some lower set, so classes are grown one point at a time and deduplicated
/// by canonical code.
pub fn exhaustive(size: usize) -> Result<Vec<FinPoset>> {
    let limit = limits::exhaustive_corpus_limit().min(8);
    if size > limit {
        return Err(Error::SizeTooLarge { size, limit });
    }
    let mut level: Vec<FinPoset> = vec![FinPoset::chain(0)];
    for n in 1..=size {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next = Vec::new();
        for p in &level {
            let lowers = enumerate::down_sets(p.down_rows(), limits::enumeration_cap())?;
            for l in lowers {
                let q = extend_with_max(p, &l);
                let (code, canon) = canonical(&q);
                if seen.insert(code) {
                    next.push(canon);
                }
            }
        }
        debug_assert!(next.iter().all(|p| p.len() == n));
        level = next;
    }
    Ok(level)
}

/// All posets of size `0..=max`, smallest first.
pub fn exhaustive_up_to(max: usize) -> Result<Vec<FinPoset>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(exhaustive(n)?);
    }
    Ok(out)
}

fn extend_with_max(p: &FinPoset, below: &Subset) -> FinPoset {
    let n = p.len();
    let mut labels: Vec<String> = p.labels().to_vec();
    labels.push(n.to_string());
    let mut up: Vec<Subset> = (0..n)
        .map(|x| {
            let mut row = Subset::from_indices(n + 1, p.up(x).iter());
            if below.contains(x) {
                row.insert(n);
            }
            row
        })
        .collect();
    up.push(Subset::singleton(n + 1, n));
    FinPoset::from_up_rows(labels, up)
}

/// Canonical code of a poset (minimum over relabellings of its relation
/// matrix, read row-major) together with the relabelled poset.
///
/// Only relabellings that sort points by `(|↑x|, |↓x|)` are tried; the
/// signature is isomorphism-invariant, so the minimum is unaffected.
pub fn canonical(p: &FinPoset) -> (u64, FinPoset) {
    let n = p.len();
    assert!(n <= 8, "canonical codes are limited to 8 points");
    let sig = |x: usize| (p.up(x).count(), p.down(x).count());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sig(x));
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || sig(order[i]) != sig(order[start]) {
            groups.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    let mut best_perm = order.clone();
    let mut perm = order.clone();
    search(p, &groups, 0, &mut perm, &mut best, &mut best_perm);
    let labels = (0..n).map(|i| i.to_string()).collect();
    let up = (0..n)
        .map(|i| Subset::from_indices(n, (0..n).filter(|&j| p.le(best_perm[i], best_perm[j]))))
        .collect();
    (best, FinPoset::from_up_rows(labels, up))
}

fn code_of(p: &FinPoset, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in 0..n {
            code <<= 1;
            if i != j && p.le(perm[i], perm[j]) {
                code |= 1;
            }
        }
    }
    code
}

fn search(
    p: &FinPoset,
    groups: &[(usize, usize)],
    g: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
    best_perm: &mut Vec<usize>,
) {
    if g == groups.len() {
        let c = code_of(p, perm);
        if c < *best {
            *best = c;
            best_perm.clone_from(perm);
        }
        return;
    }
    let (s, e) = groups[g];
    permute(p, groups, g, s, e, perm, best, best_perm);
}

#[allow(clippy::too_many_arguments)]
fn permute(
    p: &FinPoset,
    groups: &[(usize, usize)],
    g: usize,
    k: usize,
    e: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
    best_perm: &mut Vec<usize>,
) {
    if k + 1 >= e {
        search(p, groups, g + 1, perm, best, best_perm);
        return;
    }
    for i in k..e {
        perm.swap(k, i);
        permute(p, groups, g, k + 1, e, perm, best, best_perm);
        perm.swap(k, i);
    }
}

pub fn is_isomorphic(p: &FinPoset, q: &FinPoset) -> bool {
    p.len() == q.len() && canonical(p).0 == canonical(q).0
}

/// An endless stream of random posets: a hidden linear order is fixed by a
/// shuffle and each compatible pair becomes a relation with probability 1/2
/// before closing transitively.
pub fn random(size: usize, seed: u64) -> impl Iterator<Item = FinPoset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::from_fn(move || Some(random_poset(size, &mut rng)))
}

pub fn random_poset<R: Rng>(size: usize, rng: &mut R) -> FinPoset {
    let mut perm: Vec<usize> = (0..size).collect();
    perm.shuffle(rng);
    let labels: Vec<String> = (0..size).map(|i| i.to_string()).collect();
    let mut pairs = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            if rng.gen_bool(0.5) {
                pairs.push((labels[perm[i]].clone(), labels[perm[j]].clone()));
            }
        }
    }
    FinPoset::build(&labels, &pairs).expect("edges follow a linear order")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(exhaustive(1).unwrap().len(), 1);
        assert_eq!(exhaustive(2).unwrap().len(), 2);
        assert_eq!(exhaustive(3).unwrap().len(), 5);
    }

    #[test]
    fn too_large_is_rejected() {
        assert!(matches!(exhaustive(9), Err(Error::SizeTooLarge { .. })));
    }

    #[test]
    fn random_is_reproducible() {
        let a: Vec<FinPoset> = random(6, 7).take(5).collect();
        let b: Vec<FinPoset> = random(6, 7).take(5).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn canonical_is_label_invariant() {
        let p = FinPoset::build(&["x", "y", "z"], &[("x", "z")]).unwrap();
        let q = FinPoset::build(&["u", "v", "w"], &[("w", "u")]).unwrap();
        assert!(is_isomorphic(&p, &q));
        assert!(!is_isomorphic(&p, &FinPoset::chain(3)));
    }
}
