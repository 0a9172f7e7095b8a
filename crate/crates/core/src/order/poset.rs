//! Finite partial orders on labelled, indexed elements.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::limits;
use crate::subset::{all_masks, Subset};

/// A finite partial order. Element `i` carries `labels[i]`.
///
/// Both the principal filters `↑x` and principal ideals `↓x` are stored as
/// bit rows, so `a ≤ b` is `up[a].contains(b)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinPoset {
    labels: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

/// An ideal (directed lower set) of a finite poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdealDescriptor {
    Principal(usize),
    NonPrincipal(Vec<usize>),
}

impl FinPoset {
    /// Reflexive-transitive closure of `pairs` over `labels`.
    pub fn build<L: AsRef<str>, A: AsRef<str>>(labels: &[L], pairs: &[(A, A)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut up: Vec<Subset> = (0..n).map(|i| Subset::singleton(n, i)).collect();
        for (a, b) in pairs {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownLabel(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownLabel(b.as_ref().to_string()))?;
            up[ia].insert(ib);
        }
        warshall(&mut up);
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::Cycle(vec![
                        labels[i].clone(),
                        labels[j].clone(),
                        labels[i].clone(),
                    ]));
                }
            }
        }
        Ok(Self::from_up_rows(labels, up))
    }

    /// Builds a poset from a relation that must already be a partial order.
    pub fn from_relation<F: Fn(usize, usize) -> bool>(labels: Vec<String>, le: F) -> Result<Self> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let up: Vec<Subset> = (0..n)
            .map(|a| Subset::from_indices(n, (0..n).filter(|&b| le(a, b))))
            .collect();
        for a in 0..n {
            if !up[a].contains(a) {
                return Err(Error::NotPartialOrder(format!("{} is not reflexive", labels[a])));
            }
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} violate antisymmetry",
                        labels[a], labels[b]
                    )));
                }
                if !up[b].is_subset(&up[a]) {
                    let c = up[b].difference(&up[a]).first().unwrap_or(b);
                    return Err(Error::NotPartialOrder(format!(
                        "{} <= {} <= {} but not {} <= {}",
                        labels[a], labels[b], labels[c], labels[a], labels[c]
                    )));
                }
            }
        }
        Ok(Self::from_up_rows(labels, up))
    }

    /// Trusted constructor: `up` must describe a partial order.
    pub(crate) fn from_up_rows(labels: Vec<String>, up: Vec<Subset>) -> Self {
        let n = labels.len();
        let mut down = vec![Subset::empty(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.iter() {
                down[b].insert(a);
            }
        }
        FinPoset { labels, up, down }
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let up = (0..n).map(|i| Subset::from_indices(n, i..n)).collect();
        Self::from_up_rows(labels, up)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| ((b'a' + (i % 26) as u8) as char).to_string())
            .enumerate()
            .map(|(i, s)| if i < 26 { s } else { format!("{s}{}", i / 26) })
            .collect();
        let up = (0..n).map(|i| Subset::singleton(n, i)).collect();
        Self::from_up_rows(labels, up)
    }

    /// `bot < x, y < top`.
    pub fn diamond() -> Self {
        Self::build(
            &["bot", "x", "y", "top"],
            &[("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
        )
        .expect("diamond is a partial order")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// `↑x`.
    pub fn up(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    /// `↓x`.
    pub fn down(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    pub fn up_rows(&self) -> &[Subset] {
        &self.up
    }

    pub fn down_rows(&self) -> &[Subset] {
        &self.down
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Subset from labels.
    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = self.empty_set();
        for l in labels {
            let i = self
                .index_of(l.as_ref())
                .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn subset_labels(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn up_closure(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a {
            out.union_with(&self.up[x]);
        }
        out
    }

    pub fn down_closure(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a {
            out.union_with(&self.down[x]);
        }
        out
    }

    pub fn is_upper(&self, a: &Subset) -> bool {
        a.iter().all(|x| self.up[x].is_subset(a))
    }

    pub fn is_lower(&self, a: &Subset) -> bool {
        a.iter().all(|x| self.down[x].is_subset(a))
    }

    /// Maximal elements of `a`.
    pub fn maximal(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a {
            if !self.up[x].iter().any(|y| y != x && a.contains(y)) {
                out.insert(x);
            }
        }
        out
    }

    /// Minimal elements of `a`.
    pub fn minimal(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a {
            if !self.down[x].iter().any(|y| y != x && a.contains(y)) {
                out.insert(x);
            }
        }
        out
    }

    /// The greatest element of `a`, if any.
    pub fn max_of(&self, a: &Subset) -> Option<usize> {
        a.iter().find(|&m| a.is_subset(&self.down[m]))
    }

    /// The least element of `a`, if any.
    pub fn min_of(&self, a: &Subset) -> Option<usize> {
        a.iter().find(|&m| a.is_subset(&self.up[m]))
    }

    /// Common upper bounds of `a` (all of `P` when `a` is empty).
    pub fn upper_bounds(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    pub fn lower_bounds(&self, a: &Subset) -> Subset {
        let mut out = self.full_set();
        for x in a {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    /// Least upper bound of `a`, by search over its upper bounds.
    pub fn lub(&self, a: &Subset) -> Option<usize> {
        self.min_of(&self.upper_bounds(a))
    }

    pub fn glb(&self, a: &Subset) -> Option<usize> {
        self.max_of(&self.lower_bounds(a))
    }

    /// Nonempty, and every pair of members has an upper bound inside `d`.
    pub fn is_directed(&self, d: &Subset) -> bool {
        if d.is_empty() {
            return false;
        }
        let members = d.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.up[a].intersection(&self.up[b]).intersects(d) {
                    return false;
                }
            }
        }
        true
    }

    /// Nonempty, and every pair of members has a lower bound inside `f`.
    pub fn is_filtered(&self, f: &Subset) -> bool {
        if f.is_empty() {
            return false;
        }
        let members = f.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.down[a].intersection(&self.down[b]).intersects(f) {
                    return false;
                }
            }
        }
        true
    }

    /// Supremum of a directed subset. For finite `d` this is its greatest
    /// member; the least upper bound is computed independently and must agree.
    pub fn directed_sup(&self, d: &Subset) -> Result<usize> {
        if !self.is_directed(d) {
            return Err(Error::NotDirected);
        }
        let top = self.max_of(d).expect("a finite directed set has a greatest element");
        assert_eq!(
            self.lub(d),
            Some(top),
            "greatest member of a directed set must be its least upper bound"
        );
        Ok(top)
    }

    /// Every ideal of the poset. All ideals of a finite poset are principal;
    /// when the poset is small enough the directed lower sets are enumerated
    /// independently and any non-principal one is reported as such.
    pub fn enumerate_ideals(&self) -> Vec<IdealDescriptor> {
        let mut out: Vec<IdealDescriptor> = (0..self.len()).map(IdealDescriptor::Principal).collect();
        if self.len() <= limits::brute_force_limit() {
            let principal: BTreeSet<&Subset> = self.down.iter().collect();
            let lowers = enumerate::down_sets(&self.down, limits::enumeration_cap())
                .expect("lower sets of a small poset fit the cap");
            let mut directed = 0;
            for l in &lowers {
                if self.is_directed(l) {
                    directed += 1;
                    if !principal.contains(l) {
                        out.push(IdealDescriptor::NonPrincipal(l.to_vec()));
                    }
                }
            }
            assert_eq!(directed, self.len(), "directed lower sets are exactly the ↓x");
        }
        out
    }

    /// Directed lower sets, found by brute force.
    pub fn directed_lower_sets(&self) -> Result<Vec<Subset>> {
        let lowers = enumerate::down_sets(&self.down, limits::enumeration_cap())?;
        Ok(lowers.into_iter().filter(|l| self.is_directed(l)).collect())
    }

    /// All lower sets.
    pub fn lower_sets(&self) -> Result<Vec<Subset>> {
        enumerate::down_sets(&self.down, limits::enumeration_cap())
    }

    /// All upper sets.
    pub fn upper_sets(&self) -> Result<Vec<Subset>> {
        enumerate::up_sets(&self.up, limits::enumeration_cap())
    }

    /// Componentwise order on `P × Q`; the pair `(p, q)` has index `p·|Q| + q`.
    pub fn product(&self, other: &FinPoset) -> FinPoset {
        let (n, m) = (self.len(), other.len());
        let size = n * m;
        let mut labels = Vec::with_capacity(size);
        let mut up = Vec::with_capacity(size);
        for p in 0..n {
            for q in 0..m {
                labels.push(format!("({},{})", self.labels[p], other.labels[q]));
                let row = Subset::from_indices(
                    size,
                    self.up[p]
                        .iter()
                        .flat_map(|p2| other.up[q].iter().map(move |q2| p2 * m + q2)),
                );
                up.push(row);
            }
        }
        let prod = Self::from_up_rows(labels, up);
        if size <= limits::brute_force_limit() {
            assert_eq!(
                prod.enumerate_ideals().len(),
                self.enumerate_ideals().len() * other.enumerate_ideals().len()
            );
        }
        prod
    }

    /// Index of the pair `(p, q)` in [`FinPoset::product`].
    pub fn pair_index(&self, other: &FinPoset, p: usize, q: usize) -> usize {
        p * other.len() + q
    }

    /// The opposite order.
    pub fn dual(&self) -> FinPoset {
        FinPoset {
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// The order restricted to `s`, relabelled densely in increasing index order.
    pub fn restrict(&self, s: &Subset) -> FinPoset {
        let idx = s.to_vec();
        let k = idx.len();
        let labels = idx.iter().map(|&i| self.labels[i].clone()).collect();
        let up = idx
            .iter()
            .map(|&a| Subset::from_indices(k, (0..k).filter(|&j| self.le(a, idx[j]))))
            .collect();
        Self::from_up_rows(labels, up)
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].iter() {
                if a == b {
                    continue;
                }
                let between = self.up[a].intersection(&self.down[b]).count();
                if between == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Smallest index `m` with `↓parts[m] ⊇ d`.
    pub fn cofinal_part(&self, d: &Subset, parts: &[Subset]) -> Result<usize> {
        if !self.is_directed(d) {
            return Err(Error::NotDirected);
        }
        if parts.is_empty() {
            return Err(Error::BadPartition("no parts".into()));
        }
        let mut union = self.empty_set();
        for (i, p) in parts.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::BadPartition(format!("part {i} is empty")));
            }
            if !p.is_subset(d) {
                return Err(Error::BadPartition(format!("part {i} leaves the set")));
            }
            union.union_with(p);
        }
        if union != *d {
            return Err(Error::BadPartition("parts do not cover the set".into()));
        }
        parts
            .iter()
            .position(|p| d.is_subset(&self.down_closure(p)))
            .ok_or_else(|| Error::HypothesisFailed("no cofinal part".into()))
    }

    /// `A ≪ B`: every directed `D` with `⋁D ∈ ↑B` meets `↑A`.
    ///
    /// Small posets are decided by running through every directed subset; the
    /// answer is cross-checked against `↑B ⊆ ↑A`, which is how larger posets
    /// are decided.
    pub fn way_below(&self, a: &Subset, b: &Subset) -> Result<bool> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet);
        }
        let up_a = self.up_closure(a);
        let up_b = self.up_closure(b);
        let shortcut = up_b.is_subset(&up_a);
        if self.len() <= limits::brute_force_limit() {
            let brute = self.way_below_brute(&up_a, &up_b);
            assert_eq!(brute, shortcut, "way-below shortcut disagrees with definition");
        }
        Ok(shortcut)
    }

    fn way_below_brute(&self, up_a: &Subset, up_b: &Subset) -> bool {
        let n = self.len();
        let upm: Vec<u64> = self.up.iter().map(Subset::mask).collect();
        let (ma, mb) = (up_a.mask(), up_b.mask());
        for d in all_masks(n).skip(1) {
            if !directed_mask(&upm, d) {
                continue;
            }
            let top = crate::subset::mask_bits(d)
                .find(|&m| crate::subset::mask_bits(d).all(|x| upm[x] >> m & 1 == 1))
                .expect("directed finite set has a max");
            if mb >> top & 1 == 1 && d & ma == 0 {
                return false;
            }
        }
        true
    }

    /// `{x : x ≪ x}`, which is everything in a finite poset.
    pub fn compact_elements(&self) -> Subset {
        let mut out = self.empty_set();
        for x in 0..self.len() {
            let sx = Subset::singleton(self.len(), x);
            if self.way_below(&sx, &sx).expect("singletons are nonempty") {
                out.insert(x);
            }
        }
        assert!(out.is_full(), "every element of a finite poset is compact");
        out
    }

    /// All directed subsets as masks. Requires at most 16 elements.
    pub fn directed_masks(&self) -> Result<Vec<u64>> {
        let n = self.len();
        if n > limits::brute_force_limit() {
            return Err(Error::SizeTooLarge {
                size: n,
                limit: limits::brute_force_limit(),
            });
        }
        let upm: Vec<u64> = self.up.iter().map(Subset::mask).collect();
        Ok(all_masks(n).skip(1).filter(|&d| directed_mask(&upm, d)).collect())
    }

    /// Is `f` order-preserving from `self` to `target`?
    pub fn is_monotone(&self, target: &FinPoset, f: &[usize]) -> bool {
        (0..self.len()).all(|a| self.up[a].iter().all(|b| target.le(f[a], f[b])))
    }

    /// A linear extension, listed bottom-up.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].count(), x));
        order
    }
}

pub(crate) fn directed_mask(upm: &[u64], d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let bits: Vec<usize> = crate::subset::mask_bits(d).collect();
    for (i, &a) in bits.iter().enumerate() {
        for &b in &bits[i + 1..] {
            if upm[a] & upm[b] & d == 0 {
                return false;
            }
        }
    }
    true
}

fn warshall(up: &mut [Subset]) {
    let n = up.len();
    for k in 0..n {
        let row_k = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
}

impl fmt::Debug for FinPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        write!(f, "FinPoset{{{:?}; {}}}", self.labels, covers.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FinPoset {
        FinPoset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn closure_derives_transitive_pairs() {
        let p = abc();
        // naive closure oracle: iterate composition to a fixed point
        let mut rel = [[false; 3]; 3];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        rel[0][1] = true;
        rel[1][2] = true;
        loop {
            let mut changed = false;
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        if rel[i][j] && rel[j][k] && !rel[i][k] {
                            rel[i][k] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for (i, row) in rel.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(p.le(i, j), v);
            }
        }
    }

    #[test]
    fn small_builds() {
        let two = FinPoset::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(two.lt(0, 1) && !two.le(1, 0));
        let one = FinPoset::build::<_, &str>(&["a"], &[]).unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn cycle_and_duplicates_rejected() {
        let err = FinPoset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        match err {
            Err(Error::Cycle(w)) => {
                assert_eq!(w.len(), 3);
                assert_eq!(w[0], w[2]);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
        assert_eq!(
            FinPoset::build::<_, &str>(&["a", "a"], &[]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!(
            FinPoset::build(&["a"], &[("a", "z")]),
            Err(Error::UnknownLabel("z".into()))
        );
    }

    #[test]
    fn closures() {
        let p = abc();
        let b = p.subset(&["b"]).unwrap();
        assert_eq!(p.up_closure(&b), p.subset(&["b", "c"]).unwrap());
        assert!(p.up_closure(&p.empty_set()).is_empty());
        let q = FinPoset::antichain(2);
        let a = Subset::singleton(2, 0);
        assert_eq!(q.up_closure(&a), a);
    }

    #[test]
    fn directedness_and_sups() {
        let p = abc();
        assert!(p.is_directed(&p.subset(&["a", "c"]).unwrap()));
        assert!(!p.is_directed(&p.empty_set()));
        let q = FinPoset::antichain(2);
        assert!(!q.is_directed(&q.full_set()));
        assert_eq!(q.directed_sup(&q.full_set()), Err(Error::NotDirected));
        assert_eq!(p.directed_sup(&p.subset(&["a", "b"]).unwrap()), Ok(1));
        let d = FinPoset::diamond();
        let s = d.subset(&["bot", "x"]).unwrap();
        assert_eq!(d.directed_sup(&s), Ok(d.index_of("x").unwrap()));
    }

    #[test]
    fn ideals_are_principal() {
        assert_eq!(abc().enumerate_ideals().len(), 3);
        assert_eq!(FinPoset::antichain(2).enumerate_ideals().len(), 2);
        assert_eq!(FinPoset::chain(1).enumerate_ideals().len(), 1);
        assert!(abc()
            .enumerate_ideals()
            .iter()
            .all(|i| matches!(i, IdealDescriptor::Principal(_))));
    }

    #[test]
    fn products() {
        let d = FinPoset::chain(2).product(&FinPoset::chain(2));
        assert_eq!(d.len(), 4);
        assert_eq!(d.minimal(&d.full_set()).count(), 1);
        assert_eq!(d.maximal(&d.full_set()).count(), 1);
        let a = FinPoset::antichain(2).product(&FinPoset::antichain(2));
        assert_eq!(a.covers().len(), 0);
        let p = abc();
        let p1 = p.product(&FinPoset::chain(1));
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p.le(i, j), p1.le(i, j));
            }
        }
    }

    #[test]
    fn cofinal_parts() {
        let p = FinPoset::chain(4);
        let parts = [Subset::from_indices(4, [0, 2]), Subset::from_indices(4, [1, 3])];
        assert_eq!(p.cofinal_part(&p.full_set(), &parts), Ok(1));
        let one = Subset::singleton(4, 2);
        assert_eq!(p.cofinal_part(&one, std::slice::from_ref(&one)), Ok(0));
        let d = FinPoset::diamond();
        let set = d.subset(&["bot", "x", "top"]).unwrap();
        let parts = [d.subset(&["bot"]).unwrap(), d.subset(&["x", "top"]).unwrap()];
        assert_eq!(d.cofinal_part(&set, &parts), Ok(1));
        assert!(matches!(d.cofinal_part(&set, &parts[..1]), Err(Error::BadPartition(_))));
    }

    #[test]
    fn way_below_cases() {
        let q = FinPoset::antichain(2);
        let a = Subset::singleton(2, 0);
        let b = Subset::singleton(2, 1);
        assert_eq!(q.way_below(&a, &b), Ok(false));
        assert_eq!(q.way_below(&a, &a), Ok(true));
        assert_eq!(q.way_below(&q.empty_set(), &a), Err(Error::EmptySet));
        assert!(FinPoset::diamond().compact_elements().is_full());
        assert_eq!(FinPoset::chain(1).compact_elements().count(), 1);
    }

    #[test]
    fn relation_constructor_checks_axioms() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(FinPoset::from_relation(labels.clone(), |a, b| a <= b).is_ok());
        assert!(matches!(
            FinPoset::from_relation(labels, |_, _| true),
            Err(Error::NotPartialOrder(_))
        ));
    }
}
