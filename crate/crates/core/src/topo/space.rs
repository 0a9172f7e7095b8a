//! Finite topological spaces.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::limits;
use crate::order::FinPoset;
use crate::subset::Subset;

/// The intrinsic topologies of a poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TopologyKind {
    Scott,
    Alexandroff,
    Upper,
    Lower,
    Lawson,
}

/// A finite space, held through the minimal open neighbourhood `N(x)` of each
/// point. A set is open iff it contains `N(x)` for each of its points `x`.
///
/// The full open family is materialized on demand, or kept as given when the
/// space was read from an explicit list of opens.
#[derive(Clone, Debug)]
pub struct FinSpace {
    labels: Vec<String>,
    nbhd: Vec<Subset>,
    opens: OnceLock<Option<Vec<Subset>>>,
}

impl PartialEq for FinSpace {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.nbhd == other.nbhd
    }
}

impl Eq for FinSpace {}

impl FinSpace {
    /// Space whose minimal neighbourhoods are `nbhd`. Each `nbhd[x]` must
    /// contain `x`, and `y ∈ nbhd[x]` must imply `nbhd[y] ⊆ nbhd[x]`.
    pub fn from_nbhd(labels: Vec<String>, nbhd: Vec<Subset>) -> Result<Self> {
        let n = labels.len();
        if nbhd.len() != n {
            return Err(Error::NotATopology("one neighbourhood per point".into()));
        }
        for (x, u) in nbhd.iter().enumerate() {
            if u.universe() != n || !u.contains(x) {
                return Err(Error::NotATopology(format!(
                    "{} misses its own neighbourhood",
                    labels[x]
                )));
            }
            for y in u {
                if !nbhd[y].is_subset(u) {
                    return Err(Error::NotATopology(format!(
                        "neighbourhoods of {} and {} are not nested",
                        labels[x], labels[y]
                    )));
                }
            }
        }
        Ok(FinSpace {
            labels,
            nbhd,
            opens: OnceLock::new(),
        })
    }

    /// Space given by its whole open family, which is validated.
    pub fn from_opens(labels: Vec<String>, opens: Vec<Subset>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if opens.iter().any(|u| u.universe() != n) {
            return Err(Error::NotATopology("open set over a different carrier".into()));
        }
        let family: HashSet<&Subset> = opens.iter().collect();
        if !family.contains(&Subset::empty(n)) {
            return Err(Error::NotATopology("the empty set is not open".into()));
        }
        if !family.contains(&Subset::full(n)) {
            return Err(Error::NotATopology("the whole space is not open".into()));
        }
        let list: Vec<&Subset> = family.iter().copied().collect();
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if !family.contains(&a.union(b)) {
                    return Err(Error::NotATopology(format!("{a:?} ∪ {b:?} is not open")));
                }
                if !family.contains(&a.intersection(b)) {
                    return Err(Error::NotATopology(format!("{a:?} ∩ {b:?} is not open")));
                }
            }
        }
        let nbhd: Vec<Subset> = (0..n)
            .map(|x| {
                let mut m = Subset::full(n);
                for u in family.iter().filter(|u| u.contains(x)) {
                    m.intersect_with(u);
                }
                m
            })
            .collect();
        let mut sorted: Vec<Subset> = family.into_iter().cloned().collect();
        sorted.sort();
        let space = FinSpace {
            labels,
            nbhd,
            opens: OnceLock::new(),
        };
        let _ = space.opens.set(Some(sorted));
        Ok(space)
    }

    /// The Alexandroff topology (all upper sets) of a poset.
    pub fn alexandroff(p: &FinPoset) -> Self {
        FinSpace {
            labels: p.labels().to_vec(),
            nbhd: p.up_rows().to_vec(),
            opens: OnceLock::new(),
        }
    }

    /// The discrete space on the poset's points.
    pub fn discrete(labels: Vec<String>) -> Self {
        let n = labels.len();
        FinSpace {
            labels,
            nbhd: (0..n).map(|x| Subset::singleton(n, x)).collect(),
            opens: OnceLock::new(),
        }
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

    /// Least open set containing `x`.
    pub fn nbhd(&self, x: usize) -> &Subset {
        &self.nbhd[x]
    }

    pub fn nbhds(&self) -> &[Subset] {
        &self.nbhd
    }

    pub fn subset_labels(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = Subset::empty(self.len());
        for l in labels {
            let i = self
                .index_of(l.as_ref())
                .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn is_open(&self, u: &Subset) -> bool {
        u.iter().all(|x| self.nbhd[x].is_subset(u))
    }

    pub fn is_closed(&self, c: &Subset) -> bool {
        self.is_open(&c.complement())
    }

    /// Least open set containing `a`; in a finite space this is `⋃ N(x)`.
    pub fn saturation(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.len());
        for x in a {
            out.union_with(&self.nbhd[x]);
        }
        out
    }

    /// Saturated sets are intersections of opens, which here are the opens.
    pub fn is_saturated(&self, a: &Subset) -> bool {
        self.saturation(a) == *a
    }

    pub fn closure(&self, a: &Subset) -> Subset {
        Subset::from_indices(self.len(), (0..self.len()).filter(|&x| self.nbhd[x].intersects(a)))
    }

    /// Largest open set inside `a`.
    pub fn interior(&self, a: &Subset) -> Subset {
        Subset::from_indices(self.len(), a.iter().filter(|&x| self.nbhd[x].is_subset(a)))
    }

    /// Is `x ≤ y` in the specialization order, i.e. `x ∈ cl{y}`?
    pub fn spec_le(&self, x: usize, y: usize) -> bool {
        self.nbhd[x].contains(y)
    }

    /// Two distinct points with the same neighbourhood filter, if any.
    pub fn t0_violation(&self) -> Option<(usize, usize)> {
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                if self.nbhd[x] == self.nbhd[y] {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn check_t0(&self) -> Result<()> {
        match self.t0_violation() {
            Some((x, y)) => Err(Error::NotT0(self.labels[x].clone(), self.labels[y].clone())),
            None => Ok(()),
        }
    }

    /// `↓x` in the specialization order: the closure of `{x}`.
    pub fn point_closure(&self, x: usize) -> Subset {
        self.closure(&Subset::singleton(self.len(), x))
    }

    /// `cl{x}` for every point, computed once.
    pub fn point_closures(&self) -> Vec<Subset> {
        let n = self.len();
        let mut below = vec![Subset::empty(n); n];
        for (x, u) in self.nbhd.iter().enumerate() {
            for y in u {
                below[y].insert(x);
            }
        }
        below
    }

    /// The open family if it fits the enumeration cap.
    pub fn opens(&self) -> Option<&[Subset]> {
        self.opens
            .get_or_init(|| {
                if self.t0_violation().is_some() {
                    return None;
                }
                let mut v = enumerate::up_sets(&self.nbhd, limits::enumeration_cap()).ok()?;
                v.sort();
                Some(v)
            })
            .as_deref()
    }

    pub fn try_opens(&self) -> Result<&[Subset]> {
        self.check_t0()?;
        self.opens().ok_or(Error::SizeTooLarge {
            size: self.len(),
            limit: limits::enumeration_cap(),
        })
    }

    /// Closed sets, as lower sets of the specialization order, up to `cap`.
    pub fn closed_sets(&self, cap: usize) -> Result<Vec<Subset>> {
        self.check_t0()?;
        enumerate::down_sets(&self.point_closures(), cap)
    }

    /// Whether the opens have been materialized (or were given explicitly).
    pub fn opens_known(&self) -> bool {
        matches!(self.opens.get(), Some(Some(_)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sierpinski() -> FinSpace {
        FinSpace::from_opens(
            vec!["0".into(), "1".into()],
            vec![Subset::empty(2), Subset::singleton(2, 1), Subset::full(2)],
        )
        .unwrap()
    }

    #[test]
    fn neighbourhoods_from_opens() {
        let s = sierpinski();
        assert_eq!(s.nbhd(0).to_vec(), vec![0, 1]);
        assert_eq!(s.nbhd(1).to_vec(), vec![1]);
        assert!(s.spec_le(0, 1));
        assert_eq!(s.closure(&Subset::singleton(2, 1)).to_vec(), vec![0, 1]);
    }

    #[test]
    fn invalid_families() {
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let missing_union = vec![
            Subset::empty(3),
            Subset::singleton(3, 0),
            Subset::singleton(3, 1),
            Subset::full(3),
        ];
        assert!(matches!(
            FinSpace::from_opens(labels.clone(), missing_union),
            Err(Error::NotATopology(_))
        ));
        let indiscrete = vec![Subset::empty(3), Subset::full(3)];
        let sp = FinSpace::from_opens(labels, indiscrete).unwrap();
        assert_eq!(sp.check_t0(), Err(Error::NotT0("a".into(), "b".into())));
    }
}
