//! Extracting a cofinal chain from an enumerated directed set.

use std::sync::Arc;

use super::code::{AmbientFamily, ElemCode};
use crate::error::{Error, Result};

/// An enumeration `d_1, d_2, ...` of a directed set.
#[derive(Clone)]
pub enum Enumeration {
    Finite(Vec<ElemCode>),
    /// `d_i` for `i ≥ 1`.
    Stream(Arc<dyn Fn(usize) -> ElemCode + Send + Sync>),
}

impl std::fmt::Debug for Enumeration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Enumeration::Finite(v) => f.debug_tuple("Finite").field(v).finish(),
            Enumeration::Stream(_) => f.write_str("Stream(..)"),
        }
    }
}

impl Enumeration {
    pub fn stream(g: impl Fn(usize) -> ElemCode + Send + Sync + 'static) -> Self {
        Enumeration::Stream(Arc::new(g))
    }

    /// `d_i`, or none past the end of a finite enumeration.
    pub fn get(&self, i: usize) -> Option<ElemCode> {
        match self {
            Enumeration::Finite(v) => v.get(i - 1).copied(),
            Enumeration::Stream(g) => Some(g(i)),
        }
    }

    fn bound(&self, budget: usize) -> usize {
        match self {
            Enumeration::Finite(v) => v.len(),
            Enumeration::Stream(_) => budget,
        }
    }
}

/// Default number of enumeration entries searched by the upper-bound oracle.
pub const DEFAULT_BUDGET: usize = 4096;

/// Emits `c_1 ≤ c_2 ≤ ...` in `D` with `c_n` above `d_1, ..., d_n`.
///
/// A finite enumeration yields its largest element once. For an infinite one,
/// `c_1 = d_1` and `c_{n+1}` is the first enumerated upper bound of
/// `{d_{n+1}, c_n}`. With `no_max` set, the step also folds in the first
/// `d_m ≰ c_n`, which makes the chain strictly ascending.
pub struct ChainStream {
    family: AmbientFamily,
    enumeration: Enumeration,
    no_max: bool,
    budget: usize,
    step: usize,
    current: Option<ElemCode>,
    finished: bool,
}

pub fn extract_chain(f: AmbientFamily, enumeration: Enumeration, no_max: bool) -> Result<ChainStream> {
    extract_chain_with_budget(f, enumeration, no_max, DEFAULT_BUDGET)
}

pub fn extract_chain_with_budget(
    f: AmbientFamily,
    enumeration: Enumeration,
    no_max: bool,
    budget: usize,
) -> Result<ChainStream> {
    match &enumeration {
        Enumeration::Finite(v) => {
            if v.is_empty() {
                return Err(Error::EmptySet);
            }
            if no_max {
                return Err(Error::HypothesisFailed(
                    "a finite directed set has a largest element".into(),
                ));
            }
            v.iter().try_for_each(|e| f.check(e))?;
        }
        Enumeration::Stream(g) => f.check(&g(1))?,
    }
    Ok(ChainStream {
        family: f,
        enumeration,
        no_max,
        budget,
        step: 0,
        current: None,
        finished: false,
    })
}

impl ChainStream {
    /// First enumerated element above all of `s`.
    fn upper_bound(&self, s: &[ElemCode]) -> Result<ElemCode> {
        let f = self.family;
        for i in 1..=self.enumeration.bound(self.budget) {
            let d = self.enumeration.get(i).expect("index within bound");
            f.check(&d)?;
            if s.iter().all(|x| f.leq_unchecked(x, &d)) {
                return Ok(d);
            }
        }
        match self.enumeration {
            Enumeration::Finite(_) => Err(Error::NotDirectedPrefix(self.step + 1)),
            Enumeration::Stream(_) => Err(Error::NoUpperBoundFound(self.budget)),
        }
    }

    fn escape(&self, c: &ElemCode) -> Result<ElemCode> {
        for i in 1..=self.budget {
            let d = self.enumeration.get(i).expect("streams are infinite");
            if !self.family.leq_unchecked(&d, c) {
                return Ok(d);
            }
        }
        Err(Error::HypothesisFailed(format!(
            "no element among the first {} escapes {c}; the set may have a largest element",
            self.budget
        )))
    }

    fn advance(&mut self) -> Result<Option<ElemCode>> {
        if self.finished {
            return Ok(None);
        }
        if let Enumeration::Finite(v) = &self.enumeration {
            let max = self.upper_bound(&v.clone())?;
            self.finished = true;
            return Ok(Some(max));
        }
        self.step += 1;
        let d = self.enumeration.get(self.step).expect("streams are infinite");
        let next = match self.current {
            None => d,
            Some(c) => {
                let mut need = vec![d, c];
                if self.no_max {
                    need.push(self.escape(&c)?);
                }
                self.upper_bound(&need)?
            }
        };
        self.current = Some(next);
        Ok(Some(next))
    }
}

impl Iterator for ChainStream {
    type Item = Result<ElemCode>;

    fn next(&mut self) -> Option<Result<ElemCode>> {
        match self.advance() {
            Ok(Some(e)) => Some(Ok(e)),
            Ok(None) => None,
            Err(e) => {
                self.finished = true;
                Some(Err(e))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column4() -> Enumeration {
        // (4,2),(4,1),(4,3),(4,5),(4,4),(4,6),...
        Enumeration::stream(|i| {
            let m = match i {
                1 => 2,
                2 => 1,
                i if i % 2 == 0 => i + 1,
                i => i - 1,
            };
            ElemCode::pair(4, m as u32)
        })
    }

    #[test]
    fn finite_sets_give_their_max() {
        let e = Enumeration::Finite(vec![ElemCode::pair(2, 1), ElemCode::pair(2, 3), ElemCode::pair(2, 2)]);
        let c: Vec<ElemCode> = extract_chain(AmbientFamily::Johnstone, e, false)
            .unwrap()
            .map(Result::unwrap)
            .collect();
        assert_eq!(c, vec![ElemCode::pair(2, 3)]);
        let bad = Enumeration::Finite(vec![ElemCode::pair(1, 1), ElemCode::pair(2, 1)]);
        let r: Vec<_> = extract_chain(AmbientFamily::Johnstone, bad, false).unwrap().collect();
        assert_eq!(r, vec![Err(Error::NotDirectedPrefix(1))]);
    }

    #[test]
    fn columns_give_strict_chains_with_certificate() {
        let c: Vec<ElemCode> = extract_chain(AmbientFamily::Johnstone, column4(), true)
            .unwrap()
            .take(6)
            .map(Result::unwrap)
            .collect();
        assert!(c
            .windows(2)
            .all(|w| w[0] != w[1] && AmbientFamily::Johnstone.leq(&w[0], &w[1]).unwrap()));
        let plain: Vec<ElemCode> = extract_chain(AmbientFamily::Johnstone, column4(), false)
            .unwrap()
            .take(3)
            .map(Result::unwrap)
            .collect();
        assert_eq!(plain[0], plain[1]);
    }

    #[test]
    fn identity_chain() {
        let c: Vec<ElemCode> = extract_chain(
            AmbientFamily::NChain,
            Enumeration::stream(|i| ElemCode::N(i as u32)),
            false,
        )
        .unwrap()
        .take(5)
        .map(Result::unwrap)
        .collect();
        assert_eq!(c, (1..=5).map(ElemCode::N).collect::<Vec<_>>());
    }
}
