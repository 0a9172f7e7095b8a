//! Definable subsets of the named families.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::code::{AmbientFamily, Coord, ElemCode};
use crate::error::{Error, Result};

/// Named regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    All,
    /// `𝕁max = {(n,∞)}`.
    JMax,
    /// `ℒ^∞`, the elements `(i,j,∞)`.
    LInfinity,
    /// The extra discrete points of `𝕁 ∪ X`.
    XPoints,
    /// `C_n = {n} × ℕ` in `𝕁` or in the lattice.
    Column(u32),
    /// `{(i,j,l) : l ∈ ℕ}` in `ℒ`.
    JiaColumn(u32, u32),
    /// Elements whose first coordinate is at least the bound.
    FirstAtLeast(u32),
    /// Elements of `ℒ` whose middle coordinate is at least the bound.
    SecondAtLeast(u32),
    /// Elements whose last coordinate is at least the bound (`∞` included).
    LastAtLeast(u32),
}

impl Region {
    fn allowed(&self, f: AmbientFamily) -> bool {
        use AmbientFamily::*;
        match self {
            Region::All => true,
            Region::JMax => matches!(f, Johnstone | JohnstonePlusX(_)),
            Region::XPoints => matches!(f, JohnstonePlusX(_)),
            Region::Column(_) => matches!(f, Johnstone | JohnstonePlusX(_) | Lattice428),
            Region::LInfinity | Region::JiaColumn(..) | Region::SecondAtLeast(_) => f == Jia,
            Region::FirstAtLeast(_) | Region::LastAtLeast(_) => {
                matches!(f, Johnstone | JohnstonePlusX(_) | Jia | Lattice428 | NChain)
            }
        }
    }

    fn contains(&self, e: &ElemCode) -> bool {
        match (self, e) {
            (Region::All, _) => true,
            (Region::JMax, ElemCode::Pair(_, k)) => k.is_inf(),
            (Region::LInfinity, ElemCode::Triple(_, _, k)) => k.is_inf(),
            (Region::XPoints, ElemCode::X(_)) => true,
            (Region::Column(n), ElemCode::Pair(j, k)) => j == n && !k.is_inf(),
            (Region::JiaColumn(a, b), ElemCode::Triple(i, j, k)) => i == a && j == b && !k.is_inf(),
            (Region::FirstAtLeast(b), ElemCode::Pair(j, _) | ElemCode::Triple(j, _, _)) => j >= b,
            (Region::FirstAtLeast(b), ElemCode::N(n)) => n >= b,
            (Region::SecondAtLeast(b), ElemCode::Triple(_, j, _)) => j >= b,
            (Region::LastAtLeast(b), ElemCode::Pair(_, k) | ElemCode::Triple(_, _, k)) => *k >= Coord::Fin(*b),
            (Region::LastAtLeast(b), ElemCode::N(n)) => n >= b,
            _ => false,
        }
    }

    fn bound(&self) -> u32 {
        match *self {
            Region::Column(n) | Region::FirstAtLeast(n) | Region::SecondAtLeast(n) | Region::LastAtLeast(n) => n,
            Region::JiaColumn(a, b) => a.max(b),
            _ => 0,
        }
    }
}

/// An expression over up-sets, down-sets, regions and finite sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DefinableSet {
    Up(ElemCode),
    Down(ElemCode),
    Region(Region),
    Finite(Vec<ElemCode>),
    Union(Vec<DefinableSet>),
    Intersection(Vec<DefinableSet>),
    Complement(Box<DefinableSet>),
}

impl DefinableSet {
    pub fn full() -> Self {
        DefinableSet::Region(Region::All)
    }

    pub fn empty() -> Self {
        DefinableSet::Finite(Vec::new())
    }

    pub fn up_of(codes: impl IntoIterator<Item = ElemCode>) -> Self {
        DefinableSet::Union(codes.into_iter().map(DefinableSet::Up).collect())
    }

    pub fn down_of(codes: impl IntoIterator<Item = ElemCode>) -> Self {
        DefinableSet::Union(codes.into_iter().map(DefinableSet::Down).collect())
    }

    pub fn complement(self) -> Self {
        DefinableSet::Complement(Box::new(self))
    }

    pub fn minus(self, other: DefinableSet) -> Self {
        DefinableSet::Intersection(vec![self, other.complement()])
    }

    /// Checks that every code and region belongs to `f`.
    pub fn validate(&self, f: AmbientFamily) -> Result<()> {
        match self {
            DefinableSet::Up(e) | DefinableSet::Down(e) => f.check(e),
            DefinableSet::Region(r) => {
                if r.allowed(f) {
                    Ok(())
                } else {
                    Err(Error::ForeignCode {
                        code: format!("{r:?}"),
                        family: f.to_string(),
                    })
                }
            }
            DefinableSet::Finite(es) => es.iter().try_for_each(|e| f.check(e)),
            DefinableSet::Union(ss) | DefinableSet::Intersection(ss) => ss.iter().try_for_each(|s| s.validate(f)),
            DefinableSet::Complement(s) => s.validate(f),
        }
    }

    /// Membership of `e`, assuming both are already validated.
    pub(crate) fn contains(&self, f: AmbientFamily, e: &ElemCode) -> bool {
        match self {
            DefinableSet::Up(a) => f.leq_unchecked(a, e),
            DefinableSet::Down(a) => f.leq_unchecked(e, a),
            DefinableSet::Region(r) => r.contains(e),
            DefinableSet::Finite(es) => es.contains(e),
            DefinableSet::Union(ss) => ss.iter().any(|s| s.contains(f, e)),
            DefinableSet::Intersection(ss) => ss.iter().all(|s| s.contains(f, e)),
            DefinableSet::Complement(s) => !s.contains(f, e),
        }
    }

    /// Largest natural-number constant mentioned in the expression. Beyond
    /// this bound, membership depends only on how coordinates compare with
    /// each other and with these constants.
    pub fn support_bound(&self) -> u32 {
        match self {
            DefinableSet::Up(e) | DefinableSet::Down(e) => e.max_finite_coord(),
            DefinableSet::Region(r) => r.bound(),
            DefinableSet::Finite(es) => es.iter().map(ElemCode::max_finite_coord).max().unwrap_or(0),
            DefinableSet::Union(ss) | DefinableSet::Intersection(ss) => {
                ss.iter().map(DefinableSet::support_bound).max().unwrap_or(0)
            }
            DefinableSet::Complement(s) => s.support_bound(),
        }
    }
}

/// Pointwise membership.
pub fn member(f: AmbientFamily, s: &DefinableSet, e: &ElemCode) -> Result<bool> {
    s.validate(f)?;
    f.check(e)?;
    Ok(s.contains(f, e))
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::All => f.write_str("all"),
            Region::JMax => f.write_str("jmax"),
            Region::LInfinity => f.write_str("linf"),
            Region::XPoints => f.write_str("X"),
            Region::Column(n) => write!(f, "C{n}"),
            Region::JiaColumn(i, j) => write!(f, "C({i},{j})"),
            Region::FirstAtLeast(n) => write!(f, "first>={n}"),
            Region::SecondAtLeast(n) => write!(f, "second>={n}"),
            Region::LastAtLeast(n) => write!(f, "last>={n}"),
        }
    }
}

impl fmt::Display for DefinableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, ss: &[DefinableSet], op: &str| {
            if ss.is_empty() {
                return f.write_str(if op == " ∪ " { "∅" } else { "all" });
            }
            f.write_str("(")?;
            for (i, s) in ss.iter().enumerate() {
                if i > 0 {
                    f.write_str(op)?;
                }
                write!(f, "{s}")?;
            }
            f.write_str(")")
        };
        match self {
            DefinableSet::Up(e) => write!(f, "↑{e}"),
            DefinableSet::Down(e) => write!(f, "↓{e}"),
            DefinableSet::Region(r) => write!(f, "{r}"),
            DefinableSet::Finite(es) => {
                let items: Vec<String> = es.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            DefinableSet::Union(ss) => join(f, ss, " ∪ "),
            DefinableSet::Intersection(ss) => join(f, ss, " ∩ "),
            DefinableSet::Complement(s) => write!(f, "¬{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let j = AmbientFamily::Johnstone;
        let jmax = DefinableSet::Region(Region::JMax);
        assert!(member(j, &jmax, &ElemCode::pair_inf(3)).unwrap());
        let up = DefinableSet::Up(ElemCode::pair(2, 2));
        assert!(member(j, &up, &ElemCode::pair_inf(5)).unwrap());
        let none = DefinableSet::full().complement();
        assert!(!member(j, &none, &ElemCode::pair(1, 1)).unwrap());
        assert!(member(j, &DefinableSet::Region(Region::LInfinity), &ElemCode::pair(1, 1)).is_err());
        assert!(member(j, &up, &ElemCode::triple(1, 1, 1)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = DefinableSet::full().minus(DefinableSet::Down(ElemCode::pair_inf(1)));
        let text = serde_json::to_string(&s).unwrap();
        let back: DefinableSet = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(s.support_bound(), 1);
    }
}
