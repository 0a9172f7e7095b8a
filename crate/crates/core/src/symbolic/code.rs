//! The named countable posets and their element codes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A coordinate in `ℕ ∪ {∞}`, with `ℕ` starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coord {
    Fin(u32),
    Inf,
}

impl Coord {
    pub fn finite(self) -> Option<u32> {
        match self {
            Coord::Fin(n) => Some(n),
            Coord::Inf => None,
        }
    }

    pub fn is_inf(self) -> bool {
        matches!(self, Coord::Inf)
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coord {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coord::Fin(a), Coord::Fin(b)) => a.cmp(b),
            (Coord::Fin(_), Coord::Inf) => Ordering::Less,
            (Coord::Inf, Coord::Fin(_)) => Ordering::Greater,
            (Coord::Inf, Coord::Inf) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Fin(n) => write!(f, "{n}"),
            Coord::Inf => f.write_str("inf"),
        }
    }
}

/// An element of one of the named families.
///
/// `Pair` serves Johnstone's `(j, k)` and the lattice's `(n, m)`; `Triple`
/// serves Jia's `(i, j, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElemCode {
    Bot,
    Pair(u32, Coord),
    Triple(u32, u32, Coord),
    Top,
    X(u32),
    N(u32),
    A(u32),
}

impl ElemCode {
    pub fn pair(j: u32, k: u32) -> Self {
        ElemCode::Pair(j, Coord::Fin(k))
    }

    pub fn pair_inf(j: u32) -> Self {
        ElemCode::Pair(j, Coord::Inf)
    }

    pub fn triple(i: u32, j: u32, k: u32) -> Self {
        ElemCode::Triple(i, j, Coord::Fin(k))
    }

    pub fn triple_inf(i: u32, j: u32) -> Self {
        ElemCode::Triple(i, j, Coord::Inf)
    }

    /// Largest finite coordinate (0 for codes without coordinates).
    pub fn max_finite_coord(&self) -> u32 {
        let c = |c: Coord| c.finite().unwrap_or(0);
        match *self {
            ElemCode::Bot | ElemCode::Top => 0,
            ElemCode::Pair(j, k) => j.max(c(k)),
            ElemCode::Triple(i, j, k) => i.max(j).max(c(k)),
            ElemCode::X(n) | ElemCode::N(n) | ElemCode::A(n) => n,
        }
    }

    /// Whether the last coordinate is `∞`.
    pub fn is_inf(&self) -> bool {
        matches!(self, ElemCode::Pair(_, Coord::Inf) | ElemCode::Triple(_, _, Coord::Inf))
    }
}

impl fmt::Display for ElemCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElemCode::Bot => f.write_str("bot"),
            ElemCode::Top => f.write_str("top"),
            ElemCode::Pair(a, b) => write!(f, "({a},{b})"),
            ElemCode::Triple(a, b, c) => write!(f, "({a},{b},{c})"),
            ElemCode::X(n) => write!(f, "x{n}"),
            ElemCode::N(n) => write!(f, "n{n}"),
            ElemCode::A(n) => write!(f, "a{n}"),
        }
    }
}

fn parse_nat(s: &str) -> Result<u32> {
    let n: u32 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad natural number `{s}`")))?;
    if n == 0 {
        return Err(Error::Parse("natural numbers start at 1".into()));
    }
    Ok(n)
}

fn parse_coord(s: &str) -> Result<Coord> {
    match s.trim() {
        "inf" | "∞" | "infinity" => Ok(Coord::Inf),
        other => parse_nat(other).map(Coord::Fin),
    }
}

impl FromStr for ElemCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "bot" | "⊥" => return Ok(ElemCode::Bot),
            "top" | "⊤" => return Ok(ElemCode::Top),
            _ => {}
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(',').collect();
            return match parts.as_slice() {
                [a, b] => Ok(ElemCode::Pair(parse_nat(a)?, parse_coord(b)?)),
                [a, b, c] => Ok(ElemCode::Triple(parse_nat(a)?, parse_nat(b)?, parse_coord(c)?)),
                _ => Err(Error::Parse(format!("bad tuple `{s}`"))),
            };
        }
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        match head {
            "x" => Ok(ElemCode::X(parse_nat(tail)?)),
            "n" => Ok(ElemCode::N(parse_nat(tail)?)),
            "a" => Ok(ElemCode::A(parse_nat(tail)?)),
            _ => Err(Error::Parse(format!("unknown element code `{s}`"))),
        }
    }
}

impl Serialize for ElemCode {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ElemCode {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The named countable posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AmbientFamily {
    /// `𝕁 = ℕ × (ℕ ∪ {∞})`.
    Johnstone,
    /// `𝕁` plus a discrete set of `x_count` extra points.
    JohnstonePlusX(u32),
    /// `ℒ = ℕ × ℕ × (ℕ ∪ {∞})`.
    Jia,
    /// `L = {⊥} ∪ (ℕ × ℕ) ∪ {⊤}`.
    Lattice428,
    /// The chain `1 < 2 < ...` without top.
    NChain,
    /// `size` pairwise incomparable points.
    FlatAntichain(u32),
}

impl fmt::Display for AmbientFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientFamily::Johnstone => f.write_str("johnstone"),
            AmbientFamily::JohnstonePlusX(n) => write!(f, "johnstone+x:{n}"),
            AmbientFamily::Jia => f.write_str("jia"),
            AmbientFamily::Lattice428 => f.write_str("l428"),
            AmbientFamily::NChain => f.write_str("nchain"),
            AmbientFamily::FlatAntichain(n) => write!(f, "flat:{n}"),
        }
    }
}

impl FromStr for AmbientFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let count = |t: &str| -> Result<u32> {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad family parameter in `{s}`")))
        };
        match s {
            "johnstone" => Ok(AmbientFamily::Johnstone),
            "jia" => Ok(AmbientFamily::Jia),
            "l428" => Ok(AmbientFamily::Lattice428),
            "nchain" => Ok(AmbientFamily::NChain),
            _ => {
                if let Some(t) = s.strip_prefix("johnstone+x:") {
                    Ok(AmbientFamily::JohnstonePlusX(count(t)?))
                } else if let Some(t) = s.strip_prefix("flat:") {
                    Ok(AmbientFamily::FlatAntichain(count(t)?))
                } else {
                    Err(Error::Parse(format!("unknown family `{s}`")))
                }
            }
        }
    }
}

impl Serialize for AmbientFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AmbientFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl AmbientFamily {
    /// Number of coordinates of a generic code.
    pub fn coords(&self) -> u32 {
        match self {
            AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_) => 2,
            AmbientFamily::Jia => 3,
            AmbientFamily::Lattice428 => 2,
            AmbientFamily::NChain | AmbientFamily::FlatAntichain(_) => 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, AmbientFamily::FlatAntichain(_))
    }

    /// Does `e` belong to the family?
    pub fn contains(&self, e: &ElemCode) -> bool {
        match (self, e) {
            (AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_), ElemCode::Pair(_, _)) => true,
            (AmbientFamily::JohnstonePlusX(n), ElemCode::X(i)) => i <= n,
            (AmbientFamily::Jia, ElemCode::Triple(_, _, _)) => true,
            (AmbientFamily::Lattice428, ElemCode::Bot | ElemCode::Top) => true,
            (AmbientFamily::Lattice428, ElemCode::Pair(_, k)) => !k.is_inf(),
            (AmbientFamily::NChain, ElemCode::N(_)) => true,
            (AmbientFamily::FlatAntichain(n), ElemCode::A(i)) => i <= n,
            _ => false,
        }
    }

    pub fn check(&self, e: &ElemCode) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ForeignCode {
                code: e.to_string(),
                family: self.to_string(),
            })
        }
    }

    /// The family's order.
    pub fn leq(&self, a: &ElemCode, b: &ElemCode) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.leq_unchecked(a, b))
    }

    pub(crate) fn leq_unchecked(&self, a: &ElemCode, b: &ElemCode) -> bool {
        use ElemCode::*;
        match self {
            AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_) => match (a, b) {
                // (j,k) ≤ (m,n) iff j = m and k ≤ n, or n = ∞ and k ≤ m
                (Pair(j, k), Pair(m, n)) => (j == m && k <= n) || (n.is_inf() && *k <= Coord::Fin(*m)),
                (X(i), X(l)) => i == l,
                _ => false,
            },
            AmbientFamily::Jia => match (a, b) {
                (Triple(i1, j1, k1), Triple(i2, j2, k2)) => {
                    (i1 == i2 && j1 == j2 && k1 <= k2) || (*i2 == i1 + 1 && *k1 <= Coord::Fin(*j2) && k2.is_inf())
                }
                _ => false,
            },
            AmbientFamily::Lattice428 => match (a, b) {
                (Bot, _) | (_, Top) => true,
                (Pair(n1, m1), Pair(n2, m2)) => n1 == n2 && m1 <= m2,
                _ => false,
            },
            AmbientFamily::NChain => match (a, b) {
                (N(x), N(y)) => x <= y,
                _ => false,
            },
            AmbientFamily::FlatAntichain(_) => a == b,
        }
    }

    pub fn lt(&self, a: &ElemCode, b: &ElemCode) -> Result<bool> {
        Ok(a != b && self.leq(a, b)?)
    }

    /// Parses a code and checks that it belongs to the family.
    pub fn parse_code(&self, s: &str) -> Result<ElemCode> {
        let e: ElemCode = s.parse()?;
        self.check(&e)?;
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn johnstone_order() {
        let j = AmbientFamily::Johnstone;
        assert!(j.leq(&ElemCode::pair(3, 2), &ElemCode::pair_inf(2)).unwrap());
        assert!(j.leq(&ElemCode::pair(4, 7), &ElemCode::pair_inf(4)).unwrap());
        assert!(!j.leq(&ElemCode::pair(3, 3), &ElemCode::pair_inf(2)).unwrap());
        assert!(!j.leq(&ElemCode::pair_inf(1), &ElemCode::pair_inf(2)).unwrap());
    }

    #[test]
    fn lattice_order() {
        let l = AmbientFamily::Lattice428;
        let p = ElemCode::pair(5, 1);
        assert!(l.leq(&ElemCode::Bot, &p).unwrap() && l.leq(&p, &ElemCode::Top).unwrap());
        assert!(matches!(
            l.leq(&ElemCode::pair_inf(1), &p),
            Err(Error::ForeignCode { .. })
        ));
    }

    #[test]
    fn jia_order() {
        let l = AmbientFamily::Jia;
        assert!(l.leq(&ElemCode::triple(1, 1, 1), &ElemCode::triple_inf(2, 1)).unwrap());
        assert!(!l.leq(&ElemCode::triple(1, 1, 2), &ElemCode::triple_inf(2, 1)).unwrap());
        assert!(!l.leq(&ElemCode::triple_inf(1, 1), &ElemCode::triple_inf(2, 5)).unwrap());
    }

    #[test]
    fn text_forms() {
        for s in ["(2,3)", "(1,1,inf)", "bot", "top", "x3", "a2", "n5"] {
            let e: ElemCode = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert!("(0,1)".parse::<ElemCode>().is_err());
        for f in ["johnstone", "johnstone+x:5", "jia", "l428", "nchain", "flat:3"] {
            assert_eq!(f.parse::<AmbientFamily>().unwrap().to_string(), f);
        }
    }
}
