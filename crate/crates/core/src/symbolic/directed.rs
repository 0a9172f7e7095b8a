//! Directed sets, columns and ideal descriptors of the named families.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::code::{AmbientFamily, Coord, ElemCode};
use super::tower::{truncate, truncation_codes, within_depth, Truncation};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A column: the finite part of a non-principal ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnId {
    /// `{n} × ℕ` in `𝕁`, `𝕁 ∪ X` or the lattice.
    Pair(u32),
    /// `{(i,j,l) : l ∈ ℕ}` in `ℒ`.
    Jia(u32, u32),
    /// All of `ℕ`.
    Whole,
}

impl fmt::Display for ColumnId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnId::Pair(n) => write!(f, "Column({n})"),
            ColumnId::Jia(i, j) => write!(f, "Column({i},{j})"),
            ColumnId::Whole => f.write_str("Column(all)"),
        }
    }
}

/// Inverse Cantor pairing along anti-diagonals: 1 ↦ (1,1), 2 ↦ (1,2),
/// 3 ↦ (2,1), 4 ↦ (1,3), ...
pub fn diagonal_pair(n: usize) -> (u32, u32) {
    assert!(n >= 1);
    let mut d = 1usize;
    let mut start = 1usize;
    while start + d <= n {
        start += d;
        d += 1;
    }
    let off = n - start;
    ((off + 1) as u32, (d - off) as u32)
}

/// Position of `(i,j)` in [`diagonal_pair`] order.
pub fn diagonal_index(i: u32, j: u32) -> usize {
    let d = (i + j - 1) as usize;
    d * (d - 1) / 2 + i as usize
}

impl ColumnId {
    /// The `n`-th column of `f` in canonical order, if `f` has that many.
    pub fn nth(f: AmbientFamily, n: usize) -> Option<ColumnId> {
        if n == 0 {
            return None;
        }
        match f {
            AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_) | AmbientFamily::Lattice428 => {
                Some(ColumnId::Pair(n as u32))
            }
            AmbientFamily::Jia => {
                let (i, j) = diagonal_pair(n);
                Some(ColumnId::Jia(i, j))
            }
            AmbientFamily::NChain => (n == 1).then_some(ColumnId::Whole),
            AmbientFamily::FlatAntichain(_) => None,
        }
    }

    pub fn position(&self) -> usize {
        match *self {
            ColumnId::Pair(n) => n as usize,
            ColumnId::Jia(i, j) => diagonal_index(i, j),
            ColumnId::Whole => 1,
        }
    }

    /// The `m`-th column element, `m ≥ 1`.
    pub fn elem(&self, m: u32) -> ElemCode {
        match *self {
            ColumnId::Pair(n) => ElemCode::pair(n, m),
            ColumnId::Jia(i, j) => ElemCode::triple(i, j, m),
            ColumnId::Whole => ElemCode::N(m),
        }
    }

    pub fn contains(&self, e: &ElemCode) -> bool {
        match (*self, *e) {
            (ColumnId::Pair(n), ElemCode::Pair(j, Coord::Fin(_))) => n == j,
            (ColumnId::Jia(a, b), ElemCode::Triple(i, j, Coord::Fin(_))) => a == i && b == j,
            (ColumnId::Whole, ElemCode::N(_)) => true,
            _ => false,
        }
    }

    /// Position of `e` inside the column.
    pub fn height(&self, e: &ElemCode) -> Option<u32> {
        if !self.contains(e) {
            return None;
        }
        match *e {
            ElemCode::Pair(_, Coord::Fin(m)) | ElemCode::Triple(_, _, Coord::Fin(m)) => Some(m),
            ElemCode::N(m) => Some(m),
            _ => None,
        }
    }

    /// Largest coordinate naming the column.
    pub fn bound(&self) -> u32 {
        match *self {
            ColumnId::Pair(n) => n,
            ColumnId::Jia(i, j) => i.max(j),
            ColumnId::Whole => 0,
        }
    }

    /// The ideal generated by the column, in canonical enumeration order.
    /// The lattice's columns start with `⊥`.
    pub fn ideal_elem(&self, f: AmbientFamily, idx: usize) -> ElemCode {
        if f == AmbientFamily::Lattice428 {
            if idx == 1 {
                ElemCode::Bot
            } else {
                self.elem(idx as u32 - 1)
            }
        } else {
            self.elem(idx as u32)
        }
    }

    /// Is `e` in the ideal `↓column`?
    pub fn ideal_contains(&self, f: AmbientFamily, e: &ElemCode) -> bool {
        self.contains(e) || (f == AmbientFamily::Lattice428 && *e == ElemCode::Bot)
    }

    /// The ambient sup of the column, per the family's rule table.
    pub fn sup(&self, f: AmbientFamily) -> Option<ElemCode> {
        match (f, *self) {
            (AmbientFamily::Lattice428, _) => Some(ElemCode::Top),
            (_, ColumnId::Pair(n)) => Some(ElemCode::pair_inf(n)),
            (_, ColumnId::Jia(i, j)) => Some(ElemCode::triple_inf(i, j)),
            (_, ColumnId::Whole) => None,
        }
    }
}

/// The column a finite element belongs to.
pub fn column_of(f: AmbientFamily, e: &ElemCode) -> Option<ColumnId> {
    let c = match (f, *e) {
        (
            AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_) | AmbientFamily::Lattice428,
            ElemCode::Pair(n, Coord::Fin(_)),
        ) => ColumnId::Pair(n),
        (AmbientFamily::Jia, ElemCode::Triple(i, j, Coord::Fin(_))) => ColumnId::Jia(i, j),
        (AmbientFamily::NChain, ElemCode::N(_)) => ColumnId::Whole,
        _ => return None,
    };
    Some(c)
}

/// Columns of `f` whose naming coordinates are at most `k`.
pub fn columns_within(f: AmbientFamily, k: u32) -> Vec<ColumnId> {
    match f {
        AmbientFamily::Johnstone | AmbientFamily::JohnstonePlusX(_) | AmbientFamily::Lattice428 => {
            (1..=k).map(ColumnId::Pair).collect()
        }
        AmbientFamily::Jia => {
            let mut out: Vec<ColumnId> = (1..=k)
                .flat_map(|i| (1..=k).map(move |j| ColumnId::Jia(i, j)))
                .collect();
            out.sort_by_key(ColumnId::position);
            out
        }
        AmbientFamily::NChain => vec![ColumnId::Whole],
        AmbientFamily::FlatAntichain(_) => Vec::new(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupResult {
    HasMax(ElemCode),
    AmbientSup(ElemCode),
    NoSup,
}

/// Classifies a directed set given by finitely many generators.
///
/// With `column_cofinal` unset the generators themselves must be directed and
/// the result is their largest element. With it set, the generators are a
/// finite part of a column and stand for a set cofinal in that column; the
/// result is the column's ambient sup. Either answer is cross-checked inside
/// a truncation deep enough to contain the generators.
pub fn classify_directed(f: AmbientFamily, gens: &[ElemCode], column_cofinal: bool) -> Result<SupResult> {
    if gens.is_empty() {
        return Err(Error::NotDirected);
    }
    for g in gens {
        f.check(g)?;
    }
    if column_cofinal {
        let mut column = None;
        for g in gens {
            if f == AmbientFamily::Lattice428 && *g == ElemCode::Bot {
                continue;
            }
            let c = column_of(f, g).ok_or_else(|| Error::HypothesisFailed(format!("{g} lies in no column of {f}")))?;
            if column.is_some_and(|d| d != c) {
                return Err(Error::NotDirected);
            }
            column = Some(c);
        }
        let column = column.ok_or(Error::NotDirected)?;
        let depth = gens.iter().map(ElemCode::max_finite_coord).max().unwrap_or(1).max(1);
        let result = match column.sup(f) {
            Some(s) => SupResult::AmbientSup(s),
            None => SupResult::NoSup,
        };
        let escaped = escape_bounds(f, column, depth)?;
        match result {
            SupResult::AmbientSup(s) => assert_eq!(escaped, vec![s], "column sup oracle"),
            _ => assert!(escaped.is_empty(), "column without sup has no bounds"),
        }
        return Ok(result);
    }
    // directed as given: every pair has an upper bound among the generators
    for a in gens {
        for b in gens {
            if !gens.iter().any(|c| f.leq_unchecked(a, c) && f.leq_unchecked(b, c)) {
                return Err(Error::NotDirected);
            }
        }
    }
    let max = *gens
        .iter()
        .find(|m| gens.iter().all(|g| f.leq_unchecked(g, m)))
        .expect("finite directed sets have a largest element");
    let depth = gens.iter().map(ElemCode::max_finite_coord).max().unwrap_or(1).max(1);
    let t = truncate(f, depth + 1)?;
    let s = t.subset_of(gens);
    assert_eq!(t.poset().lub(&s).map(|i| t.code(i)), Some(max), "sup oracle");
    Ok(SupResult::HasMax(max))
}

/// Upper bounds, inside the truncation at `depth`, of the column prefix of
/// length `depth + 1`. The last prefix element escapes the truncation, so
/// only bounds of the whole column survive.
pub fn escape_bounds(f: AmbientFamily, column: ColumnId, depth: u32) -> Result<Vec<ElemCode>> {
    let prefix: Vec<ElemCode> = (1..=depth + 1).map(|m| column.elem(m)).collect();
    Ok(truncation_codes(f, depth.max(column.bound()))
        .into_iter()
        .filter(|u| prefix.iter().all(|p| f.leq_unchecked(p, u)))
        .collect())
}

/// A symbolic ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolicIdeal {
    Principal(ElemCode),
    NonPrincipal(ColumnId),
}

impl fmt::Display for SymbolicIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicIdeal::Principal(e) => write!(f, "↓{e}"),
            SymbolicIdeal::NonPrincipal(c) => write!(f, "↓{c}"),
        }
    }
}

impl SymbolicIdeal {
    /// The ideal's trace on a truncation.
    pub fn trace(&self, t: &Truncation) -> Subset {
        let f = t.family;
        match self {
            SymbolicIdeal::Principal(e) => t.filter(|x| f.leq_unchecked(x, e)),
            SymbolicIdeal::NonPrincipal(c) => t.filter(|x| c.ideal_contains(f, x)),
        }
    }
}

/// Lazily enumerates the ideals of a family: shell by shell, the elements
/// that first appear at depth `d` followed by the `d`-th column.
pub struct DescriptorStream {
    family: AmbientFamily,
    depth: u32,
    pending: std::vec::IntoIter<SymbolicIdeal>,
    done: bool,
}

pub fn enumerate_ideal_descriptors(f: AmbientFamily) -> Result<DescriptorStream> {
    Ok(DescriptorStream {
        family: f,
        depth: 0,
        pending: Vec::new().into_iter(),
        done: false,
    })
}

impl Iterator for DescriptorStream {
    type Item = SymbolicIdeal;

    fn next(&mut self) -> Option<SymbolicIdeal> {
        loop {
            if let Some(d) = self.pending.next() {
                return Some(d);
            }
            if self.done {
                return None;
            }
            self.depth += 1;
            let f = self.family;
            let k = self.depth;
            let mut shell: Vec<SymbolicIdeal> = truncation_codes(f, k)
                .into_iter()
                .filter(|e| k == 1 || !within_depth(f, e, k - 1))
                .map(SymbolicIdeal::Principal)
                .collect();
            let mut cols: Vec<ColumnId> = columns_within(f, k)
                .into_iter()
                .filter(|c| k == 1 || c.bound() == k)
                .collect();
            if f == AmbientFamily::NChain && k > 1 {
                cols.clear();
            }
            shell.extend(cols.into_iter().map(SymbolicIdeal::NonPrincipal));
            if f.is_finite() {
                self.done = true;
            }
            self.pending = shell.into_iter();
        }
    }
}

/// How directed subsets were produced for the completeness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CompletenessMode {
    /// Every subset of the truncation was tested.
    Exhaustive,
    /// Every subset of each `↓m` containing `m`.
    ByMax,
    /// Random subsets.
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessReport {
    pub family: AmbientFamily,
    pub depth: u32,
    pub mode: CompletenessMode,
    pub directed_tested: usize,
    pub descriptors: usize,
    pub holds: bool,
    pub failure: Option<String>,
}

/// Validates the descriptor list at depth `k`.
///
/// Every directed subset `D` of the truncation must either have a maximum,
/// with `↓D` equal to the trace of exactly one principal descriptor, or be
/// cofinal in the trace of exactly one column. Each column descriptor must
/// also be non-principal in the ambient poset: its prefix escaping the
/// truncation has no finite upper bound there, only the column's sup.
pub fn descriptor_completeness(
    f: AmbientFamily,
    k: u32,
    samples: usize,
    rng: &mut impl Rng,
) -> Result<CompletenessReport> {
    let t = truncate(f, k)?;
    let p = t.poset();
    let n = t.len();
    let descs: Vec<SymbolicIdeal> = {
        let mut out: Vec<SymbolicIdeal> = t.codes().iter().map(|e| SymbolicIdeal::Principal(*e)).collect();
        out.extend(columns_within(f, k).into_iter().map(SymbolicIdeal::NonPrincipal));
        out
    };
    let principal_traces: Vec<Subset> = descs
        .iter()
        .filter(|d| matches!(d, SymbolicIdeal::Principal(_)))
        .map(|d| d.trace(&t))
        .collect();
    let column_traces: Vec<Subset> = descs
        .iter()
        .filter(|d| matches!(d, SymbolicIdeal::NonPrincipal(_)))
        .map(|d| d.trace(&t))
        .collect();
    let mut failure = None;
    let mut tested = 0usize;
    let mut test = |d: &Subset, failure: &mut Option<String>| {
        if !p.is_directed(d) {
            return;
        }
        tested += 1;
        let low = p.down_closure(d);
        let ok = if p.max_of(d).is_some() {
            principal_traces.iter().filter(|t| **t == low).count() == 1
        } else {
            column_traces
                .iter()
                .filter(|c| d.is_subset(c) && c.is_subset(&low))
                .count()
                == 1
        };
        if !ok && failure.is_none() {
            *failure = Some(format!("directed set {:?}", p.subset_labels(d)));
        }
    };
    let mode = if n <= 16 {
        for m in 0..(1u64 << n) {
            test(&Subset::from_mask(n, m), &mut failure);
        }
        CompletenessMode::Exhaustive
    } else if samples == 0 && (0..n).all(|m| p.down(m).count() <= 16) {
        for m in 0..n {
            let below: Vec<usize> = p.down(m).iter().filter(|&x| x != m).collect();
            for mask in 0..(1u64 << below.len()) {
                let mut d = Subset::singleton(n, m);
                for (b, &x) in below.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        d.insert(x);
                    }
                }
                test(&d, &mut failure);
            }
        }
        CompletenessMode::ByMax
    } else {
        for _ in 0..samples {
            let m = rng.gen_range(0..n);
            let mut d = Subset::singleton(n, m);
            for x in p.down(m).iter() {
                if rng.gen_bool(0.5) {
                    d.insert(x);
                }
            }
            test(&d, &mut failure);
        }
        CompletenessMode::Sampled
    };
    for d in &descs {
        if let SymbolicIdeal::NonPrincipal(c) = d {
            let bounds = escape_bounds(f, *c, k)?;
            let expected: Vec<ElemCode> = c.sup(f).into_iter().collect();
            if bounds != expected && failure.is_none() {
                failure = Some(format!("{c} has finite upper bounds {bounds:?}"));
            }
        }
    }
    // distinct principal descriptors have distinct traces
    for (i, a) in principal_traces.iter().enumerate() {
        if principal_traces[..i].contains(a) && failure.is_none() {
            failure = Some(format!("duplicate trace for {}", t.code(i)));
        }
    }
    Ok(CompletenessReport {
        family: f,
        depth: k,
        mode,
        directed_tested: tested,
        descriptors: descs.len(),
        holds: failure.is_none(),
        failure,
    })
}
