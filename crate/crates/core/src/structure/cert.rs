//! Certificates for the chain decomposition of a countable poset.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Bounds, Verdict, Witness};
use crate::subset::Subset;
use crate::symbolic::{
    classify_directed, columns_within, member, truncate, AmbientFamily, ColumnId, DefinableSet, ElemCode, SupResult,
    SymbolicIdeal, Truncation,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ChainRule {
    /// Chain `n` is the `n`-th column of the family, in canonical order.
    #[default]
    Columns,
    /// Only the explicit prefixes are defined.
    Explicit,
}

/// The chains `c_(n,m)`: a rule plus explicit prefixes that take precedence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct ChainSpec {
    #[serde(default)]
    pub rule: ChainRule,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub prefixes: BTreeMap<usize, Vec<ElemCode>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupFlag {
    SupExists(ElemCode),
    NoSup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupRule {
    /// The sup of the chain's column, per the family's rule table.
    ColumnTop,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupSpec {
    Rule(SupRule),
    List(Vec<SupFlag>),
}

impl Default for SupSpec {
    fn default() -> Self {
        SupSpec::Rule(SupRule::ColumnTop)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CPosetCert {
    pub family: AmbientFamily,
    #[serde(default)]
    pub chains: ChainSpec,
    #[serde(default)]
    pub sups: SupSpec,
    /// `T_1, T_2, ...`; later parts are empty.
    #[serde(default)]
    pub t_parts: Vec<DefinableSet>,
}

/// Number of chain elements examined at depth `k`.
pub fn chain_horizon(k: u32) -> u32 {
    2 * k + 2
}

impl CPosetCert {
    /// The certificate with column chains, column sups and the given `T` parts.
    pub fn columns(family: AmbientFamily, t_parts: Vec<DefinableSet>) -> Self {
        CPosetCert {
            family,
            chains: ChainSpec::default(),
            sups: SupSpec::default(),
            t_parts,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cert: CPosetCert = serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))?;
        cert.validate()?;
        Ok(cert)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    /// Checks that every code belongs to the family.
    pub fn validate(&self) -> Result<()> {
        let f = self.family;
        for p in self.chains.prefixes.values() {
            p.iter().try_for_each(|e| f.check(e))?;
        }
        if let SupSpec::List(l) = &self.sups {
            for s in l {
                if let SupFlag::SupExists(e) = s {
                    f.check(e)?;
                }
            }
        }
        self.t_parts.iter().try_for_each(|t| t.validate(f))
    }

    fn rule_column(&self, n: usize) -> Option<ColumnId> {
        match self.chains.rule {
            ChainRule::Columns => ColumnId::nth(self.family, n),
            ChainRule::Explicit => None,
        }
    }

    /// `c_(n,m)`, if defined.
    pub fn chain_elem(&self, n: usize, m: u32) -> Option<ElemCode> {
        if n == 0 || m == 0 {
            return None;
        }
        if let Some(p) = self.chains.prefixes.get(&n) {
            if let Some(e) = p.get(m as usize - 1) {
                return Some(*e);
            }
        }
        self.rule_column(n).map(|c| c.elem(m))
    }

    /// Whether chain `n` exists.
    pub fn has_chain(&self, n: usize) -> bool {
        self.chain_elem(n, 1).is_some()
    }

    /// Is `e` on chain `n`?
    pub fn chain_contains(&self, n: usize, e: &ElemCode) -> bool {
        let prefix = self.chains.prefixes.get(&n);
        if let Some(p) = prefix {
            if p.contains(e) {
                return true;
            }
        }
        match self.rule_column(n) {
            Some(c) => {
                let from = prefix.map_or(1, |p| p.len() as u32 + 1);
                c.height(e).is_some_and(|h| h >= from)
            }
            None => false,
        }
    }

    /// The declared sup of chain `n`.
    pub fn sup(&self, n: usize) -> Option<SupFlag> {
        if !self.has_chain(n) {
            return None;
        }
        match &self.sups {
            SupSpec::Rule(SupRule::ColumnTop) => {
                let c = self.rule_column(n).or_else(|| {
                    self.chain_elem(n, 1)
                        .and_then(|e| crate::symbolic::column_of(self.family, &e))
                })?;
                Some(match c.sup(self.family) {
                    Some(e) => SupFlag::SupExists(e),
                    None => SupFlag::NoSup,
                })
            }
            SupSpec::List(l) => l.get(n - 1).copied(),
        }
    }

    /// Chains with an element at depth `k`.
    pub fn chain_count(&self, k: u32) -> usize {
        let by_rule = match self.chains.rule {
            ChainRule::Columns => columns_within(self.family, k)
                .iter()
                .map(ColumnId::position)
                .max()
                .unwrap_or(0),
            ChainRule::Explicit => 0,
        };
        by_rule.max(self.chains.prefixes.keys().copied().max().unwrap_or(0))
    }

    /// Is `e` in `H_n`?
    pub fn in_h(&self, n: usize, e: &ElemCode) -> bool {
        self.chain_contains(n, e) || self.sup(n) == Some(SupFlag::SupExists(*e))
    }

    /// Is `e` in `T_l`?
    pub fn in_t(&self, l: usize, e: &ElemCode) -> bool {
        l >= 1 && self.t_parts.get(l - 1).is_some_and(|t| t.contains(self.family, e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub family: AmbientFamily,
    pub conditions: Vec<Verdict>,
    pub bounds: Bounds,
    pub passed: bool,
}

impl CertReport {
    pub fn condition(&self, name: &str) -> Option<&Verdict> {
        self.conditions.iter().find(|v| v.property == name)
    }
}

fn chain_trace(cert: &CPosetCert, t: &Truncation, n: usize, horizon: u32) -> Subset {
    let f = cert.family;
    let elems: Vec<ElemCode> = (1..=horizon).filter_map(|m| cert.chain_elem(n, m)).collect();
    t.filter(|x| elems.iter().any(|c| f.leq_unchecked(x, c)))
}

/// Checks conditions (i) to (iii) at depth `k`, for chains up to the number
/// present at that depth and at least `n_max`.
pub fn verify_cposet(cert: &CPosetCert, k: u32, n_max: usize) -> Result<CertReport> {
    cert.validate()?;
    let f = cert.family;
    let t = truncate(f, k)?;
    let horizon = chain_horizon(k);
    let chains = cert.chain_count(k).max(n_max);
    let chains: Vec<usize> = (1..=chains).filter(|&n| cert.has_chain(n)).collect();
    let traces: Vec<(usize, Subset)> = chains.iter().map(|&n| (n, chain_trace(cert, &t, n, horizon))).collect();
    let bounds = Bounds {
        depth: Some(k as usize),
        n_max: Some(n_max),
        subfamily: None,
    };

    // (i) every non-principal ideal is ↓C_n for exactly one n, and every chain
    // generates a non-principal ideal
    let mut cond_i = Verdict::pass("(i) non-principal ideals are the chain ideals");
    for c in columns_within(f, k) {
        let target = SymbolicIdeal::NonPrincipal(c).trace(&t);
        let hits: Vec<usize> = traces.iter().filter(|(_, s)| *s == target).map(|(n, _)| *n).collect();
        if hits.len() != 1 {
            cond_i = Verdict::fail(cond_i.property, Witness::Note(c.to_string()))
                .with_detail(format!("{c} matches chains {hits:?}"));
            break;
        }
    }
    if cond_i.holds {
        let columns: Vec<Subset> = columns_within(f, k)
            .into_iter()
            .map(|c| SymbolicIdeal::NonPrincipal(c).trace(&t))
            .collect();
        if let Some((n, _)) = traces.iter().find(|(_, s)| !s.is_empty() && !columns.contains(s)) {
            cond_i = Verdict::fail(cond_i.property, Witness::Index(*n))
                .with_detail(format!("chain {n} generates no column ideal"));
        }
    }

    // (ii) strict ascent
    let mut cond_ii = Verdict::pass("(ii) chains strictly ascend");
    'outer: for &n in &chains {
        for m in 1..horizon {
            let (Some(a), Some(b)) = (cert.chain_elem(n, m), cert.chain_elem(n, m + 1)) else {
                cond_ii = Verdict::fail(cond_ii.property, Witness::Index(n))
                    .with_detail(format!("chain {n} stops at m = {m}"));
                break 'outer;
            };
            if a == b || !f.leq_unchecked(&a, &b) {
                cond_ii = Verdict::fail(cond_ii.property, Witness::Index(n))
                    .with_detail(format!("c_({n},{m}) = {a} is not below c_({n},{}) = {b}", m + 1));
                break 'outer;
            }
        }
    }

    // declared sups against the ambient sup of each chain
    let mut cond_sup = Verdict::pass("sup flags match the chains");
    for &n in &chains {
        let prefix: Vec<ElemCode> = (1..=horizon).filter_map(|m| cert.chain_elem(n, m)).collect();
        let actual = match classify_directed(f, &prefix, true) {
            Ok(SupResult::AmbientSup(e)) => Some(SupFlag::SupExists(e)),
            Ok(_) => Some(SupFlag::NoSup),
            Err(_) => None,
        };
        if actual.is_none() || actual != cert.sup(n) {
            cond_sup = Verdict::fail(cond_sup.property, Witness::Index(n))
                .with_detail(format!("declared {:?}, computed {actual:?}", cert.sup(n)));
            break;
        }
    }

    // (iii) P ∖ ⋃H_n = ⋃T_n, and each T_l has only principal ideals
    let mut cond_iii = Verdict::pass("(iii) the T parts cover the rest and have principal ideals only");
    for e in t.codes() {
        let in_h = chains.iter().any(|&n| cert.in_h(n, e));
        let in_t = (1..=cert.t_parts.len()).any(|l| cert.in_t(l, e));
        if in_h == in_t {
            let why = if in_h {
                "lies in some H_n and some T_l"
            } else {
                "lies in no H_n and no T_l"
            };
            cond_iii =
                Verdict::fail(cond_iii.property, Witness::Set(vec![e.to_string()])).with_detail(format!("{e} {why}"));
            break;
        }
    }
    if cond_iii.holds {
        for (l, part) in cert.t_parts.iter().enumerate() {
            if let Some(why) = non_principal_in(f, part, &t)? {
                cond_iii = Verdict::fail(cond_iii.property, Witness::Index(l + 1)).with_detail(why);
                break;
            }
        }
    }

    let conditions: Vec<Verdict> = [cond_i, cond_ii, cond_sup, cond_iii]
        .into_iter()
        .map(|v| v.with_bounds(bounds))
        .collect();
    let passed = conditions.iter().all(|v| v.holds);
    Ok(CertReport {
        family: f,
        conditions,
        bounds,
        passed,
    })
}

/// Looks for a directed subset of `part` without a largest element: a
/// column tail inside `part`, or, on small traces, any directed subset
/// without a maximum.
pub(crate) fn non_principal_in(f: AmbientFamily, part: &DefinableSet, t: &Truncation) -> Result<Option<String>> {
    let b = part.support_bound();
    for c in columns_within(f, b + 2) {
        let h = b.max(c.bound()) + 2;
        if member(f, part, &c.elem(h))? && member(f, part, &c.elem(h + 1))? {
            return Ok(Some(format!("a tail of {c} lies in the part")));
        }
    }
    let trace = t.filter(|e| part.contains(f, e)).to_vec();
    if trace.len() <= 16 {
        let p = t.poset();
        for mask in 1u64..1 << trace.len() {
            let d = Subset::from_indices(t.len(), crate::subset::mask_bits(mask).map(|i| trace[i]));
            if p.is_directed(&d) && p.max_of(&d).is_none() {
                return Ok(Some(format!("directed {:?} has no maximum", p.subset_labels(&d))));
            }
        }
    }
    Ok(None)
}

/// A certificate that passed [`verify_cposet`] at a recorded depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifiedCert {
    cert: CPosetCert,
    depth: u32,
    report: CertReport,
}

impl VerifiedCert {
    pub fn new(cert: CPosetCert, depth: u32, n_max: usize) -> Result<Self> {
        let report = verify_cposet(&cert, depth, n_max)?;
        if !report.passed {
            let failed: Vec<String> = report
                .conditions
                .iter()
                .filter(|v| !v.holds)
                .map(|v| format!("{}: {}", v.property, v.detail.clone().unwrap_or_default()))
                .collect();
            return Err(Error::UnverifiedCert(failed.join("; ")));
        }
        Ok(VerifiedCert { cert, depth, report })
    }

    pub fn cert(&self) -> &CPosetCert {
        &self.cert
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn report(&self) -> &CertReport {
        &self.report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Region;

    #[test]
    fn johnstone_certificates() {
        let j = CPosetCert::columns(AmbientFamily::Johnstone, vec![]);
        let r = verify_cposet(&j, 6, 5).unwrap();
        assert!(r.passed, "{r:?}");
        let jx = CPosetCert::columns(
            AmbientFamily::JohnstonePlusX(5),
            vec![DefinableSet::Region(Region::XPoints)],
        );
        assert!(verify_cposet(&jx, 6, 5).unwrap().passed);
        let missing = CPosetCert::columns(AmbientFamily::JohnstonePlusX(5), vec![]);
        let r = verify_cposet(&missing, 4, 5).unwrap();
        assert!(
            !r.condition("(iii) the T parts cover the rest and have principal ideals only")
                .unwrap()
                .holds
        );
    }

    #[test]
    fn swapped_chain_fails_strictness() {
        let mut c = CPosetCert::columns(AmbientFamily::Johnstone, vec![]);
        c.chains.prefixes.insert(
            1,
            vec![ElemCode::pair(1, 2), ElemCode::pair(1, 1), ElemCode::pair(1, 3)],
        );
        let r = verify_cposet(&c, 6, 5).unwrap();
        let v = r.condition("(ii) chains strictly ascend").unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Witness::Index(1)));
        assert!(matches!(VerifiedCert::new(c, 6, 5), Err(Error::UnverifiedCert(_))));
    }

    #[test]
    fn json_round_trip() {
        let c = CPosetCert::columns(
            AmbientFamily::JohnstonePlusX(1),
            vec![DefinableSet::Region(Region::XPoints)],
        );
        assert_eq!(CPosetCert::from_json(&c.to_json()).unwrap(), c);
        let text = r#"{"family":"johnstone","chains":{"rule":"columns","prefixes":{"1":["(1,2)","(1,1)"]}}}"#;
        let parsed = CPosetCert::from_json(text).unwrap();
        assert_eq!(parsed.chain_elem(1, 1), Some(ElemCode::pair(1, 2)));
        assert_eq!(parsed.chain_elem(1, 3), Some(ElemCode::pair(1, 3)));
        assert!(CPosetCert::from_json(r#"{"family":"johnstone","t_parts":[{"up":"(1,1,1)"}]}"#).is_err());
    }
}
