//! The subsets `K_n = H_1 ∪ … ∪ H_n ∪ T_1 ∪ … ∪ T_n` of a certified c-poset
//! and the claims about them, each checked at a truncation depth.

use serde::{Deserialize, Serialize};

use super::cert::{chain_horizon, non_principal_in, SupFlag, VerifiedCert};
use crate::error::{Error, Result};
use crate::report::{Bounds, Verdict, Witness};
use crate::subset::Subset;
use crate::symbolic::{
    columns_within, scott_open_status, truncate, up_within, DefinableSet, ElemCode, OpenStatus, Truncation,
};

#[derive(Debug, Clone)]
pub struct KnWitness {
    cert: VerifiedCert,
    n: usize,
}

pub fn build_kn(cert: &VerifiedCert, n: usize) -> Result<KnWitness> {
    if n == 0 {
        return Err(Error::PreconditionFailed("K_n is defined for n ≥ 1".into()));
    }
    Ok(KnWitness { cert: cert.clone(), n })
}

impl KnWitness {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cert(&self) -> &VerifiedCert {
        &self.cert
    }

    pub fn contains(&self, e: &ElemCode) -> bool {
        let c = self.cert.cert();
        (1..=self.n).any(|i| c.in_h(i, e) || c.in_t(i, e))
    }

    pub fn trace(&self, t: &Truncation) -> Subset {
        t.filter(|e| self.contains(e))
    }

    /// `S_n = T_1 ∪ … ∪ T_n`.
    pub fn s_part(&self) -> DefinableSet {
        let parts = &self.cert.cert().t_parts;
        DefinableSet::Union(parts.iter().take(self.n).cloned().collect())
    }
}

fn bounds(k: u32, n: usize) -> Bounds {
    Bounds {
        depth: Some(k as usize),
        n_max: Some(n),
        subfamily: None,
    }
}

/// `S_n` has no non-principal ideal.
pub fn check_claim1(kn: &KnWitness, k: u32) -> Result<Verdict> {
    let f = kn.cert.cert().family;
    let t = truncate(f, k)?;
    let v = match non_principal_in(f, &kn.s_part(), &t)? {
        None => Verdict::pass("S_n has only principal ideals"),
        Some(why) => Verdict::fail("S_n has only principal ideals", Witness::Index(kn.n)).with_detail(why),
    };
    Ok(v.with_bounds(bounds(k, kn.n)))
}

/// `K_n` is a d-sub-poset: a column meeting `K_n` cofinally at depth `k`
/// has its sup, when there is one, inside `K_n`.
pub fn check_d_sub(kn: &KnWitness, k: u32) -> Result<Verdict> {
    let f = kn.cert.cert().family;
    const NAME: &str = "K_n is closed under existing directed sups";
    for c in columns_within(f, k) {
        let tail = (k..=chain_horizon(k)).filter(|&m| kn.contains(&c.elem(m))).count();
        if tail < 2 {
            continue;
        }
        if let Some(s) = c.sup(f) {
            if !kn.contains(&s) {
                return Ok(Verdict::fail(NAME, Witness::Pair(c.to_string(), s.to_string()))
                    .with_detail(format!("{c} lies cofinally in K_{} but {s} does not", kn.n))
                    .with_bounds(bounds(k, kn.n)));
            }
        }
    }
    Ok(Verdict::pass(NAME).with_bounds(bounds(k, kn.n)))
}

/// `K_1 ⊆ K_2 ⊆ …` and the union covers the truncation at depth `k`.
pub fn check_claim3(cert: &VerifiedCert, k: u32) -> Result<Verdict> {
    let c = cert.cert();
    let t = truncate(c.family, k)?;
    let top = c.chain_count(k).max(c.t_parts.len()).max(1);
    let traces: Vec<Subset> = (1..=top)
        .map(|n| build_kn(cert, n).map(|kn| kn.trace(&t)))
        .collect::<Result<_>>()?;
    for n in 1..top {
        if !traces[n - 1].is_subset(&traces[n]) {
            return Ok(Verdict::fail("K_n increase and cover P", Witness::Index(n))
                .with_detail(format!("K_{n} is not inside K_{}", n + 1))
                .with_bounds(bounds(k, top)));
        }
    }
    let missed = traces[top - 1].complement();
    let v = match missed.first() {
        None => Verdict::pass("K_n increase and cover P"),
        Some(i) => Verdict::fail("K_n increase and cover P", Witness::Set(vec![t.code(i).to_string()]))
            .with_detail(format!("{} lies in no K_n with n ≤ {top}", t.code(i))),
    };
    Ok(v.with_bounds(bounds(k, top)))
}

/// Relative Scott openness of `U ∩ K_n`, checked at a depth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelOpen {
    Open,
    NotOpen(String),
    /// A chain ran out before reaching `U`, so nothing can be concluded.
    Inconclusive(String),
}

impl RelOpen {
    pub fn is_open(&self) -> bool {
        matches!(self, RelOpen::Open)
    }
}

/// First `m` with `c_(i,m) ∈ U`, searching up to `limit`; `Err(true)` when
/// the chain ends before the limit.
fn first_hit(kn: &KnWitness, i: usize, u: &DefinableSet, limit: u32) -> std::result::Result<u32, bool> {
    let c = kn.cert.cert();
    for m in 1..=limit {
        match c.chain_elem(i, m) {
            Some(e) if u.contains(c.family, &e) => return Ok(m),
            Some(_) => {}
            None => return Err(true),
        }
    }
    Err(false)
}

fn search_limit(u: &DefinableSet, k: u32) -> u32 {
    chain_horizon(k).max(u.support_bound() + 2)
}

/// Is `U ∩ K_n` Scott open in `K_n`? Upward closure is tested on the
/// truncation at depth `k`; each chain `i ≤ n` whose sup lies in `U` must
/// meet `U`.
pub fn relatively_open(kn: &KnWitness, u: &DefinableSet, k: u32) -> Result<RelOpen> {
    let c = kn.cert.cert();
    let f = c.family;
    u.validate(f)?;
    let t = truncate(f, k)?;
    for x in t.codes() {
        if !kn.contains(x) || !u.contains(f, x) {
            continue;
        }
        if let Some(y) = up_within(f, x, k)
            .into_iter()
            .find(|y| kn.contains(y) && !u.contains(f, y))
        {
            return Ok(RelOpen::NotOpen(format!("{x} ≤ {y} leaves the set inside K_{}", kn.n)));
        }
    }
    let limit = search_limit(u, k);
    for i in 1..=kn.n {
        let Some(SupFlag::SupExists(s)) = c.sup(i) else {
            continue;
        };
        if !u.contains(f, &s) {
            continue;
        }
        match first_hit(kn, i, u, limit) {
            Ok(_) => {}
            Err(false) => {
                return Ok(RelOpen::NotOpen(format!(
                    "chain {i} has sup {s} in the set but misses it"
                )))
            }
            Err(true) => return Ok(RelOpen::Inconclusive(format!("chain {i} ends before reaching the set"))),
        }
    }
    Ok(RelOpen::Open)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalBasis {
    /// `F = {x} ∪ {c_(j,m_j) : j ∈ N_U}`.
    pub generators: Vec<ElemCode>,
    /// `(j, m_j)` for `j ∈ N_U`.
    pub first_hits: Vec<(usize, u32)>,
    pub verdict: Verdict,
    /// Some chain could not be searched far enough.
    pub downgraded: bool,
}

/// For `x ∈ U ∩ K_n` with `U ∩ K_n` relatively open, the finite set `F`
/// with `x ∈ ↑F ∩ K_n ⊆ U`, and a check of that inclusion at depth `k`.
pub fn local_finite_basis(kn: &KnWitness, x: &ElemCode, u: &DefinableSet, k: u32) -> Result<LocalBasis> {
    let c = kn.cert.cert();
    let f = c.family;
    u.validate(f)?;
    f.check(x)?;
    if !kn.contains(x) || !u.contains(f, x) {
        return Err(Error::PreconditionFailed(format!("{x} is not in U ∩ K_{}", kn.n)));
    }
    match relatively_open(kn, u, k)? {
        RelOpen::Open => {}
        RelOpen::NotOpen(why) | RelOpen::Inconclusive(why) => {
            return Err(Error::PreconditionFailed(format!(
                "U ∩ K_{} is not relatively open: {why}",
                kn.n
            )))
        }
    }
    let limit = search_limit(u, k);
    let mut generators = vec![*x];
    let mut first_hits = Vec::new();
    let mut downgraded = false;
    for j in 1..=kn.n {
        match first_hit(kn, j, u, limit) {
            Ok(m) => {
                first_hits.push((j, m));
                let e = c.chain_elem(j, m).expect("hit is defined");
                if !generators.contains(&e) {
                    generators.push(e);
                }
            }
            Err(ran_out) => downgraded |= ran_out,
        }
    }
    let v = DefinableSet::up_of(generators.iter().copied());
    let t = truncate(f, k)?;
    const NAME: &str = "x ∈ ↑F ∩ K_n ⊆ U, relatively open";
    let leak = t
        .codes()
        .iter()
        .find(|e| kn.contains(e) && v.contains(f, e) && !u.contains(f, e));
    let verdict = if let Some(e) = leak {
        Verdict::fail(NAME, Witness::Set(vec![e.to_string()])).with_detail(format!("{e} ∈ ↑F ∩ K_n but not in U"))
    } else {
        match relatively_open(kn, &v, k)? {
            RelOpen::Open => Verdict::pass(NAME),
            RelOpen::NotOpen(why) => Verdict::fail(NAME, Witness::Note(why)),
            RelOpen::Inconclusive(why) => {
                downgraded = true;
                Verdict::pass(NAME).with_detail(why)
            }
        }
    };
    Ok(LocalBasis {
        generators,
        first_hits,
        verdict: verdict.with_bounds(bounds(k, kn.n)),
        downgraded,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Agree,
    /// The ambient set is not open, but every `U ∩ K_n` with `n ≤ n_max` is.
    FailureBeyondBound,
    Disagree,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub ambient: OpenStatus,
    pub traces: Vec<(usize, RelOpen)>,
    pub agreement: Agreement,
}

/// `U` is Scott open iff every `U ∩ K_n` is Scott open in `K_n`, compared
/// for `n ≤ n_max` at depth `k`.
pub fn verify_scott_trace(cert: &VerifiedCert, u: &DefinableSet, k: u32, n_max: usize) -> Result<TraceReport> {
    let f = cert.cert().family;
    let ambient = scott_open_status(f, u, k)?;
    let traces: Vec<(usize, RelOpen)> = (1..=n_max.max(1))
        .map(|n| Ok((n, relatively_open(&build_kn(cert, n)?, u, k)?)))
        .collect::<Result<_>>()?;
    let all_open = traces.iter().all(|(_, r)| r.is_open());
    let some_closed = traces.iter().any(|(_, r)| matches!(r, RelOpen::NotOpen(_)));
    let agreement = match &ambient {
        OpenStatus::ProvenOpen(_) if all_open => Agreement::Agree,
        OpenStatus::ProvenOpen(_) if some_closed => Agreement::Disagree,
        OpenStatus::ProvenNotOpen(_) if some_closed => Agreement::Agree,
        OpenStatus::ProvenNotOpen(_) if all_open => Agreement::FailureBeyondBound,
        _ => Agreement::Undecided,
    };
    Ok(TraceReport {
        ambient,
        traces,
        agreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::CPosetCert;
    use crate::symbolic::{AmbientFamily, Region};

    fn johnstone() -> VerifiedCert {
        VerifiedCert::new(CPosetCert::columns(AmbientFamily::Johnstone, vec![]), 6, 5).unwrap()
    }

    #[test]
    fn claims_hold_for_johnstone_plus_x() {
        let c = CPosetCert::columns(
            AmbientFamily::JohnstonePlusX(5),
            vec![DefinableSet::Region(Region::XPoints)],
        );
        let vc = VerifiedCert::new(c, 5, 5).unwrap();
        for n in 1..=5 {
            let kn = build_kn(&vc, n).unwrap();
            assert!(check_claim1(&kn, 5).unwrap().holds);
            assert!(check_d_sub(&kn, 5).unwrap().holds);
        }
        assert!(check_claim3(&vc, 5).unwrap().holds);
        assert!(build_kn(&vc, 0).is_err());
    }

    #[test]
    fn basis_examples() {
        let vc = johnstone();
        let k1 = build_kn(&vc, 1).unwrap();
        let b = local_finite_basis(&k1, &ElemCode::pair_inf(1), &DefinableSet::Up(ElemCode::pair(1, 3)), 6).unwrap();
        assert_eq!(b.generators, vec![ElemCode::pair_inf(1), ElemCode::pair(1, 3)]);
        assert!(b.verdict.holds && !b.downgraded);

        let k3 = build_kn(&vc, 3).unwrap();
        let u = DefinableSet::up_of([ElemCode::pair(2, 2), ElemCode::pair(3, 4)]);
        let b = local_finite_basis(&k3, &ElemCode::pair_inf(2), &u, 6).unwrap();
        assert_eq!(
            b.generators,
            vec![ElemCode::pair_inf(2), ElemCode::pair(2, 2), ElemCode::pair(3, 4)]
        );
        assert!(b.verdict.holds);
    }

    #[test]
    fn trace_criterion() {
        let vc = johnstone();
        let r = verify_scott_trace(&vc, &DefinableSet::Up(ElemCode::pair(3, 2)), 6, 4).unwrap();
        assert!(r.ambient.is_not_open());
        assert_eq!(r.agreement, Agreement::Agree);
        assert!(r.traces[0].1.is_open());
        assert!(!r.traces[1].1.is_open());
        let open = DefinableSet::Up(ElemCode::pair(2, 2));
        assert_eq!(
            verify_scott_trace(&vc, &open, 6, 4).unwrap().agreement,
            Agreement::Agree
        );
    }
}
