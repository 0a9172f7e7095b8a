use std::fs;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use scottlab_core::order::corpus::corpus;
use scottlab_core::order::io::{hasse_dot, parse_poset, poset_to_json};
use scottlab_core::order::CorpusMode;
use scottlab_core::property_r::*;
use scottlab_core::report::{Bounds, Verdict, Witness};
use scottlab_core::structure::*;
use scottlab_core::symbolic::facts::*;
use scottlab_core::symbolic::{truncate, AmbientFamily, CompactStatus};
use scottlab_core::topo::*;
use scottlab_core::{Error, FinPoset, Subset};

use crate::assets::{asset, load};
use crate::report::Report;
use crate::{Cli, Command, Mode, Topology};

pub const DEFAULT_CHECKS: &str = "sober,wf,coherent,core-compact,upper-semicompact,propR";

const ALL_CHECKS: &[&str] = &[
    "sober",
    "wf",
    "coherent",
    "core-compact",
    "upper-semicompact",
    "c-space",
    "d-space",
    "dcpo",
    "propR",
    "product-eq",
    "sober-pipeline",
    "implication-chain",
    "smyth-sober",
    "omega-star",
];

pub enum Output {
    Report(Report),
    Text(String),
}

pub fn run(cli: &Cli) -> Result<Output, String> {
    let r = match &cli.command {
        Command::Check {
            file,
            properties,
            topology,
        } => check(cli, file, properties, *topology),
        Command::Family { name, fact, depth } => family(cli, name, fact, *depth),
        Command::Corpus {
            size,
            mode,
            count,
            checks,
        } => sweep(cli, *size, *mode, *count, checks),
        Command::Cert { file, depth, nmax } => cert(file, *depth, *nmax as usize),
        Command::Witness { file, subfamily, depth } => witness(file, *subfamily as usize, *depth),
        Command::Export { source, depth } => return export(cli, source, *depth).map(Output::Text),
    };
    r.map(Output::Report)
}

fn err(e: Error) -> String {
    e.to_string()
}

fn write_dot(cli: &Cli, p: &FinPoset, name: &str) -> Result<(), String> {
    match &cli.dot {
        Some(path) => fs::write(path, hasse_dot(p, name)).map_err(|e| format!("{}: {e}", path.display())),
        None => Ok(()),
    }
}

fn parse_checks(list: &str) -> Result<Vec<&str>, String> {
    if list.trim() == "all" {
        return Ok(ALL_CHECKS.to_vec());
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            ALL_CHECKS
                .iter()
                .find(|c| **c == s)
                .copied()
                .ok_or_else(|| format!("unknown property `{s}`; known: {}", ALL_CHECKS.join(", ")))
        })
        .collect()
}

fn kind(t: Topology) -> TopologyKind {
    match t {
        Topology::Scott => TopologyKind::Scott,
        Topology::Alexandroff => TopologyKind::Alexandroff,
        Topology::Upper => TopologyKind::Upper,
        Topology::Lower => TopologyKind::Lower,
        Topology::Lawson => TopologyKind::Lawson,
    }
}

fn flag(id: &str, holds: bool) -> Verdict {
    Verdict::from_bool(id, holds, None)
}

/// One property of `p` under the topology `t`. The order-theoretic checks
/// (`dcpo`, `propR`, `product-eq`, the pipelines) always use the Scott
/// topology.
fn property(p: &FinPoset, t: TopologyKind, id: &str) -> scottlab_core::Result<Verdict> {
    let x = derive_topology(p, t);
    let mut v = match id {
        "sober" => is_sober(&x)?,
        "wf" => is_well_filtered(&x)?,
        "coherent" => is_coherent(&x)?,
        "core-compact" => flag(id, classify_space(&x)?.core_compact),
        "upper-semicompact" => flag(id, classify_space(&x)?.upper_semicompact),
        "c-space" => flag(id, classify_space(&x)?.c_space),
        "d-space" => flag(id, classify_space(&x)?.d_space),
        "dcpo" => {
            let bad = p
                .directed_masks()?
                .into_iter()
                .find(|&d| p.lub(&Subset::from_mask(p.len(), d)).is_none());
            Verdict::from_bool(
                id,
                bad.is_none(),
                bad.map(|d| Witness::Set(p.subset_labels(&Subset::from_mask(p.len(), d)))),
            )
        }
        "propR" => {
            let r = has_property_r(p)?;
            let v = Verdict::from_bool(id, r.holds, r.witness.clone());
            match r.definitional_route {
                Some(_) => v.with_detail(format!(
                    "both routes agree; largest finite subfamily needed: {}",
                    r.largest_subfamily
                )),
                None => v.with_detail("closed-set route only"),
            }
        }
        "product-eq" => {
            let c = compare_product_topologies(p, p)?;
            let v = Verdict::from_bool(id, c.equal, c.witness.clone().map(Witness::Set));
            match c.open_count {
                Some(n) => v.with_detail(format!("{n} opens")),
                None => v,
            }
        }
        "sober-pipeline" => {
            let s = sober_pipeline(p)?;
            Verdict::from_bool(id, s.consistent, None)
                .with_detail(format!("{} irreducible closed sets", s.irreducible_count))
        }
        "implication-chain" => {
            let c = implication_chain_check(p)?;
            let holds = c.violations.is_empty() && c.lawson_decomposition_agrees;
            let w = c
                .violations
                .first()
                .map(|&(a, b)| Witness::Pair(a.to_string(), b.to_string()));
            Verdict::from_bool(id, holds, w)
        }
        "smyth-sober" => {
            let ps = smyth_power_space(&x)?;
            flag(id, is_sober(&x)?.holds == is_sober(&ps)?.holds)
        }
        "omega-star" => omega_star_compact_check(&x)?,
        _ => unreachable!("ids are validated by parse_checks"),
    };
    v.property = id.to_string();
    Ok(v)
}

fn check(cli: &Cli, file: &str, properties: &str, t: Topology) -> Result<Report, String> {
    let p = parse_poset(&load(file).map_err(err)?).map_err(err)?;
    let ids = parse_checks(properties)?;
    write_dot(cli, &p, file.trim_start_matches('@'))?;
    let verdicts = ids
        .iter()
        .map(|id| property(&p, kind(t), id))
        .collect::<scottlab_core::Result<Vec<_>>>()
        .map_err(err)?;
    Ok(Report::new("check", format!("{file} ({} points)", p.len()), verdicts))
}

fn family(cli: &Cli, name: &str, fact: &str, depth: u32) -> Result<Report, String> {
    let f: AmbientFamily = name.parse().map_err(err)?;
    if cli.dot.is_some() {
        let t = truncate(f, depth).map_err(err)?;
        write_dot(cli, t.poset(), &format!("{f} at depth {depth}"))?;
    }
    let at = |holds: bool, property: &str| {
        Verdict::from_bool(property, holds, None).with_bounds(Bounds {
            depth: Some(depth as usize),
            ..Bounds::default()
        })
    };
    let subject = format!("{f} {fact} at depth {depth}");
    let wrong = || format!("fact `{fact}` is not available for family {f}");
    let (claim, verdicts, data) = match fact {
        "k-formula" => {
            if f != AmbientFamily::Johnstone {
                return Err(wrong());
            }
            let cases = johnstone_k_formula(depth).map_err(err)?;
            let verdicts = cases
                .iter()
                .map(|c| {
                    let what = if c.expected_compact { "compact" } else { "not compact" };
                    at(c.agrees, &format!("{} is {what}", c.set))
                })
                .collect();
            (
                "the compact saturated sets are the nonempty sets of maximal points and the upper sets of finite sets",
                verdicts,
                json!(cases),
            )
        }
        "non-wf-witness" => {
            if f != AmbientFamily::Johnstone {
                return Err(wrong());
            }
            let r = certify_non_wf_witness(depth).map_err(err)?;
            let empty_everywhere = r.empty_trace_depths == (1..=depth).collect::<Vec<_>>();
            let doc: serde_json::Value =
                serde_json::from_str(asset("g-family").expect("bundled")).expect("bundled asset parses");
            (
                "the family of maximal points minus finite sets is filtered, consists of compact saturated sets, and has empty intersection, so the space is not well-filtered",
                vec![
                    at(r.filtered, "filtered"),
                    at(r.members_compact, "members compact"),
                    at(r.members_nonempty, "members nonempty"),
                    at(empty_everywhere, "intersection trace empty at every depth"),
                    at(r.certified, "certified"),
                ],
                json!({ "family": doc, "report": r }),
            )
        }
        "intersection" => {
            if f != AmbientFamily::Jia {
                return Err(wrong());
            }
            let r = jia_intersection(depth).map_err(err)?;
            let listed: Vec<String> = r.members.iter().map(ToString::to_string).collect();
            let mut v = at(r.only_level_two_tops, "intersection consists of level-two column tops")
                .with_detail(format!("members: {}", listed.join(" ")));
            if !r.outside_display.is_empty() {
                let extra: Vec<String> = r.outside_display.iter().map(ToString::to_string).collect();
                v = v.with_detail(format!(
                    "members: {}; discrepancy: {} lies outside {{(2,m+1,inf) : m ≥ 1}}",
                    listed.join(" "),
                    extra.join(" ")
                ));
            }
            (
                "the upper sets of (1,1,1) and (1,2,1) meet in level-two column tops only",
                vec![v],
                json!(r),
            )
        }
        "not-coherent" => {
            if f != AmbientFamily::Jia {
                return Err(wrong());
            }
            let r = jia_not_coherent(depth).map_err(err)?;
            let meet_not_compact = matches!(r.intersection, CompactStatus::ProvenNotCompact { .. });
            (
                "two compact saturated sets meet in a set that is not compact, so the space is not coherent",
                vec![
                    at(r.first_compact, "upper set of (1,1,1) compact"),
                    at(r.second_compact, "upper set of (1,2,1) compact"),
                    at(meet_not_compact && r.cover_certified, "intersection not compact"),
                    at(r.not_coherent, "not coherent"),
                ],
                json!(r),
            )
        }
        "ideals-countable" => {
            let r = ideals_countable(f, depth, cli.seed).map_err(err)?;
            let v = at(r.complete, "descriptor list complete").with_detail(format!(
                "{} principal and {} non-principal among the first {}",
                r.principal_in_prefix,
                r.non_principal_in_prefix,
                r.first.len()
            ));
            ("the ideals form a countable list of descriptors", vec![v], json!(r))
        }
        _ => {
            return Err(format!(
                "unknown fact `{fact}`; known: k-formula, non-wf-witness, intersection, not-coherent, ideals-countable"
            ))
        }
    };
    let mut report = Report::new("family", subject, verdicts).with_data(json!({ "claim": claim, "result": data }));
    report.footer = Some(format!("claim: {claim}"));
    Ok(report)
}

fn sweep(cli: &Cli, size: usize, mode: Mode, count: usize, checks: &str) -> Result<Report, String> {
    let ids = parse_checks(checks)?;
    let mode = match mode {
        Mode::Exhaustive => CorpusMode::Exhaustive,
        Mode::Random => CorpusMode::Random,
    };
    let start = Instant::now();
    let posets = corpus(size, mode, cli.seed, count).map_err(err)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let results: Vec<Vec<bool>> = pool
        .install(|| {
            posets
                .par_iter()
                .map(|p| {
                    ids.iter()
                        .map(|id| property(p, TopologyKind::Scott, id).map(|v| v.holds))
                        .collect::<scottlab_core::Result<Vec<bool>>>()
                })
                .collect::<scottlab_core::Result<Vec<_>>>()
        })
        .map_err(err)?;
    let mut failures = Vec::new();
    let verdicts = ids
        .iter()
        .enumerate()
        .map(|(j, id)| {
            let bad: Vec<usize> = (0..posets.len()).filter(|&i| !results[i][j]).collect();
            for &i in bad.iter().take(10) {
                failures.push(json!({ "property": id, "index": i, "poset": serde_json::from_str::<serde_json::Value>(&poset_to_json(&posets[i])).expect("valid json") }));
            }
            Verdict::from_bool(*id, bad.is_empty(), bad.first().map(|&i| Witness::Index(i)))
                .with_detail(format!("{} of {} posets fail", bad.len(), posets.len()))
        })
        .collect();
    let mut report =
        Report::new("corpus", format!("size {size}, {} posets", posets.len()), verdicts).with_data(json!({
            "size": size,
            "posets": posets.len(),
            "seed": cli.seed,
            "failures": failures,
        }));
    report.footer = Some(format!("wall time {:.2}s", start.elapsed().as_secs_f64()));
    Ok(report)
}

fn cert(file: &str, depth: u32, n_max: usize) -> Result<Report, String> {
    let c = CPosetCert::from_json(&load(file).map_err(err)?).map_err(err)?;
    let r = verify_cposet(&c, depth, n_max).map_err(err)?;
    let mut verdicts = r.conditions.clone();
    if r.passed {
        let vc = VerifiedCert::new(c.clone(), depth, n_max).map_err(err)?;
        let mut claim1 = Verdict::pass("S_n has only principal ideals");
        let mut dsub = Verdict::pass("K_n is closed under existing directed sups");
        for n in 1..=n_max {
            let kn = build_kn(&vc, n).map_err(err)?;
            let a = check_claim1(&kn, depth).map_err(err)?;
            if !a.holds && claim1.holds {
                claim1 = a;
            }
            let b = check_d_sub(&kn, depth).map_err(err)?;
            if !b.holds && dsub.holds {
                dsub = b;
            }
        }
        let bounds = Bounds {
            depth: Some(depth as usize),
            n_max: Some(n_max),
            subfamily: None,
        };
        verdicts.push(claim1.with_bounds(bounds));
        verdicts.push(dsub.with_bounds(bounds));
        verdicts.push(check_claim3(&vc, depth).map_err(err)?);
    }
    Ok(Report::new("cert", format!("{file} ({})", c.family), verdicts).with_data(json!({ "bounds": r.bounds })))
}

fn witness(file: &str, s: usize, depth: u32) -> Result<Report, String> {
    let w = RWitness::from_json(&load(file).map_err(err)?).map_err(err)?;
    let r = verify_r_failure(&w, s, depth).map_err(err)?;
    let bounds = Bounds {
        depth: Some(depth as usize),
        n_max: None,
        subfamily: Some(s),
    };
    let v = Verdict::from_bool(
        "property R fails",
        r.certified,
        r.breakage
            .as_ref()
            .map(|b| Witness::Set(b.iter().map(ToString::to_string).collect())),
    )
    .with_bounds(bounds)
    .with_detail(format!(
        "{} excluded points, {} subfamilies escape U",
        r.excluded,
        r.escapes.len()
    ));
    Ok(Report::new("witness", format!("{file} ({})", w.family), vec![v]).with_data(&r))
}

fn export(cli: &Cli, source: &str, depth: u32) -> Result<String, String> {
    let (p, name) = if source.starts_with('@') || Path::new(source).is_file() {
        (
            parse_poset(&load(source).map_err(err)?).map_err(err)?,
            source.trim_start_matches('@').to_string(),
        )
    } else {
        let f: AmbientFamily = source.parse().map_err(err)?;
        let t = truncate(f, depth).map_err(err)?;
        (t.poset().clone(), format!("{f} at depth {depth}"))
    };
    write_dot(cli, &p, &name)?;
    Ok(poset_to_json(&p) + "\n")
}
