//! The four subcommands, each producing a [`Report`].

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use cameral_core::folding::{FoldedDatum, SymmetryLabel};
use cameral_core::prym::{
    generic_branch_plan, hitchin_dim, parse_root_label, plan_from_counts, prym_lattice, root_label, HitchinConfig,
};
use cameral_core::rootdatum::{DynkinType, LatticeForm, RootDatum};
use serde::Deserialize;
use serde_json::json;

use crate::report::{Check, Report};
use crate::suites::{self, Suite};

#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Parse(String),
    #[error("cannot read plan file {path}: {source}")]
    PlanFile { path: PathBuf, source: std::io::Error },
    #[error("invalid plan file {path}: {message}")]
    PlanFormat { path: PathBuf, message: String },
    #[error("{0}")]
    Input(String),
}

fn parse_type(s: &str) -> Result<DynkinType, UsageError> {
    s.parse().map_err(|e| UsageError::Parse(format!("invalid type {s:?}: {e}")))
}

fn build(d: DynkinType) -> Result<RootDatum, UsageError> {
    RootDatum::build(d).map_err(|e| UsageError::Input(e.to_string()))
}

pub fn rootdata(ty: &str) -> Result<Report, UsageError> {
    let d = parse_type(ty)?;
    let rd = build(d)?;
    let weyl_order: u64 = rd.degrees.iter().map(|&x| u64::from(x)).product();
    let exponent_sum: usize = rd.degrees.iter().map(|&x| x as usize - 1).sum();
    let dual = rd.langlands_dual();
    let details = json!({
        "type": d.to_string(),
        "rank": rd.rank(),
        "roots": rd.num_roots(),
        "positive_roots": rd.num_positive(),
        "degrees": rd.degrees,
        "weyl_order": weyl_order,
        "center": rd.center().to_string(),
        "dual": dual.dynkin.to_string(),
    });
    let checks = vec![
        Check::eq("root_count", rd.num_roots(), d.root_count(), "root-system"),
        Check::eq("exponent_sum", exponent_sum, rd.num_positive(), "invariant-degrees"),
        Check::eq("dual_involution", dual.langlands_dual().dynkin, d, "langlands-dual"),
    ];
    Ok(Report::new("rootdata", BTreeMap::from([("type".into(), d.to_string())]), details, checks))
}

pub fn fold(ty: &str, group: &str) -> Result<Report, UsageError> {
    let dh = parse_type(ty)?;
    let label: SymmetryLabel = group
        .parse()
        .map_err(|e| UsageError::Parse(format!("invalid group {group:?}: {e}")))?;
    let fd = FoldedDatum::fold(dh, label).map_err(|e| UsageError::Input(e.to_string()))?;
    let census: Vec<_> = (0..fd.folded.num_positive())
        .map(|k| {
            let orbit = fd.orbit_for_folded_root(k);
            json!({
                "root": root_label(&fd.folded, k),
                "size": orbit.len(),
                "fiber": fd.singular_fiber_type(k),
                "members": orbit.iter().map(|&b| root_label(&fd.homogeneous, b)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let details = json!({
        "homogeneous": dh.to_string(),
        "group": label.to_string(),
        "folded": fd.folded.dynkin.to_string(),
        "simple_orbit_sizes": fd.simple_orbit_sizes(),
        "orbits": census,
    });
    let input = BTreeMap::from([("type".into(), dh.to_string()), ("group".into(), label.to_string())]);
    Ok(Report::new("fold", input, details, suites::folding_table_checks(dh, label)))
}

#[derive(Deserialize)]
struct PlanFile {
    orbits: Vec<PlanEntry>,
    #[serde(default)]
    handles: Option<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
struct PlanEntry {
    label: String,
    count: usize,
}

fn load_plan(path: &PathBuf, rd: &RootDatum, genus: usize) -> Result<cameral_core::prym::BranchPlan, UsageError> {
    let text = fs::read_to_string(path).map_err(|source| UsageError::PlanFile { path: path.clone(), source })?;
    let bad = |message: String| UsageError::PlanFormat { path: path.clone(), message };
    let file: PlanFile = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let mut counts = BTreeMap::new();
    for e in &file.orbits {
        let k = parse_root_label(rd, &e.label).map_err(|e| bad(e.to_string()))?;
        *counts.entry(k).or_insert(0) += e.count;
    }
    let handles = match file.handles {
        None => vec![Vec::new(); 2 * genus],
        Some(words) => words
            .iter()
            .map(|w| w.iter().map(|l| parse_root_label(rd, l)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| bad(e.to_string()))?,
    };
    plan_from_counts(rd, &counts, handles).map_err(|e| bad(e.to_string()))
}

pub struct PrymArgs {
    pub ty: String,
    pub form: LatticeForm,
    pub genus: usize,
    pub plan: Option<PathBuf>,
    pub oracle: bool,
    pub oracle_cap: usize,
}

pub fn prym(args: &PrymArgs) -> Result<Report, UsageError> {
    let d = parse_type(&args.ty)?;
    let rd = build(d)?;
    let input_err = |e: cameral_core::prym::PrymError| UsageError::Input(e.to_string());
    let cfg = match &args.plan {
        Some(path) => {
            let plan = load_plan(path, &rd, args.genus)?;
            HitchinConfig::new(rd, args.genus, args.form, plan).map_err(input_err)?
        }
        None => HitchinConfig::generic(rd, args.genus, args.form).map_err(input_err)?,
    };
    let rep = prym_lattice(&cfg).map_err(input_err)?;
    let generic = cfg.branch_count() == generic_branch_plan(&cfg.datum, cfg.genus).len();
    let mut checks: Vec<Check> = rep
        .verdicts
        .iter()
        .map(|v| {
            let anchor = if v.name == "torsion" { "torsion-center" } else { "rank-law" };
            if v.name == "rank" && !generic {
                return Check::skip("rank", "plan is not generic", anchor);
            }
            Check::new(v.name.clone(), v.pass, &v.computed, &v.expected, anchor)
        })
        .collect();
    if args.oracle {
        checks.extend(suites::oracle_rank_checks(&cfg, args.oracle_cap));
    }
    let plan: BTreeMap<String, usize> =
        cfg.plan.counts().into_iter().map(|(k, c)| (root_label(&cfg.datum, k), c)).collect();
    let details = json!({
        "type": d.to_string(),
        "form": cfg.form.to_string(),
        "genus": cfg.genus,
        "branch_points": cfg.branch_count(),
        "hitchin_dim": hitchin_dim(&cfg.datum, cfg.genus).map_err(input_err)?,
        "lattice": rep.lattice.to_string(),
        "torsion": rep.lattice.torsion().to_string(),
        "expected_torsion": rep.expected_torsion.to_string(),
        "plan": plan,
    });
    let mut input = BTreeMap::from([
        ("type".into(), d.to_string()),
        ("form".into(), args.form.to_string()),
        ("genus".into(), args.genus.to_string()),
        ("oracle".into(), args.oracle.to_string()),
        ("oracle_cap".into(), args.oracle_cap.to_string()),
    ]);
    if let Some(p) = &args.plan {
        input.insert("plan".into(), p.display().to_string());
    }
    Ok(Report::new("prym", input, details, checks))
}

pub fn verify(suite: Suite, jobs: usize, oracle_cap: usize) -> Report {
    let cases = suites::cases(suite, oracle_cap);
    let keys: Vec<&str> = cases.iter().map(|c| c.key.as_str()).collect();
    let details = json!({ "cases": keys });
    let checks = suites::run_cases(&cases, jobs);
    let name = format!("{suite:?}").to_lowercase();
    let input = BTreeMap::from([("suite".into(), name), ("oracle_cap".into(), oracle_cap.to_string())]);
    Report::new("verify", input, details, checks)
}
