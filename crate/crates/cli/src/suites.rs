//! Verification suites: independent cases run on a worker pool and merged in
//! case order.

use cameral_core::folding::{legal_pairs, FoldedDatum, SymmetryLabel};
use cameral_core::oracle::{chain_complex_euler, oracle_report, riemann_hurwitz_euler, OracleError};
use cameral_core::prym::{
    langlands_report, plan_variants, prym_lattice, verify_bcfg, HitchinConfig, PrymError, Verdict,
};
use cameral_core::rootdatum::{all_types, fixed_sublattice, DynkinType, Family, LatticeForm, RootDatum};
use cameral_core::IntMatrix;
use num_traits::One;
use rayon::prelude::*;

use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Folding,
    Fiberwise,
    Global,
    Langlands,
    All,
}

pub struct Case {
    pub key: String,
    run: Box<dyn Fn() -> Vec<Check> + Send + Sync>,
}

impl Case {
    fn new(key: String, run: impl Fn() -> Vec<Check> + Send + Sync + 'static) -> Self {
        Case { key, run: Box::new(run) }
    }

    pub fn run(&self) -> Vec<Check> {
        (self.run)().into_iter().map(|c| c.prefixed(&self.key)).collect()
    }
}

pub const PRYM_TYPES: [&str; 9] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"];
pub const ORACLE_TYPES: [&str; 5] = ["A1", "A2", "A3", "B2", "G2"];
pub const LANGLANDS_TYPES: [&str; 5] = ["A1", "A2", "B2", "B3", "G2"];
pub const BCFG_PAIRS: [(&str, SymmetryLabel); 5] = [
    ("A3", SymmetryLabel::Z2),
    ("A5", SymmetryLabel::Z2),
    ("D4", SymmetryLabel::Z2),
    ("D4", SymmetryLabel::S3),
    ("E6", SymmetryLabel::Z2),
];
const FORMS: [LatticeForm; 2] = [LatticeForm::Adjoint, LatticeForm::SimplyConnected];

/// Folded type of `(Δ_h, C)` per the folding table.
pub fn table_row(dh: DynkinType, label: SymmetryLabel) -> Option<DynkinType> {
    let n = dh.rank;
    let (family, rank) = match (dh.family, label) {
        (Family::A, SymmetryLabel::Z2) if n % 2 == 1 => (Family::B, n.div_ceil(2)),
        (Family::D, SymmetryLabel::Z2) => (Family::C, n - 1),
        (Family::E, SymmetryLabel::Z2) if n == 6 => (Family::F, 4),
        (Family::D, SymmetryLabel::S3) if n == 4 => (Family::G, 2),
        _ => return None,
    };
    DynkinType::new(family, rank).ok()
}

pub fn parse_type(s: &str) -> DynkinType {
    s.parse().expect("suite types are valid")
}

fn datum(s: &str) -> RootDatum {
    RootDatum::build(parse_type(s)).expect("suite types build")
}

fn verdict(v: &Verdict, anchor: &str) -> Check {
    Check::new(v.name.clone(), v.pass, &v.computed, &v.expected, anchor)
}

fn error_check(name: &str, e: impl std::fmt::Display, anchor: &str) -> Vec<Check> {
    vec![Check::new(name, false, format!("error: {e}"), "success", anchor)]
}

pub fn folding_table_checks(dh: DynkinType, label: SymmetryLabel) -> Vec<Check> {
    let fd = match FoldedDatum::fold(dh, label) {
        Ok(fd) => fd,
        Err(e) => return error_check("fold", e, "folding-table"),
    };
    let expected = table_row(dh, label).map(|d| d.to_string()).unwrap_or_else(|| "none".into());
    vec![
        Check::eq("folded_type", fd.folded.dynkin.to_string(), expected, "folding-table"),
        Check::eq("invariant_rank", fd.invariant_lattice.cols(), fd.folded.rank(), "folding-table"),
        Check::eq("orbits_orthogonal", fd.orbits_orthogonal(), true, "orbit-orthogonality"),
        Check::eq("restriction_matches", fd.restriction_matches(), true, "folded-reflections"),
        Check::eq("commutes_with_symmetry", fd.reflections_commute_with_symmetry(), true, "folded-reflections"),
        Check::eq("invariant_lattice_fixed", fd.invariant_lattice_is_fixed(), true, "invariant-lattice"),
        Check::eq("fixed_lattice_rank", fd.fixed_lattice().cols(), 0, "no-global-sections"),
    ]
}

pub fn fixed_lattice_check(d: DynkinType) -> Vec<Check> {
    let rd = RootDatum::build(d).expect("valid type");
    let fixed = fixed_sublattice(&rd.simple_reflections(), &IntMatrix::identity(rd.rank())).expect("W preserves Λ");
    vec![Check::eq("fixed_lattice_rank", fixed.cols(), 0, "no-global-sections")]
}

pub fn adjoint_epsilon_check(d: DynkinType) -> Vec<Check> {
    let rd = RootDatum::build(d).expect("valid type");
    let bad: Vec<usize> = (0..rd.num_roots())
        .filter(|&k| !rd.epsilon(k, LatticeForm::Adjoint).map(|e| e.is_one()).unwrap_or(false))
        .collect();
    let computed = if bad.is_empty() { "all 1".to_string() } else { format!("roots {bad:?} differ") };
    vec![Check::new("epsilon", bad.is_empty(), computed, "all 1", "adjoint-epsilon")]
}

pub fn prym_checks(ty: &str, form: LatticeForm, g: usize) -> Vec<Check> {
    let cfg = match HitchinConfig::generic(datum(ty), g, form) {
        Ok(c) => c,
        Err(e) => return error_check("config", e, "rank-law"),
    };
    match prym_lattice(&cfg) {
        Ok(rep) => rep
            .verdicts
            .iter()
            .map(|v| verdict(v, if v.name == "torsion" { "torsion-center" } else { "rank-law" }))
            .collect(),
        Err(e) => error_check("prym_lattice", e, "rank-law"),
    }
}

pub fn oracle_rank_checks(cfg: &HitchinConfig, cap: usize) -> Vec<Check> {
    let prym = match prym_lattice(cfg) {
        Ok(r) => r.lattice.rank,
        Err(e) => return error_check("prym_lattice", e, "oracle-isogeny"),
    };
    match oracle_report(cfg, cap) {
        Ok(o) => {
            let r = cfg.datum.rank() as i64;
            vec![
                Check::eq("oracle_rank", o.invariant_rank, prym, "oracle-isogeny"),
                Check::eq("actions_commute", o.actions_commute, true, "deck-commutation"),
                Check::eq("cover_h1_rank", o.induced_rank as i64, 2 * o.cover_genus * r, "riemann-hurwitz"),
                Check::eq("cover_h0_rank", o.h0_rank, cfg.datum.rank(), "connected-cover"),
            ]
        }
        Err(OracleError::CapExceeded { cap, partial }) => {
            vec![Check::skip("oracle_rank", format!("|W| exceeds cap {cap} ({partial} enumerated)"), "oracle-isogeny")]
        }
        Err(e) => error_check("oracle", e, "oracle-isogeny"),
    }
}

pub fn oracle_checks(ty: &str, form: LatticeForm, cap: usize) -> Vec<Check> {
    match HitchinConfig::generic(datum(ty), 2, form) {
        Ok(cfg) => oracle_rank_checks(&cfg, cap),
        Err(e) => error_check("config", e, "oracle-isogeny"),
    }
}

pub fn euler_checks(ty: &str, cap: usize) -> Vec<Check> {
    let run = || -> Result<(i64, i64), OracleError> {
        let cfg = HitchinConfig::generic(datum(ty), 2, LatticeForm::Adjoint)?;
        Ok((riemann_hurwitz_euler(&cfg, cap)?, chain_complex_euler(&cfg, cap)?))
    };
    match run() {
        Ok((rh, cells)) => vec![Check::eq("euler_characteristic", cells, rh, "riemann-hurwitz")],
        Err(e) => error_check("euler", e, "riemann-hurwitz"),
    }
}

pub fn plan_independence_checks(ty: &str, form: LatticeForm) -> Vec<Check> {
    let run = || -> Result<Vec<Check>, PrymError> {
        let cfg = HitchinConfig::generic(datum(ty), 2, form)?;
        let plans = plan_variants(&cfg, 5);
        let reference = prym_lattice(&cfg)?.lattice;
        let mut checks = vec![Check::eq("distinct_plans", plans.len(), 5, "plan-independence")];
        for (i, plan) in plans.iter().enumerate().skip(1) {
            let c = HitchinConfig::new(cfg.datum.clone(), 2, form, plan.clone())?;
            let lat = prym_lattice(&c)?.lattice;
            checks.push(Check::new(
                format!("plan{i}"),
                lat == reference,
                &lat,
                &reference,
                "plan-independence",
            ));
        }
        Ok(checks)
    };
    run().unwrap_or_else(|e| error_check("plans", e, "plan-independence"))
}

pub fn bcfg_checks(dh: &str, label: SymmetryLabel) -> Vec<Check> {
    let run = || -> Result<Vec<Check>, PrymError> {
        let fd = FoldedDatum::fold(parse_type(dh), label)?;
        let rep = verify_bcfg(&fd, 2)?;
        Ok(rep.verdicts.iter().map(|v| verdict(v, "bcfg-iota")).collect())
    };
    run().unwrap_or_else(|e| error_check("bcfg", e, "bcfg-iota"))
}

pub fn langlands_checks(ty: &str) -> Vec<Check> {
    match langlands_report(parse_type(ty), 2) {
        Ok(rep) => rep.verdicts.iter().map(|v| verdict(v, "langlands-duality")).collect(),
        Err(e) => error_check("langlands", e, "langlands-duality"),
    }
}

fn form_key(f: LatticeForm) -> &'static str {
    match f {
        LatticeForm::Adjoint => "adjoint",
        LatticeForm::SimplyConnected => "sc",
    }
}

/// Pairs of the folding table up to `B₆`/`C₆`, plus `F₄` and `G₂`.
pub fn table_pairs() -> Vec<(DynkinType, SymmetryLabel)> {
    legal_pairs(11)
        .into_iter()
        .filter(|&(dh, label)| table_row(dh, label).is_some_and(|d| d.rank <= 6))
        .collect()
}

pub fn cases(suite: Suite, cap: usize) -> Vec<Case> {
    let mut out = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::Folding) {
        for (dh, label) in table_pairs() {
            out.push(Case::new(format!("fold/{dh}/{label}"), move || folding_table_checks(dh, label)));
        }
        for d in all_types(8).into_iter().filter(|d| d.family.is_simply_laced()) {
            out.push(Case::new(format!("fixed/{d}"), move || fixed_lattice_check(d)));
        }
        for d in all_types(8) {
            out.push(Case::new(format!("epsilon/{d}"), move || adjoint_epsilon_check(d)));
        }
    }
    if want(Suite::Fiberwise) {
        for ty in PRYM_TYPES {
            for form in FORMS {
                for g in [2, 3] {
                    out.push(Case::new(format!("prym/{ty}/{}/g{g}", form_key(form)), move || prym_checks(ty, form, g)));
                }
            }
        }
        for ty in ORACLE_TYPES {
            for form in FORMS {
                out.push(Case::new(format!("oracle/{ty}/{}", form_key(form)), move || oracle_checks(ty, form, cap)));
            }
            out.push(Case::new(format!("euler/{ty}"), move || euler_checks(ty, cap)));
        }
        for ty in ["A1", "B2"] {
            for form in FORMS {
                out.push(Case::new(format!("plans/{ty}/{}", form_key(form)), move || plan_independence_checks(ty, form)));
            }
        }
    }
    if want(Suite::Global) {
        for (dh, label) in BCFG_PAIRS {
            out.push(Case::new(format!("bcfg/{dh}/{label}"), move || bcfg_checks(dh, label)));
        }
    }
    if want(Suite::Langlands) {
        for ty in LANGLANDS_TYPES {
            out.push(Case::new(format!("langlands/{ty}"), move || langlands_checks(ty)));
        }
    }
    out
}

/// Runs `cases` on `jobs` workers; results keep the case order.
pub fn run_cases(cases: &[Case], jobs: usize) -> Vec<Check> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let per_case: Vec<Vec<Check>> = pool.install(|| cases.par_iter().map(Case::run).collect());
    per_case.into_iter().flatten().collect()
}
