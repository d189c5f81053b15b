//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact. Expected values are written out literally here
//! rather than taken from the library, so a wrong library table cannot make
//! its own check pass.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use cameral_core::folding::{FoldedDatum, SymmetryLabel};
use cameral_core::oracle::{chain_complex_euler, oracle_prym_rank, riemann_hurwitz_euler, DEFAULT_CAP};
use cameral_core::prym::{langlands_report, plan_variants, prym_lattice, verify_bcfg, HitchinConfig};
use cameral_core::rootdatum::{all_types, fixed_sublattice, DynkinType, LatticeForm, RootDatum};
use cameral_core::{FgAbGroup, IntMatrix};
use num_traits::One;

/// Allowed difference for every rank and Euler-characteristic comparison.
const RANK_TOLERANCE: i64 = 0;

const ADJ: LatticeForm = LatticeForm::Adjoint;
const SC: LatticeForm = LatticeForm::SimplyConnected;

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), summary: String::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn ty(s: &str) -> DynkinType {
    s.parse().unwrap()
}

fn rd(s: &str) -> RootDatum {
    RootDatum::build(ty(s)).unwrap()
}

fn ranks_match(a: usize, b: usize) -> bool {
    (a as i64 - b as i64).abs() <= RANK_TOLERANCE
}

/// Torsion written as a list of invariant factors.
fn torsion(factors: &[i64]) -> FgAbGroup {
    let f: Vec<_> = factors.iter().map(|&d| d.into()).collect();
    FgAbGroup::from_diagonal(0, &f)
}

fn label(s: &str) -> SymmetryLabel {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let rows = [
        ("A3", "Z2", "B2"),
        ("A5", "Z2", "B3"),
        ("A7", "Z2", "B4"),
        ("A9", "Z2", "B5"),
        ("A11", "Z2", "B6"),
        ("D3", "Z2", "C2"),
        ("D4", "Z2", "C3"),
        ("D5", "Z2", "C4"),
        ("D6", "Z2", "C5"),
        ("D7", "Z2", "C6"),
        ("E6", "Z2", "F4"),
        ("D4", "S3", "G2"),
    ];
    let mut o = Outcome::new();
    for (dh, c, expected) in rows {
        match FoldedDatum::fold(ty(dh), label(c)) {
            Ok(fd) => {
                let got = fd.folded.dynkin.to_string();
                o.check(got == expected, || format!("{dh}/{c}: folded {got}, expected {expected}"));
                o.check(fd.restriction_matches(), || format!("{dh}/{c}: restricted reflections differ"));
                o.check(fd.orbits_orthogonal(), || format!("{dh}/{c}: orbit not orthogonal"));
            }
            Err(e) => o.failures.push(format!("{dh}/{c}: {e}")),
        }
    }
    o.summary = format!("{} table rows", rows.len());
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let folded = [("A3", "Z2"), ("A5", "Z2"), ("A7", "Z2"), ("A9", "Z2"), ("A11", "Z2"), ("D3", "Z2"), ("D4", "Z2"),
        ("D5", "Z2"), ("D6", "Z2"), ("D7", "Z2"), ("E6", "Z2"), ("D4", "S3")];
    for (dh, c) in folded {
        let fd = FoldedDatum::fold(ty(dh), label(c)).unwrap();
        let r = fd.fixed_lattice().cols();
        o.check(r == 0, || format!("{dh}/{c}: fixed rank {r}"));
    }
    let plain: Vec<DynkinType> = all_types(8).into_iter().filter(|d| d.family.is_simply_laced()).collect();
    for &d in &plain {
        let rd = RootDatum::build(d).unwrap();
        let r = fixed_sublattice(&rd.simple_reflections(), &IntMatrix::identity(rd.rank())).unwrap().cols();
        o.check(r == 0, || format!("{d}: fixed rank {r}"));
    }
    o.summary = format!("{} folded pairs, {} ADE types", folded.len(), plain.len());
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let mut roots = 0;
    let types = all_types(8);
    for &d in &types {
        let rd = RootDatum::build(d).unwrap();
        for k in 0..rd.num_roots() {
            roots += 1;
            let e = rd.epsilon(k, ADJ).unwrap();
            o.check(e.is_one(), || format!("{d} root {k}: epsilon {e}"));
        }
    }
    o.summary = format!("{} types, {roots} roots", types.len());
    o
}

/// `dim G` for the rank-law types.
const DIM_G: [(&str, usize); 9] =
    [("A1", 3), ("A2", 8), ("A3", 15), ("B2", 10), ("B3", 21), ("C3", 21), ("D4", 28), ("G2", 14), ("F4", 52)];

fn prym_runs() -> Vec<(&'static str, LatticeForm, usize, FgAbGroup)> {
    let mut out = Vec::new();
    for (t, _) in DIM_G {
        for form in [ADJ, SC] {
            for g in [2, 3] {
                let cfg = HitchinConfig::generic(rd(t), g, form).unwrap();
                out.push((t, form, g, prym_lattice(&cfg).unwrap().lattice));
            }
        }
    }
    out.push(("C2", SC, 2, prym_lattice(&HitchinConfig::generic(rd("C2"), 2, SC).unwrap()).unwrap().lattice));
    out
}

fn criterion_4(runs: &[(&str, LatticeForm, usize, FgAbGroup)]) -> Outcome {
    let mut o = Outcome::new();
    let mut n = 0;
    for (t, form, g, lat) in runs {
        let Some(&(_, dim)) = DIM_G.iter().find(|(s, _)| s == t) else { continue };
        n += 1;
        let expected = 2 * (g - 1) * dim;
        o.check(ranks_match(lat.rank, expected), || format!("{t} {form} g={g}: rank {}, expected {expected}", lat.rank));
    }
    o.summary = format!("{n} runs");
    o
}

fn criterion_5(runs: &[(&str, LatticeForm, usize, FgAbGroup)]) -> Outcome {
    let sc_expected: [(&str, &[i64]); 8] = [
        ("A1", &[2]),
        ("A2", &[3]),
        ("A3", &[4]),
        ("B3", &[2]),
        ("D4", &[2, 2]),
        ("G2", &[]),
        ("C2", &[]),
        ("C3", &[]),
    ];
    let mut o = Outcome::new();
    let mut n = 0;
    for (t, form, g, lat) in runs {
        let expected = match form {
            LatticeForm::Adjoint => torsion(&[]),
            LatticeForm::SimplyConnected => match sc_expected.iter().find(|(s, _)| s == t) {
                Some((_, f)) => torsion(f),
                None => continue,
            },
        };
        n += 1;
        let got = lat.torsion();
        o.check(got.same_type(&expected), || format!("{t} {form} g={g}: torsion {got}, expected {expected}"));
    }
    o.summary = format!("{n} runs");
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let pairs = [("A3", "Z2", "B2"), ("A5", "Z2", "B3"), ("D4", "Z2", "C3"), ("D4", "S3", "G2"), ("E6", "Z2", "F4")];
    for (dh, c, folded) in pairs {
        let fd = FoldedDatum::fold(ty(dh), label(c)).unwrap();
        o.check(fd.folded.dynkin.to_string() == folded, || format!("{dh}/{c}: folded {}", fd.folded.dynkin));
        match verify_bcfg(&fd, 2) {
            Ok(rep) => {
                let m = &rep.iota.map;
                o.check(m.lands_in_target, || format!("{dh}/{c}: image not in invariants"));
                o.check(m.kernel.is_trivial(), || format!("{dh}/{c}: kernel {}", m.kernel));
                o.check(m.cokernel.is_trivial(), || format!("{dh}/{c}: cokernel {}", m.cokernel));
                o.check(rep.iota.bijective(), || format!("{dh}/{c}: iota not bijective"));
            }
            Err(e) => o.failures.push(format!("{dh}/{c}: {e}")),
        }
    }
    o.summary = format!("{} pairs at g = 2", pairs.len());
    o
}

fn criterion_7() -> Outcome {
    // Torsion of the simply connected dual, per criterion text and the Sp(2r) exception.
    let cases: [(&str, &str, &[i64]); 5] =
        [("A1", "A1", &[2]), ("A2", "A2", &[3]), ("B2", "C2", &[]), ("B3", "C3", &[]), ("G2", "G2", &[])];
    let mut o = Outcome::new();
    for (d, dual, sc_torsion) in cases {
        match langlands_report(ty(d), 2) {
            Ok(rep) => {
                let (a, s) = (&rep.adjoint.lattice, &rep.dual_sc.lattice);
                o.check(rep.dual_type.to_string() == dual, || format!("{d}: dual {}", rep.dual_type));
                o.check(ranks_match(a.rank, s.rank), || format!("{d}: ranks {} vs {}", a.rank, s.rank));
                o.check(a.torsion().is_trivial(), || format!("{d}: adjoint torsion {}", a.torsion()));
                let expected = torsion(sc_torsion);
                o.check(s.torsion().same_type(&expected), || {
                    format!("{d}: dual sc torsion {}, expected {expected}", s.torsion())
                });
                let unimodular = rep.verdicts.iter().any(|v| v.name == "pairing_unimodular" && v.pass);
                o.check(unimodular, || format!("{d}: pairing not unimodular"));
            }
            Err(e) => o.failures.push(format!("{d}: {e}")),
        }
    }
    o.summary = format!("{} types at g = 2", cases.len());
    o
}

const ORACLE_TYPES: [&str; 5] = ["A1", "A2", "A3", "B2", "G2"];

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    for t in ORACLE_TYPES {
        for form in [ADJ, SC] {
            let cfg = HitchinConfig::generic(rd(t), 2, form).unwrap();
            let prym = prym_lattice(&cfg).unwrap().lattice.rank;
            match oracle_prym_rank(&cfg, DEFAULT_CAP) {
                Ok(r) => o.check(ranks_match(r, prym), || format!("{t} {form}: oracle {r}, prym {prym}")),
                Err(e) => o.failures.push(format!("{t} {form}: {e}")),
            }
        }
    }
    o.summary = format!("{} configs at g = 2", 2 * ORACLE_TYPES.len());
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    for t in ORACLE_TYPES {
        let cfg = HitchinConfig::generic(rd(t), 2, ADJ).unwrap();
        let rh = riemann_hurwitz_euler(&cfg, DEFAULT_CAP).unwrap();
        let cells = chain_complex_euler(&cfg, DEFAULT_CAP).unwrap();
        o.check((rh - cells).abs() <= RANK_TOLERANCE, || format!("{t}: closed form {rh}, cells {cells}"));
    }
    o.summary = format!("{} types", ORACLE_TYPES.len());
    o
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new();
    for t in ["A1", "B2"] {
        for form in [ADJ, SC] {
            let cfg = HitchinConfig::generic(rd(t), 2, form).unwrap();
            let plans = plan_variants(&cfg, 5);
            o.check(plans.len() == 5, || format!("{t} {form}: only {} plans", plans.len()));
            let distinct = plans.iter().enumerate().all(|(i, p)| plans[..i].iter().all(|q| q != p));
            o.check(distinct, || format!("{t} {form}: plans not distinct"));
            let mut seen: Option<(usize, FgAbGroup)> = None;
            for plan in plans {
                let c = HitchinConfig::new(cfg.datum.clone(), 2, form, plan).unwrap();
                let lat = prym_lattice(&c).unwrap().lattice;
                let key = (lat.rank, lat.torsion());
                match &seen {
                    None => seen = Some(key),
                    Some((r, tor)) => o.check(*r == key.0 && tor.same_type(&key.1), || {
                        format!("{t} {form}: {lat} differs from rank {r} torsion {tor}")
                    }),
                }
            }
        }
    }
    o.summary = "A1, B2 x 2 forms x 5 plans".into();
    o
}

fn verify_all_json() -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_cameral"))
        .args(["verify", "all", "--format", "json", "--jobs", "2"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok(text.lines().filter(|l| !l.trim_start().starts_with("\"wall_time_ms\"")).collect::<Vec<_>>().join("\n"))
}

fn criterion_11() -> Outcome {
    let mut o = Outcome::new();
    match (verify_all_json(), verify_all_json()) {
        (Ok(a), Ok(b)) => {
            o.check(a.contains("\"schema\": \"cameral-lattice/1\""), || "schema key missing".into());
            o.check(a == b, || "outputs differ outside the timing field".into());
            o.summary = format!("{} bytes", a.len());
        }
        (Err(e), _) | (_, Err(e)) => o.failures.push(e),
    }
    o
}

fn report(n: usize, title: &str, budget: Option<Duration>, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = run();
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        o.check(elapsed <= b, || format!("took {:.2} s, budget {} s", elapsed.as_secs_f64(), b.as_secs()));
    }
    let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
    let limit = budget.map(|b| format!(" / {} s", b.as_secs())).unwrap_or_default();
    println!("{status} criterion {n:>2}: {title} [{}] ({:.2} s{limit})", o.summary, elapsed.as_secs_f64());
    for f in &o.failures {
        println!("       {f}");
    }
    o.failures.is_empty()
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut ok = true;
    ok &= report(1, "folding table", Some(secs(1)), criterion_1);
    ok &= report(2, "fixed-lattice vanishing", Some(secs(1)), criterion_2);
    ok &= report(3, "adjoint criterion", Some(secs(1)), criterion_3);
    let start = Instant::now();
    let runs = prym_runs();
    let prym_time = start.elapsed();
    ok &= report(4, "rank law", Some(secs(60)), || {
        let mut o = criterion_4(&runs);
        o.check(prym_time <= secs(60), || format!("prym runs took {:.2} s", prym_time.as_secs_f64()));
        o.summary = format!("{}, lattices in {:.2} s", o.summary, prym_time.as_secs_f64());
        o
    });
    ok &= report(5, "torsion = center", None, || criterion_5(&runs));
    ok &= report(6, "BCFG isomorphism", Some(secs(120)), criterion_6);
    ok &= report(7, "Langlands report", Some(secs(30)), criterion_7);
    ok &= report(8, "oracle agreement", Some(secs(60)), criterion_8);
    ok &= report(9, "Riemann-Hurwitz consistency", Some(secs(10)), criterion_9);
    ok &= report(10, "plan independence", Some(secs(20)), criterion_10);
    ok &= report(11, "determinism", None, criterion_11);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
