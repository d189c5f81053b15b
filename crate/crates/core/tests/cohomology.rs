use cameral_core::folding::{FoldedDatum, SymmetryLabel};
use cameral_core::oracle::{chain_complex_euler, oracle_report, riemann_hurwitz_euler, riemann_hurwitz_genus, DEFAULT_CAP};
use cameral_core::prym::{
    expected_torsion, hitchin_dim, hurwitz_move, langlands_report, plan_from_counts, prym_lattice, verify_bcfg,
    BranchPlan, HitchinConfig,
};
use cameral_core::rootdatum::{LatticeForm, RootDatum};
use cameral_core::surfcoh::{compare_along, h1_compactified, h1_open, invariants_of_symmetry, MonodromyDatum};
use cameral_core::{FgAbGroup, Int, IntMatrix};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn rd(s: &str) -> RootDatum {
    RootDatum::build(s.parse().unwrap()).unwrap()
}

fn config(s: &str, g: usize, form: LatticeForm) -> HitchinConfig {
    HitchinConfig::generic(rd(s), g, form).unwrap()
}

fn shuffled(cfg: &HitchinConfig, moves: &[usize]) -> Option<HitchinConfig> {
    let mut plan = cfg.plan.clone();
    for &i in moves {
        plan = hurwitz_move(&cfg.datum, &plan, i % (plan.len() - 1));
    }
    HitchinConfig::new(cfg.datum.clone(), cfg.genus, cfg.form, plan).ok()
}

#[test]
fn a1_open_and_compactified() {
    let md = config("A1", 2, LatticeForm::Adjoint).monodromy().unwrap();
    let open = h1_open(&md).unwrap();
    assert_eq!(open.group.to_string(), "Z^7 + Z/2");
    let closed = h1_compactified(&md).unwrap();
    assert_eq!(closed.group.to_string(), "Z^6");
    assert!(closed.torsion_annihilated());
}

#[test]
fn rank_law_and_torsion_small_types() {
    for s in ["A1", "A2", "B2", "G2"] {
        for form in [LatticeForm::Adjoint, LatticeForm::SimplyConnected] {
            let cfg = config(s, 2, form);
            let rep = prym_lattice(&cfg).unwrap();
            assert!(rep.pass(), "{s} {form}: {:?}", rep.verdicts);
            assert_eq!(rep.lattice.rank, 2 * hitchin_dim(&cfg.datum, 2).unwrap());
            assert!(rep.cohomology.torsion_annihilated());
        }
    }
}

#[test]
fn expected_torsion_table() {
    let t = |s: &str| expected_torsion(&rd(s), LatticeForm::SimplyConnected).to_string();
    assert_eq!(t("A2"), "Z/3");
    assert_eq!(t("A3"), "Z/4");
    assert_eq!(t("B3"), "Z/2");
    assert_eq!(t("D4"), "Z/2 + Z/2");
    assert_eq!(t("C3"), "0");
    assert_eq!(t("G2"), "0");
    assert_eq!(expected_torsion(&rd("A3"), LatticeForm::Adjoint).to_string(), "0");
}

#[test]
fn identity_and_negation_are_isomorphisms() {
    let md = config("A2", 2, LatticeForm::SimplyConnected).monodromy().unwrap();
    let res = h1_compactified(&md).unwrap();
    let k = md.generators();
    for phi in [IntMatrix::identity(2), IntMatrix::identity(2).neg()] {
        let rep = compare_along(&res, &res, &phi, k).unwrap();
        assert!(rep.bijective());
    }
    let rep = compare_along(&res, &res, &IntMatrix::identity(2).scale(&Int::from(2)), k).unwrap();
    assert!(rep.lands_in_target);
    assert!(!rep.cokernel.is_trivial());
}

#[test]
fn negation_symmetry_kills_free_rank_one() {
    // Trivial monodromy on Z with the symmetry −1: H¹ = Z^{2g}, invariants 0.
    let one = IntMatrix::identity(1);
    let md = MonodromyDatum::new(2, 1, vec![one.clone(); 4], Vec::new(), Vec::new(), vec![one.neg()]).unwrap();
    let res = h1_compactified(&md).unwrap();
    assert!(res.group.same_type(&FgAbGroup::free(4)));
    assert!(invariants_of_symmetry(&res, &md).unwrap().group.is_trivial());
}

#[test]
fn bcfg_a3() {
    let fd = FoldedDatum::fold("A3".parse().unwrap(), SymmetryLabel::Z2).unwrap();
    let rep = verify_bcfg(&fd, 2).unwrap();
    assert!(rep.pass(), "{:?}", rep.verdicts);
    assert!(rep.iota.bijective());
}

#[test]
fn langlands_pairs() {
    for s in ["A1", "B2", "G2"] {
        let rep = langlands_report(s.parse().unwrap(), 2).unwrap();
        assert_eq!(rep.adjoint.lattice.rank, rep.dual_sc.lattice.rank);
        assert!(rep.adjoint.lattice.torsion().is_trivial());
        assert!(rep.verdicts.iter().find(|v| v.name == "pairing_unimodular").is_some_and(|v| v.pass), "{s}");
    }
}

#[test]
fn handle_choices_do_not_matter_for_a1() {
    let base = config("A1", 2, LatticeForm::SimplyConnected);
    let reference = prym_lattice(&base).unwrap().lattice;
    for mask in 1..16u32 {
        let handles: Vec<Vec<usize>> = (0..4).map(|i| if mask >> i & 1 == 1 { vec![0] } else { vec![] }).collect();
        let counts = BTreeMap::from([(0usize, 4usize)]);
        let plan = plan_from_counts(&base.datum, &counts, handles).unwrap();
        let cfg = HitchinConfig::new(base.datum.clone(), 2, base.form, plan).unwrap();
        assert_eq!(prym_lattice(&cfg).unwrap().lattice, reference, "mask {mask}");
    }
}

#[test]
fn oracle_agreement_small() {
    for s in ["A1", "A2", "B2"] {
        for form in [LatticeForm::Adjoint, LatticeForm::SimplyConnected] {
            let cfg = config(s, 2, form);
            let rep = oracle_report(&cfg, DEFAULT_CAP).unwrap();
            assert!(rep.actions_commute);
            assert_eq!(rep.invariant_rank, prym_lattice(&cfg).unwrap().lattice.rank, "{s} {form}");
            let r = cfg.datum.rank() as i64;
            assert_eq!(rep.induced_rank as i64, 2 * rep.cover_genus * r, "{s} {form}");
            assert_eq!(rep.h0_rank, cfg.datum.rank());
        }
    }
}

#[test]
fn euler_counts_agree() {
    for s in ["A1", "A2", "A3", "B2", "G2"] {
        let cfg = config(s, 2, LatticeForm::Adjoint);
        let rh = riemann_hurwitz_euler(&cfg, DEFAULT_CAP).unwrap();
        assert_eq!(chain_complex_euler(&cfg, DEFAULT_CAP).unwrap(), rh, "{s}");
        assert_eq!(riemann_hurwitz_genus(&cfg, DEFAULT_CAP).unwrap(), 1 - rh / 2);
    }
    assert_eq!(riemann_hurwitz_genus(&config("A1", 2, LatticeForm::Adjoint), DEFAULT_CAP).unwrap(), 5);
}

#[test]
fn plans_must_cover_simple_roots() {
    let r = rd("B2");
    let plan = BranchPlan { sequence: vec![0, 0], handles: vec![Vec::new(); 4] };
    assert!(HitchinConfig::new(r, 2, LatticeForm::Adjoint, plan).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn plan_independence_under_braid_moves(
        moves in proptest::collection::vec(0usize..64, 1..12),
        sc in any::<bool>(),
        b2 in any::<bool>(),
    ) {
        let form = if sc { LatticeForm::SimplyConnected } else { LatticeForm::Adjoint };
        let base = config(if b2 { "B2" } else { "A2" }, 2, form);
        let reference = prym_lattice(&base).unwrap().lattice;
        if let Some(cfg) = shuffled(&base, &moves) {
            prop_assert_eq!(cfg.plan.len(), base.plan.len());
            prop_assert_eq!(prym_lattice(&cfg).unwrap().lattice, reference);
        }
    }

    #[test]
    fn oracle_matches_after_braid_moves(moves in proptest::collection::vec(0usize..64, 1..8)) {
        let base = config("A2", 2, LatticeForm::Adjoint);
        if let Some(cfg) = shuffled(&base, &moves) {
            let rep = oracle_report(&cfg, DEFAULT_CAP).unwrap();
            prop_assert_eq!(rep.invariant_rank, prym_lattice(&cfg).unwrap().lattice.rank);
        }
    }
}
