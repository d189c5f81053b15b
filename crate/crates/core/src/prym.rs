//! Cocharacter lattices of generic Hitchin fibers.
//!
//! A generic cameral cover of a genus `g` curve is modeled by its monodromy:
//! `m = |R|(2g − 2)` branch points, each with a reflection monodromy, and
//! handle monodromies in `W`. The Prym cocharacter lattice is
//! `H¹(Σ, j_*𝓛)` with stalk `Λ(G)`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::folding::{FoldedDatum, FoldingError};
use crate::intlin::{smith_diagonal, Solver};
use crate::rootdatum::{DynkinType, Family, LatticeForm, RootDatum, RootDatumError};
use crate::surfcoh::{h1_compactified, iota_check, CohomologyResult, IotaReport, MonodromyDatum, SurfCohError};
use crate::{FgAbGroup, Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrymError {
    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(usize),
    #[error("unknown root label {0:?}")]
    UnknownRoot(String),
    #[error("simple root {0} does not occur in the branch plan")]
    MissingSimpleRoot(usize),
    #[error("no ordering of the branch plan has trivial total monodromy")]
    NoValidOrdering,
    #[error("expected {expected} handle words, got {got}")]
    HandleCount { expected: usize, got: usize },
    #[error(transparent)]
    SurfCoh(#[from] SurfCohError),
    #[error(transparent)]
    Folding(#[from] FoldingError),
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
}

/// `∑ (2d_i − 1)(g − 1)`.
pub fn hitchin_dim(rd: &RootDatum, g: usize) -> Result<usize, PrymError> {
    if g < 2 {
        return Err(PrymError::GenusTooSmall(g));
    }
    Ok(rd.degrees.iter().map(|&d| (2 * d as usize - 1) * (g - 1)).sum())
}

/// Ordered branch monodromies (positive root indices) and handle words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPlan {
    pub sequence: Vec<usize>,
    /// `2g` words in positive root indices; an empty word is the identity.
    pub handles: Vec<Vec<usize>>,
}

impl BranchPlan {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Multiplicity of each root index.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &k in &self.sequence {
            *m.entry(k).or_insert(0) += 1;
        }
        m
    }
}

/// `α_1 … α_N α_N … α_1` repeated `2(g − 1)` times: every positive root
/// occurs `4(g − 1)` times and the total monodromy is trivial.
pub fn generic_branch_plan(rd: &RootDatum, g: usize) -> BranchPlan {
    let n = rd.num_positive();
    let mut seq = Vec::with_capacity(4 * n * (g - 1));
    for _ in 0..2 * (g - 1) {
        seq.extend(0..n);
        seq.extend((0..n).rev());
    }
    BranchPlan { sequence: seq, handles: vec![Vec::new(); 2 * g] }
}

/// Comma-separated simple-root coordinates of a positive root.
pub fn root_label(rd: &RootDatum, k: usize) -> String {
    rd.roots[k].iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_root_label(rd: &RootDatum, label: &str) -> Result<usize, PrymError> {
    let coords: Result<Vec<Int>, _> = label.split(',').map(|t| t.trim().parse::<Int>()).collect();
    let coords = coords.map_err(|_| PrymError::UnknownRoot(label.to_string()))?;
    match rd.root_index(&coords) {
        Some(k) if k < rd.num_positive() => Ok(k),
        _ => Err(PrymError::UnknownRoot(label.to_string())),
    }
}

fn reflection_product(rd: &RootDatum, word: &[usize]) -> IntMatrix {
    word.iter()
        .fold(IntMatrix::identity(rd.rank()), |acc, &k| acc.mul(&rd.reflection(k)))
}

/// Orders a multiset of reflections so that the product is the identity.
/// Pairs of equal reflections cancel; the leftovers (one per odd count) are
/// ordered by backtracking, retrying with up to three copies per root.
pub fn plan_from_counts(
    rd: &RootDatum,
    counts: &BTreeMap<usize, usize>,
    handles: Vec<Vec<usize>>,
) -> Result<BranchPlan, PrymError> {
    let target = handle_commutators(rd, &handles).ok_or(PrymError::NoValidOrdering)?;
    for spare in [1usize, 3] {
        let mut seq = Vec::new();
        let mut loose = Vec::new();
        for (&k, &c) in counts {
            let keep = if c % 2 == 1 { c.min(spare) } else if spare == 3 { c.min(2) } else { 0 };
            loose.extend(std::iter::repeat_n(k, keep));
            for _ in 0..(c - keep) / 2 {
                seq.extend([k, k]);
            }
        }
        if loose.len() > 10 {
            continue;
        }
        if let Some(mut order) = order_to_identity(rd, &loose, &target) {
            order.extend(seq);
            return Ok(BranchPlan { sequence: order, handles });
        }
    }
    Err(PrymError::NoValidOrdering)
}

/// Braid move at position `i`: `(s_a, s_b) ↦ (s_b, s_{s_b(a)})`, which keeps
/// the branch product and the W-orbit multiplicities.
pub fn hurwitz_move(rd: &RootDatum, plan: &BranchPlan, i: usize) -> BranchPlan {
    let mut sequence = plan.sequence.clone();
    let (a, b) = (sequence[i], sequence[i + 1]);
    let c = rd.reflect_root(b, a);
    sequence[i] = b;
    sequence[i + 1] = if c < rd.num_positive() { c } else { rd.negative_index(c) };
    BranchPlan { sequence, handles: plan.handles.clone() }
}

/// Up to `n` distinct valid plans with the branch count of `cfg`: its own
/// plan, descendants under a fixed chain of braid moves, then plans with one
/// simple reflection placed in a single handle.
pub fn plan_variants(cfg: &HitchinConfig, n: usize) -> Vec<BranchPlan> {
    let rd = &cfg.datum;
    let valid = |p: &BranchPlan| HitchinConfig::new(rd.clone(), cfg.genus, cfg.form, p.clone()).is_ok();
    let mut out = vec![cfg.plan.clone()];
    let len = cfg.plan.len();
    let mut p = cfg.plan.clone();
    for step in 0..4 * len {
        if out.len() >= n || len < 2 {
            break;
        }
        p = hurwitz_move(rd, &p, (7 * step + 3) % (len - 1));
        if !out.contains(&p) && valid(&p) {
            out.push(p.clone());
        }
    }
    let counts = cfg.plan.counts();
    'outer: for i in 0..rd.rank() {
        for slot in 0..2 * cfg.genus {
            if out.len() >= n {
                break 'outer;
            }
            let mut handles = vec![Vec::new(); 2 * cfg.genus];
            handles[slot] = vec![rd.simple_index(i)];
            if let Ok(q) = plan_from_counts(rd, &counts, handles) {
                if !out.contains(&q) && valid(&q) {
                    out.push(q);
                }
            }
        }
    }
    out.truncate(n);
    out
}

/// Inverse of `∏ [w_i, w_{i+g}]`, which the branch product has to equal.
fn handle_commutators(rd: &RootDatum, handles: &[Vec<usize>]) -> Option<IntMatrix> {
    let g = handles.len() / 2;
    let mut p = IntMatrix::identity(rd.rank());
    for i in 0..g {
        let a = reflection_product(rd, &handles[i]);
        let b = reflection_product(rd, &handles[i + g]);
        let ai = crate::intlin::unimodular_inverse(&a)?;
        let bi = crate::intlin::unimodular_inverse(&b)?;
        p = p.mul(&a.mul(&b).mul(&ai).mul(&bi));
    }
    crate::intlin::unimodular_inverse(&p)
}

fn order_to_identity(rd: &RootDatum, items: &[usize], target: &IntMatrix) -> Option<Vec<usize>> {
    fn go(
        rd: &RootDatum,
        items: &[usize],
        used: &mut Vec<bool>,
        acc: &IntMatrix,
        out: &mut Vec<usize>,
        target: &IntMatrix,
    ) -> bool {
        if out.len() == items.len() {
            return acc == target;
        }
        for i in 0..items.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            out.push(items[i]);
            let next = acc.mul(&rd.reflection(items[i]));
            if go(rd, items, used, &next, out, target) {
                return true;
            }
            out.pop();
            used[i] = false;
        }
        false
    }
    let mut used = vec![false; items.len()];
    let mut out = Vec::new();
    go(rd, items, &mut used, &IntMatrix::identity(rd.rank()), &mut out, target).then_some(out)
}

#[derive(Clone, Debug)]
pub struct HitchinConfig {
    pub datum: RootDatum,
    pub genus: usize,
    pub form: LatticeForm,
    pub plan: BranchPlan,
}

impl HitchinConfig {
    pub fn generic(datum: RootDatum, genus: usize, form: LatticeForm) -> Result<Self, PrymError> {
        if genus < 2 {
            return Err(PrymError::GenusTooSmall(genus));
        }
        let plan = generic_branch_plan(&datum, genus);
        Self::new(datum, genus, form, plan)
    }

    pub fn new(datum: RootDatum, genus: usize, form: LatticeForm, plan: BranchPlan) -> Result<Self, PrymError> {
        if genus < 2 {
            return Err(PrymError::GenusTooSmall(genus));
        }
        if plan.handles.len() != 2 * genus {
            return Err(PrymError::HandleCount { expected: 2 * genus, got: plan.handles.len() });
        }
        let counts = plan.counts();
        for i in 0..datum.rank() {
            if !counts.contains_key(&datum.simple_index(i)) {
                return Err(PrymError::MissingSimpleRoot(i));
            }
        }
        let cfg = HitchinConfig { datum, genus, form, plan };
        cfg.ambient_monodromy()?;
        Ok(cfg)
    }

    pub fn branch_count(&self) -> usize {
        self.plan.len()
    }

    /// Monodromy on the ambient coweight lattice (checks the relation).
    pub fn ambient_monodromy(&self) -> Result<MonodromyDatum, PrymError> {
        let rd = &self.datum;
        let handles = self.plan.handles.iter().map(|w| reflection_product(rd, w)).collect();
        let branches = self.plan.sequence.iter().map(|&k| rd.reflection(k)).collect();
        let labels = self.plan.sequence.iter().map(|&k| root_label(rd, k)).collect();
        Ok(MonodromyDatum::new(self.genus, rd.rank(), handles, branches, labels, Vec::new())?)
    }

    /// Monodromy on `Λ(G)` in its own basis.
    pub fn monodromy(&self) -> Result<MonodromyDatum, PrymError> {
        let md = self.ambient_monodromy()?;
        Ok(md.restrict(self.datum.lattice(self.form))?)
    }
}

/// Whether `Δ` is isomorphic to some `C_r` (including `B_2 = C_2` and `A_1 = C_1`).
pub fn is_symplectic_type(d: DynkinType) -> bool {
    matches!((d.family, d.rank), (Family::C, _) | (Family::B, 2) | (Family::A, 1))
}

/// Torsion predicted for the Prym lattice: none for adjoint groups, the
/// center for simply connected groups, except `Sp(2r)` where it vanishes.
pub fn expected_torsion(rd: &RootDatum, form: LatticeForm) -> FgAbGroup {
    match form {
        LatticeForm::Adjoint => FgAbGroup::trivial(),
        LatticeForm::SimplyConnected if is_symplectic_type(rd.dynkin) => FgAbGroup::trivial(),
        LatticeForm::SimplyConnected => rd.center(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub computed: String,
    pub expected: String,
}

impl Verdict {
    pub fn new(name: &str, computed: impl ToString, expected: impl ToString, pass: bool) -> Self {
        Verdict { name: name.to_string(), pass, computed: computed.to_string(), expected: expected.to_string() }
    }

    pub fn eq<T: PartialEq + ToString>(name: &str, computed: T, expected: T) -> Self {
        let pass = computed == expected;
        Verdict::new(name, computed.to_string(), expected.to_string(), pass)
    }
}

#[derive(Clone, Debug)]
pub struct PrymReport {
    pub lattice: FgAbGroup,
    pub torsion_free: FgAbGroup,
    pub expected_rank: usize,
    pub expected_torsion: FgAbGroup,
    pub verdicts: Vec<Verdict>,
    pub cohomology: CohomologyResult,
}

impl PrymReport {
    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

pub fn prym_lattice(cfg: &HitchinConfig) -> Result<PrymReport, PrymError> {
    let md = cfg.monodromy()?;
    let res = h1_compactified(&md)?;
    let expected_rank = 2 * hitchin_dim(&cfg.datum, cfg.genus)?;
    let expected_torsion = expected_torsion(&cfg.datum, cfg.form);
    let lattice = FgAbGroup { generators: None, ..res.group.clone() };
    let verdicts = vec![
        Verdict::eq("rank", lattice.rank, expected_rank),
        Verdict::new(
            "torsion",
            lattice.torsion(),
            &expected_torsion,
            lattice.torsion().same_type(&expected_torsion),
        ),
        Verdict::eq("rank_law", lattice.rank, (2 * cfg.genus - 2) * md.module_rank + md.num_branches()),
    ];
    Ok(PrymReport {
        torsion_free: lattice.torsion_free_part(),
        lattice,
        expected_rank,
        expected_torsion,
        verdicts,
        cohomology: res,
    })
}

/// Monodromy on `Λ_h` for the generic plan of the folded type, with `C` as
/// aux symmetries.
pub fn folded_monodromy(fd: &FoldedDatum, g: usize) -> Result<MonodromyDatum, PrymError> {
    if g < 2 {
        return Err(PrymError::GenusTooSmall(g));
    }
    let plan = generic_branch_plan(&fd.folded, g);
    let n = fd.homogeneous.rank();
    let branches = plan.sequence.iter().map(|&k| fd.folded_reflections[k].clone()).collect();
    let labels = plan.sequence.iter().map(|&k| root_label(&fd.folded, k)).collect();
    Ok(MonodromyDatum::with_branches(g, n, branches, labels, fd.symmetry.generator_matrices.clone())?)
}

#[derive(Clone, Debug)]
pub struct BcfgReport {
    pub iota: IotaReport,
    pub verdicts: Vec<Verdict>,
}

impl BcfgReport {
    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

pub fn verify_bcfg(fd: &FoldedDatum, g: usize) -> Result<BcfgReport, PrymError> {
    let md = folded_monodromy(fd, g)?;
    let iota = iota_check(fd, &md)?;
    let m = &iota.map;
    let mut verdicts = vec![
        Verdict::new("lands_in_invariants", m.lands_in_target, true, m.lands_in_target),
        Verdict::new("kernel", &m.kernel, "0", m.kernel.is_trivial()),
        Verdict::new("cokernel", &m.cokernel, "0", m.cokernel.is_trivial()),
        Verdict::new("source_vs_invariants", &m.source, &m.target, m.source.same_type(&m.target)),
    ];
    for b in &iota.branches {
        verdicts.push(Verdict::new(
            &format!("branch[{}]", b.label),
            format!("{} -> {}", b.source, b.target),
            "bijective",
            b.bijective(),
        ));
    }
    Ok(BcfgReport { iota, verdicts })
}

#[derive(Clone, Debug)]
pub struct LanglandsReport {
    pub adjoint: PrymReport,
    pub dual_sc: PrymReport,
    pub dual_type: DynkinType,
    pub pairing: IntMatrix,
    pub verdicts: Vec<Verdict>,
}

impl LanglandsReport {
    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

/// Gram matrix between `Λ_ad(Δ)` and the simply connected lattice of `^LΔ`.
///
/// The dual datum's ambient coordinates are fundamental weights of `Δ`; they
/// are converted to simple-root coordinates, which pair with coweights by the
/// dot product.
pub fn coefficient_pairing(rd: &RootDatum, dual: &RootDatum) -> IntMatrix {
    let to_roots = Solver::new(&rd.cartan.transpose()).expect("Cartan matrix is nondegenerate");
    let coords = to_roots
        .solve_columns(&dual.coroot_lattice)
        .expect("coroots of the dual are roots");
    coords.transpose().mul(&rd.coweight_lattice)
}

pub fn langlands_report(d: DynkinType, g: usize) -> Result<LanglandsReport, PrymError> {
    let rd = RootDatum::build(d)?;
    let dual = rd.langlands_dual();
    let plan = generic_branch_plan(&rd, g);
    let adjoint = prym_lattice(&HitchinConfig::new(rd.clone(), g, LatticeForm::Adjoint, plan.clone())?)?;
    let dual_sc = prym_lattice(&HitchinConfig::new(dual.clone(), g, LatticeForm::SimplyConnected, plan)?)?;

    let pairing = coefficient_pairing(&rd, &dual);
    let unimodular = smith_diagonal(&pairing).iter().all(|x| x.is_one());
    let sc_basis = &dual.coroot_lattice;
    let equivariant = (0..rd.num_roots()).all(|k| {
        let s_ad = rd.reflection(k);
        let s_sc = RootDatum::restrict(&dual.reflection(k), sc_basis, k).expect("reflections preserve Λ_sc");
        s_sc.transpose().mul(&pairing).mul(&s_ad) == pairing
    });
    let expected = expected_torsion(&dual, LatticeForm::SimplyConnected);
    let verdicts = vec![
        Verdict::eq("equal_rank", dual_sc.lattice.rank, adjoint.lattice.rank),
        Verdict::new("adjoint_torsion", adjoint.lattice.torsion(), "0", adjoint.lattice.is_free()),
        Verdict::new(
            "dual_sc_torsion",
            dual_sc.lattice.torsion(),
            &expected,
            dual_sc.lattice.torsion().same_type(&expected),
        ),
        Verdict::new("pairing_unimodular", unimodular, true, unimodular),
        Verdict::new("pairing_equivariant", equivariant, true, equivariant),
    ];
    Ok(LanglandsReport { adjoint, dual_sc, dual_type: dual.dynkin, pairing, verdicts })
}

/// One row of [`stalk_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StalkRow {
    pub root: String,
    pub epsilon: Int,
    /// `Some(true)` when `ε_α = 1`; `None` when the sheaf-level claim is not
    /// decided by the lattice computation.
    pub criterion: Option<bool>,
}

/// `ε_α` for every positive root of `rd` on `Λ(G)`.
pub fn stalk_report(rd: &RootDatum, form: LatticeForm) -> Vec<StalkRow> {
    (0..rd.num_positive())
        .map(|k| {
            let epsilon = rd.epsilon(k, form).expect("index in range");
            let criterion = match form {
                LatticeForm::Adjoint => Some(epsilon.is_one()),
                LatticeForm::SimplyConnected if epsilon.is_one() => Some(true),
                LatticeForm::SimplyConnected => None,
            };
            StalkRow { root: root_label(rd, k), epsilon, criterion }
        })
        .collect()
}

/// `Λ(G)`'s coinvariants `L/(1 − s_α)L` per positive root, for diagnostics.
pub fn local_coinvariants(rd: &RootDatum, form: LatticeForm) -> Vec<FgAbGroup> {
    let lat = rd.lattice(form);
    (0..rd.num_positive())
        .map(|k| {
            let s = RootDatum::restrict(&rd.reflection(k), lat, k).expect("reflections preserve Λ");
            crate::surfcoh::coinvariants(&s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(s: &str) -> RootDatum {
        RootDatum::build(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn hitchin_dim_examples() {
        assert_eq!(hitchin_dim(&rd("A1"), 2).unwrap(), 3);
        assert_eq!(hitchin_dim(&rd("G2"), 2).unwrap(), 14);
        assert!(matches!(hitchin_dim(&rd("A1"), 1), Err(PrymError::GenusTooSmall(1))));
        for t in ["A3", "B4", "E6", "F4"] {
            let r = rd(t);
            for g in 2..5 {
                assert_eq!(hitchin_dim(&r, g).unwrap(), (g - 1) * (r.num_roots() + r.rank()));
            }
        }
    }

    #[test]
    fn generic_plan_examples() {
        let p = generic_branch_plan(&rd("A1"), 2);
        assert_eq!(p.sequence, vec![0, 0, 0, 0]);
        assert_eq!(generic_branch_plan(&rd("B2"), 2).len(), 16);
        assert_eq!(generic_branch_plan(&rd("G2"), 2).len(), 24);
        let c = generic_branch_plan(&rd("B2"), 3).counts();
        assert!(c.values().all(|&v| v == 8));
    }

    #[test]
    fn a1_lattices() {
        let a1 = rd("A1");
        let ad = prym_lattice(&HitchinConfig::generic(a1.clone(), 2, LatticeForm::Adjoint).unwrap()).unwrap();
        assert_eq!(ad.lattice.to_string(), "Z^6");
        assert!(ad.pass());
        let sc = prym_lattice(&HitchinConfig::generic(a1, 2, LatticeForm::SimplyConnected).unwrap()).unwrap();
        // Zα^∨ with s_α = −1 is the same module as the adjoint one.
        assert_eq!(sc.lattice.to_string(), "Z^6");
    }

    #[test]
    fn c2_sc_torsion_free() {
        let r = prym_lattice(&HitchinConfig::generic(rd("C2"), 2, LatticeForm::SimplyConnected).unwrap()).unwrap();
        assert_eq!(r.lattice.to_string(), "Z^20");
        assert!(r.pass());
    }

    #[test]
    fn plan_validation() {
        let a2 = rd("A2");
        let mut counts = BTreeMap::new();
        counts.insert(0usize, 2usize);
        let plan = plan_from_counts(&a2, &counts, vec![vec![]; 4]).unwrap();
        assert!(matches!(
            HitchinConfig::new(a2.clone(), 2, LatticeForm::Adjoint, plan),
            Err(PrymError::MissingSimpleRoot(1))
        ));
        counts.insert(1, 1);
        assert!(matches!(plan_from_counts(&a2, &counts, vec![vec![]; 4]), Err(PrymError::NoValidOrdering)));
        // (s1 s2)^3 = 1 needs the odd counts interleaved.
        let mut counts = BTreeMap::new();
        counts.insert(0usize, 3usize);
        counts.insert(1, 3);
        let p = plan_from_counts(&a2, &counts, vec![vec![]; 4]).unwrap();
        assert!(HitchinConfig::new(a2, 2, LatticeForm::Adjoint, p).is_ok());
    }

    #[test]
    fn labels_roundtrip() {
        let b3 = rd("B3");
        for k in 0..b3.num_positive() {
            assert_eq!(parse_root_label(&b3, &root_label(&b3, k)).unwrap(), k);
        }
        assert!(parse_root_label(&b3, "7,7,7").is_err());
        assert!(parse_root_label(&b3, "-1,0,0").is_err());
    }

    #[test]
    fn stalks() {
        let a1 = rd("A1");
        assert!(stalk_report(&a1, LatticeForm::Adjoint).iter().all(|r| r.criterion == Some(true)));
        let sc = stalk_report(&a1, LatticeForm::SimplyConnected);
        assert_eq!(sc[0].epsilon, Int::from(2));
        assert_eq!(sc[0].criterion, None);
    }

    #[test]
    fn bcfg_small() {
        let fd = FoldedDatum::fold("A3".parse().unwrap(), "Z2".parse().unwrap()).unwrap();
        let r = verify_bcfg(&fd, 2).unwrap();
        assert!(r.pass(), "{:?}", r.verdicts);
        let triv = FoldedDatum::fold("A2".parse().unwrap(), "trivial".parse().unwrap()).unwrap();
        assert!(verify_bcfg(&triv, 2).unwrap().pass());
    }

    #[test]
    fn langlands_small() {
        let r = langlands_report("B2".parse().unwrap(), 2).unwrap();
        assert!(r.pass(), "{:?}", r.verdicts);
        assert_eq!(r.dual_type.to_string(), "C2");
        let g = langlands_report("G2".parse().unwrap(), 2).unwrap();
        assert!(g.pass());
    }
}
