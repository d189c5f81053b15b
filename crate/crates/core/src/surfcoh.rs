//! First cohomology of punctured surface groups with lattice coefficients.
//!
//! The punctured surface `Σ° − {y₀}` has free fundamental group on
//! `δ_1, ..., δ_{2g}, γ_1, ..., γ_m`. The loop around `y₀` is
//! `γ₀ = ∏ [δ_i, δ_{i+g}] ∏ γ_j` and acts trivially. A cocycle is a tuple of
//! values on the free generators; `H¹(Σ, j_*𝓛)` consists of the classes
//! with `c(γ₀) = 0` and `c(γ_j) ∈ (1 − ρ_j)L` for every branch point.

use num_traits::Zero;

use crate::intlin::{
    column_basis, kernel_basis, lattice_sum, preimage_lattice, subgroup_quotient, unimodular_inverse, vec_ops,
    IntLinError, Solver,
};
use crate::{FgAbGroup, Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfCohError {
    #[error("genus must be at least 1, got {0}")]
    Genus(usize),
    #[error("expected {expected} handle monodromies, got {got}")]
    HandleCount { expected: usize, got: usize },
    #[error("matrix {what} has shape {shape:?}, expected {expected}x{expected}")]
    Shape {
        what: String,
        shape: (usize, usize),
        expected: usize,
    },
    #[error("monodromy {0} is not invertible over Z")]
    NotInvertible(usize),
    #[error("surface relation violated: product of monodromies is not the identity")]
    RelationViolated,
    #[error("aux symmetry {0} does not commute with the monodromy")]
    NonCommutingSymmetry(usize),
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("coboundaries are not contained in the cocycle lattice")]
    InternalContainment,
    #[error("basis change does not preserve the coefficient lattice")]
    Restriction,
    #[error(transparent)]
    IntLin(#[from] IntLinError),
}

/// A free generator or its inverse. Generators `0..2g` are the `δ_i`, the
/// rest are the `γ_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inv(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }
}

/// Values of a cocycle on the free generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub values: Vec<Vec<Int>>,
}

impl Cocycle {
    pub fn zero(generators: usize, rank: usize) -> Self {
        Cocycle { values: vec![vec![Int::zero(); rank]; generators] }
    }

    pub fn from_flat(v: &[Int], rank: usize) -> Self {
        if rank == 0 {
            return Cocycle { values: Vec::new() };
        }
        Cocycle { values: v.chunks(rank).map(|c| c.to_vec()).collect() }
    }

    pub fn flat(&self) -> Vec<Int> {
        self.values.iter().flatten().cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyDatum {
    pub genus: usize,
    pub module_rank: usize,
    pub handle_monodromies: Vec<IntMatrix>,
    pub branch_monodromies: Vec<IntMatrix>,
    pub branch_labels: Vec<String>,
    pub aux_symmetries: Vec<IntMatrix>,
    inverses: Vec<IntMatrix>,
}

fn commutator(a: &IntMatrix, ai: &IntMatrix, b: &IntMatrix, bi: &IntMatrix) -> IntMatrix {
    a.mul(b).mul(ai).mul(bi)
}

impl MonodromyDatum {
    /// Validates shapes, invertibility, the surface relation and the
    /// commutation of the auxiliary symmetries.
    pub fn new(
        genus: usize,
        module_rank: usize,
        handle_monodromies: Vec<IntMatrix>,
        branch_monodromies: Vec<IntMatrix>,
        branch_labels: Vec<String>,
        aux_symmetries: Vec<IntMatrix>,
    ) -> Result<Self, SurfCohError> {
        if genus == 0 {
            return Err(SurfCohError::Genus(genus));
        }
        let r = module_rank;
        if handle_monodromies.len() != 2 * genus {
            return Err(SurfCohError::HandleCount { expected: 2 * genus, got: handle_monodromies.len() });
        }
        let all = handle_monodromies.iter().chain(&branch_monodromies).chain(&aux_symmetries);
        for (k, m) in all.enumerate() {
            if m.shape() != (r, r) {
                return Err(SurfCohError::Shape { what: format!("#{k}"), shape: m.shape(), expected: r });
            }
        }
        let mut inverses = Vec::new();
        for (k, m) in handle_monodromies.iter().chain(&branch_monodromies).enumerate() {
            inverses.push(unimodular_inverse(m).ok_or(SurfCohError::NotInvertible(k))?);
        }
        let mut labels = branch_labels;
        labels.resize(branch_monodromies.len(), String::new());
        let md = MonodromyDatum {
            genus,
            module_rank,
            handle_monodromies,
            branch_monodromies,
            branch_labels: labels,
            aux_symmetries,
            inverses,
        };
        if !md.relation_product().is_identity() {
            return Err(SurfCohError::RelationViolated);
        }
        for (k, s) in md.aux_symmetries.iter().enumerate() {
            if unimodular_inverse(s).is_none() {
                return Err(SurfCohError::NotInvertible(md.generators() + k));
            }
            if md.monodromies().any(|m| m.mul(s) != s.mul(m)) {
                return Err(SurfCohError::NonCommutingSymmetry(k));
            }
        }
        Ok(md)
    }

    /// Trivial handles, given branch monodromies.
    pub fn with_branches(
        genus: usize,
        module_rank: usize,
        branches: Vec<IntMatrix>,
        labels: Vec<String>,
        aux: Vec<IntMatrix>,
    ) -> Result<Self, SurfCohError> {
        let handles = vec![IntMatrix::identity(module_rank); 2 * genus];
        Self::new(genus, module_rank, handles, branches, labels, aux)
    }

    pub fn num_branches(&self) -> usize {
        self.branch_monodromies.len()
    }

    /// Number of free generators, `2g + m`.
    pub fn generators(&self) -> usize {
        2 * self.genus + self.num_branches()
    }

    pub fn monodromies(&self) -> impl Iterator<Item = &IntMatrix> {
        self.handle_monodromies.iter().chain(&self.branch_monodromies)
    }

    pub fn monodromy(&self, k: usize) -> &IntMatrix {
        let h = 2 * self.genus;
        if k < h {
            &self.handle_monodromies[k]
        } else {
            &self.branch_monodromies[k - h]
        }
    }

    pub fn monodromy_inverse(&self, k: usize) -> &IntMatrix {
        &self.inverses[k]
    }

    /// `∏ [w_i, w_{i+g}] ∏ ρ_j`.
    pub fn relation_product(&self) -> IntMatrix {
        let g = self.genus;
        let mut p = IntMatrix::identity(self.module_rank);
        for i in 0..g {
            p = p.mul(&commutator(
                &self.handle_monodromies[i],
                &self.inverses[i],
                &self.handle_monodromies[i + g],
                &self.inverses[i + g],
            ));
        }
        for b in &self.branch_monodromies {
            p = p.mul(b);
        }
        p
    }

    /// The word `γ₀ = ∏ [δ_i, δ_{i+g}] ∏ γ_j`.
    pub fn relator(&self) -> Vec<Letter> {
        let g = self.genus;
        let mut w = Vec::with_capacity(4 * g + self.num_branches());
        for i in 0..g {
            w.extend([Letter::new(i), Letter::new(i + g), Letter::inv(i), Letter::inv(i + g)]);
        }
        w.extend((2 * g..self.generators()).map(Letter::new));
        w
    }

    /// Fox-calculus matrix `J` with `c(word) = J · flat(c)`.
    pub fn jacobian(&self, word: &[Letter]) -> Result<IntMatrix, SurfCohError> {
        let r = self.module_rank;
        let n = self.generators();
        let mut j = IntMatrix::zeros(r, n * r);
        let mut prefix = IntMatrix::identity(r);
        for l in word {
            let k = l.generator;
            if k >= n {
                return Err(SurfCohError::IndexOutOfRange(k));
            }
            let (contrib, next) = if l.inverse {
                let t = prefix.mul(&self.inverses[k]);
                (t.neg(), t)
            } else {
                (prefix.clone(), prefix.mul(self.monodromy(k)))
            };
            for a in 0..r {
                for b in 0..r {
                    let v = &contrib[(a, b)];
                    if !v.is_zero() {
                        j[(a, k * r + b)] += v;
                    }
                }
            }
            prefix = next;
        }
        Ok(j)
    }

    /// Coboundary map `λ ↦ ((1 − w_i)λ, (1 − ρ_j)λ)` as a `(2g+m)r × r` matrix.
    pub fn coboundary(&self) -> IntMatrix {
        let blocks: Vec<IntMatrix> = self.monodromies().map(|m| m.one_minus()).collect();
        IntMatrix::vstack_all(self.module_rank, &blocks)
    }

    /// Same data with every matrix rewritten in the basis `basis` of a
    /// sublattice preserved by all monodromies. Aux symmetries that do not
    /// preserve it are an error.
    pub fn restrict(&self, basis: &IntMatrix) -> Result<MonodromyDatum, SurfCohError> {
        let solver = Solver::new(basis)?;
        let conv = |m: &IntMatrix| solver.solve_columns(&m.mul(basis)).ok_or(SurfCohError::Restriction);
        let handles = self.handle_monodromies.iter().map(conv).collect::<Result<Vec<_>, _>>()?;
        let branches = self.branch_monodromies.iter().map(conv).collect::<Result<Vec<_>, _>>()?;
        let aux = self.aux_symmetries.iter().map(conv).collect::<Result<Vec<_>, _>>()?;
        MonodromyDatum::new(self.genus, basis.cols(), handles, branches, self.branch_labels.clone(), aux)
    }

    /// Same datum without auxiliary symmetries.
    pub fn without_symmetries(&self) -> MonodromyDatum {
        MonodromyDatum { aux_symmetries: Vec::new(), ..self.clone() }
    }
}

/// Twisted evaluation of a cocycle along a word.
pub fn word_eval(md: &MonodromyDatum, word: &[Letter], c: &Cocycle) -> Result<Vec<Int>, SurfCohError> {
    let r = md.module_rank;
    let mut v = vec![Int::zero(); r];
    let mut prefix = IntMatrix::identity(r);
    for l in word {
        let k = l.generator;
        if k >= md.generators() || k >= c.values.len() {
            return Err(SurfCohError::IndexOutOfRange(k));
        }
        if l.inverse {
            let t = prefix.mul(md.monodromy_inverse(k));
            v = vec_ops::sub(&v, &t.mul_vec(&c.values[k]));
            prefix = t;
        } else {
            v = vec_ops::add(&v, &prefix.mul_vec(&c.values[k]));
            prefix = prefix.mul(md.monodromy(k));
        }
    }
    Ok(v)
}

/// Matrices behind a cohomology computation, all in flat cocycle coordinates
/// (`(2g+m)·r` rows).
#[derive(Clone, Debug)]
pub struct Presentation {
    /// Basis of the cocycle lattice `K`.
    pub cocycles: IntMatrix,
    /// Generators of the coboundary lattice `B`.
    pub coboundaries: IntMatrix,
    /// Column span of the local conditions; `None` for the open surface.
    pub conditions: Option<IntMatrix>,
    /// `J` of the relator word.
    pub relation: IntMatrix,
}

#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub group: FgAbGroup,
    pub generating_cocycles: Vec<Cocycle>,
    pub presentation: Presentation,
}

impl CohomologyResult {
    fn from_quotient(group: FgAbGroup, r: usize, presentation: Presentation) -> Self {
        let generating_cocycles = group
            .generators
            .as_ref()
            .map(|g| g.columns().iter().map(|c| Cocycle::from_flat(c, r)).collect())
            .unwrap_or_default();
        CohomologyResult { group, generating_cocycles, presentation }
    }

    /// Multiplying each torsion generator by the exponent lands in `B`.
    pub fn torsion_annihilated(&self) -> bool {
        let e = self.group.exponent();
        let solver = Solver::new(&column_basis(&self.presentation.coboundaries));
        let Ok(solver) = solver else {
            return self.group.invariant_factors.is_empty();
        };
        let t = self.group.invariant_factors.len();
        self.generating_cocycles[..t]
            .iter()
            .all(|c| solver.contains(&vec_ops::scale(&c.flat(), &e)))
    }
}

/// `H¹(Σ° − {y₀}, 𝓛) = L^{2g+m} / δL`.
pub fn h1_open(md: &MonodromyDatum) -> Result<CohomologyResult, SurfCohError> {
    let r = md.module_rank;
    let n = md.generators() * r;
    let k = IntMatrix::identity(n);
    let b = md.coboundary();
    let group = subgroup_quotient(n, &k, &b, true).map_err(|_| SurfCohError::InternalContainment)?;
    let relation = md.jacobian(&md.relator())?;
    Ok(CohomologyResult::from_quotient(
        group,
        r,
        Presentation { cocycles: k, coboundaries: b, conditions: None, relation },
    ))
}

/// `H¹(Σ, j_*𝓛)`: classes with `c(γ₀) = 0` and `c(γ_j) ∈ (1 − ρ_j)L`.
///
/// Cocycles are parametrized by the condition lattice
/// `C = L^{2g} ⊕ ⊕_j (1 − ρ_j)L`, so `K = C · ker(J · C)` and the quotient is
/// taken in those parameters.
pub fn h1_compactified(md: &MonodromyDatum) -> Result<CohomologyResult, SurfCohError> {
    let r = md.module_rank;
    let g2 = 2 * md.genus;
    let n = md.generators() * r;

    let mut blocks = vec![IntMatrix::identity(r); g2];
    for rho in &md.branch_monodromies {
        blocks.push(column_basis(&rho.one_minus()));
    }
    let cond = IntMatrix::block_diagonal(&blocks);

    // Coboundaries in condition coordinates, block by block.
    let mut bp_blocks = Vec::with_capacity(blocks.len());
    for (k, blk) in blocks.iter().enumerate() {
        let target = md.monodromy(k).one_minus();
        if k < g2 {
            bp_blocks.push(target);
        } else {
            let s = Solver::new(blk)?;
            bp_blocks.push(s.solve_columns(&target).ok_or(SurfCohError::InternalContainment)?);
        }
    }
    let bp = IntMatrix::vstack_all(r, &bp_blocks);

    let relation = md.jacobian(&md.relator())?;
    let kp = kernel_basis(&relation.mul(&cond));
    let mut group = subgroup_quotient(cond.cols(), &kp, &bp, true).map_err(|e| match e {
        IntLinError::Containment { .. } => SurfCohError::InternalContainment,
        e => SurfCohError::IntLin(e),
    })?;
    group.generators = group.generators.map(|gens| cond.mul(&gens));
    let cocycles = cond.mul(&kp);
    let coboundaries = md.coboundary();
    debug_assert_eq!(cocycles.rows(), n);
    Ok(CohomologyResult::from_quotient(
        group,
        r,
        Presentation { cocycles, coboundaries, conditions: Some(cond), relation },
    ))
}

/// Blockwise action of `s` on flat cocycle coordinates.
fn blockwise(s: &IntMatrix, blocks: usize) -> IntMatrix {
    IntMatrix::block_diagonal(&vec![s.clone(); blocks])
}

/// Lattice `I ⊆ K` of cocycles whose classes are fixed by every aux symmetry,
/// in ambient flat coordinates.
fn invariant_cocycles(res: &CohomologyResult, md: &MonodromyDatum) -> Result<IntMatrix, SurfCohError> {
    let kb = column_basis(&res.presentation.cocycles);
    let k = kb.cols();
    let solver = Solver::new(&kb)?;
    let bk = solver
        .solve_columns(&res.presentation.coboundaries)
        .ok_or(SurfCohError::InternalContainment)?;
    let mut diffs = Vec::new();
    for (i, s) in md.aux_symmetries.iter().enumerate() {
        let x = solver
            .solve_columns(&blockwise(s, md.generators()).mul(&kb))
            .ok_or(SurfCohError::NonCommutingSymmetry(i))?;
        diffs.push(x.sub(&IntMatrix::identity(k)));
    }
    let stacked = IntMatrix::vstack_all(k, &diffs);
    let target = IntMatrix::block_diagonal(&vec![bk; diffs.len()]);
    Ok(kb.mul(&preimage_lattice(&stacked, &target)))
}

/// Subgroup of `res` fixed by `md.aux_symmetries`.
pub fn invariants_of_symmetry(res: &CohomologyResult, md: &MonodromyDatum) -> Result<CohomologyResult, SurfCohError> {
    if md.aux_symmetries.is_empty() {
        return Ok(res.clone());
    }
    for (i, s) in md.aux_symmetries.iter().enumerate() {
        if md.monodromies().any(|m| m.mul(s) != s.mul(m)) {
            return Err(SurfCohError::NonCommutingSymmetry(i));
        }
    }
    let inv = invariant_cocycles(res, md)?;
    let n = inv.rows();
    let b = &res.presentation.coboundaries;
    let group = subgroup_quotient(n, &inv, b, true).map_err(|_| SurfCohError::InternalContainment)?;
    let presentation = Presentation { cocycles: inv, ..res.presentation.clone() };
    Ok(CohomologyResult::from_quotient(group, md.module_rank, presentation))
}

/// Kernel and cokernel of the map on cohomology induced by a coefficient map.
#[derive(Clone, Debug)]
pub struct MapReport {
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    /// Whether the image of every source cocycle lies in the target's cocycle lattice.
    pub lands_in_target: bool,
    pub kernel: FgAbGroup,
    pub cokernel: FgAbGroup,
}

impl MapReport {
    pub fn bijective(&self) -> bool {
        self.lands_in_target && self.kernel.is_trivial() && self.cokernel.is_trivial()
    }
}

/// Compares `source` with `target` along `phi: L_src → L_tgt`, applied blockwise.
pub fn compare_along(
    source: &CohomologyResult,
    target: &CohomologyResult,
    phi: &IntMatrix,
    generators: usize,
) -> Result<MapReport, SurfCohError> {
    let big_phi = blockwise(phi, generators);
    let ks = column_basis(&source.presentation.cocycles);
    let image = big_phi.mul(&ks);
    let kt = &target.presentation.cocycles;
    let bt = &target.presentation.coboundaries;
    let lands_in_target = crate::intlin::contains_lattice(kt, &image);

    let sk = Solver::new(&ks)?;
    let bs = sk
        .solve_columns(&source.presentation.coboundaries)
        .ok_or(SurfCohError::InternalContainment)?;
    let pre = preimage_lattice(&image, bt);
    let kernel = subgroup_quotient(ks.cols(), &pre, &bs, false).map_err(|_| SurfCohError::InternalContainment)?;

    let cokernel = if lands_in_target {
        let img_plus_b = lattice_sum(&image, bt);
        subgroup_quotient(kt.rows(), kt, &img_plus_b, false).map_err(|_| SurfCohError::InternalContainment)?
    } else {
        FgAbGroup::trivial()
    };
    Ok(MapReport {
        source: source.group.clone(),
        target: target.group.clone(),
        lands_in_target,
        kernel,
        cokernel,
    })
}

/// `L / (1 − ρ)L`.
pub fn coinvariants(rho: &IntMatrix) -> FgAbGroup {
    let r = rho.rows();
    subgroup_quotient(r, &IntMatrix::identity(r), &rho.one_minus(), false).expect("image lies in L")
}

/// Comparison `Λ/(1 − ρ)Λ → (Λ_h/(1 − ρ)Λ_h)^C` for one branch monodromy.
#[derive(Clone, Debug)]
pub struct BranchComparison {
    pub label: String,
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub kernel: FgAbGroup,
    pub cokernel: FgAbGroup,
}

impl BranchComparison {
    pub fn bijective(&self) -> bool {
        self.kernel.is_trivial() && self.cokernel.is_trivial()
    }
}

/// `rho_h` acts on `Λ_h` (identity basis); `e` is a basis of the sublattice.
pub fn compare_branch(
    label: &str,
    rho_h: &IntMatrix,
    e: &IntMatrix,
    symmetries: &[IntMatrix],
) -> Result<BranchComparison, SurfCohError> {
    let n = rho_h.rows();
    let im_h = column_basis(&rho_h.one_minus());
    let rho = Solver::new(e)?
        .solve_columns(&rho_h.mul(e))
        .ok_or(SurfCohError::Restriction)?;
    let source = coinvariants(&rho);

    let inv = if symmetries.is_empty() {
        IntMatrix::identity(n)
    } else {
        let diffs: Vec<IntMatrix> = symmetries.iter().map(|s| s.sub(&IntMatrix::identity(n))).collect();
        let stacked = IntMatrix::vstack_all(n, &diffs);
        preimage_lattice(&stacked, &IntMatrix::block_diagonal(&vec![im_h.clone(); diffs.len()]))
    };
    let target = subgroup_quotient(n, &inv, &im_h, false)?;

    let pre = preimage_lattice(e, &im_h);
    let kernel = subgroup_quotient(e.cols(), &pre, &rho.one_minus(), false)?;
    let cokernel = if crate::intlin::contains_lattice(&inv, e) {
        subgroup_quotient(n, &inv, &lattice_sum(e, &im_h), false)?
    } else {
        return Err(SurfCohError::Restriction);
    };
    Ok(BranchComparison { label: label.to_string(), source, target, kernel, cokernel })
}

/// Outcome of comparing `Λ = Λ_h^C` coefficients with the C-invariants of
/// `Λ_h` coefficients.
#[derive(Clone, Debug)]
pub struct IotaReport {
    pub map: MapReport,
    pub branches: Vec<BranchComparison>,
}

impl IotaReport {
    pub fn bijective(&self) -> bool {
        self.map.bijective() && self.branches.iter().all(|b| b.bijective())
    }
}

/// Checks that the inclusion `Λ_h^C ⊆ Λ_h` induces an isomorphism
/// `H¹(Σ, j_*𝓛^C) → H¹(Σ, j_*𝓛)^C`.
///
/// `md_h` acts on `Λ_h` in ambient coordinates and carries the generators of
/// `C` as aux symmetries; the `Λ` side is obtained by restriction.
pub fn iota_check(fd: &crate::folding::FoldedDatum, md_h: &MonodromyDatum) -> Result<IotaReport, SurfCohError> {
    let e = &fd.invariant_lattice;
    let md_l = md_h.without_symmetries().restrict(e)?;
    let res_l = h1_compactified(&md_l)?;
    let res_h = h1_compactified(md_h)?;
    let inv_h = invariants_of_symmetry(&res_h, md_h)?;
    let map = compare_along(&res_l, &inv_h, e, md_h.generators())?;
    let mut branches: Vec<BranchComparison> = Vec::new();
    for (rho, label) in md_h.branch_monodromies.iter().zip(&md_h.branch_labels) {
        if branches.iter().any(|b| &b.label == label) {
            continue;
        }
        branches.push(compare_branch(label, rho, e, &md_h.aux_symmetries)?);
    }
    Ok(IotaReport { map, branches })
}
