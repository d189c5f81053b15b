//! Brute-force cross-checks through the cameral cover itself.
//!
//! The cover `Σ̃ → Σ` is encoded by the monodromy homomorphism into `W`
//! acting on `W` by left multiplication. Coefficients `Z[W] ⊗ Λ` compute
//! `H¹(Σ̃, Λ)`, and the deck action (right multiplication together with the
//! action on `Λ`) cuts out a copy of the Prym lattice up to isogeny.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::intlin::{kernel_basis, rank};
use crate::prym::{HitchinConfig, PrymError};
use crate::rootdatum::RootDatum;
use crate::surfcoh::{h1_compactified, invariants_of_symmetry, MonodromyDatum, SurfCohError};
use crate::{Int, IntMatrix};

pub const DEFAULT_CAP: usize = 1152;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("Weyl group exceeds the cap of {cap} elements ({partial} found so far)")]
    CapExceeded { cap: usize, partial: usize },
    #[error("branch monodromy {0} is not a fixed-point-free involution on the fiber")]
    NonInvolutionMonodromy(usize),
    #[error(transparent)]
    Prym(#[from] PrymError),
    #[error(transparent)]
    SurfCoh(#[from] SurfCohError),
}

/// A Weyl group listed as matrices on the ambient coweight lattice.
#[derive(Clone, Debug)]
pub struct FiniteWeylGroup {
    pub elements: Vec<IntMatrix>,
    index: HashMap<IntMatrix, usize>,
}

impl FiniteWeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.elements[a].mul(&self.elements[b]))
            .expect("closed under products")
    }

    pub fn closed(&self) -> bool {
        let id = self.elements.iter().any(|m| m.is_identity());
        id && (0..self.order()).all(|a| (0..self.order()).all(|b| self.index_of(&self.elements[a].mul(&self.elements[b])).is_some()))
    }
}

/// Closure of the simple reflections, identity first.
pub fn enumerate_weyl(rd: &RootDatum, cap: usize) -> Result<FiniteWeylGroup, OracleError> {
    let gens: Vec<IntMatrix> = rd.simple_reflections().into_iter().map(|w| w.matrix).collect();
    let id = IntMatrix::identity(rd.rank());
    let mut elements = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0);
    let mut i = 0;
    while i < elements.len() {
        for g in &gens {
            let h = g.mul(&elements[i]);
            if !index.contains_key(&h) {
                if elements.len() == cap {
                    return Err(OracleError::CapExceeded { cap, partial: elements.len() });
                }
                index.insert(h.clone(), elements.len());
                elements.push(h);
            }
        }
        i += 1;
    }
    Ok(FiniteWeylGroup { elements, index })
}

/// `Z[W] ⊗ L` with basis `e_v ⊗ b_i` at position `v·r + i`.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub base_rank: usize,
    pub group: FiniteWeylGroup,
    /// Action of each group element on `L`, in the basis of `L`.
    pub base_action: Vec<IntMatrix>,
}

impl InducedModule {
    pub fn new(lattice: &IntMatrix, group: FiniteWeylGroup) -> Self {
        let base_action = group
            .elements
            .iter()
            .enumerate()
            .map(|(i, w)| RootDatum::restrict(w, lattice, i).expect("W preserves Λ"))
            .collect();
        InducedModule { base_rank: lattice.cols(), group, base_action }
    }

    pub fn total_rank(&self) -> usize {
        self.group.order() * self.base_rank
    }

    /// `e_v ⊗ λ ↦ e_{wv} ⊗ λ`.
    pub fn translation(&self, w: usize) -> IntMatrix {
        let r = self.base_rank;
        let n = self.total_rank();
        let mut m = IntMatrix::zeros(n, n);
        for v in 0..self.group.order() {
            let u = self.group.mul(w, v);
            for i in 0..r {
                m[(u * r + i, v * r + i)] = Int::one();
            }
        }
        m
    }

    /// `e_u ⊗ λ ↦ e_{u v⁻¹} ⊗ vλ`.
    pub fn residual(&self, v: usize) -> IntMatrix {
        let r = self.base_rank;
        let n = self.total_rank();
        let vinv = crate::intlin::unimodular_inverse(&self.group.elements[v]).expect("invertible");
        let vinv = self.group.index_of(&vinv).expect("closed under inverses");
        let a = &self.base_action[v];
        let mut m = IntMatrix::zeros(n, n);
        for u in 0..self.group.order() {
            let t = self.group.mul(u, vinv);
            for i in 0..r {
                for j in 0..r {
                    if !a[(i, j)].is_zero() {
                        m[(t * r + i, u * r + j)] = a[(i, j)].clone();
                    }
                }
            }
        }
        m
    }

    /// Fixed sublattice of the residual action of the given elements.
    pub fn residual_fixed(&self, elements: &[usize]) -> IntMatrix {
        let n = self.total_rank();
        let diffs: Vec<IntMatrix> = elements.iter().map(|&v| self.residual(v).sub(&IntMatrix::identity(n))).collect();
        kernel_basis(&IntMatrix::vstack_all(n, &diffs))
    }
}

/// Group element of each handle and branch generator.
fn monodromy_elements(cfg: &HitchinConfig, w: &FiniteWeylGroup) -> Vec<usize> {
    let md = cfg.ambient_monodromy().expect("config is valid");
    md.monodromies().map(|m| w.index_of(m).expect("monodromy lies in W")).collect()
}

fn simple_indices(rd: &RootDatum, w: &FiniteWeylGroup) -> Vec<usize> {
    rd.simple_reflections().iter().map(|s| w.index_of(&s.matrix).unwrap()).collect()
}

/// The induced module over the base surface, with the residual action of the
/// simple reflections as auxiliary symmetries.
#[derive(Clone, Debug)]
pub struct InducedCover {
    pub module: InducedModule,
    pub monodromy: MonodromyDatum,
    /// Group element of each handle and branch generator.
    pub elements: Vec<usize>,
    /// Residual generators, as indices into the group.
    pub residual_generators: Vec<usize>,
}

pub fn induced_cover(cfg: &HitchinConfig, cap: usize) -> Result<InducedCover, OracleError> {
    let rd = &cfg.datum;
    let w = enumerate_weyl(rd, cap)?;
    let module = InducedModule::new(rd.lattice(cfg.form), w);
    let elements = monodromy_elements(cfg, &module.group);
    let mut cache: HashMap<usize, IntMatrix> = HashMap::new();
    let mats: Vec<IntMatrix> = elements
        .iter()
        .map(|&e| cache.entry(e).or_insert_with(|| module.translation(e)).clone())
        .collect();
    let (handles, branches) = mats.split_at(2 * cfg.genus);
    let residual_generators = simple_indices(rd, &module.group);
    let residuals = residual_generators.iter().map(|&v| module.residual(v)).collect();
    let monodromy = MonodromyDatum::new(
        cfg.genus,
        module.total_rank(),
        handles.to_vec(),
        branches.to_vec(),
        Vec::new(),
        residuals,
    )?;
    Ok(InducedCover { module, monodromy, elements, residual_generators })
}

impl InducedCover {
    /// Whether every translation commutes with every residual generator.
    pub fn actions_commute(&self) -> bool {
        let md = &self.monodromy;
        md.monodromies().all(|t| md.aux_symmetries.iter().all(|s| t.mul(s) == s.mul(t)))
    }

    /// Rank of the deck-invariant subgroup computed over `Z` by
    /// [`invariants_of_symmetry`]. Expensive beyond `|W| = 12`.
    pub fn integral_invariant_rank(&self) -> Result<usize, OracleError> {
        let full = h1_compactified(&self.monodromy)?;
        Ok(invariants_of_symmetry(&full, &self.monodromy)?.group.rank)
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub weyl_order: usize,
    /// Rank of the deck-invariant subgroup of `H¹(Σ, j_*(Z[W] ⊗ Λ))`.
    pub invariant_rank: usize,
    /// Rank of `H¹(Σ, j_*(Z[W] ⊗ Λ)) = H¹(Σ̃, Λ)`.
    pub induced_rank: usize,
    /// Rank of `H⁰(Σ̃, Λ)`.
    pub h0_rank: usize,
    pub cover_genus: i64,
    /// Whether translation and residual actions commute on all generators.
    pub actions_commute: bool,
}

/// Cohomology of the induced module, its deck invariants, and the cover genus.
///
/// Ranks of invariants are rational invariants, and over `Q` taking
/// invariants of a finite group commutes with cohomology. The invariant rank
/// is therefore read off the presentation of the induced `H¹` restricted to
/// cochains with values in `F = (Z[W] ⊗ Λ)^W`.
pub fn oracle_report(cfg: &HitchinConfig, cap: usize) -> Result<OracleReport, OracleError> {
    let cover = induced_cover(cfg, cap)?;
    let md = &cover.monodromy;
    let order = cover.module.group.order();
    let r = cover.module.base_rank;
    let n = cover.module.total_rank();
    let g = cfg.genus;

    let full = h1_compactified(md)?;
    let induced_rank = full.group.rank;
    let h0_rank = n - rank(&md.coboundary());

    let f = cover.module.residual_fixed(&cover.residual_generators);
    let k = md.generators();
    let fblock = IntMatrix::block_diagonal(&vec![f.clone(); k]);
    let mut rows = vec![full.presentation.relation.mul(&fblock)];
    // c(γ_j) ∈ (1 − ρ_j)M over Q, cut out by the left kernel of 1 − ρ_j.
    let mut ann_cache: HashMap<usize, IntMatrix> = HashMap::new();
    for (j, rho) in md.branch_monodromies.iter().enumerate() {
        let e = cover.elements[2 * g + j];
        let ann = ann_cache
            .entry(e)
            .or_insert_with(|| kernel_basis(&rho.one_minus().transpose()).transpose().mul(&f))
            .clone();
        let mut row = IntMatrix::zeros(ann.rows(), k * r);
        for a in 0..ann.rows() {
            for b in 0..r {
                row[(a, (2 * g + j) * r + b)] = ann[(a, b)].clone();
            }
        }
        rows.push(row);
    }
    let system = IntMatrix::vstack_all(k * r, &rows);
    let invariant_cocycles = k * r - rank(&system);
    let invariant_rank = invariant_cocycles - rank(&md.coboundary().mul(&f));

    let m = cfg.branch_count() as i64;
    let chi = order as i64 * (2 - 2 * g as i64) - m * order as i64 / 2;
    Ok(OracleReport {
        weyl_order: order,
        invariant_rank,
        induced_rank,
        h0_rank,
        cover_genus: 1 - chi / 2,
        actions_commute: cover.actions_commute(),
    })
}

pub fn oracle_prym_rank(cfg: &HitchinConfig, cap: usize) -> Result<usize, OracleError> {
    Ok(oracle_report(cfg, cap)?.invariant_rank)
}

/// Permutation of `W` by left multiplication with `w`, as `perm[v] = wv`.
fn left_permutation(w: &FiniteWeylGroup, e: usize) -> Vec<usize> {
    (0..w.order()).map(|v| w.mul(e, v)).collect()
}

fn check_involutions(cfg: &HitchinConfig, w: &FiniteWeylGroup) -> Result<Vec<Vec<usize>>, OracleError> {
    let elems = monodromy_elements(cfg, w);
    let mut perms = Vec::new();
    for (j, &e) in elems[2 * cfg.genus..].iter().enumerate() {
        let p = left_permutation(w, e);
        let involution = (0..p.len()).all(|v| p[v] != v && p[p[v]] == v);
        if !involution {
            return Err(OracleError::NonInvolutionMonodromy(j));
        }
        perms.push(p);
    }
    Ok(perms)
}

/// `χ(Σ̃) = |W|(2 − 2g) − m|W|/2`.
pub fn riemann_hurwitz_euler(cfg: &HitchinConfig, cap: usize) -> Result<i64, OracleError> {
    let w = enumerate_weyl(&cfg.datum, cap)?;
    check_involutions(cfg, &w)?;
    let order = w.order() as i64;
    let m = cfg.branch_count() as i64;
    Ok(order * (2 - 2 * cfg.genus as i64) - m * order / 2)
}

/// `g̃ = 1 − χ/2`.
pub fn riemann_hurwitz_genus(cfg: &HitchinConfig, cap: usize) -> Result<i64, OracleError> {
    Ok(1 - riemann_hurwitz_euler(cfg, cap)? / 2)
}

/// Euler characteristic from cells of the cover: the lifted bouquet
/// (`|W|` vertices, `(2g+m)|W|` edges), `|W|` discs over `y₀`, and one point
/// per `⟨ρ_j⟩`-orbit on the fiber over each branch point, counted as the
/// rank of the fixed sublattice of the permutation module.
pub fn chain_complex_euler(cfg: &HitchinConfig, cap: usize) -> Result<i64, OracleError> {
    let w = enumerate_weyl(&cfg.datum, cap)?;
    let perms = check_involutions(cfg, &w)?;
    let order = w.order();
    let gens = 2 * cfg.genus + perms.len();
    let mut total = order as i64 - (gens * order) as i64 + order as i64;
    let mut cache: HashMap<Vec<usize>, usize> = HashMap::new();
    for p in perms {
        let fixed = *cache.entry(p.clone()).or_insert_with(|| {
            let mut m = IntMatrix::zeros(order, order);
            for (v, &u) in p.iter().enumerate() {
                m[(u, v)] = Int::one();
            }
            kernel_basis(&m.sub(&IntMatrix::identity(order))).cols()
        });
        total += fixed as i64;
    }
    Ok(total)
}
