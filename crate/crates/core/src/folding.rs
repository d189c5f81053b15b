//! Folding of simply laced data by diagram automorphisms.
//!
//! A diagram automorphism permutes the fundamental coweights of `Δ_h`; on
//! roots it permutes simple-root coordinates. The invariant lattice
//! `Λ = Λ_h^C` has one basis vector per node orbit (the sum of its
//! fundamental coweights), and each root orbit maps to the folded root whose
//! fundamental-weight coordinates are the basis coordinates of the orbit's
//! coroot sum. With this normalization size-one simple orbits become short
//! simple roots, so `A_{2k+1}` folds to `B_{k+1}` and `D_{k+1}` to `C_k`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::intlin::Solver;
use crate::rootdatum::{fixed_sublattice, DynkinType, Family, RootDatum, RootDatumError, WeylElement};
use crate::{Int, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryLabel {
    Trivial,
    Z2,
    S3,
}

impl fmt::Display for SymmetryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryLabel::Trivial => "trivial",
            SymmetryLabel::Z2 => "Z2",
            SymmetryLabel::S3 => "S3",
        })
    }
}

impl FromStr for SymmetryLabel {
    type Err = FoldingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "trivial" | "1" | "none" => Ok(SymmetryLabel::Trivial),
            "z2" => Ok(SymmetryLabel::Z2),
            "s3" => Ok(SymmetryLabel::S3),
            _ => Err(FoldingError::UnknownGroup(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FoldingError {
    #[error("illegal folding pair ({dh}, {group})")]
    IllegalPair { dh: DynkinType, group: SymmetryLabel },
    #[error("unknown symmetry group {0:?}")]
    UnknownGroup(String),
    #[error("folded Cartan matrix matches no Dynkin type")]
    Unclassified,
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
}

/// Diagram automorphisms of `Δ_h` acting on its coweight lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    pub label: SymmetryLabel,
    /// `node_perms[g][i]` is the image of node `i` under generator `g`.
    pub node_perms: Vec<Vec<usize>>,
    /// `ω_i^∨ ↦ ω_{π(i)}^∨`.
    pub generator_matrices: Vec<IntMatrix>,
}

fn permutation_matrix(p: &[usize]) -> IntMatrix {
    let n = p.len();
    let mut m = IntMatrix::zeros(n, n);
    for (i, &j) in p.iter().enumerate() {
        m[(j, i)] = Int::one();
    }
    m
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

fn order(p: &[usize]) -> usize {
    let id: Vec<usize> = (0..p.len()).collect();
    let mut cur = p.to_vec();
    let mut k = 1;
    while cur != id {
        cur = compose(p, &cur);
        k += 1;
    }
    k
}

impl SymmetryGroup {
    pub fn new(dh: DynkinType, label: SymmetryLabel) -> Result<Self, FoldingError> {
        let n = dh.rank;
        let illegal = FoldingError::IllegalPair { dh, group: label };
        let id: Vec<usize> = (0..n).collect();
        let perms: Vec<Vec<usize>> = match (label, dh.family) {
            (SymmetryLabel::Trivial, f) if f.is_simply_laced() => vec![],
            (SymmetryLabel::Z2, Family::A) if n >= 3 && n % 2 == 1 => {
                vec![(0..n).map(|i| n - 1 - i).collect()]
            }
            (SymmetryLabel::Z2, Family::D) => {
                let mut p = id.clone();
                p.swap(n - 2, n - 1);
                vec![p]
            }
            (SymmetryLabel::Z2, Family::E) if n == 6 => vec![vec![5, 1, 4, 3, 2, 0]],
            (SymmetryLabel::S3, Family::D) if n == 4 => vec![vec![2, 1, 3, 0], vec![0, 1, 3, 2]],
            _ => return Err(illegal),
        };
        let generator_matrices = perms.iter().map(|p| permutation_matrix(p)).collect();
        Ok(SymmetryGroup {
            label,
            node_perms: perms,
            generator_matrices,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.node_perms.is_empty()
    }

    /// Checks generator orders and, for `S3`, the braid-free presentation
    /// `a³ = b² = (ab)² = 1`.
    pub fn relations_hold(&self) -> bool {
        match self.label {
            SymmetryLabel::Trivial => self.node_perms.is_empty(),
            SymmetryLabel::Z2 => self.node_perms.len() == 1 && order(&self.node_perms[0]) == 2,
            SymmetryLabel::S3 => {
                let (a, b) = (&self.node_perms[0], &self.node_perms[1]);
                order(a) == 3 && order(b) == 2 && order(&compose(a, b)) == 2
            }
        }
    }

    /// Whether every generator is a Dynkin diagram automorphism.
    pub fn preserves_cartan(&self, cartan: &IntMatrix) -> bool {
        self.node_perms.iter().all(|p| {
            (0..p.len()).all(|i| (0..p.len()).all(|j| cartan[(p[i], p[j])] == cartan[(i, j)]))
        })
    }

    /// All group elements as node permutations, identity first.
    pub fn elements(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![(0..n).collect::<Vec<_>>()];
        let mut i = 0;
        while i < out.len() {
            for g in &self.node_perms {
                let h = compose(g, &out[i]);
                if !out.contains(&h) {
                    out.push(h);
                }
            }
            i += 1;
        }
        out
    }
}

/// Action of a node permutation on simple-root coordinates.
fn permute_coords(p: &[usize], c: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); c.len()];
    for (i, &j) in p.iter().enumerate() {
        out[j] = c[i].clone();
    }
    out
}

#[derive(Clone, Debug)]
pub struct FoldedDatum {
    pub homogeneous: RootDatum,
    pub symmetry: SymmetryGroup,
    /// Orbit `k` consists of `Δ_h` root indices and maps to folded root `k`.
    pub orbits: Vec<Vec<usize>>,
    pub folded: RootDatum,
    /// Column `j` is the sum of the fundamental coweights in node orbit `j`,
    /// ordered by the folded type's node numbering.
    pub invariant_lattice: IntMatrix,
    /// `ρ_O` on the ambient `Δ_h` coweight lattice, indexed like `orbits`.
    pub folded_reflections: Vec<IntMatrix>,
}

/// Nontrivial legal `(Δ_h, C)` pairs with `rank(Δ_h) ≤ max_rank`, in a fixed order.
pub fn legal_pairs(max_rank: usize) -> Vec<(DynkinType, SymmetryLabel)> {
    let mut out = Vec::new();
    for n in (3..=max_rank).step_by(2) {
        out.push((DynkinType { family: Family::A, rank: n }, SymmetryLabel::Z2));
    }
    for n in 3..=max_rank {
        out.push((DynkinType { family: Family::D, rank: n }, SymmetryLabel::Z2));
    }
    if max_rank >= 6 {
        out.push((DynkinType { family: Family::E, rank: 6 }, SymmetryLabel::Z2));
    }
    if max_rank >= 4 {
        out.push((DynkinType { family: Family::D, rank: 4 }, SymmetryLabel::S3));
    }
    out
}

/// Permutation `p` with `target[i][j] == m[p[i]][p[j]]`, found by backtracking.
fn match_cartan(m: &IntMatrix, target: &IntMatrix) -> Option<Vec<usize>> {
    fn extend(m: &IntMatrix, t: &IntMatrix, p: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = p.len();
        if k == t.rows() {
            return true;
        }
        for c in 0..t.rows() {
            if used[c] {
                continue;
            }
            let ok = m[(c, c)] == t[(k, k)] && (0..k).all(|i| m[(p[i], c)] == t[(i, k)] && m[(c, p[i])] == t[(k, i)]);
            if ok {
                p.push(c);
                used[c] = true;
                if extend(m, t, p, used) {
                    return true;
                }
                p.pop();
                used[c] = false;
            }
        }
        false
    }
    if m.shape() != target.shape() {
        return None;
    }
    let mut p = Vec::new();
    let mut used = vec![false; m.rows()];
    extend(m, target, &mut p, &mut used).then_some(p)
}

/// Identifies a Cartan matrix up to node relabeling. Returns the type and the
/// permutation taking canonical node `i` to input node `p[i]`.
fn classify(m: &IntMatrix, prefer_b: bool) -> Option<(DynkinType, Vec<usize>)> {
    let r = m.rows();
    let mut families = vec![Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];
    if !prefer_b {
        families.swap(1, 2);
    }
    for family in families {
        let Ok(d) = DynkinType::new(family, r) else { continue };
        if let Some(p) = match_cartan(m, &d.cartan()) {
            return Some((d, p));
        }
    }
    None
}

impl FoldedDatum {
    pub fn fold(dh: DynkinType, label: SymmetryLabel) -> Result<FoldedDatum, FoldingError> {
        let symmetry = SymmetryGroup::new(dh, label)?;
        let homogeneous = RootDatum::build(dh)?;
        let n = dh.rank;
        let elements = symmetry.elements(n);

        // Node orbits, each listed by its least node.
        let mut node_orbit = vec![usize::MAX; n];
        let mut node_orbits: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if node_orbit[i] != usize::MAX {
                continue;
            }
            let mut o: Vec<usize> = elements.iter().map(|p| p[i]).collect();
            o.sort_unstable();
            o.dedup();
            for &j in &o {
                node_orbit[j] = node_orbits.len();
            }
            node_orbits.push(o);
        }
        let r = node_orbits.len();
        let basis_columns: Vec<Vec<Int>> = node_orbits
            .iter()
            .map(|o| (0..n).map(|i| if o.contains(&i) { Int::one() } else { Int::zero() }).collect())
            .collect();
        let e0 = IntMatrix::from_columns(n, &basis_columns);

        // Root orbits.
        let mut root_orbit = vec![usize::MAX; homogeneous.num_roots()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for k in 0..homogeneous.num_roots() {
            if root_orbit[k] != usize::MAX {
                continue;
            }
            let mut o: Vec<usize> = elements
                .iter()
                .map(|p| homogeneous.root_index(&permute_coords(p, &homogeneous.roots[k])).unwrap())
                .collect();
            o.sort_unstable();
            o.dedup();
            for &j in &o {
                root_orbit[j] = orbits.len();
            }
            orbits.push(o);
        }

        let coroot_sum = |o: &[usize]| -> Vec<Int> {
            let mut v = vec![Int::zero(); n];
            for &b in o {
                for (x, y) in v.iter_mut().zip(homogeneous.coroot_vector(b)) {
                    *x += y;
                }
            }
            v
        };

        // a_ij = ⟨α_{rep(j)}, Σ_{β ∈ O_i} β^∨⟩ over simple node orbits.
        let mut cartan0 = IntMatrix::zeros(r, r);
        for (i, oi) in node_orbits.iter().enumerate() {
            let simple: Vec<usize> = oi.iter().map(|&x| homogeneous.simple_index(x)).collect();
            let v = coroot_sum(&simple);
            for (j, oj) in node_orbits.iter().enumerate() {
                cartan0[(i, j)] = v[oj[0]].clone();
            }
        }
        let (ftype, perm) = classify(&cartan0, dh.family == Family::A).ok_or(FoldingError::Unclassified)?;
        let folded = RootDatum::build(ftype)?;
        let invariant_lattice = e0.select_columns(perm.iter().copied());

        let solver_e = Solver::new(&invariant_lattice).expect("orbit sums are independent");
        let solver_w = Solver::new(&folded.cartan.transpose()).expect("Cartan matrices are nondegenerate over Q");
        let mut image = vec![usize::MAX; orbits.len()];
        for (k, o) in orbits.iter().enumerate() {
            let y = solver_e.solve(&coroot_sum(o)).expect("coroot sums are invariant");
            let c = solver_w.solve(&y).expect("image lies in the root lattice");
            image[k] = folded.root_index(&c).expect("image is a folded root");
        }
        let mut seen = vec![false; folded.num_roots()];
        for &i in &image {
            assert!(!seen[i], "orbit-to-root map is not injective");
            seen[i] = true;
        }
        assert_eq!(orbits.len(), folded.num_roots(), "orbit-to-root map is not onto");
        let mut sorted: Vec<(usize, Vec<usize>)> = image.into_iter().zip(orbits).collect();
        sorted.sort();
        let orbits: Vec<Vec<usize>> = sorted.into_iter().map(|(_, o)| o).collect();

        let folded_reflections = orbits
            .iter()
            .map(|o| {
                o.iter()
                    .map(|&b| homogeneous.reflection(b))
                    .reduce(|a, b| a.mul(&b))
                    .unwrap()
            })
            .collect();

        Ok(FoldedDatum {
            homogeneous,
            symmetry,
            orbits,
            folded,
            invariant_lattice,
            folded_reflections,
        })
    }

    pub fn rank(&self) -> usize {
        self.folded.rank()
    }

    /// Orbit index of a `Δ_h` root.
    pub fn orbit_of(&self, root: usize) -> usize {
        self.orbits.iter().position(|o| o.contains(&root)).expect("every root lies in an orbit")
    }

    /// Orbit mapping to the folded root with index `k`.
    pub fn orbit_for_folded_root(&self, k: usize) -> &[usize] {
        &self.orbits[k]
    }

    /// `∏_{β ∈ O} s_β`, asserting that the factors commute.
    pub fn folded_reflection(&self, orbit: usize) -> WeylElement {
        let o = &self.orbits[orbit];
        let ms: Vec<IntMatrix> = o.iter().map(|&b| self.homogeneous.reflection(b)).collect();
        for a in &ms {
            for b in &ms {
                assert_eq!(a.mul(b), b.mul(a), "orbit reflections do not commute");
            }
        }
        WeylElement {
            matrix: self.folded_reflections[orbit].clone(),
            word: None,
        }
    }

    pub fn singular_fiber_type(&self, orbit: usize) -> &'static str {
        match self.orbits[orbit].len() {
            1 => "A1",
            2 => "A1xA1",
            3 => "A1xA1xA1",
            k => unreachable!("orbit of size {k}"),
        }
    }

    /// `⟨β, β'^∨⟩ = 0` for distinct members of every orbit.
    pub fn orbits_orthogonal(&self) -> bool {
        self.orbits.iter().all(|o| {
            o.iter()
                .all(|&a| o.iter().all(|&b| a == b || self.homogeneous.pair(a, b).is_zero()))
        })
    }

    /// Matrix of `ρ_O` on `Λ_h^C` in the invariant basis.
    pub fn restricted_reflection(&self, orbit: usize) -> IntMatrix {
        RootDatum::restrict(&self.folded_reflections[orbit], &self.invariant_lattice, orbit)
            .expect("folded reflections preserve the invariant lattice")
    }

    /// Whether each `ρ_O` restricted to `Λ_h^C` equals the reflection of the
    /// folded root attached to `O`, acting on fundamental-weight coordinates.
    pub fn restriction_matches(&self) -> bool {
        (0..self.orbits.len()).all(|k| self.restricted_reflection(k) == self.folded.weight_reflection(k))
    }

    pub fn reflections_commute_with_symmetry(&self) -> bool {
        self.folded_reflections.iter().all(|r| {
            self.symmetry
                .generator_matrices
                .iter()
                .all(|g| r.mul(g) == g.mul(r))
        })
    }

    /// Fixed sublattice of `⟨ρ_O⟩` on `Λ_h`.
    pub fn fixed_lattice(&self) -> IntMatrix {
        let gens: Vec<WeylElement> = self.folded_reflections.iter().cloned().map(WeylElement::new).collect();
        fixed_sublattice(&gens, &IntMatrix::identity(self.homogeneous.rank())).expect("reflections preserve Λ_h")
    }

    /// Whether the invariant basis spans exactly the C-fixed vectors.
    pub fn invariant_lattice_is_fixed(&self) -> bool {
        let gens: Vec<WeylElement> =
            self.symmetry.generator_matrices.iter().cloned().map(WeylElement::new).collect();
        let fixed = fixed_sublattice(&gens, &IntMatrix::identity(self.homogeneous.rank())).expect("permutations preserve Λ_h");
        crate::intlin::same_lattice(&fixed, &self.invariant_lattice)
    }

    /// Orbit sizes of the simple roots of the folded type, by node.
    pub fn simple_orbit_sizes(&self) -> Vec<usize> {
        (0..self.rank())
            .map(|i| self.orbits[self.folded.simple_index(i)].len())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fold(dh: &str, g: &str) -> Result<FoldedDatum, FoldingError> {
        FoldedDatum::fold(dh.parse().unwrap(), g.parse().unwrap())
    }

    #[test]
    fn table_examples() {
        assert_eq!(fold("A5", "Z2").unwrap().folded.dynkin.to_string(), "B3");
        assert_eq!(fold("D4", "S3").unwrap().folded.dynkin.to_string(), "G2");
        assert_eq!(fold("A3", "Z2").unwrap().folded.dynkin.to_string(), "B2");
        assert_eq!(fold("D3", "Z2").unwrap().folded.dynkin.to_string(), "C2");
        assert_eq!(fold("D4", "Z2").unwrap().folded.dynkin.to_string(), "C3");
        assert_eq!(fold("E6", "Z2").unwrap().folded.dynkin.to_string(), "F4");
        let a3 = fold("A3", "trivial").unwrap();
        assert_eq!(a3.folded.dynkin.to_string(), "A3");
        assert_eq!(a3.invariant_lattice, IntMatrix::identity(3));
        assert!(a3.orbits.iter().all(|o| o.len() == 1));
    }

    #[test]
    fn illegal_pairs() {
        for (dh, g) in [("E6", "S3"), ("A4", "Z2"), ("B3", "Z2"), ("E7", "Z2"), ("D5", "S3"), ("G2", "trivial")] {
            assert!(matches!(fold(dh, g), Err(FoldingError::IllegalPair { .. })), "{dh} {g}");
        }
    }

    #[test]
    fn folded_reflection_examples() {
        let fd = fold("A3", "Z2").unwrap();
        let mid = fd.orbit_of(fd.homogeneous.simple_index(1));
        assert_eq!(fd.orbits[mid].len(), 1);
        let s2 = fd.homogeneous.reflection(fd.homogeneous.simple_index(1));
        assert_eq!(fd.folded_reflection(mid).matrix, s2);

        let outer = fd.orbit_of(fd.homogeneous.simple_index(0));
        let m = fd.folded_reflection(outer).matrix;
        assert_eq!(fd.orbits[outer].len(), 2);
        assert!(!m.is_identity());
        assert!(m.mul(&m).is_identity());

        let g2 = fold("D4", "S3").unwrap();
        let k = g2.orbits.iter().position(|o| o.len() == 3).unwrap();
        let m = g2.folded_reflection(k).matrix;
        assert!(!m.is_identity() && m.mul(&m).is_identity());
    }

    #[test]
    fn fiber_types() {
        let g2 = fold("D4", "S3").unwrap();
        let k = g2.orbits.iter().position(|o| o.len() == 3).unwrap();
        assert_eq!(g2.singular_fiber_type(k), "A1xA1xA1");
        let f4 = fold("E6", "Z2").unwrap();
        let k = f4.orbits.iter().position(|o| o.len() == 2).unwrap();
        assert_eq!(f4.singular_fiber_type(k), "A1xA1");
        let d5 = fold("D5", "trivial").unwrap();
        assert!((0..d5.orbits.len()).all(|k| d5.singular_fiber_type(k) == "A1"));
    }

    #[test]
    fn structural_checks() {
        for (dh, g) in legal_pairs(7) {
            let fd = FoldedDatum::fold(dh, g).unwrap();
            assert!(fd.symmetry.relations_hold(), "{dh}");
            assert!(fd.symmetry.preserves_cartan(&fd.homogeneous.cartan));
            assert!(fd.orbits_orthogonal(), "{dh}");
            assert!(fd.restriction_matches(), "{dh}");
            assert!(fd.reflections_commute_with_symmetry());
            assert!(fd.invariant_lattice_is_fixed());
            assert_eq!(fd.fixed_lattice().cols(), 0);
            assert_eq!(fd.invariant_lattice.cols(), fd.rank());
        }
    }

    #[test]
    fn short_roots_from_fixed_nodes() {
        // B_{k+1}: the last simple root is short and comes from the fixed node.
        let fd = fold("A5", "Z2").unwrap();
        assert_eq!(fd.simple_orbit_sizes(), vec![2, 2, 1]);
        let fd = fold("D5", "Z2").unwrap();
        assert_eq!(fd.simple_orbit_sizes(), vec![1, 1, 1, 2]);
        let fd = fold("E6", "Z2").unwrap();
        assert_eq!(fd.simple_orbit_sizes(), vec![2, 2, 1, 1]);
        let fd = fold("D4", "S3").unwrap();
        assert_eq!(fd.simple_orbit_sizes(), vec![1, 3]);
    }
}
