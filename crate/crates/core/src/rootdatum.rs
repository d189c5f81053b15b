//! Irreducible root data of types A through G.
//!
//! Conventions: `cartan[i][j] = ⟨α_i, α_j^∨⟩` with Bourbaki node numbering
//! (shifted to start at 0). Roots are stored in simple-root coordinates and
//! coroots in simple-coroot coordinates. The ambient lattice is spanned by
//! the fundamental coweights, so a simple coroot `α_j^∨` is column `j` of the
//! Cartan matrix and `⟨α, x⟩` is the dot product of `α`'s coordinates with
//! `x`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::intlin::{kernel_basis, smith_diagonal, vec_ops, Solver};
use crate::{FgAbGroup, Int, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootDatumError {
    #[error("invalid rank {rank} for family {family:?}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse Dynkin type {0:?}")]
    Parse(String),
    #[error("generator {index} does not preserve the lattice")]
    ActionMismatch { index: usize },
    #[error("root index {0} out of range")]
    RootIndex(usize),
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDatumError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(RootDatumError::InvalidRank { family, rank })
        }
    }

    /// Type of the Langlands dual root system.
    pub fn dual(self) -> Self {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        DynkinType { family, ..self }
    }

    /// Number of roots by the classical formulas.
    pub fn root_count(self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1),
            Family::B | Family::C => 2 * r * r,
            Family::D => 2 * r * (r - 1),
            Family::E => [72, 126, 240][r - 6],
            Family::F => 48,
            Family::G => 12,
        }
    }

    pub fn cartan(self) -> IntMatrix {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..r - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..r - 2 {
                    link(i, i + 1);
                }
                link(r - 3, r - 1);
            }
            Family::E => {
                for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                    if i < r && j < r {
                        link(i, j);
                    }
                }
            }
        }
        match self.family {
            Family::B => a[r - 2][r - 1] = -2,
            Family::C => a[r - 1][r - 2] = -2,
            Family::F => a[1][2] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        let rows: Vec<&[i64]> = a.iter().map(|v| v.as_slice()).collect();
        IntMatrix::from_i64_rows(&rows)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = RootDatumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootDatumError::Parse(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDatumError::Parse(s.to_string()))?;
        DynkinType::new(family, rank)
    }
}

/// Which cocharacter lattice a computation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeForm {
    /// Coweight lattice, `Λ(G_ad)`.
    Adjoint,
    /// Coroot lattice, `Λ(G_sc)`.
    SimplyConnected,
}

impl fmt::Display for LatticeForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeForm::Adjoint => "adjoint",
            LatticeForm::SimplyConnected => "sc",
        })
    }
}

/// A Weyl group element acting on some lattice in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: IntMatrix,
    pub word: Option<Vec<usize>>,
}

impl WeylElement {
    pub fn new(matrix: IntMatrix) -> Self {
        WeylElement { matrix, word: None }
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        WeylElement {
            matrix: self.matrix.mul(&other.matrix),
            word,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub dynkin: DynkinType,
    pub cartan: IntMatrix,
    /// Positive roots first (by height, then coordinates), then their negatives.
    pub roots: Vec<Vec<Int>>,
    pub coroots: Vec<Vec<Int>>,
    pub coweight_lattice: IntMatrix,
    pub coroot_lattice: IntMatrix,
    /// Row `k` evaluates root `k` on ambient coweight coordinates.
    pub pairing: IntMatrix,
    pub degrees: Vec<u32>,
    index: HashMap<Vec<Int>, usize>,
}

fn height(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |a, b| a + b)
}

/// Closes the simple (root, coroot) pairs under simple reflections.
fn generate_roots(cartan: &IntMatrix) -> Vec<(Vec<Int>, Vec<Int>)> {
    let r = cartan.rows();
    let mut seen: HashMap<Vec<Int>, Vec<Int>> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut e = vec![Int::zero(); r];
        e[i] = Int::one();
        seen.insert(e.clone(), e.clone());
        queue.push_back((e.clone(), e));
    }
    while let Some((c, d)) = queue.pop_front() {
        for i in 0..r {
            let pc: Int = (0..r).map(|k| &c[k] * &cartan[(k, i)]).sum();
            let pd: Int = (0..r).map(|k| &d[k] * &cartan[(i, k)]).sum();
            let mut c2 = c.clone();
            let mut d2 = d.clone();
            c2[i] -= pc;
            d2[i] -= pd;
            if !seen.contains_key(&c2) {
                seen.insert(c2.clone(), d2.clone());
                queue.push_back((c2, d2));
            }
        }
    }
    let mut pos: Vec<(Vec<Int>, Vec<Int>)> = seen
        .into_iter()
        .filter(|(c, _)| c.iter().all(|x| !x.is_negative()))
        .collect();
    pos.sort_by(|a, b| height(&a.0).cmp(&height(&b.0)).then_with(|| b.0.cmp(&a.0)));
    let neg: Vec<(Vec<Int>, Vec<Int>)> = pos
        .iter()
        .map(|(c, d)| (c.iter().map(|x| -x).collect(), d.iter().map(|x| -x).collect()))
        .collect();
    pos.extend(neg);
    pos
}

/// Degrees from the height distribution of positive roots: the numbers of
/// roots of height `1, 2, ...` form the partition conjugate to the exponents.
fn degrees_from_heights(positive: &[Vec<Int>], rank: usize) -> Vec<u32> {
    let mut per_height: Vec<usize> = Vec::new();
    for c in positive {
        let h = height(c).to_usize().unwrap();
        if per_height.len() < h {
            per_height.resize(h, 0);
        }
        per_height[h - 1] += 1;
    }
    let mut degrees: Vec<u32> = (1..=rank)
        .map(|i| per_height.iter().filter(|&&n| n >= i).count() as u32 + 1)
        .collect();
    degrees.sort_unstable();
    degrees
}

impl RootDatum {
    pub fn build(d: DynkinType) -> Result<RootDatum, RootDatumError> {
        let d = DynkinType::new(d.family, d.rank)?;
        let cartan = d.cartan();
        let pairs = generate_roots(&cartan);
        let (roots, coroots): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let degrees = degrees_from_heights(&roots[..roots.len() / 2], d.rank);
        Ok(Self::assemble(d, cartan, roots, coroots, degrees))
    }

    fn assemble(
        dynkin: DynkinType,
        cartan: IntMatrix,
        roots: Vec<Vec<Int>>,
        coroots: Vec<Vec<Int>>,
        degrees: Vec<u32>,
    ) -> RootDatum {
        let r = dynkin.rank;
        let pairing = IntMatrix::from_rows(r, roots.clone());
        let index = roots.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        RootDatum {
            dynkin,
            coroot_lattice: cartan.clone(),
            cartan,
            roots,
            coroots,
            coweight_lattice: IntMatrix::identity(r),
            pairing,
            degrees,
            index,
        }
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root_index(&self, coords: &[Int]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the `i`-th simple root.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut e = vec![Int::zero(); self.rank()];
        e[i] = Int::one();
        self.root_index(&e).expect("simple roots are present")
    }

    /// Index of `-α`.
    pub fn negative_index(&self, k: usize) -> usize {
        let n = self.num_positive();
        if k < n {
            k + n
        } else {
            k - n
        }
    }

    pub fn height(&self, k: usize) -> Int {
        height(&self.roots[k])
    }

    /// Coroot `k` in ambient (fundamental coweight) coordinates.
    pub fn coroot_vector(&self, k: usize) -> Vec<Int> {
        self.cartan.mul_vec(&self.coroots[k])
    }

    /// `⟨α_a, α_b^∨⟩`.
    pub fn pair(&self, a: usize, b: usize) -> Int {
        vec_ops::dot(&self.roots[a], &self.coroot_vector(b))
    }

    /// Reflection `x ↦ x − ⟨α_k, x⟩ α_k^∨` on ambient coweight coordinates.
    pub fn reflection(&self, k: usize) -> IntMatrix {
        let r = self.rank();
        let v = self.coroot_vector(k);
        let c = &self.roots[k];
        let mut m = IntMatrix::identity(r);
        for i in 0..r {
            for j in 0..r {
                m[(i, j)] -= &v[i] * &c[j];
            }
        }
        m
    }

    /// Reflection `λ ↦ λ − ⟨λ, α_k^∨⟩ α_k` on fundamental-weight coordinates.
    pub fn weight_reflection(&self, k: usize) -> IntMatrix {
        let r = self.rank();
        let w = self.cartan.transpose().mul_vec(&self.roots[k]);
        let d = &self.coroots[k];
        let mut m = IntMatrix::identity(r);
        for i in 0..r {
            for j in 0..r {
                m[(i, j)] -= &w[i] * &d[j];
            }
        }
        m
    }

    /// Action of the reflection `s_k` on the root with index `b`.
    pub fn reflect_root(&self, k: usize, b: usize) -> usize {
        let p = self.pair(b, k);
        let c: Vec<Int> = self.roots[b]
            .iter()
            .zip(&self.roots[k])
            .map(|(x, y)| x - &p * y)
            .collect();
        self.root_index(&c).expect("reflections permute roots")
    }

    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        (0..self.rank())
            .map(|i| WeylElement {
                matrix: self.reflection(self.simple_index(i)),
                word: Some(vec![i]),
            })
            .collect()
    }

    /// Basis of `Λ(G)` in ambient coordinates.
    pub fn lattice(&self, form: LatticeForm) -> &IntMatrix {
        match form {
            LatticeForm::Adjoint => &self.coweight_lattice,
            LatticeForm::SimplyConnected => &self.coroot_lattice,
        }
    }

    /// `Z(G_sc) = coker(cartan)`.
    pub fn center(&self) -> FgAbGroup {
        FgAbGroup::from_diagonal(0, &smith_diagonal(&self.cartan))
    }

    /// Positive generator of `⟨α_k, Λ⟩ ⊆ Z`.
    pub fn epsilon(&self, k: usize, form: LatticeForm) -> Result<Int, RootDatumError> {
        if k >= self.num_roots() {
            return Err(RootDatumError::RootIndex(k));
        }
        let values: Vec<Int> = self.lattice(form).transpose().mul_vec(&self.roots[k]);
        Ok(crate::scalar::gcd_all(values.iter()))
    }

    pub fn langlands_dual(&self) -> RootDatum {
        Self::assemble(
            self.dynkin.dual(),
            self.cartan.transpose(),
            self.coroots.clone(),
            self.roots.clone(),
            self.degrees.clone(),
        )
    }

    /// Restriction of an ambient automorphism to a lattice, in its basis.
    pub fn restrict(
        m: &IntMatrix,
        lattice: &IntMatrix,
        index: usize,
    ) -> Result<IntMatrix, RootDatumError> {
        let solver = Solver::new(lattice).map_err(|_| RootDatumError::ActionMismatch { index })?;
        solver
            .solve_columns(&m.mul(lattice))
            .ok_or(RootDatumError::ActionMismatch { index })
    }
}

/// Simultaneous fixed sublattice of `gens` on the lattice spanned by the
/// columns of `lattice` (a basis), returned in ambient coordinates.
pub fn fixed_sublattice(
    gens: &[WeylElement],
    lattice: &IntMatrix,
) -> Result<IntMatrix, RootDatumError> {
    let k = lattice.cols();
    if gens.is_empty() {
        return Ok(lattice.clone());
    }
    let mut blocks = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let x = RootDatum::restrict(&g.matrix, lattice, i)?;
        blocks.push(x.sub(&IntMatrix::identity(k)));
    }
    let stacked = IntMatrix::vstack_all(k, &blocks);
    Ok(lattice.mul(&kernel_basis(&stacked)))
}

/// All types of rank at most `max_rank`, in a fixed order.
pub fn all_types(max_rank: usize) -> Vec<DynkinType> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for rank in 1..=max_rank {
            if let Ok(d) = DynkinType::new(family, rank) {
                out.push(d);
            }
        }
    }
    out
}
