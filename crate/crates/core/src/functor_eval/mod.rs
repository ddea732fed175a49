//! Evaluation of the exponential functors S, Λ and Γ on `V = F₂^k`.
//!
//! Basis elements of `Sⁿ(V)`, `Λⁿ(V)` and `Γⁿ(V)` are all exponent (or
//! multiplicity) vectors of length k summing to n; for Λ the entries are
//! 0/1. The content of a basis element, which is its torus weight, is the
//! vector itself.

mod weyl;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::combinat::{binomial, compositions, OmegaSequence, Partition};
use crate::gf2::BitMatrix;

pub use weyl::{
    simple_character, simple_dim, simple_weight_multiplicity, simple_weight_multiplicity_full,
    weyl_composite, weyl_dim_oracle, weyl_image_rank, weyl_rank_via_blocks, CharacterStore,
    SimpleCharacters,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FunctorError {
    #[error("the Weyl composite for {0:?} vanishes")]
    CompositeZero(Partition),
    #[error(
        "tableau images for {lambda:?} at weight {weight:?} are dependent ({rank} < {expected})"
    )]
    WeylBasisDefect {
        lambda: Partition,
        weight: Vec<usize>,
        rank: usize,
        expected: usize,
    },
    #[error("Steinberg factorization disagrees for {0:?}")]
    SteinbergMismatch(Partition),
    #[error("dense evaluation needs {0} tensor coordinates, above the limit")]
    TooLarge(u128),
    #[error("split ({i}, {j}) does not match the requested degree")]
    BadSplit { i: usize, j: usize },
}

/// Exponent vector of a monomial `x^a` in k variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// Per-variable binary digit sums `s₂(aⱼ)`.
    pub fn digit_weights(&self) -> Vec<usize> {
        self.0.iter().map(|a| a.count_ones() as usize).collect()
    }

    /// Total digit weight, the filtration level of the monomial.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|a| a.count_ones() as usize).sum()
    }

    /// `ωᵢ = #{j : bit i of aⱼ is set}`.
    pub fn omega(&self) -> OmegaSequence {
        let top = self
            .0
            .iter()
            .map(|&a| 32 - a.leading_zeros())
            .max()
            .unwrap_or(0);
        OmegaSequence::new(
            (0..top)
                .map(|i| self.0.iter().filter(|&&a| a >> i & 1 == 1).count())
                .collect(),
        )
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a == 0) {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "·")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, a)?;
            }
        }
        Ok(())
    }
}

/// A basis element of `Λ^ω(V) = ⊗ᵢ Λ^{ωᵢ}(V)`: one subset of variables
/// per level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetWedge {
    pub levels: Vec<Vec<usize>>,
}

impl SubsetWedge {
    /// `x^a` with `aⱼ = Σ_{i : j ∈ Tᵢ} 2ⁱ`.
    pub fn to_monomial(&self, k: usize) -> Monomial {
        let mut a = vec![0u32; k];
        for (i, level) in self.levels.iter().enumerate() {
            for &j in level {
                a[j] |= 1 << i;
            }
        }
        Monomial(a)
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        let top =
            m.0.iter()
                .map(|&a| 32 - a.leading_zeros())
                .max()
                .unwrap_or(0) as usize;
        let levels = (0..top)
            .map(|i| (0..m.nvars()).filter(|&j| m.0[j] >> i & 1 == 1).collect())
            .collect();
        Self { levels }
    }

    pub fn omega(&self) -> OmegaSequence {
        OmegaSequence::new(self.levels.iter().map(Vec::len).collect())
    }
}

/// Multiplicity vector of an orbit-sum basis element of `Γⁿ(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DividedMonomial(pub Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Symmetric,
    Exterior,
    Divided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisSpec {
    Family(Family, usize),
    ExteriorTensor(OmegaSequence),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Multiply,
    Comultiply,
}

/// Degree-n basis of `family` at rank k, as content vectors.
pub fn family_basis(family: Family, n: usize, k: usize) -> Vec<Vec<u32>> {
    let all = compositions(n, k);
    all.into_iter()
        .filter(|c| family != Family::Exterior || c.iter().all(|&x| x <= 1))
        .map(|c| c.into_iter().map(|x| x as u32).collect())
        .collect()
}

pub fn symmetric_basis(n: usize, k: usize) -> Vec<Monomial> {
    family_basis(Family::Symmetric, n, k)
        .into_iter()
        .map(Monomial)
        .collect()
}

pub fn divided_basis(n: usize, k: usize) -> Vec<DividedMonomial> {
    family_basis(Family::Divided, n, k)
        .into_iter()
        .map(DividedMonomial)
        .collect()
}

/// Subsets of `0..k` of size n, lexicographically increasing.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for j in start..k {
            if k - j < n - cur.len() {
                break;
            }
            cur.push(j);
            go(j + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Basis of `Λ^ω(V)`, levels ordered lexicographically.
pub fn exterior_tensor_basis(omega: &OmegaSequence, k: usize) -> Vec<SubsetWedge> {
    let mut out = vec![SubsetWedge { levels: Vec::new() }];
    for &w in omega.entries() {
        let level = subsets(w, k);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                level.iter().map(move |s| {
                    let mut next = prefix.clone();
                    next.levels.push(s.clone());
                    next
                })
            })
            .collect();
    }
    out
}

pub fn basis_dim(spec: &BasisSpec, k: usize) -> u128 {
    match spec {
        BasisSpec::Family(Family::Exterior, n) => binomial(k, *n),
        BasisSpec::Family(_, n) => {
            if k == 0 {
                u128::from(*n == 0)
            } else {
                binomial(n + k - 1, *n)
            }
        }
        BasisSpec::ExteriorTensor(omega) => {
            omega.entries().iter().map(|&w| binomial(k, w)).product()
        }
    }
}

/// Ordered basis for `spec`, as content vectors. For `Λ^ω` each element is
/// encoded as the monomial `x^a` it corresponds to.
pub fn basis(spec: &BasisSpec, k: usize) -> Vec<Vec<u32>> {
    match spec {
        BasisSpec::Family(family, n) => family_basis(*family, *n, k),
        BasisSpec::ExteriorTensor(omega) => exterior_tensor_basis(omega, k)
            .into_iter()
            .map(|w| w.to_monomial(k).0)
            .collect(),
    }
}

/// `C(n, r)` mod 2 by Lucas: odd iff r is a bitwise subset of n.
pub fn binomial_odd(n: u32, r: u32) -> bool {
    r <= n && r & !n == 0
}

fn product_coefficient(family: Family, a: &[u32], b: &[u32]) -> bool {
    match family {
        Family::Symmetric => true,
        Family::Exterior => a.iter().zip(b).all(|(x, y)| x + y <= 1),
        Family::Divided => a.iter().zip(b).all(|(&x, &y)| binomial_odd(x + y, x)),
    }
}

fn coproduct_coefficient(family: Family, c: &[u32], a: &[u32]) -> bool {
    match family {
        Family::Symmetric => c.iter().zip(a).all(|(&x, &y)| binomial_odd(x, y)),
        Family::Exterior | Family::Divided => true,
    }
}

/// Matrix of the product `Fⁱ ⊗ Fʲ → F^{i+j}` or the coproduct
/// `F^{i+j} → Fⁱ ⊗ Fʲ`. Columns index the source, rows the target; the
/// tensor basis is ordered `(a, b) ↦ a·dim Fʲ + b`.
pub fn structure_map(
    kind: StructureKind,
    family: Family,
    split: (usize, usize),
    k: usize,
) -> BitMatrix {
    let (i, j) = split;
    let left = family_basis(family, i, k);
    let right = family_basis(family, j, k);
    let whole = family_basis(family, i + j, k);
    let whole_index: HashMap<&[u32], usize> = whole
        .iter()
        .enumerate()
        .map(|(x, v)| (v.as_slice(), x))
        .collect();
    let right_index: HashMap<&[u32], usize> = right
        .iter()
        .enumerate()
        .map(|(x, v)| (v.as_slice(), x))
        .collect();
    let tensor_dim = left.len() * right.len();
    match kind {
        StructureKind::Multiply => {
            let mut m = BitMatrix::zeros(whole.len(), tensor_dim);
            for (ai, a) in left.iter().enumerate() {
                for (bi, b) in right.iter().enumerate() {
                    if !product_coefficient(family, a, b) {
                        continue;
                    }
                    let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if let Some(&row) = whole_index.get(sum.as_slice()) {
                        m.set(row, ai * right.len() + bi, true);
                    }
                }
            }
            m
        }
        StructureKind::Comultiply => {
            let mut m = BitMatrix::zeros(tensor_dim, whole.len());
            for (ci, c) in whole.iter().enumerate() {
                for (ai, a) in left.iter().enumerate() {
                    if a.iter().zip(c).any(|(x, y)| x > y) {
                        continue;
                    }
                    let rest: Vec<u32> = c.iter().zip(a).map(|(x, y)| x - y).collect();
                    let Some(&bi) = right_index.get(rest.as_slice()) else {
                        continue;
                    };
                    if coproduct_coefficient(family, c, a) {
                        m.set(ai * right.len() + bi, ci, true);
                    }
                }
            }
            m
        }
    }
}

/// Content of the tensor basis element with index `idx` of `Fⁱ ⊗ Fʲ`.
pub fn tensor_content(family: Family, split: (usize, usize), k: usize, idx: usize) -> Vec<u32> {
    let left = family_basis(family, split.0, k);
    let right = family_basis(family, split.1, k);
    let a = &left[idx / right.len()];
    let b = &right[idx % right.len()];
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_dimensions() {
        assert_eq!(basis(&BasisSpec::Family(Family::Symmetric, 3), 2).len(), 4);
        assert_eq!(basis(&BasisSpec::Family(Family::Exterior, 4), 4).len(), 1);
        let omega: OmegaSequence = "[2,1,1]".parse().unwrap();
        assert_eq!(
            basis(&BasisSpec::ExteriorTensor(omega.clone()), 4).len(),
            96
        );
        assert_eq!(basis_dim(&BasisSpec::ExteriorTensor(omega), 4), 96);
        for k in 0..5 {
            for n in 0..6 {
                for family in [Family::Symmetric, Family::Exterior, Family::Divided] {
                    let spec = BasisSpec::Family(family, n);
                    assert_eq!(
                        basis(&spec, k).len() as u128,
                        basis_dim(&spec, k),
                        "{family:?} {n} {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn wedge_encoding_is_a_bijection() {
        let omega: OmegaSequence = "[2,1,1]".parse().unwrap();
        let wedges = exterior_tensor_basis(&omega, 4);
        let mut seen = std::collections::HashSet::new();
        for w in &wedges {
            let m = w.to_monomial(4);
            assert_eq!(m.omega(), omega);
            assert_eq!(m.degree(), omega.degree(2));
            assert_eq!(SubsetWedge::from_monomial(&m).omega(), omega);
            assert!(seen.insert(m));
        }
    }

    #[test]
    fn monomial_weights() {
        let m = Monomial(vec![3, 4, 5]);
        assert_eq!(m.digit_weights(), vec![2, 1, 2]);
        assert_eq!(m.weight(), 5);
        assert_eq!(m.omega().to_string(), "[2,1,2]");
        assert_eq!(m.omega().degree(2), m.degree());
    }

    #[test]
    fn structure_map_examples() {
        // x ⊗ x ↦ x² in one variable
        let mul = structure_map(StructureKind::Multiply, Family::Symmetric, (1, 1), 1);
        assert!(mul.get(0, 0));
        // Λ: e1 ⊗ e2 ↦ e1∧e2, e1 ⊗ e1 ↦ 0
        let wedge = structure_map(StructureKind::Multiply, Family::Exterior, (1, 1), 2);
        let singles = family_basis(Family::Exterior, 1, 2);
        let e1 = singles.iter().position(|v| v == &vec![1, 0]).unwrap();
        let e2 = singles.iter().position(|v| v == &vec![0, 1]).unwrap();
        assert!(wedge.get(0, e1 * 2 + e2));
        assert_eq!(wedge.row(0).count_ones(), 2);
        assert!(!wedge.get(0, e1 * 2 + e1));
        // Δ(x²) has x ⊗ x with coefficient C(2,1) = 0 mod 2
        let co = structure_map(StructureKind::Comultiply, Family::Symmetric, (1, 1), 1);
        assert!(!co.get(0, 0));
        // Γ product γ1·γ1 = 2γ2 = 0
        let gmul = structure_map(StructureKind::Multiply, Family::Divided, (1, 1), 1);
        assert!(gmul.is_zero());
    }

    #[test]
    fn structure_maps_preserve_weight() {
        for family in [Family::Symmetric, Family::Exterior, Family::Divided] {
            for k in 1..=4 {
                for n in 0..=5 {
                    for i in 0..=n {
                        let split = (i, n - i);
                        let whole = family_basis(family, n, k);
                        let mul = structure_map(StructureKind::Multiply, family, split, k);
                        for (r, row) in mul.rows().iter().enumerate() {
                            for c in row.ones() {
                                assert_eq!(tensor_content(family, split, k, c), whole[r]);
                            }
                        }
                        let co = structure_map(StructureKind::Comultiply, family, split, k);
                        for (r, row) in co.rows().iter().enumerate() {
                            for c in row.ones() {
                                assert_eq!(tensor_content(family, split, k, r), whole[c]);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bialgebra_compatibility_for_symmetric_powers() {
        // Δ ∘ μ on S¹ ⊗ S¹ → S¹ ⊗ S¹ is id + twist for k = 2
        let mul = structure_map(StructureKind::Multiply, Family::Symmetric, (1, 1), 2);
        let co = structure_map(StructureKind::Comultiply, Family::Symmetric, (1, 1), 2);
        let both = co.compose(&mul).unwrap();
        let mut expected = BitMatrix::identity(4);
        for a in 0..2 {
            for b in 0..2 {
                expected.flip(a * 2 + b, b * 2 + a);
            }
        }
        assert_eq!(both, expected);
    }
}
