//! Steenrod squares on `S*(V) = F₂[x₁..x_k]`, the hit quotients `Qⁿ`, the
//! digit-weight filtration `p_d Sⁿ` and the indecomposables `𝔔ⁿ_d` of its
//! associated graded.
//!
//! The digit weight of a monomial `x^a` is `Σⱼ s₂(aⱼ)`; `p_d Sⁿ` is spanned
//! by monomials of weight at most d. Squares never raise the weight of a
//! single variable, so on the associated graded they preserve the whole
//! per-variable weight vector. Relations for `𝔔ⁿ_d` are therefore computed
//! one weight block at a time.

use std::collections::{BTreeSet, HashMap};

use crate::combinat::{binomial, enumerate_partitions, orbit_size};
use crate::functor_eval::{symmetric_basis, Monomial};
use crate::g0::Character;
use crate::gf2::{BitMatrix, BitVector, EchelonBasis};

/// A polynomial over F₂ as its set of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Self::zero();
        for m in terms {
            p.add_term(m);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&mut self, other: &Polynomial) {
        for m in &other.terms {
            self.add_term(m.clone());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for a in &self.terms {
            for b in &other.terms {
                let e = a
                    .exponents()
                    .iter()
                    .zip(b.exponents())
                    .map(|(x, y)| x + y)
                    .collect();
                out.add_term(Monomial(e));
            }
        }
        out
    }

    pub fn sq(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for m in &self.terms {
            for t in sq_on_monomial(i, m) {
                out.add_term(t);
            }
        }
        out
    }
}

/// `Sqⁱ(x^a) = Σ Πⱼ C(aⱼ, iⱼ) x^{a+i}` over `i = Σ iⱼ`, reduced mod 2. Terms are
/// distinct, so the result is returned as a plain list.
pub fn sq_on_monomial(i: usize, a: &Monomial) -> Vec<Monomial> {
    fn go(a: &[u32], j: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if j == a.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let room: u32 = a[j + 1..].iter().sum();
        // iⱼ ranges over bitwise subsets of aⱼ
        let mut sub = a[j];
        loop {
            if sub <= left && left - sub <= room {
                cur.push(a[j] + sub);
                go(a, j + 1, left - sub, cur, out);
                cur.pop();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & a[j];
        }
    }
    if i > a.degree() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(
        a.exponents(),
        0,
        i as u32,
        &mut Vec::with_capacity(a.nvars()),
        &mut out,
    );
    out.sort();
    out
}

/// Operations used to generate the hit relations in degree n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generators {
    /// `Sq^{2ⁱ}` with `2ⁱ ≤ n − 2ⁱ`.
    PowersOfTwo,
    /// Every `Sqʲ` with `1 ≤ j ≤ n − j`.
    All,
}

impl Generators {
    fn degrees(self, n: usize) -> Vec<usize> {
        match self {
            Generators::PowersOfTwo => (0..)
                .map(|i| 1usize << i)
                .take_while(|&s| 2 * s <= n)
                .collect(),
            Generators::All => (1..).take_while(|&s| 2 * s <= n).collect(),
        }
    }
}

/// A quotient of a space with a monomial basis by a span of relations.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub ambient: Vec<Monomial>,
    pub relations: BitMatrix,
    pub dim: usize,
    /// Ambient indices not occurring as pivots; their classes form a basis.
    pub representatives: Vec<usize>,
}

fn index_of(basis: &[Monomial]) -> HashMap<&Monomial, usize> {
    basis.iter().enumerate().map(|(i, m)| (m, i)).collect()
}

fn present(ambient: Vec<Monomial>, rows: Vec<BitVector>) -> QuotientPresentation {
    let mut echelon = EchelonBasis::new(ambient.len());
    for row in &rows {
        echelon.insert(row.clone());
    }
    let pivots: BTreeSet<usize> = echelon.pivots().into_iter().collect();
    let representatives = (0..ambient.len()).filter(|c| !pivots.contains(c)).collect();
    let dim = ambient.len() - echelon.rank();
    let ncols = ambient.len();
    QuotientPresentation {
        ambient,
        relations: BitMatrix::from_rows(rows, ncols).expect("rows built at ambient width"),
        dim,
        representatives,
    }
}

/// Relation vectors `Sqˢ(m)` for all monomials m of degree `n − s`, in the
/// coordinates of `basis`.
fn hit_rows(n: usize, k: usize, basis: &[Monomial], generators: Generators) -> Vec<BitVector> {
    let index = index_of(basis);
    let mut rows = Vec::new();
    for s in generators.degrees(n) {
        for m in symmetric_basis(n - s, k) {
            let image = sq_on_monomial(s, &m);
            if !image.is_empty() {
                rows.push(BitVector::from_indices(
                    basis.len(),
                    image.iter().map(|t| index[t]),
                ));
            }
        }
    }
    rows
}

/// `Qⁿ(F₂^k) = Sⁿ / Σ Sq^{2ⁱ} S^{n−2ⁱ}`.
pub fn hit_quotient(n: usize, k: usize) -> QuotientPresentation {
    let basis = symmetric_basis(n, k);
    let rows = hit_rows(n, k, &basis, Generators::PowersOfTwo);
    present(basis, rows)
}

/// `dim Qⁿ(F₂^k)` for the chosen generating set.
pub fn hit_dim_with(n: usize, k: usize, generators: Generators) -> usize {
    let basis = symmetric_basis(n, k);
    let rows = hit_rows(n, k, &basis, generators);
    present(basis, rows).dim
}

/// Monomials of `Sⁿ(F₂^k)` of weight at most d.
#[derive(Clone, Debug)]
pub struct FilteredComponent {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub basis: Vec<Monomial>,
}

pub fn filtration_basis(n: usize, k: usize, d: usize) -> FilteredComponent {
    let basis = symmetric_basis(n, k)
        .into_iter()
        .filter(|m| m.weight() <= d)
        .collect();
    FilteredComponent { n, k, d, basis }
}

/// Weight-d monomials of degree n: a basis of `p_d Sⁿ / p_{d−1} Sⁿ`.
pub fn graded_piece(n: usize, k: usize, d: usize) -> Vec<Monomial> {
    symmetric_basis(n, k)
        .into_iter()
        .filter(|m| m.weight() == d)
        .collect()
}

/// Matrix of `Sqⁱ : gr_d S^{n−i} → gr_d Sⁿ` on monomial bases (rows index
/// the target). Panics if a square ever produces a term of higher weight.
pub fn induced_sq_on_gr(i: usize, n: usize, k: usize, d: usize) -> BitMatrix {
    assert!(i.is_power_of_two(), "Sq^{i}: only powers of two generate");
    let source = if n >= i {
        graded_piece(n - i, k, d)
    } else {
        Vec::new()
    };
    let target = graded_piece(n, k, d);
    let index = index_of(&target);
    let mut m = BitMatrix::zeros(target.len(), source.len());
    for (c, mono) in source.iter().enumerate() {
        for t in sq_on_monomial(i, mono) {
            let w = t.weight();
            assert!(
                w <= d,
                "Sq^{i}({mono:?}) has a term {t:?} of weight {w} > {d}"
            );
            if w == d {
                m.flip(index[&t], c);
            }
        }
    }
    m
}

/// Exponents `a ≤ bound` with `s₂(a) = w`.
fn exponents_of_weight(w: usize, bound: usize) -> Vec<u32> {
    (0..=bound as u32)
        .filter(|a| a.count_ones() as usize == w)
        .collect()
}

/// Monomials in `l = weights.len()` variables of degree n whose per-variable
/// digit weights equal `weights`.
pub fn weight_block(n: usize, weights: &[usize]) -> Vec<Monomial> {
    fn go(n: usize, weights: &[usize], j: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if j == weights.len() {
            if n == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        // the remaining variables need at least 2^w − 1 ≥ w each
        let rest: usize = weights[j + 1..].iter().sum();
        if n < rest {
            return;
        }
        for a in exponents_of_weight(weights[j], n - rest) {
            cur.push(a);
            go(n - a as usize, weights, j + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, weights, 0, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Dimension of the weight-`weights` block of `𝔔ⁿ_d`, where `d = Σ weights`.
/// Relations come from the images of squares on the same block in lower
/// degrees; terms leaving the block must drop weight, and anything else
/// panics.
pub fn qa_block_dim(n: usize, weights: &[usize], generators: Generators) -> usize {
    let target = weight_block(n, weights);
    if target.is_empty() {
        return 0;
    }
    let index = index_of(&target);
    let d: usize = weights.iter().sum();
    let mut echelon = EchelonBasis::new(target.len());
    for s in generators.degrees(n) {
        for mono in weight_block(n - s, weights) {
            let mut row = BitVector::zeros(target.len());
            for t in sq_on_monomial(s, &mono) {
                match index.get(&t) {
                    Some(&c) => row.flip(c),
                    None => {
                        let tw = t.digit_weights();
                        assert!(
                            tw.iter().zip(weights).all(|(a, b)| a <= b) && t.weight() < d,
                            "Sq^{s}({mono:?}) leaves its weight block through {t:?}"
                        );
                    }
                }
            }
            echelon.insert(row);
            if echelon.rank() == target.len() {
                return 0;
            }
        }
    }
    target.len() - echelon.rank()
}

/// `𝔔ⁿ_d(F₂^k)`: the weight-d graded piece of `Sⁿ` modulo induced squares.
pub fn qa_space(n: usize, d: usize, k: usize) -> QuotientPresentation {
    let ambient = graded_piece(n, k, d);
    let index = index_of(&ambient);
    let mut rows = Vec::new();
    for s in Generators::PowersOfTwo.degrees(n) {
        for mono in graded_piece(n - s, k, d) {
            let image: Vec<usize> = sq_on_monomial(s, &mono)
                .into_iter()
                .filter(|t| t.weight() == d)
                .map(|t| index[&t])
                .collect();
            if !image.is_empty() {
                rows.push(BitVector::from_indices(ambient.len(), image));
            }
        }
    }
    present(ambient, rows)
}

/// Character of `𝔔ⁿ_d`: the coefficient of `m_μ` is the dimension of the
/// block with weight vector μ.
pub fn qa_character(n: usize, d: usize) -> Character {
    qa_character_with(n, d, Generators::PowersOfTwo)
}

pub fn qa_character_with(n: usize, d: usize, generators: Generators) -> Character {
    let mut chi = Character::zero(d);
    if d > n {
        return chi;
    }
    for mu in enumerate_partitions(d, 0) {
        let dim = qa_block_dim(n, mu.parts(), generators);
        chi.set(&mu, dim as u64);
    }
    chi
}

/// `dim 𝔔ⁿ_d(F₂^k)` from weight blocks.
pub fn qa_dim(n: usize, d: usize, k: usize) -> u128 {
    qa_character(n, d).dim_at(k)
}

/// Dimensions of the images `Qⁿ[d]` of `p_d Sⁿ` in `Qⁿ`, for `d = 0..=n`.
///
/// Columns are ordered by decreasing weight and each relation is keyed on
/// its lowest column, which is its heaviest term; the relations lying in
/// `p_d` are then exactly the echelon rows with pivot of weight at most d.
pub fn hit_filtration_dims(n: usize, k: usize) -> Vec<usize> {
    let mut basis = symmetric_basis(n, k);
    basis.sort_by_key(|m| std::cmp::Reverse(m.weight()));
    let rows = hit_rows(n, k, &basis, Generators::PowersOfTwo);
    let mut echelon = EchelonBasis::new(basis.len());
    for row in rows {
        echelon.insert(row);
    }
    let mut level_count = vec![0usize; n + 1];
    for m in &basis {
        level_count[m.weight()] += 1;
    }
    let mut pivot_count = vec![0usize; n + 1];
    for p in echelon.pivots() {
        pivot_count[basis[p].weight()] += 1;
    }
    let mut dims = Vec::with_capacity(n + 1);
    let (mut ambient, mut hit) = (0, 0);
    for d in 0..=n {
        ambient += level_count[d];
        hit += pivot_count[d];
        dims.push(ambient - hit);
    }
    dims
}

/// Dimensions of one filtration level of `Qⁿ(F₂^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubquotientDims {
    /// `dim Qⁿ[d]`
    pub image: usize,
    /// `dim Qⁿ_d = dim Qⁿ[d] − dim Qⁿ[d−1]`
    pub subquotient: usize,
}

pub fn q_subquotient(n: usize, d: usize, k: usize) -> SubquotientDims {
    if d > n {
        let total = hit_quotient(n, k).dim;
        return SubquotientDims {
            image: total,
            subquotient: 0,
        };
    }
    let dims = hit_filtration_dims(n, k);
    SubquotientDims {
        image: dims[d],
        subquotient: dims[d] - if d == 0 { 0 } else { dims[d - 1] },
    }
}

/// `dim Kⁿ_d(F₂^k) = dim 𝔔ⁿ_d − dim Qⁿ_d`. Panics if negative.
pub fn kernel_dim(n: usize, d: usize, k: usize) -> usize {
    let qa = qa_dim(n, d, k) as usize;
    let q = q_subquotient(n, d, k).subquotient;
    assert!(
        q <= qa,
        "dim Q^{n}_{d}({k}) = {q} exceeds dim of its cover {qa}"
    );
    qa - q
}

/// One row of a dimension table: `n,d,k,dim_qa,dim_Qd,dim_K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DimensionRow {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub dim_qa: usize,
    #[serde(rename = "dim_Qd")]
    pub dim_qd: usize,
    #[serde(rename = "dim_K")]
    pub dim_k: usize,
}

/// All levels `0 ≤ d ≤ n` of `Qⁿ(F₂^k)` with their covers and kernels.
pub fn dimension_rows(n: usize, k: usize) -> Vec<DimensionRow> {
    let dims = hit_filtration_dims(n, k);
    (0..=n)
        .map(|d| {
            let dim_qd = dims[d] - if d == 0 { 0 } else { dims[d - 1] };
            let dim_qa = qa_dim(n, d, k) as usize;
            assert!(dim_qd <= dim_qa, "Q^{n}_{d}({k}) larger than its cover");
            DimensionRow {
                n,
                d,
                k,
                dim_qa,
                dim_qd,
                dim_k: dim_qa - dim_qd,
            }
        })
        .collect()
}

/// Number of monomials in `Sⁿ(F₂^k)`.
pub fn ambient_size(n: usize, k: usize) -> u128 {
    if k == 0 {
        return u128::from(n == 0);
    }
    binomial(n + k - 1, n)
}

/// `dim gr_d Sⁿ(F₂^k)` from the weight blocks, `Σ_μ |block(μ)|·orbit(μ, k)`.
pub fn graded_piece_dim_by_blocks(n: usize, d: usize, k: usize) -> u128 {
    enumerate_partitions(d, 0)
        .into_iter()
        .filter(|mu| mu.len() <= k)
        .map(|mu| weight_block(n, mu.parts()).len() as u128 * orbit_size(&mu, k))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{enumerate_omega, Partition};
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn square_examples() {
        assert_eq!(
            sq_on_monomial(1, &mono(&[1, 1])),
            vec![mono(&[1, 2]), mono(&[2, 1])]
        );
        assert_eq!(sq_on_monomial(2, &mono(&[2, 1])), vec![mono(&[4, 1])]);
        assert!(sq_on_monomial(2, &mono(&[1])).is_empty());
        assert_eq!(sq_on_monomial(0, &mono(&[3, 5])), vec![mono(&[3, 5])]);
        assert!(sq_on_monomial(1, &mono(&[2])).is_empty());
    }

    fn brute_sq(i: usize, a: &[u32]) -> Polynomial {
        // expand Π (x + x²)-style total squares variable by variable
        let mut total = Polynomial::monomial(Monomial(vec![0; a.len()]));
        for (j, &aj) in a.iter().enumerate() {
            let mut factor = Polynomial::zero();
            for r in 0..=aj {
                if crate::combinat::binomial(aj as usize, r as usize) % 2 == 1 {
                    let mut e = vec![0; a.len()];
                    e[j] = aj + r;
                    factor.add_term(Monomial(e));
                }
            }
            total = total.mul(&factor);
        }
        let degree = a.iter().sum::<u32>() as usize + i;
        Polynomial::from_terms(total.terms().filter(|m| m.degree() == degree).cloned())
    }

    #[test]
    fn squares_match_total_square_expansion() {
        for a in [[3u32, 2, 0], [1, 1, 1], [5, 0, 6], [7, 3, 1]] {
            for i in 0..=12 {
                let fast = Polynomial::from_terms(sq_on_monomial(i, &mono(&a)));
                assert_eq!(fast, brute_sq(i, &a), "Sq^{i} on {a:?}");
            }
        }
    }

    #[test]
    fn hit_quotient_examples() {
        let q = hit_quotient(3, 2);
        assert_eq!(q.dim, 3);
        assert_eq!(q.relations.rank(), 1);
        for k in 1..=4 {
            assert_eq!(hit_quotient(1, k).dim, k);
        }
        assert_eq!(hit_quotient(0, 3).dim, 1);
    }

    #[test]
    fn rank_one_spikes() {
        for n in 1..=63usize {
            let expected = usize::from((n + 1).is_power_of_two());
            assert_eq!(hit_quotient(n, 1).dim, expected, "n={n}");
        }
    }

    #[test]
    fn filtration_examples() {
        assert_eq!(
            filtration_basis(5, 3, 5).basis.len(),
            symmetric_basis(5, 3).len()
        );
        assert!(filtration_basis(4, 3, 0).basis.is_empty());
        assert_eq!(graded_piece(8, 4, 4).len(), 97);
    }

    #[test]
    fn graded_pieces_match_omega_formula() {
        for n in 0..=10 {
            for k in 0..=3 {
                let mut total = 0;
                for d in 0..=n {
                    let formula: u128 = enumerate_omega(d, n, 2)
                        .iter()
                        .map(|w| {
                            w.entries()
                                .iter()
                                .map(|&x| binomial(k, x))
                                .product::<u128>()
                        })
                        .sum();
                    assert_eq!(graded_piece(n, k, d).len() as u128, formula);
                    assert_eq!(graded_piece_dim_by_blocks(n, d, k), formula);
                    total += formula;
                }
                assert_eq!(total, ambient_size(n, k));
            }
        }
    }

    #[test]
    fn induced_square_examples() {
        let m = induced_sq_on_gr(1, 3, 2, 2);
        // x·y ↦ x²y + xy², both of weight 2
        assert_eq!(m.ncols(), 1);
        assert_eq!(m.count_ones(), 2);
        let m = induced_sq_on_gr(1, 2, 1, 1);
        assert_eq!(m.count_ones(), 1);
        let m = induced_sq_on_gr(1, 3, 1, 1);
        assert!(m.is_zero());
    }

    #[test]
    fn top_level_is_exterior() {
        for n in 1..=6 {
            for k in 0..=6 {
                assert_eq!(qa_space(n, n, k).dim as u128, binomial(k, n));
                assert_eq!(qa_dim(n, n, k), binomial(k, n));
            }
        }
    }

    #[test]
    fn q7_3_is_s3() {
        for k in 0..=4 {
            assert_eq!(qa_space(7, 3, k).dim as u128, binomial(k + 2, 3));
        }
    }

    #[test]
    fn q7_3_kernel() {
        for k in 1..=4 {
            assert_eq!(kernel_dim(7, 3, k) as u128, binomial(k, 2));
        }
        assert_eq!(q_subquotient(7, 3, 2).subquotient, 3);
    }

    #[test]
    fn blocks_agree_with_full_spaces() {
        for n in 1..=9 {
            for d in 1..=n {
                for k in 1..=3 {
                    assert_eq!(
                        qa_space(n, d, k).dim as u128,
                        qa_dim(n, d, k),
                        "n={n} d={d} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn connectivity_bound() {
        for n in 1..=10 {
            for d in 1..=n {
                if 2 * d > n + 1 {
                    let k = 2 * d - n - 1;
                    assert_eq!(qa_dim(n, d, k), 0, "n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn subquotients_telescope() {
        for n in 1..=8 {
            for k in 1..=3 {
                let total: usize = (0..=n).map(|d| q_subquotient(n, d, k).subquotient).sum();
                assert_eq!(total, hit_quotient(n, k).dim);
                assert_eq!(q_subquotient(n, n, k).image, hit_quotient(n, k).dim);
            }
        }
    }

    #[test]
    fn characters_of_small_cases() {
        assert_eq!(qa_character(3, 2).to_string(), "m(2) + m(1^2)");
        for n in 1..=6 {
            assert_eq!(
                qa_character(n, n).to_string(),
                format!("m{}", Partition::column(n).pretty())
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 256, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

        #[test]
        fn digit_weight_never_increases(a in 0u32..1024, sub in 0u32..1024) {
            let i = sub & a;
            prop_assert!((a + i).count_ones() <= a.count_ones());
        }

        #[test]
        fn cartan_formula(
            f in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 1..4),
            g in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 1..4),
            i in 0usize..12,
        ) {
            let f = Polynomial::from_terms(f.into_iter().map(Monomial));
            let g = Polynomial::from_terms(g.into_iter().map(Monomial));
            let lhs = f.mul(&g).sq(i);
            let mut rhs = Polynomial::zero();
            for j in 0..=i {
                rhs.add(&f.sq(j).mul(&g.sq(i - j)));
            }
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn squares_preserve_weight_blocks(a in proptest::collection::vec(0u32..16, 1..4), s in 0usize..4) {
            let m = Monomial(a);
            let w = m.digit_weights();
            for t in sq_on_monomial(1 << s, &m) {
                prop_assert!(t.digit_weights().iter().zip(&w).all(|(x, y)| x <= y));
            }
        }
    }

    #[test]
    fn adem_generation() {
        for n in 1..=12 {
            for k in 1..=3 {
                assert_eq!(
                    hit_dim_with(n, k, Generators::PowersOfTwo),
                    hit_dim_with(n, k, Generators::All),
                    "Q^{n}({k})"
                );
            }
            for d in 1..=n {
                assert_eq!(
                    qa_character_with(n, d, Generators::PowersOfTwo),
                    qa_character_with(n, d, Generators::All),
                    "𝔔^{n}_{d}"
                );
            }
        }
    }
}
