//! Characters, Grothendieck-group classes, and the periodicity and
//! isomorphism checks built on them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::combinat::{enumerate_partitions, orbit_size, stability, Partition, Stability};
use crate::functor_eval::{FunctorError, SimpleCharacters};
use crate::steenrod::{ambient_size, kernel_dim, qa_character};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum G0Error {
    #[error("multiplicity of L{partition:?} would be {coefficient}")]
    NegativeMultiplicity {
        partition: Partition,
        coefficient: i64,
    },
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// A symmetric function of degree d in the monomial basis; the coefficient
/// of `m_μ` is the dimension of the μ weight space.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Character {
    degree: usize,
    coefficients: BTreeMap<Partition, u64>,
}

impl Character {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coefficients: BTreeMap::new(),
        }
    }

    /// The character of the constant functor, `m_()`.
    pub fn one() -> Self {
        let mut chi = Self::zero(0);
        chi.set(&Partition::empty(), 1);
        chi
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, mu: &Partition) -> u64 {
        self.coefficients.get(mu).copied().unwrap_or(0)
    }

    pub fn set(&mut self, mu: &Partition, value: u64) {
        assert_eq!(mu.size(), self.degree, "m{mu:?} has the wrong degree");
        if value == 0 {
            self.coefficients.remove(mu);
        } else {
            self.coefficients.insert(mu.clone(), value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Partitions with nonzero coefficient, lexicographically descending.
    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coefficients.keys().rev()
    }

    /// `(μ, coefficient)` pairs, lexicographically descending in μ.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.coefficients.iter().rev().map(|(mu, &c)| (mu, c))
    }

    /// Value of the character at `(1, …, 1)` with k ones: `dim F(F₂^k)`.
    pub fn dim_at(&self, k: usize) -> u128 {
        self.coefficients
            .iter()
            .map(|(mu, &c)| c as u128 * orbit_size(mu, k))
            .sum()
    }

    /// `χ(x) ↦ χ(x^{2^i})`, sending `m_μ` to `m_{2^i μ}`.
    pub fn frobenius_twist(&self, i: u32) -> Character {
        let scale = 1usize << i;
        let mut out = Character::zero(self.degree * scale);
        for (mu, &c) in &self.coefficients {
            let parts: Vec<usize> = mu.parts().iter().map(|&x| x * scale).collect();
            out.set(&Partition::from_composition(&parts), c);
        }
        out
    }

    /// Product of symmetric functions in the monomial basis.
    pub fn mul(&self, other: &Character) -> Character {
        let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
        for (alpha, &a) in &self.coefficients {
            for (beta, &b) in &other.coefficients {
                for (nu, c) in monomial_product(alpha, beta) {
                    *acc.entry(nu).or_default() += a * b * c;
                }
            }
        }
        Character {
            degree: self.degree + other.degree,
            coefficients: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }
}

/// `m_α · m_β = Σ_ν c_ν m_ν`.
///
/// With α placed in the first slots of `N = l(α) + l(β)` variables, count
/// the arrangements b of β with `sort(α + b) = ν`; the structure constant is
/// that count scaled by `orbit(α) / orbit(ν)`.
fn monomial_product(alpha: &Partition, beta: &Partition) -> Vec<(Partition, u64)> {
    let slots = alpha.len() + beta.len();
    let mut base = alpha.parts().to_vec();
    base.resize(slots, 0);
    let mut padded = beta.parts().to_vec();
    padded.resize(slots, 0);
    let mut counts: BTreeMap<Partition, u128> = BTreeMap::new();
    for b in distinct_permutations(&padded) {
        let sum: Vec<usize> = base.iter().zip(&b).map(|(x, y)| x + y).collect();
        *counts.entry(Partition::from_composition(&sum)).or_default() += 1;
    }
    let orbit_alpha = orbit_size(alpha, slots);
    counts
        .into_iter()
        .map(|(nu, count)| {
            let scaled = count * orbit_alpha;
            let orbit_nu = orbit_size(&nu, slots);
            debug_assert_eq!(scaled % orbit_nu, 0);
            (nu, (scaled / orbit_nu) as u64)
        })
        .collect()
}

fn distinct_permutations(values: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation until exhausted
    while let Some(i) = (0..sorted.len().saturating_sub(1))
        .rev()
        .find(|&i| sorted[i] < sorted[i + 1])
    {
        let j = (i + 1..sorted.len())
            .rev()
            .find(|&j| sorted[j] > sorted[i])
            .unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mu, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "m{}", mu.pretty())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ[{}]", self)
    }
}

/// A class in `G₀(𝒫_d)`: integer multiplicities of the simples `L_λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct G0ClassP {
    pub degree: usize,
    multiplicities: BTreeMap<Partition, i64>,
}

impl Serialize for G0ClassP {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: String,
            multiplicity: &'a i64,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            degree: usize,
            factors: Vec<Term<'a>>,
        }
        Repr {
            degree: self.degree,
            factors: self
                .multiplicities
                .iter()
                .rev()
                .map(|(p, m)| Term {
                    partition: p.to_string(),
                    multiplicity: m,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl G0ClassP {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            multiplicities: BTreeMap::new(),
        }
    }

    pub fn from_factors(degree: usize, factors: &[(Partition, i64)]) -> Self {
        let mut class = Self::zero(degree);
        for (lambda, m) in factors {
            class.add(lambda, *m);
        }
        class
    }

    pub fn multiplicity(&self, lambda: &Partition) -> i64 {
        self.multiplicities.get(lambda).copied().unwrap_or(0)
    }

    pub fn add(&mut self, lambda: &Partition, m: i64) {
        let entry = self.multiplicities.entry(lambda.clone()).or_default();
        *entry += m;
        if *entry == 0 {
            self.multiplicities.remove(lambda);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `(λ, multiplicity)`, lexicographically descending in λ.
    pub fn factors(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.multiplicities.iter().rev().map(|(l, &m)| (l, m))
    }

    pub fn total_multiplicity(&self) -> i64 {
        self.multiplicities.values().sum()
    }

    pub fn all_restricted(&self) -> bool {
        self.multiplicities.keys().all(|l| l.is_p_restricted(2))
    }
}

impl fmt::Display for G0ClassP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (lambda, m)) in self.factors().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "[L{}]", lambda.pretty())?;
        }
        Ok(())
    }
}

impl fmt::Debug for G0ClassP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A formal Steinberg product `⊗ᵢ L_{λ[i]}^{(i)}` of 2-restricted simples,
/// trailing empty factors removed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SteinbergProduct(Vec<Partition>);

impl SteinbergProduct {
    pub fn new(mut levels: Vec<Partition>) -> Self {
        assert!(
            levels.iter().all(|l| l.is_p_restricted(2)),
            "twisted factors must be 2-restricted"
        );
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        Self(levels)
    }

    pub fn levels(&self) -> &[Partition] {
        &self.0
    }

    /// Sum of the sizes of the factors.
    pub fn untwisted_degree(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for SteinbergProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, lambda) in self.0.iter().enumerate() {
            if lambda.is_empty() {
                continue;
            }
            if !first {
                write!(f, "⊗")?;
            }
            first = false;
            write!(f, "L{}", lambda.pretty())?;
            if i > 0 {
                write!(f, "^({i})")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SteinbergProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A class of formal Steinberg products.
#[derive(Clone, PartialEq, Eq, Default, Debug, Serialize)]
pub struct G0ClassF {
    multiplicities: BTreeMap<SteinbergProduct, i64>,
}

impl G0ClassF {
    pub fn multiplicity(&self, product: &SteinbergProduct) -> i64 {
        self.multiplicities.get(product).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SteinbergProduct, i64)> {
        self.multiplicities.iter().map(|(p, &m)| (p, m))
    }
}

impl fmt::Display for G0ClassF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.multiplicities.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "[{p}]")?;
        }
        Ok(())
    }
}

/// Peels off simple characters from the top of the dominance order.
pub fn decompose_character(
    chi: &Character,
    simples: &SimpleCharacters,
) -> Result<G0ClassP, G0Error> {
    let mut remainder: BTreeMap<Partition, i64> =
        chi.terms().map(|(mu, c)| (mu.clone(), c as i64)).collect();
    let mut class = G0ClassP::zero(chi.degree());
    // lexicographically largest first, a linear extension of dominance
    while let Some((top, &c)) = remainder.iter().next_back() {
        let top = top.clone();
        if c < 0 {
            return Err(G0Error::NegativeMultiplicity {
                partition: top,
                coefficient: c,
            });
        }
        let simple = simples.get(&top)?;
        for (mu, s) in simple.terms() {
            let entry = remainder.entry(mu.clone()).or_default();
            *entry -= c * s as i64;
            if *entry == 0 {
                remainder.remove(mu);
            }
        }
        debug_assert!(!remainder.contains_key(&top));
        class.add(&top, c);
    }
    Ok(class)
}

/// Replaces each `L_λ` by its Steinberg factorization.
pub fn steinberg_reduce(class: &G0ClassP) -> G0ClassF {
    let mut out = G0ClassF::default();
    for (lambda, m) in class.factors() {
        let product = SteinbergProduct::new(lambda.p_adic_decompose(2));
        let entry = out.multiplicities.entry(product.clone()).or_default();
        *entry += m;
        if *entry == 0 {
            out.multiplicities.remove(&product);
        }
    }
    out
}

/// `λ ↦ λ • 1^m` on every factor.
pub fn concat_class(class: &G0ClassP, m: usize) -> G0ClassP {
    let mut out = G0ClassP::zero(class.degree + m);
    for (lambda, mult) in class.factors() {
        out.add(&lambda.concat_ones(m), mult);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StabilityStatus {
    Verified,
    Failed,
    NotApplicable,
}

impl fmt::Display for StabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilityStatus::Verified => "VERIFIED",
            StabilityStatus::Failed => "FAILED",
            StabilityStatus::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// One target partition and the multiplicities on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityRow {
    pub source: Option<Partition>,
    pub target: Partition,
    pub transported: i64,
    pub computed: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub n: usize,
    pub d: usize,
    pub e: usize,
    pub status: StabilityStatus,
    pub hypotheses: Option<Stability>,
    pub source: Option<G0ClassP>,
    pub target: Option<G0ClassP>,
    pub rows: Vec<MultiplicityRow>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IsoVerdict {
    Guaranteed,
    Unknown,
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsoVerdict::Guaranteed => "GUARANTEED",
            IsoVerdict::Unknown => "UNKNOWN",
        })
    }
}

/// A factor `L_λ` of `𝔔^m_e` that may share a composition factor in `G₀(ℱ)`
/// with the factor `L_against` of `𝔔ⁿ_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub m: usize,
    pub e: usize,
    pub lambda: Partition,
    pub against: Partition,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoCriterionResult {
    pub n: usize,
    pub d: usize,
    pub verdict: IsoVerdict,
    pub witnesses: Vec<IsoWitness>,
}

/// Degrees of the ℱ-composition factors that `L_λ` may have: exactly `|λ|`
/// when λ is 2-restricted, otherwise anything from 1 up to the sum of the
/// sizes of its Steinberg factors.
pub fn degree_window(lambda: &Partition) -> (usize, usize) {
    if lambda.is_p_restricted(2) {
        (lambda.size(), lambda.size())
    } else {
        (
            1,
            lambda.p_adic_decompose(2).iter().map(Partition::size).sum(),
        )
    }
}

fn windows_meet(a: &Partition, b: &Partition) -> bool {
    if a.is_p_restricted(2) && b.is_p_restricted(2) {
        return a == b;
    }
    let (lo_a, hi_a) = degree_window(a);
    let (lo_b, hi_b) = degree_window(b);
    lo_a <= hi_b && lo_b <= hi_a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConjectureStatus {
    ProvedEqual,
    Consistent,
    Refuted,
    Inconclusive,
}

impl fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureStatus::ProvedEqual => "PROVED_EQUAL",
            ConjectureStatus::Consistent => "CONSISTENT",
            ConjectureStatus::Refuted => "REFUTED",
            ConjectureStatus::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Evidence that `Q^m_j ≅ 𝔔^m_j` at one filtration level.
#[derive(Clone, Debug, Serialize)]
pub struct LevelSide {
    pub m: usize,
    pub level: usize,
    pub criterion: IsoVerdict,
    /// `(k, dim K^m_j(F₂^k))` for every rank that fit the budget.
    pub kernels: Vec<(usize, usize)>,
    /// The kernel is known to vanish as a functor.
    pub certified: bool,
    /// Some evaluated kernel is nonzero.
    pub kernel_nonzero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelEvidence {
    pub source: LevelSide,
    pub target: LevelSide,
    pub periodicity: StabilityStatus,
}

/// An exact disagreement between the transported and the computed class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationWitness {
    pub partition: Partition,
    pub transported: i64,
    pub computed: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub d: usize,
    pub e: usize,
    pub max_rank: usize,
    pub status: ConjectureStatus,
    pub levels: Vec<LevelEvidence>,
    pub witness: Option<RefutationWitness>,
    pub notes: Vec<String>,
}

/// Expected cells of the `n ≤ 8` table as `(n, d, factors)`; every other
/// cell with `1 ≤ d ≤ n ≤ 8` vanishes.
pub const TABLE_N8: &[(usize, usize, &[&str])] = &[
    (1, 1, &["1"]),
    (2, 2, &["1,1"]),
    (3, 3, &["1,1,1"]),
    (3, 2, &["2", "1,1"]),
    (4, 4, &["1,1,1,1"]),
    (4, 3, &["2,1"]),
    (5, 5, &["1,1,1,1,1"]),
    (5, 4, &["2,1,1", "1,1,1,1"]),
    (6, 6, &["1,1,1,1,1,1"]),
    (6, 5, &["2,1,1,1"]),
    (6, 4, &["2,2", "2,1,1"]),
    (7, 7, &["1,1,1,1,1,1,1"]),
    (7, 6, &["2,1,1,1,1", "1,1,1,1,1,1"]),
    (7, 5, &["2,2,1", "1,1,1,1,1"]),
    (7, 4, &["1,1,1,1"]),
    (7, 3, &["3", "1,1,1"]),
    (8, 8, &["1,1,1,1,1,1,1,1"]),
    (8, 7, &["2,1,1,1,1,1"]),
    (8, 6, &["2,2,1,1", "1,1,1,1,1,1", "2,1,1,1,1"]),
    (8, 5, &["2,1,1,1"]),
    (8, 4, &["3,1", "2,2", "1,1,1,1", "2,1,1"]),
];

/// The expected class of `𝔔ⁿ_d` for `n ≤ 8`.
pub fn expected_table_cell(n: usize, d: usize) -> G0ClassP {
    let mut class = G0ClassP::zero(d);
    if let Some((_, _, factors)) = TABLE_N8.iter().find(|(a, b, _)| *a == n && *b == d) {
        for f in *factors {
            class.add(&f.parse().expect("table partitions parse"), 1);
        }
    }
    class
}

/// One cell of a reproduced table.
#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    pub n: usize,
    pub d: usize,
    pub class: G0ClassP,
    pub expected: Option<G0ClassP>,
}

impl TableCell {
    pub fn matches(&self) -> bool {
        self.expected.as_ref().is_none_or(|e| *e == self.class)
    }
}

/// Whether the concatenation square commutes on a simple `L_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DiagramOutcome {
    Commutes,
    /// `d = 2t` and `λ[0] = ()`: concatenation changes the restricted part
    /// itself, so the square is not expected to commute.
    BoundaryException,
    Fails,
}

/// Checks `(λ • 1^{e−d})[0] = λ[0] • 1^{e−d}` and `(λ • 1^{e−d})[i] = λ[i]`
/// for `i ≥ 1`, which is the commutativity of the concatenation square on
/// Steinberg factorizations.
pub fn g0_diagram_check(
    lambda: &Partition,
    d: usize,
    t: usize,
    e: usize,
) -> Result<DiagramOutcome, G0Error> {
    if lambda.size() != d {
        return Err(G0Error::Precondition(format!("|{lambda:?}| ≠ {d}")));
    }
    let hyp = stability(d, t, e, 2).map_err(|err| G0Error::Precondition(err.to_string()))?;
    if !hyp.stable || !hyp.congruent {
        return Err(G0Error::Precondition(format!(
            "({d},{t}) with e = {e} is not a stable congruent pair"
        )));
    }
    if d < t || lambda.len() < d - t {
        return Err(G0Error::Precondition(format!("l{lambda:?} < {d} − {t}")));
    }
    let pieces = lambda.p_adic_decompose(2);
    let image = lambda.concat_ones(e - d).p_adic_decompose(2);
    let mut predicted = pieces.clone();
    predicted[0] = pieces[0].concat_ones(e - d);
    if SteinbergProduct::new(image) == SteinbergProduct::new(predicted) {
        Ok(DiagramOutcome::Commutes)
    } else if d == 2 * t && pieces[0].is_empty() {
        Ok(DiagramOutcome::BoundaryException)
    } else {
        Ok(DiagramOutcome::Fails)
    }
}

type ClassSlot = Arc<OnceLock<Result<Arc<G0ClassP>, G0Error>>>;

/// Shared state for the Grothendieck-group computations: a table of simple
/// characters and memoized classes `[𝔔ⁿ_d]`.
pub struct Analysis {
    simples: SimpleCharacters,
    classes: Mutex<HashMap<(usize, usize), ClassSlot>>,
    /// Largest `Sⁿ(F₂^k)` basis evaluated directly for kernel evidence.
    pub kernel_budget: u128,
}

impl Default for Analysis {
    fn default() -> Self {
        Self::new(SimpleCharacters::new())
    }
}

/// Default ceiling on the ambient basis for direct kernel evaluation.
pub const KERNEL_BUDGET: u128 = 4000;

impl Analysis {
    pub fn new(simples: SimpleCharacters) -> Self {
        Self {
            simples,
            classes: Mutex::new(HashMap::new()),
            kernel_budget: KERNEL_BUDGET,
        }
    }

    pub fn simples(&self) -> &SimpleCharacters {
        &self.simples
    }

    pub fn decompose(&self, chi: &Character) -> Result<G0ClassP, G0Error> {
        decompose_character(chi, &self.simples)
    }

    /// `[𝔔ⁿ_d] ∈ G₀(𝒫_d)`.
    pub fn qa_class(&self, n: usize, d: usize) -> Result<Arc<G0ClassP>, G0Error> {
        let slot = {
            let mut classes = self.classes.lock().expect("class table poisoned");
            classes.entry((n, d)).or_default().clone()
        };
        slot.get_or_init(|| {
            let chi = qa_character(n, d);
            self.decompose(&chi).map(Arc::new)
        })
        .clone()
    }

    /// Compares `[𝔔ⁿ_d] • 1^{e−d}` with `[𝔔^{n+e−d}_e]`.
    pub fn periodicity_check(
        &self,
        n: usize,
        d: usize,
        e: usize,
    ) -> Result<StabilityReport, G0Error> {
        let not_applicable = |hypotheses| StabilityReport {
            n,
            d,
            e,
            status: StabilityStatus::NotApplicable,
            hypotheses,
            source: None,
            target: None,
            rows: Vec::new(),
        };
        if d > n || e <= d {
            return Ok(not_applicable(None));
        }
        let hyp =
            stability(d, n - d, e, 2).map_err(|err| G0Error::Precondition(err.to_string()))?;
        if !hyp.stable || !hyp.congruent {
            return Ok(not_applicable(Some(hyp)));
        }
        let source = self.qa_class(n, d)?;
        let target = self.qa_class(n + e - d, e)?;
        let transported = concat_class(&source, e - d);
        let mut targets: Vec<Partition> = transported
            .factors()
            .chain(target.factors())
            .map(|(l, _)| l.clone())
            .collect();
        targets.sort();
        targets.dedup();
        targets.reverse();
        let rows: Vec<MultiplicityRow> = targets
            .into_iter()
            .map(|nu| MultiplicityRow {
                source: nu.strip_ones(e - d),
                transported: transported.multiplicity(&nu),
                computed: target.multiplicity(&nu),
                target: nu,
            })
            .collect();
        let status = if rows.iter().all(|r| r.transported == r.computed) {
            StabilityStatus::Verified
        } else {
            StabilityStatus::Failed
        };
        Ok(StabilityReport {
            n,
            d,
            e,
            status,
            hypotheses: Some(hyp),
            source: Some((*source).clone()),
            target: Some((*target).clone()),
            rows,
        })
    }

    /// Sufficient condition for `𝔔ⁿ_d ≅ Qⁿ_d`: no factor of `𝔔ⁿ_d` can share
    /// an ℱ-composition factor with any `𝔔^m_e`, `d < e ≤ m < n`.
    pub fn iso_criterion(&self, n: usize, d: usize) -> Result<IsoCriterionResult, G0Error> {
        let mut witnesses = Vec::new();
        if d <= n {
            let own = self.qa_class(n, d)?;
            for m in d + 1..n {
                for e in d + 1..=m {
                    let other = self.qa_class(m, e)?;
                    for (lambda, _) in other.factors() {
                        for (against, _) in own.factors() {
                            if windows_meet(lambda, against) {
                                witnesses.push(IsoWitness {
                                    m,
                                    e,
                                    lambda: lambda.clone(),
                                    against: against.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        let verdict = if witnesses.is_empty() {
            IsoVerdict::Guaranteed
        } else {
            IsoVerdict::Unknown
        };
        Ok(IsoCriterionResult {
            n,
            d,
            verdict,
            witnesses,
        })
    }

    fn level_side(&self, m: usize, level: usize, max_rank: usize) -> Result<LevelSide, G0Error> {
        let criterion = self.iso_criterion(m, level)?.verdict;
        let mut kernels = Vec::new();
        for k in 1..=max_rank {
            if ambient_size(m, k) > self.kernel_budget {
                break;
            }
            kernels.push((k, kernel_dim(m, level, k)));
        }
        let kernel_nonzero = kernels.iter().any(|&(_, dim)| dim != 0);
        // a functor of degree at most `level` vanishing on F₂^level is zero
        let evaluated_zero = !kernel_nonzero && kernels.iter().any(|&(k, _)| k >= level);
        Ok(LevelSide {
            m,
            level,
            criterion,
            kernels,
            certified: !kernel_nonzero && (criterion == IsoVerdict::Guaranteed || evaluated_zero),
            kernel_nonzero,
        })
    }

    /// Status of the conjectured transport `[Qⁿ/Qⁿ[d−1]] ↦ [Q^{n+e−d}/Q^{n+e−d}[e−1]]`.
    pub fn conjecture_report(
        &self,
        n: usize,
        d: usize,
        e: usize,
        max_rank: usize,
    ) -> Result<ConjectureReport, G0Error> {
        let mut report = ConjectureReport {
            n,
            d,
            e,
            max_rank,
            status: ConjectureStatus::Inconclusive,
            levels: Vec::new(),
            witness: None,
            notes: Vec::new(),
        };
        if d == 0 || d > n {
            report.notes.push("need 0 < d ≤ n".into());
            return Ok(report);
        }
        if e == d {
            report.status = ConjectureStatus::ProvedEqual;
            report.notes.push("e = d: identity comparison".into());
            return Ok(report);
        }
        if e < d {
            report.notes.push("need e ≥ d".into());
            return Ok(report);
        }
        let hyp =
            stability(d, n - d, e, 2).map_err(|err| G0Error::Precondition(err.to_string()))?;
        if !hyp.strictly_stable || !hyp.congruent {
            report.notes.push(format!(
                "hypotheses not met: strictly stable {}, congruent mod {} {}",
                hyp.strictly_stable, hyp.modulus, hyp.congruent
            ));
            return Ok(report);
        }
        let shift = e - d;
        let mut source_total = G0ClassP::zero(0);
        let mut target_total = G0ClassP::zero(0);
        let mut all_restricted = true;
        for i in d..=n {
            let periodicity = self.periodicity_check(n, i, i + shift)?;
            let source = self.level_side(n, i, max_rank)?;
            let target = self.level_side(n + shift, i + shift, max_rank)?;
            let a = self.qa_class(n, i)?;
            let b = self.qa_class(n + shift, i + shift)?;
            all_restricted &= a.all_restricted() && b.all_restricted();
            for (lambda, m) in concat_class(&a, shift).factors() {
                source_total.add(lambda, m);
            }
            for (lambda, m) in b.factors() {
                target_total.add(lambda, m);
            }
            report.levels.push(LevelEvidence {
                source,
                target,
                periodicity: periodicity.status,
            });
        }
        let certified = report
            .levels
            .iter()
            .all(|l| l.source.certified && l.target.certified);
        let nonzero = report
            .levels
            .iter()
            .any(|l| l.source.kernel_nonzero || l.target.kernel_nonzero);
        let matches = source_total == target_total;
        report.status = if certified && matches {
            ConjectureStatus::ProvedEqual
        } else if certified && all_restricted {
            // every factor is a simple functor, so the classes are compared exactly
            let mut keys: Vec<&Partition> = source_total
                .factors()
                .chain(target_total.factors())
                .map(|(l, _)| l)
                .collect();
            keys.sort();
            let nu = keys
                .into_iter()
                .rev()
                .find(|nu| source_total.multiplicity(nu) != target_total.multiplicity(nu))
                .expect("classes differ somewhere");
            report.witness = Some(RefutationWitness {
                partition: nu.clone(),
                transported: source_total.multiplicity(nu),
                computed: target_total.multiplicity(nu),
            });
            ConjectureStatus::Refuted
        } else if certified {
            report.notes.push(
                "classes differ on non-restricted factors, whose ℱ-decomposition is not computed"
                    .into(),
            );
            ConjectureStatus::Inconclusive
        } else if !nonzero && matches {
            ConjectureStatus::Consistent
        } else {
            ConjectureStatus::Inconclusive
        };
        Ok(report)
    }

    /// `[𝔔ⁿ_d]` for `1 ≤ d ≤ n ≤ max_n`, with the expected cells attached for
    /// `n ≤ 8`.
    pub fn reproduce_table(&self, max_n: usize) -> Result<Vec<TableCell>, G0Error> {
        let mut cells = Vec::new();
        for n in 1..=max_n {
            for d in 1..=n {
                let class = (*self.qa_class(n, d)?).clone();
                let expected = (n <= 8).then(|| expected_table_cell(n, d));
                cells.push(TableCell {
                    n,
                    d,
                    class,
                    expected,
                });
            }
        }
        Ok(cells)
    }
}

/// The `n ≤ 8` table together with the expected cells.
pub fn reproduce_table_n8(analysis: &Analysis) -> Result<Vec<TableCell>, G0Error> {
    analysis.reproduce_table(8)
}

/// Characters of `Λ^ω = ⊗ᵢ Λ^{ωᵢ}` (untwisted), as products of `m_{(1^j)}`.
pub fn exterior_tensor_character(omega: &[usize]) -> Character {
    omega.iter().fold(Character::one(), |acc, &w| {
        let mut e = Character::zero(w);
        e.set(&Partition::column(w), 1);
        acc.mul(&e)
    })
}

/// All partitions of d that can occur in `𝔔ⁿ_d`.
pub fn admissible_partitions(n: usize, d: usize) -> Vec<Partition> {
    let floor = (2 * d).saturating_sub(n);
    enumerate_partitions(d, floor)
}
