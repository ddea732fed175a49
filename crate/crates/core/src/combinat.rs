//! Partitions, ω-sequences and the index sets of the polynomial filtration.
//!
//! Everything here is parametric in the prime `p`; the Steenrod engine only
//! ever asks for `p = 2`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatError {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse {0:?} as a list of naturals")]
    Parse(String),
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("stability comparison needs e > d, got d = {d}, e = {e}")]
    NotIncreasing { d: usize, e: usize },
    #[error("{0} is not a prime")]
    NotPrime(usize),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatError> {
        let ok = parts.iter().all(|&x| x > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self(parts))
        } else {
            Err(CombinatError::NotAPartition(parts))
        }
    }

    /// Drops zeros and sorts; for callers holding a composition.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self(vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The i-th part, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (0..first)
                .map(|i| self.0.iter().take_while(|&&x| x > i).count())
                .collect(),
        )
    }

    /// `self ⊴ other` in the dominance order.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, CombinatError> {
        if self.size() != other.size() {
            return Err(CombinatError::SizeMismatch(self.size(), other.size()));
        }
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dominance for partitions already known to have equal size.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        self.dominance_leq(other).unwrap_or(false)
    }

    pub fn is_p_restricted(&self, p: usize) -> bool {
        (0..self.len()).all(|i| self.part(i) - self.part(i + 1) < p)
    }

    /// The unique p-restricted `λ[0], λ[1], …` with `λ = Σ pⁱ λ[i]`.
    ///
    /// Built from the base-p digits of the gaps `λⱼ − λⱼ₊₁`. The list always
    /// has at least one entry and never ends in an empty partition unless it
    /// is `[()]`.
    pub fn p_adic_decompose(&self, p: usize) -> Vec<Partition> {
        let gaps: Vec<usize> = (0..self.len())
            .map(|j| self.part(j) - self.part(j + 1))
            .collect();
        let mut levels: Vec<Vec<usize>> = Vec::new();
        let mut rest = gaps;
        while rest.iter().any(|&g| g > 0) || levels.is_empty() {
            let digits: Vec<usize> = rest.iter().map(|g| g % p).collect();
            rest.iter_mut().for_each(|g| *g /= p);
            levels.push(digits);
        }
        levels
            .into_iter()
            .map(|digits| {
                // parts are suffix sums of the gap digits
                let mut parts = vec![0; digits.len()];
                let mut acc = 0;
                for j in (0..digits.len()).rev() {
                    acc += digits[j];
                    parts[j] = acc;
                }
                Partition::from_composition(&parts)
            })
            .collect()
    }

    /// `λ • 1^m`: append m parts equal to one.
    pub fn concat_ones(&self, m: usize) -> Partition {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, m));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    /// Removes trailing parts equal to one, up to `m` of them; the inverse of
    /// `concat_ones` where defined.
    pub fn strip_ones(&self, m: usize) -> Option<Partition> {
        let ones = self.0.iter().rev().take_while(|&&x| x == 1).count();
        if ones < m {
            return None;
        }
        Some(Partition(self.0[..self.len() - m].to_vec()))
    }

    /// Termwise sum with scaling, `self + factor · other`.
    pub fn add_scaled(&self, other: &Partition, factor: usize) -> Partition {
        let n = self.len().max(other.len());
        Partition(
            (0..n)
                .map(|i| self.part(i) + factor * other.part(i))
                .collect(),
        )
    }

    /// Compact human notation, e.g. `(2^2,1^3)`.
    pub fn pretty(&self) -> String {
        if self.is_empty() {
            return "()".to_string();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let v = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == v).count();
            if run == 1 {
                out.push(v.to_string());
            } else {
                out.push(format!("{v}^{run}"));
            }
            i += run;
        }
        format!("({})", out.join(","))
    }
}

impl Ord for Partition {
    /// Lexicographic on parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for Partition {
    type Err = CombinatError;

    /// Accepts `2,1,1`; the empty partition is `""`, `"0"` or `"()"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(Partition::empty());
        }
        let parts = parse_list(trimmed).ok_or_else(|| CombinatError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombinatError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

fn parse_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// Finite sequence `ω₀, ω₁, …` of naturals with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OmegaSequence(Vec<usize>);

impl OmegaSequence {
    pub fn new(mut entries: Vec<usize>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Self(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `|ω| = Σ ωᵢ`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `‖ω‖ = Σ ωᵢ pⁱ`.
    pub fn degree(&self, p: usize) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &w)| w * p.pow(i as u32))
            .sum()
    }
}

impl fmt::Display for OmegaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for OmegaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for OmegaSequence {
    type Err = CombinatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if inner.is_empty() {
            return Ok(OmegaSequence::new(Vec::new()));
        }
        parse_list(inner)
            .map(OmegaSequence::new)
            .ok_or_else(|| CombinatError::Parse(s.to_string()))
    }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..p)
            .take_while(|q| q * q <= p)
            .all(|q| !p.is_multiple_of(q))
}

/// `⌈log_p t⌉`, with the convention that `⌈log_p 0⌉ = 0`.
pub fn ceil_log(t: usize, p: usize) -> u32 {
    let mut e = 0;
    let mut power = 1;
    while power < t {
        power *= p;
        e += 1;
    }
    e
}

/// Smallest power of `p` strictly greater than `t`. Periodicity of the
/// computed tables holds for shifts divisible by this, which for `t = 1, 2`
/// is larger than `p^⌈log_p t⌉`.
pub fn sharp_modulus(t: usize, p: usize) -> usize {
    let mut power = 1;
    while power <= t {
        power *= p;
    }
    power
}

/// All partitions of `d` with at least `min_length` parts, listed in
/// decreasing lexicographic order. This is a linear extension of dominance:
/// whenever `μ ◁ λ`, λ is listed first.
pub fn enumerate_partitions(d: usize, min_length: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() >= min_length);
    out
}

/// All ω with `|ω| = d` and `‖ω‖ = n`, in increasing lexicographic order.
pub fn enumerate_omega(d: usize, n: usize, p: usize) -> Vec<OmegaSequence> {
    fn go(
        level: usize,
        weight_left: usize,
        degree_left: usize,
        p: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<OmegaSequence>,
    ) {
        let unit = p.pow(level as u32);
        if weight_left == 0 {
            if degree_left == 0 {
                out.push(OmegaSequence::new(current.clone()));
            }
            return;
        }
        // every remaining unit of weight costs at least `unit` in degree
        if unit * weight_left > degree_left {
            return;
        }
        for w in 0..=weight_left {
            if w * unit > degree_left {
                break;
            }
            current.push(w);
            go(
                level + 1,
                weight_left - w,
                degree_left - w * unit,
                p,
                current,
                out,
            );
            current.pop();
        }
    }
    if d > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(0, d, n, p, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All weak compositions of `d` into exactly `k` parts, lexicographically
/// decreasing.
pub fn compositions(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for x in (0..=remaining).rev() {
            current.push(x);
            go(remaining - x, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(d, k, &mut Vec::new(), &mut out);
    out
}

/// Number of distinct rearrangements of `μ` padded with zeros to `k` slots.
pub fn orbit_size(mu: &Partition, k: usize) -> u128 {
    if mu.len() > k {
        return 0;
    }
    let mut counts: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < mu.len() {
        let run = mu.parts()[i..]
            .iter()
            .take_while(|&&x| x == mu.part(i))
            .count();
        counts.push(run);
        i += run;
    }
    counts.push(k - mu.len());
    multinomial(&counts)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

pub fn multinomial(counts: &[usize]) -> u128 {
    let mut total = 0;
    let mut acc = 1u128;
    for &c in counts {
        total += c;
        acc *= binomial(total, c);
    }
    acc
}

/// Hypotheses of the periodicity statements for `(d, t)` and a target `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Stability {
    pub stable: bool,
    pub strictly_stable: bool,
    pub congruent: bool,
    pub modulus: usize,
}

/// `(d, t)` stable means `d ≥ 2t`; strictly stable means `d > 2t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StablePair {
    pub d: usize,
    pub t: usize,
}

impl StablePair {
    pub fn is_stable(&self) -> bool {
        self.d >= 2 * self.t
    }

    pub fn is_strictly_stable(&self) -> bool {
        self.d > 2 * self.t
    }

    /// `p^⌈log_p t⌉`.
    pub fn modulus(&self, p: usize) -> usize {
        p.pow(ceil_log(self.t, p))
    }
}

pub fn stability(d: usize, t: usize, e: usize, p: usize) -> Result<Stability, CombinatError> {
    if !is_prime(p) {
        return Err(CombinatError::NotPrime(p));
    }
    if e <= d {
        return Err(CombinatError::NotIncreasing { d, e });
    }
    let pair = StablePair { d, t };
    let modulus = pair.modulus(p);
    Ok(Stability {
        stable: pair.is_stable(),
        strictly_stable: pair.is_strictly_stable(),
        congruent: (e - d).is_multiple_of(modulus),
        modulus,
    })
}

/// The concatenation map `Part_d^{≥d−t} → Part_e^{≥e−t}`, `λ ↦ λ • 1^{e−d}`,
/// with injectivity and surjectivity checked by enumerating both sides.
#[derive(Clone, Debug)]
pub struct StabilityMap {
    pub pairs: Vec<(Partition, Partition)>,
    pub injective: bool,
    pub surjective: bool,
}

impl StabilityMap {
    pub fn is_bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

pub fn stability_bijection(d: usize, t: usize, e: usize) -> StabilityMap {
    assert!(t <= d && d <= e, "need t ≤ d ≤ e");
    let source = enumerate_partitions(d, d - t);
    let target = enumerate_partitions(e, e - t);
    let pairs: Vec<(Partition, Partition)> = source
        .into_iter()
        .map(|lambda| {
            let image = lambda.concat_ones(e - d);
            (lambda, image)
        })
        .collect();
    let mut images: Vec<&Partition> = pairs.iter().map(|(_, img)| img).collect();
    images.sort();
    images.dedup();
    let injective = images.len() == pairs.len();
    let in_target = images.iter().all(|img| target.contains(img));
    assert!(in_target, "concatenation left the target stratum");
    let surjective = images.len() == target.len();
    StabilityMap {
        pairs,
        injective,
        surjective,
    }
}

/// A filling of a Young diagram, stored row by row.
pub type Tableau = Vec<Vec<usize>>;

/// Semistandard tableaux of shape `shape` whose content is the composition
/// `content` (value `i` appears `content[i]` times).
pub fn semistandard_tableaux(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    if shape.size() != content.iter().sum::<usize>() {
        return Vec::new();
    }
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (0..shape.part(r)).map(move |c| (r, c)))
        .collect();
    let mut grid: Tableau = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut remaining = content.to_vec();
    let mut out = Vec::new();
    fill_ssyt(
        &cells,
        0,
        &mut grid,
        &mut remaining,
        content.len(),
        &mut out,
    );
    out
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut Tableau,
    remaining: &mut [usize],
    values: usize,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(grid.clone());
        return;
    }
    let (r, c) = cells[idx];
    let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
    for v in lo_row.max(lo_col)..values {
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        grid[r][c] = v;
        fill_ssyt(cells, idx + 1, grid, remaining, values, out);
        remaining[v] += 1;
    }
}

/// Number of semistandard tableaux of shape `shape` with entries in `0..k`.
pub fn count_ssyt(shape: &Partition, k: usize) -> u128 {
    fn go(cells: &[(usize, usize)], idx: usize, grid: &mut Tableau, k: usize) -> u128 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        let mut total = 0;
        for v in lo_row.max(lo_col)..k {
            grid[r][c] = v;
            total += go(cells, idx + 1, grid, k);
        }
        total
    }
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (0..shape.part(r)).map(move |c| (r, c)))
        .collect();
    let mut grid: Tableau = shape.parts().iter().map(|&len| vec![0; len]).collect();
    go(&cells, 0, &mut grid, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::column(5).conjugate(), part("5"));
    }

    #[test]
    fn dominance_examples() {
        assert!(part("1,1,1,1").dominance_leq(&part("2,1,1")).unwrap());
        assert!(part("2,2").dominance_leq(&part("3,1")).unwrap());
        assert!(!part("3,1").dominance_leq(&part("2,2")).unwrap());
        assert_eq!(
            part("3,1").dominance_leq(&part("2")),
            Err(CombinatError::SizeMismatch(4, 2))
        );
    }

    #[test]
    fn p_adic_examples() {
        assert_eq!(
            part("3,1").p_adic_decompose(2),
            vec![part("1,1"), part("1")]
        );
        assert_eq!(part("2,1").p_adic_decompose(2), vec![part("2,1")]);
        assert_eq!(
            part("2").p_adic_decompose(2),
            vec![Partition::empty(), part("1")]
        );
        assert_eq!(
            part("3,1,1,1,1").p_adic_decompose(2),
            vec![part("1,1,1,1,1"), part("1")]
        );
        assert_eq!(
            part("4,4").p_adic_decompose(2),
            vec![Partition::empty(), Partition::empty(), part("1,1")]
        );
        assert!(part("2,1").is_p_restricted(2));
        assert!(!part("2,2").is_p_restricted(2));
        assert!(part("2").is_p_restricted(3));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(part("2,1").concat_ones(3), part("2,1,1,1,1"));
        assert_eq!(Partition::empty().concat_ones(2), part("1,1"));
        assert_eq!(part("3,2").concat_ones(0), part("3,2"));
        assert_eq!(part("2,1,1,1").strip_ones(2), Some(part("2,1")));
        assert_eq!(part("2,1").strip_ones(2), None);
    }

    #[test]
    fn enumerate_partition_examples() {
        assert_eq!(enumerate_partitions(4, 0).len(), 5);
        assert_eq!(
            enumerate_partitions(4, 3),
            vec![part("2,1,1"), part("1,1,1,1")]
        );
        assert_eq!(enumerate_partitions(0, 0), vec![Partition::empty()]);
        let counts: Vec<usize> = (0..=12).map(|d| enumerate_partitions(d, 0).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn enumerate_omega_examples() {
        assert_eq!(enumerate_omega(3, 5, 2), vec!["[1,2]".parse().unwrap()]);
        let expected: Vec<OmegaSequence> =
            vec!["[0,4]".parse().unwrap(), "[2,1,1]".parse().unwrap()];
        assert_eq!(enumerate_omega(4, 8, 2), expected);
        for n in 0..10 {
            assert_eq!(enumerate_omega(n, n, 2), vec![OmegaSequence::new(vec![n])]);
        }
        assert!(enumerate_omega(5, 4, 2).is_empty());
    }

    #[test]
    fn enumerate_omega_matches_exhaustive_search() {
        for p in [2usize, 3] {
            for n in 0..=16 {
                for d in 0..=n {
                    let mut brute = Vec::new();
                    // levels up to 4 suffice for n ≤ 16
                    let bound = [d + 1, d + 1, d + 1, d + 1, d + 1];
                    for a in 0..bound[0] {
                        for b in 0..bound[1] {
                            for c in 0..bound[2] {
                                for e in 0..bound[3] {
                                    for f in 0..bound[4] {
                                        let w = OmegaSequence::new(vec![a, b, c, e, f]);
                                        if w.weight() == d && w.degree(p) == n {
                                            brute.push(w);
                                        }
                                    }
                                }
                            }
                        }
                    }
                    brute.sort();
                    assert_eq!(enumerate_omega(d, n, p), brute, "d={d} n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn stability_examples() {
        let s = stability(5, 2, 7, 2).unwrap();
        assert!(s.stable && s.congruent);
        assert_eq!(s.modulus, 2);
        let s = stability(6, 3, 10, 2).unwrap();
        assert!(s.stable && s.congruent && !s.strictly_stable);
        assert_eq!(s.modulus, 4);
        for e in 1..6 {
            let s = stability(0, 0, e, 2).unwrap();
            assert_eq!(s.modulus, 1);
            assert!(s.congruent);
        }
        assert_eq!(
            stability(3, 1, 3, 2),
            Err(CombinatError::NotIncreasing { d: 3, e: 3 })
        );
        assert_eq!(ceil_log(0, 2), 0);
        assert_eq!(ceil_log(1, 2), 0);
        assert_eq!(ceil_log(3, 2), 2);
        assert_eq!(ceil_log(4, 2), 2);
        assert_eq!(ceil_log(5, 2), 3);
        assert_eq!(ceil_log(4, 3), 2);
        let sharp: Vec<usize> = (0..=8).map(|t| sharp_modulus(t, 2)).collect();
        assert_eq!(sharp, [1, 2, 4, 4, 8, 8, 8, 8, 16]);
    }

    #[test]
    fn stability_bijection_examples() {
        let map = stability_bijection(4, 2, 6);
        assert_eq!(map.pairs.len(), 4);
        assert_eq!(enumerate_partitions(6, 4).len(), 4);
        assert!(map.is_bijective());
        // d = 2t − 1 is outside the stable range: (2,1) • 1 misses (2,2)
        let map = stability_bijection(3, 2, 4);
        assert!(map.injective);
        assert!(!map.surjective);
        let map = stability_bijection(0, 0, 0);
        assert_eq!(map.pairs, vec![(Partition::empty(), Partition::empty())]);
        for d in 0..=8 {
            for t in 0..=d / 2 {
                for e in d..=d + 4 {
                    assert!(
                        stability_bijection(d, t, e).is_bijective(),
                        "d={d} t={t} e={e}"
                    );
                }
            }
        }
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(count_ssyt(&part("2,1"), 2), 2);
        for k in 0..7 {
            for d in 0..6 {
                assert_eq!(count_ssyt(&Partition::column(d), k), binomial(k, d));
                if k > 0 && d > 0 {
                    assert_eq!(count_ssyt(&part(&d.to_string()), k), binomial(k + d - 1, d));
                }
            }
        }
        // Kostka numbers K_{(2,1),(1,1,1)} = 2, K_{(3,2),(2,2,1)} = 2
        assert_eq!(semistandard_tableaux(&part("2,1"), &[1, 1, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&part("3,2"), &[2, 2, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&part("2,2"), &[1, 1, 1, 1]).len(), 2);
    }

    #[test]
    fn partition_parsing() {
        assert_eq!("2,1,1".parse::<Partition>().unwrap().to_string(), "2,1,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(
            "[2,1,1]".parse::<OmegaSequence>().unwrap().to_string(),
            "[2,1,1]"
        );
        assert_eq!(OmegaSequence::new(vec![1, 0, 0]).to_string(), "[1]");
        assert_eq!(part("2,2,1,1,1").pretty(), "(2^2,1^3)");
    }

    fn all_partitions_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(|d| enumerate_partitions(d, 0)).collect()
    }

    #[test]
    fn conjugation_is_an_involution() {
        for lambda in all_partitions_up_to(12) {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            assert_eq!(lambda.len(), lambda.conjugate().part(0));
        }
    }

    #[test]
    fn p_adic_reconstructs() {
        for p in [2, 3] {
            for lambda in all_partitions_up_to(12) {
                let pieces = lambda.p_adic_decompose(p);
                let mut acc = Partition::empty();
                let mut scale = 1;
                for piece in &pieces {
                    assert!(piece.is_p_restricted(p));
                    acc = acc.add_scaled(piece, scale);
                    scale *= p;
                }
                assert_eq!(acc, lambda);
                assert_eq!(lambda.is_p_restricted(p), pieces.len() == 1);
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for d in 0..=10 {
            let parts = enumerate_partitions(d, 0);
            for a in &parts {
                assert!(a.dominated_by(a));
                for b in &parts {
                    if a != b && a.dominated_by(b) {
                        assert!(!b.dominated_by(a));
                    }
                    for c in &parts {
                        if a.dominated_by(b) && b.dominated_by(c) {
                            assert!(a.dominated_by(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_order_extends_dominance() {
        for d in 0..=10 {
            let parts = enumerate_partitions(d, 0);
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    assert!(!a.dominated_by(b) || a == b, "{a:?} listed before {b:?}");
                }
            }
        }
    }

    #[test]
    fn dominance_preserves_length_strata() {
        for d in 0..=10 {
            let parts = enumerate_partitions(d, 0);
            for lambda in &parts {
                for mu in &parts {
                    if mu.dominated_by(lambda) {
                        assert!(mu.len() >= lambda.len());
                    }
                }
            }
        }
    }

    #[test]
    fn omega_zero_level_bound() {
        for n in 0..=16 {
            for d in 0..=n {
                for w in enumerate_omega(d, n, 2) {
                    assert!(w.entry(0) + (n - d) >= d, "{w} for d={d} n={n}");
                    assert!(w.degree(2) >= w.weight());
                    assert_eq!(w.degree(2) == w.weight(), w.entries().len() <= 1);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn concat_respects_strata(d in 0usize..9, t in 0usize..5, extra in 0usize..5) {
            prop_assume!(t <= d);
            let e = d + extra;
            for lambda in enumerate_partitions(d, d - t) {
                let image = lambda.concat_ones(e - d);
                prop_assert_eq!(image.size(), e);
                prop_assert!(image.len() >= lambda.len());
                prop_assert!(image.len() >= e - t);
            }
        }
    }
}
