//! Dense linear algebra over the two-element field.
//!
//! Vectors are packed into 64-bit words, matrices are stored row-major and
//! all elimination is done with word-wide XOR. Pivoting is deterministic
//! (lowest column first, lowest row within a column) so that coset
//! representatives and echelon forms are reproducible.

use std::fmt;

use thiserror::Error;

const WORD: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("shape mismatch: ({0}, {1}) x ({2}, {3})")]
    ShapeMismatch(usize, usize, usize, usize),
}

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; words_for(len)],
            len,
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from 0/1 entries; any nonzero entry counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn try_get(&self, index: usize) -> Result<bool, Gf2Error> {
        if index >= self.len {
            return Err(Gf2Error::IndexOutOfRange {
                index,
                len: self.len,
            });
        }
        Ok(self.words[index / WORD] >> (index % WORD) & 1 == 1)
    }

    /// Panics if `index` is out of range.
    pub fn get(&self, index: usize) -> bool {
        self.try_get(index).unwrap()
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "bit {index} out of range {}", self.len);
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    // XOR restricted to words at or after `start_word`.
    fn add_assign_from(&mut self, other: &BitVector, start_word: usize) {
        for (a, b) in self.words[start_word..]
            .iter_mut()
            .zip(&other.words[start_word..])
        {
            *a ^= *b;
        }
    }

    /// Inner product over F₂.
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Index of the lowest set bit at or after `from`.
    pub fn first_one_from(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut w = from / WORD;
        let mut word = self.words[w] & (!0u64 << (from % WORD));
        loop {
            if word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
            w += 1;
            if w >= self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let t = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * WORD + t)
                }
            })
        })
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// Dense r × c matrix over F₂ with packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Dimension of a quotient space and the coordinates spanning a complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    /// Non-pivot coordinates; their unit vectors form coset representatives.
    pub representatives: Vec<usize>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows: vec![BitVector::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    /// An empty matrix with `cols` columns.
    pub fn empty(cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            cols,
        }
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Result<Self, Gf2Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Gf2Error::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { rows, cols })
    }

    /// Builds a matrix from nested 0/1 rows. Panics on ragged input.
    pub fn from_dense(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix");
                BitVector::from_bits(r)
            })
            .collect();
        Self { rows, cols }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.rows[r].flip(c);
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<(), Gf2Error> {
        if row.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(BitVector::count_ones).sum()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.cols != other.nrows() {
            return Err(Gf2Error::ShapeMismatch(
                self.nrows(),
                self.cols,
                other.nrows(),
                other.ncols(),
            ));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.ones() {
                    acc.add_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        Ok(BitMatrix {
            rows,
            cols: other.cols,
        })
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &BitVector) -> Result<BitVector, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    pub fn rref(&self) -> Rref {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == rows.len() {
                break;
            }
            let Some(found) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, found);
            let pivot = rows[next].clone();
            let start = col / WORD;
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.add_assign_from(&pivot, start);
                }
            }
            pivots.push(col);
            next += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: BitMatrix {
                rows,
                cols: self.cols,
            },
            pivots,
            rank,
        }
    }

    /// Row-echelon pivots only; cheaper than a full `rref` when only ranks
    /// of column prefixes are needed.
    pub fn echelon_pivots(&self) -> Vec<usize> {
        let mut basis = EchelonBasis::new(self.cols);
        for row in &self.rows {
            basis.insert(row.clone());
        }
        basis.pivots()
    }

    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.cols);
        for row in &self.rows {
            basis.insert(row.clone());
        }
        basis.rank()
    }

    /// Basis of the right null space `{v : self · v = 0}`.
    pub fn kernel_basis(&self) -> Vec<BitVector> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::unit(self.cols, free);
                for (r, &p) in pivots.iter().enumerate() {
                    if matrix.rows[r].get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Row-space membership test.
    pub fn contains(&self, v: &BitVector) -> Result<bool, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut basis = EchelonBasis::new(self.cols);
        for row in &self.rows {
            basis.insert(row.clone());
        }
        Ok(basis.reduce(v.clone()).is_zero())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows.len(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// Quotient of `F₂^ambient_dim` by the row space of `subspace_rows`.
pub fn quotient_dims(ambient_dim: usize, subspace_rows: &BitMatrix) -> Result<Quotient, Gf2Error> {
    if subspace_rows.ncols() != ambient_dim {
        return Err(Gf2Error::LengthMismatch {
            expected: ambient_dim,
            found: subspace_rows.ncols(),
        });
    }
    let pivots = subspace_rows.echelon_pivots();
    let mut is_pivot = vec![false; ambient_dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let representatives: Vec<usize> = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
    Ok(Quotient {
        dim: representatives.len(),
        representatives,
    })
}

/// Incrementally built echelon basis keyed by leading (lowest) bit.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<BitVector>,
    pivot_row: Vec<Option<usize>>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivot_row: vec![None; cols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Reduces `v` modulo the current span; the result has no bit set at any
    /// existing pivot.
    pub fn reduce(&self, mut v: BitVector) -> BitVector {
        let mut pos = 0;
        while let Some(lead) = v.first_one_from(pos) {
            match self.pivot_row[lead] {
                Some(r) => v.add_assign_from(&self.rows[r], lead / WORD),
                None => pos = lead + 1,
            }
        }
        v
    }

    /// Inserts `v`; returns true if it was independent of the current span.
    pub fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut v = v;
        loop {
            let Some(lead) = v.first_one() else {
                return false;
            };
            match self.pivot_row[lead] {
                Some(r) => v.add_assign_from(&self.rows[r], lead / WORD),
                None => {
                    self.pivot_row[lead] = Some(self.rows.len());
                    self.rows.push(v);
                    return true;
                }
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.cols)
            .filter(|&c| self.pivot_row[c].is_some())
            .collect()
    }

    pub fn into_matrix(self) -> BitMatrix {
        BitMatrix {
            rows: self.rows,
            cols: self.cols,
        }
    }
}
