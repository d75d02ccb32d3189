//! Dense linear algebra over GF(2).
//!
//! Rows are packed into `u64` words, so row addition is a word-wide XOR.
//! Besides rank, the module provides the symmetric congruence
//! decomposition `A = X D Xᵀ` with `D` a direct sum of `[1]` and `H₂`
//! blocks, and the Gram factorization `A = X Xᵀ` used to turn a fitting
//! matrix into a complementation system.

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD)
}

/// A dense `rows x cols` matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries. All rows must have equal length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, &b) in r.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a square matrix whose row `i` is the low `n` bits of `rows[i]`.
    pub fn from_u64_rows(rows: &[u64], cols: usize) -> Self {
        assert!(cols <= WORD);
        let mask = if cols == WORD { !0 } else { (1u64 << cols) - 1 };
        let mut m = Self::zeros(rows.len(), cols);
        for (i, &r) in rows.iter().enumerate() {
            if m.stride > 0 {
                m.data[i * m.stride] = r & mask;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        let w = &mut self.data[i * self.stride + j / WORD];
        let bit = 1u64 << (j % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Row `i` as a `u64` mask. Only valid when `cols <= 64`.
    pub fn row_u64(&self, i: usize) -> u64 {
        assert!(self.cols <= WORD);
        if self.stride == 0 {
            0
        } else {
            self.data[i * self.stride]
        }
    }

    pub fn row_popcount(&self, i: usize) -> u32 {
        self.row_words(i).iter().map(|w| w.count_ones()).sum()
    }

    pub fn diagonal(&self) -> Vec<bool> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn has_nonzero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).any(|i| self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let src = k * other.stride;
                    let dst = i * out.stride;
                    for w in 0..out.stride {
                        out.data[dst + w] ^= other.data[src + w];
                    }
                }
            }
        }
        out
    }

    /// Entrywise sum (XOR).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    /// Column `j` as a vector of bits indexed by row.
    pub fn column(&self, j: usize) -> Vec<bool> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    fn from_columns(rows: usize, columns: &[Vec<bool>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, &b) in col.iter().enumerate() {
                if b {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Entries as rows of 0/1, the JSON shape used for certificates.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as u8).collect())
            .collect()
    }

    /// Block-diagonal matrix of the given blocks.
    pub fn block_diagonal(blocks: &[BlockKind]) -> Self {
        let size = blocks.iter().map(|b| b.size()).sum();
        let mut d = Self::zeros(size, size);
        let mut at = 0;
        for b in blocks {
            match b {
                BlockKind::Unit => d.set(at, at, true),
                BlockKind::Hyperbolic => {
                    d.set(at, at + 1, true);
                    d.set(at + 1, at, true);
                }
            }
            at += b.size();
        }
        d
    }
}

impl Serialize for BitMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for row in self.to_rows() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

/// Rank of a matrix whose rows fit in single words. Destroys `rows`.
pub(crate) fn rank_u64_rows(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for r in 0..rows.len() {
        let pivot = rows[r];
        if pivot == 0 {
            continue;
        }
        let low = pivot & pivot.wrapping_neg();
        for s in &mut rows[r + 1..] {
            if *s & low != 0 {
                *s ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Row rank over GF(2).
pub fn rank_gf2(m: &BitMatrix) -> usize {
    if m.stride <= 1 {
        let mut rows: Vec<u64> = (0..m.rows).map(|i| m.row_u64(i)).collect();
        return rank_u64_rows(&mut rows);
    }
    let mut rows: Vec<Vec<u64>> = (0..m.rows).map(|i| m.row_words(i).to_vec()).collect();
    let mut rank = 0;
    for r in 0..rows.len() {
        let Some((w, bits)) = rows[r].iter().enumerate().find(|(_, &b)| b != 0).map(|(w, &b)| (w, b)) else {
            continue;
        };
        let low = bits & bits.wrapping_neg();
        let pivot = rows[r].clone();
        for s in rows[r + 1..].iter_mut() {
            if s[w] & low != 0 {
                for (a, b) in s.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// One block of a congruence normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum BlockKind {
    /// The 1x1 block `[1]`.
    Unit,
    /// The 2x2 block `H₂ = [[0,1],[1,0]]`.
    Hyperbolic,
}

impl BlockKind {
    pub fn size(self) -> usize {
        match self {
            BlockKind::Unit => 1,
            BlockKind::Hyperbolic => 2,
        }
    }
}

/// `A = X D Xᵀ` with `D` the block-diagonal matrix of `blocks`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceDecomposition {
    pub generator: BitMatrix,
    pub blocks: Vec<BlockKind>,
    pub rank: usize,
}

impl CongruenceDecomposition {
    /// Recomputes `X D Xᵀ`.
    pub fn reconstruct(&self) -> BitMatrix {
        let d = BitMatrix::block_diagonal(&self.blocks);
        self.generator.mul(&d).mul(&self.generator.transpose())
    }
}

fn check_symmetric(a: &BitMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows, cols: a.cols });
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// Symmetric elimination: repeatedly strip a `[1]` pivot (lowest diagonal 1)
/// or, once the working diagonal vanishes, an `H₂` pivot at the first
/// off-diagonal 1. Blocks come out in pivot order, units first.
fn symmetric_eliminate(a: &BitMatrix) -> CongruenceDecomposition {
    let n = a.rows;
    let mut work: Vec<Vec<u64>> = (0..n).map(|i| a.row_words(i).to_vec()).collect();
    let bit = |row: &[u64], j: usize| (row[j / WORD] >> (j % WORD)) & 1 == 1;
    let mut columns: Vec<Vec<bool>> = Vec::new();
    let mut blocks = Vec::new();

    loop {
        if let Some(i) = (0..n).find(|&i| bit(&work[i], i)) {
            let x = work[i].clone();
            // row j gets x_j * x
            for (j, row) in work.iter_mut().enumerate() {
                if bit(&x, j) {
                    for (a, b) in row.iter_mut().zip(&x) {
                        *a ^= b;
                    }
                }
            }
            columns.push((0..n).map(|j| bit(&x, j)).collect());
            blocks.push(BlockKind::Unit);
            continue;
        }
        let pivot = (0..n).find_map(|i| {
            (i + 1..n).find(|&j| bit(&work[i], j)).map(|j| (i, j))
        });
        let Some((i, j)) = pivot else { break };
        let u = work[i].clone();
        let w = work[j].clone();
        for (k, row) in work.iter_mut().enumerate() {
            let uk = bit(&u, k);
            let wk = bit(&w, k);
            if uk {
                for (a, b) in row.iter_mut().zip(&w) {
                    *a ^= b;
                }
            }
            if wk {
                for (a, b) in row.iter_mut().zip(&u) {
                    *a ^= b;
                }
            }
        }
        // (row j, row i) so that H₂ itself gets the identity generator
        columns.push((0..n).map(|k| bit(&w, k)).collect());
        columns.push((0..n).map(|k| bit(&u, k)).collect());
        blocks.push(BlockKind::Hyperbolic);
    }

    let rank = columns.len();
    CongruenceDecomposition {
        generator: BitMatrix::from_columns(n, &columns),
        blocks,
        rank,
    }
}

/// Change of basis taking `[1] ⊕ H₂` to `I₃`: `P (diag(1) ⊕ H₂) Pᵀ = I₃`.
pub const MERGE_BASIS: [[u8; 3]; 3] = [[1, 1, 0], [1, 0, 1], [1, 1, 1]];
/// Inverse of [`MERGE_BASIS`] over GF(2); generator rows are multiplied by it.
pub const MERGE_BASIS_INV: [[u8; 3]; 3] = [[1, 1, 1], [0, 1, 1], [1, 0, 1]];

/// Replaces every `[1] ⊕ H₂` pair by three unit blocks, leaving the
/// reconstruction unchanged.
pub fn merge_unit_hyperbolic(dec: &CongruenceDecomposition) -> Result<CongruenceDecomposition> {
    if !dec.blocks.contains(&BlockKind::Unit) {
        return Err(Error::NoUnitBlock);
    }
    let n = dec.generator.rows;
    // Column layout mirrors the block list.
    let mut cols: Vec<Vec<bool>> = (0..dec.generator.cols).map(|j| dec.generator.column(j)).collect();
    let mut starts = Vec::with_capacity(dec.blocks.len());
    let mut at = 0;
    for b in &dec.blocks {
        starts.push(at);
        at += b.size();
    }
    let unit_col = starts[dec.blocks.iter().position(|&b| b == BlockKind::Unit).unwrap()];
    for (b, &s) in dec.blocks.iter().zip(&starts) {
        if *b != BlockKind::Hyperbolic {
            continue;
        }
        let old = [cols[unit_col].clone(), cols[s].clone(), cols[s + 1].clone()];
        let mut fresh = vec![vec![false; n]; 3];
        for (j, f) in fresh.iter_mut().enumerate() {
            for (i, o) in old.iter().enumerate() {
                if MERGE_BASIS_INV[i][j] == 1 {
                    for (x, &y) in f.iter_mut().zip(o) {
                        *x ^= y;
                    }
                }
            }
        }
        let [f0, f1, f2]: [Vec<bool>; 3] = fresh.try_into().unwrap();
        cols[unit_col] = f0;
        cols[s] = f1;
        cols[s + 1] = f2;
    }
    Ok(CongruenceDecomposition {
        generator: BitMatrix::from_columns(n, &cols),
        blocks: vec![BlockKind::Unit; dec.rank],
        rank: dec.rank,
    })
}

/// Decomposes a symmetric matrix as `X D Xᵀ`. With a nonzero diagonal every
/// block is a unit; otherwise every block is hyperbolic.
pub fn congruence_decompose(a: &BitMatrix) -> Result<CongruenceDecomposition> {
    check_symmetric(a)?;
    let dec = symmetric_eliminate(a);
    if dec.blocks.contains(&BlockKind::Unit) && dec.blocks.contains(&BlockKind::Hyperbolic) {
        merge_unit_hyperbolic(&dec)
    } else {
        Ok(dec)
    }
}

/// Which case of the Gram factorization applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum GramCase {
    /// `c = k` columns.
    CaseI,
    /// `c = k + 1` columns, every row of even weight, `k` even.
    CaseII,
}

/// `A = F Fᵀ` with `F` of rank `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramFactorization {
    pub factor: BitMatrix,
    pub case: GramCase,
    pub rank: usize,
}

/// Factors a symmetric matrix as `F Fᵀ`.
///
/// A nonzero diagonal gives `k` columns. An all-zero diagonal (and `A ≠ 0`)
/// needs `k + 1`: one diagonal entry is switched on, the result is factored,
/// and the extra unit is cancelled by complementing that vertex's row (or by
/// appending its singleton column when the rank did not grow).
pub fn gram_factor(a: &BitMatrix) -> Result<GramFactorization> {
    check_symmetric(a)?;
    let n = a.rows;
    if a.is_zero() {
        return Ok(GramFactorization {
            factor: BitMatrix::zeros(n, 0),
            case: GramCase::CaseI,
            rank: 0,
        });
    }
    if a.has_nonzero_diagonal() {
        let dec = congruence_decompose(a)?;
        return Ok(GramFactorization {
            factor: dec.generator,
            case: GramCase::CaseI,
            rank: dec.rank,
        });
    }
    let k = rank_gf2(a);
    // Lowest-index row of maximum weight.
    let v = (0..n)
        .max_by_key(|&i| (a.row_popcount(i), std::cmp::Reverse(i)))
        .expect("nonzero matrix has rows");
    let mut b = a.clone();
    b.flip(v, v);
    let dec = congruence_decompose(&b)?;
    let y = dec.generator;
    let factor = if dec.rank == k + 1 {
        let mut z = y;
        for j in 0..z.cols {
            z.flip(v, j);
        }
        z
    } else {
        let mut m = BitMatrix::zeros(n, y.cols + 1);
        for i in 0..n {
            for j in 0..y.cols {
                if y.get(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m.set(v, y.cols, true);
        m
    };
    debug_assert_eq!(factor.cols, k + 1);
    Ok(GramFactorization {
        factor,
        case: GramCase::CaseII,
        rank: k,
    })
}
