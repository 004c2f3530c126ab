//! Dense GF(2) matrices with word-packed rows.
//!
//! Storage is row-major, 64 bits per word, with the padding bits of the last
//! word in each row kept at zero after every operation. Rank uses plain
//! Gaussian elimination with a fixed pivot policy (columns left to right,
//! first unprocessed row with a 1 wins, elimination by word-wise row
//! addition); at the matrix orders this crate works with, the packed baseline
//! is far from being the bottleneck.
//!
//! The text serialization ("BITMAT v1") is an ASCII header line
//! `BITMAT 1 <rows> <cols>` followed by one line of `cols` characters from
//! `{0,1}` per row, each newline-terminated. It is bit-exact and
//! diff-friendly.

use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of bounds (limit {bound})")]
    IndexOutOfBounds { index: usize, bound: usize },
    #[error("malformed BITMAT header: {0}")]
    MalformedHeader(String),
    #[error("truncated BITMAT payload: {0}")]
    TruncatedPayload(String),
    #[error("invalid BITMAT payload byte {byte:#04x} in row {row}")]
    InvalidPayloadByte { row: usize, byte: u8 },
    #[error("trailing data after BITMAT payload")]
    TrailingData,
}

/// A dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(WORD_BITS);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
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

    pub fn get(&self, row: usize, col: usize) -> bool {
        debug_assert!(row < self.rows && col < self.cols);
        let w = self.data[row * self.words_per_row + col / WORD_BITS];
        (w >> (col % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "bit index out of range");
        let w = &mut self.data[row * self.words_per_row + col / WORD_BITS];
        let mask = 1u64 << (col % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.words_per_row..(row + 1) * self.words_per_row]
    }

    /// Overwrite a whole row from packed words (padding bits must be clear).
    pub(crate) fn set_row_words(&mut self, row: usize, words: &[u64]) {
        debug_assert_eq!(words.len(), self.words_per_row);
        self.data[row * self.words_per_row..(row + 1) * self.words_per_row]
            .copy_from_slice(words);
        debug_assert!(self.padding_clear());
    }

    fn xor_row(&mut self, dst: usize, src: usize) {
        let d = dst * self.words_per_row;
        let s = src * self.words_per_row;
        for w in 0..self.words_per_row {
            let v = self.data[s + w];
            self.data[d + w] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let wpr = self.words_per_row;
        for w in 0..wpr {
            self.data.swap(a * wpr + w, b * wpr + w);
        }
    }

    /// Number of ones in a row.
    pub fn row_weight(&self, row: usize) -> usize {
        self.row_words(row).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Rank over GF(2). Works on a copy; the input is never mutated.
    ///
    /// ```
    /// use quadrank::gf2mat::BitMatrix;
    /// assert_eq!(BitMatrix::identity(5).rank2(), 5);
    /// // Equal rows collapse: the all-ones matrix has rank 1.
    /// assert_eq!(BitMatrix::from_fn(3, 3, |_, _| true).rank2(), 1);
    /// ```
    pub fn rank2(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            for r in rank + 1..m.rows {
                if m.get(r, col) {
                    m.xor_row(r, rank);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Product over GF(2): row i of the result is the XOR of the rows of
    /// `rhs` selected by the ones of row i of `self`.
    pub fn matmul2(&self, rhs: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.cols != rhs.rows {
            return Err(Gf2Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = BitMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let k = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let d = i * out.words_per_row;
                    let s = k * rhs.words_per_row;
                    for t in 0..out.words_per_row {
                        out.data[d + t] ^= rhs.data[s + t];
                    }
                }
            }
        }
        debug_assert!(out.padding_clear());
        Ok(out)
    }

    /// `self^k` over GF(2), with `self^0 = I`. Requires a square matrix.
    pub fn matpow2(&self, k: u64) -> Result<BitMatrix, Gf2Error> {
        if self.rows != self.cols {
            return Err(Gf2Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = BitMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.matmul2(&base)?;
            }
            if k > 1 {
                base = base.matmul2(&base)?;
            }
            k >>= 1;
        }
        Ok(acc)
    }

    /// Entrywise XOR.
    pub fn add2(&self, rhs: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Gf2Error::DimensionMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = self.clone();
        for (o, r) in out.data.iter_mut().zip(&rhs.data) {
            *o ^= r;
        }
        Ok(out)
    }

    /// `self + I` over GF(2).
    pub fn add_identity(&self) -> Result<BitMatrix, Gf2Error> {
        if self.rows != self.cols {
            return Err(Gf2Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = self.clone();
        for i in 0..out.rows {
            let v = out.get(i, i);
            out.set(i, i, !v);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let expected = if i / WORD_BITS == wi { 1u64 << (i % WORD_BITS) } else { 0 };
                if word != expected {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Restriction to the given rows and columns, in the order given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<BitMatrix, Gf2Error> {
        for &r in rows {
            if r >= self.rows {
                return Err(Gf2Error::IndexOutOfBounds { index: r, bound: self.rows });
            }
        }
        for &c in cols {
            if c >= self.cols {
                return Err(Gf2Error::IndexOutOfBounds { index: c, bound: self.cols });
            }
        }
        let mut out = BitMatrix::zero(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    w &= w - 1;
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// True when every padding bit beyond `cols` is zero. All operations
    /// preserve this; it is re-checked by debug audits and tests.
    pub fn padding_clear(&self) -> bool {
        let tail_bits = self.cols % WORD_BITS;
        if tail_bits == 0 || self.words_per_row == 0 {
            return true;
        }
        let mask = !0u64 << tail_bits;
        (0..self.rows).all(|i| self.data[i * self.words_per_row + self.words_per_row - 1] & mask == 0)
    }

    /// Serialize to the BITMAT v1 text format.
    pub fn to_bitmat(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(24 + self.rows * (self.cols + 1));
        out.extend_from_slice(format!("BITMAT 1 {} {}\n", self.rows, self.cols).as_bytes());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push(if self.get(i, j) { b'1' } else { b'0' });
            }
            out.push(b'\n');
        }
        out
    }

    /// Parse the BITMAT v1 text format, strictly: exact header, exactly
    /// `rows` newline-terminated lines of `cols` bits, nothing after.
    pub fn from_bitmat(input: &[u8]) -> Result<BitMatrix, Gf2Error> {
        let header_end = input
            .iter()
            .position(|&b| b == b'\n')
            .ok_or_else(|| Gf2Error::MalformedHeader("missing header line".into()))?;
        let header = std::str::from_utf8(&input[..header_end])
            .map_err(|_| Gf2Error::MalformedHeader("header is not ASCII".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 4 || fields[0] != "BITMAT" {
            return Err(Gf2Error::MalformedHeader(format!("unrecognized header {header:?}")));
        }
        if fields[1] != "1" {
            return Err(Gf2Error::MalformedHeader(format!(
                "unsupported version {}",
                fields[1]
            )));
        }
        let rows: usize = fields[2]
            .parse()
            .map_err(|_| Gf2Error::MalformedHeader(format!("bad row count {:?}", fields[2])))?;
        let cols: usize = fields[3]
            .parse()
            .map_err(|_| Gf2Error::MalformedHeader(format!("bad column count {:?}", fields[3])))?;

        let mut m = BitMatrix::zero(rows, cols);
        let mut pos = header_end + 1;
        for i in 0..rows {
            if input.len() < pos + cols + 1 {
                return Err(Gf2Error::TruncatedPayload(format!(
                    "row {i} of {rows} incomplete"
                )));
            }
            for j in 0..cols {
                match input[pos + j] {
                    b'0' => {}
                    b'1' => m.set(i, j, true),
                    byte => return Err(Gf2Error::InvalidPayloadByte { row: i, byte }),
                }
            }
            if input[pos + cols] != b'\n' {
                return Err(Gf2Error::InvalidPayloadByte {
                    row: i,
                    byte: input[pos + cols],
                });
            }
            pos += cols + 1;
        }
        if pos != input.len() {
            return Err(Gf2Error::TrailingData);
        }
        Ok(m)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
