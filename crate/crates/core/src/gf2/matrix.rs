//! Dense bit-packed matrices over GF(2).
//!
//! Rows are stored contiguously, 64 columns per word, least significant bit
//! first. Vectors are treated as columns: a matrix acts on the left.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

#[inline]
fn words(cols: usize) -> usize {
    cols.div_ceil(64)
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words(cols);
        Gf2Matrix {
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

    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Matrix of the map `e_x ↦ e_{images[x]}`, i.e. entry `(images[x], x)` is 1.
    pub fn permutation(images: &[u32]) -> Self {
        let n = images.len();
        let mut m = Self::zeros(n, n);
        for (x, &y) in images.iter().enumerate() {
            m.set(y as usize, x, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v & 1 == 1);
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.data[i * self.stride + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Gf2Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        xor_into(&mut self.data, &other.data);
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let (lhs, dst) = (self.row(i), i * out.stride);
            for (wi, &w) in lhs.iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let k = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let src = other.row(k);
                    xor_into(&mut out.data[dst..dst + out.stride], src);
                }
            }
        }
        out
    }

    /// `self^(2^k)` by repeated squaring.
    pub fn square_times(&self, k: u32) -> Gf2Matrix {
        let mut m = self.clone();
        for _ in 0..k {
            m = m.mul(&m);
        }
        m
    }

    pub fn pow(&self, mut e: u64) -> Gf2Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Gf2Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            for (wi, &w) in row.iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let j = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot_row = m.row(r).to_vec();
            for i in 0..self.rows {
                if i != r && m.get(i, c) {
                    xor_into(m.row_mut(i), &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // forward elimination only
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            let pivot_row = m.row(r).to_vec();
            for i in r + 1..self.rows {
                if m.get(i, c) {
                    xor_into(m.row_mut(i), &pivot_row);
                }
            }
            r += 1;
        }
        r
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (first, second) = self.data.split_at_mut(hi * s);
        first[lo * s..(lo + 1) * s].swap_with_slice(&mut second[..s]);
    }

    /// Basis of the right kernel `{v : self·v = 0}`, one vector per row of the result.
    pub fn kernel(&self) -> Gf2Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Gf2Matrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (pi, &pc) in pivots.iter().enumerate() {
                if r.get(pi, f) {
                    out.set(k, pc, true);
                }
            }
        }
        out
    }

    /// Basis of the column space, one vector per row of the result.
    pub fn column_space(&self) -> Gf2Matrix {
        let (r, pivots) = self.transpose().rref();
        let mut out = Gf2Matrix::zeros(pivots.len(), self.rows);
        for i in 0..pivots.len() {
            out.row_mut(i).copy_from_slice(r.row(i));
        }
        out
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Gf2Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Gf2Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, n + i, true);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if r.get(i, n + j) {
                    out.set(i, j, true);
                }
            }
        }
        Some(out)
    }

    /// Stacks the rows of `self` above the rows of `other`.
    pub fn vstack(&self, other: &Gf2Matrix) -> Gf2Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Gf2Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            stride: self.stride,
            data,
        }
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                if self.get(i, j) {
                    out.set(a, b, true);
                }
            }
        }
        out
    }

    /// Rows permuted so that row `i` moves to row `images[i]`.
    pub fn permute_rows(&self, images: &[u32]) -> Gf2Matrix {
        assert_eq!(images.len(), self.rows);
        let mut out = Gf2Matrix::zeros(self.rows, self.cols);
        for (i, &t) in images.iter().enumerate() {
            out.row_mut(t as usize).copy_from_slice(self.row(i));
        }
        out
    }

    /// Columns permuted so that column `j` moves to column `images[j]`.
    pub fn permute_cols(&self, images: &[u32]) -> Gf2Matrix {
        self.transpose().permute_rows(images).transpose()
    }

    pub fn commutes_with(&self, other: &Gf2Matrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self) == *self
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(32) {
            let s: String = (0..self.cols.min(64))
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Row-space rank of a list of vectors given as matrix rows.
pub fn span_rank(vectors: &Gf2Matrix) -> usize {
    vectors.rank()
}

/// Checks that `theta` commutes with each matrix in `gens`.
pub fn check_commutes(theta: &Gf2Matrix, gens: &[Gf2Matrix]) -> Result<()> {
    if gens.iter().all(|g| theta.commutes_with(g)) {
        Ok(())
    } else {
        Err(Error::NonCommuting)
    }
}
