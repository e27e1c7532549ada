//! Dense matrices over GF(q).
//!
//! Entries are raw field indices (see [`crate::field`]). Element access via
//! [`Matrix::get`] is 0-based; the row-slicing accessors in [`RowSlice`] are
//! 1-based and follow the usual block-matrix notation: the first `j` rows,
//! the rows after row `j`, row `j`, and rows `i..=j`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Poly};

/// Default cap on the order search in [`Matrix::order`].
pub const DEFAULT_ORDER_CAP: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Row selections, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSlice {
    /// Rows `1..=j`.
    First(usize),
    /// Rows `j+1..=rows`.
    After(usize),
    /// Row `j` alone.
    Row(usize),
    /// Rows `i..=j`.
    Range(usize, usize),
}

impl fmt::Display for RowSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RowSlice::First(j) => write!(f, "first({j})"),
            RowSlice::After(j) => write!(f, "after({j})"),
            RowSlice::Row(j) => write!(f, "row({j})"),
            RowSlice::Range(i, j) => write!(f, "range({i},{j})"),
        }
    }
}

/// One cell of a block matrix passed to [`Matrix::block`].
#[derive(Debug, Clone)]
pub enum Block {
    Zero,
    Identity,
    Mat(Matrix),
}

impl Matrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimMismatch(format!("ragged rows: {} vs {cols}", r.len())));
            }
            if let Some(&bad) = r.iter().find(|&&v| !field.contains(v)) {
                return Err(Error::NotAnElement(bad as u64));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds from a flat row-major buffer whose entries are already valid.
    pub(crate) fn from_raw(field: &FieldSpec, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(self.field.contains(v), "{v} is not an element of {}", self.field);
        self.data[r * self.cols + c] = v;
    }

    /// Row `r` (0-based) as a slice.
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        // chunks_exact panics on zero width
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (o, &b) in acc.iter_mut().zip(other.row(k)) {
                    if b != 0 {
                        *o = f.add(*o, f.mul(a, b));
                    }
                }
            }
        }
        Ok(Matrix::from_raw(f, self.rows, other.cols, out))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    /// `self^exp` for square matrices.
    pub fn pow(&self, mut exp: u64) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimMismatch("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Vertical concatenation.
    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let first = parts.first().ok_or_else(|| Error::DimMismatch("empty stack".into()))?;
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            first.same_field(m)?;
            if m.cols != first.cols {
                return Err(Error::DimMismatch(format!(
                    "stacking {} and {} columns",
                    first.cols, m.cols
                )));
            }
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Ok(Matrix::from_raw(&first.field, rows, first.cols, data))
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let (rank, _) = m.reduce_in_place();
        (m, rank)
    }

    /// Reduces to RREF in place; returns the rank and pivot columns.
    pub(crate) fn reduce_in_place(&mut self) -> (usize, Vec<usize>) {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != lead {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, lead * cols + j);
                }
            }
            let inv = f.inv(self.data[lead * cols + c]).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..cols {
                    let v = &mut self.data[lead * cols + j];
                    *v = f.mul(*v, inv);
                }
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.data[r * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let pv = self.data[lead * cols + j];
                    if pv != 0 {
                        let v = self.data[r * cols + j];
                        self.data[r * cols + j] = f.sub(v, f.mul(factor, pv));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (lead, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The first `n` rows as a new matrix (0 < n allowed to equal rows).
    pub(crate) fn top_rows(&self, n: usize) -> Matrix {
        Matrix::from_raw(&self.field, n, self.cols, self.data[..n * self.cols].to_vec())
    }

    fn row_range(&self, start: usize, end: usize) -> Matrix {
        Matrix::from_raw(
            &self.field,
            end - start,
            self.cols,
            self.data[start * self.cols..end * self.cols].to_vec(),
        )
    }

    /// Extracts the rows selected by `s` (1-based bounds).
    pub fn slice(&self, s: RowSlice) -> Result<Matrix> {
        let n = self.rows;
        let err = || Error::SliceOutOfRange(s.to_string(), n);
        match s {
            RowSlice::First(j) if (1..=n).contains(&j) => Ok(self.row_range(0, j)),
            RowSlice::After(j) if j >= 1 && j < n => Ok(self.row_range(j, n)),
            RowSlice::Row(j) if (1..=n).contains(&j) => Ok(self.row_range(j - 1, j)),
            RowSlice::Range(i, j) if i >= 1 && i <= j && j <= n => Ok(self.row_range(i - 1, j)),
            _ => Err(err()),
        }
    }

    /// Companion matrix of a monic polynomial: ones on the superdiagonal and
    /// last row `(-a_0, ..., -a_{k-1})`.
    pub fn companion(f: &Poly) -> Result<Matrix> {
        let k = match f.degree() {
            Some(k) if k >= 1 && f.is_monic() => k,
            _ => return Err(Error::NonMonic),
        };
        let field = f.field();
        let mut m = Matrix::zeros(field, k, k);
        for r in 0..k - 1 {
            m.data[r * k + r + 1] = 1;
        }
        for (c, &a) in f.coeffs()[..k].iter().enumerate() {
            m.data[(k - 1) * k + c] = field.neg(a);
        }
        Ok(m)
    }

    /// Assembles a block matrix. `row_heights[i]` and `col_widths[j]` fix the
    /// block grid; zero-sized bands are allowed. `Identity` cells must be square.
    pub fn block(
        field: &FieldSpec,
        row_heights: &[usize],
        col_widths: &[usize],
        grid: &[Vec<Block>],
    ) -> Result<Matrix> {
        if grid.len() != row_heights.len() {
            return Err(Error::BlockDimMismatch(format!(
                "{} block rows for {} heights",
                grid.len(),
                row_heights.len()
            )));
        }
        let rows: usize = row_heights.iter().sum();
        let cols: usize = col_widths.iter().sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut r0 = 0;
        for (bi, (band, &h)) in grid.iter().zip(row_heights).enumerate() {
            if band.len() != col_widths.len() {
                return Err(Error::BlockDimMismatch(format!(
                    "block row {bi} has {} cells",
                    band.len()
                )));
            }
            let mut c0 = 0;
            for (bj, (cell, &w)) in band.iter().zip(col_widths).enumerate() {
                match cell {
                    Block::Zero => {}
                    Block::Identity => {
                        if h != w {
                            return Err(Error::BlockDimMismatch(format!(
                                "identity block ({bi},{bj}) is {h}x{w}"
                            )));
                        }
                        for d in 0..h {
                            out.data[(r0 + d) * cols + c0 + d] = 1;
                        }
                    }
                    Block::Mat(m) => {
                        if m.field != *field {
                            return Err(Error::FieldMismatch);
                        }
                        if m.rows != h || m.cols != w {
                            return Err(Error::BlockDimMismatch(format!(
                                "block ({bi},{bj}) is {}x{}, slot is {h}x{w}",
                                m.rows, m.cols
                            )));
                        }
                        for r in 0..h {
                            out.data[(r0 + r) * cols + c0..(r0 + r) * cols + c0 + w].copy_from_slice(m.row(r));
                        }
                    }
                }
                c0 += w;
            }
            r0 += h;
        }
        Ok(out)
    }

    /// Block-diagonal matrix from square blocks.
    pub fn block_diag(field: &FieldSpec, blocks: &[Matrix]) -> Result<Matrix> {
        let sizes: Vec<usize> = blocks.iter().map(|b| b.rows).collect();
        let grid: Vec<Vec<Block>> = blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                (0..blocks.len())
                    .map(|j| if i == j { Block::Mat(b.clone()) } else { Block::Zero })
                    .collect()
            })
            .collect();
        Matrix::block(field, &sizes, &sizes, &grid)
    }

    /// Smallest `t >= 1` with `self^t = I`, by iterated multiplication.
    pub fn order(&self, cap: u64) -> Result<u64> {
        if self.rows != self.cols {
            return Err(Error::DimMismatch("order of a non-square matrix".into()));
        }
        if self.rank() < self.rows {
            return Err(Error::Singular);
        }
        let mut acc = self.clone();
        let mut t = 1;
        while !acc.is_identity() {
            if t >= cap {
                return Err(Error::OrderCapExceeded(cap));
            }
            acc = acc.mul(self)?;
            t += 1;
        }
        Ok(t)
    }

    /// Text form: header `rows cols GF(..)`, then one space-separated row per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.rows, self.cols, self.field);
        for r in self.rows() {
            let items: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            s.push_str(&items.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses one matrix from a line iterator (blank and `#` lines skipped).
    pub fn read_text<'a, I: Iterator<Item = &'a str>>(lines: &mut I) -> Result<Matrix> {
        let header = next_content_line(lines).ok_or_else(|| Error::Parse("missing matrix header".into()))?;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("bad matrix header `{header}`")));
        }
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad dimension `{s}`")))
        };
        let (rows, cols) = (num(parts[0])?, num(parts[1])?);
        let field = FieldSpec::parse(parts[2])?;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let line = next_content_line(lines).ok_or_else(|| Error::Parse(format!("missing row {}", r + 1)))?;
            let vals = line
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            if vals.len() != cols {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {cols}",
                    r + 1,
                    vals.len()
                )));
            }
            if let Some(&bad) = vals.iter().find(|&&v| !field.contains(v)) {
                return Err(Error::NotAnElement(bad as u64));
            }
            data.extend(vals);
        }
        Ok(Matrix::from_raw(&field, rows, cols, data))
    }
}

pub(crate) fn next_content_line<'a, I: Iterator<Item = &'a str>>(lines: &mut I) -> Option<&'a str> {
    lines.map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'))
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols, &self.data).cmp(&(other.rows, other.cols, &other.data))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
