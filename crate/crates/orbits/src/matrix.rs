//! Exact dense matrices over Q(i, sqrt2).
//!
//! Everything here is plain Gaussian elimination and matrix products over an
//! exact field. Desk-scale dimensions only (well under 100), so no attempt is
//! made at asymptotically clever algorithms; determinism and exactness are
//! the point.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::FieldScalar;

/// A dense `rows x cols` matrix over Q(i, sqrt2), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![FieldScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = FieldScalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Build from integer rows; convenient for fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, |i, j| FieldScalar::from_int(rows[i][j]))
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

    pub fn at(&self, i: usize, j: usize) -> &FieldScalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldScalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Sum of diagonal entries. Errors on non-square input.
    pub fn trace(&self) -> Result<FieldScalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("trace of {}x{}", self.rows, self.cols)));
        }
        let mut t = FieldScalar::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        Ok(t)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j)))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.at(i, j))
    }

    pub fn scale(&self, s: &FieldScalar) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * s)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(i, j) += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `self` raised to a nonnegative power. Errors on non-square input.
    pub fn pow(&self, k: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("pow of {}x{}", self.rows, self.cols)));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// Rank by Gaussian elimination: scan each column top-down for the first
    /// nonzero pivot, eliminate below, count pivots.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot else { continue };
            if p != rank {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(rank, j).clone();
                    m.set(p, j, b);
                    m.set(rank, j, a);
                }
            }
            let inv = m.at(rank, col).inv().expect("pivot is nonzero");
            for r in rank + 1..m.rows {
                let factor = m.at(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let delta = &factor * m.at(rank, j);
                    *m.at_mut(r, j) -= &delta;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// Determinant via elimination. Errors on non-square input.
    pub fn det(&self) -> Result<FieldScalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("det of {}x{}", self.rows, self.cols)));
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = FieldScalar::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero());
            let Some(p) = pivot else { return Ok(FieldScalar::zero()) };
            if p != col {
                for j in 0..n {
                    let a = m.at(p, j).clone();
                    let b = m.at(col, j).clone();
                    m.set(p, j, b);
                    m.set(col, j, a);
                }
                det = -det;
            }
            det = &det * m.at(col, col);
            let inv = m.at(col, col).inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = m.at(r, col) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * m.at(col, j);
                    *m.at_mut(r, j) -= &delta;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination. Errors when singular.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m.at(r, col).is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    let a = m.at(pivot, j).clone();
                    let b = m.at(col, j).clone();
                    m.set(pivot, j, b);
                    m.set(col, j, a);
                    let a = inv.at(pivot, j).clone();
                    let b = inv.at(col, j).clone();
                    inv.set(pivot, j, b);
                    inv.set(col, j, a);
                }
            }
            let scale = m.at(col, col).inv().expect("pivot is nonzero");
            for j in 0..n {
                let v = m.at(col, j) * &scale;
                m.set(col, j, v);
                let v = inv.at(col, j) * &scale;
                inv.set(col, j, v);
            }
            for r in 0..n {
                if r == col || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in 0..n {
                    let delta = &factor * m.at(col, j);
                    *m.at_mut(r, j) -= &delta;
                    let delta = &factor * inv.at(col, j);
                    *inv.at_mut(r, j) -= &delta;
                }
            }
        }
        Ok(inv)
    }

    /// `g * self * g^-1`. Errors when `g` is singular or shapes mismatch.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        let ginv = g.inverse()?;
        g.matmul(self)?.matmul(&ginv)
    }

    /// Drop the outer `d` rows and columns on each side.
    /// Errors unless `2d < min(rows, cols)` (shrinking to nothing included).
    pub fn shrink(&self, d: usize) -> Result<Self> {
        if 2 * d >= self.rows || 2 * d >= self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot shrink a {}x{} matrix by {d}",
                self.rows, self.cols
            )));
        }
        Ok(Self::from_fn(self.rows - 2 * d, self.cols - 2 * d, |i, j| {
            self.at(i + d, j + d).clone()
        }))
    }

    /// Jordan type of a nilpotent square matrix, via the rank sequence:
    /// the number of blocks of size >= k equals rank(x^(k-1)) - rank(x^k).
    /// Errors when the matrix is not nilpotent.
    pub fn jordan_type(&self) -> Result<Partition> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "jordan type of {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut ranks = vec![n];
        let mut power = Self::identity(n);
        loop {
            power = power.matmul(self)?;
            let r = power.rank();
            ranks.push(r);
            if r == 0 {
                break;
            }
            if ranks.len() > n {
                return Err(Error::NotNilpotent);
            }
        }
        // ranks[k-1] - ranks[k] counts blocks of size >= k; conjugating that
        // count sequence yields the block sizes themselves.
        let ge: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
        let mut parts = Vec::new();
        if let Some(&total) = ge.first() {
            for i in 1..=total {
                let size = ge.iter().filter(|&&c| c >= i).count() as u32;
                parts.push(size);
            }
        }
        debug_assert_eq!(parts.iter().map(|&p| p as usize).sum::<usize>(), n);
        Ok(Partition::new(parts))
    }

    /// Canonical text form: rows separated by `;`, entries by `,`.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.at(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect();
        json!({ "rows": self.rows, "cols": self.cols, "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("matrix json: {m}"));
        let rows = v.get("rows").and_then(Value::as_u64).ok_or_else(|| bad("missing rows"))? as usize;
        let cols = v.get("cols").and_then(Value::as_u64).ok_or_else(|| bad("missing cols"))? as usize;
        let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing entries"))?;
        if entries.len() != rows {
            return Err(bad("row count mismatch"));
        }
        let mut m = Self::zeros(rows, cols);
        for (i, row) in entries.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| bad("row is not an array"))?;
            if row.len() != cols {
                return Err(bad("column count mismatch"));
            }
            for (j, cell) in row.iter().enumerate() {
                let s = cell.as_str().ok_or_else(|| bad("entry is not a string"))?;
                m.set(i, j, s.parse()?);
            }
        }
        Ok(m)
    }
}

/// Direct sum of square blocks along the diagonal.
pub fn direct_sum(blocks: &[ExactMatrix]) -> ExactMatrix {
    let n: usize = blocks.iter().map(|b| b.rows()).sum();
    assert!(blocks.iter().all(ExactMatrix::is_square), "direct sum of non-square block");
    let mut out = ExactMatrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(off + i, off + j, b.at(i, j).clone());
            }
        }
        off += b.rows();
    }
    out
}

/// The nilpotent Jordan block of the given size (ones on the superdiagonal).
pub fn jordan_block(size: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(size, size);
    for i in 0..size.saturating_sub(1) {
        m.set(i, i + 1, FieldScalar::one());
    }
    m
}

/// Jordan block with -1 entries on the superdiagonal.
pub fn neg_jordan_block(size: usize) -> ExactMatrix {
    jordan_block(size).neg()
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}", self.at(i, j))?;
                if j + 1 < self.cols {
                    write!(f, ", ")?;
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl FromStr for ExactMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        let mut data = Vec::new();
        let mut cols = None;
        for row in &rows {
            let entries: Vec<&str> = row.split(',').collect();
            match cols {
                None => cols = Some(entries.len()),
                Some(c) if c != entries.len() => {
                    return Err(Error::Parse("ragged matrix rows".into()))
                }
                _ => {}
            }
            for e in entries {
                data.push(e.trim().parse::<FieldScalar>()?);
            }
        }
        Ok(ExactMatrix { rows: rows.len(), cols: cols.unwrap_or(0), data })
    }
}
