//! Dense exact matrices over [`FieldSpec`] fields, with the canonical
//! reduced-row-echelon machinery everything else leans on.
//!
//! Echelon forms pick the leftmost available pivot and normalize leading
//! entries to 1, so `rref`, `kernel_basis` and friends are bit-for-bit
//! deterministic. Over Q the forward phase keeps rows primitive-integral
//! (denominators cleared, content divided out) to control coefficient swell.

use crate::field::{primitivize_rational_row, FieldSpec, Scalar};
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("shape mismatch: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("matrices belong to different fields")]
    FieldMismatch,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("entry at ({0},{1}) is not an integer")]
    NonIntegerEntry(usize, usize),
}

/// Row-major dense matrix whose entries all live in `field`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn from_int_rows(field: FieldSpec, rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::from_fn(field, rows.len(), ncols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| self.field.is_zero(s))
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        self.zip_check(other)?;
        Ok(Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.add(self.at(i, j), other.at(i, j))
        }))
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        self.zip_check(other)?;
        Ok(Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.sub(self.at(i, j), other.at(i, j))
        }))
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.field.mul(self.at(i, j), c)
        })
    }

    fn zip_check(&self, other: &ExactMatrix) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    let cur = out.at(i, j);
                    *out.at_mut(i, j) = f.add(cur, &prod);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `v * self`, with `v.len() == self.rows`.
    pub fn row_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for j in 0..self.cols {
                let b = self.at(i, j);
                if f.is_zero(b) {
                    continue;
                }
                let prod = f.mul(c, b);
                out[j] = f.add(&out[j], &prod);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Result<ExactMatrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        let f = self.field;
        for j in 0..self.cols {
            let v = self.at(r, j).clone();
            *self.at_mut(r, j) = f.mul(&v, c);
        }
    }

    /// `row_r := a * row_r - b * row_s`
    fn combine_rows(&mut self, r: usize, a: &Scalar, s: usize, b: &Scalar) {
        let f = self.field;
        for j in 0..self.cols {
            let x = f.mul(self.at(r, j), a);
            let y = f.mul(self.at(s, j), b);
            *self.at_mut(r, j) = f.sub(&x, &y);
        }
    }

    /// `row_r := row_r - c * row_s`
    fn row_sub_scaled(&mut self, r: usize, s: usize, c: &Scalar) {
        let f = self.field;
        for j in 0..self.cols {
            let y = f.mul(self.at(s, j), c);
            let x = self.at(r, j).clone();
            *self.at_mut(r, j) = f.sub(&x, &y);
        }
    }

    fn primitivize_row(&mut self, r: usize) {
        if self.field == FieldSpec::Rationals {
            primitivize_rational_row(&mut self.data[r * self.cols..(r + 1) * self.cols]);
        }
    }

    /// Reduced row echelon form plus the list of pivot columns.
    ///
    /// Leftmost-pivot strategy, unit leading entries, zeros above and below
    /// every pivot. The forward phase over Q works with primitive integer rows
    /// and cross-multiplication so intermediate entries stay small.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let f = m.field;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !f.is_zero(m.at(r, col))) else {
                continue;
            };
            m.swap_rows(row, p);
            m.primitivize_row(row);
            for r in row + 1..m.rows {
                if !f.is_zero(m.at(r, col)) {
                    let piv = m.at(row, col).clone();
                    let val = m.at(r, col).clone();
                    m.combine_rows(r, &piv, row, &val);
                    m.primitivize_row(r);
                }
            }
            pivots.push(col);
            row += 1;
        }
        for (i, &col) in pivots.iter().enumerate().rev() {
            let inv = f.inv(m.at(i, col)).expect("pivot entries are nonzero");
            m.scale_row(i, &inv);
            for r in 0..i {
                let c = m.at(r, col).clone();
                if !f.is_zero(&c) {
                    m.row_sub_scaled(r, i, &c);
                }
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : self * v = 0}`.
    ///
    /// The basis vectors, laid out as rows, are returned in reduced
    /// row-echelon canonical form, so the output is deterministic and two
    /// subspaces are equal iff their bases are identical.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut vectors = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(r.at(i, free));
            }
            vectors.push(v);
        }
        if vectors.is_empty() {
            return vectors;
        }
        // canonicalize: the vectors are independent; express as literal rref rows
        let mat = ExactMatrix {
            rows: vectors.len(),
            cols: self.cols,
            field: f,
            data: vectors.into_iter().flatten().collect(),
        };
        let (canon, _) = mat.rref();
        (0..canon.rows).map(|i| canon.row(i).to_vec()).collect()
    }

    pub fn inverse(&self) -> Result<ExactMatrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let f = self.field;
        let mut aug = ExactMatrix::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = f.one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(MatrixError::Singular);
        }
        Ok(Self::from_fn(f, n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Entries as arbitrary-precision integers; requires the rational field
    /// and integral entries.
    pub fn integer_entries(&self) -> Result<Vec<BigInt>, MatrixError> {
        let mut out = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            for j in 0..self.cols {
                match self.at(i, j).as_integer() {
                    Some(z) => out.push(z),
                    None => return Err(MatrixError::NonIntegerEntry(i, j)),
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
