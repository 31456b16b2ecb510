use std::collections::BTreeMap;

use crate::{LinalgError, Scalar};

/// Sparse vector with entries sorted by index and no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim, "unit vector index {i} out of range {dim}");
        SparseVector {
            dim,
            entries: vec![(i, Scalar::one())],
        }
    }

    /// Builds from unsorted, possibly repeated entries; duplicates are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in entries {
            assert!(i < dim, "index {i} out of range {dim}");
            if c.is_zero() {
                continue;
            }
            match acc.entry(i) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += &c;
                }
            }
        }
        Self::from_map(dim, acc)
    }

    pub fn from_map(dim: usize, map: BTreeMap<usize, Scalar>) -> Self {
        SparseVector {
            dim,
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVector {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Smallest index with a nonzero entry.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &Scalar) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVector {
            dim: self.dim,
            entries: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &Scalar::from_int(-1))
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Sparse matrix stored column by column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![SparseVector::zero(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: (0..n).map(|i| SparseVector::unit(n, i)).collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVector>) -> Self {
        for c in &cols {
            assert_eq!(c.dim(), rows, "column dimension mismatch");
        }
        SparseMatrix { rows, cols }
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(c < cols, "column {c} out of range {cols}");
            per_col[c].push((r, v));
        }
        SparseMatrix {
            rows,
            cols: per_col
                .into_iter()
                .map(|e| SparseVector::from_entries(rows, e))
                .collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.ncols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.entries() {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVector {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVector] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.cols[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    /// Nonzero entries as `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.entries().iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn mul_vec(&self, v: &SparseVector) -> Result<SparseVector, LinalgError> {
        if v.dim() != self.ncols() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ncols(),
                found: v.dim(),
            });
        }
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (j, c) in v.entries() {
            for (i, x) in self.cols[*j].entries() {
                let t = x * c;
                match acc.entry(*i) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(t);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &t;
                    }
                }
            }
        }
        Ok(SparseVector::from_map(self.rows, acc))
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        if rhs.nrows() != self.ncols() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ncols(),
                found: rhs.nrows(),
            });
        }
        let cols = rhs
            .cols
            .iter()
            .map(|c| self.mul_vec(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMatrix {
            rows: self.rows,
            cols,
        })
    }

    fn check_same_shape(&self, other: &SparseMatrix) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.ncols() != other.ncols() {
            return Err(LinalgError::ShapeMismatch {
                left: (self.rows, self.ncols()),
                right: (other.rows, other.ncols()),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        self.add_scaled(other, &Scalar::one())
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinalgError> {
        self.add_scaled(other, &Scalar::from_int(-1))
    }

    pub fn add_scaled(&self, other: &SparseMatrix, c: &Scalar) -> Result<SparseMatrix, LinalgError> {
        self.check_same_shape(other)?;
        Ok(SparseMatrix {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.add_scaled(b, c))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.entries() {
                rows[*i].push((j, v.clone()));
            }
        }
        let ncols = self.ncols();
        SparseMatrix {
            rows: ncols,
            cols: rows
                .into_iter()
                .map(|entries| SparseVector::from_entries(ncols, entries))
                .collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Result<SparseMatrix, LinalgError> {
        if self.rows != self.ncols() {
            return Err(LinalgError::NotSquare(self.rows, self.ncols()));
        }
        let mut acc = SparseMatrix::identity(self.rows);
        for _ in 0..exp {
            acc = self.mul(&acc)?;
        }
        Ok(acc)
    }

    /// Columns `range` of the matrix.
    pub fn select_columns(&self, idx: &[usize]) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Block matrix assembled from `blocks[(row_block, col_block)]`, with
    /// `row_dims` and `col_dims` giving block sizes; absent blocks are zero.
    pub fn from_blocks(
        row_dims: &[usize],
        col_dims: &[usize],
        blocks: &[((usize, usize), SparseMatrix)],
    ) -> Result<SparseMatrix, LinalgError> {
        let row_off: Vec<usize> = row_dims
            .iter()
            .scan(0, |s, d| {
                let o = *s;
                *s += d;
                Some(o)
            })
            .collect();
        let col_off: Vec<usize> = col_dims
            .iter()
            .scan(0, |s, d| {
                let o = *s;
                *s += d;
                Some(o)
            })
            .collect();
        let total_rows: usize = row_dims.iter().sum();
        let total_cols: usize = col_dims.iter().sum();
        let mut triplets = Vec::new();
        for ((bi, bj), m) in blocks {
            if m.nrows() != row_dims[*bi] || m.ncols() != col_dims[*bj] {
                return Err(LinalgError::ShapeMismatch {
                    left: (row_dims[*bi], col_dims[*bj]),
                    right: (m.nrows(), m.ncols()),
                });
            }
            for (i, j, v) in m.entries() {
                triplets.push((row_off[*bi] + i, col_off[*bj] + j, v.clone()));
            }
        }
        Ok(SparseMatrix::from_triplets(total_rows, total_cols, triplets))
    }
}
