use std::collections::{BTreeMap, HashMap};

use crate::{LinalgError, Scalar, SparseMatrix, SparseVector};

/// Incremental row echelon form. Each stored row has a pivot (its smallest
/// nonzero index) equal to one; rows are only fully reduced on `finish`.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    dim: usize,
    rows: BTreeMap<usize, SparseVector>,
}

impl EchelonBuilder {
    pub fn new(dim: usize) -> Self {
        EchelonBuilder {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Residue of `v` modulo the current span.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.dim, "dimension mismatch");
        if self.rows.is_empty() || v.is_zero() {
            return v.clone();
        }
        let mut work: BTreeMap<usize, Scalar> = v.entries().iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            for (i, x) in self.rows[&k].entries() {
                let t = x * &c;
                match work.entry(*i) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-t);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &t;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            cursor = k + 1;
        }
        SparseVector::from_map(self.dim, work)
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns true when the rank grew.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let r = self.reduce(v);
        match r.leading_index() {
            None => false,
            Some(p) => {
                let inv = r.entries()[0].1.inv();
                self.rows.insert(p, r.scale(&inv));
                true
            }
        }
    }

    /// Like `insert`, but hands back the normalized new row when the rank grew.
    /// Worklist closures feed these residues back in, which keeps the work
    /// proportional to the rank instead of the number of candidates.
    pub fn insert_residue(&mut self, v: &SparseVector) -> Option<SparseVector> {
        let r = self.reduce(v);
        let p = r.leading_index()?;
        let inv = r.entries()[0].1.inv();
        let row = r.scale(&inv);
        self.rows.insert(p, row.clone());
        Some(row)
    }

    /// Fully reduced row echelon basis of the span.
    pub fn finish(self) -> SubspaceBasis {
        let dim = self.dim;
        let mut done: BTreeMap<usize, SparseVector> = BTreeMap::new();
        // Back-substitute from the last pivot so later rows are already reduced.
        for (p, row) in self.rows.into_iter().rev() {
            let mut r = row;
            loop {
                let hit = r
                    .entries()
                    .iter()
                    .skip(1)
                    .find(|(i, _)| done.contains_key(i))
                    .map(|(i, c)| (*i, c.clone()));
                let Some((i, c)) = hit else { break };
                r = r.add_scaled(&done[&i], &(-&c));
            }
            done.insert(p, r);
        }
        SubspaceBasis {
            ambient_dim: dim,
            vectors: done.into_values().collect(),
        }
    }
}

/// A subspace given by its reduced row echelon basis: pivots strictly
/// increase, each pivot entry is one and every other basis vector vanishes
/// in that coordinate. This form is unique for a given subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    vectors: Vec<SparseVector>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: (0..ambient_dim).map(|i| SparseVector::unit(ambient_dim, i)).collect(),
        }
    }

    pub fn span<'a>(ambient_dim: usize, gens: impl IntoIterator<Item = &'a SparseVector>) -> Self {
        let mut b = EchelonBuilder::new(ambient_dim);
        for g in gens {
            b.insert(g);
        }
        b.finish()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVector] {
        &self.vectors
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.vectors
            .iter()
            .map(|v| v.leading_index().expect("basis vectors are nonzero"))
            .collect()
    }

    /// Builder seeded with this basis, for incremental growth.
    pub fn to_builder(&self) -> EchelonBuilder {
        let mut b = EchelonBuilder::new(self.ambient_dim);
        for v in &self.vectors {
            b.rows.insert(v.leading_index().expect("nonzero"), v.clone());
        }
        b
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        membership(v, self).map(|c| c.is_some()).unwrap_or(false)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut b = self.to_builder();
        for v in &other.vectors {
            b.insert(v);
        }
        b.finish()
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &SparseMatrix) -> Result<SubspaceBasis, LinalgError> {
        let mut b = EchelonBuilder::new(m.nrows());
        for v in &self.vectors {
            b.insert(&m.mul_vec(v)?);
        }
        Ok(b.finish())
    }
}

/// Rank of a matrix over the scalar field.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut b = EchelonBuilder::new(m.nrows());
    for c in m.columns() {
        b.insert(c);
    }
    b.rank()
}

/// Column space of a matrix.
pub fn column_space(m: &SparseMatrix) -> SubspaceBasis {
    SubspaceBasis::span(m.nrows(), m.columns())
}

/// Null space of a matrix, as a subspace of its column index space.
pub fn kernel_basis(m: &SparseMatrix) -> SubspaceBasis {
    let ncols = m.ncols();
    let rows = SubspaceBasis::span(ncols, m.transpose().columns());
    let pivots = rows.pivots();
    let pivot_set: HashMap<usize, usize> = pivots.iter().enumerate().map(|(r, p)| (*p, r)).collect();
    // For each free column f, x_f = 1 and x_p = -row_p[f].
    let mut by_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
    for (r, row) in rows.vectors().iter().enumerate() {
        for (j, c) in row.entries() {
            if !pivot_set.contains_key(j) {
                by_free[*j].push((pivots[r], -c));
            }
        }
    }
    let mut b = EchelonBuilder::new(ncols);
    for f in 0..ncols {
        if pivot_set.contains_key(&f) {
            continue;
        }
        let mut entries = std::mem::take(&mut by_free[f]);
        entries.push((f, Scalar::one()));
        b.insert(&SparseVector::from_entries(ncols, entries));
    }
    b.finish()
}

/// Projection onto `ambient / span(generators)`.
///
/// Representatives of the quotient are the non-pivot coordinates of the
/// echelon basis, in increasing order; the returned matrix sends each
/// ambient coordinate to its class written in those representatives.
#[derive(Clone, Debug)]
pub struct QuotientProjection {
    pub subspace: SubspaceBasis,
    pub representatives: Vec<usize>,
    pub projection: SparseMatrix,
}

impl QuotientProjection {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Inclusion of representatives back into the ambient space.
    pub fn inclusion(&self) -> SparseMatrix {
        let n = self.subspace.ambient_dim();
        SparseMatrix::from_columns(
            n,
            self.representatives.iter().map(|&i| SparseVector::unit(n, i)).collect(),
        )
    }
}

pub fn quotient_projection<'a>(
    ambient_dim: usize,
    generators: impl IntoIterator<Item = &'a SparseVector>,
) -> QuotientProjection {
    quotient_by(SubspaceBasis::span(ambient_dim, generators))
}

pub fn quotient_by(subspace: SubspaceBasis) -> QuotientProjection {
    let n = subspace.ambient_dim();
    let pivots = subspace.pivots();
    let pivot_row: HashMap<usize, usize> = pivots.iter().enumerate().map(|(r, p)| (*p, r)).collect();
    let representatives: Vec<usize> = (0..n).filter(|i| !pivot_row.contains_key(i)).collect();
    let rep_pos: HashMap<usize, usize> =
        representatives.iter().enumerate().map(|(k, i)| (*i, k)).collect();
    let k = representatives.len();
    let cols = (0..n)
        .map(|i| match pivot_row.get(&i) {
            None => SparseVector::unit(k, rep_pos[&i]),
            Some(&r) => SparseVector::from_entries(
                k,
                subspace.vectors()[r]
                    .entries()
                    .iter()
                    .filter(|(j, _)| *j != i)
                    .map(|(j, c)| (rep_pos[j], -c)),
            ),
        })
        .collect();
    QuotientProjection {
        subspace,
        representatives,
        projection: SparseMatrix::from_columns(k, cols),
    }
}

/// Coefficients of `v` in the given basis, or `None` when `v` lies outside it.
pub fn membership(v: &SparseVector, basis: &SubspaceBasis) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if v.dim() != basis.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.ambient_dim(),
            found: v.dim(),
        });
    }
    let coeffs: Vec<Scalar> = basis
        .vectors()
        .iter()
        .map(|b| v.get(b.leading_index().expect("nonzero")))
        .collect();
    let mut rest = v.clone();
    for (b, c) in basis.vectors().iter().zip(&coeffs) {
        if !c.is_zero() {
            rest = rest.add_scaled(b, &(-c));
        }
    }
    Ok(if rest.is_zero() { Some(coeffs) } else { None })
}

/// Characteristic polynomial det(x I - m), coefficients lowest degree first.
pub fn charpoly(m: &SparseMatrix) -> Result<Vec<Scalar>, LinalgError> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(LinalgError::NotSquare(n, m.ncols()));
    }
    // Faddeev-LeVerrier; exact since the field has characteristic zero.
    let a = m.to_dense();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut mk = vec![vec![Scalar::zero(); n]; n];
    for k in 1..=n {
        // mk = a * mk_prev + c_{n-k+1} I
        let mut next = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for (l, ail) in a[i].iter().enumerate() {
                if ail.is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !mk[l][j].is_zero() {
                        next[i][j] += &(ail * &mk[l][j]);
                    }
                }
            }
        }
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        mk = next;
        let mut tr = Scalar::zero();
        for i in 0..n {
            for (l, ail) in a[i].iter().enumerate() {
                if !ail.is_zero() && !mk[l][i].is_zero() {
                    tr += &(ail * &mk[l][i]);
                }
            }
        }
        coeffs[n - k] = &(-&tr) / &Scalar::from_int(k as i64);
    }
    Ok(coeffs)
}
