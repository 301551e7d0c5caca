//! Exact linear algebra over the Gaussian rationals.
//!
//! Everything here works with explicit basis coordinates: dense row-major
//! matrices for operators on small spaces, and sparse coordinate maps for
//! vectors in larger tensor spaces.  Subspaces are kept in fully reduced row
//! echelon form, which makes equality of subspaces literal equality of their
//! stored rows and keeps every algorithm deterministic.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::Scalar;

/// Errors from shape or domain violations in linear algebra routines.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LinalgError {
    DimensionMismatch,
    NotSquare,
    NonCommuting,
    NotAMember,
    DependentSpanningSet,
    SingularMatrix,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionMismatch => write!(f, "dimension mismatch"),
            LinalgError::NotSquare => write!(f, "operator matrix must be square"),
            LinalgError::NonCommuting => write!(f, "operators do not commute"),
            LinalgError::NotAMember => write!(f, "vector is not in the subspace"),
            LinalgError::DependentSpanningSet => write!(f, "spanning set is linearly dependent"),
            LinalgError::SingularMatrix => write!(f, "matrix is not invertible"),
        }
    }
}

/// A sparse vector: nonzero coordinates keyed by index.
///
/// The map never stores zero values, so componentwise equality of two sparse
/// vectors of the same dimension is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseVec {
    dim: usize,
    entries: BTreeMap<usize, Scalar>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> SparseVec {
        SparseVec { dim, entries: BTreeMap::new() }
    }

    pub fn from_dense(coords: &[Scalar]) -> SparseVec {
        let mut v = SparseVec::zero(coords.len());
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                v.entries.insert(i, c.clone());
            }
        }
        v
    }

    /// A unit coordinate vector.
    pub fn unit(dim: usize, index: usize) -> SparseVec {
        let mut v = SparseVec::zero(dim);
        v.set(index, Scalar::one());
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> Scalar {
        assert!(index < self.dim, "index out of range");
        self.entries.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, index: usize, value: Scalar) {
        assert!(index < self.dim, "index out of range");
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(&i, c)| (i, c))
    }

    /// The first nonzero coordinate, if any.
    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.iter().next().map(|(&i, c)| (i, c))
    }

    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut out = alloc::vec![Scalar::zero(); self.dim];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &Scalar) -> SparseVec {
        let mut out = SparseVec::zero(self.dim);
        if factor.is_zero() {
            return out;
        }
        for (i, c) in self.iter() {
            out.entries.insert(i, c * factor);
        }
        out
    }

    /// In-place `self += factor * other`.
    pub fn add_scaled(&mut self, other: &SparseVec, factor: &Scalar) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if factor.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            let updated = &self.get(i) + &(c * factor);
            self.set(i, updated);
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_integer(-1));
        out
    }

    pub fn neg(&self) -> SparseVec {
        self.scale(&Scalar::from_integer(-1))
    }

    /// Entrywise complex conjugation.
    pub fn conj(&self) -> SparseVec {
        let mut out = SparseVec::zero(self.dim);
        for (i, c) in self.iter() {
            out.entries.insert(i, c.conj());
        }
        out
    }
}

/// A dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Square matrices double as linear operators throughout the crate.
pub type Operator = Matrix;

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: alloc::vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(dim: usize, columns: &[SparseVec]) -> Matrix {
        let mut m = Matrix::zero(dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), dim, "column dimension mismatch");
            for (i, c) in col.iter() {
                *m.at_mut(i, j) = c.clone();
            }
        }
        m
    }

    /// The permutation operator sending basis vector `j` to basis vector
    /// `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zero(n, n);
        for (j, &i) in perm.iter().enumerate() {
            assert!(i < n, "permutation image out of range");
            *m.at_mut(i, j) = Scalar::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The common dimension of a square matrix.
    pub fn dim(&self) -> usize {
        assert_eq!(self.rows, self.cols, "operator matrix must be square");
        self.rows
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, factor: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * factor).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::from_integer(-1))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = out.at_mut(i, j);
                    *cell = &*cell + &(a * b);
                }
            }
        }
        out
    }

    /// `self * other - other * self` for square matrices.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Scalar {
        let n = self.dim();
        let mut t = Scalar::zero();
        for i in 0..n {
            t = &t + self.at(i, i);
        }
        t
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = alloc::vec![Scalar::zero(); self.rows];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                let a = self.at(i, j);
                if !a.is_zero() {
                    *slot = &*slot + &(a * c);
                }
            }
        }
        out
    }

    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(self.cols, v.dim(), "dimension mismatch");
        let mut out = SparseVec::zero(self.rows);
        for (j, c) in v.iter() {
            for i in 0..self.rows {
                let a = self.at(i, j);
                if !a.is_zero() {
                    let updated = &out.get(i) + &(a * c);
                    out.set(i, updated);
                }
            }
        }
        out
    }

    /// Row-major flattening into a vector of length `rows * cols`.
    pub fn flatten(&self) -> SparseVec {
        SparseVec::from_dense(&self.data)
    }

    /// Entrywise complex conjugation.
    pub fn conj_entrywise(&self) -> Matrix {
        let data = self.data.iter().map(Scalar::conj).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn stack_vertical(blocks: &[&Matrix]) -> Matrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols), "column count mismatch");
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }
}

/// Anything that acts linearly on sparse vectors; lets closure computations
/// run over structured operators (such as tensor-product actions) without
/// materializing their full matrices.
pub trait LinearOp {
    fn apply_op(&self, v: &SparseVec) -> SparseVec;
}

impl LinearOp for Matrix {
    fn apply_op(&self, v: &SparseVec) -> SparseVec {
        self.apply_sparse(v)
    }
}

/// A subspace stored as the unique reduced row echelon basis.
///
/// Rows have strictly increasing pivot indices, each pivot coefficient is 1,
/// and every pivot column is zero in all other rows.  Two subspaces are equal
/// exactly when their stored rows are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn empty(ambient: usize) -> Subspace {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn from_spanning<I: IntoIterator<Item = SparseVec>>(ambient: usize, vectors: I) -> Subspace {
        let mut s = Subspace::empty(ambient);
        for v in vectors {
            s.insert(&v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    /// The residual of `v` after eliminating against the basis rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ambient, "dimension mismatch");
        let mut residual = v.clone();
        for row in &self.rows {
            let (pivot, _) = row.leading().expect("basis rows are nonzero");
            let c = residual.get(pivot);
            if !c.is_zero() {
                residual.add_scaled(row, &(-&c));
            }
        }
        residual
    }

    pub fn member(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span, restoring reduced row echelon form.  Returns
    /// true when the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut residual = self.reduce(v);
        let Some((pivot, lead)) = residual.leading().map(|(i, c)| (i, c.clone())) else {
            return false;
        };
        residual = residual.scale(&lead.inverse().expect("leading coefficient is nonzero"));
        // Eliminate the new pivot column from the existing rows.
        for row in &mut self.rows {
            let c = row.get(pivot);
            if !c.is_zero() {
                row.add_scaled(&residual, &(-&c));
            }
        }
        let position = self
            .rows
            .iter()
            .position(|row| row.leading().expect("nonzero").0 > pivot)
            .unwrap_or(self.rows.len());
        self.rows.insert(position, residual);
        true
    }
}

/// Row echelon reduction of arbitrary rows; returns the reduced rows and the
/// pivot column of each.
fn row_echelon(ambient: usize, rows: Vec<SparseVec>) -> (Vec<SparseVec>, Vec<usize>) {
    let mut space = Subspace::empty(ambient);
    for row in rows {
        space.insert(&row);
    }
    let pivots = space
        .rows
        .iter()
        .map(|r| r.leading().expect("nonzero").0)
        .collect();
    (space.rows, pivots)
}

/// The rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    let rows: Vec<SparseVec> = (0..m.rows())
        .map(|i| {
            let mut v = SparseVec::zero(m.cols());
            for j in 0..m.cols() {
                v.set(j, m.at(i, j).clone());
            }
            v
        })
        .collect();
    row_echelon(m.cols(), rows).0.len()
}

/// The inverse of a square matrix, by Gauss-Jordan elimination.
pub fn invert(m: &Matrix) -> Result<Matrix, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::NotSquare);
    }
    let n = m.rows();
    // Augmented rows [m | I].
    let mut rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut row: Vec<Scalar> = (0..n).map(|j| m.at(i, j).clone()).collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(LinalgError::SingularMatrix)?;
        rows.swap(col, pivot_row);
        let inv = rows[col][col].inverse().expect("pivot is nonzero");
        for j in 0..2 * n {
            rows[col][j] = &rows[col][j] * &inv;
        }
        for r in 0..n {
            if r == col || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for j in 0..2 * n {
                let delta = &rows[col][j] * &factor;
                rows[r][j] = &rows[r][j] - &delta;
            }
        }
    }
    let mut out = Matrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *out.at_mut(i, j) = rows[i][n + j].clone();
        }
    }
    Ok(out)
}

/// The kernel of a matrix as a subspace of its domain.
pub fn kernel(m: &Matrix) -> Subspace {
    let rows: Vec<SparseVec> = (0..m.rows())
        .map(|i| {
            let mut v = SparseVec::zero(m.cols());
            for j in 0..m.cols() {
                v.set(j, m.at(i, j).clone());
            }
            v
        })
        .collect();
    let (reduced, pivots) = row_echelon(m.cols(), rows);
    let mut kernel = Subspace::empty(m.cols());
    for free in 0..m.cols() {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = SparseVec::zero(m.cols());
        v.set(free, Scalar::one());
        for (row, &pivot) in reduced.iter().zip(&pivots) {
            let c = row.get(free);
            if !c.is_zero() {
                v.set(pivot, -&c);
            }
        }
        kernel.insert(&v);
    }
    kernel
}

/// The joint eigenspace `{v : op_k v = lambda_k v}` of commuting operators.
pub fn simultaneous_eigenspace(
    pairs: &[(&Matrix, Scalar)],
) -> Result<Subspace, LinalgError> {
    assert!(!pairs.is_empty());
    let n = pairs[0].0.rows();
    for (op, _) in pairs {
        if op.rows() != op.cols() {
            return Err(LinalgError::NotSquare);
        }
        if op.rows() != n {
            return Err(LinalgError::DimensionMismatch);
        }
    }
    for (a, _) in pairs {
        for (b, _) in pairs {
            if !a.commutator(b).is_zero() {
                return Err(LinalgError::NonCommuting);
            }
        }
    }
    let shifted: Vec<Matrix> = pairs
        .iter()
        .map(|(op, lambda)| op.sub(&Matrix::identity(n).scale(lambda)))
        .collect();
    let refs: Vec<&Matrix> = shifted.iter().collect();
    Ok(kernel(&Matrix::stack_vertical(&refs)))
}

/// The smallest subspace containing `seeds` and stable under every operator.
///
/// Work proceeds through a queue in insertion order: each newly independent
/// vector is hit with each operator in the given order, so the result and the
/// intermediate states are deterministic.
pub fn closure_under(ops: &[&dyn LinearOp], ambient: usize, seeds: &[SparseVec]) -> Subspace {
    let mut space = Subspace::empty(ambient);
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for seed in seeds {
        if space.insert(seed) {
            queue.push_back(seed.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for op in ops {
            let image = op.apply_op(&v);
            assert_eq!(image.dim(), ambient, "operator changed ambient dimension");
            if space.insert(&image) {
                queue.push_back(image);
            }
        }
    }
    space
}

/// Expresses vectors in the coordinates of an independent spanning set chosen
/// greedily from a listed family.
pub struct SpanSolver {
    ambient: usize,
    selected: Vec<usize>,
    reduced_rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    /// `combos[r]` writes `reduced_rows[r]` as a combination of the selected
    /// original vectors.
    combos: Vec<Vec<Scalar>>,
}

impl SpanSolver {
    /// Scans `vectors` in order, keeping each one that is independent of the
    /// vectors kept so far.  The solver then expresses members of the span in
    /// coordinates over the kept vectors (`selected` lists their indices).
    pub fn greedy(ambient: usize, vectors: &[SparseVec]) -> SpanSolver {
        let mut solver = SpanSolver {
            ambient,
            selected: Vec::new(),
            reduced_rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
        };
        for (index, v) in vectors.iter().enumerate() {
            assert_eq!(v.dim(), ambient, "dimension mismatch");
            solver.try_insert(index, v);
        }
        solver
    }

    fn try_insert(&mut self, index: usize, v: &SparseVec) -> bool {
        let mut residual = v.clone();
        let mut mix = alloc::vec![Scalar::zero(); self.selected.len()];
        for (r, row) in self.reduced_rows.iter().enumerate() {
            let c = residual.get(self.pivots[r]);
            if !c.is_zero() {
                residual.add_scaled(row, &(-&c));
                for (slot, coeff) in mix.iter_mut().zip(&self.combos[r]) {
                    *slot = &*slot + &(&c * coeff);
                }
            }
        }
        let Some((pivot, lead)) = residual.leading().map(|(i, c)| (i, c.clone())) else {
            return false;
        };
        // residual = v - mix . selected; normalize so the pivot is 1 and record
        // the new vector's own coefficient.
        let inv = lead.inverse().expect("nonzero leading coefficient");
        let new_row = residual.scale(&inv);
        let mut new_combo: Vec<Scalar> = mix.iter().map(|c| &(-c) * &inv).collect();
        new_combo.push(inv);
        let position = self.selected.len();
        self.selected.push(index);
        for combo in &mut self.combos {
            combo.push(Scalar::zero());
        }
        // Gauss-Jordan: clear the new pivot column from the existing rows.
        for r in 0..self.reduced_rows.len() {
            let c = self.reduced_rows[r].get(pivot);
            if !c.is_zero() {
                self.reduced_rows[r].add_scaled(&new_row, &(-&c));
                for k in 0..=position {
                    self.combos[r][k] = &self.combos[r][k] - &(&c * &new_combo[k]);
                }
            }
        }
        self.reduced_rows.push(new_row);
        self.pivots.push(pivot);
        self.combos.push(new_combo);
        true
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Indices (into the original family) of the kept spanning vectors.
    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    pub fn rank(&self) -> usize {
        self.selected.len()
    }

    /// Coordinates of `v` over the kept spanning vectors, or an error when
    /// `v` lies outside their span.
    pub fn express(&self, v: &SparseVec) -> Result<Vec<Scalar>, LinalgError> {
        if v.dim() != self.ambient {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut coords = alloc::vec![Scalar::zero(); self.selected.len()];
        let mut residual = v.clone();
        for (r, row) in self.reduced_rows.iter().enumerate() {
            let c = residual.get(self.pivots[r]);
            if !c.is_zero() {
                residual.add_scaled(row, &(-&c));
                for (slot, coeff) in coords.iter_mut().zip(&self.combos[r]) {
                    *slot = &*slot + &(&c * coeff);
                }
            }
        }
        if residual.is_zero() {
            Ok(coords)
        } else {
            Err(LinalgError::NotAMember)
        }
    }
}
