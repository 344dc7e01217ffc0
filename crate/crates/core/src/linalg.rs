//! Dense exact linear algebra: echelon forms, solving, subspaces.
//!
//! Target dimensions are small (≤ ~64), so everything is dense and
//! Gauss-eliminated with exact pivoting in lexicographic column order. The
//! reduced row-echelon form is the canonical representative of a row span,
//! which makes bases deterministic and subspace comparison a plain equality.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{Field, FieldError, Scalar};

/// A dense row-major matrix of exact scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Scalar>,
}

/// Errors from the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    Shape { expected: (usize, usize), got: (usize, usize) },
    RaggedInput,
    Field(FieldError),
    Inconsistent,
    NotInvertible,
}

impl core::fmt::Display for LinalgError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LinalgError::Shape { expected, got } => {
                write!(f, "shape mismatch: expected {expected:?}, got {got:?}")
            }
            LinalgError::RaggedInput => write!(f, "vectors of unequal length"),
            LinalgError::Field(e) => write!(f, "{e}"),
            LinalgError::Inconsistent => write!(f, "inconsistent linear system"),
            LinalgError::NotInvertible => write!(f, "matrix is not invertible"),
        }
    }
}

impl From<FieldError> for LinalgError {
    fn from(e: FieldError) -> Self {
        LinalgError::Field(e)
    }
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Result<Matrix, LinalgError> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::RaggedInput);
            }
            for s in r {
                if s.field() != field {
                    return Err(FieldError::Mismatch(
                        alloc::format!("{field}"),
                        alloc::format!("{}", s.field()),
                    )
                    .into());
                }
                entries.push(s.clone());
            }
        }
        Ok(Matrix { rows: rows.len(), cols, entries })
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            *self.at_mut(i, j) = v[i].clone();
        }
    }

    pub fn transpose(&self) -> Matrix {
        let field = self.field();
        let mut t = Matrix::zero(field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    /// The common field of all entries; a matrix with no entries defaults to ℚ.
    pub fn field(&self) -> Field {
        self.entries.first().map(|s| s.field()).unwrap_or(Field::Rationals)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let field = self.field();
        let mut out = Matrix::zero(field, self.rows, other.cols);
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
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = &cur + &(a * b);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let field = self.field();
        let mut out = vec![field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| a + b)
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|s| s.is_zero())
    }

    /// Reduced row-echelon form, returning the transformed matrix and the
    /// pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let tmp = m.at(r, j).clone();
                    *m.at_mut(r, j) = m.at(pr, j).clone();
                    *m.at_mut(pr, j) = tmp;
                }
            }
            let inv = m.at(r, c).inv().expect("pivot nonzero");
            for j in 0..m.cols {
                let v = m.at(r, j) * &inv;
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let factor = m.at(i, c).clone();
                for j in 0..m.cols {
                    let v = m.at(i, j) - &(&factor * m.at(r, j));
                    *m.at_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape {
                expected: (self.rows, self.rows),
                got: (self.rows, self.cols),
            });
        }
        let n = self.rows;
        let field = self.field();
        let mut aug = Matrix::zero(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, n + i) = field.one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return Err(LinalgError::NotInvertible);
        }
        let mut inv = Matrix::zero(field, n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = red.at(i, n + j).clone();
            }
        }
        Ok(inv)
    }
}

/// Checks that all entries of all vectors live in `field`.
fn check_field(field: Field, vectors: &[Vec<Scalar>]) -> Result<(), LinalgError> {
    for v in vectors {
        for s in v {
            if s.field() != field {
                return Err(FieldError::Mismatch(
                    alloc::format!("{field}"),
                    alloc::format!("{}", s.field()),
                )
                .into());
            }
        }
    }
    Ok(())
}

/// Canonical basis of the span of `vectors`: the nonzero rows of the reduced
/// row-echelon form. Same span in, same basis out.
pub fn row_space_basis(vectors: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, LinalgError> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let field = vectors[0]
        .first()
        .map(|s| s.field())
        .unwrap_or(Field::Rationals);
    check_field(field, vectors)?;
    let m = Matrix::from_rows(field, vectors)?;
    let (red, pivots) = m.rref();
    Ok((0..pivots.len()).map(|i| red.row(i).to_vec()).collect())
}

/// Solves `m·x = b` exactly, setting free variables to zero. Returns
/// `Err(Inconsistent)` when no solution exists.
pub fn solve_linear(m: &Matrix, b: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
    if m.rows != b.len() {
        return Err(LinalgError::Shape {
            expected: (m.rows, 1),
            got: (b.len(), 1),
        });
    }
    let field = if m.entries.is_empty() {
        b.first().map(|s| s.field()).unwrap_or(Field::Rationals)
    } else {
        m.field()
    };
    check_field(field, &[b.to_vec()])?;
    let mut aug = Matrix::zero(field, m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            *aug.at_mut(i, j) = m.at(i, j).clone();
        }
        *aug.at_mut(i, m.cols) = b[i].clone();
    }
    let (red, pivots) = aug.rref();
    if pivots.contains(&m.cols) {
        return Err(LinalgError::Inconsistent);
    }
    let mut x = vec![field.zero(); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red.at(r, m.cols).clone();
    }
    Ok(x)
}

/// A subspace of a coordinate space, kept as a canonical echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    /// Canonical (RREF) basis rows.
    pub basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn from_spanning(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace, LinalgError> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::RaggedInput);
            }
        }
        Ok(Subspace {
            ambient_dim,
            basis: row_space_basis(vectors)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Pivot column of each canonical basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|row| row.iter().position(|s| !s.is_zero()).expect("RREF pivot"))
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if self.basis.is_empty() {
            return if v.iter().all(|s| s.is_zero()) {
                Some(Vec::new())
            } else {
                None
            };
        }
        // Rows of an RREF basis have unit pivots with zeros above and below,
        // so the coordinate along row k is just v[pivot_k]. Verify membership
        // by reconstructing.
        let field = self.basis[0][0].field();
        let pivots: Vec<usize> = self
            .basis
            .iter()
            .map(|row| row.iter().position(|s| s.is_one()).expect("RREF pivot"))
            .collect();
        let coords: Vec<Scalar> = pivots.iter().map(|&c| v[c].clone()).collect();
        let mut recon = vec![field.zero(); self.ambient_dim];
        for (k, row) in self.basis.iter().enumerate() {
            if coords[k].is_zero() {
                continue;
            }
            for (j, s) in row.iter().enumerate() {
                if !s.is_zero() {
                    recon[j] = &recon[j] + &(&coords[k] * s);
                }
            }
        }
        if recon == v { Some(coords) } else { None }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Element of the ambient space with the given canonical-basis coordinates.
    pub fn from_coords(&self, coords: &[Scalar], field: Field) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.basis.len());
        let mut out = vec![field.zero(); self.ambient_dim];
        for (k, row) in self.basis.iter().enumerate() {
            if coords[k].is_zero() {
                continue;
            }
            for (j, s) in row.iter().enumerate() {
                if !s.is_zero() {
                    out[j] = &out[j] + &(&coords[k] * s);
                }
            }
        }
        out
    }

    /// Intersection computed from the kernel of the stacked basis matrix.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.basis.is_empty() || other.basis.is_empty() {
            return Subspace::from_spanning(self.ambient_dim, &[]);
        }
        let field = self.basis[0][0].field();
        // Solve  sum a_i u_i - sum b_j v_j = 0: kernel of [U^T | -V^T].
        let k1 = self.basis.len();
        let k2 = other.basis.len();
        let mut m = Matrix::zero(field, self.ambient_dim, k1 + k2);
        for (i, u) in self.basis.iter().enumerate() {
            for r in 0..self.ambient_dim {
                *m.at_mut(r, i) = u[r].clone();
            }
        }
        for (j, v) in other.basis.iter().enumerate() {
            for r in 0..self.ambient_dim {
                *m.at_mut(r, k1 + j) = -&v[r];
            }
        }
        let kernel = kernel_basis(&m);
        let vectors: Vec<Vec<Scalar>> = kernel
            .iter()
            .map(|k| {
                let mut w = vec![field.zero(); self.ambient_dim];
                for (i, u) in self.basis.iter().enumerate() {
                    if k[i].is_zero() {
                        continue;
                    }
                    for r in 0..self.ambient_dim {
                        w[r] = &w[r] + &(&k[i] * &u[r]);
                    }
                }
                w
            })
            .collect();
        Subspace::from_spanning(self.ambient_dim, &vectors)
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.ambient_dim, &all)
    }
}

/// Basis of the kernel (null space) of `m`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let field = m.field();
    let (red, pivots) = m.rref();
    let mut basis = Vec::new();
    let pivot_set: Vec<usize> = pivots.clone();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (r, &c) in pivot_set.iter().enumerate() {
            v[c] = -red.at(r, free);
        }
        basis.push(v);
    }
    basis
}

/// Index of `e_i ⊗ e_j` in the tensor basis of `V ⊗ W` with `dim W = dim_second`.
#[inline]
pub fn pair_index(i: usize, dim_second: usize, j: usize) -> usize {
    i * dim_second + j
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rationals.from_ratio(n, d).unwrap()
    }

    fn qv(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&n| q(n, 1)).collect()
    }

    #[test]
    fn basis_full_space() {
        let b = row_space_basis(&[qv(&[1, 0]), qv(&[0, 1]), qv(&[1, 1])]).unwrap();
        assert_eq!(b, vec![qv(&[1, 0]), qv(&[0, 1])]);
    }

    #[test]
    fn basis_empty() {
        let b = row_space_basis(&[]).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn basis_dependent_rows() {
        // hand echelon reduction: (2,4) and (1,2) both reduce to (1,2)
        let b = row_space_basis(&[qv(&[2, 4]), qv(&[1, 2])]).unwrap();
        assert_eq!(b, vec![qv(&[1, 2])]);
    }

    #[test]
    fn basis_idempotent() {
        let vs = vec![qv(&[1, 2, 3]), qv(&[2, 4, 7]), qv(&[0, 1, 0])];
        let b = row_space_basis(&vs).unwrap();
        let b2 = row_space_basis(&b).unwrap();
        assert_eq!(b, b2);
        // every input vector lies in the span of the basis
        let sub = Subspace::from_spanning(3, &vs).unwrap();
        for v in &vs {
            assert!(sub.contains(v));
        }
    }

    #[test]
    fn basis_field_mismatch() {
        let mixed = vec![
            vec![q(1, 1), q(0, 1)],
            vec![Field::Prime(5).from_i64(1), Field::Prime(5).from_i64(2)],
        ];
        assert!(matches!(
            row_space_basis(&mixed),
            Err(LinalgError::Field(_))
        ));
    }

    #[test]
    fn solve_identity() {
        let m = Matrix::identity(Field::Rationals, 2);
        assert_eq!(solve_linear(&m, &qv(&[3, 5])).unwrap(), qv(&[3, 5]));
    }

    #[test]
    fn solve_free_variable_zeroed() {
        let m = Matrix::from_rows(Field::Rationals, &[qv(&[1, 1])]).unwrap();
        assert_eq!(solve_linear(&m, &qv(&[2])).unwrap(), qv(&[2, 0]));
    }

    #[test]
    fn solve_inconsistent() {
        let m = Matrix::from_rows(Field::Rationals, &[qv(&[1]), qv(&[1])]).unwrap();
        assert_eq!(
            solve_linear(&m, &qv(&[0, 1])),
            Err(LinalgError::Inconsistent)
        );
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = Matrix::identity(Field::Rationals, 2);
        assert!(matches!(
            solve_linear(&m, &qv(&[1])),
            Err(LinalgError::Shape { .. })
        ));
    }

    #[test]
    fn intersection_and_sum() {
        let u = Subspace::from_spanning(3, &[qv(&[1, 0, 0]), qv(&[0, 1, 0])]).unwrap();
        let v = Subspace::from_spanning(3, &[qv(&[0, 1, 0]), qv(&[0, 0, 1])]).unwrap();
        let w = u.intersect(&v).unwrap();
        assert_eq!(w.dim(), 1);
        assert!(w.contains(&qv(&[0, 2, 0])));
        assert_eq!(u.sum(&v).unwrap().dim(), 3);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(Field::Rationals, &[qv(&[1, 2]), qv(&[3, 5])]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Rationals, 2));
    }

    #[test]
    fn prime_field_rref() {
        let f = Field::Prime(5);
        let rows = vec![
            vec![f.from_i64(2), f.from_i64(4)],
            vec![f.from_i64(1), f.from_i64(2)],
        ];
        let b = row_space_basis(&rows).unwrap();
        assert_eq!(b, vec![vec![f.from_i64(1), f.from_i64(2)]]);
    }
}
