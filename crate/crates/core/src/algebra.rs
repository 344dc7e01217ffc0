//! Finite-dimensional unital algebras as structure-constant tensors.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{pair_index, Matrix};
use crate::report::{CheckItem, Report};
use crate::scalar::{Field, Scalar};

/// A finite-dimensional unital algebra.
///
/// The multiplication is the 3-tensor `c[i][j][k]` with
/// `e_i · e_j = Σ_k c[i][j][k] e_k`, stored flat in row-major (i, j, k)
/// order. `unit` holds the coordinates of `1_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimAlgebra {
    pub dim: usize,
    pub field: Field,
    /// Flat structure-constant tensor, length `dim³`.
    pub mult: Vec<Scalar>,
    pub unit: Vec<Scalar>,
    pub basis_labels: Vec<String>,
}

/// A linear map between (the underlying spaces of) two algebras.
/// Columns are the images of the domain basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> LinearMap {
        LinearMap {
            domain_dim: matrix.cols,
            codomain_dim: matrix.rows,
            matrix,
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn identity(field: Field, dim: usize) -> LinearMap {
        LinearMap::new(Matrix::identity(field, dim))
    }
}

/// Errors raised by algebra constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    Shape(String),
    InvalidInput(String),
}

impl core::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AlgebraError::Shape(s) => write!(f, "shape mismatch: {s}"),
            AlgebraError::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl FinDimAlgebra {
    pub fn new(
        field: Field,
        dim: usize,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
    ) -> Result<FinDimAlgebra, AlgebraError> {
        if mult.len() != dim * dim * dim {
            return Err(AlgebraError::Shape(format!(
                "mult tensor has {} entries, expected {}",
                mult.len(),
                dim * dim * dim
            )));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape(format!(
                "unit vector has {} entries, expected {dim}",
                unit.len()
            )));
        }
        for s in mult.iter().chain(unit.iter()) {
            if s.field() != field {
                return Err(AlgebraError::InvalidInput(format!(
                    "entry in field {}, expected {field}",
                    s.field()
                )));
            }
        }
        Ok(FinDimAlgebra {
            dim,
            field,
            mult,
            unit,
            basis_labels: (0..dim).map(|i| format!("e{i}")).collect(),
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> FinDimAlgebra {
        assert_eq!(labels.len(), self.dim);
        self.basis_labels = labels;
        self
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), self.dim);
        assert_eq!(b.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// Product of two basis vectors.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// The multiplication tensor as a matrix `A⊗A → A` over the pair basis.
    pub fn mult_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.field, self.dim, self.dim * self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    *m.at_mut(k, pair_index(i, self.dim, j)) = self.c(i, j, k).clone();
                }
            }
        }
        m
    }
}

/// Verifies associativity and both unit laws on all basis tuples.
pub fn check_algebra(a: &FinDimAlgebra) -> Report {
    let mut report = Report::new();
    let n = a.dim;

    let mut assoc = CheckItem::new("assoc");
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let jk = a.basis_product(j, k);
                let lhs = a.multiply(&ij, &a.basis_vector(k));
                let rhs = a.multiply(&a.basis_vector(i), &jk);
                assoc.check(lhs == rhs, &[i, j, k]);
            }
        }
    }
    report.push(assoc);

    let mut unit_left = CheckItem::new("unit-left");
    let mut unit_right = CheckItem::new("unit-right");
    for i in 0..n {
        let e = a.basis_vector(i);
        unit_left.check(a.multiply(&a.unit, &e) == e, &[i]);
        unit_right.check(a.multiply(&e, &a.unit) == e, &[i]);
    }
    report.push(unit_left);
    report.push(unit_right);
    report
}

/// The opposite algebra: the mult tensor transposed in its first two indices.
pub fn opposite(a: &FinDimAlgebra) -> FinDimAlgebra {
    let n = a.dim;
    let mut mult = vec![a.field.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mult[(i * n + j) * n + k] = a.c(j, i, k).clone();
            }
        }
    }
    FinDimAlgebra {
        dim: n,
        field: a.field,
        mult,
        unit: a.unit.clone(),
        basis_labels: a.basis_labels.clone(),
    }
}

/// End(V) for an `n`-dimensional space in the matrix-unit basis `E_pq`
/// (index `p·n + q`), with composition order `(f·g)(v) = f(g(v))`.
pub fn endomorphism_algebra(field: Field, n: usize) -> Result<FinDimAlgebra, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidInput(String::from(
            "endomorphism algebra of a 0-dimensional space",
        )));
    }
    let dim = n * n;
    let mut mult = vec![field.zero(); dim * dim * dim];
    // E_pq · E_rs = δ_qr E_ps
    for p in 0..n {
        for q in 0..n {
            let i = p * n + q;
            for s in 0..n {
                let j = q * n + s;
                let k = p * n + s;
                mult[(i * dim + j) * dim + k] = field.one();
            }
        }
    }
    let mut unit = vec![field.zero(); dim];
    for p in 0..n {
        unit[p * n + p] = field.one();
    }
    let labels = (0..n)
        .flat_map(|p| (0..n).map(move |q| format!("E{}{}", p + 1, q + 1)))
        .collect();
    Ok(FinDimAlgebra {
        dim,
        field,
        mult,
        unit,
        basis_labels: labels,
    })
}

/// Coordinates in End(V)'s matrix-unit basis of the operator given by
/// `matrix` (an n×n matrix acting on column coordinates).
pub fn operator_to_end_coords(matrix: &Matrix) -> Vec<Scalar> {
    assert_eq!(matrix.rows, matrix.cols);
    // T = Σ T_pq E_pq, and E_pq has index p·n + q, so this is just row-major.
    matrix.entries.clone()
}

/// Reads an element of End(V) back as an n×n operator matrix.
pub fn end_coords_to_operator(n: usize, coords: &[Scalar]) -> Matrix {
    assert_eq!(coords.len(), n * n);
    Matrix {
        rows: n,
        cols: n,
        entries: coords.to_vec(),
    }
}

/// Checks that `f` is a unital algebra morphism from `a` to `b`
/// (multiplicative on basis pairs, unit to unit).
pub fn check_algebra_morphism(f: &LinearMap, a: &FinDimAlgebra, b: &FinDimAlgebra) -> Report {
    let mut report = Report::new();
    let mut shape = CheckItem::new("shape");
    shape.check(
        f.domain_dim == a.dim && f.codomain_dim == b.dim,
        &[f.domain_dim, f.codomain_dim],
    );
    let shapes_ok = shape.pass;
    report.push(shape);
    if !shapes_ok {
        return report;
    }

    let mut unital = CheckItem::new("morphism-unit");
    unital.check(f.apply(&a.unit) == b.unit, &[]);
    report.push(unital);

    let mut multiplicative = CheckItem::new("morphism-mult");
    for i in 0..a.dim {
        let fi = f.apply(&a.basis_vector(i));
        for j in 0..a.dim {
            let fj = f.apply(&a.basis_vector(j));
            let lhs = f.apply(&a.basis_product(i, j));
            let rhs = b.multiply(&fi, &fj);
            multiplicative.check(lhs == rhs, &[i, j]);
        }
    }
    report.push(multiplicative);
    report
}
