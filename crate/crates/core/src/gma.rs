//! Generalized matrix datums: block dimension tables, the θ pairing maps,
//! validation, assembly into the total algebra, Peirce decomposition, ideal
//! families with the symmetry condition, and the block ideal they generate.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{check_algebra, check_algebra_morphism, FinDimAlgebra, LinearMap};
use crate::linalg::{pair_index, Matrix, Subspace};
use crate::report::{CheckItem, Report};
use crate::scalar::{Field, Scalar};

/// Errors from datum constructors and the Peirce decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GmaError {
    Shape(String),
    InvalidInput(String),
    NotSymmetric(usize, usize),
}

impl core::fmt::Display for GmaError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GmaError::Shape(s) => write!(f, "shape mismatch: {s}"),
            GmaError::InvalidInput(s) => write!(f, "invalid input: {s}"),
            GmaError::NotSymmetric(i, j) => {
                write!(f, "ideal family not symmetric at block pair ({i},{j})")
            }
        }
    }
}

/// A generalized matrix datum of order `n`: block bimodules `M_ij` given by
/// dimension only, pairings `θ_ijk : M_ij ⊗ M_jk → M_ik`, and the unit of
/// each diagonal algebra `R_i = M_ii`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedMatrixDatum {
    pub field: Field,
    pub n: usize,
    /// Row-major `n×n`: `block_dims[i·n + j] = dim M_ij`.
    pub block_dims: Vec<usize>,
    /// Flat `n³`, index `(i·n + j)·n + k`; each matrix is
    /// `dim M_ik × (dim M_ij · dim M_jk)` with column index
    /// `pair_index(s, dim M_jk, t)`.
    pub theta: Vec<Matrix>,
    /// `eta[i]` is the unit of `R_i` in the basis of `M_ii`.
    pub eta: Vec<Vec<Scalar>>,
}

impl GeneralizedMatrixDatum {
    pub fn new(
        field: Field,
        n: usize,
        block_dims: Vec<usize>,
        theta: Vec<Matrix>,
        eta: Vec<Vec<Scalar>>,
    ) -> Result<GeneralizedMatrixDatum, GmaError> {
        if n == 0 {
            return Err(GmaError::InvalidInput(String::from("no blocks")));
        }
        if block_dims.len() != n * n {
            return Err(GmaError::Shape(format!(
                "block_dims has {} entries, expected {}",
                block_dims.len(),
                n * n
            )));
        }
        if theta.len() != n * n * n {
            return Err(GmaError::Shape(format!(
                "theta has {} maps, expected {}",
                theta.len(),
                n * n * n
            )));
        }
        if eta.len() != n {
            return Err(GmaError::Shape(format!(
                "eta has {} vectors, expected {n}",
                eta.len()
            )));
        }
        for i in 0..n {
            if block_dims[i * n + i] == 0 {
                return Err(GmaError::InvalidInput(format!(
                    "diagonal block {i} has dimension 0"
                )));
            }
            if eta[i].len() != block_dims[i * n + i] {
                return Err(GmaError::Shape(format!(
                    "eta[{i}] has {} entries, expected {}",
                    eta[i].len(),
                    block_dims[i * n + i]
                )));
            }
            if eta[i].iter().any(|s| s.field() != field) {
                return Err(GmaError::InvalidInput(format!("eta[{i}] field mismatch")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let m = &theta[(i * n + j) * n + k];
                    let d_ij = block_dims[i * n + j];
                    let d_jk = block_dims[j * n + k];
                    let d_ik = block_dims[i * n + k];
                    if m.rows != d_ik || m.cols != d_ij * d_jk {
                        return Err(GmaError::Shape(format!(
                            "theta[{i}{j}{k}] is {}×{}, expected {}×{}",
                            m.rows,
                            m.cols,
                            d_ik,
                            d_ij * d_jk
                        )));
                    }
                    if d_ik > 0 && d_ij * d_jk > 0 && m.field() != field {
                        return Err(GmaError::InvalidInput(format!(
                            "theta[{i}{j}{k}] field mismatch"
                        )));
                    }
                }
            }
        }
        Ok(GeneralizedMatrixDatum {
            field,
            n,
            block_dims,
            theta,
            eta,
        })
    }

    /// A datum with a single block: a plain algebra.
    pub fn from_algebra(a: &FinDimAlgebra) -> GeneralizedMatrixDatum {
        GeneralizedMatrixDatum {
            field: a.field,
            n: 1,
            block_dims: vec![a.dim],
            theta: vec![a.mult_matrix()],
            eta: vec![a.unit.clone()],
        }
    }

    #[inline]
    pub fn dim_of(&self, i: usize, j: usize) -> usize {
        self.block_dims[i * self.n + j]
    }

    #[inline]
    pub fn theta_ref(&self, i: usize, j: usize, k: usize) -> &Matrix {
        &self.theta[(i * self.n + j) * self.n + k]
    }

    /// `θ_ijk(x ⊗ y)` for coordinate vectors `x ∈ M_ij`, `y ∈ M_jk`.
    pub fn pair(&self, i: usize, j: usize, k: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d_jk = self.dim_of(j, k);
        let mut tensor = vec![self.field.zero(); x.len() * y.len()];
        for (s, xs) in x.iter().enumerate() {
            if xs.is_zero() {
                continue;
            }
            for (t, yt) in y.iter().enumerate() {
                if !yt.is_zero() {
                    tensor[pair_index(s, d_jk, t)] = xs * yt;
                }
            }
        }
        self.theta_ref(i, j, k).apply(&tensor)
    }

    /// The diagonal algebra `R_i`.
    pub fn diagonal_algebra(&self, i: usize) -> FinDimAlgebra {
        let d = self.dim_of(i, i);
        let th = self.theta_ref(i, i, i);
        let mut mult = vec![self.field.zero(); d * d * d];
        for s in 0..d {
            for t in 0..d {
                let col = th.col(pair_index(s, d, t));
                for (k, c) in col.into_iter().enumerate() {
                    mult[(s * d + t) * d + k] = c;
                }
            }
        }
        FinDimAlgebra::new(self.field, d, mult, self.eta[i].clone())
            .expect("validated datum shapes")
    }
}

/// Checks all datum identities: each `R_i` is a unital associative algebra,
/// the unit laws of each bimodule, full θ-associativity over all `(i,j,k,l)`,
/// and the middle-balancedness consequence (reported separately even though
/// it is an instance of associativity).
pub fn check_datum(d: &GeneralizedMatrixDatum) -> Report {
    let mut report = Report::new();
    let n = d.n;
    for i in 0..n {
        report.absorb(&format!("R{i}:"), check_algebra(&d.diagonal_algebra(i)));
    }

    let mut unit_left = CheckItem::new("unit-left");
    let mut unit_right = CheckItem::new("unit-right");
    for i in 0..n {
        for j in 0..n {
            let d_ij = d.dim_of(i, j);
            for t in 0..d_ij {
                let mut e = vec![d.field.zero(); d_ij];
                e[t] = d.field.one();
                unit_left.check(d.pair(i, i, j, &d.eta[i], &e) == e, &[i, j, t]);
                unit_right.check(d.pair(i, j, j, &e, &d.eta[j]) == e, &[i, j, t]);
            }
        }
    }
    report.push(unit_left);
    report.push(unit_right);

    let mut assoc = CheckItem::new("assoc");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (d_ij, d_jk, d_kl) = (d.dim_of(i, j), d.dim_of(j, k), d.dim_of(k, l));
                    for s in 0..d_ij {
                        let mut x = vec![d.field.zero(); d_ij];
                        x[s] = d.field.one();
                        for t in 0..d_jk {
                            let mut y = vec![d.field.zero(); d_jk];
                            y[t] = d.field.one();
                            let xy = d.pair(i, j, k, &x, &y);
                            for u in 0..d_kl {
                                let mut z = vec![d.field.zero(); d_kl];
                                z[u] = d.field.one();
                                let lhs = d.pair(i, k, l, &xy, &z);
                                let rhs = d.pair(i, j, l, &x, &d.pair(j, k, l, &y, &z));
                                assoc.check(lhs == rhs, &[i, j, k, l, s, t, u]);
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(assoc);

    let mut balanced = CheckItem::new("balanced");
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (d_ij, d_jj, d_jk) = (d.dim_of(i, j), d.dim_of(j, j), d.dim_of(j, k));
                for s in 0..d_ij {
                    let mut m = vec![d.field.zero(); d_ij];
                    m[s] = d.field.one();
                    for r in 0..d_jj {
                        let mut rr = vec![d.field.zero(); d_jj];
                        rr[r] = d.field.one();
                        for t in 0..d_jk {
                            let mut w = vec![d.field.zero(); d_jk];
                            w[t] = d.field.one();
                            let lhs = d.pair(i, j, k, &d.pair(i, j, j, &m, &rr), &w);
                            let rhs = d.pair(i, j, k, &m, &d.pair(j, j, k, &rr, &w));
                            balanced.check(lhs == rhs, &[i, j, k, s, r, t]);
                        }
                    }
                }
            }
        }
    }
    report.push(balanced);

    report
}

/// The total algebra of a datum together with the block bookkeeping.
#[derive(Debug, Clone)]
pub struct BlockedAlgebra {
    pub total: FinDimAlgebra,
    pub n: usize,
    pub block_dims: Vec<usize>,
    /// Start of block `(i,j)` in the total basis, row-major flat `n×n`.
    pub offsets: Vec<usize>,
    /// `basis index → (i, j, within-block index)`.
    pub block_of_basis: Vec<(usize, usize, usize)>,
}

impl BlockedAlgebra {
    #[inline]
    pub fn offset(&self, i: usize, j: usize) -> usize {
        self.offsets[i * self.n + j]
    }

    #[inline]
    pub fn dim_of(&self, i: usize, j: usize) -> usize {
        self.block_dims[i * self.n + j]
    }
}

/// Builds the total algebra `R` with basis the concatenation of block bases
/// in row-major `(i,j)` order; the product is row-column block composition.
pub fn assemble(d: &GeneralizedMatrixDatum) -> BlockedAlgebra {
    let n = d.n;
    let mut offsets = vec![0usize; n * n];
    let mut block_of_basis = Vec::new();
    let mut total_dim = 0usize;
    for i in 0..n {
        for j in 0..n {
            offsets[i * n + j] = total_dim;
            for s in 0..d.dim_of(i, j) {
                block_of_basis.push((i, j, s));
            }
            total_dim += d.dim_of(i, j);
        }
    }

    let mut mult = vec![d.field.zero(); total_dim * total_dim * total_dim];
    for a in 0..total_dim {
        let (i, j, s) = block_of_basis[a];
        for b in 0..total_dim {
            let (k, l, t) = block_of_basis[b];
            if j != k {
                continue;
            }
            let col = d
                .theta_ref(i, j, l)
                .col(pair_index(s, d.dim_of(j, l), t));
            let off = offsets[i * n + l];
            for (u, c) in col.into_iter().enumerate() {
                mult[(a * total_dim + b) * total_dim + (off + u)] = c;
            }
        }
    }
    let mut unit = vec![d.field.zero(); total_dim];
    for i in 0..n {
        let off = offsets[i * n + i];
        for (s, c) in d.eta[i].iter().enumerate() {
            unit[off + s] = c.clone();
        }
    }
    let labels = block_of_basis
        .iter()
        .map(|(i, j, s)| format!("m{i}{j}_{s}"))
        .collect();
    let total = FinDimAlgebra::new(d.field, total_dim, mult, unit)
        .expect("assembled shapes")
        .with_labels(labels);
    BlockedAlgebra {
        total,
        n,
        block_dims: d.block_dims.clone(),
        offsets,
        block_of_basis,
    }
}

/// Includes a block vector into the total algebra.
pub fn block_embed(r: &BlockedAlgebra, i: usize, j: usize, m: &[Scalar]) -> Vec<Scalar> {
    assert!(i < r.n && j < r.n, "block index out of range");
    assert_eq!(m.len(), r.dim_of(i, j));
    let mut out = vec![r.total.field.zero(); r.total.dim];
    let off = r.offset(i, j);
    for (s, c) in m.iter().enumerate() {
        out[off + s] = c.clone();
    }
    out
}

/// Extracts the `(i,j)` block component of a total-algebra vector.
pub fn block_project(r: &BlockedAlgebra, i: usize, j: usize, x: &[Scalar]) -> Vec<Scalar> {
    assert!(i < r.n && j < r.n, "block index out of range");
    assert_eq!(x.len(), r.total.dim);
    let off = r.offset(i, j);
    x[off..off + r.dim_of(i, j)].to_vec()
}

/// Peirce decomposition of `a` along a complete orthogonal idempotent family.
/// Returns the datum together with the isomorphism from the assembled algebra
/// back onto `a` (columns are the chosen block-subspace basis vectors).
pub fn peirce(
    a: &FinDimAlgebra,
    idempotents: &[Vec<Scalar>],
) -> Result<(GeneralizedMatrixDatum, Matrix), GmaError> {
    let n = idempotents.len();
    if n == 0 {
        return Err(GmaError::InvalidInput(String::from("empty idempotent family")));
    }
    for (i, e) in idempotents.iter().enumerate() {
        if e.len() != a.dim {
            return Err(GmaError::Shape(format!("idempotent {i} has wrong length")));
        }
        if a.multiply(e, e) != *e {
            return Err(GmaError::InvalidInput(format!("vector {i} is not idempotent")));
        }
        if e.iter().all(|s| s.is_zero()) {
            return Err(GmaError::InvalidInput(format!("idempotent {i} is zero")));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && a.multiply(&idempotents[i], &idempotents[j]).iter().any(|s| !s.is_zero()) {
                return Err(GmaError::InvalidInput(format!(
                    "idempotents {i} and {j} are not orthogonal"
                )));
            }
        }
    }
    let mut sum = vec![a.field.zero(); a.dim];
    for e in idempotents {
        for (k, c) in e.iter().enumerate() {
            sum[k] = &sum[k] + c;
        }
    }
    if sum != a.unit {
        return Err(GmaError::InvalidInput(String::from(
            "idempotents do not sum to the unit",
        )));
    }

    // block subspaces e_i·A·e_j with canonical echelon bases
    let mut blocks = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let spanning: Vec<Vec<Scalar>> = (0..a.dim)
                .map(|k| {
                    a.multiply(
                        &a.multiply(&idempotents[i], &a.basis_vector(k)),
                        &idempotents[j],
                    )
                })
                .collect();
            blocks.push(
                Subspace::from_spanning(a.dim, &spanning)
                    .map_err(|e| GmaError::InvalidInput(format!("block ({i},{j}): {e:?}")))?,
            );
        }
    }
    let block_dims: Vec<usize> = blocks.iter().map(|b| b.dim()).collect();
    if block_dims.iter().sum::<usize>() != a.dim {
        return Err(GmaError::InvalidInput(String::from(
            "Peirce blocks do not span the algebra",
        )));
    }

    let coords_in = |i: usize, j: usize, v: &[Scalar]| -> Result<Vec<Scalar>, GmaError> {
        blocks[i * n + j].coords(v).ok_or_else(|| {
            GmaError::InvalidInput(format!("product leaves Peirce block ({i},{j})"))
        })
    };
    let mut theta = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let d_ij = block_dims[i * n + j];
                let d_jk = block_dims[j * n + k];
                let d_ik = block_dims[i * n + k];
                let mut m = Matrix::zero(a.field, d_ik, d_ij * d_jk);
                for s in 0..d_ij {
                    for t in 0..d_jk {
                        let prod = a.multiply(
                            &blocks[i * n + j].basis[s],
                            &blocks[j * n + k].basis[t],
                        );
                        m.set_col(pair_index(s, d_jk, t), &coords_in(i, k, &prod)?);
                    }
                }
                theta.push(m);
            }
        }
    }
    let mut eta = Vec::with_capacity(n);
    for (i, e) in idempotents.iter().enumerate() {
        eta.push(coords_in(i, i, e)?);
    }
    let datum = GeneralizedMatrixDatum::new(a.field, n, block_dims, theta, eta)?;

    let assembled = assemble(&datum);
    let mut iso = Matrix::zero(a.field, a.dim, a.dim);
    for (col, &(i, j, s)) in assembled.block_of_basis.iter().enumerate() {
        iso.set_col(col, &blocks[i * n + j].basis[s]);
    }
    if iso.inverse().is_err() {
        return Err(GmaError::InvalidInput(String::from(
            "reassembly map is not bijective",
        )));
    }
    let morph = check_algebra_morphism(&LinearMap::new(iso.clone()), &assembled.total, a);
    if !morph.pass() {
        return Err(GmaError::InvalidInput(format!(
            "reassembly map is not an algebra morphism: {:?}",
            morph.first_failure().map(|c| c.identity.clone())
        )));
    }
    Ok((datum, iso))
}

/// A family of subspaces `I_j ⊆ R_j`, one per diagonal block.
#[derive(Debug, Clone)]
pub struct IdealFamily {
    pub ideals: Vec<Subspace>,
}

impl IdealFamily {
    /// Validates the shapes and that each `I_j` is a two-sided ideal of `R_j`.
    pub fn new(d: &GeneralizedMatrixDatum, ideals: Vec<Subspace>) -> Result<IdealFamily, GmaError> {
        if ideals.len() != d.n {
            return Err(GmaError::Shape(format!(
                "{} ideals for {} blocks",
                ideals.len(),
                d.n
            )));
        }
        for (j, i_j) in ideals.iter().enumerate() {
            let d_jj = d.dim_of(j, j);
            if i_j.ambient_dim != d_jj {
                return Err(GmaError::Shape(format!("ideal {j} has wrong ambient dimension")));
            }
            for u in &i_j.basis {
                for r in 0..d_jj {
                    let mut e = vec![d.field.zero(); d_jj];
                    e[r] = d.field.one();
                    if !i_j.contains(&d.pair(j, j, j, &e, u))
                        || !i_j.contains(&d.pair(j, j, j, u, &e))
                    {
                        return Err(GmaError::InvalidInput(format!(
                            "subspace {j} is not an ideal of R{j}"
                        )));
                    }
                }
            }
        }
        Ok(IdealFamily { ideals })
    }
}

/// Result of the per-pair symmetry comparison `I_i·M_ij = M_ij·I_j`.
#[derive(Debug, Clone)]
pub struct SymmetryResult {
    pub overall: bool,
    /// `(i, j, equal)` for every ordered pair.
    pub pairs: Vec<(usize, usize, bool)>,
}

fn left_product_space(
    d: &GeneralizedMatrixDatum,
    i: usize,
    j: usize,
    ideal: &Subspace,
) -> Subspace {
    let d_ij = d.dim_of(i, j);
    let mut spanning = Vec::new();
    for u in &ideal.basis {
        for t in 0..d_ij {
            let mut e = vec![d.field.zero(); d_ij];
            e[t] = d.field.one();
            spanning.push(d.pair(i, i, j, u, &e));
        }
    }
    Subspace::from_spanning(d_ij, &spanning).expect("consistent field")
}

fn right_product_space(
    d: &GeneralizedMatrixDatum,
    i: usize,
    j: usize,
    ideal: &Subspace,
) -> Subspace {
    let d_ij = d.dim_of(i, j);
    let mut spanning = Vec::new();
    for u in &ideal.basis {
        for s in 0..d_ij {
            let mut e = vec![d.field.zero(); d_ij];
            e[s] = d.field.one();
            spanning.push(d.pair(i, j, j, &e, u));
        }
    }
    Subspace::from_spanning(d_ij, &spanning).expect("consistent field")
}

/// Compares `I_i·M_ij` with `M_ij·I_j` for every pair.
pub fn check_symmetric(d: &GeneralizedMatrixDatum, fam: &IdealFamily) -> SymmetryResult {
    let mut pairs = Vec::new();
    let mut overall = true;
    for i in 0..d.n {
        for j in 0..d.n {
            let left = left_product_space(d, i, j, &fam.ideals[i]);
            let right = right_product_space(d, i, j, &fam.ideals[j]);
            let eq = left == right;
            overall &= eq;
            pairs.push((i, j, eq));
        }
    }
    SymmetryResult { overall, pairs }
}

/// The block ideal `I ⊆ R` with `I_jk = I_j·M_jk + M_jk·I_k`, plus the
/// verification that it is a two-sided ideal of the assembled algebra.
pub fn block_ideal(
    d: &GeneralizedMatrixDatum,
    fam: &IdealFamily,
) -> Result<(Subspace, Report), GmaError> {
    let sym = check_symmetric(d, fam);
    if !sym.overall {
        let &(i, j, _) = sym.pairs.iter().find(|&&(_, _, eq)| !eq).unwrap();
        return Err(GmaError::NotSymmetric(i, j));
    }
    let r = assemble(d);
    let mut spanning = Vec::new();
    for j in 0..d.n {
        for k in 0..d.n {
            let left = left_product_space(d, j, k, &fam.ideals[j]);
            let right = right_product_space(d, j, k, &fam.ideals[k]);
            let local = left.sum(&right).expect("same ambient block");
            for b in &local.basis {
                spanning.push(block_embed(&r, j, k, b));
            }
        }
    }
    let ideal = Subspace::from_spanning(r.total.dim, &spanning)
        .map_err(|e| GmaError::InvalidInput(format!("{e:?}")))?;

    let mut report = Report::new();
    let mut left_closed = CheckItem::new("ideal-left");
    let mut right_closed = CheckItem::new("ideal-right");
    for (bi, b) in ideal.basis.iter().enumerate() {
        for k in 0..r.total.dim {
            let e = r.total.basis_vector(k);
            left_closed.check(ideal.contains(&r.total.multiply(&e, b)), &[k, bi]);
            right_closed.check(ideal.contains(&r.total.multiply(b, &e)), &[bi, k]);
        }
    }
    report.push(left_closed);
    report.push(right_closed);
    Ok((ideal, report))
}
