//! Block decomposition and synthesis of partial Hopf actions on generalized
//! matrix algebras.
//!
//! A block-invariant left partial action on an assembled generalized matrix
//! algebra restricts to diagonal partial actions `⇀ᵢ` and to block partial
//! representations `π_ij` (with opposite companions `γ_ij`). Conversely, a
//! family of smash-module structures on the blocks satisfying the
//! compatibility and multiplicativity identities assembles back into a
//! partial action on the whole ring. This module implements both directions,
//! the secondary multiplicativity identity on right modules, the rewrite
//! identities showing the blocks need not be bimodules, and the Morita-ring
//! construction from an idempotent fixed by the action up to counit.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{
    end_coords_to_operator, endomorphism_algebra, operator_to_end_coords, opposite,
    LinearMap,
};
use crate::gma::{
    assemble, block_embed, block_project, check_datum, BlockedAlgebra, GeneralizedMatrixDatum,
};
use crate::hopf::{variants, HopfAlgebraData, HopfVariant};
use crate::linalg::{pair_index, Matrix, Subspace};
use crate::paction::{
    check_left_partial_action, check_partial_representation, to_right, PartialActionMap,
    PartialRepresentation, Side,
};
use crate::report::{CheckItem, Report};
use crate::scalar::Scalar;
use crate::smash::{
    check_covariant_pair, left_smash, right_smash, universal_morphism, CovariantPairData,
    PairKind, SmashAlgebra,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GmaPartialError {
    Shape(String),
    InvalidInput(String),
    /// The action does not preserve block `(i, j)`.
    NotInvariant(usize, usize),
    /// A staged certificate failed: `(stage tag, first failing identity)`.
    Stage(String, String),
    /// `h·e ≠ ε(h)e` for the Hopf basis element with this index.
    IdempotentNotPreserved(usize),
}

impl core::fmt::Display for GmaPartialError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GmaPartialError::Shape(s) => write!(f, "shape mismatch: {s}"),
            GmaPartialError::InvalidInput(s) => write!(f, "invalid input: {s}"),
            GmaPartialError::NotInvariant(i, j) => {
                write!(f, "action does not preserve block ({i},{j})")
            }
            GmaPartialError::Stage(stage, id) => write!(f, "stage {stage} failed at {id}"),
            GmaPartialError::IdempotentNotPreserved(h) => {
                write!(f, "h·e ≠ ε(h)e at Hopf basis index {h}")
            }
        }
    }
}

fn stage_err(stage: &str, report: &Report) -> GmaPartialError {
    GmaPartialError::Stage(
        String::from(stage),
        report
            .first_failure()
            .map(|c| c.identity.clone())
            .unwrap_or_default(),
    )
}

/// The block data of a partial action on a generalized matrix
/// algebra: diagonal partial actions, the smash products they generate, and
/// one left/right smash-module structure per block.
#[derive(Debug, Clone)]
pub struct BlockPartialData {
    pub datum: GeneralizedMatrixDatum,
    pub hopf: HopfAlgebraData,
    /// `diag_actions[i]` is the left partial action `⇀ᵢ` on `R_i`.
    pub diag_actions: Vec<PartialActionMap>,
    /// `left_smash[i]` is `R_i # H`.
    pub left_smash: Vec<SmashAlgebra>,
    /// `right_smash[j]` is `H^op # R_j` (over the right action induced by `⇀ⱼ`).
    pub right_smash: Vec<SmashAlgebra>,
    /// `left_modules[i·n + j]`: `d × (dim Sᵢ · d)` with `d = dim M_ij`;
    /// column `pair_index(s, d, m)` is `e_s · e_m` in the block basis.
    pub left_modules: Vec<Matrix>,
    /// `right_modules[i·n + j]`: `d × (d · dim S'ⱼ)`; column
    /// `pair_index(m, dim S'ⱼ, s)` is `e_m · e_s`.
    pub right_modules: Vec<Matrix>,
}

impl BlockPartialData {
    #[inline]
    pub fn left_module(&self, i: usize, j: usize) -> &Matrix {
        &self.left_modules[i * self.datum.n + j]
    }

    #[inline]
    pub fn right_module(&self, i: usize, j: usize) -> &Matrix {
        &self.right_modules[i * self.datum.n + j]
    }

    /// `s · m` for `s` in smash coordinates of `R_i # H` and `m ∈ M_ij`.
    pub fn left_act(&self, i: usize, j: usize, s: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let d = self.datum.dim_of(i, j);
        bilinear(&self.datum.field, self.left_module(i, j), s, d, m)
    }

    /// `m · s` for `m ∈ M_ij` and `s` in smash coordinates of `H^op # R_j`.
    pub fn right_act(&self, i: usize, j: usize, m: &[Scalar], s: &[Scalar]) -> Vec<Scalar> {
        let ds = self.right_smash[j].algebra.dim;
        bilinear(&self.datum.field, self.right_module(i, j), m, ds, s)
    }

    /// Smash coordinates of `1ᵢ # e_h` in `R_i # H`.
    pub fn unit_sharp_left(&self, i: usize, h: usize) -> Vec<Scalar> {
        let p = &self.diag_actions[i];
        self.left_smash[i].sharp_left(&p.algebra.unit, &self.hopf.alg.basis_vector(h))
    }

    /// Smash coordinates of `e_h # 1ⱼ` in `H^op # R_j`.
    pub fn unit_sharp_right(&self, j: usize, h: usize) -> Vec<Scalar> {
        let s = &self.right_smash[j];
        s.sharp_right(&self.hopf.alg.basis_vector(h), &s.action.algebra.unit)
    }
}

fn bilinear(
    field: &crate::scalar::Field,
    map: &Matrix,
    x: &[Scalar],
    inner: usize,
    y: &[Scalar],
) -> Vec<Scalar> {
    let mut tensor = vec![field.zero(); x.len() * y.len()];
    for (s, xs) in x.iter().enumerate() {
        if xs.is_zero() {
            continue;
        }
        for (t, yt) in y.iter().enumerate() {
            if !yt.is_zero() {
                tensor[pair_index(s, inner, t)] = xs * yt;
            }
        }
    }
    map.apply(&tensor)
}

fn require_left_pass(p: &PartialActionMap, stage: &str) -> Result<(), GmaPartialError> {
    let rep = check_left_partial_action(p, false)
        .map_err(|e| GmaPartialError::Shape(format!("{e}")))?;
    if !rep.pass() {
        return Err(stage_err(stage, &rep));
    }
    Ok(())
}

/// Rebuilds the structure datum of a blocked algebra from its products, and
/// verifies that the total product really is supported on the block grid.
pub fn blocked_datum(r: &BlockedAlgebra) -> Result<GeneralizedMatrixDatum, GmaPartialError> {
    let n = r.n;
    let f = r.total.field;
    let mut theta = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (dij, djk, dik) = (r.dim_of(i, j), r.dim_of(j, k), r.dim_of(i, k));
                let mut m = Matrix::zero(f, dik, dij * djk);
                for s in 0..dij {
                    for t in 0..djk {
                        let prod = r.total.basis_product(r.offset(i, j) + s, r.offset(j, k) + t);
                        m.set_col(pair_index(s, djk, t), &block_project(r, i, k, &prod));
                    }
                }
                theta.push(m);
            }
        }
    }
    let eta: Vec<Vec<Scalar>> = (0..n)
        .map(|i| block_project(r, i, i, &r.total.unit))
        .collect();
    let block_dims: Vec<usize> = (0..n)
        .flat_map(|i| (0..n).map(move |j| r.dim_of(i, j)))
        .collect();
    let d = GeneralizedMatrixDatum::new(f, n, block_dims, theta, eta)
        .map_err(|e| GmaPartialError::Shape(format!("{e:?}")))?;
    let reassembled = assemble(&d);
    if reassembled.total.mult_matrix() != r.total.mult_matrix()
        || reassembled.total.unit != r.total.unit
    {
        return Err(GmaPartialError::InvalidInput(String::from(
            "total product is not supported on the block grid",
        )));
    }
    Ok(d)
}

/// Entry `(i, j)` is true iff the action maps block `(i, j)` into itself.
pub fn check_block_invariance(
    r: &BlockedAlgebra,
    p: &PartialActionMap,
) -> Result<Vec<Vec<bool>>, GmaPartialError> {
    if p.side != Side::Left {
        return Err(GmaPartialError::InvalidInput(String::from(
            "expected a left action",
        )));
    }
    if p.algebra.dim != r.total.dim {
        return Err(GmaPartialError::Shape(format!(
            "action algebra has dimension {}, blocked algebra has {}",
            p.algebra.dim, r.total.dim
        )));
    }
    require_left_pass(p, "action")?;
    let n = r.n;
    let dh = p.hopf.dim();
    let mut table = vec![vec![true; n]; n];
    for (a, &(i, j, _)) in r.block_of_basis.iter().enumerate() {
        for h in 0..dh {
            let v = p.act_basis_left(h, a);
            for (b, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let (bi, bj, _) = r.block_of_basis[b];
                    if (bi, bj) != (i, j) {
                        table[i][j] = false;
                    }
                }
            }
        }
    }
    Ok(table)
}

fn all_invariant(table: &[Vec<bool>]) -> Result<(), GmaPartialError> {
    for (i, row) in table.iter().enumerate() {
        for (j, &ok) in row.iter().enumerate() {
            if !ok {
                return Err(GmaPartialError::NotInvariant(i, j));
            }
        }
    }
    Ok(())
}

/// The diagonal restrictions and block representations of an invariant action.
#[derive(Debug, Clone)]
pub struct RestrictedBlocks {
    /// `⇀ᵢ` on `R_i`.
    pub diag_actions: Vec<PartialActionMap>,
    /// `π_ij : H → End(M_ij)`, row-major `n×n`; `None` exactly for
    /// zero-dimensional blocks.
    pub pi: Vec<Option<PartialRepresentation>>,
    /// `γ_ij : H^opcop → End(M_ij)^op`, same matrices as `π_ij`.
    pub gamma: Vec<Option<PartialRepresentation>>,
}

/// Restricts an invariant action to its diagonal partial actions and block
/// partial representations. Everything returned is checker-verified.
pub fn restrict_blocks(
    r: &BlockedAlgebra,
    p: &PartialActionMap,
) -> Result<RestrictedBlocks, GmaPartialError> {
    all_invariant(&check_block_invariance(r, p)?)?;
    let datum = blocked_datum(r)?;
    let n = r.n;
    let dh = p.hopf.dim();
    let f = r.total.field;

    let mut diag_actions = Vec::with_capacity(n);
    for i in 0..n {
        let alg = datum.diagonal_algebra(i);
        let d = alg.dim;
        let mut action = Matrix::zero(f, d, dh * d);
        for h in 0..dh {
            for a in 0..d {
                let v = p.act_basis_left(h, r.offset(i, i) + a);
                action.set_col(pair_index(h, d, a), &block_project(r, i, i, &v));
            }
        }
        let q = PartialActionMap {
            hopf: p.hopf.clone(),
            algebra: alg,
            side: Side::Left,
            action,
        };
        require_left_pass(&q, &format!("diag-action({i})"))?;
        diag_actions.push(q);
    }

    let opcop = variants(&p.hopf, HopfVariant::OpCop);
    let mut pi = Vec::with_capacity(n * n);
    let mut gamma = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let d = r.dim_of(i, j);
            if d == 0 {
                pi.push(None);
                gamma.push(None);
                continue;
            }
            let end = endomorphism_algebra(f, d)
                .map_err(|e| GmaPartialError::Shape(format!("{e}")))?;
            let mut map = Matrix::zero(f, d * d, dh);
            for h in 0..dh {
                let mut op = Matrix::zero(f, d, d);
                for m in 0..d {
                    let v = p.act_basis_left(h, r.offset(i, j) + m);
                    op.set_col(m, &block_project(r, i, j, &v));
                }
                map.set_col(h, &operator_to_end_coords(&op));
            }
            let rep = PartialRepresentation {
                hopf: p.hopf.clone(),
                target: end.clone(),
                map: map.clone(),
            };
            let rep_report = check_partial_representation(&rep)
                .map_err(|e| GmaPartialError::Shape(format!("{e}")))?;
            if !rep_report.pass() {
                return Err(stage_err(&format!("pi({i},{j})"), &rep_report));
            }
            let co = PartialRepresentation {
                hopf: opcop.clone(),
                target: opposite(&end),
                map,
            };
            let co_report = check_partial_representation(&co)
                .map_err(|e| GmaPartialError::Shape(format!("{e}")))?;
            if !co_report.pass() {
                return Err(stage_err(&format!("gamma({i},{j})"), &co_report));
            }
            pi.push(Some(rep));
            gamma.push(Some(co));
        }
    }
    Ok(RestrictedBlocks {
        diag_actions,
        pi,
        gamma,
    })
}

/// Verifies all defining identities of the block data: module axioms for
/// every left/right structure, the four compatibility identities, and
/// multiplicativity over all block triples.
pub fn check_block_data(d: &BlockPartialData) -> Result<Report, GmaPartialError> {
    let n = d.datum.n;
    let f = d.datum.field;
    let dh = d.hopf.dim();
    if d.diag_actions.len() != n
        || d.left_smash.len() != n
        || d.right_smash.len() != n
        || d.left_modules.len() != n * n
        || d.right_modules.len() != n * n
    {
        return Err(GmaPartialError::Shape(String::from(
            "block data arrays do not match the datum size",
        )));
    }
    for i in 0..n {
        for j in 0..n {
            let dm = d.datum.dim_of(i, j);
            let (ls, rs) = (d.left_smash[i].algebra.dim, d.right_smash[j].algebra.dim);
            let lm = d.left_module(i, j);
            let rm = d.right_module(i, j);
            if lm.rows != dm || lm.cols != ls * dm || rm.rows != dm || rm.cols != dm * rs {
                return Err(GmaPartialError::Shape(format!(
                    "module matrices for block ({i},{j}) have wrong shape"
                )));
            }
        }
    }

    let mut report = Report::new();
    let basis = |dim: usize, k: usize| -> Vec<Scalar> {
        let mut v = vec![f.zero(); dim];
        v[k] = f.one();
        v
    };

    // module axioms
    for i in 0..n {
        for j in 0..n {
            let dm = d.datum.dim_of(i, j);
            let sl = &d.left_smash[i].algebra;
            let sr = &d.right_smash[j].algebra;
            let mut unital_l = CheckItem::new(&format!("module-left({i},{j}):unital"));
            let mut assoc_l = CheckItem::new(&format!("module-left({i},{j}):assoc"));
            let mut unital_r = CheckItem::new(&format!("module-right({i},{j}):unital"));
            let mut assoc_r = CheckItem::new(&format!("module-right({i},{j}):assoc"));
            for m in 0..dm {
                let em = basis(dm, m);
                unital_l.check(d.left_act(i, j, &sl.unit, &em) == em, &[i, j, m]);
                unital_r.check(d.right_act(i, j, &em, &sr.unit) == em, &[i, j, m]);
                for s in 0..sl.dim {
                    for t in 0..sl.dim {
                        let st = sl.basis_product(s, t);
                        let lhs = d.left_act(i, j, &st, &em);
                        let inner = d.left_act(i, j, &basis(sl.dim, t), &em);
                        let rhs = d.left_act(i, j, &basis(sl.dim, s), &inner);
                        assoc_l.check(lhs == rhs, &[i, j, s, t, m]);
                    }
                }
                for s in 0..sr.dim {
                    for t in 0..sr.dim {
                        let st = sr.basis_product(s, t);
                        let lhs = d.right_act(i, j, &em, &st);
                        let inner = d.right_act(i, j, &em, &basis(sr.dim, s));
                        let rhs = d.right_act(i, j, &inner, &basis(sr.dim, t));
                        assoc_r.check(lhs == rhs, &[i, j, s, t, m]);
                    }
                }
            }
            report.push(unital_l);
            report.push(assoc_l);
            report.push(unital_r);
            report.push(assoc_r);
        }
    }

    // compatibility: (1ᵢ#h)·m = m·(h#1ⱼ); (1ᵢ#h)·r = h⇀ᵢr;
    // (r#1_H)·m = rm; m·(1_H#r) = mr
    for i in 0..n {
        for j in 0..n {
            let dm = d.datum.dim_of(i, j);
            let di = d.datum.dim_of(i, i);
            let dj = d.datum.dim_of(j, j);
            let mut two_sided = CheckItem::new(&format!("compat-action({i},{j})"));
            let mut left_reg = CheckItem::new(&format!("compat-left-mult({i},{j})"));
            let mut right_reg = CheckItem::new(&format!("compat-right-mult({i},{j})"));
            for m in 0..dm {
                let em = basis(dm, m);
                for h in 0..dh {
                    let lhs = d.left_act(i, j, &d.unit_sharp_left(i, h), &em);
                    let rhs = d.right_act(i, j, &em, &d.unit_sharp_right(j, h));
                    two_sided.check(lhs == rhs, &[i, j, h, m]);
                }
                for a in 0..di {
                    let sharp = d.left_smash[i]
                        .sharp_left(&basis(di, a), &d.hopf.alg.unit);
                    let lhs = d.left_act(i, j, &sharp, &em);
                    let rhs = d.datum.pair(i, i, j, &basis(di, a), &em);
                    left_reg.check(lhs == rhs, &[i, j, a, m]);
                }
                for a in 0..dj {
                    let sharp = d.right_smash[j]
                        .sharp_right(&d.hopf.alg.unit, &basis(dj, a));
                    let lhs = d.right_act(i, j, &em, &sharp);
                    let rhs = d.datum.pair(i, j, j, &em, &basis(dj, a));
                    right_reg.check(lhs == rhs, &[i, j, m, a]);
                }
            }
            report.push(two_sided);
            report.push(left_reg);
            report.push(right_reg);
        }
        // diagonal: the module action of 1ᵢ#h on M_ii is ⇀ᵢ
        let di = d.datum.dim_of(i, i);
        let mut diag = CheckItem::new(&format!("compat-diag({i})"));
        for h in 0..dh {
            for a in 0..di {
                let lhs = d.left_act(i, i, &d.unit_sharp_left(i, h), &basis(di, a));
                diag.check(lhs == d.diag_actions[i].act_basis_left(h, a), &[i, h, a]);
            }
        }
        report.push(diag);
    }

    report.absorb("", multiplicativity_left(d));
    Ok(report)
}

/// `(1ᵢ#h)·(mn) = Σ ((1ᵢ#h₍₁₎)·m)((1ⱼ#h₍₂₎)·n)` over every block triple.
fn multiplicativity_left(d: &BlockPartialData) -> Report {
    let n = d.datum.n;
    let f = d.datum.field;
    let dh = d.hopf.dim();
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (dij, djk, dik) = (
                    d.datum.dim_of(i, j),
                    d.datum.dim_of(j, k),
                    d.datum.dim_of(i, k),
                );
                let mut item = CheckItem::new(&format!("mult({i},{j},{k})"));
                for h in 0..dh {
                    for m in 0..dij {
                        let mut em = vec![f.zero(); dij];
                        em[m] = f.one();
                        for t in 0..djk {
                            let mut en = vec![f.zero(); djk];
                            en[t] = f.one();
                            let mn = d.datum.pair(i, j, k, &em, &en);
                            let lhs = d.left_act(i, k, &d.unit_sharp_left(i, h), &mn);
                            let mut rhs = vec![f.zero(); dik];
                            for (h1, h2, c) in d.hopf.comult_terms(h) {
                                let x = d.left_act(i, j, &d.unit_sharp_left(i, h1), &em);
                                let y = d.left_act(j, k, &d.unit_sharp_left(j, h2), &en);
                                let prod = d.datum.pair(i, j, k, &x, &y);
                                for (u, pu) in prod.iter().enumerate() {
                                    rhs[u] = &rhs[u] + &(&c * pu);
                                }
                            }
                            item.check(lhs == rhs, &[h, i, j, k, m, t]);
                        }
                    }
                }
                report.push(item);
            }
        }
    }
    report
}

/// The right-handed multiplicativity identity
/// `(mn)·(h#1ₖ) = Σ (m·(h₍₁₎#1ⱼ))(n·(h₍₂₎#1ₖ))`, plus the agreement check
/// that it holds exactly when the left-handed identity does (conditional on
/// the compatibility identities).
pub fn check_c_prime(d: &BlockPartialData) -> Result<Report, GmaPartialError> {
    let n = d.datum.n;
    let f = d.datum.field;
    let dh = d.hopf.dim();
    let base = check_block_data(d)?;
    let compat_holds = base
        .items
        .iter()
        .filter(|c| c.identity.starts_with("compat-") || c.identity.starts_with("module-"))
        .all(|c| c.pass);
    let left_holds = base
        .items
        .iter()
        .filter(|c| c.identity.starts_with("mult("))
        .all(|c| c.pass);

    let mut report = Report::new();
    let mut right_holds = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (dij, djk, dik) = (
                    d.datum.dim_of(i, j),
                    d.datum.dim_of(j, k),
                    d.datum.dim_of(i, k),
                );
                let mut item = CheckItem::new(&format!("mult-right({i},{j},{k})"));
                for h in 0..dh {
                    for m in 0..dij {
                        let mut em = vec![f.zero(); dij];
                        em[m] = f.one();
                        for t in 0..djk {
                            let mut en = vec![f.zero(); djk];
                            en[t] = f.one();
                            let mn = d.datum.pair(i, j, k, &em, &en);
                            let lhs = d.right_act(i, k, &mn, &d.unit_sharp_right(k, h));
                            let mut rhs = vec![f.zero(); dik];
                            for (h1, h2, c) in d.hopf.comult_terms(h) {
                                let x = d.right_act(i, j, &em, &d.unit_sharp_right(j, h1));
                                let y = d.right_act(j, k, &en, &d.unit_sharp_right(k, h2));
                                let prod = d.datum.pair(i, j, k, &x, &y);
                                for (u, pu) in prod.iter().enumerate() {
                                    rhs[u] = &rhs[u] + &(&c * pu);
                                }
                            }
                            item.check(lhs == rhs, &[h, i, j, k, m, t]);
                        }
                    }
                }
                right_holds &= item.pass;
                report.push(item);
            }
        }
    }
    // the two multiplicativity identities are equivalent in the presence of
    // the compatibility identities; without them the comparison is vacuous
    let mut agree = CheckItem::new("left-right-agreement");
    agree.check(!compat_holds || left_holds == right_holds, &[]);
    report.push(agree);
    Ok(report)
}

/// The rewrite identities expressing a mixed product of module actions as a
/// single left action, and the informational probe of the bimodule axiom
/// (which is not required to hold).
pub fn check_remark_identities(d: &BlockPartialData) -> Result<Report, GmaPartialError> {
    let n = d.datum.n;
    let f = d.datum.field;
    let dh = d.hopf.dim();
    let shape = check_block_data(d)?;
    if !shape.pass() {
        return Err(stage_err("block-data", &shape));
    }
    let mut report = Report::new();
    for i in 0..n {
        for j in 0..n {
            let dm = d.datum.dim_of(i, j);
            let mut rw_left = CheckItem::new(&format!("rewrite-left({i},{j})"));
            let mut rw_right = CheckItem::new(&format!("rewrite-right({i},{j})"));
            let mut bimodule = CheckItem::informational(&format!("bimodule({i},{j})"));
            let pa = &d.diag_actions[i];
            for h in 0..dh {
                for k in 0..dh {
                    // ((k₍₁₎⇀ᵢ1ᵢ) # k₍₂₎h)·m and ((h₍₁₎⇀ᵢ1ᵢ) # h₍₂₎k)·m
                    let fold = |outer: usize, inner: usize| -> Vec<Scalar> {
                        let mut acc = vec![f.zero(); d.left_smash[i].algebra.dim];
                        for (c1, c2, c) in d.hopf.comult_terms(outer) {
                            let au = pa.act_left(
                                &d.hopf.alg.basis_vector(c1),
                                &pa.algebra.unit,
                            );
                            let hv = d.hopf.alg.basis_product(c2, inner);
                            let sharp = d.left_smash[i].sharp_left(&au, &hv);
                            for (u, su) in sharp.iter().enumerate() {
                                acc[u] = &acc[u] + &(&c * su);
                            }
                        }
                        acc
                    };
                    let via_k = fold(k, h);
                    let via_h = fold(h, k);
                    for m in 0..dm {
                        let mut em = vec![f.zero(); dm];
                        em[m] = f.one();
                        let left_then_right = d.right_act(
                            i,
                            j,
                            &d.left_act(i, j, &d.unit_sharp_left(i, h), &em),
                            &d.unit_sharp_right(j, k),
                        );
                        let right_then_left = d.left_act(
                            i,
                            j,
                            &d.unit_sharp_left(i, h),
                            &d.right_act(i, j, &em, &d.unit_sharp_right(j, k)),
                        );
                        rw_left.check(
                            left_then_right == d.left_act(i, j, &via_k, &em),
                            &[i, j, h, k, m],
                        );
                        rw_right.check(
                            right_then_left == d.left_act(i, j, &via_h, &em),
                            &[i, j, h, k, m],
                        );
                        bimodule.check(left_then_right == right_then_left, &[i, j, h, k, m]);
                    }
                }
            }
            report.push(rw_left);
            report.push(rw_right);
            report.push(bimodule);
        }
    }
    Ok(report)
}

/// Decomposes an invariant partial action into its block data: the diagonal
/// actions, their smash products, and the universal left/right module
/// structures on each block, with every intermediate certificate verified.
pub fn decompose(
    r: &BlockedAlgebra,
    p: &PartialActionMap,
) -> Result<BlockPartialData, GmaPartialError> {
    let restricted = restrict_blocks(r, p)?;
    let datum = blocked_datum(r)?;
    let n = r.n;
    let f = r.total.field;

    let mut left_sm = Vec::with_capacity(n);
    let mut right_sm = Vec::with_capacity(n);
    let mut right_actions = Vec::with_capacity(n);
    for (i, q) in restricted.diag_actions.iter().enumerate() {
        left_sm.push(
            left_smash(q).map_err(|e| {
                GmaPartialError::Stage(format!("left-smash({i})"), format!("{e}"))
            })?,
        );
        let rq = to_right(q)
            .map_err(|e| GmaPartialError::Stage(format!("to-right({i})"), format!("{e}")))?;
        right_sm.push(right_smash(&rq).map_err(|e| {
            GmaPartialError::Stage(format!("right-smash({i})"), format!("{e}"))
        })?);
        right_actions.push(rq);
    }

    let mut left_modules = Vec::with_capacity(n * n);
    let mut right_modules = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let dm = datum.dim_of(i, j);
            let (sl, sr) = (&left_sm[i], &right_sm[j]);
            if dm == 0 {
                left_modules.push(Matrix::zero(f, 0, 0));
                right_modules.push(Matrix::zero(f, 0, 0));
                continue;
            }
            let pi = restricted.pi[i * n + j].clone().expect("nonzero block");
            let gamma = restricted.gamma[i * n + j].clone().expect("nonzero block");

            // ψ_ij : R_i → End(M_ij), r ↦ (m ↦ rm)
            let di = datum.dim_of(i, i);
            let mut psi = Matrix::zero(f, dm * dm, di);
            for a in 0..di {
                let mut ea = vec![f.zero(); di];
                ea[a] = f.one();
                let mut op = Matrix::zero(f, dm, dm);
                for m in 0..dm {
                    let mut em = vec![f.zero(); dm];
                    em[m] = f.one();
                    op.set_col(m, &datum.pair(i, i, j, &ea, &em));
                }
                psi.set_col(a, &operator_to_end_coords(&op));
            }
            let left_pair = CovariantPairData {
                kind: PairKind::Left,
                psi: LinearMap::new(psi),
                pi,
            };
            let pair_report = check_covariant_pair(&left_pair, &restricted.diag_actions[i])
                .map_err(|e| {
                    GmaPartialError::Stage(format!("covariant-pair({i},{j})"), format!("{e}"))
                })?;
            if !pair_report.pass() {
                return Err(stage_err(&format!("covariant-pair({i},{j})"), &pair_report));
            }
            let (phi_l, um_report) = universal_morphism(&left_pair, sl).map_err(|e| {
                GmaPartialError::Stage(format!("universal-left({i},{j})"), format!("{e}"))
            })?;
            if !um_report.pass() {
                return Err(stage_err(&format!("universal-left({i},{j})"), &um_report));
            }
            let mut lm = Matrix::zero(f, dm, sl.algebra.dim * dm);
            for s in 0..sl.algebra.dim {
                let op = end_coords_to_operator(dm, &phi_l.matrix.col(s));
                for m in 0..dm {
                    lm.set_col(pair_index(s, dm, m), &op.col(m));
                }
            }
            left_modules.push(lm);

            // φ_ij : R_j → End(M_ij)^op, r ↦ (m ↦ mr)
            let dj = datum.dim_of(j, j);
            let mut phi = Matrix::zero(f, dm * dm, dj);
            for a in 0..dj {
                let mut ea = vec![f.zero(); dj];
                ea[a] = f.one();
                let mut op = Matrix::zero(f, dm, dm);
                for m in 0..dm {
                    let mut em = vec![f.zero(); dm];
                    em[m] = f.one();
                    op.set_col(m, &datum.pair(i, j, j, &em, &ea));
                }
                phi.set_col(a, &operator_to_end_coords(&op));
            }
            let right_pair = CovariantPairData {
                kind: PairKind::Opposite,
                psi: LinearMap::new(phi),
                pi: gamma,
            };
            let pair_report = check_covariant_pair(&right_pair, &right_actions[j])
                .map_err(|e| {
                    GmaPartialError::Stage(format!("opposite-pair({i},{j})"), format!("{e}"))
                })?;
            if !pair_report.pass() {
                return Err(stage_err(&format!("opposite-pair({i},{j})"), &pair_report));
            }
            let (phi_r, um_report) = universal_morphism(&right_pair, sr).map_err(|e| {
                GmaPartialError::Stage(format!("universal-right({i},{j})"), format!("{e}"))
            })?;
            if !um_report.pass() {
                return Err(stage_err(&format!("universal-right({i},{j})"), &um_report));
            }
            let mut rm = Matrix::zero(f, dm, dm * sr.algebra.dim);
            for s in 0..sr.algebra.dim {
                let op = end_coords_to_operator(dm, &phi_r.matrix.col(s));
                for m in 0..dm {
                    rm.set_col(pair_index(m, sr.algebra.dim, s), &op.col(m));
                }
            }
            right_modules.push(rm);
        }
    }

    let data = BlockPartialData {
        datum,
        hopf: p.hopf.clone(),
        diag_actions: restricted.diag_actions,
        left_smash: left_sm,
        right_smash: right_sm,
        left_modules,
        right_modules,
    };
    let report = check_block_data(&data)?;
    if !report.pass() {
        return Err(stage_err("block-data", &report));
    }
    Ok(data)
}

/// Assembles block data back into a partial action on the total algebra via
/// `h ▷ (m_ij) = ((1ᵢ#h)·m_ij)`, verifying the result.
pub fn synthesize(d: &BlockPartialData) -> Result<PartialActionMap, GmaPartialError> {
    let report = check_block_data(d)?;
    if !report.pass() {
        return Err(stage_err("block-data", &report));
    }
    let r = assemble(&d.datum);
    let f = d.datum.field;
    let dh = d.hopf.dim();
    let total = r.total.dim;
    let mut action = Matrix::zero(f, total, dh * total);
    for h in 0..dh {
        for (a, &(i, j, s)) in r.block_of_basis.iter().enumerate() {
            let mut em = vec![f.zero(); d.datum.dim_of(i, j)];
            em[s] = f.one();
            let v = d.left_act(i, j, &d.unit_sharp_left(i, h), &em);
            action.set_col(pair_index(h, total, a), &block_embed(&r, i, j, &v));
        }
    }
    let p = PartialActionMap {
        hopf: d.hopf.clone(),
        algebra: r.total.clone(),
        side: Side::Left,
        action,
    };
    require_left_pass(&p, "synthesized-action")?;
    all_invariant(&check_block_invariance(&r, &p)?)?;
    Ok(p)
}

/// The Morita-ring datum and partial action built from a partial action on
/// `A` and an idempotent `e` with `h·e = ε(h)e`: blocks `A`, `Ae`, `eA`,
/// `eAe`, each with the restricted action.
#[derive(Debug, Clone)]
pub struct MoritaRingAction {
    pub datum: GeneralizedMatrixDatum,
    pub blocked: BlockedAlgebra,
    pub action: PartialActionMap,
    /// Bases of the four blocks inside `A`, row-major `(i,j)` order.
    pub block_spaces: Vec<Subspace>,
}

/// Builds the 2×2 Morita-ring partial action of an idempotent preserved by
/// the action up to counit.
pub fn morita_ring_action(
    p: &PartialActionMap,
    e: &[Scalar],
) -> Result<MoritaRingAction, GmaPartialError> {
    if p.side != Side::Left {
        return Err(GmaPartialError::InvalidInput(String::from(
            "expected a left action",
        )));
    }
    let a = &p.algebra;
    let f = a.field;
    if e.len() != a.dim {
        return Err(GmaPartialError::Shape(String::from(
            "idempotent has the wrong length",
        )));
    }
    require_left_pass(p, "action")?;
    if a.multiply(e, e) != e {
        return Err(GmaPartialError::InvalidInput(String::from(
            "e is not idempotent",
        )));
    }
    for h in 0..p.hopf.dim() {
        let lhs = p.act_left(&p.hopf.alg.basis_vector(h), e);
        let eps = &p.hopf.counit[h];
        let rhs: Vec<Scalar> = e.iter().map(|c| eps * c).collect();
        if lhs != rhs {
            return Err(GmaPartialError::IdempotentNotPreserved(h));
        }
    }

    // blocks A, Ae, eA, eAe as subspaces of A
    let full: Vec<Vec<Scalar>> = (0..a.dim).map(|k| a.basis_vector(k)).collect();
    let ae: Vec<Vec<Scalar>> = (0..a.dim)
        .map(|k| a.multiply(&a.basis_vector(k), e))
        .collect();
    let ea: Vec<Vec<Scalar>> = (0..a.dim)
        .map(|k| a.multiply(e, &a.basis_vector(k)))
        .collect();
    let eae: Vec<Vec<Scalar>> = (0..a.dim)
        .map(|k| a.multiply(e, &a.multiply(&a.basis_vector(k), e)))
        .collect();
    let spaces: Vec<Subspace> = [full, ae, ea, eae]
        .into_iter()
        .map(|gens| {
            Subspace::from_spanning(a.dim, &gens)
                .map_err(|err| GmaPartialError::Shape(format!("{err:?}")))
        })
        .collect::<Result<_, _>>()?;
    let block_dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();

    let mut theta = Vec::with_capacity(8);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let sij = &spaces[i * 2 + j];
                let sjk = &spaces[j * 2 + k];
                let sik = &spaces[i * 2 + k];
                let mut m = Matrix::zero(f, sik.dim(), sij.dim() * sjk.dim());
                for s in 0..sij.dim() {
                    for t in 0..sjk.dim() {
                        let prod = a.multiply(&sij.basis[s], &sjk.basis[t]);
                        let coords = sik.coords(&prod).ok_or_else(|| {
                            GmaPartialError::Shape(String::from(
                                "block product left its target block",
                            ))
                        })?;
                        m.set_col(pair_index(s, sjk.dim(), t), &coords);
                    }
                }
                theta.push(m);
            }
        }
    }
    let eta = vec![
        spaces[0].coords(&a.unit).expect("unit lies in A"),
        spaces[3]
            .coords(e)
            .expect("e = e·1·e lies in the corner block"),
    ];
    let datum = GeneralizedMatrixDatum::new(f, 2, block_dims, theta, eta)
        .map_err(|err| GmaPartialError::Shape(format!("{err:?}")))?;
    let datum_report = check_datum(&datum);
    if !datum_report.pass() {
        return Err(stage_err("datum", &datum_report));
    }

    let blocked = assemble(&datum);
    let total = blocked.total.dim;
    let dh = p.hopf.dim();
    let mut action = Matrix::zero(f, total, dh * total);
    for h in 0..dh {
        let hv = p.hopf.alg.basis_vector(h);
        for (idx, &(i, j, s)) in blocked.block_of_basis.iter().enumerate() {
            let space = &spaces[i * 2 + j];
            let image = p.act_left(&hv, &space.basis[s]);
            let coords = space.coords(&image).ok_or_else(|| {
                GmaPartialError::Shape(String::from("action left its block"))
            })?;
            action.set_col(
                pair_index(h, total, idx),
                &block_embed(&blocked, i, j, &coords),
            );
        }
    }
    let q = PartialActionMap {
        hopf: p.hopf.clone(),
        algebra: blocked.total.clone(),
        side: Side::Left,
        action,
    };
    require_left_pass(&q, "morita-action")?;
    all_invariant(&check_block_invariance(&blocked, &q)?)?;
    Ok(MoritaRingAction {
        datum,
        blocked,
        action: q,
        block_spaces: spaces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinDimAlgebra;
    use crate::gma::peirce;
    use crate::hopf::{group_algebra, sweedler_h4, GroupTable};
    use crate::paction::trivial_left_action;
    use crate::scalar::Field;

    fn q(n: i64) -> Scalar {
        Field::Rationals.from_i64(n)
    }

    fn scalar_field_algebra() -> FinDimAlgebra {
        FinDimAlgebra::new(Field::Rationals, 1, vec![q(1)], vec![q(1)]).unwrap()
    }

    /// 𝕜^m with componentwise product.
    fn diagonal_algebra(m: usize) -> FinDimAlgebra {
        let f = Field::Rationals;
        let mut mult = vec![q(0); m * m * m];
        for i in 0..m {
            mult[(i * m + i) * m + i] = q(1);
        }
        FinDimAlgebra::new(f, m, mult, vec![q(1); m]).unwrap()
    }

    /// M₂ blocked along the diagonal matrix units; total basis order is
    /// E₁₁, E₁₂, E₂₁, E₂₂.
    fn m2_blocked() -> BlockedAlgebra {
        let a = endomorphism_algebra(Field::Rationals, 2).unwrap();
        let e11 = vec![q(1), q(0), q(0), q(0)];
        let e22 = vec![q(0), q(0), q(0), q(1)];
        let (datum, _) = peirce(&a, &[e11, e22]).unwrap();
        assemble(&datum)
    }

    /// ℤ/2 conjugation by diag(1,−1) on the blocked M₂.
    fn conjugation_action(r: &BlockedAlgebra) -> PartialActionMap {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let mut action = Matrix::zero(Field::Rationals, 4, 8);
        let signs = [q(1), q(-1), q(-1), q(1)];
        for b in 0..4 {
            *action.at_mut(b, pair_index(0, 4, b)) = q(1);
            *action.at_mut(b, pair_index(1, 4, b)) = signs[b].clone();
        }
        PartialActionMap {
            hopf: h,
            algebra: r.total.clone(),
            side: Side::Left,
            action,
        }
    }

    /// Global ℤ/2 swap σ(x) = JxJ⁻¹ on the blocked M₂; permutes the blocks.
    fn swap_action(r: &BlockedAlgebra) -> PartialActionMap {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let mut action = Matrix::zero(Field::Rationals, 4, 8);
        let perm = [3usize, 2, 1, 0];
        for b in 0..4 {
            *action.at_mut(b, pair_index(0, 4, b)) = q(1);
            *action.at_mut(perm[b], pair_index(1, 4, b)) = q(1);
        }
        PartialActionMap {
            hopf: h,
            algebra: r.total.clone(),
            side: Side::Left,
            action,
        }
    }

    /// 𝕜×𝕜 as a block-diagonal 2×2 datum with zero off-diagonal blocks.
    fn k2_blocked() -> BlockedAlgebra {
        let f = Field::Rationals;
        let zero_rect = |r: usize, c: usize| Matrix::zero(f, r, c);
        let one = Matrix::from_rows(f, &[vec![q(1)]]).unwrap();
        let mut theta = Vec::new();
        for i in 0..2usize {
            for j in 0..2usize {
                for k in 0..2usize {
                    if i == j && j == k {
                        theta.push(one.clone());
                    } else {
                        let dij = usize::from(i == j);
                        let djk = usize::from(j == k);
                        let dik = usize::from(i == k);
                        theta.push(zero_rect(dik, dij * djk));
                    }
                }
            }
        }
        let datum = GeneralizedMatrixDatum::new(
            f,
            2,
            vec![1, 0, 0, 1],
            theta,
            vec![vec![q(1)], vec![q(1)]],
        )
        .unwrap();
        assemble(&datum)
    }

    /// ℤ/2 on 𝕜×𝕜 with g·(a,b) = (0,b): the 1_g = 0 action on the first
    /// factor, the trivial action on the second, so 1_g = (0,1).
    fn killing_plus_trivial(r: &BlockedAlgebra) -> PartialActionMap {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let mut action = Matrix::zero(Field::Rationals, 2, 4);
        *action.at_mut(0, pair_index(0, 2, 0)) = q(1);
        *action.at_mut(1, pair_index(0, 2, 1)) = q(1);
        *action.at_mut(1, pair_index(1, 2, 1)) = q(1);
        PartialActionMap {
            hopf: h,
            algebra: r.total.clone(),
            side: Side::Left,
            action,
        }
    }

    /// Global S₃ permutation action on 𝕜³ as a single-block datum.
    fn s3_permutation() -> (BlockedAlgebra, PartialActionMap) {
        let g = GroupTable::symmetric3();
        let h = group_algebra(&g, Field::Rationals);
        let a = diagonal_algebra(3);
        let r = assemble(&GeneralizedMatrixDatum::from_algebra(&a));
        // the lexicographic one-line listing underlying the S₃ table
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        // sanity: the table above must realize the Cayley table
        for (x, px) in perms.iter().enumerate() {
            for (y, py) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..3).map(|k| px[py[k]]).collect();
                let z = g.mul(x, y);
                assert_eq!(composed, perms[z].to_vec(), "perm table mismatch");
            }
        }
        let mut action = Matrix::zero(Field::Rationals, 3, 18);
        for (x, px) in perms.iter().enumerate() {
            for b in 0..3 {
                *action.at_mut(px[b], pair_index(x, 3, b)) = q(1);
            }
        }
        let p = PartialActionMap {
            hopf: h,
            algebra: r.total.clone(),
            side: Side::Left,
            action,
        };
        (r, p)
    }

    /// Sweedler H₄ acting on 𝕜 (single block) with λ(x) = λ(gx) = 1/2.
    fn sweedler_single_block() -> (BlockedAlgebra, PartialActionMap) {
        let h = sweedler_h4(Field::Rationals).unwrap();
        let a = scalar_field_algebra();
        let r = assemble(&GeneralizedMatrixDatum::from_algebra(&a));
        let t = Field::Rationals.from_ratio(1, 2).unwrap();
        let mut action = Matrix::zero(Field::Rationals, 1, 4);
        *action.at_mut(0, 0) = q(1);
        *action.at_mut(0, 2) = t.clone();
        *action.at_mut(0, 3) = t;
        let p = PartialActionMap {
            hopf: h,
            algebra: r.total.clone(),
            side: Side::Left,
            action,
        };
        (r, p)
    }

    #[test]
    fn invariance_trivial_all_true() {
        let r = m2_blocked();
        let p = trivial_left_action(
            &group_algebra(&GroupTable::cyclic(2), Field::Rationals),
            &r.total,
        );
        let table = check_block_invariance(&r, &p).unwrap();
        assert!(table.iter().flatten().all(|&b| b));
    }

    #[test]
    fn invariance_conjugation_true_swap_false() {
        let r = m2_blocked();
        let table = check_block_invariance(&r, &conjugation_action(&r)).unwrap();
        assert!(table.iter().flatten().all(|&b| b));
        // JE₁₂J⁻¹ = E₂₁, so the (0,1) block is not preserved (nor is (0,0))
        let table = check_block_invariance(&r, &swap_action(&r)).unwrap();
        assert!(!table[0][1]);
        assert!(!table[0][0]);
        assert_eq!(
            restrict_blocks(&r, &swap_action(&r)).unwrap_err(),
            GmaPartialError::NotInvariant(0, 0)
        );
    }

    #[test]
    fn restrict_conjugation_blocks() {
        let r = m2_blocked();
        let res = restrict_blocks(&r, &conjugation_action(&r)).unwrap();
        // diagonal restrictions are trivial actions on 𝕜
        for q_i in &res.diag_actions {
            assert_eq!(q_i.algebra.dim, 1);
            assert_eq!(q_i.act_basis_left(1, 0), vec![q(1)]);
        }
        // π₀₁(g) = −id on the one-dimensional block M₀₁
        let pi01 = res.pi[1].as_ref().unwrap();
        assert_eq!(pi01.map.col(1), vec![q(-1)]);
        let gamma01 = res.gamma[1].as_ref().unwrap();
        assert_eq!(gamma01.map.col(1), vec![q(-1)]);
    }

    #[test]
    fn restrict_trivial_gives_counit_scalars() {
        let r = m2_blocked();
        let h = sweedler_h4(Field::Rationals).unwrap();
        let p = trivial_left_action(&h, &r.total);
        let res = restrict_blocks(&r, &p).unwrap();
        for ij in 0..4 {
            let pi = res.pi[ij].as_ref().unwrap();
            for k in 0..4 {
                assert_eq!(pi.map.col(k), vec![h.counit[k].clone()]);
            }
        }
    }

    #[test]
    fn decompose_conjugation_signs() {
        let r = m2_blocked();
        let d = decompose(&r, &conjugation_action(&r)).unwrap();
        // (1₀#g)·m = −m on M₀₁
        let s = d.unit_sharp_left(0, 1);
        assert_eq!(d.left_act(0, 1, &s, &[q(1)]), vec![q(-1)]);
        // m·(g#1₁) = −m
        let s = d.unit_sharp_right(1, 1);
        assert_eq!(d.right_act(0, 1, &[q(1)], &s), vec![q(-1)]);
    }

    #[test]
    fn roundtrip_a_matrix_equality() {
        let r = m2_blocked();
        for p in [
            conjugation_action(&r),
            trivial_left_action(
                &group_algebra(&GroupTable::cyclic(2), Field::Rationals),
                &r.total,
            ),
        ] {
            let d = decompose(&r, &p).unwrap();
            let back = synthesize(&d).unwrap();
            assert_eq!(back.action, p.action);
        }
        let (r, p) = sweedler_single_block();
        let back = synthesize(&decompose(&r, &p).unwrap()).unwrap();
        assert_eq!(back.action, p.action);
    }

    #[test]
    fn roundtrip_b_module_matrices() {
        let r = m2_blocked();
        let p = conjugation_action(&r);
        let d = decompose(&r, &p).unwrap();
        let again = decompose(&assemble(&d.datum), &synthesize(&d).unwrap()).unwrap();
        assert_eq!(again.left_modules, d.left_modules);
        assert_eq!(again.right_modules, d.right_modules);
    }

    #[test]
    fn block_diagonal_partial_synthesis() {
        let r = k2_blocked();
        let p = killing_plus_trivial(&r);
        let d = decompose(&r, &p).unwrap();
        // off-diagonal module data is empty
        assert_eq!(d.left_module(0, 1).rows, 0);
        let back = synthesize(&d).unwrap();
        assert_eq!(back.action, p.action);
        // 1_g = g·1 = (0, 1)
        assert_eq!(
            back.act_left(&back.hopf.alg.basis_vector(1), &back.algebra.unit),
            vec![q(0), q(1)]
        );
    }

    #[test]
    fn c_prime_holds_and_agrees() {
        let r = m2_blocked();
        let d = decompose(&r, &conjugation_action(&r)).unwrap();
        let rep = check_c_prime(&d).unwrap();
        assert!(rep.pass());
        assert!(rep.item("left-right-agreement").unwrap().pass);
        let (r, p) = sweedler_single_block();
        let rep = check_c_prime(&decompose(&r, &p).unwrap()).unwrap();
        assert!(rep.pass());
    }

    #[test]
    fn c_prime_fails_after_sign_flip() {
        let r = m2_blocked();
        let mut d = decompose(&r, &conjugation_action(&r)).unwrap();
        // negate one column of the (0,1) right module
        let rm = &mut d.right_modules[1];
        let flipped: Vec<Scalar> = rm.col(1).iter().map(|c| -c).collect();
        rm.set_col(1, &flipped);
        let rep = check_c_prime(&d).unwrap();
        assert!(!rep.pass());
        let failing = rep
            .items
            .iter()
            .find(|c| c.identity.starts_with("mult-right") && !c.pass)
            .expect("a right multiplicativity failure");
        assert!(!failing.witnesses.is_empty());
    }

    #[test]
    fn remark_rewrites_hold_and_bimodule_probe() {
        // abelian global fixture: rewrites hold and the bimodule probe passes
        let r = m2_blocked();
        let d = decompose(&r, &conjugation_action(&r)).unwrap();
        let rep = check_remark_identities(&d).unwrap();
        assert!(rep.pass());
        assert!(rep
            .items
            .iter()
            .filter(|c| c.identity.starts_with("bimodule"))
            .all(|c| c.pass));

        // noncommutative Hopf algebra: the rewrites still hold but the
        // informational bimodule probe fails, so the report passes anyway
        let (r, p) = s3_permutation();
        let d = decompose(&r, &p).unwrap();
        let rep = check_remark_identities(&d).unwrap();
        assert!(rep.pass());
        let probe = rep.item("bimodule(0,0)").unwrap();
        assert!(!probe.pass);
        assert!(probe.informational);
    }

    #[test]
    fn blocked_datum_rejects_ungraded_algebra() {
        // pretend 𝕜×𝕜 is graded with both basis vectors in diagonal blocks of
        // a 2×2 grid but with the product of a fake off-diagonal pair wrong:
        // grade M₂ by a 2×2 grid where the (0,1) block holds E₂₁ — products
        // then leave the grid
        let a = endomorphism_algebra(Field::Rationals, 2).unwrap();
        let r = BlockedAlgebra {
            total: a,
            n: 2,
            block_dims: vec![1, 1, 1, 1],
            offsets: vec![0, 1, 2, 3],
            block_of_basis: vec![(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)],
        };
        // here basis order E₁₁,E₁₂,E₂₁,E₂₂ matches the grid, so this is fine
        assert!(blocked_datum(&r).is_ok());
        // M₂ on the reordered basis E₁₁,E₂₁,E₁₂,E₂₂, so the declared (0,1)
        // block holds E₂₁ and products leave the grid (E₂₁E₁₂ = E₂₂ lands in
        // (1,1), not (0,0))
        let f = Field::Rationals;
        let mut mult = vec![q(0); 64];
        let mut set = |a: usize, b: usize, c: usize| mult[(a * 4 + b) * 4 + c] = q(1);
        // b0=E₁₁, b1=E₂₁, b2=E₁₂, b3=E₂₂
        set(0, 0, 0);
        set(0, 2, 2);
        set(1, 0, 1);
        set(1, 2, 3);
        set(2, 1, 0);
        set(2, 3, 2);
        set(3, 1, 1);
        set(3, 3, 3);
        let a = FinDimAlgebra::new(f, 4, mult, vec![q(1), q(0), q(0), q(1)]).unwrap();
        let bad = BlockedAlgebra {
            total: a,
            n: 2,
            block_dims: vec![1, 1, 1, 1],
            offsets: vec![0, 1, 2, 3],
            block_of_basis: vec![(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0)],
        };
        assert_eq!(
            blocked_datum(&bad).unwrap_err(),
            GmaPartialError::InvalidInput(String::from(
                "total product is not supported on the block grid"
            ))
        );
    }

    #[test]
    fn morita_ring_rejects_unpreserved_idempotent() {
        // ℤ/2 on 𝕜³ swapping coordinates 1,2 with D_g = 0⊕𝕜², e = (1,1,0)
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let a = diagonal_algebra(3);
        let mut action = Matrix::zero(Field::Rationals, 3, 6);
        for b in 0..3 {
            *action.at_mut(b, pair_index(0, 3, b)) = q(1);
        }
        *action.at_mut(2, pair_index(1, 3, 1)) = q(1);
        *action.at_mut(1, pair_index(1, 3, 2)) = q(1);
        let p = PartialActionMap {
            hopf: h,
            algebra: a,
            side: Side::Left,
            action,
        };
        assert!(check_left_partial_action(&p, true).unwrap().pass());
        let e = vec![q(1), q(1), q(0)];
        assert_eq!(
            morita_ring_action(&p, &e).unwrap_err(),
            GmaPartialError::IdempotentNotPreserved(1)
        );
        // a non-idempotent is rejected before the compatibility scan
        assert_eq!(
            morita_ring_action(&p, &[q(2), q(0), q(0)]).unwrap_err(),
            GmaPartialError::InvalidInput(String::from("e is not idempotent"))
        );
    }

    #[test]
    fn morita_ring_projection_fixture() {
        // ℤ/2 on 𝕜² with g·(a,b) = (a,0): 1_g = (1,0); e = (1,0) satisfies
        // g·e = e = ε(g)e
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let a = diagonal_algebra(2);
        let mut action = Matrix::zero(Field::Rationals, 2, 4);
        *action.at_mut(0, pair_index(0, 2, 0)) = q(1);
        *action.at_mut(1, pair_index(0, 2, 1)) = q(1);
        *action.at_mut(0, pair_index(1, 2, 0)) = q(1);
        let p = PartialActionMap {
            hopf: h,
            algebra: a,
            side: Side::Left,
            action,
        };
        let e = vec![q(1), q(0)];
        let m = morita_ring_action(&p, &e).unwrap();
        // blocks: A (dim 2), Ae, eA, eAe (dim 1 each, A is commutative)
        assert_eq!(m.datum.block_dims, vec![2, 1, 1, 1]);
        // the Morita-ring action decomposes and round-trips
        let d = decompose(&m.blocked, &m.action).unwrap();
        let back = synthesize(&d).unwrap();
        assert_eq!(back.action, m.action.action);
    }

    #[test]
    fn morita_ring_trivial_action() {
        let h = sweedler_h4(Field::Rationals).unwrap();
        let a = diagonal_algebra(2);
        let p = trivial_left_action(&h, &a);
        let m = morita_ring_action(&p, &[q(1), q(0)]).unwrap();
        // the output is ε-trivial on the Morita ring
        let t = trivial_left_action(&h, &m.blocked.total);
        assert_eq!(m.action.action, t.action);
    }
}
