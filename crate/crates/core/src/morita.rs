//! Morita contexts, Morita rings, Morita equivalence of partial actions,
//! and partial (B,H)-modules.
//!
//! A Morita context between algebras `A` and `B` consists of bimodules
//! `M` and `N` with balanced pairings `μ : M⊗N → A` and `ν : N⊗M → B`
//! (named `(τ,σ)` in some sources; we use `(μ,ν)` throughout). The context
//! assembles into a 2×2 generalized matrix algebra, the Morita ring, and
//! two partial actions are Morita equivalent exactly when a partial action
//! on the ring restricts to them on the diagonal corners. The equivalence
//! checker and the block-data characterization are both provided, together
//! with a round trip between them.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::FinDimAlgebra;
use crate::gma::{assemble, block_project, GeneralizedMatrixDatum};
use crate::gma_partial::{check_block_data, check_block_invariance, synthesize, BlockPartialData};
use crate::linalg::{pair_index, Matrix};
use crate::paction::{
    check_left_partial_action, check_right_partial_action, PartialActionMap, Side,
};
use crate::report::{CheckItem, Report};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoritaError {
    Shape(String),
    InvalidInput(String),
    /// A staged certificate failed: `(stage tag, first failing identity)`.
    Stage(String, String),
}

impl core::fmt::Display for MoritaError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MoritaError::Shape(s) => write!(f, "shape mismatch: {s}"),
            MoritaError::InvalidInput(s) => write!(f, "invalid input: {s}"),
            MoritaError::Stage(stage, id) => write!(f, "stage {stage} failed at {id}"),
        }
    }
}

/// A Morita context `(A, B, M, N, μ, ν)` in coordinates.
///
/// All bilinear structure maps use the tensor-column convention of the rest
/// of the crate: the column for the pair `(x, y)` is `pair_index(x, dim_y, y)`
/// with the left tensor factor listed first.
#[derive(Debug, Clone)]
pub struct MoritaContextData {
    pub a: FinDimAlgebra,
    pub b: FinDimAlgebra,
    pub dim_m: usize,
    pub dim_n: usize,
    /// Left `A`-action on `M`: `dim_m × (dim_A·dim_m)`.
    pub m_left: Matrix,
    /// Right `B`-action on `M`: `dim_m × (dim_m·dim_B)`.
    pub m_right: Matrix,
    /// Left `B`-action on `N`: `dim_n × (dim_B·dim_n)`.
    pub n_left: Matrix,
    /// Right `A`-action on `N`: `dim_n × (dim_n·dim_A)`.
    pub n_right: Matrix,
    /// `μ : M⊗N → A`, `dim_A × (dim_m·dim_n)`.
    pub mu: Matrix,
    /// `ν : N⊗M → B`, `dim_B × (dim_n·dim_m)`.
    pub nu: Matrix,
}

fn bilinear(f: Field, map: &Matrix, x: &[Scalar], inner: usize, y: &[Scalar]) -> Vec<Scalar> {
    let mut tensor = vec![f.zero(); x.len() * inner];
    debug_assert_eq!(inner, y.len());
    for (i, ci) in x.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (j, cj) in y.iter().enumerate() {
            tensor[pair_index(i, inner, j)] = ci * cj;
        }
    }
    map.apply(&tensor)
}

impl MoritaContextData {
    fn field(&self) -> Field {
        self.a.field
    }

    fn shapes_ok(&self) -> Result<(), MoritaError> {
        if self.a.field != self.b.field {
            return Err(MoritaError::Shape(String::from("mixed fields")));
        }
        let (da, db, dm, dn) = (self.a.dim, self.b.dim, self.dim_m, self.dim_n);
        let want = [
            ("m_left", &self.m_left, dm, da * dm),
            ("m_right", &self.m_right, dm, dm * db),
            ("n_left", &self.n_left, dn, db * dn),
            ("n_right", &self.n_right, dn, dn * da),
            ("mu", &self.mu, da, dm * dn),
            ("nu", &self.nu, db, dn * dm),
        ];
        for (name, m, r, c) in want {
            if m.rows != r || m.cols != c {
                return Err(MoritaError::Shape(format!(
                    "{name} is {}×{}, expected {r}×{c}",
                    m.rows, m.cols
                )));
            }
        }
        Ok(())
    }

    pub fn am(&self, a: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.m_left, a, self.dim_m, m)
    }
    pub fn mb(&self, m: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.m_right, m, self.b.dim, b)
    }
    pub fn bn(&self, b: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.n_left, b, self.dim_n, n)
    }
    pub fn na(&self, n: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.n_right, n, self.a.dim, a)
    }
    pub fn pair_mn(&self, m: &[Scalar], n: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.mu, m, self.dim_n, n)
    }
    pub fn pair_nm(&self, n: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        bilinear(self.field(), &self.nu, n, self.dim_m, m)
    }
}

/// The Morita ring of a context as a 2×2 generalized matrix datum with
/// blocks `(A, M; N, B)`.
pub fn morita_ring(c: &MoritaContextData) -> Result<GeneralizedMatrixDatum, MoritaError> {
    c.shapes_ok()?;
    let theta = vec![
        c.a.mult_matrix(),  // (0,0,0) A·A → A
        c.m_left.clone(),   // (0,0,1) A·M → M
        c.mu.clone(),       // (0,1,0) M·N → A
        c.m_right.clone(),  // (0,1,1) M·B → M
        c.n_right.clone(),  // (1,0,0) N·A → N
        c.nu.clone(),       // (1,0,1) N·M → B
        c.n_left.clone(),   // (1,1,0) B·N → N
        c.b.mult_matrix(),  // (1,1,1) B·B → B
    ];
    GeneralizedMatrixDatum::new(
        c.field(),
        2,
        vec![c.a.dim, c.dim_m, c.dim_n, c.b.dim],
        theta,
        vec![c.a.unit.clone(), c.b.unit.clone()],
    )
    .map_err(|e| MoritaError::InvalidInput(format!("{e}")))
}

fn basis(f: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); dim];
    v[i] = f.one();
    v
}

/// Verifies bimodule and pairing axioms of a Morita context; with `strict`,
/// also the surjectivity of both pairings. The Morita ring is assembled and
/// its datum certificate absorbed under the prefix `ring:`.
pub fn check_morita_context(c: &MoritaContextData, strict: bool) -> Result<Report, MoritaError> {
    c.shapes_ok()?;
    let f = c.field();
    let (da, db, dm, dn) = (c.a.dim, c.b.dim, c.dim_m, c.dim_n);
    let mut report = Report::new();

    let em = |i: usize| basis(f, dm, i);
    let en = |i: usize| basis(f, dn, i);

    // bimodule axioms for M
    let mut unital = CheckItem::new("m-unital");
    for m in 0..dm {
        unital.check(c.am(&c.a.unit, &em(m)) == em(m), &[m, 0]);
        unital.check(c.mb(&em(m), &c.b.unit) == em(m), &[m, 1]);
    }
    report.push(unital);
    let mut assoc = CheckItem::new("m-associative");
    for m in 0..dm {
        for x in 0..da {
            for y in 0..da {
                let lhs = c.am(&c.a.basis_product(x, y), &em(m));
                let rhs = c.am(&c.a.basis_vector(x), &c.am(&c.a.basis_vector(y), &em(m)));
                assoc.check(lhs == rhs, &[0, x, y, m]);
            }
        }
        for x in 0..db {
            for y in 0..db {
                let lhs = c.mb(&em(m), &c.b.basis_product(x, y));
                let rhs = c.mb(&c.mb(&em(m), &c.b.basis_vector(x)), &c.b.basis_vector(y));
                assoc.check(lhs == rhs, &[1, x, y, m]);
            }
        }
        for x in 0..da {
            for y in 0..db {
                let lhs = c.mb(&c.am(&c.a.basis_vector(x), &em(m)), &c.b.basis_vector(y));
                let rhs = c.am(&c.a.basis_vector(x), &c.mb(&em(m), &c.b.basis_vector(y)));
                assoc.check(lhs == rhs, &[2, x, y, m]);
            }
        }
    }
    report.push(assoc);

    // bimodule axioms for N
    let mut unital_n = CheckItem::new("n-unital");
    for n in 0..dn {
        unital_n.check(c.bn(&c.b.unit, &en(n)) == en(n), &[n, 0]);
        unital_n.check(c.na(&en(n), &c.a.unit) == en(n), &[n, 1]);
    }
    report.push(unital_n);
    let mut assoc_n = CheckItem::new("n-associative");
    for n in 0..dn {
        for x in 0..db {
            for y in 0..db {
                let lhs = c.bn(&c.b.basis_product(x, y), &en(n));
                let rhs = c.bn(&c.b.basis_vector(x), &c.bn(&c.b.basis_vector(y), &en(n)));
                assoc_n.check(lhs == rhs, &[0, x, y, n]);
            }
        }
        for x in 0..da {
            for y in 0..da {
                let lhs = c.na(&en(n), &c.a.basis_product(x, y));
                let rhs = c.na(&c.na(&en(n), &c.a.basis_vector(x)), &c.a.basis_vector(y));
                assoc_n.check(lhs == rhs, &[1, x, y, n]);
            }
        }
        for x in 0..db {
            for y in 0..da {
                let lhs = c.na(&c.bn(&c.b.basis_vector(x), &en(n)), &c.a.basis_vector(y));
                let rhs = c.bn(&c.b.basis_vector(x), &c.na(&en(n), &c.a.basis_vector(y)));
                assoc_n.check(lhs == rhs, &[2, x, y, n]);
            }
        }
    }
    report.push(assoc_n);

    // balanced pairings that are bimodule morphisms
    let mut mu_bal = CheckItem::new("mu-balanced");
    let mut mu_mor = CheckItem::new("mu-bimodule");
    for m in 0..dm {
        for n in 0..dn {
            for x in 0..db {
                let lhs = c.pair_mn(&c.mb(&em(m), &c.b.basis_vector(x)), &en(n));
                let rhs = c.pair_mn(&em(m), &c.bn(&c.b.basis_vector(x), &en(n)));
                mu_bal.check(lhs == rhs, &[m, x, n]);
            }
            for x in 0..da {
                let ax = c.a.basis_vector(x);
                let lhs = c.pair_mn(&c.am(&ax, &em(m)), &en(n));
                let rhs = c.a.multiply(&ax, &c.pair_mn(&em(m), &en(n)));
                mu_mor.check(lhs == rhs, &[0, x, m, n]);
                let lhs = c.pair_mn(&em(m), &c.na(&en(n), &ax));
                let rhs = c.a.multiply(&c.pair_mn(&em(m), &en(n)), &ax);
                mu_mor.check(lhs == rhs, &[1, x, m, n]);
            }
        }
    }
    report.push(mu_bal);
    report.push(mu_mor);
    let mut nu_bal = CheckItem::new("nu-balanced");
    let mut nu_mor = CheckItem::new("nu-bimodule");
    for n in 0..dn {
        for m in 0..dm {
            for x in 0..da {
                let lhs = c.pair_nm(&c.na(&en(n), &c.a.basis_vector(x)), &em(m));
                let rhs = c.pair_nm(&en(n), &c.am(&c.a.basis_vector(x), &em(m)));
                nu_bal.check(lhs == rhs, &[n, x, m]);
            }
            for x in 0..db {
                let bx = c.b.basis_vector(x);
                let lhs = c.pair_nm(&c.bn(&bx, &en(n)), &em(m));
                let rhs = c.b.multiply(&bx, &c.pair_nm(&en(n), &em(m)));
                nu_mor.check(lhs == rhs, &[0, x, n, m]);
                let lhs = c.pair_nm(&en(n), &c.mb(&em(m), &bx));
                let rhs = c.b.multiply(&c.pair_nm(&en(n), &em(m)), &bx);
                nu_mor.check(lhs == rhs, &[1, x, n, m]);
            }
        }
    }
    report.push(nu_bal);
    report.push(nu_mor);

    // the two associativity compatibilities
    let mut compat = CheckItem::new("pairing-compatibility");
    for m in 0..dm {
        for n in 0..dn {
            for m2 in 0..dm {
                let lhs = c.am(&c.pair_mn(&em(m), &en(n)), &em(m2));
                let rhs = c.mb(&em(m), &c.pair_nm(&en(n), &em(m2)));
                compat.check(lhs == rhs, &[0, m, n, m2]);
            }
            for n2 in 0..dn {
                let lhs = c.bn(&c.pair_nm(&en(n), &em(m)), &en(n2));
                let rhs = c.na(&en(n), &c.pair_mn(&em(m), &en(n2)));
                compat.check(lhs == rhs, &[1, n, m, n2]);
            }
        }
    }
    report.push(compat);

    if strict {
        let mut mu_s = CheckItem::new("mu-surjective");
        mu_s.check(c.mu.rank() == da, &[]);
        report.push(mu_s);
        let mut nu_s = CheckItem::new("nu-surjective");
        nu_s.check(c.nu.rank() == db, &[]);
        report.push(nu_s);
    }

    let datum = morita_ring(c)?;
    report.absorb("ring:", crate::gma::check_datum(&datum));
    Ok(report)
}

fn same_hopf(x: &crate::hopf::HopfAlgebraData, y: &crate::hopf::HopfAlgebraData) -> bool {
    x.alg.mult_matrix() == y.alg.mult_matrix()
        && x.alg.unit == y.alg.unit
        && x.comult == y.comult
        && x.counit == y.counit
        && x.antipode == y.antipode
}

/// Restriction of a block-invariant ring action to a diagonal block, as a
/// partial action map on that block algebra.
fn restrict_diagonal(
    r: &crate::gma::BlockedAlgebra,
    pr: &PartialActionMap,
    i: usize,
) -> PartialActionMap {
    let d = r.dim_of(i, i);
    let f = pr.algebra.field;
    let dim_h = pr.hopf.dim();
    let mut action = Matrix::zero(f, d, dim_h * d);
    for h in 0..dim_h {
        for s in 0..d {
            let img = pr.act_basis_left(h, r.offset(i, i) + s);
            action.set_col(pair_index(h, d, s), &block_project(r, i, i, &img));
        }
    }
    PartialActionMap {
        hopf: pr.hopf.clone(),
        algebra: r.total.clone(), // replaced below
        side: Side::Left,
        action,
    }
}

/// Checks that the partial actions `pa` on `A` and `pb` on `B` are Morita
/// equivalent via the context `c` and the partial action `pr` on its Morita
/// ring: all components are validated, the diagonal corners must be
/// invariant, and the diagonal restrictions of `pr` must equal `pa` and `pb`
/// on the nose. Off-diagonal invariance is reported informationally.
pub fn check_morita_equivalent(
    pa: &PartialActionMap,
    pb: &PartialActionMap,
    c: &MoritaContextData,
    pr: &PartialActionMap,
) -> Result<Report, MoritaError> {
    if pa.side != Side::Left || pb.side != Side::Left || pr.side != Side::Left {
        return Err(MoritaError::InvalidInput(String::from(
            "all actions must be left actions",
        )));
    }
    if !same_hopf(&pa.hopf, &pr.hopf) || !same_hopf(&pb.hopf, &pr.hopf) {
        return Err(MoritaError::Shape(String::from("Hopf algebra mismatch")));
    }
    if pa.algebra.dim != c.a.dim || pa.algebra.mult_matrix() != c.a.mult_matrix() {
        return Err(MoritaError::Shape(String::from("pa does not act on A")));
    }
    if pb.algebra.dim != c.b.dim || pb.algebra.mult_matrix() != c.b.mult_matrix() {
        return Err(MoritaError::Shape(String::from("pb does not act on B")));
    }
    let datum = morita_ring(c)?;
    let r = assemble(&datum);
    if pr.algebra.dim != r.total.dim
        || pr.algebra.mult_matrix() != r.total.mult_matrix()
        || pr.algebra.unit != r.total.unit
    {
        return Err(MoritaError::Shape(String::from(
            "pr does not act on the Morita ring of the context",
        )));
    }

    let mut report = Report::new();
    report.absorb(
        "context:",
        check_morita_context(c, true)?,
    );
    let chk = |p: &PartialActionMap, tag: &str| -> Result<Report, MoritaError> {
        check_left_partial_action(p, false)
            .map_err(|e| MoritaError::Stage(String::from(tag), format!("{e}")))
    };
    report.absorb("a:", chk(pa, "a")?);
    report.absorb("b:", chk(pb, "b")?);
    report.absorb("ring:", chk(pr, "ring")?);
    if !report.pass() {
        return Ok(report);
    }

    let inv = check_block_invariance(&r, pr)
        .map_err(|e| MoritaError::Stage(String::from("invariance"), format!("{e}")))?;
    let mut diag = CheckItem::new("diagonal-invariance");
    diag.check(inv[0][0], &[0]);
    diag.check(inv[1][1], &[1]);
    report.push(diag);
    let mut off = CheckItem::informational("off-diagonal-invariance");
    off.check(inv[0][1], &[0, 1]);
    off.check(inv[1][0], &[1, 0]);
    report.push(off);
    if !report.pass() {
        return Ok(report);
    }

    let mut ra = restrict_diagonal(&r, pr, 0);
    ra.algebra = pa.algebra.clone();
    let mut rb = restrict_diagonal(&r, pr, 1);
    rb.algebra = pb.algebra.clone();
    let mut rest_a = CheckItem::new("restriction-a");
    for col in 0..ra.action.cols {
        rest_a.check(ra.action.col(col) == pa.action.col(col), &[0, col]);
    }
    report.push(rest_a);
    let mut rest_b = CheckItem::new("restriction-b");
    for col in 0..rb.action.cols {
        rest_b.check(rb.action.col(col) == pb.action.col(col), &[1, col]);
    }
    report.push(rest_b);
    Ok(report)
}

/// The block-data characterization of Morita equivalence: checks that the
/// 2-block data sits over the Morita ring of `c`, that its diagonal actions
/// are exactly `pa` and `pb`, that the module compatibility identities of
/// the characterization hold for `M` and `N`, and finally that the
/// synthesized ring action realizes the equivalence.
pub fn prop_morita_characterization(
    pa: &PartialActionMap,
    pb: &PartialActionMap,
    c: &MoritaContextData,
    data: &BlockPartialData,
) -> Result<Report, MoritaError> {
    let datum = morita_ring(c)?;
    if data.datum.n != 2
        || data.datum.block_dims != datum.block_dims
        || data.datum.theta != datum.theta
        || data.datum.eta != datum.eta
    {
        return Err(MoritaError::Shape(String::from(
            "block data is not over the Morita ring of the context",
        )));
    }
    if !same_hopf(&data.hopf, &pa.hopf) || !same_hopf(&data.hopf, &pb.hopf) {
        return Err(MoritaError::Shape(String::from("Hopf algebra mismatch")));
    }

    let mut report = Report::new();
    report.absorb("context:", check_morita_context(c, true)?);
    let mut diag_a = CheckItem::new("diagonal-action-a");
    diag_a.check(data.diag_actions[0].action == pa.action, &[0]);
    report.push(diag_a);
    let mut diag_b = CheckItem::new("diagonal-action-b");
    diag_b.check(data.diag_actions[1].action == pb.action, &[1]);
    report.push(diag_b);

    report.absorb(
        "block:",
        check_block_data(data)
            .map_err(|e| MoritaError::Stage(String::from("block"), format!("{e}")))?,
    );

    // the displayed identities for M (block (0,1)) and N (block (1,0))
    let f = datum.field;
    let dim_h = data.hopf.dim();
    let mut m_compat = CheckItem::new("m-compatibility");
    for h in 0..dim_h {
        let sl = data.unit_sharp_left(0, h);
        let sr = data.unit_sharp_right(1, h);
        for m in 0..c.dim_m {
            let em = basis(f, c.dim_m, m);
            let lhs = data.left_act(0, 1, &sl, &em);
            let rhs = data.right_act(0, 1, &em, &sr);
            m_compat.check(lhs == rhs, &[h, m]);
        }
    }
    report.push(m_compat);
    let mut n_compat = CheckItem::new("n-compatibility");
    for h in 0..dim_h {
        let sl = data.unit_sharp_left(1, h);
        let sr = data.unit_sharp_right(0, h);
        for n in 0..c.dim_n {
            let en = basis(f, c.dim_n, n);
            let lhs = data.left_act(1, 0, &sl, &en);
            let rhs = data.right_act(1, 0, &en, &sr);
            n_compat.check(lhs == rhs, &[h, n]);
        }
    }
    report.push(n_compat);

    if !report.pass() {
        // synthesis is refused on invalid data
        return Ok(report);
    }
    let pr = synthesize(data)
        .map_err(|e| MoritaError::Stage(String::from("synthesis"), format!("{e}")))?;
    report.absorb("equivalence:", check_morita_equivalent(pa, pb, c, &pr)?);
    Ok(report)
}

/// Verifies the right partial `(B,H)`-module axioms for a space `N`:
/// `n·1_H = n` and `((nk)b)h = (n(kh₁))(b·h₂)`.
///
/// The action of `H` on `B` is required to be a RIGHT partial action: the
/// compatibility axiom only type-checks on that side.
pub fn check_partial_bh_module(
    dim_n: usize,
    b_module: &Matrix,
    h_map: &Matrix,
    b_action: &PartialActionMap,
) -> Result<Report, MoritaError> {
    if b_action.side != Side::Right {
        return Err(MoritaError::InvalidInput(String::from(
            "the partial action on B must be a right action",
        )));
    }
    let f = b_action.algebra.field;
    let db = b_action.algebra.dim;
    let dh = b_action.hopf.dim();
    if b_module.rows != dim_n || b_module.cols != dim_n * db {
        return Err(MoritaError::Shape(format!(
            "b_module is {}×{}, expected {dim_n}×{}",
            b_module.rows,
            b_module.cols,
            dim_n * db
        )));
    }
    if h_map.rows != dim_n || h_map.cols != dim_n * dh {
        return Err(MoritaError::Shape(format!(
            "h_map is {}×{}, expected {dim_n}×{}",
            h_map.rows,
            h_map.cols,
            dim_n * dh
        )));
    }

    let mut report = Report::new();
    report.absorb(
        "action:",
        check_right_partial_action(b_action)
            .map_err(|e| MoritaError::Stage(String::from("action"), format!("{e}")))?,
    );

    let nb = |n: &[Scalar], b: &[Scalar]| bilinear(f, b_module, n, db, b);
    let nh = |n: &[Scalar], h: &[Scalar]| bilinear(f, h_map, n, dh, h);
    let en = |i: usize| basis(f, dim_n, i);

    // B-module axioms
    let mut unital = CheckItem::new("module-unital");
    for n in 0..dim_n {
        unital.check(nb(&en(n), &b_action.algebra.unit) == en(n), &[n]);
    }
    report.push(unital);
    let mut assoc = CheckItem::new("module-associative");
    for n in 0..dim_n {
        for x in 0..db {
            for y in 0..db {
                let lhs = nb(&en(n), &b_action.algebra.basis_product(x, y));
                let rhs = nb(
                    &nb(&en(n), &b_action.algebra.basis_vector(x)),
                    &b_action.algebra.basis_vector(y),
                );
                assoc.check(lhs == rhs, &[n, x, y]);
            }
        }
    }
    report.push(assoc);

    // (i): n·1_H = n
    let mut unit_h = CheckItem::new("h-unital");
    for n in 0..dim_n {
        unit_h.check(nh(&en(n), &b_action.hopf.alg.unit) == en(n), &[n]);
    }
    report.push(unit_h);

    // (ii): ((nk)b)h = (n(kh₁))(b·h₂)
    let mut compat = CheckItem::new("h-compatibility");
    for n in 0..dim_n {
        for k in 0..dh {
            let ek = basis(f, dh, k);
            let nk = nh(&en(n), &ek);
            for b in 0..db {
                let eb = basis(f, db, b);
                let nkb = nb(&nk, &eb);
                for h in 0..dh {
                    let eh = basis(f, dh, h);
                    let lhs = nh(&nkb, &eh);
                    let mut rhs = vec![f.zero(); dim_n];
                    for (h1, h2, coeff) in b_action.hopf.comult_terms(h) {
                        let kh1 = b_action.hopf.alg.basis_product(k, h1);
                        let left = nh(&en(n), &kh1);
                        let bh2 = b_action.act_basis_right(b, h2);
                        let term = nb(&left, &bh2);
                        for (u, t) in term.iter().enumerate() {
                            rhs[u] = &rhs[u] + &(&coeff * t);
                        }
                    }
                    compat.check(lhs == rhs, &[n, k, b, h]);
                }
            }
        }
    }
    report.push(compat);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::endomorphism_algebra;
    use crate::gma_partial::decompose;
    use crate::hopf::{group_algebra, GroupTable};
    use crate::paction::{to_right, trivial_left_action};

    fn q(n: i64) -> Scalar {
        Field::Rationals.from_i64(n)
    }

    fn scalar_field_algebra() -> FinDimAlgebra {
        FinDimAlgebra::new(Field::Rationals, 1, vec![q(1)], vec![q(1)]).unwrap()
    }

    fn diagonal_algebra(m: usize) -> FinDimAlgebra {
        let f = Field::Rationals;
        let mut mult = vec![q(0); m * m * m];
        for i in 0..m {
            mult[(i * m + i) * m + i] = q(1);
        }
        FinDimAlgebra::new(f, m, mult, vec![q(1); m]).unwrap()
    }

    /// A = B = M = N = 𝕜 with multiplication pairings.
    fn trivial_context() -> MoritaContextData {
        let one = Matrix::from_rows(Field::Rationals, &[vec![q(1)]]).unwrap();
        MoritaContextData {
            a: scalar_field_algebra(),
            b: scalar_field_algebra(),
            dim_m: 1,
            dim_n: 1,
            m_left: one.clone(),
            m_right: one.clone(),
            n_left: one.clone(),
            n_right: one.clone(),
            mu: one.clone(),
            nu: one,
        }
    }

    /// A = M₂(𝕜), B = 𝕜, M = columns, N = rows, outer/inner pairings.
    fn column_row_context() -> MoritaContextData {
        let f = Field::Rationals;
        let a = endomorphism_algebra(f, 2).unwrap();
        // E_st · e_u = δ_tu e_s
        let mut m_left = Matrix::zero(f, 2, 8);
        // v_u · E_st = δ_us v_t
        let mut n_right = Matrix::zero(f, 2, 8);
        for s in 0..2 {
            for t in 0..2 {
                let e = s * 2 + t;
                *m_left.at_mut(s, pair_index(e, 2, t)) = q(1);
                *n_right.at_mut(t, pair_index(s, 4, e)) = q(1);
            }
        }
        // μ(e_u ⊗ v_t) = E_ut, ν(v_t ⊗ e_u) = δ_tu
        let mut mu = Matrix::zero(f, 4, 4);
        let mut nu = Matrix::zero(f, 1, 4);
        for u in 0..2 {
            for t in 0..2 {
                *mu.at_mut(u * 2 + t, pair_index(u, 2, t)) = q(1);
            }
            *nu.at_mut(0, pair_index(u, 2, u)) = q(1);
        }
        MoritaContextData {
            a,
            b: scalar_field_algebra(),
            dim_m: 2,
            dim_n: 2,
            m_left,
            m_right: Matrix::identity(f, 2),
            n_left: Matrix::identity(f, 2),
            n_right,
            mu,
            nu,
        }
    }

    /// ℤ/2 conjugation by diag(1,−1) on the trivial context's Morita ring,
    /// whose basis order is A, M, N, B ≙ E₁₁, E₁₂, E₂₁, E₂₂.
    fn sign_ring_action() -> PartialActionMap {
        let c = trivial_context();
        let r = assemble(&morita_ring(&c).unwrap());
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

    /// ℤ/2 acting on 𝕜 with 1_σ = 0.
    fn killing_scalar_action() -> PartialActionMap {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let mut action = Matrix::zero(Field::Rationals, 1, 2);
        *action.at_mut(0, pair_index(0, 1, 0)) = q(1);
        PartialActionMap {
            hopf: h,
            algebra: scalar_field_algebra(),
            side: Side::Left,
            action,
        }
    }

    /// ℤ/2 on 𝕜×𝕜 with g·(a,b) = (0,b).
    fn killing_plus_trivial() -> PartialActionMap {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let a = diagonal_algebra(2);
        let mut action = Matrix::zero(Field::Rationals, 2, 4);
        *action.at_mut(0, pair_index(0, 2, 0)) = q(1);
        *action.at_mut(1, pair_index(0, 2, 1)) = q(1);
        *action.at_mut(1, pair_index(1, 2, 1)) = q(1);
        PartialActionMap {
            hopf: h,
            algebra: a,
            side: Side::Left,
            action,
        }
    }

    #[test]
    fn trivial_context_gives_m2() {
        let c = trivial_context();
        let rep = check_morita_context(&c, true).unwrap();
        assert!(rep.pass(), "failed at {:?}", rep.first_failure());
        let r = assemble(&morita_ring(&c).unwrap());
        let m2 = endomorphism_algebra(Field::Rationals, 2).unwrap();
        assert_eq!(r.total.mult_matrix(), m2.mult_matrix());
        assert_eq!(r.total.unit, m2.unit);
    }

    #[test]
    fn zero_pairing_fails_strictness() {
        let mut c = trivial_context();
        c.mu = Matrix::zero(Field::Rationals, 1, 1);
        let rep = check_morita_context(&c, true).unwrap();
        assert!(!rep.pass());
        assert!(!rep.item("mu-surjective").unwrap().pass);
        assert!(!rep.item("pairing-compatibility").unwrap().pass);
    }

    #[test]
    fn column_row_context_gives_m3_dimensions() {
        let c = column_row_context();
        let rep = check_morita_context(&c, true).unwrap();
        assert!(rep.pass(), "failed at {:?}", rep.first_failure());
        let r = assemble(&morita_ring(&c).unwrap());
        assert_eq!(r.total.dim, 9);
    }

    #[test]
    fn sign_action_is_a_morita_equivalence_of_trivial_actions() {
        let c = trivial_context();
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let pa = trivial_left_action(&h, &c.a);
        let pb = trivial_left_action(&h, &c.b);
        let pr = sign_ring_action();
        let rep = check_morita_equivalent(&pa, &pb, &c, &pr).unwrap();
        assert!(rep.pass(), "failed at {:?}", rep.first_failure());
    }

    #[test]
    fn restriction_mismatch_is_reported() {
        let c = trivial_context();
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let pa = trivial_left_action(&h, &c.a);
        let pb = killing_scalar_action();
        let pr = sign_ring_action();
        let rep = check_morita_equivalent(&pa, &pb, &c, &pr).unwrap();
        assert!(!rep.pass());
        assert!(rep.item("restriction-a").unwrap().pass);
        let item = rep.item("restriction-b").unwrap();
        assert!(!item.pass);
        assert!(!item.witnesses.is_empty());
    }

    #[test]
    fn characterization_passes_on_the_sign_fixture() {
        let c = trivial_context();
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let pa = trivial_left_action(&h, &c.a);
        let pb = trivial_left_action(&h, &c.b);
        let pr = sign_ring_action();
        let r = assemble(&morita_ring(&c).unwrap());
        let data = decompose(&r, &pr).unwrap();
        let rep = prop_morita_characterization(&pa, &pb, &c, &data).unwrap();
        assert!(rep.pass(), "failed at {:?}", rep.first_failure());
        // the synthesized ring action is exactly the sign action
        let back = synthesize(&data).unwrap();
        assert_eq!(back.action, pr.action);
    }

    #[test]
    fn module_sign_flip_refuses_synthesis() {
        let c = trivial_context();
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let pa = trivial_left_action(&h, &c.a);
        let pb = trivial_left_action(&h, &c.b);
        let pr = sign_ring_action();
        let r = assemble(&morita_ring(&c).unwrap());
        let mut data = decompose(&r, &pr).unwrap();
        // negate the left module on the M block
        let flipped: Vec<Scalar> = data.left_modules[1]
            .entries
            .iter()
            .map(|x| &q(0) - x)
            .collect();
        data.left_modules[1].entries = flipped;
        let rep = prop_morita_characterization(&pa, &pb, &c, &data).unwrap();
        assert!(!rep.pass());
        assert!(!rep.item("m-compatibility").unwrap().pass);
        // no synthesized-equivalence items were produced
        assert!(rep.item("equivalence:restriction-a").is_none());
    }

    #[test]
    fn bh_module_for_the_action_itself() {
        let p = killing_plus_trivial();
        let rp = to_right(&p).unwrap();
        let b_module = rp.algebra.mult_matrix();
        let rep = check_partial_bh_module(2, &b_module, &rp.action, &rp).unwrap();
        assert!(rep.pass(), "failed at {:?}", rep.first_failure());
    }

    #[test]
    fn bh_module_trivial_h_map_over_global_action() {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let p = trivial_left_action(&h, &scalar_field_algebra());
        let rp = to_right(&p).unwrap();
        let b_module = rp.algebra.mult_matrix();
        let mut h_map = Matrix::zero(Field::Rationals, 1, 2);
        for g in 0..2 {
            *h_map.at_mut(0, pair_index(0, 2, g)) = q(1);
        }
        let rep = check_partial_bh_module(1, &b_module, &h_map, &rp).unwrap();
        assert!(rep.pass(), "failed at {:?}", rep.first_failure());
    }

    #[test]
    fn bh_module_trivial_h_map_over_partial_action_fails() {
        let p = killing_plus_trivial();
        let rp = to_right(&p).unwrap();
        let b_module = rp.algebra.mult_matrix();
        // nh = ε(h)n ignores the 1_g factor that the axiom requires
        let mut h_map = Matrix::zero(Field::Rationals, 2, 4);
        for n in 0..2 {
            for g in 0..2 {
                *h_map.at_mut(n, pair_index(n, 2, g)) = q(1);
            }
        }
        let rep = check_partial_bh_module(2, &b_module, &h_map, &rp).unwrap();
        assert!(!rep.pass());
        let item = rep.item("h-compatibility").unwrap();
        assert!(!item.pass);
        assert!(!item.witnesses.is_empty());
    }
}
