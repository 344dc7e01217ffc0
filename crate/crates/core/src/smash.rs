//! Partial smash products as concrete subalgebras of the ambient tensor
//! space, covariant and opposite covariant pairs, the universal morphisms,
//! and partial crossed products with the isomorphisms between them.
//!
//! Left smash lives in `A⊗H` (index `a·dimH + h`), right smash in `H⊗A`
//! (index `h·dimA + a`). The smash subspace is kept as a canonical echelon
//! basis plus the pivot-extraction projector onto it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{check_algebra, check_algebra_morphism, opposite, FinDimAlgebra, LinearMap};
use crate::hopf::{variants, GroupTable, HopfVariant};
use crate::linalg::{pair_index, solve_linear, Matrix, Subspace};
use crate::paction::{
    check_group_action, check_left_partial_action, check_partial_representation,
    check_right_partial_action, group_to_hopf, to_right, PartialActionMap,
    PartialRepresentation, Side, UnitalPartialGroupAction,
};
use crate::report::{CheckItem, Report};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmashError {
    /// The defining action or pair fails its own checker.
    CheckFailed(String),
    /// A product of generators left the generated subspace.
    ClosureFailure(usize, usize),
    /// A map prescribed on generators has no consistent linear extension.
    IllDefined,
    /// An identity that must hold on valid input failed (kernel bug).
    InternalInconsistency(String),
    Shape(String),
}

impl core::fmt::Display for SmashError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SmashError::CheckFailed(s) => write!(f, "input check failed: {s}"),
            SmashError::ClosureFailure(s, t) => {
                write!(f, "generator product ({s},{t}) leaves the smash subspace")
            }
            SmashError::IllDefined => write!(f, "map is not well defined on generators"),
            SmashError::InternalInconsistency(s) => write!(f, "internal inconsistency: {s}"),
            SmashError::Shape(s) => write!(f, "shape mismatch: {s}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmashSide {
    Left,
    Right,
}

/// A partial smash product: the subspace of the ambient tensor space spanned
/// by the sharp generators, with the induced algebra structure on its
/// canonical basis.
#[derive(Debug, Clone)]
pub struct SmashAlgebra {
    pub action: PartialActionMap,
    pub side: SmashSide,
    pub ambient_dim: usize,
    pub subspace: Subspace,
    /// Idempotent `ambient × ambient` matrix with image the smash subspace.
    pub projector: Matrix,
    /// The induced algebra on the canonical basis coordinates.
    pub algebra: FinDimAlgebra,
    /// Columns are the canonical-basis coordinates of the sharp generators;
    /// column index `pair_index(a, dimH, h)` (left) or `pair_index(h, dimA, a)`
    /// (right).
    pub sharp: Matrix,
}

/// Ambient product on `A⊗H`: `(a⊗h)(b⊗k) = a(h₍₁₎·b) ⊗ h₍₂₎k`.
pub fn left_ambient_product(p: &PartialActionMap, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let f = p.algebra.field;
    let mut out = vec![f.zero(); da * dh];
    for (i1, c1) in x.iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        let (a, h) = (i1 / dh, i1 % dh);
        for (i2, c2) in y.iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            let (b, k) = (i2 / dh, i2 % dh);
            let c12 = c1 * c2;
            for (h1, h2, c) in p.hopf.comult_terms(h) {
                let av = p.algebra.multiply(&p.algebra.basis_vector(a), &p.act_basis_left(h1, b));
                let hv = p.hopf.alg.basis_product(h2, k);
                let coeff = &c12 * &c;
                for (ai, ac) in av.iter().enumerate() {
                    if ac.is_zero() {
                        continue;
                    }
                    for (hi, hc) in hv.iter().enumerate() {
                        if hc.is_zero() {
                            continue;
                        }
                        let idx = pair_index(ai, dh, hi);
                        out[idx] = &out[idx] + &(&(&coeff * ac) * hc);
                    }
                }
            }
        }
    }
    out
}

/// Ambient product on `H⊗A`: `(k⊗b)(h⊗a) = kh₍₁₎ ⊗ (b·h₍₂₎)a`.
pub fn right_ambient_product(p: &PartialActionMap, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let f = p.algebra.field;
    let mut out = vec![f.zero(); dh * da];
    for (i1, c1) in x.iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        let (k, b) = (i1 / da, i1 % da);
        for (i2, c2) in y.iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            let (h, a) = (i2 / da, i2 % da);
            let c12 = c1 * c2;
            for (h1, h2, c) in p.hopf.comult_terms(h) {
                let hv = p.hopf.alg.basis_product(k, h1);
                let av = p.algebra.multiply(&p.act_basis_right(b, h2), &p.algebra.basis_vector(a));
                let coeff = &c12 * &c;
                for (hi, hc) in hv.iter().enumerate() {
                    if hc.is_zero() {
                        continue;
                    }
                    for (ai, ac) in av.iter().enumerate() {
                        if ac.is_zero() {
                            continue;
                        }
                        let idx = pair_index(hi, da, ai);
                        out[idx] = &out[idx] + &(&(&coeff * hc) * ac);
                    }
                }
            }
        }
    }
    out
}

/// `a#h = a(h₍₁₎·1_A) ⊗ h₍₂₎` extended bilinearly, as an ambient vector.
pub fn left_sharp_vector(p: &PartialActionMap, av: &[Scalar], hv: &[Scalar]) -> Vec<Scalar> {
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let f = p.algebra.field;
    let mut out = vec![f.zero(); da * dh];
    for (h, ch) in hv.iter().enumerate() {
        if ch.is_zero() {
            continue;
        }
        for (h1, h2, c) in p.hopf.comult_terms(h) {
            let left = p.algebra.multiply(av, &p.act_left(&p.hopf.alg.basis_vector(h1), &p.algebra.unit));
            let coeff = ch * &c;
            for (ai, ac) in left.iter().enumerate() {
                if ac.is_zero() {
                    continue;
                }
                let idx = pair_index(ai, dh, h2);
                out[idx] = &out[idx] + &(&coeff * ac);
            }
        }
    }
    out
}

/// `h#a = h₍₁₎ ⊗ (1_A·h₍₂₎)a` extended bilinearly, as an ambient vector.
pub fn right_sharp_vector(p: &PartialActionMap, hv: &[Scalar], av: &[Scalar]) -> Vec<Scalar> {
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let f = p.algebra.field;
    let mut out = vec![f.zero(); dh * da];
    for (h, ch) in hv.iter().enumerate() {
        if ch.is_zero() {
            continue;
        }
        for (h1, h2, c) in p.hopf.comult_terms(h) {
            let right = p.algebra.multiply(
                &p.act_right(&p.algebra.unit, &p.hopf.alg.basis_vector(h2)),
                av,
            );
            let coeff = ch * &c;
            for (ai, ac) in right.iter().enumerate() {
                if ac.is_zero() {
                    continue;
                }
                let idx = pair_index(h1, da, ai);
                out[idx] = &out[idx] + &(&coeff * ac);
            }
        }
    }
    out
}

fn pivot_projector(sub: &Subspace, field: crate::scalar::Field) -> Matrix {
    let mut p = Matrix::zero(field, sub.ambient_dim, sub.ambient_dim);
    for (k, &piv) in sub.pivots().iter().enumerate() {
        p.set_col(piv, &sub.basis[k]);
    }
    p
}

fn build_smash(
    p: &PartialActionMap,
    side: SmashSide,
    generators: Vec<Vec<Scalar>>,
    unit_vec: Vec<Scalar>,
    product: impl Fn(&[Scalar], &[Scalar]) -> Vec<Scalar>,
) -> Result<SmashAlgebra, SmashError> {
    let f = p.algebra.field;
    let ambient_dim = p.algebra.dim * p.hopf.dim();
    let subspace = Subspace::from_spanning(ambient_dim, &generators)
        .map_err(|e| SmashError::Shape(format!("{e:?}")))?;
    let dim = subspace.dim();

    let mut mult = vec![f.zero(); dim * dim * dim];
    for s in 0..dim {
        for t in 0..dim {
            let prod = product(&subspace.basis[s], &subspace.basis[t]);
            let coords = subspace.coords(&prod).ok_or(SmashError::ClosureFailure(s, t))?;
            for (k, c) in coords.into_iter().enumerate() {
                mult[(s * dim + t) * dim + k] = c;
            }
        }
    }
    let unit = subspace
        .coords(&unit_vec)
        .ok_or(SmashError::InternalInconsistency(String::from(
            "unit outside smash subspace",
        )))?;
    let algebra = FinDimAlgebra::new(f, dim, mult, unit)
        .map_err(|e| SmashError::Shape(format!("{e}")))?;
    let alg_report = check_algebra(&algebra);
    if !alg_report.pass() {
        return Err(SmashError::InternalInconsistency(format!(
            "induced product fails {:?}",
            alg_report.first_failure().map(|c| c.identity.clone())
        )));
    }

    let mut sharp = Matrix::zero(f, dim, generators.len());
    for (col, g) in generators.iter().enumerate() {
        let coords = subspace
            .coords(g)
            .expect("generators span the subspace by construction");
        sharp.set_col(col, &coords);
    }
    Ok(SmashAlgebra {
        action: p.clone(),
        side,
        ambient_dim,
        projector: pivot_projector(&subspace, f),
        subspace,
        algebra,
        sharp,
    })
}

/// The left partial smash product of a verified left partial action.
pub fn left_smash(p: &PartialActionMap) -> Result<SmashAlgebra, SmashError> {
    let rep = check_left_partial_action(p, false)
        .map_err(|e| SmashError::CheckFailed(format!("{e}")))?;
    if !rep.pass() {
        return Err(SmashError::CheckFailed(
            rep.first_failure().map(|c| c.identity.clone()).unwrap_or_default(),
        ));
    }
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let mut generators = Vec::with_capacity(da * dh);
    for a in 0..da {
        for h in 0..dh {
            generators.push(left_sharp_vector(
                p,
                &p.algebra.basis_vector(a),
                &p.hopf.alg.basis_vector(h),
            ));
        }
    }
    let unit = left_sharp_vector(p, &p.algebra.unit, &p.hopf.alg.unit);
    build_smash(p, SmashSide::Left, generators, unit, |x, y| {
        left_ambient_product(p, x, y)
    })
}

/// The right partial smash product of a verified right partial action.
pub fn right_smash(p: &PartialActionMap) -> Result<SmashAlgebra, SmashError> {
    let rep = check_right_partial_action(p).map_err(|e| SmashError::CheckFailed(format!("{e}")))?;
    if !rep.pass() {
        return Err(SmashError::CheckFailed(
            rep.first_failure().map(|c| c.identity.clone()).unwrap_or_default(),
        ));
    }
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let mut generators = Vec::with_capacity(da * dh);
    for h in 0..dh {
        for a in 0..da {
            generators.push(right_sharp_vector(
                p,
                &p.hopf.alg.basis_vector(h),
                &p.algebra.basis_vector(a),
            ));
        }
    }
    let unit = right_sharp_vector(p, &p.hopf.alg.unit, &p.algebra.unit);
    build_smash(p, SmashSide::Right, generators, unit, |x, y| {
        right_ambient_product(p, x, y)
    })
}

impl SmashAlgebra {
    /// Canonical-basis coordinates of `a#h` (left) for arbitrary vectors.
    pub fn sharp_left(&self, av: &[Scalar], hv: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.side, SmashSide::Left);
        self.subspace
            .coords(&left_sharp_vector(&self.action, av, hv))
            .expect("sharp image lies in the smash subspace")
    }

    /// Canonical-basis coordinates of `h#a` (right) for arbitrary vectors.
    pub fn sharp_right(&self, hv: &[Scalar], av: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.side, SmashSide::Right);
        self.subspace
            .coords(&right_sharp_vector(&self.action, hv, av))
            .expect("sharp image lies in the smash subspace")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    Left,
    Opposite,
}

/// A covariant pair `(ψ, π)` (left) or opposite covariant pair `(φ, γ)`
/// into a common target algebra. For the opposite kind the representation is
/// over the cop variant of the right action's Hopf algebra.
#[derive(Debug, Clone)]
pub struct CovariantPairData {
    pub kind: PairKind,
    /// `ψ` (left) or `φ` (opposite): an algebra morphism `A → B`.
    pub psi: LinearMap,
    /// `π` (left) or `γ` (opposite).
    pub pi: PartialRepresentation,
}

impl CovariantPairData {
    pub fn target(&self) -> &FinDimAlgebra {
        &self.pi.target
    }
}

/// Verifies the defining identities of a (opposite) covariant pair against
/// the action it is associated to. Component checks (morphism, partial
/// representation) come first; identity sweeps follow.
pub fn check_covariant_pair(
    c: &CovariantPairData,
    action: &PartialActionMap,
) -> Result<Report, SmashError> {
    match (c.kind, action.side) {
        (PairKind::Left, Side::Left) | (PairKind::Opposite, Side::Right) => {}
        _ => return Err(SmashError::Shape(String::from("pair kind does not match action side"))),
    }
    let b = c.target();
    let mut report = Report::new();
    report.absorb(
        "morphism:",
        check_algebra_morphism(&c.psi, &action.algebra, b),
    );
    let rep = check_partial_representation(&c.pi)
        .map_err(|e| SmashError::Shape(format!("{e}")))?;
    report.absorb("representation:", rep);
    if !report.pass() {
        return Ok(report);
    }

    let h = &action.hopf;
    let (dh, da) = (h.dim(), action.algebra.dim);
    let f = b.field;
    match c.kind {
        PairKind::Left => {
            let mut cp1 = CheckItem::new("CP1");
            let mut cp2 = CheckItem::new("CP2");
            for hi in 0..dh {
                for a in 0..da {
                    let lhs = c.psi.apply(&action.act_basis_left(hi, a));
                    let mut rhs = vec![f.zero(); b.dim];
                    for (h1, h2, co) in h.comult_terms(hi) {
                        let t = b.multiply(
                            &b.multiply(&c.pi.pi(&h.alg.basis_vector(h1)), &c.psi.apply(&action.algebra.basis_vector(a))),
                            &c.pi.pi(&h.antipode.col(h2)),
                        );
                        for k in 0..b.dim {
                            rhs[k] = &rhs[k] + &(&co * &t[k]);
                        }
                    }
                    cp1.check(lhs == rhs, &[hi, a]);

                    let mut l2 = vec![f.zero(); b.dim];
                    let mut r2 = vec![f.zero(); b.dim];
                    let pa = c.psi.apply(&action.algebra.basis_vector(a));
                    for (h1, h2, co) in h.comult_terms(hi) {
                        let sh1 = c.pi.pi(&h.antipode.col(h1));
                        let ph2 = c.pi.pi(&h.alg.basis_vector(h2));
                        let t = b.multiply(&pa, &b.multiply(&sh1, &ph2));
                        let u = b.multiply(&b.multiply(&sh1, &ph2), &pa);
                        for k in 0..b.dim {
                            l2[k] = &l2[k] + &(&co * &t[k]);
                            r2[k] = &r2[k] + &(&co * &u[k]);
                        }
                    }
                    cp2.check(l2 == r2, &[hi, a]);
                }
            }
            report.push(cp1);
            report.push(cp2);
        }
        PairKind::Opposite => {
            // action.hopf plays K = H^op; its stored antipode is S_H⁻¹ and its
            // comultiplication legs agree with H's
            let mut ocp1 = CheckItem::new("OCP1");
            let mut ocp2 = CheckItem::new("OCP2");
            for hi in 0..dh {
                for a in 0..da {
                    let lhs = c.psi.apply(&action.act_basis_right(a, hi));
                    let mut rhs = vec![f.zero(); b.dim];
                    let pa = c.psi.apply(&action.algebra.basis_vector(a));
                    for (h1, h2, co) in h.comult_terms(hi) {
                        let t = b.multiply(
                            &b.multiply(&c.pi.pi(&h.antipode.col(h1)), &pa),
                            &c.pi.pi(&h.alg.basis_vector(h2)),
                        );
                        for k in 0..b.dim {
                            rhs[k] = &rhs[k] + &(&co * &t[k]);
                        }
                    }
                    ocp1.check(lhs == rhs, &[a, hi]);

                    let mut l2 = vec![f.zero(); b.dim];
                    let mut r2 = vec![f.zero(); b.dim];
                    for (h1, h2, co) in h.comult_terms(hi) {
                        let gh1 = c.pi.pi(&h.alg.basis_vector(h1));
                        let gsh2 = c.pi.pi(&h.antipode.col(h2));
                        let t = b.multiply(&pa, &b.multiply(&gh1, &gsh2));
                        let u = b.multiply(&b.multiply(&gh1, &gsh2), &pa);
                        for k in 0..b.dim {
                            l2[k] = &l2[k] + &(&co * &t[k]);
                            r2[k] = &r2[k] + &(&co * &u[k]);
                        }
                    }
                    ocp2.check(l2 == r2, &[a, hi]);
                }
            }
            report.push(ocp1);
            report.push(ocp2);
        }
    }
    Ok(report)
}

/// The canonical pair `(φ₀: a ↦ a#1_H, π₀: h ↦ 1_A#h)` of a left smash.
pub fn canonical_left_pair(s: &SmashAlgebra) -> CovariantPairData {
    assert_eq!(s.side, SmashSide::Left);
    let p = &s.action;
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let f = p.algebra.field;
    let mut psi = Matrix::zero(f, s.algebra.dim, da);
    for a in 0..da {
        psi.set_col(a, &s.sharp_left(&p.algebra.basis_vector(a), &p.hopf.alg.unit));
    }
    let mut pim = Matrix::zero(f, s.algebra.dim, dh);
    for h in 0..dh {
        pim.set_col(h, &s.sharp_left(&p.algebra.unit, &p.hopf.alg.basis_vector(h)));
    }
    CovariantPairData {
        kind: PairKind::Left,
        psi: LinearMap::new(psi),
        pi: PartialRepresentation {
            hopf: p.hopf.clone(),
            target: s.algebra.clone(),
            map: pim,
        },
    }
}

/// The canonical pair `(φ₀: a ↦ 1_H#a, γ₀: h ↦ h#1_A)` of a right smash; γ₀
/// is a partial representation of the cop variant of the action's Hopf
/// algebra.
pub fn canonical_right_pair(s: &SmashAlgebra) -> CovariantPairData {
    assert_eq!(s.side, SmashSide::Right);
    let p = &s.action;
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let f = p.algebra.field;
    let mut phi = Matrix::zero(f, s.algebra.dim, da);
    for a in 0..da {
        phi.set_col(a, &s.sharp_right(&p.hopf.alg.unit, &p.algebra.basis_vector(a)));
    }
    let mut gam = Matrix::zero(f, s.algebra.dim, dh);
    for h in 0..dh {
        gam.set_col(h, &s.sharp_right(&p.hopf.alg.basis_vector(h), &p.algebra.unit));
    }
    CovariantPairData {
        kind: PairKind::Opposite,
        psi: LinearMap::new(phi),
        pi: PartialRepresentation {
            hopf: variants(&p.hopf, HopfVariant::Cop),
            target: s.algebra.clone(),
            map: gam,
        },
    }
}

/// Solves `m_unknown · sharp = values` for the unknown matrix; errors when
/// the overdetermined system is inconsistent (the prescription on generators
/// does not descend to the subspace).
fn solve_on_generators(sharp: &Matrix, values: &Matrix) -> Result<Matrix, SmashError> {
    let st = sharp.transpose();
    let mut out = Matrix::zero(values.field(), values.rows, sharp.rows);
    for r in 0..values.rows {
        let b: Vec<Scalar> = (0..values.cols).map(|c| values.at(r, c).clone()).collect();
        let x = solve_linear(&st, &b).map_err(|_| SmashError::IllDefined)?;
        for (j, v) in x.into_iter().enumerate() {
            *out.at_mut(r, j) = v;
        }
    }
    Ok(out)
}

/// The universal morphism of a covariant pair out of the matching smash
/// product, with its factorization and uniqueness certificate.
pub fn universal_morphism(
    c: &CovariantPairData,
    s: &SmashAlgebra,
) -> Result<(LinearMap, Report), SmashError> {
    match (c.kind, s.side) {
        (PairKind::Left, SmashSide::Left) | (PairKind::Opposite, SmashSide::Right) => {}
        _ => return Err(SmashError::Shape(String::from("pair kind does not match smash side"))),
    }
    let pair_report = check_covariant_pair(c, &s.action)?;
    if !pair_report.pass() {
        return Err(SmashError::CheckFailed(
            pair_report.first_failure().map(|i| i.identity.clone()).unwrap_or_default(),
        ));
    }
    let b = c.target();
    let p = &s.action;
    let (da, dh) = (p.algebra.dim, p.hopf.dim());
    let f = b.field;

    // prescribed values on the sharp generators
    let mut values = Matrix::zero(f, b.dim, s.sharp.cols);
    match c.kind {
        PairKind::Left => {
            for a in 0..da {
                for h in 0..dh {
                    let v = b.multiply(
                        &c.psi.apply(&p.algebra.basis_vector(a)),
                        &c.pi.pi(&p.hopf.alg.basis_vector(h)),
                    );
                    values.set_col(pair_index(a, dh, h), &v);
                }
            }
        }
        PairKind::Opposite => {
            for h in 0..dh {
                for a in 0..da {
                    let v = b.multiply(
                        &c.pi.pi(&p.hopf.alg.basis_vector(h)),
                        &c.psi.apply(&p.algebra.basis_vector(a)),
                    );
                    values.set_col(pair_index(h, da, a), &v);
                }
            }
        }
    }
    let phi = solve_on_generators(&s.sharp, &values)?;
    let phi_map = LinearMap::new(phi.clone());

    let mut report = Report::new();
    report.absorb("morphism:", check_algebra_morphism(&phi_map, &s.algebra, b));

    let canonical = match c.kind {
        PairKind::Left => canonical_left_pair(s),
        PairKind::Opposite => canonical_right_pair(s),
    };
    let mut factor_psi = CheckItem::new("factor-psi");
    factor_psi.check(phi.mul(&canonical.psi.matrix) == c.psi.matrix, &[]);
    report.push(factor_psi);
    let mut factor_pi = CheckItem::new("factor-pi");
    factor_pi.check(phi.mul(&canonical.pi.map) == c.pi.map, &[]);
    report.push(factor_pi);

    // uniqueness: rebuild the prescription from the factorizations alone —
    // any morphism with these factorizations takes the same values on the
    // generators `φ₀(a)·π₀(h)` (resp. `γ₀(h)·φ₀(a)`), which span
    let mut values2 = Matrix::zero(f, b.dim, s.sharp.cols);
    match c.kind {
        PairKind::Left => {
            for a in 0..da {
                for h in 0..dh {
                    let ga = phi.apply(&canonical.psi.apply(&p.algebra.basis_vector(a)));
                    let gh = phi.apply(&canonical.pi.pi(&p.hopf.alg.basis_vector(h)));
                    values2.set_col(pair_index(a, dh, h), &b.multiply(&ga, &gh));
                }
            }
        }
        PairKind::Opposite => {
            for h in 0..dh {
                for a in 0..da {
                    let gh = phi.apply(&canonical.pi.pi(&p.hopf.alg.basis_vector(h)));
                    let ga = phi.apply(&canonical.psi.apply(&p.algebra.basis_vector(a)));
                    values2.set_col(pair_index(h, da, a), &b.multiply(&gh, &ga));
                }
            }
        }
    }
    let phi2 = solve_on_generators(&s.sharp, &values2)?;
    let mut unique = CheckItem::new("uniqueness");
    unique.check(phi2 == phi, &[]);
    report.push(unique);

    Ok((phi_map, report))
}

/// A partial crossed product `A ⋊_α G` on the basis `⊔_g basis(D_g)`.
#[derive(Debug, Clone)]
pub struct CrossedProduct {
    pub group: GroupTable,
    pub action: UnitalPartialGroupAction,
    pub domains: Vec<Subspace>,
    /// Start of the `g` component in the crossed-product basis.
    pub offsets: Vec<usize>,
    pub algebra: FinDimAlgebra,
}

impl CrossedProduct {
    /// Coordinates of `b δ_g` in the crossed-product basis; `None` when
    /// `b ∉ D_g`.
    pub fn delta_coords(&self, b: &[Scalar], g: usize) -> Option<Vec<Scalar>> {
        let local = self.domains[g].coords(b)?;
        let mut out = vec![self.algebra.field.zero(); self.algebra.dim];
        for (s, c) in local.into_iter().enumerate() {
            out[self.offsets[g] + s] = c;
        }
        Some(out)
    }
}

/// Builds the partial crossed product of a valid unital partial group action
/// and verifies associativity of the result.
pub fn crossed_product(u: &UnitalPartialGroupAction) -> Result<CrossedProduct, SmashError> {
    let rep = check_group_action(u).map_err(|e| SmashError::CheckFailed(format!("{e}")))?;
    if !rep.pass() {
        return Err(SmashError::CheckFailed(
            rep.first_failure().map(|c| c.identity.clone()).unwrap_or_default(),
        ));
    }
    let n = u.group.order;
    let f = u.algebra.field;
    let domains: Vec<Subspace> = (0..n).map(|g| u.domain(g)).collect();
    let mut offsets = vec![0usize; n];
    let mut dim = 0usize;
    for g in 0..n {
        offsets[g] = dim;
        dim += domains[g].dim();
    }

    let mut mult = vec![f.zero(); dim * dim * dim];
    for g in 0..n {
        for s in 0..domains[g].dim() {
            let ag = &domains[g].basis[s];
            for hh in 0..n {
                for t in 0..domains[hh].dim() {
                    let ah = &domains[hh].basis[t];
                    let gh = u.group.mul(g, hh);
                    let prod = u.algebra.multiply(ag, &u.maps[g].apply(ah));
                    let coords = domains[gh].coords(&prod).ok_or_else(|| {
                        SmashError::InternalInconsistency(String::from(
                            "crossed product leaves its component ideal",
                        ))
                    })?;
                    let (row, col) = (offsets[g] + s, offsets[hh] + t);
                    for (k, c) in coords.into_iter().enumerate() {
                        mult[(row * dim + col) * dim + (offsets[gh] + k)] = c;
                    }
                }
            }
        }
    }
    let mut unit = vec![f.zero(); dim];
    let e_coords = domains[0]
        .coords(&u.algebra.unit)
        .expect("D_e is the whole algebra");
    for (k, c) in e_coords.into_iter().enumerate() {
        unit[k] = c;
    }
    let algebra = FinDimAlgebra::new(f, dim, mult, unit)
        .map_err(|e| SmashError::Shape(format!("{e}")))?;
    let alg_report = check_algebra(&algebra);
    if !alg_report.pass() {
        return Err(SmashError::InternalInconsistency(String::from(
            "crossed product is not associative/unital",
        )));
    }
    Ok(CrossedProduct {
        group: u.group.clone(),
        action: u.clone(),
        domains,
        offsets,
        algebra,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossedIsoSide {
    /// `η : A#𝕜G → A⋊G`, `a#g ↦ a1_g δ_g`.
    LeftEta,
    /// `λ : (𝕜G)^op#A → (A^op⋊G)^op`, `g#a ↦ a1_g δ_g`.
    RightLambda,
}

/// Builds the isomorphism between the smash product and the (opposite)
/// crossed product, with a full certificate: well-definedness, algebra
/// morphism, bijectivity, and agreement with the explicit inverse formula.
pub fn crossed_iso(
    u: &UnitalPartialGroupAction,
    side: CrossedIsoSide,
) -> Result<(Matrix, Report), SmashError> {
    let p = group_to_hopf(u).map_err(|e| SmashError::CheckFailed(format!("{e}")))?;
    let f = u.algebra.field;
    let n = u.group.order;
    let da = u.algebra.dim;

    let (s, cross_alg, cross, values) = match side {
        CrossedIsoSide::LeftEta => {
            let s = left_smash(&p)?;
            let cross = crossed_product(u)?;
            let mut values = Matrix::zero(f, cross.algebra.dim, s.sharp.cols);
            for a in 0..da {
                for g in 0..n {
                    let a1g = u
                        .algebra
                        .multiply(&u.algebra.basis_vector(a), &u.unit_idempotents[g]);
                    let col = cross.delta_coords(&a1g, g).ok_or_else(|| {
                        SmashError::InternalInconsistency(String::from("a·1_g outside D_g"))
                    })?;
                    values.set_col(pair_index(a, n, g), &col);
                }
            }
            let alg = cross.algebra.clone();
            (s, alg, cross, values)
        }
        CrossedIsoSide::RightLambda => {
            let pr = to_right(&p).map_err(|e| SmashError::CheckFailed(format!("{e}")))?;
            let s = right_smash(&pr)?;
            let u_op = UnitalPartialGroupAction {
                group: u.group.clone(),
                algebra: opposite(&u.algebra),
                unit_idempotents: u.unit_idempotents.clone(),
                maps: u.maps.clone(),
            };
            let cross = crossed_product(&u_op)?;
            let mut values = Matrix::zero(f, cross.algebra.dim, s.sharp.cols);
            for g in 0..n {
                for a in 0..da {
                    let a1g = u
                        .algebra
                        .multiply(&u.algebra.basis_vector(a), &u.unit_idempotents[g]);
                    let col = cross.delta_coords(&a1g, g).ok_or_else(|| {
                        SmashError::InternalInconsistency(String::from("a·1_g outside D_g"))
                    })?;
                    values.set_col(pair_index(g, da, a), &col);
                }
            }
            let alg = opposite(&cross.algebra);
            (s, alg, cross, values)
        }
    };

    let iso = solve_on_generators(&s.sharp, &values)?;
    let mut report = Report::new();
    report.absorb(
        "morphism:",
        check_algebra_morphism(&LinearMap::new(iso.clone()), &s.algebra, &cross_alg),
    );
    let mut bij = CheckItem::new("bijective");
    let inv = iso.inverse();
    bij.check(inv.is_ok(), &[]);
    report.push(bij);

    // explicit inverse formula b δ_g ↦ b#g, checked rather than inverted
    let mut inv_formula = Matrix::zero(f, s.algebra.dim, cross_alg.dim);
    for g in 0..n {
        for (t, b) in cross.domains[g].basis.iter().enumerate() {
            let col = match side {
                CrossedIsoSide::LeftEta => s.sharp_left(b, &p.hopf.alg.basis_vector(g)),
                CrossedIsoSide::RightLambda => {
                    s.sharp_right(&s.action.hopf.alg.basis_vector(g), b)
                }
            };
            inv_formula.set_col(cross.offsets[g] + t, &col);
        }
    }
    let mut inv_item = CheckItem::new("inverse-formula");
    let idn = Matrix::identity(f, s.algebra.dim);
    let idm = Matrix::identity(f, cross_alg.dim);
    inv_item.check(iso.mul(&inv_formula) == idm, &[0]);
    inv_item.check(inv_formula.mul(&iso) == idn, &[1]);
    report.push(inv_item);

    Ok((iso, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::endomorphism_algebra;
    use crate::hopf::{group_algebra, sweedler_h4};
    use crate::paction::trivial_left_action;
    use crate::scalar::Field;

    fn q(n: i64) -> Scalar {
        Field::Rationals.from_i64(n)
    }

    fn scalar_field_algebra() -> FinDimAlgebra {
        FinDimAlgebra::new(Field::Rationals, 1, vec![q(1)], vec![q(1)]).unwrap()
    }

    fn k2_algebra() -> FinDimAlgebra {
        let mut mult = vec![q(0); 8];
        mult[0] = q(1);
        mult[(1 * 2 + 1) * 2 + 1] = q(1);
        FinDimAlgebra::new(Field::Rationals, 2, mult, vec![q(1), q(1)]).unwrap()
    }

    fn kz2_killing_action() -> PartialActionMap {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let a = scalar_field_algebra();
        let mut action = Matrix::zero(Field::Rationals, 1, 2);
        *action.at_mut(0, 0) = q(1);
        PartialActionMap {
            hopf: h,
            algebra: a,
            side: Side::Left,
            action,
        }
    }

    fn projection_group_action() -> UnitalPartialGroupAction {
        let a = k2_algebra();
        let mut m = Matrix::zero(Field::Rationals, 2, 2);
        *m.at_mut(0, 0) = q(1);
        UnitalPartialGroupAction {
            group: GroupTable::cyclic(2),
            unit_idempotents: vec![a.unit.clone(), vec![q(1), q(0)]],
            maps: vec![Matrix::identity(Field::Rationals, 2), m],
            algebra: a,
        }
    }

    fn projection_hopf_action() -> PartialActionMap {
        group_to_hopf(&projection_group_action()).unwrap()
    }

    #[test]
    fn trivial_left_smash_is_group_algebra() {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let a = scalar_field_algebra();
        let s = left_smash(&trivial_left_action(&h, &a)).unwrap();
        assert_eq!(s.algebra.dim, 2);
        assert_eq!(s.algebra.mult, h.alg.mult);
    }

    #[test]
    fn killing_action_smash_is_one_dimensional() {
        let s = left_smash(&kz2_killing_action()).unwrap();
        assert_eq!(s.algebra.dim, 1);
        // a#g = a(g·1)⊗g = 0
        assert!(s
            .sharp
            .col(pair_index(0, 2, 1))
            .iter()
            .all(|c| c.is_zero()));
    }

    #[test]
    fn projection_action_smash_has_dim_three() {
        let s = left_smash(&projection_hopf_action()).unwrap();
        assert_eq!(s.algebra.dim, 3);
    }

    #[test]
    fn projector_is_idempotent_with_smash_image() {
        for s in [
            left_smash(&kz2_killing_action()).unwrap(),
            left_smash(&projection_hopf_action()).unwrap(),
        ] {
            assert_eq!(s.projector.mul(&s.projector), s.projector);
            assert_eq!(s.projector.rank(), s.algebra.dim);
            for b in &s.subspace.basis {
                assert_eq!(s.projector.apply(b), *b);
            }
        }
    }

    #[test]
    fn generator_absorption_identity() {
        let p = projection_hopf_action();
        let (da, dh) = (p.algebra.dim, p.hopf.dim());
        for a in 0..da {
            for h in 0..dh {
                // a#h = (a⊗1_H)·(1_A#h) in the ambient product
                let mut a_tensor_one = vec![q(0); da * dh];
                a_tensor_one[pair_index(a, dh, 0)] = q(1);
                let one_sharp_h =
                    left_sharp_vector(&p, &p.algebra.unit, &p.hopf.alg.basis_vector(h));
                let rhs = left_ambient_product(&p, &a_tensor_one, &one_sharp_h);
                let lhs = left_sharp_vector(
                    &p,
                    &p.algebra.basis_vector(a),
                    &p.hopf.alg.basis_vector(h),
                );
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn right_smash_dimensions() {
        let h = group_algebra(&GroupTable::cyclic(3), Field::Rationals);
        let a = k2_algebra();
        let r = to_right(&trivial_left_action(&h, &a)).unwrap();
        let s = right_smash(&r).unwrap();
        assert_eq!(s.algebra.dim, 6);

        let r = to_right(&kz2_killing_action()).unwrap();
        assert_eq!(right_smash(&r).unwrap().algebra.dim, 1);

        let r = to_right(&projection_hopf_action()).unwrap();
        assert_eq!(right_smash(&r).unwrap().algebra.dim, 3);
    }

    #[test]
    fn canonical_left_pair_passes_and_gives_identity_morphism() {
        for p in [kz2_killing_action(), projection_hopf_action()] {
            let s = left_smash(&p).unwrap();
            let c = canonical_left_pair(&s);
            assert!(check_covariant_pair(&c, &p).unwrap().pass());
            let (phi, rep) = universal_morphism(&c, &s).unwrap();
            assert!(rep.pass());
            assert_eq!(phi.matrix, Matrix::identity(Field::Rationals, s.algebra.dim));
        }
    }

    #[test]
    fn canonical_right_pair_passes_and_gives_identity_morphism() {
        for p in [kz2_killing_action(), projection_hopf_action()] {
            let r = to_right(&p).unwrap();
            let s = right_smash(&r).unwrap();
            let c = canonical_right_pair(&s);
            assert!(check_partial_representation(&c.pi).unwrap().pass());
            assert!(check_covariant_pair(&c, &r).unwrap().pass());
            let (gamma, rep) = universal_morphism(&c, &s).unwrap();
            assert!(rep.pass());
            assert_eq!(
                gamma.matrix,
                Matrix::identity(Field::Rationals, s.algebra.dim)
            );
        }
    }

    #[test]
    fn counit_pair_fails_cp1_on_partial_fixture() {
        let p = projection_hopf_action();
        let s = left_smash(&p).unwrap();
        let mut c = canonical_left_pair(&s);
        // replace π₀ by h ↦ ε(h)·1
        let mut m = Matrix::zero(Field::Rationals, s.algebra.dim, p.hopf.dim());
        for h in 0..p.hopf.dim() {
            let col: Vec<Scalar> = s
                .algebra
                .unit
                .iter()
                .map(|u| &p.hopf.counit[h] * u)
                .collect();
            m.set_col(h, &col);
        }
        c.pi.map = m;
        let rep = check_covariant_pair(&c, &p).unwrap();
        assert!(!rep.item("CP1").unwrap().pass);
    }

    #[test]
    fn universal_morphism_to_endomorphisms() {
        // ψ = left multiplication, π = induced representation, into End(A)
        let p = projection_hopf_action();
        let s = left_smash(&p).unwrap();
        let da = p.algebra.dim;
        let target = endomorphism_algebra(Field::Rationals, da).unwrap();
        let mut psi = Matrix::zero(Field::Rationals, da * da, da);
        for a in 0..da {
            let mut op = Matrix::zero(Field::Rationals, da, da);
            for x in 0..da {
                op.set_col(x, &p.algebra.basis_product(a, x));
            }
            psi.set_col(a, &crate::algebra::operator_to_end_coords(&op));
        }
        let pi = crate::paction::induced_representation(&p).unwrap();
        let c = CovariantPairData {
            kind: PairKind::Left,
            psi: LinearMap::new(psi),
            pi,
        };
        assert!(check_covariant_pair(&c, &p).unwrap().pass());
        let (phi, rep) = universal_morphism(&c, &s).unwrap();
        assert!(rep.pass());
        let _ = (phi, target);
    }

    #[test]
    fn crossed_product_shapes() {
        // global ℤ/2 on 𝕜 → 𝕜ℤ/2
        let a = scalar_field_algebra();
        let u = UnitalPartialGroupAction {
            group: GroupTable::cyclic(2),
            unit_idempotents: vec![vec![q(1)], vec![q(1)]],
            maps: vec![
                Matrix::identity(Field::Rationals, 1),
                Matrix::identity(Field::Rationals, 1),
            ],
            algebra: a,
        };
        let c = crossed_product(&u).unwrap();
        assert_eq!(c.algebra.dim, 2);
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        assert_eq!(c.algebra.mult, h.alg.mult);

        // projection fixture → dim 2 + 1
        let c = crossed_product(&projection_group_action()).unwrap();
        assert_eq!(c.algebra.dim, 3);

        // trivial group → A itself
        let a = k2_algebra();
        let u = UnitalPartialGroupAction {
            group: GroupTable::cyclic(1),
            unit_idempotents: vec![a.unit.clone()],
            maps: vec![Matrix::identity(Field::Rationals, 2)],
            algebra: a.clone(),
        };
        let c = crossed_product(&u).unwrap();
        assert_eq!(c.algebra.dim, 2);
        assert_eq!(c.algebra.mult, a.mult);
    }

    #[test]
    fn eta_isomorphism_certificates() {
        let a = scalar_field_algebra();
        let global = UnitalPartialGroupAction {
            group: GroupTable::cyclic(2),
            unit_idempotents: vec![vec![q(1)], vec![q(1)]],
            maps: vec![
                Matrix::identity(Field::Rationals, 1),
                Matrix::identity(Field::Rationals, 1),
            ],
            algebra: a,
        };
        for u in [global, projection_group_action()] {
            let (eta, rep) = crossed_iso(&u, CrossedIsoSide::LeftEta).unwrap();
            assert!(rep.pass(), "{:?}", rep.first_failure());
            assert!(eta.inverse().is_ok());
        }
    }

    #[test]
    fn lambda_isomorphism_certificates() {
        for u in [projection_group_action()] {
            let (lam, rep) = crossed_iso(&u, CrossedIsoSide::RightLambda).unwrap();
            assert!(rep.pass(), "{:?}", rep.first_failure());
            assert!(lam.inverse().is_ok());
        }
    }

    #[test]
    fn sweedler_smash_closes() {
        // genuinely partial Sweedler action on 𝕜 with t = 1/2
        let h = sweedler_h4(Field::Rationals).unwrap();
        let a = scalar_field_algebra();
        let t = Field::Rationals.from_ratio(1, 2).unwrap();
        let mut action = Matrix::zero(Field::Rationals, 1, 4);
        *action.at_mut(0, 0) = q(1);
        *action.at_mut(0, 2) = t.clone();
        *action.at_mut(0, 3) = t;
        let p = PartialActionMap {
            hopf: h,
            algebra: a,
            side: Side::Left,
            action,
        };
        let s = left_smash(&p).unwrap();
        assert!(s.algebra.dim > 0 && s.algebra.dim < 4);
        let c = canonical_left_pair(&s);
        assert!(check_covariant_pair(&c, &p).unwrap().pass());
    }
}
