//! Partial actions (left and right), partial representations, the transports
//! between them, and the bridge to unital partial group actions.
//!
//! Left action matrices are `dim A × (dim H · dim A)` with column index
//! `h·dimA + a`; right action matrices are `dim A × (dim A · dim H)` with
//! column index `a·dimH + h`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{endomorphism_algebra, operator_to_end_coords, opposite, FinDimAlgebra};
use crate::hopf::{group_algebra, variants, GroupTable, HopfAlgebraData, HopfVariant};
use crate::linalg::{pair_index, Matrix, Subspace};
use crate::report::{CheckItem, Report};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PactionError {
    SideMismatch,
    Shape(String),
    InvalidInput(String),
    /// `g·1_A` failed to be a central idempotent at this group index.
    NotCentralIdempotent(usize),
    /// The input does not pass its own axiom checker.
    CheckFailed(String),
}

impl core::fmt::Display for PactionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PactionError::SideMismatch => write!(f, "wrong action side"),
            PactionError::Shape(s) => write!(f, "shape mismatch: {s}"),
            PactionError::InvalidInput(s) => write!(f, "invalid input: {s}"),
            PactionError::NotCentralIdempotent(g) => {
                write!(f, "g·1 is not a central idempotent at group index {g}")
            }
            PactionError::CheckFailed(s) => write!(f, "axiom check failed: {s}"),
        }
    }
}

/// A candidate partial action; the axioms are verified by the checkers, not
/// assumed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialActionMap {
    pub hopf: HopfAlgebraData,
    pub algebra: FinDimAlgebra,
    pub side: Side,
    pub action: Matrix,
}

impl PartialActionMap {
    fn check_shape(&self) -> Result<(), PactionError> {
        let (dh, da) = (self.hopf.dim(), self.algebra.dim);
        if self.action.rows != da || self.action.cols != dh * da {
            return Err(PactionError::Shape(format!(
                "action is {}×{}, expected {}×{}",
                self.action.rows,
                self.action.cols,
                da,
                dh * da
            )));
        }
        if self.hopf.field() != self.algebra.field {
            return Err(PactionError::Shape(String::from("field mismatch")));
        }
        Ok(())
    }

    /// `e_h · e_a` for a left action.
    pub fn act_basis_left(&self, h: usize, a: usize) -> Vec<Scalar> {
        self.action.col(pair_index(h, self.algebra.dim, a))
    }

    /// `e_a · e_h` for a right action.
    pub fn act_basis_right(&self, a: usize, h: usize) -> Vec<Scalar> {
        self.action.col(pair_index(a, self.hopf.dim(), h))
    }

    /// Bilinear extension `hv · av` (left side).
    pub fn act_left(&self, hv: &[Scalar], av: &[Scalar]) -> Vec<Scalar> {
        let f = self.algebra.field;
        let mut out = vec![f.zero(); self.algebra.dim];
        for (h, ch) in hv.iter().enumerate() {
            if ch.is_zero() {
                continue;
            }
            for (a, ca) in av.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                let col = self.act_basis_left(h, a);
                let c = ch * ca;
                for k in 0..out.len() {
                    out[k] = &out[k] + &(&c * &col[k]);
                }
            }
        }
        out
    }

    /// Bilinear extension `av · hv` (right side).
    pub fn act_right(&self, av: &[Scalar], hv: &[Scalar]) -> Vec<Scalar> {
        let f = self.algebra.field;
        let mut out = vec![f.zero(); self.algebra.dim];
        for (a, ca) in av.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (h, ch) in hv.iter().enumerate() {
                if ch.is_zero() {
                    continue;
                }
                let col = self.act_basis_right(a, h);
                let c = ca * ch;
                for k in 0..out.len() {
                    out[k] = &out[k] + &(&c * &col[k]);
                }
            }
        }
        out
    }
}

/// The global action `h·a = ε(h)a`, which is always partial.
pub fn trivial_left_action(hopf: &HopfAlgebraData, algebra: &FinDimAlgebra) -> PartialActionMap {
    let (dh, da) = (hopf.dim(), algebra.dim);
    let mut action = Matrix::zero(algebra.field, da, dh * da);
    for h in 0..dh {
        for a in 0..da {
            *action.at_mut(a, pair_index(h, da, a)) = hopf.counit[h].clone();
        }
    }
    PartialActionMap {
        hopf: hopf.clone(),
        algebra: algebra.clone(),
        side: Side::Left,
        action,
    }
}

/// Verifies LPA1–LPA3 (both LPA3 equalities) on all basis tuples; with
/// `deep`, also the derived rewriting identities, whose failure can only come
/// from an internal inconsistency.
pub fn check_left_partial_action(p: &PartialActionMap, deep: bool) -> Result<Report, PactionError> {
    if p.side != Side::Left {
        return Err(PactionError::SideMismatch);
    }
    p.check_shape()?;
    let mut report = Report::new();
    let a_alg = &p.algebra;
    let h = &p.hopf;
    let (dh, da) = (h.dim(), a_alg.dim);
    let f = a_alg.field;

    let mut lpa1 = CheckItem::new("LPA1");
    for a in 0..da {
        lpa1.check(
            p.act_left(&h.alg.unit, &a_alg.basis_vector(a)) == a_alg.basis_vector(a),
            &[a],
        );
    }
    report.push(lpa1);

    let mut lpa2 = CheckItem::new("LPA2");
    for hi in 0..dh {
        for a in 0..da {
            for b in 0..da {
                let lhs = {
                    let ab = a_alg.basis_product(a, b);
                    p.act_left(&h.alg.basis_vector(hi), &ab)
                };
                let mut rhs = vec![f.zero(); da];
                for (h1, h2, c) in h.comult_terms(hi) {
                    let left = p.act_basis_left(h1, a);
                    let right = p.act_basis_left(h2, b);
                    let prod = a_alg.multiply(&left, &right);
                    for k in 0..da {
                        rhs[k] = &rhs[k] + &(&c * &prod[k]);
                    }
                }
                lpa2.check(lhs == rhs, &[hi, a, b]);
            }
        }
    }
    report.push(lpa2);

    let mut lpa3 = CheckItem::new("LPA3");
    for hi in 0..dh {
        for ki in 0..dh {
            for a in 0..da {
                let ka = p.act_basis_left(ki, a);
                let lhs = p.act_left(&h.alg.basis_vector(hi), &ka);
                let mut rhs1 = vec![f.zero(); da];
                let mut rhs2 = vec![f.zero(); da];
                for (h1, h2, c) in h.comult_terms(hi) {
                    let h1_one = p.act_left(&h.alg.basis_vector(h1), &a_alg.unit);
                    let h2k = h.alg.basis_product(h2, ki);
                    let h2k_a = p.act_left(&h2k, &a_alg.basis_vector(a));
                    let t1 = a_alg.multiply(&h1_one, &h2k_a);

                    let h1k = h.alg.basis_product(h1, ki);
                    let h1k_a = p.act_left(&h1k, &a_alg.basis_vector(a));
                    let h2_one = p.act_left(&h.alg.basis_vector(h2), &a_alg.unit);
                    let t2 = a_alg.multiply(&h1k_a, &h2_one);
                    for k in 0..da {
                        rhs1[k] = &rhs1[k] + &(&c * &t1[k]);
                        rhs2[k] = &rhs2[k] + &(&c * &t2[k]);
                    }
                }
                lpa3.check(lhs == rhs1, &[hi, ki, a, 0]);
                lpa3.check(lhs == rhs2, &[hi, ki, a, 1]);
            }
        }
    }
    report.push(lpa3);

    if deep {
        let mut d1 = CheckItem::new("derived-mixing-left");
        let mut d2 = CheckItem::new("derived-mixing-right");
        for hi in 0..dh {
            for ki in 0..dh {
                for a in 0..da {
                    for b in 0..da {
                        let mut lhs1 = vec![f.zero(); da];
                        let mut rhs1 = vec![f.zero(); da];
                        let mut lhs2 = vec![f.zero(); da];
                        let mut rhs2 = vec![f.zero(); da];
                        for (h1, h2, c) in h.comult_terms(hi) {
                            let ka = p.act_basis_left(ki, a);
                            let t = a_alg.multiply(
                                &p.act_left(&h.alg.basis_vector(h1), &ka),
                                &p.act_basis_left(h2, b),
                            );
                            let u = a_alg.multiply(
                                &p.act_left(&h.alg.basis_product(h1, ki), &a_alg.basis_vector(a)),
                                &p.act_basis_left(h2, b),
                            );
                            let kb = p.act_basis_left(ki, b);
                            let v = a_alg.multiply(
                                &p.act_basis_left(h1, a),
                                &p.act_left(&h.alg.basis_vector(h2), &kb),
                            );
                            let w = a_alg.multiply(
                                &p.act_basis_left(h1, a),
                                &p.act_left(&h.alg.basis_product(h2, ki), &a_alg.basis_vector(b)),
                            );
                            for k in 0..da {
                                lhs1[k] = &lhs1[k] + &(&c * &t[k]);
                                rhs1[k] = &rhs1[k] + &(&c * &u[k]);
                                lhs2[k] = &lhs2[k] + &(&c * &v[k]);
                                rhs2[k] = &rhs2[k] + &(&c * &w[k]);
                            }
                        }
                        d1.check(lhs1 == rhs1, &[hi, ki, a, b]);
                        d2.check(lhs2 == rhs2, &[hi, ki, a, b]);
                    }
                }
            }
        }
        report.push(d1);
        report.push(d2);
    }

    Ok(report)
}

/// Verifies RPA1–RPA3 (both RPA3 equalities) on all basis tuples.
pub fn check_right_partial_action(p: &PartialActionMap) -> Result<Report, PactionError> {
    if p.side != Side::Right {
        return Err(PactionError::SideMismatch);
    }
    if p.action.rows != p.algebra.dim || p.action.cols != p.algebra.dim * p.hopf.dim() {
        return Err(PactionError::Shape(String::from("right action matrix shape")));
    }
    let mut report = Report::new();
    let a_alg = &p.algebra;
    let h = &p.hopf;
    let (dh, da) = (h.dim(), a_alg.dim);
    let f = a_alg.field;

    let mut rpa1 = CheckItem::new("RPA1");
    for a in 0..da {
        rpa1.check(
            p.act_right(&a_alg.basis_vector(a), &h.alg.unit) == a_alg.basis_vector(a),
            &[a],
        );
    }
    report.push(rpa1);

    let mut rpa2 = CheckItem::new("RPA2");
    for hi in 0..dh {
        for a in 0..da {
            for b in 0..da {
                let lhs = p.act_right(&a_alg.basis_product(a, b), &h.alg.basis_vector(hi));
                let mut rhs = vec![f.zero(); da];
                for (h1, h2, c) in h.comult_terms(hi) {
                    let prod = a_alg.multiply(&p.act_basis_right(a, h1), &p.act_basis_right(b, h2));
                    for k in 0..da {
                        rhs[k] = &rhs[k] + &(&c * &prod[k]);
                    }
                }
                rpa2.check(lhs == rhs, &[a, b, hi]);
            }
        }
    }
    report.push(rpa2);

    let mut rpa3 = CheckItem::new("RPA3");
    for a in 0..da {
        for ki in 0..dh {
            for hi in 0..dh {
                let ak = p.act_basis_right(a, ki);
                let lhs = p.act_right(&ak, &h.alg.basis_vector(hi));
                let mut rhs1 = vec![f.zero(); da];
                let mut rhs2 = vec![f.zero(); da];
                for (h1, h2, c) in h.comult_terms(hi) {
                    let kh1 = h.alg.basis_product(ki, h1);
                    let t1 = a_alg.multiply(
                        &p.act_right(&a_alg.basis_vector(a), &kh1),
                        &p.act_right(&a_alg.unit, &h.alg.basis_vector(h2)),
                    );
                    let kh2 = h.alg.basis_product(ki, h2);
                    let t2 = a_alg.multiply(
                        &p.act_right(&a_alg.unit, &h.alg.basis_vector(h1)),
                        &p.act_right(&a_alg.basis_vector(a), &kh2),
                    );
                    for k in 0..da {
                        rhs1[k] = &rhs1[k] + &(&c * &t1[k]);
                        rhs2[k] = &rhs2[k] + &(&c * &t2[k]);
                    }
                }
                rpa3.check(lhs == rhs1, &[a, ki, hi, 0]);
                rpa3.check(lhs == rhs2, &[a, ki, hi, 1]);
            }
        }
    }
    report.push(rpa3);

    Ok(report)
}

/// Transports a left partial action of `H` to the right partial action
/// `a◁h = h·a` of `H^op` on the same algebra.
pub fn to_right(p: &PartialActionMap) -> Result<PartialActionMap, PactionError> {
    let rep = check_left_partial_action(p, false)?;
    if !rep.pass() {
        return Err(PactionError::CheckFailed(
            rep.first_failure().map(|c| c.identity.clone()).unwrap_or_default(),
        ));
    }
    let (dh, da) = (p.hopf.dim(), p.algebra.dim);
    let mut action = Matrix::zero(p.algebra.field, da, da * dh);
    for a in 0..da {
        for h in 0..dh {
            action.set_col(pair_index(a, dh, h), &p.act_basis_left(h, a));
        }
    }
    Ok(PartialActionMap {
        hopf: variants(&p.hopf, HopfVariant::Op),
        algebra: p.algebra.clone(),
        side: Side::Right,
        action,
    })
}

/// A candidate partial representation of `hopf` in `target` (not required to
/// be multiplicative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialRepresentation {
    pub hopf: HopfAlgebraData,
    pub target: FinDimAlgebra,
    /// `target.dim × hopf.dim`; column `h` is `π(e_h)`.
    pub map: Matrix,
}

impl PartialRepresentation {
    /// `π` extended linearly.
    pub fn pi(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(v)
    }

    fn pi_basis(&self, h: usize) -> Vec<Scalar> {
        self.map.col(h)
    }
}

/// Verifies PR1–PR3 on all basis pairs; PR4–PR5 are their formal consequences
/// and are reported under separate tags so a PR4/5-only failure is visible as
/// an internal inconsistency.
pub fn check_partial_representation(r: &PartialRepresentation) -> Result<Report, PactionError> {
    let (dh, db) = (r.hopf.dim(), r.target.dim);
    if r.map.rows != db || r.map.cols != dh {
        return Err(PactionError::Shape(format!(
            "representation matrix is {}×{}, expected {}×{}",
            r.map.rows, r.map.cols, db, dh
        )));
    }
    if r.hopf.field() != r.target.field {
        return Err(PactionError::Shape(String::from("field mismatch")));
    }
    let mut report = Report::new();
    let h = &r.hopf;
    let b = &r.target;
    let f = b.field;

    let mut pr1 = CheckItem::new("PR1");
    pr1.check(r.pi(&h.alg.unit) == b.unit, &[]);
    report.push(pr1);

    let mul3 = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| b.multiply(&b.multiply(x, y), z);

    let mut pr2 = CheckItem::new("PR2");
    let mut pr3 = CheckItem::new("PR3");
    let mut pr4 = CheckItem::new("PR4");
    let mut pr5 = CheckItem::new("PR5");
    for hi in 0..dh {
        for ki in 0..dh {
            let pih = r.pi_basis(hi);
            let pik = r.pi_basis(ki);
            let mut pr2_l = vec![f.zero(); db];
            let mut pr2_r = vec![f.zero(); db];
            let mut pr4_l = vec![f.zero(); db];
            let mut pr4_r = vec![f.zero(); db];
            for (k1, k2, c) in h.comult_terms(ki) {
                let pik1 = r.pi_basis(k1);
                let pisk2 = r.pi(&h.antipode.col(k2));
                let pihk1 = r.pi(&h.alg.basis_product(hi, k1));
                let t = mul3(&pih, &pik1, &pisk2);
                let u = b.multiply(&pihk1, &pisk2);

                let pisk1 = r.pi(&h.antipode.col(k1));
                let pik2 = r.pi_basis(k2);
                let hsk1 = {
                    let sk1 = h.antipode.col(k1);
                    let mut out = vec![f.zero(); dh];
                    for (s, cs) in sk1.iter().enumerate() {
                        if cs.is_zero() {
                            continue;
                        }
                        let prod = h.alg.basis_product(hi, s);
                        for m in 0..dh {
                            out[m] = &out[m] + &(cs * &prod[m]);
                        }
                    }
                    out
                };
                let v = mul3(&pih, &pisk1, &pik2);
                let w = b.multiply(&r.pi(&hsk1), &pik2);
                for m in 0..db {
                    pr2_l[m] = &pr2_l[m] + &(&c * &t[m]);
                    pr2_r[m] = &pr2_r[m] + &(&c * &u[m]);
                    pr4_l[m] = &pr4_l[m] + &(&c * &v[m]);
                    pr4_r[m] = &pr4_r[m] + &(&c * &w[m]);
                }
            }
            pr2.check(pr2_l == pr2_r, &[hi, ki]);
            pr4.check(pr4_l == pr4_r, &[hi, ki]);

            let mut pr3_l = vec![f.zero(); db];
            let mut pr3_r = vec![f.zero(); db];
            let mut pr5_l = vec![f.zero(); db];
            let mut pr5_r = vec![f.zero(); db];
            for (h1, h2, c) in h.comult_terms(hi) {
                let pih1 = r.pi_basis(h1);
                let sh2 = h.antipode.col(h2);
                let pish2 = r.pi(&sh2);
                let sh2k = {
                    let mut out = vec![f.zero(); dh];
                    for (s, cs) in sh2.iter().enumerate() {
                        if cs.is_zero() {
                            continue;
                        }
                        let prod = h.alg.basis_product(s, ki);
                        for m in 0..dh {
                            out[m] = &out[m] + &(cs * &prod[m]);
                        }
                    }
                    out
                };
                let t = mul3(&pih1, &pish2, &pik);
                let u = b.multiply(&pih1, &r.pi(&sh2k));

                let sh1 = h.antipode.col(h1);
                let pish1 = r.pi(&sh1);
                let pih2 = r.pi_basis(h2);
                let h2k = h.alg.basis_product(h2, ki);
                let v = mul3(&pish1, &pih2, &pik);
                let w = b.multiply(&pish1, &r.pi(&h2k));
                for m in 0..db {
                    pr3_l[m] = &pr3_l[m] + &(&c * &t[m]);
                    pr3_r[m] = &pr3_r[m] + &(&c * &u[m]);
                    pr5_l[m] = &pr5_l[m] + &(&c * &v[m]);
                    pr5_r[m] = &pr5_r[m] + &(&c * &w[m]);
                }
            }
            pr3.check(pr3_l == pr3_r, &[hi, ki]);
            pr5.check(pr5_l == pr5_r, &[hi, ki]);
        }
    }
    report.push(pr2);
    report.push(pr3);
    report.push(pr4);
    report.push(pr5);
    Ok(report)
}

/// The representation `π(h)(a) = h·a` of `H` in `End(A)` induced by a left
/// partial action.
pub fn induced_representation(p: &PartialActionMap) -> Result<PartialRepresentation, PactionError> {
    let rep = check_left_partial_action(p, false)?;
    if !rep.pass() {
        return Err(PactionError::CheckFailed(
            rep.first_failure().map(|c| c.identity.clone()).unwrap_or_default(),
        ));
    }
    let (dh, da) = (p.hopf.dim(), p.algebra.dim);
    let target = endomorphism_algebra(p.algebra.field, da)
        .map_err(|e| PactionError::InvalidInput(format!("{e}")))?;
    let mut map = Matrix::zero(p.algebra.field, da * da, dh);
    for h in 0..dh {
        let mut op = Matrix::zero(p.algebra.field, da, da);
        for a in 0..da {
            op.set_col(a, &p.act_basis_left(h, a));
        }
        map.set_col(h, &operator_to_end_coords(&op));
    }
    Ok(PartialRepresentation {
        hopf: p.hopf.clone(),
        target,
        map,
    })
}

/// Same matrix over `H^opcop` into the opposite target algebra.
pub fn opcop_representation(r: &PartialRepresentation) -> PartialRepresentation {
    PartialRepresentation {
        hopf: variants(&r.hopf, HopfVariant::OpCop),
        target: opposite(&r.target),
        map: r.map.clone(),
    }
}

/// A unital partial action of a finite group: central idempotents `1_g` and
/// maps `α_g : D_{g⁻¹} → D_g`, each stored as the full matrix of
/// `a ↦ α_g(a·1_{g⁻¹})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitalPartialGroupAction {
    pub group: GroupTable,
    pub algebra: FinDimAlgebra,
    pub unit_idempotents: Vec<Vec<Scalar>>,
    pub maps: Vec<Matrix>,
}

impl UnitalPartialGroupAction {
    /// The domain ideal `D_g = A·1_g` as a subspace.
    pub fn domain(&self, g: usize) -> Subspace {
        let spanning: Vec<Vec<Scalar>> = (0..self.algebra.dim)
            .map(|a| self.algebra.multiply(&self.algebra.basis_vector(a), &self.unit_idempotents[g]))
            .collect();
        Subspace::from_spanning(self.algebra.dim, &spanning).expect("consistent field")
    }
}

/// Verifies every invariant of a unital partial group action.
pub fn check_group_action(u: &UnitalPartialGroupAction) -> Result<Report, PactionError> {
    let n = u.group.order;
    let a_alg = &u.algebra;
    let da = a_alg.dim;
    if u.unit_idempotents.len() != n || u.maps.len() != n {
        return Err(PactionError::Shape(format!(
            "expected {n} idempotents and maps"
        )));
    }
    for (g, m) in u.maps.iter().enumerate() {
        if m.rows != da || m.cols != da {
            return Err(PactionError::Shape(format!("α matrix {g} is not {da}×{da}")));
        }
    }
    for (g, e) in u.unit_idempotents.iter().enumerate() {
        if e.len() != da {
            return Err(PactionError::Shape(format!("idempotent {g} has wrong length")));
        }
    }

    let mut report = Report::new();
    let mut central = CheckItem::new("central-idempotent");
    for g in 0..n {
        let e = &u.unit_idempotents[g];
        central.check(&a_alg.multiply(e, e) == e, &[g]);
        for a in 0..da {
            let ba = a_alg.basis_vector(a);
            central.check(a_alg.multiply(e, &ba) == a_alg.multiply(&ba, e), &[g, a]);
        }
    }
    report.push(central);

    let mut at_identity = CheckItem::new("identity-element");
    at_identity.check(u.unit_idempotents[0] == a_alg.unit, &[0]);
    at_identity.check(u.maps[0] == Matrix::identity(a_alg.field, da), &[1]);
    report.push(at_identity);

    // the stored matrix must only depend on a·1_{g⁻¹}
    let mut canonical = CheckItem::new("canonical-domain");
    for g in 0..n {
        let e_inv = &u.unit_idempotents[u.group.inv(g)];
        for a in 0..da {
            let lhs = u.maps[g].apply(&a_alg.basis_vector(a));
            let rhs = u.maps[g].apply(&a_alg.multiply(&a_alg.basis_vector(a), e_inv));
            canonical.check(lhs == rhs, &[g, a]);
        }
    }
    report.push(canonical);

    let mut bijection = CheckItem::new("domain-bijection");
    let domains: Vec<Subspace> = (0..n).map(|g| u.domain(g)).collect();
    for g in 0..n {
        let src = &domains[u.group.inv(g)];
        let images: Vec<Vec<Scalar>> = src.basis.iter().map(|d| u.maps[g].apply(d)).collect();
        let image = Subspace::from_spanning(da, &images).expect("consistent field");
        bijection.check(image == domains[g], &[g, 0]);
        bijection.check(image.dim() == src.dim(), &[g, 1]);
    }
    report.push(bijection);

    let mut multiplicative = CheckItem::new("multiplicative");
    for g in 0..n {
        let src = &domains[u.group.inv(g)];
        for (s, x) in src.basis.iter().enumerate() {
            for (t, y) in src.basis.iter().enumerate() {
                let lhs = u.maps[g].apply(&a_alg.multiply(x, y));
                let rhs = a_alg.multiply(&u.maps[g].apply(x), &u.maps[g].apply(y));
                multiplicative.check(lhs == rhs, &[g, s, t]);
            }
        }
        let one_image = u.maps[g].apply(&u.unit_idempotents[u.group.inv(g)]);
        multiplicative.check(one_image == u.unit_idempotents[g], &[g, usize::MAX]);
    }
    report.push(multiplicative);

    let mut composition = CheckItem::new("composition");
    for g in 0..n {
        for hh in 0..n {
            let gh = u.group.mul(g, hh);
            let dom = domains[u.group.inv(hh)]
                .intersect(&domains[u.group.inv(gh)])
                .expect("same ambient");
            for (s, x) in dom.basis.iter().enumerate() {
                let lhs = u.maps[g].apply(&u.maps[hh].apply(x));
                let rhs = u.maps[gh].apply(x);
                composition.check(lhs == rhs, &[g, hh, s]);
            }
        }
    }
    report.push(composition);

    Ok(report)
}

/// The left partial action `g·a = α_g(a·1_{g⁻¹})` of `𝕜G`.
pub fn group_to_hopf(u: &UnitalPartialGroupAction) -> Result<PartialActionMap, PactionError> {
    let rep = check_group_action(u)?;
    if !rep.pass() {
        return Err(PactionError::CheckFailed(
            rep.first_failure().map(|c| c.identity.clone()).unwrap_or_default(),
        ));
    }
    let hopf = group_algebra(&u.group, u.algebra.field);
    let (dh, da) = (u.group.order, u.algebra.dim);
    let mut action = Matrix::zero(u.algebra.field, da, dh * da);
    for g in 0..dh {
        for a in 0..da {
            action.set_col(
                pair_index(g, da, a),
                &u.maps[g].apply(&u.algebra.basis_vector(a)),
            );
        }
    }
    Ok(PartialActionMap {
        hopf,
        algebra: u.algebra.clone(),
        side: Side::Left,
        action,
    })
}

/// Recovers the unital partial group action from a left partial action of a
/// group algebra: `1_g = g·1_A`, `α_g = (a ↦ g·a)` on `D_{g⁻¹}`.
pub fn hopf_to_group(p: &PartialActionMap) -> Result<UnitalPartialGroupAction, PactionError> {
    if p.side != Side::Left {
        return Err(PactionError::SideMismatch);
    }
    let group = p
        .hopf
        .group
        .clone()
        .ok_or_else(|| PactionError::InvalidInput(String::from("hopf is not a group algebra")))?;
    let rep = check_left_partial_action(p, false)?;
    if !rep.pass() {
        return Err(PactionError::CheckFailed(
            rep.first_failure().map(|c| c.identity.clone()).unwrap_or_default(),
        ));
    }
    let a_alg = &p.algebra;
    let da = a_alg.dim;
    let mut unit_idempotents = Vec::with_capacity(group.order);
    for g in 0..group.order {
        let e = p.act_left(&p.hopf.alg.basis_vector(g), &a_alg.unit);
        if a_alg.multiply(&e, &e) != e {
            return Err(PactionError::NotCentralIdempotent(g));
        }
        for a in 0..da {
            let ba = a_alg.basis_vector(a);
            if a_alg.multiply(&e, &ba) != a_alg.multiply(&ba, &e) {
                return Err(PactionError::NotCentralIdempotent(g));
            }
        }
        unit_idempotents.push(e);
    }
    let mut maps = Vec::with_capacity(group.order);
    for g in 0..group.order {
        let mut m = Matrix::zero(a_alg.field, da, da);
        for a in 0..da {
            m.set_col(a, &p.act_basis_left(g, a));
        }
        maps.push(m);
    }
    Ok(UnitalPartialGroupAction {
        group,
        algebra: a_alg.clone(),
        unit_idempotents,
        maps,
    })
}
