//! Finite-dimensional Hopf algebras with bijective antipode.
//!
//! Comultiplication is a matrix `H → H⊗H` whose column `i` holds the
//! coordinates of `Δ(e_i)` in the tensor basis `e_p⊗e_q` (index `p·dim + q`).
//! The antipode inverse is stored alongside the antipode and validated, never
//! recomputed: the right-smash formulas use it pervasively.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{check_algebra, opposite, FinDimAlgebra};
use crate::linalg::{pair_index, Matrix};
use crate::report::{CheckItem, Report};
use crate::scalar::{Field, Scalar};

/// A finite group given by its Cayley table. Index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub order: usize,
    /// Row-major: `cayley[g·order + h]` is the index of `gh`.
    pub cayley: Vec<usize>,
    pub inverse: Vec<usize>,
}

/// Errors from Hopf/group constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopfError {
    InvalidGroup(String),
    Shape(String),
    BadCharacteristic(u64),
    InvalidInput(String),
}

impl core::fmt::Display for HopfError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HopfError::InvalidGroup(s) => write!(f, "invalid group table: {s}"),
            HopfError::Shape(s) => write!(f, "shape mismatch: {s}"),
            HopfError::BadCharacteristic(p) => write!(f, "characteristic {p} not allowed"),
            HopfError::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

impl GroupTable {
    pub fn new(order: usize, cayley: Vec<usize>) -> Result<GroupTable, HopfError> {
        if order == 0 || cayley.len() != order * order {
            return Err(HopfError::InvalidGroup(format!(
                "cayley table has {} entries, expected {}",
                cayley.len(),
                order * order
            )));
        }
        if cayley.iter().any(|&x| x >= order) {
            return Err(HopfError::InvalidGroup(String::from("index out of range")));
        }
        let g = GroupTable {
            order,
            cayley,
            inverse: vec![0; order],
        };
        for a in 0..order {
            if g.mul(0, a) != a || g.mul(a, 0) != a {
                return Err(HopfError::InvalidGroup(format!(
                    "index 0 is not an identity at {a}"
                )));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(HopfError::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                Some(b) => inverse[a] = b,
                None => {
                    return Err(HopfError::InvalidGroup(format!("{a} has no inverse")));
                }
            }
        }
        Ok(GroupTable { inverse, ..g })
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// The cyclic group ℤ/n.
    pub fn cyclic(n: usize) -> GroupTable {
        let cayley = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a + b) % n))
            .collect();
        GroupTable::new(n, cayley).expect("cyclic table is a group")
    }

    /// The symmetric group S₃, elements enumerated as permutations of {0,1,2}
    /// in lexicographic order (index 0 = identity).
    pub fn symmetric3() -> GroupTable {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let index = |r: [usize; 3]| perms.iter().position(|p| *p == r).unwrap();
        let cayley = (0..6)
            .flat_map(|a| (0..6).map(move |b| index(compose(&perms[a], &perms[b]))))
            .collect();
        GroupTable::new(6, cayley).expect("S3 table is a group")
    }

    /// The opposite group (transposed Cayley table).
    pub fn opposite(&self) -> GroupTable {
        let cayley = (0..self.order)
            .flat_map(|a| (0..self.order).map(move |b| self.mul(b, a)))
            .collect();
        GroupTable::new(self.order, cayley).expect("opposite of a group is a group")
    }
}

/// Hopf algebra data: algebra, comultiplication, counit, antipode and its
/// stored inverse. `group` records group-algebra provenance for the bridge
/// back to partial group actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub alg: FinDimAlgebra,
    /// `dim² × dim`; column `i` is `Δ(e_i)` in the `e_p⊗e_q` basis.
    pub comult: Matrix,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
    pub group: Option<GroupTable>,
}

/// Which structural flip to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfVariant {
    Op,
    Cop,
    OpCop,
}

impl HopfAlgebraData {
    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn field(&self) -> Field {
        self.alg.field
    }

    /// Δ extended linearly to a coordinate vector.
    pub fn comult_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.comult.apply(v)
    }

    /// ε extended linearly.
    pub fn counit_vec(&self, v: &[Scalar]) -> Scalar {
        let mut out = self.field().zero();
        for (i, s) in v.iter().enumerate() {
            if !s.is_zero() {
                out = &out + &(&self.counit[i] * s);
            }
        }
        out
    }

    pub fn antipode_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }

    pub fn antipode_inv_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inv.apply(v)
    }

    /// The nonzero terms of `Δ(e_i)` as `(p, q, coefficient)`.
    pub fn comult_terms(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        let mut terms = Vec::new();
        for p in 0..n {
            for q in 0..n {
                let c = self.comult.at(pair_index(p, n, q), i);
                if !c.is_zero() {
                    terms.push((p, q, c.clone()));
                }
            }
        }
        terms
    }

    /// The product on `H⊗H`: `(a⊗b)(c⊗d) = ac⊗bd`, extended linearly.
    pub fn tensor_square_product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for i1 in 0..n {
            for j1 in 0..n {
                let a = &x[pair_index(i1, n, j1)];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..n {
                    for j2 in 0..n {
                        let b = &y[pair_index(i2, n, j2)];
                        if b.is_zero() {
                            continue;
                        }
                        let coeff = a * b;
                        let p1 = self.alg.basis_product(i1, i2);
                        let p2 = self.alg.basis_product(j1, j2);
                        for (k1, c1) in p1.iter().enumerate() {
                            if c1.is_zero() {
                                continue;
                            }
                            for (k2, c2) in p2.iter().enumerate() {
                                if c2.is_zero() {
                                    continue;
                                }
                                let idx = pair_index(k1, n, k2);
                                out[idx] = &out[idx] + &(&(&coeff * c1) * c2);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Applies Δ to leg `leg` (0-based) of a vector in `H^{⊗legs}`, producing a
/// vector in `H^{⊗(legs+1)}`.
pub fn expand_leg(h: &HopfAlgebraData, v: &[Scalar], legs: usize, leg: usize) -> Vec<Scalar> {
    let n = h.dim();
    assert!(leg < legs);
    assert_eq!(v.len(), n.pow(legs as u32));
    let pre_stride = n.pow((legs - 1 - leg) as u32); // indices to the right of `leg`
    let mut out = vec![h.field().zero(); n.pow((legs + 1) as u32)];
    for (idx, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let right = idx % pre_stride;
        let mid = (idx / pre_stride) % n;
        let left = idx / (pre_stride * n);
        for (p, q, c) in h.comult_terms(mid) {
            let new_idx = ((left * n + p) * n + q) * pre_stride + right;
            out[new_idx] = &out[new_idx] + &(coeff * &c);
        }
    }
    out
}

/// Applies ε to leg `leg` of a vector in `H^{⊗legs}`.
pub fn contract_leg(h: &HopfAlgebraData, v: &[Scalar], legs: usize, leg: usize) -> Vec<Scalar> {
    let n = h.dim();
    assert!(leg < legs);
    let pre_stride = n.pow((legs - 1 - leg) as u32);
    let mut out = vec![h.field().zero(); n.pow((legs - 1) as u32)];
    for (idx, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let right = idx % pre_stride;
        let mid = (idx / pre_stride) % n;
        let left = idx / (pre_stride * n);
        let new_idx = left * pre_stride + right;
        out[new_idx] = &out[new_idx] + &(coeff * &h.counit[mid]);
    }
    out
}

/// The `n`-fold Sweedler expansion `h₍₁₎⊗…⊗h₍ₙ₎` of a vector, built by
/// repeatedly applying Δ to the last leg.
pub fn iterated_coproduct(
    h: &HopfAlgebraData,
    v: &[Scalar],
    legs: usize,
) -> Result<Vec<Scalar>, HopfError> {
    if legs == 0 {
        return Err(HopfError::InvalidInput(String::from(
            "iterated coproduct needs at least one leg",
        )));
    }
    let mut cur = v.to_vec();
    for k in 1..legs {
        cur = expand_leg(h, &cur, k, k - 1);
    }
    Ok(cur)
}

/// Verifies every Hopf axiom family on all basis elements.
pub fn check_hopf(h: &HopfAlgebraData) -> Report {
    let mut report = Report::new();
    let n = h.dim();
    let field = h.field();

    let mut shape = CheckItem::new("shape");
    shape.check(
        h.comult.rows == n * n
            && h.comult.cols == n
            && h.counit.len() == n
            && h.antipode.rows == n
            && h.antipode.cols == n
            && h.antipode_inv.rows == n
            && h.antipode_inv.cols == n,
        &[],
    );
    let ok = shape.pass;
    report.push(shape);
    if !ok {
        return report;
    }

    report.absorb("alg:", check_algebra(&h.alg));

    let mut coassoc = CheckItem::new("coassoc");
    for i in 0..n {
        let d = h.comult.col(i);
        let lhs = expand_leg(h, &d, 2, 0); // (Δ⊗id)Δ
        let rhs = expand_leg(h, &d, 2, 1); // (id⊗Δ)Δ
        coassoc.check(lhs == rhs, &[i]);
    }
    report.push(coassoc);

    let mut counit_laws = CheckItem::new("counit");
    for i in 0..n {
        let d = h.comult.col(i);
        let e = h.alg.basis_vector(i);
        counit_laws.check(contract_leg(h, &d, 2, 0) == e, &[i, 0]);
        counit_laws.check(contract_leg(h, &d, 2, 1) == e, &[i, 1]);
    }
    report.push(counit_laws);

    let mut bialg = CheckItem::new("bialgebra");
    // Δ(1) = 1⊗1 and ε(1) = 1
    let unit_tensor = {
        let mut t = vec![field.zero(); n * n];
        for p in 0..n {
            for q in 0..n {
                t[pair_index(p, n, q)] = &h.alg.unit[p] * &h.alg.unit[q];
            }
        }
        t
    };
    bialg.check(h.comult_vec(&h.alg.unit) == unit_tensor, &[usize::MAX]);
    bialg.check(h.counit_vec(&h.alg.unit).is_one(), &[usize::MAX, 1]);
    for i in 0..n {
        for j in 0..n {
            let prod = h.alg.basis_product(i, j);
            let lhs = h.comult_vec(&prod);
            let rhs = h.tensor_square_product(&h.comult.col(i), &h.comult.col(j));
            bialg.check(lhs == rhs, &[i, j]);
            let e_lhs = h.counit_vec(&prod);
            let e_rhs = &h.counit[i] * &h.counit[j];
            bialg.check(e_lhs == e_rhs, &[i, j, 1]);
        }
    }
    report.push(bialg);

    let mut antipode = CheckItem::new("antipode");
    for i in 0..n {
        // m∘(S⊗id)∘Δ(e_i) = ε(e_i)·1 = m∘(id⊗S)∘Δ(e_i)
        let target: Vec<Scalar> = h.alg.unit.iter().map(|u| &h.counit[i] * u).collect();
        let mut left = vec![field.zero(); n];
        let mut right = vec![field.zero(); n];
        for (p, q, c) in h.comult_terms(i) {
            let sp = h.antipode.col(p);
            let sq = h.antipode.col(q);
            let l = h.alg.multiply(&sp, &h.alg.basis_vector(q));
            let r = h.alg.multiply(&h.alg.basis_vector(p), &sq);
            for k in 0..n {
                left[k] = &left[k] + &(&c * &l[k]);
                right[k] = &right[k] + &(&c * &r[k]);
            }
        }
        antipode.check(left == target, &[i, 0]);
        antipode.check(right == target, &[i, 1]);
    }
    report.push(antipode);

    let mut inv = CheckItem::new("antipode-inverse");
    let id = Matrix::identity(field, n);
    inv.check(h.antipode.mul(&h.antipode_inv) == id, &[0]);
    inv.check(h.antipode_inv.mul(&h.antipode) == id, &[1]);
    report.push(inv);

    report
}

/// The op/cop/opcop variant. Antipodes: `S⁻¹` for op and cop, `S` for opcop —
/// each is the unique choice passing the antipode law, and `check_hopf`
/// enforces it rather than trusting the convention.
pub fn variants(h: &HopfAlgebraData, which: HopfVariant) -> HopfAlgebraData {
    let n = h.dim();
    let flip_comult = || {
        let mut m = Matrix::zero(h.field(), n * n, n);
        for i in 0..n {
            for (p, q, c) in h.comult_terms(i) {
                *m.at_mut(pair_index(q, n, p), i) = c;
            }
        }
        m
    };
    match which {
        HopfVariant::Op => HopfAlgebraData {
            alg: opposite(&h.alg),
            comult: h.comult.clone(),
            counit: h.counit.clone(),
            antipode: h.antipode_inv.clone(),
            antipode_inv: h.antipode.clone(),
            group: h.group.as_ref().map(|g| g.opposite()),
        },
        HopfVariant::Cop => HopfAlgebraData {
            alg: h.alg.clone(),
            comult: flip_comult(),
            counit: h.counit.clone(),
            antipode: h.antipode_inv.clone(),
            antipode_inv: h.antipode.clone(),
            group: h.group.clone(),
        },
        HopfVariant::OpCop => HopfAlgebraData {
            alg: opposite(&h.alg),
            comult: flip_comult(),
            counit: h.counit.clone(),
            antipode: h.antipode.clone(),
            antipode_inv: h.antipode_inv.clone(),
            group: h.group.as_ref().map(|g| g.opposite()),
        },
    }
}

/// The group algebra 𝕜G: basis indexed by group elements, `e_g·e_h = e_{gh}`,
/// grouplike comultiplication, `S(e_g) = e_{g⁻¹}`.
pub fn group_algebra(g: &GroupTable, field: Field) -> HopfAlgebraData {
    let n = g.order;
    let mut mult = vec![field.zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            mult[(a * n + b) * n + g.mul(a, b)] = field.one();
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let alg = FinDimAlgebra::new(field, n, mult, unit)
        .expect("group algebra tensor shapes")
        .with_labels((0..n).map(|i| format!("g{i}")).collect());

    let mut comult = Matrix::zero(field, n * n, n);
    for i in 0..n {
        *comult.at_mut(pair_index(i, n, i), i) = field.one();
    }
    let counit = vec![field.one(); n];
    let mut antipode = Matrix::zero(field, n, n);
    for i in 0..n {
        *antipode.at_mut(g.inv(i), i) = field.one();
    }
    let antipode_inv = antipode.clone();
    HopfAlgebraData {
        alg,
        comult,
        counit,
        antipode,
        antipode_inv,
        group: Some(g.clone()),
    }
}

/// Sweedler's four-dimensional Hopf algebra over a field of characteristic
/// ≠ 2. Basis {1, g, x, gx} with g² = 1, x² = 0, xg = −gx; Δ(g) = g⊗g,
/// Δ(x) = x⊗1 + g⊗x; S(g) = g, S(x) = −gx, S⁻¹ = S³.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebraData, HopfError> {
    if field.characteristic() == 2 {
        return Err(HopfError::BadCharacteristic(2));
    }
    let one = field.one();
    let neg = -&one;
    let n = 4usize;
    let mut mult = vec![field.zero(); n * n * n];
    let mut set = |i: usize, j: usize, k: usize, v: &Scalar| {
        mult[(i * n + j) * n + k] = v.clone();
    };
    // 0 = 1, 1 = g, 2 = x, 3 = gx
    for j in 0..n {
        set(0, j, j, &one); // 1·h = h
    }
    set(1, 0, 1, &one);
    set(1, 1, 0, &one); // g·g = 1
    set(1, 2, 3, &one); // g·x = gx
    set(1, 3, 2, &one); // g·gx = x
    set(2, 0, 2, &one);
    set(2, 1, 3, &neg); // x·g = −gx
    // x·x = 0, x·gx = 0
    set(3, 0, 3, &one);
    set(3, 1, 2, &neg); // gx·g = −x
    // gx·x = 0, gx·gx = 0
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let alg = FinDimAlgebra::new(field, n, mult, unit)
        .expect("Sweedler tensor shapes")
        .with_labels(vec![
            String::from("1"),
            String::from("g"),
            String::from("x"),
            String::from("gx"),
        ]);

    let mut comult = Matrix::zero(field, n * n, n);
    let mut dset = |i: usize, p: usize, q: usize, v: &Scalar| {
        *comult.at_mut(pair_index(p, n, q), i) = v.clone();
    };
    dset(0, 0, 0, &one); // Δ(1) = 1⊗1
    dset(1, 1, 1, &one); // Δ(g) = g⊗g
    dset(2, 2, 0, &one); // Δ(x) = x⊗1 + g⊗x
    dset(2, 1, 2, &one);
    dset(3, 3, 1, &one); // Δ(gx) = gx⊗g + 1⊗gx
    dset(3, 0, 3, &one);

    let counit = vec![one.clone(), one.clone(), field.zero(), field.zero()];

    let mut antipode = Matrix::zero(field, n, n);
    *antipode.at_mut(0, 0) = one.clone();
    *antipode.at_mut(1, 1) = one.clone();
    *antipode.at_mut(3, 2) = neg.clone(); // S(x) = −gx
    *antipode.at_mut(2, 3) = one.clone(); // S(gx) = x
    let mut antipode_inv = Matrix::zero(field, n, n);
    *antipode_inv.at_mut(0, 0) = one.clone();
    *antipode_inv.at_mut(1, 1) = one.clone();
    *antipode_inv.at_mut(3, 2) = one.clone(); // S⁻¹(x) = gx
    *antipode_inv.at_mut(2, 3) = neg.clone(); // S⁻¹(gx) = −x

    Ok(HopfAlgebraData {
        alg,
        comult,
        counit,
        antipode,
        antipode_inv,
        group: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rationals.from_i64(n)
    }

    #[test]
    fn group_algebras_pass() {
        for g in [GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()] {
            let h = group_algebra(&g, Field::Rationals);
            assert!(check_hopf(&h).pass(), "order {}", g.order);
        }
    }

    #[test]
    fn z2_antipode_fixes_basis() {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        assert_eq!(h.antipode, Matrix::identity(Field::Rationals, 2));
    }

    #[test]
    fn z3_antipode_swaps() {
        let h = group_algebra(&GroupTable::cyclic(3), Field::Rationals);
        assert_eq!(h.antipode.col(1), h.alg.basis_vector(2));
        assert_eq!(h.antipode.col(2), h.alg.basis_vector(1));
        assert_eq!(h.antipode, h.antipode_inv);
    }

    #[test]
    fn broken_antipode_fails_with_witness() {
        let mut h = group_algebra(&GroupTable::cyclic(3), Field::Rationals);
        h.antipode = Matrix::identity(Field::Rationals, 3);
        h.antipode_inv = Matrix::identity(Field::Rationals, 3);
        let r = check_hopf(&h);
        assert!(!r.item("antipode").unwrap().pass);
    }

    #[test]
    fn sweedler_passes_full_sweep() {
        let h = sweedler_h4(Field::Rationals).unwrap();
        assert!(check_hopf(&h).pass());
        assert!(sweedler_h4(Field::Prime(2)).is_err());
    }

    #[test]
    fn sweedler_s_squared_is_conjugation_by_g() {
        let h = sweedler_h4(Field::Rationals).unwrap();
        let s2 = h.antipode.mul(&h.antipode);
        for i in 0..4 {
            let ghg = h.alg.multiply(
                &h.alg.multiply(&h.alg.basis_vector(1), &h.alg.basis_vector(i)),
                &h.alg.basis_vector(1),
            );
            assert_eq!(s2.col(i), ghg, "S² at basis {i}");
        }
        // S has order 4 and S⁻¹ = S³
        let s3 = s2.mul(&h.antipode);
        assert_eq!(s3, h.antipode_inv);
        assert_eq!(s2.mul(&s2), Matrix::identity(Field::Rationals, 4));
    }

    #[test]
    fn sweedler_counit_values() {
        let h = sweedler_h4(Field::Rationals).unwrap();
        assert_eq!(h.counit, vec![q(1), q(1), q(0), q(0)]);
    }

    #[test]
    fn variants_pass_and_involute() {
        let hs = [
            group_algebra(&GroupTable::symmetric3(), Field::Rationals),
            sweedler_h4(Field::Rationals).unwrap(),
        ];
        for h in &hs {
            for w in [HopfVariant::Op, HopfVariant::Cop, HopfVariant::OpCop] {
                assert!(check_hopf(&variants(h, w)).pass());
            }
            let oc = variants(&variants(h, HopfVariant::OpCop), HopfVariant::OpCop);
            assert_eq!(oc.alg.mult, h.alg.mult);
            assert_eq!(oc.comult, h.comult);
            assert_eq!(oc.antipode, h.antipode);
        }
    }

    #[test]
    fn cop_of_cocommutative_is_identity() {
        let h = group_algebra(&GroupTable::cyclic(3), Field::Rationals);
        let c = variants(&h, HopfVariant::Cop);
        assert_eq!(c.comult, h.comult);
    }

    #[test]
    fn sweedler_cop_swaps_legs_of_x() {
        let h = sweedler_h4(Field::Rationals).unwrap();
        let c = variants(&h, HopfVariant::Cop);
        // Δ_cop(x) = 1⊗x + x⊗g
        let col = c.comult.col(2);
        let n = 4;
        assert!(col[pair_index(0, n, 2)].is_one());
        assert!(col[pair_index(2, n, 1)].is_one());
        assert_eq!(col.iter().filter(|s| !s.is_zero()).count(), 2);
    }

    #[test]
    fn iterated_coproduct_basics() {
        let h = group_algebra(&GroupTable::cyclic(2), Field::Rationals);
        let v = h.alg.basis_vector(1);
        let t = iterated_coproduct(&h, &v, 3).unwrap();
        let mut expected = vec![q(0); 8];
        expected[pair_index(pair_index(1, 2, 1), 2, 1)] = q(1);
        assert_eq!(t, expected);
        assert!(iterated_coproduct(&h, &v, 0).is_err());
        assert_eq!(iterated_coproduct(&h, &v, 1).unwrap(), v);
    }

    #[test]
    fn sweedler_two_fold_coproduct_of_x() {
        let h = sweedler_h4(Field::Rationals).unwrap();
        let t = iterated_coproduct(&h, &h.alg.basis_vector(2), 2).unwrap();
        assert_eq!(t, h.comult.col(2));
        // x ⊗ 1 + g ⊗ x
        assert!(t[pair_index(2, 4, 0)].is_one());
        assert!(t[pair_index(1, 4, 2)].is_one());
    }

    #[test]
    fn coassociativity_at_depth() {
        for h in [
            group_algebra(&GroupTable::symmetric3(), Field::Rationals),
            sweedler_h4(Field::Rationals).unwrap(),
        ] {
            for i in 0..h.dim() {
                let v = h.alg.basis_vector(i);
                for depth in 2..=4usize {
                    let base = iterated_coproduct(&h, &v, depth - 1).unwrap();
                    let mut expansions = Vec::new();
                    for leg in 0..depth - 1 {
                        expansions.push(expand_leg(&h, &base, depth - 1, leg));
                    }
                    for w in &expansions[1..] {
                        assert_eq!(*w, expansions[0]);
                    }
                    // applying ε to any leg returns the shorter coproduct
                    let full = iterated_coproduct(&h, &v, depth).unwrap();
                    for leg in 0..depth {
                        assert_eq!(contract_leg(&h, &full, depth, leg), base);
                    }
                }
            }
        }
    }
}
