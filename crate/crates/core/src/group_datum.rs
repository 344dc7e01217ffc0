//! Group datums on generalized matrix algebras and their equivalence with
//! block partial-action data over a group algebra.
//!
//! A group datum packages unital partial group actions on the diagonal
//! algebras together with bijections `γ_g^{(ij)} : D^{(i)}_{g⁻¹}·M_ij →
//! D^{(i)}_g·M_ij` subject to compatibility, domain, and composition
//! conditions. The conversions to and from `BlockPartialData` over the group
//! algebra realize the equivalence of the two descriptions, certified by an
//! exact round trip.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::gma::{
    assemble, block_embed, block_ideal, GeneralizedMatrixDatum, IdealFamily,
};
use crate::gma_partial::{check_block_data, BlockPartialData, GmaPartialError};
use crate::hopf::GroupTable;
use crate::linalg::{Matrix, Subspace};
use crate::paction::{
    check_group_action, group_to_hopf, hopf_to_group, to_right, UnitalPartialGroupAction,
};
use crate::report::{CheckItem, Report};
use crate::scalar::Scalar;
use crate::smash::{crossed_iso, crossed_product, left_smash, right_smash, CrossedIsoSide};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDatumError {
    Shape(String),
    InvalidInput(String),
    /// The Hopf algebra of the block data was not built from a group.
    NotGroupAlgebra,
    /// `1_g^{(i)} m ≠ m 1_g^{(j)}`: witness `(g, i, j, m)`.
    CentralityFailure(usize, usize, usize, usize),
    /// A staged certificate failed: `(stage tag, first failing identity)`.
    Stage(String, String),
}

impl core::fmt::Display for GroupDatumError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupDatumError::Shape(s) => write!(f, "shape mismatch: {s}"),
            GroupDatumError::InvalidInput(s) => write!(f, "invalid input: {s}"),
            GroupDatumError::NotGroupAlgebra => {
                write!(f, "the Hopf algebra is not a group algebra")
            }
            GroupDatumError::CentralityFailure(g, i, j, m) => write!(
                f,
                "1_g m ≠ m 1_g at (g,i,j,m) = ({g},{i},{j},{m})"
            ),
            GroupDatumError::Stage(stage, id) => write!(f, "stage {stage} failed at {id}"),
        }
    }
}

fn stage_err(stage: &str, report: &Report) -> GroupDatumError {
    GroupDatumError::Stage(
        String::from(stage),
        report
            .first_failure()
            .map(|c| c.identity.clone())
            .unwrap_or_default(),
    )
}

/// A group datum: per-diagonal unital partial group actions plus the block
/// bijections, stored as matrices with respect to the canonical echelon
/// bases of the spaces `D^{(i)}_g·M_ij`.
#[derive(Debug, Clone)]
pub struct GroupDatum {
    pub datum: GeneralizedMatrixDatum,
    pub group: GroupTable,
    /// `alpha[i]` is the unital partial action of the group on `R_i`.
    pub alpha: Vec<UnitalPartialGroupAction>,
    /// `gamma[(g·n + i)·n + j]` is the matrix of `γ_g^{(ij)}` from the
    /// canonical basis of `D^{(i)}_{g⁻¹}·M_ij` to that of `D^{(i)}_g·M_ij`.
    pub gamma: Vec<Matrix>,
}

impl GroupDatum {
    #[inline]
    pub fn gamma_ref(&self, g: usize, i: usize, j: usize) -> &Matrix {
        &self.gamma[(g * self.datum.n + i) * self.datum.n + j]
    }

    /// The idempotent `1_g^{(i)}` in the basis of `R_i`.
    pub fn idem(&self, g: usize, i: usize) -> &[Scalar] {
        &self.alpha[i].unit_idempotents[g]
    }

    /// The subspace `D^{(i)}_g·M_ij` of the block `M_ij`.
    pub fn dm_space(&self, g: usize, i: usize, j: usize) -> Subspace {
        let d = &self.datum;
        let dm = d.dim_of(i, j);
        let f = d.field;
        let mut gens = Vec::new();
        for x in &self.alpha[i].domain(g).basis {
            for m in 0..dm {
                let mut em = vec![f.zero(); dm];
                em[m] = f.one();
                gens.push(d.pair(i, i, j, x, &em));
            }
        }
        Subspace::from_spanning(dm, &gens).expect("block vectors have the block dimension")
    }

    /// `γ_g^{(ij)}` applied to an ambient block vector; `None` when the
    /// vector is outside the domain space.
    pub fn gamma_apply(&self, g: usize, i: usize, j: usize, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let dom = self.dm_space(self.group.inv(g), i, j);
        let cod = self.dm_space(g, i, j);
        let coords = dom.coords(v)?;
        Some(cod.from_coords(&self.gamma_ref(g, i, j).apply(&coords), self.datum.field))
    }
}

/// Verifies all datum conditions: the per-diagonal actions, the standing
/// symmetry hypothesis, the four datum identities, the two inverse/domain
/// consequences, and unitality (centrality of each `1_g` and the ideal
/// equality `I_g = R·1_g`).
pub fn check_group_datum(d: &GroupDatum) -> Result<Report, GroupDatumError> {
    let n = d.datum.n;
    let f = d.datum.field;
    let order = d.group.order;
    if d.alpha.len() != n {
        return Err(GroupDatumError::Shape(format!(
            "{} diagonal actions for {n} blocks",
            d.alpha.len()
        )));
    }
    if d.gamma.len() != order * n * n {
        return Err(GroupDatumError::Shape(format!(
            "{} gamma matrices, expected {}",
            d.gamma.len(),
            order * n * n
        )));
    }
    for (i, a) in d.alpha.iter().enumerate() {
        if a.group != d.group {
            return Err(GroupDatumError::Shape(format!("alpha[{i}] group mismatch")));
        }
        let ri = d.datum.diagonal_algebra(i);
        if a.algebra.dim != ri.dim
            || a.algebra.mult_matrix() != ri.mult_matrix()
            || a.algebra.unit != ri.unit
        {
            return Err(GroupDatumError::Shape(format!(
                "alpha[{i}] does not act on R_{i}"
            )));
        }
    }

    let mut report = Report::new();
    for (i, a) in d.alpha.iter().enumerate() {
        let rep = check_group_action(a).map_err(|e| GroupDatumError::Shape(format!("{e}")))?;
        report.absorb(&format!("alpha{i}:"), rep);
    }
    if !report.pass() {
        return Ok(report);
    }

    // gamma shapes and bijectivity
    let mut bij = CheckItem::new("gamma-bijective");
    for g in 0..order {
        for i in 0..n {
            for j in 0..n {
                let dom = d.dm_space(d.group.inv(g), i, j);
                let cod = d.dm_space(g, i, j);
                let m = d.gamma_ref(g, i, j);
                if m.rows != cod.dim() || m.cols != dom.dim() {
                    return Err(GroupDatumError::Shape(format!(
                        "gamma({g},{i},{j}) is {}×{}, expected {}×{}",
                        m.rows,
                        m.cols,
                        cod.dim(),
                        dom.dim()
                    )));
                }
                bij.check(m.rows == m.cols && m.rank() == m.rows, &[g, i, j]);
            }
        }
    }
    report.push(bij);
    if !report.pass() {
        return Ok(report);
    }

    // standing hypothesis: R is symmetric for the domain family of every g
    let mut symmetry = CheckItem::new("symmetry");
    for g in 0..order {
        let ideals: Vec<Subspace> = (0..n).map(|i| d.alpha[i].domain(g)).collect();
        match IdealFamily::new(&d.datum, ideals) {
            Ok(fam) => {
                let sym = crate::gma::check_symmetric(&d.datum, &fam);
                for &(i, j, eq) in &sym.pairs {
                    symmetry.check(eq, &[g, i, j]);
                }
            }
            Err(_) => symmetry.fail(&[g]),
        }
    }
    report.push(symmetry);

    // γ_g^{(ii)} = α_g^{(i)} and γ_e^{(ij)} = id
    let mut diag = CheckItem::new("gamma-diagonal");
    for g in 0..order {
        for i in 0..n {
            let dom = d.dm_space(d.group.inv(g), i, i);
            for x in &dom.basis {
                let lhs = d.gamma_apply(g, i, i, x);
                let rhs = d.alpha[i].maps[g].apply(x);
                diag.check(lhs.as_deref() == Some(rhs.as_slice()), &[g, i]);
            }
        }
    }
    report.push(diag);
    let mut ident = CheckItem::new("gamma-identity");
    for i in 0..n {
        for j in 0..n {
            let dm = d.datum.dim_of(i, j);
            let m = d.gamma_ref(0, i, j);
            ident.check(*m == Matrix::identity(f, dm), &[i, j]);
        }
    }
    report.push(ident);

    // γ_g^{(ik)}(u)γ_g^{(kj)}(v) = γ_g^{(ij)}(uv)
    let mut mult = CheckItem::new("gamma-mult");
    for g in 0..order {
        let ginv = d.group.inv(g);
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let du = d.dm_space(ginv, i, k);
                    let dv = d.dm_space(ginv, k, j);
                    for (ui, u) in du.basis.iter().enumerate() {
                        let gu = d.gamma_apply(g, i, k, u).expect("u is in the domain");
                        for (vi, v) in dv.basis.iter().enumerate() {
                            let gv = d.gamma_apply(g, k, j, v).expect("v is in the domain");
                            let lhs = d.datum.pair(i, k, j, &gu, &gv);
                            let uv = d.datum.pair(i, k, j, u, v);
                            match d.gamma_apply(g, i, j, &uv) {
                                Some(rhs) => mult.check(lhs == rhs, &[g, i, k, j, ui, vi]),
                                None => mult.fail(&[g, i, k, j, ui, vi]),
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(mult);

    // domain condition, composition, inverse, and the domain identity
    let mut domain = CheckItem::new("gamma-domain");
    let mut comp = CheckItem::new("gamma-composition");
    let mut inverse = CheckItem::new("gamma-inverse");
    let mut dom_eq = CheckItem::new("domain-intersection");
    for g in 0..order {
        for h in 0..order {
            let (ginv, hinv) = (d.group.inv(g), d.group.inv(h));
            let gh = d.group.mul(g, h);
            let ghinv = d.group.inv(gh);
            for i in 0..n {
                for j in 0..n {
                    let inter = d
                        .dm_space(ginv, i, j)
                        .intersect(&d.dm_space(h, i, j))
                        .expect("same ambient block");
                    // preimages under γ_h via γ_{h⁻¹} (verified below to be
                    // the inverse)
                    let pre: Vec<Vec<Scalar>> = inter
                        .basis
                        .iter()
                        .filter_map(|y| d.gamma_apply(hinv, i, j, y))
                        .collect();
                    if pre.len() != inter.dim() {
                        domain.fail(&[g, h, i, j]);
                        continue;
                    }
                    let target = d.dm_space(ghinv, i, j);
                    for (xi, x) in pre.iter().enumerate() {
                        domain.check(target.contains(x), &[g, h, i, j, xi]);
                        let hx = d.gamma_apply(h, i, j, x);
                        let ghx = hx.and_then(|y| d.gamma_apply(g, i, j, &y));
                        let direct = d.gamma_apply(gh, i, j, x);
                        comp.check(ghx.is_some() && ghx == direct, &[g, h, i, j, xi]);
                    }
                    let pre_space = Subspace::from_spanning(d.datum.dim_of(i, j), &pre)
                        .expect("block vectors");
                    let rhs = target
                        .intersect(&d.dm_space(hinv, i, j))
                        .expect("same ambient block");
                    dom_eq.check(pre_space == rhs, &[g, h, i, j]);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let (m, minv) = (d.gamma_ref(g, i, j), d.gamma_ref(d.group.inv(g), i, j));
                let ok = m.mul(minv) == Matrix::identity(f, m.rows)
                    && minv.mul(m) == Matrix::identity(f, minv.rows);
                inverse.check(ok, &[g, i, j]);
            }
        }
    }
    report.push(domain);
    report.push(comp);
    report.push(inverse);
    report.push(dom_eq);

    // unitality: 1_g central and I_g = R·1_g
    let r = assemble(&d.datum);
    let mut central = CheckItem::new("central-idempotent");
    let mut ideal = CheckItem::new("ideal-equality");
    for g in 0..order {
        for i in 0..n {
            for j in 0..n {
                let dm = d.datum.dim_of(i, j);
                for m in 0..dm {
                    let mut em = vec![f.zero(); dm];
                    em[m] = f.one();
                    let lhs = d.datum.pair(i, i, j, d.idem(g, i), &em);
                    let rhs = d.datum.pair(i, j, j, &em, d.idem(g, j));
                    central.check(lhs == rhs, &[g, i, j, m]);
                }
            }
        }
        let ideals: Vec<Subspace> = (0..n).map(|i| d.alpha[i].domain(g)).collect();
        let fam = match IdealFamily::new(&d.datum, ideals) {
            Ok(fam) => fam,
            Err(_) => {
                ideal.fail(&[g]);
                continue;
            }
        };
        match block_ideal(&d.datum, &fam) {
            Ok((ig, _)) => {
                let mut one_g = vec![f.zero(); r.total.dim];
                for i in 0..n {
                    let v = block_embed(&r, i, i, d.idem(g, i));
                    for (k, c) in v.into_iter().enumerate() {
                        one_g[k] = &one_g[k] + &c;
                    }
                }
                let gens: Vec<Vec<Scalar>> = (0..r.total.dim)
                    .map(|b| r.total.multiply(&r.total.basis_vector(b), &one_g))
                    .collect();
                let r1g = Subspace::from_spanning(r.total.dim, &gens)
                    .expect("total-algebra vectors");
                ideal.check(ig == r1g, &[g]);
            }
            Err(_) => ideal.fail(&[g]),
        }
    }
    report.push(central);
    report.push(ideal);
    Ok(report)
}

fn group_hopf_of(d: &GroupDatum) -> crate::hopf::HopfAlgebraData {
    crate::hopf::group_algebra(&d.group, d.datum.field)
}

/// Builds the block partial-action data over the group algebra from a valid
/// unital group datum: diagonal actions from the `α^{(i)}`, left modules via
/// `(rδ_g)·m = r·γ_g^{(ij)}(1^{(i)}_{g⁻¹}m)` transported through the
/// smash–crossed-product isomorphism, and right modules via the mirror
/// formula `(rδ_g)·m = γ_g^{(ij)}(m·1^{(j)}_{g⁻¹})·r`.
pub fn datum_to_theorem_data(d: &GroupDatum) -> Result<BlockPartialData, GroupDatumError> {
    let report = check_group_datum(d)?;
    if !report.pass() {
        return Err(stage_err("group-datum", &report));
    }
    let n = d.datum.n;
    let f = d.datum.field;
    let hopf = group_hopf_of(d);

    let mut diag_actions = Vec::with_capacity(n);
    let mut left_sm = Vec::with_capacity(n);
    let mut right_sm = Vec::with_capacity(n);
    let mut etas = Vec::with_capacity(n);
    let mut lambdas = Vec::with_capacity(n);
    let mut crossings = Vec::with_capacity(n);
    for i in 0..n {
        let p = group_to_hopf(&d.alpha[i])
            .map_err(|e| GroupDatumError::Stage(format!("diag-action({i})"), format!("{e}")))?;
        left_sm.push(left_smash(&p).map_err(|e| {
            GroupDatumError::Stage(format!("left-smash({i})"), format!("{e}"))
        })?);
        let rp = to_right(&p)
            .map_err(|e| GroupDatumError::Stage(format!("to-right({i})"), format!("{e}")))?;
        right_sm.push(right_smash(&rp).map_err(|e| {
            GroupDatumError::Stage(format!("right-smash({i})"), format!("{e}"))
        })?);
        let (eta, eta_rep) = crossed_iso(&d.alpha[i], CrossedIsoSide::LeftEta)
            .map_err(|e| GroupDatumError::Stage(format!("eta({i})"), format!("{e}")))?;
        if !eta_rep.pass() {
            return Err(stage_err(&format!("eta({i})"), &eta_rep));
        }
        let (lambda, lambda_rep) = crossed_iso(&d.alpha[i], CrossedIsoSide::RightLambda)
            .map_err(|e| GroupDatumError::Stage(format!("lambda({i})"), format!("{e}")))?;
        if !lambda_rep.pass() {
            return Err(stage_err(&format!("lambda({i})"), &lambda_rep));
        }
        let cross = crossed_product(&d.alpha[i])
            .map_err(|e| GroupDatumError::Stage(format!("crossed({i})"), format!("{e}")))?;
        diag_actions.push(p);
        etas.push(eta);
        lambdas.push(lambda);
        crossings.push(cross);
    }

    let order = d.group.order;
    let mut left_modules = Vec::with_capacity(n * n);
    let mut right_modules = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let dm = d.datum.dim_of(i, j);
            if dm == 0 {
                left_modules.push(Matrix::zero(f, 0, 0));
                right_modules.push(Matrix::zero(f, 0, 0));
                continue;
            }
            // left module: transport the smash basis to the crossed product
            // of R_i and act by (rδ_g)·m = r·γ_g^{(ij)}(1^{(i)}_{g⁻¹}m)
            let sl_dim = left_sm[i].algebra.dim;
            let mut lm = Matrix::zero(f, dm, sl_dim * dm);
            for s in 0..sl_dim {
                let x = etas[i].col(s);
                for m in 0..dm {
                    let mut em = vec![f.zero(); dm];
                    em[m] = f.one();
                    let mut out = vec![f.zero(); dm];
                    for g in 0..order {
                        let dom = &crossings[i].domains[g];
                        for t in 0..dom.dim() {
                            let c = &x[crossings[i].offsets[g] + t];
                            if c.is_zero() {
                                continue;
                            }
                            let cut = d.datum.pair(
                                i,
                                i,
                                j,
                                d.idem(d.group.inv(g), i),
                                &em,
                            );
                            let moved = d
                                .gamma_apply(g, i, j, &cut)
                                .expect("1_{g⁻¹}m lies in the domain");
                            let term = d.datum.pair(i, i, j, &dom.basis[t], &moved);
                            for (u, tu) in term.iter().enumerate() {
                                out[u] = &out[u] + &(c * tu);
                            }
                        }
                    }
                    lm.set_col(crate::linalg::pair_index(s, dm, m), &out);
                }
            }
            left_modules.push(lm);

            // right module: transport through λ to the crossed product of
            // R_j^op and act by (rδ_g)·m = γ_g^{(ij)}(m·1^{(j)}_{g⁻¹})·r
            let sr_dim = right_sm[j].algebra.dim;
            let mut rm = Matrix::zero(f, dm, dm * sr_dim);
            for s in 0..sr_dim {
                let x = lambdas[j].col(s);
                for m in 0..dm {
                    let mut em = vec![f.zero(); dm];
                    em[m] = f.one();
                    let mut out = vec![f.zero(); dm];
                    for g in 0..order {
                        let dom = &crossings[j].domains[g];
                        for t in 0..dom.dim() {
                            let c = &x[crossings[j].offsets[g] + t];
                            if c.is_zero() {
                                continue;
                            }
                            let cut = d.datum.pair(
                                i,
                                j,
                                j,
                                &em,
                                d.idem(d.group.inv(g), j),
                            );
                            let moved = d
                                .gamma_apply(g, i, j, &cut)
                                .expect("m1_{g⁻¹} lies in the domain");
                            let term = d.datum.pair(i, j, j, &moved, &dom.basis[t]);
                            for (u, tu) in term.iter().enumerate() {
                                out[u] = &out[u] + &(c * tu);
                            }
                        }
                    }
                    rm.set_col(crate::linalg::pair_index(m, sr_dim, s), &out);
                }
            }
            right_modules.push(rm);
        }
    }

    let data = BlockPartialData {
        datum: d.datum.clone(),
        hopf,
        diag_actions,
        left_smash: left_sm,
        right_smash: right_sm,
        left_modules,
        right_modules,
    };
    let rep = check_block_data(&data).map_err(map_gp)?;
    if !rep.pass() {
        return Err(stage_err("block-data", &rep));
    }
    Ok(data)
}

fn map_gp(e: GmaPartialError) -> GroupDatumError {
    GroupDatumError::Stage(String::from("block-data"), format!("{e}"))
}

/// Extracts the group datum of block data over a group algebra: the `α^{(i)}`
/// via the group bridge and `γ_g^{(ij)}(x) = (1^{(i)}_gδ_g)·x` on the domain
/// spaces, after verifying centrality of the idempotents.
pub fn theorem_data_to_datum(b: &BlockPartialData) -> Result<GroupDatum, GroupDatumError> {
    let group = b.hopf.group.clone().ok_or(GroupDatumError::NotGroupAlgebra)?;
    let rep = check_block_data(b).map_err(map_gp)?;
    if !rep.pass() {
        return Err(stage_err("block-data", &rep));
    }
    let n = b.datum.n;
    let f = b.datum.field;
    let mut alpha = Vec::with_capacity(n);
    for (i, p) in b.diag_actions.iter().enumerate() {
        alpha.push(hopf_to_group(p).map_err(|e| {
            GroupDatumError::Stage(format!("group-bridge({i})"), format!("{e}"))
        })?);
    }
    // centrality of every 1_g^{(i)} = g⇀ᵢ1
    for g in 0..group.order {
        for i in 0..n {
            for j in 0..n {
                let dm = b.datum.dim_of(i, j);
                for m in 0..dm {
                    let mut em = vec![f.zero(); dm];
                    em[m] = f.one();
                    let lhs = b.datum.pair(i, i, j, &alpha[i].unit_idempotents[g], &em);
                    let rhs = b.datum.pair(i, j, j, &em, &alpha[j].unit_idempotents[g]);
                    if lhs != rhs {
                        return Err(GroupDatumError::CentralityFailure(g, i, j, m));
                    }
                }
            }
        }
    }

    let proto = GroupDatum {
        datum: b.datum.clone(),
        group: group.clone(),
        alpha,
        gamma: Vec::new(),
    };
    let mut gamma = Vec::with_capacity(group.order * n * n);
    for g in 0..group.order {
        for i in 0..n {
            for j in 0..n {
                let dom = proto.dm_space(group.inv(g), i, j);
                let cod = proto.dm_space(g, i, j);
                let mut m = Matrix::zero(f, cod.dim(), dom.dim());
                let sharp = b.unit_sharp_left(i, g);
                for (t, x) in dom.basis.iter().enumerate() {
                    let y = b.left_act(i, j, &sharp, x);
                    let coords = cod.coords(&y).ok_or_else(|| {
                        GroupDatumError::Stage(
                            format!("gamma({g},{i},{j})"),
                            String::from("image outside the codomain space"),
                        )
                    })?;
                    m.set_col(t, &coords);
                }
                gamma.push(m);
            }
        }
    }
    let out = GroupDatum {
        gamma,
        ..proto
    };
    let report = check_group_datum(&out)?;
    if !report.pass() {
        return Err(stage_err("group-datum", &report));
    }
    Ok(out)
}

/// Input selector for the round-trip certificate.
pub enum TheoremRoundtrip<'a> {
    Datum(&'a GroupDatum),
    Data(&'a BlockPartialData),
}

/// Converts in both orders and certifies that the fixed point is exact:
/// every matrix of the input is reproduced entry for entry.
pub fn theorem_roundtrip(x: TheoremRoundtrip<'_>) -> Result<Report, GroupDatumError> {
    let mut report = Report::new();
    match x {
        TheoremRoundtrip::Datum(d) => {
            let data = datum_to_theorem_data(d)?;
            let back = theorem_data_to_datum(&data)?;
            let n = d.datum.n;
            let mut alpha_fixed = CheckItem::new("alpha-fixed");
            for i in 0..n {
                alpha_fixed.check(
                    back.alpha[i].unit_idempotents == d.alpha[i].unit_idempotents
                        && back.alpha[i].maps == d.alpha[i].maps,
                    &[i],
                );
            }
            report.push(alpha_fixed);
            let mut gamma_fixed = CheckItem::new("gamma-fixed");
            for g in 0..d.group.order {
                for i in 0..n {
                    for j in 0..n {
                        gamma_fixed.check(
                            back.gamma_ref(g, i, j) == d.gamma_ref(g, i, j),
                            &[g, i, j],
                        );
                    }
                }
            }
            report.push(gamma_fixed);
        }
        TheoremRoundtrip::Data(b) => {
            let datum = theorem_data_to_datum(b)?;
            let back = datum_to_theorem_data(&datum)?;
            let mut diag_fixed = CheckItem::new("diag-actions-fixed");
            for i in 0..b.datum.n {
                diag_fixed.check(back.diag_actions[i].action == b.diag_actions[i].action, &[i]);
            }
            report.push(diag_fixed);
            let mut lm = CheckItem::new("left-modules-fixed");
            lm.check(back.left_modules == b.left_modules, &[]);
            report.push(lm);
            let mut rm = CheckItem::new("right-modules-fixed");
            rm.check(back.right_modules == b.right_modules, &[]);
            report.push(rm);
        }
    }
    Ok(report)
}
