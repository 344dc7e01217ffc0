//! Turns parsed definition files into core objects and back.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use parthopf_core::algebra::FinDimAlgebra;
use parthopf_core::gma::{assemble, BlockedAlgebra, GeneralizedMatrixDatum};
use parthopf_core::gma_partial::BlockPartialData;
use parthopf_core::group_datum::GroupDatum;
use parthopf_core::hopf::{
    group_algebra, sweedler_h4, variants, GroupTable, HopfAlgebraData, HopfVariant,
};
use parthopf_core::linalg::Matrix;
use parthopf_core::morita::MoritaContextData;
use parthopf_core::paction::{to_right, PartialActionMap, Side, UnitalPartialGroupAction};
use parthopf_core::scalar::{Field, Scalar};
use parthopf_core::smash::{left_smash, right_smash};

use crate::format::{DefinitionFile, Entry, FieldDecl, Ratio, Section, SectionKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, LoadError> {
    Err(LoadError {
        line,
        message: message.into(),
    })
}

/// Every object defined by a file, keyed by section name.
pub struct Loaded {
    pub field: Field,
    pub groups: BTreeMap<String, GroupTable>,
    pub hopfs: BTreeMap<String, HopfAlgebraData>,
    pub algebras: BTreeMap<String, FinDimAlgebra>,
    pub gmas: BTreeMap<String, (GeneralizedMatrixDatum, BlockedAlgebra)>,
    pub partial_actions: BTreeMap<String, PartialActionMap>,
    pub group_actions: BTreeMap<String, UnitalPartialGroupAction>,
    pub group_datums: BTreeMap<String, GroupDatum>,
    pub morita_contexts: BTreeMap<String, MoritaContextData>,
    pub block_data: BTreeMap<String, BlockPartialData>,
}

struct Ctx {
    field: Field,
}

impl Ctx {
    fn scalar(&self, e: &Entry, num: i64, den: i64) -> Result<Scalar, LoadError> {
        self.field
            .from_ratio(num, den)
            .map_err(|x| LoadError {
                line: e.line,
                message: format!("bad scalar {num}/{den}: {x}"),
            })
    }
}

fn usize_arg(e: &Entry, idx: usize, what: &str) -> Result<usize, LoadError> {
    let v = *e
        .args
        .get(idx)
        .ok_or_else(|| LoadError {
            line: e.line,
            message: format!("missing {what}"),
        })?;
    usize::try_from(v).map_err(|_| LoadError {
        line: e.line,
        message: format!("{what} must be nonnegative"),
    })
}

fn only_keys(s: &Section, allowed: &[&str]) -> Result<(), LoadError> {
    for e in &s.entries {
        if !allowed.contains(&e.key.as_str()) {
            return err(e.line, format!("unknown key `{}` in {}", e.key, s.kind.keyword()));
        }
    }
    Ok(())
}

/// Collects sparse `<fixed...> <row> <col> <num> <den>` entries of a given
/// key into a matrix, with range checking.
fn fill_matrix<'a>(
    ctx: &Ctx,
    rows: usize,
    cols: usize,
    entries: impl Iterator<Item = (&'a Entry, usize)>,
) -> Result<Matrix, LoadError> {
    let mut m = Matrix::zero(ctx.field, rows, cols);
    for (e, base) in entries {
        let r = usize_arg(e, base, "row")?;
        let c = usize_arg(e, base + 1, "column")?;
        let num = *e.args.get(base + 2).ok_or_else(|| LoadError {
            line: e.line,
            message: String::from("missing numerator"),
        })?;
        let den = *e.args.get(base + 3).ok_or_else(|| LoadError {
            line: e.line,
            message: String::from("missing denominator"),
        })?;
        if e.args.len() > base + 4 {
            return err(e.line, "trailing arguments");
        }
        if r >= rows || c >= cols {
            return err(
                e.line,
                format!("entry ({r},{c}) out of range for a {rows}×{cols} matrix"),
            );
        }
        *m.at_mut(r, c) = ctx.scalar(e, num, den)?;
    }
    Ok(m)
}

fn single_name<'a>(s: &'a Section, key: &str) -> Result<&'a str, LoadError> {
    let mut found = None;
    for e in &s.entries {
        if e.key == key {
            if found.is_some() {
                return err(e.line, format!("duplicate `{key}`"));
            }
            if e.names.len() != 1 || !e.args.is_empty() {
                return err(e.line, format!("`{key}` takes a single name"));
            }
            found = Some(e.names[0].as_str());
        }
    }
    found.ok_or_else(|| LoadError {
        line: s.line,
        message: format!("{} `{}` is missing `{key}`", s.kind.keyword(), s.name),
    })
}

fn single_usize(s: &Section, key: &str) -> Result<usize, LoadError> {
    let mut found = None;
    for e in &s.entries {
        if e.key == key {
            if found.is_some() {
                return err(e.line, format!("duplicate `{key}`"));
            }
            found = Some(usize_arg(e, 0, key)?);
        }
    }
    found.ok_or_else(|| LoadError {
        line: s.line,
        message: format!("{} `{}` is missing `{key}`", s.kind.keyword(), s.name),
    })
}

fn load_group(s: &Section) -> Result<GroupTable, LoadError> {
    only_keys(s, &["order", "table"])?;
    let order = single_usize(s, "order")?;
    let table = s
        .entries
        .iter()
        .find(|e| e.key == "table")
        .ok_or_else(|| LoadError {
            line: s.line,
            message: String::from("missing `table`"),
        })?;
    if table.args.len() != order * order {
        return err(
            table.line,
            format!("table needs {} entries", order * order),
        );
    }
    let mut cayley = Vec::with_capacity(order * order);
    for (i, &v) in table.args.iter().enumerate() {
        match usize::try_from(v) {
            Ok(u) if u < order => cayley.push(u),
            _ => return err(table.line, format!("table entry {i} out of range")),
        }
    }
    GroupTable::new(order, cayley).map_err(|e| LoadError {
        line: s.line,
        message: format!("{e}"),
    })
}

fn load_algebra(ctx: &Ctx, s: &Section) -> Result<FinDimAlgebra, LoadError> {
    only_keys(s, &["dim", "mult", "unit"])?;
    let dim = single_usize(s, "dim")?;
    let mut mult = vec![ctx.field.zero(); dim * dim * dim];
    let mut unit = vec![ctx.field.zero(); dim];
    for e in &s.entries {
        match e.key.as_str() {
            "mult" => {
                let i = usize_arg(e, 0, "index")?;
                let j = usize_arg(e, 1, "index")?;
                let k = usize_arg(e, 2, "index")?;
                let num = *e.args.get(3).ok_or_else(|| LoadError {
                    line: e.line,
                    message: String::from("missing numerator"),
                })?;
                let den = *e.args.get(4).ok_or_else(|| LoadError {
                    line: e.line,
                    message: String::from("missing denominator"),
                })?;
                if i >= dim || j >= dim || k >= dim {
                    return err(e.line, "structure-constant index out of range");
                }
                mult[(i * dim + j) * dim + k] = ctx.scalar(e, num, den)?;
            }
            "unit" => {
                let i = usize_arg(e, 0, "index")?;
                let num = *e.args.get(1).ok_or_else(|| LoadError {
                    line: e.line,
                    message: String::from("missing numerator"),
                })?;
                let den = *e.args.get(2).ok_or_else(|| LoadError {
                    line: e.line,
                    message: String::from("missing denominator"),
                })?;
                if i >= dim {
                    return err(e.line, "unit index out of range");
                }
                unit[i] = ctx.scalar(e, num, den)?;
            }
            _ => {}
        }
    }
    FinDimAlgebra::new(ctx.field, dim, mult, unit).map_err(|e| LoadError {
        line: s.line,
        message: format!("{e}"),
    })
}

fn load_gma(
    ctx: &Ctx,
    s: &Section,
) -> Result<(GeneralizedMatrixDatum, BlockedAlgebra), LoadError> {
    only_keys(s, &["blocks", "dims", "theta", "eta"])?;
    let n = single_usize(s, "blocks")?;
    let dims_entry = s
        .entries
        .iter()
        .find(|e| e.key == "dims")
        .ok_or_else(|| LoadError {
            line: s.line,
            message: String::from("missing `dims`"),
        })?;
    if dims_entry.args.len() != n * n {
        return err(dims_entry.line, format!("dims needs {} entries", n * n));
    }
    let mut block_dims = Vec::with_capacity(n * n);
    for &v in &dims_entry.args {
        block_dims.push(usize::try_from(v).map_err(|_| LoadError {
            line: dims_entry.line,
            message: String::from("dims must be nonnegative"),
        })?);
    }
    let dim_of = |i: usize, j: usize| block_dims[i * n + j];
    let mut theta = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let rows = dim_of(i, k);
                let cols = dim_of(i, j) * dim_of(j, k);
                let entries = s.entries.iter().filter_map(|e| {
                    if e.key != "theta" {
                        return None;
                    }
                    let (a, b, c) = (e.args.first(), e.args.get(1), e.args.get(2));
                    if a == Some(&(i as i64)) && b == Some(&(j as i64)) && c == Some(&(k as i64)) {
                        Some((e, 3))
                    } else {
                        None
                    }
                });
                theta.push(fill_matrix(ctx, rows, cols, entries)?);
            }
        }
    }
    let mut eta = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![ctx.field.zero(); dim_of(i, i)];
        for e in s.entries.iter().filter(|e| e.key == "eta") {
            if usize_arg(e, 0, "block")? != i {
                continue;
            }
            let r = usize_arg(e, 1, "index")?;
            let num = *e.args.get(2).ok_or_else(|| LoadError {
                line: e.line,
                message: String::from("missing numerator"),
            })?;
            let den = *e.args.get(3).ok_or_else(|| LoadError {
                line: e.line,
                message: String::from("missing denominator"),
            })?;
            if r >= v.len() {
                return err(e.line, "eta index out of range");
            }
            v[r] = ctx.scalar(e, num, den)?;
        }
        eta.push(v);
    }
    let datum = GeneralizedMatrixDatum::new(ctx.field, n, block_dims, theta, eta).map_err(|e| {
        LoadError {
            line: s.line,
            message: format!("{e}"),
        }
    })?;
    let blocked = assemble(&datum);
    Ok((datum, blocked))
}

fn matrix_entries<'a>(
    s: &'a Section,
    key: &'a str,
) -> impl Iterator<Item = (&'a Entry, usize)> {
    s.entries
        .iter()
        .filter(move |e| e.key == key)
        .map(|e| (e, 0))
}

/// Loads everything a file defines, in dependency order.
pub fn load(f: &DefinitionFile) -> Result<Loaded, LoadError> {
    let field = match f.field {
        FieldDecl::Rationals => Field::Rationals,
        FieldDecl::Prime(p) => Field::Prime(p),
    };
    field.validate().map_err(|e| LoadError {
        line: 1,
        message: format!("{e}"),
    })?;
    let ctx = Ctx { field };
    let mut out = Loaded {
        field,
        groups: BTreeMap::new(),
        hopfs: BTreeMap::new(),
        algebras: BTreeMap::new(),
        gmas: BTreeMap::new(),
        partial_actions: BTreeMap::new(),
        group_actions: BTreeMap::new(),
        group_datums: BTreeMap::new(),
        morita_contexts: BTreeMap::new(),
        block_data: BTreeMap::new(),
    };

    for s in f.sections_of(SectionKind::Group) {
        out.groups.insert(s.name.clone(), load_group(s)?);
    }
    for s in f.sections_of(SectionKind::Hopf) {
        let h = load_hopf(&ctx, s, &out)?;
        out.hopfs.insert(s.name.clone(), h);
    }
    for s in f.sections_of(SectionKind::Algebra) {
        out.algebras.insert(s.name.clone(), load_algebra(&ctx, s)?);
    }
    for s in f.sections_of(SectionKind::Gma) {
        out.gmas.insert(s.name.clone(), load_gma(&ctx, s)?);
    }
    for s in f.sections_of(SectionKind::PartialAction) {
        let p = load_partial_action(&ctx, s, &out)?;
        out.partial_actions.insert(s.name.clone(), p);
    }
    for s in f.sections_of(SectionKind::GroupAction) {
        let u = load_group_action(&ctx, s, &out)?;
        out.group_actions.insert(s.name.clone(), u);
    }
    for s in f.sections_of(SectionKind::GroupDatum) {
        let d = load_group_datum(&ctx, s, &out)?;
        out.group_datums.insert(s.name.clone(), d);
    }
    for s in f.sections_of(SectionKind::MoritaContext) {
        let c = load_morita_context(&ctx, s, &out)?;
        out.morita_contexts.insert(s.name.clone(), c);
    }
    for s in f.sections_of(SectionKind::BlockData) {
        let b = load_block_data(&ctx, s, &out)?;
        out.block_data.insert(s.name.clone(), b);
    }
    Ok(out)
}

fn load_hopf(ctx: &Ctx, s: &Section, out: &Loaded) -> Result<HopfAlgebraData, LoadError> {
    only_keys(s, &["group", "sweedler", "variant"])?;
    if s.entries.len() != 1 {
        return err(s.line, "hopf sections take exactly one entry");
    }
    let e = &s.entries[0];
    match e.key.as_str() {
        "group" => {
            let name = e.names.first().ok_or_else(|| LoadError {
                line: e.line,
                message: String::from("missing group name"),
            })?;
            let g = out.groups.get(name).ok_or_else(|| LoadError {
                line: e.line,
                message: format!("unknown group `{name}`"),
            })?;
            Ok(group_algebra(g, ctx.field))
        }
        "sweedler" => sweedler_h4(ctx.field).map_err(|x| LoadError {
            line: e.line,
            message: format!("{x}"),
        }),
        "variant" => {
            let base = e.names.first().ok_or_else(|| LoadError {
                line: e.line,
                message: String::from("missing base hopf name"),
            })?;
            let which = e.names.get(1).ok_or_else(|| LoadError {
                line: e.line,
                message: String::from("missing variant (op|cop|opcop)"),
            })?;
            let h = out.hopfs.get(base).ok_or_else(|| LoadError {
                line: e.line,
                message: format!("unknown hopf `{base}`"),
            })?;
            let v = match which.as_str() {
                "op" => HopfVariant::Op,
                "cop" => HopfVariant::Cop,
                "opcop" => HopfVariant::OpCop,
                _ => return err(e.line, format!("unknown variant `{which}`")),
            };
            Ok(variants(h, v))
        }
        _ => unreachable!(),
    }
}

fn action_target<'a>(
    s: &Section,
    out: &'a Loaded,
) -> Result<&'a FinDimAlgebra, LoadError> {
    let alg = s.entries.iter().find(|e| e.key == "algebra");
    let gma = s.entries.iter().find(|e| e.key == "gma");
    match (alg, gma) {
        (Some(e), None) => {
            let name = e.names.first().ok_or_else(|| LoadError {
                line: e.line,
                message: String::from("missing algebra name"),
            })?;
            out.algebras.get(name).ok_or_else(|| LoadError {
                line: e.line,
                message: format!("unknown algebra `{name}`"),
            })
        }
        (None, Some(e)) => {
            let name = e.names.first().ok_or_else(|| LoadError {
                line: e.line,
                message: String::from("missing gma name"),
            })?;
            out.gmas
                .get(name)
                .map(|(_, r)| &r.total)
                .ok_or_else(|| LoadError {
                    line: e.line,
                    message: format!("unknown gma `{name}`"),
                })
        }
        _ => err(s.line, "need exactly one of `algebra` or `gma`"),
    }
}

fn load_partial_action(
    ctx: &Ctx,
    s: &Section,
    out: &Loaded,
) -> Result<PartialActionMap, LoadError> {
    only_keys(s, &["hopf", "algebra", "gma", "side", "action"])?;
    let hname = single_name(s, "hopf")?;
    let hopf = out.hopfs.get(hname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown hopf `{hname}`"),
    })?;
    let algebra = action_target(s, out)?;
    let side_entry = s.entries.iter().find(|e| e.key == "side");
    let side = match side_entry.and_then(|e| e.names.first()).map(|x| x.as_str()) {
        Some("left") => Side::Left,
        Some("right") => Side::Right,
        _ => return err(s.line, "missing or invalid `side left|right`"),
    };
    let action = fill_matrix(
        ctx,
        algebra.dim,
        hopf.dim() * algebra.dim,
        matrix_entries(s, "action"),
    )?;
    Ok(PartialActionMap {
        hopf: hopf.clone(),
        algebra: algebra.clone(),
        side,
        action,
    })
}

fn load_group_action(
    ctx: &Ctx,
    s: &Section,
    out: &Loaded,
) -> Result<UnitalPartialGroupAction, LoadError> {
    only_keys(s, &["group", "algebra", "idem", "map"])?;
    let gname = single_name(s, "group")?;
    let group = out.groups.get(gname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown group `{gname}`"),
    })?;
    let aname = single_name(s, "algebra")?;
    let algebra = out.algebras.get(aname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown algebra `{aname}`"),
    })?;
    let mut unit_idempotents = vec![vec![ctx.field.zero(); algebra.dim]; group.order];
    for e in s.entries.iter().filter(|e| e.key == "idem") {
        let g = usize_arg(e, 0, "group element")?;
        let i = usize_arg(e, 1, "index")?;
        let num = *e.args.get(2).ok_or_else(|| LoadError {
            line: e.line,
            message: String::from("missing numerator"),
        })?;
        let den = *e.args.get(3).ok_or_else(|| LoadError {
            line: e.line,
            message: String::from("missing denominator"),
        })?;
        if g >= group.order || i >= algebra.dim {
            return err(e.line, "idem index out of range");
        }
        unit_idempotents[g][i] = ctx.scalar(e, num, den)?;
    }
    let mut maps = Vec::with_capacity(group.order);
    for g in 0..group.order {
        let entries = s.entries.iter().filter_map(|e| {
            if e.key == "map" && e.args.first() == Some(&(g as i64)) {
                Some((e, 1))
            } else {
                None
            }
        });
        maps.push(fill_matrix(ctx, algebra.dim, algebra.dim, entries)?);
    }
    Ok(UnitalPartialGroupAction {
        group: group.clone(),
        algebra: algebra.clone(),
        unit_idempotents,
        maps,
    })
}

fn load_group_datum(ctx: &Ctx, s: &Section, out: &Loaded) -> Result<GroupDatum, LoadError> {
    only_keys(s, &["gma", "group", "alpha", "gamma"])?;
    let rname = single_name(s, "gma")?;
    let (datum, _) = out.gmas.get(rname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown gma `{rname}`"),
    })?;
    let gname = single_name(s, "group")?;
    let group = out.groups.get(gname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown group `{gname}`"),
    })?;
    let alpha_entry = s
        .entries
        .iter()
        .find(|e| e.key == "alpha")
        .ok_or_else(|| LoadError {
            line: s.line,
            message: String::from("missing `alpha`"),
        })?;
    if alpha_entry.names.len() != datum.n {
        return err(
            alpha_entry.line,
            format!("alpha needs {} group_action names", datum.n),
        );
    }
    let mut alpha = Vec::with_capacity(datum.n);
    for name in &alpha_entry.names {
        alpha.push(
            out.group_actions
                .get(name)
                .ok_or_else(|| LoadError {
                    line: alpha_entry.line,
                    message: format!("unknown group_action `{name}`"),
                })?
                .clone(),
        );
    }
    let proto = GroupDatum {
        datum: datum.clone(),
        group: group.clone(),
        alpha,
        gamma: Vec::new(),
    };
    let n = datum.n;
    let mut gamma = Vec::with_capacity(group.order * n * n);
    for g in 0..group.order {
        for i in 0..n {
            for j in 0..n {
                let rows = proto.dm_space(g, i, j).dim();
                let cols = proto.dm_space(group.inv(g), i, j).dim();
                let entries = s.entries.iter().filter_map(|e| {
                    if e.key != "gamma" {
                        return None;
                    }
                    let key = (e.args.first(), e.args.get(1), e.args.get(2));
                    if key == (Some(&(g as i64)), Some(&(i as i64)), Some(&(j as i64))) {
                        Some((e, 3))
                    } else {
                        None
                    }
                });
                gamma.push(fill_matrix(ctx, rows, cols, entries)?);
            }
        }
    }
    Ok(GroupDatum { gamma, ..proto })
}

fn load_morita_context(
    ctx: &Ctx,
    s: &Section,
    out: &Loaded,
) -> Result<MoritaContextData, LoadError> {
    only_keys(
        s,
        &[
            "a", "b", "dim_m", "dim_n", "m_left", "m_right", "n_left", "n_right", "mu", "nu",
        ],
    )?;
    let aname = single_name(s, "a")?;
    let a = out.algebras.get(aname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown algebra `{aname}`"),
    })?;
    let bname = single_name(s, "b")?;
    let b = out.algebras.get(bname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown algebra `{bname}`"),
    })?;
    let dim_m = single_usize(s, "dim_m")?;
    let dim_n = single_usize(s, "dim_n")?;
    Ok(MoritaContextData {
        m_left: fill_matrix(ctx, dim_m, a.dim * dim_m, matrix_entries(s, "m_left"))?,
        m_right: fill_matrix(ctx, dim_m, dim_m * b.dim, matrix_entries(s, "m_right"))?,
        n_left: fill_matrix(ctx, dim_n, b.dim * dim_n, matrix_entries(s, "n_left"))?,
        n_right: fill_matrix(ctx, dim_n, dim_n * a.dim, matrix_entries(s, "n_right"))?,
        mu: fill_matrix(ctx, a.dim, dim_m * dim_n, matrix_entries(s, "mu"))?,
        nu: fill_matrix(ctx, b.dim, dim_n * dim_m, matrix_entries(s, "nu"))?,
        a: a.clone(),
        b: b.clone(),
        dim_m,
        dim_n,
    })
}

fn load_block_data(ctx: &Ctx, s: &Section, out: &Loaded) -> Result<BlockPartialData, LoadError> {
    only_keys(s, &["gma", "hopf", "diag", "left", "right"])?;
    let rname = single_name(s, "gma")?;
    let (datum, _) = out.gmas.get(rname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown gma `{rname}`"),
    })?;
    let hname = single_name(s, "hopf")?;
    let hopf = out.hopfs.get(hname).ok_or_else(|| LoadError {
        line: s.line,
        message: format!("unknown hopf `{hname}`"),
    })?;
    let diag_entry = s
        .entries
        .iter()
        .find(|e| e.key == "diag")
        .ok_or_else(|| LoadError {
            line: s.line,
            message: String::from("missing `diag`"),
        })?;
    if diag_entry.names.len() != datum.n {
        return err(
            diag_entry.line,
            format!("diag needs {} partial_action names", datum.n),
        );
    }
    let mut diag_actions = Vec::with_capacity(datum.n);
    let mut left_sm = Vec::with_capacity(datum.n);
    let mut right_sm = Vec::with_capacity(datum.n);
    for name in &diag_entry.names {
        let p = out
            .partial_actions
            .get(name)
            .ok_or_else(|| LoadError {
                line: diag_entry.line,
                message: format!("unknown partial_action `{name}`"),
            })?
            .clone();
        left_sm.push(left_smash(&p).map_err(|e| LoadError {
            line: diag_entry.line,
            message: format!("left smash of `{name}`: {e}"),
        })?);
        let rp = to_right(&p).map_err(|e| LoadError {
            line: diag_entry.line,
            message: format!("right form of `{name}`: {e}"),
        })?;
        right_sm.push(right_smash(&rp).map_err(|e| LoadError {
            line: diag_entry.line,
            message: format!("right smash of `{name}`: {e}"),
        })?);
        diag_actions.push(p);
    }
    let n = datum.n;
    let mut left_modules = Vec::with_capacity(n * n);
    let mut right_modules = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let d = datum.dim_of(i, j);
            if d == 0 {
                left_modules.push(Matrix::zero(ctx.field, 0, 0));
                right_modules.push(Matrix::zero(ctx.field, 0, 0));
                continue;
            }
            let pick = |key: &'static str| {
                s.entries.iter().filter_map(move |e| {
                    if e.key != key {
                        return None;
                    }
                    if e.args.first() == Some(&(i as i64)) && e.args.get(1) == Some(&(j as i64)) {
                        Some((e, 2))
                    } else {
                        None
                    }
                })
            };
            left_modules.push(fill_matrix(
                ctx,
                d,
                left_sm[i].algebra.dim * d,
                pick("left"),
            )?);
            right_modules.push(fill_matrix(
                ctx,
                d,
                d * right_sm[j].algebra.dim,
                pick("right"),
            )?);
        }
    }
    Ok(BlockPartialData {
        datum: datum.clone(),
        hopf: hopf.clone(),
        diag_actions,
        left_smash: left_sm,
        right_smash: right_sm,
        left_modules,
        right_modules,
    })
}

// ---------------------------------------------------------------------------
// Emission: core objects back into canonical definition files.
// ---------------------------------------------------------------------------

/// Converts a scalar to its literal. Only used on values the crate itself
/// produced; rationals outside the `i64` range do not occur in fixtures.
pub fn scalar_to_ratio(x: &Scalar) -> Ratio {
    match x {
        Scalar::Rat(r) => Ratio {
            num: r.numer().to_i64().expect("fixture-scale numerator"),
            den: r.denom().to_i64().expect("fixture-scale denominator"),
        },
        Scalar::Mod { r, .. } => Ratio {
            num: *r as i64,
            den: 1,
        },
    }
}

fn push_matrix(entries: &mut Vec<Entry>, key: &str, fixed: &[usize], m: &Matrix) {
    for r in 0..m.rows {
        for c in 0..m.cols {
            let x = m.at(r, c);
            if x.is_zero() {
                continue;
            }
            let ratio = scalar_to_ratio(x);
            let mut args: Vec<i64> = fixed.iter().map(|&v| v as i64).collect();
            args.extend([r as i64, c as i64, ratio.num, ratio.den]);
            entries.push(Entry {
                line: 0,
                key: key.to_string(),
                args,
                names: Vec::new(),
            });
        }
    }
}

fn entry(key: &str, args: Vec<i64>, names: Vec<String>) -> Entry {
    Entry {
        line: 0,
        key: key.to_string(),
        args,
        names,
    }
}

pub fn group_section(name: &str, g: &GroupTable) -> Section {
    Section {
        kind: SectionKind::Group,
        name: name.to_string(),
        line: 0,
        entries: vec![
            entry("order", vec![g.order as i64], Vec::new()),
            entry(
                "table",
                g.cayley.iter().map(|&v| v as i64).collect(),
                Vec::new(),
            ),
        ],
    }
}

pub fn hopf_group_section(name: &str, group_name: &str) -> Section {
    Section {
        kind: SectionKind::Hopf,
        name: name.to_string(),
        line: 0,
        entries: vec![entry("group", Vec::new(), vec![group_name.to_string()])],
    }
}

pub fn hopf_sweedler_section(name: &str) -> Section {
    Section {
        kind: SectionKind::Hopf,
        name: name.to_string(),
        line: 0,
        entries: vec![entry("sweedler", Vec::new(), Vec::new())],
    }
}

pub fn algebra_section(name: &str, a: &FinDimAlgebra) -> Section {
    let mut entries = vec![entry("dim", vec![a.dim as i64], Vec::new())];
    for i in 0..a.dim {
        for j in 0..a.dim {
            let prod = a.basis_product(i, j);
            for (k, x) in prod.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let r = scalar_to_ratio(x);
                entries.push(entry(
                    "mult",
                    vec![i as i64, j as i64, k as i64, r.num, r.den],
                    Vec::new(),
                ));
            }
        }
    }
    for (i, x) in a.unit.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let r = scalar_to_ratio(x);
        entries.push(entry("unit", vec![i as i64, r.num, r.den], Vec::new()));
    }
    Section {
        kind: SectionKind::Algebra,
        name: name.to_string(),
        line: 0,
        entries,
    }
}

pub fn gma_section(name: &str, d: &GeneralizedMatrixDatum) -> Section {
    let n = d.n;
    let mut entries = vec![
        entry("blocks", vec![n as i64], Vec::new()),
        entry(
            "dims",
            d.block_dims.iter().map(|&v| v as i64).collect(),
            Vec::new(),
        ),
    ];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                push_matrix(&mut entries, "theta", &[i, j, k], d.theta_ref(i, j, k));
            }
        }
    }
    for (i, v) in d.eta.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let q = scalar_to_ratio(x);
            entries.push(entry(
                "eta",
                vec![i as i64, r as i64, q.num, q.den],
                Vec::new(),
            ));
        }
    }
    Section {
        kind: SectionKind::Gma,
        name: name.to_string(),
        line: 0,
        entries,
    }
}

pub fn partial_action_section(
    name: &str,
    hopf_name: &str,
    target: (&str, &str),
    p: &PartialActionMap,
) -> Section {
    let mut entries = vec![
        entry("hopf", Vec::new(), vec![hopf_name.to_string()]),
        entry(target.0, Vec::new(), vec![target.1.to_string()]),
        entry(
            "side",
            Vec::new(),
            vec![String::from(if p.side == Side::Left { "left" } else { "right" })],
        ),
    ];
    push_matrix(&mut entries, "action", &[], &p.action);
    Section {
        kind: SectionKind::PartialAction,
        name: name.to_string(),
        line: 0,
        entries,
    }
}

pub fn group_action_section(
    name: &str,
    group_name: &str,
    algebra_name: &str,
    u: &UnitalPartialGroupAction,
) -> Section {
    let mut entries = vec![
        entry("group", Vec::new(), vec![group_name.to_string()]),
        entry("algebra", Vec::new(), vec![algebra_name.to_string()]),
    ];
    for (g, v) in u.unit_idempotents.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let r = scalar_to_ratio(x);
            entries.push(entry(
                "idem",
                vec![g as i64, i as i64, r.num, r.den],
                Vec::new(),
            ));
        }
    }
    for (g, m) in u.maps.iter().enumerate() {
        push_matrix(&mut entries, "map", &[g], m);
    }
    Section {
        kind: SectionKind::GroupAction,
        name: name.to_string(),
        line: 0,
        entries,
    }
}

pub fn group_datum_section(
    name: &str,
    gma_name: &str,
    group_name: &str,
    alpha_names: &[String],
    d: &GroupDatum,
) -> Section {
    let mut entries = vec![
        entry("gma", Vec::new(), vec![gma_name.to_string()]),
        entry("group", Vec::new(), vec![group_name.to_string()]),
        entry("alpha", Vec::new(), alpha_names.to_vec()),
    ];
    let n = d.datum.n;
    for g in 0..d.group.order {
        for i in 0..n {
            for j in 0..n {
                push_matrix(&mut entries, "gamma", &[g, i, j], d.gamma_ref(g, i, j));
            }
        }
    }
    Section {
        kind: SectionKind::GroupDatum,
        name: name.to_string(),
        line: 0,
        entries,
    }
}

pub fn morita_context_section(
    name: &str,
    a_name: &str,
    b_name: &str,
    c: &MoritaContextData,
) -> Section {
    let mut entries = vec![
        entry("a", Vec::new(), vec![a_name.to_string()]),
        entry("b", Vec::new(), vec![b_name.to_string()]),
        entry("dim_m", vec![c.dim_m as i64], Vec::new()),
        entry("dim_n", vec![c.dim_n as i64], Vec::new()),
    ];
    push_matrix(&mut entries, "m_left", &[], &c.m_left);
    push_matrix(&mut entries, "m_right", &[], &c.m_right);
    push_matrix(&mut entries, "n_left", &[], &c.n_left);
    push_matrix(&mut entries, "n_right", &[], &c.n_right);
    push_matrix(&mut entries, "mu", &[], &c.mu);
    push_matrix(&mut entries, "nu", &[], &c.nu);
    Section {
        kind: SectionKind::MoritaContext,
        name: name.to_string(),
        line: 0,
        entries,
    }
}

pub fn block_data_section(
    name: &str,
    gma_name: &str,
    hopf_name: &str,
    diag_names: &[String],
    b: &BlockPartialData,
) -> Section {
    let mut entries = vec![
        entry("gma", Vec::new(), vec![gma_name.to_string()]),
        entry("hopf", Vec::new(), vec![hopf_name.to_string()]),
        entry("diag", Vec::new(), diag_names.to_vec()),
    ];
    let n = b.datum.n;
    for i in 0..n {
        for j in 0..n {
            push_matrix(&mut entries, "left", &[i, j], b.left_module(i, j));
            push_matrix(&mut entries, "right", &[i, j], b.right_module(i, j));
        }
    }
    Section {
        kind: SectionKind::BlockData,
        name: name.to_string(),
        line: 0,
        entries,
    }
}
