//! Command implementations and the builtin-fixture bridge.

use std::fmt::Write as _;

use parthopf_core::fixtures::{builtin_fixtures, FixtureKind};
use parthopf_core::gma_partial::{
    blocked_datum, check_block_data, check_c_prime, decompose, synthesize, GmaPartialError,
};
use parthopf_core::group_datum::{
    check_group_datum, datum_to_theorem_data, theorem_data_to_datum, theorem_roundtrip,
    GroupDatumError, TheoremRoundtrip,
};
use parthopf_core::linalg::Matrix;
use parthopf_core::morita::{check_morita_context, check_morita_equivalent, MoritaError};
use parthopf_core::paction::{
    check_group_action, check_left_partial_action, check_right_partial_action, Side,
};
use parthopf_core::smash::{left_smash, right_smash};

use crate::build::{
    self, block_data_section, gma_section, group_action_section, group_datum_section,
    group_section, hopf_group_section, hopf_sweedler_section, partial_action_section,
    scalar_to_ratio, Loaded,
};
use crate::format::{DefinitionFile, FieldDecl, Section};
use crate::output::RunOutput;
use parthopf_core::scalar::Field;

/// A command failure with the exit code it maps to: 1 for a validation
/// failure, 2 for an input error.
pub struct CmdError {
    pub code: i32,
    pub message: String,
}

fn input_err<T>(message: impl Into<String>) -> Result<T, CmdError> {
    Err(CmdError {
        code: 2,
        message: message.into(),
    })
}

fn validation_err<T>(message: impl Into<String>) -> Result<T, CmdError> {
    Err(CmdError {
        code: 1,
        message: message.into(),
    })
}

fn gma_partial_err<T>(e: GmaPartialError) -> Result<T, CmdError> {
    match e {
        GmaPartialError::NotInvariant(i, j) => validation_err(format!(
            "block ({i},{j}) is not invariant under the action"
        )),
        GmaPartialError::Stage(stage, id) => {
            validation_err(format!("stage {stage} failed at {id}"))
        }
        other => input_err(format!("{other}")),
    }
}

fn group_datum_err<T>(e: GroupDatumError) -> Result<T, CmdError> {
    match e {
        GroupDatumError::Stage(stage, id) => {
            validation_err(format!("stage {stage} failed at {id}"))
        }
        GroupDatumError::CentralityFailure(g, i, j, m) => validation_err(format!(
            "idempotent not central at (g,i,j,m) = ({g},{i},{j},{m})"
        )),
        other => input_err(format!("{other}")),
    }
}

/// Renders a matrix as deterministic sparse note lines.
fn matrix_note(out: &mut String, label: &str, m: &Matrix) {
    let _ = writeln!(out, "{label} ({}x{})", m.rows, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            let x = m.at(r, c);
            if x.is_zero() {
                continue;
            }
            let q = scalar_to_ratio(x);
            if q.den == 1 {
                let _ = writeln!(out, "  [{r},{c}] = {}", q.num);
            } else {
                let _ = writeln!(out, "  [{r},{c}] = {}/{}", q.num, q.den);
            }
        }
    }
}

/// `check`: run every checker the file's sections call for.
pub fn cmd_check(loaded: &Loaded, deep: bool) -> Result<RunOutput, CmdError> {
    let mut out = RunOutput::new("check");
    for (name, a) in &loaded.algebras {
        out.reports
            .push((format!("algebra {name}"), parthopf_core::algebra::check_algebra(a)));
    }
    for (name, h) in &loaded.hopfs {
        out.reports
            .push((format!("hopf {name}"), parthopf_core::hopf::check_hopf(h)));
    }
    for (name, (d, _)) in &loaded.gmas {
        out.reports
            .push((format!("gma {name}"), parthopf_core::gma::check_datum(d)));
    }
    for (name, p) in &loaded.partial_actions {
        let rep = match p.side {
            Side::Left => check_left_partial_action(p, deep),
            Side::Right => check_right_partial_action(p),
        };
        match rep {
            Ok(r) => out.reports.push((format!("partial_action {name}"), r)),
            Err(e) => return input_err(format!("partial_action {name}: {e}")),
        }
    }
    for (name, u) in &loaded.group_actions {
        match check_group_action(u) {
            Ok(r) => out.reports.push((format!("group_action {name}"), r)),
            Err(e) => return input_err(format!("group_action {name}: {e}")),
        }
    }
    for (name, d) in &loaded.group_datums {
        match check_group_datum(d) {
            Ok(r) => out.reports.push((format!("group_datum {name}"), r)),
            Err(e) => return input_err(format!("group_datum {name}: {e}")),
        }
    }
    for (name, c) in &loaded.morita_contexts {
        match check_morita_context(c, true) {
            Ok(r) => out.reports.push((format!("morita_context {name}"), r)),
            Err(e) => return input_err(format!("morita_context {name}: {e}")),
        }
    }
    for (name, b) in &loaded.block_data {
        match check_block_data(b) {
            Ok(r) => out.reports.push((format!("block_data {name}"), r)),
            Err(e) => return input_err(format!("block_data {name}: {e}")),
        }
        match check_c_prime(b) {
            Ok(r) => out.reports.push((format!("block_data {name} (c-prime)"), r)),
            Err(e) => return input_err(format!("block_data {name}: {e}")),
        }
    }
    if out.reports.is_empty() {
        return input_err("nothing to check: the file defines no checkable sections");
    }
    Ok(out)
}

/// `build-smash`: construct the (left or right) partial smash product of
/// every action in the file and print its dimension and basis.
pub fn cmd_build_smash(loaded: &Loaded) -> Result<RunOutput, CmdError> {
    let mut out = RunOutput::new("build-smash");
    if loaded.partial_actions.is_empty() {
        return input_err("no partial_action section");
    }
    for (name, p) in &loaded.partial_actions {
        let smash = match p.side {
            Side::Left => left_smash(p),
            Side::Right => right_smash(p),
        };
        let s = match smash {
            Ok(s) => s,
            Err(e) => return validation_err(format!("smash of {name}: {e}")),
        };
        let rep = parthopf_core::algebra::check_algebra(&s.algebra);
        out.reports.push((format!("smash {name}"), rep));
        let mut note = format!("smash {name} dimension: {}\n", s.algebra.dim);
        let dim_h = p.hopf.dim();
        for (k, v) in s.subspace.basis.iter().enumerate() {
            let _ = write!(note, "  basis {k}:");
            for (idx, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let q = scalar_to_ratio(x);
                let (a, h) = match p.side {
                    Side::Left => (idx / dim_h, idx % dim_h),
                    Side::Right => (idx % p.algebra.dim, idx / p.algebra.dim),
                };
                if q.den == 1 {
                    let _ = write!(note, " {}·(a{a}#h{h})", q.num);
                } else {
                    let _ = write!(note, " {}/{}·(a{a}#h{h})", q.num, q.den);
                }
            }
            note.push('\n');
        }
        out.notes.push(note.trim_end().to_string());
    }
    Ok(out)
}

/// `decompose-gma`: split a ring action into block data.
pub fn cmd_decompose(loaded: &Loaded) -> Result<RunOutput, CmdError> {
    let mut out = RunOutput::new("decompose-gma");
    let (gname, (_, blocked)) = loaded
        .gmas
        .iter()
        .next()
        .ok_or(()) // replaced below
        .or_else(|_| input_err("no gma section"))?;
    let (pname, p) = loaded
        .partial_actions
        .iter()
        .find(|(_, p)| p.algebra.dim == blocked.total.dim)
        .ok_or(())
        .or_else(|_| input_err("no partial_action on the gma total algebra"))?;
    let data = match decompose(blocked, p) {
        Ok(d) => d,
        Err(e) => return gma_partial_err(e),
    };
    let rep = check_block_data(&data).map_err(|e| CmdError {
        code: 2,
        message: format!("{e}"),
    })?;
    out.reports
        .push((format!("decompose {gname} under {pname}"), rep));
    let n = data.datum.n;
    let mut note = String::new();
    for i in 0..n {
        for j in 0..n {
            matrix_note(&mut note, &format!("left module ({i},{j})"), data.left_module(i, j));
            matrix_note(&mut note, &format!("right module ({i},{j})"), data.right_module(i, j));
        }
    }
    out.notes.push(note.trim_end().to_string());
    Ok(out)
}

/// `synthesize-gma`: glue block data back into a ring action.
pub fn cmd_synthesize(loaded: &Loaded) -> Result<RunOutput, CmdError> {
    let mut out = RunOutput::new("synthesize-gma");
    let (bname, b) = loaded
        .block_data
        .iter()
        .next()
        .ok_or(())
        .or_else(|_| input_err("no block_data section"))?;
    let p = match synthesize(b) {
        Ok(p) => p,
        Err(e) => return gma_partial_err(e),
    };
    let rep = check_left_partial_action(&p, false).map_err(|e| CmdError {
        code: 2,
        message: format!("{e}"),
    })?;
    out.reports.push((format!("synthesized action of {bname}"), rep));
    let mut note = String::new();
    matrix_note(&mut note, "action", &p.action);
    out.notes.push(note.trim_end().to_string());
    Ok(out)
}

/// `group-datum <sub>`.
pub fn cmd_group_datum(loaded: &Loaded, sub: &str) -> Result<RunOutput, CmdError> {
    let mut out = RunOutput::new(&format!("group-datum {sub}"));
    match sub {
        "check" => {
            if loaded.group_datums.is_empty() {
                return input_err("no group_datum section");
            }
            for (name, d) in &loaded.group_datums {
                match check_group_datum(d) {
                    Ok(r) => out.reports.push((format!("group_datum {name}"), r)),
                    Err(e) => return group_datum_err(e),
                }
            }
        }
        "to-hopf" => {
            if loaded.group_datums.is_empty() {
                return input_err("no group_datum section");
            }
            for (name, d) in &loaded.group_datums {
                let data = match datum_to_theorem_data(d) {
                    Ok(x) => x,
                    Err(e) => return group_datum_err(e),
                };
                let rep = check_block_data(&data).map_err(|e| CmdError {
                    code: 2,
                    message: format!("{e}"),
                })?;
                out.reports.push((format!("theorem data of {name}"), rep));
                let mut note = String::new();
                for i in 0..data.datum.n {
                    for j in 0..data.datum.n {
                        matrix_note(
                            &mut note,
                            &format!("left module ({i},{j})"),
                            data.left_module(i, j),
                        );
                        matrix_note(
                            &mut note,
                            &format!("right module ({i},{j})"),
                            data.right_module(i, j),
                        );
                    }
                }
                out.notes.push(note.trim_end().to_string());
            }
        }
        "from-hopf" => {
            if loaded.block_data.is_empty() {
                return input_err("no block_data section");
            }
            for (name, b) in &loaded.block_data {
                let d = match theorem_data_to_datum(b) {
                    Ok(x) => x,
                    Err(e) => return group_datum_err(e),
                };
                match check_group_datum(&d) {
                    Ok(r) => out.reports.push((format!("datum of {name}"), r)),
                    Err(e) => return group_datum_err(e),
                }
                let mut note = String::new();
                for g in 0..d.group.order {
                    for i in 0..d.datum.n {
                        for j in 0..d.datum.n {
                            matrix_note(
                                &mut note,
                                &format!("gamma ({g},{i},{j})"),
                                d.gamma_ref(g, i, j),
                            );
                        }
                    }
                }
                out.notes.push(note.trim_end().to_string());
            }
        }
        "roundtrip" => {
            if loaded.group_datums.is_empty() && loaded.block_data.is_empty() {
                return input_err("no group_datum or block_data section");
            }
            for (name, d) in &loaded.group_datums {
                match theorem_roundtrip(TheoremRoundtrip::Datum(d)) {
                    Ok(r) => out.reports.push((format!("roundtrip of datum {name}"), r)),
                    Err(e) => return group_datum_err(e),
                }
            }
            for (name, b) in &loaded.block_data {
                match theorem_roundtrip(TheoremRoundtrip::Data(b)) {
                    Ok(r) => out.reports.push((format!("roundtrip of data {name}"), r)),
                    Err(e) => return group_datum_err(e),
                }
            }
        }
        _ => return input_err(format!("unknown group-datum subcommand `{sub}`")),
    }
    Ok(out)
}

fn morita_err<T>(e: MoritaError) -> Result<T, CmdError> {
    match e {
        MoritaError::Stage(stage, id) => validation_err(format!("stage {stage} failed at {id}")),
        other => input_err(format!("{other}")),
    }
}

/// `morita <sub>`. For `check-equivalence` the file must define partial
/// actions named `pa`, `pb`, and `pr` alongside the context.
pub fn cmd_morita(loaded: &Loaded, sub: &str) -> Result<RunOutput, CmdError> {
    let mut out = RunOutput::new(&format!("morita {sub}"));
    match sub {
        "check-context" => {
            if loaded.morita_contexts.is_empty() {
                return input_err("no morita_context section");
            }
            for (name, c) in &loaded.morita_contexts {
                match check_morita_context(c, true) {
                    Ok(r) => out.reports.push((format!("morita_context {name}"), r)),
                    Err(e) => return morita_err(e),
                }
            }
        }
        "check-equivalence" => {
            let (cname, c) = loaded
                .morita_contexts
                .iter()
                .next()
                .ok_or(())
                .or_else(|_| input_err("no morita_context section"))?;
            let get = |n: &str| {
                loaded
                    .partial_actions
                    .get(n)
                    .ok_or(())
                    .or_else(|_| input_err(format!("missing partial_action `{n}`")))
            };
            let (pa, pb, pr) = (get("pa")?, get("pb")?, get("pr")?);
            match check_morita_equivalent(pa, pb, c, pr) {
                Ok(r) => out.reports.push((format!("equivalence via {cname}"), r)),
                Err(e) => return morita_err(e),
            }
        }
        _ => return input_err(format!("unknown morita subcommand `{sub}`")),
    }
    Ok(out)
}

/// The canonical definition file of a builtin fixture.
pub fn fixture_file(name: &str) -> Option<DefinitionFile> {
    for fx in builtin_fixtures() {
        if fx.name != name {
            continue;
        }
        return Some(match fx.kind {
            FixtureKind::BlockedAction {
                blocked, action, ..
            } => {
                let field = match action.algebra.field {
                    Field::Rationals => FieldDecl::Rationals,
                    Field::Prime(p) => FieldDecl::Prime(p),
                };
                let mut sections: Vec<Section> = Vec::new();
                if let Some(g) = &action.hopf.group {
                    sections.push(group_section("g", g));
                    sections.push(hopf_group_section("H", "g"));
                } else {
                    sections.push(hopf_sweedler_section("H"));
                }
                let datum =
                    blocked_datum(&blocked).expect("builtin fixtures sit on their block grid");
                sections.push(gma_section("R", &datum));
                sections.push(partial_action_section("p", "H", ("gma", "R"), &action));
                DefinitionFile { field, sections }
            }
            FixtureKind::Datum(d) => {
                let field = match d.datum.field {
                    Field::Rationals => FieldDecl::Rationals,
                    Field::Prime(p) => FieldDecl::Prime(p),
                };
                let mut sections: Vec<Section> = Vec::new();
                sections.push(group_section("g", &d.group));
                sections.push(gma_section("R", &d.datum));
                let mut alpha_names = Vec::new();
                for (i, a) in d.alpha.iter().enumerate() {
                    let aname = format!("r{i}");
                    sections.push(build::algebra_section(&aname, &a.algebra));
                    let uname = format!("alpha{i}");
                    sections.push(group_action_section(&uname, "g", &aname, a));
                    alpha_names.push(uname);
                }
                sections.push(group_datum_section("d", "R", "g", &alpha_names, &d));
                DefinitionFile { field, sections }
            }
        });
    }
    None
}

/// The canonical block-data definition file derived from a blocked-action
/// fixture by decomposition. Used to exercise `synthesize-gma` and the
/// block_data file syntax.
pub fn fixture_block_data_file(name: &str) -> Option<DefinitionFile> {
    for fx in builtin_fixtures() {
        if fx.name != name {
            continue;
        }
        let FixtureKind::BlockedAction {
            blocked,
            action,
            invariant,
            ..
        } = fx.kind
        else {
            return None;
        };
        if !invariant {
            return None;
        }
        let data = decompose(&blocked, &action).ok()?;
        let field = match action.algebra.field {
            Field::Rationals => FieldDecl::Rationals,
            Field::Prime(p) => FieldDecl::Prime(p),
        };
        let mut sections: Vec<Section> = Vec::new();
        if let Some(g) = &action.hopf.group {
            sections.push(group_section("g", g));
            sections.push(hopf_group_section("H", "g"));
        } else {
            sections.push(hopf_sweedler_section("H"));
        }
        sections.push(gma_section("R", &data.datum));
        let mut diag_names = Vec::new();
        for (i, p) in data.diag_actions.iter().enumerate() {
            let aname = format!("r{i}");
            sections.push(build::algebra_section(&aname, &p.algebra));
            let pname = format!("diag{i}");
            sections.push(partial_action_section(
                &pname,
                "H",
                ("algebra", &aname),
                p,
            ));
            diag_names.push(pname);
        }
        sections.push(block_data_section("bd", "R", "H", &diag_names, &data));
        return Some(DefinitionFile { field, sections });
    }
    None
}

pub fn fixture_names() -> Vec<&'static str> {
    builtin_fixtures().iter().map(|f| f.name).collect()
}
