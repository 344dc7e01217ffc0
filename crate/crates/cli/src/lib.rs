//! Command-line front end: a plain-text definition-file format, loaders
//! that turn parsed files into core objects, and the command layer.

pub mod build;
pub mod commands;
pub mod format;
pub mod output;

use std::path::Path;

use commands::CmdError;
use output::{OutputFormat, RunOutput};

/// Parsed command line, independent of clap so tests can drive it directly.
pub struct Invocation {
    pub command: CommandKind,
    pub deep: bool,
    pub format: OutputFormat,
    pub fixture: Option<String>,
    pub file: Option<String>,
}

pub enum CommandKind {
    Check,
    BuildSmash,
    DecomposeGma,
    SynthesizeGma,
    GroupDatum(String),
    Morita(String),
    EmitFixture(String),
    ListFixtures,
}

fn read_definition(inv: &Invocation) -> Result<format::DefinitionFile, CmdError> {
    if let Some(name) = &inv.fixture {
        // synthesize-gma consumes block data, so a fixture is delivered in
        // its decomposed form for that command.
        let file = if matches!(inv.command, CommandKind::SynthesizeGma) {
            commands::fixture_block_data_file(name)
        } else {
            commands::fixture_file(name)
        };
        return file.ok_or_else(|| CmdError {
            code: 2,
            message: format!("unknown or unsuitable fixture `{name}`"),
        });
    }
    let Some(path) = &inv.file else {
        return Err(CmdError {
            code: 2,
            message: "no input: pass a file path or --fixture <name>".into(),
        });
    };
    let text = std::fs::read_to_string(Path::new(path)).map_err(|e| CmdError {
        code: 2,
        message: format!("cannot read {path}: {e}"),
    })?;
    format::parse(&text).map_err(|errs| {
        let mut msg = String::new();
        for e in &errs {
            msg.push_str(&format!("{path}:{}:{}: {}\n", e.line, e.col, e.message));
        }
        CmdError {
            code: 2,
            message: msg.trim_end().to_string(),
        }
    })
}

/// Runs one invocation, writing human or structured output to `w`.
/// Returns the process exit code: 0 pass, 1 validation failure, 2 input error.
pub fn run(inv: &Invocation, w: &mut dyn std::io::Write) -> i32 {
    let result: Result<RunOutput, CmdError> = (|| match &inv.command {
        CommandKind::EmitFixture(name) => {
            let file = commands::fixture_file(name).ok_or_else(|| CmdError {
                code: 2,
                message: format!("unknown fixture `{name}`"),
            })?;
            let mut out = RunOutput::new(&format!("emit-fixture {name}"));
            out.notes.push(format::serialize(&file).trim_end().to_string());
            Ok(out)
        }
        CommandKind::ListFixtures => {
            let mut out = RunOutput::new("list-fixtures");
            out.notes.push(commands::fixture_names().join("\n"));
            Ok(out)
        }
        command => {
            let file = read_definition(inv)?;
            let loaded = build::load(&file).map_err(|e| CmdError {
                code: 2,
                message: format!("line {}: {}", e.line, e.message),
            })?;
            match command {
                CommandKind::Check => commands::cmd_check(&loaded, inv.deep),
                CommandKind::BuildSmash => commands::cmd_build_smash(&loaded),
                CommandKind::DecomposeGma => commands::cmd_decompose(&loaded),
                CommandKind::SynthesizeGma => commands::cmd_synthesize(&loaded),
                CommandKind::GroupDatum(sub) => commands::cmd_group_datum(&loaded, sub),
                CommandKind::Morita(sub) => commands::cmd_morita(&loaded, sub),
                CommandKind::EmitFixture(_) | CommandKind::ListFixtures => unreachable!(),
            }
        }
    })();
    match result {
        Ok(out) => {
            let _ = w.write_all(out.render(inv.format).as_bytes());
            if out.pass() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(w, "error: {}", e.message);
            e.code
        }
    }
}
