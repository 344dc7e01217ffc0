use clap::{Parser, Subcommand};
use parthopf_cli::{output::OutputFormat, run, CommandKind, Invocation};

/// Exact-arithmetic toolkit for partial Hopf actions on generalized matrix
/// algebras.
#[derive(Parser)]
#[command(name = "parthopf", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Also run the expensive coassociativity-level checks where available.
    #[arg(long, global = true)]
    deep: bool,
    /// Output format.
    #[arg(long, global = true, value_parser = ["text", "structured"], default_value = "text")]
    format: String,
    /// Use a builtin fixture instead of an input file.
    #[arg(long, global = true)]
    fixture: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify every object defined in the file.
    Check { file: Option<String> },
    /// Build the partial smash product of each action in the file.
    BuildSmash { file: Option<String> },
    /// Split a ring action into per-block data.
    DecomposeGma { file: Option<String> },
    /// Glue per-block data back into a ring action.
    SynthesizeGma { file: Option<String> },
    /// Group-datum workflows: check, to-hopf, from-hopf, roundtrip.
    GroupDatum {
        #[arg(value_parser = ["check", "to-hopf", "from-hopf", "roundtrip"])]
        sub: String,
        file: Option<String>,
    },
    /// Morita workflows: check-context, check-equivalence.
    Morita {
        #[arg(value_parser = ["check-context", "check-equivalence"])]
        sub: String,
        file: Option<String>,
    },
    /// Print a builtin fixture as a canonical definition file.
    EmitFixture { name: String },
    /// List the builtin fixture names.
    ListFixtures,
}

fn main() {
    let cli = Cli::parse();
    let (command, file) = match cli.command {
        Cmd::Check { file } => (CommandKind::Check, file),
        Cmd::BuildSmash { file } => (CommandKind::BuildSmash, file),
        Cmd::DecomposeGma { file } => (CommandKind::DecomposeGma, file),
        Cmd::SynthesizeGma { file } => (CommandKind::SynthesizeGma, file),
        Cmd::GroupDatum { sub, file } => (CommandKind::GroupDatum(sub), file),
        Cmd::Morita { sub, file } => (CommandKind::Morita(sub), file),
        Cmd::EmitFixture { name } => (CommandKind::EmitFixture(name), None),
        Cmd::ListFixtures => (CommandKind::ListFixtures, None),
    };
    let inv = Invocation {
        command,
        deep: cli.deep,
        format: if cli.format == "structured" {
            OutputFormat::Structured
        } else {
            OutputFormat::Text
        },
        fixture: cli.fixture,
        file,
    };
    let mut stdout = std::io::stdout();
    std::process::exit(run(&inv, &mut stdout));
}
