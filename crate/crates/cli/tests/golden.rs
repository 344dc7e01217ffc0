//! Golden tests: the committed definition files and check reports under
//! `fixtures/` must match what the current code regenerates, byte for byte.
//! Rerun `cargo run -p parthopf-cli --example gen_fixtures` after deliberate
//! format changes.

use std::fs;
use std::path::PathBuf;

use parthopf_cli::commands::{fixture_block_data_file, fixture_file, fixture_names};
use parthopf_cli::output::OutputFormat;
use parthopf_cli::{build, format, run, CommandKind, Invocation};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run_capture(inv: &Invocation) -> (i32, String) {
    let mut buf = Vec::new();
    let code = run(inv, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

fn check_invocation(fixture: &str) -> Invocation {
    Invocation {
        command: CommandKind::Check,
        deep: false,
        format: OutputFormat::Text,
        fixture: Some(fixture.to_string()),
        file: None,
    }
}

#[test]
fn definition_files_are_stable() {
    for name in fixture_names() {
        let committed = fs::read_to_string(fixtures_dir().join(format!("{name}.def")))
            .unwrap_or_else(|_| panic!("missing fixtures/{name}.def"));
        let regenerated = format::serialize(&fixture_file(name).unwrap());
        assert_eq!(committed, regenerated, "fixtures/{name}.def drifted");
        if let Some(bd) = fixture_block_data_file(name) {
            let committed =
                fs::read_to_string(fixtures_dir().join(format!("{name}.blockdata.def")))
                    .unwrap_or_else(|_| panic!("missing fixtures/{name}.blockdata.def"));
            assert_eq!(
                committed,
                format::serialize(&bd),
                "fixtures/{name}.blockdata.def drifted"
            );
        }
    }
}

#[test]
fn check_reports_are_stable() {
    for name in fixture_names() {
        let committed = fs::read_to_string(fixtures_dir().join(format!("{name}.check.txt")))
            .unwrap_or_else(|_| panic!("missing fixtures/{name}.check.txt"));
        let (code, out) = run_capture(&check_invocation(name));
        assert_eq!(code, 0, "check on {name} failed:\n{out}");
        assert_eq!(committed, out, "fixtures/{name}.check.txt drifted");
    }
}

#[test]
fn committed_files_parse_load_and_reserialize_identically() {
    for entry in fs::read_dir(fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("def") {
            continue;
        }
        let text = fs::read_to_string(&path).unwrap();
        let file = format::parse(&text)
            .unwrap_or_else(|e| panic!("{} does not parse: {e:?}", path.display()));
        assert_eq!(
            format::serialize(&file),
            text,
            "{} is not in canonical form",
            path.display()
        );
        build::load(&file)
            .unwrap_or_else(|e| panic!("{} does not load: {}", path.display(), e.message));
    }
}

#[test]
fn morita_equivalence_report_is_stable_and_passes() {
    let path = fixtures_dir().join("morita-sign.def");
    let inv = Invocation {
        command: CommandKind::Morita("check-equivalence".into()),
        deep: false,
        format: OutputFormat::Text,
        fixture: None,
        file: Some(path.to_string_lossy().into_owned()),
    };
    let (code, out) = run_capture(&inv);
    assert_eq!(code, 0, "morita check-equivalence failed:\n{out}");
    let committed =
        fs::read_to_string(fixtures_dir().join("morita-sign.morita.txt")).unwrap();
    assert_eq!(committed, out);
}

#[test]
fn structured_output_is_valid_json_with_the_expected_schema() {
    let mut inv = check_invocation("killing-z2-k");
    inv.format = OutputFormat::Structured;
    let (code, out) = run_capture(&inv);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "parthopf-report-v1");
    assert_eq!(v["pass"], true);
    assert!(v["reports"].as_array().unwrap().len() >= 2);
}

#[test]
fn exit_codes_cover_pass_fail_and_input_error() {
    // 0: a passing check.
    let (code, _) = run_capture(&check_invocation("killing-z2-k"));
    assert_eq!(code, 0);
    // 1: decomposing a non-invariant action names the offending block.
    let inv = Invocation {
        command: CommandKind::DecomposeGma,
        deep: false,
        format: OutputFormat::Text,
        fixture: Some("swap-z2-m2".to_string()),
        file: None,
    };
    let (code, out) = run_capture(&inv);
    assert_eq!(code, 1);
    assert!(out.contains("(0,0)"), "missing block witness: {out}");
    // 2: unknown fixture.
    let (code, _) = run_capture(&check_invocation("no-such-fixture"));
    assert_eq!(code, 2);
    // 2: unreadable file.
    let inv = Invocation {
        command: CommandKind::Check,
        deep: false,
        format: OutputFormat::Text,
        fixture: None,
        file: Some("/nonexistent.def".to_string()),
    };
    let (code, _) = run_capture(&inv);
    assert_eq!(code, 2);
    // 2: a file that fails to parse reports a location.
    let dir = std::env::temp_dir().join("parthopf-golden-tests");
    fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.def");
    fs::write(&bad, "field rationals\n\ngroup g\n  order two\n").unwrap();
    let inv = Invocation {
        command: CommandKind::Check,
        deep: false,
        format: OutputFormat::Text,
        fixture: None,
        file: Some(bad.to_string_lossy().into_owned()),
    };
    let (code, out) = run_capture(&inv);
    assert_eq!(code, 2);
    assert!(out.contains(":4:"), "missing line info: {out}");
}

#[test]
fn build_smash_reports_the_killing_dimension() {
    let inv = Invocation {
        command: CommandKind::BuildSmash,
        deep: false,
        format: OutputFormat::Text,
        fixture: Some("killing-z2-k".to_string()),
        file: None,
    };
    let (code, out) = run_capture(&inv);
    assert_eq!(code, 0);
    assert!(out.contains("dimension: 1"), "{out}");
}

#[test]
fn synthesize_round_trips_through_the_file_format() {
    // Decompose-then-synthesize through a serialized block_data file must
    // reproduce a passing action for an invariant fixture.
    let inv = Invocation {
        command: CommandKind::SynthesizeGma,
        deep: false,
        format: OutputFormat::Text,
        fixture: Some("conjugation-z2-m2".to_string()),
        file: None,
    };
    let (code, out) = run_capture(&inv);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result: pass"), "{out}");
}

#[test]
fn group_datum_workflows_run_from_the_committed_datum_file() {
    let path = fixtures_dir().join("z3-conjugation-datum.def");
    for sub in ["check", "to-hopf", "roundtrip"] {
        let inv = Invocation {
            command: CommandKind::GroupDatum(sub.to_string()),
            deep: false,
            format: OutputFormat::Text,
            fixture: None,
            file: Some(path.to_string_lossy().into_owned()),
        };
        let (code, out) = run_capture(&inv);
        assert_eq!(code, 0, "group-datum {sub} failed:\n{out}");
    }
}
