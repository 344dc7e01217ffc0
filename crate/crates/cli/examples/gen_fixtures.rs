//! Regenerates the definition files and golden check reports under
//! `fixtures/`. The golden tests compare against these byte for byte, so
//! rerun this after any deliberate change to the canonical format:
//!
//! ```text
//! cargo run -p parthopf-cli --example gen_fixtures
//! ```

use std::fs;
use std::path::PathBuf;

use parthopf_cli::commands::{fixture_block_data_file, fixture_file, fixture_names};
use parthopf_cli::output::OutputFormat;
use parthopf_cli::{format, run, CommandKind, Invocation};

use parthopf_core::algebra::FinDimAlgebra;
use parthopf_core::gma::assemble;
use parthopf_core::hopf::{group_algebra, GroupTable};
use parthopf_core::linalg::{pair_index, Matrix};
use parthopf_core::morita::{morita_ring, MoritaContextData};
use parthopf_core::paction::{trivial_left_action, PartialActionMap, Side};
use parthopf_core::scalar::{Field, Scalar};

use parthopf_cli::build::{
    algebra_section, gma_section, group_section, hopf_group_section, morita_context_section,
    partial_action_section,
};
use parthopf_cli::format::{DefinitionFile, FieldDecl};

fn q(n: i64) -> Scalar {
    Field::Rationals.from_i64(n)
}

/// A Morita equivalence example: the sign action of ℤ/2 on M₂(𝕜) restricts
/// to trivial actions on both scalar corners of the trivial context.
fn morita_sign_file() -> DefinitionFile {
    let f = Field::Rationals;
    let one = Matrix::from_rows(f, &[vec![q(1)]]).unwrap();
    let scalar = FinDimAlgebra::new(f, 1, vec![q(1)], vec![q(1)]).unwrap();
    let c = MoritaContextData {
        a: scalar.clone(),
        b: scalar,
        dim_m: 1,
        dim_n: 1,
        m_left: one.clone(),
        m_right: one.clone(),
        n_left: one.clone(),
        n_right: one.clone(),
        mu: one.clone(),
        nu: one,
    };
    let ring = morita_ring(&c).unwrap();
    let r = assemble(&ring);
    let h = group_algebra(&GroupTable::cyclic(2), f);
    let mut action = Matrix::zero(f, 4, 8);
    let signs = [q(1), q(-1), q(-1), q(1)];
    for b in 0..4 {
        *action.at_mut(b, pair_index(0, 4, b)) = q(1);
        *action.at_mut(b, pair_index(1, 4, b)) = signs[b].clone();
    }
    let pr = PartialActionMap {
        hopf: h.clone(),
        algebra: r.total.clone(),
        side: Side::Left,
        action,
    };
    let pa = trivial_left_action(&h, &c.a);
    let pb = trivial_left_action(&h, &c.b);
    let sections = vec![
        group_section("g", &GroupTable::cyclic(2)),
        hopf_group_section("H", "g"),
        algebra_section("a", &c.a),
        algebra_section("b", &c.b),
        gma_section("R", &ring),
        morita_context_section("c", "a", "b", &c),
        partial_action_section("pa", "H", ("algebra", "a"), &pa),
        partial_action_section("pb", "H", ("algebra", "b"), &pb),
        partial_action_section("pr", "H", ("gma", "R"), &pr),
    ];
    DefinitionFile {
        field: FieldDecl::Rationals,
        sections,
    }
}

fn run_to_string(inv: &Invocation) -> String {
    let mut buf = Vec::new();
    let code = run(inv, &mut buf);
    assert_eq!(code, 0, "golden run failed:\n{}", String::from_utf8_lossy(&buf));
    String::from_utf8(buf).unwrap()
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    fs::create_dir_all(&dir).unwrap();
    for name in fixture_names() {
        let file = fixture_file(name).unwrap();
        fs::write(dir.join(format!("{name}.def")), format::serialize(&file)).unwrap();
        let inv = Invocation {
            command: CommandKind::Check,
            deep: false,
            format: OutputFormat::Text,
            fixture: Some(name.to_string()),
            file: None,
        };
        fs::write(dir.join(format!("{name}.check.txt")), run_to_string(&inv)).unwrap();
        if let Some(bd) = fixture_block_data_file(name) {
            fs::write(
                dir.join(format!("{name}.blockdata.def")),
                format::serialize(&bd),
            )
            .unwrap();
        }
    }
    let morita = morita_sign_file();
    let path = dir.join("morita-sign.def");
    fs::write(&path, format::serialize(&morita)).unwrap();
    let inv = Invocation {
        command: CommandKind::Morita("check-equivalence".into()),
        deep: false,
        format: OutputFormat::Text,
        fixture: None,
        file: Some(path.to_string_lossy().into_owned()),
    };
    fs::write(dir.join("morita-sign.morita.txt"), run_to_string(&inv)).unwrap();
    println!("regenerated fixtures in {}", dir.display());
}
