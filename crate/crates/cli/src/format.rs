//! The definition-file format: a line-based, exact-scalar description of
//! groups, Hopf algebras, algebras, block grids, actions, datums, and
//! Morita contexts.
//!
//! Grammar (one construct per line):
//!
//! ```text
//! file      := line*
//! line      := blank | comment | header | entry
//! comment   := '#' <anything>
//! header    := 'field' ('rationals' | 'prime' <p>)
//!            | <kind> <name>
//! entry     := '  ' <key> <integer>*      (two-space indent)
//! kind      := 'group' | 'hopf' | 'algebra' | 'gma' | 'partial_action'
//!            | 'group_action' | 'group_datum' | 'morita_context'
//!            | 'block_data'
//! ```
//!
//! All scalars are written as integer pairs `<num> <den>`; over a prime
//! field they are reduced modulo `p` at load time (the denominator must be
//! invertible). Matrix entries are sparse `<row> <col> <num> <den>` tuples;
//! omitted entries are zero. Parsing is total: every problem is reported as
//! an error with a line and column, never a panic.

use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A parse or structure error with its location (1-based line, 1-based
/// column of the offending token).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

/// An exact scalar literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldDecl {
    Rationals,
    Prime(u64),
}

/// One parsed entry line: a key and its integer arguments, with the line
/// number kept for later (load-time) diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub line: usize,
    pub key: String,
    pub args: Vec<i64>,
    /// Non-numeric arguments (names); mutually exclusive with `args` except
    /// for keys that take a name list.
    pub names: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SectionKind {
    Group,
    Hopf,
    Algebra,
    Gma,
    PartialAction,
    GroupAction,
    GroupDatum,
    MoritaContext,
    BlockData,
}

impl SectionKind {
    pub fn keyword(self) -> &'static str {
        match self {
            SectionKind::Group => "group",
            SectionKind::Hopf => "hopf",
            SectionKind::Algebra => "algebra",
            SectionKind::Gma => "gma",
            SectionKind::PartialAction => "partial_action",
            SectionKind::GroupAction => "group_action",
            SectionKind::GroupDatum => "group_datum",
            SectionKind::MoritaContext => "morita_context",
            SectionKind::BlockData => "block_data",
        }
    }

    fn from_keyword(s: &str) -> Option<SectionKind> {
        Some(match s {
            "group" => SectionKind::Group,
            "hopf" => SectionKind::Hopf,
            "algebra" => SectionKind::Algebra,
            "gma" => SectionKind::Gma,
            "partial_action" => SectionKind::PartialAction,
            "group_action" => SectionKind::GroupAction,
            "group_datum" => SectionKind::GroupDatum,
            "morita_context" => SectionKind::MoritaContext,
            "block_data" => SectionKind::BlockData,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub kind: SectionKind,
    pub name: String,
    pub line: usize,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionFile {
    pub field: FieldDecl,
    pub sections: Vec<Section>,
}

impl DefinitionFile {
    pub fn section(&self, kind: SectionKind, name: &str) -> Option<&Section> {
        self.sections
            .iter()
            .find(|s| s.kind == kind && s.name == name)
    }

    pub fn sections_of(&self, kind: SectionKind) -> impl Iterator<Item = &Section> {
        self.sections.iter().filter(move |s| s.kind == kind)
    }
}

/// Keys whose arguments are names rather than integers.
fn name_keys(key: &str) -> bool {
    matches!(
        key,
        "group" | "algebra" | "gma" | "hopf" | "alpha" | "diag" | "a" | "b" | "variant" | "side"
    )
}

/// Parses a definition file. Collects every error; returns the file only
/// when there are none.
pub fn parse(text: &str) -> Result<DefinitionFile, Vec<ParseError>> {
    let mut errors = Vec::new();
    let mut field: Option<FieldDecl> = None;
    let mut sections: Vec<Section> = Vec::new();
    let mut seen: BTreeMap<(SectionKind, String), usize> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let indented = line.starts_with("  ");
        let tokens: Vec<(usize, &str)> = tokenize(line);
        if tokens.is_empty() {
            continue;
        }
        if indented {
            let (col0, key) = tokens[0];
            let Some(section) = sections.last_mut() else {
                errors.push(ParseError {
                    line: lineno,
                    col: col0 + 1,
                    message: String::from("entry before any section header"),
                });
                continue;
            };
            let mut args = Vec::new();
            let mut names = Vec::new();
            let mut bad = false;
            for &(col, tok) in &tokens[1..] {
                if let Ok(v) = tok.parse::<i64>() {
                    args.push(v);
                } else if name_keys(key) && is_name(tok) {
                    names.push(tok.to_string());
                } else {
                    errors.push(ParseError {
                        line: lineno,
                        col: col + 1,
                        message: format!("expected an integer, found `{tok}`"),
                    });
                    bad = true;
                }
            }
            if !bad {
                section.entries.push(Entry {
                    line: lineno,
                    key: key.to_string(),
                    args,
                    names,
                });
            }
            continue;
        }

        // header line
        let (col0, head) = tokens[0];
        if head == "field" {
            if field.is_some() {
                errors.push(ParseError {
                    line: lineno,
                    col: col0 + 1,
                    message: String::from("duplicate field declaration"),
                });
                continue;
            }
            match tokens.get(1) {
                Some(&(_, "rationals")) => field = Some(FieldDecl::Rationals),
                Some(&(_, "prime")) => match tokens.get(2) {
                    Some(&(col, tok)) => match tok.parse::<u64>() {
                        Ok(p) if p >= 2 => field = Some(FieldDecl::Prime(p)),
                        _ => errors.push(ParseError {
                            line: lineno,
                            col: col + 1,
                            message: String::from("prime required"),
                        }),
                    },
                    None => errors.push(ParseError {
                        line: lineno,
                        col: line.len() + 1,
                        message: String::from("prime required"),
                    }),
                },
                Some(&(col, tok)) => errors.push(ParseError {
                    line: lineno,
                    col: col + 1,
                    message: format!("unknown field `{tok}`"),
                }),
                None => errors.push(ParseError {
                    line: lineno,
                    col: line.len() + 1,
                    message: String::from("missing field kind"),
                }),
            }
            continue;
        }
        let Some(kind) = SectionKind::from_keyword(head) else {
            errors.push(ParseError {
                line: lineno,
                col: col0 + 1,
                message: format!("unknown section `{head}`"),
            });
            continue;
        };
        let Some(&(ncol, name)) = tokens.get(1) else {
            errors.push(ParseError {
                line: lineno,
                col: line.len() + 1,
                message: String::from("missing section name"),
            });
            continue;
        };
        if !is_name(name) {
            errors.push(ParseError {
                line: lineno,
                col: ncol + 1,
                message: format!("invalid section name `{name}`"),
            });
            continue;
        }
        if seen.insert((kind, name.to_string()), lineno).is_some() {
            errors.push(ParseError {
                line: lineno,
                col: ncol + 1,
                message: format!("duplicate {} section `{name}`", kind.keyword()),
            });
            continue;
        }
        sections.push(Section {
            kind,
            name: name.to_string(),
            line: lineno,
            entries: Vec::new(),
        });
    }

    let field = match field {
        Some(f) => f,
        None => {
            errors.push(ParseError {
                line: 1,
                col: 1,
                message: String::from("missing field declaration"),
            });
            FieldDecl::Rationals
        }
    };
    if errors.is_empty() {
        Ok(DefinitionFile { field, sections })
    } else {
        Err(errors)
    }
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        && s.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
}

fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Serializes in canonical form: `field` first, then sections in kind order
/// and, within a kind, in first-appearance order; entries exactly as stored.
/// `parse(serialize(f)) == f` up to line numbers, and serializing again is
/// byte-identical.
pub fn serialize(f: &DefinitionFile) -> String {
    let mut out = String::new();
    match f.field {
        FieldDecl::Rationals => out.push_str("field rationals\n"),
        FieldDecl::Prime(p) => {
            let _ = writeln!(out, "field prime {p}");
        }
    }
    let mut order: Vec<&Section> = f.sections.iter().collect();
    order.sort_by_key(|s| s.kind);
    for s in order {
        out.push('\n');
        let _ = writeln!(out, "{} {}", s.kind.keyword(), s.name);
        for e in &s.entries {
            out.push_str("  ");
            out.push_str(&e.key);
            for n in &e.names {
                out.push(' ');
                out.push_str(n);
            }
            for a in &e.args {
                let _ = write!(out, " {a}");
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file_parses() {
        let text = "field rationals\n\nalgebra A\n  dim 1\n  mult 0 0 1 1\n  unit 0 1 1\n";
        let f = parse(text).unwrap();
        assert_eq!(f.field, FieldDecl::Rationals);
        assert_eq!(f.sections.len(), 1);
        assert_eq!(f.sections[0].entries.len(), 3);
    }

    #[test]
    fn zero_modulus_is_rejected() {
        let errs = parse("field prime 0\n").unwrap_err();
        assert!(errs[0].message.contains("prime required"));
    }

    #[test]
    fn garbage_is_reported_with_location_not_panic() {
        let errs = parse("field rationals\nwat A\n  x y z\nalgebra A\n  dim q\n").unwrap_err();
        assert!(errs.iter().any(|e| e.line == 2));
        assert!(errs.iter().any(|e| e.line == 5 && e.message.contains("integer")));
    }

    #[test]
    fn duplicate_sections_are_rejected() {
        let errs = parse("field rationals\nalgebra A\nalgebra A\n").unwrap_err();
        assert!(errs[0].message.contains("duplicate"));
    }

    #[test]
    fn serialize_then_parse_is_identity_and_stable() {
        let text = "field prime 7\nalgebra A\n  dim 2\n  mult 0 0 1 1\n  unit 0 1 1\n\ngroup g\n  order 2\n  table 0 1 1 0\n";
        let f = parse(text).unwrap();
        let canon = serialize(&f);
        let f2 = parse(&canon).unwrap();
        assert_eq!(serialize(&f2), canon);
        // structural identity modulo line numbers
        assert_eq!(f2.field, f.field);
        assert_eq!(f2.sections.len(), f.sections.len());
    }
}
