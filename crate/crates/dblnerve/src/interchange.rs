//! The JSON interchange format: one object per file, with a `kind` field
//! naming what the rest of the object describes.
//!
//! Identities are never written. Names of implicit cells follow the tables:
//! `id[A]` for identity morphisms and 1-cells, `id[f]` for identity 2-cells,
//! `e[A]` for vertical identities, `e[f]` and `id[u]` for identity squares.

use std::collections::HashSet;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use crate::cat::{identity_name, FiniteCategory, RawCategory};
use crate::dbl::{vertical_identity_name, FiniteDoubleCategory, RawDoubleCategory, RawFunctor};
use crate::present::DblPresentation;
use crate::two::{FiniteTwoCategory, RawTwoCategory, RawTwoFunctor};

pub const KINDS: [&str; 6] = [
    "category",
    "two-category",
    "double-category",
    "presentation",
    "double-functor",
    "two-functor",
];

/// A document as written, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Category(RawCategory),
    TwoCategory(RawTwoCategory),
    DoubleCategory(RawDoubleCategory),
    Presentation(DblPresentation),
    DoubleFunctor(RawFunctor),
    TwoFunctor(RawTwoFunctor),
}

/// A validated document. Functors stay in raw form until their source and
/// target are known.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Loaded {
    Category(FiniteCategory),
    TwoCategory(FiniteTwoCategory),
    DoubleCategory(FiniteDoubleCategory),
    Presentation(DblPresentation),
    DoubleFunctor(RawFunctor),
    TwoFunctor(RawTwoFunctor),
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: not JSON (line {line}, column {column}): {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: at `{at}`: {message}")]
    Schema {
        path: String,
        at: String,
        message: String,
    },
    #[error("{path}: {source}")]
    Validation { path: String, source: crate::Error },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Category(_) => "category",
            Document::TwoCategory(_) => "two-category",
            Document::DoubleCategory(_) => "double-category",
            Document::Presentation(_) => "presentation",
            Document::DoubleFunctor(_) => "double-functor",
            Document::TwoFunctor(_) => "two-functor",
        }
    }

    pub fn to_json(&self) -> Value {
        let body = match self {
            Document::Category(x) => to_value(x),
            Document::TwoCategory(x) => to_value(x),
            Document::DoubleCategory(x) => to_value(x),
            Document::Presentation(x) => to_value(x),
            Document::DoubleFunctor(x) => to_value(x),
            Document::TwoFunctor(x) => to_value(x),
        };
        let mut map = match body {
            Value::Object(m) => m,
            _ => unreachable!("documents serialize to objects"),
        };
        map.insert("kind".into(), Value::String(self.kind().into()));
        Value::Object(map)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_string_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

impl From<&FiniteCategory> for Document {
    fn from(c: &FiniteCategory) -> Self {
        Document::Category(c.to_raw())
    }
}

impl From<&FiniteTwoCategory> for Document {
    fn from(a: &FiniteTwoCategory) -> Self {
        Document::TwoCategory(a.to_raw())
    }
}

impl From<&FiniteDoubleCategory> for Document {
    fn from(a: &FiniteDoubleCategory) -> Self {
        Document::DoubleCategory(a.to_raw())
    }
}

impl From<&DblPresentation> for Document {
    fn from(p: &DblPresentation) -> Self {
        Document::Presentation(p.clone())
    }
}

/// Parse and schema-check a document. `path` is only used in messages.
pub fn parse(text: &str, path: &str) -> Result<Document, LoadError> {
    let value: Value = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        path: path.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let schema = |at: &str, message: String| LoadError::Schema {
        path: path.into(),
        at: at.into(),
        message,
    };
    let Value::Object(mut map) = value else {
        return Err(schema("", "a document is a JSON object".into()));
    };
    let kind = match map.remove("kind") {
        Some(Value::String(k)) => k,
        Some(_) => return Err(schema("kind", "must be a string".into())),
        None => {
            return Err(schema(
                "kind",
                format!("missing; one of {}", KINDS.join(", ")),
            ))
        }
    };
    let body = Value::Object(map);
    let doc = match kind.as_str() {
        "category" => Document::Category(typed(body, path)?),
        "two-category" => Document::TwoCategory(typed(body, path)?),
        "double-category" => Document::DoubleCategory(typed(body, path)?),
        "presentation" => Document::Presentation(typed(body, path)?),
        "double-functor" => Document::DoubleFunctor(typed(body, path)?),
        "two-functor" => Document::TwoFunctor(typed(body, path)?),
        other => {
            return Err(schema(
                "kind",
                format!("unknown kind `{other}`; one of {}", KINDS.join(", ")),
            ))
        }
    };
    if let Some((at, message)) = undeclared(&doc) {
        return Err(schema(&at, message));
    }
    Ok(doc)
}

fn typed<T: DeserializeOwned>(body: Value, path: &str) -> Result<T, LoadError> {
    serde_path_to_error::deserialize(body).map_err(|e| LoadError::Schema {
        path: path.into(),
        at: e.path().to_string(),
        message: e.into_inner().to_string(),
    })
}

/// Validate a parsed document with the module that owns its kind.
pub fn validate(doc: &Document, path: &str) -> Result<Loaded, LoadError> {
    let wrap = |source| LoadError::Validation {
        path: path.into(),
        source,
    };
    Ok(match doc {
        Document::Category(r) => Loaded::Category(FiniteCategory::validate(r).map_err(wrap)?),
        Document::TwoCategory(r) => {
            Loaded::TwoCategory(FiniteTwoCategory::validate(r).map_err(wrap)?)
        }
        Document::DoubleCategory(r) => {
            Loaded::DoubleCategory(FiniteDoubleCategory::validate(r).map_err(wrap)?)
        }
        Document::Presentation(p) => {
            p.validate().map_err(wrap)?;
            Loaded::Presentation(p.clone())
        }
        Document::DoubleFunctor(r) => Loaded::DoubleFunctor(r.clone()),
        Document::TwoFunctor(r) => Loaded::TwoFunctor(r.clone()),
    })
}

pub fn load_str(text: &str, path: &str) -> Result<Loaded, LoadError> {
    validate(&parse(text, path)?, path)
}

pub fn load(path: impl AsRef<Path>) -> Result<Loaded, LoadError> {
    let p = path.as_ref();
    let shown = p.display().to_string();
    let text = std::fs::read_to_string(p).map_err(|e| LoadError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    load_str(&text, &shown)
}

struct Names<'a> {
    declared: HashSet<String>,
    field: &'a str,
}

impl Names<'_> {
    fn missing<'s>(
        &self,
        items: impl IntoIterator<Item = (String, &'s str)>,
    ) -> Option<(String, String)> {
        items
            .into_iter()
            .find(|(_, n)| !self.declared.contains(*n))
            .map(|(at, n)| (at, format!("`{n}` is not a declared {}", self.field)))
    }
}

/// The first reference to an undeclared name, as `(location, message)`.
fn undeclared(doc: &Document) -> Option<(String, String)> {
    match doc {
        Document::Category(r) => {
            let objects = Names {
                declared: r.objects.iter().cloned().collect(),
                field: "object",
            };
            let mut arrows = Names {
                declared: r.morphisms.iter().map(|m| m.name.clone()).collect(),
                field: "morphism",
            };
            arrows
                .declared
                .extend(r.objects.iter().map(|o| identity_name(o)));
            objects
                .missing(r.morphisms.iter().enumerate().flat_map(|(i, m)| {
                    [
                        (format!("morphisms[{i}].src"), m.src.as_str()),
                        (format!("morphisms[{i}].tgt"), m.tgt.as_str()),
                    ]
                }))
                .or_else(|| arrows.missing(triples("compose", &r.compose)))
        }
        Document::TwoCategory(r) => {
            let objects = Names {
                declared: r.objects.iter().cloned().collect(),
                field: "object",
            };
            let mut c1 = Names {
                declared: r.cells1.iter().map(|m| m.name.clone()).collect(),
                field: "1-cell",
            };
            c1.declared
                .extend(r.objects.iter().map(|o| identity_name(o)));
            let mut c2 = Names {
                declared: r.cells2.iter().map(|m| m.name.clone()).collect(),
                field: "2-cell",
            };
            c2.declared
                .extend(c1.declared.iter().map(|f| identity_name(f)));
            objects
                .missing(r.cells1.iter().enumerate().flat_map(|(i, m)| {
                    [
                        (format!("cells1[{i}].src"), m.src.as_str()),
                        (format!("cells1[{i}].tgt"), m.tgt.as_str()),
                    ]
                }))
                .or_else(|| {
                    c1.missing(r.cells2.iter().enumerate().flat_map(|(i, m)| {
                        [
                            (format!("cells2[{i}].src"), m.src.as_str()),
                            (format!("cells2[{i}].tgt"), m.tgt.as_str()),
                        ]
                    }))
                })
                .or_else(|| c1.missing(triples("compose1", &r.compose1)))
                .or_else(|| c2.missing(triples("vcompose", &r.vcompose)))
                .or_else(|| c2.missing(triples("hcompose", &r.hcompose)))
        }
        Document::DoubleCategory(r) => {
            let objects = Names {
                declared: r.objects.iter().cloned().collect(),
                field: "object",
            };
            let mut h = Names {
                declared: r.horizontal.iter().map(|m| m.name.clone()).collect(),
                field: "horizontal morphism",
            };
            h.declared
                .extend(r.objects.iter().map(|o| identity_name(o)));
            let mut v = Names {
                declared: r.vertical.iter().map(|m| m.name.clone()).collect(),
                field: "vertical morphism",
            };
            v.declared
                .extend(r.objects.iter().map(|o| vertical_identity_name(o)));
            let mut sq = Names {
                declared: r.squares.iter().map(|s| s.name.clone()).collect(),
                field: "square",
            };
            sq.declared
                .extend(h.declared.iter().map(|f| vertical_identity_name(f)));
            sq.declared
                .extend(r.vertical.iter().map(|u| identity_name(&u.name)));
            let ends = |field: &str, arrows: &[crate::cat::RawArrow]| -> Vec<(String, String)> {
                arrows
                    .iter()
                    .enumerate()
                    .flat_map(|(i, m)| {
                        [
                            (format!("{field}[{i}].src"), m.src.clone()),
                            (format!("{field}[{i}].tgt"), m.tgt.clone()),
                        ]
                    })
                    .collect()
            };
            let he = ends("horizontal", &r.horizontal);
            let ve = ends("vertical", &r.vertical);
            objects
                .missing(he.iter().chain(&ve).map(|(a, n)| (a.clone(), n.as_str())))
                .or_else(|| {
                    h.missing(r.squares.iter().enumerate().flat_map(|(i, s)| {
                        [
                            (format!("squares[{i}].top"), s.top.as_str()),
                            (format!("squares[{i}].bottom"), s.bottom.as_str()),
                        ]
                    }))
                })
                .or_else(|| {
                    v.missing(r.squares.iter().enumerate().flat_map(|(i, s)| {
                        [
                            (format!("squares[{i}].left"), s.left.as_str()),
                            (format!("squares[{i}].right"), s.right.as_str()),
                        ]
                    }))
                })
                .or_else(|| h.missing(triples("hcompose", &r.hcompose)))
                .or_else(|| v.missing(triples("vcompose", &r.vcompose)))
                .or_else(|| sq.missing(triples("hcompose_squares", &r.hcompose_squares)))
                .or_else(|| sq.missing(triples("vcompose_squares", &r.vcompose_squares)))
        }
        Document::Presentation(_) | Document::DoubleFunctor(_) | Document::TwoFunctor(_) => None,
    }
}

fn triples<'a>(
    field: &'a str,
    rows: &'a [[String; 3]],
) -> impl Iterator<Item = (String, &'a str)> + 'a {
    rows.iter().enumerate().flat_map(move |(i, row)| {
        row.iter()
            .enumerate()
            .map(move |(j, n)| (format!("{field}[{i}][{j}]"), n.as_str()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn corpus_round_trips() {
        for (_, a) in corpus::double_categories() {
            let text = Document::from(&a).to_string_pretty();
            assert_eq!(load_str(&text, "mem").unwrap(), Loaded::DoubleCategory(a));
        }
        for (_, a) in corpus::two_categories() {
            let text = Document::from(&a).to_string_pretty();
            assert_eq!(load_str(&text, "mem").unwrap(), Loaded::TwoCategory(a));
        }
    }

    #[test]
    fn undeclared_boundary_names_the_field() {
        let text = r#"{"kind": "double-category", "objects": ["A", "B"],
            "horizontal": [{"name": "f", "src": "A", "tgt": "B"}],
            "squares": [{"name": "s", "top": "f", "bottom": "g", "left": "e[A]", "right": "e[B]"}]}"#;
        match parse(text, "mem") {
            Err(LoadError::Schema { at, .. }) => assert_eq!(at, "squares[0].bottom"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn type_errors_carry_a_path() {
        let text =
            r#"{"kind": "two-category", "objects": ["a"], "cells1": [{"name": "f", "src": 3}]}"#;
        match parse(text, "mem") {
            Err(LoadError::Schema { at, .. }) => assert!(at.starts_with("cells1[0]"), "{at}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bad_json_and_bad_kind() {
        assert!(matches!(parse("{", "mem"), Err(LoadError::Parse { .. })));
        assert!(matches!(
            parse(r#"{"kind": "monoid"}"#, "mem"),
            Err(LoadError::Schema { .. })
        ));
        assert!(matches!(
            parse(r#"{"objects": []}"#, "mem"),
            Err(LoadError::Schema { .. })
        ));
    }
}
