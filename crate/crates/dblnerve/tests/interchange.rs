//! The shipped JSON files against the in-code corpus.

use std::path::PathBuf;

use dblnerve::corpus;
use dblnerve::interchange::{load, Loaded};
use dblnerve::shapes::{dbl_point, free_square, oriental_adj_presentation, oriental_inv};

fn file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples")
        .join(name)
}

#[test]
fn two_categories_match() {
    let cases = [
        ("iso.json", corpus::iso()),
        ("arrow.json", corpus::arrow()),
        ("involution.json", corpus::involution()),
        ("graded.json", corpus::graded()),
        ("oriental-inv-2.json", oriental_inv(2)),
    ];
    for (name, a) in cases {
        assert_eq!(load(file(name)).unwrap(), Loaded::TwoCategory(a), "{name}");
    }
}

#[test]
fn double_categories_match() {
    let cases = [
        ("free-square.json", free_square()),
        ("point.json", dbl_point()),
        ("h-iso.json", corpus::h(&corpus::iso())),
        ("hsim-iso.json", corpus::hsim(&corpus::iso())),
        ("h-arrow.json", corpus::h(&corpus::arrow())),
        ("hsim-arrow.json", corpus::hsim(&corpus::arrow())),
    ];
    for (name, a) in cases {
        assert_eq!(
            load(file(name)).unwrap(),
            Loaded::DoubleCategory(a),
            "{name}"
        );
    }
}

#[test]
fn presentation_matches() {
    assert_eq!(
        load(file("oriental-adj-2.json")).unwrap(),
        Loaded::Presentation(oriental_adj_presentation(2).0)
    );
}

#[test]
fn maps_are_functors() {
    for name in [
        "maps/h-iso-to-hsim-iso.json",
        "maps/free-square-to-point.json",
    ] {
        assert!(
            matches!(load(file(name)).unwrap(), Loaded::DoubleFunctor(_)),
            "{name}"
        );
    }
    assert!(matches!(
        load(file("maps/iso-identity.json")).unwrap(),
        Loaded::TwoFunctor(_)
    ));
}
