//! Read the shipped JSON files, print what they hold, and write a shape
//! back out.

use dblnerve::interchange::{load, load_str, Document, Loaded};
use dblnerve::shapes::oriental_inv;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    for file in [
        "iso.json",
        "free-square.json",
        "h-iso.json",
        "hsim-iso.json",
        "oriental-adj-2.json",
    ] {
        let summary = match load(dir.join(file))? {
            Loaded::TwoCategory(a) => format!("2-category, {} 2-cells", a.n_cells2()),
            Loaded::DoubleCategory(a) => format!("double category, {} squares", a.n_squares()),
            Loaded::Presentation(p) => format!("presentation, {} generators", p.n_generators()),
            _ => "other".into(),
        };
        println!("{file}: {summary}");
    }
    let o = oriental_inv(2);
    let text = Document::from(&o).to_string_pretty();
    assert_eq!(load_str(&text, "memory")?, Loaded::TwoCategory(o));
    println!("round trip of O~(2): {} bytes", text.len());
    match load_str(
        r#"{"kind": "two-category", "objects": ["a"], "cells1": [{"name": "f", "src": "a", "tgt": "b"}]}"#,
        "memory",
    ) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}
