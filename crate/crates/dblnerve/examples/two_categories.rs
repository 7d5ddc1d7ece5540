//! Build a 2-category from tables, then list its equivalences and the
//! adjoint ones among them.

use dblnerve::cat::RawArrow;
use dblnerve::two::{FiniteTwoCategory, RawTwoCategory};

fn main() -> dblnerve::Result<()> {
    // Two objects and an isomorphism between them.
    let raw = RawTwoCategory {
        objects: vec!["x".into(), "y".into()],
        cells1: vec![RawArrow::new("f", "x", "y"), RawArrow::new("g", "y", "x")],
        compose1: vec![
            ["f".into(), "g".into(), "id[x]".into()],
            ["g".into(), "f".into(), "id[y]".into()],
        ],
        ..Default::default()
    };
    let a = FiniteTwoCategory::validate(&raw)?;
    println!(
        "{} objects, {} 1-cells, {} 2-cells",
        a.n_objects(),
        a.n_cells1(),
        a.n_cells2()
    );
    for e in a.equivalences() {
        let adjoint = a.triangles_hold(&e);
        println!(
            "({}, {}, {}, {}) adjoint: {adjoint}",
            a.c1_name(e.f),
            a.c1_name(e.g),
            a.c2_name(e.eta),
            a.c2_name(e.eps)
        );
    }

    // A bad table is rejected with the offending cells.
    let mut broken = raw.clone();
    broken.compose1[0][2] = "f".into();
    match FiniteTwoCategory::validate(&broken) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
