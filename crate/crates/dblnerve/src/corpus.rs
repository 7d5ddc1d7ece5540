//! Small named 2-categories and double categories used across the examples
//! and tests.

use crate::cat::RawArrow;
use crate::dbl::{Direction, FiniteDoubleCategory};
use crate::shapes::{chain2, dbl_point, free_iso, free_square};
use crate::two::{FiniteTwoCategory, RawTwoCategory};

/// `I`: two objects and an isomorphism between them.
pub fn iso() -> FiniteTwoCategory {
    free_iso()
}

/// `[1]`: the free arrow.
pub fn arrow() -> FiniteTwoCategory {
    chain2(1)
}

/// Three objects `a, b, c`, 1-cells `f: a → b` and `m: a → c`, and a single
/// non-identity 2-cell `α: f ⇒ f` with `α;α = id`.
pub fn involution() -> FiniteTwoCategory {
    FiniteTwoCategory::validate(&RawTwoCategory {
        objects: vec!["a".into(), "b".into(), "c".into()],
        cells1: vec![RawArrow::new("f", "a", "b"), RawArrow::new("m", "a", "c")],
        cells2: vec![RawArrow::new("alpha", "f", "f")],
        vcompose: vec![["alpha".into(), "alpha".into(), "id[f]".into()]],
        ..Default::default()
    })
    .expect("involution 2-category")
}

/// Objects `a, b, c`, an isomorphism `f: a → b` with inverse `g`, and
/// `m: b → c`. Every 1-cell other than `id[c]` carries one more 2-cell, an
/// involution `t<cell>` on it, and whiskering multiplies these signs. So
/// invertible non-identity 2-cells sit on equivalences.
pub fn graded() -> FiniteTwoCategory {
    // 1-cells with source, target; composites by table.
    let cells: [(&str, &str, &str); 7] = [
        ("id[a]", "a", "a"),
        ("id[b]", "b", "b"),
        ("id[c]", "c", "c"),
        ("f", "a", "b"),
        ("g", "b", "a"),
        ("m", "b", "c"),
        ("fm", "a", "c"),
    ];
    let comp = |x: &str, y: &str| -> Option<&'static str> {
        let table: [(&str, &str, &str); 4] = [
            ("f", "g", "id[a]"),
            ("g", "f", "id[b]"),
            ("f", "m", "fm"),
            ("g", "fm", "m"),
        ];
        if x.starts_with("id[") {
            return cells.iter().find(|c| c.0 == y).map(|c| c.0);
        }
        if y.starts_with("id[") {
            return cells.iter().find(|c| c.0 == x).map(|c| c.0);
        }
        table.iter().find(|r| r.0 == x && r.1 == y).map(|r| r.2)
    };
    let graded = |c: &str| c != "id[c]";
    let two_cell = |c: &str, sign: bool| {
        if sign {
            format!("t{c}")
        } else {
            format!("id[{c}]")
        }
    };
    let mut raw = RawTwoCategory {
        objects: vec!["a".into(), "b".into(), "c".into()],
        cells1: cells[3..]
            .iter()
            .map(|&(n, s, t)| RawArrow::new(n, s, t))
            .collect(),
        ..Default::default()
    };
    for &(x, _, _) in &cells[3..] {
        for &(y, _, _) in &cells[3..] {
            if let Some(z) = comp(x, y) {
                raw.compose1.push([x.into(), y.into(), z.into()]);
            }
        }
    }
    for &(c, _, _) in cells.iter().filter(|c| graded(c.0)) {
        raw.cells2.push(RawArrow::new(two_cell(c, true), c, c));
        raw.vcompose
            .push([two_cell(c, true), two_cell(c, true), two_cell(c, false)]);
    }
    for &(x, _, xt) in &cells {
        for &(y, _, _) in cells.iter().filter(|c| c.1 == xt) {
            let z = comp(x, y).expect("composable");
            for sx in [false, true].into_iter().filter(|&s| !s || graded(x)) {
                for sy in [false, true].into_iter().filter(|&s| !s || graded(y)) {
                    let trivial = |c: &str, s: bool| !s && c.starts_with("id[");
                    if (!sx && !sy) || trivial(x, sx) || trivial(y, sy) {
                        continue;
                    }
                    raw.hcompose
                        .push([two_cell(x, sx), two_cell(y, sy), two_cell(z, sx != sy)]);
                }
            }
        }
    }
    FiniteTwoCategory::validate(&raw).expect("graded 2-category")
}

/// The 2-categories of the corpus, by name.
pub fn two_categories() -> Vec<(&'static str, FiniteTwoCategory)> {
    vec![
        ("I", iso()),
        ("[1]", arrow()),
        ("involution", involution()),
        ("graded", graded()),
    ]
}

pub fn h(a: &FiniteTwoCategory) -> FiniteDoubleCategory {
    FiniteDoubleCategory::embed(a, Direction::Horizontal)
}

pub fn hsim(a: &FiniteTwoCategory) -> FiniteDoubleCategory {
    FiniteDoubleCategory::hsim_embed(a).dbl
}

/// The double categories of the corpus, by name: `[0]`, `𝕊`, `ℍI`, `ℍ^≃I`,
/// `ℍ^≃[1]`, `ℍ[1]`.
pub fn double_categories() -> Vec<(&'static str, FiniteDoubleCategory)> {
    vec![
        ("[0]", dbl_point()),
        ("S", free_square()),
        ("HI", h(&iso())),
        ("HsimI", hsim(&iso())),
        ("Hsim[1]", hsim(&arrow())),
        ("H[1]", h(&arrow())),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_has_invertible_cells_on_equivalences() {
        let a = graded();
        assert_eq!((a.n_objects(), a.n_cells1(), a.n_cells2()), (3, 7, 13));
        let f = a.cell1("f").unwrap();
        assert!(a.is_equivalence(f));
        let tf = a.cell2("tf").unwrap();
        assert_eq!(a.inverse2(tf), Some(tf));
    }
}
