//! Shape families: orientals and their variants, the small 2-categorical and
//! double categorical shapes used as cofibrations, and presentations of the
//! nerve shapes.

mod oriental;
mod x;

use serde::{Deserialize, Serialize};

use crate::cat::{identity_name, FiniteCategory, RawArrow, RawCategory};
use crate::dbl::{DoubleFunctor, FiniteDoubleCategory};
use crate::present::{
    DblPresentation, HPath, Letter, PresMorphism, SqExpr, SqFlag, TwoCatPresentation, VPath,
    Valuation,
};
use crate::two::{FiniteTwoCategory, TwoFunctor};

pub use oriental::{
    cosimplicial_action, degeneracy, face, oriental, oriental_action, oriental_adj_presentation,
    oriental_inv, oriental_presentation, oriental_variant, subset_name, Monotone, OrientalFamily,
    OrientalFamilySpec, Variant,
};
pub use x::{
    lx_presentations, pi_iota_is_identity, to_l, to_lsim, x_action, x_presentation, Axis,
    LxPresentations, Translation, GRID_MAX,
};

/// The free-living isomorphism `I`, as a locally discrete 2-category.
pub fn free_iso() -> FiniteTwoCategory {
    let raw = RawCategory {
        objects: vec!["x".into(), "y".into()],
        morphisms: vec![RawArrow::new("xy", "x", "y"), RawArrow::new("yx", "y", "x")],
        compose: vec![
            ["xy".into(), "yx".into(), identity_name("x")],
            ["yx".into(), "xy".into(), identity_name("y")],
        ],
    };
    FiniteTwoCategory::locally_discrete(
        &FiniteCategory::validate(&raw).expect("free-living isomorphism"),
    )
}

/// `[n]` as a locally discrete 2-category.
pub fn chain2(n: usize) -> FiniteTwoCategory {
    FiniteTwoCategory::locally_discrete(&FiniteCategory::chain(n))
}

/// The small 2-categorical shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape2 {
    Empty,
    Point,
    TwoPoints,
    Arrow,
    EAdj,
    CInv,
    C,
    DeltaC,
    C2,
}

impl std::str::FromStr for Shape2 {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "empty" => Shape2::Empty,
            "point" => Shape2::Point,
            "two-points" => Shape2::TwoPoints,
            "arrow" => Shape2::Arrow,
            "e-adj" => Shape2::EAdj,
            "c-inv" => Shape2::CInv,
            "c" => Shape2::C,
            "delta-c" => Shape2::DeltaC,
            "c2" => Shape2::C2,
            other => return Err(format!("unknown 2-categorical shape `{other}`")),
        })
    }
}

pub fn shape_2cat(shape: Shape2) -> TwoCatPresentation {
    let mut p = DblPresentation::default();
    if shape == Shape2::Empty {
        return TwoCatPresentation(p);
    }
    let a = p.add_object("0");
    if shape == Shape2::Point {
        return TwoCatPresentation(p);
    }
    let b = p.add_object("1");
    match shape {
        Shape2::TwoPoints => {}
        Shape2::Arrow => {
            p.add_h("f", a, b, false);
        }
        Shape2::EAdj => {
            p.add_h("f", a, b, true);
        }
        Shape2::DeltaC | Shape2::C | Shape2::CInv | Shape2::C2 => {
            let f = p.add_h("f", a, b, false);
            let g = p.add_h("g", a, b, false);
            let (pf, pg) = (p.hp(&[Letter::Gen(f)]), p.hp(&[Letter::Gen(g)]));
            match shape {
                Shape2::C => {
                    p.add_cell("alpha", pf, pg, SqFlag::Plain);
                }
                Shape2::CInv => {
                    p.add_cell("alpha", pf, pg, SqFlag::VertInvertible);
                }
                Shape2::C2 => {
                    p.add_cell("alpha", pf.clone(), pg.clone(), SqFlag::Plain);
                    p.add_cell("beta", pf, pg, SqFlag::Plain);
                }
                _ => {}
            }
        }
        Shape2::Empty | Shape2::Point => unreachable!(),
    }
    TwoCatPresentation(p)
}

/// The small double categorical shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeDbl {
    Empty,
    Point,
    TwoPoints,
    HArrow,
    VArrow,
    Square,
    SquareBoundary,
    SquarePair,
}

pub fn shape_dbl(shape: ShapeDbl) -> DblPresentation {
    let mut p = DblPresentation::default();
    match shape {
        ShapeDbl::Empty => {}
        ShapeDbl::Point => {
            p.add_object("A");
        }
        ShapeDbl::TwoPoints | ShapeDbl::HArrow | ShapeDbl::VArrow => {
            let a = p.add_object("A");
            let b = p.add_object("B");
            if shape == ShapeDbl::HArrow {
                p.add_h("f", a, b, false);
            }
            if shape == ShapeDbl::VArrow {
                p.add_v("u", a, b);
            }
        }
        ShapeDbl::Square | ShapeDbl::SquareBoundary | ShapeDbl::SquarePair => {
            let [a, b, c, d] = ["A", "B", "C", "D"].map(|n| p.add_object(n));
            let f = p.add_h("f", a, b, false);
            let g = p.add_h("g", c, d, false);
            let u = p.add_v("u", a, c);
            let v = p.add_v("v", b, d);
            let sides = (
                p.hp(&[Letter::Gen(f)]),
                p.hp(&[Letter::Gen(g)]),
                p.vp(&[u]),
                p.vp(&[v]),
            );
            let squares: &[&str] = match shape {
                ShapeDbl::Square => &["alpha"],
                ShapeDbl::SquarePair => &["alpha", "beta"],
                _ => &[],
            };
            for name in squares {
                p.add_sq(
                    *name,
                    sides.0.clone(),
                    sides.1.clone(),
                    sides.2.clone(),
                    sides.3.clone(),
                    SqFlag::Plain,
                );
            }
        }
    }
    p
}

/// Every cell a generator, every table entry a relation.
pub fn presentation_of_two(a: &FiniteTwoCategory) -> TwoCatPresentation {
    let n = a.n_objects();
    let mut p = DblPresentation::default();
    for o in 0..n {
        p.add_object(a.object_name(o));
    }
    for f in n..a.n_cells1() {
        p.add_h(a.c1_name(f), a.src1(f), a.tgt1(f), false);
    }
    let path = |f: usize| -> HPath {
        if a.is_id1(f) {
            HPath::empty(a.src1(f))
        } else {
            HPath {
                start: a.src1(f),
                letters: vec![Letter::Gen(f - n)],
            }
        }
    };
    let first2 = a.n_cells1();
    for c in first2..a.n_cells2() {
        p.add_cell(
            a.c2_name(c),
            path(a.src2(c)),
            path(a.tgt2(c)),
            SqFlag::Plain,
        );
    }
    let expr = |c: usize| {
        if a.is_id2(c) {
            SqExpr::IdV(path(a.src2(c)))
        } else {
            SqExpr::Gen(c - first2)
        }
    };
    for f in n..a.n_cells1() {
        for g in n..a.n_cells1() {
            if let Some(h) = a.comp1(f, g) {
                p.h_relations.push([path(f).then(&path(g)), path(h)]);
            }
        }
    }
    for x in 0..a.n_cells2() {
        for y in 0..a.n_cells2() {
            if let Some(z) = a.vcomp(x, y) {
                if !a.is_id2(x) && !a.is_id2(y) {
                    p.relate(SqExpr::v(vec![expr(x), expr(y)]), expr(z));
                }
            }
            if let Some(z) = a.hcomp(x, y) {
                let unit = |c: usize| a.is_id2(c) && a.is_id1(a.src2(c));
                if !(a.is_id2(x) && a.is_id2(y)) && !unit(x) && !unit(y) {
                    p.relate(SqExpr::h(vec![expr(x), expr(y)]), expr(z));
                }
            }
        }
    }
    TwoCatPresentation(p)
}

/// Read a valuation of `presentation_of_two(a)` in `ℍb` as a 2-functor.
pub fn two_functor_of(a: &FiniteTwoCategory, b: &FiniteTwoCategory, val: &Valuation) -> TwoFunctor {
    let n = a.n_objects();
    let cells1: Vec<usize> = (0..a.n_cells1())
        .map(|f| {
            if a.is_id1(f) {
                b.id1(val.objects[f])
            } else {
                val.h[f - n]
            }
        })
        .collect();
    let cells2 = (0..a.n_cells2())
        .map(|c| {
            if a.is_id2(c) {
                b.id2(cells1[a.src2(c)])
            } else {
                val.sq[c - a.n_cells1()]
            }
        })
        .collect();
    TwoFunctor {
        objects: val.objects.clone(),
        cells1,
        cells2,
    }
}

/// Every cell a generator, every table entry a relation.
pub fn presentation_of_dbl(a: &FiniteDoubleCategory) -> DblPresentation {
    let n = a.n_objects();
    let (nh, nv) = (a.n_h(), a.n_v());
    let first_user = nh + nv - n;
    let mut p = DblPresentation::default();
    for o in 0..n {
        p.add_object(a.object_name(o));
    }
    for f in n..nh {
        p.add_h(a.h_name(f), a.h_src(f), a.h_tgt(f), false);
    }
    for u in n..nv {
        p.add_v(a.v_name(u), a.v_src(u), a.v_tgt(u));
    }
    let hpath = |f: usize| -> HPath {
        if a.is_id_h(f) {
            HPath::empty(a.h_src(f))
        } else {
            HPath {
                start: a.h_src(f),
                letters: vec![Letter::Gen(f - n)],
            }
        }
    };
    let vpath = |u: usize| -> VPath {
        if a.is_id_v(u) {
            VPath::empty(a.v_src(u))
        } else {
            VPath {
                start: a.v_src(u),
                letters: vec![u - n],
            }
        }
    };
    for s in first_user..a.n_squares() {
        let [t, b, l, r] = a.boundary(s);
        p.add_sq(
            a.sq_name(s),
            hpath(t),
            hpath(b),
            vpath(l),
            vpath(r),
            SqFlag::Plain,
        );
    }
    let is_e = |s: usize| s < nh;
    let is_idsq = |s: usize| s < n || (nh..first_user).contains(&s);
    let expr = |s: usize| {
        if is_e(s) {
            SqExpr::IdV(hpath(a.top(s)))
        } else if is_idsq(s) {
            SqExpr::IdH(vpath(a.left(s)))
        } else {
            SqExpr::Gen(s - first_user)
        }
    };
    for f in n..nh {
        for g in n..nh {
            if let Some(h) = a.comp_h(f, g) {
                p.h_relations.push([hpath(f).then(&hpath(g)), hpath(h)]);
            }
        }
    }
    for u in n..nv {
        for w in n..nv {
            if let Some(z) = a.comp_v(u, w) {
                p.v_relations.push([vpath(u).then(&vpath(w)), vpath(z)]);
            }
        }
    }
    for x in 0..a.n_squares() {
        for y in 0..a.n_squares() {
            if let Some(z) = a.hcomp_sq(x, y) {
                if !is_idsq(x) && !is_idsq(y) && !(is_e(x) && is_e(y)) {
                    p.relate(SqExpr::h(vec![expr(x), expr(y)]), expr(z));
                }
            }
            if let Some(z) = a.vcomp_sq(x, y) {
                if !is_e(x) && !is_e(y) && !(is_idsq(x) && is_idsq(y)) {
                    p.relate(SqExpr::v(vec![expr(x), expr(y)]), expr(z));
                }
            }
        }
    }
    p
}

/// Read a valuation of `presentation_of_dbl(a)` as a double functor.
pub fn double_functor_of(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    val: &Valuation,
) -> DoubleFunctor {
    let n = a.n_objects();
    let h: Vec<usize> = (0..a.n_h())
        .map(|f| {
            if a.is_id_h(f) {
                b.id_h(val.objects[f])
            } else {
                val.h[f - n]
            }
        })
        .collect();
    let v: Vec<usize> = (0..a.n_v())
        .map(|u| {
            if a.is_id_v(u) {
                b.id_v(val.objects[u])
            } else {
                val.v[u - n]
            }
        })
        .collect();
    let first_user = a.n_h() + a.n_v() - n;
    let squares = (0..a.n_squares())
        .map(|s| {
            if s < a.n_h() {
                b.e_sq(h[s])
            } else if s < first_user {
                b.id_sq(v[s - a.n_h() + n])
            } else {
                val.sq[s - first_user]
            }
        })
        .collect();
    DoubleFunctor {
        objects: val.objects.clone(),
        h,
        v,
        squares,
    }
}

/// `𝕍[k]`.
pub fn v_chain(k: usize) -> FiniteDoubleCategory {
    FiniteDoubleCategory::embed(&chain2(k), crate::dbl::Direction::Vertical)
}

/// `𝕍Õ₂(k)`.
pub fn v_oriental_inv(k: usize) -> FiniteDoubleCategory {
    FiniteDoubleCategory::embed(&oriental_inv(k), crate::dbl::Direction::Vertical)
}

/// The inclusion `𝕍[k] → 𝕍Õ₂(k)`, sending `i → j` to the full interval.
pub fn chain_inclusion(k: usize) -> (FiniteDoubleCategory, FiniteDoubleCategory, DoubleFunctor) {
    let src = v_chain(k);
    let tgt = v_oriental_inv(k);
    let v = (0..src.n_v())
        .map(|u| {
            if src.is_id_v(u) {
                u
            } else {
                let (i, j) = (src.v_src(u), src.v_tgt(u));
                tgt.v(&subset_name(&(i..=j).collect::<Vec<_>>()))
                    .expect("interval 1-cell")
            }
        })
        .collect::<Vec<_>>();
    let squares = (0..src.n_squares())
        .map(|s| {
            // Only identity squares: e on identity horizontals, id on verticals.
            if s < src.n_h() {
                tgt.e_sq(s)
            } else {
                tgt.id_sq(v[s - src.n_h() + src.n_objects()])
            }
        })
        .collect();
    let f = DoubleFunctor {
        objects: (0..=k).collect(),
        h: (0..src.n_h()).collect(),
        v,
        squares,
    };
    f.check(&src, &tgt)
        .expect("chain inclusion is a double functor");
    (src, tgt, f)
}

/// The double category with one object and nothing else.
pub fn dbl_point() -> FiniteDoubleCategory {
    FiniteDoubleCategory::validate(&crate::dbl::RawDoubleCategory {
        objects: vec!["*".into()],
        ..Default::default()
    })
    .expect("point")
}

/// The empty double category.
pub fn dbl_empty() -> FiniteDoubleCategory {
    FiniteDoubleCategory::validate(&crate::dbl::RawDoubleCategory::default()).expect("empty")
}

/// The free double category on a square, materialized.
pub fn free_square() -> FiniteDoubleCategory {
    use crate::dbl::{RawDoubleCategory, RawSquare};
    FiniteDoubleCategory::validate(&RawDoubleCategory {
        objects: vec!["A".into(), "B".into(), "C".into(), "D".into()],
        horizontal: vec![RawArrow::new("f", "A", "B"), RawArrow::new("g", "C", "D")],
        vertical: vec![RawArrow::new("u", "A", "C"), RawArrow::new("v", "B", "D")],
        squares: vec![RawSquare::new("alpha", "f", "g", "u", "v")],
        ..Default::default()
    })
    .expect("free square")
}

/// The morphism of presentations `from → to` that sends each generator to
/// the generator of the same name (objects likewise).
pub fn inclusion_by_name(from: &DblPresentation, to: &DblPresentation) -> PresMorphism {
    let objects = from
        .objects
        .iter()
        .map(|o| to.object_index(o).expect("object present"))
        .collect();
    let h = from
        .h_gens
        .iter()
        .map(|g| {
            let j = to.h_index(&g.name).expect("horizontal generator present");
            HPath {
                start: to.h_gens[j].src,
                letters: vec![Letter::Gen(j)],
            }
        })
        .collect();
    let v = from
        .v_gens
        .iter()
        .map(|g| {
            let j = to.v_index(&g.name).expect("vertical generator present");
            VPath {
                start: to.v_gens[j].src,
                letters: vec![j],
            }
        })
        .collect();
    let sq = from
        .sq_gens
        .iter()
        .map(|g| SqExpr::Gen(to.sq_index(&g.name).expect("square present")))
        .collect();
    PresMorphism { objects, h, v, sq }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::Direction;
    use crate::present::enumerate;

    #[test]
    fn two_cat_shapes_into_iso() {
        let h = FiniteDoubleCategory::embed(&free_iso(), Direction::Horizontal);
        let count = |s: Shape2| enumerate(&shape_2cat(s).0, &h, 1 << 20).unwrap().len();
        assert_eq!(count(Shape2::Point), 2);
        assert_eq!(count(Shape2::EAdj), 4);
        assert_eq!(count(Shape2::CInv), 4);
        assert_eq!(count(Shape2::C), 4);
        assert_eq!(count(Shape2::DeltaC), 4);
        assert_eq!(count(Shape2::Empty), 1);
    }

    #[test]
    fn presentation_of_a_finite_category_recovers_its_endofunctors() {
        let iso = free_iso();
        let p = presentation_of_two(&iso);
        let h = FiniteDoubleCategory::embed(&iso, Direction::Horizontal);
        let all = enumerate(&p.0, &h, 1 << 20).unwrap();
        // Functors I → I: 2 constant, identity, swap.
        assert_eq!(all.len(), 4);
        for v in &all {
            two_functor_of(&iso, &iso, v).check(&iso, &iso).unwrap();
        }
        let s = free_square();
        let ps = presentation_of_dbl(&s);
        let fs = enumerate(&ps, &s, 1 << 20).unwrap();
        for v in &fs {
            double_functor_of(&s, &s, v).check(&s, &s).unwrap();
        }
        assert!(fs
            .iter()
            .any(|v| double_functor_of(&s, &s, v) == DoubleFunctor::identity(&s)));
    }

    #[test]
    fn square_shape_matches_materialized_square() {
        let s = free_square();
        let n = enumerate(&shape_dbl(ShapeDbl::Square), &s, 1 << 20)
            .unwrap()
            .len();
        assert_eq!(n, s.n_squares());
    }

    #[test]
    fn chain_inclusions_exist() {
        for k in 0..=3 {
            let (a, b, f) = chain_inclusion(k);
            f.check(&a, &b).unwrap();
        }
        assert_eq!(v_oriental_inv(2).v_hom(0, 2).len(), 2);
    }
}
