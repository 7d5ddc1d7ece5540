//! Algebraic laws on randomly drawn instances.

use dblnerve::corpus;
use dblnerve::dbl::FiniteDoubleCategory;
use dblnerve::interchange::{load_str, Document, Loaded};
use dblnerve::present::enumerate;
use dblnerve::shapes::{
    degeneracy, face, oriental, oriental_action, oriental_inv, x_presentation, Monotone,
};
use dblnerve::two::FiniteTwoCategory;
use dblnerve::Error;
use proptest::prelude::*;

fn monotone(dom: usize, cod: usize) -> impl Strategy<Value = Monotone> {
    proptest::collection::vec(0..=cod, dom + 1).prop_map(move |mut map| {
        map.sort_unstable();
        Monotone { dom, cod, map }
    })
}

fn doubles() -> Vec<FiniteDoubleCategory> {
    corpus::double_categories()
        .into_iter()
        .map(|(_, d)| d)
        .collect()
}

fn twos() -> Vec<FiniteTwoCategory> {
    let mut out: Vec<FiniteTwoCategory> = corpus::two_categories()
        .into_iter()
        .map(|(_, a)| a)
        .collect();
    out.push(oriental_inv(3));
    out.push(oriental(3));
    out
}

proptest! {
    #[test]
    fn cosimplicial_face_face(n in 2usize..6, j in 0usize..6, i in 0usize..6) {
        prop_assume!(j <= n && i < j);
        let lhs = face(n - 1, i).then(&face(n, j));
        let rhs = face(n - 1, j - 1).then(&face(n, i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cosimplicial_degeneracy_face(n in 0usize..5, j in 0usize..5, i in 0usize..7) {
        prop_assume!(j <= n && i <= n + 1);
        let lhs = face(n + 1, i).then(&degeneracy(n, j));
        if i == j || i == j + 1 {
            prop_assert_eq!(lhs, Monotone::identity(n));
        } else if i < j {
            prop_assert_eq!(lhs, degeneracy(n - 1, j - 1).then(&face(n, i)));
        } else {
            prop_assert_eq!(lhs, degeneracy(n - 1, j).then(&face(n, i - 1)));
        }
    }

    #[test]
    fn oriental_action_is_functorial(
        (a, b) in (0usize..=3, 0usize..=3, 0usize..=3)
            .prop_flat_map(|(p, q, r)| (monotone(p, q), monotone(q, r))),
        inverted in any::<bool>(),
    ) {
        let (_, _, fa) = oriental_action(inverted, &a);
        let (_, _, fb) = oriental_action(inverted, &b);
        let (_, _, fab) = oriental_action(inverted, &a.then(&b));
        prop_assert_eq!(fa.then(&fb), fab);
    }

    #[test]
    fn two_category_laws_hold_on_random_cells(which in 0usize..6, x in 0usize..64, y in 0usize..64, z in 0usize..64) {
        let a = &twos()[which];
        let (n1, n2) = (a.n_cells1(), a.n_cells2());
        let (f, g, h) = (x % n1, y % n1, z % n1);
        if let (Some(fg), Some(gh)) = (a.comp1(f, g), a.comp1(g, h)) {
            prop_assert_eq!(a.comp1(fg, h), a.comp1(f, gh));
        }
        let (p, q, r) = (x % n2, y % n2, z % n2);
        if let (Some(pq), Some(qr)) = (a.vcomp(p, q), a.vcomp(q, r)) {
            prop_assert_eq!(a.vcomp(pq, r), a.vcomp(p, qr));
        }
        if let (Some(pq), Some(qr)) = (a.hcomp(p, q), a.hcomp(q, r)) {
            prop_assert_eq!(a.hcomp(pq, r), a.hcomp(p, qr));
        }
    }

    #[test]
    fn interchange_on_random_squares(which in 0usize..6, w in 0usize..400, x in 0usize..400, y in 0usize..400, z in 0usize..400) {
        let d = &doubles()[which];
        let n = d.n_squares();
        let (a, b, c, e) = (w % n, x % n, y % n, z % n);
        let rows = d.hcomp_sq(a, b).zip(d.hcomp_sq(c, e)).and_then(|(t, u)| d.vcomp_sq(t, u));
        let cols = d.vcomp_sq(a, c).zip(d.vcomp_sq(b, e)).and_then(|(l, r)| d.hcomp_sq(l, r));
        if rows.is_some() && cols.is_some() {
            prop_assert_eq!(rows, cols);
        }
    }

    #[test]
    fn dropping_a_table_row_is_rejected(which in 0usize..6, table in 0usize..3, row in 0usize..1000) {
        let mut raw = twos()[which].to_raw();
        let rows = match table {
            0 => &mut raw.compose1,
            1 => &mut raw.vcompose,
            _ => &mut raw.hcompose,
        };
        prop_assume!(!rows.is_empty());
        let k = row % rows.len();
        rows.remove(k);
        prop_assert!(FiniteTwoCategory::validate(&raw).is_err());
    }

    #[test]
    fn shapes_round_trip(n in 0usize..=3, inverted in any::<bool>()) {
        let a = if inverted { oriental_inv(n) } else { oriental(n) };
        let text = Document::from(&a).to_string_pretty();
        prop_assert_eq!(load_str(&text, "memory").unwrap(), Loaded::TwoCategory(a));
    }

    #[test]
    fn budget_is_all_or_nothing(budget in 1u64..3000) {
        let p = x_presentation(1, 1, 1).unwrap();
        let d = corpus::hsim(&corpus::iso());
        match enumerate(&p, &d, budget) {
            Ok(found) => prop_assert_eq!(found.len(), 256),
            Err(e) => prop_assert_eq!(e, Error::BudgetExceeded(budget)),
        }
    }
}
