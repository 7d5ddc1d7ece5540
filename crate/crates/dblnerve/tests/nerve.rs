//! Nerve levels beyond the acceptance grid: postcomposition, the nerve of
//! the graded 2-category, and budget handling.

use dblnerve::corpus;
use dblnerve::dbl::{hsim_inclusion, DoubleFunctor, DEFAULT_BUDGET};
use dblnerve::nerve::{comparison_maps, nerve_2cat, nerve_dbl, postcompose, Variant};
use dblnerve::Error;

#[test]
fn postcomposition_is_functorial() {
    let (h, hs, inc) = hsim_inclusion(&corpus::iso());
    for level in [[0, 0, 0], [0, 1, 0], [1, 0, 1], [1, 1, 1]] {
        let [m, k, n] = level;
        let src = nerve_dbl(&h, m, k, n, DEFAULT_BUDGET).unwrap();
        let tgt = nerve_dbl(&hs.dbl, m, k, n, DEFAULT_BUDGET).unwrap();
        let id = postcompose(&DoubleFunctor::identity(&h), &h, &src, &src).unwrap();
        assert_eq!(id, (0..src.len()).collect::<Vec<_>>());
        let image = postcompose(&inc, &hs.dbl, &src, &tgt).unwrap();
        let mut seen = image.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(
            seen.len(),
            image.len(),
            "inclusion is injective on {level:?}"
        );
    }
}

#[test]
fn graded_nerves_agree_with_the_double_category_nerves() {
    let a = corpus::graded();
    for (m, k, n) in [(0, 0, 0), (0, 1, 0), (1, 0, 0), (0, 0, 1), (1, 1, 0)] {
        let h = nerve_2cat(&a, Variant::H, m, k, n, DEFAULT_BUDGET).unwrap();
        let s = nerve_2cat(&a, Variant::Hsim, m, k, n, DEFAULT_BUDGET).unwrap();
        assert!(h.len() <= s.len());
        let c = comparison_maps(&a, m, k, n, DEFAULT_BUDGET).unwrap();
        assert!(c.pi_injective);
        assert_eq!(c.retract, Some(true));
    }
}

#[test]
fn levels_outside_the_grid_are_refused() {
    let d = corpus::hsim(&corpus::iso());
    assert!(matches!(
        nerve_dbl(&d, 3, 0, 0, DEFAULT_BUDGET),
        Err(Error::RangeExceeded(_))
    ));
    assert!(matches!(
        nerve_dbl(&d, 1, 1, 2, 10),
        Err(Error::BudgetExceeded(10))
    ));
}
