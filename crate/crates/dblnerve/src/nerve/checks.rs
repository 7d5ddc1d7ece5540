//! Fibrancy in the vertical direction and the Segal trivial fibrations.

use std::collections::HashSet;

use serde::Serialize;

use super::Nerve;
use crate::dbl::{pseudo_hom, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::shapes::{chain_inclusion, face, x_presentation, Axis};
use crate::Verdict;

#[derive(Debug, Clone, Serialize)]
pub struct FibrancyReport {
    pub verdict: Verdict,
    /// Weak horizontal invariance, checked on `𝔸`.
    pub invariant: bool,
    /// Every `(f, f', v)` is the boundary of a `(0, 1, 1)` element of the nerve.
    pub lifting: bool,
}

/// Weak horizontal invariance computed two ways: directly, and as the
/// lifting condition read off the `(0, 1, 1)` level of the nerve. The two
/// must agree.
pub fn fibrancy_vertical_check(a: &FiniteDoubleCategory, budget: u64) -> Result<FibrancyReport> {
    let direct = a.is_weakly_horizontally_invariant();

    let mut nerve = Nerve::new(a, budget);
    let right = nerve.act(Axis::Space, &face(1, 0), [0, 1, 1])?;
    let p = x_presentation(0, 1, 1)?;
    let (top, bottom) = (
        p.h_index("0|0|01").expect("top"),
        p.h_index("0|1|01").expect("bottom"),
    );
    let squares = nerve.level([0, 1, 1])?.valuations.clone();
    let verticals = nerve.level([0, 1, 0])?.valuations.clone();
    let hit: HashSet<(usize, usize, usize)> = squares
        .iter()
        .zip(&right)
        .map(|(s, &r)| (s.h[top], s.h[bottom], verticals[r].v[0]))
        .collect();

    let mut missing = None;
    'outer: for v in 0..a.n_v() {
        let (b0, b1) = (a.v_src(v), a.v_tgt(v));
        for f in (0..a.n_h()).filter(|&f| a.h_tgt(f) == b0 && a.is_horizontal_equivalence(f)) {
            for f2 in (0..a.n_h()).filter(|&g| a.h_tgt(g) == b1 && a.is_horizontal_equivalence(g)) {
                if !hit.contains(&(f, f2, v)) {
                    missing = Some(format!(
                        "f = {}, f' = {}, v = {}",
                        a.h_name(f),
                        a.h_name(f2),
                        a.v_name(v)
                    ));
                    break 'outer;
                }
            }
        }
    }
    let lifting = missing.is_none();
    if lifting != direct.holds {
        return Err(Error::DisagreementBug(format!(
            "weak horizontal invariance is {} but the nerve lifting condition is {lifting}",
            direct.holds
        )));
    }
    let verdict = match missing {
        None => Verdict::pass(),
        Some(w) => Verdict::fail(w),
    };
    Ok(FibrancyReport {
        verdict,
        invariant: direct.holds,
        lifting,
    })
}

/// Restriction from pseudo-natural data on `𝕍Õ₂(k)` to `𝕍[k]` is a trivial
/// fibration of 2-categories.
pub fn segal_tfib_check(b: &FiniteDoubleCategory, k: usize, budget: u64) -> Result<Verdict> {
    let (small_shape, big_shape, j) = chain_inclusion(k);
    let big = pseudo_hom(&big_shape, b, budget)?;
    let small = pseudo_hom(&small_shape, b, budget)?;
    let r = big.restrict_along(&j, &small)?;
    Ok(r.is_trivial_fibration(&big.two, &small.two))
}
