//! The nerve of a finite double category, level by level.
//!
//! The `(m, k, n)` level is the set of double functors out of the presented
//! double category `𝕏(m, k, n)`; simplicial operators act by precomposition
//! with the maps `x_action` produces.

mod checks;
mod oracle;
mod twocat;

use std::collections::HashMap;

use serde::Serialize;

use crate::dbl::{DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::present::{apply_functor, canonical, enumerate, DblPresentation, Valuation};
use crate::shapes::{degeneracy, face, x_action, x_presentation, Axis, Monotone, GRID_MAX};

pub use checks::{fibrancy_vertical_check, segal_tfib_check, FibrancyReport};
pub use oracle::{nerve_oracle, ORACLE_MAX};
pub use twocat::{comparison_maps, enumerate_two_functors, nerve_2cat, Comparison, Variant};

/// Sorted `(generator, image)` pairs.
pub type Element = Vec<(String, String)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    GenericEnumeration,
    StructuralOracle,
}

/// One level of a nerve. `elements` is sorted and duplicate-free.
#[derive(Debug, Clone)]
pub struct SimplexSet {
    pub level: [usize; 3],
    pub elements: Vec<Element>,
    pub provenance: Provenance,
    /// Present for enumerated levels, aligned with `elements`.
    pub valuations: Vec<Valuation>,
    index: HashMap<Element, usize>,
}

impl SimplexSet {
    pub(crate) fn new(
        level: [usize; 3],
        mut items: Vec<(Element, Option<Valuation>)>,
        provenance: Provenance,
    ) -> Result<Self> {
        items.sort_by(|x, y| x.0.cmp(&y.0));
        let before = items.len();
        items.dedup_by(|x, y| x.0 == y.0);
        if items.len() != before {
            return Err(Error::DisagreementBug(format!(
                "duplicate elements at level {level:?}"
            )));
        }
        let valuations: Vec<Valuation> = items.iter().filter_map(|x| x.1.clone()).collect();
        let elements: Vec<Element> = items.into_iter().map(|x| x.0).collect();
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        Ok(SimplexSet {
            level,
            elements,
            provenance,
            valuations,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Same elements, in any provenance.
    pub fn same_elements(&self, other: &SimplexSet) -> bool {
        self.elements == other.elements
    }
}

fn check_level(m: usize, k: usize, n: usize) -> Result<()> {
    if m > GRID_MAX || k > GRID_MAX || n > GRID_MAX {
        return Err(Error::RangeExceeded(format!(
            "level ({m}, {k}, {n}) has an index above {GRID_MAX}"
        )));
    }
    Ok(())
}

/// `(ℕ𝔸)_{m,k,n}` by enumeration.
pub fn nerve_dbl(
    a: &FiniteDoubleCategory,
    m: usize,
    k: usize,
    n: usize,
    budget: u64,
) -> Result<SimplexSet> {
    check_level(m, k, n)?;
    let p = x_presentation(m, k, n)?;
    level_of(&p, a, [m, k, n], budget)
}

fn level_of(
    p: &DblPresentation,
    a: &FiniteDoubleCategory,
    level: [usize; 3],
    budget: u64,
) -> Result<SimplexSet> {
    let items = enumerate(p, a, budget)?
        .into_iter()
        .map(|v| (canonical(p, a, &v), Some(v)))
        .collect();
    SimplexSet::new(level, items, Provenance::GenericEnumeration)
}

/// A nerve with levels computed on demand.
pub struct Nerve<'a> {
    a: &'a FiniteDoubleCategory,
    budget: u64,
    levels: HashMap<[usize; 3], SimplexSet>,
}

impl<'a> Nerve<'a> {
    pub fn new(a: &'a FiniteDoubleCategory, budget: u64) -> Self {
        Nerve {
            a,
            budget,
            levels: HashMap::new(),
        }
    }

    pub fn target(&self) -> &FiniteDoubleCategory {
        self.a
    }

    pub fn level(&mut self, level: [usize; 3]) -> Result<&SimplexSet> {
        if !self.levels.contains_key(&level) {
            let s = nerve_dbl(self.a, level[0], level[1], level[2], self.budget)?;
            self.levels.insert(level, s);
        }
        Ok(&self.levels[&level])
    }

    /// The operator `α^*`: `level` with `alpha.cod` on `axis`, to `level`
    /// with `alpha.dom` on `axis`. Entry `i` is the image of element `i`.
    pub fn act(&mut self, axis: Axis, alpha: &Monotone, level: [usize; 3]) -> Result<Vec<usize>> {
        let ax = axis.index();
        let mut from = level;
        from[ax] = alpha.cod;
        let mut to = level;
        to[ax] = alpha.dom;
        check_level(from[0], from[1], from[2])?;
        check_level(to[0], to[1], to[2])?;
        self.level(from)?;
        self.level(to)?;
        let (src, _, map) = x_action(axis, alpha, level)?;
        let (big, small) = (&self.levels[&from], &self.levels[&to]);
        big.valuations
            .iter()
            .map(|v| {
                let w = map.precompose(&src, self.a, v)?;
                small.position(&canonical(&src, self.a, &w)).ok_or_else(|| {
                    Error::DisagreementBug(format!(
                        "operator image at level {to:?} is not an element"
                    ))
                })
            })
            .collect()
    }

    /// Each instance of the simplicial identities along `axis`, with the other
    /// two indices taken from `level`, as `(name, holds)`.
    pub fn simplicial_identities(
        &mut self,
        axis: Axis,
        level: [usize; 3],
    ) -> Result<Vec<(String, bool)>> {
        let ax = axis.index();
        let at = |n: usize| {
            let mut l = level;
            l[ax] = n;
            l
        };
        // Composite of operators, each given by a monotone map, applied in
        // list order.
        let chain = |nerve: &mut Self, ops: &[(Monotone, usize)]| -> Result<Vec<usize>> {
            let mut acc: Option<Vec<usize>> = None;
            for (alpha, n) in ops {
                let step = nerve.act(axis, alpha, at(*n))?;
                acc = Some(match acc {
                    None => step,
                    Some(prev) => prev.iter().map(|&x| step[x]).collect(),
                });
            }
            Ok(acc.unwrap_or_default())
        };
        let mut out = Vec::new();
        let mut record = |name: String, l: Vec<usize>, r: Vec<usize>| out.push((name, l == r));
        let top = GRID_MAX;
        // d_i d_j = d_{j-1} d_i for i < j.
        for n in 2..=top {
            for j in 0..=n {
                for i in 0..j {
                    let l = chain(self, &[(face(n, j), n), (face(n - 1, i), n)])?;
                    let r = chain(self, &[(face(n, i), n), (face(n - 1, j - 1), n)])?;
                    record(format!("d{i} d{j} = d{} d{i} on X{n}", j - 1), l, r);
                }
            }
        }
        // d_i s_j on X_n.
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let l = chain(self, &[(degeneracy(n, j), n), (face(n + 1, i), n)])?;
                    let (name, r) = if i == j || i == j + 1 {
                        (
                            format!("d{i} s{j} = id on X{n}"),
                            (0..self.level(at(n))?.len()).collect(),
                        )
                    } else if i < j {
                        (
                            format!("d{i} s{j} = s{} d{i} on X{n}", j - 1),
                            chain(self, &[(face(n, i), n), (degeneracy(n - 1, j - 1), n)])?,
                        )
                    } else {
                        (
                            format!("d{i} s{j} = s{j} d{} on X{n}", i - 1),
                            chain(self, &[(face(n, i - 1), n), (degeneracy(n - 1, j), n)])?,
                        )
                    };
                    record(name, l, r);
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i <= j.
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let l = chain(self, &[(degeneracy(n, j), n), (degeneracy(n + 1, i), n)])?;
                    let r = chain(
                        self,
                        &[(degeneracy(n, i), n), (degeneracy(n + 1, j + 1), n)],
                    )?;
                    record(format!("s{i} s{j} = s{} s{i} on X{n}", j + 1), l, r);
                }
            }
        }
        Ok(out)
    }
}

/// Postcomposition with `f: 𝔸 → 𝔹` on one level: entry `i` is the image of
/// element `i` of `src` in `tgt`.
pub fn postcompose(
    f: &DoubleFunctor,
    b: &FiniteDoubleCategory,
    src: &SimplexSet,
    tgt: &SimplexSet,
) -> Result<Vec<usize>> {
    let [m, k, n] = src.level;
    let p = x_presentation(m, k, n)?;
    src.valuations
        .iter()
        .map(|v| {
            let w = apply_functor(f, v);
            tgt.position(&canonical(&p, b, &w)).ok_or_else(|| {
                Error::DisagreementBug("postcomposed element is not in the target level".into())
            })
        })
        .collect()
}
