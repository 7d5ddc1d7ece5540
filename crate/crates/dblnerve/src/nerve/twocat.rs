//! Nerves of a 2-category through `ℍ` and `ℍ^≃`, and the comparison map
//! between them.

use std::collections::HashMap;

use serde::Serialize;

use super::{nerve_dbl, Element, Provenance, SimplexSet};
use crate::dbl::{Direction, FiniteDoubleCategory, HorizontalEquivalence, HsimEmbedding};
use crate::error::{Error, Result};
use crate::present::{canonical, enumerate, DblPresentation, Valuation};
use crate::shapes::{lx_presentations, Translation};
use crate::two::{AdjointEquivalence, FiniteTwoCategory};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    H,
    Hsim,
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "h" => Ok(Variant::H),
            "hsim" => Ok(Variant::Hsim),
            other => Err(format!("unknown variant `{other}` (h, hsim)")),
        }
    }
}

/// 2-functors out of a 2-category presentation, as valuations in `ℍ𝒜`.
pub fn enumerate_two_functors(
    p: &DblPresentation,
    a: &FiniteTwoCategory,
    budget: u64,
) -> Result<Vec<Valuation>> {
    if !p.v_gens.is_empty() {
        return Err(Error::BoundaryMismatch(
            "a 2-category presentation has no vertical generators".into(),
        ));
    }
    enumerate(
        p,
        &FiniteDoubleCategory::embed(a, Direction::Horizontal),
        budget,
    )
}

/// A double functor out of `x` into `ℍ𝒜` from a valuation of `L x`.
fn through_l(
    x: &DblPresentation,
    t: &Translation,
    ha: &FiniteDoubleCategory,
    w: &Valuation,
) -> Valuation {
    let objects: Vec<usize> = t.objects.iter().map(|&c| w.objects[c]).collect();
    Valuation {
        v: x.v_gens.iter().map(|g| ha.id_v(objects[g.src])).collect(),
        objects,
        h: w.h.clone(),
        adj: w.adj.clone(),
        sq: w.sq.clone(),
    }
}

/// A double functor out of `x` into `ℍ^≃𝒜` from a valuation of `L^≃ x`.
fn through_lsim(
    x: &DblPresentation,
    hs: &HsimEmbedding,
    id_adj: &[usize],
    w: &Valuation,
) -> Result<Valuation> {
    let d = &hs.dbl;
    let nh = x.h_gens.len();
    let bug = |what: &str| Error::DisagreementBug(format!("{what} has no counterpart in ℍ^≃"));
    let adj_index: HashMap<AdjointEquivalence, usize> = hs
        .adjoint
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let glob = |cell: usize, top: usize, bottom: usize, o: usize| -> Result<usize> {
        hs.square_of
            .get(&(cell, top, bottom, id_adj[o], id_adj[o]))
            .copied()
            .ok_or_else(|| bug("a globular 2-cell"))
    };
    let adj = (0..nh)
        .map(|i| {
            w.adj[i]
                .map(|e| -> Result<HorizontalEquivalence> {
                    let (s, t) = (d.h_src(e.f), d.h_tgt(e.f));
                    let fg = d.comp_h(e.f, e.g).ok_or_else(|| bug("f;g"))?;
                    let gf = d.comp_h(e.g, e.f).ok_or_else(|| bug("g;f"))?;
                    Ok(HorizontalEquivalence {
                        eta: glob(e.eta, d.id_h(s), fg, s)?,
                        eps: glob(e.eps, gf, d.id_h(t), t)?,
                        ..e
                    })
                })
                .transpose()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut adj_of_v = Vec::with_capacity(x.v_gens.len());
    let mut v = Vec::with_capacity(x.v_gens.len());
    for j in 0..x.v_gens.len() {
        let e = w.adj[nh + j].ok_or_else(|| bug("a vertical generator without adjoint data"))?;
        let key = AdjointEquivalence {
            f: e.f,
            g: e.g,
            eta: e.eta,
            eps: e.eps,
        };
        let i = *adj_index
            .get(&key)
            .ok_or_else(|| bug("an adjoint equivalence"))?;
        adj_of_v.push(i);
        v.push(hs.vertical[i]);
    }
    let mut val = Valuation {
        objects: w.objects.clone(),
        h: w.h[..nh].to_vec(),
        adj,
        v,
        sq: Vec::new(),
    };
    for (s, g) in x.sq_gens.iter().enumerate() {
        let top = val.eval_h(d, &g.top)?;
        let bottom = val.eval_h(d, &g.bottom)?;
        let side = |p: &crate::present::VPath| match p.letters.as_slice() {
            [] => Ok(id_adj[w.objects[p.start]]),
            [j] => Ok(adj_of_v[*j]),
            _ => Err(bug("a vertical path of length two")),
        };
        let key = (w.sq[s], top, bottom, side(&g.left)?, side(&g.right)?);
        val.sq
            .push(*hs.square_of.get(&key).ok_or_else(|| bug("a square"))?);
    }
    Ok(val)
}

/// `(ℕℍ𝒜)_{m,k,n}` or `(ℕℍ^≃𝒜)_{m,k,n}` from 2-functors out of `L𝕏` or
/// `L^≃𝕏`. Elements are named by the generators of that presentation.
///
/// Also maps every element to a double functor into `ℍ𝒜` or `ℍ^≃𝒜` and
/// fails with `DisagreementBug` unless this is a bijection onto
/// `nerve_dbl` of the embedding.
pub fn nerve_2cat(
    a: &FiniteTwoCategory,
    variant: Variant,
    m: usize,
    k: usize,
    n: usize,
    budget: u64,
) -> Result<SimplexSet> {
    let lx = lx_presentations(m, k, n)?;
    let ha = FiniteDoubleCategory::embed(a, Direction::Horizontal);
    let t = match variant {
        Variant::H => &lx.l,
        Variant::Hsim => &lx.lsim,
    };
    let p = &t.pres.0;
    let found = enumerate_two_functors(p, a, budget)?;
    let (target, images): (FiniteDoubleCategory, Vec<Valuation>) = match variant {
        Variant::H => (
            ha.clone(),
            found.iter().map(|w| through_l(&lx.x, t, &ha, w)).collect(),
        ),
        Variant::Hsim => {
            let hs = FiniteDoubleCategory::hsim_embed(a);
            let id_adj: Vec<usize> = (0..a.n_objects())
                .map(|o| {
                    hs.vertical
                        .iter()
                        .position(|&v| v == hs.dbl.id_v(o))
                        .expect("identity adjoint equivalence")
                })
                .collect();
            let images = found
                .iter()
                .map(|w| through_lsim(&lx.x, &hs, &id_adj, w))
                .collect::<Result<Vec<_>>>()?;
            (hs.dbl, images)
        }
    };
    let direct = nerve_dbl(&target, m, k, n, budget)?;
    let mut hit = vec![false; direct.len()];
    for v in &images {
        let e = canonical(&lx.x, &target, v);
        let i = direct.position(&e).ok_or_else(|| {
            Error::DisagreementBug(format!(
                "a 2-functor at ({m}, {k}, {n}) does not give a double functor"
            ))
        })?;
        if hit[i] {
            return Err(Error::DisagreementBug(format!(
                "two 2-functors at ({m}, {k}, {n}) give one double functor"
            )));
        }
        hit[i] = true;
    }
    if hit.iter().any(|h| !h) {
        return Err(Error::DisagreementBug(format!(
            "a double functor at ({m}, {k}, {n}) comes from no 2-functor"
        )));
    }
    let items = found
        .into_iter()
        .map(|w| (canonical(p, &ha, &w), Some(w)))
        .collect();
    SimplexSet::new([m, k, n], items, Provenance::GenericEnumeration)
}

/// `π^*` and `ι^*` at one level.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub level: [usize; 3],
    pub h_count: usize,
    pub hsim_count: usize,
    /// Image of each `ℕℍ` element in `ℕℍ^≃`.
    pub pi_star: Vec<usize>,
    /// Image of each `ℕℍ^≃` element in `ℕℍ`, where `ι` is available.
    pub iota_star: Option<Vec<usize>>,
    /// `ι^* ∘ π^* = id`, where `ι` is available.
    pub retract: Option<bool>,
    pub pi_injective: bool,
}

pub fn comparison_maps(
    a: &FiniteTwoCategory,
    m: usize,
    k: usize,
    n: usize,
    budget: u64,
) -> Result<Comparison> {
    let lx = lx_presentations(m, k, n)?;
    let ha = FiniteDoubleCategory::embed(a, Direction::Horizontal);
    let (pl, ps) = (&lx.l.pres.0, &lx.lsim.pres.0);
    let hset = level(pl, &ha, [m, k, n], budget)?;
    let sset = level(ps, &ha, [m, k, n], budget)?;
    let along = |map: &crate::present::PresMorphism,
                 src: &DblPresentation,
                 from: &SimplexSet,
                 to: &SimplexSet| {
        from.valuations
            .iter()
            .map(|w| {
                let v = map.precompose(src, &ha, w)?;
                to.position(&canonical(src, &ha, &v)).ok_or_else(|| {
                    Error::DisagreementBug("comparison image is not an element".into())
                })
            })
            .collect::<Result<Vec<usize>>>()
    };
    let pi_star = along(&lx.pi, ps, &hset, &sset)?;
    let iota_star = match &lx.iota {
        Some(iota) => Some(along(iota, pl, &sset, &hset)?),
        None => None,
    };
    let retract = iota_star
        .as_ref()
        .map(|i| pi_star.iter().enumerate().all(|(x, &y)| i[y] == x));
    let mut seen = pi_star.clone();
    seen.sort_unstable();
    seen.dedup();
    Ok(Comparison {
        level: [m, k, n],
        h_count: hset.len(),
        hsim_count: sset.len(),
        pi_injective: seen.len() == pi_star.len(),
        pi_star,
        iota_star,
        retract,
    })
}

fn level(
    p: &DblPresentation,
    ha: &FiniteDoubleCategory,
    l: [usize; 3],
    budget: u64,
) -> Result<SimplexSet> {
    let items: Vec<(Element, Option<Valuation>)> = enumerate(p, ha, budget)?
        .into_iter()
        .map(|v| (canonical(p, ha, &v), Some(v)))
        .collect();
    SimplexSet::new(l, items, Provenance::GenericEnumeration)
}
