//! Maps between presentations, given on generators, and the precomposition
//! they induce on valuations.

use super::{DblPresentation, HPath, Letter, SqExpr, VPath, Valuation};
use crate::dbl::{DoubleFunctor, FiniteDoubleCategory, HorizontalEquivalence};
use crate::error::{Error, Result};

/// Images of generators. An adjoint generator must map to a path made only
/// of adjoint letters; its unit and counit then go to the composite data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresMorphism {
    pub objects: Vec<usize>,
    pub h: Vec<HPath>,
    pub v: Vec<VPath>,
    pub sq: Vec<SqExpr>,
}

/// `x` then `y`.
pub fn compose_data(
    a: &FiniteDoubleCategory,
    x: &HorizontalEquivalence,
    y: &HorizontalEquivalence,
) -> Option<HorizontalEquivalence> {
    let f = a.comp_h(x.f, y.f)?;
    let g = a.comp_h(y.g, x.g)?;
    let eta = a.vcomp_sq(x.eta, a.hcomp_all(&[a.e_sq(x.f), y.eta, a.e_sq(x.g)])?)?;
    let eps = a.vcomp_sq(a.hcomp_all(&[a.e_sq(y.g), x.eps, a.e_sq(y.f)])?, y.eps)?;
    Some(HorizontalEquivalence {
        f,
        g,
        eta,
        eps,
        adjoint: x.adjoint && y.adjoint,
    })
}

/// `(g, f, ε⁻¹, η⁻¹)`.
pub fn reverse_data(
    a: &FiniteDoubleCategory,
    e: &HorizontalEquivalence,
) -> Option<HorizontalEquivalence> {
    Some(HorizontalEquivalence {
        f: e.g,
        g: e.f,
        eta: a.vertical_inverse(e.eps)?,
        eps: a.vertical_inverse(e.eta)?,
        adjoint: e.adjoint,
    })
}

fn identity_data(a: &FiniteDoubleCategory, o: usize) -> HorizontalEquivalence {
    let f = a.id_h(o);
    HorizontalEquivalence {
        f,
        g: f,
        eta: a.e_sq(f),
        eps: a.e_sq(f),
        adjoint: true,
    }
}

fn reversed(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|&x| swap(x)).collect()
}

fn letter_unit(l: Letter) -> SqExpr {
    match l {
        Letter::Gen(i) => SqExpr::Unit(i),
        Letter::Partner(i) => SqExpr::Counit(i).vinv(),
    }
}

fn letter_counit(l: Letter) -> SqExpr {
    match l {
        Letter::Gen(i) => SqExpr::Counit(i),
        Letter::Partner(i) => SqExpr::Unit(i).vinv(),
    }
}

/// Unit `[] ⇒ w;wᴾ` of an adjoint word, peeling off the first letter.
fn word_unit(tgt: &DblPresentation, w: &HPath) -> Result<SqExpr> {
    let Some((&first, rest)) = w.letters.split_first() else {
        return Ok(SqExpr::IdV(w.clone()));
    };
    if rest.is_empty() {
        return Ok(letter_unit(first));
    }
    let head = HPath {
        start: w.start,
        letters: vec![first],
    };
    let mid = tgt.h_end(&head)?;
    let inner = word_unit(
        tgt,
        &HPath {
            start: mid,
            letters: rest.to_vec(),
        },
    )?;
    Ok(SqExpr::v(vec![
        letter_unit(first),
        SqExpr::h(vec![
            SqExpr::IdV(head),
            inner,
            SqExpr::IdV(HPath {
                start: mid,
                letters: vec![swap(first)],
            }),
        ]),
    ]))
}

/// Counit `wᴾ;w ⇒ []`, peeling off the first letter.
fn word_counit(tgt: &DblPresentation, w: &HPath) -> Result<SqExpr> {
    let end = tgt.h_end(w)?;
    let Some((&first, rest)) = w.letters.split_first() else {
        return Ok(SqExpr::IdV(w.clone()));
    };
    if rest.is_empty() {
        return Ok(letter_counit(first));
    }
    let mid = tgt.h_end(&HPath {
        start: w.start,
        letters: vec![first],
    })?;
    let tail = HPath {
        start: mid,
        letters: rest.to_vec(),
    };
    Ok(SqExpr::v(vec![
        SqExpr::h(vec![
            SqExpr::IdV(HPath {
                start: end,
                letters: reversed(rest),
            }),
            letter_counit(first),
            SqExpr::IdV(tail.clone()),
        ]),
        word_counit(tgt, &tail)?,
    ]))
}

fn swap(l: Letter) -> Letter {
    match l {
        Letter::Gen(i) => Letter::Partner(i),
        Letter::Partner(i) => Letter::Gen(i),
    }
}

impl PresMorphism {
    /// Image of a path of the source presentation.
    pub fn map_h(&self, src: &DblPresentation, p: &HPath) -> HPath {
        let mut out = HPath::empty(self.objects[p.start]);
        for &l in &p.letters {
            match l {
                Letter::Gen(i) => out.letters.extend_from_slice(&self.h[i].letters),
                Letter::Partner(i) => {
                    debug_assert!(src.h_gens[i].adjoint);
                    out.letters.extend(reversed(&self.h[i].letters));
                }
            }
        }
        out
    }

    pub fn map_v(&self, p: &VPath) -> VPath {
        let mut out = VPath::empty(self.objects[p.start]);
        for &i in &p.letters {
            out.letters.extend_from_slice(&self.v[i].letters);
        }
        out
    }

    /// Endpoints, adjointness and square boundaries, compared as words.
    pub fn check(&self, src: &DblPresentation, tgt: &DblPresentation) -> Result<()> {
        let bad = |what: String| Err(Error::NotAFunctor(what));
        if self.objects.len() != src.objects.len()
            || self.h.len() != src.h_gens.len()
            || self.v.len() != src.v_gens.len()
            || self.sq.len() != src.sq_gens.len()
        {
            return bad("map sizes do not match the source".into());
        }
        for (i, g) in src.h_gens.iter().enumerate() {
            let img = &self.h[i];
            if img.start != self.objects[g.src] || tgt.h_end(img)? != self.objects[g.tgt] {
                return bad(format!("endpoints of `{}`", g.name));
            }
            if g.adjoint {
                let all_adjoint = img
                    .letters
                    .iter()
                    .all(|&(Letter::Gen(j) | Letter::Partner(j))| tgt.h_gens[j].adjoint);
                if !all_adjoint {
                    return bad(format!(
                        "adjoint generator `{}` sent to a non-adjoint path",
                        g.name
                    ));
                }
            }
        }
        for (i, g) in src.v_gens.iter().enumerate() {
            let img = &self.v[i];
            if img.start != self.objects[g.src] || tgt.v_end(img)? != self.objects[g.tgt] {
                return bad(format!("endpoints of `{}`", g.name));
            }
        }
        for (i, g) in src.sq_gens.iter().enumerate() {
            let b = tgt.boundary(&self.sq[i])?;
            let want = (
                self.map_h(src, &g.top),
                self.map_h(src, &g.bottom),
                self.map_v(&g.left),
                self.map_v(&g.right),
            );
            if (b.top, b.bottom, b.left, b.right) != want {
                return bad(format!("boundary of the image of `{}`", g.name));
            }
        }
        Ok(())
    }

    /// The valuation of the source obtained by precomposing `val`.
    pub fn precompose(
        &self,
        src: &DblPresentation,
        a: &FiniteDoubleCategory,
        val: &Valuation,
    ) -> Result<Valuation> {
        let objects: Vec<usize> = self.objects.iter().map(|&o| val.objects[o]).collect();
        let mut h = Vec::with_capacity(src.h_gens.len());
        let mut adj = Vec::with_capacity(src.h_gens.len());
        for (i, g) in src.h_gens.iter().enumerate() {
            let img = &self.h[i];
            if g.adjoint {
                let mut acc = identity_data(a, val.objects[img.start]);
                for &l in &img.letters {
                    let step = match l {
                        Letter::Gen(j) => val.adj[j],
                        Letter::Partner(j) => val.adj[j].and_then(|e| reverse_data(a, &e)),
                    }
                    .ok_or_else(|| {
                        Error::BoundaryMismatch(format!("image of `{}` is not adjoint", g.name))
                    })?;
                    acc = compose_data(a, &acc, &step).ok_or_else(|| {
                        Error::BoundaryMismatch(format!("image of `{}` does not compose", g.name))
                    })?;
                }
                h.push(acc.f);
                adj.push(Some(acc));
            } else {
                h.push(val.eval_h(a, img)?);
                adj.push(None);
            }
        }
        let v = self
            .v
            .iter()
            .map(|p| val.eval_v(a, p))
            .collect::<Result<Vec<_>>>()?;
        let sq = self
            .sq
            .iter()
            .map(|e| val.eval(a, e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Valuation {
            objects,
            h,
            adj,
            v,
            sq,
        })
    }

    /// Image of a pasting expression of the source.
    pub fn map_expr(
        &self,
        src: &DblPresentation,
        tgt: &DblPresentation,
        e: &SqExpr,
    ) -> Result<SqExpr> {
        let all = |xs: &[SqExpr]| {
            xs.iter()
                .map(|x| self.map_expr(src, tgt, x))
                .collect::<Result<Vec<_>>>()
        };
        Ok(match e {
            SqExpr::Gen(i) => self.sq[*i].clone(),
            SqExpr::VInv(x) => self.map_expr(src, tgt, x)?.vinv(),
            SqExpr::HInv(x) => self.map_expr(src, tgt, x)?.hinv(),
            SqExpr::Unit(i) => word_unit(tgt, &self.h[*i])?,
            SqExpr::Counit(i) => word_counit(tgt, &self.h[*i])?,
            SqExpr::IdH(p) => SqExpr::IdH(self.map_v(p)),
            SqExpr::IdV(p) => SqExpr::IdV(self.map_h(src, p)),
            SqExpr::HComp(xs) => SqExpr::h(all(xs)?),
            SqExpr::VComp(xs) => SqExpr::v(all(xs)?),
        })
    }

    /// The identity map of a presentation.
    pub fn identity(p: &DblPresentation) -> Self {
        PresMorphism {
            objects: (0..p.objects.len()).collect(),
            h: (0..p.h_gens.len())
                .map(|i| HPath {
                    start: p.h_gens[i].src,
                    letters: vec![Letter::Gen(i)],
                })
                .collect(),
            v: (0..p.v_gens.len())
                .map(|i| VPath {
                    start: p.v_gens[i].src,
                    letters: vec![i],
                })
                .collect(),
            sq: (0..p.sq_gens.len()).map(SqExpr::Gen).collect(),
        }
    }
}

/// Postcompose a valuation with a double functor.
pub fn apply_functor(f: &DoubleFunctor, val: &Valuation) -> Valuation {
    Valuation {
        objects: val.objects.iter().map(|&x| f.objects[x]).collect(),
        h: val.h.iter().map(|&x| f.h[x]).collect(),
        adj: val
            .adj
            .iter()
            .map(|e| {
                e.map(|e| HorizontalEquivalence {
                    f: f.h[e.f],
                    g: f.h[e.g],
                    eta: f.squares[e.eta],
                    eps: f.squares[e.eps],
                    adjoint: e.adjoint,
                })
            })
            .collect(),
        v: val.v.iter().map(|&x| f.v[x]).collect(),
        sq: val.sq.iter().map(|&x| f.squares[x]).collect(),
    }
}
