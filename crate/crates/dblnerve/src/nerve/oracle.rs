//! Low levels of the nerve built directly from cells of the target: functors
//! out of the point, an arrow or a square; horizontal pseudo-natural adjoint
//! equivalences between them; invertible modifications into composites.
//! Nothing here goes through presentations or relation search.

use super::{Element, Provenance, SimplexSet};
use crate::dbl::{FiniteDoubleCategory, HorizontalEquivalence};
use crate::error::{Error, Result};

/// Largest `m`, `k` and `n` the oracle covers.
pub const ORACLE_MAX: [usize; 3] = [1, 1, 2];

const NONE: usize = usize::MAX;

/// Components of a transformation: 1-cells by point, whi squares by `x`,
/// globular squares by `y`.
type Components = ([[usize; 2]; 2], [usize; 2], [usize; 2]);

/// A functor out of `𝕍[k] ⊗ ℍ[m]` for `m, k ≤ 1`.
#[derive(Clone, Copy)]
struct Base {
    obj: [[usize; 2]; 2],
    /// By `y`, when `m = 1`.
    h: [usize; 2],
    /// By `x`, when `k = 1`.
    v: [usize; 2],
    sq: usize,
}

#[derive(Clone, Copy)]
struct Trans {
    from: usize,
    to: usize,
    eq: [[HorizontalEquivalence; 2]; 2],
    /// Whi component by `x`.
    w: [usize; 2],
    /// Globular component by `y`.
    p: [usize; 2],
}

struct Ctx<'a> {
    a: &'a FiniteDoubleCategory,
    m: usize,
    k: usize,
}

impl Ctx<'_> {
    fn points(&self) -> Vec<(usize, usize)> {
        (0..=self.m)
            .flat_map(|x| (0..=self.k).map(move |y| (x, y)))
            .collect()
    }

    fn bases(&self) -> Vec<Base> {
        let a = self.a;
        let blank = Base {
            obj: [[NONE; 2]; 2],
            h: [NONE; 2],
            v: [NONE; 2],
            sq: NONE,
        };
        match (self.m, self.k) {
            (0, 0) => (0..a.n_objects())
                .map(|o| Base {
                    obj: [[o, NONE], [NONE; 2]],
                    ..blank
                })
                .collect(),
            (1, 0) => (0..a.n_h())
                .map(|f| Base {
                    obj: [[a.h_src(f), NONE], [a.h_tgt(f), NONE]],
                    h: [f, NONE],
                    ..blank
                })
                .collect(),
            (0, 1) => (0..a.n_v())
                .map(|u| Base {
                    obj: [[a.v_src(u), a.v_tgt(u)], [NONE; 2]],
                    v: [u, NONE],
                    ..blank
                })
                .collect(),
            _ => (0..a.n_squares())
                .map(|s| {
                    let [t, b, l, r] = a.boundary(s);
                    Base {
                        obj: [[a.h_src(t), a.h_src(b)], [a.h_tgt(t), a.h_tgt(b)]],
                        h: [t, b],
                        v: [l, r],
                        sq: s,
                    }
                })
                .collect(),
        }
    }

    fn base_pairs(&self, b: &Base, z: &str) -> Element {
        let a = self.a;
        let mut out = Vec::new();
        for (x, y) in self.points() {
            out.push((
                format!("obj {x}|{y}|{z}"),
                a.object_name(b.obj[x][y]).to_string(),
            ));
        }
        if self.m == 1 {
            for y in 0..=self.k {
                out.push((format!("h 01|{y}|{z}"), a.h_name(b.h[y]).to_string()));
            }
        }
        if self.k == 1 {
            for x in 0..=self.m {
                out.push((format!("v {x}|01|{z}"), a.v_name(b.v[x]).to_string()));
            }
        }
        if self.m == 1 && self.k == 1 {
            out.push((format!("sq 01|01|{z}"), a.sq_name(b.sq).to_string()));
        }
        out
    }

    fn trans_pairs(&self, t: &Trans, e: &str) -> Element {
        let a = self.a;
        let mut out = Vec::new();
        for (x, y) in self.points() {
            let d = t.eq[x][y];
            let image = format!(
                "({}, {}, {}, {})",
                a.h_name(d.f),
                a.h_name(d.g),
                a.sq_name(d.eta),
                a.sq_name(d.eps)
            );
            out.push((format!("h {x}|{y}|{e}"), image));
        }
        if self.k == 1 {
            for x in 0..=self.m {
                out.push((format!("sq {x}|01|{e}"), a.sq_name(t.w[x]).to_string()));
            }
        }
        if self.m == 1 {
            for y in 0..=self.k {
                out.push((format!("sq 01|{y}|{e}"), a.sq_name(t.p[y]).to_string()));
            }
        }
        out
    }

    /// All horizontal pseudo-natural adjoint equivalences `F ⇒ G`.
    fn transformations(&self, bases: &[Base], fi: usize, gi: usize) -> Vec<Trans> {
        let a = self.a;
        let (f, g) = (&bases[fi], &bases[gi]);
        let adjoint: Vec<HorizontalEquivalence> = a
            .horizontal_equivalences()
            .iter()
            .copied()
            .filter(|e| e.adjoint)
            .collect();
        let points = self.points();
        // Choices of adjoint data at every point.
        let mut eqs: Vec<Vec<HorizontalEquivalence>> = vec![Vec::new()];
        for &(x, y) in &points {
            let here: Vec<HorizontalEquivalence> = adjoint
                .iter()
                .copied()
                .filter(|e| a.h_src(e.f) == f.obj[x][y] && a.h_tgt(e.f) == g.obj[x][y])
                .collect();
            eqs = eqs
                .into_iter()
                .flat_map(|pre| here.iter().map(move |&e| [pre.clone(), vec![e]].concat()))
                .collect();
        }
        let mut out = Vec::new();
        for choice in eqs {
            let mut eq = [[choice[0]; 2]; 2];
            for (i, &(x, y)) in points.iter().enumerate() {
                eq[x][y] = choice[i];
            }
            let ws: Vec<Vec<usize>> = if self.k == 1 {
                (0..=self.m)
                    .map(|x| {
                        a.squares_with(eq[x][0].f, eq[x][1].f, f.v[x], g.v[x])
                            .iter()
                            .copied()
                            .filter(|&s| a.is_whi(s))
                            .collect()
                    })
                    .collect()
            } else {
                Vec::new()
            };
            let ps: Vec<Vec<usize>> = if self.m == 1 {
                (0..=self.k)
                    .map(|y| {
                        let top = a.comp_h(eq[0][y].f, g.h[y]).expect("composable");
                        let bot = a.comp_h(f.h[y], eq[1][y].f).expect("composable");
                        a.globular_squares(top, bot)
                            .iter()
                            .copied()
                            .filter(|&s| a.is_vertically_invertible(s))
                            .collect()
                    })
                    .collect()
            } else {
                Vec::new()
            };
            for w in product(&ws) {
                for p in product(&ps) {
                    let mut t = Trans {
                        from: fi,
                        to: gi,
                        eq,
                        w: [NONE; 2],
                        p: [NONE; 2],
                    };
                    t.w[..w.len()].copy_from_slice(&w);
                    t.p[..p.len()].copy_from_slice(&p);
                    if self.natural(f, g, &t) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    /// The square component against the generating square.
    fn natural(&self, f: &Base, g: &Base, t: &Trans) -> bool {
        if self.m != 1 || self.k != 1 {
            return true;
        }
        let a = self.a;
        let lhs = a.hcomp_sq(f.sq, t.w[1]).and_then(|x| a.vcomp_sq(t.p[0], x));
        let rhs = a.hcomp_sq(t.w[0], g.sq).and_then(|x| a.vcomp_sq(x, t.p[1]));
        lhs.is_some() && lhs == rhs
    }

    /// Components of `φ` then `ψ`: horizontal morphisms, whi squares,
    /// globular squares.
    fn composite(&self, phi: &Trans, psi: &Trans) -> Option<Components> {
        let a = self.a;
        let mut obj = [[NONE; 2]; 2];
        for (x, y) in self.points() {
            obj[x][y] = a.comp_h(phi.eq[x][y].f, psi.eq[x][y].f)?;
        }
        let mut w = [NONE; 2];
        if self.k == 1 {
            for (x, slot) in w.iter_mut().enumerate().take(self.m + 1) {
                *slot = a.hcomp_sq(phi.w[x], psi.w[x])?;
            }
        }
        let mut p = [NONE; 2];
        if self.m == 1 {
            for (y, slot) in p.iter_mut().enumerate().take(self.k + 1) {
                let top = a.hcomp_sq(a.e_sq(phi.eq[0][y].f), psi.p[y])?;
                let bot = a.hcomp_sq(phi.p[y], a.e_sq(psi.eq[1][y].f))?;
                *slot = a.vcomp_sq(top, bot)?;
            }
        }
        Some((obj, w, p))
    }
}

fn product(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|pre| c.iter().map(move |&x| [pre.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

/// `(ℕ𝔸)_{m,k,n}` for `m, k ≤ 1`, `n ≤ 2`, built structurally.
pub fn nerve_oracle(a: &FiniteDoubleCategory, m: usize, k: usize, n: usize) -> Result<SimplexSet> {
    if m > ORACLE_MAX[0] || k > ORACLE_MAX[1] || n > ORACLE_MAX[2] {
        return Err(Error::RangeExceeded(format!(
            "the structural description covers m, k ≤ 1 and n ≤ 2, not ({m}, {k}, {n})"
        )));
    }
    let ctx = Ctx { a, m, k };
    let bases = ctx.bases();
    let mut items: Vec<Element> = Vec::new();
    match n {
        0 => items.extend(bases.iter().map(|b| ctx.base_pairs(b, "0"))),
        1 => {
            for fi in 0..bases.len() {
                for gi in 0..bases.len() {
                    for t in ctx.transformations(&bases, fi, gi) {
                        let mut e = ctx.base_pairs(&bases[fi], "0");
                        e.extend(ctx.base_pairs(&bases[gi], "1"));
                        e.extend(ctx.trans_pairs(&t, "01"));
                        items.push(e);
                    }
                }
            }
        }
        _ => {
            let nb = bases.len();
            let mut by_pair: Vec<Vec<Vec<Trans>>> = vec![vec![Vec::new(); nb]; nb];
            for fi in 0..nb {
                for gi in 0..nb {
                    by_pair[fi][gi] = ctx.transformations(&bases, fi, gi);
                }
            }
            let all: Vec<Trans> = by_pair.iter().flatten().flatten().copied().collect();
            for phi in &all {
                for hi in 0..nb {
                    for psi in &by_pair[phi.to][hi] {
                        let Some((obj, w, p)) = ctx.composite(phi, psi) else {
                            continue;
                        };
                        for theta in &by_pair[phi.from][hi] {
                            for mu in modifications(&ctx, &bases, theta, (obj, w, p)) {
                                let mut e = ctx.base_pairs(&bases[phi.from], "0");
                                e.extend(ctx.base_pairs(&bases[phi.to], "1"));
                                e.extend(ctx.base_pairs(&bases[hi], "2"));
                                e.extend(ctx.trans_pairs(phi, "01"));
                                e.extend(ctx.trans_pairs(psi, "12"));
                                e.extend(ctx.trans_pairs(theta, "02"));
                                for (x, y) in ctx.points() {
                                    e.push((
                                        format!("sq {x}|{y}|012"),
                                        a.sq_name(mu[x][y]).to_string(),
                                    ));
                                }
                                items.push(e);
                            }
                        }
                    }
                }
            }
        }
    }
    let items = items
        .into_iter()
        .map(|mut e| {
            e.sort();
            (e, None)
        })
        .collect();
    SimplexSet::new([m, k, n], items, Provenance::StructuralOracle)
}

/// Invertible `μ: θ ⇒ φ;ψ`, given the components of `φ;ψ`.
fn modifications(
    ctx: &Ctx,
    bases: &[Base],
    theta: &Trans,
    comp: Components,
) -> Vec<[[usize; 2]; 2]> {
    let a = ctx.a;
    let (obj, w, p) = comp;
    let (f, h) = (&bases[theta.from], &bases[theta.to]);
    let points = ctx.points();
    let choices: Vec<Vec<usize>> = points
        .iter()
        .map(|&(x, y)| {
            a.globular_squares(theta.eq[x][y].f, obj[x][y])
                .iter()
                .copied()
                .filter(|&s| a.is_vertically_invertible(s))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for c in product(&choices) {
        let mut mu = [[NONE; 2]; 2];
        for (i, &(x, y)) in points.iter().enumerate() {
            mu[x][y] = c[i];
        }
        let vertical_ok = ctx.k == 0
            || (0..=ctx.m).all(|x| {
                let lhs = a.vcomp_sq(theta.w[x], mu[x][1]);
                lhs.is_some() && lhs == a.vcomp_sq(mu[x][0], w[x])
            });
        let horizontal_ok = ctx.m == 0
            || (0..=ctx.k).all(|y| {
                let lhs = a
                    .hcomp_sq(mu[0][y], a.e_sq(h.h[y]))
                    .and_then(|s| a.vcomp_sq(s, p[y]));
                let rhs = a
                    .hcomp_sq(a.e_sq(f.h[y]), mu[1][y])
                    .and_then(|s| a.vcomp_sq(theta.p[y], s));
                lhs.is_some() && lhs == rhs
            });
        if vertical_ok && horizontal_ok {
            out.push(mu);
        }
    }
    out
}
