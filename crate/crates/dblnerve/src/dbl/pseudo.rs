//! The 2-category of double functors, horizontal pseudo-natural
//! transformations and modifications between two finite double categories.
//!
//! A transformation `φ: F ⇒ G` has a horizontal component `φ_i: Fi → Gi`
//! per object, a square `φ_u` per vertical (top `φ_i`, bottom `φ_i'`, left
//! `Fu`, right `Gu`) and a vertically invertible globular square `φ_f` per
//! horizontal `f: i → j` with top `φ_i;Gf` and bottom `Ff;φ_j`.

use std::collections::HashMap;

use super::{DoubleFunctor, FiniteDoubleCategory};
use crate::cat::RawArrow;
use crate::error::{Error, Result};
use crate::present::enumerate;
use crate::shapes::{double_functor_of, presentation_of_dbl};
use crate::two::{FiniteTwoCategory, RawTwoCategory, TwoFunctor};
use crate::Verdict;

/// Search budget used when the caller does not supply one.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// `DBLNERVE_BUDGET` if set and numeric, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var("DBLNERVE_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

const UNSET: usize = usize::MAX;

/// Components are indexed by the cells of the domain; entries for identity
/// cells are filled in as well.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPseudoNat {
    pub source: usize,
    pub target: usize,
    pub at_object: Vec<usize>,
    pub at_vertical: Vec<usize>,
    pub at_horizontal: Vec<usize>,
}

/// Globular components `μ_i` with top `φ_i` and bottom `ψ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modification {
    pub source: usize,
    pub target: usize,
    pub at_object: Vec<usize>,
}

/// `Ps(𝕀, 𝔸)`: cell `k` of `two` at each level is entry `k` of the matching
/// vector.
#[derive(Debug, Clone)]
pub struct PseudoHom {
    pub two: FiniteTwoCategory,
    pub functors: Vec<DoubleFunctor>,
    pub transformations: Vec<HPseudoNat>,
    pub modifications: Vec<Modification>,
}

struct Budget {
    left: u64,
    limit: u64,
}

impl Budget {
    fn spend(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded(self.limit));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Shared view of `F, G: 𝕀 → 𝔸` for the condition checks.
struct Ctx<'a> {
    i: &'a FiniteDoubleCategory,
    a: &'a FiniteDoubleCategory,
    f: &'a DoubleFunctor,
    g: &'a DoubleFunctor,
}

impl Ctx<'_> {
    fn vert(&self, n: &HPseudoNat, u: usize) -> usize {
        if self.i.is_id_v(u) {
            let o = n.at_object[self.i.v_src(u)];
            if o == UNSET {
                UNSET
            } else {
                self.a.e_sq(o)
            }
        } else {
            n.at_vertical[u]
        }
    }

    fn horiz(&self, n: &HPseudoNat, f: usize) -> usize {
        if self.i.is_id_h(f) {
            let o = n.at_object[self.i.h_src(f)];
            if o == UNSET {
                UNSET
            } else {
                self.a.e_sq(o)
            }
        } else {
            n.at_horizontal[f]
        }
    }

    fn vertical_functoriality(&self, n: &HPseudoNat, u: usize, w: usize, z: usize) -> bool {
        self.a.vcomp_sq(self.vert(n, u), self.vert(n, w)) == Some(self.vert(n, z))
    }

    fn cocycle(&self, n: &HPseudoNat, f: usize, g: usize, h: usize) -> bool {
        let a = self.a;
        let lhs = (|| {
            let top = a.hcomp_sq(self.horiz(n, f), a.e_sq(self.g.h[g]))?;
            let bot = a.hcomp_sq(a.e_sq(self.f.h[f]), self.horiz(n, g))?;
            a.vcomp_sq(top, bot)
        })();
        lhs == Some(self.horiz(n, h))
    }

    fn naturality(&self, n: &HPseudoNat, s: usize) -> bool {
        let (a, i) = (self.a, self.i);
        let [t, b, l, r] = i.boundary(s);
        let lhs = a
            .hcomp_sq(self.f.squares[s], self.vert(n, r))
            .and_then(|x| a.vcomp_sq(self.horiz(n, t), x));
        let rhs = a
            .hcomp_sq(self.vert(n, l), self.g.squares[s])
            .and_then(|x| a.vcomp_sq(x, self.horiz(n, b)));
        lhs.is_some() && lhs == rhs
    }
}

#[derive(Clone, Copy)]
enum Check {
    VComp(usize, usize, usize),
    Cocycle(usize, usize, usize),
    Natural(usize),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Object(usize),
    Vertical(usize),
    Horizontal(usize),
}

/// All transformations `F ⇒ G`.
fn transformations(
    i: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    fi: usize,
    gi: usize,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    budget: &mut Budget,
) -> Result<Vec<HPseudoNat>> {
    let n = i.n_objects();
    let mut slots: Vec<Slot> = (0..n).map(Slot::Object).collect();
    slots.extend((n..i.n_v()).map(Slot::Vertical));
    slots.extend((n..i.n_h()).map(Slot::Horizontal));
    let pos = |s: Slot| slots.iter().position(|&x| x == s).expect("slot");
    let vpos = |u: usize| {
        if i.is_id_v(u) {
            pos(Slot::Object(i.v_src(u)))
        } else {
            pos(Slot::Vertical(u))
        }
    };
    let hpos = |f: usize| {
        if i.is_id_h(f) {
            pos(Slot::Object(i.h_src(f)))
        } else {
            pos(Slot::Horizontal(f))
        }
    };

    let mut due: Vec<Vec<Check>> = vec![Vec::new(); slots.len()];
    for u in n..i.n_v() {
        for w in n..i.n_v() {
            if let Some(z) = i.comp_v(u, w) {
                due[vpos(u).max(vpos(w)).max(vpos(z))].push(Check::VComp(u, w, z));
            }
        }
    }
    for x in n..i.n_h() {
        for y in n..i.n_h() {
            if let Some(z) = i.comp_h(x, y) {
                due[hpos(x).max(hpos(y)).max(hpos(z))].push(Check::Cocycle(x, y, z));
            }
        }
    }
    for s in 0..i.n_squares() {
        let [t, b, l, r] = i.boundary(s);
        due[hpos(t).max(hpos(b)).max(vpos(l)).max(vpos(r))].push(Check::Natural(s));
    }

    let ctx = Ctx { i, a, f, g };
    let mut cur = HPseudoNat {
        source: fi,
        target: gi,
        at_object: vec![UNSET; n],
        at_vertical: vec![UNSET; i.n_v()],
        at_horizontal: vec![UNSET; i.n_h()],
    };
    let mut out = Vec::new();
    search(&ctx, &slots, &due, 0, &mut cur, &mut out, budget)?;
    for t in &mut out {
        for u in 0..n {
            t.at_vertical[u] = a.e_sq(t.at_object[u]);
            t.at_horizontal[u] = a.e_sq(t.at_object[u]);
        }
    }
    Ok(out)
}

fn candidates(ctx: &Ctx, cur: &HPseudoNat, slot: Slot) -> Vec<usize> {
    let (i, a, f, g) = (ctx.i, ctx.a, ctx.f, ctx.g);
    match slot {
        Slot::Object(o) => a.h_hom(f.objects[o], g.objects[o]).to_vec(),
        Slot::Vertical(u) => {
            let (s, t) = (i.v_src(u), i.v_tgt(u));
            a.squares_with(cur.at_object[s], cur.at_object[t], f.v[u], g.v[u])
                .to_vec()
        }
        Slot::Horizontal(x) => {
            let (s, t) = (i.h_src(x), i.h_tgt(x));
            let (Some(top), Some(bot)) = (
                a.comp_h(cur.at_object[s], g.h[x]),
                a.comp_h(f.h[x], cur.at_object[t]),
            ) else {
                return Vec::new();
            };
            a.globular_squares(top, bot)
                .iter()
                .copied()
                .filter(|&q| a.is_vertically_invertible(q))
                .collect()
        }
    }
}

fn search(
    ctx: &Ctx,
    slots: &[Slot],
    due: &[Vec<Check>],
    k: usize,
    cur: &mut HPseudoNat,
    out: &mut Vec<HPseudoNat>,
    budget: &mut Budget,
) -> Result<()> {
    if k == slots.len() {
        out.push(cur.clone());
        return Ok(());
    }
    for c in candidates(ctx, cur, slots[k]) {
        budget.spend()?;
        match slots[k] {
            Slot::Object(o) => cur.at_object[o] = c,
            Slot::Vertical(u) => cur.at_vertical[u] = c,
            Slot::Horizontal(f) => cur.at_horizontal[f] = c,
        }
        let ok = due[k].iter().all(|&ch| match ch {
            Check::VComp(u, w, z) => ctx.vertical_functoriality(cur, u, w, z),
            Check::Cocycle(x, y, z) => ctx.cocycle(cur, x, y, z),
            Check::Natural(s) => ctx.naturality(cur, s),
        });
        if ok {
            search(ctx, slots, due, k + 1, cur, out, budget)?;
        }
    }
    match slots[k] {
        Slot::Object(o) => cur.at_object[o] = UNSET,
        Slot::Vertical(u) => cur.at_vertical[u] = UNSET,
        Slot::Horizontal(f) => cur.at_horizontal[f] = UNSET,
    }
    Ok(())
}

/// Whether `n` is a transformation `F ⇒ G`. Independent of the search.
pub fn is_hpnt(
    i: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    f: &DoubleFunctor,
    g: &DoubleFunctor,
    n: &HPseudoNat,
) -> bool {
    let no = i.n_objects();
    let ctx = Ctx { i, a, f, g };
    for o in 0..no {
        let p = n.at_object[o];
        if p >= a.n_h() || a.h_src(p) != f.objects[o] || a.h_tgt(p) != g.objects[o] {
            return false;
        }
        if n.at_vertical[o] != a.e_sq(p) || n.at_horizontal[o] != a.e_sq(p) {
            return false;
        }
    }
    for u in no..i.n_v() {
        let s = n.at_vertical[u];
        if s >= a.n_squares()
            || a.boundary(s)
                != [
                    n.at_object[i.v_src(u)],
                    n.at_object[i.v_tgt(u)],
                    f.v[u],
                    g.v[u],
                ]
        {
            return false;
        }
    }
    for x in no..i.n_h() {
        let s = n.at_horizontal[x];
        let top = a.comp_h(n.at_object[i.h_src(x)], g.h[x]);
        let bot = a.comp_h(f.h[x], n.at_object[i.h_tgt(x)]);
        if s >= a.n_squares()
            || Some(a.top(s)) != top
            || Some(a.bottom(s)) != bot
            || !a.has_trivial_verticals(s)
            || !a.is_vertically_invertible(s)
        {
            return false;
        }
    }
    let vc = (no..i.n_v())
        .flat_map(|u| (no..i.n_v()).map(move |w| (u, w)))
        .all(|(u, w)| {
            i.comp_v(u, w)
                .is_none_or(|z| ctx.vertical_functoriality(n, u, w, z))
        });
    let cc = (no..i.n_h())
        .flat_map(|x| (no..i.n_h()).map(move |y| (x, y)))
        .all(|(x, y)| i.comp_h(x, y).is_none_or(|z| ctx.cocycle(n, x, y, z)));
    vc && cc && (0..i.n_squares()).all(|s| ctx.naturality(n, s))
}

fn modifications(
    i: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    fns: (&DoubleFunctor, &DoubleFunctor),
    phi: (usize, &HPseudoNat),
    psi: (usize, &HPseudoNat),
    budget: &mut Budget,
) -> Result<Vec<Modification>> {
    let n = i.n_objects();
    let (f, g) = fns;
    let choices: Vec<Vec<usize>> = (0..n)
        .map(|o| {
            a.globular_squares(phi.1.at_object[o], psi.1.at_object[o])
                .to_vec()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![UNSET; n];
    fn go(
        k: usize,
        choices: &[Vec<usize>],
        cur: &mut Vec<usize>,
        ok: &dyn Fn(&[usize], usize) -> bool,
        out: &mut Vec<Vec<usize>>,
        budget: &mut Budget,
    ) -> Result<()> {
        if k == choices.len() {
            out.push(cur.clone());
            return Ok(());
        }
        for &c in &choices[k] {
            budget.spend()?;
            cur[k] = c;
            if ok(cur, k) {
                go(k + 1, choices, cur, ok, out, budget)?;
            }
        }
        cur[k] = UNSET;
        Ok(())
    }
    let (p, q) = (phi.1, psi.1);
    let ok = |m: &[usize], k: usize| -> bool {
        let vert_ok = (n..i.n_v())
            .filter(|&u| i.v_src(u).max(i.v_tgt(u)) == k)
            .all(|u| {
                let lhs = a.vcomp_sq(p.at_vertical[u], m[i.v_tgt(u)]);
                lhs.is_some() && lhs == a.vcomp_sq(m[i.v_src(u)], q.at_vertical[u])
            });
        let horiz_ok = (n..i.n_h())
            .filter(|&x| i.h_src(x).max(i.h_tgt(x)) == k)
            .all(|x| {
                let lhs = a
                    .hcomp_sq(m[i.h_src(x)], a.e_sq(g.h[x]))
                    .and_then(|y| a.vcomp_sq(y, q.at_horizontal[x]));
                let rhs = a
                    .hcomp_sq(a.e_sq(f.h[x]), m[i.h_tgt(x)])
                    .and_then(|y| a.vcomp_sq(p.at_horizontal[x], y));
                lhs.is_some() && lhs == rhs
            });
        vert_ok && horiz_ok
    };
    let mut raw = Vec::new();
    go(0, &choices, &mut cur, &ok, &mut raw, budget)?;
    out.extend(raw.into_iter().map(|at_object| Modification {
        source: phi.0,
        target: psi.0,
        at_object,
    }));
    Ok(out)
}

fn identity_nat(
    i: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    fi: usize,
    f: &DoubleFunctor,
) -> HPseudoNat {
    HPseudoNat {
        source: fi,
        target: fi,
        at_object: f.objects.iter().map(|&o| a.id_h(o)).collect(),
        at_vertical: (0..i.n_v()).map(|u| a.id_sq(f.v[u])).collect(),
        at_horizontal: (0..i.n_h()).map(|x| a.e_sq(f.h[x])).collect(),
    }
}

/// `φ` then `ψ`.
pub fn compose_nat(
    i: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    p: &HPseudoNat,
    q: &HPseudoNat,
) -> Option<HPseudoNat> {
    if p.target != q.source {
        return None;
    }
    let at_object = (0..i.n_objects())
        .map(|o| a.comp_h(p.at_object[o], q.at_object[o]))
        .collect::<Option<Vec<_>>>()?;
    let at_vertical = (0..i.n_v())
        .map(|u| a.hcomp_sq(p.at_vertical[u], q.at_vertical[u]))
        .collect::<Option<Vec<_>>>()?;
    let at_horizontal = (0..i.n_h())
        .map(|x| {
            let (s, t) = (i.h_src(x), i.h_tgt(x));
            let top = a.hcomp_sq(a.e_sq(p.at_object[s]), q.at_horizontal[x])?;
            let bot = a.hcomp_sq(p.at_horizontal[x], a.e_sq(q.at_object[t]))?;
            a.vcomp_sq(top, bot)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(HPseudoNat {
        source: p.source,
        target: q.target,
        at_object,
        at_vertical,
        at_horizontal,
    })
}

/// Build `Ps(𝕀, 𝔸)`. Errors with `BudgetExceeded` if the searches together
/// try more than `budget` candidate assignments.
pub fn pseudo_hom(
    i: &FiniteDoubleCategory,
    a: &FiniteDoubleCategory,
    budget: u64,
) -> Result<PseudoHom> {
    let mut b = Budget {
        left: budget,
        limit: budget,
    };
    let pres = presentation_of_dbl(i);
    let functors: Vec<DoubleFunctor> = enumerate(&pres, a, budget)?
        .iter()
        .map(|v| double_functor_of(i, a, v))
        .collect();
    let nf = functors.len();

    // Identity transformations first, then the rest in search order.
    let mut nats: Vec<HPseudoNat> = (0..nf)
        .map(|k| identity_nat(i, a, k, &functors[k]))
        .collect();
    let mut nat_index: HashMap<HPseudoNat, usize> = nats
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    for (fi, f) in functors.iter().enumerate() {
        for (gi, g) in functors.iter().enumerate() {
            for t in transformations(i, a, fi, gi, f, g, &mut b)? {
                if !nat_index.contains_key(&t) {
                    nat_index.insert(t.clone(), nats.len());
                    nats.push(t);
                }
            }
        }
    }
    for k in 0..nf {
        if !is_hpnt(i, a, &functors[k], &functors[k], &nats[k]) {
            return Err(Error::DisagreementBug(format!(
                "identity transformation on F{k} fails the axioms"
            )));
        }
    }
    let n1 = nats.len();

    let mut mods: Vec<Modification> = nats
        .iter()
        .enumerate()
        .map(|(k, t)| Modification {
            source: k,
            target: k,
            at_object: t.at_object.iter().map(|&p| a.e_sq(p)).collect(),
        })
        .collect();
    let mut mod_index: HashMap<Modification, usize> = mods
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, m)| (m, k))
        .collect();
    for p in 0..n1 {
        for q in 0..n1 {
            let (tp, tq) = (&nats[p], &nats[q]);
            if tp.source != tq.source || tp.target != tq.target {
                continue;
            }
            let fns = (&functors[tp.source], &functors[tp.target]);
            for m in modifications(i, a, fns, (p, tp), (q, tq), &mut b)? {
                if !mod_index.contains_key(&m) {
                    mod_index.insert(m.clone(), mods.len());
                    mods.push(m);
                }
            }
        }
    }

    let obj_names: Vec<String> = (0..nf).map(|k| format!("F{k}")).collect();
    let mut c1_names: Vec<String> = obj_names.iter().map(|o| format!("id[{o}]")).collect();
    // Names carry the cell index.
    c1_names.extend((nf..n1).map(|k| format!("t{k}")));
    let mut c2_names: Vec<String> = c1_names.iter().map(|c| format!("id[{c}]")).collect();
    for k in n1..mods.len() {
        c2_names.push(format!("m{k}"));
    }

    let missing =
        |what: &str| Error::DisagreementBug(format!("{what} is not among the enumerated cells"));
    let mut raw = RawTwoCategory {
        objects: obj_names.clone(),
        ..Default::default()
    };
    for (k, t) in nats.iter().enumerate().skip(nf) {
        raw.cells1.push(RawArrow::new(
            &c1_names[k],
            &obj_names[t.source],
            &obj_names[t.target],
        ));
    }
    for (k, m) in mods.iter().enumerate().skip(n1) {
        raw.cells2.push(RawArrow::new(
            &c2_names[k],
            &c1_names[m.source],
            &c1_names[m.target],
        ));
    }
    for p in nf..n1 {
        for q in nf..n1 {
            if nats[p].target != nats[q].source {
                continue;
            }
            let c = compose_nat(i, a, &nats[p], &nats[q])
                .ok_or_else(|| missing("a composite transformation"))?;
            let r = *nat_index
                .get(&c)
                .ok_or_else(|| missing("a composite transformation"))?;
            raw.compose1.push([
                c1_names[p].clone(),
                c1_names[q].clone(),
                c1_names[r].clone(),
            ]);
        }
    }
    let n2 = mods.len();
    let is_id2 = |x: usize| x < n1;
    for x in 0..n2 {
        for y in 0..n2 {
            let (mx, my) = (&mods[x], &mods[y]);
            if !is_id2(x) && !is_id2(y) && mx.target == my.source {
                let at_object = (0..i.n_objects())
                    .map(|o| a.vcomp_sq(mx.at_object[o], my.at_object[o]))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| missing("a vertical composite"))?;
                let c = Modification {
                    source: mx.source,
                    target: my.target,
                    at_object,
                };
                let r = *mod_index
                    .get(&c)
                    .ok_or_else(|| missing("a vertical composite"))?;
                raw.vcompose.push([
                    c2_names[x].clone(),
                    c2_names[y].clone(),
                    c2_names[r].clone(),
                ]);
            }
            let skip = (is_id2(x) && is_id2(y)) || x < nf || y < nf;
            if !skip && nats[mx.source].target == nats[my.source].source {
                let at_object = (0..i.n_objects())
                    .map(|o| a.hcomp_sq(mx.at_object[o], my.at_object[o]))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| missing("a horizontal composite"))?;
                let src = compose_nat(i, a, &nats[mx.source], &nats[my.source])
                    .ok_or_else(|| missing("a composite"))?;
                let tgt = compose_nat(i, a, &nats[mx.target], &nats[my.target])
                    .ok_or_else(|| missing("a composite"))?;
                let c = Modification {
                    source: *nat_index.get(&src).ok_or_else(|| missing("a composite"))?,
                    target: *nat_index.get(&tgt).ok_or_else(|| missing("a composite"))?,
                    at_object,
                };
                let r = *mod_index
                    .get(&c)
                    .ok_or_else(|| missing("a horizontal composite"))?;
                raw.hcompose.push([
                    c2_names[x].clone(),
                    c2_names[y].clone(),
                    c2_names[r].clone(),
                ]);
            }
        }
    }
    let two = FiniteTwoCategory::validate(&raw)?;
    debug_assert!((0..n1).all(|k| two.c1_name(k) == c1_names[k]));
    debug_assert!((0..n2).all(|k| two.c2_name(k) == c2_names[k]));
    Ok(PseudoHom {
        two,
        functors,
        transformations: nats,
        modifications: mods,
    })
}

impl PseudoHom {
    pub fn functor_index(&self, f: &DoubleFunctor) -> Option<usize> {
        self.functors.iter().position(|g| g == f)
    }

    pub fn transformation_index(&self, t: &HPseudoNat) -> Option<usize> {
        self.transformations.iter().position(|s| s == t)
    }

    pub fn modification_index(&self, m: &Modification) -> Option<usize> {
        self.modifications.iter().position(|s| s == m)
    }

    /// Every vertical component of transformation `t` is a whi square,
    /// identity verticals included.
    pub fn is_hpnt_equivalence(&self, a: &FiniteDoubleCategory, t: usize) -> Verdict {
        let n = &self.transformations[t];
        match n.at_vertical.iter().position(|&s| !a.is_whi(s)) {
            None => Verdict::pass(),
            Some(u) => Verdict::fail(format!(
                "component at vertical #{u} ({}) is not whi",
                a.sq_name(n.at_vertical[u])
            )),
        }
    }

    /// Restriction `Ps(𝕀₂, 𝔸) → Ps(𝕀₁, 𝔸)` along `j: 𝕀₁ → 𝕀₂`, where
    /// `self` is over `𝕀₂` and `small` over `𝕀₁`.
    pub fn restrict_along(&self, j: &DoubleFunctor, small: &PseudoHom) -> Result<TwoFunctor> {
        let lost = |what: &str| {
            Error::DisagreementBug(format!(
                "restricted {what} is not in the smaller pseudo-hom"
            ))
        };
        let objects = self
            .functors
            .iter()
            .map(|f| {
                small
                    .functor_index(&j.then(f))
                    .ok_or_else(|| lost("functor"))
            })
            .collect::<Result<Vec<_>>>()?;
        let cells1 = self
            .transformations
            .iter()
            .map(|t| {
                let r = HPseudoNat {
                    source: objects[t.source],
                    target: objects[t.target],
                    at_object: j.objects.iter().map(|&o| t.at_object[o]).collect(),
                    at_vertical: j.v.iter().map(|&u| t.at_vertical[u]).collect(),
                    at_horizontal: j.h.iter().map(|&x| t.at_horizontal[x]).collect(),
                };
                small
                    .transformation_index(&r)
                    .ok_or_else(|| lost("transformation"))
            })
            .collect::<Result<Vec<_>>>()?;
        let cells2 = self
            .modifications
            .iter()
            .map(|m| {
                let r = Modification {
                    source: cells1[m.source],
                    target: cells1[m.target],
                    at_object: j.objects.iter().map(|&o| m.at_object[o]).collect(),
                };
                small
                    .modification_index(&r)
                    .ok_or_else(|| lost("modification"))
            })
            .collect::<Result<Vec<_>>>()?;
        let r = TwoFunctor {
            objects,
            cells1,
            cells2,
        };
        r.check(&self.two, &small.two)?;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::Direction;
    use crate::shapes::{dbl_point, v_chain};
    use crate::two::tests::iso;

    #[test]
    fn point_domain_recovers_horizontal_2category() {
        let a = iso();
        let h = FiniteDoubleCategory::embed(&a, Direction::Horizontal);
        let ps = pseudo_hom(&dbl_point(), &h, DEFAULT_BUDGET).unwrap();
        assert_eq!(ps.two.n_objects(), a.n_objects());
        assert_eq!(ps.two.n_cells1(), a.n_cells1());
        assert_eq!(ps.two.n_cells2(), a.n_cells2());
    }

    #[test]
    fn every_found_transformation_passes_the_checker() {
        let a = FiniteDoubleCategory::embed(&iso(), Direction::Horizontal);
        let i = v_chain(1);
        let ps = pseudo_hom(&i, &a, DEFAULT_BUDGET).unwrap();
        for t in &ps.transformations {
            assert!(is_hpnt(
                &i,
                &a,
                &ps.functors[t.source],
                &ps.functors[t.target],
                t
            ));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let a = FiniteDoubleCategory::embed(&iso(), Direction::Horizontal);
        assert!(matches!(
            pseudo_hom(&v_chain(1), &a, 2),
            Err(Error::BudgetExceeded(2))
        ));
    }
}
