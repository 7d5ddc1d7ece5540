//! Evaluation of pasting expressions and the backtracking search for double
//! functors out of a presentation.

use serde::Serialize;

use super::{DblPresentation, HPath, Letter, SqExpr, SqFlag, VPath};
use crate::dbl::{FiniteDoubleCategory, HorizontalEquivalence};
use crate::error::{Error, Result};

/// Images of all generators. Adjoint generators carry adjoint equivalence
/// data; their `h` entry repeats the data's `f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Valuation {
    pub objects: Vec<usize>,
    pub h: Vec<usize>,
    pub adj: Vec<Option<HorizontalEquivalence>>,
    pub v: Vec<usize>,
    pub sq: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Valuation {
    fn blank(p: &DblPresentation) -> Self {
        Valuation {
            objects: vec![UNSET; p.objects.len()],
            h: vec![UNSET; p.h_gens.len()],
            adj: vec![None; p.h_gens.len()],
            v: vec![UNSET; p.v_gens.len()],
            sq: vec![UNSET; p.sq_gens.len()],
        }
    }

    pub fn eval_h(&self, a: &FiniteDoubleCategory, p: &HPath) -> Result<usize> {
        let mut acc = a.id_h(self.objects[p.start]);
        for &l in &p.letters {
            let m = match l {
                Letter::Gen(i) => self.h[i],
                Letter::Partner(i) => {
                    self.adj[i]
                        .ok_or_else(|| miss("partner of a non-adjoint generator"))?
                        .g
                }
            };
            acc = a
                .comp_h(acc, m)
                .ok_or_else(|| miss("horizontal path does not compose"))?;
        }
        Ok(acc)
    }

    pub fn eval_v(&self, a: &FiniteDoubleCategory, p: &VPath) -> Result<usize> {
        let mut acc = a.id_v(self.objects[p.start]);
        for &i in &p.letters {
            acc = a
                .comp_v(acc, self.v[i])
                .ok_or_else(|| miss("vertical path does not compose"))?;
        }
        Ok(acc)
    }

    pub fn eval(&self, a: &FiniteDoubleCategory, e: &SqExpr) -> Result<usize> {
        match e {
            SqExpr::Gen(i) => Ok(self.sq[*i]),
            SqExpr::VInv(x) => {
                let s = self.eval(a, x)?;
                a.vertical_inverse(s)
                    .ok_or_else(|| miss(&format!("`{}` has no vertical inverse", a.sq_name(s))))
            }
            SqExpr::HInv(x) => {
                let s = self.eval(a, x)?;
                a.horizontal_inverse(s)
                    .ok_or_else(|| miss(&format!("`{}` has no horizontal inverse", a.sq_name(s))))
            }
            SqExpr::Unit(i) => Ok(self.adj[*i]
                .ok_or_else(|| miss("unit of a non-adjoint generator"))?
                .eta),
            SqExpr::Counit(i) => Ok(self.adj[*i]
                .ok_or_else(|| miss("counit of a non-adjoint generator"))?
                .eps),
            SqExpr::IdH(p) => Ok(a.id_sq(self.eval_v(a, p)?)),
            SqExpr::IdV(p) => Ok(a.e_sq(self.eval_h(a, p)?)),
            SqExpr::HComp(xs) => {
                let parts = xs
                    .iter()
                    .map(|x| self.eval(a, x))
                    .collect::<Result<Vec<_>>>()?;
                a.hcomp_all(&parts)
                    .ok_or_else(|| miss("horizontal composite does not compose"))
            }
            SqExpr::VComp(xs) => {
                let parts = xs
                    .iter()
                    .map(|x| self.eval(a, x))
                    .collect::<Result<Vec<_>>>()?;
                a.vcomp_all(&parts)
                    .ok_or_else(|| miss("vertical composite does not compose"))
            }
        }
    }
}

fn miss(what: &str) -> Error {
    Error::BoundaryMismatch(what.to_string())
}

/// Sorted `(generator, image)` pairs; two valuations are equal iff these are.
pub fn canonical(
    p: &DblPresentation,
    a: &FiniteDoubleCategory,
    val: &Valuation,
) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (i, o) in p.objects.iter().enumerate() {
        out.push((
            format!("obj {o}"),
            a.object_name(val.objects[i]).to_string(),
        ));
    }
    for (i, g) in p.h_gens.iter().enumerate() {
        let image = match val.adj[i] {
            Some(e) => format!(
                "({}, {}, {}, {})",
                a.h_name(e.f),
                a.h_name(e.g),
                a.sq_name(e.eta),
                a.sq_name(e.eps)
            ),
            None => a.h_name(val.h[i]).to_string(),
        };
        out.push((format!("h {}", g.name), image));
    }
    for (i, g) in p.v_gens.iter().enumerate() {
        out.push((format!("v {}", g.name), a.v_name(val.v[i]).to_string()));
    }
    for (i, g) in p.sq_gens.iter().enumerate() {
        out.push((format!("sq {}", g.name), a.sq_name(val.sq[i]).to_string()));
    }
    out.sort();
    out
}

fn flag_ok(a: &FiniteDoubleCategory, flag: SqFlag, s: usize) -> bool {
    match flag {
        SqFlag::Plain => true,
        SqFlag::VertInvertible => a.is_vertically_invertible(s),
        SqFlag::HorInvertible => a.is_horizontally_invertible(s),
        SqFlag::Whi => a.is_whi(s),
    }
}

/// Does a complete valuation define a double functor?
pub fn satisfies(p: &DblPresentation, a: &FiniteDoubleCategory, val: &Valuation) -> Result<bool> {
    for (i, g) in p.h_gens.iter().enumerate() {
        let f = val.h[i];
        if a.h_src(f) != val.objects[g.src] || a.h_tgt(f) != val.objects[g.tgt] {
            return Ok(false);
        }
        match val.adj[i] {
            Some(e) if g.adjoint => {
                if e.f != f || !a.is_adjoint_data(&e) {
                    return Ok(false);
                }
            }
            None if !g.adjoint => {}
            _ => return Ok(false),
        }
    }
    for (i, g) in p.v_gens.iter().enumerate() {
        let u = val.v[i];
        if a.v_src(u) != val.objects[g.src] || a.v_tgt(u) != val.objects[g.tgt] {
            return Ok(false);
        }
    }
    for (i, g) in p.sq_gens.iter().enumerate() {
        let want = [
            val.eval_h(a, &g.top)?,
            val.eval_h(a, &g.bottom)?,
            val.eval_v(a, &g.left)?,
            val.eval_v(a, &g.right)?,
        ];
        if a.boundary(val.sq[i]) != want || !flag_ok(a, g.flag, val.sq[i]) {
            return Ok(false);
        }
    }
    for [l, r] in &p.h_relations {
        if val.eval_h(a, l)? != val.eval_h(a, r)? {
            return Ok(false);
        }
    }
    for [l, r] in &p.v_relations {
        if val.eval_v(a, l)? != val.eval_v(a, r)? {
            return Ok(false);
        }
    }
    for [l, r] in &p.relations {
        if val.eval(a, l)? != val.eval(a, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy)]
enum Step {
    Obj(usize),
    H(usize),
    V(usize),
    Sq(usize),
}

struct Plan {
    steps: Vec<Step>,
    checks: Vec<Vec<usize>>,
    h_checks: Vec<Vec<usize>>,
    v_checks: Vec<Vec<usize>>,
}

fn plan(p: &DblPresentation) -> Plan {
    let mut steps = Vec::new();
    let mut known_at = vec![usize::MAX; p.objects.len()];
    let mut h_at = vec![usize::MAX; p.h_gens.len()];
    let mut v_at = vec![usize::MAX; p.v_gens.len()];
    let mut sq_at = vec![usize::MAX; p.sq_gens.len()];
    let push_h =
        |i: usize, steps: &mut Vec<Step>, known_at: &mut Vec<usize>, h_at: &mut Vec<usize>| {
            if h_at[i] == usize::MAX {
                h_at[i] = steps.len();
                for o in [p.h_gens[i].src, p.h_gens[i].tgt] {
                    known_at[o] = known_at[o].min(steps.len());
                }
                steps.push(Step::H(i));
            }
        };
    let push_v =
        |i: usize, steps: &mut Vec<Step>, known_at: &mut Vec<usize>, v_at: &mut Vec<usize>| {
            if v_at[i] == usize::MAX {
                v_at[i] = steps.len();
                for o in [p.v_gens[i].src, p.v_gens[i].tgt] {
                    known_at[o] = known_at[o].min(steps.len());
                }
                steps.push(Step::V(i));
            }
        };
    let push_obj = |o: usize, steps: &mut Vec<Step>, known_at: &mut Vec<usize>| {
        if known_at[o] == usize::MAX {
            known_at[o] = steps.len();
            steps.push(Step::Obj(o));
        }
    };
    for (s, g) in p.sq_gens.iter().enumerate() {
        for path in [&g.top, &g.bottom] {
            for &l in &path.letters {
                let (Letter::Gen(i) | Letter::Partner(i)) = l;
                push_h(i, &mut steps, &mut known_at, &mut h_at);
            }
        }
        for path in [&g.left, &g.right] {
            for &i in &path.letters {
                push_v(i, &mut steps, &mut known_at, &mut v_at);
            }
        }
        for o in [g.top.start, g.bottom.start, g.left.start, g.right.start] {
            push_obj(o, &mut steps, &mut known_at);
        }
        sq_at[s] = steps.len();
        steps.push(Step::Sq(s));
    }
    for i in 0..p.h_gens.len() {
        push_h(i, &mut steps, &mut known_at, &mut h_at);
    }
    for i in 0..p.v_gens.len() {
        push_v(i, &mut steps, &mut known_at, &mut v_at);
    }
    for o in 0..p.objects.len() {
        push_obj(o, &mut steps, &mut known_at);
    }
    let mut checks = vec![Vec::new(); steps.len()];
    for (k, [l, r]) in p.relations.iter().enumerate() {
        let mut last = 0;
        for side in [l, r] {
            side.visit(&mut |e| {
                let at = match e {
                    SqExpr::Gen(i) => sq_at[*i],
                    SqExpr::Unit(i) | SqExpr::Counit(i) => h_at[*i],
                    SqExpr::IdH(path) => path
                        .letters
                        .iter()
                        .map(|&i| v_at[i])
                        .max()
                        .unwrap_or(0)
                        .max(known_at[path.start]),
                    SqExpr::IdV(path) => path
                        .letters
                        .iter()
                        .map(|&(Letter::Gen(i) | Letter::Partner(i))| h_at[i])
                        .max()
                        .unwrap_or(0)
                        .max(known_at[path.start]),
                    _ => 0,
                };
                last = last.max(at);
            });
        }
        if !checks.is_empty() {
            checks[last].push(k);
        }
    }
    let h_path_at = |path: &HPath| {
        path.letters
            .iter()
            .map(|&(Letter::Gen(i) | Letter::Partner(i))| h_at[i])
            .max()
            .unwrap_or(0)
            .max(known_at[path.start])
    };
    let mut h_checks = vec![Vec::new(); steps.len()];
    for (k, [l, r]) in p.h_relations.iter().enumerate() {
        h_checks[h_path_at(l).max(h_path_at(r))].push(k);
    }
    let v_path_at = |path: &VPath| {
        path.letters
            .iter()
            .map(|&i| v_at[i])
            .max()
            .unwrap_or(0)
            .max(known_at[path.start])
    };
    let mut v_checks = vec![Vec::new(); steps.len()];
    for (k, [l, r]) in p.v_relations.iter().enumerate() {
        v_checks[v_path_at(l).max(v_path_at(r))].push(k);
    }
    Plan {
        steps,
        checks,
        h_checks,
        v_checks,
    }
}

struct Search<'a> {
    p: &'a DblPresentation,
    a: &'a FiniteDoubleCategory,
    plan: Plan,
    val: Valuation,
    out: Vec<Valuation>,
    visits: u64,
    budget: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.visits += 1;
        if self.visits > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn relations_hold(&self, at: usize) -> Result<bool> {
        let bug = |k: usize, e: Error| Error::DisagreementBug(format!("path relation {k}: {e}"));
        for &k in &self.plan.h_checks[at] {
            let [l, r] = &self.p.h_relations[k];
            if self.val.eval_h(self.a, l).map_err(|e| bug(k, e))?
                != self.val.eval_h(self.a, r).map_err(|e| bug(k, e))?
            {
                return Ok(false);
            }
        }
        for &k in &self.plan.v_checks[at] {
            let [l, r] = &self.p.v_relations[k];
            if self.val.eval_v(self.a, l).map_err(|e| bug(k, e))?
                != self.val.eval_v(self.a, r).map_err(|e| bug(k, e))?
            {
                return Ok(false);
            }
        }
        for &k in &self.plan.checks[at] {
            let [l, r] = &self.p.relations[k];
            let lv = self
                .val
                .eval(self.a, l)
                .map_err(|e| Error::DisagreementBug(format!("relation {k}: {e}")))?;
            let rv = self
                .val
                .eval(self.a, r)
                .map_err(|e| Error::DisagreementBug(format!("relation {k}: {e}")))?;
            if lv != rv {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Assign endpoint objects for a morphism with the given image endpoints.
    /// Returns the objects newly assigned, or None on conflict.
    fn bind(&mut self, ends: [(usize, usize); 2]) -> Option<Vec<usize>> {
        let mut fresh = Vec::new();
        for (o, x) in ends {
            let cur = self.val.objects[o];
            if cur == UNSET {
                self.val.objects[o] = x;
                fresh.push(o);
            } else if cur != x {
                for &f in &fresh {
                    self.val.objects[f] = UNSET;
                }
                return None;
            }
        }
        Some(fresh)
    }

    fn go(&mut self, at: usize) -> Result<()> {
        if at == self.plan.steps.len() {
            self.out.push(self.val.clone());
            return Ok(());
        }
        let (p, a) = (self.p, self.a);
        match self.plan.steps[at] {
            Step::Obj(o) => {
                for x in 0..a.n_objects() {
                    self.tick()?;
                    self.val.objects[o] = x;
                    if self.relations_hold(at)? {
                        self.go(at + 1)?;
                    }
                }
                self.val.objects[o] = UNSET;
            }
            Step::H(i) => {
                let g = &p.h_gens[i];
                let (s, t) = (self.val.objects[g.src], self.val.objects[g.tgt]);
                if g.adjoint {
                    let cands: Vec<HorizontalEquivalence> = a
                        .horizontal_equivalences()
                        .iter()
                        .filter(|e| e.adjoint)
                        .filter(|e| {
                            (s == UNSET || a.h_src(e.f) == s) && (t == UNSET || a.h_tgt(e.f) == t)
                        })
                        .copied()
                        .collect();
                    for e in cands {
                        self.tick()?;
                        let Some(fresh) = self.bind([(g.src, a.h_src(e.f)), (g.tgt, a.h_tgt(e.f))])
                        else {
                            continue;
                        };
                        self.val.h[i] = e.f;
                        self.val.adj[i] = Some(e);
                        if self.relations_hold(at)? {
                            self.go(at + 1)?;
                        }
                        for o in fresh {
                            self.val.objects[o] = UNSET;
                        }
                    }
                    self.val.adj[i] = None;
                } else {
                    let cands: Vec<usize> = if s != UNSET && t != UNSET {
                        a.h_hom(s, t).to_vec()
                    } else {
                        (0..a.n_h())
                            .filter(|&f| {
                                (s == UNSET || a.h_src(f) == s) && (t == UNSET || a.h_tgt(f) == t)
                            })
                            .collect()
                    };
                    for f in cands {
                        self.tick()?;
                        let Some(fresh) = self.bind([(g.src, a.h_src(f)), (g.tgt, a.h_tgt(f))])
                        else {
                            continue;
                        };
                        self.val.h[i] = f;
                        if self.relations_hold(at)? {
                            self.go(at + 1)?;
                        }
                        for o in fresh {
                            self.val.objects[o] = UNSET;
                        }
                    }
                }
                self.val.h[i] = UNSET;
            }
            Step::V(i) => {
                let g = &p.v_gens[i];
                let (s, t) = (self.val.objects[g.src], self.val.objects[g.tgt]);
                let cands: Vec<usize> = if s != UNSET && t != UNSET {
                    a.v_hom(s, t).to_vec()
                } else {
                    (0..a.n_v())
                        .filter(|&u| {
                            (s == UNSET || a.v_src(u) == s) && (t == UNSET || a.v_tgt(u) == t)
                        })
                        .collect()
                };
                for u in cands {
                    self.tick()?;
                    let Some(fresh) = self.bind([(g.src, a.v_src(u)), (g.tgt, a.v_tgt(u))]) else {
                        continue;
                    };
                    self.val.v[i] = u;
                    if self.relations_hold(at)? {
                        self.go(at + 1)?;
                    }
                    for o in fresh {
                        self.val.objects[o] = UNSET;
                    }
                }
                self.val.v[i] = UNSET;
            }
            Step::Sq(s) => {
                let g = &p.sq_gens[s];
                let bd = |r: Result<usize>| {
                    r.map_err(|e| Error::DisagreementBug(format!("square `{}`: {e}", g.name)))
                };
                let top = bd(self.val.eval_h(a, &g.top))?;
                let bottom = bd(self.val.eval_h(a, &g.bottom))?;
                let left = bd(self.val.eval_v(a, &g.left))?;
                let right = bd(self.val.eval_v(a, &g.right))?;
                let cands: Vec<usize> = a
                    .squares_with(top, bottom, left, right)
                    .iter()
                    .copied()
                    .filter(|&x| flag_ok(a, g.flag, x))
                    .collect();
                for x in cands {
                    self.tick()?;
                    self.val.sq[s] = x;
                    if self.relations_hold(at)? {
                        self.go(at + 1)?;
                    }
                }
                self.val.sq[s] = UNSET;
            }
        }
        Ok(())
    }
}

/// All double functors from the presented double category into `a`, sorted.
/// `budget` bounds the number of candidate images tried.
pub fn enumerate(
    p: &DblPresentation,
    a: &FiniteDoubleCategory,
    budget: u64,
) -> Result<Vec<Valuation>> {
    p.validate()?;
    let plan = plan(p);
    let mut search = Search {
        p,
        a,
        plan,
        val: Valuation::blank(p),
        out: Vec::new(),
        visits: 0,
        budget,
    };
    // Relations without generators (identities on objects only) sit at step 0.
    if search.plan.steps.is_empty() {
        if p.relations.is_empty() {
            return Ok(vec![search.val]);
        }
        return Err(Error::DisagreementBug(
            "relations on an empty presentation".into(),
        ));
    }
    search.go(0)?;
    let mut out = search.out;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::tests::free_square;
    use super::*;
    use crate::dbl::{Direction, FiniteDoubleCategory};
    use crate::two::tests::iso;

    #[test]
    fn functors_from_the_free_square_are_squares() {
        let p = free_square();
        let h = FiniteDoubleCategory::embed(&iso(), Direction::Horizontal);
        assert_eq!(enumerate(&p, &h, 1 << 20).unwrap().len(), h.n_squares());
        let hs = FiniteDoubleCategory::hsim_embed(&iso()).dbl;
        let all = enumerate(&p, &hs, 1 << 20).unwrap();
        assert_eq!(all.len(), hs.n_squares());
        assert!(all.iter().all(|v| satisfies(&p, &hs, v).unwrap()));
    }

    #[test]
    fn adjoint_generator_ranges_over_adjoint_data() {
        let mut p = DblPresentation::default();
        let x = p.add_object("0");
        let y = p.add_object("1");
        p.add_h("f", x, y, true);
        let h = FiniteDoubleCategory::embed(&iso(), Direction::Horizontal);
        assert_eq!(enumerate(&p, &h, 1 << 20).unwrap().len(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let p = free_square();
        let hs = FiniteDoubleCategory::hsim_embed(&iso()).dbl;
        assert_eq!(enumerate(&p, &hs, 3), Err(Error::BudgetExceeded(3)));
    }
}
