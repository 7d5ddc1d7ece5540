//! Finite strict 2-categories.
//!
//! All composition is diagrammatic: `comp1(f, g)` is "f then g", `vcomp(a, b)`
//! is "a then b" along 1-cells, `hcomp(a, b)` puts `a` to the left of `b`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::cat::{identity_name, FiniteCategory, RawArrow, RawCategory};
use crate::error::{Error, Result};
use crate::table::{index_names, lookup, Family, Table};
use crate::Verdict;

/// Tables of a 2-category without identities. Identity 1-cells are `id[A]`,
/// identity 2-cells are `id[f]`; both are implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTwoCategory {
    pub objects: Vec<String>,
    #[serde(default)]
    pub cells1: Vec<RawArrow>,
    /// `src`/`tgt` name 1-cells.
    #[serde(default)]
    pub cells2: Vec<RawArrow>,
    #[serde(default)]
    pub compose1: Vec<[String; 3]>,
    #[serde(default)]
    pub vcompose: Vec<[String; 3]>,
    #[serde(default)]
    pub hcompose: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTwoCategory {
    objects: Vec<String>,
    c1_names: Vec<String>,
    c1_src: Vec<usize>,
    c1_tgt: Vec<usize>,
    id1: Vec<usize>,
    c2_names: Vec<String>,
    c2_src: Vec<usize>,
    c2_tgt: Vec<usize>,
    id2: Vec<usize>,
    is_id2: Vec<bool>,
    comp1: Table,
    vcomp: Table,
    hcomp: Table,
    c1_index: HashMap<String, usize>,
    c2_index: HashMap<String, usize>,
}

/// `(f, g, η, ε)` with `η: id ⇒ f;g` and `ε: g;f ⇒ id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjointEquivalence {
    pub f: usize,
    pub g: usize,
    pub eta: usize,
    pub eps: usize,
}

impl AdjointEquivalence {
    pub fn name(&self, a: &FiniteTwoCategory) -> String {
        format!(
            "({}, {}, {}, {})",
            a.c1_name(self.f),
            a.c1_name(self.g),
            a.c2_name(self.eta),
            a.c2_name(self.eps)
        )
    }
}

impl FiniteTwoCategory {
    pub fn validate(raw: &RawTwoCategory) -> Result<Self> {
        let n_obj = raw.objects.len();
        let obj_index = index_names(&raw.objects)?;
        let mut c1_names = Vec::new();
        let (mut c1_src, mut c1_tgt) = (Vec::new(), Vec::new());
        for (i, o) in raw.objects.iter().enumerate() {
            c1_names.push(identity_name(o));
            c1_src.push(i);
            c1_tgt.push(i);
        }
        for a in &raw.cells1 {
            c1_names.push(a.name.clone());
            c1_src.push(lookup(&obj_index, "object", &a.src)?);
            c1_tgt.push(lookup(&obj_index, "object", &a.tgt)?);
        }
        let id1: Vec<usize> = (0..n_obj).collect();
        let c1_index = index_names(&c1_names)?;
        let mut is_id1 = vec![false; c1_names.len()];
        for &i in &id1 {
            is_id1[i] = true;
        }
        let given1 = triples(&raw.compose1, &c1_index, "1-cell")?;
        let fam1 = Family {
            names: &c1_names,
            src: &c1_src,
            tgt: &c1_tgt,
            n_objects: n_obj,
        };
        let comp1 = fam1.complete(&given1, |a, b| {
            if is_id1[a] {
                Some(b)
            } else if is_id1[b] {
                Some(a)
            } else {
                None
            }
        })?;
        fam1.check_units(&comp1, &id1)?;
        fam1.check_associative(&comp1)?;

        let n1 = c1_names.len();
        let mut c2_names = Vec::new();
        let (mut c2_src, mut c2_tgt) = (Vec::new(), Vec::new());
        for f in 0..n1 {
            c2_names.push(identity_name(&c1_names[f]));
            c2_src.push(f);
            c2_tgt.push(f);
        }
        for a in &raw.cells2 {
            let s = lookup(&c1_index, "1-cell", &a.src)?;
            let t = lookup(&c1_index, "1-cell", &a.tgt)?;
            if c1_src[s] != c1_src[t] || c1_tgt[s] != c1_tgt[t] {
                return Err(Error::BadBoundary {
                    cell: a.name.clone(),
                    detail: "source and target 1-cells are not parallel".into(),
                });
            }
            c2_names.push(a.name.clone());
            c2_src.push(s);
            c2_tgt.push(t);
        }
        let id2: Vec<usize> = (0..n1).collect();
        let c2_index = index_names(&c2_names)?;
        let mut is_id2 = vec![false; c2_names.len()];
        for &i in &id2 {
            is_id2[i] = true;
        }

        let givenv = triples(&raw.vcompose, &c2_index, "2-cell")?;
        let famv = Family {
            names: &c2_names,
            src: &c2_src,
            tgt: &c2_tgt,
            n_objects: n1,
        };
        let vcomp = famv.complete(&givenv, |a, b| {
            if is_id2[a] {
                Some(b)
            } else if is_id2[b] {
                Some(a)
            } else {
                None
            }
        })?;
        famv.check_units(&vcomp, &id2)?;
        famv.check_associative(&vcomp)?;

        let h_src: Vec<usize> = c2_src.iter().map(|&f| c1_src[f]).collect();
        let h_tgt: Vec<usize> = c2_src.iter().map(|&f| c1_tgt[f]).collect();
        let h_unit: Vec<usize> = (0..n_obj).map(|o| id2[id1[o]]).collect();
        let givenh = triples(&raw.hcompose, &c2_index, "2-cell")?;
        let famh = Family {
            names: &c2_names,
            src: &h_src,
            tgt: &h_tgt,
            n_objects: n_obj,
        };
        let hcomp = famh.complete(&givenh, |a, b| {
            if a == h_unit[h_src[a]] {
                Some(b)
            } else if b == h_unit[h_tgt[b]] {
                Some(a)
            } else if is_id2[a] && is_id2[b] {
                Some(id2[comp1[&(c2_src[a], c2_src[b])]])
            } else {
                None
            }
        })?;
        for (&(a, b), &c) in &hcomp {
            if c2_src[c] != comp1[&(c2_src[a], c2_src[b])]
                || c2_tgt[c] != comp1[&(c2_tgt[a], c2_tgt[b])]
            {
                return Err(Error::BadBoundary {
                    cell: c2_names[c].clone(),
                    detail: format!(
                        "not the horizontal composite of `{}` and `{}`",
                        c2_names[a], c2_names[b]
                    ),
                });
            }
        }
        famh.check_units(&hcomp, &h_unit)?;
        famh.check_associative(&hcomp)?;

        let two = FiniteTwoCategory {
            objects: raw.objects.clone(),
            c1_names,
            c1_src,
            c1_tgt,
            id1,
            c2_names,
            c2_src,
            c2_tgt,
            id2,
            is_id2,
            comp1,
            vcomp,
            hcomp,
            c1_index,
            c2_index,
        };
        two.check_interchange()?;
        Ok(two)
    }

    fn check_interchange(&self) -> Result<()> {
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); self.c1_names.len()];
        for a in 0..self.c2_names.len() {
            below[self.c2_src[a]].push(a);
        }
        for (&(a, b), &ab) in &self.hcomp {
            for &a2 in &below[self.c2_tgt[a]] {
                for &b2 in &below[self.c2_tgt[b]] {
                    let lhs = self.vcomp[&(ab, self.hcomp[&(a2, b2)])];
                    let rhs = self.hcomp[&(self.vcomp[&(a, a2)], self.vcomp[&(b, b2)])];
                    if lhs != rhs {
                        return Err(Error::Interchange([
                            self.c2_names[a].clone(),
                            self.c2_names[b].clone(),
                            self.c2_names[a2].clone(),
                            self.c2_names[b2].clone(),
                        ]));
                    }
                }
            }
        }
        Ok(())
    }

    /// A 1-category viewed as a locally discrete 2-category.
    pub fn locally_discrete(c: &FiniteCategory) -> Self {
        let raw = c.to_raw();
        Self::validate(&RawTwoCategory {
            objects: raw.objects,
            cells1: raw.morphisms,
            compose1: raw.compose,
            ..Default::default()
        })
        .expect("a valid category is a valid locally discrete 2-category")
    }

    pub fn to_raw(&self) -> RawTwoCategory {
        let n_obj = self.objects.len();
        let n1 = self.c1_names.len();
        let cells1 = (n_obj..n1)
            .map(|f| {
                RawArrow::new(
                    &self.c1_names[f],
                    &self.objects[self.c1_src[f]],
                    &self.objects[self.c1_tgt[f]],
                )
            })
            .collect();
        let cells2 = (n1..self.c2_names.len())
            .map(|a| {
                RawArrow::new(
                    &self.c2_names[a],
                    &self.c1_names[self.c2_src[a]],
                    &self.c1_names[self.c2_tgt[a]],
                )
            })
            .collect();
        let dump = |t: &Table, names: &[String], skip: &dyn Fn(usize, usize) -> bool| {
            let mut v: Vec<[String; 3]> = t
                .iter()
                .filter(|(&(a, b), _)| !skip(a, b))
                .map(|(&(a, b), &c)| [names[a].clone(), names[b].clone(), names[c].clone()])
                .collect();
            v.sort();
            v
        };
        let compose1 = dump(&self.comp1, &self.c1_names, &|a, b| a < n_obj || b < n_obj);
        let vcompose = dump(&self.vcomp, &self.c2_names, &|a, b| {
            self.is_id2[a] || self.is_id2[b]
        });
        let hcompose = dump(&self.hcomp, &self.c2_names, &|a, b| {
            (self.is_id2[a] && self.is_id2[b]) || a < n_obj || b < n_obj
        });
        RawTwoCategory {
            objects: self.objects.clone(),
            cells1,
            cells2,
            compose1,
            vcompose,
            hcompose,
        }
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn n_cells1(&self) -> usize {
        self.c1_names.len()
    }
    pub fn n_cells2(&self) -> usize {
        self.c2_names.len()
    }
    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }
    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
    pub fn c1_name(&self, f: usize) -> &str {
        &self.c1_names[f]
    }
    pub fn c2_name(&self, a: usize) -> &str {
        &self.c2_names[a]
    }
    pub fn cell1(&self, name: &str) -> Option<usize> {
        self.c1_index.get(name).copied()
    }
    pub fn cell2(&self, name: &str) -> Option<usize> {
        self.c2_index.get(name).copied()
    }
    pub fn src1(&self, f: usize) -> usize {
        self.c1_src[f]
    }
    pub fn tgt1(&self, f: usize) -> usize {
        self.c1_tgt[f]
    }
    pub fn src2(&self, a: usize) -> usize {
        self.c2_src[a]
    }
    pub fn tgt2(&self, a: usize) -> usize {
        self.c2_tgt[a]
    }
    pub fn id1(&self, o: usize) -> usize {
        self.id1[o]
    }
    pub fn id2(&self, f: usize) -> usize {
        self.id2[f]
    }
    pub fn is_id1(&self, f: usize) -> bool {
        f < self.objects.len()
    }
    pub fn is_id2(&self, a: usize) -> bool {
        self.is_id2[a]
    }
    pub fn comp1(&self, f: usize, g: usize) -> Option<usize> {
        self.comp1.get(&(f, g)).copied()
    }
    pub fn vcomp(&self, a: usize, b: usize) -> Option<usize> {
        self.vcomp.get(&(a, b)).copied()
    }
    pub fn hcomp(&self, a: usize, b: usize) -> Option<usize> {
        self.hcomp.get(&(a, b)).copied()
    }
    pub fn hom1(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.c1_names.len())
            .filter(|&f| self.c1_src[f] == a && self.c1_tgt[f] == b)
            .collect()
    }
    pub fn hom2(&self, f: usize, g: usize) -> Vec<usize> {
        (0..self.c2_names.len())
            .filter(|&a| self.c2_src[a] == f && self.c2_tgt[a] == g)
            .collect()
    }

    /// The hom-category between two objects: 1-cells and 2-cells under
    /// vertical composition.
    pub fn hom(&self, a: usize, b: usize) -> FiniteCategory {
        let cells = self.hom1(a, b);
        let mut raw = RawCategory {
            objects: cells.iter().map(|&f| self.c1_names[f].clone()).collect(),
            ..Default::default()
        };
        let arrows: Vec<usize> = (0..self.c2_names.len())
            .filter(|&x| !self.is_id2[x] && cells.contains(&self.c2_src[x]))
            .collect();
        let name = |x: usize| {
            if self.is_id2[x] {
                identity_name(&self.c1_names[self.c2_src[x]])
            } else {
                self.c2_names[x].clone()
            }
        };
        for &x in &arrows {
            raw.morphisms.push(RawArrow::new(
                name(x),
                &self.c1_names[self.c2_src[x]],
                &self.c1_names[self.c2_tgt[x]],
            ));
        }
        for &x in &arrows {
            for &y in &arrows {
                if let Some(z) = self.vcomp(x, y) {
                    raw.compose.push([name(x), name(y), name(z)]);
                }
            }
        }
        FiniteCategory::validate(&raw).expect("hom-categories of a valid 2-category are valid")
    }

    /// Whisker a 2-cell by 1-cells on either side: `l ; a ; r`.
    pub fn whisker(&self, l: Option<usize>, a: usize, r: Option<usize>) -> Option<usize> {
        let mut x = a;
        if let Some(l) = l {
            x = self.hcomp(self.id2[l], x)?;
        }
        if let Some(r) = r {
            x = self.hcomp(x, self.id2[r])?;
        }
        Some(x)
    }

    pub fn inverse2(&self, a: usize) -> Option<usize> {
        let (s, t) = (self.c2_src[a], self.c2_tgt[a]);
        self.hom2(t, s).into_iter().find(|&b| {
            self.vcomp(a, b) == Some(self.id2[s]) && self.vcomp(b, a) == Some(self.id2[t])
        })
    }

    /// Checks boundaries and invertibility of `η`, `ε`; triangles are not checked.
    pub fn check_equivalence(&self, e: &AdjointEquivalence) -> Result<()> {
        let (a, b) = (self.c1_src[e.f], self.c1_tgt[e.f]);
        let ok = self.c1_src[e.g] == b
            && self.c1_tgt[e.g] == a
            && self.c2_src[e.eta] == self.id1[a]
            && Some(self.c2_tgt[e.eta]) == self.comp1(e.f, e.g)
            && Some(self.c2_src[e.eps]) == self.comp1(e.g, e.f)
            && self.c2_tgt[e.eps] == self.id1[b];
        if !ok {
            return Err(Error::NotAnEquivalence(format!(
                "boundaries of {}",
                e.name(self)
            )));
        }
        if self.inverse2(e.eta).is_none() || self.inverse2(e.eps).is_none() {
            return Err(Error::NotAnEquivalence(format!(
                "unit or counit of {} not invertible",
                e.name(self)
            )));
        }
        Ok(())
    }

    pub fn triangles_hold(&self, e: &AdjointEquivalence) -> bool {
        let (f, g) = (e.f, e.g);
        let t1 = self
            .whisker(None, e.eta, Some(f))
            .zip(self.whisker(Some(f), e.eps, None))
            .and_then(|(x, y)| self.vcomp(x, y));
        let t2 = self
            .whisker(Some(g), e.eta, None)
            .zip(self.whisker(None, e.eps, Some(g)))
            .and_then(|(x, y)| self.vcomp(x, y));
        t1 == Some(self.id2[f]) && t2 == Some(self.id2[g])
    }

    pub fn check_adjoint(&self, e: &AdjointEquivalence) -> Result<()> {
        self.check_equivalence(e)?;
        if !self.triangles_hold(e) {
            return Err(Error::NotAdjoint(self.c1_names[e.f].clone()));
        }
        Ok(())
    }

    /// All equivalence data `(f, g, η, ε)` with invertible unit and counit.
    pub fn equivalences(&self) -> Vec<AdjointEquivalence> {
        let mut out = Vec::new();
        for f in 0..self.c1_names.len() {
            let (a, b) = (self.c1_src[f], self.c1_tgt[f]);
            for g in self.hom1(b, a) {
                let (fg, gf) = (self.comp1[&(f, g)], self.comp1[&(g, f)]);
                let etas: Vec<usize> = self
                    .hom2(self.id1[a], fg)
                    .into_iter()
                    .filter(|&x| self.inverse2(x).is_some())
                    .collect();
                if etas.is_empty() {
                    continue;
                }
                let epss: Vec<usize> = self
                    .hom2(gf, self.id1[b])
                    .into_iter()
                    .filter(|&x| self.inverse2(x).is_some())
                    .collect();
                for &eta in &etas {
                    for &eps in &epss {
                        out.push(AdjointEquivalence { f, g, eta, eps });
                    }
                }
            }
        }
        out
    }

    pub fn adjoint_equivalences(&self) -> Vec<AdjointEquivalence> {
        self.equivalences()
            .into_iter()
            .filter(|e| self.triangles_hold(e))
            .collect()
    }

    pub fn is_equivalence(&self, f: usize) -> bool {
        self.equivalences().iter().any(|e| e.f == f)
    }

    /// Keep `f`, `g`, `η` and replace the counit so the triangle identities hold.
    pub fn promote_equivalence(&self, e: &AdjointEquivalence) -> Result<AdjointEquivalence> {
        self.check_equivalence(e)?;
        if self.triangles_hold(e) {
            return Ok(*e);
        }
        let eta_inv = self.inverse2(e.eta).expect("checked invertible");
        let eps_inv = self.inverse2(e.eps).expect("checked invertible");
        let gf = self.comp1[&(e.g, e.f)];
        // g;f => g;f;g;f => g;f => id
        let widen = self.hcomp(self.id2[gf], eps_inv);
        let shrink = self.whisker(Some(e.g), eta_inv, Some(e.f));
        let eps = widen
            .zip(shrink)
            .and_then(|(x, y)| self.vcomp(x, y))
            .and_then(|x| self.vcomp(x, e.eps))
            .ok_or_else(|| Error::NotAnEquivalence("missing whiskering in the tables".into()))?;
        let out = AdjointEquivalence { eps, ..*e };
        self.check_adjoint(&out)?;
        Ok(out)
    }

    pub fn is_equivalent(&self, a: usize, b: usize) -> bool {
        self.equivalences()
            .iter()
            .any(|e| self.c1_src[e.f] == a && self.c1_tgt[e.f] == b)
    }
}

fn triples(
    raw: &[[String; 3]],
    index: &HashMap<String, usize>,
    kind: &'static str,
) -> Result<Vec<(usize, usize, usize)>> {
    raw.iter()
        .map(|[a, b, c]| {
            Ok((
                lookup(index, kind, a)?,
                lookup(index, kind, b)?,
                lookup(index, kind, c)?,
            ))
        })
        .collect()
}

/// Maps on objects, 1-cells and 2-cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFunctor {
    pub objects: Vec<usize>,
    pub cells1: Vec<usize>,
    pub cells2: Vec<usize>,
}

/// A 2-functor written with cell names. Identity cells may be omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTwoFunctor {
    #[serde(default)]
    pub objects: std::collections::BTreeMap<String, String>,
    #[serde(default)]
    pub cells1: std::collections::BTreeMap<String, String>,
    #[serde(default)]
    pub cells2: std::collections::BTreeMap<String, String>,
}

impl TwoFunctor {
    pub fn identity(a: &FiniteTwoCategory) -> Self {
        TwoFunctor {
            objects: (0..a.n_objects()).collect(),
            cells1: (0..a.n_cells1()).collect(),
            cells2: (0..a.n_cells2()).collect(),
        }
    }

    pub fn then(&self, other: &TwoFunctor) -> TwoFunctor {
        TwoFunctor {
            objects: self.objects.iter().map(|&o| other.objects[o]).collect(),
            cells1: self.cells1.iter().map(|&o| other.cells1[o]).collect(),
            cells2: self.cells2.iter().map(|&o| other.cells2[o]).collect(),
        }
    }

    pub fn from_raw(
        raw: &RawTwoFunctor,
        a: &FiniteTwoCategory,
        b: &FiniteTwoCategory,
    ) -> Result<Self> {
        let find = |m: &std::collections::BTreeMap<String, String>,
                    key: &str,
                    kind: &'static str|
         -> Result<String> {
            m.get(key).cloned().ok_or_else(|| Error::DanglingReference {
                kind,
                name: key.to_string(),
            })
        };
        let mut objects = Vec::new();
        for o in 0..a.n_objects() {
            let t = find(&raw.objects, a.object_name(o), "object mapping")?;
            objects.push(b.object(&t).ok_or(Error::DanglingReference {
                kind: "object",
                name: t,
            })?);
        }
        let mut cells1 = Vec::new();
        for f in 0..a.n_cells1() {
            if a.is_id1(f) {
                cells1.push(b.id1(objects[f]));
                continue;
            }
            let t = find(&raw.cells1, a.c1_name(f), "1-cell mapping")?;
            cells1.push(b.cell1(&t).ok_or(Error::DanglingReference {
                kind: "1-cell",
                name: t,
            })?);
        }
        let mut cells2 = Vec::new();
        for x in 0..a.n_cells2() {
            if a.is_id2(x) {
                cells2.push(b.id2(cells1[a.src2(x)]));
                continue;
            }
            let t = find(&raw.cells2, a.c2_name(x), "2-cell mapping")?;
            cells2.push(b.cell2(&t).ok_or(Error::DanglingReference {
                kind: "2-cell",
                name: t,
            })?);
        }
        let out = TwoFunctor {
            objects,
            cells1,
            cells2,
        };
        out.check(a, b)?;
        Ok(out)
    }

    pub fn to_raw(&self, a: &FiniteTwoCategory, b: &FiniteTwoCategory) -> RawTwoFunctor {
        let mut raw = RawTwoFunctor::default();
        for o in 0..a.n_objects() {
            raw.objects.insert(
                a.object_name(o).into(),
                b.object_name(self.objects[o]).into(),
            );
        }
        for f in (0..a.n_cells1()).filter(|&f| !a.is_id1(f)) {
            raw.cells1
                .insert(a.c1_name(f).into(), b.c1_name(self.cells1[f]).into());
        }
        for x in (0..a.n_cells2()).filter(|&x| !a.is_id2(x)) {
            raw.cells2
                .insert(a.c2_name(x).into(), b.c2_name(self.cells2[x]).into());
        }
        raw
    }

    pub fn check(&self, a: &FiniteTwoCategory, b: &FiniteTwoCategory) -> Result<()> {
        let bad = |s: String| Err(Error::NotAFunctor(s));
        if self.objects.len() != a.n_objects()
            || self.cells1.len() != a.n_cells1()
            || self.cells2.len() != a.n_cells2()
        {
            return bad("map sizes do not match the source".into());
        }
        for f in 0..a.n_cells1() {
            let g = self.cells1[f];
            if b.src1(g) != self.objects[a.src1(f)] || b.tgt1(g) != self.objects[a.tgt1(f)] {
                return bad(format!("boundary of `{}`", a.c1_name(f)));
            }
        }
        for x in 0..a.n_cells2() {
            let y = self.cells2[x];
            if b.src2(y) != self.cells1[a.src2(x)] || b.tgt2(y) != self.cells1[a.tgt2(x)] {
                return bad(format!("boundary of `{}`", a.c2_name(x)));
            }
        }
        for o in 0..a.n_objects() {
            if self.cells1[a.id1(o)] != b.id1(self.objects[o]) {
                return bad(format!("identity at `{}`", a.object_name(o)));
            }
        }
        for f in 0..a.n_cells1() {
            if self.cells2[a.id2(f)] != b.id2(self.cells1[f]) {
                return bad(format!("identity on `{}`", a.c1_name(f)));
            }
        }
        type Op = fn(&FiniteTwoCategory, usize, usize) -> Option<usize>;
        let tables: [(&Table, Op, &Vec<usize>); 3] = [
            (&a.comp1, FiniteTwoCategory::comp1, &self.cells1),
            (&a.vcomp, FiniteTwoCategory::vcomp, &self.cells2),
            (&a.hcomp, FiniteTwoCategory::hcomp, &self.cells2),
        ];
        for (t, op, m) in tables {
            for (&(x, y), &z) in t {
                if op(b, m[x], m[y]) != Some(m[z]) {
                    return bad("a composite is not preserved".into());
                }
            }
        }
        Ok(())
    }

    /// Surjective on objects up to equivalence, full on 1-cells up to
    /// invertible 2-cell, fully faithful on 2-cells.
    pub fn is_biequivalence(&self, a: &FiniteTwoCategory, b: &FiniteTwoCategory) -> Verdict {
        let eqs = b.equivalences();
        for y in 0..b.n_objects() {
            let hit = (0..a.n_objects()).any(|x| {
                eqs.iter()
                    .any(|e| b.src1(e.f) == self.objects[x] && b.tgt1(e.f) == y)
            });
            if !hit {
                return Verdict::fail(format!(
                    "object `{}` is not equivalent to an image",
                    b.object_name(y)
                ));
            }
        }
        for x in 0..a.n_objects() {
            for x2 in 0..a.n_objects() {
                let images: Vec<usize> = a.hom1(x, x2).iter().map(|&f| self.cells1[f]).collect();
                for h in b.hom1(self.objects[x], self.objects[x2]) {
                    let hit = images
                        .iter()
                        .any(|&fi| b.hom2(fi, h).into_iter().any(|c| b.inverse2(c).is_some()));
                    if !hit {
                        return Verdict::fail(format!(
                            "1-cell `{}` is not isomorphic to an image",
                            b.c1_name(h)
                        ));
                    }
                }
                for f in a.hom1(x, x2) {
                    for f2 in a.hom1(x, x2) {
                        let mut seen = Vec::new();
                        for c in a.hom2(f, f2) {
                            seen.push(self.cells2[c]);
                        }
                        let target = b.hom2(self.cells1[f], self.cells1[f2]);
                        let mut sorted = seen.clone();
                        sorted.sort_unstable();
                        sorted.dedup();
                        if sorted.len() != seen.len() {
                            return Verdict::fail(format!(
                                "not faithful on 2-cells `{}` ⇒ `{}`",
                                a.c1_name(f),
                                a.c1_name(f2)
                            ));
                        }
                        if sorted.len() != target.len() {
                            return Verdict::fail(format!(
                                "not full on 2-cells `{}` ⇒ `{}`",
                                a.c1_name(f),
                                a.c1_name(f2)
                            ));
                        }
                    }
                }
            }
        }
        Verdict::pass()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn iso() -> FiniteTwoCategory {
        FiniteTwoCategory::validate(&RawTwoCategory {
            objects: vec!["x".into(), "y".into()],
            cells1: vec![RawArrow::new("xy", "x", "y"), RawArrow::new("yx", "y", "x")],
            compose1: vec![
                ["xy".into(), "yx".into(), "id[x]".into()],
                ["yx".into(), "xy".into(), "id[y]".into()],
            ],
            ..Default::default()
        })
        .unwrap()
    }

    #[test]
    fn iso_adjoint_equivalences() {
        let i = iso();
        let adj = i.adjoint_equivalences();
        assert_eq!(adj.len(), 4);
        let fs: Vec<&str> = adj.iter().map(|e| i.c1_name(e.f)).collect();
        assert_eq!(fs, ["id[x]", "id[y]", "xy", "yx"]);
    }

    #[test]
    fn terminal_and_arrow() {
        let pt = FiniteTwoCategory::locally_discrete(&FiniteCategory::chain(0));
        assert_eq!(pt.adjoint_equivalences().len(), 1);
        let arrow = FiniteTwoCategory::locally_discrete(&FiniteCategory::chain(1));
        assert_eq!(arrow.adjoint_equivalences().len(), 2);
    }

    #[test]
    fn hom_category_of_iso() {
        let i = iso();
        let h = i.hom(0, 1);
        assert_eq!(h.n_objects(), 1);
        assert_eq!(h.n_morphisms(), 1);
    }

    #[test]
    fn raw_round_trip() {
        let i = iso();
        assert_eq!(FiniteTwoCategory::validate(&i.to_raw()).unwrap(), i);
    }

    #[test]
    fn interchange_violation_is_rejected() {
        // Two endo-2-cells of the identity with left-zero vertical and
        // horizontal composition: Eckmann-Hilton forbids this.
        let mut raw = RawTwoCategory {
            objects: vec!["o".into()],
            cells2: vec![
                RawArrow::new("a", "id[o]", "id[o]"),
                RawArrow::new("b", "id[o]", "id[o]"),
            ],
            ..Default::default()
        };
        for x in ["a", "b"] {
            for y in ["a", "b"] {
                raw.vcompose.push([x.into(), y.into(), x.into()]);
                raw.hcompose.push([x.into(), y.into(), x.into()]);
            }
        }
        assert!(matches!(
            FiniteTwoCategory::validate(&raw),
            Err(Error::Interchange(_))
        ));
    }
}
