//! Finite strict double categories.
//!
//! A square `α` has a top and bottom horizontal morphism and a left and right
//! vertical morphism:
//!
//! ```text
//!   A --top--> B
//!   |          |
//!  left   α   right
//!   v          v
//!   A' -bot--> B'
//! ```
//!
//! Composition is diagrammatic in both directions. `hcomp_sq(a, b)` places
//! `b` to the right of `a`; `vcomp_sq(a, b)` places `b` below `a`.

mod equiv;
mod lifting;
mod pseudo;

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use equiv::{HorizontalEquivalence, WhiWitness};
pub use lifting::{
    gen_cofibs_2cat, gen_cofibs_dblcat, gen_trivial_cofibs_2cat, horizontal_functor, CofibSet,
    Cofibration,
};
pub use pseudo::{
    budget_from_env, compose_nat, is_hpnt, pseudo_hom, HPseudoNat, Modification, PseudoHom,
    DEFAULT_BUDGET,
};

use crate::cat::{identity_name, RawArrow};
use crate::error::{Error, Result};
use crate::table::{index_names, lookup, Family, Table};
use crate::two::{FiniteTwoCategory, RawTwoCategory};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawSquare {
    pub name: String,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
}

impl RawSquare {
    pub fn new(name: impl Into<String>, top: &str, bottom: &str, left: &str, right: &str) -> Self {
        RawSquare {
            name: name.into(),
            top: top.into(),
            bottom: bottom.into(),
            left: left.into(),
            right: right.into(),
        }
    }
}

/// Double category tables without identities. Implicit cells: horizontal
/// identities `id[A]`, vertical identities `e[A]`, vertical identity squares
/// `e[f]` on horizontal morphisms and horizontal identity squares `id[u]` on
/// vertical morphisms; the square `e[id[A]]` is shared by both families.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDoubleCategory {
    pub objects: Vec<String>,
    #[serde(default)]
    pub horizontal: Vec<RawArrow>,
    #[serde(default)]
    pub vertical: Vec<RawArrow>,
    #[serde(default)]
    pub squares: Vec<RawSquare>,
    #[serde(default)]
    pub hcompose: Vec<[String; 3]>,
    #[serde(default)]
    pub vcompose: Vec<[String; 3]>,
    #[serde(default)]
    pub hcompose_squares: Vec<[String; 3]>,
    #[serde(default)]
    pub vcompose_squares: Vec<[String; 3]>,
}

pub fn vertical_identity_name(object: &str) -> String {
    format!("e[{object}]")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Horizontal,
    Vertical,
}

#[derive(Default)]
struct Cache(OnceLock<Box<equiv::Analysis>>);

impl Clone for Cache {
    fn clone(&self) -> Self {
        Cache::default()
    }
}
impl PartialEq for Cache {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}
impl Eq for Cache {}
impl std::fmt::Debug for Cache {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("..")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteDoubleCategory {
    objects: Vec<String>,
    h_names: Vec<String>,
    h_src: Vec<usize>,
    h_tgt: Vec<usize>,
    v_names: Vec<String>,
    v_src: Vec<usize>,
    v_tgt: Vec<usize>,
    sq_names: Vec<String>,
    top: Vec<usize>,
    bottom: Vec<usize>,
    left: Vec<usize>,
    right: Vec<usize>,
    comp_h: Table,
    comp_v: Table,
    hcomp_sq: Table,
    vcomp_sq: Table,
    h_index: HashMap<String, usize>,
    v_index: HashMap<String, usize>,
    sq_index: HashMap<String, usize>,
    by_boundary: HashMap<[usize; 4], Vec<usize>>,
    h_hom: HashMap<(usize, usize), Vec<usize>>,
    v_hom: HashMap<(usize, usize), Vec<usize>>,
    cache: Cache,
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

fn unit_table(family: &Family, given: &[(usize, usize, usize)], n_obj: usize) -> Result<Table> {
    let t = family.complete(given, |a, b| {
        if a < n_obj {
            Some(b)
        } else if b < n_obj {
            Some(a)
        } else {
            None
        }
    })?;
    let ids: Vec<usize> = (0..n_obj).collect();
    family.check_units(&t, &ids)?;
    family.check_associative(&t)?;
    Ok(t)
}

impl FiniteDoubleCategory {
    pub fn validate(raw: &RawDoubleCategory) -> Result<Self> {
        let n_obj = raw.objects.len();
        let obj_index = index_names(&raw.objects)?;
        let arrows = |list: &[RawArrow],
                      idname: fn(&str) -> String|
         -> Result<(Vec<String>, Vec<usize>, Vec<usize>)> {
            let mut names: Vec<String> = raw.objects.iter().map(|o| idname(o)).collect();
            let mut src: Vec<usize> = (0..n_obj).collect();
            let mut tgt: Vec<usize> = (0..n_obj).collect();
            for a in list {
                names.push(a.name.clone());
                src.push(lookup(&obj_index, "object", &a.src)?);
                tgt.push(lookup(&obj_index, "object", &a.tgt)?);
            }
            Ok((names, src, tgt))
        };
        let (h_names, h_src, h_tgt) = arrows(&raw.horizontal, identity_name)?;
        let (v_names, v_src, v_tgt) = arrows(&raw.vertical, vertical_identity_name)?;
        let h_index = index_names(&h_names)?;
        let v_index = index_names(&v_names)?;
        let hfam = Family {
            names: &h_names,
            src: &h_src,
            tgt: &h_tgt,
            n_objects: n_obj,
        };
        let comp_h = unit_table(
            &hfam,
            &triples(&raw.hcompose, &h_index, "horizontal morphism")?,
            n_obj,
        )?;
        let vfam = Family {
            names: &v_names,
            src: &v_src,
            tgt: &v_tgt,
            n_objects: n_obj,
        };
        let comp_v = unit_table(
            &vfam,
            &triples(&raw.vcompose, &v_index, "vertical morphism")?,
            n_obj,
        )?;

        let (nh, nv) = (h_names.len(), v_names.len());
        let mut sq_names = Vec::new();
        let (mut top, mut bottom, mut left, mut right) =
            (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for f in 0..nh {
            sq_names.push(format!("e[{}]", h_names[f]));
            top.push(f);
            bottom.push(f);
            left.push(h_src[f]);
            right.push(h_tgt[f]);
        }
        for u in n_obj..nv {
            sq_names.push(format!("id[{}]", v_names[u]));
            top.push(v_src[u]);
            bottom.push(v_tgt[u]);
            left.push(u);
            right.push(u);
        }
        for s in &raw.squares {
            let t = lookup(&h_index, "horizontal morphism", &s.top)?;
            let b = lookup(&h_index, "horizontal morphism", &s.bottom)?;
            let l = lookup(&v_index, "vertical morphism", &s.left)?;
            let r = lookup(&v_index, "vertical morphism", &s.right)?;
            let ok = h_src[t] == v_src[l]
                && h_tgt[t] == v_src[r]
                && h_src[b] == v_tgt[l]
                && h_tgt[b] == v_tgt[r];
            if !ok {
                return Err(Error::BadBoundary {
                    cell: s.name.clone(),
                    detail: "corners do not match".into(),
                });
            }
            sq_names.push(s.name.clone());
            top.push(t);
            bottom.push(b);
            left.push(l);
            right.push(r);
        }
        let sq_index = index_names(&sq_names)?;
        let id_sq = |u: usize| if u < n_obj { u } else { nh + u - n_obj };
        let is_e = |a: usize| a < nh;
        let is_idsq = |a: usize| a < n_obj || (a >= nh && a < nh + nv - n_obj);

        // Squares under vertical composition form a category over horizontal morphisms.
        let vfam_sq = Family {
            names: &sq_names,
            src: &top,
            tgt: &bottom,
            n_objects: nh,
        };
        let given_v = triples(&raw.vcompose_squares, &sq_index, "square")?;
        let vcomp_sq = vfam_sq.complete(&given_v, |a, b| {
            if is_e(a) {
                Some(b)
            } else if is_e(b) {
                Some(a)
            } else if is_idsq(a) && is_idsq(b) {
                Some(id_sq(comp_v[&(left[a], left[b])]))
            } else {
                None
            }
        })?;
        let e_units: Vec<usize> = (0..nh).collect();
        vfam_sq.check_units(&vcomp_sq, &e_units)?;
        for (&(a, b), &c) in &vcomp_sq {
            if left[c] != comp_v[&(left[a], left[b])] || right[c] != comp_v[&(right[a], right[b])] {
                return Err(Error::BadBoundary {
                    cell: sq_names[c].clone(),
                    detail: format!(
                        "not the vertical composite of `{}` and `{}`",
                        sq_names[a], sq_names[b]
                    ),
                });
            }
        }
        vfam_sq.check_associative(&vcomp_sq)?;

        // And under horizontal composition, a category over vertical morphisms.
        let hfam_sq = Family {
            names: &sq_names,
            src: &left,
            tgt: &right,
            n_objects: nv,
        };
        let given_h = triples(&raw.hcompose_squares, &sq_index, "square")?;
        let hcomp_sq = hfam_sq.complete(&given_h, |a, b| {
            if is_idsq(a) {
                Some(b)
            } else if is_idsq(b) {
                Some(a)
            } else if is_e(a) && is_e(b) {
                Some(comp_h[&(top[a], top[b])])
            } else {
                None
            }
        })?;
        let id_units: Vec<usize> = (0..nv).map(id_sq).collect();
        hfam_sq.check_units(&hcomp_sq, &id_units)?;
        for (&(a, b), &c) in &hcomp_sq {
            if top[c] != comp_h[&(top[a], top[b])] || bottom[c] != comp_h[&(bottom[a], bottom[b])] {
                return Err(Error::BadBoundary {
                    cell: sq_names[c].clone(),
                    detail: format!(
                        "not the horizontal composite of `{}` and `{}`",
                        sq_names[a], sq_names[b]
                    ),
                });
            }
        }
        hfam_sq.check_associative(&hcomp_sq)?;

        let mut by_boundary: HashMap<[usize; 4], Vec<usize>> = HashMap::new();
        for a in 0..sq_names.len() {
            by_boundary
                .entry([top[a], bottom[a], left[a], right[a]])
                .or_default()
                .push(a);
        }
        let mut h_hom: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for f in 0..nh {
            h_hom.entry((h_src[f], h_tgt[f])).or_default().push(f);
        }
        let mut v_hom: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for u in 0..nv {
            v_hom.entry((v_src[u], v_tgt[u])).or_default().push(u);
        }
        let d = FiniteDoubleCategory {
            objects: raw.objects.clone(),
            h_names,
            h_src,
            h_tgt,
            v_names,
            v_src,
            v_tgt,
            sq_names,
            top,
            bottom,
            left,
            right,
            comp_h,
            comp_v,
            hcomp_sq,
            vcomp_sq,
            h_index,
            v_index,
            sq_index,
            by_boundary,
            h_hom,
            v_hom,
            cache: Cache::default(),
        };
        d.check_interchange()?;
        Ok(d)
    }

    fn check_interchange(&self) -> Result<()> {
        let mut below: Vec<Vec<usize>> = vec![Vec::new(); self.h_names.len()];
        for a in 0..self.sq_names.len() {
            below[self.top[a]].push(a);
        }
        for (&(a, b), &ab) in &self.hcomp_sq {
            for &c in &below[self.bottom[a]] {
                for &d in &below[self.bottom[b]] {
                    let Some(&cd) = self.hcomp_sq.get(&(c, d)) else {
                        continue;
                    };
                    let lhs = self.vcomp_sq[&(ab, cd)];
                    let rhs = self.hcomp_sq[&(self.vcomp_sq[&(a, c)], self.vcomp_sq[&(b, d)])];
                    if lhs != rhs {
                        return Err(Error::Interchange([
                            self.sq_names[a].clone(),
                            self.sq_names[b].clone(),
                            self.sq_names[c].clone(),
                            self.sq_names[d].clone(),
                        ]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_raw(&self) -> RawDoubleCategory {
        let n_obj = self.objects.len();
        let nh = self.h_names.len();
        let nv = self.v_names.len();
        let arrows = |names: &[String], src: &[usize], tgt: &[usize]| -> Vec<RawArrow> {
            (n_obj..names.len())
                .map(|i| RawArrow::new(&names[i], &self.objects[src[i]], &self.objects[tgt[i]]))
                .collect()
        };
        let first_user = nh + nv - n_obj;
        let squares = (first_user..self.sq_names.len())
            .map(|a| RawSquare {
                name: self.sq_names[a].clone(),
                top: self.h_names[self.top[a]].clone(),
                bottom: self.h_names[self.bottom[a]].clone(),
                left: self.v_names[self.left[a]].clone(),
                right: self.v_names[self.right[a]].clone(),
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
        let is_e = |a: usize| a < nh;
        let is_idsq = |a: usize| a < n_obj || (nh..first_user).contains(&a);
        RawDoubleCategory {
            objects: self.objects.clone(),
            horizontal: arrows(&self.h_names, &self.h_src, &self.h_tgt),
            vertical: arrows(&self.v_names, &self.v_src, &self.v_tgt),
            squares,
            hcompose: dump(&self.comp_h, &self.h_names, &|a, b| a < n_obj || b < n_obj),
            vcompose: dump(&self.comp_v, &self.v_names, &|a, b| a < n_obj || b < n_obj),
            hcompose_squares: dump(&self.hcomp_sq, &self.sq_names, &|a, b| {
                is_idsq(a) || is_idsq(b) || (is_e(a) && is_e(b))
            }),
            vcompose_squares: dump(&self.vcomp_sq, &self.sq_names, &|a, b| {
                is_e(a) || is_e(b) || (is_idsq(a) && is_idsq(b))
            }),
        }
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn n_h(&self) -> usize {
        self.h_names.len()
    }
    pub fn n_v(&self) -> usize {
        self.v_names.len()
    }
    pub fn n_squares(&self) -> usize {
        self.sq_names.len()
    }
    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }
    pub fn h_name(&self, f: usize) -> &str {
        &self.h_names[f]
    }
    pub fn v_name(&self, u: usize) -> &str {
        &self.v_names[u]
    }
    pub fn sq_name(&self, a: usize) -> &str {
        &self.sq_names[a]
    }
    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
    pub fn h(&self, name: &str) -> Option<usize> {
        self.h_index.get(name).copied()
    }
    pub fn v(&self, name: &str) -> Option<usize> {
        self.v_index.get(name).copied()
    }
    pub fn square(&self, name: &str) -> Option<usize> {
        self.sq_index.get(name).copied()
    }
    pub fn h_src(&self, f: usize) -> usize {
        self.h_src[f]
    }
    pub fn h_tgt(&self, f: usize) -> usize {
        self.h_tgt[f]
    }
    pub fn v_src(&self, u: usize) -> usize {
        self.v_src[u]
    }
    pub fn v_tgt(&self, u: usize) -> usize {
        self.v_tgt[u]
    }
    pub fn top(&self, a: usize) -> usize {
        self.top[a]
    }
    pub fn bottom(&self, a: usize) -> usize {
        self.bottom[a]
    }
    pub fn left(&self, a: usize) -> usize {
        self.left[a]
    }
    pub fn right(&self, a: usize) -> usize {
        self.right[a]
    }
    pub fn boundary(&self, a: usize) -> [usize; 4] {
        [self.top[a], self.bottom[a], self.left[a], self.right[a]]
    }
    /// Horizontal identity morphism on an object.
    pub fn id_h(&self, o: usize) -> usize {
        o
    }
    /// Vertical identity morphism on an object.
    pub fn id_v(&self, o: usize) -> usize {
        o
    }
    pub fn is_id_h(&self, f: usize) -> bool {
        f < self.objects.len()
    }
    pub fn is_id_v(&self, u: usize) -> bool {
        u < self.objects.len()
    }
    /// The vertical identity square `e_f`.
    pub fn e_sq(&self, f: usize) -> usize {
        f
    }
    /// The horizontal identity square `id_u`.
    pub fn id_sq(&self, u: usize) -> usize {
        if u < self.objects.len() {
            u
        } else {
            self.h_names.len() + u - self.objects.len()
        }
    }
    pub fn comp_h(&self, f: usize, g: usize) -> Option<usize> {
        self.comp_h.get(&(f, g)).copied()
    }
    pub fn comp_v(&self, u: usize, v: usize) -> Option<usize> {
        self.comp_v.get(&(u, v)).copied()
    }
    pub fn hcomp_sq(&self, a: usize, b: usize) -> Option<usize> {
        self.hcomp_sq.get(&(a, b)).copied()
    }
    pub fn vcomp_sq(&self, a: usize, b: usize) -> Option<usize> {
        self.vcomp_sq.get(&(a, b)).copied()
    }
    pub fn hcomp_all(&self, xs: &[usize]) -> Option<usize> {
        let (&first, rest) = xs.split_first()?;
        rest.iter().try_fold(first, |acc, &x| self.hcomp_sq(acc, x))
    }
    pub fn vcomp_all(&self, xs: &[usize]) -> Option<usize> {
        let (&first, rest) = xs.split_first()?;
        rest.iter().try_fold(first, |acc, &x| self.vcomp_sq(acc, x))
    }
    pub fn h_hom(&self, a: usize, b: usize) -> &[usize] {
        self.h_hom.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }
    pub fn v_hom(&self, a: usize, b: usize) -> &[usize] {
        self.v_hom.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }
    pub fn squares_with(&self, top: usize, bottom: usize, left: usize, right: usize) -> &[usize] {
        self.by_boundary
            .get(&[top, bottom, left, right])
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
    /// Squares whose vertical boundaries are identities.
    pub fn globular_squares(&self, top: usize, bottom: usize) -> &[usize] {
        let (a, b) = (self.h_src[top], self.h_tgt[top]);
        self.squares_with(top, bottom, a, b)
    }
    pub fn has_trivial_verticals(&self, a: usize) -> bool {
        self.is_id_v(self.left[a]) && self.is_id_v(self.right[a])
    }
    pub fn has_trivial_horizontals(&self, a: usize) -> bool {
        self.is_id_h(self.top[a]) && self.is_id_h(self.bottom[a])
    }

    pub fn vertical_inverse(&self, a: usize) -> Option<usize> {
        self.analysis().vinv[a]
    }
    pub fn horizontal_inverse(&self, a: usize) -> Option<usize> {
        self.analysis().hinv[a]
    }
    pub fn is_vertically_invertible(&self, a: usize) -> bool {
        self.vertical_inverse(a).is_some()
    }
    pub fn is_horizontally_invertible(&self, a: usize) -> bool {
        self.horizontal_inverse(a).is_some()
    }

    fn analysis(&self) -> &equiv::Analysis {
        self.cache
            .0
            .get_or_init(|| Box::new(equiv::Analysis::compute(self)))
    }

    /// ℍ𝒜 (morphisms horizontal) or 𝕍𝒜 (morphisms vertical). Cell indices of
    /// `𝒜` are preserved: objects, 1-cells as horizontal (resp. vertical)
    /// morphisms, 2-cells as squares.
    pub fn embed(a: &FiniteTwoCategory, dir: Direction) -> Self {
        let raw = a.to_raw();
        let n_obj = a.n_objects();
        let c1 = |name: &str| -> String {
            match (dir, a.cell1(name)) {
                (Direction::Vertical, Some(f)) if a.is_id1(f) => {
                    vertical_identity_name(a.object_name(a.src1(f)))
                }
                _ => name.to_string(),
            }
        };
        // Identity 2-cells become the identity squares of the matching direction.
        let c2 = |name: &str| -> String {
            let x = a.cell2(name).expect("own cell");
            if !a.is_id2(x) {
                return name.to_string();
            }
            let f = a.src2(x);
            match dir {
                Direction::Horizontal => format!("e[{}]", a.c1_name(f)),
                Direction::Vertical if f < n_obj => format!("e[{}]", a.c1_name(f)),
                Direction::Vertical => format!("id[{}]", a.c1_name(f)),
            }
        };
        let map3 = |t: &[[String; 3]], m: &dyn Fn(&str) -> String| -> Vec<[String; 3]> {
            t.iter().map(|[x, y, z]| [m(x), m(y), m(z)]).collect()
        };
        let mut out = RawDoubleCategory {
            objects: raw.objects.clone(),
            ..Default::default()
        };
        // Whiskerings by identity 2-cells are not in the raw tables; list them all.
        let mut vtab = Vec::new();
        let mut htab = Vec::new();
        for x in 0..a.n_cells2() {
            for y in 0..a.n_cells2() {
                if let Some(z) = a.vcomp(x, y) {
                    vtab.push([
                        a.c2_name(x).to_string(),
                        a.c2_name(y).to_string(),
                        a.c2_name(z).to_string(),
                    ]);
                }
                if let Some(z) = a.hcomp(x, y) {
                    htab.push([
                        a.c2_name(x).to_string(),
                        a.c2_name(y).to_string(),
                        a.c2_name(z).to_string(),
                    ]);
                }
            }
        }
        match dir {
            Direction::Horizontal => {
                out.horizontal = raw.cells1.clone();
                out.hcompose = raw.compose1.clone();
                for x in &raw.cells2 {
                    let f = a.cell1(&x.src).unwrap();
                    out.squares.push(RawSquare::new(
                        &x.name,
                        &x.src,
                        &x.tgt,
                        &vertical_identity_name(a.object_name(a.src1(f))),
                        &vertical_identity_name(a.object_name(a.tgt1(f))),
                    ));
                }
                out.vcompose_squares = map3(&vtab, &c2);
                out.hcompose_squares = map3(&htab, &c2);
            }
            Direction::Vertical => {
                out.vertical = raw.cells1.clone();
                out.vcompose = map3(&raw.compose1, &c1);
                for x in &raw.cells2 {
                    let f = a.cell1(&x.src).unwrap();
                    out.squares.push(RawSquare::new(
                        &x.name,
                        &identity_name(a.object_name(a.src1(f))),
                        &identity_name(a.object_name(a.tgt1(f))),
                        &c1(&x.src),
                        &c1(&x.tgt),
                    ));
                }
                out.hcompose_squares = map3(&vtab, &c2);
                out.vcompose_squares = map3(&htab, &c2);
            }
        }
        Self::validate(&out).expect("embedding of a valid 2-category is valid")
    }

    /// 𝐇𝔸 or 𝐕𝔸, together with the square index of every 2-cell.
    pub fn underlying(&self, dir: Direction) -> Underlying {
        let n_obj = self.objects.len();
        let (names1, src1, tgt1, first_id_sq): (&[String], &[usize], &[usize], usize) = match dir {
            Direction::Horizontal => (&self.h_names, &self.h_src, &self.h_tgt, 0),
            Direction::Vertical => (&self.v_names, &self.v_src, &self.v_tgt, 0),
        };
        let _ = first_id_sq;
        let cell1_name = |i: usize| -> String {
            if i < n_obj {
                identity_name(&self.objects[i])
            } else {
                names1[i].clone()
            }
        };
        let (sq_src, sq_tgt): (&[usize], &[usize]) = match dir {
            Direction::Horizontal => (&self.top, &self.bottom),
            Direction::Vertical => (&self.left, &self.right),
        };
        let identity_sq = |i: usize| match dir {
            Direction::Horizontal => self.e_sq(i),
            Direction::Vertical => self.id_sq(i),
        };
        let is_identity_sq: Vec<bool> = {
            let mut v = vec![false; self.sq_names.len()];
            for i in 0..names1.len() {
                v[identity_sq(i)] = true;
            }
            v
        };
        let globular = |a: usize| match dir {
            Direction::Horizontal => self.has_trivial_verticals(a),
            Direction::Vertical => self.has_trivial_horizontals(a),
        };
        let sq_name = |a: usize| -> String {
            if is_identity_sq[a] {
                identity_name(&cell1_name(sq_src[a]))
            } else {
                self.sq_names[a].clone()
            }
        };
        let chosen: Vec<usize> = (0..self.sq_names.len())
            .filter(|&a| globular(a) && !is_identity_sq[a])
            .collect();
        let mut raw = RawTwoCategory {
            objects: self.objects.clone(),
            ..Default::default()
        };
        for i in n_obj..names1.len() {
            raw.cells1.push(RawArrow::new(
                &names1[i],
                &self.objects[src1[i]],
                &self.objects[tgt1[i]],
            ));
        }
        for &a in &chosen {
            raw.cells2.push(RawArrow::new(
                &self.sq_names[a],
                cell1_name(sq_src[a]),
                cell1_name(sq_tgt[a]),
            ));
        }
        let comp1 = match dir {
            Direction::Horizontal => &self.comp_h,
            Direction::Vertical => &self.comp_v,
        };
        for (&(f, g), &h) in comp1 {
            if f >= n_obj && g >= n_obj {
                raw.compose1
                    .push([cell1_name(f), cell1_name(g), cell1_name(h)]);
            }
        }
        let (along, across) = match dir {
            Direction::Horizontal => (&self.vcomp_sq, &self.hcomp_sq),
            Direction::Vertical => (&self.hcomp_sq, &self.vcomp_sq),
        };
        for (&(x, y), &z) in along {
            if globular(x) && globular(y) {
                raw.vcompose.push([sq_name(x), sq_name(y), sq_name(z)]);
            }
        }
        for (&(x, y), &z) in across {
            if globular(x) && globular(y) {
                raw.hcompose.push([sq_name(x), sq_name(y), sq_name(z)]);
            }
        }
        raw.compose1.sort();
        raw.vcompose.sort();
        raw.hcompose.sort();
        let two = FiniteTwoCategory::validate(&raw)
            .expect("underlying 2-category of a valid double category");
        let mut cell2_to_sq = Vec::with_capacity(two.n_cells2());
        for i in 0..names1.len() {
            cell2_to_sq.push(identity_sq(i));
        }
        cell2_to_sq.extend(chosen.iter().copied());
        Underlying { two, cell2_to_sq }
    }

    /// ℍ^≃𝒜: vertical morphisms are the adjoint equivalences of `𝒜`, and a
    /// square `(f, f', u, v)` is a 2-cell `f;v ⇒ u;f'`.
    pub fn hsim_embed(a: &FiniteTwoCategory) -> HsimEmbedding {
        let adj = a.adjoint_equivalences();
        let n_obj = a.n_objects();
        let is_identity_adj = |e: &crate::two::AdjointEquivalence| {
            a.is_id1(e.f) && a.is_id1(e.g) && a.is_id2(e.eta) && a.is_id2(e.eps)
        };
        let mut v_of: HashMap<crate::two::AdjointEquivalence, String> = HashMap::new();
        let mut raw = RawDoubleCategory {
            objects: (0..n_obj).map(|o| a.object_name(o).to_string()).collect(),
            ..Default::default()
        };
        raw.horizontal = a.to_raw().cells1;
        raw.hcompose = a.to_raw().compose1;
        for e in &adj {
            let name = if is_identity_adj(e) {
                vertical_identity_name(a.object_name(a.src1(e.f)))
            } else {
                let n = format!(
                    "adj({},{},{},{})",
                    a.c1_name(e.f),
                    a.c1_name(e.g),
                    a.c2_name(e.eta),
                    a.c2_name(e.eps)
                );
                raw.vertical.push(RawArrow::new(
                    &n,
                    a.object_name(a.src1(e.f)),
                    a.object_name(a.tgt1(e.f)),
                ));
                n
            };
            v_of.insert(*e, name);
        }
        let compose_adj = |x: &crate::two::AdjointEquivalence,
                           y: &crate::two::AdjointEquivalence| {
            compose_adjoint(a, x, y)
        };
        for x in &adj {
            for y in &adj {
                if a.tgt1(x.f) != a.src1(y.f) || is_identity_adj(x) || is_identity_adj(y) {
                    continue;
                }
                let z = compose_adj(x, y).expect("composite of adjoint equivalences");
                raw.vcompose
                    .push([v_of[x].clone(), v_of[y].clone(), v_of[&z].clone()]);
            }
        }
        // Squares, keyed by (2-cell, top, bottom, left, right).
        let mut squares: Vec<(usize, usize, usize, usize, usize)> = Vec::new();
        let mut sq_name: HashMap<(usize, usize, usize, usize, usize), String> = HashMap::new();
        for (ui, u) in adj.iter().enumerate() {
            for (vi, v) in adj.iter().enumerate() {
                for f in a.hom1(a.src1(u.f), a.src1(v.f)) {
                    for f2 in a.hom1(a.tgt1(u.f), a.tgt1(v.f)) {
                        let s = a.comp1(f, v.f).unwrap();
                        let t = a.comp1(u.f, f2).unwrap();
                        for c in a.hom2(s, t) {
                            let key = (c, f, f2, ui, vi);
                            let name = if is_identity_adj(u) && is_identity_adj(v) && a.is_id2(c) {
                                format!("e[{}]", a.c1_name(f))
                            } else if a.is_id1(f) && a.is_id1(f2) && ui == vi && a.is_id2(c) {
                                format!("id[{}]", v_of[u])
                            } else {
                                let n = format!(
                                    "[{}|{}|{}|{}|{}]",
                                    a.c2_name(c),
                                    a.c1_name(f),
                                    a.c1_name(f2),
                                    v_of[u],
                                    v_of[v]
                                );
                                raw.squares.push(RawSquare::new(
                                    &n,
                                    a.c1_name(f),
                                    a.c1_name(f2),
                                    &v_of[u],
                                    &v_of[v],
                                ));
                                n
                            };
                            sq_name.insert(key, name);
                            squares.push(key);
                        }
                    }
                }
            }
        }
        for &(c, f, f2, ui, vi) in &squares {
            for &(d, g, g2, vj, wi) in &squares {
                // Horizontal: (f,f',u,v) then (g,g',v,w) gives the 2-cell
                // f;g;w ⇒ f;v;g' ⇒ u;f';g'.
                if vj == vi {
                    let first = a.whisker(Some(f), d, None).unwrap();
                    let second = a.whisker(None, c, Some(g2)).unwrap();
                    let cell = a.vcomp(first, second).unwrap();
                    let key = (
                        cell,
                        a.comp1(f, g).unwrap(),
                        a.comp1(f2, g2).unwrap(),
                        ui,
                        wi,
                    );
                    raw.hcompose_squares.push([
                        sq_name[&(c, f, f2, ui, vi)].clone(),
                        sq_name[&(d, g, g2, vj, wi)].clone(),
                        sq_name[&key].clone(),
                    ]);
                }
                // Vertical: (f,f',u,v) above (f',f'',u',v') gives
                // f;v;v' ⇒ u;f';v' ⇒ u;u';f''.
                if g == f2 {
                    let (u, v, u2, v2) = (&adj[ui], &adj[vi], &adj[vj], &adj[wi]);
                    if a.tgt1(u.f) != a.src1(u2.f) {
                        continue;
                    }
                    let first = a.whisker(None, c, Some(v2.f)).unwrap();
                    let second = a.whisker(Some(u.f), d, None).unwrap();
                    let cell = a.vcomp(first, second).unwrap();
                    let uu = compose_adj(u, u2).unwrap();
                    let vv = compose_adj(v, v2).unwrap();
                    let uu_i = adj.iter().position(|e| *e == uu).unwrap();
                    let vv_i = adj.iter().position(|e| *e == vv).unwrap();
                    let key = (cell, f, g2, uu_i, vv_i);
                    raw.vcompose_squares.push([
                        sq_name[&(c, f, f2, ui, vi)].clone(),
                        sq_name[&(d, g, g2, vj, wi)].clone(),
                        sq_name[&key].clone(),
                    ]);
                }
            }
        }
        let dbl = Self::validate(&raw).expect("ℍ^≃ of a valid 2-category is valid");
        let vertical = adj.iter().map(|e| dbl.v(&v_of[e]).unwrap()).collect();
        let square_of = squares
            .iter()
            .map(|k| (*k, dbl.square(&sq_name[k]).unwrap()))
            .collect();
        HsimEmbedding {
            dbl,
            adjoint: adj,
            vertical,
            square_of,
        }
    }
}

/// The composite adjoint equivalence `x` then `y`.
pub(crate) fn compose_adjoint(
    a: &FiniteTwoCategory,
    x: &crate::two::AdjointEquivalence,
    y: &crate::two::AdjointEquivalence,
) -> Option<crate::two::AdjointEquivalence> {
    let f = a.comp1(x.f, y.f)?;
    let g = a.comp1(y.g, x.g)?;
    let eta = a.vcomp(x.eta, a.whisker(Some(x.f), y.eta, Some(x.g))?)?;
    let eps = a.vcomp(a.whisker(Some(y.g), x.eps, Some(y.f))?, y.eps)?;
    Some(crate::two::AdjointEquivalence { f, g, eta, eps })
}

/// 𝐇𝔸 or 𝐕𝔸 with the square behind each 2-cell.
#[derive(Debug, Clone)]
pub struct Underlying {
    pub two: FiniteTwoCategory,
    pub cell2_to_sq: Vec<usize>,
}

/// ℍ^≃𝒜 with the correspondences back to `𝒜`.
#[derive(Debug, Clone)]
pub struct HsimEmbedding {
    pub dbl: FiniteDoubleCategory,
    /// The adjoint equivalences of `𝒜`, in enumeration order.
    pub adjoint: Vec<crate::two::AdjointEquivalence>,
    /// Vertical morphism index of each adjoint equivalence.
    pub vertical: Vec<usize>,
    /// `(2-cell, top, bottom, left adj index, right adj index)` to square.
    pub square_of: HashMap<(usize, usize, usize, usize, usize), usize>,
}

/// Maps on objects, both kinds of morphism, and squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleFunctor {
    pub objects: Vec<usize>,
    pub h: Vec<usize>,
    pub v: Vec<usize>,
    pub squares: Vec<usize>,
}

/// A double functor written with cell names. Identity cells may be omitted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFunctor {
    #[serde(default)]
    pub objects: std::collections::BTreeMap<String, String>,
    #[serde(default)]
    pub horizontal: std::collections::BTreeMap<String, String>,
    #[serde(default)]
    pub vertical: std::collections::BTreeMap<String, String>,
    #[serde(default)]
    pub squares: std::collections::BTreeMap<String, String>,
}

impl DoubleFunctor {
    pub fn identity(a: &FiniteDoubleCategory) -> Self {
        DoubleFunctor {
            objects: (0..a.n_objects()).collect(),
            h: (0..a.n_h()).collect(),
            v: (0..a.n_v()).collect(),
            squares: (0..a.n_squares()).collect(),
        }
    }

    /// The unique functor to a one-object double category with only identities.
    pub fn to_point(a: &FiniteDoubleCategory, point: &FiniteDoubleCategory) -> Self {
        assert!(point.n_objects() == 1 && point.n_squares() == 1);
        DoubleFunctor {
            objects: vec![0; a.n_objects()],
            h: vec![0; a.n_h()],
            v: vec![0; a.n_v()],
            squares: vec![0; a.n_squares()],
        }
    }

    pub fn then(&self, g: &DoubleFunctor) -> DoubleFunctor {
        DoubleFunctor {
            objects: self.objects.iter().map(|&x| g.objects[x]).collect(),
            h: self.h.iter().map(|&x| g.h[x]).collect(),
            v: self.v.iter().map(|&x| g.v[x]).collect(),
            squares: self.squares.iter().map(|&x| g.squares[x]).collect(),
        }
    }

    pub fn from_raw(
        raw: &RawFunctor,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
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
        let mut h = Vec::new();
        for f in 0..a.n_h() {
            if a.is_id_h(f) {
                h.push(b.id_h(objects[f]));
                continue;
            }
            let t = find(&raw.horizontal, a.h_name(f), "horizontal mapping")?;
            h.push(b.h(&t).ok_or(Error::DanglingReference {
                kind: "horizontal morphism",
                name: t,
            })?);
        }
        let mut v = Vec::new();
        for u in 0..a.n_v() {
            if a.is_id_v(u) {
                v.push(b.id_v(objects[u]));
                continue;
            }
            let t = find(&raw.vertical, a.v_name(u), "vertical mapping")?;
            v.push(b.v(&t).ok_or(Error::DanglingReference {
                kind: "vertical morphism",
                name: t,
            })?);
        }
        let mut squares = Vec::new();
        let first_user = a.n_h() + a.n_v() - a.n_objects();
        for s in 0..a.n_squares() {
            if s < a.n_h() {
                squares.push(b.e_sq(h[s]));
                continue;
            }
            if s < first_user {
                squares.push(b.id_sq(v[s - a.n_h() + a.n_objects()]));
                continue;
            }
            let t = find(&raw.squares, a.sq_name(s), "square mapping")?;
            squares.push(b.square(&t).ok_or(Error::DanglingReference {
                kind: "square",
                name: t,
            })?);
        }
        let out = DoubleFunctor {
            objects,
            h,
            v,
            squares,
        };
        out.check(a, b)?;
        Ok(out)
    }

    pub fn to_raw(&self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> RawFunctor {
        let mut raw = RawFunctor::default();
        for o in 0..a.n_objects() {
            raw.objects.insert(
                a.object_name(o).into(),
                b.object_name(self.objects[o]).into(),
            );
        }
        for f in a.n_objects()..a.n_h() {
            raw.horizontal
                .insert(a.h_name(f).into(), b.h_name(self.h[f]).into());
        }
        for u in a.n_objects()..a.n_v() {
            raw.vertical
                .insert(a.v_name(u).into(), b.v_name(self.v[u]).into());
        }
        for s in a.n_h() + a.n_v() - a.n_objects()..a.n_squares() {
            raw.squares
                .insert(a.sq_name(s).into(), b.sq_name(self.squares[s]).into());
        }
        raw
    }

    pub fn check(&self, a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> Result<()> {
        let bad = |s: String| Err(Error::NotAFunctor(s));
        if self.objects.len() != a.n_objects()
            || self.h.len() != a.n_h()
            || self.v.len() != a.n_v()
            || self.squares.len() != a.n_squares()
        {
            return bad("map sizes do not match the source".into());
        }
        for f in 0..a.n_h() {
            let g = self.h[f];
            if b.h_src(g) != self.objects[a.h_src(f)] || b.h_tgt(g) != self.objects[a.h_tgt(f)] {
                return bad(format!("boundary of `{}`", a.h_name(f)));
            }
        }
        for u in 0..a.n_v() {
            let w = self.v[u];
            if b.v_src(w) != self.objects[a.v_src(u)] || b.v_tgt(w) != self.objects[a.v_tgt(u)] {
                return bad(format!("boundary of `{}`", a.v_name(u)));
            }
        }
        for s in 0..a.n_squares() {
            let [t, bo, l, r] = a.boundary(s);
            if b.boundary(self.squares[s]) != [self.h[t], self.h[bo], self.v[l], self.v[r]] {
                return bad(format!("boundary of `{}`", a.sq_name(s)));
            }
        }
        for o in 0..a.n_objects() {
            if self.h[a.id_h(o)] != b.id_h(self.objects[o])
                || self.v[a.id_v(o)] != b.id_v(self.objects[o])
            {
                return bad(format!("identities at `{}`", a.object_name(o)));
            }
        }
        for f in 0..a.n_h() {
            if self.squares[a.e_sq(f)] != b.e_sq(self.h[f]) {
                return bad(format!("identity square on `{}`", a.h_name(f)));
            }
        }
        for u in 0..a.n_v() {
            if self.squares[a.id_sq(u)] != b.id_sq(self.v[u]) {
                return bad(format!("identity square on `{}`", a.v_name(u)));
            }
        }
        for (&(x, y), &z) in &a.comp_h {
            if b.comp_h(self.h[x], self.h[y]) != Some(self.h[z]) {
                return bad(format!("composite `{}`", a.h_name(z)));
            }
        }
        for (&(x, y), &z) in &a.comp_v {
            if b.comp_v(self.v[x], self.v[y]) != Some(self.v[z]) {
                return bad(format!("composite `{}`", a.v_name(z)));
            }
        }
        for (&(x, y), &z) in &a.hcomp_sq {
            if b.hcomp_sq(self.squares[x], self.squares[y]) != Some(self.squares[z]) {
                return bad(format!("horizontal composite `{}`", a.sq_name(z)));
            }
        }
        for (&(x, y), &z) in &a.vcomp_sq {
            if b.vcomp_sq(self.squares[x], self.squares[y]) != Some(self.squares[z]) {
                return bad(format!("vertical composite `{}`", a.sq_name(z)));
            }
        }
        Ok(())
    }
}

/// The inclusion ℍ𝒜 → ℍ^≃𝒜.
pub fn hsim_inclusion(
    a: &FiniteTwoCategory,
) -> (FiniteDoubleCategory, HsimEmbedding, DoubleFunctor) {
    let h = FiniteDoubleCategory::embed(a, Direction::Horizontal);
    let hs = FiniteDoubleCategory::hsim_embed(a);
    let id_adj = |o: usize| {
        hs.adjoint
            .iter()
            .position(|e| {
                e.f == a.id1(o)
                    && e.g == a.id1(o)
                    && e.eta == a.id2(a.id1(o))
                    && e.eps == a.id2(a.id1(o))
            })
            .expect("identity adjoint equivalence")
    };
    let squares = (0..h.n_squares())
        .map(|c| {
            let f = a.src2(c);
            let g = a.tgt2(c);
            hs.square_of[&(c, f, g, id_adj(a.src1(f)), id_adj(a.tgt1(f)))]
        })
        .collect();
    let functor = DoubleFunctor {
        objects: (0..h.n_objects()).collect(),
        h: (0..h.n_h()).collect(),
        v: (0..h.n_v()).collect(),
        squares,
    };
    functor
        .check(&h, &hs.dbl)
        .expect("inclusion is a double functor");
    (h, hs, functor)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::cat::FiniteCategory;
    use crate::two::tests::iso;

    pub fn free_square() -> FiniteDoubleCategory {
        FiniteDoubleCategory::validate(&RawDoubleCategory {
            objects: vec!["A".into(), "B".into(), "C".into(), "D".into()],
            horizontal: vec![RawArrow::new("f", "A", "B"), RawArrow::new("g", "C", "D")],
            vertical: vec![RawArrow::new("u", "A", "C"), RawArrow::new("v", "B", "D")],
            squares: vec![RawSquare::new("alpha", "f", "g", "u", "v")],
            ..Default::default()
        })
        .unwrap()
    }

    #[test]
    fn free_square_counts() {
        let s = free_square();
        assert_eq!((s.n_objects(), s.n_h(), s.n_v()), (4, 6, 6));
        // e_f for six horizontals, id_u for two nonidentity verticals, alpha.
        assert_eq!(s.n_squares(), 9);
        assert_eq!(FiniteDoubleCategory::validate(&s.to_raw()).unwrap(), s);
    }

    #[test]
    fn embeddings_of_iso() {
        let i = iso();
        let h = FiniteDoubleCategory::embed(&i, Direction::Horizontal);
        assert_eq!(
            (h.n_objects(), h.n_h(), h.n_v(), h.n_squares()),
            (2, 4, 2, 4)
        );
        let back = h.underlying(Direction::Horizontal).two;
        assert_eq!(back, i);
        let v = FiniteDoubleCategory::embed(&i, Direction::Vertical);
        assert_eq!(v.underlying(Direction::Vertical).two, i);
        let flat = h.underlying(Direction::Vertical).two;
        assert_eq!(flat.n_cells1(), 2);
    }

    #[test]
    fn hsim_of_iso() {
        let i = iso();
        let hs = FiniteDoubleCategory::hsim_embed(&i);
        assert_eq!(
            (
                hs.dbl.n_objects(),
                hs.dbl.n_h(),
                hs.dbl.n_v(),
                hs.dbl.n_squares()
            ),
            (2, 4, 4, 16)
        );
        assert_eq!(hs.dbl.underlying(Direction::Horizontal).two, i);
        let (_, _, inc) = hsim_inclusion(&i);
        assert_eq!(inc.squares.len(), 4);
    }

    #[test]
    fn hsim_of_arrow_and_point() {
        let pt = FiniteTwoCategory::locally_discrete(&FiniteCategory::chain(0));
        let hs = FiniteDoubleCategory::hsim_embed(&pt);
        assert_eq!(
            (
                hs.dbl.n_objects(),
                hs.dbl.n_h(),
                hs.dbl.n_v(),
                hs.dbl.n_squares()
            ),
            (1, 1, 1, 1)
        );
        let arrow = FiniteTwoCategory::locally_discrete(&FiniteCategory::chain(1));
        let hs = FiniteDoubleCategory::hsim_embed(&arrow);
        assert_eq!(hs.dbl.n_v(), 2);
        assert_eq!(hs.dbl.underlying(Direction::Horizontal).two, arrow);
    }

    #[test]
    fn functor_checks() {
        let s = free_square();
        let id = DoubleFunctor::identity(&s);
        id.check(&s, &s).unwrap();
        let raw = id.to_raw(&s, &s);
        assert_eq!(DoubleFunctor::from_raw(&raw, &s, &s).unwrap(), id);
    }
}
