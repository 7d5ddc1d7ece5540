//! Double categories given by generators and relations.
//!
//! Presented double categories are usually infinite, so they are never
//! materialized. What is computed is the set of double functors out of a
//! presentation into a finite target, by search over generator images.

mod enumerate;
mod morphism;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{canonical, enumerate, satisfies, Valuation};
pub use morphism::{apply_functor, compose_data, reverse_data, PresMorphism};

/// One letter of a horizontal path: a generator, or the partner of an
/// adjoint generator (its adjoint inverse, pointing backwards).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    Gen(usize),
    Partner(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HPath {
    pub start: usize,
    pub letters: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VPath {
    pub start: usize,
    pub letters: Vec<usize>,
}

impl HPath {
    pub fn empty(start: usize) -> Self {
        HPath {
            start,
            letters: Vec::new(),
        }
    }
    pub fn then(&self, other: &HPath) -> HPath {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        HPath {
            start: self.start,
            letters,
        }
    }
}

impl VPath {
    pub fn empty(start: usize) -> Self {
        VPath {
            start,
            letters: Vec::new(),
        }
    }
    pub fn then(&self, other: &VPath) -> VPath {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        VPath {
            start: self.start,
            letters,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HGen {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    #[serde(default)]
    pub adjoint: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VGen {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum SqFlag {
    #[default]
    Plain,
    VertInvertible,
    HorInvertible,
    Whi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SqGen {
    pub name: String,
    pub top: HPath,
    pub bottom: HPath,
    pub left: VPath,
    pub right: VPath,
    #[serde(default)]
    pub flag: SqFlag,
}

/// Pasting expressions. `HComp` lists squares left to right, `VComp` top to
/// bottom. `Unit(i)` and `Counit(i)` are the unit and counit of the adjoint
/// generator `i`; `IdH` is the horizontal identity on a vertical path and
/// `IdV` the vertical identity on a horizontal path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SqExpr {
    Gen(usize),
    VInv(Box<SqExpr>),
    HInv(Box<SqExpr>),
    Unit(usize),
    Counit(usize),
    IdH(VPath),
    IdV(HPath),
    HComp(Vec<SqExpr>),
    VComp(Vec<SqExpr>),
}

impl SqExpr {
    pub fn vinv(self) -> SqExpr {
        SqExpr::VInv(Box::new(self))
    }
    pub fn hinv(self) -> SqExpr {
        SqExpr::HInv(Box::new(self))
    }
    pub fn h(parts: Vec<SqExpr>) -> SqExpr {
        SqExpr::HComp(parts)
    }
    pub fn v(parts: Vec<SqExpr>) -> SqExpr {
        SqExpr::VComp(parts)
    }

    fn visit(&self, f: &mut impl FnMut(&SqExpr)) {
        f(self);
        match self {
            SqExpr::VInv(e) | SqExpr::HInv(e) => e.visit(f),
            SqExpr::HComp(xs) | SqExpr::VComp(xs) => xs.iter().for_each(|x| x.visit(f)),
            _ => {}
        }
    }
}

/// Syntactic normalization: flattens nested composites, merges adjacent
/// vertical identities side by side, drops vertical identities from vertical
/// composites and inverts identities to themselves. Equal results mean equal
/// squares; different results mean nothing.
pub fn simplify(e: &SqExpr) -> SqExpr {
    let mut cur = e.clone();
    loop {
        let next = simplify_once(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn simplify_once(e: &SqExpr) -> SqExpr {
    match e {
        SqExpr::VInv(x) | SqExpr::HInv(x) => match simplify_once(x) {
            id @ (SqExpr::IdV(_) | SqExpr::IdH(_)) => id,
            SqExpr::VInv(y) if matches!(e, SqExpr::VInv(_)) => *y,
            SqExpr::HInv(y) if matches!(e, SqExpr::HInv(_)) => *y,
            y if matches!(e, SqExpr::VInv(_)) => y.vinv(),
            y => y.hinv(),
        },
        SqExpr::HComp(xs) => {
            let mut out: Vec<SqExpr> = Vec::new();
            for x in xs.iter().map(simplify_once) {
                let parts = match x {
                    SqExpr::HComp(ys) => ys,
                    y => vec![y],
                };
                for y in parts {
                    match (out.last_mut(), y) {
                        (Some(SqExpr::IdV(p)), SqExpr::IdV(q)) => p.letters.extend(q.letters),
                        (_, y) => out.push(y),
                    }
                }
            }
            if out.len() > 1 {
                out.retain(|y| !matches!(y, SqExpr::IdV(p) if p.letters.is_empty()));
            }
            if out.len() == 1 {
                out.pop().unwrap()
            } else {
                SqExpr::HComp(out)
            }
        }
        SqExpr::VComp(xs) => {
            let mut out: Vec<SqExpr> = Vec::new();
            for x in xs.iter().map(simplify_once) {
                match x {
                    SqExpr::VComp(ys) => out.extend(ys),
                    y => out.push(y),
                }
            }
            let first = out[0].clone();
            out.retain(|y| !matches!(y, SqExpr::IdV(_)));
            match out.len() {
                0 => first,
                1 => out.pop().unwrap(),
                _ => SqExpr::VComp(out),
            }
        }
        other => other.clone(),
    }
}

/// The four sides of a square expression, as words in the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    pub top: HPath,
    pub bottom: HPath,
    pub left: VPath,
    pub right: VPath,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DblPresentation {
    pub objects: Vec<String>,
    #[serde(default)]
    pub h_gens: Vec<HGen>,
    #[serde(default)]
    pub v_gens: Vec<VGen>,
    #[serde(default)]
    pub sq_gens: Vec<SqGen>,
    #[serde(default)]
    pub relations: Vec<[SqExpr; 2]>,
    /// Equations between horizontal paths.
    #[serde(default)]
    pub h_relations: Vec<[HPath; 2]>,
    /// Equations between vertical paths.
    #[serde(default)]
    pub v_relations: Vec<[VPath; 2]>,
}

/// A presentation without vertical generators, read as a 2-category: 2-cell
/// generators are squares with empty vertical sides.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCatPresentation(pub DblPresentation);

impl DblPresentation {
    pub fn add_object(&mut self, name: impl Into<String>) -> usize {
        self.objects.push(name.into());
        self.objects.len() - 1
    }
    pub fn add_h(
        &mut self,
        name: impl Into<String>,
        src: usize,
        tgt: usize,
        adjoint: bool,
    ) -> usize {
        self.h_gens.push(HGen {
            name: name.into(),
            src,
            tgt,
            adjoint,
        });
        self.h_gens.len() - 1
    }
    pub fn add_v(&mut self, name: impl Into<String>, src: usize, tgt: usize) -> usize {
        self.v_gens.push(VGen {
            name: name.into(),
            src,
            tgt,
        });
        self.v_gens.len() - 1
    }
    pub fn add_sq(
        &mut self,
        name: impl Into<String>,
        top: HPath,
        bottom: HPath,
        left: VPath,
        right: VPath,
        flag: SqFlag,
    ) -> usize {
        self.sq_gens.push(SqGen {
            name: name.into(),
            top,
            bottom,
            left,
            right,
            flag,
        });
        self.sq_gens.len() - 1
    }
    /// A globular square generator (empty vertical sides).
    pub fn add_cell(
        &mut self,
        name: impl Into<String>,
        top: HPath,
        bottom: HPath,
        flag: SqFlag,
    ) -> usize {
        let left = VPath::empty(top.start);
        let right = VPath::empty(self.h_end(&top).expect("well-formed path"));
        self.add_sq(name, top, bottom, left, right, flag)
    }
    pub fn relate(&mut self, lhs: SqExpr, rhs: SqExpr) {
        self.relations.push([lhs, rhs]);
    }

    /// Path of the given letters, starting at the source of the first.
    pub fn hp(&self, letters: &[Letter]) -> HPath {
        let start = match letters[0] {
            Letter::Gen(i) => self.h_gens[i].src,
            Letter::Partner(i) => self.h_gens[i].tgt,
        };
        HPath {
            start,
            letters: letters.to_vec(),
        }
    }
    pub fn vp(&self, letters: &[usize]) -> VPath {
        VPath {
            start: self.v_gens[letters[0]].src,
            letters: letters.to_vec(),
        }
    }

    pub fn h_index(&self, name: &str) -> Option<usize> {
        self.h_gens.iter().position(|g| g.name == name)
    }
    pub fn v_index(&self, name: &str) -> Option<usize> {
        self.v_gens.iter().position(|g| g.name == name)
    }
    pub fn sq_index(&self, name: &str) -> Option<usize> {
        self.sq_gens.iter().position(|g| g.name == name)
    }
    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn h_end(&self, p: &HPath) -> Result<usize> {
        let mut at = p.start;
        for &l in &p.letters {
            let (s, t) = match l {
                Letter::Gen(i) => {
                    let g = self
                        .h_gens
                        .get(i)
                        .ok_or_else(|| mismatch("unknown horizontal generator"))?;
                    (g.src, g.tgt)
                }
                Letter::Partner(i) => {
                    let g = self
                        .h_gens
                        .get(i)
                        .ok_or_else(|| mismatch("unknown horizontal generator"))?;
                    if !g.adjoint {
                        return Err(mismatch(&format!("`{}` has no partner", g.name)));
                    }
                    (g.tgt, g.src)
                }
            };
            if s != at {
                return Err(mismatch("horizontal path is not composable"));
            }
            at = t;
        }
        Ok(at)
    }

    pub fn v_end(&self, p: &VPath) -> Result<usize> {
        let mut at = p.start;
        for &i in &p.letters {
            let g = self
                .v_gens
                .get(i)
                .ok_or_else(|| mismatch("unknown vertical generator"))?;
            if g.src != at {
                return Err(mismatch("vertical path is not composable"));
            }
            at = g.tgt;
        }
        Ok(at)
    }

    pub fn boundary(&self, e: &SqExpr) -> Result<Boundary> {
        match e {
            SqExpr::Gen(i) => {
                let g = self
                    .sq_gens
                    .get(*i)
                    .ok_or_else(|| mismatch("unknown square generator"))?;
                Ok(Boundary {
                    top: g.top.clone(),
                    bottom: g.bottom.clone(),
                    left: g.left.clone(),
                    right: g.right.clone(),
                })
            }
            SqExpr::VInv(x) => {
                let b = self.boundary(x)?;
                if !b.left.letters.is_empty() || !b.right.letters.is_empty() {
                    return Err(mismatch(
                        "vertical inverse of a square with nontrivial vertical sides",
                    ));
                }
                Ok(Boundary {
                    top: b.bottom,
                    bottom: b.top,
                    left: b.left,
                    right: b.right,
                })
            }
            SqExpr::HInv(x) => {
                let b = self.boundary(x)?;
                if !b.top.letters.is_empty() || !b.bottom.letters.is_empty() {
                    return Err(mismatch(
                        "horizontal inverse of a square with nontrivial horizontal sides",
                    ));
                }
                Ok(Boundary {
                    top: b.top,
                    bottom: b.bottom,
                    left: b.right,
                    right: b.left,
                })
            }
            SqExpr::Unit(i) | SqExpr::Counit(i) => {
                let g = self
                    .h_gens
                    .get(*i)
                    .ok_or_else(|| mismatch("unknown horizontal generator"))?;
                if !g.adjoint {
                    return Err(mismatch(&format!(
                        "`{}` is not an adjoint generator",
                        g.name
                    )));
                }
                if matches!(e, SqExpr::Unit(_)) {
                    Ok(Boundary {
                        top: HPath::empty(g.src),
                        bottom: HPath {
                            start: g.src,
                            letters: vec![Letter::Gen(*i), Letter::Partner(*i)],
                        },
                        left: VPath::empty(g.src),
                        right: VPath::empty(g.src),
                    })
                } else {
                    Ok(Boundary {
                        top: HPath {
                            start: g.tgt,
                            letters: vec![Letter::Partner(*i), Letter::Gen(*i)],
                        },
                        bottom: HPath::empty(g.tgt),
                        left: VPath::empty(g.tgt),
                        right: VPath::empty(g.tgt),
                    })
                }
            }
            SqExpr::IdH(p) => {
                let end = self.v_end(p)?;
                Ok(Boundary {
                    top: HPath::empty(p.start),
                    bottom: HPath::empty(end),
                    left: p.clone(),
                    right: p.clone(),
                })
            }
            SqExpr::IdV(p) => {
                let end = self.h_end(p)?;
                Ok(Boundary {
                    top: p.clone(),
                    bottom: p.clone(),
                    left: VPath::empty(p.start),
                    right: VPath::empty(end),
                })
            }
            SqExpr::HComp(xs) => {
                let mut it = xs.iter();
                let mut acc = self.boundary(
                    it.next()
                        .ok_or_else(|| mismatch("empty horizontal composite"))?,
                )?;
                for x in it {
                    let b = self.boundary(x)?;
                    if acc.right != b.left {
                        return Err(mismatch(
                            "horizontal composite: right side differs from next left side",
                        ));
                    }
                    acc = Boundary {
                        top: acc.top.then(&b.top),
                        bottom: acc.bottom.then(&b.bottom),
                        left: acc.left,
                        right: b.right,
                    };
                }
                Ok(acc)
            }
            SqExpr::VComp(xs) => {
                let mut it = xs.iter();
                let mut acc = self.boundary(
                    it.next()
                        .ok_or_else(|| mismatch("empty vertical composite"))?,
                )?;
                for x in it {
                    let b = self.boundary(x)?;
                    if acc.bottom != b.top {
                        return Err(mismatch("vertical composite: bottom differs from next top"));
                    }
                    acc = Boundary {
                        top: acc.top,
                        bottom: b.bottom,
                        left: acc.left.then(&b.left),
                        right: acc.right.then(&b.right),
                    };
                }
                Ok(acc)
            }
        }
    }

    fn vertically_invertible(&self, e: &SqExpr) -> bool {
        match e {
            SqExpr::Gen(i) => self.sq_gens[*i].flag == SqFlag::VertInvertible,
            SqExpr::Unit(_) | SqExpr::Counit(_) | SqExpr::IdV(_) | SqExpr::VInv(_) => true,
            SqExpr::IdH(p) => p.letters.is_empty(),
            SqExpr::HComp(xs) | SqExpr::VComp(xs) => {
                xs.iter().all(|x| self.vertically_invertible(x))
            }
            SqExpr::HInv(_) => false,
        }
    }

    fn horizontally_invertible(&self, e: &SqExpr) -> bool {
        match e {
            SqExpr::Gen(i) => self.sq_gens[*i].flag == SqFlag::HorInvertible,
            SqExpr::IdH(_) | SqExpr::HInv(_) => true,
            SqExpr::IdV(p) => p.letters.is_empty(),
            SqExpr::HComp(xs) | SqExpr::VComp(xs) => {
                xs.iter().all(|x| self.horizontally_invertible(x))
            }
            _ => false,
        }
    }

    /// Well-formedness of every generator and relation.
    pub fn validate(&self) -> Result<()> {
        let n = self.objects.len();
        for g in &self.h_gens {
            if g.src >= n || g.tgt >= n {
                return Err(Error::DanglingReference {
                    kind: "object",
                    name: g.name.clone(),
                });
            }
        }
        for g in &self.v_gens {
            if g.src >= n || g.tgt >= n {
                return Err(Error::DanglingReference {
                    kind: "object",
                    name: g.name.clone(),
                });
            }
        }
        for s in &self.sq_gens {
            let corners = (
                self.h_end(&s.top)?,
                self.h_end(&s.bottom)?,
                self.v_end(&s.left)?,
                self.v_end(&s.right)?,
            );
            let ok = s.top.start == s.left.start
                && corners.0 == s.right.start
                && s.bottom.start == corners.2
                && corners.1 == corners.3;
            if !ok {
                return Err(Error::BadBoundary {
                    cell: s.name.clone(),
                    detail: "corners do not match".into(),
                });
            }
            let trivial_v = s.left.letters.is_empty() && s.right.letters.is_empty();
            let trivial_h = s.top.letters.is_empty() && s.bottom.letters.is_empty();
            if (s.flag == SqFlag::VertInvertible && !trivial_v)
                || (s.flag == SqFlag::HorInvertible && !trivial_h)
            {
                return Err(Error::BadBoundary {
                    cell: s.name.clone(),
                    detail: "invertibility flag needs trivial sides".into(),
                });
            }
        }
        for (k, [l, r]) in self.relations.iter().enumerate() {
            let mut bad = None;
            for side in [l, r] {
                side.visit(&mut |e| match e {
                    SqExpr::VInv(x) if !self.vertically_invertible(x) => {
                        bad = Some("vertical inverse of a non-invertible")
                    }
                    SqExpr::HInv(x) if !self.horizontally_invertible(x) => {
                        bad = Some("horizontal inverse of a non-invertible")
                    }
                    _ => {}
                });
            }
            if let Some(why) = bad {
                return Err(mismatch(&format!("relation {k}: {why}")));
            }
            let (bl, br) = (self.boundary(l)?, self.boundary(r)?);
            // With path relations, words are only compared up to their ends.
            let parallel = if self.h_relations.is_empty() && self.v_relations.is_empty() {
                bl == br
            } else {
                self.corners(&bl)? == self.corners(&br)?
            };
            if !parallel {
                return Err(mismatch(&format!("relation {k}: sides are not parallel")));
            }
        }
        for (k, [l, r]) in self.h_relations.iter().enumerate() {
            if l.start != r.start || self.h_end(l)? != self.h_end(r)? {
                return Err(mismatch(&format!(
                    "horizontal relation {k}: paths are not parallel"
                )));
            }
        }
        for (k, [l, r]) in self.v_relations.iter().enumerate() {
            if l.start != r.start || self.v_end(l)? != self.v_end(r)? {
                return Err(mismatch(&format!(
                    "vertical relation {k}: paths are not parallel"
                )));
            }
        }
        Ok(())
    }

    fn corners(&self, b: &Boundary) -> Result<[usize; 4]> {
        Ok([
            b.top.start,
            self.h_end(&b.top)?,
            b.bottom.start,
            self.h_end(&b.bottom)?,
        ])
    }

    pub fn n_generators(&self) -> usize {
        self.h_gens.len() + self.v_gens.len() + self.sq_gens.len()
    }
}

fn mismatch(what: &str) -> Error {
    Error::BoundaryMismatch(what.to_string())
}

impl TwoCatPresentation {
    pub fn validate(&self) -> Result<()> {
        if !self.0.v_gens.is_empty() {
            return Err(mismatch(
                "a 2-category presentation has no vertical generators",
            ));
        }
        self.0.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn free_square() -> DblPresentation {
        let mut p = DblPresentation::default();
        let [a, b, c, d] = ["A", "B", "C", "D"].map(|n| p.add_object(n));
        let f = p.add_h("f", a, b, false);
        let g = p.add_h("g", c, d, false);
        let u = p.add_v("u", a, c);
        let v = p.add_v("v", b, d);
        let (top, bottom) = (p.hp(&[Letter::Gen(f)]), p.hp(&[Letter::Gen(g)]));
        let (left, right) = (p.vp(&[u]), p.vp(&[v]));
        p.add_sq("alpha", top, bottom, left, right, SqFlag::Plain);
        p
    }

    #[test]
    fn boundaries_of_composites() {
        let mut p = DblPresentation::default();
        let x = p.add_object("x");
        let y = p.add_object("y");
        let f = p.add_h("f", x, y, true);
        let snake = SqExpr::v(vec![
            SqExpr::h(vec![SqExpr::Unit(f), SqExpr::IdV(p.hp(&[Letter::Gen(f)]))]),
            SqExpr::h(vec![
                SqExpr::IdV(p.hp(&[Letter::Gen(f)])),
                SqExpr::Counit(f),
            ]),
        ]);
        let b = p.boundary(&snake).unwrap();
        assert_eq!(b.top.letters, vec![Letter::Gen(f)]);
        assert_eq!(b.bottom.letters, vec![Letter::Gen(f)]);
        p.relate(snake, SqExpr::IdV(p.hp(&[Letter::Gen(f)])));
        p.validate().unwrap();
        let bad = SqExpr::v(vec![SqExpr::Unit(f), SqExpr::Unit(f)]);
        assert!(matches!(p.boundary(&bad), Err(Error::BoundaryMismatch(_))));
    }

    #[test]
    fn free_square_is_well_formed() {
        free_square().validate().unwrap();
        let mut p = free_square();
        p.sq_gens[0].right = VPath::empty(1);
        assert!(p.validate().is_err());
    }
}
