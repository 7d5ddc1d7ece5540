//! Presentations of the nerve shapes `𝕏(m, k, n)`: a horizontal direction
//! `[m]`, a vertical direction `Õ₂[k]` and an adjoint space direction
//! `Ō₂[n]`, together with their translations into 2-category presentations
//! (valuations into `ℍ𝒜` and `ℍ^≃𝒜`) and the comparison maps between those.
//!
//! Cells are indexed by coordinate triples. A coordinate is a vertex, an
//! edge `pq` with `p < q`, or the triangle `012`; names join the three
//! coordinates with `|`, so `01|0|2` is the horizontal edge from `(0,0,2)`
//! to `(1,0,2)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::oriental::Monotone;
use crate::error::{Error, Result};
use crate::present::{
    simplify, DblPresentation, HPath, Letter, PresMorphism, SqExpr, SqFlag, TwoCatPresentation,
    VPath,
};

/// Largest supported index in each direction.
pub const GRID_MAX: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    Horizontal,
    Vertical,
    Space,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Horizontal, Axis::Vertical, Axis::Space];
    pub fn index(self) -> usize {
        match self {
            Axis::Horizontal => 0,
            Axis::Vertical => 1,
            Axis::Space => 2,
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "horizontal" | "h" | "m" => Ok(Axis::Horizontal),
            "vertical" | "v" | "k" => Ok(Axis::Vertical),
            "space" | "s" | "n" => Ok(Axis::Space),
            other => Err(format!(
                "unknown axis `{other}` (horizontal, vertical, space)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Coord {
    Pt(usize),
    Edge(usize, usize),
    Tri,
}

impl Coord {
    fn name(self) -> String {
        match self {
            Coord::Pt(p) => p.to_string(),
            Coord::Edge(p, q) => format!("{p}{q}"),
            Coord::Tri => "012".into(),
        }
    }
    fn parse(s: &str) -> Coord {
        let d: Vec<usize> = s
            .chars()
            .map(|c| c.to_digit(10).expect("digit") as usize)
            .collect();
        match d.len() {
            1 => Coord::Pt(d[0]),
            2 => Coord::Edge(d[0], d[1]),
            _ => Coord::Tri,
        }
    }
    fn dim(self) -> usize {
        match self {
            Coord::Pt(_) => 0,
            Coord::Edge(..) => 1,
            Coord::Tri => 2,
        }
    }
    fn apply(self, alpha: &Monotone) -> Coord {
        let image = |s: &[usize]| -> Coord {
            let mut v: Vec<usize> = s.iter().map(|&x| alpha.map[x]).collect();
            v.dedup();
            match v.len() {
                1 => Coord::Pt(v[0]),
                2 => Coord::Edge(v[0], v[1]),
                _ => Coord::Tri,
            }
        };
        match self {
            Coord::Pt(p) => Coord::Pt(alpha.map[p]),
            Coord::Edge(p, q) => image(&[p, q]),
            Coord::Tri => image(&[0, 1, 2]),
        }
    }
}

fn cell_name(c: [Coord; 3]) -> String {
    c.map(Coord::name).join("|")
}

fn parse_name(s: &str) -> [Coord; 3] {
    let parts: Vec<Coord> = s.split('|').map(Coord::parse).collect();
    [parts[0], parts[1], parts[2]]
}

fn edges(r: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..=r {
        for q in p + 1..=r {
            out.push((p, q));
        }
    }
    out
}

use Coord::{Edge, Pt, Tri};

struct Builder {
    p: DblPresentation,
    dims: [usize; 3],
    h: HashMap<String, usize>,
    v: HashMap<String, usize>,
    sq: HashMap<String, usize>,
}

impl Builder {
    fn obj(&self, x: usize, y: usize, z: usize) -> usize {
        let [_, k, n] = self.dims;
        (x * (k + 1) + y) * (n + 1) + z
    }
    fn hl(&self, c: [Coord; 3]) -> Letter {
        Letter::Gen(self.h[&cell_name(c)])
    }
    fn hpath(&self, cs: &[[Coord; 3]]) -> HPath {
        self.p
            .hp(&cs.iter().map(|&c| self.hl(c)).collect::<Vec<_>>())
    }
    fn vpath(&self, cs: &[[Coord; 3]]) -> VPath {
        self.p.vp(&cs
            .iter()
            .map(|&c| self.v[&cell_name(c)])
            .collect::<Vec<_>>())
    }
    fn s(&self, c: [Coord; 3]) -> SqExpr {
        SqExpr::Gen(self.sq[&cell_name(c)])
    }
    fn idv(&self, cs: &[[Coord; 3]]) -> SqExpr {
        SqExpr::IdV(self.hpath(cs))
    }
    fn square(
        &mut self,
        c: [Coord; 3],
        top: HPath,
        bottom: HPath,
        left: VPath,
        right: VPath,
        flag: SqFlag,
    ) {
        let name = cell_name(c);
        let i = self.p.add_sq(name.clone(), top, bottom, left, right, flag);
        self.sq.insert(name, i);
    }
    fn cell(&mut self, c: [Coord; 3], top: HPath, bottom: HPath, flag: SqFlag) {
        let name = cell_name(c);
        let i = self.p.add_cell(name.clone(), top, bottom, flag);
        self.sq.insert(name, i);
    }
}

/// The presentation of `𝕏(m, k, n)`.
///
/// Generators: horizontal edges in the first coordinate, vertical edges in
/// the second, adjoint horizontal edges in the third; squares for each pair
/// of directions (the space/horizontal ones invertible, the space/vertical
/// ones weakly horizontally invertible) and an invertible triangle for each
/// direction of length two. Relations say that the squares are natural with
/// respect to each other and to the triangles.
pub fn x_presentation(m: usize, k: usize, n: usize) -> Result<DblPresentation> {
    if m > GRID_MAX || k > GRID_MAX || n > GRID_MAX {
        return Err(Error::RangeExceeded(format!(
            "level ({m}, {k}, {n}) has an index above {GRID_MAX}"
        )));
    }
    let mut b = Builder {
        p: DblPresentation::default(),
        dims: [m, k, n],
        h: HashMap::new(),
        v: HashMap::new(),
        sq: HashMap::new(),
    };
    for x in 0..=m {
        for y in 0..=k {
            for z in 0..=n {
                b.p.add_object(cell_name([Pt(x), Pt(y), Pt(z)]));
            }
        }
    }
    for (x0, x1) in edges(m) {
        for y in 0..=k {
            for z in 0..=n {
                let name = cell_name([Edge(x0, x1), Pt(y), Pt(z)]);
                let i =
                    b.p.add_h(name.clone(), b.obj(x0, y, z), b.obj(x1, y, z), false);
                b.h.insert(name, i);
            }
        }
    }
    for x in 0..=m {
        for y in 0..=k {
            for (z0, z1) in edges(n) {
                let name = cell_name([Pt(x), Pt(y), Edge(z0, z1)]);
                let i =
                    b.p.add_h(name.clone(), b.obj(x, y, z0), b.obj(x, y, z1), true);
                b.h.insert(name, i);
            }
        }
    }
    for x in 0..=m {
        for (y0, y1) in edges(k) {
            for z in 0..=n {
                let name = cell_name([Pt(x), Edge(y0, y1), Pt(z)]);
                let i = b.p.add_v(name.clone(), b.obj(x, y0, z), b.obj(x, y1, z));
                b.v.insert(name, i);
            }
        }
    }

    // Horizontal against vertical.
    for (x0, x1) in edges(m) {
        for (y0, y1) in edges(k) {
            for z in 0..=n {
                let xe = Edge(x0, x1);
                let ye = Edge(y0, y1);
                let top = b.hpath(&[[xe, Pt(y0), Pt(z)]]);
                let bottom = b.hpath(&[[xe, Pt(y1), Pt(z)]]);
                let left = b.vpath(&[[Pt(x0), ye, Pt(z)]]);
                let right = b.vpath(&[[Pt(x1), ye, Pt(z)]]);
                b.square([xe, ye, Pt(z)], top, bottom, left, right, SqFlag::Plain);
            }
        }
    }
    // Space against vertical.
    for x in 0..=m {
        for (y0, y1) in edges(k) {
            for (z0, z1) in edges(n) {
                let ye = Edge(y0, y1);
                let ze = Edge(z0, z1);
                let top = b.hpath(&[[Pt(x), Pt(y0), ze]]);
                let bottom = b.hpath(&[[Pt(x), Pt(y1), ze]]);
                let left = b.vpath(&[[Pt(x), ye, Pt(z0)]]);
                let right = b.vpath(&[[Pt(x), ye, Pt(z1)]]);
                b.square([Pt(x), ye, ze], top, bottom, left, right, SqFlag::Whi);
            }
        }
    }
    // Space against horizontal.
    for (x0, x1) in edges(m) {
        for y in 0..=k {
            for (z0, z1) in edges(n) {
                let xe = Edge(x0, x1);
                let ze = Edge(z0, z1);
                let top = b.hpath(&[[Pt(x0), Pt(y), ze], [xe, Pt(y), Pt(z1)]]);
                let bottom = b.hpath(&[[xe, Pt(y), Pt(z0)], [Pt(x1), Pt(y), ze]]);
                b.cell([xe, Pt(y), ze], top, bottom, SqFlag::VertInvertible);
            }
        }
    }
    if m == 2 {
        for y in 0..=k {
            for z in 0..=n {
                let top = b.hpath(&[[Edge(0, 2), Pt(y), Pt(z)]]);
                let bottom = b.hpath(&[[Edge(0, 1), Pt(y), Pt(z)], [Edge(1, 2), Pt(y), Pt(z)]]);
                b.cell([Tri, Pt(y), Pt(z)], top, bottom, SqFlag::VertInvertible);
            }
        }
    }
    if n == 2 {
        for x in 0..=m {
            for y in 0..=k {
                let top = b.hpath(&[[Pt(x), Pt(y), Edge(0, 2)]]);
                let bottom = b.hpath(&[[Pt(x), Pt(y), Edge(0, 1)], [Pt(x), Pt(y), Edge(1, 2)]]);
                b.cell([Pt(x), Pt(y), Tri], top, bottom, SqFlag::VertInvertible);
            }
        }
    }
    if k == 2 {
        for x in 0..=m {
            for z in 0..=n {
                let o = b.obj(x, 0, z);
                let left = b.vpath(&[[Pt(x), Edge(0, 2), Pt(z)]]);
                let right = b.vpath(&[[Pt(x), Edge(0, 1), Pt(z)], [Pt(x), Edge(1, 2), Pt(z)]]);
                let bottom = HPath::empty(b.obj(x, 2, z));
                b.square(
                    [Pt(x), Tri, Pt(z)],
                    HPath::empty(o),
                    bottom,
                    left,
                    right,
                    SqFlag::HorInvertible,
                );
            }
        }
    }

    let mut rel = Vec::new();
    if k == 2 {
        for (x0, x1) in edges(m) {
            for z in 0..=n {
                let xe = Edge(x0, x1);
                let lhs = SqExpr::h(vec![
                    b.s([Pt(x0), Tri, Pt(z)]),
                    SqExpr::v(vec![
                        b.s([xe, Edge(0, 1), Pt(z)]),
                        b.s([xe, Edge(1, 2), Pt(z)]),
                    ]),
                ]);
                let rhs = SqExpr::h(vec![
                    b.s([xe, Edge(0, 2), Pt(z)]),
                    b.s([Pt(x1), Tri, Pt(z)]),
                ]);
                rel.push((lhs, rhs));
            }
        }
        for x in 0..=m {
            for (z0, z1) in edges(n) {
                let ze = Edge(z0, z1);
                let lhs = SqExpr::h(vec![
                    b.s([Pt(x), Tri, Pt(z0)]),
                    SqExpr::v(vec![
                        b.s([Pt(x), Edge(0, 1), ze]),
                        b.s([Pt(x), Edge(1, 2), ze]),
                    ]),
                ]);
                let rhs = SqExpr::h(vec![
                    b.s([Pt(x), Edge(0, 2), ze]),
                    b.s([Pt(x), Tri, Pt(z1)]),
                ]);
                rel.push((lhs, rhs));
            }
        }
    }
    if m == 2 {
        for (y0, y1) in edges(k) {
            for z in 0..=n {
                let ye = Edge(y0, y1);
                let lhs = SqExpr::v(vec![
                    b.s([Edge(0, 2), ye, Pt(z)]),
                    b.s([Tri, Pt(y1), Pt(z)]),
                ]);
                let rhs = SqExpr::v(vec![
                    b.s([Tri, Pt(y0), Pt(z)]),
                    SqExpr::h(vec![
                        b.s([Edge(0, 1), ye, Pt(z)]),
                        b.s([Edge(1, 2), ye, Pt(z)]),
                    ]),
                ]);
                rel.push((lhs, rhs));
            }
        }
        for y in 0..=k {
            for (z0, z1) in edges(n) {
                let ze = Edge(z0, z1);
                let (s0, s2) = ([Pt(0), Pt(y), ze], [Pt(2), Pt(y), ze]);
                let pcomp = SqExpr::v(vec![
                    SqExpr::h(vec![
                        b.s([Edge(0, 1), Pt(y), ze]),
                        b.idv(&[[Edge(1, 2), Pt(y), Pt(z1)]]),
                    ]),
                    SqExpr::h(vec![
                        b.idv(&[[Edge(0, 1), Pt(y), Pt(z0)]]),
                        b.s([Edge(1, 2), Pt(y), ze]),
                    ]),
                ]);
                let lhs = SqExpr::v(vec![
                    b.s([Edge(0, 2), Pt(y), ze]),
                    SqExpr::h(vec![b.s([Tri, Pt(y), Pt(z0)]), b.idv(&[s2])]),
                ]);
                let rhs = SqExpr::v(vec![
                    SqExpr::h(vec![b.idv(&[s0]), b.s([Tri, Pt(y), Pt(z1)])]),
                    pcomp,
                ]);
                rel.push((lhs, rhs));
            }
        }
    }
    for (x0, x1) in edges(m) {
        for (y0, y1) in edges(k) {
            for (z0, z1) in edges(n) {
                let (xe, ye, ze) = (Edge(x0, x1), Edge(y0, y1), Edge(z0, z1));
                let lhs = SqExpr::v(vec![
                    b.s([xe, Pt(y0), ze]),
                    SqExpr::h(vec![b.s([xe, ye, Pt(z0)]), b.s([Pt(x1), ye, ze])]),
                ]);
                let rhs = SqExpr::v(vec![
                    SqExpr::h(vec![b.s([Pt(x0), ye, ze]), b.s([xe, ye, Pt(z1)])]),
                    b.s([xe, Pt(y1), ze]),
                ]);
                rel.push((lhs, rhs));
            }
        }
    }
    if n == 2 {
        for x in 0..=m {
            for (y0, y1) in edges(k) {
                let ye = Edge(y0, y1);
                let lhs = SqExpr::v(vec![
                    b.s([Pt(x), ye, Edge(0, 2)]),
                    b.s([Pt(x), Pt(y1), Tri]),
                ]);
                let rhs = SqExpr::v(vec![
                    b.s([Pt(x), Pt(y0), Tri]),
                    SqExpr::h(vec![
                        b.s([Pt(x), ye, Edge(0, 1)]),
                        b.s([Pt(x), ye, Edge(1, 2)]),
                    ]),
                ]);
                rel.push((lhs, rhs));
            }
        }
        for (x0, x1) in edges(m) {
            for y in 0..=k {
                let xe = Edge(x0, x1);
                let scomp = SqExpr::v(vec![
                    SqExpr::h(vec![
                        b.idv(&[[Pt(x0), Pt(y), Edge(0, 1)]]),
                        b.s([xe, Pt(y), Edge(1, 2)]),
                    ]),
                    SqExpr::h(vec![
                        b.s([xe, Pt(y), Edge(0, 1)]),
                        b.idv(&[[Pt(x1), Pt(y), Edge(1, 2)]]),
                    ]),
                ]);
                let lhs = SqExpr::v(vec![
                    SqExpr::h(vec![
                        b.s([Pt(x0), Pt(y), Tri]),
                        b.idv(&[[xe, Pt(y), Pt(2)]]),
                    ]),
                    scomp,
                ]);
                let rhs = SqExpr::v(vec![
                    b.s([xe, Pt(y), Edge(0, 2)]),
                    SqExpr::h(vec![
                        b.idv(&[[xe, Pt(y), Pt(0)]]),
                        b.s([Pt(x1), Pt(y), Tri]),
                    ]),
                ]);
                rel.push((lhs, rhs));
            }
        }
    }
    for (l, r) in rel {
        b.p.relate(l, r);
    }
    debug_assert!(b.p.validate().is_ok());
    Ok(b.p)
}

fn dims_of(p: &DblPresentation) -> [usize; 3] {
    let last = parse_name(p.objects.last().expect("nonempty shape"));
    last.map(|c| match c {
        Pt(x) => x,
        _ => unreachable!("objects are vertices"),
    })
}

/// The map `𝕏(…, α.dom, …) → 𝕏(…, α.cod, …)` induced by `α` in one
/// direction; the other two sizes are taken from `level`. Precomposition
/// with it is the corresponding nerve operator.
pub fn x_action(
    axis: Axis,
    alpha: &Monotone,
    level: [usize; 3],
) -> Result<(DblPresentation, DblPresentation, PresMorphism)> {
    let a = axis.index();
    let mut from = level;
    from[a] = alpha.dom;
    let mut to = level;
    to[a] = alpha.cod;
    let src = x_presentation(from[0], from[1], from[2])?;
    let tgt = x_presentation(to[0], to[1], to[2])?;
    let move_coords = |mut c: [Coord; 3]| {
        c[a] = c[a].apply(alpha);
        c
    };
    let obj = |name: &str| {
        tgt.object_index(&cell_name(move_coords(parse_name(name))))
            .expect("vertex image")
    };
    let objects: Vec<usize> = src.objects.iter().map(|o| obj(o)).collect();
    let h: Vec<HPath> = src
        .h_gens
        .iter()
        .map(|g| {
            let c = move_coords(parse_name(&g.name));
            match tgt.h_index(&cell_name(c)) {
                Some(j) if c.iter().map(|x| x.dim()).sum::<usize>() == 1 => HPath {
                    start: tgt.h_gens[j].src,
                    letters: vec![Letter::Gen(j)],
                },
                _ => HPath::empty(objects[g.src]),
            }
        })
        .collect();
    let v: Vec<VPath> = src
        .v_gens
        .iter()
        .map(|g| {
            let c = move_coords(parse_name(&g.name));
            match tgt.v_index(&cell_name(c)) {
                Some(j) if c.iter().map(|x| x.dim()).sum::<usize>() == 1 => VPath {
                    start: tgt.v_gens[j].src,
                    letters: vec![j],
                },
                _ => VPath::empty(objects[g.src]),
            }
        })
        .collect();
    let mut m = PresMorphism {
        objects,
        h,
        v,
        sq: Vec::new(),
    };
    for g in &src.sq_gens {
        let c0 = parse_name(&g.name);
        let c = move_coords(c0);
        let same_dim =
            c.iter().map(|x| x.dim()).sum::<usize>() == c0.iter().map(|x| x.dim()).sum::<usize>();
        let img = match tgt.sq_index(&cell_name(c)) {
            Some(j) if same_dim => SqExpr::Gen(j),
            _ => {
                let (top, bottom) = (m.map_h(&src, &g.top), m.map_h(&src, &g.bottom));
                let (left, right) = (m.map_v(&g.left), m.map_v(&g.right));
                if left.letters.is_empty() && right.letters.is_empty() && top == bottom {
                    SqExpr::IdV(top)
                } else if top.letters.is_empty() && bottom.letters.is_empty() && left == right {
                    SqExpr::IdH(left)
                } else {
                    return Err(Error::DisagreementBug(format!(
                        "degenerate image of `{}` is not an identity",
                        g.name
                    )));
                }
            }
        };
        m.sq.push(img);
    }
    m.check(&src, &tgt)?;
    Ok((src, tgt, m))
}

/// A 2-category presentation obtained from a double one, with the object
/// map and, for the `≃` translation, the adjoint generator standing for each
/// vertical generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub pres: TwoCatPresentation,
    pub objects: Vec<usize>,
    pub vertical: Vec<Option<usize>>,
    /// `true` for the `ℍ^≃` translation.
    pub weak: bool,
}

impl Translation {
    fn h(&self, p: &HPath) -> HPath {
        HPath {
            start: self.objects[p.start],
            letters: p.letters.clone(),
        }
    }
    fn v(&self, p: &VPath) -> HPath {
        HPath {
            start: self.objects[p.start],
            letters: p
                .letters
                .iter()
                .map(|&j| Letter::Gen(self.vertical[j].expect("vertical generator")))
                .collect(),
        }
    }
    fn sides_lsim(
        &self,
        src: &DblPresentation,
        e: &SqExpr,
    ) -> Result<(HPath, HPath, HPath, HPath)> {
        let b = src.boundary(e)?;
        Ok((
            self.h(&b.top),
            self.h(&b.bottom),
            self.v(&b.left),
            self.v(&b.right),
        ))
    }

    /// The image of a pasting expression of the source.
    pub fn expr(&self, src: &DblPresentation, e: &SqExpr) -> Result<SqExpr> {
        if self.weak {
            self.expr_lsim(src, e)
        } else {
            self.expr_l(e)
        }
    }

    fn expr_l(&self, e: &SqExpr) -> Result<SqExpr> {
        let all = |xs: &[SqExpr]| {
            xs.iter()
                .map(|x| self.expr_l(x))
                .collect::<Result<Vec<_>>>()
        };
        Ok(match e {
            SqExpr::Gen(i) => SqExpr::Gen(*i),
            SqExpr::VInv(x) | SqExpr::HInv(x) => self.expr_l(x)?.vinv(),
            SqExpr::Unit(i) => SqExpr::Unit(*i),
            SqExpr::Counit(i) => SqExpr::Counit(*i),
            SqExpr::IdH(p) => SqExpr::IdV(HPath::empty(self.objects[p.start])),
            SqExpr::IdV(p) => SqExpr::IdV(self.h(p)),
            SqExpr::HComp(xs) => SqExpr::h(all(xs)?),
            SqExpr::VComp(xs) => SqExpr::v(all(xs)?),
        })
    }

    fn expr_lsim(&self, src: &DblPresentation, e: &SqExpr) -> Result<SqExpr> {
        Ok(match e {
            SqExpr::Gen(i) => SqExpr::Gen(*i),
            SqExpr::VInv(x) | SqExpr::HInv(x) => self.expr_lsim(src, x)?.vinv(),
            SqExpr::Unit(i) => SqExpr::Unit(*i),
            SqExpr::Counit(i) => SqExpr::Counit(*i),
            SqExpr::IdH(p) => SqExpr::IdV(self.v(p)),
            SqExpr::IdV(p) => SqExpr::IdV(self.h(p)),
            SqExpr::HComp(xs) => {
                let mut acc = self.expr_lsim(src, &xs[0])?;
                for i in 1..xs.len() {
                    let a = SqExpr::h(xs[..i].to_vec());
                    let (top_a, _, _, _) = self.sides_lsim(src, &a)?;
                    let (_, bottom_b, _, _) = self.sides_lsim(src, &xs[i])?;
                    let b = self.expr_lsim(src, &xs[i])?;
                    acc = SqExpr::v(vec![
                        SqExpr::h(vec![SqExpr::IdV(top_a), b]),
                        SqExpr::h(vec![acc, SqExpr::IdV(bottom_b)]),
                    ]);
                }
                acc
            }
            SqExpr::VComp(xs) => {
                let mut acc = self.expr_lsim(src, &xs[0])?;
                for i in 1..xs.len() {
                    let a = SqExpr::v(xs[..i].to_vec());
                    let (_, _, left_a, _) = self.sides_lsim(src, &a)?;
                    let (_, _, _, right_b) = self.sides_lsim(src, &xs[i])?;
                    let b = self.expr_lsim(src, &xs[i])?;
                    acc = SqExpr::v(vec![
                        SqExpr::h(vec![acc, SqExpr::IdV(right_b)]),
                        SqExpr::h(vec![SqExpr::IdV(left_a), b]),
                    ]);
                }
                acc
            }
        })
    }
}

fn invertible(flag: SqFlag) -> SqFlag {
    match flag {
        SqFlag::Plain => SqFlag::Plain,
        _ => SqFlag::VertInvertible,
    }
}

/// Valuations in `ℍ^≃𝒜`, as a 2-category presentation: each vertical
/// generator becomes an adjoint horizontal one (appended after the
/// horizontal generators) and a square `α` becomes a 2-cell
/// `top;right ⇒ left;bottom`.
pub fn to_lsim(p: &DblPresentation) -> Result<Translation> {
    let nh = p.h_gens.len();
    let mut q = DblPresentation {
        objects: p.objects.clone(),
        h_gens: p.h_gens.clone(),
        ..Default::default()
    };
    for g in &p.v_gens {
        q.add_h(g.name.clone(), g.src, g.tgt, true);
    }
    let t = Translation {
        pres: TwoCatPresentation::default(),
        objects: (0..p.objects.len()).collect(),
        vertical: (0..p.v_gens.len()).map(|j| Some(nh + j)).collect(),
        weak: true,
    };
    for g in &p.sq_gens {
        let top = t.h(&g.top).then(&t.v(&g.right));
        let bottom = t.v(&g.left).then(&t.h(&g.bottom));
        q.add_cell(g.name.clone(), top, bottom, invertible(g.flag));
    }
    for [l, r] in &p.relations {
        q.relate(t.expr_lsim(p, l)?, t.expr_lsim(p, r)?);
    }
    q.validate()?;
    Ok(Translation {
        pres: TwoCatPresentation(q),
        ..t
    })
}

/// Valuations in `ℍ𝒜`, as a 2-category presentation: objects joined by a
/// vertical generator are identified, vertical generators disappear and
/// squares become 2-cells `top ⇒ bottom`.
pub fn to_l(p: &DblPresentation) -> Result<Translation> {
    let n = p.objects.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for g in &p.v_gens {
        let (a, b) = (find(&mut parent, g.src), find(&mut parent, g.tgt));
        parent[a.max(b)] = a.min(b);
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    let mut q = DblPresentation::default();
    let mut class = HashMap::new();
    for (x, &r) in roots.iter().enumerate() {
        if x == r {
            class.insert(r, q.add_object(p.objects[x].clone()));
        }
    }
    let objects: Vec<usize> = roots.iter().map(|r| class[r]).collect();
    for g in &p.h_gens {
        q.add_h(g.name.clone(), objects[g.src], objects[g.tgt], g.adjoint);
    }
    let t = Translation {
        pres: TwoCatPresentation::default(),
        objects,
        vertical: vec![None; p.v_gens.len()],
        weak: false,
    };
    for g in &p.sq_gens {
        q.add_cell(
            g.name.clone(),
            t.h(&g.top),
            t.h(&g.bottom),
            invertible(g.flag),
        );
    }
    for [l, r] in &p.relations {
        q.relate(t.expr_l(l)?, t.expr_l(r)?);
    }
    q.validate()?;
    Ok(Translation {
        pres: TwoCatPresentation(q),
        ..t
    })
}

/// The double presentation of a nerve level together with both
/// 2-categorical translations and the comparison maps `π: L^≃ → L` and,
/// when the vertical size is at most one, a section `ι: L → L^≃`.
#[derive(Debug, Clone)]
pub struct LxPresentations {
    pub x: DblPresentation,
    pub l: Translation,
    pub lsim: Translation,
    pub pi: PresMorphism,
    pub iota: Option<PresMorphism>,
}

pub fn lx_presentations(m: usize, k: usize, n: usize) -> Result<LxPresentations> {
    let x = x_presentation(m, k, n)?;
    let l = to_l(&x)?;
    let lsim = to_lsim(&x)?;
    let pi = pi_map(&x, &l, &lsim);
    pi.check(&lsim.pres.0, &l.pres.0)?;
    let iota = if k <= 1 {
        let iota = iota_map(&x, &l)?;
        iota.check(&l.pres.0, &lsim.pres.0)?;
        Some(iota)
    } else {
        None
    };
    Ok(LxPresentations {
        x,
        l,
        lsim,
        pi,
        iota,
    })
}

fn pi_map(x: &DblPresentation, l: &Translation, lsim: &Translation) -> PresMorphism {
    let nh = x.h_gens.len();
    let q = &lsim.pres.0;
    let h = q
        .h_gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let start = l.objects[g.src];
            if i < nh {
                HPath {
                    start,
                    letters: vec![Letter::Gen(i)],
                }
            } else {
                HPath::empty(start)
            }
        })
        .collect();
    PresMorphism {
        objects: l.objects.clone(),
        h,
        v: Vec::new(),
        sq: (0..q.sq_gens.len()).map(SqExpr::Gen).collect(),
    }
}

/// Conjugation by the vertical generators `gₒ: (x,0,z) → o`.
struct Conj<'a> {
    x: &'a DblPresentation,
    /// Index into the objects of the vertical base point of each object.
    base: Vec<usize>,
    /// The adjoint generator `gₒ`, if `o` is not a base point.
    g: Vec<Option<usize>>,
}

impl Conj<'_> {
    fn g_path(&self, o: usize) -> HPath {
        HPath {
            start: self.base[o],
            letters: self.g[o].map(Letter::Gen).into_iter().collect(),
        }
    }
    fn g_rev(&self, o: usize) -> HPath {
        HPath {
            start: o,
            letters: self.g[o].map(Letter::Partner).into_iter().collect(),
        }
    }
    fn ends(&self, p: &HPath) -> Vec<usize> {
        let mut at = vec![p.start];
        for &l in &p.letters {
            let g = match l {
                Letter::Gen(i) | Letter::Partner(i) => &self.x.h_gens[i],
            };
            at.push(if matches!(l, Letter::Gen(_)) {
                g.tgt
            } else {
                g.src
            });
        }
        at
    }
    /// `ι(q) ⇒ gₒ;q;gₒ'ᴾ`, cancelling the interior `gᴾ;g` pairs.
    fn collapse(&self, q: &HPath) -> SqExpr {
        let obj = self.ends(q);
        if q.letters.is_empty() {
            return match self.g[q.start] {
                Some(i) => SqExpr::Unit(i),
                None => SqExpr::IdV(HPath::empty(q.start)),
            };
        }
        let mut parts = vec![SqExpr::IdV(self.g_path(q.start))];
        for (i, &l) in q.letters.iter().enumerate() {
            parts.push(SqExpr::IdV(HPath {
                start: obj[i],
                letters: vec![l],
            }));
            if i + 1 < q.letters.len() {
                if let Some(j) = self.g[obj[i + 1]] {
                    parts.push(SqExpr::Counit(j));
                }
            }
        }
        parts.push(SqExpr::IdV(self.g_rev(*obj.last().unwrap())));
        SqExpr::h(parts)
    }
}

fn iota_map(x: &DblPresentation, l: &Translation) -> Result<PresMorphism> {
    let nh = x.h_gens.len();
    let [_, k, _] = dims_of(x);
    debug_assert!(k <= 1);
    let mut base = Vec::new();
    let mut g = Vec::new();
    for name in &x.objects {
        let [cx, cy, cz] = parse_name(name);
        let b = x.object_index(&cell_name([cx, Pt(0), cz])).unwrap();
        base.push(b);
        g.push(match cy {
            Pt(0) => None,
            Pt(y) => Some(nh + x.v_index(&cell_name([cx, Edge(0, y), cz])).unwrap()),
            _ => unreachable!(),
        });
    }
    let conj = Conj { x, base, g };
    let q = &l.pres.0;
    let mut rep = vec![usize::MAX; q.objects.len()];
    for (o, &c) in l.objects.iter().enumerate() {
        if rep[c] == usize::MAX {
            rep[c] = o;
        }
    }
    let h: Vec<HPath> = x
        .h_gens
        .iter()
        .enumerate()
        .map(|(i, gen)| {
            let mut p = conj.g_path(gen.src);
            p.letters.push(Letter::Gen(i));
            p.letters.extend(conj.g_rev(gen.tgt).letters);
            p
        })
        .collect();
    let mut sq = Vec::new();
    for (i, s) in x.sq_gens.iter().enumerate() {
        let tl = s.top.start;
        let tr = s.right.start;
        let t_ext = conj.g_path(tl).then(&s.top);
        let mut steps = vec![conj.collapse(&s.top)];
        if let Some(&r) = s.right.letters.first() {
            steps.push(SqExpr::h(vec![
                SqExpr::IdV(t_ext),
                SqExpr::Unit(nh + r),
                SqExpr::IdV(conj.g_rev(tr)),
            ]));
        }
        let r_rev = HPath {
            start: x.v_end(&s.right)?,
            letters: s
                .right
                .letters
                .iter()
                .rev()
                .map(|&j| Letter::Partner(nh + j))
                .collect(),
        };
        steps.push(SqExpr::h(vec![
            SqExpr::IdV(conj.g_path(tl)),
            SqExpr::Gen(i),
            SqExpr::IdV(r_rev.then(&conj.g_rev(tr))),
        ]));
        steps.push(conj.collapse(&s.bottom).vinv());
        sq.push(SqExpr::v(steps));
    }
    Ok(PresMorphism {
        objects: rep,
        h,
        v: Vec::new(),
        sq,
    })
}

/// Whether `π ∘ ι` is the identity on generators, up to [`simplify`].
pub fn pi_iota_is_identity(lx: &LxPresentations) -> Result<bool> {
    let Some(iota) = &lx.iota else {
        return Ok(false);
    };
    let (l, lsim) = (&lx.l.pres.0, &lx.lsim.pres.0);
    for (i, g) in l.h_gens.iter().enumerate() {
        let img = lx.pi.map_h(lsim, &iota.h[i]);
        if img.letters != vec![Letter::Gen(i)] || img.start != g.src {
            return Ok(false);
        }
    }
    for i in 0..l.sq_gens.len() {
        let img = lx.pi.map_expr(lsim, l, &iota.sq[i])?;
        if simplify(&img) != SqExpr::Gen(i) {
            return Ok(false);
        }
    }
    Ok(iota
        .objects
        .iter()
        .enumerate()
        .all(|(c, &o)| lx.pi.objects[o] == c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{degeneracy, face};

    #[test]
    fn generator_counts() {
        let p = x_presentation(1, 1, 1).unwrap();
        assert_eq!(p.objects.len(), 8);
        assert_eq!((p.h_gens.len(), p.v_gens.len(), p.sq_gens.len()), (8, 4, 6));
        assert_eq!(p.relations.len(), 1);
        let p = x_presentation(2, 2, 2).unwrap();
        p.validate().unwrap();
        assert!(x_presentation(3, 0, 0).is_err());
    }

    #[test]
    fn every_level_is_well_formed() {
        for m in 0..=2 {
            for k in 0..=2 {
                for n in 0..=2 {
                    let lx = lx_presentations(m, k, n).unwrap();
                    lx.x.validate().unwrap();
                    assert_eq!(lx.iota.is_some(), k <= 1);
                    if k <= 1 {
                        assert!(pi_iota_is_identity(&lx).unwrap(), "({m},{k},{n})");
                    }
                }
            }
        }
    }

    #[test]
    fn actions_are_maps_of_presentations() {
        for axis in Axis::ALL {
            for r in 1..=2 {
                for i in 0..=r {
                    x_action(axis, &face(r, i), [1, 1, 1]).unwrap();
                }
                for i in 0..r {
                    x_action(axis, &degeneracy(r - 1, i), [1, 1, 1]).unwrap();
                }
            }
        }
    }
}
