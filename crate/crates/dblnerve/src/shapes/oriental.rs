//! Truncated orientals, materialized and presented.

use serde::{Deserialize, Serialize};

use crate::cat::{identity_name, RawArrow};
use crate::present::{
    DblPresentation, HPath, Letter, PresMorphism, SqExpr, SqFlag, TwoCatPresentation,
};
use crate::two::{FiniteTwoCategory, RawTwoCategory, TwoFunctor};

/// Digits of a subset of `{0..n}`, in order.
pub fn subset_name(s: &[usize]) -> String {
    s.iter().map(|x| x.to_string()).collect()
}

fn c1_name(s: &[usize]) -> String {
    if s.len() == 1 {
        identity_name(&s[0].to_string())
    } else {
        subset_name(s)
    }
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

/// Subsets of `[x, y]` containing both ends.
fn hom_sets(x: usize, y: usize) -> Vec<Vec<usize>> {
    if x == y {
        return vec![vec![x]];
    }
    let inner: Vec<usize> = (x + 1..y).collect();
    (0..1usize << inner.len())
        .map(|mask| {
            let mut s = vec![x];
            s.extend(
                inner
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v),
            );
            s.push(y);
            s
        })
        .collect()
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn build(n: usize, inverted: bool) -> FiniteTwoCategory {
    let sep = if inverted { '~' } else { '<' };
    let cell = |i: &[usize], j: &[usize]| -> String {
        if i == j {
            identity_name(&c1_name(i))
        } else {
            format!("{}{sep}{}", subset_name(i), subset_name(j))
        }
    };
    let related = |i: &[usize], j: &[usize]| i != j && (inverted || is_subset(i, j));
    let mut raw = RawTwoCategory {
        objects: (0..=n).map(|x| x.to_string()).collect(),
        ..Default::default()
    };
    let mut homs = Vec::new();
    for x in 0..=n {
        for y in x..=n {
            homs.push(((x, y), hom_sets(x, y)));
        }
    }
    for ((x, y), sets) in &homs {
        if x == y {
            continue;
        }
        for s in sets {
            raw.cells1
                .push(RawArrow::new(subset_name(s), x.to_string(), y.to_string()));
        }
        for i in sets {
            for j in sets {
                if related(i, j) {
                    raw.cells2
                        .push(RawArrow::new(cell(i, j), subset_name(i), subset_name(j)));
                }
            }
        }
        for i in sets {
            for j in sets {
                for k in sets {
                    if related(i, j) && related(j, k) {
                        raw.vcompose.push([cell(i, j), cell(j, k), cell(i, k)]);
                    }
                }
            }
        }
    }
    for ((x, y), left) in &homs {
        for ((y2, z), right) in &homs {
            if y != y2 || (x == y && y == z) {
                continue;
            }
            for i in left {
                for k in right {
                    if x != y && y != z {
                        raw.compose1.push([
                            subset_name(i),
                            subset_name(k),
                            subset_name(&union(i, k)),
                        ]);
                    }
                    for j in left {
                        if i != j && !related(i, j) {
                            continue;
                        }
                        for l in right {
                            if k != l && !related(k, l) {
                                continue;
                            }
                            let both_id = i == j && k == l;
                            let unit = (x == y && i == j) || (y == z && k == l);
                            if both_id || unit {
                                continue;
                            }
                            raw.hcompose.push([
                                cell(i, j),
                                cell(k, l),
                                cell(&union(i, k), &union(j, l)),
                            ]);
                        }
                    }
                }
            }
        }
    }
    FiniteTwoCategory::validate(&raw).expect("orientals are valid 2-categories")
}

/// `O₂(n)`: hom-posets of endpoint-containing subsets, composition by union,
/// a 2-cell `I<J` whenever `I ⊊ J`.
pub fn oriental(n: usize) -> FiniteTwoCategory {
    build(n, false)
}

/// `Õ₂(n)`: the same 1-cells with indiscrete hom-groupoids, 2-cells `I~J`.
pub fn oriental_inv(n: usize) -> FiniteTwoCategory {
    build(n, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientalFamily {
    Plain,
    Inverted,
    Adjoint,
}

impl std::str::FromStr for OrientalFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(OrientalFamily::Plain),
            "inverted" => Ok(OrientalFamily::Inverted),
            "adjoint" => Ok(OrientalFamily::Adjoint),
            other => Err(format!("unknown oriental family `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Full,
    Boundary,
    Horn(usize),
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(Variant::Full),
            "boundary" => Ok(Variant::Boundary),
            _ => s
                .strip_prefix("horn")
                .and_then(|t| t.trim_start_matches(['-', ':']).parse().ok())
                .map(Variant::Horn)
                .ok_or_else(|| format!("unknown variant `{s}` (full, boundary, horn-T)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientalFamilySpec {
    pub family: OrientalFamily,
    pub n: usize,
    pub variant: Variant,
}

fn edge_name(x: usize, y: usize) -> String {
    format!("f{x}{y}")
}

fn triangle_name(x: usize, y: usize, z: usize) -> String {
    format!("t{x}{y}{z}")
}

/// Generators `fxy` for `x < y`, 2-cells `txyz: fxz ⇒ fxy;fyz`, and for
/// every four vertices the equality of the two pastings `fxw ⇒ fxy;fyz;fzw`.
pub fn oriental_presentation(family: OrientalFamily, n: usize) -> TwoCatPresentation {
    let mut p = DblPresentation::default();
    for x in 0..=n {
        p.add_object(x.to_string());
    }
    let adjoint = family == OrientalFamily::Adjoint;
    for x in 0..=n {
        for y in x + 1..=n {
            p.add_h(edge_name(x, y), x, y, adjoint);
        }
    }
    let flag = if family == OrientalFamily::Plain {
        SqFlag::Plain
    } else {
        SqFlag::VertInvertible
    };
    let f =
        |p: &DblPresentation, x: usize, y: usize| Letter::Gen(p.h_index(&edge_name(x, y)).unwrap());
    for x in 0..=n {
        for y in x + 1..=n {
            for z in y + 1..=n {
                let top = p.hp(&[f(&p, x, z)]);
                let bottom = p.hp(&[f(&p, x, y), f(&p, y, z)]);
                p.add_cell(triangle_name(x, y, z), top, bottom, flag);
            }
        }
    }
    let t = |p: &DblPresentation, x: usize, y: usize, z: usize| {
        SqExpr::Gen(p.sq_index(&triangle_name(x, y, z)).unwrap())
    };
    for x in 0..=n {
        for y in x + 1..=n {
            for z in y + 1..=n {
                for w in z + 1..=n {
                    let lhs = SqExpr::v(vec![
                        t(&p, x, y, w),
                        SqExpr::h(vec![SqExpr::IdV(p.hp(&[f(&p, x, y)])), t(&p, y, z, w)]),
                    ]);
                    let rhs = SqExpr::v(vec![
                        t(&p, x, z, w),
                        SqExpr::h(vec![t(&p, x, y, z), SqExpr::IdV(p.hp(&[f(&p, z, w)]))]),
                    ]);
                    p.relate(lhs, rhs);
                }
            }
        }
    }
    TwoCatPresentation(p)
}

/// `Ō₂(n)`.
pub fn oriental_adj_presentation(n: usize) -> TwoCatPresentation {
    oriental_presentation(OrientalFamily::Adjoint, n)
}

/// Vertex support of a generator name like `f02` or `t013`.
fn support(name: &str) -> Vec<usize> {
    name[1..]
        .chars()
        .map(|c| c.to_digit(10).unwrap() as usize)
        .collect()
}

/// The sub-presentation of a boundary or horn, with its inclusion into the
/// full shape. It is the union of the faces `[n] \ {i}`, with `i` ranging
/// over all vertices for the boundary and over `i ≠ t` for the horn; from
/// dimension four on it is everything.
pub fn oriental_variant(
    spec: OrientalFamilySpec,
) -> crate::Result<(TwoCatPresentation, PresMorphism)> {
    let full = oriental_presentation(spec.family, spec.n);
    let n = spec.n;
    let faces: Vec<usize> = match spec.variant {
        Variant::Full => return Ok((full.clone(), PresMorphism::identity(&full.0))),
        Variant::Boundary => (0..=n).collect(),
        Variant::Horn(t) => {
            if n == 0 || t > n {
                return Err(crate::Error::RangeExceeded(format!(
                    "horn ({n}, {t}) needs 1 ≤ n and t ≤ n"
                )));
            }
            (0..=n).filter(|&i| i != t).collect()
        }
    };
    if n >= 4 {
        return Ok((full.clone(), PresMorphism::identity(&full.0)));
    }
    let keep = |s: &[usize]| faces.iter().any(|i| !s.contains(i));
    let src = &full.0;
    let mut sub = DblPresentation::default();
    for (x, name) in src.objects.iter().enumerate() {
        if keep(&[x]) {
            sub.add_object(name.clone());
        }
    }
    let obj = |sub: &DblPresentation, x: usize| sub.object_index(&x.to_string()).unwrap();
    for g in &src.h_gens {
        if keep(&support(&g.name)) {
            sub.add_h(
                g.name.clone(),
                obj(&sub, g.src),
                obj(&sub, g.tgt),
                g.adjoint,
            );
        }
    }
    let relabel = |sub: &DblPresentation, p: &HPath| HPath {
        start: obj(sub, p.start),
        letters: p
            .letters
            .iter()
            .map(|l| match *l {
                Letter::Gen(i) => Letter::Gen(sub.h_index(&src.h_gens[i].name).unwrap()),
                Letter::Partner(i) => Letter::Partner(sub.h_index(&src.h_gens[i].name).unwrap()),
            })
            .collect(),
    };
    for g in &src.sq_gens {
        if keep(&support(&g.name)) {
            let (top, bottom) = (relabel(&sub, &g.top), relabel(&sub, &g.bottom));
            sub.add_cell(g.name.clone(), top, bottom, g.flag);
        }
    }
    // Relations live on four vertices and so only in dimension ≥ 4 faces.
    let incl = crate::shapes::inclusion_by_name(&sub, src);
    Ok((TwoCatPresentation(sub), incl))
}

/// A monotone map `{0..dom} → {0..cod}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monotone {
    pub dom: usize,
    pub cod: usize,
    pub map: Vec<usize>,
}

impl Monotone {
    pub fn identity(n: usize) -> Self {
        Monotone {
            dom: n,
            cod: n,
            map: (0..=n).collect(),
        }
    }
    /// `self` then `other`.
    pub fn then(&self, other: &Monotone) -> Monotone {
        assert_eq!(self.cod, other.dom);
        Monotone {
            dom: self.dom,
            cod: other.cod,
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }
    pub fn apply_set(&self, s: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = s.iter().map(|&x| self.map[x]).collect();
        out.dedup();
        out
    }
}

/// The coface `dⁱ: [n-1] → [n]` skipping `i`.
pub fn face(n: usize, i: usize) -> Monotone {
    assert!(n >= 1 && i <= n);
    Monotone {
        dom: n - 1,
        cod: n,
        map: (0..n).map(|j| if j < i { j } else { j + 1 }).collect(),
    }
}

/// The codegeneracy `sⁱ: [n+1] → [n]` hitting `i` twice.
pub fn degeneracy(n: usize, i: usize) -> Monotone {
    assert!(i <= n);
    Monotone {
        dom: n + 1,
        cod: n,
        map: (0..=n + 1)
            .map(|j| if j <= i { j } else { j - 1 })
            .collect(),
    }
}

/// The map of presentations `O(dom) → O(cod)` induced by `alpha`.
pub fn cosimplicial_action(family: OrientalFamily, alpha: &Monotone) -> PresMorphism {
    let src = oriental_presentation(family, alpha.dom).0;
    let tgt = oriental_presentation(family, alpha.cod).0;
    let edge = |x: usize, y: usize| -> HPath {
        let (a, b) = (alpha.map[x], alpha.map[y]);
        if a == b {
            HPath::empty(a)
        } else {
            HPath {
                start: a,
                letters: vec![Letter::Gen(tgt.h_index(&edge_name(a, b)).unwrap())],
            }
        }
    };
    let h = src
        .h_gens
        .iter()
        .map(|g| {
            let s = support(&g.name);
            edge(s[0], s[1])
        })
        .collect();
    let sq = src
        .sq_gens
        .iter()
        .map(|g| {
            let s = support(&g.name);
            let img: Vec<usize> = s.iter().map(|&x| alpha.map[x]).collect();
            if img[0] < img[1] && img[1] < img[2] {
                SqExpr::Gen(
                    tgt.sq_index(&triangle_name(img[0], img[1], img[2]))
                        .unwrap(),
                )
            } else {
                SqExpr::IdV(edge(s[0], s[2]))
            }
        })
        .collect();
    PresMorphism {
        objects: alpha.map.clone(),
        h,
        v: Vec::new(),
        sq,
    }
}

/// The 2-functor `O₂(dom) → O₂(cod)` (or between `Õ₂`) sending `I` to `α(I)`.
pub fn oriental_action(
    inverted: bool,
    alpha: &Monotone,
) -> (FiniteTwoCategory, FiniteTwoCategory, TwoFunctor) {
    let src = build(alpha.dom, inverted);
    let tgt = build(alpha.cod, inverted);
    let parse = |name: &str| -> Vec<usize> {
        match name.strip_prefix("id[").and_then(|r| r.strip_suffix(']')) {
            Some(o) => vec![o.parse().unwrap()],
            None => support(&format!("_{name}")),
        }
    };
    let cells1: Vec<usize> = (0..src.n_cells1())
        .map(|f| {
            tgt.cell1(&c1_name(&alpha.apply_set(&parse(src.c1_name(f)))))
                .unwrap()
        })
        .collect();
    let cells2 = (0..src.n_cells2())
        .map(|a| {
            let (i, j) = (cells1[src.src2(a)], cells1[src.tgt2(a)]);
            if i == j {
                tgt.id2(i)
            } else {
                let sep = if inverted { '~' } else { '<' };
                let name = format!("{}{sep}{}", tgt.c1_name(i), tgt.c1_name(j));
                tgt.cell2(&name).unwrap()
            }
        })
        .collect();
    let f = TwoFunctor {
        objects: alpha.map.clone(),
        cells1,
        cells2,
    };
    (src, tgt, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::{Direction, FiniteDoubleCategory};
    use crate::present::enumerate;
    use crate::shapes::{chain2, free_iso};

    #[test]
    fn hom_counts() {
        for n in 0..=5 {
            let o = oriental(n);
            for x in 0..=n {
                for y in x + 1..=n {
                    assert_eq!(o.hom1(x, y).len(), 1 << (y - x - 1));
                }
            }
        }
        let o2 = oriental(2);
        let h = o2.hom(0, 2);
        assert_eq!(h.n_objects(), 2);
        assert_eq!(h.n_morphisms(), 3);
        assert_eq!(oriental_inv(2).hom(0, 2).n_morphisms(), 4);
        assert_eq!(oriental(3).hom1(0, 3).len(), 4);
    }

    #[test]
    fn low_orientals() {
        assert_eq!(oriental(1), chain2(1));
        assert_eq!(oriental_inv(1), chain2(1));
        assert_eq!(oriental(0).n_cells2(), 1);
    }

    #[test]
    fn inverted_presentation_into_iso() {
        let h = FiniteDoubleCategory::embed(&free_iso(), Direction::Horizontal);
        let p = oriental_presentation(OrientalFamily::Inverted, 2);
        assert_eq!(enumerate(&p.0, &h, 1 << 20).unwrap().len(), 8);
        let p = oriental_adj_presentation(2);
        assert_eq!(enumerate(&p.0, &h, 1 << 20).unwrap().len(), 8);
    }

    #[test]
    fn variants() {
        let spec = |variant, n| OrientalFamilySpec {
            family: OrientalFamily::Plain,
            n,
            variant,
        };
        let (b2, _) = oriental_variant(spec(Variant::Boundary, 2)).unwrap();
        assert_eq!((b2.0.h_gens.len(), b2.0.sq_gens.len()), (3, 0));
        let (l1, _) = oriental_variant(spec(Variant::Horn(1), 2)).unwrap();
        assert_eq!(
            l1.0.h_gens
                .iter()
                .map(|g| g.name.as_str())
                .collect::<Vec<_>>(),
            ["f01", "f12"]
        );
        let (b3, _) = oriental_variant(spec(Variant::Boundary, 3)).unwrap();
        assert_eq!((b3.0.sq_gens.len(), b3.0.relations.len()), (4, 0));
        let (h3, _) = oriental_variant(spec(Variant::Horn(0), 3)).unwrap();
        assert!(h3.0.sq_index("t123").is_none());
        assert_eq!(h3.0.sq_gens.len(), 3);
        let (b4, _) = oriental_variant(spec(Variant::Boundary, 4)).unwrap();
        assert_eq!(b4, oriental_presentation(OrientalFamily::Plain, 4));
        let (b0, _) = oriental_variant(spec(Variant::Boundary, 0)).unwrap();
        assert!(b0.0.objects.is_empty());
    }

    #[test]
    fn faces_and_degeneracies() {
        let d0 = cosimplicial_action(OrientalFamily::Plain, &face(2, 0));
        let tgt = oriental_presentation(OrientalFamily::Plain, 2).0;
        assert_eq!(
            d0.h[0].letters,
            vec![Letter::Gen(tgt.h_index("f12").unwrap())]
        );
        let s0 = cosimplicial_action(OrientalFamily::Plain, &degeneracy(0, 0));
        assert!(s0.h[0].letters.is_empty());
        let (a, b, f) = oriental_action(false, &face(2, 1));
        f.check(&a, &b).unwrap();
        let (a, b, f) = oriental_action(true, &degeneracy(2, 1));
        f.check(&a, &b).unwrap();
    }
}
