//! Trivial fibrations checked directly, and the right lifting property
//! against maps of presentations checked by enumeration.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{Direction, DoubleFunctor, FiniteDoubleCategory};
use crate::error::Result;
use crate::present::{apply_functor, enumerate, DblPresentation, PresMorphism, SqExpr, Valuation};
use crate::shapes::{inclusion_by_name, shape_2cat, shape_dbl, Shape2, ShapeDbl};
use crate::two::{FiniteTwoCategory, TwoFunctor};
use crate::Verdict;

/// A map of presentations `source → target`.
#[derive(Debug, Clone)]
pub struct Cofibration {
    pub name: String,
    pub source: DblPresentation,
    pub target: DblPresentation,
    pub map: PresMorphism,
}

impl Cofibration {
    fn inclusion(name: &str, source: DblPresentation, target: DblPresentation) -> Self {
        let map = inclusion_by_name(&source, &target);
        Cofibration {
            name: name.into(),
            source,
            target,
            map,
        }
    }

    /// The identity of a presentation.
    pub fn identity(p: &DblPresentation) -> Self {
        Cofibration {
            name: "id".into(),
            source: p.clone(),
            target: p.clone(),
            map: PresMorphism::identity(p),
        }
    }
}

/// The named generating sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CofibSet {
    /// `I₁..I₅` for double categories.
    I,
    /// Generating cofibrations of 2-categories.
    I2,
    /// Generating trivial cofibrations of 2-categories.
    J2,
}

impl std::str::FromStr for CofibSet {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I" => Ok(CofibSet::I),
            "I2" => Ok(CofibSet::I2),
            "J2" => Ok(CofibSet::J2),
            other => Err(format!("unknown set `{other}` (I, I2, J2)")),
        }
    }
}

impl CofibSet {
    pub fn members(self) -> Vec<Cofibration> {
        match self {
            CofibSet::I => gen_cofibs_dblcat(),
            CofibSet::I2 => gen_cofibs_2cat(),
            CofibSet::J2 => gen_trivial_cofibs_2cat(),
        }
    }
}

/// `∅ → [0]`, endpoints `→ ℍ[1]`, endpoints `→ 𝕍[1]`, `δ𝕊 → 𝕊`, `𝕊₂ → 𝕊`.
pub fn gen_cofibs_dblcat() -> Vec<Cofibration> {
    let square = shape_dbl(ShapeDbl::Square);
    let pair = shape_dbl(ShapeDbl::SquarePair);
    // Both parallel squares go to the one square.
    let mut fold = inclusion_by_name(&shape_dbl(ShapeDbl::SquareBoundary), &square);
    fold.sq = vec![SqExpr::Gen(0), SqExpr::Gen(0)];
    vec![
        Cofibration::inclusion("I1", shape_dbl(ShapeDbl::Empty), shape_dbl(ShapeDbl::Point)),
        Cofibration::inclusion(
            "I2",
            shape_dbl(ShapeDbl::TwoPoints),
            shape_dbl(ShapeDbl::HArrow),
        ),
        Cofibration::inclusion(
            "I3",
            shape_dbl(ShapeDbl::TwoPoints),
            shape_dbl(ShapeDbl::VArrow),
        ),
        Cofibration::inclusion("I4", shape_dbl(ShapeDbl::SquareBoundary), square.clone()),
        Cofibration {
            name: "I5".into(),
            source: pair,
            target: square,
            map: fold,
        },
    ]
}

/// `∅ → [0]`, `[0] ⊔ [0] → [1]`, `δC → C`, `C₂ → C`.
pub fn gen_cofibs_2cat() -> Vec<Cofibration> {
    let s = |x| shape_2cat(x).0;
    let c = s(Shape2::C);
    let mut fold = inclusion_by_name(&s(Shape2::DeltaC), &c);
    fold.sq = vec![SqExpr::Gen(0), SqExpr::Gen(0)];
    vec![
        Cofibration::inclusion("empty->point", s(Shape2::Empty), s(Shape2::Point)),
        Cofibration::inclusion("endpoints->arrow", s(Shape2::TwoPoints), s(Shape2::Arrow)),
        Cofibration::inclusion("boundary->cell", s(Shape2::DeltaC), c.clone()),
        Cofibration {
            name: "pair->cell".into(),
            source: s(Shape2::C2),
            target: c,
            map: fold,
        },
    ]
}

/// `[0] → E_adj`, `[1] → C_inv`.
pub fn gen_trivial_cofibs_2cat() -> Vec<Cofibration> {
    let s = |x| shape_2cat(x).0;
    let mut arrow = inclusion_by_name(&s(Shape2::Arrow), &s(Shape2::CInv));
    arrow.sq = Vec::new();
    vec![
        Cofibration::inclusion(
            "point->adjoint-equivalence",
            s(Shape2::Point),
            s(Shape2::EAdj),
        ),
        Cofibration {
            name: "arrow->invertible-cell".into(),
            source: s(Shape2::Arrow),
            target: s(Shape2::CInv),
            map: arrow,
        },
    ]
}

impl DoubleFunctor {
    /// Surjective on objects, full on horizontal and vertical morphisms, fully
    /// faithful on squares.
    pub fn is_trivial_fibration(
        &self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
    ) -> Verdict {
        for y in 0..b.n_objects() {
            if !self.objects.contains(&y) {
                return Verdict::fail(format!("object `{}` is not in the image", b.object_name(y)));
            }
        }
        for x in 0..a.n_objects() {
            for x2 in 0..a.n_objects() {
                let (fx, fx2) = (self.objects[x], self.objects[x2]);
                for &g in b.h_hom(fx, fx2) {
                    if !a.h_hom(x, x2).iter().any(|&f| self.h[f] == g) {
                        return Verdict::fail(format!(
                            "horizontal `{}` is not hit from `{}` to `{}`",
                            b.h_name(g),
                            a.object_name(x),
                            a.object_name(x2)
                        ));
                    }
                }
                for &w in b.v_hom(fx, fx2) {
                    if !a.v_hom(x, x2).iter().any(|&u| self.v[u] == w) {
                        return Verdict::fail(format!(
                            "vertical `{}` is not hit from `{}` to `{}`",
                            b.v_name(w),
                            a.object_name(x),
                            a.object_name(x2)
                        ));
                    }
                }
            }
        }
        // Group the squares of `a` by boundary, then compare with `b`.
        let mut by_boundary: HashMap<[usize; 4], Vec<usize>> = HashMap::new();
        for s in 0..a.n_squares() {
            by_boundary.entry(a.boundary(s)).or_default().push(s);
        }
        for f in 0..a.n_h() {
            for f2 in 0..a.n_h() {
                for &u in a.v_hom(a.h_src(f), a.h_src(f2)) {
                    for &v in a.v_hom(a.h_tgt(f), a.h_tgt(f2)) {
                        let ours = by_boundary
                            .get(&[f, f2, u, v])
                            .map(Vec::as_slice)
                            .unwrap_or(&[]);
                        let images: Vec<usize> = ours.iter().map(|&s| self.squares[s]).collect();
                        let theirs = b.squares_with(self.h[f], self.h[f2], self.v[u], self.v[v]);
                        let mut uniq = images.clone();
                        uniq.sort_unstable();
                        uniq.dedup();
                        if uniq.len() != images.len() {
                            return Verdict::fail(format!(
                                "not faithful on squares over `{}`",
                                a.h_name(f)
                            ));
                        }
                        if uniq.len() != theirs.len() {
                            return Verdict::fail(format!(
                                "not full on squares over `{}`",
                                a.h_name(f)
                            ));
                        }
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// Every commutative square from `j` to this functor has a diagonal
    /// filler. Valuations of `j`'s source in `a` and target in `b` are paired
    /// when they agree in `b`; each pair must be hit by a valuation of the
    /// target in `a`.
    pub fn has_rlp(
        &self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
        j: &Cofibration,
        budget: u64,
    ) -> Result<Verdict> {
        let tops = enumerate(&j.source, a, budget)?;
        let bottoms = enumerate(&j.target, b, budget)?;
        let lifts = enumerate(&j.target, a, budget)?;
        let mut hit: HashSet<(Valuation, Valuation)> = HashSet::new();
        for l in &lifts {
            hit.insert((j.map.precompose(&j.source, a, l)?, apply_functor(self, l)));
        }
        let mut over: HashMap<Valuation, Vec<&Valuation>> = HashMap::new();
        for t in &tops {
            over.entry(apply_functor(self, t)).or_default().push(t);
        }
        for bot in &bottoms {
            let restricted = j.map.precompose(&j.source, b, bot)?;
            for &t in over.get(&restricted).map(Vec::as_slice).unwrap_or(&[]) {
                if !hit.contains(&(t.clone(), bot.clone())) {
                    return Ok(Verdict::fail(format!("no lift against `{}`", j.name)));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// RLP against every member of a set.
    pub fn has_rlp_set(
        &self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
        set: &[Cofibration],
        budget: u64,
    ) -> Result<Verdict> {
        for j in set {
            let v = self.has_rlp(a, b, j, budget)?;
            if !v.holds {
                return Ok(v);
            }
        }
        Ok(Verdict::pass())
    }
}

/// `ℍF: ℍ𝒜 → ℍℬ`.
pub fn horizontal_functor(f: &TwoFunctor) -> DoubleFunctor {
    DoubleFunctor {
        objects: f.objects.clone(),
        h: f.cells1.clone(),
        v: f.objects.clone(),
        squares: f.cells2.clone(),
    }
}

impl TwoFunctor {
    /// Surjective on objects, full on 1-cells, fully faithful on 2-cells.
    pub fn is_trivial_fibration(&self, a: &FiniteTwoCategory, b: &FiniteTwoCategory) -> Verdict {
        for y in 0..b.n_objects() {
            if !self.objects.contains(&y) {
                return Verdict::fail(format!("object `{}` is not in the image", b.object_name(y)));
            }
        }
        for x in 0..a.n_objects() {
            for x2 in 0..a.n_objects() {
                let ours = a.hom1(x, x2);
                for g in b.hom1(self.objects[x], self.objects[x2]) {
                    if !ours.iter().any(|&f| self.cells1[f] == g) {
                        return Verdict::fail(format!(
                            "1-cell `{}` is not hit from `{}` to `{}`",
                            b.c1_name(g),
                            a.object_name(x),
                            a.object_name(x2)
                        ));
                    }
                }
                for &f in &ours {
                    for &f2 in &ours {
                        let images: Vec<usize> =
                            a.hom2(f, f2).iter().map(|&c| self.cells2[c]).collect();
                        let mut uniq = images.clone();
                        uniq.sort_unstable();
                        uniq.dedup();
                        if uniq.len() != images.len() {
                            return Verdict::fail(format!(
                                "not faithful on 2-cells `{}` ⇒ `{}`",
                                a.c1_name(f),
                                a.c1_name(f2)
                            ));
                        }
                        if uniq.len() != b.hom2(self.cells1[f], self.cells1[f2]).len() {
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

    /// RLP against a map of 2-category presentations, through `ℍ`.
    pub fn has_rlp(
        &self,
        a: &FiniteTwoCategory,
        b: &FiniteTwoCategory,
        j: &Cofibration,
        budget: u64,
    ) -> Result<Verdict> {
        let (ha, hb) = (
            FiniteDoubleCategory::embed(a, Direction::Horizontal),
            FiniteDoubleCategory::embed(b, Direction::Horizontal),
        );
        horizontal_functor(self).has_rlp(&ha, &hb, j, budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbl::tests::free_square;
    use crate::shapes::{dbl_point, free_iso};

    const B: u64 = 1 << 20;

    #[test]
    fn generating_sets_are_well_formed() {
        for set in [CofibSet::I, CofibSet::I2, CofibSet::J2] {
            for j in set.members() {
                j.source.validate().unwrap();
                j.target.validate().unwrap();
                j.map.check(&j.source, &j.target).unwrap();
            }
        }
        let i = gen_cofibs_dblcat();
        assert_eq!(i[3].source.objects.len(), 4);
        assert_eq!(
            (
                i[3].source.h_gens.len(),
                i[3].source.v_gens.len(),
                i[3].source.sq_gens.len()
            ),
            (2, 2, 0)
        );
        assert!(i[0].source.objects.is_empty());
    }

    #[test]
    fn square_to_point() {
        let s = free_square();
        let p = dbl_point();
        let f = DoubleFunctor::to_point(&s, &p);
        assert!(!f.is_trivial_fibration(&s, &p).holds);
        let i2 = &gen_cofibs_dblcat()[1];
        assert!(!f.has_rlp(&s, &p, i2, B).unwrap().holds);
        let id = DoubleFunctor::identity(&s);
        assert!(id.is_trivial_fibration(&s, &s).holds);
        assert!(
            id.has_rlp_set(&s, &s, &gen_cofibs_dblcat(), B)
                .unwrap()
                .holds
        );
        assert!(
            f.has_rlp(
                &s,
                &p,
                &Cofibration::identity(&shape_dbl(ShapeDbl::Square)),
                B
            )
            .unwrap()
            .holds
        );
    }

    #[test]
    fn iso_to_point_is_a_trivial_fibration_of_2_categories() {
        let i = free_iso();
        let pt = crate::shapes::chain2(0);
        let f = TwoFunctor {
            objects: vec![0; 2],
            cells1: vec![0; i.n_cells1()],
            cells2: vec![0; i.n_cells2()],
        };
        f.check(&i, &pt).unwrap();
        let v = f.is_trivial_fibration(&i, &pt);
        assert!(v.holds, "{v:?}");
        for j in gen_cofibs_2cat() {
            assert!(f.has_rlp(&i, &pt, &j, B).unwrap().holds, "{}", j.name);
        }
    }
}
