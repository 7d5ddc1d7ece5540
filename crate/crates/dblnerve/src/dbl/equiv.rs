//! Horizontal equivalences, weakly horizontally invertible squares and the
//! invariance and biequivalence checks built on them.

use std::sync::OnceLock;

use serde::Serialize;

use super::{DoubleFunctor, FiniteDoubleCategory};
use crate::error::{Error, Result};
use crate::Verdict;

/// `(f, g, η, ε)` with `η: id ⇒ f;g` and `ε: g;f ⇒ id` vertically invertible
/// squares with trivial vertical boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HorizontalEquivalence {
    pub f: usize,
    pub g: usize,
    pub eta: usize,
    pub eps: usize,
    pub adjoint: bool,
}

/// A square `alpha`, a weak inverse `beta`, and the equivalence data on the
/// top and bottom boundaries of `alpha`. `sides` holds the evaluated left and
/// right sides of both defining equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WhiWitness {
    pub alpha: usize,
    pub beta: usize,
    pub top: HorizontalEquivalence,
    pub bottom: HorizontalEquivalence,
    pub sides: [usize; 4],
}

pub(super) struct Analysis {
    pub vinv: Vec<Option<usize>>,
    pub hinv: Vec<Option<usize>>,
    pub hequiv: Vec<HorizontalEquivalence>,
    pub whi: OnceLock<Vec<Option<WhiWitness>>>,
}

impl Analysis {
    pub fn compute(d: &FiniteDoubleCategory) -> Self {
        let n = d.n_squares();
        let vinv: Vec<Option<usize>> = (0..n).map(|a| vertical_inverse(d, a)).collect();
        let hinv: Vec<Option<usize>> = (0..n).map(|a| horizontal_inverse(d, a)).collect();
        let mut hequiv = Vec::new();
        for f in 0..d.n_h() {
            let (a, b) = (d.h_src(f), d.h_tgt(f));
            for &g in d.h_hom(b, a) {
                let fg = d.comp_h(f, g).unwrap();
                let gf = d.comp_h(g, f).unwrap();
                for &eta in d.globular_squares(d.id_h(a), fg) {
                    if vinv[eta].is_none() {
                        continue;
                    }
                    for &eps in d.globular_squares(gf, d.id_h(b)) {
                        if vinv[eps].is_none() {
                            continue;
                        }
                        let adjoint = triangles(d, f, g, eta, eps);
                        hequiv.push(HorizontalEquivalence {
                            f,
                            g,
                            eta,
                            eps,
                            adjoint,
                        });
                    }
                }
            }
        }
        hequiv.sort();
        Analysis {
            vinv,
            hinv,
            hequiv,
            whi: OnceLock::new(),
        }
    }
}

fn vertical_inverse(d: &FiniteDoubleCategory, a: usize) -> Option<usize> {
    let (t, b) = (d.top[a], d.bottom[a]);
    (0..d.n_squares()).find(|&x| {
        d.top[x] == b
            && d.bottom[x] == t
            && d.vcomp_sq(a, x) == Some(d.e_sq(t))
            && d.vcomp_sq(x, a) == Some(d.e_sq(b))
    })
}

fn horizontal_inverse(d: &FiniteDoubleCategory, a: usize) -> Option<usize> {
    let (l, r) = (d.left[a], d.right[a]);
    (0..d.n_squares()).find(|&x| {
        d.left[x] == r
            && d.right[x] == l
            && d.hcomp_sq(a, x) == Some(d.id_sq(l))
            && d.hcomp_sq(x, a) == Some(d.id_sq(r))
    })
}

fn triangles(d: &FiniteDoubleCategory, f: usize, g: usize, eta: usize, eps: usize) -> bool {
    let (ef, eg) = (d.e_sq(f), d.e_sq(g));
    let one = d
        .hcomp_sq(eta, ef)
        .zip(d.hcomp_sq(ef, eps))
        .and_then(|(x, y)| d.vcomp_sq(x, y));
    let two = d
        .hcomp_sq(eg, eta)
        .zip(d.hcomp_sq(eps, eg))
        .and_then(|(x, y)| d.vcomp_sq(x, y));
    one == Some(ef) && two == Some(eg)
}

impl FiniteDoubleCategory {
    /// Every horizontal equivalence datum, sorted; `adjoint` marks the
    /// triangle identities.
    pub fn horizontal_equivalences(&self) -> &[HorizontalEquivalence] {
        &self.analysis().hequiv
    }

    pub fn equivalence_data_on(&self, f: usize) -> impl Iterator<Item = &HorizontalEquivalence> {
        self.horizontal_equivalences()
            .iter()
            .filter(move |e| e.f == f)
    }

    pub fn is_horizontal_equivalence(&self, f: usize) -> bool {
        self.equivalence_data_on(f).next().is_some()
    }

    pub fn horizontally_equivalent(&self, a: usize, b: usize) -> bool {
        self.h_hom(a, b)
            .iter()
            .any(|&f| self.is_horizontal_equivalence(f))
    }

    pub fn check_horizontal_equivalence(&self, e: &HorizontalEquivalence) -> Result<()> {
        let name = || self.h_name(e.f).to_string();
        let (a, b) = (self.h_src(e.f), self.h_tgt(e.f));
        if self.h_src(e.g) != b || self.h_tgt(e.g) != a {
            return Err(Error::NotAnEquivalence(name()));
        }
        let fg = self.comp_h(e.f, e.g).unwrap();
        let gf = self.comp_h(e.g, e.f).unwrap();
        let ok = self.globular_squares(a, fg).contains(&e.eta)
            && self.globular_squares(gf, b).contains(&e.eps)
            && self.is_vertically_invertible(e.eta)
            && self.is_vertically_invertible(e.eps);
        if !ok {
            return Err(Error::NotAnEquivalence(name()));
        }
        Ok(())
    }

    pub fn is_adjoint_data(&self, e: &HorizontalEquivalence) -> bool {
        self.check_horizontal_equivalence(e).is_ok() && triangles(self, e.f, e.g, e.eta, e.eps)
    }

    /// Keep `η` and replace `ε` so that the triangle identities hold.
    pub fn promote_data(&self, e: &HorizontalEquivalence) -> Result<HorizontalEquivalence> {
        self.check_horizontal_equivalence(e)?;
        let gf = self.comp_h(e.g, e.f).unwrap();
        let eps_inv = self.vertical_inverse(e.eps).unwrap();
        let eta_inv = self.vertical_inverse(e.eta).unwrap();
        let first = self.hcomp_sq(self.e_sq(gf), eps_inv).unwrap();
        let middle = self
            .hcomp_all(&[self.e_sq(e.g), eta_inv, self.e_sq(e.f)])
            .unwrap();
        let eps = self.vcomp_all(&[first, middle, e.eps]).unwrap();
        let out = HorizontalEquivalence {
            eps,
            adjoint: true,
            ..*e
        };
        if !triangles(self, out.f, out.g, out.eta, out.eps) {
            return Err(Error::NotAdjoint(self.h_name(e.f).to_string()));
        }
        Ok(out)
    }

    /// Both defining equations of a weak inverse, as `[lhs1, rhs1, lhs2, rhs2]`.
    pub fn whi_sides(
        &self,
        alpha: usize,
        beta: usize,
        top: &HorizontalEquivalence,
        bottom: &HorizontalEquivalence,
    ) -> Option<[usize; 4]> {
        let [f, f2, u, v] = self.boundary(alpha);
        if top.f != f || bottom.f != f2 || self.boundary(beta) != [top.g, bottom.g, v, u] {
            return None;
        }
        let lhs1 = self.vcomp_sq(top.eta, self.hcomp_sq(alpha, beta)?)?;
        let rhs1 = self.vcomp_sq(self.id_sq(u), bottom.eta)?;
        let lhs2 = self.vcomp_sq(top.eps, self.id_sq(v))?;
        let rhs2 = self.vcomp_sq(self.hcomp_sq(beta, alpha)?, bottom.eps)?;
        Some([lhs1, rhs1, lhs2, rhs2])
    }

    pub fn is_weak_inverse(
        &self,
        alpha: usize,
        beta: usize,
        top: &HorizontalEquivalence,
        bottom: &HorizontalEquivalence,
    ) -> bool {
        matches!(self.whi_sides(alpha, beta, top, bottom), Some([a, b, c, d]) if a == b && c == d)
    }

    fn search_witness(&self, alpha: usize) -> Option<WhiWitness> {
        let [f, f2, u, v] = self.boundary(alpha);
        for top in self.equivalence_data_on(f) {
            for bottom in self.equivalence_data_on(f2) {
                for &beta in self.squares_with(top.g, bottom.g, v, u) {
                    if let Some(sides @ [a, b, c, d]) = self.whi_sides(alpha, beta, top, bottom) {
                        if a == b && c == d {
                            return Some(WhiWitness {
                                alpha,
                                beta,
                                top: *top,
                                bottom: *bottom,
                                sides,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    /// The first witness in search order, if `alpha` is weakly horizontally
    /// invertible.
    pub fn whi_witness(&self, alpha: usize) -> Option<WhiWitness> {
        let all = self.analysis().whi.get_or_init(|| {
            (0..self.n_squares())
                .map(|a| self.search_witness(a))
                .collect()
        });
        all[alpha].clone()
    }

    pub fn is_whi(&self, alpha: usize) -> bool {
        self.whi_witness(alpha).is_some()
    }

    /// All weak inverses of `alpha` for fixed equivalence data, by search.
    pub fn weak_inverses_brute(
        &self,
        alpha: usize,
        top: &HorizontalEquivalence,
        bottom: &HorizontalEquivalence,
    ) -> Vec<usize> {
        let [_, _, u, v] = self.boundary(alpha);
        self.squares_with(top.g, bottom.g, v, u)
            .iter()
            .copied()
            .filter(|&beta| self.is_weak_inverse(alpha, beta, top, bottom))
            .collect()
    }

    /// The weak inverse for adjoint data, pasted from an arbitrary witness.
    pub fn weak_inverse(
        &self,
        alpha: usize,
        top: &HorizontalEquivalence,
        bottom: &HorizontalEquivalence,
    ) -> Result<usize> {
        for e in [top, bottom] {
            if !self.is_adjoint_data(e) {
                return Err(Error::NotAdjoint(self.h_name(e.f).to_string()));
            }
        }
        let w = self
            .whi_witness(alpha)
            .ok_or_else(|| Error::NotWhi(self.sq_name(alpha).to_string()))?;
        let v = self.right(alpha);
        let (mu, h) = (w.top.eta, w.top.g);
        let (mu2, h2) = (w.bottom.eta, w.bottom.g);
        let pieces = [
            self.hcomp_sq(self.e_sq(top.g), mu),
            self.hcomp_sq(top.eps, self.e_sq(h)),
            self.hcomp_sq(self.id_sq(v), w.beta),
            self.hcomp_sq(self.vertical_inverse(bottom.eps).unwrap(), self.e_sq(h2)),
            self.hcomp_sq(self.e_sq(bottom.g), self.vertical_inverse(mu2).unwrap()),
        ];
        let pieces: Option<Vec<usize>> = pieces.into_iter().collect();
        let beta = pieces.and_then(|p| self.vcomp_all(&p)).ok_or_else(|| {
            Error::DisagreementBug(format!("weak inverse pasting of `{}`", self.sq_name(alpha)))
        })?;
        if !self.is_weak_inverse(alpha, beta, top, bottom) {
            return Err(Error::DisagreementBug(format!(
                "pasted weak inverse of `{}` fails",
                self.sq_name(alpha)
            )));
        }
        Ok(beta)
    }

    /// For all horizontal equivalences `f: A → B`, `f': A' → B'` and vertical
    /// `v: B ⇸ B'`, some whi square has top `f`, bottom `f'` and right `v`.
    pub fn is_weakly_horizontally_invariant(&self) -> Verdict {
        let eqs: Vec<usize> = (0..self.n_h())
            .filter(|&f| self.is_horizontal_equivalence(f))
            .collect();
        for &f in &eqs {
            for &f2 in &eqs {
                for &v in self.v_hom(self.h_tgt(f), self.h_tgt(f2)) {
                    if self.whi_filler(f, f2, v).is_none() {
                        return Verdict::fail(format!(
                            "f = {}, f' = {}, v = {}",
                            self.h_name(f),
                            self.h_name(f2),
                            self.v_name(v)
                        ));
                    }
                }
            }
        }
        Verdict::pass()
    }

    pub fn whi_filler(&self, f: usize, f2: usize, v: usize) -> Option<usize> {
        self.v_hom(self.h_src(f), self.h_src(f2))
            .iter()
            .flat_map(|&u| self.squares_with(f, f2, u, v).iter().copied())
            .find(|&a| self.is_whi(a))
    }
}

impl DoubleFunctor {
    pub fn is_double_biequivalence(
        &self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
    ) -> Verdict {
        for y in 0..b.n_objects() {
            if !(0..a.n_objects()).any(|x| b.horizontally_equivalent(self.objects[x], y)) {
                return Verdict::fail(format!(
                    "object {} is not equivalent to an image",
                    b.object_name(y)
                ));
            }
        }
        for x in 0..a.n_objects() {
            for z in 0..a.n_objects() {
                for &g in b.h_hom(self.objects[x], self.objects[z]) {
                    let hit = a.h_hom(x, z).iter().any(|&f| {
                        b.globular_squares(self.h[f], g)
                            .iter()
                            .any(|&s| b.is_vertically_invertible(s))
                    });
                    if !hit {
                        return Verdict::fail(format!(
                            "horizontal {} from {} to {} is not reached",
                            b.h_name(g),
                            a.object_name(x),
                            a.object_name(z)
                        ));
                    }
                }
            }
        }
        for v in 0..b.n_v() {
            let hit = (0..a.n_v()).any(|u| {
                let fu = self.v[u];
                b.h_hom(b.v_src(fu), b.v_src(v)).iter().any(|&t| {
                    b.h_hom(b.v_tgt(fu), b.v_tgt(v))
                        .iter()
                        .any(|&bo| b.squares_with(t, bo, fu, v).iter().any(|&s| b.is_whi(s)))
                })
            });
            if !hit {
                return Verdict::fail(format!(
                    "vertical {} is not reached up to whi square",
                    b.v_name(v)
                ));
            }
        }
        if let Some(w) = self.square_faithfulness_failure(a, b) {
            return Verdict::fail(w);
        }
        Verdict::pass()
    }

    /// First boundary of `a` on which squares do not map bijectively.
    pub(crate) fn square_faithfulness_failure(
        &self,
        a: &FiniteDoubleCategory,
        b: &FiniteDoubleCategory,
    ) -> Option<String> {
        for u in 0..a.n_v() {
            for w in 0..a.n_v() {
                for &t in a.h_hom(a.v_src(u), a.v_src(w)) {
                    for &bo in a.h_hom(a.v_tgt(u), a.v_tgt(w)) {
                        let src = a.squares_with(t, bo, u, w);
                        let tgt = b.squares_with(self.h[t], self.h[bo], self.v[u], self.v[w]);
                        let mut images: Vec<usize> = src.iter().map(|&s| self.squares[s]).collect();
                        images.sort_unstable();
                        images.dedup();
                        if images.len() != src.len() || images.len() != tgt.len() {
                            return Some(format!(
                                "squares on ({}, {}, {}, {}) are not in bijection",
                                a.h_name(t),
                                a.h_name(bo),
                                a.v_name(u),
                                a.v_name(w)
                            ));
                        }
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::free_square;
    use super::super::*;
    use crate::cat::FiniteCategory;
    use crate::two::tests::iso;

    #[test]
    fn equivalences_in_h_iso_and_free_square() {
        let h = FiniteDoubleCategory::embed(&iso(), Direction::Horizontal);
        assert_eq!(h.horizontal_equivalences().len(), 4);
        assert!(h.horizontal_equivalences().iter().all(|e| e.adjoint));
        let s = free_square();
        assert_eq!(s.horizontal_equivalences().len(), 4);
        assert!(s.horizontal_equivalences().iter().all(|e| s.is_id_h(e.f)));
    }

    #[test]
    fn identity_squares_are_whi() {
        let s = free_square();
        let u = s.v("u").unwrap();
        let w = s.whi_witness(s.id_sq(u)).unwrap();
        assert_eq!(w.beta, s.id_sq(u));
        assert!(!s.is_whi(s.square("alpha").unwrap()));
    }

    #[test]
    fn invariance_verdicts() {
        let h = FiniteDoubleCategory::embed(&iso(), Direction::Horizontal);
        let v = h.is_weakly_horizontally_invariant();
        assert!(!v.holds);
        let hs = FiniteDoubleCategory::hsim_embed(&iso()).dbl;
        assert!(hs.is_weakly_horizontally_invariant().holds);
        let pt = FiniteDoubleCategory::embed(
            &crate::two::FiniteTwoCategory::locally_discrete(&FiniteCategory::chain(0)),
            Direction::Horizontal,
        );
        assert!(pt.is_weakly_horizontally_invariant().holds);
    }

    #[test]
    fn hsim_inclusion_is_double_biequivalence() {
        let (h, hs, inc) = hsim_inclusion(&iso());
        assert!(inc.is_double_biequivalence(&h, &hs.dbl).holds);
        assert!(
            DoubleFunctor::identity(&h)
                .is_double_biequivalence(&h, &h)
                .holds
        );
    }
}
