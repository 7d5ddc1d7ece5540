//! Finite 1-categories given by composition tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{index_names, lookup, Family, Table};

/// A named arrow between named endpoints, as written in interchange files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawArrow {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

impl RawArrow {
    pub fn new(name: impl Into<String>, src: impl Into<String>, tgt: impl Into<String>) -> Self {
        RawArrow {
            name: name.into(),
            src: src.into(),
            tgt: tgt.into(),
        }
    }
}

/// Category tables without identities. `compose` entries are `[f, g, h]`
/// meaning "f then g is h"; identities are named `id[A]` and are implicit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawCategory {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<RawArrow>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

pub fn identity_name(object: &str) -> String {
    format!("id[{object}]")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    names: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    is_identity: Vec<bool>,
    compose: Table,
    index: HashMap<String, usize>,
}

impl FiniteCategory {
    pub fn validate(raw: &RawCategory) -> Result<Self> {
        let object_index = index_names(&raw.objects)?;
        let mut names = Vec::new();
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        let mut identity = Vec::new();
        for (i, o) in raw.objects.iter().enumerate() {
            identity.push(names.len());
            names.push(identity_name(o));
            src.push(i);
            tgt.push(i);
        }
        for a in &raw.morphisms {
            names.push(a.name.clone());
            src.push(lookup(&object_index, "object", &a.src)?);
            tgt.push(lookup(&object_index, "object", &a.tgt)?);
        }
        let index = index_names(&names)?;
        let mut is_identity = vec![false; names.len()];
        for &i in &identity {
            is_identity[i] = true;
        }
        let mut given = Vec::new();
        for [f, g, h] in &raw.compose {
            given.push((
                lookup(&index, "morphism", f)?,
                lookup(&index, "morphism", g)?,
                lookup(&index, "morphism", h)?,
            ));
        }
        let fam = Family {
            names: &names,
            src: &src,
            tgt: &tgt,
            n_objects: raw.objects.len(),
        };
        let compose = fam.complete(&given, |a, b| {
            if is_identity[a] {
                Some(b)
            } else if is_identity[b] {
                Some(a)
            } else {
                None
            }
        })?;
        fam.check_units(&compose, &identity)?;
        fam.check_associative(&compose)?;
        Ok(FiniteCategory {
            objects: raw.objects.clone(),
            names,
            src,
            tgt,
            identity,
            is_identity,
            compose,
            index,
        })
    }

    /// The free category on a chain of `n` arrows, i.e. the poset `[n]`.
    pub fn chain(n: usize) -> Self {
        let objects: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
        let arrow = |i: usize, j: usize| format!("{i}{j}");
        let mut raw = RawCategory {
            objects,
            ..Default::default()
        };
        for i in 0..=n {
            for j in i + 1..=n {
                raw.morphisms
                    .push(RawArrow::new(arrow(i, j), i.to_string(), j.to_string()));
            }
        }
        for i in 0..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    raw.compose.push([arrow(i, j), arrow(j, k), arrow(i, k)]);
                }
            }
        }
        Self::validate(&raw).expect("chain tables are valid")
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }
    pub fn n_morphisms(&self) -> usize {
        self.names.len()
    }
    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }
    pub fn name(&self, f: usize) -> &str {
        &self.names[f]
    }
    pub fn morphism(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }
    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }
    pub fn identity(&self, o: usize) -> usize {
        self.identity[o]
    }
    pub fn is_identity(&self, f: usize) -> bool {
        self.is_identity[f]
    }
    /// `f` then `g`, when composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f, g)).copied()
    }
    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.names.len())
            .filter(|&f| self.src[f] == a && self.tgt[f] == b)
            .collect()
    }

    pub fn to_raw(&self) -> RawCategory {
        let nonid = |f: usize| !self.is_identity[f];
        let morphisms = (0..self.names.len())
            .filter(|&f| nonid(f))
            .map(|f| {
                RawArrow::new(
                    &self.names[f],
                    &self.objects[self.src[f]],
                    &self.objects[self.tgt[f]],
                )
            })
            .collect();
        let mut compose: Vec<[String; 3]> = self
            .compose
            .iter()
            .filter(|(&(a, b), _)| nonid(a) && nonid(b))
            .map(|(&(a, b), &c)| {
                [
                    self.names[a].clone(),
                    self.names[b].clone(),
                    self.names[c].clone(),
                ]
            })
            .collect();
        compose.sort();
        RawCategory {
            objects: self.objects.clone(),
            morphisms,
            compose,
        }
    }

    /// Decide freeness by counting factorizations into indecomposables.
    pub fn freeness(&self) -> Freeness {
        let n = self.names.len();
        let generators: Vec<usize> = (0..n)
            .filter(|&f| !self.is_identity[f])
            .filter(|&f| {
                !self
                    .compose
                    .iter()
                    .any(|(&(a, b), &c)| c == f && !self.is_identity[a] && !self.is_identity[b])
            })
            .collect();
        // Factorization counts saturate at 2. A word longer than the number of
        // morphisms repeats a prefix composite, so the length bound is exact.
        let mut total = vec![0u8; n];
        let mut layer = vec![0u8; n];
        for o in 0..self.objects.len() {
            layer[self.identity[o]] = 1;
        }
        for _ in 0..=n + 1 {
            for f in 0..n {
                total[f] = (total[f] + layer[f]).min(2);
            }
            let mut next = vec![0u8; n];
            for f in 0..n {
                if layer[f] == 0 {
                    continue;
                }
                for &g in &generators {
                    if let Some(h) = self.compose(f, g) {
                        next[h] = (next[h] + layer[f]).min(2);
                    }
                }
            }
            if next.iter().all(|&c| c == 0) {
                break;
            }
            layer = next;
        }
        let obstruction = (0..n)
            .find(|&f| total[f] != 1)
            .map(|f| (f, total[f] as usize));
        Freeness {
            free: obstruction.is_none(),
            generators,
            obstruction,
        }
    }

    pub fn is_free(&self) -> bool {
        self.freeness().free
    }
}

/// Result of the freeness test: on failure, a morphism with zero or at least
/// two factorizations (the count saturates at 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Freeness {
    pub free: bool,
    pub generators: Vec<usize>,
    pub obstruction: Option<(usize, usize)>,
}

/// Maps on objects and morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatFunctor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl CatFunctor {
    pub fn check(&self, c: &FiniteCategory, d: &FiniteCategory) -> Result<()> {
        let bad = |what: String| Err(Error::NotAFunctor(what));
        if self.objects.len() != c.n_objects() || self.morphisms.len() != c.n_morphisms() {
            return bad("map sizes do not match the source".into());
        }
        for f in 0..c.n_morphisms() {
            let g = self.morphisms[f];
            if d.src(g) != self.objects[c.src(f)] || d.tgt(g) != self.objects[c.tgt(f)] {
                return bad(format!("boundary of `{}`", c.name(f)));
            }
        }
        for o in 0..c.n_objects() {
            if self.morphisms[c.identity(o)] != d.identity(self.objects[o]) {
                return bad(format!("identity of `{}`", c.object_name(o)));
            }
        }
        for (&(a, b), &h) in &c.compose {
            if d.compose(self.morphisms[a], self.morphisms[b]) != Some(self.morphisms[h]) {
                return bad(format!("composite `{}`", c.name(h)));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn iso() -> RawCategory {
        RawCategory {
            objects: vec!["x".into(), "y".into()],
            morphisms: vec![RawArrow::new("xy", "x", "y"), RawArrow::new("yx", "y", "x")],
            compose: vec![
                ["xy".into(), "yx".into(), "id[x]".into()],
                ["yx".into(), "xy".into(), "id[y]".into()],
            ],
        }
    }

    #[test]
    fn chain_two_has_six_morphisms_and_is_free() {
        let c = FiniteCategory::chain(2);
        assert_eq!(c.n_morphisms(), 6);
        let v = c.freeness();
        assert!(v.free);
        let gens: Vec<&str> = v.generators.iter().map(|&g| c.name(g)).collect();
        assert_eq!(gens, ["01", "12"]);
    }

    #[test]
    fn iso_is_valid_but_not_free() {
        let c = FiniteCategory::validate(&iso()).unwrap();
        assert_eq!(c.n_morphisms(), 4);
        let v = c.freeness();
        assert!(!v.free);
        let (f, count) = v.obstruction.unwrap();
        assert!(c.is_identity(f));
        assert_eq!(count, 2);
    }

    #[test]
    fn terminal_is_free_with_no_generators() {
        let c = FiniteCategory::chain(0);
        let v = c.freeness();
        assert!(v.free && v.generators.is_empty());
    }

    #[test]
    fn non_associative_table_is_located() {
        // Two endomorphisms a, b on one object with a;a = b, a;b = a, b;a = b, b;b = b.
        let raw = RawCategory {
            objects: vec!["o".into()],
            morphisms: vec![RawArrow::new("a", "o", "o"), RawArrow::new("b", "o", "o")],
            compose: vec![
                ["a".into(), "a".into(), "b".into()],
                ["a".into(), "b".into(), "a".into()],
                ["b".into(), "a".into(), "b".into()],
                ["b".into(), "b".into(), "b".into()],
            ],
        };
        match FiniteCategory::validate(&raw) {
            Err(Error::NonAssociative(t)) => assert!(t.iter().all(|n| n == "a" || n == "b")),
            other => panic!("expected NonAssociative, got {other:?}"),
        }
    }

    #[test]
    fn missing_and_dangling_are_reported() {
        let mut raw = iso();
        raw.compose.pop();
        assert!(matches!(
            FiniteCategory::validate(&raw),
            Err(Error::MissingComposite { .. })
        ));
        let mut raw = iso();
        raw.morphisms[0].tgt = "z".into();
        assert!(matches!(
            FiniteCategory::validate(&raw),
            Err(Error::DanglingReference { .. })
        ));
    }

    #[test]
    fn raw_round_trip() {
        let c = FiniteCategory::validate(&iso()).unwrap();
        let d = FiniteCategory::validate(&c.to_raw()).unwrap();
        assert_eq!(c, d);
    }
}
