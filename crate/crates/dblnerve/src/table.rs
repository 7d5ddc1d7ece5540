//! Composition tables shared by every cell family.
//!
//! Each family (morphisms of a category, 1-cells, 2-cells in either direction,
//! squares in either direction) is a category over some set of "objects"; the
//! checks below only see that graph.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// `(first, then) -> composite`, diagrammatic order.
pub type Table = HashMap<(usize, usize), usize>;

pub(crate) struct Family<'a> {
    pub names: &'a [String],
    pub src: &'a [usize],
    pub tgt: &'a [usize],
    pub n_objects: usize,
}

impl Family<'_> {
    fn outgoing(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_objects];
        for (a, &s) in self.src.iter().enumerate() {
            out[s].push(a);
        }
        out
    }

    /// Fill the table on every composable pair. Declared entries come first;
    /// `auto` provides composites forced by identity laws. A composable pair
    /// with neither is an error (closed world).
    pub fn complete(
        &self,
        given: &[(usize, usize, usize)],
        auto: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Table> {
        let mut table = Table::new();
        for &(a, b, c) in given {
            if self.tgt[a] != self.src[b] {
                return Err(Error::BadBoundary {
                    cell: self.names[c].clone(),
                    detail: format!(
                        "`{}` and `{}` are not composable",
                        self.names[a], self.names[b]
                    ),
                });
            }
            if self.src[c] != self.src[a] || self.tgt[c] != self.tgt[b] {
                return Err(Error::BadBoundary {
                    cell: self.names[c].clone(),
                    detail: format!(
                        "wrong boundary for `{}` then `{}`",
                        self.names[a], self.names[b]
                    ),
                });
            }
            if let Some(&old) = table.get(&(a, b)) {
                if old != c {
                    return Err(Error::Duplicate(format!(
                        "{};{}",
                        self.names[a], self.names[b]
                    )));
                }
            }
            table.insert((a, b), c);
        }
        let out = self.outgoing();
        for a in 0..self.src.len() {
            for &b in &out[self.tgt[a]] {
                match (auto(a, b), table.get(&(a, b))) {
                    (Some(x), Some(&y)) if x != y => {
                        return Err(Error::BadIdentity(format!(
                            "{};{}",
                            self.names[a], self.names[b]
                        )))
                    }
                    (Some(x), None) => {
                        table.insert((a, b), x);
                    }
                    (_, Some(_)) => {}
                    (None, None) => {
                        return Err(Error::MissingComposite {
                            first: self.names[a].clone(),
                            second: self.names[b].clone(),
                        })
                    }
                }
            }
        }
        Ok(table)
    }

    pub fn check_associative(&self, table: &Table) -> Result<()> {
        let out = self.outgoing();
        for a in 0..self.src.len() {
            for &b in &out[self.tgt[a]] {
                let ab = table[&(a, b)];
                for &c in &out[self.tgt[b]] {
                    if table[&(ab, c)] != table[&(a, table[&(b, c)])] {
                        return Err(Error::NonAssociative([
                            self.names[a].clone(),
                            self.names[b].clone(),
                            self.names[c].clone(),
                        ]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Identities must be two-sided units in the completed table.
    pub fn check_units(&self, table: &Table, identity: &[usize]) -> Result<()> {
        for a in 0..self.src.len() {
            let l = identity[self.src[a]];
            let r = identity[self.tgt[a]];
            if table[&(l, a)] != a || table[&(a, r)] != a {
                return Err(Error::BadIdentity(self.names[a].clone()));
            }
        }
        Ok(())
    }
}

pub(crate) fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::Duplicate(n.clone()));
        }
    }
    Ok(index)
}

pub(crate) fn lookup(
    index: &HashMap<String, usize>,
    kind: &'static str,
    name: &str,
) -> Result<usize> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::DanglingReference {
            kind,
            name: name.to_string(),
        })
}
