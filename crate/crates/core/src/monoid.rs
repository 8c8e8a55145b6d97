//! Finite monoids given by Cayley tables.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::enumerate::{close, EnumeratedSemigroup, DEFAULT_ELEMENT_LIMIT};
use crate::error::{Error, Result};
use crate::transformation::Transformation;

/// A finite monoid with a validated Cayley table.
///
/// Elements are the indices `0..order`. `mul(i, j)` is the product
/// `element_i · element_j` with the left factor indexing rows.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    name: String,
    labels: Vec<String>,
    identity: usize,
    table: Vec<usize>,
}

impl FiniteMonoid {
    /// Validates a raw table. Shape and range problems are reported first,
    /// then the identity, then associativity (first failing triple in
    /// lexicographic order).
    pub fn new(name: impl Into<String>, labels: Vec<String>, identity: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::MalformedTable("monoid must be non-empty".into()));
        }
        if labels.len() != m {
            return Err(Error::MalformedTable(format!(
                "{} labels for a table with {m} rows",
                labels.len()
            )));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != m {
            return Err(Error::MalformedTable("element labels are not distinct".into()));
        }
        if identity >= m {
            return Err(Error::MalformedTable(format!(
                "identity index {identity} out of range 0..{m}"
            )));
        }
        let mut table = Vec::with_capacity(m * m);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::MalformedTable(format!(
                    "row {r} has {} entries, expected {m}",
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= m {
                    return Err(Error::MalformedTable(format!(
                        "entry [{r}][{c}] = {v} out of range 0..{m}"
                    )));
                }
                table.push(v);
            }
        }
        let monoid = FiniteMonoid {
            name: name.into(),
            labels,
            identity,
            table,
        };
        monoid.check_identity()?;
        monoid.check_associative()?;
        Ok(monoid)
    }

    /// Builds a monoid from a product function on `0..labels.len()`.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        identity: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let m = labels.len();
        let rows = (0..m).map(|i| (0..m).map(|j| f(i, j)).collect()).collect();
        FiniteMonoid::new(name, labels, identity, rows)
    }

    /// The monoid of transformations `elements`, which must be closed under
    /// composition and contain the identity map. Elements keep their order.
    pub fn from_transformations(name: impl Into<String>, elements: &[Transformation]) -> Result<Self> {
        let pos: HashMap<&Transformation, usize> = elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let n = elements
            .first()
            .ok_or_else(|| Error::arg("no transformations given"))?
            .degree();
        let id = Transformation::identity(n);
        let identity = *pos
            .get(&id)
            .ok_or_else(|| Error::arg("transformation set lacks the identity"))?;
        let mut rows = Vec::with_capacity(elements.len());
        for a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for b in elements {
                let ab = a.compose(b)?;
                let k = *pos
                    .get(&ab)
                    .ok_or_else(|| Error::arg(format!("{a}·{b} = {ab} escapes the set")))?;
                row.push(k);
            }
            rows.push(row);
        }
        let labels = elements.iter().map(|t| t.to_string()).collect();
        FiniteMonoid::new(name, labels, identity, rows)
    }

    fn check_identity(&self) -> Result<()> {
        let e = self.identity;
        for k in 0..self.order() {
            if self.mul(e, k) != k {
                return Err(Error::NotIdentity {
                    element: e,
                    detail: format!("{e}·{k} = {} (expected {k})", self.mul(e, k)),
                });
            }
            if self.mul(k, e) != k {
                return Err(Error::NotIdentity {
                    element: e,
                    detail: format!("{k}·{e} = {} (expected {k})", self.mul(k, e)),
                });
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let m = self.order();
        for i in 0..m {
            for j in 0..m {
                let ij = self.mul(i, j);
                for k in 0..m {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(Error::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.labels.len() + b]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Row-major table as nested vectors.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Two-sided inverse of `a`, if `a` is a unit.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order()).find(|&b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
    }

    /// The group of units `G`, as sorted element indices.
    pub fn units(&self) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.inverse(a).is_some()).collect()
    }

    pub fn is_group(&self) -> bool {
        self.units().len() == self.order()
    }

    /// Principal left ideal `M b`, as a membership mask.
    pub fn left_ideal(&self, b: usize) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        for s in 0..self.order() {
            mask[self.mul(s, b)] = true;
        }
        mask
    }

    /// `a ≤_L b`, i.e. `a ∈ M b`.
    pub fn leq_l(&self, a: usize, b: usize) -> bool {
        (0..self.order()).any(|s| self.mul(s, b) == a)
    }

    /// Two elements with incomparable principal left ideals, if any.
    pub fn l_chain_violation(&self) -> Option<(usize, usize)> {
        let ideals: Vec<Vec<bool>> = (0..self.order()).map(|b| self.left_ideal(b)).collect();
        let subset = |x: &[bool], y: &[bool]| x.iter().zip(y).all(|(&p, &q)| !p || q);
        for a in 0..self.order() {
            for b in (a + 1)..self.order() {
                if !subset(&ideals[a], &ideals[b]) && !subset(&ideals[b], &ideals[a]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Whether `M/L` is a chain under `≤_L`.
    pub fn is_l_chain(&self) -> bool {
        self.l_chain_violation().is_none()
    }

    /// The submonoid `⟨E(M)⟩`, closed from the idempotents (which include 1).
    pub fn idempotent_generated_part(&self) -> EnumeratedSemigroup<usize> {
        let gens = self.idempotents();
        close(&gens, |&a, &b| self.mul(a, b), DEFAULT_ELEMENT_LIMIT)
            .expect("closure inside a finite monoid cannot exceed the default limit")
    }

    /// Restriction to a subset closed under multiplication and containing 1.
    pub fn submonoid(&self, name: impl Into<String>, elements: &[usize]) -> Result<Self> {
        let sorted: BTreeSet<usize> = elements.iter().copied().collect();
        let elems: Vec<usize> = sorted.into_iter().collect();
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let identity = *pos
            .get(&self.identity)
            .ok_or_else(|| Error::arg("subset does not contain the identity"))?;
        let mut rows = Vec::with_capacity(elems.len());
        for &a in &elems {
            let mut row = Vec::with_capacity(elems.len());
            for &b in &elems {
                let k = *pos
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::arg(format!("{}·{} leaves the subset", self.label(a), self.label(b))))?;
                row.push(k);
            }
            rows.push(row);
        }
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        FiniteMonoid::new(name, labels, identity, rows)
    }

    /// The group of units as a monoid in its own right, labels preserved.
    pub fn group_of_units(&self) -> FiniteMonoid {
        self.submonoid(format!("U({})", self.name), &self.units())
            .expect("the units of a monoid form a submonoid")
    }

    /// The direct power `M^n`, elements in lexicographic tuple order.
    pub fn direct_power(&self, n: usize) -> Result<Self> {
        let m = self.order();
        let size = (m as u128).checked_pow(n as u32).filter(|&s| s <= 256);
        let size = size.ok_or_else(|| Error::capacity("direct power order", 256, u128::MAX))? as usize;
        let decode = |mut x: usize| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = x % m;
                x /= m;
            }
            t
        };
        let encode = |t: &[usize]| t.iter().fold(0, |acc, &d| acc * m + d);
        let tuples: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let labels = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t.iter().map(|&a| self.label(a)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let identity = encode(&vec![self.identity; n]);
        FiniteMonoid::from_fn(format!("{}^{n}", self.name), labels, identity, |x, y| {
            let prod: Vec<usize> = tuples[x]
                .iter()
                .zip(&tuples[y])
                .map(|(&a, &b)| self.mul(a, b))
                .collect();
            encode(&prod)
        })
    }
}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}
