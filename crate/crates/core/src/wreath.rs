//! Wreath products `M≀S` for `S` a subsemigroup of `T_n`.
//!
//! An element `(𝐚, α)` stores `𝐚` as monoid indices; it only makes sense
//! together with the [`WreathContext`] that owns the base monoid.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::enumerate::{close, EnumeratedSemigroup};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::transformation::{enumerate, epsilon, Part, Transformation};

/// Largest `|M|^n · |S|` that brute-force routines will walk.
pub const BRUTE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WreathPart {
    Full,
    Singular,
    /// `S = ⟨gens⟩ ⊆ T_n`.
    Custom(Vec<Transformation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub tuple: Vec<usize>,
    pub trans: Transformation,
}

impl WreathElement {
    pub fn new(tuple: Vec<usize>, trans: Transformation) -> Self {
        WreathElement { tuple, trans }
    }

    pub fn degree(&self) -> usize {
        self.trans.degree()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    X,
    X1,
    X2,
    Xn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Formula,
    Brute,
}

#[derive(Debug, Clone)]
pub struct WreathContext {
    base: FiniteMonoid,
    degree: usize,
    part: WreathPart,
}

fn checked_pow(b: u128, e: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(b)?;
    }
    Some(acc)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

fn overflow() -> Error {
    Error::capacity("idempotent count (u128 overflow)", u128::MAX, u128::MAX)
}

impl WreathContext {
    pub fn new(base: FiniteMonoid, degree: usize, part: WreathPart) -> Result<Self> {
        if degree == 0 {
            return Err(Error::arg("degree must be positive"));
        }
        if degree > crate::transformation::MAX_DEGREE {
            return Err(Error::capacity(
                "wreath degree",
                crate::transformation::MAX_DEGREE as u128,
                degree as u128,
            ));
        }
        match &part {
            WreathPart::Singular if degree < 2 => {
                return Err(Error::Domain("the singular part needs degree at least 2".into()))
            }
            WreathPart::Custom(gens) => {
                if gens.is_empty() {
                    return Err(Error::arg("custom part needs at least one generator"));
                }
                if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
                    return Err(Error::DegreeMismatch {
                        left: degree,
                        right: g.degree(),
                    });
                }
            }
            _ => {}
        }
        Ok(WreathContext { base, degree, part })
    }

    pub fn full(base: FiniteMonoid, degree: usize) -> Result<Self> {
        Self::new(base, degree, WreathPart::Full)
    }

    pub fn singular(base: FiniteMonoid, degree: usize) -> Result<Self> {
        Self::new(base, degree, WreathPart::Singular)
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn part(&self) -> &WreathPart {
        &self.part
    }

    /// Checks tuple length, index ranges and degree.
    pub fn check(&self, x: &WreathElement) -> Result<()> {
        if x.trans.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: x.trans.degree(),
            });
        }
        if x.tuple.len() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: x.tuple.len(),
            });
        }
        if let Some(&a) = x.tuple.iter().find(|&&a| a >= self.base.order()) {
            return Err(Error::arg(format!(
                "tuple entry {a} is not an element of {}",
                self.base.name()
            )));
        }
        Ok(())
    }

    /// `(𝐚,α)(𝐛,β) = ((a_i·b_{iα})_i, αβ)`.
    pub fn multiply(&self, x: &WreathElement, y: &WreathElement) -> Result<WreathElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &WreathElement, y: &WreathElement) -> WreathElement {
        let tuple = (0..self.degree)
            .map(|i| self.base.mul(x.tuple[i], y.tuple[x.trans.at(i)]))
            .collect();
        WreathElement {
            tuple,
            trans: x.trans.then(&y.trans),
        }
    }

    /// Identity of `M≀T_n`.
    pub fn one(&self) -> WreathElement {
        WreathElement {
            tuple: vec![self.base.identity(); self.degree],
            trans: Transformation::identity(self.degree),
        }
    }

    pub fn is_idempotent(&self, x: &WreathElement) -> bool {
        x.trans.is_idempotent()
            && (0..self.degree).all(|i| self.base.mul(x.tuple[i], x.tuple[x.trans.at(i)]) == x.tuple[i])
    }

    /// `ε_{ij;𝐚}`, indices 1-based.
    pub fn eps_tuple(&self, i: usize, j: usize, tuple: Vec<usize>) -> Result<WreathElement> {
        let x = WreathElement {
            tuple,
            trans: epsilon(self.degree, i, j)?,
        };
        self.check(&x)?;
        Ok(x)
    }

    /// `ε_{ij;ab}`: `a` at `i`, `b` at `j`, `1` elsewhere.
    pub fn eps_ab(&self, i: usize, j: usize, a: usize, b: usize) -> Result<WreathElement> {
        let mut tuple = vec![self.base.identity(); self.degree];
        if i >= 1 && i <= self.degree && j >= 1 && j <= self.degree {
            tuple[i - 1] = a;
            tuple[j - 1] = b;
        }
        self.eps_tuple(i, j, tuple)
    }

    /// `ε_{ij;a} = ε_{ij;1a}`.
    pub fn eps_a(&self, i: usize, j: usize, a: usize) -> Result<WreathElement> {
        self.eps_ab(i, j, self.base.identity(), a)
    }

    fn transformations(&self) -> Result<Vec<Transformation>> {
        match &self.part {
            WreathPart::Full => enumerate(self.degree, Part::Full),
            WreathPart::Singular => enumerate(self.degree, Part::Singular),
            WreathPart::Custom(gens) => {
                let s = close(gens, |a, b| a.then(b), BRUTE_LIMIT as usize)?;
                let mut v = s.elements().to_vec();
                v.sort();
                Ok(v)
            }
        }
    }

    fn tuple_count(&self) -> Result<u128> {
        checked_pow(self.base.order() as u128, self.degree)
            .filter(|&c| c <= BRUTE_LIMIT)
            .ok_or_else(|| Error::capacity("wreath tuples", BRUTE_LIMIT, u128::MAX))
    }

    /// All tuples of `M^n` in odometer order, first coordinate most significant.
    pub fn tuples(&self) -> Result<Vec<Vec<usize>>> {
        self.tuple_count()?;
        Ok(tuples(self.base.order(), self.degree))
    }

    /// Every element of `M≀S`, ordered by transformation then tuple.
    pub fn elements(&self) -> Result<Vec<WreathElement>> {
        let tcount = self.tuple_count()?;
        let trans = self.transformations()?;
        let total = tcount.saturating_mul(trans.len() as u128);
        if total > BRUTE_LIMIT {
            return Err(Error::capacity("wreath elements", BRUTE_LIMIT, total));
        }
        let tuples = tuples(self.base.order(), self.degree);
        let mut out = Vec::with_capacity(total as usize);
        for t in &trans {
            for a in &tuples {
                out.push(WreathElement {
                    tuple: a.clone(),
                    trans: t.clone(),
                });
            }
        }
        Ok(out)
    }

    /// `|M≀S|` without enumerating, for full and singular parts.
    pub fn order(&self) -> Result<u128> {
        let n = self.degree;
        let m = self.base.order() as u128;
        let tup = checked_pow(m, n).ok_or_else(overflow)?;
        let s = match &self.part {
            WreathPart::Full => checked_pow(n as u128, n).ok_or_else(overflow)?,
            WreathPart::Singular => {
                let fact: u128 = (1..=n as u128).product();
                checked_pow(n as u128, n).ok_or_else(overflow)? - fact
            }
            WreathPart::Custom(_) => self.transformations()?.len() as u128,
        };
        tup.checked_mul(s).ok_or_else(overflow)
    }

    /// Closure of `gens` under the wreath multiplication.
    pub fn close(&self, gens: &[WreathElement], limit: usize) -> Result<EnumeratedSemigroup<WreathElement>> {
        for g in gens {
            self.check(g)?;
        }
        close(gens, |a, b| self.mul(a, b), limit)
    }

    /// `M≀S` as an enumerated semigroup, generated by all of its elements
    /// when `S` is custom and by `X_2` when `S = Sing_n`.
    pub fn enumerate(&self, limit: usize) -> Result<EnumeratedSemigroup<WreathElement>> {
        match &self.part {
            WreathPart::Singular => self.close(&self.gen_family(Family::X2)?, limit),
            _ => self.close(&self.elements()?, limit),
        }
    }

    pub fn count_idempotents(&self, method: CountMethod) -> Result<u128> {
        match method {
            CountMethod::Brute => {
                let elems = self.elements()?;
                Ok(elems.iter().filter(|x| self.is_idempotent(x)).count() as u128)
            }
            CountMethod::Formula => {
                let full = self.full_idempotent_formula()?;
                match &self.part {
                    WreathPart::Full => Ok(full),
                    WreathPart::Singular => {
                        let e = self.base.idempotents().len() as u128;
                        Ok(full - checked_pow(e, self.degree).ok_or_else(overflow)?)
                    }
                    WreathPart::Custom(_) => Err(Error::Domain(
                        "the idempotent formula covers full and singular parts only".into(),
                    )),
                }
            }
        }
    }

    /// `Σ_k C(n,k) Σ_{e_1..e_k ∈ E(M)} (Σ_i |M e_i|)^{n-k}`.
    ///
    /// The inner sum over idempotent tuples is grouped by the value of
    /// `Σ|M e_i|`, so it costs `O(k · |E(M)| · k|M|)` per `k`.
    pub fn full_idempotent_formula(&self) -> Result<u128> {
        let m = &self.base;
        let n = self.degree;
        let sizes: Vec<usize> = m
            .idempotents()
            .into_iter()
            .map(|e| (0..m.order()).filter(|&x| m.mul(x, e) == x).count())
            .collect();
        let max = m.order();
        // ways[s] = number of k-tuples of idempotents with Σ|Me_i| = s
        let mut ways: Vec<u128> = vec![1];
        let mut total: u128 = 0;
        for k in 1..=n {
            let mut next = vec![0u128; k * max + 1];
            for (s, &w) in ways.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                for &sz in &sizes {
                    next[s + sz] = next[s + sz].checked_add(w).ok_or_else(overflow)?;
                }
            }
            ways = next;
            let mut inner: u128 = 0;
            for (s, &w) in ways.iter().enumerate() {
                if w == 0 {
                    continue;
                }
                let p = checked_pow(s as u128, n - k).ok_or_else(overflow)?;
                inner = inner
                    .checked_add(w.checked_mul(p).ok_or_else(overflow)?)
                    .ok_or_else(overflow)?;
            }
            total = total
                .checked_add(binomial(n, k).checked_mul(inner).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        Ok(total)
    }

    /// The generator family in (i,j)-lexicographic then parameter-odometer order.
    pub fn gen_family(&self, family: Family) -> Result<Vec<WreathElement>> {
        let n = self.degree;
        if n < 2 {
            return Err(Error::Domain("generator families need n ≥ 2".into()));
        }
        let m = self.base.order();
        let one = self.base.identity();
        let mut out = Vec::new();
        for (i, j) in ordered_pairs(n) {
            match family {
                Family::X => out.push(self.eps_a(i, j, one)?),
                Family::X1 => {
                    for a in 0..m {
                        out.push(self.eps_a(i, j, a)?);
                    }
                }
                Family::X2 => {
                    for a in 0..m {
                        for b in 0..m {
                            out.push(self.eps_ab(i, j, a, b)?);
                        }
                    }
                }
                Family::Xn => {
                    for t in self.tuples()? {
                        out.push(self.eps_tuple(i, j, t)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Whether `a_i ≤_L a_j` for some non-diagonal kernel pair `(i,j)` of `α`.
    pub fn sigma_membership(&self, x: &WreathElement) -> Result<bool> {
        self.check(x)?;
        if x.trans.is_permutation() {
            return Err(Error::Domain(format!(
                "{} is invertible; the predicate is defined on the singular part",
                x.trans
            )));
        }
        Ok(x.trans
            .kernel_pairs()
            .into_iter()
            .any(|(i, j)| self.base.leq_l(x.tuple[i - 1], x.tuple[j - 1])))
    }

    /// Checks `𝔼(M) = {1} ∪ (M∖G)`, naming a witness on failure.
    pub fn check_e_hypothesis(&self) -> Result<()> {
        check_e_hypothesis(&self.base)
    }

    /// Splits `x` as `(𝐚,1_n)(𝐛,α)` with `𝐚 ∈ 𝔼(M)^n` and `𝐛 ∈ G^n`.
    pub fn decompose_e(&self, x: &WreathElement) -> Result<(WreathElement, WreathElement)> {
        self.check(x)?;
        self.check_e_hypothesis()?;
        if x.trans.is_permutation() {
            return Err(Error::Domain(format!("{} is not singular", x.trans)));
        }
        let one = self.base.identity();
        let units = self.base.units();
        let mut a = Vec::with_capacity(self.degree);
        let mut b = Vec::with_capacity(self.degree);
        for &c in &x.tuple {
            if units.contains(&c) {
                a.push(one);
                b.push(c);
            } else {
                a.push(c);
                b.push(one);
            }
        }
        Ok((
            WreathElement::new(a, Transformation::identity(self.degree)),
            WreathElement::new(b, x.trans.clone()),
        ))
    }

    /// Renders `((a_1,...,a_n),[images])` with monoid labels.
    pub fn display<'a>(&'a self, x: &'a WreathElement) -> impl fmt::Display + 'a {
        struct D<'a>(&'a WreathContext, &'a WreathElement);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let labels = self.1.tuple.iter().map(|&a| self.0.base.label(a)).join(",");
                write!(f, "(({labels}),{})", self.1.trans)
            }
        }
        D(self, x)
    }
}

/// `𝔼(M) = {1} ∪ (M∖G)`, or a precondition error naming a witness.
pub fn check_e_hypothesis(m: &FiniteMonoid) -> Result<()> {
    let eg = m.idempotent_generated_part();
    let units = m.units();
    for a in 0..m.order() {
        let in_e = eg.contains(&a);
        let wanted = a == m.identity() || !units.contains(&a);
        if in_e != wanted {
            let why = if in_e {
                "is a non-identity unit inside ⟨E(M)⟩"
            } else {
                "is a non-unit outside ⟨E(M)⟩"
            };
            return Err(Error::Precondition(format!(
                "⟨E(M)⟩ ≠ {{1}} ∪ (M∖G) for {}: element `{}` {why}",
                m.name(),
                m.label(a)
            )));
        }
    }
    Ok(())
}

/// Ordered pairs `(i,j)` with `i ≠ j`, lexicographic, 1-based.
pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).cartesian_product(1..=n).filter(|(i, j)| i != j).collect()
}

/// All of `{0..m-1}^n` in odometer order, first coordinate most significant.
pub fn tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..n).map(|_| 0..m).multi_cartesian_product().collect()
}
