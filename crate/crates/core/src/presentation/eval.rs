//! Evaluating words in a concrete semigroup and checking relations.

use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::transformation::{epsilon, Transformation};
use crate::wreath::{ordered_pairs, Family, WreathContext, WreathElement};

use super::emit::EBase;
use super::Presentation;

/// A semigroup in which words can be evaluated.
pub trait Target {
    type Elem: Clone + Eq + Hash;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// The value of the empty word, when there is one.
    fn identity(&self) -> Option<Self::Elem>;
    fn describe(&self, a: &Self::Elem) -> String;
}

/// `T_n` under left-to-right composition, with its identity.
#[derive(Debug, Clone, Copy)]
pub struct TransformationTarget {
    pub degree: usize,
}

impl Target for TransformationTarget {
    type Elem = Transformation;
    fn mul(&self, a: &Transformation, b: &Transformation) -> Transformation {
        a.then(b)
    }
    fn identity(&self) -> Option<Transformation> {
        Some(Transformation::identity(self.degree))
    }
    fn describe(&self, a: &Transformation) -> String {
        a.to_string()
    }
}

impl Target for WreathContext {
    type Elem = WreathElement;
    fn mul(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        WreathContext::mul(self, a, b)
    }
    fn identity(&self) -> Option<WreathElement> {
        Some(self.one())
    }
    fn describe(&self, a: &WreathElement) -> String {
        self.display(a).to_string()
    }
}

impl Target for FiniteMonoid {
    type Elem = usize;
    fn mul(&self, a: &usize, b: &usize) -> usize {
        FiniteMonoid::mul(self, *a, *b)
    }
    fn identity(&self) -> Option<usize> {
        Some(FiniteMonoid::identity(self))
    }
    fn describe(&self, a: &usize) -> String {
        self.label(*a).to_string()
    }
}

/// One image per letter of an alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationMap<E> {
    pub images: Vec<E>,
}

impl<E> EvaluationMap<E> {
    pub fn new(images: Vec<E>) -> Self {
        EvaluationMap { images }
    }
}

/// Left-to-right product of the letter images; the empty word needs a
/// target identity.
pub fn evaluate<T: Target>(target: &T, map: &EvaluationMap<T::Elem>, word: &[usize]) -> Result<T::Elem> {
    let image = |x: usize| {
        map.images
            .get(x)
            .ok_or_else(|| Error::MalformedPresentation(format!("letter {x} has no image")))
    };
    match word.split_first() {
        None => target
            .identity()
            .ok_or_else(|| Error::arg("the empty word has no value in a semigroup target")),
        Some((&first, rest)) => {
            let mut acc = image(first)?.clone();
            for &x in rest {
                acc = target.mul(&acc, image(x)?);
            }
            Ok(acc)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub index: usize,
    pub tag: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl SoundnessReport {
    pub fn is_sound(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates both sides of every relation.
pub fn soundness<T: Target>(p: &Presentation, map: &EvaluationMap<T::Elem>, target: &T) -> Result<SoundnessReport> {
    p.validate()?;
    if map.images.len() != p.letters.len() {
        return Err(Error::MalformedPresentation(format!(
            "{} letter images for an alphabet of {}",
            map.images.len(),
            p.letters.len()
        )));
    }
    let mut failures = Vec::new();
    for (index, rel) in p.relations.iter().enumerate() {
        let l = evaluate(target, map, &rel.lhs)?;
        let r = evaluate(target, map, &rel.rhs)?;
        if l != r {
            failures.push(RelationFailure {
                index,
                tag: rel.tag.clone(),
                lhs: target.describe(&l),
                rhs: target.describe(&r),
            });
        }
    }
    Ok(SoundnessReport {
        checked: p.relations.len(),
        failures,
    })
}

/// `e_ij ↦ ε_ij`.
pub fn images_r(n: usize) -> Result<EvaluationMap<Transformation>> {
    ordered_pairs(n)
        .into_iter()
        .map(|(i, j)| epsilon(n, i, j))
        .collect::<Result<Vec<_>>>()
        .map(EvaluationMap::new)
}

/// `e_{ij;a} ↦ ε_{ij;a}`.
pub fn images_x1(ctx: &WreathContext) -> Result<EvaluationMap<WreathElement>> {
    Ok(EvaluationMap::new(ctx.gen_family(Family::X1)?))
}

/// `e_{ij;ab} ↦ ε_{ij;ab}`.
pub fn images_x2(ctx: &WreathContext) -> Result<EvaluationMap<WreathElement>> {
    Ok(EvaluationMap::new(ctx.gen_family(Family::X2)?))
}

/// `e_{ij;𝐚} ↦ ε_{ij;𝐚}`.
pub fn images_xn(ctx: &WreathContext) -> Result<EvaluationMap<WreathElement>> {
    Ok(EvaluationMap::new(ctx.gen_family(Family::Xn)?))
}

/// `y_(i) ↦ ȳ_(i)` and `e_{ij;g} ↦ ε_{ij;g}` in `M≀T_n`.
pub fn images_e_wreath_monoid(ctx: &WreathContext, base: &EBase) -> Result<EvaluationMap<WreathElement>> {
    let m = ctx.base();
    let n = ctx.degree();
    let one = m.identity();
    let mut images = Vec::new();
    for i in 1..=n {
        for &y in &base.images {
            let mut tuple = vec![one; n];
            tuple[i - 1] = y;
            images.push(WreathElement::new(tuple, Transformation::identity(n)));
        }
    }
    for (i, j) in ordered_pairs(n) {
        for g in m.units() {
            images.push(ctx.eps_a(i, j, g)?);
        }
    }
    Ok(EvaluationMap::new(images))
}
