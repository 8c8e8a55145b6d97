//! Breadth-first closure of generator sets.
//!
//! Elements are discovered in short-lex order of their factorizations, so
//! the stored word for each element is its short-lex least representative
//! over the generators. Every time a product lands on an element that was
//! already known under a different word, the pair is recorded as a rule;
//! the rules form a presentation of the enumerated semigroup.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

pub const DEFAULT_ELEMENT_LIMIT: usize = 1_000_000;

/// Multiplication on element indices of a finite carrier.
pub trait FiniteSemigroup {
    fn size(&self) -> usize;
    fn product(&self, a: usize, b: usize) -> usize;

    /// Full Cayley table, row-major.
    fn cayley_table(&self) -> Vec<usize> {
        let m = self.size();
        let mut t = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                t.push(self.product(a, b));
            }
        }
        t
    }
}

impl FiniteSemigroup for FiniteMonoid {
    fn size(&self) -> usize {
        self.order()
    }
    fn product(&self, a: usize, b: usize) -> usize {
        self.mul(a, b)
    }
}

#[derive(Debug, Clone)]
pub struct EnumeratedSemigroup<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<usize>,
    words: Vec<Vec<usize>>,
    right: Vec<usize>,
    left: Vec<usize>,
    rules: Vec<(Vec<usize>, Vec<usize>)>,
}

/// Closes `generators` under `mul`, failing once more than `limit`
/// elements have been found.
pub fn close<E, F>(generators: &[E], mul: F, limit: usize) -> Result<EnumeratedSemigroup<E>>
where
    E: Clone + Eq + Hash,
    F: Fn(&E, &E) -> E,
{
    if generators.is_empty() {
        return Err(Error::arg("closure needs at least one generator"));
    }
    let ngens = generators.len();
    let mut elements: Vec<E> = Vec::new();
    let mut index: HashMap<E, usize> = HashMap::new();
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut gen_pos = Vec::with_capacity(ngens);
    let mut rules = Vec::new();

    for (k, g) in generators.iter().enumerate() {
        match index.get(g) {
            Some(&at) => {
                rules.push((vec![k], words[at].clone()));
                gen_pos.push(at);
            }
            None => {
                if elements.len() >= limit {
                    return Err(Error::capacity(
                        "closure elements",
                        limit as u128,
                        elements.len() as u128,
                    ));
                }
                index.insert(g.clone(), elements.len());
                gen_pos.push(elements.len());
                elements.push(g.clone());
                words.push(vec![k]);
            }
        }
    }

    let mut right = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        for (k, g) in generators.iter().enumerate() {
            let prod = mul(&elements[i], g);
            match index.get(&prod) {
                Some(&at) => {
                    right.push(at);
                    let mut w = words[i].clone();
                    w.push(k);
                    if w != words[at] {
                        rules.push((w, words[at].clone()));
                    }
                }
                None => {
                    if elements.len() >= limit {
                        return Err(Error::capacity(
                            "closure elements",
                            limit as u128,
                            elements.len() as u128,
                        ));
                    }
                    let at = elements.len();
                    let mut w = words[i].clone();
                    w.push(k);
                    index.insert(prod.clone(), at);
                    elements.push(prod);
                    words.push(w);
                    right.push(at);
                }
            }
        }
        i += 1;
    }

    let mut left = Vec::with_capacity(elements.len() * ngens);
    for e in &elements {
        for g in generators {
            left.push(index[&mul(g, e)]);
        }
    }

    Ok(EnumeratedSemigroup {
        elements,
        index,
        generators: gen_pos,
        words,
        right,
        left,
        rules,
    })
}

impl<E: Clone + Eq + Hash> EnumeratedSemigroup<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn position(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    /// Element index of each generator, in generator order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Short-lex least word over generator positions evaluating to element `i`.
    pub fn factorization(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Index of `element_i · generator_k`.
    pub fn right(&self, i: usize, k: usize) -> usize {
        self.right[i * self.generators.len() + k]
    }

    /// Index of `generator_k · element_i`.
    pub fn left(&self, i: usize, k: usize) -> usize {
        self.left[i * self.generators.len() + k]
    }

    /// Rules `(w, canonical word)` collected during the closure.
    pub fn rules(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.rules
    }

    /// Evaluates a nonempty word over generator positions.
    pub fn evaluate_word(&self, word: &[usize]) -> Option<usize> {
        let (&first, rest) = word.split_first()?;
        let mut at = self.generators[first];
        for &k in rest {
            at = self.right(at, k);
        }
        Some(at)
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.product(i, i) == i
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_idempotent(i)).collect()
    }
}

impl<E: Clone + Eq + Hash> FiniteSemigroup for EnumeratedSemigroup<E> {
    fn size(&self) -> usize {
        self.elements.len()
    }

    /// Follows the right Cayley graph from `a` along the word of `b`.
    fn product(&self, a: usize, b: usize) -> usize {
        let mut at = a;
        for &k in &self.words[b] {
            at = self.right(at, k);
        }
        at
    }
}

/// Number of elements generated by `gens` inside a carrier with Cayley
/// table `table` (row-major, `size × size`), stopping early once the count
/// reaches `stop_at`.
pub(crate) fn closure_size(table: &[usize], size: usize, gens: &[usize], stop_at: usize) -> usize {
    let mut seen = vec![false; size];
    let mut queue = Vec::with_capacity(size);
    for &g in gens {
        if !seen[g] {
            seen[g] = true;
            queue.push(g);
        }
    }
    let mut i = 0;
    while i < queue.len() {
        if queue.len() >= stop_at {
            return queue.len();
        }
        let row = &table[queue[i] * size..(queue[i] + 1) * size];
        for &g in gens {
            let p = row[g];
            if !seen[p] {
                seen[p] = true;
                queue.push(p);
            }
        }
        i += 1;
    }
    queue.len()
}

/// Whether `gens` (elements of `target`) generate all of `target`.
pub fn generates<E: Clone + Eq + Hash>(gens: &[E], target: &EnumeratedSemigroup<E>) -> Result<bool> {
    let mut idx = Vec::with_capacity(gens.len());
    for (k, g) in gens.iter().enumerate() {
        match target.position(g) {
            Some(i) => idx.push(i),
            None => return Err(Error::arg(format!("generator #{k} is not an element of the target"))),
        }
    }
    if idx.is_empty() {
        return Ok(target.is_empty());
    }
    let sub = close(&idx, |&a, &b| target.product(a, b), target.len() + 1)?;
    Ok(sub.len() == target.len())
}
