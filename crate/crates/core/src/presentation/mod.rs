//! Finite presentations: alphabets of self-describing letters, relation
//! lists, emitters for the wreath-product families, and evaluation.

mod emit;
mod eval;
mod words;

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use emit::{
    emit_e_wreath_monoid, emit_r, emit_r1, emit_r1_unchecked, emit_r1p, emit_r2, emit_r2_with, emit_rn,
    emit_semidirect, EBase, R2Options, MAX_LETTERS, MAX_RELATIONS,
};
pub use eval::{
    evaluate, images_e_wreath_monoid, images_r, images_x1, images_x2, images_xn, soundness, EvaluationMap,
    RelationFailure, SoundnessReport, Target, TransformationTarget,
};
pub use words::{chain_data, word_e_x1, word_e_x2, ChainData};

pub type Word = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Semigroup,
    Monoid,
}

/// Semantic parameters of a letter. Monoid elements are given by label and
/// indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum LetterParams {
    /// `e_ij`
    Transformation {
        i: usize,
        j: usize,
    },
    /// `e_{ij;a}`
    Decorated {
        i: usize,
        j: usize,
        a: String,
    },
    /// `e_{ij;a,b}`
    DoublyDecorated {
        i: usize,
        j: usize,
        a: String,
        b: String,
    },
    /// `e_{ij;𝐚}`
    TupleDecorated {
        i: usize,
        j: usize,
        tuple: Vec<String>,
    },
    /// `y_(i)`
    Coordinate {
        base: String,
        coord: usize,
    },
    /// `x_a` over a base letter
    Semidirect {
        base: String,
        a: String,
    },
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Letter {
    pub name: String,
    pub params: LetterParams,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
    pub tag: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presentation {
    pub kind: Kind,
    pub letters: Vec<Letter>,
    pub relations: Vec<Relation>,
    pub provenance: Provenance,
}

impl Presentation {
    pub fn new(kind: Kind, letters: Vec<Letter>, provenance: Provenance) -> Self {
        Presentation {
            kind,
            letters,
            relations: Vec::new(),
            provenance,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.letters.len()
    }

    /// Every letter index in range; no empty side in a semigroup presentation.
    pub fn validate(&self) -> Result<()> {
        let k = self.letters.len();
        for (r, rel) in self.relations.iter().enumerate() {
            for side in [&rel.lhs, &rel.rhs] {
                if let Some(&bad) = side.iter().find(|&&x| x >= k) {
                    return Err(Error::MalformedPresentation(format!(
                        "relation #{r} ({}) uses letter {bad}, alphabet has {k}",
                        rel.tag
                    )));
                }
                if side.is_empty() && self.kind == Kind::Semigroup {
                    return Err(Error::MalformedPresentation(format!(
                        "relation #{r} ({}) has an empty side in a semigroup presentation",
                        rel.tag
                    )));
                }
            }
        }
        let names: HashSet<&str> = self.letters.iter().map(|l| l.name.as_str()).collect();
        if names.len() != k {
            return Err(Error::MalformedPresentation("letter names are not distinct".into()));
        }
        Ok(())
    }

    /// Number of relations per tag, in tag order.
    pub fn family_counts(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for r in &self.relations {
            *out.entry(r.tag.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Renders a word using letter names.
    pub fn render(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&x| self.letters[x].name.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|l| l.name == name)
    }
}

/// Accumulates relations, splitting chains and dropping exact repeats.
pub(crate) struct RelationSink {
    relations: Vec<Relation>,
    seen: HashSet<(Word, Word)>,
}

impl RelationSink {
    pub(crate) fn new() -> Self {
        RelationSink {
            relations: Vec::new(),
            seen: HashSet::new(),
        }
    }

    pub(crate) fn push(&mut self, tag: &str, lhs: Word, rhs: Word) {
        if self.seen.insert((lhs.clone(), rhs.clone())) {
            self.relations.push(Relation {
                lhs,
                rhs,
                tag: tag.to_string(),
            });
        }
    }

    /// `w_0 = w_1 = ... = w_k` as the pairs `(w_0,w_1), (w_1,w_2), ...`.
    pub(crate) fn chain(&mut self, tag: &str, words: &[Word]) {
        for pair in words.windows(2) {
            self.push(tag, pair[0].clone(), pair[1].clone());
        }
    }

    pub(crate) fn finish(self) -> Vec<Relation> {
        self.relations
    }
}
