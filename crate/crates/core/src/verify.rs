//! Certifying that a presentation defines a given finite semigroup.
//!
//! Soundness gives a morphism from the presented object onto the subsemigroup
//! generated by the letter images; when those images generate the whole
//! target and the enumerated quotient has the target's cardinality, the
//! morphism is a bijection.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::enumerate::{close, EnumeratedSemigroup};
use crate::error::Result;
use crate::presentation::{soundness, EvaluationMap, Kind, Presentation, SoundnessReport, Target};
use crate::todd_coxeter::{todd_coxeter, TcResult, TcStatus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Certified { classes: usize },
    Unsound { failing: Vec<usize> },
    NotSurjective { reached: usize, target: usize },
    SizeMismatch { got: usize, want: usize },
    Inconclusive { node_limit: usize },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Certified { .. } => "certified",
            Verdict::Unsound { .. } => "unsound",
            Verdict::NotSurjective { .. } => "not_surjective",
            Verdict::SizeMismatch { .. } => "size_mismatch",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub family: String,
    pub letters: usize,
    pub relations: usize,
    pub family_counts: BTreeMap<String, usize>,
    pub target_size: usize,
    pub class_count: Option<usize>,
    pub soundness: SoundnessReport,
    pub enumeration: Option<TcResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub node_limit: usize,
    pub element_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            node_limit: crate::todd_coxeter::DEFAULT_NODE_LIMIT,
            element_limit: crate::enumerate::DEFAULT_ELEMENT_LIMIT,
        }
    }
}

/// Soundness, then surjectivity onto `carrier`, then a class count.
pub fn verify<T: Target>(
    p: &Presentation,
    map: &EvaluationMap<T::Elem>,
    target: &T,
    carrier: &EnumeratedSemigroup<T::Elem>,
    opts: VerifyOptions,
) -> Result<VerifyReport> {
    let sound = soundness(p, map, target)?;
    let mut report = VerifyReport {
        verdict: Verdict::Inconclusive {
            node_limit: opts.node_limit,
        },
        family: p.provenance.family.clone(),
        letters: p.letters.len(),
        relations: p.relations.len(),
        family_counts: p.family_counts(),
        target_size: carrier.len(),
        class_count: None,
        soundness: sound.clone(),
        enumeration: None,
    };
    if !sound.is_sound() {
        report.verdict = Verdict::Unsound {
            failing: sound.failures.iter().map(|f| f.index).collect(),
        };
        return Ok(report);
    }

    let mut gens: Vec<T::Elem> = map.images.clone();
    if p.kind == Kind::Monoid {
        if let Some(one) = target.identity() {
            gens.push(one);
        }
    }
    let reached = if gens.is_empty() {
        0
    } else {
        let image = close(&gens, |a, b| target.mul(a, b), opts.element_limit)?;
        let outside: HashSet<&T::Elem> = image.elements().iter().filter(|e| !carrier.contains(e)).collect();
        if outside.is_empty() {
            image.len()
        } else {
            // images leaving the carrier can never be onto it
            0
        }
    };
    if reached != carrier.len() {
        report.verdict = Verdict::NotSurjective {
            reached,
            target: carrier.len(),
        };
        return Ok(report);
    }

    let tc = todd_coxeter(p, opts.node_limit)?;
    report.class_count = tc.class_count;
    report.verdict = match (tc.status, tc.class_count) {
        (TcStatus::Certified, Some(c)) if c == carrier.len() => Verdict::Certified { classes: c },
        (TcStatus::Certified, Some(c)) => Verdict::SizeMismatch {
            got: c,
            want: carrier.len(),
        },
        _ => Verdict::Inconclusive {
            node_limit: opts.node_limit,
        },
    };
    report.enumeration = Some(tc);
    Ok(report)
}
