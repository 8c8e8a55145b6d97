//! Emitters for the presentation families of `Sing_n`, `M≀Sing_n` and the
//! idempotent-generated part of `M≀T_n`.

use itertools::Itertools;

use crate::enumerate::{close, FiniteSemigroup};
use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;
use crate::semidirect::Action;
use crate::wreath::{check_e_hypothesis, ordered_pairs, tuples};

use super::words::chain_data;
use super::{Kind, Letter, LetterParams, Presentation, Provenance, RelationSink, Word};

/// Largest alphabet an emitter will build.
pub const MAX_LETTERS: usize = 100_000;
/// Largest relation count an emitter will build.
pub const MAX_RELATIONS: usize = 5_000_000;

pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * (n - 1) + if j < i { j - 1 } else { j - 2 }
}

pub(crate) fn x1_letter(k: usize, n: usize, i: usize, j: usize, a: usize) -> usize {
    pair_index(n, i, j) * k + a
}

pub(crate) fn x2_letter(k: usize, n: usize, i: usize, j: usize, a: usize, b: usize) -> usize {
    pair_index(n, i, j) * k * k + a * k + b
}

pub(crate) fn xn_letter(k: usize, n: usize, i: usize, j: usize, tuple: &[usize]) -> usize {
    let code = tuple.iter().fold(0, |acc, &d| acc * k + d);
    pair_index(n, i, j) * k.pow(n as u32) + code
}

fn distinct(n: usize, arity: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(arity).collect()
}

fn check_degree(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("presentations need n ≥ 2, got {n}")));
    }
    Ok(())
}

fn check_size(what: &'static str, count: u128, limit: usize) -> Result<()> {
    if count > limit as u128 {
        return Err(Error::capacity(what, limit as u128, count));
    }
    Ok(())
}

type Chain = Vec<Vec<(usize, usize)>>;

/// The families (R1)–(R6) as chains of words over index pairs.
fn base_chains(n: usize) -> Vec<(&'static str, Chain)> {
    let mut out = Vec::new();
    for (i, j) in ordered_pairs(n) {
        out.push(("R1", vec![vec![(i, j), (i, j)], vec![(i, j)], vec![(j, i), (i, j)]]));
    }
    for t in distinct(n, 4) {
        let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
        out.push(("R2", vec![vec![(i, j), (k, l)], vec![(k, l), (i, j)]]));
    }
    for t in distinct(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        out.push(("R3", vec![vec![(i, k), (j, k)], vec![(i, k)]]));
    }
    for t in distinct(n, 3) {
        let (i, j, k) = (t[0], t[1], t[2]);
        out.push((
            "R4",
            vec![vec![(i, j), (i, k)], vec![(i, k), (i, j)], vec![(j, k), (i, j)]],
        ));
    }
    out.extend(r5(n));
    out.extend(r6(n));
    out
}

fn r5(n: usize) -> Vec<(&'static str, Chain)> {
    distinct(n, 3)
        .into_iter()
        .map(|t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            (
                "R5",
                vec![vec![(k, i), (i, j), (j, k)], vec![(i, k), (k, j), (j, i), (i, k)]],
            )
        })
        .collect()
}

fn r6(n: usize) -> Vec<(&'static str, Chain)> {
    distinct(n, 4)
        .into_iter()
        .map(|t| {
            let (i, j, k, l) = (t[0], t[1], t[2], t[3]);
            (
                "R6",
                vec![
                    vec![(k, i), (i, j), (j, k), (k, l)],
                    vec![(i, k), (k, l), (l, i), (i, j), (j, l)],
                ],
            )
        })
        .collect()
}

fn x_letters(n: usize) -> Vec<Letter> {
    ordered_pairs(n)
        .into_iter()
        .map(|(i, j)| Letter {
            name: format!("e[{i},{j}]"),
            params: LetterParams::Transformation { i, j },
        })
        .collect()
}

fn x1_letters(m: &FiniteMonoid, n: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for (i, j) in ordered_pairs(n) {
        for a in 0..m.order() {
            out.push(Letter {
                name: format!("e[{i},{j};{}]", m.label(a)),
                params: LetterParams::Decorated {
                    i,
                    j,
                    a: m.label(a).to_string(),
                },
            });
        }
    }
    out
}

fn provenance(family: &str, m: Option<&FiniteMonoid>, n: usize) -> Provenance {
    Provenance {
        family: family.to_string(),
        monoid: m.map(|m| m.name().to_string()),
        n: Some(n),
    }
}

/// `⟨X | R⟩` for `Sing_n`.
pub fn emit_r(n: usize) -> Result<Presentation> {
    check_degree(n)?;
    let mut p = Presentation::new(Kind::Semigroup, x_letters(n), provenance("R", None, n));
    let mut sink = RelationSink::new();
    for (tag, chain) in base_chains(n) {
        let words: Vec<Word> = chain
            .iter()
            .map(|w| w.iter().map(|&(i, j)| pair_index(n, i, j)).collect())
            .collect();
        sink.chain(tag, &words);
    }
    p.relations = sink.finish();
    Ok(p)
}

/// `⟨X_M | R_M⟩` for `M ⋊ S`, given `⟨X | R⟩` for `S` and the images
/// `phi[x] ∈ S` of its letters.
pub fn emit_semidirect<S: FiniteSemigroup + ?Sized>(
    base: &Presentation,
    s: &S,
    phi: &[usize],
    m: &FiniteMonoid,
    action: &Action,
) -> Result<Presentation> {
    base.validate()?;
    if base.kind != Kind::Semigroup {
        return Err(Error::arg("the semidirect construction takes a semigroup presentation"));
    }
    if phi.len() != base.letters.len() || phi.iter().any(|&x| x >= s.size()) {
        return Err(Error::arg("letter images do not match the base alphabet"));
    }
    if action.s_order() != s.size() {
        return Err(Error::arg("action table does not match S"));
    }
    let k = m.order();
    let nx = base.letters.len();
    check_size("semidirect alphabet", (nx * k) as u128, MAX_LETTERS)?;
    check_size(
        "semidirect relations",
        (base.relations.len() * k + nx * nx * k * k) as u128,
        MAX_RELATIONS,
    )?;
    let letter = |x: usize, a: usize| x * k + a;
    let one = m.identity();
    let letters = base
        .letters
        .iter()
        .flat_map(|l| {
            (0..k).map(move |a| Letter {
                name: format!("{}_{}", l.name, m.label(a)),
                params: LetterParams::Semidirect {
                    base: l.name.clone(),
                    a: m.label(a).to_string(),
                },
            })
        })
        .collect();
    let mut p = Presentation::new(
        Kind::Semigroup,
        letters,
        Provenance {
            family: format!("semidirect({})", base.provenance.family),
            monoid: Some(m.name().to_string()),
            n: base.provenance.n,
        },
    );
    let decorate = |w: &[usize], a: usize| -> Word {
        w.iter()
            .enumerate()
            .map(|(t, &x)| letter(x, if t == 0 { a } else { one }))
            .collect()
    };
    let mut sink = RelationSink::new();
    for rel in &base.relations {
        let tag = format!("{}_M", rel.tag);
        for a in 0..k {
            sink.push(&tag, decorate(&rel.lhs, a), decorate(&rel.rhs, a));
        }
    }
    for (x, &px) in phi.iter().enumerate().take(nx) {
        for a in 0..k {
            for y in 0..nx {
                for b in 0..k {
                    let c = m.mul(a, action.apply(px, b));
                    sink.push(
                        "R_M^2",
                        vec![letter(x, a), letter(y, b)],
                        vec![letter(x, c), letter(y, one)],
                    );
                }
            }
        }
    }
    p.relations = sink.finish();
    Ok(p)
}

/// `⟨X_n | R_n⟩` for `M≀Sing_n`.
pub fn emit_rn(m: &FiniteMonoid, n: usize) -> Result<Presentation> {
    check_degree(n)?;
    let k = m.order();
    let tup_count = (k as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::capacity("R_n alphabet", MAX_LETTERS as u128, u128::MAX))?;
    let pairs = (n * (n - 1)) as u128;
    check_size("R_n alphabet", pairs * tup_count, MAX_LETTERS)?;
    check_size("R_n relations", (pairs * tup_count).pow(2), MAX_RELATIONS)?;
    let all = tuples(k, n);
    let one_tuple = vec![m.identity(); n];
    let mut letters = Vec::new();
    for (i, j) in ordered_pairs(n) {
        for t in &all {
            let labels: Vec<String> = t.iter().map(|&a| m.label(a).to_string()).collect();
            letters.push(Letter {
                name: format!("e[{i},{j};({})]", labels.join(",")),
                params: LetterParams::TupleDecorated { i, j, tuple: labels },
            });
        }
    }
    let mut p = Presentation::new(Kind::Semigroup, letters, provenance("Rn", Some(m), n));
    let e = |i: usize, j: usize, t: &[usize]| xn_letter(k, n, i, j, t);
    let mut sink = RelationSink::new();
    for (tag, chain) in base_chains(n) {
        let tag = format!("({tag})_n");
        for a in &all {
            let words: Vec<Word> = chain
                .iter()
                .map(|w| {
                    w.iter()
                        .enumerate()
                        .map(|(t, &(i, j))| e(i, j, if t == 0 { a } else { &one_tuple }))
                        .collect()
                })
                .collect();
            sink.chain(&tag, &words);
        }
    }
    for (i, j) in ordered_pairs(n) {
        for (kk, l) in ordered_pairs(n) {
            for a in &all {
                for b in &all {
                    let c: Vec<usize> = (1..=n)
                        .map(|t| {
                            let shifted = if t == j { i } else { t };
                            m.mul(a[t - 1], b[shifted - 1])
                        })
                        .collect();
                    sink.push(
                        "(R7)_n",
                        vec![e(i, j, a), e(kk, l, b)],
                        vec![e(i, j, &c), e(kk, l, &one_tuple)],
                    );
                }
            }
        }
    }
    p.relations = sink.finish();
    Ok(p)
}

/// Switches for [`emit_r2_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct R2Options {
    /// Omit the second equation of (R4a)_2 and the first of (R4b)_2. Each
    /// omitted equation is an instance of a kept one, so only tags change.
    pub drop_redundant_r4: bool,
}

/// `⟨X_2 | R_2⟩` for `M≀Sing_n`.
pub fn emit_r2(m: &FiniteMonoid, n: usize) -> Result<Presentation> {
    emit_r2_with(m, n, R2Options::default())
}

pub fn emit_r2_with(m: &FiniteMonoid, n: usize, opts: R2Options) -> Result<Presentation> {
    check_degree(n)?;
    let k = m.order();
    let pairs = (n * (n - 1)) as u128;
    check_size("R_2 alphabet", pairs * (k * k) as u128, MAX_LETTERS)?;
    let quads = if n >= 4 {
        (n * (n - 1) * (n - 2) * (n - 3)) as u128
    } else {
        0
    };
    let triples = (n * (n - 1) * n.saturating_sub(2)) as u128;
    let k4 = (k as u128).pow(4);
    check_size(
        "R_2 relations",
        2 * pairs * k4 + quads * k4 + triples * 6 * k4,
        MAX_RELATIONS,
    )?;
    let mut letters = Vec::new();
    for (i, j) in ordered_pairs(n) {
        for a in 0..k {
            for b in 0..k {
                letters.push(Letter {
                    name: format!("e[{i},{j};{},{}]", m.label(a), m.label(b)),
                    params: LetterParams::DoublyDecorated {
                        i,
                        j,
                        a: m.label(a).to_string(),
                        b: m.label(b).to_string(),
                    },
                });
            }
        }
    }
    let mut p = Presentation::new(Kind::Semigroup, letters, provenance("R2", Some(m), n));
    let e = |i: usize, j: usize, a: usize, b: usize| x2_letter(k, n, i, j, a, b);
    let mul = |a: usize, b: usize| m.mul(a, b);
    let one = m.identity();
    let ks = 0..k;
    let mut sink = RelationSink::new();

    for (i, j) in ordered_pairs(n) {
        for (a, b, c, d) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone(), ks.clone()) {
            sink.chain(
                "(R1)_2",
                &[
                    vec![e(i, j, a, b), e(i, j, c, d)],
                    vec![e(i, j, mul(a, c), mul(b, c))],
                    vec![e(j, i, b, a), e(i, j, d, c)],
                ],
            );
        }
    }
    for t in distinct(n, 4) {
        let (i, j, kk, l) = (t[0], t[1], t[2], t[3]);
        for (a, b, c, d) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone(), ks.clone()) {
            sink.push(
                "(R2)_2",
                vec![e(i, j, a, b), e(kk, l, c, d)],
                vec![e(kk, l, c, d), e(i, j, a, b)],
            );
        }
    }
    let triples = distinct(n, 3);
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b, c) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone()) {
            sink.push("(R3a)_2", vec![e(i, kk, a, b), e(j, kk, one, c)], vec![e(i, kk, a, b)]);
        }
    }
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b, c) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone()) {
            sink.push(
                "(R3b)_2",
                vec![e(i, kk, a, b), e(j, kk, c, one)],
                vec![e(kk, i, b, a), e(j, i, c, one), e(i, kk, one, one)],
            );
        }
    }
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b) in itertools::iproduct!(ks.clone(), ks.clone()) {
            sink.push(
                "(R3c)_2",
                vec![e(i, kk, a, a), e(j, kk, b, one)],
                vec![e(i, kk, one, one), e(j, kk, b, one), e(i, kk, a, one)],
            );
        }
    }
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b, c, d) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone(), ks.clone()) {
            let w = [
                vec![e(i, j, a, b), e(i, kk, c, d)],
                vec![e(i, kk, mul(a, c), d), e(i, j, one, mul(b, c))],
                vec![e(j, kk, mul(b, c), d), e(i, j, mul(a, c), one)],
            ];
            if opts.drop_redundant_r4 {
                sink.chain("(R4a)_2", &w[..2]);
            } else {
                sink.chain("(R4a)_2", &w);
            }
        }
    }
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b, c, d) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone(), ks.clone()) {
            let w = [
                vec![e(i, j, c, mul(a, d)), e(i, kk, one, mul(b, d))],
                vec![e(i, kk, c, mul(b, d)), e(i, j, one, mul(a, d))],
                vec![e(j, kk, a, b), e(i, j, c, d)],
            ];
            if opts.drop_redundant_r4 {
                sink.chain("(R4b)_2", &w[1..]);
            } else {
                sink.chain("(R4b)_2", &w);
            }
        }
    }
    for (tag, chain) in r5(n).into_iter().chain(r6(n)) {
        let words: Vec<Word> = chain
            .iter()
            .map(|w| w.iter().map(|&(i, j)| e(i, j, one, one)).collect())
            .collect();
        sink.chain(&format!("({tag})_2"), &words);
    }
    p.relations = sink.finish();
    Ok(p)
}

/// The families (R2)_1–(R6)_1, shared by `R_1` and `R_1'`.
fn r1_common(sink: &mut RelationSink, m: &FiniteMonoid, n: usize, e: &dyn Fn(usize, usize, usize) -> usize) {
    let k = m.order();
    let one = m.identity();
    let ks = 0..k;
    for t in distinct(n, 4) {
        let (i, j, kk, l) = (t[0], t[1], t[2], t[3]);
        for (a, b) in itertools::iproduct!(ks.clone(), ks.clone()) {
            sink.push("(R2)_1", vec![e(i, j, a), e(kk, l, b)], vec![e(kk, l, b), e(i, j, a)]);
        }
    }
    let triples = distinct(n, 3);
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b) in itertools::iproduct!(ks.clone(), ks.clone()) {
            sink.push("(R3a)_1", vec![e(i, kk, a), e(j, kk, b)], vec![e(i, kk, a)]);
        }
    }
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for a in ks.clone() {
            sink.push(
                "(R3b)_1",
                vec![e(i, j, one), e(j, kk, a), e(kk, j, one)],
                vec![e(j, i, one), e(i, kk, a), e(kk, i, one), e(i, j, one)],
            );
        }
    }
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b) in itertools::iproduct!(ks.clone(), ks.clone()) {
            sink.push(
                "(R3c)_1",
                vec![e(i, j, one), e(j, i, a), e(i, kk, b)],
                vec![e(j, i, one), e(i, kk, b), e(kk, j, a), e(j, kk, one)],
            );
        }
    }
    for t in &triples {
        let (i, j, kk) = (t[0], t[1], t[2]);
        for (a, b) in itertools::iproduct!(ks.clone(), ks.clone()) {
            let ab = m.mul(a, b);
            sink.chain(
                "(R4)_1",
                &[
                    vec![e(i, j, b), e(i, kk, ab)],
                    vec![e(i, kk, ab), e(i, j, b)],
                    vec![e(j, kk, a), e(i, j, b)],
                ],
            );
        }
    }
    for (tag, chain) in r5(n).into_iter().chain(r6(n)) {
        let words: Vec<Word> = chain
            .iter()
            .map(|w| w.iter().map(|&(i, j)| e(i, j, one)).collect())
            .collect();
        sink.chain(&format!("({tag})_1"), &words);
    }
}

fn r1b(sink: &mut RelationSink, m: &FiniteMonoid, n: usize, e: &dyn Fn(usize, usize, usize) -> usize) {
    let one = m.identity();
    for (i, j) in ordered_pairs(n) {
        for (a, b) in itertools::iproduct!(0..m.order(), 0..m.order()) {
            sink.push(
                "(R1b)_1",
                vec![e(i, j, one), e(j, i, a), e(i, j, b)],
                vec![e(j, i, one), e(i, j, m.mul(a, b))],
            );
        }
    }
}

fn check_r1_size(m: &FiniteMonoid, n: usize) -> Result<()> {
    let k = m.order() as u128;
    let pairs = (n * (n - 1)) as u128;
    check_size("R_1 alphabet", pairs * k, MAX_LETTERS)?;
    check_size(
        "R_1 relations",
        (pairs + (n as u128).pow(4)) * k.pow(3) * 4,
        MAX_RELATIONS,
    )
}

/// `⟨X_1 | R_1⟩` for `M≀Sing_n` when `M/L` is a chain.
pub fn emit_r1(m: &FiniteMonoid, n: usize) -> Result<Presentation> {
    chain_data(m)?;
    emit_r1_unchecked(m, n)
}

/// [`emit_r1`] without the chain hypothesis, for negative experiments.
pub fn emit_r1_unchecked(m: &FiniteMonoid, n: usize) -> Result<Presentation> {
    check_degree(n)?;
    check_r1_size(m, n)?;
    let k = m.order();
    let one = m.identity();
    let mut p = Presentation::new(Kind::Semigroup, x1_letters(m, n), provenance("R1", Some(m), n));
    let e = move |i: usize, j: usize, a: usize| x1_letter(k, n, i, j, a);
    let mut sink = RelationSink::new();
    let ks = 0..k;
    for (i, j) in ordered_pairs(n) {
        for (a, b) in itertools::iproduct!(ks.clone(), ks.clone()) {
            sink.push("(R1a)_1", vec![e(i, j, a), e(i, j, b)], vec![e(i, j, a)]);
        }
    }
    r1b(&mut sink, m, n, &e);
    for (i, j) in ordered_pairs(n) {
        for (a, b, c) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone()) {
            if m.mul(a, c) == m.mul(b, c) {
                sink.push("(R1c)_1", vec![e(j, i, a), e(i, j, c)], vec![e(j, i, b), e(i, j, c)]);
            }
        }
    }
    for (i, j) in ordered_pairs(n) {
        for (a, b, c) in itertools::iproduct!(ks.clone(), ks.clone(), ks.clone()) {
            if m.mul(m.mul(a, b), c) == c {
                sink.push(
                    "(R1d)_1",
                    vec![e(i, j, b), e(j, i, c), e(i, j, one)],
                    vec![e(j, i, a), e(i, j, m.mul(b, c))],
                );
            }
        }
    }
    for (i, j) in ordered_pairs(n) {
        sink.push("(R1e)_1", vec![e(j, i, one), e(i, j, one)], vec![e(i, j, one)]);
    }
    r1_common(&mut sink, m, n, &e);
    p.relations = sink.finish();
    Ok(p)
}

/// `⟨X_1 | R_1'⟩` for `G≀Sing_n` with `G` a group.
pub fn emit_r1p(g: &FiniteMonoid, n: usize) -> Result<Presentation> {
    if !g.is_group() {
        return Err(Error::Precondition(format!("{} is not a group", g.name())));
    }
    check_degree(n)?;
    check_r1_size(g, n)?;
    let mut p = Presentation::new(Kind::Semigroup, x1_letters(g, n), provenance("R1p", Some(g), n));
    let k = g.order();
    let e = move |i: usize, j: usize, a: usize| x1_letter(k, n, i, j, a);
    let mut sink = RelationSink::new();
    r1p_into(&mut sink, g, n, &e);
    p.relations = sink.finish();
    Ok(p)
}

fn r1p_into(sink: &mut RelationSink, g: &FiniteMonoid, n: usize, e: &dyn Fn(usize, usize, usize) -> usize) {
    for (i, j) in ordered_pairs(n) {
        for (a, b) in itertools::iproduct!(0..g.order(), 0..g.order()) {
            let inv = g.inverse(a).expect("groups have inverses");
            sink.chain(
                "(R1a)'_1",
                &[
                    vec![e(i, j, a), e(i, j, b)],
                    vec![e(i, j, a)],
                    vec![e(j, i, inv), e(i, j, a)],
                ],
            );
        }
    }
    r1b(sink, g, n, e);
    r1_common(sink, g, n, e);
}

/// A monoid presentation `⟨Y | Q⟩` of `𝔼(M)`, each letter naming a
/// non-identity element of `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EBase {
    pub names: Vec<String>,
    pub images: Vec<usize>,
    pub relations: Vec<(Word, Word)>,
}

impl EBase {
    pub fn new(m: &FiniteMonoid, images: Vec<usize>, relations: Vec<(Word, Word)>) -> Result<Self> {
        if let Some(&y) = images.iter().find(|&&y| y >= m.order() || y == m.identity()) {
            return Err(Error::Precondition(format!(
                "base letters must name non-identity elements of {}; got index {y}",
                m.name()
            )));
        }
        if relations
            .iter()
            .any(|(u, v)| u.iter().chain(v).any(|&x| x >= images.len()))
        {
            return Err(Error::MalformedPresentation(
                "base relation uses an unknown letter".into(),
            ));
        }
        let names = (1..=images.len()).map(|t| format!("y{t}")).collect();
        Ok(EBase {
            names,
            images,
            relations,
        })
    }

    /// `Y = E(M) ∖ {1}` with the closure rules as `Q`.
    pub fn from_idempotents(m: &FiniteMonoid) -> Result<Self> {
        let ys: Vec<usize> = m.idempotents().into_iter().filter(|&e| e != m.identity()).collect();
        if ys.is_empty() {
            return EBase::new(m, Vec::new(), Vec::new());
        }
        let s = close(&ys, |&a, &b| m.mul(a, b), m.order() + 1)?;
        EBase::new(m, ys, s.rules().to_vec())
    }

    /// The base presentation as a monoid presentation in its own right.
    pub fn presentation(&self, m: &FiniteMonoid) -> Presentation {
        let letters = self
            .names
            .iter()
            .zip(&self.images)
            .map(|(name, &y)| Letter {
                name: name.clone(),
                params: LetterParams::Coordinate {
                    base: m.label(y).to_string(),
                    coord: 0,
                },
            })
            .collect();
        let mut p = Presentation::new(
            Kind::Monoid,
            letters,
            Provenance {
                family: "E(M)".into(),
                monoid: Some(m.name().to_string()),
                n: None,
            },
        );
        let mut sink = RelationSink::new();
        for (u, v) in &self.relations {
            sink.push("Q", u.clone(), v.clone());
        }
        p.relations = sink.finish();
        p
    }
}

/// `⟨Ȳ ∪ X_1 | Q̄ ∪ R_C ∪ R_1' ∪ R_∇⟩` for the idempotent-generated part of
/// `M≀T_n`, with `X_1` ranging over the group of units.
pub fn emit_e_wreath_monoid(m: &FiniteMonoid, n: usize, base: &EBase) -> Result<Presentation> {
    check_degree(n)?;
    check_e_hypothesis(m)?;
    let base = EBase::new(m, base.images.clone(), base.relations.clone())?;
    let g = m.group_of_units();
    let ny = base.images.len();
    let kg = g.order();
    check_size("E-monoid alphabet", (n * ny + n * (n - 1) * kg) as u128, MAX_LETTERS)?;
    check_r1_size(&g, n)?;

    let units = m.units();
    if let Some(&y) = base.images.iter().find(|y| units.contains(y)) {
        return Err(Error::Precondition(format!(
            "base letter image `{}` is a unit of {}",
            m.label(y),
            m.name()
        )));
    }
    let h = h_words(m, &base)?;
    let to_m = |a: usize| m.position(g.label(a)).expect("units keep their labels");

    let mut letters = Vec::new();
    for i in 1..=n {
        for (name, &y) in base.names.iter().zip(&base.images) {
            letters.push(Letter {
                name: format!("{name}({i})"),
                params: LetterParams::Coordinate {
                    base: m.label(y).to_string(),
                    coord: i,
                },
            });
        }
    }
    letters.extend(x1_letters(&g, n));
    let mut p = Presentation::new(Kind::Monoid, letters, provenance("Emonoid", Some(m), n));

    let y = |i: usize, t: usize| (i - 1) * ny + t;
    let offset = n * ny;
    let e = move |i: usize, j: usize, a: usize| offset + x1_letter(kg, n, i, j, a);
    // every product below lands in M∖G, where h is defined
    let hw = |c: usize, i: usize| -> Word {
        h[c].as_ref()
            .expect("non-units have h-words")
            .iter()
            .map(|&t| y(i, t))
            .collect()
    };
    let g_one = g.identity();

    let mut sink = RelationSink::new();
    for i in 1..=n {
        for (u, v) in &base.relations {
            sink.push(
                "Q",
                u.iter().map(|&t| y(i, t)).collect(),
                v.iter().map(|&t| y(i, t)).collect(),
            );
        }
    }
    for (i, j) in ordered_pairs(n) {
        for (s, t) in itertools::iproduct!(0..ny, 0..ny) {
            sink.push("RC", vec![y(i, s), y(j, t)], vec![y(j, t), y(i, s)]);
        }
    }
    r1p_into(&mut sink, &g, n, &e);
    for (i, j) in ordered_pairs(n) {
        for (a, t) in itertools::iproduct!(0..kg, 0..ny) {
            let ybar = base.images[t];
            let mut rhs = vec![y(i, t)];
            rhs.extend(hw(m.mul(to_m(a), ybar), j));
            rhs.push(e(i, j, g_one));
            sink.push("(∇1a)", vec![e(i, j, a), y(i, t)], rhs);
        }
        for (a, t) in itertools::iproduct!(0..kg, 0..ny) {
            sink.push("(∇1b)", vec![e(i, j, a), y(j, t)], vec![e(i, j, a)]);
        }
        for (a, t) in itertools::iproduct!(0..kg, 0..ny) {
            for kk in (1..=n).filter(|&kk| kk != i && kk != j) {
                sink.push("(∇1c)", vec![e(i, j, a), y(kk, t)], vec![y(kk, t), e(i, j, a)]);
            }
        }
        for (a, t) in itertools::iproduct!(0..kg, 0..ny) {
            let mut rhs = hw(m.mul(base.images[t], to_m(a)), j);
            rhs.push(e(i, j, g_one));
            sink.push("(∇2)", vec![y(j, t), e(i, j, a)], rhs);
        }
        for (a, b, t) in itertools::iproduct!(0..kg, 0..kg, 0..ny) {
            let c = m.mul(m.mul(base.images[t], to_m(a)), to_m(b));
            let mut rhs = hw(c, i);
            rhs.push(e(i, j, b));
            sink.push("(∇3)", vec![y(i, t), e(j, i, a), e(i, j, b)], rhs);
        }
    }
    p.relations = sink.finish();
    Ok(p)
}

/// Short-lex least words over `Y` for every element of `⟨Y⟩ ∪ {1}`;
/// `None` on the other units. Fails if a non-unit is missed.
fn h_words(m: &FiniteMonoid, base: &EBase) -> Result<Vec<Option<Word>>> {
    let mut h: Vec<Option<Word>> = vec![None; m.order()];
    h[m.identity()] = Some(Vec::new());
    if !base.images.is_empty() {
        let s = close(&base.images, |&a, &b| m.mul(a, b), m.order() + 1)?;
        for (idx, &c) in s.elements().iter().enumerate() {
            h[c] = Some(s.factorization(idx).to_vec());
        }
    }
    let units = m.units();
    if let Some(c) = (0..m.order()).find(|c| h[*c].is_none() && !units.contains(c)) {
        return Err(Error::Precondition(format!(
            "base letters do not generate `{}` ∈ 𝔼({})",
            m.label(c),
            m.name()
        )));
    }
    Ok(h)
}
