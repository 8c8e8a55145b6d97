//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Expected values come from a deliberately naive model of `M≀T_n` kept in
//! this file (tuples and image lists multiplied straight from the
//! definition), not from the library.

use std::collections::{HashSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use wreathkit::enumerate::close;
use wreathkit::fixtures;
use wreathkit::monoid::FiniteMonoid;
use wreathkit::presentation::{
    chain_data, emit_e_wreath_monoid, emit_r, emit_r1, emit_r1_unchecked, emit_r1p, emit_r2, emit_rn,
    images_e_wreath_monoid, images_r, images_x1, images_x2, images_xn, soundness, word_e_x1, word_e_x2, EBase,
    EvaluationMap, LetterParams, Presentation, SoundnessReport, TransformationTarget,
};
use wreathkit::rank::{brute_rank, rank_formulas, tournament_check, RankOptions};
use wreathkit::todd_coxeter::todd_coxeter;
use wreathkit::transformation::{enumerate, epsilon, Part, Transformation};
use wreathkit::verify::{verify, Verdict, VerifyOptions};
use wreathkit::wreath::{ordered_pairs, CountMethod, Family, WreathContext, WreathElement, WreathPart};

// Every count and every set comparison is exact: no tolerance.

/// Wall-clock budgets per criterion.
const BUDGET_IDEMPOTENTS: Duration = Duration::from_secs(30);
const BUDGET_GENERATION: Duration = Duration::from_secs(60);
const BUDGET_THEOREM_IG: Duration = Duration::from_secs(120);
const BUDGET_RANK: Duration = Duration::from_secs(120);
const BUDGET_CERTIFICATION: Duration = Duration::from_secs(600);
const BUDGET_SOUNDNESS: Duration = Duration::from_secs(120);
const BUDGET_SUBSTITUTION: Duration = Duration::from_secs(60);
const BUDGET_DETERMINISM: Duration = Duration::from_secs(600);

/// Relation-order shuffles per presentation.
const SHUFFLES: usize = 6;
const SHUFFLE_SEED: u64 = 0x5eed;

mod naive {
    use super::*;

    /// `(tuple, images)` with 1-based images.
    pub type El = (Vec<usize>, Vec<usize>);

    pub struct Model {
        pub table: Vec<Vec<usize>>,
        pub one: usize,
        pub labels: Vec<String>,
    }

    impl Model {
        pub fn of(m: &FiniteMonoid) -> Self {
            Model {
                table: m.rows(),
                one: m.identity(),
                labels: m.labels().to_vec(),
            }
        }

        pub fn trivial() -> Self {
            Model {
                table: vec![vec![0]],
                one: 0,
                labels: vec!["1".into()],
            }
        }

        pub fn order(&self) -> usize {
            self.table.len()
        }

        fn label(&self, l: &str) -> usize {
            self.labels.iter().position(|x| x == l).expect("known label")
        }

        /// `(𝐚,α)(𝐛,β) = ((a_i b_{iα}), αβ)`.
        pub fn mul(&self, x: &El, y: &El) -> El {
            let n = x.1.len();
            let tuple = (0..n).map(|i| self.table[x.0[i]][y.0[x.1[i] - 1]]).collect();
            let images = (0..n).map(|i| y.1[x.1[i] - 1]).collect();
            (tuple, images)
        }

        pub fn one(&self, n: usize) -> El {
            (vec![self.one; n], (1..=n).collect())
        }

        pub fn eps(&self, n: usize, i: usize, j: usize, tuple: Vec<usize>) -> El {
            let mut images: Vec<usize> = (1..=n).collect();
            images[j - 1] = i;
            (tuple, images)
        }

        pub fn eps_ab(&self, n: usize, i: usize, j: usize, a: usize, b: usize) -> El {
            let mut t = vec![self.one; n];
            t[i - 1] = a;
            t[j - 1] = b;
            self.eps(n, i, j, t)
        }

        pub fn elements(&self, n: usize, singular: bool) -> Vec<El> {
            let maps = odometer(n, n);
            let tuples = odometer(self.order(), n);
            let mut out = Vec::new();
            for m in &maps {
                let images: Vec<usize> = m.iter().map(|x| x + 1).collect();
                let injective = images.iter().collect::<HashSet<_>>().len() == n;
                if singular && injective {
                    continue;
                }
                for t in &tuples {
                    out.push((t.clone(), images.clone()));
                }
            }
            out
        }

        pub fn closure(&self, gens: &[El]) -> HashSet<El> {
            let mut seen: HashSet<El> = gens.iter().cloned().collect();
            let mut queue: VecDeque<El> = seen.iter().cloned().collect();
            while let Some(x) = queue.pop_front() {
                for g in gens {
                    let y = self.mul(&x, g);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            seen
        }

        pub fn is_idempotent(&self, x: &El) -> bool {
            self.mul(x, x) == *x
        }

        pub fn leq_l(&self, a: usize, b: usize) -> bool {
            (0..self.order()).any(|c| self.table[c][b] == a)
        }

        pub fn is_l_chain(&self) -> bool {
            let k = self.order();
            (0..k).all(|a| (0..k).all(|b| self.leq_l(a, b) || self.leq_l(b, a)))
        }

        /// Some kernel pair `i ≠ j` of `α` has `a_i ≤_L a_j`.
        pub fn sigma(&self, x: &El) -> bool {
            let n = x.1.len();
            (0..n).any(|i| (0..n).any(|j| i != j && x.1[i] == x.1[j] && self.leq_l(x.0[i], x.0[j])))
        }

        /// The intended image of a letter, read off its parameters.
        pub fn image(&self, n: usize, p: &LetterParams) -> El {
            match p {
                LetterParams::Transformation { i, j } => self.eps(n, *i, *j, vec![self.one; n]),
                LetterParams::Decorated { i, j, a } => self.eps_ab(n, *i, *j, self.one, self.label(a)),
                LetterParams::DoublyDecorated { i, j, a, b } => self.eps_ab(n, *i, *j, self.label(a), self.label(b)),
                LetterParams::TupleDecorated { i, j, tuple } => {
                    self.eps(n, *i, *j, tuple.iter().map(|l| self.label(l)).collect())
                }
                LetterParams::Coordinate { base, coord } => {
                    let mut t = vec![self.one; n];
                    t[coord - 1] = self.label(base);
                    (t, (1..=n).collect())
                }
                other => panic!("no wreath image for {other:?}"),
            }
        }

        pub fn eval(&self, n: usize, images: &[El], w: &[usize]) -> El {
            w.iter().fold(self.one(n), |acc, &x| self.mul(&acc, &images[x]))
        }
    }

    pub fn odometer(base: usize, len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut d = vec![0; len];
        loop {
            out.push(d.clone());
            let mut pos = len;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                d[pos] += 1;
                if d[pos] < base {
                    break;
                }
                d[pos] = 0;
            }
        }
    }

    pub fn lib(x: &WreathElement) -> El {
        (x.tuple.clone(), x.trans.images())
    }

    pub fn binomial(n: u128, k: u128) -> u128 {
        (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
    }

    pub fn factorial(n: u128) -> u128 {
        (1..=n).product()
    }
}

use naive::{lib, Model};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact(got: u128, want: u128, what: impl FnOnce() -> String) -> Result<(), String> {
    ensure(got == want, || format!("{}: got {got}, want {want}", what()))
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn criterion_idempotents() -> Outcome {
    let mut checked = 0;
    for m in fixtures::acceptance_monoids() {
        let model = Model::of(&m);
        for n in 2..=3 {
            for singular in [false, true] {
                let part = if singular {
                    WreathPart::Singular
                } else {
                    WreathPart::Full
                };
                let ctx = WreathContext::new(m.clone(), n, part).map_err(err)?;
                let formula = ctx.count_idempotents(CountMethod::Formula).map_err(err)?;
                let brute = ctx.count_idempotents(CountMethod::Brute).map_err(err)?;
                let oracle = model
                    .elements(n, singular)
                    .iter()
                    .filter(|x| model.is_idempotent(x))
                    .count() as u128;
                let what = || format!("{} n={n} singular={singular}", m.name());
                exact(formula, oracle, what)?;
                exact(brute, oracle, what)?;
                checked += 1;
            }
        }
    }
    for n in 1..=5u128 {
        let want: u128 = (1..=n).map(|k| naive::binomial(n, k) * k.pow((n - k) as u32)).sum();
        let ctx = WreathContext::full(fixtures::trivial(), n as usize).map_err(err)?;
        exact(ctx.count_idempotents(CountMethod::Formula).map_err(err)?, want, || {
            format!("|E(T_{n})|")
        })?;
    }
    Ok(format!("{checked} (M, n, part) cases, |E(T_n)| for n ≤ 5"))
}

fn criterion_generation() -> Outcome {
    for n in 2..=4usize {
        let x = images_r(n).map_err(err)?.images;
        let s = close(&x, |a, b| a.compose(b).unwrap(), 1_000_000).map_err(err)?;
        let got: HashSet<&Transformation> = s.elements().iter().collect();
        let sing = enumerate(n, Part::Singular).map_err(err)?;
        let want: HashSet<&Transformation> = sing.iter().collect();
        let order = (n as u128).pow(n as u32) - naive::factorial(n as u128);
        exact(want.len() as u128, order, || format!("|Sing_{n}|"))?;
        ensure(got == want, || format!("⟨X⟩ ≠ Sing_{n}"))?;
    }
    let pairs = ordered_pairs(3);
    let sing3 = enumerate(3, Part::Singular).map_err(err)?.len();
    let mut generating = 0;
    for mask in 0u32..64 {
        let chosen: Vec<(usize, usize)> = (0..6).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        let gens: Vec<Transformation> = chosen.iter().map(|&(i, j)| epsilon(3, i, j).unwrap()).collect();
        let by_closure =
            !gens.is_empty() && close(&gens, |a, b| a.compose(b).unwrap(), 1000).map_err(err)?.len() == sing3;
        let by_graph = tournament_check(3, &chosen).map_err(err)?.generates;
        ensure(by_graph == by_closure, || {
            format!("{chosen:?}: graph {by_graph}, closure {by_closure}")
        })?;
        generating += by_closure as usize;
    }
    // supersets of either directed 3-cycle: 2·2³ − 1
    ensure(generating == 15, || format!("{generating} generating subsets, want 15"))?;
    Ok("n = 2..4; 64/64 subsets agree, 15 generate".into())
}

fn criterion_theorem_ig() -> Outcome {
    let mut cases = 0;
    for m in fixtures::acceptance_monoids() {
        let model = Model::of(&m);
        ensure(m.is_l_chain() == model.is_l_chain(), || {
            format!("{}: L-chain flag", m.name())
        })?;
        for n in 2..=3 {
            let ctx = WreathContext::singular(m.clone(), n).map_err(err)?;
            let whole: HashSet<naive::El> = model.elements(n, true).into_iter().collect();
            let closed = |f: Family| -> Result<HashSet<naive::El>, String> {
                let g = ctx.gen_family(f).map_err(err)?;
                Ok(ctx
                    .close(&g, 1_000_000)
                    .map_err(err)?
                    .elements()
                    .iter()
                    .map(lib)
                    .collect())
            };
            let what = |s: &str| format!("{} n={n}: {s}", m.name());
            ensure(closed(Family::Xn)? == whole, || what("⟨X_n⟩ ≠ M≀Sing_n"))?;
            ensure(closed(Family::X2)? == whole, || what("⟨X_2⟩ ≠ M≀Sing_n"))?;
            let sigma: HashSet<naive::El> = whole.iter().filter(|x| model.sigma(x)).cloned().collect();
            ensure(closed(Family::X1)? == sigma, || what("⟨X_1⟩ ≠ Σ"))?;
            for x in ctx.elements().map_err(err)? {
                ensure(ctx.sigma_membership(&x).map_err(err)? == model.sigma(&lib(&x)), || {
                    what("Σ predicate")
                })?;
            }
            let idem: Vec<naive::El> = whole.iter().filter(|x| model.is_idempotent(x)).cloned().collect();
            let id_generated = model.closure(&idem) == whole;
            ensure(id_generated == m.is_l_chain(), || {
                what(&format!(
                    "idempotent generated = {id_generated}, L-chain = {}",
                    m.is_l_chain()
                ))
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (M, n) cases"))
}

fn criterion_rank() -> Outcome {
    let mut notes = Vec::new();
    for (m, want) in [(fixtures::cyclic(2), (2, 2)), (fixtures::b01(), (3, 4))] {
        let ctx = WreathContext::singular(m.clone(), 2).map_err(err)?;
        let s = ctx.enumerate(1000).map_err(err)?;
        let all: Vec<usize> = (0..s.len()).collect();
        let rank = brute_rank(&s, &all, RankOptions::default()).map_err(err)?.k;
        let idopts = RankOptions {
            idempotents_only: true,
            ..RankOptions::default()
        };
        let idrank = brute_rank(&s, &all, idopts).map_err(err)?.k;
        ensure((rank, idrank) == (Some(want.0), Some(want.1)), || {
            format!("{}: brute ({rank:?}, {idrank:?}), want {want:?}", m.name())
        })?;
        let f = rank_formulas(&m, 2).map_err(err)?;
        ensure(
            (f.exact_rank, f.exact_idrank) == (Some(want.0 as u128), Some(want.1 as u128)),
            || format!("{}: formula ({:?}, {:?})", m.name(), f.exact_rank, f.exact_idrank),
        )?;
        notes.push(format!("{} {want:?}", m.name()));
    }

    let x = images_r(3).map_err(err)?.images;
    let s3 = close(&x, |a, b| a.compose(b).unwrap(), 1000).map_err(err)?;
    let all: Vec<usize> = (0..s3.len()).collect();
    let rank = brute_rank(&s3, &all, RankOptions::default()).map_err(err)?.k;
    let idpool: Vec<usize> = s3.generators().to_vec();
    let idrank = brute_rank(
        &s3,
        &idpool,
        RankOptions {
            idempotents_only: true,
            ..RankOptions::default()
        },
    )
    .map_err(err)?
    .k;
    ensure((rank, idrank) == (Some(3), Some(3)), || {
        format!("Sing_3: ({rank:?}, {idrank:?})")
    })?;
    notes.push("Sing_3 (3, 3)".into());

    let rz = fixtures::rz1();
    let ctx = WreathContext::singular(rz.clone(), 2).map_err(err)?;
    let s = ctx.enumerate(1000).map_err(err)?;
    let all: Vec<usize> = (0..s.len()).collect();
    let k = brute_rank(&s, &all, RankOptions::default())
        .map_err(err)?
        .k
        .ok_or("RZ1: no generating set")? as u128;
    // |M| = 3, |G| = 1, n = 2, binomial(2, 2) = 1
    let (lower, upper) = (2 * 3 - 1, 3 * 3 + 1);
    let f = rank_formulas(&rz, 2).map_err(err)?;
    ensure((f.lower, f.upper) == (lower, upper), || {
        format!("RZ1 bounds ({}, {})", f.lower, f.upper)
    })?;
    ensure(lower <= k && k <= upper, || {
        format!("RZ1 brute rank {k} outside [{lower}, {upper}]")
    })?;
    notes.push(format!("RZ1 brute rank {k} in [{lower}, {upper}]"));
    Ok(notes.join("; "))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Fam {
    R,
    Rn,
    R2,
    R1,
    R1p,
    E,
}

struct Case {
    fam: Fam,
    m: FiniteMonoid,
    n: usize,
    p: Presentation,
}

impl Case {
    fn label(&self) -> String {
        match self.fam {
            Fam::R => format!("R n={}", self.n),
            f => format!("{f:?} {} n={}", self.m.name(), self.n),
        }
    }

    fn model(&self) -> Model {
        match self.fam {
            Fam::R => Model::trivial(),
            _ => Model::of(&self.m),
        }
    }

    /// Size of the semigroup the presentation should define, from the model.
    fn expected_size(&self) -> usize {
        let model = self.model();
        match self.fam {
            Fam::E => {
                let idem: Vec<naive::El> = model
                    .elements(self.n, false)
                    .into_iter()
                    .filter(|x| model.is_idempotent(x))
                    .collect();
                model.closure(&idem).len()
            }
            _ => model.elements(self.n, true).len(),
        }
    }

    fn images(&self) -> Vec<naive::El> {
        let model = self.model();
        self.p.letters.iter().map(|l| model.image(self.n, &l.params)).collect()
    }

    fn verify(&self, p: &Presentation) -> Result<Verdict, String> {
        let opts = VerifyOptions::default();
        let v = match self.fam {
            Fam::R => {
                let t = TransformationTarget { degree: self.n };
                let map = images_r(self.n).map_err(err)?;
                let carrier = close(&map.images, |a, b| a.compose(b).unwrap(), 1_000_000).map_err(err)?;
                verify(p, &map, &t, &carrier, opts)
            }
            Fam::E => {
                let ctx = WreathContext::full(self.m.clone(), self.n).map_err(err)?;
                let base = EBase::from_idempotents(&self.m).map_err(err)?;
                let idem: Vec<WreathElement> = ctx
                    .elements()
                    .map_err(err)?
                    .into_iter()
                    .filter(|x| ctx.is_idempotent(x))
                    .collect();
                let carrier = ctx.close(&idem, 1_000_000).map_err(err)?;
                let map = images_e_wreath_monoid(&ctx, &base).map_err(err)?;
                verify(p, &map, &ctx, &carrier, opts)
            }
            fam => {
                let ctx = WreathContext::singular(self.m.clone(), self.n).map_err(err)?;
                let map: EvaluationMap<WreathElement> = match fam {
                    Fam::Rn => images_xn(&ctx),
                    Fam::R2 => images_x2(&ctx),
                    _ => images_x1(&ctx),
                }
                .map_err(err)?;
                let carrier = ctx.enumerate(1_000_000).map_err(err)?;
                verify(p, &map, &ctx, &carrier, opts)
            }
        };
        Ok(v.map_err(err)?.verdict)
    }
}

fn matrix() -> Vec<Case> {
    let mut cases = Vec::new();
    let small = [fixtures::trivial(), fixtures::cyclic(2), fixtures::b01()];
    for n in 2..=3 {
        cases.push(Case {
            fam: Fam::R,
            m: fixtures::trivial(),
            n,
            p: emit_r(n).unwrap(),
        });
        for m in &small {
            cases.push(Case {
                fam: Fam::Rn,
                m: m.clone(),
                n,
                p: emit_rn(m, n).unwrap(),
            });
            cases.push(Case {
                fam: Fam::R2,
                m: m.clone(),
                n,
                p: emit_r2(m, n).unwrap(),
            });
        }
        for m in [fixtures::b01(), fixtures::trivial()] {
            cases.push(Case {
                fam: Fam::R1,
                p: emit_r1(&m, n).unwrap(),
                m,
                n,
            });
        }
        for m in [fixtures::cyclic(2), fixtures::cyclic(3)] {
            cases.push(Case {
                fam: Fam::R1p,
                p: emit_r1p(&m, n).unwrap(),
                m,
                n,
            });
        }
    }
    for m in [fixtures::cyclic(2), fixtures::full_transformation_monoid(2)] {
        let base = EBase::from_idempotents(&m).unwrap();
        cases.push(Case {
            fam: Fam::E,
            p: emit_e_wreath_monoid(&m, 2, &base).unwrap(),
            m,
            n: 2,
        });
    }
    cases
}

fn criterion_certification() -> Outcome {
    let mut lines = Vec::new();
    for case in matrix() {
        let want = case.expected_size();
        match case.verify(&case.p)? {
            Verdict::Certified { classes } if classes == want => lines.push(format!("{}={classes}", case.label())),
            v => return Err(format!("{}: {v:?}, want certified {want}", case.label())),
        }
    }
    Ok(lines.join(", "))
}

fn library_soundness(case: &Case, p: &Presentation) -> Result<SoundnessReport, String> {
    let n = case.n;
    match case.fam {
        Fam::R => soundness(p, &images_r(n).map_err(err)?, &TransformationTarget { degree: n }),
        Fam::E => {
            let ctx = WreathContext::full(case.m.clone(), n).map_err(err)?;
            let base = EBase::from_idempotents(&case.m).map_err(err)?;
            soundness(p, &images_e_wreath_monoid(&ctx, &base).map_err(err)?, &ctx)
        }
        fam => {
            let ctx = WreathContext::singular(case.m.clone(), n).map_err(err)?;
            let map = match fam {
                Fam::Rn => images_xn(&ctx),
                Fam::R2 => images_x2(&ctx),
                _ => images_x1(&ctx),
            }
            .map_err(err)?;
            soundness(p, &map, &ctx)
        }
    }
    .map_err(err)
}

fn criterion_soundness() -> Outcome {
    let mut relations = 0;
    let mut mutations = 0;
    for case in matrix() {
        let model = case.model();
        let images = case.images();
        let n = case.n;
        for (k, r) in case.p.relations.iter().enumerate() {
            ensure(model.eval(n, &images, &r.lhs) == model.eval(n, &images, &r.rhs), || {
                format!("{}: relation {k} ({}) fails in the model", case.label(), r.tag)
            })?;
        }
        relations += case.p.relations.len();

        // the first single-letter shift, over relations and then positions
        // (left side first), that changes a relation's truth in the model
        let letters = case.p.letters.len();
        let mut detected = false;
        'search: for (k, r) in case.p.relations.iter().enumerate() {
            for pos in 0..r.lhs.len() + r.rhs.len() {
                let mut bad = r.clone();
                let slot = if pos < r.lhs.len() {
                    &mut bad.lhs[pos]
                } else {
                    &mut bad.rhs[pos - r.lhs.len()]
                };
                *slot = (*slot + 1) % letters;
                if model.eval(n, &images, &bad.lhs) == model.eval(n, &images, &bad.rhs) {
                    continue;
                }
                let mut p = case.p.clone();
                p.relations[k] = bad;
                let rep = library_soundness(&case, &p)?;
                let flagged: Vec<usize> = rep.failures.iter().map(|f| f.index).collect();
                ensure(flagged == vec![k], || {
                    format!("{}: mutation of {k} flagged {flagged:?}", case.label())
                })?;
                detected = true;
                mutations += 1;
                break 'search;
            }
        }
        ensure(detected, || format!("{}: no detectable mutation", case.label()))?;

        let unmutated = library_soundness(&case, &case.p)?;
        ensure(unmutated.is_sound(), || format!("{}: library soundness", case.label()))?;
    }
    Ok(format!(
        "{relations} relations hold in the model; {mutations} mutations detected"
    ))
}

fn criterion_substitution() -> Outcome {
    let mut words = 0;
    for m in [fixtures::trivial(), fixtures::cyclic(2), fixtures::b01()] {
        let model = Model::of(&m);
        let k = m.order();
        for n in 2..=3 {
            let r2 = emit_r2(&m, n).map_err(err)?;
            let x2: Vec<naive::El> = r2.letters.iter().map(|l| model.image(n, &l.params)).collect();
            let r1 = emit_r1_unchecked(&m, n).map_err(err)?;
            let x1: Vec<naive::El> = r1.letters.iter().map(|l| model.image(n, &l.params)).collect();
            let chain = chain_data(&m).map_err(err)?;
            for (i, j) in ordered_pairs(n) {
                for t in naive::odometer(k, n) {
                    let w = word_e_x2(&m, n, i, j, &t).map_err(err)?;
                    ensure(model.eval(n, &x2, &w) == model.eps(n, i, j, t.clone()), || {
                        format!("{} n={n} E[{i},{j};{t:?}] over X_2", m.name())
                    })?;
                    words += 1;
                }
                for a in 0..k {
                    for b in 0..k {
                        let w = word_e_x1(&m, n, i, j, a, b, &chain).map_err(err)?;
                        ensure(model.eval(n, &x1, &w) == model.eps_ab(n, i, j, a, b), || {
                            format!("{} n={n} E[{i},{j};{a},{b}] over X_1", m.name())
                        })?;
                        words += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{words} words"))
}

fn criterion_determinism() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SHUFFLE_SEED);
    let mut runs = 0;
    for case in matrix() {
        let first = case.verify(&case.p)?;
        let again = case.verify(&case.p)?;
        ensure(first == again, || format!("{}: repeated run differs", case.label()))?;
        let Verdict::Certified { classes } = first else {
            return Err(format!("{}: {first:?}", case.label()));
        };
        for _ in 0..SHUFFLES {
            let mut p = case.p.clone();
            p.relations.shuffle(&mut rng);
            let tc = todd_coxeter(&p, 2_000_000).map_err(err)?;
            ensure(tc.class_count == Some(classes), || {
                format!("{}: shuffled count {:?}, want {classes}", case.label(), tc.class_count)
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} shuffled enumerations agree"))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 idempotent counts", criterion_idempotents, BUDGET_IDEMPOTENTS),
        ("2 generation of Sing_n", criterion_generation, BUDGET_GENERATION),
        ("3 idempotent generation", criterion_theorem_ig, BUDGET_THEOREM_IG),
        ("4 rank and idrank", criterion_rank, BUDGET_RANK),
        ("5 certification", criterion_certification, BUDGET_CERTIFICATION),
        ("6 soundness and mutations", criterion_soundness, BUDGET_SOUNDNESS),
        ("7 substitution words", criterion_substitution, BUDGET_SUBSTITUTION),
        ("8 determinism", criterion_determinism, BUDGET_DETERMINISM),
    ];
    let mut failed = Vec::new();
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = outcome.and_then(|d| {
            if took <= budget {
                Ok(d)
            } else {
                Err(format!("took {took:.1?}, budget {budget:?}"))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS [{name}] {detail} ({took:.2?})"),
            Err(why) => {
                println!("FAIL [{name}] {why} ({took:.2?})");
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
