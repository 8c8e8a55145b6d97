use std::collections::HashSet;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use wreathkit::enumerate::{close, DEFAULT_ELEMENT_LIMIT};
use wreathkit::io::{parse_edges, parse_monoid, parse_presentation, parse_transformations, WreathElementFile};
use wreathkit::monoid::FiniteMonoid;
use wreathkit::presentation::{
    emit_e_wreath_monoid, emit_r, emit_r1, emit_r1p, emit_r2_with, emit_rn, images_e_wreath_monoid, images_r,
    images_x1, images_x2, images_xn, EBase, EvaluationMap, Presentation, R2Options, Target, TransformationTarget,
    MAX_LETTERS, MAX_RELATIONS,
};
use wreathkit::rank::{brute_rank, rank_formulas, tournament_check, RankOptions, DEFAULT_SUBSET_BUDGET};
use wreathkit::todd_coxeter::{todd_coxeter, TcStatus, DEFAULT_NODE_LIMIT};
use wreathkit::transformation::{epsilon, Transformation};
use wreathkit::verify::{verify as certify, VerifyOptions, VerifyReport};
use wreathkit::wreath::{CountMethod, WreathContext, WreathElement, WreathPart, BRUTE_LIMIT};
use wreathkit::{fixtures, Error};

use crate::report::{Outcome, Status};

/// A fixture name such as `@Z2`, or a path to a monoid file.
fn load_monoid(spec: &str) -> anyhow::Result<FiniteMonoid> {
    if spec.starts_with('@') {
        return Ok(fixtures::by_name(spec)?);
    }
    let text = std::fs::read_to_string(spec).with_context(|| format!("reading monoid file {spec}"))?;
    Ok(parse_monoid(&text)?)
}

fn require_monoid(spec: &Option<String>) -> anyhow::Result<FiniteMonoid> {
    match spec {
        Some(s) => load_monoid(s),
        None => Err(Error::InvalidArgument("--monoid is required".into()).into()),
    }
}

fn element_json(ctx: &WreathContext, x: &WreathElement) -> Value {
    serde_json::to_value(WreathElementFile::from_element(ctx, x)).expect("elements serialize")
}

fn positive_if(b: bool) -> Status {
    if b {
        Status::Positive
    } else {
        Status::Negative
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PartArg {
    Full,
    Singular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Formula,
    Brute,
    Both,
}

#[derive(Debug, Args, Serialize)]
pub struct IdempotentsArgs {
    /// Monoid file, or a fixture: @1, @Z<k>, @B01, @RZ1, @T2, @T3.
    #[arg(long)]
    pub monoid: String,
    /// Degree.
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = PartArg::Full)]
    pub part: PartArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
    pub method: MethodArg,
    /// Run both methods and fail unless they agree.
    #[arg(long)]
    pub check: bool,
    /// List the idempotents (brute force).
    #[arg(long)]
    pub list: bool,
    /// Also write a CSV table (n, |M|, formula, brute) for degrees up to n.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

pub fn idempotents(a: &IdempotentsArgs) -> anyhow::Result<Outcome> {
    let m = load_monoid(&a.monoid)?;
    let part = match a.part {
        PartArg::Full => WreathPart::Full,
        PartArg::Singular => WreathPart::Singular,
    };
    let ctx = WreathContext::new(m.clone(), a.n, part.clone())?;
    let method = if a.check { MethodArg::Both } else { a.method };
    let formula = match method {
        MethodArg::Brute => None,
        _ => Some(ctx.count_idempotents(CountMethod::Formula)?),
    };
    let brute = match method {
        MethodArg::Formula => None,
        _ => Some(ctx.count_idempotents(CountMethod::Brute)?),
    };
    let agree = match (formula, brute) {
        (Some(f), Some(b)) => Some(f == b),
        _ => None,
    };
    let status = if agree == Some(false) {
        Status::Disagreement
    } else {
        Status::Positive
    };

    let listing = if a.list {
        let elems: Vec<Value> = ctx
            .elements()?
            .iter()
            .filter(|x| ctx.is_idempotent(x))
            .map(|x| element_json(&ctx, x))
            .collect();
        Some(elems)
    } else {
        None
    };

    if let Some(path) = &a.csv {
        write_csv(path, &m, a.n, &part, method)?;
    }

    let mut table = vec![
        format!("monoid: {} (|M| = {})", m.name(), m.order()),
        format!("n = {}, part = {}", a.n, part_name(&part)),
    ];
    if let Some(f) = formula {
        table.push(format!("formula: {f}"));
    }
    if let Some(b) = brute {
        table.push(format!("brute:   {b}"));
    }
    if let Some(ok) = agree {
        table.push(format!("match:   {ok}"));
    }
    if let Some(l) = &listing {
        table.extend(l.iter().map(|x| format!("  {x}")));
    }
    let result = json!({
        "monoid": m.name(),
        "order": m.order(),
        "n": a.n,
        "part": part_name(&part),
        "formula": formula.map(|f| f.to_string()),
        "brute": brute.map(|b| b.to_string()),
        "match": agree,
        "idempotents": listing,
    });
    Ok(Outcome {
        status,
        result,
        capacity: json!({ "brute_limit": BRUTE_LIMIT.to_string() }),
        table,
    })
}

fn part_name(p: &WreathPart) -> &'static str {
    match p {
        WreathPart::Full => "full",
        WreathPart::Singular => "singular",
        WreathPart::Custom(_) => "custom",
    }
}

fn write_csv(path: &Path, m: &FiniteMonoid, n: usize, part: &WreathPart, method: MethodArg) -> anyhow::Result<()> {
    let first = if *part == WreathPart::Singular { 2 } else { 1 };
    let mut out = String::from("n,|M|,formula,brute\n");
    for k in first..=n {
        let ctx = WreathContext::new(m.clone(), k, part.clone())?;
        let f = match method {
            MethodArg::Brute => String::new(),
            _ => ctx.count_idempotents(CountMethod::Formula)?.to_string(),
        };
        let b = match method {
            MethodArg::Formula => String::new(),
            _ => ctx.count_idempotents(CountMethod::Brute)?.to_string(),
        };
        out.push_str(&format!("{k},{},{f},{b}\n", m.order()));
    }
    std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum FamilyArg {
    #[value(name = "R")]
    R,
    #[value(name = "Rn")]
    Rn,
    #[value(name = "R2")]
    R2,
    #[value(name = "R1")]
    R1,
    #[value(name = "R1p")]
    R1p,
    #[value(name = "Emonoid")]
    Emonoid,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Monoid file or fixture; not used by family R.
    #[arg(long)]
    pub monoid: Option<String>,
    #[arg(short = 'n')]
    pub n: usize,
    /// Node limit for the enumeration.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    pub limit_nodes: usize,
    /// Element limit for closures.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT)]
    pub limit_elements: usize,
    /// R2 only: leave out the R4 equalities that follow from the rest.
    #[arg(long)]
    pub drop_redundant_r4: bool,
}

fn emit_family(
    family: FamilyArg,
    monoid: &Option<String>,
    n: usize,
    drop_r4: bool,
) -> anyhow::Result<(Presentation, Option<FiniteMonoid>)> {
    if family == FamilyArg::R {
        return Ok((emit_r(n)?, None));
    }
    let m = require_monoid(monoid)?;
    let p = match family {
        FamilyArg::R => unreachable!(),
        FamilyArg::Rn => emit_rn(&m, n)?,
        FamilyArg::R2 => emit_r2_with(
            &m,
            n,
            R2Options {
                drop_redundant_r4: drop_r4,
            },
        )?,
        FamilyArg::R1 => emit_r1(&m, n)?,
        FamilyArg::R1p => emit_r1p(&m, n)?,
        FamilyArg::Emonoid => emit_e_wreath_monoid(&m, n, &EBase::from_idempotents(&m)?)?,
    };
    Ok((p, Some(m)))
}

fn verify_table(r: &VerifyReport) -> Vec<String> {
    let mut t = vec![
        format!("family: {}", r.family),
        format!("letters: {}, relations: {}", r.letters, r.relations),
    ];
    for (tag, c) in &r.family_counts {
        t.push(format!("  {tag}: {c}"));
    }
    t.push(format!(
        "soundness: {}/{} relations hold",
        r.soundness.checked - r.soundness.failures.len(),
        r.soundness.checked
    ));
    t.push(format!("target size: {}", r.target_size));
    if let Some(c) = r.class_count {
        t.push(format!("classes: {c}"));
    }
    t.push(format!("verdict: {}", r.verdict.name()));
    t
}

pub fn verify(a: &VerifyArgs) -> anyhow::Result<Outcome> {
    let opts = VerifyOptions {
        node_limit: a.limit_nodes,
        element_limit: a.limit_elements,
    };
    let (p, m) = emit_family(a.family, &a.monoid, a.n, a.drop_redundant_r4)?;
    let mut base_report = None;
    let report = match (a.family, m) {
        (FamilyArg::R, _) => {
            let t = TransformationTarget { degree: a.n };
            let map = images_r(a.n)?;
            let carrier = close(&map.images, |x, y| t.mul(x, y), opts.element_limit)?;
            certify(&p, &map, &t, &carrier, opts)?
        }
        (FamilyArg::Emonoid, Some(m)) => {
            let base = EBase::from_idempotents(&m)?;
            let bp = base.presentation(&m);
            let bmap = EvaluationMap::new(base.images.clone());
            base_report = Some(certify(&bp, &bmap, &m, &m.idempotent_generated_part(), opts)?);

            let ctx = WreathContext::full(m, a.n)?;
            let idem: Vec<WreathElement> = ctx.elements()?.into_iter().filter(|x| ctx.is_idempotent(x)).collect();
            let carrier = ctx.close(&idem, opts.element_limit)?;
            certify(&p, &images_e_wreath_monoid(&ctx, &base)?, &ctx, &carrier, opts)?
        }
        (family, Some(m)) => {
            let ctx = WreathContext::singular(m, a.n)?;
            let map = match family {
                FamilyArg::Rn => images_xn(&ctx)?,
                FamilyArg::R2 => images_x2(&ctx)?,
                _ => images_x1(&ctx)?,
            };
            let carrier = ctx.enumerate(opts.element_limit)?;
            certify(&p, &map, &ctx, &carrier, opts)?
        }
        (_, None) => unreachable!("every family but R takes a monoid"),
    };

    let certified = report.verdict.is_certified() && base_report.as_ref().is_none_or(|b| b.verdict.is_certified());
    let mut table = verify_table(&report);
    if let Some(b) = &base_report {
        table.push("base presentation of E(M):".into());
        table.extend(verify_table(b).into_iter().map(|l| format!("  {l}")));
    }
    let capacity = json!({
        "node_limit": a.limit_nodes,
        "element_limit": a.limit_elements,
        "nodes_allocated": report.enumeration.as_ref().map(|e| e.nodes_allocated),
    });
    let mut result = serde_json::to_value(&report)?;
    if let Some(b) = base_report {
        result["base"] = serde_json::to_value(&b)?;
    }
    Ok(Outcome {
        status: positive_if(certified),
        result,
        capacity,
        table,
    })
}

#[derive(Debug, Args, Serialize)]
pub struct RankArgs {
    #[arg(long)]
    pub monoid: String,
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    pub mode: MethodArg,
    /// Largest number of candidate subsets the brute search may test.
    #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT)]
    pub limit_elements: usize,
}

pub fn rank(a: &RankArgs) -> anyhow::Result<Outcome> {
    let m = load_monoid(&a.monoid)?;
    let f = rank_formulas(&m, a.n)?;
    let mut table = vec![
        format!("monoid: {} (|M| = {}, |G| = {})", m.name(), m.order(), m.units().len()),
        format!("bounds: {} ≤ rank ≤ {}", f.lower, f.upper),
        format!("case: {}", f.case),
    ];
    if let (Some(r), Some(i)) = (f.exact_rank, f.exact_idrank) {
        table.push(format!("formula: rank = {r}, idrank = {i}"));
    }
    let mut result = json!({
        "monoid": m.name(),
        "n": a.n,
        "lower": f.lower.to_string(),
        "upper": f.upper.to_string(),
        "exact_rank": f.exact_rank.map(|x| x.to_string()),
        "exact_idrank": f.exact_idrank.map(|x| x.to_string()),
        "case": f.case,
        "status": if f.exact_rank.is_some() { "exact" } else { "bounds" },
    });
    let mut searched = 0u64;
    let mut status = Status::Positive;

    if a.mode != MethodArg::Formula {
        let ctx = WreathContext::singular(m.clone(), a.n)?;
        let s = ctx.enumerate(a.limit_elements)?;
        let pool: Vec<usize> = (0..s.len()).collect();
        let start_at = usize::try_from(f.lower).unwrap_or(usize::MAX);
        let opts = RankOptions {
            budget: a.budget,
            start_at,
            ..RankOptions::default()
        };
        let r = brute_rank(&s, &pool, opts)?;
        let i = brute_rank(
            &s,
            &pool,
            RankOptions {
                idempotents_only: true,
                budget: a.budget.saturating_sub(r.searched),
                ..opts
            },
        )?;
        searched = r.searched + i.searched;
        let witness = |w: &[usize]| w.iter().map(|&x| element_json(&ctx, s.element(x))).collect::<Vec<_>>();
        result["brute_rank"] = json!(r.k);
        result["brute_idrank"] = json!(i.k);
        result["witness"] = json!(witness(&r.witness));
        result["idempotent_witness"] = json!(witness(&i.witness));
        result["size"] = json!(s.len());
        table.push(format!(
            "brute: rank = {}, idrank = {} (|M≀Sing_n| = {})",
            r.k.map_or("none".into(), |k| k.to_string()),
            i.k.map_or("none".into(), |k| k.to_string()),
            s.len()
        ));

        if a.mode == MethodArg::Both {
            let in_bounds = r.k.is_some_and(|k| (f.lower..=f.upper).contains(&(k as u128)));
            let exact_ok = match (f.exact_rank, f.exact_idrank) {
                (Some(er), Some(ei)) => r.k.map(|k| k as u128) == Some(er) && i.k.map(|k| k as u128) == Some(ei),
                _ => true,
            };
            let consistent = in_bounds && exact_ok;
            result["consistent"] = json!(consistent);
            table.push(format!("consistent: {consistent}"));
            if !consistent {
                status = Status::Disagreement;
            }
        } else if r.k.is_none() {
            status = Status::Negative;
        }
    }
    Ok(Outcome {
        status,
        result,
        capacity: json!({
            "subset_budget": a.budget,
            "subsets_searched": searched,
            "element_limit": a.limit_elements,
        }),
        table,
    })
}

#[derive(Debug, Args, Serialize)]
pub struct GensArgs {
    /// Degree; inferred from --elements when absent.
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Edges `i->j` standing for ε_ij, e.g. "1->2, 2->3, 3->1".
    #[arg(long, conflicts_with = "elements", required_unless_present = "elements")]
    pub edges: Option<String>,
    /// Transformations as image lists, e.g. "1,1,3; 2,2,3".
    #[arg(long)]
    pub elements: Option<String>,
    /// Also decide by closure and require agreement.
    #[arg(long)]
    pub confirm: bool,
    #[arg(long, default_value_t = DEFAULT_ELEMENT_LIMIT)]
    pub limit_elements: usize,
}

fn sing_order(n: usize) -> anyhow::Result<usize> {
    let full = (n as u128).checked_pow(n as u32);
    let fact: u128 = (1..=n as u128).product();
    full.and_then(|f| usize::try_from(f - fact).ok()).ok_or_else(|| {
        Error::Capacity {
            what: "|Sing_n|",
            limit: usize::MAX as u128,
            reached: u128::MAX,
        }
        .into()
    })
}

/// Whether `gens` (all singular, degree `n`) generate `Sing_n`, by closure.
fn closure_generates(gens: &[Transformation], n: usize, limit: usize) -> anyhow::Result<(bool, usize)> {
    let target = sing_order(n)?;
    if target > limit {
        return Err(Error::Capacity {
            what: "closure elements",
            limit: limit as u128,
            reached: target as u128,
        }
        .into());
    }
    let t = TransformationTarget { degree: n };
    let s = close(gens, |x, y| t.mul(x, y), limit)?;
    Ok((s.len() == target, s.len()))
}

/// `(i,j)` when `t` is `ε_ij`.
fn as_epsilon(t: &Transformation) -> Option<(usize, usize)> {
    let n = t.degree();
    let moved: Vec<usize> = (1..=n).filter(|&k| t.image_of(k) != k).collect();
    match moved.as_slice() {
        &[j] => {
            let i = t.image_of(j);
            (epsilon(n, i, j).ok()? == *t).then_some((i, j))
        }
        _ => None,
    }
}

pub fn gens(a: &GensArgs) -> anyhow::Result<Outcome> {
    let mut table = Vec::new();
    let mut result = serde_json::Map::new();
    let (n, edges, elems) = match (&a.edges, &a.elements) {
        (Some(e), _) => {
            let n =
                a.n.ok_or_else(|| Error::InvalidArgument("-n is required with --edges".into()))?;
            let edges = parse_edges(e)?;
            let gens = edges
                .iter()
                .map(|&(i, j)| epsilon(n, i, j))
                .collect::<Result<Vec<_>, _>>()?;
            (n, Some(edges), gens)
        }
        (None, Some(e)) => {
            let ts = parse_transformations(e)?;
            let n = a.n.unwrap_or(ts[0].degree());
            if let Some(t) = ts.iter().find(|t| t.degree() != n) {
                return Err(Error::DegreeMismatch {
                    left: n,
                    right: t.degree(),
                }
                .into());
            }
            if let Some(t) = ts.iter().find(|t| t.is_permutation()) {
                return Err(Error::InvalidArgument(format!("{t} is a permutation, not an element of Sing_{n}")).into());
            }
            let edges: Option<Vec<(usize, usize)>> = ts.iter().map(as_epsilon).collect();
            (n, edges.filter(|_| n >= 3), ts)
        }
        (None, None) => bail!("one of --edges or --elements is required"),
    };
    result.insert("n".into(), json!(n));

    let graph = match &edges {
        Some(edges) => {
            let v = tournament_check(n, edges)?;
            table.push(format!(
                "graph: generates = {}, strongly connected = {}, complete = {}",
                v.generates, v.strongly_connected, v.complete
            ));
            result.insert("edges".into(), json!(edges));
            result.insert("graph".into(), serde_json::to_value(v)?);
            Some(v.generates)
        }
        None => None,
    };
    let closure = if a.confirm || graph.is_none() {
        let (ok, reached) = closure_generates(&elems, n, a.limit_elements)?;
        table.push(format!(
            "closure: generates = {ok} ({reached} of {} elements)",
            sing_order(n)?
        ));
        result.insert(
            "closure".into(),
            json!({ "generates": ok, "reached": reached, "target": sing_order(n)? }),
        );
        Some(ok)
    } else {
        None
    };

    let verdict = graph.or(closure).unwrap_or(false);
    let status = match (graph, closure) {
        (Some(g), Some(c)) if g != c => Status::Disagreement,
        _ => positive_if(verdict),
    };
    let distinct: HashSet<&Transformation> = elems.iter().collect();
    result.insert("generators".into(), json!(distinct.len()));
    result.insert("generates".into(), json!(verdict));
    table.push(format!("generates Sing_{n}: {verdict}"));
    Ok(Outcome {
        status,
        result: Value::Object(result),
        capacity: json!({ "element_limit": a.limit_elements }),
        table,
    })
}

#[derive(Debug, Args, Serialize)]
pub struct EmitArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub monoid: Option<String>,
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long)]
    pub drop_redundant_r4: bool,
}

pub fn emit(a: &EmitArgs) -> anyhow::Result<Outcome> {
    let (p, _) = emit_family(a.family, &a.monoid, a.n, a.drop_redundant_r4)?;
    let mut table = vec![format!(
        "{} ({:?}): {} letters, {} relations",
        p.provenance.family,
        p.kind,
        p.letters.len(),
        p.relations.len()
    )];
    table.extend(
        p.relations
            .iter()
            .map(|r| format!("  {:<10} {} = {}", r.tag, p.render(&r.lhs), p.render(&r.rhs))),
    );
    let result = json!({
        "family_counts": p.family_counts(),
        "presentation": p,
    });
    Ok(Outcome {
        status: Status::Positive,
        result,
        capacity: json!({
            "max_letters": MAX_LETTERS,
            "max_relations": MAX_RELATIONS,
        }),
        table,
    })
}

#[derive(Debug, Args, Serialize)]
pub struct TcArgs {
    /// A presentation file, or a report written by `emit`.
    #[arg(long)]
    pub presentation: PathBuf,
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    pub limit_nodes: usize,
}

fn read_presentation(path: &Path) -> anyhow::Result<Presentation> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    match v.pointer("/result/presentation") {
        Some(inner) => Ok(parse_presentation(&inner.to_string())?),
        None => Ok(parse_presentation(&text)?),
    }
}

pub fn tc(a: &TcArgs) -> anyhow::Result<Outcome> {
    let p = read_presentation(&a.presentation)?;
    let r = todd_coxeter(&p, a.limit_nodes)?;
    let table = vec![
        format!(
            "{} letters, {} relations ({:?})",
            p.letters.len(),
            p.relations.len(),
            p.kind
        ),
        format!(
            "status: {}",
            match r.class_count {
                Some(c) => format!("{c} classes"),
                None => "node limit reached".into(),
            }
        ),
        format!(
            "nodes: {}, coincidences: {}",
            r.nodes_allocated, r.coincidences_processed
        ),
    ];
    Ok(Outcome {
        status: positive_if(r.status == TcStatus::Certified),
        result: json!({
            "family": p.provenance.family,
            "letters": p.letters.len(),
            "relations": p.relations.len(),
            "enumeration": r,
        }),
        capacity: json!({ "node_limit": a.limit_nodes, "nodes_allocated": r.nodes_allocated }),
        table,
    })
}
