//! One handler per subcommand. Each returns the structured result, a text
//! rendering and the list of named facts or rules it relied on.

use std::borrow::Cow;
use std::fmt::Write as _;

use fanocalc::chern::{dual, ext_power, sym_power, twist_line, FormalBundle};
use fanocalc::degree_bound::{
    self as db_bound, boundedness_verdict, cotangent_twist, degree_from_multiplier, e_value, feasibility_witness,
    feasible_multipliers_with, max_multiplier_with, multiplier_bound_from_negative_lines, quadric_multiplier_bound,
    ramification_feasibility, realizable_multipliers, tangent_twist_hypersurface, RamificationVerdict,
    SourceInvariants,
};
use fanocalc::fano_db::{
    conic_normal_bundle_degrees, line_normal_bundle_options, FanoDatabase, FanoRecord, EMBEDDED_TABLE,
};
use fanocalc::report::lines_on_cubic_threefold;
use fanocalc::riemann_roch::{
    chi_surface, chi_threefold, derive_fano_invariants, SurfaceIntersectionData, ThreefoldIntersectionData,
};
use fanocalc::ring::{GradedRing, TruncatedLineRing, WeightedPolyRing};
use fanocalc::schubert::{
    giambelli, integrate, multiply_with, pieri, tautological_dual, ChowElement, GiambelliExpansion, GrassmannContext,
};
use fanocalc::wps::{
    canonical_degree, cotangent_twist_lmin, double_cover_model, is_generated_with, normalize, singular_strata,
    CoverBase, WeightVector,
};
use fanocalc::{Error, Partition, Strategy};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::expr::evaluate;
use crate::render;
use crate::{
    BoundCmd, BundleArgs, ChernCmd, Cli, CliError, Command, DbCmd, Outcome, ReportCmd, RrCmd, SchubertCmd,
    SourceArgs, TargetArgs, WpsCmd,
};

type Result<T> = std::result::Result<T, CliError>;

pub fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Schubert(c) => match c {
            SchubertCmd::Mul { .. } => "schubert mul",
            SchubertCmd::Pieri { .. } => "schubert pieri",
            SchubertCmd::Integrate { .. } => "schubert integrate",
            SchubertCmd::Giambelli { .. } => "schubert giambelli",
        },
        Command::Chern(c) => match c {
            ChernCmd::Sym { .. } => "chern sym",
            ChernCmd::Ext { .. } => "chern ext",
            ChernCmd::Dual { .. } => "chern dual",
            ChernCmd::Twist { .. } => "chern twist",
            ChernCmd::Top { .. } => "chern top",
        },
        Command::Rr(c) => match c {
            RrCmd::Chi2 { .. } => "rr chi2",
            RrCmd::Chi3 { .. } => "rr chi3",
            RrCmd::FanoInvariants { .. } => "rr fano-invariants",
        },
        Command::Wps(c) => match c {
            WpsCmd::Normalize { .. } => "wps normalize",
            WpsCmd::Sing { .. } => "wps sing",
            WpsCmd::Canonical { .. } => "wps canonical",
            WpsCmd::Generated { .. } => "wps generated",
            WpsCmd::Lmin { .. } => "wps lmin",
            WpsCmd::Model { .. } => "wps model",
        },
        Command::Db(c) => match c {
            DbCmd::Lookup { .. } => "db lookup",
            DbCmd::List => "db list",
            DbCmd::Validate => "db validate",
            DbCmd::NormalBundles { .. } => "db normal-bundles",
        },
        Command::Bound(c) => match c {
            BoundCmd::E { .. } => "bound E",
            BoundCmd::Verdict { .. } => "bound verdict",
            BoundCmd::MaxM { .. } => "bound max-m",
            BoundCmd::Degree { .. } => "bound degree",
            BoundCmd::Ramification { .. } => "bound ramification",
            BoundCmd::NegLines { .. } => "bound neg-lines",
            BoundCmd::FeasibleM { .. } => "bound feasible-m",
            BoundCmd::Quadric { .. } => "bound quadric",
        },
        Command::Report(ReportCmd::LinesCubic) => "report lines-cubic",
    }
}

struct Env {
    strategy: Strategy,
    db_text: Cow<'static, str>,
}

impl Env {
    fn database(&self) -> Result<Cow<'static, FanoDatabase>> {
        Ok(match &self.db_text {
            Cow::Borrowed(_) => Cow::Borrowed(FanoDatabase::embedded()),
            Cow::Owned(text) => Cow::Owned(FanoDatabase::from_tsv(text)?),
        })
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let db_text = match &cli.db {
        None => Cow::Borrowed(EMBEDDED_TABLE),
        Some(path) => Cow::Owned(
            std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
        ),
    };
    let env = Env { strategy: if cli.sequential { Strategy::Sequential } else { Strategy::Parallel }, db_text };
    let command = name(&cli.command);
    let (inputs, result, text, provenance) = match &cli.command {
        Command::Schubert(c) => schubert(&env, c)?,
        Command::Chern(c) => chern(c)?,
        Command::Rr(c) => rr(c)?,
        Command::Wps(c) => wps(&env, c)?,
        Command::Db(c) => db(&env, c)?,
        Command::Bound(c) => bound(&env, c)?,
        Command::Report(ReportCmd::LinesCubic) => report()?,
    };
    Ok(Outcome { command, inputs, result, text, provenance })
}

type Parts = (Value, Value, String, Vec<&'static str>);

fn grassmannian((a, b): (usize, usize)) -> Result<GrassmannContext> {
    Ok(GrassmannContext::from_projective(a, b)?)
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts: std::result::Result<Vec<usize>, _> =
        s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect();
    let parts = parts.map_err(|_| CliError::Usage(format!("bad partition `{s}`")))?;
    Ok(Partition::new(parts)?)
}

fn parse_weights(s: &str) -> Result<WeightVector> {
    Ok(s.parse()?)
}

fn schubert(env: &Env, cmd: &SchubertCmd) -> Result<Parts> {
    match cmd {
        SchubertCmd::Mul { gr, exprs } => {
            let ctx = grassmannian(gr.gr)?;
            let mut acc = ChowElement::one(ctx);
            for e in exprs {
                acc = multiply_with(env.strategy, &acc, &evaluate(e, ctx, env.strategy)?)?;
            }
            let inputs = json!({ "gr": [gr.gr.0, gr.gr.1], "exprs": exprs });
            Ok((inputs, render::chow(&acc), acc.to_string(), vec!["pieri-rule", "giambelli-determinant"]))
        }
        SchubertCmd::Pieri { gr, a, expr } => {
            let ctx = grassmannian(gr.gr)?;
            let out = pieri(&evaluate(expr, ctx, env.strategy)?, *a);
            let inputs = json!({ "gr": [gr.gr.0, gr.gr.1], "a": a, "expr": expr });
            Ok((inputs, render::chow(&out), out.to_string(), vec!["pieri-rule"]))
        }
        SchubertCmd::Integrate { gr, expr } => {
            let ctx = grassmannian(gr.gr)?;
            let value = integrate(&evaluate(expr, ctx, env.strategy)?)?;
            let inputs = json!({ "gr": [gr.gr.0, gr.gr.1], "expr": expr });
            Ok((inputs, render::int(&value), value.to_string(), vec!["pieri-rule", "point-class-degree"]))
        }
        SchubertCmd::Giambelli { gr, partition } => {
            let ctx = grassmannian(gr.gr)?;
            let lambda = parse_partition(partition)?;
            let expansion = GiambelliExpansion::of(&lambda);
            let value = giambelli(ctx, &lambda)?;
            let text = format!("s{lambda} = {expansion}\n          = {value}");
            let result = json!({ "determinant": expansion.to_string(), "value": render::chow(&value) });
            let inputs = json!({ "gr": [gr.gr.0, gr.gr.1], "partition": lambda.parts() });
            Ok((inputs, result, text, vec!["giambelli-determinant", "pieri-rule"]))
        }
    }
}

enum AnyBundle {
    Grass(FormalBundle<GrassmannContext>),
    Line(FormalBundle<TruncatedLineRing>),
    Generic(FormalBundle<WeightedPolyRing>, Vec<String>),
}

fn bundle_inputs(b: &BundleArgs) -> Value {
    json!({
        "gr": b.gr.map(|(a, c)| vec![a, c]),
        "pn": b.pn,
        "split": b.split.as_ref().map(|l| &l.0),
        "rank": b.rank,
        "trunc": b.trunc,
    })
}

/// `extra_twist` adds a degree-one generator `t` to generic rings.
fn make_bundle(b: &BundleArgs, default_trunc: impl Fn(usize) -> usize, extra_twist: bool) -> Result<AnyBundle> {
    if let Some(gr) = b.gr {
        return Ok(AnyBundle::Grass(tautological_dual(grassmannian(gr)?)));
    }
    if let (Some(n), Some(split)) = (b.pn, &b.split) {
        let ring = TruncatedLineRing::projective_space(n);
        let roots: Vec<_> = split.0.iter().map(|&d| ring.monomial(d, 1)).collect();
        return Ok(AnyBundle::Line(FormalBundle::split(ring, &roots)?));
    }
    let Some(rank) = b.rank else {
        return Err(CliError::Usage("give one of --gr, --pn with --split, or --rank".into()));
    };
    if rank == 0 {
        return Err(CliError::Usage("--rank must be positive".into()));
    }
    let trunc = b.trunc.unwrap_or_else(|| default_trunc(rank));
    let mut degrees: Vec<usize> = (1..=rank).collect();
    let mut names: Vec<String> = (1..=rank).map(|i| format!("c{i}")).collect();
    if extra_twist {
        degrees.push(1);
        names.push("t".into());
    }
    let ring = WeightedPolyRing::new(degrees, trunc)?;
    let chern = (0..rank.min(trunc)).map(|i| ring.generator(i)).collect();
    Ok(AnyBundle::Generic(FormalBundle::new(ring, rank, chern)?, names))
}

fn describe<R: GradedRing>(b: &FormalBundle<R>, show: impl Fn(&R::Elem) -> String) -> (Value, String) {
    let classes: Vec<String> = b.chern_classes().iter().map(&show).collect();
    let mut text = format!("rank {}", b.rank());
    for (i, c) in classes.iter().enumerate() {
        let _ = write!(text, "\nc{} = {c}", i + 1);
    }
    (json!({ "rank": b.rank(), "chern": classes }), text)
}

enum Op {
    Sym(usize),
    Ext(usize),
    Dual,
    Twist(Option<i64>),
    Top,
}

fn apply<R: GradedRing>(b: &FormalBundle<R>, op: &Op, twist: Option<R::Elem>) -> Result<FormalBundle<R>> {
    Ok(match op {
        Op::Sym(k) => sym_power(b, *k)?,
        Op::Ext(k) => ext_power(b, *k)?,
        Op::Dual => dual(b),
        Op::Twist(_) => twist_line(b, &twist.expect("twist class"))?,
        Op::Top => b.clone(),
    })
}

fn chern(cmd: &ChernCmd) -> Result<Parts> {
    let (args, op) = match cmd {
        ChernCmd::Sym { bundle, k } => (bundle, Op::Sym(*k)),
        ChernCmd::Ext { bundle, k } => (bundle, Op::Ext(*k)),
        ChernCmd::Dual { bundle } => (bundle, Op::Dual),
        ChernCmd::Twist { bundle, by } => (bundle, Op::Twist(*by)),
        ChernCmd::Top { bundle } => (bundle, Op::Top),
    };
    let default_trunc = |rank: usize| match op {
        Op::Sym(k) => num_integer::binomial(rank + k - 1, k).min(8),
        Op::Ext(k) if k <= rank => num_integer::binomial(rank, k).min(8),
        _ => rank,
    };
    let bundle = make_bundle(args, default_trunc, matches!(op, Op::Twist(_)))?;
    let needs_by = |by: Option<i64>| {
        by.ok_or_else(|| CliError::Usage("--by is required for this bundle".into()))
    };
    let top = matches!(op, Op::Top);
    let (mut result, mut text, integral) = match bundle {
        AnyBundle::Grass(b) => {
            let ctx = *b.ring();
            let t = match op {
                Op::Twist(by) => Some(ChowElement::special(ctx, 1).scale(&BigInt::from(needs_by(by)?))),
                _ => None,
            };
            let out = apply(&b, &op, t)?;
            let top_class = out.top_chern();
            let integral = integrate(&top_class).ok();
            let (r, t) = if top { describe_top(&top_class.to_string()) } else { describe(&out, ToString::to_string) };
            (r, t, integral)
        }
        AnyBundle::Line(b) => {
            let ring = b.ring().clone();
            let t = match op {
                Op::Twist(by) => Some(ring.monomial(needs_by(by)?, 1)),
                _ => None,
            };
            let out = apply(&b, &op, t)?;
            let top_class = out.top_chern();
            let integral = (out.rank() == ring.top()).then(|| ring.integrate(&top_class));
            let (r, t) = if top { describe_top(&top_class.to_string()) } else { describe(&out, ToString::to_string) };
            (r, t, integral)
        }
        AnyBundle::Generic(b, names) => {
            let ring = b.ring().clone();
            let t = matches!(op, Op::Twist(_)).then(|| ring.generator(names.len() - 1));
            let out = apply(&b, &op, t)?;
            let show = |p: &fanocalc::ring::Poly| render::poly(p, &names);
            let (r, t) = if top { describe_top(&show(&out.top_chern())) } else { describe(&out, show) };
            (r, t, None)
        }
    };
    if let Some(n) = integral.filter(|_| top) {
        result["integral"] = render::int(&n);
        let _ = write!(text, "\nintegral = {n}");
    }
    let mut inputs = bundle_inputs(args);
    match op {
        Op::Sym(k) | Op::Ext(k) => inputs["k"] = json!(k),
        Op::Twist(by) => inputs["by"] = json!(by),
        _ => {}
    }
    Ok((inputs, result, text, vec!["splitting-principle", "whitney-formula"]))
}

fn describe_top(s: &str) -> (Value, String) {
    (json!({ "top": s }), format!("top = {s}"))
}

fn rr(cmd: &RrCmd) -> Result<Parts> {
    match cmd {
        RrCmd::Chi2 { dd, dk, kk, c2 } => {
            let q = chi_surface(&SurfaceIntersectionData { dd: *dd, dk: *dk, kk: *kk, c2: *c2 });
            let inputs = json!({ "dd": dd, "dk": dk, "kk": kk, "c2": c2 });
            let result = json!({ "chi": q.to_string(), "integral": q.is_integer() });
            Ok((inputs, result, format!("chi = {q}"), vec!["riemann-roch-surface"]))
        }
        RrCmd::Chi3 { fano, d3, kd2, kkd, c2d, c1c2 } => {
            let data = match fano {
                Some(v) => match v.0.as_slice() {
                    [r, h3, m] => ThreefoldIntersectionData::fano(*r, *h3, *m)?,
                    _ => return Err(CliError::Usage("--fano takes r,h3,m".into())),
                },
                None => match (d3, kd2, kkd, c2d) {
                    (Some(d3), Some(kd2), Some(kkd), Some(c2d)) => {
                        ThreefoldIntersectionData { d3: *d3, kd2: *kd2, kkd: *kkd, c2d: *c2d, c1c2: *c1c2 }
                    }
                    _ => return Err(CliError::Usage("give --fano or all of --d3 --kd2 --kkd --c2d".into())),
                },
            };
            let q = chi_threefold(&data);
            let inputs = json!({
                "d3": data.d3, "kd2": data.kd2, "kkd": data.kkd, "c2d": data.c2d, "c1c2": data.c1c2,
            });
            let result = json!({ "chi": q.to_string(), "integral": q.is_integer() });
            Ok((inputs, result, format!("chi = {q}"), vec!["riemann-roch-threefold"]))
        }
        RrCmd::FanoInvariants { index, h3, b3 } => {
            let inv = derive_fano_invariants(*index, *h3, *b3)?;
            let result = json!({
                "r": inv.r, "h3": inv.h3, "c2h": inv.c2h, "c3_omega": inv.c3_omega, "b3": inv.b3,
                "genus": render::opt_i64(inv.genus), "anticanonical_dim": render::opt_i64(inv.anticanonical_dim),
            });
            let mut text = format!("c2.H = {}\nc3(Omega) = {}", inv.c2h, inv.c3_omega);
            if let (Some(g), Some(d)) = (inv.genus, inv.anticanonical_dim) {
                let _ = write!(text, "\ngenus = {g}\ndim |-K| = {d}");
            }
            let inputs = json!({ "index": index, "h3": h3, "b3": b3 });
            Ok((inputs, result, text, vec!["riemann-roch-threefold", "topological-euler-number"]))
        }
    }
}

fn wps(env: &Env, cmd: &WpsCmd) -> Result<Parts> {
    match cmd {
        WpsCmd::Normalize { weights } => {
            let w = parse_weights(weights)?;
            let n = normalize(&w);
            let inputs = json!({ "weights": w.weights() });
            Ok((inputs, json!(n.weights()), n.to_string(), vec!["well-formed-reduction"]))
        }
        WpsCmd::Sing { weights } => {
            let w = parse_weights(weights)?;
            let strata = singular_strata(&w)?;
            let len = w.weights().len();
            let result: Vec<Value> = strata
                .iter()
                .map(|s| json!({ "prime": s.k, "coords": s.coords, "dimension": s.dimension(), "point": s.point(len) }))
                .collect();
            let lines: Vec<String> = strata
                .iter()
                .map(|s| match s.point(len) {
                    Some(p) => {
                        let p: Vec<String> = p.iter().map(u8::to_string).collect();
                        format!("Z/{} point ({})", s.k, p.join(":"))
                    }
                    None => format!("Z/{} stratum on coordinates {:?}, dimension {}", s.k, s.coords, s.dimension()),
                })
                .collect();
            let text = if lines.is_empty() { "smooth".to_string() } else { lines.join("\n") };
            Ok((json!({ "weights": w.weights() }), json!(result), text, vec!["cyclic-quotient-strata"]))
        }
        WpsCmd::Canonical { weights } => {
            let w = parse_weights(weights)?;
            let k = canonical_degree(&w)?;
            Ok((json!({ "weights": w.weights() }), json!(k), format!("K = O({k})"), vec!["weighted-euler-sequence"]))
        }
        WpsCmd::Generated { weights, m } => {
            let w = parse_weights(weights)?;
            let g = is_generated_with(env.strategy, &w, *m)?;
            let inputs = json!({ "weights": w.weights(), "m": m });
            Ok((inputs, json!(g), g.to_string(), vec!["monomial-basepoint-criterion"]))
        }
        WpsCmd::Lmin { weights } => {
            let w = parse_weights(weights)?;
            let l = cotangent_twist_lmin(&w)?;
            let inputs = json!({ "weights": w.weights() });
            Ok((inputs, json!(l), l.to_string(), vec!["weighted-euler-sequence", "monomial-basepoint-criterion"]))
        }
        WpsCmd::Model { base, k } => {
            let b: CoverBase = base.parse()?;
            let m = double_cover_model(b, *k)?;
            let result = json!({
                "ambient": m.ambient.weights(), "degree": m.degree,
                "extra_degrees": m.extra_degrees, "description": m.description,
            });
            let mut text = format!("{}: degree {} hypersurface in {}", m.description, m.degree, m.ambient);
            if !m.extra_degrees.is_empty() {
                let _ = write!(text, ", intersected with equations of degree {:?}", m.extra_degrees);
            }
            Ok((json!({ "base": base, "k": k }), result, text, vec!["double-cover-model"]))
        }
    }
}

fn db(env: &Env, cmd: &DbCmd) -> Result<Parts> {
    match cmd {
        DbCmd::Lookup { name } => {
            let database = env.database()?;
            let r = database.lookup(name)?;
            Ok((json!({ "name": name }), render::record(r), r.to_string(), vec!["classification-table"]))
        }
        DbCmd::List => {
            let database = env.database()?;
            let recs: Vec<Value> = database.records().iter().map(render::record).collect();
            let text: Vec<String> = database.records().iter().map(FanoRecord::to_string).collect();
            let result = json!({ "version": database.version(), "records": recs });
            Ok((json!({}), result, text.join("\n"), vec!["classification-table"]))
        }
        DbCmd::Validate => {
            let audits = FanoDatabase::audit_tsv(&env.db_text)?;
            let bad: Vec<String> = audits
                .iter()
                .flat_map(|a| a.violations.iter().map(move |v| format!("line {} ({}): {v}", a.line, a.name)))
                .collect();
            if !bad.is_empty() {
                return Err(Error::Table { line: 0, message: bad.join("; ") }.into());
            }
            let result = json!({ "records": audits.len(), "violations": 0 });
            Ok((json!({}), result, format!("{} records, no violations", audits.len()), vec!["classification-invariants"]))
        }
        DbCmd::NormalBundles { index, not_very_ample } => {
            let lines = line_normal_bundle_options(*index, !not_very_ample)?;
            let conics = if *index == 1 && !not_very_ample { conic_normal_bundle_degrees() } else { Vec::new() };
            let mut text = String::from("lines:");
            for o in &lines {
                let _ = write!(text, " {o}");
            }
            if !conics.is_empty() {
                text.push_str("\nconics:");
                for c in &conics {
                    let _ = write!(text, " {}", c.option);
                }
            }
            let result = json!({
                "lines": lines.iter().map(render::normal_bundle).collect::<Vec<_>>(),
                "conics": conics.iter().map(|c| json!({ "a": c.option.a, "b": c.option.b, "note": c.note })).collect::<Vec<_>>(),
            });
            let inputs = json!({ "index": index, "very_ample": !not_very_ample });
            Ok((inputs, result, text, vec!["adjunction-on-rational-curves"]))
        }
    }
}

fn source(env: &Env, s: &SourceArgs, need_all: bool) -> Result<SourceInvariants> {
    if let Some(name) = &s.source {
        let database = env.database()?;
        return Ok(SourceInvariants::from_fano(database.lookup(name)?)?);
    }
    let missing = |flag: &str| CliError::Usage(format!("--{flag} is required without --source"));
    let h3 = s.h3x.ok_or_else(|| missing("h3x"))?;
    let kappa = s.kappa.ok_or_else(|| missing("kappa"))?;
    let (c2h, c3) = if need_all {
        (s.c2h.ok_or_else(|| missing("c2h"))?, s.c3.ok_or_else(|| missing("c3"))?)
    } else {
        (s.c2h.unwrap_or(0), s.c3.unwrap_or(0))
    };
    Ok(SourceInvariants::new(h3, kappa, c2h, c3, !s.not_very_ample)?)
}

fn source_inputs(s: &SourceArgs) -> Value {
    json!({
        "source": s.source, "h3x": s.h3x, "kappa": s.kappa, "c2h": s.c2h, "c3": s.c3,
        "very_ample": !s.not_very_ample,
    })
}

fn source_json(x: &SourceInvariants) -> Value {
    json!({ "h3": x.h3, "kappa": x.kappa, "c2h": x.c2h, "c3_omega": x.c3_omega, "very_ample": x.very_ample })
}

fn target<'a>(database: &'a FanoDatabase, t: &TargetArgs) -> Result<(&'a FanoRecord, i64)> {
    let y = database.lookup(&t.target)?;
    let l = match t.twist {
        Some(l) => l,
        None => cotangent_twist(y)?,
    };
    Ok((y, l))
}

fn bound(env: &Env, cmd: &BoundCmd) -> Result<Parts> {
    match cmd {
        BoundCmd::E { target: t } | BoundCmd::Verdict { target: t } => {
            let database = env.database()?;
            let (y, l) = target(&database, t)?;
            let e = e_value(y, l)?;
            let verdict = boundedness_verdict(y, l)?;
            let inputs = json!({ "target": y.name, "twist": l });
            let result = json!({ "E": e, "verdict": verdict.to_string() });
            let text = if matches!(cmd, BoundCmd::E { .. }) {
                format!("E({}, {l}) = {e}\n{verdict}", y.name)
            } else {
                verdict.to_string()
            };
            Ok((inputs, result, text, vec!["chern-inequality", "cotangent-generation"]))
        }
        BoundCmd::MaxM { source: s, target: t } => {
            let x = source(env, s, true)?;
            let database = env.database()?;
            let (y, l) = target(&database, t)?;
            let m = max_multiplier_with(env.strategy, &x, y, l)?;
            let realizable = realizable_multipliers(&x, y, l)?;
            let mut inputs = source_inputs(s);
            inputs["target"] = json!(y.name);
            inputs["twist"] = json!(l);
            let result = json!({
                "max_multiplier": m,
                "source": source_json(&x),
                "realizable": realizable.iter().map(|(m, d)| json!({ "m": m, "degree": render::int(d) })).collect::<Vec<_>>(),
            });
            let mut text = format!("m <= {m}");
            match realizable.last() {
                Some((m, d)) => {
                    let _ = write!(text, "\nlargest integral degree: {d} (m = {m})");
                }
                None => text.push_str("\nno multiplier gives an integral degree"),
            }
            Ok((inputs, result, text, vec!["chern-inequality"]))
        }
        BoundCmd::Degree { m, h3x, h3y } => {
            let d = degree_from_multiplier(*m, *h3x, *h3y)?;
            let inputs = json!({ "m": m, "h3x": h3x, "h3y": h3y });
            Ok((inputs, render::int(&d), d.to_string(), vec!["pullback-degree"]))
        }
        BoundCmd::Ramification { ry, k, source: s } => {
            let x = source(env, s, false)?;
            let v = ramification_feasibility(*ry, *k, &x)?;
            let (kind, value) = match v {
                RamificationVerdict::AlwaysOk => ("always_ok", Value::Null),
                RamificationVerdict::Bounded(b) => ("bound", json!(b)),
                RamificationVerdict::OnlyFrom(m) => ("only_from", json!(m)),
                RamificationVerdict::InfeasibleForAllM => ("infeasible_for_all_m", Value::Null),
            };
            let mut inputs = source_inputs(s);
            inputs["ry"] = json!(ry);
            inputs["k"] = json!(k);
            Ok((inputs, json!({ "verdict": kind, "value": value }), v.to_string(), vec!["ramification-divisor"]))
        }
        BoundCmd::NegLines { j, hypersurface_degree } => {
            let j = match (j, hypersurface_degree) {
                (Some(j), _) => *j,
                (None, Some(d)) => tangent_twist_hypersurface(*d)? as u64,
                (None, None) => unreachable!("clap requires one of them"),
            };
            let b = multiplier_bound_from_negative_lines(j);
            let inputs = json!({ "j": j, "hypersurface_degree": hypersurface_degree });
            Ok((inputs, json!({ "j": j, "max_multiplier": b }), format!("m <= {b}"), vec!["negative-lines"]))
        }
        BoundCmd::FeasibleM { rx, ry, not_very_ample, from, to } => {
            let va = !not_very_ample;
            let set = feasible_multipliers_with(env.strategy, *rx, *ry, va, *from..=*to)?;
            let mut witnesses = Vec::new();
            let mut text = format!("feasible multipliers: {:?}", set.iter().collect::<Vec<_>>());
            for &m in &set {
                if let Some(w) = feasibility_witness(*rx, *ry, va, m)? {
                    let _ = write!(
                        text,
                        "\nm = {m}: {} with normal bundle {} over a line of type {} pulled back to ({},{})",
                        w.component, w.source, w.target_line, w.pulled_back.0, w.pulled_back.1
                    );
                    witnesses.push(json!({
                        "m": m, "component": w.component.to_string(),
                        "source": render::normal_bundle(&w.source), "target_line": render::normal_bundle(&w.target_line),
                        "pulled_back": [w.pulled_back.0, w.pulled_back.1],
                    }));
                }
            }
            let inputs = json!({ "rx": rx, "ry": ry, "very_ample": va, "from": from, "to": to });
            let result = json!({ "feasible": set, "witnesses": witnesses });
            Ok((inputs, result, text, vec!["normal-bundle-comparison"]))
        }
        BoundCmd::Quadric { source: s } => {
            let x = source(env, s, false)?;
            let q = quadric_multiplier_bound(&x)?;
            let result = json!({
                "threshold": db_bound::noether_lefschetz_threshold(x.kappa),
                "max_multiplier": q.max_multiplier,
                "degree_multiplier": q.degree_multiplier,
                "max_degree": q.max_degree.as_ref().map(render::int),
            });
            let text = match (&q.max_degree, q.degree_multiplier) {
                (Some(d), Some(m)) => format!("m <= {}\ndeg f <= {d} (m = {m})", q.max_multiplier),
                _ => format!("m <= {}\nno finite morphism onto the quadric", q.max_multiplier),
            };
            Ok((source_inputs(s), result, text, vec!["noether-lefschetz"]))
        }
    }
}

fn report() -> Result<Parts> {
    let r = lines_on_cubic_threefold()?;
    let result = json!({
        "lines_class": render::chow(&r.lines_class),
        "symbolic_class": render::chow(&r.symbolic_class),
        "symbolic_formula": r.symbolic_formula,
        "lines_meeting_plane": render::int(&r.lines_meeting_plane),
        "lines_through_point": render::int(&r.lines_through_point),
        "cone_self_intersection": r.cone_self_intersection,
        "projection_degree": r.projection_degree,
        "canonical_degree": r.canonical_degree,
        "ramification_degree": r.ramification_degree,
        "special_surface_multiple": r.expected_special_multiple,
        "special_surface_lower_bound": r.special_multiple_lower_bound,
        "cubic_surface_lines": render::int(&r.cubic_surface_lines),
        "consistent": r.is_consistent(),
    });
    Ok((json!({}), result, r.to_string(), vec!["splitting-principle", "pieri-rule", "adjunction", "hurwitz-formula"]))
}
