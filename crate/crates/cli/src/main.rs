//! `easycat`: command-line access to partitions, relations, closures and the
//! numeric checks.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use easycat::category::{generate_closure_with_cap, GeneratorSet, Preset, DEFAULT_MEMBER_CAP};
use easycat::labeling::{LabelDecomposition, DEFAULT_LABEL_CAP};
use easycat::numerics::matrix::DENSE_ENTRY_CAP;

use easycat::numerics::{
    colinearity_bound, fusion_report, run_suite, separation_report, tp_matrix, FusionCase, Suite,
    SuiteConfig, TpMatrix,
};
use easycat::relations::{
    emit_gr_with, emit_sp_matrix_with, emit_sp_u, emit_sp_vector_with, EmissionMode, EmitOptions,
    Relation,
};
use easycat::{compose, Error, Partition, Rotation, Row};

#[derive(Parser, Debug)]
#[command(
    name = "easycat",
    version,
    about = "Exact diagram calculus for two-coloured set partitions"
)]
struct Cli {
    /// Output format. `latex` is accepted by `op` and `relations`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Emit one {case, computed, expected, match} record per check instead of
    /// the normal output (fusion, verify, tp --rank).
    #[arg(long, global = true, value_enum)]
    report: Option<ReportFormat>,

    /// Largest labeling set enumerated before giving up.
    #[arg(long, global = true, env = "EASYCAT_LABEL_CAP")]
    label_cap: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a diagram operation. `compose P Q` is the product PQ: P drawn
    /// below Q.
    Op {
        #[arg(value_enum)]
        operation: OpKind,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: Option<String>,
        /// Rotation direction for `rotate`.
        #[arg(long, default_value = "upper-left-down")]
        direction: String,
    },
    /// Classify labelings of both rows by their through-block values.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        n: u32,
        /// List the upper and lower fibres of class i (0 is the zero class).
        #[arg(long)]
        list: Option<usize>,
    },
    /// Emit the relations a partition induces.
    Relations {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        n: u32,
        /// Number of columns for `sp` (default 1).
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Use every class representative (default for the sp families).
        #[arg(long, conflicts_with = "canonical")]
        exhaustive: bool,
        /// One representative per class pair (default for gr).
        #[arg(long)]
        canonical: bool,
    },
    /// Saturate a generator set up to a point bound and list the members.
    Closure {
        #[command(flatten)]
        source: GenSource,
        #[arg(long)]
        max_points: usize,
        /// Report membership of this partition instead of listing members.
        #[arg(long, allow_hyphen_values = true)]
        contains: Option<String>,
    },
    /// Check whether block restrictions stay inside the bounded closure.
    Blockstable {
        #[command(flatten)]
        source: GenSource,
        #[arg(long)]
        max_points: usize,
    },
    /// The 0/1 matrix T_p.
    Tp {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        n: u32,
        /// Print the exact rank and compare it with N^tb(p).
        #[arg(long)]
        rank: bool,
        /// Print Matrix Market coordinate text.
        #[arg(long)]
        market: bool,
    },
    /// Run a numeric suite: sN, hN, spN (or s3, h2, ...), rotations,
    /// coaction-shadow or separation.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        corpus_size: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_points: Option<usize>,
        /// Evaluate only one representative per class pair.
        #[arg(long)]
        canonical: bool,
    },
    /// Projective-partition lattice, ranks, dimension and colinearity bound.
    Fusion {
        /// b3plus, o2plus or all.
        #[arg(long)]
        case: String,
    },
    /// List the preset generator sets.
    Presets,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GenSource {
    /// Preset name, e.g. `O_loc` or `H_loc(2,2)`.
    #[arg(long)]
    preset: Option<String>,
    /// JSON file with a generator set.
    #[arg(long)]
    gens: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Tensor,
    Compose,
    Involute,
    Rotate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gr,
    Sp,
    SpVector,
    SpU,
}

enum Failure {
    Usage(String),
    Compute(Error),
    /// The output was written; some check did not hold.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::ColourMismatch { .. }
            | Error::EmptyRow(_)
            | Error::BlockNotFound(_)
            | Error::LengthMismatch { .. }
            | Error::LabelOutOfRange { .. }
            | Error::OutOfRange(_)
            | Error::Json(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e),
        }
    }
}

type Outcome = std::result::Result<String, (String, Failure)>;

fn usage<T>(msg: impl Into<String>) -> std::result::Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn parse(text: &str) -> std::result::Result<Partition, Failure> {
    text.parse::<Partition>()
        .map_err(|e| Failure::Usage(format!("cannot parse partition '{text}': {e}")))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn check(case: impl Into<String>, computed: Value, expected: Value) -> Value {
    let ok = computed == expected;
    json!({"case": case.into(), "computed": computed, "expected": expected, "match": ok})
}

fn all_match(checks: &[Value]) -> bool {
    checks.iter().all(|c| c["match"] == Value::Bool(true))
}

struct Ctx {
    format: Format,
    report: bool,
    label_cap: u128,
}

impl Ctx {
    fn no_latex(&self, verb: &str) -> std::result::Result<(), Failure> {
        if self.format == Format::Latex {
            return usage(format!("--format latex is not available for {verb}"));
        }
        Ok(())
    }

    fn no_report(&self, verb: &str) -> std::result::Result<(), Failure> {
        if self.report {
            return usage(format!("--report is not available for {verb}"));
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let ctx = Ctx {
        format: cli.format,
        report: cli.report.is_some(),
        label_cap: cli.label_cap.unwrap_or(DEFAULT_LABEL_CAP),
    };
    let (out, code) = match run(&ctx, cli.command) {
        Ok(out) => (out, 0),
        Err((out, Failure::Check)) => (out, 1),
        Err((out, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            (out, 2)
        }
        Err((out, Failure::Compute(e))) => {
            eprintln!("error: {e}");
            (out, 1)
        }
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code)
}

fn run(ctx: &Ctx, cmd: Command) -> Outcome {
    let plain = |r: std::result::Result<String, Failure>| r.map_err(|f| (String::new(), f));
    match cmd {
        Command::Op {
            operation,
            p,
            q,
            direction,
        } => plain(op(ctx, operation, &p, q.as_deref(), &direction)),
        Command::Decompose { p, n, list } => plain(decompose(ctx, &p, n, list)),
        Command::Relations {
            p,
            n,
            d,
            family,
            exhaustive,
            canonical,
        } => {
            let exhaustive = exhaustive || (family != FamilyArg::Gr && !canonical);
            plain(relations(ctx, &p, n, d, family, exhaustive))
        }
        Command::Closure {
            source,
            max_points,
            contains,
        } => plain(closure(ctx, &source, max_points, contains.as_deref())),
        Command::Blockstable { source, max_points } => plain(blockstable(ctx, &source, max_points)),
        Command::Tp { p, n, rank, market } => tp(ctx, &p, n, rank, market),
        Command::Verify {
            suite,
            n,
            seed,
            corpus_size,
            samples,
            max_points,
            canonical,
        } => {
            let opts = VerifyOpts {
                n,
                seed,
                corpus_size,
                samples,
                max_points,
                canonical,
            };
            verify(ctx, &suite, &opts)
        }
        Command::Fusion { case } => fusion(ctx, &case),
        Command::Presets => plain(presets(ctx)),
    }
}

fn op(
    ctx: &Ctx,
    kind: OpKind,
    p: &str,
    q: Option<&str>,
    direction: &str,
) -> std::result::Result<String, Failure> {
    ctx.no_report("op")?;
    let p = parse(p)?;
    let second = |name: &str| match q {
        Some(q) => parse(q),
        None => usage(format!("{name} needs two partitions")),
    };
    let one = |name: &str| match q {
        Some(_) => usage(format!("{name} takes one partition")),
        None => Ok(()),
    };
    let (result, loops) = match kind {
        OpKind::Tensor => (p.tensor(&second("tensor")?), None),
        OpKind::Compose => {
            let (r, loops) = compose(&p, &second("compose")?)?;
            (r, Some(loops))
        }
        OpKind::Involute => {
            one("involute")?;
            (p.involution(), None)
        }
        OpKind::Rotate => {
            one("rotate")?;
            let dir: Rotation = direction
                .parse()
                .map_err(|e: Error| Failure::Usage(e.to_string()))?;
            (p.rotate(dir)?, None)
        }
    };
    Ok(match ctx.format {
        Format::Text => {
            let mut s = format!("{result}\n");
            if let Some(l) = loops {
                let _ = writeln!(s, "loops = {l}");
            }
            s
        }
        Format::Json => {
            let mut v = json!({"partition": result.to_json(), "text": result.to_text()});
            if let Some(l) = loops {
                v["loops"] = json!(l);
            }
            pretty(&v)
        }
        Format::Latex => result.to_latex(),
    })
}

fn word_text(t: &[u32]) -> String {
    let parts: Vec<String> = t.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn decompose(
    ctx: &Ctx,
    p: &str,
    n: u32,
    list: Option<usize>,
) -> std::result::Result<String, Failure> {
    ctx.no_latex("decompose")?;
    ctx.no_report("decompose")?;
    let p = parse(p)?;
    let dec = LabelDecomposition::new(&p, n)?.with_cap(ctx.label_cap);
    let blocks = p.blocks();
    let through: Vec<String> = dec
        .through_block_order()
        .iter()
        .map(|&b| blocks[b].to_string())
        .collect();
    let upper_size = dec.class_size(Row::Upper)?;
    let lower_size = dec.class_size(Row::Lower)?;
    let class = match list {
        Some(i) => Some((
            i,
            dec.enumerate_class(Row::Upper, i)?,
            dec.enumerate_class(Row::Lower, i)?,
        )),
        None => None,
    };
    if ctx.format == Format::Json {
        let mut v = json!({
            "partition": p.to_json(),
            "n": n,
            "tb": p.tb(),
            "r": dec.r(),
            "through_blocks": through,
            "upper_class_size": upper_size.to_string(),
            "lower_class_size": lower_size.to_string(),
        });
        if let Some((i, up, low)) = &class {
            v["class"] = json!({"index": i, "upper": up, "lower": low});
        }
        return Ok(pretty(&v));
    }
    let mut s = String::new();
    let _ = writeln!(s, "partition: {p}");
    let _ = writeln!(s, "N = {n}");
    let _ = writeln!(s, "tb = {}", p.tb());
    let _ = writeln!(s, "r = {}", dec.r());
    let _ = writeln!(
        s,
        "through blocks: {}",
        if through.is_empty() {
            "-".into()
        } else {
            through.join(" ")
        }
    );
    let _ = writeln!(s, "class size: upper {upper_size}, lower {lower_size}");
    if let Some((i, up, low)) = class {
        let _ = writeln!(s, "T_{i} ({} upper labelings):", up.len());
        for t in &up {
            let _ = writeln!(s, "  {}", word_text(t));
        }
        let _ = writeln!(s, "T'_{i} ({} lower labelings):", low.len());
        for t in &low {
            let _ = writeln!(s, "  {}", word_text(t));
        }
    }
    Ok(s)
}

fn relations(
    ctx: &Ctx,
    p: &str,
    n: u32,
    d: Option<u32>,
    family: FamilyArg,
    exhaustive: bool,
) -> std::result::Result<String, Failure> {
    ctx.no_report("relations")?;
    let p = parse(p)?;
    let opts = EmitOptions {
        mode: if exhaustive {
            EmissionMode::Exhaustive
        } else {
            EmissionMode::Canonical
        },
        label_cap: ctx.label_cap,
    };
    if d.is_some() && family != FamilyArg::Sp {
        return usage("--d only applies to --family sp");
    }
    let rels: Vec<Relation> = match family {
        FamilyArg::Gr => emit_gr_with(&p, n, opts)?,
        FamilyArg::Sp => emit_sp_matrix_with(&p, n, d.unwrap_or(1), opts)?,
        FamilyArg::SpVector => emit_sp_vector_with(&p, n, opts)?,
        FamilyArg::SpU => emit_sp_u(&p, n, opts)?,
    };
    Ok(match ctx.format {
        Format::Json => pretty(&Value::Array(rels.iter().map(Relation::to_json).collect())),
        Format::Text => rels.iter().map(|r| r.to_text() + "\n").collect(),
        Format::Latex => rels.iter().map(|r| r.to_latex() + "\n").collect(),
    })
}

fn generators(source: &GenSource) -> std::result::Result<GeneratorSet, Failure> {
    match (&source.preset, &source.gens) {
        (Some(name), None) => {
            let preset: Preset = name.parse()?;
            Ok(preset.generators()?)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(GeneratorSet::from_json(&v)?)
        }
        _ => usage("give exactly one of --preset and --gens"),
    }
}

fn closure(
    ctx: &Ctx,
    source: &GenSource,
    max_points: usize,
    contains: Option<&str>,
) -> std::result::Result<String, Failure> {
    ctx.no_latex("closure")?;
    ctx.no_report("closure")?;
    let g = generators(source)?;
    let probe = contains.map(parse).transpose()?;
    let c = generate_closure_with_cap(&g, max_points, DEFAULT_MEMBER_CAP)?;
    if !c.frontier_complete() {
        eprintln!("warning: member cap reached; the listing is incomplete");
    }
    let name = g.name().unwrap_or("custom").to_string();
    if let Some(q) = probe {
        let m = c.contains(&q);
        return Ok(match ctx.format {
            Format::Json => pretty(&json!({
                "generators": name,
                "bound": max_points,
                "partition": q.to_json(),
                "membership": m.as_str(),
                "caveat": m.caveat(),
            })),
            _ => {
                let mut s = format!("{q}: {m} (bound {max_points})\n");
                if let Some(cav) = m.caveat() {
                    let _ = writeln!(s, "note: {cav}");
                }
                s
            }
        });
    }
    if ctx.format == Format::Json {
        return Ok(pretty(&c.to_json()));
    }
    let mut s = format!("{name} up to {max_points} points: {} members\n", c.len());
    for p in c.members() {
        let _ = writeln!(s, "{p}");
    }
    Ok(s)
}

fn blockstable(
    ctx: &Ctx,
    source: &GenSource,
    max_points: usize,
) -> std::result::Result<String, Failure> {
    ctx.no_latex("blockstable")?;
    ctx.no_report("blockstable")?;
    let g = generators(source)?;
    let c = generate_closure_with_cap(&g, max_points, DEFAULT_MEMBER_CAP)?;
    if !c.frontier_complete() {
        eprintln!("warning: member cap reached; the verdict covers a partial closure");
    }
    let verdict = c.blockstability();
    let name = g.name().unwrap_or("custom").to_string();
    Ok(match ctx.format {
        Format::Json => {
            let mut v = verdict.to_json();
            v["generators"] = json!(name);
            v["members"] = json!(c.len());
            pretty(&v)
        }
        _ => format!(
            "{name} ({} members up to {max_points} points): {verdict}\n",
            c.len()
        ),
    })
}

fn tp(ctx: &Ctx, p: &str, n: u32, rank: bool, market: bool) -> Outcome {
    let fail = |f: Failure| (String::new(), f);
    if ctx.format == Format::Latex {
        return Err(fail(Failure::Usage(
            "--format latex is not available for tp".into(),
        )));
    }
    if ctx.report && !rank {
        return Err(fail(Failure::Usage("--report needs --rank".into())));
    }
    if rank && market {
        return Err(fail(Failure::Usage(
            "--rank and --market are exclusive".into(),
        )));
    }
    let p = parse(p).map_err(fail)?;
    let t = tp_matrix(&p, n).map_err(|e| fail(e.into()))?;
    if !rank {
        return tp_listing(ctx, &t, market).map_err(fail);
    }
    let r = t.rank() as u64;
    let expected = (n as u64).pow(p.tb() as u32);
    let ok = r == expected;
    let out = if ctx.report {
        pretty(&json!([check(
            format!("rank T_p for {p} at N={n}"),
            json!(r),
            json!(expected)
        )]))
    } else if ctx.format == Format::Json {
        pretty(&json!({"rank": r, "expected": expected, "match": ok}))
    } else {
        format!(
            "rank = {r}\nN^tb = {n}^{} = {expected} {}\n",
            p.tb(),
            if ok { "OK" } else { "MISMATCH" }
        )
    };
    if ok {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}

fn tp_listing(ctx: &Ctx, t: &TpMatrix, market: bool) -> std::result::Result<String, Failure> {
    if market {
        return Ok(t.to_matrix_market());
    }
    if ctx.format == Format::Json {
        return Ok(pretty(&json!({
            "rows": t.rows(),
            "cols": t.cols(),
            "columns": (0..t.cols()).map(|c| t.column(c).to_vec()).collect::<Vec<_>>(),
        })));
    }
    if t.rows().saturating_mul(t.cols()) > DENSE_ENTRY_CAP {
        return usage("matrix too large to print densely; use --market");
    }
    let mut s = format!("{} x {}\n", t.rows(), t.cols());
    for r in 0..t.rows() {
        let row: Vec<String> = (0..t.cols()).map(|c| t.get(r, c).to_string()).collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    Ok(s)
}

struct VerifyOpts {
    n: Option<usize>,
    seed: Option<u64>,
    corpus_size: Option<usize>,
    samples: Option<usize>,
    max_points: Option<usize>,
    canonical: bool,
}

fn verify(ctx: &Ctx, suite: &str, o: &VerifyOpts) -> Outcome {
    let fail = |f: Failure| (String::new(), f);
    if ctx.format == Format::Latex {
        return Err(fail(Failure::Usage(
            "--format latex is not available for verify".into(),
        )));
    }
    if suite == "separation" {
        return separation(ctx, o.n.unwrap_or(2));
    }
    let (suite, named_n) = Suite::parse(suite).map_err(|e| fail(e.into()))?;
    let n = match (o.n, named_n) {
        (Some(a), Some(b)) if a != b => {
            return Err(fail(Failure::Usage(format!(
                "--n {a} contradicts the suite name"
            ))))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => match suite {
            Suite::Rotations => 2,
            Suite::CoactionShadow => 3,
            _ => {
                return Err(fail(Failure::Usage(format!(
                    "suite {} needs --n",
                    suite.name()
                ))))
            }
        },
    };
    let mut cfg = SuiteConfig::new(n);
    cfg.label_cap = ctx.label_cap;
    if let Some(s) = o.seed {
        cfg.seed = s;
    }
    if let Some(c) = o.corpus_size {
        cfg.corpus_size = c;
    }
    if let Some(s) = o.samples {
        cfg.samples = s;
    }
    if let Some(m) = o.max_points {
        cfg.max_points = m;
    }
    if o.canonical {
        cfg.mode = EmissionMode::Canonical;
    }
    let outcome = run_suite(suite, &cfg).map_err(|e| fail(e.into()))?;
    let out = if ctx.report {
        pretty(&json!([{
            "case": format!("{} N={}", suite.name(), n),
            "computed": outcome.max_residual,
            "expected": format!("<= {:e}", outcome.tolerance),
            "match": outcome.passed(),
        }]))
    } else if ctx.format == Format::Json {
        pretty(&outcome.to_json())
    } else {
        format!("{outcome}\n")
    };
    if outcome.passed() {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}

fn separation(ctx: &Ctx, n: usize) -> Outcome {
    let r = separation_report(n).map_err(|e| (String::new(), e.into()))?;
    let checks = vec![
        check(
            format!("first columns agree at N={n}"),
            json!(r.first_columns_agree),
            json!(true),
        ),
        check(
            format!("column pairs agree at N={n}"),
            json!(r.pairs_agree),
            json!(false),
        ),
    ];
    let ok = all_match(&checks);
    let out = if ctx.report {
        pretty(&Value::Array(checks))
    } else if ctx.format == Format::Json {
        pretty(&r.to_json())
    } else {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "first columns: {} vectors, sets agree: {}",
            r.signed_first.len(),
            r.first_columns_agree
        );
        let _ = writeln!(
            s,
            "column pairs: {} with a global sign, {} signed, sets agree: {}",
            r.global_sign_pairs.len(),
            r.signed_pairs.len(),
            r.pairs_agree
        );
        if let Some((a, b)) = &r.separating_pair {
            let _ = writeln!(s, "separating pair: {a:?} {b:?}");
        }
        let _ = writeln!(s, "{}", if ok { "PASS" } else { "FAIL" });
        s
    };
    if ok {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}

fn fusion(ctx: &Ctx, case: &str) -> Outcome {
    let fail = |f: Failure| (String::new(), f);
    if ctx.format == Format::Latex {
        return Err(fail(Failure::Usage(
            "--format latex is not available for fusion".into(),
        )));
    }
    let cases: Vec<FusionCase> = if case == "all" {
        FusionCase::ALL.to_vec()
    } else {
        vec![FusionCase::parse(case).map_err(|e| fail(e.into()))?]
    };
    let mut text = String::new();
    let mut docs = Vec::new();
    let mut checks = Vec::new();
    for c in cases {
        let report = fusion_report(c).map_err(|e| fail(e.into()))?;
        let bound = colinearity_bound(c).map_err(|e| fail(e.into()))?;
        checks.push(check(
            format!("{} dim", c.name()),
            json!(report.dim),
            json!(c.expected_dim()),
        ));
        for &(tag, want) in c.expected_ranks() {
            checks.push(check(
                format!("{} rank {tag}", c.name()),
                json!(report.rank_of(tag)),
                json!(want),
            ));
        }
        checks.push(check(
            format!("{} oracle agreement", c.name()),
            json!(report.oracle_agrees()),
            json!(true),
        ));
        checks.push(check(
            format!("{} colinearity bound", c.name()),
            json!([bound.upper_bound, bound.reference_dim]),
            json!([c.expected_colinearity_bound(), c.expected_dim()]),
        ));
        let lambdas: Vec<String> = bound
            .per_lambda
            .iter()
            .map(|(l, d)| format!("{l}:{d}"))
            .collect();
        let _ = writeln!(
            text,
            "colinearity: bound {} (expected {}) against dim {}, {} without colinearity, per lambda {}",
            bound.upper_bound,
            c.expected_colinearity_bound(),
            bound.reference_dim,
            bound.without_colinearity,
            lambdas.join(" ")
        );
        let _ = writeln!(text, "{report}");
        docs.push(json!({"lattice": report.to_json(), "colinearity": bound.to_json()}));
    }
    let ok = all_match(&checks);
    let out = if ctx.report {
        pretty(&Value::Array(checks))
    } else if ctx.format == Format::Json {
        pretty(&if docs.len() == 1 {
            docs.remove(0)
        } else {
            Value::Array(docs)
        })
    } else {
        text
    };
    if ok {
        Ok(out)
    } else {
        Err((out, Failure::Check))
    }
}

const PRESET_TABLE: [(&str, &str, &str); 12] = [
    ("O_loc", "", "O_loc"),
    ("Hp_loc", "", "Hp_loc"),
    ("H_loc", "k, l != 1, l | k", "H_loc(2,2)"),
    ("S_loc", "k, l != 1, l | k", "S_loc(2,2)"),
    ("B_loc", "l | k", "B_loc(1,1)"),
    ("Bp_loc_0", "k, l != 1, l | k", "Bp_loc_0(2,2)"),
    (
        "Bp_loc_half",
        "k != 1, l even and >= 4, l | k",
        "Bp_loc_half(4,4)",
    ),
    ("O_glob", "k even", "O_glob(2)"),
    ("H_glob", "k even", "H_glob(2)"),
    ("S_glob", "any k", "S_glob(1)"),
    ("B_glob", "k even", "B_glob(2)"),
    ("Bp_glob", "any k", "Bp_glob(1)"),
];

fn presets(ctx: &Ctx) -> std::result::Result<String, Failure> {
    ctx.no_latex("presets")?;
    ctx.no_report("presets")?;
    let mut rows = Vec::new();
    for (name, range, example) in PRESET_TABLE {
        let preset: Preset = example.parse()?;
        let gens = preset.listed_generators()?;
        rows.push((name, range, example, gens));
    }
    if ctx.format == Format::Json {
        let v: Vec<Value> = rows
            .iter()
            .map(|(name, range, example, gens)| {
                json!({
                    "name": name,
                    "range": range,
                    "example": example,
                    "generators": gens.iter().map(Partition::to_text).collect::<Vec<_>>(),
                })
            })
            .collect();
        return Ok(pretty(&Value::Array(v)));
    }
    let mut s = String::new();
    for (name, range, example, gens) in rows {
        let range = if range.is_empty() {
            "no parameters"
        } else {
            range
        };
        let _ = writeln!(s, "{name}: {range}");
        let _ = writeln!(s, "  {example}:");
        for g in gens {
            let _ = writeln!(s, "    {g}");
        }
    }
    Ok(s)
}
