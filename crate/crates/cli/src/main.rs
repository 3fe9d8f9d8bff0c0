use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use oriented_fas::bounds::{
    alon_bound, arc_guarantee, berger_bound, coefficient_table, combined_bound, eq2_bound, vertex_guarantee,
};
use oriented_fas::generators::{
    gen_d14, gen_d24, gen_d7, gen_d8, gen_random, gen_random_regular5, gen_triangles, regularize,
};
use oriented_fas::io::{
    parse_fas, parse_graph, parse_ordering, write_fas, write_graph, write_ordering, write_trace,
};
use oriented_fas::{
    backward_arcs, exact_fas, solve_bounded5_with, solve_regular5_with, verify_fas, FasError, FeedbackArcSet,
    Ordering, OrientedMultigraph, ReductionTrace, SolveOptions,
};

const EXIT_INVALID: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_BOUND: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser)]
#[command(name = "fas", version, about = "Feedback arc sets in oriented multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a feedback arc set and its certificates.
    Solve(SolveArgs),
    /// Check a feedback arc set or ordering against a graph.
    Verify(VerifyArgs),
    /// Write a generated instance in graph format.
    Generate {
        #[command(subcommand)]
        which: Generator,
        /// Write to this file instead of standard output.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Report closed-form upper bounds for an instance.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Reduce,
    Exact,
    Deg5,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Fas,
    Ordering,
    Trace,
    All,
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "reduce")]
    algo: Algo,
    #[arg(long, value_enum, default_value = "fas")]
    emit: Emit,
    /// Largest component solved by subset dynamic programming.
    #[arg(long, default_value_t = 24)]
    oracle_cap: usize,
    /// Order oversized degree-4 base components heuristically.
    #[arg(long)]
    base_fallback: bool,
    /// Write PREFIX.fas, PREFIX.ord and PREFIX.trace instead of standard output.
    #[arg(long, value_name = "PREFIX")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundFlag {
    /// ⌊m/3⌋
    M3,
    /// ⌊24n/29⌋
    N2429,
}

#[derive(clap::Args)]
#[command(group(clap::ArgGroup::new("certificate").required(true).args(["fas", "ordering"])))]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    fas: Option<PathBuf>,
    #[arg(long)]
    ordering: Option<PathBuf>,
    #[arg(long, value_enum)]
    bound: Option<BoundFlag>,
}

#[derive(Subcommand)]
enum Generator {
    D7,
    D8,
    D14,
    D24,
    /// Disjoint 3-cycles.
    Triangles {
        t: usize,
    },
    /// Random graph with maximum degree MAXDEG.
    Random {
        n: usize,
        maxdeg: u32,
        seed: u64,
    },
    /// Random degree-5 multigraph.
    Regular5 {
        n: usize,
        seed: u64,
    },
    /// Degree-K multigraph built from two copies of the input.
    Regularize {
        k: u32,
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(clap::Args)]
struct BoundsArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Error carrying the process exit code.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl Failure {
    fn new(code: u8, err: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            err: err.into(),
        }
    }
}

impl From<FasError> for Failure {
    fn from(e: FasError) -> Self {
        let code = match e {
            FasError::TooLarge { .. } | FasError::BaseCaseTooLarge { .. } => EXIT_CAP,
            FasError::InternalInvariant(_) => EXIT_INTERNAL,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e)
    }
}

type Outcome<T> = Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Failure::new(EXIT_PRECONDITION, e))
}

fn write(path: &Path, text: &str) -> Outcome<()> {
    fs::write(path, text)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(|e| Failure::new(EXIT_PRECONDITION, e))
}

fn load_graph(path: &Path) -> Outcome<OrientedMultigraph> {
    let text = read(path)?;
    parse_graph(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(|e| Failure::new(EXIT_PRECONDITION, e))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn solve(args: SolveArgs) -> Outcome<()> {
    let g = load_graph(&args.input)?;
    let opts = SolveOptions {
        oracle_cap: args.oracle_cap,
        base_fallback: args.base_fallback,
    };
    let (ordering, fas, trace): (Ordering, FeedbackArcSet, Option<ReductionTrace>) = match args.algo {
        Algo::Reduce => {
            let s = solve_bounded5_with(&g, &opts)?;
            (s.ordering, s.fas, Some(s.trace))
        }
        Algo::Deg5 => {
            let s = solve_regular5_with(&g, &opts)?;
            (s.ordering, s.fas, None)
        }
        Algo::Exact => {
            let (_, ord) = exact_fas(&g, args.oracle_cap)?;
            let fas = backward_arcs(&g, &ord)?;
            (ord, fas, None)
        }
    };
    let wants_trace = matches!(args.emit, Emit::Trace | Emit::All);
    if args.emit == Emit::Trace && trace.is_none() {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            anyhow::anyhow!("only --algo reduce produces a trace"),
        ));
    }

    match &args.out {
        Some(prefix) => {
            if matches!(args.emit, Emit::Fas | Emit::All) {
                write(&with_suffix(prefix, ".fas"), &write_fas(&fas))?;
            }
            if matches!(args.emit, Emit::Ordering | Emit::All) {
                write(&with_suffix(prefix, ".ord"), &write_ordering(&ordering))?;
            }
            if let (true, Some(t)) = (wants_trace, &trace) {
                write(&with_suffix(prefix, ".trace"), &write_trace(t))?;
            }
        }
        None => match args.emit {
            Emit::Fas => print!("{}", write_fas(&fas)),
            Emit::Ordering => print!("{}", write_ordering(&ordering)),
            Emit::Trace => print!("{}", write_trace(trace.as_ref().expect("checked above"))),
            Emit::All => {
                return Err(Failure::new(
                    EXIT_PRECONDITION,
                    anyhow::anyhow!("--emit all needs --out PREFIX"),
                ))
            }
        },
    }

    let bound = match args.algo {
        Algo::Deg5 => vertex_guarantee(g.vertex_count()).to_string(),
        _ if g.max_degree() <= 5 => arc_guarantee(g.arc_count()).to_string(),
        _ => "-".to_string(),
    };
    eprintln!("{} {} {} {}", g.vertex_count(), g.arc_count(), fas.size(), bound);
    Ok(())
}

fn verify(args: VerifyArgs) -> Outcome<()> {
    let g = load_graph(&args.graph)?;
    let invalid = |e: FasError| Failure::new(EXIT_INVALID, e);
    let fas = match (&args.fas, &args.ordering) {
        (Some(path), _) => {
            let fas = parse_fas(&read(path)?).map_err(|e| Failure::new(EXIT_PRECONDITION, e))?;
            if !verify_fas(&g, &fas).map_err(invalid)? {
                return Err(Failure::new(
                    EXIT_INVALID,
                    anyhow::anyhow!("removing the set leaves a cycle"),
                ));
            }
            fas
        }
        (None, Some(path)) => {
            let ord = parse_ordering(&read(path)?).map_err(invalid)?;
            backward_arcs(&g, &ord).map_err(invalid)?
        }
        (None, None) => unreachable!("clap requires one certificate"),
    };
    let limit = args.bound.map(|b| match b {
        BoundFlag::M3 => arc_guarantee(g.arc_count()),
        BoundFlag::N2429 => vertex_guarantee(g.vertex_count()),
    });
    if let Some(limit) = limit {
        if fas.size() > limit {
            return Err(Failure::new(
                EXIT_BOUND,
                anyhow::anyhow!("valid but size {} exceeds bound {limit}", fas.size()),
            ));
        }
    }
    println!("valid size={}", fas.size());
    Ok(())
}

fn generate(which: Generator, out: Option<PathBuf>) -> Outcome<()> {
    let g = match which {
        Generator::D7 => gen_d7(),
        Generator::D8 => gen_d8(),
        Generator::D14 => gen_d14(),
        Generator::D24 => gen_d24(),
        Generator::Triangles { t } => gen_triangles(t),
        Generator::Random { n, maxdeg, seed } => gen_random(n, maxdeg, seed),
        Generator::Regular5 { n, seed } => gen_random_regular5(n, seed)?,
        Generator::Regularize { k, input } => regularize(&load_graph(&input)?, k)?,
    };
    let text = write_graph(&g);
    match out {
        Some(path) => write(&path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn bounds(args: BoundsArgs) -> Outcome<()> {
    let g = load_graph(&args.input)?;
    let (n, m, delta) = (g.vertex_count(), g.arc_count(), g.max_degree());
    let degrees: Vec<u32> = g.vertices().map(|v| g.degree(v)).collect();
    let num = |x: f64| format!("{x:.12}");

    let mut rows: Vec<(String, String)> = vec![
        ("berger".into(), num(berger_bound(&degrees))),
        ("alon".into(), num(alon_bound(m, delta))),
        ("eq2".into(), num(eq2_bound(n, delta))),
        ("combined".into(), num(combined_bound(n, m, delta))),
    ];
    rows.push((
        "theorem2".into(),
        if delta <= 5 {
            arc_guarantee(m).to_string()
        } else {
            "inapplicable".into()
        },
    ));
    rows.push((
        "theorem3".into(),
        if g.is_regular(5) {
            vertex_guarantee(n).to_string()
        } else {
            "inapplicable".into()
        },
    ));
    // smallest tabulated k covering the maximum degree
    if let Some(row) = coefficient_table().into_iter().find(|r| r.k >= delta.max(2)) {
        rows.push((format!("c_arc_le{}", row.k), row.per_arc.to_string()));
        rows.push((format!("c_vertex_le{}", row.k), row.per_vertex.to_string()));
    }

    match args.format {
        Format::Csv => {
            println!("name,value");
            for (name, value) in rows {
                println!("{name},{value}");
            }
        }
        Format::Text => {
            let width = rows.iter().map(|(name, _)| name.len()).max().unwrap_or(0);
            for (name, value) in rows {
                println!("{name:<width$} {value}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => solve(args),
        Command::Verify(args) => verify(args),
        Command::Generate { which, out } => generate(which, out),
        Command::Bounds(args) => bounds(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
