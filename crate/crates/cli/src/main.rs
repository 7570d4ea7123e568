use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use polyrep::identities::{
    legendre_exceptions_upto, verify_h_set, verify_hirschhorn_sellers, verify_oracle_equivalence,
    verify_theorem1, verify_triangular_coverage, IdentityReport,
};
use polyrep::path::triple_to_vertex;
use polyrep::{
    build_graph, count_oracle, count_p3, count_table, decompositions, IndexTriple, PolygonOrder,
};

/// Partitions into three polygonal numbers, counted on the lattice of a poset
/// representation and cross-checked by brute force.
#[derive(Debug, Parser)]
#[command(name = "polyrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count partitions of n into three s-gonal numbers.
    Count(CountArgs),
    /// List the partitions with the lattice vertex each one ends at.
    Decompose(DecomposeArgs),
    /// Emit counts for every n up to a bound.
    Table(TableArgs),
    /// Run an identity sweep.
    Verify(VerifyArgs),
    /// Export a truncation of the associated graph.
    Graph(GraphArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Theorem,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Hs,
    Hset,
    Coverage,
    Oracle,
    Theorem1,
}

#[derive(Debug, Args)]
struct CountArgs {
    /// Polygon order (3 = triangular, 4 = square, ...).
    #[arg(long = "s", value_parser = clap::value_parser!(u64).range(3..))]
    s: u64,
    #[arg(long = "n")]
    n: u64,
    /// Admit the polygonal number 0 as a part (oracle only).
    #[arg(long)]
    zero: bool,
    /// Defaults to `both`, or to `oracle` with --zero.
    #[arg(long, value_enum)]
    method: Option<Method>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[arg(long = "s", value_parser = clap::value_parser!(u64).range(3..))]
    s: u64,
    #[arg(long = "n")]
    n: u64,
    #[arg(long)]
    zero: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long = "s", value_parser = clap::value_parser!(u64).range(3..))]
    s: u64,
    #[arg(long)]
    max: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Output file; `-` is stdout.
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Upper end of the sweep; each suite has its own default.
    #[arg(long)]
    max: Option<u64>,
}

#[derive(Debug, Args)]
struct GraphArgs {
    #[arg(long = "s", value_parser = clap::value_parser!(u64).range(3..))]
    s: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    max: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Dot)]
    format: OutputFormat,
    #[arg(long, default_value = "-")]
    out: PathBuf,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl From<polyrep::Error> for Failure {
    fn from(e: polyrep::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn order(s: u64) -> Result<PolygonOrder, Failure> {
    Ok(PolygonOrder::new(s)?)
}

fn reject_format(command: &str, got: OutputFormat, allowed: &[OutputFormat]) -> Outcome {
    if allowed.contains(&got) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "{command} does not support --format {}",
            got.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        )))
    }
}

fn emit(out: &PathBuf, text: &str) -> Outcome {
    let io_err = |e: io::Error| Failure::Io(format!("{}: {e}", out.display()));
    if out.as_os_str() == "-" {
        let mut stdout = io::stdout().lock();
        stdout.write_all(text.as_bytes()).map_err(io_err)?;
        stdout.flush().map_err(io_err)
    } else {
        File::create(out)
            .and_then(|mut f| f.write_all(text.as_bytes()))
            .map_err(io_err)
    }
}

fn print(text: &str) -> Outcome {
    emit(&PathBuf::from("-"), text)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CountReport {
    s: u64,
    n: u64,
    zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    theorem: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
}

fn count(args: CountArgs) -> Outcome {
    reject_format(
        "count",
        args.format,
        &[OutputFormat::Plain, OutputFormat::Json],
    )?;
    let s = order(args.s)?;
    let method = match (args.method, args.zero) {
        (None, false) => Method::Both,
        (None, true) | (Some(Method::Oracle), _) => Method::Oracle,
        (Some(m), false) => m,
        (Some(_), true) => {
            return Err(Failure::Usage(
                "--zero counts with the part 0 and is only available with --method oracle".into(),
            ))
        }
    };
    let theorem = matches!(method, Method::Theorem | Method::Both).then(|| count_p3(s, args.n));
    let oracle =
        matches!(method, Method::Oracle | Method::Both).then(|| count_oracle(s, args.n, args.zero));

    let report = CountReport {
        s: args.s,
        n: args.n,
        zero: args.zero,
        theorem,
        oracle,
    };
    let text = match args.format {
        OutputFormat::Json => to_json(&report),
        _ => match (theorem, oracle) {
            (Some(t), Some(o)) if t != o => format!("theorem {t} != oracle {o}\n"),
            (Some(c), _) | (None, Some(c)) => format!("{c}\n"),
            (None, None) => unreachable!("a method is always selected"),
        },
    };
    print(&text)?;
    match (theorem, oracle) {
        (Some(t), Some(o)) if t != o => Err(Failure::Verification(format!(
            "path-class count {t} disagrees with brute force {o} at s={} n={}",
            args.s, args.n
        ))),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct DecompositionLine {
    parts: [u64; 3],
    ranks: [u64; 3],
    /// End vertex of the path class; absent when a part is 0.
    vertex: Option<[u64; 2]>,
}

fn decompose(args: DecomposeArgs) -> Outcome {
    reject_format(
        "decompose",
        args.format,
        &[OutputFormat::Plain, OutputFormat::Json],
    )?;
    let s = order(args.s)?;
    let lines: Vec<DecompositionLine> = decompositions(s, args.n, args.zero)
        .into_iter()
        .map(|d| {
            let vertex = (d.ranks[2] >= 1)
                .then(|| IndexTriple::from_ranks(d.ranks[0], d.ranks[1], d.ranks[2]))
                .transpose()?
                .map(triple_to_vertex)
                .map(|c| [c.i, c.j]);
            Ok(DecompositionLine {
                parts: d.parts,
                ranks: d.ranks,
                vertex,
            })
        })
        .collect::<Result<_, polyrep::Error>>()?;
    let text = match args.format {
        OutputFormat::Json => to_json(&lines),
        _ => lines
            .iter()
            .map(|l| {
                let [a, b, c] = l.parts;
                let at = l
                    .vertex
                    .map_or_else(|| "-".to_owned(), |[i, j]| format!("({i},{j})"));
                let [x, y, z] = l.ranks;
                format!("{a}+{b}+{c} @ {at} ranks {x},{y},{z}\n")
            })
            .collect(),
    };
    print(&text)
}

#[derive(Serialize)]
struct TableRow {
    n: u64,
    count: u64,
}

#[derive(Serialize)]
struct TableDocument {
    s: u64,
    max: u64,
    rows: Vec<TableRow>,
}

fn table(args: TableArgs) -> Outcome {
    reject_format(
        "table",
        args.format,
        &[OutputFormat::Csv, OutputFormat::Json],
    )?;
    let table = count_table(order(args.s)?, args.max)?;
    let text = match args.format {
        OutputFormat::Json => to_json(&TableDocument {
            s: args.s,
            max: args.max,
            rows: table
                .rows()
                .map(|(n, count)| TableRow { n, count })
                .collect(),
        }),
        _ => {
            let mut out = String::from("n,count\n");
            for (n, c) in table.rows() {
                out.push_str(&format!("{n},{c}\n"));
            }
            out
        }
    };
    emit(&args.out, &text)
}

fn verify(args: VerifyArgs) -> Outcome {
    let report: IdentityReport = match args.suite {
        Suite::Hs => verify_hirschhorn_sellers(args.max.unwrap_or(200)),
        Suite::Hset => {
            let max = args.max.unwrap_or(10_000);
            let shown = legendre_exceptions_upto(max.min(100));
            let listed: Vec<String> = shown.iter().map(u64::to_string).collect();
            print(&format!(
                "exceptions <= {}: {} ({})\n",
                max.min(100),
                shown.len(),
                listed.join(", ")
            ))?;
            verify_h_set(max)
        }
        Suite::Coverage => verify_triangular_coverage(args.max.unwrap_or(10_000)),
        Suite::Oracle => verify_oracle_equivalence(3..=10, args.max.unwrap_or(2000))?,
        Suite::Theorem1 => verify_theorem1(&[3, 4, 5], args.max.unwrap_or(1000))?,
    };
    print(&format!("{report}\n"))?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{} failures in {}",
            report.failures.len(),
            report.name
        )))
    }
}

fn graph(args: GraphArgs) -> Outcome {
    reject_format(
        "graph",
        args.format,
        &[OutputFormat::Dot, OutputFormat::Json],
    )?;
    let g = build_graph(order(args.s)?, args.max)?;
    let text = match args.format {
        OutputFormat::Json => g.to_json(),
        _ => g.to_dot(),
    };
    emit(&args.out, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Count(a) => count(a),
        Command::Decompose(a) => decompose(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Graph(a) => graph(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Verification(m) => eprintln!("verification failed: {m}"),
                Failure::Io(m) => eprintln!("i/o error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
