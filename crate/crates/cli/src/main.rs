mod forest_spec;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qramsey_core::formulas::{
    conjecture_value, path_cycle, path_fan, path_quasar, path_star_answer, path_wheel, RamseyAnswer,
};
use qramsey_core::oracle::{append_log, ramsey_exact, LogEntry, MAX_ORACLE_ORDER};
use qramsey_core::selfcheck::{check_grid, check_grid_with, GridReport};
use qramsey_core::witness::{quasar_witnesses, star_witness, verify_witness};
use qramsey_core::{formulas, graph6, Error, LinearForest, Pattern, RamseyQuery, SmallGraph};

use forest_spec::ForestSpec;

#[derive(Parser)]
#[command(
    name = "qramsey",
    version,
    about = "Path-star and path-quasar Ramsey numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula.
    Compute(ComputeArgs),
    /// Build and verify the lower-bound graphs.
    Witness(WitnessArgs),
    /// Exhaustive search over small graphs.
    Oracle(OracleArgs),
    /// Cross-check the path-star characterizations on a grid.
    Selfcheck(SelfcheckArgs),
    /// Print the range tables and an oracle comparison.
    Table(table::TableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Star,
    Quasar,
    Fan,
    Cycle,
    Wheel,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Path order.
    #[arg(short)]
    n: u64,
    /// Star leaves, cycle or wheel rim length, fan size k, or quasar path order.
    #[arg(short, conflicts_with = "forest")]
    m: Option<u64>,
    /// Linear forest, e.g. "3,2,2" or "4x2".
    #[arg(long)]
    forest: Option<ForestSpec>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Dot,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("target").required(true))]
struct WitnessArgs {
    #[arg(short)]
    n: u64,
    #[arg(long, group = "target")]
    star: Option<u64>,
    #[arg(long, group = "target")]
    forest: Option<ForestSpec>,
    #[arg(long, value_enum, default_value = "graph6")]
    emit: Emit,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("target").required(true))]
struct OracleArgs {
    #[arg(short)]
    n: u32,
    #[arg(long, group = "target")]
    star: Option<u32>,
    /// Quasar K_1 + F.
    #[arg(long, group = "target")]
    forest: Option<ForestSpec>,
    #[arg(long, group = "target")]
    cycle: Option<u32>,
    #[arg(long, group = "target")]
    wheel: Option<u32>,
    #[arg(long, group = "target")]
    path: Option<u32>,
    /// Largest order to search.
    #[arg(long, default_value_t = 9)]
    cap: usize,
    /// Append the result to this JSON-lines file.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Omit timing.
    #[arg(long)]
    stable_output: bool,
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = 12)]
    n_max: u64,
    #[arg(long, default_value_t = 40)]
    m_max: u64,
    /// Add one to the closed form at "N,M" (negative control).
    #[arg(long, hide = true, value_parser = parse_cell)]
    inject: Option<(u64, u64)>,
}

fn parse_cell(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(',').ok_or("expected N,M")?;
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

/// Failure classes, each with its own exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Capacity(String),
    Consistency(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Capacity(_) => 2,
            Failure::Consistency(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Capacity(m) | Failure::Consistency(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapacityExceeded { .. } => Failure::Capacity(e.to_string()),
            Error::Consistency(_) => Failure::Consistency(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Compute(args) => compute(&args),
        Command::Witness(args) => witness(&args),
        Command::Oracle(args) => oracle(&args),
        Command::Selfcheck(args) => selfcheck(&args),
        Command::Table(args) => table::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn require<T: Copy>(value: Option<T>, what: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("this kind needs {what}")))
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let n = args.n;
    let forest = || -> Result<LinearForest, Failure> {
        match (&args.forest, args.m) {
            (Some(f), _) => Ok(f.0.clone()),
            (None, Some(m)) => {
                Ok(LinearForest::path(u32::try_from(m).map_err(|_| {
                    Failure::Usage(format!("-m {m} is too large"))
                })?)?)
            }
            (None, None) => Err(Failure::Usage("quasar needs --forest or -m".into())),
        }
    };
    let answer = match args.kind {
        Kind::Star => path_star_answer(n, require(args.m, "-m")?)?,
        Kind::Quasar => path_quasar(n, &forest()?)?,
        Kind::Fan => {
            let k = match (&args.forest, args.m) {
                (Some(f), _) if f.0.orders().iter().all(|&p| p == 2) => {
                    f.0.component_count() as u64
                }
                (Some(f), _) => {
                    return Err(Failure::Usage(format!(
                        "fan forest must be all 2s, got {f}"
                    )))
                }
                (None, m) => require(m, "-m K or --forest KX2")?,
            };
            path_fan(n, k)?
        }
        Kind::Cycle => RamseyAnswer::exact(
            path_cycle(n, require(args.m, "-m")?)?,
            formulas::Provenance::PathCycle,
        ),
        Kind::Wheel => RamseyAnswer::exact(
            path_wheel(n, require(args.m, "-m")?)?,
            formulas::Provenance::PathWheel,
        ),
    };
    println!("{answer}");
    if !answer.is_exact() {
        if let Kind::Quasar = args.kind {
            println!("conjecture: {}", conjecture_value(n, &forest()?)?);
        }
    }
    Ok(())
}

fn witness(args: &WitnessArgs) -> Result<(), Failure> {
    let n = args.n;
    let n32 = u32::try_from(n).map_err(|_| Failure::Usage(format!("-n {n} is too large")))?;
    let (target, graphs): (Pattern, Vec<SmallGraph>) = match (args.star, &args.forest) {
        (Some(m), _) => {
            let m32 =
                u32::try_from(m).map_err(|_| Failure::Usage(format!("--star {m} is too large")))?;
            (Pattern::Star(m32), vec![star_witness(n, m)?])
        }
        (None, Some(f)) => (
            Pattern::Quasar(f.0.clone()),
            quasar_witnesses(n, &f.0)?.to_vec(),
        ),
        (None, None) => unreachable!("clap requires a target"),
    };
    let mut invalid = 0;
    for (i, g) in graphs.iter().enumerate() {
        let name = if graphs.len() == 1 {
            "G".to_string()
        } else {
            format!("G{}", i + 1)
        };
        let report = verify_witness(g, n32, &target);
        let verdict = match (report.no_path, report.no_target_in_complement) {
            (true, true) => "valid".to_string(),
            (false, _) => format!("INVALID (contains P_{n})"),
            (true, false) => format!("INVALID (complement contains {target})"),
        };
        if !report.is_valid() {
            invalid += 1;
        }
        println!(
            "{name}: order {}, claimed bound {}, {verdict}",
            g.order(),
            report.claimed_bound
        );
        match args.emit {
            Emit::Graph6 => println!("{}", graph6::encode(g)),
            Emit::Dot => print!("{}", g.to_dot(&name)),
        }
    }
    if invalid > 0 {
        return Err(Failure::Consistency(format!(
            "{invalid} witness graph(s) failed verification"
        )));
    }
    Ok(())
}

fn oracle_target(args: &OracleArgs) -> Pattern {
    if let Some(m) = args.star {
        Pattern::Star(m)
    } else if let Some(f) = &args.forest {
        Pattern::Quasar(f.0.clone())
    } else if let Some(m) = args.cycle {
        Pattern::Cycle(m)
    } else if let Some(m) = args.wheel {
        Pattern::Wheel(m)
    } else if let Some(m) = args.path {
        Pattern::Path(m)
    } else {
        unreachable!("clap requires a target")
    }
}

fn oracle(args: &OracleArgs) -> Result<(), Failure> {
    if args.cap > MAX_ORACLE_ORDER {
        return Err(Failure::Usage(format!(
            "--cap is at most {MAX_ORACLE_ORDER}"
        )));
    }
    let query = RamseyQuery::new(args.n, oracle_target(args))?;
    let result = match ramsey_exact(&query, args.cap) {
        Ok(r) => r,
        Err(Error::CapacityExceeded {
            cap,
            largest_counterexample,
        }) => {
            let last = largest_counterexample
                .map(|g| format!("; counterexample on {cap} vertices: {}", graph6::encode(&g)))
                .unwrap_or_default();
            return Err(Failure::Capacity(format!(
                "R(P_{}, {}) > {cap}{last}",
                query.n, query.target
            )));
        }
        Err(e) => return Err(e.into()),
    };
    if !query.is_counterexample(&result.counterexample) {
        return Err(Failure::Consistency(
            "reported counterexample does not check".into(),
        ));
    }
    let mut line = format!(
        "R = {}, counterexample {} (graph6), examined {} graphs",
        result.ramsey_value,
        graph6::encode(&result.counterexample),
        result.graphs_examined
    );
    if !args.stable_output {
        line.push_str(&format!(" in {} ms", result.elapsed.as_millis()));
    }
    println!("{line}");
    if let Some(path) = &args.log {
        append_log(path, &LogEntry::new(&query, &result))
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn selfcheck(args: &SelfcheckArgs) -> Result<(), Failure> {
    let report = match args.inject {
        None => check_grid(args.n_max, args.m_max),
        Some(cell) => check_grid_with(args.n_max, args.m_max, |p| {
            formulas::t_closed(p) + u64::from((p.n(), p.m()) == cell)
        }),
    };
    summarize(&report)
}

fn summarize(report: &GridReport) -> Result<(), Failure> {
    if let Some(m) = report.first_mismatch() {
        return Err(Failure::Consistency(format!(
            "{} disagreeing cell(s); first at (n, m) = ({}, {}): closed {}, min-characterization {}, recursion {}",
            report.mismatches.len(),
            m.n,
            m.m,
            m.closed,
            m.min_char,
            m.recursion
        )));
    }
    if let Some((n, m)) = report.sandwich_violations.first() {
        return Err(Failure::Consistency(format!(
            "sandwich bound fails at (n, m) = ({n}, {m})"
        )));
    }
    if let Some((n, m)) = report.trivial_row_violations.first() {
        return Err(Failure::Consistency(format!(
            "R(P_2, K_1,m) != m + 1 at (n, m) = ({n}, {m})"
        )));
    }
    println!("all 3 characterizations agree on {} cells", report.cells);
    Ok(())
}
