//! `geohull` command-line front end.
//!
//! Exit codes: 0 success, 1 a reported check failed, 2 unreadable or
//! malformed input, 3 an input violates an operation's precondition.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use geohull::chordal::{chordality, simplicial_vertices};
use geohull::convexity::Geodesics;
use geohull::reduction::{
    build_reduction, equivalence_check, random_restricted_cnf, verify_structure,
    EquivalenceOptions, RestrictedCnf,
};
use geohull::solver::{hull_number_bruteforce, HullSolver};
use geohull::{fixtures, Graph, VertexSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "geohull",
    version,
    about = "Geodetic convexity and hull-number toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphArg {
    /// Graph file: "<vertices> <edges>" header, then one "<u> <v>" per line.
    #[arg(long = "graph", value_name = "FILE")]
    path: PathBuf,
}

#[derive(Debug, Args)]
struct GraphSetArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Comma-separated 0-based vertex indices.
    #[arg(long = "set", value_name = "i,j,k", allow_hyphen_values = true)]
    set: String,
}

#[derive(Debug, Args)]
struct CnfArg {
    /// DIMACS CNF file.
    #[arg(long = "cnf", value_name = "FILE")]
    path: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Fixture {
    /// The five-vertex chordal graph x1, x2, x3, t, z.
    Fig2,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertices on shortest paths between members of the set.
    Interval(GraphSetArgs),
    /// Smallest convex superset of the set.
    Hull(GraphSetArgs),
    /// Whether the set is convex.
    Convex(GraphSetArgs),
    /// Whether the set is concave (its complement is convex).
    Concave(GraphSetArgs),
    /// Hull number with a minimum hull set.
    Hullnum {
        #[command(flatten)]
        graph: GraphArg,
        /// Use exhaustive subset enumeration instead of the pruned search.
        #[arg(long)]
        oracle: bool,
        /// Maximum number of hull evaluations.
        #[arg(long, value_name = "N")]
        budget: Option<u64>,
    },
    /// Simplicial vertices.
    Simplicial(GraphArg),
    /// Perfect elimination ordering, or "not chordal".
    Chordal(GraphArg),
    /// Binary geodesic dependencies "{u,v} -> w".
    Deps(GraphArg),
    /// Build the gadget graph of a restricted CNF instance.
    Reduce {
        #[command(flatten)]
        cnf: CnfArg,
        /// Write the graph here instead of standard output.
        #[arg(long, value_name = "FILE")]
        out_graph: Option<PathBuf>,
        /// Write "<index> <role>" vertex labels here.
        #[arg(long, value_name = "FILE")]
        out_labels: Option<PathBuf>,
    },
    /// Structural checks on the gadget graph of a CNF instance.
    VerifyReduction(CnfArg),
    /// Check satisfiability against hull number <= 4n.
    Equiv {
        #[command(flatten)]
        cnf: CnfArg,
        /// Maximum number of hull evaluations.
        #[arg(long, value_name = "N")]
        budget: Option<u64>,
    },
    /// Print a built-in graph.
    Fixture {
        #[arg(value_enum)]
        name: Fixture,
    },
    /// Print a seeded random restricted CNF instance in DIMACS format.
    GenCnf {
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_name = "N", default_value_t = 0)]
        seed: u64,
    },
}

/// An error with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

/// Library errors raised while computing are precondition violations;
/// parse errors and malformed edges are input errors.
impl From<geohull::Error> for Failure {
    fn from(e: geohull::Error) -> Self {
        let code = match e {
            geohull::Error::Parse { .. } => EXIT_INPUT,
            _ => EXIT_PRECONDITION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(String, i32), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_graph(arg: &GraphArg) -> Result<Graph, Failure> {
    let text = read(&arg.path)?;
    Graph::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", arg.path.display())))
}

fn load_cnf(arg: &CnfArg) -> Result<RestrictedCnf, Failure> {
    let text = read(&arg.path)?;
    RestrictedCnf::from_dimacs(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", arg.path.display())))
}

fn load_graph_and_set(args: &GraphSetArgs) -> Result<(Graph, VertexSet), Failure> {
    let g = load_graph(&args.graph)?;
    let set = VertexSet::parse(g.vertex_count(), &args.set).map_err(|e| match e {
        geohull::Error::Parse { message, .. } => Failure::input(format!("--set: {message}")),
        other => other.into(),
    })?;
    Ok((g, set))
}

fn ok(text: String) -> Outcome {
    Ok((text, EXIT_OK))
}

fn line(value: impl std::fmt::Display) -> String {
    format!("{value}\n")
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Interval(args) => {
            let (g, s) = load_graph_and_set(&args)?;
            ok(line(Geodesics::new(&g)?.interval(&s)?))
        }
        Command::Hull(args) => {
            let (g, s) = load_graph_and_set(&args)?;
            ok(line(Geodesics::new(&g)?.hull(&s)?))
        }
        Command::Convex(args) => {
            let (g, s) = load_graph_and_set(&args)?;
            ok(line(Geodesics::new(&g)?.is_convex(&s)?))
        }
        Command::Concave(args) => {
            let (g, s) = load_graph_and_set(&args)?;
            ok(line(Geodesics::new(&g)?.is_concave(&s)?))
        }
        Command::Hullnum {
            graph,
            oracle,
            budget,
        } => {
            let g = load_graph(&graph)?;
            let result = if oracle {
                hull_number_bruteforce(&g)?
            } else {
                HullSolver::new(&g)?.budget(budget).solve()?
            };
            ok(format!("h={}\n{}\n", result.hull_number, result.witness))
        }
        Command::Simplicial(graph) => ok(line(simplicial_vertices(&load_graph(&graph)?))),
        Command::Chordal(graph) => match chordality(&load_graph(&graph)?) {
            Some(order) => ok(line(order)),
            None => ok(line("not chordal")),
        },
        Command::Deps(graph) => {
            let g = load_graph(&graph)?;
            let deps = Geodesics::new(&g)?.interval_dependencies();
            ok(deps.iter().map(line).collect())
        }
        Command::Reduce {
            cnf,
            out_graph,
            out_labels,
        } => {
            let rg = build_reduction(&load_cnf(&cnf)?)?;
            let graph_text = rg.graph().to_text();
            if let Some(path) = &out_labels {
                write(path, &rg.labels_text())?;
            }
            match &out_graph {
                Some(path) => {
                    write(path, &graph_text)?;
                    ok(format!(
                        "wrote {} vertices, {} edges\n",
                        rg.graph().vertex_count(),
                        rg.graph().edge_count()
                    ))
                }
                None => ok(graph_text),
            }
        }
        Command::VerifyReduction(cnf) => {
            let rg = build_reduction(&load_cnf(&cnf)?)?;
            let report = verify_structure(&rg);
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok((report.to_string(), code))
        }
        Command::Equiv { cnf, budget } => {
            let opts = EquivalenceOptions {
                budget,
                ..Default::default()
            };
            let report = equivalence_check(&load_cnf(&cnf)?, opts)?;
            let code = if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok((report.to_string(), code))
        }
        Command::Fixture {
            name: Fixture::Fig2,
        } => {
            let g = fixtures::fig2();
            let names: Vec<String> = g
                .vertices()
                .map(|v| format!("{v}={}", g.name(v).unwrap_or("?")))
                .collect();
            ok(format!("# vertices: {}\n{}", names.join(" "), g.to_text()))
        }
        Command::GenCnf { n, seed } => {
            let cnf = random_restricted_cnf(n as usize, seed);
            ok(format!(
                "c restricted instance n={n} seed={seed}\n{}",
                cnf.to_dimacs()
            ))
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}
