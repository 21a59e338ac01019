//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification finds a counterexample,
//! 2 for usage and parse errors, 3 when an input violates a mathematical
//! precondition such as a singular pivot block.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::circuits::{
    cohn_lempel_check, digraph_of, overlap_graph, trace_partition, walk_distribution, DoubleOccurrenceString,
};
use crate::domain::Subset;
use crate::error::Error;
use crate::graph::{pivot_orbit, Graph};
use crate::interlace::{q_direct, q_from_q_prime, q_prime_direct, q_prime_from_q, q_recursive};
use crate::matrix::Matrix;
use crate::pivot::pivot;
use crate::scalar::Field;
use crate::set_systems::{norm_of, partition_sequence_of};
use crate::verify::{self, Property, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ppt", version, about = "Principal pivot transforms, interlace polynomials and circle-graph walks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pivot a matrix on a set of labels.
    Pivot {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_name = "LABELS", allow_hyphen_values = true)]
        on: String,
    },
    /// Nullity of a matrix or of one principal submatrix.
    Nullity {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_name = "LABELS")]
        subset: Option<String>,
    },
    /// Partition sequence by nullity of principal submatrices.
    Pseq {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        norm_only: bool,
    },
    /// Interlace polynomials q' and q.
    Interlace {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Overlap graph of a double occurrence string.
    Overlap {
        #[arg(long)]
        dos: String,
    },
    /// Closed walks obtained by switching transitions at the given vertices.
    Walks {
        #[arg(long)]
        dos: String,
        #[arg(long, value_name = "LABELS", default_value = "")]
        flip: String,
    },
    /// Distribution of walk counts over all vertex subsets.
    Distribution {
        #[arg(long)]
        dos: String,
    },
    /// Pivot orbit of a graph under elementary pivots.
    Orbit {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Randomized check of one identity.
    Verify {
        #[arg(long)]
        prop: Property,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "f2")]
        field: Field,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Recursive,
    Both,
}

/// Outcome of a command that ran to completion.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Math(e)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, err) {
        Ok(outcome) => {
            let _ = write!(out, "{}", outcome.stdout);
            outcome.code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_PRECONDITION
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Reads a matrix file, or a graph file as its adjacency matrix over GF(2).
fn load_matrix(path: &Path) -> Result<Matrix, Failure> {
    let text = read_file(path)?;
    if is_graph_text(&text) {
        Ok(Graph::parse(&text)?.to_matrix())
    } else {
        Ok(Matrix::parse(&text)?)
    }
}

/// Reads a graph file, or a symmetric GF(2) matrix file.
fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_file(path)?;
    if is_graph_text(&text) {
        Ok(Graph::parse(&text)?)
    } else {
        Ok(Graph::from_matrix(&Matrix::parse(&text)?)?)
    }
}

fn is_graph_text(text: &str) -> bool {
    crate::io::content_lines(text).next().is_some_and(|(_, l)| l == "graph")
}

fn execute(command: Command, err: &mut dyn Write) -> Result<Outcome, Failure> {
    match command {
        Command::Pivot { matrix, on } => {
            let a = load_matrix(&matrix)?;
            let x = Subset::parse(a.domain(), &on)?;
            Ok(Outcome::ok(pivot(&a, &x)?.to_string()))
        }
        Command::Nullity { matrix, subset } => {
            let a = load_matrix(&matrix)?;
            let mask = match subset {
                Some(s) => Subset::parse(a.domain(), &s)?.mask(),
                None => a.domain().full_mask(),
            };
            Ok(Outcome::ok(format!("{}\n", a.principal_nullity(mask))))
        }
        Command::Pseq { matrix, norm_only } => {
            let a = load_matrix(&matrix)?;
            let text = if norm_only {
                format!("norm: {}\n", norm_of(&a)?)
            } else {
                partition_sequence_of(&a)?.to_string()
            };
            Ok(Outcome::ok(text))
        }
        Command::Interlace { graph, method } => interlace(&graph, method),
        Command::Overlap { dos } => {
            let s = DoubleOccurrenceString::parse(&dos)?;
            Ok(Outcome::ok(overlap_graph(&s).to_string()))
        }
        Command::Walks { dos, flip } => walks(&dos, &flip),
        Command::Distribution { dos } => distribution(&dos),
        Command::Orbit { graph } => {
            let g = load_graph(&graph)?;
            let orbit = pivot_orbit(&g)?;
            let mut text = format!("orbit: {} graphs\n", orbit.graphs.len());
            for (i, h) in orbit.graphs.iter().enumerate() {
                text.push_str(&format!("graph {i}: {}\n", h.summary()));
            }
            text.push_str(&format!("moves: {}\n", orbit.moves.len()));
            for m in &orbit.moves {
                text.push_str(&format!("{} -> {} *{}\n", m.from, m.to, m.pivot));
            }
            Ok(Outcome::ok(text))
        }
        Command::Verify { prop, trials, size, seed, field } => {
            if size == 0 {
                return Err(Failure::Usage("--size must be at least 1".into()));
            }
            let config = VerifyConfig { trials, size, seed, field };
            let report = verify::run(prop, &config)?;
            for f in &report.failures {
                let _ = writeln!(err, "{f}");
            }
            let code = if report.all_passed() { EXIT_OK } else { EXIT_VERIFICATION };
            Ok(Outcome { stdout: format!("{report}\n"), code })
        }
    }
}

fn interlace(path: &Path, method: Method) -> Result<Outcome, Failure> {
    let a = load_matrix(path)?;
    let direct = || -> Result<_, Failure> {
        let qp = q_prime_direct(&a)?;
        let q = q_from_q_prime(&qp);
        Ok((qp, q))
    };
    let recursive = || -> Result<_, Failure> {
        let g = Graph::from_matrix(&a)
            .map_err(|_| Failure::Usage("the recursive method needs a graph (a symmetric GF(2) matrix)".into()))?;
        let q = q_recursive(&g);
        Ok((q_prime_from_q(&q), q))
    };
    let lines = |qp: &crate::interlace::IntPolynomial, q: &crate::interlace::IntPolynomial| {
        format!("q': {}\nq: {}\n", qp.coefficient_line(), q.coefficient_line())
    };
    Ok(match method {
        Method::Direct => {
            let (qp, q) = direct()?;
            Outcome::ok(lines(&qp, &q))
        }
        Method::Recursive => {
            let (qp, q) = recursive()?;
            Outcome::ok(lines(&qp, &q))
        }
        Method::Both => {
            let (qp, q) = direct()?;
            let (_, q_rec) = recursive()?;
            let mut text = lines(&qp, &q);
            if q_rec == q && q_direct(&a)? == q {
                text.push_str("direct and recursive agree\n");
                Outcome::ok(text)
            } else {
                text.push_str(&format!("MISMATCH: recursive q: {}\n", q_rec.coefficient_line()));
                Outcome { stdout: text, code: EXIT_VERIFICATION }
            }
        }
    })
}

fn walks(dos: &str, flip: &str) -> Result<Outcome, Failure> {
    let s = DoubleOccurrenceString::parse(dos)?;
    let x = Subset::parse(s.domain(), flip)?;
    let partition = trace_partition(&s, &x)?;
    let sep = if s.letters().iter().any(|l| l.chars().count() > 1) { " " } else { "" };
    let mut text = format!("walks: {}\n", partition.len());
    for w in &partition.walks {
        let letters: Vec<&str> = w.iter().map(|&arc| s.letters()[arc].as_str()).collect();
        text.push_str(&letters.join(sep));
        text.push('\n');
    }
    let (count, expected) = cohn_lempel_check(&s, &x)?;
    let ok = count == expected;
    text.push_str(&format!(
        "cohn-lempel: walks {count}, nullity + 1 = {expected}: {}\n",
        if ok { "ok" } else { "FAIL" }
    ));
    Ok(Outcome { stdout: text, code: if ok { EXIT_OK } else { EXIT_VERIFICATION } })
}

fn distribution(dos: &str) -> Result<Outcome, Failure> {
    let s = DoubleOccurrenceString::parse(dos)?;
    let walks = walk_distribution(&s)?;
    let norm = norm_of(&overlap_graph(&s).to_matrix())?;
    let circuits = digraph_of(&s).euler_circuit_count();
    let ok = walks == norm && walks.counts().first().copied() == Some(circuits);
    let text = format!(
        "distribution: {walks}\nnorm: {norm}\neuler circuits: {circuits}\ncross-check: {}\n",
        if ok { "ok" } else { "FAIL" }
    );
    Ok(Outcome { stdout: text, code: if ok { EXIT_OK } else { EXIT_VERIFICATION } })
}
