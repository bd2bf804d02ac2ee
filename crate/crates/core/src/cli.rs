//! Command-line surface of `divgraph`.
//!
//! Exit codes follow the grep convention: 0 yes, 1 no, 2 usage or I/O error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::{BigInt, Sign};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{construct_order_size, max_size};
use crate::graph::Graph;
use crate::labeling::{orient_by_divisibility, verify_certificate, Labeling};
use crate::recognition::is_divisor_graph;

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

/// Largest order accepted by `sweep`.
pub const SWEEP_MAX_ORDER: usize = 10;

/// On-disk graph: sorted `[u, v]` edges with `u < v`, and optionally one
/// decimal label per vertex. Keys serialize in alphabetical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub n: usize,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] crate::Error),
    #[error("label {0:?} is not a positive decimal integer")]
    BadLabel(String),
    #[error("document has {labels} labels for {n} vertices")]
    LabelCount { n: usize, labels: usize },
}

impl GraphDocument {
    pub fn new(graph: &Graph, labeling: Option<&Labeling>) -> Self {
        Self {
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
            labels: labeling.map(|lab| lab.values().iter().map(ToString::to_string).collect()),
            n: graph.order(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Compact JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn graph(&self) -> Result<Graph, DocumentError> {
        Ok(Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?)
    }

    pub fn labeling(&self) -> Result<Option<Labeling>, DocumentError> {
        let Some(labels) = &self.labels else {
            return Ok(None);
        };
        if labels.len() != self.n {
            return Err(DocumentError::LabelCount {
                n: self.n,
                labels: labels.len(),
            });
        }
        let values = labels
            .iter()
            .map(|text| match text.parse::<BigInt>() {
                Ok(value) if value.sign() == Sign::Plus => Ok(value.magnitude().clone()),
                _ => Err(DocumentError::BadLabel(text.clone())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Some(Labeling::new(values)?))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "divgraph",
    version,
    about = "Construct, certify and recognize divisor graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a divisor graph of order N and size M, with its labels.
    Construct {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'm')]
        m: usize,
        /// Output path, standard output when omitted.
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Verify the labels in a document, or search for a certificate.
    Check {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
    },
    /// Construct and verify every (n, m) cell up to the given order.
    Sweep {
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Emit a document as Graphviz DOT.
    ExportDot {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        /// Orient edges by label divisibility.
        #[arg(long)]
        oriented: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_YES
            };
        }
    };
    let result = match cli.command {
        Command::Construct { n, m, out: path } => cmd_construct(n, m, path.as_deref(), out),
        Command::Check { input } => cmd_check(&input, out),
        Command::Sweep { n_max } => cmd_sweep(n_max, out),
        Command::ExportDot { input, oriented } => cmd_export_dot(&input, oriented, out),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn error(message: impl ToString) -> Self {
        Self {
            code: EXIT_ERROR,
            message: message.to_string(),
        }
    }

    fn no(message: impl ToString) -> Self {
        Self {
            code: EXIT_NO,
            message: message.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(Failure::error)
}

fn read_document(path: &Path) -> Result<GraphDocument, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::error(format!("{}: {e}", path.display())))?;
    GraphDocument::parse(&text).map_err(|e| Failure::error(format!("{}: {e}", path.display())))
}

fn cmd_construct(n: usize, m: usize, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let max = max_size(n);
    if m > max {
        return Err(Failure::error(format!(
            "size {m} is out of range, order {n} allows at most C({n},2) = {max} edges"
        )));
    }
    let result = construct_order_size(n, m).map_err(Failure::error)?;
    let text = GraphDocument::new(&result.graph, Some(&result.certificate)).to_json();
    match path {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::error(format!("{}: {e}", path.display())))?
        }
        None => emit(out, &text)?,
    }
    Ok(EXIT_YES)
}

fn cmd_check(path: &Path, out: &mut dyn Write) -> CmdResult {
    let doc = read_document(path)?;
    let graph = doc.graph().map_err(Failure::error)?;
    match doc.labeling().map_err(Failure::error)? {
        Some(labeling) => {
            if verify_certificate(&graph, &labeling).map_err(Failure::error)? {
                emit(out, "valid certificate\n")?;
                Ok(EXIT_YES)
            } else {
                emit(out, "invalid certificate\n")?;
                Ok(EXIT_NO)
            }
        }
        None => match is_divisor_graph(&graph) {
            Some(cert) => {
                emit(
                    out,
                    &GraphDocument::new(&graph, Some(&cert.labeling)).to_json(),
                )?;
                Ok(EXIT_YES)
            }
            None => {
                emit(out, "not a divisor graph\n")?;
                Ok(EXIT_NO)
            }
        },
    }
}

/// Constructs `(n, m)` and re-checks everything the result promises.
pub fn verify_cell(n: usize, m: usize) -> Result<(), String> {
    let result = construct_order_size(n, m).map_err(|e| e.to_string())?;
    if result.graph.order() != n || result.graph.size() != m {
        return Err(format!(
            "got order {} size {}",
            result.graph.order(),
            result.graph.size()
        ));
    }
    if result.orientation.underlying_graph() != result.graph {
        return Err("orientation does not match the graph".into());
    }
    if !result.orientation.is_transitive() {
        return Err("orientation is not transitive".into());
    }
    match verify_certificate(&result.graph, &result.certificate) {
        Ok(true) => Ok(()),
        Ok(false) => Err("certificate does not reproduce the graph".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_sweep(n_max: usize, out: &mut dyn Write) -> CmdResult {
    if !(1..=SWEEP_MAX_ORDER).contains(&n_max) {
        return Err(Failure::error(format!(
            "--n-max must lie in 1..={SWEEP_MAX_ORDER}, got {n_max}"
        )));
    }
    let cells: Vec<(usize, usize)> = (1..=n_max)
        .flat_map(|n| (0..=max_size(n)).map(move |m| (n, m)))
        .collect();
    let outcomes: Vec<_> = cells
        .par_iter()
        .map(|&(n, m)| (n, m, verify_cell(n, m)))
        .collect();

    let mut table = String::from("n  cells  verified\n");
    let mut total = 0;
    for n in 1..=n_max {
        let row: Vec<_> = outcomes.iter().filter(|(k, _, _)| *k == n).collect();
        let passed = row.iter().filter(|(_, _, r)| r.is_ok()).count();
        total += passed;
        writeln!(table, "{n:<2} {:>6} {:>9}", row.len(), passed).unwrap();
    }
    writeln!(table, "total: {total} of {} cells verified", cells.len()).unwrap();
    emit(out, &table)?;

    let failures: Vec<String> = outcomes
        .iter()
        .filter_map(|(n, m, r)| r.as_ref().err().map(|e| format!("(n={n}, m={m}): {e}")))
        .collect();
    if failures.is_empty() {
        Ok(EXIT_YES)
    } else {
        Err(Failure::no(format!(
            "verification failed for {}",
            failures.join("; ")
        )))
    }
}

/// DOT text for `graph`, as a `digraph` when an orientation is given.
pub fn to_dot(
    graph: &Graph,
    labeling: Option<&Labeling>,
    oriented: Option<&crate::Digraph>,
) -> String {
    let (kind, connector) = if oriented.is_some() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut text = format!("{kind} G {{\n");
    for v in 1..=graph.order() {
        match labeling {
            Some(lab) => writeln!(text, "  v{v} [label=\"{}\"];", lab.get(v)).unwrap(),
            None => writeln!(text, "  v{v};").unwrap(),
        }
    }
    let pairs: Vec<(usize, usize)> = match oriented {
        Some(d) => d.arcs().collect(),
        None => graph.edges().collect(),
    };
    for (u, v) in pairs {
        writeln!(text, "  v{u} {connector} v{v};").unwrap();
    }
    text.push_str("}\n");
    text
}

fn cmd_export_dot(path: &Path, oriented: bool, out: &mut dyn Write) -> CmdResult {
    let doc = read_document(path)?;
    let graph = doc.graph().map_err(Failure::error)?;
    let labeling = doc.labeling().map_err(Failure::error)?;
    let arcs = if oriented {
        let lab = labeling
            .as_ref()
            .ok_or_else(|| Failure::no("--oriented needs a document with labels"))?;
        Some(orient_by_divisibility(&graph, lab).map_err(Failure::no)?)
    } else {
        None
    };
    emit(out, &to_dot(&graph, labeling.as_ref(), arcs.as_ref()))?;
    Ok(EXIT_YES)
}
