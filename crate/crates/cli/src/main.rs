use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pblring::classify::{self, ClassifyError};
use pblring::props::{self, CatalogOptions, CorpusKind, PropsError, Tag};
use pblring::report::{self, FindReport, PropsReport};
use pblring::{Document, FiniteRing, IdealLattice, Report, RingSpec, SpecError};

const EXIT_PARSE: u8 = 2;
const EXIT_CONSTRUCT: u8 = 3;
const EXIT_BOUNDS: u8 = 4;
const EXIT_INVARIANT: u8 = 5;

#[derive(Parser)]
#[command(name = "pblring", version, about = "Ideal lattices of finite rings")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Refuse to build rings with more elements than this.
    #[arg(long, global = true, default_value_t = 256)]
    max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Corpus {
    Default,
    None,
}

impl From<Corpus> for CorpusKind {
    fn from(c: Corpus) -> CorpusKind {
        match c {
            Corpus::Default => CorpusKind::Default,
            Corpus::None => CorpusKind::None,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a ring against every predicate.
    Check { spec: String },
    /// List the ideals with annihilators and lattice data.
    Ideals {
        spec: String,
        /// Emit the Hasse diagram as DOT (same as --format dot).
        #[arg(long)]
        dot: bool,
    },
    /// Check the axioms of the ideal algebra.
    Algebra { spec: String },
    /// Subdirect decomposition through the kernels K_x.
    Decompose { spec: String },
    /// Evaluate the property catalog over a corpus.
    Props {
        #[arg(long, value_enum, default_value_t = Corpus::Default)]
        corpus: Corpus,
        /// Only run these property ids (repeatable).
        #[arg(long)]
        only: Vec<String>,
        /// Worker threads; 0 picks automatically.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Per-ring time budget in seconds.
        #[arg(long, default_value_t = 10.0)]
        budget: f64,
    },
    /// Search the corpus for a ring violating one property.
    Find {
        id: String,
        #[arg(long, value_enum, default_value_t = Corpus::Default)]
        corpus: Corpus,
    },
    /// Print the operation tables in table-file format.
    Dump { spec: String },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Failure {
        let code = match e {
            SpecError::Parse { .. } => EXIT_PARSE,
            SpecError::Bounds(_) => EXIT_BOUNDS,
            SpecError::Construct(_) => EXIT_CONSTRUCT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Failure {
        Failure::new(EXIT_INVARIANT, e.to_string())
    }
}

impl From<PropsError> for Failure {
    fn from(e: PropsError) -> Failure {
        let code = match e {
            PropsError::UnknownProperty(_) => EXIT_PARSE,
            PropsError::Pool(_) => EXIT_CONSTRUCT,
        };
        Failure::new(code, e.to_string())
    }
}

/// An existing file is read as a table file; anything else is a spec.
fn load(spec: &str, max_order: usize) -> Result<Arc<FiniteRing>, Failure> {
    let parsed = if Path::new(spec).is_file() {
        RingSpec::TablesFile(spec.into())
    } else {
        RingSpec::parse(spec)?
    };
    Ok(parsed.build_with_limit(max_order)?)
}

fn lattice(spec: &str, max_order: usize) -> Result<IdealLattice, Failure> {
    Ok(IdealLattice::new(load(spec, max_order)?))
}

/// The report plus an optional exit code for a detected theorem failure.
fn run(cli: &Cli) -> Result<(Report, Option<u8>), Failure> {
    let max = cli.max_order;
    let report = match &cli.command {
        Command::Check { spec } => Report::Check(classify::classify(&lattice(spec, max)?)?),
        Command::Ideals { spec, .. } => Report::Ideals(report::ideals_report(&lattice(spec, max)?)),
        Command::Algebra { spec } => Report::Algebra(report::algebra_report(&lattice(spec, max)?)),
        Command::Decompose { spec } => {
            let r = report::decompose_report(&lattice(spec, max)?);
            let bad = r.decomposition.pseudo_bl_input && !r.decomposition.sound();
            return Ok((Report::Decompose(r), bad.then_some(EXIT_INVARIANT)));
        }
        Command::Props {
            corpus,
            only,
            jobs,
            budget,
        } => {
            if !budget.is_finite() || *budget < 0.0 {
                return Err(Failure::new(
                    EXIT_PARSE,
                    "budget must be a non-negative number of seconds",
                ));
            }
            let opts = CatalogOptions {
                only: (!only.is_empty()).then(|| only.clone()),
                budget: Duration::from_secs_f64(*budget),
                jobs: *jobs,
            };
            let entries = props::build_corpus((*corpus).into());
            let matrix = props::run_catalog(&entries, &opts)?;
            let bad = !matrix.theorem_failures().is_empty();
            let name = match corpus {
                Corpus::Default => "default",
                Corpus::None => "none",
            };
            return Ok((
                Report::Props(PropsReport {
                    corpus: name.to_string(),
                    matrix,
                }),
                bad.then_some(EXIT_INVARIANT),
            ));
        }
        Command::Find { id, corpus } => {
            let property =
                props::property(id).ok_or_else(|| PropsError::UnknownProperty(id.clone()))?;
            let entries = props::build_corpus((*corpus).into());
            let found = props::find_counterexample(id, &entries)?;
            let bad = found.is_some() && property.tag == Tag::Theorem;
            return Ok((
                Report::Find(FindReport {
                    property: id.clone(),
                    tag: property.tag,
                    searched: entries.len(),
                    counterexample: found,
                }),
                bad.then_some(EXIT_INVARIANT),
            ));
        }
        Command::Dump { spec } => Report::Tables(report::tables_report(&load(spec, max)?)),
    };
    Ok((report, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.command {
        Command::Ideals { dot: true, .. } => Format::Dot,
        _ => cli.format,
    };
    let (report, code) = match run(&cli) {
        Ok(x) => x,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => Document::new(report).to_json(),
        Format::Dot => match report.to_dot() {
            Some(d) => d,
            None => {
                eprintln!("error: dot output is only available for `ideals` and `algebra`");
                return ExitCode::from(EXIT_PARSE);
            }
        },
    };
    print!("{text}");
    ExitCode::from(code.unwrap_or(0))
}
