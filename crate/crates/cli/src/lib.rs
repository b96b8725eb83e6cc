//! Command-line frontend: argument parsing, dispatch, output formatting and
//! the character-table cache.

pub mod cache;
pub mod record;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unidescent::ggp::{theta_lift, FjMode, Model};
use unidescent::verify::{self, Criterion};
use unidescent::{partitions_of, CharacterCache, Ggp, Partition};

use record::{
    DescentRecord, FirstOccurrenceRecord, Meta, MultRecord, Output, ResultRecord, SweepRecord,
    TableRecord,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] unidescent::Error),
    #[error("cache: {0}")]
    Cache(String),
    #[error("{0}")]
    Usage(String),
    #[error("output: {0}")]
    Output(String),
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use unidescent::Error as E;
        match self {
            CliError::Engine(E::InvalidPartition(_) | E::Parse(_)) | CliError::Usage(_) => 2,
            CliError::Engine(E::Inexact(_)) | CliError::Output(_) | CliError::VerifyFailed => 1,
            CliError::Engine(_) => 3,
            CliError::Cache(_) => 4,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum FjModeArg {
    #[default]
    Declarative,
    Seesaw,
}

#[derive(Debug, Parser)]
#[command(
    name = "unidescent",
    version,
    about = "Exact GGP multiplicities, descents and theta lifts for unipotent representations of U_n(F_q)"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Character-table cache file.
    #[arg(long, global = true, env = cache::CACHE_ENV)]
    pub cache: Option<PathBuf>,
    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: Format,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse::<Model>().map_err(|e| e.to_string())
}

fn parse_criterion(s: &str) -> Result<Criterion, String> {
    s.parse::<Criterion>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First occurrence index and descent of π_λ; both models if --model is omitted.
    Descend {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = parse_model)]
        model: Option<Model>,
        /// Skip the multiplicity sweep that confirms the descent.
        #[arg(long)]
        no_verify_descent: bool,
    },
    /// m(π_λ, π_ν) for one ν, or for every ν ⊢ --target.
    Mult {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition, conflicts_with = "target", required_unless_present = "target")]
        nu: Option<Partition>,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, value_parser = parse_model)]
        model: Model,
        #[arg(long, value_enum, default_value_t)]
        fj_mode: FjModeArg,
        /// See-saw parameter μ₀; defaults to max(λ₁, ν₁).
        #[arg(long)]
        mu0: Option<usize>,
    },
    /// Θ_{n,n′}(π_λ) with n′ = --target.
    Theta {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        target: usize,
    },
    /// Character table of S_n.
    Chartable {
        #[arg(long)]
        n: usize,
    },
    /// Run the identity suites; exit status 1 on the first counterexample.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Suite name or number; repeatable. Default: all.
        #[arg(long = "suite", value_parser = parse_criterion)]
        suites: Vec<Criterion>,
    },
}

fn meta(start: Instant, covered: Option<bool>) -> Meta {
    Meta {
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        covered,
        elapsed_ms: u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX),
    }
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn write_csv(
    out: &mut dyn Write,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn emit(out: &mut dyn Write, format: Format, record: &ResultRecord) -> Result<(), CliError> {
    match (format, &record.output) {
        (Format::Json, _) => writeln!(out, "{}", record.to_json())?,
        (Format::Csv, Output::CharTable(t)) => {
            let header = std::iter::once("shape".to_string())
                .chain(t.labels.iter().map(ToString::to_string))
                .collect();
            let rows = t
                .labels
                .iter()
                .zip(&t.rows)
                .map(|(l, r)| {
                    std::iter::once(l.to_string())
                        .chain(r.iter().cloned())
                        .collect()
                })
                .collect();
            write_csv(out, header, rows)?;
        }
        (Format::Csv, Output::Sweep(s)) => {
            let header = MultRecord::CSV_HEADER
                .iter()
                .map(ToString::to_string)
                .collect();
            write_csv(
                out,
                header,
                s.entries.iter().map(MultRecord::csv_row).collect(),
            )?;
        }
        (Format::Csv, _) => {
            return Err(CliError::Usage(format!(
                "CSV output is only available for chartable and mult --target, not {}",
                record.command
            )))
        }
    }
    Ok(())
}

fn multiplicity(
    ggp: &Ggp,
    lambda: &Partition,
    nu: &Partition,
    model: Model,
    mode: FjModeArg,
    mu0: Option<usize>,
) -> Result<MultRecord, CliError> {
    let r = match (model, mode) {
        (Model::Bessel, _) => ggp.bessel_multiplicity(lambda, nu)?,
        (Model::FourierJacobi, FjModeArg::Declarative) => {
            ggp.fj_multiplicity(lambda, nu, FjMode::Declarative)?
        }
        (Model::FourierJacobi, FjModeArg::Seesaw) => {
            ggp.fj_multiplicity(lambda, nu, FjMode::Seesaw { mu0 })?
        }
    };
    Ok(MultRecord::new(lambda, nu, model, &r))
}

/// Builds the record for a non-`verify` command.
pub fn execute(command: &Command, chars: &Arc<CharacterCache>) -> Result<ResultRecord, CliError> {
    let start = Instant::now();
    let ggp = Ggp::new(Arc::clone(chars));
    let record = match command {
        Command::Descend {
            partition,
            model,
            no_verify_descent,
        } => {
            let verify =
                !no_verify_descent && partition.size() <= unidescent::ggp::DEFAULT_VERIFY_LIMIT;
            let mut ins = inputs([("partition", partition.to_string())]);
            let output = match model {
                Some(model) => {
                    ins.insert("model".into(), model.to_string());
                    Output::Descent(DescentRecord::from(
                        &ggp.descend_with(partition, *model, verify)?,
                    ))
                }
                None => {
                    let pair = ggp.first_occurrence_pair_with(partition, verify)?;
                    Output::FirstOccurrence(FirstOccurrenceRecord {
                        bessel: DescentRecord::from(&pair.bessel),
                        fourier_jacobi: DescentRecord::from(&pair.fourier_jacobi),
                        k: pair.k,
                    })
                }
            };
            ResultRecord {
                command: "descend".into(),
                inputs: ins,
                output,
                meta: meta(start, None),
            }
        }
        Command::Mult {
            lambda,
            nu,
            target,
            model,
            fj_mode,
            mu0,
        } => {
            let mut ins = inputs([("lambda", lambda.to_string()), ("model", model.to_string())]);
            if *model == Model::FourierJacobi {
                ins.insert("fj_mode".into(), format!("{fj_mode:?}").to_lowercase());
            }
            if let Some(mu0) = mu0 {
                ins.insert("mu0".into(), mu0.to_string());
            }
            let (output, covered) = match (nu, target) {
                (Some(nu), _) => {
                    ins.insert("nu".into(), nu.to_string());
                    let r = multiplicity(&ggp, lambda, nu, *model, *fj_mode, *mu0)?;
                    let covered = r.covered;
                    (Output::Multiplicity(r), covered)
                }
                (None, Some(m)) => {
                    ins.insert("target".into(), m.to_string());
                    let entries = partitions_of(*m)
                        .map(|nu| multiplicity(&ggp, lambda, &nu, *model, *fj_mode, *mu0))
                        .collect::<Result<Vec<_>, _>>()?;
                    let covered = entries.iter().all(|e| e.covered);
                    (
                        Output::Sweep(SweepRecord {
                            target: *m,
                            entries,
                        }),
                        covered,
                    )
                }
                (None, None) => return Err(CliError::Usage("mult needs --nu or --target".into())),
            };
            ResultRecord {
                command: "mult".into(),
                inputs: ins,
                output,
                meta: meta(start, Some(covered)),
            }
        }
        Command::Theta { lambda, target } => ResultRecord {
            command: "theta".into(),
            inputs: inputs([
                ("lambda", lambda.to_string()),
                ("target", target.to_string()),
            ]),
            output: Output::Theta(theta_lift(lambda, *target)),
            meta: meta(start, None),
        },
        Command::Chartable { n } => ResultRecord {
            command: "chartable".into(),
            inputs: inputs([("n", n.to_string())]),
            output: Output::CharTable(TableRecord::from(chars.table(*n).as_ref())),
            meta: meta(start, None),
        },
        Command::Verify { .. } => {
            return Err(CliError::Usage("verify does not produce a record".into()))
        }
    };
    Ok(record)
}

fn run_verify(
    out: &mut dyn Write,
    max_n: usize,
    suites: &[Criterion],
    chars: &Arc<CharacterCache>,
) -> Result<(), CliError> {
    let suites = if suites.is_empty() {
        Criterion::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    for c in suites {
        let report = verify::run(c, max_n, chars);
        writeln!(out, "{report}")?;
        if !report.passed() {
            return Err(CliError::VerifyFailed);
        }
    }
    Ok(())
}

/// Runs `cli`, writing results to `out` and persisting the cache.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let path = if cli.global.no_cache {
        None
    } else {
        cli.global.cache.clone().or_else(cache::default_path)
    };
    let (chars, loaded) = match &path {
        Some(p) => cache::load(p)?,
        None => (CharacterCache::new(), 0),
    };
    let chars = Arc::new(chars);
    let result = match &cli.command {
        Command::Verify { max_n, suites } => run_verify(out, *max_n, suites, &chars),
        command => execute(command, &chars).and_then(|r| emit(out, cli.global.format, &r)),
    };
    if let Some(p) = &path {
        if chars.tables().len() > loaded {
            cache::save(p, &chars)?;
        }
    }
    result
}
