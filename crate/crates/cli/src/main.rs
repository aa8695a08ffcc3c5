mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use reesmod::classify::{cieq_crosscheck, classify, flag_provenance, ClassifyOptions, CrossCheck, FlagProvenance, Flags};
use reesmod::corpus::{run_all, CorpusOutcome};
use reesmod::groebner::Height;
use reesmod::invariants::{fitting_ideal, rank, ModuleSpec};
use reesmod::reductions::{
    certify, generic_minimal_reduction, GenericOptions, ReductionCertificate, ReductionOutcome, DEFAULT_RMAX,
    DEFAULT_TRIALS,
};
use reesmod::rees::{analytic_spread, power_rank, product_count, rees_kernel, rees_power};
use reesmod::Error;

use input::{load_primes, InputDocument};
use output::{Format, Render};

const MAX_POWER_RANK: usize = 35;
const MAX_PRODUCTS: usize = 4000;

#[derive(Parser)]
#[command(name = "reesmod", version, about = "Invariants of submodules of free modules over polynomial rings")]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Json, global = true)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report
    Report {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u32,
        #[arg(long, default_value_t = DEFAULT_RMAX)]
        rmax: usize,
    },
    /// Generators of the Fitting ideal F_i(E)
    Fitting {
        file: PathBuf,
        #[arg(long)]
        index: usize,
    },
    /// Analytic spread and the size of the Rees kernel
    Spread { file: PathBuf },
    /// Generators of the Rees power E^n
    Rees {
        file: PathBuf,
        #[arg(long)]
        power: usize,
    },
    /// Test a candidate reduction U of E
    Reduce {
        file: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RMAX)]
        rmax: usize,
    },
    /// Generic minimal reduction
    Genred {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u32,
        #[arg(long, default_value_t = DEFAULT_RMAX)]
        rmax: usize,
    },
    /// Classification flags with their provenance
    Classify {
        file: PathBuf,
        #[arg(long)]
        primes: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the built-in examples against their expected values
    Corpus,
}

#[derive(Serialize)]
pub struct FittingOutput {
    pub index: usize,
    pub generators: Vec<String>,
    pub height: Height,
}

#[derive(Serialize)]
pub struct SpreadOutput {
    pub analytic_spread: usize,
    pub kernel_generators: usize,
    pub fiber_generators: usize,
}

#[derive(Serialize)]
pub struct ReesOutput {
    pub power: usize,
    pub ambient_rank: usize,
    pub rank: usize,
    pub expected_rank: usize,
    pub rank_check: bool,
    pub generators: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
pub struct ReductionOutput {
    pub verdict: String,
    #[serde(flatten)]
    pub certificate: ReductionCertificate,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
pub struct ClassifyOutput {
    pub flags: Flags,
    pub provenance: Vec<FlagProvenance>,
    pub crosschecks: Vec<CrossCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Serialize)]
pub struct CorpusOutput {
    pub pass: bool,
    pub entries: Vec<CorpusOutcome>,
}

/// Why a run failed, with its exit code.
enum Failure {
    Engine(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Engine(Error::BoundExceeded(_) | Error::ReductionFailure { .. }) => 2,
            Failure::Engine(_) => 1,
            Failure::Mismatch(_) => 3,
        }
    }
}

fn power_warnings(module: &ModuleSpec, n: usize) -> Vec<String> {
    let mut out = Vec::new();
    let e = module.ambient_rank();
    let basis = power_rank(e, n);
    if basis > MAX_POWER_RANK {
        out.push(format!(
            "E^{n} lives in a free module of rank {basis} (desk-scale limit {MAX_POWER_RANK})"
        ));
    }
    let products = product_count(module.generating_columns().len(), n);
    if products > MAX_PRODUCTS {
        out.push(format!(
            "E^{n} has {products} product generators (desk-scale limit {MAX_PRODUCTS})"
        ));
    }
    out
}

/// Warnings for the largest power a reduction test formed.
fn reduction_warnings(module: &ModuleSpec, outcome: &ReductionOutcome) -> Vec<String> {
    let top = match outcome {
        ReductionOutcome::Reduction { r } => r + 2,
        ReductionOutcome::NotUpToBound { rmax } => rmax + 1,
        _ => return Vec::new(),
    };
    power_warnings(module, top)
}

fn reduction_output(module: &ModuleSpec, certificate: ReductionCertificate) -> ReductionOutput {
    let warnings = reduction_warnings(module, &certificate.outcome);
    ReductionOutput {
        verdict: certificate.outcome.describe(),
        certificate,
        warnings,
    }
}

fn emit<T: Serialize + Render>(format: Format, value: &T) {
    for w in value.warnings() {
        eprintln!("warning: {w}");
    }
    println!("{}", output::render(format, value));
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    match cli.command {
        Command::Report { file, seed, trials, rmax } => {
            let doc = InputDocument::load(&file)?;
            let ring = doc.ring()?;
            let module = doc.module_in(&ring)?;
            let opts = ClassifyOptions {
                primes: doc.primes_in(&ring)?,
                reduction: GenericOptions { seed, trials, rmax, ..GenericOptions::default() },
                ..ClassifyOptions::default()
            };
            emit(format, &classify(&module, &opts)?);
        }
        Command::Fitting { file, index } => {
            let module = InputDocument::load(&file)?.module()?;
            let f = fitting_ideal(&module, index)?;
            emit(
                format,
                &FittingOutput {
                    index,
                    generators: f.generators().iter().map(ToString::to_string).collect(),
                    height: f.height(),
                },
            );
        }
        Command::Spread { file } => {
            let module = InputDocument::load(&file)?.module()?;
            let rees = rees_kernel(&module)?;
            emit(
                format,
                &SpreadOutput {
                    analytic_spread: analytic_spread(&module)?,
                    kernel_generators: rees.kernel_generators().len(),
                    fiber_generators: rees.fiber().generators().len(),
                },
            );
        }
        Command::Rees { file, power } => {
            let module = InputDocument::load(&file)?.module()?;
            let warnings = power_warnings(&module, power);
            let p = rees_power(&module, power)?;
            let expected = power_rank(rank(&module), power);
            let r = rank(&p);
            emit(
                format,
                &ReesOutput {
                    power,
                    ambient_rank: p.ambient_rank(),
                    rank: r,
                    expected_rank: expected,
                    rank_check: r == expected,
                    generators: p
                        .columns()
                        .iter()
                        .map(|c| c.iter().map(ToString::to_string).collect())
                        .collect(),
                    warnings,
                },
            );
        }
        Command::Reduce { file, candidate, rmax } => {
            let doc = InputDocument::load(&file)?;
            let cand = InputDocument::load(&candidate)?;
            if cand.ring != doc.ring {
                return Err(Error::Input("the candidate is declared over a different ring".into()).into());
            }
            let ring = doc.ring()?;
            let module = doc.module_in(&ring)?;
            let u = cand.module_in(&ring)?;
            emit(format, &reduction_output(&module, certify(&u, &module, rmax)?));
        }
        Command::Genred { file, seed, trials, rmax } => {
            let module = InputDocument::load(&file)?.module()?;
            let opts = GenericOptions { seed, trials, rmax, ..GenericOptions::default() };
            let cert = generic_minimal_reduction(&module, opts)?;
            emit(format, &reduction_output(&module, cert));
        }
        Command::Classify { file, primes, seed } => {
            let doc = InputDocument::load(&file)?;
            let ring = doc.ring()?;
            let module = doc.module_in(&ring)?;
            let supplied = match primes {
                Some(path) => Some(load_primes(&path, &ring)?),
                None => doc.primes_in(&ring)?,
            };
            let opts = ClassifyOptions {
                primes: supplied,
                reduction: GenericOptions { seed, ..GenericOptions::default() },
                ..ClassifyOptions::default()
            };
            let report = classify(&module, &opts)?;
            emit(
                format,
                &ClassifyOutput {
                    provenance: flag_provenance(&report),
                    crosschecks: cieq_crosscheck(&report),
                    flags: report.flags.clone(),
                    notes: report.notes.clone(),
                },
            );
        }
        Command::Corpus => {
            let entries = run_all()?;
            let out = CorpusOutput {
                pass: entries.iter().all(CorpusOutcome::pass),
                entries,
            };
            emit(format, &out);
            if !out.pass {
                return Err(Failure::Mismatch("corpus mismatch".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Engine(e) => eprintln!("error: {e}"),
                Failure::Mismatch(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
