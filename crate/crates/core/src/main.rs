use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use ringseg::io::{
    emit_csv, extract_profile, histogram_table, profile_table, read_pgm, trace_table, write_pgm,
    CsvTable,
};
use ringseg::mshi::{self, MshiConfig, StoppingCriterion};
use ringseg::{
    entropy, filter_pass, histogram, ned, we_index, FilterConfig, GrayImage, Profile,
    SimilarityKind,
};

/// Gray-image segmentation by iterated mean shift with an entropy distance
/// stopping criterion over Z_n.
#[derive(Debug, Parser)]
#[command(name = "ringseg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Shannon entropy of an image in bits
    Entropy {
        input: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Write the gray-level histogram as CSV (level,count)
    Histogram {
        input: PathBuf,
        /// Output CSV path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Print the natural entropy distance E(A - B)
    Ned {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Print the entropy-difference index |E(A) - E(B)|
    We {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Apply a ring (or saturating) operation and write the result
    Ringop {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum)]
        op: RingOp,
        /// Scalar operand
        #[arg(long, conflicts_with = "other")]
        scalar: Option<u32>,
        /// Image operand (add, sub, mul only)
        #[arg(long)]
        other: Option<PathBuf>,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Run a single mean-shift filtering pass
    Filter {
        input: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        filter: FilterArgs,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Segment by iterated mean-shift filtering
    Segment {
        input: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        filter: FilterArgs,
        #[arg(long, value_enum, default_value_t = Criterion::Ned)]
        criterion: Criterion,
        /// Stopping threshold in bits [default: 0.9 for ned, 0.01 for we]
        #[arg(long, value_parser = positive_real)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = mshi::DEFAULT_MAX_OUTER_ITERS,
              value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
        max_iter: usize,
        /// Write the convergence trace CSV here
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Write the intensity profile of one row as CSV (col,value)
    Profile {
        input: PathBuf,
        #[arg(long)]
        row: usize,
        /// Output CSV path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        ring: RingArgs,
    },
}

#[derive(Debug, Args)]
struct RingArgs {
    /// Number of gray levels n [default: maxval + 1 of the input]
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    modulus: Option<u32>,
}

#[derive(Debug, Args)]
struct FilterArgs {
    /// Spatial bandwidth in pixels
    #[arg(long, default_value_t = 15.0, value_parser = bandwidth)]
    hs: f64,
    /// Range bandwidth in gray levels
    #[arg(long, default_value_t = 12.0, value_parser = bandwidth)]
    hr: f64,
    #[arg(long, visible_alias = "profile", value_enum, default_value_t = Kernel::Uniform)]
    profile_kernel: Kernel,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RingOp {
    Add,
    Sub,
    Neg,
    Mul,
    SatAdd,
    SatSub,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Criterion {
    Ned,
    We,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kernel {
    Uniform,
    Epanechnikov,
}

fn bandwidth(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v >= 1.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("bandwidth must be a finite number >= 1, got {s}"))
    }
}

fn positive_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be a finite number > 0, got {s}"))
    }
}

impl FilterArgs {
    fn config(&self) -> ringseg::Result<FilterConfig> {
        let profile = match self.profile_kernel {
            Kernel::Uniform => Profile::Uniform,
            Kernel::Epanechnikov => Profile::Epanechnikov,
        };
        Ok(FilterConfig::new(self.hs, self.hr)?.with_profile(profile))
    }
}

impl RingArgs {
    fn load(&self, path: &Path) -> ringseg::Result<GrayImage> {
        let img = read_pgm(path)?;
        match self.modulus {
            Some(n) => img.with_modulus(n),
            None => Ok(img),
        }
    }
}

enum Failure {
    Usage(clap::Error),
    Domain(ringseg::Error),
}

impl From<ringseg::Error> for Failure {
    fn from(e: ringseg::Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(kind: ErrorKind, message: &str) -> Failure {
    Failure::Usage(Cli::command().error(kind, message))
}

fn write_table(table: &CsvTable, out: Option<&Path>) -> ringseg::Result<()> {
    match out {
        Some(path) => emit_csv(table, path),
        None => table.write_to(std::io::stdout().lock()),
    }
}

fn ringop(
    img: &GrayImage,
    op: RingOp,
    scalar: Option<u32>,
    other: Option<GrayImage>,
) -> Result<GrayImage, Failure> {
    let operand = || -> Result<GrayImage, Failure> {
        match (&other, scalar) {
            (Some(o), _) => Ok(o.clone()),
            (None, Some(s)) => Ok(img.scalar(s)?.expand()),
            (None, None) => Err(usage(
                ErrorKind::MissingRequiredArgument,
                "this operation needs --scalar <int> or --other <path>",
            )),
        }
    };
    let scalar_only = || match (scalar, &other) {
        (Some(s), None) => Ok(img.scalar(s)?),
        _ => Err(usage(
            ErrorKind::ArgumentConflict,
            "saturating operations take --scalar <int> only",
        )),
    };
    Ok(match op {
        RingOp::Add => img.ring_add(&operand()?)?,
        RingOp::Sub => img.ring_sub(&operand()?)?,
        RingOp::Mul => img.ring_mul(&operand()?)?,
        RingOp::Neg => {
            if scalar.is_some() || other.is_some() {
                return Err(usage(ErrorKind::ArgumentConflict, "neg takes no operand"));
            }
            img.ring_neg()
        }
        RingOp::SatAdd => img.saturating_add(&scalar_only()?)?,
        RingOp::SatSub => img.saturating_sub(&scalar_only()?)?,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Entropy { input, ring } => {
            let img = ring.load(&input)?;
            println!("{:.12}", entropy(&img).bits());
        }
        Command::Histogram { input, out, ring } => {
            let img = ring.load(&input)?;
            write_table(&histogram_table(&histogram(&img)), out.as_deref())?;
        }
        Command::Ned { a, b, ring } => {
            let d = ned(&ring.load(&a)?, &ring.load(&b)?)?;
            println!("{:.12}", d.value);
        }
        Command::We { a, b, ring } => {
            let d = we_index(&ring.load(&a)?, &ring.load(&b)?)?;
            println!("{:.12}", d.value);
        }
        Command::Ringop {
            input,
            output,
            op,
            scalar,
            other,
            ring,
        } => {
            let img = ring.load(&input)?;
            let other = other.map(|p| ring.load(&p)).transpose()?;
            let result = ringop(&img, op, scalar, other)?;
            write_pgm(&result, &output)?;
        }
        Command::Filter {
            input,
            output,
            filter,
            ring,
        } => {
            let img = ring.load(&input)?;
            write_pgm(&filter_pass(&img, &filter.config()?), &output)?;
        }
        Command::Segment {
            input,
            output,
            filter,
            criterion,
            epsilon,
            max_iter,
            trace,
            ring,
        } => {
            let img = ring.load(&input)?;
            let kind = match criterion {
                Criterion::Ned => SimilarityKind::Ned,
                Criterion::We => SimilarityKind::WeakEntropy,
            };
            let stop = match epsilon {
                Some(e) => StoppingCriterion::new(kind, e)?,
                None => StoppingCriterion::with_default_epsilon(kind),
            };
            let cfg = MshiConfig {
                filter: filter.config()?,
                stop,
                max_outer_iters: max_iter,
            };
            let outcome = mshi::run(&img, &cfg)?;
            write_pgm(&outcome.segmented, &output)?;
            if let Some(path) = trace {
                emit_csv(&trace_table(&outcome.trace), path)?;
            }
            let last = outcome.trace.last().map_or(0.0, |r| r.criterion_value);
            println!(
                "iterations={} criterion={} final={:.12} epsilon={} hit_cap={}",
                outcome.trace.len(),
                kind,
                last,
                stop.epsilon(),
                outcome.hit_cap
            );
        }
        Command::Profile {
            input,
            row,
            out,
            ring,
        } => {
            let img = ring.load(&input)?;
            write_table(&profile_table(&extract_profile(&img, row)?), out.as_deref())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(e)) => {
            let _ = e.print();
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
