use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use vofdm_core::bench::{
    DEFAULT_CONFIDENCE, DEFAULT_MAX_REL_ERROR, DEFAULT_MAX_REPETITIONS, DEFAULT_SEED, DEFAULT_WARMUP,
};
use vofdm_core::sc_model::DEFAULT_INSTRUCTION_SECONDS;
use vofdm_core::{Algorithm, Constellation};

/// Frequency-time transform experiments for OFDM and vector OFDM.
#[derive(Debug, Parser)]
#[command(name = "vofdm", version, args_override_self = true)]
pub struct Cli {
    /// File of `key = value` lines; keys are the subcommand's flag names and
    /// flags given on the command line take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a file of complex samples.
    Transform(TransformArgs),
    /// Benchmark one (algorithm, N) point and print a CSV row.
    Bench(BenchArgs),
    /// Benchmark a list of points or a preset and print CSV rows.
    Sweep(SweepArgs),
    /// Model SC throughput over a range of N.
    ScCurve(ScCurveArgs),
    /// Nyquist interval, symbol duration and optional deadline verdict.
    Nyquist(NyquistArgs),
    /// Closed-form operation counts.
    InstrCount(InstrCountArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleFormat {
    /// One `re<TAB>im` decimal pair per line.
    Text,
    /// Interleaved little-endian f64 (re, im, re, im, ...).
    F64le,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// dft, fft, pdft or pdft-l2.
    #[arg(long)]
    pub algo: Algorithm,
    #[arg(long, value_enum)]
    pub direction: DirectionArg,
    /// Number of vector blocks L (pdft).
    #[arg(long)]
    pub l: Option<usize>,
    /// Skip the 1/N (or 1/L) factor on the inverse.
    #[arg(long)]
    pub unnormalized: bool,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub format: SampleFormat,
    /// Compute the PDFT's independent block transforms on a thread pool.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args, Clone)]
pub struct StatArgs {
    /// Constellation carried by each subcarrier.
    #[arg(long, default_value = "bpsk")]
    pub mapper: Constellation,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_CONFIDENCE)]
    pub confidence: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_REL_ERROR)]
    pub max_rel_error: f64,
    /// Initial samples discarded as warm-up.
    #[arg(long, default_value_t = DEFAULT_WARMUP)]
    pub warmup: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_REPETITIONS)]
    pub max_reps: u64,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub algo: Algorithm,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: Option<usize>,
    #[command(flatten)]
    pub stats: StatArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// N = 2^1..2^18 for PDFT_L2 and FFT.
    Table2,
    /// N = 1e5..6e5 step 1e5 for L = 2, 3, 4, 5.
    Table3,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, conflicts_with_all = ["algo", "n", "l"])]
    pub preset: Option<Preset>,
    #[arg(long, required_unless_present = "preset")]
    pub algo: Option<Algorithm>,
    /// Comma-separated sizes; PDFT sizes are reduced to a multiple of L.
    #[arg(long, value_delimiter = ',', required_unless_present = "preset")]
    pub n: Vec<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[command(flatten)]
    pub stats: StatArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    /// Powers of two from n-min to n-max.
    Pow2,
    /// n-min, n-min + step, ... up to n-max.
    Linear,
}

#[derive(Debug, Args)]
pub struct ScCurveArgs {
    #[arg(long)]
    pub algo: Algorithm,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, default_value = "bpsk")]
    pub mapper: Constellation,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 1 << 20)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "pow2")]
    pub scale: Scale,
    #[arg(long, default_value_t = 1)]
    pub step: usize,
    #[arg(long, default_value_t = DEFAULT_INSTRUCTION_SECONDS)]
    pub per_instruction_seconds: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NyquistArgs {
    #[arg(long)]
    pub n: usize,
    /// Subcarrier spacing in Hz.
    #[arg(long)]
    pub delta_f: f64,
    /// Also check whether this algorithm meets the symbol deadline.
    #[arg(long)]
    pub algo: Option<Algorithm>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_INSTRUCTION_SECONDS)]
    pub per_instruction_seconds: f64,
}

#[derive(Debug, Args)]
pub struct InstrCountArgs {
    #[arg(long)]
    pub algo: Algorithm,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub l: Option<usize>,
}
