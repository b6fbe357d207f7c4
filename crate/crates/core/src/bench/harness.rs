use std::hint::black_box;
use std::time::Instant;

use super::input::generate_symbols;
use super::stats::RunningStats;
use crate::mapper::{bits_per_symbol, Constellation};
use crate::sc_model::Algorithm;
use crate::transform::{is_power_of_two, ComplexSample, Direction, FftPlan, Normalization, OpCounter};
use crate::vofdm::{pdft_l2_into, PdftPlan, SymbolSpec};
use crate::{Error, Result};

pub const DEFAULT_SEED: u64 = 1_973_272_912;
pub const DEFAULT_CONFIDENCE: f64 = 0.95;
pub const DEFAULT_MAX_REL_ERROR: f64 = 0.05;
pub const DEFAULT_WARMUP: u64 = 500;
pub const DEFAULT_MAX_REPETITIONS: u64 = 70_000;
/// Samples retained after warm-up before the stopping rule is consulted.
pub const MIN_SAMPLES: u64 = 30;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub algorithm: Algorithm,
    pub n: usize,
    /// Number of vector blocks; required for PDFT, implied for PDFT_L2.
    pub l_blocks: Option<usize>,
    pub constellation: Constellation,
    pub confidence_level: f64,
    pub max_rel_error: f64,
    pub warmup_discard: u64,
    pub max_repetitions: u64,
    pub prng_seed: u64,
}

impl BenchConfig {
    pub fn new(algorithm: Algorithm, n: usize) -> Self {
        Self {
            algorithm,
            n,
            l_blocks: match algorithm {
                Algorithm::PdftL2 => Some(2),
                _ => None,
            },
            constellation: Constellation::Bpsk,
            confidence_level: DEFAULT_CONFIDENCE,
            max_rel_error: DEFAULT_MAX_REL_ERROR,
            warmup_discard: DEFAULT_WARMUP,
            max_repetitions: DEFAULT_MAX_REPETITIONS,
            prng_seed: DEFAULT_SEED,
        }
    }

    pub fn with_l_blocks(mut self, l_blocks: usize) -> Self {
        self.l_blocks = Some(l_blocks);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let invalid = |msg: String| Err(Error::InvalidConfig(msg));
        if !(self.max_rel_error > 0.0 && self.max_rel_error < 1.0) {
            return invalid(format!("max_rel_error must lie in (0, 1), got {}", self.max_rel_error));
        }
        if !(self.confidence_level > 0.5 && self.confidence_level < 1.0) {
            return invalid(format!(
                "confidence_level must lie in (0.5, 1), got {}",
                self.confidence_level
            ));
        }
        if self.max_repetitions < MIN_SAMPLES {
            return invalid(format!(
                "max_repetitions must be at least {MIN_SAMPLES}, got {}",
                self.max_repetitions
            ));
        }
        if self.n == 0 {
            return invalid("N must be at least 1".into());
        }
        match self.algorithm {
            Algorithm::Dft => Ok(()),
            Algorithm::Fft if !is_power_of_two(self.n) => {
                invalid(format!("FFT requires N = 2^i, got N = {}", self.n))
            }
            Algorithm::Fft => Ok(()),
            Algorithm::Pdft => {
                let l = self.l_blocks.ok_or_else(|| {
                    Error::InvalidConfig("PDFT needs the number of blocks L".into())
                })?;
                SymbolSpec::new(self.n, l).map_err(|e| Error::InvalidConfig(e.to_string()))?;
                Ok(())
            }
            Algorithm::PdftL2 => {
                if matches!(self.l_blocks, Some(l) if l != 2) {
                    return invalid("PDFT_L2 has exactly L = 2 blocks".into());
                }
                if self.n % 2 != 0 {
                    return invalid(format!("PDFT_L2 requires an even N, got N = {}", self.n));
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    Converged,
    MaxReps,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::Converged => "converged",
            StopReason::MaxReps => "max_reps",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub mean_runtime_seconds: f64,
    pub half_width_seconds: f64,
    /// Sample variance of the retained runtimes, in seconds squared.
    pub variance: f64,
    pub sample_count: u64,
    pub throughput_bps: f64,
    pub stopped_by: StopReason,
    /// Set when the clock's resolution is coarser than the mean runtime.
    pub resolution_warning: bool,
}

/// Source of per-repetition durations.
pub trait Timer {
    /// Runs `work` once and returns the elapsed time in seconds.
    fn time(&mut self, work: &mut dyn FnMut()) -> f64;

    /// Smallest duration the timer can distinguish, in seconds.
    fn resolution(&mut self) -> f64 {
        0.0
    }
}

/// Wall-clock timer on the monotonic clock.
#[derive(Debug, Default, Clone, Copy)]
pub struct MonotonicTimer;

impl Timer for MonotonicTimer {
    fn time(&mut self, work: &mut dyn FnMut()) -> f64 {
        let start = Instant::now();
        work();
        start.elapsed().as_secs_f64()
    }

    fn resolution(&mut self) -> f64 {
        let mut finest = f64::INFINITY;
        for _ in 0..1000 {
            let a = Instant::now();
            let mut b = Instant::now();
            while b == a {
                b = Instant::now();
            }
            finest = finest.min((b - a).as_secs_f64());
        }
        finest
    }
}

enum Kernel {
    Dft,
    Fft(FftPlan),
    Pdft(PdftPlan),
    PdftL2,
}

/// One prepared transform: fixed input, plan and output buffer.
///
/// Every benchmarked algorithm runs in the inverse (frequency to time)
/// direction without normalization, i.e. the raw transmitter-side sums.
pub struct Workload {
    kernel: Kernel,
    input: Vec<ComplexSample>,
    output: Vec<ComplexSample>,
    counter: OpCounter,
}

impl Workload {
    pub fn new(config: &BenchConfig) -> Result<Self> {
        config.validate()?;
        let kernel = match config.algorithm {
            Algorithm::Dft => Kernel::Dft,
            Algorithm::Fft => Kernel::Fft(FftPlan::new(config.n)?),
            Algorithm::Pdft => {
                let spec = SymbolSpec::new(config.n, config.l_blocks.unwrap_or(1))?;
                Kernel::Pdft(PdftPlan::new(spec))
            }
            Algorithm::PdftL2 => Kernel::PdftL2,
        };
        Ok(Self {
            kernel,
            input: generate_symbols(config.n, config.constellation, config.prng_seed),
            output: vec![ComplexSample::new(0.0, 0.0); config.n],
            counter: OpCounter::new(),
        })
    }

    pub fn run(&mut self) {
        const DIR: Direction = Direction::Inverse;
        const NORM: Normalization = Normalization::Unnormalized;
        let input = black_box(&self.input[..]);
        let output = &mut self.output[..];
        let counter = &mut self.counter;
        // lengths were validated when the workload was built
        let _ = match &self.kernel {
            Kernel::Dft => crate::transform::dft(input, DIR, NORM, counter).map(|y| output.copy_from_slice(&y)),
            Kernel::Fft(plan) => plan.process(input, output, DIR, NORM, counter),
            Kernel::Pdft(plan) => plan.process(input, output, DIR, NORM, counter),
            Kernel::PdftL2 => pdft_l2_into(input, output, DIR, NORM, counter),
        };
        black_box(&self.output);
    }

    pub fn input(&self) -> &[ComplexSample] {
        &self.input
    }

    pub fn output(&self) -> &[ComplexSample] {
        &self.output
    }

    /// Operations tallied over every run so far.
    pub fn counter(&self) -> OpCounter {
        self.counter
    }
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchResult> {
    run_bench_with_timer(config, &mut MonotonicTimer)
}

/// Sequential stopping: discard `warmup_discard` samples, then keep timing
/// until the Student-t half-width at `confidence_level` is within
/// `max_rel_error` of the mean (checked from [`MIN_SAMPLES`] on), or
/// `max_repetitions` samples are retained.
pub fn run_bench_with_timer(config: &BenchConfig, timer: &mut dyn Timer) -> Result<BenchResult> {
    let mut workload = Workload::new(config)?;
    let bits = bits_per_symbol(config.n, config.constellation)?;
    let mut work = || workload.run();

    for _ in 0..config.warmup_discard {
        timer.time(&mut work);
    }

    let mut stats = RunningStats::new();
    let mut stopped_by = StopReason::MaxReps;
    let mut check_at = MIN_SAMPLES;
    while stats.count() < config.max_repetitions {
        stats.push(timer.time(&mut work));
        if stats.count() >= check_at {
            let half_width = stats.half_width(config.confidence_level);
            if half_width == 0.0 || half_width <= config.max_rel_error * stats.mean() {
                stopped_by = StopReason::Converged;
                break;
            }
            check_at = next_check(stats.count());
        }
    }

    let mean = stats.mean();
    let half_width = stats.half_width(config.confidence_level);
    let resolution = timer.resolution();
    Ok(BenchResult {
        mean_runtime_seconds: mean,
        half_width_seconds: half_width,
        variance: stats.variance(),
        sample_count: stats.count(),
        throughput_bps: if mean > 0.0 { bits as f64 / mean } else { f64::INFINITY },
        stopped_by,
        resolution_warning: resolution > mean,
    })
}

// Every sample up to 1000, then every 1% more samples; the t quantile is the
// expensive part of a check.
fn next_check(count: u64) -> u64 {
    if count < 1000 {
        count + 1
    } else {
        count + count / 100
    }
}
