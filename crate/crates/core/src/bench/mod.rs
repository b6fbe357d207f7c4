//! Wall-clock benchmarking of the transforms.
//!
//! Inputs come from MT19937-64 random bits mapped through a constellation, so
//! one symbol carries exactly `B(N)` bits. Each timing sample is one complete
//! symbol transform into a preallocated output; input generation and plan
//! setup happen before timing starts. Runs are single-threaded and executed
//! one after another.
//!
//! For steadier numbers, pin the process to an isolated core (for example
//! boot with `isolcpus=3` and run under `taskset -c 3 chrt -f 99`).

mod harness;
mod input;
mod mt;
mod stats;
mod sweep;

pub use harness::{
    run_bench, run_bench_with_timer, BenchConfig, BenchResult, MonotonicTimer, StopReason, Timer,
    Workload, DEFAULT_CONFIDENCE, DEFAULT_MAX_REL_ERROR, DEFAULT_MAX_REPETITIONS, DEFAULT_SEED,
    DEFAULT_WARMUP, MIN_SAMPLES,
};
pub use input::{generate_input, generate_symbols};
pub use mt::Mt19937_64;
pub use stats::{t_quantile, RunningStats};
pub use sweep::{
    effective_n, sweep, sweep_with, table2_configs, table3_configs, write_csv, write_csv_header,
    write_csv_row, SweepRow, BENCH_CSV_HEADER,
};
