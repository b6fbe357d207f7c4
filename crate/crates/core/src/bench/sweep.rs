use std::io::{self, Write};

use super::harness::{run_bench_with_timer, BenchConfig, BenchResult, MonotonicTimer, Timer};
use crate::sc_model::Algorithm;
use crate::{Error, Result};

pub const BENCH_CSV_HEADER: &str =
    "n,algorithm,l_blocks,runtime_us,throughput_mbps,delta_us,variance,samples,stopped_by";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub requested_n: usize,
    /// Config actually run, with `n` reduced to a multiple of `L` for PDFT.
    pub config: BenchConfig,
    pub result: BenchResult,
}

/// Largest `N' ≤ N` that the algorithm's block count divides (`N - N mod L`).
/// Other algorithms keep `N` unchanged.
pub fn effective_n(algorithm: Algorithm, n: usize, l_blocks: Option<usize>) -> usize {
    match (algorithm, l_blocks) {
        (Algorithm::Pdft | Algorithm::PdftL2, Some(l)) if l > 0 => n - n % l,
        _ => n,
    }
}

pub fn sweep(configs: &[BenchConfig]) -> Result<Vec<SweepRow>> {
    sweep_with(configs, &mut MonotonicTimer, |_| {})
}

/// Runs the configs in order, one at a time, calling `on_row` after each.
pub fn sweep_with(
    configs: &[BenchConfig],
    timer: &mut dyn Timer,
    mut on_row: impl FnMut(&SweepRow),
) -> Result<Vec<SweepRow>> {
    if configs.is_empty() {
        return Err(Error::InvalidConfig("sweep needs at least one configuration".into()));
    }
    // fail before spending time on any run
    let adjusted: Vec<BenchConfig> = configs
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.n = effective_n(c.algorithm, c.n, c.l_blocks);
            c.validate().map(|_| c)
        })
        .collect::<Result<_>>()?;

    let mut rows = Vec::with_capacity(configs.len());
    for (requested, config) in configs.iter().zip(adjusted) {
        let result = run_bench_with_timer(&config, timer)?;
        let row = SweepRow {
            requested_n: requested.n,
            config,
            result,
        };
        on_row(&row);
        rows.push(row);
    }
    Ok(rows)
}

/// Power-of-two sizes `2^1..=2^18`, multiplierless PDFT then FFT at each size.
pub fn table2_configs(base: &BenchConfig) -> Vec<BenchConfig> {
    (1..=18)
        .flat_map(|i| {
            let n = 1usize << i;
            [Algorithm::PdftL2, Algorithm::Fft].map(|algorithm| BenchConfig {
                algorithm,
                n,
                l_blocks: (algorithm == Algorithm::PdftL2).then_some(2),
                ..base.clone()
            })
        })
        .collect()
}

/// `N = 1e5..=6e5` in steps of `1e5`, each with `L = 2, 3, 4, 5`; `L = 2`
/// runs the multiplierless path.
pub fn table3_configs(base: &BenchConfig) -> Vec<BenchConfig> {
    (1..=6)
        .flat_map(|k| {
            let n = k * 100_000;
            (2..=5).map(move |l| BenchConfig {
                algorithm: if l == 2 { Algorithm::PdftL2 } else { Algorithm::Pdft },
                n,
                l_blocks: Some(l),
                ..base.clone()
            })
        })
        .collect()
}

pub fn write_csv_header<W: Write>(mut out: W) -> io::Result<()> {
    writeln!(out, "{BENCH_CSV_HEADER}")
}

pub fn write_csv_row<W: Write>(row: &SweepRow, mut out: W) -> io::Result<()> {
    let r = &row.result;
    let l = row.config.l_blocks.map(|l| l.to_string()).unwrap_or_default();
    writeln!(
        out,
        "{},{},{},{:.6},{:.6},{:.6},{:e},{},{}",
        row.config.n,
        row.config.algorithm,
        l,
        r.mean_runtime_seconds * 1e6,
        r.throughput_bps / 1e6,
        r.half_width_seconds * 1e6,
        r.variance * 1e12,
        r.sample_count,
        r.stopped_by.as_str()
    )
}

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    write_csv_header(&mut out)?;
    rows.iter().try_for_each(|row| write_csv_row(row, &mut out))
}
