use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use vofdm_core::bench::{
    run_bench, sweep_with, table2_configs, table3_configs, write_csv_header, write_csv_row,
    BenchConfig, MonotonicTimer, SweepRow,
};
use vofdm_core::sc_model::{nyquist_check, sc_curve, write_curve_csv, InstructionModel, NyquistSpec};
use vofdm_core::transform::{dft, FftPlan};
use vofdm_core::vofdm::{pdft_l2, PdftPlan};
use vofdm_core::{Algorithm, ComplexSample, Direction, Normalization, OpCounter, SymbolSpec};

use crate::args::{
    BenchArgs, Command, DirectionArg, InstrCountArgs, NyquistArgs, Preset, Scale, ScCurveArgs,
    StatArgs, SweepArgs, TransformArgs,
};
use crate::samples::{read_samples, write_samples};

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Transform(args) => cmd_transform(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::ScCurve(args) => cmd_sc_curve(args),
        Command::Nyquist(args) => cmd_nyquist(args),
        Command::InstrCount(args) => cmd_instr_count(args),
    }
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_transform(args: TransformArgs) -> Result<()> {
    let input = read_samples(&args.input, args.format)?;
    let direction = match args.direction {
        DirectionArg::Forward => Direction::Forward,
        DirectionArg::Inverse => Direction::Inverse,
    };
    let normalization = if args.unnormalized {
        Normalization::Unnormalized
    } else {
        Normalization::Normalized
    };
    let mut counter = OpCounter::new();
    let output = transform(&input, &args, direction, normalization, &mut counter)?;
    write_samples(&args.output, &output, args.format)?;
    eprintln!("{counter}");
    Ok(())
}

fn transform(
    input: &[ComplexSample],
    args: &TransformArgs,
    direction: Direction,
    normalization: Normalization,
    counter: &mut OpCounter,
) -> Result<Vec<ComplexSample>> {
    let n = input.len();
    Ok(match args.algo {
        Algorithm::Dft => dft(input, direction, normalization, counter)?,
        Algorithm::Fft => FftPlan::new(n)?.transform(input, direction, normalization, counter)?,
        Algorithm::Pdft => {
            let l = args.l.context("--algo pdft needs --l <blocks>")?;
            let plan = PdftPlan::new(SymbolSpec::new(n, l)?);
            let mut output = vec![ComplexSample::new(0.0, 0.0); n];
            if args.parallel {
                plan.process_parallel(input, &mut output, direction, normalization, counter)?;
            } else {
                plan.process(input, &mut output, direction, normalization, counter)?;
            }
            output
        }
        Algorithm::PdftL2 => {
            if matches!(args.l, Some(l) if l != 2) {
                bail!("--algo pdft-l2 always uses L = 2");
            }
            pdft_l2(input, direction, normalization, counter)?
        }
    })
}

fn bench_config(algorithm: Algorithm, n: usize, l: Option<usize>, stats: &StatArgs) -> BenchConfig {
    let mut config = BenchConfig::new(algorithm, n);
    if l.is_some() {
        config.l_blocks = l;
    }
    apply_stats(config, stats)
}

fn apply_stats(config: BenchConfig, stats: &StatArgs) -> BenchConfig {
    BenchConfig {
        constellation: stats.mapper,
        confidence_level: stats.confidence,
        max_rel_error: stats.max_rel_error,
        warmup_discard: stats.warmup,
        max_repetitions: stats.max_reps,
        prng_seed: stats.seed,
        ..config
    }
}

fn report_row(row: &SweepRow) {
    let r = &row.result;
    eprintln!(
        "{} N={} L={}: {:.3} µs ± {:.3} over {} samples ({}){}",
        row.config.algorithm,
        row.config.n,
        row.config.l_blocks.map(|l| l.to_string()).unwrap_or_else(|| "-".into()),
        r.mean_runtime_seconds * 1e6,
        r.half_width_seconds * 1e6,
        r.sample_count,
        r.stopped_by.as_str(),
        if r.resolution_warning { " [timer resolution coarser than mean]" } else { "" }
    );
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let config = bench_config(args.algo, args.n, args.l, &args.stats);
    let result = run_bench(&config)?;
    let row = SweepRow {
        requested_n: config.n,
        config,
        result,
    };
    report_row(&row);
    let mut out = sink(args.stats.output.as_deref())?;
    write_csv_header(&mut out)?;
    write_csv_row(&row, &mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let base = apply_stats(BenchConfig::new(Algorithm::Fft, 1), &args.stats);
    let configs = match (args.preset, args.algo) {
        (Some(Preset::Table2), _) => table2_configs(&base),
        (Some(Preset::Table3), _) => table3_configs(&base),
        (None, Some(algorithm)) => args
            .n
            .iter()
            .map(|&n| bench_config(algorithm, n, args.l, &args.stats))
            .collect(),
        (None, None) => bail!("sweep needs --preset or --algo with --n"),
    };
    let mut out = sink(args.stats.output.as_deref())?;
    write_csv_header(&mut out)?;
    let mut write_err = None;
    sweep_with(&configs, &mut MonotonicTimer, |row| {
        report_row(row);
        if let Err(e) = write_csv_row(row, &mut out).and_then(|_| out.flush()) {
            write_err.get_or_insert(e);
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    Ok(())
}

fn curve_sizes(args: &ScCurveArgs) -> Result<Vec<usize>> {
    if args.n_min == 0 || args.n_min > args.n_max {
        bail!("need 1 <= n-min <= n-max, got {}..{}", args.n_min, args.n_max);
    }
    Ok(match args.scale {
        Scale::Pow2 => {
            let start = args.n_min.next_power_of_two();
            std::iter::successors(Some(start), |&n| n.checked_mul(2))
                .take_while(|&n| n <= args.n_max)
                .collect()
        }
        Scale::Linear => {
            if args.step == 0 {
                bail!("--step must be positive");
            }
            (args.n_min..=args.n_max).step_by(args.step).collect()
        }
    })
}

fn cmd_sc_curve(args: ScCurveArgs) -> Result<()> {
    let requested = curve_sizes(&args)?;
    let sizes: Vec<usize> = requested
        .iter()
        .copied()
        .filter(|&n| InstructionModel::new(args.algo, n, args.l).is_ok())
        .collect();
    if sizes.len() < requested.len() {
        eprintln!(
            "skipped {} sizes the {} model does not accept",
            requested.len() - sizes.len(),
            args.algo
        );
    }
    let points = sc_curve(args.algo, args.l, sizes, args.mapper, args.per_instruction_seconds)?;
    let mut out = sink(args.output.as_deref())?;
    write_curve_csv(&points, &mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_nyquist(args: NyquistArgs) -> Result<()> {
    let spec = NyquistSpec::new(args.n, args.delta_f)?;
    let mut out = io::stdout().lock();
    let base = format!(
        "{},{},{:e},{:e},{:e}",
        spec.n(),
        spec.delta_f(),
        spec.bandwidth(),
        spec.t_nyq(),
        spec.t_sym()
    );
    match args.algo {
        None => {
            writeln!(out, "n,delta_f_hz,w_hz,t_nyq_s,t_sym_s")?;
            writeln!(out, "{base}")?;
        }
        Some(algorithm) => {
            let model = InstructionModel::new(algorithm, args.n, args.l)?;
            let verdict = nyquist_check(&spec, &model, args.per_instruction_seconds)?;
            writeln!(
                out,
                "n,delta_f_hz,w_hz,t_nyq_s,t_sym_s,algorithm,instr_count,cost_s,verdict,margin_s"
            )?;
            writeln!(
                out,
                "{base},{},{},{:e},{},{:e}",
                algorithm,
                model.count().instr_count,
                verdict.cost_seconds,
                if verdict.meets { "meets" } else { "misses" },
                verdict.margin_seconds
            )?;
        }
    }
    Ok(())
}

fn cmd_instr_count(args: InstrCountArgs) -> Result<()> {
    let model = InstructionModel::new(args.algo, args.n, args.l)?;
    let count = model.count();
    let mut out = io::stdout().lock();
    writeln!(out, "algorithm,n,l_blocks,complex_mults,complex_adds,instr_count")?;
    writeln!(
        out,
        "{},{},{},{},{},{}",
        args.algo,
        args.n,
        model.l_blocks().map(|l| l.to_string()).unwrap_or_default(),
        count.complex_mults,
        count.complex_adds,
        count.instr_count
    )?;
    Ok(())
}
