//! Closed-form complexity models, spectro-computational (SC) throughput and
//! the Nyquist deadline check.
//!
//! SC throughput is useful bits over computational cost, `B(N) / T(N)`. The
//! instruction model gives each algorithm a headline cost `instr_count`:
//!
//! - DFT: `N²` complex multiplications,
//! - FFT: `5·N·log2 N` real arithmetic instructions (10 per radix-2 butterfly),
//! - PDFT: `L²·𝓜` complex multiplications,
//! - two-block PDFT: `N` complex additions.
//!
//! Complex multiplication and addition counts are reported alongside and
//! equal what [`OpCounter`](crate::OpCounter) records on a live run.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::mapper::{bits_per_symbol, Constellation};
use crate::transform::is_power_of_two;
use crate::{Error, Result};

/// Per-instruction time used when none is given: one picosecond.
pub const DEFAULT_INSTRUCTION_SECONDS: f64 = 1e-12;

/// Real arithmetic instructions charged per FFT point and stage.
pub const FFT_INSTRUCTIONS_PER_POINT_STAGE: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Dft,
    Fft,
    Pdft,
    /// Multiplierless PDFT with two vector blocks.
    PdftL2,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dft => "DFT",
            Algorithm::Fft => "FFT",
            Algorithm::Pdft => "PDFT",
            Algorithm::PdftL2 => "PDFT_L2",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "dft" => Ok(Algorithm::Dft),
            "fft" => Ok(Algorithm::Fft),
            "pdft" => Ok(Algorithm::Pdft),
            "pdft_l2" | "pdftl2" => Ok(Algorithm::PdftL2),
            _ => Err(Error::InvalidArgument(format!(
                "unknown algorithm `{s}` (expected dft, fft, pdft or pdft-l2)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstructionModel {
    algorithm: Algorithm,
    n: usize,
    l_blocks: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstructionCount {
    pub complex_mults: u64,
    pub complex_adds: u64,
    /// Headline cost the SC model divides by.
    pub instr_count: u64,
}

impl InstructionModel {
    /// `l_blocks` is required for [`Algorithm::Pdft`], ignored for DFT/FFT and
    /// must be 2 (or absent) for [`Algorithm::PdftL2`].
    pub fn new(algorithm: Algorithm, n: usize, l_blocks: Option<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        let l_blocks = match algorithm {
            Algorithm::Dft => None,
            Algorithm::Fft => {
                if !is_power_of_two(n) {
                    return Err(Error::UnsupportedSize {
                        n,
                        constraint: "FFT requires N = 2^i",
                    });
                }
                if n < 2 {
                    return Err(Error::UnsupportedSize {
                        n,
                        constraint: "FFT instruction model needs N >= 2 for a positive count",
                    });
                }
                None
            }
            Algorithm::Pdft => {
                let l = l_blocks.ok_or_else(|| {
                    Error::InvalidArgument("PDFT model needs the number of blocks L".into())
                })?;
                crate::SymbolSpec::new(n, l)?;
                Some(l)
            }
            Algorithm::PdftL2 => {
                if matches!(l_blocks, Some(l) if l != 2) {
                    return Err(Error::InvalidSpec("two-block PDFT has L = 2".into()));
                }
                crate::SymbolSpec::new(n, 2)?;
                Some(2)
            }
        };
        Ok(Self {
            algorithm,
            n,
            l_blocks,
        })
    }

    pub fn algorithm(&self) -> Algorithm {
        self.algorithm
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l_blocks(&self) -> Option<usize> {
        self.l_blocks
    }

    pub fn count(&self) -> InstructionCount {
        let n = self.n as u64;
        match self.algorithm {
            Algorithm::Dft => InstructionCount {
                complex_mults: n * n,
                complex_adds: n * n,
                instr_count: n * n,
            },
            Algorithm::Fft => {
                let stages = n.trailing_zeros() as u64;
                InstructionCount {
                    complex_mults: n / 2 * stages,
                    complex_adds: n * stages,
                    instr_count: FFT_INSTRUCTIONS_PER_POINT_STAGE * n * stages,
                }
            }
            Algorithm::Pdft => {
                let l = self.l_blocks.unwrap_or(1) as u64;
                let products = l * l * (n / l);
                InstructionCount {
                    complex_mults: products,
                    complex_adds: products,
                    instr_count: products,
                }
            }
            Algorithm::PdftL2 => InstructionCount {
                complex_mults: 0,
                complex_adds: n,
                instr_count: n,
            },
        }
    }
}

pub fn instruction_count(model: &InstructionModel) -> InstructionCount {
    model.count()
}

/// Bits per second of computation.
pub fn sc_throughput(bits: u64, cost_seconds: f64) -> Result<f64> {
    if !(cost_seconds > 0.0) || !cost_seconds.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "cost must be a positive number of seconds, got {cost_seconds}"
        )));
    }
    Ok(bits as f64 / cost_seconds)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScPoint {
    pub n: usize,
    pub bits: u64,
    pub instr_count: u64,
    pub model_seconds: f64,
    pub sc_bps: f64,
}

/// `SC(N) = B(N) / (instr_count(N) · per_instruction_seconds)` for each `N`.
pub fn sc_curve(
    algorithm: Algorithm,
    l_blocks: Option<usize>,
    ns: impl IntoIterator<Item = usize>,
    constellation: Constellation,
    per_instruction_seconds: f64,
) -> Result<Vec<ScPoint>> {
    if !(per_instruction_seconds > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "per-instruction time must be positive, got {per_instruction_seconds}"
        )));
    }
    let points = ns
        .into_iter()
        .map(|n| {
            let count = InstructionModel::new(algorithm, n, l_blocks)?.count();
            let bits = bits_per_symbol(n, constellation)?;
            let model_seconds = count.instr_count as f64 * per_instruction_seconds;
            Ok(ScPoint {
                n,
                bits,
                instr_count: count.instr_count,
                model_seconds,
                sc_bps: sc_throughput(bits, model_seconds)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty range of N".into()));
    }
    Ok(points)
}

pub const CURVE_CSV_HEADER: &str = "n,bits,instr_count,model_seconds,sc_bps";

pub fn write_curve_csv<W: Write>(points: &[ScPoint], mut out: W) -> io::Result<()> {
    writeln!(out, "{CURVE_CSV_HEADER}")?;
    for p in points {
        writeln!(
            out,
            "{},{},{},{:e},{:e}",
            p.n, p.bits, p.instr_count, p.model_seconds, p.sc_bps
        )?;
    }
    Ok(())
}

/// Subcarrier count and spacing of an OFDM symbol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NyquistSpec {
    n: usize,
    delta_f: f64,
}

impl NyquistSpec {
    pub fn new(n: usize, delta_f_hz: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("N must be at least 1".into()));
        }
        if !(delta_f_hz > 0.0) || !delta_f_hz.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "subcarrier spacing must be positive, got {delta_f_hz}"
            )));
        }
        Ok(Self {
            n,
            delta_f: delta_f_hz,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta_f(&self) -> f64 {
        self.delta_f
    }

    /// Bandwidth `N·Δf` in Hz.
    pub fn bandwidth(&self) -> f64 {
        self.n as f64 * self.delta_f
    }

    /// Interval between IQ samples, `1/(N·Δf)`.
    pub fn t_nyq(&self) -> f64 {
        1.0 / self.bandwidth()
    }

    /// Symbol duration, `N·T_NYQ`.
    pub fn t_sym(&self) -> f64 {
        self.n as f64 * self.t_nyq()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NyquistVerdict {
    pub meets: bool,
    pub cost_seconds: f64,
    /// `t_sym - cost`; negative when the deadline is missed.
    pub margin_seconds: f64,
}

// Relative slack so that a per-instruction time of exactly t_sym/count
// is not rejected by the rounding of the product.
const DEADLINE_ROUNDING_SLACK: f64 = 4.0 * f64::EPSILON;

/// Whether the modelled transform fits in one symbol duration.
pub fn nyquist_check(
    spec: &NyquistSpec,
    model: &InstructionModel,
    per_instruction_seconds: f64,
) -> Result<NyquistVerdict> {
    if !(per_instruction_seconds > 0.0) || !per_instruction_seconds.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "per-instruction time must be positive, got {per_instruction_seconds}"
        )));
    }
    let t_sym = spec.t_sym();
    let cost_seconds = model.count().instr_count as f64 * per_instruction_seconds;
    Ok(NyquistVerdict {
        meets: cost_seconds <= t_sym * (1.0 + DEADLINE_ROUNDING_SLACK),
        cost_seconds,
        margin_seconds: t_sym - cost_seconds,
    })
}
