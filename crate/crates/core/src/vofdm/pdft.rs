use rayon::prelude::*;

use super::SymbolSpec;
use crate::transform::{roots_of_unity, scale_in_place, ComplexSample, Direction, Normalization, OpCounter};
use crate::{Error, Result};

/// Parameterized DFT for one [`SymbolSpec`].
///
/// The inverse direction computes, for every time block `q` and offset `m`,
///
/// ```text
/// Y[q·𝓜 + m] = Σ_{l=0}^{L-1} X[l·𝓜 + m] · e^{j2πql/L}
/// ```
///
/// looping `q`, then `m`, then `l`. The forward direction uses the conjugate
/// kernel. With [`Normalization::Normalized`] the inverse is scaled by `1/L`
/// so that forward undoes it; `Unnormalized` is the raw triple loop.
///
/// Every one of the `L²·𝓜` kernel products is counted, including those where
/// the twiddle is `±1`. The `L×L` kernel is built with the plan and is not
/// counted.
#[derive(Debug, Clone)]
pub struct PdftPlan {
    spec: SymbolSpec,
    // kernel[q * L + l] = e^{±j2π(ql mod L)/L}
    inverse_kernel: Vec<ComplexSample>,
    forward_kernel: Vec<ComplexSample>,
}

impl PdftPlan {
    pub fn new(spec: SymbolSpec) -> Self {
        let l = spec.l_blocks();
        let kernel = |direction| {
            let roots = roots_of_unity(l, direction);
            (0..l * l).map(|i| roots[(i / l) * (i % l) % l]).collect()
        };
        Self {
            spec,
            inverse_kernel: kernel(Direction::Inverse),
            forward_kernel: kernel(Direction::Forward),
        }
    }

    pub fn spec(&self) -> SymbolSpec {
        self.spec
    }

    fn kernel(&self, direction: Direction) -> &[ComplexSample] {
        match direction {
            Direction::Forward => &self.forward_kernel,
            Direction::Inverse => &self.inverse_kernel,
        }
    }

    fn check_buffers(&self, input: &[ComplexSample], output: &[ComplexSample]) -> Result<()> {
        self.spec.check_len(input.len())?;
        self.spec.check_len(output.len())
    }

    fn count(&self, counter: &mut OpCounter, blocks: usize) {
        let l = self.spec.l_blocks() as u64;
        let products = l * l * blocks as u64;
        counter.add_mults(products);
        counter.add_adds(products);
    }

    fn finish(&self, output: &mut [ComplexSample], direction: Direction, normalization: Normalization) {
        if direction == Direction::Inverse && normalization == Normalization::Normalized {
            scale_in_place(output, 1.0 / self.spec.l_blocks() as f64);
        }
    }

    /// Transforms `input` into `output` in `q`, `m`, `l` loop order.
    pub fn process(
        &self,
        input: &[ComplexSample],
        output: &mut [ComplexSample],
        direction: Direction,
        normalization: Normalization,
        counter: &mut OpCounter,
    ) -> Result<()> {
        self.check_buffers(input, output)?;
        let l_blocks = self.spec.l_blocks();
        let block_len = self.spec.block_len();
        let kernel = self.kernel(direction);

        for (q, out_block) in output.chunks_exact_mut(block_len).enumerate() {
            let row = &kernel[q * l_blocks..(q + 1) * l_blocks];
            for (m, y) in out_block.iter_mut().enumerate() {
                let mut acc = ComplexSample::new(0.0, 0.0);
                for (l, &w) in row.iter().enumerate() {
                    acc += input[l * block_len + m] * w;
                }
                *y = acc;
            }
        }
        self.count(counter, block_len);
        self.finish(output, direction, normalization);
        Ok(())
    }

    /// Computes the `𝓜` per-offset `L`-point transforms in the order given by
    /// `offsets`, which must be a permutation of `0..𝓜`.
    ///
    /// Each output depends on one offset only, so any order yields the same
    /// bits as [`PdftPlan::process`].
    pub fn process_in_offset_order(
        &self,
        input: &[ComplexSample],
        output: &mut [ComplexSample],
        offsets: &[usize],
        direction: Direction,
        normalization: Normalization,
        counter: &mut OpCounter,
    ) -> Result<()> {
        self.check_buffers(input, output)?;
        let l_blocks = self.spec.l_blocks();
        let block_len = self.spec.block_len();
        let mut seen = vec![false; block_len];
        for &m in offsets {
            if m >= block_len || std::mem::replace(&mut seen[m], true) {
                return Err(Error::InvalidArgument(format!(
                    "offset order must be a permutation of 0..{block_len}"
                )));
            }
        }
        if offsets.len() != block_len {
            return Err(Error::InvalidArgument(format!(
                "offset order must be a permutation of 0..{block_len}"
            )));
        }

        let kernel = self.kernel(direction);
        for &m in offsets {
            for q in 0..l_blocks {
                let row = &kernel[q * l_blocks..(q + 1) * l_blocks];
                let mut acc = ComplexSample::new(0.0, 0.0);
                for (l, &w) in row.iter().enumerate() {
                    acc += input[l * block_len + m] * w;
                }
                output[q * block_len + m] = acc;
            }
        }
        self.count(counter, block_len);
        self.finish(output, direction, normalization);
        Ok(())
    }

    /// Same result as [`PdftPlan::process`], with the time blocks computed on
    /// the rayon pool. Each task tallies its own counts, merged at the end.
    pub fn process_parallel(
        &self,
        input: &[ComplexSample],
        output: &mut [ComplexSample],
        direction: Direction,
        normalization: Normalization,
        counter: &mut OpCounter,
    ) -> Result<()> {
        self.check_buffers(input, output)?;
        let l_blocks = self.spec.l_blocks();
        let block_len = self.spec.block_len();
        let kernel = self.kernel(direction);

        let tally: OpCounter = output
            .par_chunks_exact_mut(block_len)
            .enumerate()
            .map(|(q, out_block)| {
                let row = &kernel[q * l_blocks..(q + 1) * l_blocks];
                for (m, y) in out_block.iter_mut().enumerate() {
                    let mut acc = ComplexSample::new(0.0, 0.0);
                    for (l, &w) in row.iter().enumerate() {
                        acc += input[l * block_len + m] * w;
                    }
                    *y = acc;
                }
                let products = (l_blocks * block_len) as u64;
                OpCounter {
                    complex_mults: products,
                    complex_adds: products,
                }
            })
            .sum();
        counter.merge(&tally);
        self.finish(output, direction, normalization);
        Ok(())
    }

    pub fn transform(
        &self,
        input: &[ComplexSample],
        direction: Direction,
        normalization: Normalization,
        counter: &mut OpCounter,
    ) -> Result<Vec<ComplexSample>> {
        let mut output = vec![ComplexSample::new(0.0, 0.0); self.spec.n()];
        self.process(input, &mut output, direction, normalization, counter)?;
        Ok(output)
    }
}

pub fn pdft(
    input: &[ComplexSample],
    spec: SymbolSpec,
    direction: Direction,
    normalization: Normalization,
    counter: &mut OpCounter,
) -> Result<Vec<ComplexSample>> {
    spec.check_len(input.len())?;
    PdftPlan::new(spec).transform(input, direction, normalization, counter)
}

/// Frequency to time, scaled by `1/L`.
pub fn pdft_inverse(
    freq: &[ComplexSample],
    spec: SymbolSpec,
    counter: &mut OpCounter,
) -> Result<Vec<ComplexSample>> {
    pdft(freq, spec, Direction::Inverse, Normalization::Normalized, counter)
}

pub fn pdft_forward(
    time: &[ComplexSample],
    spec: SymbolSpec,
    counter: &mut OpCounter,
) -> Result<Vec<ComplexSample>> {
    pdft(time, spec, Direction::Forward, Normalization::Normalized, counter)
}

/// Two-block PDFT without multiplications: `y0 = x0 + x1`, `y1 = x0 - x1`
/// over the two halves, costing exactly `N` complex additions.
///
/// Both directions share the kernel since `e^{±jπ} = -1`; a normalized
/// inverse is halved afterwards.
pub fn pdft_l2_into(
    input: &[ComplexSample],
    output: &mut [ComplexSample],
    direction: Direction,
    normalization: Normalization,
    counter: &mut OpCounter,
) -> Result<()> {
    let n = input.len();
    if n == 0 || n % 2 != 0 {
        return Err(Error::InvalidSpec(format!(
            "two-block PDFT requires an even, non-zero N, got N = {n}"
        )));
    }
    if output.len() != n {
        return Err(Error::InvalidSpec(format!(
            "output holds {} samples but input holds {n}",
            output.len()
        )));
    }
    let half = n / 2;
    let (x0, x1) = input.split_at(half);
    let (y0, y1) = output.split_at_mut(half);
    for (((a, b), s), d) in x0.iter().zip(x1).zip(y0.iter_mut()).zip(y1.iter_mut()) {
        *s = a + b;
        *d = a - b;
    }
    counter.add_adds(n as u64);
    if direction == Direction::Inverse && normalization == Normalization::Normalized {
        scale_in_place(output, 0.5);
    }
    Ok(())
}

pub fn pdft_l2(
    input: &[ComplexSample],
    direction: Direction,
    normalization: Normalization,
    counter: &mut OpCounter,
) -> Result<Vec<ComplexSample>> {
    let mut output = vec![ComplexSample::new(0.0, 0.0); input.len()];
    pdft_l2_into(input, &mut output, direction, normalization, counter)?;
    Ok(output)
}
