use super::{
    ensure_non_empty, roots_of_unity, scale_in_place, ComplexSample, Direction, Normalization,
    OpCounter,
};
use crate::{Error, Result};

const POWER_OF_TWO: &str = "FFT requires N = 2^i";

pub fn is_power_of_two(n: usize) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// Precomputed tables for an iterative in-place radix-2 decimation-in-time FFT.
///
/// Each stage combines the even-indexed half `E[k]` and the twiddled
/// odd-indexed half `e^{∓j2πk/N}·O[k]` as `E ± w·O`. A plan is built once per
/// size and reused across symbols; building it is not counted.
#[derive(Debug, Clone)]
pub struct FftPlan {
    n: usize,
    log2_n: u32,
    bit_reverse: Vec<usize>,
    forward_twiddles: Vec<ComplexSample>,
    inverse_twiddles: Vec<ComplexSample>,
}

impl FftPlan {
    pub fn new(n: usize) -> Result<Self> {
        if !is_power_of_two(n) {
            return Err(Error::UnsupportedSize {
                n,
                constraint: POWER_OF_TWO,
            });
        }
        let log2_n = n.trailing_zeros();
        let bit_reverse = (0..n)
            .map(|i| {
                if log2_n == 0 {
                    0
                } else {
                    i.reverse_bits() >> (usize::BITS - log2_n)
                }
            })
            .collect();
        let mut forward_twiddles = roots_of_unity(n, Direction::Forward);
        forward_twiddles.truncate(n / 2);
        let mut inverse_twiddles = roots_of_unity(n, Direction::Inverse);
        inverse_twiddles.truncate(n / 2);
        Ok(Self {
            n,
            log2_n,
            bit_reverse,
            forward_twiddles,
            inverse_twiddles,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Transforms `input` into `output`; both must have the plan's length.
    pub fn process(
        &self,
        input: &[ComplexSample],
        output: &mut [ComplexSample],
        direction: Direction,
        normalization: Normalization,
        counter: &mut OpCounter,
    ) -> Result<()> {
        if input.len() != self.n || output.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "FFT plan of size {} got input of {} and output of {} samples",
                self.n,
                input.len(),
                output.len()
            )));
        }
        for (dst, &src) in output.iter_mut().zip(&self.bit_reverse) {
            *dst = input[src];
        }

        let twiddles = match direction {
            Direction::Forward => &self.forward_twiddles,
            Direction::Inverse => &self.inverse_twiddles,
        };
        let n = self.n;
        let mut half = 1;
        while half < n {
            let stride = n / (2 * half);
            for block in output.chunks_exact_mut(2 * half) {
                let (even, odd) = block.split_at_mut(half);
                for (k, (e, o)) in even.iter_mut().zip(odd.iter_mut()).enumerate() {
                    let t = *o * twiddles[k * stride];
                    *o = *e - t;
                    *e += t;
                }
            }
            half *= 2;
        }
        let stages = self.log2_n as u64;
        counter.add_mults((n as u64 / 2) * stages);
        counter.add_adds(n as u64 * stages);

        if direction == Direction::Inverse && normalization == Normalization::Normalized {
            scale_in_place(output, 1.0 / n as f64);
        }
        Ok(())
    }

    pub fn transform(
        &self,
        input: &[ComplexSample],
        direction: Direction,
        normalization: Normalization,
        counter: &mut OpCounter,
    ) -> Result<Vec<ComplexSample>> {
        let mut output = vec![ComplexSample::new(0.0, 0.0); self.n];
        self.process(input, &mut output, direction, normalization, counter)?;
        Ok(output)
    }
}

pub fn fft_forward(input: &[ComplexSample], counter: &mut OpCounter) -> Result<Vec<ComplexSample>> {
    ensure_non_empty(input)?;
    FftPlan::new(input.len())?.transform(input, Direction::Forward, Normalization::Normalized, counter)
}

/// Inverse FFT with the `1/N` factor.
pub fn fft_inverse(input: &[ComplexSample], counter: &mut OpCounter) -> Result<Vec<ComplexSample>> {
    ensure_non_empty(input)?;
    FftPlan::new(input.len())?.transform(input, Direction::Inverse, Normalization::Normalized, counter)
}
