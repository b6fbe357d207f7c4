//! Exact frequency↔time transforms on flat sample arrays.
//!
//! Both transforms share one convention: the forward map is the plain sum
//! `X[k] = Σ_t Y[t]·e^{-j2πkt/N}` and the inverse carries the `1/N` factor,
//! so `forward(inverse(x)) == x`. [`Normalization::Unnormalized`] drops the
//! factor for callers that want the raw sums.

mod counter;
mod dft;
mod fft;

pub use counter::OpCounter;
pub use dft::{dft, dft_forward, dft_inverse};
pub use fft::{fft_forward, fft_inverse, is_power_of_two, FftPlan};

use num_complex::Complex64;

use crate::{Error, Result};

/// One complex baseband sample.
pub type ComplexSample = Complex64;

/// Sign of the kernel exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Time to frequency, `e^{-j…}`.
    Forward,
    /// Frequency to time, `e^{+j…}`.
    Inverse,
}

impl Direction {
    pub(crate) fn sign(self) -> f64 {
        match self {
            Direction::Forward => -1.0,
            Direction::Inverse => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Normalization {
    /// Scale the inverse direction by one over the transform size.
    #[default]
    Normalized,
    /// Raw sums in both directions.
    Unnormalized,
}

pub(crate) fn ensure_non_empty(input: &[ComplexSample]) -> Result<()> {
    if input.is_empty() {
        return Err(Error::InvalidArgument(
            "transform input must hold at least one sample".into(),
        ));
    }
    Ok(())
}

/// `e^{j·sign·2π·r/n}` for `r` in `0..n`.
pub(crate) fn roots_of_unity(n: usize, direction: Direction) -> Vec<ComplexSample> {
    let sign = direction.sign();
    (0..n)
        .map(|r| {
            if r == 0 {
                return ComplexSample::new(1.0, 0.0);
            }
            let angle = sign * 2.0 * std::f64::consts::PI * r as f64 / n as f64;
            let (s, c) = angle.sin_cos();
            ComplexSample::new(c, s)
        })
        .collect()
}

pub(crate) fn scale_in_place(samples: &mut [ComplexSample], factor: f64) {
    for s in samples {
        *s *= factor;
    }
}
