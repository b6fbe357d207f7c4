//! Gray-coded constellations and bits-per-symbol accounting.
//!
//! Square QAM splits each label into an in-phase half (leading bits) and a
//! quadrature half (trailing bits). Each half is a Gray-coded PAM index
//! where label 0 sits at the most positive level. Points are scaled to unit
//! average energy. BPSK maps 0 to +1 and 1 to -1 on the real axis.

use std::fmt;
use std::str::FromStr;

use crate::transform::ComplexSample;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Constellation {
    #[default]
    Bpsk,
    Qpsk,
    Qam16,
    Qam64,
    Qam256,
}

impl Constellation {
    pub const ALL: [Constellation; 5] = [
        Constellation::Bpsk,
        Constellation::Qpsk,
        Constellation::Qam16,
        Constellation::Qam64,
        Constellation::Qam256,
    ];

    /// Number of points `M`.
    pub fn size(self) -> usize {
        1 << self.bits_per_point()
    }

    pub fn bits_per_point(self) -> usize {
        match self {
            Constellation::Bpsk => 1,
            Constellation::Qpsk => 2,
            Constellation::Qam16 => 4,
            Constellation::Qam64 => 6,
            Constellation::Qam256 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Constellation::Bpsk => "BPSK",
            Constellation::Qpsk => "QPSK",
            Constellation::Qam16 => "16-QAM",
            Constellation::Qam64 => "64-QAM",
            Constellation::Qam256 => "256-QAM",
        }
    }

    // bits per axis for square QAM
    fn axis_bits(self) -> usize {
        self.bits_per_point() / 2
    }

    fn scale(self) -> f64 {
        match self {
            Constellation::Bpsk => 1.0,
            _ => {
                let m = self.size() as f64;
                (3.0 / (2.0 * (m - 1.0))).sqrt()
            }
        }
    }

    /// Maps one label (`bits_per_point` bits, MSB first) to its point.
    pub fn point(self, label: u32) -> ComplexSample {
        match self {
            Constellation::Bpsk => ComplexSample::new(if label & 1 == 0 { 1.0 } else { -1.0 }, 0.0),
            _ => {
                let k = self.axis_bits();
                let mask = (1u32 << k) - 1;
                let i = pam_level(gray_decode((label >> k) & mask), k);
                let q = pam_level(gray_decode(label & mask), k);
                ComplexSample::new(i, q) * self.scale()
            }
        }
    }

    /// Hard decision to the nearest point's label.
    pub fn decide(self, sample: ComplexSample) -> u32 {
        match self {
            Constellation::Bpsk => u32::from(sample.re < 0.0),
            _ => {
                let k = self.axis_bits();
                let scale = self.scale();
                let i = gray_encode(pam_index(sample.re / scale, k));
                let q = gray_encode(pam_index(sample.im / scale, k));
                (i << k) | q
            }
        }
    }

    pub fn points(self) -> Vec<ComplexSample> {
        (0..self.size() as u32).map(|label| self.point(label)).collect()
    }
}

impl fmt::Display for Constellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constellation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "bpsk" => Ok(Constellation::Bpsk),
            "qpsk" | "4qam" | "qam4" => Ok(Constellation::Qpsk),
            "16qam" | "qam16" => Ok(Constellation::Qam16),
            "64qam" | "qam64" => Ok(Constellation::Qam64),
            "256qam" | "qam256" => Ok(Constellation::Qam256),
            _ => Err(Error::InvalidArgument(format!(
                "unknown constellation `{s}` (expected BPSK, QPSK, 16-QAM, 64-QAM or 256-QAM)"
            ))),
        }
    }
}

fn gray_encode(v: u32) -> u32 {
    v ^ (v >> 1)
}

fn gray_decode(mut g: u32) -> u32 {
    let mut v = g;
    while g > 1 {
        g >>= 1;
        v ^= g;
    }
    v
}

// index 0 is the most positive level
fn pam_level(index: u32, bits: usize) -> f64 {
    ((1u32 << bits) - 1) as f64 - 2.0 * index as f64
}

fn pam_index(level: f64, bits: usize) -> u32 {
    let top = ((1u32 << bits) - 1) as f64;
    ((top - level) / 2.0).round().clamp(0.0, top) as u32
}

/// `B(N) = N·log2 M`, the useful bits carried by one symbol.
pub fn bits_per_symbol(n: usize, constellation: Constellation) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    Ok(n as u64 * constellation.bits_per_point() as u64)
}

/// Bits are `0`/`1` values, consumed MSB-first per point.
pub fn map_bits(bits: &[u8], constellation: Constellation) -> Result<Vec<ComplexSample>> {
    let per_point = constellation.bits_per_point();
    if bits.len() % per_point != 0 {
        return Err(Error::InvalidArgument(format!(
            "{} bits cannot be split into {}-bit {} labels",
            bits.len(),
            per_point,
            constellation
        )));
    }
    bits.chunks_exact(per_point)
        .map(|chunk| {
            let label = chunk.iter().try_fold(0u32, |acc, &b| match b {
                0 | 1 => Ok((acc << 1) | b as u32),
                other => Err(Error::InvalidArgument(format!("bit value {other} is not 0 or 1"))),
            })?;
            Ok(constellation.point(label))
        })
        .collect()
}

pub fn demap_samples(samples: &[ComplexSample], constellation: Constellation) -> Vec<u8> {
    let per_point = constellation.bits_per_point();
    let mut bits = Vec::with_capacity(samples.len() * per_point);
    for &s in samples {
        let label = constellation.decide(s);
        bits.extend((0..per_point).rev().map(|shift| ((label >> shift) & 1) as u8));
    }
    bits
}
