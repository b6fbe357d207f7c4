//! Vector OFDM: the `N`-sample symbol split into `L` vector blocks of
//! `𝓜 = N/L` samples, transformed by `𝓜` independent `L`-point DFTs.
//!
//! Frequency block `l` holds `X[l·𝓜 + m]` and time block `q` holds
//! `Y[q·𝓜 + m]` for `m` in `0..𝓜`. Block indices `l` and `q` both run over
//! `0..L` (exclusive), so there are exactly `L` blocks on each side.

mod pdft;

pub use pdft::{pdft, pdft_forward, pdft_inverse, pdft_l2, pdft_l2_into, PdftPlan};

use crate::transform::ComplexSample;
use crate::{Error, Result};

/// One V-OFDM numerology: `n = l_blocks · block_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymbolSpec {
    n: usize,
    l_blocks: usize,
    block_len: usize,
}

impl SymbolSpec {
    pub fn new(n: usize, l_blocks: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("N must be at least 1".into()));
        }
        if l_blocks == 0 || l_blocks > n {
            return Err(Error::InvalidSpec(format!(
                "L must satisfy 1 <= L <= N, got L = {l_blocks} for N = {n}"
            )));
        }
        if n % l_blocks != 0 {
            return Err(Error::InvalidSpec(format!(
                "N = {n} is not divisible by L = {l_blocks}"
            )));
        }
        Ok(Self {
            n,
            l_blocks,
            block_len: n / l_blocks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l_blocks(&self) -> usize {
        self.l_blocks
    }

    /// Samples per vector block, `𝓜`.
    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::InvalidSpec(format!(
                "buffer holds {len} samples but the spec declares N = {}",
                self.n
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VectorBlocks {
    spec: SymbolSpec,
    blocks: Vec<Vec<ComplexSample>>,
}

impl VectorBlocks {
    pub fn spec(&self) -> SymbolSpec {
        self.spec
    }

    pub fn blocks(&self) -> &[Vec<ComplexSample>] {
        &self.blocks
    }

    pub fn block(&self, l: usize) -> &[ComplexSample] {
        &self.blocks[l]
    }
}

/// `blocks[l][m] = input[l·𝓜 + m]`.
pub fn to_blocks(input: &[ComplexSample], spec: SymbolSpec) -> Result<VectorBlocks> {
    spec.check_len(input.len())?;
    let blocks = input
        .chunks_exact(spec.block_len)
        .map(<[ComplexSample]>::to_vec)
        .collect();
    Ok(VectorBlocks { spec, blocks })
}

pub fn from_blocks(blocks: &VectorBlocks) -> Vec<ComplexSample> {
    blocks.blocks.concat()
}
