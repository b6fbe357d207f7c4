//! Frequency-time transforms for OFDM and vector OFDM (V-OFDM).
//!
//! The crate provides
//!
//! - [`transform`]: the reference O(N²) DFT and an iterative radix-2 FFT, both
//!   instrumented with an [`OpCounter`],
//! - [`vofdm`]: vector-block arrangement and the parameterized DFT (PDFT),
//!   including the multiplierless two-block path,
//! - [`mapper`]: Gray-coded constellations and bits-per-symbol accounting,
//! - [`sc_model`]: closed-form instruction counts, spectro-computational
//!   throughput and the Nyquist deadline check,
//! - [`bench`]: a wall-clock harness with a sequential confidence-interval
//!   stopping rule, MT19937-64 seeded inputs and CSV sweeps.

pub mod bench;
mod error;
pub mod mapper;
pub mod sc_model;
pub mod transform;
pub mod vofdm;

pub use error::{Error, Result};
pub use mapper::Constellation;
pub use transform::{ComplexSample, Direction, Normalization, OpCounter};
pub use sc_model::Algorithm;
pub use vofdm::SymbolSpec;

#[cfg(test)]
mod test_support;
