/// Arithmetic-operation tally for one or more transform invocations.
///
/// Only per-symbol work is counted. Twiddle tables, bit-reversal tables and
/// the real-valued `1/N` normalization are setup or scaling and are never
/// added here.
///
/// Counting conventions:
///
/// | transform       | `complex_mults`   | `complex_adds`  |
/// |-----------------|-------------------|-----------------|
/// | direct DFT      | `N²`              | `N²`            |
/// | radix-2 FFT     | `(N/2)·log2 N`    | `N·log2 N`      |
/// | PDFT (any `L`)  | `L²·𝓜`            | `L²·𝓜`          |
/// | two-block PDFT  | `0`               | `N`             |
///
/// Accumulations into a zero-initialized sum count as additions, as do the
/// subtractions of a butterfly. Multiplications by twiddles equal to `±1`
/// are still counted by the DFT, FFT and generic PDFT.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub complex_mults: u64,
    pub complex_adds: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_mults(&mut self, count: u64) {
        self.complex_mults += count;
    }

    pub fn add_adds(&mut self, count: u64) {
        self.complex_adds += count;
    }

    /// Folds counts gathered by an independent task into this counter.
    pub fn merge(&mut self, other: &OpCounter) {
        self.complex_mults += other.complex_mults;
        self.complex_adds += other.complex_adds;
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }
}

impl std::ops::Add for OpCounter {
    type Output = OpCounter;

    fn add(mut self, rhs: OpCounter) -> OpCounter {
        self.merge(&rhs);
        self
    }
}

impl std::iter::Sum for OpCounter {
    fn sum<I: Iterator<Item = OpCounter>>(iter: I) -> Self {
        iter.fold(OpCounter::default(), |a, b| a + b)
    }
}

impl std::fmt::Display for OpCounter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "complex_mults={} complex_adds={}",
            self.complex_mults, self.complex_adds
        )
    }
}
