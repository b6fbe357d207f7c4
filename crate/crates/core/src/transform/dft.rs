use super::{
    ensure_non_empty, roots_of_unity, scale_in_place, ComplexSample, Direction, Normalization,
    OpCounter,
};
use crate::Result;

/// Direct `O(N²)` transform of any length `N ≥ 1`.
///
/// The kernel `e^{±j2πkt/N}` is read from a table of the `N` roots of unity
/// indexed by `k·t mod N`, so every term uses an exactly reduced angle.
pub fn dft(
    input: &[ComplexSample],
    direction: Direction,
    normalization: Normalization,
    counter: &mut OpCounter,
) -> Result<Vec<ComplexSample>> {
    ensure_non_empty(input)?;
    let n = input.len();
    let roots = roots_of_unity(n, direction);

    let mut output = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = ComplexSample::new(0.0, 0.0);
        let mut idx = 0usize;
        for &x in input {
            acc += x * roots[idx];
            idx += k;
            if idx >= n {
                idx -= n;
            }
        }
        output.push(acc);
    }
    let nn = (n as u64) * (n as u64);
    counter.add_mults(nn);
    counter.add_adds(nn);

    if direction == Direction::Inverse && normalization == Normalization::Normalized {
        scale_in_place(&mut output, 1.0 / n as f64);
    }
    Ok(output)
}

/// `X[k] = Σ_t input[t]·e^{-j2πkt/N}`.
pub fn dft_forward(input: &[ComplexSample], counter: &mut OpCounter) -> Result<Vec<ComplexSample>> {
    dft(input, Direction::Forward, Normalization::Normalized, counter)
}

/// `Y[t] = (1/N)·Σ_k input[k]·e^{j2πkt/N}`.
pub fn dft_inverse(input: &[ComplexSample], counter: &mut OpCounter) -> Result<Vec<ComplexSample>> {
    dft(input, Direction::Inverse, Normalization::Normalized, counter)
}
