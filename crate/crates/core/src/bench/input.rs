use super::mt::Mt19937_64;
use crate::mapper::Constellation;
use crate::transform::ComplexSample;

/// `n` BPSK symbols from the MT19937-64 stream of `seed`.
pub fn generate_input(n: usize, seed: u64) -> Vec<ComplexSample> {
    generate_symbols(n, Constellation::Bpsk, seed)
}

/// `n` constellation points whose labels are random bits from MT19937-64.
///
/// Each 64-bit draw is consumed least-significant bit first; a point takes
/// the next `bits_per_point` bits (first bit is the label's MSB) and a draw is
/// never split across points.
pub fn generate_symbols(n: usize, constellation: Constellation, seed: u64) -> Vec<ComplexSample> {
    let per_point = constellation.bits_per_point();
    let points_per_draw = 64 / per_point;
    let mut rng = Mt19937_64::new(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut draw = rng.next_u64();
        for _ in 0..points_per_draw.min(n - out.len()) {
            let mut label = 0u32;
            for _ in 0..per_point {
                label = (label << 1) | (draw & 1) as u32;
                draw >>= 1;
            }
            out.push(constellation.point(label));
        }
    }
    out
}
