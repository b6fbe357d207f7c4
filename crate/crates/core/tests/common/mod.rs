//! Oracles written independently of the library's transform code.

#![allow(dead_code)]

use std::f64::consts::PI;

use vofdm_core::bench::Mt19937_64;
use vofdm_core::ComplexSample;

/// Unnormalized double-loop DFT with compensated sums; `sign` -1 forward, +1 inverse.
pub fn brute_force_dft(x: &[ComplexSample], sign: f64) -> Vec<ComplexSample> {
    let n = x.len();
    let roots: Vec<(f64, f64)> = (0..n)
        .map(|r| {
            let (s, c) = (sign * 2.0 * PI * r as f64 / n as f64).sin_cos();
            (c, s)
        })
        .collect();
    (0..n)
        .map(|k| {
            let (mut re, mut re_c, mut im, mut im_c) = (0.0, 0.0, 0.0, 0.0);
            for (t, v) in x.iter().enumerate() {
                let (c, s) = roots[(k * t) % n];
                two_sum(&mut re, &mut re_c, v.re * c - v.im * s);
                two_sum(&mut im, &mut im_c, v.re * s + v.im * c);
            }
            ComplexSample::new(re + re_c, im + im_c)
        })
        .collect()
}

fn two_sum(sum: &mut f64, comp: &mut f64, v: f64) {
    let t = *sum + v;
    if sum.abs() >= v.abs() {
        *comp += (*sum - t) + v;
    } else {
        *comp += (v - t) + *sum;
    }
    *sum = t;
}

/// `Y[q𝓜+m] = Σ_l X[l𝓜+m]·e^{j·sign·2πql/L}`, unnormalized.
pub fn block_sum_oracle(x: &[ComplexSample], l_blocks: usize, sign: f64) -> Vec<ComplexSample> {
    let block_len = x.len() / l_blocks;
    let mut y = vec![ComplexSample::new(0.0, 0.0); x.len()];
    for q in 0..l_blocks {
        for m in 0..block_len {
            let mut acc = ComplexSample::new(0.0, 0.0);
            for l in 0..l_blocks {
                let angle = sign * 2.0 * PI * ((q * l) % l_blocks) as f64 / l_blocks as f64;
                acc += x[l * block_len + m] * ComplexSample::from_polar(1.0, angle);
            }
            y[q * block_len + m] = acc;
        }
    }
    y
}

pub fn max_abs_diff(a: &[ComplexSample], b: &[ComplexSample]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn energy(x: &[ComplexSample]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum()
}

pub fn random_buffer(rng: &mut Mt19937_64, n: usize) -> Vec<ComplexSample> {
    (0..n)
        .map(|_| ComplexSample::new(rng.next_signed_unit(), rng.next_signed_unit()))
        .collect()
}

pub fn random_complex(rng: &mut Mt19937_64) -> ComplexSample {
    ComplexSample::new(rng.next_signed_unit(), rng.next_signed_unit())
}
