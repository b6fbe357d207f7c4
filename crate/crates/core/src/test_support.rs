//! Independent oracles and fixtures shared by unit tests.

use crate::bench::Mt19937_64;
use crate::transform::ComplexSample;

/// Double-loop DFT with a freshly evaluated kernel per term and compensated
/// summation. `sign` is -1 for forward, +1 for inverse (unnormalized).
pub fn brute_force_dft(x: &[ComplexSample], sign: f64) -> Vec<ComplexSample> {
    let n = x.len();
    (0..n)
        .map(|k| {
            let mut re = Neumaier::default();
            let mut im = Neumaier::default();
            for (t, v) in x.iter().enumerate() {
                let r = ((k as u128 * t as u128) % n as u128) as f64;
                let angle = sign * 2.0 * std::f64::consts::PI * r / n as f64;
                let (s, c) = angle.sin_cos();
                re.add(v.re * c);
                re.add(-v.im * s);
                im.add(v.re * s);
                im.add(v.im * c);
            }
            ComplexSample::new(re.total(), im.total())
        })
        .collect()
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

pub fn max_abs_diff(a: &[ComplexSample], b: &[ComplexSample]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Uniform samples in `[-1, 1)²`.
pub fn random_buffer(n: usize, seed: u64) -> Vec<ComplexSample> {
    let mut rng = Mt19937_64::new(seed);
    (0..n)
        .map(|_| ComplexSample::new(rng.next_signed_unit(), rng.next_signed_unit()))
        .collect()
}
