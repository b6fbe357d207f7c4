use proptest::collection::vec;
use proptest::prelude::*;
use vofdm_core::mapper::{demap_samples, map_bits};
use vofdm_core::sc_model::{nyquist_check, InstructionModel, NyquistSpec};
use vofdm_core::transform::{dft, FftPlan};
use vofdm_core::vofdm::{from_blocks, to_blocks, PdftPlan};
use vofdm_core::{
    Algorithm, ComplexSample, Constellation, Direction, Normalization, OpCounter, SymbolSpec,
};

fn sample() -> impl Strategy<Value = ComplexSample> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| ComplexSample::new(re, im))
}

/// (N, L, x) with L dividing N.
fn pdft_case() -> impl Strategy<Value = (usize, usize, Vec<ComplexSample>)> {
    (1usize..=8, 1usize..=24).prop_flat_map(|(l, m)| {
        let n = l * m;
        (Just(n), Just(l), vec(sample(), n))
    })
}

fn max_diff(a: &[ComplexSample], b: &[ComplexSample]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn energy(x: &[ComplexSample]) -> f64 {
    x.iter().map(|v| v.norm_sqr()).sum()
}

proptest! {
    #[test]
    fn pdft_is_linear(
        (n, l, x) in pdft_case(),
        seed in vec(sample(), 24 * 8),
        a in sample(),
        b in sample(),
    ) {
        let plan = PdftPlan::new(SymbolSpec::new(n, l).unwrap());
        let y = &seed[..n];
        let mut c = OpCounter::new();
        let mixed: Vec<_> = x.iter().zip(y).map(|(u, v)| a * u + b * v).collect();
        let lhs = plan.transform(&mixed, Direction::Forward, Normalization::Normalized, &mut c).unwrap();
        let tx = plan.transform(&x, Direction::Forward, Normalization::Normalized, &mut c).unwrap();
        let ty = plan.transform(y, Direction::Forward, Normalization::Normalized, &mut c).unwrap();
        let rhs: Vec<_> = tx.iter().zip(&ty).map(|(u, v)| a * u + b * v).collect();
        prop_assert!(max_diff(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn pdft_round_trip((n, l, x) in pdft_case()) {
        let plan = PdftPlan::new(SymbolSpec::new(n, l).unwrap());
        let mut c = OpCounter::new();
        let freq = plan.transform(&x, Direction::Forward, Normalization::Normalized, &mut c).unwrap();
        let back = plan.transform(&freq, Direction::Inverse, Normalization::Normalized, &mut c).unwrap();
        prop_assert!(max_diff(&x, &back) < 1e-12);
    }

    #[test]
    fn pdft_parseval((n, l, x) in pdft_case()) {
        let plan = PdftPlan::new(SymbolSpec::new(n, l).unwrap());
        let mut c = OpCounter::new();
        let freq = plan.transform(&x, Direction::Forward, Normalization::Unnormalized, &mut c).unwrap();
        let lhs = energy(&freq);
        let rhs = l as f64 * energy(&x);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn pdft_offset_order_does_not_matter(
        (n, l, x) in pdft_case(),
        keys in vec(any::<u32>(), 24),
    ) {
        let spec = SymbolSpec::new(n, l).unwrap();
        let plan = PdftPlan::new(spec);
        let mut order: Vec<usize> = (0..spec.block_len()).collect();
        order.sort_by_key(|&m| keys[m]);
        let mut c = OpCounter::new();
        let want = plan.transform(&x, Direction::Inverse, Normalization::Unnormalized, &mut c).unwrap();
        let mut got = vec![ComplexSample::new(0.0, 0.0); n];
        plan.process_in_offset_order(&x, &mut got, &order, Direction::Inverse, Normalization::Unnormalized, &mut c).unwrap();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn blocks_are_a_bijection((n, l, x) in pdft_case()) {
        let spec = SymbolSpec::new(n, l).unwrap();
        let blocks = to_blocks(&x, spec).unwrap();
        prop_assert_eq!(blocks.blocks().len(), l);
        for q in 0..l {
            prop_assert_eq!(blocks.block(q), &x[q * spec.block_len()..(q + 1) * spec.block_len()]);
        }
        prop_assert_eq!(from_blocks(&blocks), x);
    }

    #[test]
    fn fft_agrees_with_dft(log2n in 0u32..=9, data in vec(sample(), 512)) {
        let n = 1usize << log2n;
        let x = &data[..n];
        let mut c = OpCounter::new();
        let fast = FftPlan::new(n).unwrap().transform(x, Direction::Forward, Normalization::Normalized, &mut c).unwrap();
        let slow = dft(x, Direction::Forward, Normalization::Normalized, &mut c).unwrap();
        prop_assert!(max_diff(&fast, &slow) < 1e-11);
    }

    #[test]
    fn mapper_round_trip(c_idx in 0usize..5, raw in vec(any::<u8>(), 0..64)) {
        let c = Constellation::ALL[c_idx];
        let k = c.bits_per_point() as usize;
        let len = raw.len() / k * k;
        let bits: Vec<u8> = raw[..len].iter().map(|b| b & 1).collect();
        let points = map_bits(&bits, c).unwrap();
        prop_assert_eq!(demap_samples(&points, c), bits);
    }

    #[test]
    fn slower_instructions_never_turn_a_miss_into_a_meet(
        log2n in 1u32..=16,
        delta_f in 1e3f64..1e6,
        t1 in 1e-13f64..1e-9,
        factor in 1.0f64..100.0,
    ) {
        let n = 1usize << log2n;
        let spec = NyquistSpec::new(n, delta_f).unwrap();
        let model = InstructionModel::new(Algorithm::Fft, n, None).unwrap();
        let fast = nyquist_check(&spec, &model, t1).unwrap();
        let slow = nyquist_check(&spec, &model, t1 * factor).unwrap();
        prop_assert!(slow.cost_seconds >= fast.cost_seconds);
        prop_assert!(!slow.meets || fast.meets);
    }
}
