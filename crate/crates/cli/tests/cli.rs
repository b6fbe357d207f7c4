use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn vofdm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vofdm"))
        .args(args)
        .output()
        .expect("spawn vofdm")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write_real(path: &Path, values: &[f64]) {
    let text: String = values.iter().map(|v| format!("{v} 0\n")).collect();
    fs::write(path, text).unwrap();
}

fn read_pairs(path: &Path) -> Vec<(f64, f64)> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|line| {
            let mut it = line.split_whitespace().map(|t| t.parse::<f64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn pdft_two_blocks_hand_example() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let output = dir.path().join("out.txt");
    write_real(&input, &[1.0, 2.0, 3.0, 4.0]);
    let out = vofdm(&[
        "transform", "--algo", "pdft", "--l", "2", "--direction", "inverse", "--unnormalized",
        "--input", path_str(&input), "--output", path_str(&output),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let got = read_pairs(&output);
    for ((re, im), want) in got.iter().zip([4.0, 6.0, -2.0, -2.0]) {
        assert!((re - want).abs() < 1e-12 && im.abs() < 1e-12, "{got:?}");
    }
    assert!(stderr(&out).contains("complex_mults=8 complex_adds=8"));
}

#[test]
fn pdft_single_block_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let output = dir.path().join("out.txt");
    fs::write(&input, "1 -1\n0.5 2\n-3 0.25\n").unwrap();
    let out = vofdm(&[
        "transform", "--algo", "pdft", "--l", "1", "--direction", "forward",
        "--input", path_str(&input), "--output",
        path_str(&output),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(read_pairs(&output), vec![(1.0, -1.0), (0.5, 2.0), (-3.0, 0.25)]);
}

#[test]
fn fft_round_trip_binary_format() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.bin");
    let freq = dir.path().join("freq.bin");
    let back = dir.path().join("back.bin");
    let values: Vec<f64> = (0..16).map(|i| (i as f64 * 0.37).sin()).collect();
    let bytes: Vec<u8> = values.iter().flat_map(|v| v.to_le_bytes()).collect();
    fs::write(&input, &bytes).unwrap();
    for (dir_arg, src, dst) in [("forward", &input, &freq), ("inverse", &freq, &back)] {
        let out = vofdm(&[
            "transform", "--algo", "fft", "--direction", dir_arg, "--format", "f64le",
            "--input", path_str(src), "--output", path_str(dst),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let got = fs::read(&back).unwrap();
    assert_eq!(got.len(), bytes.len());
    for (chunk, want) in got.chunks_exact(8).zip(&values) {
        let v = f64::from_le_bytes(chunk.try_into().unwrap());
        assert!((v - want).abs() < 1e-12);
    }
}

#[test]
fn fft_rejects_non_power_of_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    write_real(&input, &[1.0; 12]);
    let out = vofdm(&[
        "transform", "--algo", "fft", "--direction", "forward", "--input", path_str(&input), "--output",
        path_str(&dir.path().join("out.txt")),
    ]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("N = 2^i"), "{}", stderr(&out));
}

#[test]
fn instr_count_fft_64() {
    let out = vofdm(&["instr-count", "--algo", "fft", "--n", "64"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert_eq!(row, "FFT,64,,192,384,1920");
}

#[test]
fn nyquist_lte_numerology() {
    let out = vofdm(&["nyquist", "--n", "2048", "--delta-f", "15000"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let fields: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let t_nyq: f64 = fields[3].parse().unwrap();
    let t_sym: f64 = fields[4].parse().unwrap();
    assert!((t_nyq - 1.0 / 30.72e6).abs() < 1e-20);
    assert!((t_sym - 1.0 / 15000.0).abs() < 1e-15);
}

#[test]
fn sc_curve_pdft_is_flat() {
    let out = vofdm(&["sc-curve", "--algo", "pdft", "--l", "4", "--n-min", "4", "--n-max", "4096"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let rates: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(rates.len(), 11);
    for r in &rates {
        assert!((r / rates[0] - 1.0).abs() < 1e-12);
    }
}

#[test]
fn bench_fft_rejects_odd_n() {
    let out = vofdm(&["bench", "--algo", "fft", "--n", "5"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("N = 2^i"));
}

#[test]
fn bench_writes_one_csv_row() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let out = vofdm(&[
        "bench", "--algo", "pdft-l2", "--n", "64", "--warmup", "5", "--max-reps", "200",
        "--output", path_str(&csv),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("n,algorithm,l_blocks,runtime_us"));
    assert!(lines[1].starts_with("64,PDFT_L2,2,"));
}

#[test]
fn config_file_supplies_flags_and_command_line_wins() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    fs::write(&cfg, "# instr-count defaults\nalgo = pdft\nn = 12\nl = 3\n").unwrap();
    let out = vofdm(&["--config", path_str(&cfg), "instr-count"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), "PDFT,12,3,36,36,36");

    let out = vofdm(&["--config", path_str(&cfg), "instr-count", "--l", "4"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), "PDFT,12,4,48,48,48");
}

#[test]
fn config_file_unknown_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "bogus = 1\n").unwrap();
    let out = vofdm(&["--config", path_str(&cfg), "instr-count", "--algo", "dft", "--n", "4"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("--bogus"));
}

#[test]
fn sweep_over_explicit_sizes() {
    let out = vofdm(&[
        "sweep", "--algo", "pdft", "--l", "3", "--n", "100,200", "--warmup", "5", "--max-reps",
        "200",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let ns: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ns, ["99", "198"]);
}

#[test]
fn sweep_preset_conflicts_with_algo() {
    let out = vofdm(&["sweep", "--preset", "table2", "--algo", "fft"]);
    assert!(!out.status.success());
}
