use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use vofdm_core::ComplexSample;

use crate::args::SampleFormat;

pub fn read_samples(path: &Path, format: SampleFormat) -> Result<Vec<ComplexSample>> {
    let samples = match format {
        SampleFormat::Text => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            parse_text(&text)?
        }
        SampleFormat::F64le => {
            let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
            parse_f64le(&bytes)?
        }
    };
    if samples.is_empty() {
        bail!("{} holds no samples", path.display());
    }
    Ok(samples)
}

pub fn parse_text(text: &str) -> Result<Vec<ComplexSample>> {
    let mut samples = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [re, im] = fields[..] else {
            bail!("line {}: expected `re<TAB>im`, got `{line}`", lineno + 1);
        };
        let parse = |s: &str| -> Result<f64> {
            let v: f64 = s
                .parse()
                .with_context(|| format!("line {}: `{s}` is not a number", lineno + 1))?;
            if !v.is_finite() {
                bail!("line {}: sample values must be finite, got `{s}`", lineno + 1);
            }
            Ok(v)
        };
        samples.push(ComplexSample::new(parse(re)?, parse(im)?));
    }
    Ok(samples)
}

pub fn parse_f64le(bytes: &[u8]) -> Result<Vec<ComplexSample>> {
    if bytes.len() % 16 != 0 {
        bail!("binary sample file length {} is not a multiple of 16 bytes", bytes.len());
    }
    bytes
        .chunks_exact(16)
        .enumerate()
        .map(|(i, chunk)| {
            let re = f64::from_le_bytes(chunk[..8].try_into().unwrap());
            let im = f64::from_le_bytes(chunk[8..].try_into().unwrap());
            if !re.is_finite() || !im.is_finite() {
                bail!("sample {i} is not finite");
            }
            Ok(ComplexSample::new(re, im))
        })
        .collect()
}

pub fn write_samples(path: &Path, samples: &[ComplexSample], format: SampleFormat) -> Result<()> {
    let mut out = Vec::with_capacity(samples.len() * 16);
    match format {
        SampleFormat::Text => {
            for s in samples {
                writeln!(out, "{}\t{}", s.re, s.im)?;
            }
        }
        SampleFormat::F64le => {
            for s in samples {
                out.extend_from_slice(&s.re.to_le_bytes());
                out.extend_from_slice(&s.im.to_le_bytes());
            }
        }
    }
    fs::write(path, out).with_context(|| format!("writing {}", path.display()))
}
