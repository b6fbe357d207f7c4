//! `--config` file support: `key = value` lines spliced in as flags right
//! after the subcommand, ahead of the user's own flags so those win.

use std::ffi::OsString;
use std::fs;

use anyhow::{bail, Context, Result};

const SWITCHES: &[&str] = &["unnormalized", "parallel"];

pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected `key = value`, got `{}`", lineno + 1, raw.trim());
        };
        let key = key.trim();
        if key.is_empty() || key == "config" {
            bail!("config line {}: invalid key `{key}`", lineno + 1);
        }
        entries.push((key.to_string(), value.trim().to_string()));
    }
    Ok(entries)
}

fn entries_to_flags(entries: &[(String, String)]) -> Result<Vec<OsString>> {
    let mut flags = Vec::new();
    for (key, value) in entries {
        if SWITCHES.contains(&key.as_str()) {
            match value.as_str() {
                "true" => flags.push(format!("--{key}").into()),
                "false" => {}
                other => bail!("config key `{key}` takes true or false, got `{other}`"),
            }
        } else {
            flags.push(format!("--{key}").into());
            flags.push(value.into());
        }
    }
    Ok(flags)
}

/// Removes `--config PATH` from `args` and splices the file's flags in.
pub fn expand_args(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut rest = Vec::with_capacity(args.len());
    let mut config_path = None;
    let mut iter = args.into_iter();
    while let Some(arg) = iter.next() {
        let text = arg.to_string_lossy();
        if text == "--config" {
            config_path = Some(iter.next().context("--config needs a path")?);
        } else if let Some(path) = text.strip_prefix("--config=") {
            config_path = Some(path.into());
        } else {
            rest.push(arg);
        }
    }
    let Some(path) = config_path else {
        return Ok(rest);
    };
    let text = fs::read_to_string(&path)
        .with_context(|| format!("reading config file {}", path.to_string_lossy()))?;
    let flags = entries_to_flags(&parse_config(&text)?)?;

    // program name, then the subcommand
    let Some(sub) = rest.iter().skip(1).position(|a| !a.to_string_lossy().starts_with('-')) else {
        return Ok(rest);
    };
    let at = sub + 2;
    let tail = rest.split_off(at);
    rest.extend(flags);
    rest.extend(tail);
    Ok(rest)
}
