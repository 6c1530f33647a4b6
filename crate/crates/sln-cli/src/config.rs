//! Parameter resolution: explicit flags take precedence over the optional
//! JSON config file, which takes precedence over built-in defaults.  The
//! output directory additionally falls back to the `SLN_OUT_DIR`
//! environment variable.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;

use crate::Failure;

/// Environment variable naming the default output directory.
pub const OUT_DIR_ENV: &str = "SLN_OUT_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Defaults loadable from a JSON config file.  Unknown keys are rejected so
/// typos fail loudly.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    n: Option<usize>,
    m: Option<usize>,
    d: Option<f64>,
    z: Option<f64>,
    t: Option<f64>,
    seed: Option<u64>,
    tol: Option<f64>,
    samples: Option<usize>,
    trials: Option<usize>,
    steps: Option<usize>,
    quick: Option<bool>,
    format: Option<String>,
    out: Option<PathBuf>,
}

/// Resolved global settings plus the config-file fallbacks for the
/// per-command flags.
pub struct Settings {
    file: FileConfig,
    out_flag: Option<PathBuf>,
    format_flag: Option<OutputFormat>,
    seed_flag: Option<u64>,
}

impl Settings {
    pub fn resolve(
        config: Option<&Path>,
        out: Option<PathBuf>,
        format: Option<OutputFormat>,
        seed: Option<u64>,
    ) -> Result<Settings, Failure> {
        let file = match config {
            None => FileConfig::default(),
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Failure::Usage(format!("cannot read config {}: {e}", path.display()))
                })?;
                serde_json::from_str(&text).map_err(|e| {
                    Failure::Usage(format!("bad config {}: {e}", path.display()))
                })?
            }
        };
        Ok(Settings {
            file,
            out_flag: out,
            format_flag: format,
            seed_flag: seed,
        })
    }

    pub fn seed(&self) -> u64 {
        self.seed_flag.or(self.file.seed).unwrap_or(2024)
    }

    pub fn format(&self) -> Result<OutputFormat, Failure> {
        if let Some(format) = self.format_flag {
            return Ok(format);
        }
        match self.file.format.as_deref() {
            None => Ok(OutputFormat::Text),
            Some(name) => OutputFormat::from_str(name, true).map_err(|_| {
                Failure::Usage(format!("unknown format {name:?} in config file"))
            }),
        }
    }

    /// Output directory, if any is configured: flag, then config file, then
    /// the environment.
    pub fn out_dir(&self) -> Option<PathBuf> {
        self.out_flag
            .clone()
            .or_else(|| self.file.out.clone())
            .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
    }

    pub fn n(&self, flag: Option<usize>, default: usize) -> usize {
        flag.or(self.file.n).unwrap_or(default)
    }

    pub fn m(&self, flag: Option<usize>, default: usize) -> usize {
        flag.or(self.file.m).unwrap_or(default)
    }

    pub fn d(&self, flag: Option<f64>, default: f64) -> f64 {
        flag.or(self.file.d).unwrap_or(default)
    }

    pub fn z(&self, flag: Option<f64>, default: f64) -> f64 {
        flag.or(self.file.z).unwrap_or(default)
    }

    pub fn t(&self, flag: Option<f64>, default: f64) -> f64 {
        flag.or(self.file.t).unwrap_or(default)
    }

    pub fn tol(&self, flag: Option<f64>, default: f64) -> f64 {
        flag.or(self.file.tol).unwrap_or(default)
    }

    pub fn steps(&self, flag: Option<usize>, default: usize) -> usize {
        flag.or(self.file.steps).unwrap_or(default)
    }

    pub fn samples(&self, flag: Option<usize>, default: usize) -> usize {
        flag.or(self.file.samples).unwrap_or(default)
    }

    pub fn samples_opt(&self, flag: Option<usize>) -> Option<usize> {
        flag.or(self.file.samples)
    }

    pub fn trials_opt(&self, flag: Option<usize>) -> Option<usize> {
        flag.or(self.file.trials)
    }

    pub fn quick(&self, flag: bool) -> bool {
        flag || self.file.quick.unwrap_or(false)
    }
}
