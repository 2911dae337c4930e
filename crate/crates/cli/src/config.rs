//! Run settings merged from built-in defaults, an optional `key=value` file
//! named by `WEYLCREST_CONFIG`, and command-line flags (highest priority).

use std::fmt;
use std::path::Path;

use crate::UsageError;

pub const CONFIG_ENV: &str = "WEYLCREST_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self, UsageError> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(UsageError(format!("unknown format {s:?}; expected json or text"))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "text",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    /// Root system label such as `A2`; the rank is part of the label.
    pub root_type: Option<String>,
    pub lambda: Option<String>,
    pub family: String,
    pub depth: usize,
    pub coeff: String,
    pub bound: usize,
    pub format: Format,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            root_type: None,
            lambda: None,
            family: "simple".into(),
            depth: 8,
            coeff: "int".into(),
            bound: weylcrest::faces::DEFAULT_BOUND,
            format: Format::Json,
        }
    }
}

impl CliConfig {
    /// Applies `key=value` lines. Blank lines and lines starting with `#`
    /// are skipped.
    pub fn apply_kv(&mut self, text: &str) -> Result<(), UsageError> {
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| UsageError(format!("config line {}: expected key=value", n + 1)))?;
            self.set(key.trim(), value.trim())
                .map_err(|e| UsageError(format!("config line {}: {}", n + 1, e.0)))?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), UsageError> {
        let number = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| UsageError(format!("{key} must be a nonnegative integer, got {v:?}")))
        };
        match key {
            "type" => self.root_type = Some(value.to_string()),
            "lambda" => self.lambda = Some(value.to_string()),
            "family" => self.family = value.to_string(),
            "depth" => self.depth = number(value)?,
            "coeff" => self.coeff = value.to_string(),
            "bound" => self.bound = number(value)?,
            "format" => self.format = Format::parse(value)?,
            _ => return Err(UsageError(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn load_file(&mut self, path: &Path) -> Result<(), UsageError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read config {}: {e}", path.display())))?;
        self.apply_kv(&text)
    }
}

/// Serializes as `key=value` lines accepted by [`CliConfig::apply_kv`].
impl fmt::Display for CliConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = &self.root_type {
            writeln!(f, "type={t}")?;
        }
        if let Some(l) = &self.lambda {
            writeln!(f, "lambda={l}")?;
        }
        writeln!(f, "family={}", self.family)?;
        writeln!(f, "depth={}", self.depth)?;
        writeln!(f, "coeff={}", self.coeff)?;
        writeln!(f, "bound={}", self.bound)?;
        writeln!(f, "format={}", self.format.name())
    }
}
