use std::path::Path;

use anyhow::{Context, Result};
use hopfchrom::limits::Limits;
use serde::Deserialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Settings read from an optional TOML file. Every field is optional;
/// command-line flags and environment variables take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub instance: Option<String>,
    #[serde(default)]
    pub caps: CapsConfig,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsConfig {
    pub vertex_cap: Option<usize>,
    pub group_order_cap: Option<usize>,
    pub degree_cap: Option<usize>,
    pub oracle_cap: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// The resolved configuration.
#[derive(Debug, Clone)]
pub struct Config {
    pub limits: Limits,
    pub format: Format,
    pub instance: String,
}

pub const DEFAULT_INSTANCE: &str = "young=subsets:2,H=Z2";

pub struct Overrides {
    pub format: Option<Format>,
    pub instance: Option<String>,
    pub vertex_cap: Option<usize>,
    pub group_order_cap: Option<usize>,
    pub degree_cap: Option<usize>,
    pub oracle_cap: Option<usize>,
}

impl Config {
    pub fn resolve(file: FileConfig, o: Overrides) -> Result<Config> {
        let d = Limits::default();
        let limits = Limits {
            vertex_cap: o.vertex_cap.or(file.caps.vertex_cap).unwrap_or(d.vertex_cap),
            group_order_cap: o.group_order_cap.or(file.caps.group_order_cap).unwrap_or(d.group_order_cap),
            degree_cap: o.degree_cap.or(file.caps.degree_cap).unwrap_or(d.degree_cap),
            oracle_cap: o.oracle_cap.or(file.caps.oracle_cap).unwrap_or(d.oracle_cap),
            sym_degree_cap: d.sym_degree_cap,
        };
        limits.validate()?;
        Ok(Config {
            limits,
            format: o.format.or(file.format).unwrap_or_default(),
            instance: o.instance.or(file.instance).unwrap_or_else(|| DEFAULT_INSTANCE.to_string()),
        })
    }
}
