//! Run configuration shared by the command line and the browser demo.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fdalg::{DEFAULT_DIM_CAP, DEFAULT_SPLITTING_CAP};
use crate::galois::Eq3Convention;
use crate::speclab::ScanOptions;

pub const SEED_ENV: &str = "HOPFGAL_SEED";

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Invalid(format!("unknown output format {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub eq3_convention: Eq3Convention,
    pub seed: u64,
    pub dim_cap: usize,
    pub output: OutputFormat,
    pub splitting_cap: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            eq3_convention: Eq3Convention::Paper,
            seed: 0,
            dim_cap: DEFAULT_DIM_CAP,
            output: OutputFormat::Json,
            splitting_cap: DEFAULT_SPLITTING_CAP,
        }
    }
}

impl Config {
    pub fn from_json(text: &str) -> Result<Config> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("config: {e}")))
    }

    /// Apply an override of the seed taken from the environment value, if any.
    pub fn with_seed_override(mut self, value: Option<&str>) -> Result<Config> {
        if let Some(v) = value {
            self.seed =
                v.trim().parse().map_err(|_| Error::Invalid(format!("{SEED_ENV}={v:?} is not an unsigned integer")))?;
        }
        Ok(self)
    }

    pub fn with_env(self) -> Result<Config> {
        let v = std::env::var(SEED_ENV).ok();
        self.with_seed_override(v.as_deref())
    }

    pub fn scan_options(&self) -> ScanOptions {
        ScanOptions { dim_cap: self.dim_cap, splitting_cap: self.splitting_cap, ..ScanOptions::default() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_overrides() {
        let c = Config::from_json("{}").unwrap();
        assert_eq!(c, Config::default());
        assert_eq!((c.seed, c.dim_cap, c.splitting_cap), (0, 512, 12));
        assert_eq!(c.eq3_convention, Eq3Convention::Paper);
        let c = Config::from_json(r#"{"eq3_convention": "standard", "output": "csv"}"#).unwrap();
        assert_eq!((c.eq3_convention, c.output), (Eq3Convention::Standard, OutputFormat::Csv));
        assert!(Config::from_json(r#"{"colour": 1}"#).is_err());
        let c = Config::default().with_seed_override(Some("42")).unwrap();
        assert_eq!(c.seed, 42);
        assert!(Config::default().with_seed_override(Some("x")).is_err());
    }
}
